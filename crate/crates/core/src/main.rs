fn main() {
    std::process::exit(finkquad::cli::run(std::env::args_os()));
}
