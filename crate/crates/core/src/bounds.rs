//! Closed-form error bounds, the Chebyshev functional and its Grüss-type
//! bounds, each paired with an oracle measurement of the quantity it bounds.
//!
//! All bounds refer to the mean-value form of the error, `|E| / (b - a)`,
//! or to the Chebyshev-functional value they were derived for. The node
//! bounds refer to `|E|` itself. `0^0 = 1` throughout.

use std::f64::consts::PI;
use std::fmt;

use crate::appell::HarmonicSeq;
use crate::error::{Error, Result};
use crate::funcmodel::SmoothFn;
use crate::kernels::{self, KernelVariant};
use crate::oracle::{self, ACCEPT_SLACK, DEFAULT_TOL};
use crate::rational::{factorial, int, rat, to_f64, Rational, RationalPoly};
use crate::rules::{self, NodePreset, RuleSpec, RuleVariant};

const CONVENTION_NOTE: &str = "0^0 = 1";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundMode {
    /// Failure is an error of the implementation.
    Assert,
    /// Measured and reported only.
    Audit,
}

impl BoundMode {
    pub fn as_str(self) -> &'static str {
        match self {
            BoundMode::Assert => "ASSERT",
            BoundMode::Audit => "AUDIT",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundStatus {
    Holds,
    Violated,
    /// The bound's extra hypothesis is false for this input; values are
    /// still reported.
    HypothesisUnmet,
}

impl BoundStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            BoundStatus::Holds => "holds",
            BoundStatus::Violated => "violated",
            BoundStatus::HypothesisUnmet => "hypothesis_unmet",
        }
    }
}

impl fmt::Display for BoundStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub bound_name: String,
    pub bound_value: f64,
    pub residual_abs: f64,
    pub holds: bool,
    pub slack: f64,
    pub mode: BoundMode,
    pub status: BoundStatus,
    /// Closed-form mean minus oracle mean of the kernel-side factor, for
    /// bounds built on a Chebyshev functional.
    pub mean_diff: Option<f64>,
    pub notes: Vec<String>,
}

impl BoundReport {
    pub fn new(name: impl Into<String>, bound_value: f64, residual_abs: f64, mode: BoundMode) -> Self {
        let holds = residual_abs <= bound_value + ACCEPT_SLACK;
        BoundReport {
            bound_name: name.into(),
            bound_value,
            residual_abs,
            holds,
            slack: bound_value - residual_abs,
            mode,
            status: if holds { BoundStatus::Holds } else { BoundStatus::Violated },
            mean_diff: None,
            notes: vec![CONVENTION_NOTE.to_string()],
        }
    }

    fn with_mean_diff(mut self, diff: f64) -> Self {
        self.mean_diff = Some(diff);
        self
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    fn hypothesis_unmet(mut self, why: &str) -> Self {
        self.status = BoundStatus::HypothesisUnmet;
        self.notes.push(format!("hypothesis unmet: {why}"));
        self
    }

    /// An ASSERT bound that does not hold.
    pub fn is_assert_failure(&self) -> bool {
        self.mode == BoundMode::Assert && !self.holds
    }
}

/// `L_1`, `L_2` and `L_∞` norms of one function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LpNorms {
    pub l1: f64,
    pub l2: f64,
    pub linf: f64,
}

impl LpNorms {
    pub fn get(&self, p: f64) -> Option<f64> {
        if p == 1.0 {
            Some(self.l1)
        } else if p == 2.0 {
            Some(self.l2)
        } else if p.is_infinite() && p > 0.0 {
            Some(self.linf)
        } else {
            None
        }
    }

    fn compute(g: &dyn Fn(f64) -> f64, a: f64, b: f64) -> Result<LpNorms> {
        Ok(LpNorms {
            l1: oracle::lp_norm(g, 1.0, a, b, &[], DEFAULT_TOL)?,
            l2: oracle::lp_norm(g, 2.0, a, b, &[], DEFAULT_TOL)?,
            linf: oracle::lp_norm(g, f64::INFINITY, a, b, &[], DEFAULT_TOL)?,
        })
    }

    fn check(&self) -> bool {
        [self.l1, self.l2, self.linf].iter().all(|v| v.is_finite() && *v >= 0.0)
    }
}

/// Derivative statistics of `f` used by every bound of order `n`.
#[derive(Debug, Clone, PartialEq)]
pub struct FnStats {
    pub n: usize,
    /// Norms of `f^(n)`.
    pub lp_norms: LpNorms,
    /// Norms of `f^(n+1)`.
    pub lp_norms_next: LpNorms,
    /// `(m, M)` with `m <= f^(n) <= M` on `[a, b]`.
    pub range_n: (f64, f64),
    /// Whether `f^(n-1)(a) = f^(n-1)(b)`.
    pub endpoint_flag: bool,
    pub tol: f64,
}

impl FnStats {
    pub fn compute(f: &SmoothFn, n: usize, a: f64, b: f64) -> Result<FnStats> {
        if n == 0 {
            return Err(Error::Domain("stats need n >= 1".into()));
        }
        f.check_interval(a, b)?;
        f.derivative(a, n + 1)?;
        let dn = |t: f64| f.derivative(t, n).unwrap_or(f64::NAN);
        let dn1 = |t: f64| f.derivative(t, n + 1).unwrap_or(f64::NAN);
        let endpoint_flag = match f.as_poly() {
            Some(p) => {
                let d = p.derive_n(n - 1);
                let (ra, rb) = (crate::rational::from_f64(a)?, crate::rational::from_f64(b)?);
                d.eval(&ra) == d.eval(&rb)
            }
            None => {
                let (fa, fb) = (f.derivative(a, n - 1)?, f.derivative(b, n - 1)?);
                (fa - fb).abs() <= 1e-12 * (1.0 + fa.abs().max(fb.abs()))
            }
        };
        let stats = FnStats {
            n,
            lp_norms: LpNorms::compute(&dn, a, b)?,
            lp_norms_next: LpNorms::compute(&dn1, a, b)?,
            range_n: (oracle::inf_on_interval(dn, a, b, &[]), oracle::sup_on_interval(dn, a, b, &[])),
            endpoint_flag,
            tol: DEFAULT_TOL,
        };
        stats.validate()?;
        Ok(stats)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.range_n.0 <= self.range_n.1) {
            return Err(Error::InconsistentStats(format!("range ({}, {}) has m > M", self.range_n.0, self.range_n.1)));
        }
        if !self.lp_norms.check() || !self.lp_norms_next.check() {
            return Err(Error::InconsistentStats("norms must be finite and non-negative".into()));
        }
        Ok(())
    }

    fn range_width(&self) -> f64 {
        self.range_n.1 - self.range_n.0
    }
}

/// Euler Beta function.
pub fn beta_fn(u: f64, v: f64) -> Result<f64> {
    if !(u > 0.0 && v > 0.0) || !u.is_finite() || !v.is_finite() {
        return Err(Error::Domain(format!("Beta needs positive arguments, got ({u}, {v})")));
    }
    let is_small_int = |z: f64| z.fract() == 0.0 && z <= 170.0;
    if is_small_int(u) && is_small_int(v) {
        let (i, j) = (u as usize, v as usize);
        return Ok(to_f64(&(factorial(i - 1) * factorial(j - 1) / factorial(i + j - 1))));
    }
    Ok((libm::lgamma(u) + libm::lgamma(v) - libm::lgamma(u + v)).exp())
}

/// Hölder conjugate: `1 ↦ ∞`, `∞ ↦ 1`.
pub fn conjugate(p: f64) -> f64 {
    if p == 1.0 {
        f64::INFINITY
    } else if p.is_infinite() {
        1.0
    } else {
        p / (p - 1.0)
    }
}

fn check_p(p: f64) -> Result<()> {
    if !(p >= 1.0) {
        return Err(Error::Domain(format!("norm exponent must be in [1, ∞], got {p}")));
    }
    Ok(())
}

/// `(b-a)/4 + |x - (3a+b)/4|`, the larger of `x - a` and `(a+b)/2 - x`.
fn half_width(x: f64, a: f64, b: f64) -> f64 {
    (b - a) / 4.0 + (x - (3.0 * a + b) / 4.0).abs()
}

fn fact(n: usize) -> f64 {
    to_f64(&factorial(n))
}

/// Constant multiplying `‖f^(n)‖_p` in the bound on the mean-form error of
/// the two-point rule.
pub fn bound_lp(n: usize, p: f64, x: f64, a: f64, b: f64) -> Result<f64> {
    if n == 0 {
        return Err(Error::Domain("n must be at least 1".into()));
    }
    check_p(p)?;
    kernels::check_node(&x, &a, &b)?;
    let nf = n as f64;
    if p == 1.0 {
        let shape = ((nf - 1.0) / nf).powi(n as i32 - 1);
        return Ok(shape * half_width(x, a, b).powi(n as i32) / (nf * fact(n) * (b - a)));
    }
    let q = conjugate(p);
    let m = 0.5 * (a + b);
    let e = nf * q + 1.0;
    let bracket = (x - a).powf(e) + (m - x).powf(e);
    let beta = beta_fn((nf - 1.0) * q + 1.0, q + 1.0)?;
    Ok(2f64.powf(1.0 / q) / (fact(n) * (b - a)) * (bracket * beta).powf(1.0 / q))
}

fn check_seq_poly(seq: &HarmonicSeq, k: usize) -> Result<RationalPoly> {
    let p = seq.get(k)?.clone();
    if p.is_zero() {
        return Err(Error::Degenerate(format!("P_{k} vanishes identically")));
    }
    Ok(p)
}

/// Constant `N` multiplying `‖f^(n)‖_p` for the harmonic-sequence rule.
pub fn bound_lp_seq(n: usize, x: f64, a: f64, b: f64, seq: &HarmonicSeq, p: f64) -> Result<f64> {
    if n == 0 {
        return Err(Error::Domain("n must be at least 1".into()));
    }
    check_p(p)?;
    kernels::check_node(&x, &a, &b)?;
    let poly = check_seq_poly(seq, n - 1)?;
    let g = |t: f64| poly.eval_f64(t) * kernels::eval_s(&t, &x, &a, &b).unwrap_or(f64::NAN);
    let norm = oracle::lp_norm(g, conjugate(p), a, b, &kernels::breakpoints(x, a, b), DEFAULT_TOL)?;
    Ok(norm / (n as f64 * (b - a)))
}

/// Relaxed form of [`bound_lp_seq`] that splits off `sup |S|`; `q` is the
/// exponent of the norm taken of `P_{n-1}`.
pub fn bound_lp_seq_sup(n: usize, q: f64, x: f64, a: f64, b: f64, seq: &HarmonicSeq) -> Result<f64> {
    if n == 0 {
        return Err(Error::Domain("n must be at least 1".into()));
    }
    check_p(q)?;
    kernels::check_node(&x, &a, &b)?;
    check_seq_poly(seq, n - 1)?;
    let shape = 0.25 + (x - (3.0 * a + b) / 4.0).abs() / (b - a);
    Ok(shape * seq.seq_norm(n - 1, q, a, b)? / n as f64)
}

/// `(1/(d-c))∫h1 h2 - (1/(d-c))∫h1 · (1/(d-c))∫h2` by the oracle.
pub fn chebyshev_functional<F, G>(h1: F, h2: G, c: f64, d: f64, breaks: &[f64]) -> Result<f64>
where
    F: Fn(f64) -> f64,
    G: Fn(f64) -> f64,
{
    let w = d - c;
    let int = |g: &dyn Fn(f64) -> f64| oracle::integrate_with_breaks(g, c, d, breaks, 1e-13).map(|r| r.value);
    let both = int(&|t| h1(t) * h2(t))?;
    Ok(both / w - int(&h1)? / w * (int(&h2)? / w))
}

/// Exact Chebyshev functional of two polynomials on `[c, d]`.
pub fn chebyshev_functional_exact(h1: &RationalPoly, h2: &RationalPoly, c: &Rational, d: &Rational) -> Rational {
    let w = d - c;
    (h1 * h2).integrate(c, d) / &w - h1.integrate(c, d) / &w * (h2.integrate(c, d) / &w)
}

/// Exact Chebyshev functional of a polynomial against a piecewise
/// polynomial covering `[c, d]`.
pub fn chebyshev_functional_piecewise(
    h: &RationalPoly,
    pw: &kernels::PiecewisePoly,
    c: &Rational,
    d: &Rational,
) -> Rational {
    let w = d - c;
    pw.integrate_against(h) / &w - h.integrate(c, d) / &w * (pw.integral() / &w)
}

/// Inputs of the Grüss-type bound suite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GrussStats {
    /// `‖h1'‖_∞`, `‖h2'‖_∞`.
    pub d1_inf: f64,
    pub d2_inf: f64,
    /// `(m1, M1)`, `(m2, M2)`.
    pub range1: (f64, f64),
    pub range2: (f64, f64),
    /// `‖h1'‖_2`, `‖h2'‖_2`.
    pub d1_l2: f64,
    pub d2_l2: f64,
}

/// The four classical bounds on `|C(h1, h2)|`, in order: Chebyshev,
/// Grüss, Lupaş, Ostrowski.
pub fn gruss_bound_suite(stats: &GrussStats, c: f64, d: f64) -> Result<[f64; 4]> {
    if !(c < d) {
        return Err(Error::Domain(format!("interval needs c < d, got [{c}, {d}]")));
    }
    let (m1, big1) = stats.range1;
    let (m2, big2) = stats.range2;
    if !(m1 <= big1) || !(m2 <= big2) {
        return Err(Error::InconsistentStats("ranges must satisfy m <= M".into()));
    }
    let norms = [stats.d1_inf, stats.d2_inf, stats.d1_l2, stats.d2_l2];
    if norms.iter().any(|v| !(*v >= 0.0)) {
        return Err(Error::InconsistentStats("derivative norms must be non-negative".into()));
    }
    let w = d - c;
    Ok([
        w * w / 12.0 * stats.d1_inf * stats.d2_inf,
        0.25 * (big1 - m1) * (big2 - m2),
        w / (PI * PI) * stats.d1_l2 * stats.d2_l2,
        0.125 * w * (big1 - m1) * stats.d2_inf,
    ])
}

/// Which Chebyshev functional of the rule remainders to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Functional {
    /// `h1 = f^(n)/n!`, `h2 = K_n`.
    P,
    /// `h1 = f^(n) S / n!`, `h2 = (x-t)^{n-1}`.
    Q,
    /// `h1 = (-1)^{n-1} f^(n) / n`, `h2 = P_{n-1} S`.
    L,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FunctionalValue {
    pub value: f64,
    /// Exact value for polynomial `f`.
    pub exact: Option<Rational>,
    /// Oracle mean of the factor whose mean the closed form replaces.
    pub oracle_mean: f64,
    /// That mean as given by the closed-form expression.
    pub closed_form_mean: f64,
}

impl FunctionalValue {
    pub fn mean_diff(&self) -> f64 {
        self.closed_form_mean - self.oracle_mean
    }
}

/// Chebyshev functional `C(h1, h2)` with the pairing of `which`; means by
/// the oracle, or exactly for polynomial `f`.
pub fn functional_pql(
    which: Functional,
    f: &SmoothFn,
    n: usize,
    x: &Rational,
    a: &Rational,
    b: &Rational,
    seq: Option<&HarmonicSeq>,
    kernel: KernelVariant,
) -> Result<FunctionalValue> {
    if n == 0 {
        return Err(Error::Domain("n must be at least 1".into()));
    }
    kernels::check_node(x, a, b)?;
    let (af, bf, xf) = (to_f64(a), to_f64(b), to_f64(x));
    let w = bf - af;
    let mf = 0.5 * (af + bf);
    let mirror = af + bf - xf;
    let nfact = fact(n);
    let seq = match which {
        Functional::L => {
            let s = seq.ok_or_else(|| Error::InvalidSequence("the L functional needs a sequence".into()))?;
            if !s.validate() {
                return Err(Error::InvalidSequence(format!("not harmonic: {s}")));
            }
            let order = s.order().unwrap_or(0);
            Some(if order < n + 1 { s.extend(n + 1, a, b)? } else { s.clone() })
        }
        _ => None,
    };
    // closed-form mean of the kernel-side factor
    let closed_form_mean = match which {
        Functional::P => {
            let e = n as i32 + 1;
            2.0 * ((xf - af).powi(e) + (mf - xf).powi(e)) * beta_fn(n as f64, 2.0)? / w
        }
        Functional::Q => (f.derivative(xf, n)? + f.derivative(mirror, n)?) / (2.0 * nfact),
        Functional::L => {
            let s = seq.as_ref().expect("sequence present");
            let pn = s.get(n)?;
            let pn1 = s.get(n + 1)?;
            0.5 * (pn.eval_f64(xf) + pn.eval_f64(mirror)) - (pn1.eval_f64(bf) - pn1.eval_f64(af)) / w
        }
    };

    if let Some(p) = f.as_poly() {
        let dn = p.derive_n(n);
        let (value, mean) = match which {
            Functional::P => {
                let pw = kernels::k_pieces(n, x, a, b, kernel)?;
                let h1 = dn.scale(&(int(1) / factorial(n)));
                (chebyshev_functional_piecewise(&h1, &pw, a, b), pw.integral() / (b - a))
            }
            Functional::Q => {
                let pw = kernels::s_pieces(x, a, b)?.times(&dn.scale(&(int(1) / factorial(n))));
                let h2 = (-&RationalPoly::linear_root(x)).pow(n - 1);
                (chebyshev_functional_piecewise(&h2, &pw, a, b), pw.integral() / (b - a))
            }
            Functional::L => {
                let s = seq.as_ref().expect("sequence present");
                let pw = kernels::s_pieces(x, a, b)?.times(s.get(n - 1)?);
                let sign = if (n - 1) % 2 == 0 { int(1) } else { int(-1) };
                let h1 = dn.scale(&(sign / int(n as i64)));
                (chebyshev_functional_piecewise(&h1, &pw, a, b), pw.integral() / (b - a))
            }
        };
        return Ok(FunctionalValue {
            value: to_f64(&value),
            exact: Some(value),
            oracle_mean: to_f64(&mean),
            closed_form_mean,
        });
    }

    f.check_interval(af, bf)?;
    f.derivative(af, n)?;
    let breaks = kernels::breakpoints(xf, af, bf);
    let dn = |t: f64| f.derivative(t, n).unwrap_or(f64::NAN);
    let s = |t: f64| kernels::eval_s(&t, &xf, &af, &bf).unwrap_or(f64::NAN);
    let mean = |g: &dyn Fn(f64) -> f64| -> Result<f64> {
        Ok(oracle::integrate_with_breaks(g, af, bf, &breaks, 1e-13)?.value / w)
    };
    let (value, oracle_mean) = match which {
        Functional::P => {
            let k = |t: f64| kernels::eval_k(n, &t, &xf, &af, &bf, kernel).unwrap_or(f64::NAN);
            (chebyshev_functional(|t| dn(t) / nfact, k, af, bf, &breaks)?, mean(&k)?)
        }
        Functional::Q => {
            let h1 = |t: f64| dn(t) * s(t) / nfact;
            let h2 = |t: f64| (xf - t).powi(n as i32 - 1);
            (chebyshev_functional(h1, h2, af, bf, &breaks)?, mean(&h1)?)
        }
        Functional::L => {
            let poly = seq.as_ref().expect("sequence present").get(n - 1)?.clone();
            let sign = if (n - 1) % 2 == 0 { 1.0 } else { -1.0 };
            let h2 = |t: f64| poly.eval_f64(t) * s(t);
            (chebyshev_functional(|t| sign * dn(t) / n as f64, h2, af, bf, &breaks)?, mean(&h2)?)
        }
    };
    Ok(FunctionalValue { value, exact: None, oracle_mean, closed_form_mean })
}

/// `A(n) = 2(n-1)^2 / ((2n-1)(2n-2)(2n-3))`, `n >= 2`.
pub fn const_a(n: usize) -> Result<Rational> {
    let (n, d) = a_b_denominator(n)?;
    Ok(int(2 * (n - 1) * (n - 1)) / d)
}

/// `B(n) = (2^{2n-3}(2n-1)(2n-2) + 4n(2n-1) + 2n^2) / ((2n-1)(2n-2)(2n-3))`.
pub fn const_b(n: usize) -> Result<Rational> {
    let (n, d) = a_b_denominator(n)?;
    let pow = num_traits::pow(int(2), (2 * n - 3) as usize);
    Ok((pow * int((2 * n - 1) * (2 * n - 2)) + int(4 * n * (2 * n - 1) + 2 * n * n)) / d)
}

fn a_b_denominator(n: usize) -> Result<(i64, Rational)> {
    if n < 2 {
        return Err(Error::Domain(format!("A(n), B(n) need n >= 2, got {n}")));
    }
    let n = n as i64;
    Ok((n, int((2 * n - 1) * (2 * n - 2) * (2 * n - 3))))
}

fn check_case(case: usize) -> Result<()> {
    if !(1..=5).contains(&case) {
        return Err(Error::Domain(format!("bound case must be 1..=5, got {case}")));
    }
    Ok(())
}

/// Shared factors of the five-case bounds on the `P` functional.
struct PFactors {
    shape: f64,
    g: f64,
    nf2: f64,
    dyadic: f64,
}

impl PFactors {
    fn new(n: usize) -> PFactors {
        let nf = n as f64;
        PFactors {
            shape: ((nf - 2.0) / nf).powi(n as i32 - 2),
            g: nf * nf - 2.0 * nf + 2.0,
            nf2: fact(n) * fact(n),
            dyadic: 2f64.powi(-(n as i32) - 2) - 2f64.powi(-2 * n as i32 - 2),
        }
    }
}

/// Value of case `case` of the bound on `|P(f; x, n)|`.
pub fn bound_gruss_value(case: usize, n: usize, x: f64, a: f64, b: f64, stats: &FnStats) -> Result<f64> {
    check_case(case)?;
    kernels::check_node(&x, &a, &b)?;
    let c = PFactors::new(n);
    let (an, bn) = (to_f64(&const_a(n)?), to_f64(&const_b(n)?));
    let (l, nf) = (b - a, n as f64);
    let hw = half_width(x, a, b).powi(n as i32 - 1);
    let m = 0.5 * (a + b);
    Ok(match case {
        1 => l * l * c.shape * c.g / (12.0 * nf * c.nf2) * hw * stats.lp_norms_next.linf,
        2 => c.shape * c.g / (4.0 * nf * c.nf2) * c.dyadic * l.powi(n as i32 - 2) * stats.range_width(),
        3 => {
            let e = 2 * n as i32 - 1;
            l / (c.nf2 * PI * PI) * (an * (x - a).powi(e) + bn * (m - x).powi(e)).sqrt() * stats.lp_norms_next.l2
        }
        4 => l * c.shape * c.g / (8.0 * nf * c.nf2) * hw * stats.range_width(),
        _ => c.shape * c.g / (8.0 * nf * c.nf2) * c.dyadic * l.powi(n as i32) * stats.lp_norms_next.linf,
    })
}

/// Case `case` of the `P`-functional bound against the measured
/// functional value.
pub fn bound_gruss(case: usize, n: usize, x: f64, a: f64, b: f64, stats: &FnStats, p_value: &FunctionalValue) -> Result<BoundReport> {
    let bound = bound_gruss_value(case, n, x, a, b, stats)?;
    Ok(BoundReport::new(format!("gruss.case{case}"), bound, p_value.value.abs(), BoundMode::Audit)
        .with_mean_diff(p_value.mean_diff()))
}

/// Sequence-dependent quantities of the `L`-functional bounds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeqStats {
    /// `sup |P_{n-1} + P_{n-2} S|`.
    pub sup_mixed: f64,
    /// `D(n, x) = ‖P_{n-1} + P_{n-2} S‖_2`.
    pub d: f64,
    /// `(m2, M2)`, the range of `P_{n-1} S`.
    pub range2: (f64, f64),
}

impl SeqStats {
    pub fn compute(seq: &HarmonicSeq, n: usize, x: f64, a: f64, b: f64) -> Result<SeqStats> {
        if n < 2 {
            return Err(Error::Domain(format!("sequence statistics need n >= 2, got {n}")));
        }
        kernels::check_node(&x, &a, &b)?;
        let p1 = seq.get(n - 1)?.clone();
        let p2 = seq.get(n - 2)?.clone();
        let s = |t: f64| kernels::eval_s(&t, &x, &a, &b).unwrap_or(f64::NAN);
        let breaks = kernels::breakpoints(x, a, b);
        let mixed = |t: f64| p1.eval_f64(t) + p2.eval_f64(t) * s(t);
        let h2 = |t: f64| p1.eval_f64(t) * s(t);
        Ok(SeqStats {
            sup_mixed: oracle::lp_norm(mixed, f64::INFINITY, a, b, &breaks, DEFAULT_TOL)?,
            d: oracle::lp_norm(mixed, 2.0, a, b, &breaks, DEFAULT_TOL)?,
            range2: (oracle::inf_on_interval(h2, a, b, &breaks), oracle::sup_on_interval(h2, a, b, &breaks)),
        })
    }
}

/// How `(m1, M1)` is read in the `L`-functional bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RangeReading {
    /// Range of `f^(n)`.
    Derivative,
    /// Range of `h1 = (-1)^{n-1} f^(n) / n`, i.e. the derivative range
    /// divided by `n`.
    H1,
}

impl RangeReading {
    fn width(self, stats: &FnStats) -> f64 {
        match self {
            RangeReading::Derivative => stats.range_width(),
            RangeReading::H1 => stats.range_width() / stats.n as f64,
        }
    }

    fn tag(self) -> &'static str {
        match self {
            RangeReading::Derivative => "f^(n)",
            RangeReading::H1 => "h1",
        }
    }
}

/// Value of case `case` of the bound on `|L(f, P_n, x)|`.
pub fn bound_gruss_seq_value(
    case: usize,
    n: usize,
    a: f64,
    b: f64,
    stats: &FnStats,
    seq_stats: &SeqStats,
    reading: RangeReading,
) -> Result<f64> {
    check_case(case)?;
    if n < 2 {
        return Err(Error::Domain(format!("n must be at least 2, got {n}")));
    }
    let (l, nf) = (b - a, n as f64);
    let w1 = reading.width(stats);
    let w2 = seq_stats.range2.1 - seq_stats.range2.0;
    Ok(match case {
        1 => l * l / (12.0 * nf) * seq_stats.sup_mixed * stats.lp_norms_next.linf,
        2 => w1 * w2 / (4.0 * nf),
        3 => l / (PI * PI * nf) * seq_stats.d * stats.lp_norms_next.l2,
        4 => l / (8.0 * nf) * seq_stats.sup_mixed * w1,
        _ => l / (8.0 * nf) * w2 * stats.lp_norms_next.linf,
    })
}

#[allow(clippy::too_many_arguments)]
pub fn bound_gruss_seq(
    case: usize,
    n: usize,
    a: f64,
    b: f64,
    stats: &FnStats,
    seq_stats: &SeqStats,
    reading: RangeReading,
    l_value: &FunctionalValue,
) -> Result<BoundReport> {
    let bound = bound_gruss_seq_value(case, n, a, b, stats, seq_stats, reading)?;
    let mut r = BoundReport::new(format!("gruss_seq.case{case}"), bound, l_value.value.abs(), BoundMode::Audit)
        .with_mean_diff(l_value.mean_diff());
    if matches!(case, 2 | 4) {
        r.bound_name = format!("gruss_seq.case{case}[{}]", reading.tag());
    }
    Ok(r)
}

/// Node of the direct error bounds.
#[derive(Debug, Clone, PartialEq)]
pub enum BoundNode {
    Preset(NodePreset),
    /// Harmonic-sequence rule at an arbitrary admissible node.
    General(Rational),
}

/// Value of case `case` of the bound on `|E_n|` at a preset node.
pub fn bound_node_preset_value(case: usize, preset: NodePreset, n: usize, a: f64, b: f64, stats: &FnStats) -> Result<f64> {
    check_case(case)?;
    let c = PFactors::new(n);
    let (an, bn) = (to_f64(&const_a(n)?), to_f64(&const_b(n)?));
    let (l, nf, ni) = (b - a, n as f64, n as i32);
    // 2 for the outer nodes, 4 for the quarter node
    let base: f64 = if preset == NodePreset::Quarter { 4.0 } else { 2.0 };
    let scale = base.powi(-(ni - 1));
    let width = stats.range_width();
    Ok(match case {
        1 => scale * c.shape * c.g / (12.0 * nf * c.nf2) * l.powi(ni + 2) * stats.lp_norms_next.linf,
        2 => c.shape * c.g / (4.0 * nf * c.nf2) * c.dyadic * l.powi(ni - 1) * width,
        3 => {
            let ab = match preset {
                NodePreset::Left => bn,
                NodePreset::Quarter => an + bn,
                NodePreset::Midpoint => an,
            };
            l.powf(nf + 1.5) / (base.powf(nf - 0.5) * c.nf2 * PI * PI) * ab.sqrt() * stats.lp_norms_next.l2
        }
        4 => scale * c.shape * c.g / (8.0 * nf * c.nf2) * l.powi(ni + 1) * width,
        _ => c.shape * c.g / (8.0 * nf * c.nf2) * c.dyadic * l.powi(ni + 1) * stats.lp_norms_next.linf,
    })
}

/// Value of case `case` of the bound on `|E_n(f, P_n, x)|`.
pub fn bound_node_general_value(case: usize, n: usize, a: f64, b: f64, stats: &FnStats, seq_stats: &SeqStats) -> Result<f64> {
    check_case(case)?;
    let (l, nf) = (b - a, n as f64);
    let w1 = stats.range_width();
    let w2 = seq_stats.range2.1 - seq_stats.range2.0;
    Ok(match case {
        1 => l.powi(3) / (12.0 * nf) * seq_stats.sup_mixed * stats.lp_norms_next.linf,
        2 => l / (4.0 * nf) * w1 * w2,
        3 => l * l / (PI * PI * nf) * seq_stats.d * stats.lp_norms_next.l2,
        4 => l * l / (8.0 * nf) * seq_stats.sup_mixed * w1,
        _ => l * l / (8.0 * nf) * w2 * stats.lp_norms_next.linf,
    })
}

fn node_tag(node: &BoundNode) -> &'static str {
    match node {
        BoundNode::Preset(NodePreset::Left) => "node_left",
        BoundNode::Preset(NodePreset::Quarter) => "node_quarter",
        BoundNode::Preset(NodePreset::Midpoint) => "node_midpoint",
        BoundNode::General(_) => "node_general",
    }
}

/// All five node bounds for `node`, each against the measured `|E_n|`.
/// Errors with `HypothesisUnmet` unless `f^(n-1)(a) = f^(n-1)(b)`.
pub fn bounds_node(
    node: &BoundNode,
    f: &SmoothFn,
    n: usize,
    a: &Rational,
    b: &Rational,
    stats: &FnStats,
    seq: Option<&HarmonicSeq>,
) -> Result<Vec<BoundReport>> {
    if !stats.endpoint_flag {
        return Err(Error::HypothesisUnmet(format!("f^({}) differs at the endpoints", n - 1)));
    }
    node_reports(node, f, n, a, b, stats, seq)
}

fn node_reports(
    node: &BoundNode,
    f: &SmoothFn,
    n: usize,
    a: &Rational,
    b: &Rational,
    stats: &FnStats,
    seq: Option<&HarmonicSeq>,
) -> Result<Vec<BoundReport>> {
    if n < 2 {
        return Err(Error::Domain(format!("node bounds need n >= 2, got {n}")));
    }
    let (af, bf) = (to_f64(a), to_f64(b));
    let tag = node_tag(node);
    let mut out = Vec::with_capacity(5);
    match node {
        BoundNode::Preset(preset) => {
            let x = preset.node(a, b);
            let spec = RuleSpec::new(n, a.clone(), b.clone(), x.clone(), RuleVariant::G);
            let residual = rules::remainder_eval(&spec, f)?.to_f64().abs();
            let pv = functional_pql(Functional::P, f, n, &x, a, b, None, KernelVariant::Canonical)?;
            for case in 1..=5 {
                let bound = bound_node_preset_value(case, *preset, n, af, bf, stats)?;
                out.push(
                    BoundReport::new(format!("{tag}.case{case}"), bound, residual, BoundMode::Audit)
                        .with_mean_diff(pv.mean_diff()),
                );
            }
        }
        BoundNode::General(x) => {
            let seq = seq.ok_or_else(|| Error::InvalidSequence("the general-node bounds need a sequence".into()))?;
            let spec = RuleSpec::new(n, a.clone(), b.clone(), x.clone(), RuleVariant::TF(seq.clone()));
            let residual = rules::remainder_eval(&spec, f)?.to_f64().abs();
            let ss = SeqStats::compute(seq, n, to_f64(x), af, bf)?;
            let lv = functional_pql(Functional::L, f, n, x, a, b, Some(seq), KernelVariant::Canonical)?;
            for case in 1..=5 {
                let bound = bound_node_general_value(case, n, af, bf, stats, &ss)?;
                out.push(
                    BoundReport::new(format!("{tag}.case{case}"), bound, residual, BoundMode::Audit)
                        .with_mean_diff(lv.mean_diff()),
                );
            }
        }
    }
    Ok(out)
}

/// Mean-form error `|E| / (b - a)` of a rule.
pub fn mean_form_error(spec: &RuleSpec, f: &SmoothFn) -> Result<f64> {
    Ok(rules::remainder_eval(spec, f)?.to_f64().abs() / to_f64(&(&spec.b - &spec.a)))
}

/// ASSERT check of the `L_p` bound on the two-point rule (variant G,
/// canonical kernel).
pub fn report_lp(f: &SmoothFn, n: usize, p: f64, x: &Rational, a: &Rational, b: &Rational) -> Result<BoundReport> {
    let (af, bf) = (to_f64(a), to_f64(b));
    let norm = oracle::lp_norm(|t| f.derivative(t, n).unwrap_or(f64::NAN), p, af, bf, &[], DEFAULT_TOL)?;
    let constant = bound_lp(n, p, to_f64(x), af, bf)?;
    let spec = RuleSpec::new(n, a.clone(), b.clone(), x.clone(), RuleVariant::G);
    Ok(BoundReport::new(format!("lp[p={}]", p_label(p)), constant * norm, mean_form_error(&spec, f)?, BoundMode::Assert))
}

/// ASSERT check of the `L_p` bound on the harmonic-sequence rule.
pub fn report_lp_seq(
    f: &SmoothFn,
    n: usize,
    p: f64,
    x: &Rational,
    a: &Rational,
    b: &Rational,
    seq: &HarmonicSeq,
) -> Result<BoundReport> {
    let (af, bf) = (to_f64(a), to_f64(b));
    let norm = oracle::lp_norm(|t| f.derivative(t, n).unwrap_or(f64::NAN), p, af, bf, &[], DEFAULT_TOL)?;
    let constant = bound_lp_seq(n, to_f64(x), af, bf, seq, p)?;
    let spec = RuleSpec::new(n, a.clone(), b.clone(), x.clone(), RuleVariant::TF(seq.clone()));
    Ok(BoundReport::new(format!("lp_seq[p={}]", p_label(p)), constant * norm, mean_form_error(&spec, f)?, BoundMode::Assert))
}

/// ASSERT check of the relaxed harmonic-sequence bound.
pub fn report_lp_seq_sup(
    f: &SmoothFn,
    n: usize,
    p: f64,
    x: &Rational,
    a: &Rational,
    b: &Rational,
    seq: &HarmonicSeq,
) -> Result<BoundReport> {
    let (af, bf) = (to_f64(a), to_f64(b));
    let norm = oracle::lp_norm(|t| f.derivative(t, n).unwrap_or(f64::NAN), p, af, bf, &[], DEFAULT_TOL)?;
    let constant = bound_lp_seq_sup(n, conjugate(p), to_f64(x), af, bf, seq)?;
    let spec = RuleSpec::new(n, a.clone(), b.clone(), x.clone(), RuleVariant::TF(seq.clone()));
    Ok(BoundReport::new(format!("lp_seq_sup[p={}]", p_label(p)), constant * norm, mean_form_error(&spec, f)?, BoundMode::Assert))
}

pub fn p_label(p: f64) -> String {
    if p.is_infinite() {
        "inf".to_string()
    } else {
        format!("{p}")
    }
}

/// Everything the `audit` command reports for one input.
#[derive(Debug, Clone, PartialEq)]
pub struct AuditOutput {
    pub reports: Vec<BoundReport>,
    pub notes: Vec<String>,
}

impl AuditOutput {
    pub fn assert_failures(&self) -> usize {
        self.reports.iter().filter(|r| r.is_assert_failure()).count()
    }
}

/// Runs every bound for `f` at order `n` and node `x`: the ASSERT-mode
/// `L_p` bounds, the five cases of both functional bounds (with both
/// readings of `(m1, M1)`), their endpoint-hypothesis corollaries, and the
/// node-appropriate node bounds.
pub fn audit(f: &SmoothFn, n: usize, x: &Rational, a: &Rational, b: &Rational, seq: Option<&HarmonicSeq>) -> Result<AuditOutput> {
    if n < 2 {
        return Err(Error::Domain(format!("audit needs n >= 2, got {n}")));
    }
    kernels::check_node(x, a, b)?;
    let (af, bf, xf) = (to_f64(a), to_f64(b), to_f64(x));
    let width = bf - af;
    let default_seq;
    let seq = match seq {
        Some(s) => s.clone(),
        None => {
            default_seq = crate::appell::power_sequence(&((a + b) / int(2)), n + 1);
            default_seq
        }
    };
    let stats = FnStats::compute(f, n, af, bf)?;
    let mut reports = Vec::new();
    let mut notes = vec![format!("sequence: {seq}"), format!("endpoint hypothesis: {}", stats.endpoint_flag)];

    for p in [1.0, 2.0, f64::INFINITY] {
        reports.push(report_lp(f, n, p, x, a, b)?);
        reports.push(report_lp_seq(f, n, p, x, a, b, &seq)?);
        reports.push(report_lp_seq_sup(f, n, p, x, a, b, &seq)?);
    }

    let pv = functional_pql(Functional::P, f, n, x, a, b, None, KernelVariant::Canonical)?;
    let printed = functional_pql(Functional::P, f, n, x, a, b, None, KernelVariant::AsPrinted)?;
    notes.push(format!(
        "P functional: canonical {:.6e}, printed kernel {:.6e}",
        pv.value, printed.value
    ));
    let qv = functional_pql(Functional::Q, f, n, x, a, b, None, KernelVariant::Canonical)?;
    notes.push(format!("Q functional {:.6e}, mean diff {:.6e}", qv.value, qv.mean_diff()));
    let lv = functional_pql(Functional::L, f, n, x, a, b, Some(&seq), KernelVariant::Canonical)?;
    let ss = SeqStats::compute(&seq, n, xf, af, bf)?;

    let g_spec = RuleSpec::new(n, a.clone(), b.clone(), x.clone(), RuleVariant::G);
    let tf_spec = RuleSpec::new(n, a.clone(), b.clone(), x.clone(), RuleVariant::TF(seq.clone()));
    let g_err = mean_form_error(&g_spec, f)?;
    let tf_err = mean_form_error(&tf_spec, f)?;

    for case in 1..=5 {
        reports.push(bound_gruss(case, n, xf, af, bf, &stats, &pv)?);
        let bound = bound_gruss_value(case, n, xf, af, bf, &stats)?;
        let mut cor = BoundReport::new(format!("gruss_periodic.case{case}"), bound, g_err, BoundMode::Audit).with_mean_diff(pv.mean_diff());
        if !stats.endpoint_flag {
            cor = cor.hypothesis_unmet("f^(n-1)(a) != f^(n-1)(b)");
        }
        reports.push(cor);
    }
    for case in 1..=5 {
        let readings: &[RangeReading] = if matches!(case, 2 | 4) {
            &[RangeReading::Derivative, RangeReading::H1]
        } else {
            &[RangeReading::Derivative]
        };
        for &reading in readings {
            reports.push(bound_gruss_seq(case, n, af, bf, &stats, &ss, reading, &lv)?);
            let bound = bound_gruss_seq_value(case, n, af, bf, &stats, &ss, reading)?;
            let mut cor = BoundReport::new(format!("gruss_seq_periodic.case{case}"), bound, tf_err, BoundMode::Audit).with_mean_diff(lv.mean_diff());
            if matches!(case, 2 | 4) {
                cor.bound_name = format!("gruss_seq_periodic.case{case}[{}]", reading.tag());
            }
            if !stats.endpoint_flag {
                cor = cor.hypothesis_unmet("f^(n-1)(a) != f^(n-1)(b)");
            }
            reports.push(cor);
        }
    }

    let mut nodes = Vec::new();
    if let Some(preset) = NodePreset::ALL.into_iter().find(|p| p.node(a, b) == *x) {
        nodes.push(BoundNode::Preset(preset));
    }
    nodes.push(BoundNode::General(x.clone()));
    for node in &nodes {
        let mut rows = node_reports(node, f, n, a, b, &stats, Some(&seq))?;
        if !stats.endpoint_flag {
            rows = rows.into_iter().map(|r| r.hypothesis_unmet("f^(n-1)(a) != f^(n-1)(b)")).collect();
        }
        reports.extend(rows);
    }
    if width != 1.0 {
        notes.push("node bounds compare |E|; all others compare |E|/(b-a)".into());
    }
    let reports = reports.into_iter().map(|r| r.with_note(format!("n = {n}"))).collect();
    Ok(AuditOutput { reports, notes })
}

/// Closed form of `∫ K_n(t, x) dt` for the canonical kernel: zero for odd
/// `n`, `2[(x-a)^{n+1} + ((a+b)/2-x)^{n+1}] B(n, 2)` for even `n`.
pub fn canonical_kernel_integral(n: usize, x: &Rational, a: &Rational, b: &Rational) -> Result<Rational> {
    kernels::check_node(x, a, b)?;
    let m = (a + b) / int(2);
    let e = n + 1;
    if n % 2 == 1 {
        // odd about the midpoint
        return Ok(int(0));
    }
    let beta = rat(1, (n * (n + 1)) as i64);
    Ok(int(2) * (num_traits::pow(x - a, e) + num_traits::pow(&m - x, e)) * beta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::appell::power_sequence;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * (1.0 + b.abs())
    }

    #[test]
    fn beta_examples() {
        assert!(close(beta_fn(3.0, 2.0).unwrap(), 1.0 / 12.0, 1e-15));
        assert_eq!(beta_fn(1.0, 1.0).unwrap(), 1.0);
        assert!(close(beta_fn(1.5, 1.5).unwrap(), PI / 8.0, 1e-13));
        assert!(matches!(beta_fn(0.0, 1.0), Err(Error::Domain(_))));
        assert!(close(beta_fn(2.5, 4.0).unwrap(), beta_fn(4.0, 2.5).unwrap(), 1e-14));
    }

    #[test]
    fn lp_examples() {
        assert!(close(bound_lp(1, 1.0, 0.0, 0.0, 1.0).unwrap(), 0.5, 1e-15));
        assert!(close(bound_lp(1, f64::INFINITY, 0.0, 0.0, 1.0).unwrap(), 0.25, 1e-15));
        assert!(close(bound_lp(1, f64::INFINITY, 0.5, 0.0, 1.0).unwrap(), 0.25, 1e-15));
        assert!(matches!(bound_lp(2, 2.0, 0.8, 0.0, 1.0), Err(Error::NodeRange { .. })));
    }

    #[test]
    fn lp_equals_canonical_kernel_norm() {
        let (a, b) = (-1.0, 2.0);
        for n in 1..=4 {
            for x in [-1.0, -0.6, -0.25, 0.1, 0.5] {
                for p in [1.0, 1.5, 2.0, 4.0, f64::INFINITY] {
                    let k = |t: f64| kernels::eval_k(n, &t, &x, &a, &b, KernelVariant::Canonical).unwrap();
                    let norm = oracle::lp_norm(k, conjugate(p), a, b, &kernels::breakpoints(x, a, b), 1e-13).unwrap();
                    let direct = norm / (fact(n) * (b - a));
                    let closed = bound_lp(n, p, x, a, b).unwrap();
                    assert!(close(closed, direct, 1e-8), "n={n} x={x} p={p}: {closed} vs {direct}");
                }
            }
        }
    }

    #[test]
    fn lp_seq_examples() {
        let one = power_sequence(&int(0), 0);
        assert!(close(bound_lp_seq(1, 0.0, 0.0, 1.0, &one, 1.0).unwrap(), 0.5, 1e-12));
        assert!(close(bound_lp_seq(1, 0.0, 0.0, 1.0, &one, f64::INFINITY).unwrap(), 0.25, 1e-12));
        let zero = HarmonicSeq::from_polys(vec![RationalPoly::zero()]);
        assert!(matches!(bound_lp_seq(1, 0.0, 0.0, 1.0, &zero, 2.0), Err(Error::Degenerate(_))));
        assert!(close(bound_lp_seq_sup(1, f64::INFINITY, 0.0, 0.0, 1.0, &one).unwrap(), 0.5, 1e-12));
        let mid = power_sequence(&rat(1, 2), 1);
        assert!(close(bound_lp_seq_sup(2, 1.0, 0.25, 0.0, 1.0, &mid).unwrap(), 1.0 / 32.0, 1e-12));
        let quarter = bound_lp_seq_sup(3, 2.0, 0.25, 0.0, 1.0, &power_sequence(&int(0), 2)).unwrap();
        let norm = power_sequence(&int(0), 2).seq_norm(2, 2.0, 0.0, 1.0).unwrap();
        assert!(close(quarter, norm / 12.0, 1e-12));
    }

    #[test]
    fn chebyshev_examples() {
        let (c, d) = (int(0), int(1));
        let t = RationalPoly::t();
        assert_eq!(chebyshev_functional_exact(&t, &t, &c, &d), rat(1, 12));
        assert_eq!(chebyshev_functional_exact(&RationalPoly::one(), &t.pow(3), &c, &d), int(0));
        assert_eq!(chebyshev_functional_exact(&t, &t.pow(2), &c, &d), rat(1, 12));
        let v = chebyshev_functional(|t| t, |t| t * t, 0.0, 1.0, &[]).unwrap();
        assert!(close(v, 1.0 / 12.0, 1e-14));
        let sgn = |t: f64| if t < 0.5 { -1.0 } else { 1.0 };
        assert!(close(chebyshev_functional(sgn, sgn, 0.0, 1.0, &[0.5]).unwrap(), 1.0, 1e-12));
    }

    #[test]
    fn gruss_examples() {
        let s = GrussStats { d1_inf: 1.0, d2_inf: 1.0, range1: (-1.0, 1.0), range2: (-1.0, 1.0), d1_l2: 1.0, d2_l2: 1.0 };
        let b = gruss_bound_suite(&s, 0.0, 1.0).unwrap();
        assert!(close(b[0], 1.0 / 12.0, 1e-15));
        assert_eq!(b[1], 1.0);
        assert!(close(b[2], 1.0 / (PI * PI), 1e-15));
        let bad = GrussStats { range1: (1.0, -1.0), ..s };
        assert!(matches!(gruss_bound_suite(&bad, 0.0, 1.0), Err(Error::InconsistentStats(_))));
    }

    #[test]
    fn constants() {
        assert_eq!(const_a(2).unwrap(), rat(1, 3));
        assert_eq!(const_b(2).unwrap(), rat(22, 3));
        assert_eq!(const_a(3).unwrap(), rat(2, 15));
        assert_eq!(const_b(3).unwrap(), rat(119, 30));
        assert!(const_a(1).is_err());
        let c = PFactors::new(2);
        assert!(close(c.dyadic, 3.0 / 64.0, 1e-15));
    }

    #[test]
    fn node_case1_example() {
        let stats = FnStats {
            n: 2,
            lp_norms: LpNorms { l1: 0.0, l2: 0.0, linf: 0.0 },
            lp_norms_next: LpNorms { l1: 1.0, l2: 1.0, linf: 1.0 },
            range_n: (0.0, 1.0),
            endpoint_flag: true,
            tol: DEFAULT_TOL,
        };
        let v = bound_node_preset_value(1, NodePreset::Left, 2, 0.0, 1.0, &stats).unwrap();
        assert!(close(v, 1.0 / 96.0, 1e-15));
        let mid = bound_node_preset_value(3, NodePreset::Midpoint, 2, 0.0, 1.0, &stats).unwrap();
        let expect = 1.0 / (2f64.powf(1.5) * 4.0 * PI * PI) * (1.0f64 / 3.0).sqrt();
        assert!(close(mid, expect, 1e-14));
    }

    #[test]
    fn gruss_seq_examples() {
        let seq = power_sequence(&int(0), 3);
        let ss = SeqStats::compute(&seq, 2, 0.0, 0.0, 1.0).unwrap();
        assert!(close(ss.d, (7.0f64 / 12.0).sqrt(), 1e-10));
        assert!(close(ss.range2.0, -1.0 / 16.0, 1e-10));
        assert!(close(ss.range2.1, 0.5, 1e-12));
        let stats = FnStats {
            n: 2,
            lp_norms: LpNorms { l1: 0.0, l2: 0.0, linf: 0.0 },
            lp_norms_next: LpNorms { l1: 0.0, l2: 0.0, linf: 0.0 },
            range_n: (0.0, 1.0),
            endpoint_flag: true,
            tol: DEFAULT_TOL,
        };
        let unit = SeqStats { range2: (0.0, 1.0), ..ss };
        let v = bound_gruss_seq_value(2, 2, 0.0, 1.0, &stats, &unit, RangeReading::Derivative).unwrap();
        assert!(close(v, 0.125, 1e-15));
    }

    #[test]
    fn p_functional_examples() {
        // f' equal at both ends, so the mean of f'' vanishes
        let f = SmoothFn::poly(RationalPoly::parse("0,0,-3/2,1").unwrap());
        let v = functional_pql(Functional::P, &f, 2, &int(0), &int(0), &int(1), None, KernelVariant::Canonical).unwrap();
        assert_eq!(v.exact, Some(int(0)));
        let cubic = SmoothFn::poly(RationalPoly::from_ints(&[0, 0, 0, 1]));
        let seq = power_sequence(&int(0), 4);
        for which in [Functional::P, Functional::L] {
            let v = functional_pql(which, &cubic, 3, &rat(1, 8), &int(0), &int(1), Some(&seq), KernelVariant::Canonical).unwrap();
            assert_eq!(v.exact, Some(int(0)), "{which:?}");
        }
        // Q carries S inside h1, so only n = 1 makes h2 constant
        let v = functional_pql(Functional::Q, &cubic, 3, &rat(1, 8), &int(0), &int(1), None, KernelVariant::Canonical).unwrap();
        assert_ne!(v.exact, Some(int(0)));
        let lin = SmoothFn::poly(RationalPoly::t());
        let v = functional_pql(Functional::Q, &lin, 1, &rat(1, 8), &int(0), &int(1), None, KernelVariant::Canonical).unwrap();
        assert_eq!(v.exact, Some(int(0)));
    }

    #[test]
    fn l_bracket_is_the_oracle_mean() {
        for seq in [power_sequence(&int(0), 2), power_sequence(&rat(1, 3), 2)] {
            for constant in [int(0), rat(5, 7)] {
                let mut polys = seq.polys().to_vec();
                polys.push(polys[2].antiderivative() + RationalPoly::constant(constant.clone()));
                let s = HarmonicSeq::try_new(polys).unwrap();
                let f = SmoothFn::poly(RationalPoly::from_ints(&[1, 2, 0, -1, 3]));
                let v = functional_pql(Functional::L, &f, 2, &rat(1, 5), &int(0), &int(1), Some(&s), KernelVariant::Canonical).unwrap();
                assert!(v.mean_diff().abs() < 1e-14, "diff {}", v.mean_diff());
            }
        }
    }

    #[test]
    fn numeric_and_exact_functionals_agree() {
        let seq = power_sequence(&rat(1, 2), 4);
        let f = SmoothFn::poly(RationalPoly::from_ints(&[0, 1, -2, 0, 0, 1]));
        let g = SmoothFn::parse("exp:1").unwrap();
        for which in [Functional::P, Functional::Q, Functional::L] {
            let e = functional_pql(which, &f, 3, &rat(1, 8), &int(0), &int(1), Some(&seq), KernelVariant::Canonical).unwrap();
            assert!(e.exact.is_some());
            let n = functional_pql(which, &g, 3, &rat(1, 8), &int(0), &int(1), Some(&seq), KernelVariant::Canonical).unwrap();
            assert!(n.exact.is_none() && n.value.is_finite());
        }
    }

    #[test]
    fn canonical_integral_closed_form() {
        for n in 1..=5 {
            for x in [int(0), rat(1, 8), rat(1, 4), rat(1, 2)] {
                let pw = kernels::k_pieces(n, &x, &int(0), &int(1), KernelVariant::Canonical).unwrap();
                assert_eq!(pw.integral(), canonical_kernel_integral(n, &x, &int(0), &int(1)).unwrap());
            }
        }
        assert_eq!(canonical_kernel_integral(2, &int(0), &int(0), &int(1)).unwrap(), rat(1, 24));
    }

    #[test]
    fn node_bounds_require_endpoint_hypothesis() {
        let f = SmoothFn::exp(1.0);
        let stats = FnStats::compute(&f, 2, 0.0, 1.0).unwrap();
        assert!(!stats.endpoint_flag);
        let r = bounds_node(&BoundNode::Preset(NodePreset::Left), &f, 2, &int(0), &int(1), &stats, None);
        assert!(matches!(r, Err(Error::HypothesisUnmet(_))));
    }

    #[test]
    fn audit_emits_every_case() {
        let f = SmoothFn::parse("sin:6.283185307179586:0").unwrap();
        let out = audit(&f, 2, &int(0), &int(0), &int(1), None).unwrap();
        for prefix in ["gruss.case", "gruss_seq.case", "node_left.case", "node_general.case", "gruss_periodic.case", "gruss_seq_periodic.case"] {
            for case in 1..=5 {
                let name = format!("{prefix}{case}");
                assert!(out.reports.iter().any(|r| r.bound_name.starts_with(&name)), "missing {name}");
            }
        }
        assert_eq!(out.assert_failures(), 0);
        assert!(out.reports.iter().filter(|r| r.mode == BoundMode::Audit).all(|r| r.mean_diff.is_some()));
    }
}
