//! Peano-type kernels of the one-point and two-point expansions.
//!
//! `S(t, x)` is the three-piece kernel of the symmetric two-point formula,
//! `p(t, x)` the two-piece kernel of the one-point formula, and `K_n(t, x)`
//! the order-`n` remainder kernel. The canonical `K_n` is obtained by
//! exchanging the order of integration in the double-integral remainder:
//! on the left half it carries `(x - t)^{n-1}`, on the right half the
//! Taylor base point is `a + b - x` and it carries `(a + b - x - t)^{n-1}`.
//! The as-printed variant keeps `(x - t)^{n-1}` on both halves; it is only
//! kept to reproduce the discrepancy in audit runs.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::rational::{int, Rational, RationalPoly, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum KernelVariant {
    #[default]
    Canonical,
    AsPrinted,
}

impl KernelVariant {
    pub fn as_str(self) -> &'static str {
        match self {
            KernelVariant::Canonical => "canonical",
            KernelVariant::AsPrinted => "printed",
        }
    }
}

impl fmt::Display for KernelVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for KernelVariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "canonical" => Ok(KernelVariant::Canonical),
            "printed" | "as-printed" | "as_printed" => Ok(KernelVariant::AsPrinted),
            other => Err(Error::Parse(format!("unknown kernel variant '{other}'"))),
        }
    }
}

fn check_interval<S: Scalar>(a: &S, b: &S) -> Result<()> {
    if !(a < b) {
        return Err(Error::Domain(format!(
            "interval needs a < b, got [{}, {}]",
            a.as_f64(),
            b.as_f64()
        )));
    }
    Ok(())
}

fn check_point<S: Scalar>(t: &S, a: &S, b: &S) -> Result<()> {
    if t < a || t > b {
        return Err(Error::Domain(format!(
            "t = {} outside [{}, {}]",
            t.as_f64(),
            a.as_f64(),
            b.as_f64()
        )));
    }
    Ok(())
}

fn midpoint<S: Scalar>(a: &S, b: &S) -> S {
    (a.clone() + b.clone()) / S::from_int(2)
}

/// Requires `a < b` and `a <= x <= (a+b)/2`.
pub fn check_node<S: Scalar>(x: &S, a: &S, b: &S) -> Result<()> {
    check_interval(a, b)?;
    let m = midpoint(a, b);
    if x < a || *x > m {
        return Err(Error::NodeRange { x: x.as_f64(), lo: a.as_f64(), hi: m.as_f64() });
    }
    Ok(())
}

/// Two-point kernel `S(t, x)`: `t - a` on `[a, x]`, `t - (a+b)/2` on
/// `(x, a+b-x)`, `t - b` on `[a+b-x, b]`. `t = x` belongs to the first
/// piece, `t = a+b-x` to the third.
pub fn eval_s<S: Scalar>(t: &S, x: &S, a: &S, b: &S) -> Result<S> {
    check_node(x, a, b)?;
    check_point(t, a, b)?;
    let mirror = a.clone() + b.clone() - x.clone();
    Ok(if t <= x {
        t.clone() - a.clone()
    } else if *t >= mirror {
        t.clone() - b.clone()
    } else {
        t.clone() - midpoint(a, b)
    })
}

/// One-point kernel `p(t, x)`: `t - a` on `[a, x]`, `t - b` on `(x, b]`.
pub fn eval_p<S: Scalar>(t: &S, x: &S, a: &S, b: &S) -> Result<S> {
    check_interval(a, b)?;
    if x < a || x > b {
        return Err(Error::NodeRange { x: x.as_f64(), lo: a.as_f64(), hi: b.as_f64() });
    }
    check_point(t, a, b)?;
    Ok(if t <= x { t.clone() - a.clone() } else { t.clone() - b.clone() })
}

/// Order-`n` remainder kernel `K_n(t, x)`.
pub fn eval_k<S: Scalar>(n: usize, t: &S, x: &S, a: &S, b: &S, variant: KernelVariant) -> Result<S> {
    if n == 0 {
        return Err(Error::Domain("kernel order n must be at least 1".into()));
    }
    let s = eval_s(t, x, a, b)?;
    let base = match variant {
        KernelVariant::AsPrinted => x.clone(),
        KernelVariant::Canonical if *t <= midpoint(a, b) => x.clone(),
        KernelVariant::Canonical => a.clone() + b.clone() - x.clone(),
    };
    Ok((base - t.clone()).pow_u(n as u32 - 1) * s)
}

/// Interior breakpoints `{x, (a+b)/2, a+b-x}` of the two-point kernels.
pub fn breakpoints(x: f64, a: f64, b: f64) -> [f64; 3] {
    [x, 0.5 * (a + b), a + b - x]
}

/// One polynomial piece of a piecewise-polynomial kernel on `[lo, hi]`.
#[derive(Debug, Clone, PartialEq)]
pub struct KernelPiece {
    pub lo: Rational,
    pub hi: Rational,
    pub poly: RationalPoly,
}

/// Piecewise-polynomial form of a kernel, exact on rational nodes.
#[derive(Debug, Clone, PartialEq)]
pub struct PiecewisePoly {
    pub pieces: Vec<KernelPiece>,
}

impl PiecewisePoly {
    fn from_parts(parts: Vec<(Rational, Rational, RationalPoly)>) -> Self {
        PiecewisePoly {
            pieces: parts
                .into_iter()
                .filter(|(lo, hi, _)| lo < hi)
                .map(|(lo, hi, poly)| KernelPiece { lo, hi, poly })
                .collect(),
        }
    }

    /// Multiplies every piece by `w`.
    pub fn times(&self, w: &RationalPoly) -> Self {
        PiecewisePoly {
            pieces: self
                .pieces
                .iter()
                .map(|p| KernelPiece { lo: p.lo.clone(), hi: p.hi.clone(), poly: &p.poly * w })
                .collect(),
        }
    }

    /// `∫ kernel(t) g(t) dt` over the union of the pieces, exactly.
    pub fn integrate_against(&self, g: &RationalPoly) -> Rational {
        self.pieces
            .iter()
            .map(|p| (&p.poly * g).integrate(&p.lo, &p.hi))
            .fold(int(0), |acc, v| acc + v)
    }

    pub fn integral(&self) -> Rational {
        self.integrate_against(&RationalPoly::one())
    }
}

/// `S(., x)` as three linear pieces.
pub fn s_pieces(x: &Rational, a: &Rational, b: &Rational) -> Result<PiecewisePoly> {
    check_node(x, a, b)?;
    let m = midpoint(a, b);
    let mirror = a + b - x;
    Ok(PiecewisePoly::from_parts(vec![
        (a.clone(), x.clone(), RationalPoly::linear_root(a)),
        (x.clone(), mirror.clone(), RationalPoly::linear_root(&m)),
        (mirror, b.clone(), RationalPoly::linear_root(b)),
    ]))
}

/// `(base - t)^k`.
fn power_about(base: &Rational, k: usize) -> RationalPoly {
    (-&RationalPoly::linear_root(base)).pow(k)
}

/// `K_n(., x)` as polynomial pieces.
pub fn k_pieces(
    n: usize,
    x: &Rational,
    a: &Rational,
    b: &Rational,
    variant: KernelVariant,
) -> Result<PiecewisePoly> {
    if n == 0 {
        return Err(Error::Domain("kernel order n must be at least 1".into()));
    }
    check_node(x, a, b)?;
    let m = midpoint(a, b);
    let mirror = a + b - x;
    let left = power_about(x, n - 1);
    let right = match variant {
        KernelVariant::Canonical => power_about(&mirror, n - 1),
        KernelVariant::AsPrinted => left.clone(),
    };
    Ok(PiecewisePoly::from_parts(vec![
        (a.clone(), x.clone(), &left * &RationalPoly::linear_root(a)),
        (x.clone(), m.clone(), &left * &RationalPoly::linear_root(&m)),
        (m.clone(), mirror.clone(), &right * &RationalPoly::linear_root(&m)),
        (mirror, b.clone(), &right * &RationalPoly::linear_root(b)),
    ]))
}

/// `(x - t)^{n-1} p(t, x)`, the one-point remainder kernel.
pub fn fink_pieces(n: usize, x: &Rational, a: &Rational, b: &Rational) -> Result<PiecewisePoly> {
    if n == 0 {
        return Err(Error::Domain("kernel order n must be at least 1".into()));
    }
    check_interval(a, b)?;
    if x < a || x > b {
        return Err(Error::NodeRange { x: x.as_f64(), lo: a.as_f64(), hi: b.as_f64() });
    }
    let w = power_about(x, n - 1);
    Ok(PiecewisePoly::from_parts(vec![
        (a.clone(), x.clone(), &w * &RationalPoly::linear_root(a)),
        (x.clone(), b.clone(), &w * &RationalPoly::linear_root(b)),
    ]))
}

/// One row of the kernel table written by the `kernels` command.
#[derive(Debug, Clone, PartialEq)]
pub struct KernelRow {
    pub t: f64,
    pub s: f64,
    pub p: f64,
    pub k_canonical: f64,
    pub k_printed: f64,
}

/// Tabulates `S`, `p`, and both `K_n` variants on `points` equispaced `t`.
pub fn tabulate(n: usize, x: f64, a: f64, b: f64, points: usize) -> Result<Vec<KernelRow>> {
    check_node(&x, &a, &b)?;
    let points = points.max(2);
    (0..points)
        .map(|i| {
            let t = if i + 1 == points { b } else { a + (b - a) * i as f64 / (points - 1) as f64 };
            Ok(KernelRow {
                t,
                s: eval_s(&t, &x, &a, &b)?,
                p: eval_p(&t, &x, &a, &b)?,
                k_canonical: eval_k(n, &t, &x, &a, &b, KernelVariant::Canonical)?,
                k_printed: eval_k(n, &t, &x, &a, &b, KernelVariant::AsPrinted)?,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn s_examples() {
        let v = |t: f64| eval_s(&t, &0.25, &0.0, &1.0).unwrap();
        assert!((v(0.1) - 0.1).abs() < 1e-15);
        assert_eq!(v(0.5), 0.0);
        assert!((v(0.9) + 0.1).abs() < 1e-15);
        assert!(matches!(eval_s(&0.5, &0.75, &0.0, &1.0), Err(Error::NodeRange { .. })));
        assert!(matches!(eval_s(&1.5, &0.25, &0.0, &1.0), Err(Error::Domain(_))));
    }

    #[test]
    fn s_boundary_conventions() {
        let (a, b, x) = (int(0), int(1), rat(1, 4));
        assert_eq!(eval_s(&x, &x, &a, &b).unwrap(), rat(1, 4));
        assert_eq!(eval_s(&rat(3, 4), &x, &a, &b).unwrap(), rat(-1, 4));
    }

    #[test]
    fn p_examples() {
        let v = |t: f64| eval_p(&t, &0.5, &0.0, &1.0).unwrap();
        assert!((v(0.2) - 0.2).abs() < 1e-15);
        assert!((v(0.7) + 0.3).abs() < 1e-15);
        assert_eq!(v(0.5), 0.5);
    }

    #[test]
    fn k_examples() {
        let (a, b) = (int(0), int(1));
        let x = int(0);
        let t = rat(3, 4);
        assert_eq!(eval_k(2, &t, &x, &a, &b, KernelVariant::Canonical).unwrap(), rat(1, 16));
        assert_eq!(eval_k(2, &t, &x, &a, &b, KernelVariant::AsPrinted).unwrap(), rat(-3, 16));
        for xv in [rat(0, 1), rat(1, 8), rat(1, 2)] {
            for v in [KernelVariant::Canonical, KernelVariant::AsPrinted] {
                assert_eq!(eval_k(2, &xv, &xv, &a, &b, v).unwrap(), int(0));
            }
        }
    }

    #[test]
    fn variants_coincide_for_first_order() {
        let (a, b, x) = (int(-1), int(2), rat(1, 5));
        for i in 0..=30 {
            let t = int(-1) + rat(i, 10);
            assert_eq!(
                eval_k(1, &t, &x, &a, &b, KernelVariant::Canonical).unwrap(),
                eval_k(1, &t, &x, &a, &b, KernelVariant::AsPrinted).unwrap()
            );
        }
    }

    #[test]
    fn pieces_agree_with_pointwise_eval() {
        let (a, b, x) = (int(-1), int(2), rat(-1, 3));
        for n in 1..=4 {
            for variant in [KernelVariant::Canonical, KernelVariant::AsPrinted] {
                let pw = k_pieces(n, &x, &a, &b, variant).unwrap();
                for piece in &pw.pieces {
                    // sample strictly inside each piece
                    let t = (&piece.lo * int(2) + &piece.hi) / int(3);
                    assert_eq!(piece.poly.eval(&t), eval_k(n, &t, &x, &a, &b, variant).unwrap());
                }
            }
        }
    }

    #[test]
    fn canonical_integral_example() {
        // ∫_0^1 K_2(t, 0) dt = 1/24, so ∫ K_2 * f'' for f = t^2 is 1/12
        let pw = k_pieces(2, &int(0), &int(0), &int(1), KernelVariant::Canonical).unwrap();
        assert_eq!(pw.integral(), rat(1, 24));
        assert_eq!(pw.integrate_against(&RationalPoly::constant(int(2))), rat(1, 12));
        let printed = k_pieces(2, &int(0), &int(0), &int(1), KernelVariant::AsPrinted).unwrap();
        assert_eq!(printed.integral(), rat(-1, 12));
    }

    #[test]
    fn kernel_variant_parsing() {
        assert_eq!("canonical".parse::<KernelVariant>().unwrap(), KernelVariant::Canonical);
        assert_eq!("printed".parse::<KernelVariant>().unwrap(), KernelVariant::AsPrinted);
        assert!("other".parse::<KernelVariant>().is_err());
    }

    #[test]
    fn table_has_expected_shape() {
        let rows = tabulate(2, 0.25, 0.0, 1.0, 11).unwrap();
        assert_eq!(rows.len(), 11);
        assert_eq!(rows[10].t, 1.0);
        assert_eq!(rows[0].k_canonical, 0.0);
    }
}
