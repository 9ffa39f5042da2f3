//! Correction terms, two-point and one-point rule values, remainders and
//! identity residuals, plus a uniform composite extension.
//!
//! Every rule satisfies `∫_a^b f = value + remainder`. Polynomial inputs take
//! the exact rational path; everything else is evaluated in `f64` with the
//! remainder integrated by the adaptive oracle.

use std::fmt;

use num_traits::Zero;

use crate::appell::HarmonicSeq;
use crate::error::{Error, Result};
use crate::funcmodel::SmoothFn;
use crate::kernels::{self, KernelVariant};
use crate::oracle;
use crate::rational::{factorial, format_rational, int, to_f64, Rational, Scalar};

/// Absolute tolerance used for numeric remainder integrals.
pub const REMAINDER_TOL: f64 = 1e-13;

/// Scalars for which derivatives of a [`SmoothFn`] can be evaluated.
pub trait RuleScalar: Scalar {
    fn deriv(f: &SmoothFn, t: &Self, j: usize) -> Result<Self>;
}

impl RuleScalar for f64 {
    fn deriv(f: &SmoothFn, t: &f64, j: usize) -> Result<f64> {
        f.derivative(*t, j)
    }
}

impl RuleScalar for Rational {
    fn deriv(f: &SmoothFn, t: &Rational, j: usize) -> Result<Rational> {
        f.derivative_exact(t, j)
    }
}

fn sign<S: Scalar>(e: usize) -> S {
    if e % 2 == 0 {
        S::one()
    } else {
        -S::one()
    }
}

fn from_rational<S: Scalar>(r: &Rational) -> S {
    S::from_rational(r)
}

fn check_k(k: usize, n: usize) -> Result<()> {
    if k == 0 || k >= n {
        return Err(Error::Domain(format!("correction index k = {k} must lie in 1..={}", n as isize - 1)));
    }
    Ok(())
}

/// Which factorial divides the one-point correction `F_k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FinkFactorial {
    /// `(n-k)/k!`, which closes the identity exactly.
    #[default]
    K,
    /// `(n-k)/n!`, kept for audit comparisons.
    PrintedN,
}

#[derive(Debug, Clone, PartialEq)]
pub enum RuleVariant {
    G,
    TF(HarmonicSeq),
    Fink,
}

impl RuleVariant {
    pub fn name(&self) -> &'static str {
        match self {
            RuleVariant::G => "G",
            RuleVariant::TF(_) => "TF",
            RuleVariant::Fink => "FINK",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RuleSpec {
    pub n: usize,
    pub a: Rational,
    pub b: Rational,
    pub x: Rational,
    pub variant: RuleVariant,
    pub kernel: KernelVariant,
    pub fink_factorial: FinkFactorial,
}

impl RuleSpec {
    pub fn new(n: usize, a: Rational, b: Rational, x: Rational, variant: RuleVariant) -> Self {
        RuleSpec { n, a, b, x, variant, kernel: KernelVariant::Canonical, fink_factorial: FinkFactorial::K }
    }

    pub fn with_kernel(mut self, kernel: KernelVariant) -> Self {
        self.kernel = kernel;
        self
    }

    pub fn with_fink_factorial(mut self, convention: FinkFactorial) -> Self {
        self.fink_factorial = convention;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::Domain("rule order n must be at least 1".into()));
        }
        match &self.variant {
            RuleVariant::Fink => {
                if self.a >= self.b {
                    return Err(Error::Domain("interval needs a < b".into()));
                }
                if self.x < self.a || self.x > self.b {
                    return Err(Error::NodeRange { x: to_f64(&self.x), lo: to_f64(&self.a), hi: to_f64(&self.b) });
                }
            }
            RuleVariant::G => kernels::check_node(&self.x, &self.a, &self.b)?,
            RuleVariant::TF(seq) => {
                kernels::check_node(&self.x, &self.a, &self.b)?;
                if !seq.validate() {
                    return Err(Error::InvalidSequence(format!("not harmonic: {seq}")));
                }
                if seq.order().unwrap_or(0) + 1 < self.n {
                    return Err(Error::InvalidSequence(format!(
                        "order-{} rule needs P_0..P_{}, sequence stops at P_{}",
                        self.n,
                        self.n - 1,
                        seq.order().unwrap_or(0)
                    )));
                }
            }
        }
        Ok(())
    }

    fn width(&self) -> Rational {
        &self.b - &self.a
    }
}

/// An exact rational or a floating-point approximation.
#[derive(Debug, Clone, PartialEq)]
pub enum Number {
    Exact(Rational),
    Approx(f64),
}

impl Number {
    pub fn to_f64(&self) -> f64 {
        match self {
            Number::Exact(r) => to_f64(r),
            Number::Approx(v) => *v,
        }
    }

    pub fn as_exact(&self) -> Option<&Rational> {
        match self {
            Number::Exact(r) => Some(r),
            Number::Approx(_) => None,
        }
    }

    pub fn is_exact_zero(&self) -> bool {
        matches!(self, Number::Exact(r) if r.is_zero())
    }
}

impl fmt::Display for Number {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Number::Exact(r) => f.write_str(&format_rational(r)),
            Number::Approx(v) => write!(f, "{v:.16e}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RuleResult {
    pub value: Number,
    pub remainder: Number,
    pub exact: bool,
}

/// `G_k` of the two-point expansion about `x` and `a+b-x`.
pub fn correction_g<S: RuleScalar>(k: usize, n: usize, x: &S, a: &S, b: &S, f: &SmoothFn) -> Result<S> {
    check_k(k, n)?;
    let two = S::from_int(2);
    let m = (a.clone() + b.clone()) / two;
    let d = |t: &S| S::deriv(f, t, k - 1);
    let odd = sign::<S>(k + 1);
    let left = (x.clone() - a.clone()).pow_u(k as u32) * (d(a)? + odd.clone() * d(b)?);
    let mid = (S::one() + odd) * (m.clone() - x.clone()).pow_u(k as u32) * d(&m)?;
    let coef = S::from_int((n - k) as i64) / (from_rational::<S>(&factorial(k)) * (b.clone() - a.clone()));
    Ok(coef * (left + mid))
}

/// Node presets of the two-point family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodePreset {
    /// `x = a`: endpoints vanish, midpoint derivative terms remain.
    Left,
    /// `x = (3a+b)/4`.
    Quarter,
    /// `x = (a+b)/2`: the midpoint terms vanish.
    Midpoint,
}

impl NodePreset {
    pub const ALL: [NodePreset; 3] = [NodePreset::Left, NodePreset::Quarter, NodePreset::Midpoint];

    pub fn node(self, a: &Rational, b: &Rational) -> Rational {
        match self {
            NodePreset::Left => a.clone(),
            NodePreset::Quarter => (a * int(3) + b) / int(4),
            NodePreset::Midpoint => (a + b) / int(2),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            NodePreset::Left => "left",
            NodePreset::Quarter => "quarter",
            NodePreset::Midpoint => "midpoint",
        }
    }
}

/// `G_k` written out for a node preset; equal to [`correction_g`] at the
/// preset node.
pub fn correction_g_preset<S: RuleScalar>(
    preset: NodePreset,
    k: usize,
    n: usize,
    a: &S,
    b: &S,
    f: &SmoothFn,
) -> Result<S> {
    check_k(k, n)?;
    let h = b.clone() - a.clone();
    let m = (a.clone() + b.clone()) / S::from_int(2);
    let d = |t: &S| S::deriv(f, t, k - 1);
    let odd = sign::<S>(k + 1);
    let coef = S::from_int((n - k) as i64) / (from_rational::<S>(&factorial(k)) * h.clone());
    let half = (h.clone() / S::from_int(2)).pow_u(k as u32);
    let quarter = (h / S::from_int(4)).pow_u(k as u32);
    Ok(match preset {
        NodePreset::Left => coef * (S::one() + odd) * half * d(&m)?,
        NodePreset::Quarter => {
            coef * quarter * (d(a)? + odd.clone() * d(b)? + (S::one() + odd) * d(&m)?)
        }
        NodePreset::Midpoint => coef * half * (d(a)? + odd * d(b)?),
    })
}

/// `T_k` of the harmonic-sequence expansion.
pub fn correction_t<S: RuleScalar>(k: usize, x: &S, a: &S, b: &S, f: &SmoothFn, seq: &HarmonicSeq) -> Result<S> {
    let p = seq.get(k)?;
    let mirror = a.clone() + b.clone() - x.clone();
    let sum = p.eval_as(x) * S::deriv(f, x, k)? + p.eval_as(&mirror) * S::deriv(f, &mirror, k)?;
    Ok(sign::<S>(k) * sum / S::from_int(2))
}

/// `F̃_k`, the endpoint correction of the harmonic-sequence expansion.
pub fn correction_ftilde<S: RuleScalar>(
    k: usize,
    n: usize,
    a: &S,
    b: &S,
    f: &SmoothFn,
    seq: &HarmonicSeq,
) -> Result<S> {
    check_k(k, n)?;
    let p = seq.get(k)?;
    let diff = p.eval_as(a) * S::deriv(f, a, k - 1)? - p.eval_as(b) * S::deriv(f, b, k - 1)?;
    Ok(sign::<S>(k) * S::from_int((n - k) as i64) * diff / (b.clone() - a.clone()))
}

/// `F_k` of the one-point expansion.
pub fn correction_f_fink<S: RuleScalar>(
    k: usize,
    n: usize,
    x: &S,
    a: &S,
    b: &S,
    f: &SmoothFn,
    convention: FinkFactorial,
) -> Result<S> {
    check_k(k, n)?;
    let fact = match convention {
        FinkFactorial::K => factorial(k),
        FinkFactorial::PrintedN => factorial(n),
    };
    let e = k as u32;
    let diff = S::deriv(f, a, k - 1)? * (x.clone() - a.clone()).pow_u(e)
        - S::deriv(f, b, k - 1)? * (x.clone() - b.clone()).pow_u(e);
    Ok(S::from_int((n - k) as i64) * diff / (from_rational::<S>(&fact) * (b.clone() - a.clone())))
}

/// Rule value for any variant.
fn rule_value<S: RuleScalar>(spec: &RuleSpec, f: &SmoothFn) -> Result<S> {
    let (a, b, x) = (from_rational::<S>(&spec.a), from_rational::<S>(&spec.b), from_rational::<S>(&spec.x));
    let n = spec.n;
    let h = b.clone() - a.clone();
    let mut terms = S::zero();
    let base = match &spec.variant {
        RuleVariant::G => {
            for k in 1..n {
                terms = terms + correction_g(k, n, &x, &a, &b, f)?;
            }
            symmetric_average(&x, &a, &b, f)?
        }
        RuleVariant::TF(seq) => {
            for k in 1..n {
                terms = terms + correction_t(k, &x, &a, &b, f, seq)? + correction_ftilde(k, n, &a, &b, f, seq)?;
            }
            symmetric_average(&x, &a, &b, f)?
        }
        RuleVariant::Fink => {
            for k in 1..n {
                terms = terms + correction_f_fink(k, n, &x, &a, &b, f, spec.fink_factorial)?;
            }
            S::deriv(f, &x, 0)?
        }
    };
    Ok(h / S::from_int(n as i64) * (base + terms))
}

fn symmetric_average<S: RuleScalar>(x: &S, a: &S, b: &S, f: &SmoothFn) -> Result<S> {
    let mirror = a.clone() + b.clone() - x.clone();
    Ok((S::deriv(f, x, 0)? + S::deriv(f, &mirror, 0)?) / S::from_int(2))
}

/// Remainder `E` with `∫ f = value + E`.
pub fn remainder_eval(spec: &RuleSpec, f: &SmoothFn) -> Result<Number> {
    spec.validate()?;
    let n = spec.n;
    let (a, b, x) = (&spec.a, &spec.b, &spec.x);
    // kernel weight and the constant in front of ∫ weight·f^(n)
    let coef: Rational = match &spec.variant {
        RuleVariant::G | RuleVariant::Fink => -(int(1) / factorial(n)),
        RuleVariant::TF(_) => -(sign::<Rational>(n - 1) / int(n as i64)),
    };
    if let Some(p) = f.as_poly() {
        let pieces = match &spec.variant {
            RuleVariant::G => kernels::k_pieces(n, x, a, b, spec.kernel)?,
            RuleVariant::TF(seq) => kernels::s_pieces(x, a, b)?.times(seq.get(n - 1)?),
            RuleVariant::Fink => kernels::fink_pieces(n, x, a, b)?,
        };
        return Ok(Number::Exact(coef * pieces.integrate_against(&p.derive_n(n))));
    }
    let (af, bf, xf) = (to_f64(a), to_f64(b), to_f64(x));
    f.check_interval(af, bf)?;
    // surface order errors before integrating
    f.derivative(af, n)?;
    let fd = |t: f64| f.derivative(t, n).unwrap_or(f64::NAN);
    let weight: Box<dyn Fn(f64) -> f64> = match &spec.variant {
        RuleVariant::G => {
            let kernel = spec.kernel;
            Box::new(move |t| kernels::eval_k(n, &t, &xf, &af, &bf, kernel).unwrap_or(f64::NAN))
        }
        RuleVariant::TF(seq) => {
            let p = seq.get(n - 1)?.clone();
            Box::new(move |t| p.eval_f64(t) * kernels::eval_s(&t, &xf, &af, &bf).unwrap_or(f64::NAN))
        }
        RuleVariant::Fink => Box::new(move |t| {
            (xf - t).powi(n as i32 - 1) * kernels::eval_p(&t, &xf, &af, &bf).unwrap_or(f64::NAN)
        }),
    };
    let breaks = kernels::breakpoints(xf, af, bf);
    let q = oracle::integrate_with_breaks(|t| weight(t) * fd(t), af, bf, &breaks, REMAINDER_TOL)?;
    Ok(Number::Approx(to_f64(&coef) * q.value))
}

/// Two-point rule (variants G and TF); FINK specs are forwarded to the
/// one-point rule.
pub fn quad_two_point(spec: &RuleSpec, f: &SmoothFn) -> Result<RuleResult> {
    spec.validate()?;
    let remainder = remainder_eval(spec, f)?;
    if f.is_exact() {
        Ok(RuleResult { value: Number::Exact(rule_value::<Rational>(spec, f)?), remainder, exact: true })
    } else {
        Ok(RuleResult { value: Number::Approx(rule_value::<f64>(spec, f)?), remainder, exact: false })
    }
}

/// One-point rule with the `k!` convention.
pub fn quad_fink(n: usize, x: &Rational, a: &Rational, b: &Rational, f: &SmoothFn) -> Result<RuleResult> {
    quad_two_point(&RuleSpec::new(n, a.clone(), b.clone(), x.clone(), RuleVariant::Fink), f)
}

/// Reference integral: exact for polynomials, closed form otherwise.
pub fn reference_integral(f: &SmoothFn, a: &Rational, b: &Rational) -> Result<Number> {
    if f.is_exact() {
        Ok(Number::Exact(f.integral_exact(a, b)?))
    } else {
        Ok(Number::Approx(f.integral(to_f64(a), to_f64(b))?))
    }
}

/// `∫ f - value - remainder`; exactly zero when the identity holds.
pub fn identity_residual(spec: &RuleSpec, f: &SmoothFn) -> Result<Number> {
    let r = quad_two_point(spec, f)?;
    let total = reference_integral(f, &spec.a, &spec.b)?;
    Ok(match (&total, &r.value, &r.remainder) {
        (Number::Exact(t), Number::Exact(v), Number::Exact(e)) => Number::Exact(t - v - e),
        _ => Number::Approx(total.to_f64() - r.value.to_f64() - r.remainder.to_f64()),
    })
}

/// Residual of the mean-value form `value/(b-a) - mean(f) = -E/(b-a)`,
/// i.e. left side minus right side. Equals `-identity_residual/(b-a)`.
pub fn equation_residual(spec: &RuleSpec, f: &SmoothFn) -> Result<Number> {
    Ok(match identity_residual(spec, f)? {
        Number::Exact(r) => Number::Exact(-r / spec.width()),
        Number::Approx(r) => Number::Approx(-r / to_f64(&spec.width())),
    })
}

/// Uniform composite rule: the node keeps its relative position in every
/// panel; `remainder` is the reference integral minus the summed value.
pub fn composite_rule(spec: &RuleSpec, f: &SmoothFn, panels: usize) -> Result<RuleResult> {
    spec.validate()?;
    if panels == 0 {
        return Err(Error::Domain("panels must be at least 1".into()));
    }
    let width = spec.width();
    let h = &width / int(panels as i64);
    let rel = (&spec.x - &spec.a) / &width;
    let panel_spec = |i: usize| {
        let lo = &spec.a + &h * int(i as i64);
        let hi = if i + 1 == panels { spec.b.clone() } else { &lo + &h };
        let x = &lo + &rel * &h;
        RuleSpec { a: lo, b: hi, x, ..spec.clone() }
    };
    let total = reference_integral(f, &spec.a, &spec.b)?;
    if f.is_exact() {
        let mut value = int(0);
        for i in 0..panels {
            value += rule_value::<Rational>(&panel_spec(i), f)?;
        }
        let remainder = match &total {
            Number::Exact(t) => Number::Exact(t - &value),
            Number::Approx(t) => Number::Approx(t - to_f64(&value)),
        };
        return Ok(RuleResult { value: Number::Exact(value), remainder, exact: true });
    }
    let values = (0..panels).map(|i| rule_value::<f64>(&panel_spec(i), f)).collect::<Result<Vec<f64>>>()?;
    let value = oracle::pairwise_sum(&values);
    Ok(RuleResult { value: Number::Approx(value), remainder: Number::Approx(total.to_f64() - value), exact: false })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::appell::power_sequence;
    use crate::rational::{rat, RationalPoly};

    fn sq() -> SmoothFn {
        SmoothFn::poly(RationalPoly::from_ints(&[0, 0, 1]))
    }

    fn g_spec(n: usize, x: Rational) -> RuleSpec {
        RuleSpec::new(n, int(0), int(1), x, RuleVariant::G)
    }

    #[test]
    fn correction_g_examples() {
        let (a, b) = (int(0), int(1));
        assert_eq!(correction_g(1, 2, &int(0), &a, &b, &sq()).unwrap(), rat(1, 4));
        // f' vanishes at both ends of [-1, 1] for f = t^2 - t^4/2... use f = (t^2-1)^2
        let f = SmoothFn::poly(RationalPoly::from_ints(&[1, 0, -2, 0, 1]));
        assert_eq!(correction_g(2, 4, &rat(-1, 2), &int(-1), &int(1), &f).unwrap(), int(0));
        let f = SmoothFn::poly(RationalPoly::from_ints(&[3, -1, 2]));
        let v = correction_g(1, 3, &rat(1, 2), &a, &b, &f).unwrap();
        assert_eq!(v, int(2) / int(2) * (f.derivative_exact(&a, 0).unwrap() + f.derivative_exact(&b, 0).unwrap()));
        assert!(matches!(correction_g(2, 2, &int(0), &a, &b, &sq()), Err(Error::Domain(_))));
    }

    #[test]
    fn presets_match_general_form() {
        let f = SmoothFn::poly(RationalPoly::from_ints(&[1, -3, 0, 5, 2, -1]));
        for (a, b) in [(int(0), int(1)), (int(-1), int(2))] {
            for preset in NodePreset::ALL {
                let x = preset.node(&a, &b);
                for n in 2..=5 {
                    for k in 1..n {
                        assert_eq!(
                            correction_g_preset(preset, k, n, &a, &b, &f).unwrap(),
                            correction_g(k, n, &x, &a, &b, &f).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn correction_t_and_ftilde_examples() {
        let (a, b) = (int(0), int(1));
        let p0 = power_sequence(&int(0), 2);
        assert_eq!(correction_t(1, &int(0), &a, &b, &sq(), &p0).unwrap(), int(-1));
        let mid = power_sequence(&rat(1, 2), 2);
        assert_eq!(correction_t(1, &rat(1, 2), &a, &b, &sq(), &mid).unwrap(), int(0));
        assert_eq!(correction_ftilde(1, 2, &a, &b, &sq(), &p0).unwrap(), int(1));
        assert_eq!(correction_ftilde(1, 2, &a, &b, &sq(), &mid).unwrap(), rat(1, 2));
    }

    #[test]
    fn correction_fink_examples() {
        let (a, b, x) = (int(0), int(1), rat(1, 2));
        assert_eq!(correction_f_fink(1, 2, &x, &a, &b, &sq(), FinkFactorial::K).unwrap(), rat(1, 2));
        assert_eq!(correction_f_fink(1, 2, &x, &a, &b, &sq(), FinkFactorial::PrintedN).unwrap(), rat(1, 4));
        let c = SmoothFn::poly(RationalPoly::constant(int(7)));
        assert_eq!(correction_f_fink(3, 4, &x, &a, &b, &c, FinkFactorial::K).unwrap(), int(0));
    }

    #[test]
    fn two_point_examples() {
        let r = quad_two_point(&g_spec(2, int(0)), &sq()).unwrap();
        assert_eq!(r.value, Number::Exact(rat(3, 8)));
        assert_eq!(r.remainder, Number::Exact(rat(-1, 24)));
        assert!(r.exact);
        let lin = SmoothFn::poly(RationalPoly::t());
        let r = quad_two_point(&g_spec(1, rat(1, 5)), &lin).unwrap();
        assert_eq!(r.value, Number::Exact(rat(1, 2)));
        assert!(r.remainder.is_exact_zero());
        let tf = RuleSpec::new(2, int(0), int(1), int(0), RuleVariant::TF(power_sequence(&int(0), 1)));
        let r = quad_two_point(&tf, &sq()).unwrap();
        assert_eq!(r.value, Number::Exact(rat(1, 4)));
        assert_eq!(r.remainder, Number::Exact(rat(1, 12)));
        assert!(identity_residual(&tf, &sq()).unwrap().is_exact_zero());
    }

    #[test]
    fn printed_kernel_residual() {
        let spec = g_spec(2, int(0)).with_kernel(KernelVariant::AsPrinted);
        assert_eq!(remainder_eval(&spec, &sq()).unwrap(), Number::Exact(rat(1, 12)));
        assert_eq!(identity_residual(&spec, &sq()).unwrap(), Number::Exact(rat(-1, 8)));
        assert!(identity_residual(&g_spec(2, int(0)), &sq()).unwrap().is_exact_zero());
    }

    #[test]
    fn fink_examples() {
        let r = quad_fink(2, &rat(1, 2), &int(0), &int(1), &sq()).unwrap();
        assert_eq!(r.value, Number::Exact(rat(3, 8)));
        assert_eq!(r.remainder, Number::Exact(rat(-1, 24)));
        let printed = RuleSpec::new(2, int(0), int(1), rat(1, 2), RuleVariant::Fink)
            .with_fink_factorial(FinkFactorial::PrintedN);
        assert_eq!(identity_residual(&printed, &sq()).unwrap(), Number::Exact(rat(1, 8)));
        assert_eq!(equation_residual(&printed, &sq()).unwrap(), Number::Exact(rat(-1, 8)));
        let lin = SmoothFn::poly(RationalPoly::t());
        let r = quad_fink(1, &rat(1, 2), &int(0), &int(1), &lin).unwrap();
        assert!(r.remainder.is_exact_zero());
    }

    #[test]
    fn node_range_is_an_error() {
        assert!(matches!(quad_two_point(&g_spec(2, rat(3, 4)), &sq()), Err(Error::NodeRange { .. })));
        let fink = RuleSpec::new(2, int(0), int(1), rat(3, 4), RuleVariant::Fink);
        assert!(quad_two_point(&fink, &sq()).is_ok());
    }

    #[test]
    fn tf_needs_long_enough_sequence() {
        let spec = RuleSpec::new(3, int(0), int(1), int(0), RuleVariant::TF(power_sequence(&int(0), 1)));
        assert!(matches!(quad_two_point(&spec, &sq()), Err(Error::InvalidSequence(_))));
    }

    #[test]
    fn numeric_path_closes_identity() {
        let f = SmoothFn::exp(1.0);
        for variant in [RuleVariant::G, RuleVariant::TF(power_sequence(&rat(1, 2), 4)), RuleVariant::Fink] {
            for n in 1..=4 {
                let spec = RuleSpec::new(n, int(0), int(1), rat(1, 4), variant.clone());
                let r = identity_residual(&spec, &f).unwrap();
                assert!(r.to_f64().abs() < 1e-12, "{} n={n}: {r}", variant.name());
            }
        }
    }

    #[test]
    fn composite_examples() {
        let spec = g_spec(1, rat(1, 2));
        let r = composite_rule(&spec, &sq(), 2).unwrap();
        assert_eq!(r.value, Number::Exact(rat(5, 16)));
        let one = composite_rule(&g_spec(3, rat(1, 4)), &SmoothFn::exp(1.0), 1).unwrap();
        let direct = quad_two_point(&g_spec(3, rat(1, 4)), &SmoothFn::exp(1.0)).unwrap();
        assert_eq!(one.value, direct.value);
    }
}
