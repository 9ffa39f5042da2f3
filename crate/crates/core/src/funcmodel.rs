//! Test functions with closed-form derivative towers.
//!
//! A [`SmoothFn`] is either an exact rational polynomial or one entry of a
//! small transcendental catalog (scaled exponential, sine, cosine and
//! reciprocal). Polynomials serve exact rational derivatives; catalog
//! entries serve `f64` derivatives from their closed forms.

use std::fmt;

use crate::error::{Error, Result};
use crate::rational::{factorial, to_f64, Rational, RationalPoly};

pub const DEFAULT_MAX_ORDER: usize = 12;

#[derive(Debug, Clone, PartialEq)]
pub enum FnKind {
    Poly(RationalPoly),
    /// `scale * exp(rate * t)`
    Exp { rate: f64, scale: f64 },
    /// `scale * sin(freq * t + phase)`
    Sin { freq: f64, phase: f64, scale: f64 },
    /// `scale * cos(freq * t + phase)`
    Cos { freq: f64, phase: f64, scale: f64 },
    /// `scale / (t + shift)`
    Recip { shift: f64, scale: f64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct SmoothFn {
    pub kind: FnKind,
    pub max_order: usize,
}

/// Value and derivatives `0..=m` at one point.
#[derive(Debug, Clone, PartialEq)]
pub struct Jet {
    pub point: f64,
    pub values: Vec<f64>,
}

impl SmoothFn {
    pub fn new(kind: FnKind) -> Self {
        SmoothFn { kind, max_order: DEFAULT_MAX_ORDER }
    }

    pub fn with_max_order(mut self, max_order: usize) -> Self {
        self.max_order = max_order;
        self
    }

    pub fn poly(p: RationalPoly) -> Self {
        Self::new(FnKind::Poly(p))
    }

    pub fn exp(rate: f64) -> Self {
        Self::new(FnKind::Exp { rate, scale: 1.0 })
    }

    pub fn sin(freq: f64, phase: f64) -> Self {
        Self::new(FnKind::Sin { freq, phase, scale: 1.0 })
    }

    pub fn cos(freq: f64, phase: f64) -> Self {
        Self::new(FnKind::Cos { freq, phase, scale: 1.0 })
    }

    pub fn recip(shift: f64) -> Self {
        Self::new(FnKind::Recip { shift, scale: 1.0 })
    }

    /// The backing polynomial when the function is exact.
    pub fn as_poly(&self) -> Option<&RationalPoly> {
        match &self.kind {
            FnKind::Poly(p) => Some(p),
            _ => None,
        }
    }

    pub fn is_exact(&self) -> bool {
        self.as_poly().is_some()
    }

    fn check_order(&self, j: usize) -> Result<()> {
        if j > self.max_order + 1 {
            return Err(Error::OrderExceeded { requested: j, max: self.max_order + 1 });
        }
        Ok(())
    }

    /// Rejects intervals on which the function has a pole.
    pub fn check_interval(&self, a: f64, b: f64) -> Result<()> {
        if let FnKind::Recip { shift, .. } = self.kind {
            let (lo, hi) = (a.min(b) + shift, a.max(b) + shift);
            if lo <= 0.0 && hi >= 0.0 {
                return Err(Error::Domain(format!(
                    "pole of 1/(t + {shift}) at t = {} lies in [{a}, {b}]",
                    -shift
                )));
            }
        }
        Ok(())
    }

    /// `f^{(j)}(t)` in floating point.
    pub fn derivative(&self, t: f64, j: usize) -> Result<f64> {
        self.check_order(j)?;
        Ok(match &self.kind {
            FnKind::Poly(p) => p.derive_n(j).eval_f64(t),
            FnKind::Exp { rate, scale } => scale * rate.powi(j as i32) * (rate * t).exp(),
            FnKind::Sin { freq, phase, scale } => {
                scale * freq.powi(j as i32) * shifted_sin(freq * t + phase, j)
            }
            FnKind::Cos { freq, phase, scale } => {
                scale * freq.powi(j as i32) * shifted_sin(freq * t + phase, j + 1)
            }
            FnKind::Recip { shift, scale } => {
                let u = t + shift;
                if u == 0.0 {
                    return Err(Error::Domain(format!("pole of 1/(t + {shift}) at t = {t}")));
                }
                let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
                scale * sign * to_f64(&factorial(j)) / u.powi(j as i32 + 1)
            }
        })
    }

    /// `f^{(j)}(t)` exactly; only polynomials qualify.
    pub fn derivative_exact(&self, t: &Rational, j: usize) -> Result<Rational> {
        self.check_order(j)?;
        match &self.kind {
            FnKind::Poly(p) => Ok(p.derive_n(j).eval(t)),
            _ => Err(Error::NotExact(format!("{self} has no rational derivative tower"))),
        }
    }

    /// `[f(t), f'(t), ..., f^{(m)}(t)]`.
    pub fn jet_eval(&self, t: f64, m: usize) -> Result<Jet> {
        self.check_order(m)?;
        let values = (0..=m).map(|j| self.derivative(t, j)).collect::<Result<Vec<_>>>()?;
        Ok(Jet { point: t, values })
    }

    /// Returns `g` with `g(t) = f(a + b - t)`, hence
    /// `g^{(j)}(t) = (-1)^j f^{(j)}(a + b - t)`.
    pub fn reflect_fn(&self, a: &Rational, b: &Rational) -> Result<SmoothFn> {
        let s = to_f64(&(a + b));
        let kind = match &self.kind {
            FnKind::Poly(p) => FnKind::Poly(p.reflect(a, b)),
            FnKind::Exp { rate, scale } => {
                let factor = (rate * s).exp();
                if !factor.is_finite() {
                    return Err(Error::Unrepresentable(format!(
                        "exp({rate} * {s}) overflows the amplitude"
                    )));
                }
                FnKind::Exp { rate: -rate, scale: scale * factor }
            }
            FnKind::Sin { freq, phase, scale } => {
                FnKind::Sin { freq: -freq, phase: freq * s + phase, scale: *scale }
            }
            FnKind::Cos { freq, phase, scale } => {
                FnKind::Cos { freq: -freq, phase: freq * s + phase, scale: *scale }
            }
            // c / (s - t + shift) = -c / (t - (s + shift))
            FnKind::Recip { shift, scale } => FnKind::Recip { shift: -(s + shift), scale: -scale },
        };
        Ok(SmoothFn { kind, max_order: self.max_order })
    }

    /// Closed-form `∫_a^b f`.
    pub fn integral(&self, a: f64, b: f64) -> Result<f64> {
        self.check_interval(a, b)?;
        Ok(match &self.kind {
            FnKind::Poly(p) => {
                let anti = p.antiderivative();
                anti.eval_f64(b) - anti.eval_f64(a)
            }
            FnKind::Exp { rate, scale } => {
                if *rate == 0.0 {
                    scale * (b - a)
                } else {
                    scale * ((rate * b).exp() - (rate * a).exp()) / rate
                }
            }
            FnKind::Sin { freq, phase, scale } => {
                if *freq == 0.0 {
                    scale * phase.sin() * (b - a)
                } else {
                    scale * ((freq * a + phase).cos() - (freq * b + phase).cos()) / freq
                }
            }
            FnKind::Cos { freq, phase, scale } => {
                if *freq == 0.0 {
                    scale * phase.cos() * (b - a)
                } else {
                    scale * ((freq * b + phase).sin() - (freq * a + phase).sin()) / freq
                }
            }
            FnKind::Recip { shift, scale } => scale * ((b + shift) / (a + shift)).abs().ln(),
        })
    }

    /// Exact `∫_a^b f` for polynomials.
    pub fn integral_exact(&self, a: &Rational, b: &Rational) -> Result<Rational> {
        match &self.kind {
            FnKind::Poly(p) => Ok(p.integrate(a, b)),
            _ => Err(Error::NotExact(format!("{self} has no rational antiderivative"))),
        }
    }

    /// Parses `poly:0,0,1`, `exp:1.0`, `sin:3.0:0.0`, `cos:2:0.5`,
    /// `recip:2.0`. Transcendental kinds accept a trailing `:scale`.
    pub fn parse(spec: &str) -> Result<Self> {
        let (kind, rest) = spec
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("function spec '{spec}' lacks a kind prefix")))?;
        let nums = |expected: usize| -> Result<Vec<f64>> {
            let parts: Vec<&str> = rest.split(':').collect();
            if parts.len() != expected && parts.len() != expected + 1 {
                return Err(Error::Parse(format!(
                    "'{spec}': expected {expected} parameter(s) plus optional scale"
                )));
            }
            let mut out = parts
                .iter()
                .map(|p| {
                    p.trim()
                        .parse::<f64>()
                        .map_err(|_| Error::Parse(format!("'{spec}': bad number '{p}'")))
                })
                .collect::<Result<Vec<_>>>()?;
            if out.len() == expected {
                out.push(1.0);
            }
            Ok(out)
        };
        let kind = match kind.trim() {
            "poly" => FnKind::Poly(RationalPoly::parse(rest)?),
            "exp" => {
                let v = nums(1)?;
                FnKind::Exp { rate: v[0], scale: v[1] }
            }
            "sin" => {
                let v = nums(2)?;
                FnKind::Sin { freq: v[0], phase: v[1], scale: v[2] }
            }
            "cos" => {
                let v = nums(2)?;
                FnKind::Cos { freq: v[0], phase: v[1], scale: v[2] }
            }
            "recip" => {
                let v = nums(1)?;
                FnKind::Recip { shift: v[0], scale: v[1] }
            }
            other => return Err(Error::Parse(format!("unknown function kind '{other}'"))),
        };
        Ok(Self::new(kind))
    }
}

impl fmt::Display for SmoothFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let scaled = |f: &mut fmt::Formatter<'_>, s: f64| {
            if s == 1.0 {
                Ok(())
            } else {
                write!(f, ":{s}")
            }
        };
        match &self.kind {
            FnKind::Poly(p) => write!(f, "poly:{p}"),
            FnKind::Exp { rate, scale } => {
                write!(f, "exp:{rate}")?;
                scaled(f, *scale)
            }
            FnKind::Sin { freq, phase, scale } => {
                write!(f, "sin:{freq}:{phase}")?;
                scaled(f, *scale)
            }
            FnKind::Cos { freq, phase, scale } => {
                write!(f, "cos:{freq}:{phase}")?;
                scaled(f, *scale)
            }
            FnKind::Recip { shift, scale } => {
                write!(f, "recip:{shift}")?;
                scaled(f, *scale)
            }
        }
    }
}

/// `sin(theta + j*pi/2)` via the exact four-cycle.
fn shifted_sin(theta: f64, j: usize) -> f64 {
    match j % 4 {
        0 => theta.sin(),
        1 => theta.cos(),
        2 => -theta.sin(),
        _ => -theta.cos(),
    }
}

/// Free-function form of [`SmoothFn::jet_eval`].
pub fn jet_eval(f: &SmoothFn, t: f64, m: usize) -> Result<Jet> {
    f.jet_eval(t, m)
}

/// Free-function form of [`SmoothFn::reflect_fn`].
pub fn reflect_fn(f: &SmoothFn, a: &Rational, b: &Rational) -> Result<SmoothFn> {
    f.reflect_fn(a, b)
}
