//! Harmonic (Appell) polynomial sequences: `P_0 = 1`, `P_k' = P_{k-1}`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::oracle;
use crate::rational::{factorial, int, parse_rational, to_f64, Rational, RationalPoly};

#[derive(Debug, Clone, PartialEq)]
pub struct HarmonicSeq {
    polys: Vec<RationalPoly>,
}

impl HarmonicSeq {
    /// Wraps polynomials without checking the Appell condition. Use
    /// [`HarmonicSeq::validate`] or [`HarmonicSeq::try_new`] before relying
    /// on it.
    pub fn from_polys(polys: Vec<RationalPoly>) -> Self {
        HarmonicSeq { polys }
    }

    pub fn try_new(polys: Vec<RationalPoly>) -> Result<Self> {
        let seq = HarmonicSeq { polys };
        if seq.validate() {
            Ok(seq)
        } else {
            Err(Error::InvalidSequence(format!("not harmonic: {seq}")))
        }
    }

    pub fn polys(&self) -> &[RationalPoly] {
        &self.polys
    }

    /// Highest index held; `None` for an empty list.
    pub fn order(&self) -> Option<usize> {
        self.polys.len().checked_sub(1)
    }

    pub fn get(&self, k: usize) -> Result<&RationalPoly> {
        self.polys.get(k).ok_or_else(|| {
            Error::InvalidSequence(format!("P_{k} requested but sequence stops at {}", self.polys.len() as isize - 1))
        })
    }

    /// `P_0 = 1` and `P_k' = P_{k-1}` for every held `k`, checked exactly.
    pub fn validate(&self) -> bool {
        match self.polys.first() {
            Some(p0) if *p0 == RationalPoly::one() => {}
            _ => return false,
        }
        self.polys.windows(2).all(|w| w[1].derive() == w[0])
    }

    /// `P_k(t) = (-1)^k P_k(a+b-t)` for every held `k`.
    pub fn check_symmetry(&self, a: &Rational, b: &Rational) -> bool {
        self.polys.iter().enumerate().all(|(k, p)| {
            let r = p.reflect(a, b);
            if k % 2 == 0 {
                *p == r
            } else {
                *p == -&r
            }
        })
    }

    /// Appends antiderivatives up to index `to`. A sequence symmetric on
    /// `[a, b]` stays symmetric (each new `P_k` vanishes at the midpoint);
    /// otherwise the new constants are zero.
    pub fn extend(&self, to: usize, a: &Rational, b: &Rational) -> Result<HarmonicSeq> {
        let m = self
            .order()
            .ok_or_else(|| Error::InvalidSequence("cannot extend an empty sequence".into()))?;
        if to <= m {
            return Err(Error::Domain(format!("extend target {to} must exceed current order {m}")));
        }
        let symmetric = self.check_symmetry(a, b);
        let mid = (a + b) / int(2);
        let mut polys = self.polys.clone();
        for _ in m..to {
            let mut next = polys.last().expect("non-empty").antiderivative();
            if symmetric {
                next = &next - &RationalPoly::constant(next.eval(&mid));
            }
            polys.push(next);
        }
        Ok(HarmonicSeq { polys })
    }

    /// `L_q` norm of `P_k` on `[a, b]`; `q = ∞` gives the sup norm.
    pub fn seq_norm(&self, k: usize, q: f64, a: f64, b: f64) -> Result<f64> {
        let p = self.get(k)?;
        if !(q >= 1.0) {
            return Err(Error::Domain(format!("norm exponent q must be >= 1, got {q}")));
        }
        oracle::lp_norm(|t| p.eval_f64(t), q, a, b, &[], oracle::DEFAULT_TOL)
    }
}

/// `P_k(t) = (t - y)^k / k!` for `k = 0..=m`.
pub fn power_sequence(y: &Rational, m: usize) -> HarmonicSeq {
    let base = RationalPoly::linear_root(y);
    HarmonicSeq {
        polys: (0..=m).map(|k| base.pow(k).scale(&(int(1) / factorial(k)))).collect(),
    }
}

/// Parses `power:<center>` or `seq:<poly>;<poly>;...` (each poly as
/// comma-separated ascending coefficients). `power` sequences are built up
/// to `order`.
pub fn parse_seq(spec: &str, order: usize) -> Result<HarmonicSeq> {
    let (tag, body) = spec
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("sequence spec '{spec}' needs a 'power:' or 'seq:' prefix")))?;
    match tag.trim() {
        "power" => Ok(power_sequence(&parse_rational(body)?, order)),
        "seq" => {
            let polys = body.split(';').map(|p| p.parse()).collect::<Result<Vec<RationalPoly>>>()?;
            HarmonicSeq::try_new(polys)
        }
        other => Err(Error::Parse(format!("unknown sequence kind '{other}'"))),
    }
}

impl fmt::Display for HarmonicSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("seq:")?;
        for (i, p) in self.polys.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for HarmonicSeq {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_seq(s, crate::funcmodel::DEFAULT_MAX_ORDER)
    }
}

/// Value of `P_k` at a rational point as `f64`; convenience for reports.
pub fn eval_at(seq: &HarmonicSeq, k: usize, t: &Rational) -> Result<f64> {
    Ok(to_f64(&seq.get(k)?.eval(t)))
}
