//! Floating-point ground truth: adaptive Gauss–Kronrod integration, L_p
//! norms, suprema on piecewise-smooth functions and empirical convergence
//! orders.

use crate::error::{Error, Result};

pub const DEFAULT_TOL: f64 = 1e-10;
pub const MAX_DEPTH: usize = 60;
/// Upper bound on integrand evaluations per adaptive call.
pub const MAX_EVALUATIONS: usize = 4_000_000;
/// Slack added to every floating-point acceptance comparison.
pub const ACCEPT_SLACK: f64 = 1e-9;

const SUP_GRID: usize = 4096;
const SUP_CANDIDATES: usize = 3;

// 15-point Kronrod nodes on [-1, 1], non-negative half; the 7-point Gauss
// rule uses the odd-indexed ones.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_838_258_730,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: f64,
    pub abs_error_estimate: f64,
    pub evaluations: usize,
}

/// One G7/K15 panel: `(kronrod, |kronrod - gauss|)`.
fn gk15<G: Fn(f64) -> f64>(g: &G, lo: f64, hi: f64) -> (f64, f64) {
    let center = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let fc = g(center);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for (j, (&x, &w)) in XGK.iter().zip(WGK.iter()).take(7).enumerate() {
        let dx = half * x;
        let pair = g(center - dx) + g(center + dx);
        kronrod += w * pair;
        if j % 2 == 1 {
            gauss += WG[j / 2] * pair;
        }
    }
    (kronrod * half, ((kronrod - gauss) * half).abs())
}

/// Adaptive bisection on `[a, b]` (signed: `b < a` negates).
pub fn integrate_adaptive<G: Fn(f64) -> f64>(g: G, a: f64, b: f64, tol: f64) -> Result<QuadResult> {
    integrate_with_breaks(g, a, b, &[], tol)
}

/// Adaptive integration that first splits `[a, b]` at the supplied
/// breakpoints, where the integrand may be only piecewise smooth.
pub fn integrate_with_breaks<G: Fn(f64) -> f64>(
    g: G,
    a: f64,
    b: f64,
    breaks: &[f64],
    tol: f64,
) -> Result<QuadResult> {
    if !(tol > 0.0) {
        return Err(Error::Domain(format!("tolerance must be positive, got {tol}")));
    }
    if a == b {
        return Ok(QuadResult { value: 0.0, abs_error_estimate: 0.0, evaluations: 0 });
    }
    if b < a {
        let r = integrate_with_breaks(g, b, a, breaks, tol)?;
        return Ok(QuadResult { value: -r.value, ..r });
    }
    let total = b - a;
    let mut value_terms = Vec::new();
    let mut estimate = 0.0;
    let mut evaluations = 0;
    // (lo, hi, depth); processed left to right for a reproducible sum
    let mut stack: Vec<(f64, f64, usize)> = piece_bounds(a, b, breaks)
        .into_iter()
        .rev()
        .map(|(lo, hi)| (lo, hi, 0))
        .collect();
    while let Some((lo, hi, depth)) = stack.pop() {
        let (val, err) = gk15(&g, lo, hi);
        evaluations += 15;
        if !val.is_finite() {
            return Err(Error::Domain(format!("integrand not finite on [{lo}, {hi}]")));
        }
        let local_tol = tol * (hi - lo) / total;
        let roundoff = 50.0 * f64::EPSILON * val.abs();
        if err <= local_tol || err <= roundoff {
            value_terms.push(val);
            estimate += err;
            continue;
        }
        if depth >= MAX_DEPTH || evaluations >= MAX_EVALUATIONS {
            return Err(Error::MaxDepth { tol, depth: MAX_DEPTH, estimate: err });
        }
        let mid = 0.5 * (lo + hi);
        stack.push((mid, hi, depth + 1));
        stack.push((lo, mid, depth + 1));
    }
    Ok(QuadResult { value: pairwise_sum(&value_terms), abs_error_estimate: estimate, evaluations })
}

/// Sorted, deduplicated sub-intervals of `[a, b]` cut at interior breakpoints.
pub fn piece_bounds(a: f64, b: f64, breaks: &[f64]) -> Vec<(f64, f64)> {
    let mut cuts: Vec<f64> = breaks.iter().copied().filter(|&c| c > a && c < b).collect();
    cuts.sort_by(f64::total_cmp);
    cuts.dedup();
    let mut edges = Vec::with_capacity(cuts.len() + 2);
    edges.push(a);
    edges.extend(cuts);
    edges.push(b);
    edges.windows(2).map(|w| (w[0], w[1])).collect()
}

/// `(∫|g|^p)^{1/p}`; `p = ∞` delegates to [`sup_on_interval`] of `|g|`.
pub fn lp_norm<G: Fn(f64) -> f64>(g: G, p: f64, a: f64, b: f64, breaks: &[f64], tol: f64) -> Result<f64> {
    if !(p >= 1.0) {
        return Err(Error::Domain(format!("L_p norm needs p >= 1, got {p}")));
    }
    if p.is_infinite() {
        return Ok(sup_on_interval(|t| g(t).abs(), a, b, breaks));
    }
    let r = integrate_with_breaks(|t| g(t).abs().powf(p), a, b, breaks, tol)?;
    Ok(r.value.max(0.0).powf(1.0 / p))
}

/// Essential supremum of `g` on `[a, b]`, with `g` continuous on each piece
/// between breakpoints.
///
/// Each piece is sampled on a dense grid; the best few cells are refined by
/// golden-section search. Interior breakpoints are approached from inside
/// their pieces so that jump conventions do not leak into the result.
pub fn sup_on_interval<G: Fn(f64) -> f64>(g: G, a: f64, b: f64, breaks: &[f64]) -> f64 {
    let (a, b) = if a <= b { (a, b) } else { (b, a) };
    if a == b {
        return g(a);
    }
    let mut best = f64::NEG_INFINITY;
    for (lo, hi) in piece_bounds(a, b, breaks) {
        let width = hi - lo;
        let nudge = width * 1e-13;
        let point = |i: usize| -> f64 {
            match i {
                0 if lo == a => a,
                0 => lo + nudge,
                i if i == SUP_GRID && hi == b => b,
                i if i == SUP_GRID => hi - nudge,
                i => lo + width * i as f64 / SUP_GRID as f64,
            }
        };
        let samples: Vec<(usize, f64)> = (0..=SUP_GRID).map(|i| (i, g(point(i)))).collect();
        let mut order: Vec<&(usize, f64)> = samples.iter().filter(|s| s.1.is_finite()).collect();
        order.sort_by(|x, y| y.1.total_cmp(&x.1));
        for &&(i, v) in order.iter().take(SUP_CANDIDATES) {
            best = best.max(v);
            let left = point(i.saturating_sub(1));
            let right = point((i + 1).min(SUP_GRID));
            best = best.max(golden_max(&g, left, right));
        }
    }
    best
}

/// Essential infimum, as `-sup(-g)`.
pub fn inf_on_interval<G: Fn(f64) -> f64>(g: G, a: f64, b: f64, breaks: &[f64]) -> f64 {
    -sup_on_interval(|t| -g(t), a, b, breaks)
}

fn golden_max<G: Fn(f64) -> f64>(g: &G, mut lo: f64, mut hi: f64) -> f64 {
    let ratio = 0.5 * (5f64.sqrt() - 1.0);
    let mut x1 = hi - ratio * (hi - lo);
    let mut x2 = lo + ratio * (hi - lo);
    let (mut f1, mut f2) = (g(x1), g(x2));
    let mut best = f1.max(f2);
    for _ in 0..80 {
        if hi - lo <= 1e-15 * (1.0 + lo.abs().max(hi.abs())) {
            break;
        }
        if f1 >= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - ratio * (hi - lo);
            f1 = g(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + ratio * (hi - lo);
            f2 = g(x2);
        }
        best = best.max(f1).max(f2);
    }
    best
}

/// Least-squares fit of `log|error|` against `log(h)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceFit {
    pub slope: f64,
    pub used: usize,
    /// Panel counts whose error underflowed and were treated as exact.
    pub excluded: Vec<usize>,
}

/// Empirical order from `(panel_count, |error|)` samples on an interval of
/// the given width (`h = width / panels`).
pub fn convergence_order(samples: &[(usize, f64)], width: f64) -> Result<ConvergenceFit> {
    let mut excluded = Vec::new();
    let mut pts = Vec::new();
    for &(panels, err) in samples {
        let err = err.abs();
        if panels == 0 {
            return Err(Error::Domain("panel count must be positive".into()));
        }
        if err < 1e3 * f64::MIN_POSITIVE || !err.is_finite() {
            excluded.push(panels);
        } else {
            pts.push(((width / panels as f64).ln(), err.ln()));
        }
    }
    if pts.len() < 3 {
        return Err(Error::Degenerate(format!(
            "need at least 3 nonzero errors for a slope, got {} (exact panels: {:?})",
            pts.len(),
            excluded
        )));
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    if sxx == 0.0 {
        return Err(Error::Degenerate("all samples share one panel count".into()));
    }
    Ok(ConvergenceFit { slope: sxy / sxx, used: pts.len(), excluded })
}

/// Left-to-right pairwise reduction; the grouping depends only on length.
pub fn pairwise_sum(values: &[f64]) -> f64 {
    match values.len() {
        0 => 0.0,
        1 => values[0],
        n if n <= 8 => values.iter().sum(),
        n => {
            let (l, r) = values.split_at(n / 2);
            pairwise_sum(l) + pairwise_sum(r)
        }
    }
}
