//! Gaussian channel parameterization, the achievable-region and
//! converse-region bound families, interference-regime classification, and
//! the inner/outer region sweeps.
//!
//! Everything is linear-scale; dB conversion happens at the CLI edge. Logs
//! are base 2.

use crate::geometry::{ConvexRateRegion, LinearBound, RegionUnion};
use crate::ld_region::ThetaVector;
use crate::{Error, Result};

/// log2(2*pi*e), the additive constant of the entropy-based converse bounds.
pub const LOG2_2PIE: f64 = 4.094344561845359;

fn half_log2(x: f64) -> f64 {
    0.5 * x.log2()
}

/// The six parameters of the Gaussian model, linear scale.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GaussParams {
    /// Forward SNR of pair 1.
    pub snr1: f64,
    /// Forward SNR of pair 2.
    pub snr2: f64,
    /// Interference-to-noise ratio from transmitter 2 at receiver 1.
    pub inr12: f64,
    /// Interference-to-noise ratio from transmitter 1 at receiver 2.
    pub inr21: f64,
    /// Feedback SNR of pair 1.
    pub snr1_fb: f64,
    /// Feedback SNR of pair 2.
    pub snr2_fb: f64,
}

impl GaussParams {
    pub fn new(
        snr1: f64,
        snr2: f64,
        inr12: f64,
        inr21: f64,
        snr1_fb: f64,
        snr2_fb: f64,
    ) -> Result<Self> {
        let p = Self {
            snr1,
            snr2,
            inr12,
            inr21,
            snr1_fb,
            snr2_fb,
        };
        for (name, v) in [
            ("snr1", snr1),
            ("snr2", snr2),
            ("inr12", inr12),
            ("inr21", inr21),
        ] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::InvalidParam(format!(
                    "{name} must be finite and > 0, got {v}"
                )));
            }
        }
        for (name, v) in [("snr1_fb", snr1_fb), ("snr2_fb", snr2_fb)] {
            if !(v.is_finite() && v >= 0.0) {
                return Err(Error::InvalidParam(format!(
                    "{name} must be finite and >= 0, got {v}"
                )));
            }
        }
        Ok(p)
    }

    /// Symmetric parameter set used by the gap surface and GDoF sweeps.
    pub fn symmetric(snr: f64, inr: f64, snr_fb: f64) -> Result<Self> {
        Self::new(snr, snr, inr, inr, snr_fb, snr_fb)
    }

    /// Forward SNR of user `i` (1-based).
    pub fn snr(&self, i: usize) -> f64 {
        match i {
            1 => self.snr1,
            2 => self.snr2,
            _ => unreachable!(),
        }
    }

    /// INR at receiver `i` (the interference user `i` suffers), `INR_ij`.
    pub fn inr_in(&self, i: usize) -> f64 {
        match i {
            1 => self.inr12,
            2 => self.inr21,
            _ => unreachable!(),
        }
    }

    /// INR caused by user `i` at the other receiver, `INR_ji`.
    pub fn inr_out(&self, i: usize) -> f64 {
        self.inr_in(3 - i)
    }

    pub fn snr_fb(&self, i: usize) -> f64 {
        match i {
            1 => self.snr1_fb,
            2 => self.snr2_fb,
            _ => unreachable!(),
        }
    }

    /// Swaps the user labels.
    pub fn swapped(&self) -> Self {
        Self {
            snr1: self.snr2,
            snr2: self.snr1,
            inr12: self.inr21,
            inr21: self.inr12,
            snr1_fb: self.snr2_fb,
            snr2_fb: self.snr1_fb,
        }
    }

    /// Upper end of the valid correlation interval for the achievable
    /// region; collapses to zero when either INR is at most one.
    pub fn rho_max(&self) -> f64 {
        (1.0 - (1.0 / self.inr12).max(1.0 / self.inr21)).max(0.0)
    }

    /// Residual-interference constant `b3` of user `i`, a derived constant
    /// of the parameter set.
    pub fn b3_const(&self, i: usize) -> f64 {
        let s = self.snr(i);
        let io = self.inr_out(i);
        s - 2.0 * (s * io).sqrt() + io
    }
}

/// Derives the six parameters from channel coefficients.
pub fn from_coefficients(
    h11_fwd: f64,
    h22_fwd: f64,
    h12: f64,
    h21: f64,
    h11_fb: f64,
    h22_fb: f64,
) -> GaussParams {
    let fb = |h_fb: f64, h_fwd: f64, h_cross: f64| {
        h_fb * h_fb * (h_fwd * h_fwd + 2.0 * h_fwd * h_cross + h_cross * h_cross + 1.0)
    };
    GaussParams {
        snr1: h11_fwd * h11_fwd,
        snr2: h22_fwd * h22_fwd,
        inr12: h12 * h12,
        inr21: h21 * h21,
        snr1_fb: fb(h11_fb, h11_fwd, h12),
        snr2_fb: fb(h22_fb, h22_fwd, h21),
    }
}

// --- b-functions -----------------------------------------------------------

/// Received-power constant of user `i`: `SNR_i + 2 rho sqrt(SNR_i INR_ij) + INR_ij`.
pub fn b1(p: &GaussParams, i: usize, rho: f64) -> f64 {
    let s = p.snr(i);
    let ii = p.inr_in(i);
    s + 2.0 * rho * (s * ii).sqrt() + ii
}

/// `(1 - rho) INR_ij - 1`; negative only in the degenerate INR <= 1 corner.
pub fn b2(p: &GaussParams, i: usize, rho: f64) -> f64 {
    (1.0 - rho) * p.inr_in(i) - 1.0
}

pub fn b4(p: &GaussParams, i: usize, rho: f64) -> f64 {
    (1.0 - rho * rho) * p.snr(i)
}

pub fn b5(p: &GaussParams, i: usize, rho: f64) -> f64 {
    (1.0 - rho * rho) * p.inr_in(i)
}

pub fn b6(p: &GaussParams, i: usize, rho: f64) -> f64 {
    let s = p.snr(i);
    let ii = p.inr_in(i);
    let io = p.inr_out(i);
    s + ii
        + 2.0 * rho * ii.sqrt() * (s.sqrt() - io.sqrt())
        + ii * io.sqrt() / s * (io.sqrt() - 2.0 * s.sqrt())
}

// --- Coding point and the achievable bound family ---------------------------

/// A point of the achievable-region parameter sweep.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CodingPoint {
    pub rho: f64,
    pub mu1: f64,
    pub mu2: f64,
}

impl CodingPoint {
    pub fn new(p: &GaussParams, rho: f64, mu1: f64, mu2: f64) -> Result<Self> {
        let rho_max = p.rho_max();
        if !(0.0..=1.0).contains(&rho) || rho > rho_max + 1e-12 {
            return Err(Error::InvalidParam(format!(
                "rho = {rho} outside [0, {rho_max}]"
            )));
        }
        for (name, m) in [("mu1", mu1), ("mu2", mu2)] {
            if !(0.0..=1.0).contains(&m) {
                return Err(Error::InvalidParam(format!("{name} = {m} outside [0, 1]")));
            }
        }
        Ok(Self { rho, mu1, mu2 })
    }

    fn mu(&self, i: usize) -> f64 {
        match i {
            1 => self.mu1,
            2 => self.mu2,
            _ => unreachable!(),
        }
    }

    /// Private-layer power of user `i`, sized to sit at the noise level of
    /// the other receiver.
    pub fn lambda_p(&self, p: &GaussParams, i: usize) -> f64 {
        (1.0 / p.inr_out(i)).min(1.0)
    }

    /// Common-layer power of user `i`.
    pub fn lambda_c(&self, p: &GaussParams, i: usize) -> f64 {
        1.0 - self.rho - self.lambda_p(p, i)
    }
}

/// The fourteen achievable-bound ingredients, evaluated at one coding point
/// with the canonical argument wiring (`a3/a4/a5` of user i carry the other
/// user's split, `a6` carries its own). Raw negative values are clamped to
/// zero: a rate bound below zero is vacuous.
#[derive(Clone, Copy, Debug)]
pub struct AValues {
    pub a1: [f64; 2],
    pub a2: [f64; 2],
    pub a3: [f64; 2],
    pub a4: [f64; 2],
    pub a5: [f64; 2],
    pub a6: [f64; 2],
    pub a7: [f64; 2],
}

pub fn a_values(p: &GaussParams, c: &CodingPoint) -> AValues {
    let rho = c.rho;
    let mut out = AValues {
        a1: [0.0; 2],
        a2: [0.0; 2],
        a3: [0.0; 2],
        a4: [0.0; 2],
        a5: [0.0; 2],
        a6: [0.0; 2],
        a7: [0.0; 2],
    };
    for i in 1..=2usize {
        let j = 3 - i;
        let s_over_io = p.snr(i) / p.inr_out(i);
        let b2i = b2(p, i, rho);
        let b2j = b2(p, j, rho);
        let mu_i = c.mu(i);
        let mu_j = c.mu(j);

        let a1 = half_log2(2.0 + s_over_io) - 0.5;
        let a2 = half_log2(b1(p, i, rho) + 1.0) - 0.5;
        let a3 = {
            let base = b1(p, i, 1.0) + 1.0;
            let num = p.snr_fb(i) * (b2i + 2.0) + base;
            let den = p.snr_fb(i) * ((1.0 - mu_j) * b2i + 2.0) + base;
            assert!(num > 0.0 && den > 0.0, "a3 log argument non-positive");
            half_log2(num / den)
        };
        let a4 = half_log2((1.0 - mu_j) * b2i + 2.0) - 0.5;
        let a5 = half_log2(2.0 + s_over_io + (1.0 - mu_j) * b2i) - 0.5;
        let a6 = half_log2(s_over_io * ((1.0 - mu_i) * b2j + 1.0) + 2.0) - 0.5;
        let a7 =
            half_log2(s_over_io * ((1.0 - mu_i) * b2j + 1.0) + (1.0 - mu_j) * b2i + 2.0) - 0.5;

        let k = i - 1;
        out.a1[k] = a1.max(0.0);
        out.a2[k] = a2.max(0.0);
        out.a3[k] = a3.max(0.0);
        out.a4[k] = a4.max(0.0);
        out.a5[k] = a5.max(0.0);
        out.a6[k] = a6.max(0.0);
        out.a7[k] = a7.max(0.0);
    }
    out
}

/// The decoding-bound vector of the Gaussian lane, for the Fourier-Motzkin
/// cross-checks.
pub fn theta_gaussian(p: &GaussParams, c: &CodingPoint) -> ThetaVector<f64> {
    let a = a_values(p, c);
    let v = ThetaVector {
        th: [a.a3, a.a2, a.a4, a.a1, a.a5, a.a6, a.a7],
    };
    v.check();
    v
}

/// The five achievable bounds at one coding point, clamped at zero.
pub fn achievable_bounds(p: &GaussParams, c: &CodingPoint) -> [f64; 5] {
    let a = a_values(p, c);
    let min3 = |x: f64, y: f64, z: f64| x.min(y).min(z);
    let r1 = min3(a.a2[0], a.a6[0] + a.a3[1], a.a1[0] + a.a3[1] + a.a4[1]);
    let r2 = min3(a.a2[1], a.a3[0] + a.a6[1], a.a3[0] + a.a4[0] + a.a1[1]);
    let sum = (a.a2[0] + a.a1[1])
        .min(a.a1[0] + a.a2[1])
        .min(a.a3[0] + a.a1[0] + a.a3[1] + a.a7[1])
        .min(a.a3[0] + a.a5[0] + a.a3[1] + a.a5[1])
        .min(a.a3[0] + a.a7[0] + a.a3[1] + a.a1[1]);
    let w1 = min3(
        a.a2[0] + a.a1[0] + a.a3[1] + a.a7[1],
        a.a3[0] + a.a1[0] + a.a7[0] + 2.0 * a.a3[1] + a.a5[1],
        a.a2[0] + a.a1[0] + a.a3[1] + a.a5[1],
    );
    let w2 = min3(
        a.a3[0] + a.a5[0] + a.a2[1] + a.a1[1],
        a.a3[0] + a.a7[0] + a.a2[1] + a.a1[1],
        2.0 * a.a3[0] + a.a5[0] + a.a3[1] + a.a1[1] + a.a7[1],
    );
    [
        r1.max(0.0),
        r2.max(0.0),
        sum.max(0.0),
        w1.max(0.0),
        w2.max(0.0),
    ]
}

fn bounds_to_region(vals: [f64; 5]) -> ConvexRateRegion<f64> {
    let [r1, r2, sum, w1, w2] = vals;
    ConvexRateRegion::new(vec![
        LinearBound::new(1, 0, r1),
        LinearBound::new(0, 1, r2),
        LinearBound::new(1, 1, sum),
        LinearBound::new(2, 1, w1),
        LinearBound::new(1, 2, w2),
    ])
}

/// Grid resolutions of the achievable-region sweep.
#[derive(Clone, Copy, Debug)]
pub struct InnerSweep {
    pub rho_points: usize,
    pub mu_points: usize,
}

impl Default for InnerSweep {
    fn default() -> Self {
        Self {
            rho_points: 64,
            mu_points: 32,
        }
    }
}

pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    if n == 1 || hi <= lo {
        return vec![lo];
    }
    (0..n)
        .map(|k| lo + (hi - lo) * k as f64 / (n - 1) as f64)
        .collect()
}

/// The achievable region: one convex member per swept coding point.
pub fn inner_region(p: &GaussParams, cfg: &InnerSweep) -> RegionUnion<f64> {
    assert!(
        cfg.rho_points >= 2 && cfg.mu_points >= 2,
        "grids need >= 2 points"
    );
    let rho_max = p.rho_max();
    let rhos = if rho_max == 0.0 {
        vec![0.0]
    } else {
        linspace(0.0, rho_max, cfg.rho_points)
    };
    let mus = linspace(0.0, 1.0, cfg.mu_points);
    let mut members = Vec::with_capacity(rhos.len() * mus.len() * mus.len());
    for &rho in &rhos {
        for &mu1 in &mus {
            for &mu2 in &mus {
                let c = CodingPoint { rho, mu1, mu2 };
                members.push((
                    vec![rho, mu1, mu2],
                    bounds_to_region(achievable_bounds(p, &c)),
                ));
            }
        }
    }
    RegionUnion::new(members)
}

// --- Converse side -----------------------------------------------------------

/// Interference-regime events per user; `(2,2)` and `(3,3)` cannot occur.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SEventPair {
    pub l1: u8,
    pub l2: u8,
}

/// The five mutually exclusive orderings for user `i`, evaluated in order
/// with the stated strict/weak conventions. The event of user `i` constrains
/// the *other* user's forward SNR.
pub fn classify_event_for(p: &GaussParams, i: usize) -> u8 {
    let snr_j = p.snr(3 - i);
    let inr_ij = p.inr_in(i);
    let inr_ji = p.inr_out(i);
    if snr_j < inr_ij.min(inr_ji) {
        1
    } else if inr_ji <= snr_j && snr_j < inr_ij {
        2
    } else if inr_ij <= snr_j && snr_j < inr_ji {
        3
    } else if inr_ij.max(inr_ji) <= snr_j && snr_j < inr_ij * inr_ji {
        4
    } else {
        debug_assert!(snr_j >= inr_ij * inr_ji);
        5
    }
}

pub fn classify_events(p: &GaussParams) -> SEventPair {
    let pair = SEventPair {
        l1: classify_event_for(p, 1),
        l2: classify_event_for(p, 2),
    };
    debug_assert!(!matches!((pair.l1, pair.l2), (2, 2) | (3, 3)));
    pair
}

/// True if the event belongs to the first converse-formula group.
fn group_a(l: u8) -> bool {
    matches!(l, 1 | 2 | 5)
}

/// The converse-bound values at one correlation point, with the sum-rate and
/// weighted-sum formulas selected by the event pair.
#[derive(Clone, Copy, Debug)]
pub struct KappaValues {
    pub k1: [f64; 2],
    pub k2: [f64; 2],
    pub k3: [f64; 2],
    pub k4: f64,
    pub k5: f64,
    pub k6: f64,
    pub k7: [f64; 2],
}

fn checked_half_log2(x: f64, what: &str) -> Result<f64> {
    if x <= 0.0 || !x.is_finite() {
        return Err(Error::Domain(format!("{what}: log argument {x}")));
    }
    Ok(half_log2(x))
}

fn kappa6_variant(p: &GaussParams, rho: f64, variant: usize) -> Result<f64> {
    let s1 = p.snr1;
    let s2 = p.snr2;
    let i12 = p.inr12;
    let i21 = p.inr21;
    let fb1 = p.snr1_fb;
    let fb2 = p.snr2_fb;
    let b11 = b1(p, 1, rho);
    let b12 = b1(p, 2, rho);
    let b11_1 = b1(p, 1, 1.0);
    let b12_1 = b1(p, 2, 1.0);
    let b51 = b5(p, 1, rho);
    let b52 = b5(p, 2, rho);
    let b31 = p.b3_const(1);
    let b32 = p.b3_const(2);
    let hl = checked_half_log2;
    let v = match variant {
        1 => {
            hl(b11 + b51 * i21, "kappa6_1")? - hl(1.0 + i12, "kappa6_1")?
                + hl(1.0 + b52 * fb2 / (b12_1 + 1.0), "kappa6_1")?
                + hl(b12 + b51 * i21, "kappa6_1")?
                - hl(1.0 + i21, "kappa6_1")?
                + hl(1.0 + b51 * fb1 / (b11_1 + 1.0), "kappa6_1")?
                + LOG2_2PIE
        }
        2 => {
            hl(b6(p, 2, rho) + b51 * i21 / s2 * (s2 + b32), "kappa6_2")?
                - hl(1.0 + i12, "kappa6_2")?
                + hl(1.0 + b51 * fb1 / (b11_1 + 1.0), "kappa6_2")?
                + hl(b11 + b51 * i21, "kappa6_2")?
                - hl(1.0 + i21, "kappa6_2")?
                + hl(
                    1.0 + b52 / s2 * (i12 + b32 * fb2 / (b12_1 + 1.0)),
                    "kappa6_2",
                )?
                - hl(1.0 + b51 * i21 / s2, "kappa6_2")?
                + LOG2_2PIE
        }
        3 => {
            hl(b6(p, 1, rho) + b51 * i21 / s1 * (s1 + b31), "kappa6_3")?
                - hl(1.0 + i12, "kappa6_3")?
                + hl(1.0 + b52 * fb2 / (b12_1 + 1.0), "kappa6_3")?
                + hl(b12 + b51 * i21, "kappa6_3")?
                - hl(1.0 + i21, "kappa6_3")?
                + hl(
                    1.0 + b51 / s1 * (i21 + b31 * fb1 / (b11_1 + 1.0)),
                    "kappa6_3",
                )?
                - hl(1.0 + b51 * i21 / s1, "kappa6_3")?
                + LOG2_2PIE
        }
        4 => {
            hl(b6(p, 1, rho) + b51 * i21 / s1 * (s1 + b31), "kappa6_4")?
                - hl(1.0 + i12, "kappa6_4")?
                - hl(1.0 + i21, "kappa6_4")?
                + hl(
                    1.0 + b52 / s2 * (i12 + b32 * fb2 / (b12_1 + 1.0)),
                    "kappa6_4",
                )?
                - hl(1.0 + b51 * i21 / s2, "kappa6_4")?
                - hl(1.0 + b51 * i21 / s1, "kappa6_4")?
                + hl(b6(p, 2, rho) + b51 * i21 / s2 * (s2 + b32), "kappa6_4")?
                + hl(
                    1.0 + b51 / s1 * (i21 + b31 * fb1 / (b11_1 + 1.0)),
                    "kappa6_4",
                )?
                + LOG2_2PIE
        }
        _ => unreachable!(),
    };
    Ok(v)
}

fn kappa7_variant(p: &GaussParams, i: usize, rho: f64, variant: usize) -> Result<f64> {
    let j = 3 - i;
    let s_j = p.snr(j);
    let inr_ij = p.inr_in(i);
    let inr_ji = p.inr_out(i);
    let fb_j = p.snr_fb(j);
    let b1i = b1(p, i, rho);
    let b1j = b1(p, j, rho);
    let b1j_1 = b1(p, j, 1.0);
    let b4i = b4(p, i, rho);
    let b5i = b5(p, i, rho);
    let b5j = b5(p, j, rho);
    let b3j = p.b3_const(j);
    let hl = checked_half_log2;
    let v = match variant {
        1 => {
            hl(b1i + 1.0, "kappa7_1")? - hl(1.0 + inr_ij, "kappa7_1")?
                + hl(1.0 + b5j * fb_j / (b1j_1 + 1.0), "kappa7_1")?
                + 2.0 * LOG2_2PIE
                + hl(b1j + b5i * inr_ji, "kappa7_1")?
                + hl(1.0 + b4i + b5j, "kappa7_1")?
                - hl(1.0 + b5j, "kappa7_1")?
        }
        2 => {
            hl(b1i + 1.0, "kappa7_2")? - hl(1.0 + inr_ij, "kappa7_2")?
                - hl(1.0 + b5j, "kappa7_2")?
                + hl(1.0 + b4i + b5j, "kappa7_2")?
                + hl(
                    1.0 + (1.0 - rho * rho) * inr_ji / s_j
                        * (inr_ij + b3j * fb_j / (b1j_1 + 1.0)),
                    "kappa7_2",
                )?
                - hl(1.0 + b5i * inr_ji / s_j, "kappa7_2")?
                + hl(b6(p, j, rho) + b5i * inr_ji / s_j * (s_j + b3j), "kappa7_2")?
                + 2.0 * LOG2_2PIE
        }
        _ => unreachable!(),
    };
    Ok(v)
}

/// Evaluates every converse bound at correlation `rho`, selecting the
/// sum-rate and weighted-sum variants by the event pair. Raises on a
/// non-positive log argument instead of clamping.
pub fn kappa_values(p: &GaussParams, rho: f64) -> Result<KappaValues> {
    assert!((0.0..=1.0).contains(&rho));
    let events = classify_events(p);
    let hl = checked_half_log2;
    let mut k1 = [0.0; 2];
    let mut k2 = [0.0; 2];
    let mut k3 = [0.0; 2];
    for i in 1..=2usize {
        let j = 3 - i;
        let b4i = b4(p, i, rho);
        let b5j = b5(p, j, rho);
        k1[i - 1] = hl(b1(p, i, rho) + 1.0, "kappa1")?;
        k2[i - 1] = hl(1.0 + b5j, "kappa2")? + hl(1.0 + b4i / (1.0 + b5j), "kappa2")?;
        k3[i - 1] = hl(
            (b4i + b5j + 1.0) * p.snr_fb(j) / ((b1(p, j, 1.0) + 1.0) * (b4i + 1.0)) + 1.0,
            "kappa3",
        )? + hl(b4i + 1.0, "kappa3")?;
    }
    let k4 = hl(1.0 + b4(p, 1, rho) / (1.0 + b5(p, 2, rho)), "kappa4")?
        + hl(b1(p, 2, rho) + 1.0, "kappa4")?;
    let k5 = hl(1.0 + b4(p, 2, rho) / (1.0 + b5(p, 1, rho)), "kappa5")?
        + hl(b1(p, 1, rho) + 1.0, "kappa5")?;

    let k6_variant = match (group_a(events.l2), group_a(events.l1)) {
        (true, true) => 1,
        (true, false) => 2,
        (false, true) => 3,
        (false, false) => 4,
    };
    let k6 = kappa6_variant(p, rho, k6_variant)?;
    let k7 = [
        kappa7_variant(p, 1, rho, if group_a(events.l1) { 1 } else { 2 })?,
        kappa7_variant(p, 2, rho, if group_a(events.l2) { 1 } else { 2 })?,
    ];
    Ok(KappaValues {
        k1,
        k2,
        k3,
        k4,
        k5,
        k6,
        k7,
    })
}

/// The eight converse bounds at one correlation point, clamped at zero.
pub fn converse_bounds(p: &GaussParams, rho: f64) -> Result<[f64; 8]> {
    let k = kappa_values(p, rho)?;
    Ok([
        k.k1[0].min(k.k2[0]).max(0.0),
        k.k3[0].max(0.0),
        k.k1[1].min(k.k2[1]).max(0.0),
        k.k3[1].max(0.0),
        k.k4.min(k.k5).max(0.0),
        k.k6.max(0.0),
        k.k7[0].max(0.0),
        k.k7[1].max(0.0),
    ])
}

pub const OUTER_RHO_POINTS_DEFAULT: usize = 128;

/// The converse region: one convex member per correlation grid point over
/// the full interval [0, 1]; union semantics.
pub fn outer_region(p: &GaussParams, rho_points: usize) -> RegionUnion<f64> {
    assert!(rho_points >= 2, "rho grid needs >= 2 points");
    let members = linspace(0.0, 1.0, rho_points)
        .into_iter()
        .map(|rho| {
            let b = converse_bounds(p, rho).expect("converse bound domain violation");
            let region = ConvexRateRegion::new(vec![
                LinearBound::new(1, 0, b[0]),
                LinearBound::new(1, 0, b[1]),
                LinearBound::new(0, 1, b[2]),
                LinearBound::new(0, 1, b[3]),
                LinearBound::new(1, 1, b[4]),
                LinearBound::new(1, 1, b[5]),
                LinearBound::new(2, 1, b[6]),
                LinearBound::new(1, 2, b[7]),
            ]);
            (vec![rho], region)
        })
        .collect();
    RegionUnion::new(members)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{quadrant_rays, RatePair};

    fn sample() -> GaussParams {
        GaussParams::new(100.0, 60.0, 15.0, 9.0, 40.0, 25.0).unwrap()
    }

    #[test]
    fn coefficient_map_examples() {
        let p = from_coefficients(0.0, 0.0, 0.0, 0.0, 0.0, 0.0);
        assert_eq!(p.snr1, 0.0);
        assert_eq!(p.snr2_fb, 0.0);
        let p = from_coefficients(1.0, 0.0, 0.0, 0.0, 1.0, 0.0);
        assert_eq!(p.snr1_fb, 2.0); // 1 * (1 + 0 + 0 + 1)
    }

    #[test]
    fn coefficient_map_matches_direct_recomputation() {
        let cases = [
            (1.5, 0.7, 0.3, 2.0, 0.9, 1.1),
            (3.0, 3.0, 1.0, 1.0, 0.0, 2.5),
        ];
        for (h11, h22, h12, h21, g1, g2) in cases {
            let p = from_coefficients(h11, h22, h12, h21, g1, g2);
            assert_eq!(p.snr1, h11 * h11);
            assert_eq!(p.inr12, h12 * h12);
            assert_eq!(p.inr21, h21 * h21);
            let expect_fb1 = g1 * g1 * (h11 * h11 + 2.0 * h11 * h12 + h12 * h12 + 1.0);
            assert!((p.snr1_fb - expect_fb1).abs() < 1e-12);
            let expect_fb2 = g2 * g2 * (h22 * h22 + 2.0 * h22 * h21 + h21 * h21 + 1.0);
            assert!((p.snr2_fb - expect_fb2).abs() < 1e-12);
        }
    }

    #[test]
    fn a3_zero_at_mu_zero() {
        let p = sample();
        for rho in [0.0, 0.3, p.rho_max()] {
            let c = CodingPoint::new(&p, rho, 0.0, 0.0).unwrap();
            let a = a_values(&p, &c);
            assert_eq!(a.a3[0], 0.0);
            assert_eq!(a.a3[1], 0.0);
        }
    }

    #[test]
    fn unit_symmetric_point() {
        // SNR = INR = 1: b1(0) = 2 and a2(0) = log2(3)/2 - 1/2.
        let p = GaussParams::new(1.0, 1.0, 1.0, 1.0, 0.0, 0.0).unwrap();
        assert_eq!(b1(&p, 1, 0.0), 2.0);
        let c = CodingPoint::new(&p, 0.0, 0.0, 0.0).unwrap();
        let a = a_values(&p, &c);
        let expect = 0.5 * 3.0f64.log2() - 0.5;
        assert!((a.a2[0] - expect).abs() < 1e-12);
    }

    /// Second transcription of the achievable ingredients, written against
    /// the displayed formulas with explicit indices.
    fn a_oracle(p: &GaussParams, c: &CodingPoint, l: usize, i: usize) -> f64 {
        let (snr, inr_in, inr_out, fb) = match i {
            1 => (p.snr1, p.inr12, p.inr21, p.snr1_fb),
            _ => (p.snr2, p.inr21, p.inr12, p.snr2_fb),
        };
        let (mu_i, mu_j) = match i {
            1 => (c.mu1, c.mu2),
            _ => (c.mu2, c.mu1),
        };
        let rho = c.rho;
        let b1i = |r: f64| snr + 2.0 * r * (snr * inr_in).sqrt() + inr_in;
        let b2i = (1.0 - rho) * inr_in - 1.0;
        let inr_in_other = match i {
            1 => p.inr21,
            _ => p.inr12,
        };
        let b2j = (1.0 - rho) * inr_in_other - 1.0;
        let raw = match l {
            1 => 0.5 * (2.0 + snr / inr_out).log2() - 0.5,
            2 => 0.5 * (b1i(rho) + 1.0).log2() - 0.5,
            3 => {
                0.5 * ((fb * (b2i + 2.0) + b1i(1.0) + 1.0)
                    / (fb * ((1.0 - mu_j) * b2i + 2.0) + b1i(1.0) + 1.0))
                    .log2()
            }
            4 => 0.5 * ((1.0 - mu_j) * b2i + 2.0).log2() - 0.5,
            5 => 0.5 * (2.0 + snr / inr_out + (1.0 - mu_j) * b2i).log2() - 0.5,
            6 => 0.5 * (snr / inr_out * ((1.0 - mu_i) * b2j + 1.0) + 2.0).log2() - 0.5,
            7 => {
                0.5 * (snr / inr_out * ((1.0 - mu_i) * b2j + 1.0) + (1.0 - mu_j) * b2i + 2.0)
                    .log2()
                    - 0.5
            }
            _ => unreachable!(),
        };
        raw.max(0.0)
    }

    #[test]
    fn a_values_match_second_transcription() {
        let p = sample();
        for (rho, mu1, mu2) in [(0.0, 0.0, 0.0), (0.4, 0.3, 0.8), (0.8, 1.0, 0.1)] {
            let c = CodingPoint::new(&p, rho, mu1, mu2).unwrap();
            let a = a_values(&p, &c);
            let got = [a.a1, a.a2, a.a3, a.a4, a.a5, a.a6, a.a7];
            for l in 1..=7 {
                for i in 1..=2 {
                    let expect = a_oracle(&p, &c, l, i);
                    let v = got[l - 1][i - 1];
                    assert!(
                        (v - expect).abs() < 1e-12,
                        "a{l},{i} rho={rho} mu=({mu1},{mu2}): {v} vs {expect}"
                    );
                }
            }
        }
    }

    #[test]
    fn event_classification_examples() {
        // snr2 = 5 below both INRs: user 1 sees event 1.
        let p = GaussParams::new(50.0, 5.0, 10.0, 10.0, 0.0, 0.0).unwrap();
        assert_eq!(classify_event_for(&p, 1), 1);
        // snr_j at or above the INR product: event 5.
        let p = GaussParams::new(50.0, 200.0, 10.0, 10.0, 0.0, 0.0).unwrap();
        assert_eq!(classify_event_for(&p, 1), 5);
    }

    #[test]
    fn events_partition_on_random_draws() {
        let mut state = 0x0123456789abcdefu64;
        let mut next_db = |hi: f64| {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state >> 11) as f64 / (1u64 << 53) as f64 * hi
        };
        for _ in 0..20_000 {
            let p = GaussParams::new(
                10f64.powf(next_db(60.0) / 10.0),
                10f64.powf(next_db(60.0) / 10.0),
                10f64.powf(next_db(60.0) / 10.0),
                10f64.powf(next_db(60.0) / 10.0),
                0.0,
                0.0,
            )
            .unwrap();
            for i in 1..=2 {
                let snr_j = p.snr(3 - i);
                let (ii, io) = (p.inr_in(i), p.inr_out(i));
                let truth = [
                    snr_j < ii.min(io),
                    io <= snr_j && snr_j < ii,
                    ii <= snr_j && snr_j < io,
                    ii.max(io) <= snr_j && snr_j < ii * io,
                    snr_j >= ii * io,
                ];
                assert_eq!(truth.iter().filter(|&&t| t).count(), 1, "{p:?}");
                let l = classify_event_for(&p, i) as usize;
                assert!(truth[l - 1]);
            }
            let pair = classify_events(&p);
            assert!(!matches!((pair.l1, pair.l2), (2, 2) | (3, 3)));
        }
    }

    #[test]
    fn event_threshold_corners() {
        // snr_j equal to a boundary still lands in exactly one event.
        let p = GaussParams::new(50.0, 10.0, 10.0, 4.0, 0.0, 0.0).unwrap();
        // snr2 = 10, inr_in(1) = 10, inr_out(1) = 4: 4 <= 10 < 10 fails,
        // max(10,4) <= 10 < 40 holds.
        assert_eq!(classify_event_for(&p, 1), 4);
        let p = GaussParams::new(50.0, 40.0, 10.0, 4.0, 0.0, 0.0).unwrap();
        assert_eq!(classify_event_for(&p, 1), 5); // snr_j equals the product
    }

    #[test]
    fn kappa_trivial_values() {
        let p = sample();
        let k = kappa_values(&p, 0.0).unwrap();
        let expect = 0.5 * (p.snr1 + p.inr12 + 1.0).log2();
        assert!((k.k1[0] - expect).abs() < 1e-12);
        let k1 = kappa_values(&p, 1.0).unwrap();
        assert!(k1.k2[0].abs() < 1e-12, "kappa2 at rho=1 collapses to 0");
        assert!(k1.k2[1].abs() < 1e-12);
    }

    /// Second transcription of the plain converse bounds.
    #[test]
    fn kappa_match_second_transcription() {
        let p = sample();
        for rho in [0.0, 0.25, 0.7, 1.0] {
            let k = kappa_values(&p, rho).unwrap();
            for i in 1..=2usize {
                let j = 3 - i;
                let b4i = (1.0 - rho * rho) * p.snr(i);
                let b5j = (1.0 - rho * rho) * p.inr_in(j);
                let k1 = 0.5
                    * (p.snr(i) + 2.0 * rho * (p.snr(i) * p.inr_in(i)).sqrt() + p.inr_in(i)
                        + 1.0)
                        .log2();
                assert!((k.k1[i - 1] - k1).abs() < 1e-12);
                let k2 = 0.5 * (1.0 + b5j).log2() + 0.5 * (1.0 + b4i / (1.0 + b5j)).log2();
                assert!((k.k2[i - 1] - k2).abs() < 1e-12);
                let b1j1 = p.snr(j) + 2.0 * (p.snr(j) * p.inr_in(j)).sqrt() + p.inr_in(j);
                let k3 = 0.5
                    * ((b4i + b5j + 1.0) * p.snr_fb(j) / ((b1j1 + 1.0) * (b4i + 1.0)) + 1.0)
                        .log2()
                    + 0.5 * (b4i + 1.0).log2();
                assert!((k.k3[i - 1] - k3).abs() < 1e-12, "kappa3_{i} at rho={rho}");
            }
        }
    }

    #[test]
    fn inner_no_feedback_reduction() {
        // With zero feedback SNR the a3 terms vanish, so the rho = 0 member
        // equals the no-feedback evaluation of the same bound families.
        let p = GaussParams::new(40.0, 25.0, 6.0, 4.0, 0.0, 0.0).unwrap();
        let c = CodingPoint::new(&p, 0.0, 0.3, 0.6).unwrap();
        let a = a_values(&p, &c);
        assert_eq!(a.a3, [0.0, 0.0]);
        let b = achievable_bounds(&p, &c);
        let r1_nf = a.a2[0].min(a.a6[0]).min(a.a1[0] + a.a4[1]);
        assert!((b[0] - r1_nf).abs() < 1e-12);
    }

    #[test]
    fn symmetric_region_reflects() {
        let p = GaussParams::symmetric(100.0, 10.0, 30.0).unwrap();
        let inner = inner_region(
            &p,
            &InnerSweep {
                rho_points: 8,
                mu_points: 6,
            },
        );
        for (r1, r2) in [(0.5, 1.9), (1.2, 1.2), (2.0, 0.3)] {
            assert_eq!(
                inner.contains(&RatePair::from_f64(r1, r2)),
                inner.contains(&RatePair::from_f64(r2, r1)),
                "({r1},{r2})"
            );
        }
        let outer = outer_region(&p, 16);
        for d in quadrant_rays(9) {
            let fwd = outer.ray_reach(d);
            let rev = outer.ray_reach((d.1, d.0));
            assert!((fwd - rev).abs() < 1e-9);
        }
    }

    #[test]
    fn inner_members_inside_outer() {
        let p = sample();
        let inner = inner_region(
            &p,
            &InnerSweep {
                rho_points: 6,
                mu_points: 5,
            },
        );
        let outer = outer_region(&p, 32);
        for d in quadrant_rays(33) {
            let ri = inner.ray_reach(d);
            let ro = outer.ray_reach(d);
            assert!(ri <= ro + 1e-9, "dir {d:?}: inner {ri} > outer {ro}");
        }
    }

    #[test]
    fn degenerate_inr_collapses_rho_grid() {
        let p = GaussParams::new(10.0, 10.0, 0.5, 2.0, 1.0, 1.0).unwrap();
        assert_eq!(p.rho_max(), 0.0);
        let inner = inner_region(
            &p,
            &InnerSweep {
                rho_points: 8,
                mu_points: 4,
            },
        );
        assert_eq!(inner.members.len(), 16); // single rho, 4 x 4 mu grid
        assert!(inner.members.iter().all(|(t, _)| t[0] == 0.0));
    }
}
