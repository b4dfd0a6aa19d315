//! Exact capacity region of the LD model with noisy feedback, the LD
//! mutual-information bounds feeding the Fourier-Motzkin projection, and the
//! special-case reductions.

use crate::geometry::{ConvexRateRegion, LinearBound};
use crate::ld::{pos, LdParams, User};
use crate::rational::{rat_int, Rational};
use crate::scalar::RateScalar;

/// The seven per-user decoding constraints' right-hand sides.
///
/// Index `[l][i]` holds the bound `l+1` for user `i+1`. Entries are integers
/// in the LD lane and floats in the Gaussian lane.
#[derive(Clone, Debug, PartialEq)]
pub struct ThetaVector<S> {
    pub th: [[S; 2]; 7],
}

impl<S: RateScalar> ThetaVector<S> {
    /// `theta(l, i)` with the paper-facing 1-based indices.
    pub fn get(&self, l: usize, i: usize) -> &S {
        &self.th[l - 1][i - 1]
    }

    /// Monotone structure every evaluator output satisfies.
    pub fn check(&self) {
        let slack = if S::EXACT { 0.0 } else { 1e-9 };
        for i in 1..=2 {
            for l in 1..=7 {
                assert!(
                    S::zero().le_slack(self.get(l, i), slack),
                    "theta[{l}][{i}] negative"
                );
            }
            for (lo, hi) in [(4, 5), (3, 5), (6, 7), (4, 6)] {
                assert!(
                    self.get(lo, i).le_slack(self.get(hi, i), slack),
                    "theta[{hi}][{i}] < theta[{lo}][{i}]"
                );
            }
        }
    }
}

/// The LD evaluation of the seven decoding bounds for both users.
pub fn theta_ld(p: &LdParams) -> ThetaVector<Rational> {
    let th_user = |i: User| -> [i64; 7] {
        let j = i.other();
        let n_ii = p.fwd(i);
        let n_jj = p.fwd(j);
        let n_ij = p.cross_in(i);
        let n_ji = p.cross_out(i);
        let fb_i = p.fb(i);
        let fb_j = p.fb(j);

        let own_gap = pos(n_ii.max(n_ij) - fb_i);
        let other_gap = pos(n_jj.max(n_ji) - fb_j);

        let t1 = pos(n_ij - own_gap);
        let t2 = n_ii.max(n_ij);
        let t3 = n_ij.min(own_gap);
        let t4 = pos(n_ii - n_ji);
        let t5 = t4.max(t3);
        // dim of the part of user i's second common layer both receivers see.
        let ha = n_ji.min(other_gap) - pos(n_ji - n_ii).min(other_gap);
        let t6 = ha + t4;
        let t7 = t3.max(t6);
        [t1, t2, t3, t4, t5, t6, t7]
    };
    let a = th_user(User::U1);
    let b = th_user(User::U2);
    let th = std::array::from_fn(|l| [rat_int(a[l]), rat_int(b[l])]);
    let v = ThetaVector { th };
    v.check();
    v
}

/// The eight closed-form capacity bounds. Redundant bounds are kept; pruning
/// is a geometry concern handled by vertex enumeration.
pub fn ld_capacity_region(p: &LdParams) -> ConvexRateRegion<Rational> {
    let per_user = |i: User| -> (i64, i64, i64) {
        let j = i.other();
        let n_ii = p.fwd(i);
        let n_jj = p.fwd(j);
        let n_ij = p.cross_in(i);
        let n_ji = p.cross_out(i);
        let fb_j = p.fb(j);

        // Individual rate: cut-set and feedback-limited forms.
        let r_cut = n_ii.max(n_ji).min(n_ii.max(n_ij));
        let r_fb = n_ii.max(n_ji).min(n_ii.max(fb_j - pos(n_jj - n_ji)));
        // Per-user term of the feedback-limited sum-rate (and of the
        // weighted bound of the other user).
        let fb_term = pos(n_ii - n_ij)
            .max(n_ji)
            .max(n_ii - pos(n_ii.max(n_ij) - p.fb(i)));
        (r_cut, r_fb, fb_term)
    };
    let (r1_cut, r1_fb, term1) = per_user(User::U1);
    let (r2_cut, r2_fb, term2) = per_user(User::U2);

    let n11 = p.fwd(User::U1);
    let n22 = p.fwd(User::U2);
    let n12 = p.cross_in(User::U1);
    let n21 = p.cross_in(User::U2);

    let sum_cut = (n22.max(n12) + pos(n11 - n12)).min(n11.max(n21) + pos(n22 - n21));
    let sum_fb = term1 + term2;
    let w1 = n11.max(n21) + pos(n11 - n12) + term2;
    let w2 = n22.max(n12) + pos(n22 - n21) + term1;

    ConvexRateRegion::new(vec![
        LinearBound::new(1, 0, rat_int(r1_cut)),
        LinearBound::new(0, 1, rat_int(r2_cut)),
        LinearBound::new(1, 0, rat_int(r1_fb)),
        LinearBound::new(0, 1, rat_int(r2_fb)),
        LinearBound::new(1, 1, rat_int(sum_cut)),
        LinearBound::new(1, 1, rat_int(sum_fb)),
        LinearBound::new(2, 1, rat_int(w1)),
        LinearBound::new(1, 2, rat_int(w2)),
    ])
}

/// Structural special cases of the feedback configuration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpecialCase {
    NoFeedback,
    PerfectFeedback,
    SymmetricNoisyFeedback,
    OneSidedPerfectFeedback,
    General,
}

impl SpecialCase {
    pub fn label(self) -> &'static str {
        match self {
            SpecialCase::NoFeedback => "no-feedback",
            SpecialCase::PerfectFeedback => "perfect-feedback",
            SpecialCase::SymmetricNoisyFeedback => "symmetric-NF",
            SpecialCase::OneSidedPerfectFeedback => "one-sided-PF",
            SpecialCase::General => "general",
        }
    }
}

/// First matching label among the known reductions.
pub fn reduce_special_case(p: &LdParams) -> SpecialCase {
    let saturated =
        |i: User| -> bool { p.fb(i) >= p.fwd(i).max(p.cross_in(i)) };
    if p.n11_fb == 0 && p.n22_fb == 0 {
        return SpecialCase::NoFeedback;
    }
    if saturated(User::U1) && saturated(User::U2) {
        return SpecialCase::PerfectFeedback;
    }
    let symmetric_fwd = p.n11_fwd == p.n22_fwd && p.n12 == p.n21;
    if symmetric_fwd && p.n11_fb == p.n22_fb {
        return SpecialCase::SymmetricNoisyFeedback;
    }
    if symmetric_fwd
        && ((saturated(User::U1) && p.n22_fb == 0) || (saturated(User::U2) && p.n11_fb == 0))
    {
        return SpecialCase::OneSidedPerfectFeedback;
    }
    SpecialCase::General
}

/// LD bounds restated without any feedback parameter, used as the
/// independently coded no-feedback reference.
pub fn no_feedback_reference(p: &LdParams) -> ConvexRateRegion<Rational> {
    assert_eq!(p.n11_fb, 0);
    assert_eq!(p.n22_fb, 0);
    let n11 = p.fwd(User::U1);
    let n22 = p.fwd(User::U2);
    let n12 = p.cross_in(User::U1);
    let n21 = p.cross_in(User::U2);

    // With the feedback pipes gone the feedback-limited forms collapse: the
    // individual rate is the direct link, and each sum term keeps only the
    // interference-free and cross-path alternatives.
    let r1 = n11.max(n21).min(n11.max(n12));
    let r1_fb = n11.max(n21).min(n11);
    let r2 = n22.max(n12).min(n22.max(n21));
    let r2_fb = n22.max(n12).min(n22);
    let sum_cut = (n22.max(n12) + pos(n11 - n12)).min(n11.max(n21) + pos(n22 - n21));
    let term1 = pos(n11 - n12).max(n21);
    let term2 = pos(n22 - n21).max(n12);
    ConvexRateRegion::new(vec![
        LinearBound::new(1, 0, rat_int(r1)),
        LinearBound::new(0, 1, rat_int(r2)),
        LinearBound::new(1, 0, rat_int(r1_fb)),
        LinearBound::new(0, 1, rat_int(r2_fb)),
        LinearBound::new(1, 1, rat_int(sum_cut)),
        LinearBound::new(1, 1, rat_int(term1 + term2)),
        LinearBound::new(2, 1, rat_int(n11.max(n21) + pos(n11 - n12) + term2)),
        LinearBound::new(1, 2, rat_int(n22.max(n12) + pos(n22 - n21) + term1)),
    ])
}

/// Bound-for-bound equality of two eight-bound LD regions.
pub fn regions_identical(a: &ConvexRateRegion<Rational>, b: &ConvexRateRegion<Rational>) -> bool {
    a.bounds.len() == b.bounds.len()
        && a.bounds
            .iter()
            .zip(b.bounds.iter())
            .all(|(x, y)| x.c1 == y.c1 && x.c2 == y.c2 && x.v == y.v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::RatePair;

    fn fig3() -> LdParams {
        LdParams::new(7, 5, 3, 4, 6, 4)
    }

    #[test]
    fn theta_golden_fig3() {
        let th = theta_ld(&fig3());
        let expect = [
            [2, 3], // theta_1
            [7, 5], // theta_2
            [1, 1], // theta_3
            [3, 2], // theta_4
            [3, 2], // theta_5
            [4, 3], // theta_6
            [4, 3], // theta_7
        ];
        for l in 1..=7 {
            for i in 1..=2 {
                assert_eq!(
                    th.get(l, i),
                    &rat_int(expect[l - 1][i - 1]),
                    "theta[{l}][{i}]"
                );
            }
        }
    }

    #[test]
    fn theta_trivial_entries() {
        let th = theta_ld(&fig3());
        assert_eq!(th.get(2, 1), &rat_int(7)); // max(7, 3)
        assert_eq!(th.get(1, 1), &rat_int(2)); // (3 - (max(7,3) - 6)^+)^+
    }

    #[test]
    fn fig3_region_bound_values() {
        let r = ld_capacity_region(&fig3());
        let values: Vec<i64> = r
            .bounds
            .iter()
            .map(|b| b.v.to_f64() as i64)
            .collect();
        assert_eq!(values, vec![7, 5, 7, 5, 8, 10, 15, 12]);
    }

    #[test]
    fn fig3_achievable_pairs() {
        let r = ld_capacity_region(&fig3());
        for (a, b) in [(2, 5), (4, 4), (7, 1)] {
            assert!(r.contains(&RatePair::from_ints(a, b)), "({a},{b})");
        }
    }

    #[test]
    fn no_feedback_excludes_fig3_pairs() {
        let r = ld_capacity_region(&LdParams::new(7, 5, 3, 4, 0, 0));
        assert!(!r.contains(&RatePair::from_ints(2, 5)));
        assert!(!r.contains(&RatePair::from_ints(4, 4)));
        // Hand evaluation: the no-feedback sum bound is 4 + 3 = 7.
        let sum_fb = &r.bounds[5];
        assert_eq!((sum_fb.c1, sum_fb.c2), (1, 1));
        assert_eq!(sum_fb.v, rat_int(7));
    }

    #[test]
    fn interference_free_channel() {
        let r = ld_capacity_region(&LdParams::new(5, 5, 0, 0, 0, 0));
        let verts = r.vertices().unwrap();
        let expect: Vec<RatePair<Rational>> = [(5, 0), (5, 5), (0, 5), (0, 0)]
            .iter()
            .map(|&(a, b)| RatePair::from_ints(a, b))
            .collect();
        assert_eq!(verts, expect);
    }

    #[test]
    fn special_case_labels() {
        assert_eq!(
            reduce_special_case(&LdParams::new(7, 5, 3, 4, 0, 0)),
            SpecialCase::NoFeedback
        );
        assert_eq!(
            reduce_special_case(&LdParams::new(7, 5, 3, 4, 7, 5)),
            SpecialCase::PerfectFeedback
        );
        assert_eq!(
            reduce_special_case(&LdParams::new(5, 5, 3, 3, 4, 4)),
            SpecialCase::SymmetricNoisyFeedback
        );
        assert_eq!(
            reduce_special_case(&LdParams::new(5, 5, 3, 3, 5, 0)),
            SpecialCase::OneSidedPerfectFeedback
        );
        assert_eq!(
            reduce_special_case(&LdParams::new(7, 5, 3, 4, 6, 4)),
            SpecialCase::General
        );
    }

    #[test]
    fn feedback_monotonicity_spot_checks() {
        // Growing either feedback pipe never shrinks any bound.
        for fb1 in 0..=8 {
            for fb2 in 0..=8 {
                let r = ld_capacity_region(&LdParams::new(6, 4, 3, 5, fb1, fb2));
                let r_up = ld_capacity_region(&LdParams::new(6, 4, 3, 5, fb1 + 1, fb2));
                for (a, b) in r.bounds.iter().zip(r_up.bounds.iter()) {
                    assert!(a.v <= b.v);
                }
            }
        }
    }

    #[test]
    fn saturation_at_perfect_feedback() {
        let base = LdParams::new(6, 4, 3, 5, 6, 5);
        let large = LdParams::new(6, 4, 3, 5, 60, 50);
        assert!(regions_identical(
            &ld_capacity_region(&base),
            &ld_capacity_region(&large)
        ));
    }
}
