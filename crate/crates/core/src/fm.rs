//! Fourier-Motzkin elimination over exact rationals, specialized to project
//! the six-variable rate-split system onto (R1, R2), plus the closed-form
//! projected region used as a cross-check.
//!
//! Rows are kept with coprime integer coefficients and a rational right-hand
//! side. Combining a positive and a negative row multiplies by the opposing
//! integer coefficients, so coefficients stay integral throughout; only the
//! right-hand sides pick up fractions (and only when fed float-snapped data).

use crate::geometry::{vertices_of_rows, ConvexRateRegion, LinearBound, FAMILIES};
use crate::ld_region::ThetaVector;
use crate::rational::Rational;
use crate::scalar::RateScalar;
use num_integer::Integer;
use num_traits::Signed;
use std::collections::HashSet;

/// One inequality `coeffs . x <= rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Row {
    pub coeffs: Vec<i64>,
    pub rhs: Rational,
}

impl Row {
    fn normalize(&mut self) {
        let mut g: i64 = 0;
        for &c in &self.coeffs {
            g = g.gcd(&c);
        }
        if g > 1 {
            for c in &mut self.coeffs {
                *c /= g;
            }
            self.rhs /= Rational::from_integer(g as i128);
        }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

/// A conjunction of non-strict linear inequalities over named variables.
#[derive(Clone, Debug)]
pub struct LinearSystem {
    pub vars: Vec<String>,
    pub rows: Vec<Row>,
}

impl LinearSystem {
    pub fn new(vars: Vec<String>) -> Self {
        Self {
            vars,
            rows: Vec::new(),
        }
    }

    /// Adds `coeffs . x <= rhs` given rational coefficients; the row is
    /// rescaled to coprime integer coefficients.
    pub fn add_rational_row(&mut self, coeffs: &[Rational], rhs: Rational) {
        assert_eq!(coeffs.len(), self.vars.len());
        let mut lcm: i128 = 1;
        for c in coeffs {
            lcm = lcm.lcm(c.denom());
        }
        let scale = Rational::from_integer(lcm);
        let ints: Vec<i64> = coeffs
            .iter()
            .map(|c| {
                let v = c * scale;
                debug_assert!(v.denom() == &1);
                i64::try_from(*v.numer()).expect("coefficient overflow")
            })
            .collect();
        let mut row = Row {
            coeffs: ints,
            rhs: rhs * scale,
        };
        row.normalize();
        self.rows.push(row);
    }

    /// Adds a row given integer coefficients.
    pub fn add_int_row(&mut self, coeffs: &[i64], rhs: Rational) {
        assert_eq!(coeffs.len(), self.vars.len());
        let mut row = Row {
            coeffs: coeffs.to_vec(),
            rhs,
        };
        row.normalize();
        self.rows.push(row);
    }

    fn var_index(&self, var: &str) -> usize {
        self.vars
            .iter()
            .position(|v| v == var)
            .unwrap_or_else(|| panic!("unknown variable {var}"))
    }

    /// True if the system contains an unconditional contradiction `0 <= neg`.
    pub fn has_infeasible_certificate(&self) -> bool {
        self.rows
            .iter()
            .any(|r| r.is_zero() && r.rhs.is_negative())
    }
}

fn push_row(rows: &mut Vec<Row>, seen: &mut HashSet<Row>, mut row: Row) {
    row.normalize();
    if row.is_zero() && !row.rhs.is_negative() {
        return; // trivially true
    }
    if seen.insert(row.clone()) {
        rows.push(row);
    }
}

/// Projects out one variable. The feasible set of the result is exactly the
/// projection of the input's feasible set onto the remaining variables.
/// Trivially-true rows are dropped and duplicate rows are merged; an
/// infeasibility certificate `0 <= negative` is retained.
pub fn eliminate(sys: &LinearSystem, var: &str) -> LinearSystem {
    let idx = sys.var_index(var);
    let mut vars = sys.vars.clone();
    vars.remove(idx);

    let drop_idx = |coeffs: &[i64]| -> Vec<i64> {
        let mut v = coeffs.to_vec();
        v.remove(idx);
        v
    };

    let mut pos: Vec<&Row> = Vec::new();
    let mut neg: Vec<&Row> = Vec::new();
    let mut rows: Vec<Row> = Vec::new();
    let mut seen: HashSet<Row> = HashSet::new();
    for r in &sys.rows {
        match r.coeffs[idx].cmp(&0) {
            std::cmp::Ordering::Greater => pos.push(r),
            std::cmp::Ordering::Less => neg.push(r),
            std::cmp::Ordering::Equal => push_row(
                &mut rows,
                &mut seen,
                Row {
                    coeffs: drop_idx(&r.coeffs),
                    rhs: r.rhs.clone(),
                },
            ),
        }
    }
    for p in &pos {
        for n in &neg {
            let a = p.coeffs[idx]; // > 0
            let b = -n.coeffs[idx]; // > 0
            let coeffs: Vec<i64> = drop_idx(&p.coeffs)
                .iter()
                .zip(drop_idx(&n.coeffs).iter())
                .map(|(pc, nc)| b * pc + a * nc)
                .collect();
            let rhs = &p.rhs * Rational::from_integer(b as i128)
                + &n.rhs * Rational::from_integer(a as i128);
            push_row(&mut rows, &mut seen, Row { coeffs, rhs });
        }
    }
    LinearSystem { vars, rows }
}

/// Drops rows implied by a single other row under `x >= 0`: `r` is redundant
/// when some `d` has componentwise larger coefficients and a smaller
/// right-hand side. Sound for the rate-split system, where every feasible
/// coordinate is non-negative. Only rows whose coefficients are all
/// non-negative may be dropped: mixed-sign rows (the non-negativity and
/// composition rows) are what encodes `x >= 0`, so removing them would
/// change the feasible set the implication relies on.
fn dominance_sweep(rows: &mut Vec<Row>) {
    let mut keep = vec![true; rows.len()];
    for i in 0..rows.len() {
        if !keep[i] || rows[i].coeffs.iter().any(|&c| c < 0) {
            continue;
        }
        for j in 0..rows.len() {
            if i == j || !keep[j] || !keep[i] {
                continue;
            }
            let (r, d) = (&rows[i], &rows[j]);
            let coeff_dom = r.coeffs.iter().zip(d.coeffs.iter()).all(|(a, b)| b >= a);
            if coeff_dom && d.rhs <= r.rhs && (d.coeffs != r.coeffs || d.rhs != r.rhs) {
                keep[i] = false;
            }
        }
    }
    let mut it = keep.iter();
    rows.retain(|_| *it.next().unwrap());
}

const SPLIT_VARS: [&str; 6] = ["r1c1", "r2c1", "r1c2", "r2c2", "r1p", "r2p"];
const ALL_VARS: [&str; 8] = ["r1c1", "r2c1", "r1c2", "r2c2", "r1p", "r2p", "r1", "r2"];

/// Builds the decoding system over the six split rates plus (R1, R2).
///
/// Every per-receiver decoding constraint is entered verbatim, including the
/// ones a larger constraint with the same right-hand side implies; redundancy
/// is discovered during the projection rather than assumed.
pub fn build_split_system(theta: &ThetaVector<Rational>) -> LinearSystem {
    let mut sys = LinearSystem::new(ALL_VARS.iter().map(|s| s.to_string()).collect());
    // Variable layout: [r1c1, r2c1, r1c2, r2c2, r1p, r2p, r1, r2]
    let var = |name: &str| ALL_VARS.iter().position(|v| v == &name).unwrap();
    let mut row = |names: &[&str], rhs: &Rational| {
        let mut coeffs = [0i64; 8];
        for n in names {
            coeffs[var(n)] += 1;
        }
        sys.add_int_row(&coeffs, rhs.clone());
    };

    for i in 1..=2usize {
        let j = 3 - i;
        let (ic1, ic2, ip) = match i {
            1 => ("r1c1", "r1c2", "r1p"),
            _ => ("r2c1", "r2c2", "r2p"),
        };
        let (jc1, jc2) = match j {
            1 => ("r1c1", "r1c2"),
            _ => ("r2c1", "r2c2"),
        };
        let t = |l: usize| theta.get(l, i);

        // Feedback decoding at transmitter i.
        row(&[jc1], t(1));
        // Backward-decoding events at receiver i, grouped by their
        // mutual-information value.
        row(&[jc2], t(3));
        row(&[ip], t(4));
        row(&[jc2, ip], t(5));
        row(&[ic2], t(6));
        row(&[ic2, ip], t(6));
        row(&[ic2, jc2], t(7));
        row(&[ic2, ip, jc2], t(7));
        // Every event set involving a first-layer index shares the full
        // receiver entropy as its bound.
        let th2 = t(2);
        row(&[jc1], th2);
        row(&[jc1, jc2], th2);
        row(&[jc1, ip], th2);
        row(&[jc1, jc2, ip], th2);
        row(&[jc1, ic2], th2);
        row(&[jc1, jc2, ic2], th2);
        row(&[jc1, ic2, ip], th2);
        row(&[jc1, jc2, ic2, ip], th2);
        row(&[ic1], th2);
        row(&[ic1, jc2], th2);
        row(&[ic1, ip], th2);
        row(&[ic1, ip, jc2], th2);
        row(&[ic1, ic2], th2);
        row(&[ic1, ic2, jc2], th2);
        row(&[ic1, ic2, ip], th2);
        row(&[ic1, ic2, ip, jc2], th2);
        row(&[ic1, jc1], th2);
        row(&[ic1, jc1, jc2], th2);
        row(&[ic1, jc1, ip], th2);
        row(&[ic1, jc1, jc2, ip], th2);
        row(&[ic1, ic2, jc1], th2);
        row(&[ic1, ic2, jc1, jc2], th2);
        row(&[ic1, ic2, ip, jc1], th2);
        row(&[ic1, ic2, ip, jc1, jc2], th2);
    }

    // Rate composition R_i = R_{i,C1} + R_{i,C2} + R_{i,P} as two
    // inequalities each, and non-negativity of every split.
    for (r, c1, c2, p) in [("r1", "r1c1", "r1c2", "r1p"), ("r2", "r2c1", "r2c2", "r2p")] {
        let mut coeffs = [0i64; 8];
        coeffs[var(r)] = 1;
        coeffs[var(c1)] = -1;
        coeffs[var(c2)] = -1;
        coeffs[var(p)] = -1;
        sys.add_int_row(&coeffs, Rational::from_integer(0));
        for c in &mut coeffs {
            *c = -*c;
        }
        sys.add_int_row(&coeffs, Rational::from_integer(0));
    }
    for s in SPLIT_VARS {
        let mut coeffs = [0i64; 8];
        coeffs[var(s)] = -1;
        sys.add_int_row(&coeffs, Rational::from_integer(0));
    }
    sys
}

/// Fixed elimination order for the split variables. The order only affects
/// intermediate sizes, never the projection.
pub const ELIMINATION_ORDER: [&str; 6] = ["r1c1", "r2c1", "r1c2", "r2c2", "r1p", "r2p"];

/// Raw projection onto (R1, R2): rows after eliminating the six splits, with
/// single-row dominance removed but without the vertex-preservation pass.
pub fn project_raw(theta: &ThetaVector<Rational>) -> Vec<(i64, i64, Rational)> {
    project_raw_ordered(theta, &ELIMINATION_ORDER)
}

pub fn project_raw_ordered(
    theta: &ThetaVector<Rational>,
    order: &[&str],
) -> Vec<(i64, i64, Rational)> {
    let mut sys = build_split_system(theta);
    dominance_sweep(&mut sys.rows);
    for var in order {
        sys = eliminate(&sys, var);
        dominance_sweep(&mut sys.rows);
    }
    assert_eq!(sys.vars, ["r1", "r2"]);
    sys.rows
        .into_iter()
        .map(|r| (r.coeffs[0], r.coeffs[1], r.rhs))
        .collect()
}

/// Largest feasible coordinate along one axis, `None` when nothing caps it.
/// Degenerate regions pin this; it keeps the redundancy test honest when the
/// vertex set alone cannot see an unbounded direction opening up.
fn axis_reach(rows: &[(i64, i64, Rational)], axis: usize) -> Option<Rational> {
    let mut reach: Option<Rational> = None;
    for (c1, c2, v) in rows {
        let c = if axis == 0 { *c1 } else { *c2 };
        if c > 0 {
            let cap = crate::rational::rat_pos(v.clone()) / Rational::from_integer(c as i128);
            reach = Some(match reach {
                Some(r) if r <= cap => r,
                _ => cap,
            });
        }
    }
    reach
}

/// Exact projection of the rate-split system onto (R1, R2), with redundant
/// rows removed by the vertex-preservation test: a row is dropped only if
/// removing it leaves the vertex set (and the two axis reaches) unchanged.
pub fn project_rate_region(theta: &ThetaVector<Rational>) -> ConvexRateRegion<Rational> {
    let mut rows = project_raw(theta);
    let reference = vertices_of_rows(&rows, 0.0);
    let reach = (axis_reach(&rows, 0), axis_reach(&rows, 1));
    let mut k = 0;
    while k < rows.len() {
        let mut trial = rows.clone();
        trial.remove(k);
        if vertices_of_rows(&trial, 0.0) == reference
            && (axis_reach(&trial, 0), axis_reach(&trial, 1)) == reach
        {
            rows = trial;
        } else {
            k += 1;
        }
    }
    // Degenerate inputs can leave the individual caps absorbed into a sum
    // row; vertex enumeration certifies boundedness through the (1,0)/(0,1)
    // families, so the implied caps are restated explicitly.
    if !rows.iter().any(|(c1, c2, _)| (*c1, *c2) == (1, 0)) {
        let cap = axis_reach(&rows, 0).expect("projection left R1 uncapped");
        rows.push((1, 0, cap));
    }
    if !rows.iter().any(|(c1, c2, _)| (*c1, *c2) == (0, 1)) {
        let cap = axis_reach(&rows, 1).expect("projection left R2 uncapped");
        rows.push((0, 1, cap));
    }
    let bounds = rows
        .into_iter()
        .map(|(c1, c2, v)| {
            assert!(
                FAMILIES.contains(&(c1 as u8, c2 as u8)),
                "projection produced unexpected facet ({c1},{c2})"
            );
            LinearBound::new(c1 as u8, c2 as u8, v)
        })
        .collect();
    ConvexRateRegion::new(bounds)
}

/// The ten-term sum-rate list of the projected system.
pub fn sum_rate_terms_full<S: RateScalar>(t: &ThetaVector<S>) -> Vec<S> {
    let g = |l: usize, i: usize| t.get(l, i);
    let add = |xs: &[&S]| -> S {
        let mut acc = S::zero();
        for x in xs {
            acc = acc.add(x);
        }
        acc
    };
    vec![
        add(&[g(2, 1), g(4, 2)]),
        add(&[g(2, 1), g(6, 2)]),
        add(&[g(4, 1), g(2, 2)]),
        add(&[g(6, 1), g(2, 2)]),
        add(&[g(1, 1), g(3, 1), g(4, 1), g(1, 2), g(5, 2)]),
        add(&[g(1, 1), g(7, 1), g(1, 2), g(5, 2)]),
        add(&[g(1, 1), g(4, 1), g(1, 2), g(7, 2)]),
        add(&[g(1, 1), g(5, 1), g(1, 2), g(3, 2), g(4, 2)]),
        add(&[g(1, 1), g(5, 1), g(1, 2), g(5, 2)]),
        add(&[g(1, 1), g(7, 1), g(1, 2), g(4, 2)]),
    ]
}

/// The three-term simplified sum-rate list, valid for evaluator-produced
/// bound vectors.
pub fn sum_rate_terms_simplified<S: RateScalar>(t: &ThetaVector<S>) -> Vec<S> {
    let g = |l: usize, i: usize| t.get(l, i);
    vec![
        g(2, 1).add(g(4, 2)),
        g(4, 1).add(g(2, 2)),
        g(1, 1).add(g(5, 1)).add(g(1, 2)).add(g(5, 2)),
    ]
}

fn min_of<S: RateScalar>(xs: &[S]) -> S {
    let mut best = xs[0].clone();
    for x in &xs[1..] {
        if *x < best {
            best = x.clone();
        }
    }
    best
}

/// Literal transcription of the projected bound list with the full ten-term
/// sum-rate minimum.
pub fn closed_form_region<S: RateScalar>(t: &ThetaVector<S>) -> ConvexRateRegion<S> {
    let g = |l: usize, i: usize| t.get(l, i);
    let r1 = min_of(&[
        g(2, 1).clone(),
        g(6, 1).add(g(1, 2)),
        g(4, 1).add(g(1, 2)).add(g(3, 2)),
    ]);
    let r2 = min_of(&[
        g(2, 2).clone(),
        g(1, 1).add(g(6, 2)),
        g(1, 1).add(g(3, 1)).add(g(4, 2)),
    ]);
    let sum = min_of(&sum_rate_terms_full(t));
    let w1 = min_of(&[
        g(2, 1).add(g(4, 1)).add(g(1, 2)).add(g(7, 2)),
        g(1, 1)
            .add(g(4, 1))
            .add(g(7, 1))
            .add(&g(1, 2).scale(2))
            .add(g(5, 2)),
        g(2, 1).add(g(4, 1)).add(g(1, 2)).add(g(5, 2)),
    ]);
    let w2 = min_of(&[
        g(1, 1).add(g(5, 1)).add(g(2, 2)).add(g(4, 2)),
        g(1, 1).add(g(7, 1)).add(g(2, 2)).add(g(4, 2)),
        g(1, 1)
            .scale(2)
            .add(g(5, 1))
            .add(g(1, 2))
            .add(g(4, 2))
            .add(g(7, 2)),
    ]);
    ConvexRateRegion::new(vec![
        LinearBound::new(1, 0, r1),
        LinearBound::new(0, 1, r2),
        LinearBound::new(1, 1, sum),
        LinearBound::new(2, 1, w1),
        LinearBound::new(1, 2, w2),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ld::LdParams;
    use crate::ld_region::{ld_capacity_region, theta_ld};
    use crate::rational::rat_int;

    fn theta_of(vals: [[i64; 2]; 7]) -> ThetaVector<Rational> {
        ThetaVector {
            th: std::array::from_fn(|l| [rat_int(vals[l][0]), rat_int(vals[l][1])]),
        }
    }

    #[test]
    fn eliminate_feasible_pair() {
        // {x <= 1, -x <= 0} -> no constraints left
        let mut sys = LinearSystem::new(vec!["x".into()]);
        sys.add_int_row(&[1], rat_int(1));
        sys.add_int_row(&[-1], rat_int(0));
        let out = eliminate(&sys, "x");
        assert!(out.rows.is_empty());
        assert!(!out.has_infeasible_certificate());
    }

    #[test]
    fn eliminate_keeps_infeasibility_certificate() {
        // {x <= 1, -x <= -2} -> 0 <= -1
        let mut sys = LinearSystem::new(vec!["x".into()]);
        sys.add_int_row(&[1], rat_int(1));
        sys.add_int_row(&[-1], rat_int(-2));
        let out = eliminate(&sys, "x");
        assert_eq!(out.rows.len(), 1);
        assert!(out.has_infeasible_certificate());
    }

    #[test]
    fn single_elimination_matches_interval_oracle() {
        // Projection of random 3-variable systems onto two variables must
        // agree with direct interval feasibility in the eliminated variable.
        let mut state = 0x1234_5678_9abc_def0u64;
        let mut next = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state % 11) as i64 - 5
        };
        for _ in 0..60 {
            let mut sys = LinearSystem::new(vec!["x".into(), "y".into(), "z".into()]);
            for _ in 0..6 {
                let row = [next(), next(), next()];
                sys.add_int_row(&row, rat_int(next()));
            }
            let proj = eliminate(&sys, "z");
            for x in -6..=6 {
                for y in -6..=6 {
                    // interval of feasible z at (x, y)
                    let mut lo = f64::NEG_INFINITY;
                    let mut hi = f64::INFINITY;
                    let mut fixed_ok = true;
                    for r in &sys.rows {
                        let rest = (r.coeffs[0] * x + r.coeffs[1] * y) as f64;
                        let rhs = r.rhs.to_f64();
                        let c = r.coeffs[2] as f64;
                        if c > 0.0 {
                            hi = hi.min((rhs - rest) / c);
                        } else if c < 0.0 {
                            lo = lo.max((rhs - rest) / c);
                        } else if rest > rhs {
                            fixed_ok = false;
                        }
                    }
                    let original_feasible = fixed_ok && lo <= hi;
                    let projected_feasible = proj.rows.iter().all(|r| {
                        (r.coeffs[0] * x + r.coeffs[1] * y) as f64 <= r.rhs.to_f64() + 1e-9
                    });
                    assert_eq!(
                        original_feasible, projected_feasible,
                        "x={x} y={y}"
                    );
                }
            }
        }
    }

    #[test]
    fn all_zero_theta_projects_to_origin() {
        let t = theta_of([[0, 0]; 7]);
        let region = project_rate_region(&t);
        let verts = region.vertices().unwrap();
        assert_eq!(verts.len(), 1);
        assert_eq!(verts[0].to_f64(), (0.0, 0.0));
        let cf = closed_form_region(&t);
        assert_eq!(cf.vertices().unwrap().len(), 1);
    }

    #[test]
    fn projection_matches_theorem_region_on_example() {
        let p = LdParams::new(7, 5, 3, 4, 6, 4);
        let proj = project_rate_region(&theta_ld(&p));
        let thm = ld_capacity_region(&p);
        let a: Vec<_> = proj
            .vertices()
            .unwrap()
            .into_iter()
            .map(|v| (v.r1, v.r2))
            .collect();
        let b: Vec<_> = thm
            .vertices()
            .unwrap()
            .into_iter()
            .map(|v| (v.r1, v.r2))
            .collect();
        assert_eq!(a, b);
    }

    #[test]
    fn elimination_order_does_not_change_projection() {
        let p = LdParams::new(6, 3, 5, 2, 4, 1);
        let t = theta_ld(&p);
        let a = vertices_of_rows(&project_raw(&t), 0.0);
        let alt = ["r2p", "r1p", "r2c2", "r1c2", "r2c1", "r1c1"];
        let b = vertices_of_rows(&project_raw_ordered(&t, &alt), 0.0);
        assert_eq!(a, b);
    }

    #[test]
    fn closed_form_matches_projection_on_random_theta() {
        let mut state = 0xfeed_face_dead_beefu64;
        let mut next = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state % 9) as i64
        };
        for _ in 0..60 {
            // Random draws over the type's monotone structure: theta5 and
            // theta7 sit anywhere at or above the maxima the evaluators
            // produce, covering both the LD (equality) and Gaussian
            // (inequality) shapes.
            let mut v = [[0i64; 2]; 7];
            for i in 0..2 {
                v[0][i] = next();
                v[1][i] = next();
                v[2][i] = next();
                v[3][i] = next();
                v[4][i] = v[3][i].max(v[2][i]) + next() % 3;
                v[5][i] = v[3][i] + next() % 4;
                v[6][i] = v[5][i].max(v[2][i]) + next() % 3;
            }
            let t = theta_of(v);
            let proj = vertices_of_rows(&project_raw(&t), 0.0);
            let rows_cf: Vec<(i64, i64, Rational)> = closed_form_region(&t)
                .bounds
                .iter()
                .map(|b| (b.c1 as i64, b.c2 as i64, b.v.clone()))
                .collect();
            let cf = vertices_of_rows(&rows_cf, 0.0);
            assert_eq!(proj, cf, "theta = {v:?}");
        }
    }
}
