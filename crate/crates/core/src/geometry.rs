//! Exact and tolerant 2-D rate-polytope primitives.
//!
//! A region is the intersection of half-planes `c1*R1 + c2*R2 <= v` with the
//! non-negative quadrant. Coefficients are restricted to the five families
//! `(1,0), (0,1), (1,1), (2,1), (1,2)` that individual-rate, sum-rate and
//! weighted sum-rate bounds produce. Unions of such regions represent
//! parameter sweeps; they are never convexified, all set queries go through
//! membership and boundary sampling.

use crate::rational::Rational;
use crate::scalar::RateScalar;
use crate::{Error, Result};

pub const FAMILIES: [(u8, u8); 5] = [(1, 0), (0, 1), (1, 1), (2, 1), (1, 2)];

/// A point (R1, R2) in bits per channel use.
#[derive(Clone, Debug, PartialEq)]
pub struct RatePair<S> {
    pub r1: S,
    pub r2: S,
}

impl<S: RateScalar> RatePair<S> {
    pub fn new(r1: S, r2: S) -> Self {
        Self { r1, r2 }
    }

    pub fn from_f64(r1: f64, r2: f64) -> Self {
        Self {
            r1: S::from_f64(r1),
            r2: S::from_f64(r2),
        }
    }

    pub fn from_ints(r1: i64, r2: i64) -> Self {
        Self {
            r1: S::from_int(r1),
            r2: S::from_int(r2),
        }
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.r1.to_f64(), self.r2.to_f64())
    }
}

/// One constraint `c1*R1 + c2*R2 <= v`.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearBound<S> {
    pub c1: u8,
    pub c2: u8,
    pub v: S,
}

impl<S: RateScalar> LinearBound<S> {
    pub fn new(c1: u8, c2: u8, v: S) -> Self {
        assert!(
            FAMILIES.contains(&(c1, c2)),
            "({c1},{c2}) is not a rate-bound coefficient family"
        );
        Self { c1, c2, v }
    }

    fn lhs(&self, p: &RatePair<S>) -> S {
        p.r1.scale(self.c1 as i64).add(&p.r2.scale(self.c2 as i64))
    }

    pub fn satisfied(&self, p: &RatePair<S>, slack: f64) -> bool {
        self.lhs(p).le_slack(&self.v, slack)
    }
}

/// Intersection of [`LinearBound`]s with the non-negative quadrant.
///
/// `eps` is the structural tolerance: zero in the exact lane, used for
/// membership slack and vertex deduplication in the float lane.
#[derive(Clone, Debug)]
pub struct ConvexRateRegion<S> {
    pub bounds: Vec<LinearBound<S>>,
    pub eps: f64,
}

pub type ExactRegion = ConvexRateRegion<Rational>;
pub type FloatRegion = ConvexRateRegion<f64>;

impl<S: RateScalar> ConvexRateRegion<S> {
    pub fn new(bounds: Vec<LinearBound<S>>) -> Self {
        let eps = if S::EXACT { 0.0 } else { 1e-9 };
        Self { bounds, eps }
    }

    pub fn with_eps(bounds: Vec<LinearBound<S>>, eps: f64) -> Self {
        Self { bounds, eps }
    }

    pub fn contains(&self, p: &RatePair<S>) -> bool {
        self.contains_slack(p, self.eps)
    }

    pub fn contains_slack(&self, p: &RatePair<S>, slack: f64) -> bool {
        let zero = S::zero();
        if !zero.le_slack(&p.r1, slack) || !zero.le_slack(&p.r2, slack) {
            return false;
        }
        self.bounds.iter().all(|b| b.satisfied(p, slack))
    }

    fn has_family(&self, c1: u8, c2: u8) -> bool {
        self.bounds.iter().any(|b| b.c1 == c1 && b.c2 == c2)
    }

    /// Corner points of the region, sorted counterclockwise starting from the
    /// point of maximal R1 on the R1-axis. Errors if the (1,0) or (0,1)
    /// family is absent (region not certifiably bounded).
    pub fn vertices(&self) -> Result<Vec<RatePair<S>>> {
        if !self.has_family(1, 0) {
            return Err(Error::UnboundedRegion(1, 0));
        }
        if !self.has_family(0, 1) {
            return Err(Error::UnboundedRegion(0, 1));
        }
        let rows: Vec<(i64, i64, S)> = self
            .bounds
            .iter()
            .map(|b| (b.c1 as i64, b.c2 as i64, b.v.clone()))
            .collect();
        let mut verts = vertices_of_rows(&rows, self.eps);
        sort_ccw(&mut verts);
        Ok(verts.into_iter().map(|(r1, r2)| RatePair { r1, r2 }).collect())
    }

    /// Largest `t` such that `t * d` is in the region (exact ray clipping).
    pub fn ray_reach(&self, d: (f64, f64)) -> f64 {
        let mut t = f64::INFINITY;
        for b in &self.bounds {
            let v = b.v.to_f64();
            if v < 0.0 {
                return 0.0;
            }
            let denom = b.c1 as f64 * d.0 + b.c2 as f64 * d.1;
            if denom > 0.0 {
                t = t.min(v / denom);
            }
        }
        t.max(0.0)
    }

    pub fn is_empty(&self) -> bool {
        !self.contains_slack(&RatePair::from_ints(0, 0), self.eps)
    }
}

/// A finite union of convex regions, one per swept parameter tuple.
#[derive(Clone, Debug)]
pub struct RegionUnion<S> {
    pub members: Vec<(Vec<f64>, ConvexRateRegion<S>)>,
}

impl<S: RateScalar> RegionUnion<S> {
    pub fn new(members: Vec<(Vec<f64>, ConvexRateRegion<S>)>) -> Self {
        assert!(!members.is_empty(), "a region union needs at least one member");
        Self { members }
    }

    pub fn contains(&self, p: &RatePair<S>) -> bool {
        self.members.iter().any(|(_, r)| r.contains(p))
    }

    pub fn ray_reach(&self, d: (f64, f64)) -> f64 {
        self.members
            .iter()
            .map(|(_, r)| r.ray_reach(d))
            .fold(0.0, f64::max)
    }
}

/// Membership oracle shared by convex regions and unions.
pub trait RateSet: Sync {
    fn contains_at(&self, r1: f64, r2: f64, slack: f64) -> bool;
}

impl<S: RateScalar> RateSet for ConvexRateRegion<S> {
    fn contains_at(&self, r1: f64, r2: f64, slack: f64) -> bool {
        self.contains_slack(&RatePair::from_f64(r1, r2), slack)
    }
}

impl<S: RateScalar> RateSet for RegionUnion<S> {
    fn contains_at(&self, r1: f64, r2: f64, slack: f64) -> bool {
        self.members
            .iter()
            .any(|(_, r)| r.contains_slack(&RatePair::from_f64(r1, r2), slack))
    }
}

/// Sampling and tolerance knobs for boundary-based set queries.
#[derive(Clone, Copy, Debug)]
pub struct SampleConfig {
    /// Rays from the origin across the closed first quadrant.
    pub rays: usize,
    /// Bisection tolerance on the ray parameter.
    pub bisect_tol: f64,
    /// Membership slack for float regions.
    pub slack: f64,
}

impl Default for SampleConfig {
    fn default() -> Self {
        Self {
            rays: 256,
            bisect_tol: 1e-6,
            slack: 1e-6,
        }
    }
}

/// Unit directions spanning the closed first quadrant.
pub fn quadrant_rays(n: usize) -> Vec<(f64, f64)> {
    assert!(n >= 2);
    (0..n)
        .map(|k| {
            let th = std::f64::consts::FRAC_PI_2 * k as f64 / (n - 1) as f64;
            (th.cos(), th.sin())
        })
        .collect()
}

/// Farthest feasible point from the origin along `dir`, found by bisection.
///
/// `dir` must be a non-zero direction in the closed first quadrant. The
/// returned point is feasible; the overshoot past the true boundary is below
/// `tol` in the ray parameter.
pub fn boundary_point<R: RateSet + ?Sized>(set: &R, dir: (f64, f64), tol: f64) -> (f64, f64) {
    assert!(dir.0 >= 0.0 && dir.1 >= 0.0 && (dir.0 > 0.0 || dir.1 > 0.0));
    let norm = (dir.0 * dir.0 + dir.1 * dir.1).sqrt();
    let d = (dir.0 / norm, dir.1 / norm);
    if !set.contains_at(0.0, 0.0, 0.0) {
        return (0.0, 0.0);
    }
    let mut lo = 0.0f64;
    let mut hi = 1.0f64;
    let mut guard = 0;
    while set.contains_at(hi * d.0, hi * d.1, 0.0) {
        lo = hi;
        hi *= 2.0;
        guard += 1;
        if guard > 60 {
            return (lo * d.0, lo * d.1);
        }
    }
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if set.contains_at(mid * d.0, mid * d.1, 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo * d.0, lo * d.1)
}

/// Typed wrapper for the exact lane: the returned pair is snapped through the
/// exact float-to-scalar conversion and is feasible in native arithmetic.
pub fn boundary_point_typed<S: RateScalar>(
    region: &ConvexRateRegion<S>,
    dir: (f64, f64),
    tol: f64,
) -> RatePair<S> {
    let (r1, r2) = boundary_point(region, dir, tol);
    RatePair::from_f64(r1, r2)
}

/// Boundary points of a set, one per ray. For unions the boundary of every
/// member is sampled, since the union boundary alone can miss member facets.
pub trait SampledBoundary {
    fn boundary_samples(&self, cfg: &SampleConfig) -> Vec<(f64, f64)>;
}

impl<S: RateScalar> SampledBoundary for ConvexRateRegion<S> {
    fn boundary_samples(&self, cfg: &SampleConfig) -> Vec<(f64, f64)> {
        quadrant_rays(cfg.rays)
            .into_iter()
            .map(|d| boundary_point(self, d, cfg.bisect_tol))
            .collect()
    }
}

impl<S: RateScalar> SampledBoundary for RegionUnion<S> {
    fn boundary_samples(&self, cfg: &SampleConfig) -> Vec<(f64, f64)> {
        let rays = quadrant_rays(cfg.rays);
        let mut out = Vec::with_capacity(self.members.len() * rays.len());
        for (_, member) in &self.members {
            for &d in &rays {
                out.push(boundary_point(member, d, cfg.bisect_tol));
            }
        }
        out
    }
}

/// Outcome of a shifted-inclusion check, with the worst offender retained.
#[derive(Clone, Copy, Debug)]
pub struct WithinReport {
    pub ok: bool,
    /// Outer boundary point whose shift fell outside the inner set.
    pub witness: Option<(f64, f64)>,
}

/// Checks that every sampled outer-boundary point, pulled back by `xi` in
/// each coordinate (clamped at zero), lies in `inner`.
pub fn within_units_report<A, B>(inner: &A, outer: &B, xi: f64, cfg: &SampleConfig) -> WithinReport
where
    A: RateSet + ?Sized,
    B: SampledBoundary + ?Sized,
{
    assert!(xi >= 0.0);
    for (t1, t2) in outer.boundary_samples(cfg) {
        let s1 = (t1 - xi).max(0.0);
        let s2 = (t2 - xi).max(0.0);
        if !inner.contains_at(s1, s2, cfg.slack) {
            return WithinReport {
                ok: false,
                witness: Some((t1, t2)),
            };
        }
    }
    WithinReport { ok: true, witness: None }
}

pub fn within_units<A, B>(inner: &A, outer: &B, xi: f64, cfg: &SampleConfig) -> bool
where
    A: RateSet + ?Sized,
    B: SampledBoundary + ?Sized,
{
    within_units_report(inner, outer, xi, cfg).ok
}

/// Vertex enumeration over raw constraint rows `(c1, c2, v)`, coefficients of
/// either sign. Used by the Fourier-Motzkin back end, where intermediate rows
/// may leave the five bound families. Returns vertices sorted
/// lexicographically with duplicates removed; the caller is responsible for
/// knowing the row set is bounded.
pub fn vertices_of_rows<S: RateScalar>(rows: &[(i64, i64, S)], eps: f64) -> Vec<(S, S)> {
    // Quadrant edges take part in the intersection pattern like any row.
    let mut lines: Vec<(i64, i64, S)> = rows.to_vec();
    lines.push((1, 0, S::zero()));
    lines.push((0, 1, S::zero()));

    let feasible = |r1: &S, r2: &S| -> bool {
        S::zero().le_slack(r1, eps)
            && S::zero().le_slack(r2, eps)
            && rows
                .iter()
                .all(|(c1, c2, v)| r1.scale(*c1).add(&r2.scale(*c2)).le_slack(v, eps))
    };

    let mut verts: Vec<(S, S)> = Vec::new();
    for i in 0..lines.len() {
        for j in (i + 1)..lines.len() {
            let (a1, a2, va) = &lines[i];
            let (b1, b2, vb) = &lines[j];
            let det = a1 * b2 - a2 * b1;
            if det == 0 {
                continue;
            }
            // Cramer's rule; division only by the small integer determinant.
            let r1 = va.scale(*b2).sub(&vb.scale(*a2)).div_int(det);
            let r2 = vb.scale(*a1).sub(&va.scale(*b1)).div_int(det);
            if !feasible(&r1, &r2) {
                continue;
            }
            let dup = verts.iter().any(|(x, y)| {
                if S::EXACT {
                    x == &r1 && y == &r2
                } else {
                    (x.to_f64() - r1.to_f64()).abs() <= eps
                        && (y.to_f64() - r2.to_f64()).abs() <= eps
                }
            });
            if !dup {
                verts.push((r1, r2));
            }
        }
    }
    verts.sort_by(|a, b| {
        let ka = (a.0.to_f64(), a.1.to_f64());
        let kb = (b.0.to_f64(), b.1.to_f64());
        ka.partial_cmp(&kb).unwrap()
    });
    verts
}

/// Set equality of two vertex lists (order-insensitive).
pub fn same_vertex_set<S: RateScalar>(a: &[(S, S)], b: &[(S, S)], eps: f64) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let close = |x: &S, y: &S| {
        if S::EXACT {
            x == y
        } else {
            (x.to_f64() - y.to_f64()).abs() <= eps
        }
    };
    a.iter()
        .all(|(x, y)| b.iter().any(|(u, v)| close(x, u) && close(y, v)))
        && b
            .iter()
            .all(|(u, v)| a.iter().any(|(x, y)| close(x, u) && close(y, v)))
}

fn sort_ccw<S: RateScalar>(verts: &mut Vec<(S, S)>) {
    verts.sort_by(|a, b| {
        let key = |p: &(S, S)| -> f64 {
            let (x, y) = (p.0.to_f64(), p.1.to_f64());
            if x == 0.0 && y == 0.0 {
                f64::INFINITY
            } else {
                y.atan2(x)
            }
        };
        key(a).partial_cmp(&key(b)).unwrap()
    });
}

/// Nine-significant-digit decimal used by every CSV emitter.
pub fn fmt_sig(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let mag = x.abs().log10().floor() as i32;
    let decimals = (8 - mag).max(0) as usize;
    format!("{:.*}", decimals, x)
}

/// CSV of the region's vertices with header `r1,r2`.
pub fn vertices_csv<S: RateScalar>(region: &ConvexRateRegion<S>) -> Result<String> {
    let mut out = String::from("r1,r2\n");
    for v in region.vertices()? {
        let (r1, r2) = v.to_f64();
        out.push_str(&format!("{},{}\n", fmt_sig(r1), fmt_sig(r2)));
    }
    Ok(out)
}

/// CSV of boundary samples with header `angle_rad,r1,r2`.
pub fn boundary_csv<R: RateSet + ?Sized>(set: &R, cfg: &SampleConfig) -> String {
    let mut out = String::from("angle_rad,r1,r2\n");
    for d in quadrant_rays(cfg.rays) {
        let (r1, r2) = boundary_point(set, d, cfg.bisect_tol);
        let angle = d.1.atan2(d.0);
        out.push_str(&format!(
            "{},{},{}\n",
            fmt_sig(angle),
            fmt_sig(r1),
            fmt_sig(r2)
        ));
    }
    out
}

impl ConvexRateRegion<Rational> {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "mode": "exact",
            "bounds": self.bounds.iter().map(|b| serde_json::json!({
                "c1": b.c1, "c2": b.c2, "v": crate::rational::rat_display(&b.v),
            })).collect::<Vec<_>>(),
        })
    }
}

impl ConvexRateRegion<f64> {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "mode": "float",
            "eps": self.eps,
            "bounds": self.bounds.iter().map(|b| serde_json::json!({
                "c1": b.c1, "c2": b.c2, "v": b.v,
            })).collect::<Vec<_>>(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_int;

    fn unit_square<S: RateScalar>() -> ConvexRateRegion<S> {
        ConvexRateRegion::new(vec![
            LinearBound::new(1, 0, S::from_int(1)),
            LinearBound::new(0, 1, S::from_int(1)),
        ])
    }

    #[test]
    fn origin_always_feasible() {
        let r = unit_square::<Rational>();
        assert!(r.contains(&RatePair::from_ints(0, 0)));
    }

    #[test]
    fn unit_square_vertices_ccw() {
        let r = unit_square::<Rational>();
        let v = r.vertices().unwrap();
        let expect: Vec<RatePair<Rational>> = [(1, 0), (1, 1), (0, 1), (0, 0)]
            .iter()
            .map(|&(a, b)| RatePair::from_ints(a, b))
            .collect();
        assert_eq!(v, expect);
    }

    #[test]
    fn infeasible_region_has_no_vertices() {
        let r = ConvexRateRegion::new(vec![
            LinearBound::new(1, 0, rat_int(-1)),
            LinearBound::new(0, 1, rat_int(1)),
        ]);
        assert!(r.vertices().unwrap().is_empty());
        assert!(r.is_empty());
    }

    #[test]
    fn missing_axis_family_is_unbounded_error() {
        let r: ConvexRateRegion<Rational> =
            ConvexRateRegion::new(vec![LinearBound::new(1, 0, rat_int(1))]);
        assert!(matches!(r.vertices(), Err(Error::UnboundedRegion(0, 1))));
    }

    #[test]
    fn boundary_point_unit_square() {
        let r = unit_square::<f64>();
        let p = boundary_point(&r, (1.0, 0.0), 1e-9);
        assert!((p.0 - 1.0).abs() < 1e-6 && p.1 == 0.0);
        let q = boundary_point(&r, (1.0, 1.0), 1e-9);
        assert!((q.0 - 1.0).abs() < 1e-6 && (q.1 - 1.0).abs() < 1e-6);
        // Contract: returned point feasible, nudged point infeasible.
        assert!(r.contains_at(p.0, p.1, 0.0));
        assert!(!r.contains_at(p.0 + 1e-3, p.1, 0.0));
    }

    #[test]
    fn ray_reach_matches_bisection() {
        let r = ConvexRateRegion::new(vec![
            LinearBound::new(1, 0, 3.0),
            LinearBound::new(0, 1, 2.0),
            LinearBound::new(1, 1, 4.0),
        ]);
        for d in quadrant_rays(17) {
            let t = r.ray_reach(d);
            let p = boundary_point(&r, d, 1e-9);
            let tb = (p.0 * p.0 + p.1 * p.1).sqrt();
            assert!((t - tb).abs() < 1e-6, "d={d:?} clip={t} bisect={tb}");
        }
    }

    #[test]
    fn within_units_square_cases() {
        let inner = unit_square::<f64>();
        let outer = ConvexRateRegion::new(vec![
            LinearBound::new(1, 0, 2.0),
            LinearBound::new(0, 1, 2.0),
        ]);
        let cfg = SampleConfig::default();
        assert!(within_units(&inner, &inner, 0.0, &cfg));
        assert!(within_units(&inner, &outer, 1.0, &cfg));
        assert!(!within_units(&inner, &outer, 0.5, &cfg));
    }

    #[test]
    fn union_membership_and_reach() {
        let a = ConvexRateRegion::new(vec![
            LinearBound::new(1, 0, 2.0),
            LinearBound::new(0, 1, 1.0),
        ]);
        let b = ConvexRateRegion::new(vec![
            LinearBound::new(1, 0, 1.0),
            LinearBound::new(0, 1, 2.0),
        ]);
        let u = RegionUnion::new(vec![(vec![0.0], a), (vec![1.0], b)]);
        assert!(u.contains(&RatePair::from_f64(1.9, 0.9)));
        assert!(u.contains(&RatePair::from_f64(0.9, 1.9)));
        assert!(!u.contains(&RatePair::from_f64(1.5, 1.5)));
        assert!((u.ray_reach((1.0, 0.0)) - 2.0).abs() < 1e-12);
    }

    #[test]
    fn sig_digit_format() {
        assert_eq!(fmt_sig(7.0), "7.00000000");
        assert_eq!(fmt_sig(0.0), "0");
        assert_eq!(fmt_sig(1.0 / 3.0), "0.333333333");
    }
}
