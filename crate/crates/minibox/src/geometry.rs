//! Chebyshev (ℓ∞) metric primitives: point clouds, axis-parallel boxes,
//! miniboxes, ε-thickenings and the collinearity-removing preprocessing step.
//!
//! Everything downstream assumes a preprocessed [`PointCloud`]: no two points
//! share a coordinate value on any axis, so every per-axis comparison is
//! strict and no epsilon tolerances are needed anywhere in the algorithms.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum GeometryError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("point cloud is empty")]
    EmptyCloud,
    #[error("point {index} has {got} coordinates, expected {expected}")]
    RaggedPoint {
        index: usize,
        got: usize,
        expected: usize,
    },
    #[error("coordinate {axis} of point {index} is not finite")]
    NonFiniteCoordinate { index: usize, axis: usize },
    #[error("perturbation epsilon must be positive and finite, got {0}")]
    InvalidEpsilon(f64),
    #[error("negative thickening radius {0}")]
    NegativeThickening(f64),
    #[error("axis {axis} still has duplicate coordinates after {retries} perturbation rounds")]
    PerturbationFailed { axis: usize, retries: usize },
    #[error("cannot intersect an empty collection of boxes")]
    NoBoxes,
}

/// ℓ∞ distance between two points of equal dimension.
pub fn dist_linf(p: &[f64], q: &[f64]) -> Result<f64, GeometryError> {
    if p.len() != q.len() {
        return Err(GeometryError::DimensionMismatch {
            left: p.len(),
            right: q.len(),
        });
    }
    Ok(linf(p, q))
}

/// ℓ∞ distance without the dimension check, for hot loops.
#[inline]
pub fn linf(p: &[f64], q: &[f64]) -> f64 {
    debug_assert_eq!(p.len(), q.len());
    p.iter()
        .zip(q)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max)
}

/// An immutable d-dimensional point set.
///
/// After [`preprocess`] the cloud satisfies the pairwise-distinct-per-axis
/// invariant, which every search structure and edge algorithm relies on.
#[derive(Clone, Debug, PartialEq)]
pub struct PointCloud {
    coords: Vec<f64>,
    dim: usize,
}

impl PointCloud {
    pub fn new(points: Vec<Vec<f64>>) -> Result<Self, GeometryError> {
        let dim = points.first().ok_or(GeometryError::EmptyCloud)?.len();
        if dim == 0 {
            return Err(GeometryError::RaggedPoint {
                index: 0,
                got: 0,
                expected: 1,
            });
        }
        let mut coords = Vec::with_capacity(points.len() * dim);
        for (index, p) in points.iter().enumerate() {
            if p.len() != dim {
                return Err(GeometryError::RaggedPoint {
                    index,
                    got: p.len(),
                    expected: dim,
                });
            }
            for (axis, &c) in p.iter().enumerate() {
                if !c.is_finite() {
                    return Err(GeometryError::NonFiniteCoordinate { index, axis });
                }
                coords.push(c);
            }
        }
        Ok(Self { coords, dim })
    }

    pub fn from_flat(coords: Vec<f64>, dim: usize) -> Result<Self, GeometryError> {
        if dim == 0 || coords.is_empty() || coords.len() % dim != 0 {
            return Err(GeometryError::EmptyCloud);
        }
        if let Some(pos) = coords.iter().position(|c| !c.is_finite()) {
            return Err(GeometryError::NonFiniteCoordinate {
                index: pos / dim,
                axis: pos % dim,
            });
        }
        Ok(Self { coords, dim })
    }

    pub fn len(&self) -> usize {
        self.coords.len() / self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn point(&self, i: usize) -> &[f64] {
        &self.coords[i * self.dim..(i + 1) * self.dim]
    }

    #[inline]
    pub fn coord(&self, i: usize, axis: usize) -> f64 {
        self.coords[i * self.dim + axis]
    }

    pub fn points(&self) -> impl Iterator<Item = &[f64]> {
        self.coords.chunks_exact(self.dim)
    }

    #[inline]
    pub fn dist(&self, i: usize, j: usize) -> f64 {
        linf(self.point(i), self.point(j))
    }

    /// Point indices sorted by `(coordinate on axis, index)`.
    pub fn order_by_axis(&self, axis: usize) -> Vec<u32> {
        let mut order: Vec<u32> = (0..self.len() as u32).collect();
        order.sort_by(|&a, &b| {
            self.coord(a as usize, axis)
                .partial_cmp(&self.coord(b as usize, axis))
                .unwrap()
                .then(a.cmp(&b))
        });
        order
    }

    /// True iff no two points share a coordinate value on any axis.
    pub fn has_distinct_coords(&self) -> bool {
        (0..self.dim).all(|axis| self.duplicate_on_axis(axis).is_none())
    }

    fn duplicate_on_axis(&self, axis: usize) -> Option<(usize, usize)> {
        let order = self.order_by_axis(axis);
        order.windows(2).find_map(|w| {
            let (a, b) = (w[0] as usize, w[1] as usize);
            (self.coord(a, axis) == self.coord(b, axis)).then_some((a, b))
        })
    }

    /// Extent of the bounding box: the largest per-axis coordinate range.
    pub fn extent(&self) -> f64 {
        (0..self.dim)
            .map(|axis| {
                let mut lo = f64::INFINITY;
                let mut hi = f64::NEG_INFINITY;
                for i in 0..self.len() {
                    lo = lo.min(self.coord(i, axis));
                    hi = hi.max(self.coord(i, axis));
                }
                hi - lo
            })
            .fold(0.0, f64::max)
    }
}

/// Scale-relative default for the preprocessing perturbation.
pub fn default_epsilon(cloud: &PointCloud) -> f64 {
    let extent = cloud.extent();
    if extent > 0.0 {
        1e-9 * extent
    } else {
        1e-9
    }
}

const PERTURB_RETRIES: usize = 64;

/// Removes per-axis coordinate collisions by adding i.i.d. uniform `(-eps, eps)`
/// offsets on every axis that has a duplicate value, drawing fresh offsets
/// (from the original coordinates) until all axes are duplicate-free.
///
/// Deterministic for a given `seed`. Clouds that already satisfy the
/// invariant are returned unchanged.
pub fn preprocess(
    cloud: &PointCloud,
    epsilon: f64,
    seed: u64,
) -> Result<PointCloud, GeometryError> {
    if !(epsilon.is_finite() && epsilon > 0.0) {
        return Err(GeometryError::InvalidEpsilon(epsilon));
    }
    let n = cloud.len();
    let dim = cloud.dim();
    let dirty: Vec<usize> = (0..dim)
        .filter(|&axis| cloud.duplicate_on_axis(axis).is_some())
        .collect();
    if dirty.is_empty() {
        return Ok(cloud.clone());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = cloud.clone();
    for &axis in &dirty {
        let mut done = false;
        for _ in 0..PERTURB_RETRIES {
            for i in 0..n {
                out.coords[i * dim + axis] =
                    cloud.coord(i, axis) + rng.random_range(-epsilon..epsilon);
            }
            if out.duplicate_on_axis(axis).is_none() {
                done = true;
                break;
            }
        }
        if !done {
            return Err(GeometryError::PerturbationFailed {
                axis,
                retries: PERTURB_RETRIES,
            });
        }
    }
    Ok(out)
}

/// One axis of an [`AxisBox`]: an interval with explicit endpoint openness.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

impl Interval {
    pub fn closed(lo: f64, hi: f64) -> Self {
        Self {
            lo,
            hi,
            lo_closed: true,
            hi_closed: true,
        }
    }

    pub fn open(lo: f64, hi: f64) -> Self {
        Self {
            lo,
            hi,
            lo_closed: false,
            hi_closed: false,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.lo > self.hi || (self.lo == self.hi && !(self.lo_closed && self.hi_closed))
    }

    pub fn is_degenerate(&self) -> bool {
        self.lo == self.hi && self.lo_closed && self.hi_closed
    }

    #[inline]
    pub fn contains(&self, x: f64) -> bool {
        let above = if self.lo_closed { x >= self.lo } else { x > self.lo };
        let below = if self.hi_closed { x <= self.hi } else { x < self.hi };
        above && below
    }

    pub fn intersect(&self, other: &Interval) -> Interval {
        let (lo, lo_closed) = match self.lo.partial_cmp(&other.lo).unwrap() {
            std::cmp::Ordering::Greater => (self.lo, self.lo_closed),
            std::cmp::Ordering::Less => (other.lo, other.lo_closed),
            std::cmp::Ordering::Equal => (self.lo, self.lo_closed && other.lo_closed),
        };
        let (hi, hi_closed) = match self.hi.partial_cmp(&other.hi).unwrap() {
            std::cmp::Ordering::Less => (self.hi, self.hi_closed),
            std::cmp::Ordering::Greater => (other.hi, other.hi_closed),
            std::cmp::Ordering::Equal => (self.hi, self.hi_closed && other.hi_closed),
        };
        Interval {
            lo,
            hi,
            lo_closed,
            hi_closed,
        }
    }
}

/// Axis-parallel box: a Cartesian product of intervals, each endpoint
/// individually open or closed. ℓ∞ balls are closed boxes, miniboxes are
/// open boxes, and their intersections mix both, so the flags are carried
/// explicitly rather than inferred.
#[derive(Clone, Debug, PartialEq)]
pub struct AxisBox {
    axes: Vec<Interval>,
}

impl AxisBox {
    pub fn new(axes: Vec<Interval>) -> Self {
        Self { axes }
    }

    pub fn closed(lo: &[f64], hi: &[f64]) -> Self {
        Self::new(
            lo.iter()
                .zip(hi)
                .map(|(&a, &b)| Interval::closed(a, b))
                .collect(),
        )
    }

    pub fn open(lo: &[f64], hi: &[f64]) -> Self {
        Self::new(
            lo.iter()
                .zip(hi)
                .map(|(&a, &b)| Interval::open(a, b))
                .collect(),
        )
    }

    /// Closed ℓ∞ ball of radius `r`: an axis-parallel hypercube.
    pub fn closed_ball(center: &[f64], r: f64) -> Self {
        Self::new(
            center
                .iter()
                .map(|&c| Interval::closed(c - r, c + r))
                .collect(),
        )
    }

    /// Open ℓ∞ ball of radius `r`.
    pub fn open_ball(center: &[f64], r: f64) -> Self {
        Self::new(
            center
                .iter()
                .map(|&c| Interval::open(c - r, c + r))
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.axes.len()
    }

    pub fn axes(&self) -> &[Interval] {
        &self.axes
    }

    pub fn axis(&self, k: usize) -> &Interval {
        &self.axes[k]
    }

    pub fn is_empty(&self) -> bool {
        self.axes.iter().any(Interval::is_empty)
    }

    pub fn is_closed(&self) -> bool {
        self.axes.iter().all(|a| a.lo_closed && a.hi_closed)
    }

    #[inline]
    pub fn contains(&self, p: &[f64]) -> bool {
        debug_assert_eq!(p.len(), self.dim());
        self.axes.iter().zip(p).all(|(a, &x)| a.contains(x))
    }

    pub fn intersect(&self, other: &AxisBox) -> Result<AxisBox, GeometryError> {
        if self.dim() != other.dim() {
            return Err(GeometryError::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(AxisBox::new(
            self.axes
                .iter()
                .zip(&other.axes)
                .map(|(a, b)| a.intersect(b))
                .collect(),
        ))
    }
}

/// Intersection of a non-empty collection of equal-dimension boxes.
///
/// Cartesian products and intersections commute, so this is the per-axis
/// interval intersection; it is empty iff some axis intersection is empty.
pub fn box_intersection(boxes: &[AxisBox]) -> Result<AxisBox, GeometryError> {
    let (first, rest) = boxes.split_first().ok_or(GeometryError::NoBoxes)?;
    rest.iter()
        .try_fold(first.clone(), |acc, b| acc.intersect(b))
}

/// Open minibox of `p` and `q`: the interior of their minimal bounding box.
/// Degenerate axes (a shared coordinate) make the open box empty.
pub fn minibox(p: &[f64], q: &[f64]) -> AxisBox {
    debug_assert_eq!(p.len(), q.len());
    AxisBox::new(
        p.iter()
            .zip(q)
            .map(|(&a, &b)| Interval::open(a.min(b), a.max(b)))
            .collect(),
    )
}

/// ε-thickening of a closed box: widens every interval by `eps` on both
/// sides, so that thickening a closed ball of radius `r` gives the closed
/// ball of radius `r + eps`.
pub fn thicken(b: &AxisBox, eps: f64) -> Result<AxisBox, GeometryError> {
    if !(eps >= 0.0) {
        return Err(GeometryError::NegativeThickening(eps));
    }
    debug_assert!(b.is_closed(), "thickening is defined for closed boxes");
    Ok(AxisBox::new(
        b.axes
            .iter()
            .map(|a| Interval {
                lo: a.lo - eps,
                hi: a.hi + eps,
                lo_closed: a.lo_closed,
                hi_closed: a.hi_closed,
            })
            .collect(),
    ))
}

/// A canonical sorted list of index pairs `(i, j)`, `i < j`, each carrying its
/// filtration value `r̄ = d∞(p_i, p_j) / 2` (the radius at which the pair's
/// closed balls first meet).
#[derive(Clone, Debug, PartialEq)]
pub struct EdgeSet {
    edges: Vec<Edge>,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Edge {
    pub i: u32,
    pub j: u32,
    pub value: f64,
}

impl EdgeSet {
    /// Canonicalizes arbitrary pairs: orders each as `(min, max)`, sorts
    /// lexicographically, removes duplicates and attaches filtration values.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (u32, u32)>, cloud: &PointCloud) -> Self {
        let mut norm: Vec<(u32, u32)> = pairs
            .into_iter()
            .map(|(i, j)| {
                debug_assert_ne!(i, j);
                (i.min(j), i.max(j))
            })
            .collect();
        norm.sort_unstable();
        norm.dedup();
        let edges = norm
            .into_iter()
            .map(|(i, j)| Edge {
                i,
                j,
                value: cloud.dist(i as usize, j as usize) / 2.0,
            })
            .collect();
        Self { edges }
    }

    /// All `n(n-1)/2` pairs: the 1-skeleton of the Čech (equivalently
    /// Vietoris-Rips) complex at full radius.
    pub fn complete(cloud: &PointCloud) -> Self {
        let n = cloud.len() as u32;
        let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
        Self::from_pairs(pairs, cloud)
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn iter(&self) -> impl Iterator<Item = &Edge> {
        self.edges.iter()
    }

    pub fn contains(&self, i: u32, j: u32) -> bool {
        let key = (i.min(j), i.max(j));
        self.edges
            .binary_search_by(|e| (e.i, e.j).cmp(&key))
            .is_ok()
    }

    /// Text rendering, one `i j value` line per edge, 17 significant digits.
    pub fn to_text(&self) -> String {
        use std::fmt::Write;
        let mut out = String::new();
        for e in &self.edges {
            writeln!(out, "{} {} {:.16e}", e.i, e.j, e.value).unwrap();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn dist_examples() {
        assert_eq!(
            dist_linf(&[0.0, 0.0, 0.0], &[2.0, 1.0, 1.0]).unwrap(),
            2.0
        );
        let p = [1.25, -3.5, 0.0];
        assert_eq!(dist_linf(&p, &p).unwrap(), 0.0);
        // largest coordinate gap of the two 3-D rows below is on the x axis
        assert_eq!(
            dist_linf(&[6.2, 1.1, 1.9], &[2.4, 4.8, 1.4]).unwrap(),
            6.2 - 2.4
        );
        assert_eq!(
            dist_linf(&[0.0], &[0.0, 1.0]),
            Err(GeometryError::DimensionMismatch { left: 1, right: 2 })
        );
    }

    #[test]
    fn minibox_examples() {
        let b = minibox(&[0.0, 0.0], &[1.0, 1.0]);
        assert!(!b.is_empty());
        assert_eq!(b.axis(0), &Interval::open(0.0, 1.0));
        assert!(b.contains(&[0.5, 0.5]));
        assert!(!b.contains(&[0.0, 0.5]));

        // shared x coordinate: open degenerate axis, hence empty
        assert!(minibox(&[0.0, 0.0], &[0.0, 1.0]).is_empty());

        let b = minibox(&[6.2, 1.1, 1.9], &[2.4, 4.8, 1.4]);
        assert_eq!(b.axis(0), &Interval::open(2.4, 6.2));
        assert_eq!(b.axis(1), &Interval::open(1.1, 4.8));
        assert_eq!(b.axis(2), &Interval::open(1.4, 1.9));
    }

    #[test]
    fn box_intersection_examples() {
        let unit = |lo: [f64; 2]| AxisBox::closed(&lo, &[lo[0] + 1.0, lo[1] + 1.0]);
        let disjoint = box_intersection(&[unit([0.0, 0.0]), unit([5.0, 5.0])]).unwrap();
        assert!(disjoint.is_empty());

        // balls of radius 1 around (0,0,0) and (2,1,1) meet in a degenerate
        // closed box {1} x [0,1] x [0,1]
        let a = AxisBox::closed_ball(&[0.0, 0.0, 0.0], 1.0);
        let b = AxisBox::closed_ball(&[2.0, 1.0, 1.0], 1.0);
        let cap = box_intersection(&[a.clone(), b]).unwrap();
        assert!(!cap.is_empty());
        assert_eq!(cap.axis(0), &Interval::closed(1.0, 1.0));
        assert!(cap.axis(0).is_degenerate());
        assert_eq!(cap.axis(1), &Interval::closed(0.0, 1.0));
        assert_eq!(cap.axis(2), &Interval::closed(0.0, 1.0));

        let idem = box_intersection(&[a.clone(), a.clone()]).unwrap();
        assert_eq!(idem, a);
        assert_eq!(box_intersection(&[]), Err(GeometryError::NoBoxes));
    }

    #[test]
    fn thicken_examples() {
        let ball = AxisBox::closed_ball(&[0.0, 0.0], 1.0);
        assert_eq!(
            thicken(&ball, 0.5).unwrap(),
            AxisBox::closed_ball(&[0.0, 0.0], 1.5)
        );
        assert_eq!(thicken(&ball, 0.0).unwrap(), ball);
        assert!(thicken(&ball, -0.1).is_err());
    }

    #[test]
    fn preprocess_distinct_cloud_unchanged() {
        let cloud = PointCloud::new(vec![vec![0.0, 0.0], vec![1.0, 2.0], vec![2.0, 1.0]]).unwrap();
        let out = preprocess(&cloud, 1e-9, 3).unwrap();
        assert_eq!(out, cloud);
    }

    #[test]
    fn preprocess_duplicate_points() {
        let cloud = PointCloud::new(vec![vec![1.0, 1.0], vec![1.0, 1.0]]).unwrap();
        let out = preprocess(&cloud, 1e-9, 11).unwrap();
        assert!(out.has_distinct_coords());
    }

    #[test]
    fn preprocess_grid() {
        let mut pts = Vec::new();
        for i in 0..3 {
            for j in 0..3 {
                pts.push(vec![i as f64, j as f64]);
            }
        }
        let cloud = PointCloud::new(pts).unwrap();
        let eps = 1e-9;
        let out = preprocess(&cloud, eps, 7).unwrap();
        assert!(out.has_distinct_coords());
        for i in 0..cloud.len() {
            for axis in 0..2 {
                assert!((out.coord(i, axis) - cloud.coord(i, axis)).abs() <= eps);
            }
        }
        // determinism
        assert_eq!(out, preprocess(&cloud, eps, 7).unwrap());
    }

    #[test]
    fn edge_set_canonical() {
        let cloud =
            PointCloud::new(vec![vec![0.0, 0.0], vec![2.0, 1.0], vec![5.0, 3.0]]).unwrap();
        let es = EdgeSet::from_pairs(vec![(2u32, 0u32), (0, 1), (2, 0)], &cloud);
        assert_eq!(es.len(), 2);
        assert_eq!(es.edges()[0].i, 0);
        assert_eq!(es.edges()[0].j, 1);
        assert_eq!(es.edges()[0].value, 1.0);
        assert!(es.contains(2, 0));
        assert!(!es.contains(1, 2));
        let text = es.to_text();
        assert!(text.lines().next().unwrap().starts_with("0 1 "));
    }

    // small grid of coordinates so that boundary ties actually occur
    fn arb_interval() -> impl Strategy<Value = Interval> {
        (0..12i32, 0..6i32, any::<bool>(), any::<bool>()).prop_map(|(lo, len, lc, hc)| Interval {
            lo: lo as f64 * 0.25,
            hi: (lo + len) as f64 * 0.25,
            lo_closed: lc,
            hi_closed: hc,
        })
    }

    fn arb_box(dim: usize) -> impl Strategy<Value = AxisBox> {
        proptest::collection::vec(arb_interval(), dim).prop_map(AxisBox::new)
    }

    proptest! {
        // symmetry is exact for any floats; the triangle inequality is
        // checked on dyadic coordinates where subtraction and addition
        // incur no rounding at all
        #[test]
        fn linf_symmetry_and_triangle(
            pi in proptest::collection::vec(-40..40i32, 3),
            qi in proptest::collection::vec(-40..40i32, 3),
            ri in proptest::collection::vec(-40..40i32, 3),
            fp in proptest::collection::vec(-10.0..10.0f64, 3),
            fq in proptest::collection::vec(-10.0..10.0f64, 3),
        ) {
            prop_assert_eq!(linf(&fp, &fq), linf(&fq, &fp));
            prop_assert!(linf(&fp, &fq) >= 0.0);
            let d = |v: &[i32]| -> Vec<f64> { v.iter().map(|&x| x as f64 * 0.25).collect() };
            let (p, q, r) = (d(&pi), d(&qi), d(&ri));
            let pq = linf(&p, &q);
            prop_assert_eq!(pq, linf(&q, &p));
            prop_assert!(pq <= linf(&p, &r) + linf(&r, &q));
        }

        // intersection of a family is non-empty iff all pairwise
        // intersections are non-empty (Helly in one dimension, per axis)
        #[test]
        fn pairwise_intersections_decide_global(
            boxes in proptest::collection::vec(arb_box(3), 1..=6),
        ) {
            let global = box_intersection(&boxes).unwrap();
            let pairwise_ok = (0..boxes.len()).all(|a| {
                (a..boxes.len()).all(|b| !boxes[a].intersect(&boxes[b]).unwrap().is_empty())
            });
            prop_assert_eq!(!global.is_empty(), pairwise_ok);
        }

        // the equal-radius intersection of two balls at half their distance
        // is a non-empty closed box, degenerate on at least one axis;
        // dyadic coordinates keep the differences and halving exact
        #[test]
        fn ball_intersection_degenerate(
            pi in proptest::collection::vec(-20..20i32, 3),
            qi in proptest::collection::vec(-20..20i32, 3),
        ) {
            prop_assume!(pi != qi);
            let p: Vec<f64> = pi.iter().map(|&v| v as f64 * 0.25).collect();
            let q: Vec<f64> = qi.iter().map(|&v| v as f64 * 0.25).collect();
            let r = linf(&p, &q) / 2.0;
            let cap = AxisBox::closed_ball(&p, r)
                .intersect(&AxisBox::closed_ball(&q, r))
                .unwrap();
            prop_assert!(!cap.is_empty());
            prop_assert!(cap.axes().iter().any(Interval::is_degenerate));
        }

        // thicken(A ∩ B, eps) = thicken(A, eps) ∩ thicken(B, eps) for
        // overlapping closed boxes
        #[test]
        fn thicken_commutes_with_intersection(
            alo in proptest::collection::vec(-4.0..4.0f64, 2),
            blo in proptest::collection::vec(-4.0..4.0f64, 2),
            asz in proptest::collection::vec(0.5..4.0f64, 2),
            bsz in proptest::collection::vec(0.5..4.0f64, 2),
            eps in 0.0..2.0f64,
        ) {
            let a = AxisBox::closed(&alo, &[alo[0] + asz[0], alo[1] + asz[1]]);
            let b = AxisBox::closed(&blo, &[blo[0] + bsz[0], blo[1] + bsz[1]]);
            let cap = a.intersect(&b).unwrap();
            prop_assume!(!cap.is_empty());
            let lhs = thicken(&cap, eps).unwrap();
            let rhs = thicken(&a, eps).unwrap().intersect(&thicken(&b, eps).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        // thickening preserves inclusion
        #[test]
        fn thicken_preserves_inclusion(
            lo in proptest::collection::vec(-4.0..4.0f64, 2),
            sz in proptest::collection::vec(0.5..4.0f64, 2),
            shrink in 0.0..0.2f64,
            eps in 0.0..2.0f64,
        ) {
            let outer = AxisBox::closed(&lo, &[lo[0] + sz[0], lo[1] + sz[1]]);
            let inner = AxisBox::closed(
                &[lo[0] + shrink, lo[1] + shrink],
                &[lo[0] + sz[0] - shrink, lo[1] + sz[1] - shrink],
            );
            let touter = thicken(&outer, eps).unwrap();
            let tinner = thicken(&inner, eps).unwrap();
            for (ia, oa) in tinner.axes().iter().zip(touter.axes()) {
                prop_assert!(oa.lo <= ia.lo && ia.hi <= oa.hi);
            }
        }
    }
}
