//! Query structures behind the minibox edge algorithms: a two-dimensional
//! staircase map, a dynamic priority search tree, a static layered range
//! tree with fractional cascading, and a kd-tree for range emptiness.
//!
//! All of them assume the preprocessed-cloud invariant (strict per-axis
//! orders, no duplicate coordinate values).

pub mod kdtree;
pub mod pst;
pub mod range_tree;
pub mod staircase;

pub use kdtree::KdTree;
pub use pst::{PopMin, PrioritySearchTree, PstError, PstNode, Rect, SENTINEL, SENTINEL_INDEX};
pub use range_tree::LayeredRangeTree;
pub use staircase::OrderedStaircase;

use crate::geometry::{AxisBox, Interval};
use std::ops::Bound;

/// One axis of an orthogonal query range, with explicit endpoint openness.
#[derive(Clone, Copy, Debug)]
pub struct AxisRange {
    pub lo: Bound<f64>,
    pub hi: Bound<f64>,
}

impl AxisRange {
    pub fn all() -> Self {
        Self {
            lo: Bound::Unbounded,
            hi: Bound::Unbounded,
        }
    }

    pub fn closed(lo: f64, hi: f64) -> Self {
        Self {
            lo: Bound::Included(lo),
            hi: Bound::Included(hi),
        }
    }

    pub fn open(lo: f64, hi: f64) -> Self {
        Self {
            lo: Bound::Excluded(lo),
            hi: Bound::Excluded(hi),
        }
    }

    /// Open lower bound, unbounded above: the strict-dominance quadrant.
    pub fn above(lo: f64) -> Self {
        Self {
            lo: Bound::Excluded(lo),
            hi: Bound::Unbounded,
        }
    }

    #[inline]
    pub fn lo_ok(&self, v: f64) -> bool {
        match self.lo {
            Bound::Included(l) => v >= l,
            Bound::Excluded(l) => v > l,
            Bound::Unbounded => true,
        }
    }

    #[inline]
    pub fn hi_ok(&self, v: f64) -> bool {
        match self.hi {
            Bound::Included(h) => v <= h,
            Bound::Excluded(h) => v < h,
            Bound::Unbounded => true,
        }
    }

    #[inline]
    pub fn contains(&self, v: f64) -> bool {
        self.lo_ok(v) && self.hi_ok(v)
    }

    /// Could some admissible value be `<= split`? Controls descending left.
    #[inline]
    pub fn admits_le(&self, split: f64) -> bool {
        match self.lo {
            Bound::Included(l) => l <= split,
            Bound::Excluded(l) => l < split,
            Bound::Unbounded => true,
        }
    }

    /// Could some admissible value be `>= split`? Controls descending right.
    #[inline]
    pub fn admits_ge(&self, split: f64) -> bool {
        match self.hi {
            Bound::Included(h) => h >= split,
            Bound::Excluded(h) => h > split,
            Bound::Unbounded => true,
        }
    }
}

impl From<&Interval> for AxisRange {
    fn from(iv: &Interval) -> Self {
        Self {
            lo: if iv.lo_closed {
                Bound::Included(iv.lo)
            } else {
                Bound::Excluded(iv.lo)
            },
            hi: if iv.hi_closed {
                Bound::Included(iv.hi)
            } else {
                Bound::Excluded(iv.hi)
            },
        }
    }
}

/// Per-axis query ranges of a box, honoring its open/closed endpoint flags.
pub fn box_ranges(b: &AxisBox) -> Vec<AxisRange> {
    b.axes().iter().map(AxisRange::from).collect()
}

#[inline]
pub(crate) fn point_in_ranges(p: &[f64], ranges: &[AxisRange]) -> bool {
    p.iter().zip(ranges).all(|(&v, r)| r.contains(v))
}
