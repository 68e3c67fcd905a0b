//! Balanced ordered map maintaining a two-dimensional staircase: the minimal
//! (mutually non-dominating) points of everything inserted so far, keyed on
//! the first coordinate with second coordinates strictly decreasing.

use ordered_float::OrderedFloat;
use std::collections::BTreeMap;
use std::ops::Bound;

/// Staircase of quadrant-relative 2-D points with strictly positive
/// coordinates. One instance per sweep quadrant.
#[derive(Clone, Debug, Default)]
pub struct OrderedStaircase {
    map: BTreeMap<OrderedFloat<f64>, f64>,
}

impl OrderedStaircase {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// Attempts to insert `pt`, deciding whether the open box spanned by the
    /// quadrant origin and `pt` is free of previously inserted points.
    ///
    /// Returns `true` (and inserts `pt`, deleting every stored point that
    /// dominates it) iff the predecessor of `pt` by first coordinate either
    /// does not exist or is not dominated by `pt`. A dominated predecessor
    /// lies strictly inside the box, so the verdict is `false` and the
    /// staircase is left unchanged.
    pub fn insert(&mut self, pt: [f64; 2]) -> bool {
        let [x, y] = pt;
        debug_assert!(x > 0.0 && y > 0.0);
        if let Some((_, &py)) = self
            .map
            .range((Bound::Unbounded, Bound::Excluded(OrderedFloat(x))))
            .next_back()
        {
            // predecessor has smaller x; pt dominates it iff its y is smaller
            if py < y {
                return false;
            }
        }
        // stored points dominating pt sit directly to its right: walk while
        // their second coordinate exceeds y
        let doomed: Vec<OrderedFloat<f64>> = self
            .map
            .range((Bound::Excluded(OrderedFloat(x)), Bound::Unbounded))
            .take_while(|(_, &sy)| sy > y)
            .map(|(&sx, _)| sx)
            .collect();
        for key in doomed {
            self.map.remove(&key);
        }
        self.map.insert(OrderedFloat(x), y);
        true
    }

    /// Stored points in increasing first-coordinate order.
    pub fn points(&self) -> impl Iterator<Item = [f64; 2]> + '_ {
        self.map.iter().map(|(&x, &y)| [x.0, y])
    }

    pub fn clear(&mut self) {
        self.map.clear();
    }
}
