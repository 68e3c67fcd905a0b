//! Static kd-tree for orthogonal range emptiness: axis-alternating median
//! splits, every point stored at exactly one node, O(n) extra space.

use super::{point_in_ranges, AxisRange};
use crate::geometry::{AxisBox, PointCloud};

pub struct KdTree<'a> {
    cloud: &'a PointCloud,
    nodes: Vec<KdNode>,
    root: Option<usize>,
}

struct KdNode {
    point: u32,
    axis: usize,
    left: Option<usize>,
    right: Option<usize>,
}

impl<'a> KdTree<'a> {
    pub fn build(cloud: &'a PointCloud) -> Self {
        let mut idx: Vec<u32> = (0..cloud.len() as u32).collect();
        let mut tree = Self {
            cloud,
            nodes: Vec::with_capacity(cloud.len()),
            root: None,
        };
        tree.root = tree.build_rec(&mut idx, 0);
        tree
    }

    fn build_rec(&mut self, idx: &mut [u32], depth: usize) -> Option<usize> {
        if idx.is_empty() {
            return None;
        }
        let axis = depth % self.cloud.dim();
        let mid = idx.len() / 2;
        let key = |p: u32| (self.cloud.coord(p as usize, axis), p);
        idx.select_nth_unstable_by(mid, |&a, &b| key(a).partial_cmp(&key(b)).unwrap());
        let point = idx[mid];
        let node = self.nodes.len();
        self.nodes.push(KdNode {
            point,
            axis,
            left: None,
            right: None,
        });
        let (lo, rest) = idx.split_at_mut(mid);
        let hi = &mut rest[1..];
        let left = self.build_rec(lo, depth + 1);
        let right = self.build_rec(hi, depth + 1);
        self.nodes[node].left = left;
        self.nodes[node].right = right;
        node.into()
    }

    /// True iff no stored point lies inside the box (openness per its flags).
    pub fn range_empty(&self, b: &AxisBox) -> bool {
        assert_eq!(b.dim(), self.cloud.dim());
        if b.is_empty() {
            return true;
        }
        let ranges = super::box_ranges(b);
        !self.any_in_ranges(self.root, &ranges)
    }

    fn any_in_ranges(&self, node: Option<usize>, ranges: &[AxisRange]) -> bool {
        let Some(i) = node else { return false };
        let n = &self.nodes[i];
        let p = self.cloud.point(n.point as usize);
        if point_in_ranges(p, ranges) {
            return true;
        }
        let split = p[n.axis];
        let r = &ranges[n.axis];
        // left holds coords <= split, right holds coords >= split
        (r.admits_le(split) && self.any_in_ranges(n.left, ranges))
            || (r.admits_ge(split) && self.any_in_ranges(n.right, ranges))
    }
}
