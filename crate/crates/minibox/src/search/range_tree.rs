//! Static layered range tree. The leading axes are nested balanced search
//! trees over sorted point slices; the last two axes share a single tree
//! whose nodes carry last-axis-sorted arrays linked by fractional-cascading
//! pointers, so one binary search at the top of each secondary tree gives
//! the candidate position in every canonical node's array in O(1) per step.
//!
//! Built once from an immutable cloud; queries never mutate. Min queries
//! return the point of smallest last coordinate in an orthogonal range,
//! which is the first admissible entry of each canonical array.

use super::{point_in_ranges, AxisRange};
use crate::geometry::{AxisBox, PointCloud};

pub struct LayeredRangeTree<'a> {
    cloud: &'a PointCloud,
    root: Level,
}

enum Level {
    /// Fewer than two axes left only happens for 1-dimensional clouds.
    Single(Vec<u32>),
    Inner(InnerTree),
    Cascade(CascadeTree),
}

// ---------------------------------------------------------------- inner --

struct InnerTree {
    axis: usize,
    nodes: Vec<InnerNode>,
    root: usize,
}

enum InnerNode {
    Leaf(u32),
    Internal {
        split: f64,
        left: usize,
        right: usize,
        assoc: Box<Level>,
    },
}

// -------------------------------------------------------------- cascade --

struct CascadeTree {
    y_axis: usize,
    z_axis: usize,
    nodes: Vec<CNode>,
    root: usize,
}

struct CNode {
    kind: CKind,
    zlist: Vec<ZEntry>,
}

enum CKind {
    Leaf(u32),
    Internal { split: f64, left: usize, right: usize },
}

#[derive(Clone, Copy)]
struct ZEntry {
    z: f64,
    point: u32,
    left_pos: u32,
    right_pos: u32,
}

impl<'a> LayeredRangeTree<'a> {
    pub fn build(cloud: &'a PointCloud) -> Self {
        let points: Vec<u32> = (0..cloud.len() as u32).collect();
        let root = build_level(cloud, points, 0);
        Self { cloud, root }
    }

    pub fn dim(&self) -> usize {
        self.cloud.dim()
    }

    /// Index of the point with the smallest `(last coordinate, index)` in the
    /// orthogonal range, or `None` if the range is empty.
    pub fn min_last_in_range(&self, ranges: &[AxisRange]) -> Option<u32> {
        assert_eq!(ranges.len(), self.dim());
        let mut best: Option<u32> = None;
        query_level(self.cloud, &self.root, ranges, &mut best);
        best
    }

    /// The point of minimum z in `[x1,x2] x [y1,y2] x [zmin, +inf)`, or the
    /// all-infinity sentinel when the range is empty. Three-dimensional
    /// clouds only.
    pub fn range_min_z(&self, xrange: [f64; 2], yrange: [f64; 2], zmin: f64) -> [f64; 3] {
        assert_eq!(self.dim(), 3);
        let ranges = [
            AxisRange::closed(xrange[0], xrange[1]),
            AxisRange::closed(yrange[0], yrange[1]),
            AxisRange {
                lo: std::ops::Bound::Included(zmin),
                hi: std::ops::Bound::Unbounded,
            },
        ];
        match self.min_last_in_range(&ranges) {
            Some(i) => {
                let p = self.cloud.point(i as usize);
                [p[0], p[1], p[2]]
            }
            None => super::SENTINEL,
        }
    }

    /// True iff no stored point lies in the box (openness per its flags).
    pub fn range_empty(&self, b: &AxisBox) -> bool {
        assert_eq!(b.dim(), self.dim());
        if b.is_empty() {
            return true;
        }
        let ranges = super::box_ranges(b);
        self.min_last_in_range(&ranges).is_none()
    }
}

fn build_level(cloud: &PointCloud, mut points: Vec<u32>, axis: usize) -> Level {
    let remaining = cloud.dim() - axis;
    match remaining {
        1 => {
            sort_by_axis(cloud, &mut points, axis);
            Level::Single(points)
        }
        2 => Level::Cascade(build_cascade(cloud, points, axis)),
        _ => Level::Inner(build_inner(cloud, points, axis)),
    }
}

fn sort_by_axis(cloud: &PointCloud, points: &mut [u32], axis: usize) {
    points.sort_by(|&a, &b| {
        cloud
            .coord(a as usize, axis)
            .partial_cmp(&cloud.coord(b as usize, axis))
            .unwrap()
            .then(a.cmp(&b))
    });
}

fn build_inner(cloud: &PointCloud, mut points: Vec<u32>, axis: usize) -> InnerTree {
    sort_by_axis(cloud, &mut points, axis);
    let mut tree = InnerTree {
        axis,
        nodes: Vec::with_capacity(2 * points.len()),
        root: 0,
    };
    let root = build_inner_rec(cloud, &mut tree, &points, axis);
    tree.root = root;
    tree
}

fn build_inner_rec(cloud: &PointCloud, tree: &mut InnerTree, sorted: &[u32], axis: usize) -> usize {
    if sorted.len() == 1 {
        tree.nodes.push(InnerNode::Leaf(sorted[0]));
        return tree.nodes.len() - 1;
    }
    let mid = sorted.len() / 2;
    let split = cloud.coord(sorted[mid - 1] as usize, axis);
    let left = build_inner_rec(cloud, tree, &sorted[..mid], axis);
    let right = build_inner_rec(cloud, tree, &sorted[mid..], axis);
    let assoc = Box::new(build_level(cloud, sorted.to_vec(), axis + 1));
    tree.nodes.push(InnerNode::Internal {
        split,
        left,
        right,
        assoc,
    });
    tree.nodes.len() - 1
}

fn build_cascade(cloud: &PointCloud, mut points: Vec<u32>, y_axis: usize) -> CascadeTree {
    let z_axis = y_axis + 1;
    sort_by_axis(cloud, &mut points, y_axis);
    let mut tree = CascadeTree {
        y_axis,
        z_axis,
        nodes: Vec::with_capacity(2 * points.len()),
        root: 0,
    };
    let root = build_cascade_rec(cloud, &mut tree, &points);
    tree.root = root;
    tree
}

fn build_cascade_rec(cloud: &PointCloud, tree: &mut CascadeTree, sorted: &[u32]) -> usize {
    if sorted.len() == 1 {
        let p = sorted[0];
        tree.nodes.push(CNode {
            kind: CKind::Leaf(p),
            zlist: vec![ZEntry {
                z: cloud.coord(p as usize, tree.z_axis),
                point: p,
                left_pos: 0,
                right_pos: 0,
            }],
        });
        return tree.nodes.len() - 1;
    }
    let mid = sorted.len() / 2;
    let split = cloud.coord(sorted[mid - 1] as usize, tree.y_axis);
    let left = build_cascade_rec(cloud, tree, &sorted[..mid]);
    let right = build_cascade_rec(cloud, tree, &sorted[mid..]);
    // merge the children's z-sorted lists, recording for every merged entry
    // the position of the first child entry not before it
    let zkey = |e: &ZEntry| (e.z, e.point);
    let (mut li, mut ri) = (0usize, 0usize);
    let ln = tree.nodes[left].zlist.len();
    let rn = tree.nodes[right].zlist.len();
    let mut merged = Vec::with_capacity(ln + rn);
    while li < ln || ri < rn {
        let take_left = if li == ln {
            false
        } else if ri == rn {
            true
        } else {
            zkey(&tree.nodes[left].zlist[li]) <= zkey(&tree.nodes[right].zlist[ri])
        };
        let src = if take_left {
            tree.nodes[left].zlist[li]
        } else {
            tree.nodes[right].zlist[ri]
        };
        merged.push(ZEntry {
            z: src.z,
            point: src.point,
            left_pos: li as u32,
            right_pos: ri as u32,
        });
        if take_left {
            li += 1;
        } else {
            ri += 1;
        }
    }
    tree.nodes.push(CNode {
        kind: CKind::Internal { split, left, right },
        zlist: merged,
    });
    tree.nodes.len() - 1
}

// -------------------------------------------------------------- queries --

fn better(cloud: &PointCloud, z_axis: usize, best: &mut Option<u32>, cand: u32) {
    let key = |i: u32| (cloud.coord(i as usize, z_axis), i);
    match best {
        Some(b) if key(*b) <= key(cand) => {}
        _ => *best = Some(cand),
    }
}

fn query_level(cloud: &PointCloud, level: &Level, ranges: &[AxisRange], best: &mut Option<u32>) {
    match level {
        Level::Single(sorted) => {
            let axis = cloud.dim() - 1;
            let r = &ranges[axis];
            let pos = sorted.partition_point(|&p| !r.lo_ok(cloud.coord(p as usize, axis)));
            if let Some(&p) = sorted.get(pos) {
                if r.hi_ok(cloud.coord(p as usize, axis)) {
                    better(cloud, axis, best, p);
                }
            }
        }
        Level::Inner(tree) => query_inner(cloud, tree, ranges, best),
        Level::Cascade(tree) => query_cascade(cloud, tree, ranges, best),
    }
}

fn leaf_check(cloud: &PointCloud, ranges: &[AxisRange], p: u32, best: &mut Option<u32>) {
    if point_in_ranges(cloud.point(p as usize), ranges) {
        better(cloud, cloud.dim() - 1, best, p);
    }
}

fn query_inner(cloud: &PointCloud, tree: &InnerTree, ranges: &[AxisRange], best: &mut Option<u32>) {
    let r = &ranges[tree.axis];
    // descend to the split node, where the range straddles the split value
    let mut node = tree.root;
    loop {
        match &tree.nodes[node] {
            InnerNode::Leaf(p) => {
                leaf_check(cloud, ranges, *p, best);
                return;
            }
            InnerNode::Internal {
                split, left, right, ..
            } => {
                if !r.admits_ge(*split) {
                    // everything admissible is in the left subtree; note the
                    // strict-order assumption: right subtree values > split
                    node = *left;
                } else if !r.admits_le(*split) {
                    node = *right;
                } else {
                    break;
                }
            }
        }
    }
    let (split_left, split_right) = match &tree.nodes[node] {
        InnerNode::Internal { left, right, .. } => (*left, *right),
        InnerNode::Leaf(_) => unreachable!(),
    };
    // left boundary path: whenever the path turns left, the right child is
    // entirely inside the range on this axis
    let mut cur = split_left;
    loop {
        match &tree.nodes[cur] {
            InnerNode::Leaf(p) => {
                leaf_check(cloud, ranges, *p, best);
                break;
            }
            InnerNode::Internal {
                split, left, right, ..
            } => {
                if r.admits_le(*split) {
                    if let InnerNode::Internal { assoc, .. } = &tree.nodes[*right] {
                        query_level(cloud, assoc, ranges, best);
                    } else if let InnerNode::Leaf(p) = &tree.nodes[*right] {
                        leaf_check(cloud, ranges, *p, best);
                    }
                    cur = *left;
                } else {
                    cur = *right;
                }
            }
        }
    }
    // right boundary path, mirrored
    let mut cur = split_right;
    loop {
        match &tree.nodes[cur] {
            InnerNode::Leaf(p) => {
                leaf_check(cloud, ranges, *p, best);
                break;
            }
            InnerNode::Internal {
                split, left, right, ..
            } => {
                if r.admits_ge(*split) {
                    if let InnerNode::Internal { assoc, .. } = &tree.nodes[*left] {
                        query_level(cloud, assoc, ranges, best);
                    } else if let InnerNode::Leaf(p) = &tree.nodes[*left] {
                        leaf_check(cloud, ranges, *p, best);
                    }
                    cur = *right;
                } else {
                    cur = *left;
                }
            }
        }
    }
}

fn query_cascade(
    cloud: &PointCloud,
    tree: &CascadeTree,
    ranges: &[AxisRange],
    best: &mut Option<u32>,
) {
    let ry = &ranges[tree.y_axis];
    let rz = &ranges[tree.z_axis];
    let cascade = |node: usize, pos: usize, to_left: bool| -> usize {
        let zl = &tree.nodes[node].zlist;
        if pos == zl.len() {
            let (l, r) = match tree.nodes[node].kind {
                CKind::Internal { left, right, .. } => (left, right),
                CKind::Leaf(_) => unreachable!(),
            };
            tree.nodes[if to_left { l } else { r }].zlist.len()
        } else if to_left {
            zl[pos].left_pos as usize
        } else {
            zl[pos].right_pos as usize
        }
    };
    // candidate: first entry of a canonical node's array at the cascaded
    // position; it is the z-minimum of that node satisfying the z lower
    // bound, so only the upper bound still needs a check
    let canon = |node: usize, pos: usize, best: &mut Option<u32>| {
        if let Some(e) = tree.nodes[node].zlist.get(pos) {
            if rz.hi_ok(e.z) {
                better(cloud, tree.z_axis, best, e.point);
            }
        }
    };
    // one binary search at the root; every later position is O(1)
    let mut node = tree.root;
    let mut pos = tree.nodes[node]
        .zlist
        .partition_point(|e| !rz.lo_ok(e.z));
    loop {
        match tree.nodes[node].kind {
            CKind::Leaf(p) => {
                leaf_check(cloud, ranges, p, best);
                return;
            }
            CKind::Internal { split, left, right } => {
                if !ry.admits_ge(split) {
                    pos = cascade(node, pos, true);
                    node = left;
                } else if !ry.admits_le(split) {
                    pos = cascade(node, pos, false);
                    node = right;
                } else {
                    break;
                }
            }
        }
    }
    let (split_node, split_pos) = (node, pos);
    let (mut cur, mut pos, first_right, first_right_pos) = match tree.nodes[split_node].kind {
        CKind::Internal { left, right, .. } => (
            left,
            cascade(split_node, split_pos, true),
            right,
            cascade(split_node, split_pos, false),
        ),
        CKind::Leaf(_) => unreachable!(),
    };
    loop {
        match tree.nodes[cur].kind {
            CKind::Leaf(p) => {
                leaf_check(cloud, ranges, p, best);
                break;
            }
            CKind::Internal { split, left, right } => {
                if ry.admits_le(split) {
                    canon(right, cascade(cur, pos, false), best);
                    pos = cascade(cur, pos, true);
                    cur = left;
                } else {
                    pos = cascade(cur, pos, false);
                    cur = right;
                }
            }
        }
    }
    let (mut cur, mut pos) = (first_right, first_right_pos);
    loop {
        match tree.nodes[cur].kind {
            CKind::Leaf(p) => {
                leaf_check(cloud, ranges, p, best);
                break;
            }
            CKind::Internal { split, left, right } => {
                if ry.admits_ge(split) {
                    canon(left, cascade(cur, pos, true), best);
                    pos = cascade(cur, pos, false);
                    cur = right;
                } else {
                    pos = cascade(cur, pos, true);
                    cur = left;
                }
            }
        }
    }
}
