//! Minibox edge enumeration: all pairs `{p, q}` whose open minibox contains
//! no third point. One strategy per dimension regime plus a brute-force
//! reference, all returning the identical canonical [`EdgeSet`].
//!
//! Every strategy reads the immutable preprocessed cloud; per-anchor and
//! per-pair work units run in parallel and own their mutable search
//! structures exclusively, with a sequential merge at the end.

use crate::geometry::{minibox, EdgeSet, PointCloud};
use crate::search::{
    AxisRange, KdTree, LayeredRangeTree, OrderedStaircase, PrioritySearchTree, PstNode, Rect,
    SENTINEL, SENTINEL_INDEX,
};
use rayon::prelude::*;
use std::ops::Bound;
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MiniboxStrategy {
    BruteForce,
    Sweep2D,
    Staircase3D,
    PstRangeTree3D,
    RangeTreeHighD,
    KdTreeHighD,
}

impl MiniboxStrategy {
    pub fn name(self) -> &'static str {
        match self {
            Self::BruteForce => "brute",
            Self::Sweep2D => "sweep2d",
            Self::Staircase3D => "staircase3d",
            Self::PstRangeTree3D => "pst3d",
            Self::RangeTreeHighD => "rangetree",
            Self::KdTreeHighD => "kdtree",
        }
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum StrategyError {
    #[error("strategy {strategy} requires dimension {expected}, cloud has {got}")]
    WrongDimension {
        strategy: &'static str,
        expected: &'static str,
        got: usize,
    },
}

/// Best strategy per dimension: the 2-D sweep, the 3-D priority-search-tree
/// algorithm, orthogonal range trees above that.
pub fn auto_strategy(dim: usize) -> MiniboxStrategy {
    match dim {
        0 | 1 => MiniboxStrategy::BruteForce,
        2 => MiniboxStrategy::Sweep2D,
        3 => MiniboxStrategy::PstRangeTree3D,
        _ => MiniboxStrategy::RangeTreeHighD,
    }
}

pub fn minibox_edges(
    cloud: &PointCloud,
    strategy: MiniboxStrategy,
) -> Result<EdgeSet, StrategyError> {
    match strategy {
        MiniboxStrategy::BruteForce => Ok(minibox_edges_brute(cloud)),
        MiniboxStrategy::Sweep2D => minibox_edges_2d(cloud),
        MiniboxStrategy::Staircase3D => minibox_edges_3d_staircase(cloud),
        MiniboxStrategy::PstRangeTree3D => minibox_edges_3d_pst(cloud),
        MiniboxStrategy::RangeTreeHighD | MiniboxStrategy::KdTreeHighD => {
            minibox_edges_highd(cloud, strategy)
        }
    }
}

#[inline]
fn open_box_blocked(cloud: &PointCloud, i: usize, j: usize) -> bool {
    let dim = cloud.dim();
    let p = cloud.point(i);
    let q = cloud.point(j);
    'outer: for m in 0..cloud.len() {
        if m == i || m == j {
            continue;
        }
        let y = cloud.point(m);
        for a in 0..dim {
            let (lo, hi) = if p[a] < q[a] { (p[a], q[a]) } else { (q[a], p[a]) };
            if !(lo < y[a] && y[a] < hi) {
                continue 'outer;
            }
        }
        return true;
    }
    false
}

/// Reference oracle: tests every pair by a linear scan, O(d n^3).
pub fn minibox_edges_brute(cloud: &PointCloud) -> EdgeSet {
    let n = cloud.len();
    let pairs: Vec<(u32, u32)> = (0..n)
        .into_par_iter()
        .flat_map_iter(|i| {
            (i + 1..n)
                .filter(move |&j| !open_box_blocked(cloud, i, j))
                .map(move |j| (i as u32, j as u32))
        })
        .collect();
    EdgeSet::from_pairs(pairs, cloud)
}

// ------------------------------------------------------------- 2-D sweep --

/// Segment tree over y-ranks holding the x coordinate of activated points;
/// answers "leftmost rank >= from whose stored x is below c".
struct MinSegTree {
    size: usize,
    vals: Vec<f64>,
}

impl MinSegTree {
    fn new(n: usize) -> Self {
        let size = n.next_power_of_two().max(1);
        Self {
            size,
            vals: vec![f64::INFINITY; 2 * size],
        }
    }

    fn set(&mut self, i: usize, v: f64) {
        let mut node = self.size + i;
        self.vals[node] = v;
        node /= 2;
        while node >= 1 {
            self.vals[node] = self.vals[2 * node].min(self.vals[2 * node + 1]);
            if node == 1 {
                break;
            }
            node /= 2;
        }
    }

    fn first_below(&self, from: usize, c: f64) -> Option<usize> {
        self.descend(1, 0, self.size, from, c)
    }

    fn descend(&self, node: usize, l: usize, r: usize, from: usize, c: f64) -> Option<usize> {
        if r <= from || self.vals[node] >= c {
            return None;
        }
        if r - l == 1 {
            return Some(l);
        }
        let mid = (l + r) / 2;
        self.descend(2 * node, l, mid, from, c)
            .or_else(|| self.descend(2 * node + 1, mid, r, from, c))
    }
}

/// All direct dominance pairs of the projection `(sx * x, sy * y)`, reported
/// as `(dominated, dominator)` index pairs.
///
/// Sweeps x downward; for each point the dominators are walked along the
/// staircase of minima of its upper-right quadrant, one O(log n) query per
/// reported pair.
fn direct_dominance_sweep(cloud: &PointCloud, sx: f64, sy: f64) -> Vec<(u32, u32)> {
    let n = cloud.len();
    let x = |i: usize| sx * cloud.coord(i, 0);
    let y = |i: usize| sy * cloud.coord(i, 1);
    let mut by_x: Vec<usize> = (0..n).collect();
    by_x.sort_by(|&a, &b| x(b).partial_cmp(&x(a)).unwrap().then(a.cmp(&b)));
    let mut by_y: Vec<usize> = (0..n).collect();
    by_y.sort_by(|&a, &b| y(a).partial_cmp(&y(b)).unwrap().then(a.cmp(&b)));
    let mut rank = vec![0usize; n];
    for (r, &i) in by_y.iter().enumerate() {
        rank[i] = r;
    }
    let mut tree = MinSegTree::new(n);
    let mut pairs = Vec::new();
    for &p in &by_x {
        // walk the minima of { seen q : q_y > p_y } by decreasing x
        let mut cap = f64::INFINITY;
        let mut from = rank[p] + 1;
        while let Some(r) = tree.first_below(from, cap) {
            let q = by_y[r];
            pairs.push((p as u32, q as u32));
            cap = x(q);
            from = r + 1;
        }
        tree.set(rank[p], x(p));
    }
    pairs
}

/// Two-dimensional Minibox edges: the direct-dominance staircase sweep
/// applied to the cloud and to its reflection over the x axis, unioned.
pub fn minibox_edges_2d(cloud: &PointCloud) -> Result<EdgeSet, StrategyError> {
    if cloud.dim() != 2 {
        return Err(StrategyError::WrongDimension {
            strategy: "sweep2d",
            expected: "2",
            got: cloud.dim(),
        });
    }
    let mut pairs = direct_dominance_sweep(cloud, 1.0, 1.0);
    pairs.extend(direct_dominance_sweep(cloud, 1.0, -1.0));
    Ok(EdgeSet::from_pairs(pairs, cloud))
}

// --------------------------------------------------------- 3-D staircase --

/// Three-dimensional Minibox edges by an upward plane sweep per anchor,
/// maintaining one staircase per quadrant of the sweep plane; quadrants are
/// realized by reflecting the plane coordinates to absolute values.
/// O(n^2 log n) time, O(n) working space per anchor.
pub fn minibox_edges_3d_staircase(cloud: &PointCloud) -> Result<EdgeSet, StrategyError> {
    if cloud.dim() != 3 {
        return Err(StrategyError::WrongDimension {
            strategy: "staircase3d",
            expected: "3",
            got: cloud.dim(),
        });
    }
    let order = cloud.order_by_axis(2);
    let pairs: Vec<(u32, u32)> = (0..order.len())
        .into_par_iter()
        .flat_map_iter(|a| {
            let mut quads = [
                OrderedStaircase::new(),
                OrderedStaircase::new(),
                OrderedStaircase::new(),
                OrderedStaircase::new(),
            ];
            let p = order[a] as usize;
            let (px, py) = (cloud.coord(p, 0), cloud.coord(p, 1));
            let mut found = Vec::new();
            for &q in &order[a + 1..] {
                let qi = q as usize;
                let dx = cloud.coord(qi, 0) - px;
                let dy = cloud.coord(qi, 1) - py;
                let l = ((dx > 0.0) as usize) | (((dy > 0.0) as usize) << 1);
                if quads[l].insert([dx.abs(), dy.abs()]) {
                    found.push((p as u32, q));
                }
            }
            found
        })
        .collect();
    Ok(EdgeSet::from_pairs(pairs, cloud))
}

// --------------------------------------------------- 3-D PST + range tree --

fn open_range(lo: f64, hi: f64) -> AxisRange {
    AxisRange {
        lo: if lo.is_finite() {
            Bound::Excluded(lo)
        } else {
            Bound::Unbounded
        },
        hi: if hi.is_finite() {
            Bound::Excluded(hi)
        } else {
            Bound::Unbounded
        },
    }
}

/// Direct-dominance partners above `p` in one reflected copy of the cloud,
/// driven by min-z queries against the shared range tree.
fn pst_partners(tcloud: &PointCloud, tree: &LayeredRangeTree, p: usize) -> Vec<u32> {
    let (px, py, pz) = (
        tcloud.coord(p, 0),
        tcloud.coord(p, 1),
        tcloud.coord(p, 2),
    );
    let min_z = |rect: &Rect| -> PstNode {
        let ranges = [
            open_range(rect.x[0], rect.x[1]),
            open_range(rect.y[0], rect.y[1]),
            AxisRange::above(pz),
        ];
        match tree.min_last_in_range(&ranges) {
            Some(idx) => {
                let q = tcloud.point(idx as usize);
                PstNode {
                    point: [q[0], q[1], q[2]],
                    index: idx,
                    rect: *rect,
                }
            }
            None => PstNode {
                point: SENTINEL,
                index: SENTINEL_INDEX,
                rect: *rect,
            },
        }
    };
    let full = Rect {
        x: [px, f64::INFINITY],
        y: [py, f64::INFINITY],
    };
    let first = min_z(&full);
    if first.marked() {
        return Vec::new();
    }
    let mut pst = PrioritySearchTree::new([px, py], first);
    let mut partners = Vec::new();
    while !pst.root_marked() {
        let pop = pst.pop_min().expect("unmarked root");
        partners.push(pop.index);
        pst.insert(min_z(&pop.left));
        pst.insert(min_z(&pop.right));
    }
    partners
}

/// Three-dimensional Minibox edges as direct dominance pairs of the
/// 2^{d-1} = 4 xy-reflections of the cloud, each computed with a priority
/// search tree fed by min-z range-tree queries. O(k log^2 n) time,
/// O(n log^2 n) space.
pub fn minibox_edges_3d_pst(cloud: &PointCloud) -> Result<EdgeSet, StrategyError> {
    if cloud.dim() != 3 {
        return Err(StrategyError::WrongDimension {
            strategy: "pst3d",
            expected: "3",
            got: cloud.dim(),
        });
    }
    let n = cloud.len();
    let mut pairs: Vec<(u32, u32)> = Vec::new();
    for (sx, sy) in [(1.0, 1.0), (-1.0, 1.0), (1.0, -1.0), (-1.0, -1.0)] {
        let tcloud = PointCloud::new(
            (0..n)
                .map(|i| {
                    vec![
                        sx * cloud.coord(i, 0),
                        sy * cloud.coord(i, 1),
                        cloud.coord(i, 2),
                    ]
                })
                .collect(),
        )
        .expect("reflected cloud");
        let tree = LayeredRangeTree::build(&tcloud);
        let found: Vec<(u32, u32)> = (0..n)
            .into_par_iter()
            .flat_map_iter(|p| {
                pst_partners(&tcloud, &tree, p)
                    .into_iter()
                    .map(move |q| (p as u32, q))
            })
            .collect();
        pairs.extend(found);
    }
    Ok(EdgeSet::from_pairs(pairs, cloud))
}

// ------------------------------------------------------ higher dimensions --

/// Minibox edges in any dimension >= 2 by testing all pairs with orthogonal
/// range emptiness queries on the open minibox: a layered range tree
/// (O(n^2 log^{d-1} n)) or a kd-tree (O(n^{3-1/d})).
pub fn minibox_edges_highd(
    cloud: &PointCloud,
    strategy: MiniboxStrategy,
) -> Result<EdgeSet, StrategyError> {
    if cloud.dim() < 2 {
        return Err(StrategyError::WrongDimension {
            strategy: strategy.name(),
            expected: ">= 2",
            got: cloud.dim(),
        });
    }
    enum Tree<'a> {
        Range(LayeredRangeTree<'a>),
        Kd(KdTree<'a>),
    }
    let tree = match strategy {
        MiniboxStrategy::RangeTreeHighD => Tree::Range(LayeredRangeTree::build(cloud)),
        MiniboxStrategy::KdTreeHighD => Tree::Kd(KdTree::build(cloud)),
        other => {
            return Err(StrategyError::WrongDimension {
                strategy: other.name(),
                expected: "rangetree or kdtree",
                got: cloud.dim(),
            })
        }
    };
    let empty = |i: usize, j: usize| {
        let b = minibox(cloud.point(i), cloud.point(j));
        match &tree {
            Tree::Range(t) => t.range_empty(&b),
            Tree::Kd(t) => t.range_empty(&b),
        }
    };
    let n = cloud.len();
    let pairs: Vec<(u32, u32)> = (0..n)
        .into_par_iter()
        .flat_map_iter(|i| {
            let empty = &empty;
            (i + 1..n)
                .filter(move |&j| empty(i, j))
                .map(move |j| (i as u32, j as u32))
        })
        .collect();
    Ok(EdgeSet::from_pairs(pairs, cloud))
}

// -------------------------------------------------------- direct dominance --

#[inline]
fn dominates(p: &[f64], q: &[f64]) -> bool {
    p.iter().zip(q).all(|(a, b)| a > b)
}

/// All pairs where one point dominates the other with no third point
/// between them; exactly the Minibox edges of comparable pairs.
pub fn direct_dominance_pairs(cloud: &PointCloud) -> EdgeSet {
    let edges = minibox_edges(cloud, auto_strategy(cloud.dim())).expect("auto strategy fits");
    let pairs = edges.iter().filter_map(|e| {
        let (p, q) = (cloud.point(e.i as usize), cloud.point(e.j as usize));
        (dominates(p, q) || dominates(q, p)).then_some((e.i, e.j))
    });
    EdgeSet::from_pairs(pairs, cloud)
}
