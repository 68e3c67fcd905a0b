//! Dynamic priority search tree over the "vertical" rectangles of a sweep
//! quadrant: a treap ordered on the rectangles' left x-edges whose heap
//! priority is the stored point's z coordinate, so the root always holds the
//! globally smallest unreported z.
//!
//! Marked nodes represent empty rectangles and store the literal sentinel
//! `(+inf, +inf, +inf)`, which makes the stop condition of the reporting loop
//! a plain comparison on the root.

use thiserror::Error;

pub const SENTINEL: [f64; 3] = [f64::INFINITY, f64::INFINITY, f64::INFINITY];

/// Index stored in marked nodes, which hold no real point.
pub const SENTINEL_INDEX: u32 = u32::MAX;

#[derive(Debug, Error, PartialEq)]
pub enum PstError {
    #[error("pop on a tree whose root is marked")]
    RootMarked,
    #[error("pop on an empty tree")]
    Empty,
}

/// Axis-parallel rectangle in the sweep plane, `x` and `y` ranges.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Rect {
    pub x: [f64; 2],
    pub y: [f64; 2],
}

/// A stored point (with its cloud index) together with the rectangle it is
/// the z-minimum of. `point == SENTINEL` marks an empty rectangle.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PstNode {
    pub point: [f64; 3],
    pub index: u32,
    pub rect: Rect,
}

impl PstNode {
    pub fn marked(&self) -> bool {
        self.point[2].is_infinite()
    }
}

/// Result of popping the root: the reported point and the two replacement
/// rectangles, left and right of it.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PopMin {
    pub point: [f64; 3],
    pub index: u32,
    pub left: Rect,
    pub right: Rect,
}

struct Node {
    data: PstNode,
    left: Option<usize>,
    right: Option<usize>,
}

pub struct PrioritySearchTree {
    arena: Vec<Node>,
    root: Option<usize>,
    /// Quadrant corner `(x_lo, y_lo)`; bottoms the right replacement
    /// rectangle when nothing survives to the right of a popped point.
    base: [f64; 2],
    len: usize,
}

impl PrioritySearchTree {
    /// Initializes the quadrant with a single node, normally the z-minimal
    /// point of the whole quadrant paired with the full quadrant rectangle.
    pub fn new(base: [f64; 2], first: PstNode) -> Self {
        let mut t = Self {
            arena: Vec::new(),
            root: None,
            base,
            len: 0,
        };
        t.insert(first);
        t
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn root_node(&self) -> Option<&PstNode> {
        self.root.map(|i| &self.arena[i].data)
    }

    /// True when the reporting loop must stop: the minimum stored z is the
    /// sentinel, hence every rectangle is empty.
    pub fn root_marked(&self) -> bool {
        self.root_node().map_or(true, PstNode::marked)
    }

    fn key(&self, i: usize) -> f64 {
        self.arena[i].data.rect.x[0]
    }

    fn prio(&self, i: usize) -> f64 {
        self.arena[i].data.point[2]
    }

    fn merge(&mut self, a: Option<usize>, b: Option<usize>) -> Option<usize> {
        match (a, b) {
            (None, t) | (t, None) => t,
            (Some(i), Some(j)) => {
                if self.prio(i) <= self.prio(j) {
                    let r = self.arena[i].right;
                    let merged = self.merge(r, Some(j));
                    self.arena[i].right = merged;
                    Some(i)
                } else {
                    let l = self.arena[j].left;
                    let merged = self.merge(Some(i), l);
                    self.arena[j].left = merged;
                    Some(j)
                }
            }
        }
    }

    /// Splits into keys `< key` and keys `>= key`.
    fn split(&mut self, t: Option<usize>, key: f64) -> (Option<usize>, Option<usize>) {
        match t {
            None => (None, None),
            Some(i) => {
                if self.key(i) < key {
                    let r = self.arena[i].right;
                    let (a, b) = self.split(r, key);
                    self.arena[i].right = a;
                    (Some(i), b)
                } else {
                    let l = self.arena[i].left;
                    let (a, b) = self.split(l, key);
                    self.arena[i].left = b;
                    (a, Some(i))
                }
            }
        }
    }

    pub fn insert(&mut self, data: PstNode) {
        let idx = self.arena.len();
        self.arena.push(Node {
            data,
            left: None,
            right: None,
        });
        let key = self.key(idx);
        let root = self.root;
        let (l, r) = self.split(root, key);
        let lr = self.merge(l, Some(idx));
        self.root = self.merge(lr, r);
        self.len += 1;
    }

    fn remove_by_key(&mut self, key: f64) -> Option<PstNode> {
        fn rec(t: &mut PrioritySearchTree, node: Option<usize>, key: f64) -> (Option<usize>, Option<usize>) {
            let Some(i) = node else { return (None, None) };
            let k = t.key(i);
            if key < k {
                let l = t.arena[i].left;
                let (new_l, removed) = rec(t, l, key);
                t.arena[i].left = new_l;
                (Some(i), removed)
            } else if key > k {
                let r = t.arena[i].right;
                let (new_r, removed) = rec(t, r, key);
                t.arena[i].right = new_r;
                (Some(i), removed)
            } else {
                let (l, r) = (t.arena[i].left, t.arena[i].right);
                let merged = t.merge(l, r);
                (merged, Some(i))
            }
        }
        let root = self.root;
        let (new_root, removed) = rec(self, root, key);
        self.root = new_root;
        removed.map(|i| {
            self.len -= 1;
            self.arena[i].data
        })
    }

    /// Smallest stored key strictly greater than `key`.
    fn successor(&self, key: f64) -> Option<usize> {
        let mut best = None;
        let mut cur = self.root;
        while let Some(i) = cur {
            if self.key(i) > key {
                best = Some(i);
                cur = self.arena[i].left;
            } else {
                cur = self.arena[i].right;
            }
        }
        best
    }

    /// Removes the root (the z-minimal stored point), deletes every node
    /// whose rectangle `[x1,x2] x [y1,y2]` satisfies `q_x < x2` and
    /// `q_y < y2`, and returns the popped point with the two replacement
    /// rectangles.
    ///
    /// Deletion walks in order from `q_x` rightward; the staircase geometry
    /// makes the qualifying nodes a contiguous run, so the walk stops at the
    /// first survivor, whose left edge and bottom bound the right
    /// replacement rectangle.
    pub fn pop_min(&mut self) -> Result<PopMin, PstError> {
        let root = self.root.ok_or(PstError::Empty)?;
        let data = self.arena[root].data;
        if data.marked() {
            return Err(PstError::RootMarked);
        }
        let [qx, qy, _] = data.point;
        self.remove_by_key(data.rect.x[0]);
        let mut hat: Option<Rect> = None;
        loop {
            let Some(i) = self.successor(qx) else { break };
            let rect = self.arena[i].data.rect;
            if qx < rect.x[1] && qy < rect.y[1] {
                self.remove_by_key(rect.x[0]);
            } else {
                hat = Some(rect);
                break;
            }
        }
        let (hat_x1, hat_y1) = match hat {
            Some(r) => (r.x[0], r.y[0]),
            None => (f64::INFINITY, self.base[1]),
        };
        Ok(PopMin {
            point: data.point,
            index: data.index,
            left: Rect {
                x: [data.rect.x[0], qx],
                y: data.rect.y,
            },
            right: Rect {
                x: [qx, hat_x1],
                y: [hat_y1, qy],
            },
        })
    }

    /// All stored nodes in increasing key order.
    pub fn nodes(&self) -> Vec<PstNode> {
        let mut out = Vec::with_capacity(self.len);
        let mut stack = Vec::new();
        let mut cur = self.root;
        while cur.is_some() || !stack.is_empty() {
            while let Some(i) = cur {
                stack.push(i);
                cur = self.arena[i].left;
            }
            let i = stack.pop().unwrap();
            out.push(self.arena[i].data);
            cur = self.arena[i].right;
        }
        out
    }

    /// Heap invariant: every stored z is at least the root's z.
    #[cfg(test)]
    fn heap_ok(&self) -> bool {
        fn rec(t: &PrioritySearchTree, node: Option<usize>) -> bool {
            let Some(i) = node else { return true };
            let ok_l = t.arena[i].left.map_or(true, |l| t.prio(l) >= t.prio(i));
            let ok_r = t.arena[i].right.map_or(true, |r| t.prio(r) >= t.prio(i));
            ok_l && ok_r && rec(t, t.arena[i].left) && rec(t, t.arena[i].right)
        }
        rec(self, self.root)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::staircase::OrderedStaircase;
    use proptest::prelude::*;

    #[test]
    fn single_node_pop_partitions_quadrant() {
        let base = [0.0, 0.0];
        let q = [2.0, 3.0, 1.0];
        let full = Rect {
            x: [0.0, f64::INFINITY],
            y: [0.0, f64::INFINITY],
        };
        let mut t = PrioritySearchTree::new(
            base,
            PstNode {
                point: q,
                index: 0,
                rect: full,
            },
        );
        let pop = t.pop_min().unwrap();
        assert_eq!(pop.point, q);
        assert_eq!(
            pop.left,
            Rect {
                x: [0.0, 2.0],
                y: [0.0, f64::INFINITY]
            }
        );
        assert_eq!(
            pop.right,
            Rect {
                x: [2.0, f64::INFINITY],
                y: [0.0, 3.0]
            }
        );
        assert!(t.is_empty());
        assert!(t.root_marked());
    }

    #[test]
    fn pop_on_marked_root_is_an_error() {
        let full = Rect {
            x: [0.0, f64::INFINITY],
            y: [0.0, f64::INFINITY],
        };
        let mut t = PrioritySearchTree::new(
            [0.0, 0.0],
            PstNode {
                point: SENTINEL,
                index: SENTINEL_INDEX,
                rect: full,
            },
        );
        assert!(t.root_marked());
        assert_eq!(t.pop_min(), Err(PstError::RootMarked));
    }

    /// Runs the per-quadrant reporting loop against a naive min-z oracle and
    /// a shadow staircase, checking after every pop that the root was the
    /// true z-minimum, the heap invariant holds, and the stored rectangles
    /// are exactly the slab decomposition under the staircase of reported
    /// points: disjoint in x, contiguous, bottoms at the quadrant base.
    fn run_quadrant_checked(points: &[[f64; 3]]) -> Vec<[f64; 3]> {
        let base = [0.0, 0.0];
        let min_z_in = |r: &Rect| -> [f64; 3] {
            points
                .iter()
                .filter(|p| p[0] > r.x[0] && p[0] < r.x[1] && p[1] > r.y[0] && p[1] < r.y[1])
                .copied()
                .min_by(|a, b| a[2].partial_cmp(&b[2]).unwrap())
                .unwrap_or(SENTINEL)
        };
        let full = Rect {
            x: [base[0], f64::INFINITY],
            y: [base[1], f64::INFINITY],
        };
        let first = min_z_in(&full);
        let mut t = PrioritySearchTree::new(
            base,
            PstNode {
                point: first,
                index: 0,
                rect: full,
            },
        );
        let mut shadow = OrderedStaircase::new();
        let mut reported = Vec::new();
        while !t.root_marked() {
            // the root must be the z-minimum over all unreported quadrant points
            let live_min = points
                .iter()
                .filter(|p| !reported.contains(*p))
                .filter(|p| !shadow.points().any(|s| p[0] > s[0] && p[1] > s[1]))
                .copied()
                .min_by(|a, b| a[2].partial_cmp(&b[2]).unwrap())
                .unwrap();
            assert_eq!(t.root_node().unwrap().point, live_min);
            let pop = t.pop_min().unwrap();
            reported.push(pop.point);
            assert!(shadow.insert([pop.point[0], pop.point[1]]));
            for (rect, q) in [(pop.left, min_z_in(&pop.left)), (pop.right, min_z_in(&pop.right))] {
                t.insert(PstNode {
                    point: q,
                    index: 0,
                    rect,
                });
            }
            assert!(t.heap_ok());
            // slab decomposition of the area under the shadow staircase
            let stairs: Vec<[f64; 2]> = shadow.points().collect();
            let mut expected = Vec::new();
            let mut x_lo = base[0];
            let mut y_hi = f64::INFINITY;
            for s in &stairs {
                expected.push(Rect {
                    x: [x_lo, s[0]],
                    y: [base[1], y_hi],
                });
                x_lo = s[0];
                y_hi = s[1];
            }
            expected.push(Rect {
                x: [x_lo, f64::INFINITY],
                y: [base[1], y_hi],
            });
            let got: Vec<Rect> = t.nodes().iter().map(|n| n.rect).collect();
            assert_eq!(got, expected);
        }
        assert!(t.nodes().iter().all(PstNode::marked));
        reported
    }

    proptest! {
        #[test]
        fn reporting_loop_matches_oracle(n in 1..=20usize, seed in 0..10_000u64) {
            // distinct coordinates per axis via three independent shuffles
            use rand::seq::SliceRandom;
            use rand::SeedableRng;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut xs: Vec<f64> = (1..=n).map(|v| v as f64).collect();
            let mut ys = xs.clone();
            let mut zs = xs.clone();
            xs.shuffle(&mut rng);
            ys.shuffle(&mut rng);
            zs.shuffle(&mut rng);
            let points: Vec<[f64; 3]> = (0..n).map(|i| [xs[i], ys[i], zs[i]]).collect();
            let reported = run_quadrant_checked(&points);
            // reported = exactly the direct-dominance partners of the corner:
            // points whose lower-left open box (in all three coordinates)
            // contains no other point
            let expected: Vec<[f64; 3]> = points
                .iter()
                .filter(|p| {
                    !points
                        .iter()
                        .any(|q| q[0] < p[0] && q[1] < p[1] && q[2] < p[2])
                })
                .copied()
                .collect();
            let mut got = reported.clone();
            got.sort_by(|a, b| a[2].partial_cmp(&b[2]).unwrap());
            let mut want = expected.clone();
            want.sort_by(|a, b| a[2].partial_cmp(&b[2]).unwrap());
            prop_assert_eq!(got, want);
        }
    }
}
