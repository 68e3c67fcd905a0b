//! Persistence diagrams over the two-element field: union-find with the
//! elder rule for degree zero, column reduction with the clearing
//! optimization for degrees one and two.

use crate::filtration::Filtration;
use std::collections::{HashMap, HashSet};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum PersistenceError {
    #[error("filtration of max dimension {max_dim} cannot yield degree-{degree} deaths; build with max_dim >= {}", degree + 1)]
    InsufficientDim { max_dim: usize, degree: usize },
}

/// Multiset of `(birth, death)` pairs per homological degree, `None`
/// encoding an infinite death. Zero-persistence pairs are dropped; pairs
/// are kept sorted so diagrams compare as plain slices.
#[derive(Clone, Debug, PartialEq)]
pub struct Diagram {
    by_degree: Vec<Vec<(f64, Option<f64>)>>,
}

impl Diagram {
    fn new(max_degree: usize) -> Self {
        Self {
            by_degree: vec![Vec::new(); max_degree + 1],
        }
    }

    fn add(&mut self, degree: usize, birth: f64, death: Option<f64>) {
        if death == Some(birth) {
            return;
        }
        self.by_degree[degree].push((birth, death));
    }

    fn finalize(mut self) -> Self {
        let key = |p: &(f64, Option<f64>)| (p.0, p.1.unwrap_or(f64::INFINITY));
        for pairs in &mut self.by_degree {
            pairs.sort_by(|a, b| key(a).partial_cmp(&key(b)).unwrap());
        }
        self
    }

    pub fn max_degree(&self) -> usize {
        self.by_degree.len() - 1
    }

    pub fn degrees(&self) -> std::ops::RangeInclusive<usize> {
        0..=self.max_degree()
    }

    /// Pairs of one degree, sorted by `(birth, death)` with infinity last.
    pub fn pairs(&self, degree: usize) -> &[(f64, Option<f64>)] {
        self.by_degree
            .get(degree)
            .map_or(&[], |pairs| pairs.as_slice())
    }

    pub fn infinite_count(&self, degree: usize) -> usize {
        self.pairs(degree).iter().filter(|p| p.1.is_none()).count()
    }
}

/// Multiset equality of two diagrams on the requested degrees, exact float
/// comparison (matching values originate from identical computations).
pub fn diagrams_equal(a: &Diagram, b: &Diagram, degrees: &[usize]) -> bool {
    degrees.iter().all(|&k| a.pairs(k) == b.pairs(k))
}

struct UnionFind {
    parent: Vec<u32>,
    rank: Vec<u8>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n as u32).collect(),
            rank: vec![0; n],
        }
    }

    fn find(&mut self, mut v: u32) -> u32 {
        let mut root = v;
        while self.parent[root as usize] != root {
            root = self.parent[root as usize];
        }
        while self.parent[v as usize] != v {
            let next = self.parent[v as usize];
            self.parent[v as usize] = root;
            v = next;
        }
        root
    }

    /// False when both were already in the same component.
    fn union(&mut self, a: u32, b: u32) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.rank[ra as usize] < self.rank[rb as usize] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb as usize] = ra;
        if self.rank[ra as usize] == self.rank[rb as usize] {
            self.rank[ra as usize] += 1;
        }
        true
    }
}

/// Degree-zero diagram by union-find: every vertex is born at zero, each
/// component-merging edge kills one class at its value (elder rule; all
/// births coincide so the tie-break cannot change the multiset), and one
/// infinite pair remains per final component.
pub fn persistence_h0(filtration: &Filtration) -> Diagram {
    let n = filtration.n_vertices();
    let mut uf = UnionFind::new(n);
    let mut diagram = Diagram::new(0);
    let mut components = n;
    for s in filtration.simplices() {
        if s.dim() != 1 {
            continue;
        }
        let vs = s.vertices();
        if uf.union(vs[0], vs[1]) {
            components -= 1;
            diagram.add(0, 0.0, Some(s.value));
        }
    }
    for _ in 0..components {
        diagram.add(0, 0.0, None);
    }
    diagram.finalize()
}

/// Standard column reduction over F2 in filtration order, one dimension at
/// a time from the top down so that pivots of dimension k+1 clear the
/// corresponding creator columns of dimension k before they are reduced.
pub fn persistence_reduce(
    filtration: &Filtration,
    max_degree: usize,
) -> Result<Diagram, PersistenceError> {
    persistence_reduce_with(filtration, max_degree, true)
}

/// Reduction with the clearing optimization switchable, for the
/// self-consistency check; the diagrams are identical either way.
pub fn persistence_reduce_with(
    filtration: &Filtration,
    max_degree: usize,
    clearing: bool,
) -> Result<Diagram, PersistenceError> {
    if filtration.max_dim() < max_degree + 1 {
        return Err(PersistenceError::InsufficientDim {
            max_dim: filtration.max_dim(),
            degree: max_degree,
        });
    }
    let top = (max_degree + 1).min(filtration.max_dim());
    let mut cols_by_dim: Vec<Vec<u32>> = vec![Vec::new(); top + 1];
    for (i, s) in filtration.simplices().iter().enumerate() {
        if s.dim() <= top {
            cols_by_dim[s.dim()].push(i as u32);
        }
    }
    let mut diagram = Diagram::new(max_degree);
    // global indices killed as pivot rows of the dimension above
    let mut killed_above: HashSet<u32> = HashSet::new();
    for k in (1..=top).rev() {
        let mut next_killed: HashSet<u32> = HashSet::new();
        let mut reduced: Vec<Vec<u32>> = Vec::new();
        let mut pivot_owner: HashMap<u32, usize> = HashMap::new();
        for &j in &cols_by_dim[k] {
            let cleared = killed_above.contains(&j);
            if clearing && cleared {
                continue;
            }
            let mut col: Vec<u32> = filtration.boundary(j as usize).to_vec();
            while let Some(&low) = col.last() {
                match pivot_owner.get(&low) {
                    Some(&owner) => col = xor_sorted(&col, &reduced[owner]),
                    None => break,
                }
            }
            match col.last() {
                Some(&low) => {
                    diagram.add(
                        k - 1,
                        filtration.value(low as usize),
                        Some(filtration.value(j as usize)),
                    );
                    next_killed.insert(low);
                    pivot_owner.insert(low, reduced.len());
                    reduced.push(col);
                }
                None => {
                    // a creator; paired upward iff some (k+1)-column had it
                    // as pivot, otherwise its class lives forever
                    if !cleared && k <= max_degree {
                        diagram.add(k, filtration.value(j as usize), None);
                    }
                }
            }
        }
        killed_above = next_killed;
    }
    // vertices are all creators; the unkilled ones are the components
    for &v in &cols_by_dim[0] {
        if !killed_above.contains(&v) {
            diagram.add(0, filtration.value(v as usize), None);
        }
    }
    Ok(diagram.finalize())
}

/// Symmetric difference of two ascending index lists.
fn xor_sorted(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}
