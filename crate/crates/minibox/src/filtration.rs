//! Flag filtrations over an edge set: clique expansion to triangles and
//! tetrahedra, simplexwise ordering by `(value, dimension, vertices)`, and
//! the sparse boundary structure consumed by the persistence reduction.
//!
//! Every complex here is flag, so a simplex enters at the maximum of its
//! edges' values; vertices enter at zero.

use crate::geometry::{EdgeSet, PointCloud};
use std::collections::HashMap;

/// A simplex of dimension 0..=3: sorted vertex indices and the filtration
/// radius at which it appears.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Simplex {
    verts: [u32; 4],
    len: u8,
    pub value: f64,
}

impl Simplex {
    pub fn new(vertices: &[u32], value: f64) -> Self {
        assert!((1..=4).contains(&vertices.len()));
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        let mut verts = [u32::MAX; 4];
        verts[..vertices.len()].copy_from_slice(vertices);
        Self {
            verts,
            len: vertices.len() as u8,
            value,
        }
    }

    pub fn vertices(&self) -> &[u32] {
        &self.verts[..self.len as usize]
    }

    pub fn dim(&self) -> usize {
        self.len as usize - 1
    }
}

/// Neighbor lists (sorted by index) with the shared edge values attached.
fn adjacency(edges: &EdgeSet, n: usize) -> Vec<Vec<(u32, f64)>> {
    let mut adj = vec![Vec::new(); n];
    for e in edges.iter() {
        adj[e.i as usize].push((e.j, e.value));
        adj[e.j as usize].push((e.i, e.value));
    }
    for list in &mut adj {
        list.sort_unstable_by(|a, b| a.0.cmp(&b.0));
    }
    adj
}

/// All vertex triples whose three edges are present; the value of a triangle
/// is the largest of its edge values. Touches each triangle once by scanning
/// common neighbors above the edge's larger endpoint.
pub fn clique_triangles(edges: &EdgeSet, n: usize) -> Vec<Simplex> {
    let adj = adjacency(edges, n);
    let mut out = Vec::new();
    for e in edges.iter() {
        let (u, v) = (e.i as usize, e.j as usize);
        let (mut a, mut b) = (0, 0);
        let (au, av) = (&adj[u], &adj[v]);
        while a < au.len() && b < av.len() {
            let (wa, val_uw) = au[a];
            let (wb, val_vw) = av[b];
            if wa <= e.j {
                a += 1;
            } else if wb <= e.j {
                b += 1;
            } else if wa < wb {
                a += 1;
            } else if wb < wa {
                b += 1;
            } else {
                let value = e.value.max(val_uw).max(val_vw);
                out.push(Simplex::new(&[e.i, e.j, wa], value));
                a += 1;
                b += 1;
            }
        }
    }
    out
}

/// All 4-cliques; the value of a tetrahedron is the largest of its six edge
/// values, i.e. the largest value among its triangles and closing edges.
pub fn clique_tetrahedra(edges: &EdgeSet, triangles: &[Simplex]) -> Vec<Simplex> {
    let n = edges.iter().map(|e| e.j).max().map_or(0, |m| m as usize + 1);
    let adj = adjacency(edges, n);
    let mut out = Vec::new();
    for t in triangles {
        let [u, v, w] = [t.vertices()[0], t.vertices()[1], t.vertices()[2]];
        let (mut a, mut b, mut c) = (0, 0, 0);
        let (au, av, aw) = (&adj[u as usize], &adj[v as usize], &adj[w as usize]);
        while a < au.len() && b < av.len() && c < aw.len() {
            let (xa, val_ux) = au[a];
            let (xb, val_vx) = av[b];
            let (xc, val_wx) = aw[c];
            let m = xa.min(xb).min(xc);
            if m <= w {
                if xa == m {
                    a += 1;
                }
                if xb == m {
                    b += 1;
                }
                if xc == m {
                    c += 1;
                }
                continue;
            }
            if xa == m && xb == m && xc == m {
                let value = t.value.max(val_ux).max(val_vx).max(val_wx);
                out.push(Simplex::new(&[u, v, w, xa], value));
                a += 1;
                b += 1;
                c += 1;
            } else {
                if xa == m {
                    a += 1;
                }
                if xb == m {
                    b += 1;
                }
                if xc == m {
                    c += 1;
                }
            }
        }
    }
    out
}

/// A simplexwise-ordered flag filtration with its sparse boundary lists.
pub struct Filtration {
    simplices: Vec<Simplex>,
    /// Facet indices of each simplex, ascending; all precede the simplex.
    boundaries: Vec<Vec<u32>>,
    n_vertices: usize,
    max_dim: usize,
}

/// Assembles the filtration of the flag complex on `edges` up to `max_dim`
/// (1 = graph, 2 = triangles, 3 = tetrahedra): vertices at value zero, every
/// other simplex at its diameter-based value, sorted by
/// `(value, dimension, vertices)`.
pub fn build_filtration(cloud: &PointCloud, edges: &EdgeSet, max_dim: usize) -> Filtration {
    assert!((1..=3).contains(&max_dim));
    let n = cloud.len();
    let mut simplices: Vec<Simplex> = Vec::new();
    for v in 0..n as u32 {
        simplices.push(Simplex::new(&[v], 0.0));
    }
    for e in edges.iter() {
        simplices.push(Simplex::new(&[e.i, e.j], e.value));
    }
    if max_dim >= 2 {
        let triangles = clique_triangles(edges, n);
        if max_dim >= 3 {
            simplices.extend(clique_tetrahedra(edges, &triangles));
        }
        simplices.extend(triangles);
    }
    simplices.sort_by(|a, b| {
        a.value
            .partial_cmp(&b.value)
            .unwrap()
            .then(a.len.cmp(&b.len))
            .then(a.verts.cmp(&b.verts))
    });
    let mut index: HashMap<[u32; 4], u32> = HashMap::with_capacity(simplices.len());
    let mut boundaries = Vec::with_capacity(simplices.len());
    let mut max_seen = 0;
    for (i, s) in simplices.iter().enumerate() {
        index.insert(s.verts, i as u32);
        max_seen = max_seen.max(s.dim());
        let k = s.len as usize;
        let mut faces = Vec::with_capacity(if k > 1 { k } else { 0 });
        if k > 1 {
            for drop in 0..k {
                let mut f = [u32::MAX; 4];
                let mut w = 0;
                for (r, &v) in s.vertices().iter().enumerate() {
                    if r != drop {
                        f[w] = v;
                        w += 1;
                    }
                }
                faces.push(index[&f]);
            }
            faces.sort_unstable();
        }
        boundaries.push(faces);
    }
    Filtration {
        simplices,
        boundaries,
        n_vertices: n,
        max_dim: max_seen,
    }
}

impl Filtration {
    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    /// Largest dimension actually present.
    pub fn max_dim(&self) -> usize {
        self.max_dim
    }

    pub fn simplex(&self, i: usize) -> &Simplex {
        &self.simplices[i]
    }

    pub fn simplices(&self) -> &[Simplex] {
        &self.simplices
    }

    pub fn boundary(&self, i: usize) -> &[u32] {
        &self.boundaries[i]
    }

    pub fn value(&self, i: usize) -> f64 {
        self.simplices[i].value
    }

    pub fn counts_by_dim(&self) -> [usize; 4] {
        let mut counts = [0; 4];
        for s in &self.simplices {
            counts[s.dim()] += 1;
        }
        counts
    }

    /// Structural invariants: strictly sorted unique order keys, faces
    /// before cofaces, face values never exceeding coface values.
    pub fn validate(&self) -> Result<(), String> {
        for w in self.simplices.windows(2) {
            let ka = (w[0].value, w[0].len, w[0].verts);
            let kb = (w[1].value, w[1].len, w[1].verts);
            if ka.partial_cmp(&kb) != Some(std::cmp::Ordering::Less) {
                return Err(format!("order keys not strictly increasing: {ka:?} vs {kb:?}"));
            }
        }
        for (i, faces) in self.boundaries.iter().enumerate() {
            let expected = if self.simplices[i].len > 1 {
                self.simplices[i].len as usize
            } else {
                0
            };
            if faces.len() != expected {
                return Err(format!("simplex {i} has {} faces", faces.len()));
            }
            for &f in faces {
                if f as usize >= i {
                    return Err(format!("face {f} does not precede simplex {i}"));
                }
                if self.simplices[f as usize].value > self.simplices[i].value {
                    return Err(format!("face {f} has larger value than coface {i}"));
                }
            }
        }
        Ok(())
    }

    /// Dump format consumed by external persistence tools:
    /// `dim v0 [v1 [v2 [v3]]] value`, one simplex per line in filtration
    /// order.
    pub fn to_text(&self) -> String {
        use std::fmt::Write;
        let mut out = String::new();
        for s in &self.simplices {
            write!(out, "{}", s.dim()).unwrap();
            for v in s.vertices() {
                write!(out, " {v}").unwrap();
            }
            writeln!(out, " {:.16e}", s.value).unwrap();
        }
        out
    }
}
