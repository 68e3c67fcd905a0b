//! Reproducible input generators: seeded uniform clouds, the two-segment
//! worst-case construction with quadratically many Minibox edges, and two
//! embedded three-dimensional example sets whose witness facts the `verify`
//! command checks.

use crate::geometry::PointCloud;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `n` points uniform in `[0,1]^dim`, deterministic per seed.
pub fn uniform(n: usize, dim: usize, seed: u64) -> PointCloud {
    assert!(n > 0 && dim > 0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    PointCloud::new(
        (0..n)
            .map(|_| (0..dim).map(|_| rng.random_range(0.0..1.0)).collect())
            .collect(),
    )
    .expect("uniform cloud")
}

/// Two parallel descending segments of `n` points each,
/// `p_i = (i/n, 1 - i/n)` and `q_j = (2 + j/n, 1 - j/n)`: every pair
/// `{p_i, q_j}` with `j <= i` has an empty minibox, so the Minibox edge
/// count exceeds `n(n-1)/2` while only `4n - 3` pairs are ℓ∞-Delaunay.
pub fn s1s2(n: usize) -> PointCloud {
    assert!(n > 0);
    let nf = n as f64;
    let mut pts = Vec::with_capacity(2 * n);
    for i in 1..=n {
        pts.push(vec![i as f64 / nf, 1.0 - i as f64 / nf]);
    }
    for j in 1..=n {
        pts.push(vec![2.0 + j as f64 / nf, 1.0 - j as f64 / nf]);
    }
    PointCloud::new(pts).expect("segment cloud")
}

/// Five 3-D points whose ℓ∞-Delaunay complex has the triangle
/// `{x1, x2, x3}` missing although all three of its edges are present:
/// the Delaunay complex is not a flag complex in three dimensions.
pub const FIVE_POINTS_3D: [[f64; 3]; 5] = [
    [0.0, 0.0, 0.0],
    [2.0, 1.0, 1.0],
    [1.4, 1.6, -0.6],
    [0.9, -0.3, -0.3],
    [1.1, 1.4, 1.2],
];

/// Eight 3-D points for which the tetrahedron `{x1, x2, x3, x4}` is not
/// Delaunay although its four triangles are, leaving a degree-two class
/// that never dies; both circumcenters of the tetrahedron are blocked by
/// a strictly closer site.
pub const EIGHT_POINTS_3D: [[f64; 3]; 8] = [
    [6.2, 1.1, 1.9],
    [2.4, 4.8, 1.4],
    [8.6, 4.4, 5.3],
    [7.3, 8.2, 4.9],
    [7.9, 3.9, 7.6],
    [4.2, 6.8, 0.2],
    [9.0, 9.2, 9.7],
    [1.0, 0.1, -2.4],
];

pub fn five_points() -> PointCloud {
    PointCloud::new(FIVE_POINTS_3D.iter().map(|p| p.to_vec()).collect()).expect("embedded cloud")
}

pub fn eight_points() -> PointCloud {
    PointCloud::new(EIGHT_POINTS_3D.iter().map(|p| p.to_vec()).collect()).expect("embedded cloud")
}
