//! Executable checks of the embedded example facts: the witness points of
//! the five-point set whose Delaunay complex is not flag, and the blocked
//! circumcenters of the eight-point set whose alpha and Čech diagrams
//! disagree in degree two.

use crate::delaunay::{is_delaunay_edge, verify_witness, DECIMAL_INPUT_TOL};
use crate::generate::{eight_points, five_points};

#[derive(Clone, Debug)]
pub struct FactCheck {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= DECIMAL_INPUT_TOL
}

/// Runs every embedded fact and reports one entry per fact.
pub fn embedded_checks() -> Vec<FactCheck> {
    let mut out = Vec::new();
    let five = five_points();

    // edge witnesses of the five-point set, all at half the pair distance
    let edge_witnesses: [(u32, u32, [f64; 3], f64); 3] = [
        (0, 1, [1.0, 0.0, 1.0], 1.0),
        (0, 2, [0.8, 0.8, 0.0], 0.8),
        (1, 2, [1.5, 1.5, 0.2], 0.8),
    ];
    for (i, j, z, r) in edge_witnesses {
        let report = verify_witness(&five, &[i, j], &z, DECIMAL_INPUT_TOL).expect("dimensions");
        let edge = is_delaunay_edge(&five, i as usize, j as usize);
        let pass = report.verdict && edge && close(report.radius, r);
        out.push(FactCheck {
            name: format!("witness {z:?} certifies edge (x{}, x{})", i + 1, j + 1),
            pass,
            detail: format!(
                "witness verdict {}, edge test {}, radius {:.6}",
                report.verdict, edge, report.radius
            ),
        });
    }

    let eight = eight_points();

    // triangle witnesses of the eight-point set
    let tri_witnesses: [([u32; 3], [f64; 3], f64); 4] = [
        ([0, 1, 2], [5.5, 4.2, 3.9], 3.1),
        ([0, 1, 3], [4.05, 4.65, 4.95], 3.55),
        ([0, 2, 3], [8.75, 4.65, 1.75], 3.55),
        ([1, 2, 3], [5.5, 5.1, 3.9], 3.1),
    ];
    for (tri, z, dist) in tri_witnesses {
        let report = verify_witness(&eight, &tri, &z, DECIMAL_INPUT_TOL).expect("dimensions");
        let pass = report.verdict && close(report.radius, dist);
        out.push(FactCheck {
            name: format!(
                "witness {z:?} certifies triangle (x{}, x{}, x{}) at distance {dist}",
                tri[0] + 1,
                tri[1] + 1,
                tri[2] + 1
            ),
            pass,
            detail: format!(
                "witness verdict {}, radius {:.6}",
                report.verdict, report.radius
            ),
        });
    }

    // both circumcenters of the tetrahedron (x1..x4) are equidistant at
    // 3.55 but blocked by a strictly closer site, so the tetrahedron is
    // not Delaunay although its four faces are
    let tet = [0u32, 1, 2, 3];
    for (w, blocker) in [([5.95, 4.65, 1.75], 5u32), ([5.05, 4.65, 4.95], 4u32)] {
        let equidistant = tet
            .iter()
            .all(|&v| close(crate::geometry::linf(&w, eight.point(v as usize)), 3.55));
        let report = verify_witness(&eight, &tet, &w, DECIMAL_INPUT_TOL).expect("dimensions");
        let pass = equidistant && !report.verdict && report.blocking_site == Some(blocker);
        out.push(FactCheck {
            name: format!(
                "circumcenter {w:?} equidistant 3.55 from x1..x4, blocked by x{}",
                blocker + 1
            ),
            pass,
            detail: format!(
                "equidistant {}, verdict {}, blocking site {:?}",
                equidistant, report.verdict, report.blocking_site
            ),
        });
    }
    out
}
