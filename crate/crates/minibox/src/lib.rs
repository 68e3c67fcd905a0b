//! Proximity complexes and persistent homology of finite point sets under
//! the Chebyshev (ℓ∞) metric.
//!
//! Under ℓ∞ the balls are axis-parallel hypercubes, Čech and Vietoris-Rips
//! complexes coincide, and two sparse flag complexes carry the same
//! persistence diagrams as the full Čech filtration in homological degrees
//! zero and one:
//!
//! * the **Minibox complex**, whose edges are the pairs with no third point
//!   strictly inside their minimal open bounding box, and
//! * the **alpha-flag complex**, the flag complex on ℓ∞-Delaunay edges, a
//!   subcomplex of the Minibox complex.
//!
//! The [`edges`] module enumerates Minibox edges with a brute-force oracle,
//! a two-dimensional direct-dominance sweep, two three-dimensional sweep
//! algorithms (per-anchor staircases, and a priority search tree driven by
//! min-z range-tree queries), and range-emptiness strategies for any
//! dimension. [`delaunay`] certifies ℓ∞-Delaunay edges exactly by witness
//! points. [`filtration`] expands an edge set into a simplexwise-ordered
//! flag filtration, and [`persistence`] reduces it over F2.
//!
//! Beyond degree one the diagrams of the sparse complexes may genuinely
//! differ from Čech; degree-two computations are supported to observe this.

pub mod delaunay;
pub mod edges;
pub mod filtration;
pub mod generate;
pub mod geometry;
pub mod io;
pub mod persistence;
pub mod search;
pub mod verify;

pub use edges::{auto_strategy, minibox_edges, MiniboxStrategy};
pub use geometry::{default_epsilon, dist_linf, minibox, preprocess, EdgeSet, PointCloud};
pub use persistence::{diagrams_equal, persistence_h0, persistence_reduce, Diagram};
