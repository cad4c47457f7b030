//! Book embeddings of graphs: spine orders, page assignments, and exact
//! solvers for page minimization.
//!
//! A *book embedding* places the vertices of a graph on a line (the spine)
//! and distributes the edges among half-planes (pages) so that no two edges
//! on the same page cross. Two same-page edges uv and wx cross exactly when
//! their endpoints interleave along the spine: u ≺ w ≺ v ≺ x.
//!
//! Two questions are answered here, exactly:
//!
//! * **Fixed order** — given the spine order, how many pages are needed?
//!   Solved by two parameterized dynamic programs (by vertex cover, in
//!   [`fixed_order_vc`], and by the width of the order, in
//!   [`fixed_order_pw`]) and by a brute-force oracle in [`oracle`].
//! * **Free order** — minimizing over spine orders as well. Solved by
//!   kernelization to a bounded core plus oracle search ([`kernel`]), and by
//!   the brute-force [`oracle::bt_oracle`] directly at small sizes.
//!
//! The [`oracle`] module is the ground truth the rest of the crate is tested
//! against; [`render`] draws arc diagrams as SVG.

pub mod cover;
pub mod doc;
pub mod gen;
pub mod graph;
pub mod oracle;
pub mod parse;
pub mod render;

pub use graph::{BookEmbedding, Graph, GraphError, GuardProfile, LinearOrder, PageAssignment};
pub use graph::guard_profile;
pub use oracle::{validate, CrossingReport};

pub mod fixed_order_vc;
pub mod fixed_order_pw;
pub mod kernel;
