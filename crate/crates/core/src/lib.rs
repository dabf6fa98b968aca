//! Fox p-colorings of knot diagrams.
//!
//! A workbench for exact coloring computations on knot and link diagrams:
//! integer Smith Normal Form determinants and nullities, enumeration and
//! classification of colorings under the affine maps x -> ax + b, set
//! obstruction tests over odd moduli, and a bounded search over colored
//! Reidemeister moves that reduces the number of colors a diagram uses.

pub mod braid;
pub mod coloring;
pub mod diagram;
pub mod error;
pub mod matrix;

pub use braid::{parse_braid, torus_2n};
pub use coloring::{enumerate_nontrivial, is_coloring, min_colors_on_diagram, palette_of, solve_colorings, Coloring, Modulus, Palette};
pub use diagram::{parse_pd, ArcPartition, Crossing, Dart, Diagram, EdgeId};
pub use error::{Error, Result};
pub use matrix::{coloring_matrix, link_determinant, smith_normal_form, IntMatrix, SNFSummary};
