//! Exact computation of chromatic symmetric and chromatic quasisymmetric
//! functions of finite simple graphs, and two-route verification of their
//! hook coefficients against acyclic-orientation counts.
//!
//! The crate is organised bottom-up:
//!
//! - [`combinatorics`]: partitions, compositions, permutations, tableaux and
//!   Kostka numbers.
//! - [`tpoly`] and [`symfunc`]: exact coefficients and sparse function values
//!   in the `m`, `e`, `s`, `M` and `F` bases.
//! - [`graph`]: graphs, labelings, colorings and acyclic orientations.
//! - [`chromatic`]: the chromatic (quasi)symmetric functions and the hook
//!   coefficient formulas.
//! - [`poset`]: posets, incomparability graphs and hook-shaped P-tableaux.
//!
//! ```
//! use chromatic_core::chromatic::{csf_schur, sink_profile};
//! use chromatic_core::graph::Graph;
//!
//! let claw = Graph::star(3);
//! assert_eq!(csf_schur(&claw).to_string(), "s(3,1) - s(2,2) + 5s(2,1,1) + 8s(1,1,1,1)");
//! assert_eq!(sink_profile(&claw).counts(), &[4, 3, 1, 0]);
//! ```

pub mod chromatic;
pub mod combinatorics;
pub mod error;
pub mod graph;
pub mod poset;
pub mod symfunc;
pub mod tpoly;

pub use error::{Error, Result};
