//! Exact construction of vector-valued Jack polynomials for the symmetric
//! group, driven by Yang–Baxter graphs.
//!
//! Every scalar lives in the rational function field Q(α) and is handled
//! exactly. The modules build on each other in the order listed below.

pub mod coeffield;
pub mod combinatorics;
pub mod ybgraph;
pub mod vvpoly;
pub mod jack;
