//! Exact fixed-point calculus for circle actions on closed oriented
//! 4-manifolds. A manifold with isolated fixed points and fixed surfaces
//! is recorded as a graph of weights; everything here is exact arithmetic
//! over the rationals and the rational function field Q(z).
//!
//! - [`graph`]: the graph-of-weights data model and isomorphism.
//! - [`gw1`]: the GW1 text format.
//! - [`exact`]: dense polynomials, rational functions, Laurent windows.
//! - [`formulas`]: the signature identity over Q(z), residues, L-genus.
//! - [`euler`]: edge Euler numbers and admissibility.
//! - [`models`]: the model graphs S, P, Q, P#Q and the fixed-surface models.
//! - [`surgery`]: splitting, reduction, inverse splits, surface conversion.
//! - [`realize`]: the realizability decision with certificates and replay.
//! - [`random`]: seeded generators of realizable graphs.
//! - [`dot`]: Graphviz export.

pub mod dot;
pub mod euler;
pub mod exact;
pub mod formulas;
pub mod graph;
pub mod gw1;
pub mod models;
pub mod random;
pub mod realize;
pub mod surgery;
