//! Polymer graph construction and exact Sombor-index arithmetic.
//!
//! The Sombor index of a graph is `SO(G) = Σ_{uv ∈ E} √(d_u² + d_v²)`.
//! For graphs with integer degrees every summand is the square root of an
//! integer, so the index is an integer-linear combination of square roots
//! — a quantity this crate represents exactly ([`radical::RadicalSum`])
//! instead of as a float. Exactness is what lets the verification
//! campaigns certify closed forms and strict inequalities rather than
//! merely failing to observe a counterexample.
//!
//! Module map:
//!
//! - [`radical`] — exact sums `Σ cᵢ√nᵢ` with canonical squarefree form,
//!   and margin-based numeric comparison for the rare inconclusive case.
//! - [`graph`] — small simple undirected graphs: construction, surgery
//!   (edge/vertex deletion, vertex identification), degree censuses.
//! - [`edgelist`] — a plain text edge-list format for graph I/O.
//! - [`index`] — the Sombor index plus the superadditivity and
//!   edge-deletion inequalities.
//! - [`construct`] — the four point-attaching operators (link, chain,
//!   circuit, bouquet) and their lower bounds under both degree
//!   conventions.
//! - [`families`] — parameterized polymer families with closed forms and
//!   census predictions.
//! - [`rng`] — seeded SplitMix64 for reproducible instance drawing.
//! - [`verify`] — the grid and randomized verification campaigns with
//!   JSONL reporting.

pub mod construct;
pub mod edgelist;
pub mod families;
pub mod graph;
pub mod index;
pub mod radical;
pub mod rng;
pub mod verify;
