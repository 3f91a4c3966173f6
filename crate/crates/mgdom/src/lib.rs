//! Middle graphs and exact (total / total outer-connected) domination.
//!
//! The crate builds the middle graph M(G) of a simple graph G, computes the
//! total domination number γ_t and the total outer-connected domination
//! number γ_tc exactly with a bitset branch-and-bound solver, and ships the
//! closed-form value table, constructive proof certificates and
//! Nordhaus–Gaddum audit that let every formula be cross-checked against the
//! solver at desk scale.

pub mod domination;
pub mod families;
pub mod graph;
pub mod middle;
pub mod theorems;

pub use domination::{
    forced_members, gamma_t_exact, gamma_tc_exact, has_hamiltonian_path, is_outer_connected,
    is_total_dominating, verify_tocd, DominationError, Parameter, SolveMethod, SolveReport,
    SolverOptions, VerificationReport,
};
pub use families::{corona_k1, corona_p2, FamilyError, FamilySpec};
pub use graph::{Graph, GraphError, VertexSet};
pub use middle::{middle_graph, MiddleGraph, MiddleLabel};
pub use theorems::{
    bounds_gamma_tc_middle, certificate_for_corona, certificate_for_family,
    formula_gamma_tc_corona, formula_gamma_tc_middle, nordhaus_gaddum_audit, Certificate,
    CoronaKind, FormulaKind, FormulaResult, NGReport, TheoremError,
};
