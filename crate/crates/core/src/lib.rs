//! Finite quandles, their morphisms and invariants, low-degree quandle cohomology,
//! link diagram colorings and cocycle invariants of colored links.
//!
//! Elements of a quandle of order `m` are `0..m`. Permutations are written on
//! `{1..n}` in cycle notation.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod cohomology;
pub mod group_ring;
pub mod invariants;
pub mod link;
pub mod matrix;
pub mod morphism;
pub mod perm;
pub mod quandle;
pub mod quiver;
pub mod search;

pub use cohomology::{
    boundary_matrix, cohomology_q, is_2cocycle, symmetric_cohomology, theta_cocycle, AbelianGroupSummary,
    CochainComplexSlice, Cocycle2, Coefficients, CohomologyError, TupleBasis,
};
pub use group_ring::{cocycle_invariant, coloring_weight, GroupRingElement, InvariantError};
pub use invariants::{
    check_good_involution, good_involutions, involutions, p_polynomial_formula, quandle_polynomial,
    InvolutionError, SymmetricQuandle, TwoVarPolynomial,
};
pub use link::{
    parse_diagram, synthesize_link, synthesize_link_ordered, Coloring, Crossing, LinkDiagram, LinkError, LinkingGraph,
    LinkingGraphError, Sign,
};
pub use matrix::{IntMatrix, ModMatrix};
pub use morphism::{
    automorphism_group, endomorphisms, hom_quandle, homs, inner_group, is_isomorphic, FiniteGroupTable,
    HomQuandle, MapGroup, MorphismError, QuandleMap,
};
pub use perm::{all_permutations, conjugacy_class_representatives, Permutation, PermutationError};
pub use quandle::{Quandle, QuandleError};
pub use quiver::{
    find_quiver_isomorphism, quiver, quiver_dot, quiver_isomorphic, verify_quiver_isomorphism, Quiver, QuiverError,
    DEFAULT_ISOMORPHISM_BOUND,
};
pub use search::{SearchCapExceeded, SearchLimits, DEFAULT_NODE_CAP};
