//! Harmonic p-sets on triangulated compact manifolds.
//!
//! A p-set assigns an exact rational to every p-cell of a
//! triangulation. It is closed when it sums to zero over the boundary
//! of every (p+1)-cell, and harmonic when the induced set on the dual
//! cell decomposition is closed as well. Each rational cohomology class
//! contains exactly one harmonic p-set, so harmonic representatives,
//! Betti numbers and class comparisons are all exact linear algebra.
//!
//! The crate provides:
//!
//! - construction, validation, orientation and barycentric subdivision
//!   of simplicial complexes ([`complex`], [`subdivision`]);
//! - the dual cell decomposition of an oriented manifold and both
//!   formulations of dual closedness ([`dual`]);
//! - exact harmonic bases, harmonic projection, Betti numbers and
//!   homology bases ([`hodge`]);
//! - basic flag-count p-sets indexed by dimension signatures
//!   ([`flags`]);
//! - a search harness for coefficient vectors whose combination of
//!   basic flag p-sets is harmonic on a whole corpus and stable under
//!   subdivision ([`mod@search`]);
//! - generators for a small corpus of standard manifolds ([`corpus`]),
//!   text file formats ([`files`]) and a command line surface
//!   ([`cli`]).

pub mod cli;
pub mod cochain;
pub mod complex;
pub mod corpus;
pub mod dual;
pub mod error;
pub mod files;
pub mod flags;
pub mod hodge;
pub mod matrix;
pub mod rational;
pub mod search;
pub mod subdivision;

pub use cochain::{pairing, Chain, Cochain};
pub use complex::{
    FVector, ManifoldReport, Orientation, OrientationOutcome, Simplex, SimplicialComplex,
    VertexId,
};
pub use corpus::{build_corpus, Corpus, CorpusMember};
pub use dual::{dual_closed_via_transpose, dual_complex, DualCochain, DualComplex};
pub use error::{Error, Result};
pub use flags::{
    enumerate_signatures, flag_basis_matrix, flag_count, flag_pset, oriented_flag_pset,
    FlagBasisMatrix, FlagSignature,
};
pub use hodge::{
    betti, coboundary, harmonic_basis, harmonic_projection, homology_basis, is_closed,
    is_harmonic, laplacian, HarmonicBasis, HarmonicProjector,
};
pub use rational::Rational;
pub use search::{
    check_subdivision_invariance, evaluate_candidate, harmonic_constraint_system, search,
    solve_coefficients, CoefficientSolution, ConstraintSystem, InvarianceReport, SearchOutcome,
};
pub use subdivision::{barycentric_subdivision, transport_orientation, SubdivisionMap};
