//! Exact computations with tropical complete intersections.
//!
//! The crate is organised bottom-up:
//!
//! - [`lattice`]: integer vectors, Hermite reduction, saturations and quotient maps;
//! - [`cone`]: exact double description for rational polyhedral cones and a
//!   face-compatible pulling triangulation;
//! - [`polytope`]: lattice polytopes, (mixed) volumes and H-described polyhedra;
//! - [`fan`]: weighted simplicial fans, piecewise-linear functions, refinement and
//!   the corner locus operator;
//! - [`tci`]: tropical complete intersections and their combinatorial invariants;
//! - [`euler`]: Euler characteristics and tropical characteristic classes.
//!
//! All arithmetic is arbitrary precision.

pub mod cone;
pub mod error;
pub mod euler;
pub mod fan;
pub mod lattice;
pub mod polytope;
pub mod tci;

mod linalg;

pub use error::{Error, Result};
pub use euler::{
    betti_numbers, char_class, compositions, euler_bkk, euler_direct, euler_recursive,
    evaluate_monomial, monomial_terms, CharClass, MonomialTerm,
};
pub use fan::{
    common_refinement, complete_fan, is_balanced, refine, star_quotient, subdivide_at_ray,
    weil_divisor, BalanceReport, Cone, PLFunction, WeightedFan,
};
pub use lattice::{
    hermite_basis, quotient, quotient_map, LatticeMap, LatticeVector, Quotient, RationalVector,
};
pub use polytope::{
    euclidean_volume, lattice_volume, minkowski_sum, mixed_volume, sublattice_mixed_volume,
    LatticePolytope, Polyhedron, PolyhedronStatus,
};
pub use tci::{
    component_count, cy_check, full_dim_connectivity, is_newtonian, nci_face_weight,
    newton_polyhedra, normal_fan, restrict, tci_from_polytopes, BoundaryData, BoundaryPair,
    ComponentCount, ConnectivityReport, CyClause, CyReport, FaceWeight, NewtonianReport,
    TropicalCI,
};
