//! Exact invariants of smooth toric Fano varieties, computed from their
//! lattice polytopes, and verification of the identity relating weighted
//! even Betti numbers to the Chern numbers `c_1 c_{n-1}` and `c_n`.
//!
//! The pipeline runs Fano polytope `P` (in N) → anticanonical polytope `Δ`
//! (in M) → face lattice → `Ê(t)`, Betti and Chern numbers → identity checks.
//! Arbitrary Hodge diamonds can be checked directly through
//! [`hodge_diamond`] and [`identity::verify_proposition`].

pub mod corpus;
pub mod error;
pub mod hodge_diamond;
pub mod identity;
pub mod io;
pub mod lattice_polytope;
pub mod rational;
pub mod report;
pub mod toric_invariants;

pub use error::{Error, Result};
pub use hodge_diamond::HodgeDiamond;
pub use identity::IdentityReport;
pub use lattice_polytope::{AnticanonicalPolytope, FaceLattice, FanoPolytope, LatticePoint};
pub use toric_invariants::{IntPolynomial, ToricInvariants};
