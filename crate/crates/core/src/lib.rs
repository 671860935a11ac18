//! Exact test ideals `τ(a^t)` of monomial ideals in Q-Gorenstein toric rings.
//!
//! The polyhedral route ([`tau`]) decides membership by the interior test
//! `m + w ∈ Int(t · P(a))`. The [`frobenius`] module computes the same
//! ideals independently on the Frobenius side at finite `q = p^e`, and runs
//! the tight-closure membership experiments.

mod antichain;
pub mod cone;
pub mod enumerate;
pub mod error;
pub mod frobenius;
pub mod ideal;
pub mod lattice;
pub mod polyhedron;
pub mod tau;
pub mod toric;

pub use cone::{dual_extreme_rays, gorenstein_vector, Cone};
pub use error::{Error, Result};
pub use frobenius::{
    frobenius_root_tau_oracle, in_star_e, socle_piece_vanishes_at_q, tau_socle_oracle, tight_closure_member_at_q,
    tight_integral_closure_at_q, FrobeniusConfig, RootOracleReport, SocleOracleReport, SoclePoint, Verdict, VerdictStatus,
    Witness,
};
pub use ideal::MonomialIdeal;
pub use lattice::{pairing, primitivize, LatticeVector, RationalVector};
pub use polyhedron::{Facet, NewtonPolyhedron};
pub use tau::{tau, tau_is_unit, tau_veronese, veronese_maximal_ideal, TauRequest};
pub use toric::ToricRing;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
