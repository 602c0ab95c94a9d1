//! Exact monomial-ideal algebra over an implicit field.
//!
//! Provides minimal generating sets, colon ideals, irreducible decompositions,
//! associated and minimal primes, ordinary and symbolic powers, integral
//! closures via Newton polyhedra, local and global v-numbers, and an
//! executable check of the v-number min-formula for binomially expanding
//! filtrations of `I + J` with `I`, `J` in disjoint variables.

pub mod decomposition;
pub mod error;
pub mod expansion;
pub mod filtration;
pub mod ideal;
pub mod lp;
pub mod random;
pub mod ring;
pub mod vnumber;

pub use decomposition::{
    associated_primes, irreducible_decomposition, minimal_primes, splitting_decomposition, IrreducibleComponent,
};
pub use error::{AlgebraError, Result};
pub use expansion::{
    binomial_expansion, direct_term, join_ideals, theorem_rhs, verify_expansion, verify_theorem, ExpansionReport,
    TheoremReport,
};
pub use filtration::{
    check_filtration_property, filtration_member, filtration_members, integral_closure, newton_member,
    normally_torsion_free, power_membership_oracle, FiltrationKind,
};
pub use ideal::{MonomialIdeal, PrimeSupport};
pub use lp::RationalVector;
pub use ring::{Exp, JoinedRing, Monomial, Ring};
pub use vnumber::{brute_force_local_v, local_v, local_v_verified, v_number, Method, VReport};
