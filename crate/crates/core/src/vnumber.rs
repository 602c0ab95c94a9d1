//! Local and global v-numbers with witness monomials.
//!
//! `v_p(L)` is the least degree of a monomial `f` with `L : f = p`. Every
//! such witness lies in `L : p`, and any minimal generator `g` of `L : p`
//! dividing a witness `f` is itself a witness (`p ⊆ L : g ⊆ L : f = p`), so
//! the minimum is attained on `G(L : p)`. [`local_v`] scans those candidates;
//! [`local_v_verified`] additionally replays the definition by enumeration.

use std::fmt;

use crate::decomposition;
use crate::error::{AlgebraError, Result};
use crate::ideal::{MonomialIdeal, PrimeSupport};
use crate::ring::{monomials_up_to, Monomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    CandidateGenerator,
    BruteForce,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::CandidateGenerator => "candidate-generator",
            Method::BruteForce => "brute-force",
        })
    }
}

/// A v-number together with the monomial and prime that realise it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VReport {
    pub degree: u64,
    pub witness: Monomial,
    pub prime: PrimeSupport,
    pub method: Method,
}

impl VReport {
    fn new(l: &MonomialIdeal, witness: Monomial, prime: PrimeSupport, method: Method) -> Self {
        debug_assert_eq!(l.colon_monomial(&witness).ok(), Some(prime.as_ideal()));
        VReport { degree: witness.degree(), witness, prime, method }
    }
}

/// `v_p(L)` via the minimal generators of `L : p`.
pub fn local_v(l: &MonomialIdeal, p: &PrimeSupport) -> Result<VReport> {
    l.require_proper("v-number")?;
    l.ring().check_same(p.ring())?;
    let target = p.as_ideal();
    let candidates = l.colon_ideal(&target)?;
    let witness = candidates.gens().find(|f| l.colon_exp(f.exponents()) == target);
    witness
        .map(|f| VReport::new(l, f, p.clone(), Method::CandidateGenerator))
        .ok_or_else(|| AlgebraError::NotAssociated(p.to_string()))
}

/// [`local_v`] checked against [`brute_force_local_v`] with the cap set to
/// the candidate answer; if enumeration finds a smaller degree the enumerated
/// witness is returned with [`Method::BruteForce`].
pub fn local_v_verified(l: &MonomialIdeal, p: &PrimeSupport) -> Result<VReport> {
    let fast = local_v(l, p)?;
    let cap = u32::try_from(fast.degree).map_err(|_| AlgebraError::ExponentOverflow)?;
    match brute_force_local_v(l, p, cap)? {
        Some(slow) if slow.degree < fast.degree => Ok(slow),
        _ => Ok(fast),
    }
}

/// Enumerates monomials of degree `<= deg_cap` in canonical order and returns
/// the first `f` with `L : f = p`.
pub fn brute_force_local_v(l: &MonomialIdeal, p: &PrimeSupport, deg_cap: u32) -> Result<Option<VReport>> {
    l.ring().check_same(p.ring())?;
    let target = p.as_ideal();
    Ok(monomials_up_to(l.ring(), deg_cap)
        .find(|f| l.colon_exp(f.exponents()) == target)
        .map(|f| VReport::new(l, f, p.clone(), Method::BruteForce)))
}

/// `v(L) = min { v_p(L) : p ∈ Ass(L) }`; ties go to the smallest prime.
pub fn v_number(l: &MonomialIdeal) -> Result<VReport> {
    l.require_proper("v-number")?;
    let reports = decomposition::associated_primes_with_witnesses(l)?;
    Ok(reports.into_iter().min_by_key(|r| r.degree).expect("proper nonzero ideal has an associated prime"))
}
