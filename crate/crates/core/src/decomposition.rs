//! Irreducible decomposition, associated primes and minimal primes.
//!
//! Decompositions are read off the socle of an artinian closure. The
//! splitting identity `L + ⟨v·w⟩ = (L + ⟨v⟩) ∩ (L + ⟨w⟩)` for coprime `v`,
//! `w` gives a second, independent route ([`splitting_decomposition`]) used
//! to cross-check it.

use std::collections::HashMap;
use std::fmt;

use crate::error::{AlgebraError, Result};
use crate::ideal::{minimalize_exps, MonomialIdeal, PrimeSupport};
use crate::ring::{exps, Exp, Ring};
use crate::vnumber;

/// An irreducible monomial ideal `⟨z_i^{c_i} : c_i > 0⟩`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IrreducibleComponent {
    ring: Ring,
    /// `powers[i] == 0` means `z_i` does not occur.
    powers: Vec<Exp>,
}

impl IrreducibleComponent {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn powers(&self) -> &[Exp] {
        &self.powers
    }

    pub fn ideal(&self) -> MonomialIdeal {
        let n = self.ring.nvars();
        let raw = self
            .powers
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, &c)| {
                let mut e = vec![0; n];
                e[i] = c;
                e
            })
            .collect();
        MonomialIdeal::from_raw(&self.ring, raw)
    }

    pub fn radical(&self) -> PrimeSupport {
        let vars = self.powers.iter().enumerate().filter(|(_, &c)| c > 0).map(|(i, _)| i).collect();
        PrimeSupport::from_sorted(&self.ring, vars)
    }

    fn is_subset(&self, other: &IrreducibleComponent) -> bool {
        self.powers.iter().zip(&other.powers).all(|(&c, &d)| c == 0 || (d > 0 && d <= c))
    }
}

impl PartialOrd for IrreducibleComponent {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by radical first, then by the powers.
impl Ord for IrreducibleComponent {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.radical().cmp(&other.radical()).then_with(|| self.powers.cmp(&other.powers))
    }
}

impl fmt::Display for IrreducibleComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.ideal().fmt(f)
    }
}

type Memo = HashMap<Vec<Vec<Exp>>, Vec<Vec<Exp>>>;

fn split(gens: Vec<Vec<Exp>>, memo: &mut Memo) -> Vec<Vec<Exp>> {
    if let Some(hit) = memo.get(&gens) {
        return hit.clone();
    }
    let pivot = gens.iter().filter(|g| exps::support_len(g) >= 2).max();
    let out = match pivot {
        None => {
            let mut powers = vec![0; gens.first().map_or(0, Vec::len)];
            for g in &gens {
                let i = g.iter().position(|&e| e > 0).expect("proper ideal has no unit generator");
                powers[i] = g[i];
            }
            vec![powers]
        }
        Some(u) => {
            let i = u.iter().position(|&e| e > 0).expect("pivot has support");
            let mut v = vec![0; u.len()];
            v[i] = u[i];
            let mut w = u.clone();
            w[i] = 0;
            let mut left = gens.clone();
            left.push(v);
            let mut right = gens.clone();
            right.push(w);
            let mut out = split(minimalize_exps(left), memo);
            out.extend(split(minimalize_exps(right), memo));
            out.sort();
            out.dedup();
            out
        }
    };
    memo.insert(gens, out.clone());
    out
}

/// Leaves of the artinian closure `L' = L + ⟨z_i^{N_i}⟩` with `N_i` one
/// above the largest exponent of `z_i` in `G(L)`. The components of `L'`
/// are `⟨z_i^{b_i+1}⟩` for the socle monomials `z^b`, which are exactly the
/// generators of `L' : m` outside `L'`. Dropping the added powers gives
/// components of `L`.
fn socle_leaves(l: &MonomialIdeal) -> Vec<Vec<Exp>> {
    let n = l.ring().nvars();
    let caps: Vec<Exp> = (0..n).map(|i| l.gen_exponents().iter().map(|g| g[i]).max().unwrap_or(0) + 1).collect();
    let mut raw = l.gen_exponents().to_vec();
    for (i, &c) in caps.iter().enumerate() {
        let mut e = vec![0; n];
        e[i] = c;
        raw.push(e);
    }
    let art = MonomialIdeal::from_raw(l.ring(), raw);
    let mut socle = art.colon_exp(&unit_vec(n, 0));
    for i in 1..n {
        socle = socle.intersect(&art.colon_exp(&unit_vec(n, i))).expect("same ring");
    }
    socle
        .gen_exponents()
        .iter()
        .filter(|b| !art.contains_exp(b))
        .map(|b| b.iter().zip(&caps).map(|(&e, &c)| if e + 1 == c { 0 } else { e + 1 }).collect())
        .collect()
}

fn unit_vec(n: usize, i: usize) -> Vec<Exp> {
    let mut e = vec![0; n];
    e[i] = 1;
    e
}

/// Drops components containing another one and sorts the rest.
fn irredundant(l: &MonomialIdeal, mut leaves: Vec<Vec<Exp>>) -> Vec<IrreducibleComponent> {
    leaves.sort();
    leaves.dedup();
    let leaves: Vec<IrreducibleComponent> =
        leaves.into_iter().map(|powers| IrreducibleComponent { ring: l.ring().clone(), powers }).collect();
    // Q_j is redundant iff it contains some other Q_i: irreducible monomial
    // ideals are meet-irreducible in the lattice of monomial ideals.
    let mut kept: Vec<IrreducibleComponent> = leaves
        .iter()
        .enumerate()
        .filter(|(j, q)| !leaves.iter().enumerate().any(|(i, r)| i != *j && r.is_subset(q)))
        .map(|(_, q)| q.clone())
        .collect();
    kept.sort();
    kept
}

/// An irredundant irreducible decomposition `L = Q_1 ∩ ⋯ ∩ Q_t`, sorted,
/// read off the socle of an artinian closure of `L`.
pub fn irreducible_decomposition(l: &MonomialIdeal) -> Result<Vec<IrreducibleComponent>> {
    l.require_proper("irreducible decomposition")?;
    Ok(irredundant(l, socle_leaves(l)))
}

/// The same decomposition by recursive splitting: while a generator factors
/// as `u = z_i^{a_i}·w` with `w ≠ 1`, recurse on `L + ⟨z_i^{a_i}⟩` and
/// `L + ⟨w⟩`, always on the lexicographically first such generator.
/// Exponential in the number of generators; kept as an independent check.
pub fn splitting_decomposition(l: &MonomialIdeal) -> Result<Vec<IrreducibleComponent>> {
    l.require_proper("irreducible decomposition")?;
    let mut memo = Memo::new();
    Ok(irredundant(l, split(l.gen_exponents().to_vec(), &mut memo)))
}

/// `Ass(L)` in canonical prime order, each certified by a colon witness.
pub fn associated_primes(l: &MonomialIdeal) -> Result<Vec<PrimeSupport>> {
    Ok(associated_primes_with_witnesses(l)?.into_iter().map(|r| r.prime).collect())
}

/// `Ass(L)` with a minimum-degree witness report for each prime.
pub fn associated_primes_with_witnesses(l: &MonomialIdeal) -> Result<Vec<vnumber::VReport>> {
    let mut primes: Vec<PrimeSupport> = irreducible_decomposition(l)?.iter().map(IrreducibleComponent::radical).collect();
    primes.sort();
    primes.dedup();
    primes
        .into_iter()
        .map(|p| match vnumber::local_v(l, &p) {
            Err(AlgebraError::NotAssociated(name)) => Err(AlgebraError::CertificationFailed(name)),
            other => other,
        })
        .collect()
}

/// Inclusion-minimal elements of `Ass(L)`.
pub fn minimal_primes(l: &MonomialIdeal) -> Result<Vec<PrimeSupport>> {
    Ok(minimal_elements(&associated_primes(l)?))
}

pub(crate) fn minimal_elements(primes: &[PrimeSupport]) -> Vec<PrimeSupport> {
    primes
        .iter()
        .filter(|p| !primes.iter().any(|q| q != *p && q.is_subset(p)))
        .cloned()
        .collect()
}
