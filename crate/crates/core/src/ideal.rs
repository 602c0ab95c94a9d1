//! Monomial ideals stored by their minimal generating set `G(L)`.
//!
//! Every constructor minimalizes eagerly, so two equal ideals over the same
//! ring are structurally identical and `==` is ideal equality.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{AlgebraError, Result};
use crate::ring::{exps, Exp, Monomial, Ring};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ring: Ring,
    gens: Vec<Vec<Exp>>,
}

/// Reduces a raw generator list to a sorted antichain under divisibility.
pub(crate) fn minimalize_exps(mut raw: Vec<Vec<Exp>>) -> Vec<Vec<Exp>> {
    raw.sort_by(|a, b| exps::canonical_cmp(a, b));
    raw.dedup();
    let mut kept: Vec<Vec<Exp>> = Vec::with_capacity(raw.len());
    for g in raw {
        // a proper divisor has strictly smaller degree, so it is already kept
        if !kept.iter().any(|h| exps::divides(h, &g)) {
            kept.push(g);
        }
    }
    kept
}

impl MonomialIdeal {
    pub fn new(ring: &Ring, raw: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let mut gens = Vec::new();
        for m in raw {
            ring.check_same(m.ring())?;
            gens.push(m.into_exponents());
        }
        Ok(Self::from_minimal(ring, minimalize_exps(gens)))
    }

    pub fn from_exponents(ring: &Ring, raw: Vec<Vec<Exp>>) -> Result<Self> {
        if let Some(bad) = raw.iter().find(|g| g.len() != ring.nvars()) {
            return Err(AlgebraError::DimensionMismatch { expected: ring.nvars(), found: bad.len() });
        }
        Ok(Self::from_raw(ring, raw))
    }

    pub(crate) fn from_raw(ring: &Ring, raw: Vec<Vec<Exp>>) -> Self {
        Self::from_minimal(ring, minimalize_exps(raw))
    }

    pub(crate) fn from_minimal(ring: &Ring, gens: Vec<Vec<Exp>>) -> Self {
        MonomialIdeal { ring: ring.clone(), gens }
    }

    pub fn zero(ring: &Ring) -> Self {
        Self::from_minimal(ring, Vec::new())
    }

    pub fn unit(ring: &Ring) -> Self {
        Self::from_minimal(ring, vec![vec![0; ring.nvars()]])
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// `G(L)` in canonical order.
    pub fn gens(&self) -> impl ExactSizeIterator<Item = Monomial> + '_ {
        self.gens.iter().map(|g| self.ring.monomial(g.clone()).expect("generator length matches ring"))
    }

    pub fn gen_exponents(&self) -> &[Vec<Exp>] {
        &self.gens
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && exps::is_one(&self.gens[0])
    }

    /// Rejects the zero and unit ideals for operations that need a proper
    /// nonzero ideal.
    pub fn require_proper(&self, op: &'static str) -> Result<()> {
        if self.is_zero() {
            Err(AlgebraError::DegenerateIdeal { op, which: "zero" })
        } else if self.is_unit() {
            Err(AlgebraError::DegenerateIdeal { op, which: "unit" })
        } else {
            Ok(())
        }
    }

    pub fn is_square_free(&self) -> bool {
        self.gens.iter().all(|g| g.iter().all(|&e| e <= 1))
    }

    pub fn max_degree(&self) -> u64 {
        self.gens.iter().map(|g| exps::degree(g)).max().unwrap_or(0)
    }

    pub fn contains(&self, f: &Monomial) -> Result<bool> {
        self.ring.check_same(f.ring())?;
        Ok(self.contains_exp(f.exponents()))
    }

    pub(crate) fn contains_exp(&self, f: &[Exp]) -> bool {
        self.gens.iter().any(|u| exps::divides(u, f))
    }

    /// `self ⊆ other`.
    pub fn is_subset(&self, other: &MonomialIdeal) -> Result<bool> {
        self.ring.check_same(&other.ring)?;
        Ok(self.gens.iter().all(|g| other.contains_exp(g)))
    }

    pub fn equals(&self, other: &MonomialIdeal) -> Result<bool> {
        self.ring.check_same(&other.ring)?;
        Ok(self.gens == other.gens)
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.ring.check_same(&other.ring)?;
        let raw = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(Self::from_raw(&self.ring, raw))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.ring.check_same(&other.ring)?;
        let mut raw = Vec::with_capacity(self.gens.len() * other.gens.len());
        for u in &self.gens {
            for v in &other.gens {
                raw.push(exps::mul(u, v)?);
            }
        }
        Ok(Self::from_raw(&self.ring, raw))
    }

    pub fn power(&self, k: u32) -> Result<MonomialIdeal> {
        let mut acc = Self::unit(&self.ring);
        for _ in 0..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.ring.check_same(&other.ring)?;
        let mut raw = Vec::with_capacity(self.gens.len() * other.gens.len());
        for u in &self.gens {
            for v in &other.gens {
                raw.push(exps::lcm(u, v));
            }
        }
        Ok(Self::from_raw(&self.ring, raw))
    }

    /// Intersection of a non-empty family; `None` for an empty family.
    pub fn intersect_all<'a>(mut family: impl Iterator<Item = &'a MonomialIdeal>) -> Result<Option<MonomialIdeal>> {
        let Some(first) = family.next() else { return Ok(None) };
        let mut acc = first.clone();
        for l in family {
            acc = acc.intersect(l)?;
        }
        Ok(Some(acc))
    }

    /// `L : f = ⟨u / gcd(u, f) : u ∈ G(L)⟩`.
    pub fn colon_monomial(&self, f: &Monomial) -> Result<MonomialIdeal> {
        self.ring.check_same(f.ring())?;
        Ok(self.colon_exp(f.exponents()))
    }

    pub(crate) fn colon_exp(&self, f: &[Exp]) -> MonomialIdeal {
        let raw = self.gens.iter().map(|u| exps::quotient_by_gcd(u, f)).collect();
        Self::from_raw(&self.ring, raw)
    }

    /// `L : L' = ⋂_{v ∈ G(L')} (L : v)`.
    pub fn colon_ideal(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.ring.check_same(&other.ring)?;
        if other.is_zero() {
            return Err(AlgebraError::ColonByZero);
        }
        let parts: Vec<MonomialIdeal> = other.gens.iter().map(|v| self.colon_exp(v)).collect();
        Ok(Self::intersect_all(parts.iter())?.expect("nonzero divisor ideal has generators"))
    }

    /// `L R_p ∩ R`: variables outside `p` become units, so their exponents are
    /// dropped from every generator.
    pub fn localize(&self, p: &PrimeSupport) -> Result<MonomialIdeal> {
        self.ring.check_same(p.ring())?;
        let mask = p.mask();
        let raw = self
            .gens
            .iter()
            .map(|g| g.iter().zip(&mask).map(|(&e, &keep)| if keep { e } else { 0 }).collect())
            .collect();
        Ok(Self::from_raw(&self.ring, raw))
    }

    /// Returns the prime this ideal equals, if it is generated by distinct
    /// variables.
    pub fn as_prime(&self) -> Option<PrimeSupport> {
        if self.gens.is_empty() {
            return None;
        }
        let mut vars = Vec::with_capacity(self.gens.len());
        for g in &self.gens {
            if exps::degree(g) != 1 {
                return None;
            }
            vars.push(g.iter().position(|&e| e == 1)?);
        }
        vars.sort_unstable();
        Some(PrimeSupport { ring: self.ring.clone(), vars })
    }

    /// Formats the ideal in the session input syntax: `(x^2, x*y)`, `()` for
    /// zero and `(1)` for the unit ideal.
    pub fn display_gens(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            exps::write_monomial(f, self.ring.vars(), g)?;
        }
        f.write_str(")")
    }
}

/// A monomial prime `⟨z_i : i ∈ S⟩`, identified with its variable subset.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PrimeSupport {
    ring: Ring,
    vars: Vec<usize>,
}

impl PrimeSupport {
    pub fn new(ring: &Ring, vars: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut vars: Vec<usize> = vars.into_iter().collect();
        if let Some(&bad) = vars.iter().find(|&&i| i >= ring.nvars()) {
            return Err(AlgebraError::VariableOutOfRange(bad));
        }
        vars.sort_unstable();
        vars.dedup();
        if vars.is_empty() {
            return Err(AlgebraError::EmptyPrime);
        }
        Ok(PrimeSupport { ring: ring.clone(), vars })
    }

    pub fn from_names<'a>(ring: &Ring, names: impl IntoIterator<Item = &'a str>) -> Result<Self> {
        let idx = names
            .into_iter()
            .map(|n| ring.var_index(n).ok_or(AlgebraError::VariableOutOfRange(usize::MAX)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ring, idx)
    }

    /// The maximal monomial ideal of the ring.
    pub fn maximal(ring: &Ring) -> Self {
        PrimeSupport { ring: ring.clone(), vars: (0..ring.nvars()).collect() }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Sorted variable indices.
    pub fn vars(&self) -> &[usize] {
        &self.vars
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub(crate) fn mask(&self) -> Vec<bool> {
        let mut mask = vec![false; self.ring.nvars()];
        for &i in &self.vars {
            mask[i] = true;
        }
        mask
    }

    pub fn as_ideal(&self) -> MonomialIdeal {
        let n = self.ring.nvars();
        let raw = self
            .vars
            .iter()
            .map(|&i| {
                let mut e = vec![0; n];
                e[i] = 1;
                e
            })
            .collect();
        MonomialIdeal::from_raw(&self.ring, raw)
    }

    /// `self ⊆ other`.
    pub fn is_subset(&self, other: &PrimeSupport) -> bool {
        self.ring == other.ring && self.vars.iter().all(|v| other.vars.binary_search(v).is_ok())
    }

    pub(crate) fn from_sorted(ring: &Ring, vars: Vec<usize>) -> Self {
        debug_assert!(!vars.is_empty() && vars.windows(2).all(|w| w[0] < w[1]));
        PrimeSupport { ring: ring.clone(), vars }
    }
}

impl PartialOrd for PrimeSupport {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical prime order: fewer variables first, then by variable indices.
impl Ord for PrimeSupport {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ring
            .name()
            .cmp(other.ring.name())
            .then_with(|| self.vars.len().cmp(&other.vars.len()))
            .then_with(|| self.vars.cmp(&other.vars))
    }
}

impl fmt::Display for PrimeSupport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.vars.iter().map(|&i| self.ring.vars()[i].as_str()).collect();
        write!(f, "({})", names.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(vars: &[&str]) -> Ring {
        Ring::new("A", vars.iter().copied()).unwrap()
    }

    fn ideal(r: &Ring, gens: &[&[Exp]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(r, gens.iter().map(|g| g.to_vec()).collect()).unwrap()
    }

    fn mono(r: &Ring, e: &[Exp]) -> Monomial {
        r.monomial(e.to_vec()).unwrap()
    }

    #[test]
    fn minimalize_examples() {
        let r = ring(&["x", "y"]);
        assert_eq!(ideal(&r, &[&[2, 0], &[3, 0], &[0, 1]]).to_string(), "(y, x^2)");
        assert!(ideal(&r, &[]).is_zero());
        assert!(ideal(&r, &[&[0, 0], &[1, 0]]).is_unit());
        assert_eq!(MonomialIdeal::unit(&r).to_string(), "(1)");
        assert_eq!(MonomialIdeal::zero(&r).to_string(), "()");
    }

    #[test]
    fn membership() {
        let r = ring(&["x", "y"]);
        let l = ideal(&r, &[&[2, 0], &[0, 1]]);
        assert!(l.contains(&mono(&r, &[2, 3])).unwrap());
        assert!(!l.contains(&mono(&r, &[1, 0])).unwrap());
        assert!(!MonomialIdeal::zero(&r).contains(&mono(&r, &[4, 4])).unwrap());
    }

    #[test]
    fn sums_products_powers() {
        let r = ring(&["x", "y"]);
        let m = ideal(&r, &[&[1, 0], &[0, 1]]);
        assert_eq!(m.power(2).unwrap(), ideal(&r, &[&[2, 0], &[1, 1], &[0, 2]]));
        let x = ideal(&r, &[&[1, 0]]);
        let y = ideal(&r, &[&[0, 1]]);
        assert_eq!(x.product(&y).unwrap(), ideal(&r, &[&[1, 1]]));
        assert!(x.power(0).unwrap().is_unit());
        assert_eq!(x.product(&MonomialIdeal::unit(&r)).unwrap(), x);
        assert!(x.product(&MonomialIdeal::zero(&r)).unwrap().is_zero());
        assert_eq!(x.sum(&y).unwrap(), m);
    }

    #[test]
    fn intersections() {
        let r = ring(&["x", "y"]);
        let x = ideal(&r, &[&[1, 0]]);
        let y = ideal(&r, &[&[0, 1]]);
        assert_eq!(x.intersect(&y).unwrap(), ideal(&r, &[&[1, 1]]));
        let l = ideal(&r, &[&[2, 0], &[0, 1]]);
        assert_eq!(l.intersect(&x).unwrap(), ideal(&r, &[&[2, 0], &[1, 1]]));
        assert_eq!(l.intersect(&l).unwrap(), l);
        assert_eq!(l.intersect(&MonomialIdeal::unit(&r)).unwrap(), l);
    }

    #[test]
    fn colon_examples() {
        let r = ring(&["x1", "x2", "x3"]);
        let l = ideal(&r, &[&[2, 1, 0], &[0, 0, 1]]);
        assert_eq!(l.colon_monomial(&mono(&r, &[1, 1, 0])).unwrap(), ideal(&r, &[&[1, 0, 0], &[0, 0, 1]]));
        assert_eq!(l.colon_monomial(&r.one()).unwrap(), l);

        let r = ring(&["x", "y"]);
        let l = ideal(&r, &[&[2, 1], &[0, 3]]);
        assert_eq!(l.colon_monomial(&mono(&r, &[0, 2])).unwrap(), ideal(&r, &[&[2, 0], &[0, 1]]));
        assert!(l.colon_monomial(&mono(&r, &[2, 1])).unwrap().is_unit());
        assert!(MonomialIdeal::zero(&r).colon_monomial(&mono(&r, &[1, 0])).unwrap().is_zero());
    }

    #[test]
    fn colon_ideal_examples() {
        let r = ring(&["x", "y"]);
        let l = ideal(&r, &[&[2, 0]]);
        let x = ideal(&r, &[&[1, 0]]);
        assert_eq!(l.colon_ideal(&x).unwrap(), x);
        assert_eq!(l.colon_ideal(&MonomialIdeal::unit(&r)).unwrap(), l);
        assert_eq!(l.colon_ideal(&MonomialIdeal::zero(&r)), Err(AlgebraError::ColonByZero));
    }

    #[test]
    fn colon_ideal_matches_brute_force() {
        // {xy, xz} : {y, z}; oracle: u with u*v in L for every v in G(L'),
        // over all u of degree <= 3. yz is not in the colon: yz*y = y^2*z.
        let r = ring(&["x", "y", "z"]);
        let l = ideal(&r, &[&[1, 1, 0], &[1, 0, 1]]);
        let d = ideal(&r, &[&[0, 1, 0], &[0, 0, 1]]);
        let c = l.colon_ideal(&d).unwrap();
        for u in crate::ring::monomials_up_to(&r, 3) {
            let brute = d.gens().all(|v| l.contains(&u.mul(&v).unwrap()).unwrap());
            assert_eq!(c.contains(&u).unwrap(), brute, "u = {u}");
        }
        assert_eq!(c, ideal(&r, &[&[1, 0, 0]]));
    }

    #[test]
    fn localize_examples() {
        let r = ring(&["x", "y"]);
        let px = PrimeSupport::new(&r, [0]).unwrap();
        assert_eq!(ideal(&r, &[&[1, 1]]).localize(&px).unwrap(), ideal(&r, &[&[1, 0]]));
        assert_eq!(ideal(&r, &[&[2, 0], &[1, 1]]).localize(&px).unwrap(), ideal(&r, &[&[1, 0]]));
        let l = ideal(&r, &[&[2, 0], &[1, 3]]);
        assert_eq!(l.localize(&PrimeSupport::maximal(&r)).unwrap(), l);
    }

    #[test]
    fn equality() {
        let r = ring(&["x", "y"]);
        assert!(ideal(&r, &[&[2, 0], &[3, 0]]).equals(&ideal(&r, &[&[2, 0]])).unwrap());
        assert!(!ideal(&r, &[&[1, 0]]).equals(&ideal(&r, &[&[0, 1]])).unwrap());
        assert!(!MonomialIdeal::zero(&r).equals(&MonomialIdeal::unit(&r)).unwrap());
        let other = Ring::new("B", ["x", "y"]).unwrap();
        assert!(MonomialIdeal::zero(&r).equals(&MonomialIdeal::zero(&other)).is_err());
    }

    #[test]
    fn prime_supports() {
        let r = ring(&["x", "y", "z"]);
        let p = PrimeSupport::new(&r, [2, 0]).unwrap();
        assert_eq!(p.to_string(), "(x, z)");
        assert_eq!(p.as_ideal().as_prime(), Some(p.clone()));
        assert_eq!(PrimeSupport::new(&r, []), Err(AlgebraError::EmptyPrime));
        assert!(ideal(&r, &[&[2, 0, 0]]).as_prime().is_none());
        assert!(PrimeSupport::new(&r, [0]).unwrap().is_subset(&p));
    }
}
