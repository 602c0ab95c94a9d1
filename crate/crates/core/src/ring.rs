//! Variable contexts and monomial arithmetic.
//!
//! A [`Ring`] is nothing more than a name and an ordered list of distinct
//! variable names; the coefficient field never enters any computation here.
//! Monomials are exponent vectors aligned with that order. All deterministic
//! output uses the graded order: total degree first, ties broken
//! lexicographically with the first variable largest (`x^2 < x*y < y^2` in
//! listing order for degree 2 over `[x, y]`).

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{AlgebraError, Result};

/// Exponent type. Arithmetic on exponents is checked; overflow is reported as
/// [`AlgebraError::ExponentOverflow`].
pub type Exp = u32;

#[derive(Debug, PartialEq, Eq, Hash)]
struct RingData {
    name: String,
    vars: Vec<String>,
}

/// A polynomial ring identified by its name and ordered variable list.
#[derive(Clone, Debug, Eq)]
pub struct Ring(Arc<RingData>);

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Hash for Ring {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.hash(state);
    }
}

impl Ring {
    pub fn new<S: Into<String>>(name: impl Into<String>, vars: impl IntoIterator<Item = S>) -> Result<Self> {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        if vars.is_empty() {
            return Err(AlgebraError::EmptyRing);
        }
        let mut seen = HashSet::new();
        for v in &vars {
            if !seen.insert(v.as_str()) {
                return Err(AlgebraError::DuplicateVariable(v.clone()));
            }
        }
        Ok(Ring(Arc::new(RingData { name: name.into(), vars })))
    }

    pub fn name(&self) -> &str {
        &self.0.name
    }

    pub fn vars(&self) -> &[String] {
        &self.0.vars
    }

    pub fn nvars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.vars.iter().position(|v| v == name)
    }

    pub fn one(&self) -> Monomial {
        Monomial { ring: self.clone(), exp: vec![0; self.nvars()] }
    }

    /// The monomial `z_i`.
    pub fn var(&self, i: usize) -> Result<Monomial> {
        if i >= self.nvars() {
            return Err(AlgebraError::VariableOutOfRange(i));
        }
        let mut exp = vec![0; self.nvars()];
        exp[i] = 1;
        Ok(Monomial { ring: self.clone(), exp })
    }

    pub fn monomial(&self, exp: Vec<Exp>) -> Result<Monomial> {
        if exp.len() != self.nvars() {
            return Err(AlgebraError::DimensionMismatch { expected: self.nvars(), found: exp.len() });
        }
        Ok(Monomial { ring: self.clone(), exp })
    }

    pub(crate) fn check_same(&self, other: &Ring) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(AlgebraError::RingMismatch { left: self.name().to_string(), right: other.name().to_string() })
        }
    }

    /// The tensor ring `S = A ⊗ B` whose variables are those of `self`
    /// followed by those of `other`.
    pub fn join(&self, other: &Ring) -> Result<JoinedRing> {
        let left: HashSet<&str> = self.vars().iter().map(String::as_str).collect();
        if let Some(v) = other.vars().iter().find(|v| left.contains(v.as_str())) {
            return Err(AlgebraError::OverlappingRings(v.clone()));
        }
        let vars = self.vars().iter().chain(other.vars()).cloned();
        let ring = Ring::new(format!("{}⊗{}", self.name(), other.name()), vars)?;
        Ok(JoinedRing { ring, left: self.clone(), right: other.clone() })
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = [{}]", self.name(), self.vars().join(", "))
    }
}

/// `S = A ⊗ B` together with the embeddings of `A` and `B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JoinedRing {
    ring: Ring,
    left: Ring,
    right: Ring,
}

impl JoinedRing {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn left(&self) -> &Ring {
        &self.left
    }

    pub fn right(&self) -> &Ring {
        &self.right
    }

    /// Index of the first `B` variable inside `S`.
    pub fn offset(&self) -> usize {
        self.left.nvars()
    }

    pub fn embed_left(&self, m: &Monomial) -> Result<Monomial> {
        self.left.check_same(m.ring())?;
        let mut exp = m.exp.clone();
        exp.resize(self.ring.nvars(), 0);
        Ok(Monomial { ring: self.ring.clone(), exp })
    }

    pub fn embed_right(&self, m: &Monomial) -> Result<Monomial> {
        self.right.check_same(m.ring())?;
        let mut exp = vec![0; self.offset()];
        exp.extend_from_slice(&m.exp);
        Ok(Monomial { ring: self.ring.clone(), exp })
    }

    /// Splits `x^a y^b` in `S` into `(x^a, y^b)`.
    pub fn split(&self, m: &Monomial) -> Result<(Monomial, Monomial)> {
        self.ring.check_same(m.ring())?;
        let (a, b) = m.exp.split_at(self.offset());
        Ok((
            Monomial { ring: self.left.clone(), exp: a.to_vec() },
            Monomial { ring: self.right.clone(), exp: b.to_vec() },
        ))
    }
}

/// A monomial `z^c` over a ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    ring: Ring,
    exp: Vec<Exp>,
}

impl Monomial {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn exponents(&self) -> &[Exp] {
        &self.exp
    }

    pub fn into_exponents(self) -> Vec<Exp> {
        self.exp
    }

    pub fn is_one(&self) -> bool {
        self.exp.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u64 {
        exps::degree(&self.exp)
    }

    pub fn divides(&self, f: &Monomial) -> Result<bool> {
        self.ring.check_same(&f.ring)?;
        Ok(exps::divides(&self.exp, &f.exp))
    }

    pub fn gcd(&self, f: &Monomial) -> Result<Monomial> {
        self.ring.check_same(&f.ring)?;
        Ok(self.with_exp(exps::gcd(&self.exp, &f.exp)))
    }

    pub fn lcm(&self, f: &Monomial) -> Result<Monomial> {
        self.ring.check_same(&f.ring)?;
        Ok(self.with_exp(exps::lcm(&self.exp, &f.exp)))
    }

    pub fn mul(&self, f: &Monomial) -> Result<Monomial> {
        self.ring.check_same(&f.ring)?;
        Ok(self.with_exp(exps::mul(&self.exp, &f.exp)?))
    }

    /// `u / gcd(u, f)`, the per-generator kernel of the monomial colon.
    pub fn quotient_by_gcd(&self, f: &Monomial) -> Result<Monomial> {
        self.ring.check_same(&f.ring)?;
        Ok(self.with_exp(exps::quotient_by_gcd(&self.exp, &f.exp)))
    }

    /// `self^n`.
    pub fn pow(&self, n: u32) -> Result<Monomial> {
        let exp = self
            .exp
            .iter()
            .map(|&e| e.checked_mul(n).ok_or(AlgebraError::ExponentOverflow))
            .collect::<Result<_>>()?;
        Ok(self.with_exp(exp))
    }

    fn with_exp(&self, exp: Vec<Exp>) -> Monomial {
        Monomial { ring: self.ring.clone(), exp }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical graded order. Monomials from different rings compare by ring
/// name first so the order stays total.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ring
            .name()
            .cmp(other.ring.name())
            .then_with(|| exps::canonical_cmp(&self.exp, &other.exp))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        exps::write_monomial(f, self.ring.vars(), &self.exp)
    }
}

/// Slice-level exponent arithmetic shared by the ideal algorithms.
pub mod exps {
    use super::*;

    pub fn degree(a: &[Exp]) -> u64 {
        a.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn divides(u: &[Exp], f: &[Exp]) -> bool {
        u.iter().zip(f).all(|(a, b)| a <= b)
    }

    pub fn gcd(u: &[Exp], f: &[Exp]) -> Vec<Exp> {
        u.iter().zip(f).map(|(&a, &b)| a.min(b)).collect()
    }

    pub fn lcm(u: &[Exp], f: &[Exp]) -> Vec<Exp> {
        u.iter().zip(f).map(|(&a, &b)| a.max(b)).collect()
    }

    pub fn mul(u: &[Exp], f: &[Exp]) -> Result<Vec<Exp>> {
        u.iter()
            .zip(f)
            .map(|(&a, &b)| a.checked_add(b).ok_or(AlgebraError::ExponentOverflow))
            .collect()
    }

    pub fn quotient_by_gcd(u: &[Exp], f: &[Exp]) -> Vec<Exp> {
        u.iter().zip(f).map(|(&a, &b)| a.saturating_sub(b)).collect()
    }

    pub fn is_one(a: &[Exp]) -> bool {
        a.iter().all(|&e| e == 0)
    }

    /// Number of variables with a positive exponent.
    pub fn support_len(a: &[Exp]) -> usize {
        a.iter().filter(|&&e| e > 0).count()
    }

    pub fn canonical_cmp(a: &[Exp], b: &[Exp]) -> Ordering {
        degree(a).cmp(&degree(b)).then_with(|| b.cmp(a))
    }

    pub fn write_monomial(f: &mut fmt::Formatter<'_>, vars: &[String], exp: &[Exp]) -> fmt::Result {
        let mut first = true;
        for (name, &e) in vars.iter().zip(exp) {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(name)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }

    /// All exponent vectors of total degree `d` in `n` variables, in
    /// canonical order.
    pub fn of_degree(n: usize, d: u32) -> Vec<Vec<Exp>> {
        fn rec(n: usize, d: u32, prefix: &mut Vec<Exp>, out: &mut Vec<Vec<Exp>>) {
            if n == 1 {
                prefix.push(d);
                out.push(prefix.clone());
                prefix.pop();
                return;
            }
            for e in (0..=d).rev() {
                prefix.push(e);
                rec(n - 1, d - e, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if n == 0 {
            if d == 0 {
                out.push(Vec::new());
            }
            return out;
        }
        rec(n, d, &mut Vec::with_capacity(n), &mut out);
        out
    }

    /// All exponent vectors of total degree at most `cap`, in canonical order.
    pub fn up_to_degree(n: usize, cap: u32) -> impl Iterator<Item = Vec<Exp>> {
        (0..=cap).flat_map(move |d| of_degree(n, d))
    }
}

/// Monomials of `ring` with degree at most `cap`, in canonical order.
pub fn monomials_up_to(ring: &Ring, cap: u32) -> impl Iterator<Item = Monomial> + '_ {
    exps::up_to_degree(ring.nvars(), cap).map(move |exp| Monomial { ring: ring.clone(), exp })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> Ring {
        Ring::new("A", ["x", "y"]).unwrap()
    }

    #[test]
    fn make_ring() {
        let a = Ring::new("A", ["x"]).unwrap();
        assert_eq!(a.nvars(), 1);
        let a = Ring::new("A", ["x1", "x2", "x3"]).unwrap();
        assert_eq!(a.nvars(), 3);
        assert_eq!(Ring::new("A", ["x", "x"]), Err(AlgebraError::DuplicateVariable("x".into())));
        assert_eq!(Ring::new("A", Vec::<String>::new()), Err(AlgebraError::EmptyRing));
    }

    #[test]
    fn join_and_embed() {
        let a = Ring::new("A", ["x1", "x2"]).unwrap();
        let b = Ring::new("B", ["y1"]).unwrap();
        let s = a.join(&b).unwrap();
        assert_eq!(s.ring().vars(), &["x1", "x2", "y1"]);
        let m = a.monomial(vec![2, 0]).unwrap();
        let e = s.embed_left(&m).unwrap();
        assert_eq!(e.exponents(), &[2, 0, 0]);
        assert_eq!(e.to_string(), "x1^2");
        let (l, r) = s.split(&e).unwrap();
        assert_eq!(l, m);
        assert!(r.is_one());
        let y = s.embed_right(&b.var(0).unwrap()).unwrap();
        assert_eq!(y.exponents(), &[0, 0, 1]);

        let c = Ring::new("C", ["x"]).unwrap();
        let d = Ring::new("D", ["x"]).unwrap();
        assert_eq!(c.join(&d), Err(AlgebraError::OverlappingRings("x".into())));
    }

    #[test]
    fn mono_ops() {
        let r = Ring::new("A", ["x1", "x2"]).unwrap();
        let u = r.monomial(vec![2, 1]).unwrap();
        let f = r.monomial(vec![1, 1]).unwrap();
        assert_eq!(u.quotient_by_gcd(&f).unwrap().exponents(), &[1, 0]);
        assert_eq!(u.degree(), 3);

        let r = xy();
        let a = r.monomial(vec![2, 1]).unwrap();
        let b = r.monomial(vec![0, 3]).unwrap();
        assert_eq!(a.gcd(&b).unwrap().to_string(), "y");
        assert_eq!(a.lcm(&b).unwrap().to_string(), "x^2*y^3");
        assert_eq!(a.mul(&b).unwrap().to_string(), "x^2*y^4");
        assert!(!a.divides(&b).unwrap());
        assert!(f_of(&r, [1, 0]).divides(&a).unwrap());
    }

    fn f_of<const N: usize>(r: &Ring, e: [Exp; N]) -> Monomial {
        r.monomial(e.to_vec()).unwrap()
    }

    #[test]
    fn ring_mismatch_and_overflow() {
        let a = xy();
        let b = Ring::new("B", ["x", "y"]).unwrap();
        assert!(matches!(a.one().mul(&b.one()), Err(AlgebraError::RingMismatch { .. })));
        let big = a.monomial(vec![u32::MAX, 0]).unwrap();
        assert_eq!(big.mul(&a.var(0).unwrap()), Err(AlgebraError::ExponentOverflow));
        assert_eq!(a.monomial(vec![1]), Err(AlgebraError::DimensionMismatch { expected: 2, found: 1 }));
    }

    #[test]
    fn canonical_enumeration_order() {
        let r = xy();
        let listed: Vec<String> = monomials_up_to(&r, 2).map(|m| m.to_string()).collect();
        assert_eq!(listed, ["1", "x", "y", "x^2", "x*y", "y^2"]);
        let mut sorted: Vec<Monomial> = monomials_up_to(&r, 3).collect();
        let copy = sorted.clone();
        sorted.sort();
        assert_eq!(sorted, copy);
        assert_eq!(exps::of_degree(3, 4).len(), 15);
    }
}
