//! Graded `L`-filtrations: ordinary powers, both symbolic powers and
//! integral closures of powers.
//!
//! Symbolic powers intersect the localizations `L^k R_p ∩ R`, which for
//! monomial data have the closed form [`MonomialIdeal::localize`]. Integral
//! closures are the minimal lattice points of the Newton polyhedron, found by
//! scanning the bounding box of the generators with an exact LP membership
//! test.

use std::fmt;
use std::str::FromStr;

use num::ToPrimitive;

use crate::decomposition;
use crate::error::{AlgebraError, Result};
use crate::ideal::{MonomialIdeal, PrimeSupport};
use crate::lp::{self, RationalVector};
use crate::ring::{exps, monomials_up_to, Exp, Monomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FiltrationKind {
    Ordinary,
    /// Intersection over `Ass(L)`.
    SymbolicAss,
    /// Intersection over `Min(L)`.
    SymbolicMin,
    IntegralClosure,
}

impl FiltrationKind {
    pub const ALL: [FiltrationKind; 4] = [
        FiltrationKind::Ordinary,
        FiltrationKind::SymbolicAss,
        FiltrationKind::SymbolicMin,
        FiltrationKind::IntegralClosure,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FiltrationKind::Ordinary => "ordinary",
            FiltrationKind::SymbolicAss => "symb-ass",
            FiltrationKind::SymbolicMin => "symb-min",
            FiltrationKind::IntegralClosure => "intclos",
        }
    }
}

impl fmt::Display for FiltrationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FiltrationKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        FiltrationKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| format!("unknown filtration kind `{s}` (expected ordinary, symb-ass, symb-min or intclos)"))
    }
}

/// `I_0, I_1, …, I_kmax` for the filtration of `kind` attached to `l`.
pub fn filtration_members(kind: FiltrationKind, l: &MonomialIdeal, kmax: u32) -> Result<Vec<MonomialIdeal>> {
    if kmax == 0 {
        return Ok(vec![MonomialIdeal::unit(l.ring())]);
    }
    l.require_proper("filtration")?;
    let primes = match kind {
        FiltrationKind::SymbolicAss => decomposition::associated_primes(l)?,
        FiltrationKind::SymbolicMin => decomposition::minimal_primes(l)?,
        _ => Vec::new(),
    };
    let mut out = vec![MonomialIdeal::unit(l.ring())];
    let mut power = MonomialIdeal::unit(l.ring());
    for k in 1..=kmax {
        power = power.product(l)?;
        let member = match kind {
            FiltrationKind::Ordinary => power.clone(),
            FiltrationKind::SymbolicAss | FiltrationKind::SymbolicMin => symbolic_from_primes(&power, &primes)?,
            FiltrationKind::IntegralClosure => closure_of_power(l, &power, k)?,
        };
        out.push(member);
    }
    Ok(out)
}

/// The `k`-th member of the filtration; `k = 0` gives the unit ideal.
pub fn filtration_member(kind: FiltrationKind, l: &MonomialIdeal, k: u32) -> Result<MonomialIdeal> {
    Ok(filtration_members(kind, l, k)?.pop().expect("at least I_0"))
}

fn symbolic_from_primes(power: &MonomialIdeal, primes: &[PrimeSupport]) -> Result<MonomialIdeal> {
    let local = primes.iter().map(|p| power.localize(p)).collect::<Result<Vec<_>>>()?;
    Ok(MonomialIdeal::intersect_all(local.iter())?.expect("proper ideal has a prime"))
}

/// `a ∈ NP(points)`, with a convex-combination certificate when it is.
pub fn newton_member(a: &[Exp], points: &[Vec<Exp>]) -> Result<Option<RationalVector>> {
    if points.is_empty() {
        return Err(AlgebraError::EmptyPointSet);
    }
    if let Some(bad) = points.iter().find(|p| p.len() != a.len()) {
        return Err(AlgebraError::DimensionMismatch { expected: a.len(), found: bad.len() });
    }
    if let Some(i) = points.iter().position(|p| exps::divides(p, a)) {
        let mut cert = vec![num::BigRational::from_integer(0.into()); points.len()];
        cert[i] = num::BigRational::from_integer(1.into());
        return Ok(Some(RationalVector(cert)));
    }
    lp::convex_dominated(points, a)
}

/// Integral closure of a monomial ideal: the monomials whose exponent
/// vectors lie in its Newton polyhedron.
pub fn integral_closure(l: &MonomialIdeal) -> Result<MonomialIdeal> {
    l.require_proper("integral closure")?;
    closure_scan(l, l.gen_exponents())
}

/// `closure(L^k)` via `NP(L^k) = k·NP(L)`, so the LP only sees `|G(L)|`
/// points instead of `|G(L^k)|`.
fn closure_of_power(l: &MonomialIdeal, power: &MonomialIdeal, k: u32) -> Result<MonomialIdeal> {
    let scaled = l
        .gen_exponents()
        .iter()
        .map(|g| g.iter().map(|&e| e.checked_mul(k).ok_or(AlgebraError::ExponentOverflow)).collect())
        .collect::<Result<Vec<Vec<Exp>>>>()?;
    closure_scan(power, &scaled)
}

/// Scans the box `0 ≤ a ≤ max_j v_j` in degree order. Any point reaching the
/// LP is not divisible by an earlier member, so members found are minimal.
/// `base` is an ideal with the same Newton polyhedron as `points`, used as a
/// cheap sufficient test before the LP.
fn closure_scan(base: &MonomialIdeal, points: &[Vec<Exp>]) -> Result<MonomialIdeal> {
    let n = base.ring().nvars();
    let bound: Vec<Exp> = (0..n).map(|i| points.iter().map(|p| p[i]).max().unwrap_or(0)).collect();
    let min_deg = points.iter().map(|p| exps::degree(p)).min().unwrap_or(0);
    let max_deg = exps::degree(&bound);
    let mut found: Vec<Vec<Exp>> = Vec::new();
    let mut cuts: Vec<lp::Cut> = Vec::new();
    for d in min_deg..=max_deg {
        for a in bounded_of_degree(&bound, d) {
            if found.iter().any(|m| exps::divides(m, &a)) || cuts.iter().any(|c| c.is_violated_by(&a)) {
                continue;
            }
            if base.contains_exp(&a) {
                found.push(a);
                continue;
            }
            match lp::decide(points, &a)? {
                lp::Membership::Inside(_) => found.push(a),
                lp::Membership::Outside(cut) => cuts.push(cut),
            }
        }
    }
    Ok(MonomialIdeal::from_raw(base.ring(), found))
}

/// Points `a ≤ bound` of total degree `d`, in canonical order.
fn bounded_of_degree(bound: &[Exp], d: u64) -> Vec<Vec<Exp>> {
    fn rec(bound: &[Exp], left: u64, prefix: &mut Vec<Exp>, out: &mut Vec<Vec<Exp>>) {
        let i = prefix.len();
        if i == bound.len() {
            if left == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        let rest: u64 = bound[i + 1..].iter().map(|&b| u64::from(b)).sum();
        let hi = u64::from(bound[i]).min(left);
        let lo = left.saturating_sub(rest);
        for e in (lo..=hi).rev() {
            prefix.push(e as Exp);
            rec(bound, left - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(bound, d, &mut Vec::with_capacity(bound.len()), &mut out);
    out
}

/// Searches `m = 1..=m_max` for `(x^a)^m ∈ L^m`; returns the first such `m`.
/// A `None` only means nothing was found up to `m_max`.
pub fn power_membership_oracle(a: &Monomial, l: &MonomialIdeal, m_max: u32) -> Result<Option<u32>> {
    l.ring().check_same(a.ring())?;
    let mut power = MonomialIdeal::unit(l.ring());
    for m in 1..=m_max {
        power = power.product(l)?;
        if power.contains(&a.pow(m)?)? {
            return Ok(Some(m));
        }
    }
    Ok(None)
}

/// Outcome of a bounded check of the division property: whenever
/// `I_k : f = p` is prime, `f ∈ I_{k-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyReport {
    pub kind: FiltrationKind,
    pub k: u32,
    pub deg_cap: u32,
    /// Every `(f, p)` with `I_k : f = p` found under the cap.
    pub witnesses: Vec<(Monomial, PrimeSupport)>,
    pub violations: Vec<(Monomial, PrimeSupport)>,
}

impl PropertyReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn check_filtration_property(kind: FiltrationKind, l: &MonomialIdeal, k: u32, deg_cap: u32) -> Result<PropertyReport> {
    let mut report = PropertyReport { kind, k, deg_cap, witnesses: Vec::new(), violations: Vec::new() };
    if k == 0 {
        return Ok(report);
    }
    let members = filtration_members(kind, l, k)?;
    let (current, previous) = (&members[k as usize], &members[k as usize - 1]);
    for f in monomials_up_to(l.ring(), deg_cap) {
        let Some(p) = current.colon_exp(f.exponents()).as_prime() else { continue };
        if !previous.contains_exp(f.exponents()) {
            report.violations.push((f.clone(), p.clone()));
        }
        report.witnesses.push((f, p));
    }
    Ok(report)
}

/// Bounded normally-torsion-free check: `Ass(L^k) ⊆ Ass(L)` for `k ≤ k_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NtfReport {
    pub holds: bool,
    pub k_max: u32,
    /// First power and prime with `p ∈ Ass(L^k) \ Ass(L)`.
    pub failure: Option<(u32, PrimeSupport)>,
}

pub fn normally_torsion_free(l: &MonomialIdeal, k_max: u32) -> Result<NtfReport> {
    l.require_proper("normally torsion-free check")?;
    if !l.is_square_free() {
        return Err(AlgebraError::NotSquareFree);
    }
    let base = decomposition::associated_primes(l)?;
    let mut power = l.clone();
    for k in 2..=k_max {
        power = power.product(l)?;
        if let Some(p) = decomposition::associated_primes(&power)?.into_iter().find(|p| !base.contains(p)) {
            return Ok(NtfReport { holds: false, k_max, failure: Some((k, p)) });
        }
    }
    Ok(NtfReport { holds: true, k_max, failure: None })
}

/// Smallest `m` for which a certificate proves `(x^a)^m ∈ L^m`.
pub fn certificate_multiplier(cert: &RationalVector) -> Option<u32> {
    cert.denominator_lcm().to_u32()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;

    fn ideal(vars: &[&str], gens: &[&[Exp]]) -> MonomialIdeal {
        let r = Ring::new("A", vars.iter().copied()).unwrap();
        MonomialIdeal::from_exponents(&r, gens.iter().map(|g| g.to_vec()).collect()).unwrap()
    }

    fn triangle() -> MonomialIdeal {
        ideal(&["x", "y", "z"], &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]])
    }

    #[test]
    fn symbolic_min_triangle() {
        let l = triangle();
        let member = filtration_member(FiltrationKind::SymbolicMin, &l, 2).unwrap();
        let xyz = ideal(&["x", "y", "z"], &[&[1, 1, 1]]);
        let expected = l.power(2).unwrap().sum(&MonomialIdeal::from_exponents(l.ring(), xyz.gen_exponents().to_vec()).unwrap()).unwrap();
        assert_eq!(member, expected);
        // oracle: intersect localize(L^2, p) over Min(L) directly
        let l2 = l.power(2).unwrap();
        let mins = decomposition::minimal_primes(&l).unwrap();
        assert_eq!(mins.len(), 3);
        let locs: Vec<_> = mins.iter().map(|p| l2.localize(p).unwrap()).collect();
        assert_eq!(MonomialIdeal::intersect_all(locs.iter()).unwrap().unwrap(), member);
    }

    #[test]
    fn first_members() {
        let l = ideal(&["x", "y"], &[&[2, 0], &[1, 1]]);
        assert_eq!(filtration_member(FiltrationKind::SymbolicAss, &l, 1).unwrap(), l);
        assert!(filtration_member(FiltrationKind::SymbolicMin, &l, 0).unwrap().is_unit());
        let x2 = ideal(&["x"], &[&[2]]);
        assert_eq!(filtration_member(FiltrationKind::Ordinary, &x2, 3).unwrap(), ideal(&["x"], &[&[6]]));
        let r = l.ring().clone();
        assert!(filtration_member(FiltrationKind::Ordinary, &MonomialIdeal::zero(&r), 1).is_err());
    }

    #[test]
    fn kind_round_trip() {
        for k in FiltrationKind::ALL {
            assert_eq!(k.as_str().parse::<FiltrationKind>().unwrap(), k);
        }
        assert!("symbolic".parse::<FiltrationKind>().is_err());
    }

    #[test]
    fn integral_closure_examples() {
        let l = ideal(&["x", "y"], &[&[2, 0], &[0, 2]]);
        assert_eq!(integral_closure(&l).unwrap(), ideal(&["x", "y"], &[&[2, 0], &[1, 1], &[0, 2]]));
        let l = ideal(&["x"], &[&[3]]);
        assert_eq!(integral_closure(&l).unwrap(), l);
        let l = ideal(&["x", "y"], &[&[3, 1], &[1, 3]]);
        assert_eq!(integral_closure(&l).unwrap(), ideal(&["x", "y"], &[&[3, 1], &[2, 2], &[1, 3]]));
        // every new generator is confirmed by the power oracle
        for g in integral_closure(&l).unwrap().gens() {
            assert!(power_membership_oracle(&g, &l, 4).unwrap().is_some());
        }
    }

    #[test]
    fn closure_of_power_matches_definition() {
        let l = ideal(&["x", "y", "z"], &[&[2, 1, 0], &[0, 0, 3], &[1, 2, 1]]);
        for k in 1..=3 {
            let via_scaling = filtration_member(FiltrationKind::IntegralClosure, &l, k).unwrap();
            let direct = integral_closure(&l.power(k).unwrap()).unwrap();
            assert_eq!(via_scaling, direct, "k = {k}");
        }
    }

    #[test]
    fn newton_member_examples() {
        let pts = vec![vec![2, 0], vec![0, 2]];
        let cert = newton_member(&[1, 1], &pts).unwrap().unwrap();
        assert_eq!(cert.to_string(), "(1/2, 1/2)");
        assert_eq!(newton_member(&[1, 0], &pts).unwrap(), None);
        assert_eq!(newton_member(&[2, 0], &pts).unwrap().unwrap().to_string(), "(1, 0)");
        assert!(matches!(newton_member(&[1], &pts), Err(AlgebraError::DimensionMismatch { .. })));
    }

    #[test]
    fn power_oracle_examples() {
        let l = ideal(&["x", "y"], &[&[2, 0], &[0, 2]]);
        let r = l.ring().clone();
        assert_eq!(power_membership_oracle(&r.monomial(vec![1, 1]).unwrap(), &l, 2).unwrap(), Some(2));
        assert_eq!(power_membership_oracle(&r.monomial(vec![2, 0]).unwrap(), &l, 1).unwrap(), Some(1));
        assert_eq!(power_membership_oracle(&r.monomial(vec![1, 0]).unwrap(), &l, 3).unwrap(), None);
    }

    #[test]
    fn property_examples() {
        let x2 = ideal(&["x"], &[&[2]]);
        let rep = check_filtration_property(FiltrationKind::Ordinary, &x2, 2, 4).unwrap();
        assert!(rep.passed());
        assert_eq!(rep.witnesses.len(), 1);
        assert_eq!(rep.witnesses[0].0.to_string(), "x^3");

        let rep = check_filtration_property(FiltrationKind::SymbolicMin, &triangle(), 2, 4).unwrap();
        assert!(rep.passed() && !rep.witnesses.is_empty());

        let l = ideal(&["x", "y"], &[&[2, 0], &[0, 2]]);
        let rep = check_filtration_property(FiltrationKind::IntegralClosure, &l, 2, 5).unwrap();
        assert!(rep.passed() && !rep.witnesses.is_empty());
    }

    #[test]
    fn ntf_examples() {
        let path = ideal(&["x", "y", "z"], &[&[1, 1, 0], &[0, 1, 1]]);
        assert!(normally_torsion_free(&path, 3).unwrap().holds);
        let rep = normally_torsion_free(&triangle(), 3).unwrap();
        assert!(!rep.holds);
        assert_eq!(rep.failure.as_ref().map(|(k, p)| (*k, p.to_string())), Some((2, "(x, y, z)".into())));
        assert!(normally_torsion_free(&ideal(&["x"], &[&[1]]), 5).unwrap().holds);
        assert_eq!(normally_torsion_free(&ideal(&["x"], &[&[2]]), 2), Err(AlgebraError::NotSquareFree));
    }
}
