//! Binomial expansion of `(I+J)_k` and the min-formula for its v-numbers.
//!
//! For `I ⊂ A` and `J ⊂ B` in disjoint variables, [`verify_theorem`]
//! computes `(I+J)_k` directly in `S = A ⊗ B`, reads off `Ass` and local
//! v-numbers there, and compares each mixed prime `p + q` against
//!
//! ```text
//!   min_{0 ≤ d < k, p ∈ Ass(I_{k-d}), q ∈ Ass(J_{d+1})}  v_p(I_{k-d}) + v_q(J_{d+1})
//! ```
//!
//! evaluated purely from the summand filtrations in `A` and `B`. The two
//! sides share no intermediate ideals.

use crate::decomposition;
use crate::error::{AlgebraError, Result};
use crate::filtration::{filtration_member, filtration_members, FiltrationKind};
use crate::ideal::{MonomialIdeal, PrimeSupport};
use crate::ring::{JoinedRing, Monomial};
use crate::vnumber::{self, VReport};

const MAX_MISMATCH_WITNESSES: usize = 10;

/// `I + J := IS + JS` in the joined ring.
pub fn join_ideals(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<(JoinedRing, MonomialIdeal)> {
    let s = i.ring().join(j.ring())?;
    let sum = embed(&s, i, Side::Left)?.sum(&embed(&s, j, Side::Right)?)?;
    Ok((s, sum))
}

#[derive(Clone, Copy)]
enum Side {
    Left,
    Right,
}

fn embed(s: &JoinedRing, l: &MonomialIdeal, side: Side) -> Result<MonomialIdeal> {
    let gens = l
        .gens()
        .map(|g| match side {
            Side::Left => s.embed_left(&g),
            Side::Right => s.embed_right(&g),
        })
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::new(s.ring(), gens)
}

fn embed_prime(s: &JoinedRing, p: &PrimeSupport, side: Side) -> PrimeSupport {
    let shift = match side {
        Side::Left => 0,
        Side::Right => s.offset(),
    };
    PrimeSupport::new(s.ring(), p.vars().iter().map(|v| v + shift)).expect("embedded prime is non-empty")
}

/// Splits a prime of `S` into its `A` and `B` parts; either may be empty.
fn split_prime(s: &JoinedRing, p: &PrimeSupport) -> (Option<PrimeSupport>, Option<PrimeSupport>) {
    let off = s.offset();
    let left: Vec<usize> = p.vars().iter().copied().filter(|&v| v < off).collect();
    let right: Vec<usize> = p.vars().iter().filter(|&&v| v >= off).map(|v| v - off).collect();
    (PrimeSupport::new(s.left(), left).ok(), PrimeSupport::new(s.right(), right).ok())
}

fn require_inputs(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<()> {
    i.require_proper("binomial expansion")?;
    j.require_proper("binomial expansion")
}

/// `Σ_{i+j=k} I_i J_j` from precomputed members `I_0..I_k`, `J_0..J_k`.
fn expand_members(s: &JoinedRing, im: &[MonomialIdeal], jm: &[MonomialIdeal], k: usize) -> Result<MonomialIdeal> {
    let mut acc = MonomialIdeal::zero(s.ring());
    for h in 0..=k {
        let term = embed(s, &im[k - h], Side::Left)?.product(&embed(s, &jm[h], Side::Right)?)?;
        acc = acc.sum(&term)?;
    }
    Ok(acc)
}

/// `Σ_{i+j=k} I_i J_j` in `S`, with `I_0 = A` and `J_0 = B`.
pub fn binomial_expansion(kind: FiltrationKind, i: &MonomialIdeal, j: &MonomialIdeal, k: u32) -> Result<MonomialIdeal> {
    require_inputs(i, j)?;
    let s = i.ring().join(j.ring())?;
    let im = filtration_members(kind, i, k)?;
    let jm = filtration_members(kind, j, k)?;
    expand_members(&s, &im, &jm, k as usize)
}

/// `(I+J)_k` computed entirely in `S`.
pub fn direct_term(kind: FiltrationKind, i: &MonomialIdeal, j: &MonomialIdeal, k: u32) -> Result<MonomialIdeal> {
    require_inputs(i, j)?;
    let (_, sum) = join_ideals(i, j)?;
    filtration_member(kind, &sum, k)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionReport {
    pub kind: FiltrationKind,
    pub k: u32,
    pub holds: bool,
    pub direct: MonomialIdeal,
    pub expanded: MonomialIdeal,
    /// Up to ten generators lying in one side but not the other.
    pub mismatch_witnesses: Vec<Monomial>,
}

fn expansion_report(kind: FiltrationKind, k: u32, direct: MonomialIdeal, expanded: MonomialIdeal) -> Result<ExpansionReport> {
    let holds = direct.equals(&expanded)?;
    let mut witnesses = Vec::new();
    if !holds {
        for (a, b) in [(&direct, &expanded), (&expanded, &direct)] {
            for g in a.gens() {
                if !b.contains(&g)? {
                    witnesses.push(g);
                }
            }
        }
        witnesses.sort();
        witnesses.truncate(MAX_MISMATCH_WITNESSES);
    }
    Ok(ExpansionReport { kind, k, holds, direct, expanded, mismatch_witnesses: witnesses })
}

pub fn verify_expansion(kind: FiltrationKind, i: &MonomialIdeal, j: &MonomialIdeal, k: u32) -> Result<ExpansionReport> {
    let direct = direct_term(kind, i, j, k)?;
    let expanded = binomial_expansion(kind, i, j, k)?;
    expansion_report(kind, k, direct, expanded)
}

/// One admissible `d` in the min-formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RhsTerm {
    pub d: u32,
    pub left: VReport,
    pub right: VReport,
}

impl RhsTerm {
    pub fn value(&self) -> u64 {
        self.left.degree + self.right.degree
    }
}

/// The min-formula value with every admissible `d` evaluated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RhsValue {
    pub degree: u64,
    /// All `d` attaining the minimum, ascending.
    pub achieving: Vec<u32>,
    pub terms: Vec<RhsTerm>,
}

/// Filtration members and their associated primes for one summand.
struct SummandData {
    members: Vec<MonomialIdeal>,
    ass: Vec<Vec<PrimeSupport>>,
}

impl SummandData {
    fn new(kind: FiltrationKind, l: &MonomialIdeal, k: u32) -> Result<Self> {
        let members = filtration_members(kind, l, k)?;
        let ass = members
            .iter()
            .map(|m| if m.is_unit() { Ok(Vec::new()) } else { decomposition::associated_primes(m) })
            .collect::<Result<Vec<_>>>()?;
        Ok(SummandData { members, ass })
    }
}

fn rhs_from(idata: &SummandData, jdata: &SummandData, k: u32, p: &PrimeSupport, q: &PrimeSupport) -> Result<Option<RhsValue>> {
    let mut terms = Vec::new();
    for d in 0..k {
        let (ii, jj) = ((k - d) as usize, (d + 1) as usize);
        if !idata.ass[ii].contains(p) || !jdata.ass[jj].contains(q) {
            continue;
        }
        let left = vnumber::local_v(&idata.members[ii], p)?;
        let right = vnumber::local_v(&jdata.members[jj], q)?;
        terms.push(RhsTerm { d, left, right });
    }
    let Some(degree) = terms.iter().map(RhsTerm::value).min() else { return Ok(None) };
    let achieving = terms.iter().filter(|t| t.value() == degree).map(|t| t.d).collect();
    Ok(Some(RhsValue { degree, achieving, terms }))
}

/// The min-formula for `v_{p+q}((I+J)_k)` from the summand filtrations.
pub fn theorem_rhs(
    kind: FiltrationKind,
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    k: u32,
    p: &PrimeSupport,
    q: &PrimeSupport,
) -> Result<Option<RhsValue>> {
    require_inputs(i, j)?;
    i.ring().check_same(p.ring())?;
    j.ring().check_same(q.ring())?;
    if p.is_empty() || q.is_empty() {
        return Err(AlgebraError::EmptyPrime);
    }
    let idata = SummandData::new(kind, i, k)?;
    let jdata = SummandData::new(kind, j, k)?;
    rhs_from(&idata, &jdata, k, p, q)
}

/// One mixed associated prime `p + q` of `(I+J)_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremRow {
    pub p: PrimeSupport,
    pub q: PrimeSupport,
    /// `v_{p+q}((I+J)_k)` computed in `S`.
    pub lhs: VReport,
    pub rhs: Option<RhsValue>,
    pub equal: bool,
    /// `(I+J)_k : x^a y^b = (I_{k-d} : x^a) + (J_{d+1} : y^b)` for the
    /// witnesses of every achieving `d`.
    pub colon_identity: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlobalRow {
    pub direct: VReport,
    /// Min over mixed primes of the formula values.
    pub formula: Option<u64>,
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremReport {
    pub kind: FiltrationKind,
    pub k: u32,
    pub expansion: ExpansionReport,
    pub rows: Vec<TheoremRow>,
    pub global: GlobalRow,
    /// Associated primes of `(I+J)_k` lying entirely in `A` or in `B`, with
    /// their local v-numbers.
    pub non_mixed_primes: Vec<(PrimeSupport, u64)>,
    /// `p + q` predicted by the formula data (`p ∈ Ass(I_{k-d})`,
    /// `q ∈ Ass(J_{d+1})`) but absent from `Ass((I+J)_k)`.
    pub missing_mixed_primes: Vec<PrimeSupport>,
}

impl TheoremReport {
    pub fn hypothesis_met(&self) -> bool {
        self.expansion.holds
    }

    /// Every per-prime and global comparison agrees.
    pub fn formula_holds(&self) -> bool {
        self.rows.iter().all(|r| r.equal && r.colon_identity)
            && self.global.equal
            && self.missing_mixed_primes.is_empty()
    }

    pub fn holds(&self) -> bool {
        self.hypothesis_met() && self.formula_holds()
    }
}

pub fn verify_theorem(kind: FiltrationKind, i: &MonomialIdeal, j: &MonomialIdeal, k: u32) -> Result<TheoremReport> {
    require_inputs(i, j)?;
    if k == 0 {
        return Err(AlgebraError::DegenerateIdeal { op: "v-number", which: "unit" });
    }
    let (s, sum) = join_ideals(i, j)?;

    // left-hand side: everything in S
    let direct = filtration_member(kind, &sum, k)?;
    let ass_s = decomposition::associated_primes_with_witnesses(&direct)?;

    // right-hand side: everything in A and B
    let idata = SummandData::new(kind, i, k)?;
    let jdata = SummandData::new(kind, j, k)?;
    let expanded = expand_members(&s, &idata.members, &jdata.members, k as usize)?;
    let expansion = expansion_report(kind, k, direct.clone(), expanded)?;

    let mut rows = Vec::new();
    let mut non_mixed = Vec::new();
    for lhs in &ass_s {
        let (Some(p), Some(q)) = split_prime(&s, &lhs.prime) else {
            non_mixed.push((lhs.prime.clone(), lhs.degree));
            continue;
        };
        let rhs = rhs_from(&idata, &jdata, k, &p, &q)?;
        let equal = rhs.as_ref().is_some_and(|r| r.degree == lhs.degree);
        let colon_identity = match &rhs {
            Some(r) => colon_identity_holds(&s, &direct, &idata, &jdata, k, r)?,
            None => false,
        };
        rows.push(TheoremRow { p, q, lhs: lhs.clone(), rhs, equal, colon_identity });
    }

    let mut missing = Vec::new();
    for d in 0..k {
        for p in &idata.ass[(k - d) as usize] {
            for q in &jdata.ass[(d + 1) as usize] {
                let pq = PrimeSupport::new(
                    s.ring(),
                    embed_prime(&s, p, Side::Left).vars().iter().chain(embed_prime(&s, q, Side::Right).vars()).copied(),
                )?;
                if !ass_s.iter().any(|r| r.prime == pq) && !missing.contains(&pq) {
                    missing.push(pq);
                }
            }
        }
    }
    missing.sort();

    let direct_v = ass_s.iter().min_by_key(|r| r.degree).cloned().expect("proper ideal has associated primes");
    let formula = rows.iter().filter_map(|r| r.rhs.as_ref().map(|v| v.degree)).min();
    let global = GlobalRow { equal: formula == Some(direct_v.degree), direct: direct_v, formula };

    Ok(TheoremReport { kind, k, expansion, rows, global, non_mixed_primes: non_mixed, missing_mixed_primes: missing })
}

fn colon_identity_holds(
    s: &JoinedRing,
    direct: &MonomialIdeal,
    idata: &SummandData,
    jdata: &SummandData,
    k: u32,
    rhs: &RhsValue,
) -> Result<bool> {
    for t in rhs.terms.iter().filter(|t| rhs.achieving.contains(&t.d)) {
        let f = s.embed_left(&t.left.witness)?.mul(&s.embed_right(&t.right.witness)?)?;
        let lhs = direct.colon_monomial(&f)?;
        let ic = idata.members[(k - t.d) as usize].colon_monomial(&t.left.witness)?;
        let jc = jdata.members[(t.d + 1) as usize].colon_monomial(&t.right.witness)?;
        let expected = embed(s, &ic, Side::Left)?.sum(&embed(s, &jc, Side::Right)?)?;
        if lhs != expected {
            return Ok(false);
        }
    }
    Ok(true)
}
