//! JSON encodings of core values. Keys are emitted sorted, so output is
//! byte-stable.

use serde_json::{json, Value};
use vfilt_core::expansion::{ExpansionReport, GlobalRow, RhsValue, TheoremReport, TheoremRow};
use vfilt_core::filtration::{NtfReport, PropertyReport};
use vfilt_core::{IrreducibleComponent, Monomial, MonomialIdeal, PrimeSupport, Ring, VReport};

pub fn ring(r: &Ring) -> Value {
    json!({ "name": r.name(), "vars": r.vars() })
}

pub fn ideal(l: &MonomialIdeal) -> Value {
    json!({ "ring": l.ring().name(), "gens": gens(l) })
}

pub fn gens(l: &MonomialIdeal) -> Vec<String> {
    l.gens().map(|g| g.to_string()).collect()
}

pub fn mono(m: &Monomial) -> Value {
    Value::String(m.to_string())
}

/// A prime as the list of its variable names.
pub fn prime(p: &PrimeSupport) -> Value {
    let vars = p.ring().vars();
    Value::Array(p.vars().iter().map(|&i| Value::String(vars[i].clone())).collect())
}

pub fn primes(ps: &[PrimeSupport]) -> Value {
    Value::Array(ps.iter().map(prime).collect())
}

pub fn component(q: &IrreducibleComponent) -> Value {
    json!({ "gens": gens(&q.ideal()), "radical": prime(&q.radical()) })
}

pub fn vreport(r: &VReport) -> Value {
    json!({
        "v": r.degree,
        "witness": mono(&r.witness),
        "prime": prime(&r.prime),
        "method": r.method.to_string(),
    })
}

pub fn expansion(r: &ExpansionReport) -> Value {
    json!({
        "holds": r.holds,
        "direct": gens(&r.direct),
        "expanded": gens(&r.expanded),
        "mismatch_witnesses": r.mismatch_witnesses.iter().map(mono).collect::<Vec<_>>(),
    })
}

fn rhs(r: &RhsValue) -> Value {
    json!({
        "v": r.degree,
        "achieving_d": r.achieving,
        "terms": r.terms.iter().map(|t| json!({
            "d": t.d,
            "value": t.value(),
            "left": vreport(&t.left),
            "right": vreport(&t.right),
        })).collect::<Vec<_>>(),
    })
}

fn row(r: &TheoremRow) -> Value {
    json!({
        "p": prime(&r.p),
        "q": prime(&r.q),
        "lhs": vreport(&r.lhs),
        "rhs": r.rhs.as_ref().map_or(Value::Null, rhs),
        "equal": r.equal,
        "colon_identity": r.colon_identity,
    })
}

fn global(g: &GlobalRow) -> Value {
    json!({
        "lhs": g.direct.degree,
        "rhs": g.formula,
        "equal": g.equal,
        "witness": mono(&g.direct.witness),
        "prime": prime(&g.direct.prime),
    })
}

pub fn theorem(r: &TheoremReport) -> Value {
    json!({
        "holds": r.holds(),
        "hypothesis_met": r.hypothesis_met(),
        "formula_holds": r.formula_holds(),
        "expansion": expansion(&r.expansion),
        "rows": r.rows.iter().map(row).collect::<Vec<_>>(),
        "global": global(&r.global),
        "non_mixed_primes": r.non_mixed_primes.iter().map(|(p, v)| json!({ "prime": prime(p), "v": v })).collect::<Vec<_>>(),
        "missing_mixed_primes": primes(&r.missing_mixed_primes),
    })
}

fn pairs(list: &[(Monomial, PrimeSupport)]) -> Value {
    Value::Array(list.iter().map(|(f, p)| json!({ "f": mono(f), "prime": prime(p) })).collect())
}

pub fn property(r: &PropertyReport) -> Value {
    json!({
        "holds": r.passed(),
        "deg_cap": r.deg_cap,
        "witnesses": pairs(&r.witnesses),
        "violations": pairs(&r.violations),
    })
}

pub fn ntf(r: &NtfReport) -> Value {
    json!({
        "holds": r.holds,
        "k_max": r.k_max,
        "failure": r.failure.as_ref().map_or(Value::Null, |(k, p)| json!({ "k": k, "prime": prime(p) })),
    })
}
