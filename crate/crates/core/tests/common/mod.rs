#![allow(dead_code)]

use proptest::prelude::*;
use vfilt_core::{Exp, Monomial, MonomialIdeal, Ring};

pub fn ring(name: &str, prefix: &str, n: usize) -> Ring {
    Ring::new(name, (1..=n).map(|i| format!("{prefix}{i}"))).unwrap()
}

fn nonzero_exps(n: usize, max_exp: Exp) -> impl Strategy<Value = Vec<Exp>> {
    prop::collection::vec(0..=max_exp, n).prop_filter("not the unit monomial", |e| e.iter().any(|&x| x > 0))
}

pub fn exps(n: usize, max_exp: Exp) -> impl Strategy<Value = Vec<Exp>> {
    prop::collection::vec(0..=max_exp, n)
}

/// Generator lists for a proper nonzero ideal in `n` variables.
pub fn gens(n: usize, max_gens: usize, max_exp: Exp) -> impl Strategy<Value = Vec<Vec<Exp>>> {
    prop::collection::vec(nonzero_exps(n, max_exp), 1..=max_gens)
}

/// A proper nonzero ideal in a ring `A` with `1..=max_vars` variables.
pub fn ideal(max_vars: usize, max_gens: usize, max_exp: Exp) -> impl Strategy<Value = MonomialIdeal> {
    ideal_in("A", "x", max_vars, max_gens, max_exp)
}

pub fn ideal_in(
    name: &'static str,
    prefix: &'static str,
    max_vars: usize,
    max_gens: usize,
    max_exp: Exp,
) -> impl Strategy<Value = MonomialIdeal> {
    (1..=max_vars).prop_flat_map(move |n| {
        gens(n, max_gens, max_exp)
            .prop_map(move |g| MonomialIdeal::from_exponents(&ring(name, prefix, n), g).unwrap())
    })
}

/// An ideal together with a monomial of the same ring.
pub fn ideal_and_monomial(max_vars: usize, max_gens: usize, max_exp: Exp) -> impl Strategy<Value = (MonomialIdeal, Monomial)> {
    (1..=max_vars).prop_flat_map(move |n| {
        (gens(n, max_gens, max_exp), exps(n, max_exp)).prop_map(move |(g, f)| {
            let r = ring("A", "x", n);
            (MonomialIdeal::from_exponents(&r, g).unwrap(), r.monomial(f).unwrap())
        })
    })
}
