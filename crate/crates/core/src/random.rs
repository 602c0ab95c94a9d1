//! Seeded random instances for sweeps and property suites.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ideal::MonomialIdeal;
use crate::ring::{Exp, Ring};

/// Shape limits for a random ideal.
#[derive(Clone, Copy, Debug)]
pub struct Shape {
    pub max_vars: usize,
    pub max_gens: usize,
    pub max_exp: Exp,
}

pub struct InstanceGenerator {
    rng: ChaCha8Rng,
}

impl InstanceGenerator {
    pub fn new(seed: u64) -> Self {
        InstanceGenerator { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    /// A ring `name = [prefix1, …, prefixN]` with `1 ≤ N ≤ max_vars`.
    pub fn ring(&mut self, name: &str, prefix: &str, max_vars: usize) -> Ring {
        let n = self.rng.gen_range(1..=max_vars.max(1));
        Ring::new(name, (1..=n).map(|i| format!("{prefix}{i}"))).expect("generated names are distinct")
    }

    /// A proper nonzero ideal of `ring` with at most `max_gens` generators and
    /// exponents at most `max_exp`.
    pub fn ideal(&mut self, ring: &Ring, max_gens: usize, max_exp: Exp) -> MonomialIdeal {
        let n = ring.nvars();
        let count = self.rng.gen_range(1..=max_gens.max(1));
        let gens = (0..count)
            .map(|_| loop {
                let g: Vec<Exp> = (0..n).map(|_| self.rng.gen_range(0..=max_exp.max(1))).collect();
                if g.iter().any(|&e| e > 0) {
                    break g;
                }
            })
            .collect();
        MonomialIdeal::from_exponents(ring, gens).expect("lengths match ring")
    }

    pub fn square_free_ideal(&mut self, ring: &Ring, max_gens: usize) -> MonomialIdeal {
        self.ideal(ring, max_gens, 1)
    }

    /// A fresh ring and an ideal in it.
    pub fn ring_and_ideal(&mut self, name: &str, prefix: &str, shape: Shape) -> MonomialIdeal {
        let ring = self.ring(name, prefix, shape.max_vars);
        self.ideal(&ring, shape.max_gens, shape.max_exp)
    }

    pub fn exponent_vector(&mut self, n: usize, max_exp: Exp) -> Vec<Exp> {
        (0..n).map(|_| self.rng.gen_range(0..=max_exp)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_and_proper() {
        let shape = Shape { max_vars: 3, max_gens: 4, max_exp: 3 };
        let a: Vec<String> = {
            let mut g = InstanceGenerator::new(7);
            (0..20).map(|_| g.ring_and_ideal("A", "x", shape).to_string()).collect()
        };
        let mut g = InstanceGenerator::new(7);
        for s in &a {
            let l = g.ring_and_ideal("A", "x", shape);
            assert_eq!(&l.to_string(), s);
            assert!(l.require_proper("test").is_ok());
            assert!(l.ring().nvars() <= 3 && l.num_gens() <= 4);
        }
    }
}
