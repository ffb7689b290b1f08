//! Seeded random generators for the verification suites.
//!
//! Distributions follow one rule: small supports. Elements carry at most
//! three symbols with coefficients in `[-coeff_bound, coeff_bound]`, words
//! at most three factors with exponents in `{-2, -1, 1, 2}` — big enough to
//! exercise every rewrite path, small enough that a violation witness is
//! readable.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::chain::ChainComplex;
use crate::gamma::{gamma_basis, GammaElement};
use crate::loop_group::{class_of, LoopWord};
use crate::operators::{Operator, OperatorWord};
use crate::report::Bounds;
use crate::sphere::{s2_simplices, BaseSimplex};
use crate::twisted_product::TotalSimplex;

pub struct Sampler {
    rng: ChaCha8Rng,
    bounds: Bounds,
}

impl Sampler {
    pub fn new(seed: u64, bounds: Bounds) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            bounds,
        }
    }

    pub fn bounds(&self) -> Bounds {
        self.bounds
    }

    pub fn degree(&mut self, min: u32) -> u32 {
        self.rng.gen_range(min..=self.bounds.max_degree)
    }

    pub fn count(&mut self, max: usize) -> usize {
        self.rng.gen_range(0..=max)
    }

    pub fn pick<'a, T>(&mut self, items: &'a [T]) -> &'a T {
        &items[self.rng.gen_range(0..items.len())]
    }

    pub fn coefficient(&mut self) -> i64 {
        self.rng
            .gen_range(-self.bounds.coeff_bound..=self.bounds.coeff_bound)
    }

    fn exponent(&mut self) -> i64 {
        *[-2, -1, 1, 2].get(self.rng.gen_range(0..4)).unwrap()
    }

    /// Up to three random basis symbols with bounded coefficients; zero when
    /// the degree has no symbols at all.
    pub fn gamma_element(&mut self, c: &ChainComplex, degree: u32) -> GammaElement {
        let basis = gamma_basis(c, degree);
        let mut x = GammaElement::zero(degree);
        if basis.is_empty() {
            return x;
        }
        for _ in 0..self.rng.gen_range(1..=3) {
            let symbol = &basis[self.rng.gen_range(0..basis.len())];
            let term = symbol.element(c).scale(self.coefficient());
            x = x.add(&term).expect("same degree");
        }
        x
    }

    /// A product of up to three generator classes with small exponents.
    pub fn loop_word(&mut self, c: &ChainComplex, degree: u32) -> LoopWord {
        let mut w = LoopWord::identity(degree);
        for _ in 0..self.rng.gen_range(1..=3) {
            let x = self.gamma_element(c, degree + 1);
            let class = class_of(&x).expect("positive degree");
            let exp = self.exponent();
            w = w.multiply(&class.pow(exp)).expect("same degree");
        }
        w
    }

    pub fn base_simplex(&mut self, degree: u32) -> BaseSimplex {
        let all = s2_simplices(degree);
        all[self.rng.gen_range(0..all.len())].clone()
    }

    pub fn total_simplex(&mut self, c: &ChainComplex, degree: u32) -> TotalSimplex {
        TotalSimplex::new(self.loop_word(c, degree), self.base_simplex(degree))
            .expect("degrees match by construction")
    }

    /// A random valid operator word of the given length, built by walking
    /// the degrees from the source and picking any applicable operator.
    pub fn operator_word(&mut self, source: u32, len: usize) -> OperatorWord {
        let mut degree = source;
        let mut acting_order = Vec::with_capacity(len);
        for _ in 0..len {
            let face = degree >= 1 && self.rng.gen_bool(0.5);
            let op = if face {
                let i = self.rng.gen_range(0..=degree);
                degree -= 1;
                Operator::face(i)
            } else {
                let i = self.rng.gen_range(0..=degree);
                degree += 1;
                Operator::degeneracy(i)
            };
            acting_order.push(op);
        }
        acting_order.reverse();
        OperatorWord::new(source, acting_order).expect("constructed to be applicable")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sampling_is_reproducible() {
        let c = ChainComplex::sphere(2);
        let mut a = Sampler::new(7, Bounds::default());
        let mut b = Sampler::new(7, Bounds::default());
        for _ in 0..20 {
            assert_eq!(a.gamma_element(&c, 4), b.gamma_element(&c, 4));
            assert_eq!(a.loop_word(&c, 2), b.loop_word(&c, 2));
            assert_eq!(a.base_simplex(3), b.base_simplex(3));
            assert_eq!(a.operator_word(3, 5), b.operator_word(3, 5));
        }
        let mut other = Sampler::new(8, Bounds::default());
        let series_a: Vec<_> = (0..10).map(|_| a.gamma_element(&c, 4)).collect();
        let series_o: Vec<_> = (0..10).map(|_| other.gamma_element(&c, 4)).collect();
        assert_ne!(series_a, series_o);
    }

    #[test]
    fn samples_respect_bounds() {
        let c = ChainComplex::sphere(2);
        let bounds = Bounds {
            max_degree: 5,
            samples: 10,
            coeff_bound: 3,
        };
        let mut s = Sampler::new(1, bounds);
        for _ in 0..100 {
            let x = s.gamma_element(&c, 4);
            for (_, coeffs) in x.terms() {
                // Up to three symbols may stack on one term.
                assert!(coeffs.iter().all(|&v| v.abs() <= 9));
            }
            let w = s.loop_word(&c, 3);
            assert!(w.len() <= 3);
            assert_eq!(w.degree(), 3);
            let word = s.operator_word(4, 6);
            assert_eq!(word.source_degree(), 4);
            assert_eq!(word.ops().len(), 6);
        }
    }
}
