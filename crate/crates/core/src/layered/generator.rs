//! Random layered sets built around a prescribed affine coset structure.
//!
//! Uniform random layers almost never have small doubling, so each `B_i` is
//! drawn as a dense random subset of `a_i x + y + H` for a random subgroup
//! `H`, then optionally perturbed by one out-of-coset element.

use std::ops::RangeInclusive;

use rand::seq::index::sample;
use rand::seq::IndexedRandom;
use rand::Rng;
use serde::Serialize;

use super::{Layer, LayeredSet};
use crate::group::{coset_of, divisors, CyclicGroup, ResidueSet, Subgroup};
use crate::sumset::IntegerSet;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GeneratorConfig {
    pub d: RangeInclusive<usize>,
    pub s: RangeInclusive<usize>,
    /// Probability that a layer keeps each coset element is drawn from
    /// `[min_density, 1]`; half the instances use full cosets.
    pub min_density: f64,
    /// Probability of moving one element out of its coset.
    pub epsilon: f64,
}

impl Default for GeneratorConfig {
    fn default() -> Self {
        Self { d: 2..=36, s: 6..=9, min_density: 0.6, epsilon: 0.1 }
    }
}

/// `s` first coordinates with `0` included, gcd 1, and maximum in
/// `[s-1, ⌊3s/2⌋ + 1]`.
pub fn random_aset<R: Rng + ?Sized>(rng: &mut R, s: usize) -> IntegerSet {
    assert!(s >= 2);
    loop {
        let max = rng.random_range(s - 1..=3 * s / 2 + 1);
        let mut members: Vec<usize> = sample(rng, max - 1, s - 2).into_iter().map(|x| x + 1).collect();
        members.push(0);
        members.push(max);
        let aset = IntegerSet::from_members(members);
        if aset.nonzero_gcd() == 1 {
            return aset;
        }
    }
}

pub fn generate<R: Rng + ?Sized>(rng: &mut R, cfg: &GeneratorConfig) -> LayeredSet {
    let d = rng.random_range(cfg.d.clone());
    let s = rng.random_range(cfg.s.clone());
    let group = CyclicGroup::new(d).expect("positive modulus");
    let order = *divisors(d).choose(rng).expect("d has divisors");
    let h = Subgroup::new(group, order).expect("divisor");
    let aset = random_aset(rng, s);
    let (x, y) = (rng.random_range(0..d), rng.random_range(0..d));
    let density = if rng.random_bool(0.5) { 1.0 } else { rng.random_range(cfg.min_density..=1.0) };

    let mut sets: Vec<Vec<usize>> = aset
        .iter()
        .map(|a| {
            let coset = coset_of(&h, a * x + y).to_vec();
            let mut kept: Vec<usize> = coset.iter().copied().filter(|_| rng.random_bool(density)).collect();
            if kept.is_empty() {
                kept.push(*coset.choose(rng).expect("cosets are nonempty"));
            }
            kept
        })
        .collect();

    if rng.random_bool(cfg.epsilon) {
        let i = rng.random_range(0..s);
        let stray = rng.random_range(0..d);
        if sets[i].len() > 1 {
            let k = rng.random_range(0..sets[i].len());
            sets[i].swap_remove(k);
        }
        sets[i].push(stray);
    }

    let shift = d - *sets[0].choose(rng).expect("nonempty") % d;
    let layers = aset
        .iter()
        .zip(sets)
        .map(|(a, set)| {
            let b =
                ResidueSet::from_residues(group, set.into_iter().map(|v| (v + shift) % d)).expect("reduced");
            Layer::new(a, b)
        })
        .collect();
    LayeredSet::new(group, layers).expect("generator respects the invariants")
}

#[cfg(test)]
mod tests {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;

    #[test]
    fn generated_sets_are_valid_and_reproducible() {
        let cfg = GeneratorConfig::default();
        let mut r1 = ChaCha8Rng::seed_from_u64(7);
        let mut r2 = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let l = generate(&mut r1, &cfg);
            assert!((6..=9).contains(&l.s()));
            assert!(l.modulus() <= 36);
            assert!(l.max_a() <= 3 * l.s() / 2 + 1);
            assert_eq!(l, generate(&mut r2, &cfg));
        }
    }

    #[test]
    fn random_aset_shape() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for s in 2..10 {
            for _ in 0..50 {
                let a = random_aset(&mut rng, s);
                assert_eq!(a.len(), s);
                assert_eq!(a.min(), Some(0));
                assert_eq!(a.nonzero_gcd(), 1);
            }
        }
    }
}
