//! Brute-force oracles shared by the integration tests. Nothing here uses the
//! bit-parallel kernels.
#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::seq::IndexedRandom;
use rand::Rng;
use sumset_forge_core::{CyclicGroup, IntegerSet, ResidueSet};

pub fn group(d: usize) -> CyclicGroup {
    CyclicGroup::new(d).unwrap()
}

pub fn residues(d: usize, xs: impl IntoIterator<Item = usize>) -> ResidueSet {
    ResidueSet::from_residues(group(d), xs).unwrap()
}

/// The subset of `Z/dZ` encoded by the low `d` bits of `mask`.
pub fn from_mask(d: usize, mask: u64) -> ResidueSet {
    residues(d, (0..d).filter(|i| mask >> i & 1 == 1))
}

pub fn int_from_mask(n: usize, mask: u64) -> IntegerSet {
    IntegerSet::new(n, (0..n).filter(|i| mask >> i & 1 == 1).collect()).unwrap()
}

/// A subset of `Z/dZ` with a density drawn uniformly from `[0, 1]`.
pub fn random_residues<R: Rng>(rng: &mut R, d: usize) -> ResidueSet {
    let p = rng.random_range(0.0..=1.0);
    residues(d, (0..d).filter(|_| rng.random_bool(p)))
}

pub fn naive_sumset(a: &ResidueSet, b: &ResidueSet) -> BTreeSet<usize> {
    let d = a.modulus();
    a.iter().flat_map(|x| b.iter().map(move |y| (x + y) % d)).collect()
}

pub fn naive_sumset_int(a: &IntegerSet, b: &IntegerSet) -> BTreeSet<usize> {
    a.iter().flat_map(|x| b.iter().map(move |y| x + y)).collect()
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Every subset of `[0, max]` with `s` elements, containing `0` and `max`,
/// whose nonzero elements have gcd 1.
pub fn asets(s: usize, max: usize) -> Vec<IntegerSet> {
    let mut out = Vec::new();
    if s < 2 || max + 1 < s {
        return out;
    }
    let inner = max - 1;
    for mask in 0u64..1 << inner {
        if mask.count_ones() as usize != s - 2 {
            continue;
        }
        let mut members = vec![0];
        members.extend((0..inner).filter(|i| mask >> i & 1 == 1).map(|i| i + 1));
        members.push(max);
        if members.iter().fold(0, |g, &x| gcd(g, x)) == 1 {
            out.push(IntegerSet::from_members(members));
        }
    }
    out
}

/// All such sets with `max ≤ max_a`.
pub fn asets_up_to(s: usize, max_a: usize) -> Vec<IntegerSet> {
    (s - 1..=max_a).flat_map(|m| asets(s, m)).collect()
}

/// Values `x_i ∈ Z/qZ` with `a_j - a_i = a_t - a_r ⇒ x_j - x_i = x_t - x_r`,
/// drawn by randomized backtracking.
pub fn random_parallelogram_values<R: Rng>(rng: &mut R, a: &[usize], q: usize) -> Vec<usize> {
    let mut values = Vec::with_capacity(a.len());
    assert!(extend(rng, a, q, &mut values), "affine assignments always exist");
    values
}

fn extend<R: Rng>(rng: &mut R, a: &[usize], q: usize, values: &mut Vec<usize>) -> bool {
    let n = values.len();
    if n == a.len() {
        return true;
    }
    let mut candidates: Vec<usize> = (0..q).collect();
    while !candidates.is_empty() {
        let &c = candidates.choose(rng).unwrap();
        candidates.retain(|&x| x != c);
        values.push(c);
        if consistent_last(a, q, values) && extend(rng, a, q, values) {
            return true;
        }
        values.pop();
    }
    false
}

/// Checks every constraint that involves the last assigned index.
fn consistent_last(a: &[usize], q: usize, values: &[usize]) -> bool {
    let n = values.len() - 1;
    let diff = |j: usize, i: usize| (values[j] + q - values[i]) % q;
    for i in 0..n {
        for r in 0..=n {
            for t in 0..=n {
                if a[n] + a[r] == a[t] + a[i] && diff(n, i) != diff(t, r) {
                    return false;
                }
            }
        }
    }
    true
}

pub fn parallelogram_consistent(a: &[usize], q: usize, values: &[usize]) -> bool {
    let n = a.len();
    let diff = |j: usize, i: usize| (values[j] + q - values[i]) % q;
    (0..n).all(|i| {
        (0..n).all(|j| (0..n).all(|r| (0..n).all(|t| a[j] + a[r] != a[t] + a[i] || diff(j, i) == diff(t, r))))
    })
}
