//! Recovering affine structure from coset data.
//!
//! The closure operator grows a seed `G` by every `b + c - a` with
//! `a, b, c ∈ G` that stays inside an ambient set. Values attached to a set
//! whose equal-difference pairs have equal value differences (the
//! parallelogram condition) propagate along the same relations, so a seed
//! pair that closes up to the whole set pins down `x_i = a_i·x + y`.
//!
//! Quotient groups are cyclic, so values live in `Z/qZ` for the quotient
//! order `q`.

use std::collections::BTreeMap;

use crate::bits;
use crate::error::{Error, Result};
use crate::sumset::{sumset_int, IntegerSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureState {
    pub current: IntegerSet,
    pub ambient: IntegerSet,
    /// Number of productive steps taken.
    pub steps: usize,
}

fn check_inside(g: &IntegerSet, ambient: &IntegerSet) -> Result<()> {
    if !g.is_subset(ambient) {
        return Err(Error::Precondition("seed is not inside the ambient set".into()));
    }
    Ok(())
}

/// `g ∪ ({b + c - a : a, b, c ∈ g} ∩ ambient)`.
pub fn closure_step(g: &IntegerSet, ambient: &IntegerSet) -> Result<IntegerSet> {
    check_inside(g, ambient)?;
    Ok(step_unchecked(g, ambient))
}

fn step_unchecked(g: &IntegerSet, ambient: &IntegerSet) -> IntegerSet {
    if g.is_empty() {
        return g.clone();
    }
    // (g + g) - a for each a ∈ g, read as a right shift of the sumset bitmap.
    let doubled = sumset_int(g, g).to_words();
    let bound = ambient.bound();
    let mut reach = vec![0u64; bits::words_for(bound)];
    for a in g.iter() {
        bits::or_shifted_right(&mut reach, &doubled, a);
    }
    bits::mask_tail(&mut reach, bound);
    let members = ambient.iter().filter(|&x| g.contains(x) || bits::get(&reach, x));
    IntegerSet::new(bound, members.collect()).expect("subset of ambient")
}

/// Iterates [`closure_step`] to its least fixpoint.
pub fn good_closure(g: &IntegerSet, ambient: &IntegerSet) -> Result<ClosureState> {
    check_inside(g, ambient)?;
    let mut current = g.with_bound(ambient.bound())?;
    let mut steps = 0;
    while steps <= ambient.len() {
        let next = step_unchecked(&current, ambient);
        if next.len() == current.len() {
            break;
        }
        current = next;
        steps += 1;
    }
    Ok(ClosureState { current, ambient: ambient.clone(), steps })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeedSearch {
    /// `s ≤ 3` or `|A| < 2s/3 + 1`.
    NotApplicable,
    Found {
        low: usize,
        high: usize,
    },
    /// Hypothesis held but no adjacent pair closes up to `A`.
    Missing,
}

/// Scans adjacent pairs `(x, x+1)` of `a ⊆ [0, s-1]` (with `s` the ambient
/// bound) for one whose closure inside `a` is all of `a`.
pub fn find_seed_pair(a: &IntegerSet) -> SeedSearch {
    let s = a.bound();
    if s <= 3 || 3 * a.len() < 2 * s + 3 {
        return SeedSearch::NotApplicable;
    }
    for low in a.iter() {
        if !a.contains(low + 1) {
            continue;
        }
        let seed = IntegerSet::new(s, vec![low, low + 1]).expect("inside ambient");
        let closed = good_closure(&seed, a).expect("seed inside a");
        if closed.current.len() == a.len() {
            return SeedSearch::Found { low, high: low + 1 };
        }
    }
    SeedSearch::Missing
}

/// Values `x_i ∈ Z/qZ`, one per member of `aset` in ascending order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineAssignment {
    aset: IntegerSet,
    values: Vec<usize>,
    modulus: usize,
}

impl AffineAssignment {
    pub fn new(aset: IntegerSet, values: Vec<usize>, modulus: usize) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::ZeroModulus);
        }
        if values.len() != aset.len() {
            return Err(Error::Precondition(format!("{} values for {} elements", values.len(), aset.len())));
        }
        if let Some(&v) = values.iter().find(|&&v| v >= modulus) {
            return Err(Error::ResidueOutOfRange { value: v, modulus });
        }
        Ok(Self { aset, values, modulus })
    }

    /// `x_i = a_i·x + y mod q`.
    pub fn affine(aset: IntegerSet, x: usize, y: usize, modulus: usize) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::ZeroModulus);
        }
        let values = aset.iter().map(|a| (a % modulus * (x % modulus) + y) % modulus).collect();
        Self::new(aset, values, modulus)
    }

    pub fn aset(&self) -> &IntegerSet {
        &self.aset
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    fn value_of(&self, a: usize) -> Option<usize> {
        self.aset.members().binary_search(&a).ok().map(|i| self.values[i])
    }

    fn diff(&self, hi: usize, lo: usize) -> usize {
        (hi + self.modulus - lo) % self.modulus
    }

    /// Whether `(x, y)` reproduces every value.
    pub fn is_solved_by(&self, x: usize, y: usize) -> bool {
        let q = self.modulus;
        self.aset.iter().zip(&self.values).all(|(a, &v)| (a % q * x + y) % q == v)
    }
}

/// Two pairs `(a_i, a_j)` and `(a_r, a_t)` with `a_j - a_i = a_t - a_r` but
/// different value differences.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParallelogramViolation {
    pub first: (usize, usize),
    pub second: (usize, usize),
}

pub fn parallelogram_holds(assign: &AffineAssignment) -> Result<(), ParallelogramViolation> {
    let m = assign.aset.members();
    let mut by_gap: BTreeMap<usize, ((usize, usize), usize)> = BTreeMap::new();
    for j in 0..m.len() {
        for i in 0..j {
            let vd = assign.diff(assign.values[j], assign.values[i]);
            match by_gap.get(&(m[j] - m[i])) {
                Some(&(pair, v)) if v != vd => {
                    return Err(ParallelogramViolation { first: pair, second: (m[i], m[j]) });
                }
                Some(_) => {}
                None => {
                    by_gap.insert(m[j] - m[i], ((m[i], m[j]), vd));
                }
            }
        }
    }
    Ok(())
}

/// `S_k` split by value difference; classes appear in order of their first
/// pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairClassPartition {
    pub k: usize,
    pub classes: Vec<Vec<(usize, usize)>>,
}

pub fn sk_classes(assign: &AffineAssignment, k: usize) -> PairClassPartition {
    let mut classes: Vec<(usize, Vec<(usize, usize)>)> = Vec::new();
    for (i, a) in assign.aset.iter().enumerate() {
        let Some(vj) = assign.value_of(a + k) else { continue };
        let vd = assign.diff(vj, assign.values[i]);
        match classes.iter_mut().find(|(v, _)| *v == vd) {
            Some((_, pairs)) => pairs.push((a, a + k)),
            None => classes.push((vd, vec![(a, a + k)])),
        }
    }
    PairClassPartition { k, classes: classes.into_iter().map(|(_, p)| p).collect() }
}

/// Finds `(x, y)` with `x_i = a_i·x + y` in `Z/qZ`, if any.
///
/// With `a_1 = 0` and gcd 1 a solution is unique, so the seed-pair path and
/// the brute-force scan agree on the answer whenever both run.
pub fn solve_affine(assign: &AffineAssignment) -> Option<(usize, usize)> {
    solve_affine_seeded(assign).unwrap_or_else(|| solve_affine_brute(assign))
}

/// Every `(x, y) ∈ (Z/qZ)²` in lexicographic order; returns the first hit.
pub fn solve_affine_brute(assign: &AffineAssignment) -> Option<(usize, usize)> {
    let q = assign.modulus;
    (0..q).flat_map(|x| (0..q).map(move |y| (x, y))).find(|&(x, y)| assign.is_solved_by(x, y))
}

/// Seed-pair route. `None` when no seed pair applies; `Some(None)` when the
/// propagated values contradict the data.
pub fn solve_affine_seeded(assign: &AffineAssignment) -> Option<Option<(usize, usize)>> {
    let aset = &assign.aset;
    let span = aset.max()? + 1;
    let ambient = aset.with_bound(span).ok()?;
    let SeedSearch::Found { low, high } = find_seed_pair(&ambient) else {
        return None;
    };
    let q = assign.modulus;
    let mut known: BTreeMap<usize, usize> = BTreeMap::new();
    known.insert(low, assign.value_of(low)?);
    known.insert(high, assign.value_of(high)?);
    loop {
        let mut grew = false;
        let pending: Vec<usize> = ambient.iter().filter(|t| !known.contains_key(t)).collect();
        for t in pending {
            // Any b + c - a = t carries the value x_b + x_c - x_a.
            let derived = known.iter().find_map(|(&a, &va)| {
                known.iter().find_map(|(&b, &vb)| {
                    let c = (t + a).checked_sub(b)?;
                    let vc = *known.get(&c)?;
                    Some((vb + vc + q - va) % q)
                })
            });
            if let Some(v) = derived {
                if v != assign.value_of(t)? {
                    return Some(None);
                }
                known.insert(t, v);
                grew = true;
            }
        }
        if !grew {
            break;
        }
    }
    if known.len() != ambient.len() {
        return None;
    }
    let x = assign.diff(known[&high], known[&low]);
    let y = (known[&low] + q - low % q * x % q) % q;
    Some(assign.is_solved_by(x, y).then_some((x, y)))
}
