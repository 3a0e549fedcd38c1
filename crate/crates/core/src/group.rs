//! Residues, subsets, subgroups and cosets of `Z/dZ`.
//!
//! A cyclic group has exactly one subgroup per divisor of its order, so a
//! [`Subgroup`] is identified by its order alone.

use std::fmt;

use crate::bits;
use crate::error::{Error, Result};

/// `Z/dZ` for a positive modulus `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicGroup {
    modulus: usize,
}

impl CyclicGroup {
    pub fn new(modulus: usize) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::ZeroModulus);
        }
        Ok(Self { modulus })
    }

    pub fn modulus(self) -> usize {
        self.modulus
    }

    pub fn subgroups(self) -> Vec<Subgroup> {
        subgroups(self)
    }

    pub fn trivial_subgroup(self) -> Subgroup {
        Subgroup { group: self, order: 1 }
    }

    pub fn full_subgroup(self) -> Subgroup {
        Subgroup { group: self, order: self.modulus }
    }

    pub(crate) fn check_same(self, other: CyclicGroup) -> Result<()> {
        if self != other {
            return Err(Error::ModulusMismatch { left: self.modulus, right: other.modulus });
        }
        Ok(())
    }
}

/// Positive divisors of `n`, ascending.
pub fn divisors(n: usize) -> Vec<usize> {
    let mut low = Vec::new();
    let mut high = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n.is_multiple_of(i) {
            low.push(i);
            if i * i != n {
                high.push(n / i);
            }
        }
        i += 1;
    }
    low.extend(high.into_iter().rev());
    low
}

/// Every subgroup of `g`, ascending by order: trivial first, full group last.
pub fn subgroups(g: CyclicGroup) -> Vec<Subgroup> {
    divisors(g.modulus).into_iter().map(|order| Subgroup { group: g, order }).collect()
}

/// A subset of `Z/dZ` stored as a membership bitmap over `[0, d)`.
///
/// Bits at positions `>= d` are always clear.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ResidueSet {
    group: CyclicGroup,
    words: Vec<u64>,
}

impl ResidueSet {
    pub fn empty(group: CyclicGroup) -> Self {
        Self { group, words: vec![0; bits::words_for(group.modulus)] }
    }

    pub fn full(group: CyclicGroup) -> Self {
        let mut words = vec![u64::MAX; bits::words_for(group.modulus)];
        bits::mask_tail(&mut words, group.modulus);
        Self { group, words }
    }

    pub fn singleton(group: CyclicGroup, x: usize) -> Result<Self> {
        Self::from_residues(group, [x])
    }

    /// Builds a set from residues in `[0, d)`; duplicates are allowed.
    pub fn from_residues<I: IntoIterator<Item = usize>>(group: CyclicGroup, residues: I) -> Result<Self> {
        let mut set = Self::empty(group);
        for x in residues {
            if x >= group.modulus {
                return Err(Error::ResidueOutOfRange { value: x, modulus: group.modulus });
            }
            bits::set(&mut set.words, x);
        }
        Ok(set)
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn group(&self) -> CyclicGroup {
        self.group
    }

    pub fn modulus(&self) -> usize {
        self.group.modulus
    }

    pub fn len(&self) -> usize {
        bits::popcount(&self.words)
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn contains(&self, x: usize) -> bool {
        x < self.group.modulus && bits::get(&self.words, x)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        bits::ones(&self.words)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn min(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn union(&self, other: &ResidueSet) -> Result<ResidueSet> {
        self.group.check_same(other.group)?;
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect();
        Ok(Self { group: self.group, words })
    }

    pub fn intersection(&self, other: &ResidueSet) -> Result<ResidueSet> {
        self.group.check_same(other.group)?;
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect();
        Ok(Self { group: self.group, words })
    }

    pub fn is_subset(&self, other: &ResidueSet) -> Result<bool> {
        self.group.check_same(other.group)?;
        Ok(self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0))
    }

    /// The translate `self + t`.
    pub fn translate(&self, t: usize) -> ResidueSet {
        let d = self.group.modulus;
        let t = t % d;
        if t == 0 {
            return self.clone();
        }
        // Linear shift into [0, 2d), then fold the upper half back down.
        let mut wide = vec![0; bits::words_for(2 * d)];
        bits::or_shifted_left(&mut wide, &self.words, t);
        Self::fold(self.group, &wide)
    }

    /// Reduces a bitmap over `[0, 2d)` modulo `d`.
    pub(crate) fn fold(group: CyclicGroup, wide: &[u64]) -> ResidueSet {
        let d = group.modulus;
        let n = bits::words_for(d);
        let mut words = wide[..n].to_vec();
        bits::mask_tail(&mut words, d);
        bits::or_shifted_right(&mut words, wide, d);
        bits::mask_tail(&mut words, d);
        Self { group, words }
    }

    /// `self + H`: the union of the `H`-cosets that meet `self`.
    pub fn saturate(&self, h: &Subgroup) -> Result<ResidueSet> {
        self.group.check_same(h.group)?;
        let step = h.step();
        let mut hit = vec![false; step];
        for x in self.iter() {
            hit[x % step] = true;
        }
        let d = self.group.modulus;
        let mut out = Self::empty(self.group);
        for (r, _) in hit.iter().enumerate().filter(|(_, &h)| h) {
            for x in (r..d).step_by(step) {
                bits::set(&mut out.words, x);
            }
        }
        Ok(out)
    }
}

impl fmt::Debug for ResidueSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z/{}Z", self.group.modulus)?;
        f.debug_set().entries(self.iter()).finish()
    }
}

/// The unique subgroup of the given order: `{0, d/h, 2d/h, ...}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    group: CyclicGroup,
    order: usize,
}

impl Subgroup {
    pub fn new(group: CyclicGroup, order: usize) -> Result<Self> {
        if order == 0 || !group.modulus.is_multiple_of(order) {
            return Err(Error::NotADivisor { order, modulus: group.modulus });
        }
        Ok(Self { group, order })
    }

    pub fn group(&self) -> CyclicGroup {
        self.group
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// The generator `d / h`, which is also the order of the quotient group.
    pub fn step(&self) -> usize {
        self.group.modulus / self.order
    }

    pub fn contains(&self, x: usize) -> bool {
        x < self.group.modulus && x.is_multiple_of(self.step())
    }

    pub fn elements(&self) -> ResidueSet {
        coset_of(self, 0)
    }
}

/// `x + H` with `x` normalised to the least representative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Coset {
    subgroup: Subgroup,
    representative: usize,
}

impl Coset {
    pub fn new(subgroup: Subgroup, x: usize) -> Self {
        Self { subgroup, representative: x % subgroup.group.modulus % subgroup.step() }
    }

    pub fn subgroup(&self) -> Subgroup {
        self.subgroup
    }

    pub fn representative(&self) -> usize {
        self.representative
    }

    pub fn contains(&self, x: usize) -> bool {
        x < self.subgroup.group.modulus && x % self.subgroup.step() == self.representative
    }

    pub fn to_set(&self) -> ResidueSet {
        coset_of(&self.subgroup, self.representative)
    }
}

/// `{x + k·(d/h) mod d : 0 ≤ k < h}`. `x` is reduced modulo `d`.
pub fn coset_of(h: &Subgroup, x: usize) -> ResidueSet {
    let d = h.group.modulus;
    let step = h.step();
    let mut set = ResidueSet::empty(h.group);
    for x in (x % step..d).step_by(step) {
        bits::set(&mut set.words, x);
    }
    set
}

/// The least `x` with `s ⊆ x + H`, or `None` when `s` meets two cosets.
pub fn containing_coset(s: &ResidueSet, h: &Subgroup) -> Result<Option<usize>> {
    s.group.check_same(h.group)?;
    let first = s.min().ok_or(Error::EmptySet("coset"))?;
    let step = h.step();
    let rep = first % step;
    if step == 1 {
        return Ok(Some(0));
    }
    Ok(s.iter().all(|x| x % step == rep).then_some(rep))
}
