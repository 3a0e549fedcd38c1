//! Set addition kernels, doubling ratios and stabilizers.
//!
//! The default kernel is shift-OR: for every element `a` of the smaller
//! operand the larger operand's bitmap is shifted by `a` and OR-ed into an
//! accumulator spanning `[0, 2d)`, which is then folded modulo `d`. The naive
//! double loop is kept alongside it as the reference the kernel is tested
//! against.

use std::fmt;

use crate::bits;
use crate::error::{Error, Result};
use crate::group::{subgroups, ResidueSet, Subgroup};
use crate::Ratio;

/// A finite set of integers inside the ambient range `[0, bound)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntegerSet {
    bound: usize,
    members: Vec<usize>,
}

impl IntegerSet {
    /// `members` must be strictly increasing and below `bound`.
    pub fn new(bound: usize, members: Vec<usize>) -> Result<Self> {
        if bound == 0 {
            return Err(Error::ZeroBound);
        }
        if members.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::NotIncreasing);
        }
        if let Some(&last) = members.last() {
            if last >= bound {
                return Err(Error::OutsideAmbient { value: last, bound });
            }
        }
        Ok(Self { bound, members })
    }

    /// Sorts and deduplicates; the bound is `max + 1` (or 1 when empty).
    pub fn from_members<I: IntoIterator<Item = usize>>(members: I) -> Self {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        let bound = members.last().map_or(1, |m| m + 1);
        Self { bound, members }
    }

    /// The same members inside a different ambient range.
    pub fn with_bound(&self, bound: usize) -> Result<Self> {
        Self::new(bound, self.members.clone())
    }

    pub fn interval(lo: usize, hi: usize) -> Self {
        Self::from_members(lo..=hi)
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn min(&self) -> Option<usize> {
        self.members.first().copied()
    }

    pub fn max(&self) -> Option<usize> {
        self.members.last().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn is_subset(&self, other: &IntegerSet) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    /// gcd of the nonzero members (0 when there are none).
    pub fn nonzero_gcd(&self) -> usize {
        self.members.iter().fold(0, |g, &x| num_integer::gcd(g, x))
    }

    pub(crate) fn to_words(&self) -> Vec<u64> {
        let mut words = vec![0; bits::words_for(self.bound)];
        for &x in &self.members {
            bits::set(&mut words, x);
        }
        words
    }

    pub(crate) fn from_words(bound: usize, words: &[u64]) -> Self {
        let members = bits::ones(words).take_while(|&x| x < bound).collect();
        Self { bound, members }
    }
}

impl fmt::Debug for IntegerSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[0,{})", self.bound)?;
        f.debug_set().entries(&self.members).finish()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SumsetStrategy {
    #[default]
    ShiftOr,
    Naive,
}

pub fn sumset(a: &ResidueSet, b: &ResidueSet) -> Result<ResidueSet> {
    sumset_with(a, b, SumsetStrategy::ShiftOr)
}

pub fn sumset_with(a: &ResidueSet, b: &ResidueSet, strategy: SumsetStrategy) -> Result<ResidueSet> {
    a.group().check_same(b.group())?;
    Ok(match strategy {
        SumsetStrategy::ShiftOr => shift_or_cyclic(a, b),
        SumsetStrategy::Naive => naive_cyclic(a, b),
    })
}

fn shift_or_cyclic(a: &ResidueSet, b: &ResidueSet) -> ResidueSet {
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    let d = a.modulus();
    let mut wide = vec![0; bits::words_for(2 * d)];
    for x in small.iter() {
        bits::or_shifted_left(&mut wide, large.words(), x);
    }
    ResidueSet::fold(a.group(), &wide)
}

fn naive_cyclic(a: &ResidueSet, b: &ResidueSet) -> ResidueSet {
    let d = a.modulus();
    let mut hit = vec![false; d];
    for x in a.iter() {
        for y in b.iter() {
            let s = x + y;
            hit[if s >= d { s - d } else { s }] = true;
        }
    }
    let members = hit.iter().enumerate().filter(|(_, &h)| h).map(|(i, _)| i);
    ResidueSet::from_residues(a.group(), members).expect("residues below modulus")
}

/// Integer sumset; the ambient bound of the result is the sum of the bounds.
pub fn sumset_int(a: &IntegerSet, b: &IntegerSet) -> IntegerSet {
    sumset_int_with(a, b, SumsetStrategy::ShiftOr)
}

pub fn sumset_int_with(a: &IntegerSet, b: &IntegerSet, strategy: SumsetStrategy) -> IntegerSet {
    let bound = a.bound + b.bound;
    match strategy {
        SumsetStrategy::ShiftOr => {
            let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
            let src = large.to_words();
            let mut out = vec![0; bits::words_for(bound)];
            for x in small.iter() {
                bits::or_shifted_left(&mut out, &src, x);
            }
            IntegerSet::from_words(bound, &out)
        }
        SumsetStrategy::Naive => {
            let sums = a.iter().flat_map(|x| b.iter().map(move |y| x + y));
            let mut set = IntegerSet::from_members(sums);
            set.bound = bound;
            set
        }
    }
}

/// Sets that can be added to themselves.
pub trait AdditiveSet {
    fn size(&self) -> usize;
    fn double(&self) -> Self;
}

impl AdditiveSet for ResidueSet {
    fn size(&self) -> usize {
        self.len()
    }

    fn double(&self) -> Self {
        shift_or_cyclic(self, self)
    }
}

impl AdditiveSet for IntegerSet {
    fn size(&self) -> usize {
        self.len()
    }

    fn double(&self) -> Self {
        sumset_int(self, self)
    }
}

/// `|A + A| / |A|`, kept exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DoublingReport {
    pub set_size: usize,
    pub sumset_size: usize,
    pub ratio: Ratio,
}

impl DoublingReport {
    pub fn new(set_size: usize, sumset_size: usize) -> Result<Self> {
        if set_size == 0 {
            return Err(Error::EmptySet("doubling ratio"));
        }
        Ok(Self { set_size, sumset_size, ratio: Ratio::new(sumset_size, set_size) })
    }

    /// `|A+A| < t·|A|`, by cross-multiplication.
    pub fn is_below(&self, threshold: Ratio) -> bool {
        less_than_ratio(self.sumset_size, self.set_size, threshold)
    }
}

/// `lhs < t·scale` for a rational `t`, without division.
pub fn less_than_ratio(lhs: usize, scale: usize, t: Ratio) -> bool {
    (lhs as u128) * (*t.denom() as u128) < (*t.numer() as u128) * (scale as u128)
}

pub fn doubling<S: AdditiveSet>(a: &S) -> Result<DoublingReport> {
    if a.size() == 0 {
        return Err(Error::EmptySet("doubling ratio"));
    }
    DoublingReport::new(a.size(), a.double().size())
}

/// The largest subgroup `H` with `A + H = A`.
pub fn stabilizer(a: &ResidueSet) -> Result<Subgroup> {
    if a.is_empty() {
        return Err(Error::EmptySet("stabilizer"));
    }
    // A cyclic subgroup fixes A iff its generator does.
    let found = subgroups(a.group()).into_iter().rev().find(|h| a.translate(h.step()) == *a);
    Ok(found.expect("the trivial subgroup fixes every set"))
}

/// `Some((start, difference))` when consecutive gaps are all equal.
/// A singleton is a progression with difference 0.
pub fn is_arithmetic_progression(a: &IntegerSet) -> Option<(usize, usize)> {
    let m = a.members();
    let start = *m.first()?;
    if m.len() == 1 {
        return Some((start, 0));
    }
    let diff = m[1] - m[0];
    m.windows(2).all(|w| w[1] - w[0] == diff).then_some((start, diff))
}
