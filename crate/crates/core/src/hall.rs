//! Systems of distinct representatives and the lower bounds on `|A'+A'|`
//! they certify.
//!
//! The matcher is a plain augmenting-path bipartite matching. Family members
//! are processed in index order and candidate representatives ascending, so
//! the certificate returned for a given family is always the same.

use crate::error::{Error, Result};
use crate::sumset::{sumset_int, IntegerSet};

/// One distinct representative per family member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SdrCertificate {
    pub family: Vec<(String, IntegerSet)>,
    pub representatives: Vec<usize>,
}

impl SdrCertificate {
    /// Representative `i` lies in set `i` and no representative repeats.
    pub fn verify(&self) -> bool {
        if self.family.len() != self.representatives.len() {
            return false;
        }
        let mut seen = std::collections::HashSet::new();
        self.family.iter().zip(&self.representatives).all(|((_, set), &r)| set.contains(r) && seen.insert(r))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SdrOutcome {
    Found(SdrCertificate),
    /// Indices `I` with `|∪_{i∈I} G_i| < |I|`.
    HallViolator(Vec<usize>),
}

impl SdrOutcome {
    pub fn certificate(self) -> Option<SdrCertificate> {
        match self {
            Self::Found(c) => Some(c),
            Self::HallViolator(_) => None,
        }
    }
}

pub fn find_sdr(family: &[IntegerSet]) -> SdrOutcome {
    find_sdr_labeled(family.iter().enumerate().map(|(i, s)| (format!("G{i}"), s.clone())).collect())
}

pub fn find_sdr_labeled(family: Vec<(String, IntegerSet)>) -> SdrOutcome {
    let ground = family.iter().filter_map(|(_, s)| s.max()).max().map_or(0, |m| m + 1);
    let mut owner: Vec<Option<usize>> = vec![None; ground];
    for i in 0..family.len() {
        let mut visited = vec![false; ground];
        if !augment(i, &family, &mut owner, &mut visited) {
            // Everything reachable from i by alternating paths is a violator.
            let mut left = vec![false; family.len()];
            left[i] = true;
            let mut stack = vec![i];
            while let Some(j) = stack.pop() {
                for x in family[j].1.iter() {
                    if let Some(k) = owner[x] {
                        if !left[k] {
                            left[k] = true;
                            stack.push(k);
                        }
                    }
                }
            }
            let violator = (0..family.len()).filter(|&k| left[k]).collect();
            return SdrOutcome::HallViolator(violator);
        }
    }
    let mut representatives = vec![0; family.len()];
    for (x, o) in owner.iter().enumerate() {
        if let Some(i) = o {
            representatives[*i] = x;
        }
    }
    SdrOutcome::Found(SdrCertificate { family, representatives })
}

fn augment(
    i: usize,
    family: &[(String, IntegerSet)],
    owner: &mut [Option<usize>],
    visited: &mut [bool],
) -> bool {
    for x in family[i].1.iter() {
        if visited[x] {
            continue;
        }
        visited[x] = true;
        let free = match owner[x] {
            None => true,
            Some(j) => augment(j, family, owner, visited),
        };
        if free {
            owner[x] = Some(i);
            return true;
        }
    }
    false
}

fn projection_preconditions(aset: &IntegerSet) -> Result<()> {
    if aset.len() < 2 {
        return Err(Error::Precondition(format!("need s >= 2 elements, got {}", aset.len())));
    }
    if !aset.contains(0) {
        return Err(Error::Precondition("0 is not in the set".into()));
    }
    if aset.nonzero_gcd() != 1 {
        return Err(Error::Precondition(format!("gcd of nonzero elements is {}", aset.nonzero_gcd())));
    }
    Ok(())
}

/// `R = min(max a_i - s + 3, s)`.
pub fn r_parameter(aset: &IntegerSet) -> Result<usize> {
    if !aset.contains(0) {
        return Err(Error::Precondition("0 is not in the set".into()));
    }
    let s = aset.len();
    if s < 2 {
        return Err(Error::Precondition(format!("need s >= 2 elements, got {s}")));
    }
    Ok((aset.max().unwrap() + 3 - s).min(s))
}

/// Copies of `a_i + A'` in the summand family: `s-1` for the first
/// row, 2 for rows `2..=R`, 1 for the rest.
pub fn lemma2_multiplicities(s: usize, r: usize) -> Vec<usize> {
    (0..s)
        .map(|i| {
            if i == 0 {
                s - 1
            } else if i < r {
                2
            } else {
                1
            }
        })
        .collect()
}

/// SDR over a family of translates `row + A'`, listed row by row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SummandCertificate {
    /// The translate (`a`-value) behind each family member.
    pub rows: Vec<usize>,
    pub sdr: SdrCertificate,
}

impl SummandCertificate {
    /// `(row, partner, sum)` per family member: `sum = row + partner`.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.rows.iter().zip(&self.sdr.representatives).map(|(&row, &sum)| (row, sum - row, sum))
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

/// Takes `copies[k]` copies of `order[k] + aset` and finds an SDR.
pub fn certify_summands(aset: &IntegerSet, order: &[usize], copies: &[usize]) -> Result<SummandCertificate> {
    assert_eq!(order.len(), copies.len());
    let mut rows = Vec::new();
    let mut family = Vec::new();
    for (k, (&a, &n)) in order.iter().zip(copies).enumerate() {
        let translate = IntegerSet::from_members(aset.iter().map(|x| x + a));
        for c in 0..n {
            rows.push(a);
            family.push((format!("G[{},{}]", k + 1, c + 1), translate.clone()));
        }
    }
    match find_sdr_labeled(family) {
        SdrOutcome::Found(sdr) => Ok(SummandCertificate { rows, sdr }),
        SdrOutcome::HallViolator(v) => {
            Err(Error::TheoremViolation(format!("Hall's condition fails for summand family members {v:?}")))
        }
    }
}

/// Certificate that `A' + A'` has at least `2s + R - 3` elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lemma2Certificate {
    pub s: usize,
    pub r: usize,
    pub summands: SummandCertificate,
}

impl Lemma2Certificate {
    pub fn bound(&self) -> usize {
        2 * self.s + self.r - 3
    }
}

pub fn lemma2_certificate(aset: &IntegerSet) -> Result<Lemma2Certificate> {
    projection_preconditions(aset)?;
    let s = aset.len();
    let r = r_parameter(aset)?;
    let summands = certify_summands(aset, aset.members(), &lemma2_multiplicities(s, r))?;
    debug_assert_eq!(summands.len(), 2 * s + r - 3);
    Ok(Lemma2Certificate { s, r, summands })
}

/// The interval profile of `A' ⊆ [0, s+R-3]`.
///
/// `a` is the largest integer with exactly `a` elements of `[0, 2a-1]`
/// missing from `A'`; `b` the largest with exactly `b` elements of
/// `[s+R-2b-2, s+R-3]` missing, where that interval may not reach below
/// `2a`; `c` counts the missing elements of `[2a, s+R-2b-3]`. The three
/// intervals partition `[0, s+R-3]`, so `a + b + c = R - 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntervalProfile {
    pub s: usize,
    pub max_a: usize,
    pub r: usize,
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

pub fn abc_parameters(aset: &IntegerSet) -> Result<IntervalProfile> {
    if aset.is_empty() {
        return Err(Error::EmptySet("interval profile"));
    }
    let r = r_parameter(aset)?;
    let s = aset.len();
    let max_a = aset.max().unwrap();
    let top = s + r - 3;
    if max_a != top {
        return Err(Error::NotApplicable(format!("max a_i = {max_a} exceeds s + R - 3 = {top}")));
    }
    let missing = |lo: usize, hi: usize| (lo..=hi).filter(|&x| !aset.contains(x)).count();
    // [0, 2a-1] must fit inside [0, top].
    let a = (0..=top.div_ceil(2)).filter(|&a| a == 0 || missing(0, 2 * a - 1) == a).max().unwrap_or(0);
    // [top+1-2b, top] must start at or after 2a.
    let b = (0..=(top + 1).saturating_sub(2 * a) / 2)
        .filter(|&b| b == 0 || missing(top + 1 - 2 * b, top) == b)
        .max()
        .unwrap_or(0);
    let c = if 2 * a + 2 * b <= top { missing(2 * a, top - 2 * b) } else { 0 };
    Ok(IntervalProfile { s, max_a, r, a, b, c })
}

/// Checks `|A'+A'| ≥ 2s + R - 3 + c` and returns the bound.
pub fn prop5_bound(aset: &IntegerSet) -> Result<usize> {
    projection_preconditions(aset)?;
    let p = abc_parameters(aset)?;
    let bound = 2 * p.s + p.r - 3 + p.c;
    let size = sumset_int(aset, aset).len();
    if size < bound {
        return Err(Error::TheoremViolation(format!("|A'+A'| = {size} < {bound}")));
    }
    Ok(bound)
}
