//! Executable forms of the classical sumset theorems and the coset
//! confinement propositions built on Kneser's theorem.
//!
//! Each check reports whether its hypothesis held (`applicable`) separately
//! from whether its conclusion held (`holds`). A conclusion is only ever
//! counted against a check when the hypothesis held.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{containing_coset, subgroups, ResidueSet};
use crate::sumset::{is_arithmetic_progression, stabilizer, sumset, sumset_int, IntegerSet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub applicable: bool,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

/// Evidence attached to a check outcome.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    Subgroup {
        order: usize,
    },
    Coset {
        order: usize,
        representative: usize,
    },
    Progression {
        start: usize,
        difference: usize,
        length: usize,
    },
    MissingDifference(usize),
    /// A measured quantity against the bound it was compared with.
    Bound {
        value: i64,
        bound: i64,
    },
    Note(String),
}

impl CheckOutcome {
    pub fn not_applicable(name: &'static str) -> Self {
        Self { name, applicable: false, holds: false, witness: None }
    }

    pub fn not_applicable_because(name: &'static str, why: impl Into<String>) -> Self {
        Self { witness: Some(Witness::Note(why.into())), ..Self::not_applicable(name) }
    }

    pub fn evaluated(name: &'static str, holds: bool, witness: Option<Witness>) -> Self {
        Self { name, applicable: true, holds, witness }
    }

    /// True when the hypothesis held and the conclusion failed.
    pub fn is_violation(&self) -> bool {
        self.applicable && !self.holds
    }
}

fn bound(value: usize, bound: usize) -> Option<Witness> {
    Some(Witness::Bound { value: value as i64, bound: bound as i64 })
}

fn nonempty_pair(a: &ResidueSet, b: &ResidueSet) -> Result<()> {
    a.group().check_same(b.group())?;
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptySet("sumset bound"));
    }
    Ok(())
}

pub(crate) fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|k| k * k <= n).all(|k| !n.is_multiple_of(k))
}

/// `|A+B| ≥ min(p, |A|+|B|-1)` in `Z/pZ`; not applicable for composite moduli.
pub fn check_cauchy_davenport(a: &ResidueSet, b: &ResidueSet) -> Result<CheckOutcome> {
    const NAME: &str = "cauchy_davenport";
    nonempty_pair(a, b)?;
    let p = a.modulus();
    if !is_prime(p) {
        return Ok(CheckOutcome::not_applicable_because(NAME, format!("modulus {p} is not prime")));
    }
    let size = sumset(a, b)?.len();
    let rhs = p.min(a.len() + b.len() - 1);
    Ok(CheckOutcome::evaluated(NAME, size >= rhs, bound(size, rhs)))
}

/// `|A+A| ≤ 2|A|-1` forces `A` to be an arithmetic progression.
pub fn check_ap_criterion(a: &IntegerSet) -> CheckOutcome {
    const NAME: &str = "ap_criterion";
    if a.is_empty() {
        return CheckOutcome::not_applicable(NAME);
    }
    let size = sumset_int(a, a).len();
    if size > 2 * a.len() - 1 {
        return CheckOutcome::not_applicable(NAME);
    }
    match is_arithmetic_progression(a) {
        Some((start, difference)) => CheckOutcome::evaluated(
            NAME,
            true,
            Some(Witness::Progression { start, difference, length: a.len() }),
        ),
        None => CheckOutcome::evaluated(NAME, false, bound(size, 2 * a.len() - 1)),
    }
}

/// The shortest arithmetic progression containing `a`: `(start, difference, length)`.
pub fn covering_progression(a: &IntegerSet) -> Option<(usize, usize, usize)> {
    let lo = a.min()?;
    let span = a.max()? - lo;
    if span == 0 {
        return Some((lo, 0, 1));
    }
    let g = a.iter().fold(0, |g, x| num_integer::gcd(g, x - lo));
    // Every divisor of the gap gcd yields a covering progression.
    crate::group::divisors(g)
        .into_iter()
        .map(|step| (lo, step, span / step + 1))
        .min_by_key(|&(_, _, len)| len)
}

/// Freiman's `3k-4`: `|A+A| = 2k-1+b ≤ 3k-4` puts `A` inside a progression of
/// length `k+b`.
pub fn check_freiman_3k4(a: &IntegerSet) -> Result<CheckOutcome> {
    const NAME: &str = "freiman_3k4";
    let k = a.len();
    if k <= 2 {
        return Err(Error::Precondition(format!("Freiman 3k-4 needs |A| > 2, got {k}")));
    }
    let size = sumset_int(a, a).len();
    if size + 1 < 2 * k || size > 3 * k - 4 {
        return Ok(CheckOutcome::not_applicable(NAME));
    }
    let b = size + 1 - 2 * k;
    let (start, difference, length) = covering_progression(a).expect("nonempty");
    Ok(CheckOutcome::evaluated(
        NAME,
        length <= k + b,
        Some(Witness::Progression { start, difference, length }),
    ))
}

/// Kneser: `|A+B| < |A|+|B|` implies `|A+B| = |A+H| + |B+H| - |H|` for `H`
/// the stabilizer of `A+B`.
pub fn kneser_decomposition(a: &ResidueSet, b: &ResidueSet) -> Result<CheckOutcome> {
    const NAME: &str = "kneser";
    nonempty_pair(a, b)?;
    let ab = sumset(a, b)?;
    if ab.len() >= a.len() + b.len() {
        return Ok(CheckOutcome::not_applicable(NAME));
    }
    let h = stabilizer(&ab)?;
    let rhs = a.saturate(&h)?.len() + b.saturate(&h)?.len() - h.order();
    Ok(CheckOutcome::evaluated(NAME, ab.len() == rhs, Some(Witness::Subgroup { order: h.order() })))
}

/// Least subgroup of order strictly below `limit_num / limit_den` whose coset
/// contains `s`.
fn least_confining(s: &ResidueSet, limit_num: usize, limit_den: usize) -> Result<Option<Witness>> {
    for h in subgroups(s.group()) {
        if h.order() * limit_den >= limit_num {
            break;
        }
        if let Some(representative) = containing_coset(s, &h)? {
            return Ok(Some(Witness::Coset { order: h.order(), representative }));
        }
    }
    Ok(None)
}

/// For `|A| ≥ |B|`, `|A+B| < 3/2|A|` and `|B| > 3/4|A|`: `A+B` lies in one
/// coset of a subgroup of order `< 3/2|A|`.
pub fn prop1_single_coset(a: &ResidueSet, b: &ResidueSet) -> Result<CheckOutcome> {
    const NAME: &str = "prop1_single_coset";
    nonempty_pair(a, b)?;
    if a.len() < b.len() {
        return Err(Error::Precondition("single-coset check needs |A| >= |B|".into()));
    }
    let ab = sumset(a, b)?;
    if !(2 * ab.len() < 3 * a.len() && 4 * b.len() > 3 * a.len()) {
        return Ok(CheckOutcome::not_applicable(NAME));
    }
    let witness = least_confining(&ab, 3 * a.len(), 2)?;
    Ok(CheckOutcome::evaluated(NAME, witness.is_some(), witness))
}

/// For `|A+B| < 2|B|` and `|B| < 3/4|A|`: `A+B` lies in one coset of a
/// subgroup of order `< 2|B|`.
pub fn prop2_single_coset(a: &ResidueSet, b: &ResidueSet) -> Result<CheckOutcome> {
    const NAME: &str = "prop2_single_coset";
    nonempty_pair(a, b)?;
    let ab = sumset(a, b)?;
    if !(ab.len() < 2 * b.len() && 4 * b.len() < 3 * a.len()) {
        return Ok(CheckOutcome::not_applicable(NAME));
    }
    let witness = least_confining(&ab, 2 * b.len(), 1)?;
    Ok(CheckOutcome::evaluated(NAME, witness.is_some(), witness))
}

/// `A ⊆ [0, N-1]` with `|A| ≥ 2N/3 + 1` realises every difference below `|A|`.
pub fn lemma1_all_differences(a: &IntegerSet) -> CheckOutcome {
    const NAME: &str = "lemma1_all_differences";
    let n = a.bound();
    if 3 * a.len() < 2 * n + 3 {
        return CheckOutcome::not_applicable(NAME);
    }
    let mut seen = vec![false; n];
    let m = a.members();
    for (i, &hi) in m.iter().enumerate() {
        for &lo in &m[..i] {
            seen[hi - lo] = true;
        }
    }
    match (1..a.len()).find(|&delta| !seen[delta]) {
        Some(delta) => CheckOutcome::evaluated(NAME, false, Some(Witness::MissingDifference(delta))),
        None => CheckOutcome::evaluated(NAME, true, None),
    }
}

/// `|U+V| ≥ min(u_s + t, s + 2t - 3)` for `V ⊆ U`, `min U = 0`, gcd 1; and
/// `|U+V| ≥ u_s + t` when `U ≠ V` and `u_s = s + t - 2`.
pub fn check_lev_bound(u: &IntegerSet, v: &IntegerSet) -> CheckOutcome {
    const NAME: &str = "lev_bound";
    if v.is_empty() || u.min() != Some(0) || !v.is_subset(u) {
        return CheckOutcome::not_applicable_because(NAME, "needs nonempty V ⊆ U with min U = 0");
    }
    if u.nonzero_gcd() != 1 {
        return CheckOutcome::not_applicable_because(NAME, "gcd of U is not 1");
    }
    let s = u.len() as i64;
    let t = v.len() as i64;
    let top = u.max().unwrap() as i64;
    let size = sumset_int(u, v).len() as i64;
    let mut rhs = (top + t).min(s + 2 * t - 3);
    if u != v && top == s + t - 2 {
        rhs = rhs.max(top + t);
    }
    CheckOutcome::evaluated(NAME, size >= rhs, Some(Witness::Bound { value: size, bound: rhs }))
}
