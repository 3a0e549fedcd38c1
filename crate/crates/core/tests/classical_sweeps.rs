mod common;

use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sumset_forge_core::classical::{
    check_cauchy_davenport, check_lev_bound, kneser_decomposition, lemma1_all_differences,
    prop1_single_coset, prop2_single_coset,
};
use sumset_forge_core::group::subgroups;
use sumset_forge_core::sumset::sumset;
use sumset_forge_core::{CheckOutcome, ResidueSet, Witness};

fn nonempty_subsets(d: usize) -> Vec<ResidueSet> {
    (1u64..1 << d).map(|m| from_mask(d, m)).collect()
}

#[test]
fn cauchy_davenport_for_small_primes() {
    for p in [2, 3, 5, 7, 11] {
        let sets = nonempty_subsets(p);
        for a in &sets {
            for b in &sets {
                let c = check_cauchy_davenport(a, b).unwrap();
                assert!(c.applicable && c.holds, "p={p} {a:?} {b:?}");
            }
        }
    }
}

/// `|A+H|` computed by brute force.
fn saturated_len(a: &ResidueSet, order: usize) -> usize {
    let d = a.modulus();
    let step = d / order;
    (0..d).filter(|&x| a.iter().any(|y| (x + d - y).is_multiple_of(step))).count()
}

fn check_kneser_oracle(a: &ResidueSet, b: &ResidueSet) {
    let outcome = kneser_decomposition(a, b).unwrap();
    let ab = naive_sumset(a, b);
    assert_eq!(outcome.applicable, ab.len() < a.len() + b.len());
    if !outcome.applicable {
        return;
    }
    assert!(outcome.holds, "{a:?} {b:?}");
    let Some(Witness::Subgroup { order }) = outcome.witness else { panic!("no subgroup") };
    let d = a.modulus();
    let step = d / order;
    let periodic = ab.iter().all(|&x| ab.contains(&((x + step) % d)));
    assert!(periodic);
    assert_eq!(ab.len(), saturated_len(a, order) + saturated_len(b, order) - order);
}

#[test]
fn kneser_exhaustive_small_moduli() {
    for d in 1..=10 {
        let sets = nonempty_subsets(d);
        for a in &sets {
            for b in &sets {
                check_kneser_oracle(a, b);
            }
        }
    }
}

#[test]
fn kneser_random_medium_moduli() {
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    for _ in 0..100_000 {
        let d = rng.random_range(12..=24);
        let hs = subgroups(group(d));
        // Sets near a coset union are where the hypothesis bites.
        let pick = |rng: &mut ChaCha8Rng| loop {
            let s = random_residues(rng, d);
            if s.is_empty() {
                continue;
            }
            if rng.random_bool(0.5) {
                break s.saturate(&hs[rng.random_range(0..hs.len())]).unwrap();
            }
            break s;
        };
        let (a, b) = (pick(&mut rng), pick(&mut rng));
        check_kneser_oracle(&a, &b);
    }
}

#[test]
fn lemma1_exhaustive() {
    for n in 1..=12 {
        for mask in 0u64..1 << n {
            let a = int_from_mask(n, mask);
            let c = lemma1_all_differences(&a);
            assert_eq!(c.applicable, 3 * a.len() >= 2 * n + 3);
            if c.applicable {
                let m = a.members();
                for delta in 1..a.len() {
                    assert!(m.iter().any(|x| m.contains(&(x + delta))), "{a:?} misses {delta}");
                }
                assert!(c.holds);
            }
        }
    }
}

#[test]
fn lev_bound_exhaustive() {
    let mut applicable = 0;
    for max in 1..=10 {
        for s in 2..=max + 1 {
            for u in asets(s, max) {
                let m = u.members().to_vec();
                for vmask in 1u64..1 << m.len() {
                    let v = sumset_forge_core::IntegerSet::from_members(
                        (0..m.len()).filter(|i| vmask >> i & 1 == 1).map(|i| m[i]),
                    );
                    let c = check_lev_bound(&u, &v);
                    assert!(c.applicable);
                    applicable += 1;
                    let size = naive_sumset_int(&u, &v).len();
                    let t = v.len();
                    assert!(size >= (max + t).min(s + 2 * t - 3), "{u:?} {v:?}");
                    if u != v && max == s + t - 2 {
                        assert!(size >= max + t, "{u:?} {v:?}");
                    }
                    assert!(c.holds);
                }
            }
        }
    }
    assert!(applicable > 100_000);
}

fn reverify_coset_witness(c: &CheckOutcome, a: &ResidueSet, b: &ResidueSet, limit: (usize, usize)) {
    if !c.applicable {
        return;
    }
    assert!(c.holds, "{a:?} {b:?}");
    let Some(Witness::Coset { order, representative }) = c.witness else { panic!() };
    assert!(order * limit.1 < limit.0);
    let d = a.modulus();
    let step = d / order;
    assert!(naive_sumset(a, b).iter().all(|x| x % step == representative));
}

#[test]
fn single_coset_witnesses_reverify() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut seen = (0, 0);
    for _ in 0..50_000 {
        let d = rng.random_range(2..=36);
        let hs = subgroups(group(d));
        let h = &hs[rng.random_range(0..hs.len())];
        let dense = |rng: &mut ChaCha8Rng| {
            let x = rng.random_range(0..d);
            let keep = rng.random_range(0.5..=1.0);
            let c: Vec<usize> =
                sumset_forge_core::group::coset_of(h, x).iter().filter(|_| rng.random_bool(keep)).collect();
            if c.is_empty() {
                residues(d, [x])
            } else {
                residues(d, c)
            }
        };
        let (a, b) = (dense(&mut rng), dense(&mut rng));
        let (a, b) = if a.len() >= b.len() { (a, b) } else { (b, a) };
        let ab = sumset(&a, &b).unwrap().len();
        let p1 = prop1_single_coset(&a, &b).unwrap();
        reverify_coset_witness(&p1, &a, &b, (3 * a.len(), 2));
        let p2 = prop2_single_coset(&a, &b).unwrap();
        reverify_coset_witness(&p2, &a, &b, (2 * b.len(), 1));
        assert_eq!(p1.applicable, 2 * ab < 3 * a.len() && 4 * b.len() > 3 * a.len());
        seen.0 += p1.applicable as usize;
        seen.1 += p2.applicable as usize;
    }
    assert!(seen.0 > 1_000 && seen.1 > 100, "{seen:?}");
}
