mod common;

use std::collections::BTreeSet;

use common::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sumset_forge_core::rectify::{
    closure_step, find_seed_pair, good_closure, parallelogram_holds, solve_affine, solve_affine_brute,
    solve_affine_seeded, SeedSearch,
};
use sumset_forge_core::{AffineAssignment, IntegerSet};

const SPAN: usize = 31;

/// One step of `b + c - a` generation by triple loop.
fn naive_step(g: &BTreeSet<usize>, ambient: &BTreeSet<usize>) -> BTreeSet<usize> {
    let mut out = g.clone();
    for &a in g {
        for &b in g {
            for &c in g {
                if let Some(t) = (b + c).checked_sub(a) {
                    if ambient.contains(&t) {
                        out.insert(t);
                    }
                }
            }
        }
    }
    out
}

fn naive_closure(g: &BTreeSet<usize>, ambient: &BTreeSet<usize>) -> BTreeSet<usize> {
    let mut cur = g.clone();
    loop {
        let next = naive_step(&cur, ambient);
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

fn within(xs: &BTreeSet<usize>) -> IntegerSet {
    IntegerSet::new(SPAN, xs.iter().copied().collect()).unwrap()
}

fn random_pair(rng: &mut ChaCha8Rng) -> (BTreeSet<usize>, BTreeSet<usize>) {
    let p = rng.random_range(0.1..=1.0);
    let ambient: BTreeSet<usize> = (0..SPAN).filter(|_| rng.random_bool(p)).collect();
    let q = rng.random_range(0.0..=0.5);
    let g = ambient.iter().copied().filter(|_| rng.random_bool(q)).collect();
    (g, ambient)
}

#[test]
fn closure_is_extensive_idempotent_monotone_and_matches_triple_loop() {
    let mut rng = ChaCha8Rng::seed_from_u64(30);
    for _ in 0..10_000 {
        let (g, ambient) = random_pair(&mut rng);
        let amb = within(&ambient);
        let step = closure_step(&within(&g), &amb).unwrap();
        assert!(step.iter().eq(naive_step(&g, &ambient)));
        let closed = good_closure(&within(&g), &amb).unwrap().current;
        assert!(closed.iter().eq(naive_closure(&g, &ambient)));
        assert!(within(&g).is_subset(&closed));
        assert_eq!(good_closure(&closed, &amb).unwrap().current, closed);
        let bigger: BTreeSet<usize> =
            g.iter().copied().chain(ambient.iter().copied().filter(|_| rng.random_bool(0.2))).collect();
        assert!(closed.is_subset(&good_closure(&within(&bigger), &amb).unwrap().current));
    }
}

#[test]
fn dense_sets_have_a_seed_pair() {
    for s in 4..=15 {
        for mask in 0u64..1 << s {
            let a = int_from_mask(s, mask);
            if 3 * a.len() < 2 * s + 3 {
                continue;
            }
            match find_seed_pair(&a) {
                SeedSearch::Found { low, high } => {
                    assert_eq!(high, low + 1);
                    let seed: BTreeSet<usize> = [low, high].into();
                    let ambient: BTreeSet<usize> = a.iter().collect();
                    assert_eq!(naive_closure(&seed, &ambient), ambient);
                }
                other => panic!("{a:?}: {other:?}"),
            }
        }
    }
}

/// Small-doubling a-sets: `s ∈ 6..=8`, `max ≤ 9`, `|A+A| < 5s/2`.
fn small_doubling_asets() -> Vec<IntegerSet> {
    (6..=8)
        .flat_map(|s| asets_up_to(s, 9))
        .filter(|a| 2 * naive_sumset_int(a, a).len() < 5 * a.len())
        .collect()
}

#[test]
fn every_consistent_assignment_over_tiny_quotients_is_affine() {
    let space = small_doubling_asets();
    assert!(!space.is_empty());
    for a in &space {
        let m = a.members();
        for q in [2usize, 3] {
            let total = q.pow(m.len() as u32);
            for code in 0..total {
                let values: Vec<usize> = (0..m.len()).map(|i| code / q.pow(i as u32) % q).collect();
                if !parallelogram_consistent(m, q, &values) {
                    continue;
                }
                let assign = AffineAssignment::new(a.clone(), values, q).unwrap();
                assert!(parallelogram_holds(&assign).is_ok());
                let (x, y) = solve_affine(&assign).unwrap_or_else(|| panic!("{a:?} {assign:?}"));
                assert!(assign.is_solved_by(x, y));
            }
        }
    }
}

#[test]
fn random_consistent_assignments_are_solved() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for a in small_doubling_asets() {
        for _ in 0..100 {
            let q = rng.random_range(2..=12);
            let values = random_parallelogram_values(&mut rng, a.members(), q);
            let assign = AffineAssignment::new(a.clone(), values, q).unwrap();
            let (x, y) = solve_affine(&assign).unwrap();
            assert!(assign.is_solved_by(x, y));
        }
    }
}

#[test]
fn seeded_and_brute_force_paths_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut both_ran = 0;
    for _ in 0..5_000 {
        let s = rng.random_range(4..=10);
        let a = IntegerSet::from_members(
            std::iter::once(0).chain((1..rng.random_range(s..=2 * s)).filter(|_| rng.random_bool(0.7))),
        );
        let q = rng.random_range(1..=9);
        let values = if rng.random_bool(0.5) {
            random_parallelogram_values(&mut rng, a.members(), q)
        } else {
            (0..a.len()).map(|_| rng.random_range(0..q)).collect()
        };
        let assign = AffineAssignment::new(a, values, q).unwrap();
        let brute = solve_affine_brute(&assign);
        if let Some(seeded) = solve_affine_seeded(&assign) {
            both_ran += 1;
            assert_eq!(seeded.is_some(), brute.is_some(), "{assign:?}");
            if let Some((x, y)) = seeded {
                assert!(assign.is_solved_by(x, y));
            }
        }
        if let Some((x, y)) = solve_affine(&assign) {
            assert!(assign.is_solved_by(x, y));
        }
    }
    assert!(both_ran > 1_000);
}

proptest! {
    #[test]
    fn affine_assignments_round_trip(
        members in prop::collection::btree_set(1usize..40, 1..12),
        q in 1usize..20,
        x in 0usize..20,
        y in 0usize..20,
    ) {
        let a = IntegerSet::from_members(std::iter::once(0).chain(members));
        let assign = AffineAssignment::affine(a, x, y, q).unwrap();
        prop_assert!(parallelogram_holds(&assign).is_ok());
        let (sx, sy) = solve_affine(&assign).unwrap();
        prop_assert!(assign.is_solved_by(sx, sy));
    }
}
