//! Wall-clock comparison of the sumset kernels on random residue sets.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use sumset_forge_core::sumset::sumset_with;
use sumset_forge_core::{CyclicGroup, ResidueSet, SumsetStrategy};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Kernel {
    ShiftOr,
    Naive,
    All,
}

impl Kernel {
    fn strategies(self) -> &'static [SumsetStrategy] {
        match self {
            Kernel::ShiftOr => &[SumsetStrategy::ShiftOr],
            Kernel::Naive => &[SumsetStrategy::Naive],
            Kernel::All => &[SumsetStrategy::ShiftOr, SumsetStrategy::Naive],
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BenchRow {
    pub d: usize,
    pub density: f64,
    pub kernel: String,
    pub median_ns: u128,
    pub sumset_size: usize,
}

#[derive(Debug, thiserror::Error)]
pub enum BenchError {
    #[error("kernels disagree at d={d}, density={density}")]
    Mismatch { d: usize, density: f64 },
    #[error("density {0} is outside [0, 1]")]
    Density(f64),
    #[error("modulus must be positive")]
    Modulus,
}

pub fn random_set<R: Rng>(rng: &mut R, group: CyclicGroup, density: f64) -> ResidueSet {
    let d = group.modulus();
    ResidueSet::from_residues(group, (0..d).filter(|_| rng.random_bool(density))).expect("residues below d")
}

/// Median of `reps` timings of `a + a`.
pub fn time_kernel(a: &ResidueSet, strategy: SumsetStrategy, reps: usize) -> (Duration, ResidueSet) {
    let mut out = None;
    let mut times: Vec<Duration> = (0..reps.max(1))
        .map(|_| {
            let start = Instant::now();
            let s = sumset_with(a, a, strategy).expect("same group");
            let t = start.elapsed();
            out = Some(s);
            t
        })
        .collect();
    times.sort_unstable();
    (times[times.len() / 2], out.expect("at least one rep"))
}

/// Times each kernel on one random set per `(d, density)`, after checking
/// that all requested kernels agree on it.
pub fn run_bench(
    kernel: Kernel,
    moduli: &[usize],
    densities: &[f64],
    reps: usize,
    seed: u64,
) -> Result<Vec<BenchRow>, BenchError> {
    let mut rows = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for &d in moduli {
        let group = CyclicGroup::new(d).map_err(|_| BenchError::Modulus)?;
        for &density in densities {
            if !(0.0..=1.0).contains(&density) {
                return Err(BenchError::Density(density));
            }
            let a = random_set(&mut rng, group, density);
            let reference = sumset_with(&a, &a, SumsetStrategy::ShiftOr).expect("same group");
            for &strategy in kernel.strategies() {
                let (t, s) = time_kernel(&a, strategy, reps);
                if s != reference {
                    return Err(BenchError::Mismatch { d, density });
                }
                rows.push(BenchRow {
                    d,
                    density,
                    kernel: kernel_name(strategy).into(),
                    median_ns: t.as_nanos(),
                    sumset_size: s.len(),
                });
            }
        }
    }
    Ok(rows)
}

pub fn kernel_name(strategy: SumsetStrategy) -> &'static str {
    match strategy {
        SumsetStrategy::ShiftOr => "shift-or",
        SumsetStrategy::Naive => "naive",
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rows_cover_grid() {
        let rows = run_bench(Kernel::All, &[17, 200], &[0.1, 0.9], 3, 5).unwrap();
        assert_eq!(rows.len(), 8);
        assert!(rows.iter().all(|r| r.sumset_size <= r.d));
    }

    #[test]
    fn bad_density_is_rejected() {
        assert!(matches!(run_bench(Kernel::Naive, &[8], &[1.5], 1, 0), Err(BenchError::Density(_))));
    }
}
