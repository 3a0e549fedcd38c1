//! Verification campaigns over generated or enumerated instances.
//!
//! Instance `i` of a random campaign draws from its own ChaCha stream, so
//! the report does not depend on the worker count or completion order.

use std::collections::BTreeMap;
use std::io::Write;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sumset_forge_core::hall::{lemma2_certificate, prop5_bound};
use sumset_forge_core::layered::generator::{generate, GeneratorConfig};
use sumset_forge_core::sumset::sumset_int;
use sumset_forge_core::{CyclicGroup, Error, IntegerSet, Layer, LayeredSet, ResidueSet, ThresholdConfig};

use crate::instance::InstanceDocument;
use crate::span::Span;
use crate::verify::{verify, CheckRecord, Status};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Exhaustive,
    Random,
}

/// What an exhaustive campaign enumerates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Space {
    /// Projections `A'` only: the summand certificate and the gap bound.
    Projection,
    /// Full layered sets.
    Layered,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CampaignParams {
    pub mode: Mode,
    pub space: Space,
    pub d: Span,
    pub s: Span,
    pub max_a: Span,
    pub count: usize,
    pub seed: u64,
    /// Refuse exhaustive spaces larger than this.
    pub cap: u64,
    pub epsilon: f64,
    pub min_density: f64,
    pub anchors: bool,
}

impl Default for CampaignParams {
    fn default() -> Self {
        Self {
            mode: Mode::Random,
            space: Space::Layered,
            d: Span::new(2, 36),
            s: Span::new(6, 9),
            max_a: Span::new(1, 12),
            count: 1_000,
            seed: 1,
            cap: 2_000_000,
            epsilon: 0.1,
            min_density: 0.6,
            anchors: true,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CampaignError {
    #[error("space has {estimate} instances, above the cap of {cap}; narrow the ranges or raise --cap")]
    CapExceeded { estimate: u128, cap: u64 },
    #[error("invalid parameters: {0}")]
    Params(String),
    #[error("cannot start worker pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub applicable: u64,
    pub holds: u64,
    pub equality: u64,
    pub violated: u64,
}

impl Counts {
    pub fn add(&mut self, status: Status) {
        match status {
            Status::NotApplicable => return,
            Status::Holds => self.holds += 1,
            Status::Equality => self.equality += 1,
            Status::Violated => self.violated += 1,
        }
        self.applicable += 1;
    }

    pub fn merge(&mut self, other: &Counts) {
        self.applicable += other.applicable;
        self.holds += other.holds;
        self.equality += other.equality;
        self.violated += other.violated;
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Finding {
    pub id: String,
    pub check: String,
    pub status: Status,
    pub detail: Value,
    pub instance: Value,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CampaignReport {
    pub params: CampaignParams,
    pub instances: u64,
    pub counts: BTreeMap<String, Counts>,
    pub findings: Vec<Finding>,
    /// Wall-clock per phase; excluded from the report unless asked for.
    pub timings: Vec<(String, Duration)>,
}

impl CampaignReport {
    pub fn violations(&self) -> u64 {
        self.counts.values().map(|c| c.violated).sum()
    }

    pub fn header(&self) -> Value {
        let tau = ThresholdConfig::default();
        json!({
            "record": "header",
            "tool": "sumset-forge",
            "version": env!("CARGO_PKG_VERSION"),
            "params": self.params,
            "seed": self.params.seed,
            "tau": { "s4": tau.s4.to_string(), "s5": tau.s5.to_string(), "s6_and_up": tau.s6_and_up.to_string() },
        })
    }

    /// Header, one line per finding, totals; timings last when requested.
    pub fn write_jsonl<W: Write>(&self, mut w: W, with_timings: bool) -> std::io::Result<()> {
        writeln!(w, "{}", self.header())?;
        for f in &self.findings {
            let mut v = serde_json::to_value(f).expect("findings serialize");
            v.as_object_mut().expect("object").insert("record".into(), json!("finding"));
            writeln!(w, "{v}")?;
        }
        let totals = json!({ "record": "totals", "instances": self.instances, "counts": self.counts });
        writeln!(w, "{totals}")?;
        if with_timings {
            let phases: BTreeMap<&str, f64> =
                self.timings.iter().map(|(k, d)| (k.as_str(), d.as_secs_f64())).collect();
            writeln!(w, "{}", json!({ "record": "timings", "seconds": phases }))?;
        }
        Ok(())
    }

    pub fn to_jsonl(&self) -> String {
        let mut buf = Vec::new();
        self.write_jsonl(&mut buf, false).expect("writing to memory");
        String::from_utf8(buf).expect("utf-8")
    }
}

/// Result of checking one instance.
struct Evaluated {
    id: String,
    instance: Value,
    records: Vec<CheckRecord>,
}

pub fn worker_count() -> usize {
    std::env::var(crate::THREADS_ENV)
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&n| n > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

pub fn run_campaign(params: &CampaignParams) -> Result<CampaignReport, CampaignError> {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(worker_count()).build()?;
    let mut report = CampaignReport {
        params: params.clone(),
        instances: 0,
        counts: BTreeMap::new(),
        findings: Vec::new(),
        timings: Vec::new(),
    };
    let cfg = ThresholdConfig::default();
    let start = Instant::now();
    match (params.mode, params.space) {
        (Mode::Random, _) => {
            if params.s.lo < 2 || params.d.lo < 1 {
                return Err(CampaignError::Params("random mode needs s >= 2 and d >= 1".into()));
            }
            if params.anchors {
                for (name, l) in anchors() {
                    absorb(&mut report, evaluate_layered(format!("anchor/{name}"), &l, &cfg));
                }
            }
            let gen = GeneratorConfig {
                d: params.d.range(),
                s: params.s.range(),
                min_density: params.min_density,
                epsilon: params.epsilon,
            };
            let n = params.count as u64;
            run_indexed(&pool, &mut report, n, |i| {
                evaluate_layered(format!("random/{i}"), &random_instance(params.seed, i, &gen), &cfg)
            });
        }
        (Mode::Exhaustive, Space::Projection) => {
            let sets = projection_space(params);
            let n = check_cap(sets.len() as u128, params.cap)?;
            run_indexed(&pool, &mut report, n, |i| evaluate_projection(&sets[i as usize]));
        }
        (Mode::Exhaustive, Space::Layered) => {
            let space = LayeredSpace::new(params);
            let n = check_cap(space.len(), params.cap)?;
            run_indexed(&pool, &mut report, n, |i| {
                let l = space.get(i);
                evaluate_layered(format!("exhaustive/{i}"), &l, &cfg)
            });
        }
    }
    report.timings.push(("evaluate".into(), start.elapsed()));
    Ok(report)
}

/// Instance `index` of a random campaign with this seed.
pub fn random_instance(seed: u64, index: u64, gen: &GeneratorConfig) -> LayeredSet {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    generate(&mut rng, gen)
}

fn check_cap(estimate: u128, cap: u64) -> Result<u64, CampaignError> {
    if estimate > cap as u128 {
        return Err(CampaignError::CapExceeded { estimate, cap });
    }
    Ok(estimate as u64)
}

const CHUNK: u64 = 4096;

/// Evaluates indices `0..n` in parallel chunks and folds them in index order.
fn run_indexed<F>(pool: &rayon::ThreadPool, report: &mut CampaignReport, n: u64, eval: F)
where
    F: Fn(u64) -> Evaluated + Sync,
{
    let mut lo = 0;
    while lo < n {
        let hi = (lo + CHUNK).min(n);
        let batch: Vec<Evaluated> = pool.install(|| (lo..hi).into_par_iter().map(&eval).collect());
        for e in batch {
            absorb(report, e);
        }
        lo = hi;
    }
}

fn absorb(report: &mut CampaignReport, e: Evaluated) {
    report.instances += 1;
    for rec in e.records {
        report.counts.entry(rec.check.clone()).or_default().add(rec.status);
        if rec.status.is_finding() {
            report.findings.push(Finding {
                id: e.id.clone(),
                check: rec.check,
                status: rec.status,
                detail: rec.detail,
                instance: e.instance.clone(),
            });
        }
    }
}

fn evaluate_layered(id: String, l: &LayeredSet, cfg: &ThresholdConfig) -> Evaluated {
    let instance = serde_json::to_value(InstanceDocument::from_layered(l)).expect("instances serialize");
    Evaluated { id, instance, records: verify(l, cfg) }
}

/// The summand certificate and the gap bound on one projection.
fn evaluate_projection(a: &IntegerSet) -> Evaluated {
    let size = sumset_int(a, a).len();
    let lemma2 = match lemma2_certificate(a) {
        Ok(cert) if cert.summands.sdr.verify() && cert.bound() <= size => CheckRecord {
            check: "lemma2".into(),
            status: Status::Holds,
            detail: json!({ "r": cert.r, "bound": cert.bound(), "sumset_size": size }),
        },
        Ok(cert) => CheckRecord {
            check: "lemma2".into(),
            status: Status::Violated,
            detail: json!({ "r": cert.r, "bound": cert.bound(), "sumset_size": size }),
        },
        Err(e) => CheckRecord {
            check: "lemma2".into(),
            status: Status::Violated,
            detail: json!({ "error": e.to_string() }),
        },
    };
    let prop5 = match prop5_bound(a) {
        Ok(bound) => CheckRecord {
            check: "prop5".into(),
            status: Status::Holds,
            detail: json!({ "bound": bound, "sumset_size": size }),
        },
        Err(Error::NotApplicable(reason)) => CheckRecord {
            check: "prop5".into(),
            status: Status::NotApplicable,
            detail: json!({ "reason": reason }),
        },
        Err(e) => CheckRecord {
            check: "prop5".into(),
            status: Status::Violated,
            detail: json!({ "error": e.to_string() }),
        },
    };
    Evaluated {
        id: format!("projection/{:?}", a.members()),
        instance: json!({ "aset": a.members() }),
        records: vec![lemma2, prop5],
    }
}

/// Every `s`-element set with `0`, gcd 1 and maximum in `max_a`.
pub fn enumerate_asets(s: usize, max_a: Span) -> Vec<IntegerSet> {
    let mut out = Vec::new();
    if s < 2 {
        return out;
    }
    for max in max_a.lo.max(s - 1)..=max_a.hi {
        let inner = max - 1;
        let mut pick: Vec<usize> = (1..=s - 2).collect();
        // Lexicographic (s-2)-subsets of [1, max-1].
        loop {
            if pick.iter().all(|&x| x <= inner) {
                let members: Vec<usize> =
                    std::iter::once(0).chain(pick.iter().copied()).chain(std::iter::once(max)).collect();
                let a = IntegerSet::from_members(members);
                if a.nonzero_gcd() == 1 {
                    out.push(a);
                }
            }
            let k = pick.len();
            let Some(i) = (0..k).rev().find(|&i| pick[i] < inner - (k - 1 - i)) else { break };
            pick[i] += 1;
            for j in i + 1..k {
                pick[j] = pick[j - 1] + 1;
            }
        }
    }
    out
}

fn projection_space(params: &CampaignParams) -> Vec<IntegerSet> {
    params.s.range().flat_map(|s| enumerate_asets(s, params.max_a)).collect()
}

/// Every layered set with `d`, `s`, `max a_i` in range, indexed in mixed
/// radix: first coordinates, then `B_1 ∋ 0`, then the other layers.
struct LayeredSpace {
    blocks: Vec<(CyclicGroup, IntegerSet, u128)>,
}

impl LayeredSpace {
    fn new(params: &CampaignParams) -> Self {
        let mut blocks = Vec::new();
        for d in params.d.range().filter(|&d| d >= 1) {
            let group = CyclicGroup::new(d).expect("positive");
            for s in params.s.range() {
                for a in enumerate_asets(s, params.max_a) {
                    let size = Self::block_size(d, s);
                    blocks.push((group, a, size));
                }
            }
        }
        Self { blocks }
    }

    fn block_size(d: usize, s: usize) -> u128 {
        let first = 1u128.checked_shl(d as u32 - 1).unwrap_or(u128::MAX);
        let other = (1u128.checked_shl(d as u32).unwrap_or(u128::MAX)).saturating_sub(1);
        (0..s - 1).fold(first, |acc, _| acc.saturating_mul(other))
    }

    fn len(&self) -> u128 {
        self.blocks.iter().fold(0u128, |acc, b| acc.saturating_add(b.2))
    }

    fn get(&self, mut i: u64) -> LayeredSet {
        for (group, aset, size) in &self.blocks {
            if (i as u128) >= *size {
                i -= *size as u64;
                continue;
            }
            let d = group.modulus();
            let mut code = i as u128;
            let first_radix = 1u128 << (d - 1);
            let other_radix = (1u128 << d) - 1;
            let mut layers = Vec::with_capacity(aset.len());
            for (k, a) in aset.iter().enumerate() {
                let mask = if k == 0 {
                    let m = code % first_radix;
                    code /= first_radix;
                    (m << 1) | 1
                } else {
                    let m = code % other_radix;
                    code /= other_radix;
                    m + 1
                };
                let set = ResidueSet::from_residues(*group, (0..d).filter(|x| mask >> x & 1 == 1))
                    .expect("residues below d");
                layers.push(Layer::new(a, set));
            }
            return LayeredSet::new(*group, layers).expect("enumerated sets are valid");
        }
        panic!("index past the end of the space")
    }
}

/// Fixed instances prepended to random campaigns.
pub fn anchors() -> Vec<(&'static str, LayeredSet)> {
    let coset = |a: usize| vec![a % 12, (a + 4) % 12, (a + 8) % 12];
    let mut full: Vec<(usize, Vec<usize>)> = (0..6).map(|a| (a, coset(a))).collect();
    let mut out = vec![("full-coset-d12", LayeredSet::from_parts(12, &full).expect("valid"))];
    full[5].1 = vec![5];
    out.push(("thinned-top-d12", LayeredSet::from_parts(12, &full).expect("valid")));
    full[5].1 = coset(5);
    full[0].1 = vec![0, 4, 8, 1, 5, 9];
    out.push(("two-cosets-first-d12", LayeredSet::from_parts(12, &full).expect("valid")));
    let whole: Vec<(usize, Vec<usize>)> = (0..6).map(|a| (a, (0..12).collect())).collect();
    out.push(("whole-group-d12", LayeredSet::from_parts(12, &whole).expect("valid")));
    let singles: Vec<(usize, Vec<usize>)> =
        [0, 1, 3, 7, 2, 5].iter().enumerate().map(|(a, &b)| (a, vec![b])).collect();
    out.push(("singletons-d12", LayeredSet::from_parts(12, &singles).expect("valid")));
    out
}
