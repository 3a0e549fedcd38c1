//! Layered sets `B̃ = ∪ {a_i} × B_i ⊂ Z × Z/dZ` and the structure they are
//! forced into when `|B̃ + B̃| < τ(s)·|B̃|`.
//!
//! First coordinates add as integers and second coordinates as residues, so
//! `B̃ + B̃` is a union of fibers `k × ∪_{a_i + a_j = k} (B_i + B_j)`.
//! Layer indices are 0-based throughout.

pub mod generator;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::classical::{CheckOutcome, Witness};
use crate::error::{Error, LayerInvariant, Result};
use crate::group::{containing_coset, CyclicGroup, ResidueSet, Subgroup};
use crate::hall::{certify_summands, lemma2_multiplicities, r_parameter};
use crate::rectify::{solve_affine, AffineAssignment};
use crate::sumset::{less_than_ratio, sumset, sumset_int, IntegerSet};
use crate::Ratio;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Layer {
    pub a: usize,
    pub set: ResidueSet,
}

impl Layer {
    pub fn new(a: usize, set: ResidueSet) -> Self {
        Self { a, set }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayeredSet {
    group: CyclicGroup,
    layers: Vec<Layer>,
    aset: IntegerSet,
}

fn invalid(inv: LayerInvariant) -> Error {
    Error::InvalidLayers(inv)
}

impl LayeredSet {
    pub fn new(group: CyclicGroup, layers: Vec<Layer>) -> Result<Self> {
        if layers.len() < 2 {
            return Err(invalid(LayerInvariant::TooFewLayers(layers.len())));
        }
        if let Some(index) = layers.iter().position(|l| l.set.group() != group) {
            return Err(invalid(LayerInvariant::ModulusMismatch { index }));
        }
        if layers[0].a != 0 {
            return Err(invalid(LayerInvariant::FirstCoordinateNotZero(layers[0].a)));
        }
        if let Some(index) = (1..layers.len()).find(|&i| layers[i].a <= layers[i - 1].a) {
            return Err(invalid(LayerInvariant::NotIncreasing { index }));
        }
        if let Some(index) = layers.iter().position(|l| l.set.is_empty()) {
            return Err(invalid(LayerInvariant::EmptyLayer { index }));
        }
        if !layers[0].set.contains(0) {
            return Err(invalid(LayerInvariant::ZeroNotInFirstLayer));
        }
        let aset = IntegerSet::from_members(layers.iter().map(|l| l.a));
        let g = aset.nonzero_gcd();
        if g != 1 {
            return Err(invalid(LayerInvariant::Gcd(g)));
        }
        Ok(Self { group, layers, aset })
    }

    /// Builds from `(a_i, B_i)` pairs of plain residues.
    pub fn from_parts(d: usize, parts: &[(usize, Vec<usize>)]) -> Result<Self> {
        let group = CyclicGroup::new(d)?;
        let layers = parts
            .iter()
            .map(|(a, set)| Ok(Layer::new(*a, ResidueSet::from_residues(group, set.iter().copied())?)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(group, layers)
    }

    pub fn group(&self) -> CyclicGroup {
        self.group
    }

    pub fn modulus(&self) -> usize {
        self.group.modulus()
    }

    pub fn s(&self) -> usize {
        self.layers.len()
    }

    pub fn layers(&self) -> &[Layer] {
        &self.layers
    }

    /// The projection `A' = {a_i}`.
    pub fn aset(&self) -> &IntegerSet {
        &self.aset
    }

    pub fn max_a(&self) -> usize {
        self.layers.last().expect("at least two layers").a
    }

    /// `|B̃| = Σ |B_i|`.
    pub fn size(&self) -> usize {
        self.layers.iter().map(|l| l.set.len()).sum()
    }

    pub fn max_layer_size(&self) -> usize {
        self.layers.iter().map(|l| l.set.len()).max().unwrap_or(0)
    }

    /// Layer indices by descending `|B_i|`, ties in layer order.
    pub fn size_order(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.s()).collect();
        idx.sort_by_key(|&i| std::cmp::Reverse(self.layers[i].set.len()));
        idx
    }

    fn index_of(&self, a: usize) -> usize {
        self.layers.binary_search_by_key(&a, |l| l.a).expect("a-value of a layer")
    }
}

/// `B̃ + B̃` as fibers over first coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayeredSumset {
    pub entries: BTreeMap<usize, ResidueSet>,
}

impl LayeredSumset {
    pub fn size(&self) -> usize {
        self.entries.values().map(ResidueSet::len).sum()
    }

    pub fn get(&self, k: usize) -> Option<&ResidueSet> {
        self.entries.get(&k)
    }
}

/// Sumset of an arbitrary layer list; first coordinates need not be
/// distinct or sorted.
pub fn flatten_layers(group: CyclicGroup, layers: &[Layer]) -> Result<LayeredSumset> {
    let mut entries: BTreeMap<usize, ResidueSet> = BTreeMap::new();
    for (i, li) in layers.iter().enumerate() {
        for lj in &layers[i..] {
            let part = sumset(&li.set, &lj.set)?;
            group.check_same(part.group())?;
            let k = li.a + lj.a;
            let merged = match entries.remove(&k) {
                Some(prev) => prev.union(&part)?,
                None => part,
            };
            entries.insert(k, merged);
        }
    }
    Ok(LayeredSumset { entries })
}

pub fn flatten_sumset(l: &LayeredSet) -> LayeredSumset {
    flatten_layers(l.group, &l.layers).expect("layers share the group")
}

/// `τ(s)`: the doubling threshold below which the structure conclusions are
/// claimed. Undefined for small `s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ThresholdConfig {
    pub s4: Ratio,
    pub s5: Ratio,
    pub s6_and_up: Ratio,
}

impl Default for ThresholdConfig {
    fn default() -> Self {
        Self { s4: Ratio::new(9, 4), s5: Ratio::new(12, 5), s6_and_up: Ratio::new(5, 2) }
    }
}

impl ThresholdConfig {
    pub fn tau(&self, s: usize) -> Option<Ratio> {
        match s {
            0..=3 => None,
            4 => Some(self.s4),
            5 => Some(self.s5),
            _ => Some(self.s6_and_up),
        }
    }

    /// `Ok(|B̃+B̃|)` when `|B̃+B̃| < τ(s)·|B̃|`, else the reason it is not.
    pub fn hypothesis(&self, l: &LayeredSet) -> std::result::Result<usize, String> {
        let s = l.s();
        let tau = self.tau(s).ok_or_else(|| format!("no threshold configured for s = {s}"))?;
        let double = flatten_sumset(l).size();
        if less_than_ratio(double, l.size(), tau) {
            Ok(double)
        } else {
            Err(format!("|B+B| = {double} is not below {tau}·{}", l.size()))
        }
    }
}

/// Multiplicities of the summand family used for the fiber lower bound.
/// Intervals (`R = 2`) and intervals with one gap (`R = 3`) put all extra
/// weight on the largest layer.
fn fiber_family(s: usize, r: usize) -> Vec<usize> {
    match r {
        2 => (0..s).map(|i| if i == 0 { s } else { 1 }).collect(),
        3 => (0..s)
            .map(|i| {
                if i == 0 {
                    s
                } else if i == 1 {
                    2
                } else {
                    1
                }
            })
            .collect(),
        _ => lemma2_multiplicities(s, r),
    }
}

/// `Σ |B_i + B_j|` over the summands of an SDR certificate, with rows taken
/// in descending `|B_i|` order. Each summand lives in its own fiber, so the
/// sum is at most `|B̃ + B̃|`.
pub fn prop6_lower_bound(l: &LayeredSet) -> Result<usize> {
    let r = r_parameter(&l.aset)?;
    let order: Vec<usize> = l.size_order().into_iter().map(|i| l.layers[i].a).collect();
    let cert = certify_summands(&l.aset, &order, &fiber_family(l.s(), r))?;
    let mut bound = 0;
    for (row, partner, _) in cert.pairs() {
        let bi = &l.layers[l.index_of(row)].set;
        let bj = &l.layers[l.index_of(partner)].set;
        bound += sumset(bi, bj)?.len();
    }
    let size = flatten_sumset(l).size();
    if bound > size {
        return Err(Error::TheoremViolation(format!("fiber bound {bound} exceeds |B+B| = {size}")));
    }
    Ok(bound)
}

/// `|B̃+B̃| - |B̃| ≥ (s-2)|B_1| + |B_2| + … + |B_R|` with layers taken in
/// descending size order.
pub fn corollary1_check(l: &LayeredSet) -> Result<CheckOutcome> {
    let r = r_parameter(&l.aset)?;
    let sizes: Vec<usize> = l.size_order().into_iter().map(|i| l.layers[i].set.len()).collect();
    let rhs = (l.s() - 2) * sizes[0] + sizes[1..r].iter().sum::<usize>();
    let lhs = flatten_sumset(l).size() - l.size();
    Ok(CheckOutcome::evaluated("corollary1", lhs >= rhs, bound(lhs, rhs)))
}

fn bound(value: usize, bound: usize) -> Option<Witness> {
    Some(Witness::Bound { value: value as i64, bound: bound as i64 })
}

pub fn check_prop7(l: &LayeredSet) -> CheckOutcome {
    check_prop7_with(l, &ThresholdConfig::default())
}

/// Under the doubling hypothesis, `max a_i < 3s/2`.
pub fn check_prop7_with(l: &LayeredSet, cfg: &ThresholdConfig) -> CheckOutcome {
    match cfg.hypothesis(l) {
        Err(why) => CheckOutcome::not_applicable_because("prop7", why),
        Ok(_) => CheckOutcome::evaluated("prop7", 2 * l.max_a() < 3 * l.s(), bound(2 * l.max_a(), 3 * l.s())),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Ineq7Status {
    Strict,
    Equality,
    Violated,
}

/// `(max a_i)·|H| ` against `|B̃+B̃| - |B̃|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Ineq7Comparison {
    pub lhs: usize,
    pub rhs: usize,
    pub status: Ineq7Status,
}

pub fn check_ineq7(l: &LayeredSet, h: &Subgroup) -> Ineq7Comparison {
    ineq7_from(l, h, flatten_sumset(l).size())
}

fn ineq7_from(l: &LayeredSet, h: &Subgroup, double: usize) -> Ineq7Comparison {
    let lhs = l.max_a() * h.order();
    let rhs = double - l.size();
    let status = match lhs.cmp(&rhs) {
        std::cmp::Ordering::Less => Ineq7Status::Strict,
        std::cmp::Ordering::Equal => Ineq7Status::Equality,
        std::cmp::Ordering::Greater => Ineq7Status::Violated,
    };
    Ineq7Comparison { lhs, rhs, status }
}

/// Layers split by `|B_i|` against `|H|`: `U` at least `2/3`, `V` in
/// `[1/3, 2/3)`, `W` below `1/3`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SizePartition {
    pub u_layers: Vec<usize>,
    pub v_layers: Vec<usize>,
    pub w_layers: Vec<usize>,
}

impl SizePartition {
    pub fn u(&self) -> usize {
        self.u_layers.len()
    }

    pub fn v(&self) -> usize {
        self.v_layers.len()
    }

    pub fn w(&self) -> usize {
        self.w_layers.len()
    }
}

pub fn uvw_partition(l: &LayeredSet, h: &Subgroup) -> SizePartition {
    let mut p = SizePartition { u_layers: vec![], v_layers: vec![], w_layers: vec![] };
    for (i, layer) in l.layers.iter().enumerate() {
        let three_b = 3 * layer.set.len();
        if three_b >= 2 * h.order() {
            p.u_layers.push(i);
        } else if three_b >= h.order() {
            p.v_layers.push(i);
        } else {
            p.w_layers.push(i);
        }
    }
    p
}

pub fn check_lemma5(l: &LayeredSet, h: &Subgroup) -> Result<CheckOutcome> {
    check_lemma5_with(l, h, &ThresholdConfig::default())
}

/// Under the doubling hypothesis, `u ≥ w + 2R - 3`.
pub fn check_lemma5_with(l: &LayeredSet, h: &Subgroup, cfg: &ThresholdConfig) -> Result<CheckOutcome> {
    l.group.check_same(h.group())?;
    if let Err(why) = cfg.hypothesis(l) {
        return Ok(CheckOutcome::not_applicable_because("lemma5", why));
    }
    let r = r_parameter(&l.aset)?;
    let p = uvw_partition(l, h);
    let rhs = p.w() + 2 * r - 3;
    Ok(CheckOutcome::evaluated("lemma5", p.u() >= rhs, bound(p.u(), rhs)))
}

/// Every `B_i` replaced by the full `H`-coset it meets first.
pub fn saturate_layers(l: &LayeredSet, h: &Subgroup) -> Result<LayeredSet> {
    let layers = l
        .layers
        .iter()
        .map(|layer| Ok(Layer::new(layer.a, layer.set.saturate(h)?)))
        .collect::<Result<Vec<_>>>()?;
    LayeredSet::new(l.group, layers)
}

/// `|B̃+B̃| - |B̃|`.
pub fn excess(l: &LayeredSet) -> usize {
    flatten_sumset(l).size() - l.size()
}

/// Whether filling every layer out to its `H`-coset leaves the excess
/// unchanged.
pub fn is_coset_saturated(l: &LayeredSet, h: &Subgroup) -> Result<bool> {
    Ok(excess(l) == excess(&saturate_layers(l, h)?))
}

/// `|A' + A'| = s + max a_i`, the least possible for an integer set with
/// these `s` and `max a_i` once `max a_i ≤ 2s - 3`.
pub fn is_projection_extremal(l: &LayeredSet) -> bool {
    sumset_int(&l.aset, &l.aset).len() == l.s() + l.max_a()
}

/// A conclusion of the structure theorem that can fail on an instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Conclusion {
    /// Every `B_i ⊆ a_i x + y + H`.
    CosetContainment,
    /// `max a_i < 3s/2`.
    MaxFirstCoordinate,
    /// Some `|B_j| ≥ 2|H|/3`.
    TwoThirds,
    /// `|H| < 3/2 · max |B_i|`.
    SizeBound,
    /// `(max a_i)|H| ≤ |B̃+B̃| - |B̃|`.
    Ineq7,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureWitness {
    pub subgroup_order: usize,
    /// Quotient coordinates: `B_i ⊆ {b : b ≡ a_i x + y (mod d/|H|)}`.
    pub x: usize,
    pub y: usize,
    /// A layer of maximal size.
    pub j: usize,
    pub two_thirds: bool,
    pub size_bound: bool,
    pub max_first_coordinate: bool,
    pub ineq7: Ineq7Comparison,
    /// Coset-saturated (with respect to this `H`) and projection-extremal.
    pub saturated_extremal: bool,
}

impl StructureWitness {
    pub fn subgroup(&self, group: CyclicGroup) -> Subgroup {
        Subgroup::new(group, self.subgroup_order).expect("order divides the modulus")
    }

    pub fn failed(&self) -> Vec<Conclusion> {
        let mut failed = Vec::new();
        if !self.max_first_coordinate {
            failed.push(Conclusion::MaxFirstCoordinate);
        }
        if !self.two_thirds {
            failed.push(Conclusion::TwoThirds);
        }
        if !self.size_bound {
            failed.push(Conclusion::SizeBound);
        }
        if self.ineq7.status == Ineq7Status::Violated {
            failed.push(Conclusion::Ineq7);
        }
        failed
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StructureOutcome {
    NotApplicable(String),
    Found(StructureWitness),
    ConclusionFailed { witness: Option<StructureWitness>, failed: Vec<Conclusion> },
}

impl StructureOutcome {
    pub fn witness(&self) -> Option<&StructureWitness> {
        match self {
            Self::Found(w) => Some(w),
            Self::ConclusionFailed { witness, .. } => witness.as_ref(),
            Self::NotApplicable(_) => None,
        }
    }
}

/// Whether every `B_i` lies in `a_i x + y + H`, checked element by element.
pub fn coset_containment_holds(l: &LayeredSet, h: &Subgroup, x: usize, y: usize) -> bool {
    let q = h.step();
    l.layers.iter().all(|layer| {
        let target = (layer.a % q * (x % q) + y) % q;
        layer.set.iter().all(|b| b % q == target)
    })
}

/// The least `H` (then the unique `(x, y)` modulo `d/|H|`) with every
/// `B_i ⊆ a_i x + y + H`.
pub fn least_affine_coset(l: &LayeredSet) -> Option<(Subgroup, usize, usize)> {
    l.group.subgroups().into_iter().find_map(|h| {
        let reps = l
            .layers
            .iter()
            .map(|layer| containing_coset(&layer.set, &h).expect("nonempty layer"))
            .collect::<Option<Vec<_>>>()?;
        let assign = AffineAssignment::new(l.aset.clone(), reps, h.step()).expect("reps below d/|H|");
        let (x, y) = solve_affine(&assign)?;
        Some((h, x, y))
    })
}

pub fn find_structure(l: &LayeredSet) -> StructureOutcome {
    find_structure_with(l, &ThresholdConfig::default())
}

pub fn find_structure_with(l: &LayeredSet, cfg: &ThresholdConfig) -> StructureOutcome {
    let double = match cfg.hypothesis(l) {
        Ok(double) => double,
        Err(why) => return StructureOutcome::NotApplicable(why),
    };
    let Some((h, x, y)) = least_affine_coset(l) else {
        return StructureOutcome::ConclusionFailed {
            witness: None,
            failed: vec![Conclusion::CosetContainment],
        };
    };
    if !coset_containment_holds(l, &h, x, y) {
        return StructureOutcome::ConclusionFailed {
            witness: None,
            failed: vec![Conclusion::CosetContainment],
        };
    }
    let order = h.order();
    let j = l.size_order()[0];
    let bj = l.layers[j].set.len();
    let witness = StructureWitness {
        subgroup_order: order,
        x,
        y,
        j,
        two_thirds: 3 * bj >= 2 * order,
        size_bound: 2 * order < 3 * bj,
        max_first_coordinate: 2 * l.max_a() < 3 * l.s(),
        ineq7: ineq7_from(l, &h, double),
        saturated_extremal: is_projection_extremal(l)
            && is_coset_saturated(l, &h).expect("subgroup of the same group"),
    };
    let failed = witness.failed();
    if failed.is_empty() {
        StructureOutcome::Found(witness)
    } else {
        StructureOutcome::ConclusionFailed { witness: Some(witness), failed }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn full_coset() -> LayeredSet {
        let parts: Vec<_> = (0..6).map(|a| (a, vec![a, a + 4, (a + 8) % 12])).collect();
        LayeredSet::from_parts(12, &parts).unwrap()
    }

    fn with_last(last: Vec<usize>) -> LayeredSet {
        let mut parts: Vec<_> = (0..6).map(|a| (a, vec![a, a + 4, (a + 8) % 12])).collect();
        parts[5].1 = last;
        LayeredSet::from_parts(12, &parts).unwrap()
    }

    fn singletons() -> LayeredSet {
        let parts: Vec<_> = [0, 1, 3, 7, 2, 5].iter().enumerate().map(|(a, &b)| (a, vec![b])).collect();
        LayeredSet::from_parts(12, &parts).unwrap()
    }

    fn h(d: usize, order: usize) -> Subgroup {
        Subgroup::new(CyclicGroup::new(d).unwrap(), order).unwrap()
    }

    #[test]
    fn validation() {
        let err = |parts: &[(usize, Vec<usize>)]| match LayeredSet::from_parts(12, parts) {
            Err(Error::InvalidLayers(inv)) => inv,
            other => panic!("{other:?}"),
        };
        assert_eq!(err(&[(0, vec![0])]), LayerInvariant::TooFewLayers(1));
        assert_eq!(err(&[(1, vec![0]), (2, vec![0])]), LayerInvariant::FirstCoordinateNotZero(1));
        assert_eq!(err(&[(0, vec![1]), (1, vec![0])]), LayerInvariant::ZeroNotInFirstLayer);
        assert_eq!(err(&[(0, vec![0]), (2, vec![0]), (4, vec![1])]), LayerInvariant::Gcd(2));
        assert_eq!(err(&[(0, vec![0]), (1, vec![])]), LayerInvariant::EmptyLayer { index: 1 });
        assert_eq!(
            err(&[(0, vec![0]), (1, vec![1]), (1, vec![2])]),
            LayerInvariant::NotIncreasing { index: 2 }
        );
        assert_eq!(LayerInvariant::Gcd(2).to_string(), "gcd of nonzero a is 2, expected 1");
    }

    #[test]
    fn flatten_examples() {
        let l = full_coset();
        let ss = flatten_sumset(&l);
        assert_eq!(ss.entries.len(), 11);
        assert!(ss.entries.values().all(|s| s.len() == 3));
        assert_eq!((ss.size(), l.size()), (33, 18));
        assert_eq!(flatten_sumset(&singletons()).size(), 21);
        let g = CyclicGroup::new(5).unwrap();
        let single = flatten_layers(g, &[Layer::new(0, ResidueSet::singleton(g, 0).unwrap())]).unwrap();
        assert_eq!(single.size(), 1);
        assert_eq!(single.get(0).unwrap().to_vec(), vec![0]);
    }

    #[test]
    fn fiber_bound_examples() {
        assert_eq!(prop6_lower_bound(&full_coset()), Ok(33));
        let v = with_last(vec![5]);
        assert_eq!(flatten_sumset(&v).size(), 31);
        assert!(prop6_lower_bound(&v).unwrap() <= 31);
        let tiny = LayeredSet::from_parts(3, &[(0, vec![0]), (1, vec![0])]).unwrap();
        assert_eq!(prop6_lower_bound(&tiny), Ok(3));
        assert_eq!(flatten_sumset(&tiny).size(), 3);
    }

    #[test]
    fn corollary1_examples() {
        let c = corollary1_check(&full_coset()).unwrap();
        assert!(c.holds);
        assert_eq!(c.witness, Some(Witness::Bound { value: 15, bound: 15 }));
        let c = corollary1_check(&singletons()).unwrap();
        assert_eq!(c.witness, Some(Witness::Bound { value: 15, bound: 5 }));
        let tiny = LayeredSet::from_parts(3, &[(0, vec![0]), (1, vec![0])]).unwrap();
        assert!(corollary1_check(&tiny).unwrap().holds);
    }

    #[test]
    fn prop7_examples() {
        let c = check_prop7(&full_coset());
        assert!(c.applicable && c.holds);
        assert!(!check_prop7(&singletons()).applicable);
        let parts = [(0, (0..12).collect()), (1, (0..12).collect())];
        assert!(!check_prop7(&LayeredSet::from_parts(12, &parts).unwrap()).applicable);
    }

    #[test]
    fn structure_examples() {
        match find_structure(&full_coset()) {
            StructureOutcome::Found(w) => {
                assert_eq!((w.subgroup_order, w.x, w.y), (3, 1, 0));
                assert!(w.two_thirds && w.size_bound && w.max_first_coordinate);
                assert_eq!(w.ineq7, Ineq7Comparison { lhs: 15, rhs: 15, status: Ineq7Status::Equality });
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(find_structure(&singletons()), StructureOutcome::NotApplicable(_)));
        let parts: Vec<_> = (0..6).map(|a| (a, (0..12).collect())).collect();
        let full = LayeredSet::from_parts(12, &parts).unwrap();
        match find_structure(&full) {
            StructureOutcome::Found(w) => {
                assert_eq!((w.subgroup_order, w.x, w.y), (12, 0, 0));
                assert_eq!((w.ineq7.lhs, w.ineq7.rhs), (60, 60));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn uvw_examples() {
        let p = uvw_partition(&full_coset(), &h(12, 3));
        assert_eq!((p.u(), p.v(), p.w()), (6, 0, 0));
        let p = uvw_partition(&with_last(vec![5]), &h(12, 3));
        assert_eq!((p.u(), p.v(), p.w()), (5, 1, 0));
        assert_eq!(p.v_layers, vec![5]);
        let p = uvw_partition(&singletons(), &h(12, 12));
        assert_eq!(p.w(), 6);
    }

    #[test]
    fn lemma5_examples() {
        let c = check_lemma5(&full_coset(), &h(12, 3)).unwrap();
        assert_eq!((c.applicable, c.holds), (true, true));
        assert_eq!(c.witness, Some(Witness::Bound { value: 6, bound: 1 }));
        let c = check_lemma5(&with_last(vec![5]), &h(12, 3)).unwrap();
        assert_eq!(c.witness, Some(Witness::Bound { value: 5, bound: 1 }));
        assert!(!check_lemma5(&singletons(), &h(12, 12)).unwrap().applicable);
    }

    #[test]
    fn saturation_examples() {
        let h3 = h(12, 3);
        assert!(is_coset_saturated(&full_coset(), &h3).unwrap());
        assert!(is_coset_saturated(&with_last(vec![5]), &h3).unwrap());
        assert!(is_projection_extremal(&full_coset()));
        let sat = saturate_layers(&with_last(vec![5]), &h3).unwrap();
        assert_eq!(sat, full_coset());
        let mut parts: Vec<_> = (0..6).map(|a| (a, vec![a, a + 4, (a + 8) % 12])).collect();
        parts[0].1 = vec![0, 4];
        assert!(!is_coset_saturated(&LayeredSet::from_parts(12, &parts).unwrap(), &h3).unwrap());
        let gap =
            LayeredSet::from_parts(5, &[(0, vec![0]), (1, vec![0]), (3, vec![0]), (7, vec![0])]).unwrap();
        assert!(!is_projection_extremal(&gap));
    }

    #[test]
    fn ineq7_examples() {
        assert_eq!(check_ineq7(&full_coset(), &h(12, 3)).status, Ineq7Status::Equality);
        let v = check_ineq7(&with_last(vec![5]), &h(12, 3));
        assert_eq!((v.lhs, v.rhs, v.status), (15, 15, Ineq7Status::Equality));
        let mut parts: Vec<_> = (0..6).map(|a| (a, vec![a, a + 4, (a + 8) % 12])).collect();
        parts[0].1 = vec![0, 4, 8, 1, 5, 9];
        let wide = LayeredSet::from_parts(12, &parts).unwrap();
        assert_eq!((flatten_sumset(&wide).size(), wide.size()), (54, 21));
        let c = check_ineq7(&wide, &h(12, 3));
        assert_eq!((c.lhs, c.rhs, c.status), (15, 33, Ineq7Status::Strict));
        assert_eq!(check_ineq7(&wide, &h(12, 12)).status, Ineq7Status::Violated);
    }
}
