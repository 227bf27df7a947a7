//! Best complete approximations: exhaustive search, index maximization over
//! maximal completions, the layer condition that makes the canonical
//! completion optimal, and the covering radius.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use crate::completions::{
    canonical_completion, enumerate_completions, enumerate_preorders, CompletionFilter, LevelWords,
};
use crate::error::{Error, Result};
use crate::index::{index_general, index_total, index_total_u128, BigCount};
use crate::limits::Limits;
use crate::metrics::FastKernel;
use crate::order::{GroundSet, Preorder, SubsetMask, TotalPreorder};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// Minimum distance over every complete preorder.
    Bruteforce,
    /// Maximum index over the maximal completions.
    Duality,
    /// The canonical completion, when the layer condition vouches for it.
    Canonical,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Bruteforce => "bruteforce",
            Method::Duality => "duality",
            Method::Canonical => "canonical",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApproximationReport {
    /// Sorted; every member is at `distance` from the base.
    pub bca_set: Vec<TotalPreorder>,
    pub distance: u128,
    /// Index of each member of `bca_set`, in the same order.
    pub indices: Vec<BigCount>,
    pub method: Method,
    /// False when `bca_set` is known to contain best approximations but may
    /// miss others.
    pub exhaustive: bool,
}

impl ApproximationReport {
    fn new(
        base: &Preorder,
        mut bca_set: Vec<TotalPreorder>,
        method: Method,
        exhaustive: bool,
    ) -> Self {
        bca_set.sort();
        let distance = FastKernel::new(base).distance_to(&bca_set[0]);
        let indices = bca_set.iter().map(index_total).collect();
        ApproximationReport {
            bca_set,
            distance,
            indices,
            method,
            exhaustive,
        }
    }
}

/// Minimum of `D(base, ·)` over one sweep of every complete preorder,
/// with all minimizers.
pub(crate) fn nearest_total_preorders(base: &Preorder) -> (u128, Vec<Vec<u8>>) {
    let mut kernel = FastKernel::new(base);
    let mut words = LevelWords::new(base.len());
    let mut best = u128::MAX;
    let mut argmin = Vec::new();
    while let Some((w, k)) = words.advance() {
        let d = kernel.distance_to_levels(w, k);
        if d < best {
            best = d;
            argmin.clear();
        }
        if d == best {
            argmin.push(w.to_vec());
        }
    }
    (best, argmin)
}

/// Exact best approximations by evaluating `D` against every complete
/// preorder on the ground set.
pub fn bca_bruteforce(base: &Preorder, limits: &Limits) -> Result<ApproximationReport> {
    let n = base.len();
    if n > limits.total_enum_max_n {
        return Err(Error::too_large(
            "brute-force approximation sweep",
            n as u128,
            limits.total_enum_max_n as u128,
        ));
    }
    let (_, words) = nearest_total_preorders(base);
    let set = words
        .iter()
        .map(|w| TotalPreorder::from_levels(base.ground().clone(), w))
        .collect::<Result<Vec<_>>>()?;
    Ok(ApproximationReport::new(
        base,
        set,
        Method::Bruteforce,
        true,
    ))
}

/// Best approximations as the maximal completions of largest index.
pub fn bca_duality(base: &Preorder, limits: &Limits) -> Result<ApproximationReport> {
    let mut best = 0u128;
    let mut set = Vec::new();
    for t in enumerate_completions(base, CompletionFilter::Maximal, limits)? {
        let v = index_total_u128(&t);
        match v.cmp(&best) {
            Ordering::Greater => {
                best = v;
                set.clear();
                set.push(t);
            }
            Ordering::Equal => set.push(t),
            Ordering::Less => {}
        }
    }
    Ok(ApproximationReport::new(base, set, Method::Duality, true))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    /// Every inequality holds strictly.
    Strict,
    /// No inequality is violated but at least one is tight.
    Weak,
    Fails,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Strict => "strict",
            Verdict::Weak => "weak",
            Verdict::Fails => "fails",
        }
    }
}

/// A tight or violated comparison `𝕀(≿_Y)` against `2^(|S|+|Y|)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionWitness {
    /// Position of the layer, the top layer being 1.
    pub layer: usize,
    pub subset: SubsetMask,
    /// Elements strictly below some member of `subset` and below no other
    /// member of the layer.
    pub below: SubsetMask,
    pub index: BigCount,
    pub bound: BigCount,
}

impl ConditionWitness {
    pub fn is_violation(&self) -> bool {
        self.index > self.bound
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionStarReport {
    pub verdict: Verdict,
    /// Only the non-strict comparisons, by layer then subset bitmask.
    pub witnesses: Vec<ConditionWitness>,
}

impl ConditionStarReport {
    /// The first violation if any, otherwise the first tight comparison.
    pub fn first_witness(&self) -> Option<&ConditionWitness> {
        self.witnesses
            .iter()
            .find(|w| w.is_violation())
            .or(self.witnesses.first())
    }
}

/// For every layer `M` of `base` and nonempty proper `S ⊂ M`, compares the
/// index of the order restricted to `Y` (the part of the strict down-set of
/// `S` not below the rest of `M`) against `2^(|S|+|Y|)`. An empty `Y` has
/// index 0.
pub fn condition_star(base: &Preorder, limits: &Limits) -> Result<ConditionStarReport> {
    let layers = base.layers();
    if let Some(big) = layers
        .iter()
        .find(|m| m.len() > limits.condition_star_max_layer)
    {
        return Err(Error::too_large(
            "layer subset sweep",
            big.len() as u128,
            limits.condition_star_max_layer as u128,
        ));
    }
    let n = base.len();
    let down: Vec<u64> = (0..n).map(|x| base.down_set(x, true).0).collect();
    let mut cache: HashMap<u64, u128> = HashMap::new();
    let mut witnesses = Vec::new();
    let mut verdict = Verdict::Strict;
    for (i, layer) in layers.iter().enumerate() {
        let members: Vec<usize> = layer.iter().collect();
        let m = members.len();
        for sel in 1u64..(1u64 << m).saturating_sub(1) {
            let (mut inside, mut outside) = (0u64, 0u64);
            let mut subset = SubsetMask::EMPTY;
            for (bit, &x) in members.iter().enumerate() {
                if sel >> bit & 1 == 1 {
                    inside |= down[x];
                    subset.insert(x);
                } else {
                    outside |= down[x];
                }
            }
            let y = inside & !outside;
            let index = match cache.get(&y) {
                Some(&v) => v,
                None => {
                    let v = if y == 0 {
                        0
                    } else {
                        let restricted = base.restrict(SubsetMask(y))?;
                        index_general(&restricted, limits)?
                            .to_u128()
                            .expect("index of at most 64 elements fits in u128")
                    };
                    cache.insert(y, v);
                    v
                }
            };
            let bound = 1u128 << (subset.len() + y.count_ones() as usize);
            let relation = index.cmp(&bound);
            if relation == Ordering::Less {
                continue;
            }
            verdict = match (verdict, relation) {
                (_, Ordering::Greater) | (Verdict::Fails, _) => Verdict::Fails,
                _ => Verdict::Weak,
            };
            witnesses.push(ConditionWitness {
                layer: i + 1,
                subset,
                below: SubsetMask(y),
                index: index.into(),
                bound: bound.into(),
            });
        }
    }
    Ok(ConditionStarReport { verdict, witnesses })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CanonicalOutcome {
    /// The canonical completion is a best approximation; it is the only one
    /// when the condition holds strictly (`report.exhaustive`).
    Applies {
        report: ApproximationReport,
        condition: ConditionStarReport,
    },
    NotApplicable(ConditionStarReport),
}

/// The canonical completion as best approximation, when the layer condition
/// guarantees it.
pub fn bca_canonical(base: &Preorder, limits: &Limits) -> Result<CanonicalOutcome> {
    let condition = condition_star(base, limits)?;
    if condition.verdict == Verdict::Fails {
        return Ok(CanonicalOutcome::NotApplicable(condition));
    }
    let exhaustive = condition.verdict == Verdict::Strict;
    let report = ApproximationReport::new(
        base,
        vec![canonical_completion(base)],
        Method::Canonical,
        exhaustive,
    );
    Ok(CanonicalOutcome::Applies { report, condition })
}

/// The canonical shortcut when the condition holds strictly, otherwise the
/// index search, otherwise the exhaustive sweep. Also returns the condition
/// report when it could be computed.
pub fn bca_auto(
    base: &Preorder,
    limits: &Limits,
) -> Result<(ApproximationReport, Option<ConditionStarReport>)> {
    let condition = match condition_star(base, limits) {
        Ok(c) => Some(c),
        Err(Error::TooLarge { .. }) => None,
        Err(e) => return Err(e),
    };
    if let Some(c) = &condition {
        if c.verdict == Verdict::Strict {
            let report = ApproximationReport::new(
                base,
                vec![canonical_completion(base)],
                Method::Canonical,
                true,
            );
            return Ok((report, condition));
        }
    }
    match bca_duality(base, limits) {
        Ok(report) => Ok((report, condition)),
        Err(Error::TooLarge { .. }) => Ok((bca_bruteforce(base, limits)?, condition)),
        Err(e) => Err(e),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoveringRadius {
    pub radius: u128,
    /// The first preorder, in enumeration order, that is this far from
    /// every complete preorder.
    pub witness: Preorder,
}

/// Largest best-approximation distance over every preorder on the ground set.
pub fn covering_radius(ground: Arc<GroundSet>, limits: &Limits) -> Result<CoveringRadius> {
    let mut best: Option<(u128, Preorder)> = None;
    for p in enumerate_preorders(ground, limits)? {
        let (d, _) = nearest_total_preorders(&p);
        if best.as_ref().is_none_or(|(b, _)| d > *b) {
            best = Some((d, p));
        }
    }
    let (radius, witness) = best.expect("at least one preorder");
    Ok(CoveringRadius { radius, witness })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn isolated_beside_chain() -> Preorder {
        let g = GroundSet::new(["x", "a", "a1", "a2"]).unwrap();
        Preorder::generated_by_labels(g, &[("a", "a1"), ("a1", "a2")]).unwrap()
    }

    #[test]
    fn isolated_element_joins_the_top() {
        let p = isolated_beside_chain();
        let g = p.ground().clone();
        let expected =
            TotalPreorder::from_labeled_blocks(g, &[&["a", "x"], &["a1"], &["a2"]]).unwrap();
        let limits = Limits::default();
        for r in [
            bca_bruteforce(&p, &limits).unwrap(),
            bca_duality(&p, &limits).unwrap(),
        ] {
            assert_eq!(r.bca_set, vec![expected.clone()]);
            assert_eq!(r.distance, 3);
            assert!(r.exhaustive);
        }
    }

    #[test]
    fn total_base_is_its_own_approximation() {
        let g = GroundSet::indexed("x", 4).unwrap();
        let p = Preorder::generated_by(g, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let r = bca_bruteforce(&p, &Limits::default()).unwrap();
        assert_eq!(r.bca_set, vec![p.to_total().unwrap()]);
        assert_eq!(r.distance, 0);
    }

    #[test]
    fn linear_orders_satisfy_the_condition_strictly() {
        let g = GroundSet::indexed("x", 6).unwrap();
        let p = Preorder::generated_by(g, (1..6).map(|i| (i - 1, i))).unwrap();
        let c = condition_star(&p, &Limits::default()).unwrap();
        assert_eq!(c.verdict, Verdict::Strict);
        assert!(c.witnesses.is_empty());
    }

    #[test]
    fn tight_comparison_is_weak() {
        let g = GroundSet::new(["x", "a", "a1", "a2"]).unwrap();
        let p = Preorder::generated_by_labels(g.clone(), &[("a", "a1"), ("a", "a2")]).unwrap();
        let c = condition_star(&p, &Limits::default()).unwrap();
        assert_eq!(c.verdict, Verdict::Weak);
        let w = c.first_witness().unwrap();
        assert_eq!(w.layer, 1);
        assert_eq!(w.subset, g.mask_of(&["a"]).unwrap());
        assert_eq!(w.below, g.mask_of(&["a1", "a2"]).unwrap());
        assert_eq!(w.index, BigCount::from(8u128));
        assert_eq!(w.bound, BigCount::from(8u128));
        match bca_canonical(&p, &Limits::default()).unwrap() {
            CanonicalOutcome::Applies { report, .. } => assert!(!report.exhaustive),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn covering_radius_of_two_elements_is_zero() {
        let r = covering_radius(GroundSet::indexed("x", 2).unwrap(), &Limits::default()).unwrap();
        assert_eq!(r.radius, 0);
    }

    #[test]
    fn bruteforce_is_guarded() {
        let p = Preorder::equality(GroundSet::indexed("x", 10).unwrap());
        assert!(matches!(
            bca_bruteforce(&p, &Limits::default()),
            Err(Error::TooLarge { .. })
        ));
    }
}
