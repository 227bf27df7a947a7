//! Enumeration of complete preorders, completions and preorders, and the
//! canonical completion.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::order::{GroundSet, Preorder, Relation, SubsetMask, TotalPreorder};

/// Which completions a [`CompletionStream`] yields.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CompletionFilter {
    All,
    /// Completions not properly contained in another completion.
    Maximal,
    /// Completions that rank every previously incomparable pair strictly.
    Strict,
}

/// Surjective level words over `0..k`, for `k = 1..=n`, each `k` in
/// lexicographic order. A word assigns every element its block index, so the
/// words are exactly the ordered set partitions of `n` elements.
#[derive(Clone, Debug)]
pub(crate) struct LevelWords {
    n: usize,
    k: usize,
    word: Vec<u8>,
    counts: Vec<u32>,
    distinct: usize,
    started: bool,
}

impl LevelWords {
    pub(crate) fn new(n: usize) -> Self {
        LevelWords {
            n,
            k: 1,
            word: vec![0; n],
            counts: vec![0; n.max(1)],
            distinct: 0,
            started: false,
        }
    }

    fn add(&mut self, v: usize) {
        if self.counts[v] == 0 {
            self.distinct += 1;
        }
        self.counts[v] += 1;
    }

    fn remove(&mut self, v: usize) {
        self.counts[v] -= 1;
        if self.counts[v] == 0 {
            self.distinct -= 1;
        }
    }

    /// Lexicographically smallest feasible suffix from `start`.
    fn fill_from(&mut self, start: usize) {
        for j in start..self.n {
            for v in 0..self.k {
                self.add(v);
                if self.k - self.distinct < self.n - j {
                    self.word[j] = v as u8;
                    break;
                }
                self.remove(v);
            }
        }
    }

    fn restart(&mut self) {
        self.counts.iter_mut().for_each(|c| *c = 0);
        self.distinct = 0;
        self.fill_from(0);
    }

    /// The next word and its block count.
    pub(crate) fn advance(&mut self) -> Option<(&[u8], usize)> {
        if self.n == 0 {
            return None;
        }
        if !self.started {
            self.started = true;
            self.restart();
            return Some((&self.word, self.k));
        }
        for i in (0..self.n).rev() {
            let current = self.word[i] as usize;
            self.remove(current);
            for v in current + 1..self.k {
                self.add(v);
                if self.k - self.distinct < self.n - i {
                    self.word[i] = v as u8;
                    self.fill_from(i + 1);
                    return Some((&self.word, self.k));
                }
                self.remove(v);
            }
        }
        self.k += 1;
        if self.k > self.n {
            return None;
        }
        self.restart();
        Some((&self.word, self.k))
    }
}

/// Every complete preorder on a ground set; see [`enumerate_total_preorders`].
#[derive(Clone, Debug)]
pub struct TotalPreorders {
    ground: Arc<GroundSet>,
    words: LevelWords,
}

impl Iterator for TotalPreorders {
    type Item = TotalPreorder;

    fn next(&mut self) -> Option<TotalPreorder> {
        let ground = self.ground.clone();
        self.words
            .advance()
            .map(|(w, _)| TotalPreorder::from_levels(ground, w).expect("surjective word"))
    }
}

/// Every ordered set partition of the ground set exactly once: by block
/// count, then lexicographically by the block index of each element.
pub fn enumerate_total_preorders(
    ground: Arc<GroundSet>,
    limits: &Limits,
) -> Result<TotalPreorders> {
    if ground.len() > limits.total_enum_max_n {
        return Err(Error::too_large(
            "enumerating complete preorders",
            ground.len() as u128,
            limits.total_enum_max_n as u128,
        ));
    }
    let words = LevelWords::new(ground.len());
    Ok(TotalPreorders { ground, words })
}

/// The base order collapsed to its `∼`-classes. Completions never separate
/// indifferent elements, so they are sequences of unions of classes.
pub(crate) struct Quotient {
    classes: Vec<SubsetMask>,
    /// Elements strictly above each class.
    up: Vec<u64>,
    /// Elements strictly below each class.
    down: Vec<u64>,
}

impl Quotient {
    pub(crate) fn new(base: &Preorder) -> Self {
        let classes = base.classes();
        let rep = |c: &SubsetMask| c.first().expect("nonempty class");
        let up = classes
            .iter()
            .map(|c| base.up_set(rep(c), true).0)
            .collect();
        let down = classes
            .iter()
            .map(|c| base.down_set(rep(c), true).0)
            .collect();
        Quotient { classes, up, down }
    }

    /// Classes inside `remaining` with nothing above them in `remaining`.
    pub(crate) fn maximal_classes(&self, remaining: u64) -> Vec<usize> {
        (0..self.classes.len())
            .filter(|&c| {
                let bits = self.classes[c].0;
                bits & remaining == bits && self.up[c] & remaining == 0
            })
            .collect()
    }

    fn union(&self, options: &[usize], selection: u64) -> u64 {
        SubsetMask(selection)
            .iter()
            .fold(0u64, |acc, i| acc | self.classes[options[i]].0)
    }

    fn strict_down_of(&self, options: &[usize], selection: u64) -> u64 {
        SubsetMask(selection)
            .iter()
            .fold(0u64, |acc, i| acc | self.down[options[i]])
    }
}

/// Memoized search over the down-closed remainders left after choosing the
/// top blocks of a completion.
pub(crate) struct IdealSearch<'a> {
    quotient: Quotient,
    limits: &'a Limits,
    steps: u64,
}

impl<'a> IdealSearch<'a> {
    pub(crate) fn new(base: &Preorder, limits: &'a Limits) -> Self {
        IdealSearch {
            quotient: Quotient::new(base),
            limits,
            steps: 0,
        }
    }

    fn options(&mut self, remaining: u64) -> Result<Vec<usize>> {
        let options = self.quotient.maximal_classes(remaining);
        // 2^c − 1 distinct first blocks, each starting at least one completion.
        let firsts = (1u128 << options.len()) - 1;
        if firsts > self.limits.max_completions {
            return Err(Error::too_large(
                "completion search",
                firsts,
                self.limits.max_completions,
            ));
        }
        self.steps += firsts as u64;
        if self.steps > self.limits.max_search_steps {
            return Err(Error::too_large(
                "completion search",
                self.steps as u128,
                self.limits.max_search_steps as u128,
            ));
        }
        Ok(options)
    }

    /// Number of completions of the base.
    pub(crate) fn count(&mut self) -> Result<u128> {
        let mut memo = HashMap::new();
        let full = self.quotient.classes.iter().fold(0u64, |a, c| a | c.0);
        self.count_from(full, &mut memo)
    }

    fn count_from(&mut self, remaining: u64, memo: &mut HashMap<u64, u128>) -> Result<u128> {
        if remaining == 0 {
            return Ok(1);
        }
        if let Some(&c) = memo.get(&remaining) {
            return Ok(c);
        }
        let options = self.options(remaining)?;
        let mut total: u128 = 0;
        for sel in 1..(1u64 << options.len()) {
            let block = self.quotient.union(&options, sel);
            total = total.saturating_add(self.count_from(remaining & !block, memo)?);
        }
        memo.insert(remaining, total);
        Ok(total)
    }

    /// Largest index over all completions. Choosing block `B` while `R`
    /// elements remain gives each member of `B` a down-set of size `|R|`, so
    /// the index is `Σ |B|·2^|R|` over the chosen blocks.
    pub(crate) fn max_index(&mut self) -> Result<u128> {
        let mut memo = HashMap::new();
        let full = self.quotient.classes.iter().fold(0u64, |a, c| a | c.0);
        self.max_index_from(full, &mut memo)
    }

    fn max_index_from(&mut self, remaining: u64, memo: &mut HashMap<u64, u128>) -> Result<u128> {
        if remaining == 0 {
            return Ok(0);
        }
        if let Some(&v) = memo.get(&remaining) {
            return Ok(v);
        }
        let options = self.options(remaining)?;
        let weight = 1u128 << remaining.count_ones();
        let mut best = 0;
        for sel in 1..(1u64 << options.len()) {
            let block = self.quotient.union(&options, sel);
            let value = block.count_ones() as u128 * weight
                + self.max_index_from(remaining & !block, memo)?;
            best = best.max(value);
        }
        memo.insert(remaining, best);
        Ok(best)
    }
}

/// Exact number of completions of `base`, guarded by `limits`.
pub fn count_completions(base: &Preorder, limits: &Limits) -> Result<u128> {
    IdealSearch::new(base, limits).count()
}

struct Frame {
    remaining: u64,
    options: Vec<usize>,
    next: u64,
    /// Elements strictly below the block that led here.
    below_previous: Option<u64>,
}

/// Lazily enumerated completions of a base preorder, depth first, top block
/// first. Within a step, candidate top blocks are visited in increasing order
/// of their selection bitmask over the currently maximal classes.
pub struct CompletionStream {
    base: Preorder,
    filter: CompletionFilter,
    quotient: Quotient,
    stack: Vec<Frame>,
    path: Vec<SubsetMask>,
}

impl CompletionStream {
    pub fn base(&self) -> &Preorder {
        &self.base
    }

    pub fn filter(&self) -> CompletionFilter {
        self.filter
    }

    fn frame(&self, remaining: u64, below_previous: Option<u64>) -> Frame {
        Frame {
            remaining,
            options: self.quotient.maximal_classes(remaining),
            next: 1,
            below_previous,
        }
    }
}

impl Iterator for CompletionStream {
    type Item = TotalPreorder;

    fn next(&mut self) -> Option<TotalPreorder> {
        loop {
            let frame = self.stack.last_mut()?;
            if frame.next >= 1u64 << frame.options.len() {
                self.stack.pop();
                self.path.pop();
                continue;
            }
            let sel = frame.next;
            frame.next += 1;
            if self.filter == CompletionFilter::Strict && sel.count_ones() != 1 {
                continue;
            }
            let block = self.quotient.union(&frame.options, sel);
            if self.filter == CompletionFilter::Maximal {
                if let Some(below) = frame.below_previous {
                    if below & block == 0 {
                        continue;
                    }
                }
            }
            let remaining = frame.remaining & !block;
            let below = self.quotient.strict_down_of(&frame.options, sel);
            self.path.push(SubsetMask(block));
            if remaining == 0 {
                let out = TotalPreorder::from_blocks_unchecked(
                    self.base.ground().clone(),
                    self.path.clone(),
                );
                self.path.pop();
                return Some(out);
            }
            let next = self.frame(remaining, Some(below));
            self.stack.push(next);
        }
    }
}

/// Completions of `base` passing `filter`.
///
/// Fails with [`Error::TooLarge`] when the total number of completions exceeds
/// [`Limits::max_completions`].
pub fn enumerate_completions(
    base: &Preorder,
    filter: CompletionFilter,
    limits: &Limits,
) -> Result<CompletionStream> {
    let total = count_completions(base, limits)?;
    if total > limits.max_completions {
        return Err(Error::too_large(
            "enumerating completions",
            total,
            limits.max_completions,
        ));
    }
    let quotient = Quotient::new(base);
    let mut stream = CompletionStream {
        base: base.clone(),
        filter,
        quotient,
        stack: Vec::new(),
        path: Vec::new(),
    };
    let root = stream.frame(base.full_set().0, None);
    stream.stack.push(root);
    Ok(stream)
}

/// No two adjacent blocks of `cand` can be merged without putting a strict
/// pair of `base` into one block.
pub fn has_no_mergeable_blocks(cand: &TotalPreorder, base: &Preorder) -> bool {
    cand.blocks().windows(2).all(|pair| {
        pair[0]
            .iter()
            .any(|x| !(base.down_set(x, true) & pair[1]).is_empty())
    })
}

/// True iff no completion of `base` properly contains `cand`, decided by
/// comparing against every completion.
pub fn is_maximal_completion(
    cand: &TotalPreorder,
    base: &Preorder,
    limits: &Limits,
) -> Result<bool> {
    if !base.is_completed_by(cand)? {
        return Err(Error::NotACompletion);
    }
    let mut all = enumerate_completions(base, CompletionFilter::All, limits)?;
    Ok(!all.any(|other| other != *cand && cand.is_contained_in(&other)))
}

/// Blocks are the successive layers of maximal elements.
pub fn canonical_completion(base: &Preorder) -> TotalPreorder {
    TotalPreorder::from_blocks_unchecked(base.ground().clone(), base.layers())
}

/// Every reflexive and transitive relation on the ground set, in increasing
/// order of the off-diagonal bit pattern (row-major).
pub fn enumerate_preorders(ground: Arc<GroundSet>, limits: &Limits) -> Result<Vec<Preorder>> {
    let n = ground.len();
    if n > limits.preorder_enum_max_n {
        return Err(Error::too_large(
            "enumerating preorders",
            n as u128,
            limits.preorder_enum_max_n as u128,
        ));
    }
    let off_diagonal: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    if off_diagonal.len() >= 40 {
        return Err(Error::too_large("enumerating preorders", n as u128, 6u128));
    }
    let mut out = Vec::new();
    let identity: Vec<u64> = (0..n).map(|i| 1u64 << i).collect();
    for pattern in 0u64..(1u64 << off_diagonal.len()) {
        let mut rows = identity.clone();
        for bit in SubsetMask(pattern) {
            let (i, j) = off_diagonal[bit];
            rows[i] |= 1u64 << j;
        }
        let transitive =
            (0..n).all(|i| SubsetMask(rows[i]).iter().all(|j| rows[j] & !rows[i] == 0));
        if transitive {
            let rel = Relation::from_rows(ground.clone(), rows)?;
            out.push(rel.validate_preorder()?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fubini(n: usize) -> u128 {
        // a(n) = Σ_k C(n,k) a(n−k)
        let mut a = vec![1u128];
        for m in 1..=n {
            let mut binom = 1u128;
            let mut sum = 0u128;
            for k in 1..=m {
                binom = binom * (m - k + 1) as u128 / k as u128;
                sum += binom * a[m - k];
            }
            a.push(sum);
        }
        a[n]
    }

    #[test]
    fn level_words_count_ordered_partitions() {
        for n in 1..=7 {
            let mut words = LevelWords::new(n);
            let mut count = 0u128;
            let mut prev: Option<(usize, Vec<u8>)> = None;
            while let Some((w, k)) = words.advance() {
                let blocks: std::collections::BTreeSet<u8> = w.iter().copied().collect();
                assert_eq!(blocks.len(), k);
                assert_eq!(*blocks.iter().last().unwrap() as usize, k - 1);
                if let Some((pk, pw)) = &prev {
                    assert!((*pk, pw.as_slice()) < (k, w), "order must increase");
                }
                prev = Some((k, w.to_vec()));
                count += 1;
            }
            assert_eq!(count, fubini(n), "n = {n}");
        }
    }

    #[test]
    fn total_preorder_counts() {
        let limits = Limits::default();
        let counts: Vec<usize> = (1..=5)
            .map(|n| {
                enumerate_total_preorders(GroundSet::indexed("x", n).unwrap(), &limits)
                    .unwrap()
                    .count()
            })
            .collect();
        assert_eq!(counts, vec![1, 3, 13, 75, 541]);
    }

    #[test]
    fn total_preorder_enumeration_is_guarded() {
        let ground = GroundSet::indexed("x", 10).unwrap();
        assert!(matches!(
            enumerate_total_preorders(ground, &Limits::default()),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn equality_completions_are_all_total_preorders() {
        for n in 1..=5 {
            let eq = Preorder::equality(GroundSet::indexed("x", n).unwrap());
            let limits = Limits::default();
            let all = enumerate_completions(&eq, CompletionFilter::All, &limits).unwrap();
            assert_eq!(all.count() as u128, fubini(n));
            assert_eq!(count_completions(&eq, &limits).unwrap(), fubini(n));
            let maximal: Vec<_> = enumerate_completions(&eq, CompletionFilter::Maximal, &limits)
                .unwrap()
                .collect();
            assert_eq!(
                maximal,
                vec![TotalPreorder::indifferent(eq.ground().clone())]
            );
        }
    }

    #[test]
    fn strict_completions_of_a_partial_order_are_linear() {
        let g = GroundSet::new(["x", "a", "a1", "a2"]).unwrap();
        let p = Preorder::generated_by_labels(g, &[("a", "a1"), ("a", "a2")]).unwrap();
        let strict: Vec<_> =
            enumerate_completions(&p, CompletionFilter::Strict, &Limits::default())
                .unwrap()
                .collect();
        assert!(!strict.is_empty());
        assert!(strict.iter().all(TotalPreorder::is_linear));
        // 4!/3 linear extensions: a above a1, a2.
        assert_eq!(strict.len(), 8);
    }

    #[test]
    fn strict_completions_keep_indifference_blocks() {
        let g = GroundSet::new(["p", "q", "r"]).unwrap();
        let p = Preorder::generated_by_labels(g, &[("p", "q"), ("q", "p")]).unwrap();
        let strict: Vec<_> =
            enumerate_completions(&p, CompletionFilter::Strict, &Limits::default())
                .unwrap()
                .collect();
        assert_eq!(strict.len(), 2);
        assert!(strict.iter().all(|t| t.blocks().len() == 2));
    }

    #[test]
    fn canonical_completion_of_equality_is_indifference() {
        let g = GroundSet::indexed("x", 4).unwrap();
        assert_eq!(
            canonical_completion(&Preorder::equality(g.clone())),
            TotalPreorder::indifferent(g)
        );
    }

    #[test]
    fn maximal_completion_rejects_non_completions() {
        let g = GroundSet::new(["a", "b"]).unwrap();
        let p = Preorder::generated_by_labels(g.clone(), &[("a", "b")]).unwrap();
        let wrong = TotalPreorder::from_labeled_blocks(g, &[&["b"], &["a"]]).unwrap();
        assert_eq!(
            is_maximal_completion(&wrong, &p, &Limits::default()),
            Err(Error::NotACompletion)
        );
    }

    #[test]
    fn preorder_counts() {
        let limits = Limits::default();
        let counts: Vec<usize> = (1..=4)
            .map(|n| {
                enumerate_preorders(GroundSet::indexed("x", n).unwrap(), &limits)
                    .unwrap()
                    .len()
            })
            .collect();
        assert_eq!(counts, vec![1, 4, 29, 355]);
        assert!(enumerate_preorders(GroundSet::indexed("x", 5).unwrap(), &limits).is_err());
    }

    #[test]
    fn completion_search_is_guarded() {
        let eq = Preorder::equality(GroundSet::indexed("x", 30).unwrap());
        assert!(matches!(
            count_completions(&eq, &Limits::default()),
            Err(Error::TooLarge { .. })
        ));
    }
}
