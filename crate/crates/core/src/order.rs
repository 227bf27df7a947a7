//! Ground sets, relations and the order-theoretic primitives everything else
//! builds on.
//!
//! Relations are dense boolean matrices stored one `u64` row per element, so a
//! ground set holds at most [`MAX_ELEMENTS`] elements. Row `i` has bit `j` set
//! iff `xᵢ ≿ xⱼ`.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};
use std::sync::Arc;

use crate::error::{Error, Result, Violation, ViolationList};

pub const MAX_ELEMENTS: usize = 64;

/// A subset of ground-set indices.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetMask(pub u64);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ELEMENTS);
        if n >= 64 {
            SubsetMask(u64::MAX)
        } else {
            SubsetMask((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        SubsetMask(1u64 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        SubsetMask(indices.into_iter().fold(0, |acc, i| acc | (1u64 << i)))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 & (1u64 << i) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: SubsetMask) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u64 << i;
    }

    pub fn iter(self) -> Members {
        Members(self.0)
    }
}

impl BitOr for SubsetMask {
    type Output = SubsetMask;
    fn bitor(self, rhs: Self) -> Self {
        SubsetMask(self.0 | rhs.0)
    }
}

impl BitAnd for SubsetMask {
    type Output = SubsetMask;
    fn bitand(self, rhs: Self) -> Self {
        SubsetMask(self.0 & rhs.0)
    }
}

impl Sub for SubsetMask {
    type Output = SubsetMask;
    fn sub(self, rhs: Self) -> Self {
        SubsetMask(self.0 & !rhs.0)
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl IntoIterator for SubsetMask {
    type Item = usize;
    type IntoIter = Members;
    fn into_iter(self) -> Members {
        self.iter()
    }
}

/// Indices of a [`SubsetMask`] in increasing order.
#[derive(Clone, Debug)]
pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Members {}

/// A finite labeled set of alternatives.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroundSet {
    labels: Vec<String>,
}

impl GroundSet {
    pub fn new<I, S>(labels: I) -> Result<Arc<GroundSet>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::EmptyGround);
        }
        if labels.len() > MAX_ELEMENTS {
            return Err(Error::GroundTooLarge(labels.len()));
        }
        let mut seen = HashSet::with_capacity(labels.len());
        for label in &labels {
            if !seen.insert(label.as_str()) {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        Ok(Arc::new(GroundSet { labels }))
    }

    /// `prefix1, …, prefixN`.
    pub fn indexed(prefix: &str, n: usize) -> Result<Arc<GroundSet>> {
        GroundSet::new((1..=n).map(|i| format!("{prefix}{i}")))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.position(label)
            .ok_or_else(|| Error::UnknownLabel(label.to_owned()))
    }

    pub fn mask_of(&self, labels: &[&str]) -> Result<SubsetMask> {
        labels
            .iter()
            .map(|l| self.index_of(l))
            .collect::<Result<Vec<_>>>()
            .map(SubsetMask::from_indices)
    }

    pub fn full(&self) -> SubsetMask {
        SubsetMask::full(self.len())
    }

    /// `{a,b}` with members in index order.
    pub fn format_subset(&self, s: SubsetMask) -> String {
        let names: Vec<&str> = s.iter().map(|i| self.label(i)).collect();
        format!("{{{}}}", names.join(","))
    }
}

fn same_ground(a: &Arc<GroundSet>, b: &Arc<GroundSet>) -> Result<()> {
    if Arc::ptr_eq(a, b) || a == b {
        Ok(())
    } else {
        Err(Error::GroundMismatch)
    }
}

/// An arbitrary binary relation on a ground set.
///
/// No invariant is enforced here; [`Relation::validate_preorder`] turns a
/// relation into a [`Preorder`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    ground: Arc<GroundSet>,
    rows: Vec<u64>,
}

impl Relation {
    pub fn empty(ground: Arc<GroundSet>) -> Self {
        let n = ground.len();
        Relation {
            ground,
            rows: vec![0; n],
        }
    }

    pub fn identity(ground: Arc<GroundSet>) -> Self {
        let mut rel = Relation::empty(ground);
        for i in 0..rel.len() {
            rel.rows[i] = 1u64 << i;
        }
        rel
    }

    pub fn full(ground: Arc<GroundSet>) -> Self {
        let n = ground.len();
        Relation {
            rows: vec![SubsetMask::full(n).0; n],
            ground,
        }
    }

    pub fn from_rows(ground: Arc<GroundSet>, rows: Vec<u64>) -> Result<Self> {
        let n = ground.len();
        if rows.len() != n {
            return Err(Error::IndexOutOfRange {
                index: rows.len(),
                size: n,
            });
        }
        let full = SubsetMask::full(n).0;
        if let Some(row) = rows.iter().find(|r| **r & !full != 0) {
            return Err(Error::IndexOutOfRange {
                index: 63 - row.leading_zeros() as usize,
                size: n,
            });
        }
        Ok(Relation { ground, rows })
    }

    pub fn from_pairs<I>(ground: Arc<GroundSet>, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut rel = Relation::empty(ground);
        let n = rel.len();
        for (i, j) in pairs {
            for index in [i, j] {
                if index >= n {
                    return Err(Error::IndexOutOfRange { index, size: n });
                }
            }
            rel.rows[i] |= 1u64 << j;
        }
        Ok(rel)
    }

    /// Builds a relation from `(upper, lower)` label pairs.
    pub fn from_labeled_pairs(ground: Arc<GroundSet>, pairs: &[(&str, &str)]) -> Result<Self> {
        let indexed = pairs
            .iter()
            .map(|(a, b)| Ok((ground.index_of(a)?, ground.index_of(b)?)))
            .collect::<Result<Vec<_>>>()?;
        Relation::from_pairs(ground, indexed)
    }

    pub fn ground(&self) -> &Arc<GroundSet> {
        &self.ground
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn holds(&self, i: usize, j: usize) -> bool {
        self.rows[i] & (1u64 << j) != 0
    }

    pub fn insert(&mut self, i: usize, j: usize) {
        self.rows[i] |= 1u64 << j;
    }

    pub fn row(&self, i: usize) -> SubsetMask {
        SubsetMask(self.rows[i])
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn pair_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum()
    }

    /// All pairs `(i, j)` with `i` related to `j`, row-major.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, r)| SubsetMask(*r).iter().map(move |j| (i, j)))
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.len()).all(|i| self.holds(i, i))
    }

    pub fn reflexive_closure(&self) -> Relation {
        let mut rel = self.clone();
        for i in 0..rel.len() {
            rel.rows[i] |= 1u64 << i;
        }
        rel
    }

    /// Warshall's algorithm on bit rows.
    pub fn transitive_closure(&self) -> Relation {
        let mut rel = self.clone();
        let n = rel.len();
        for k in 0..n {
            let row_k = rel.rows[k];
            for i in 0..n {
                if rel.rows[i] & (1u64 << k) != 0 {
                    rel.rows[i] |= row_k;
                }
            }
        }
        rel
    }

    /// Number of ordered pairs in exactly one of the two relations.
    pub fn symmetric_difference_len(&self, other: &Relation) -> Result<usize> {
        same_ground(&self.ground, &other.ground)?;
        Ok(self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| (a ^ b).count_ones() as usize)
            .sum())
    }

    /// Every reflexivity and transitivity violation.
    pub fn violations(&self) -> ViolationList {
        let n = self.len();
        let mut found = Vec::new();
        for i in 0..n {
            if !self.holds(i, i) {
                found.push(Violation::NotReflexive { element: i });
            }
        }
        for i in 0..n {
            for j in self.row(i) {
                let missing = self.rows[j] & !self.rows[i];
                for k in SubsetMask(missing) {
                    found.push(Violation::NotTransitive { i, j, k });
                }
            }
        }
        ViolationList(found)
    }

    pub fn validate_preorder(self) -> Result<Preorder> {
        let violations = self.violations();
        if violations.is_empty() {
            Ok(Preorder::from_valid(self))
        } else {
            Err(Error::NotPreorder(violations))
        }
    }
}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<(&str, &str)> = self
            .pairs()
            .map(|(i, j)| (self.ground.label(i), self.ground.label(j)))
            .collect();
        f.debug_struct("Relation").field("pairs", &pairs).finish()
    }
}

/// A reflexive and transitive relation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Preorder {
    rel: Relation,
    /// `cols[j]` = `{ i : i ≿ j }`.
    cols: Vec<u64>,
}

impl Preorder {
    fn from_valid(rel: Relation) -> Self {
        let n = rel.len();
        let mut cols = vec![0u64; n];
        for (i, j) in rel.pairs() {
            cols[j] |= 1u64 << i;
        }
        Preorder { rel, cols }
    }

    /// The equality relation.
    pub fn equality(ground: Arc<GroundSet>) -> Self {
        Preorder::from_valid(Relation::identity(ground))
    }

    /// The everywhere-indifferent relation `X×X`.
    pub fn indifferent(ground: Arc<GroundSet>) -> Self {
        Preorder::from_valid(Relation::full(ground))
    }

    /// Reflexive-transitive closure of `(upper, lower)` pairs.
    pub fn generated_by<I>(ground: Arc<GroundSet>, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let rel = Relation::from_pairs(ground, pairs)?;
        Ok(Preorder::from_valid(
            rel.reflexive_closure().transitive_closure(),
        ))
    }

    /// Reflexive-transitive closure of labeled `(upper, lower)` pairs.
    pub fn generated_by_labels(ground: Arc<GroundSet>, pairs: &[(&str, &str)]) -> Result<Self> {
        let rel = Relation::from_labeled_pairs(ground, pairs)?;
        Ok(Preorder::from_valid(
            rel.reflexive_closure().transitive_closure(),
        ))
    }

    pub fn as_relation(&self) -> &Relation {
        &self.rel
    }

    pub fn into_relation(self) -> Relation {
        self.rel
    }

    pub fn ground(&self) -> &Arc<GroundSet> {
        self.rel.ground()
    }

    pub fn len(&self) -> usize {
        self.rel.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rel.is_empty()
    }

    pub fn full_set(&self) -> SubsetMask {
        SubsetMask::full(self.len())
    }

    /// `xᵢ ≿ xⱼ`.
    pub fn weakly(&self, i: usize, j: usize) -> bool {
        self.rel.holds(i, j)
    }

    /// `xᵢ ≻ xⱼ`.
    pub fn strictly(&self, i: usize, j: usize) -> bool {
        self.rel.holds(i, j) && !self.rel.holds(j, i)
    }

    /// `xᵢ ∼ xⱼ`.
    pub fn indifferent_pair(&self, i: usize, j: usize) -> bool {
        self.rel.holds(i, j) && self.rel.holds(j, i)
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.rel.holds(i, j) || self.rel.holds(j, i)
    }

    /// `x↓` (weak) or `{y : x ≻ y}` (strict).
    pub fn down_set(&self, x: usize, strict: bool) -> SubsetMask {
        let row = self.rel.rows[x];
        SubsetMask(if strict { row & !self.cols[x] } else { row })
    }

    /// `x↑` (weak) or `{y : y ≻ x}` (strict).
    pub fn up_set(&self, x: usize, strict: bool) -> SubsetMask {
        let col = self.cols[x];
        SubsetMask(if strict { col & !self.rel.rows[x] } else { col })
    }

    /// Strict up-sets of every element, as raw bit rows.
    pub(crate) fn strict_up_rows(&self) -> Vec<u64> {
        (0..self.len()).map(|x| self.up_set(x, true).0).collect()
    }

    pub fn asymmetric_part(&self) -> Relation {
        let rows = (0..self.len()).map(|x| self.down_set(x, true).0).collect();
        Relation {
            ground: self.ground().clone(),
            rows,
        }
    }

    pub fn symmetric_part(&self) -> Relation {
        let rows = (0..self.len())
            .map(|x| self.rel.rows[x] & self.cols[x])
            .collect();
        Relation {
            ground: self.ground().clone(),
            rows,
        }
    }

    /// The reversed order `≾`.
    pub fn converse(&self) -> Preorder {
        let rel = Relation {
            ground: self.ground().clone(),
            rows: self.cols.clone(),
        };
        Preorder {
            rel,
            cols: self.rel.rows.clone(),
        }
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..self.len()).all(|x| self.rel.rows[x] & self.cols[x] == 1u64 << x)
    }

    /// `≿ ∩ (Y×Y)` on a ground set made of `Y`'s labels in index order.
    pub fn restrict(&self, y: SubsetMask) -> Result<Preorder> {
        if y.is_empty() {
            return Err(Error::EmptySubset);
        }
        let members: Vec<usize> = y.iter().collect();
        let ground = GroundSet::new(members.iter().map(|&i| self.ground().label(i).to_owned()))?;
        let rows = members
            .iter()
            .map(|&i| {
                members
                    .iter()
                    .enumerate()
                    .filter(|(_, &j)| self.weakly(i, j))
                    .fold(0u64, |acc, (k, _)| acc | (1u64 << k))
            })
            .collect();
        Ok(Preorder::from_valid(Relation { ground, rows }))
    }

    fn check_subset(&self, s: SubsetMask) -> Result<()> {
        if s.is_empty() {
            return Err(Error::EmptySubset);
        }
        if !s.is_subset(self.full_set()) {
            return Err(Error::IndexOutOfRange {
                index: 63 - s.0.leading_zeros() as usize,
                size: self.len(),
            });
        }
        Ok(())
    }

    /// `M(S,≿)`: elements of `S` not strictly beaten inside `S`.
    pub fn maximal_elements(&self, s: SubsetMask) -> Result<SubsetMask> {
        self.check_subset(s)?;
        Ok(self.maximal_unchecked(s))
    }

    pub(crate) fn maximal_unchecked(&self, s: SubsetMask) -> SubsetMask {
        SubsetMask::from_indices(s.iter().filter(|&x| self.up_set(x, true).0 & s.0 == 0))
    }

    /// `m(S,≿)`: elements of `S` weakly above all of `S`.
    pub fn maximum_elements(&self, s: SubsetMask) -> Result<SubsetMask> {
        self.check_subset(s)?;
        Ok(SubsetMask::from_indices(
            s.iter().filter(|&x| s.is_subset(self.down_set(x, false))),
        ))
    }

    /// `M₁, M₂, …`: repeatedly peel off the maximal elements.
    pub fn layers(&self) -> Vec<SubsetMask> {
        let mut remaining = self.full_set();
        let mut out = Vec::new();
        while !remaining.is_empty() {
            let top = self.maximal_unchecked(remaining);
            out.push(top);
            remaining = remaining - top;
        }
        out
    }

    /// The `∼`-classes, ordered by smallest member.
    pub fn classes(&self) -> Vec<SubsetMask> {
        let mut seen = SubsetMask::EMPTY;
        let mut out = Vec::new();
        for x in 0..self.len() {
            if seen.contains(x) {
                continue;
            }
            let class = SubsetMask(self.rel.rows[x] & self.cols[x]);
            seen = seen | class;
            out.push(class);
        }
        out
    }

    /// First incomparable pair in row-major order.
    pub fn incomparable_pair(&self) -> Option<(usize, usize)> {
        let n = self.len();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .find(|&(i, j)| !self.comparable(i, j))
    }

    pub fn is_total(&self) -> bool {
        self.incomparable_pair().is_none()
    }

    pub fn to_total(&self) -> Result<TotalPreorder> {
        if let Some((a, b)) = self.incomparable_pair() {
            let g = self.ground();
            return Err(Error::NotTotal(
                g.label(a).to_owned(),
                g.label(b).to_owned(),
            ));
        }
        Ok(TotalPreorder::from_blocks_unchecked(
            self.ground().clone(),
            self.layers(),
        ))
    }

    /// `≿ ⊆ ≿*` and `≻ ⊆ ≻*`.
    pub fn is_completed_by(&self, cand: &TotalPreorder) -> Result<bool> {
        same_ground(self.ground(), cand.ground())?;
        let levels = cand.levels();
        for x in 0..self.len() {
            for y in self.down_set(x, false) {
                if levels[x] > levels[y] {
                    return Ok(false);
                }
            }
            for y in self.down_set(x, true) {
                if levels[x] >= levels[y] {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Transitive reduction of the strict order between `∼`-classes.
    pub fn hasse_edges(&self) -> HasseDiagram {
        let classes = self.classes();
        let class_of = |x: usize| classes.iter().position(|c| c.contains(x)).unwrap_or(0);
        let mut edges = Vec::new();
        for (ci, class) in classes.iter().enumerate() {
            let rep = class.first().unwrap_or(0);
            let below = self.down_set(rep, true);
            let mut covered = SubsetMask::EMPTY;
            for y in below {
                covered = covered | self.down_set(y, true);
            }
            let covers = below - covered;
            let mut targets: Vec<usize> = covers.iter().map(class_of).collect();
            targets.dedup();
            edges.extend(targets.into_iter().map(|cj| (ci, cj)));
        }
        edges.sort_unstable();
        edges.dedup();
        let labels = classes
            .iter()
            .map(|c| {
                let mut names: Vec<&str> = c.iter().map(|i| self.ground().label(i)).collect();
                names.sort_unstable();
                names.join(",")
            })
            .collect();
        HasseDiagram {
            nodes: classes,
            labels,
            edges,
        }
    }
}

impl fmt::Debug for Preorder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let hasse = self.hasse_edges();
        let edges: Vec<String> = hasse
            .edges
            .iter()
            .map(|&(a, b)| format!("{} > {}", hasse.labels[a], hasse.labels[b]))
            .collect();
        f.debug_struct("Preorder")
            .field("classes", &hasse.labels)
            .field("covers", &edges)
            .finish()
    }
}

/// Covering edges between indifference classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HasseDiagram {
    /// One node per `∼`-class, ordered by smallest member.
    pub nodes: Vec<SubsetMask>,
    /// Member labels, sorted and joined by `,`.
    pub labels: Vec<String>,
    /// `(upper, lower)` node indices.
    pub edges: Vec<(usize, usize)>,
}

/// A complete preorder stored as an ordered partition; `blocks[0]` is the top
/// indifference class.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TotalPreorder {
    ground: Arc<GroundSet>,
    blocks: Vec<SubsetMask>,
    levels: Vec<u8>,
}

impl TotalPreorder {
    pub fn new(ground: Arc<GroundSet>, blocks: Vec<SubsetMask>) -> Result<Self> {
        let mut seen = SubsetMask::EMPTY;
        for b in &blocks {
            if b.is_empty() || !(seen & *b).is_empty() {
                return Err(Error::NotAPartition);
            }
            seen = seen | *b;
        }
        if seen != ground.full() {
            return Err(Error::NotAPartition);
        }
        Ok(Self::from_blocks_unchecked(ground, blocks))
    }

    pub(crate) fn from_blocks_unchecked(ground: Arc<GroundSet>, blocks: Vec<SubsetMask>) -> Self {
        let mut levels = vec![0u8; ground.len()];
        for (l, b) in blocks.iter().enumerate() {
            for x in b.iter() {
                levels[x] = l as u8;
            }
        }
        TotalPreorder {
            ground,
            blocks,
            levels,
        }
    }

    /// From a surjective level word (`levels[x]` = block of `x`).
    pub fn from_levels(ground: Arc<GroundSet>, levels: &[u8]) -> Result<Self> {
        if levels.len() != ground.len() {
            return Err(Error::NotAPartition);
        }
        let k = levels.iter().map(|&l| l as usize + 1).max().unwrap_or(0);
        let mut blocks = vec![SubsetMask::EMPTY; k];
        for (x, &l) in levels.iter().enumerate() {
            blocks[l as usize].insert(x);
        }
        TotalPreorder::new(ground, blocks)
    }

    /// From blocks of labels, top block first.
    pub fn from_labeled_blocks(ground: Arc<GroundSet>, blocks: &[&[&str]]) -> Result<Self> {
        let masks = blocks
            .iter()
            .map(|b| ground.mask_of(b))
            .collect::<Result<Vec<_>>>()?;
        TotalPreorder::new(ground, masks)
    }

    /// All elements in one block.
    pub fn indifferent(ground: Arc<GroundSet>) -> Self {
        let full = ground.full();
        Self::from_blocks_unchecked(ground, vec![full])
    }

    pub fn ground(&self) -> &Arc<GroundSet> {
        &self.ground
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    pub fn blocks(&self) -> &[SubsetMask] {
        &self.blocks
    }

    pub fn levels(&self) -> &[u8] {
        &self.levels
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.len()).collect()
    }

    pub fn is_linear(&self) -> bool {
        self.blocks.iter().all(|b| b.len() == 1)
    }

    /// `|x↓|`: the size of `x`'s block plus everything below it.
    pub fn down_set_len(&self, x: usize) -> usize {
        self.blocks[self.levels[x] as usize..]
            .iter()
            .map(|b| b.len())
            .sum()
    }

    pub fn strict_up_set(&self, x: usize) -> SubsetMask {
        self.blocks[..self.levels[x] as usize]
            .iter()
            .fold(SubsetMask::EMPTY, |acc, b| acc | *b)
    }

    pub fn weakly(&self, i: usize, j: usize) -> bool {
        self.levels[i] <= self.levels[j]
    }

    pub fn to_preorder(&self) -> Preorder {
        let n = self.len();
        let rows = (0..n)
            .map(|x| {
                self.blocks[self.levels[x] as usize..]
                    .iter()
                    .fold(0u64, |acc, b| acc | b.0)
            })
            .collect();
        Preorder::from_valid(Relation {
            ground: self.ground.clone(),
            rows,
        })
    }

    /// `self ⊆ other` as sets of pairs: `other` merges consecutive blocks of
    /// `self`.
    pub fn is_contained_in(&self, other: &TotalPreorder) -> bool {
        let n = self.len();
        n == other.len() && (0..n).all(|i| (0..n).all(|j| !self.weakly(i, j) || other.weakly(i, j)))
    }

    fn block_members(&self) -> impl Iterator<Item = Members> + '_ {
        self.blocks.iter().map(|b| b.iter())
    }

    /// `{a,x} > {a1} > {a2}`; `≻` between blocks when `unicode` is set.
    pub fn ranking_text(&self, unicode: bool) -> String {
        let sep = if unicode { " ≻ " } else { " > " };
        self.blocks
            .iter()
            .map(|b| self.ground.format_subset(*b))
            .collect::<Vec<_>>()
            .join(sep)
    }
}

impl fmt::Display for TotalPreorder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.ranking_text(false))
    }
}

impl fmt::Debug for TotalPreorder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TotalPreorder({self})")
    }
}

impl PartialOrd for TotalPreorder {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Block by block, comparing member index lists lexicographically.
impl Ord for TotalPreorder {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.block_members().zip(other.block_members()) {
            match a.cmp(b) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        self.blocks
            .len()
            .cmp(&other.blocks.len())
            .then_with(|| self.ground.labels().cmp(other.ground.labels()))
    }
}
