//! Generators for standard order families and the complete preorders known
//! to be their best approximations.

use std::sync::Arc;

use rand::Rng;

use crate::error::{Error, Result};
use crate::order::{GroundSet, Preorder, Relation, SubsetMask, TotalPreorder};

const LETTERS: &[u8] = b"xyzuvw";

/// A family instance with its parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// `A ≿ B` iff `A ⊇ B` over all subsets of a `z`-letter set.
    Containment {
        z: usize,
    },
    /// Set partitions of a `z`-letter set, coarser above finer.
    Refinement {
        z: usize,
    },
    /// Words of length `1..=k` over `alphabet` letters; a word is above its
    /// prefixes. `reverse` flips the order.
    WordPrefix {
        alphabet: usize,
        k: usize,
        reverse: bool,
    },
    /// The `m × m` grid under the product order.
    Coordinatewise {
        m: usize,
    },
    Fence {
        k: usize,
    },
    Crown {
        k: usize,
    },
    Chain {
        n: usize,
    },
    Equality {
        n: usize,
    },
    Indifferent {
        n: usize,
    },
}

impl FamilySpec {
    pub fn generate(&self) -> Result<Preorder> {
        match *self {
            FamilySpec::Containment { z } => containment_order(z),
            FamilySpec::Refinement { z } => refinement_order(z),
            FamilySpec::WordPrefix {
                alphabet,
                k,
                reverse,
            } => {
                let p = word_prefix_order(alphabet, k)?;
                Ok(if reverse { p.converse() } else { p })
            }
            FamilySpec::Coordinatewise { m } => coordinatewise_order(m),
            FamilySpec::Fence { k } => fence(k),
            FamilySpec::Crown { k } => crown(k),
            FamilySpec::Chain { n } => chain(n),
            FamilySpec::Equality { n } => equality(n),
            FamilySpec::Indifferent { n } => indifferent(n),
        }
    }

    /// The complete preorder known in closed form to be the unique best
    /// approximation of the generated order.
    pub fn expected_bca(&self) -> Result<TotalPreorder> {
        match *self {
            FamilySpec::Containment { z } => cardinality_ordering(z),
            FamilySpec::Refinement { z } => cell_count_ordering(z),
            FamilySpec::WordPrefix {
                alphabet,
                k,
                reverse: false,
            } => word_length_ordering(alphabet, k),
            FamilySpec::WordPrefix { reverse: true, .. } => Err(Error::ParameterMismatch(
                "the reversed word order has no closed-form best approximation".into(),
            )),
            FamilySpec::Coordinatewise { m } => sum_ordering(m),
            FamilySpec::Fence { k } | FamilySpec::Crown { k } => {
                let p = self.generate()?;
                let tops = SubsetMask::from_indices((0..k).filter(|i| i % 2 == 1));
                let bottoms = SubsetMask::from_indices((0..k).filter(|i| i % 2 == 0));
                TotalPreorder::new(p.ground().clone(), vec![tops, bottoms])
            }
            FamilySpec::Chain { n } => chain(n)?.to_total(),
            FamilySpec::Equality { n } | FamilySpec::Indifferent { n } => {
                Ok(TotalPreorder::indifferent(indexed(n)?))
            }
        }
    }
}

fn indexed(n: usize) -> Result<Arc<GroundSet>> {
    if n == 0 {
        return Err(Error::BadParameter("n must be at least 1".into()));
    }
    GroundSet::indexed("x", n)
}

fn check_range(name: &str, value: usize, min: usize, max: usize) -> Result<()> {
    if value < min {
        return Err(Error::BadParameter(format!(
            "{name} must be at least {min}"
        )));
    }
    if value > max {
        return Err(Error::too_large(
            "family generation",
            value as u128,
            max as u128,
        ));
    }
    Ok(())
}

fn subset_label(bits: usize, z: usize) -> String {
    let members: String = (0..z)
        .filter(|i| bits >> i & 1 == 1)
        .map(|i| (LETTERS[i] as char).to_string())
        .collect::<Vec<_>>()
        .join(",");
    format!("{{{members}}}")
}

/// Subsets in increasing bitmask order, labelled `{x,y}`; the empty set is `{}`.
fn containment_ground(z: usize) -> Result<Arc<GroundSet>> {
    check_range("z", z, 1, 6)?;
    GroundSet::new((0..1usize << z).map(|s| subset_label(s, z)))
}

pub fn containment_order(z: usize) -> Result<Preorder> {
    let ground = containment_ground(z)?;
    let size = 1usize << z;
    let rows = (0..size)
        .map(|a| {
            (0..size)
                .filter(|&b| b & !a == 0)
                .fold(0u64, |r, b| r | 1 << b)
        })
        .collect();
    Relation::from_rows(ground, rows)?.validate_preorder()
}

/// Larger subsets strictly above smaller ones.
pub fn cardinality_ordering(z: usize) -> Result<TotalPreorder> {
    let ground = containment_ground(z)?;
    let levels: Vec<u8> = (0..1usize << z)
        .map(|s| (z - s.count_ones() as usize) as u8)
        .collect();
    TotalPreorder::from_levels(ground, &levels)
}

/// Restricted growth strings of length `z` in lexicographic order; entry `i`
/// is the cell of letter `i`.
fn set_partitions(z: usize) -> Vec<Vec<u8>> {
    fn extend(prefix: &mut Vec<u8>, max: u8, z: usize, out: &mut Vec<Vec<u8>>) {
        if prefix.len() == z {
            out.push(prefix.clone());
            return;
        }
        for c in 0..=max + 1 {
            prefix.push(c);
            extend(prefix, max.max(c), z, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    let mut prefix = vec![0u8];
    extend(&mut prefix, 0, z, &mut out);
    out
}

fn cells(rgs: &[u8]) -> Vec<u64> {
    let k = *rgs.iter().max().unwrap() as usize + 1;
    let mut cells = vec![0u64; k];
    for (i, &c) in rgs.iter().enumerate() {
        cells[c as usize] |= 1 << i;
    }
    cells
}

/// Cells ordered by smallest member, members in letter order: `x|yz`.
fn partition_label(rgs: &[u8]) -> String {
    cells(rgs)
        .iter()
        .map(|&c| {
            (0..rgs.len())
                .filter(|i| c >> i & 1 == 1)
                .map(|i| LETTERS[i] as char)
                .collect::<String>()
        })
        .collect::<Vec<_>>()
        .join("|")
}

fn refinement_ground(z: usize) -> Result<(Arc<GroundSet>, Vec<Vec<u8>>)> {
    check_range("z", z, 1, 5)?;
    let parts = set_partitions(z);
    let ground = GroundSet::new(parts.iter().map(|p| partition_label(p)))?;
    Ok((ground, parts))
}

pub fn refinement_order(z: usize) -> Result<Preorder> {
    let (ground, parts) = refinement_ground(z)?;
    let cell_lists: Vec<Vec<u64>> = parts.iter().map(|p| cells(p)).collect();
    let coarser = |s: &[u64], t: &[u64]| t.iter().all(|&tc| s.iter().any(|&sc| tc & !sc == 0));
    let rows = cell_lists
        .iter()
        .map(|s| {
            cell_lists
                .iter()
                .enumerate()
                .filter(|(_, t)| coarser(s, t))
                .fold(0u64, |r, (j, _)| r | 1 << j)
        })
        .collect();
    Relation::from_rows(ground, rows)?.validate_preorder()
}

/// Partitions with fewer cells strictly above those with more.
pub fn cell_count_ordering(z: usize) -> Result<TotalPreorder> {
    let (ground, parts) = refinement_ground(z)?;
    let levels: Vec<u8> = parts.iter().map(|p| *p.iter().max().unwrap()).collect();
    TotalPreorder::from_levels(ground, &levels)
}

/// Words ordered by length, then lexicographically.
fn words(alphabet: usize, k: usize) -> Result<Vec<String>> {
    check_range("alphabet", alphabet, 1, 26)?;
    check_range("k", k, 1, 64)?;
    let total = (1..=k as u32)
        .map(|i| (alphabet as u128).saturating_pow(i))
        .fold(0u128, u128::saturating_add);
    if total > 64 {
        return Err(Error::too_large("word order generation", total, 64u128));
    }
    let mut out = Vec::new();
    let mut layer = vec![String::new()];
    for _ in 0..k {
        layer = layer
            .iter()
            .flat_map(|w| (0..alphabet).map(move |c| format!("{w}{}", (b'a' + c as u8) as char)))
            .collect();
        out.extend(layer.iter().cloned());
    }
    Ok(out)
}

pub fn word_prefix_order(alphabet: usize, k: usize) -> Result<Preorder> {
    let ws = words(alphabet, k)?;
    let ground = GroundSet::new(ws.iter().cloned())?;
    let pairs: Vec<(usize, usize)> = ws
        .iter()
        .enumerate()
        .flat_map(|(i, x)| {
            ws.iter()
                .enumerate()
                .filter(move |(_, y)| x.starts_with(y.as_str()))
                .map(move |(j, _)| (i, j))
        })
        .collect();
    Relation::from_pairs(ground, pairs)?.validate_preorder()
}

/// Longer words strictly above shorter ones.
pub fn word_length_ordering(alphabet: usize, k: usize) -> Result<TotalPreorder> {
    let ws = words(alphabet, k)?;
    let levels: Vec<u8> = ws.iter().map(|w| (k - w.len()) as u8).collect();
    TotalPreorder::from_levels(GroundSet::new(ws)?, &levels)
}

type Point = (usize, usize);

/// Grid points `(i,j)` with `1 ≤ i,j ≤ m` in row-major order.
fn grid(m: usize) -> Result<(Arc<GroundSet>, Vec<Point>)> {
    check_range("m", m, 1, 8)?;
    let points: Vec<Point> = (1..=m).flat_map(|i| (1..=m).map(move |j| (i, j))).collect();
    let ground = GroundSet::new(points.iter().map(|(i, j)| format!("({i},{j})")))?;
    Ok((ground, points))
}

pub fn coordinatewise_order(m: usize) -> Result<Preorder> {
    let (ground, points) = grid(m)?;
    let pairs: Vec<(usize, usize)> = (0..points.len())
        .flat_map(|a| (0..points.len()).map(move |b| (a, b)))
        .filter(|&(a, b)| points[a].0 >= points[b].0 && points[a].1 >= points[b].1)
        .collect();
    Relation::from_pairs(ground, pairs)?.validate_preorder()
}

/// Points with a larger coordinate sum strictly above.
pub fn sum_ordering(m: usize) -> Result<TotalPreorder> {
    let (ground, points) = grid(m)?;
    let levels: Vec<u8> = points.iter().map(|(i, j)| (2 * m - i - j) as u8).collect();
    TotalPreorder::from_levels(ground, &levels)
}

fn zigzag(k: usize) -> Result<Vec<(usize, usize)>> {
    if k < 4 || k % 2 == 1 {
        return Err(Error::BadParameter(format!(
            "k must be even and at least 4, got {k}"
        )));
    }
    check_range("k", k, 4, 64)?;
    // Zero-based: odd positions (x2, x4, ...) are the tops.
    Ok((1..k)
        .step_by(2)
        .flat_map(|t| [(t, t - 1), (t, t + 1)])
        .filter(|&(_, b)| b < k)
        .collect())
}

/// `x2 ≻ x1, x2 ≻ x3, x4 ≻ x3, …, xk ≻ x(k−1)`.
pub fn fence(k: usize) -> Result<Preorder> {
    Preorder::generated_by(indexed(k)?, zigzag(k)?)
}

/// The fence closed into a cycle by `xk ≻ x1`.
pub fn crown(k: usize) -> Result<Preorder> {
    let mut edges = zigzag(k)?;
    edges.push((k - 1, 0));
    Preorder::generated_by(indexed(k)?, edges)
}

/// `x1 ≻ x2 ≻ … ≻ xn`.
pub fn chain(n: usize) -> Result<Preorder> {
    Preorder::generated_by(indexed(n)?, (1..n).map(|i| (i - 1, i)))
}

pub fn equality(n: usize) -> Result<Preorder> {
    Ok(Preorder::equality(indexed(n)?))
}

pub fn indifferent(n: usize) -> Result<Preorder> {
    Ok(Preorder::indifferent(indexed(n)?))
}

/// Closure of independent random pairs, each present with probability
/// `density`, on `x1..xn`.
pub fn random_preorder<R: Rng + ?Sized>(n: usize, density: f64, rng: &mut R) -> Result<Preorder> {
    if !(0.0..=1.0).contains(&density) {
        return Err(Error::BadParameter(format!(
            "density {density} is not in [0, 1]"
        )));
    }
    let ground = indexed(n)?;
    let mut rel = Relation::identity(ground);
    for i in 0..n {
        for j in 0..n {
            if i != j && rng.gen_bool(density) {
                rel.insert(i, j);
            }
        }
    }
    rel.transitive_closure().validate_preorder()
}
