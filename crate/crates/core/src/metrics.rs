//! Distances between preorders: the top-difference semimetric `D` and the
//! Kemeny-Snell-Bogart metric.

use crate::completions::{enumerate_completions, enumerate_total_preorders, CompletionFilter};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::order::{Preorder, SubsetMask, TotalPreorder};

/// `|M(S,p) △ M(S,q)|` for one menu `S`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MenuDelta {
    pub menu: SubsetMask,
    pub delta: usize,
}

fn same_ground(p: &Preorder, q: &Preorder) -> Result<()> {
    if p.ground() == q.ground() {
        Ok(())
    } else {
        Err(Error::GroundMismatch)
    }
}

pub fn delta_menu(p: &Preorder, q: &Preorder, menu: SubsetMask) -> Result<MenuDelta> {
    same_ground(p, q)?;
    let mp = p.maximal_elements(menu)?;
    let mq = q.maximal_elements(menu)?;
    Ok(MenuDelta {
        menu,
        delta: ((mp - mq) | (mq - mp)).len(),
    })
}

/// `D(p,q)` by summing `Δ_S` over every nonempty menu.
pub fn top_difference_direct(p: &Preorder, q: &Preorder, limits: &Limits) -> Result<u128> {
    same_ground(p, q)?;
    let n = p.len();
    if n > limits.direct_max_n {
        return Err(Error::too_large(
            "definitional top-difference sweep",
            n as u128,
            limits.direct_max_n as u128,
        ));
    }
    let up_p = p.strict_up_rows();
    let up_q = q.strict_up_rows();
    let mut total = 0u128;
    for s in 1u64..(1u64 << n) {
        let mut mp = 0u64;
        let mut mq = 0u64;
        for x in SubsetMask(s) {
            if up_p[x] & s == 0 {
                mp |= 1 << x;
            }
            if up_q[x] & s == 0 {
                mq |= 1 << x;
            }
        }
        total += (mp ^ mq).count_ones() as u128;
    }
    Ok(total)
}

/// Number of menus containing `x` in which `x` is maximal for exactly one
/// relation, given the strict up-sets of `x` under each.
fn element_term(n: usize, up_p: u64, up_q: u64) -> u128 {
    let free = |u: u64| 1u128 << (n - 1 - u.count_ones() as usize);
    free(up_p) + free(up_q) - 2 * free(up_p | up_q)
}

/// `D(p,q)` in closed form, polynomial in `n`.
pub fn top_difference_fast(p: &Preorder, q: &Preorder) -> Result<u128> {
    same_ground(p, q)?;
    let n = p.len();
    Ok((0..n)
        .map(|x| element_term(n, p.up_set(x, true).0, q.up_set(x, true).0))
        .sum())
}

/// Distance evaluator from one fixed preorder to many complete preorders
/// given as level words.
pub(crate) struct FastKernel {
    n: usize,
    up: Vec<u64>,
    prefix: Vec<u64>,
}

impl FastKernel {
    pub(crate) fn new(base: &Preorder) -> Self {
        FastKernel {
            n: base.len(),
            up: base.strict_up_rows(),
            prefix: vec![0; base.len() + 1],
        }
    }

    /// `D(base, t)` where element `x` sits in block `levels[x]` of `k` blocks.
    pub(crate) fn distance_to_levels(&mut self, levels: &[u8], k: usize) -> u128 {
        self.prefix[..=k].iter_mut().for_each(|m| *m = 0);
        for (x, &l) in levels.iter().enumerate() {
            self.prefix[l as usize + 1] |= 1 << x;
        }
        for l in 1..=k {
            self.prefix[l] |= self.prefix[l - 1];
        }
        levels
            .iter()
            .enumerate()
            .map(|(x, &l)| element_term(self.n, self.up[x], self.prefix[l as usize]))
            .sum()
    }

    pub(crate) fn distance_to(&mut self, t: &TotalPreorder) -> u128 {
        let k = t.blocks().len();
        self.distance_to_levels(t.levels(), k)
    }
}

/// `αₓ(p,q)`: how many other elements are strictly above `x` in neither relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaProfile {
    pub alpha: Vec<usize>,
}

pub fn alpha_profile(p: &Preorder, q: &Preorder) -> Result<AlphaProfile> {
    same_ground(p, q)?;
    let n = p.len();
    Ok(AlphaProfile {
        alpha: (0..n)
            .map(|x| n - 1 - (p.up_set(x, true) | q.up_set(x, true)).len())
            .collect(),
    })
}

/// The other elements split by whether they are strictly above `x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AlphaSets {
    /// Above `x` in neither relation.
    pub a: SubsetMask,
    /// Above `x` in the first relation only.
    pub b: SubsetMask,
    /// Above `x` in the second relation only.
    pub c: SubsetMask,
}

impl AlphaSets {
    /// Menus containing `x` where `x` is maximal for exactly one relation:
    /// `2^|A|·(2^|B| + 2^|C| − 2)`.
    pub fn theta(&self) -> u128 {
        (1u128 << self.a.len()) * ((1u128 << self.b.len()) + (1u128 << self.c.len()) - 2)
    }
}

pub fn alpha_sets(p: &Preorder, q: &Preorder, x: usize) -> Result<AlphaSets> {
    same_ground(p, q)?;
    let n = p.len();
    if x >= n {
        return Err(Error::IndexOutOfRange { index: x, size: n });
    }
    let up_p = p.up_set(x, true);
    let up_q = q.up_set(x, true);
    let others = p.full_set() - SubsetMask::singleton(x);
    Ok(AlphaSets {
        a: others - (up_p | up_q),
        b: up_p - up_q,
        c: up_q - up_p,
    })
}

/// `|p △ q|` as sets of ordered pairs.
pub fn ksb_distance(p: &Preorder, q: &Preorder) -> Result<u128> {
    p.as_relation()
        .symmetric_difference_len(q.as_relation())
        .map(|d| d as u128)
}

/// Complete preorders nearest to a base under the Kemeny-Snell-Bogart metric,
/// set against the base's strict completions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KsbReport {
    pub min_distance: u128,
    pub minimizers: Vec<TotalPreorder>,
    pub strict_completions: Vec<TotalPreorder>,
    /// Every strict completion attains `min_distance`.
    pub strict_completions_optimal: bool,
}

/// Sweeps every complete preorder and checks that the strict completions of
/// `base` are among the nearest ones.
pub fn ksb_best_approximations(base: &Preorder, limits: &Limits) -> Result<KsbReport> {
    let n = base.len();
    if n > limits.ksb_sweep_max_n {
        return Err(Error::too_large(
            "KSB minimizer sweep",
            n as u128,
            limits.ksb_sweep_max_n as u128,
        ));
    }
    let sweep_limits = Limits {
        total_enum_max_n: limits.total_enum_max_n.max(n),
        ..*limits
    };
    let mut min_distance = u128::MAX;
    let mut minimizers = Vec::new();
    for t in enumerate_total_preorders(base.ground().clone(), &sweep_limits)? {
        let d = ksb_distance(base, &t.to_preorder())?;
        if d < min_distance {
            min_distance = d;
            minimizers.clear();
        }
        if d == min_distance {
            minimizers.push(t);
        }
    }
    minimizers.sort();
    let mut strict_completions: Vec<_> =
        enumerate_completions(base, CompletionFilter::Strict, limits)?.collect();
    strict_completions.sort();
    let strict_completions_optimal = strict_completions
        .iter()
        .all(|t| minimizers.binary_search(t).is_ok());
    Ok(KsbReport {
        min_distance,
        minimizers,
        strict_completions,
        strict_completions_optimal,
    })
}
