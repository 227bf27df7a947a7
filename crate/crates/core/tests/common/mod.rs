//! Independent brute-force oracles shared by the integration suites. They
//! use only the public relation API and recompute everything from the
//! definitions.
#![allow(dead_code)]

use std::sync::Arc;

use bca::{GroundSet, Preorder, Relation, SubsetMask, TotalPreorder};
use rand::Rng;

/// Every preorder on `n` elements, by testing transitivity of each
/// reflexive off-diagonal pattern on a boolean matrix.
pub fn all_preorders(n: usize) -> Vec<Preorder> {
    let g = GroundSet::indexed("x", n).unwrap();
    let cells: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|(i, j)| i != j)
        .collect();
    let mut out = Vec::new();
    for pattern in 0u64..1 << cells.len() {
        let mut m = vec![vec![false; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = true;
        }
        for (b, &(i, j)) in cells.iter().enumerate() {
            if pattern >> b & 1 == 1 {
                m[i][j] = true;
            }
        }
        let transitive =
            (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| !(m[i][j] && m[j][k]) || m[i][k])));
        if transitive {
            let pairs = (0..n).flat_map(|i| (0..n).map(move |j| (i, j)));
            let pairs: Vec<_> = pairs.filter(|&(i, j)| m[i][j]).collect();
            out.push(
                Relation::from_pairs(g.clone(), pairs)
                    .unwrap()
                    .validate_preorder()
                    .unwrap(),
            );
        }
    }
    out
}

/// Every complete preorder, as the level functions `X → {0..k-1}` that hit
/// every level.
pub fn all_total_preorders(g: &Arc<GroundSet>) -> Vec<TotalPreorder> {
    let n = g.len();
    let mut out = Vec::new();
    let mut word = vec![0u8; n];
    loop {
        let max = *word.iter().max().unwrap() as usize;
        if (0..=max).all(|l| word.iter().any(|&w| w as usize == l)) {
            out.push(TotalPreorder::from_levels(g.clone(), &word).unwrap());
        }
        let mut i = 0;
        while i < n && word[i] as usize == n - 1 {
            word[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
        word[i] += 1;
    }
    out
}

/// `D` from the definition: the maxima of every nonempty menu.
pub fn d_oracle(p: &Preorder, q: &Preorder) -> u128 {
    let n = p.len();
    let mut total = 0u128;
    for s in 1u64..1 << n {
        let menu = SubsetMask(s);
        let mp = p.maximal_elements(menu).unwrap();
        let mq = q.maximal_elements(menu).unwrap();
        total += ((mp - mq) | (mq - mp)).len() as u128;
    }
    total
}

/// Sum over elements of `2^|x↓|`, reading the down-sets off the relation.
pub fn index_oracle(t: &TotalPreorder) -> u128 {
    let p = t.to_preorder();
    let n = p.len();
    (0..n)
        .map(|x| 1u128 << (0..n).filter(|&y| p.weakly(x, y)).count())
        .sum()
}

/// Minimum of `D(p, ·)` over all complete preorders and every minimizer.
pub fn bca_oracle(p: &Preorder) -> (u128, Vec<TotalPreorder>) {
    let mut best = u128::MAX;
    let mut argmin = Vec::new();
    for t in all_total_preorders(p.ground()) {
        let d = d_oracle(p, &t.to_preorder());
        if d < best {
            best = d;
            argmin.clear();
        }
        if d == best {
            argmin.push(t);
        }
    }
    argmin.sort();
    (best, argmin)
}

/// A seeded random preorder with a random pair density, so that sparse and
/// dense shapes both occur.
pub fn random_preorder<R: Rng>(n: usize, rng: &mut R) -> Preorder {
    let density = rng.gen_range(0.0..0.45);
    bca::families::random_preorder(n, density, rng).unwrap()
}
