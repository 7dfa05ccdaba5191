//! Permissibility, dimension pairs, the map from fillings to monomials, and
//! Betti numbers by brute-force enumeration.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::filling::{Filling, Tableau};
use crate::hessenberg::HessenbergFunction;
use crate::monomial::Monomial;
use crate::shape::{Cell, Shape};

/// Upper bound on `n` for anything that enumerates fillings or builds trees.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SizeCap(pub usize);

impl SizeCap {
    pub const DEFAULT: SizeCap = SizeCap(9);

    pub fn check(self, n: usize) -> Result<()> {
        if n > self.0 {
            Err(Error::SizeLimitExceeded { n, limit: self.0 })
        } else {
            Ok(())
        }
    }
}

impl Default for SizeCap {
    fn default() -> Self {
        Self::DEFAULT
    }
}

/// The first horizontal adjacency `k | j` with `k > h(j)`, if any.
fn first_violation(h: &HessenbergFunction, t: &impl Tableau) -> Option<(usize, usize)> {
    t.entries().into_iter().find_map(|(cell, k)| {
        let j = t.value_at(Cell::new(cell.row, cell.col + 1))?;
        (k > h.at(j)).then_some((k, j))
    })
}

fn check_range(h: &HessenbergFunction, t: &impl Tableau) -> Result<()> {
    match t.entries().iter().map(|&(_, v)| v).max() {
        Some(max) if max > h.n() => Err(Error::SizeMismatch {
            expected: h.n(),
            found: max,
        }),
        _ => Ok(()),
    }
}

/// Every horizontal adjacency `k` immediately left of `j` has `k <= h(j)`.
pub fn is_permissible(h: &HessenbergFunction, t: &impl Tableau) -> bool {
    check_range(h, t).is_ok() && first_violation(h, t).is_none()
}

/// The dimension pairs `(a, b)` of a filling, sorted.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DimensionPairSet {
    pairs: BTreeSet<(usize, usize)>,
}

impl DimensionPairSet {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.pairs.contains(&(a, b))
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs.iter().copied()
    }

    /// `D_y`: the pairs whose larger entry is `y`.
    pub fn with_larger(&self, y: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs.iter().copied().filter(move |&(_, b)| b == y)
    }

    /// The monomial `prod x_b` over all pairs `(a, b)`.
    pub fn monomial(&self, nvars: usize) -> Monomial {
        let mut exps = vec![0u32; nvars];
        for &(_, b) in &self.pairs {
            exps[b - 1] += 1;
        }
        Monomial::new(exps)
    }
}

impl FromIterator<(usize, usize)> for DimensionPairSet {
    fn from_iter<I: IntoIterator<Item = (usize, usize)>>(iter: I) -> Self {
        Self {
            pairs: iter.into_iter().collect(),
        }
    }
}

/// `(1,3),(2,3)`; the empty set displays as nothing.
impl fmt::Display for DimensionPairSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .pairs
            .iter()
            .map(|(a, b)| format!("({a},{b})"))
            .collect();
        f.write_str(&parts.join(","))
    }
}

/// Pairs `(a, b)` with `b > a`, `b` below `a` in its column or in any column
/// strictly left of it, and `b <= h(c)` when a box holding `c` sits
/// immediately right of `a`.
///
/// Works on partial fillings too; columns are compared by index, so gaps in
/// a row are taken literally.
pub fn dimension_pairs(h: &HessenbergFunction, t: &impl Tableau) -> Result<DimensionPairSet> {
    check_range(h, t)?;
    if let Some((left, right)) = first_violation(h, t) {
        return Err(Error::NotPermissible { left, right });
    }
    Ok(dimension_pairs_unchecked(h, t))
}

fn dimension_pairs_unchecked(h: &HessenbergFunction, t: &impl Tableau) -> DimensionPairSet {
    let entries = t.entries();
    let mut pairs = BTreeSet::new();
    for &(ca, a) in &entries {
        let bound = t.value_at(Cell::new(ca.row, ca.col + 1)).map(|c| h.at(c));
        for &(cb, b) in &entries {
            if b <= a {
                continue;
            }
            let placed = (cb.col == ca.col && cb.row > ca.row) || cb.col < ca.col;
            if placed && bound.is_none_or(|hc| b <= hc) {
                pairs.insert((a, b));
            }
        }
    }
    DimensionPairSet { pairs }
}

/// The monomial whose `x_j` exponent is `|D_j|`.
pub fn phi(h: &HessenbergFunction, t: &Filling) -> Result<Monomial> {
    if t.n() != h.n() {
        return Err(Error::SizeMismatch {
            expected: h.n(),
            found: t.n(),
        });
    }
    Ok(dimension_pairs(h, t)?.monomial(h.n()))
}

/// In-place step to the next permutation in lexicographic order.
fn next_permutation(xs: &mut [usize]) -> bool {
    let Some(i) = xs.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = xs
        .iter()
        .rposition(|&x| x > xs[i])
        .expect("pivot has a successor");
    xs.swap(i, j);
    xs[i + 1..].reverse();
    true
}

/// All permissible fillings of `shape`, by filtering all `n!` placements.
/// Ordered lexicographically by row-reading word.
pub fn enumerate_fillings(
    h: &HessenbergFunction,
    shape: &Shape,
    cap: SizeCap,
) -> Result<Vec<Filling>> {
    let n = shape.n();
    if n != h.n() {
        return Err(Error::SizeMismatch {
            expected: h.n(),
            found: n,
        });
    }
    cap.check(n)?;
    // Word positions p such that p and p+1 are horizontally adjacent.
    let mut adjacent = Vec::new();
    let mut start = 0;
    for &len in shape.rows() {
        adjacent.extend(start..start + len.saturating_sub(1));
        start += len;
    }
    let mut word: Vec<usize> = (1..=n).collect();
    let mut out = Vec::new();
    loop {
        if adjacent.iter().all(|&p| word[p] <= h.at(word[p + 1])) {
            out.push(Filling::from_word(shape.clone(), &word)?);
        }
        if !next_permutation(&mut word) {
            break;
        }
    }
    Ok(out)
}

/// `b_{2k}` = number of permissible fillings with exactly `k` dimension pairs.
pub fn betti_numbers(h: &HessenbergFunction, shape: &Shape, cap: SizeCap) -> Result<Vec<u64>> {
    let mut betti: Vec<u64> = Vec::new();
    for t in enumerate_fillings(h, shape, cap)? {
        let k = dimension_pairs_unchecked(h, &t).len();
        if betti.len() <= k {
            betti.resize(k + 1, 0);
        }
        betti[k] += 1;
    }
    Ok(betti)
}

/// `1 + 2t^2 + t^4` for the vector `[1, 2, 1]`.
pub fn poincare_polynomial(betti: &[u64]) -> String {
    let terms: Vec<String> = betti
        .iter()
        .enumerate()
        .filter(|(_, &b)| b != 0)
        .map(|(k, &b)| match (k, b) {
            (0, b) => b.to_string(),
            (k, 1) => format!("t^{}", 2 * k),
            (k, b) => format!("{b}*t^{}", 2 * k),
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}
