//! The regular nilpotent setting, one-row shape `(n)` with `h` varying:
//! h-trees, h-tableau-trees, the inverse map from the staircase basis `B_h`
//! to fillings, and the counting identities tying them together.

use std::collections::{BTreeSet, HashSet};

use rayon::prelude::*;

use crate::dimension::{dimension_pairs, enumerate_fillings, phi, SizeCap};
use crate::error::{Error, Result};
use crate::filling::Filling;
use crate::hessenberg::{hessenberg_functions, DegreeTuple, HessenbergFunction};
use crate::monomial::Monomial;
use crate::shape::Shape;
use crate::tree::{EdgeLabel, LabeledTree, Level, Payload, Sketch};

/// A row holding some of `1..=n` with no bars between entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BarlessTableau {
    word: Vec<usize>,
}

impl BarlessTableau {
    pub fn new(word: Vec<usize>) -> Self {
        Self { word }
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// Whether every adjacency `k` immediately left of `j` has `k <= h(j)`.
    pub fn is_h_permissible(&self, h: &HessenbergFunction) -> bool {
        self.word.windows(2).all(|w| w[0] <= h.at(w[1]))
    }

    /// Inserts `value` before index `slot` (`slot == len` appends).
    pub fn insert(&self, slot: usize, value: usize) -> BarlessTableau {
        let mut word = self.word.clone();
        word.insert(slot, value);
        BarlessTableau { word }
    }
}

/// Where `i = len + 1` may go: just left of each `k` with `i <= h(k)`, and at
/// the far right. Listed right to left, so entry `j` is bullet `j + 1`.
pub fn h_permissible_positions(h: &HessenbergFunction, w: &BarlessTableau) -> Result<Vec<usize>> {
    let i = w.word.len() + 1;
    let mut sorted = w.word.clone();
    sorted.sort_unstable();
    if i > h.n() || sorted.iter().enumerate().any(|(k, &v)| v != k + 1) {
        return Err(Error::InvalidFilling(format!(
            "barless tableau must hold exactly 1..{} with {} <= n = {}",
            i - 1,
            i,
            h.n()
        )));
    }
    Ok(slots(h, &w.word))
}

fn slots(h: &HessenbergFunction, word: &[usize]) -> Vec<usize> {
    let i = word.len() + 1;
    let mut out = vec![word.len()];
    out.extend((0..word.len()).rev().filter(|&p| i <= h.at(word[p])));
    out
}

fn check_one_row_cap(h: &HessenbergFunction, cap: SizeCap) -> Result<()> {
    cap.check(h.n())
}

/// The h-tree: Levels 1 to `n + 1`. A Level `i - 1` vertex has `beta_i`
/// children labelled `x_i^(beta_i - 1), ..., x_i, 1` left to right.
pub fn build_h_tree(h: &HessenbergFunction, cap: SizeCap) -> Result<LabeledTree> {
    check_one_row_cap(h, cap)?;
    fn go(beta: &DegreeTuple, level: usize, acc: Monomial) -> Sketch {
        let n = beta.n();
        if level == n {
            let leaf = Sketch {
                level: Level::Num(n + 1),
                payload: Payload::Leaf(acc),
                children: vec![],
            };
            return Sketch {
                level: Level::Num(n),
                payload: Payload::Bullet,
                children: vec![(EdgeLabel::ONE, leaf)],
            };
        }
        let i = level + 1;
        let children = (0..beta.beta(i) as u32)
            .rev()
            .map(|j| {
                let mut next = acc.clone();
                next.set_exp(i, j);
                (EdgeLabel { var: i, exp: j }, go(beta, i, next))
            })
            .collect();
        Sketch {
            level: Level::Num(level),
            payload: Payload::Bullet,
            children,
        }
    }
    let n = h.n();
    Ok(LabeledTree::from_sketch(
        "h-tree",
        go(&h.degree_tuple(), 1, Monomial::one(n)),
    ))
}

/// The h-tree with barless tableaux on Levels 1 to `n`: edge `x_i^j` puts
/// `i` into bullet `j + 1` counting from the right.
///
/// Fails with [`Error::Invariant`] if two Level `n` fillings coincide.
pub fn build_h_tableau_tree(h: &HessenbergFunction, cap: SizeCap) -> Result<LabeledTree> {
    check_one_row_cap(h, cap)?;
    fn go(h: &HessenbergFunction, w: BarlessTableau, acc: Monomial) -> Sketch {
        let n = h.n();
        let level = w.word.len();
        if level == n {
            let leaf = Sketch {
                level: Level::Num(n + 1),
                payload: Payload::Leaf(acc),
                children: vec![],
            };
            return Sketch {
                level: Level::Num(n),
                payload: Payload::Barless {
                    word: w.word,
                    slots: vec![],
                },
                children: vec![(EdgeLabel::ONE, leaf)],
            };
        }
        let i = level + 1;
        let bullets = slots(h, &w.word);
        let children = (0..bullets.len())
            .rev()
            .map(|j| {
                let mut next = acc.clone();
                next.set_exp(i, j as u32);
                (
                    EdgeLabel {
                        var: i,
                        exp: j as u32,
                    },
                    go(h, w.insert(bullets[j], i), next),
                )
            })
            .collect();
        Sketch {
            level: Level::Num(level),
            payload: Payload::Barless {
                word: w.word,
                slots: bullets,
            },
            children,
        }
    }
    let n = h.n();
    let tree = LabeledTree::from_sketch(
        "h-tableau-tree",
        go(h, BarlessTableau::new(vec![1]), Monomial::one(n)),
    );
    let mut seen = HashSet::new();
    for node in tree.level(Level::Num(n)) {
        if let Payload::Barless { word, .. } = &node.payload {
            if !seen.insert(word.clone()) {
                return Err(Error::Invariant(format!(
                    "Level {n} filling {word:?} repeated"
                )));
            }
        }
    }
    Ok(tree)
}

fn check_staircase(h: &HessenbergFunction, m: &Monomial) -> Result<DegreeTuple> {
    if m.nvars() != h.n() {
        return Err(Error::SizeMismatch {
            expected: h.n(),
            found: m.nvars(),
        });
    }
    let beta = h.degree_tuple();
    if (1..=h.n()).any(|i| m.exp(i) as usize >= beta.beta(i)) {
        return Err(Error::NotInBasis(m.to_string()));
    }
    Ok(beta)
}

/// The one-row filling above `m` in the h-tableau-tree, found by walking
/// the single path the exponents of `m` select.
pub fn psi_h(h: &HessenbergFunction, m: &Monomial) -> Result<Filling> {
    check_staircase(h, m)?;
    let mut w = BarlessTableau::new(vec![1]);
    for i in 2..=h.n() {
        let bullets = slots(h, &w.word);
        let slot = bullets
            .get(m.exp(i) as usize)
            .ok_or_else(|| Error::NotInBasis(m.to_string()))?;
        w = w.insert(*slot, i);
    }
    Filling::one_row(&w.word)
}

/// `B_h = { x^a : 0 <= a_i < beta_i }`.
pub fn b_h_basis(h: &HessenbergFunction) -> BTreeSet<Monomial> {
    let beta = h.degree_tuple();
    let n = h.n();
    let mut out = BTreeSet::new();
    let mut cur = Monomial::one(n);
    loop {
        out.insert(cur.clone());
        // Odometer over the exponent box.
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            if (cur.exp(i) as usize) + 1 < beta.beta(i) {
                cur.set_exp(i, cur.exp(i) + 1);
                break;
            }
            cur.set_exp(i, 0);
            i -= 1;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountReport {
    /// Permissible one-row fillings, by brute force.
    pub fillings: u64,
    pub leaves: u64,
    pub prod_nu: u64,
    pub prod_beta: u64,
    /// Whether the image of all fillings under the monomial map is `B_h`.
    pub a_equals_b: bool,
}

impl CountReport {
    pub fn holds(&self) -> bool {
        self.a_equals_b
            && self.fillings == self.leaves
            && self.leaves == self.prod_nu
            && self.prod_nu == self.prod_beta
    }
}

pub fn verify_counts(h: &HessenbergFunction, cap: SizeCap) -> Result<CountReport> {
    let n = h.n();
    let fillings = enumerate_fillings(h, &Shape::row(n), cap)?;
    let image: BTreeSet<Monomial> = fillings.iter().map(|t| phi(h, t)).collect::<Result<_>>()?;
    let leaves = build_h_tree(h, cap)?.leaves().count() as u64;
    Ok(CountReport {
        fillings: fillings.len() as u64,
        leaves,
        prod_nu: h.nu_tuple().iter().map(|&v| v as u64).product(),
        prod_beta: h.degree_tuple().product(),
        a_equals_b: image == b_h_basis(h),
    })
}

/// One Hessenberg function that failed a check, with a description.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub h: HessenbergFunction,
    pub reason: String,
}

/// Runs `check` on every Hessenberg function of size `n` in parallel and
/// collects failures in the order of [`hessenberg_functions`].
pub fn sweep<F>(n: usize, check: F) -> (usize, Vec<Failure>)
where
    F: Fn(&HessenbergFunction) -> std::result::Result<(), String> + Sync,
{
    let all = hessenberg_functions(n);
    let failures = all
        .par_iter()
        .filter_map(|h| {
            check(h).err().map(|reason| Failure {
                h: h.clone(),
                reason,
            })
        })
        .collect();
    (all.len(), failures)
}

/// Checks a single function's counting identities: the four counts agree,
/// `A_h = B_h`, `multiset(nu) = multiset(beta)`, and the tree pairs each
/// filling with its monomial.
pub fn check_identities(h: &HessenbergFunction, cap: SizeCap) -> std::result::Result<(), String> {
    let report = verify_counts(h, cap).map_err(|e| e.to_string())?;
    if !report.holds() {
        return Err(format!("{report:?}"));
    }
    let mut nu = h.nu_tuple();
    let mut beta = h.degree_tuple().as_slice().to_vec();
    nu.sort_unstable();
    beta.sort_unstable();
    if nu != beta {
        return Err(format!("multiset nu {nu:?} != beta {beta:?}"));
    }
    let tree = build_h_tableau_tree(h, cap).map_err(|e| e.to_string())?;
    for (t, m) in tree.filling_leaf_pairs() {
        let d = dimension_pairs(h, &t).map_err(|e| e.to_string())?;
        if d.monomial(h.n()) != m {
            return Err(format!(
                "filling {t} maps to {} but sits above {m}",
                d.monomial(h.n())
            ));
        }
    }
    Ok(())
}
