//! The Springer setting, `h = (1, 2, ..., n)` with the shape varying:
//! GP-trees, modified GP-trees, the Garsia-Procesi basis and the inverse map
//! from basis monomials back to row-strict fillings.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::dimension::SizeCap;
use crate::error::{Error, Result};
use crate::filling::{Filling, PartialFilling};
use crate::monomial::Monomial;
use crate::shape::{Cell, Shape};
use crate::tree::{EdgeLabel, LabeledTree, Level, Payload, Sketch};

fn check_partition(mu: &Shape, cap: SizeCap) -> Result<()> {
    if !mu.is_partition() {
        return Err(Error::InvalidShape(format!("{mu} is not a partition")));
    }
    cap.check(mu.n())
}

/// Removes `cell` (a far-right box) and pushes the rest of its column up so
/// the result is again a partition.
fn remove_and_push_up(shape: &Shape, cell: Cell) -> Shape {
    let mut cols = shape.column_lengths();
    cols[cell.col] -= 1;
    let height = cols.first().copied().unwrap_or(0);
    let rows: Vec<usize> = (0..height)
        .map(|r| cols.iter().filter(|&&c| c > r).count())
        .collect();
    Shape::composition(if rows.is_empty() { vec![0] } else { rows }).expect("nonempty rows")
}

/// The GP-tree children of a Level-`i` diagram: `(exponent, child diagram)`.
fn gp_children(shape: &Shape) -> Vec<(u32, Shape)> {
    shape
        .dimension_ordering()
        .into_iter()
        .enumerate()
        .map(|(j, cell)| (j as u32, remove_and_push_up(shape, cell)))
        .collect()
}

fn gp_sketch(shape: Shape, i: usize, acc: Monomial) -> Sketch {
    if i <= 1 {
        return Sketch {
            level: Level::Num(1),
            payload: Payload::Leaf(acc),
            children: vec![],
        };
    }
    let children = gp_children(&shape)
        .into_iter()
        .map(|(j, child)| {
            let mut next = acc.clone();
            next.set_exp(i, j);
            (EdgeLabel { var: i, exp: j }, gp_sketch(child, i - 1, next))
        })
        .collect();
    Sketch {
        level: Level::Num(i),
        payload: Payload::Diagram(shape),
        children,
    }
}

/// The Garsia-Procesi tree of `mu`: Levels `n` down to 1, Level 1 holding the
/// leaf monomials. Children are drawn with exponent increasing left to right.
pub fn build_gp_tree(mu: &Shape, cap: SizeCap) -> Result<LabeledTree> {
    check_partition(mu, cap)?;
    let n = mu.n();
    Ok(LabeledTree::from_sketch(
        "gp-tree",
        gp_sketch(mu.clone(), n, Monomial::one(n)),
    ))
}

/// Walks every root-to-leaf path of the GP-tree without materializing it.
pub fn for_each_gp_leaf(mu: &Shape, cap: SizeCap, mut f: impl FnMut(&Monomial)) -> Result<()> {
    fn go(shape: &Shape, i: usize, acc: &mut Monomial, f: &mut impl FnMut(&Monomial)) {
        if i <= 1 {
            f(acc);
            return;
        }
        for (j, child) in gp_children(shape) {
            acc.set_exp(i, j);
            go(&child, i - 1, acc, f);
        }
        acc.set_exp(i, 0);
    }
    check_partition(mu, cap)?;
    let n = mu.n();
    go(mu, n, &mut Monomial::one(n), &mut f);
    Ok(())
}

pub fn count_gp_paths(mu: &Shape, cap: SizeCap) -> Result<u64> {
    let mut count = 0;
    for_each_gp_leaf(mu, cap, |_| count += 1)?;
    Ok(count)
}

/// `B(mu)`: the leaf monomials of the GP-tree.
pub fn garsia_procesi_basis(mu: &Shape, cap: SizeCap) -> Result<BTreeSet<Monomial>> {
    let mut basis = BTreeSet::new();
    for_each_gp_leaf(mu, cap, |m| {
        basis.insert(m.clone());
    })?;
    Ok(basis)
}

fn modified_gp_sketch(partial: PartialFilling, i: usize, acc: Monomial) -> Sketch {
    if i == 0 {
        let leaf = Sketch {
            level: Level::B,
            payload: Payload::Leaf(acc),
            children: vec![],
        };
        return Sketch {
            level: Level::Num(0),
            payload: Payload::Partial(partial),
            children: vec![(EdgeLabel::ONE, leaf)],
        };
    }
    let open = Shape::composition(partial.empty_counts()).expect("nonempty rows");
    let children = open
        .dimension_ordering()
        .into_iter()
        .enumerate()
        .map(|(j, cell)| {
            let j = j as u32;
            let mut child = partial.clone();
            child.set(cell, i);
            let mut next = acc.clone();
            next.set_exp(i, j);
            (
                EdgeLabel { var: i, exp: j },
                modified_gp_sketch(child, i - 1, next),
            )
        })
        .collect();
    Sketch {
        level: Level::Num(i),
        payload: Payload::Partial(partial),
        children,
    }
}

/// The modified GP-tree: Levels `n` down to 0 carry partial fillings (value
/// `i` is placed in the box the GP-tree would remove), then Level B carries
/// the path monomials.
pub fn build_modified_gp_tree(mu: &Shape, cap: SizeCap) -> Result<LabeledTree> {
    check_partition(mu, cap)?;
    let n = mu.n();
    Ok(LabeledTree::from_sketch(
        "modified-gp-tree",
        modified_gp_sketch(PartialFilling::empty(mu), n, Monomial::one(n)),
    ))
}

/// The row-strict filling of `mu` that maps to `m`: for `i = n` down to 1,
/// place `i` in the open box with dimension-order `alpha_i + 1`.
pub fn psi(mu: &Shape, m: &Monomial) -> Result<Filling> {
    if !mu.is_partition() {
        return Err(Error::InvalidShape(format!("{mu} is not a partition")));
    }
    let n = mu.n();
    if m.nvars() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            found: m.nvars(),
        });
    }
    let mut partial = PartialFilling::empty(mu);
    for i in (1..=n).rev() {
        let open = Shape::composition(partial.empty_counts()).expect("nonempty rows");
        let order = open.dimension_ordering();
        let cell = order
            .get(m.exp(i) as usize)
            .ok_or_else(|| Error::NotInBasis(m.to_string()))?;
        partial.set(*cell, i);
    }
    partial.to_filling()
}

/// All row-strict fillings of `mu`, by choosing the set of entries of each
/// row. Ordered by row-reading word.
pub fn enumerate_row_strict(mu: &Shape, cap: SizeCap) -> Result<Vec<Filling>> {
    check_partition(mu, cap)?;
    fn go(rows: &[usize], remaining: &[usize], acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let Some((&len, rest)) = rows.split_first() else {
            out.push(acc.clone());
            return;
        };
        for chosen in remaining.iter().copied().combinations(len) {
            let left: Vec<usize> = remaining
                .iter()
                .copied()
                .filter(|v| !chosen.contains(v))
                .collect();
            let mark = acc.len();
            acc.extend(&chosen);
            go(rest, &left, acc, out);
            acc.truncate(mark);
        }
    }
    let all: Vec<usize> = (1..=mu.n()).collect();
    let mut words = Vec::new();
    go(mu.rows(), &all, &mut Vec::new(), &mut words);
    words.sort();
    words
        .into_iter()
        .map(|w| Filling::from_word(mu.clone(), &w))
        .collect()
}

/// `n! / (mu_1! ... mu_k!)`.
pub fn multinomial(mu: &Shape) -> u64 {
    let fact = |k: usize| (1..=k as u64).product::<u64>();
    mu.rows().iter().fold(fact(mu.n()), |acc, &r| acc / fact(r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dimension::{enumerate_fillings, phi};
    use crate::hessenberg::HessenbergFunction;
    use crate::shape::partitions;

    fn part(rows: &[usize]) -> Shape {
        Shape::partition(rows.to_vec()).unwrap()
    }

    fn strings<T: ToString>(xs: impl IntoIterator<Item = T>) -> Vec<String> {
        xs.into_iter().map(|x| x.to_string()).collect()
    }

    #[test]
    fn push_up() {
        assert_eq!(
            remove_and_push_up(&part(&[2, 2]), Cell::new(0, 1)),
            part(&[2, 1])
        );
        assert_eq!(
            remove_and_push_up(&part(&[2, 2]), Cell::new(1, 1)),
            part(&[2, 1])
        );
        assert_eq!(
            remove_and_push_up(&part(&[1, 1]), Cell::new(0, 0)),
            part(&[1])
        );
        assert_eq!(
            remove_and_push_up(&part(&[3, 1]), Cell::new(1, 0)),
            part(&[3])
        );
    }

    #[test]
    fn gp_tree_two_two() {
        let t = build_gp_tree(&part(&[2, 2]), SizeCap::DEFAULT).unwrap();
        assert_eq!(
            strings(t.leaf_monomials()),
            ["1", "x2", "x3", "x4", "x2*x4", "x3*x4"]
        );
        let level3: Vec<String> = t.level(Level::Num(3)).map(|n| n.payload.label()).collect();
        assert_eq!(level3, ["(2,1)", "(2,1)"]);
        let level2: Vec<String> = t.level(Level::Num(2)).map(|n| n.payload.label()).collect();
        assert_eq!(level2, ["(1,1)", "(2)", "(1,1)", "(2)"]);
    }

    #[test]
    fn gp_tree_small() {
        let t = build_gp_tree(&part(&[1]), SizeCap::DEFAULT).unwrap();
        assert_eq!(strings(t.leaf_monomials()), ["1"]);
        let t = build_gp_tree(&part(&[2, 1]), SizeCap::DEFAULT).unwrap();
        let degrees: Vec<u32> = t.leaf_monomials().iter().map(Monomial::degree).collect();
        assert_eq!(degrees, [0, 1, 1]);
        assert!(build_gp_tree(&Shape::composition(vec![1, 2]).unwrap(), SizeCap::DEFAULT).is_err());
        assert_eq!(
            build_gp_tree(&part(&[5, 5]), SizeCap::DEFAULT),
            Err(Error::SizeLimitExceeded { n: 10, limit: 9 })
        );
    }

    #[test]
    fn gp_tree_branching_invariants() {
        for n in 1..=6 {
            for mu in partitions(n) {
                let t = build_gp_tree(&mu, SizeCap::DEFAULT).unwrap();
                for node in t.nodes() {
                    if let Payload::Diagram(shape) = &node.payload {
                        assert_eq!(node.children.len(), shape.nonzero_rows());
                        let exps: Vec<u32> = node
                            .children
                            .iter()
                            .map(|&c| t.node(c).edge.unwrap().exp)
                            .collect();
                        assert_eq!(exps, (0..shape.nonzero_rows() as u32).collect::<Vec<_>>());
                    }
                }
            }
        }
    }

    #[test]
    fn modified_tree_two_two() {
        let t = build_modified_gp_tree(&part(&[2, 2]), SizeCap::DEFAULT).unwrap();
        let pairs: Vec<(String, String)> = t
            .filling_leaf_pairs()
            .into_iter()
            .map(|(f, m)| (f.to_string(), m.to_string()))
            .collect();
        let expected = [
            ("24/13", "1"),
            ("14/23", "x2"),
            ("34/12", "x3"),
            ("23/14", "x4"),
            ("13/24", "x2*x4"),
            ("12/34", "x3*x4"),
        ];
        let expected: Vec<(String, String)> = expected
            .iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect();
        assert_eq!(pairs, expected);
        let level3: Vec<String> = t.level(Level::Num(3)).map(|n| n.payload.label()).collect();
        assert_eq!(level3, [".4/..", "../.4"]);
    }

    #[test]
    fn modified_tree_single_row() {
        let t = build_modified_gp_tree(&Shape::row(4), SizeCap::DEFAULT).unwrap();
        let pairs = t.filling_leaf_pairs();
        assert_eq!(pairs.len(), 1);
        assert_eq!(pairs[0].0.to_string(), "1234");
        assert!(pairs[0].1.is_one());
        assert_eq!(t.nodes().len(), 6);
    }

    #[test]
    fn modified_tree_counts() {
        let t = build_modified_gp_tree(&part(&[2, 2, 2]), SizeCap::DEFAULT).unwrap();
        assert_eq!(t.filling_leaf_pairs().len(), 90);
        assert_eq!(
            count_gp_paths(&part(&[2, 2, 2]), SizeCap::DEFAULT).unwrap(),
            90
        );
    }

    #[test]
    fn psi_worked_example() {
        let m = Monomial::parse("x3*x4^2*x5*x6", 6).unwrap();
        let t = psi(&part(&[2, 2, 2]), &m).unwrap();
        assert_eq!(t.to_string(), "12/36/45");
        assert_eq!(phi(&HessenbergFunction::springer(6), &t).unwrap(), m);
    }

    #[test]
    fn psi_of_one() {
        for mu in partitions(5) {
            let t = psi(&mu, &Monomial::one(5)).unwrap();
            assert!(t.is_row_strict());
            assert!(phi(&HessenbergFunction::springer(5), &t).unwrap().is_one());
        }
    }

    #[test]
    fn psi_matches_modified_tree() {
        let mu = part(&[2, 2]);
        let t = build_modified_gp_tree(&mu, SizeCap::DEFAULT).unwrap();
        for (filling, m) in t.filling_leaf_pairs() {
            assert_eq!(psi(&mu, &m).unwrap(), filling);
        }
    }

    #[test]
    fn psi_rejects_non_basis() {
        let mu = part(&[2, 2]);
        assert!(matches!(
            psi(&mu, &Monomial::parse("x4^2", 4).unwrap()),
            Err(Error::NotInBasis(_))
        ));
        assert!(matches!(
            psi(&mu, &Monomial::parse("x1", 4).unwrap()),
            Err(Error::NotInBasis(_))
        ));
        assert!(matches!(
            psi(&mu, &Monomial::parse("x2*x3", 4).unwrap()),
            Err(Error::NotInBasis(_))
        ));
        assert!(matches!(
            psi(&mu, &Monomial::one(3)),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn row_strict_enumeration() {
        assert_eq!(
            enumerate_row_strict(&part(&[2, 2]), SizeCap::DEFAULT)
                .unwrap()
                .len(),
            6
        );
        assert_eq!(
            enumerate_row_strict(&Shape::row(5), SizeCap::DEFAULT)
                .unwrap()
                .len(),
            1
        );
        let mu = part(&[2, 2, 2]);
        let ours = enumerate_row_strict(&mu, SizeCap::DEFAULT).unwrap();
        assert_eq!(ours.len(), 90);
        let oracle =
            enumerate_fillings(&HessenbergFunction::springer(6), &mu, SizeCap::DEFAULT).unwrap();
        assert_eq!(ours, oracle);
        assert_eq!(multinomial(&mu), 90);
    }

    #[test]
    fn basis_examples() {
        let b = garsia_procesi_basis(&part(&[2, 2]), SizeCap::DEFAULT).unwrap();
        let mut shown: Vec<Monomial> = b.into_iter().collect();
        crate::monomial::sort_graded(&mut shown);
        assert_eq!(strings(shown), ["1", "x2", "x3", "x4", "x2*x4", "x3*x4"]);
        let b = garsia_procesi_basis(&Shape::row(6), SizeCap::DEFAULT).unwrap();
        assert_eq!(b.len(), 1);
        // Column shape: the full staircase a_i <= i - 1.
        for n in 1..=6 {
            let b = garsia_procesi_basis(&part(&vec![1; n]), SizeCap::DEFAULT).unwrap();
            assert_eq!(b.len() as u64, (1..=n as u64).product::<u64>());
            assert!(b.iter().all(|m| (1..=n).all(|i| (m.exp(i) as usize) < i)));
        }
    }
}
