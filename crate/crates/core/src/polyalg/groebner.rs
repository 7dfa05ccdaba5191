use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use super::polynomial::{modified_complete_symmetric, Polynomial};
use crate::error::{Error, Result};
use crate::hessenberg::HessenbergFunction;
use crate::monomial::Monomial;

/// Lex with `x_1 > x_2 > ... > x_n`, the only order shipped. It is the order
/// [`Monomial`]'s `Ord` implements.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum MonomialOrder {
    #[default]
    Lex,
}

/// Generators of `J_h`, listed `i = n` down to `1`: generator `i` is
/// `e~_{beta_i}(x_i, ..., x_n)`.
pub fn jh_generators(h: &HessenbergFunction) -> Vec<Polynomial> {
    let n = h.n();
    let beta = h.degree_tuple();
    (1..=n)
        .rev()
        .map(|i| {
            let vars: Vec<usize> = (i..=n).collect();
            modified_complete_symmetric(beta.beta(i) as u32, &vars, n)
        })
        .collect()
}

pub fn leading_term(p: &Polynomial, _ord: MonomialOrder) -> Result<(Monomial, BigInt)> {
    p.leading_term().map(|(m, c)| (m.clone(), c.clone()))
}

/// Leading monomials of `gens`, in order.
pub fn leading_monomials(gens: &[Polynomial]) -> Result<Vec<Monomial>> {
    gens.iter()
        .map(|g| g.leading_term().map(|(m, _)| m.clone()))
        .collect()
}

/// Minimal generators of the monomial ideal spanned by `ms`, in input order.
pub fn minimal_monomial_generators(ms: &[Monomial]) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = Vec::new();
    for (k, m) in ms.iter().enumerate() {
        let redundant = ms
            .iter()
            .enumerate()
            .any(|(j, d)| j != k && d.divides(m) && (d != m || j < k));
        if !redundant {
            out.push(m.clone());
        }
    }
    out
}

/// Normal form of `p` modulo `gens`. The largest reducible term is rewritten
/// first, divisors tried in list order. Over `Z` a term `c*m` is reducible by
/// `g` only when `LT(g) | m` and `lc(g) | c`.
pub fn reduce(p: &Polynomial, gens: &[Polynomial], _ord: MonomialOrder) -> Polynomial {
    let leads: Vec<(Monomial, BigInt)> = gens
        .iter()
        .filter_map(|g| g.leading_term().ok().map(|(m, c)| (m.clone(), c.clone())))
        .collect();
    let mut rest = p.clone();
    let mut out = Polynomial::zero(p.nvars());
    while let Ok((m, c)) = rest.leading_term().map(|(m, c)| (m.clone(), c.clone())) {
        let divisor = leads.iter().zip(gens).find_map(|((lm, lc), g)| {
            let q = m.div(lm)?;
            (&c % lc).is_zero().then(|| (q, &c / lc, g))
        });
        match divisor {
            Some((q, k, g)) => rest = &rest - &g.scale(&k, &q),
            None => {
                rest.add_term(m.clone(), -c.clone());
                out.add_term(m, c);
            }
        }
    }
    out
}

/// `(L/LT(p)) * p * lc(q) - (L/LT(q)) * q * lc(p)` with `L = lcm(LT(p), LT(q))`.
pub fn s_polynomial(p: &Polynomial, q: &Polynomial, _ord: MonomialOrder) -> Result<Polynomial> {
    let (mp, cp) = p.leading_term()?;
    let (mq, cq) = q.leading_term()?;
    let l = mp.lcm(mq);
    let up = l.div(mp).expect("lcm is a multiple");
    let uq = l.div(mq).expect("lcm is a multiple");
    Ok(&p.scale(cq, &up) - &q.scale(cp, &uq))
}

/// An S-pair whose S-polynomial does not reduce to zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SPairFailure {
    /// 0-based positions in the generator list.
    pub i: usize,
    pub j: usize,
    pub remainder: Polynomial,
}

impl fmt::Display for SPairFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "S(g{}, g{}) reduces to {}",
            self.i + 1,
            self.j + 1,
            self.remainder
        )
    }
}

/// Buchberger's criterion. Returns the first failing pair in `(i, j)` order.
pub fn groebner_check(
    gens: &[Polynomial],
    ord: MonomialOrder,
) -> Result<std::result::Result<(), SPairFailure>> {
    if gens.iter().any(Polynomial::is_zero) {
        return Err(Error::ZeroPolynomial);
    }
    let pairs: Vec<(usize, usize)> = (0..gens.len())
        .flat_map(|i| (i + 1..gens.len()).map(move |j| (i, j)))
        .collect();
    let failure = pairs.par_iter().find_map_first(|&(i, j)| {
        let s = s_polynomial(&gens[i], &gens[j], ord).expect("nonzero generators");
        let r = reduce(&s, gens, ord);
        (!r.is_zero()).then_some(SPairFailure { i, j, remainder: r })
    });
    Ok(failure.map_or(Ok(()), Err))
}

pub fn is_groebner(gens: &[Polynomial], ord: MonomialOrder) -> bool {
    matches!(groebner_check(gens, ord), Ok(Ok(())))
}

/// Monomials divisible by no leading term of `gens`. Does not re-check the
/// Gröbner property; callers that need a quotient basis should.
pub fn standard_monomials(gens: &[Polynomial], _ord: MonomialOrder) -> Result<BTreeSet<Monomial>> {
    let nvars = gens
        .first()
        .map(Polynomial::nvars)
        .ok_or(Error::ZeroPolynomial)?;
    let leads = leading_monomials(gens)?;
    if leads.iter().any(Monomial::is_one) {
        return Ok(BTreeSet::new());
    }
    let mut bounds = vec![u32::MAX; nvars];
    for m in &leads {
        if let Some(v) = m.pure_power_var() {
            bounds[v - 1] = bounds[v - 1].min(m.exp(v));
        }
    }
    if let Some(k) = bounds.iter().position(|&b| b == u32::MAX) {
        return Err(Error::InfiniteStaircase { var: k + 1 });
    }
    let mut out = BTreeSet::new();
    let mut cur = Monomial::one(nvars);
    loop {
        if !leads.iter().any(|l| l.divides(&cur)) {
            out.insert(cur.clone());
        }
        let mut v = nvars;
        loop {
            if v == 0 {
                return Ok(out);
            }
            if cur.exp(v) + 1 < bounds[v - 1] {
                cur.set_exp(v, cur.exp(v) + 1);
                break;
            }
            cur.set_exp(v, 0);
            v -= 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const LEX: MonomialOrder = MonomialOrder::Lex;

    fn h(v: &[usize]) -> HessenbergFunction {
        HessenbergFunction::new(v.to_vec()).unwrap()
    }

    fn p(s: &str, n: usize) -> Polynomial {
        Polynomial::parse(s, n).unwrap()
    }

    fn strings<T: ToString>(xs: impl IntoIterator<Item = T>) -> Vec<String> {
        xs.into_iter().map(|x| x.to_string()).collect()
    }

    #[test]
    fn generators_3334() {
        let g = jh_generators(&h(&[3, 3, 3, 4]));
        assert_eq!(
            strings(&g),
            [
                "x4",
                "x3^3 + x3^2*x4 + x3*x4^2 + x4^3",
                "x2^2 + x2*x3 + x2*x4 + x3^2 + x3*x4 + x4^2",
                "x1 + x2 + x3 + x4",
            ]
        );
        assert_eq!(
            strings(leading_monomials(&g).unwrap()),
            ["x4", "x3^3", "x2^2", "x1"]
        );
        assert!(is_groebner(&g, LEX));
        let mut basis: Vec<Monomial> = standard_monomials(&g, LEX).unwrap().into_iter().collect();
        crate::monomial::sort_graded(&mut basis);
        assert_eq!(
            strings(basis),
            ["1", "x2", "x3", "x2*x3", "x3^2", "x2*x3^2"]
        );
    }

    #[test]
    fn generators_small() {
        let g = jh_generators(&HessenbergFunction::springer(4));
        assert_eq!(
            strings(&g),
            ["x4", "x3 + x4", "x2 + x3 + x4", "x1 + x2 + x3 + x4"]
        );
        let g = jh_generators(&h(&[2, 3, 3]));
        let degrees: Vec<u32> = g.iter().map(|q| q.total_degree().unwrap()).collect();
        // x3 alone, then x2..x3, then x1..x3.
        assert_eq!(degrees, [2, 2, 1]);
        assert_eq!(
            strings(standard_monomials(&g, LEX).unwrap()),
            ["1", "x3", "x2", "x2*x3"]
        );
    }

    #[test]
    fn reduction() {
        let g = jh_generators(&h(&[3, 3, 3, 4]));
        assert!(reduce(&p("x4", 4), &g, LEX).is_zero());
        assert!(reduce(&p("x2*x3^3", 4), &g, LEX).is_zero());
        assert_eq!(reduce(&p("x2*x3^2", 4), &g, LEX).to_string(), "x2*x3^2");
        // x1 = -(x2 + x3 + x4) and x2^2 = -(x2*x3 + x3^2) modulo x4.
        assert_eq!(reduce(&p("x1^2", 4), &g, LEX).to_string(), "x2*x3");
        // Over Z a leading coefficient that does not divide stops reduction.
        assert_eq!(reduce(&p("x1", 2), &[p("2*x1", 2)], LEX).to_string(), "x1");
        assert!(reduce(&p("4*x1*x2", 2), &[p("2*x1", 2)], LEX).is_zero());
    }

    #[test]
    fn s_polynomials() {
        let s = s_polynomial(&p("x1 + x2", 2), &p("x1", 2), LEX).unwrap();
        assert_eq!(s.to_string(), "x2");
        let g = jh_generators(&h(&[3, 3, 3, 4]));
        let s = s_polynomial(&g[1], &g[2], LEX).unwrap();
        assert!(reduce(&s, &g, LEX).is_zero());
        let s = s_polynomial(&p("2*x1*x2", 2), &p("3*x1^2 + x2", 2), LEX).unwrap();
        assert_eq!(s.to_string(), "-2*x2^2");
        assert_eq!(
            s_polynomial(&Polynomial::zero(1), &p("x1", 1), LEX),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn groebner_checks() {
        let bad = [p("x1 + x2", 2), p("x1", 2)];
        assert!(!is_groebner(&bad, LEX));
        let failure = groebner_check(&bad, LEX).unwrap().unwrap_err();
        assert_eq!(
            (failure.i, failure.j, failure.remainder.to_string()),
            (0, 1, "x2".to_string())
        );
        assert_eq!(failure.to_string(), "S(g1, g2) reduces to x2");
        assert!(is_groebner(&[p("x1", 1)], LEX));
        assert_eq!(
            groebner_check(&[Polynomial::zero(1)], LEX),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn standard_monomial_edge_cases() {
        let vars: Vec<Polynomial> = (1..=4).map(|i| Polynomial::variable(4, i)).collect();
        assert_eq!(strings(standard_monomials(&vars, LEX).unwrap()), ["1"]);
        assert_eq!(
            standard_monomials(&[p("x1", 2), p("x1*x2", 2)], LEX),
            Err(Error::InfiniteStaircase { var: 2 })
        );
        assert!(standard_monomials(&[p("3", 2)], LEX).unwrap().is_empty());
        assert_eq!(
            standard_monomials(&[p("x1^2", 2), p("x1*x2", 2), p("x2^2", 2)], LEX)
                .unwrap()
                .len(),
            3
        );
    }

    #[test]
    fn minimal_generators() {
        let ms: Vec<Monomial> = ["x1*x2", "x1", "x2^2", "x1"]
            .iter()
            .map(|s| Monomial::parse(s, 2).unwrap())
            .collect();
        assert_eq!(strings(minimal_monomial_generators(&ms)), ["x1", "x2^2"]);
    }
}
