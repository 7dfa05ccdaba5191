//! Plain-text and JSON listings shared by the CLI and the golden tests.

use serde_json::json;

use crate::dimension::{
    betti_numbers, dimension_pairs, enumerate_fillings, poincare_polynomial, SizeCap,
};
use crate::error::Result;
use crate::filling::Filling;
use crate::hessenberg::HessenbergFunction;
use crate::monomial::{sort_graded, Monomial};
use crate::polyalg::Polynomial;
use crate::shape::Shape;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FillingRecord {
    pub filling: Filling,
    pub pairs: crate::dimension::DimensionPairSet,
    pub monomial: Monomial,
}

/// Every permissible filling with its dimension pairs and monomial, in the
/// lex order of the reading word.
pub fn filling_records(
    h: &HessenbergFunction,
    shape: &Shape,
    cap: SizeCap,
) -> Result<Vec<FillingRecord>> {
    enumerate_fillings(h, shape, cap)?
        .into_iter()
        .map(|filling| {
            let pairs = dimension_pairs(h, &filling)?;
            let monomial = pairs.monomial(h.n());
            Ok(FillingRecord {
                filling,
                pairs,
                monomial,
            })
        })
        .collect()
}

/// One line per record: `filling<TAB>pairs<TAB>monomial`, `-` for no pairs.
pub fn fillings_plain(records: &[FillingRecord]) -> String {
    records
        .iter()
        .map(|r| {
            let pairs = if r.pairs.is_empty() {
                "-".to_string()
            } else {
                r.pairs.to_string()
            };
            format!("{}\t{}\t{}\n", r.filling, pairs, r.monomial)
        })
        .collect()
}

pub fn fillings_json(records: &[FillingRecord]) -> serde_json::Value {
    json!(records
        .iter()
        .map(|r| json!({
            "filling": r.filling,
            "rows": r.filling.rows(),
            "pairs": r.pairs,
            "monomial": r.monomial.to_string(),
        }))
        .collect::<Vec<_>>())
}

/// `1,2,1` on the first line, the Poincaré polynomial on the second.
pub fn betti_plain(h: &HessenbergFunction, shape: &Shape, cap: SizeCap) -> Result<String> {
    let b = betti_numbers(h, shape, cap)?;
    let vector: Vec<String> = b.iter().map(u64::to_string).collect();
    Ok(format!(
        "{}\n{}\n",
        vector.join(","),
        poincare_polynomial(&b)
    ))
}

/// Monomials by degree, lex-descending within a degree, one per line.
pub fn basis_plain(basis: impl IntoIterator<Item = Monomial>) -> String {
    let mut v: Vec<Monomial> = basis.into_iter().collect();
    sort_graded(&mut v);
    v.iter().map(|m| format!("{m}\n")).collect()
}

pub fn basis_json(basis: impl IntoIterator<Item = Monomial>) -> serde_json::Value {
    let mut v: Vec<Monomial> = basis.into_iter().collect();
    sort_graded(&mut v);
    json!(v
        .iter()
        .map(|m| json!({ "monomial": m.to_string(), "exps": m }))
        .collect::<Vec<_>>())
}

pub fn polynomials_plain(ps: &[Polynomial]) -> String {
    ps.iter().map(|p| format!("{p}\n")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn listing() {
        let h = HessenbergFunction::new(vec![1, 3, 3]).unwrap();
        let shape: Shape = "2,1".parse().unwrap();
        let records = filling_records(&h, &shape, SizeCap::DEFAULT).unwrap();
        assert_eq!(
            fillings_plain(&records),
            "12/3\t(1,3),(2,3)\tx3^2\n13/2\t(1,2)\tx2\n23/1\t-\t1\n32/1\t(2,3)\tx3\n"
        );
        assert_eq!(
            betti_plain(&h, &shape, SizeCap::DEFAULT).unwrap(),
            "1,2,1\n1 + 2*t^2 + t^4\n"
        );
        let json = fillings_json(&records);
        assert_eq!(json[0]["pairs"], json!([[1, 3], [2, 3]]));
        let back: Filling = serde_json::from_value(json[1]["filling"].clone()).unwrap();
        assert_eq!(back, records[1].filling);
    }
}
