//! Exact polynomial arithmetic over `Z`, the ideal `J_h`, and Gröbner checks.

mod groebner;
mod polynomial;

pub use groebner::{
    groebner_check, is_groebner, jh_generators, leading_monomials, leading_term,
    minimal_monomial_generators, reduce, s_polynomial, standard_monomials, MonomialOrder,
    SPairFailure,
};
pub use polynomial::{modified_complete_symmetric, Polynomial};
