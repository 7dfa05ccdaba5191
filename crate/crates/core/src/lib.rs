//! Combinatorics of Springer and regular nilpotent Hessenberg varieties:
//! permissible fillings and their dimension pairs, Betti numbers, GP-trees
//! and h-tableau-trees, and the ideal `J_h` with its monomial basis.

pub mod dimension;
pub mod error;
pub mod filling;
pub mod hessenberg;
pub mod monomial;
pub mod polyalg;
pub mod regnilp;
pub mod render;
pub mod shape;
pub mod springer;
pub mod tree;

pub use dimension::{
    betti_numbers, dimension_pairs, enumerate_fillings, is_permissible, phi, poincare_polynomial,
    DimensionPairSet, SizeCap,
};
pub use error::{Constraint, Error, Result};
pub use filling::{Filling, PartialFilling, Tableau};
pub use hessenberg::{hessenberg_functions, DegreeTuple, HessenbergDiagram, HessenbergFunction};
pub use monomial::Monomial;
pub use polyalg::{MonomialOrder, Polynomial};
pub use shape::{Cell, Shape, ShapeKind};
pub use tree::{EdgeLabel, LabeledTree, Level, Node, Payload};
