//! Polynomials and rational functions in the slice coordinates `q_1..q_k`.

mod matrix;
mod multipoly;
mod parse;
mod ratfunc;

pub use matrix::{
    bareiss_adjugate, cofactor_determinant, nilpotent_affine_inverse, rat_inverse, Adjugate,
    Matrix, PolyMatrix, RatInverse, RatMatrix,
};
pub use multipoly::{grlex, Exponents, MultiPoly};
pub use parse::parse_ratfunc;
pub use ratfunc::RatFunc;
