//! Exact and numeric verification of the Lie algebras built from bosonic
//! ladder operators: single-mode Sp(2), two-mode Sp(4) / O(3,2), and the
//! Inonu-Wigner contraction of O(3,2) to the Poincare algebra.

pub mod catalog;
pub mod cli;
pub mod contract;
pub mod focknum;
pub mod liecore;
pub mod matrix;
pub mod numeric;
pub mod opalg;
pub mod phspace;
pub mod scalar;

pub use catalog::{Element, GeneratorFamily, Variant};
pub use liecore::{
    compare, expand_in_basis, jacobi_check, structure_constants, ClosureReport, Comparison, Expansion,
    LieError, StructureConstants,
};
pub use matrix::ExactMatrix;
pub use opalg::{
    adjoint, commutator, normal_order, parse_expr, LadderKind, LadderSymbol, Monomial,
    NormalMonomial, OpAlgError, OperatorExpr,
};
pub use scalar::ExactScalar;
