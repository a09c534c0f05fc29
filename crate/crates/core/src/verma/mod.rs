//! Exact Verma modules of the classical series `A`, `B`, `C`, `D`.
//!
//! Lowering generators are ordered `Ē_i`, then `F̄_ij` row by row, then
//! `Ḡ_ij` row by row; a vector of `M_Λ` is a rational combination of PBW
//! monomials in them applied to the highest-weight vector `v`. The action of
//! any generator is computed by straightening with the bracket table.

pub mod basis;
pub mod module;
pub mod parse;
pub mod uea;

pub use basis::{GenLabel, GeneratorBasis, Kind, RealForm, Series};
pub use module::{
    extremal_search, gram, monomials_of_weight, monomials_up_to, GramBlock, GramReport,
    PbwMonomial, UeaElement, VermaModule,
};
pub use parse::{parse_expression, parse_vector};
pub use uea::{normal_order, xi, WordElement};
