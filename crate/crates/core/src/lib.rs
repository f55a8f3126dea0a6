//! Finite-range linear recurrences for binomial coefficients modulo a prime,
//! exact Hankel determinants, and point counts on Fermat curves over finite
//! fields.

pub mod arith;
pub mod cli;
pub mod error;
pub mod fermat;
pub mod field;
pub mod hankel;
pub mod linalg;
pub mod polyseq;
pub mod recsolve;
pub mod report;

pub use error::{Error, Result};
pub use field::{field_of_size, make_field, subgroup_of_order, FieldDesc, FieldElem, SubgroupDesc};
pub use polyseq::{binom_seq, gen_binomial, reciprocal, CharPoly, Poly, RangedSeq};
pub use report::VerifyReport;
