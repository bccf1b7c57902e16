// Coefficient tables keep every published digit, and `!(x > 0.0)` guards
// are meant to reject NaN.
#![allow(clippy::excessive_precision, clippy::neg_cmp_op_on_partial_ord)]

pub mod check;
pub mod cli;
pub mod constants;
pub mod error;
pub mod quadrature;
pub mod specfun;
pub mod table;
pub mod thermal;
pub mod units;
pub mod vacuum;

pub use error::{Error, Result};

// The book's code listings run as doctests, one module per chapter.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/units.md")]
    mod units {}
    #[doc = include_str!("../../../book/src/special-functions.md")]
    mod special_functions {}
    #[doc = include_str!("../../../book/src/vacuum.md")]
    mod vacuum {}
    #[doc = include_str!("../../../book/src/thermal.md")]
    mod thermal {}
    #[doc = include_str!("../../../book/src/quadrature.md")]
    mod quadrature {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
