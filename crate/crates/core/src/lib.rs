//! Decomposition and gluing of monomial algebras, with exact checks of the
//! weak and strong Lefschetz properties.
//!
//! A monomial ideal `K` splits along a monomial `m` into `I = K + (m)` and
//! `J = K : (m)`, with `K^c = I^c ⊔ m J^c`. The [`decompose`] module works
//! that calculus in both directions, [`lefschetz`] decides WLP/SLP by exact
//! rank, and [`tables`], [`binomial`] and [`maci`] cover the families built on
//! top of it.

pub mod binomial;
pub mod decompose;
pub mod error;
pub mod ideal;
pub mod lefschetz;
pub mod maci;
pub mod monomial;
pub mod par;
pub mod parse;
pub mod polynomial;
pub mod rank;
pub mod tables;

pub use binomial::{BinomialFamily, PolyIdeal};
pub use decompose::{find_witness, glue, split, Decomposition, GluingSpec, WitnessMode};
pub use error::{Error, Result};
pub use ideal::{minimalize, verify_split, HilbertData, MonomialIdeal, StandardBasis};
pub use lefschetz::{check_lefschetz, has_narrow_slp, LefschetzReport, Property};
pub use monomial::Monomial;
pub use maci::MaciParams;
pub use par::Execution;
pub use parse::{parse_ideal, parse_ideal_with_n, parse_monomial, parse_polynomial, parse_rational};
pub use polynomial::Polynomial;
pub use tables::Table;
