//! Exact invariants and well-orderings of monomial ideals.
//!
//! A monomial ideal in `m` variables is a final segment of ℕ^m under the
//! componentwise order. This crate computes its Hilbert and Hilbert-Samuel
//! functions and polynomials, the ordinal height `ψ` of its Hilbert-Samuel
//! polynomial, its irreducible decomposition, three total well-orderings of
//! ideals extending reverse inclusion, and the chain-length bounds `ℓ(m, f)`
//! and `t_m(f)`.
//!
//! ```
//! use monord::{ExpVec, MonomialIdeal, hilbert};
//!
//! let e = MonomialIdeal::new(2, vec![ExpVec::from([2, 1])]).unwrap();
//! let profile = hilbert::profile(&e, &hilbert::Config::default()).unwrap();
//! assert_eq!(profile.psi.to_string(), "w*3");
//! ```

pub mod bigser;
pub mod chains;
pub mod error;
pub mod hilbert;
pub mod ideal;
pub mod ivpoly;
pub mod monom;
pub mod ordinal;
pub mod orderings;

pub use error::{Error, Result};
pub use ideal::MonomialIdeal;
pub use ivpoly::{IntegerValuedPoly, MacaulayRep};
pub use monom::{CommWord, ExpVec, MatrixOrder, TermOrder};
pub use ordinal::CnfOrdinal;
pub use orderings::IdealOrder;
