//! Exact computations in the Hopf algebra of permutations and its plactic
//! quotient, the Hopf algebra of standard Young tableaux.
//!
//! The crate is organised bottom-up:
//!
//! * [`perm`]: words, standardization, the right weak order and the two
//!   shifted concatenation products `□` ([`perm::box_product`]) and `△`
//!   ([`perm::triangle`]).
//! * [`tableau`]: Schensted insertion, plactic classes and the products
//!   induced on tableaux.
//! * [`poset`]: finite posets with memoized Möbius functions, including the
//!   weak order on `S_n` and the induced order on `T_n`.
//! * [`linear`] and [`hopf`]: integer linear combinations, the product `*`,
//!   the coproduct `δ`, the shifted shuffle and the monomial bases.
//! * [`verify`]: named exhaustive checks of the algebraic identities.

pub mod error;
pub mod hopf;
pub mod linear;
pub mod perm;
pub mod poset;
pub mod tableau;
pub mod verify;

mod linalg;

pub use error::{Error, Result};
pub use hopf::{Basis, HopfBasis, OrderedBasis, PosetFamily};
pub use linear::{Coeff, LinComb, MonomialCoords, TensorComb};
pub use perm::{Inversion, Letter, Permutation, Word};
pub use poset::FinitePoset;
pub use tableau::{Shape, StandardTableau, Tableau};
