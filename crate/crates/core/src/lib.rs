//! Numerical semigroup arithmetic, relative ideals, the numerical duplication
//! `S ⋈^b E = 2·S ∪ (2·E + b)` and enumeration of the almost symmetric
//! semigroups `T` whose one half `T/2` is a given semigroup.
//!
//! Every value is immutable after construction and every operation is a pure
//! function, so all public types are `Send + Sync`.
//!
//! ```
//! use sgdouble::{NumericalSemigroup, doubles};
//!
//! let s = NumericalSemigroup::from_generators(&[3, 5, 7]).unwrap();
//! let family = doubles::enumerate_even_doubles(&s);
//! assert_eq!(family.members.len(), 3);
//! ```

mod cofinite;
pub mod cli;
pub mod doubles;
pub mod duplication;
pub mod error;
pub mod ideal;
pub mod oracle;
pub mod semigroup;
pub mod verify;

pub use doubles::{DoubleCertificate, DoubleFamily, DoubleKind};
pub use duplication::DuplicationSpec;
pub use error::{Error, Result};
pub use ideal::RelativeIdeal;
pub use semigroup::{ClassificationReport, ClassifyMethod, NumericalSemigroup, SymmetryClass};
