//! Legendrian linear curves in the tight contact structures `xi_n` on `T^3`.
//!
//! * [`lattice`]: primitive directions and the `SL(3, Z)` reduction of
//!   horizontal knot types to `K(1, 0, 0)`.
//! * [`contact`]: maximal Thurston-Bennequin numbers and dividing sets.
//! * [`classes`]: canonical Legendrian classes, isotopy and class counts.
//! * [`stable`]: stabilisation calculus and the negative-stable quotient.
//! * [`oracle`]: brute-force closure of stabilisation words, used to check
//!   the closed-form counts.
//! * [`cli`]: the `t3leg` command line front end.

pub mod classes;
pub mod cli;
pub mod contact;
pub mod dsu;
pub mod error;
pub mod exec;
pub mod lattice;
pub mod oracle;
pub mod stable;

pub use classes::{KnotType, LegendrianClass, Presentation, RangeEntry};
pub use contact::{Component, ContactStructure, DividingSetProfile, Region, Sign, Slope, TorusSpan};
pub use error::{Error, Result};
pub use exec::Execution;
pub use lattice::{Direction, KnotTypeKind, UnimodularMatrix3};
