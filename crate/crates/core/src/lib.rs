//! Content-product solutions of the KP hierarchy, and the enumerative
//! quantities they generate.
//!
//! The crate works entirely in exact arithmetic. Its layers are
//!
//! * [`partitions`]: partitions, contents, content monomials, and the
//!   normal form of integer lists;
//! * [`series`], [`symfunc`], [`characters`]: truncated series in the power
//!   sums, Schur functions and symmetric group characters;
//! * [`perm`], [`factorizations`]: permutations and ordered factorization
//!   counts, by enumeration and by characters;
//! * [`plucker`], [`kp`]: Plücker relations, tau functions and the first
//!   KP equations;
//! * [`hurwitz`]: Hurwitz numbers, m-hypermap numbers, hypermaps and maps;
//! * [`bivariate`], [`triangulations`]: the triangulation recurrence and the
//!   map series identities behind it.

pub mod acceptance;
pub mod bivariate;
pub mod characters;
pub mod error;
pub mod factorizations;
pub mod hurwitz;
pub mod kp;
pub mod partitions;
pub mod perm;
pub mod plucker;
pub mod ring;
pub mod series;
pub mod symfunc;
pub mod triangulations;

pub use error::{Error, Result};
pub use partitions::{ContentMonomial, IntegerList, Partition, SignedPartition};
pub use ring::{Coefficient, Rational, TSeries};
pub use series::GradedSeries;
