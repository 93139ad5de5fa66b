//! Exact combinatorics of slope maps, semistability and Harder–Narasimhan
//! strata for split reductive groups, with the projective line as a fully
//! decidable model.

pub mod bruhat;
pub mod error;
pub mod lattice;
pub mod p1;
pub mod parabolic;
pub mod rational;
pub mod reps;
pub mod rootdata;
pub mod slope;
pub mod strata;
pub mod verify;

pub use error::{Error, Result};
pub use lattice::{QuotientClass, QuotientLattice};
pub use p1::{HNData, SplittingType};
pub use parabolic::Parabolic;
pub use rational::Rational;
pub use rootdata::{Coweight, GroupDescriptor, RationalVector, RootDatum, Side, Weight, WeylElement, WeylGroup};
pub use slope::SlopeVector;
pub use strata::Stratum;
