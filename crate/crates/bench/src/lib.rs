//! Shared inputs for the benchmarks.

use hnstrat::{QuotientClass, Rational, RootDatum};

/// Root data exercised by the benchmarks, by name.
pub const NAMED: [&str; 5] = ["GL:3", "GL:4", "SC:B3", "Ad:C3", "SC:G2"];

pub fn datum(name: &str) -> RootDatum {
    RootDatum::parse_named(name).expect("benchmark data are valid")
}

/// The component of `Λ̌_{G,G}` containing the first coordinate vector.
pub fn unit_component(rd: &RootDatum) -> QuotientClass {
    let mut v = vec![0; rd.rank()];
    v[0] = 1;
    rd.quotient(rd.full()).project(&hnstrat::Coweight(v)).expect("dimension matches")
}

pub fn bound(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
