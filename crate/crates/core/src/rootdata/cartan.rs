//! Finite Cartan types and the named group descriptors built from them.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Irreducible finite-type families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

/// Largest classical rank accepted by the named constructors.
pub const MAX_CLASSICAL_RANK: usize = 32;

impl Family {
    fn check_rank(self, r: usize) -> Result<()> {
        let ok = match self {
            Family::A => (1..=MAX_CLASSICAL_RANK).contains(&r),
            Family::B | Family::C => (2..=MAX_CLASSICAL_RANK).contains(&r),
            Family::D => (3..=MAX_CLASSICAL_RANK).contains(&r),
            Family::E => (6..=8).contains(&r),
            Family::F => r == 4,
            Family::G => r == 2,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::RankOutOfRange { kind: format!("{self:?}"), rank: r })
        }
    }

    /// Cartan matrix with entries `A[i][j] = <α̌_i, α_j>`, Bourbaki numbering.
    fn cartan(self, r: usize) -> Vec<Vec<i64>> {
        let mut a = vec![vec![0i64; r]; r];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match self {
            Family::A | Family::B | Family::C => {
                for i in 0..r - 1 {
                    link(i, i + 1);
                }
            }
            Family::D => {
                for i in 0..r - 2 {
                    link(i, i + 1);
                }
                link(r - 3, r - 1);
            }
            Family::E => {
                link(0, 2);
                link(1, 3);
                for i in 2..r - 1 {
                    link(i, i + 1);
                }
            }
            Family::F => {
                link(0, 1);
                link(1, 2);
                link(2, 3);
            }
            Family::G => link(0, 1),
        }
        match self {
            // α_{r-1} short
            Family::B => a[r - 1][r - 2] = -2,
            // α_{r-1} long
            Family::C => a[r - 2][r - 1] = -2,
            // α_0, α_1 long; α_2, α_3 short
            Family::F => a[2][1] = -2,
            // α_0 short, α_1 long
            Family::G => a[0][1] = -3,
            _ => {}
        }
        a
    }
}

/// A finite Cartan type, possibly reducible (`A1xB2`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CartanType(Vec<(Family, usize)>);

impl CartanType {
    pub fn new(components: Vec<(Family, usize)>) -> Result<CartanType> {
        for &(f, r) in &components {
            f.check_rank(r)?;
        }
        Ok(CartanType(components))
    }

    pub fn irreducible(f: Family, r: usize) -> Result<CartanType> {
        CartanType::new(vec![(f, r)])
    }

    pub fn components(&self) -> &[(Family, usize)] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.iter().map(|c| c.1).sum()
    }

    /// Block-diagonal Cartan matrix of all components.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let m = self.rank();
        let mut a = vec![vec![0; m]; m];
        let mut off = 0;
        for &(f, r) in &self.0 {
            let block = f.cartan(r);
            for i in 0..r {
                for j in 0..r {
                    a[off + i][off + j] = block[i][j];
                }
            }
            off += r;
        }
        a
    }

    /// Every finite Cartan type of total rank between 1 and `max_rank`
    /// (components in catalog order).
    pub fn all_up_to_rank(max_rank: usize) -> Vec<CartanType> {
        let mut irreducible = Vec::new();
        for r in 1..=max_rank {
            for f in [Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G] {
                // Skip the small-rank coincidences C2 = B2 and D3 = A3.
                let coincident = (f == Family::C && r == 2) || (f == Family::D && r == 3);
                if !coincident && f.check_rank(r).is_ok() {
                    irreducible.push((f, r));
                }
            }
        }
        let mut out = Vec::new();
        let mut stack: Vec<(Family, usize)> = Vec::new();
        fn rec(
            irr: &[(Family, usize)],
            start: usize,
            budget: usize,
            stack: &mut Vec<(Family, usize)>,
            out: &mut Vec<CartanType>,
        ) {
            if !stack.is_empty() {
                out.push(CartanType(stack.clone()));
            }
            for k in start..irr.len() {
                if irr[k].1 <= budget {
                    stack.push(irr[k]);
                    rec(irr, k, budget - irr[k].1, stack, out);
                    stack.pop();
                }
            }
        }
        rec(&irreducible, 0, max_rank, &mut stack, &mut out);
        out.sort_by_key(|t| (t.rank(), t.to_string()));
        out
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(fam, r)| format!("{fam:?}{r}")).collect();
        write!(f, "{}", parts.join("x"))
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::UnknownDescriptor(s.to_string());
        let mut comps = Vec::new();
        for part in s.split(['x', '×', '*']) {
            let part = part.trim();
            let mut chars = part.chars();
            let fam = match chars.next().map(|c| c.to_ascii_uppercase()) {
                Some('A') => Family::A,
                Some('B') => Family::B,
                Some('C') => Family::C,
                Some('D') => Family::D,
                Some('E') => Family::E,
                Some('F') => Family::F,
                Some('G') => Family::G,
                _ => return Err(bad()),
            };
            let r: usize = chars.as_str().trim_start_matches('_').parse().map_err(|_| bad())?;
            comps.push((fam, r));
        }
        CartanType::new(comps)
    }
}

/// A named group: `GL(n)`, `SL(n)`, `PGL(n)`, or the simply connected /
/// adjoint group of a Cartan type.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupDescriptor {
    GL(usize),
    SL(usize),
    PGL(usize),
    SimplyConnected(CartanType),
    Adjoint(CartanType),
}

impl GroupDescriptor {
    /// Parses `GL:3`, `GL(3)`, `SC:B2`, `SimplyConnected(B2)`, `Ad:A1xG2`, ...
    pub fn parse(s: &str) -> Result<GroupDescriptor> {
        let bad = || Error::UnknownDescriptor(s.to_string());
        let t = s.trim();
        let (head, arg) = if let Some((h, a)) = t.split_once(':') {
            (h, a)
        } else if let Some((h, a)) = t.split_once('(') {
            (h, a.strip_suffix(')').ok_or_else(bad)?)
        } else {
            return Err(bad());
        };
        let head = head.trim().to_ascii_lowercase();
        let arg = arg.trim();
        let size = || -> Result<usize> { arg.parse().map_err(|_| bad()) };
        match head.as_str() {
            "gl" => GroupDescriptor::gl(size()?),
            "sl" => GroupDescriptor::sl(size()?),
            "pgl" => GroupDescriptor::pgl(size()?),
            "sc" | "simplyconnected" => Ok(GroupDescriptor::SimplyConnected(arg.parse()?)),
            "ad" | "adjoint" => Ok(GroupDescriptor::Adjoint(arg.parse()?)),
            _ => Err(bad()),
        }
    }

    pub fn gl(n: usize) -> Result<GroupDescriptor> {
        if (1..=MAX_CLASSICAL_RANK + 1).contains(&n) {
            Ok(GroupDescriptor::GL(n))
        } else {
            Err(Error::RankOutOfRange { kind: "GL".into(), rank: n })
        }
    }

    pub fn sl(n: usize) -> Result<GroupDescriptor> {
        if (2..=MAX_CLASSICAL_RANK + 1).contains(&n) {
            Ok(GroupDescriptor::SL(n))
        } else {
            Err(Error::RankOutOfRange { kind: "SL".into(), rank: n })
        }
    }

    pub fn pgl(n: usize) -> Result<GroupDescriptor> {
        if (2..=MAX_CLASSICAL_RANK + 1).contains(&n) {
            Ok(GroupDescriptor::PGL(n))
        } else {
            Err(Error::RankOutOfRange { kind: "PGL".into(), rank: n })
        }
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupDescriptor::GL(n) => write!(f, "GL({n})"),
            GroupDescriptor::SL(n) => write!(f, "SL({n})"),
            GroupDescriptor::PGL(n) => write!(f, "PGL({n})"),
            GroupDescriptor::SimplyConnected(t) => write!(f, "SimplyConnected({t})"),
            GroupDescriptor::Adjoint(t) => write!(f, "Adjoint({t})"),
        }
    }
}

impl FromStr for GroupDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GroupDescriptor::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_descriptors() {
        assert_eq!(GroupDescriptor::parse("GL:3").unwrap(), GroupDescriptor::GL(3));
        assert_eq!(GroupDescriptor::parse("pgl(2)").unwrap(), GroupDescriptor::PGL(2));
        let sc = GroupDescriptor::parse("SC:A1xB2").unwrap();
        assert_eq!(sc.to_string(), "SimplyConnected(A1xB2)");
        assert!(GroupDescriptor::parse("SC:E9").is_err());
        assert!(GroupDescriptor::parse("Q:3").is_err());
        assert!(GroupDescriptor::parse("GL:0").is_err());
    }

    #[test]
    fn exceptional_cartan_entries() {
        let g2 = Family::G.cartan(2);
        assert_eq!(g2, vec![vec![2, -3], vec![-1, 2]]);
        let b2 = Family::B.cartan(2);
        assert_eq!(b2, vec![vec![2, -1], vec![-2, 2]]);
    }

    #[test]
    fn catalog_up_to_rank_two() {
        let names: Vec<String> =
            CartanType::all_up_to_rank(2).iter().map(|t| t.to_string()).collect();
        assert_eq!(names, vec!["A1", "A1xA1", "A2", "B2", "G2"]);
    }
}
