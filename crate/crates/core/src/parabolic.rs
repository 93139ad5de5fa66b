use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A subset `I_M` of the simple-root indices, naming a standard parabolic.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Parabolic(u64);

impl Parabolic {
    pub const BOREL: Parabolic = Parabolic(0);

    /// The whole index set `{0, …, m-1}`, i.e. the group itself.
    pub fn full(m: usize) -> Parabolic {
        assert!(m <= 64);
        if m == 64 {
            Parabolic(u64::MAX)
        } else {
            Parabolic((1u64 << m) - 1)
        }
    }

    pub fn from_bits(bits: u64) -> Parabolic {
        Parabolic(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Parabolic {
        Parabolic(it.into_iter().fold(0, |acc, i| acc | (1u64 << i)))
    }

    /// Checked construction against `m` simple roots.
    pub fn checked<I: IntoIterator<Item = usize>>(it: I, m: usize) -> Result<Parabolic> {
        let mut bits = 0u64;
        for i in it {
            if i >= m {
                return Err(Error::IndexOutOfRange { index: i, simple: m });
            }
            bits |= 1 << i;
        }
        Ok(Parabolic(bits))
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 & (1 << i) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: Parabolic) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn complement(self, m: usize) -> Parabolic {
        Parabolic(Parabolic::full(m).0 & !self.0)
    }

    pub fn with(self, i: usize) -> Parabolic {
        Parabolic(self.0 | (1 << i))
    }

    pub fn without(self, i: usize) -> Parabolic {
        Parabolic(self.0 & !(1 << i))
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&i| self.0 & (1 << i) != 0)
    }

    pub fn indices(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of `{0, …, m-1}`, ordered by bitmask.
    pub fn all(m: usize) -> impl Iterator<Item = Parabolic> {
        assert!(m < 32, "too many simple roots to enumerate parabolics");
        (0..1u64 << m).map(Parabolic)
    }
}

impl fmt::Debug for Parabolic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for Parabolic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl Serialize for Parabolic {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.indices().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Parabolic {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        if v.iter().any(|&i| i >= 64) {
            return Err(serde::de::Error::custom("parabolic index out of range"));
        }
        Ok(Parabolic::from_indices(v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_operations() {
        let p = Parabolic::from_indices([0, 2]);
        assert!(p.contains(2) && !p.contains(1));
        assert_eq!(p.complement(3), Parabolic::from_indices([1]));
        assert!(Parabolic::BOREL.is_subset(p));
        assert!(!p.is_subset(Parabolic::from_indices([0])));
        assert_eq!(Parabolic::all(3).count(), 8);
        assert_eq!(p.to_string(), "{0,2}");
        assert!(Parabolic::checked([3], 3).is_err());
    }
}
