//! Weyl group elements and breadth-first enumeration of the group.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{Coweight, RationalVector, RootDatum, Side, Weight};
use crate::error::{Error, Result};
use crate::rational::{dot_int, Rational};

/// Default bound on the number of Weyl group elements to enumerate.
pub const DEFAULT_CAP: usize = 1_000_000;

/// A Weyl group element acting on weights (`matrix`) and on coweights
/// (`comatrix`, the inverse transpose), together with a reduced word.
///
/// Equality compares matrices only.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WeylElement {
    n: usize,
    matrix: Vec<i64>,
    comatrix: Vec<i64>,
    word: Vec<usize>,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl Eq for WeylElement {}

impl std::hash::Hash for WeylElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.matrix.hash(state);
    }
}

fn identity(n: usize) -> Vec<i64> {
    let mut m = vec![0; n * n];
    for i in 0..n {
        m[i * n + i] = 1;
    }
    m
}

/// `M ← M − (M a) bᵀ`, i.e. right multiplication by `I − a bᵀ`.
fn right_reflect(m: &mut [i64], n: usize, a: &[i64], b: &[i64]) {
    for r in 0..n {
        let row = &mut m[r * n..(r + 1) * n];
        let ma: i64 = row.iter().zip(a).map(|(x, y)| x * y).sum();
        if ma != 0 {
            for (x, &y) in row.iter_mut().zip(b) {
                *x -= ma * y;
            }
        }
    }
}

fn transpose(m: &[i64], n: usize) -> Vec<i64> {
    let mut t = vec![0; n * n];
    for r in 0..n {
        for c in 0..n {
            t[c * n + r] = m[r * n + c];
        }
    }
    t
}

fn mul(a: &[i64], b: &[i64], n: usize) -> Vec<i64> {
    let mut out = vec![0; n * n];
    for r in 0..n {
        for k in 0..n {
            let x = a[r * n + k];
            if x != 0 {
                for c in 0..n {
                    out[r * n + c] += x * b[k * n + c];
                }
            }
        }
    }
    out
}

fn apply(m: &[i64], n: usize, v: &[i64]) -> Vec<i64> {
    (0..n).map(|r| m[r * n..(r + 1) * n].iter().zip(v).map(|(x, y)| x * y).sum()).collect()
}

fn apply_q(m: &[i64], n: usize, v: &[Rational]) -> Vec<Rational> {
    (0..n).map(|r| dot_int(v, &m[r * n..(r + 1) * n])).collect()
}

impl WeylElement {
    pub fn identity(n: usize) -> WeylElement {
        WeylElement { n, matrix: identity(n), comatrix: identity(n), word: Vec::new() }
    }

    /// Product `s_{i_1} s_{i_2} ... s_{i_k}` of the letters of `word`.
    /// The word is stored as given and need not be reduced.
    pub fn from_word(rd: &RootDatum, word: &[usize]) -> Result<WeylElement> {
        let mut w = WeylElement::identity(rd.rank());
        for &i in word {
            if i >= rd.num_simple() {
                return Err(Error::IndexOutOfRange { index: i, simple: rd.num_simple() });
            }
            w = w.times_simple(rd, i);
        }
        Ok(w)
    }

    /// Right multiplication by the simple reflection `s_i`.
    pub fn times_simple(&self, rd: &RootDatum, i: usize) -> WeylElement {
        let mut matrix = self.matrix.clone();
        let mut comatrix = self.comatrix.clone();
        right_reflect(&mut matrix, self.n, rd.simple_root(i), rd.simple_coroot(i));
        right_reflect(&mut comatrix, self.n, rd.simple_coroot(i), rd.simple_root(i));
        let mut word = self.word.clone();
        word.push(i);
        WeylElement { n: self.n, matrix, comatrix, word }
    }

    pub fn inverse(&self) -> WeylElement {
        WeylElement {
            n: self.n,
            matrix: transpose(&self.comatrix, self.n),
            comatrix: transpose(&self.matrix, self.n),
            word: self.word.iter().rev().copied().collect(),
        }
    }

    /// `self ∘ other`; the word is the concatenation.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        WeylElement {
            n: self.n,
            matrix: mul(&self.matrix, &other.matrix, self.n),
            comatrix: mul(&self.comatrix, &other.comatrix, self.n),
            word,
        }
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// Length of the stored word (reduced for elements produced by [`WeylGroup`]).
    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == identity(self.n)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Row-major weight-action matrix.
    pub fn matrix(&self) -> &[i64] {
        &self.matrix
    }

    /// Row-major coweight-action matrix.
    pub fn comatrix(&self) -> &[i64] {
        &self.comatrix
    }

    pub fn matrix_rows(&self) -> Vec<Vec<i64>> {
        self.matrix.chunks(self.n.max(1)).take(self.n).map(<[i64]>::to_vec).collect()
    }

    pub fn act_weight(&self, v: &[i64]) -> Vec<i64> {
        apply(&self.matrix, self.n, v)
    }

    pub fn act_coweight(&self, v: &[i64]) -> Vec<i64> {
        apply(&self.comatrix, self.n, v)
    }

    pub fn act_weight_q(&self, v: &[Rational]) -> Vec<Rational> {
        apply_q(&self.matrix, self.n, v)
    }

    pub fn act_coweight_q(&self, v: &[Rational]) -> Vec<Rational> {
        apply_q(&self.comatrix, self.n, v)
    }

    /// Word rendered as `s1 s2 ...` with 1-based letters, or `e`.
    pub fn word_string(&self) -> String {
        if self.word.is_empty() {
            "e".to_string()
        } else {
            self.word.iter().map(|i| format!("s{}", i + 1)).collect::<Vec<_>>().join(" ")
        }
    }
}

/// Values a Weyl element can act on.
pub trait WeylAction: Sized {
    fn act_by(&self, w: &WeylElement) -> Result<Self>;
}

impl WeylAction for Weight {
    fn act_by(&self, w: &WeylElement) -> Result<Self> {
        check(w, self.0.len())?;
        Ok(Weight(w.act_weight(&self.0)))
    }
}

impl WeylAction for Coweight {
    fn act_by(&self, w: &WeylElement) -> Result<Self> {
        check(w, self.0.len())?;
        Ok(Coweight(w.act_coweight(&self.0)))
    }
}

impl WeylAction for RationalVector {
    fn act_by(&self, w: &WeylElement) -> Result<Self> {
        check(w, self.coords.len())?;
        let coords = match self.side {
            Side::Weight => w.act_weight_q(&self.coords),
            Side::Coweight => w.act_coweight_q(&self.coords),
        };
        Ok(RationalVector { side: self.side, coords })
    }
}

fn check(w: &WeylElement, len: usize) -> Result<()> {
    if w.n == len {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected: w.n, got: len })
    }
}

/// Applies `w` to a weight, coweight or rational vector.
pub fn act<T: WeylAction>(w: &WeylElement, v: &T) -> Result<T> {
    v.act_by(w)
}

/// All elements of a finite Weyl group, ordered by length and then by
/// reduced word.
#[derive(Debug, Clone)]
pub struct WeylGroup {
    elements: Vec<WeylElement>,
    index: HashMap<Vec<i64>, usize>,
}

impl WeylGroup {
    /// Breadth-first enumeration by right multiplication with simple
    /// reflections. Words found this way are reduced and lexicographically
    /// least among reduced words of the same element.
    pub fn generate(rd: &RootDatum, cap: usize) -> Result<WeylGroup> {
        let n = rd.rank();
        let m = rd.num_simple();
        let e = WeylElement::identity(n);
        let mut index = HashMap::new();
        index.insert(e.matrix.clone(), 0);
        let mut elements = vec![e];
        let mut level = 0..1;
        while !level.is_empty() {
            let start = elements.len();
            for k in level.clone() {
                for i in 0..m {
                    let next = elements[k].times_simple(rd, i);
                    if !index.contains_key(&next.matrix) {
                        if elements.len() >= cap {
                            return Err(Error::CapExceeded { cap });
                        }
                        index.insert(next.matrix.clone(), elements.len());
                        elements.push(next);
                    }
                }
            }
            level = start..elements.len();
        }
        Ok(WeylGroup { elements, index })
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn get(&self, k: usize) -> &WeylElement {
        &self.elements[k]
    }

    /// The longest element `w_0`.
    pub fn longest(&self) -> &WeylElement {
        self.elements.last().expect("group is nonempty")
    }

    /// Position of the element with the same matrix as `w`.
    pub fn position(&self, w: &WeylElement) -> Option<usize> {
        self.index.get(&w.matrix).copied()
    }

    /// Canonical (reduced-word) copy of `w`.
    pub fn canonical(&self, w: &WeylElement) -> Option<&WeylElement> {
        self.position(w).map(|k| &self.elements[k])
    }

    /// Index of `elements[a] ∘ elements[b]`.
    pub fn product(&self, a: usize, b: usize) -> usize {
        let ea = &self.elements[a];
        let m = mul(&ea.matrix, &self.elements[b].matrix, ea.n);
        self.index[&m]
    }
}

/// All Weyl group elements, ordered by length then word.
pub fn weyl_elements(rd: &RootDatum, cap: usize) -> Result<Vec<WeylElement>> {
    Ok(WeylGroup::generate(rd, cap)?.elements)
}
