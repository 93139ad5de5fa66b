//! Quotients of the coweight lattice by Levi coroot lattices, with torsion.

mod normal_form;

use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

pub use normal_form::{hermite_rows, smith, unimodular_inverse, Smith};

use crate::error::{Error, Result};
use crate::parabolic::Parabolic;
use crate::rational::{self, QMatrix, Rational};
use crate::rootdata::{Coweight, RootDatum};

/// `Λ̌_G / span_ℤ{α̌_i : i ∈ I_M}` presented by a unimodular change of basis
/// `U` of the coweight lattice. Coordinates `y = U v` split into
/// `|I_M|` rows carrying elementary divisors (residues are kept for
/// divisors above 1) followed by `n − |I_M|` free rows in Hermite form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientLattice {
    rank: usize,
    parabolic: Parabolic,
    u: Vec<Vec<i64>>,
    u_inv: Vec<Vec<i64>>,
    divisors: Vec<i64>,
    coroots: Vec<Vec<i64>>,
    coroot_solver: Vec<Vec<Rational>>,
    phi: QMatrix,
}

/// An element of a [`QuotientLattice`]: free coordinates and torsion
/// residues in `[0, d)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QuotientClass {
    pub free: Vec<i64>,
    pub torsion: Vec<i64>,
}

impl std::str::FromStr for QuotientClass {
    type Err = Error;

    /// Parses `(3,0)[1]`, `3,0`, `[1]` or `()`.
    fn from_str(s: &str) -> Result<QuotientClass> {
        let bad = || Error::MalformedClass(format!("cannot parse `{s}` as a degree class"));
        let s = s.trim();
        let (free, torsion) = match s.split_once('[') {
            Some((f, t)) => (f, Some(t.strip_suffix(']').ok_or_else(bad)?)),
            None => (s, None),
        };
        let free = free.trim();
        let free = free.strip_prefix('(').map_or(Some(free), |f| f.strip_suffix(')')).ok_or_else(bad)?;
        let list = |t: &str| -> Result<Vec<i64>> {
            t.split(',')
                .map(str::trim)
                .filter(|x| !x.is_empty())
                .map(|x| x.parse::<i64>().map_err(|_| bad()))
                .collect()
        };
        Ok(QuotientClass { free: list(free)?, torsion: torsion.map(list).transpose()?.unwrap_or_default() })
    }
}

impl fmt::Display for QuotientClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let free: Vec<String> = self.free.iter().map(ToString::to_string).collect();
        write!(f, "({})", free.join(","))?;
        if !self.torsion.is_empty() {
            let t: Vec<String> = self.torsion.iter().map(ToString::to_string).collect();
            write!(f, "[{}]", t.join(","))?;
        }
        Ok(())
    }
}

impl QuotientLattice {
    pub fn new(rd: &RootDatum, parabolic: Parabolic) -> QuotientLattice {
        let n = rd.rank();
        let idx = parabolic.indices();
        let k = idx.len();
        let c: Vec<Vec<i64>> =
            (0..n).map(|r| idx.iter().map(|&i| rd.simple_coroot(i)[r]).collect()).collect();
        let snf = smith(&c, k);
        assert_eq!(snf.divisors.len(), k, "simple coroots are independent");
        let mut u = snf.u;
        let free = hermite_rows(&u[k..], n);
        u.truncate(k);
        u.extend(free);
        let u_inv = unimodular_inverse(&u);
        let m = rd.num_simple();
        // a_i = Σ_j Ainv[j][i] <v, α_j>
        let ainv = rd.cartan_inverse();
        let coroot_solver = (0..m)
            .map(|i| {
                (0..n)
                    .map(|c| (0..m).map(|j| &ainv[j][i] * rational::int(rd.simple_root(j)[c])).sum())
                    .collect()
            })
            .collect();
        QuotientLattice {
            rank: n,
            parabolic,
            u,
            u_inv,
            divisors: snf.divisors,
            coroots: rd.simple_coroots().to_vec(),
            coroot_solver,
            phi: slope_projector(rd, &idx),
        }
    }

    pub fn parabolic(&self) -> Parabolic {
        self.parabolic
    }

    /// Rank `n` of the ambient coweight lattice.
    pub fn ambient_rank(&self) -> usize {
        self.rank
    }

    pub fn free_rank(&self) -> usize {
        self.rank - self.divisors.len()
    }

    /// All elementary divisors of the Levi coroot lattice.
    pub fn elementary_divisors(&self) -> &[i64] {
        &self.divisors
    }

    /// Orders of the cyclic torsion factors (the divisors above 1).
    pub fn torsion_invariants(&self) -> Vec<i64> {
        self.divisors.iter().copied().filter(|&d| d > 1).collect()
    }

    pub fn torsion_order(&self) -> i64 {
        self.divisors.iter().product()
    }

    /// Rows of the free part of the change of basis: the functionals
    /// giving the free coordinates of a class.
    pub fn free_functionals(&self) -> &[Vec<i64>] {
        &self.u[self.divisors.len()..]
    }

    pub fn zero(&self) -> QuotientClass {
        QuotientClass { free: vec![0; self.free_rank()], torsion: vec![0; self.torsion_invariants().len()] }
    }

    pub fn project(&self, v: &Coweight) -> Result<QuotientClass> {
        if v.0.len() != self.rank {
            return Err(Error::DimensionMismatch { expected: self.rank, got: v.0.len() });
        }
        Ok(self.project_raw(&v.0))
    }

    pub(crate) fn project_raw(&self, v: &[i64]) -> QuotientClass {
        let y: Vec<i64> = self.u.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect();
        let k = self.divisors.len();
        let torsion = self
            .divisors
            .iter()
            .zip(&y)
            .filter(|(&d, _)| d > 1)
            .map(|(&d, &x)| x.rem_euclid(d))
            .collect();
        QuotientClass { free: y[k..].to_vec(), torsion }
    }

    pub fn check_class(&self, c: &QuotientClass) -> Result<()> {
        let tors = self.torsion_invariants();
        if c.free.len() != self.free_rank() || c.torsion.len() != tors.len() {
            return Err(Error::MalformedClass(format!(
                "expected {} free and {} torsion coordinates, got {} and {}",
                self.free_rank(),
                tors.len(),
                c.free.len(),
                c.torsion.len()
            )));
        }
        if let Some((x, d)) = c.torsion.iter().zip(&tors).find(|(x, d)| !(0..**d).contains(*x)) {
            return Err(Error::MalformedClass(format!("torsion residue {x} outside [0, {d})")));
        }
        Ok(())
    }

    /// The canonical integral lift of a class.
    pub fn lift(&self, c: &QuotientClass) -> Result<Coweight> {
        self.check_class(c)?;
        let k = self.divisors.len();
        let mut y = vec![0i64; self.rank];
        let mut t = c.torsion.iter();
        for (slot, &d) in y.iter_mut().zip(&self.divisors) {
            if d > 1 {
                *slot = *t.next().expect("checked length");
            }
        }
        y[k..].copy_from_slice(&c.free);
        Ok(Coweight(
            self.u_inv.iter().map(|row| row.iter().zip(&y).map(|(a, b)| a * b).sum()).collect(),
        ))
    }

    pub fn add(&self, a: &QuotientClass, b: &QuotientClass) -> QuotientClass {
        self.combine(a, b, 1)
    }

    pub fn sub(&self, a: &QuotientClass, b: &QuotientClass) -> QuotientClass {
        self.combine(a, b, -1)
    }

    fn combine(&self, a: &QuotientClass, b: &QuotientClass, s: i64) -> QuotientClass {
        let free = a.free.iter().zip(&b.free).map(|(x, y)| x + s * y).collect();
        let torsion = a
            .torsion
            .iter()
            .zip(&b.torsion)
            .zip(self.torsion_invariants())
            .map(|((x, y), d)| (x + s * y).rem_euclid(d))
            .collect();
        QuotientClass { free, torsion }
    }

    /// Coefficients of an integral coweight in the simple-coroot basis, if
    /// it lies in their rational span.
    fn coroot_coefficients(&self, v: &[i64]) -> Option<Vec<Rational>> {
        let a: Vec<Rational> = self.coroot_solver.iter().map(|row| rational::dot_int(row, v)).collect();
        let mut back = vec![Rational::zero(); self.rank];
        for (c, coroot) in a.iter().zip(&self.coroots) {
            for (b, &x) in back.iter_mut().zip(coroot) {
                *b += c * rational::int(x);
            }
        }
        (back.iter().zip(v).all(|(b, &x)| *b == rational::int(x))).then_some(a)
    }

    /// The slope map on rational coweights: `v − Σ_{i∈I_M} x_i α̌_i` with
    /// `x` chosen so the result pairs to zero with every `α_j`, `j ∈ I_M`.
    pub fn phi_q(&self, v: &[Rational]) -> Vec<Rational> {
        self.phi.mul_vec(v)
    }

    pub fn phi_int(&self, v: &[i64]) -> Vec<Rational> {
        (0..self.rank).map(|r| rational::dot_int(self.phi.row(r), v)).collect()
    }

    /// Whether the class is the image of a nonnegative integral combination
    /// of simple coroots.
    ///
    /// Writing the canonical lift as `Σ a_i α̌_i`, this holds exactly when
    /// all `a_i` are integers and `a_j ≥ 0` for `j ∉ I_M`: the coefficients
    /// along `I_M` can be shifted freely by the kernel.
    pub fn positive_class(&self, c: &QuotientClass) -> Result<bool> {
        let v = self.lift(c)?;
        Ok(self.positive_lift(&v.0))
    }

    pub(crate) fn positive_lift(&self, v: &[i64]) -> bool {
        let Some(a) = self.coroot_coefficients(v) else {
            return false;
        };
        a.iter()
            .enumerate()
            .all(|(i, x)| x.is_integer() && (self.parabolic.contains(i) || !x.is_negative()))
    }
}

/// Matrix of `v ↦ v − C (Aᵀ)⁻¹ R v`, where `C` has the coroots of `I_M` as
/// columns, `R` the roots of `I_M` as rows and `A` is the Cartan submatrix.
fn slope_projector(rd: &RootDatum, idx: &[usize]) -> QMatrix {
    let n = rd.rank();
    let k = idx.len();
    let mut phi = QMatrix::zeros(n, n);
    for r in 0..n {
        phi.set(r, r, rational::int(1));
    }
    if k == 0 {
        return phi;
    }
    let sub_t: Vec<Vec<i64>> = (0..k).map(|a| (0..k).map(|b| rd.cartan()[idx[b]][idx[a]]).collect()).collect();
    let m = QMatrix::from_int_rows(&sub_t).inverse().expect("Cartan submatrix is invertible");
    // (M R)[a][c] = Σ_b M[a][b] α_{idx[b]}[c]
    let mr: Vec<Vec<Rational>> = (0..k)
        .map(|a| {
            (0..n)
                .map(|c| (0..k).map(|b| m.get(a, b) * rational::int(rd.simple_root(idx[b])[c])).sum())
                .collect()
        })
        .collect();
    for r in 0..n {
        for c in 0..n {
            let corr: Rational = (0..k)
                .filter(|&a| rd.simple_coroot(idx[a])[r] != 0)
                .map(|a| &mr[a][c] * rational::int(rd.simple_coroot(idx[a])[r]))
                .sum();
            let v = phi.get(r, c) - corr;
            phi.set(r, c, v);
        }
    }
    phi
}

/// Whether `<α̌_i, λ> = 0` for every `i ∈ I_M`.
pub fn in_weight_sublattice(rd: &RootDatum, parabolic: Parabolic, weight: &[i64]) -> bool {
    parabolic.iter().all(|i| rd.pair_coroot(i, weight) == 0)
}

/// An integral weight `x` with `<α̌_i, x> = labels[i]` for every simple
/// coroot, if one exists.
pub fn weight_with_labels(rd: &RootDatum, labels: &[i64]) -> Result<Option<Vec<i64>>> {
    let m = rd.num_simple();
    if labels.len() != m {
        return Err(Error::DimensionMismatch { expected: m, got: labels.len() });
    }
    let n = rd.rank();
    let c: Vec<Vec<i64>> = (0..m).map(|i| rd.simple_coroot(i).to_vec()).collect();
    let sm = normal_form::smith(&c, n);
    let mut y = vec![0i64; n];
    for k in 0..m {
        let t: i64 = sm.u[k].iter().zip(labels).map(|(a, b)| a * b).sum();
        let d = sm.divisors[k];
        if t % d != 0 {
            return Ok(None);
        }
        y[k] = t / d;
    }
    Ok(Some((0..n).map(|r| (0..n).map(|k| sm.v[r][k] * y[k]).sum()).collect()))
}

/// Block sizes of a `GL(n)` parabolic, in order.
pub fn gl_block_sizes(n: usize, parabolic: Parabolic) -> Vec<usize> {
    let mut sizes = Vec::new();
    let mut cur = 1;
    for i in 0..n.saturating_sub(1) {
        if parabolic.contains(i) {
            cur += 1;
        } else {
            sizes.push(cur);
            cur = 1;
        }
    }
    sizes.push(cur);
    sizes
}

/// The `GL(n)` parabolic whose Levi has the given block sizes.
pub fn gl_parabolic_of_blocks(sizes: &[usize]) -> Parabolic {
    let mut p = Parabolic::BOREL;
    let mut pos = 0;
    for &s in sizes {
        for i in pos..pos + s - 1 {
            p = p.with(i);
        }
        pos += s;
    }
    p
}
