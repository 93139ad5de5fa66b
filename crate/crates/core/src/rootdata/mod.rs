//! Root data: dual lattices with simple roots and coroots, root systems,
//! Weyl groups and the dominance order.

mod cartan;
mod roots;
mod weyl;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub use cartan::{CartanType, Family, GroupDescriptor, MAX_CLASSICAL_RANK};
pub use roots::{Root, RootId, RootSystem};
pub use weyl::{act, weyl_elements, WeylAction, WeylElement, WeylGroup, DEFAULT_CAP};

use crate::error::{Error, Result};
use crate::lattice::QuotientLattice;
use crate::parabolic::Parabolic;
use crate::rational::{self, dot_int, int, serde_vec_q, QMatrix, Rational};

/// Integer weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

/// Integer coweight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Coweight(pub Vec<i64>);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Weight,
    Coweight,
}

/// Exact rational vector on the weight or coweight side.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RationalVector {
    pub side: Side,
    #[serde(with = "serde_vec_q")]
    pub coords: Vec<Rational>,
}

impl RationalVector {
    pub fn coweight(coords: Vec<Rational>) -> Self {
        RationalVector { side: Side::Coweight, coords }
    }

    pub fn weight(coords: Vec<Rational>) -> Self {
        RationalVector { side: Side::Weight, coords }
    }

    pub fn from_coweight(v: &Coweight) -> Self {
        Self::coweight(rational::to_rationals(&v.0))
    }

    pub fn from_weight(v: &Weight) -> Self {
        Self::weight(rational::to_rationals(&v.0))
    }
}

impl fmt::Display for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(rational::format).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A root datum presented in a fixed basis of the weight lattice `ℤⁿ` and
/// the dual basis of the coweight lattice, paired by the dot product.
pub struct RootDatum {
    rank: usize,
    simple_roots: Vec<Vec<i64>>,
    simple_coroots: Vec<Vec<i64>>,
    cartan: Vec<Vec<i64>>,
    cartan_inv: Vec<Vec<Rational>>,
    symmetrizer: Vec<i64>,
    roots: RootSystem,
    descriptor: Option<GroupDescriptor>,
    quotients: RwLock<HashMap<Parabolic, Arc<QuotientLattice>>>,
}

impl Clone for RootDatum {
    fn clone(&self) -> Self {
        RootDatum {
            rank: self.rank,
            simple_roots: self.simple_roots.clone(),
            simple_coroots: self.simple_coroots.clone(),
            cartan: self.cartan.clone(),
            cartan_inv: self.cartan_inv.clone(),
            symmetrizer: self.symmetrizer.clone(),
            roots: self.roots.clone(),
            descriptor: self.descriptor.clone(),
            quotients: RwLock::new(HashMap::new()),
        }
    }
}

impl PartialEq for RootDatum {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank
            && self.simple_roots == other.simple_roots
            && self.simple_coroots == other.simple_coroots
    }
}

impl Eq for RootDatum {}

impl fmt::Debug for RootDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RootDatum")
            .field("descriptor", &self.descriptor.as_ref().map(ToString::to_string))
            .field("rank", &self.rank)
            .field("simple_roots", &self.simple_roots)
            .field("simple_coroots", &self.simple_coroots)
            .finish()
    }
}

/// Integer symmetrizer `ε` with `ε_i A[i][j] = ε_j A[j][i]`, normalized to
/// coprime positive integers on each connected component.
fn symmetrizer(a: &[Vec<i64>]) -> Option<Vec<i64>> {
    let m = a.len();
    let mut eps: Vec<Option<Rational>> = vec![None; m];
    for start in 0..m {
        if eps[start].is_some() {
            continue;
        }
        eps[start] = Some(int(1));
        let mut comp = vec![start];
        let mut head = 0;
        while head < comp.len() {
            let i = comp[head];
            head += 1;
            for j in 0..m {
                if a[i][j] == 0 || i == j {
                    continue;
                }
                let ej = eps[i].clone()? * int(a[i][j]) / int(a[j][i]);
                match &eps[j] {
                    Some(x) if *x != ej => return None,
                    Some(_) => {}
                    None => {
                        eps[j] = Some(ej);
                        comp.push(j);
                    }
                }
            }
        }
        let l = comp.iter().fold(1i64, |l, &i| rational::lcm_i64(l, eps_denom(&eps[i])));
        let scaled: Vec<i64> = comp
            .iter()
            .map(|&i| rational::to_i64(&(eps[i].clone().unwrap() * int(l))).unwrap())
            .collect();
        let g = scaled.iter().fold(0, |g, &x| rational::gcd_i64(g, x));
        for (&i, &x) in comp.iter().zip(&scaled) {
            eps[i] = Some(int(x / g));
        }
    }
    eps.into_iter().map(|e| e.and_then(|x| rational::to_i64(&x))).collect()
}

fn eps_denom(e: &Option<Rational>) -> i64 {
    use num_traits::ToPrimitive;
    e.as_ref().map_or(1, |x| x.denom().to_i64().unwrap_or(1))
}

impl RootDatum {
    /// Builds and validates a root datum from explicit simple roots and
    /// coroots. The pairing matrix must be a Cartan matrix of finite type.
    pub fn new(rank: usize, simple_roots: Vec<Vec<i64>>, simple_coroots: Vec<Vec<i64>>) -> Result<RootDatum> {
        Self::build(rank, simple_roots, simple_coroots, None)
    }

    fn build(
        rank: usize,
        simple_roots: Vec<Vec<i64>>,
        simple_coroots: Vec<Vec<i64>>,
        descriptor: Option<GroupDescriptor>,
    ) -> Result<RootDatum> {
        let invalid = |msg: String| Err(Error::InvalidRootDatum(msg));
        if rank == 0 {
            return invalid("rank must be positive".into());
        }
        if simple_roots.len() != simple_coroots.len() {
            return invalid(format!(
                "{} simple roots but {} simple coroots",
                simple_roots.len(),
                simple_coroots.len()
            ));
        }
        let m = simple_roots.len();
        if m > rank {
            return invalid(format!("{m} simple roots exceed rank {rank}"));
        }
        if m > 63 {
            return invalid("at most 63 simple roots are supported".into());
        }
        for v in simple_roots.iter().chain(&simple_coroots) {
            if v.len() != rank {
                return Err(Error::DimensionMismatch { expected: rank, got: v.len() });
            }
        }
        let cartan: Vec<Vec<i64>> = simple_coroots
            .iter()
            .map(|c| simple_roots.iter().map(|r| c.iter().zip(r).map(|(x, y)| x * y).sum()).collect())
            .collect();
        for i in 0..m {
            if cartan[i][i] != 2 {
                return invalid(format!("<α̌_{i}, α_{i}> = {} instead of 2", cartan[i][i]));
            }
            for j in 0..m {
                if i != j && (cartan[i][j] > 0 || (cartan[i][j] == 0) != (cartan[j][i] == 0)) {
                    return invalid(format!("pairing matrix is not a Cartan matrix at ({i},{j})"));
                }
            }
        }
        let Some(symmetrizer) = symmetrizer(&cartan) else {
            return invalid("pairing matrix is not symmetrizable".into());
        };
        // Sylvester's criterion on the symmetrized matrix.
        let sym: Vec<Vec<i64>> =
            (0..m).map(|i| (0..m).map(|j| symmetrizer[i] * cartan[i][j]).collect()).collect();
        for k in 1..=m {
            let lead: Vec<Vec<i64>> = sym[..k].iter().map(|r| r[..k].to_vec()).collect();
            if !QMatrix::from_int_rows(&lead).determinant().is_positive() {
                return invalid("pairing matrix is not of finite type".into());
            }
        }
        let inv = QMatrix::from_int_rows(&cartan).inverse().expect("finite type is invertible");
        let cartan_inv = (0..m).map(|i| inv.row(i).to_vec()).collect();
        let roots = RootSystem::generate(&cartan, &simple_roots, &simple_coroots);
        Ok(RootDatum {
            rank,
            simple_roots,
            simple_coroots,
            cartan,
            cartan_inv,
            symmetrizer,
            roots,
            descriptor,
            quotients: RwLock::new(HashMap::new()),
        })
    }

    /// Builds the root datum of a named group.
    pub fn named(desc: &GroupDescriptor) -> Result<RootDatum> {
        let unit = |n: usize, i: usize| {
            let mut e = vec![0; n];
            e[i] = 1;
            e
        };
        let (rank, roots, coroots) = match desc {
            GroupDescriptor::GL(n) => {
                let n = *n;
                let simple: Vec<Vec<i64>> = (0..n.saturating_sub(1))
                    .map(|i| {
                        let mut e = vec![0; n];
                        e[i] = 1;
                        e[i + 1] = -1;
                        e
                    })
                    .collect();
                (n, simple.clone(), simple)
            }
            GroupDescriptor::SL(n) => {
                let t = CartanType::irreducible(Family::A, n - 1)?;
                return Self::named_with(&GroupDescriptor::SimplyConnected(t), desc.clone());
            }
            GroupDescriptor::PGL(n) => {
                let t = CartanType::irreducible(Family::A, n - 1)?;
                return Self::named_with(&GroupDescriptor::Adjoint(t), desc.clone());
            }
            GroupDescriptor::SimplyConnected(t) => {
                let a = t.cartan_matrix();
                let m = a.len();
                let roots = (0..m).map(|j| (0..m).map(|i| a[i][j]).collect()).collect();
                let coroots = (0..m).map(|i| unit(m, i)).collect();
                (m, roots, coroots)
            }
            GroupDescriptor::Adjoint(t) => {
                let a = t.cartan_matrix();
                let m = a.len();
                let roots = (0..m).map(|j| unit(m, j)).collect();
                (m, roots, a)
            }
        };
        Self::build(rank, roots, coroots, Some(desc.clone()))
    }

    fn named_with(inner: &GroupDescriptor, label: GroupDescriptor) -> Result<RootDatum> {
        let mut rd = Self::named(inner)?;
        rd.descriptor = Some(label);
        Ok(rd)
    }

    /// Parses a descriptor such as `GL:3` or `SC:B2` and builds it.
    pub fn parse_named(s: &str) -> Result<RootDatum> {
        Self::named(&GroupDescriptor::parse(s)?)
    }

    pub fn gl(n: usize) -> Result<RootDatum> {
        Self::named(&GroupDescriptor::gl(n)?)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number `m` of simple roots.
    pub fn num_simple(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn full(&self) -> Parabolic {
        Parabolic::full(self.num_simple())
    }

    pub fn descriptor(&self) -> Option<&GroupDescriptor> {
        self.descriptor.as_ref()
    }

    /// `Some(n)` when this datum was built as `GL(n)`.
    pub fn gl_size(&self) -> Option<usize> {
        match self.descriptor {
            Some(GroupDescriptor::GL(n)) => Some(n),
            _ => None,
        }
    }

    pub fn name(&self) -> String {
        self.descriptor.as_ref().map_or_else(|| format!("custom(rank {})", self.rank), ToString::to_string)
    }

    pub fn simple_roots(&self) -> &[Vec<i64>] {
        &self.simple_roots
    }

    pub fn simple_coroots(&self) -> &[Vec<i64>] {
        &self.simple_coroots
    }

    pub fn simple_root(&self, i: usize) -> &[i64] {
        &self.simple_roots[i]
    }

    pub fn simple_coroot(&self, i: usize) -> &[i64] {
        &self.simple_coroots[i]
    }

    /// `A[i][j] = <α̌_i, α_j>`.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn cartan_inverse(&self) -> &[Vec<Rational>] {
        &self.cartan_inv
    }

    /// Integer symmetrizer `ε` with `ε_i A[i][j] = ε_j A[j][i]`.
    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    pub fn roots(&self) -> &RootSystem {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[Root] {
        self.roots.positive()
    }

    pub fn check_dim(&self, len: usize) -> Result<()> {
        if len == self.rank {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: self.rank, got: len })
        }
    }

    pub fn check_parabolic(&self, p: Parabolic) -> Result<()> {
        Parabolic::checked(p.iter(), self.num_simple()).map(|_| ())
    }

    /// `<α̌_i, λ>` for an integral weight.
    pub fn pair_coroot(&self, i: usize, weight: &[i64]) -> i64 {
        self.simple_coroots[i].iter().zip(weight).map(|(x, y)| x * y).sum()
    }

    /// `<v̌, α_j>` for an integral coweight.
    pub fn pair_root(&self, coweight: &[i64], j: usize) -> i64 {
        coweight.iter().zip(&self.simple_roots[j]).map(|(x, y)| x * y).sum()
    }

    pub fn pair_root_q(&self, coweight: &[Rational], j: usize) -> Rational {
        dot_int(coweight, &self.simple_roots[j])
    }

    pub fn pair_coroot_q(&self, i: usize, weight: &[Rational]) -> Rational {
        dot_int(weight, &self.simple_coroots[i])
    }

    pub fn is_dominant(&self, weight: &[i64]) -> bool {
        (0..self.num_simple()).all(|i| self.pair_coroot(i, weight) >= 0)
    }

    /// Coefficients of `v` in the simple-coroot basis, or `None` when `v`
    /// is not in their rational span.
    pub fn coroot_coefficients(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        let m = self.num_simple();
        let b: Vec<Rational> = (0..m).map(|j| self.pair_root_q(v, j)).collect();
        let c: Vec<Rational> =
            (0..m).map(|i| (0..m).map(|j| &self.cartan_inv[j][i] * &b[j]).sum()).collect();
        (self.combine_coroots(&c) == v).then_some(c)
    }

    /// Coefficients of `v` in the simple-root basis, or `None` when `v` is
    /// not in their rational span.
    pub fn root_coefficients(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        let m = self.num_simple();
        let b: Vec<Rational> = (0..m).map(|j| self.pair_coroot_q(j, v)).collect();
        let c: Vec<Rational> =
            (0..m).map(|i| (0..m).map(|j| &self.cartan_inv[i][j] * &b[j]).sum()).collect();
        (self.combine_roots(&c) == v).then_some(c)
    }

    /// `Σ c_i α̌_i`.
    pub fn combine_coroots(&self, c: &[Rational]) -> Vec<Rational> {
        combine(&self.simple_coroots, c, self.rank)
    }

    /// `Σ c_i α_i`.
    pub fn combine_roots(&self, c: &[Rational]) -> Vec<Rational> {
        combine(&self.simple_roots, c, self.rank)
    }

    /// Fundamental coweights `ω̌_i` in the rational span of the simple
    /// coroots, with `<ω̌_i, α_j> = δ_ij`.
    pub fn fundamental_coweights(&self) -> Vec<RationalVector> {
        (0..self.num_simple())
            .map(|i| RationalVector::coweight(self.combine_coroots(&self.cartan_inv[i])))
            .collect()
    }

    /// Fundamental weights `ω_i` in the rational span of the simple roots,
    /// with `<α̌_j, ω_i> = δ_ij`.
    pub fn fundamental_weights(&self) -> Vec<RationalVector> {
        let m = self.num_simple();
        (0..m)
            .map(|i| {
                let col: Vec<Rational> = (0..m).map(|k| self.cartan_inv[k][i].clone()).collect();
                RationalVector::weight(self.combine_roots(&col))
            })
            .collect()
    }

    /// Whether `b − a` is a nonnegative rational combination of simple
    /// coroots (coweight side) or simple roots (weight side).
    pub fn dominance_leq(&self, a: &RationalVector, b: &RationalVector) -> Result<bool> {
        if a.side != b.side {
            return Err(Error::SideMismatch);
        }
        self.check_dim(a.coords.len())?;
        self.check_dim(b.coords.len())?;
        let diff: Vec<Rational> = b.coords.iter().zip(&a.coords).map(|(x, y)| x - y).collect();
        let coeffs = match a.side {
            Side::Coweight => self.coroot_coefficients(&diff),
            Side::Weight => self.root_coefficients(&diff),
        };
        Ok(coeffs.is_some_and(|c| c.iter().all(|x| !x.is_negative())))
    }

    /// The Weyl group, enumerated up to `cap` elements.
    pub fn weyl_group(&self, cap: usize) -> Result<WeylGroup> {
        WeylGroup::generate(self, cap)
    }

    /// Simple reflection `s_i` on an integral weight.
    pub fn reflect_weight(&self, i: usize, weight: &[i64]) -> Vec<i64> {
        let p = self.pair_coroot(i, weight);
        weight.iter().zip(&self.simple_roots[i]).map(|(x, a)| x - p * a).collect()
    }

    /// The dominant Weyl conjugate of an integral weight.
    pub fn dominant_conjugate(&self, weight: &[i64]) -> Vec<i64> {
        let mut v = weight.to_vec();
        'outer: loop {
            for i in 0..self.num_simple() {
                if self.pair_coroot(i, &v) < 0 {
                    v = self.reflect_weight(i, &v);
                    continue 'outer;
                }
            }
            return v;
        }
    }

    /// The quotient `Λ̌_G / span_ℤ{α̌_i : i ∈ I_M}`, memoized per parabolic.
    pub fn quotient(&self, p: Parabolic) -> Arc<QuotientLattice> {
        if let Some(q) = self.quotients.read().expect("lattice cache poisoned").get(&p) {
            return Arc::clone(q);
        }
        let q = Arc::new(QuotientLattice::new(self, p));
        let mut cache = self.quotients.write().expect("lattice cache poisoned");
        Arc::clone(cache.entry(p).or_insert(q))
    }

    /// Indices `j` whose simple roots are connected in the Dynkin diagram.
    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.num_simple()).filter(move |&j| j != i && self.cartan[i][j] != 0)
    }
}

fn combine(basis: &[Vec<i64>], c: &[Rational], n: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); n];
    for (b, k) in basis.iter().zip(c) {
        if k.is_zero() {
            continue;
        }
        for (o, &x) in out.iter_mut().zip(b) {
            if x != 0 {
                *o += k * int(x);
            }
        }
    }
    out
}

/// All finite-type root data with at most `max_semisimple_rank` simple
/// roots: simply connected and adjoint forms of each Cartan type, plus
/// `GL(n)` for `n ≤ max_semisimple_rank + 1`.
pub fn catalog(max_semisimple_rank: usize) -> Vec<RootDatum> {
    let mut out = Vec::new();
    for n in 1..=max_semisimple_rank + 1 {
        out.push(RootDatum::gl(n).expect("GL in range"));
    }
    for t in CartanType::all_up_to_rank(max_semisimple_rank) {
        out.push(RootDatum::named(&GroupDescriptor::SimplyConnected(t.clone())).expect("finite type"));
        out.push(RootDatum::named(&GroupDescriptor::Adjoint(t)).expect("finite type"));
    }
    out
}

#[derive(Serialize, Deserialize)]
struct NamedJson {
    #[serde(rename = "type")]
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    cartan: Option<String>,
}

#[derive(Serialize, Deserialize)]
struct RootDatumJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    named: Option<NamedJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rank: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    simple_roots: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    simple_coroots: Option<Vec<Vec<i64>>>,
}

impl NamedJson {
    fn from_descriptor(d: &GroupDescriptor) -> NamedJson {
        let (kind, n, cartan) = match d {
            GroupDescriptor::GL(n) => ("GL", Some(*n), None),
            GroupDescriptor::SL(n) => ("SL", Some(*n), None),
            GroupDescriptor::PGL(n) => ("PGL", Some(*n), None),
            GroupDescriptor::SimplyConnected(t) => ("SimplyConnected", None, Some(t.to_string())),
            GroupDescriptor::Adjoint(t) => ("Adjoint", None, Some(t.to_string())),
        };
        NamedJson { kind: kind.to_string(), n, cartan }
    }

    fn to_descriptor(&self) -> Result<GroupDescriptor> {
        let arg = match (&self.n, &self.cartan) {
            (Some(n), None) => n.to_string(),
            (None, Some(c)) => c.clone(),
            _ => return Err(Error::UnknownDescriptor(format!("{}: need exactly one of n, cartan", self.kind))),
        };
        GroupDescriptor::parse(&format!("{}:{}", self.kind, arg))
    }
}

impl Serialize for RootDatum {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RootDatumJson {
            named: self.descriptor.as_ref().map(NamedJson::from_descriptor),
            rank: Some(self.rank),
            simple_roots: Some(self.simple_roots.clone()),
            simple_coroots: Some(self.simple_coroots.clone()),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RootDatum {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = RootDatumJson::deserialize(d)?;
        let built = match j {
            RootDatumJson { named: Some(nj), .. } => nj.to_descriptor().and_then(|d| RootDatum::named(&d)),
            RootDatumJson { rank: Some(r), simple_roots: Some(a), simple_coroots: Some(c), .. } => {
                RootDatum::new(r, a, c)
            }
            _ => Err(Error::Malformed(
                "root datum needs `named` or all of `rank`, `simple_roots`, `simple_coroots`".into(),
            )),
        };
        built.map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn q(v: &[i64]) -> RationalVector {
        RationalVector::coweight(rational::to_rationals(v))
    }

    #[test]
    fn gl3_basics() {
        let rd = RootDatum::parse_named("GL:3").unwrap();
        assert_eq!(rd.rank(), 3);
        assert_eq!(rd.simple_root(0), &[1, -1, 0]);
        assert_eq!(rd.simple_root(1), &[0, 1, -1]);
        let weights: Vec<_> = rd.positive_roots().iter().map(|r| r.weight.clone()).collect();
        assert_eq!(weights, vec![vec![1, -1, 0], vec![0, 1, -1], vec![1, 0, -1]]);
    }

    #[test]
    fn torus_and_rank_one_forms() {
        let gl1 = RootDatum::gl(1).unwrap();
        assert_eq!(gl1.num_simple(), 0);
        assert_eq!(gl1.weyl_group(DEFAULT_CAP).unwrap().len(), 1);
        assert!(gl1.fundamental_coweights().is_empty());
        let pgl2 = RootDatum::parse_named("PGL:2").unwrap();
        assert_eq!(pgl2.simple_roots(), &[vec![1]]);
        assert_eq!(pgl2.simple_coroots(), &[vec![2]]);
        let sl2 = RootDatum::parse_named("SL:2").unwrap();
        assert_eq!(sl2.simple_roots(), &[vec![2]]);
        assert_eq!(sl2.simple_coroots(), &[vec![1]]);
    }

    #[test]
    fn group_orders() {
        for (name, order, npos) in [
            ("GL:3", 6, 3),
            ("SC:B2", 8, 4),
            ("SC:G2", 12, 6),
            ("Ad:C3", 48, 9),
            ("SC:D4", 192, 12),
            ("SC:F4", 1152, 24),
            ("SC:A1xB2", 16, 5),
        ] {
            let rd = RootDatum::parse_named(name).unwrap();
            assert_eq!(rd.weyl_group(DEFAULT_CAP).unwrap().len(), order, "{name}");
            assert_eq!(rd.positive_roots().len(), npos, "{name}");
        }
    }

    #[test]
    fn e6_positive_roots() {
        let rd = RootDatum::parse_named("SC:E6").unwrap();
        assert_eq!(rd.positive_roots().len(), 36);
        let rd = RootDatum::parse_named("Ad:E8").unwrap();
        assert_eq!(rd.positive_roots().len(), 120);
    }

    #[test]
    fn cap_is_enforced() {
        let rd = RootDatum::gl(5).unwrap();
        assert_eq!(rd.weyl_group(100).unwrap_err(), Error::CapExceeded { cap: 100 });
        assert_eq!(rd.weyl_group(120).unwrap().len(), 120);
    }

    #[test]
    fn weyl_action_examples() {
        let rd = RootDatum::gl(3).unwrap();
        let s1 = WeylElement::from_word(&rd, &[0]).unwrap();
        assert_eq!(act(&s1, &Weight(vec![1, 0, 0])).unwrap(), Weight(vec![0, 1, 0]));
        let w = WeylElement::from_word(&rd, &[1, 0]).unwrap();
        assert_eq!(w.act_weight(rd.simple_root(1)), rd.simple_root(0));
        assert!(act(&w, &Weight(vec![1, 0])).is_err());
        let w0 = rd.weyl_group(DEFAULT_CAP).unwrap().longest().clone();
        assert_eq!(w0.length(), 3);
        assert_eq!(w0.word(), &[0, 1, 0]);
    }

    #[test]
    fn dominance_examples() {
        let rd = RootDatum::gl(3).unwrap();
        assert!(rd.dominance_leq(&q(&[2, 1, 0]), &q(&[3, 0, 0])).unwrap());
        assert!(rd.dominance_leq(&q(&[1, 1, 1]), &q(&[2, 1, 0])).unwrap());
        assert!(rd.dominance_leq(&q(&[2, 1, 0]), &q(&[1, 1, 1])).is_ok_and(|b| !b));
        assert!(rd.dominance_leq(&q(&[0, 1, 2]), &q(&[0, 1, 2])).unwrap());
        let w = RationalVector::weight(rational::to_rationals(&[0, 0, 0]));
        assert_eq!(rd.dominance_leq(&w, &q(&[0, 0, 0])), Err(Error::SideMismatch));
    }

    #[test]
    fn fundamental_coweight_examples() {
        let rd = RootDatum::gl(3).unwrap();
        let om = rd.fundamental_coweights();
        assert_eq!(om[0].coords, vec![frac(2, 3), frac(-1, 3), frac(-1, 3)]);
        let rd = RootDatum::gl(2).unwrap();
        assert_eq!(rd.fundamental_coweights()[0].coords, vec![frac(1, 2), frac(-1, 2)]);
        let rd = RootDatum::parse_named("SC:G2").unwrap();
        for (i, w) in rd.fundamental_weights().iter().enumerate() {
            for j in 0..2 {
                assert_eq!(rd.pair_coroot_q(j, &w.coords), int(i64::from(i == j)));
            }
        }
    }

    #[test]
    fn rejects_invalid_data() {
        assert!(RootDatum::new(2, vec![vec![1, -1]], vec![vec![1, 1]]).is_err());
        // affine A1: A = [[2,-2],[-2,2]]
        let err = RootDatum::new(2, vec![vec![1, 0], vec![0, 1]], vec![vec![2, -2], vec![-2, 2]]);
        assert!(matches!(err, Err(Error::InvalidRootDatum(_))));
        assert!(RootDatum::new(1, vec![vec![1, 0]], vec![vec![2, 0]]).is_err());
    }

    #[test]
    fn json_round_trip() {
        for name in ["GL:3", "PGL:2", "SC:A1xG2"] {
            let rd = RootDatum::parse_named(name).unwrap();
            let s = serde_json::to_string(&rd).unwrap();
            let back: RootDatum = serde_json::from_str(&s).unwrap();
            assert_eq!(back, rd);
            assert_eq!(back.descriptor(), rd.descriptor());
        }
        let rd: RootDatum = serde_json::from_str(r#"{"named": {"type": "GL", "n": 3}}"#).unwrap();
        assert_eq!(rd.rank(), 3);
        let rd: RootDatum =
            serde_json::from_str(r#"{"rank": 1, "simple_roots": [[2]], "simple_coroots": [[1]]}"#).unwrap();
        assert_eq!(rd.cartan(), &[vec![2]]);
        assert!(serde_json::from_str::<RootDatum>(r#"{"rank": 1}"#).is_err());
    }

    #[test]
    fn symmetrizer_scales() {
        let rd = RootDatum::parse_named("SC:B3").unwrap();
        assert_eq!(rd.symmetrizer(), &[2, 2, 1]);
        let rd = RootDatum::parse_named("SC:G2").unwrap();
        assert_eq!(rd.symmetrizer(), &[1, 3]);
    }
}
