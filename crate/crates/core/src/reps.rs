//! Weight multisets of Weyl modules, their weight subspaces and the slope
//! filtration attached to a dominant regular slope vector.

use std::collections::{BTreeMap, HashMap, VecDeque};

use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bruhat::LeviPair;
use crate::error::{Error, Result};
use crate::parabolic::Parabolic;
use crate::rational::{self, dot_int, int, serde_q, Rational};
use crate::rootdata::{RootDatum, Weight};
use crate::slope::{regularity_failure, SlopeVector};

/// A finite multiset of weights with a designated highest weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightMultiset {
    pub highest: Weight,
    pub entries: BTreeMap<Weight, u64>,
}

#[derive(Serialize, Deserialize)]
struct Entry {
    w: Vec<i64>,
    m: u64,
}

#[derive(Serialize, Deserialize)]
struct MultisetJson {
    highest: Vec<i64>,
    weights: Vec<Entry>,
}

impl Serialize for WeightMultiset {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MultisetJson {
            highest: self.highest.0.clone(),
            weights: self.entries.iter().map(|(w, &m)| Entry { w: w.0.clone(), m }).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for WeightMultiset {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = MultisetJson::deserialize(d)?;
        let mut entries = BTreeMap::new();
        for e in j.weights {
            if e.m == 0 {
                return Err(serde::de::Error::custom("multiplicities must be positive"));
            }
            *entries.entry(Weight(e.w)).or_insert(0) += e.m;
        }
        Ok(WeightMultiset { highest: Weight(j.highest), entries })
    }
}

impl WeightMultiset {
    /// Validates a user-supplied multiset: positive multiplicities, every
    /// weight below the highest one, and invariance under simple reflections.
    pub fn validated(rd: &RootDatum, highest: Weight, entries: BTreeMap<Weight, u64>) -> Result<WeightMultiset> {
        rd.check_dim(highest.0.len())?;
        if !rd.is_dominant(&highest.0) {
            let i = (0..rd.num_simple()).find(|&i| rd.pair_coroot(i, &highest.0) < 0).expect("some pairing is negative");
            return Err(Error::NotDominant { index: i, pairing: rd.pair_coroot(i, &highest.0).to_string() });
        }
        for (w, &m) in &entries {
            rd.check_dim(w.0.len())?;
            if m == 0 {
                return Err(Error::Malformed("multiplicities must be positive".into()));
            }
            let diff: Vec<Rational> = highest.0.iter().zip(&w.0).map(|(a, b)| int(a - b)).collect();
            let ok = rd
                .root_coefficients(&diff)
                .is_some_and(|c| c.iter().all(|x| x.is_integer() && !x.is_negative()));
            if !ok {
                return Err(Error::Malformed(format!("weight {:?} is not below the highest weight", w.0)));
            }
            for i in 0..rd.num_simple() {
                if entries.get(&Weight(rd.reflect_weight(i, &w.0))) != Some(&m) {
                    return Err(Error::Malformed(format!("multiset is not invariant under s_{}", i + 1)));
                }
            }
        }
        Ok(WeightMultiset { highest, entries })
    }

    pub fn dim(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn multiplicity(&self, w: &[i64]) -> u64 {
        self.entries.get(&Weight(w.to_vec())).copied().unwrap_or(0)
    }

    /// The sub-multiset of weights satisfying `keep`.
    pub fn restrict(&self, mut keep: impl FnMut(&[i64]) -> bool) -> WeightMultiset {
        WeightMultiset {
            highest: self.highest.clone(),
            entries: self.entries.iter().filter(|(w, _)| keep(&w.0)).map(|(w, &m)| (w.clone(), m)).collect(),
        }
    }

    /// `Σ_ν m_ν ν`.
    pub fn weight_sum(&self) -> Vec<i64> {
        let n = self.highest.0.len();
        let mut out = vec![0i64; n];
        for (w, &m) in &self.entries {
            for (o, x) in out.iter_mut().zip(&w.0) {
                *o += m as i64 * x;
            }
        }
        out
    }
}

/// `(x, β)` for `β = Σ b_j α_j`, using the symmetrized form.
fn form(rd: &RootDatum, x: &[i64], b: &[i64]) -> i64 {
    let eps = rd.symmetrizer();
    (0..rd.num_simple()).filter(|&j| b[j] != 0).map(|j| b[j] * eps[j] * rd.pair_coroot(j, x)).sum()
}

/// Weyl dimension formula `Π_{α>0} <α̌, λ+ρ> / <α̌, ρ>`.
pub fn weyl_dimension(rd: &RootDatum, lambda: &[i64]) -> Result<Rational> {
    check_dominant(rd, lambda)?;
    let pairings: Vec<i64> = (0..rd.num_simple()).map(|i| rd.pair_coroot(i, lambda)).collect();
    let mut num = int(1);
    let mut den = int(1);
    for r in rd.positive_roots() {
        let rho: i64 = r.coroot_coeffs.iter().sum();
        let lam: i64 = r.coroot_coeffs.iter().zip(&pairings).map(|(d, p)| d * p).sum();
        num *= int(lam + rho);
        den *= int(rho);
    }
    Ok(num / den)
}

fn check_dominant(rd: &RootDatum, lambda: &[i64]) -> Result<()> {
    rd.check_dim(lambda.len())?;
    match (0..rd.num_simple()).find(|&i| rd.pair_coroot(i, lambda) < 0) {
        Some(i) => Err(Error::NotDominant { index: i, pairing: rd.pair_coroot(i, lambda).to_string() }),
        None => Ok(()),
    }
}

/// Multiplicities of the dominant weights of the Weyl module `V^λ`, by
/// Freudenthal's recursion. Keys are dominant weights.
pub fn dominant_multiplicities(rd: &RootDatum, lambda: &[i64]) -> Result<BTreeMap<Vec<i64>, u64>> {
    check_dominant(rd, lambda)?;
    let m = rd.num_simple();
    let pos = rd.positive_roots();
    // Dominant weights below λ, each with its depth `λ − μ` in root coordinates.
    let mut depth: HashMap<Vec<i64>, Vec<i64>> = HashMap::new();
    depth.insert(lambda.to_vec(), vec![0; m]);
    let mut queue = VecDeque::from([lambda.to_vec()]);
    while let Some(mu) = queue.pop_front() {
        let d = depth[&mu].clone();
        for r in pos {
            let nu: Vec<i64> = mu.iter().zip(&r.weight).map(|(a, b)| a - b).collect();
            if rd.is_dominant(&nu) && !depth.contains_key(&nu) {
                let nd: Vec<i64> = d.iter().zip(&r.coeffs).map(|(a, b)| a + b).collect();
                depth.insert(nu.clone(), nd);
                queue.push_back(nu);
            }
        }
    }
    let mut order: Vec<(Vec<i64>, Vec<i64>)> = depth.into_iter().collect();
    order.sort_by(|a, b| {
        let ha: i64 = a.1.iter().sum();
        let hb: i64 = b.1.iter().sum();
        ha.cmp(&hb).then_with(|| a.0.cmp(&b.0))
    });
    let rho_pairing = |x: &[i64], b: &[i64]| -> i64 {
        // (x + ρ, β) with <α̌_j, ρ> = 1
        let eps = rd.symmetrizer();
        form(rd, x, b) + (0..m).map(|j| b[j] * eps[j]).sum::<i64>()
    };
    let mut mult: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
    for (mu, beta) in &order {
        if beta.iter().all(|&b| b == 0) {
            mult.insert(mu.clone(), 1);
            continue;
        }
        let denom = 2 * rho_pairing(lambda, beta) - form_roots(rd, beta, beta);
        let mut numer: i64 = 0;
        for r in pos {
            let mut k = 1;
            loop {
                let shifted: Vec<i64> = mu.iter().zip(&r.weight).map(|(a, b)| a + k * b).collect();
                let dom = rd.dominant_conjugate(&shifted);
                let Some(&mk) = mult.get(&dom) else { break };
                numer += 2 * form(rd, &shifted, &r.coeffs) * mk as i64;
                k += 1;
            }
        }
        if denom <= 0 || numer % denom != 0 {
            return Err(Error::InvariantViolation(format!("Freudenthal recursion failed at {mu:?}")));
        }
        let v = numer / denom;
        if v > 0 {
            mult.insert(mu.clone(), v as u64);
        }
    }
    Ok(mult)
}

/// `(β, γ)` for root-lattice elements given in simple-root coordinates.
fn form_roots(rd: &RootDatum, b: &[i64], c: &[i64]) -> i64 {
    let eps = rd.symmetrizer();
    let a = rd.cartan();
    let m = rd.num_simple();
    let mut s = 0;
    for i in 0..m {
        if b[i] == 0 {
            continue;
        }
        for j in 0..m {
            if c[j] != 0 {
                s += b[i] * c[j] * eps[j] * a[j][i];
            }
        }
    }
    s
}

/// The Weyl orbit of an integral weight.
pub fn weyl_orbit(rd: &RootDatum, weight: &[i64]) -> Vec<Vec<i64>> {
    let mut seen = vec![weight.to_vec()];
    let mut index: HashMap<Vec<i64>, ()> = HashMap::from([(weight.to_vec(), ())]);
    let mut head = 0;
    while head < seen.len() {
        let v = seen[head].clone();
        head += 1;
        for i in 0..rd.num_simple() {
            let r = rd.reflect_weight(i, &v);
            if index.insert(r.clone(), ()).is_none() {
                seen.push(r);
            }
        }
    }
    seen.sort();
    seen
}

/// Full weight multiset of the Weyl module of highest weight `λ`, checked
/// against the Weyl dimension formula.
pub fn weyl_weights(rd: &RootDatum, lambda: &[i64]) -> Result<WeightMultiset> {
    let dominant = dominant_multiplicities(rd, lambda)?;
    let mut entries = BTreeMap::new();
    for (mu, &mult) in &dominant {
        for nu in weyl_orbit(rd, mu) {
            entries.insert(Weight(nu), mult);
        }
    }
    let v = WeightMultiset { highest: Weight(lambda.to_vec()), entries };
    if int(v.dim() as i64) != weyl_dimension(rd, lambda)? {
        return Err(Error::InvariantViolation(format!(
            "weight multiplicities of {lambda:?} disagree with the Weyl dimension formula"
        )));
    }
    Ok(v)
}

/// Integer coefficients of `ν − base` in the simple roots, if it lies in
/// the root lattice.
fn integral_root_coefficients(rd: &RootDatum, nu: &[i64], base: &[i64]) -> Option<Vec<i64>> {
    let diff: Vec<Rational> = nu.iter().zip(base).map(|(a, b)| int(a - b)).collect();
    rd.root_coefficients(&diff)?.iter().map(rational::to_i64).collect()
}

fn in_coset(rd: &RootDatum, nu: &[i64], base: &[i64], support: Parabolic) -> bool {
    integral_root_coefficients(rd, nu, base)
        .is_some_and(|c| c.iter().enumerate().all(|(i, &x)| x == 0 || support.contains(i)))
}

/// `V[λ + ℤR_M]`: weights differing from the highest weight by an integral
/// combination of the simple roots of `I_M`.
#[allow(non_snake_case)]
pub fn subspace_mod_RM(rd: &RootDatum, v: &WeightMultiset, parabolic: Parabolic) -> WeightMultiset {
    let top = v.highest.0.clone();
    // integral multiples of the fundamental coweights outside I_M; they
    // vanish on λ − ν whenever ν passes the exact test
    let filters: Vec<Vec<i64>> = rd
        .fundamental_coweights()
        .into_iter()
        .enumerate()
        .filter(|(j, _)| !parabolic.contains(*j))
        .map(|(_, w)| {
            let l = w.coords.iter().fold(1, |acc, x| rational::lcm_i64(acc, x.denom().to_i64().expect("small denominator")));
            w.coords.iter().map(|x| rational::to_i64(&(x * int(l))).expect("integral after scaling")).collect()
        })
        .collect();
    v.restrict(|nu| {
        filters.iter().all(|f| f.iter().zip(nu.iter().zip(&top)).map(|(a, (x, y))| a * (y - x)).sum::<i64>() == 0)
            && in_coset(rd, nu, &top, parabolic)
    })
}

/// Dimensions of the weight subspaces attached to a minimal double-coset
/// representative and its deeper Levi sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BruhatSubspaces {
    /// `V[λ + ℤR_L2]`
    pub source: u64,
    /// `V[≥(wλ + ℤR_L1)]`
    pub at_least: u64,
    /// `V[>(wλ + ℤR_L1)]`
    pub above: u64,
    /// `V[wλ + ℤR_L1]`
    pub target: u64,
}

pub fn bruhat_subspaces(rd: &RootDatum, v: &WeightMultiset, lp: &LeviPair) -> BruhatSubspaces {
    let source = subspace_mod_RM(rd, v, lp.l2).dim();
    let wl = lp.w.act_weight(&v.highest.0);
    let mut at_least = 0;
    let mut target = 0;
    for (nu, &m) in &v.entries {
        let Some(c) = integral_root_coefficients(rd, &nu.0, &wl) else { continue };
        if c.iter().enumerate().all(|(i, &x)| x >= 0 || lp.l1.contains(i)) {
            at_least += m;
            if c.iter().enumerate().all(|(i, &x)| x == 0 || lp.l1.contains(i)) {
                target += m;
            }
        }
    }
    BruhatSubspaces { source, at_least, above: at_least - target, target }
}

/// Weights of `V` pairing with `φ` to one value `q`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiltrationLevel {
    #[serde(with = "serde_q")]
    pub q: Rational,
    pub weights: WeightMultiset,
}

impl FiltrationLevel {
    pub fn dim(&self) -> u64 {
        self.weights.dim()
    }

    pub fn degree(&self, s: &SlopeVector) -> Rational {
        assoc_degree(&self.weights, s)
    }
}

/// Levels of `V` by `q = <φ, ν>`, in strictly decreasing `q`. The top level
/// is checked to equal `V[λ + ℤR_M]`.
pub fn filtration_levels(rd: &RootDatum, v: &WeightMultiset, phi: &SlopeVector) -> Result<Vec<FiltrationLevel>> {
    rd.check_dim(phi.coords.len())?;
    if let Some((j, p)) = regularity_failure(rd, phi) {
        return Err(Error::NotDominantRegular { index: j, pairing: rational::format(&p) });
    }
    let mut groups: BTreeMap<Rational, BTreeMap<Weight, u64>> = BTreeMap::new();
    for (nu, &m) in &v.entries {
        groups.entry(dot_int(&phi.coords, &nu.0)).or_default().insert(nu.clone(), m);
    }
    let levels: Vec<FiltrationLevel> = groups
        .into_iter()
        .rev()
        .map(|(q, entries)| FiltrationLevel { q, weights: WeightMultiset { highest: v.highest.clone(), entries } })
        .collect();
    if let Some(top) = levels.first() {
        if top.weights != subspace_mod_RM(rd, v, phi.parabolic) {
            return Err(Error::InvariantViolation("top filtration level differs from V[λ + ℤR_M]".into()));
        }
    }
    Ok(levels)
}

/// `<s, Σ_ν m_ν ν>`.
pub fn assoc_degree(v: &WeightMultiset, s: &SlopeVector) -> Rational {
    dot_int(&s.coords, &v.weight_sum())
}

/// `<s, λ>` for the highest weight `λ`.
pub fn assoc_slope_top(v: &WeightMultiset, s: &SlopeVector) -> Rational {
    dot_int(&s.coords, &v.highest.0)
}

/// Slope `deg / dim` of a nonzero multiset.
pub fn assoc_slope(v: &WeightMultiset, s: &SlopeVector) -> Option<Rational> {
    let d = v.dim();
    (d > 0).then(|| assoc_degree(v, s) / int(d as i64))
}

/// Standard representation of `GL(n)`: weights `e_1, …, e_n`.
pub fn gl_standard(n: usize) -> WeightMultiset {
    let unit = |i: usize| Weight((0..n).map(|j| i64::from(i == j)).collect());
    WeightMultiset { highest: unit(0), entries: (0..n).map(|i| (unit(i), 1)).collect() }
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::bruhat::CosetSetup;
    use crate::rational::{frac, to_rationals};
    use crate::rootdata::WeylElement;

    fn p(idx: &[usize]) -> Parabolic {
        Parabolic::from_indices(idx.iter().copied())
    }

    fn sv(v: &[Rational], par: Parabolic) -> SlopeVector {
        SlopeVector { coords: v.to_vec(), parabolic: par }
    }

    #[test]
    fn gl3_small_modules() {
        let rd = RootDatum::gl(3).unwrap();
        let v = weyl_weights(&rd, &[1, 0, 0]).unwrap();
        assert_eq!(v, gl_standard(3));
        let v = weyl_weights(&rd, &[1, 1, 0]).unwrap();
        assert_eq!(v.dim(), 3);
        assert!(v.entries.values().all(|&m| m == 1));
        assert!(weyl_weights(&rd, &[0, 1, 0]).is_err());
    }

    #[test]
    fn sl3_adjoint() {
        let rd = RootDatum::parse_named("SL:3").unwrap();
        let v = weyl_weights(&rd, &[1, 1]).unwrap();
        assert_eq!(v.dim(), 8);
        assert_eq!(v.multiplicity(&[0, 0]), 2);
    }

    #[test]
    fn dimensions_of_exceptional_modules() {
        let g2 = RootDatum::parse_named("SC:G2").unwrap();
        assert_eq!(weyl_weights(&g2, &[1, 0]).unwrap().dim(), 7);
        assert_eq!(weyl_weights(&g2, &[0, 1]).unwrap().dim(), 14);
        let b3 = RootDatum::parse_named("SC:B3").unwrap();
        assert_eq!(weyl_weights(&b3, &[0, 0, 1]).unwrap().dim(), 8);
        let f4 = RootDatum::parse_named("SC:F4").unwrap();
        assert_eq!(weyl_weights(&f4, &[0, 0, 0, 1]).unwrap().dim(), 26);
    }

    #[test]
    fn subspace_examples() {
        let rd = RootDatum::gl(3).unwrap();
        let v = gl_standard(3);
        let sub = subspace_mod_RM(&rd, &v, p(&[0]));
        assert_eq!(sub.dim(), 2);
        assert_eq!(subspace_mod_RM(&rd, &v, rd.full()), v);
        let v2 = weyl_weights(&rd, &[1, 1, 0]).unwrap();
        let sub = subspace_mod_RM(&rd, &v2, p(&[0]));
        assert_eq!(sub.entries.keys().cloned().collect::<Vec<_>>(), vec![Weight(vec![1, 1, 0])]);
    }

    #[test]
    fn bruhat_subspace_example() {
        let rd = RootDatum::gl(3).unwrap();
        let s = CosetSetup::new(&rd, p(&[0]), p(&[1])).unwrap();
        let w = WeylElement::from_word(&rd, &[1, 0]).unwrap();
        let lp = s.deeper_levi_sets(&w).unwrap();
        let b = bruhat_subspaces(&rd, &gl_standard(3), &lp);
        assert_eq!(b, BruhatSubspaces { source: 1, at_least: 3, above: 2, target: 1 });
        let s2 = CosetSetup::new(&rd, p(&[0]), p(&[0])).unwrap();
        let lp = s2.deeper_levi_sets(&WeylElement::identity(3)).unwrap();
        let b = bruhat_subspaces(&rd, &gl_standard(3), &lp);
        assert_eq!((b.source, b.target), (2, 2));
    }

    #[test]
    fn filtration_examples() {
        let rd = RootDatum::gl(3).unwrap();
        let v = gl_standard(3);
        let phi = sv(&[frac(3, 2), frac(3, 2), int(0)], p(&[0]));
        let lv = filtration_levels(&rd, &v, &phi).unwrap();
        let shape: Vec<(Rational, u64)> = lv.iter().map(|l| (l.q.clone(), l.dim())).collect();
        assert_eq!(shape, vec![(frac(3, 2), 2), (int(0), 1)]);
        let lv = filtration_levels(&rd, &v, &sv(&to_rationals(&[2, 1, 0]), Parabolic::BOREL)).unwrap();
        assert_eq!(lv.iter().map(|l| l.q.clone()).collect::<Vec<_>>(), to_rationals(&[2, 1, 0]));
        let rd2 = RootDatum::gl(2).unwrap();
        let lv = filtration_levels(&rd2, &gl_standard(2), &sv(&[frac(5, 2), frac(5, 2)], rd2.full())).unwrap();
        assert_eq!(lv.len(), 1);
        assert_eq!(lv[0].q, frac(5, 2));
        assert!(filtration_levels(&rd, &v, &sv(&to_rationals(&[1, 1, 0]), Parabolic::BOREL)).is_err());
    }

    #[test]
    fn degree_examples() {
        let v = gl_standard(2);
        let s = sv(&[frac(3, 2), frac(3, 2)], p(&[0]));
        assert_eq!(assoc_degree(&v, &s), int(3));
        assert_eq!(assoc_slope_top(&v, &s), frac(3, 2));
        let v3 = gl_standard(3);
        let s3 = sv(&[frac(1, 2), frac(1, 2), int(0)], p(&[0]));
        assert_eq!(assoc_slope_top(&v3, &s3), frac(1, 2));
        assert_eq!(assoc_degree(&v, &sv(&to_rationals(&[0, 0]), p(&[]))), int(0));
    }

    #[test]
    fn multiset_json_and_validation() {
        let rd = RootDatum::gl(3).unwrap();
        let v = gl_standard(3);
        let s = serde_json::to_string(&v).unwrap();
        assert!(s.starts_with(r#"{"highest":[1,0,0],"weights":[{"w":[0,0,1],"m":1}"#));
        let back: WeightMultiset = serde_json::from_str(&s).unwrap();
        assert_eq!(back, v);
        assert!(WeightMultiset::validated(&rd, v.highest.clone(), v.entries.clone()).is_ok());
        let mut broken = v.entries.clone();
        broken.remove(&Weight(vec![0, 0, 1]));
        assert!(WeightMultiset::validated(&rd, v.highest.clone(), broken).is_err());
    }
}
