//! Stratum indices `(I_M, λ̌_P)`, destabilization and comparison predicates,
//! bounded enumeration and closure predicates.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lattice::QuotientClass;
use crate::parabolic::Parabolic;
use crate::rational::{self, ceil_i64, floor_i64, int, serde_vec_q, QMatrix, Rational};
use crate::rootdata::RootDatum;
use crate::slope::{self, regularity_failure, slope_geq, SlopeVector};

/// A parabolic subset with a dominant P-regular degree class, its slope
/// vector and the induced class in `Λ̌_{G,G}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Stratum {
    pub parabolic: Parabolic,
    pub degree: QuotientClass,
    pub slope: SlopeVector,
    pub lambda_g: QuotientClass,
}

#[derive(Serialize, Deserialize)]
struct StratumJson {
    #[serde(rename = "I_M")]
    parabolic: Parabolic,
    degree: QuotientClass,
    #[serde(with = "serde_vec_q")]
    slope: Vec<Rational>,
    #[serde(rename = "lambda_G")]
    lambda_g: QuotientClass,
}

impl Serialize for Stratum {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        StratumJson {
            parabolic: self.parabolic,
            degree: self.degree.clone(),
            slope: self.slope.coords.clone(),
            lambda_g: self.lambda_g.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Stratum {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = StratumJson::deserialize(d)?;
        Ok(Stratum {
            parabolic: j.parabolic,
            degree: j.degree,
            slope: SlopeVector { coords: j.slope, parabolic: j.parabolic },
            lambda_g: j.lambda_g,
        })
    }
}

impl fmt::Display for Stratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.parabolic, self.degree)
    }
}

impl Stratum {
    /// Re-derives slope and `λ̌_G` from `(I_M, degree)` and compares.
    pub fn check(&self, rd: &RootDatum) -> Result<()> {
        let fresh = make_stratum(rd, self.parabolic, &self.degree)?;
        if fresh == *self {
            Ok(())
        } else {
            Err(Error::Malformed(format!("stratum {self} has inconsistent slope or lambda_G")))
        }
    }
}

/// Validates dominant P-regularity and caches slope and `λ̌_G`.
pub fn make_stratum(rd: &RootDatum, parabolic: Parabolic, degree: &QuotientClass) -> Result<Stratum> {
    rd.check_parabolic(parabolic)?;
    let v = rd.quotient(parabolic).lift(degree)?;
    make_stratum_from_lift(rd, parabolic, &v.0)
}

/// The stratum whose degree is the class of the integral coweight `v`.
pub fn make_stratum_from_lift(rd: &RootDatum, parabolic: Parabolic, v: &[i64]) -> Result<Stratum> {
    rd.check_parabolic(parabolic)?;
    rd.check_dim(v.len())?;
    let ql = rd.quotient(parabolic);
    let slope = SlopeVector { coords: ql.phi_int(v), parabolic };
    if let Some((j, p)) = regularity_failure(rd, &slope) {
        return Err(Error::NotDominantRegular { index: j, pairing: rational::format(&p) });
    }
    Ok(Stratum {
        parabolic,
        degree: ql.project_raw(v),
        slope,
        lambda_g: rd.quotient(rd.full()).project_raw(v),
    })
}

/// The two semistability tests for one reduction: the slope inequality and
/// the sign of the projection `proj_P`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DestabilizingWitness {
    /// `φ_G(λ̌_G) ≱ φ_P(λ̌_P)`.
    pub slope_condition: bool,
    /// `proj_P(λ̌_P) ∉ −Λ̌_{G,P}^{ℚ,pos}`.
    pub projection_condition: bool,
}

pub fn destabilizing_witness(
    rd: &RootDatum,
    parabolic: Parabolic,
    degree: &QuotientClass,
    lambda_g: &QuotientClass,
) -> Result<DestabilizingWitness> {
    rd.check_parabolic(parabolic)?;
    let v = rd.quotient(parabolic).lift(degree)?;
    let full = rd.quotient(rd.full());
    full.check_class(lambda_g)?;
    if full.project_raw(&v.0) != *lambda_g {
        return Err(Error::ComponentMismatch);
    }
    destabilizing_witness_of_lift(rd, parabolic, &v.0)
}

pub(crate) fn destabilizing_witness_of_lift(
    rd: &RootDatum,
    parabolic: Parabolic,
    v: &[i64],
) -> Result<DestabilizingWitness> {
    let phi_p = SlopeVector { coords: rd.quotient(parabolic).phi_int(v), parabolic };
    let phi_g = SlopeVector { coords: rd.quotient(rd.full()).phi_int(v), parabolic: rd.full() };
    let slope_condition = !slope_geq(rd, &phi_g, &phi_p);
    let projection_condition = !slope::proj_P_of_lift(rd, parabolic, v)?.in_negative_cone();
    Ok(DestabilizingWitness { slope_condition, projection_condition })
}

/// Whether the reduction `(I_M, degree)` destabilizes a bundle of class
/// `λ̌_G`. Both tests are evaluated and must agree.
pub fn is_destabilizing(
    rd: &RootDatum,
    parabolic: Parabolic,
    degree: &QuotientClass,
    lambda_g: &QuotientClass,
) -> Result<bool> {
    let w = destabilizing_witness(rd, parabolic, degree, lambda_g)?;
    if w.slope_condition != w.projection_condition {
        return Err(Error::InvariantViolation(
            "slope and projection semistability tests disagree".into(),
        ));
    }
    Ok(w.slope_condition)
}

/// Result of comparing a canonical stratum with another reduction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Comparison {
    pub geq: bool,
    pub equal: bool,
    /// `I_M' ⊆ I_M`, reported when the slopes are equal.
    pub parabolic_contained: Option<bool>,
}

pub fn comparison_geq(
    rd: &RootDatum,
    canonical: &Stratum,
    parabolic: Parabolic,
    degree: &QuotientClass,
) -> Result<Comparison> {
    rd.check_parabolic(parabolic)?;
    let ql = rd.quotient(parabolic);
    let v = ql.lift(degree)?;
    if rd.quotient(rd.full()).project_raw(&v.0) != canonical.lambda_g {
        return Err(Error::ComponentMismatch);
    }
    let other = SlopeVector { coords: ql.phi_int(&v.0), parabolic };
    let geq = slope_geq(rd, &canonical.slope, &other);
    let equal = canonical.slope.coords == other.coords;
    let parabolic_contained = equal.then(|| parabolic.is_subset(canonical.parabolic));
    if equal && regularity_failure(rd, &other).is_none() && parabolic_contained == Some(false) {
        return Err(Error::InvariantViolation(
            "equal regular slopes with a non-nested parabolic".into(),
        ));
    }
    Ok(Comparison { geq, equal, parabolic_contained })
}

fn compare_strata(a: &Stratum, b: &Stratum, m: usize) -> Ordering {
    let ja = m - a.parabolic.len();
    let jb = m - b.parabolic.len();
    jb.cmp(&ja)
        .then_with(|| a.slope.coords.cmp(&b.slope.coords))
        .then_with(|| a.parabolic.bits().cmp(&b.parabolic.bits()))
        .then_with(|| a.degree.cmp(&b.degree))
}

/// All strata over `λ̌_G` whose slope is `φ_G(λ̌_G) + Σ c_i ω̌_i` with
/// `max c_i ≤ bound`, ordered by number of blocks outside the Levi
/// (descending), then slope.
pub fn enumerate_strata(rd: &RootDatum, lambda_g: &QuotientClass, bound: &Rational) -> Result<Vec<Stratum>> {
    if bound.is_negative() {
        return Err(Error::Malformed("bound must be nonnegative".into()));
    }
    let m = rd.num_simple();
    let base = rd.quotient(rd.full()).lift(lambda_g)?.0;
    let mut out = Vec::new();
    for parabolic in Parabolic::all(m) {
        let j: Vec<usize> = parabolic.complement(m).indices();
        let ql = rd.quotient(parabolic);
        let phi0 = ql.phi_int(&base);
        let c0: Vec<Rational> = j.iter().map(|&k| rd.pair_root_q(&phi0, k)).collect();
        if j.is_empty() {
            out.push(make_stratum_from_lift(rd, parabolic, &base)?);
            continue;
        }
        // bt[a][b] = <φ_P(α̌_{j_b}), α_{j_a}>, so c = c0 + bt · n.
        let images: Vec<Vec<Rational>> = j.iter().map(|&k| ql.phi_int(rd.simple_coroot(k))).collect();
        let mut bt = QMatrix::zeros(j.len(), j.len());
        for (a, &ja) in j.iter().enumerate() {
            for (b, img) in images.iter().enumerate() {
                bt.set(a, b, rd.pair_root_q(img, ja));
            }
        }
        let inv = bt.inverse().expect("slope images of complementary coroots are independent");
        let mut lo = Vec::with_capacity(j.len());
        let mut hi = Vec::with_capacity(j.len());
        for a in 0..j.len() {
            let (mut l, mut h) = (Rational::zero(), Rational::zero());
            for (b, c0b) in c0.iter().enumerate() {
                let x = inv.get(a, b);
                let e0 = x * (-c0b);
                let e1 = x * (bound - c0b);
                if e0 < e1 {
                    l += e0;
                    h += e1;
                } else {
                    l += e1;
                    h += e0;
                }
            }
            lo.push(ceil_i64(&l));
            hi.push(floor_i64(&h));
        }
        if lo.iter().zip(&hi).any(|(l, h)| l > h) {
            continue;
        }
        let mut n = lo.clone();
        loop {
            let c: Vec<Rational> = (0..j.len())
                .map(|a| &c0[a] + (0..j.len()).map(|b| bt.get(a, b) * int(n[b])).sum::<Rational>())
                .collect();
            if c.iter().all(|x| x.is_positive() && x <= bound) {
                let mut v = base.clone();
                for (b, &k) in j.iter().enumerate() {
                    for (x, y) in v.iter_mut().zip(rd.simple_coroot(k)) {
                        *x += n[b] * y;
                    }
                }
                out.push(make_stratum_from_lift(rd, parabolic, &v)?);
            }
            // odometer over the box
            let mut a = 0;
            while a < n.len() {
                if n[a] < hi[a] {
                    n[a] += 1;
                    break;
                }
                n[a] = lo[a];
                a += 1;
            }
            if a == n.len() {
                break;
            }
        }
    }
    out.sort_by(|a, b| compare_strata(a, b, m));
    Ok(out)
}

/// For strata on the same parabolic: whether `b.degree ∈ a.degree + Λ̌_{G,P}^pos`.
pub fn closure_same_parabolic_contains(rd: &RootDatum, a: &Stratum, b: &Stratum) -> Result<bool> {
    if a.parabolic != b.parabolic {
        return Err(Error::ParabolicMismatch(a.parabolic.indices(), b.parabolic.indices()));
    }
    let ql = rd.quotient(a.parabolic);
    ql.check_class(&a.degree)?;
    ql.check_class(&b.degree)?;
    ql.positive_class(&ql.sub(&b.degree, &a.degree))
}

/// Necessary condition for the closure of `a` to meet `b`: same `λ̌_G` and
/// `slope(b) ≥ slope(a)`. Not sufficient in general.
pub fn closure_meets_necessary(rd: &RootDatum, a: &Stratum, b: &Stratum) -> bool {
    a.lambda_g == b.lambda_g && slope_geq(rd, &b.slope, &a.slope)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, to_rationals};
    use crate::rootdata::Coweight;

    fn p(idx: &[usize]) -> Parabolic {
        Parabolic::from_indices(idx.iter().copied())
    }

    fn st(rd: &RootDatum, idx: &[usize], v: &[i64]) -> Stratum {
        make_stratum_from_lift(rd, p(idx), v).unwrap()
    }

    fn class(rd: &RootDatum, idx: &[usize], v: &[i64]) -> QuotientClass {
        rd.quotient(p(idx)).project(&Coweight(v.to_vec())).unwrap()
    }

    #[test]
    fn make_stratum_examples() {
        let rd = RootDatum::gl(3).unwrap();
        let s = make_stratum(&rd, p(&[1]), &QuotientClass { free: vec![3, 0], torsion: vec![] }).unwrap();
        assert_eq!(s.slope.coords, to_rationals(&[3, 0, 0]));
        assert_eq!(s.lambda_g.free, vec![3]);
        assert!(make_stratum(&rd, Parabolic::BOREL, &class(&rd, &[], &[2, 1, 0])).is_ok());
        let rd2 = RootDatum::gl(2).unwrap();
        let err = make_stratum(&rd2, Parabolic::BOREL, &class(&rd2, &[], &[0, 1])).unwrap_err();
        assert_eq!(err, Error::NotDominantRegular { index: 0, pairing: "-1".into() });
    }

    #[test]
    fn destabilizing_examples() {
        let rd = RootDatum::gl(3).unwrap();
        let lg = class(&rd, &[0, 1], &[3, 0, 0]);
        assert!(is_destabilizing(&rd, p(&[1]), &class(&rd, &[1], &[3, 0, 0]), &lg).unwrap());
        let rd2 = RootDatum::gl(2).unwrap();
        let g = rd2.full();
        assert!(!is_destabilizing(&rd2, Parabolic::BOREL, &class(&rd2, &[], &[0, 0]), &class(&rd2, &[0], &[0, 0])).unwrap());
        let lg1 = QuotientClass { free: vec![1], torsion: vec![] };
        assert_eq!(rd2.quotient(g).lift(&lg1).unwrap().0.iter().sum::<i64>(), 1);
        assert!(!is_destabilizing(&rd2, Parabolic::BOREL, &class(&rd2, &[], &[0, 1]), &lg1).unwrap());
        assert_eq!(
            is_destabilizing(&rd2, Parabolic::BOREL, &class(&rd2, &[], &[0, 1]), &class(&rd2, &[0], &[0, 0])),
            Err(Error::ComponentMismatch)
        );
    }

    #[test]
    fn comparison_examples() {
        let rd2 = RootDatum::gl(2).unwrap();
        let c = st(&rd2, &[], &[2, -2]);
        let r = comparison_geq(&rd2, &c, Parabolic::BOREL, &class(&rd2, &[], &[1, -1])).unwrap();
        assert!(r.geq && !r.equal);
        let rd = RootDatum::gl(3).unwrap();
        let c = st(&rd, &[], &[2, 1, 0]);
        assert!(!comparison_geq(&rd, &c, p(&[1]), &class(&rd, &[1], &[3, 0, 0])).unwrap().geq);
        let r = comparison_geq(&rd, &c, c.parabolic, &c.degree).unwrap();
        assert_eq!(r, Comparison { geq: true, equal: true, parabolic_contained: Some(true) });
    }

    #[test]
    fn enumeration_gl2() {
        let rd = RootDatum::gl(2).unwrap();
        let lg = QuotientClass { free: vec![1], torsion: vec![] };
        let list = enumerate_strata(&rd, &lg, &int(3)).unwrap();
        let got: Vec<(Parabolic, Vec<Rational>)> = list.iter().map(|s| (s.parabolic, s.slope.coords.clone())).collect();
        assert_eq!(
            got,
            vec![
                (Parabolic::BOREL, to_rationals(&[1, 0])),
                (Parabolic::BOREL, to_rationals(&[2, -1])),
                (rd.full(), vec![frac(1, 2), frac(1, 2)]),
            ]
        );
        let list = enumerate_strata(&rd, &lg, &int(5)).unwrap();
        assert_eq!(list.len(), 4);
        let zero = QuotientClass { free: vec![0], torsion: vec![] };
        let list = enumerate_strata(&rd, &zero, &int(0)).unwrap();
        assert_eq!(list.len(), 1);
        assert_eq!(list[0].parabolic, rd.full());
    }

    #[test]
    fn enumeration_gl3_contains_known_strata() {
        let rd = RootDatum::gl(3).unwrap();
        let lg = QuotientClass { free: vec![3], torsion: vec![] };
        let list = enumerate_strata(&rd, &lg, &int(4)).unwrap();
        assert!(list.contains(&st(&rd, &[], &[2, 1, 0])));
        assert!(list.contains(&st(&rd, &[1], &[3, 0, 0])));
        for s in &list {
            s.check(&rd).unwrap();
        }
    }

    #[test]
    fn closure_examples() {
        let rd2 = RootDatum::gl(2).unwrap();
        let a = st(&rd2, &[], &[1, 0]);
        let b = st(&rd2, &[], &[2, -1]);
        assert!(closure_same_parabolic_contains(&rd2, &a, &b).unwrap());
        assert!(!closure_same_parabolic_contains(&rd2, &b, &a).unwrap());
        assert!(closure_same_parabolic_contains(&rd2, &a, &a).unwrap());
        let rd = RootDatum::gl(3).unwrap();
        let a = st(&rd, &[], &[2, 1, 0]);
        let b = st(&rd, &[1], &[3, 0, 0]);
        let g = st(&rd, &[0, 1], &[1, 1, 1]);
        assert!(closure_meets_necessary(&rd, &a, &b));
        assert!(!closure_meets_necessary(&rd, &a, &g));
        assert!(closure_meets_necessary(&rd, &a, &a));
        assert!(matches!(closure_same_parabolic_contains(&rd, &a, &b), Err(Error::ParabolicMismatch(..))));
    }

    #[test]
    fn stratum_json_round_trip() {
        let rd = RootDatum::gl(3).unwrap();
        let s = st(&rd, &[1], &[3, 0, 0]);
        let j = serde_json::to_string(&s).unwrap();
        assert_eq!(
            j,
            r#"{"I_M":[1],"degree":{"free":[3,0],"torsion":[]},"slope":["3","0","0"],"lambda_G":{"free":[3],"torsion":[]}}"#
        );
        let back: Stratum = serde_json::from_str(&j).unwrap();
        assert_eq!(back, s);
    }
}
