//! The slope map `φ_P`, dominant P-regularity, the projection `proj_P` and
//! the dominant-cone decomposition.

use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::QuotientClass;
use crate::parabolic::Parabolic;
use crate::rational::{self, serde_vec_q, Rational};
use crate::rootdata::{RationalVector, RootDatum};

/// A rational coweight `φ_P(λ̌_P)` together with the parabolic it came from.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SlopeVector {
    #[serde(with = "serde_vec_q")]
    pub coords: Vec<Rational>,
    #[serde(rename = "I_M")]
    pub parabolic: Parabolic,
}

impl SlopeVector {
    pub fn as_rational_vector(&self) -> RationalVector {
        RationalVector::coweight(self.coords.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }
}

impl fmt::Display for SlopeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(rational::format).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `φ_P` of a degree class, computed from its canonical lift.
pub fn phi(rd: &RootDatum, parabolic: Parabolic, c: &QuotientClass) -> Result<SlopeVector> {
    rd.check_parabolic(parabolic)?;
    let ql = rd.quotient(parabolic);
    let v = ql.lift(c)?;
    Ok(SlopeVector { coords: ql.phi_int(&v.0), parabolic })
}

/// `φ_P` of the class of an integral coweight.
pub fn phi_of_lift(rd: &RootDatum, parabolic: Parabolic, v: &[i64]) -> Result<SlopeVector> {
    rd.check_parabolic(parabolic)?;
    rd.check_dim(v.len())?;
    Ok(SlopeVector { coords: rd.quotient(parabolic).phi_int(v), parabolic })
}

/// `φ_P` extended to rational coweights.
pub fn phi_rational(rd: &RootDatum, parabolic: Parabolic, v: &[Rational]) -> Result<SlopeVector> {
    rd.check_parabolic(parabolic)?;
    rd.check_dim(v.len())?;
    Ok(SlopeVector { coords: rd.quotient(parabolic).phi_q(v), parabolic })
}

/// The first simple root outside `I_M` pairing non-positively with `s`.
pub fn regularity_failure(rd: &RootDatum, s: &SlopeVector) -> Option<(usize, Rational)> {
    (0..rd.num_simple())
        .filter(|&j| !s.parabolic.contains(j))
        .map(|j| (j, rd.pair_root_q(&s.coords, j)))
        .find(|(_, p)| !p.is_positive())
}

/// Whether `<s, α_j> > 0` for every `j ∉ I_M`.
#[allow(non_snake_case)]
pub fn is_dominant_P_regular(rd: &RootDatum, s: &SlopeVector) -> bool {
    regularity_failure(rd, s).is_none()
}

/// `φ_P(α̌_j)` for `j ∉ I_M`, checked to lie in the nonnegative coroot cone
/// and to pair positively with `α_j`.
pub fn phi_of_simple_coroot(rd: &RootDatum, parabolic: Parabolic, j: usize) -> Result<SlopeVector> {
    rd.check_parabolic(parabolic)?;
    if j >= rd.num_simple() {
        return Err(Error::IndexOutOfRange { index: j, simple: rd.num_simple() });
    }
    if parabolic.contains(j) {
        return Err(Error::Malformed(format!("index {j} lies in I_M = {parabolic}")));
    }
    let s = phi_of_lift(rd, parabolic, rd.simple_coroot(j))?;
    let coeffs = rd
        .coroot_coefficients(&s.coords)
        .ok_or_else(|| Error::InvariantViolation(format!("φ_P(α̌_{j}) is outside the coroot span")))?;
    if coeffs.iter().any(Signed::is_negative) {
        return Err(Error::InvariantViolation(format!("φ_P(α̌_{j}) has a negative coroot coefficient")));
    }
    if !rd.pair_root_q(&s.coords, j).is_positive() {
        return Err(Error::InvariantViolation(format!("<φ_P(α̌_{j}), α_{j}> is not positive")));
    }
    Ok(s)
}

/// A rational class in `Λ̌_{G,P}^ℚ` written as `Σ_{i∉I_M} y_i [α̌_i]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProjectedClass {
    pub indices: Vec<usize>,
    #[serde(with = "serde_vec_q")]
    pub coeffs: Vec<Rational>,
}

impl ProjectedClass {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Membership in `−Λ̌_{G,P}^{ℚ,pos}`.
    pub fn in_negative_cone(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_positive())
    }
}

/// The component of a degree class along the simple coroots outside `I_M`,
/// dropping the central part. Checks `φ_P(proj_P(c)) = φ_P(c) − φ_G(c_G)`.
#[allow(non_snake_case)]
pub fn proj_P(rd: &RootDatum, parabolic: Parabolic, c: &QuotientClass) -> Result<ProjectedClass> {
    rd.check_parabolic(parabolic)?;
    let v = rd.quotient(parabolic).lift(c)?;
    proj_P_of_lift(rd, parabolic, &v.0)
}

#[allow(non_snake_case)]
pub(crate) fn proj_P_of_lift(rd: &RootDatum, parabolic: Parabolic, v: &[i64]) -> Result<ProjectedClass> {
    let phi_p = rd.quotient(parabolic).phi_int(v);
    let phi_g = rd.quotient(rd.full()).phi_int(v);
    let diff: Vec<Rational> = phi_p.iter().zip(&phi_g).map(|(a, b)| a - b).collect();
    let y = rd
        .coroot_coefficients(&diff)
        .ok_or_else(|| Error::InvariantViolation("φ_P − φ_G is outside the coroot span".into()))?;
    let indices: Vec<usize> = (0..rd.num_simple()).filter(|&i| !parabolic.contains(i)).collect();
    let coeffs: Vec<Rational> = indices.iter().map(|&i| y[i].clone()).collect();
    let mut outside = vec![Rational::zero(); rd.num_simple()];
    for (&i, y) in indices.iter().zip(&coeffs) {
        outside[i] = y.clone();
    }
    let back = rd.quotient(parabolic).phi_q(&rd.combine_coroots(&outside));
    if back != diff {
        return Err(Error::InvariantViolation("φ_P(proj_P(c)) differs from φ_P(c) − φ_G(c_G)".into()));
    }
    Ok(ProjectedClass { indices, coeffs })
}

/// `a ≥ b` in the dominance order on rational coweights.
pub fn slope_geq(rd: &RootDatum, a: &SlopeVector, b: &SlopeVector) -> bool {
    rd.dominance_leq(&b.as_rational_vector(), &a.as_rational_vector()).unwrap_or(false)
}

/// Outcome of comparing two slope vectors in the dominance order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SlopeOrder {
    Equal,
    Greater,
    Less,
    Incomparable,
}

pub fn compare_slopes(rd: &RootDatum, a: &SlopeVector, b: &SlopeVector) -> SlopeOrder {
    if a.coords == b.coords {
        SlopeOrder::Equal
    } else if slope_geq(rd, a, b) {
        SlopeOrder::Greater
    } else if slope_geq(rd, b, a) {
        SlopeOrder::Less
    } else {
        SlopeOrder::Incomparable
    }
}

/// Coefficients `c_i = <v, α_i>` of a coweight in the fundamental-coweight
/// basis (modulo the centre).
pub fn fundamental_coefficients(rd: &RootDatum, v: &[Rational]) -> Vec<Rational> {
    (0..rd.num_simple()).map(|i| rd.pair_root_q(v, i)).collect()
}

/// `λ = μ + τ` with `μ` dominant and orthogonal to the coroots of `I_M2`,
/// and `τ = Σ_{i∈I_M2} t_i α_i` with `t ≥ 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominantSplit {
    #[serde(with = "serde_vec_q")]
    pub mu: Vec<Rational>,
    #[serde(with = "serde_vec_q")]
    pub tau: Vec<Rational>,
    #[serde(with = "serde_vec_q")]
    pub tau_coeffs: Vec<Rational>,
}

pub fn decompose_dominant(rd: &RootDatum, parabolic: Parabolic, lambda: &[Rational]) -> Result<DominantSplit> {
    rd.check_parabolic(parabolic)?;
    rd.check_dim(lambda.len())?;
    let m = rd.num_simple();
    let b: Vec<Rational> = (0..m).map(|i| rd.pair_coroot_q(i, lambda)).collect();
    if let Some(i) = (0..m).find(|&i| b[i].is_negative()) {
        return Err(Error::NotDominant { index: i, pairing: rational::format(&b[i]) });
    }
    let idx = parabolic.indices();
    let k = idx.len();
    let mut tau_coeffs = vec![Rational::zero(); m];
    if k > 0 {
        let sub: Vec<Vec<i64>> = idx.iter().map(|&a| idx.iter().map(|&c| rd.cartan()[a][c]).collect()).collect();
        let inv = rational::QMatrix::from_int_rows(&sub).inverse().expect("Cartan submatrix is invertible");
        let rhs: Vec<Rational> = idx.iter().map(|&i| b[i].clone()).collect();
        for (t, &i) in inv.mul_vec(&rhs).into_iter().zip(&idx) {
            tau_coeffs[i] = t;
        }
    }
    let tau = rd.combine_roots(&tau_coeffs);
    let mu: Vec<Rational> = lambda.iter().zip(&tau).map(|(l, t)| l - t).collect();
    if tau_coeffs.iter().any(Signed::is_negative) {
        return Err(Error::InvariantViolation("dominant split has a negative root coefficient".into()));
    }
    for i in 0..m {
        let p = rd.pair_coroot_q(i, &mu);
        if p.is_negative() || (parabolic.contains(i) && !p.is_zero()) {
            return Err(Error::InvariantViolation(format!("dominant split fails at coroot {i}")));
        }
    }
    Ok(DominantSplit { mu, tau, tau_coeffs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int, to_rationals};
    use crate::rootdata::Coweight;

    fn p(idx: &[usize]) -> Parabolic {
        Parabolic::from_indices(idx.iter().copied())
    }

    fn sv(v: &[i64], par: Parabolic) -> SlopeVector {
        SlopeVector { coords: to_rationals(v), parabolic: par }
    }

    #[test]
    fn phi_examples() {
        let rd = RootDatum::gl(2).unwrap();
        let g = rd.full();
        let c = rd.quotient(g).project(&Coweight(vec![3, 0])).unwrap();
        assert_eq!(phi(&rd, g, &c).unwrap().coords, vec![frac(3, 2), frac(3, 2)]);
        let rd = RootDatum::gl(3).unwrap();
        let c = rd.quotient(p(&[1])).project(&Coweight(vec![3, 0, 0])).unwrap();
        let s = phi(&rd, p(&[1]), &c).unwrap();
        assert_eq!(s.coords, to_rationals(&[3, 0, 0]));
        assert_eq!(phi_of_lift(&rd, p(&[1]), &[3, 1, -1]).unwrap(), s);
        assert!(phi(&rd, p(&[0]), &rd.quotient(p(&[0])).zero()).unwrap().is_zero());
    }

    #[test]
    fn regularity_examples() {
        let rd = RootDatum::gl(3).unwrap();
        assert!(is_dominant_P_regular(&rd, &sv(&[3, 0, 0], p(&[1]))));
        let rd2 = RootDatum::gl(2).unwrap();
        assert!(!is_dominant_P_regular(&rd2, &sv(&[1, 1], Parabolic::BOREL)));
        assert!(is_dominant_P_regular(&rd, &sv(&[0, 5, 1], rd.full())));
    }

    #[test]
    fn phi_of_simple_coroot_examples() {
        let rd = RootDatum::gl(3).unwrap();
        let s = phi_of_simple_coroot(&rd, p(&[1]), 0).unwrap();
        assert_eq!(s.coords, vec![int(1), frac(-1, 2), frac(-1, 2)]);
        assert_eq!(rd.coroot_coefficients(&s.coords).unwrap(), vec![int(1), frac(1, 2)]);
        let rd2 = RootDatum::gl(2).unwrap();
        assert_eq!(phi_of_simple_coroot(&rd2, Parabolic::BOREL, 0).unwrap().coords, to_rationals(&[1, -1]));
        let g2 = RootDatum::parse_named("SC:G2").unwrap();
        assert!(phi_of_simple_coroot(&g2, p(&[1]), 0).is_ok());
        assert!(phi_of_simple_coroot(&rd, p(&[1]), 1).is_err());
    }

    #[test]
    fn proj_examples() {
        let rd = RootDatum::gl(3).unwrap();
        let c = rd.quotient(p(&[1])).project(&Coweight(vec![3, 0, 0])).unwrap();
        let pr = proj_P(&rd, p(&[1]), &c).unwrap();
        assert_eq!(pr.indices, vec![0]);
        assert_eq!(pr.coeffs, vec![int(2)]);
        let c = rd.quotient(p(&[1])).project(&Coweight(vec![1, 1, 1])).unwrap();
        assert!(proj_P(&rd, p(&[1]), &c).unwrap().is_zero());
        let rd = RootDatum::gl(2).unwrap();
        let c = rd.quotient(Parabolic::BOREL).project(&Coweight(vec![2, -2])).unwrap();
        assert_eq!(proj_P(&rd, Parabolic::BOREL, &c).unwrap().coeffs, vec![int(2)]);
    }

    #[test]
    fn slope_geq_examples() {
        let rd = RootDatum::gl(3).unwrap();
        let b = Parabolic::BOREL;
        assert!(slope_geq(&rd, &sv(&[3, 0, 0], b), &sv(&[2, 1, 0], b)));
        assert!(!slope_geq(&rd, &sv(&[1, 1, 1], b), &sv(&[2, 1, 0], b)));
        assert!(slope_geq(&rd, &sv(&[1, 1, 1], b), &sv(&[1, 1, 1], b)));
        assert_eq!(compare_slopes(&rd, &sv(&[2, 1, 0], b), &sv(&[3, 0, 0], b)), SlopeOrder::Less);
    }

    #[test]
    fn decompose_examples() {
        let rd = RootDatum::gl(3).unwrap();
        let d = decompose_dominant(&rd, p(&[1]), &to_rationals(&[1, 1, 0])).unwrap();
        assert_eq!(d.mu, vec![int(1), frac(1, 2), frac(1, 2)]);
        assert_eq!(d.tau, vec![int(0), frac(1, 2), frac(-1, 2)]);
        let d = decompose_dominant(&rd, p(&[0, 1]), &to_rationals(&[2, 1, 0])).unwrap();
        assert_eq!(d.mu, to_rationals(&[1, 1, 1]));
        assert_eq!(d.tau_coeffs, to_rationals(&[1, 1]));
        let d = decompose_dominant(&rd, p(&[0]), &to_rationals(&[2, 2, 1])).unwrap();
        assert_eq!(d.mu, to_rationals(&[2, 2, 1]));
        assert!(decompose_dominant(&rd, p(&[0]), &to_rationals(&[0, 1, 0])).is_err());
    }
}
