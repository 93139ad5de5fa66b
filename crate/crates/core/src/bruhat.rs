//! Minimal double-coset representatives `W_{M1} \ W / W_{M2}`, the deeper
//! Levi index sets they determine, and root-level inclusions between the
//! associated parabolics.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::parabolic::Parabolic;
use crate::rootdata::{RootDatum, RootId, WeylElement, WeylGroup};

/// A pair of parabolic subsets of the same root datum.
#[derive(Debug, Clone, Copy)]
pub struct CosetSetup<'a> {
    pub rd: &'a RootDatum,
    pub m1: Parabolic,
    pub m2: Parabolic,
}

/// A minimal representative with its deeper Levi index sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeviPair {
    pub w: WeylElement,
    pub l1: Parabolic,
    pub l2: Parabolic,
}

#[derive(Serialize, Deserialize)]
struct LeviPairJson {
    w: Vec<usize>,
    #[serde(rename = "I_L1")]
    l1: Parabolic,
    #[serde(rename = "I_L2")]
    l2: Parabolic,
}

impl Serialize for LeviPair {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        LeviPairJson { w: self.w.word().to_vec(), l1: self.l1, l2: self.l2 }.serialize(s)
    }
}

/// Signed root ids permuted by a Weyl element.
fn root_permutation(rd: &RootDatum, w: &WeylElement) -> Vec<RootId> {
    let rs = rd.roots();
    rs.all_ids()
        .map(|id| rs.find(&w.act_weight(&rs.weight_of(id))).expect("Weyl group permutes roots"))
        .collect()
}

impl<'a> CosetSetup<'a> {
    pub fn new(rd: &'a RootDatum, m1: Parabolic, m2: Parabolic) -> Result<CosetSetup<'a>> {
        rd.check_parabolic(m1)?;
        rd.check_parabolic(m2)?;
        Ok(CosetSetup { rd, m1, m2 })
    }

    fn is_positive_image(&self, w: &WeylElement, i: usize) -> bool {
        let rs = self.rd.roots();
        rs.find(&w.act_weight(self.rd.simple_root(i))).is_some_and(|id| rs.is_positive(id))
    }

    /// `w⁻¹(α_i) > 0` for `i ∈ I_M1` and `w(α_i) > 0` for `i ∈ I_M2`.
    pub fn is_min_rep(&self, w: &WeylElement) -> bool {
        let winv = w.inverse();
        self.m1.iter().all(|i| self.is_positive_image(&winv, i))
            && self.m2.iter().all(|i| self.is_positive_image(w, i))
    }

    /// One minimal representative per double coset, by (length, word).
    pub fn min_reps(&self, group: &WeylGroup) -> Vec<WeylElement> {
        group.elements().iter().filter(|w| self.is_min_rep(w)).cloned().collect()
    }

    /// `I_L1 = {i ∈ I_M1 : w(α_j) = α_i for some j ∈ I_M2}` and
    /// `I_L2 = {j ∈ I_M2 : w⁻¹(α_i) = α_j for some i ∈ I_M1}`.
    pub fn deeper_levi_sets(&self, w: &WeylElement) -> Result<LeviPair> {
        if !self.is_min_rep(w) {
            return Err(Error::NotMinimal);
        }
        let rd = self.rd;
        let mut l1 = Parabolic::BOREL;
        let mut l2 = Parabolic::BOREL;
        for j in self.m2.iter() {
            let image = w.act_weight(rd.simple_root(j));
            if let Some(i) = self.m1.iter().find(|&i| rd.simple_root(i) == image.as_slice()) {
                l1 = l1.with(i);
                l2 = l2.with(j);
            }
        }
        Ok(LeviPair { w: w.clone(), l1, l2 })
    }

    /// Checks the root-level identities attached to a minimal representative.
    pub fn verify_root_identities(&self, w: &WeylElement) -> Result<RootIdentityReport> {
        let lp = self.deeper_levi_sets(w)?;
        let rd = self.rd;
        let rs = rd.roots();
        let total = 2 * rs.num_positive();
        let fwd = root_permutation(rd, w);
        let back = root_permutation(rd, &w.inverse());
        let set = |mask: Parabolic| -> Vec<bool> {
            rs.all_ids().map(|id| rs.underlying(id).0.supported_in(mask.bits())).collect()
        };
        let positive: Vec<bool> = rs.all_ids().map(|id| rs.is_positive(id)).collect();
        let image = |perm: &[RootId], s: &[bool]| -> Vec<bool> {
            let mut out = vec![false; total];
            for id in 0..total {
                if s[id] {
                    out[perm[id]] = true;
                }
            }
            out
        };
        let and = |a: &[bool], b: &[bool]| -> Vec<bool> { a.iter().zip(b).map(|(x, y)| *x && *y).collect() };
        let or = |a: &[bool], b: &[bool]| -> Vec<bool> { a.iter().zip(b).map(|(x, y)| *x || *y).collect() };
        let minus = |a: &[bool], b: &[bool]| -> Vec<bool> { a.iter().zip(b).map(|(x, y)| *x && !*y).collect() };
        let subset = |a: &[bool], b: &[bool]| a.iter().zip(b).all(|(x, y)| !*x || *y);

        let (rm1, rm2, rl1, rl2) = (set(self.m1), set(self.m2), set(lp.l1), set(lp.l2));

        let levi_roots_left = rl1 == and(&rm1, &image(&fwd, &rm2));
        let levi_roots_right = rl2 == and(&image(&back, &rm1), &rm2);
        let parabolic_intersection_left = subset(
            &and(&or(&rm1, &positive), &image(&fwd, &or(&rm2, &positive))),
            &or(&positive, &rl1),
        );
        let parabolic_intersection_right = subset(
            &and(&image(&back, &or(&rm1, &positive)), &or(&rm2, &positive)),
            &or(&positive, &rl2),
        );
        let unipotent_intersection = subset(
            &and(&image(&back, &minus(&positive, &rl1)), &or(&positive, &rl2)),
            &minus(&positive, &rl2),
        );
        let levi_roots_conjugate = image(&fwd, &rl2) == rl1
            && lp.l2.iter().all(|j| {
                let img = w.act_weight(rd.simple_root(j));
                lp.l1.iter().any(|i| rd.simple_root(i) == img.as_slice())
            })
            && lp.l1.len() == lp.l2.len();
        let is_simple = |id: RootId| id < rd.num_simple();
        let simple_preimage = self.m1.iter().all(|i| {
            let pre = back[rs.simple(i)];
            !rm2[pre] || is_simple(pre)
        }) && self.m2.iter().all(|i| {
            let img = fwd[rs.simple(i)];
            !rm1[img] || is_simple(img)
        });
        Ok(RootIdentityReport {
            positivity: true,
            levi_roots_left,
            levi_roots_right,
            parabolic_intersection_left,
            parabolic_intersection_right,
            unipotent_intersection,
            simple_preimage,
            levi_roots_conjugate,
        })
    }
}

/// Pass/fail per root-level identity for one minimal representative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootIdentityReport {
    /// Simple roots of `I_M1` (resp. `I_M2`) stay positive under `w⁻¹` (resp. `w`).
    pub positivity: bool,
    /// `R_L1 = R_M1 ∩ w(R_M2)`.
    pub levi_roots_left: bool,
    /// `R_L2 = w⁻¹(R_M1) ∩ R_M2`.
    pub levi_roots_right: bool,
    /// `(R_M1 ∪ R_+) ∩ w(R_M2 ∪ R_+) ⊆ R_+ ∪ R_L1`.
    pub parabolic_intersection_left: bool,
    /// `w⁻¹(R_M1 ∪ R_+) ∩ (R_M2 ∪ R_+) ⊆ R_+ ∪ R_L2`.
    pub parabolic_intersection_right: bool,
    /// `w⁻¹(R_+ ∖ R_L1) ∩ (R_+ ∪ R_L2) ⊆ R_+ ∖ R_L2`.
    pub unipotent_intersection: bool,
    /// Roots of `R_M2` hit by `w⁻¹` from simple roots of `I_M1` are simple, and symmetrically.
    pub simple_preimage: bool,
    /// `w(R_L2) = R_L1`, matching simple roots.
    pub levi_roots_conjugate: bool,
}

impl RootIdentityReport {
    pub fn entries(&self) -> [(&'static str, bool); 8] {
        [
            ("positivity", self.positivity),
            ("levi_roots_left", self.levi_roots_left),
            ("levi_roots_right", self.levi_roots_right),
            ("parabolic_intersection_left", self.parabolic_intersection_left),
            ("parabolic_intersection_right", self.parabolic_intersection_right),
            ("unipotent_intersection", self.unipotent_intersection),
            ("simple_preimage", self.simple_preimage),
            ("levi_roots_conjugate", self.levi_roots_conjugate),
        ]
    }

    pub fn all_pass(&self) -> bool {
        self.entries().iter().all(|e| e.1)
    }
}

/// Elements of the parabolic subgroup `W_M`, as indices into `group`.
pub fn parabolic_subgroup(group: &WeylGroup, m: Parabolic) -> Vec<usize> {
    group
        .elements()
        .iter()
        .enumerate()
        .filter(|(_, w)| w.word().iter().all(|&i| m.contains(i)))
        .map(|(k, _)| k)
        .collect()
}

/// Double cosets `W_M1 w W_M2` as sorted index lists, by brute force.
pub fn double_cosets(group: &WeylGroup, m1: Parabolic, m2: Parabolic) -> Vec<Vec<usize>> {
    let w1 = parabolic_subgroup(group, m1);
    let w2 = parabolic_subgroup(group, m2);
    let mut assigned = vec![false; group.len()];
    let mut out = Vec::new();
    for k in 0..group.len() {
        if assigned[k] {
            continue;
        }
        let mut coset = Vec::new();
        for &a in &w1 {
            let ak = group.product(a, k);
            for &b in &w2 {
                let x = group.product(ak, b);
                if !assigned[x] {
                    assigned[x] = true;
                    coset.push(x);
                }
            }
        }
        coset.sort_unstable();
        out.push(coset);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::DEFAULT_CAP;

    fn p(idx: &[usize]) -> Parabolic {
        Parabolic::from_indices(idx.iter().copied())
    }

    #[test]
    fn gl3_min_reps() {
        let rd = RootDatum::gl(3).unwrap();
        let g = rd.weyl_group(DEFAULT_CAP).unwrap();
        let s = CosetSetup::new(&rd, p(&[0]), p(&[1])).unwrap();
        let w = WeylElement::from_word(&rd, &[1, 0]).unwrap();
        assert!(s.is_min_rep(&w));
        assert!(!s.is_min_rep(&WeylElement::from_word(&rd, &[0]).unwrap()));
        assert!(s.is_min_rep(&WeylElement::identity(3)));
        let words: Vec<Vec<usize>> = s.min_reps(&g).iter().map(|w| w.word().to_vec()).collect();
        assert_eq!(words, vec![vec![], vec![1, 0]]);
        let s2 = CosetSetup::new(&rd, p(&[0]), p(&[0])).unwrap();
        let words: Vec<Vec<usize>> = s2.min_reps(&g).iter().map(|w| w.word().to_vec()).collect();
        assert_eq!(words, vec![vec![], vec![1]]);
        let s3 = CosetSetup::new(&rd, Parabolic::BOREL, Parabolic::BOREL).unwrap();
        assert_eq!(s3.min_reps(&g).len(), 6);
    }

    #[test]
    fn gl3_levi_sets() {
        let rd = RootDatum::gl(3).unwrap();
        let s = CosetSetup::new(&rd, p(&[0]), p(&[1])).unwrap();
        let w = WeylElement::from_word(&rd, &[1, 0]).unwrap();
        let lp = s.deeper_levi_sets(&w).unwrap();
        assert_eq!((lp.l1, lp.l2), (p(&[0]), p(&[1])));
        let lp = s.deeper_levi_sets(&WeylElement::identity(3)).unwrap();
        assert_eq!((lp.l1, lp.l2), (Parabolic::BOREL, Parabolic::BOREL));
        let s2 = CosetSetup::new(&rd, p(&[0]), p(&[0])).unwrap();
        let lp = s2.deeper_levi_sets(&WeylElement::identity(3)).unwrap();
        assert_eq!((lp.l1, lp.l2), (p(&[0]), p(&[0])));
        assert_eq!(s.deeper_levi_sets(&WeylElement::from_word(&rd, &[0]).unwrap()), Err(Error::NotMinimal));
        assert_eq!(serde_json::to_string(&s.deeper_levi_sets(&w).unwrap()).unwrap(), r#"{"w":[1,0],"I_L1":[0],"I_L2":[1]}"#);
    }

    #[test]
    fn identities_hold_on_examples() {
        let rd = RootDatum::gl(3).unwrap();
        let s = CosetSetup::new(&rd, p(&[0]), p(&[1])).unwrap();
        let w = WeylElement::from_word(&rd, &[1, 0]).unwrap();
        assert!(s.verify_root_identities(&w).unwrap().all_pass());
        let s2 = CosetSetup::new(&rd, p(&[1]), p(&[1])).unwrap();
        assert!(s2.verify_root_identities(&WeylElement::identity(3)).unwrap().all_pass());
    }

    #[test]
    fn coset_counts_match_brute_force() {
        for name in ["GL:3", "SC:B2", "SC:G2", "Ad:A1xA1"] {
            let rd = RootDatum::parse_named(name).unwrap();
            let g = rd.weyl_group(DEFAULT_CAP).unwrap();
            for m1 in Parabolic::all(rd.num_simple()) {
                for m2 in Parabolic::all(rd.num_simple()) {
                    let s = CosetSetup::new(&rd, m1, m2).unwrap();
                    assert_eq!(s.min_reps(&g).len(), double_cosets(&g, m1, m2).len(), "{name} {m1} {m2}");
                }
            }
        }
    }
}
