//! Exhaustive and seeded-random property sweeps over small root data and
//! splitting types. Each sweep counts cases and failures and keeps the first
//! failure for diagnostics.

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bruhat::{double_cosets, CosetSetup};
use crate::error::Result;
use crate::lattice::{gl_block_sizes, in_weight_sublattice, weight_with_labels};
use crate::p1::{
    canonical_reduction_in, compare_permutation_flags, filtration_matches_hn, gl3_report, mds_hom_vanishing,
    specializes_to, specializes_to_by_permutation, splitting_types, strata_poset, SplittingType,
};
use crate::parabolic::Parabolic;
use crate::rational::{frac, Rational};
use crate::reps::{dominant_multiplicities, subspace_mod_RM, weyl_dimension, weyl_orbit, weyl_weights};
use crate::rootdata::{catalog, RootDatum, DEFAULT_CAP};
use crate::slope::phi_of_lift;
use crate::strata::destabilizing_witness;

/// Sizes of the sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyConfig {
    /// Semisimple rank bound for the Weyl-group, representation and semistability sweeps.
    pub max_rank: usize,
    /// Semisimple rank bound for the slope-image sweep.
    pub slope_rank: usize,
    /// Largest `GL(n)` in the projective-line sweeps.
    pub p1_rank: usize,
    /// Coordinate bound for lifts, dominant labels and splitting types.
    pub box_bound: i64,
    /// Random samples per datum where a sweep samples.
    pub samples: usize,
    pub seed: u64,
    pub cap: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { max_rank: 3, slope_rank: 4, p1_rank: 4, box_bound: 3, samples: 50, seed: 7, cap: DEFAULT_CAP }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepResult {
    pub name: String,
    pub cases: u64,
    pub failures: u64,
    pub first_failure: Option<String>,
}

impl SweepResult {
    fn new(name: &str) -> SweepResult {
        SweepResult { name: name.into(), cases: 0, failures: 0, first_failure: None }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(what());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

fn boxed(dim: usize, bound: i64) -> impl Iterator<Item = Vec<i64>> {
    let side = (2 * bound + 1) as usize;
    let total = side.pow(dim as u32);
    (0..total).map(move |mut k| {
        (0..dim)
            .map(|_| {
                let x = (k % side) as i64 - bound;
                k /= side;
                x
            })
            .collect()
    })
}

fn labels_box(m: usize, bound: i64) -> impl Iterator<Item = Vec<i64>> {
    boxed(m, bound).filter(|v| v.iter().all(|&x| x >= 0))
}

/// `φ_P` on random `GL(n)` degrees against block averages.
pub fn sweep_gl_slopes(cfg: &VerifyConfig) -> Result<SweepResult> {
    let mut res = SweepResult::new("gl-slope-formula");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let max_n = cfg.p1_rank.max(1) + 1;
    let data: Vec<RootDatum> = (1..=max_n).map(RootDatum::gl).collect::<Result<_>>()?;
    for _ in 0..cfg.samples {
        let rd = &data[rng.gen_range(0..data.len())];
        let n = rd.rank();
        let p = Parabolic::from_bits(rng.gen_range(0..1u64 << (n - 1)));
        let v: Vec<i64> = (0..n).map(|_| rng.gen_range(-9..=9)).collect();
        let phi = phi_of_lift(rd, p, &v)?;
        let mut expected = Vec::with_capacity(n);
        let mut pos = 0;
        for r in gl_block_sizes(n, p) {
            let deg: i64 = v[pos..pos + r].iter().sum();
            expected.extend(std::iter::repeat_n(frac(deg, r as i64), r));
            pos += r;
        }
        res.record(phi.coords == expected, || format!("GL({n}) I_M={p} degree {v:?}"));
    }
    Ok(res)
}

/// `φ_P(α̌_j)` lies in the nonnegative coroot cone and pairs positively with `α_j`.
pub fn sweep_slope_images(cfg: &VerifyConfig) -> Result<SweepResult> {
    let mut res = SweepResult::new("slope-images-positive");
    for rd in catalog(cfg.slope_rank) {
        let m = rd.num_simple();
        for p in Parabolic::all(m) {
            for j in p.complement(m).iter() {
                let s = phi_of_lift(&rd, p, rd.simple_coroot(j))?;
                let cone = rd.coroot_coefficients(&s.coords).is_some_and(|c| c.iter().all(|x| !x.is_negative()));
                let pos = rd.pair_root_q(&s.coords, j).is_positive();
                res.record(cone && pos, || format!("{} I_M={p} j={j}", rd.name()));
            }
        }
    }
    Ok(res)
}

/// Minimal double-coset representatives: count against brute force and the
/// root-level identities for each representative.
pub fn sweep_bruhat(cfg: &VerifyConfig) -> Result<SweepResult> {
    let mut res = SweepResult::new("bruhat-min-reps");
    for rd in catalog(cfg.max_rank) {
        let group = rd.weyl_group(cfg.cap)?;
        let m = rd.num_simple();
        for m1 in Parabolic::all(m) {
            for m2 in Parabolic::all(m) {
                let setup = CosetSetup::new(&rd, m1, m2)?;
                let reps = setup.min_reps(&group);
                let count = double_cosets(&group, m1, m2).len();
                res.record(reps.len() == count, || {
                    format!("{} ({m1},{m2}): {} reps vs {count} cosets", rd.name(), reps.len())
                });
                for w in &reps {
                    let report = setup.verify_root_identities(w)?;
                    res.record(report.all_pass(), || format!("{} ({m1},{m2}) w={}", rd.name(), w.word_string()));
                }
            }
        }
    }
    Ok(res)
}

fn random_dominant(rd: &RootDatum, rng: &mut ChaCha8Rng, bound: i64) -> Result<Option<Vec<i64>>> {
    let labels: Vec<i64> = (0..rd.num_simple()).map(|_| rng.gen_range(0..=bound)).collect();
    weight_with_labels(rd, &labels)
}

/// Freudenthal multiplicities sum to the Weyl dimension.
pub fn sweep_weyl_dimension(cfg: &VerifyConfig) -> Result<SweepResult> {
    let mut res = SweepResult::new("weyl-dimension");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x5eed);
    for rd in catalog(cfg.max_rank) {
        let mut done = 0;
        let mut attempts = 0;
        while done < cfg.samples && attempts < 20 * cfg.samples {
            attempts += 1;
            let Some(lambda) = random_dominant(&rd, &mut rng, cfg.box_bound)? else { continue };
            done += 1;
            let dim: usize = dominant_multiplicities(&rd, &lambda)?
                .iter()
                .map(|(mu, &m)| m as usize * weyl_orbit(&rd, mu).len())
                .sum();
            let d = weyl_dimension(&rd, &lambda)?;
            res.record(Rational::from_integer((dim as i64).into()) == d, || {
                format!("{} λ={lambda:?}", rd.name())
            });
        }
    }
    Ok(res)
}

/// `dim V[λ + ℤR_M] = 1` exactly when `λ` is orthogonal to the Levi coroots.
pub fn sweep_one_dimensional(cfg: &VerifyConfig) -> Result<SweepResult> {
    let mut res = SweepResult::new("top-level-one-dimensional");
    for rd in catalog(cfg.max_rank) {
        let m = rd.num_simple();
        for labels in labels_box(m, cfg.box_bound) {
            let Some(lambda) = weight_with_labels(&rd, &labels)? else { continue };
            let v = weyl_weights(&rd, &lambda)?;
            for p in Parabolic::all(m) {
                let one = subspace_mod_RM(&rd, &v, p).dim() == 1;
                res.record(one == in_weight_sublattice(&rd, p, &lambda), || {
                    format!("{} λ={lambda:?} I_M={p}", rd.name())
                });
            }
        }
    }
    Ok(res)
}

/// The slope-inequality and projection tests for a destabilizing reduction agree.
pub fn sweep_destabilizing(cfg: &VerifyConfig) -> Result<SweepResult> {
    let mut res = SweepResult::new("semistability-tests-agree");
    for rd in catalog(cfg.max_rank) {
        let full = rd.quotient(rd.full());
        for p in Parabolic::all(rd.num_simple()) {
            let ql = rd.quotient(p);
            for v in boxed(rd.rank(), cfg.box_bound) {
                let w = destabilizing_witness(&rd, p, &ql.project_raw(&v), &full.project_raw(&v))?;
                res.record(w.slope_condition == w.projection_condition, || {
                    format!("{} I_M={p} lift {v:?}", rd.name())
                });
            }
        }
    }
    Ok(res)
}

/// For dominant `P₁`-regular `φ` and minimal `w`: `φ ≥ w⁻¹φ`, with equality only at `w = 1`.
pub fn sweep_w_equals_one(cfg: &VerifyConfig) -> Result<SweepResult> {
    let mut res = SweepResult::new("minimal-rep-slope-comparison");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0xa11);
    for rd in catalog(cfg.max_rank) {
        let group = rd.weyl_group(cfg.cap)?;
        let m = rd.num_simple();
        let fw = rd.fundamental_coweights();
        for m1 in Parabolic::all(m) {
            for m2 in Parabolic::all(m) {
                let setup = CosetSetup::new(&rd, m1, m2)?;
                let reps = setup.min_reps(&group);
                for _ in 0..3 {
                    let mut phi = vec![Rational::zero(); rd.rank()];
                    for j in m1.complement(m).iter() {
                        let c = frac(rng.gen_range(1..=7), rng.gen_range(1..=3));
                        for (x, y) in phi.iter_mut().zip(&fw[j].coords) {
                            *x += &c * y;
                        }
                    }
                    for w in &reps {
                        let moved = w.inverse().act_coweight_q(&phi);
                        let diff: Vec<Rational> = phi.iter().zip(&moved).map(|(a, b)| a - b).collect();
                        let geq = rd.coroot_coefficients(&diff).is_some_and(|c| c.iter().all(|x| !x.is_negative()));
                        let eq = diff.iter().all(Zero::is_zero);
                        res.record(geq && eq == w.is_identity(), || {
                            format!("{} ({m1},{m2}) w={}", rd.name(), w.word_string())
                        });
                    }
                }
            }
        }
    }
    Ok(res)
}

/// Splitting types of rank `1..=max_n` with entries in `[-bound, bound]`.
pub fn splitting_types_in_box(max_n: usize, bound: i64) -> Vec<SplittingType> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let r = n as i64 * bound;
        for total in -r..=r {
            out.extend(splitting_types(n, total, bound));
        }
    }
    out
}

/// Sorted dominance and the permutation-translate formula agree on all pairs;
/// rank-2 closures are the expected chains.
pub fn sweep_specialization(cfg: &VerifyConfig) -> Result<SweepResult> {
    let mut res = SweepResult::new("specialization-criteria-agree");
    let types = splitting_types_in_box(cfg.p1_rank, cfg.box_bound);
    for a in &types {
        for b in types.iter().filter(|b| b.rank() == a.rank()) {
            let x = specializes_to(a, b)?;
            let y = specializes_to_by_permutation(a, b)?;
            res.record(x == y, || format!("{a} -> {b}"));
        }
    }
    for d in 0..=3 {
        let p = strata_poset(2, d, 2 * cfg.box_bound)?;
        res.record(p.gl2_closure_chains == Some(true) && p.covers_match_steps, || format!("rank 2 degree {d}"));
    }
    Ok(res)
}

/// Canonical slope dominates every permutation flag and rises along specialization.
pub fn sweep_p1_comparison(cfg: &VerifyConfig) -> Result<SweepResult> {
    let mut res = SweepResult::new("canonical-reduction-comparison");
    for n in 1..=cfg.p1_rank {
        let rd = RootDatum::gl(n)?;
        let r = n as i64 * cfg.box_bound;
        for total in -r..=r {
            for st in splitting_types(n, total, cfg.box_bound) {
                let c = compare_permutation_flags(&rd, &st)?;
                res.record(c.dominates_all && c.equality_only_sorted, || format!("flags of {st}"));
            }
            let p = strata_poset(n, total, cfg.box_bound)?;
            res.record(p.slope_monotone && p.covers_match_steps, || format!("poset n={n} d={total}"));
        }
    }
    Ok(res)
}

/// Standard-representation filtration at the canonical slope reproduces HN blocks.
pub fn sweep_filtration(cfg: &VerifyConfig) -> Result<SweepResult> {
    let mut res = SweepResult::new("filtration-matches-hn");
    for n in 1..=cfg.p1_rank {
        let rd = RootDatum::gl(n)?;
        for st in splitting_types_in_box(n, cfg.box_bound).into_iter().filter(|s| s.rank() == n) {
            res.record(filtration_matches_hn(&rd, &st)?, || st.to_string());
        }
    }
    Ok(res)
}

/// No maps from the top HN block to the quotient.
pub fn sweep_hom_vanishing(cfg: &VerifyConfig) -> Result<SweepResult> {
    let mut res = SweepResult::new("top-block-hom-vanishing");
    for st in splitting_types_in_box(cfg.p1_rank, cfg.box_bound) {
        res.record(mds_hom_vanishing(&st), || st.to_string());
    }
    Ok(res)
}

/// `PGL(n)` component group has order `n`.
pub fn sweep_torsion(cfg: &VerifyConfig) -> Result<SweepResult> {
    let mut res = SweepResult::new("pgl-torsion");
    for n in 2..=cfg.max_rank + 1 {
        let rd = RootDatum::parse_named(&format!("PGL:{n}"))?;
        let order = rd.quotient(rd.full()).torsion_order();
        res.record(order == n as i64, || format!("PGL({n}) torsion order {order}"));
    }
    Ok(res)
}

/// The `GL(3)` example: necessary closure condition holds, the
/// same-parabolic test does not apply, and the canonical reductions behave.
pub fn sweep_gl3(_: &VerifyConfig) -> Result<SweepResult> {
    let mut res = SweepResult::new("gl3-example");
    let r = gl3_report()?;
    res.record(r.closure_meets, || "closure condition fails".into());
    res.record(r.same_parabolic_test.starts_with("not applicable"), || r.same_parabolic_test.clone());
    res.record(r.partial_more_unstable, || "slope order".into());
    let rd = RootDatum::gl(3)?;
    let (_, canon) = canonical_reduction_in(&rd, &SplittingType::new(vec![2, 1, 0])?)?;
    res.record(canon == r.complete_flag, || "canonical reduction of (2,1,0)".into());
    Ok(res)
}

/// Every sweep, in a fixed order.
pub fn run_all(cfg: &VerifyConfig) -> Result<Vec<SweepResult>> {
    type Sweep = fn(&VerifyConfig) -> Result<SweepResult>;
    let sweeps: [Sweep; 13] = [
        sweep_gl_slopes,
        sweep_slope_images,
        sweep_bruhat,
        sweep_weyl_dimension,
        sweep_one_dimensional,
        sweep_destabilizing,
        sweep_w_equals_one,
        sweep_specialization,
        sweep_p1_comparison,
        sweep_filtration,
        sweep_hom_vanishing,
        sweep_torsion,
        sweep_gl3,
    ];
    sweeps.iter().map(|f| f(cfg)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> VerifyConfig {
        VerifyConfig { max_rank: 2, slope_rank: 2, p1_rank: 3, box_bound: 2, samples: 10, ..VerifyConfig::default() }
    }

    #[test]
    fn small_sweeps_pass() {
        for r in run_all(&small()).unwrap() {
            assert!(r.passed(), "{r:?}");
            assert!(r.cases > 0, "{}", r.name);
        }
    }

    #[test]
    fn labels_give_dominant_weights() {
        let rd = RootDatum::parse_named("PGL:3").unwrap();
        assert_eq!(weight_with_labels(&rd, &[1, 0]).unwrap(), None);
        let w = weight_with_labels(&rd, &[1, 1]).unwrap().unwrap();
        assert_eq!((rd.pair_coroot(0, &w), rd.pair_coroot(1, &w)), (1, 1));
        let gl = RootDatum::gl(3).unwrap();
        let w = weight_with_labels(&gl, &[2, 0]).unwrap().unwrap();
        assert_eq!((gl.pair_coroot(0, &w), gl.pair_coroot(1, &w)), (2, 0));
    }
}
