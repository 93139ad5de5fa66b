//! Vector bundles on the projective line as splitting types: canonical
//! reductions, the specialization poset, Hom dimensions and permutation flags.
//!
//! The specialization criterion is applied to weakly decreasing tuples, not
//! only strictly decreasing ones; the exhaustive cross-check against the
//! permutation-translate formula guards this.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{gl_parabolic_of_blocks, QuotientClass};
use crate::parabolic::Parabolic;
use crate::rational::{frac, serde_vec_q, Rational};
use crate::reps::{filtration_levels, gl_standard};
use crate::rootdata::{Coweight, RootDatum};
use crate::slope::slope_geq;
use crate::strata::{
    closure_meets_necessary, closure_same_parabolic_contains, comparison_geq, make_stratum_from_lift, Stratum,
};

/// Degrees `d_1 ≥ … ≥ d_n` of `O(d_1) ⊕ … ⊕ O(d_n)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct SplittingType {
    degrees: Vec<i64>,
}

impl TryFrom<Vec<i64>> for SplittingType {
    type Error = Error;

    fn try_from(v: Vec<i64>) -> Result<Self> {
        SplittingType::new(v)
    }
}

impl From<SplittingType> for Vec<i64> {
    fn from(s: SplittingType) -> Vec<i64> {
        s.degrees
    }
}

impl fmt::Display for SplittingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.degrees.iter().join(","))
    }
}

impl SplittingType {
    /// Requires a nonempty weakly decreasing tuple.
    pub fn new(degrees: Vec<i64>) -> Result<SplittingType> {
        if degrees.is_empty() {
            return Err(Error::Malformed("a splitting type needs rank at least 1".into()));
        }
        if degrees.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Malformed(format!(
                "splitting type ({}) is not weakly decreasing",
                degrees.iter().join(",")
            )));
        }
        Ok(SplittingType { degrees })
    }

    /// Sorts an arbitrary nonempty tuple into a splitting type.
    pub fn from_unsorted(mut degrees: Vec<i64>) -> Result<SplittingType> {
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        SplittingType::new(degrees)
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    pub fn total_degree(&self) -> i64 {
        self.degrees.iter().sum()
    }
}

/// Harder–Narasimhan data: blocks of equal degree, in decreasing slope.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HNData {
    pub block_ranks: Vec<usize>,
    pub block_degrees: Vec<i64>,
    #[serde(with = "serde_vec_q")]
    pub block_slopes: Vec<Rational>,
}

impl HNData {
    pub fn of(st: &SplittingType) -> HNData {
        let mut block_ranks = Vec::new();
        let mut block_degrees = Vec::new();
        let mut block_slopes = Vec::new();
        for (d, group) in &st.degrees.iter().chunk_by(|&&d| d) {
            let r = group.count();
            block_ranks.push(r);
            block_degrees.push(d * r as i64);
            block_slopes.push(frac(d, 1));
        }
        HNData { block_ranks, block_degrees, block_slopes }
    }

    pub fn parabolic(&self) -> Parabolic {
        gl_parabolic_of_blocks(&self.block_ranks)
    }
}

fn check_gl(rd: &RootDatum, n: usize) -> Result<()> {
    match rd.gl_size() {
        Some(m) if m == n => Ok(()),
        Some(m) => Err(Error::DimensionMismatch { expected: m, got: n }),
        None => Err(Error::Malformed(format!("{} is not a general linear group", rd.name()))),
    }
}

/// Canonical reduction of a split bundle, as HN data and a `GL(n)` stratum.
pub fn canonical_reduction(st: &SplittingType) -> Result<(HNData, Stratum)> {
    let rd = RootDatum::gl(st.rank())?;
    canonical_reduction_in(&rd, st)
}

/// As [`canonical_reduction`], reusing an existing `GL(n)` datum.
pub fn canonical_reduction_in(rd: &RootDatum, st: &SplittingType) -> Result<(HNData, Stratum)> {
    check_gl(rd, st.rank())?;
    let hn = HNData::of(st);
    let stratum = make_stratum_from_lift(rd, hn.parabolic(), &st.degrees)?;
    Ok((hn, stratum))
}

fn check_ranks(a: &SplittingType, b: &SplittingType) -> Result<()> {
    if a.rank() != b.rank() {
        return Err(Error::DimensionMismatch { expected: a.rank(), got: b.rank() });
    }
    Ok(())
}

/// Whether `from` specializes to `to`: equal totals and prefix sums of `to`
/// dominating those of `from`.
pub fn specializes_to(from: &SplittingType, to: &SplittingType) -> Result<bool> {
    check_ranks(from, to)?;
    Ok(dominates(&from.degrees, &to.degrees))
}

fn dominates(lo: &[i64], hi: &[i64]) -> bool {
    let (mut a, mut b) = (0i64, 0i64);
    for (x, y) in lo.iter().zip(hi) {
        a += x;
        b += y;
        if b < a {
            return false;
        }
    }
    a == b
}

/// Brute-force form of [`specializes_to`]: some permutation of `to` lies in
/// `from + Σ ℤ≥0 (e_i − e_{i+1})`.
pub fn specializes_to_by_permutation(from: &SplittingType, to: &SplittingType) -> Result<bool> {
    check_ranks(from, to)?;
    Ok(distinct_permutations(&to.degrees).iter().any(|p| {
        let diff: Vec<i64> = p.iter().zip(&from.degrees).map(|(x, y)| x - y).collect();
        let mut s = 0;
        let mut ok = true;
        for (k, d) in diff.iter().enumerate() {
            s += d;
            if k + 1 < diff.len() && s < 0 {
                ok = false;
                break;
            }
        }
        ok && s == 0
    }))
}

fn distinct_permutations(v: &[i64]) -> Vec<Vec<i64>> {
    let set: BTreeSet<Vec<i64>> = v.iter().copied().permutations(v.len()).collect();
    set.into_iter().rev().collect()
}

/// All splitting types of rank `n`, total degree `total`, entries in `[-bound, bound]`,
/// in increasing lexicographic order.
pub fn splitting_types(n: usize, total: i64, bound: i64) -> Vec<SplittingType> {
    fn rec(n: usize, total: i64, lo: i64, hi: i64, prefix: &mut Vec<i64>, out: &mut Vec<SplittingType>) {
        if prefix.len() == n {
            if total == 0 {
                out.push(SplittingType { degrees: prefix.clone() });
            }
            return;
        }
        let left = (n - prefix.len()) as i64;
        for d in lo..=hi {
            // the remaining entries lie in [lo, d]
            let rest = total - d;
            if rest < lo * (left - 1) || rest > d * (left - 1) {
                continue;
            }
            prefix.push(d);
            rec(n, rest, lo, d, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 && bound >= 0 {
        rec(n, total, -bound, bound, &mut Vec::with_capacity(n), &mut out);
    }
    out.sort();
    out
}

/// Specialization poset on a box of splitting types.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetReport {
    pub n: usize,
    pub total_degree: i64,
    pub box_bound: i64,
    pub nodes: Vec<SplittingType>,
    /// Covering relations `[from, to]` as node indices.
    pub edges: Vec<[usize; 2]>,
    /// Covers of the dominance relation coincide with the reduced single-coroot step graph.
    pub covers_match_steps: bool,
    /// Canonical slopes never decrease along an edge.
    pub slope_monotone: bool,
    /// For rank 2: the closure of `(ℓ, d−ℓ)` is `{(ℓ', d−ℓ') : ℓ' ≥ ℓ}` within the box.
    pub gl2_closure_chains: Option<bool>,
}

impl PosetReport {
    pub fn all_pass(&self) -> bool {
        self.covers_match_steps && self.slope_monotone && self.gl2_closure_chains != Some(false)
    }

    /// Graphviz rendering of the Hasse diagram.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph specialization {\n  rankdir=LR;\n");
        for (i, node) in self.nodes.iter().enumerate() {
            s.push_str(&format!("  n{i} [label=\"{node}\"];\n"));
        }
        for [a, b] in &self.edges {
            s.push_str(&format!("  n{a} -> n{b};\n"));
        }
        s.push_str("}\n");
        s
    }
}

fn transitive_reduction(n: usize, edges: &BTreeSet<(usize, usize)>) -> BTreeSet<(usize, usize)> {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
    }
    // reach[a] = nodes reachable from a by a path of length ≥ 1
    let mut reach = vec![BTreeSet::new(); n];
    for (a, r) in reach.iter_mut().enumerate() {
        let mut stack = adj[a].clone();
        while let Some(x) = stack.pop() {
            if r.insert(x) {
                stack.extend(adj[x].iter().copied());
            }
        }
    }
    edges
        .iter()
        .copied()
        .filter(|&(a, b)| !adj[a].iter().any(|&c| c != b && reach[c].contains(&b)))
        .collect()
}

pub fn strata_poset(n: usize, total_degree: i64, box_bound: i64) -> Result<PosetReport> {
    if n == 0 {
        return Err(Error::Malformed("rank must be at least 1".into()));
    }
    if box_bound < 0 {
        return Err(Error::Malformed("box bound must be nonnegative".into()));
    }
    let nodes = splitting_types(n, total_degree, box_bound);
    let index: BTreeMap<&SplittingType, usize> = nodes.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let len = nodes.len();
    let rel = |a: usize, b: usize| a != b && dominates(&nodes[a].degrees, &nodes[b].degrees);

    let mut covers = BTreeSet::new();
    for a in 0..len {
        for b in 0..len {
            if rel(a, b) && !(0..len).any(|c| rel(a, c) && rel(c, b)) {
                covers.insert((a, b));
            }
        }
    }

    let mut steps = BTreeSet::new();
    for (a, node) in nodes.iter().enumerate() {
        for k in 0..n - 1 {
            let mut d = node.degrees.clone();
            d[k] += 1;
            d[k + 1] -= 1;
            let st = SplittingType::from_unsorted(d)?;
            if let Some(&b) = index.get(&st) {
                if b != a {
                    steps.insert((a, b));
                }
            }
        }
    }
    let covers_match_steps = transitive_reduction(len, &steps) == covers;

    let rd = RootDatum::gl(n)?;
    let canon: Vec<Stratum> =
        nodes.iter().map(|s| canonical_reduction_in(&rd, s).map(|(_, st)| st)).collect::<Result<_>>()?;
    let slope_monotone = covers.iter().all(|&(a, b)| slope_geq(&rd, &canon[b].slope, &canon[a].slope));

    let gl2_closure_chains = (n == 2).then(|| {
        (0..len).all(|a| (0..len).all(|b| (a == b || rel(a, b)) == (nodes[b].degrees[0] >= nodes[a].degrees[0])))
    });

    Ok(PosetReport {
        n,
        total_degree,
        box_bound,
        nodes,
        edges: covers.into_iter().map(|(a, b)| [a, b]).collect(),
        covers_match_steps,
        slope_monotone,
        gl2_closure_chains,
    })
}

/// `dim Hom(⊕ O(a_i), ⊕ O(b_j)) = Σ_{i,j} max(0, b_j − a_i + 1)`.
pub fn hom_dim(a: &[i64], b: &[i64]) -> u64 {
    a.iter()
        .flat_map(|x| b.iter().map(move |y| (y - x + 1).max(0) as u64))
        .sum()
}

/// `Hom(D, E/D) = 0` for `D` the top HN block of `E`.
pub fn mds_hom_vanishing(st: &SplittingType) -> bool {
    let top = st.degrees[0];
    let (d, rest): (Vec<i64>, Vec<i64>) = st.degrees.iter().partition(|&&x| x == top);
    hom_dim(&d, &rest) == 0
}

/// Distinct orderings of the summands, each read as the degree of a full flag.
/// The canonical (sorted) ordering comes first.
pub fn flag_strata_of_permutations(st: &SplittingType) -> Vec<Vec<i64>> {
    distinct_permutations(&st.degrees)
}

/// How the canonical stratum compares with every permutation flag.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagComparison {
    pub flags: usize,
    /// Canonical slope dominates every flag slope.
    pub dominates_all: bool,
    /// Equality of slopes happens exactly for the sorted ordering.
    pub equality_only_sorted: bool,
}

pub fn compare_permutation_flags(rd: &RootDatum, st: &SplittingType) -> Result<FlagComparison> {
    let (_, canon) = canonical_reduction_in(rd, st)?;
    let borel = rd.quotient(Parabolic::BOREL);
    let flags = flag_strata_of_permutations(st);
    let mut dominates_all = true;
    let mut equality_only_sorted = true;
    for f in &flags {
        let class: QuotientClass = borel.project(&Coweight(f.clone()))?;
        let c = comparison_geq(rd, &canon, Parabolic::BOREL, &class)?;
        dominates_all &= c.geq;
        equality_only_sorted &= c.equal == (f.as_slice() == st.degrees());
    }
    Ok(FlagComparison { flags: flags.len(), dominates_all, equality_only_sorted })
}

/// Whether the standard-representation filtration at the canonical slope has
/// the HN block ranks as level dimensions and the block degrees as level degrees.
pub fn filtration_matches_hn(rd: &RootDatum, st: &SplittingType) -> Result<bool> {
    let (hn, canon) = canonical_reduction_in(rd, st)?;
    let levels = filtration_levels(rd, &gl_standard(st.rank()), &canon.slope)?;
    let dims: Vec<usize> = levels.iter().map(|l| l.dim() as usize).collect();
    let degs: Vec<Rational> = levels.iter().map(|l| l.degree(&canon.slope)).collect();
    let expected: Vec<Rational> = hn.block_degrees.iter().map(|&d| frac(d, 1)).collect();
    Ok(dims == hn.block_ranks && degs == expected)
}

/// Status of the containment question between the two `GL(3)` strata.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContainmentStatus {
    pub status: String,
    pub decidable_here: bool,
    pub reason: String,
}

/// The `GL(3)`, degree 3 pair of strata: the complete flag `(2,1,0)` and the
/// two-step flag with graded degrees `(3, 0)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gl3Report {
    pub group: String,
    #[serde(rename = "lambda_G")]
    pub lambda_g: QuotientClass,
    pub complete_flag: Stratum,
    pub partial_flag: Stratum,
    /// The partial flag stratum has the larger slope.
    pub partial_more_unstable: bool,
    /// Necessary condition for the closure of the complete flag stratum to meet the other.
    pub closure_meets: bool,
    pub closure_meets_kind: String,
    /// Same-parabolic containment test, which needs equal parabolics.
    pub same_parabolic_test: String,
    pub containment: ContainmentStatus,
    /// On the projective line the corresponding splitting types do specialize.
    pub p1_specializes: bool,
    pub summary: String,
}

pub fn gl3_report() -> Result<Gl3Report> {
    let rd = RootDatum::gl(3)?;
    let complete = make_stratum_from_lift(&rd, Parabolic::BOREL, &[2, 1, 0])?;
    let partial = make_stratum_from_lift(&rd, Parabolic::from_indices([1]), &[3, 0, 0])?;
    let closure_meets = closure_meets_necessary(&rd, &complete, &partial);
    let same_parabolic_test = match closure_same_parabolic_contains(&rd, &complete, &partial) {
        Ok(b) => format!("unexpectedly applicable: {b}"),
        Err(e) => format!("not applicable ({e})"),
    };
    let p1_specializes = specializes_to(&SplittingType::new(vec![2, 1, 0])?, &SplittingType::new(vec![3, 0, 0])?)?;
    let meets = if closure_meets { "yes" } else { "no" };
    Ok(Gl3Report {
        group: rd.name(),
        lambda_g: complete.lambda_g.clone(),
        partial_more_unstable: slope_geq(&rd, &partial.slope, &complete.slope) && partial.slope != complete.slope,
        closure_meets,
        closure_meets_kind: "necessary-only".into(),
        same_parabolic_test,
        containment: ContainmentStatus {
            status: "refuted".into(),
            decidable_here: false,
            reason: "needs a stable rank-2 degree-0 bundle on a curve of genus at least 2".into(),
        },
        p1_specializes,
        summary: format!(
            "meets: {meets} (necessary condition); containment: refuted for curves of genus at least 2, not decidable here"
        ),
        complete_flag: complete,
        partial_flag: partial,
    })
}
