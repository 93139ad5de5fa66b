//! Positive roots with their coroots, generated by reflection closure.

use std::collections::HashMap;

/// A positive root together with its coroot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Root {
    /// Coefficients in the simple-root basis.
    pub coeffs: Vec<i64>,
    /// Coordinates in the weight lattice.
    pub weight: Vec<i64>,
    /// Coefficients of the coroot in the simple-coroot basis.
    pub coroot_coeffs: Vec<i64>,
    /// Coordinates of the coroot in the coweight lattice.
    pub coroot: Vec<i64>,
}

impl Root {
    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// Whether the root lies in the span of `{α_i : i ∈ support}` (given as a bitmask).
    pub fn supported_in(&self, mask: u64) -> bool {
        self.coeffs.iter().enumerate().all(|(i, &c)| c == 0 || mask >> i & 1 == 1)
    }
}

/// Index into the full root set: `0..N` are the positive roots in height
/// order, `N..2N` their negatives.
pub type RootId = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    positive: Vec<Root>,
    by_weight: HashMap<Vec<i64>, RootId>,
}

impl RootSystem {
    pub(crate) fn generate(
        cartan: &[Vec<i64>],
        simple_roots: &[Vec<i64>],
        simple_coroots: &[Vec<i64>],
    ) -> RootSystem {
        let m = cartan.len();
        let unit = |i: usize| {
            let mut e = vec![0i64; m];
            e[i] = 1;
            e
        };
        let mut found: Vec<(Vec<i64>, Vec<i64>)> = (0..m).map(|i| (unit(i), unit(i))).collect();
        let mut seen: HashMap<Vec<i64>, ()> = found.iter().map(|r| (r.0.clone(), ())).collect();
        let mut head = 0;
        while head < found.len() {
            let (c, d) = found[head].clone();
            head += 1;
            for i in 0..m {
                if c == unit(i) {
                    continue;
                }
                // s_i(β) = β − <α̌_i, β> α_i and s_i(β̌) = β̌ − <β̌, α_i> α̌_i
                let p: i64 = (0..m).map(|j| cartan[i][j] * c[j]).sum();
                let q: i64 = (0..m).map(|j| d[j] * cartan[j][i]).sum();
                let mut c2 = c.clone();
                c2[i] -= p;
                let mut d2 = d.clone();
                d2[i] -= q;
                if !seen.contains_key(&c2) {
                    seen.insert(c2.clone(), ());
                    found.push((c2, d2));
                }
            }
        }
        found.sort_by(|a, b| {
            let ha: i64 = a.0.iter().sum();
            let hb: i64 = b.0.iter().sum();
            ha.cmp(&hb).then_with(|| b.0.cmp(&a.0))
        });
        let n = simple_roots.first().map_or(0, Vec::len);
        let combine = |basis: &[Vec<i64>], coeffs: &[i64]| -> Vec<i64> {
            let mut out = vec![0i64; n];
            for (b, &k) in basis.iter().zip(coeffs) {
                for (o, &x) in out.iter_mut().zip(b) {
                    *o += k * x;
                }
            }
            out
        };
        let positive: Vec<Root> = found
            .into_iter()
            .map(|(c, d)| Root {
                weight: combine(simple_roots, &c),
                coroot: combine(simple_coroots, &d),
                coeffs: c,
                coroot_coeffs: d,
            })
            .collect();
        let np = positive.len();
        let mut by_weight = HashMap::with_capacity(2 * np);
        for (k, r) in positive.iter().enumerate() {
            by_weight.insert(r.weight.clone(), k);
            by_weight.insert(r.weight.iter().map(|x| -x).collect(), np + k);
        }
        RootSystem { positive, by_weight }
    }

    pub fn positive(&self) -> &[Root] {
        &self.positive
    }

    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    /// Signed lookup of a root by its weight coordinates.
    pub fn find(&self, weight: &[i64]) -> Option<RootId> {
        self.by_weight.get(weight).copied()
    }

    pub fn is_positive(&self, id: RootId) -> bool {
        id < self.positive.len()
    }

    pub fn negate(&self, id: RootId) -> RootId {
        let np = self.positive.len();
        if id < np {
            id + np
        } else {
            id - np
        }
    }

    /// The positive root underlying a signed id, with its sign.
    pub fn underlying(&self, id: RootId) -> (&Root, i64) {
        let np = self.positive.len();
        if id < np {
            (&self.positive[id], 1)
        } else {
            (&self.positive[id - np], -1)
        }
    }

    /// Weight coordinates of a signed root.
    pub fn weight_of(&self, id: RootId) -> Vec<i64> {
        let (r, s) = self.underlying(id);
        r.weight.iter().map(|x| s * x).collect()
    }

    /// Simple-root coefficients of a signed root.
    pub fn coeffs_of(&self, id: RootId) -> Vec<i64> {
        let (r, s) = self.underlying(id);
        r.coeffs.iter().map(|x| s * x).collect()
    }

    /// Id of the simple root `α_i`.
    pub fn simple(&self, i: usize) -> RootId {
        debug_assert!(self.positive[i].coeffs.iter().enumerate().all(|(j, &c)| c == i64::from(i == j)));
        i
    }

    pub fn all_ids(&self) -> std::ops::Range<RootId> {
        0..2 * self.positive.len()
    }
}
