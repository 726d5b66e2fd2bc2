use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use super::Triangle;
use crate::scalar::Scalar;

/// Which identity a check refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    /// `Σ_k S₂(n,k) S₁(k,l) = δ_{n,l}`
    S2S1,
    /// `Σ_k S₁(n,k) S₂(k,l) = δ_{n,l}`
    S1S2,
    /// `a_n = Σ_k S₂(n,k) b_k ⇒ b_n = Σ_k S₁(n,k) a_k`
    InverseB,
    /// `a_n = Σ_{k≥n} S₂(k,n) b_k ⇒ b_n = Σ_{k≥n} S₁(k,n) a_k`
    InverseC,
}

/// First index pair where an identity failed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrthoFailure {
    pub relation: Relation,
    pub n: usize,
    pub l: usize,
    pub got: Scalar,
    pub expected: Scalar,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrthogonalityReport {
    pub max_n: usize,
    /// Number of scalar equalities compared.
    pub checked: usize,
    pub failure: Option<OrthoFailure>,
}

impl OrthogonalityReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

fn common_max(s2: &Triangle, s1: &Triangle) -> usize {
    s2.max_n().min(s1.max_n())
}

fn product_check(
    a: &Triangle,
    b: &Triangle,
    max_n: usize,
    relation: Relation,
    checked: &mut usize,
) -> Option<OrthoFailure> {
    for n in 0..=max_n {
        for l in 0..=n {
            let got: Scalar = (l..=n).map(|k| &a.get(n, k) * &b.get(k, l)).sum();
            let expected = if n == l { Scalar::one() } else { Scalar::zero() };
            *checked += 1;
            if got != expected {
                return Some(OrthoFailure { relation, n, l, got, expected });
            }
        }
    }
    None
}

/// Both matrix products `S₂·S₁` and `S₁·S₂` equal the identity up to the
/// common size of the two triangles. Entries above the diagonal vanish by
/// construction, so only `l ≤ n` is compared.
pub fn orthogonality_check(s2: &Triangle, s1: &Triangle) -> OrthogonalityReport {
    let max_n = common_max(s2, s1);
    let mut checked = 0;
    let failure = product_check(s2, s1, max_n, Relation::S2S1, &mut checked)
        .or_else(|| product_check(s1, s2, max_n, Relation::S1S2, &mut checked));
    OrthogonalityReport { max_n, checked, failure }
}

fn random_vec(rng: &mut StdRng, len: usize) -> Vec<Scalar> {
    (0..len).map(|_| Scalar::rat(rng.gen_range(-20..=20), rng.gen_range(1..=6))).collect()
}

fn compare(relation: Relation, got: &[Scalar], want: &[Scalar], checked: &mut usize) -> Option<OrthoFailure> {
    for (n, (g, w)) in got.iter().zip(want).enumerate() {
        *checked += 1;
        if g != w {
            return Some(OrthoFailure { relation, n, l: n, got: g.clone(), expected: w.clone() });
        }
    }
    None
}

/// Both inversion formulas on `trials` random rational sequences drawn from
/// a seeded generator. The second formula is truncated at the triangle size.
pub fn inverse_relations_check(s2: &Triangle, s1: &Triangle, seed: u64, trials: usize) -> OrthogonalityReport {
    let max_n = common_max(s2, s1);
    let len = max_n + 1;
    let mut rng = StdRng::seed_from_u64(seed);
    let mut checked = 0;
    for _ in 0..trials {
        let b = random_vec(&mut rng, len);

        let a: Vec<Scalar> = (0..len).map(|n| (0..=n).map(|k| &s2.get(n, k) * &b[k]).sum()).collect();
        let back: Vec<Scalar> = (0..len).map(|n| (0..=n).map(|k| &s1.get(n, k) * &a[k]).sum()).collect();
        if let Some(f) = compare(Relation::InverseB, &back, &b, &mut checked) {
            return OrthogonalityReport { max_n, checked, failure: Some(f) };
        }

        let a: Vec<Scalar> = (0..len).map(|n| (n..len).map(|k| &s2.get(k, n) * &b[k]).sum()).collect();
        let back: Vec<Scalar> = (0..len).map(|n| (n..len).map(|k| &s1.get(k, n) * &a[k]).sum()).collect();
        if let Some(f) = compare(Relation::InverseC, &back, &b, &mut checked) {
            return OrthogonalityReport { max_n, checked, failure: Some(f) };
        }
    }
    OrthogonalityReport { max_n, checked, failure: None }
}
