//! Classical and degenerate triangles from their recurrences or closed
//! forms. None of these touch series arithmetic, so they serve as oracles
//! for the associated-Stirling machinery.

use super::{Triangle, TriangleKind};
use crate::comb::{binomial, factorial};
use crate::scalar::{Rat, Scalar};

fn by_recurrence(
    kind: TriangleKind,
    source: &str,
    max_n: usize,
    step: impl Fn(usize, usize, &Scalar, &Scalar) -> Scalar,
) -> Triangle {
    // step(n, k, T(n, k−1), T(n, k)) = T(n+1, k)
    let mut rows: Vec<Vec<Scalar>> = vec![vec![Scalar::one()]];
    for n in 0..max_n {
        let prev = &rows[n];
        let row = (0..=n + 1)
            .map(|k| {
                let left = if k == 0 { Scalar::zero() } else { prev[k - 1].clone() };
                let here = prev.get(k).cloned().unwrap_or_else(Scalar::zero);
                step(n, k, &left, &here)
            })
            .collect();
        rows.push(row);
    }
    Triangle::from_rows(kind, source, rows).expect("recurrence rows are well-formed")
}

/// Signed Stirling numbers of the first kind: `S₁(n+1,k) = S₁(n,k−1) − n·S₁(n,k)`.
pub fn s1(max_n: usize) -> Triangle {
    by_recurrence(TriangleKind::S1, "t", max_n, |n, _, left, here| left - &here.mul_rat(&Rat::from(n as i64)))
}

/// Stirling numbers of the second kind: `S₂(n+1,k) = S₂(n,k−1) + k·S₂(n,k)`.
pub fn s2(max_n: usize) -> Triangle {
    by_recurrence(TriangleKind::S2, "t", max_n, |_, k, left, here| left + &here.mul_rat(&Rat::from(k as i64)))
}

/// Degenerate second kind: `S₂,λ(n+1,k) = S₂,λ(n,k−1) + (k − nλ)·S₂,λ(n,k)`.
pub fn s2_lambda(lam: &Scalar, max_n: usize) -> Triangle {
    by_recurrence(TriangleKind::S2Lambda, "deg_falling", max_n, |n, k, left, here| {
        let w = &Scalar::int(k as i64) - &lam.mul_rat(&Rat::from(n as i64));
        left + &(here * &w)
    })
}

/// Degenerate first kind: `S₁,λ(n+1,k) = S₁,λ(n,k−1) + (kλ − n)·S₁,λ(n,k)`.
pub fn s1_lambda(lam: &Scalar, max_n: usize) -> Triangle {
    by_recurrence(TriangleKind::S1Lambda, "deg_falling", max_n, |n, k, left, here| {
        let w = &lam.mul_rat(&Rat::from(k as i64)) - &Scalar::int(n as i64);
        left + &(here * &w)
    })
}

/// `L(n, k) = n!/k!·C(n−1, k−1)`, unsigned Lah numbers.
pub fn lah_number(n: usize, k: usize) -> Rat {
    if k > n {
        return Rat::zero();
    }
    let v = factorial(n) / factorial(k) * binomial(n as i64 - 1, k as i64 - 1);
    Rat::from_int(v)
}

pub fn lah(max_n: usize) -> Triangle {
    Triangle::from_fn(TriangleKind::Lah, "lah", max_n, |n, k| Scalar::Q(lah_number(n, k)))
}

/// Degenerate Lah numbers `L_μ(n, k)`, generated by `(e_{−μ}(t) − 1)^k/k!`.
/// That generating function is the one of `S₂,−μ`, so the degenerate
/// recurrence at `−μ` produces them.
pub fn lah_lambda(mu: &Scalar, max_n: usize) -> Triangle {
    let t = s2_lambda(&-mu, max_n);
    Triangle::from_rows(TriangleKind::Other("Lah_lambda".into()), "lah_lambda", t.rows().to_vec()).expect("well-formed")
}
