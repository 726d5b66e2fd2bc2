//! The two binomial identities behind the Schlömilch-type formula, as exact
//! rational checks.

use crate::comb::binomial_rat;
use crate::scalar::Rat;

/// `n/(n+j)`, taken as 1 at `n = j = 0` where both sides of the first
/// identity reduce to 1.
fn ratio(n: i64, j: i64) -> Rat {
    if n + j == 0 {
        Rat::one()
    } else {
        Rat::new(n, n + j).expect("positive denominator")
    }
}

/// `(Σ_{i=j}^{n−k} C(n+i−1, i)·C(i, j),  n/(n+j)·C(2n−k, n)·C(n−k, j))`.
pub fn binomial_identity_first(n: usize, k: usize, j: usize) -> (Rat, Rat) {
    let (n, k, j) = (n as i64, k as i64, j as i64);
    let lhs = (j..=n - k).fold(Rat::zero(), |acc, i| acc + binomial_rat(n + i - 1, i) * binomial_rat(i, j));
    let rhs = ratio(n, j) * binomial_rat(2 * n - k, n) * binomial_rat(n - k, j);
    (lhs, rhs)
}

/// `(C(n−1, k−1)·C(2n−k, n)·n/(n+j)·C(n−k, j)·C(n−k+j, j)^{−1},
///   C(n+j−1, n+j−k)·C(2n−k, n−k−j))`.
pub fn binomial_identity_second(n: usize, k: usize, j: usize) -> (Rat, Rat) {
    let (n, k, j) = (n as i64, k as i64, j as i64);
    let inv = binomial_rat(n - k + j, j).recip().expect("C(n−k+j, j) ≥ 1");
    let lhs = binomial_rat(n - 1, k - 1) * binomial_rat(2 * n - k, n) * ratio(n, j) * binomial_rat(n - k, j) * inv;
    let rhs = binomial_rat(n + j - 1, n + j - k) * binomial_rat(2 * n - k, n - k - j);
    (lhs, rhs)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinomialIdentityFailure {
    pub which: u8,
    pub n: usize,
    pub k: usize,
    pub j: usize,
    pub lhs: Rat,
    pub rhs: Rat,
}

/// Checks both identities for `n ≤ max_n, k ≤ n, j ≤ n−k`; returns the
/// number of cases checked or the first failure.
pub fn check_binomial_identities(max_n: usize) -> Result<usize, Box<BinomialIdentityFailure>> {
    let mut count = 0;
    for n in 0..=max_n {
        for k in 0..=n {
            for j in 0..=n - k {
                for (which, (lhs, rhs)) in
                    [(1u8, binomial_identity_first(n, k, j)), (2, binomial_identity_second(n, k, j))]
                {
                    if lhs != rhs {
                        return Err(Box::new(BinomialIdentityFailure { which, n, k, j, lhs, rhs }));
                    }
                    count += 1;
                }
            }
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases_by_hand() {
        // n=2, k=0, j=1: C(2,1)C(1,1) + C(3,2)C(2,1) = 2 + 6 = 8;
        // 2/3·C(4,2)·C(2,1) = 2/3·6·2 = 8.
        assert_eq!(binomial_identity_first(2, 0, 1), (Rat::from(8), Rat::from(8)));
    }

    #[test]
    fn all_cases_to_twelve() {
        assert_eq!(check_binomial_identities(12), Ok(2 * (0..=12).map(|n| (n + 1) * (n + 2) / 2).sum::<usize>()));
    }
}
