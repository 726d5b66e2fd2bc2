use std::sync::OnceLock;

use super::{power_triangle, Basis, Result, StirlingError, Triangle, TriangleKind, XPoly};
use crate::fps::{DeltaSeries, Series};
use crate::scalar::Scalar;

/// Everything derived from one delta series `f` up to index `max_n`:
/// `f̄`, `e^{f̄} − 1`, both Stirling triangles and the associated logarithm.
/// The triangles are computed on first use and cached.
#[derive(Debug)]
pub struct Associated {
    max_n: usize,
    label: String,
    f: DeltaSeries,
    fbar: DeltaSeries,
    e: DeltaSeries,
    s2: OnceLock<Triangle>,
    s1: OnceLock<Triangle>,
    log: OnceLock<Series>,
}

impl Associated {
    /// Needs `f` known to order `max_n`.
    pub fn new(f: &DeltaSeries, max_n: usize) -> Result<Self> {
        if f.order() < max_n {
            return Err(StirlingError::InsufficientOrder { needed: max_n, available: f.order() });
        }
        let f = f.truncate(max_n.max(1));
        let fbar = f.invert_newton();
        let e = fbar.series().exp()?.add_constant(&Scalar::int(-1));
        let e = DeltaSeries::new(e)?;
        Ok(Associated {
            max_n,
            label: f.series().to_json(false),
            f,
            fbar,
            e,
            s2: OnceLock::new(),
            s1: OnceLock::new(),
            log: OnceLock::new(),
        })
    }

    /// Replaces the label written into triangle outputs (by default the
    /// series in JSON form).
    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    pub fn f(&self) -> &DeltaSeries {
        &self.f
    }

    /// The compositional inverse `f̄`.
    pub fn fbar(&self) -> &DeltaSeries {
        &self.fbar
    }

    /// `e^{f̄(t)} − 1`.
    pub fn exp_fbar_minus_one(&self) -> &DeltaSeries {
        &self.e
    }

    /// `p₁ = f̄′(0)`.
    pub fn p1(&self) -> &Scalar {
        self.fbar.linear_coeff()
    }

    /// `p_n = n!·[t^n] e^{f̄(t)}` for `n ≤ max_n`.
    pub fn moment(&self, n: usize) -> Scalar {
        if n == 0 {
            Scalar::one()
        } else {
            self.e.series().egf().coeff(n)
        }
    }

    /// `S₂(n, k; f)`: EGF coefficients of `(e^{f̄} − 1)^k/k!`.
    pub fn s2(&self) -> &Triangle {
        self.s2.get_or_init(|| {
            let rows = power_triangle(self.e.series(), self.max_n).expect("order checked at construction");
            Triangle::from_rows(TriangleKind::S2Assoc, self.label.clone(), rows).expect("well-formed")
        })
    }

    /// `S₁(n, k; f)`: EGF coefficients of `ē^k/k!` with `ē` the inverse of
    /// `e^{f̄} − 1`.
    pub fn s1(&self) -> &Triangle {
        self.s1.get_or_init(|| {
            let ebar = self.e.invert_newton();
            let rows = power_triangle(ebar.series(), self.max_n).expect("order checked at construction");
            Triangle::from_rows(TriangleKind::S1Assoc, self.label.clone(), rows).expect("well-formed")
        })
    }

    /// Both triangles, built concurrently when neither is cached yet.
    pub fn triangles(&self) -> (&Triangle, &Triangle) {
        rayon::join(|| self.s2(), || self.s1())
    }

    pub fn s2_at(&self, n: usize, k: usize) -> Result<Scalar> {
        self.check(n)?;
        Ok(self.s2().get(n, k))
    }

    pub fn s1_at(&self, n: usize, k: usize) -> Result<Scalar> {
        self.check(n)?;
        Ok(self.s1().get(n, k))
    }

    pub(crate) fn check(&self, needed: usize) -> Result<()> {
        if needed > self.max_n {
            return Err(StirlingError::InsufficientOrder { needed, available: self.max_n });
        }
        Ok(())
    }

    /// The associated logarithm `f(log(1 + t))`.
    pub fn log(&self) -> &Series {
        self.log.get_or_init(|| {
            let log1p = DeltaSeries::new(Series::log1p(self.f.order())).expect("delta");
            self.f.series().compose(&log1p).expect("equal orders")
        })
    }

    /// The same logarithm computed as the compositional inverse of
    /// `e^{f̄} − 1`.
    pub fn log_via_inverse(&self) -> Series {
        self.e.invert_newton().into_series()
    }

    /// `p_n(x) = n!·[t^n] e^{x f̄(t)}` for `n ≤ max_n`, in the monomial basis.
    pub fn poly_seq(&self) -> Vec<XPoly> {
        let rows = power_triangle(self.fbar.series(), self.max_n).expect("order checked at construction");
        rows.into_iter().map(|r| XPoly::new(r, Basis::Monomial)).collect()
    }

    /// `Bel_{n,f}(x) = Σ_k S₂(n, k; f) x^k`.
    pub fn bell_polys(&self) -> Vec<XPoly> {
        self.s2().rows().iter().map(|r| XPoly::new(r.clone(), Basis::Monomial)).collect()
    }
}

/// `S₂(n, k; f)` for `0 ≤ k ≤ n ≤ max_n`.
pub fn s2_assoc(f: &DeltaSeries, max_n: usize) -> Result<Triangle> {
    Ok(Associated::new(f, max_n)?.s2().clone())
}

/// `S₁(n, k; f)` for `0 ≤ k ≤ n ≤ max_n`.
pub fn s1_assoc(f: &DeltaSeries, max_n: usize) -> Result<Triangle> {
    Ok(Associated::new(f, max_n)?.s1().clone())
}
