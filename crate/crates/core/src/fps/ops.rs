use std::ops::{Add, Mul, Neg, Sub};

use super::{DeltaSeries, FpsError, Series};
use crate::scalar::{Rat, Scalar};

fn check_orders(a: &Series, b: &Series) -> Result<(), FpsError> {
    if a.order != b.order {
        return Err(FpsError::OrderMismatch(a.order, b.order));
    }
    Ok(())
}

fn cauchy(a: &[Scalar], b: &[Scalar], order: usize) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); order + 1];
    let first_a = a.iter().position(|c| !c.is_zero());
    let first_b = b.iter().position(|c| !c.is_zero());
    let (Some(va), Some(vb)) = (first_a, first_b) else {
        return out;
    };
    for (i, ai) in a.iter().enumerate().take(order + 1 - vb.min(order + 1)).skip(va) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(order + 1 - i).skip(vb) {
            if !bj.is_zero() {
                out[i + j] = &out[i + j] + &(ai * bj);
            }
        }
    }
    out
}

impl Series {
    pub fn add(&self, rhs: &Series) -> Result<Series, FpsError> {
        check_orders(self, rhs)?;
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect();
        Ok(Series::new(coeffs, self.order).with_ring(self.ring.max(rhs.ring)))
    }

    pub fn sub(&self, rhs: &Series) -> Result<Series, FpsError> {
        check_orders(self, rhs)?;
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect();
        Ok(Series::new(coeffs, self.order).with_ring(self.ring.max(rhs.ring)))
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, rhs: &Series) -> Result<Series, FpsError> {
        check_orders(self, rhs)?;
        let coeffs = cauchy(&self.coeffs, &rhs.coeffs, self.order);
        Ok(Series::new(coeffs, self.order).with_ring(self.ring.max(rhs.ring)))
    }

    pub fn neg(&self) -> Series {
        self.retag(self.coeffs.iter().map(|c| -c).collect(), self.order)
    }

    pub fn scale(&self, c: &Scalar) -> Series {
        Series::new(self.coeffs.iter().map(|a| a * c).collect(), self.order).with_ring(self.ring.max(c.ring()))
    }

    pub fn scale_rat(&self, c: &Rat) -> Series {
        self.retag(self.coeffs.iter().map(|a| a.mul_rat(c)).collect(), self.order)
    }

    /// Adds a constant to the `t^0` coefficient.
    pub fn add_constant(&self, c: &Scalar) -> Series {
        let mut coeffs = self.coeffs.clone();
        coeffs[0] = &coeffs[0] + c;
        Series::new(coeffs, self.order).with_ring(self.ring.max(c.ring()))
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn recip(&self) -> Result<Series, FpsError> {
        Series::one(self.order).with_ring(self.ring).div(self)
    }

    /// `self / rhs`, requiring a nonzero (hence invertible) constant term in
    /// `rhs`.
    pub fn div(&self, rhs: &Series) -> Result<Series, FpsError> {
        check_orders(self, rhs)?;
        let b0 = &rhs.coeffs[0];
        if b0.is_zero() {
            return Err(FpsError::NonUnitConstantTerm);
        }
        let inv = b0.recip()?;
        let ring = self.ring.max(rhs.ring);
        if rhs.valuation_above_zero().is_none() {
            // Constant divisor.
            let coeffs = self.coeffs.iter().map(|a| a * &inv).collect();
            return Ok(Series::new(coeffs, self.order).with_ring(ring));
        }
        let mut q: Vec<Scalar> = Vec::with_capacity(self.order + 1);
        for n in 0..=self.order {
            let mut acc = self.coeffs[n].clone();
            for k in 1..=n {
                let bk = &rhs.coeffs[k];
                if !bk.is_zero() && !q[n - k].is_zero() {
                    acc = &acc - &(bk * &q[n - k]);
                }
            }
            q.push(&acc * &inv);
        }
        Ok(Series::new(q, self.order).with_ring(ring))
    }

    fn valuation_above_zero(&self) -> Option<usize> {
        self.coeffs.iter().skip(1).position(|c| !c.is_zero()).map(|p| p + 1)
    }

    /// Formal derivative; the result has order `N − 1`.
    pub fn derivative(&self) -> Series {
        let order = self.order.saturating_sub(1);
        let coeffs = (1..=self.order).map(|n| self.coeffs[n].mul_rat(&Rat::from(n as i64))).collect();
        self.retag(coeffs, order)
    }

    /// Formal antiderivative with zero constant; the result has order `N + 1`.
    pub fn integral(&self) -> Series {
        let mut coeffs = Vec::with_capacity(self.order + 2);
        coeffs.push(Scalar::zero());
        for (n, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c.mul_rat(&Rat::new(1, n as i64 + 1).unwrap()));
        }
        self.retag(coeffs, self.order + 1)
    }

    /// Multiplies by `t^s`, keeping the order.
    pub fn shift_up(&self, s: usize) -> Series {
        let mut coeffs = vec![Scalar::zero(); s.min(self.order + 1)];
        coeffs.extend(self.coeffs.iter().take((self.order + 1).saturating_sub(s)).cloned());
        self.retag(coeffs, self.order)
    }

    /// Divides by `t^s`; the first `s` coefficients must vanish. The result
    /// has order `N − s`.
    pub fn shift_down(&self, s: usize) -> Result<Series, FpsError> {
        if s > self.order || self.coeffs[..s].iter().any(|c| !c.is_zero()) {
            return Err(FpsError::NonUnitConstantTerm);
        }
        Ok(self.retag(self.coeffs[s..].to_vec(), self.order - s))
    }

    /// `self ∘ inner`, by Horner's scheme over truncated products.
    pub fn compose(&self, inner: &DeltaSeries) -> Result<Series, FpsError> {
        let f = inner.series();
        check_orders(self, f)?;
        let order = self.order;
        let ring = self.ring.max(f.ring);
        let mut acc = vec![Scalar::zero(); order + 1];
        for i in (0..=order).rev() {
            // acc is multiplied by f^i later, so degrees above order − i never matter
            let mut next = cauchy(&acc, &f.coeffs, order - i);
            next[0] = &next[0] + &self.coeffs[i];
            next.resize(order + 1, Scalar::zero());
            acc = next;
        }
        Ok(Series::new(acc, order).with_ring(ring))
    }

    /// `exp(self)`; needs a zero constant term.
    pub fn exp(&self) -> Result<Series, FpsError> {
        if !self.coeffs[0].is_zero() {
            return Err(FpsError::BadConstantTerm("exp needs constant term 0"));
        }
        // n·h_n = Σ_{k=1}^{n} k·f_k·h_{n−k}
        let mut h = Vec::with_capacity(self.order + 1);
        h.push(Scalar::one());
        let kf: Vec<Scalar> = (0..=self.order).map(|k| self.coeffs[k].mul_rat(&Rat::from(k as i64))).collect();
        for n in 1..=self.order {
            let mut acc = Scalar::zero();
            for k in 1..=n {
                if !kf[k].is_zero() && !h[n - k].is_zero() {
                    acc = &acc + &(&kf[k] * &h[n - k]);
                }
            }
            h.push(acc.mul_rat(&Rat::new(1, n as i64).unwrap()));
        }
        Ok(self.retag(h, self.order))
    }

    /// `log(self)`; needs constant term 1.
    pub fn log(&self) -> Result<Series, FpsError> {
        if !self.coeffs[0].is_one() {
            return Err(FpsError::BadConstantTerm("log needs constant term 1"));
        }
        // n·L_n = n·g_n − Σ_{k=1}^{n−1} k·L_k·g_{n−k}
        let mut l: Vec<Scalar> = Vec::with_capacity(self.order + 1);
        l.push(Scalar::zero());
        for n in 1..=self.order {
            let mut acc = self.coeffs[n].mul_rat(&Rat::from(n as i64));
            for (k, lk) in l.iter().enumerate().take(n).skip(1) {
                let g = &self.coeffs[n - k];
                if !lk.is_zero() && !g.is_zero() {
                    acc = &acc - &(&lk.mul_rat(&Rat::from(k as i64)) * g);
                }
            }
            l.push(acc.mul_rat(&Rat::new(1, n as i64).unwrap()));
        }
        Ok(self.retag(l, self.order))
    }

    /// Integer power; negative exponents need a nonzero constant term.
    pub fn pow_int(&self, k: i64) -> Result<Series, FpsError> {
        if k < 0 {
            return self.recip()?.pow_int(-k);
        }
        let mut result = Series::one(self.order).with_ring(self.ring);
        let mut base = self.clone();
        let mut e = k as u64;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(result)
    }

    /// `self^r` for a rational exponent; the constant term must be exactly 1.
    pub fn pow_ratio(&self, r: &Rat) -> Result<Series, FpsError> {
        if !self.coeffs[0].is_one() {
            return Err(FpsError::NonUnitConstantTerm);
        }
        // From f·h′ = r·f′·h with f_0 = 1:
        // n·h_n = Σ_{k=1}^{n} ((r+1)k − n)·f_k·h_{n−k}
        let r1 = r + &Rat::one();
        let mut h: Vec<Scalar> = Vec::with_capacity(self.order + 1);
        h.push(Scalar::one());
        for n in 1..=self.order {
            let mut acc = Scalar::zero();
            for k in 1..=n {
                let fk = &self.coeffs[k];
                if fk.is_zero() || h[n - k].is_zero() {
                    continue;
                }
                let w = &(&r1 * &Rat::from(k as i64)) - &Rat::from(n as i64);
                acc = &acc + &(fk * &h[n - k]).mul_rat(&w);
            }
            h.push(acc.mul_rat(&Rat::new(1, n as i64).unwrap()));
        }
        Ok(self.retag(h, self.order))
    }

    /// `self^r` where the constant term `c` may be any rational with an exact
    /// rational `r`-th power: `c^r · (self/c)^r`.
    pub fn pow_ratio_factored(&self, r: &Rat) -> Result<Series, FpsError> {
        if let Some(k) = r.to_i64() {
            return self.pow_int(k);
        }
        let c0 = &self.coeffs[0];
        if c0.is_one() {
            return self.pow_ratio(r);
        }
        let c = c0.as_rat().filter(|c| !c.is_zero()).ok_or(FpsError::NoExactRoot)?;
        let q: u32 = r.denom().try_into().map_err(|_| FpsError::NoExactRoot)?;
        let p: i64 = r.numer().try_into().map_err(|_| FpsError::NoExactRoot)?;
        let root = c.exact_root(q).ok_or(FpsError::NoExactRoot)?;
        let factor = root.pow(p)?;
        let unit = self.scale_rat(&c.recip()?);
        Ok(unit.pow_ratio(r)?.scale_rat(&factor))
    }
}

impl DeltaSeries {
    /// Compositional inverse by Newton iteration, doubling the number of
    /// correct coefficients per step.
    pub fn invert_newton(&self) -> DeltaSeries {
        let f = self.series();
        let order = f.order;
        let f1_inv = f.coeffs[1].recip().expect("delta series has a unit linear term");
        let df = f.derivative().extend_zero(order);
        // g is correct modulo t^{known+1}
        let mut g = Series::linear(f1_inv, order).with_ring(f.ring);
        let mut known = 1;
        while known < order {
            let work = (2 * known).min(order);
            let gw = DeltaSeries::new(g.truncate(work)).expect("inverse stays delta");
            let fg = f.truncate(work).compose(&gw).expect("orders match");
            let dfg = df.truncate(work).compose(&gw).expect("orders match");
            let resid = fg.sub(&Series::t(work)).expect("orders match");
            let step = resid.div(&dfg).expect("f'(0) is a unit");
            g = gw.series().sub(&step).expect("orders match").extend_zero(order);
            known = work;
        }
        DeltaSeries::new(g.with_ring(f.ring)).expect("inverse of a delta series is delta")
    }

    /// `self ∘ inner`.
    pub fn compose_delta(&self, inner: &DeltaSeries) -> Result<DeltaSeries, FpsError> {
        DeltaSeries::new(self.series().compose(inner)?)
    }
}

// Operator sugar for equal-order series; mismatched orders panic.

impl Add<&Series> for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        Series::add(self, rhs).expect("series orders must match")
    }
}

impl Sub<&Series> for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        Series::sub(self, rhs).expect("series orders must match")
    }
}

impl Mul<&Series> for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        Series::mul(self, rhs).expect("series orders must match")
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series::neg(self)
    }
}
