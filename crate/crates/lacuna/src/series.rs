//! Truncated formal power series over exact rationals.
//!
//! Dense coefficient vectors with arithmetic exact modulo truncation: a
//! series of order N carries the coefficients of degrees 0..=N, and products
//! of order-N series are correct through degree N. Just enough machinery for
//! the exponential-generating-function checks and the Adelberg generating
//! function.

use num_traits::{One, Zero};

use crate::exactnum::{binom_int, factorial, rat, rat_from_int, Rat};
use crate::stirling::{stirling1, stirling2, StirlingKind};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries {
    coeffs: Vec<Rat>,
}

impl TruncSeries {
    pub fn zero(order: usize) -> Self {
        TruncSeries {
            coeffs: vec![Rat::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Rat::one();
        s
    }

    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series carries at least the degree-0 coefficient"
        );
        TruncSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of degree i (zero beyond the truncation order).
    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = Self::zero(order);
        for i in 0..=order {
            out.coeffs[i] = &self.coeffs[i] + &other.coeffs[i];
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = Self::zero(order);
        for i in 0..=order {
            out.coeffs[i] = &self.coeffs[i] - &other.coeffs[i];
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Self {
        let mut out = self.clone();
        for v in &mut out.coeffs {
            *v = &*v * c;
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = Self::zero(order);
        for a in 0..=order {
            if self.coeffs[a].is_zero() {
                continue;
            }
            for b in 0..=order - a {
                if other.coeffs[b].is_zero() {
                    continue;
                }
                out.coeffs[a + b] = &out.coeffs[a + b] + &self.coeffs[a] * &other.coeffs[b];
            }
        }
        out
    }

    /// Integer power; negative exponents invert first (requires a unit
    /// constant term).
    pub fn pow(&self, exp: i64) -> Self {
        if exp < 0 {
            return self.invert().pow(-exp);
        }
        let mut acc = Self::one(self.order());
        let mut base = self.clone();
        let mut e = exp as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Multiplicative inverse of a series with nonzero constant term.
    pub fn invert(&self) -> Self {
        let c0 = &self.coeffs[0];
        assert!(
            !c0.is_zero(),
            "cannot invert a series with zero constant term"
        );
        let inv0 = Rat::one() / c0;
        let order = self.order();
        let mut out = Self::zero(order);
        out.coeffs[0] = inv0.clone();
        for n in 1..=order {
            let mut s = Rat::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    s += &self.coeffs[k] * &out.coeffs[n - k];
                }
            }
            out.coeffs[n] = -(&inv0 * s);
        }
        out
    }

    /// Formal derivative; the order drops by one.
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        let mut out = Self::zero(self.order() - 1);
        for i in 0..self.order() {
            out.coeffs[i] = &self.coeffs[i + 1] * rat(i as i64 + 1);
        }
        out
    }

    /// Exact division by the series variable; requires a zero constant term.
    pub fn shift_down(&self) -> Self {
        assert!(
            self.coeffs[0].is_zero(),
            "division by the variable needs a zero constant term"
        );
        if self.order() == 0 {
            return Self::zero(0);
        }
        TruncSeries {
            coeffs: self.coeffs[1..].to_vec(),
        }
    }

    /// (1 + z)^e for any signed integer e, as a binomial series.
    pub fn binomial_power(e: i64, order: usize) -> Self {
        let mut out = Self::zero(order);
        for k in 0..=order {
            out.coeffs[k] = rat_from_int(binom_int(e, k as i64));
        }
        out
    }
}

/// The expansion of log(1/(1-w)): sum of w^n / n for n in 1..=order.
pub fn log_recip(order: usize) -> TruncSeries {
    let mut s = TruncSeries::zero(order);
    for n in 1..=order {
        s.coeffs[n] = Rat::one() / rat(n as i64);
    }
    s
}

/// The expansion of e^x - 1: sum of x^n / n! for n in 1..=order.
pub fn exp_m1(order: usize) -> TruncSeries {
    let mut s = TruncSeries::zero(order);
    for n in 1..=order {
        s.coeffs[n] = Rat::one() / rat_from_int(factorial(n as u64));
    }
    s
}

/// Checks that n! [[t^n]] f^k / k! reproduces the Stirling column k through
/// the truncation order, where f is `log_recip` for the first kind and
/// `exp_m1` for the second kind.
pub fn egf_stirling_check(kind: StirlingKind, k: u32, order: usize) -> bool {
    let f = match kind {
        StirlingKind::Cycle => log_recip(order),
        StirlingKind::Partition => exp_m1(order),
    };
    let g = f
        .pow(k as i64)
        .scale(&(Rat::one() / rat_from_int(factorial(k as u64))));
    for n in 0..=order {
        let expect = match kind {
            StirlingKind::Cycle => stirling1(n as i64, k as i64),
            StirlingKind::Partition => stirling2(n as i64, k as i64),
        }
        .expect("nonnegative arguments");
        if rat_from_int(factorial(n as u64)) * g.coeff(n) != rat_from_int(expect) {
            return false;
        }
    }
    true
}

/// Coefficient-extraction lemma: [[w^n]] f^alpha / alpha equals
/// [[w^(n-1)]] f^(alpha-1) f' / n, evaluated exactly on truncated series.
pub fn ce_lemma_check(f: &TruncSeries, alpha: i64, n: i64) -> Result<bool> {
    if alpha < 1 {
        return Err(Error::OutOfRange {
            name: "alpha",
            value: alpha,
            expected: "alpha >= 1",
        });
    }
    if n < 1 {
        return Err(Error::OutOfRange {
            name: "n",
            value: n,
            expected: "n >= 1",
        });
    }
    if f.order() < n as usize {
        return Err(Error::OutOfRange {
            name: "order",
            value: f.order() as i64,
            expected: "series order >= n",
        });
    }
    let lhs = f.pow(alpha).coeff(n as usize) / rat(alpha);
    let rhs = f.pow(alpha - 1).mul(&f.derivative()).coeff(n as usize - 1) / rat(n);
    Ok(lhs == rhs)
}

/// The series ((1+z)^y0 - 1) / (y0 z); the division by z is exact because
/// the numerator has no constant term.
pub(crate) fn binomial_ratio_series(y0: i64, order: usize) -> TruncSeries {
    let num = TruncSeries::binomial_power(y0, order + 1).sub(&TruncSeries::one(order + 1));
    num.shift_down().scale(&(Rat::one() / rat(y0)))
}

/// Coefficient of z^u in (((1+z)^y0 - 1)/(y0 z))^m0, optionally with an
/// extra factor (1+z)^x0.
pub fn adelberg_gf_coeff(y0: i64, m0: i64, u: usize, with_x: Option<i64>) -> Result<Rat> {
    if y0 == 0 {
        return Err(Error::OutOfRange {
            name: "y0",
            value: 0,
            expected: "nonzero",
        });
    }
    let mut g = binomial_ratio_series(y0, u).pow(m0);
    if let Some(x0) = with_x {
        g = g.mul(&TruncSeries::binomial_power(x0, u));
    }
    Ok(g.coeff(u))
}
