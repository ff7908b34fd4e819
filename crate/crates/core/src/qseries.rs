//! Truncated formal power series in one variable q.
//!
//! A series of order N stores the exact coefficients of q^0 .. q^N; nothing
//! is known beyond the truncation. Binary operations truncate to the smaller
//! order of the two operands, so precision is never overstated.
//!
//! The generating function
//!
//! ```text
//! euler_product(r, N) = prod_{n >= 1} (1 - q^n)^(-r)   (mod q^{N+1})
//! ```
//!
//! counts r-colored partitions by total size and is the free-boson
//! denominator appearing in every character in this crate.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::field::Field;

/// Errors from series arithmetic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QSeriesError {
    /// Inversion requires an invertible constant term.
    NonInvertibleConstantTerm,
}

impl fmt::Display for QSeriesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QSeriesError::NonInvertibleConstantTerm => {
                write!(f, "series has no invertible constant term")
            }
        }
    }
}

/// Power series in q truncated at a fixed order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QSeries<F> {
    coeffs: Vec<F>,
}

impl<F: Field> QSeries<F> {
    /// Series with the given coefficients c_0, c_1, ...; order is `len - 1`.
    pub fn from_coeffs(coeffs: Vec<F>) -> Self {
        assert!(!coeffs.is_empty(), "a series must carry at least q^0");
        QSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        QSeries {
            coeffs: vec![F::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(F::one(), 0, order)
    }

    /// `c * q^exp`, truncated at `order`. Exponents beyond the order are
    /// representable as the zero series.
    pub fn monomial(c: F, exp: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if exp <= order {
            s.coeffs[exp] = c;
        }
        s
    }

    /// Highest exponent with a known coefficient.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of q^n; `None` beyond the truncation order.
    pub fn coeff(&self, n: usize) -> Option<&F> {
        self.coeffs.get(n)
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(F::is_zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        let n = order.min(self.order());
        QSeries {
            coeffs: self.coeffs[..=n].to_vec(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        QSeries {
            coeffs: (0..=n)
                .map(|i| self.coeffs[i].add(&rhs.coeffs[i]))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        QSeries {
            coeffs: (0..=n)
                .map(|i| self.coeffs[i].sub(&rhs.coeffs[i]))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        QSeries {
            coeffs: self.coeffs.iter().map(F::neg).collect(),
        }
    }

    pub fn scale(&self, factor: &F) -> Self {
        QSeries {
            coeffs: self.coeffs.iter().map(|c| c.mul(factor)).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        let mut coeffs = vec![F::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(n + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j].add_assign(&a.mul(b));
                }
            }
        }
        QSeries { coeffs }
    }

    /// Multiplication by q^k at fixed truncation order (top coefficients are
    /// shifted out, the bottom fills with zeros).
    pub fn shift(&self, k: usize) -> Self {
        let n = self.order();
        let mut coeffs = vec![F::zero(); n + 1];
        for i in 0..=n.saturating_sub(k) {
            coeffs[i + k] = self.coeffs[i].clone();
        }
        QSeries { coeffs }
    }

    /// Multiplicative inverse; the constant term must be invertible.
    pub fn inv(&self) -> Result<Self, QSeriesError> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(QSeriesError::NonInvertibleConstantTerm);
        }
        let c0_inv = c0.inv().map_err(|_| QSeriesError::NonInvertibleConstantTerm)?;
        let n = self.order();
        let mut out = vec![F::zero(); n + 1];
        out[0] = c0_inv.clone();
        for k in 1..=n {
            let mut acc = F::zero();
            for j in 1..=k {
                acc.add_assign(&self.coeffs[j].mul(&out[k - j]));
            }
            out[k] = acc.neg().mul(&c0_inv);
        }
        Ok(QSeries { coeffs: out })
    }

    /// Integer power; negative exponents invert first.
    pub fn pow(&self, exp: i64) -> Result<Self, QSeriesError> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one(self.order());
        for _ in 0..exp.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// `1 - q^k`, truncated at `order`.
    pub fn one_minus_qk(k: usize, order: usize) -> Self {
        let mut s = Self::one(order);
        if k <= order && k > 0 {
            s.coeffs[k] = F::one().neg();
        }
        s
    }

    /// `prod_{n >= 1} (1 - q^n)^(-r)` truncated at `order`: the r-colored
    /// partition generating function.
    pub fn euler_product(r: usize, order: usize) -> Self {
        let mut acc = Self::one(order);
        for n in 1..=order {
            // (1 - q^n)^(-1) is the geometric series over multiples of n.
            let mut geo = Self::zero(order);
            let mut e = 0;
            while e <= order {
                geo.coeffs[e] = F::one();
                e += n;
            }
            for _ in 0..r {
                acc = acc.mul(&geo);
            }
        }
        acc
    }
}

impl<F: Field> fmt::Display for QSeries<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cs = {
                use alloc::string::ToString;
                c.to_string()
            };
            let (sign, mag) = match cs.strip_prefix('-') {
                Some(rest) => ("-", String::from(rest)),
                None => ("+", cs),
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            match n {
                0 => write!(f, "{}", mag)?,
                1 if mag == "1" => write!(f, "q")?,
                1 => write!(f, "{}*q", mag)?,
                _ if mag == "1" => write!(f, "q^{}", n)?,
                _ => write!(f, "{}*q^{}", mag, n)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
