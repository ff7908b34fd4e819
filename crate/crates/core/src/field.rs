//! Exact coefficient fields.
//!
//! Three layers:
//! - [`Rational`]: arbitrary-precision rationals, always reduced, denominator
//!   always positive.
//! - [`Poly`] and [`RatFunc`]: dense univariate polynomials over `Rational`
//!   and their fraction field. A `RatFunc` is kept reduced with a monic
//!   denominator, so equality is structural. The indeterminate is the formal
//!   level parameter (called `kappa` or `gamma` depending on context); it has
//!   no identity of its own and is printed as `t` unless a caller supplies a
//!   name via [`Poly::to_string_in`] / [`RatFunc::to_string_in`].
//! - [`Field`]: the trait the series and linear-algebra code is generic
//!   over, implemented by both scalar types.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use alloc::{format, vec};
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Errors raised by exact field arithmetic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ArithmeticError {
    /// Division by the zero element (including evaluation at a pole).
    DivisionByZero,
}

impl fmt::Display for ArithmeticError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArithmeticError::DivisionByZero => write!(f, "division by zero"),
        }
    }
}

/// Error from parsing a rational out of a string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseRationalError;

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "expected an integer or `p/q` with nonzero q")
    }
}

/// An exact rational number. Kept reduced with a positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// `num/den`, reduced. Errors when `den == 0`.
    pub fn new(num: i64, den: i64) -> Result<Self, ArithmeticError> {
        if den == 0 {
            return Err(ArithmeticError::DivisionByZero);
        }
        Ok(Rational(BigRational::new(BigInt::from(num), BigInt::from(den))))
    }

    pub fn from_int(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_big(num: BigInt, den: BigInt) -> Result<Self, ArithmeticError> {
        if den.is_zero() {
            return Err(ArithmeticError::DivisionByZero);
        }
        Ok(Rational(BigRational::new(num, den)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// The value as an `i64` when it is an integer in range.
    pub fn to_i64(&self) -> Option<i64> {
        if !self.is_integer() {
            return None;
        }
        let n = self.0.numer();
        i64::try_from(n.clone()).ok()
    }

    pub fn inv(&self) -> Result<Self, ArithmeticError> {
        if self.is_zero() {
            return Err(ArithmeticError::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut out = Rational::from_int(1);
        for _ in 0..exp {
            out = &out * self;
        }
        out
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // `p/q`, or just `p` for integers.
        self.0.fmt(f)
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl core::str::FromStr for Rational {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (ns, ds) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let num: BigInt = ns.parse().map_err(|_| ParseRationalError)?;
        let den: BigInt = ds.parse().map_err(|_| ParseRationalError)?;
        if den.is_zero() {
            return Err(ParseRationalError);
        }
        Ok(Rational(BigRational::new(num, den)))
    }
}

macro_rules! rational_binop {
    ($trait:ident, $method:ident) => {
        impl core::ops::$trait for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl core::ops::$trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                core::ops::$trait::$method(&self, &rhs)
            }
        }
        impl core::ops::$trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                core::ops::$trait::$method(&self, rhs)
            }
        }
        impl core::ops::$trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                core::ops::$trait::$method(self, &rhs)
            }
        }
    };
}

rational_binop!(Add, add);
rational_binop!(Sub, sub);
rational_binop!(Mul, mul);

impl core::ops::Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl core::ops::Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

/// An exact field of coefficients.
///
/// Methods take references so that generic inner loops avoid clones of
/// heap-backed scalars.
pub trait Field: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self, ArithmeticError>;

    fn div(&self, rhs: &Self) -> Result<Self, ArithmeticError> {
        Ok(self.mul(&rhs.inv()?))
    }

    fn from_rational(r: &Rational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&Rational::from_int(n))
    }

    fn add_assign(&mut self, rhs: &Self) {
        *self = self.add(rhs);
    }
}

impl Field for Rational {
    fn zero() -> Self {
        Rational::from_int(0)
    }

    fn one() -> Self {
        Rational::from_int(1)
    }

    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn neg(&self) -> Self {
        -self
    }

    fn inv(&self) -> Result<Self, ArithmeticError> {
        Rational::inv(self)
    }

    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
}

/// Dense univariate polynomial over [`Rational`]. No trailing zeros are
/// stored, so the zero polynomial has an empty coefficient vector.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().map_or(false, Rational::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::from_int(1))
    }

    pub fn constant(c: Rational) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// `c * t^deg`.
    pub fn monomial(c: Rational, deg: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::from_int(0); deg + 1];
        coeffs[deg] = c;
        Poly { coeffs }
    }

    /// The indeterminate `t`.
    pub fn var() -> Self {
        Poly::monomial(Rational::from_int(1), 1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, deg: usize) -> Rational {
        self.coeffs.get(deg).cloned().unwrap_or_else(|| Rational::from_int(0))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn add(&self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(&self.coeff(i) + &rhs.coeff(i));
        }
        Poly::from_coeffs(out)
    }

    pub fn sub(&self, rhs: &Poly) -> Poly {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::from_int(0); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Poly::from_coeffs(out)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Euclidean division: `self = q * div + r` with `deg r < deg div`.
    pub fn divrem(&self, div: &Poly) -> Result<(Poly, Poly), ArithmeticError> {
        let dd = match div.degree() {
            Some(d) => d,
            None => return Err(ArithmeticError::DivisionByZero),
        };
        let lead_inv = div.leading().unwrap().inv()?;
        let mut rem = self.clone();
        let mut quot = vec![Rational::from_int(0); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let factor = rem.leading().unwrap() * &lead_inv;
            let shift = rd - dd;
            quot[shift] = factor.clone();
            let sub = div.mul(&Poly::monomial(factor, shift));
            rem = rem.sub(&sub);
        }
        Ok((Poly::from_coeffs(quot), rem))
    }

    /// Monic greatest common divisor (zero when both inputs are zero).
    pub fn gcd_monic(a: &Poly, b: &Poly) -> Poly {
        let mut a = a.clone();
        let mut b = b.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b).expect("nonzero divisor");
            a = b;
            b = r.make_monic();
        }
        a.make_monic()
    }

    /// Scaled so the leading coefficient is 1 (zero stays zero).
    pub fn make_monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => self.scale(&l.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::from_int(0);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Rendered with `var` as the indeterminate, highest degree first.
    pub fn to_string_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let mag = if negative { -c } else { c.clone() };
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else if negative {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let coeff_part = if mag.is_one() && deg > 0 {
                String::new()
            } else {
                format!("{}", mag)
            };
            let var_part = match deg {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{}^{}", var, deg),
            };
            match (coeff_part.is_empty(), var_part.is_empty()) {
                (true, _) => out.push_str(&var_part),
                (false, true) => out.push_str(&coeff_part),
                (false, false) => {
                    out.push_str(&coeff_part);
                    out.push('*');
                    out.push_str(&var_part);
                }
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_in("t"))
    }
}

/// Reduced fraction of two [`Poly`]s with a monic denominator.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self, ArithmeticError> {
        if den.is_zero() {
            return Err(ArithmeticError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFunc {
                num: Poly::zero(),
                den: Poly::one(),
            });
        }
        let g = Poly::gcd_monic(&num, &den);
        let (num, r1) = num.divrem(&g).expect("gcd divides");
        debug_assert!(r1.is_zero());
        let (den, r2) = den.divrem(&g).expect("gcd divides");
        debug_assert!(r2.is_zero());
        let lead_inv = den.leading().expect("nonzero").inv()?;
        Ok(RatFunc {
            num: num.scale(&lead_inv),
            den: den.scale(&lead_inv),
        })
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn from_rat(r: &Rational) -> Self {
        RatFunc::from_poly(Poly::constant(r.clone()))
    }

    /// The indeterminate itself.
    pub fn var() -> Self {
        RatFunc::from_poly(Poly::var())
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }

    /// Evaluation at a rational point; errors on a pole.
    pub fn eval(&self, x: &Rational) -> Result<Rational, ArithmeticError> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(ArithmeticError::DivisionByZero);
        }
        Ok(&self.num.eval(x) * &d.inv()?)
    }

    pub fn to_string_in(&self, var: &str) -> String {
        if self.is_polynomial() {
            self.num.to_string_in(var)
        } else {
            format!("({})/({})", self.num.to_string_in(var), self.den.to_string_in(var))
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_in("t"))
    }
}

impl Field for RatFunc {
    fn zero() -> Self {
        RatFunc::from_poly(Poly::zero())
    }

    fn one() -> Self {
        RatFunc::from_poly(Poly::one())
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn add(&self, rhs: &Self) -> Self {
        let num = self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den));
        let den = self.den.mul(&rhs.den);
        RatFunc::new(num, den).expect("denominators nonzero")
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    fn mul(&self, rhs: &Self) -> Self {
        RatFunc::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den)).expect("denominators nonzero")
    }

    fn neg(&self) -> Self {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    fn inv(&self) -> Result<Self, ArithmeticError> {
        if self.is_zero() {
            return Err(ArithmeticError::DivisionByZero);
        }
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    fn from_rational(r: &Rational) -> Self {
        RatFunc::from_rat(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn rationals_reduce_and_display() {
        assert_eq!(rat(2, 4), rat(1, 2));
        assert_eq!(rat(1, -2), rat(-1, 2));
        assert_eq!(format!("{}", rat(-1, 2)), "-1/2");
        assert_eq!(format!("{}", rat(6, 3)), "2");
        assert_eq!(&rat(1, 2) + &rat(1, 3), rat(5, 6));
        assert_eq!(&rat(1, 3) * &Rational::from_int(3), Rational::from_int(1));
    }

    #[test]
    fn zero_denominator_and_inverse_errors() {
        assert_eq!(Rational::new(1, 0), Err(ArithmeticError::DivisionByZero));
        assert_eq!(Rational::from_int(0).inv(), Err(ArithmeticError::DivisionByZero));
        assert_eq!("1/0".parse::<Rational>(), Err(ParseRationalError));
    }

    #[test]
    fn rational_parsing() {
        assert_eq!("3/4".parse::<Rational>().unwrap(), rat(3, 4));
        assert_eq!("-2".parse::<Rational>().unwrap(), Rational::from_int(-2));
        assert_eq!(" 7 / -14 ".parse::<Rational>().unwrap(), rat(-1, 2));
        assert!("x".parse::<Rational>().is_err());
    }

    #[test]
    fn ratfunc_reduces_to_monic_denominator() {
        // (t^2 - 1)/(t - 1) == t + 1
        let num = Poly::from_coeffs(alloc::vec![Rational::from_int(-1), Rational::from_int(0), Rational::from_int(1)]);
        let den = Poly::from_coeffs(alloc::vec![Rational::from_int(-1), Rational::from_int(1)]);
        let f = RatFunc::new(num, den).unwrap();
        assert!(f.is_polynomial());
        assert_eq!(f.num().coeffs(), &[Rational::from_int(1), Rational::from_int(1)]);

        // denominators normalize monic: 1/(2t) = (1/2)/t
        let g = RatFunc::new(Poly::one(), Poly::monomial(Rational::from_int(2), 1)).unwrap();
        assert_eq!(g.num().coeffs(), &[rat(1, 2)]);
        assert_eq!(g.den(), &Poly::var());
    }

    #[test]
    fn ratfunc_eval_and_poles() {
        let inv_t = RatFunc::var().inv().unwrap();
        assert_eq!(inv_t.eval(&Rational::from_int(-2)).unwrap(), rat(-1, 2));
        assert_eq!(inv_t.eval(&Rational::from_int(0)), Err(ArithmeticError::DivisionByZero));
    }

    #[test]
    fn poly_display() {
        let p = Poly::from_coeffs(alloc::vec![rat(5, 2), Rational::from_int(-1), Rational::from_int(2)]);
        assert_eq!(p.to_string_in("g"), "2*g^2 - g + 5/2");
        assert_eq!(Poly::zero().to_string_in("g"), "0");
    }
}
