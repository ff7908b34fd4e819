//! Twisted character formulas for the two-parameter module family.
//!
//! For a dominant integral weight lambda and dominant integral coweight mu^v,
//! the normalized character is the Weyl-alternating sum
//!
//! ```text
//! char = sum_{w in W} (-1)^l(w) q^e(w) * prod_{n>0} (1-q^n)^(-r),
//! e(w) = <lambda+rho - w(lambda+rho), mu^v + rho^v>,
//! ```
//!
//! whose w = e term sits at q^0. The same series arises from a resolution
//! whose terms are Fock modules attached to the dot orbit w . lambda: there
//! the exponent of the w term is the conformal-weight gap
//! Delta(w . lambda) - Delta(lambda), and the overall power of q is
//!
//! ```text
//! tilde(Delta) = (lambda|lambda+2 rho)/(2 kappa)
//!              + kappa (mu^v|mu^v+2 rho^v)/2 + <rho, rho^v>,
//! ```
//!
//! a genuine function of the level kappa. Both routes are implemented and
//! must agree; the prefactors are kept out of the series as exact
//! a/kappa + b kappa + c records.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::field::Rational;
use crate::qseries::QSeries;
use crate::rootsys::RootSystem;

/// Errors from character evaluation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CharacterError {
    /// A weight or coweight coordinate is negative.
    NonDominant,
}

impl fmt::Display for CharacterError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CharacterError::NonDominant => write!(f, "weight/coweight must be dominant"),
        }
    }
}

/// An exponent of q of the form a/kappa + b*kappa + c, kept exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentExpr {
    pub coef_inv_kappa: Rational,
    pub coef_kappa: Rational,
    pub coef_const: Rational,
}

impl ExponentExpr {
    pub fn new(coef_inv_kappa: Rational, coef_kappa: Rational, coef_const: Rational) -> Self {
        ExponentExpr {
            coef_inv_kappa,
            coef_kappa,
            coef_const,
        }
    }

    pub fn constant(c: Rational) -> Self {
        ExponentExpr::new(Rational::from_int(0), Rational::from_int(0), c)
    }

    pub fn is_constant(&self) -> bool {
        self.coef_inv_kappa.is_zero() && self.coef_kappa.is_zero()
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        ExponentExpr::new(
            &self.coef_inv_kappa - &rhs.coef_inv_kappa,
            &self.coef_kappa - &rhs.coef_kappa,
            &self.coef_const - &rhs.coef_const,
        )
    }

    /// Value at a nonzero rational kappa.
    pub fn eval(&self, kappa: &Rational) -> Result<Rational, crate::field::ArithmeticError> {
        let inv = kappa.inv()?;
        Ok(&self.coef_inv_kappa * inv + &self.coef_kappa * kappa + self.coef_const.clone())
    }

    pub fn to_string_in(&self, var: &str) -> String {
        let mut out = String::new();
        let terms = [
            (&self.coef_inv_kappa, alloc::format!("/{}", var)),
            (&self.coef_kappa, alloc::format!("*{}", var)),
            (&self.coef_const, String::new()),
        ];
        for (coef, suffix) in terms {
            if coef.is_zero() {
                continue;
            }
            let negative = coef.is_negative();
            let mag = if negative { -coef } else { coef.clone() };
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else if negative {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            if suffix.is_empty() {
                out.push_str(&alloc::format!("{}", mag));
            } else {
                out.push_str(&alloc::format!("({}){}", mag, suffix));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for ExponentExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_in("kappa"))
    }
}

/// Overall power of q in front of a character series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Prefactor {
    /// Normalized convention: the series itself starts at q^0.
    Integer(i64),
    /// Level-dependent exponent.
    Expr(ExponentExpr),
}

/// A character computation result: the series together with its input echo
/// and the prefactor convention it was produced under.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharTable {
    pub algebra: String,
    pub lambda: Vec<i64>,
    pub mu_check: Vec<i64>,
    pub order: usize,
    pub series: QSeries<Rational>,
    pub prefactor: Prefactor,
}

/// Outcome of the prefactor shift identity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftCheck {
    pub holds: bool,
    /// The exponent gap tilde(Delta) - Delta, a plain rational when the
    /// identity holds.
    pub difference: Rational,
}

fn check_dominant(coords: &[i64]) -> Result<(), CharacterError> {
    if coords.iter().any(|&x| x < 0) {
        return Err(CharacterError::NonDominant);
    }
    Ok(())
}

fn to_rat(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| Rational::from_int(x)).collect()
}

/// Coefficients of mu^v + rho^v on the fundamental coweights.
fn shifted_coweight(mcheck: &[i64]) -> Vec<Rational> {
    mcheck.iter().map(|&m| Rational::from_int(m + 1)).collect()
}

/// e(w) = <lambda+rho - w(lambda+rho), mu^v+rho^v>, a non-negative integer,
/// zero exactly for w = e.
fn orbit_exponent(
    rs: &RootSystem,
    lam_rho: &[Rational],
    w_lam_rho: &[Rational],
    mrho: &[Rational],
) -> i64 {
    let diff: Vec<Rational> = lam_rho
        .iter()
        .zip(w_lam_rho)
        .map(|(a, b)| a - b)
        .collect();
    rs.pair_coweight(&diff, mrho)
        .to_i64()
        .expect("orbit differences pair integrally with integral coweights")
}

/// Graded character of the irreducible module V_lambda, graded by
/// deg f_alpha = <alpha, mu^v + rho^v>: the Weyl-formula quotient
///
/// ```text
/// sum_w (-1)^l(w) q^e(w) / prod_{alpha > 0} (1 - q^<alpha, mu^v+rho^v>).
/// ```
///
/// The result is a polynomial; it is returned with its exact degree as the
/// truncation order.
pub fn graded_weyl_character(
    rs: &RootSystem,
    lambda: &[i64],
    mcheck: &[i64],
) -> Result<QSeries<Rational>, CharacterError> {
    check_dominant(lambda)?;
    check_dominant(mcheck)?;
    let lam_rho: Vec<Rational> = lambda.iter().map(|&x| Rational::from_int(x + 1)).collect();
    let mrho = shifted_coweight(mcheck);
    let exponents: Vec<(i64, i64)> = rs
        .weyl()
        .iter()
        .map(|w| {
            let img = rs.apply(w, &lam_rho);
            (orbit_exponent(rs, &lam_rho, &img, &mrho), w.sign())
        })
        .collect();
    let order = exponents.iter().map(|&(e, _)| e).max().unwrap_or(0) as usize;
    let mut numerator = QSeries::zero(order);
    for (e, sign) in exponents {
        numerator = numerator.add(&QSeries::monomial(
            Rational::from_int(sign),
            e as usize,
            order,
        ));
    }
    let mut result = numerator;
    for alpha in rs.positive_roots() {
        let aw = to_rat(&rs.weight_coords_of_root(alpha));
        let deg = rs
            .pair_coweight(&aw, &mrho)
            .to_i64()
            .expect("root heights against integral coweights are integers") as usize;
        let factor: QSeries<Rational> = QSeries::one_minus_qk(deg, order);
        result = result.mul(&factor.inv().expect("constant term 1"));
    }
    let top = (0..=result.order())
        .rev()
        .find(|&n| !result.coeff(n).expect("within order").is_zero())
        .unwrap_or(0);
    Ok(result.truncate(top))
}

/// Normalized twisted character: Weyl-alternating numerator (w = e term at
/// q^0) times the r-color partition generating function.
pub fn char_t(
    rs: &RootSystem,
    lambda: &[i64],
    mcheck: &[i64],
    order: usize,
) -> Result<CharTable, CharacterError> {
    check_dominant(lambda)?;
    check_dominant(mcheck)?;
    let lam_rho: Vec<Rational> = lambda.iter().map(|&x| Rational::from_int(x + 1)).collect();
    let mrho = shifted_coweight(mcheck);
    let mut numerator = QSeries::zero(order);
    for w in rs.weyl() {
        let img = rs.apply(w, &lam_rho);
        let e = orbit_exponent(rs, &lam_rho, &img, &mrho);
        debug_assert!(e >= 0 && (e == 0) == w.word.is_empty());
        if e as usize <= order {
            numerator = numerator.add(&QSeries::monomial(
                Rational::from_int(w.sign()),
                e as usize,
                order,
            ));
        }
    }
    let series = numerator.mul(&QSeries::euler_product(rs.rank(), order));
    Ok(CharTable {
        algebra: rs.label().to_string(),
        lambda: lambda.to_vec(),
        mu_check: mcheck.to_vec(),
        order,
        series,
        prefactor: Prefactor::Integer(0),
    })
}

/// Conformal weight of the Fock module attached to the weight nu under the
/// mu^v twist:
///
/// ```text
/// Delta = (nu|nu+2 rho)/(2 kappa) + kappa (mu^v|mu^v+2 rho^v)/2
///       - <nu+rho, mu^v+rho^v> + <rho, rho^v>.
/// ```
pub fn delta_kappa(rs: &RootSystem, nu: &[Rational], mcheck: &[Rational]) -> ExponentExpr {
    let rho = rs.rho();
    let nu_2rho: Vec<Rational> = nu
        .iter()
        .zip(&rho)
        .map(|(x, r)| x + r * Rational::from_int(2))
        .collect();
    let half = Rational::new(1, 2).expect("two is nonzero");
    let inv_kappa_part = rs.inner(nu, &nu_2rho) * &half;

    let m_img = rs.coweight_as_weight(mcheck);
    let rho_check_img = rs.coweight_as_weight(&alloc::vec![Rational::from_int(1); rs.rank()]);
    let m_2rho: Vec<Rational> = m_img
        .iter()
        .zip(&rho_check_img)
        .map(|(x, r)| x + r * Rational::from_int(2))
        .collect();
    let kappa_part = rs.inner(&m_img, &m_2rho) * &half;

    let nu_rho: Vec<Rational> = nu.iter().zip(&rho).map(|(x, r)| x + r).collect();
    let mrho: Vec<Rational> = mcheck.iter().map(|m| m + Rational::from_int(1)).collect();
    let rho_rho = rs.pair_coweight(&rho, &alloc::vec![Rational::from_int(1); rs.rank()]);
    let const_part = rho_rho - rs.pair_coweight(&nu_rho, &mrho);
    ExponentExpr::new(inv_kappa_part, kappa_part, const_part)
}

/// The twist-dependent overall exponent
/// tilde(Delta) = (lambda|lambda+2 rho)/(2 kappa)
///              + kappa (mu^v|mu^v+2 rho^v)/2 + <rho, rho^v>.
pub fn delta_tilde(rs: &RootSystem, lambda: &[Rational], mcheck: &[Rational]) -> ExponentExpr {
    let base = delta_kappa(rs, lambda, mcheck);
    let rho = rs.rho();
    let lam_rho: Vec<Rational> = lambda.iter().zip(&rho).map(|(x, r)| x + r).collect();
    let mrho: Vec<Rational> = mcheck.iter().map(|m| m + Rational::from_int(1)).collect();
    let pairing = rs.pair_coweight(&lam_rho, &mrho);
    ExponentExpr::new(base.coef_inv_kappa, base.coef_kappa, base.coef_const + pairing)
}

/// The same character series, assembled from the resolution side: the w term
/// sits at exponent Delta(w . lambda) - Delta(lambda), with the level
/// dependence cancelling exactly in the gap. The prefactor records
/// tilde(Delta) instead of 0.
pub fn char_t_resolution(
    rs: &RootSystem,
    lambda: &[i64],
    mcheck: &[i64],
    order: usize,
) -> Result<CharTable, CharacterError> {
    check_dominant(lambda)?;
    check_dominant(mcheck)?;
    let lam = to_rat(lambda);
    let mrat = to_rat(mcheck);
    let base = delta_kappa(rs, &lam, &mrat);
    let mut numerator = QSeries::zero(order);
    for w in rs.weyl() {
        let nu = rs.dot_action(w, &lam);
        let dw = delta_kappa(rs, &nu, &mrat);
        let gap = dw.sub(&base);
        assert!(
            gap.is_constant(),
            "level dependence must cancel along a dot orbit"
        );
        let e = gap
            .coef_const
            .to_i64()
            .expect("conformal-weight gaps along a dot orbit are integers");
        debug_assert!(e >= 0);
        if e as usize <= order {
            numerator = numerator.add(&QSeries::monomial(
                Rational::from_int(w.sign()),
                e as usize,
                order,
            ));
        }
    }
    let series = numerator.mul(&QSeries::euler_product(rs.rank(), order));
    Ok(CharTable {
        algebra: rs.label().to_string(),
        lambda: lambda.to_vec(),
        mu_check: mcheck.to_vec(),
        order,
        series,
        prefactor: Prefactor::Expr(delta_tilde(rs, &lam, &mrat)),
    })
}

/// Verifies tilde(Delta) - Delta = <lambda+rho, mu^v+rho^v> as an identity of
/// exponent expressions: the kappa-dependent parts must cancel and the
/// constant must equal the independently computed pairing.
pub fn prefactor_shift_check(
    rs: &RootSystem,
    lambda: &[i64],
    mcheck: &[i64],
) -> Result<ShiftCheck, CharacterError> {
    check_dominant(lambda)?;
    check_dominant(mcheck)?;
    let lam = to_rat(lambda);
    let mrat = to_rat(mcheck);
    let gap = delta_tilde(rs, &lam, &mrat).sub(&delta_kappa(rs, &lam, &mrat));
    let rho = rs.rho();
    let lam_rho: Vec<Rational> = lam.iter().zip(&rho).map(|(x, r)| x + r).collect();
    let pairing = rs.pair_coweight(&lam_rho, &shifted_coweight(mcheck));
    let holds = gap.is_constant() && gap.coef_const == pairing;
    Ok(ShiftCheck {
        holds,
        difference: gap.coef_const,
    })
}

/// Compares char_t on (g, lambda, mu^v) with char_t on the dual system with
/// the roles of weight and coweight exchanged.
pub fn duality_check(
    rs: &RootSystem,
    lambda: &[i64],
    mcheck: &[i64],
    order: usize,
) -> Result<bool, CharacterError> {
    let here = char_t(rs, lambda, mcheck, order)?;
    let dual = rs.dual();
    let there = char_t(&dual, mcheck, lambda, order)?;
    Ok(here.series == there.series)
}

/// For lambda = 0 the numerator collapses to a finite product:
/// series = prod_{alpha>0} (1 - q^<alpha, mu^v+rho^v>) * prod (1-q^n)^(-r).
pub fn vacuum_product_check(
    rs: &RootSystem,
    mcheck: &[i64],
    order: usize,
) -> Result<bool, CharacterError> {
    check_dominant(mcheck)?;
    let zero = alloc::vec![0i64; rs.rank()];
    let table = char_t(rs, &zero, mcheck, order)?;
    let mrho = shifted_coweight(mcheck);
    let mut product: QSeries<Rational> = QSeries::euler_product(rs.rank(), order);
    for alpha in rs.positive_roots() {
        let aw = to_rat(&rs.weight_coords_of_root(alpha));
        let deg = rs
            .pair_coweight(&aw, &mrho)
            .to_i64()
            .expect("integral pairing") as usize;
        product = product.mul(&QSeries::one_minus_qk(deg, order));
    }
    Ok(table.series == product)
}
