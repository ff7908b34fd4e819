//! Classical-limit screening operators on the colored Fock polynomial ring.
//!
//! The twisted screening operator for color i at twist m_i >= 0 is the
//! degree-lowering derivation
//!
//! ```text
//! Q_{i,(m_i)} = sum_{k > m_i} S^i_{-(k - m_i - 1)} d^(i)_{-k},
//! d^(i)_{-k}  = sum_j (alpha_i|alpha_j) d/dx^j_{-k},
//! ```
//!
//! where S^i_{-n} are the complete homogeneous Schur polynomials in the
//! color-i modes, S^i_0 = 1. Every Q_{i,(m_i)} lowers principal degree by
//! exactly m_i + 1.
//!
//! These derivations satisfy the Serre relations (ad Q_i)^(1-a_ij) Q_j = 0,
//! and the sub-Serre iterated commutators are proportional to a closed-form
//! sum over mode tuples; both facts are checked here as exact sparse-matrix
//! identities. The joint kernels of the powers Q_{i,(m_i)}^(l_i+1) compute
//! the graded dimensions of the module attached to (lambda, mu^v), which is
//! what `kernel_dims` reports.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::field::{Field, Rational};
use crate::fock::{FockComponent, FockMonomial, FockPoly, GradedMap};
use crate::linalg::SparseMatrix;
use crate::rootsys::RootSystem;

/// Errors from screening computations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScreeningError {
    /// A weight or coweight coordinate is negative.
    NonDominant,
}

impl fmt::Display for ScreeningError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScreeningError::NonDominant => write!(f, "weight/coweight must be dominant"),
        }
    }
}

fn check_dominant(coords: &[i64]) -> Result<(), ScreeningError> {
    if coords.iter().any(|&x| x < 0) {
        return Err(ScreeningError::NonDominant);
    }
    Ok(())
}

/// Complete homogeneous Schur polynomials S_0 .. S_{-max_degree} in the
/// modes of one color, via the Newton recurrence
/// n S_{-n} = sum_{j=1}^n x_{-j} S_{-(n-j)}.
pub fn schur_polynomials(color: usize, max_degree: usize) -> Vec<FockPoly<Rational>> {
    let mut table: Vec<FockPoly<Rational>> = Vec::with_capacity(max_degree + 1);
    table.push(FockPoly::one());
    for n in 1..=max_degree {
        let mut acc = FockPoly::zero();
        for j in 1..=n {
            acc = acc.add(&table[n - j].mul_var(color, j));
        }
        table.push(acc.scale(&Rational::new(1, n as i64).expect("n >= 1")));
    }
    table
}

/// Small cache of graded components for one rank.
struct ComponentCache {
    rank: usize,
    comps: BTreeMap<usize, FockComponent>,
}

impl ComponentCache {
    fn new(rank: usize) -> Self {
        ComponentCache {
            rank,
            comps: BTreeMap::new(),
        }
    }

    fn get(&mut self, d: usize) -> &FockComponent {
        let rank = self.rank;
        self.comps
            .entry(d)
            .or_insert_with(|| FockComponent::new(rank, d))
    }

    fn dim(&mut self, d: i64) -> usize {
        if d < 0 {
            0
        } else {
            self.get(d as usize).dim()
        }
    }
}

/// One twisted screening derivation, ready to apply to polynomials or to be
/// sampled as per-degree matrices.
pub struct ScreeningOp {
    rank: usize,
    color: usize,
    twist: i64,
    /// (alpha_i|alpha_j) for each color j.
    pairings: Vec<Rational>,
    /// S^i_0 .. S^i_{-max_degree}.
    schur: Vec<FockPoly<Rational>>,
}

impl ScreeningOp {
    pub fn new(rs: &RootSystem, color: usize, twist: i64, max_degree: usize) -> Self {
        assert!(twist >= 0, "twists are non-negative coweight coordinates");
        let pairings = (0..rs.rank())
            .map(|j| &rs.symmetrizers()[color] * Rational::from_int(rs.cartan()[color][j]))
            .collect();
        ScreeningOp {
            rank: rs.rank(),
            color,
            twist,
            pairings,
            schur: schur_polynomials(color, max_degree),
        }
    }

    pub fn color(&self) -> usize {
        self.color
    }

    pub fn twist(&self) -> i64 {
        self.twist
    }

    /// Degree lowered by each application.
    pub fn drop(&self) -> i64 {
        self.twist + 1
    }

    /// d^(i)_{-k} applied to a monomial.
    fn colored_derivative(&self, m: &FockMonomial, k: usize) -> FockPoly<Rational> {
        let mut out = FockPoly::zero();
        for (j, pairing) in self.pairings.iter().enumerate() {
            if pairing.is_zero() {
                continue;
            }
            if let Some((e, reduced)) = m.derivative(j, k) {
                out.add_term(reduced, &(pairing * Rational::from_int(i64::from(e))));
            }
        }
        out
    }

    pub fn apply_monomial(&self, m: &FockMonomial) -> FockPoly<Rational> {
        let d = m.degree();
        let mut out = FockPoly::zero();
        for k in (self.twist as usize + 1)..=d {
            let deriv = self.colored_derivative(m, k);
            if deriv.is_zero() {
                continue;
            }
            let s_index = k - self.twist as usize - 1;
            out = out.add(&self.schur[s_index].mul(&deriv));
        }
        out
    }

    pub fn apply(&self, p: &FockPoly<Rational>) -> FockPoly<Rational> {
        let mut out = FockPoly::zero();
        for (m, c) in p.terms() {
            out = out.add(&self.apply_monomial(m).scale(c));
        }
        out
    }

    /// Matrix on the degree-d component.
    pub fn matrix(&self, d: usize) -> GradedMap<Rational> {
        let source = FockComponent::new(self.rank, d);
        let target_degree = d as i64 - self.drop();
        let (rows, target) = if target_degree >= 0 {
            let t = FockComponent::new(self.rank, target_degree as usize);
            (t.dim(), Some(t))
        } else {
            (0, None)
        };
        let mut matrix = SparseMatrix::zero(rows, source.dim());
        if let Some(target) = target {
            for (j, m) in source.basis().iter().enumerate() {
                for (img, c) in self.apply_monomial(m).terms() {
                    let i = target.index_of(img).expect("homogeneous drop");
                    matrix.add_to(i, j, c).expect("in range");
                }
            }
        }
        GradedMap {
            source_degree: d,
            target_degree,
            matrix,
        }
    }
}

/// Convenience form of [`ScreeningOp::matrix`].
pub fn q_matrix(rs: &RootSystem, color: usize, twist: i64, d: usize) -> GradedMap<Rational> {
    ScreeningOp::new(rs, color, twist, d).matrix(d)
}

/// A degree-homogeneous operator sampled on every source degree 0..=max:
/// `mats[d]` maps the degree-d component to degree d - drop (zero rows when
/// that is negative).
#[derive(Clone)]
pub struct MatrixFamily {
    pub drop: i64,
    mats: Vec<SparseMatrix<Rational>>,
}

impl MatrixFamily {
    pub fn max_degree(&self) -> usize {
        self.mats.len() - 1
    }

    pub fn at(&self, d: usize) -> &SparseMatrix<Rational> {
        &self.mats[d]
    }

    pub fn is_zero(&self) -> bool {
        self.mats.iter().all(SparseMatrix::is_zero)
    }

    /// self o rhs, degree by degree.
    fn compose(&self, rhs: &Self, cache: &mut ComponentCache) -> Self {
        let drop = self.drop + rhs.drop;
        let mats = (0..=rhs.max_degree())
            .map(|d| {
                let mid = d as i64 - rhs.drop;
                let out_rows = cache.dim(d as i64 - drop);
                if mid >= 0 {
                    self.mats[mid as usize]
                        .mul(&rhs.mats[d])
                        .expect("degree bookkeeping aligns compositions")
                } else {
                    SparseMatrix::zero(out_rows, cache.dim(d as i64))
                }
            })
            .collect();
        MatrixFamily { drop, mats }
    }

    fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.drop, rhs.drop);
        let mats = self
            .mats
            .iter()
            .zip(&rhs.mats)
            .map(|(a, b)| a.sub(b).expect("same shapes"))
            .collect();
        MatrixFamily {
            drop: self.drop,
            mats,
        }
    }

    fn commutator(&self, rhs: &Self, cache: &mut ComponentCache) -> Self {
        self.compose(rhs, cache).sub(&rhs.compose(self, cache))
    }
}

/// Samples a screening operator as a matrix family on degrees 0..=max.
pub fn screening_family(
    rs: &RootSystem,
    color: usize,
    twist: i64,
    max_degree: usize,
) -> MatrixFamily {
    let op = ScreeningOp::new(rs, color, twist, max_degree);
    let mats = (0..=max_degree).map(|d| op.matrix(d).matrix).collect();
    MatrixFamily {
        drop: op.drop(),
        mats,
    }
}

/// Result of one Serre-relation check (ad Q_i)^exponent Q_j = 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SerrePairCheck {
    pub i: usize,
    pub j: usize,
    pub exponent: usize,
    pub holds: bool,
}

/// Serre suite over all ordered pairs of colors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SerreReport {
    pub max_degree: usize,
    pub pairs: Vec<SerrePairCheck>,
    pub holds: bool,
}

/// Checks (ad Q_{i,(m_i)})^(1 - a_ij) Q_{j,(m_j)} = 0 on all components of
/// degree <= max_degree, for every ordered pair i != j.
pub fn serre_check(
    rs: &RootSystem,
    mcheck: &[i64],
    max_degree: usize,
) -> Result<SerreReport, ScreeningError> {
    check_dominant(mcheck)?;
    let rank = rs.rank();
    let mut cache = ComponentCache::new(rank);
    let families: Vec<MatrixFamily> = (0..rank)
        .map(|i| screening_family(rs, i, mcheck[i], max_degree))
        .collect();
    let mut pairs = Vec::new();
    for i in 0..rank {
        for j in 0..rank {
            if i == j {
                continue;
            }
            let exponent = (1 - rs.cartan()[i][j]) as usize;
            let mut acc = families[j].clone();
            for _ in 0..exponent {
                acc = families[i].commutator(&acc, &mut cache);
            }
            pairs.push(SerrePairCheck {
                i,
                j,
                exponent,
                holds: acc.is_zero(),
            });
        }
    }
    let holds = pairs.iter().all(|p| p.holds);
    Ok(SerreReport {
        max_degree,
        pairs,
        holds,
    })
}

/// Result of comparing an iterated commutator against its closed form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommrelReport {
    pub holds: bool,
    /// The single proportionality scalar, when both sides are nonzero.
    pub scale: Option<Rational>,
    /// True when both sides vanish identically (e.g. at the Serre exponent).
    pub degenerate: bool,
}

/// Enumerates tuples (k_1..k_m; k_last) with k_t >= lo_i, k_last >= lo_j and
/// total K, calling `f(ks, k_last)`.
fn for_each_tuple(
    m: usize,
    lo_i: usize,
    lo_j: usize,
    total: usize,
    current: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize], usize),
) {
    if current.len() == m {
        let used: usize = current.iter().sum();
        if total > used && total - used >= lo_j {
            f(current, total - used);
        }
        return;
    }
    let used: usize = current.iter().sum();
    if used + lo_i > total {
        return;
    }
    for k in lo_i..=(total - used) {
        current.push(k);
        for_each_tuple(m, lo_i, lo_j, total, current, f);
        current.pop();
    }
}

/// Checks that (ad Q_{i,(m_i)})^m Q_{j,(m_j)} is proportional, with one scalar
/// across all degrees <= max_degree, to the closed-form operator
///
/// ```text
/// (-a_ij - m + 1) sum_{k_1..k_m > m_i; k' > m_j}
///     S^i_{-(k_1-m_i-1)} ... S^i_{-(k_m-m_i-1)} S^j_{-(k'-m_j-1)}
///     (-1)^m / (k_1 ... k_m)
///     ( sum_l k_l/(K - k_l) d^(i)_{-K} - d^(j)_{-K} ),   K = sum k + k'.
/// ```
pub fn commrel_proportionality_check(
    rs: &RootSystem,
    i: usize,
    j: usize,
    mcheck: &[i64],
    m: usize,
    max_degree: usize,
) -> Result<CommrelReport, ScreeningError> {
    check_dominant(mcheck)?;
    assert!(i != j && m >= 1);
    let rank = rs.rank();
    let mut cache = ComponentCache::new(rank);

    // Left side: iterated commutators of the sampled families.
    let fam_i = screening_family(rs, i, mcheck[i], max_degree);
    let mut lhs = screening_family(rs, j, mcheck[j], max_degree);
    for _ in 0..m {
        lhs = fam_i.commutator(&lhs, &mut cache);
    }

    // Right side: per total mode K, coefficient polynomials multiplying the
    // colored derivatives d^(i)_{-K} and d^(j)_{-K}.
    let mu_i = mcheck[i] as usize;
    let mu_j = mcheck[j] as usize;
    let factor = Rational::from_int(-rs.cartan()[i][j] - m as i64 + 1);
    let op_i = ScreeningOp::new(rs, i, mcheck[i], max_degree);
    let op_j = ScreeningOp::new(rs, j, mcheck[j], max_degree);
    let schur_i = schur_polynomials(i, max_degree);
    let schur_j = schur_polynomials(j, max_degree);
    let sign = if m % 2 == 0 {
        Rational::from_int(1)
    } else {
        Rational::from_int(-1)
    };
    let min_k = m * (mu_i + 1) + mu_j + 1;
    let mut coef_i: BTreeMap<usize, FockPoly<Rational>> = BTreeMap::new();
    let mut coef_j: BTreeMap<usize, FockPoly<Rational>> = BTreeMap::new();
    for total in min_k..=max_degree {
        let mut acc_i = FockPoly::zero();
        let mut acc_j = FockPoly::zero();
        let mut current = Vec::new();
        for_each_tuple(m, mu_i + 1, mu_j + 1, total, &mut current, &mut |ks, k_last| {
            let mut sprod = schur_j[k_last - mu_j - 1].clone();
            let mut denom = Rational::from_int(1);
            for &k in ks {
                sprod = sprod.mul(&schur_i[k - mu_i - 1]);
                denom = denom * Rational::from_int(k as i64);
            }
            let base = &sign * denom.inv().expect("k >= 1");
            let mut bracket_i = Rational::from_int(0);
            for &k in ks {
                bracket_i = bracket_i
                    + Rational::from_int(k as i64)
                        * Rational::from_int((total - k) as i64)
                            .inv()
                            .expect("remaining modes are positive");
            }
            acc_i = acc_i.add(&sprod.scale(&(&base * bracket_i)));
            acc_j = acc_j.add(&sprod.scale(&base.neg()));
        });
        coef_i.insert(total, acc_i.scale(&factor));
        coef_j.insert(total, acc_j.scale(&factor));
    }

    // Assemble the right side degree by degree.
    let drop = lhs.drop;
    let mut rhs_mats = Vec::with_capacity(max_degree + 1);
    for d in 0..=max_degree {
        let target = d as i64 - drop;
        let rows = cache.dim(target);
        let mut mat = SparseMatrix::zero(rows, cache.dim(d as i64));
        if target >= 0 {
            let source = cache.get(d).clone();
            let target_comp = cache.get(target as usize).clone();
            for (col, mono) in source.basis().iter().enumerate() {
                let mut image = FockPoly::zero();
                for (&total, poly) in &coef_i {
                    if total > d {
                        break;
                    }
                    let deriv = op_i.colored_derivative(mono, total);
                    if !deriv.is_zero() {
                        image = image.add(&poly.mul(&deriv));
                    }
                    let deriv_j = op_j.colored_derivative(mono, total);
                    if !deriv_j.is_zero() {
                        image = image.add(&coef_j[&total].mul(&deriv_j));
                    }
                }
                for (im, c) in image.terms() {
                    let row = target_comp.index_of(im).expect("homogeneous drop");
                    mat.add_to(row, col, c).expect("in range");
                }
            }
        }
        rhs_mats.push(mat);
    }
    let rhs = MatrixFamily {
        drop,
        mats: rhs_mats,
    };

    // One scalar must relate the two families everywhere.
    let mut scale: Option<Rational> = None;
    for d in 0..=max_degree {
        if let Some((r, c, v)) = rhs.at(d).entries().next() {
            let lv = lhs.at(d).entry(r, c).cloned().unwrap_or_else(Rational::zero);
            scale = Some(&lv * v.inv().expect("leading entry nonzero"));
            break;
        }
    }
    let (holds, degenerate) = match &scale {
        None => (lhs.is_zero(), true),
        Some(s) => {
            let ok = !s.is_zero() && (0..=max_degree).all(|d| &rhs.at(d).scale(s) == lhs.at(d));
            (ok, false)
        }
    };
    Ok(CommrelReport {
        holds,
        scale,
        degenerate,
    })
}

/// Graded dimensions of the joint kernel of the powers Q_{i,(m_i)}^(l_i+1):
/// entry d is dim of the intersection inside the degree-d component.
pub fn kernel_dims(
    rs: &RootSystem,
    lambda: &[i64],
    mcheck: &[i64],
    max_degree: usize,
) -> Result<Vec<usize>, ScreeningError> {
    check_dominant(lambda)?;
    check_dominant(mcheck)?;
    let rank = rs.rank();
    let mut cache = ComponentCache::new(rank);
    // Power family for each color: Q^(lambda_i + 1).
    let mut powers: Vec<MatrixFamily> = Vec::with_capacity(rank);
    for i in 0..rank {
        let base = screening_family(rs, i, mcheck[i], max_degree);
        let mut acc = screening_family(rs, i, mcheck[i], max_degree);
        for _ in 0..lambda[i] {
            acc = base.compose(&acc, &mut cache);
        }
        powers.push(acc);
    }
    let mut dims = Vec::with_capacity(max_degree + 1);
    for d in 0..=max_degree {
        let blocks: Vec<&SparseMatrix<Rational>> = powers.iter().map(|f| f.at(d)).collect();
        let stacked = SparseMatrix::stack_rows(&blocks).expect("same source component");
        dims.push(stacked.cols() - stacked.rank());
    }
    Ok(dims)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::char_t;

    #[test]
    fn schur_polynomials_match_hand_expansion() {
        let s = schur_polynomials(0, 3);
        assert_eq!(s[0], FockPoly::one());
        assert_eq!(
            s[1],
            FockPoly::from_monomial(FockMonomial::var(0, 1), Rational::from_int(1))
        );
        // S_{-2} = x_{-1}^2/2 + x_{-2}/2
        let mut expected = FockPoly::zero();
        expected.add_term(
            FockMonomial::var(0, 1).mul(&FockMonomial::var(0, 1)),
            &Rational::new(1, 2).unwrap(),
        );
        expected.add_term(FockMonomial::var(0, 2), &Rational::new(1, 2).unwrap());
        assert_eq!(s[2], expected);
    }

    #[test]
    fn rank_one_screening_matrices() {
        let a1 = RootSystem::new("A1").unwrap();
        // twist 0, degree 2: x_{-1}^2 -> 4 x_{-1}, x_{-2} -> 2 x_{-1}.
        let m = q_matrix(&a1, 0, 0, 2);
        assert_eq!(m.target_degree, 1);
        assert_eq!(m.matrix.to_dense(), alloc::vec![alloc::vec![
            Rational::from_int(4),
            Rational::from_int(2)
        ]]);
        // twist 1, degree 2: x_{-1}^2 -> 0, x_{-2} -> 2.
        let m = q_matrix(&a1, 0, 1, 2);
        assert_eq!(m.target_degree, 0);
        assert_eq!(m.matrix.to_dense(), alloc::vec![alloc::vec![
            Rational::from_int(0),
            Rational::from_int(2)
        ]]);
        // constants are annihilated.
        let m = q_matrix(&a1, 0, 0, 0);
        assert_eq!(m.matrix.rows(), 0);
    }

    #[test]
    fn screening_is_a_derivation() {
        let a2 = RootSystem::new("A2").unwrap();
        let op = ScreeningOp::new(&a2, 0, 1, 12);
        let f = {
            let mut p = FockPoly::<Rational>::from_monomial(
                FockMonomial::var(0, 2),
                Rational::from_int(1),
            );
            p.add_term(FockMonomial::var(1, 1).mul(&FockMonomial::var(0, 1)), &Rational::from_int(3));
            p
        };
        let g = {
            let mut p = FockPoly::<Rational>::from_monomial(
                FockMonomial::var(1, 3),
                Rational::from_int(2),
            );
            p.add_term(FockMonomial::var(0, 1), &Rational::new(-1, 2).unwrap());
            p
        };
        let lhs = op.apply(&f.mul(&g));
        let rhs = op.apply(&f).mul(&g).add(&f.mul(&op.apply(&g)));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn serre_relations_hold() {
        let a2 = RootSystem::new("A2").unwrap();
        let report = serre_check(&a2, &[0, 0], 8).unwrap();
        assert!(report.holds);
        assert!(report.pairs.iter().all(|p| p.exponent == 2));

        let g2 = RootSystem::new("G2").unwrap();
        let report = serre_check(&g2, &[1, 0], 6).unwrap();
        assert!(report.holds);
        let exps: Vec<usize> = report.pairs.iter().map(|p| p.exponent).collect();
        assert_eq!(exps, alloc::vec![4, 2]);
    }

    #[test]
    fn closed_form_commutator_is_proportional() {
        let a2 = RootSystem::new("A2").unwrap();
        let rep = commrel_proportionality_check(&a2, 0, 1, &[0, 0], 1, 6).unwrap();
        assert!(rep.holds);
        assert!(!rep.degenerate);
        assert_eq!(rep.scale, Some(Rational::from_int(-1)));

        // Serre exponent: both sides vanish.
        let rep = commrel_proportionality_check(&a2, 0, 1, &[0, 0], 2, 6).unwrap();
        assert!(rep.holds);
        assert!(rep.degenerate);
    }

    #[test]
    fn kernel_dimensions_match_known_counts() {
        let a1 = RootSystem::new("A1").unwrap();
        assert_eq!(
            kernel_dims(&a1, &[0], &[0], 5).unwrap(),
            alloc::vec![1, 0, 1, 1, 2, 2]
        );
        assert_eq!(
            kernel_dims(&a1, &[1], &[1], 6).unwrap(),
            alloc::vec![1, 1, 2, 3, 4, 6, 9]
        );
        let a2 = RootSystem::new("A2").unwrap();
        assert_eq!(
            kernel_dims(&a2, &[0, 0], &[0, 0], 5).unwrap(),
            alloc::vec![1, 0, 1, 2, 3, 4]
        );
    }

    #[test]
    fn kernels_match_characters() {
        let a1 = RootSystem::new("A1").unwrap();
        let dims = kernel_dims(&a1, &[2], &[1], 7).unwrap();
        let table = char_t(&a1, &[2], &[1], 7).unwrap();
        let coeffs: Vec<usize> = table
            .series
            .coeffs()
            .iter()
            .map(|c| c.to_i64().unwrap() as usize)
            .collect();
        assert_eq!(dims, coeffs);
    }

    #[test]
    fn rank_one_powers_are_surjective() {
        let a1 = RootSystem::new("A1").unwrap();
        let lam = 1i64;
        let mu = 1i64;
        let mut cache = ComponentCache::new(1);
        let base = screening_family(&a1, 0, mu, 8);
        let mut acc = screening_family(&a1, 0, mu, 8);
        for _ in 0..lam {
            acc = base.compose(&acc, &mut cache);
        }
        for d in 0..=8usize {
            let m = acc.at(d);
            assert_eq!(m.rank(), m.rows(), "degree {}", d);
        }
    }

    #[test]
    fn dominance_is_required() {
        let a1 = RootSystem::new("A1").unwrap();
        assert_eq!(
            kernel_dims(&a1, &[-1], &[0], 3),
            Err(ScreeningError::NonDominant)
        );
        assert_eq!(
            serre_check(&a1, &[-2], 3).map(|_| ()),
            Err(ScreeningError::NonDominant)
        );
    }
}
