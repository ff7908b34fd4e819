//! Graded monomial bases of the polynomial ring C[x^i_n, n < 0] in r colors
//! of bosonic modes, and the rank-1 Heisenberg action on them.
//!
//! A variable x^i_{-k} (color i, mode k >= 1) carries principal degree k; the
//! degree-d component has one basis monomial per r-colored partition of d.
//! The basis order is fixed once and for all: exponent vectors over the slots
//! (mode 1, color 0), (mode 1, color 1), ..., (mode d, color r-1), sorted in
//! descending lexicographic order. Every matrix in this crate refers to that
//! order.
//!
//! In rank 1 the modes b_n act with [b_n, b_m] = kappa (alpha|alpha) n
//! delta_{n,-m} and (alpha|alpha) = 2: b_{-k} multiplies by x_{-k}, b_k for
//! k > 0 acts as 2 kappa k d/dx_{-k}, and b_0 is the scalar (nu|alpha) on the
//! module with highest weight nu.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::field::Field;
use crate::linalg::SparseMatrix;

/// Errors from Fock-space operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FockError {
    /// The quantum mode action is implemented for rank 1 only.
    RankUnsupported,
}

impl fmt::Display for FockError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FockError::RankUnsupported => write!(f, "mode action requires rank 1"),
        }
    }
}

/// A monomial in the variables x^i_{-k}: map (mode k, color i) -> exponent.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct FockMonomial {
    exps: BTreeMap<(usize, usize), u32>,
}

impl FockMonomial {
    pub fn one() -> Self {
        FockMonomial {
            exps: BTreeMap::new(),
        }
    }

    /// x^{color}_{-mode}; `mode >= 1`.
    pub fn var(color: usize, mode: usize) -> Self {
        assert!(mode >= 1, "modes are negative: x_{{-k}} with k >= 1");
        let mut exps = BTreeMap::new();
        exps.insert((mode, color), 1);
        FockMonomial { exps }
    }

    /// Total principal degree: sum of mode * exponent.
    pub fn degree(&self) -> usize {
        self.exps
            .iter()
            .map(|(&(mode, _), &e)| mode * e as usize)
            .sum()
    }

    pub fn exponent(&self, color: usize, mode: usize) -> u32 {
        self.exps.get(&(mode, color)).copied().unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    /// Iterates (mode, color, exponent) with mode ascending, color ascending.
    pub fn factors(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        self.exps.iter().map(|(&(mode, color), &e)| (mode, color, e))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut exps = self.exps.clone();
        for (&key, &e) in &rhs.exps {
            *exps.entry(key).or_insert(0) += e;
        }
        FockMonomial { exps }
    }

    /// Multiplied by x^{color}_{-mode}.
    pub fn times_var(&self, color: usize, mode: usize) -> Self {
        let mut exps = self.exps.clone();
        *exps.entry((mode, color)).or_insert(0) += 1;
        FockMonomial { exps }
    }

    /// d/dx^{color}_{-mode}: `Some((old exponent, reduced monomial))`, or
    /// `None` when the variable is absent.
    pub fn derivative(&self, color: usize, mode: usize) -> Option<(u32, Self)> {
        let e = *self.exps.get(&(mode, color))?;
        let mut exps = self.exps.clone();
        if e == 1 {
            exps.remove(&(mode, color));
        } else {
            exps.insert((mode, color), e - 1);
        }
        Some((e, FockMonomial { exps }))
    }

    /// Rendering like `x1[-1]^2*x2[-3]`; the empty product is `1`.
    pub fn label(&self) -> String {
        if self.exps.is_empty() {
            return String::from("1");
        }
        let parts: Vec<String> = self
            .exps
            .iter()
            .map(|(&(mode, color), &e)| {
                if e == 1 {
                    alloc::format!("x{}[-{}]", color + 1, mode)
                } else {
                    alloc::format!("x{}[-{}]^{}", color + 1, mode, e)
                }
            })
            .collect();
        parts.join("*")
    }

}

impl fmt::Display for FockMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// The ordered monomial basis of one graded component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FockComponent {
    rank: usize,
    degree: usize,
    basis: Vec<FockMonomial>,
    index: BTreeMap<FockMonomial, usize>,
}

impl FockComponent {
    pub fn new(rank: usize, degree: usize) -> Self {
        assert!(rank >= 1, "at least one color");
        let mut basis = Vec::new();
        // Slots in (mode, color) order; filling exponents from the largest
        // feasible value downward yields descending lexicographic order
        // directly.
        let slots: Vec<usize> = (1..=degree.max(1))
            .flat_map(|mode| core::iter::repeat(mode).take(rank))
            .collect();
        let mut current: Vec<(usize, usize, u32)> = Vec::new();
        fn fill(
            slots: &[usize],
            rank: usize,
            slot_idx: usize,
            remaining: usize,
            current: &mut Vec<(usize, usize, u32)>,
            out: &mut Vec<FockMonomial>,
        ) {
            if remaining == 0 {
                let mut exps = BTreeMap::new();
                for &(mode, color, e) in current.iter() {
                    exps.insert((mode, color), e);
                }
                out.push(FockMonomial { exps });
                return;
            }
            if slot_idx >= slots.len() {
                return;
            }
            let mode = slots[slot_idx];
            let color = slot_idx % rank;
            let max_e = remaining / mode;
            for e in (0..=max_e).rev() {
                if e > 0 {
                    current.push((mode, color, e as u32));
                }
                fill(slots, rank, slot_idx + 1, remaining - e * mode, current, out);
                if e > 0 {
                    current.pop();
                }
            }
        }
        if degree == 0 {
            basis.push(FockMonomial::one());
        } else {
            fill(&slots, rank, 0, degree, &mut current, &mut basis);
        }
        let index = basis
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        FockComponent {
            rank,
            degree,
            basis,
            index,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[FockMonomial] {
        &self.basis
    }

    pub fn index_of(&self, m: &FockMonomial) -> Option<usize> {
        self.index.get(m).copied()
    }
}

/// A finite linear combination of monomials over a field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FockPoly<F> {
    terms: BTreeMap<FockMonomial, F>,
}

impl<F: Field> FockPoly<F> {
    pub fn zero() -> Self {
        FockPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::from_monomial(FockMonomial::one(), F::one())
    }

    pub fn from_monomial(m: FockMonomial, c: F) -> Self {
        let mut p = Self::zero();
        p.add_term(m, &c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FockMonomial, &F)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &FockMonomial) -> F {
        self.terms.get(m).cloned().unwrap_or_else(F::zero)
    }

    pub fn add_term(&mut self, m: FockMonomial, c: &F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                existing.add_assign(c);
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale(&F::one().neg()))
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        FockPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a.mul(c)))
                .collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), &c1.mul(c2));
            }
        }
        out
    }

    /// Multiplication by x^{color}_{-mode}.
    pub fn mul_var(&self, color: usize, mode: usize) -> Self {
        FockPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.times_var(color, mode), c.clone()))
                .collect(),
        }
    }

    /// d/dx^{color}_{-mode}.
    pub fn derivative(&self, color: usize, mode: usize) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            if let Some((e, reduced)) = m.derivative(color, mode) {
                out.add_term(reduced, &c.mul(&F::from_int(i64::from(e))));
            }
        }
        out
    }

    /// Coordinates in a component's basis. Every term must be homogeneous of
    /// the component's degree.
    pub fn to_vector(&self, comp: &FockComponent) -> Vec<F> {
        let mut v = alloc::vec![F::zero(); comp.dim()];
        for (m, c) in &self.terms {
            let i = comp
                .index_of(m)
                .expect("polynomial is homogeneous of the component degree");
            v[i] = c.clone();
        }
        v
    }
}

/// Rank-1 highest-weight data: the level kappa and the scalar (nu|alpha) by
/// which b_0 acts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HighestWeightData<F> {
    pub level: F,
    pub nu_pair: F,
}

/// A degree-homogeneous linear map between components, stored against the
/// fixed bases. A negative target degree means the zero space (no rows).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMap<F> {
    pub source_degree: usize,
    pub target_degree: i64,
    pub matrix: SparseMatrix<F>,
}

/// Matrix of the mode b_n on the degree-d component (rank 1). Raising the
/// degree for n < 0, lowering it for n > 0, scalar for n = 0.
pub fn apply_b<F: Field>(
    n: i64,
    hw: &HighestWeightData<F>,
    comp: &FockComponent,
) -> Result<GradedMap<F>, FockError> {
    if comp.rank() != 1 {
        return Err(FockError::RankUnsupported);
    }
    let d = comp.degree() as i64;
    let target_degree = d - n;
    let target_dim = if target_degree >= 0 {
        FockComponent::new(1, target_degree as usize).dim()
    } else {
        0
    };
    let target = if target_degree >= 0 {
        Some(FockComponent::new(1, target_degree as usize))
    } else {
        None
    };
    let mut matrix = SparseMatrix::zero(target_dim, comp.dim());
    if let Some(target) = target {
        // (alpha|alpha) = 2 throughout the rank-1 theory.
        for (j, m) in comp.basis().iter().enumerate() {
            if n == 0 {
                matrix
                    .add_to(j, j, &hw.nu_pair)
                    .expect("square scalar block");
            } else if n < 0 {
                let img = m.times_var(0, (-n) as usize);
                let i = target.index_of(&img).expect("degree bookkeeping");
                matrix.add_to(i, j, &F::one()).expect("in range");
            } else if let Some((e, reduced)) = m.derivative(0, n as usize) {
                let i = target.index_of(&reduced).expect("degree bookkeeping");
                let coef = hw
                    .level
                    .mul(&F::from_int(2 * n * i64::from(e)));
                matrix.add_to(i, j, &coef).expect("in range");
            }
        }
    }
    Ok(GradedMap {
        source_degree: comp.degree(),
        target_degree,
        matrix,
    })
}
