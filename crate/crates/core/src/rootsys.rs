//! Finite root systems of types A1-A4, B2-B4, C2-C4, D4 and G2.
//!
//! Everything is derived from the Cartan matrix a[i][j] = <alpha_j, alpha_i^v>.
//! Weights are stored in fundamental-weight coordinates, so the simple
//! reflection s_i acts by
//!
//! ```text
//! s_i(lambda)_k = lambda_k - lambda_i * a[k][i],
//! ```
//!
//! and a weight's simple-root coordinates are obtained with the inverse
//! Cartan matrix. The invariant form is normalized so long roots have squared
//! length 2; the symmetrizers d_i = (alpha_i|alpha_i)/2 then satisfy
//! (lambda|alpha_i) = d_i * lambda_i.
//!
//! Coweights are handled through their coefficient vectors on the fundamental
//! coweights: <lambda, mu^v> is the dot product of lambda's root coordinates
//! with those coefficients, and the embedding iota(omega_i^v) = omega_i / d_i
//! turns coweight inner products into weight inner products.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::field::Rational;
use crate::linalg::SparseMatrix;

/// Errors from root-system construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootSystemError {
    /// The label does not name a supported simple type.
    UnsupportedType(String),
    /// The Weyl group grew past the supported bound.
    CapExceeded,
}

impl fmt::Display for RootSystemError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootSystemError::UnsupportedType(s) => write!(f, "unsupported algebra type: {}", s),
            RootSystemError::CapExceeded => write!(f, "Weyl group exceeds the supported size"),
        }
    }
}

const WEYL_CAP: usize = 384;

/// A Weyl group element as a reduced word in simple reflections. The word is
/// read right to left when acting: `word[0]` is applied last.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElement {
    pub word: Vec<usize>,
}

impl WeylElement {
    pub fn length(&self) -> usize {
        self.word.len()
    }

    /// `(-1)^length`.
    pub fn sign(&self) -> i64 {
        if self.word.len() % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// A simple finite root system with its Weyl group enumerated.
#[derive(Clone, Debug)]
pub struct RootSystem {
    label: String,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    d: Vec<Rational>,
    lacing: i64,
    cartan_inv: Vec<Vec<Rational>>,
    positive_roots: Vec<Vec<i64>>,
    weyl: Vec<WeylElement>,
}

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.label == other.label && self.cartan == other.cartan
    }
}

fn parse_label(label: &str) -> Result<(char, usize), RootSystemError> {
    let err = || RootSystemError::UnsupportedType(label.to_string());
    let mut chars = label.trim().chars();
    let letter = chars.next().ok_or_else(err)?.to_ascii_uppercase();
    let rank: usize = chars.as_str().parse().map_err(|_| err())?;
    let ok = matches!(
        (letter, rank),
        ('A', 1..=4) | ('B', 2..=4) | ('C', 2..=4) | ('D', 4) | ('G', 2)
    );
    if ok {
        Ok((letter, rank))
    } else {
        Err(err())
    }
}

fn cartan_table(letter: char, rank: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; rank]; rank];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    match letter {
        'A' => {
            for i in 0..rank - 1 {
                a[i][i + 1] = -1;
                a[i + 1][i] = -1;
            }
        }
        // B: last simple root short; C is its transpose.
        'B' | 'C' => {
            for i in 0..rank - 1 {
                a[i][i + 1] = -1;
                a[i + 1][i] = -1;
            }
            if letter == 'B' {
                a[rank - 1][rank - 2] = -2;
            } else {
                a[rank - 2][rank - 1] = -2;
            }
        }
        // D4: node 1 is the center of the fork.
        'D' => {
            for &(i, j) in &[(0usize, 1usize), (1, 2), (1, 3)] {
                a[i][j] = -1;
                a[j][i] = -1;
            }
        }
        // G2: first simple root short.
        'G' => {
            a[0][1] = -3;
            a[1][0] = -1;
        }
        _ => unreachable!("parse_label admits only known letters"),
    }
    a
}

fn symmetrizers(cartan: &[Vec<i64>]) -> Vec<Rational> {
    let rank = cartan.len();
    // d_i * a[i][j] = (alpha_i|alpha_j) is symmetric, which propagates d
    // along the (connected) Dynkin diagram from node 0.
    let mut d: Vec<Option<Rational>> = vec![None; rank];
    d[0] = Some(Rational::from_int(1));
    let mut queue = vec![0usize];
    while let Some(i) = queue.pop() {
        let di = d[i].clone().expect("visited nodes carry a value");
        for j in 0..rank {
            if i != j && cartan[i][j] != 0 && d[j].is_none() {
                let ratio = Rational::new(cartan[i][j], cartan[j][i])
                    .expect("Dynkin edges have nonzero entries on both sides");
                d[j] = Some(&di * &ratio);
                queue.push(j);
            }
        }
    }
    let mut d: Vec<Rational> = d
        .into_iter()
        .map(|x| x.expect("diagram is connected"))
        .collect();
    let max = d.iter().cloned().max().expect("rank is positive");
    let max_inv = max.inv().expect("symmetrizers are nonzero");
    for di in d.iter_mut() {
        *di = &*di * &max_inv;
    }
    d
}

fn invert_cartan(cartan: &[Vec<i64>]) -> Vec<Vec<Rational>> {
    let rank = cartan.len();
    // Row-reduce [A | I]; A is invertible, so the right block becomes A^-1.
    let mut aug = Vec::with_capacity(rank);
    for (i, row) in cartan.iter().enumerate() {
        let mut r: Vec<Rational> = row.iter().map(|&x| Rational::from_int(x)).collect();
        r.extend((0..rank).map(|j| Rational::from_int(i64::from(i == j))));
        aug.push(r);
    }
    let (reduced, pivots) = SparseMatrix::from_dense(aug).rref();
    assert_eq!(pivots, (0..rank).collect::<Vec<_>>(), "Cartan matrices are invertible");
    let dense = reduced.to_dense();
    dense.into_iter().map(|r| r[rank..].to_vec()).collect()
}

fn closure_of_positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let rank = cartan.len();
    let mut set: BTreeSet<Vec<i64>> = BTreeSet::new();
    for i in 0..rank {
        let mut e = vec![0i64; rank];
        e[i] = 1;
        set.insert(e);
    }
    loop {
        let mut added = false;
        for c in set.clone() {
            for i in 0..rank {
                // <beta, alpha_i^v> in root coordinates is (A c)_i.
                let pairing: i64 = (0..rank).map(|j| cartan[i][j] * c[j]).sum();
                let mut nc = c.clone();
                nc[i] -= pairing;
                if nc.iter().all(|&x| x >= 0) && nc.iter().any(|&x| x > 0) && set.insert(nc) {
                    added = true;
                }
            }
        }
        if !added {
            break;
        }
    }
    let mut roots: Vec<Vec<i64>> = set.into_iter().collect();
    roots.sort_by_key(|c| (c.iter().sum::<i64>(), c.clone()));
    roots
}

fn reflect_int(cartan: &[Vec<i64>], i: usize, lam: &[i64]) -> Vec<i64> {
    lam.iter()
        .enumerate()
        .map(|(k, &x)| x - lam[i] * cartan[k][i])
        .collect()
}

fn enumerate_weyl(cartan: &[Vec<i64>]) -> Result<Vec<WeylElement>, RootSystemError> {
    let rank = cartan.len();
    let rho: Vec<i64> = vec![1; rank];
    // The orbit of rho is free, so w(rho) identifies w. Building w' = s_i w
    // lets the image be updated directly, and prepending i keeps the word in
    // "word[0] acts last" order.
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    seen.insert(rho.clone());
    let mut out = vec![WeylElement { word: Vec::new() }];
    let mut frontier: Vec<(Vec<usize>, Vec<i64>)> = vec![(Vec::new(), rho)];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (word, img) in &frontier {
            for i in 0..rank {
                let nimg = reflect_int(cartan, i, img);
                if seen.insert(nimg.clone()) {
                    let mut nword = Vec::with_capacity(word.len() + 1);
                    nword.push(i);
                    nword.extend_from_slice(word);
                    out.push(WeylElement { word: nword.clone() });
                    next.push((nword, nimg));
                    if out.len() > WEYL_CAP {
                        return Err(RootSystemError::CapExceeded);
                    }
                }
            }
        }
        frontier = next;
    }
    Ok(out)
}

impl RootSystem {
    pub fn new(label: &str) -> Result<Self, RootSystemError> {
        let (letter, rank) = parse_label(label)?;
        let cartan = cartan_table(letter, rank);
        Self::from_cartan(format!("{}{}", letter, rank), cartan)
    }

    fn from_cartan(label: String, cartan: Vec<Vec<i64>>) -> Result<Self, RootSystemError> {
        let rank = cartan.len();
        let d = symmetrizers(&cartan);
        let lacing = cartan
            .iter()
            .enumerate()
            .flat_map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .filter(move |&(j, _)| j != i)
                    .map(|(_, &x)| x.abs())
            })
            .max()
            .unwrap_or(1)
            .max(1);
        let cartan_inv = invert_cartan(&cartan);
        let positive_roots = closure_of_positive_roots(&cartan);
        let weyl = enumerate_weyl(&cartan)?;
        Ok(RootSystem {
            label,
            rank,
            cartan,
            d,
            lacing,
            cartan_inv,
            positive_roots,
            weyl,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// d_i = (alpha_i|alpha_i)/2, with long roots of squared length 2.
    pub fn symmetrizers(&self) -> &[Rational] {
        &self.d
    }

    /// Lacing number: 1 (simply laced), 2 (B, C), or 3 (G2).
    pub fn lacing(&self) -> i64 {
        self.lacing
    }

    /// Positive roots in simple-root coordinates, sorted by height.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn weyl(&self) -> &[WeylElement] {
        &self.weyl
    }

    pub fn weyl_order(&self) -> usize {
        self.weyl.len()
    }

    /// rho in fundamental-weight coordinates.
    pub fn rho(&self) -> Vec<Rational> {
        vec![Rational::from_int(1); self.rank]
    }

    pub fn reflect(&self, i: usize, lam: &[Rational]) -> Vec<Rational> {
        lam.iter()
            .enumerate()
            .map(|(k, x)| x - &lam[i] * Rational::from_int(self.cartan[k][i]))
            .collect()
    }

    /// Applies w: `word[0]` acts last.
    pub fn apply(&self, w: &WeylElement, lam: &[Rational]) -> Vec<Rational> {
        let mut v = lam.to_vec();
        for &i in w.word.iter().rev() {
            v = self.reflect(i, &v);
        }
        v
    }

    /// Shifted action w.lambda = w(lambda + rho) - rho.
    pub fn dot_action(&self, w: &WeylElement, lam: &[Rational]) -> Vec<Rational> {
        let shifted: Vec<Rational> = lam.iter().map(|x| x + &Rational::from_int(1)).collect();
        self.apply(w, &shifted)
            .into_iter()
            .map(|x| &x - &Rational::from_int(1))
            .collect()
    }

    /// Simple-root coordinates of a weight.
    pub fn root_coords(&self, lam: &[Rational]) -> Vec<Rational> {
        (0..self.rank)
            .map(|i| {
                let mut acc = Rational::from_int(0);
                for (j, x) in lam.iter().enumerate() {
                    acc = acc + &self.cartan_inv[i][j] * x;
                }
                acc
            })
            .collect()
    }

    /// Fundamental-weight coordinates of a root-lattice vector.
    pub fn weight_coords_of_root(&self, c: &[i64]) -> Vec<i64> {
        (0..self.rank)
            .map(|i| (0..self.rank).map(|j| self.cartan[i][j] * c[j]).sum())
            .collect()
    }

    /// Invariant form (lambda|nu) on the weight space.
    pub fn inner(&self, lam: &[Rational], nu: &[Rational]) -> Rational {
        let c = self.root_coords(nu);
        let mut acc = Rational::from_int(0);
        for j in 0..self.rank {
            acc = acc + &c[j] * &self.d[j] * &lam[j];
        }
        acc
    }

    /// <lambda, mu^v> with the coweight given by its coefficients on the
    /// fundamental coweights.
    pub fn pair_coweight(&self, lam: &[Rational], mcheck: &[Rational]) -> Rational {
        let c = self.root_coords(lam);
        let mut acc = Rational::from_int(0);
        for j in 0..self.rank {
            acc = acc + &c[j] * &mcheck[j];
        }
        acc
    }

    /// iota(mu^v) as a (generally rational) weight: coefficient m_i / d_i on
    /// the i-th fundamental weight. Coweight inner products are weight inner
    /// products of the images.
    pub fn coweight_as_weight(&self, mcheck: &[Rational]) -> Vec<Rational> {
        mcheck
            .iter()
            .zip(&self.d)
            .map(|(m, di)| m * di.inv().expect("symmetrizers are nonzero"))
            .collect()
    }

    /// The dual system: transposed Cartan matrix, same node order.
    pub fn dual(&self) -> Self {
        let rank = self.rank;
        let transposed: Vec<Vec<i64>> = (0..rank)
            .map(|i| (0..rank).map(|j| self.cartan[j][i]).collect())
            .collect();
        let letter = self.label.chars().next().expect("labels are nonempty");
        let dual_letter = match letter {
            'B' => 'C',
            'C' => 'B',
            other => other,
        };
        let label = format!("{}{}", dual_letter, rank);
        Self::from_cartan(label, transposed).expect("dual of a supported system is supported")
    }

    /// Dimension of the irreducible module with dominant highest weight
    /// lambda, by the product formula over positive roots.
    pub fn weyl_dimension(&self, lam: &[i64]) -> Rational {
        let lam_rho: Vec<Rational> = lam
            .iter()
            .map(|&x| Rational::from_int(x + 1))
            .collect();
        let rho = self.rho();
        let mut dim = Rational::from_int(1);
        for alpha in &self.positive_roots {
            let aw: Vec<Rational> = self
                .weight_coords_of_root(alpha)
                .into_iter()
                .map(Rational::from_int)
                .collect();
            let num = self.inner(&lam_rho, &aw);
            let den = self.inner(&rho, &aw);
            dim = dim * num * den.inv().expect("rho is regular");
        }
        dim
    }
}
