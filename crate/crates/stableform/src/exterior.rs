//! Dense exterior algebra over a fixed six-dimensional real vector space.
//!
//! A `KForm` stores its coefficients over the lexicographic basis of
//! wedge monomials e^{i₁…i_k}, i₁<…<i_k, with 1-based indices, so the
//! degree-k coefficient vector has length C(6,k).  The volume form
//! e^{123456} fixes the isomorphism `dual_iso_a` between 5-forms and
//! vectors that the Hitchin construction relies on.

use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use nalgebra as na;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scalar::Real;

/// Dimension of the underlying vector space.
pub const DIM: usize = 6;

/// C(6,k) for k = 0..=6: the basis size in each degree.
pub const BASIS_SIZE: [usize; 7] = [1, 6, 15, 20, 15, 6, 1];

pub type Vector6<T> = na::SVector<T, 6>;
pub type Matrix6<T> = na::SMatrix<T, 6, 6>;
pub type Matrix3<T> = na::SMatrix<T, 3, 3>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExteriorError {
    #[error("form degree {0} is outside 0..=6")]
    DegreeOutOfRange(usize),
    #[error("degree {degree} needs {want} coefficients, got {got}")]
    CoefficientLength { degree: usize, want: usize, got: usize },
}

/// Lexicographic subset tables: `subsets[k][r]` is the r-th increasing
/// k-tuple of indices 1..=6, and `rank_of_mask` inverts the bitmask of
/// a tuple back to its rank within its degree.
struct BasisTables {
    subsets: [Vec<Vec<u8>>; 7],
    masks: [Vec<u8>; 7],
    rank_of_mask: [usize; 64],
}

fn k_subsets(k: usize) -> Vec<Vec<u8>> {
    fn rec(start: u8, k: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..=DIM as u8 {
            cur.push(i);
            rec(i + 1, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, k, &mut Vec::new(), &mut out);
    out
}

fn mask_of(indices: &[u8]) -> u8 {
    indices.iter().fold(0u8, |m, &i| m | 1 << (i - 1))
}

fn tables() -> &'static BasisTables {
    static TABLES: OnceLock<BasisTables> = OnceLock::new();
    TABLES.get_or_init(|| {
        let mut subsets: [Vec<Vec<u8>>; 7] = Default::default();
        let mut masks: [Vec<u8>; 7] = Default::default();
        let mut rank_of_mask = [0usize; 64];
        for (k, slot) in subsets.iter_mut().enumerate() {
            *slot = k_subsets(k);
            for (rank, s) in slot.iter().enumerate() {
                let m = mask_of(s);
                masks[k].push(m);
                rank_of_mask[m as usize] = rank;
            }
            debug_assert_eq!(slot.len(), BASIS_SIZE[k]);
        }
        BasisTables { subsets, masks, rank_of_mask }
    })
}

/// The increasing index tuples of degree `k` in lexicographic order.
pub fn basis_indices(degree: usize) -> &'static [Vec<u8>] {
    assert!(degree <= DIM, "degree out of range");
    &tables().subsets[degree]
}

/// Rank of a sorted index tuple within its degree.
pub fn basis_rank(indices: &[u8]) -> usize {
    debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
    tables().rank_of_mask[mask_of(indices) as usize]
}

/// Parity of the permutation that merges two disjoint increasing
/// tuples into one increasing tuple; true means odd (sign −1).
fn merge_parity(left: &[u8], right: &[u8]) -> bool {
    let mut inversions = 0usize;
    for &a in left {
        for &b in right {
            if a > b {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 1
}

/// Alternating k-form with dense coefficients over the lexicographic
/// basis of its degree.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "KFormDto<T>", into = "KFormDto<T>")]
#[serde(bound(serialize = "T: Serialize + Clone", deserialize = "T: Deserialize<'de> + Real"))]
pub struct KForm<T> {
    degree: usize,
    coeffs: Vec<T>,
}

/// Serialization mirror: `{"degree": k, "coeffs": [...]}` with the
/// coefficient vector in lexicographic basis order.
#[derive(Serialize, Deserialize)]
struct KFormDto<T> {
    degree: usize,
    coeffs: Vec<T>,
}

impl<T: Real> TryFrom<KFormDto<T>> for KForm<T> {
    type Error = ExteriorError;
    fn try_from(dto: KFormDto<T>) -> Result<Self, ExteriorError> {
        KForm::from_coeffs(dto.degree, dto.coeffs)
    }
}

impl<T: Clone> From<KForm<T>> for KFormDto<T> {
    fn from(f: KForm<T>) -> Self {
        KFormDto { degree: f.degree, coeffs: f.coeffs }
    }
}

impl<T: Real> KForm<T> {
    /// The zero form of the given degree.
    pub fn zero(degree: usize) -> Self {
        assert!(degree <= DIM, "degree out of range");
        KForm { degree, coeffs: vec![T::zero(); BASIS_SIZE[degree]] }
    }

    /// Builds a form from its lexicographic coefficient vector.
    pub fn from_coeffs(degree: usize, coeffs: Vec<T>) -> Result<Self, ExteriorError> {
        if degree > DIM {
            return Err(ExteriorError::DegreeOutOfRange(degree));
        }
        if coeffs.len() != BASIS_SIZE[degree] {
            return Err(ExteriorError::CoefficientLength {
                degree,
                want: BASIS_SIZE[degree],
                got: coeffs.len(),
            });
        }
        Ok(KForm { degree, coeffs })
    }

    /// The basis monomial for a tuple of distinct indices, with the
    /// sign produced by sorting it (so `monomial(&[2,1], c)` is
    /// −c·e^{12}).
    pub fn monomial(indices: &[u8], coeff: T) -> Self {
        assert!(indices.iter().all(|&i| (1..=DIM as u8).contains(&i)), "index out of range");
        let mut sorted = indices.to_vec();
        let mut sign_flip = false;
        // insertion sort, tracking swap parity
        for i in 1..sorted.len() {
            let mut j = i;
            while j > 0 && sorted[j - 1] > sorted[j] {
                sorted.swap(j - 1, j);
                sign_flip = !sign_flip;
                j -= 1;
            }
        }
        assert!(sorted.windows(2).all(|w| w[0] < w[1]), "repeated index");
        let mut f = KForm::zero(sorted.len());
        f.coeffs[basis_rank(&sorted)] = if sign_flip { -coeff } else { coeff };
        f
    }

    /// The volume form e^{123456}.
    pub fn volume() -> Self {
        KForm::monomial(&[1, 2, 3, 4, 5, 6], T::one())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of the monomial for a sorted index tuple.
    pub fn coeff(&self, indices: &[u8]) -> T {
        assert_eq!(indices.len(), self.degree, "tuple length must match degree");
        self.coeffs[basis_rank(indices)]
    }

    pub fn is_zero(&self, tol: T) -> bool {
        self.coeffs.iter().all(|c| c.abs() <= tol)
    }

    /// Largest coefficient magnitude.
    pub fn max_abs(&self) -> T {
        self.coeffs.iter().fold(T::zero(), |m, c| m.max(c.abs()))
    }

    /// Euclidean norm of the coefficient vector.
    pub fn norm(&self) -> T {
        self.coeffs.iter().fold(T::zero(), |s, c| s + *c * *c).sqrt()
    }

    /// Coefficient-wise inner product (basis monomials orthonormal).
    pub fn dot(&self, rhs: &Self) -> T {
        assert_eq!(self.degree, rhs.degree, "degree mismatch");
        self.coeffs.iter().zip(&rhs.coeffs).fold(T::zero(), |s, (a, b)| s + *a * *b)
    }

    pub fn scale(&self, s: T) -> Self {
        KForm { degree: self.degree, coeffs: self.coeffs.iter().map(|c| *c * s).collect() }
    }

    /// Wedge product; degrees must sum to at most six.
    pub fn wedge(&self, rhs: &Self) -> Self {
        let (p, q) = (self.degree, rhs.degree);
        assert!(p + q <= DIM, "wedge degree {} + {} exceeds 6", p, q);
        let tb = tables();
        let mut out = KForm::zero(p + q);
        for (ra, sa) in tb.subsets[p].iter().enumerate() {
            let a = self.coeffs[ra];
            if a == T::zero() {
                continue;
            }
            let ma = tb.masks[p][ra];
            for (rb, sb) in tb.subsets[q].iter().enumerate() {
                let b = rhs.coeffs[rb];
                if b == T::zero() {
                    continue;
                }
                let mb = tb.masks[q][rb];
                if ma & mb != 0 {
                    continue;
                }
                let term = a * b;
                let rank = tb.rank_of_mask[(ma | mb) as usize];
                if merge_parity(sa, sb) {
                    out.coeffs[rank] -= term;
                } else {
                    out.coeffs[rank] += term;
                }
            }
        }
        out
    }

    /// Interior product i_X: contraction with a vector in the first
    /// slot; an antiderivation of degree −1.
    pub fn interior(&self, x: &Vector6<T>) -> Self {
        assert!(self.degree >= 1, "interior product needs degree >= 1");
        let tb = tables();
        let mut out = KForm::zero(self.degree - 1);
        for (r, s) in tb.subsets[self.degree].iter().enumerate() {
            let c = self.coeffs[r];
            if c == T::zero() {
                continue;
            }
            let m = tb.masks[self.degree][r];
            for (pos, &i) in s.iter().enumerate() {
                let xi = x[(i - 1) as usize];
                if xi == T::zero() {
                    continue;
                }
                let rest = tb.rank_of_mask[(m & !(1 << (i - 1))) as usize];
                let term = c * xi;
                if pos % 2 == 1 {
                    out.coeffs[rest] -= term;
                } else {
                    out.coeffs[rest] += term;
                }
            }
        }
        out
    }

    /// Evaluates the form on `degree` vectors.
    pub fn eval(&self, vectors: &[Vector6<T>]) -> T {
        assert_eq!(vectors.len(), self.degree, "need one vector per degree");
        let tb = tables();
        let mut acc = T::zero();
        for (r, s) in tb.subsets[self.degree].iter().enumerate() {
            let c = self.coeffs[r];
            if c == T::zero() {
                continue;
            }
            acc += c * minor_det(vectors, s);
        }
        acc
    }
}

/// Determinant of the k×k minor picking rows `indices` (1-based) of the
/// matrix whose columns are the given vectors.
fn minor_det<T: Real>(vectors: &[Vector6<T>], indices: &[u8]) -> T {
    let entry = |r: usize, c: usize| vectors[c][(indices[r] - 1) as usize];
    match indices.len() {
        0 => T::one(),
        1 => entry(0, 0),
        2 => entry(0, 0) * entry(1, 1) - entry(0, 1) * entry(1, 0),
        3 => na::SMatrix::<T, 3, 3>::from_fn(entry).determinant(),
        4 => na::SMatrix::<T, 4, 4>::from_fn(entry).determinant(),
        5 => na::SMatrix::<T, 5, 5>::from_fn(entry).determinant(),
        6 => na::SMatrix::<T, 6, 6>::from_fn(entry).determinant(),
        _ => unreachable!("degree bounded by 6"),
    }
}

/// Inverse of Y ↦ i_Y(e^{123456}) on 5-forms: recovers the unique
/// vector whose contraction of the volume form is the given 5-form.
pub fn dual_iso_a<T: Real>(phi: &KForm<T>) -> Vector6<T> {
    assert_eq!(phi.degree(), 5, "dual isomorphism takes a 5-form");
    // Lexicographic 5-form ranks complement indices in reverse order:
    // rank 0 = e^{12345} pairs with e_6, ..., rank 5 = e^{23456} with e_1,
    // and i_{e_j} Vol carries sign (−1)^{j−1}.
    Vector6::from_fn(|j, _| {
        let c = phi.coeffs[5 - j];
        if j % 2 == 0 {
            c
        } else {
            -c
        }
    })
}

/// The 5-form i_Y(e^{123456}); right inverse of [`dual_iso_a`].
pub fn five_form_of<T: Real>(y: &Vector6<T>) -> KForm<T> {
    KForm::volume().interior(y)
}

impl<T: Real> Add for &KForm<T> {
    type Output = KForm<T>;
    fn add(self, rhs: &KForm<T>) -> KForm<T> {
        assert_eq!(self.degree, rhs.degree, "degree mismatch");
        KForm {
            degree: self.degree,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| *a + *b).collect(),
        }
    }
}

impl<T: Real> Sub for &KForm<T> {
    type Output = KForm<T>;
    fn sub(self, rhs: &KForm<T>) -> KForm<T> {
        assert_eq!(self.degree, rhs.degree, "degree mismatch");
        KForm {
            degree: self.degree,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| *a - *b).collect(),
        }
    }
}

impl<T: Real> Neg for &KForm<T> {
    type Output = KForm<T>;
    fn neg(self) -> KForm<T> {
        self.scale(-T::one())
    }
}

impl<T: Real> Mul<T> for &KForm<T> {
    type Output = KForm<T>;
    fn mul(self, s: T) -> KForm<T> {
        self.scale(s)
    }
}

impl<T: Real> Mul<T> for KForm<T> {
    type Output = KForm<T>;
    fn mul(mut self, s: T) -> KForm<T> {
        for c in &mut self.coeffs {
            *c *= s;
        }
        self
    }
}

/// Unit basis vector e_i (1-based).
pub fn basis_vector<T: Real>(i: usize) -> Vector6<T> {
    assert!((1..=DIM).contains(&i), "basis index out of range");
    let mut v = Vector6::zeros();
    v[i - 1] = T::one();
    v
}

/// Row-major nested-array view of a 6×6 matrix, for JSON payloads.
pub fn matrix_rows<T: Real>(m: &Matrix6<T>) -> Vec<Vec<T>> {
    (0..6).map(|i| (0..6).map(|j| m[(i, j)]).collect()).collect()
}

/// Parses a row-major nested array back into a 6×6 matrix.
pub fn matrix_from_rows<T: Real>(rows: &[Vec<T>]) -> Option<Matrix6<T>> {
    if rows.len() != 6 || rows.iter().any(|r| r.len() != 6) {
        return None;
    }
    Some(Matrix6::from_fn(|i, j| rows[i][j]))
}

#[cfg(test)]
mod tests {
    use super::*;

    type F = KForm<f64>;

    #[test]
    fn basis_sizes_and_order() {
        assert_eq!(basis_indices(2).len(), 15);
        assert_eq!(basis_indices(3).len(), 20);
        // lexicographic, not bitmask, order
        assert_eq!(basis_indices(2)[0], vec![1, 2]);
        assert_eq!(basis_indices(2)[4], vec![1, 6]);
        assert_eq!(basis_indices(2)[5], vec![2, 3]);
        assert_eq!(basis_indices(3)[0], vec![1, 2, 3]);
        assert_eq!(basis_indices(3)[19], vec![4, 5, 6]);
        for k in 0..=6 {
            for s in basis_indices(k) {
                assert_eq!(basis_rank(s), basis_indices(k).iter().position(|t| t == s).unwrap());
            }
        }
    }

    #[test]
    fn wedge_of_basis_one_forms() {
        let e1 = F::monomial(&[1], 1.0);
        let e2 = F::monomial(&[2], 1.0);
        let e12 = e1.wedge(&e2);
        assert_eq!(e12.coeff(&[1, 2]), 1.0);
        assert_eq!(e12.norm(), 1.0);
        let e21 = e2.wedge(&e1);
        assert_eq!(e21.coeff(&[1, 2]), -1.0);
    }

    #[test]
    fn monomial_sorts_with_sign() {
        assert_eq!(F::monomial(&[2, 1], 1.0).coeff(&[1, 2]), -1.0);
        assert_eq!(F::monomial(&[3, 1, 2], 2.0).coeff(&[1, 2, 3]), 2.0);
    }

    #[test]
    fn wedge_graded_anticommutativity() {
        // α∧β = (−1)^{pq} β∧α on random dense forms
        let a = F::from_coeffs(2, (0..15).map(|i| (i as f64 * 0.37).sin()).collect()).unwrap();
        let b = F::from_coeffs(3, (0..20).map(|i| (i as f64 * 0.53).cos()).collect()).unwrap();
        let ab = a.wedge(&b);
        let ba = b.wedge(&a);
        assert!((&ab - &ba).max_abs() <= 1e-15);

        let c = F::from_coeffs(1, (0..6).map(|i| 1.0 + i as f64).collect()).unwrap();
        let d = F::from_coeffs(3, (0..20).map(|i| (i as f64 * 0.71).sin()).collect()).unwrap();
        let cd = c.wedge(&d);
        let dc = d.wedge(&c);
        assert!((&cd - &dc.scale(-1.0)).max_abs() <= 1e-15);
    }

    #[test]
    fn interior_basis_examples() {
        let e123 = F::monomial(&[1, 2, 3], 1.0);
        let i1 = e123.interior(&basis_vector(1));
        assert_eq!(i1.coeff(&[2, 3]), 1.0);
        let i2 = e123.interior(&basis_vector(2));
        assert_eq!(i2.coeff(&[1, 3]), -1.0);
        let i3 = e123.interior(&basis_vector(3));
        assert_eq!(i3.coeff(&[1, 2]), 1.0);
        let i4 = e123.interior(&basis_vector(4));
        assert!(i4.is_zero(0.0));
    }

    #[test]
    fn interior_is_an_antiderivation() {
        // i_X(α∧β) = (i_Xα)∧β + (−1)^p α∧(i_Xβ)
        let a = F::from_coeffs(2, (0..15).map(|i| (i as f64 * 0.41).sin()).collect()).unwrap();
        let b = F::from_coeffs(2, (0..15).map(|i| (i as f64 * 0.29).cos()).collect()).unwrap();
        let x = Vector6::from_fn(|i, _| (i as f64 - 2.5) * 0.8);
        let lhs = a.wedge(&b).interior(&x);
        let rhs = &a.interior(&x).wedge(&b) + &a.wedge(&b.interior(&x));
        assert!((&lhs - &rhs).max_abs() <= 1e-14);
    }

    #[test]
    fn interior_squares_to_zero() {
        let a = F::from_coeffs(4, (0..15).map(|i| (i as f64 * 0.61).sin()).collect()).unwrap();
        let x = Vector6::from_fn(|i, _| (i as f64 * 1.3).cos());
        let twice = a.interior(&x).interior(&x);
        assert!(twice.max_abs() <= 1e-15);
    }

    #[test]
    fn dual_iso_round_trip() {
        for i in 1..=6 {
            let y = basis_vector::<f64>(i);
            assert_eq!(dual_iso_a(&five_form_of(&y)), y);
        }
        let y = Vector6::from_fn(|i, _| (i as f64 + 1.0) * 0.3 - 1.0);
        let back = dual_iso_a(&five_form_of(&y));
        assert!((back - y).amax() <= 1e-15);
    }

    #[test]
    fn dual_iso_basis_table() {
        // i_Y Vol for Y = e_j hits the complementary 5-form with
        // alternating sign; the inverse must read that back.
        let phi = F::monomial(&[2, 3, 4, 5, 6], 1.0);
        assert_eq!(dual_iso_a(&phi), basis_vector(1));
        let phi = F::monomial(&[1, 3, 4, 5, 6], 1.0);
        assert_eq!(dual_iso_a(&phi), -basis_vector::<f64>(2));
        let phi = F::monomial(&[1, 2, 3, 4, 5], 1.0);
        assert_eq!(dual_iso_a(&phi), -basis_vector::<f64>(6));
    }

    #[test]
    fn eval_matches_minor_determinants() {
        let e12 = F::monomial(&[1, 2], 1.0);
        let u = Vector6::from_fn(|i, _| if i == 0 { 2.0 } else { 0.0 });
        let v = Vector6::from_fn(|i, _| if i == 1 { 3.0 } else { 0.0 });
        assert_eq!(e12.eval(&[u, v]), 6.0);
        assert_eq!(e12.eval(&[v, u]), -6.0);

        let vol = F::volume();
        let basis: Vec<_> = (1..=6).map(basis_vector::<f64>).collect();
        assert_eq!(vol.eval(&basis), 1.0);
    }

    #[test]
    fn eval_agrees_with_coefficients() {
        let a = F::from_coeffs(3, (0..20).map(|i| (i as f64 * 0.17).sin()).collect()).unwrap();
        for (r, s) in basis_indices(3).iter().enumerate() {
            let vecs: Vec<_> = s.iter().map(|&i| basis_vector::<f64>(i as usize)).collect();
            assert_eq!(a.eval(&vecs), a.coeffs()[r]);
        }
    }

    #[test]
    fn serde_round_trip() {
        let a = F::from_coeffs(2, (0..15).map(|i| i as f64 * 0.5).collect()).unwrap();
        let json = serde_json::to_string(&a).unwrap();
        let back: F = serde_json::from_str(&json).unwrap();
        assert_eq!(a, back);
        // wrong length rejected
        let bad = r#"{"degree": 2, "coeffs": [1.0, 2.0]}"#;
        assert!(serde_json::from_str::<F>(bad).is_err());
    }

    #[test]
    fn f32_instantiation_works() {
        let e1 = KForm::<f32>::monomial(&[1], 1.0);
        let e2 = KForm::<f32>::monomial(&[2], 1.0);
        assert_eq!(e1.wedge(&e2).coeff(&[1, 2]), 1.0f32);
    }
}
