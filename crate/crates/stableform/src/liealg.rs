//! The Lie algebra su(2)⊕su(2): brackets, structure constants, the
//! Maurer–Cartan differential on left-invariant forms, and frame
//! changes between equivalent orthonormal frames.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exterior::{basis_indices, basis_vector, KForm, Matrix3, Matrix6, Vector6, DIM};
use crate::scalar::{default_tol, Real};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LieAlgebraError {
    #[error("structure constants not antisymmetric in (i,j): defect {0}")]
    NotAntisymmetric(f64),
    #[error("Jacobi identity violated: residual {0}")]
    JacobiViolated(f64),
    #[error("frame-change matrix is singular")]
    SingularFrame,
    #[error("frame-change matrix is not a rotation: defect {0}")]
    NotARotation(f64),
}

/// A six-dimensional Lie algebra given by its structure constants
/// C^k_{ij}, i.e. [e_i, e_j] = Σ_k C^k_{ij} e_k, together with the
/// precomputed differentials of the dual basis 1-forms.
#[derive(Debug, Clone)]
pub struct LieAlgebraSpec<T> {
    /// c[i][j][k] = C^k_{ij}
    c: Box<[[[T; 6]; 6]; 6]>,
    /// d(e^k) as a 2-form, one per basis covector
    d_one_forms: Vec<KForm<T>>,
}

/// Sparse serialization entry: C^k_{ij} = value, 1-based indices.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StructureEntry<T> {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub value: T,
}

impl<T: Real> LieAlgebraSpec<T> {
    /// Builds an algebra from a dense constant array c[i][j][k] =
    /// C^k_{ij}, checking antisymmetry and the Jacobi identity.
    pub fn from_structure_constants(c: [[[T; 6]; 6]; 6]) -> Result<Self, LieAlgebraError> {
        let spec = LieAlgebraSpec { c: Box::new(c), d_one_forms: Vec::new() };
        let anti = spec.antisymmetry_defect();
        if anti > default_tol::<T>() {
            return Err(LieAlgebraError::NotAntisymmetric(anti.as_f64()));
        }
        let jac = spec.jacobi_residual();
        if jac > T::of(1e-12).max(default_tol::<T>()) {
            return Err(LieAlgebraError::JacobiViolated(jac.as_f64()));
        }
        Ok(spec.with_differentials())
    }

    /// Builds an algebra from sparse entries; each (i,j,k,v) sets
    /// C^k_{ij} = v and C^k_{ji} = −v.
    pub fn from_sparse(entries: &[StructureEntry<T>]) -> Result<Self, LieAlgebraError> {
        let mut c = [[[T::zero(); 6]; 6]; 6];
        for e in entries {
            c[e.i - 1][e.j - 1][e.k - 1] = e.value;
            c[e.j - 1][e.i - 1][e.k - 1] = -e.value;
        }
        Self::from_structure_constants(c)
    }

    /// The sparse entries with i < j and nonzero value.
    pub fn to_sparse(&self) -> Vec<StructureEntry<T>> {
        let mut out = Vec::new();
        for i in 0..DIM {
            for j in (i + 1)..DIM {
                for k in 0..DIM {
                    if self.c[i][j][k] != T::zero() {
                        out.push(StructureEntry { i: i + 1, j: j + 1, k: k + 1, value: self.c[i][j][k] });
                    }
                }
            }
        }
        out
    }

    /// The standard su(2)⊕su(2) relations: [e₁,e₂]=e₃, [e₁,e₃]=−e₂,
    /// [e₂,e₃]=e₁ and the same pattern shifted to (e₄,e₅,e₆), with all
    /// cross-factor brackets zero.
    pub fn su2_su2() -> Self {
        let o = T::one();
        let entries = [
            (1, 2, 3, o),
            (1, 3, 2, -o),
            (2, 3, 1, o),
            (4, 5, 6, o),
            (4, 6, 5, -o),
            (5, 6, 4, o),
        ];
        let entries: Vec<_> = entries
            .into_iter()
            .map(|(i, j, k, value)| StructureEntry { i, j, k, value })
            .collect();
        Self::from_sparse(&entries).expect("standard constants satisfy Jacobi")
    }

    fn with_differentials(mut self) -> Self {
        // de^k = −Σ_{i<j} C^k_{ij} e^i ∧ e^j
        self.d_one_forms = (0..DIM)
            .map(|k| {
                let mut d = KForm::zero(2);
                for i in 0..DIM {
                    for j in (i + 1)..DIM {
                        let coeff = self.c[i][j][k];
                        if coeff != T::zero() {
                            d = &d - &KForm::monomial(&[(i + 1) as u8, (j + 1) as u8], coeff);
                        }
                    }
                }
                d
            })
            .collect();
        self
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> T {
        self.c[i - 1][j - 1][k - 1]
    }

    fn antisymmetry_defect(&self) -> T {
        let mut worst = T::zero();
        for i in 0..DIM {
            for j in 0..DIM {
                for k in 0..DIM {
                    worst = worst.max((self.c[i][j][k] + self.c[j][i][k]).abs());
                }
            }
        }
        worst
    }

    /// Max-norm residual of the Jacobi identity over all basis triples.
    pub fn jacobi_residual(&self) -> T {
        let mut worst = T::zero();
        for i in 0..DIM {
            for j in 0..DIM {
                for k in 0..DIM {
                    let x = basis_vector(i + 1);
                    let y = basis_vector(j + 1);
                    let z = basis_vector(k + 1);
                    let cycle = self.bracket(&self.bracket(&x, &y), &z)
                        + self.bracket(&self.bracket(&y, &z), &x)
                        + self.bracket(&self.bracket(&z, &x), &y);
                    worst = worst.max(cycle.amax());
                }
            }
        }
        worst
    }

    /// The bracket [X, Y], extended bilinearly from the basis.
    pub fn bracket(&self, x: &Vector6<T>, y: &Vector6<T>) -> Vector6<T> {
        let mut out = Vector6::zeros();
        for i in 0..DIM {
            let xi = x[i];
            if xi == T::zero() {
                continue;
            }
            for j in 0..DIM {
                let yj = y[j];
                if yj == T::zero() {
                    continue;
                }
                let w = xi * yj;
                for k in 0..DIM {
                    let ck = self.c[i][j][k];
                    if ck != T::zero() {
                        out[k] += w * ck;
                    }
                }
            }
        }
        out
    }

    /// The Maurer–Cartan differential of a left-invariant form,
    /// extended from de^k = −Σ C^k_{ij} e^i∧e^j as a graded
    /// derivation.  Raises degree by one; requires degree ≤ 5.
    pub fn mc_differential(&self, alpha: &KForm<T>) -> KForm<T> {
        let k = alpha.degree();
        assert!(k <= 5, "differential of a top form is not representable");
        let mut out = KForm::zero(k + 1);
        for (rank, subset) in basis_indices(k).iter().enumerate() {
            let coeff = alpha.coeffs()[rank];
            if coeff == T::zero() {
                continue;
            }
            // d(e^{S}) = Σ_pos (−1)^pos d(e^{S[pos]}) ∧ e^{S∖S[pos]}
            for (pos, &idx) in subset.iter().enumerate() {
                let rest: Vec<u8> = subset.iter().copied().filter(|&r| r != idx).collect();
                let mut term = self.d_one_forms[(idx - 1) as usize].clone();
                if !rest.is_empty() {
                    term = term.wedge(&KForm::monomial(&rest, T::one()));
                }
                let signed = if pos % 2 == 1 { -coeff } else { coeff };
                out = &out + &term.scale(signed);
            }
        }
        out
    }

    /// Reference implementation of the differential by the alternating
    /// sum dα(X₀,…,X_k) = Σ_{i<j} (−1)^{i+j} α([X_i,X_j], …); kept as
    /// an independent cross-check for the derivation-based path.
    pub fn brute_force_differential(&self, alpha: &KForm<T>) -> KForm<T> {
        let k = alpha.degree();
        assert!(k <= 5, "differential of a top form is not representable");
        let mut coeffs = Vec::with_capacity(basis_indices(k + 1).len());
        for subset in basis_indices(k + 1) {
            let args: Vec<Vector6<T>> =
                subset.iter().map(|&i| basis_vector(i as usize)).collect();
            let mut value = T::zero();
            for i in 0..args.len() {
                for j in (i + 1)..args.len() {
                    let mut rest: Vec<Vector6<T>> = vec![self.bracket(&args[i], &args[j])];
                    for (p, v) in args.iter().enumerate() {
                        if p != i && p != j {
                            rest.push(*v);
                        }
                    }
                    let term = alpha.eval(&rest);
                    if (i + j) % 2 == 1 {
                        value -= term;
                    } else {
                        value += term;
                    }
                }
            }
            coeffs.push(value);
        }
        KForm::from_coeffs(k + 1, coeffs).expect("sized by basis table")
    }
}

/// An invertible change of frame; columns of the matrix are the new
/// frame vectors expressed in the old coordinates.
#[derive(Debug, Clone)]
pub struct FrameChange<T> {
    p: Matrix6<T>,
    p_inv: Matrix6<T>,
}

impl<T: Real> FrameChange<T> {
    /// General invertible frame change.
    pub fn new(p: Matrix6<T>) -> Result<Self, LieAlgebraError> {
        let p_inv = p.try_inverse().ok_or(LieAlgebraError::SingularFrame)?;
        Ok(FrameChange { p, p_inv })
    }

    /// Orientation- and metric-preserving frame change: P must be
    /// orthogonal with determinant +1.
    pub fn rotation(p: Matrix6<T>) -> Result<Self, LieAlgebraError> {
        let defect = (p.transpose() * p - Matrix6::identity()).amax();
        let tol = default_tol::<T>();
        if defect > tol || (p.determinant() - T::one()).abs() > tol {
            return Err(LieAlgebraError::NotARotation(defect.as_f64()));
        }
        Ok(FrameChange { p, p_inv: p.transpose() })
    }

    /// The block-diagonal change diag(E, R) acting only on the second
    /// su(2) factor; R must be a 3×3 rotation.
    pub fn second_factor(r: &Matrix3<T>) -> Result<Self, LieAlgebraError> {
        let mut p = Matrix6::identity();
        for i in 0..3 {
            for j in 0..3 {
                p[(3 + i, 3 + j)] = r[(i, j)];
            }
        }
        Self::rotation(p)
    }

    pub fn identity() -> Self {
        FrameChange { p: Matrix6::identity(), p_inv: Matrix6::identity() }
    }

    pub fn matrix(&self) -> &Matrix6<T> {
        &self.p
    }

    pub fn inverse_matrix(&self) -> &Matrix6<T> {
        &self.p_inv
    }

    /// Maps a coordinate vector to the corresponding combination of
    /// new frame vectors, expressed in the old coordinates; in
    /// particular `apply_vector(e_j)` is the j-th new frame vector.
    pub fn apply_vector(&self, v: &Vector6<T>) -> Vector6<T> {
        self.p * v
    }

    /// Pullback of a form to the new frame: the coefficients of α in
    /// the frame u_j = P e_j.
    pub fn apply_form(&self, alpha: &KForm<T>) -> KForm<T> {
        let k = alpha.degree();
        let cols: Vec<Vector6<T>> = (0..DIM).map(|j| self.p.column(j).into_owned()).collect();
        let mut coeffs = Vec::with_capacity(basis_indices(k).len());
        for subset in basis_indices(k) {
            let args: Vec<Vector6<T>> =
                subset.iter().map(|&i| cols[(i - 1) as usize]).collect();
            coeffs.push(alpha.eval(&args));
        }
        KForm::from_coeffs(k, coeffs).expect("sized by basis table")
    }

    /// An operator (1,1-tensor) in the new frame: P⁻¹ T P.
    pub fn apply_operator(&self, op: &Matrix6<T>) -> Matrix6<T> {
        self.p_inv * op * self.p
    }

    /// A bilinear form (0,2-tensor) in the new frame: Pᵀ B P.
    pub fn apply_bilinear(&self, b: &Matrix6<T>) -> Matrix6<T> {
        self.p.transpose() * b * self.p
    }

    /// Structure constants of the same algebra in the new frame.
    pub fn apply_algebra(&self, alg: &LieAlgebraSpec<T>) -> Result<LieAlgebraSpec<T>, LieAlgebraError> {
        let mut c = [[[T::zero(); 6]; 6]; 6];
        for (i, ci) in c.iter_mut().enumerate() {
            for (j, cij) in ci.iter_mut().enumerate() {
                let ui = self.p.column(i).into_owned();
                let uj = self.p.column(j).into_owned();
                let br = self.p_inv * alg.bracket(&ui, &uj);
                for (k, entry) in cij.iter_mut().enumerate() {
                    *entry = br[k];
                }
            }
        }
        LieAlgebraSpec::from_structure_constants(c)
    }
}

/// Form matrix of a 2-form: M_{ij} = ω(e_i, e_j), so ω(X,Y) = XᵀMY.
pub fn two_form_matrix<T: Real>(omega: &KForm<T>) -> Matrix6<T> {
    assert_eq!(omega.degree(), 2, "needs a 2-form");
    let mut m = Matrix6::zeros();
    for (rank, s) in basis_indices(2).iter().enumerate() {
        let c = omega.coeffs()[rank];
        let (i, j) = ((s[0] - 1) as usize, (s[1] - 1) as usize);
        m[(i, j)] = c;
        m[(j, i)] = -c;
    }
    m
}

/// 2-form with the given form matrix (antisymmetric part is used).
pub fn two_form_from_matrix<T: Real>(m: &Matrix6<T>) -> KForm<T> {
    let mut coeffs = Vec::with_capacity(15);
    let half = T::of(0.5);
    for s in basis_indices(2) {
        let (i, j) = ((s[0] - 1) as usize, (s[1] - 1) as usize);
        coeffs.push((m[(i, j)] - m[(j, i)]) * half);
    }
    KForm::from_coeffs(2, coeffs).expect("sized by basis table")
}

/// Places a 3×3 block into a zero 6×6 matrix at the given corner
/// (row, col offsets are 0 or 3).
pub fn block6<T: Real>(
    top_left: &Matrix3<T>,
    top_right: &Matrix3<T>,
    bottom_left: &Matrix3<T>,
    bottom_right: &Matrix3<T>,
) -> Matrix6<T> {
    let mut m = Matrix6::zeros();
    for i in 0..3 {
        for j in 0..3 {
            m[(i, j)] = top_left[(i, j)];
            m[(i, j + 3)] = top_right[(i, j)];
            m[(i + 3, j)] = bottom_left[(i, j)];
            m[(i + 3, j + 3)] = bottom_right[(i, j)];
        }
    }
    m
}

/// The four 3×3 blocks of a 6×6 matrix, in reading order.
pub fn blocks_of<T: Real>(m: &Matrix6<T>) -> [Matrix3<T>; 4] {
    let sub = |r: usize, c: usize| Matrix3::from_fn(|i, j| m[(r + i, c + j)]);
    [sub(0, 0), sub(0, 3), sub(3, 0), sub(3, 3)]
}
