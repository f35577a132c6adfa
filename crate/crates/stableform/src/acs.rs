//! Orthogonal almost complex structures on su(2)⊕su(2) and the two
//! maps between them that the stable-form construction provides: α
//! sends an orthogonal structure I to the Hitchin structure J_I of
//! dω_I, and π retracts a general structure back to the nearest
//! g-orthogonal one by polar decomposition.
//!
//! An orthogonal structure is stored by its independent blocks: with
//! the Killing–Cartan metric normalized to the identity,
//! I = [[A, B], [−Bᵀ, C]] where A, C are 3×3 skew matrices with
//! parameter vectors (a₁,a₂,a₃), (c₁,c₂,c₃), and x = a₁²+a₂²+a₃²
//! controls everything: τ(dω_I) = 4x−3, so x < 3/4 is exactly the
//! region where α is defined.

use nalgebra as na;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exterior::{matrix_from_rows, matrix_rows, KForm, Matrix3, Matrix6, Vector6};
use crate::hitchin::{hitchin_k, tau_from_k};
use crate::liealg::{
    block6, blocks_of, two_form_from_matrix, two_form_matrix, FrameChange, LieAlgebraSpec,
};
use crate::scalar::{default_tol, Real};

/// Retry cap used by the seeded sampling helpers.
pub const DEFAULT_MAX_TRIES: usize = 100_000;

/// Guard band below the x = 3/4 boundary: α divides by √(−τ), which
/// vanishes there, so structures closer than this are rejected.
pub fn ao_minus_guard<T: Real>() -> T {
    T::of(1e-9)
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AcsError {
    #[error("matrix is not skew-symmetric (defect {defect:e})")]
    NotSkew { defect: f64 },
    #[error("matrix does not square to minus identity (defect {defect:e})")]
    NotComplexStructure { defect: f64 },
    #[error("orientation is not positive (indicator {indicator:e})")]
    WrongOrientation { indicator: f64 },
    #[error("x = a1^2+a2^2+a3^2 = {x} is not below the bound 3/4")]
    NotInAoMinus { x: f64 },
    #[error("sampling exhausted after {tries} tries")]
    SamplingExhausted { tries: usize },
    #[error("skew part is numerically singular (min eigenvalue {min_eigenvalue:e})")]
    SingularSkewPart { min_eigenvalue: f64 },
}

/// 3×3 skew matrix [[0,p,q],[−p,0,r],[−q,−r,0]] from (p,q,r).
pub fn skew3<T: Real>(p: [T; 3]) -> Matrix3<T> {
    Matrix3::new(
        T::zero(),
        p[0],
        p[1],
        -p[0],
        T::zero(),
        p[2],
        -p[1],
        -p[2],
        T::zero(),
    )
}

/// The cofactor matrix: entry (i,j) is (−1)^{i+j} times the minor
/// obtained by deleting row i and column j.  Its transpose is the
/// adjugate, so M·cofactor3(M)ᵀ = det(M)·E; for the skew and symmetric
/// blocks appearing here the two coincide.
pub fn cofactor3<T: Real>(m: &Matrix3<T>) -> Matrix3<T> {
    let minor = |i: usize, j: usize| {
        let mut rows = [0usize; 2];
        let mut cols = [0usize; 2];
        let mut ri = 0;
        let mut ci = 0;
        for k in 0..3 {
            if k != i {
                rows[ri] = k;
                ri += 1;
            }
            if k != j {
                cols[ci] = k;
                ci += 1;
            }
        }
        m[(rows[0], cols[0])] * m[(rows[1], cols[1])]
            - m[(rows[0], cols[1])] * m[(rows[1], cols[0])]
    };
    Matrix3::from_fn(|i, j| {
        let v = minor(i, j);
        if (i + j) % 2 == 1 {
            -v
        } else {
            v
        }
    })
}

/// A g-orthogonal almost complex structure, stored by its independent
/// blocks.  Always positively oriented (det B ≤ 0 in the convention
/// fixed by I₀, whose B block is −E).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "OrthogonalAcsDto<T>", into = "OrthogonalAcsDto<T>")]
#[serde(bound(
    serialize = "T: Serialize + Real",
    deserialize = "T: Deserialize<'de> + Real"
))]
pub struct OrthogonalAcs<T> {
    a: [T; 3],
    b: Matrix3<T>,
    c: [T; 3],
}

#[derive(Serialize, Deserialize)]
struct OrthogonalAcsDto<T> {
    #[serde(rename = "A")]
    a: [T; 3],
    #[serde(rename = "B")]
    b: [[T; 3]; 3],
    #[serde(rename = "C")]
    c: [T; 3],
}

impl<T: Real> TryFrom<OrthogonalAcsDto<T>> for OrthogonalAcs<T> {
    type Error = AcsError;
    fn try_from(dto: OrthogonalAcsDto<T>) -> Result<Self, AcsError> {
        let b = Matrix3::from_fn(|i, j| dto.b[i][j]);
        let candidate = OrthogonalAcs { a: dto.a, b, c: dto.c };
        // blocks may encode something that is not an ACS; re-validate
        OrthogonalAcs::validate(&candidate.matrix())
    }
}

impl<T: Real> From<OrthogonalAcs<T>> for OrthogonalAcsDto<T> {
    fn from(acs: OrthogonalAcs<T>) -> Self {
        let b = &acs.b;
        OrthogonalAcsDto {
            a: acs.a,
            b: [
                [b[(0, 0)], b[(0, 1)], b[(0, 2)]],
                [b[(1, 0)], b[(1, 1)], b[(1, 2)]],
                [b[(2, 0)], b[(2, 1)], b[(2, 2)]],
            ],
            c: acs.c,
        }
    }
}

impl<T: Real> OrthogonalAcs<T> {
    /// The canonical structure I₀ = [[0, −E], [E, 0]].
    pub fn i0() -> Self {
        OrthogonalAcs {
            a: [T::zero(); 3],
            b: -Matrix3::identity(),
            c: [T::zero(); 3],
        }
    }

    /// Accepts a 6×6 matrix iff it is skew, squares to −E, and is
    /// positively oriented, with the default tolerance.
    pub fn validate(m: &Matrix6<T>) -> Result<Self, AcsError> {
        Self::validate_with(m, default_tol::<T>())
    }

    /// [`OrthogonalAcs::validate`] with an explicit tolerance.
    pub fn validate_with(m: &Matrix6<T>, tol: T) -> Result<Self, AcsError> {
        let skew_defect = (m + m.transpose()).amax();
        if skew_defect > tol {
            return Err(AcsError::NotSkew { defect: skew_defect.as_f64() });
        }
        let invol_defect = (m * m + Matrix6::identity()).amax();
        if invol_defect > tol {
            return Err(AcsError::NotComplexStructure { defect: invol_defect.as_f64() });
        }
        let [a_blk, b, _, c_blk] = blocks_of(m);
        // positive orientation in the convention of I₀ (det B = −1);
        // det B = 0 sits on the boundary between the classes and is
        // accepted, matching the usage for integrable structures
        let det_b = b.determinant();
        if det_b > tol {
            return Err(AcsError::WrongOrientation { indicator: det_b.as_f64() });
        }
        Ok(OrthogonalAcs {
            a: [a_blk[(0, 1)], a_blk[(0, 2)], a_blk[(1, 2)]],
            b,
            c: [c_blk[(0, 1)], c_blk[(0, 2)], c_blk[(1, 2)]],
        })
    }

    /// Conjugates I₀ by a rotation: Q I₀ Qᵀ, which is again a valid
    /// positively-oriented orthogonal structure.
    pub fn from_rotation(q: &Matrix6<T>) -> Result<Self, AcsError> {
        let raw = q * Self::i0().matrix() * q.transpose();
        // symmetrize away the roundoff that conjugation introduces
        let m = (raw - raw.transpose()) * T::of(0.5);
        Self::validate(&m)
    }

    /// Draws structures conjugate to I₀ under Haar-distributed
    /// rotations until the constraint is met.
    pub fn sample<R: Rng + ?Sized>(
        rng: &mut R,
        constraint: SampleConstraint<T>,
        max_tries: usize,
    ) -> Result<Self, AcsError> {
        for _ in 0..max_tries {
            let q = haar_rotation(rng);
            let acs = Self::from_rotation(&q)?;
            let x = acs.x();
            let ok = match constraint {
                SampleConstraint::Unrestricted => true,
                SampleConstraint::AoMinus => x < T::of(0.75),
                SampleConstraint::XWindow { lo, hi } => x > lo && x < hi,
            };
            if ok {
                return Ok(acs);
            }
        }
        Err(AcsError::SamplingExhausted { tries: max_tries })
    }

    /// One seeded draw; when the flag is set, rejection-samples until
    /// x < 3/4.
    pub fn sample_seeded(seed: u64, require_ao_minus: bool) -> Result<Self, AcsError> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let constraint = if require_ao_minus {
            SampleConstraint::AoMinus
        } else {
            SampleConstraint::Unrestricted
        };
        Self::sample(&mut rng, constraint, DEFAULT_MAX_TRIES)
    }

    pub fn a_params(&self) -> [T; 3] {
        self.a
    }

    pub fn c_params(&self) -> [T; 3] {
        self.c
    }

    pub fn a_matrix(&self) -> Matrix3<T> {
        skew3(self.a)
    }

    pub fn b_block(&self) -> &Matrix3<T> {
        &self.b
    }

    pub fn c_matrix(&self) -> Matrix3<T> {
        skew3(self.c)
    }

    pub fn det_b(&self) -> T {
        self.b.determinant()
    }

    /// The full 6×6 matrix [[A, B], [−Bᵀ, C]].
    pub fn matrix(&self) -> Matrix6<T> {
        block6(&self.a_matrix(), &self.b, &(-self.b.transpose()), &self.c_matrix())
    }

    /// x = a₁² + a₂² + a₃², the single invariant that controls the
    /// induced stable form: τ(dω_I) = 4x − 3.
    pub fn x(&self) -> T {
        self.a[0] * self.a[0] + self.a[1] * self.a[1] + self.a[2] * self.a[2]
    }

    /// t = √(1 − x).
    pub fn t(&self) -> T {
        (T::one() - self.x()).max(T::zero()).sqrt()
    }

    /// Whether dω_I is of complex type, i.e. x < 3/4 (strictly, by the
    /// numerical guard band).
    pub fn is_ao_minus(&self) -> bool {
        self.x() < T::of(0.75) - ao_minus_guard::<T>()
    }

    /// The 2-form ω_I(X,Y) = g(IX,Y); its form matrix is Iᵀ.
    pub fn omega(&self) -> KForm<T> {
        two_form_from_matrix(&self.matrix().transpose())
    }
}

/// Rejection-sampling constraint for [`OrthogonalAcs::sample`].
#[derive(Debug, Clone, Copy)]
pub enum SampleConstraint<T> {
    Unrestricted,
    /// x < 3/4.
    AoMinus,
    /// lo < x < hi.
    XWindow { lo: T, hi: T },
}

/// Haar-distributed rotation in SO(6): QR of a Gaussian matrix with
/// the R-diagonal sign fix, then a column flip if the determinant is
/// negative.
pub fn haar_rotation<T: Real, R: Rng + ?Sized>(rng: &mut R) -> Matrix6<T> {
    let gauss = Matrix6::from_fn(|_, _| {
        let z: f64 = rng.sample(StandardNormal);
        T::of(z)
    });
    let qr = gauss.qr();
    let r = qr.r();
    let mut q = qr.q();
    for i in 0..6 {
        if r[(i, i)] < T::zero() {
            let col = -q.column(i);
            q.set_column(i, &col);
        }
    }
    if q.determinant() < T::zero() {
        let col = -q.column(0);
        q.set_column(0, &col);
    }
    q
}

/// A general (not necessarily orthogonal) almost complex structure.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<T>>", into = "Vec<Vec<T>>")]
#[serde(bound(
    serialize = "T: Serialize + Real",
    deserialize = "T: Deserialize<'de> + Real"
))]
pub struct GeneralAcs<T> {
    m: Matrix6<T>,
}

impl<T: Real> TryFrom<Vec<Vec<T>>> for GeneralAcs<T> {
    type Error = AcsError;
    fn try_from(rows: Vec<Vec<T>>) -> Result<Self, AcsError> {
        let m = matrix_from_rows(&rows).ok_or(AcsError::NotComplexStructure { defect: f64::NAN })?;
        GeneralAcs::from_matrix(&m)
    }
}

impl<T: Real> From<GeneralAcs<T>> for Vec<Vec<T>> {
    fn from(acs: GeneralAcs<T>) -> Self {
        matrix_rows(&acs.m)
    }
}

impl<T: Real> GeneralAcs<T> {
    /// Accepts a matrix iff it squares to −E and is positively
    /// oriented (determinant of an adapted frame (w, Jw) positive).
    pub fn from_matrix(m: &Matrix6<T>) -> Result<Self, AcsError> {
        Self::from_matrix_with(m, default_tol::<T>())
    }

    pub fn from_matrix_with(m: &Matrix6<T>, tol: T) -> Result<Self, AcsError> {
        let invol_defect = (m * m + Matrix6::identity()).amax();
        if invol_defect > tol {
            return Err(AcsError::NotComplexStructure { defect: invol_defect.as_f64() });
        }
        let det = adapted_frame_det(m);
        if det <= T::of(1e-6) {
            return Err(AcsError::WrongOrientation { indicator: det.as_f64() });
        }
        Ok(GeneralAcs { m: *m })
    }

    /// Wraps a matrix that is known (by construction) to be a
    /// positively-oriented almost complex structure.
    pub fn from_matrix_unchecked(m: Matrix6<T>) -> Self {
        GeneralAcs { m }
    }

    pub fn matrix(&self) -> &Matrix6<T> {
        &self.m
    }
}

/// Determinant of an adapted frame (w₁,w₂,w₃,Jw₁,Jw₂,Jw₃) assembled
/// greedily from basis vectors; its sign is the orientation class.
fn adapted_frame_det<T: Real>(m: &Matrix6<T>) -> T {
    let mut picked: Vec<Vector6<T>> = Vec::new();
    let mut span: Vec<Vector6<T>> = Vec::new();
    for cand in 0..6 {
        if picked.len() == 3 {
            break;
        }
        let v = crate::exterior::basis_vector::<T>(cand + 1);
        let mut residual = v;
        for q in &span {
            residual -= q * q.dot(&residual);
        }
        // span(w, Jw) is J-invariant, so among the six basis vectors at
        // least one always sticks out of it by a large margin
        if residual.norm() > T::of(1e-3) {
            picked.push(v);
            for w in [v, m * v] {
                let mut s = w;
                for q in &span {
                    s -= q * q.dot(&s);
                }
                let n = s.norm();
                if n > T::of(1e-9) {
                    span.push(s / n);
                }
            }
        }
    }
    if picked.len() < 3 {
        return T::zero();
    }
    let mut frame = Matrix6::zeros();
    for (idx, w) in picked.iter().enumerate() {
        frame.set_column(idx, w);
        frame.set_column(idx + 3, &(m * w));
    }
    frame.determinant()
}

/// The su(2)⊕su(2) algebra used by the maps below when no explicit one
/// is supplied.
fn standard_algebra<T: Real>() -> LieAlgebraSpec<T> {
    LieAlgebraSpec::su2_su2()
}

/// α: the Hitchin almost complex structure J_I = K(dω_I)/√(−τ) of an
/// orthogonal structure with x < 3/4.
pub fn alpha<T: Real>(i: &OrthogonalAcs<T>) -> Result<GeneralAcs<T>, AcsError> {
    alpha_with(i, &standard_algebra())
}

/// [`alpha`] with the differential taken in an explicit algebra.
pub fn alpha_with<T: Real>(
    i: &OrthogonalAcs<T>,
    alg: &LieAlgebraSpec<T>,
) -> Result<GeneralAcs<T>, AcsError> {
    if !i.is_ao_minus() {
        return Err(AcsError::NotInAoMinus { x: i.x().as_f64() });
    }
    let psi = alg.mc_differential(&i.omega());
    let k = hitchin_k(&psi);
    let tau = tau_from_k(&k);
    let j = k / (-tau).sqrt();
    Ok(GeneralAcs::from_matrix_unchecked(j))
}

/// The 3-form dω_I.
pub fn d_omega<T: Real>(i: &OrthogonalAcs<T>, alg: &LieAlgebraSpec<T>) -> KForm<T> {
    alg.mc_differential(&i.omega())
}

/// Block form of the K operator of dω_I: with starred blocks the
/// cofactor matrices, K = [[E − 2A*, −2B*], [2B*ᵀ, −E + 2C*]].
pub fn k_block_form<T: Real>(i: &OrthogonalAcs<T>) -> Matrix6<T> {
    let two = T::of(2.0);
    let a_star = cofactor3(&i.a_matrix());
    let b_star = cofactor3(i.b_block());
    let c_star = cofactor3(&i.c_matrix());
    let e = Matrix3::identity();
    block6(
        &(e - a_star * two),
        &(-b_star * two),
        &(b_star.transpose() * two),
        &(-e + c_star * two),
    )
}

/// π: polar-decomposition retraction of a general almost complex
/// structure to a g-orthogonal one, π(J) = (−D²)^{−1/2} D with D the
/// skew part of J.
pub fn project_polar<T: Real>(j: &GeneralAcs<T>) -> Result<OrthogonalAcs<T>, AcsError> {
    let m = j.matrix();
    let d = (m - m.transpose()) * T::of(0.5);
    let s = -(d * d);
    let eig = na::SymmetricEigen::new(s);
    let max_ev = eig.eigenvalues.amax();
    let min_ev = eig.eigenvalues.min();
    if min_ev <= max_ev * T::of(1e-12) {
        return Err(AcsError::SingularSkewPart { min_eigenvalue: min_ev.as_f64() });
    }
    let mut inv_sqrt = Matrix6::zeros();
    for k in 0..6 {
        let q = eig.eigenvectors.column(k);
        inv_sqrt += q * q.transpose() / eig.eigenvalues[k].sqrt();
    }
    let raw = inv_sqrt * d;
    let pi = (raw - raw.transpose()) * T::of(0.5);
    OrthogonalAcs::validate(&pi)
}

/// The weight y(x) = (1 − √(1−x))/(x√(1−x)) of the closed-form
/// projection, evaluated by its power series below x = 1e-4 where the
/// direct expression is a 0/0 cancellation.
pub fn projection_weight<T: Real>(x: T) -> T {
    assert!(x >= T::zero() && x < T::one(), "weight needs 0 <= x < 1");
    if x < T::of(1e-4) {
        // central binomial series; both branches agree to 1e-12 at the
        // threshold
        let c = [0.5, 0.375, 0.3125, 0.2734375, 0.24609375, 0.2255859375];
        let mut acc = T::of(c[5]);
        for k in (0..5).rev() {
            acc = acc * x + T::of(c[k]);
        }
        acc
    } else {
        let t = (T::one() - x).sqrt();
        (T::one() - t) / (x * t)
    }
}

/// The rotation block X = (2/√(1−τ))(E + yA*)B* of the projected
/// structure; lies in SO(3).
pub fn so3_rotation_block<T: Real>(i: &OrthogonalAcs<T>) -> Result<Matrix3<T>, AcsError> {
    if !i.is_ao_minus() {
        return Err(AcsError::NotInAoMinus { x: i.x().as_f64() });
    }
    let x = i.x();
    let tau = T::of(4.0) * x - T::of(3.0);
    let prefactor = T::of(2.0) / (T::one() - tau).sqrt();
    let y = projection_weight(x);
    let a_star = cofactor3(&i.a_matrix());
    let b_star = cofactor3(i.b_block());
    Ok((Matrix3::identity() + a_star * y) * b_star * prefactor)
}

/// Closed form of the 2-form ω_J of the projected structure J = π(J_I),
/// as a form matrix in the standard frame:
/// (2/√(1−τ))·[[0, (E+yA*)B*], [−(E+yC*)B*ᵀ, 0]].  Equals the polar
/// projection lowered by the metric, i.e. the transpose of π(α(I)).
pub fn projected_omega_matrix<T: Real>(i: &OrthogonalAcs<T>) -> Result<Matrix6<T>, AcsError> {
    let x_blk = so3_rotation_block(i)?;
    let x = i.x();
    let tau = T::of(4.0) * x - T::of(3.0);
    let prefactor = T::of(2.0) / (T::one() - tau).sqrt();
    let y = projection_weight(x);
    let c_star = cofactor3(&i.c_matrix());
    let b_star = cofactor3(i.b_block());
    let z = (Matrix3::identity() + c_star * y) * b_star.transpose() * prefactor;
    Ok(block6(&Matrix3::zeros(), &x_blk, &(-z), &Matrix3::zeros()))
}

/// The adapted frame (u) = (e₁, e₂, e₃, X-rotated second factor) in
/// which the projected 2-form becomes canonical.
pub fn u_frame<T: Real>(i: &OrthogonalAcs<T>) -> Result<FrameChange<T>, AcsError> {
    let x_blk = so3_rotation_block(i)?;
    // frame vectors are the rows of X: u_{3+i} = Σ_j X_{ij} e_{3+j}
    FrameChange::second_factor(&x_blk.transpose()).map_err(|_| AcsError::NotComplexStructure {
        defect: (x_blk.transpose() * x_blk - Matrix3::identity()).amax().as_f64(),
    })
}

/// The canonical Hermitian data of an orthogonal structure in its
/// adapted frame: the projected 2-form (canonically [[0,E],[−E,0]])
/// and the induced metric g_I.
#[derive(Debug, Clone)]
pub struct HermitianPair<T> {
    /// Form matrix of ω_J in the (u) frame.
    pub omega: Matrix6<T>,
    /// The metric g_I in the (u) frame, from the block formula
    /// [[2t(E − A*/(1+t)), −E + 2A*], [−E + 2A*, 2t(E − A*/(1+t))]].
    pub metric: Matrix6<T>,
    /// The frame change from the standard frame to (u).
    pub frame: FrameChange<T>,
}

/// The induced-metric block formula evaluated from A* and t.
pub fn hermitian_metric_formula<T: Real>(a_star: &Matrix3<T>, t: T) -> Matrix6<T> {
    let e = Matrix3::identity();
    let two_t = T::of(2.0) * t;
    let diag = (e - a_star / (T::one() + t)) * two_t;
    let off = -e + a_star * T::of(2.0);
    block6(&diag, &off, &off, &diag)
}

/// Computes the Hermitian pair (ω_J, g_I) of an orthogonal structure
/// in its adapted frame.  The A* block is frame-invariant under the
/// adapted change, so the formula can be evaluated directly from the
/// standard-frame parameters.
pub fn hermitian_pair<T: Real>(i: &OrthogonalAcs<T>) -> Result<HermitianPair<T>, AcsError> {
    let frame = u_frame(i)?;
    let omega_std = projected_omega_matrix(i)?;
    let omega = frame.apply_bilinear(&omega_std);
    let a_star = cofactor3(&i.a_matrix());
    let metric = hermitian_metric_formula(&a_star, i.t());
    Ok(HermitianPair { omega, metric, frame })
}

/// The induced metric computed from its definition
/// g_I(X,Y) = ω_J(X, K Y) with K = √(−τ)·J_I the unnormalized Hitchin
/// operator, all expressed in the adapted frame.  Cross-check for the
/// block formula.
pub fn hermitian_metric_by_definition<T: Real>(
    i: &OrthogonalAcs<T>,
    alg: &LieAlgebraSpec<T>,
) -> Result<Matrix6<T>, AcsError> {
    let frame = u_frame(i)?;
    let omega_std = projected_omega_matrix(i)?;
    let omega_u = frame.apply_bilinear(&omega_std);
    let j = alpha_with(i, alg)?;
    let j_u = frame.apply_operator(j.matrix());
    let kappa = (T::of(3.0) - T::of(4.0) * i.x()).sqrt();
    Ok(omega_u * j_u * kappa)
}

/// Compatibility diagnostics of a candidate SU(3)-structure triple.
#[derive(Debug, Clone, Serialize)]
pub struct Su3Report<T> {
    /// ‖ω ∧ ψ‖; vanishes when ω is type (1,1) for the structure of ψ.
    pub wedge_norm: T,
    /// Minimum of ω(X, JX) over unit X; positive when ω tames J.
    pub positivity_margin: T,
}

/// Reports ‖ω∧ψ‖ and the positivity margin of ω(·, J·).
pub fn su3_compatibility<T: Real>(
    omega: &KForm<T>,
    psi: &KForm<T>,
    j: &GeneralAcs<T>,
) -> Su3Report<T> {
    let wedge_norm = omega.wedge(psi).norm();
    let m = two_form_matrix(omega);
    let q = m * j.matrix();
    let sym = (q + q.transpose()) * T::of(0.5);
    let eig = na::SymmetricEigen::new(sym);
    Su3Report { wedge_norm, positivity_margin: eig.eigenvalues.min() }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn su2() -> LieAlgebraSpec<f64> {
        LieAlgebraSpec::su2_su2()
    }

    fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    fn sample_ao_minus(seed: u64) -> OrthogonalAcs<f64> {
        let mut r = rng(seed);
        OrthogonalAcs::sample(&mut r, SampleConstraint::AoMinus, DEFAULT_MAX_TRIES).unwrap()
    }

    #[test]
    fn i0_is_valid_with_x_zero() {
        let m = OrthogonalAcs::<f64>::i0().matrix();
        let i = OrthogonalAcs::validate(&m).unwrap();
        assert_eq!(i.x(), 0.0);
        assert_eq!(i.t(), 1.0);
        assert_eq!(i.det_b(), -1.0);
        assert!(i.is_ao_minus());
    }

    #[test]
    fn integrable_structure_is_valid_with_x_one() {
        // A = [[0,0,0],[0,0,−1],[0,1,0]], B = diag(−1,0,0), C = A;
        // det B = 0 sits on the orientation boundary and is accepted
        let a = skew3::<f64>([0.0, 0.0, -1.0]);
        let b = Matrix3::from_diagonal(&na::Vector3::new(-1.0, 0.0, 0.0));
        let m = block6(&a, &b, &(-b.transpose()), &a);
        let i = OrthogonalAcs::validate(&m).unwrap();
        assert!((i.x() - 1.0).abs() <= 1e-15);
        assert_eq!(i.t(), 0.0);
        assert!(!i.is_ao_minus());
    }

    #[test]
    fn validation_rejects_broken_matrices() {
        let mut not_skew = OrthogonalAcs::<f64>::i0().matrix();
        not_skew[(0, 3)] = 0.5;
        assert!(matches!(
            OrthogonalAcs::validate(&not_skew),
            Err(AcsError::NotSkew { .. })
        ));

        // shrinking one B entry (with its mirror, staying skew) breaks
        // the involution
        let mut broken = OrthogonalAcs::<f64>::i0().matrix();
        broken[(0, 3)] = -0.5;
        broken[(3, 0)] = 0.5;
        assert!(matches!(
            OrthogonalAcs::validate(&broken),
            Err(AcsError::NotComplexStructure { .. })
        ));

        // −I₀ is a valid ACS with the opposite orientation (B = +E)
        let flipped = -OrthogonalAcs::<f64>::i0().matrix();
        assert!(matches!(
            OrthogonalAcs::validate(&flipped),
            Err(AcsError::WrongOrientation { .. })
        ));
    }

    #[test]
    fn identity_rotation_reproduces_i0() {
        let i = OrthogonalAcs::<f64>::from_rotation(&Matrix6::identity()).unwrap();
        assert_eq!(i, OrthogonalAcs::i0());
    }

    #[test]
    fn haar_rotations_are_rotations() {
        let mut r = rng(7);
        for _ in 0..10 {
            let q = haar_rotation::<f64, _>(&mut r);
            assert!((q.transpose() * q - Matrix6::identity()).amax() <= 1e-12);
            assert!((q.determinant() - 1.0).abs() <= 1e-12);
        }
    }

    #[test]
    fn sampling_is_deterministic_and_respects_constraints() {
        let a = OrthogonalAcs::<f64>::sample_seeded(42, false).unwrap();
        let b = OrthogonalAcs::<f64>::sample_seeded(42, false).unwrap();
        assert_eq!(a, b);

        let c = OrthogonalAcs::<f64>::sample_seeded(42, true).unwrap();
        assert!(c.x() < 0.75);

        let mut r = rng(9);
        let w = OrthogonalAcs::sample(
            &mut r,
            SampleConstraint::XWindow { lo: 0.70, hi: 0.75 },
            DEFAULT_MAX_TRIES,
        )
        .unwrap();
        assert!(w.x() > 0.70 && w.x() < 0.75);

        let exhausted = OrthogonalAcs::<f64>::sample(
            &mut r,
            SampleConstraint::XWindow { lo: 2.0, hi: 3.0 },
            50,
        );
        assert!(matches!(exhausted, Err(AcsError::SamplingExhausted { tries: 50 })));
    }

    #[test]
    fn serde_round_trip_and_validation() {
        let i = sample_ao_minus(11);
        let json = serde_json::to_string(&i).unwrap();
        let back: OrthogonalAcs<f64> = serde_json::from_str(&json).unwrap();
        assert!((back.matrix() - i.matrix()).amax() <= 1e-15);

        // blocks that are not an ACS must be rejected on load
        let bad = r#"{"A":[0.5,0,0],"B":[[-1,0,0],[0,-1,0],[0,0,-1]],"C":[0,0,0]}"#;
        assert!(serde_json::from_str::<OrthogonalAcs<f64>>(bad).is_err());
    }

    #[test]
    fn omega_matrix_and_positivity() {
        let i0 = OrthogonalAcs::<f64>::i0();
        let omega = i0.omega();
        let m = two_form_matrix(&omega);
        assert!((m - i0.matrix().transpose()).amax() == 0.0);

        // ω_I(X, IX) = g(IX, IX) > 0
        let i = sample_ao_minus(13);
        let omega = i.omega();
        let mut r = rng(14);
        for _ in 0..20 {
            let x = Vector6::from_fn(|_, _| r.sample::<f64, _>(StandardNormal));
            let ix = i.matrix() * x;
            assert!(omega.eval(&[x, ix]) > 0.0);
        }
    }

    #[test]
    fn d_omega_i0_hits_the_expected_pair_coefficients() {
        // dω_{I₀} = −e^{126}+e^{135}+e^{156}−e^{234}−e^{246}+e^{345};
        // in the nine-pair expansion the b-coefficients sit at the
        // diagonal positions with value −1
        let psi = d_omega(&OrthogonalAcs::<f64>::i0(), &su2());
        assert_eq!(psi.coeff(&[1, 2, 6]), -1.0);
        assert_eq!(psi.coeff(&[1, 3, 5]), 1.0);
        assert_eq!(psi.coeff(&[1, 5, 6]), 1.0);
        assert_eq!(psi.coeff(&[2, 3, 4]), -1.0);
        assert_eq!(psi.coeff(&[2, 4, 6]), -1.0);
        assert_eq!(psi.coeff(&[3, 4, 5]), 1.0);
        assert!((psi.dot(&psi) - 6.0).abs() <= 1e-12);
    }

    #[test]
    fn nine_pair_expansion_matches_differential() {
        // dω_I = Σ b_pq · pair_pq with b the entries of B row-major
        let pairs: [([u8; 3], [u8; 3]); 9] = [
            ([2, 3, 4], [1, 5, 6]),
            ([2, 3, 5], [1, 6, 4]),
            ([2, 3, 6], [1, 4, 5]),
            ([3, 1, 4], [2, 5, 6]),
            ([3, 1, 5], [2, 6, 4]),
            ([3, 1, 6], [2, 4, 5]),
            ([1, 2, 4], [3, 5, 6]),
            ([1, 2, 5], [3, 6, 4]),
            ([1, 2, 6], [3, 4, 5]),
        ];
        let i = sample_ao_minus(17);
        let b = i.b_block();
        let mut expansion = KForm::zero(3);
        for (idx, (plus, minus)) in pairs.iter().enumerate() {
            let coeff = b[(idx / 3, idx % 3)];
            expansion = &expansion + &KForm::monomial(plus, coeff);
            expansion = &expansion - &KForm::monomial(minus, coeff);
        }
        let psi = d_omega(&i, &su2());
        assert!((&psi - &expansion).max_abs() <= 1e-14);
    }

    #[test]
    fn cofactor_matrix_properties() {
        let m = Matrix3::new(1.0, 2.0, 0.5, -1.0, 0.3, 2.2, 0.7, -0.9, 1.1);
        let cof = cofactor3(&m);
        // transpose of the cofactor matrix is the adjugate
        assert!((m * cof.transpose() - Matrix3::identity() * m.determinant()).amax() <= 1e-12);

        // for a skew matrix the cofactor matrix is vvᵀ with
        // v = (−r, q, −p) built from the parameters
        let s = skew3([0.3, -0.7, 1.1]);
        let v = na::Vector3::new(-1.1, -0.7, -0.3);
        assert!((cofactor3(&s) - v * v.transpose()).amax() <= 1e-12);
    }

    #[test]
    fn a_star_squares_to_x_a_star() {
        for seed in [19, 23, 29] {
            let i = sample_ao_minus(seed);
            let a_star = cofactor3(&i.a_matrix());
            assert!((a_star * a_star - a_star * i.x()).amax() <= 1e-12);
        }
    }

    #[test]
    fn k_block_form_matches_operator() {
        for seed in [31, 37] {
            let i = sample_ao_minus(seed);
            let psi = d_omega(&i, &su2());
            let k = hitchin_k(&psi);
            assert!((k - k_block_form(&i)).amax() <= 1e-10);
        }
    }

    #[test]
    fn alpha_at_i0_matches_the_remarked_blocks() {
        let j = alpha(&OrthogonalAcs::<f64>::i0()).unwrap();
        let s = 1.0 / 3.0f64.sqrt();
        let e = Matrix3::identity();
        let expect = block6(&(e * s), &(e * (-2.0 * s)), &(e * (2.0 * s)), &(e * (-s)));
        assert!((j.matrix() - expect).amax() <= 1e-12);
        assert!((j.matrix() * j.matrix() + Matrix6::identity()).amax() <= 1e-12);
    }

    #[test]
    fn alpha_rejects_large_x() {
        let mut r = rng(41);
        let i = OrthogonalAcs::sample(
            &mut r,
            SampleConstraint::XWindow { lo: 0.76, hi: 0.95 },
            DEFAULT_MAX_TRIES,
        )
        .unwrap();
        assert!(matches!(alpha(&i), Err(AcsError::NotInAoMinus { .. })));
    }

    #[test]
    fn polar_projection_fixes_orthogonal_points() {
        let i = sample_ao_minus(43);
        let j = GeneralAcs::from_matrix(&i.matrix()).unwrap();
        let back = project_polar(&j).unwrap();
        assert!((back.matrix() - i.matrix()).amax() <= 1e-12);
    }

    #[test]
    fn polar_projection_of_alpha_i0_is_i0() {
        let j = alpha(&OrthogonalAcs::<f64>::i0()).unwrap();
        let pi = project_polar(&j).unwrap();
        assert!((pi.matrix() - OrthogonalAcs::<f64>::i0().matrix()).amax() <= 1e-12);
    }

    #[test]
    fn singular_skew_part_is_reported() {
        let mut m = Matrix6::<f64>::zeros();
        // symmetric involution-free junk with zero skew part
        m[(0, 0)] = 1.0;
        let j = GeneralAcs::from_matrix_unchecked(m);
        assert!(matches!(
            project_polar(&j),
            Err(AcsError::SingularSkewPart { .. })
        ));
    }

    #[test]
    fn projection_weight_branches_agree() {
        // series vs closed form around the threshold
        for x in [0.2e-4, 0.6e-4, 0.99e-4, 1.01e-4, 2e-4] {
            let t = (1.0f64 - x).sqrt();
            let closed = (1.0 - t) / (x * t);
            assert!(
                (projection_weight(x) - closed).abs() <= 1e-12,
                "branch mismatch at x={x}"
            );
        }
        // the stable algebraic rewrite 1/(t(1+t)) agrees everywhere
        for k in 0..30 {
            let x = 0.7499 * (k as f64 + 0.5) / 30.0;
            let t = (1.0f64 - x).sqrt();
            assert!((projection_weight(x) - 1.0 / (t * (1.0 + t))).abs() <= 1e-12);
        }
        // stated values at the ends
        assert!((projection_weight::<f64>(0.75) - 4.0 / 3.0).abs() <= 1e-12);
        assert!((projection_weight::<f64>(1e-9) - 0.5).abs() <= 1e-9);
    }

    #[test]
    fn closed_form_omega_at_i0() {
        // A* = C* = 0, B* = cof(−E) = E, prefactor 1: ω_J = [[0,E],[−E,0]],
        // whose transpose is the polar projection I₀ itself
        let m = projected_omega_matrix(&OrthogonalAcs::<f64>::i0()).unwrap();
        let e = Matrix3::identity();
        let expect = block6(&Matrix3::zeros(), &e, &(-e), &Matrix3::zeros());
        assert!((m - expect).amax() <= 1e-12);
        assert!((m.transpose() - OrthogonalAcs::<f64>::i0().matrix()).amax() <= 1e-12);
    }

    #[test]
    fn closed_form_omega_matches_polar_oracle() {
        for seed in [47, 53, 59] {
            let i = sample_ao_minus(seed);
            let pi = project_polar(&alpha(&i).unwrap()).unwrap();
            let closed = projected_omega_matrix(&i).unwrap();
            assert!(
                (closed.transpose() - pi.matrix()).amax() <= 1e-9,
                "closed form vs polar mismatch (seed {seed})"
            );
        }
    }

    #[test]
    fn rotation_block_is_special_orthogonal() {
        for seed in [61, 67] {
            let i = sample_ao_minus(seed);
            let x_blk = so3_rotation_block(&i).unwrap();
            assert!((x_blk.transpose() * x_blk - Matrix3::identity()).amax() <= 1e-10);
            assert!((x_blk.determinant() - 1.0).abs() <= 1e-10);
        }
    }

    #[test]
    fn adapted_frame_canonicalizes_omega_and_projection() {
        for seed in [71, 73] {
            let i = sample_ao_minus(seed);
            let frame = u_frame(&i).unwrap();
            let omega_u = frame.apply_bilinear(&projected_omega_matrix(&i).unwrap());
            let e = Matrix3::identity();
            let canonical = block6(&Matrix3::zeros(), &e, &(-e), &Matrix3::zeros());
            assert!((omega_u - canonical).amax() <= 1e-9);

            let pi = project_polar(&alpha(&i).unwrap()).unwrap();
            let pi_u = frame.apply_operator(&pi.matrix());
            assert!(
                (pi_u - OrthogonalAcs::<f64>::i0().matrix()).amax() <= 1e-9,
                "projection is canonical in the adapted frame"
            );
        }
    }

    #[test]
    fn hermitian_metric_formula_matches_definition() {
        for seed in [79, 83, 89] {
            let i = sample_ao_minus(seed);
            let pair = hermitian_pair(&i).unwrap();
            let by_def = hermitian_metric_by_definition(&i, &su2()).unwrap();
            assert!(
                (pair.metric - by_def).amax() <= 1e-9,
                "formula vs definition mismatch (seed {seed})"
            );
            // symmetric positive definite for x < 3/4
            assert!((pair.metric - pair.metric.transpose()).amax() <= 1e-9);
            assert!(na::Cholesky::new(pair.metric).is_some());
        }
    }

    #[test]
    fn hermitian_metric_spectrum() {
        let i = sample_ao_minus(97);
        let t = i.t();
        let pair = hermitian_pair(&i).unwrap();
        let mut eigen: Vec<f64> = na::SymmetricEigen::new(pair.metric)
            .eigenvalues
            .iter()
            .copied()
            .collect();
        eigen.sort_by(f64::total_cmp);
        let mut expect = vec![
            2.0 * t - 1.0,
            2.0 * t - 1.0,
            1.0,
            2.0 * t + 1.0,
            2.0 * t + 1.0,
            4.0 * t * t - 1.0,
        ];
        expect.sort_by(f64::total_cmp);
        for (got, want) in eigen.iter().zip(&expect) {
            assert!((got - want).abs() <= 1e-9, "eigenvalue {got} vs {want}");
        }
    }

    #[test]
    fn hermitian_metric_at_i0() {
        let pair = hermitian_pair(&OrthogonalAcs::<f64>::i0()).unwrap();
        let e = Matrix3::identity();
        let expect = block6(&(e * 2.0), &(-e), &(-e), &(e * 2.0));
        assert!((pair.metric - expect).amax() <= 1e-12);
        // spectrum {1,1,1,3,3,3}
        let mut eigen: Vec<f64> = na::SymmetricEigen::new(pair.metric)
            .eigenvalues
            .iter()
            .copied()
            .collect();
        eigen.sort_by(f64::total_cmp);
        for (got, want) in eigen.iter().zip([1.0, 1.0, 1.0, 3.0, 3.0, 3.0]) {
            assert!((got - want).abs() <= 1e-12);
        }
    }

    #[test]
    fn su3_compatibility_of_the_canonical_triple() {
        let i0 = OrthogonalAcs::<f64>::i0();
        let psi = d_omega(&i0, &su2());
        let j = alpha(&i0).unwrap();
        let pi = project_polar(&j).unwrap();
        let report = su3_compatibility(&pi.omega(), &psi, &j);
        assert!(report.wedge_norm <= 1e-10);
        assert!(report.positivity_margin > 0.0);

        // a mismatched pairing does not wedge to zero
        let i = sample_ao_minus(101);
        let report = su3_compatibility(&i.omega(), &psi, &j);
        assert!(report.wedge_norm > 1e-3);

        let zero = KForm::zero(3);
        let report = su3_compatibility(&pi.omega(), &zero, &j);
        assert_eq!(report.wedge_norm, 0.0);
    }

    #[test]
    fn general_acs_orientation_check() {
        let i0 = OrthogonalAcs::<f64>::i0();
        assert!(GeneralAcs::from_matrix(&i0.matrix()).is_ok());
        // the reversed structure is a valid ACS of the opposite class
        assert!(matches!(
            GeneralAcs::from_matrix(&(-i0.matrix())),
            Err(AcsError::WrongOrientation { .. })
        ));
        // and alpha outputs are positively oriented
        let j = alpha(&sample_ao_minus(103)).unwrap();
        assert!(GeneralAcs::from_matrix(j.matrix()).is_ok());
    }

    #[test]
    fn general_acs_serde_round_trip() {
        let j = alpha(&sample_ao_minus(107)).unwrap();
        let json = serde_json::to_string(&j).unwrap();
        let back: GeneralAcs<f64> = serde_json::from_str(&json).unwrap();
        assert!((back.matrix() - j.matrix()).amax() <= 1e-15);
    }

    #[test]
    fn f32_smoke_test() {
        let i = OrthogonalAcs::<f32>::i0();
        let j = alpha(&i).unwrap();
        assert!((j.matrix() * j.matrix() + Matrix6::<f32>::identity()).amax() <= 1e-5);
    }
}
