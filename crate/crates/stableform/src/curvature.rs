//! Curvature of left-invariant metrics on the product of two copies
//! of SU(2), specialized to the one-parameter family of Hermitian
//! metrics produced by the stable-form construction.
//!
//! The general engine computes Levi-Civita connection coefficients by
//! the Koszul formula in a fixed frame, assembles the curvature
//! tensor, Ricci and scalar curvature from them; the family-specific
//! closed forms for the Ricci eigenvalues are checked against it.

use nalgebra as na;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::acs::{hermitian_metric_formula, AcsError, OrthogonalAcs};
use crate::exterior::{matrix_from_rows, matrix_rows, KForm, Matrix3, Matrix6, Vector6};
use crate::liealg::{block6, two_form_from_matrix, FrameChange, LieAlgebraSpec};
use crate::scalar::{default_tol, Real};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CurvatureError {
    #[error("metric is not symmetric (defect {defect:e})")]
    NotSymmetric { defect: f64 },
    #[error("metric is not positive definite")]
    NotPositiveDefinite,
    #[error("t = {t} is at or below the degeneracy bound 1/2")]
    PoleAtHalf { t: f64 },
    #[error("parameter t = {t} is outside (1/2, 1]")]
    ParameterOutOfRange { t: f64 },
    #[error("metric eigenstructure did not match the analytic frame tables")]
    FrameMismatch,
    #[error(transparent)]
    Acs(#[from] AcsError),
}

/// A left-invariant Riemannian metric, given by its Gram matrix in the
/// standard frame.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<T>>", into = "Vec<Vec<T>>")]
#[serde(bound(
    serialize = "T: Serialize + Real",
    deserialize = "T: Deserialize<'de> + Real"
))]
pub struct LeftInvariantMetric<T> {
    g: Matrix6<T>,
    g_inv: Matrix6<T>,
}

impl<T: Real> TryFrom<Vec<Vec<T>>> for LeftInvariantMetric<T> {
    type Error = CurvatureError;
    fn try_from(rows: Vec<Vec<T>>) -> Result<Self, CurvatureError> {
        let m = matrix_from_rows(&rows).ok_or(CurvatureError::NotPositiveDefinite)?;
        LeftInvariantMetric::new(&m)
    }
}

impl<T: Real> From<LeftInvariantMetric<T>> for Vec<Vec<T>> {
    fn from(metric: LeftInvariantMetric<T>) -> Self {
        matrix_rows(&metric.g)
    }
}

impl<T: Real> LeftInvariantMetric<T> {
    /// Accepts a symmetric positive-definite Gram matrix.
    pub fn new(g: &Matrix6<T>) -> Result<Self, CurvatureError> {
        let sym_defect = (g - g.transpose()).amax();
        if sym_defect > default_tol::<T>() {
            return Err(CurvatureError::NotSymmetric { defect: sym_defect.as_f64() });
        }
        let chol = na::Cholesky::new(*g).ok_or(CurvatureError::NotPositiveDefinite)?;
        Ok(LeftInvariantMetric { g: *g, g_inv: chol.inverse() })
    }

    /// The bi-invariant (Killing–Cartan, normalized) metric: identity
    /// Gram matrix.
    pub fn killing() -> Self {
        LeftInvariantMetric { g: Matrix6::identity(), g_inv: Matrix6::identity() }
    }

    /// The Hermitian metric of an orthogonal structure with x < 3/4,
    /// expressed in the structure's adapted frame.
    pub fn hermitian(i: &OrthogonalAcs<T>) -> Result<Self, CurvatureError> {
        let a_star = crate::acs::cofactor3(&i.a_matrix());
        let g = hermitian_metric_formula(&a_star, i.t());
        LeftInvariantMetric::new(&g)
    }

    pub fn gram(&self) -> &Matrix6<T> {
        &self.g
    }

    pub fn inverse_gram(&self) -> &Matrix6<T> {
        &self.g_inv
    }

    pub fn inner(&self, x: &Vector6<T>, y: &Vector6<T>) -> T {
        (x.transpose() * self.g * y)[(0, 0)]
    }

    pub fn norm(&self, x: &Vector6<T>) -> T {
        self.inner(x, x).max(T::zero()).sqrt()
    }
}

/// Levi-Civita curvature data of a left-invariant metric on a fixed
/// Lie algebra, with all tensors expressed in the standard frame.
pub struct Curvature<T> {
    alg: LieAlgebraSpec<T>,
    metric: LeftInvariantMetric<T>,
    /// gamma[i] is the matrix of ∇_{e_i} acting on frame vectors:
    /// column j holds the coefficients of ∇_{e_i} e_j.
    gamma: Vec<Matrix6<T>>,
}

impl<T: Real> Curvature<T> {
    /// Builds connection coefficients by the Koszul formula
    /// 2 g(∇_X Y, Z) = g([X,Y],Z) − g([Y,Z],X) + g([Z,X],Y)
    /// (left-invariant fields, so all derivative terms vanish).
    pub fn new(alg: LieAlgebraSpec<T>, metric: LeftInvariantMetric<T>) -> Self {
        let half = T::of(0.5);
        let basis: Vec<Vector6<T>> =
            (1..=6).map(crate::exterior::basis_vector).collect();
        let mut gamma = Vec::with_capacity(6);
        for x in &basis {
            let mut m = Matrix6::zeros();
            for (j, y) in basis.iter().enumerate() {
                let mut rhs = Vector6::zeros();
                for (k, z) in basis.iter().enumerate() {
                    let term = metric.inner(&alg.bracket(x, y), z)
                        - metric.inner(&alg.bracket(y, z), x)
                        + metric.inner(&alg.bracket(z, x), y);
                    rhs[k] = term * half;
                }
                // solve g·(∇_X e_j) = rhs
                m.set_column(j, &(metric.g_inv * rhs));
            }
            gamma.push(m);
        }
        Curvature { alg, metric, gamma }
    }

    pub fn algebra(&self) -> &LieAlgebraSpec<T> {
        &self.alg
    }

    pub fn metric(&self) -> &LeftInvariantMetric<T> {
        &self.metric
    }

    /// ∇_X Y for left-invariant fields (linear in both slots).
    pub fn nabla(&self, x: &Vector6<T>, y: &Vector6<T>) -> Vector6<T> {
        let mut out = Vector6::zeros();
        for i in 0..6 {
            out += self.gamma[i] * y * x[i];
        }
        out
    }

    /// R(X,Y)Z = ∇_X ∇_Y Z − ∇_Y ∇_X Z − ∇_{[X,Y]} Z.
    pub fn riemann(&self, x: &Vector6<T>, y: &Vector6<T>, z: &Vector6<T>) -> Vector6<T> {
        self.nabla(x, &self.nabla(y, z)) - self.nabla(y, &self.nabla(x, z))
            - self.nabla(&self.alg.bracket(x, y), z)
    }

    /// Ric(X,Y) = Σ_a e^a(R(e_a, X) Y), as a bilinear form on the
    /// frame.
    pub fn ricci(&self) -> Matrix6<T> {
        let basis: Vec<Vector6<T>> =
            (1..=6).map(crate::exterior::basis_vector).collect();
        Matrix6::from_fn(|i, j| {
            let mut acc = T::zero();
            for (a, ea) in basis.iter().enumerate() {
                acc += self.riemann(ea, &basis[i], &basis[j])[a];
            }
            acc
        })
    }

    /// Scalar curvature tr(g⁻¹ Ric).
    pub fn scalar(&self) -> T {
        (self.metric.g_inv * self.ricci()).trace()
    }

    /// Sectional curvature of the plane spanned by X and Y.
    pub fn sectional(&self, x: &Vector6<T>, y: &Vector6<T>) -> T {
        let num = self.metric.inner(&self.riemann(x, y, y), x);
        let gxx = self.metric.inner(x, x);
        let gyy = self.metric.inner(y, y);
        let gxy = self.metric.inner(x, y);
        num / (gxx * gyy - gxy * gxy)
    }
}

/// Diagonal Ricci entries of the Hermitian family in its proper frame,
/// in closed form, as functions of t ∈ (1/2, 1]: entries come in the
/// pattern (r₁, r₁, r₃, r₄, r₄, r₆).
pub fn ricci_closed_form<T: Real>(t: T, eps: T) -> Result<[T; 6], CurvatureError> {
    check_parameter(t, eps)?;
    let t2 = t * t;
    let t3 = t2 * t;
    let t4 = t2 * t2;
    let q = T::of(4.0) * t2 - T::one();
    let d = T::of(2.0) * q * q;
    let r1 = -(T::of(8.0) * t4 - T::of(16.0) * t3 - T::of(10.0) * t2 + T::of(10.0) * t
        + T::of(3.0))
        / d;
    let r3 = (T::of(4.0) * t2 + T::one()) / d;
    let r4 = -(T::of(8.0) * t4 - T::of(16.0) * t3 + T::of(6.0) * t2 - T::of(2.0) * t
        - T::one())
        / d;
    let r6 = (T::of(16.0) * t4 - T::of(8.0) * t2 - T::of(3.0)) / d;
    Ok([r1, r1, r3, r4, r4, r6])
}

/// Scalar curvature of the Hermitian family in closed form.
pub fn scalar_closed_form<T: Real>(t: T, eps: T) -> Result<T, CurvatureError> {
    check_parameter(t, eps)?;
    let t2 = t * t;
    let t3 = t2 * t;
    let t4 = t2 * t2;
    let q = T::of(4.0) * t2 - T::one();
    Ok(-(T::of(8.0) * t4 - T::of(32.0) * t3 - T::of(2.0) * t2 + T::of(8.0) * t + T::of(3.0))
        / (q * q))
}

fn check_parameter<T: Real>(t: T, eps: T) -> Result<(), CurvatureError> {
    if t > T::one() + default_tol::<T>() || t < T::zero() {
        return Err(CurvatureError::ParameterOutOfRange { t: t.as_f64() });
    }
    if t <= T::of(0.5) + eps {
        return Err(CurvatureError::PoleAtHalf { t: t.as_f64() });
    }
    Ok(())
}

/// Orthonormal eigenframe of the Hermitian metric diagonalizing its
/// Ricci tensor, canonicalized against the analytic eigenvector
/// tables.  Returned as a frame change from the adapted frame.
pub fn proper_frame<T: Real>(i: &OrthogonalAcs<T>) -> Result<FrameChange<T>, CurvatureError> {
    let metric = LeftInvariantMetric::hermitian(i)?;
    let eig = na::SymmetricEigen::new(*metric.gram());

    // group eigenvalues that coincide up to the merge tolerance
    let mut order: Vec<usize> = (0..6).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].partial_cmp(&eig.eigenvalues[b]).unwrap());
    let merge = T::of(1e-6);
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for &idx in &order {
        match groups.last_mut() {
            Some(group)
                if (eig.eigenvalues[idx] - eig.eigenvalues[group[0]]).abs() <= merge =>
            {
                group.push(idx)
            }
            _ => groups.push(vec![idx]),
        }
    }

    // analytic candidates, ordered to match the closed-form Ricci
    // pattern; projected onto the numeric eigenspaces to pin signs and
    // in-eigenspace rotations
    let candidates = analytic_frame_candidates(i);
    let mut columns: Vec<Vector6<T>> = Vec::with_capacity(6);
    let mut slots = [usize::MAX; 6];
    for group in &groups {
        let proj = |v: &Vector6<T>| {
            let mut p = Vector6::zeros();
            for &idx in group {
                let q = eig.eigenvectors.column(idx);
                p += q * q.dot(v);
            }
            p
        };
        let mut taken: Vec<Vector6<T>> = Vec::new();
        for (slot, cand) in candidates.iter().enumerate() {
            if slots[slot] != usize::MAX {
                continue;
            }
            // a unit candidate either lies in the eigenspace (norm ≈ 1
            // after projection) or is orthogonal to it (norm ≈ 0)
            let unit = cand / cand.norm();
            let mut vec = proj(&unit);
            if vec.norm() <= T::of(0.5) {
                continue;
            }
            // metric-orthogonalize inside the group, then normalize
            for w in &taken {
                let overlap = metric.inner(w, &vec);
                vec -= w * overlap;
            }
            let n = metric.norm(&vec);
            if n <= T::of(1e-9) {
                continue;
            }
            vec /= n;
            slots[slot] = columns.len();
            columns.push(vec);
            taken.push(vec);
            if taken.len() == group.len() {
                break;
            }
        }
    }
    if slots.contains(&usize::MAX) {
        return Err(CurvatureError::FrameMismatch);
    }
    let mut p = Matrix6::zeros();
    for (slot, &col) in slots.iter().enumerate() {
        p.set_column(slot, &columns[col]);
    }
    FrameChange::new(p).map_err(|_| CurvatureError::FrameMismatch)
}

/// The analytic eigenvector table of the Hermitian metric: six frame
/// vectors as (first-factor, second-factor) pairs.
fn analytic_frame_candidates<T: Real>(i: &OrthogonalAcs<T>) -> [Vector6<T>; 6] {
    let a = i.a_params();
    let x = i.x();
    let delta = T::of(1e-8);
    let (w, z, v): ([T; 3], [T; 3], [T; 3]);
    if x <= delta {
        // isotropic point: any orthonormal triple works, use the
        // standard one
        w = [T::one(), T::zero(), T::zero()];
        z = [T::zero(), T::one(), T::zero()];
        v = [T::zero(), T::zero(), T::one()];
    } else if a[0] * a[0] + a[2] * a[2] <= delta * delta {
        // axis case a₁ = a₃ = 0: the general row degenerates
        w = [T::one(), T::zero(), T::zero()];
        z = [T::zero(), T::zero(), T::one()];
        v = [T::zero(), a[1], T::zero()];
    } else {
        w = [-a[0], T::zero(), a[2]];
        z = [a[1] * a[2], a[0] * a[0] + a[2] * a[2], a[0] * a[1]];
        v = [-a[2], a[1], -a[0]];
    }
    let embed = |f: [T; 3], s: [T; 3]| {
        Vector6::from_column_slice(&[f[0], f[1], f[2], s[0], s[1], s[2]])
    };
    let neg = |p: [T; 3]| [-p[0], -p[1], -p[2]];
    [
        embed(w, w),
        embed(z, z),
        embed(v, v),
        embed(w, neg(w)),
        embed(z, neg(z)),
        embed(v, neg(v)),
    ]
}

/// Full curvature summary of the Hermitian metric of one structure,
/// in its proper frame.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(bound(
    serialize = "T: Serialize + Real",
    deserialize = "T: Deserialize<'de> + Real"
))]
pub struct CurvatureReport<T> {
    /// Proper-frame vectors, rows of the change-of-basis matrix from
    /// the adapted frame.
    pub frame: Vec<Vec<T>>,
    /// Ricci tensor in the proper frame (matrix rows).
    pub ricci: Vec<Vec<T>>,
    /// Scalar curvature.
    pub scalar: T,
    /// Defect of the nearly Kähler identity for this metric paired
    /// with the canonical structure; ≈ 0 exactly at t = 1.
    pub nk_defect: T,
}

/// Computes the curvature report of the Hermitian metric attached to
/// an orthogonal structure with x < 3/4.
pub fn curvature_report<T: Real>(
    i: &OrthogonalAcs<T>,
    alg: &LieAlgebraSpec<T>,
) -> Result<CurvatureReport<T>, CurvatureError> {
    let frame = proper_frame(i)?;
    let metric = LeftInvariantMetric::hermitian(i)?;
    let alg_proper = frame
        .apply_algebra(alg)
        .map_err(|_| CurvatureError::FrameMismatch)?;
    let metric_proper = LeftInvariantMetric::new(&frame.apply_bilinear(metric.gram()))?;
    let curv = Curvature::new(alg_proper, metric_proper);
    let ricci = curv.ricci();
    let scalar = curv.scalar();
    // distance of this metric from the nearly Kähler pairing with the
    // canonical Hitchin structure; zero exactly at t = 1
    let s = T::one() / T::of(3.0).sqrt();
    let e = Matrix3::identity();
    let j0 = block6(&e, &(e * T::of(-2.0)), &(e * T::of(2.0)), &(-e)) * s;
    let nk = nk_defect(&metric, &j0, alg, 64);
    Ok(CurvatureReport {
        frame: matrix_rows(&frame.matrix().transpose()),
        ricci: matrix_rows(&ricci),
        scalar,
        nk_defect: nk,
    })
}

/// Measures how far (g, J) is from being nearly Kähler: the maximum
/// of ‖(∇_X J)X‖_g over g-unit probes X, for the frame directions
/// plus the given number of random draws from a fixed stream.
pub fn nk_defect<T: Real>(
    metric: &LeftInvariantMetric<T>,
    j: &Matrix6<T>,
    alg: &LieAlgebraSpec<T>,
    probes: usize,
) -> T {
    let curv = Curvature::new(alg.clone(), metric.clone());
    let mut rng = ChaCha8Rng::seed_from_u64(0x6e6b);
    let mut probe_set: Vec<Vector6<T>> = (1..=6).map(crate::exterior::basis_vector).collect();
    probe_set.extend((0..probes).map(|_| {
        Vector6::from_fn(|_, _| {
            let z: f64 = rng.sample(StandardNormal);
            T::of(z)
        })
    }));
    let mut worst = T::zero();
    for x in &probe_set {
        // (∇_X J) X = ∇_X (JX) − J ∇_X X, quadratic in X
        let jx = j * x;
        let defect = curv.nabla(x, &jx) - j * curv.nabla(x, x);
        let scale = metric.inner(x, x);
        if scale > T::zero() {
            worst = worst.max(metric.norm(&defect) / scale);
        }
    }
    worst
}

/// The nearly Kähler structure itself: metric, almost complex
/// structure, fundamental 2-form, and the (3,0)-form data, all in the
/// standard frame.
#[derive(Debug, Clone)]
pub struct NearlyKaehler<T> {
    pub metric: LeftInvariantMetric<T>,
    pub j: Matrix6<T>,
    pub omega: KForm<T>,
    pub psi: KForm<T>,
}

impl<T: Real> NearlyKaehler<T> {
    /// The invariant nearly Kähler structure: g = (1/√3)[[2E,−E],[−E,2E]],
    /// J the Hitchin structure of dω_{I₀}, ω = g(J·,·), ψ = 3 dω_{I₀}.
    pub fn standard(alg: &LieAlgebraSpec<T>) -> Result<Self, CurvatureError> {
        let s = T::one() / T::of(3.0).sqrt();
        let e = Matrix3::identity();
        let g = block6(&(e * T::of(2.0)), &(-e), &(-e), &(e * T::of(2.0))) * s;
        let metric = LeftInvariantMetric::new(&g)?;
        let j = block6(&e, &(e * T::of(-2.0)), &(e * T::of(2.0)), &(-e)) * s;
        // form matrix of ω = g(J·,·): M_{ik} = ω(e_i,e_k) = (Jᵀ G)_{ik}
        let omega = two_form_from_matrix(&(j.transpose() * g));
        let i0 = OrthogonalAcs::i0();
        let psi = alg.mc_differential(&i0.omega()) * T::of(3.0);
        Ok(NearlyKaehler { metric, j, omega, psi })
    }

    /// dω = 3ψ residual: ‖dω − 3·(ψ/3)‖, i.e. how exactly ω and ψ
    /// satisfy the first structure equation.
    pub fn structure_equation_residual(&self, alg: &LieAlgebraSpec<T>) -> T {
        (&alg.mc_differential(&self.omega) - &(self.psi.clone() * (T::one() / T::of(3.0))))
            .max_abs()
    }
}

/// The constant μ in dφ = −2μ·ω∧ω for the standard nearly Kähler
/// structure, measured by least squares, with the fit residual.
pub fn nk_type_constant<T: Real>(
    nk: &NearlyKaehler<T>,
    alg: &LieAlgebraSpec<T>,
) -> (T, T) {
    // φ is the symmetrized J-rotation of ψ: alternating by
    // construction, equal to the standard dual 3-form here
    let phi = j_rotate_three_form(&nk.psi, &nk.j) * (-T::one() / T::of(3.0));
    let d_phi = alg.mc_differential(&phi);
    let omega_sq = nk.omega.wedge(&nk.omega);
    let denom = omega_sq.dot(&omega_sq);
    let mu = -d_phi.dot(&omega_sq) / (T::of(2.0) * denom);
    let residual = (&d_phi + &(omega_sq.clone() * (T::of(2.0) * mu))).max_abs();
    (mu, residual)
}

/// Σ over slots of ψ with J applied in one slot: the 3-form
/// ψ(J·,·,·) + ψ(·,J·,·) + ψ(·,·,J·).
fn j_rotate_three_form<T: Real>(psi: &KForm<T>, j: &Matrix6<T>) -> KForm<T> {
    assert_eq!(psi.degree(), 3);
    let cols: Vec<Vector6<T>> = (0..6).map(|c| j.column(c).into_owned()).collect();
    let mut coeffs = Vec::with_capacity(20);
    for s in crate::exterior::basis_indices(3) {
        let e: Vec<Vector6<T>> = s
            .iter()
            .map(|&idx| crate::exterior::basis_vector(idx as usize))
            .collect();
        let mut acc = T::zero();
        for slot in 0..3 {
            let mut args = [e[0], e[1], e[2]];
            args[slot] = cols[(s[slot] - 1) as usize];
            acc += psi.eval(&args);
        }
        coeffs.push(acc);
    }
    KForm::from_coeffs(3, coeffs).expect("sized by basis table")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::acs::{alpha, skew3, SampleConstraint, DEFAULT_MAX_TRIES};
    use crate::exterior::basis_vector;

    fn su2() -> LieAlgebraSpec<f64> {
        LieAlgebraSpec::su2_su2()
    }

    fn sample_with_t(seed: u64, t: f64) -> OrthogonalAcs<f64> {
        let x = 1.0 - t * t;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let lo = (x - 0.004).max(0.0);
        let hi = (x + 0.004).min(0.75 - 1e-6);
        OrthogonalAcs::sample(
            &mut rng,
            SampleConstraint::XWindow { lo, hi },
            DEFAULT_MAX_TRIES,
        )
        .unwrap()
    }

    #[test]
    fn killing_metric_benchmarks() {
        // bi-invariant metric: ∇_X Y = [X,Y]/2, Ric = Id/2, scalar 3,
        // sectional(e₁,e₂) = 1/4
        let curv = Curvature::new(su2(), LeftInvariantMetric::killing());
        let e1 = basis_vector::<f64>(1);
        let e2 = basis_vector::<f64>(2);
        let e3 = basis_vector::<f64>(3);
        assert!((curv.nabla(&e1, &e2) - e3 * 0.5).amax() <= 1e-15);
        assert!((curv.ricci() - Matrix6::identity() * 0.5).amax() <= 1e-14);
        assert!((curv.scalar() - 3.0).abs() <= 1e-13);
        assert!((curv.sectional(&e1, &e2) - 0.25).abs() <= 1e-14);
        // flat directions across the two factors
        let e4 = basis_vector::<f64>(4);
        assert!(curv.sectional(&e1, &e4).abs() <= 1e-14);
    }

    #[test]
    fn metric_validation() {
        let mut m = Matrix6::<f64>::identity();
        m[(0, 1)] = 0.1;
        assert!(matches!(
            LeftInvariantMetric::new(&m),
            Err(CurvatureError::NotSymmetric { .. })
        ));
        let neg = -Matrix6::<f64>::identity();
        assert!(matches!(
            LeftInvariantMetric::new(&neg),
            Err(CurvatureError::NotPositiveDefinite)
        ));
    }

    #[test]
    fn metric_serde_round_trip() {
        let metric = LeftInvariantMetric::hermitian(&sample_with_t(211, 0.8)).unwrap();
        let json = serde_json::to_string(&metric).unwrap();
        let back: LeftInvariantMetric<f64> = serde_json::from_str(&json).unwrap();
        assert!((back.gram() - metric.gram()).amax() <= 1e-15);

        let bad = serde_json::to_string(&matrix_rows(&(-Matrix6::<f64>::identity()))).unwrap();
        assert!(serde_json::from_str::<LeftInvariantMetric<f64>>(&bad).is_err());
    }

    #[test]
    fn closed_form_guards() {
        assert!(matches!(
            ricci_closed_form(0.5, 1e-9),
            Err(CurvatureError::PoleAtHalf { .. })
        ));
        assert!(matches!(
            ricci_closed_form(0.4, 1e-9),
            Err(CurvatureError::PoleAtHalf { .. })
        ));
        assert!(matches!(
            ricci_closed_form(1.5, 1e-9),
            Err(CurvatureError::ParameterOutOfRange { .. })
        ));
        assert!(ricci_closed_form(1.0, 1e-9).is_ok());
    }

    #[test]
    fn closed_form_values_at_the_einstein_point() {
        // t = 1: diag entries all 5/18, scalar 5/3
        let r = ricci_closed_form::<f64>(1.0, 1e-9).unwrap();
        for v in r {
            assert!((v - 5.0 / 18.0).abs() <= 1e-15);
        }
        assert!((scalar_closed_form::<f64>(1.0, 1e-9).unwrap() - 5.0 / 3.0).abs() <= 1e-15);
    }

    #[test]
    fn closed_form_values_at_three_quarters() {
        let r = ricci_closed_form::<f64>(0.75, 1e-9).unwrap();
        let expect = [-0.21, -0.21, 1.04, 1.07, 1.07, -0.78];
        for (got, want) in r.iter().zip(expect) {
            assert!((got - want).abs() <= 1e-14, "{got} vs {want}");
        }
        assert!((scalar_closed_form::<f64>(0.75, 1e-9).unwrap() - 1.98).abs() <= 1e-14);
    }

    #[test]
    fn scalar_is_the_trace_of_the_diagonal() {
        for t in [0.55, 0.61, 0.75, 0.9, 1.0] {
            let r = ricci_closed_form(t, 1e-12).unwrap();
            let s = scalar_closed_form(t, 1e-12).unwrap();
            let trace: f64 = r.iter().sum();
            assert!((trace - s).abs() <= 1e-11, "trace mismatch at t={t}");
        }
    }

    #[test]
    fn proper_frame_diagonalizes_general_position() {
        let i = sample_with_t(223, 0.8);
        let report = curvature_report(&i, &su2()).unwrap();
        let t = i.t();
        let expect = ricci_closed_form(t, 1e-12).unwrap();
        for (r, want) in expect.iter().enumerate() {
            for c in 0..6 {
                let got = report.ricci[r][c];
                if r == c {
                    assert!((got - want).abs() <= 1e-8, "diag {r}: {got} vs {want}");
                } else {
                    assert!(got.abs() <= 1e-9, "offdiag ({r},{c}) = {got}");
                }
            }
        }
        let s = scalar_closed_form(t, 1e-12).unwrap();
        assert!((report.scalar - s).abs() <= 1e-8);
    }

    #[test]
    fn proper_frame_axis_case() {
        // structures with a₁ = a₃ = 0 hit the degenerate eigenvector
        // table; synthesize one directly: A = C = skew(0, a₂, 0) is
        // compatible with B = diag(−t, 1, t) (B anticommutes with A
        // and BBᵀ = E + A²), giving a valid structure with x = a₂²
        let a2 = 0.6_f64;
        let t = (1.0 - a2 * a2).sqrt();
        let a_blk = skew3([0.0, a2, 0.0]);
        let b_blk = Matrix3::from_diagonal(&na::Vector3::new(-t, 1.0, t));
        let m = block6(&a_blk, &b_blk, &(-b_blk.transpose()), &a_blk);
        let i = OrthogonalAcs::validate(&m).unwrap();
        assert!((i.x() - a2 * a2).abs() <= 1e-12);
        assert!(i.det_b() < 0.0);

        let report = curvature_report(&i, &su2()).unwrap();
        let expect = ricci_closed_form(i.t(), 1e-12).unwrap();
        for (r, want) in expect.iter().enumerate() {
            assert!((report.ricci[r][r] - want).abs() <= 1e-8, "axis-case diag {r}");
            for c in 0..6 {
                if r != c {
                    assert!(report.ricci[r][c].abs() <= 1e-9);
                }
            }
        }
    }

    #[test]
    fn proper_frame_at_the_isotropic_point() {
        let report = curvature_report(&OrthogonalAcs::i0(), &su2()).unwrap();
        for r in 0..6 {
            assert!((report.ricci[r][r] - 5.0 / 18.0).abs() <= 1e-10);
            for c in 0..6 {
                if r != c {
                    assert!(report.ricci[r][c].abs() <= 1e-10);
                }
            }
        }
        assert!((report.scalar - 5.0 / 3.0).abs() <= 1e-10);
        assert!(report.nk_defect <= 1e-12);
    }

    #[test]
    fn oracle_matches_closed_form_at_random_t() {
        for (seed, t) in [(229, 0.62), (233, 0.71), (239, 0.93)] {
            let i = sample_with_t(seed, t);
            let report = curvature_report(&i, &su2()).unwrap();
            let expect = ricci_closed_form(i.t(), 1e-12).unwrap();
            for (r, want) in expect.iter().enumerate() {
                assert!((report.ricci[r][r] - want).abs() <= 1e-8, "t={t} diag {r}");
            }
            let s = scalar_closed_form(i.t(), 1e-12).unwrap();
            assert!((report.scalar - s).abs() <= 1e-8);
        }
    }

    #[test]
    fn einstein_point_is_nearly_kaehler() {
        let alg = su2();
        let nk = NearlyKaehler::standard(&alg).unwrap();
        // the canonical pairing has vanishing nearly Kähler defect
        let defect = nk_defect(&nk.metric, &nk.j, &alg, 256);
        assert!(defect <= 1e-12, "nk defect {defect}");
        // pairing the bi-invariant metric with the integrable
        // structure instead gives (∇_{e₂} J)e₂ = [e₂, Je₂]/2 = e₁/2,
        // so the defect measure reports exactly 1/2
        let a_blk = skew3([0.0, 0.0, -1.0]);
        let b_blk = Matrix3::from_diagonal(&na::Vector3::new(-1.0, 0.0, 0.0));
        let jint = block6(&a_blk, &b_blk, &(-b_blk.transpose()), &a_blk);
        let off = nk_defect(&LeftInvariantMetric::killing(), &jint, &alg, 64);
        assert!((off - 0.5).abs() <= 1e-12, "decoy defect {off}");
    }

    #[test]
    fn nearly_kaehler_structure_equations() {
        let alg = su2();
        let nk = NearlyKaehler::standard(&alg).unwrap();
        assert!(nk.structure_equation_residual(&alg) <= 1e-14);
        let (mu, residual) = nk_type_constant(&nk, &alg);
        assert!((mu - 3.0f64.sqrt() / 2.0).abs() <= 1e-12, "mu = {mu}");
        assert!(residual <= 1e-12, "fit residual {residual}");
    }

    #[test]
    fn nk_metric_is_proportional_to_the_hermitian_one_at_t_one() {
        let nk = NearlyKaehler::standard(&su2()).unwrap();
        let hermitian = LeftInvariantMetric::hermitian(&OrthogonalAcs::i0()).unwrap();
        let ratio = 3.0f64.sqrt();
        assert!((hermitian.gram() - nk.metric.gram() * ratio).amax() <= 1e-12);
    }

    #[test]
    fn nk_omega_and_psi_are_the_hitchin_pair() {
        let alg = su2();
        let nk = NearlyKaehler::standard(&alg).unwrap();
        // ψ/3 = dω_{I₀} and J is its normalized Hitchin operator
        let j = alpha(&OrthogonalAcs::i0()).unwrap();
        assert!((nk.j - j.matrix()).amax() <= 1e-12);
        // ω is compatible: ω(X, JX) > 0 on a probe
        let x = basis_vector::<f64>(1) + basis_vector::<f64>(5) * 0.3;
        assert!(nk.omega.eval(&[x, nk.j * x]) > 0.0);
    }

    #[test]
    fn report_serializes() {
        let report = curvature_report(&sample_with_t(241, 0.77), &su2()).unwrap();
        let json = serde_json::to_string(&report).unwrap();
        let back: CurvatureReport<f64> = serde_json::from_str(&json).unwrap();
        assert_eq!(back.frame.len(), 6);
        assert!((back.scalar - report.scalar).abs() == 0.0);
    }

    #[test]
    fn f32_smoke_test() {
        let curv = Curvature::new(
            LieAlgebraSpec::<f32>::su2_su2(),
            LeftInvariantMetric::killing(),
        );
        assert!((curv.scalar() - 3.0).abs() <= 1e-5);
    }
}
