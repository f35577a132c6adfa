//! Stable 3-forms in six dimensions: the K operator, the τ invariant,
//! orbit classification, and the almost complex structure a complex-type
//! stable form induces.
//!
//! For a 3-form ψ the operator K(X) = A(i_Xψ ∧ ψ) (with A the duality
//! between 5-forms and vectors fixed by the volume form) satisfies
//! K² = τ·Id with τ = (1/6)tr K².  Negative τ puts ψ in the open orbit
//! with stabilizer SL(3,ℂ) and J = K/√(−τ) is an almost complex
//! structure; positive τ is the real-type orbit; τ = 0 is degenerate.

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::exterior::{
    basis_indices, basis_vector, dual_iso_a, matrix_from_rows, matrix_rows, KForm, Matrix6,
    Vector6,
};
use crate::scalar::Real;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum HitchinError {
    #[error("tau = {tau}; the form is not of complex type (needs tau < 0)")]
    NonNegativeTau { tau: f64 },
    #[error("dual 3-form candidate is not alternating (defect {defect})")]
    NotAlternating { defect: f64 },
}

/// GL(6,ℝ)-orbit type of a 3-form, as detected by the sign of τ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Orbit {
    /// Complex type: τ < 0, stabilizer SL(3,ℂ).
    O1,
    /// Real type: τ > 0, stabilizer SL(3,ℝ)×SL(3,ℝ).
    O2,
    /// Not stable (τ ≈ 0 within tolerance).
    #[serde(rename = "degenerate")]
    Degenerate,
}

impl fmt::Display for Orbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Orbit::O1 => write!(f, "O1"),
            Orbit::O2 => write!(f, "O2"),
            Orbit::Degenerate => write!(f, "degenerate"),
        }
    }
}

/// Default half-width of the τ ≈ 0 band treated as degenerate.
pub fn default_orbit_eps<T: Real>() -> T {
    T::of(1e-10)
}

/// The operator K of a 3-form: column j is A((i_{e_j}ψ) ∧ ψ).
pub fn hitchin_k<T: Real>(psi: &KForm<T>) -> Matrix6<T> {
    assert_eq!(psi.degree(), 3, "K is defined for 3-forms");
    let mut k = Matrix6::zeros();
    for j in 0..6 {
        let contraction = psi.interior(&basis_vector(j + 1));
        let five = contraction.wedge(psi);
        k.set_column(j, &dual_iso_a(&five));
    }
    k
}

/// τ of an already-computed K operator: (1/6) tr K².
pub fn tau_from_k<T: Real>(k: &Matrix6<T>) -> T {
    (k * k).trace() / T::of(6.0)
}

/// The orbit invariant τ(ψ) = (1/6) tr K(ψ)².
pub fn tau<T: Real>(psi: &KForm<T>) -> T {
    tau_from_k(&hitchin_k(psi))
}

/// Orbit of ψ: O1 for τ < −eps, O2 for τ > eps, degenerate otherwise.
pub fn classify_orbit<T: Real>(psi: &KForm<T>, eps: T) -> Orbit {
    let t = tau(psi);
    if t < -eps {
        Orbit::O1
    } else if t > eps {
        Orbit::O2
    } else {
        Orbit::Degenerate
    }
}

/// The almost complex structure J = K/√(−τ) of a complex-type stable
/// form.  Fails with [`HitchinError::NonNegativeTau`] unless τ < −eps.
pub fn hitchin_j<T: Real>(psi: &KForm<T>, eps: T) -> Result<Matrix6<T>, HitchinError> {
    let k = hitchin_k(psi);
    let t = tau_from_k(&k);
    if t >= -eps {
        return Err(HitchinError::NonNegativeTau { tau: t.as_f64() });
    }
    Ok(k / (-t).sqrt())
}

/// The dual 3-form φ(X,Y,Z) = −ψ(JX,Y,Z).  The first-slot formula is
/// only a form when the result is alternating; this is verified on all
/// basis triples (defect ≤ tol) before the form is returned.
pub fn dual_three_form<T: Real>(
    psi: &KForm<T>,
    j: &Matrix6<T>,
    tol: T,
) -> Result<KForm<T>, HitchinError> {
    assert_eq!(psi.degree(), 3, "dual form is defined for 3-forms");
    let jb: Vec<Vector6<T>> = (0..6).map(|i| j.column(i).into_owned()).collect();
    let eb: Vec<Vector6<T>> = (1..=6).map(basis_vector).collect();
    let raw = |i: usize, a: usize, b: usize| -psi.eval(&[jb[i], eb[a], eb[b]]);

    let mut coeffs = Vec::with_capacity(20);
    for s in basis_indices(3) {
        let (i, a, b) = ((s[0] - 1) as usize, (s[1] - 1) as usize, (s[2] - 1) as usize);
        coeffs.push(raw(i, a, b));
    }
    let phi = KForm::from_coeffs(3, coeffs).expect("sized by basis table");

    // the formula fixes only the first slot; check it is compatible
    // with full antisymmetry by comparing every first-slot choice
    let mut defect = T::zero();
    for i in 0..6 {
        for a in 0..6 {
            for b in (a + 1)..6 {
                let value = raw(i, a, b);
                let expected = if i == a || i == b {
                    T::zero()
                } else {
                    let mut tri = [i as u8 + 1, a as u8 + 1, b as u8 + 1];
                    let mut sign = T::one();
                    if tri[0] > tri[1] {
                        tri.swap(0, 1);
                        sign = -sign;
                    }
                    if tri[1] > tri[2] {
                        tri.swap(1, 2);
                        sign = -sign;
                    }
                    if tri[0] > tri[1] {
                        tri.swap(0, 1);
                        sign = -sign;
                    }
                    phi.coeff(&tri) * sign
                };
                defect = defect.max((value - expected).abs());
            }
        }
    }
    if defect > tol {
        return Err(HitchinError::NotAlternating { defect: defect.as_f64() });
    }
    Ok(phi)
}

/// Everything the stable-form analysis produces for one 3-form; the
/// optional pieces are present exactly when ψ is of complex type.
#[derive(Debug, Clone, PartialEq)]
pub struct HitchinStructure<T> {
    psi: KForm<T>,
    k: Matrix6<T>,
    tau: T,
    orbit: Orbit,
    kappa: Option<T>,
    j: Option<Matrix6<T>>,
    phi: Option<KForm<T>>,
}

impl<T: Real> HitchinStructure<T> {
    /// Classifies ψ and, in the complex-type case, computes κ = √(−τ),
    /// J = K/κ and the dual form φ.
    pub fn analyze(psi: KForm<T>, eps: T) -> Result<Self, HitchinError> {
        assert_eq!(psi.degree(), 3, "analysis is defined for 3-forms");
        let k = hitchin_k(&psi);
        let tau = tau_from_k(&k);
        let orbit = if tau < -eps {
            Orbit::O1
        } else if tau > eps {
            Orbit::O2
        } else {
            Orbit::Degenerate
        };
        let (kappa, j, phi) = if orbit == Orbit::O1 {
            let kappa = (-tau).sqrt();
            let j = k / kappa;
            // alternation tolerance scales with the form itself
            let tol = T::of(1e-10) * T::one().max(psi.max_abs() * psi.max_abs());
            let phi = dual_three_form(&psi, &j, tol)?;
            (Some(kappa), Some(j), Some(phi))
        } else {
            (None, None, None)
        };
        Ok(HitchinStructure { psi, k, tau, orbit, kappa, j, phi })
    }

    pub fn psi(&self) -> &KForm<T> {
        &self.psi
    }

    pub fn k_operator(&self) -> &Matrix6<T> {
        &self.k
    }

    pub fn tau(&self) -> T {
        self.tau
    }

    pub fn orbit(&self) -> Orbit {
        self.orbit
    }

    pub fn kappa(&self) -> Option<T> {
        self.kappa
    }

    pub fn j_operator(&self) -> Option<&Matrix6<T>> {
        self.j.as_ref()
    }

    pub fn phi(&self) -> Option<&KForm<T>> {
        self.phi.as_ref()
    }
}

#[derive(Serialize, Deserialize)]
#[serde(bound(serialize = "T: Serialize + Clone", deserialize = "T: Deserialize<'de> + Real"))]
struct HitchinStructureDto<T: Real> {
    psi: KForm<T>,
    #[serde(rename = "K")]
    k: Vec<Vec<T>>,
    tau: T,
    #[serde(skip_serializing_if = "Option::is_none")]
    kappa: Option<T>,
    #[serde(rename = "J", skip_serializing_if = "Option::is_none")]
    j: Option<Vec<Vec<T>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    phi: Option<KForm<T>>,
}

impl<T: Real + Serialize> Serialize for HitchinStructure<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        HitchinStructureDto {
            psi: self.psi.clone(),
            k: matrix_rows(&self.k),
            tau: self.tau,
            kappa: self.kappa,
            j: self.j.as_ref().map(matrix_rows),
            phi: self.phi.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de, T: Real + Deserialize<'de>> Deserialize<'de> for HitchinStructure<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let dto = HitchinStructureDto::<T>::deserialize(deserializer)?;
        let rebuilt = HitchinStructure::analyze(dto.psi, default_orbit_eps())
            .map_err(|e| D::Error::custom(format!("inconsistent structure: {e}")))?;
        let k = matrix_from_rows(&dto.k).ok_or_else(|| D::Error::custom("K must be 6x6"))?;
        let tol = T::of(1e-9);
        if (k - rebuilt.k).amax() > tol || (dto.tau - rebuilt.tau).abs() > tol {
            return Err(D::Error::custom("stored K/tau disagree with psi"));
        }
        Ok(rebuilt)
    }
}
