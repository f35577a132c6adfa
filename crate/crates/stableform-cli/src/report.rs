//! Report builders for the single-shot commands: orbit
//! classification, the induce/project/reinduce pipeline, and the
//! curvature cross-check.

use std::fs;
use std::path::Path;

use nalgebra as na;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use stableform::acs::{
    alpha, d_omega, project_polar, projected_omega_matrix, skew3, u_frame, OrthogonalAcs,
};
use stableform::curvature::{
    curvature_report, nk_defect, ricci_closed_form, scalar_closed_form, CurvatureError,
    NearlyKaehler,
};
use stableform::exterior::{matrix_rows, KForm, Matrix3};
use stableform::hitchin::{classify_orbit, default_orbit_eps, hitchin_k, tau_from_k, Orbit};
use stableform::liealg::{block6, LieAlgebraSpec};

use crate::CliError;

pub fn load_json<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::Input(format!("malformed input {}: {e}", path.display())))
}

/// Orbit classification of a 3-form; the complex-type fields are
/// present exactly when the orbit provides them.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassifyReport {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tau: Option<f64>,
    pub orbit: Orbit,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kappa: Option<f64>,
    #[serde(rename = "J", default, skip_serializing_if = "Option::is_none")]
    pub j: Option<Vec<Vec<f64>>>,
}

pub fn classify(psi: &KForm<f64>) -> Result<ClassifyReport, CliError> {
    if psi.degree() != 3 {
        return Err(CliError::Input(format!(
            "classification needs a 3-form, got degree {}",
            psi.degree()
        )));
    }
    let k = hitchin_k(psi);
    let tau = tau_from_k(&k);
    let orbit = classify_orbit(psi, default_orbit_eps());
    let report = match orbit {
        Orbit::Degenerate => ClassifyReport { tau: None, orbit, kappa: None, j: None },
        Orbit::O2 => ClassifyReport { tau: Some(tau), orbit, kappa: None, j: None },
        Orbit::O1 => {
            let kappa = (-tau).sqrt();
            ClassifyReport {
                tau: Some(tau),
                orbit,
                kappa: Some(kappa),
                j: Some(matrix_rows(&(k / kappa))),
            }
        }
    };
    Ok(report)
}

/// The three operator stages of the composed map, as row matrices.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PipelineStages {
    /// J induced by the differential of the structure's 2-form.
    pub induced: Vec<Vec<f64>>,
    /// Its polar projection back to the orthogonal structures.
    pub projected: Vec<Vec<f64>>,
    /// The structure induced again from the projection.
    pub reinduced: Vec<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PipelineReport {
    pub x: f64,
    pub t: f64,
    pub tau: f64,
    /// det B of the input; negative on the whole domain.
    pub det_b: f64,
    /// 8(det B)², the amplification determinant; positive.
    pub amplification: f64,
    /// Closed-form projected 2-form vs. the polar oracle.
    pub projection_residual: f64,
    /// Defect of the nearly Kähler identity for the final stage in
    /// its adapted frame, against the canonical metric.
    pub nk_defect: f64,
    pub stages: PipelineStages,
}

pub fn pipeline(acs: &OrthogonalAcs<f64>) -> Result<PipelineReport, CliError> {
    if !acs.is_ao_minus() {
        return Err(CliError::Domain(format!(
            "x = {} is out of range: the induced 3-form is of complex type only for x < 3/4",
            acs.x()
        )));
    }
    let alg = LieAlgebraSpec::su2_su2();
    let tau = tau_from_k(&hitchin_k(&d_omega(acs, &alg)));

    let j1 = alpha(acs).map_err(|e| CliError::Domain(e.to_string()))?;
    let pi = project_polar(&j1).map_err(|e| CliError::Domain(e.to_string()))?;
    let j2 = alpha(&pi).map_err(|e| {
        CliError::Domain(format!("projected structure left the domain: {e}"))
    })?;

    let closed = projected_omega_matrix(acs).map_err(|e| CliError::Domain(e.to_string()))?;
    let projection_residual = (closed.transpose() - pi.matrix()).amax();

    let frame = u_frame(acs).map_err(|e| CliError::Domain(e.to_string()))?;
    let j2u = frame.apply_operator(j2.matrix());
    let nk = NearlyKaehler::standard(&alg)
        .map_err(|e| CliError::Verification(e.to_string()))?;
    let defect = nk_defect(&nk.metric, &j2u, &alg, 64);

    let det_b = acs.det_b();
    Ok(PipelineReport {
        x: acs.x(),
        t: acs.t(),
        tau,
        det_b,
        amplification: 8.0 * det_b * det_b,
        projection_residual,
        nk_defect: defect,
        stages: PipelineStages {
            induced: matrix_rows(j1.matrix()),
            projected: matrix_rows(&pi.matrix()),
            reinduced: matrix_rows(j2.matrix()),
        },
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurvatureCliReport {
    pub t: f64,
    pub x: f64,
    /// Ricci tensor from the covariant-derivative oracle, in the
    /// proper frame.
    pub ricci_oracle: Vec<Vec<f64>>,
    /// The closed-form diagonal for the same parameter.
    pub ricci_closed_form: Vec<f64>,
    /// Largest entrywise gap between the two (off-diagonals compared
    /// against zero).
    pub max_discrepancy: f64,
    pub scalar_oracle: f64,
    pub scalar_closed_form: f64,
    /// Defect of the nearly Kähler identity for this metric with the
    /// canonical structure; ≈ 0 exactly at t = 1.
    pub nk_defect: f64,
}

fn map_curvature_error(e: CurvatureError) -> CliError {
    match e {
        CurvatureError::PoleAtHalf { .. } | CurvatureError::NotPositiveDefinite => {
            CliError::Domain(e.to_string())
        }
        CurvatureError::ParameterOutOfRange { .. } => CliError::Input(e.to_string()),
        other => CliError::Verification(other.to_string()),
    }
}

pub fn curvature(acs: &OrthogonalAcs<f64>) -> Result<CurvatureCliReport, CliError> {
    let alg = LieAlgebraSpec::su2_su2();
    let t = acs.t();
    let diag = ricci_closed_form(t, 1e-9).map_err(map_curvature_error)?;
    let scalar_cf = scalar_closed_form(t, 1e-9).map_err(map_curvature_error)?;
    let report = curvature_report(acs, &alg).map_err(map_curvature_error)?;
    let mut max_discrepancy = 0.0f64;
    for (r, d) in diag.iter().enumerate() {
        for c in 0..6 {
            let want = if r == c { *d } else { 0.0 };
            max_discrepancy = max_discrepancy.max((report.ricci[r][c] - want).abs());
        }
    }
    Ok(CurvatureCliReport {
        t,
        x: acs.x(),
        ricci_oracle: report.ricci,
        ricci_closed_form: diag.to_vec(),
        max_discrepancy,
        scalar_oracle: report.scalar,
        scalar_closed_form: scalar_cf,
        nk_defect: report.nk_defect,
    })
}

/// Builds the one-parameter family member with A = C the rotation
/// about the middle axis by a₂ = √(1−t²) and B = diag(−t, 1, t),
/// which is orthogonal, correctly oriented, and has the requested t.
pub fn curvature_at(t: f64) -> Result<CurvatureCliReport, CliError> {
    // range-check first so a bad t maps to the right exit code
    // instead of a NaN matrix
    ricci_closed_form(t, 1e-9).map_err(map_curvature_error)?;
    let a2 = (1.0 - t * t).sqrt();
    let a = skew3([0.0, a2, 0.0]);
    let b = Matrix3::from_diagonal(&na::Vector3::new(-t, 1.0, t));
    let m = block6(&a, &b, &(-b.transpose()), &a);
    let acs = OrthogonalAcs::validate(&m)
        .map_err(|e| CliError::Verification(format!("synthesized structure invalid: {e}")))?;
    curvature(&acs)
}
