//! Seeded verification engine: sweeps the whole construction over
//! reproducible random samples, checks every identity the library
//! claims against independent oracles, and reports per-sample
//! residuals as CSV plus a pass/fail summary.

use std::io::{self, Write};

use nalgebra as na;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use stableform::acs::{
    alpha, cofactor3, hermitian_metric_by_definition, hermitian_pair, k_block_form, d_omega,
    project_polar, projected_omega_matrix, so3_rotation_block, u_frame, GeneralAcs,
    OrthogonalAcs, SampleConstraint, DEFAULT_MAX_TRIES,
};
use stableform::curvature::{
    curvature_report, nk_defect, nk_type_constant, ricci_closed_form, scalar_closed_form,
    NearlyKaehler,
};
use stableform::exterior::{KForm, Matrix3, Matrix6, Vector6};
use stableform::hitchin::{hitchin_k, tau_from_k};
use stableform::liealg::LieAlgebraSpec;

use crate::CliError;

/// Golden-ratio mixing constant for deriving per-sample substreams.
const SUBSTREAM_MIX: u64 = 0x9E37_79B9_7F4A_7C15;

/// Substream id offsets per stratum, so streams never collide.
const ID_BOUNDARY: u64 = 1_000_000;
const ID_CURVATURE: u64 = 2_000_000;
const ID_NK: u64 = 3_000_000;
const ID_FOUNDATIONS: u64 = 4_000_000;

/// A deterministic generator for one sample: every sample owns its
/// own substream, so failures can be replayed in isolation and the
/// sweep order never changes the draws.
pub fn substream_rng(seed: u64, id: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ id.wrapping_mul(SUBSTREAM_MIX))
}

/// Per-check tolerance set; the defaults are the acceptance
/// thresholds of each check.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    pub anchors: f64,
    pub tau_formula: f64,
    pub k_block: f64,
    pub orbit_boundary: f64,
    pub omega_projection: f64,
    pub hermitian_metric: f64,
    pub ricci: f64,
    pub nk_system: f64,
    pub foundations: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            anchors: 1e-12,
            tau_formula: 1e-9,
            k_block: 1e-10,
            orbit_boundary: 1e-9,
            omega_projection: 1e-9,
            hermitian_metric: 1e-9,
            ricci: 1e-8,
            nk_system: 1e-9,
            foundations: 1e-12,
        }
    }
}

impl Tolerances {
    fn validate(&self) -> Result<(), CliError> {
        let all = [
            self.anchors,
            self.tau_formula,
            self.k_block,
            self.orbit_boundary,
            self.omega_projection,
            self.hermitian_metric,
            self.ricci,
            self.nk_system,
            self.foundations,
        ];
        if all.iter().any(|&t| !t.is_finite() || t <= 0.0) {
            return Err(CliError::Input("tolerances must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyConfig {
    pub seed: u64,
    pub samples: usize,
    pub tolerances: Tolerances,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { seed: 42, samples: 10_000, tolerances: Tolerances::default() }
    }
}

impl VerifyConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        if self.samples == 0 {
            return Err(CliError::Input("samples must be at least 1".into()));
        }
        self.tolerances.validate()
    }
}

/// Result of one named check.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    /// Largest residual the check saw (for sign checks, the smallest
    /// margin).
    pub worst: f64,
    pub tolerance: f64,
    pub detail: String,
}

/// One CSV row; empty fields mean the quantity does not apply to the
/// row's stratum.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleRow {
    pub index: usize,
    pub x: f64,
    pub t: f64,
    pub tau: Option<f64>,
    pub residual_thm1: Option<f64>,
    pub det_b: Option<f64>,
    pub residual_thm2: Option<f64>,
    pub residual_thm3_max: Option<f64>,
    pub nk_defect: Option<f64>,
}

#[derive(Debug, Clone)]
pub struct VerifySummary {
    pub config: VerifyConfig,
    pub checks: Vec<CheckOutcome>,
    pub rows: Vec<SampleRow>,
}

impl VerifySummary {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// The JSON form of the summary (configuration and check
    /// outcomes; rows are the CSV's job).
    pub fn report(&self) -> VerifyReport {
        VerifyReport {
            seed: self.config.seed,
            samples: self.config.samples,
            tolerances: self.config.tolerances,
            checks: self.checks.clone(),
            all_passed: self.all_passed(),
        }
    }
}

/// Serializable verification report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub samples: usize,
    pub tolerances: Tolerances,
    pub checks: Vec<CheckOutcome>,
    pub all_passed: bool,
}

pub const CSV_HEADER: &str =
    "sample_index,x,t,tau,residual_thm1,detB,residual_thm2,residual_thm3_max,nk_defect";

fn csv_cell(v: Option<f64>) -> String {
    v.map(|v| v.to_string()).unwrap_or_default()
}

/// Writes the per-sample residual table; same config and seed give
/// byte-identical output.
pub fn write_csv<W: Write>(summary: &VerifySummary, out: &mut W) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for row in &summary.rows {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{}",
            row.index,
            row.x,
            row.t,
            csv_cell(row.tau),
            csv_cell(row.residual_thm1),
            csv_cell(row.det_b),
            csv_cell(row.residual_thm2),
            csv_cell(row.residual_thm3_max),
            csv_cell(row.nk_defect),
        )?;
    }
    Ok(())
}

/// Number of parameter strata (and of composed-map samples) for a
/// given sweep size; 100 at the default size, smaller for smoke runs.
fn stratum_count(samples: usize) -> usize {
    (samples / 100).clamp(1, 100)
}

struct Worst(f64);

impl Worst {
    fn new() -> Self {
        Worst(0.0)
    }
    fn fold(&mut self, v: f64) {
        if v > self.0 {
            self.0 = v;
        }
    }
}

fn sorted_eigenvalues(m: &Matrix6<f64>) -> [f64; 6] {
    let eig = na::SymmetricEigen::new(*m);
    let mut out = [0.0; 6];
    for (slot, v) in eig.eigenvalues.iter().enumerate() {
        out[slot] = *v;
    }
    out.sort_by(f64::total_cmp);
    out
}

/// Runs the whole suite.  Sampling is rejection-based inside fixed
/// substreams, so the same seed always visits the same structures.
pub fn run(config: &VerifyConfig) -> Result<VerifySummary, CliError> {
    config.validate()?;
    let alg = LieAlgebraSpec::<f64>::su2_su2();
    let tol = &config.tolerances;
    let mut checks: Vec<CheckOutcome> = Vec::new();
    let mut rows: Vec<SampleRow> = Vec::new();

    // ----- canonical anchors ------------------------------------------------
    {
        let i0 = OrthogonalAcs::<f64>::i0();
        let psi0 = d_omega(&i0, &alg);
        let k0 = hitchin_k(&psi0);
        let tau0 = tau_from_k(&k0);
        let mut worst = Worst::new();
        worst.fold((tau0 + 3.0).abs());

        let s = 1.0 / 3.0f64.sqrt();
        let e = Matrix3::<f64>::identity();
        let expected_j0 = stableform::liealg::block6(
            &(e * s),
            &(e * (-2.0 * s)),
            &(e * (2.0 * s)),
            &(e * (-s)),
        );
        let j0 = alpha(&i0).map_err(|e| CliError::Domain(e.to_string()))?;
        worst.fold((j0.matrix() - expected_j0).amax());

        // the integrable structure sits in the opposite orbit
        let a = stableform::acs::skew3([0.0, 0.0, -1.0f64]);
        let b = Matrix3::from_diagonal(&na::Vector3::new(-1.0, 0.0, 0.0));
        let m = stableform::liealg::block6(&a, &b, &(-b.transpose()), &a);
        let integrable = OrthogonalAcs::validate(&m)
            .map_err(|e| CliError::Input(format!("integrable anchor rejected: {e}")))?;
        let tau_int = tau_from_k(&hitchin_k(&d_omega(&integrable, &alg)));
        worst.fold((tau_int - 1.0).abs());

        checks.push(CheckOutcome {
            name: "anchors".into(),
            passed: worst.0 <= tol.anchors,
            worst: worst.0,
            tolerance: tol.anchors,
            detail: format!(
                "canonical tau {tau0} (target -3), induced operator blocks, \
                 integrable tau {tau_int} (target 1)"
            ),
        });
    }

    // ----- main sweep -------------------------------------------------------
    let boundary = config.samples / 10;
    let main = config.samples - boundary;

    let mut worst_tau = Worst::new();
    let mut worst_identity = Worst::new();
    let mut equivalence_violations = 0usize;
    let mut worst_k_block = Worst::new();
    let mut worst_det_b: f64 = f64::NEG_INFINITY;
    let mut orbit_violations = 0usize;
    let mut in_domain_count = 0usize;
    let mut worst_projection = Worst::new();
    let mut worst_rotation = Worst::new();
    let mut worst_hermitian = Worst::new();

    for i in 0..config.samples {
        let (constraint, id) = if i < main {
            (SampleConstraint::Unrestricted, i as u64)
        } else {
            (
                SampleConstraint::XWindow { lo: 0.70, hi: 0.75 - 1e-6 },
                ID_BOUNDARY + (i - main) as u64,
            )
        };
        let mut rng = substream_rng(config.seed, id);
        let acs = OrthogonalAcs::sample(&mut rng, constraint, DEFAULT_MAX_TRIES)
            .map_err(|e| CliError::Verification(format!("sampling stalled at index {i}: {e}")))?;

        let x = acs.x();
        let t = acs.t();
        let psi = d_omega(&acs, &alg);
        let k = hitchin_k(&psi);
        let tau = tau_from_k(&k);
        let residual_thm1 = (tau - (4.0 * x - 3.0)).abs();
        worst_tau.fold(residual_thm1);

        // the three block invariants tie together: x = Σa² = Σc² and
        // Σb² = 3 − 2x, hence the four orbit conditions agree
        let c = acs.c_params();
        let sum_c = c.iter().map(|v| v * v).sum::<f64>();
        let sum_b = acs.b_block().iter().map(|v| v * v).sum::<f64>();
        worst_identity.fold((x - sum_c).abs());
        worst_identity.fold((sum_b - (3.0 - 2.0 * x)).abs());
        if (x - 0.75).abs() > 1e-6 {
            let conditions =
                [tau < 0.0, sum_c < 0.75, x < 0.75, sum_b > 1.5];
            if conditions.iter().any(|&v| v != conditions[0]) {
                equivalence_violations += 1;
            }
        }

        worst_k_block.fold((k - k_block_form(&acs)).amax());
        let a_star = cofactor3(&acs.a_matrix());
        worst_k_block.fold((a_star * a_star - a_star * x).amax());

        let det_b = acs.det_b();
        let mut residual_thm2 = None;
        if acs.is_ao_minus() {
            in_domain_count += 1;
            worst_det_b = worst_det_b.max(det_b);
            let amplification = 8.0 * det_b * det_b;
            if det_b >= -tol.orbit_boundary || amplification <= tol.orbit_boundary {
                orbit_violations += 1;
            }

            let j = GeneralAcs::from_matrix_unchecked(k / (-tau).sqrt());
            let pi = project_polar(&j)
                .map_err(|e| CliError::Verification(format!("projection failed at {i}: {e}")))?;
            let closed = projected_omega_matrix(&acs)
                .map_err(|e| CliError::Verification(e.to_string()))?;
            let r2 = (closed.transpose() - pi.matrix()).amax();
            worst_projection.fold(r2);
            residual_thm2 = Some(r2);

            let xb = so3_rotation_block(&acs)
                .map_err(|e| CliError::Verification(e.to_string()))?;
            worst_rotation.fold((xb.transpose() * xb - Matrix3::identity()).amax());
            worst_rotation.fold((xb.determinant() - 1.0).abs());

            let pair = hermitian_pair(&acs)
                .map_err(|e| CliError::Verification(e.to_string()))?;
            let by_def = hermitian_metric_by_definition(&acs, &alg)
                .map_err(|e| CliError::Verification(e.to_string()))?;
            worst_hermitian.fold((pair.metric - by_def).amax());
            let got = sorted_eigenvalues(&pair.metric);
            let mut expect = [
                2.0 * t - 1.0,
                2.0 * t - 1.0,
                1.0,
                2.0 * t + 1.0,
                2.0 * t + 1.0,
                4.0 * t * t - 1.0,
            ];
            expect.sort_by(f64::total_cmp);
            for (g, w) in got.iter().zip(expect) {
                worst_hermitian.fold((g - w).abs());
            }
        }

        rows.push(SampleRow {
            index: i,
            x,
            t,
            tau: Some(tau),
            residual_thm1: Some(residual_thm1),
            det_b: Some(det_b),
            residual_thm2,
            residual_thm3_max: None,
            nk_defect: None,
        });
    }

    checks.push(CheckOutcome {
        name: "tau-formula".into(),
        passed: worst_tau.0 <= tol.tau_formula
            && worst_identity.0 <= tol.tau_formula
            && equivalence_violations == 0,
        worst: worst_tau.0.max(worst_identity.0),
        tolerance: tol.tau_formula,
        detail: format!(
            "{} samples; worst |tau - (4x-3)| {:.3e}; block identities {:.3e}; \
             {} orbit-condition disagreements",
            config.samples, worst_tau.0, worst_identity.0, equivalence_violations
        ),
    });

    checks.push(CheckOutcome {
        name: "k-block".into(),
        passed: worst_k_block.0 <= tol.k_block,
        worst: worst_k_block.0,
        tolerance: tol.k_block,
        detail: format!(
            "block formula vs contraction operator and A*A* = xA*, worst {:.3e}",
            worst_k_block.0
        ),
    });

    checks.push(CheckOutcome {
        name: "orbit-boundary".into(),
        passed: orbit_violations == 0,
        worst: if worst_det_b.is_finite() { worst_det_b } else { 0.0 },
        tolerance: tol.orbit_boundary,
        detail: format!(
            "{in_domain_count} samples below the 3/4 bound ({boundary} forced near it); \
             largest det B {worst_det_b:.6}; {orbit_violations} violations"
        ),
    });

    checks.push(CheckOutcome {
        name: "omega-projection".into(),
        passed: worst_projection.0 <= tol.omega_projection && worst_rotation.0 <= 1e-10,
        worst: worst_projection.0,
        tolerance: tol.omega_projection,
        detail: format!(
            "closed form vs polar oracle worst {:.3e}; rotation-block orthogonality \
             and determinant worst {:.3e} (fixed 1e-10)",
            worst_projection.0, worst_rotation.0
        ),
    });

    // the isotropic spectrum {1,1,1,3,3,3} is exact
    let mut i0_spectrum = Worst::new();
    {
        let pair = hermitian_pair(&OrthogonalAcs::<f64>::i0())
            .map_err(|e| CliError::Verification(e.to_string()))?;
        let got = sorted_eigenvalues(&pair.metric);
        for (g, w) in got.iter().zip([1.0, 1.0, 1.0, 3.0, 3.0, 3.0]) {
            i0_spectrum.fold((g - w).abs());
        }
    }
    checks.push(CheckOutcome {
        name: "hermitian-metric".into(),
        passed: worst_hermitian.0 <= tol.hermitian_metric && i0_spectrum.0 <= 1e-12,
        worst: worst_hermitian.0,
        tolerance: tol.hermitian_metric,
        detail: format!(
            "formula vs definition and spectrum worst {:.3e}; isotropic-point \
             spectrum residual {:.3e} (fixed 1e-12)",
            worst_hermitian.0, i0_spectrum.0
        ),
    });

    // ----- curvature strata -------------------------------------------------
    let strata = stratum_count(config.samples);
    let mut worst_ricci = Worst::new();
    let mut worst_offdiag = Worst::new();
    let mut worst_einstein = Worst::new();
    for ki in 0..strata {
        let index = config.samples + ki;
        let t_target = 0.55 + 0.45 * (ki + 1) as f64 / strata as f64;
        let acs = if ki + 1 == strata {
            // the last stratum is the Einstein point itself
            OrthogonalAcs::i0()
        } else {
            let x_target = 1.0 - t_target * t_target;
            let lo = (x_target - 0.004).max(0.0);
            let hi = (x_target + 0.004).min(0.75 - 1e-6);
            let mut rng = substream_rng(config.seed, ID_CURVATURE + ki as u64);
            OrthogonalAcs::sample(
                &mut rng,
                SampleConstraint::XWindow { lo, hi },
                DEFAULT_MAX_TRIES,
            )
            .map_err(|e| {
                CliError::Verification(format!("curvature stratum {ki} stalled: {e}"))
            })?
        };
        let x = acs.x();
        let t = acs.t();
        let report = curvature_report(&acs, &alg)
            .map_err(|e| CliError::Verification(format!("stratum {ki}: {e}")))?;
        let diag = ricci_closed_form(t, 1e-12)
            .map_err(|e| CliError::Verification(e.to_string()))?;
        let scalar = scalar_closed_form(t, 1e-12)
            .map_err(|e| CliError::Verification(e.to_string()))?;
        let mut row_worst = Worst::new();
        for (r, want) in diag.iter().enumerate() {
            for c in 0..6 {
                let got = report.ricci[r][c];
                if r == c {
                    let res = (got - want).abs();
                    worst_ricci.fold(res);
                    row_worst.fold(res);
                } else {
                    worst_offdiag.fold(got.abs());
                    row_worst.fold(got.abs());
                }
            }
        }
        let scalar_res = (report.scalar - scalar).abs();
        worst_ricci.fold(scalar_res);
        row_worst.fold(scalar_res);
        if ki + 1 == strata {
            for r in 0..6 {
                worst_einstein.fold((report.ricci[r][r] - 5.0 / 18.0).abs());
            }
            worst_einstein.fold((report.scalar - 5.0 / 3.0).abs());
        }
        rows.push(SampleRow {
            index,
            x,
            t,
            tau: None,
            residual_thm1: None,
            det_b: None,
            residual_thm2: None,
            residual_thm3_max: Some(row_worst.0),
            nk_defect: None,
        });
    }
    checks.push(CheckOutcome {
        name: "ricci".into(),
        passed: worst_ricci.0 <= tol.ricci
            && worst_offdiag.0 <= 1e-9
            && worst_einstein.0 <= 1e-10,
        worst: worst_ricci.0,
        tolerance: tol.ricci,
        detail: format!(
            "{strata} strata; diagonal+scalar vs closed form worst {:.3e}; \
             off-diagonal worst {:.3e} (fixed 1e-9); Einstein point worst {:.3e} \
             (fixed 1e-10)",
            worst_ricci.0, worst_offdiag.0, worst_einstein.0
        ),
    });

    // ----- nearly Kähler system --------------------------------------------
    let nk_samples = stratum_count(config.samples);
    let mut worst_nk = Worst::new();
    let nk = NearlyKaehler::standard(&alg)
        .map_err(|e| CliError::Verification(e.to_string()))?;
    worst_nk.fold(nk_defect(&nk.metric, &nk.j, &alg, 64));
    worst_nk.fold(nk.structure_equation_residual(&alg));
    let (mu, mu_residual) = nk_type_constant(&nk, &alg);
    worst_nk.fold(mu_residual);
    for i in 0..nk_samples {
        let index = config.samples + strata + i;
        let mut rng = substream_rng(config.seed, ID_NK + i as u64);
        let acs = OrthogonalAcs::sample(&mut rng, SampleConstraint::AoMinus, DEFAULT_MAX_TRIES)
            .map_err(|e| CliError::Verification(format!("nk sample {i} stalled: {e}")))?;
        let j1 = alpha(&acs).map_err(|e| CliError::Verification(e.to_string()))?;
        let pi = project_polar(&j1).map_err(|e| CliError::Verification(e.to_string()))?;
        let j2 = alpha(&pi).map_err(|e| {
            CliError::Verification(format!("projected structure left the domain: {e}"))
        })?;
        let frame = u_frame(&acs).map_err(|e| CliError::Verification(e.to_string()))?;
        let j2u = frame.apply_operator(j2.matrix());
        worst_nk.fold((j2u - nk.j).amax());
        let defect = nk_defect(&nk.metric, &j2u, &alg, 50);
        worst_nk.fold(defect);
        rows.push(SampleRow {
            index,
            x: acs.x(),
            t: acs.t(),
            tau: None,
            residual_thm1: None,
            det_b: None,
            residual_thm2: None,
            residual_thm3_max: None,
            nk_defect: Some(defect),
        });
    }
    checks.push(CheckOutcome {
        name: "nk-system".into(),
        passed: worst_nk.0 <= tol.nk_system,
        worst: worst_nk.0,
        tolerance: tol.nk_system,
        detail: format!(
            "canonical defect, {nk_samples} composed-map samples, and form system \
             (mu {mu:.12}) worst {:.3e}",
            worst_nk.0
        ),
    });

    // ----- foundations ------------------------------------------------------
    fn random_form(rng: &mut ChaCha8Rng, degree: usize) -> KForm<f64> {
        let len = stableform::exterior::basis_indices(degree).len();
        let coeffs: Vec<f64> = (0..len).map(|_| rng.random_range(-1.0..1.0)).collect();
        KForm::from_coeffs(degree, coeffs).expect("sized by basis table")
    }
    let mut worst_foundations = Worst::new();
    worst_foundations.fold(alg.jacobi_residual());
    for rep in 0..32u64 {
        let mut rng = substream_rng(config.seed, ID_FOUNDATIONS + rep);
        for degree in 0..=4usize {
            let form = random_form(&mut rng, degree);
            let dd = alg.mc_differential(&alg.mc_differential(&form));
            worst_foundations.fold(dd.max_abs());
            // the sparse-constant differential agrees with the
            // alternating-sum evaluation
            let brute = alg.brute_force_differential(&form);
            worst_foundations.fold((&alg.mc_differential(&form) - &brute).max_abs());
        }
        for (p, q) in [(1usize, 2usize), (2, 2), (2, 3), (1, 4)] {
            let a = random_form(&mut rng, p);
            let b = random_form(&mut rng, q);
            let x: Vector6<f64> = Vector6::from_fn(|_, _| rng.random_range(-1.0..1.0));
            let lhs = a.wedge(&b).interior(&x);
            let sign = if p % 2 == 0 { 1.0 } else { -1.0 };
            let rhs = &a.interior(&x).wedge(&b) + &(a.wedge(&b.interior(&x)) * sign);
            worst_foundations.fold((&lhs - &rhs).max_abs());
        }
        let y: Vector6<f64> = Vector6::from_fn(|_, _| rng.random_range(-1.0..1.0));
        let back = stableform::exterior::dual_iso_a(&KForm::volume().interior(&y));
        worst_foundations.fold((back - y).amax());
    }
    checks.push(CheckOutcome {
        name: "foundations".into(),
        passed: worst_foundations.0 <= tol.foundations,
        worst: worst_foundations.0,
        tolerance: tol.foundations,
        detail: format!(
            "d after d, antiderivation, volume-contraction round trip, Jacobi; \
             worst {:.3e}",
            worst_foundations.0
        ),
    });

    Ok(VerifySummary { config: config.clone(), checks, rows })
}

/// One status line per check, in run order.
pub fn print_outcomes<W: Write>(summary: &VerifySummary, out: &mut W) -> io::Result<()> {
    for check in &summary.checks {
        writeln!(
            out,
            "{} {:<18} worst {:>10.3e}  tol {:>8.0e}  {}",
            if check.passed { "PASS" } else { "FAIL" },
            check.name,
            check.worst,
            check.tolerance,
            check.detail
        )?;
    }
    Ok(())
}
