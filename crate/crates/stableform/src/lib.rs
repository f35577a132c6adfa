//! Left-invariant geometry on S³×S³ driven by stable 3-forms.
//!
//! The tangent space at the identity is su(2)⊕su(2) ≅ ℝ⁶ with the
//! Killing–Cartan metric normalized to the identity matrix.  Every
//! orthogonal almost complex structure `I` yields a Kähler-like 2-form
//! ω_I, whose Maurer–Cartan differential dω_I is a 3-form.  When that
//! 3-form is stable of complex type, Hitchin's construction produces a
//! second almost complex structure J_I; projecting J_I back onto the
//! orthogonal ones lands, in a suitable frame, on the nearly Kähler
//! structure of S³×S³.  This crate implements each arrow of that chain
//! together with an independent curvature oracle for the induced
//! metrics.
//!
//! Modules build on one another in order: [`exterior`] (forms on ℝ⁶),
//! [`liealg`] (brackets and the invariant differential), [`hitchin`]
//! (stable-form classification), [`acs`] (orthogonal structures, the
//! α/π maps and the Hermitian metrics), [`curvature`] (Levi-Civita
//! connection, Ricci, nearly Kähler defect).
//!
//! All kernels are generic over the scalar via [`scalar::Real`];
//! `f64` aliases are exported at the crate root.

pub mod acs;
pub mod curvature;
pub mod exterior;
pub mod hitchin;
pub mod liealg;
pub mod scalar;

pub use scalar::Real;

pub use exterior::{KForm, Matrix3, Matrix6, Vector6};

/// `f64` instantiations of the core types.
pub type KForm64 = exterior::KForm<f64>;
pub type Vector64 = exterior::Vector6<f64>;
pub type Matrix64 = exterior::Matrix6<f64>;
pub type LieAlgebra64 = liealg::LieAlgebraSpec<f64>;
pub type FrameChange64 = liealg::FrameChange<f64>;
pub type HitchinStructure64 = hitchin::HitchinStructure<f64>;
pub type OrthogonalAcs64 = acs::OrthogonalAcs<f64>;
pub type GeneralAcs64 = acs::GeneralAcs<f64>;
pub type HermitianPair64 = acs::HermitianPair<f64>;
pub type LeftInvariantMetric64 = curvature::LeftInvariantMetric<f64>;
pub type CurvatureReport64 = curvature::CurvatureReport<f64>;

/// `f32` instantiations, for callers that trade precision for size.
pub type KForm32 = exterior::KForm<f32>;
pub type Vector32 = exterior::Vector6<f32>;
pub type Matrix32 = exterior::Matrix6<f32>;
pub type OrthogonalAcs32 = acs::OrthogonalAcs<f32>;
