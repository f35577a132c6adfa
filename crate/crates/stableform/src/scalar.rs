//! Scalar abstraction shared by every kernel in the crate.

use num_traits::{FromPrimitive, ToPrimitive};

/// Real scalar usable in all geometric computations: a nalgebra real
/// field with primitive conversions and copy semantics.  `f32` and
/// `f64` qualify via the blanket impl.
pub trait Real: nalgebra::RealField + FromPrimitive + ToPrimitive + Copy {
    /// Converts an `f64` constant, panicking only if the scalar type
    /// cannot represent plain literals (never for `f32`/`f64`).
    #[inline]
    fn of(v: f64) -> Self {
        Self::from_f64(v).expect("literal must convert into the scalar type")
    }

    /// Lossy view of the value as `f64`, used for diagnostics.
    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl<T> Real for T where T: nalgebra::RealField + FromPrimitive + ToPrimitive + Copy {}

/// Default validation tolerance for the scalar type: `1e-10` for
/// `f64`, loosened to match the precision actually available when the
/// scalar is coarser.
pub fn default_tol<T: Real>() -> T {
    let floor = T::default_epsilon() * T::of(256.0);
    if floor > T::of(1e-10) {
        floor
    } else {
        T::of(1e-10)
    }
}
