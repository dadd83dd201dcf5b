//! Correlations of two-qubit X-states.
//!
//! An X-state is a two-qubit density matrix whose only non-zero entries sit on
//! the main diagonal and the anti-diagonal. For this seven-parameter family the
//! crate computes, in bits:
//!
//! | Quantity | Function |
//! |----------|----------|
//! | quantum mutual information `I` | [`information::mutual_information`] |
//! | classical correlation `C` (measurement on qubit B) | [`discord::classical_correlation`] |
//! | quantum discord `Q = I - C` | [`discord::quantum_discord`] |
//! | concurrence `C'` | [`XState::concurrence`] |
//!
//! The classical correlation is obtained from a closed-form minimization of the
//! post-measurement conditional entropy over two analytic candidates (a
//! computational-basis measurement and the best measurement in the transverse
//! plane). The [`oracle`] module minimizes the same quantity numerically over
//! every measurement direction and over trine POVM frames, so the analytic
//! result can be audited state by state.
//!
//! ```
//! use xdiscord::{discord, families::{Family, FamilySpec}};
//!
//! let werner = FamilySpec::new(Family::Werner, 0.5).unwrap().build().unwrap();
//! let report = discord::report(&werner).unwrap();
//! assert!((report.quantum_discord - 0.262483).abs() < 1e-5);
//! ```

mod error;
mod vec3;

pub mod discord;
pub mod families;
pub mod information;
pub mod measurement;
pub mod oracle;
pub mod qstate;

pub use error::{Error, Result};
pub use num_complex::Complex64;
pub use qstate::{CorrelationParams, RawElements, Spectrum, XState};
pub use vec3::Vec3;
