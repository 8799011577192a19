//! Exact enclosure arithmetic for bases, expansions and series identities.

pub mod beta;
pub mod expansion;
pub mod field;
pub mod identities;
pub mod interval;
pub mod poly;

pub use beta::{
    base_equation_residual, beta_equation, compute_beta, compute_beta_with, gamma_relation, series_closed_form,
    BetaCertificate, SeriesForm, DEFAULT_PRECISION_BITS,
};
pub use expansion::{
    cylinder_image, expand, f_beta, f_beta_exact, negabeta_step, rescale_into_domain, CylinderImage, Expansion,
    PeriodStatus,
};
pub use field::BetaNumber;
pub use identities::{
    check_generating_identity, check_omega_polynomial, entropy_limit_estimate, generating_closed_form,
    omega_polynomials, omega_word,
};
pub use interval::PrecisionReal;
pub use poly::IntPoly;
