//! Differential operators in the Weyl algebra `ℚ(params)[x]⟨δ⟩`, stored in θ-form.

mod certificate;
mod delta;
mod local;
mod operator;
mod transform;

pub use certificate::{
    ft_quotient, minimality_certificate, minimality_under_witness, MinimalityReport,
};
pub use delta::{ft_raw, to_delta_form, to_theta_form, DeltaFormOperator};
pub use local::{
    certify_scheme, indicial_at, is_singular_at, local_form_at, newton_slopes_at_infinity,
    riemann_scheme, LaurentLocalForm, Point, RiemannScheme, Slope,
};
pub use operator::ThetaFormOperator;
pub use transform::{
    forced_negative_integer, ft_theta, generically_non_integer, inversion_normalized,
    kummer_pullback, left_factor_divide, left_multiply, match_up_to_twist, twist_shift, TwistMatch,
};
