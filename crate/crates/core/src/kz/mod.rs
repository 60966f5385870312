//! The KZ-derived ODE for a four-point function of typical modules, its
//! reduction to the hypergeometric equation, and the rigidity constant
//! `₂F₁(x, -x; 1; 1) = sin(πx)/(πx)`.

pub mod hypergeometric;
pub mod system;

pub use hypergeometric::{
    closed_form, hyp2f1, hyp2f1_with_derivatives, ode_residual, ode_residual_of,
    rigidity_constant, series_terms, HypergeometricSpec,
};
pub use system::{
    build_first_order_system, check_transform, check_transform_of, eliminate_to_second_order,
    hypergeometric_ode, main_diff_eq, verify_vanish1, FirstOrderSystem, SecondOrderOde,
    Vanish1Relations, Vanish1Report,
};
