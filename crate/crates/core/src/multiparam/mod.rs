//! Functions indexed by a parameter sequence `a`: `h_{k;a}`, `e_{k;a}`,
//! `s_{mu;a}`, the Frobenius-Schur functions `FS_mu = s_{mu;special}`, and the
//! identities relating them to tableaux, characters and interpolation.

pub mod antisym;
pub mod characters;
pub mod functions;
pub mod hook_series;
pub mod interpolation;
pub mod ribbon;
pub mod transition;

pub use antisym::{factorized_eval, sergeev_pragacz_eval};
pub use characters::{dim_ratio_check, p_sharp, character_ratio_check, RatioReport};
pub use functions::{
    dependence_window, e_mp, frobenius_schur, giambelli, h_mp, hook_function, s_mp, s_mp_dual, s_mp_with_order,
};
pub use hook_series::{hook_series_check, HookSeriesReport};
pub use interpolation::{
    characterize_by_top_term, characterize_by_values, eval_at_diagram, eval_point_of_diagram, interpolate,
    interpolate_with_order, reconstruct, value_at_self, NodeOrder,
};
pub use ribbon::{combinatorial_eval, ribbon_poly, BivariatePoly, RibbonFactor, RibbonFactors};
pub use transition::{transition_c, transition_expand};
