//! Frequencies of `ad(ξ)`, the splitting they induce, Jacobi profiles and
//! spindle numbers.

mod dense;
mod number;
mod profile;
mod spectrum;
mod split;

pub use number::{
    adjoint_involution_flags, adjoint_space_check, center_divisibility_check, closed_form_lambda, exact_lambda,
    product_spindle, spindle_number, AdjointFlags, SpindleReport, GRID_DIVISIONS,
};
pub use profile::{
    classify, classify_real, jacobi_norm_sq, slice_dimension, slice_dimension_at, spectrum_slice_dimension,
    uniform_components, SliceKind,
};
pub use spectrum::{
    ad_cube_residual, ad_eigenvalues, ad_spectrum, is_canonical, is_extrinsically_symmetric_type, normalize_canonical,
    AdSpectrum,
};
pub use split::{cartan_split, CartanSplit, SplitChecks};
