//! Weighted Laplacians of the Schreier graphs, Jacobi operators over the
//! subshift, and their spectra.

mod export;
mod ids;
mod operator;
mod params;
mod sturm;

pub use export::{parse_spectrum_csv, spectrum_csv, ExperimentSummary};
pub use ids::{
    cover_lengths, ids_comparison, ids_comparison_tol, ids_distribution, ids_sup_diff,
    inclusion_distance, level_epsilon, measure_estimate, nesting_check, schreier_laplacian,
    schreier_spectrum, special_schrodinger, window_graph_laplacian, IdsComparison, MeasureEstimate,
    DEFAULT_TOL,
};
pub use operator::{
    f_value, g_value, jacobi_from_window, laplacian_from_graph, potential_f, potential_g,
    Provenance, TridiagonalOperator,
};
pub use params::Params;
pub use sturm::{eigenvalues, gershgorin_bounds, sturm_count, SpectralData};
