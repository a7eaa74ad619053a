//! Numerical operator laboratory on piecewise-constant functions in one and two dimensions.

pub mod beurling;
pub mod grid;
pub mod hilbert;
pub mod maximal;
pub mod orlicz;

pub use beurling::{
    beurling_maximal, beurling_maximal_polar, beurling_pv_grid, beurling_sq_maximal, beurling_sq_truncated,
    beurling_truncated, BeurlingKernel,
};
pub use grid::{fmt_f64, Cells1d, Grid1d, Grid2d, Piece, TruncationGrid};
pub use hilbert::{
    hilbert_cell_averages, hilbert_maximal, hilbert_pv, hilbert_truncated, maximal_pieces, pv_pieces, truncated_pieces,
    truncation_profile,
};
pub use maximal::{
    hardy_littlewood, hardy_littlewood_2d, hardy_littlewood_cells, iterated_m2, m_delta, m_llogl, m_sharp,
};
pub use orlicz::{llogl_average, luxemburg, phi};
