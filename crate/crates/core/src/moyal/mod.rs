//! Moyal star product and the Weyl correspondence in the Fock basis.

mod fock;
mod star;
mod symplectic;

pub use fock::{
    cross_symbol_table, dequantize, dequantize_with, quantize, symbol_fock_cross, DequantizeOptions, FockMatrix,
    Resummation, DEFAULT_M_MAX,
};
pub use star::{
    poisson_bracket, star_integral, star_integral_min_nodes, star_integral_with, star_series, star_via_operators,
    star_via_operators_with, PRODUCT_PADDING,
};
pub use symplectic::SymplecticForm;
