//! Phase-space data model: points, regions, Wigner functions, Weyl symbols
//! and their expectation-value pairing.

mod expectation;
mod grid;
mod point;
mod region;
mod state;
mod symbol;

pub use expectation::{
    expectation, expectation_with, ExpectationOptions, Method, DEFAULT_NODES_ONE_MODE, DEFAULT_NODES_TWO_MODES,
};
pub use grid::{GridSamples, PhaseGrid};
pub use point::{com_coords, lab_coords, Frame, PhasePoint, HBAR};
pub use region::{Axis, Region};
pub use state::{
    fock_extent, symbol_fock_diag, weyl_symbol_direct, wigner_bell, wigner_fock, wigner_fock_radial, WignerState,
};
pub use symbol::{
    bell_symbol, characteristic_symbol, GradientFn, PolynomialSymbol, QuadratureHint, RadialFn, Sign, SymbolFn,
    SymbolRepr, WeylSymbol,
};
