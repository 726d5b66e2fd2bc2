pub mod cli;
pub mod comb;
pub mod exprparse;
pub mod fps;
pub mod presets;
pub mod scalar;
pub mod stirling;
