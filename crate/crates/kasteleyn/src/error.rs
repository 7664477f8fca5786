use torusgraph::Vec2;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KasteleynError {
    /// `certificate` lists faces whose sign equations add up to 0 = 1; it is
    /// empty when the equations are solvable but the colour classes differ.
    #[error("NoOrientation: {black} black vs {white} white vertices, contradictory faces {certificate:?}")]
    NoOrientation { black: usize, white: usize, certificate: Vec<usize> },
    #[error("WeightCount: expected {expected} edge weights, got {got}")]
    WeightCount { expected: usize, got: usize },
    #[error("ZeroWeight: edge {edge} has weight 0")]
    ZeroWeight { edge: usize },
    #[error("ZeroGauge: gauge values must be nonzero")]
    ZeroGauge,
    #[error("NonSquare: {white} white rows, {black} black columns")]
    NonSquare { white: usize, black: usize },
    #[error("ZeroDeterminant")]
    ZeroDeterminant,
    #[error("ZeroCoordinate: evaluation point must have nonzero coordinates")]
    ZeroCoordinate,
    #[error("CheckFailed: class {class:?} has coefficient {coefficient} but matching sum {matchings}")]
    CheckFailed { class: Vec2, coefficient: String, matchings: String },
}
