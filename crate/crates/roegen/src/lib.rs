//! Roegenian economic thermodynamics: simulate economic Carnot cycles on the
//! ideal income equation of state, analyze the economic Van der Waals
//! equation with Maxwell's equal-area correction, and map the Van der Waals
//! surface onto the cusp catastrophe manifold.
//!
//! The economy carries thermodynamic structure through the correspondence
//! growth potential G ~ internal energy, internal politics stability I ~
//! temperature, economic entropy E ~ entropy, price level P ~ pressure, and
//! volume-structure-quality Q ~ volume, tied together by the Pfaff equation
//! `dG - I dE + P dQ = 0`. Reversible processes satisfy `dq = I dE`
//! (production of goods) and `dW = P dQ` (wealth).
//!
//! # Quick start
//!
//! ```
//! use roegen::carnot::{build_cycle, CarnotSpec};
//! use roegen::state::IdealIncomeModel;
//!
//! let model = IdealIncomeModel::new(1.0, 1.0, 3)?;
//! let spec = CarnotSpec::new(model, 2.0, 1.0, 1.0, std::f64::consts::E, 1000)?;
//! let report = build_cycle(&spec)?;
//! assert!((report.wealth() - 1.0).abs() < 1e-9);
//! assert_eq!(report.eta(), 0.5);
//! # Ok::<(), roegen::Error>(())
//! ```
//!
//! The `examples/` directory has one runnable program per capability; the
//! `roegen` binary exposes the same operations as `carnot`, `vdw`, and
//! `catastrophe` subcommands.

pub mod carnot;
pub mod catastrophe;
pub mod cli;
pub mod cubic;
pub mod emit;
mod error;
pub mod ideal;
pub mod state;
pub mod vdw;

pub use error::{Error, Result};
