//! Iteration operators obtained by lifting exact closures from sub-models.

mod abstraction;
mod combined;
pub mod laws;
mod lra;
mod pga;

pub use abstraction::{lift, Abstraction, SubModel};
pub use combined::{star_combined, Product, SharedCounterProduct};
pub use lra::{
    alpha_lra, delta_facets, fresh_var, star_lra, star_lra_base, star_lra_counted, LossyModel, LossyTranslation,
    Recurrence, COUNTER,
};
pub use pga::{alpha_pga, star_pga, star_pga_base, PolyCart, PolyCartModel};

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::transition::TransitionFormula;

/// Which iteration operator to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Domain {
    Pga,
    Lra,
    #[default]
    Combined,
}

impl Domain {
    pub const ALL: [Domain; 3] = [Domain::Pga, Domain::Lra, Domain::Combined];

    pub fn star(self, f: &TransitionFormula) -> Result<TransitionFormula> {
        match self {
            Domain::Pga => star_pga(f),
            Domain::Lra => star_lra(f),
            Domain::Combined => star_combined(f),
        }
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Domain::Pga => "pga",
            Domain::Lra => "lra",
            Domain::Combined => "combined",
        })
    }
}

impl FromStr for Domain {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pga" => Ok(Domain::Pga),
            "lra" => Ok(Domain::Lra),
            "combined" => Ok(Domain::Combined),
            other => Err(Error::Input(format!("unknown domain '{other}' (expected pga, lra or combined)"))),
        }
    }
}

#[cfg(test)]
mod tests;
