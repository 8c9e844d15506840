//! Four-ended tangles: the expression language, bracket vectors, and
//! compilation of expressions to concrete diagrams.
//!
//! Expressions are built from the integer tangles `n` (horizontal twists,
//! right-handed for `n > 0`), `inf`, horizontal sum `T + U`, vertical sum
//! `T * U`, product `T . U = T^-1 + U`, inverse `T^-1` (reflection in the
//! NW-SE diagonal), mirror `-T`, and the twisting operations
//! `T^w = ((T + 2) * 1) + 2` and `T^wb = ((T - 2) * -1) - 2`.

mod compile;
mod parse;
mod vector;

use std::fmt;

use crate::diagram::fragment::Fragment;
use crate::diagram::Diagram;
use crate::error::Result;
use crate::laurent::BracketVector;
use crate::statesum::{self, Connectivity};

pub use compile::{compile_tangle, compile_tangle_unsimplified, omega_rewrite, simplify};
pub use parse::parse_tangle;
pub use vector::{bracket_vector, closure_brackets};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TangleExpr {
    Int(i64),
    Infinity,
    Sum(Box<TangleExpr>, Box<TangleExpr>),
    VSum(Box<TangleExpr>, Box<TangleExpr>),
    Prod(Box<TangleExpr>, Box<TangleExpr>),
    Inv(Box<TangleExpr>),
    Mirror(Box<TangleExpr>),
    Omega(Box<TangleExpr>),
    OmegaBar(Box<TangleExpr>),
}

impl TangleExpr {
    pub fn int(n: i64) -> Self {
        Self::Int(n)
    }

    pub fn inf() -> Self {
        Self::Infinity
    }

    pub fn sum(self, u: Self) -> Self {
        Self::Sum(Box::new(self), Box::new(u))
    }

    pub fn vsum(self, u: Self) -> Self {
        Self::VSum(Box::new(self), Box::new(u))
    }

    pub fn prod(self, u: Self) -> Self {
        Self::Prod(Box::new(self), Box::new(u))
    }

    pub fn inv(self) -> Self {
        Self::Inv(Box::new(self))
    }

    pub fn mirror(self) -> Self {
        Self::Mirror(Box::new(self))
    }

    pub fn omega(self) -> Self {
        Self::Omega(Box::new(self))
    }

    pub fn omega_bar(self) -> Self {
        Self::OmegaBar(Box::new(self))
    }

    /// `T - U`, i.e. `T + (-U)`.
    pub fn minus(self, u: Self) -> Self {
        self.sum(u.mirror())
    }

    /// Number of nodes in the tree.
    pub fn size(&self) -> usize {
        match self {
            Self::Int(_) | Self::Infinity => 1,
            Self::Sum(a, b) | Self::VSum(a, b) | Self::Prod(a, b) => 1 + a.size() + b.size(),
            Self::Inv(a) | Self::Mirror(a) | Self::Omega(a) | Self::OmegaBar(a) => 1 + a.size(),
        }
    }
}

impl std::str::FromStr for TangleExpr {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_tangle(s)
    }
}

impl fmt::Display for TangleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&parse::render(self))
    }
}

/// A concrete tangle diagram with ends NW, NE, SW, SE.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangleDiagram {
    pub(crate) fragment: Fragment,
}

impl TangleDiagram {
    pub fn num_crossings(&self) -> usize {
        self.fragment.crossings() as usize
    }

    pub fn free_loops(&self) -> usize {
        self.fragment.free_loops()
    }

    /// Closure joining NW to NE and SW to SE.
    pub fn numerator(&self) -> Result<Diagram> {
        self.fragment.numerator()?.to_diagram()
    }

    /// Closure joining NW to SW and NE to SE.
    pub fn denominator(&self) -> Result<Diagram> {
        self.fragment.denominator()?.to_diagram()
    }
}

/// `(f, g)` of a tangle diagram by enumerating its smoothing states: each
/// state connects the ends like `0` (contributing to `f`) or like `inf`
/// (contributing to `g`), weighted by `A^(#A - #B) delta^(closed loops)`.
pub fn tangle_bracket_statesum(td: &TangleDiagram, cap: usize) -> Result<BracketVector> {
    let w = td.fragment.wiring()?;
    let hist = statesum::tally(&w, cap)?;
    Ok(BracketVector::new(
        hist.polynomial(Connectivity::Zero, w.free_loops, 0)?,
        hist.polynomial(Connectivity::Infinity, w.free_loops, 0)?,
    ))
}
