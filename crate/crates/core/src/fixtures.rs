//! Small diagrams used throughout the tests and examples.

use crate::diagram::Diagram;

pub const RIGHT_TREFOIL_PD: &str = include_str!("../fixtures/right_trefoil.pd");
pub const LEFT_TREFOIL_PD: &str = include_str!("../fixtures/left_trefoil.pd");
pub const WHITEHEAD_PD: &str = include_str!("../fixtures/whitehead.pd");
pub const HOPF_PD: &str = include_str!("../fixtures/hopf.pd");
pub const FIVE_TWO_PD: &str = include_str!("../fixtures/five_two.pd");

fn load(src: &str) -> Diagram {
    Diagram::parse(src).expect("bundled fixture is valid")
}

pub fn right_trefoil() -> Diagram {
    load(RIGHT_TREFOIL_PD)
}

pub fn left_trefoil() -> Diagram {
    load(LEFT_TREFOIL_PD)
}

pub fn whitehead() -> Diagram {
    load(WHITEHEAD_PD)
}

pub fn hopf() -> Diagram {
    load(HOPF_PD)
}

/// The five-crossing knot whose crossing/arc matrix has crossing `i` over
/// arc `i` (the twist knot `5_2`).
pub fn five_two() -> Diagram {
    load(FIVE_TWO_PD)
}
