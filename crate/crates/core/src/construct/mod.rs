//! Constructive drawing algorithms and explicit witness drawings.

mod bicubic3d;
mod fan;
mod bend;
mod mincost;
mod plucker;
mod sfan;
mod witness;

pub use bend::draw_bicubic_bend;
pub use fan::{draw_fan, fan_graph, FanFrame};
pub use sfan::s_family_2d_lower_bound;
pub use witness::{draw_witness, witness_styles, Claim, Witness};
pub use bicubic3d::{draw_bicubic_3d, draw_bicubic_3d_traced, Bicubic3d, PlacementCase, StepRecord};

use thiserror::Error;

use crate::drawing::DrawingError;
use crate::families::FamilyError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructError {
    #[error("graph is not biconnected and cubic")]
    NotBiconnectedCubic,
    #[error("graph is not planar")]
    NotPlanar,
    #[error("orthogonal drawing needs {bends} bends, budget is {budget}")]
    BendBudgetExceeded { bends: usize, budget: usize },
    #[error("fan size {0} is odd")]
    OddFan(usize),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Drawing(#[from] DrawingError),
    #[error("no witness drawing for {0}{style}", style = style_suffix(.1))]
    NoWitness(crate::families::FamilyId, Option<crate::drawing::DrawingStyle>),
    #[error("construction failed: {0}")]
    Internal(String),
}

fn style_suffix(style: &Option<crate::drawing::DrawingStyle>) -> String {
    style.map(|s| format!(" in style {s}")).unwrap_or_default()
}
