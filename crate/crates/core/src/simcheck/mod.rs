//! Stuttering simulations between flow graphs and the robustness check on
//! their summaries.

mod map;
mod preserve;
mod robust;
mod stutter;

pub use map::StutterMap;
pub use preserve::{check_loop_preserving, unrolling_count, LoopOutcome, LoopViolation, LoopWitness};
pub use robust::{verify_robustness, RobustnessFailure, RobustnessOutcome};
pub use stutter::{check_stutter_sim, ClauseFailure, EdgeFailure, EdgeTag, EdgeWitness, SimOutcome};
