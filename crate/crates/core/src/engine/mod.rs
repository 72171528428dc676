//! Recursive evaluation of the gl and so weight systems on permutations.

mod evaluator;
mod reduce;
mod wgl;
mod wso;

pub use evaluator::{Engine, EngineConfig, RandomizedEngine};
pub use reduce::Kind;
pub use wgl::{eval_wgl, eval_wgl_product};
pub use wso::{eval_wso, odd_cycle_value, specialize_family, Family, FamilySpec};
