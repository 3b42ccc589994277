//! Dehornoy ordering and interval bounds for the fractional Dehn twist
//! coefficient of a braid closure.

mod floor;
mod handle;
mod interval;

pub use floor::{dehornoy_floor, dehornoy_floor_with, fdtc_interval};
pub use handle::{dehornoy_compare, is_trivial, HandleReducer, OrderVerdict, DEFAULT_STEP_BUDGET};
pub use interval::{
    check_main_hypotheses, integer, interval_propagate, rational, MainHypotheses, Propagation,
    RationalInterval,
};
