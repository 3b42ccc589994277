//! The dual (Birman–Ko–Lee) Garside structure on the braid group.
//!
//! Simple elements are non-crossing partitions, `δ` is the single-block
//! partition, and the lattice meet is blockwise intersection. On top of that
//! sit the left canonical normal form, cycling and decycling, the summit
//! infimum, rigidity, and detection of strongly quasipositive closures.

mod conjugacy;
mod normal_form;
mod partition;

pub use conjugacy::{
    cycle_normal_form, cycling, cycling_certificate, decycle_normal_form, decycling,
    is_rigid, is_rigid_normal_form, is_strongly_quasipositive_closure, summit_infimum,
    SqpVerdict, SummitData,
};
pub use normal_form::{infimum, is_left_weighted_pair, left_normal_form, DualNormalForm};
pub use partition::{all_simples, complement, nc_meet, simple_of_band, tau, NonCrossingPartition};
