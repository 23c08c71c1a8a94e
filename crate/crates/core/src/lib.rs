//! Bijective combinatorics for the partition function attached to the third
//! order mock theta function ν(q).
//!
//! Four partition classes are counted by the coefficients of ν(−q):
//!
//! - [`ClassId::O`]: self-conjugate odd Ferrers graphs of weight 2n+1,
//! - [`ClassId::S`]: self-conjugate partitions of 4n+1 into odd parts,
//! - [`ClassId::D`]: distinct-part partitions of 2n+1 with one large odd part
//!   and all other parts ≡ 2 (mod 4),
//! - [`ClassId::DO`]: odd-length distinct odd-part partitions of 4n+1 whose
//!   parts after the largest come in pairs (4k+3, 4k+1).
//!
//! [`bijections::phi`] maps O onto S hook by hook, and the hook-sum maps carry
//! it over to a bijection between D and DO. [`qseries`] expands ν(−q) directly
//! so that every class count can be checked against an independent route.

pub mod bijections;
pub mod classes;
pub mod cli;
mod error;
pub mod odd_ferrers;
pub mod partition;
pub mod qseries;

pub use bijections::{
    d_to_do, d_to_o, distinct_odd_to_sc, do_to_d, o_to_d, phi, phi_inverse, phi_verified,
    sc_to_distinct_odd,
};
pub use classes::{count, ClassId};
pub use error::{Error, Result};
pub use odd_ferrers::OddFerrersGraph;
pub use partition::{Hook, HookList, Partition};
pub use qseries::{nu_series, p_nu, pochhammer_q_odd, Sign, TruncatedSeries};
