//! Exact combinatorics of set partitions and moment-cumulant transforms.
//!
//! The crate covers the partition lattice `Π_n` together with its
//! noncrossing and interval sublattices, the incidence algebra with its
//! Möbius function, truncated formal power series, the classical, free and
//! boolean cumulant transforms, and the connected-partition expansions of
//! free and boolean cumulants in terms of classical ones.
//!
//! Everything is exact (arbitrary-precision rationals or polynomials in a
//! formal parameter `λ`), with the single exception of [`theorem::dobinski`].
//! The crate is `no_std` and needs only `alloc`.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod error;
pub mod cumulants;
pub mod incidence;
pub mod partition;
pub mod scalar;
pub mod series;
pub mod theorem;

pub use error::{Error, Result};
pub use partition::{enumerate, PartitionFamily, Partitions, SetPartition};
pub use scalar::{LambdaPoly, Rational, Ring};
