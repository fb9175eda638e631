//! Exact arithmetic and verifiers for Pell equations whose X-coordinates are
//! base-`b` repdigits.
//!
//! The crate is `no_std` and only needs `alloc`. It covers:
//!
//! * [`pell`]: fundamental solutions, the n-th solution and p-adic valuations;
//! * [`chebyshev`]: exact evaluation of `P_n` and `P_n'` over integers,
//!   rationals and residue rings;
//! * [`repdigit`]: base-`b` digits and repdigit recognition;
//! * [`quadratic`]: integer coordinates in `Z[sqrt(D)]` and quadratic
//!   algebraic numbers given by their minimal polynomial;
//! * [`verify`]: executable checks of every structural step (even case,
//!   elliptic reduction, gcd reduction, Taylor congruences, ...);
//! * [`bounds`]: explicit Baker, Yu and Matveev bounds and the derived chain;
//! * [`search`]: the exhaustive, shard-independent search driver.
#![no_std]

extern crate alloc;

pub mod bounds;
pub mod chebyshev;
mod error;
pub mod pell;
pub mod quadratic;
pub mod repdigit;
pub mod search;
pub mod verify;

pub use error::Error;
pub use pell::{fundamental_solution, is_square, nu_p, PellOrbit, PellPair};
pub use repdigit::{as_repdigit, digits, RepdigitForm};

pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;

pub type Result<T, E = Error> = core::result::Result<T, E>;
