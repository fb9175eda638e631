//! Primitive parts of `Y_k`: what is left after removing every prime that
//! already divides some `Y_s`, `s < k`. A value above 1 certifies a primitive
//! prime divisor without factoring anything.

use alloc::vec::Vec;

use num_bigint::BigUint;

use super::even::strip_common;
use crate::pell::{fundamental_solution, PellOrbit};
use crate::{Error, Result};

/// Primitive part of `Y_k` on the orbit of the fundamental solution for `d`.
pub fn primitive_part(d: &BigUint, k: u64) -> Result<BigUint> {
    let orbit = fundamental_solution(d)?;
    primitive_part_of(&orbit, k)
}

pub fn primitive_part_of(orbit: &PellOrbit, k: u64) -> Result<BigUint> {
    if k < 2 {
        return Err(Error::InvalidParameter(alloc::format!("k = {k} must be at least 2")));
    }
    let ys: Vec<BigUint> = orbit.solutions().take(k as usize).map(|p| p.y).collect();
    let (last, earlier) = ys.split_last().expect("k >= 2 terms");
    Ok(earlier.iter().fold(last.clone(), |rest, y| strip_common(&rest, y)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pp(d: u32, k: u64) -> BigUint {
        primitive_part(&BigUint::from(d), k).unwrap()
    }

    #[test]
    fn small_values() {
        // Y_2 = 12, Y_1 = 2
        assert_eq!(pp(2, 2), BigUint::from(3u32));
        assert_eq!(pp(2, 13), BigUint::from(1_583_407_981u64));
        assert_eq!(pp(3, 14), BigUint::from(2521u32));
        assert!(primitive_part(&BigUint::from(2u32), 1).is_err());
        assert!(primitive_part(&BigUint::from(4u32), 3).is_err());
    }

    #[test]
    fn carmichael_range() {
        for d in [2u32, 3, 5, 6, 7, 8, 10] {
            for k in 13..=25 {
                assert!(pp(d, k) > BigUint::from(1u32), "d={d} k={k}");
            }
        }
    }
}
