use alloc::string::String;

use num_bigint::BigUint;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("d = {0} is a perfect square")]
    SquareModulus(BigUint),
    #[error("d must be at least 2")]
    ModulusTooSmall,
    #[error("index must be positive")]
    ZeroIndex,
    #[error("valuation of zero is undefined")]
    ZeroValuation,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("base must be at least 2, got {0}")]
    InvalidBase(u64),
    #[error("digit {digit} out of range for base {base}")]
    InvalidDigit { base: u64, digit: u64 },
    #[error("({x}, {y}) does not solve X^2 - {d} Y^2 = 1")]
    NotASolution { d: BigUint, x: BigUint, y: BigUint },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
