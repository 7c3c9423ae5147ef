use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Characteristic of the ground field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Characteristic {
    Zero,
    Prime(u64),
}

impl Characteristic {
    /// Checked constructor for a positive characteristic.
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Characteristic::Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    /// `0` maps to characteristic zero; anything else must be prime.
    pub fn from_cli(p: u64) -> Result<Self> {
        if p == 0 {
            Ok(Characteristic::Zero)
        } else {
            Characteristic::prime(p)
        }
    }

    pub fn as_prime(self) -> Option<u64> {
        match self {
            Characteristic::Zero => None,
            Characteristic::Prime(p) => Some(p),
        }
    }
}

impl fmt::Display for Characteristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Characteristic::Zero => f.write_str("0"),
            Characteristic::Prime(p) => write!(f, "{p}"),
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Exponent of `p` in `n`, for `n > 0`.
pub fn valuation(mut n: u64, p: u64) -> u32 {
    debug_assert!(n > 0 && p > 1);
    let mut v = 0;
    while n.is_multiple_of(p) {
        n /= p;
        v += 1;
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        let ps: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(ps, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(Characteristic::prime(9).is_err());
        assert_eq!(Characteristic::from_cli(0).unwrap(), Characteristic::Zero);
    }

    #[test]
    fn valuations() {
        assert_eq!(valuation(50, 5), 2);
        assert_eq!(valuation(7, 5), 0);
        assert_eq!(valuation(81, 3), 4);
    }
}
