//! Exact rationals and the small amount of integer arithmetic the calculator needs.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::str::FromStr;

pub type Q = BigRational;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn half() -> Q {
    q(1, 2)
}

/// Canonical text form: "a" for integers, "a/b" otherwise.
pub fn fmt_q(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((a, b)) => {
            let a = BigInt::from_str(a.trim()).ok()?;
            let b = BigInt::from_str(b.trim()).ok()?;
            if b.is_zero() {
                return None;
            }
            Some(Q::new(a, b))
        }
        None => Some(Q::from_integer(BigInt::from_str(s).ok()?)),
    }
}

pub fn is_integer(x: &Q) -> bool {
    x.denom().is_one()
}

/// Is `x` an integer multiple of 1/2.
pub fn is_half_integer(x: &Q) -> bool {
    (x * qi(2)).denom().is_one()
}

pub fn floor_i64(x: &Q) -> i64 {
    x.floor().to_integer().to_i64().expect("coordinate out of range")
}

pub fn ceil_i64(x: &Q) -> i64 {
    x.ceil().to_integer().to_i64().expect("coordinate out of range")
}

/// Fractional part in [0, 1).
pub fn frac(x: &Q) -> Q {
    x - x.floor()
}

/// gcd of two non-negative rationals, i.e. the generator of aZ + bZ.
pub fn gcd_q(a: &Q, b: &Q) -> Q {
    let a = a.abs();
    let b = b.abs();
    if a.is_zero() {
        return b;
    }
    if b.is_zero() {
        return a;
    }
    let den = a.denom().lcm(b.denom());
    let an = (a.clone() * Q::from_integer(den.clone())).to_integer();
    let bn = (b.clone() * Q::from_integer(den.clone())).to_integer();
    Q::new(an.gcd(&bn), den)
}

pub fn to_i64(x: &BigInt) -> i64 {
    x.to_i64().expect("integer out of range")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        for s in ["0", "-3", "7/4", "-9/8"] {
            assert_eq!(fmt_q(&parse_q(s).unwrap()), s);
        }
        assert_eq!(fmt_q(&parse_q("6/4").unwrap()), "3/2");
        assert!(parse_q("1/0").is_none());
    }

    #[test]
    fn rational_gcd() {
        assert_eq!(gcd_q(&q(1, 2), &q(1, 3)), q(1, 6));
        assert_eq!(gcd_q(&q(-4, 1), &q(6, 1)), qi(2));
        assert_eq!(gcd_q(&qi(0), &q(3, 4)), q(3, 4));
    }
}
