//! Exact rationals and their text form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Renders `p/q`, or `p` when the denominator is one.
pub fn fmt_q(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `p`, `-p`, `+p`, `p/q`. Whitespace around the slash is not allowed.
pub fn parse_q(s: &str) -> Result<Q> {
    let err = |pos: usize, msg: &str| Error::Parse { pos, msg: msg.to_string() };
    let t = s.trim();
    if t.is_empty() {
        return Err(err(0, "empty rational"));
    }
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (a, Some(b)),
        None => (t, None),
    };
    let n = parse_int(num).ok_or_else(|| err(0, "bad numerator"))?;
    let d = match den {
        Some(b) => {
            if b.starts_with(['+', '-']) {
                return Err(err(num.len() + 1, "signed denominator"));
            }
            parse_int(b).ok_or_else(|| err(num.len() + 1, "bad denominator"))?
        }
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(err(num.len() + 1, "zero denominator"));
    }
    Ok(Q::new(n, d))
}

fn parse_int(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix(['+', '-']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) || digits.len() > 4096 {
        return None;
    }
    s.parse().ok()
}

/// Least integer `>= x`.
pub fn ceil(x: &Q) -> BigInt {
    x.ceil().to_integer()
}

/// Greatest integer `<= x`.
pub fn floor(x: &Q) -> BigInt {
    x.floor().to_integer()
}

/// `x - floor(x)`, in `[0,1)`.
pub fn frac(x: &Q) -> Q {
    x - x.floor()
}

/// Representative of `x` modulo `m` in `[0,m)`.
pub fn modq(x: &Q, m: &Q) -> Q {
    let t = x / m;
    x - m * t.floor()
}

/// `floor(sqrt(x))` for `x >= 0`.
pub fn floor_sqrt(x: &Q) -> BigInt {
    debug_assert!(!x.is_negative());
    let p = x.numer();
    let d = x.denom();
    let s = (p * d).sqrt();
    s.div_floor(d)
}

pub fn gcd_all<'a>(it: impl IntoIterator<Item = &'a BigInt>) -> BigInt {
    it.into_iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

pub fn lcm_denoms<'a>(it: impl IntoIterator<Item = &'a Q>) -> BigInt {
    it.into_iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        for s in ["0", "3", "-7", "3/2", "-5/4"] {
            assert_eq!(fmt_q(&parse_q(s).unwrap()), s);
        }
        assert_eq!(fmt_q(&parse_q("6/4").unwrap()), "3/2");
        assert_eq!(fmt_q(&parse_q("+2").unwrap()), "2");
    }

    #[test]
    fn rejects() {
        for s in ["", "/", "1/", "/2", "1/0", "1.5", "1/-2", "--1", "a", "1 /2"] {
            assert!(parse_q(s).is_err(), "{s}");
        }
    }

    #[test]
    fn sqrt_floor() {
        assert_eq!(floor_sqrt(&q(9, 4)), BigInt::from(1));
        assert_eq!(floor_sqrt(&q(4, 1)), BigInt::from(2));
        assert_eq!(floor_sqrt(&q(15, 4)), BigInt::from(1));
        assert_eq!(floor_sqrt(&q(16, 4)), BigInt::from(2));
        assert_eq!(floor_sqrt(&q(0, 1)), BigInt::from(0));
    }

    #[test]
    fn modular() {
        assert_eq!(modq(&q(-3, 4), &qi(2)), q(5, 4));
        assert_eq!(frac(&q(-1, 3)), q(2, 3));
    }
}
