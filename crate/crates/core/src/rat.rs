//! Scalar layer: arbitrary-precision integers and always-reduced rationals.
//!
//! `Rat` is `num::BigRational`, which maintains the invariants we need
//! everywhere (stored in lowest terms, denominator strictly positive), so
//! equality is structural and sign queries are O(1) on the numerator.

use num::bigint::Sign;
use num::{BigInt, BigRational, One, Signed, Zero};

use crate::{Error, Result};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

/// Small-rational constructor. Panics on a zero denominator.
pub fn rat(n: i64, d: i64) -> Rat {
    assert!(d != 0, "zero denominator");
    Rat::new(Int::from(n), Int::from(d))
}

pub fn rat_int(v: i64) -> Rat {
    Rat::from_integer(Int::from(v))
}

/// Parses "-3", "5/7" or a power form "2^-64" (also "-2^10").
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty rational".into()));
    }
    if let Some((base, exp)) = s.split_once('^') {
        // The sign prefixes the whole power: "-2^10" means -(2^10).
        let (neg, base) = match base.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, base),
        };
        let b: u64 = base
            .parse()
            .map_err(|_| Error::Parse(format!("bad base in {s:?}")))?;
        let e: i64 = exp
            .parse()
            .map_err(|_| Error::Parse(format!("bad exponent in {s:?}")))?;
        if b == 0 && e < 0 {
            return Err(Error::Parse("zero base with negative exponent".into()));
        }
        let mag = Int::from(b).pow(e.unsigned_abs() as u32);
        let r = if e >= 0 {
            Rat::from_integer(mag)
        } else {
            Rat::new(Int::one(), mag)
        };
        return Ok(if neg { -r } else { r });
    }
    if let Some((n, d)) = s.split_once('/') {
        let num: Int = n
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad numerator in {s:?}")))?;
        let den: Int = d
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad denominator in {s:?}")))?;
        if den.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        return Ok(Rat::new(num, den));
    }
    let num: Int = s
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
    Ok(Rat::from_integer(num))
}

pub fn parse_int(s: &str) -> Result<Int> {
    s.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad integer {s:?}")))
}

/// "n" for integers, "n/d" otherwise.
pub fn format_rat(x: &Rat) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Sign as -1, 0, 1.
pub fn sign(x: &Rat) -> i32 {
    match x.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

pub fn sign_int(x: &Int) -> i32 {
    match x.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

/// Nearest multiple of 2^-bits (ties toward zero). Used to keep Krawczyk
/// preconditioner entries at controlled size; soundness never depends on
/// where the rounding lands.
pub fn dyadic_round(x: &Rat, bits: u32) -> Rat {
    let scale = Int::one() << bits;
    let scaled = x * Rat::from_integer(scale.clone());
    let half = rat(1, 2);
    let shifted = if scaled.is_negative() {
        scaled - half
    } else {
        scaled + half
    };
    Rat::new(shifted.trunc().numer().clone(), scale)
}

/// lcm of two positive integers.
pub fn lcm(a: &Int, b: &Int) -> Int {
    if a.is_zero() || b.is_zero() {
        return Int::zero();
    }
    (a * b).abs() / num::integer::gcd(a.clone(), b.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_roundtrip() {
        for s in ["0", "-7", "3/4", "-22/7"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(format_rat(&r), s);
        }
        assert_eq!(parse_rat("6/4").unwrap(), rat(3, 2));
        assert_eq!(parse_rat("2^-3").unwrap(), rat(1, 8));
        assert_eq!(parse_rat("2^6").unwrap(), rat_int(64));
        assert_eq!(parse_rat("-2^2").unwrap(), rat_int(-4));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("").is_err());
    }

    #[test]
    fn reduced_invariant() {
        let r = Rat::new(int(-4), int(-6));
        assert_eq!(r, rat(2, 3));
        assert!(r.denom() > &Int::zero());
    }

    #[test]
    fn dyadic_rounding() {
        let x = rat(1, 3);
        let r = dyadic_round(&x, 4);
        assert_eq!(r, rat(5, 16));
        let y = rat(-1, 3);
        assert_eq!(dyadic_round(&y, 4), rat(-5, 16));
    }

    #[test]
    fn lcm_small() {
        assert_eq!(lcm(&int(4), &int(6)), int(12));
        assert_eq!(lcm(&int(0), &int(5)), int(0));
    }
}
