//! Closed rational intervals with exact endpoint arithmetic.
//!
//! These are the substrate for root isolation boxes and for the Krawczyk
//! operator: all endpoints are exact rationals, so containment statements
//! proved with them are unconditional.

use num::{Signed, Zero};

use crate::rat::{rat, sign, Rat};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    lo: Rat,
    hi: Rat,
}

impl Interval {
    pub fn new(lo: Rat, hi: Rat) -> Self {
        assert!(lo <= hi, "inverted interval");
        Interval { lo, hi }
    }

    pub fn point(x: Rat) -> Self {
        Interval { lo: x.clone(), hi: x }
    }

    pub fn lo(&self) -> &Rat {
        &self.lo
    }

    pub fn hi(&self) -> &Rat {
        &self.hi
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn mid(&self) -> Rat {
        (&self.lo + &self.hi) * rat(1, 2)
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &Rat) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// Sign if it is constant over the interval: -1, 0 (the point 0), or 1.
    pub fn definite_sign(&self) -> Option<i32> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(0)
        } else {
            None
        }
    }

    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        let lo = if self.lo >= other.lo { self.lo.clone() } else { other.lo.clone() };
        let hi = if self.hi <= other.hi { self.hi.clone() } else { other.hi.clone() };
        if lo <= hi {
            Some(Interval::new(lo, hi))
        } else {
            None
        }
    }

    pub fn hull(&self, other: &Interval) -> Interval {
        Interval::new(
            if self.lo <= other.lo { self.lo.clone() } else { other.lo.clone() },
            if self.hi >= other.hi { self.hi.clone() } else { other.hi.clone() },
        )
    }

    pub fn subset(&self, other: &Interval) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    /// Strict containment in the interior.
    pub fn subset_interior(&self, other: &Interval) -> bool {
        other.lo < self.lo && self.hi < other.hi
    }

    pub fn add(&self, other: &Interval) -> Interval {
        Interval::new(&self.lo + &other.lo, &self.hi + &other.hi)
    }

    pub fn sub(&self, other: &Interval) -> Interval {
        Interval::new(&self.lo - &other.hi, &self.hi - &other.lo)
    }

    pub fn neg(&self) -> Interval {
        Interval::new(-self.hi.clone(), -self.lo.clone())
    }

    pub fn mul(&self, other: &Interval) -> Interval {
        let cands = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let mut lo = cands[0].clone();
        let mut hi = cands[0].clone();
        for c in &cands[1..] {
            if c < &lo {
                lo = c.clone();
            }
            if c > &hi {
                hi = c.clone();
            }
        }
        Interval::new(lo, hi)
    }

    pub fn mul_scalar(&self, s: &Rat) -> Interval {
        if sign(s) >= 0 {
            Interval::new(&self.lo * s, &self.hi * s)
        } else {
            Interval::new(&self.hi * s, &self.lo * s)
        }
    }

    pub fn add_scalar(&self, s: &Rat) -> Interval {
        Interval::new(&self.lo + s, &self.hi + s)
    }

    /// Splits at the midpoint.
    pub fn bisect(&self) -> (Interval, Interval) {
        let m = self.mid();
        (
            Interval::new(self.lo.clone(), m.clone()),
            Interval::new(m, self.hi.clone()),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat_int;

    fn iv(a: i64, b: i64) -> Interval {
        Interval::new(rat_int(a), rat_int(b))
    }

    #[test]
    fn basic_queries() {
        let i = iv(-1, 3);
        assert_eq!(i.width(), rat_int(4));
        assert_eq!(i.mid(), rat_int(1));
        assert!(i.contains_zero());
        assert_eq!(i.definite_sign(), None);
        assert_eq!(iv(2, 5).definite_sign(), Some(1));
        assert_eq!(iv(-5, -2).definite_sign(), Some(-1));
        assert_eq!(Interval::point(rat_int(0)).definite_sign(), Some(0));
    }

    #[test]
    fn arithmetic() {
        let a = iv(-1, 2);
        let b = iv(3, 4);
        assert_eq!(a.add(&b), iv(2, 6));
        assert_eq!(a.sub(&b), iv(-5, -1));
        assert_eq!(a.mul(&b), iv(-4, 8));
        assert_eq!(a.neg(), iv(-2, 1));
        assert_eq!(a.mul_scalar(&rat_int(-2)), iv(-4, 2));
    }

    #[test]
    fn set_operations() {
        let a = iv(0, 4);
        let b = iv(2, 6);
        assert_eq!(a.intersect(&b), Some(iv(2, 4)));
        assert_eq!(a.hull(&b), iv(0, 6));
        assert!(iv(1, 2).subset_interior(&iv(0, 3)));
        assert!(!iv(0, 2).subset_interior(&iv(0, 3)));
        assert!(iv(5, 6).intersect(&iv(0, 1)).is_none());
    }
}
