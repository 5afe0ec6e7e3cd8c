//! Dense univariate polynomials over the rationals and over the integers.
//!
//! `UniPoly` (rational coefficients) carries the arithmetic used by the
//! parametrization layer; `IntPoly` (integer coefficients, usually kept
//! primitive) carries the subresultant machinery: pseudo-division, gcd,
//! resultants, squarefree parts. Resultants use the subresultant PRS, never
//! Sylvester determinant expansion, so degree-44 eliminants stay tractable.

use num::{Integer, One, Signed, Zero};

use crate::interval::Interval;
use crate::rat::{int, lcm, sign_int, Int, Rat};
use crate::{Error, Result};

/// Polynomial over Q, coefficient of t^k at index k, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    c: Vec<Rat>,
}

/// Polynomial over Z with the same layout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly {
    c: Vec<Int>,
}

impl UniPoly {
    pub fn new(mut c: Vec<Rat>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        UniPoly { c }
    }

    pub fn zero() -> Self {
        UniPoly { c: vec![] }
    }

    pub fn one() -> Self {
        UniPoly { c: vec![Rat::one()] }
    }

    pub fn constant(r: Rat) -> Self {
        Self::new(vec![r])
    }

    /// c * t^k
    pub fn monomial(c: Rat, k: usize) -> Self {
        let mut v = vec![Rat::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&x| Rat::from_integer(int(x))).collect())
    }

    pub fn from_int_poly(p: &IntPoly) -> Self {
        Self::new(p.c.iter().map(|x| Rat::from_integer(x.clone())).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn deg(&self) -> Option<usize> {
        if self.c.is_empty() {
            None
        } else {
            Some(self.c.len() - 1)
        }
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.c.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.c
    }

    pub fn lead(&self) -> Option<&Rat> {
        self.c.last()
    }

    pub fn is_monic(&self) -> bool {
        self.lead().is_some_and(|l| l.is_one())
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.c.len().max(other.c.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + other.coeff(k));
        }
        UniPoly::new(out)
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        let n = self.c.len().max(other.c.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) - other.coeff(k));
        }
        UniPoly::new(out)
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly::new(self.c.iter().map(|x| -x.clone()).collect())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.c.len() + other.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.c.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        UniPoly::new(out)
    }

    pub fn scale(&self, s: &Rat) -> UniPoly {
        UniPoly::new(self.c.iter().map(|x| x * s).collect())
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.c.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Horner evaluation with interval arguments: a valid enclosure of the
    /// range over the interval (not tight, but exact endpoints).
    pub fn eval_interval(&self, x: &Interval) -> Interval {
        let mut acc = Interval::point(Rat::zero());
        for c in self.c.iter().rev() {
            acc = acc.mul(x).add_scalar(c);
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        if self.c.len() <= 1 {
            return UniPoly::zero();
        }
        UniPoly::new(
            self.c[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * Rat::from_integer(int(i as i64 + 1)))
                .collect(),
        )
    }

    /// Euclidean division, exact over Q. Panics on a zero divisor.
    pub fn divrem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.deg().unwrap();
        let lead_inv = Rat::one() / d.lead().unwrap().clone();
        let mut rem = self.c.clone();
        if rem.len() < dd + 1 {
            return (UniPoly::zero(), self.clone());
        }
        let qlen = rem.len() - dd;
        let mut q = vec![Rat::zero(); qlen];
        for k in (0..qlen).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if !c.is_zero() {
                for j in 0..dd {
                    let t = &c * &d.c[j];
                    rem[k + j] -= t;
                }
            }
            rem[k + dd] = Rat::zero();
            q[k] = c;
        }
        (UniPoly::new(q), UniPoly::new(rem))
    }

    pub fn rem(&self, m: &UniPoly) -> UniPoly {
        self.divrem(m).1
    }

    /// Exact quotient; returns None if the division leaves a remainder.
    pub fn div_exact(&self, d: &UniPoly) -> Option<UniPoly> {
        let (q, r) = self.divrem(d);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    pub fn monic(&self) -> UniPoly {
        match self.lead() {
            None => UniPoly::zero(),
            Some(l) => {
                let inv = Rat::one() / l.clone();
                self.scale(&inv)
            }
        }
    }

    /// P(t + lambda) by iterated Horner (exact Taylor shift).
    pub fn compose_shift(&self, lambda: &Rat) -> UniPoly {
        if lambda.is_zero() || self.is_zero() {
            return self.clone();
        }
        let mut a = self.c.clone();
        let d = a.len() - 1;
        for i in 0..d {
            for j in (i..d).rev() {
                let t = lambda * &a[j + 1];
                a[j] += t;
            }
        }
        UniPoly::new(a)
    }

    /// Writes self = s * Q with s a positive rational and Q primitive over Z
    /// (content 1, sign of the leading coefficient preserved).
    pub fn to_int_primitive(&self) -> (IntPoly, Rat) {
        if self.is_zero() {
            return (IntPoly::zero(), Rat::one());
        }
        let mut den = Int::one();
        for c in &self.c {
            den = lcm(&den, c.denom());
        }
        let ints: Vec<Int> = self
            .c
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        let p = IntPoly::new(ints);
        let cont = p.content();
        let prim = p.divide_content(&cont);
        (prim, Rat::new(cont, den))
    }
}

impl IntPoly {
    pub fn new(mut c: Vec<Int>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        IntPoly { c }
    }

    pub fn zero() -> Self {
        IntPoly { c: vec![] }
    }

    pub fn one() -> Self {
        IntPoly { c: vec![Int::one()] }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&x| int(x)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn deg(&self) -> Option<usize> {
        if self.c.is_empty() {
            None
        } else {
            Some(self.c.len() - 1)
        }
    }

    pub fn coeff(&self, k: usize) -> Int {
        self.c.get(k).cloned().unwrap_or_else(Int::zero)
    }

    pub fn coeffs(&self) -> &[Int] {
        &self.c
    }

    pub fn lead(&self) -> Option<&Int> {
        self.c.last()
    }

    /// gcd of coefficients, nonnegative; 0 for the zero polynomial.
    pub fn content(&self) -> Int {
        let mut g = Int::zero();
        for c in &self.c {
            g = num::integer::gcd(g, c.clone());
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn divide_content(&self, cont: &Int) -> IntPoly {
        if cont.is_zero() || cont.is_one() {
            return self.clone();
        }
        IntPoly::new(self.c.iter().map(|c| c / cont).collect())
    }

    /// Primitive part, sign preserved.
    pub fn primitive(&self) -> IntPoly {
        let c = self.content();
        self.divide_content(&c)
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive_positive(&self) -> IntPoly {
        let p = self.primitive();
        match p.lead() {
            Some(l) if l.is_negative() => p.neg(),
            _ => p,
        }
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly::new(self.c.iter().map(|x| -x.clone()).collect())
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.c.len().max(other.c.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + other.coeff(k));
        }
        IntPoly::new(out)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let n = self.c.len().max(other.c.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) - other.coeff(k));
        }
        IntPoly::new(out)
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![Int::zero(); self.c.len() + other.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.c.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        IntPoly::new(out)
    }

    pub fn scale(&self, s: &Int) -> IntPoly {
        if s.is_zero() {
            return IntPoly::zero();
        }
        IntPoly::new(self.c.iter().map(|x| x * s).collect())
    }

    /// Exact quotient in Z[t]; None unless self = q * d with q over Z.
    /// Bails out at the first leading coefficient the divisor's lead does
    /// not divide, so failures stay cheap.
    pub fn div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let dd = d.deg().unwrap();
        let sd = self.deg().unwrap();
        if sd < dd {
            return None;
        }
        let lead = d.lead().unwrap();
        let mut rem = self.c.clone();
        let qlen = sd - dd + 1;
        let mut q = vec![Int::zero(); qlen];
        for k in (0..qlen).rev() {
            let top = std::mem::replace(&mut rem[k + dd], Int::zero());
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for j in 0..dd {
                let t = &c * &d.c[j];
                rem[k + j] -= t;
            }
            q[k] = c;
        }
        if rem.iter().any(|x| !x.is_zero()) {
            return None;
        }
        Some(IntPoly::new(q))
    }

    pub fn derivative(&self) -> IntPoly {
        if self.c.len() <= 1 {
            return IntPoly::zero();
        }
        IntPoly::new(
            self.c[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * int(i as i64 + 1))
                .collect(),
        )
    }

    /// den^deg * p(num/den); den > 0 keeps the sign of p(num/den).
    pub fn eval_scaled(&self, num: &Int, den: &Int) -> Int {
        match self.deg() {
            None => Int::zero(),
            Some(d) => {
                let mut acc = Int::zero();
                // Horner in num with a running power of den.
                for k in (0..=d).rev() {
                    acc = acc * num + &self.c[k] * den.pow((d - k) as u32);
                }
                acc
            }
        }
    }

    pub fn sign_at(&self, x: &Rat) -> i32 {
        sign_int(&self.eval_scaled(x.numer(), x.denom()))
    }

    /// Sign at +infinity (dir = +1) or -infinity (dir = -1).
    pub fn sign_at_infinity(&self, dir: i32) -> i32 {
        match self.deg() {
            None => 0,
            Some(d) => {
                let s = sign_int(self.lead().unwrap());
                if dir > 0 || d % 2 == 0 {
                    s
                } else {
                    -s
                }
            }
        }
    }

    /// Pseudo-remainder: lc(b)^(da-db+1) * a  mod  b, da >= db.
    pub fn pseudo_rem(&self, b: &IntPoly) -> IntPoly {
        let da = self.deg().expect("prem of zero");
        let db = b.deg().expect("prem by zero");
        assert!(da >= db);
        let lb = b.lead().unwrap().clone();
        let mut r = self.clone();
        let mut k = (da - db + 1) as i64;
        while let Some(dr) = r.deg() {
            if dr < db {
                break;
            }
            let lr = r.lead().unwrap().clone();
            // r <- lb * r - lr * t^(dr-db) * b
            let mut out = vec![Int::zero(); dr + 1];
            for (i, c) in r.c.iter().enumerate() {
                out[i] = c * &lb;
            }
            for (i, c) in b.c.iter().enumerate() {
                out[i + dr - db] -= c * &lr;
            }
            r = IntPoly::new(out);
            k -= 1;
        }
        // Normalize so that exactly da-db+1 multiplications by lb happened.
        if k > 0 {
            let f = lb.pow(k as u32);
            r = r.scale(&f);
        }
        r
    }

    /// Polynomial gcd: gcd of the contents times the primitive-PRS gcd of
    /// the primitive parts, with positive leading coefficient.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() {
            return match other.lead() {
                Some(l) if l.is_negative() => other.neg(),
                _ => other.clone(),
            };
        }
        if other.is_zero() {
            return match self.lead() {
                Some(l) if l.is_negative() => self.neg(),
                _ => self.clone(),
            };
        }
        let content_gcd = num::integer::gcd(self.content(), other.content());
        let (mut a, mut b) = (self.primitive(), other.primitive());
        if a.deg() < b.deg() {
            std::mem::swap(&mut a, &mut b);
        }
        let prim = loop {
            match b.deg() {
                None => break a.primitive_positive(),
                Some(0) => break IntPoly::one(),
                Some(_) => {
                    let r = a.pseudo_rem(&b).primitive();
                    a = b;
                    b = r;
                }
            }
        };
        prim.scale(&content_gcd)
    }

    /// a / gcd(a, a'), primitive with positive leading coefficient.
    pub fn squarefree_part(&self) -> IntPoly {
        match self.deg() {
            None => IntPoly::zero(),
            Some(0) => IntPoly::one(),
            Some(_) => {
                let g = self.gcd(&self.derivative());
                if g.deg() == Some(0) {
                    return self.primitive_positive();
                }
                let a = UniPoly::from_int_poly(self);
                let gg = UniPoly::from_int_poly(&g);
                let q = a.div_exact(&gg).expect("gcd must divide");
                q.to_int_primitive().0.primitive_positive()
            }
        }
    }

    pub fn is_squarefree(&self) -> bool {
        match self.deg() {
            None => false,
            Some(0) => true,
            Some(_) => self.gcd(&self.derivative()).deg() == Some(0),
        }
    }

    /// Resultant by the subresultant PRS (Cohen, Algorithm 3.3.7).
    pub fn resultant(&self, other: &IntPoly) -> Int {
        let (mut a, mut b) = (self.clone(), other.clone());
        if a.is_zero() || b.is_zero() {
            return Int::zero();
        }
        let mut s = 1i32;
        if a.deg() < b.deg() {
            if a.deg().unwrap() % 2 == 1 && b.deg().unwrap() % 2 == 1 {
                s = -s;
            }
            std::mem::swap(&mut a, &mut b);
        }
        if b.deg() == Some(0) {
            if a.deg() == Some(0) {
                return Int::one();
            }
            let r = b.c[0].pow(a.deg().unwrap() as u32);
            return if s < 0 { -r } else { r };
        }
        let ca = a.content();
        let cb = b.content();
        let a0 = a.divide_content(&ca);
        let b0 = b.divide_content(&cb);
        let t = ca.pow(b0.deg().unwrap() as u32) * cb.pow(a0.deg().unwrap() as u32);
        let mut a = a0;
        let mut b = b0;
        let mut g = Int::one();
        let mut h = Int::one();
        loop {
            let da = a.deg().unwrap();
            let db = b.deg().unwrap();
            if da % 2 == 1 && db % 2 == 1 {
                s = -s;
            }
            let delta = da - db;
            let r = a.pseudo_rem(&b);
            a = b;
            if r.is_zero() {
                return Int::zero();
            }
            let denom = &g * h.pow(delta as u32);
            b = IntPoly::new(r.c.iter().map(|c| c / &denom).collect());
            g = a.lead().unwrap().clone();
            h = if delta == 0 {
                h
            } else {
                // h <- g^delta / h^(delta-1), exact.
                let num = g.pow(delta as u32);
                let den = h.pow((delta - 1) as u32);
                num / den
            };
            if b.deg() == Some(0) {
                let q = a.deg().unwrap();
                let num = b.c[0].pow(q as u32);
                let den = h.pow((q - 1) as u32);
                let res = num / den;
                let res = res * t;
                return if s < 0 { -res } else { res };
            }
        }
    }

    /// disc = (-1)^(d(d-1)/2) Res(f, f') / lc(f).
    pub fn discriminant(&self) -> Rat {
        let d = self.deg().expect("discriminant of zero polynomial");
        assert!(d >= 1);
        let r = self.resultant(&self.derivative());
        let v = Rat::new(r, self.lead().unwrap().clone());
        if (d * (d - 1) / 2) % 2 == 1 {
            -v
        } else {
            v
        }
    }
}

/// Resultant of two rational polynomials. Errors when both are zero;
/// a single zero input gives 0.
pub fn resultant(a: &UniPoly, b: &UniPoly) -> Result<Rat> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::UndefinedResultant);
    }
    if a.is_zero() || b.is_zero() {
        return Ok(Rat::zero());
    }
    let (pa, sa) = a.to_int_primitive();
    let (pb, sb) = b.to_int_primitive();
    let da = pa.deg().unwrap() as u32;
    let db = pb.deg().unwrap() as u32;
    let core = Rat::from_integer(pa.resultant(&pb));
    // Res(sa*A, sb*B) = sa^deg(B) * sb^deg(A) * Res(A, B)
    let mut scale = Rat::one();
    for _ in 0..db {
        scale *= &sa;
    }
    for _ in 0..da {
        scale *= &sb;
    }
    Ok(core * scale)
}

/// Squarefree part of a rational polynomial: primitive integer output with
/// positive leading coefficient.
pub fn squarefree_part(a: &UniPoly) -> Result<UniPoly> {
    if a.is_zero() {
        return Err(Error::InvalidArg("squarefree part of zero".into()));
    }
    let (p, _) = a.to_int_primitive();
    Ok(UniPoly::from_int_poly(&p.squarefree_part()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn p(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_i64(coeffs)
    }

    fn ip(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64(coeffs)
    }

    #[test]
    fn arithmetic_basics() {
        let a = p(&[1, 2, 1]); // (t+1)^2
        let b = p(&[1, 1]);
        assert_eq!(b.mul(&b), a);
        assert_eq!(a.sub(&a), UniPoly::zero());
        assert_eq!(a.deg(), Some(2));
        assert_eq!(a.eval(&rat(1, 2)), rat(9, 4));
        let (q, r) = a.divrem(&b);
        assert_eq!(q, b);
        assert!(r.is_zero());
    }

    #[test]
    fn division_with_remainder() {
        let a = p(&[1, 0, 0, 1]); // t^3 + 1
        let d = p(&[-1, 1]); // t - 1
        let (q, r) = a.divrem(&d);
        assert_eq!(r, p(&[2]));
        assert_eq!(q.mul(&d).add(&r), a);
    }

    #[test]
    fn taylor_shift() {
        let a = p(&[0, 0, 1]); // t^2
        let sh = a.compose_shift(&rat(1, 1)); // (t+1)^2
        assert_eq!(sh, p(&[1, 2, 1]));
        // eval consistency on a denser example
        let f = p(&[3, -2, 0, 5]);
        let lam = rat(-2, 3);
        let g = f.compose_shift(&lam);
        for x in [rat(0, 1), rat(1, 2), rat(-3, 1)] {
            assert_eq!(g.eval(&x), f.eval(&(x.clone() + lam.clone())));
        }
    }

    #[test]
    fn primitive_decomposition() {
        let a = UniPoly::new(vec![rat(1, 2), rat(3, 4), rat(-5, 2)]);
        let (q, s) = a.to_int_primitive();
        assert_eq!(q, ip(&[2, 3, -10]));
        assert_eq!(s, rat(1, 4));
        assert_eq!(UniPoly::from_int_poly(&q).scale(&s), a);
    }

    #[test]
    fn pseudo_remainder_agrees_with_rational_remainder() {
        let a = ip(&[1, 3, 0, 2, 5]);
        let b = ip(&[2, 0, 3]);
        let r = a.pseudo_rem(&b);
        // prem = lc(b)^(da-db+1) * a mod b
        let qa = UniPoly::from_int_poly(&a);
        let qb = UniPoly::from_int_poly(&b);
        let factor = Rat::from_integer(int(3).pow(3));
        let want = qa.scale(&factor).rem(&qb);
        assert_eq!(UniPoly::from_int_poly(&r), want);
    }

    #[test]
    fn integer_exact_division() {
        let d = ip(&[-3, 2, 7]);
        let q = ip(&[5, 0, -1, 4]);
        let a = d.mul(&q);
        assert_eq!(a.div_exact(&d), Some(q));
        // remainder present: (a + 1) is no longer a multiple
        let a1 = a.add(&ip(&[1]));
        assert_eq!(a1.div_exact(&d), None);
        // quotient would need fractions: 2t+1 does not divide t^2
        assert_eq!(ip(&[0, 0, 1]).div_exact(&ip(&[1, 2])), None);
        assert_eq!(IntPoly::zero().div_exact(&d), Some(IntPoly::zero()));
        assert_eq!(ip(&[1, 1]).div_exact(&d), None);
    }

    #[test]
    fn gcd_examples() {
        let a = ip(&[-1, 0, 1]); // t^2 - 1
        let b = ip(&[1, 1]); // t + 1
        assert_eq!(a.gcd(&b), ip(&[1, 1]));
        let c = ip(&[-2, 0, 1]);
        let d = ip(&[-3, 0, 1]);
        assert_eq!(c.gcd(&d).deg(), Some(0));
        // content handling: gcd(2t+2, 4t+4) = 2t+2
        let e = ip(&[2, 2]);
        let f = ip(&[4, 4]);
        assert_eq!(e.gcd(&f), ip(&[1, 1]).scale(&num::integer::gcd(e.content(), f.content())));
    }

    #[test]
    fn resultant_fixed_values() {
        // Res(t^2-2, t^2-3) = (2-3)^2 = 1
        assert_eq!(ip(&[-2, 0, 1]).resultant(&ip(&[-3, 0, 1])), int(1));
        // Res(t^2-2, t-1) = (sqrt2-1)(-sqrt2-1) = -1
        assert_eq!(ip(&[-2, 0, 1]).resultant(&ip(&[-1, 1])), int(-1));
        // swap order: Res(B,A) = (-1)^(da*db) Res(A,B)
        assert_eq!(ip(&[-1, 1]).resultant(&ip(&[-2, 0, 1])), int(-1));
        // shared root => 0
        assert_eq!(ip(&[-1, 0, 1]).resultant(&ip(&[1, 1])), int(0));
        // constants
        assert_eq!(ip(&[5]).resultant(&ip(&[0, 0, 1])), int(25));
    }

    #[test]
    fn resultant_product_formula_oracle() {
        // Res(A,B) = lc(A)^deg(B) * prod B(alpha_i) over roots of A,
        // checked on polynomials constructed from known rational roots.
        let roots_a = [rat(1, 2), rat(-3, 1), rat(2, 5)];
        let lc_a = rat(6, 1);
        let mut a = UniPoly::constant(lc_a.clone());
        for r in &roots_a {
            a = a.mul(&p(&[0, 1]).sub(&UniPoly::constant(r.clone())));
        }
        let b = p(&[7, 0, -2, 1]);
        let mut want = Rat::one();
        for _ in 0..b.deg().unwrap() {
            want *= &lc_a;
        }
        for r in &roots_a {
            want *= b.eval(r);
        }
        assert_eq!(resultant(&a, &b).unwrap(), want);
    }

    #[test]
    fn resultant_rational_scaling() {
        let a = UniPoly::new(vec![rat(-1, 2), Rat::zero(), rat(1, 2)]); // (t^2-1)/2
        let b = p(&[-2, 1]); // t - 2
        // Res = lc(a)^1 * prod b(\pm1) ... direct: (1/2)^1 * ((1-2)(-1-2)) = 3/2
        assert_eq!(resultant(&a, &b).unwrap(), rat(3, 2));
    }

    #[test]
    fn resultant_undefined() {
        assert!(matches!(
            resultant(&UniPoly::zero(), &UniPoly::zero()),
            Err(Error::UndefinedResultant)
        ));
        assert_eq!(resultant(&UniPoly::zero(), &p(&[1, 1])).unwrap(), Rat::zero());
    }

    #[test]
    fn squarefree_examples() {
        // (t^2-1)^2 -> t^2-1
        let sq = ip(&[1, 0, -2, 0, 1]);
        assert_eq!(sq.squarefree_part(), ip(&[-1, 0, 1]));
        // already squarefree: unchanged (up to sign/primitivity)
        let f = ip(&[-1, -1, 0, 0, 0, 0, 0, 0, 0, 1]);
        assert_eq!(f.squarefree_part(), f);
        // scaling and sign normalization: -4(t-1)^2 -> t - 1
        let g = ip(&[-4, 8, -4]).neg();
        assert_eq!(g.squarefree_part(), ip(&[-1, 1]));
    }

    #[test]
    fn squarefree_counts_multiplicity_once() {
        // t^3 (t-2)^2 (t+5) -> t (t-2) (t+5)
        let f = ip(&[0, 0, 0, 1])
            .mul(&ip(&[-2, 1]))
            .mul(&ip(&[-2, 1]))
            .mul(&ip(&[5, 1]));
        let want = ip(&[0, 1]).mul(&ip(&[-2, 1])).mul(&ip(&[5, 1]));
        assert_eq!(f.squarefree_part(), want.primitive_positive());
    }

    #[test]
    fn discriminant_values() {
        // disc(t^2 + bt + c) = b^2 - 4c
        assert_eq!(ip(&[3, 1, 1]).discriminant(), Rat::from_integer(int(1 - 12)));
        // disc(t^2 - 2) = 8
        assert_eq!(ip(&[-2, 0, 1]).discriminant(), Rat::from_integer(int(8)));
    }

    #[test]
    fn eval_scaled_signs() {
        let f = ip(&[-2, 0, 1]); // t^2 - 2
        assert_eq!(f.sign_at(&rat(3, 2)), 1);
        assert_eq!(f.sign_at(&rat(7, 5)), -1);
        assert_eq!(f.sign_at_infinity(1), 1);
        assert_eq!(ip(&[0, 1]).sign_at_infinity(-1), -1);
    }
}
