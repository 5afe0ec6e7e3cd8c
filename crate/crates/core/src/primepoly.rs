//! Dense polynomials over F_p and distinct-degree factorization.
//!
//! The one consumer-facing operation here is `cycle_type`: the multiset of
//! irreducible factor degrees of a squarefree reduction mod p, which by
//! Dedekind's theorem is a cycle type realized in the Galois group.

use num::bigint::Sign;

use crate::primefield::{addmod, invmod, is_prime_u64, mulmod, submod};
use crate::rat::Int;
use crate::unipoly::IntPoly;
use crate::{Error, Result};

/// Polynomial over F_p, coefficient of t^k at index k, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimePoly {
    pub p: u64,
    c: Vec<u64>,
}

fn int_mod(v: &Int, p: u64) -> u64 {
    let m = (v % Int::from(p)).to_u64_digits();
    let r = m.1.first().copied().unwrap_or(0);
    match m.0 {
        Sign::Minus => (p - r) % p,
        _ => r,
    }
}

impl PrimePoly {
    pub fn new(p: u64, mut c: Vec<u64>) -> Self {
        for x in &mut c {
            *x %= p;
        }
        while c.last() == Some(&0) {
            c.pop();
        }
        PrimePoly { p, c }
    }

    pub fn from_int_poly(f: &IntPoly, p: u64) -> Self {
        Self::new(p, f.coeffs().iter().map(|c| int_mod(c, p)).collect())
    }

    pub fn zero(p: u64) -> Self {
        PrimePoly { p, c: vec![] }
    }

    pub fn x(p: u64) -> Self {
        Self::new(p, vec![0, 1])
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

    pub fn lead(&self) -> u64 {
        *self.c.last().unwrap_or(&0)
    }

    pub fn coeff(&self, k: usize) -> u64 {
        self.c.get(k).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.c
    }

    pub fn add(&self, o: &PrimePoly) -> PrimePoly {
        let n = self.c.len().max(o.c.len());
        let mut out = vec![0u64; n];
        for (k, x) in out.iter_mut().enumerate() {
            let a = self.c.get(k).copied().unwrap_or(0);
            let b = o.c.get(k).copied().unwrap_or(0);
            *x = addmod(a, b, self.p);
        }
        PrimePoly::new(self.p, out)
    }

    pub fn scale(&self, s: u64) -> PrimePoly {
        PrimePoly::new(self.p, self.c.iter().map(|&x| mulmod(x, s, self.p)).collect())
    }

    pub fn monic(&self) -> PrimePoly {
        if self.is_zero() || self.lead() == 1 {
            return self.clone();
        }
        let inv = invmod(self.lead(), self.p);
        PrimePoly::new(self.p, self.c.iter().map(|&x| mulmod(x, inv, self.p)).collect())
    }

    pub fn sub(&self, o: &PrimePoly) -> PrimePoly {
        let n = self.c.len().max(o.c.len());
        let mut out = vec![0u64; n];
        for k in 0..n {
            let a = self.c.get(k).copied().unwrap_or(0);
            let b = o.c.get(k).copied().unwrap_or(0);
            out[k] = submod(a, b, self.p);
        }
        PrimePoly::new(self.p, out)
    }

    pub fn mul(&self, o: &PrimePoly) -> PrimePoly {
        if self.is_zero() || o.is_zero() {
            return PrimePoly::zero(self.p);
        }
        let mut out = vec![0u64; self.c.len() + o.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.c.iter().enumerate() {
                if b != 0 {
                    out[i + j] = (out[i + j] + mulmod(a, b, self.p)) % self.p;
                }
            }
        }
        PrimePoly::new(self.p, out)
    }

    pub fn rem(&self, m: &PrimePoly) -> PrimePoly {
        assert!(!m.is_zero());
        let dm = m.deg().unwrap();
        let mut r = self.c.clone();
        if r.len() < dm + 1 {
            return self.clone();
        }
        let inv = invmod(m.lead(), self.p);
        for k in (dm..r.len()).rev() {
            let c = mulmod(r[k], inv, self.p);
            if c != 0 {
                for j in 0..=dm {
                    r[k - dm + j] = submod(r[k - dm + j], mulmod(c, m.c[j], self.p), self.p);
                }
            }
        }
        r.truncate(dm);
        PrimePoly::new(self.p, r)
    }

    pub fn divmod(&self, m: &PrimePoly) -> (PrimePoly, PrimePoly) {
        assert!(!m.is_zero());
        let dm = m.deg().unwrap();
        let mut r = self.c.clone();
        if r.len() < dm + 1 {
            return (PrimePoly::zero(self.p), self.clone());
        }
        let inv = invmod(m.lead(), self.p);
        let mut q = vec![0u64; r.len() - dm];
        for k in (dm..r.len()).rev() {
            let c = mulmod(r[k], inv, self.p);
            q[k - dm] = c;
            if c != 0 {
                for j in 0..=dm {
                    r[k - dm + j] = submod(r[k - dm + j], mulmod(c, m.c[j], self.p), self.p);
                }
            }
        }
        r.truncate(dm);
        (PrimePoly::new(self.p, q), PrimePoly::new(self.p, r))
    }

    pub fn gcd(&self, o: &PrimePoly) -> PrimePoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> PrimePoly {
        if self.c.len() <= 1 {
            return PrimePoly::zero(self.p);
        }
        let out: Vec<u64> = self.c[1..]
            .iter()
            .enumerate()
            .map(|(i, &c)| mulmod(c, (i as u64 + 1) % self.p, self.p))
            .collect();
        PrimePoly::new(self.p, out)
    }

    /// self^e mod m by binary exponentiation.
    pub fn powmod_poly(&self, mut e: u64, m: &PrimePoly) -> PrimePoly {
        let mut acc = PrimePoly::new(self.p, vec![1]);
        let mut b = self.rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b).rem(m);
            }
            b = b.mul(&b).rem(m);
            e >>= 1;
        }
        acc
    }
}

/// Degrees (with multiplicity as counts of factors) of the irreducible
/// factors of a squarefree monic polynomial over F_p, via distinct-degree
/// factorization.
fn distinct_degree_type(f: &PrimePoly) -> Vec<usize> {
    let p = f.p;
    let mut f = f.monic();
    let mut parts = vec![];
    let x = PrimePoly::x(p);
    // Frobenius ladder: w = x^(p^d) mod f, recomputed against the shrinking f.
    let mut w = x.powmod_poly(p, &f);
    let mut d = 1usize;
    while let Some(df) = f.deg() {
        if df == 0 {
            break;
        }
        if d > df / 2 {
            parts.push(df);
            break;
        }
        let g = w.sub(&x).gcd(&f);
        if let Some(dg) = g.deg() {
            if dg > 0 {
                debug_assert!(dg % d == 0);
                for _ in 0..dg / d {
                    parts.push(d);
                }
                f = f.divmod(&g).0;
                w = w.rem(&f);
            }
        }
        w = w.powmod_poly(p, &f);
        d += 1;
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    parts
}

/// Cycle type of Frobenius at p for a primitive integer polynomial:
/// `Ok(None)` means the prime is rejected (leading coefficient drops or the
/// reduction is not squarefree); rejection is not an error. Parts are
/// reported in descending order.
pub fn cycle_type(f: &IntPoly, p: u64) -> Result<Option<Vec<usize>>> {
    if !is_prime_u64(p) {
        return Err(Error::NotPrime(p));
    }
    let d = f
        .deg()
        .ok_or_else(|| Error::InvalidArg("cycle type of zero polynomial".into()))?;
    if d == 0 {
        return Err(Error::InvalidArg("cycle type of a constant".into()));
    }
    let fp = PrimePoly::from_int_poly(f, p);
    if fp.deg() != Some(d) {
        return Ok(None); // leading coefficient vanished mod p
    }
    let der = fp.derivative();
    if der.is_zero() || fp.gcd(&der).deg() != Some(0) {
        return Ok(None); // not squarefree mod p
    }
    Ok(Some(distinct_degree_type(&fp)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::unipoly::IntPoly;

    fn ip(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64(coeffs)
    }

    #[test]
    fn reduction_and_arithmetic() {
        let f = PrimePoly::from_int_poly(&ip(&[-1, 0, 1]), 5); // t^2 - 1
        assert_eq!(f, PrimePoly::new(5, vec![4, 0, 1]));
        let g = PrimePoly::new(5, vec![1, 1]);
        assert_eq!(f.rem(&g), PrimePoly::zero(5));
        let (q, r) = f.divmod(&g);
        assert_eq!(q, PrimePoly::new(5, vec![4, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn cycle_type_quadratics() {
        // t^2 + 1 irreducible mod 3 -> {2}; splits mod 5 -> {1,1}
        let f = ip(&[1, 0, 1]);
        assert_eq!(cycle_type(&f, 3).unwrap(), Some(vec![2]));
        assert_eq!(cycle_type(&f, 5).unwrap(), Some(vec![1, 1]));
        // t^2 - 2 mod 2 = t^2: not squarefree -> rejected
        assert_eq!(cycle_type(&ip(&[-2, 0, 1]), 2).unwrap(), None);
        assert_eq!(cycle_type(&ip(&[-2, 0, 1]), 3).unwrap(), Some(vec![2]));
    }

    #[test]
    fn cycle_type_lead_drop_rejected() {
        // 5t^3 + t + 1 mod 5 drops degree
        let f = ip(&[1, 1, 0, 5]);
        assert_eq!(cycle_type(&f, 5).unwrap(), None);
    }

    #[test]
    fn cycle_type_not_prime_is_error() {
        assert!(matches!(cycle_type(&ip(&[1, 0, 1]), 6), Err(Error::NotPrime(6))));
    }

    #[test]
    fn cycle_type_splitting_cubic() {
        // t^3 - t = t(t-1)(t+1) splits everywhere it is squarefree
        let f = ip(&[0, -1, 0, 1]);
        assert_eq!(cycle_type(&f, 5).unwrap(), Some(vec![1, 1, 1]));
        // t^3 - 2 mod 7: 2 is not a cube mod 7 => irreducible {3}
        assert_eq!(cycle_type(&ip(&[-2, 0, 0, 1]), 7).unwrap(), Some(vec![3]));
        // t^3 - 2 mod 5: 2 = 3^3 mod 5, so one root: {2,1}
        assert_eq!(cycle_type(&ip(&[-2, 0, 0, 1]), 5).unwrap(), Some(vec![2, 1]));
    }

    #[test]
    fn cycle_type_sum_is_degree() {
        let f = ip(&[-1, -1, 0, 0, 0, 0, 0, 0, 0, 1]); // t^9 - t - 1
        for p in [2u64, 3, 5, 7, 11, 13] {
            if let Some(t) = cycle_type(&f, p).unwrap() {
                assert_eq!(t.iter().sum::<usize>(), 9);
                assert!(t.windows(2).all(|w| w[0] >= w[1]));
            }
        }
    }
}
