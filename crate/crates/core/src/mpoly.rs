//! Sparse multivariate integer polynomials and resultant-based elimination.
//!
//! This is the cascade route: eliminate one variable at a time by
//! subresultant PRS resultants, keeping integer-primitive parts between
//! steps. Resultants may introduce extraneous factors, so the output is a
//! certified superset: it vanishes at the relevant coordinate of every
//! common zero, and callers filter it against certified data. Capped at 4
//! variables; the chart route covers larger systems.

use std::collections::BTreeMap;

use num::{Integer, One, Zero};

use crate::game::MultiAffine;
use crate::rat::{Int, Rat};
use crate::unipoly::IntPoly;
use crate::{Error, Result};

pub const MAX_VARS: usize = 4;

/// Exponent vector packed 16 bits per variable.
pub type Expo = u64;

fn expo_get(e: Expo, var: usize) -> u32 {
    ((e >> (16 * var)) & 0xffff) as u32
}

fn expo_set(e: Expo, var: usize, v: u32) -> Expo {
    (e & !(0xffffu64 << (16 * var))) | ((v as u64) << (16 * var))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MPoly {
    pub n: usize,
    terms: BTreeMap<Expo, Int>,
}

impl MPoly {
    pub fn zero(n: usize) -> MPoly {
        assert!(n <= MAX_VARS);
        MPoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, v: Int) -> MPoly {
        let mut p = MPoly::zero(n);
        if !v.is_zero() {
            p.terms.insert(0, v);
        }
        p
    }

    pub fn var(n: usize, j: usize) -> MPoly {
        let mut p = MPoly::zero(n);
        p.terms.insert(expo_set(0, j, 1), Int::one());
        p
    }

    /// Clears denominators of a multi-affine polynomial; returns the integer
    /// polynomial and the positive denominator that was cleared.
    pub fn from_multiaffine(f: &MultiAffine) -> Result<(MPoly, Int)> {
        if f.n > MAX_VARS {
            return Err(Error::InvalidArg(format!(
                "resultant route supports at most {MAX_VARS} variables"
            )));
        }
        let mut den = Int::one();
        for c in &f.coeffs {
            den = crate::rat::lcm(&den, c.denom());
        }
        let mut p = MPoly::zero(f.n);
        for (mask, c) in f.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let scaled = c * Rat::from_integer(den.clone());
            debug_assert!(scaled.is_integer());
            let mut e = 0u64;
            for j in 0..f.n {
                if mask & (1 << j) != 0 {
                    e = expo_set(e, j, 1);
                }
            }
            p.terms.insert(e, scaled.to_integer());
        }
        Ok((p, den))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&e| e == 0)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn deg_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|&e| expo_get(e, var)).max()
    }

    pub fn contains_var(&self, var: usize) -> bool {
        self.terms.keys().any(|&e| expo_get(e, var) > 0)
    }

    fn insert_add(&mut self, e: Expo, v: Int) {
        if v.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(v);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += v;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn add(&self, o: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (&e, v) in &o.terms {
            out.insert_add(e, v.clone());
        }
        out
    }

    pub fn sub(&self, o: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (&e, v) in &o.terms {
            out.insert_add(e, -v.clone());
        }
        out
    }

    pub fn neg(&self) -> MPoly {
        let mut out = MPoly::zero(self.n);
        for (&e, v) in &self.terms {
            out.terms.insert(e, -v.clone());
        }
        out
    }

    pub fn mul(&self, o: &MPoly) -> MPoly {
        let mut out = MPoly::zero(self.n);
        for (&e1, v1) in &self.terms {
            for (&e2, v2) in &o.terms {
                out.insert_add(e1 + e2, v1 * v2);
            }
        }
        out
    }

    pub fn mul_int(&self, k: &Int) -> MPoly {
        if k.is_zero() {
            return MPoly::zero(self.n);
        }
        let mut out = MPoly::zero(self.n);
        for (&e, v) in &self.terms {
            out.terms.insert(e, v * k);
        }
        out
    }

    pub fn pow(&self, mut k: u32) -> MPoly {
        let mut acc = MPoly::constant(self.n, Int::one());
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }

    /// Integer content (gcd of all coefficients), nonnegative.
    pub fn content(&self) -> Int {
        let mut g = Int::zero();
        for v in self.terms.values() {
            g = g.gcd(v);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn primitive(&self) -> MPoly {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        let mut out = MPoly::zero(self.n);
        for (&e, v) in &self.terms {
            out.terms.insert(e, v / &g);
        }
        out
    }

    /// Exact division; panics if the division is not exact (the subresultant
    /// recurrence only asks for divisions that are).
    pub fn div_exact(&self, d: &MPoly) -> MPoly {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut rem = self.clone();
        let mut q = MPoly::zero(self.n);
        let (&dlead_e, dlead_c) = d.terms.iter().next_back().unwrap();
        while !rem.is_zero() {
            let (&rlead_e, rlead_c) = rem.terms.iter().next_back().unwrap();
            let ok_expo = (0..self.n).all(|j| expo_get(rlead_e, j) >= expo_get(dlead_e, j));
            assert!(ok_expo, "inexact polynomial division (monomial)");
            let (qc, r) = rlead_c.div_rem(dlead_c);
            assert!(r.is_zero(), "inexact polynomial division (coefficient)");
            let qe = rlead_e - dlead_e;
            let mut mono = MPoly::zero(self.n);
            mono.terms.insert(qe, qc);
            rem = rem.sub(&mono.mul(d));
            q = q.add(&mono);
        }
        q
    }

    /// Views the polynomial as univariate in `var` with MPoly coefficients;
    /// index = power of var.
    pub fn coeffs_in(&self, var: usize) -> Vec<MPoly> {
        let d = match self.deg_in(var) {
            None => return vec![],
            Some(d) => d as usize,
        };
        let mut out = vec![MPoly::zero(self.n); d + 1];
        for (&e, v) in &self.terms {
            let k = expo_get(e, var) as usize;
            out[k].terms.insert(expo_set(e, var, 0), v.clone());
        }
        out
    }

    pub fn from_coeffs_in(n: usize, var: usize, coeffs: &[MPoly]) -> MPoly {
        let mut out = MPoly::zero(n);
        for (k, c) in coeffs.iter().enumerate() {
            for (&e, v) in &c.terms {
                debug_assert_eq!(expo_get(e, var), 0);
                out.insert_add(expo_set(e, var, k as u32), v.clone());
            }
        }
        out
    }

    /// Converts a polynomial involving only `var` into an IntPoly.
    pub fn to_unipoly(&self, var: usize) -> Result<IntPoly> {
        let d = self.deg_in(var).unwrap_or(0) as usize;
        let mut c = vec![Int::zero(); d + 1];
        for (&e, v) in &self.terms {
            for j in 0..self.n {
                if j != var && expo_get(e, j) > 0 {
                    return Err(Error::InvalidArg(
                        "polynomial is not univariate in the kept variable".into(),
                    ));
                }
            }
            c[expo_get(e, var) as usize] = v.clone();
        }
        Ok(IntPoly::new(c))
    }

    pub fn eval(&self, x: &[Rat]) -> Rat {
        let mut acc = Rat::zero();
        for (&e, v) in &self.terms {
            let mut term = Rat::from_integer(v.clone());
            for (j, xj) in x.iter().enumerate() {
                for _ in 0..expo_get(e, j) {
                    term *= xj;
                }
            }
            acc += term;
        }
        acc
    }
}

struct UniInVar {
    coeffs: Vec<MPoly>,
}

impl UniInVar {
    fn new(p: &MPoly, var: usize) -> UniInVar {
        let mut coeffs = p.coeffs_in(var);
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        UniInVar { coeffs }
    }

    fn deg(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    fn lead(&self) -> &MPoly {
        self.coeffs.last().unwrap()
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn trim(mut self) -> UniInVar {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
        self
    }

    fn scale(&self, k: &MPoly) -> UniInVar {
        UniInVar {
            coeffs: self.coeffs.iter().map(|c| c.mul(k)).collect(),
        }
        .trim()
    }

    fn sub(&self, o: &UniInVar) -> UniInVar {
        let m = self.coeffs.len().max(o.coeffs.len());
        let n = self
            .coeffs
            .first()
            .or_else(|| o.coeffs.first())
            .map_or(0, |c| c.n);
        let mut out = Vec::with_capacity(m);
        for k in 0..m {
            let a = self.coeffs.get(k).cloned().unwrap_or_else(|| MPoly::zero(n));
            let b = o.coeffs.get(k).cloned().unwrap_or_else(|| MPoly::zero(n));
            out.push(a.sub(&b));
        }
        UniInVar { coeffs: out }.trim()
    }

    fn shift_up(&self, k: usize, n: usize) -> UniInVar {
        let mut coeffs = vec![MPoly::zero(n); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniInVar { coeffs }
    }

    fn div_exact_coeffs(&self, d: &MPoly) -> UniInVar {
        UniInVar {
            coeffs: self.coeffs.iter().map(|c| c.div_exact(d)).collect(),
        }
    }

    /// Pseudo-remainder normalized to exactly lc(b)^(deg a − deg b + 1)·a mod b.
    fn pseudo_rem(&self, b: &UniInVar, n: usize) -> UniInVar {
        let da = self.deg().expect("zero dividend");
        let db = b.deg().expect("zero divisor");
        assert!(da >= db);
        let lb = b.lead().clone();
        let mut r = UniInVar {
            coeffs: self.coeffs.clone(),
        };
        let mut scale_count = 0usize;
        while let Some(dr) = r.deg() {
            if dr < db {
                break;
            }
            let lr = r.lead().clone();
            r = r.scale(&lb).sub(&b.scale(&lr).shift_up(dr - db, n));
            scale_count += 1;
        }
        let want = da - db + 1;
        if scale_count < want {
            r = r.scale(&lb.pow((want - scale_count) as u32));
        }
        r
    }
}

/// Resultant of a and b with respect to `var`, by the subresultant PRS
/// (Ducos/Cohen style sign and divisor bookkeeping, coefficients in the
/// polynomial ring over the remaining variables).
pub fn resultant_in(a: &MPoly, b: &MPoly, var: usize) -> Result<MPoly> {
    let n = a.n;
    if a.is_zero() && b.is_zero() {
        return Err(Error::UndefinedResultant);
    }
    if a.is_zero() || b.is_zero() {
        return Ok(MPoly::zero(n));
    }
    let mut pa = UniInVar::new(a, var);
    let mut pb = UniInVar::new(b, var);
    let (da, db) = (pa.deg().unwrap(), pb.deg().unwrap());
    if da == 0 && db == 0 {
        return Ok(MPoly::constant(n, Int::one()));
    }
    if da == 0 {
        return Ok(pa.coeffs[0].pow(db as u32));
    }
    if db == 0 {
        return Ok(pb.coeffs[0].pow(da as u32));
    }
    let mut sign = 1i32;
    if da < db {
        std::mem::swap(&mut pa, &mut pb);
        if da % 2 == 1 && db % 2 == 1 {
            sign = -sign;
        }
    }
    let mut g = MPoly::constant(n, Int::one());
    let mut h = MPoly::constant(n, Int::one());
    loop {
        let da = pa.deg().unwrap();
        let db = pb.deg().unwrap();
        if da % 2 == 1 && db % 2 == 1 {
            sign = -sign;
        }
        let delta = (da - db) as u32;
        let r = pa.pseudo_rem(&pb, n);
        if r.is_zero() {
            return Ok(MPoly::zero(n));
        }
        let divisor = g.mul(&h.pow(delta));
        let rnew = r.div_exact_coeffs(&divisor);
        pa = pb;
        pb = rnew;
        g = pa.lead().clone();
        h = if delta == 0 {
            h
        } else if delta == 1 {
            g.clone()
        } else {
            // h = g^delta / h^(delta-1)
            g.pow(delta).div_exact(&h.pow(delta - 1))
        };
        if pb.deg().unwrap() == 0 {
            let q = pa.deg().unwrap() as u32;
            let num = pb.coeffs[0].pow(q);
            let res = if q <= 1 {
                num
            } else {
                num.div_exact(&h.pow(q - 1))
            };
            return Ok(if sign < 0 { res.neg() } else { res });
        }
    }
}

/// Triangular cascade: eliminates every variable in `elim_order` (each must
/// differ from `keep`), returning a nonzero polynomial in x_keep alone that
/// vanishes at the keep-coordinate of every common zero of the inputs.
pub fn eliminate_cascade(polys: &[MPoly], keep: usize, elim_order: &[usize]) -> Result<IntPoly> {
    let n = match polys.first() {
        Some(p) => p.n,
        None => return Err(Error::InvalidArg("empty system".into())),
    };
    if polys.iter().any(|p| p.is_zero()) {
        return Err(Error::Degenerate(
            "zero polynomial in resultant cascade".into(),
        ));
    }
    let mut set: Vec<MPoly> = polys.iter().map(|p| p.primitive()).collect();
    for &v in elim_order {
        assert!(v != keep && v < n);
        let (with, without): (Vec<MPoly>, Vec<MPoly>) =
            set.into_iter().partition(|p| p.contains_var(v));
        let mut next = without;
        if !with.is_empty() {
            // Pivot: lowest degree in v, then fewest terms, for small PRS steps.
            let pivot_idx = (0..with.len())
                .min_by_key(|&k| (with[k].deg_in(v).unwrap(), with[k].num_terms()))
                .unwrap();
            for (k, q) in with.iter().enumerate() {
                if k == pivot_idx {
                    continue;
                }
                let r = resultant_in(&with[pivot_idx], q, v)?;
                if r.is_zero() {
                    return Err(Error::Degenerate(format!(
                        "vanishing resultant while eliminating x{}",
                        v + 1
                    )));
                }
                if !r.is_constant() {
                    next.push(r.primitive());
                }
            }
            if with.len() == 1 {
                // Only the pivot mentions v: it is solvable for v away from a
                // thin set, so dropping it keeps the superset property.
            }
        }
        set = next;
        if set.is_empty() {
            // Every constraint degenerated to a nonzero constant: no common
            // zeros project anywhere, and any nonzero constant certifies it.
            return Ok(IntPoly::one());
        }
    }
    let mut acc: Option<IntPoly> = None;
    for p in &set {
        let u = p.to_unipoly(keep)?;
        acc = Some(match acc {
            None => u,
            Some(prev) => prev.gcd(&u),
        });
    }
    let out = acc.unwrap();
    if out.is_zero() {
        return Err(Error::Degenerate("zero eliminant from cascade".into()));
    }
    Ok(out.primitive_positive())
}
