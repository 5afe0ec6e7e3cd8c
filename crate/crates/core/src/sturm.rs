//! Sturm sequences: exact real-root counting, isolation and refinement.
//!
//! The chain is kept as primitive integer polynomials; each remainder is
//! rescaled by a positive constant only, which leaves sign variation counts
//! untouched while keeping coefficient growth in check.

use num::{One, Signed, Zero};

use crate::interval::Interval;
use crate::rat::{rat, Int, Rat};
use crate::unipoly::{IntPoly, UniPoly};
use crate::{Error, Result};

#[derive(Debug, Clone)]
pub struct SturmChain {
    chain: Vec<IntPoly>,
}

impl SturmChain {
    /// Builds the chain p, p', -rem(...), ... for a squarefree polynomial.
    pub fn new(f: &IntPoly) -> Result<Self> {
        if f.is_zero() {
            return Err(Error::InvalidArg("Sturm chain of zero".into()));
        }
        if !f.is_squarefree() {
            return Err(Error::NonSquarefree);
        }
        let mut chain = vec![f.primitive(), f.derivative().primitive()];
        loop {
            let b = chain[chain.len() - 1].clone();
            if b.deg().is_none() {
                chain.pop();
                break;
            }
            if b.deg() == Some(0) {
                break;
            }
            let a = &chain[chain.len() - 2];
            // prem scales a by lc(b)^k. Force the overall scaling factor
            // positive so the negated remainder keeps Sturm's convention.
            let da = a.deg().unwrap();
            let db = b.deg().unwrap();
            let lb = b.lead().unwrap().clone();
            let k = (da - db + 1) as u32;
            let r = if lb.is_negative() && k % 2 == 1 {
                a.scale(&lb).pseudo_rem(&b)
            } else {
                a.pseudo_rem(&b)
            };
            if r.is_zero() {
                break;
            }
            chain.push(r.neg().primitive());
        }
        Ok(SturmChain { chain })
    }

    pub fn poly(&self) -> &IntPoly {
        &self.chain[0]
    }

    fn variations(signs: impl Iterator<Item = i32>) -> usize {
        let mut v = 0;
        let mut last = 0;
        for s in signs {
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                v += 1;
            }
            last = s;
        }
        v
    }

    pub fn variations_at(&self, x: &Rat) -> usize {
        Self::variations(self.chain.iter().map(|p| p.sign_at(x)))
    }

    pub fn variations_at_infinity(&self, dir: i32) -> usize {
        Self::variations(self.chain.iter().map(|p| p.sign_at_infinity(dir)))
    }

    /// Number of distinct real roots in (a, b]; requires a < b.
    pub fn count_half_open(&self, a: &Rat, b: &Rat) -> usize {
        self.variations_at(a) - self.variations_at(b)
    }

    /// Number of distinct real roots in the open interval (a, b).
    pub fn count_open(&self, a: &Rat, b: &Rat) -> usize {
        let mut n = self.count_half_open(a, b);
        if self.chain[0].sign_at(b) == 0 {
            n -= 1;
        }
        n
    }

    /// Number of real roots inside a closed interval.
    pub fn count_closed(&self, iv: &Interval) -> usize {
        let mut n = if iv.lo() < iv.hi() {
            self.count_half_open(iv.lo(), iv.hi())
        } else {
            0
        };
        if self.chain[0].sign_at(iv.lo()) == 0 {
            n += 1;
        }
        n
    }

    pub fn count_all_real(&self) -> usize {
        self.variations_at_infinity(-1) - self.variations_at_infinity(1)
    }
}

/// a bound B with all real roots of f in (-B, B): 1 + max |c_k / c_d|.
pub fn root_bound(f: &IntPoly) -> Rat {
    let d = f.deg().expect("root bound of zero");
    let lead = f.lead().unwrap().abs();
    let mut m = Int::zero();
    for k in 0..d {
        let a = f.coeff(k).abs();
        if a > m {
            m = a;
        }
    }
    Rat::one() + Rat::new(m, lead)
}

/// Isolates all real roots of a squarefree polynomial inside `range`
/// (whole real line if `None`). Returned intervals are disjoint, each
/// contains exactly one root, and no endpoint is itself a root.
pub fn sturm_isolate(f: &UniPoly, range: Option<&Interval>) -> Result<Vec<Interval>> {
    let (fi, _) = f.to_int_primitive();
    if fi.is_zero() {
        return Err(Error::InvalidArg("isolation of zero polynomial".into()));
    }
    if fi.deg() == Some(0) {
        return Ok(vec![]);
    }
    let chain = SturmChain::new(&fi)?;
    let bound = root_bound(&fi);
    let (mut lo, mut hi) = match range {
        None => (-bound.clone(), bound.clone()),
        Some(iv) => (iv.lo().clone(), iv.hi().clone()),
    };
    if lo >= hi {
        return Ok(vec![]);
    }
    // Nudge endpoints off roots by bisecting toward the outside-of-range
    // region; root-free slack always exists because roots are finite.
    let mut step = rat(1, 2) * (&hi - &lo);
    while chain.poly().sign_at(&lo) == 0 || chain.poly().sign_at(&hi) == 0 {
        if chain.poly().sign_at(&lo) == 0 {
            let cand = &lo - &step;
            if chain.count_open(&cand, &lo) == 0 && chain.poly().sign_at(&cand) != 0 {
                lo = cand;
            }
        }
        if chain.poly().sign_at(&hi) == 0 {
            let cand = &hi + &step;
            if chain.count_open(&hi, &cand) == 0 && chain.poly().sign_at(&cand) != 0 {
                hi = cand;
            }
        }
        step = step * rat(1, 2);
    }
    let mut out = vec![];
    let mut stack = vec![(lo, hi)];
    while let Some((a, b)) = stack.pop() {
        let n = chain.count_half_open(&a, &b);
        if n == 0 {
            continue;
        }
        if n == 1 && chain.poly().sign_at(&b) != 0 {
            out.push(Interval::new(a, b));
            continue;
        }
        let mut m = (&a + &b) * rat(1, 2);
        // Keep midpoints off roots.
        let mut eps = (&b - &a) * rat(1, 4);
        while chain.poly().sign_at(&m) == 0 {
            m = &m + &eps;
            eps = eps * rat(1, 2);
        }
        stack.push((a, m.clone()));
        stack.push((m, b));
    }
    out.sort_by(|x, y| x.lo().cmp(y.lo()));
    Ok(out)
}

/// Bisects an isolating interval until its width is at most `width`.
/// The interval must bracket a root by a sign change.
pub fn refine_root(f: &UniPoly, iv: &Interval, width: &Rat) -> Result<Interval> {
    let (fi, _) = f.to_int_primitive();
    let mut lo = iv.lo().clone();
    let mut hi = iv.hi().clone();
    let slo = fi.sign_at(&lo);
    let shi = fi.sign_at(&hi);
    if slo == 0 {
        return Ok(Interval::point(lo));
    }
    if shi == 0 {
        return Ok(Interval::point(hi));
    }
    if slo == shi {
        return Err(Error::NoBracket);
    }
    while &(&hi - &lo) > width {
        let m = (&lo + &hi) * rat(1, 2);
        let sm = fi.sign_at(&m);
        if sm == 0 {
            return Ok(Interval::point(m));
        }
        if sm == slo {
            lo = m;
        } else {
            hi = m;
        }
    }
    Ok(Interval::new(lo, hi))
}

/// Width target 2^-bits.
pub fn width_bits(bits: u32) -> Rat {
    Rat::new(Int::one(), Int::one() << bits)
}
