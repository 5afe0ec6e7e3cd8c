//! Rational reconstruction of per-coordinate charts from modular data,
//! with exact certification of the recovered identities.
//!
//! `solve_charts` runs the mod-p engine over a stream of 62-bit primes,
//! groups primes by structural signature, CRT-combines the dominant group,
//! and reconstructs rational charts. The reconstruction is then certified
//! unconditionally: the integer-cleared value f_k(V(t)) must be an exact
//! polynomial multiple of the eliminant e(t), checked by exact division,
//! so every root of e yields an exact solution of the system.

use num::{Integer, One, Signed, Zero};
use rayon::prelude::*;

use crate::interval::Interval;
use crate::modsys::{prime_charts, CompactSystem, PrimeChartSet, PrimeOutcome};
use crate::primefield::{invmod, is_prime_u64, mulmod, submod};
use crate::primepoly::PrimePoly;
use crate::rat::{Int, Rat};
use crate::sturm::{refine_root, sturm_isolate, width_bits, SturmChain};
use crate::unipoly::{IntPoly, UniPoly};
use crate::{Error, Result};

#[derive(Debug, Clone)]
pub struct RurOptions {
    /// hard cap on primes consumed before giving up
    pub max_primes: usize,
}

impl Default for RurOptions {
    fn default() -> Self {
        RurOptions { max_primes: 4000 }
    }
}

/// Parametrization data attached to a chart whose center is primitive.
#[derive(Debug, Clone)]
pub struct ChartShape {
    /// integer numerators of the V_j, with V_center(t) = t
    pub v_num: Vec<IntPoly>,
    /// positive denominators: x_j = v_num[j](beta) / v_den[j]
    pub v_den: Vec<Int>,
}

/// Certified chart for one coordinate.
#[derive(Debug, Clone)]
pub struct Chart {
    pub center: usize,
    /// primitive integer minpoly candidate with positive lead
    pub e_int: IntPoly,
    /// the same polynomial made monic over Q
    pub e_monic: UniPoly,
    /// squarefree part of e_int (equals e_int when squarefree)
    pub elim: IntPoly,
    /// true when squarefreeness of e_int was certified
    pub squarefree: bool,
    pub shape: Option<ChartShape>,
}

/// A real solution of the system located through one chart.
#[derive(Debug, Clone)]
pub struct ChartPoint {
    pub center: usize,
    pub beta: Interval,
    pub coords: Vec<Interval>,
}

#[derive(Debug, Clone)]
pub struct ChartSet {
    pub m: usize,
    pub dim: usize,
    pub charts: Vec<Chart>,
    sys: CompactSystem,
}

struct PrimeStream {
    candidate: u64,
}

impl PrimeStream {
    fn new() -> PrimeStream {
        PrimeStream {
            candidate: (1u64 << 62) - 1,
        }
    }

    fn next(&mut self) -> u64 {
        loop {
            let c = self.candidate;
            self.candidate -= 2;
            if is_prime_u64(c) {
                return c;
            }
        }
    }
}

fn int_mod_u64(v: &Int, p: u64) -> u64 {
    let m = (v % Int::from(p)).to_u64_digits();
    let r = m.1.first().copied().unwrap_or(0);
    match m.0 {
        num::bigint::Sign::Minus => (p - r) % p,
        _ => r,
    }
}

/// Incremental Chinese remaindering over a growing set of slots.
struct CrtAccum {
    modulus: Int,
    residues: Vec<Int>,
}

impl CrtAccum {
    fn new() -> CrtAccum {
        CrtAccum {
            modulus: Int::one(),
            residues: vec![],
        }
    }

    fn push_prime(&mut self, p: u64, vals: &[u64]) {
        if vals.len() > self.residues.len() {
            // late slots were implicitly zero mod every earlier prime
            self.residues.resize(vals.len(), Int::zero());
        }
        let minv = invmod(int_mod_u64(&self.modulus, p), p);
        let pi = Int::from(p);
        for (k, r) in self.residues.iter_mut().enumerate() {
            let v = vals.get(k).copied().unwrap_or(0);
            let rp = int_mod_u64(r, p);
            let delta = mulmod(submod(v, rp, p), minv, p);
            if delta != 0 {
                *r += &self.modulus * Int::from(delta);
            }
        }
        self.modulus *= pi;
    }
}

/// Balanced rational reconstruction: a/b with |a|, b <= sqrt(M/2) and
/// a ≡ r·b mod M, if one exists.
pub fn rat_reconstruct(r: &Int, m: &Int) -> Option<Rat> {
    let bound = (m / Int::from(2u8)).sqrt();
    let mut r0 = m.clone();
    let mut r1 = r.mod_floor(m);
    let mut t0 = Int::zero();
    let mut t1 = Int::one();
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
        let _ = &r0;
    }
    if t1.is_zero() || t1.abs() > bound {
        return None;
    }
    let (a, b) = if t1.is_negative() {
        (-r1, -t1)
    } else {
        (r1, t1)
    };
    if a.gcd(&b) != Int::one() {
        return None;
    }
    Some(Rat::new(a, b))
}

/// Slot layout of the CRT vector for one signature group.
struct Layout {
    m: usize,
    dims: Vec<usize>,
    shape: Vec<bool>,
    dim: usize,
}

impl Layout {
    fn from_signature(sig: &[usize], m: usize) -> Layout {
        let dim = sig[0];
        let dims = sig[1..1 + m].to_vec();
        let shape: Vec<bool> = sig[1 + m..1 + 2 * m].iter().map(|&x| x == 1).collect();
        Layout {
            m,
            dims,
            shape,
            dim,
        }
    }

    fn num_slots(&self) -> usize {
        let mut n = 0;
        for i in 0..self.m {
            n += self.dims[i];
            if self.shape[i] {
                // V_center is always exactly t, so it is not stored
                n += (self.m - 1) * self.dim;
            }
        }
        n
    }

    fn fill(&self, cs: &PrimeChartSet, out: &mut Vec<u64>) {
        out.clear();
        for i in 0..self.m {
            for k in 0..self.dims[i] {
                out.push(cs.minpoly[i].coeff(k));
            }
            if self.shape[i] {
                let vs = cs.params[i].as_ref().unwrap();
                for (j, v) in vs.iter().enumerate() {
                    if j == i {
                        continue;
                    }
                    for k in 0..self.dim {
                        out.push(v.coeff(k));
                    }
                }
            }
        }
    }
}

struct GroupState {
    sig: Vec<usize>,
    layout: Layout,
    primes: Vec<u64>,
    crt: CrtAccum,
    last: Option<Vec<Rat>>,
}

fn reconstruct_all(crt: &CrtAccum) -> Option<Vec<Rat>> {
    crt.residues
        .iter()
        .map(|r| rat_reconstruct(r, &crt.modulus))
        .collect()
}

/// Multi-affine evaluation over interval coordinates.
pub fn eval_masks_interval(g: &[(u32, Rat)], coords: &[Interval]) -> Interval {
    let mut acc = Interval::point(Rat::zero());
    for (mask, c) in g {
        let mut term = Interval::point(c.clone());
        let mut mm = *mask;
        while mm != 0 {
            let j = mm.trailing_zeros() as usize;
            term = term.mul(&coords[j]);
            mm &= mm - 1;
        }
        acc = acc.add(&term);
    }
    acc
}

fn build_charts(sys: &CompactSystem, layout: &Layout, vals: &[Rat]) -> Result<Vec<Chart>> {
    let mut charts = Vec::with_capacity(layout.m);
    let mut pos = 0usize;
    for i in 0..layout.m {
        let d = layout.dims[i];
        let mut mc: Vec<Rat> = vals[pos..pos + d].to_vec();
        pos += d;
        mc.push(Rat::one());
        let e_monic = UniPoly::new(mc);
        let (e_int, _) = e_monic.to_int_primitive();
        let e_int = e_int.primitive_positive();
        let shape = if layout.shape[i] {
            let mut v_num = Vec::with_capacity(layout.m);
            let mut v_den = Vec::with_capacity(layout.m);
            for j in 0..layout.m {
                if j == i {
                    v_num.push(IntPoly::from_i64(&[0, 1]));
                    v_den.push(Int::one());
                    continue;
                }
                let vc: Vec<Rat> = vals[pos..pos + layout.dim].to_vec();
                pos += layout.dim;
                let vp = UniPoly::new(vc);
                let den = vp
                    .coeffs()
                    .iter()
                    .fold(Int::one(), |acc, c| crate::rat::lcm(&acc, c.denom()));
                let num = IntPoly::new(
                    vp.coeffs()
                        .iter()
                        .map(|c| c.numer() * (&den / c.denom()))
                        .collect(),
                );
                v_num.push(num);
                v_den.push(den);
            }
            Some(ChartShape { v_num, v_den })
        } else {
            None
        };
        charts.push(Chart {
            center: i,
            e_int: e_int.clone(),
            e_monic,
            elim: e_int,
            squarefree: false,
            shape,
        });
    }
    let _ = sys;
    Ok(charts)
}

/// Extends the on-demand table of subset products of the V numerators so
/// that the entry for `mask` is present.
fn ensure_products(prod: &mut [Option<IntPoly>], v_num: &[IntPoly], mask: usize) {
    if prod[mask].is_some() {
        return;
    }
    let mut chain = vec![mask];
    let mut cur = mask;
    while prod[cur].is_none() {
        cur &= cur - 1;
        chain.push(cur);
    }
    for w in chain.windows(2).rev() {
        let (tgt, src) = (w[0], w[1]);
        let bit = (tgt ^ src).trailing_zeros() as usize;
        let np = prod[src].as_ref().unwrap().mul(&v_num[bit]);
        prod[tgt] = Some(np);
    }
}

/// Integer-cleared value of the multi-affine form g on the parametrization:
/// C · D_full · g(V(t)) with C clearing the coefficients of g and D_full the
/// product of all chart denominators.
fn cleared_value(
    g: &[(u32, Rat)],
    shape: &ChartShape,
    prodc: &[Int],
    prod: &mut [Option<IntPoly>],
) -> IntPoly {
    let cg = g
        .iter()
        .fold(Int::one(), |acc, (_, c)| crate::rat::lcm(&acc, c.denom()));
    let mut h = IntPoly::zero();
    for (mask, c) in g {
        let mask = *mask as usize;
        ensure_products(prod, &shape.v_num, mask);
        let s = (c * Rat::from_integer(cg.clone())).to_integer() * &prodc[mask];
        h = h.add(&prod[mask].as_ref().unwrap().scale(&s));
    }
    h
}

/// Complementary denominator products per mask: prodc[mask] multiplies in
/// the v_den of every variable outside the mask, so each cleared term has
/// the same total denominator.
fn complement_denoms(shape: &ChartShape, m: usize) -> Vec<Int> {
    let full = 1usize << m;
    let mut prodc = vec![Int::one(); full];
    for (mask, pc) in prodc.iter_mut().enumerate() {
        for j in 0..m {
            if mask & (1 << j) == 0 {
                *pc *= &shape.v_den[j];
            }
        }
    }
    prodc
}

/// Certifies f_k(V(t)) ≡ 0 mod e(t) for every equation: the integer-cleared
/// value of f_k on the parametrization must be an exact multiple of the
/// minpoly, checked by exact division over Z.
fn certify_identity(sys: &CompactSystem, chart: &Chart) -> bool {
    let shape = match &chart.shape {
        Some(s) => s,
        None => return true,
    };
    let m = sys.m;
    let prodc = complement_denoms(shape, m);
    let mut prod: Vec<Option<IntPoly>> = vec![None; 1usize << m];
    prod[0] = Some(IntPoly::one());
    for eq in &sys.eqs {
        let h = cleared_value(eq, shape, &prodc, &mut prod);
        if h.is_zero() {
            continue;
        }
        if h.div_exact(&chart.e_int).is_none() {
            return false;
        }
    }
    true
}

/// Squarefreeness certificate: one prime preserving the lead with a constant
/// gcd(e, e') proves squarefreeness; the exact squarefree part is the rare
/// fallback.
fn certify_squarefree(e: &IntPoly, primes: &[u64], stream: &mut PrimeStream) -> (bool, IntPoly) {
    let d = e.deg().unwrap_or(0);
    if d <= 1 {
        return (true, e.clone());
    }
    let lead = e.lead().unwrap().clone();
    let mut tried = 0;
    let mut idx = 0;
    while tried < 25 {
        let p = if idx < primes.len() {
            let p = primes[idx];
            idx += 1;
            p
        } else {
            stream.next()
        };
        if int_mod_u64(&lead, p) == 0 {
            continue;
        }
        tried += 1;
        let ep = PrimePoly::from_int_poly(e, p);
        let der = ep.derivative();
        if der.is_zero() {
            continue;
        }
        if ep.gcd(&der).deg() == Some(0) {
            return (true, e.clone());
        }
    }
    let sf = e.squarefree_part().primitive_positive();
    let is_sf = sf == *e;
    (is_sf, sf)
}

/// True when gcd(a, b) is constant, certified by a single prime that
/// preserves both leading coefficients; falls back to the exact gcd.
pub fn certified_trivial_gcd(a: &IntPoly, b: &IntPoly) -> bool {
    if a.is_zero() || b.is_zero() {
        return false;
    }
    if a.deg() == Some(0) || b.deg() == Some(0) {
        return true;
    }
    let la = a.lead().unwrap().clone();
    let lb = b.lead().unwrap().clone();
    let mut stream = PrimeStream::new();
    let mut tried = 0;
    while tried < 25 {
        let p = stream.next();
        if int_mod_u64(&la, p) == 0 || int_mod_u64(&lb, p) == 0 {
            continue;
        }
        tried += 1;
        let ap = PrimePoly::from_int_poly(a, p);
        let bp = PrimePoly::from_int_poly(b, p);
        if ap.gcd(&bp).deg() == Some(0) {
            return true;
        }
    }
    a.gcd(b).deg() == Some(0)
}

/// Drives the modular engine until the dominant signature group yields a
/// stable rational reconstruction that passes certification.
pub fn solve_charts(sys: &CompactSystem, opts: &RurOptions) -> Result<ChartSet> {
    let mut stream = PrimeStream::new();
    let mut groups: Vec<GroupState> = vec![];
    let mut posdim = 0usize;
    let mut bad = 0usize;
    let mut tried = 0usize;
    let mut cert_failures = 0usize;
    let mut batch = 2usize;
    loop {
        let ps: Vec<u64> = (0..batch).map(|_| stream.next()).collect();
        tried += ps.len();
        let outcomes: Vec<PrimeOutcome> = ps
            .par_iter()
            .map(|&p| prime_charts(sys, p))
            .collect();
        for (p, out) in ps.into_iter().zip(outcomes) {
            match out {
                PrimeOutcome::BadPrime => bad += 1,
                PrimeOutcome::PositiveDim => posdim += 1,
                PrimeOutcome::Charts(cs) => {
                    let sig = cs.signature();
                    let gi = groups.iter().position(|g| g.sig == sig);
                    let gi = match gi {
                        Some(i) => i,
                        None => {
                            let layout = Layout::from_signature(&sig, sys.m);
                            groups.push(GroupState {
                                sig: sig.clone(),
                                layout,
                                primes: vec![],
                                crt: CrtAccum::new(),
                                last: None,
                            });
                            groups.len() - 1
                        }
                    };
                    let g = &mut groups[gi];
                    let mut vals = Vec::with_capacity(g.layout.num_slots());
                    g.layout.fill(&cs, &mut vals);
                    g.crt.push_prime(p, &vals);
                    g.primes.push(p);
                }
            }
        }
        let total_charts: usize = groups.iter().map(|g| g.primes.len()).sum();
        if posdim >= 6 && posdim > 3 * total_charts {
            return Err(Error::Degenerate(
                "system is positive-dimensional".into(),
            ));
        }
        if bad > 200 {
            return Err(Error::Degenerate(
                "modular reduction kept failing".into(),
            ));
        }
        if let Some(g) = groups.iter_mut().max_by_key(|g| g.primes.len()) {
            if g.primes.len() >= 3 {
                let candidate = reconstruct_all(&g.crt);
                if let Some(c) = candidate {
                    // the exact-division certificate is cheap, so try it on
                    // every successful reconstruction instead of waiting for
                    // two consecutive agreeing ones
                    let repeat = g.last.as_ref() == Some(&c);
                    let charts = build_charts(sys, &g.layout, &c)?;
                    let certified = charts.iter().all(|ch| certify_identity(sys, ch));
                    if certified {
                        let mut final_charts = Vec::with_capacity(charts.len());
                        for mut ch in charts {
                            let (sf, elim) =
                                certify_squarefree(&ch.e_int, &g.primes, &mut stream);
                            ch.squarefree = sf;
                            ch.elim = elim;
                            final_charts.push(ch);
                        }
                        return Ok(ChartSet {
                            m: sys.m,
                            dim: g.layout.dim,
                            charts: final_charts,
                            sys: sys.clone(),
                        });
                    }
                    if repeat {
                        cert_failures += 1;
                        if cert_failures >= 3 {
                            return Err(Error::Degenerate(
                                "chart certification failed on stable data".into(),
                            ));
                        }
                    }
                    g.last = Some(c);
                } else {
                    g.last = None;
                }
            }
            batch = (g.primes.len() / 2).max(2).min(16);
        }
        if tried > opts.max_primes {
            return Err(Error::BudgetExhausted(format!(
                "no stable chart reconstruction after {tried} primes"
            )));
        }
    }
}

impl ChartSet {
    /// First coordinate whose chart carries a parametrization.
    pub fn shape_center(&self) -> Option<usize> {
        self.charts.iter().position(|c| c.shape.is_some())
    }

    pub fn chart(&self, center: usize) -> &Chart {
        &self.charts[center]
    }

    /// Coordinate enclosures at a given enclosure of the center value.
    pub fn coords_at(&self, center: usize, beta: &Interval) -> Vec<Interval> {
        let shape = self.charts[center].shape.as_ref().expect("shape chart");
        (0..self.m)
            .map(|j| {
                if j == center {
                    beta.clone()
                } else {
                    let up = UniPoly::from_int_poly(&shape.v_num[j]);
                    let iv = up.eval_interval(beta);
                    iv.mul_scalar(&Rat::new(Int::one(), shape.v_den[j].clone()))
                }
            })
            .collect()
    }

    /// All real points of the variety seen through one shape chart, with
    /// coordinate enclosures of width at most 2^-tol_bits.
    pub fn real_points(&self, center: usize, tol_bits: u32) -> Result<Vec<ChartPoint>> {
        let chart = &self.charts[center];
        if chart.shape.is_none() {
            return Err(Error::InvalidArg("chart has no parametrization".into()));
        }
        if chart.elim.deg().unwrap_or(0) == 0 {
            return Ok(vec![]);
        }
        let f = UniPoly::from_int_poly(&chart.elim);
        let roots = sturm_isolate(&f, None)?;
        let target = width_bits(tol_bits);
        let mut out = Vec::with_capacity(roots.len());
        for iv in roots {
            let mut beta = iv;
            let mut coords;
            let mut rounds = 0;
            loop {
                coords = self.coords_at(center, &beta);
                if coords.iter().all(|c| c.width() <= target) {
                    break;
                }
                if rounds > 200 {
                    return Err(Error::Other(
                        "coordinate refinement did not converge".into(),
                    ));
                }
                let w = beta.width() * Rat::new(Int::one(), Int::from(16u8));
                beta = refine_root(&f, &beta, &w)?;
                rounds += 1;
            }
            out.push(ChartPoint {
                center,
                beta,
                coords,
            });
        }
        Ok(out)
    }

    /// Exact remainder of g(V(t)) modulo the monic minpoly, as a primitive
    /// integer polynomial whose roots among the roots of e are exactly
    /// where the value vanishes. None encodes the zero remainder.
    fn value_remainder(&self, center: usize, g: &[(u32, Rat)]) -> Result<Option<IntPoly>> {
        let chart = &self.charts[center];
        let shape = chart
            .shape
            .as_ref()
            .ok_or_else(|| Error::InvalidArg("chart has no parametrization".into()))?;
        let prodc = complement_denoms(shape, self.m);
        let mut prod: Vec<Option<IntPoly>> = vec![None; 1usize << self.m];
        prod[0] = Some(IntPoly::one());
        let h = cleared_value(g, shape, &prodc, &mut prod);
        let w = UniPoly::from_int_poly(&h).rem(&chart.e_monic);
        if w.is_zero() {
            return Ok(None);
        }
        let (w_int, _) = w.to_int_primitive();
        Ok(Some(w_int.primitive_positive()))
    }

    /// Exact sign of the multi-affine form g at a chart point: -1, 0, or 1.
    pub fn sign_at(&mut self, point: &ChartPoint, g: &[(u32, Rat)]) -> Result<i32> {
        let center = point.center;
        let chart = &self.charts[center];
        let f = UniPoly::from_int_poly(&chart.elim);
        let mut beta = point.beta.clone();
        for _ in 0..3 {
            let coords = self.coords_at(center, &beta);
            let iv = eval_masks_interval(g, &coords);
            if let Some(s) = iv.definite_sign() {
                return Ok(s);
            }
            let w = beta.width() * Rat::new(Int::one(), Int::from(16u8));
            beta = refine_root(&f, &beta, &w)?;
        }
        // interval arithmetic is stuck near zero: decide exactly
        let w_int = self.value_remainder(center, g)?;
        let chart = &self.charts[center];
        let w_int = match w_int {
            None => return Ok(0),
            Some(w) => w,
        };
        let vanishes = if certified_trivial_gcd(&chart.elim, &w_int) {
            false
        } else {
            let h = chart.elim.gcd(&w_int);
            if h.deg().unwrap_or(0) == 0 {
                false
            } else {
                let sc = SturmChain::new(&h)?;
                sc.count_open(beta.lo(), beta.hi()) > 0
            }
        };
        if vanishes {
            return Ok(0);
        }
        // certified nonzero: refinement must eventually resolve the sign
        let bits_e = chart.e_int.coeffs().iter().map(|c| c.bits()).max().unwrap_or(1);
        let bits_w = w_int.coeffs().iter().map(|c| c.bits()).max().unwrap_or(1);
        let de = chart.e_int.deg().unwrap_or(1) as u64;
        let dw = w_int.deg().unwrap_or(0) as u64;
        let cap_bits = de * (bits_w + 8) + dw * (bits_e + 8) + 128;
        let f = UniPoly::from_int_poly(&self.charts[center].elim);
        loop {
            let coords = self.coords_at(center, &beta);
            let iv = eval_masks_interval(g, &coords);
            if let Some(s) = iv.definite_sign() {
                return Ok(s);
            }
            if beta.width() < width_bits(cap_bits.min(u32::MAX as u64) as u32) {
                return Err(Error::Other(
                    "sign refinement exceeded its certified bound".into(),
                ));
            }
            let w = beta.width() * Rat::new(Int::one(), Int::from(16u8));
            beta = refine_root(&f, &beta, &w)?;
        }
    }

    /// Sign of x_j − v at a chart point for rational v, e.g. boundary tests
    /// against 0 and 1.
    pub fn coordinate_sign(&mut self, point: &ChartPoint, j: usize, v: &Rat) -> Result<i32> {
        let g = vec![(0u32, -v.clone()), (1u32 << j, Rat::one())];
        let masks: Vec<(u32, Rat)> = g.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        self.sign_at(point, &masks)
    }

    pub fn system(&self) -> &CompactSystem {
        &self.sys
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{anchor_coeffs, perturb, MultiAffine};
    use crate::mpoly::{eliminate_cascade, MPoly};
    use crate::rat::rat;

    fn full_system(c: &crate::game::CoeffVector) -> CompactSystem {
        let vars: Vec<usize> = (0..c.n()).collect();
        CompactSystem::from_multiaffine(&c.system().f, &vars)
    }

    #[test]
    fn reconstruct_small_rationals() {
        let primes = crate::primefield::crt_primes(3);
        let m: Int = primes.iter().map(|&p| Int::from(p)).product();
        for (n, d) in [(22i64, 7u64), (-5, 12), (0, 1), (1, 1), (355, 113)] {
            let v = Rat::new(Int::from(n), Int::from(d));
            // residue r = n * d^{-1} mod m via CRT per prime
            let mut crt = CrtAccum::new();
            for &p in &primes {
                let np = int_mod_u64(&Int::from(n), p);
                let dp = invmod(int_mod_u64(&Int::from(d), p), p);
                crt.push_prime(p, &[mulmod(np, dp, p)]);
            }
            assert_eq!(rat_reconstruct(&crt.residues[0], &m), Some(v));
        }
    }

    #[test]
    fn anchor_charts_exact() {
        let c = anchor_coeffs(3).unwrap();
        let cs = solve_charts(&full_system(&c), &RurOptions::default()).unwrap();
        assert_eq!(cs.dim, 1);
        for i in 0..3 {
            let ch = cs.chart(i);
            assert_eq!(ch.e_int, IntPoly::from_i64(&[-1, 2]));
            assert!(ch.squarefree);
        }
        let pts = cs.real_points(cs.shape_center().unwrap(), 40).unwrap();
        assert_eq!(pts.len(), 1);
        for coord in &pts[0].coords {
            assert!(coord.contains(&rat(1, 2)));
        }
    }

    #[test]
    fn linear_pair_charts() {
        // f0(x1) = x1 - 3, f1(x0) = 2 x0 - 1
        let mut f0 = MultiAffine::zero(2);
        f0.coeffs[0] = rat(-3, 1);
        f0.coeffs[0b10] = rat(1, 1);
        let mut f1 = MultiAffine::zero(2);
        f1.coeffs[0] = rat(-1, 1);
        f1.coeffs[0b01] = rat(2, 1);
        let sys = CompactSystem::from_multiaffine(&[f0, f1], &[0, 1]);
        let cs = solve_charts(&sys, &RurOptions::default()).unwrap();
        assert_eq!(cs.dim, 1);
        assert_eq!(cs.chart(0).e_int, IntPoly::from_i64(&[-1, 2]));
        assert_eq!(cs.chart(1).e_int, IntPoly::from_i64(&[-3, 1]));
        let pts = cs.real_points(0, 40).unwrap();
        assert_eq!(pts.len(), 1);
        assert!(pts[0].coords[0].contains(&rat(1, 2)));
        assert!(pts[0].coords[1].contains(&rat(3, 1)));
    }

    #[test]
    fn perturbed_n3_matches_resultant_cascade() {
        let c = perturb(&anchor_coeffs(3).unwrap(), 16, &rat(1, 4), 7).unwrap();
        let sys = full_system(&c);
        let cs = solve_charts(&sys, &RurOptions::default()).unwrap();
        assert_eq!(cs.dim, 2);
        // cross-check the x0 eliminant against the subresultant cascade
        let polys: Vec<MPoly> = c
            .system()
            .f
            .iter()
            .map(|f| MPoly::from_multiaffine(f).unwrap().0)
            .collect();
        let casc = eliminate_cascade(&polys, 0, &[1, 2]).unwrap();
        let elim = &cs.chart(0).elim;
        assert_eq!(elim.deg(), Some(2));
        // the cascade eliminant is a multiple of the chart eliminant
        let quo = UniPoly::from_int_poly(&casc).div_exact(&UniPoly::from_int_poly(elim));
        assert!(quo.is_some(), "chart eliminant must divide the cascade one");
        // chart points solve the system within their enclosures
        for pt in cs.real_points(cs.shape_center().unwrap(), 50).unwrap() {
            for eq in &sys.eqs {
                let iv = eval_masks_interval(eq, &pt.coords);
                assert!(iv.contains(&Rat::zero()));
            }
        }
    }

    #[test]
    fn sign_engine_detects_exact_zero_and_signs() {
        let c = perturb(&anchor_coeffs(3).unwrap(), 16, &rat(1, 4), 7).unwrap();
        let sys = full_system(&c);
        let mut cs = solve_charts(&sys, &RurOptions::default()).unwrap();
        let center = cs.shape_center().unwrap();
        let pts = cs.real_points(center, 40).unwrap();
        assert!(!pts.is_empty());
        let eq0 = cs.system().eqs[0].clone();
        for pt in &pts {
            // the system equations vanish identically at chart points
            assert_eq!(cs.sign_at(&pt, &eq0).unwrap(), 0);
            // coordinate signs agree with the certified enclosures
            for j in 0..3 {
                let s = cs.coordinate_sign(&pt, j, &rat(0, 1)).unwrap();
                if let Some(expect) = pt.coords[j].definite_sign() {
                    assert_eq!(s, expect);
                }
            }
        }
    }

    #[test]
    fn inconsistent_system_has_no_points() {
        let mut f = MultiAffine::zero(2);
        f.coeffs[0] = rat(1, 1);
        let mut g = MultiAffine::zero(2);
        g.coeffs[0b01] = rat(1, 1);
        let sys = CompactSystem::from_multiaffine(&[f, g], &[0, 1]);
        let cs = solve_charts(&sys, &RurOptions::default()).unwrap();
        assert_eq!(cs.dim, 0);
        assert!(cs.shape_center().is_none());
    }

    #[test]
    fn positive_dimensional_is_an_error() {
        let mut f = MultiAffine::zero(2);
        f.coeffs[0b10] = rat(1, 1);
        let sys = CompactSystem::from_multiaffine(&[f.clone(), f], &[0, 1]);
        match solve_charts(&sys, &RurOptions::default()) {
            Err(Error::Degenerate(_)) => {}
            other => panic!("expected degenerate, got {other:?}"),
        }
    }

    #[test]
    fn determinism_across_runs() {
        let c = perturb(&anchor_coeffs(3).unwrap(), 16, &rat(1, 4), 11).unwrap();
        let sys = full_system(&c);
        let a = solve_charts(&sys, &RurOptions::default()).unwrap();
        let b = solve_charts(&sys, &RurOptions::default()).unwrap();
        for i in 0..3 {
            assert_eq!(a.chart(i).e_int, b.chart(i).e_int);
        }
    }
}
