//! Zero-dimensional system solving mod p: Gröbner bases in degrevlex,
//! staircase extraction, and per-coordinate charts.
//!
//! A chart for coordinate i is the minimal polynomial e_i of x_i in the
//! quotient algebra together with, when x_i is a primitive element ("shape
//! position"), parametrizations x_j ≡ V_j(x_i) mod the ideal and the
//! quotients Q_k of f_k(V(t)) by e_i(t). Everything here is candidate
//! generation; exactness is restored downstream by reconstruction plus
//! certification.

use std::collections::BTreeMap;

use num::bigint::Sign;
use num::Zero;

use crate::primefield::{invmod, mulmod, submod};
use crate::primepoly::PrimePoly;
use crate::rat::{Int, Rat};

pub const MAX_GB_VARS: usize = 7;

/// Exponent vector packed 8 bits per variable.
pub type Mono = u64;

#[inline]
fn mono_exp(m: Mono, j: usize) -> u32 {
    ((m >> (8 * j)) & 0xff) as u32
}

#[inline]
fn mono_mul(a: Mono, b: Mono) -> Mono {
    debug_assert!((0..MAX_GB_VARS).all(|j| mono_exp(a, j) + mono_exp(b, j) < 256));
    a + b
}

#[inline]
fn mono_divides(a: Mono, b: Mono) -> bool {
    (0..MAX_GB_VARS).all(|j| mono_exp(a, j) <= mono_exp(b, j))
}

#[inline]
fn mono_quot(b: Mono, a: Mono) -> Mono {
    debug_assert!(mono_divides(a, b));
    b - a
}

fn mono_lcm(a: Mono, b: Mono) -> Mono {
    let mut out = 0u64;
    for j in 0..MAX_GB_VARS {
        out |= (mono_exp(a, j).max(mono_exp(b, j)) as u64) << (8 * j);
    }
    out
}

fn mono_deg(m: Mono) -> u32 {
    (0..MAX_GB_VARS).map(|j| mono_exp(m, j)).sum()
}

/// Degrevlex sort key: higher key = greater monomial. Total degree decides
/// first; ties go to the monomial with the smaller exponent in the last
/// variable, then the second to last, and so on.
fn drl_key(m: Mono, nv: usize) -> u64 {
    let mut key = (mono_deg(m) as u64) << 56;
    let mut shift = 48;
    for j in (1..nv).rev() {
        key |= ((255 - mono_exp(m, j)) as u64) << shift;
        shift -= 8;
    }
    key
}

#[derive(Debug, Clone, Copy)]
struct Term {
    key: u64,
    mono: Mono,
    c: u64,
}

/// Multivariate polynomial over F_p, terms sorted by descending drl key.
#[derive(Debug, Clone)]
struct ModPoly {
    nv: usize,
    t: Vec<Term>,
}

impl ModPoly {
    fn from_pairs(nv: usize, p: u64, pairs: Vec<(Mono, u64)>) -> ModPoly {
        let mut map: BTreeMap<u64, (Mono, u64)> = BTreeMap::new();
        for (m, c) in pairs {
            let c = c % p;
            if c == 0 {
                continue;
            }
            let key = drl_key(m, nv);
            let e = map.entry(key).or_insert((m, 0));
            e.1 = (e.1 + c) % p;
        }
        let t = map
            .into_iter()
            .rev()
            .filter(|(_, (_, c))| *c != 0)
            .map(|(key, (mono, c))| Term { key, mono, c })
            .collect();
        ModPoly { nv, t }
    }

    fn is_zero(&self) -> bool {
        self.t.is_empty()
    }

    fn lead(&self) -> &Term {
        &self.t[0]
    }

    fn monic(mut self, p: u64) -> ModPoly {
        if self.is_zero() || self.t[0].c == 1 {
            return self;
        }
        let inv = invmod(self.t[0].c, p);
        for t in &mut self.t {
            t.c = mulmod(t.c, inv, p);
        }
        self
    }
}

/// a − c·x^shift·g as a merge of descending term lists (g is monic).
fn sub_scaled_shifted(a: &[Term], g: &[Term], c: u64, shift: Mono, nv: usize, p: u64) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + g.len());
    let mut i = 0;
    let mut j = 0;
    loop {
        let gt = if j < g.len() {
            let mono = mono_mul(g[j].mono, shift);
            Some(Term {
                key: drl_key(mono, nv),
                mono,
                c: mulmod(g[j].c, c, p),
            })
        } else {
            None
        };
        match (a.get(i), gt) {
            (Some(&at), Some(bt)) => {
                if at.key > bt.key {
                    out.push(at);
                    i += 1;
                } else if at.key < bt.key {
                    out.push(Term {
                        c: (p - bt.c) % p,
                        ..bt
                    });
                    j += 1;
                } else {
                    let c = submod(at.c, bt.c, p);
                    if c != 0 {
                        out.push(Term { c, ..at });
                    }
                    i += 1;
                    j += 1;
                }
            }
            (Some(&at), None) => {
                out.push(at);
                i += 1;
            }
            (None, Some(bt)) => {
                out.push(Term {
                    c: (p - bt.c) % p,
                    ..bt
                });
                j += 1;
            }
            (None, None) => break,
        }
    }
    out
}

/// Full normal form of f against a monic basis.
fn normal_form(f: ModPoly, basis: &[ModPoly], p: u64) -> ModPoly {
    let nv = f.nv;
    let mut work = f.t;
    let mut done: Vec<Term> = vec![];
    'outer: while let Some(&head) = work.first() {
        for g in basis {
            if mono_divides(g.lead().mono, head.mono) {
                let shift = mono_quot(head.mono, g.lead().mono);
                work = sub_scaled_shifted(&work, &g.t, head.c, shift, nv, p);
                continue 'outer;
            }
        }
        done.push(head);
        work.remove(0);
    }
    ModPoly { nv, t: done }
}

fn spoly(f: &ModPoly, g: &ModPoly, p: u64) -> ModPoly {
    let nv = f.nv;
    let lcm = mono_lcm(f.lead().mono, g.lead().mono);
    let sf = mono_quot(lcm, f.lead().mono);
    let sg = mono_quot(lcm, g.lead().mono);
    let shifted: Vec<Term> = f
        .t
        .iter()
        .map(|t| {
            let mono = mono_mul(t.mono, sf);
            Term {
                key: drl_key(mono, nv),
                mono,
                c: t.c,
            }
        })
        .collect();
    ModPoly {
        nv,
        t: sub_scaled_shifted(&shifted, &g.t, 1, sg, nv, p),
    }
}

fn add_pairs(pairs: &mut BTreeMap<(u64, usize, usize), ()>, basis: &[ModPoly], k: usize, nv: usize) {
    for i in 0..k {
        let lcm = mono_lcm(basis[i].lead().mono, basis[k].lead().mono);
        if lcm == mono_mul(basis[i].lead().mono, basis[k].lead().mono) {
            continue; // coprime leading monomials: s-poly reduces to zero
        }
        pairs.insert((drl_key(lcm, nv), i, k), ());
    }
}

/// Buchberger with the normal pair strategy and the product criterion,
/// returning the reduced Gröbner basis sorted by ascending leading key.
fn groebner(gens: Vec<ModPoly>, p: u64) -> Vec<ModPoly> {
    let mut basis: Vec<ModPoly> = vec![];
    for g in gens {
        if !g.is_zero() {
            basis.push(g.monic(p));
        }
    }
    let nv = match basis.first() {
        Some(b) => b.nv,
        None => return vec![],
    };
    let mut pairs: BTreeMap<(u64, usize, usize), ()> = BTreeMap::new();
    for k in 0..basis.len() {
        add_pairs(&mut pairs, &basis, k, nv);
    }
    loop {
        let key = match pairs.keys().next() {
            Some(&k) => k,
            None => break,
        };
        pairs.remove(&key);
        let (_, i, j) = key;
        let s = spoly(&basis[i], &basis[j], p);
        let r = normal_form(s, &basis, p);
        if !r.is_zero() {
            basis.push(r.monic(p));
            add_pairs(&mut pairs, &basis, basis.len() - 1, nv);
        }
    }
    // minimal basis: drop any element whose lead is divisible by another's
    let mut keep = vec![true; basis.len()];
    for a in 0..basis.len() {
        if !keep[a] {
            continue;
        }
        for b in 0..basis.len() {
            if a == b || !keep[b] {
                continue;
            }
            if mono_divides(basis[b].lead().mono, basis[a].lead().mono) {
                let equal_leads = basis[b].lead().mono == basis[a].lead().mono;
                if !(equal_leads && b > a) {
                    keep[a] = false;
                    break;
                }
            }
        }
    }
    let minimal: Vec<ModPoly> = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(g, k)| if k { Some(g) } else { None })
        .collect();
    // tail-reduce for a canonical reduced basis
    let mut reduced: Vec<ModPoly> = vec![];
    for i in 0..minimal.len() {
        let others: Vec<ModPoly> = minimal
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let r = normal_form(minimal[i].clone(), &others, p).monic(p);
        if !r.is_zero() {
            reduced.push(r);
        }
    }
    reduced.sort_by_key(|g| g.lead().key);
    reduced
}

enum Staircase {
    Finite(Vec<Mono>),
    PositiveDim,
}

fn staircase(basis: &[ModPoly], nv: usize) -> Staircase {
    if basis.iter().any(|g| g.lead().mono == 0) {
        return Staircase::Finite(vec![]); // 1 is in the ideal: no solutions
    }
    let mut cap = vec![0u32; nv];
    for (j, cj) in cap.iter_mut().enumerate() {
        let mut found: Option<u32> = None;
        for g in basis {
            let m = g.lead().mono;
            if mono_exp(m, j) > 0 && (0..nv).all(|k| k == j || mono_exp(m, k) == 0) {
                let e = mono_exp(m, j);
                found = Some(found.map_or(e, |f| f.min(e)));
            }
        }
        match found {
            Some(e) => *cj = e,
            None => return Staircase::PositiveDim,
        }
    }
    let mut out = vec![];
    let mut stack = vec![(0u64, 0usize)];
    while let Some((m, j)) = stack.pop() {
        if j == nv {
            if !basis.iter().any(|g| mono_divides(g.lead().mono, m)) {
                out.push(m);
            }
            continue;
        }
        for e in 0..cap[j] {
            stack.push((m | ((e as u64) << (8 * j)), j + 1));
        }
    }
    out.sort_by_key(|&m| drl_key(m, nv));
    Staircase::Finite(out)
}

/// Multi-affine equations over a compact variable set 0..m−1, rational
/// coefficients indexed by variable bitmask.
#[derive(Debug, Clone)]
pub struct CompactSystem {
    pub m: usize,
    pub eqs: Vec<Vec<(u32, Rat)>>,
}

impl CompactSystem {
    /// Restricts `polys` to the given global variables (each poly's support
    /// must lie inside `vars`), renumbering into 0..m−1.
    pub fn from_multiaffine(polys: &[crate::game::MultiAffine], vars: &[usize]) -> CompactSystem {
        let m = vars.len();
        let mut pos = BTreeMap::new();
        for (k, &v) in vars.iter().enumerate() {
            pos.insert(v, k);
        }
        let eqs = polys
            .iter()
            .map(|f| {
                let mut eq = vec![];
                for (mask, c) in f.coeffs.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let mut cm = 0u32;
                    let mut mm = mask;
                    while mm != 0 {
                        let j = mm.trailing_zeros() as usize;
                        let local = *pos.get(&j).expect("support outside variable set");
                        cm |= 1u32 << local;
                        mm &= mm - 1;
                    }
                    eq.push((cm, c.clone()));
                }
                eq.sort_by_key(|&(m, _)| m);
                eq
            })
            .collect();
        CompactSystem { m, eqs }
    }
}

fn rat_mod(v: &Rat, p: u64) -> Option<u64> {
    let red = |i: &Int| -> u64 {
        let m = (i % Int::from(p)).to_u64_digits();
        let r = m.1.first().copied().unwrap_or(0);
        match m.0 {
            Sign::Minus => (p - r) % p,
            _ => r,
        }
    };
    let den = red(v.denom());
    if den == 0 {
        return None;
    }
    let num = red(v.numer());
    if num == 0 && !v.is_zero() {
        return None; // numerator vanished mod p: treat as a bad prime
    }
    Some(mulmod(num, invmod(den, p), p))
}

fn mono_from_mask(mask: u32) -> Mono {
    let mut m = 0u64;
    let mut mm = mask;
    while mm != 0 {
        let j = mm.trailing_zeros() as usize;
        m |= 1u64 << (8 * j);
        mm &= mm - 1;
    }
    m
}

/// Per-prime chart data for one system.
#[derive(Debug, Clone)]
pub struct PrimeChartSet {
    pub p: u64,
    pub dim: usize,
    /// monic minimal polynomial of each coordinate in the quotient
    pub minpoly: Vec<PrimePoly>,
    /// when coordinate i is primitive: V_j(t) for every j (V_i = t)
    pub params: Vec<Option<Vec<PrimePoly>>>,
}

impl PrimeChartSet {
    /// Structural fingerprint used to group primes with consistent outcomes.
    pub fn signature(&self) -> Vec<usize> {
        let mut s = vec![self.dim];
        for mp in &self.minpoly {
            s.push(mp.deg().unwrap_or(0));
        }
        for q in &self.params {
            s.push(usize::from(q.is_some()));
        }
        s
    }
}

#[derive(Debug, Clone)]
pub enum PrimeOutcome {
    Charts(PrimeChartSet),
    BadPrime,
    PositiveDim,
}

struct Echelon {
    p: u64,
    rows: Vec<(Vec<u64>, Vec<u64>)>, // (reduced vector, combination over offered vectors)
    pivots: Vec<usize>,
}

impl Echelon {
    fn new(p: u64) -> Echelon {
        Echelon {
            p,
            rows: vec![],
            pivots: vec![],
        }
    }

    /// Reduces v against the rows. A dependency returns the combination (its
    /// last entry is 1 for v itself); otherwise the row is inserted.
    fn offer(&mut self, v: &[u64], tag: usize) -> Option<Vec<u64>> {
        let p = self.p;
        let mut w = v.to_vec();
        let mut combo = vec![0u64; tag + 1];
        combo[tag] = 1;
        for (r, &piv) in self.rows.iter().zip(&self.pivots) {
            if w[piv] != 0 {
                let c = w[piv]; // rows are pivot-normalized to 1
                for (wk, rk) in w.iter_mut().zip(&r.0) {
                    *wk = submod(*wk, mulmod(c, *rk, p), p);
                }
                for (ck, rk) in combo.iter_mut().zip(&r.1) {
                    *ck = submod(*ck, mulmod(c, *rk, p), p);
                }
            }
        }
        match w.iter().position(|&x| x != 0) {
            None => Some(combo),
            Some(piv) => {
                let inv = invmod(w[piv], p);
                for x in &mut w {
                    *x = mulmod(*x, inv, p);
                }
                for x in &mut combo {
                    *x = mulmod(*x, inv, p);
                }
                self.rows.push((w, combo));
                self.pivots.push(piv);
                None
            }
        }
    }
}

/// Computes the chart set for one prime. The Gröbner basis is computed once
/// and shared by all m coordinate charts.
pub fn prime_charts(sys: &CompactSystem, p: u64) -> PrimeOutcome {
    let nv = sys.m;
    assert!(nv >= 1 && nv <= MAX_GB_VARS);
    let mut gens = vec![];
    for eq in &sys.eqs {
        let mut pairs = vec![];
        for (mask, c) in eq {
            match rat_mod(c, p) {
                None => return PrimeOutcome::BadPrime,
                Some(v) => pairs.push((mono_from_mask(*mask), v)),
            }
        }
        gens.push(ModPoly::from_pairs(nv, p, pairs));
    }
    let basis = groebner(gens, p);
    if basis.is_empty() {
        return PrimeOutcome::PositiveDim; // zero system: everything free
    }
    let stair = match staircase(&basis, nv) {
        Staircase::PositiveDim => return PrimeOutcome::PositiveDim,
        Staircase::Finite(s) => s,
    };
    let dim = stair.len();
    if dim == 0 {
        return PrimeOutcome::Charts(PrimeChartSet {
            p,
            dim,
            minpoly: vec![PrimePoly::new(p, vec![1]); nv],
            params: vec![None; nv],
        });
    }
    let index: BTreeMap<Mono, usize> = stair.iter().enumerate().map(|(k, &m)| (m, k)).collect();
    debug_assert_eq!(index[&0], 0, "staircase must start at the unit monomial");

    // multiplication matrices, column-major over the staircase basis
    let mut mats: Vec<Vec<Vec<u64>>> = Vec::with_capacity(nv);
    for j in 0..nv {
        let xj = 1u64 << (8 * j);
        let mut cols = Vec::with_capacity(dim);
        for &b in &stair {
            let m = mono_mul(b, xj);
            let mut col = vec![0u64; dim];
            if let Some(&k) = index.get(&m) {
                col[k] = 1;
            } else {
                let one = ModPoly::from_pairs(nv, p, vec![(m, 1)]);
                let nf = normal_form(one, &basis, p);
                for t in nf.t {
                    col[index[&t.mono]] = t.c;
                }
            }
            cols.push(col);
        }
        mats.push(cols);
    }
    let apply = |j: usize, v: &[u64]| -> Vec<u64> {
        let mut out = vec![0u64; dim];
        for (k, &vk) in v.iter().enumerate() {
            if vk != 0 {
                for (o, &ck) in out.iter_mut().zip(&mats[j][k]) {
                    *o = (*o + mulmod(vk, ck, p)) % p;
                }
            }
        }
        out
    };

    let mut minpoly = Vec::with_capacity(nv);
    let mut params = Vec::with_capacity(nv);
    for i in 0..nv {
        let mut ech = Echelon::new(p);
        let mut v = vec![0u64; dim];
        v[0] = 1; // coordinates of the monomial 1
        let mut krylov: Vec<Vec<u64>> = vec![];
        let mp;
        let mut k = 0;
        loop {
            match ech.offer(&v, k) {
                Some(combo) => {
                    debug_assert_eq!(*combo.last().unwrap(), 1);
                    mp = PrimePoly::new(p, combo);
                    break;
                }
                None => {
                    krylov.push(v.clone());
                    v = apply(i, &v);
                    k += 1;
                }
            }
        }
        let d = mp.deg().unwrap();
        minpoly.push(mp.clone());
        if d != dim {
            params.push(None);
            continue;
        }
        // Shape position: solve Krylov · w = NF(x_j) for every j at once.
        let cols = dim + nv;
        let mut aug: Vec<Vec<u64>> = (0..dim)
            .map(|r| {
                let mut row: Vec<u64> = (0..dim).map(|c| krylov[c][r]).collect();
                for j in 0..nv {
                    row.push(mats[j][0][r]); // NF(x_j · 1)
                }
                row
            })
            .collect();
        let mut ok = true;
        for c in 0..dim {
            let piv = match (c..dim).find(|&r| aug[r][c] != 0) {
                Some(r) => r,
                None => {
                    ok = false;
                    break;
                }
            };
            aug.swap(c, piv);
            let inv = invmod(aug[c][c], p);
            for x in aug[c][c..cols].iter_mut() {
                *x = mulmod(*x, inv, p);
            }
            for r in 0..dim {
                if r != c && aug[r][c] != 0 {
                    let f = aug[r][c];
                    for cc in c..cols {
                        let sub = mulmod(f, aug[c][cc], p);
                        aug[r][cc] = submod(aug[r][cc], sub, p);
                    }
                }
            }
        }
        if !ok {
            params.push(None);
            continue;
        }
        let vpolys: Vec<PrimePoly> = (0..nv)
            .map(|j| {
                if j == i {
                    PrimePoly::x(p)
                } else {
                    PrimePoly::new(p, (0..dim).map(|r| aug[r][dim + j]).collect())
                }
            })
            .collect();
        params.push(Some(vpolys));
    }
    PrimeOutcome::Charts(PrimeChartSet {
        p,
        dim,
        minpoly,
        params,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{anchor_coeffs, perturb, MultiAffine};
    use crate::rat::rat;

    fn compact(polys: Vec<MultiAffine>, vars: &[usize]) -> CompactSystem {
        CompactSystem::from_multiaffine(&polys, vars)
    }

    #[test]
    fn drl_order_on_two_vars() {
        // x0^2 > x0 x1 > x1^2 > x0 > x1 > 1
        let x0 = 1u64;
        let x1 = 1u64 << 8;
        let seq = [
            mono_mul(x0, x0),
            mono_mul(x0, x1),
            mono_mul(x1, x1),
            x0,
            x1,
            0,
        ];
        for w in seq.windows(2) {
            assert!(drl_key(w[0], 2) > drl_key(w[1], 2));
        }
    }

    #[test]
    fn anchor_chart_mod_p() {
        let p = 10007u64;
        let c = anchor_coeffs(3).unwrap();
        let sys = compact(c.system().f, &[0, 1, 2]);
        match prime_charts(&sys, p) {
            PrimeOutcome::Charts(cs) => {
                assert_eq!(cs.dim, 1);
                for i in 0..3 {
                    let mp = &cs.minpoly[i];
                    assert_eq!(mp.deg(), Some(1));
                    // the single root must be 1/2 mod p
                    let half = invmod(2, p);
                    assert_eq!(submod(0, mp.coeff(0), p), half);
                }
            }
            _ => panic!("anchor should be zero-dimensional"),
        }
    }

    #[test]
    fn perturbed_n3_dim_two_shape_position() {
        let c = perturb(&anchor_coeffs(3).unwrap(), 16, &rat(1, 4), 7).unwrap();
        let sys = compact(c.system().f, &[0, 1, 2]);
        let p = 1_000_003u64;
        match prime_charts(&sys, p) {
            PrimeOutcome::Charts(cs) => {
                assert_eq!(cs.dim, 2);
                for i in 0..3 {
                    assert_eq!(cs.minpoly[i].deg(), Some(2));
                    let vs = cs.params[i].as_ref().expect("shape position expected");
                    assert_eq!(vs[i], PrimePoly::x(p));
                    // recheck f_k(V(t)) ≡ 0 mod e_i(t) from scratch
                    for eq in &sys.eqs {
                        let mut tval = PrimePoly::zero(p);
                        for (mask, c) in eq {
                            let mut prod =
                                PrimePoly::new(p, vec![rat_mod(c, p).unwrap()]);
                            let mut mm = *mask;
                            while mm != 0 {
                                let j = mm.trailing_zeros() as usize;
                                prod = prod.mul(&vs[j]);
                                mm &= mm - 1;
                            }
                            tval = tval.add(&prod);
                        }
                        let (_, r) = tval.divmod(&cs.minpoly[i]);
                        assert!(r.is_zero());
                    }
                }
            }
            _ => panic!("expected charts"),
        }
    }

    #[test]
    fn inconsistent_system_dim_zero() {
        let mut f = MultiAffine::zero(2);
        f.coeffs[0] = rat(1, 1);
        let mut g = MultiAffine::zero(2);
        g.coeffs[0b01] = rat(1, 1);
        let sys = compact(vec![f, g], &[0, 1]);
        match prime_charts(&sys, 101) {
            PrimeOutcome::Charts(cs) => {
                assert_eq!(cs.dim, 0);
                assert_eq!(cs.minpoly[0].deg(), Some(0));
            }
            _ => panic!("expected an empty chart set"),
        }
    }

    #[test]
    fn underdetermined_system_positive_dim() {
        // two copies of x1 as the equations of a 2-var system: x0 never cut
        let mut f = MultiAffine::zero(2);
        f.coeffs[0b10] = rat(1, 1);
        let sys = compact(vec![f.clone(), f], &[0, 1]);
        assert!(matches!(prime_charts(&sys, 101), PrimeOutcome::PositiveDim));
    }

    #[test]
    fn bad_prime_on_denominator() {
        let mut f = MultiAffine::zero(2);
        f.coeffs[0] = rat(1, 101);
        f.coeffs[0b10] = rat(1, 1);
        let mut g = MultiAffine::zero(2);
        g.coeffs[0b01] = rat(1, 1);
        let sys = compact(vec![f, g], &[0, 1]);
        assert!(matches!(prime_charts(&sys, 101), PrimeOutcome::BadPrime));
    }

    #[test]
    fn linear_pair_chart_known_roots() {
        // f0(x1) = x1 - 3, f1(x0) = 2 x0 - 1: dim 1, x0 = 1/2, x1 = 3
        let mut f0 = MultiAffine::zero(2);
        f0.coeffs[0] = rat(-3, 1);
        f0.coeffs[0b10] = rat(1, 1);
        let mut f1 = MultiAffine::zero(2);
        f1.coeffs[0] = rat(-1, 1);
        f1.coeffs[0b01] = rat(2, 1);
        let sys = compact(vec![f0, f1], &[0, 1]);
        let p = 10007u64;
        match prime_charts(&sys, p) {
            PrimeOutcome::Charts(cs) => {
                assert_eq!(cs.dim, 1);
                assert_eq!(submod(0, cs.minpoly[0].coeff(0), p), invmod(2, p));
                assert_eq!(submod(0, cs.minpoly[1].coeff(0), p), 3);
                let v0 = cs.params[0].as_ref().unwrap();
                assert_eq!(v0[1], PrimePoly::new(p, vec![3]));
            }
            _ => panic!("expected charts"),
        }
    }
}
