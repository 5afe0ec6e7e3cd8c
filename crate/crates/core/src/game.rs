//! Game model: coefficient vectors c = (c_{i,s}), multi-affine advantage
//! polynomials, payoff tensors, and the anchor/shift/perturb constructors.
//!
//! Players are 0-based internally; subsets of players are bitmasks. The
//! advantage polynomial of player i never mentions x_i, so its legal subset
//! masks have bit i clear and are stored compressed into 2^(n-1) slots.

use num::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

use crate::interval::Interval;
use crate::rat::{int, lcm, rat_int, Int, Rat};
use crate::{Error, Result};

/// Drops bit `i` from a mask over n players, closing the gap.
pub fn compress_mask(i: usize, mask: u32) -> u32 {
    debug_assert!(mask & (1 << i) == 0);
    (mask & ((1 << i) - 1)) | ((mask >> (i + 1)) << i)
}

/// Inverse of `compress_mask`.
pub fn decompress_mask(i: usize, cmask: u32) -> u32 {
    (cmask & ((1 << i) - 1)) | ((cmask >> i) << (i + 1))
}

/// The coefficient vector c with one rational per legal (player, subset)
/// pair; N = n·2^(n-1) entries total.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffVector {
    n: usize,
    c: Vec<Rat>,
}

impl CoeffVector {
    pub fn zero(n: usize) -> Result<CoeffVector> {
        if !(2..=16).contains(&n) {
            return Err(Error::InvalidArg(format!("player count {n} out of range")));
        }
        Ok(CoeffVector {
            n,
            c: vec![Rat::zero(); n << (n - 1)],
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_entries(&self) -> usize {
        self.c.len()
    }

    fn idx(&self, i: usize, mask: u32) -> usize {
        debug_assert!(i < self.n && mask & (1 << i) == 0);
        (i << (self.n - 1)) | compress_mask(i, mask) as usize
    }

    /// Entry c_{i,s} with s given as a full player bitmask (bit i clear).
    pub fn get(&self, i: usize, mask: u32) -> &Rat {
        &self.c[self.idx(i, mask)]
    }

    pub fn set(&mut self, i: usize, mask: u32, v: Rat) {
        let k = self.idx(i, mask);
        self.c[k] = v;
    }

    /// Iterates (player, full subset mask, value) in canonical order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, u32, &Rat)> {
        let n = self.n;
        self.c.iter().enumerate().map(move |(k, v)| {
            let i = k >> (n - 1);
            let cmask = (k & ((1 << (n - 1)) - 1)) as u32;
            (i, decompress_mask(i, cmask), v)
        })
    }

    pub fn full_support(&self) -> bool {
        self.c.iter().all(|v| !v.is_zero())
    }

    /// Entries equal to zero, as (player, full mask) pairs.
    pub fn zero_entries(&self) -> Vec<(usize, u32)> {
        self.entries()
            .filter(|(_, _, v)| v.is_zero())
            .map(|(i, m, _)| (i, m))
            .collect()
    }

    pub fn player_poly(&self, i: usize) -> MultiAffine {
        let mut coeffs = vec![Rat::zero(); 1 << self.n];
        for cm in 0..(1u32 << (self.n - 1)) {
            let mask = decompress_mask(i, cm);
            coeffs[mask as usize] = self.c[(i << (self.n - 1)) | cm as usize].clone();
        }
        MultiAffine { n: self.n, coeffs }
    }

    pub fn system(&self) -> System {
        System {
            n: self.n,
            f: (0..self.n).map(|i| self.player_poly(i)).collect(),
        }
    }
}

/// A polynomial of degree ≤ 1 in each variable, stored densely over all
/// 2^n subset masks (coefficient of ∏_{j∈mask} x_j at index mask).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiAffine {
    pub n: usize,
    pub coeffs: Vec<Rat>,
}

impl MultiAffine {
    pub fn zero(n: usize) -> MultiAffine {
        MultiAffine {
            n,
            coeffs: vec![Rat::zero(); 1 << n],
        }
    }

    pub fn constant(n: usize, v: Rat) -> MultiAffine {
        let mut p = MultiAffine::zero(n);
        p.coeffs[0] = v;
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Union of the masks with nonzero coefficient.
    pub fn support_vars(&self) -> u32 {
        let mut m = 0;
        for (mask, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                m |= mask as u32;
            }
        }
        m
    }

    pub fn coeff(&self, mask: u32) -> &Rat {
        &self.coeffs[mask as usize]
    }

    /// True when no monomial has two or more variables.
    pub fn is_affine(&self) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(m, c)| c.is_zero() || m.count_ones() <= 1)
    }

    pub fn eval(&self, x: &[Rat]) -> Rat {
        let mut acc = Rat::zero();
        for (mask, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut term = c.clone();
            let mut m = mask;
            while m != 0 {
                let j = m.trailing_zeros() as usize;
                term *= &x[j];
                m &= m - 1;
            }
            acc += term;
        }
        acc
    }

    /// Value at a pure profile: sum of coefficients over subsets of mask.
    pub fn eval_mask(&self, mask: u32) -> Rat {
        let mut acc = Rat::zero();
        let mut s = mask;
        loop {
            acc += &self.coeffs[s as usize];
            if s == 0 {
                break;
            }
            s = (s - 1) & mask;
        }
        acc
    }

    /// Exact range over a box. A multi-affine function attains its extrema
    /// at box vertices, so enumerating vertices of the non-point support
    /// variables gives the sharp range.
    pub fn range_box(&self, b: &[Interval]) -> Interval {
        let sup = self.support_vars();
        let mut free = vec![];
        for j in 0..self.n {
            if sup & (1 << j) != 0 && !b[j].is_point() {
                free.push(j);
            }
        }
        let mut x: Vec<Rat> = b.iter().map(|iv| iv.lo().clone()).collect();
        let mut out: Option<Interval> = None;
        for choice in 0..(1u32 << free.len()) {
            for (k, &j) in free.iter().enumerate() {
                x[j] = if choice & (1 << k) != 0 {
                    b[j].hi().clone()
                } else {
                    b[j].lo().clone()
                };
            }
            let v = self.eval(&x);
            out = Some(match out {
                None => Interval::point(v),
                Some(iv) => iv.hull(&Interval::point(v)),
            });
        }
        out.unwrap()
    }

    /// Substitutes x_var := v, producing a polynomial not involving var.
    pub fn substitute(&self, var: usize, v: &Rat) -> MultiAffine {
        let bit = 1usize << var;
        let mut out = MultiAffine::zero(self.n);
        for (mask, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if mask & bit == 0 {
                out.coeffs[mask] += c;
            } else {
                out.coeffs[mask & !bit] += c * v;
            }
        }
        out
    }

    /// ∂/∂x_var, again multi-affine.
    pub fn derivative(&self, var: usize) -> MultiAffine {
        let bit = 1usize << var;
        let mut out = MultiAffine::zero(self.n);
        for (mask, c) in self.coeffs.iter().enumerate() {
            if mask & bit != 0 && !c.is_zero() {
                out.coeffs[mask & !bit] = c.clone();
            }
        }
        out
    }
}

/// The advantage system f_1..f_n; f[i] never involves x_i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct System {
    pub n: usize,
    pub f: Vec<MultiAffine>,
}

impl System {
    /// All equations are affine (no genuine products); true for the anchor
    /// and for every n = 2 game.
    pub fn is_linear(&self) -> bool {
        self.f.iter().all(|p| p.is_affine())
    }
}

/// Integer payoff tensor; cell (player i, pure profile a) at u[i·2^n + a].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PayoffTensor {
    pub n: usize,
    pub m: Int,
    pub u: Vec<Int>,
}

impl PayoffTensor {
    pub fn get(&self, i: usize, profile: u32) -> &Int {
        &self.u[(i << self.n) | profile as usize]
    }
}

/// Anchor coefficients: f_i = 2x_{i+1} − 1 for i < n−1 and f_{n−1} = 1 − 2x_0
/// (0-based; the cyclic successor pattern).
pub fn anchor_coeffs(n: usize) -> Result<CoeffVector> {
    let mut c = CoeffVector::zero(n)?;
    for i in 0..n - 1 {
        c.set(i, 0, rat_int(-1));
        c.set(i, 1 << (i + 1), rat_int(2));
    }
    c.set(n - 1, 0, rat_int(1));
    c.set(n - 1, 1, rat_int(-2));
    Ok(c)
}

/// ψ_λ: expands every f_i(x + λ) back into multi-affine form, so that
/// f^{ψ_λ(c)}(x) = f^c(x + λ) identically.
pub fn shift_coeffs(c: &CoeffVector, lambda: &[Rat]) -> Result<CoeffVector> {
    if lambda.len() != c.n {
        return Err(Error::InvalidArg("shift vector length != n".into()));
    }
    let n = c.n;
    let mut out = c.clone();
    // One shear per variable: c[s] += λ_j · c[s ∪ {j}] for each s without j.
    for j in 0..n {
        if lambda[j].is_zero() {
            continue;
        }
        for i in 0..n {
            if i == j {
                continue;
            }
            for cm in 0..(1u32 << (n - 1)) {
                let mask = decompress_mask(i, cm);
                if mask & (1 << j) == 0 {
                    let upper = c.idx(i, mask | (1 << j));
                    let add = &out.c[upper] * &lambda[j];
                    let lower = c.idx(i, mask);
                    out.c[lower] += add;
                }
            }
        }
    }
    Ok(out)
}

/// Relabels players by `perm` (new index = perm[old index]).
pub fn permute_players(c: &CoeffVector, perm: &[usize]) -> Result<CoeffVector> {
    let n = c.n;
    if perm.len() != n {
        return Err(Error::InvalidArg("permutation length != n".into()));
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || seen[p] {
            return Err(Error::InvalidArg("not a permutation".into()));
        }
        seen[p] = true;
    }
    let mut out = CoeffVector::zero(n)?;
    for (i, mask, v) in c.entries() {
        let mut pmask = 0u32;
        for j in 0..n {
            if mask & (1 << j) != 0 {
                pmask |= 1 << perm[j];
            }
        }
        out.set(perm[i], pmask, v.clone());
    }
    Ok(out)
}

/// Rational perturbation of every entry: c_{i,s} + δ_{i,s} with δ nonzero,
/// |δ| ≤ magnitude, denominator ≤ denom_bound, deterministic in seed. The
/// output always has full support (entries that would cancel are resampled).
pub fn perturb(
    c0: &CoeffVector,
    denom_bound: u64,
    magnitude: &Rat,
    seed: u64,
) -> Result<CoeffVector> {
    if denom_bound < 2 {
        return Err(Error::InvalidArg("denom_bound must be ≥ 2".into()));
    }
    if !magnitude.is_positive() {
        return Err(Error::InvalidArg("magnitude must be positive".into()));
    }
    let amax_at = |q: u64| -> i64 {
        let m = magnitude * rat_int(q as i64);
        (m.floor().numer()).try_into().unwrap_or(i64::MAX)
    };
    if (2..=denom_bound).all(|q| amax_at(q) == 0) {
        return Err(Error::InvalidArg(
            "magnitude too small for denom_bound (no representable nonzero step)".into(),
        ));
    }
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut out = c0.clone();
    for k in 0..out.c.len() {
        loop {
            let q = rng.gen_range(2..=denom_bound);
            let amax = amax_at(q);
            if amax == 0 {
                continue;
            }
            let a = rng.gen_range(-amax..=amax);
            if a == 0 {
                continue;
            }
            let delta = Rat::new(int(a), int(q as i64));
            let v = &c0.c[k] + &delta;
            if !v.is_zero() {
                out.c[k] = v;
                break;
            }
        }
    }
    Ok(out)
}

/// Clears denominators: M = lcm of all denominators of f_i at pure
/// profiles; u_i(a) = M·f_i(a_{-i}) when a_i = 1, and 0 when a_i = 0.
pub fn payoffs_from_advantage(sys: &System) -> PayoffTensor {
    let n = sys.n;
    let mut m = Int::one();
    let mut vals: Vec<Rat> = Vec::with_capacity(n << n);
    for i in 0..n {
        for a in 0..(1u32 << n) {
            let v = sys.f[i].eval_mask(a & !(1 << i));
            m = lcm(&m, v.denom());
            vals.push(v);
        }
    }
    let mut u = Vec::with_capacity(n << n);
    for i in 0..n {
        for a in 0..(1u32 << n) {
            let k = (i << n) | a as usize;
            if a & (1 << i) != 0 {
                let scaled = &vals[k] * Rat::from_integer(m.clone());
                debug_assert!(scaled.is_integer());
                u.push(scaled.to_integer());
            } else {
                u.push(Int::zero());
            }
        }
    }
    PayoffTensor { n, m, u }
}

/// Möbius inversion of the pure-profile payoff differences back to
/// coefficient form: c_{i,s} = Σ_{v⊆s} (−1)^{|s∖v|} d_i(v).
pub fn advantage_from_payoffs(t: &PayoffTensor) -> Result<CoeffVector> {
    let n = t.n;
    let mut c = CoeffVector::zero(n)?;
    for i in 0..n {
        let bit = 1u32 << i;
        for cm in 0..(1u32 << (n - 1)) {
            let s = decompress_mask(i, cm);
            let mut acc = Int::zero();
            let mut v = s;
            loop {
                let d = t.get(i, v | bit) - t.get(i, v & !bit);
                if (s & !v).count_ones() % 2 == 0 {
                    acc += d;
                } else {
                    acc -= d;
                }
                if v == 0 {
                    break;
                }
                v = (v - 1) & s;
            }
            c.set(i, s, Rat::from_integer(acc));
        }
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn mask_compression_roundtrip() {
        for n in 2..=5usize {
            for i in 0..n {
                for cm in 0..(1u32 << (n - 1)) {
                    let full = decompress_mask(i, cm);
                    assert_eq!(full & (1 << i), 0);
                    assert_eq!(compress_mask(i, full), cm);
                }
            }
        }
    }

    #[test]
    fn anchor_structure_and_center_zero() {
        let c = anchor_coeffs(4).unwrap();
        assert_eq!(c.get(0, 0), &rat_int(-1));
        assert_eq!(c.get(0, 1 << 1), &rat_int(2));
        assert_eq!(c.get(2, 1 << 3), &rat_int(2));
        assert_eq!(c.get(3, 0), &rat_int(1));
        assert_eq!(c.get(3, 1), &rat_int(-2));
        let sys = c.system();
        assert!(sys.is_linear());
        let center = vec![rat(1, 2); 4];
        for i in 0..4 {
            assert!(sys.f[i].eval(&center).is_zero());
        }
        assert!(anchor_coeffs(1).is_err());
    }

    #[test]
    fn matching_pennies_advantages() {
        // u1 = +1 on match, -1 otherwise; u2 negated.
        let n = 2;
        let mut u = vec![Int::zero(); n << n];
        for a in 0..4u32 {
            let matchv = if (a & 1) == ((a >> 1) & 1) { 1 } else { -1 };
            u[a as usize] = int(matchv);
            u[(1 << n) | a as usize] = int(-matchv);
        }
        let t = PayoffTensor {
            n,
            m: Int::one(),
            u,
        };
        let c = advantage_from_payoffs(&t).unwrap();
        // f1 = -2 + 4 x2, f2 = 2 - 4 x1
        assert_eq!(c.get(0, 0), &rat_int(-2));
        assert_eq!(c.get(0, 2), &rat_int(4));
        assert_eq!(c.get(1, 0), &rat_int(2));
        assert_eq!(c.get(1, 1), &rat_int(-4));
    }

    #[test]
    fn payoff_clearing_example() {
        // f1 = x2 - 1/2, f2 = 0 at n=2: M = 2, u1(1, x2=0) = -1, u1(1, x2=1) = 1.
        let mut c = CoeffVector::zero(2).unwrap();
        c.set(0, 0, rat(-1, 2));
        c.set(0, 2, rat_int(1));
        let t = payoffs_from_advantage(&c.system());
        assert_eq!(t.m, int(2));
        assert_eq!(t.get(0, 0b01), &int(-1));
        assert_eq!(t.get(0, 0b11), &int(1));
        assert_eq!(t.get(0, 0b00), &Int::zero());
        assert_eq!(t.get(0, 0b10), &Int::zero());
    }

    #[test]
    fn payoff_advantage_roundtrip_scales_by_m() {
        let c = perturb(&anchor_coeffs(3).unwrap(), 7, &rat(1, 2), 11).unwrap();
        let t = payoffs_from_advantage(&c.system());
        let back = advantage_from_payoffs(&t).unwrap();
        let m = Rat::from_integer(t.m.clone());
        for (i, mask, v) in c.entries() {
            assert_eq!(back.get(i, mask), &(v * &m));
        }
    }

    #[test]
    fn shift_inverse_and_eval_identity() {
        let c = perturb(&anchor_coeffs(3).unwrap(), 9, &rat(1, 3), 5).unwrap();
        let lambda = vec![rat(1, 3), rat(-1, 5), rat(2, 7)];
        let shifted = shift_coeffs(&c, &lambda).unwrap();
        let neg: Vec<Rat> = lambda.iter().map(|l| -l.clone()).collect();
        assert_eq!(shift_coeffs(&shifted, &neg).unwrap(), c);

        let sys = c.system();
        let ssys = shifted.system();
        let x = vec![rat(1, 4), rat(3, 5), rat(-2, 3)];
        let xs: Vec<Rat> = x.iter().zip(&lambda).map(|(a, l)| a + l).collect();
        for i in 0..3 {
            assert_eq!(ssys.f[i].eval(&x), sys.f[i].eval(&xs));
        }
    }

    #[test]
    fn perturb_contract() {
        let c0 = anchor_coeffs(4).unwrap();
        let mag = rat(1, 8);
        let a = perturb(&c0, 64, &mag, 42).unwrap();
        let b = perturb(&c0, 64, &mag, 42).unwrap();
        assert_eq!(a, b);
        let other = perturb(&c0, 64, &mag, 43).unwrap();
        assert_ne!(a, other);
        assert!(a.full_support());
        for (i, mask, v) in a.entries() {
            let delta = v - c0.get(i, mask);
            assert!(!delta.is_zero());
            assert!(delta.abs() <= mag);
            assert!(delta.denom() <= &int(64));
        }
        assert!(perturb(&c0, 64, &rat(1, 1000), 1).is_err());
        assert!(perturb(&c0, 1, &mag, 1).is_err());
    }

    #[test]
    fn permute_players_eval_consistency() {
        let c = perturb(&anchor_coeffs(3).unwrap(), 5, &rat(1, 2), 3).unwrap();
        let perm = [2usize, 0, 1];
        let p = permute_players(&c, &perm).unwrap();
        let x = vec![rat(1, 3), rat(1, 7), rat(2, 5)];
        // permuted game's player perm[i] at permuted point = original player i
        let mut px = vec![Rat::zero(); 3];
        for j in 0..3 {
            px[perm[j]] = x[j].clone();
        }
        let sys = c.system();
        let psys = p.system();
        for i in 0..3 {
            assert_eq!(psys.f[perm[i]].eval(&px), sys.f[i].eval(&x));
        }
    }

    #[test]
    fn multiaffine_range_is_sharp() {
        // f = x0·x1 − 1/4 on [0,1]^2 has range [−1/4, 3/4]
        let mut f = MultiAffine::zero(2);
        f.coeffs[0] = rat(-1, 4);
        f.coeffs[3] = rat_int(1);
        let unit = vec![Interval::new(rat_int(0), rat_int(1)); 2];
        let r = f.range_box(&unit);
        assert_eq!(r.lo(), &rat(-1, 4));
        assert_eq!(r.hi(), &rat(3, 4));
        let upper = vec![Interval::new(rat(1, 2), rat_int(1)); 2];
        let r2 = f.range_box(&upper);
        assert_eq!(r2.lo(), &rat_int(0));
        assert_eq!(r2.hi(), &rat(3, 4));
    }

    #[test]
    fn substitute_and_derivative() {
        let mut f = MultiAffine::zero(3);
        f.coeffs[0b110] = rat_int(6); // 6 x1 x2
        f.coeffs[0b010] = rat_int(-1); // -x1
        f.coeffs[0] = rat(1, 2);
        let g = f.substitute(1, &rat(1, 3));
        assert_eq!(g.coeff(0b100), &rat_int(2));
        assert_eq!(g.coeff(0), &(rat(1, 2) - rat(1, 3)));
        let d = f.derivative(1);
        assert_eq!(d.coeff(0b100), &rat_int(6));
        assert_eq!(d.coeff(0), &rat_int(-1));
        let e = f.derivative(0);
        assert!(e.is_zero());
    }

    #[test]
    fn eval_mask_matches_eval() {
        let c = perturb(&anchor_coeffs(3).unwrap(), 6, &rat(1, 2), 8).unwrap();
        let sys = c.system();
        for mask in 0..8u32 {
            let x: Vec<Rat> = (0..3)
                .map(|j| rat_int(((mask >> j) & 1) as i64))
                .collect();
            for i in 0..3 {
                assert_eq!(sys.f[i].eval_mask(mask & !(1 << i)), sys.f[i].eval(&x));
            }
        }
    }
}
