//! Certified real solving of square multi-affine systems on boxes:
//! subdivision with sharp vertex-range exclusion and the Krawczyk
//! interval operator for existence and uniqueness.
//!
//! All arithmetic is exact rational; box endpoints stay dyadic so heights
//! grow only one bit per bisection. Verification is unconditional: a box
//! with K(B) strictly inside B contains exactly one zero, a box with
//! K(B) ∩ B empty contains none, and boxes that reach the width floor
//! undecided are reported as such rather than guessed.

use std::collections::VecDeque;

use num::{One, Zero};

use crate::game::MultiAffine;
use crate::interval::Interval;
use crate::rat::{dyadic_round, rat, Rat};
use crate::sturm::width_bits;
use crate::{Error, Result};

#[derive(Debug, Clone)]
pub struct RealZero {
    /// Krawczyk box in which the zero is unique
    pub unique_box: Vec<Interval>,
    /// refined tight enclosure of the zero
    pub enclosure: Vec<Interval>,
}

#[derive(Debug, Clone)]
pub struct RealSolveReport {
    pub zeros: Vec<RealZero>,
    /// boxes abandoned at the width floor (possible singular zeros)
    pub undecided: Vec<Vec<Interval>>,
}

#[derive(Debug, Clone)]
pub struct RealSolveOptions {
    /// target enclosure width 2^-tol_bits
    pub tol_bits: u32,
    /// width floor exponent: undecided boxes below 2^-floor_bits give up
    pub floor_bits: u32,
    /// cap on processed boxes before aborting
    pub max_boxes: usize,
}

impl Default for RealSolveOptions {
    fn default() -> Self {
        RealSolveOptions {
            tol_bits: 64,
            floor_bits: 256,
            max_boxes: 200_000,
        }
    }
}

/// [−1/64, 1 + 1/64]^m, so zeros on the faces of the unit box are interior.
pub fn enlarged_unit_box(m: usize) -> Vec<Interval> {
    let eps = rat(1, 64);
    (0..m)
        .map(|_| Interval::new(-eps.clone(), Rat::one() + eps.clone()))
        .collect()
}

fn box_max_width(b: &[Interval]) -> Rat {
    b.iter()
        .map(|iv| iv.width())
        .max()
        .unwrap_or_else(Rat::zero)
}

fn boxes_subset(a: &[Interval], b: &[Interval]) -> bool {
    a.iter().zip(b).all(|(x, y)| x.subset(y))
}

fn boxes_disjoint(a: &[Interval], b: &[Interval]) -> bool {
    a.iter().zip(b).any(|(x, y)| x.intersect(y).is_none())
}

/// Exact inverse of a rational matrix, or None when singular.
fn invert(mat: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let m = mat.len();
    let mut aug: Vec<Vec<Rat>> = mat
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            for j in 0..m {
                r.push(if i == j { Rat::one() } else { Rat::zero() });
            }
            r
        })
        .collect();
    for c in 0..m {
        let piv = (c..m).find(|&r| !aug[r][c].is_zero())?;
        aug.swap(c, piv);
        let inv = {
            let p = aug[c][c].clone();
            Rat::one() / p
        };
        for x in aug[c].iter_mut() {
            *x *= &inv;
        }
        for r in 0..m {
            if r != c && !aug[r][c].is_zero() {
                let f = aug[r][c].clone();
                for cc in 0..2 * m {
                    let sub = &f * &aug[c][cc];
                    aug[r][cc] -= sub;
                }
            }
        }
    }
    Some(aug.into_iter().map(|row| row[m..].to_vec()).collect())
}

enum KrOutcome {
    Inside(Vec<Interval>),
    Disjoint,
    Straddle,
}

struct Ctx {
    m: usize,
    f: Vec<MultiAffine>,
    derivs: Vec<Vec<MultiAffine>>,
}

impl Ctx {
    fn new(f: &[MultiAffine]) -> Result<Ctx> {
        if f.is_empty() || f.iter().any(|g| g.n != f.len()) {
            return Err(Error::InvalidArg(
                "real solving needs a square compact system".into(),
            ));
        }
        let m = f.len();
        let derivs = f
            .iter()
            .map(|g| (0..m).map(|j| g.derivative(j)).collect())
            .collect();
        Ok(Ctx {
            m,
            f: f.to_vec(),
            derivs,
        })
    }

    fn krawczyk(&self, b: &[Interval]) -> KrOutcome {
        let m = self.m;
        let y: Vec<Rat> = b.iter().map(|iv| dyadic_round(&iv.mid(), 96)).collect();
        // keep y inside b even after rounding
        let y: Vec<Rat> = y
            .iter()
            .zip(b)
            .map(|(v, iv)| {
                if iv.contains(v) {
                    v.clone()
                } else {
                    iv.mid()
                }
            })
            .collect();
        let a: Vec<Vec<Rat>> = (0..m)
            .map(|i| (0..m).map(|j| self.derivs[i][j].eval(&y)).collect())
            .collect();
        let y_inv = match invert(&a) {
            Some(inv) => inv,
            None => return KrOutcome::Straddle,
        };
        let yr: Vec<Vec<Rat>> = y_inv
            .iter()
            .map(|row| row.iter().map(|v| dyadic_round(v, 96)).collect())
            .collect();
        let fy: Vec<Rat> = self.f.iter().map(|g| g.eval(&y)).collect();
        let c: Vec<Rat> = (0..m)
            .map(|i| (0..m).map(|j| &yr[i][j] * &fy[j]).sum())
            .collect();
        // M = I − Y·J(B) with sharp interval Jacobian entries
        let jb: Vec<Vec<Interval>> = (0..m)
            .map(|i| (0..m).map(|j| self.derivs[i][j].range_box(b)).collect())
            .collect();
        let r: Vec<Interval> = b
            .iter()
            .zip(&y)
            .map(|(iv, yj)| iv.add_scalar(&-yj.clone()))
            .collect();
        let mut k_box = Vec::with_capacity(m);
        for i in 0..m {
            let mut acc = Interval::point(&y[i] - &c[i]);
            for j in 0..m {
                let mut mij = jb[0][j].mul_scalar(&yr[i][0]);
                for l in 1..m {
                    mij = mij.add(&jb[l][j].mul_scalar(&yr[i][l]));
                }
                let mij = if i == j {
                    Interval::point(Rat::one()).sub(&mij)
                } else {
                    mij.neg()
                };
                acc = acc.add(&mij.mul(&r[j]));
            }
            k_box.push(acc);
        }
        if k_box.iter().zip(b).all(|(k, iv)| k.subset_interior(iv)) {
            let clipped: Vec<Interval> = k_box
                .iter()
                .zip(b)
                .map(|(k, iv)| k.intersect(iv).unwrap())
                .collect();
            return KrOutcome::Inside(clipped);
        }
        if k_box.iter().zip(b).any(|(k, iv)| k.intersect(iv).is_none()) {
            return KrOutcome::Disjoint;
        }
        KrOutcome::Straddle
    }

    fn excluded(&self, b: &[Interval]) -> bool {
        self.f.iter().any(|g| {
            g.range_box(b)
                .definite_sign()
                .is_some()
        })
    }

    /// Contract an enclosure by iterating X ← K(X) ∩ X.
    fn refine(&self, start: &[Interval], target: &Rat, iters: usize) -> Vec<Interval> {
        let mut x = start.to_vec();
        for _ in 0..iters {
            if &box_max_width(&x) <= target {
                break;
            }
            match self.krawczyk(&x) {
                KrOutcome::Inside(k) => {
                    x = k;
                }
                _ => break,
            }
        }
        x
    }
}

/// All zeros of the system inside `domain`, certified.
pub fn solve_system_box(
    f: &[MultiAffine],
    domain: &[Interval],
    opts: &RealSolveOptions,
) -> Result<RealSolveReport> {
    let ctx = Ctx::new(f)?;
    if domain.len() != ctx.m {
        return Err(Error::InvalidArg("domain dimension mismatch".into()));
    }
    let target = width_bits(opts.tol_bits);
    let floor = width_bits(opts.floor_bits);
    let inflate_below = rat(1, 256);
    let mut queue: VecDeque<Vec<Interval>> = VecDeque::new();
    queue.push_back(domain.to_vec());
    let mut zeros: Vec<RealZero> = vec![];
    let mut undecided: Vec<Vec<Interval>> = vec![];
    let mut processed = 0usize;
    while let Some(b) = queue.pop_front() {
        processed += 1;
        if processed > opts.max_boxes {
            return Err(Error::BudgetExhausted(format!(
                "subdivision exceeded {} boxes",
                opts.max_boxes
            )));
        }
        if zeros.iter().any(|z| boxes_subset(&b, &z.unique_box)) {
            continue;
        }
        if ctx.excluded(&b) {
            continue;
        }
        let width = box_max_width(&b);
        let mut verified: Option<(Vec<Interval>, Vec<Interval>)> = None;
        match ctx.krawczyk(&b) {
            KrOutcome::Disjoint => continue,
            KrOutcome::Inside(k) => verified = Some((b.clone(), k)),
            KrOutcome::Straddle => {
                if width < inflate_below {
                    // a zero may sit on a subdivision face: retry inflated
                    let half = rat(1, 2);
                    let inflated: Vec<Interval> = b
                        .iter()
                        .map(|iv| {
                            let grow = iv.width() * &half;
                            Interval::new(iv.lo() - &grow, iv.hi() + &grow)
                        })
                        .collect();
                    if let KrOutcome::Inside(k) = ctx.krawczyk(&inflated) {
                        verified = Some((inflated, k));
                    }
                }
            }
        }
        if let Some((ubox, k)) = verified {
            let enclosure = ctx.refine(&k, &target, 80);
            let mut duplicate = false;
            for z in &mut zeros {
                if boxes_disjoint(&z.unique_box, &ubox) {
                    continue;
                }
                // overlapping uniqueness regions: same zero or separable
                if boxes_subset(&enclosure, &z.unique_box)
                    || boxes_subset(&z.enclosure, &ubox)
                {
                    duplicate = true;
                    break;
                }
                let re = ctx.refine(&enclosure, &floor, 40);
                let rz = ctx.refine(&z.enclosure, &floor, 40);
                if boxes_disjoint(&re, &rz) {
                    continue;
                }
                duplicate = true;
                break;
            }
            if !duplicate {
                zeros.push(RealZero {
                    unique_box: ubox,
                    enclosure,
                });
            }
            continue;
        }
        if width < floor {
            undecided.push(b);
            continue;
        }
        // bisect the widest coordinate at a dyadic midpoint
        let (split, _) = b
            .iter()
            .enumerate()
            .max_by(|(_, x), (_, y)| x.width().cmp(&y.width()))
            .map(|(i, iv)| (i, iv.width()))
            .unwrap();
        let mid = dyadic_round(&b[split].mid(), 2 + width_exponent(&b[split]));
        let mid = if b[split].contains(&mid) && &mid != b[split].lo() && &mid != b[split].hi() {
            mid
        } else {
            b[split].mid()
        };
        let mut left = b.clone();
        let mut right = b;
        left[split] = Interval::new(left[split].lo().clone(), mid.clone());
        right[split] = Interval::new(mid, right[split].hi().clone());
        queue.push_back(left);
        queue.push_back(right);
    }
    // final polish: refine every enclosure to the target width
    for z in &mut zeros {
        z.enclosure = ctx.refine(&z.enclosure.clone(), &target, 200);
    }
    Ok(RealSolveReport { zeros, undecided })
}

/// Re-contract a verified zero's enclosure to a finer width.
pub fn refine_enclosure(
    f: &[MultiAffine],
    z: &RealZero,
    tol_bits: u32,
) -> Result<Vec<Interval>> {
    let ctx = Ctx::new(f)?;
    Ok(ctx.refine(&z.enclosure, &width_bits(tol_bits), 200))
}

/// Bits needed so a dyadic rounding of the midpoint stays strictly inside.
fn width_exponent(iv: &Interval) -> u32 {
    let w = iv.width();
    if w.is_zero() {
        return 2;
    }
    // ceil(-log2 w) roughly: bits of denominator minus bits of numerator
    let nb = w.numer().bits() as i64;
    let db = w.denom().bits() as i64;
    (db - nb + 2).max(2) as u32
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{anchor_coeffs, perturb, MultiAffine};
    use crate::modsys::CompactSystem;
    use crate::rur::{solve_charts, RurOptions};

    fn rat1(n: i64, d: i64) -> Rat {
        rat(n, d)
    }

    #[test]
    fn anchor_single_zero() {
        let c = anchor_coeffs(3).unwrap();
        let f = c.system().f;
        let rep = solve_system_box(&f, &enlarged_unit_box(3), &RealSolveOptions::default()).unwrap();
        assert_eq!(rep.zeros.len(), 1);
        assert!(rep.undecided.is_empty());
        for iv in &rep.zeros[0].enclosure {
            assert!(iv.contains(&rat1(1, 2)));
            assert!(iv.width() <= width_bits(64));
        }
    }

    #[test]
    fn zero_outside_domain_not_reported() {
        // f0 = x1 - 3, f1 = 2 x0 - 1 has its only zero at (1/2, 3)
        let mut f0 = MultiAffine::zero(2);
        f0.coeffs[0] = rat1(-3, 1);
        f0.coeffs[0b10] = rat1(1, 1);
        let mut f1 = MultiAffine::zero(2);
        f1.coeffs[0] = rat1(-1, 1);
        f1.coeffs[0b01] = rat1(2, 1);
        let sys = vec![f0, f1];
        let rep =
            solve_system_box(&sys, &enlarged_unit_box(2), &RealSolveOptions::default()).unwrap();
        assert!(rep.zeros.is_empty());
        assert!(rep.undecided.is_empty());
        let wide = vec![
            Interval::new(rat1(0, 1), rat1(1, 1)),
            Interval::new(rat1(2, 1), rat1(4, 1)),
        ];
        let rep = solve_system_box(&sys, &wide, &RealSolveOptions::default()).unwrap();
        assert_eq!(rep.zeros.len(), 1);
        assert!(rep.zeros[0].enclosure[0].contains(&rat1(1, 2)));
        assert!(rep.zeros[0].enclosure[1].contains(&rat1(3, 1)));
    }

    #[test]
    fn matching_pennies_zero() {
        let mut f1 = MultiAffine::zero(2);
        f1.coeffs[0] = rat1(-2, 1);
        f1.coeffs[0b10] = rat1(4, 1);
        let mut f2 = MultiAffine::zero(2);
        f2.coeffs[0] = rat1(2, 1);
        f2.coeffs[0b01] = rat1(-4, 1);
        let rep = solve_system_box(
            &[f1, f2],
            &enlarged_unit_box(2),
            &RealSolveOptions::default(),
        )
        .unwrap();
        assert_eq!(rep.zeros.len(), 1);
        assert!(rep.zeros[0].enclosure[0].contains(&rat1(1, 2)));
        assert!(rep.zeros[0].enclosure[1].contains(&rat1(1, 2)));
    }

    #[test]
    fn perturbed_n3_agrees_with_charts() {
        let c = perturb(&anchor_coeffs(3).unwrap(), 16, &rat1(1, 4), 7).unwrap();
        let f = c.system().f;
        let rep =
            solve_system_box(&f, &enlarged_unit_box(3), &RealSolveOptions::default()).unwrap();
        assert!(rep.undecided.is_empty());
        let vars: Vec<usize> = (0..3).collect();
        let sys = CompactSystem::from_multiaffine(&f, &vars);
        let cs = solve_charts(&sys, &RurOptions::default()).unwrap();
        let pts = cs.real_points(cs.shape_center().unwrap(), 80).unwrap();
        // every verified zero matches exactly one chart point
        for z in &rep.zeros {
            let hits = pts
                .iter()
                .filter(|p| {
                    p.coords
                        .iter()
                        .zip(&z.unique_box)
                        .all(|(a, b)| a.intersect(b).is_some())
                })
                .count();
            assert_eq!(hits, 1, "each zero should match exactly one chart point");
        }
        // chart points inside the domain must all be found
        let dom = enlarged_unit_box(3);
        let inside = pts
            .iter()
            .filter(|p| p.coords.iter().zip(&dom).all(|(a, b)| a.subset(b)))
            .count();
        assert_eq!(rep.zeros.len(), inside);
    }

    #[test]
    fn degenerate_line_reports_failure() {
        // x0 − x1 = 0 twice: a line of zeros, nothing isolable
        let mut f = MultiAffine::zero(2);
        f.coeffs[0b01] = rat1(1, 1);
        f.coeffs[0b10] = rat1(-1, 1);
        let sys = vec![f.clone(), f];
        let mut opts = RealSolveOptions::default();
        opts.max_boxes = 400;
        match solve_system_box(&sys, &enlarged_unit_box(2), &opts) {
            Err(Error::BudgetExhausted(_)) => {}
            Ok(rep) => assert!(!rep.undecided.is_empty()),
            Err(e) => panic!("unexpected error {e:?}"),
        }
    }
}
