//! Exact solution of the advantage system: per-coordinate eliminants,
//! certified solution boxes, and exhaustive Nash-equilibrium enumeration
//! over the 3^n support patterns.
//!
//! Two independent routes are used. The chart route (quotient-ring minimal
//! polynomials, rur module) produces eliminants and algebraic solution
//! points with exact sign queries. The subdivision route (realsolve module)
//! gives unconditional enumeration of zeros on a box. enumerate_ne is built
//! on the subdivision route and calls into the chart route only when an
//! interval test cannot decide a strict inequality or an exact coincidence.

use std::collections::HashMap;

use num::{One, Signed, Zero};

use crate::game::{advantage_from_payoffs, CoeffVector, MultiAffine, PayoffTensor};
use crate::interval::Interval;
use crate::modsys::CompactSystem;
use crate::rat::{Rat};
use crate::realsolve::{
    enlarged_unit_box, solve_system_box, RealSolveOptions, RealZero,
};
use crate::rur::{solve_charts, ChartPoint, ChartSet, RurOptions};
use crate::sturm::{root_bound, width_bits};
use crate::unipoly::IntPoly;
use crate::{Error, Result};

#[derive(Debug, Clone)]
pub struct Eliminant {
    pub player: usize,
    /// primitive integer coefficients, positive leading coefficient, squarefree
    pub poly: IntPoly,
    pub provenance: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoxStatus {
    Verified,
    /// a certified system solution with some coordinate exactly zero
    /// (outside the torus count)
    Spurious,
}

#[derive(Debug, Clone)]
pub struct RootBox {
    pub intervals: Vec<Interval>,
    pub status: BoxStatus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    Pure0,
    Pure1,
    Mixed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportPattern(pub Vec<Role>);

impl SupportPattern {
    pub fn from_index(n: usize, idx: usize) -> SupportPattern {
        let mut roles = vec![Role::Pure0; n];
        let mut k = idx;
        for i in (0..n).rev() {
            roles[i] = match k % 3 {
                0 => Role::Pure0,
                1 => Role::Pure1,
                _ => Role::Mixed,
            };
            k /= 3;
        }
        SupportPattern(roles)
    }

    pub fn label(&self) -> String {
        self.0
            .iter()
            .map(|r| match r {
                Role::Pure0 => '0',
                Role::Pure1 => '1',
                Role::Mixed => 'M',
            })
            .collect()
    }

    pub fn parse(s: &str) -> Result<SupportPattern> {
        let roles = s
            .chars()
            .map(|ch| match ch {
                '0' => Ok(Role::Pure0),
                '1' => Ok(Role::Pure1),
                'M' | 'm' => Ok(Role::Mixed),
                _ => Err(Error::Parse(format!("bad pattern char {ch:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SupportPattern(roles))
    }

    pub fn mixed_players(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, r)| **r == Role::Mixed)
            .map(|(i, _)| i)
            .collect()
    }
}

#[derive(Debug, Clone)]
pub enum EqCoord {
    Pure(Rat),
    Mixed(Interval),
}

#[derive(Debug, Clone)]
pub struct Equilibrium {
    pub pattern: SupportPattern,
    pub coords: Vec<EqCoord>,
}

#[derive(Debug, Clone)]
pub struct NEReport {
    pub equilibria: Vec<Equilibrium>,
    pub complete: bool,
    pub degenerate_patterns: Vec<SupportPattern>,
}

/// A cached full-system chart solve with its certified solution boxes.
pub struct FullSolve {
    pub charts: ChartSet,
    pub points: Vec<ChartPoint>,
    pub boxes: Vec<RootBox>,
}

impl FullSolve {
    /// Exact sign of a multi-affine polynomial (over the full variable set)
    /// at the algebraic point identified by box `idx`.
    pub fn exact_sign_at(&mut self, idx: usize, g: &MultiAffine) -> Result<i32> {
        let terms = mask_terms(g);
        self.charts.sign_at(&self.points[idx], &terms)
    }
}

fn mask_terms(g: &MultiAffine) -> Vec<(u32, Rat)> {
    g.coeffs
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(m, v)| (m as u32, v.clone()))
        .collect()
}

/// Remap a polynomial supported on `vars` into a compact polynomial in
/// `vars.len()` variables, preserving coefficient values.
fn compactify(p: &MultiAffine, vars: &[usize]) -> MultiAffine {
    let m = vars.len();
    let mut pos = vec![usize::MAX; p.n];
    for (k, &v) in vars.iter().enumerate() {
        pos[v] = k;
    }
    let mut out = MultiAffine::zero(m);
    for (mask, v) in p.coeffs.iter().enumerate() {
        if v.is_zero() {
            continue;
        }
        let mut cm = 0usize;
        for b in 0..p.n {
            if mask & (1 << b) != 0 {
                assert!(pos[b] != usize::MAX, "support outside kept variables");
                cm |= 1 << pos[b];
            }
        }
        out.coeffs[cm] = v.clone();
    }
    out
}

fn compact_terms(p: &MultiAffine, vars: &[usize]) -> Vec<(u32, Rat)> {
    mask_terms(&compactify(p, vars))
}

fn charts_for(c: &CoeffVector) -> Result<ChartSet> {
    let f = c.system().f;
    let vars: Vec<usize> = (0..c.n()).collect();
    let sys = CompactSystem::from_multiaffine(&f, &vars);
    solve_charts(&sys, &RurOptions::default())
}

fn eliminants_from(cs: &ChartSet, n: usize) -> Vec<Eliminant> {
    (0..n)
        .map(|i| {
            let ch = cs.chart(i);
            Eliminant {
                player: i,
                poly: ch.elim.clone(),
                provenance: format!(
                    "quotient-ring minimal polynomial of x_{} (dimension {}, squarefree {})",
                    i + 1,
                    cs.dim,
                    ch.squarefree
                ),
            }
        })
        .collect()
}

/// Eliminant of every coordinate at once (the chart solve is shared).
pub fn eliminate_all(c: &CoeffVector) -> Result<Vec<Eliminant>> {
    let cs = charts_for(c)?;
    Ok(eliminants_from(&cs, c.n()))
}

pub fn eliminate(c: &CoeffVector, player: usize) -> Result<Eliminant> {
    if player >= c.n() {
        return Err(Error::InvalidArg("player index out of range".into()));
    }
    Ok(eliminate_all(c)?.into_iter().nth(player).unwrap())
}

/// Chart solve plus torus classification of every real solution.
pub fn full_solve(c: &CoeffVector, tol_bits: u32) -> Result<FullSolve> {
    let mut cs = charts_for(c)?;
    let (points, complete) = match cs.shape_center() {
        Some(center) => (cs.real_points(center, tol_bits)?, true),
        None => (vec![], false),
    };
    if !complete {
        // no separating coordinate: fall back to unconditional subdivision
        // over a box bounding all eliminant roots
        return full_solve_subdivision(c, &cs, tol_bits);
    }
    let mut boxes = Vec::with_capacity(points.len());
    for p in &points {
        let mut status = BoxStatus::Verified;
        for j in 0..c.n() {
            if cs.coordinate_sign(&p, j, &Rat::zero())? == 0 {
                status = BoxStatus::Spurious;
                break;
            }
        }
        boxes.push(RootBox {
            intervals: p.coords.clone(),
            status,
        });
    }
    Ok(FullSolve {
        charts: cs,
        points,
        boxes,
    })
}

fn full_solve_subdivision(
    c: &CoeffVector,
    cs: &ChartSet,
    tol_bits: u32,
) -> Result<FullSolve> {
    let f = c.system().f;
    if cs.dim == 0 {
        return Err(Error::Degenerate("system has no solutions".into()));
    }
    let mut domain = Vec::with_capacity(c.n());
    for i in 0..c.n() {
        let b = root_bound(&cs.chart(i).elim);
        domain.push(Interval::new(-b.clone(), b));
    }
    let mut opts = RealSolveOptions::default();
    opts.tol_bits = tol_bits;
    let rep = solve_system_box(&f, &domain, &opts)?;
    if !rep.undecided.is_empty() {
        return Err(Error::Degenerate(
            "solution isolation left undecided regions".into(),
        ));
    }
    let mut boxes = Vec::new();
    for z in rep.zeros {
        let torus_zero = z.enclosure.iter().enumerate().any(|(j, iv)| {
            iv.contains(&Rat::zero()) && cs.chart(j).elim.sign_at(&Rat::zero()) == 0
        });
        boxes.push(RootBox {
            intervals: z.enclosure,
            status: if torus_zero {
                BoxStatus::Spurious
            } else {
                BoxStatus::Verified
            },
        });
    }
    Err(Error::Degenerate(format!(
        "no separating coordinate; {} real boxes located but exact sign \
         queries are unavailable",
        boxes.len()
    )))
}

/// All real solution boxes of the system, torus solutions marked Verified.
pub fn solve_boxes(c: &CoeffVector, tol_bits: u32) -> Result<Vec<RootBox>> {
    Ok(full_solve(c, tol_bits)?.boxes)
}

struct PatternCharts {
    cs: ChartSet,
    pts: Vec<ChartPoint>,
}

struct Enumerator<'a> {
    c: &'a CoeffVector,
    f: Vec<MultiAffine>,
    tol_bits: u32,
    chart_cache: HashMap<usize, Option<PatternCharts>>,
}

enum CandidateVerdict {
    Accept(Vec<EqCoord>),
    Reject,
    Undecided,
}

impl<'a> Enumerator<'a> {
    fn new(c: &'a CoeffVector, tol_bits: u32) -> Enumerator<'a> {
        Enumerator {
            c,
            f: c.system().f,
            tol_bits,
            chart_cache: HashMap::new(),
        }
    }

    fn restricted(&self, pat: &SupportPattern) -> Vec<MultiAffine> {
        let n = self.c.n();
        (0..n)
            .map(|i| {
                let mut g = self.f[i].clone();
                for j in 0..n {
                    match pat.0[j] {
                        Role::Pure0 => g = g.substitute(j, &Rat::zero()),
                        Role::Pure1 => g = g.substitute(j, &Rat::one()),
                        Role::Mixed => {}
                    }
                }
                g
            })
            .collect()
    }

    fn pattern_charts(&mut self, idx: usize, sub: &[MultiAffine], mixed: &[usize]) -> Option<&mut PatternCharts> {
        let tol = self.tol_bits;
        let entry = self.chart_cache.entry(idx).or_insert_with(|| {
            let sys = CompactSystem::from_multiaffine(sub, mixed);
            match solve_charts(&sys, &RurOptions::default()) {
                Ok(cs) => {
                    let center = cs.shape_center()?;
                    let pts = cs.real_points(center, tol).ok()?;
                    Some(PatternCharts { cs, pts })
                }
                Err(_) => None,
            }
        });
        entry.as_mut()
    }

    /// The chart point matching a verified zero, when exactly one does.
    fn matching_point(pc: &PatternCharts, z: &RealZero) -> Option<ChartPoint> {
        let hits: Vec<&ChartPoint> = pc
            .pts
            .iter()
            .filter(|p| {
                p.coords
                    .iter()
                    .zip(&z.unique_box)
                    .all(|(a, b)| a.intersect(b).is_some())
            })
            .collect();
        if hits.len() == 1 {
            Some(hits[0].clone())
        } else {
            None
        }
    }

    /// Decide one verified zero of the mixed subsystem against the pattern's
    /// strict-interior and pure-sign conditions.
    fn judge(
        &mut self,
        idx: usize,
        pat: &SupportPattern,
        sub: &[MultiAffine],
        mixed: &[usize],
        z: &RealZero,
    ) -> Result<CandidateVerdict> {
        let m = mixed.len();
        let sub_compact: Vec<MultiAffine> =
            mixed.iter().map(|&i| compactify(&sub[i], mixed)).collect();
        let mut enc = z.enclosure.clone();
        let zero = Rat::zero();
        let one = Rat::one();
        // refinement ladder first: most instances resolve here
        for round in 0..4 {
            let strict_in = enc
                .iter()
                .all(|iv| iv.lo() > &zero && iv.hi() < &one);
            let out = enc
                .iter()
                .any(|iv| iv.hi() < &zero || iv.lo() > &one);
            if out {
                return Ok(CandidateVerdict::Reject);
            }
            let mut signs_ok = true;
            let mut signs_fail = false;
            if strict_in {
                for j in 0..self.c.n() {
                    let (want_neg, want_pos) = match pat.0[j] {
                        Role::Pure0 => (true, false),
                        Role::Pure1 => (false, true),
                        Role::Mixed => continue,
                    };
                    let g = compactify(&sub[j], mixed);
                    let r = g.range_box(&enc);
                    match r.definite_sign() {
                        Some(s) if s > 0 => {
                            if want_neg {
                                signs_fail = true;
                            }
                        }
                        Some(s) if s < 0 => {
                            if want_pos {
                                signs_fail = true;
                            }
                        }
                        Some(_) => {}
                        None => signs_ok = false,
                    }
                    if signs_fail {
                        break;
                    }
                }
                if signs_fail {
                    return Ok(CandidateVerdict::Reject);
                }
                if signs_ok {
                    return Ok(CandidateVerdict::Accept(self.assemble(pat, mixed, &enc)));
                }
            }
            if round < 3 {
                let bits = self.tol_bits * (1 << (round + 1)).min(8);
                enc = crate::realsolve::refine_enclosure(&sub_compact, z, bits)?;
            }
        }
        // exact route via the pattern's chart solve
        let n = self.c.n();
        let pc = match self.pattern_charts(idx, sub, mixed) {
            Some(pc) => pc,
            None => return Ok(CandidateVerdict::Undecided),
        };
        let pt = match Self::matching_point(pc, z) {
            Some(p) => p,
            None => return Ok(CandidateVerdict::Undecided),
        };
        // strict interior, with exact decision at a touched endpoint
        for k in 0..m {
            let s0 = pc.cs.coordinate_sign(&pt, k, &zero)?;
            if s0 <= 0 {
                return Ok(CandidateVerdict::Reject);
            }
            let s1 = pc.cs.coordinate_sign(&pt, k, &one)?;
            if s1 >= 0 {
                return Ok(CandidateVerdict::Reject);
            }
        }
        for j in 0..n {
            let want = match pat.0[j] {
                Role::Pure0 => -1,
                Role::Pure1 => 1,
                Role::Mixed => continue,
            };
            let terms = compact_terms(&sub[j], mixed);
            let s = pc.cs.sign_at(&pt, &terms)?;
            if s != 0 && s != want {
                return Ok(CandidateVerdict::Reject);
            }
        }
        let enc = pt.coords.clone();
        Ok(CandidateVerdict::Accept(self.assemble(pat, mixed, &enc)))
    }

    fn assemble(&self, pat: &SupportPattern, mixed: &[usize], enc: &[Interval]) -> Vec<EqCoord> {
        let mut pos = vec![usize::MAX; self.c.n()];
        for (k, &i) in mixed.iter().enumerate() {
            pos[i] = k;
        }
        (0..self.c.n())
            .map(|i| match pat.0[i] {
                Role::Pure0 => EqCoord::Pure(Rat::zero()),
                Role::Pure1 => EqCoord::Pure(Rat::one()),
                Role::Mixed => EqCoord::Mixed(enc[pos[i]].clone()),
            })
            .collect()
    }

    /// Certified emptiness of the pattern via exclusion-only subdivision on
    /// the closed unit box (used when the subsystem is not square).
    fn excluded_on_unit_box(&self, eqs: &[MultiAffine], m: usize) -> bool {
        let unit: Vec<Interval> = (0..m)
            .map(|_| Interval::new(Rat::zero(), Rat::one()))
            .collect();
        let mut stack = vec![unit];
        let mut steps = 0usize;
        while let Some(b) = stack.pop() {
            steps += 1;
            if steps > 4000 {
                return false;
            }
            if eqs.iter().any(|g| g.range_box(&b).definite_sign().is_some()) {
                continue;
            }
            let w = b
                .iter()
                .map(|iv| iv.width())
                .max()
                .unwrap_or_else(Rat::zero);
            if w < width_bits(16) {
                return false;
            }
            let (split, _) = b
                .iter()
                .enumerate()
                .max_by(|(_, x), (_, y)| x.width().cmp(&y.width()))
                .unwrap();
            let (lo, hi) = b[split].bisect();
            let mut left = b.clone();
            let mut right = b;
            left[split] = lo;
            right[split] = hi;
            stack.push(left);
            stack.push(right);
        }
        true
    }

    fn run_pattern(
        &mut self,
        idx: usize,
        report: &mut NEReport,
    ) -> Result<()> {
        let n = self.c.n();
        let pat = SupportPattern::from_index(n, idx);
        let mixed = pat.mixed_players();
        let m = mixed.len();
        let sub = self.restricted(&pat);
        if m == 0 {
            // all-pure: every check is a rational sign
            let ok = (0..n).all(|i| {
                let v = sub[i].coeff(0);
                match pat.0[i] {
                    Role::Pure0 => !v.is_positive(),
                    Role::Pure1 => !v.is_negative(),
                    Role::Mixed => unreachable!(),
                }
            });
            if ok {
                report.equilibria.push(Equilibrium {
                    pattern: pat.clone(),
                    coords: self.assemble(&pat, &mixed, &[]),
                });
            }
            return Ok(());
        }
        let eqs: Vec<&MultiAffine> = mixed.iter().map(|&i| &sub[i]).collect();
        // constant equations decide immediately
        if eqs
            .iter()
            .any(|g| g.support_vars() == 0 && !g.coeff(0).is_zero())
        {
            return Ok(());
        }
        // quick pure-sign emptiness over the closed unit cube
        let unit: Vec<Interval> = (0..m)
            .map(|_| Interval::new(Rat::zero(), Rat::one()))
            .collect();
        for j in 0..n {
            let g = compactify(&sub[j], &mixed);
            let r = g.range_box(&unit);
            let violated = match pat.0[j] {
                Role::Pure0 => r.lo() > &Rat::zero(),
                Role::Pure1 => r.hi() < &Rat::zero(),
                Role::Mixed => false,
            };
            if violated {
                return Ok(());
            }
        }
        let zero_eqs = eqs.iter().filter(|g| g.is_zero()).count();
        if zero_eqs > 0 {
            // underdetermined: certify emptiness by exclusion or give up
            let nz: Vec<MultiAffine> = eqs
                .iter()
                .filter(|g| !g.is_zero())
                .map(|g| compactify(g, &mixed))
                .collect();
            if !nz.is_empty() && self.excluded_on_unit_box(&nz, m) {
                return Ok(());
            }
            report.degenerate_patterns.push(pat);
            report.complete = false;
            return Ok(());
        }
        let sub_compact: Vec<MultiAffine> =
            mixed.iter().map(|&i| compactify(&sub[i], &mixed)).collect();
        let mut opts = RealSolveOptions::default();
        opts.tol_bits = self.tol_bits;
        let rep = match solve_system_box(&sub_compact, &enlarged_unit_box(m), &opts) {
            Ok(r) => r,
            Err(Error::BudgetExhausted(_)) => {
                report.degenerate_patterns.push(pat);
                report.complete = false;
                return Ok(());
            }
            Err(e) => return Err(e),
        };
        let open_hit = rep.undecided.iter().any(|b| {
            b.iter()
                .all(|iv| iv.lo() < &Rat::one() && iv.hi() > &Rat::zero())
        });
        if open_hit {
            report.degenerate_patterns.push(pat.clone());
            report.complete = false;
        }
        let mut undecided_candidate = false;
        for z in &rep.zeros {
            match self.judge(idx, &pat, &sub, &mixed, z)? {
                CandidateVerdict::Accept(coords) => {
                    report.equilibria.push(Equilibrium {
                        pattern: pat.clone(),
                        coords,
                    });
                }
                CandidateVerdict::Reject => {}
                CandidateVerdict::Undecided => undecided_candidate = true,
            }
        }
        if undecided_candidate && !open_hit {
            report.degenerate_patterns.push(pat);
            report.complete = false;
        }
        Ok(())
    }
}

/// Exhaustive support-pattern enumeration; complete is true when every
/// pattern was decided.
pub fn enumerate_ne(c: &CoeffVector, tol_bits: u32) -> Result<NEReport> {
    let mut en = Enumerator::new(c, tol_bits);
    run_all_patterns(&mut en, c.n())
}

fn run_all_patterns(en: &mut Enumerator, n: usize) -> Result<NEReport> {
    let mut report = NEReport {
        equilibria: vec![],
        complete: true,
        degenerate_patterns: vec![],
    };
    let total = 3usize.pow(n as u32);
    for idx in 0..total {
        en.run_pattern(idx, &mut report)?;
    }
    Ok(report)
}

/// A completed full-system chart solve together with its eliminants. The
/// stored charts let the all-mixed support pattern skip its own elimination
/// during enumeration.
pub struct Analysis {
    charts: ChartSet,
    pub eliminants: Vec<Eliminant>,
}

pub fn prepare_analysis(c: &CoeffVector) -> Result<Analysis> {
    let charts = charts_for(c)?;
    let eliminants = eliminants_from(&charts, c.n());
    Ok(Analysis { charts, eliminants })
}

impl Analysis {
    /// Support-pattern enumeration over the same game `c` this analysis was
    /// prepared from, reusing the stored charts for the all-mixed pattern.
    pub fn enumerate(self, c: &CoeffVector, tol_bits: u32) -> Result<(Vec<Eliminant>, NEReport)> {
        let n = c.n();
        let mut en = Enumerator::new(c, tol_bits);
        let full_idx = 3usize.pow(n as u32) - 1;
        let cs = self.charts;
        let seeded = match cs.shape_center() {
            Some(center) => cs
                .real_points(center, tol_bits)
                .ok()
                .map(|pts| PatternCharts { cs, pts }),
            None => None,
        };
        en.chart_cache.insert(full_idx, seeded);
        let report = run_all_patterns(&mut en, n)?;
        Ok((self.eliminants, report))
    }
}

/// Eliminants and full equilibrium enumeration from a single chart solve.
pub fn analyze(c: &CoeffVector, tol_bits: u32) -> Result<(Vec<Eliminant>, NEReport)> {
    prepare_analysis(c)?.enumerate(c, tol_bits)
}

pub fn enumerate_ne_tensor(t: &PayoffTensor, tol_bits: u32) -> Result<NEReport> {
    let c = advantage_from_payoffs(t)?;
    enumerate_ne(&c, tol_bits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{anchor_coeffs, permute_players, perturb, CoeffVector};
    use crate::rat::rat;

    #[test]
    fn anchor_eliminant_is_two_t_minus_one() {
        let c = anchor_coeffs(4).unwrap();
        for i in 0..4 {
            let e = eliminate(&c, i).unwrap();
            assert_eq!(e.poly, IntPoly::from_i64(&[-1, 2]));
        }
    }

    #[test]
    fn linear_two_player_eliminant() {
        // f1 = 1 - 3 x2, f2 = 2 - 5 x1: solution (2/5, 1/3)
        let mut c = CoeffVector::zero(2).unwrap();
        c.set(0, 0, rat(1, 1));
        c.set(0, 0b10, rat(-3, 1));
        c.set(1, 0, rat(2, 1));
        c.set(1, 0b01, rat(-5, 1));
        let e1 = eliminate(&c, 0).unwrap();
        assert_eq!(e1.poly, IntPoly::from_i64(&[-2, 5]));
        let e2 = eliminate(&c, 1).unwrap();
        assert_eq!(e2.poly, IntPoly::from_i64(&[-1, 3]));
        let boxes = solve_boxes(&c, 64).unwrap();
        assert_eq!(boxes.len(), 1);
        assert!(boxes[0].intervals[0].contains(&rat(2, 5)));
        assert!(boxes[0].intervals[1].contains(&rat(1, 3)));
        assert_eq!(boxes[0].status, BoxStatus::Verified);
    }

    #[test]
    fn anchor_solve_boxes_unique_half() {
        let c = anchor_coeffs(4).unwrap();
        let boxes = solve_boxes(&c, 64).unwrap();
        assert_eq!(boxes.len(), 1);
        for iv in &boxes[0].intervals {
            assert!(iv.contains(&rat(1, 2)));
        }
        assert_eq!(boxes[0].status, BoxStatus::Verified);
    }

    #[test]
    fn torus_filter_marks_spurious() {
        // f1 = x2 (zero at x2 = 0), f2 = 2 x1 - 1
        let mut c = CoeffVector::zero(2).unwrap();
        c.set(0, 0b10, rat(1, 1));
        c.set(1, 0, rat(-1, 1));
        c.set(1, 0b01, rat(2, 1));
        let boxes = solve_boxes(&c, 64).unwrap();
        assert_eq!(boxes.len(), 1);
        assert_eq!(boxes[0].status, BoxStatus::Spurious);
        assert!(boxes[0].intervals[1].contains(&Rat::zero()));
    }

    #[test]
    fn matching_pennies_unique_mixed_ne() {
        let mut c = CoeffVector::zero(2).unwrap();
        c.set(0, 0, rat(-2, 1));
        c.set(0, 0b10, rat(4, 1));
        c.set(1, 0, rat(2, 1));
        c.set(1, 0b01, rat(-4, 1));
        let rep = enumerate_ne(&c, 64).unwrap();
        assert!(rep.complete);
        assert!(rep.degenerate_patterns.is_empty());
        assert_eq!(rep.equilibria.len(), 1);
        let eq = &rep.equilibria[0];
        assert_eq!(eq.pattern.label(), "MM");
        for coord in &eq.coords {
            match coord {
                EqCoord::Mixed(iv) => assert!(iv.contains(&rat(1, 2))),
                _ => panic!("expected mixed coordinate"),
            }
        }
    }

    #[test]
    fn anchor_n4_unique_fully_mixed() {
        let c = anchor_coeffs(4).unwrap();
        let rep = enumerate_ne(&c, 64).unwrap();
        assert!(rep.complete);
        assert_eq!(rep.equilibria.len(), 1);
        let eq = &rep.equilibria[0];
        assert_eq!(eq.pattern.label(), "MMMM");
        for coord in &eq.coords {
            match coord {
                EqCoord::Mixed(iv) => assert!(iv.contains(&rat(1, 2))),
                _ => panic!("expected mixed coordinate"),
            }
        }
    }

    #[test]
    fn dominance_game_all_pure1() {
        let mut c = CoeffVector::zero(3).unwrap();
        for i in 0..3 {
            c.set(i, 0, rat(1, 1));
        }
        let rep = enumerate_ne(&c, 64).unwrap();
        assert!(rep.complete);
        assert_eq!(rep.equilibria.len(), 1);
        assert_eq!(rep.equilibria[0].pattern.label(), "111");
        for coord in &rep.equilibria[0].coords {
            match coord {
                EqCoord::Pure(v) => assert_eq!(v, &Rat::one()),
                _ => panic!("expected pure coordinate"),
            }
        }
    }

    fn random_int_coeffs(n: usize, seed: u64) -> CoeffVector {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(seed);
        let mut c = CoeffVector::zero(n).unwrap();
        for i in 0..n {
            for cm in 0..(1u32 << (n - 1)) {
                let mask = crate::game::decompress_mask(i, cm);
                let v: i64 = rng.gen_range(-5..=5);
                c.set(i, mask, rat(v, 1));
            }
        }
        c
    }

    fn brute_force_pure(c: &CoeffVector) -> Vec<u32> {
        let n = c.n();
        let f = c.system().f;
        let mut out = vec![];
        for prof in 0..(1u32 << n) {
            let x: Vec<Rat> = (0..n)
                .map(|i| {
                    if prof & (1 << i) != 0 {
                        Rat::one()
                    } else {
                        Rat::zero()
                    }
                })
                .collect();
            let ok = (0..n).all(|i| {
                let v = f[i].eval(&x);
                if prof & (1 << i) != 0 {
                    !v.is_negative()
                } else {
                    !v.is_positive()
                }
            });
            if ok {
                out.push(prof);
            }
        }
        out
    }

    #[test]
    fn all_pure_patterns_match_brute_force() {
        for seed in 0..25u64 {
            let c = random_int_coeffs(3, 1000 + seed);
            let rep = enumerate_ne(&c, 64).unwrap();
            let mut got: Vec<u32> = rep
                .equilibria
                .iter()
                .filter(|e| e.pattern.0.iter().all(|r| *r != Role::Mixed))
                .map(|e| {
                    let mut prof = 0u32;
                    for (i, r) in e.pattern.0.iter().enumerate() {
                        if *r == Role::Pure1 {
                            prof |= 1 << i;
                        }
                    }
                    prof
                })
                .collect();
            got.sort();
            let want = brute_force_pure(&c);
            assert_eq!(got, want, "seed {seed}");
        }
    }

    #[test]
    fn eliminant_respects_player_relabeling() {
        let c = perturb(&anchor_coeffs(3).unwrap(), 16, &rat(1, 4), 11).unwrap();
        let perm = [2usize, 0, 1];
        let cp = permute_players(&c, &perm).unwrap();
        let orig = eliminate_all(&c).unwrap();
        let perm_elims = eliminate_all(&cp).unwrap();
        for i in 0..3 {
            assert_eq!(perm_elims[perm[i]].poly, orig[i].poly);
        }
    }

    #[test]
    fn perturbed_enumerate_matches_solve_boxes() {
        let c = perturb(&anchor_coeffs(3).unwrap(), 16, &rat(1, 4), 7).unwrap();
        let rep = enumerate_ne(&c, 64).unwrap();
        assert!(rep.complete);
        let boxes = solve_boxes(&c, 64).unwrap();
        let zero = Rat::zero();
        let one = Rat::one();
        let interior: Vec<&RootBox> = boxes
            .iter()
            .filter(|b| {
                b.status == BoxStatus::Verified
                    && b.intervals
                        .iter()
                        .all(|iv| iv.lo() > &zero && iv.hi() < &one)
            })
            .collect();
        let mixed: Vec<&Equilibrium> = rep
            .equilibria
            .iter()
            .filter(|e| e.pattern.0.iter().all(|r| *r == Role::Mixed))
            .collect();
        assert_eq!(interior.len(), mixed.len());
        for b in &interior {
            let hits = mixed
                .iter()
                .filter(|e| {
                    e.coords.iter().zip(&b.intervals).all(|(c, iv)| match c {
                        EqCoord::Mixed(m) => m.intersect(iv).is_some(),
                        _ => false,
                    })
                })
                .count();
            assert_eq!(hits, 1);
        }
    }

    #[test]
    fn zero_game_reports_degenerate() {
        let c = CoeffVector::zero(2).unwrap();
        let rep = enumerate_ne(&c, 64).unwrap();
        assert!(!rep.complete);
        assert!(!rep.degenerate_patterns.is_empty());
        let pure_count = rep
            .equilibria
            .iter()
            .filter(|e| e.pattern.0.iter().all(|r| *r != Role::Mixed))
            .count();
        assert_eq!(pure_count, 4);
    }

    #[test]
    fn exact_sign_queries_at_anchor_box() {
        let c = anchor_coeffs(4).unwrap();
        let mut fs = full_solve(&c, 64).unwrap();
        let f1 = c.system().f[0].clone();
        assert_eq!(fs.exact_sign_at(0, &f1).unwrap(), 0);
        let one = MultiAffine::constant(4, Rat::one());
        assert_eq!(fs.exact_sign_at(0, &one).unwrap(), 1);
        let mut x1_minus_q = MultiAffine::zero(4);
        x1_minus_q.coeffs[0b0001] = Rat::one();
        x1_minus_q.coeffs[0] = rat(-1, 4);
        assert_eq!(fs.exact_sign_at(0, &x1_minus_q).unwrap(), 1);
    }
}
