//! End-to-end synthesis and verification driver.
//!
//! `synthesize` perturbs the anchor game, eliminates, enumerates equilibria,
//! certifies, and resamples deterministically until an instance passes every
//! clause. A density-repair pass translates the strategy space by a small
//! rational vector when eliminant coefficients vanish; candidates are tried
//! over a fixed ladder (±1/q for primes q descending from 97), prechecked by
//! Taylor-shifting the already-computed eliminants, and the shifted game is
//! then re-verified from scratch rather than trusted.

use num::{One, Signed, Zero};

use crate::certifier::{certify_instance, check_dense, count_check, derangement, InstanceCertificate};
use crate::game::{
    advantage_from_payoffs, anchor_coeffs, payoffs_from_advantage, perturb, shift_coeffs,
    CoeffVector, PayoffTensor,
};
use crate::rat::{Int, Rat};
use crate::solver::{analyze, prepare_analysis, Eliminant, NEReport};
use crate::unipoly::UniPoly;
use crate::{Error, Result};

#[derive(Debug, Clone)]
pub struct SynthesisConfig {
    pub n: usize,
    pub seed: u64,
    pub magnitude: Rat,
    pub denom_bound: u64,
    pub max_resamples: usize,
    /// interval tolerance as 2^-tol_bits
    pub tol_bits: u32,
    pub prime_budget: usize,
    pub density_repair: bool,
    /// permits n = 6 (degree-265 eliminants, no runtime guarantee)
    pub allow_large: bool,
}

impl SynthesisConfig {
    pub fn new(n: usize, seed: u64) -> SynthesisConfig {
        SynthesisConfig {
            n,
            seed,
            magnitude: Rat::new(Int::one(), Int::from(8u8)),
            denom_bound: 64,
            max_resamples: 50,
            tol_bits: 64,
            prime_budget: 2000,
            density_repair: true,
            allow_large: false,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.n < 3 {
            return Err(Error::InvalidArg("synthesis needs n >= 3".into()));
        }
        let cap = if self.allow_large { 6 } else { 5 };
        if self.n > cap {
            return Err(Error::InvalidArg(format!(
                "n = {} beyond the supported cap {cap}",
                self.n
            )));
        }
        if self.max_resamples < 1 {
            return Err(Error::InvalidArg("max_resamples must be >= 1".into()));
        }
        if !self.magnitude.is_positive() {
            return Err(Error::InvalidArg("magnitude must be positive".into()));
        }
        if self.denom_bound < 2 {
            return Err(Error::InvalidArg("denom_bound must be >= 2".into()));
        }
        Ok(())
    }
}

/// How one synthesized instance came to be.
#[derive(Debug, Clone)]
pub struct Provenance {
    pub seed: u64,
    /// perturbation attempts consumed, including the successful one
    pub resamples: usize,
    /// λ vectors applied by density repair, in application order
    pub shifts: Vec<Vec<Rat>>,
    /// per-cause counts over the discarded attempts
    pub failures: Vec<(String, usize)>,
}

#[derive(Debug, Clone)]
pub struct InstanceBundle {
    pub coeffs: CoeffVector,
    pub tensor: PayoffTensor,
    pub eliminants: Vec<Eliminant>,
    pub ne: NEReport,
    pub certificate: InstanceCertificate,
    pub provenance: Provenance,
}

/// Everything `verify` reports about a user-supplied game.
#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub eliminants: Vec<Eliminant>,
    pub ne: NEReport,
    pub certificate: InstanceCertificate,
}

/// Runs the solver and certifier stack on a game without mutating it.
pub fn verify_coeffs(c: &CoeffVector, tol_bits: u32, prime_budget: usize) -> Result<VerifyReport> {
    let (eliminants, ne) = analyze(c, tol_bits)?;
    let certificate = certify_instance(c, &eliminants, &ne, prime_budget)?;
    Ok(VerifyReport {
        eliminants,
        ne,
        certificate,
    })
}

enum Attempt {
    Pass(Box<(CoeffVector, Vec<Eliminant>, NEReport, InstanceCertificate, Vec<Vec<Rat>>)>),
    Fail(String),
}

/// Density-repair ladder: ±1/q for primes q from 97 down to 2. Larger q
/// first keeps the translation small, so the shifted game is more likely to
/// stay inside the verified-uniqueness regime.
fn shift_candidates() -> Vec<Rat> {
    let qs = [97u8, 89, 83, 79, 73, 71, 67, 61, 59, 53, 47, 43, 41, 37, 31, 29, 23, 19, 17, 13, 11, 7, 5, 3, 2];
    let mut out = Vec::with_capacity(2 * qs.len());
    for q in qs {
        out.push(Rat::new(Int::one(), Int::from(q)));
        out.push(Rat::new(-Int::one(), Int::from(q)));
    }
    out
}

/// Picks a per-player shift that makes every Taylor-shifted eliminant dense,
/// leaving already-dense players untouched. None when the ladder runs out.
fn pick_shift(eliminants: &[Eliminant]) -> Option<Vec<Rat>> {
    let ladder = shift_candidates();
    let mut lambda = vec![Rat::zero(); eliminants.len()];
    for e in eliminants {
        let dense_at = |l: &Rat| {
            let shifted = UniPoly::from_int_poly(&e.poly).compose_shift(l);
            shifted.coeffs().iter().all(|c| !c.is_zero())
                && shifted.deg() == e.poly.deg()
        };
        if dense_at(&Rat::zero()) {
            continue;
        }
        match ladder.iter().find(|l| dense_at(l)) {
            Some(l) => lambda[e.player] = l.clone(),
            None => return None,
        }
    }
    Some(lambda)
}

fn degrees_ok(eliminants: &[Eliminant], want: &Int) -> bool {
    eliminants
        .iter()
        .all(|e| e.poly.deg().map(|d| Int::from(d as u64)) == Some(want.clone()))
}

fn all_dense(eliminants: &[Eliminant]) -> bool {
    eliminants.iter().all(|e| {
        check_dense(&e.poly)
            .map(|d| d.dense())
            .unwrap_or(false)
    })
}

fn run_attempt(cfg: &SynthesisConfig, c0: CoeffVector) -> Result<Attempt> {
    let want_deg = derangement(cfg.n);
    let mut c = c0;
    let mut shifts: Vec<Vec<Rat>> = vec![];
    loop {
        if !c.full_support() {
            return Ok(Attempt::Fail("full_support".into()));
        }
        let analysis = match prepare_analysis(&c) {
            Ok(a) => a,
            Err(Error::Degenerate(_)) | Err(Error::BudgetExhausted(_)) => {
                return Ok(Attempt::Fail("elimination".into()));
            }
            Err(e) => return Err(e),
        };
        if !degrees_ok(&analysis.eliminants, &want_deg) {
            return Ok(Attempt::Fail("eliminant_degree".into()));
        }
        if !all_dense(&analysis.eliminants) {
            if !cfg.density_repair || shifts.len() >= 5 {
                return Ok(Attempt::Fail("eliminant_dense".into()));
            }
            match pick_shift(&analysis.eliminants) {
                Some(lambda) => {
                    c = shift_coeffs(&c, &lambda)?;
                    shifts.push(lambda);
                    continue;
                }
                None => return Ok(Attempt::Fail("eliminant_dense".into())),
            }
        }
        let (eliminants, ne) = match analysis.enumerate(&c, cfg.tol_bits) {
            Ok(r) => r,
            Err(Error::Degenerate(_)) | Err(Error::BudgetExhausted(_)) => {
                return Ok(Attempt::Fail("enumeration".into()));
            }
            Err(e) => return Err(e),
        };
        if !ne.complete || ne.equilibria.len() != 1 {
            return Ok(Attempt::Fail("ne_unique".into()));
        }
        let certificate = certify_instance(&c, &eliminants, &ne, cfg.prime_budget)?;
        if let Some(first_fail) = certificate.failures().first() {
            return Ok(Attempt::Fail(format!("certificate:{first_fail}")));
        }
        return Ok(Attempt::Pass(Box::new((c, eliminants, ne, certificate, shifts))));
    }
}

pub fn synthesize(cfg: &SynthesisConfig) -> Result<InstanceBundle> {
    cfg.validate()?;
    let anchor = anchor_coeffs(cfg.n)?;
    let mut failures: Vec<(String, usize)> = vec![];
    let mut record = |cause: String| {
        match failures.iter_mut().find(|(c, _)| *c == cause) {
            Some((_, k)) => *k += 1,
            None => failures.push((cause, 1)),
        }
    };
    for attempt in 0..cfg.max_resamples {
        let seed = cfg.seed.wrapping_add(attempt as u64);
        let c = perturb(&anchor, cfg.denom_bound, &cfg.magnitude, seed)?;
        match run_attempt(cfg, c)? {
            Attempt::Pass(parts) => {
                let (c, eliminants, ne, certificate, shifts) = *parts;
                let tensor = payoffs_from_advantage(&c.system());
                check_bundle_identities(&c, &tensor, cfg.n)?;
                return Ok(InstanceBundle {
                    coeffs: c,
                    tensor,
                    eliminants,
                    ne,
                    certificate,
                    provenance: Provenance {
                        seed: cfg.seed,
                        resamples: attempt + 1,
                        shifts,
                        failures,
                    },
                });
            }
            Attempt::Fail(cause) => record(cause),
        }
    }
    let mut msg = format!(
        "no certified instance after {} attempts; failures:",
        cfg.max_resamples
    );
    for (cause, k) in &failures {
        msg.push_str(&format!(" {cause}={k}"));
    }
    Err(Error::BudgetExhausted(msg))
}

/// Cross-checks recorded alongside every bundle: the tensor must reproduce
/// the advantage system scaled by M, and the three count routes must agree.
fn check_bundle_identities(c: &CoeffVector, tensor: &PayoffTensor, n: usize) -> Result<()> {
    let back = advantage_from_payoffs(tensor)?;
    if back.n() != c.n() {
        return Err(Error::Other("tensor round-trip changed n".into()));
    }
    let m = Rat::from_integer(tensor.m.clone());
    for ((i, mask, v), (bi, bmask, bv)) in c.entries().zip(back.entries()) {
        if i != bi || mask != bmask || bv != &(v * &m) {
            return Err(Error::Other(
                "tensor does not reproduce the advantage system times M".into(),
            ));
        }
    }
    if !count_check(n)?.consistent() {
        return Err(Error::Other("count identity cross-check failed".into()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certifier::{GaloisVerdict, IrreducibilityVerdict};
    use crate::rat::rat;

    #[test]
    fn config_validation() {
        assert!(SynthesisConfig::new(2, 1).validate().is_err());
        assert!(SynthesisConfig::new(6, 1).validate().is_err());
        let mut big = SynthesisConfig::new(6, 1);
        big.allow_large = true;
        assert!(big.validate().is_ok());
        let mut zero = SynthesisConfig::new(4, 1);
        zero.max_resamples = 0;
        assert!(zero.validate().is_err());
    }

    #[test]
    fn verify_anchor_fails_degree_only_structurally() {
        let c = anchor_coeffs(4).unwrap();
        let rep = verify_coeffs(&c, 64, 500).unwrap();
        assert!(!rep.certificate.passes());
        assert!(rep
            .certificate
            .failures()
            .contains(&"eliminant_degree".to_string()));
        assert_eq!(rep.ne.equilibria.len(), 1);
        assert!(rep.ne.complete);
        for e in &rep.eliminants {
            assert_eq!(e.poly.deg(), Some(1));
        }
    }

    #[test]
    fn synthesize_n3_quadratic_instance() {
        let cfg = SynthesisConfig::new(3, 1);
        let b = synthesize(&cfg).unwrap();
        assert!(b.certificate.passes());
        assert_eq!(b.ne.equilibria.len(), 1);
        for e in &b.eliminants {
            assert_eq!(e.poly.deg(), Some(2), "deg != !3 for player {}", e.player);
        }
        for v in &b.certificate.irreducibility {
            assert!(matches!(v, IrreducibilityVerdict::Irreducible { .. }));
        }
        for g in &b.certificate.galois {
            assert_eq!(g.verdict, GaloisVerdict::CertifiedSymmetric);
        }
        assert!(!b.certificate.irradical);
        // integer tensor with the recorded clearing multiplier
        assert!(b.tensor.m.is_positive());
        assert_eq!(b.tensor.u.len(), 3 << 3);
        // determinism: the same config reproduces the same bundle
        let b2 = synthesize(&cfg).unwrap();
        assert_eq!(b2.coeffs, b.coeffs);
        assert_eq!(b2.tensor, b.tensor);
        assert_eq!(b2.provenance.resamples, b.provenance.resamples);
    }

    #[test]
    fn synthesized_bundle_reverifies() {
        let b = synthesize(&SynthesisConfig::new(3, 7)).unwrap();
        let rep = verify_coeffs(&b.coeffs, 64, 2000).unwrap();
        assert!(rep.certificate.passes());
        assert_eq!(rep.certificate.clauses, b.certificate.clauses);
    }

    #[test]
    fn oversized_magnitude_records_failures() {
        let mut cfg = SynthesisConfig::new(3, 5);
        cfg.magnitude = rat(8, 1);
        cfg.max_resamples = 4;
        match synthesize(&cfg) {
            Ok(b) => assert!(!b.provenance.failures.is_empty() || b.provenance.resamples >= 1),
            Err(Error::BudgetExhausted(msg)) => {
                assert!(msg.contains('='), "histogram missing: {msg}");
            }
            Err(e) => panic!("unexpected error {e:?}"),
        }
    }

    #[test]
    fn shift_picker_repairs_sparse_eliminant() {
        // t^9 - t - 1 has zero coefficients; a ladder shift must fill them
        let e = Eliminant {
            player: 0,
            poly: crate::unipoly::IntPoly::from_i64(&[-1, -1, 0, 0, 0, 0, 0, 0, 0, 1]),
            provenance: "test".into(),
        };
        let lam = pick_shift(std::slice::from_ref(&e)).unwrap();
        assert!(!lam[0].is_zero());
        let shifted = UniPoly::from_int_poly(&e.poly).compose_shift(&lam[0]);
        assert!(shifted.coeffs().iter().all(|c| !c.is_zero()));
        // an already-dense eliminant is left alone
        let dense = Eliminant {
            player: 0,
            poly: crate::unipoly::IntPoly::from_i64(&[1, 3, 1]),
            provenance: "test".into(),
        };
        assert!(pick_shift(std::slice::from_ref(&dense)).unwrap()[0].is_zero());
    }
}
