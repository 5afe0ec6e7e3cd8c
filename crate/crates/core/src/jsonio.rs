//! JSON encoding and parsing for games, polynomials, reports, and bundles.
//!
//! Rationals and big integers travel as decimal strings ("22/7", "-3");
//! polynomials as arrays of coefficient strings with index = power. Player
//! indices and subset members are 1-based on the wire, bitmasks internally.

use serde_json::{json, Map, Value};

use crate::certifier::{
    EvidenceRole, GaloisCertificate, GaloisVerdict, InstanceCertificate, IrreducibilityVerdict,
};
use crate::game::{CoeffVector, PayoffTensor};
use crate::rat::{format_rat, parse_int, parse_rat, Int, Rat};
use crate::solver::{Eliminant, EqCoord, Equilibrium, NEReport, SupportPattern};
use crate::unipoly::IntPoly;
use crate::{Error, Result};

fn bad(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn as_obj<'a>(v: &'a Value, what: &str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| bad(format!("{what}: expected an object")))
}

fn as_arr<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| bad(format!("{what}: expected an array")))
}

fn as_str<'a>(v: &'a Value, what: &str) -> Result<&'a str> {
    v.as_str().ok_or_else(|| bad(format!("{what}: expected a string")))
}

fn as_usize(v: &Value, what: &str) -> Result<usize> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| bad(format!("{what}: expected a nonnegative integer")))
}

fn field<'a>(m: &'a Map<String, Value>, key: &str) -> Result<&'a Value> {
    m.get(key).ok_or_else(|| bad(format!("missing field \"{key}\"")))
}

pub fn rat_to_json(x: &Rat) -> Value {
    Value::String(format_rat(x))
}

pub fn rat_from_json(v: &Value) -> Result<Rat> {
    parse_rat(as_str(v, "rational")?)
}

pub fn int_to_json(x: &Int) -> Value {
    Value::String(x.to_string())
}

pub fn poly_to_json(p: &IntPoly) -> Value {
    if p.is_zero() {
        return json!(["0"]);
    }
    Value::Array(p.coeffs().iter().map(int_to_json).collect())
}

pub fn poly_from_json(v: &Value) -> Result<IntPoly> {
    let arr = as_arr(v, "polynomial")?;
    let mut c = Vec::with_capacity(arr.len());
    for x in arr {
        c.push(parse_int(as_str(x, "polynomial coefficient")?)?);
    }
    Ok(IntPoly::new(c))
}

fn mask_to_players(mask: u32) -> Vec<Value> {
    let mut out = vec![];
    let mut mm = mask;
    while mm != 0 {
        let j = mm.trailing_zeros();
        out.push(json!(j + 1));
        mm &= mm - 1;
    }
    out
}

fn players_to_mask(v: &Value, n: usize) -> Result<u32> {
    let arr = as_arr(v, "subset")?;
    let mut mask = 0u32;
    for x in arr {
        let j = as_usize(x, "subset member")?;
        if j < 1 || j > n {
            return Err(bad(format!("subset member {j} out of range 1..={n}")));
        }
        let bit = 1u32 << (j - 1);
        if mask & bit != 0 {
            return Err(bad(format!("subset member {j} repeated")));
        }
        mask |= bit;
    }
    Ok(mask)
}

/// Game as {"n", "coeffs": [{"i", "s", "v"}]} with players 1-based and every
/// legal (i, s) pair present exactly once.
pub fn coeffs_to_json(c: &CoeffVector) -> Value {
    let entries: Vec<Value> = c
        .entries()
        .map(|(i, mask, v)| {
            json!({
                "i": i + 1,
                "s": mask_to_players(mask),
                "v": format_rat(v),
            })
        })
        .collect();
    json!({ "n": c.n(), "coeffs": entries })
}

pub fn coeffs_from_json(v: &Value) -> Result<CoeffVector> {
    let m = as_obj(v, "game")?;
    let n = as_usize(field(m, "n")?, "n")?;
    let mut c = CoeffVector::zero(n)?;
    let entries = as_arr(field(m, "coeffs")?, "coeffs")?;
    if entries.len() != c.num_entries() {
        return Err(bad(format!(
            "expected {} coefficient entries, found {}",
            c.num_entries(),
            entries.len()
        )));
    }
    let mut seen = vec![false; c.num_entries()];
    for e in entries {
        let eo = as_obj(e, "coefficient entry")?;
        let i = as_usize(field(eo, "i")?, "player index")?;
        if i < 1 || i > n {
            return Err(bad(format!("player index {i} out of range 1..={n}")));
        }
        let i = i - 1;
        let mask = players_to_mask(field(eo, "s")?, n)?;
        if mask & (1 << i) != 0 {
            return Err(bad(format!(
                "subset of player {} must not contain the player itself",
                i + 1
            )));
        }
        let val = parse_rat(as_str(field(eo, "v")?, "coefficient value")?)?;
        let key = (i << (n - 1)) | crate::game::compress_mask(i, mask) as usize;
        if seen[key] {
            return Err(bad(format!("duplicate entry for player {}", i + 1)));
        }
        seen[key] = true;
        c.set(i, mask, val);
    }
    Ok(c)
}

/// Tensor as {"n", "M", "u": [{"i", "a", "v"}]} over all n·2^n cells, with
/// "a" the pure profile as a 0/1 vector indexed by player.
pub fn tensor_to_json(t: &PayoffTensor) -> Value {
    let mut cells = vec![];
    for i in 0..t.n {
        for a in 0..(1u32 << t.n) {
            let bits: Vec<Value> = (0..t.n).map(|j| json!((a >> j) & 1)).collect();
            cells.push(json!({
                "i": i + 1,
                "a": bits,
                "v": t.get(i, a).to_string(),
            }));
        }
    }
    json!({ "n": t.n, "M": t.m.to_string(), "u": cells })
}

pub fn tensor_from_json(v: &Value) -> Result<PayoffTensor> {
    let m = as_obj(v, "tensor")?;
    let n = as_usize(field(m, "n")?, "n")?;
    if !(2..=16).contains(&n) {
        return Err(bad(format!("player count {n} out of range")));
    }
    let big_m = parse_int(as_str(field(m, "M")?, "M")?)?;
    let cells = as_arr(field(m, "u")?, "u")?;
    let total = n << n;
    if cells.len() != total {
        return Err(bad(format!(
            "expected {total} payoff cells, found {}",
            cells.len()
        )));
    }
    let mut u = vec![None; total];
    for cell in cells {
        let co = as_obj(cell, "payoff cell")?;
        let i = as_usize(field(co, "i")?, "player index")?;
        if i < 1 || i > n {
            return Err(bad(format!("player index {i} out of range 1..={n}")));
        }
        let bits = as_arr(field(co, "a")?, "profile")?;
        if bits.len() != n {
            return Err(bad("profile length != n".to_string()));
        }
        let mut a = 0u32;
        for (j, b) in bits.iter().enumerate() {
            match b.as_u64() {
                Some(0) => {}
                Some(1) => a |= 1 << j,
                _ => return Err(bad("profile entries must be 0 or 1".to_string())),
            }
        }
        let val = parse_int(as_str(field(co, "v")?, "payoff value")?)?;
        let k = ((i - 1) << n) | a as usize;
        if u[k].is_some() {
            return Err(bad(format!("duplicate payoff cell for player {i}")));
        }
        u[k] = Some(val);
    }
    Ok(PayoffTensor {
        n,
        m: big_m,
        u: u.into_iter().map(|x| x.unwrap()).collect(),
    })
}

fn interval_to_json(lo: &Rat, hi: &Rat) -> Value {
    json!([format_rat(lo), format_rat(hi)])
}

pub fn ne_report_to_json(r: &NEReport) -> Value {
    let eqs: Vec<Value> = r
        .equilibria
        .iter()
        .map(|eq| {
            let coords: Vec<Value> = eq
                .coords
                .iter()
                .map(|c| match c {
                    EqCoord::Pure(v) => rat_to_json(v),
                    EqCoord::Mixed(iv) => interval_to_json(iv.lo(), iv.hi()),
                })
                .collect();
            json!({ "pattern": eq.pattern.label(), "coords": coords })
        })
        .collect();
    let degen: Vec<Value> = r
        .degenerate_patterns
        .iter()
        .map(|p| Value::String(p.label()))
        .collect();
    json!({
        "equilibria": eqs,
        "complete": r.complete,
        "degenerate_patterns": degen,
    })
}

pub fn ne_report_from_json(v: &Value) -> Result<NEReport> {
    let m = as_obj(v, "ne report")?;
    let mut equilibria = vec![];
    for eq in as_arr(field(m, "equilibria")?, "equilibria")? {
        let eo = as_obj(eq, "equilibrium")?;
        let pattern = SupportPattern::parse(as_str(field(eo, "pattern")?, "pattern")?)?;
        let mut coords = vec![];
        for c in as_arr(field(eo, "coords")?, "coords")? {
            match c {
                Value::String(s) => coords.push(EqCoord::Pure(parse_rat(s)?)),
                Value::Array(pair) if pair.len() == 2 => {
                    let lo = parse_rat(as_str(&pair[0], "interval end")?)?;
                    let hi = parse_rat(as_str(&pair[1], "interval end")?)?;
                    if lo > hi {
                        return Err(bad("inverted coordinate interval".to_string()));
                    }
                    coords.push(EqCoord::Mixed(crate::interval::Interval::new(lo, hi)));
                }
                _ => return Err(bad("coordinate must be a rational or a pair".to_string())),
            }
        }
        equilibria.push(Equilibrium { pattern, coords });
    }
    let complete = field(m, "complete")?
        .as_bool()
        .ok_or_else(|| bad("complete: expected a boolean"))?;
    let mut degenerate_patterns = vec![];
    for p in as_arr(field(m, "degenerate_patterns")?, "degenerate_patterns")? {
        degenerate_patterns.push(SupportPattern::parse(as_str(p, "pattern")?)?);
    }
    Ok(NEReport {
        equilibria,
        complete,
        degenerate_patterns,
    })
}

pub fn eliminants_to_json(elims: &[Eliminant]) -> Value {
    Value::Array(
        elims
            .iter()
            .map(|e| {
                json!({
                    "player": e.player + 1,
                    "poly": poly_to_json(&e.poly),
                    "provenance": e.provenance,
                })
            })
            .collect(),
    )
}

pub fn eliminants_from_json(v: &Value) -> Result<Vec<Eliminant>> {
    let mut out = vec![];
    for e in as_arr(v, "eliminants")? {
        let eo = as_obj(e, "eliminant")?;
        let player = as_usize(field(eo, "player")?, "player")?;
        if player < 1 {
            return Err(bad("player indices are 1-based".to_string()));
        }
        out.push(Eliminant {
            player: player - 1,
            poly: poly_from_json(field(eo, "poly")?)?,
            provenance: as_str(field(eo, "provenance")?, "provenance")?.to_string(),
        });
    }
    Ok(out)
}

fn role_str(r: &EvidenceRole) -> &'static str {
    match r {
        EvidenceRole::TransitivityDCycle => "transitivity_d_cycle",
        EvidenceRole::JordanQCycle => "jordan_q_cycle",
        EvidenceRole::OddPermutation => "odd_permutation",
    }
}

pub fn galois_to_json(g: &GaloisCertificate) -> Value {
    let ev: Vec<Value> = g
        .evidence
        .iter()
        .map(|e| {
            json!({
                "prime": e.prime,
                "cycle_type": e.cycle_type,
                "role": role_str(&e.role),
            })
        })
        .collect();
    json!({
        "poly": poly_to_json(&g.poly),
        "degree": g.degree,
        "evidence": ev,
        "verdict": match g.verdict {
            GaloisVerdict::CertifiedSymmetric => "CertifiedSymmetric",
            GaloisVerdict::Inconclusive => "Inconclusive",
        },
        "discriminant_nonsquare": g.discriminant_nonsquare,
        "primes_scanned": g.primes_scanned,
    })
}

pub fn irreducibility_to_json(v: &IrreducibilityVerdict) -> Value {
    match v {
        IrreducibilityVerdict::Irreducible { witness_prime } => {
            json!({ "verdict": "Irreducible", "witness_prime": witness_prime })
        }
        IrreducibilityVerdict::Reducible { factor } => {
            json!({ "verdict": "Reducible", "factor": poly_to_json(factor) })
        }
        IrreducibilityVerdict::Inconclusive => json!({ "verdict": "Inconclusive" }),
    }
}

pub fn certificate_to_json(c: &InstanceCertificate) -> Value {
    let clauses: Vec<Value> = c
        .clauses
        .iter()
        .map(|(name, ok)| json!({ "clause": name, "pass": ok }))
        .collect();
    json!({
        "pass": c.passes(),
        "clauses": clauses,
        "density": c.density.iter().map(|d| json!({
            "degree": d.poly.deg().unwrap_or(0),
            "zero_indices": d.zero_indices,
            "dense": d.dense(),
        })).collect::<Vec<_>>(),
        "irreducibility": c.irreducibility.iter().map(irreducibility_to_json).collect::<Vec<_>>(),
        "galois": c.galois.iter().map(galois_to_json).collect::<Vec<_>>(),
        "irradical": c.irradical,
    })
}

pub fn provenance_to_json(p: &crate::pipeline::Provenance) -> Value {
    json!({
        "seed": p.seed,
        "resamples": p.resamples,
        "shifts": p.shifts.iter()
            .map(|lam| lam.iter().map(rat_to_json).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
        "failures": p.failures.iter()
            .map(|(cause, count)| json!({ "cause": cause, "count": count }))
            .collect::<Vec<_>>(),
    })
}

pub fn bundle_to_json(b: &crate::pipeline::InstanceBundle) -> Value {
    json!({
        "game": coeffs_to_json(&b.coeffs),
        "tensor": tensor_to_json(&b.tensor),
        "eliminants": eliminants_to_json(&b.eliminants),
        "ne": ne_report_to_json(&b.ne),
        "certificate": certificate_to_json(&b.certificate),
        "provenance": provenance_to_json(&b.provenance),
    })
}

pub fn verify_report_to_json(r: &crate::pipeline::VerifyReport) -> Value {
    json!({
        "eliminants": eliminants_to_json(&r.eliminants),
        "ne": ne_report_to_json(&r.ne),
        "certificate": certificate_to_json(&r.certificate),
    })
}

/// Accepts a game in any supported container: a bare coefficient object, a
/// payoff tensor (converted through the advantage form), or a bundle.
pub fn game_from_json(v: &Value) -> Result<CoeffVector> {
    let m = as_obj(v, "input")?;
    if m.contains_key("coeffs") {
        return coeffs_from_json(v);
    }
    if m.contains_key("u") && m.contains_key("M") {
        let t = tensor_from_json(v)?;
        return crate::game::advantage_from_payoffs(&t);
    }
    if let Some(game) = m.get("game") {
        return coeffs_from_json(game);
    }
    Err(bad(
        "input is neither a game, a payoff tensor, nor a bundle".to_string(),
    ))
}

/// Accepts a polynomial either as a bare coefficient array or wrapped as
/// {"poly": [...]}.
pub fn any_poly_from_json(v: &Value) -> Result<IntPoly> {
    match v {
        Value::Array(_) => poly_from_json(v),
        Value::Object(m) => poly_from_json(field(m, "poly")?),
        _ => Err(bad("polynomial: expected an array or an object".to_string())),
    }
}

pub fn game_from_str(s: &str) -> Result<CoeffVector> {
    game_from_json(&serde_json::from_str(s)?)
}

pub fn any_poly_from_str(s: &str) -> Result<IntPoly> {
    any_poly_from_json(&serde_json::from_str(s)?)
}

/// Standalone single-polynomial report: density, irreducibility, and Galois
/// certification, with the combined pass flag.
pub fn galois_report_to_json(
    density: &crate::certifier::DensityReport,
    irr: &IrreducibilityVerdict,
    gal: &GaloisCertificate,
) -> Value {
    let pass = density.dense()
        && matches!(irr, IrreducibilityVerdict::Irreducible { .. })
        && gal.verdict == GaloisVerdict::CertifiedSymmetric;
    json!({
        "density": {
            "degree": density.poly.deg().unwrap_or(0),
            "zero_indices": density.zero_indices,
            "dense": density.dense(),
        },
        "irreducibility": irreducibility_to_json(irr),
        "galois": galois_to_json(gal),
        "pass": pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{anchor_coeffs, payoffs_from_advantage, perturb};
    use crate::rat::rat;
    use crate::solver::enumerate_ne;

    #[test]
    fn poly_round_trip() {
        let p = IntPoly::from_i64(&[-1, -1, 0, 0, 0, 0, 0, 0, 0, 1]);
        let v = poly_to_json(&p);
        assert_eq!(v, json!(["-1", "-1", "0", "0", "0", "0", "0", "0", "0", "1"]));
        assert_eq!(poly_from_json(&v).unwrap(), p);
        assert_eq!(poly_to_json(&IntPoly::zero()), json!(["0"]));
    }

    #[test]
    fn coeffs_round_trip_and_layout() {
        let c = perturb(&anchor_coeffs(3).unwrap(), 16, &rat(1, 4), 9).unwrap();
        let v = coeffs_to_json(&c);
        let back = coeffs_from_json(&v).unwrap();
        assert_eq!(back, c);
        // the anchor entry c_{1,{2}} = 2 lands at i=1, s=[2] on the wire
        let a = coeffs_to_json(&anchor_coeffs(3).unwrap());
        let entries = a["coeffs"].as_array().unwrap();
        let hit = entries
            .iter()
            .find(|e| e["i"] == json!(1) && e["s"] == json!([2]))
            .unwrap();
        assert_eq!(hit["v"], json!("2"));
    }

    #[test]
    fn tensor_round_trip() {
        let c = perturb(&anchor_coeffs(3).unwrap(), 16, &rat(1, 4), 9).unwrap();
        let t = payoffs_from_advantage(&c.system());
        let v = tensor_to_json(&t);
        assert_eq!(tensor_from_json(&v).unwrap(), t);
    }

    #[test]
    fn ne_report_round_trip() {
        let c = anchor_coeffs(4).unwrap();
        let r = enumerate_ne(&c, 64).unwrap();
        let v = ne_report_to_json(&r);
        let back = ne_report_from_json(&v).unwrap();
        assert_eq!(back.complete, r.complete);
        assert_eq!(back.equilibria.len(), 1);
        assert_eq!(back.equilibria[0].pattern.label(), "MMMM");
    }

    #[test]
    fn malformed_inputs_rejected() {
        assert!(coeffs_from_json(&json!({"n": 3, "coeffs": []})).is_err());
        assert!(coeffs_from_json(&json!({"n": 3})).is_err());
        assert!(poly_from_json(&json!(["1", "x"])).is_err());
        let mut v = coeffs_to_json(&anchor_coeffs(3).unwrap());
        // corrupt one subset with the player's own index
        v["coeffs"][0]["s"] = json!([1]);
        assert!(coeffs_from_json(&v).is_err());
    }
}
