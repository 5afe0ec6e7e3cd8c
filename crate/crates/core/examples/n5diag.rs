use std::time::Instant;

use nashdeg::game::{anchor_coeffs, perturb};
use nashdeg::modsys::{prime_charts, CompactSystem, PrimeOutcome};
use nashdeg::primefield::crt_primes;
use nashdeg::rat::{rat, Int};
use nashdeg::rur::rat_reconstruct;
use num::{One, Signed, Zero};

fn main() {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(5);
    let c = perturb(&anchor_coeffs(n).unwrap(), 64, &rat(1, 8), 1).unwrap();
    let f = c.system().f;
    let vars: Vec<usize> = (0..n).collect();
    let sys = CompactSystem::from_multiaffine(&f, &vars);
    let primes = crt_primes(3000);
    let mut modulus = Int::one();
    let mut resid: Vec<Int> = vec![];
    let mut dim_seen = None;
    let t0 = Instant::now();
    let mut gb_total = 0.0f64;
    let mut last_bits: Option<u64> = None;
    for (k, &p) in primes.iter().enumerate() {
        let tg = Instant::now();
        let out = prime_charts(&sys, p);
        gb_total += tg.elapsed().as_secs_f64();
        let pcs = match out {
            PrimeOutcome::Charts(pcs) => pcs,
            PrimeOutcome::BadPrime => {
                println!("prime {k}: bad");
                continue;
            }
            PrimeOutcome::PositiveDim => {
                println!("prime {k}: posdim");
                continue;
            }
        };
        if dim_seen.is_none() {
            dim_seen = Some(pcs.dim);
            println!(
                "dim={} shape0={} (after {:.1}s)",
                pcs.dim,
                pcs.params[0].is_some(),
                t0.elapsed().as_secs_f64()
            );
            resid = vec![Int::zero(); pcs.dim + 1];
        }
        let mp = &pcs.minpoly[0];
        let pi = Int::from(p);
        // CRT push
        let minv = {
            // modular inverse of modulus mod p via extended euclid on i128
            let m = (&modulus % &pi).to_string().parse::<i128>().unwrap();
            let pp = p as i128;
            let (mut a, mut b) = (m.rem_euclid(pp), pp);
            let (mut x0, mut x1) = (1i128, 0i128);
            while b != 0 {
                let q = a / b;
                let t = a - q * b;
                a = b;
                b = t;
                let t = x0 - q * x1;
                x0 = x1;
                x1 = t;
            }
            x0.rem_euclid(pp) as u64
        };
        for (j, r) in resid.iter_mut().enumerate() {
            let target = mp.coeff(j);
            let cur = {
                let v = r.clone() % &pi;
                let v = if v.is_negative() { v + &pi } else { v };
                v.to_string().parse::<u128>().unwrap() as u64
            };
            let delta = (target as u128 + p as u128 - cur as u128) % p as u128;
            let scaled = (delta * minv as u128) % p as u128;
            *r += &modulus * Int::from(scaled as u64);
        }
        modulus *= &pi;
        if (k + 1) % 5 == 0 || k < 3 {
            let all = resid
                .iter()
                .map(|r| rat_reconstruct(r, &modulus))
                .collect::<Option<Vec<_>>>();
            let bits = all.as_ref().map(|v| {
                v.iter()
                    .map(|q| q.numer().bits().max(q.denom().bits()))
                    .max()
                    .unwrap()
            });
            let status = match bits {
                Some(b) => format!("reconstructed maxbits={b}"),
                None => "not yet".into(),
            };
            println!(
                "primes={} gb_avg={:.2}s {status} elapsed={:.1}s",
                k + 1,
                gb_total / (k + 1) as f64,
                t0.elapsed().as_secs_f64()
            );
            if let Some(b) = bits {
                if last_bits == Some(b) && (k + 1) % 5 == 0 {
                    println!("minpoly heights settled: {} bits, {} primes", b, k + 1);
                    break;
                }
                last_bits = Some(b);
            } else {
                last_bits = None;
            }
        }
    }
}
