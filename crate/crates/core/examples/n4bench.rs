use nashdeg::game::{anchor_coeffs, perturb};
use nashdeg::modsys::CompactSystem;
use nashdeg::rat::rat;
use nashdeg::rur::{solve_charts, RurOptions};

fn main() {
    let n: usize = std::env::args().nth(1).unwrap().parse().unwrap();
    let t0 = std::time::Instant::now();
    let c = perturb(&anchor_coeffs(n).unwrap(), 64, &rat(1, 8), 1).unwrap();
    let vars: Vec<usize> = (0..n).collect();
    let sys = CompactSystem::from_multiaffine(&c.system().f, &vars);
    let cs = solve_charts(&sys, &RurOptions::default()).unwrap();
    let heights: Vec<u64> = cs
        .charts
        .iter()
        .map(|ch| ch.e_int.coeffs().iter().map(|x| x.bits()).max().unwrap_or(0))
        .collect();
    println!(
        "n={} dim={} degs={:?} heights={:?} sf={:?} solve {:?}",
        n,
        cs.dim,
        cs.charts.iter().map(|ch| ch.elim.deg()).collect::<Vec<_>>(),
        heights,
        cs.charts.iter().map(|ch| ch.squarefree).collect::<Vec<_>>(),
        t0.elapsed()
    );
    let t1 = std::time::Instant::now();
    let pts = cs.real_points(cs.shape_center().unwrap(), 64).unwrap();
    println!("real points: {} in {:?}", pts.len(), t1.elapsed());
}
