use std::hint::black_box;
use std::time::Instant;

use ghm_core::chordal::{chordal_diameter, chordal_ecc_plus_one};
use ghm_core::fixtures::king;
use ghm_core::helly::{helly_radius, SampleParams};
use ghm_core::oracles::generate::{random_chordal, random_split};
use ghm_core::split::{disjoint_set, Kernel, SetFamily, SparseSplit};
use ghm_core::{eccentricities_bruteforce, Graph};

use crate::args::{BenchArgs, Suite};

/// Median wall time in milliseconds over `runs` calls.
pub fn median_ms(runs: usize, mut f: impl FnMut()) -> f64 {
    let mut times: Vec<f64> = (0..runs.max(1))
        .map(|_| {
            let t = Instant::now();
            f();
            t.elapsed().as_secs_f64() * 1e3
        })
        .collect();
    times.sort_by(f64::total_cmp);
    times[times.len() / 2]
}

pub fn run(a: &BenchArgs) -> anyhow::Result<()> {
    println!("n,m,algo,median_ms");
    let row = |g: &Graph, algo: &str, ms: f64| println!("{},{},{algo},{ms:.3}", g.n(), g.m());
    for &n in &a.sizes {
        match a.suite {
            Suite::King => {
                let side = (n as f64).sqrt().ceil() as usize;
                let g = king(side, side);
                let p = SampleParams::with_seed(a.seed);
                row(
                    &g,
                    "helly_radius",
                    median_ms(a.runs, || {
                        black_box(helly_radius(&g, &p).unwrap());
                    }),
                );
                if g.n() <= a.brute_limit {
                    row(
                        &g,
                        "bruteforce",
                        median_ms(a.runs, || {
                            black_box(eccentricities_bruteforce(&g).unwrap());
                        }),
                    );
                }
            }
            Suite::Chordal => {
                let g = random_chordal(n, a.seed, 4, 0.5);
                let p = SampleParams::with_seed(a.seed);
                row(
                    &g,
                    "chordal_ecc_plus_one",
                    median_ms(a.runs, || {
                        black_box(chordal_ecc_plus_one(&g).unwrap());
                    }),
                );
                row(
                    &g,
                    "chordal_diameter",
                    median_ms(a.runs, || {
                        black_box(chordal_diameter(&g, &p).unwrap());
                    }),
                );
                if g.n() <= a.brute_limit {
                    row(
                        &g,
                        "bruteforce",
                        median_ms(a.runs, || {
                            black_box(eccentricities_bruteforce(&g).unwrap());
                        }),
                    );
                }
            }
            Suite::Split => {
                let g = random_split(n, a.seed);
                let h = SparseSplit::from_graph(&g)?;
                // a shared element rules out early exits, forcing every pair to be scanned
                let sets = h.nbrs.iter().map(|s| {
                    let mut s = s.clone();
                    if !s.contains(&0) {
                        s.insert(0, 0);
                    }
                    s
                });
                let family = SetFamily::new(h.clique.len().max(1), sets.collect());
                for (name, kernel) in [("naive", Kernel::Naive), ("packed", Kernel::Packed)] {
                    row(
                        &g,
                        name,
                        median_ms(a.runs, || {
                            black_box(disjoint_set(&family, kernel));
                        }),
                    );
                }
            }
        }
    }
    Ok(())
}
