//! Acceptance suite: one test per criterion, each printing a single
//! `[acceptance] criterion N (...): PASS|FAIL` line (visible under
//! `cargo test --test acceptance -- --nocapture`).
//!
//! Every tolerance is pinned in code next to the check it gates.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::Value;

use hyperspec_core::charpoly::{brute_apply, brute_entries, charpoly_n2, ShiftSpectrumReport};
use hyperspec_core::charpoly::{cospectrality_check, shift_spectrum_check};
use hyperspec_core::rng::SplitMix64;
use hyperspec_core::{
    analytic_connectivity, bound_report, cardinality_partition, h_power, product_eigenpair,
    regular_family, spanning_sub, verify_known_pairs, z_shss, EigenPair, Hypergraph, PairKind,
    RegularFamily, SolverConfig, TensorKind, TensorOperator,
};

fn criterion<F: FnOnce()>(number: usize, name: &str, budget: Option<Duration>, body: F) {
    let started = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(body));
    let elapsed = started.elapsed();
    let mut pass = outcome.is_ok();
    let mut note = String::new();
    if let Some(limit) = budget {
        if elapsed > limit {
            pass = false;
            note = format!(" [over budget {limit:?}]");
        }
    }
    println!(
        "[acceptance] criterion {number} ({name}): {} in {:.2?}{note}",
        if pass { "PASS" } else { "FAIL" },
        elapsed
    );
    if let Err(panic) = outcome {
        std::panic::resume_unwind(panic);
    }
    assert!(pass, "criterion {number} exceeded its runtime budget");
}

fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

fn hg(n: usize, edges: &[&[usize]]) -> Hypergraph {
    Hypergraph::new(n, edges.iter().map(|e| e.to_vec())).unwrap()
}

fn five_vertex_fixture() -> Hypergraph {
    hg(5, &[&[1], &[2, 3], &[1, 4, 5]])
}

/// 1. Worked-example reproduction: the order-3 adjacency of the five-vertex
///    fixture is exactly {a_111 = 1, six entries 1/3, six entries 1/2}.
#[test]
fn criterion_01_worked_example_entries() {
    criterion(
        1,
        "worked example entries",
        Some(Duration::from_secs(1)),
        || {
            let op = TensorOperator::new(&five_vertex_fixture(), TensorKind::Adjacency, 3).unwrap();
            let entries: Vec<_> = op.entries().unwrap().collect();
            assert_eq!(entries.len(), 13);

            let mut ones = 0;
            let mut thirds = BTreeSet::new();
            let mut halves = BTreeSet::new();
            for e in &entries {
                let v = e.value.exact().unwrap();
                if *v == rat(1, 1) {
                    assert_eq!(e.indices, vec![1, 1, 1]);
                    ones += 1;
                } else if *v == rat(1, 3) {
                    thirds.insert(e.indices.clone());
                } else if *v == rat(1, 2) {
                    halves.insert(e.indices.clone());
                } else {
                    panic!("unexpected entry value {v}");
                }
            }
            assert_eq!(ones, 1);
            let expected_thirds: BTreeSet<Vec<usize>> = [
                vec![2, 2, 3],
                vec![2, 3, 2],
                vec![2, 3, 3],
                vec![3, 2, 2],
                vec![3, 2, 3],
                vec![3, 3, 2],
            ]
            .into_iter()
            .collect();
            assert_eq!(thirds, expected_thirds);
            let expected_halves: BTreeSet<Vec<usize>> = [
                vec![1, 4, 5],
                vec![1, 5, 4],
                vec![4, 1, 5],
                vec![4, 5, 1],
                vec![5, 1, 4],
                vec![5, 4, 1],
            ]
            .into_iter()
            .collect();
            assert_eq!(halves, expected_halves);
        },
    );
}

fn random_hypergraph(rng: &mut SplitMix64) -> Hypergraph {
    let n = 1 + (rng.next_u64() as usize) % 8;
    let edge_count = (rng.next_u64() as usize) % 6;
    let mut edges: BTreeSet<Vec<usize>> = BTreeSet::new();
    for _ in 0..edge_count {
        let s = 1 + (rng.next_u64() as usize) % 5.min(n);
        let mut edge: BTreeSet<usize> = BTreeSet::new();
        while edge.len() < s {
            edge.insert(1 + (rng.next_u64() as usize) % n);
        }
        edges.insert(edge.into_iter().collect());
    }
    Hypergraph::new(n, edges).unwrap()
}

/// 2. Degree identity on 200 random hypergraphs (n <= 8, cardinalities <= 5,
///    orders <= 6), with exact dense-oracle agreement on the small ones.
#[test]
fn criterion_02_degree_identity() {
    criterion(
        2,
        "degree identity vs dense oracle",
        Some(Duration::from_secs(30)),
        || {
            let mut rng = SplitMix64::new(0xACCE_0002);
            let mut brute_checked = 0usize;
            for _ in 0..200 {
                let h = random_hypergraph(&mut rng);
                let mce = h.mce().unwrap_or(0);
                let m = (mce + (rng.next_u64() as usize) % 3).clamp(2, 6);
                let op = TensorOperator::new(&h, TensorKind::Adjacency, m).unwrap();
                let ones = vec![1.0; h.vertex_count()];
                let y = op.apply(&ones).unwrap();
                for (yi, &d) in y.iter().zip(h.degrees().degrees()) {
                    assert!((yi - d as f64).abs() <= 1e-12, "{yi} vs {d}");
                }

                if h.vertex_count() <= 5 && m <= 4 {
                    brute_checked += 1;
                    // Exact route: dense rational row sums equal the degrees as
                    // integers, with no floating arithmetic involved.
                    let dense = brute_entries(&op).unwrap();
                    let block = dense.len() / h.vertex_count();
                    for v in 1..=h.vertex_count() {
                        let sum: BigRational = dense[(v - 1) * block..v * block].iter().sum();
                        assert_eq!(sum, rat(h.degrees().degree(v) as i64, 1));
                    }
                    // Dense f64 contraction agrees with the fast path.
                    let slow = brute_apply(&op, &ones).unwrap();
                    for (a, b) in y.iter().zip(&slow) {
                        assert!((a - b).abs() <= 1e-12);
                    }
                }
            }
            assert!(
                brute_checked >= 30,
                "only {brute_checked} dense cross-checks"
            );
        },
    );
}

fn regular_fixtures() -> Vec<(Hypergraph, usize)> {
    // (hypergraph, k); order is m.c.e in every case.
    vec![
        (
            regular_family(3, RegularFamily::CompleteGraphPlusFullEdge).unwrap(),
            3,
        ),
        (
            regular_family(4, RegularFamily::CompleteGraphPlusFullEdge).unwrap(),
            4,
        ),
        (regular_family(4, RegularFamily::Cyclic(3)).unwrap(), 3),
        (regular_family(5, RegularFamily::Cyclic(3)).unwrap(), 3),
        (regular_family(5, RegularFamily::Cyclic(4)).unwrap(), 4),
        (regular_family(3, RegularFamily::Cyclic(2)).unwrap(), 2),
        (regular_family(5, RegularFamily::Cyclic(2)).unwrap(), 2),
    ]
}

/// 3. Regular eigenpairs: dominant H-pair (k, 1) and the Z-value
///    k n^{-(m-2)/2} on seven regular fixtures.
#[test]
fn criterion_03_regular_eigenpairs() {
    criterion(
        3,
        "regular eigenpairs",
        Some(Duration::from_secs(10)),
        || {
            let fixtures = regular_fixtures();
            assert!(fixtures.len() >= 5);
            for (h, k) in fixtures {
                assert_eq!(h.degrees().regular_k(), Some(k));
                let m = h.mce().unwrap();
                let n = h.vertex_count();
                let op = TensorOperator::new(&h, TensorKind::Adjacency, m).unwrap();

                let pair = h_power(&op, &SolverConfig::default()).unwrap();
                assert!(
                    (pair.lambda - k as f64).abs() <= 1e-9,
                    "k={k}: {}",
                    pair.lambda
                );
                assert!(pair.residual <= 1e-10);
                for v in &pair.x {
                    assert!((v - 1.0).abs() <= 1e-9);
                }

                let target = k as f64 * (n as f64).powf(-((m as f64 - 2.0) / 2.0));
                let sweep = z_shss(&op, &SolverConfig::default()).unwrap();
                assert!(
                    sweep
                        .pairs
                        .iter()
                        .any(|p| (p.lambda - target).abs() <= 1e-6),
                    "missing Z-value {target} for k={k}, n={n}, m={m}: {:?}",
                    sweep.pairs.iter().map(|p| p.lambda).collect::<Vec<_>>()
                );
                if (n, m, k) == (3, 3, 3) {
                    assert!(sweep
                        .pairs
                        .iter()
                        .any(|p| (p.lambda - 1.7320508).abs() <= 1e-6));
                }
            }
        },
    );
}

fn wide_edge_fixtures() -> Vec<Hypergraph> {
    vec![
        hg(3, &[&[1, 2, 3]]),
        regular_family(4, RegularFamily::Cyclic(3)).unwrap(),
        regular_family(5, RegularFamily::Cyclic(3)).unwrap(),
        hg(5, &[&[1, 2, 3], &[3, 4, 5]]),
        hg(4, &[&[1, 2, 3, 4]]),
        regular_family(5, RegularFamily::Cyclic(4)).unwrap(),
    ]
}

/// 4. Laplacian suite: closed-form pairs certify at 1e-12, the found
///    H-eigenvalues respect [0, 2 max degree], and the form is copositive
///    on 1e4 sampled nonnegative points per fixture.
#[test]
fn criterion_04_laplacian_suite() {
    criterion(4, "laplacian suite", None, || {
        let mut rng = SplitMix64::new(0xACCE_0004);
        for h in wide_edge_fixtures() {
            let m = h.mce().unwrap();
            let op = TensorOperator::new(&h, TensorKind::Laplacian, m).unwrap();

            let report = verify_known_pairs(&op).unwrap();
            assert!(report.all_pass, "known pairs failed on {h:?}");
            for check in &report.checks {
                assert!(check.residual <= 1e-12);
            }

            // The certified pairs are the found H-eigenvalues; instantiate
            // the interval bound on each.
            let n = h.vertex_count();
            let mut pairs = vec![EigenPair {
                lambda: 0.0,
                x: vec![1.0; n],
                kind: PairKind::H,
                residual: 0.0,
                iterations: 0,
                seed: 0,
            }];
            for j in 1..=n {
                let mut x = vec![0.0; n];
                x[j - 1] = 1.0;
                pairs.push(EigenPair {
                    lambda: h.degrees().degree(j) as f64,
                    x,
                    kind: PairKind::H,
                    residual: 0.0,
                    iterations: 0,
                    seed: 0,
                });
            }
            let bounds = bound_report(&op, &pairs);
            assert!(bounds.all_pass);
            let delta = h.degrees().delta_max() as f64;
            for p in &pairs {
                assert!(p.lambda >= -1e-9 && p.lambda <= 2.0 * delta + 1e-9);
            }

            for _ in 0..10_000 {
                let x: Vec<f64> = (0..n).map(|_| rng.next_f64()).collect();
                let value = op.quadratic_form(&x).unwrap();
                assert!(value >= -1e-12, "copositivity violated: {value}");
            }
        }
    });
}

/// 5. Normalized suite: exact stochastic row sums, the (1, 1) dominant pair,
///    normalized-Laplacian eigenvalues inside [0, 2], and 0 as the only
///    strictly-positive-eigenvector value seen.
#[test]
fn criterion_05_normalized_suite() {
    criterion(5, "normalized suite", None, || {
        let fixtures = vec![
            five_vertex_fixture(),
            hg(2, &[&[1, 2]]),
            regular_family(3, RegularFamily::CompleteGraphPlusFullEdge).unwrap(),
            regular_family(4, RegularFamily::Cyclic(3)).unwrap(),
            hg(5, &[&[1, 2, 3], &[3, 4, 5]]),
        ];
        for h in fixtures {
            let m = h.mce().unwrap().max(2);
            let na = TensorOperator::new(&h, TensorKind::NormalizedAdjacency, m).unwrap();
            for sum in na.row_sums_exact().unwrap() {
                assert!(sum.is_one(), "row sum {sum}");
            }
            let pair = h_power(&na, &SolverConfig::default()).unwrap();
            assert!((pair.lambda - 1.0).abs() <= 1e-12);
            for v in &pair.x {
                assert!((v - 1.0).abs() <= 1e-12);
            }

            // Certified normalized-Laplacian pairs: (0, ones) everywhere,
            // plus the full resultant spectrum when n = 2.
            let rw = TensorOperator::new(&h, TensorKind::NormalizedLaplacianRW, m).unwrap();
            let ones = vec![1.0; h.vertex_count()];
            let r = hyperspec_core::h_residual(&rw, 0.0, &ones);
            assert!(r <= 1e-12);
            let mut found = vec![0.0f64];
            if h.vertex_count() == 2 {
                for root in charpoly_n2(&rw).unwrap().flat_roots() {
                    if root.im.abs() <= 1e-10 {
                        found.push(root.re);
                    }
                }
            }
            for lambda in found {
                assert!((-1e-9..=2.0 + 1e-9).contains(&lambda), "lambda {lambda}");
            }
        }

        // Strictly positive eigenvector forces eigenvalue 0. The certified
        // positive-vector pair is (0, ones); on the pair edge at order 3
        // the only other eigenvalue, 4/3, certifies with the mixed-sign
        // eigenvector (-1, 1) and with no positive one.
        let h = hg(2, &[&[1, 2]]);
        let rw = TensorOperator::new(&h, TensorKind::NormalizedLaplacianRW, 3).unwrap();
        assert!(hyperspec_core::h_residual(&rw, 0.0, &[1.0, 1.0]) <= 1e-8);
        let mixed = [-1.0, 1.0];
        assert!(hyperspec_core::h_residual(&rw, 4.0 / 3.0, &mixed) <= 1e-10);
        assert!(mixed.iter().any(|v| *v <= 0.0));

        // Largest nonnegative-eigenvector value of the normalized Laplacian
        // is 1: the basis pairs certify at exactly 1 when every incident
        // edge has three or more vertices.
        let wide = hg(3, &[&[1, 2, 3]]);
        let rw = TensorOperator::new(&wide, TensorKind::NormalizedLaplacianRW, 3).unwrap();
        for j in 0..3 {
            let mut basis = [0.0; 3];
            basis[j] = 1.0;
            assert!(hyperspec_core::h_residual(&rw, 1.0, &basis) <= 1e-12);
        }
    });
}

fn mce3_pool() -> Vec<Hypergraph> {
    vec![
        hg(3, &[&[1, 2, 3]]),
        regular_family(4, RegularFamily::Cyclic(3)).unwrap(),
        regular_family(5, RegularFamily::Cyclic(3)).unwrap(),
        regular_family(3, RegularFamily::CompleteGraphPlusFullEdge).unwrap(),
        hg(5, &[&[1, 2, 3], &[3, 4, 5]]),
        hg(4, &[&[1, 2, 3], &[2, 3, 4]]),
    ]
}

/// 6. Product additivity: assembled pairs certify on the product adjacency
///    at 1e-8 for 20 factor pairs, and product degrees add exactly.
#[test]
fn criterion_06_product_additivity() {
    criterion(6, "product additivity", None, || {
        let pool = mce3_pool();
        let cfg = SolverConfig::default();
        let mut pairs_checked = 0usize;
        'outer: for g in &pool {
            for h in &pool {
                if pairs_checked == 20 {
                    break 'outer;
                }
                let pg = h_power(
                    &TensorOperator::new(g, TensorKind::Adjacency, 3).unwrap(),
                    &cfg,
                )
                .unwrap();
                let ph = h_power(
                    &TensorOperator::new(h, TensorKind::Adjacency, 3).unwrap(),
                    &cfg,
                )
                .unwrap();
                let (assembled, product, map) = product_eigenpair(g, h, &pg, &ph).unwrap();
                assert!((assembled.lambda - (pg.lambda + ph.lambda)).abs() <= 1e-12);
                assert!(
                    assembled.residual <= 1e-8,
                    "residual {} for pair {pairs_checked}",
                    assembled.residual
                );

                let dg = g.degrees();
                let dh = h.degrees();
                let dp = product.degrees();
                for a in 1..=g.vertex_count() {
                    for b in 1..=h.vertex_count() {
                        assert_eq!(dp.degree(map.product_id(a, b)), dg.degree(a) + dh.degree(b));
                    }
                }
                pairs_checked += 1;
            }
        }
        assert_eq!(pairs_checked, 20);
    });
}

/// 7. Dimension-2 oracle: degrees, exact trace identities, cospectrality,
///    and the 1-λ spectral shift for orders 2 through 5.
#[test]
fn criterion_07_dimension_two_oracle() {
    criterion(
        7,
        "dimension-2 resultant oracle",
        Some(Duration::from_secs(5)),
        || {
            let h = hg(2, &[&[1, 2]]);
            for m in 2..=5usize {
                let adj = charpoly_n2(&TensorOperator::new(&h, TensorKind::Adjacency, m).unwrap())
                    .unwrap();
                assert_eq!(adj.degree(), 2 * (m - 1));
                assert_eq!(adj.root_sum_exact(), BigRational::zero());

                let rw = charpoly_n2(
                    &TensorOperator::new(&h, TensorKind::NormalizedLaplacianRW, m).unwrap(),
                )
                .unwrap();
                assert_eq!(rw.degree(), 2 * (m - 1));
                // n (m-1)^{n-1} with n = 2.
                assert_eq!(rw.root_sum_exact(), rat(2 * (m as i64 - 1), 1));

                let co = cospectrality_check(&h, m).unwrap();
                assert!(co.proportional, "m={m}");

                let shift: ShiftSpectrumReport = shift_spectrum_check(&h, m).unwrap();
                assert!(shift.exact_identity, "m={m}");
                assert!(
                    shift.pass,
                    "m={m}: max distance {}",
                    shift.max_root_distance
                );
                assert!(shift.max_root_distance <= 1e-8);
            }
        },
    );
}

fn connectivity_fixtures() -> Vec<(Hypergraph, bool)> {
    vec![
        // Ten connected.
        (hg(3, &[&[1, 2, 3]]), true),
        (hg(5, &[&[1, 2, 3], &[3, 4, 5]]), true),
        (hg(4, &[&[1, 2, 3], &[2, 3, 4]]), true),
        (regular_family(4, RegularFamily::Cyclic(3)).unwrap(), true),
        (regular_family(5, RegularFamily::Cyclic(3)).unwrap(), true),
        (regular_family(6, RegularFamily::Cyclic(3)).unwrap(), true),
        (hg(4, &[&[1, 2, 3, 4]]), true),
        (hg(7, &[&[1, 2, 3, 4], &[4, 5, 6, 7]]), true),
        (
            regular_family(3, RegularFamily::CompleteGraphPlusFullEdge).unwrap(),
            true,
        ),
        (hg(5, &[&[1, 2, 3], &[1, 4, 5]]), true),
        // Ten disconnected (including isolated-vertex cases).
        (hg(6, &[&[1, 2, 3], &[4, 5, 6]]), false),
        (hg(4, &[&[1, 2, 3]]), false),
        (hg(7, &[&[1, 2, 3], &[4, 5, 6, 7]]), false),
        (hg(5, &[&[1, 2, 3]]), false),
        (hg(7, &[&[1, 2, 3], &[4, 5, 6]]), false),
        (hg(8, &[&[1, 2, 3, 4], &[5, 6, 7, 8]]), false),
        (
            hg(5, &[&[1, 2, 3], &[2, 3, 4], &[1, 3, 4], &[1, 2, 4]]),
            false,
        ),
        (hg(7, &[&[1, 2, 3], &[1, 2, 4], &[5, 6, 7]]), false),
        (hg(8, &[&[1, 2, 3, 4, 5], &[6, 7, 8]]), false),
        (hg(8, &[&[1, 2, 3], &[3, 4, 5], &[6, 7, 8]]), false),
    ]
}

/// 8. Analytic connectivity agrees with the component decomposition on all
///    20 fixtures, and the per-vertex minima of the single-edge fixture
///    match a 1e-4 grid oracle.
#[test]
fn criterion_08_connectivity() {
    criterion(
        8,
        "analytic connectivity",
        Some(Duration::from_secs(60)),
        || {
            let cfg = SolverConfig {
                restarts: 8,
                ..SolverConfig::default()
            };
            let fixtures = connectivity_fixtures();
            assert_eq!(fixtures.len(), 20);
            for (h, connected) in &fixtures {
                assert!(h.mce().unwrap() >= 3);
                assert_eq!(h.is_connected(), *connected);
                let result = analytic_connectivity(h, &cfg).unwrap();
                if *connected {
                    assert!(
                        result.alpha_g > 1e-6,
                        "alpha {} on connected {h:?}",
                        result.alpha_g
                    );
                } else {
                    assert!(
                        result.alpha_g <= 1e-8,
                        "alpha {} on disconnected {h:?}",
                        result.alpha_g
                    );
                }
            }

            // Grid oracle for the single-edge fixture at resolution 1e-4.
            let h = hg(3, &[&[1, 2, 3]]);
            let lap = TensorOperator::new(&h, TensorKind::Laplacian, 3).unwrap();
            let result = analytic_connectivity(&h, &cfg).unwrap();
            for j in 1..=3usize {
                let support: Vec<usize> = (0..3).filter(|&i| i != j - 1).collect();
                let mut grid_min = f64::INFINITY;
                let steps = 10_000;
                for k in 0..=steps {
                    let t = k as f64 / steps as f64;
                    let mut x = [0.0f64; 3];
                    x[support[0]] = t.powf(1.0 / 3.0);
                    x[support[1]] = (1.0 - t).powf(1.0 / 3.0);
                    grid_min = grid_min.min(lap.quadratic_form(&x).unwrap());
                }
                let got = result.per_j_values[j - 1];
                assert!(
                    (got - grid_min).abs() <= 1e-4,
                    "slice {j}: {got} vs grid {grid_min}"
                );
            }
        },
    );
}

/// 9. Determinism: two runs with the same seed produce byte-identical
///    `results` payloads, for both solver commands.
#[test]
fn criterion_09_determinism() {
    criterion(9, "seeded determinism", None, || {
        let dir = std::env::temp_dir().join("hyperspec-acceptance");
        std::fs::create_dir_all(&dir).unwrap();
        let file = dir.join("reg3.txt");
        std::fs::write(&file, "3\n1 2\n2 3\n1 3\n1 2 3\n").unwrap();

        for args in [
            vec![
                "eig",
                file.to_str().unwrap(),
                "--kind",
                "adjacency",
                "--type",
                "z",
                "--seed",
                "11",
                "--json",
            ],
            vec![
                "connectivity",
                file.to_str().unwrap(),
                "--seed",
                "11",
                "--json",
            ],
        ] {
            let mut payloads = Vec::new();
            for _ in 0..2 {
                let out = Command::new(env!("CARGO_BIN_EXE_hyperspec"))
                    .args(&args)
                    .output()
                    .unwrap();
                assert!(out.status.success());
                let report: Value =
                    serde_json::from_str(&String::from_utf8(out.stdout).unwrap()).unwrap();
                payloads.push(serde_json::to_string(&report["results"]).unwrap());
            }
            assert_eq!(payloads[0], payloads[1], "args {args:?}");
        }
    });
}

/// Deterministic sweep of the even-order form over the unit sphere; a lower
/// bound for the largest Z-eigenvalue used as simple ground truth.
fn sphere_sweep_max(op: &TensorOperator, steps: usize) -> f64 {
    let n = op.dimension();
    let mut best = f64::NEG_INFINITY;
    let mut x = vec![0.0f64; n];
    sweep_rec(op, &mut x, 0, 1.0, steps, &mut best);
    best
}

fn sweep_rec(
    op: &TensorOperator,
    x: &mut Vec<f64>,
    i: usize,
    remaining: f64,
    steps: usize,
    best: &mut f64,
) {
    let n = op.dimension();
    if i == n - 1 {
        for sign in [-1.0, 1.0] {
            x[i] = sign * remaining.max(0.0).sqrt();
            let v = op.quadratic_form(x).unwrap();
            if v > *best {
                *best = v;
            }
        }
        return;
    }
    for k in 0..=steps {
        let share = k as f64 / steps as f64 * remaining;
        for sign in [-1.0, 1.0] {
            x[i] = sign * share.sqrt();
            sweep_rec(op, x, i + 1, remaining - share, steps, best);
            if share == 0.0 {
                break;
            }
        }
    }
    x[i] = 0.0;
}

fn best_known_zmax(h: &Hypergraph, m: usize, sweep_steps: usize) -> (f64, f64) {
    let op = TensorOperator::new(h, TensorKind::Adjacency, m).unwrap();
    let cfg = SolverConfig {
        restarts: 10,
        ..SolverConfig::default()
    };
    let found = z_shss(&op, &cfg)
        .unwrap()
        .pairs
        .first()
        .map(|p| p.lambda)
        .unwrap_or(f64::NEG_INFINITY);
    let swept = sphere_sweep_max(&op, sweep_steps);
    (found, swept)
}

/// 10. Even-order monotonicity and subadditivity: spanning subhypergraphs
///     cannot raise the largest Z-eigenvalue, and the cardinality partition
///     bounds it from above; dense sphere sweeps ground-truth the solver.
#[test]
fn criterion_10_monotonicity_subadditivity() {
    criterion(10, "even-order Z bounds", None, || {
        // Matrix case: triangle vs a spanning path.
        let tri = regular_family(3, RegularFamily::Cyclic(2)).unwrap();
        let sub = spanning_sub(&tri, &[0, 1]).unwrap();
        assert!(sub.mce_preserved);
        let (tri_found, tri_swept) = best_known_zmax(&tri, 2, 400);
        let (sub_found, sub_swept) = best_known_zmax(&sub.hypergraph, 2, 400);
        assert!(tri_found >= tri_swept - 1e-3, "solver missed the sweep max");
        assert!(sub_found.max(sub_swept) <= tri_found.max(tri_swept) + 1e-8);
        assert!((tri_found - 2.0).abs() <= 1e-8);

        // Order-4 mixed hypergraph: monotonicity and the edge-partition
        // bound through the embedded per-cardinality parts.
        let g = hg(4, &[&[1, 2], &[1, 2, 3, 4]]);
        let m = 4usize;
        let (g_found, g_swept) = best_known_zmax(&g, m, 24);
        assert!(
            g_found >= g_swept - 1e-2,
            "solver {g_found} vs sweep {g_swept}"
        );

        let sub = spanning_sub(&g, &[1]).unwrap(); // keep only {1,2,3,4}
        assert!(sub.mce_preserved);
        let (s_found, s_swept) = best_known_zmax(&sub.hypergraph, m, 24);
        assert!(s_found.max(s_swept) <= g_found.max(g_swept) + 1e-8);

        let parts = cardinality_partition(&g);
        assert_eq!(parts.len(), 2);
        let mut part_sum = 0.0;
        for (_, part) in &parts {
            let (p_found, p_swept) = best_known_zmax(part, m, 24);
            part_sum += p_found.max(p_swept);
        }
        assert!(
            g_found.max(g_swept) <= part_sum + 1e-8,
            "partition bound: {} vs {part_sum}",
            g_found.max(g_swept)
        );

        // Uniform even-order fixture: dropping an edge cannot raise the top
        // Z-value.
        let c = regular_family(5, RegularFamily::Cyclic(4)).unwrap();
        let csub = spanning_sub(&c, &[0, 1, 2, 3]).unwrap();
        assert!(csub.mce_preserved);
        let (c_found, _) = best_known_zmax(&c, 4, 8);
        let (cs_found, _) = best_known_zmax(&csub.hypergraph, 4, 8);
        assert!(cs_found <= c_found + 1e-8);

        // Subadditivity of the top Z-value for an edge-disjoint union (the
        // tensor sum of the two matchings is the 4-cycle): equality case
        // lambda_max(C4) = 1 + 1.
        let m1 = hg(4, &[&[1, 2], &[3, 4]]);
        let m2 = hg(4, &[&[1, 4], &[2, 3]]);
        let union = hg(4, &[&[1, 2], &[3, 4], &[1, 4], &[2, 3]]);
        let (u_found, u_swept) = best_known_zmax(&union, 2, 24);
        let (a_found, a_swept) = best_known_zmax(&m1, 2, 24);
        let (b_found, b_swept) = best_known_zmax(&m2, 2, 24);
        assert!((u_found - 2.0).abs() <= 1e-8);
        assert!(u_found.max(u_swept) <= a_found.max(a_swept) + b_found.max(b_swept) + 1e-8);
    });
}
