//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails. Runs without the libtest harness so the
//! lines are always shown.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use chromatic_core::chromatic::{
    chromatic_polynomial_value, cqf_fundamental_via_orientations, cqf_monomial, csf_schur,
    dual_linear_extensions, hook_coefficient_via_orientations_t, sink_minimal_increasing_labeling,
    sink_profile, verify_e_sink_identity,
};
use chromatic_core::combinatorics::{binomial, kostka, partitions_of, Composition, Partition};
use chromatic_core::graph::{Graph, Labeling, Orientation};
use chromatic_core::poset::{verify_hook_proposition, Poset};
use chromatic_core::symfunc::{
    hook_coefficient_of_f, qsym_f_to_m, qsym_m_to_f, schur_to_fundamental, QuasisymmetricF,
    QuasisymmetricM, SymmetricFunctionM, SymmetricFunctionS,
};
use chromatic_core::tpoly::TPoly;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const LIMIT_GOLDEN: Duration = Duration::from_secs(1);
const LIMIT_CHROMATIC: Duration = Duration::from_secs(10);
const LIMIT_HOOK_N5: Duration = Duration::from_secs(30);
const LIMIT_HOOK_N6: Duration = Duration::from_secs(600);
const LIMIT_HOOK_T: Duration = Duration::from_secs(600);
const ROUND_TRIP_SAMPLES: usize = 1000;
const ROUND_TRIP_SEED: u64 = 0x5eed_c0de;

type Criterion = (&'static str, fn() -> Verdict);

struct Verdict {
    pass: bool,
    detail: String,
}

impl Verdict {
    fn check(pass: bool, detail: impl Into<String>) -> Self {
        Verdict {
            pass,
            detail: detail.into(),
        }
    }
}

fn within(elapsed: Duration, limit: Duration) -> (bool, String) {
    (
        elapsed <= limit,
        format!("{:.2}s, limit {}s", elapsed.as_secs_f64(), limit.as_secs()),
    )
}

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn schur(n: usize, terms: &[(&[usize], i64)]) -> SymmetricFunctionS {
    SymmetricFunctionS::from_terms(n, terms.iter().map(|(l, c)| (p(l), *c))).unwrap()
}

fn criterion_1() -> Verdict {
    let start = Instant::now();
    let claw = csf_schur(&Graph::star(3))
        == schur(4, &[(&[3, 1], 1), (&[2, 2], -1), (&[2, 1, 1], 5), (&[1, 1, 1, 1], 8)]);
    let edgeless = csf_schur(&Graph::empty(3)) == schur(3, &[(&[3], 1), (&[2, 1], 2), (&[1, 1, 1], 1)]);
    let (fast, timing) = within(start.elapsed(), LIMIT_GOLDEN);
    Verdict::check(
        claw && edgeless && fast,
        format!("claw {claw}, edgeless {edgeless}; {timing}"),
    )
}

/// Direct count of maps `V -> {1..k}` with no monochromatic edge.
fn bounded_colorings_oracle(g: &Graph, k: usize) -> u64 {
    let n = g.n();
    if k == 0 {
        return u64::from(n == 0);
    }
    let total = (k as u64).pow(n as u32);
    (0..total)
        .filter(|&code| {
            let color = |v: usize| (code / (k as u64).pow(v as u32 - 1)) % k as u64;
            g.edges().iter().all(|&(u, v)| color(u) != color(v))
        })
        .count() as u64
}

fn criterion_2() -> Verdict {
    let start = Instant::now();
    let p3: Vec<BigInt> = (0..=3).map(|k| chromatic_polynomial_value(&Graph::path(3), k)).collect();
    let golden = p3 == [0, 0, 2, 12].map(BigInt::from);
    let mut mismatches = 0;
    let mut cases = 0;
    for n in 1..=5 {
        for g in Graph::all_labeled(n) {
            for k in 0..=5 {
                cases += 1;
                if chromatic_polynomial_value(&g, k) != BigInt::from(bounded_colorings_oracle(&g, k)) {
                    mismatches += 1;
                }
            }
        }
    }
    let (fast, timing) = within(start.elapsed(), LIMIT_CHROMATIC);
    Verdict::check(
        golden && mismatches == 0 && fast,
        format!("P3 values {p3:?}; {cases} graph/k cases, {mismatches} mismatches; {timing}"),
    )
}

fn hook_mismatches(n_max: usize) -> (usize, usize) {
    let mut graphs = 0;
    let mut bad = 0;
    for n in 1..=n_max {
        for g in Graph::all_labeled(n) {
            graphs += 1;
            let s = csf_schur(&g);
            let profile = sink_profile(&g);
            for k in 1..=n {
                let formula: u64 = (1..=n)
                    .map(|j| binomial(j - 1, k - 1) * profile.count(j))
                    .sum();
                if s.coeff(&Partition::hook(n, k).unwrap()) != BigInt::from(formula) {
                    bad += 1;
                }
            }
        }
    }
    (graphs, bad)
}

fn criterion_3() -> Verdict {
    let start = Instant::now();
    let (small_graphs, small_bad) = hook_mismatches(5);
    let small_elapsed = start.elapsed();
    let (graphs, bad) = hook_mismatches(6);
    let elapsed = start.elapsed();
    let (small_fast, small_timing) = within(small_elapsed, LIMIT_HOOK_N5);
    let (fast, timing) = within(elapsed, LIMIT_HOOK_N6);
    Verdict::check(
        small_bad == 0 && bad == 0 && small_fast && fast,
        format!(
            "n<=5: {small_graphs} graphs, {small_bad} mismatches ({small_timing}); \
             n<=6: {graphs} graphs, {bad} mismatches ({timing})"
        ),
    )
}

fn criterion_4() -> Verdict {
    let start = Instant::now();
    let mut cases = 0;
    let mut bad = 0;
    for n in 1..=5 {
        let labelings: Vec<Labeling> = Labeling::all(n).collect();
        for g in Graph::all_labeled(n) {
            for zeta in &labelings {
                cases += 1;
                let via_o = cqf_fundamental_via_orientations(&g, zeta).unwrap();
                let via_m = qsym_m_to_f(&cqf_monomial(&g, zeta).unwrap());
                for k in 1..=n {
                    let a = hook_coefficient_of_f(&via_o, k).unwrap();
                    let b = hook_coefficient_via_orientations_t(&g, zeta, k).unwrap();
                    let c = hook_coefficient_of_f(&via_m, k).unwrap();
                    if a != b || b != c {
                        bad += 1;
                    }
                }
            }
        }
    }
    let (fast, timing) = within(start.elapsed(), LIMIT_HOOK_T);
    Verdict::check(
        bad == 0 && fast,
        format!("{cases} graph/labeling pairs, {bad} mismatching hooks; {timing}"),
    )
}

fn criterion_5() -> Verdict {
    let mut orientations = 0;
    let mut bad = 0;
    for n in 1..=5 {
        for g in Graph::all_labeled(n) {
            for o in g.acyclic_orientations() {
                orientations += 1;
                let omega = sink_minimal_increasing_labeling(&o).unwrap();
                let words = dual_linear_extensions(&o, &omega).unwrap();
                for k in 1..=n {
                    let target: Vec<usize> = (1..=n - k).collect();
                    let count = words.iter().filter(|s| s.descent_set() == target).count() as u64;
                    if count != binomial(o.sinks() - 1, k - 1) {
                        bad += 1;
                    }
                }
            }
        }
    }
    Verdict::check(bad == 0, format!("{orientations} orientations, {bad} mismatches"))
}

fn criterion_6() -> Verdict {
    let mut graphs = 0;
    let mut failed = 0;
    for n in 1..=6 {
        for g in Graph::all_labeled(n) {
            graphs += 1;
            if !verify_e_sink_identity(&g).passed() {
                failed += 1;
            }
        }
    }
    Verdict::check(failed == 0, format!("{graphs} graphs, {failed} failures"))
}

fn has_induced_claw(g: &Graph) -> bool {
    !g.is_claw_free()
}

fn criterion_7() -> Verdict {
    let mut posets = 0;
    let mut failed = 0;
    let mut with_claw = 0;
    for n in 1..=5 {
        for p in Poset::all(n) {
            posets += 1;
            if has_induced_claw(&p.incomparability_graph()) {
                with_claw += 1;
            }
            if !verify_hook_proposition(&p).passed() {
                failed += 1;
            }
        }
    }
    Verdict::check(
        failed == 0 && with_claw > 0,
        format!("{posets} posets ({with_claw} with a claw in the incomparability graph), {failed} failures"),
    )
}

fn criterion_8() -> Verdict {
    let mut shapes = 0;
    let mut bad = 0;
    for n in 1..=6 {
        for lambda in partitions_of(n) {
            shapes += 1;
            let mut expected = SymmetricFunctionM::zero(n);
            for mu in partitions_of(n) {
                let k = kostka(&lambda, mu.parts()).unwrap();
                expected.add_term(mu, &BigInt::from(k)).unwrap();
            }
            let m = qsym_f_to_m(&schur_to_fundamental(&lambda));
            if m.to_symmetric().as_ref() != Some(&expected) {
                bad += 1;
            }
        }
    }
    Verdict::check(bad == 0, format!("{shapes} shapes, {bad} mismatches"))
}

fn criterion_9() -> Verdict {
    let g = Graph::path(4);
    let o = Orientation::from_arcs(&g, &[(2, 1), (2, 3), (3, 4)]).unwrap();
    let omega = sink_minimal_increasing_labeling(&o).unwrap();
    let words: Vec<String> = dual_linear_extensions(&o, &omega)
        .unwrap()
        .iter()
        .map(ToString::to_string)
        .collect();
    Verdict::check(
        words == ["4321", "4312", "4132"],
        format!("omega {:?}, extensions {}", omega.labels(), words.join(" ")),
    )
}

fn random_composition(rng: &mut ChaCha8Rng, n: usize) -> Composition {
    let mask: u64 = rng.gen_range(0..1u64 << (n - 1));
    let set: Vec<usize> = (1..n).filter(|i| mask & (1 << (i - 1)) != 0).collect();
    Composition::from_descent_set(&set, n).unwrap()
}

fn random_tpoly(rng: &mut ChaCha8Rng) -> TPoly {
    let len = rng.gen_range(1..=4);
    let coeffs: Vec<i64> = (0..len).map(|_| rng.gen_range(-1_000_000..=1_000_000)).collect();
    TPoly::from_counts(&coeffs)
}

fn cli(args: &[&str]) -> (i32, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_chromsym"))
        .args(args)
        .output()
        .expect("binary runs");
    (out.status.code().unwrap_or(-1), out.stdout)
}

fn criterion_10() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(ROUND_TRIP_SEED);
    let mut bad = 0;
    for _ in 0..ROUND_TRIP_SAMPLES {
        let n = rng.gen_range(1..=7);
        let terms = rng.gen_range(1..=6);
        let pairs: Vec<(Composition, TPoly)> = (0..terms)
            .map(|_| (random_composition(&mut rng, n), random_tpoly(&mut rng)))
            .collect();
        let m = QuasisymmetricM::from_terms(n, pairs.iter().cloned()).unwrap();
        let f = QuasisymmetricF::from_terms(n, pairs).unwrap();
        if qsym_f_to_m(&qsym_m_to_f(&m)) != m || qsym_m_to_f(&qsym_f_to_m(&f)) != f {
            bad += 1;
        }
    }

    let dir = tempfile::tempdir().unwrap();
    let p4 = dir.path().join("p4.txt");
    std::fs::write(&p4, "1 2\n2 3\n3 4\n").unwrap();
    let claw = dir.path().join("claw.json");
    std::fs::write(&claw, r#"{"n": 4, "edges": [[1, 2], [1, 3], [1, 4]]}"#).unwrap();
    let (p4, claw) = (p4.to_str().unwrap(), claw.to_str().unwrap());
    let runs: Vec<Vec<&str>> = vec![
        vec!["expand", claw, "--basis", "s"],
        vec!["expand", claw, "--basis", "e", "--json"],
        vec!["cqf", p4, "--verbose", "--t-eval", "1"],
        vec!["cqf", p4, "--labeling", "3,1,4,2", "--json"],
        vec!["verify", claw, "--check", "hook-1"],
        vec!["sweep", "--n-max", "4", "--check", "hook-1,e-sink,hook-t", "--json"],
    ];
    let mut unstable = Vec::new();
    for args in &runs {
        let first = cli(args);
        let second = cli(args);
        if first != second || first.0 != 0 || first.1.is_empty() {
            unstable.push(args.join(" "));
        }
    }
    // output must not depend on the worker count either
    let one = cli(&["sweep", "--n-max", "5", "--check", "e-sink", "--jobs", "1"]);
    let four = cli(&["sweep", "--n-max", "5", "--check", "e-sink", "--jobs", "4"]);
    if one != four {
        unstable.push("sweep --jobs 1 vs --jobs 4".into());
    }
    Verdict::check(
        bad == 0 && unstable.is_empty(),
        format!(
            "{ROUND_TRIP_SAMPLES} round trips, {bad} failures; {} CLI commands rerun, unstable: {:?}",
            runs.len() + 1,
            unstable
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("golden Schur expansions", criterion_1),
        ("chromatic polynomial specialization", criterion_2),
        ("Schur hook coefficients from sink counts, n <= 6", criterion_3),
        ("t-graded hook coefficients by three routes, n <= 5, every labeling", criterion_4),
        ("descent-set counts over dual linear extensions", criterion_5),
        ("elementary coefficients against sink counts, n <= 6", criterion_6),
        ("P-tableaux of hook shape, posets <= 5", criterion_7),
        ("Schur functions in the fundamental basis, n <= 6", criterion_8),
        ("path orientation extensions 4321 4312 4132", criterion_9),
        ("M/F round trips and CLI determinism", criterion_10),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = run();
        let word = if verdict.pass { "PASS" } else { "FAIL" };
        if !verdict.pass {
            failures += 1;
        }
        println!(
            "criterion {:>2}  {word}  {name}: {} [{:.2}s]",
            i + 1,
            verdict.detail,
            start.elapsed().as_secs_f64()
        );
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
