//! Exit criteria. Run with `cargo test --test acceptance -- --nocapture` to
//! see one PASS/FAIL line per criterion.

mod common;

use std::time::{Duration, Instant};

use lefschetz_zeta::algebra::rational::int;
use lefschetz_zeta::duality::{check_char_identity, check_det_product, symplectic_form};
use lefschetz_zeta::fixtures::{random_action, random_pairing_triple};
use lefschetz_zeta::{
    alexander_from_braid, build_closed_duality_action, is_reciprocal, knot_lefschetz_numbers, parse_braid,
    verify_closed_functional_equation, verify_knot_functional_equation, zeta_from_alexander, AlexanderPoly,
    Matrix, Poly, Rational,
};
use num_traits::Signed;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

struct Outcome {
    id: u8,
    name: &'static str,
    passed: bool,
    detail: String,
}

fn outcome(id: u8, name: &'static str, failures: Vec<String>, elapsed: Duration) -> Outcome {
    let detail = if failures.is_empty() {
        format!("{:.2?}", elapsed)
    } else {
        format!("{:.2?}; {}", elapsed, failures.join("; "))
    };
    Outcome { id, name, passed: failures.is_empty(), detail }
}

fn rationality_bridge() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    for seed in 0..200u64 {
        let a = random_action(&mut ChaCha8Rng::seed_from_u64(seed), 3, 4, 3);
        let series = a.zeta_series(16);
        match a.zeta().series(16) {
            Ok(taylor) if taylor == series => {}
            other => failures.push(format!("seed {seed}: {other:?}")),
        }
    }
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(10) {
        failures.push(format!("runtime {elapsed:.2?} >= 10s"));
    }
    outcome(1, "rationality bridge: exp series = Taylor of rational form (200 actions, 16 terms)", failures, elapsed)
}

fn pairing_identities() -> Outcome {
    let start = Instant::now();
    let lambdas = [int(1), int(2), int(-3)];
    let mut failures = Vec::new();
    for seed in 0..200u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        match random_pairing_triple(&mut rng, 6, 4, &lambdas) {
            Ok(t) => {
                if !check_det_product(&t) {
                    failures.push(format!("seed {seed}: det f · det g ≠ λ^n"));
                }
                if !check_char_identity(&t) {
                    failures.push(format!("seed {seed}: characteristic identity"));
                }
            }
            Err(e) => failures.push(format!("seed {seed}: {e}")),
        }
    }
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(5) {
        failures.push(format!("runtime {elapsed:.2?} >= 5s"));
    }
    outcome(2, "pairing identities (1) and (2) on 200 completed triples, n <= 6", failures, elapsed)
}

fn boundary_functional_equation() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    let fox_expected = [("1 1 1", Poly::from_ints(&[1, -1, 1])), ("1 -2 1 -2", Poly::from_ints(&[1, -3, 1]))];
    for (word, expected) in &fox_expected {
        let b = parse_braid(word).unwrap();
        let fox = common::fox::alexander(b.strands(), b.letters());
        if &fox != expected {
            failures.push(format!("Fox oracle gave {fox} for {word}"));
        }
        match alexander_from_braid(&b) {
            Ok(d) if d.poly() == expected => {}
            other => failures.push(format!("{word}: {other:?}")),
        }
    }
    for (name, word) in common::CORPUS {
        let b = parse_braid(word).unwrap();
        let d = match alexander_from_braid(&b) {
            Ok(d) => d,
            Err(e) => {
                failures.push(format!("{name}: {e}"));
                continue;
            }
        };
        if d.poly().eval(&int(1)).abs() != int(1) {
            failures.push(format!("{name}: Δ(1) ≠ ±1"));
        }
        if !is_reciprocal(&d) {
            failures.push(format!("{name}: not reciprocal"));
        }
        let moved = [b.stabilize(true), b.stabilize(false), b.rotate(1), b.conjugate(1).unwrap()];
        if moved.iter().any(|m| alexander_from_braid(m).as_ref() != Ok(&d)) {
            failures.push(format!("{name}: Markov move changed Δ"));
        }
        if !verify_knot_functional_equation(&d).holds {
            failures.push(format!("{name}: functional equation fails"));
        }
    }
    let skew = AlexanderPoly::from_ints(&[1, 1, -1]).unwrap();
    if verify_knot_functional_equation(&skew).holds {
        failures.push("1 + z - z^2 passed the functional equation".into());
    }
    outcome(3, "boundary functional equation on the knot corpus; fails for 1 + z - z^2", failures, start.elapsed())
}

fn closed_functional_equation() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    let j = symplectic_form(1);
    let fixtures: [(&str, Matrix, Rational); 4] = [
        ("identity", Matrix::identity(2), int(1)),
        ("[[1,1],[0,1]]", Matrix::from_ints(&[&[1, 1], &[0, 1]]), int(1)),
        ("[[2,1],[1,1]]", Matrix::from_ints(&[&[2, 1], &[1, 1]]), int(1)),
        ("[[1,0],[0,2]]", Matrix::from_ints(&[&[1, 0], &[0, 2]]), int(2)),
    ];
    let mut signs = Vec::new();
    for (name, a, lambda) in fixtures {
        let act = match build_closed_duality_action(&a, &j, &lambda) {
            Ok(act) => act,
            Err(e) => {
                failures.push(format!("{name}: {e}"));
                continue;
            }
        };
        match verify_closed_functional_equation(&act.zeta(), &lambda, act.euler_characteristic()) {
            Ok(r) if r.holds && r.sign.is_some() => signs.push(format!("{name}: {:+}", r.sign.unwrap())),
            other => failures.push(format!("{name}: {other:?}")),
        }
    }
    let mut o = outcome(4, "closed functional equation with recorded sign", failures, start.elapsed());
    o.detail = format!("{} [{}]", o.detail, signs.join(", "));
    o
}

fn corollary_equivalence() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    for (name, word) in common::CORPUS {
        let d = alexander_from_braid(&parse_braid(word).unwrap()).unwrap();
        let (rec, fe) = (is_reciprocal(&d), verify_knot_functional_equation(&d).holds);
        if rec != fe || !rec {
            failures.push(format!("{name}: reciprocal={rec}, functional equation={fe}"));
        }
    }
    for synthetic in [&[1, 1, -1][..], &[2, -1, -1, 1][..], &[1, -1, 1][..]] {
        let d = AlexanderPoly::from_ints(synthetic).unwrap();
        if is_reciprocal(&d) != verify_knot_functional_equation(&d).holds {
            failures.push(format!("{synthetic:?}: equivalence broken"));
        }
    }
    outcome(5, "reciprocal <=> functional equation holds; both true on genuine knots", failures, start.elapsed())
}

fn lefschetz_round_trip() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    for (name, word) in common::CORPUS {
        let d = alexander_from_braid(&parse_braid(word).unwrap()).unwrap();
        let newton = knot_lefschetz_numbers(&d, 12);
        match zeta_from_alexander(&d).lefschetz_numbers(12) {
            Ok(logder) if logder == newton => {}
            other => failures.push(format!("{name}: {newton:?} vs {other:?}")),
        }
    }
    let tref = AlexanderPoly::from_ints(&[1, -1, 1]).unwrap();
    let period = common::ints(&[0, 2, 3, 2, 0, -1]);
    let seq = knot_lefschetz_numbers(&tref, 12);
    if seq[..6] != period[..] || seq[6..] != period[..] {
        failures.push(format!("trefoil sequence {seq:?}"));
    }
    outcome(6, "Lefschetz numbers from Δ match z·ζ'/ζ (N = 12); trefoil period [0,2,3,2,0,-1]", failures, start.elapsed())
}

fn multiplicativity() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    for seed in 0..100u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(10_000 + seed);
        let a = random_action(&mut rng, 3, 4, 3);
        let b = random_action(&mut rng, 3, 4, 3);
        let merged = a.block_sum(&b).zeta();
        if merged.value() != &(a.zeta().value() * b.zeta().value()) {
            failures.push(format!("seed {seed}"));
        }
    }
    outcome(7, "zeta of a block sum is the product of zetas (100 fixtures)", failures, start.elapsed())
}

#[test]
fn acceptance_criteria() {
    let results = [
        rationality_bridge(),
        pairing_identities(),
        boundary_functional_equation(),
        closed_functional_equation(),
        corollary_equivalence(),
        lefschetz_round_trip(),
        multiplicativity(),
    ];
    for r in &results {
        println!(
            "[{}] criterion {}: {} ({})",
            if r.passed { "PASS" } else { "FAIL" },
            r.id,
            r.name,
            r.detail
        );
    }
    let failed: Vec<u8> = results.iter().filter(|r| !r.passed).map(|r| r.id).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
