//! Release gate: every acceptance criterion at its stated tolerance, one
//! PASS/FAIL line each. Run with `--nocapture` to see the lines on success.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use strong_edge::certifier::*;
use strong_edge::coloring::{solve_strong_k, strong_chromatic_index};
use strong_edge::graph::{conflict_graph, gen_cnplus, petersen, Graph};
use strong_edge::poly::{CapVector, FactorProduct, Monomial, Polynomial};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn cli(args: &[&str]) -> (i32, String, Duration) {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_strong-edge"))
        .args(args)
        .output()
        .expect("binary runs");
    let elapsed = start.elapsed();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        elapsed,
    )
}

fn results<'a>(stdout: &'a str, name: &str) -> Vec<&'a str> {
    stdout
        .lines()
        .filter_map(|l| l.strip_prefix("RESULT "))
        .filter_map(|l| l.strip_prefix(name)?.strip_prefix(' '))
        .collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn criterion_1() -> Outcome {
    let setup = build_p1();
    ensure(setup.product.degree() == 45, || {
        format!("deg P1 = {}", setup.product.degree())
    })?;
    let (code, out, elapsed) = cli(&["verify-paper", "--claim", "1"]);
    ensure(out.contains("[ok] deg P: expected 45 got 45"), || {
        "degree check missing".into()
    })?;
    ensure(results(&out, "eta") == ["-5"], || {
        format!("eta lines {:?}", results(&out, "eta"))
    })?;
    ensure(code == 0, || format!("exit code {code}"))?;
    ensure(elapsed < Duration::from_secs(15 * 60), || format!("took {elapsed:?}"))?;
    Ok(format!("eta = -5, deg 45, {:.2}s", elapsed.as_secs_f64()))
}

fn criterion_2() -> Outcome {
    let (code, out, elapsed) = cli(&["verify-paper", "--claim", "2", "--n", "7", "--method", "direct"]);
    let eta = results(&out, "eta");
    ensure(elapsed < Duration::from_secs(5 * 60), || format!("took {elapsed:?}"))?;
    ensure(eta == ["1"] && code == 0, || {
        format!("n=7 direct eta {eta:?}, expected 1 (exit {code})")
    })?;
    Ok(format!("eta = 1, {:.2}s", elapsed.as_secs_f64()))
}

fn criterion_3() -> Outcome {
    let mut wrong = Vec::new();
    for n in 8..=20 {
        let start = Instant::now();
        let r = verify_claim2_staged(n).map_err(|e| e.to_string())?;
        let elapsed = start.elapsed();
        ensure(elapsed < Duration::from_secs(60), || format!("n={n} took {elapsed:?}"))?;
        if r.value != expected_claim2(n) {
            wrong.push(format!("n={n}: {} vs {}", r.value, r.expected));
        }
    }
    for n in [8, 9] {
        let d = verify_claim2_direct(n).map_err(|e| e.to_string())?.value;
        let s = verify_claim2_staged(n).map_err(|e| e.to_string())?.value;
        ensure(d == s, || format!("n={n}: direct {d} staged {s}"))?;
    }
    ensure(wrong.is_empty(), || {
        format!(
            "direct/staged agree; values differ from (-1)^(n-1): {}",
            wrong.join(", ")
        )
    })?;
    Ok("(-1)^(n-1) for n = 8..20; direct agrees at 8, 9".into())
}

fn criterion_4() -> Outcome {
    for k in 5..=10 {
        ensure(verify_telescope_step(k), || {
            format!("telescoping identity fails at k={k}")
        })?;
    }
    let mut failing = Vec::new();
    for n in 8..=20 {
        let r = verify_claim2_staged(n).map_err(|e| e.to_string())?;
        let head = r
            .checks
            .iter()
            .find(|c| c.name.starts_with("eta_J(0)"))
            .ok_or_else(|| format!("n={n}: J(0) check missing"))?;
        if !head.holds {
            failing.push(format!("n={n}: expected {} got {}", head.expected, head.actual));
        }
    }
    ensure(failing.is_empty(), || {
        format!("telescoping k=5..10 holds; J(0) identity fails: {}", failing[0])
    })?;
    Ok("J(0) identity for n = 8..20, telescoping for k = 5..10".into())
}

fn criterion_5() -> Outcome {
    for n in 7..=20 {
        let setup = build_claim2(n).map_err(|e| e.to_string())?;
        let multiset = setup.product.pair_multiset();
        ensure(multiset.values().all(|&c| c == 1), || format!("n={n}: repeated factor"))?;
        let conflicts = conflict_graph(&gen_cnplus(n).map_err(|e| e.to_string())?, None).map_err(|e| e.to_string())?;
        let pairs: Vec<_> = multiset.keys().copied().collect();
        let expected: Vec<_> = conflicts.edge_pairs().into_iter().collect();
        ensure(pairs == expected && pairs.len() == 7 * n, || {
            format!("n={n}: pair sets differ")
        })?;
    }
    Ok("7n pairs, each once, for n = 7..20".into())
}

fn random_small_graph(rng: &mut ChaCha8Rng, max_edges: usize) -> Graph {
    let n = rng.random_range(3..=8);
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))).collect();
    let m = rng.random_range(1..=max_edges.min(pairs.len()));
    rand::seq::SliceRandom::shuffle(pairs.as_mut_slice(), rng);
    pairs.truncate(m);
    Graph::new(n, &pairs).unwrap()
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let (mut certificates, mut trials, mut successes) = (0, 0, 0);
    while certificates < 100 {
        let g = random_small_graph(&mut rng, 10);
        let cg = conflict_graph(&g, None).map_err(|e| e.to_string())?;
        if cg.pair_count() == 0 {
            continue;
        }
        let t = cg.len();
        let factors = FactorProduct::new(t, cg.pairs().iter().copied().collect()).map_err(|e| e.to_string())?;
        let (j, eta) = search_monomial(&factors, &CapVector::unbounded(t), 1_000_000)
            .ok_or_else(|| format!("no monomial for {g:?}"))?;
        let cert = Certificate {
            edge_labels: (0..t).map(|i| format!("e{i}")).collect(),
            s_bounds: (0..t).map(|v| j.exponent(v) + 1).collect(),
            factors,
            j,
            eta_value: eta,
            k: 12,
        };
        ensure(check_certificate(&cert).map_err(|e| e.to_string())?, || {
            "found certificate does not check".into()
        })?;
        let report = soundness_trial(&cert, certificates, 20, 12).map_err(|e| e.to_string())?;
        trials += report.trials;
        successes += report.successes;
        certificates += 1;
    }
    ensure(successes == 2000 && trials == 2000, || {
        format!("{successes}/{trials} trials colorable")
    })?;
    Ok(format!("{successes}/{trials} trials colorable over 100 certificates"))
}

fn random_product(rng: &mut ChaCha8Rng) -> FactorProduct {
    let vars = rng.random_range(2..=6);
    let len = rng.random_range(0..=8);
    let factors = (0..len)
        .map(|_| {
            let a = rng.random_range(0..vars);
            (a, (a + rng.random_range(1..vars)) % vars)
        })
        .collect();
    FactorProduct::new(vars, factors).unwrap()
}

fn random_monomial(rng: &mut ChaCha8Rng, vars: usize, max_exp: u32) -> Monomial {
    let e: Vec<u32> = (0..vars).map(|_| rng.random_range(0..=max_exp)).collect();
    Monomial::from_dense(&e)
}

fn random_poly(rng: &mut ChaCha8Rng, vars: usize) -> Polynomial {
    let terms = rng.random_range(0..6);
    Polynomial::from_terms(
        (0..terms).map(|_| (random_monomial(rng, vars, 3), BigInt::from(rng.random_range(-6i64..=6)))),
    )
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for i in 0..1000 {
        let p = random_product(&mut rng);
        let t = p.num_vars();
        let full = p.expand_naive();
        let caps = CapVector::from_caps(
            (0..t)
                .map(|_| rng.random_bool(0.8).then(|| rng.random_range(0..4)))
                .collect(),
        );
        let capped = p.expand_capped(&caps);
        let sound = capped.terms().all(|(m, c)| caps.admits(m) && &full.coefficient(m) == c)
            && full
                .terms()
                .all(|(m, c)| !caps.admits(m) || &capped.coefficient(m) == c);
        ensure(sound, || format!("instance {i}: cap soundness"))?;
        ensure(
            full.is_homogeneous() && (full.is_zero() || full.degree() == Some(p.len() as u32)),
            || format!("instance {i}: homogeneity"),
        )?;
        if !p.is_empty() {
            let f = rng.random_range(0..p.len());
            ensure(p.with_flipped(f).expand() == -&full, || {
                format!("instance {i}: antisymmetry")
            })?;
        }
        let j = random_monomial(&mut rng, t, 2);
        ensure(full.eta_partial(&j) == full.eta_derivative_oracle(&j), || {
            format!("instance {i}: oracle on product")
        })?;
        let (a, b) = (
            BigInt::from(rng.random_range(-5i64..=5)),
            BigInt::from(rng.random_range(-5i64..=5)),
        );
        let (q, r) = (random_poly(&mut rng, t), random_poly(&mut rng, t));
        let lhs = (&q.scale(&a) + &r.scale(&b)).eta_partial(&j);
        let rhs = &q.eta_partial(&j).scale(&a) + &r.eta_partial(&j).scale(&b);
        ensure(lhs == rhs, || format!("instance {i}: eta linearity"))?;
        ensure(q.eta_partial(&j) == q.eta_derivative_oracle(&j), || {
            format!("instance {i}: oracle on random poly")
        })?;
    }
    Ok("1000 instances, all five properties exact".into())
}

fn enumerate_k(g: &Graph, k: u32) -> bool {
    let m = g.edge_count();
    if m == 0 {
        return true;
    }
    let pairs: Vec<(usize, usize)> = (0..m)
        .flat_map(|e| ((e + 1)..m).map(move |f| (e, f)))
        .filter(|&(e, f)| g.sees(e, f).unwrap())
        .collect();
    (0..(k as u64).pow(m as u32)).any(|code| {
        let color = |e: usize| (code / (k as u64).pow(e as u32)) % k as u64;
        pairs.iter().all(|&(e, f)| color(e) != color(f))
    })
}

fn cycle(n: usize) -> Graph {
    Graph::new(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for i in 0..200 {
        let g = random_small_graph(&mut rng, 8);
        for k in 0..=4 {
            let solved = solve_strong_k(&g, k).is_some();
            ensure(solved == enumerate_k(&g, k), || {
                format!("graph {i} k={k}: solver {solved}")
            })?;
        }
    }
    let start = Instant::now();
    let indices = [
        strong_chromatic_index(&cycle(5)),
        strong_chromatic_index(&cycle(6)),
        strong_chromatic_index(&cycle(7)),
        strong_chromatic_index(&petersen()),
    ];
    ensure(indices == [5, 3, 4, 5], || format!("indices {indices:?}"))?;
    ensure(start.elapsed() < Duration::from_secs(600), || {
        "index computation over budget".into()
    })?;
    Ok("200 graphs x k=0..4 agree; indices 5, 3, 4, 5".into())
}

fn criterion_9() -> Outcome {
    let dir = std::env::temp_dir();
    let dir = dir.to_str().unwrap();
    let mut lines = Vec::new();
    for (kind, size) in [("cubic", "24"), ("weight6", "20")] {
        let (code, out, _) = cli(&[
            "campaign",
            kind,
            "--count",
            "100",
            "--size",
            size,
            "--seed",
            "1",
            "--palette",
            "30",
            "--reproducer-dir",
            dir,
        ]);
        let colored = results(&out, "colored");
        ensure(code == 0 && colored == ["100/100"], || {
            format!("{kind}: {colored:?} exit {code}\n{out}")
        })?;
        lines.push(format!("{kind} 100/100"));
    }
    Ok(lines.join(", "))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 9] = [
        ("claim 1 coefficient", criterion_1),
        ("claim 2 direct n=7", criterion_2),
        ("claim 2 staged n=8..20", criterion_3),
        ("staged intermediate identities", criterion_4),
        ("structural bridge", criterion_5),
        ("certificate soundness", criterion_6),
        ("polynomial engine properties", criterion_7),
        ("solver oracle equivalence", criterion_8),
        ("list-coloring campaigns", criterion_9),
    ];
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("PASS criterion {}: {name}: {detail}", i + 1),
            Err(detail) => {
                println!("FAIL criterion {}: {name}: {detail}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
