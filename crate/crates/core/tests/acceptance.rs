//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails or overruns its time limit.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use spinhecke::dahca::dahca;
use spinhecke::dunkl::{faithfulness_probe, ModuleKind};
use spinhecke::scalars::Cyc;
use spinhecke::verify::{run_suite, SuiteReport};
use spinhecke::weyl::{Family, WeylType};

const SEED: u64 = 20261016;
const BUDGET: usize = 300;

struct Outcome {
    ok: bool,
    detail: String,
}

fn suites(names: &[&str], cases: &[(Family, usize)], budget: usize) -> Outcome {
    let mut checks = 0;
    let mut bad: Vec<SuiteReport> = Vec::new();
    for &(f, n) in cases {
        for name in names {
            match run_suite(name, f, n, SEED, budget) {
                Ok(r) => {
                    checks += r.attempted;
                    if !r.passed() {
                        bad.push(r);
                    }
                }
                Err(e) => {
                    return Outcome { ok: false, detail: format!("{} on {}{}: {}", name, f, n, e) };
                }
            }
        }
    }
    let mut detail = format!("{} checks", checks);
    for r in &bad {
        detail.push_str(&format!("\n{}", r));
    }
    Outcome { ok: bad.is_empty(), detail }
}

fn up_to_three() -> Vec<(Family, usize)> {
    let mut v = Vec::new();
    for f in [Family::A, Family::B, Family::D] {
        for n in 2..=3 {
            v.push((f, n));
        }
    }
    v
}

fn faithfulness() -> Outcome {
    let wt = WeylType::new(Family::A, 2).unwrap();
    let alg = dahca(wt);
    let (u, v) = (Cyc::from_ratio(3, 7), Cyc::from_ratio(5, 11));
    match faithfulness_probe(&alg, ModuleKind::DahcaY, 3, 5, &u, &v) {
        Ok(r) => {
            let mut detail = format!(
                "{} on C[y] (x) C_n: rank {} of {} monomials (input dimension {})",
                r.weyl_type, r.rank, r.monomials, r.input_dimension
            );
            for k in r.kernel.iter().take(3) {
                detail.push_str(&format!("\n  acts as zero: {}", k));
            }
            Outcome { ok: r.injective(), detail }
        }
        Err(e) => Outcome { ok: false, detail: e.to_string() },
    }
}

fn main() -> ExitCode {
    let relation_cases = [
        (Family::A, 2),
        (Family::A, 3),
        (Family::A, 4),
        (Family::B, 2),
        (Family::B, 3),
        (Family::B, 4),
        (Family::D, 4),
    ];
    let criteria: Vec<(&str, u64, Box<dyn Fn() -> Outcome>)> = vec![
        ("relations", 30, Box::new(move || suites(&["relations"], &relation_cases, BUDGET))),
        ("pbw associativity", 120, Box::new(|| suites(&["assoc"], &up_to_three(), BUDGET))),
        ("conjugation invariance and jacobi", 60, Box::new(|| suites(&["conj", "jacobi"], &up_to_three(), BUDGET))),
        ("closed-form commutators", 120, Box::new(|| suites(&["closedform"], &up_to_three(), BUDGET))),
        ("isomorphisms", 60, Box::new(|| suites(&["iso", "cocycle"], &up_to_three(), BUDGET))),
        ("quotients", 60, Box::new(|| suites(&["quotient"], &up_to_three(), BUDGET))),
        ("dunkl module axiom", 120, Box::new(|| suites(&["dunkl"], &up_to_three(), BUDGET))),
        ("even center", 60, Box::new(|| suites(&["center"], &up_to_three(), BUDGET))),
        ("faithfulness probe", 60, Box::new(faithfulness)),
    ];
    let mut all_ok = true;
    for (k, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = run();
        let took = start.elapsed();
        let in_time = took <= Duration::from_secs(*limit);
        let ok = out.ok && in_time;
        all_ok &= ok;
        println!(
            "criterion {} {}: {} in {:.2}s (limit {}s){}",
            k + 1,
            name,
            if ok { "PASS" } else { "FAIL" },
            took.as_secs_f64(),
            limit,
            if in_time { "" } else { " over time" }
        );
        println!("  {}", out.detail.replace('\n', "\n  "));
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
