//! One line per acceptance criterion. Each criterion runs its suite at full
//! range and, where possible, an independent brute-force oracle on top.

use std::process::{Command, ExitCode};
use std::time::Instant;

use galilei::exact::Polynomial;
use galilei::genfun::f_enum;
use galilei::verify::{run_suite, Options, TIME_LIMIT_MS};
use galilei::younglat::{edges_from, path_matrix, Partition};

struct Outcome {
    pass: bool,
    detail: String,
}

fn suite(id: u8) -> Outcome {
    let s = run_suite(id, Options::default());
    let failed: Vec<String> = s
        .verdicts
        .iter()
        .filter(|v| !v.pass)
        .map(|v| format!("{} [{}]", v.claim, v.detail))
        .collect();
    Outcome {
        pass: failed.is_empty(),
        detail: if failed.is_empty() {
            format!("{} claims, {} ms", s.verdicts.len(), s.wall_time_ms)
        } else {
            format!("failed: {}", failed.join("; "))
        },
    }
}

fn and(mut a: Outcome, name: &str, ok: bool) -> Outcome {
    if !ok {
        a.pass = false;
        a.detail = format!("{}; oracle {name} disagrees", a.detail);
    }
    a
}

/// Weight-`l` dimension of `Sym^d L(k)` for `d <= n`, by listing every
/// multiset of basis vectors.
fn brute_weight_counts(k: u32, l: i64, n: usize) -> Vec<i64> {
    fn go(k: u32, from: u32, left: usize, weight: i64, l: i64, count: &mut i64) {
        if left == 0 {
            if weight == l {
                *count += 1;
            }
            return;
        }
        for i in from..=k {
            go(k, i, left - 1, weight + k as i64 - 2 * i as i64, l, count);
        }
    }
    (0..=n)
        .map(|d| {
            let mut c = 0;
            go(k, 0, d, 0, l, &mut c);
            c
        })
        .collect()
}

fn enumeration_oracle() -> bool {
    (0..=6u32).all(|k| {
        (0..=6u32).all(|l| {
            f_enum(k, l, 12).to_i64().expect("integer series")
                == brute_weight_counts(k, l as i64, 12)
        })
    })
}

/// `M_n` entry by walking every path explicitly.
fn brute_path_sum(from: &Partition, to: &Partition) -> Polynomial {
    if from == to {
        return Polynomial::one(galilei::exact::Var::X);
    }
    let mut total = Polynomial::zero(galilei::exact::Var::X);
    if from.size() >= to.size() {
        return total;
    }
    for e in edges_from(from) {
        total = &total + &(&e.label * &brute_path_sum(&e.target, to));
    }
    total
}

fn path_oracle() -> bool {
    (1..=8).all(|n| {
        let m = path_matrix(n);
        m.rows.iter().enumerate().all(|(i, r)| {
            m.cols
                .iter()
                .enumerate()
                .all(|(j, c)| m.entries[i][j] == brute_path_sum(r, c))
        })
    })
}

fn end_to_end() -> Outcome {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_galilei"))
        .args(["verify", "all"])
        .output()
        .expect("run galilei");
    let ms = start.elapsed().as_millis() as u64;
    let ok = out.status.success() && ms < TIME_LIMIT_MS;
    let stderr = String::from_utf8_lossy(&out.stderr);
    let failed: Vec<&str> = stderr.lines().filter(|l| l.starts_with("FAILED")).collect();
    Outcome {
        pass: ok,
        detail: format!(
            "exit status {}, {ms} ms{}",
            out.status.code().unwrap_or(-1),
            if failed.is_empty() {
                String::new()
            } else {
                format!(", {}", failed.join("; "))
            }
        ),
    }
}

type Criterion = (u8, &'static str, Box<dyn Fn() -> Outcome>);

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        (
            1,
            "triple agreement of F^(k)_l",
            Box::new(|| and(suite(1), "brute-force weight count", enumeration_oracle())),
        ),
        (
            2,
            "closed-form invariant Hilbert series",
            Box::new(|| suite(2)),
        ),
        (3, "negativity detection", Box::new(|| suite(3))),
        (4, "invariant structure detection", Box::new(|| suite(4))),
        (
            5,
            "Young lattice matrices, ranks and determinants",
            Box::new(|| and(suite(5), "explicit path walk", path_oracle())),
        ),
        (6, "symmetric algebra", Box::new(|| suite(6))),
        (7, "multiplicities", Box::new(|| suite(7))),
        (8, "tensor calculus", Box::new(|| suite(8))),
        (9, "quivers", Box::new(|| suite(9))),
        (10, "end-to-end verify all", Box::new(end_to_end)),
    ];
    let mut failures = 0;
    for (id, name, check) in &criteria {
        let o = check();
        if !o.pass {
            failures += 1;
        }
        println!(
            "criterion {id:>2} {name}: {} ({})",
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
    }
    println!(
        "\n{} of {} criteria pass",
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
