//! Reproduction suites behind `bchkit verify`.

use std::fmt::Write as _;
use std::time::Instant;

use bchkit::analysis::{
    bounds_report, moment_checks, sphere_packing_max_d, table_closed_form, Family,
};
use bchkit::bch::{build_code, BchCode, Strategy, DEFAULT_ENUM_CAP};
use serde_json::json;

use crate::output::{pairs_csv, Output};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Examples,
    Tables,
    Moments,
    Bounds,
    All,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Examples => "examples",
            Suite::Tables => "tables",
            Suite::Moments => "moments",
            Suite::Bounds => "bounds",
            Suite::All => "all",
        }
    }
}

pub struct Check {
    pub id: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
    pub seconds: f64,
}

pub struct Report {
    pub suite: Suite,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

fn timed(id: String, expected: String, run: impl FnOnce() -> String) -> Check {
    let start = Instant::now();
    let actual = run();
    Check {
        pass: actual == expected,
        id,
        expected,
        actual,
        seconds: start.elapsed().as_secs_f64(),
    }
}

fn describe<E: std::fmt::Display>(r: Result<String, E>) -> String {
    r.unwrap_or_else(|e| format!("error: {e}"))
}

/// Exact distance as a string, or `>=b` when only a bound is certified.
fn distance(code: &BchCode, budget: u32) -> Result<String, bchkit::Error> {
    let d = if (code.q() as f64).powi(code.k as i32) <= 2e7 {
        code.min_distance(Strategy::Enumerate { cap: DEFAULT_ENUM_CAP })?
    } else {
        code.min_distance(Strategy::LowWeightSearch { budget })?
    };
    Ok(d.exact().map_or_else(|| format!(">={}", d.lower_bound()), |d| d.to_string()))
}

// (q, m, designed distance, even-like, [n, k, d], search budget)
const EXAMPLES: [(u64, u32, u64, bool, [u64; 3], u32); 12] = [
    (3, 4, 3, false, [40, 32, 4], 4),
    (4, 6, 3, false, [1365, 1353, 3], 3),
    (5, 4, 3, false, [156, 148, 3], 3),
    (3, 3, 4, false, [13, 7, 4], 4),
    (3, 4, 5, false, [40, 28, 5], 5),
    (3, 5, 5, false, [121, 106, 6], 6),
    (3, 4, 25, false, [40, 3, 25], 1),
    (3, 5, 76, false, [121, 6, 76], 1),
    (3, 4, 22, true, [40, 6, 24], 1),
    (3, 5, 67, true, [121, 10, 72], 1),
    (3, 4, 22, false, [40, 7, 22], 1),
    (3, 5, 67, false, [121, 11, 67], 1),
];

fn examples() -> Vec<Check> {
    EXAMPLES
        .iter()
        .map(|&(q, m, delta, even_like, [n, k, d], budget)| {
            let tag = if even_like { " even-like" } else { "" };
            timed(format!("code q={q} m={m} delta={delta}{tag}"), format!("[{n},{k},{d}]"), || {
                describe(build_code(q, m, delta, even_like).and_then(|c| {
                    let d = distance(&c, budget)?;
                    Ok(format!("[{},{},{d}]", c.n(), c.k))
                }))
            })
        })
        .collect()
}

fn tables() -> Vec<Check> {
    let mut out = Vec::new();
    for family in [Family::Delta1, Family::Delta2Tilde, Family::Delta2] {
        for m in 3..=6 {
            let closed = table_closed_form(family, 3, m);
            let expected = describe(closed.as_ref().map(ToString::to_string).map_err(|e| e.to_string()));
            out.push(timed(format!("table {family} m={m}"), expected, || {
                describe(
                    build_code(3, m, family.designed_distance(m), family.even_like())
                        .and_then(|c| c.weight_distribution_bruteforce(DEFAULT_ENUM_CAP))
                        .map(|wd| wd.to_string()),
                )
            }));
        }
    }
    out
}

fn moments() -> Vec<Check> {
    let mut out = Vec::new();
    for m in [3, 5] {
        let start = Instant::now();
        match moment_checks(m) {
            Ok(report) => {
                let share = start.elapsed().as_secs_f64() / report.entries.len() as f64;
                for e in report.entries {
                    let actual = e
                        .computed
                        .as_integer()
                        .map_or_else(|| format!("{:?}", e.computed), |v| v.to_string());
                    out.push(Check {
                        id: format!("moment m={m} {}", e.name),
                        expected: e.expected.to_string(),
                        pass: e.holds(),
                        actual,
                        seconds: share,
                    });
                }
            }
            Err(e) => out.push(Check {
                id: format!("moments m={m}"),
                expected: "4 identities".into(),
                actual: format!("error: {e}"),
                pass: false,
                seconds: start.elapsed().as_secs_f64(),
            }),
        }
    }
    out
}

fn bounds() -> Vec<Check> {
    let mut out = Vec::new();
    for m in 3..=7 {
        let n = (3u64.pow(m) - 1) / 2;
        out.push(timed(format!("griesmer delta1-tilde m={m}"), n.to_string(), || {
            let fam = Family::Delta1Tilde;
            describe(build_code(3, m, fam.designed_distance(m), true).and_then(|c| {
                let d = c.min_distance(Strategy::Enumerate { cap: DEFAULT_ENUM_CAP })?.lower_bound();
                Ok(bounds_report(c.n(), c.k, d, 3, Some(c.delta)).griesmer_sum.to_string())
            }))
        }));
    }
    for m in 3..=8u32 {
        let n = (3u64.pow(m) - 1) / 2;
        out.push(timed(format!("sphere packing C(n,3,{m},3)"), "d<=6".into(), || {
            let d = sphere_packing_max_d(n, n - 2 * m as u64, 3);
            if d <= 6 { "d<=6".into() } else { format!("d<={d}") }
        }));
    }
    out
}

pub fn run(suite: Suite) -> Report {
    let checks = match suite {
        Suite::Examples => examples(),
        Suite::Tables => tables(),
        Suite::Moments => moments(),
        Suite::Bounds => bounds(),
        Suite::All => [examples(), tables(), moments(), bounds()].into_iter().flatten().collect(),
    };
    Report { suite, checks }
}

/// Timings appear in the text form only, so JSON and CSV stay byte-identical
/// between runs.
pub fn render(report: &Report) -> Output {
    let mut text = String::new();
    for c in &report.checks {
        let tag = if c.pass { "PASS" } else { "FAIL" };
        let _ = writeln!(text, "{tag} {} ({:.2}s)", c.id, c.seconds);
        if !c.pass {
            let _ = writeln!(text, "     expected {}\n     actual   {}", c.expected, c.actual);
        }
    }
    let passed = report.checks.iter().filter(|c| c.pass).count();
    let _ = writeln!(
        text,
        "suite {}: {passed}/{} checks pass",
        report.suite.name(),
        report.checks.len()
    );
    let checks: Vec<_> = report
        .checks
        .iter()
        .map(|c| json!({ "id": c.id, "expected": c.expected, "actual": c.actual, "pass": c.pass }))
        .collect();
    let json = json!({ "suite": report.suite.name(), "pass": report.pass(), "checks": checks });
    let rows: Vec<(String, String)> = report
        .checks
        .iter()
        .map(|c| (c.id.clone(), c.pass.to_string()))
        .collect();
    let mut out = Output::new(text, json, pairs_csv(("id", "pass"), &rows));
    out.exit = if report.pass() { 0 } else { 1 };
    out
}
