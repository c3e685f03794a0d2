//! Acceptance suite: one line per criterion, run with `cargo test --test acceptance`.

use std::process::ExitCode;
use std::time::Instant;

use bchkit::analysis::{
    bounds_report, moment_checks, n13_count, s_value_table, secret_sharing_suitable,
    t_value_table, table_closed_form, u_value_table, Family, TernarySums, WeightDistribution,
};
use bchkit::bch::{
    build_code, dimension_formula, locator_witness, BchCode, MinDistance, Strategy, Witness,
    DEFAULT_ENUM_CAP,
};
use bchkit::cosets::{delta_closed_form, delta_formula, delta_index_bound, full_size_bound, CosetContext};
use bchkit::nds::{smallest_leader_geq, BosePath};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

/// Criteria that cannot hold as stated. The δ1 codes contain the all-one
/// word and its double, so `w_max = n` and `w_min / w_max` stays just below
/// 2/3 for every m; the check still runs and still prints FAIL.
const EXPECTED_FAILURES: &[u32] = &[11];

fn err<E: std::fmt::Debug>(e: E) -> String {
    format!("{e:?}")
}

fn exact_distance(code: &BchCode, budget: u32) -> Result<u64, String> {
    let r = if (code.q() as f64).powi(code.k as i32) <= 2e7 {
        code.min_distance(Strategy::Enumerate { cap: DEFAULT_ENUM_CAP })
    } else {
        code.min_distance(Strategy::LowWeightSearch { budget })
    }
    .map_err(err)?;
    r.exact().ok_or_else(|| format!("only {r:?}"))
}

// (q, m, designed distance, even-like, [n, k, d], search budget)
const EXAMPLES: [(u64, u32, u64, bool, [u64; 3], u32); 12] = [
    (3, 4, 3, false, [40, 32, 4], 4),
    (4, 6, 3, false, [1365, 1353, 3], 3),
    (5, 4, 3, false, [156, 148, 3], 3),
    (3, 3, 4, false, [13, 7, 4], 4),
    (3, 4, 5, false, [40, 28, 5], 5),
    (3, 5, 5, false, [121, 106, 6], 6),
    (3, 4, 25, false, [40, 3, 25], 0),
    (3, 5, 76, false, [121, 6, 76], 0),
    (3, 4, 22, true, [40, 6, 24], 0),
    (3, 5, 67, true, [121, 10, 72], 0),
    (3, 4, 22, false, [40, 7, 22], 0),
    (3, 5, 67, false, [121, 11, 67], 0),
];

fn worked_examples() -> Outcome {
    for (q, m, delta, even_like, [n, k, d], budget) in EXAMPLES {
        let code = build_code(q, m, delta, even_like).map_err(err)?;
        let got = exact_distance(&code, budget.max(1))?;
        ensure!(
            (code.n(), code.k, got) == (n, k, d),
            "q={q} m={m} δ={delta}: got [{}, {}, {got}], want [{n}, {k}, {d}]",
            code.n(),
            code.k
        );
    }
    Ok(format!("{} codes", EXAMPLES.len()))
}

fn enumerators() -> Outcome {
    let cases: [(u64, u32, u64, bool, &[(u64, u64)]); 6] = [
        (3, 4, 25, false, &[(0, 1), (25, 16), (30, 8), (40, 2)]),
        (3, 5, 76, false, &[(0, 1), (76, 242), (81, 242), (85, 242), (121, 2)]),
        (3, 4, 22, true, &[(0, 1), (24, 300), (27, 240), (30, 168), (36, 20)]),
        (3, 5, 67, true, &[(0, 1), (72, 10890), (81, 39446), (90, 8712)]),
        (
            3,
            4,
            22,
            false,
            &[(0, 1), (22, 280), (24, 300), (25, 336), (27, 240), (28, 600), (30, 168), (31, 240), (36, 20), (40, 2)],
        ),
        (
            3,
            5,
            67,
            false,
            &[(0, 1), (67, 2420), (72, 10890), (76, 54450), (81, 39446), (85, 58806), (90, 8712), (94, 2420), (121, 2)],
        ),
    ];
    for (q, m, delta, even_like, pairs) in cases {
        let code = build_code(q, m, delta, even_like).map_err(err)?;
        let want = WeightDistribution::from_pairs(code.n(), code.k, q, pairs);
        let got = code.weight_distribution_bruteforce(DEFAULT_ENUM_CAP).map_err(err)?;
        ensure!(got == want, "[{}, {}]: {got} vs {want}", code.n(), code.k);
    }
    Ok("6 enumerators".into())
}

fn tables() -> Outcome {
    let mut count = 0;
    for family in [Family::Delta1, Family::Delta2Tilde, Family::Delta2] {
        for m in 3..=6 {
            let closed = table_closed_form(family, 3, m).map_err(err)?;
            let code = build_code(3, m, family.designed_distance(m), family.even_like()).map_err(err)?;
            let brute = code.weight_distribution_bruteforce(DEFAULT_ENUM_CAP).map_err(err)?;
            ensure!(closed == brute, "{family} m={m}: {:?}", closed.diff(&brute));
            count += 1;
        }
    }
    Ok(format!("{count} family/m comparisons"))
}

fn largest_leaders() -> Outcome {
    for m in 2..=12 {
        let ctx = CosetContext::build(3, m).map_err(err)?;
        let top = ctx.largest_leaders(2);
        for i in 1..=2u32 {
            let c = delta_closed_form(3, m, i).map_err(err)?;
            let leader = top[i as usize - 1];
            ensure!(c.value == leader, "m={m} i={i}: formula {} scan {leader}", c.value);
            let size = ctx.size(leader).map_err(err)?;
            ensure!(c.coset_size == Some(size), "m={m} i={i}: size {size}");
            let want = if i == 1 && m % 2 == 0 { m / 2 } else { m };
            ensure!(size == want, "m={m} i={i}: size {size}, want {want}");
        }
        if m >= 4 {
            let bound = delta_index_bound(m);
            let scan = ctx.largest_leaders(bound as usize);
            for i in 1..=bound {
                ensure!(
                    delta_formula(m, i) == scan[i as usize - 1],
                    "m={m} i={i}: formula {} scan {}",
                    delta_formula(m, i),
                    scan[i as usize - 1]
                );
            }
        }
    }
    Ok("m = 2..12".into())
}

fn bose_examples() -> Outcome {
    for (q, m, s, want) in [(3u64, 6u32, 110u64, 112u64), (3, 5, 29, 31), (7, 5, 393, 394)] {
        let ctx = CosetContext::build(q, m).map_err(err)?;
        let r = smallest_leader_geq(s, &ctx).map_err(err)?;
        let scan = ctx.smallest_leader_geq(s);
        ensure!(r.value == want && scan == want, "q={q} m={m} s={s}: {r:?}, scan {scan}");
        ensure!(r.formula == Some(want), "q={q} m={m} s={s}: formula {:?}", r.formula);
    }
    let mut checked = 0u64;
    for q in [3u64, 4, 5, 7] {
        for m in 2..=6 {
            let ctx = CosetContext::build(q, m).map_err(err)?;
            for s in 0..ctx.n() {
                let r = smallest_leader_geq(s, &ctx).map_err(err)?;
                let scan = ctx.smallest_leader_geq(s);
                ensure!(r.value == scan, "q={q} m={m} s={s}: {} vs {scan}", r.value);
                if r.path == BosePath::ClosedForm {
                    ensure!(r.formula == Some(scan), "q={q} m={m} s={s}: closed form off");
                }
                checked += 1;
            }
        }
    }
    Ok(format!("3 examples, {checked} values of s"))
}

fn moments() -> Outcome {
    for m in [3, 5] {
        let r = moment_checks(m).map_err(err)?;
        for e in &r.entries {
            ensure!(e.holds(), "m={m} {}: {:?} vs {}", e.name, e.computed, e.expected);
        }
    }
    Ok("8 identities".into())
}

fn value_distributions() -> Outcome {
    let mut split = Vec::new();
    for m in [3, 5] {
        let sums = TernarySums::odd(m).map_err(err)?;
        let t = sums.t_distribution().map_err(err)?;
        let rows = t_value_table(m).map_err(err)?;
        ensure!(t.matches(&rows), "T m={m}: {:?}", t.mismatches(&rows));
        for r in rows.iter().filter(|r| r.plus_minus) {
            split.push(format!("{}/{}", t.count(r.value), t.count(-r.value)));
        }
        let s = sums.s_distribution().map_err(err)?;
        let rows = s_value_table(m).map_err(err)?;
        ensure!(s.matches(&rows), "S m={m}: {:?}", s.mismatches(&rows));
        let n13 = n13_count(&sums).map_err(err)?;
        ensure!(n13 == 0u32.into(), "m={m}: {n13} pairs at the top value");
    }
    for m in [4, 6] {
        let sums = TernarySums::even(m).map_err(err)?;
        let u = sums.u_distribution().map_err(err)?;
        let rows = u_value_table(m).map_err(err)?;
        ensure!(u.matches(&rows), "U m={m}: {:?}", u.mismatches(&rows));
    }
    Ok(format!("T, S at m = 3, 5; U at m = 4, 6; imaginary split +/- {}", split.join(" ")))
}

fn griesmer() -> Outcome {
    let mut sums = Vec::new();
    for m in 3..=7 {
        let fam = Family::Delta1Tilde;
        let code = build_code(3, m, fam.designed_distance(m), true).map_err(err)?;
        let d = exact_distance(&code, 1)?;
        let r = bounds_report(code.n(), code.k, d, 3, Some(code.delta));
        ensure!(r.griesmer_meets, "m={m}: sum {} vs n {}", r.griesmer_sum, code.n());
        sums.push(format!("{}", r.griesmer_sum));
    }
    Ok(format!("sums {}", sums.join(", ")))
}

fn dimension_formula_range() -> Outcome {
    let mut count = 0;
    for q in [3u64, 4, 5] {
        for m in 2..=6 {
            let ctx = CosetContext::build(q, m).map_err(err)?;
            let bound = full_size_bound(q, m).map_err(err)?.min(ctx.n());
            for delta in 2..=bound {
                let f = dimension_formula(q, m, delta).map_err(err)?;
                let k = ctx.n() - ctx.union_size_below(delta);
                ensure!(f == k, "q={q} m={m} δ={delta}: formula {f} union {k}");
                count += 1;
            }
        }
    }
    Ok(format!("{count} (q, m, δ) triples"))
}

fn small_distances() -> Outcome {
    for q in [3u64, 4, 5] {
        for m in 2..=6u32 {
            let code = build_code(q, m, 2, false).map_err(err)?;
            let d = code.min_distance(Strategy::LowWeightSearch { budget: 3 }).map_err(err)?;
            let want = if num_integer::gcd(m as u64, q - 1) == 1 { 3 } else { 2 };
            ensure!(d == MinDistance::Exact(want), "q={q} m={m}: {d:?}");
        }
    }
    let code = build_code(3, 4, 3, false).map_err(err)?;
    let d = code.min_distance(Strategy::LowWeightSearch { budget: 4 }).map_err(err)?;
    ensure!(d == MinDistance::Exact(4), "[40, 32]: {d:?}");
    for (q, m, w) in [(4u64, 6u32, 3u32), (3, 4, 4)] {
        let code = build_code(q, m, 3, false).map_err(err)?;
        match locator_witness(q, m, w).map_err(err)? {
            Witness::Codeword(c) => ensure!(
                c.weight as u32 == w && code.contains(&c.symbols),
                "q={q} m={m}: bad witness"
            ),
            Witness::NotApplicable => return Err(format!("q={q} m={m}: no witness")),
        }
    }
    Ok("δ = 2 for 15 (q, m), d(C(40,3,4,3)) = 4, 2 witnesses".into())
}

fn secret_sharing() -> Outcome {
    let mut report = Vec::new();
    let mut ok = true;
    let cases = [
        (Family::Delta1, 4, false),
        (Family::Delta1, 5, true),
        (Family::Delta1, 6, true),
        (Family::Delta2Tilde, 5, true),
        (Family::Delta2Tilde, 6, true),
    ];
    for (family, m, want) in cases {
        let wd = table_closed_form(family, 3, m).map_err(err)?;
        let s = secret_sharing_suitable(&wd, 3).map_err(err)?;
        let rel = if s.suitable { ">" } else { "<=" };
        report.push(format!("{family} m={m}: {}/{} {rel} 2/3", s.w_min, s.w_max));
        ok &= s.suitable == want;
    }
    if ok {
        Ok(report.join("; "))
    } else {
        Err(report.join("; "))
    }
}

fn main() -> ExitCode {
    let criteria: [(u32, &str, fn() -> Outcome); 11] = [
        (1, "worked-example parameters", worked_examples),
        (2, "weight enumerators", enumerators),
        (3, "closed-form tables vs enumeration", tables),
        (4, "largest coset leaders", largest_leaders),
        (5, "Bose distances", bose_examples),
        (6, "power moments", moments),
        (7, "T/S/U value distributions", value_distributions),
        (8, "Griesmer bound", griesmer),
        (9, "dimension formula", dimension_formula_range),
        (10, "small minimum distances", small_distances),
        (11, "secret-sharing ratio", secret_sharing),
    ];
    let mut unexpected = 0;
    for (id, name, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        let expected_fail = EXPECTED_FAILURES.contains(&id);
        match outcome {
            Ok(detail) => {
                println!("PASS [{id:>2}] {name} ({secs:.2}s): {detail}");
                if expected_fail {
                    println!("     [{id:>2}] listed as an expected failure but passed");
                    unexpected += 1;
                }
            }
            Err(detail) => {
                let tag = if expected_fail { " (expected)" } else { "" };
                println!("FAIL [{id:>2}] {name}{tag} ({secs:.2}s): {detail}");
                if !expected_fail {
                    unexpected += 1;
                }
            }
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
