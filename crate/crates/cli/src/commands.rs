use std::fmt::Write as _;

use bchkit::analysis::{table_closed_form, Family, WeightDistribution};
use bchkit::bch::{build_code, BchCode, MinDistance, Strategy, MAX_BUDGET};
use bchkit::cosets::CosetContext;
use bchkit::nds::{self, decompose, expand, leader_by_block_pattern, BosePath, QaryWord};
use bchkit::Error;
use serde_json::{json, Value};

use crate::output::{
    bad, code_json, pairs_csv, weights_csv, weights_json, weights_text, Failure, Output, EXIT_CAP,
    EXIT_MISMATCH,
};

/// Search cost accepted when the budget is chosen automatically.
const AUTO_SEARCH_COST: f64 = 1e8;

#[derive(Clone, Copy, Debug)]
pub struct Caps {
    pub enum_cap: u64,
    /// `None` picks the largest budget whose search stays cheap.
    pub weight_budget: Option<u32>,
}

fn auto_budget(code: &BchCode) -> u32 {
    (1..=MAX_BUDGET)
        .rev()
        .find(|&b| code.search_cost(b) <= AUTO_SEARCH_COST)
        .unwrap_or(1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Method {
    #[value(name = "closed_form")]
    ClosedForm,
    #[value(name = "brute_force")]
    BruteForce,
    Both,
}

enum Distance {
    /// The code has dimension 0.
    Zero,
    Exact(u64, &'static str),
    AtLeast(u64, &'static str),
}

/// Exact distance by enumeration when it fits the cap, else by low-weight
/// search; `None` when neither fits.
fn measure(code: &BchCode, caps: Caps) -> Result<Option<Distance>, Failure> {
    if code.k == 0 {
        return Ok(Some(Distance::Zero));
    }
    match code.min_distance(Strategy::Enumerate { cap: caps.enum_cap }) {
        Ok(d) => return Ok(Some(Distance::Exact(d.lower_bound(), "exhaustive enumeration"))),
        Err(Error::TooLarge { .. }) => {}
        Err(e) => return Err(e.into()),
    }
    let floor = code.bch_bound().max(code.bose_distance + code.even_like as u64);
    let budget = caps.weight_budget.unwrap_or_else(|| auto_budget(code));
    match code.low_weight_search(budget) {
        Ok(r) => Ok(Some(match r.distance {
            MinDistance::Exact(d) => Distance::Exact(d, "low-weight search"),
            MinDistance::AtLeast(b) => Distance::AtLeast(b.max(floor), "low-weight search and BCH bound"),
        })),
        Err(Error::TooLarge { .. }) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

pub fn code_params(q: u64, m: u32, delta: u64, even_like: bool, caps: Caps) -> Result<Output, Failure> {
    let code = build_code(q, m, delta, even_like)?;
    let measured = measure(&code, caps)?;
    let floor = code.bch_bound().max(code.bose_distance + even_like as u64);
    let (d_value, exact, strategy) = match measured {
        Some(Distance::Zero) => (None, true, "zero code"),
        Some(Distance::Exact(d, s)) => (Some(d), true, s),
        Some(Distance::AtLeast(b, s)) => (Some(b), false, s),
        None => (Some(floor), false, "BCH bound (search exceeded its cap)"),
    };
    let d_line = match (d_value, exact) {
        (None, _) => "d undefined (zero code)".to_string(),
        (Some(d), true) => format!("d={d} ({strategy})"),
        (Some(d), false) => format!("d>={d} ({strategy})"),
    };
    let d_field = d_value.map_or("none".to_string(), |d| d.to_string());
    let symbols: Vec<String> = code.generator.iter().map(u8::to_string).collect();
    let degree = code.generator.len() - 1;

    let name = if even_like { "even-like subcode of C" } else { "C" };
    let mut text = String::new();
    let _ = writeln!(text, "{name}(n={}, q={q}, m={m}, delta={delta})", code.n());
    let _ = writeln!(text, "n={} k={} d_B={}", code.n(), code.k, code.bose_distance);
    let _ = writeln!(text, "{d_line}");
    let _ = writeln!(text, "generator:");
    let _ = writeln!(text, "deg={degree}");
    let _ = writeln!(text, "{}", symbols.join(","));

    let json = json!({
        "code": code_json(&code),
        "distance": { "value": d_value, "exact": exact, "strategy": strategy },
        "generator": { "degree": degree, "coefficients": code.generator },
    });
    let rows: Vec<(String, String)> = [
        ("q", q.to_string()),
        ("m", m.to_string()),
        ("n", code.n().to_string()),
        ("delta", delta.to_string()),
        ("even_like", even_like.to_string()),
        ("k", code.k.to_string()),
        ("bose_distance", code.bose_distance.to_string()),
        ("d", d_field),
        ("d_exact", exact.to_string()),
        ("strategy", strategy.to_string()),
        ("generator_degree", degree.to_string()),
        ("generator", symbols.join(",")),
    ]
    .into_iter()
    .map(|(a, b)| (a.to_string(), b))
    .collect();
    let mut out = Output::new(text, json, pairs_csv(("field", "value"), &rows));
    if measured.is_none() {
        out.exit = EXIT_CAP;
        out.notes.push(format!(
            "distance search exceeded its cap; only d >= {floor} is certified"
        ));
    }
    Ok(out)
}

pub fn weight_dist(q: u64, family: Family, m: u32, method: Method, caps: Caps) -> Result<Output, Failure> {
    if q != 3 {
        return Err(Error::UnsupportedQ(q).into());
    }
    let closed = match method {
        Method::ClosedForm | Method::Both => Some(table_closed_form(family, 3, m)?),
        Method::BruteForce => None,
    };
    let delta = family.designed_distance(m);
    let n = (3u64.pow(m) - 1) / 2;
    let brute = match method {
        Method::BruteForce | Method::Both => {
            let code = build_code(3, m, delta, family.even_like())?;
            Some(code.weight_distribution_bruteforce(caps.enum_cap)?)
        }
        Method::ClosedForm => None,
    };
    let primary: &WeightDistribution = closed.as_ref().or(brute.as_ref()).expect("one method ran");
    // the designed distance is itself a coset leader, so it is the Bose distance
    let code = json!({
        "q": 3,
        "m": m,
        "n": n,
        "delta": delta,
        "even_like": family.even_like(),
        "k": primary.k,
        "bose_distance": delta,
    });

    let mut text = String::new();
    let _ = writeln!(text, "{family} m={m}: [{n}, {}] delta={delta} d_B={delta}", primary.k);
    let mut json = json!({ "code": code, "method": method_name(method) });
    json["weights"] = weights_json(primary);
    if let Some(c) = &closed {
        let _ = writeln!(text, "closed form:\n{}", weights_text(c));
    }
    if let Some(b) = &brute {
        let _ = writeln!(text, "brute force:\n{}", weights_text(b));
    }
    let mut exit = 0;
    let mut notes = Vec::new();
    if let (Some(c), Some(b)) = (&closed, &brute) {
        json["brute_force"] = weights_json(b);
        let diff = c.diff(b);
        let _ = writeln!(text, "diff:");
        if diff.is_empty() {
            let _ = writeln!(text, "  (empty)");
        }
        let mut rows = Vec::new();
        for (w, cc, bc) in &diff {
            let _ = writeln!(text, "  weight {w}: closed form {cc}, brute force {bc}");
            notes.push(format!("mismatch at weight {w}: closed form {cc}, brute force {bc}"));
            rows.push(json!({ "w": w, "closed_form": cc.to_string(), "brute_force": bc.to_string() }));
        }
        json["diff"] = Value::Array(rows);
        if !diff.is_empty() {
            exit = EXIT_MISMATCH;
        }
    }
    let _ = writeln!(text, "enumerator: {primary}");
    let mut out = Output::new(text, json, weights_csv(primary));
    out.exit = exit;
    out.notes = notes;
    Ok(out)
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::ClosedForm => "closed_form",
        Method::BruteForce => "brute_force",
        Method::Both => "both",
    }
}

pub enum Selection {
    Largest(usize),
    All,
    Value(u64),
}

pub fn coset_leaders(q: u64, m: u32, sel: Selection) -> Result<Output, Failure> {
    let ctx = CosetContext::build(q, m)?;
    let n = ctx.n();
    let leaders: Vec<u64> = match sel {
        Selection::Largest(k) => ctx.largest_leaders(k),
        Selection::All => ctx.leaders().collect(),
        Selection::Value(s) => return describe_value(&ctx, s),
    };
    let mut text = format!("q={q} m={m} n={n}\n  {:>8}  size\n", "leader");
    let mut rows = Vec::new();
    let mut items = Vec::new();
    for &l in &leaders {
        let size = ctx.size(l)?;
        let _ = writeln!(text, "  {l:>8}  {size}");
        rows.push((l.to_string(), size.to_string()));
        items.push(json!({ "leader": l, "size": size }));
    }
    let json = json!({ "q": q, "m": m, "n": n, "leaders": items });
    Ok(Output::new(text, json, pairs_csv(("leader", "size"), &rows)))
}

fn blocks_string(word: &QaryWord) -> String {
    decompose(word).blocks().iter().map(ToString::to_string).collect()
}

fn path_name(p: BosePath) -> &'static str {
    match p {
        BosePath::ClosedForm => "closed form",
        BosePath::BoundThenScan => "formula bound, then scan",
        BosePath::Scan => "scan",
    }
}

fn describe_value(ctx: &CosetContext, s: u64) -> Result<Output, Failure> {
    let (q, m, n) = (ctx.q(), ctx.m(), ctx.n());
    if s >= n {
        return Err(bad(format!("value {s} must be below n = {n}")));
    }
    let word = expand(s, q as u32, m)?;
    let dec = decompose(&word);
    let leader = ctx.leader(s)?;
    let size = ctx.size(s)?;
    let bose = nds::smallest_leader_geq(s, ctx)?;
    let formula = bose.formula.map_or("none".to_string(), |f| f.to_string());

    let mut text = String::new();
    let _ = writeln!(text, "q={q} m={m} n={n} s={s}");
    let _ = writeln!(text, "word: {word}");
    let _ = writeln!(text, "decomposition: {}", blocks_string(&word));
    let _ = writeln!(text, "leader: {} (coset leader {leader}, size {size})", leader == s);
    let _ = writeln!(text, "M={} via {} (formula {formula})", bose.value, path_name(bose.path));

    let blocks: Vec<String> = dec.blocks().iter().map(ToString::to_string).collect();
    let json = json!({
        "q": q, "m": m, "n": n, "s": s,
        "word": word.to_string(),
        "decomposition": blocks,
        "is_leader": leader == s,
        "leader": leader,
        "coset_size": size,
        "bose": { "value": bose.value, "path": path_name(bose.path), "formula": bose.formula },
    });
    let rows: Vec<(String, String)> = [
        ("s", s.to_string()),
        ("word", word.to_string()),
        ("decomposition", blocks_string(&word)),
        ("is_leader", (leader == s).to_string()),
        ("leader", leader.to_string()),
        ("coset_size", size.to_string()),
        ("M", bose.value.to_string()),
        ("path", path_name(bose.path).to_string()),
        ("formula", formula),
    ]
    .into_iter()
    .map(|(a, b)| (a.to_string(), b))
    .collect();
    Ok(Output::new(text, json, pairs_csv(("field", "value"), &rows)))
}

/// Parses `0,1,1,0,0,2` or `011002` (digits below 10 only in the short form).
pub fn parse_word(q: u32, s: &str) -> Result<QaryWord, Failure> {
    let parsed: Option<Vec<u8>> = if s.contains(',') {
        s.split(',').map(|d| d.trim().parse().ok()).collect()
    } else {
        s.chars().map(|c| c.to_digit(10).map(|d| d as u8)).collect()
    };
    let digits = parsed.ok_or_else(|| bad(format!("cannot parse word {s:?}")))?;
    Ok(QaryWord::new(q, digits)?)
}

pub fn nds_report(word: QaryWord) -> Result<Output, Failure> {
    let q = word.q();
    let m = word.len() as u32;
    let dec = decompose(&word);
    let s = word.value();
    let formula = nds::leader_formula(s, q, m)?;
    let pattern = leader_by_block_pattern(&word);

    let mut text = String::new();
    let _ = writeln!(text, "q={q} m={m} value={s}");
    let _ = writeln!(text, "word: {word}");
    let _ = writeln!(text, "nondecreasing: {}", word.is_nds());
    let _ = writeln!(text, "decomposition: {}", blocks_string(&word));
    let _ = writeln!(text, "blocks: {}", dec.len());
    let _ = writeln!(text, "block-pattern leader test: {pattern}");
    match formula {
        Some((v, exact)) => {
            let _ = writeln!(text, "smallest-leader formula: {v} ({})", if exact { "exact" } else { "lower bound" });
        }
        None => {
            let _ = writeln!(text, "smallest-leader formula: not applicable");
        }
    }
    let blocks: Vec<String> = dec.blocks().iter().map(ToString::to_string).collect();
    let json = json!({
        "q": q, "m": m, "value": s,
        "word": word.to_string(),
        "is_nds": word.is_nds(),
        "decomposition": blocks,
        "block_pattern_leader": pattern,
        "formula": formula.map(|(v, exact)| json!({ "value": v, "exact": exact })),
    });
    let rows: Vec<(String, String)> = [
        ("value", s.to_string()),
        ("word", word.to_string()),
        ("is_nds", word.is_nds().to_string()),
        ("decomposition", blocks_string(&word)),
        ("block_pattern_leader", pattern.to_string()),
        ("formula", formula.map_or("none".to_string(), |(v, _)| v.to_string())),
    ]
    .into_iter()
    .map(|(a, b)| (a.to_string(), b))
    .collect();
    Ok(Output::new(text, json, pairs_csv(("field", "value"), &rows)))
}
