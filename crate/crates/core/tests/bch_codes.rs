use std::collections::HashSet;

use bchkit::analysis::{table_closed_form, Family, WeightDistribution};
use bchkit::bch::{
    build_code, dimension_formula, locator_witness, BchContext, MinDistance, Strategy, Witness,
    DEFAULT_ENUM_CAP,
};
use bchkit::cosets::{delta_formula, full_size_bound};
use bchkit::gf::Elem;
use proptest::prelude::{prop, prop_assert, prop_assert_eq, proptest, Just, ProptestConfig};
use proptest::strategy::Strategy as _;

/// Weight histogram by encoding every message directly, without the Gray walk.
fn naive_histogram(q: u64, m: u32, delta: u64, even_like: bool) -> Vec<u64> {
    let code = build_code(q, m, delta, even_like).unwrap();
    let k = code.k as usize;
    let mut hist = vec![0u64; code.n() as usize + 1];
    let mut msg = vec![0u8; k];
    loop {
        hist[code.encode(&msg).unwrap().weight] += 1;
        let mut i = 0;
        while i < k && msg[i] as u64 == q - 1 {
            msg[i] = 0;
            i += 1;
        }
        if i == k {
            break;
        }
        msg[i] += 1;
    }
    hist
}

#[test]
fn gray_walk_matches_direct_encoding() {
    for (q, m) in [(3u64, 3u32), (4, 3), (5, 2), (3, 4)] {
        let ctx = BchContext::new(q, m).unwrap();
        for delta in 2..=ctx.n() {
            for even_like in [false, true] {
                let code = ctx.code(delta, even_like).unwrap();
                if (q as f64).powi(code.k as i32) > 2e5 {
                    continue;
                }
                let h = code.weight_histogram(DEFAULT_ENUM_CAP).unwrap();
                assert_eq!(h, naive_histogram(q, m, delta, even_like), "q={q} m={m} δ={delta}");
            }
        }
    }
}

#[test]
fn dimension_is_n_minus_zero_count() {
    for (q, m) in [(3u64, 3u32), (3, 4), (4, 3), (5, 3), (7, 2), (8, 2), (9, 2)] {
        let ctx = BchContext::new(q, m).unwrap();
        for delta in 2..=ctx.n() {
            for even_like in [false, true] {
                let code = ctx.code(delta, even_like).unwrap();
                let zeros = ctx.cosets().union_size_below(delta) + even_like as u64;
                assert_eq!(code.k, ctx.n() - zeros);
                assert_eq!(code.generator.len() as u64, zeros + 1);
            }
        }
    }
}

#[test]
fn worked_example_parameters() {
    let cases = [
        (3u64, 4u32, 3u64, (40u64, 32u64, 4u64)),
        (4, 6, 3, (1365, 1353, 3)),
        (5, 4, 3, (156, 148, 3)),
        (3, 3, 4, (13, 7, 4)),
        (3, 4, 5, (40, 28, 5)),
        (3, 5, 5, (121, 106, 5)),
    ];
    for (q, m, delta, (n, k, bose)) in cases {
        let code = build_code(q, m, delta, false).unwrap();
        assert_eq!((code.n(), code.k, code.bose_distance), (n, k, bose), "q={q} m={m} δ={delta}");
    }
}

#[test]
fn small_enumerators() {
    let code = build_code(3, 4, 25, false).unwrap();
    let d = code.weight_distribution_bruteforce(DEFAULT_ENUM_CAP).unwrap();
    assert_eq!(d.to_string(), "1+16z^25+8z^30+2z^40");
    let words: Vec<_> = code.enumerate_codewords(DEFAULT_ENUM_CAP).unwrap().collect();
    assert_eq!(words.len(), 27);
    assert_eq!(words.iter().filter(|w| w.weight == 40).count(), 2);
    assert_eq!(words[0].weight, 0);
}

#[test]
fn trace_representation_matches_generator_code() {
    // every family with q^k <= 3^11 at m <= 5 (the m = 6 cases run in the acceptance suite)
    for m in 3..=5 {
        for family in Family::ALL {
            let code = build_code(3, m, family.designed_distance(m), family.even_like()).unwrap();
            assert_eq!(code.k, family.dimension(m), "{family} m={m}");
            let brute = code.weight_distribution_bruteforce(DEFAULT_ENUM_CAP).unwrap();
            let trace = code.trace_weight_distribution(DEFAULT_ENUM_CAP).unwrap();
            assert_eq!(brute, trace, "{family} m={m}");
        }
    }
}

#[test]
fn trace_codewords_are_codewords() {
    let ctx = BchContext::new(3, 4).unwrap();
    let code = ctx.code(22, false).unwrap();
    let f = ctx.field();
    for (i, &r) in code.nonzero_reps.iter().enumerate() {
        let size = ctx.cosets().size(r).unwrap();
        let step = (f.order() - 1) / (3u64.pow(size) - 1);
        let mut coeffs = vec![Elem::ZERO; code.nonzero_reps.len()];
        coeffs[i] = f.pow(f.generator(), 5 * step);
        let w = ctx.trace_codeword(&code.nonzero_reps, &coeffs).unwrap();
        assert!(w.weight > 0 && code.contains(&w.symbols));
    }
    // a coefficient outside its subfield is rejected
    let bad = vec![f.generator(); code.nonzero_reps.len()];
    assert!(ctx.trace_codeword(&code.nonzero_reps, &bad).is_err());
}

#[test]
fn even_like_subcode() {
    for (q, m) in [(3u64, 3u32), (4, 3), (3, 4)] {
        let ctx = BchContext::new(q, m).unwrap();
        for delta in 2..=ctx.n() {
            let small = ctx.code(delta, true).unwrap();
            let big = ctx.code(delta, false).unwrap();
            if (q as f64).powi(small.k as i32) > 1e5 {
                continue;
            }
            assert_eq!(small.k + 1, big.k);
            let sub = ctx.subfield();
            for w in small.enumerate_codewords(DEFAULT_ENUM_CAP).unwrap() {
                let sum = w.symbols.iter().fold(0u8, |acc, &c| sub.add(acc, c));
                assert_eq!(sum, 0);
                assert!(big.contains(&w.symbols));
            }
        }
    }
}

#[test]
fn bch_bound_and_divisor_shortcut() {
    for (q, m) in [(3u64, 3u32), (4, 3), (5, 3), (3, 4), (7, 2)] {
        let ctx = BchContext::new(q, m).unwrap();
        for delta in 2..ctx.n() {
            for even_like in [false, true] {
                let code = ctx.code(delta, even_like).unwrap();
                if code.k == 0 {
                    continue;
                }
                let Ok(MinDistance::Exact(d)) =
                    code.min_distance(Strategy::Enumerate { cap: DEFAULT_ENUM_CAP })
                else {
                    continue;
                };
                assert!(d >= code.bch_bound(), "q={q} m={m} δ={delta} d={d}");
                assert!(d >= code.bose_distance);
                if !even_like && ctx.n().is_multiple_of(delta) {
                    assert_eq!(d, delta, "q={q} m={m} δ={delta}");
                }
            }
        }
    }
}

#[test]
fn formula_matches_coset_union() {
    for q in [3u64, 4, 5] {
        for m in 2..=5 {
            let ctx = BchContext::new(q, m).unwrap();
            let bound = full_size_bound(q, m).unwrap().min(ctx.n());
            for delta in 2..=bound {
                assert_eq!(
                    dimension_formula(q, m, delta).unwrap(),
                    ctx.n() - ctx.cosets().union_size_below(delta),
                    "q={q} m={m} δ={delta}"
                );
            }
        }
    }
}

#[test]
fn distance_two_and_three() {
    for q in [3u64, 4, 5] {
        for m in 2..=4 {
            let code = build_code(q, m, 2, false).unwrap();
            let d = code.min_distance(Strategy::LowWeightSearch { budget: 3 }).unwrap();
            let expected = if num_integer::gcd(m as u64, q - 1) == 1 { 3 } else { 2 };
            assert_eq!(d, MinDistance::Exact(expected), "q={q} m={m}");
        }
    }
    let code = build_code(3, 4, 3, false).unwrap();
    assert_eq!(
        code.min_distance(Strategy::LowWeightSearch { budget: 4 }).unwrap(),
        MinDistance::Exact(4)
    );
    let code = build_code(3, 3, 4, false).unwrap();
    let r = code.low_weight_search(3).unwrap();
    assert_eq!((r.distance, r.witness), (MinDistance::AtLeast(4), None));
}

#[test]
fn locator_witnesses() {
    let Witness::Codeword(w) = locator_witness(4, 6, 3).unwrap() else {
        panic!("expected a weight-3 codeword");
    };
    assert_eq!(w.weight, 3);
    assert!(build_code(4, 6, 3, false).unwrap().contains(&w.symbols));
    assert!(matches!(locator_witness(3, 4, 4).unwrap(), Witness::Codeword(c) if c.weight == 4));
    assert_eq!(locator_witness(3, 5, 3).unwrap(), Witness::NotApplicable);
    // 3 | 13 fails, and for q = 3 there is no primitive cube root of unity
    assert_eq!(locator_witness(3, 3, 3).unwrap(), Witness::NotApplicable);
    assert_eq!(locator_witness(3, 4, 5).unwrap(), Witness::NotApplicable);
}

#[test]
fn table_rows_match_enumeration_small() {
    for (family, m) in [
        (Family::Delta1, 3),
        (Family::Delta1, 4),
        (Family::Delta1Tilde, 3),
        (Family::Delta1Tilde, 4),
        (Family::Delta2, 3),
        (Family::Delta2, 4),
        (Family::Delta2Tilde, 3),
        (Family::Delta2Tilde, 4),
    ] {
        let closed = table_closed_form(family, 3, m).unwrap();
        let code = build_code(3, m, delta_formula(m, family.leader_index()), family.even_like()).unwrap();
        let brute: WeightDistribution = code.weight_distribution_bruteforce(DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(closed, brute, "{family} m={m}: {:?}", closed.diff(&brute));
    }
}

#[test]
fn open_problem_data_is_recorded_not_asserted() {
    // minimum distance of C(n, q, m, q + 1) on the small envelope, as data
    let mut seen = HashSet::new();
    for (q, m) in [(3u64, 3u32), (3, 4), (4, 3), (5, 3)] {
        let code = build_code(q, m, q + 1, false).unwrap();
        let d = code.low_weight_search(5).unwrap().distance;
        assert!(d.lower_bound() > q);
        seen.insert((q, m, d));
    }
    assert_eq!(seen.len(), 4);
}

fn arb_code() -> impl proptest::strategy::Strategy<Value = (u64, u32, u64)> {
    (prop::sample::select(vec![3u64, 4, 5, 7]), 2u32..=4).prop_flat_map(|(q, m)| {
        let n = (q.pow(m) - 1) / (q - 1);
        (Just(q), Just(m), 2..=n)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn bose_distance_is_leader((q, m, delta) in arb_code()) {
        let ctx = BchContext::new(q, m).unwrap();
        let code = ctx.code(delta, false).unwrap();
        prop_assert!(code.bose_distance >= delta);
        prop_assert!(code.bose_distance == ctx.n() || ctx.cosets().is_leader(code.bose_distance));
        if ctx.cosets().is_leader(delta) {
            prop_assert_eq!(code.bose_distance, delta);
        }
        // the Bose distance names the same code
        if code.bose_distance < ctx.n() {
            prop_assert_eq!(ctx.code(code.bose_distance, false).unwrap().generator, code.generator);
        }
    }
}
