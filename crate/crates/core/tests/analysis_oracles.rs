use std::collections::BTreeMap;

use bchkit::analysis::{
    bounds_report, griesmer_sum, moment_checks, n13_count, rank_of_q_with, s_value_table,
    secret_sharing_suitable, t_value_table, table_closed_form, u_value_table, Family, RankMethod, TernarySums,
    WeightDistribution,
};
use bchkit::bch::BchContext;
use bchkit::gf::{Elem, Zeta3};
use num_bigint::BigUint;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// `Σ_x ζ^{Q(x)}` straight from the form, one field power per term.
fn direct_sum(sums: &TernarySums, a: Elem, b: Elem) -> Zeta3 {
    let mut counts = [0i64; 3];
    for x in sums.field().elements() {
        counts[sums.quadratic_form(a, b, x) as usize] += 1;
    }
    Zeta3::new(counts[0] - counts[2], counts[1] - counts[2])
}

fn direct_histogram(sums: &TernarySums, scaled: bool) -> BTreeMap<Zeta3, u64> {
    let f = sums.field();
    let two = f.from_int(2);
    let mut out = BTreeMap::new();
    for a in sums.first_coefficients() {
        for b in f.elements() {
            let mut v = direct_sum(sums, a, b);
            if scaled {
                v = v + direct_sum(sums, f.mul(two, a), f.mul(two, b));
            }
            *out.entry(v).or_insert(0u64) += 1;
        }
    }
    out
}

fn as_map(d: &bchkit::analysis::ValueDistribution) -> BTreeMap<Zeta3, u64> {
    d.entries
        .iter()
        .map(|e| (e.value, u64::try_from(&e.multiplicity).unwrap()))
        .collect()
}

#[test]
fn t_and_s_distributions_at_m3() {
    let sums = TernarySums::odd(3).unwrap();
    let t = sums.t_distribution().unwrap();
    assert_eq!(as_map(&t), direct_histogram(&sums, false));
    assert!(t.matches(&t_value_table(3).unwrap()), "{:?}", t.mismatches(&t_value_table(3).unwrap()));
    assert_eq!(t.total(), BigUint::from(729u32));

    let s = sums.s_distribution().unwrap();
    assert_eq!(as_map(&s), direct_histogram(&sums, true));
    assert!(s.matches(&s_value_table(3).unwrap()));
}

#[test]
fn imaginary_rows_carry_both_signs() {
    // the printed count is for both signs; reading it per sign overshoots the total
    let sums = TernarySums::odd(3).unwrap();
    let t = sums.t_distribution().unwrap();
    let rows = t_value_table(3).unwrap();
    let printed: BigUint = rows.iter().map(|r| &r.multiplicity).sum();
    assert_eq!(printed, BigUint::from(729u32));
    let per_sign: BigUint = rows
        .iter()
        .map(|r| if r.plus_minus { &r.multiplicity * 2u32 } else { r.multiplicity.clone() })
        .sum();
    assert!(per_sign > BigUint::from(729u32));
    // measured split, recorded rather than assumed
    for r in rows.iter().filter(|r| r.plus_minus) {
        let plus = t.count(r.value);
        let minus = t.count(-r.value);
        assert_eq!(&plus + &minus, r.multiplicity);
        assert_eq!(plus, minus, "value {:?}", r.value);
    }
}

#[test]
fn u_distribution_at_m4() {
    let sums = TernarySums::even(4).unwrap();
    let u = sums.u_distribution().unwrap();
    assert_eq!(as_map(&u), direct_histogram(&sums, false));
    let rows = u_value_table(4).unwrap();
    assert!(u.matches(&rows), "{:?}", u.mismatches(&rows));
    let counts: Vec<u64> = rows.iter().map(|r| u64::try_from(&r.multiplicity).unwrap()).collect();
    assert_eq!(counts, [300, 168, 120, 120, 20, 1]);
    assert_eq!(u.count(Zeta3::from_int(-27)), BigUint::from(20u32));
    // U(0, 0) = 3^m
    assert_eq!(sums.u_sum(Elem::ZERO, Elem::ZERO).unwrap(), Zeta3::from_int(81));
}

#[test]
fn u_rejects_first_coefficient_outside_subfield() {
    let sums = TernarySums::even(4).unwrap();
    let g = sums.field().generator();
    assert!(sums.u_sum(g, Elem::ZERO).is_err());
}

#[test]
fn no_pair_reaches_the_positive_top_value() {
    for m in [3, 5] {
        let sums = TernarySums::odd(m).unwrap();
        assert_eq!(n13_count(&sums).unwrap(), BigUint::from(0u32), "m={m}");
    }
}

#[test]
fn moments_at_m3() {
    let report = moment_checks(3).unwrap();
    assert!(report.all_hold(), "{report:?}");
    let expected: Vec<i64> = report
        .entries
        .iter()
        .map(|e| e.computed.as_integer().unwrap())
        .collect();
    assert_eq!(expected, [1458, 78732, 32 * 3i64.pow(9) - 24 * 3i64.pow(6), 729]);
    assert!(moment_checks(4).is_err());
    assert!(moment_checks(7).is_err());
}

#[test]
fn rank_methods_agree_on_a_sample() {
    let sums = TernarySums::odd(5).unwrap();
    let f = sums.field();
    let elems: Vec<Elem> = f.elements().collect();
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for _ in 0..400 {
        let a = elems[rng.gen_range(0..elems.len())];
        let b = elems[rng.gen_range(0..elems.len())];
        if a.is_zero() && b.is_zero() {
            continue;
        }
        let k = rank_of_q_with(&sums, a, b, RankMethod::Kernel).unwrap();
        for method in [RankMethod::GramMatrix, RankMethod::RadicalRoots, RankMethod::ReducedRoots] {
            assert_eq!(rank_of_q_with(&sums, a, b, method).unwrap(), k, "{method:?}");
        }
        assert!([5, 4, 3].contains(&k));
        assert_eq!(sums.rank_from_value(sums.t_sum(a, b).unwrap()), k);
    }
}

#[test]
fn code_weight_from_s() {
    // the word (Q(α^j))_j of the δ2-tilde code has weight 3^{m-1} - S(a, b)/6
    let m = 3;
    let sums = TernarySums::odd(m).unwrap();
    let ctx = BchContext::new(3, m).unwrap();
    let f = ctx.field();
    assert_eq!(f.modulus(), sums.field().modulus());
    let fam = Family::Delta2Tilde;
    let code = ctx.code(fam.designed_distance(m), fam.even_like()).unwrap();
    let alpha = f.generator();
    let n = ctx.n();
    for a in f.elements() {
        for b in f.elements() {
            let word: Vec<u8> = (0..n)
                .map(|j| sums.quadratic_form(a, b, f.pow(alpha, j)) as u8)
                .collect();
            let weight = word.iter().filter(|&&c| c != 0).count() as i64;
            let s = sums.s_sum(a, b).unwrap().as_integer().unwrap();
            assert_eq!(6 * weight, 6 * 9 - s);
            let symbols: Vec<u8> = word
                .iter()
                .map(|&c| ctx.subfield().to_symbol(f.from_int(c as i64)).unwrap())
                .collect();
            assert!(code.contains(&symbols));
        }
    }
}

fn naive_griesmer(k: u64, d: u64, q: u64) -> u64 {
    let mut total = 0;
    let mut div = 1u64;
    for _ in 0..k {
        let mut c = 0;
        while c * div < d {
            c += 1;
        }
        total += c;
        div = div.saturating_mul(q);
    }
    total
}

#[test]
fn griesmer_for_one_weight_family() {
    for m in 3..=7u32 {
        let n = (3u64.pow(m) - 1) / 2;
        let fam = Family::Delta1Tilde;
        let d = table_closed_form(fam, 3, m).unwrap().min_nonzero_weight().unwrap();
        let expected = if m % 2 == 1 { 3u64.pow(m - 1) } else { 3u64.pow(m - 1) + 3u64.pow(m / 2 - 1) };
        assert_eq!(d, expected);
        let r = bounds_report(n, fam.dimension(m), d, 3, Some(fam.designed_distance(m)));
        assert!(r.griesmer_meets, "m={m}");
        assert_eq!(r.griesmer_sum, naive_griesmer(fam.dimension(m), d, 3));
    }
}

#[test]
fn secret_sharing_thresholds() {
    let one = WeightDistribution::from_pairs(13, 3, 3, &[(0, 1), (9, 26)]);
    assert!(secret_sharing_suitable(&one, 3).unwrap().suitable);
    let r = secret_sharing_suitable(
        &WeightDistribution::from_pairs(40, 3, 3, &[(0, 1), (25, 16), (30, 8), (40, 2)]),
        3,
    )
    .unwrap();
    assert_eq!((r.suitable, r.w_min, r.w_max), (false, 25, 40));
    // equality is not enough
    let edge = WeightDistribution::from_pairs(3, 1, 3, &[(0, 1), (2, 1), (3, 1)]);
    assert!(!secret_sharing_suitable(&edge, 3).unwrap().suitable);
    let zero = WeightDistribution::from_pairs(3, 0, 3, &[(0, 1)]);
    assert!(secret_sharing_suitable(&zero, 3).is_err());
}

proptest! {
    #[test]
    fn griesmer_matches_naive(k in 1u64..12, d in 1u64..2000, q in prop::sample::select(vec![2u64, 3, 4, 5, 7])) {
        prop_assert_eq!(griesmer_sum(k, d, q), naive_griesmer(k, d, q));
    }

    #[test]
    fn doubling_conjugates_t(ai in 0usize..243, bi in 0usize..243) {
        let sums = TernarySums::odd(5).unwrap();
        let f = sums.field();
        let elems: Vec<Elem> = f.elements().collect();
        let (a, b) = (elems[ai], elems[bi]);
        let two = f.from_int(2);
        let t = sums.t_sum(a, b).unwrap();
        prop_assert_eq!(sums.t_sum(f.mul(two, a), f.mul(two, b)).unwrap(), t.conj());
        prop_assert_eq!(t, direct_sum(&sums, a, b));
        let s = sums.s_sum(a, b).unwrap();
        prop_assert!(s.is_real());
    }
}
