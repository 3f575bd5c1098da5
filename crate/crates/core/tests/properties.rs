mod common;

use cncode::boolean::{code_from_functions, delta_via_sums, restricted_min_discrepancy};
use cncode::bounds::{check, BoundKind};
use cncode::gf2::FieldCtx;
use cncode::{
    delta_r, discrepancy_pair, hamming_distance, min_discrepancy, min_hamming, rational,
    BooleanFunction, Code, EvaluationSet, Rational, Word,
};
use num_bigint::BigUint;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{naive_delta, naive_min_delta, naive_walsh, random_code, random_linear_code};

fn r_strategy() -> impl Strategy<Value = Rational> {
    (1i64..40, 1i64..8).prop_filter_map("r >= 1", |(a, b)| (a >= b).then(|| rational(a, b)))
}

fn word_pair(max_n: usize) -> impl Strategy<Value = (Word, Word)> {
    (1..=max_n).prop_flat_map(|n| {
        (
            prop::collection::vec(any::<bool>(), n),
            prop::collection::vec(any::<bool>(), n),
        )
            .prop_map(|(a, b)| (Word::from_bits(a).unwrap(), Word::from_bits(b).unwrap()))
    })
}

fn word_triple(max_n: usize) -> impl Strategy<Value = (Word, Word, Word)> {
    (1..=max_n).prop_flat_map(|n| {
        let v = || prop::collection::vec(any::<bool>(), n);
        (v(), v(), v()).prop_map(|(a, b, c)| {
            (
                Word::from_bits(a).unwrap(),
                Word::from_bits(b).unwrap(),
                Word::from_bits(c).unwrap(),
            )
        })
    })
}

fn table(m: u32) -> impl Strategy<Value = BooleanFunction> {
    prop::collection::vec(any::<bool>(), 1usize << m).prop_map(move |bits| {
        BooleanFunction::from_table(m, Word::from_bits(bits).unwrap()).unwrap()
    })
}

proptest! {
    #[test]
    fn delta_matches_bitwise_count((y, x) in word_pair(200), r in r_strategy()) {
        prop_assert_eq!(delta_r(&y, &x, &r).unwrap(), naive_delta(&y, &x, &r));
    }

    #[test]
    fn delta_is_nonnegative_and_separating((y, x) in word_pair(130), r in r_strategy()) {
        let d = delta_r(&y, &x, &r).unwrap();
        prop_assert!(d >= rational(0, 1));
        prop_assert_eq!(d == rational(0, 1), y == x);
    }

    #[test]
    fn triangle_inequality((a, b, c) in word_triple(130), r in r_strategy()) {
        let ab = delta_r(&a, &b, &r).unwrap();
        let bc = delta_r(&b, &c, &r).unwrap();
        let ac = delta_r(&a, &c, &r).unwrap();
        prop_assert!(ac <= ab + bc);
    }

    #[test]
    fn r_one_is_hamming((y, x) in word_pair(130)) {
        let d = delta_r(&y, &x, &rational(1, 1)).unwrap();
        prop_assert_eq!(d, rational(hamming_distance(&y, &x).unwrap() as i64, 1));
    }

    #[test]
    fn swap_exchanges_counts((y, x) in word_pair(100)) {
        let p = discrepancy_pair(&y, &x).unwrap();
        prop_assert_eq!(discrepancy_pair(&x, &y).unwrap(), p.swap());
    }

    #[test]
    fn xor_with_self_is_zero((y, _) in word_pair(300)) {
        prop_assert!(y.xor(&y).unwrap().is_zero());
        prop_assert_eq!(y.complement().complement(), y.clone());
        prop_assert_eq!(y.weight() + y.complement().weight(), y.len());
    }

    #[test]
    fn word_text_round_trip((y, _) in word_pair(150)) {
        let back: Word = y.to_string().parse().unwrap();
        prop_assert_eq!(back, y);
    }

    #[test]
    fn profile_matches_brute_force(seed in any::<u64>(), n in 2usize..20, k in 2usize..24, r in r_strategy()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = k.min(1 << n);
        let code = random_code(&mut rng, n, k);
        prop_assert_eq!(min_discrepancy(&code, &r).unwrap().value, naive_min_delta(&code, &r));
    }

    #[test]
    fn profile_witness_attains_minimum(seed in any::<u64>(), n in 2usize..16, k in 2usize..20, r in r_strategy()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let code = random_code(&mut rng, n, k.min(1 << n));
        let m = min_discrepancy(&code, &r).unwrap();
        let (i, j) = m.witness;
        prop_assert!(i != j);
        prop_assert_eq!(delta_r(code.word(i), code.word(j), &r).unwrap(), m.value);
    }

    #[test]
    fn sandwich(seed in any::<u64>(), n in 2usize..32, k in 2usize..64, r in r_strategy()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let code = random_code(&mut rng, n, k.min(1 << n));
        let dh = rational(min_hamming(&code).unwrap() as i64, 1);
        let d = min_discrepancy(&code, &r).unwrap().value;
        prop_assert!(dh <= d);
        prop_assert!(d <= (&r + rational(1, 1)) / rational(2, 1) * dh);
    }

    #[test]
    fn linear_codes_collapse(seed in any::<u64>(), n in 2usize..20, dim in 1usize..8, r in r_strategy()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let code = random_linear_code(&mut rng, n, dim);
        prop_assume!(code.len() >= 2);
        prop_assert!(code.is_xor_closed());
        let dh = min_hamming(&code).unwrap() as i64;
        prop_assert_eq!(min_discrepancy(&code, &r).unwrap().value, rational(dh, 1));
    }

    #[test]
    fn code_text_round_trip(seed in any::<u64>(), n in 1usize..40, k in 1usize..30) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let code = random_code(&mut rng, n, k.min(1 << n.min(20)));
        let back = Code::parse(&code.to_text(&["comment".to_string()])).unwrap();
        prop_assert_eq!(back, code);
    }

    #[test]
    fn real_codes_satisfy_every_bound(seed in any::<u64>(), n in 2usize..14, k in 2usize..40, r in r_strategy()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let code = random_code(&mut rng, n, k.min(1 << n));
        let d = min_discrepancy(&code, &r).unwrap().value;
        let kk = BigUint::from(code.len());
        for kind in BoundKind::ALL {
            let s = check(kind, code.n(), &kk, &d, &r).unwrap();
            prop_assert!(s.holds, "{:?} violated", kind);
            prop_assert!(!s.meets || s.applicable);
        }
    }

    #[test]
    fn fast_walsh_matches_naive(f in table(4)) {
        let bits: Vec<bool> = f.table().iter().collect();
        prop_assert_eq!(f.walsh().values().to_vec(), naive_walsh(&bits));
    }

    #[test]
    fn parseval(m in 1u32..9, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = BooleanFunction::from_table(m, common::random_word(&mut rng, 1 << m)).unwrap();
        let w = f.walsh();
        prop_assert!(w.parseval_holds());
        prop_assert!(w.parity_consistent());
    }

    #[test]
    fn bentness_by_spectrum_and_autocorrelation_agree(f in table(4)) {
        prop_assert_eq!(f.is_bent(), f.is_bent_by_autocorrelation());
    }

    #[test]
    fn hex_round_trip(m in 1u32..10, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = BooleanFunction::from_table(m, common::random_word(&mut rng, 1 << m)).unwrap();
        prop_assert_eq!(BooleanFunction::from_hex(&f.to_hex()).unwrap(), f);
    }

    #[test]
    fn character_sum_formula_matches_direct(m in 1u32..6, seed in any::<u64>(), r in r_strategy()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = BooleanFunction::from_table(m, common::random_word(&mut rng, 1 << m)).unwrap();
        let g = BooleanFunction::from_table(m, common::random_word(&mut rng, 1 << m)).unwrap();
        prop_assume!(f != g);
        let v = EvaluationSet::full(m).unwrap();
        let direct = delta_r(&f.restrict(&v).unwrap(), &g.restrict(&v).unwrap(), &r).unwrap();
        prop_assert_eq!(delta_via_sums(&f, &g, &v, &r).unwrap(), direct);
    }

    #[test]
    fn restricted_minimum_equals_full_minimum(m in 2u32..5, seed in any::<u64>(), count in 2usize..12, r in r_strategy()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut fs: Vec<BooleanFunction> = Vec::new();
        while fs.len() < count.min(1 << (1 << m)) {
            let f = BooleanFunction::from_table(m, common::random_word(&mut rng, 1 << m)).unwrap();
            if !fs.contains(&f) {
                fs.push(f);
            }
        }
        let v = EvaluationSet::full(m).unwrap();
        let code = code_from_functions(&v, &fs).unwrap();
        prop_assert_eq!(
            restricted_min_discrepancy(&v, &fs, &r).unwrap(),
            min_discrepancy(&code, &r).unwrap().value
        );
    }

    #[test]
    fn field_axioms(d in 2u32..9, a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
        let f = FieldCtx::new(d, None).unwrap();
        let e = |v: u32| f.element(v % f.order()).unwrap();
        let (a, b, c) = (e(a), e(b), e(c));
        prop_assert_eq!(f.mul(a, b).unwrap(), f.mul(b, a).unwrap());
        prop_assert_eq!(f.mul(f.mul(a, b).unwrap(), c).unwrap(), f.mul(a, f.mul(b, c).unwrap()).unwrap());
        let lhs = f.mul(a, f.add(b, c).unwrap()).unwrap();
        let rhs = f.add(f.mul(a, b).unwrap(), f.mul(a, c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(f.trace(f.add(a, b).unwrap()).unwrap(), f.trace(a).unwrap() ^ f.trace(b).unwrap());
        prop_assert_eq!(f.trace(f.mul(a, a).unwrap()).unwrap(), f.trace(a).unwrap());
    }
}
