use proptest::prelude::*;

use stegocodes::construct::{direct_sum_construct, f5_matrix, DirectSumPlan};
use stegocodes::formats;
use stegocodes::linalg::mat_vec;
use stegocodes::perfect::{golay_ternary, hamming_code, PerfectnessCertificate};
use stegocodes::{
    build_coding_table, embed, extract, is_stego_matrix, FieldElement, FieldSpec, RunConfig,
    VerificationReport, Word,
};

const FIELD_SIZES: [u64; 9] = [2, 3, 4, 5, 7, 8, 9, 11, 16];

fn field_and_elems(count: usize) -> impl Strategy<Value = (FieldSpec, Vec<FieldElement>)> {
    prop::sample::select(FIELD_SIZES.to_vec()).prop_flat_map(move |q| {
        prop::collection::vec(0..q as u32, count).prop_map(move |v| {
            (
                FieldSpec::new(q).unwrap(),
                v.into_iter().map(FieldElement).collect(),
            )
        })
    })
}

fn field_and_words(n: usize, count: usize) -> impl Strategy<Value = (FieldSpec, Vec<Word>)> {
    prop::sample::select(FIELD_SIZES.to_vec()).prop_flat_map(move |q| {
        prop::collection::vec(prop::collection::vec(0..q as u32, n), count).prop_map(move |ws| {
            (
                FieldSpec::new(q).unwrap(),
                ws.into_iter().map(Word::from_values).collect(),
            )
        })
    })
}

proptest! {
    #[test]
    fn field_axioms_hold_pointwise((f, e) in field_and_elems(3)) {
        let (a, b, c) = (e[0], e[1], e[2]);
        prop_assert_eq!(f.add(a, b), f.add(b, a));
        prop_assert_eq!(f.mul(a, b), f.mul(b, a));
        prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), FieldElement::ZERO);
        prop_assert_eq!(f.sub(f.add(a, b), b), a);
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), FieldElement::ONE);
        }
    }

    #[test]
    fn distance_is_weight_of_difference((f, ws) in field_and_words(9, 3)) {
        let (x, y, z) = (&ws[0], &ws[1], &ws[2]);
        let d = x.distance(y).unwrap();
        prop_assert_eq!(d, f.sub_words(x, y).unwrap().weight());
        prop_assert_eq!(d, y.distance(x).unwrap());
        prop_assert!(x.distance(z).unwrap() <= d + y.distance(z).unwrap());
    }

    #[test]
    fn word_text_and_index_round_trip((f, ws) in field_and_words(6, 1)) {
        let w = &ws[0];
        prop_assert_eq!(&f.parse_word(&f.format_word(w)).unwrap(), w);
        prop_assert_eq!(&f.word_from_index(f.word_index(w), 6), w);
    }

    #[test]
    fn matrix_vector_product_is_linear(
        (f, ws) in field_and_words(5, 5),
        c in 0u32..16,
    ) {
        let rows = &ws[..3];
        let (x, y) = (&ws[3], &ws[4]);
        let c = FieldElement(c % f.q());
        let lhs = mat_vec(&f, rows, &f.add_words(&f.scale_word(c, x), y).unwrap()).unwrap();
        let hx = mat_vec(&f, rows, x).unwrap();
        let hy = mat_vec(&f, rows, y).unwrap();
        prop_assert_eq!(lhs, f.add_words(&f.scale_word(c, &hx), &hy).unwrap());
    }

    #[test]
    fn embedding_round_trips_on_f5(k in 1usize..=5, seed in any::<u64>()) {
        let h = f5_matrix(k).unwrap();
        let table = build_coding_table(&h, &RunConfig::default()).unwrap();
        let f = h.field();
        let n = h.n();
        let x = f.word_from_index(seed % (1u64 << n), n);
        let y = f.word_from_index((seed >> 32) % (1u64 << k), k);
        let z = embed(&h, &table, &x, &y).unwrap();
        prop_assert_eq!(extract(&h, &z).unwrap(), y);
        prop_assert!(x.distance(&z).unwrap() <= 1);
    }

    #[test]
    fn embedding_round_trips_on_direct_sums(
        q in prop::sample::select(vec![2u64, 3]),
        k in 2usize..=4,
        seed in any::<u64>(),
    ) {
        let h = direct_sum_construct(&DirectSumPlan::balanced(q, k, 2).unwrap()).unwrap();
        let cfg = RunConfig::default();
        prop_assert!(is_stego_matrix(&h, &cfg).unwrap().pass);
        let h = h.verify(&cfg).unwrap();
        let table = build_coding_table(&h, &cfg).unwrap();
        let f = h.field();
        let x = f.word_from_index(seed % f.space_size(h.n()).unwrap() as u64, h.n());
        let y = f.word_from_index((seed >> 20) % f.space_size(k).unwrap() as u64, k);
        let z = embed(&h, &table, &x, &y).unwrap();
        prop_assert_eq!(extract(&h, &z).unwrap(), y);
        prop_assert!(x.distance(&z).unwrap() <= 2);
    }

    #[test]
    fn report_json_round_trips(pass in any::<bool>(), work in any::<u64>(), seed in any::<u64>()) {
        let report = VerificationReport {
            pass,
            witness: None,
            probabilistic: true,
            work,
            samples: Some(17),
            seed: Some(seed),
        };
        let text = serde_json::to_string(&report).unwrap();
        prop_assert_eq!(serde_json::from_str::<VerificationReport>(&text).unwrap(), report);
    }
}

#[test]
fn matrix_files_round_trip_for_constructions() {
    for q in [2u64, 3, 4, 5] {
        for k in 1..=3 {
            for t in 1..=k {
                let h = direct_sum_construct(&DirectSumPlan::balanced(q, k, t).unwrap()).unwrap();
                assert_eq!(formats::parse_matrix(&formats::render_matrix(&h)).unwrap(), h);
            }
        }
    }
}

#[test]
fn certificate_json_round_trips() {
    let cfg = RunConfig::default();
    let codes = [
        hamming_code(3, &FieldSpec::binary()).unwrap(),
        hamming_code(2, &FieldSpec::new(4).unwrap()).unwrap(),
        golay_ternary().unwrap(),
    ];
    for (code, t) in codes.iter().zip([1, 1, 2]) {
        let cert = code.certificate(t, &cfg).unwrap();
        let text = serde_json::to_string_pretty(&cert).unwrap();
        assert_eq!(serde_json::from_str::<PerfectnessCertificate>(&text).unwrap(), cert);
        assert!(cert.passes());
    }
}
