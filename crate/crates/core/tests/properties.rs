use proptest::prelude::*;

use principal_mf::a1mod::{self, A1Char};
use principal_mf::charalg::{freudenthal, weyl_dim};
use principal_mf::ingest;
use principal_mf::jantzen::irr_character;
use principal_mf::principal::{
    certify_not_mf, mf_decide_computed, n_sequence, project, recurrence_decompose,
    recurrence_multiplicities, CertifyOutcome, CharacterSource, Exactness, NSequence, Status,
};
use principal_mf::rootsys::{Family, GroupType, RootSystem, Weight};
use principal_mf::Characteristic;

const GROUPS: [(Family, usize); 6] = [
    (Family::A, 2),
    (Family::A, 3),
    (Family::B, 2),
    (Family::B, 3),
    (Family::C, 3),
    (Family::G, 2),
];

fn group_and_weight(max: i64) -> impl Strategy<Value = (RootSystem, Weight)> {
    (0..GROUPS.len()).prop_flat_map(move |i| {
        let (f, n) = GROUPS[i];
        proptest::collection::vec(0..=max, n).prop_map(move |c| {
            (RootSystem::build(GroupType::new(f, n).unwrap()), Weight::new(c))
        })
    })
}

fn prime() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![2u64, 3, 5, 7, 11, 13])
}

fn n_from(ch: &A1Char, r: u64) -> NSequence {
    NSequence::from_a1(ch, r, Exactness::Exact)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn mass_is_weyl_dimension((rs, lambda) in group_and_weight(3)) {
        let ch = freudenthal(&rs, &lambda).unwrap();
        prop_assert_eq!(ch.dim(&rs), weyl_dim(&rs, &lambda).unwrap());
    }

    #[test]
    fn projection_is_symmetric((rs, lambda) in group_and_weight(3)) {
        let a1 = project(&rs, &freudenthal(&rs, &lambda).unwrap());
        for (&w, &m) in &a1.mults {
            prop_assert_eq!(a1.mult(-w), m);
        }
        prop_assert!(a1.validate().is_ok());
    }

    #[test]
    fn recurrence_matches_direct_decomposition((rs, lambda) in group_and_weight(3), p in prime()) {
        prop_assume!(lambda.is_restricted(p) && p >= rs.coxeter_number());
        let Ok(ch) = irr_character(&rs, &lambda, p) else { return Ok(()) };
        let a1 = project(&rs, &ch);
        let r = a1.max_weight().unwrap() as u64;
        let rec = recurrence_decompose(&n_from(&a1, r), Characteristic::Prime(p)).unwrap();
        prop_assert_eq!(rec, a1mod::decompose(&a1, p).unwrap());
    }

    #[test]
    fn multiplicity_free_bounds_n((rs, lambda) in group_and_weight(3), p in prime()) {
        prop_assume!(lambda.is_restricted(p) && p >= rs.coxeter_number());
        let pc = Characteristic::Prime(p);
        let Ok(v) = mf_decide_computed(&rs, &lambda, pc, None) else { return Ok(()) };
        if v.status == Status::MF {
            let ns = n_sequence(&rs, &lambda, pc, CharacterSource::Irreducible).unwrap();
            for (d, &n) in ns.n.iter().enumerate() {
                prop_assert!(n <= d as u64 + 1, "n_{} = {}", d, n);
            }
        }
    }

    #[test]
    fn certificates_agree_with_computation((rs, lambda) in group_and_weight(4), p in prime()) {
        prop_assume!(!lambda.is_zero() && lambda.is_restricted(p) && p >= rs.coxeter_number());
        let computed = mf_decide_computed(&rs, &lambda, Characteristic::Prime(p), None);
        match certify_not_mf(&rs, &lambda, p, None).unwrap() {
            CertifyOutcome::NotMF(cert) => {
                prop_assert!(cert.check().is_ok());
                prop_assert!(cert.verify_against(&rs, &lambda, p, None).is_ok());
                if let Ok(v) = computed {
                    prop_assert_eq!(v.status, Status::NotMF);
                }
            }
            CertifyOutcome::MF(f) => {
                prop_assert!(a1mod::is_multiplicity_free(&f));
                if let Ok(v) = computed {
                    prop_assert_eq!(v.factors(), Some(&f[..]));
                }
            }
            CertifyOutcome::Unknown => {}
        }
    }

    #[test]
    fn char0_multiplicities_are_differences((rs, lambda) in group_and_weight(3)) {
        let a1 = project(&rs, &freudenthal(&rs, &lambda).unwrap());
        let r = a1.max_weight().unwrap() as u64;
        let ns = n_from(&a1, r);
        let ms = recurrence_multiplicities(&ns, Characteristic::Zero).unwrap();
        for (d, &m) in ms.iter().enumerate() {
            let prev = if d == 0 { 0 } else { ns.get(d - 1) };
            prop_assert_eq!(m, ns.get(d) - prev);
        }
    }

    #[test]
    fn gaps_partition_the_string(t in 0u64..2000, p in prime()) {
        let g = a1mod::gaps(t, p);
        let weights = a1mod::irr_weights(t, p);
        let ti = t as i64;
        for w in (-ti..=ti).step_by(2) {
            prop_assert_eq!(weights.contains(&w), !g.contains(w));
        }
    }

    #[test]
    fn ingest_round_trip((rs, lambda) in group_and_weight(3), p in prime()) {
        prop_assume!(lambda.is_restricted(p));
        let Ok(ch) = irr_character(&rs, &lambda, p) else { return Ok(()) };
        let text = ingest::to_tsv(&lambda, Characteristic::Prime(p), &ch);
        let table = ingest::parse(&text).unwrap();
        prop_assert_eq!(&table.character, &ch);
        prop_assert_eq!(ingest::to_tsv(&table.lambda, table.p, &table.character), text);
    }
}
