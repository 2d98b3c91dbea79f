use liftlab::chartab::character_table;
use liftlab::harness::corpus_catalog;
use liftlab::numtheory::gcd;
use liftlab::pspecial::{factorize, is_p_prime_special, is_p_special, special_product};
use liftlab::vertex::canonical_pair;
use liftlab::Cyclotomic;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

const CONDUCTORS: &[u64] = &[1, 3, 4, 5, 7, 8, 9, 12, 15, 24];

fn cyclo() -> impl Strategy<Value = Cyclotomic> {
    (
        prop::sample::select(CONDUCTORS),
        prop::collection::vec((-4i64..5, 1i64..4), 1..5),
    )
        .prop_map(|(n, terms)| {
            terms
                .iter()
                .enumerate()
                .map(|(k, &(a, b))| {
                    Cyclotomic::root_of_unity(n, k as i64 * 5 + a)
                        .unwrap()
                        .scale(&BigRational::new(BigInt::from(a), BigInt::from(b)))
                })
                .sum()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in cyclo(), b in cyclo(), c in cyclo()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Cyclotomic::one(), a.clone());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inverse().unwrap(), Cyclotomic::one());
        }
    }

    #[test]
    fn canonical_form_is_stable(a in cyclo()) {
        let c = a.conductor();
        prop_assert!(c % 4 != 2);
        let text = a.to_string();
        prop_assert_eq!(text.parse::<Cyclotomic>().unwrap(), a.clone());
        prop_assert_eq!(a.complex_conjugate().complex_conjugate(), a);
    }

    #[test]
    fn galois_maps_are_ring_homomorphisms(a in cyclo(), b in cyclo(), k in 1i64..2520) {
        prop_assume!(gcd(k as u64, 2520) == 1);
        prop_assert_eq!((&a * &b).galois(k).unwrap(), &a.galois(k).unwrap() * &b.galois(k).unwrap());
        prop_assert_eq!((&a + &b).galois(k).unwrap(), &a.galois(k).unwrap() + &b.galois(k).unwrap());
        prop_assert_eq!(a.galois(-1).unwrap(), a.complex_conjugate());
    }

    #[test]
    fn permutation_group_axioms(gi in 0usize..13, i in 0usize..48, j in 0usize..48) {
        let corpus = corpus_catalog();
        let g = &corpus[gi].group;
        let x = g.element(i % g.order());
        let y = g.element(j % g.order());
        prop_assert!(g.contains(&(x * y)));
        prop_assert_eq!((x * y).inverse(), &y.inverse() * &x.inverse());
        prop_assert_eq!(g.order() as u64 % x.order(), 0);
        prop_assert_eq!(g.class_of(x), g.class_of(&x.conjugate_by(y)));
    }

    #[test]
    fn factorization_round_trips(gi in 0usize..13, ci in 0usize..8, pi in 0usize..3) {
        let corpus = corpus_catalog();
        let e = &corpus[gi];
        let p = [2u64, 3, 5][pi];
        let irr = character_table(&e.group).irreducibles().to_vec();
        let chi = &irr[ci % irr.len()];
        if let Some(f) = factorize(chi, p).unwrap() {
            prop_assert!(is_p_special(&f.p_part, p).unwrap());
            prop_assert!(is_p_prime_special(&f.p_prime_part, p).unwrap());
            prop_assert_eq!(&special_product(&f.p_part, &f.p_prime_part, p).unwrap(), chi);
        }
    }

    #[test]
    fn pair_canonicalization_ignores_conjugation(gi in 0usize..13, si in 0usize..64, ci in 0usize..8, xi in 0usize..48) {
        let corpus = corpus_catalog();
        let g = &corpus[gi].group;
        let subs = g.all_subgroups().unwrap();
        let q = &subs[si % subs.len()];
        let irr = character_table(q).irreducibles().to_vec();
        let delta = &irr[ci % irr.len()];
        let x = g.element(xi % g.order());
        let moved = delta.conjugate_by(x);
        let a = canonical_pair(g, delta).unwrap();
        let b = canonical_pair(g, &moved).unwrap();
        prop_assert_eq!(a.key(), b.key());
    }
}
