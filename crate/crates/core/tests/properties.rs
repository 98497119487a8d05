use legendrian_t3::classes::{KnotType, LegendrianClass};
use legendrian_t3::contact::{dividing_profile, tb_max, TorusSpan};
use legendrian_t3::lattice::{det2, extend_to_sl2, gcd, is_primitive, normalize_horizontal_knot_type};
use legendrian_t3::{ContactStructure, Direction, Sign};
use proptest::prelude::*;

fn primitive_vector(range: i64) -> impl Strategy<Value = [i64; 3]> {
    prop::array::uniform3(-range..=range).prop_filter("primitive", |v| is_primitive(*v))
}

fn horizontal_direction() -> impl Strategy<Value = Direction> {
    (-1000i64..=1000, -1000i64..=1000)
        .prop_filter("coprime", |&(a, b)| gcd(a, b) == 1)
        .prop_map(|(a, b)| Direction::new(a, b, 0).unwrap())
}

fn knot_type() -> impl Strategy<Value = KnotType> {
    (1u32..=4, primitive_vector(6))
        .prop_map(|(n, d)| KnotType::new(ContactStructure::new(n).unwrap(), Direction::try_from(d).unwrap()))
}

/// Random stabilisation word applied to a random maximal class.
fn class_of(kt: &KnotType, base: usize, word: &[bool]) -> LegendrianClass {
    let p = word.iter().filter(|&&b| b).count() as u32;
    let m = word.len() as u32 - p;
    let base = kt.is_vertical().then_some(base % kt.base_count());
    kt.canonicalize(&kt.presentation(base, p, m)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn sl2_extension_is_unimodular((a, b) in (-100_000i64..=100_000, -100_000i64..=100_000)
        .prop_filter("coprime", |&(a, b)| gcd(a, b) == 1))
    {
        let m = extend_to_sl2(a, b).unwrap();
        prop_assert_eq!(det2(&m), 1);
        prop_assert_eq!([m[0][0] * a + m[0][1] * b, m[1][0] * a + m[1][1] * b], [1, 0]);
        if b != 0 {
            prop_assert!(2 * m[0][0].abs() <= b.abs());
        }
    }

    #[test]
    fn horizontal_normalization_hits_vertical(d in horizontal_direction()) {
        let a = normalize_horizontal_knot_type(&d).unwrap();
        prop_assert_eq!(a.apply(d.components()), [1, 0, 0]);
        prop_assert_eq!(a.determinant(), 1);
        prop_assert_eq!(a.entries()[2], [0, 0, 1]);
    }

    #[test]
    fn tb_max_sign(n in 1u32..=6, v in primitive_vector(30)) {
        let d = Direction::try_from(v).unwrap();
        let t = tb_max(ContactStructure::new(n).unwrap(), &d);
        prop_assert!(t <= 0);
        prop_assert_eq!(t == 0, v[2] == 0);
    }

    #[test]
    fn profile_shape(n in 1u32..=5, b in prop::array::uniform3(-12i64..=12), c in prop::array::uniform3(-12i64..=12)) {
        if let Ok(span) = TorusSpan::new(b, c) {
            let p = dividing_profile(ContactStructure::new(n).unwrap(), &span);
            prop_assert!(p.count >= 2);
            prop_assert_eq!(p.count % (2 * u64::from(n)), 0);
            prop_assert_eq!(gcd(p.slope.numerator(), p.slope.denominator()), 1);
            prop_assert!(p.slope.denominator() >= 0);
        }
    }

    #[test]
    fn isotopy_is_an_equivalence(
        kt in knot_type(),
        words in prop::collection::vec((0usize..8, prop::collection::vec(any::<bool>(), 0..6)), 3),
    ) {
        let pres: Vec<_> = words
            .iter()
            .map(|(b, w)| {
                let p = w.iter().filter(|&&x| x).count() as u32;
                kt.presentation(kt.is_vertical().then_some(b % kt.base_count()), p, w.len() as u32 - p)
            })
            .collect();
        let iso = |i: usize, j: usize| kt.is_isotopic(&pres[i], &pres[j]).unwrap();
        for i in 0..3 {
            prop_assert!(iso(i, i));
            for j in 0..3 {
                prop_assert_eq!(iso(i, j), iso(j, i));
                for k in 0..3 {
                    prop_assert!(!(iso(i, j) && iso(j, k)) || iso(i, k));
                }
            }
        }
    }

    #[test]
    fn stabilisation_moves_invariants(kt in knot_type(), base in 0usize..8, word in prop::collection::vec(any::<bool>(), 0..8)) {
        let c = class_of(&kt, base, &word);
        prop_assert!(kt.is_valid_class(&c));
        for s in Sign::BOTH {
            let next = kt.stabilize(&c, s);
            prop_assert!(kt.is_valid_class(&next));
            prop_assert_eq!(next.tb(), c.tb() - 1);
            prop_assert_eq!(next.r(), c.r() + s.as_i64());
        }
        let pm = kt.stabilize(&kt.stabilize(&c, Sign::Plus), Sign::Minus);
        let mp = kt.stabilize(&kt.stabilize(&c, Sign::Minus), Sign::Plus);
        prop_assert_eq!(pm, mp);
    }

    #[test]
    fn canonicalize_agrees_with_stepwise_stabilisation(kt in knot_type(), base in 0usize..8, word in prop::collection::vec(any::<bool>(), 0..10)) {
        let mut c = class_of(&kt, base, &[]);
        for &plus in &word {
            c = kt.stabilize(&c, if plus { Sign::Plus } else { Sign::Minus });
        }
        prop_assert_eq!(c, class_of(&kt, base, &word));
    }
}
