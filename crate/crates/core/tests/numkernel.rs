use proptest::prelude::*;
use torsion_atlas::catalog::builtin_catalog;
use torsion_atlas::numkernel::expr::parse_poly;
use torsion_atlas::numkernel::*;

fn q(s: &str) -> Rational {
    s.parse().unwrap()
}

#[test]
fn evaluation_examples() {
    assert_eq!(poly_eval(&parse_poly("t^3-1").unwrap(), &q("1")), q("0"));
    assert_eq!(poly_eval(&parse_poly("6*t^2-5*t+1").unwrap(), &q("1/2")), q("0"));
    assert_eq!(
        poly_eval(&parse_poly("25*(t^2+10*t+5)^3").unwrap(), &q("1")),
        q("102400")
    );
}

#[test]
fn rational_text_format() {
    assert_eq!(q("6/4").to_string(), "3/2");
    assert_eq!(q("-0/5").to_string(), "0");
    assert_eq!(q("-10/2").to_string(), "-5");
    assert!("10/-2".parse::<Rational>().is_err());
    assert!("1/0".parse::<Rational>().is_err());
    assert!("1/2/3".parse::<Rational>().is_err());
    assert!("".parse::<Rational>().is_err());
}

#[test]
fn powers_and_square_classes() {
    assert!(is_nth_power(&q("-27/8"), 3));
    assert!(!is_nth_power(&q("4"), 3));
    assert!(!is_nth_power(&q("-4"), 2));
    assert!(is_nth_power(&q("0"), 3));
    assert_eq!(same_square_class(&q("2"), &q("8")), Ok(true));
    assert_eq!(same_square_class(&q("2"), &q("-2")), Ok(false));
    assert_eq!(same_square_class(&q("64"), &q("-4096")), Ok(false));
    assert_eq!(same_square_class(&q("-64"), &q("-4096")), Ok(true));
    assert!(same_square_class(&q("0"), &q("1")).is_err());
}

#[test]
fn carmichael_examples() {
    assert_eq!(carmichael_lambda(16), 4);
    assert_eq!(carmichael_lambda(240), 4);
    assert_eq!(carmichael_lambda(7), 6);
    assert_eq!(carmichael_lambda(1), 1);
}

/// Against the exponent of the unit group, computed by brute force.
#[test]
fn carmichael_against_brute_force() {
    fn order(a: u64, n: u64) -> u64 {
        let (mut x, mut k) = (a % n, 1);
        while x != 1 % n {
            x = x * a % n;
            k += 1;
        }
        k
    }
    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    for n in 1..=400u64 {
        let e = (1..=n.max(1))
            .filter(|&a| gcd(a, n) == 1)
            .map(|a| order(a, n))
            .fold(1, |l, o| l / gcd(l, o) * o);
        assert_eq!(carmichael_lambda(n), e, "n = {n}");
    }
}

#[test]
fn cyclotomic_sweep() {
    for n in 1..=2000u64 {
        assert_eq!(4 % carmichael_lambda(n) == 0, 240 % n == 0, "n = {n}");
    }
}

#[test]
fn ratfunc_errors() {
    let f = RatFunc::new(parse_poly("t^3").unwrap(), parse_poly("t+16").unwrap()).unwrap();
    assert_eq!(ratfunc_eval(&f, &q("2")).unwrap(), q("4/9"));
    assert!(matches!(ratfunc_eval(&f, &q("-16")), Err(RatFuncError::Pole(_))));
    assert!(matches!(
        RatFunc::new(IntPoly::var(), IntPoly::zero()),
        Err(RatFuncError::ZeroDenominator)
    ));
    assert_eq!(ratfunc_fiber(&f, &q("4/9")).unwrap(), [q("2")].into_iter().collect());
    // common factors are cancelled at construction
    let g = RatFunc::new(parse_poly("(t-1)*t^2").unwrap(), parse_poly("(t-1)*(2*t+4)").unwrap()).unwrap();
    assert_eq!(g.den().degree(), Some(1));
}

#[test]
fn big_constant_term() {
    // roots 10^30/7 and -3: the constant term is far past trial division
    let f = parse_poly("(7*t-1000000000000000000000000000000)*(t+3)*(t^2+t+1)").unwrap();
    let r = rational_roots(&f).unwrap();
    assert_eq!(
        r,
        [q("-3"), q("1000000000000000000000000000000/7")].into_iter().collect()
    );
}

fn linear() -> impl Strategy<Value = (i64, i64)> {
    (1i64..=50, -50i64..=50)
}

fn poly_from(factors: &[(i64, i64)], k: i64) -> IntPoly {
    // times t^2 + t + k with 1 - 4k < 0 and never a square: rootless
    let mut f = IntPoly::from_i64s(&[k, 1, 1]);
    for &(a, b) in factors {
        f = &f * &IntPoly::from_i64s(&[-b, a]);
    }
    f
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn roots_are_complete(factors in proptest::collection::vec(linear(), 0..=6), k in 1i64..=40) {
        let f = poly_from(&factors, k);
        let want: std::collections::BTreeSet<Rational> = factors.iter().map(|&(a, b)| Rational::new(b, a)).collect();
        prop_assert_eq!(rational_roots(&f).unwrap(), want);
    }

    #[test]
    fn roots_are_sound(cs in proptest::collection::vec(-1000i64..=1000, 1..=9)) {
        let f = IntPoly::from_i64s(&cs);
        prop_assume!(!f.is_zero());
        for t in rational_roots(&f).unwrap() {
            prop_assert!(poly_eval(&f, &t).is_zero());
        }
    }

    #[test]
    fn squarefree_keeps_roots(factors in proptest::collection::vec(linear(), 1..=4), e in 1u32..=3) {
        let f = poly_from(&factors, 3).pow(e);
        let s = squarefree_part(&f).unwrap();
        prop_assert_eq!(rational_roots(&s).unwrap(), rational_roots(&f).unwrap());
        prop_assert!(s.degree() <= poly_from(&factors, 3).degree());
    }

    #[test]
    fn rational_round_trip(n in -10_000i64..=10_000, d in 1i64..=10_000) {
        let x = Rational::new(n, d);
        prop_assert_eq!(x.to_string().parse::<Rational>().unwrap(), x.clone());
        let json = serde_json::to_string(&x).unwrap();
        prop_assert_eq!(serde_json::from_str::<Rational>(&json).unwrap(), x);
    }

    #[test]
    fn fibers_contain_their_points(row in 0usize..24, n in -10i64..=10, d in 1i64..=10) {
        let entry = &builtin_catalog().entries()[row];
        let t = Rational::new(n, d);
        for m in &entry.maps {
            if let Ok(j) = ratfunc_eval(&m.map, &t) {
                prop_assert!(ratfunc_fiber(&m.map, &j).unwrap().contains(&t));
            }
        }
    }
}
