use exact_rings::{
    cyclotomic, parse_element, specialize, Field, FieldElement, Poly2, QuotientField, RationalFunctions, RingError,
    Specialization, UPoly,
};
use proptest::prelude::*;

fn fe(s: &str) -> FieldElement {
    parse_element(s).unwrap()
}

fn small_poly() -> impl Strategy<Value = Poly2> {
    prop::collection::vec(((0u32..3, 0u32..4), -3i64..4), 0..4).prop_map(|terms| {
        terms.into_iter().fold(Poly2::zero(), |acc, ((a, b), c)| {
            acc.add(&Poly2::monomial(exact_rings::Rational::from_integer(c.into()), (a, b)))
        })
    })
}

fn element() -> impl Strategy<Value = FieldElement> {
    (small_poly(), small_poly()).prop_filter_map("nonzero denominator", |(n, d)| {
        let d = d.add(&Poly2::r().pow(5));
        FieldElement::new(n, d).ok()
    })
}

fn specializations() -> Vec<Specialization> {
    vec![
        Specialization::Generic,
        Specialization::LTo(fe("-r^3")),
        Specialization::LTo(fe("r^2/(2 + r)")),
        Specialization::LToAndQuotient(fe("-r^3"), cyclotomic(16)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normalization_is_idempotent(a in element()) {
        let again = FieldElement::new(a.numerator().clone(), a.denominator().clone()).unwrap();
        prop_assert_eq!(again, a);
    }

    #[test]
    fn equality_agrees_with_cross_multiplication(a in element(), b in element()) {
        let cross = a.numerator().mul(b.denominator()) == b.numerator().mul(a.denominator());
        prop_assert_eq!(cross, a == b);
        let a2 = FieldElement::new(a.numerator().mul(&Poly2::l()), a.denominator().mul(&Poly2::l())).unwrap();
        prop_assert_eq!(a2, a);
    }

    #[test]
    fn specialization_is_a_ring_homomorphism(a in element(), b in element()) {
        for s in specializations() {
            let (Ok(sa), Ok(sb)) = (specialize(&a, &s), specialize(&b, &s)) else { continue };
            if let Ok(sum) = specialize(&a.add(&b), &s) {
                let expect = if let Specialization::LToAndQuotient(..) = s {
                    specialize(&sa.add(&sb), &s).unwrap()
                } else {
                    sa.add(&sb)
                };
                prop_assert_eq!(sum, expect);
            }
            if let Ok(prod) = specialize(&a.mul(&b), &s) {
                let expect = specialize(&sa.mul(&sb), &s).unwrap();
                prop_assert_eq!(prod, expect);
            }
        }
    }

    #[test]
    fn field_axioms(a in element(), b in element(), c in element()) {
        prop_assert_eq!(a.add(&b).mul(&c), a.mul(&c).add(&b.mul(&c)));
        prop_assert_eq!(a.sub(&a), FieldElement::zero());
        if !a.is_zero() {
            prop_assert!(a.mul(&a.inv().unwrap()).is_one());
        }
    }
}

#[test]
fn m_and_x_examples() {
    assert_eq!(fe("1/r").sub(&fe("r")).to_string(), "(1 - r^2)/(r)");
    let x = FieldElement::x();
    assert_eq!(x.substitute_l(&fe("-r^3")).unwrap(), fe("-(r^4 + 1)/r^2"));
    let a = fe("(l^2 - r)/(l*r^3)");
    assert_eq!(a.mul(&a.inv().unwrap()), FieldElement::one());
}

#[test]
fn specialize_examples() {
    assert_eq!(specialize(&FieldElement::x(), &Specialization::LTo(fe("r"))).unwrap(), fe("2"));
    assert_eq!(specialize(&fe("l*r"), &Specialization::Generic).unwrap(), fe("l*r"));
    let s = Specialization::LToAndQuotient(fe("-r^3"), cyclotomic(16));
    assert_eq!(specialize(&fe("r^8"), &s).unwrap(), fe("-1"));
}

#[test]
fn pole_errors_name_the_factor() {
    let err = specialize(&fe("1/(l - r)"), &Specialization::LTo(fe("r"))).unwrap_err();
    match err {
        RingError::Pole { factor } => assert!(factor.contains("r") && factor.contains("l"), "{factor}"),
        other => panic!("unexpected {other:?}"),
    }
    let err = specialize(&fe("1/(1 + r^8)"), &Specialization::LToAndQuotient(fe("r"), cyclotomic(16))).unwrap_err();
    assert!(matches!(err, RingError::Pole { .. }));
}

#[test]
fn division_by_zero_is_an_error() {
    assert_eq!(fe("r").div(&FieldElement::zero()), Err(RingError::DivisionByZero));
}

fn totient(m: u32) -> u32 {
    (1..=m).filter(|&k| num_integer::gcd(k, m) == 1).count() as u32
}

fn mobius(mut k: u32) -> i32 {
    let mut sign = 1;
    let mut p = 2;
    while p * p <= k {
        if k % p == 0 {
            k /= p;
            if k % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if k > 1 {
        sign = -sign;
    }
    sign
}

/// Independent construction: Φ_m = Π_{d | m} (r^d - 1)^{μ(m/d)}.
fn cyclotomic_by_mobius(m: u32) -> UPoly {
    let mut num = UPoly::one();
    let mut den = UPoly::one();
    for d in (1..=m).filter(|d| m % d == 0) {
        let f = UPoly::monomial(d as usize).sub(&UPoly::one());
        match mobius(m / d) {
            1 => num = num.mul(&f),
            -1 => den = den.mul(&f),
            _ => {}
        }
    }
    let (q, rem) = num.div_rem(&den).unwrap();
    assert!(rem.is_zero());
    q
}

#[test]
fn cyclotomic_examples() {
    assert_eq!(cyclotomic(1), UPoly::from_ints(&[-1, 1]));
    assert_eq!(cyclotomic(12), UPoly::from_ints(&[1, 0, -1, 0, 1]));
    assert_eq!(cyclotomic(16), UPoly::from_ints(&[1, 0, 0, 0, 0, 0, 0, 0, 1]));
    let prod = [1, 2, 3, 4, 6].iter().fold(UPoly::one(), |acc, &d| acc.mul(&cyclotomic(d)));
    let (q, rem) = UPoly::monomial(12).sub(&UPoly::one()).div_rem(&prod).unwrap();
    assert!(rem.is_zero());
    assert_eq!(q, cyclotomic(12));
}

#[test]
fn cyclotomic_degrees_and_divisibility_up_to_64() {
    for m in 1..=64 {
        let phi = cyclotomic(m);
        assert_eq!(phi, cyclotomic_by_mobius(m), "m = {m}");
        assert_eq!(phi.deg().unwrap() as u32, totient(m), "m = {m}");
        assert!(phi.is_monic());
        let rem = UPoly::monomial(m as usize).sub(&UPoly::one()).rem(&phi).unwrap();
        assert!(rem.is_zero(), "m = {m}");
    }
}

#[test]
fn r_has_exact_order_m_in_the_quotient() {
    for m in 2..=40 {
        let f = QuotientField::new(fe("r"), cyclotomic(m)).unwrap();
        let r = f.r();
        let mut p = f.one();
        for d in 1..=m {
            p = exact_rings::Scalar::mul(&p, &r);
            assert_eq!(exact_rings::Scalar::is_one(&p), d == m, "m = {m}, d = {d}");
        }
    }
}

#[test]
fn semisimple_points() {
    assert_eq!(RationalFunctions::generic().is_semisimple_point(100), (true, None));
    let phi16 = QuotientField::new(fe("-r^3"), cyclotomic(16)).unwrap();
    assert_eq!(phi16.is_semisimple_point(7), (true, None));
    assert_eq!(phi16.is_semisimple_point(8), (false, Some(8)));
    let phi12 = QuotientField::new(fe("-r^3"), cyclotomic(12)).unwrap();
    assert_eq!(phi12.is_semisimple_point(5), (true, None));
    assert_eq!(phi12.is_semisimple_point(6), (false, Some(6)));
}

#[test]
fn invalid_specializations_are_rejected() {
    assert_eq!(RationalFunctions::with_l(fe("l + r")).unwrap_err(), RingError::NotInQr);
    let bad = QuotientField::new(fe("r"), UPoly::from_ints(&[1, 2])).unwrap_err();
    assert!(matches!(bad, RingError::InvalidModulus(_)));
}

#[test]
fn direct_construction_matches_entrywise_specialization() {
    let exprs = ["(l + r)*(1 - l*r)/(l*(1 - r^2))", "l^2/r - 3", "(r - 1/l)/(1 + r^2)"];
    let s = Specialization::LToAndQuotient(fe("-r^3"), cyclotomic(12));
    let q = QuotientField::new(fe("-r^3"), cyclotomic(12)).unwrap();
    for e in exprs {
        let a = fe(e);
        let direct = q.embed(&a).unwrap();
        let via = specialize(&a, &s).unwrap();
        assert_eq!(FieldElement::from_poly(direct.representative().to_poly2()), via);
    }
}
