use std::time::Instant;

use exact_rings::{parse_element, Field, FieldElement, RationalFunctions};
use spectral_analysis::{det_t, locus_of, reducibility_locus, LocusReport, SizeGuard, SpectralError};

fn fe(s: &str) -> FieldElement {
    parse_element(s).unwrap()
}

fn assert_locus(report: &LocusReport, expected: &[(&str, u32)]) {
    let got: Vec<(FieldElement, u32)> = report.factors.iter().map(|f| (f.root.clone(), f.multiplicity)).collect();
    let mut want: Vec<(FieldElement, u32)> = expected.iter().map(|(s, m)| (fe(s), *m)).collect();
    let mut got_sorted = got.clone();
    got_sorted.sort_by_key(|(e, _)| e.to_canonical_string());
    want.sort_by_key(|(e, _)| e.to_canonical_string());
    assert_eq!(got_sorted, want, "n = {}\n{report}", report.n);
    assert_eq!(report.residual_l_degree(), 0, "{report}");
    assert_eq!(report.reconstruct(), report.det);
    assert!(report.scalar.is_free_of_l());
}

#[test]
fn locus_n3() {
    let report = reducibility_locus(3, SizeGuard::default()).unwrap();
    assert_locus(&report, &[("-r^3", 1), ("-1", 2), ("1", 2), ("1/r^3", 1)]);
}

#[test]
fn locus_n4() {
    let report = reducibility_locus(4, SizeGuard::default()).unwrap();
    assert_locus(&report, &[("r", 2), ("-r^3", 3), ("1/r", 3), ("-1/r", 3), ("1/r^5", 1)]);
}

#[test]
fn locus_n5() {
    let report = reducibility_locus(5, SizeGuard::default()).unwrap();
    assert_locus(&report, &[("r", 5), ("-r^3", 6), ("1/r^2", 4), ("-1/r^2", 4), ("1/r^7", 1)]);
}

#[test]
fn locus_n6() {
    let start = Instant::now();
    let report = reducibility_locus(6, SizeGuard::default()).unwrap();
    eprintln!("locus n = 6: {:?}", start.elapsed());
    assert_locus(&report, &[("r", 9), ("-r^3", 10), ("1/r^3", 5), ("-1/r^3", 5), ("1/r^9", 1)]);
}

#[test]
fn factor_sign_is_plus_r_cubed() {
    let report = reducibility_locus(4, SizeGuard::default()).unwrap();
    assert_eq!(report.multiplicity(&fe("-r^3")), 3);
    assert_eq!(report.multiplicity(&fe("r^3")), 0);
}

#[test]
fn size_guard_refuses_large_generic_determinants() {
    let err = det_t(7, &RationalFunctions::generic(), SizeGuard::default()).unwrap_err();
    assert_eq!(err, SpectralError::SizeGuard { n: 7, limit: 6 });
    assert!(det_t(7, &RationalFunctions::with_l(fe("r^2")).unwrap(), SizeGuard::default()).is_ok());
}

#[test]
fn determinant_examples() {
    assert!(det_t(4, &RationalFunctions::with_l(fe("r")).unwrap(), SizeGuard::default()).unwrap().is_zero());
    assert!(!det_t(5, &RationalFunctions::with_l(fe("r^2")).unwrap(), SizeGuard::default()).unwrap().is_zero());
}

#[test]
fn generic_determinant_specializes_to_pointwise_determinant() {
    let generic = det_t(4, &RationalFunctions::generic(), SizeGuard::default()).unwrap();
    for target in ["r^2", "2", "-r/3", "1 + r"] {
        let f = RationalFunctions::with_l(fe(target)).unwrap();
        assert_eq!(f.embed(&generic).unwrap(), det_t(4, &f, SizeGuard::default()).unwrap(), "l -> {target}");
    }
}

#[test]
fn unexplained_factors_land_in_the_residual() {
    let det = fe("(l - r)^2 * (l^2 + r) * 3 * r / ((1 - r^2) * l^4)");
    let report = locus_of(3, det.clone());
    assert_eq!(report.multiplicity(&fe("r")), 2);
    assert_eq!(report.residual_l_degree(), 2);
    assert_eq!(report.l_denominator_power, 4);
    assert_eq!(report.reconstruct(), det);
}

#[test]
fn point_checks_beyond_the_symbolic_range() {
    for n in [7usize, 8] {
        let e = n as i64;
        let vanishing = ["r".to_string(), "-r^3".into(), format!("1/r^{}", e - 3), format!("-1/r^{}", e - 3), format!("1/r^{}", 2 * e - 3)];
        for l in &vanishing {
            let f = RationalFunctions::with_l(fe(l)).unwrap();
            assert!(det_t(n, &f, SizeGuard::default()).unwrap().is_zero(), "n = {n}, l = {l}");
        }
        let f = RationalFunctions::with_l(fe("r^2")).unwrap();
        assert!(!det_t(n, &f, SizeGuard::default()).unwrap().is_zero(), "n = {n}, l = r^2");
    }
}
