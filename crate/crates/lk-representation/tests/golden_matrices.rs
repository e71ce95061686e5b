//! Entry-for-entry comparison with the published matrices for n = 3, 4, 5.

use exact_rings::{parse_element, Field, FieldElement, Matrix, RationalFunctions};
use lk_representation::build_matrices;

/// Parses an entry, with `m` standing for `1/r - r`.
fn entry(s: &str) -> FieldElement {
    parse_element(&s.replace('m', "(1/r - r)")).unwrap()
}

fn matrix(rows: &[&[&str]]) -> Matrix<FieldElement> {
    Matrix::from_rows(rows.iter().map(|row| row.iter().map(|s| entry(s)).collect()).collect())
}

fn g3() -> Vec<Matrix<FieldElement>> {
    vec![
        matrix(&[&["1/l", "m", "0"], &["0", "-m", "1"], &["0", "1", "0"]]),
        matrix(&[&["0", "0", "1"], &["0", "1/l", "m/l"], &["1", "0", "-m"]]),
    ]
}

fn g4() -> Vec<Matrix<FieldElement>> {
    vec![
        matrix(&[
            &["1/l", "m", "0", "0", "m*r", "0"],
            &["0", "-m", "1", "0", "0", "0"],
            &["0", "1", "0", "0", "0", "0"],
            &["0", "0", "0", "r", "0", "0"],
            &["0", "0", "0", "0", "-m", "1"],
            &["0", "0", "0", "0", "1", "0"],
        ]),
        matrix(&[
            &["0", "0", "1", "0", "0", "0"],
            &["0", "1/l", "m/l", "m", "0", "0"],
            &["1", "0", "-m", "0", "0", "0"],
            &["0", "0", "0", "-m", "1", "0"],
            &["0", "0", "0", "1", "0", "0"],
            &["0", "0", "0", "0", "0", "r"],
        ]),
        matrix(&[
            &["r", "0", "0", "0", "0", "0"],
            &["0", "0", "0", "0", "1", "0"],
            &["0", "0", "0", "0", "0", "1"],
            &["0", "0", "0", "1/l", "m/l", "m/(l*r)"],
            &["0", "1", "0", "0", "-m", "0"],
            &["0", "0", "1", "0", "0", "-m"],
        ]),
    ]
}

fn g5() -> Vec<Matrix<FieldElement>> {
    vec![
        matrix(&[
            &["1/l", "m", "0", "0", "m*r", "0", "0", "0", "m*r^2", "0"],
            &["0", "-m", "1", "0", "0", "0", "0", "0", "0", "0"],
            &["0", "1", "0", "0", "0", "0", "0", "0", "0", "0"],
            &["0", "0", "0", "r", "0", "0", "0", "0", "0", "0"],
            &["0", "0", "0", "0", "-m", "1", "0", "0", "0", "0"],
            &["0", "0", "0", "0", "1", "0", "0", "0", "0", "0"],
            &["0", "0", "0", "0", "0", "0", "r", "0", "0", "0"],
            &["0", "0", "0", "0", "0", "0", "0", "r", "0", "0"],
            &["0", "0", "0", "0", "0", "0", "0", "0", "-m", "1"],
            &["0", "0", "0", "0", "0", "0", "0", "0", "1", "0"],
        ]),
        matrix(&[
            &["0", "0", "1", "0", "0", "0", "0", "0", "0", "0"],
            &["0", "1/l", "m/l", "m", "0", "0", "0", "m*r", "0", "0"],
            &["1", "0", "-m", "0", "0", "0", "0", "0", "0", "0"],
            &["0", "0", "0", "-m", "1", "0", "0", "0", "0", "0"],
            &["0", "0", "0", "1", "0", "0", "0", "0", "0", "0"],
            &["0", "0", "0", "0", "0", "r", "0", "0", "0", "0"],
            &["0", "0", "0", "0", "0", "0", "r", "0", "0", "0"],
            &["0", "0", "0", "0", "0", "0", "0", "-m", "1", "0"],
            &["0", "0", "0", "0", "0", "0", "0", "1", "0", "0"],
            &["0", "0", "0", "0", "0", "0", "0", "0", "0", "r"],
        ]),
        matrix(&[
            &["r", "0", "0", "0", "0", "0", "0", "0", "0", "0"],
            &["0", "0", "0", "0", "1", "0", "0", "0", "0", "0"],
            &["0", "0", "0", "0", "0", "1", "0", "0", "0", "0"],
            &["0", "0", "0", "1/l", "m/l", "m/(l*r)", "m", "0", "0", "0"],
            &["0", "1", "0", "0", "-m", "0", "0", "0", "0", "0"],
            &["0", "0", "1", "0", "0", "-m", "0", "0", "0", "0"],
            &["0", "0", "0", "0", "0", "0", "-m", "1", "0", "0"],
            &["0", "0", "0", "0", "0", "0", "1", "0", "0", "0"],
            &["0", "0", "0", "0", "0", "0", "0", "0", "r", "0"],
            &["0", "0", "0", "0", "0", "0", "0", "0", "0", "r"],
        ]),
        matrix(&[
            &["r", "0", "0", "0", "0", "0", "0", "0", "0", "0"],
            &["0", "r", "0", "0", "0", "0", "0", "0", "0", "0"],
            &["0", "0", "r", "0", "0", "0", "0", "0", "0", "0"],
            &["0", "0", "0", "0", "0", "0", "0", "1", "0", "0"],
            &["0", "0", "0", "0", "0", "0", "0", "0", "1", "0"],
            &["0", "0", "0", "0", "0", "0", "0", "0", "0", "1"],
            &["0", "0", "0", "0", "0", "0", "1/l", "m/l", "m/(l*r)", "m/(l*r^2)"],
            &["0", "0", "0", "1", "0", "0", "0", "-m", "0", "0"],
            &["0", "0", "0", "0", "1", "0", "0", "0", "-m", "0"],
            &["0", "0", "0", "0", "0", "1", "0", "0", "0", "-m"],
        ]),
    ]
}

fn assert_matches(n: usize, expected: Vec<Matrix<FieldElement>>) {
    let f = RationalFunctions::generic();
    let built = build_matrices(n, &f).unwrap();
    assert_eq!(built.g.len(), expected.len());
    for (i, (got, want)) in built.g.iter().zip(&expected).enumerate() {
        assert_eq!(got, want, "G_{}({n})", i + 1);
    }
}

#[test]
fn n3_matrices() {
    assert_matches(3, g3());
}

#[test]
fn n4_matrices() {
    assert_matches(4, g4());
}

#[test]
fn n5_matrices() {
    assert_matches(5, g5());
}

#[test]
fn n5_determinants() {
    let f = RationalFunctions::generic();
    let built = build_matrices(5, &f).unwrap();
    for g in &built.g {
        assert_eq!(f.determinant(g).unwrap(), entry("-r^3/l"));
    }
}

#[test]
fn g3_row4_of_n4() {
    let f = RationalFunctions::generic();
    let built = build_matrices(4, &f).unwrap();
    let row: Vec<FieldElement> = built.g(3).row(3).to_vec();
    let want: Vec<FieldElement> = ["0", "0", "0", "1/l", "m/l", "m/(l*r)"].iter().map(|s| entry(s)).collect();
    assert_eq!(row, want);
}

#[test]
fn g1_of_n5_has_m_r_squared_at_1_9() {
    let f = RationalFunctions::generic();
    let built = build_matrices(5, &f).unwrap();
    assert_eq!(*built.g(1).get(0, 8), entry("m*r^2"));
}

#[test]
fn column_convention_fixed_by_absorption() {
    // g_1 e_1 = l^{-1} e_1: the first basis vector is an eigenvector of G_1.
    let f = RationalFunctions::generic();
    let built = build_matrices(3, &f).unwrap();
    let col = built.g(1).column(0);
    assert_eq!(col, vec![entry("1/l"), entry("0"), entry("0")]);
}
