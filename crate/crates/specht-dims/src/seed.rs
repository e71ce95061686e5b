//! Explicit matrix representations of the Iwahori–Hecke algebra of Sym(n)
//! with parameter r^2, and a check of their defining relations.

use std::fmt;

use exact_rings::{parse_element, FieldElement, Matrix};

/// The four seed families: M and N have size n - 1 for any n >= 4; P and Q
/// have size 5 and exist for n = 5 only.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeedFamily {
    M,
    N,
    P,
    Q,
}

impl SeedFamily {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "M" | "m" => Some(SeedFamily::M),
            "N" | "n" => Some(SeedFamily::N),
            "P" | "p" => Some(SeedFamily::P),
            "Q" | "q" => Some(SeedFamily::Q),
            _ => None,
        }
    }
}

impl fmt::Display for SeedFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

fn fe(s: &str) -> FieldElement {
    parse_element(s).expect("built-in entry parses")
}

/// `H_i` for the families M (diagonal r, eigenvalue -1/r on row i) and N
/// (diagonal -1/r, eigenvalue r on row i).
fn bidiagonal(n: usize, i: usize, diag: &str, pivot: &str, left: &str, right: &str) -> Matrix<FieldElement> {
    let d = n - 1;
    let mut m = Matrix::identity(d, &FieldElement::zero(), &fe(diag));
    let row = i - 1;
    m.set(row, row, fe(pivot));
    if row > 0 {
        m.set(row, row - 1, fe(left));
    }
    if row + 1 < d {
        m.set(row, row + 1, fe(right));
    }
    m
}

fn from_strings(rows: [[&str; 5]; 5]) -> Matrix<FieldElement> {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|s| fe(s)).collect()).collect())
}

const P: [[[&str; 5]; 5]; 4] = [
    [
        ["r", "0", "0", "0", "0"],
        ["0", "r", "0", "0", "0"],
        ["0", "0", "r", "0", "0"],
        ["1", "0", "-r^2", "-1/r", "0"],
        ["0", "1", "0", "0", "-1/r"],
    ],
    [
        ["-1/r", "0", "0", "1", "0"],
        ["0", "-1/r", "1", "0", "1"],
        ["0", "0", "r", "0", "0"],
        ["0", "0", "0", "r", "0"],
        ["0", "0", "0", "0", "r"],
    ],
    [
        ["r", "0", "0", "0", "0"],
        ["0", "r", "0", "0", "0"],
        ["0", "1", "-1/r", "0", "0"],
        ["1", "0", "0", "-1/r", "-r^2"],
        ["0", "0", "0", "0", "r"],
    ],
    [
        ["0", "1", "-r", "0", "0"],
        ["1", "r - 1/r", "1", "0", "0"],
        ["0", "0", "r", "0", "0"],
        ["0", "0", "-r^2", "0", "1"],
        ["0", "0", "r", "1", "r - 1/r"],
    ],
];

const Q: [[[&str; 5]; 5]; 4] = [
    [
        ["-1/r", "0", "0", "0", "0"],
        ["0", "-1/r", "0", "0", "0"],
        ["0", "0", "-1/r", "0", "0"],
        ["1", "0", "-1/r^2", "r", "0"],
        ["0", "1", "0", "0", "r"],
    ],
    [
        ["r", "0", "0", "1", "0"],
        ["0", "r", "1", "0", "1"],
        ["0", "0", "-1/r", "0", "0"],
        ["0", "0", "0", "-1/r", "0"],
        ["0", "0", "0", "0", "-1/r"],
    ],
    [
        ["-1/r", "0", "0", "0", "0"],
        ["0", "-1/r", "0", "0", "0"],
        ["0", "1", "r", "0", "0"],
        ["1", "0", "0", "r", "-1/r^2"],
        ["0", "0", "0", "0", "-1/r"],
    ],
    [
        ["0", "1", "1/r", "0", "0"],
        ["1", "r - 1/r", "1", "0", "0"],
        ["0", "0", "-1/r", "0", "0"],
        ["0", "0", "-1/r^2", "0", "1"],
        ["0", "0", "-1/r", "1", "r - 1/r"],
    ],
];

/// The generator matrices `H_1, …, H_{n-1}` of a family over Q(r).
pub fn seed_matrices(family: SeedFamily, n: usize) -> Vec<Matrix<FieldElement>> {
    match family {
        SeedFamily::M => {
            assert!(n >= 4, "family M needs n >= 4");
            (1..n).map(|i| bidiagonal(n, i, "r", "-1/r", "r", "1/r")).collect()
        }
        SeedFamily::N => {
            assert!(n >= 4, "family N needs n >= 4");
            (1..n).map(|i| bidiagonal(n, i, "-1/r", "r", "-1/r", "-r")).collect()
        }
        SeedFamily::P => {
            assert_eq!(n, 5, "family P exists for n = 5 only");
            P.iter().map(|m| from_strings(*m)).collect()
        }
        SeedFamily::Q => {
            assert_eq!(n, 5, "family Q exists for n = 5 only");
            Q.iter().map(|m| from_strings(*m)).collect()
        }
    }
}

/// One relation family checked over all admissible generator indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeedCheck {
    pub name: &'static str,
    pub instances: usize,
    /// 1-based generator tuples at which the relation failed.
    pub failures: Vec<Vec<usize>>,
}

impl SeedCheck {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeedReport {
    pub family: SeedFamily,
    pub n: usize,
    pub checks: Vec<SeedCheck>,
}

impl SeedReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(SeedCheck::passed)
    }
}

/// Checks the built-in matrices of a family.
pub fn verify_seed_matrices(family: SeedFamily, n: usize) -> SeedReport {
    check_hecke_relations(family, n, &seed_matrices(family, n))
}

/// Braid relations, far commutation and `H^2 + m H = I` with `m = 1/r - r`
/// for the given generator matrices.
pub fn check_hecke_relations(family: SeedFamily, n: usize, h: &[Matrix<FieldElement>]) -> SeedReport {
    let k = h.len();
    let d = h[0].rows();
    let id = Matrix::identity(d, &FieldElement::zero(), &FieldElement::one());
    let m = FieldElement::m();
    let mut checks = Vec::new();

    let mut braid = SeedCheck { name: "braid", instances: 0, failures: Vec::new() };
    for i in 0..k.saturating_sub(1) {
        braid.instances += 1;
        let (a, b) = (&h[i], &h[i + 1]);
        if a.mul(b).mul(a) != b.mul(a).mul(b) {
            braid.failures.push(vec![i + 1, i + 2]);
        }
    }
    checks.push(braid);

    let mut commute = SeedCheck { name: "commute", instances: 0, failures: Vec::new() };
    for i in 0..k {
        for j in i + 2..k {
            commute.instances += 1;
            if h[i].mul(&h[j]) != h[j].mul(&h[i]) {
                commute.failures.push(vec![i + 1, j + 1]);
            }
        }
    }
    checks.push(commute);

    let mut quad = SeedCheck { name: "quadratic", instances: 0, failures: Vec::new() };
    for (i, a) in h.iter().enumerate() {
        quad.instances += 1;
        if a.mul(a).add(&a.scale(&m)) != id {
            quad.failures.push(vec![i + 1]);
        }
    }
    checks.push(quad);

    SeedReport { family, n, checks }
}
