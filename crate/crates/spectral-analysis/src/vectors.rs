//! Explicit vectors known to lie in Ker T(n) at special values of l, grouped
//! into families, and the membership check T(n)·v = 0.

use exact_rings::{parse_element, Field, FieldElement, RationalFunctions, Scalar, Specialization};
use root_system::{num_roots, RootIndex};

use crate::{t_matrix, SpectralError};

/// Labels accepted by [`named_vectors`].
pub const CASES: &[&str] = &[
    "n3-special",
    "n4-special",
    "n5-special",
    "one-dim",
    "hecke-plus",
    "hecke-minus",
    "hecke-neg-r3",
    "cross-x",
    "cross-y",
    "neg-r3-tail",
    "l-equals-r",
    "five-dim",
];

/// A vector of the representation space with coefficients in Q(r), together
/// with the value of l at which it is claimed to be annihilated by T(n).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedVector {
    pub name: String,
    pub n: usize,
    pub case: String,
    pub l: FieldElement,
    pub coords: Vec<(RootIndex, FieldElement)>,
}

impl NamedVector {
    pub fn specialization(&self) -> Specialization {
        Specialization::LTo(self.l.clone())
    }

    /// Coordinates in basis order.
    pub fn dense(&self) -> Vec<FieldElement> {
        let mut v = vec![FieldElement::zero(); num_roots(self.n)];
        for (w, c) in &self.coords {
            v[w.index()] = v[w.index()].add(c);
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.dense().iter().all(FieldElement::is_zero)
    }
}

fn fe(s: &str) -> FieldElement {
    parse_element(s).expect("built-in coefficient parses")
}

fn rp(k: i64) -> FieldElement {
    FieldElement::r().pow(k).expect("r is invertible")
}

fn w(i: usize, j: usize) -> RootIndex {
    RootIndex::new(i, j)
}

struct Builder {
    n: usize,
    case: &'static str,
    out: Vec<NamedVector>,
}

impl Builder {
    fn push(&mut self, name: impl Into<String>, l: FieldElement, coords: Vec<(RootIndex, FieldElement)>) {
        self.out.push(NamedVector { name: name.into(), n: self.n, case: self.case.into(), l, coords });
    }

    /// A vector given by literal coefficients.
    fn literal(&mut self, name: &str, l: &str, coords: &[((usize, usize), &str)]) {
        let coords = coords.iter().map(|&((i, j), c)| (w(i, j), fe(c))).collect();
        self.push(name, fe(l), coords);
    }
}

fn require(case: &str, n: usize, ok: bool) -> Result<(), SpectralError> {
    if ok {
        Ok(())
    } else {
        Err(SpectralError::OutOfRange { case: case.into(), n })
    }
}

/// The vectors of one family for the given n.
pub fn named_vectors(n: usize, case: &str) -> Result<Vec<NamedVector>, SpectralError> {
    let label = CASES.iter().find(|c| **c == case).ok_or_else(|| SpectralError::UnknownCase(case.into()))?;
    let mut b = Builder { n, case: label, out: Vec::new() };
    match case {
        "n3-special" => {
            require(case, n, n == 3)?;
            b.literal("y(3)", "-r^3", &[((1, 2), "-r"), ((2, 3), "-1/r"), ((1, 3), "1")]);
            b.literal("z(3)", "1", &[((1, 2), "1"), ((2, 3), "-1")]);
            b.literal("z(3)", "-1", &[((1, 2), "1"), ((2, 3), "-1")]);
            b.literal("t(3)", "1/r^3", &[((1, 2), "1/r"), ((2, 3), "r"), ((1, 3), "1")]);
        }
        "n4-special" => {
            require(case, n, n == 4)?;
            b.literal("x(4)", "r", &[((1, 3), "r^2"), ((2, 4), "1"), ((1, 4), "-r"), ((2, 3), "-r")]);
            b.literal("y(4)", "-r^3", &[((1, 2), "-r^2"), ((3, 4), "-1/r^2"), ((1, 4), "1"), ((2, 3), "-1")]);
            b.literal("z(4)", "-1/r", &[((1, 2), "1"), ((3, 4), "1"), ((1, 4), "1"), ((2, 3), "-1")]);
            b.literal("z'(4)", "1/r", &[((1, 4), "1"), ((2, 3), "-1")]);
            b.literal(
                "t(4)",
                "1/r^5",
                &[((1, 2), "1/r^2"), ((3, 4), "r^2"), ((1, 3), "1/r"), ((2, 4), "r"), ((1, 4), "1"), ((2, 3), "1")],
            );
        }
        "n5-special" => {
            require(case, n, n == 5)?;
            let order = [(1, 2), (2, 3), (1, 3), (3, 4), (2, 4), (1, 4), (4, 5), (3, 5), (2, 5), (1, 5)];
            let rows: [(&str, &str, [&str; 10]); 5] = [
                ("k(5; r)", "r", ["r^2", "0", "-r", "1", "-r", "0", "0", "0", "0", "0"]),
                ("k(5; -r^3)", "-r^3", ["0", "-r", "0", "-1/r", "1", "0", "0", "0", "0", "0"]),
                ("k(5; -1/r^2)", "-1/r^2", ["-r^2", "r^2 + 1/r", "r", "-1/r", "1", "0", "0", "-1", "r", "0"]),
                ("k(5; 1/r^2)", "1/r^2", ["r^2", "-r^2 + 1/r", "-r", "-1/r", "1", "0", "0", "-1", "r", "0"]),
                ("k(5; 1/r^7)", "1/r^7", ["1/r^3", "1/r", "1/r^2", "r", "1", "1/r", "r^3", "r^2", "r", "1"]),
            ];
            for (name, l, coeffs) in rows {
                let coords: Vec<_> = order.iter().zip(coeffs).map(|(&p, c)| (p, c)).collect();
                b.literal(name, l, &coords);
            }
        }
        "one-dim" => {
            require(case, n, n >= 3)?;
            if n == 3 {
                b.literal("u+", "1/r^3", &[((1, 2), "1"), ((1, 3), "r"), ((2, 3), "r^2")]);
                b.literal("u-", "-r^3", &[((1, 2), "1"), ((1, 3), "-1/r"), ((2, 3), "1/r^2")]);
            } else {
                let coords = root_system::roots(n).map(|s| (s, rp((s.i() + s.j()) as i64))).collect();
                b.push("u", rp(3 - 2 * n as i64), coords);
            }
        }
        "hecke-plus" | "hecke-minus" => {
            require(case, n, n >= 3)?;
            let eps = if case == "hecke-plus" { FieldElement::one() } else { FieldElement::from_int(-1) };
            hecke(&mut b, &eps);
        }
        "hecke-neg-r3" => {
            require(case, n, n == 4)?;
            b.literal(
                "v_1",
                "-r^3",
                &[((2, 3), "r"), ((1, 3), "1"), ((3, 4), "1/r + 1/r^3"), ((2, 4), "-1"), ((1, 4), "-1/r")],
            );
            b.literal(
                "v_2",
                "-r^3",
                &[((1, 2), "-r"), ((1, 3), "-r^2"), ((3, 4), "-1/r"), ((2, 4), "-1/r^2"), ((1, 4), "r + 1/r")],
            );
            b.literal(
                "v_3",
                "-r^3",
                &[((1, 2), "r + r^3"), ((2, 3), "1/r"), ((1, 3), "-1"), ((2, 4), "1"), ((1, 4), "-r")],
            );
        }
        "cross-x" => {
            require(case, n, n >= 5)?;
            b.literal("X", "r", &[((1, 2), "r^2"), ((1, 3), "-r"), ((3, 4), "1"), ((2, 4), "-r")]);
        }
        "cross-y" => {
            require(case, n, n >= 5)?;
            b.literal("Y", "-r^3", &[((2, 3), "-r"), ((3, 4), "-1/r"), ((2, 4), "1")]);
        }
        "neg-r3-tail" => {
            require(case, n, n >= 4)?;
            for k in 1..=n - 2 {
                let coords = vec![
                    (w(k + 1, n), FieldElement::one()),
                    (w(k, n), FieldElement::r().neg()),
                    (w(k, k + 1), rp((n - k) as i64)),
                ];
                b.push(format!("V_{k}"), fe("-r^3"), coords);
            }
        }
        "l-equals-r" => {
            require(case, n, n >= 4)?;
            for t in 4..=n {
                l_equals_r_layer(&mut b, t);
            }
        }
        "five-dim" => {
            require(case, n, n == 5)?;
            b.literal("w1", "r", &[((3, 4), "-1/r"), ((2, 4), "1"), ((1, 2), "-r"), ((1, 3), "1")]);
            b.literal("w2", "r", &[((3, 5), "-1/r"), ((2, 5), "1"), ((1, 2), "-r^2"), ((1, 3), "r")]);
            b.literal("w3", "r", &[((1, 3), "-r^2"), ((1, 4), "r"), ((4, 5), "-1/r"), ((3, 5), "1")]);
            b.literal("w4", "r", &[((2, 3), "1"), ((2, 4), "-1/r"), ((1, 4), "1"), ((1, 3), "-r")]);
            b.literal("w5", "r", &[((2, 3), "r"), ((1, 3), "-r^2"), ((2, 5), "-1/r"), ((1, 5), "1")]);
        }
        _ => unreachable!("label was found in CASES"),
    }
    Ok(b.out)
}

/// `v_i` for l = ε / r^{n-3}. For n = 4 the same formula applies; the
/// coefficient of `w_{23} - w_{24}/r` in `v_3` is then `ε r`.
fn hecke(b: &mut Builder, eps: &FieldElement) {
    let n = b.n;
    let l = eps.mul(&rp(3 - n as i64));
    let lead = rp(-1).sub(&l.inv().expect("l is nonzero"));
    let inv_r = rp(-1);
    for i in 1..n {
        let mut coords = vec![(w(i, i + 1), lead.clone())];
        for k in i + 2..=n {
            let c = rp(k as i64 - i as i64 - 2);
            coords.push((w(i, k), c.clone()));
            coords.push((w(i + 1, k), c.mul(&inv_r).neg()));
        }
        for s in 1..i {
            let c = eps.mul(&rp(n as i64 - i as i64 - 2 + s as i64));
            coords.push((w(s, i), c.clone()));
            coords.push((w(s, i + 1), c.mul(&inv_r).neg()));
        }
        b.push(format!("v_{i}"), l.clone(), coords);
    }
}

/// `w_k^{(t)}` for 1 <= k <= t - 2, placed in the space for `b.n`.
fn l_equals_r_layer(b: &mut Builder, t: usize) {
    let inv_r = rp(-1);
    let r = FieldElement::r();
    for k in 1..=t - 2 {
        let c = rp(t as i64 - 4);
        let (p, q) = if k == 1 { ((2, 3), (1, 3)) } else { ((1, k + 1), (1, k)) };
        let coords = vec![
            (w(k, t), FieldElement::one()),
            (w(k + 1, t), inv_r.neg()),
            (w(p.0, p.1), c.clone()),
            (w(q.0, q.1), c.mul(&r).neg()),
        ];
        b.push(format!("w_{k}^({t})"), FieldElement::r(), coords);
    }
}

/// T(n)·v = 0 at the vector's own value of l, over Q(r).
pub fn check_membership(v: &NamedVector) -> Result<bool, SpectralError> {
    check_membership_in(v, &RationalFunctions::with_l(v.l.clone())?)
}

/// T(n)·v = 0 over an arbitrary target field; the coordinates are mapped into
/// it with [`Field::embed`].
pub fn check_membership_in<F: Field>(v: &NamedVector, field: &F) -> Result<bool, SpectralError> {
    if v.is_zero() {
        return Ok(false);
    }
    let t = t_matrix(v.n, field)?;
    let coords = v.dense().iter().map(|c| field.embed(c)).collect::<Result<Vec<_>, _>>()?;
    if coords.iter().all(Scalar::is_zero) {
        return Ok(false);
    }
    Ok(t.mul_vec(&coords).iter().all(Scalar::is_zero))
}
