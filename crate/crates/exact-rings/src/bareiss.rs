//! Determinants: Gaussian elimination over any field, and fraction-free
//! (Bareiss) elimination for matrices over Q(l, r).

use rayon::prelude::*;

use crate::error::RingError;
use crate::field::Scalar;
use crate::matrix::Matrix;
use crate::poly2::{self, Poly2};
use crate::ratfunc::FieldElement;
use crate::zpoly::BZ;
use crate::Rational;

/// Determinant by Gaussian elimination, pivoting on the smallest nonzero
/// entry of each column.
pub fn det_gauss<E: Scalar>(m: &Matrix<E>, zero: &E, one: &E) -> Result<E, RingError> {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let n = m.rows();
    let mut a = m.to_rows();
    let mut det = one.clone();
    for k in 0..n {
        let Some(p) = (k..n).filter(|&i| !a[i][k].is_zero()).min_by_key(|&i| a[i][k].size()) else {
            return Ok(zero.clone());
        };
        if p != k {
            a.swap(p, k);
            det = det.neg();
        }
        let piv = a[k][k].clone();
        det = det.mul(&piv);
        let inv = piv.inv()?;
        let pivot_row = a[k].clone();
        for row in a.iter_mut().skip(k + 1) {
            if row[k].is_zero() {
                continue;
            }
            let f = row[k].mul(&inv);
            for j in k + 1..n {
                if !pivot_row[j].is_zero() {
                    row[j] = row[j].sub(&f.mul(&pivot_row[j]));
                }
            }
            row[k] = zero.clone();
        }
    }
    Ok(det)
}

fn lcm(a: &Poly2, b: &Poly2) -> Poly2 {
    let g = poly2::gcd(a, b);
    a.mul(&b.div_exact(&g).expect("gcd divides"))
}

/// Clears the denominators of one row. Returns the integer polynomial row and
/// the factor it was multiplied by.
fn clear_row(row: &[FieldElement]) -> (Vec<BZ>, Poly2) {
    let mut den = Poly2::one();
    for e in row.iter().filter(|e| !e.is_zero()) {
        if !e.denominator().is_one() {
            den = lcm(&den, e.denominator());
        }
    }
    let scaled: Vec<Poly2> = row
        .iter()
        .map(|e| {
            if e.is_zero() {
                Poly2::zero()
            } else {
                e.numerator().mul(&den.div_exact(e.denominator()).expect("lcm is a multiple"))
            }
        })
        .collect();
    let c = scaled.iter().fold(num_bigint::BigInt::from(1), |acc, p| num_integer::Integer::lcm(&acc, &p.denominator_lcm()));
    let c = Rational::from_integer(c);
    let bz = scaled.iter().map(|p| p.scale(&c).to_bz()).collect();
    (bz, den.scale(&c))
}

fn bz_size(p: &BZ) -> usize {
    p.0.iter().map(|z| z.nnz()).sum()
}

/// Fraction-free determinant over Q(l, r): each row is scaled to integer
/// polynomials, Bareiss elimination runs over Z[l, r], and the row factors are
/// divided out at the end.
pub fn det_fraction_free(m: &Matrix<FieldElement>) -> FieldElement {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let n = m.rows();
    if n == 0 {
        return FieldElement::one();
    }
    let mut a = Vec::with_capacity(n);
    let mut factor = Poly2::one();
    for i in 0..n {
        let (row, f) = clear_row(m.row(i));
        a.push(row);
        factor = factor.mul(&f);
    }
    let Some(det) = bareiss_bz(a) else { return FieldElement::zero() };
    FieldElement::new(Poly2::from_bz(&det), factor).expect("row factors are nonzero")
}

/// Bareiss elimination on a square matrix of integer polynomials; `None` when
/// the determinant is zero.
pub fn bareiss_bz(mut a: Vec<Vec<BZ>>) -> Option<BZ> {
    let n = a.len();
    let mut negate = false;
    let mut prev = BZ::one();
    for k in 0..n {
        let p = (k..n).filter(|&i| !a[i][k].is_zero()).min_by_key(|&i| bz_size(&a[i][k]))?;
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        let (head, tail) = a.split_at_mut(k + 1);
        let pivot_row = &head[k];
        let piv = &pivot_row[k];
        let first = k == 0 || prev == BZ::one();
        tail.par_iter_mut().for_each(|row| {
            let lead = row[k].clone();
            for j in k + 1..n {
                let v = BZ::mul_sub_mul(piv, &row[j], &lead, &pivot_row[j]);
                row[j] = if first || v.is_zero() { v } else { v.div_exact(&prev).expect("Bareiss division is exact") };
            }
            row[k] = BZ::zero();
        });
        prev = piv.clone();
    }
    let d = a[n - 1][n - 1].clone();
    Some(if negate { d.neg() } else { d })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Field, RationalFunctions};

    fn fe(s: &str) -> FieldElement {
        crate::parse::parse_element(s).unwrap()
    }

    #[test]
    fn two_by_two_generic() {
        let m = Matrix::from_rows(vec![vec![fe("l"), fe("1/r")], vec![fe("r"), fe("l^2")]]);
        assert_eq!(det_fraction_free(&m), fe("l^3 - 1"));
    }

    #[test]
    fn bareiss_matches_gauss() {
        let m = Matrix::from_rows(vec![
            vec![fe("l + r"), fe("1/l"), fe("2")],
            vec![fe("r^2"), fe("l*r - 1"), fe("(1 - r)/l")],
            vec![fe("3"), fe("r"), fe("l/(1 + r)")],
        ]);
        let f = RationalFunctions::generic();
        let g = det_gauss(&m, &f.zero(), &f.one()).unwrap();
        assert_eq!(det_fraction_free(&m), g);
    }

    #[test]
    fn singular_is_zero() {
        let m = Matrix::from_rows(vec![vec![fe("l"), fe("r")], vec![fe("l^2"), fe("l*r")]]);
        assert!(det_fraction_free(&m).is_zero());
    }
}
