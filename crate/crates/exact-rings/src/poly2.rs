//! Sparse polynomials in l and r with rational coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::zpoly::{BZ, ZU};
use crate::Rational;

/// Exponent pair `(deg_l, deg_r)`; the derived order is the lexicographic one.
pub type Exp = (u32, u32);

/// Polynomial in l and r over Q, stored as terms sorted ascending in the
/// lexicographic order on `(deg_l, deg_r)`, without zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly2 {
    terms: Vec<(Exp, Rational)>,
}

impl Poly2 {
    pub fn zero() -> Self {
        Poly2 { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Poly2::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly2::monomial(c, (0, 0))
    }

    pub fn from_int(c: i64) -> Self {
        Poly2::constant(Rational::from_integer(BigInt::from(c)))
    }

    pub fn monomial(c: Rational, e: Exp) -> Self {
        if c.is_zero() {
            Poly2::zero()
        } else {
            Poly2 { terms: vec![(e, c)] }
        }
    }

    /// The variable l.
    pub fn l() -> Self {
        Poly2::monomial(Rational::one(), (1, 0))
    }

    /// The variable r.
    pub fn r() -> Self {
        Poly2::monomial(Rational::one(), (0, 1))
    }

    /// Builds a polynomial from arbitrary (possibly repeated, unsorted) terms.
    pub fn from_terms<I: IntoIterator<Item = (Exp, Rational)>>(it: I) -> Self {
        let mut v: Vec<(Exp, Rational)> = it.into_iter().collect();
        v.sort_by_key(|a| a.0);
        let mut out: Vec<(Exp, Rational)> = Vec::with_capacity(v.len());
        for (e, c) in v {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc += c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Poly2 { terms: out }
    }

    pub fn terms(&self) -> &[(Exp, Rational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == (0, 0) && self.terms[0].1.is_one()
    }

    /// True for a nonzero constant.
    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == (0, 0)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Lex-leading term.
    pub fn leading(&self) -> Option<&(Exp, Rational)> {
        self.terms.last()
    }

    pub fn deg_l(&self) -> u32 {
        self.terms.iter().map(|t| t.0 .0).max().unwrap_or(0)
    }

    pub fn deg_r(&self) -> u32 {
        self.terms.iter().map(|t| t.0 .1).max().unwrap_or(0)
    }

    /// True when the variable l does not occur.
    pub fn is_free_of_l(&self) -> bool {
        self.terms.iter().all(|t| t.0 .0 == 0)
    }

    /// Coefficient of the monomial `l^a r^b`.
    pub fn coeff(&self, e: Exp) -> Rational {
        match self.terms.binary_search_by(|t| t.0.cmp(&e)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    pub fn neg(&self) -> Poly2 {
        Poly2 { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }

    pub fn add(&self, o: &Poly2) -> Poly2 {
        self.merge(o, false)
    }

    pub fn sub(&self, o: &Poly2) -> Poly2 {
        self.merge(o, true)
    }

    fn merge(&self, o: &Poly2, negate: bool) -> Poly2 {
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &o.terms;
        while i < a.len() || j < b.len() {
            if j >= b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i].clone());
                i += 1;
            } else if i >= a.len() || b[j].0 < a[i].0 {
                let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                out.push((b[j].0, c));
                j += 1;
            } else {
                let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
        Poly2 { terms: out }
    }

    pub fn mul(&self, o: &Poly2) -> Poly2 {
        if self.is_zero() || o.is_zero() {
            return Poly2::zero();
        }
        if o.is_monomial() {
            return self.mul_term(o.terms[0].0, &o.terms[0].1);
        }
        if self.is_monomial() {
            return o.mul_term(self.terms[0].0, &self.terms[0].1);
        }
        let mut v = Vec::with_capacity(self.terms.len() * o.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &o.terms {
                v.push(((ea.0 + eb.0, ea.1 + eb.1), ca * cb));
            }
        }
        Poly2::from_terms(v)
    }

    /// Multiply by the single term `c * l^e.0 * r^e.1`.
    pub fn mul_term(&self, e: Exp, c: &Rational) -> Poly2 {
        if c.is_zero() {
            return Poly2::zero();
        }
        Poly2 {
            terms: self.terms.iter().map(|(f, d)| ((f.0 + e.0, f.1 + e.1), d * c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Poly2 {
        self.mul_term((0, 0), c)
    }

    pub fn pow(&self, e: u32) -> Poly2 {
        let mut result = Poly2::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Componentwise minimum of the exponents over all terms.
    pub fn min_exponents(&self) -> Exp {
        let mut it = self.terms.iter();
        let Some(first) = it.next() else { return (0, 0) };
        it.fold(first.0, |acc, (e, _)| (acc.0.min(e.0), acc.1.min(e.1)))
    }

    /// Divide by the monomial `l^e.0 r^e.1`, which must divide every term.
    pub fn div_monomial(&self, e: Exp) -> Poly2 {
        Poly2 { terms: self.terms.iter().map(|(f, c)| ((f.0 - e.0, f.1 - e.1), c.clone())).collect() }
    }

    /// Least common multiple of the coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.terms.iter().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()))
    }

    /// Decompose as `scale * l^a r^b * p` with `p` an integer polynomial with
    /// coprime coefficients, positive leading coefficient and no monomial factor.
    pub fn to_primitive_parts(&self) -> (Rational, Exp, BZ) {
        assert!(!self.is_zero(), "primitive parts of zero");
        let mono = self.min_exponents();
        let den = self.denominator_lcm();
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            let v = c.numer() * (&den / c.denom());
            g = g.gcd(&v);
        }
        let lead_negative = self.terms.last().unwrap().1.is_negative();
        if lead_negative {
            g = -g;
        }
        let dl = (self.deg_l() - mono.0) as usize;
        let mut coeffs: Vec<Vec<BigInt>> = vec![Vec::new(); dl + 1];
        for ((a, b), c) in &self.terms {
            let v = c.numer() * (&den / c.denom()) / &g;
            let row = &mut coeffs[(*a - mono.0) as usize];
            let k = (*b - mono.1) as usize;
            if row.len() <= k {
                row.resize(k + 1, BigInt::zero());
            }
            row[k] = v;
        }
        let bz = BZ::from_coeffs(coeffs.into_iter().map(ZU::from_coeffs).collect());
        (Rational::new(g, den), mono, bz)
    }

    /// Inverse of [`Poly2::to_primitive_parts`].
    pub fn from_parts(scale: &Rational, mono: Exp, p: &BZ) -> Poly2 {
        let mut terms = Vec::new();
        for (a, zu) in p.0.iter().enumerate() {
            for (b, c) in zu.0.iter().enumerate() {
                if !c.is_zero() {
                    terms.push((
                        (a as u32 + mono.0, b as u32 + mono.1),
                        Rational::from_integer(c.clone()) * scale,
                    ));
                }
            }
        }
        // Terms are generated in lex order already.
        Poly2 { terms }
    }

    /// Integer bivariate polynomial with the same terms; the coefficients must
    /// be integers.
    pub fn to_bz(&self) -> BZ {
        let dl = self.deg_l() as usize;
        let mut coeffs: Vec<Vec<BigInt>> = vec![Vec::new(); if self.is_zero() { 0 } else { dl + 1 }];
        for ((a, b), c) in &self.terms {
            assert!(c.is_integer(), "to_bz on a non-integer coefficient");
            let row = &mut coeffs[*a as usize];
            let k = *b as usize;
            if row.len() <= k {
                row.resize(k + 1, BigInt::zero());
            }
            row[k] = c.to_integer();
        }
        BZ::from_coeffs(coeffs.into_iter().map(ZU::from_coeffs).collect())
    }

    pub fn from_bz(p: &BZ) -> Poly2 {
        Poly2::from_parts(&Rational::one(), (0, 0), p)
    }

    /// Substitute `l := value`, returning the result as a polynomial-valued
    /// evaluation `Σ c r^b value^a`.
    pub fn eval_l(&self, value: &Poly2) -> Poly2 {
        let mut acc = Poly2::zero();
        let mut powers: Vec<Poly2> = vec![Poly2::one()];
        for ((a, b), c) in &self.terms {
            while powers.len() <= *a as usize {
                let next = powers.last().unwrap().mul(value);
                powers.push(next);
            }
            acc = acc.add(&powers[*a as usize].mul_term((0, *b), c));
        }
        acc
    }

    /// Homogenized substitution `l := num/den`: returns `Σ c r^b num^a den^(d-a)`
    /// where `d` is the supplied degree bound (at least `deg_l`).
    pub fn eval_l_fraction(&self, num: &Poly2, den: &Poly2, d: u32) -> Poly2 {
        let mut acc = Poly2::zero();
        let np: Vec<Poly2> = (0..=d).map(|k| num.pow(k)).collect();
        let dp: Vec<Poly2> = (0..=d).map(|k| den.pow(k)).collect();
        for ((a, b), c) in &self.terms {
            let t = np[*a as usize].mul(&dp[(d - a) as usize]).mul_term((0, *b), c);
            acc = acc.add(&t);
        }
        acc
    }

    /// Exact division by a nonzero polynomial, `None` when inexact.
    pub fn div_exact(&self, d: &Poly2) -> Option<Poly2> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Poly2::zero());
        }
        if d.is_monomial() {
            let (e, c) = &d.terms[0];
            if self.terms.iter().any(|(f, _)| f.0 < e.0 || f.1 < e.1) {
                return None;
            }
            let inv = c.recip();
            return Some(Poly2 {
                terms: self.terms.iter().map(|(f, x)| ((f.0 - e.0, f.1 - e.1), x * &inv)).collect(),
            });
        }
        let (sa, ma, pa) = self.to_primitive_parts();
        let (sd, md, pd) = d.to_primitive_parts();
        if ma.0 < md.0 || ma.1 < md.1 {
            return None;
        }
        let q = pa.div_exact(&pd)?;
        Some(Poly2::from_parts(&(sa / sd), (ma.0 - md.0, ma.1 - md.1), &q))
    }

    /// Formats with a caller-chosen variable naming, used by the canonical
    /// text form.
    pub fn write_canonical(&self, f: &mut impl fmt::Write) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, ((a, b), c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let mut parts: Vec<String> = Vec::new();
            let has_vars = *a > 0 || *b > 0;
            if !abs.is_one() || !has_vars {
                parts.push(abs.to_string());
            }
            match *a {
                0 => {}
                1 => parts.push("l".into()),
                k => parts.push(format!("l^{k}")),
            }
            match *b {
                0 => {}
                1 => parts.push("r".into()),
                k => parts.push(format!("r^{k}")),
            }
            f.write_str(&parts.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_canonical(f)
    }
}

impl fmt::Debug for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly2({self})")
    }
}

/// Greatest common divisor of two polynomials, normalized as an integer
/// primitive polynomial with positive lex-leading coefficient. A zero
/// argument returns the other one made primitive.
pub fn gcd(a: &Poly2, b: &Poly2) -> Poly2 {
    match (a.is_zero(), b.is_zero()) {
        (true, true) => return Poly2::zero(),
        (true, false) => {
            let (_, m, p) = b.to_primitive_parts();
            return Poly2::from_parts(&Rational::one(), m, &p);
        }
        (false, true) => {
            let (_, m, p) = a.to_primitive_parts();
            return Poly2::from_parts(&Rational::one(), m, &p);
        }
        _ => {}
    }
    let (_, ma, pa) = a.to_primitive_parts();
    let (_, mb, pb) = b.to_primitive_parts();
    let mono = (ma.0.min(mb.0), ma.1.min(mb.1));
    let g = if pa.is_integer_constant() || pb.is_integer_constant() { BZ::one() } else { pa.gcd(&pb).int_primitive() };
    Poly2::from_parts(&Rational::one(), mono, &g)
}
