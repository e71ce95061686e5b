//! Dense integer polynomials in one variable (`ZU`, the variable is r) and in
//! two variables (`BZ`, a polynomial in l whose coefficients are `ZU`).
//!
//! These are the workhorse types behind gcd computations and fraction-free
//! elimination. All division routines here are exact divisions: callers only
//! use them when the quotient is known to exist.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense univariate integer polynomial, coefficients in ascending degree.
/// The zero polynomial has no coefficients; otherwise the last one is nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Default, Hash)]
pub struct ZU(pub Vec<BigInt>);

impl ZU {
    pub fn zero() -> Self {
        ZU(Vec::new())
    }

    pub fn one() -> Self {
        ZU(vec![BigInt::one()])
    }

    pub fn constant(c: BigInt) -> Self {
        let mut p = ZU(vec![c]);
        p.trim();
        p
    }

    /// `c * r^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return ZU::zero();
        }
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = c;
        ZU(v)
    }

    pub fn from_coeffs(v: Vec<BigInt>) -> Self {
        let mut p = ZU(v);
        p.trim();
        p
    }

    fn trim(&mut self) {
        while matches!(self.0.last(), Some(c) if c.is_zero()) {
            self.0.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_one()
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn deg(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lc(&self) -> &BigInt {
        self.0.last().expect("leading coefficient of zero polynomial")
    }

    pub fn neg(&self) -> ZU {
        ZU(self.0.iter().map(|c| -c).collect())
    }

    pub fn add(&self, o: &ZU) -> ZU {
        let (long, short) = if self.0.len() >= o.0.len() { (self, o) } else { (o, self) };
        let mut v = long.0.clone();
        for (a, b) in v.iter_mut().zip(short.0.iter()) {
            *a += b;
        }
        ZU::from_coeffs(v)
    }

    pub fn sub(&self, o: &ZU) -> ZU {
        let n = self.0.len().max(o.0.len());
        let mut v = self.0.clone();
        v.resize(n, BigInt::zero());
        for (a, b) in v.iter_mut().zip(o.0.iter()) {
            *a -= b;
        }
        ZU::from_coeffs(v)
    }

    pub fn mul(&self, o: &ZU) -> ZU {
        if self.is_zero() || o.is_zero() {
            return ZU::zero();
        }
        if o.0.len() == 1 {
            return self.scale(&o.0[0]);
        }
        if self.0.len() == 1 {
            return o.scale(&self.0[0]);
        }
        let mut v = vec![BigInt::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] += a * b;
                }
            }
        }
        ZU::from_coeffs(v)
    }

    pub fn scale(&self, c: &BigInt) -> ZU {
        if c.is_zero() {
            return ZU::zero();
        }
        ZU(self.0.iter().map(|a| a * c).collect())
    }

    /// Multiply by `r^k`.
    pub fn shift(&self, k: usize) -> ZU {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut v = vec![BigInt::zero(); k];
        v.extend(self.0.iter().cloned());
        ZU(v)
    }

    pub fn pow(&self, e: usize) -> ZU {
        let mut result = ZU::one();
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

    /// Nonnegative gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.0 {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Exact division of every coefficient by `c`.
    pub fn div_scalar(&self, c: &BigInt) -> ZU {
        if c.is_one() {
            return self.clone();
        }
        ZU(self.0.iter().map(|a| a / c).collect())
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive(&self) -> ZU {
        if self.is_zero() {
            return ZU::zero();
        }
        let mut c = self.content();
        if self.lc().is_negative() {
            c = -c;
        }
        self.div_scalar(&c)
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &ZU) -> Option<ZU> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(ZU::zero());
        }
        let dd = d.deg().unwrap();
        if d.0.len() == 1 {
            let c = &d.0[0];
            let mut out = Vec::with_capacity(self.0.len());
            for a in &self.0 {
                let (q, rem) = a.div_rem(c);
                if !rem.is_zero() {
                    return None;
                }
                out.push(q);
            }
            return Some(ZU(out));
        }
        let ds = self.deg().unwrap();
        if ds < dd {
            return None;
        }
        let mut rem = self.0.clone();
        let mut q = vec![BigInt::zero(); ds - dd + 1];
        let lc = d.lc();
        for k in (0..=ds - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (qk, rk) = top.div_rem(lc);
            if !rk.is_zero() {
                return None;
            }
            for (j, b) in d.0.iter().enumerate() {
                if !b.is_zero() {
                    rem[k + j] -= &qk * b;
                }
            }
            q[k] = qk;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(ZU::from_coeffs(q))
    }

    /// Pseudo-remainder: `lc(d)^(deg self - deg d + 1) * self mod d`.
    pub fn prem(&self, d: &ZU) -> ZU {
        let dd = d.deg().expect("pseudo-remainder by zero");
        let Some(ds) = self.deg() else { return ZU::zero() };
        if ds < dd {
            return self.clone();
        }
        let lc = d.lc().clone();
        let mut rem = self.0.clone();
        let mut steps = ds - dd + 1;
        loop {
            while matches!(rem.last(), Some(c) if c.is_zero()) {
                rem.pop();
            }
            if rem.is_empty() || rem.len() - 1 < dd {
                break;
            }
            let top = rem.len() - 1;
            let t = rem[top].clone();
            for c in rem.iter_mut() {
                *c *= &lc;
            }
            let off = top - dd;
            for (j, b) in d.0.iter().enumerate() {
                rem[off + j] -= &t * b;
            }
            steps -= 1;
        }
        let mut out = ZU::from_coeffs(rem);
        if steps > 0 {
            out = out.scale(&num_traits::pow(lc, steps));
        }
        out
    }

    /// Greatest common divisor with positive leading coefficient
    /// (primitive remainder sequence).
    pub fn gcd(&self, o: &ZU) -> ZU {
        if self.is_zero() {
            return o.primitive_with_content();
        }
        if o.is_zero() {
            return self.primitive_with_content();
        }
        let cg = self.content().gcd(&o.content());
        let (mut a, mut b) = if self.deg() >= o.deg() {
            (self.primitive(), o.primitive())
        } else {
            (o.primitive(), self.primitive())
        };
        while !b.is_zero() {
            if b.deg() == Some(0) {
                return ZU::constant(cg);
            }
            let r = a.prem(&b);
            a = b;
            b = r.primitive();
        }
        a.scale(&cg)
    }

    fn primitive_with_content(&self) -> ZU {
        if self.is_zero() {
            return ZU::zero();
        }
        if self.lc().is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Number of nonzero coefficients.
    pub fn nnz(&self) -> usize {
        self.0.iter().filter(|c| !c.is_zero()).count()
    }
}

/// Dense bivariate integer polynomial: `self.0[k]` is the coefficient of `l^k`,
/// itself a polynomial in r.
#[derive(Clone, Debug, PartialEq, Eq, Default, Hash)]
pub struct BZ(pub Vec<ZU>);

impl BZ {
    pub fn zero() -> Self {
        BZ(Vec::new())
    }

    pub fn one() -> Self {
        BZ(vec![ZU::one()])
    }

    pub fn from_coeffs(v: Vec<ZU>) -> Self {
        let mut p = BZ(v);
        p.trim();
        p
    }

    pub fn constant(c: ZU) -> Self {
        BZ::from_coeffs(vec![c])
    }

    fn trim(&mut self) {
        while matches!(self.0.last(), Some(c) if c.is_zero()) {
            self.0.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree in l (`None` for zero).
    pub fn deg(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lc(&self) -> &ZU {
        self.0.last().expect("leading coefficient of zero polynomial")
    }

    /// True when the polynomial is a nonzero integer constant.
    pub fn is_integer_constant(&self) -> bool {
        self.0.len() == 1 && self.0[0].0.len() == 1
    }

    pub fn neg(&self) -> BZ {
        BZ(self.0.iter().map(ZU::neg).collect())
    }

    pub fn add(&self, o: &BZ) -> BZ {
        let n = self.0.len().max(o.0.len());
        let mut v = Vec::with_capacity(n);
        for k in 0..n {
            v.push(match (self.0.get(k), o.0.get(k)) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        BZ::from_coeffs(v)
    }

    pub fn sub(&self, o: &BZ) -> BZ {
        let n = self.0.len().max(o.0.len());
        let mut v = Vec::with_capacity(n);
        for k in 0..n {
            v.push(match (self.0.get(k), o.0.get(k)) {
                (Some(a), Some(b)) => a.sub(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.neg(),
                (None, None) => unreachable!(),
            });
        }
        BZ::from_coeffs(v)
    }

    pub fn mul(&self, o: &BZ) -> BZ {
        if self.is_zero() || o.is_zero() {
            return BZ::zero();
        }
        let mut v = vec![ZU::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] = v[i + j].add(&a.mul(b));
                }
            }
        }
        BZ::from_coeffs(v)
    }

    /// `a*b - c*d`, the Bareiss cross product, computed with one accumulator.
    pub fn mul_sub_mul(a: &BZ, b: &BZ, c: &BZ, d: &BZ) -> BZ {
        let la = if a.is_zero() || b.is_zero() { 0 } else { a.0.len() + b.0.len() - 1 };
        let lc = if c.is_zero() || d.is_zero() { 0 } else { c.0.len() + d.0.len() - 1 };
        let n = la.max(lc);
        if n == 0 {
            return BZ::zero();
        }
        // Width in r of the accumulator.
        let wr = |x: &BZ| x.0.iter().map(|z| z.0.len()).max().unwrap_or(0);
        let w1 = if la > 0 { wr(a) + wr(b) } else { 0 };
        let w2 = if lc > 0 { wr(c) + wr(d) } else { 0 };
        let w = w1.max(w2);
        let mut acc = vec![vec![BigInt::zero(); w]; n];
        let mut accumulate = |x: &BZ, y: &BZ, sign: bool| {
            for (i, p) in x.0.iter().enumerate() {
                if p.is_zero() {
                    continue;
                }
                for (j, q) in y.0.iter().enumerate() {
                    if q.is_zero() {
                        continue;
                    }
                    let row = &mut acc[i + j];
                    for (s, ps) in p.0.iter().enumerate() {
                        if ps.is_zero() {
                            continue;
                        }
                        for (t, qt) in q.0.iter().enumerate() {
                            if qt.is_zero() {
                                continue;
                            }
                            if sign {
                                row[s + t] += ps * qt;
                            } else {
                                row[s + t] -= ps * qt;
                            }
                        }
                    }
                }
            }
        };
        if la > 0 {
            accumulate(a, b, true);
        }
        if lc > 0 {
            accumulate(c, d, false);
        }
        BZ::from_coeffs(acc.into_iter().map(ZU::from_coeffs).collect())
    }

    pub fn scale(&self, c: &ZU) -> BZ {
        if c.is_zero() {
            return BZ::zero();
        }
        BZ(self.0.iter().map(|a| a.mul(c)).collect())
    }

    /// Gcd (in Z[r]) of the coefficients, with positive leading coefficient.
    pub fn content(&self) -> ZU {
        let mut g = ZU::zero();
        for c in &self.0 {
            if c.is_zero() {
                continue;
            }
            g = if g.is_zero() { c.primitive_with_content() } else { g.gcd(c) };
            if g.0.len() == 1 && g.0[0].is_one() {
                break;
            }
        }
        g
    }

    /// Exact division of every coefficient by `c`.
    pub fn div_coeff(&self, c: &ZU) -> BZ {
        if c.is_one() {
            return self.clone();
        }
        BZ(self
            .0
            .iter()
            .map(|a| a.div_exact(c).expect("inexact coefficient division"))
            .collect())
    }

    /// Primitive part (content removed) with positive leading coefficient.
    pub fn primitive(&self) -> BZ {
        if self.is_zero() {
            return BZ::zero();
        }
        let c = self.content();
        let mut p = self.div_coeff(&c);
        if p.lc().lc().is_negative() {
            p = p.neg();
        }
        p
    }

    /// Divides out the integer content only and makes the leading
    /// coefficient positive; factors involving r are kept.
    pub fn int_primitive(&self) -> BZ {
        if self.is_zero() {
            return BZ::zero();
        }
        let mut g = BigInt::zero();
        for z in &self.0 {
            g = g.gcd(&z.content());
        }
        if self.lc().lc().is_negative() {
            g = -g;
        }
        BZ(self.0.iter().map(|z| z.div_scalar(&g)).collect())
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &BZ) -> Option<BZ> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(BZ::zero());
        }
        if d.0.len() == 1 {
            let c = &d.0[0];
            let mut out = Vec::with_capacity(self.0.len());
            for a in &self.0 {
                out.push(a.div_exact(c)?);
            }
            return Some(BZ(out));
        }
        let dd = d.deg().unwrap();
        let ds = self.deg().unwrap();
        if ds < dd {
            return None;
        }
        let mut rem = self.0.clone();
        let mut q = vec![ZU::zero(); ds - dd + 1];
        let lc = d.lc();
        for k in (0..=ds - dd).rev() {
            if rem[k + dd].is_zero() {
                continue;
            }
            let qk = rem[k + dd].div_exact(lc)?;
            for (j, b) in d.0.iter().enumerate() {
                if !b.is_zero() {
                    rem[k + j] = rem[k + j].sub(&qk.mul(b));
                }
            }
            q[k] = qk;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(BZ::from_coeffs(q))
    }

    /// Pseudo-remainder in l: `lc(d)^(deg self - deg d + 1) * self mod d`.
    pub fn prem(&self, d: &BZ) -> BZ {
        let dd = d.deg().expect("pseudo-remainder by zero");
        let Some(ds) = self.deg() else { return BZ::zero() };
        if ds < dd {
            return self.clone();
        }
        let lc = d.lc().clone();
        let mut rem = self.0.clone();
        let mut steps = ds - dd + 1;
        loop {
            while matches!(rem.last(), Some(c) if c.is_zero()) {
                rem.pop();
            }
            if rem.is_empty() || rem.len() - 1 < dd {
                break;
            }
            let top = rem.len() - 1;
            let t = rem[top].clone();
            for c in rem.iter_mut() {
                *c = c.mul(&lc);
            }
            let off = top - dd;
            for (j, b) in d.0.iter().enumerate() {
                rem[off + j] = rem[off + j].sub(&t.mul(b));
            }
            steps -= 1;
        }
        let out = BZ::from_coeffs(rem);
        if steps > 0 {
            out.scale(&lc.pow(steps))
        } else {
            out
        }
    }

    /// Greatest common divisor, normalized to be primitive over Z with a
    /// positive leading coefficient (times the gcd of the contents).
    pub fn gcd(&self, o: &BZ) -> BZ {
        if self.is_zero() {
            return o.normalize_sign();
        }
        if o.is_zero() {
            return self.normalize_sign();
        }
        let ca = self.content();
        let cb = o.content();
        let cg = ca.gcd(&cb);
        if self.deg() == Some(0) || o.deg() == Some(0) {
            return BZ::constant(cg);
        }
        let pa = self.div_coeff(&ca);
        let pb = o.div_coeff(&cb);
        let g = subresultant_pp(&pa, &pb);
        g.scale(&cg)
    }

    fn normalize_sign(&self) -> BZ {
        if self.is_zero() {
            return BZ::zero();
        }
        if self.lc().lc().is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }
}

/// Primitive gcd of two primitive polynomials of positive degree in l, by
/// the subresultant remainder sequence over Z[r].
fn subresultant_pp(a: &BZ, b: &BZ) -> BZ {
    let (mut a, mut b) = if a.deg() >= b.deg() { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) };
    let mut g = ZU::one();
    let mut h = ZU::one();
    loop {
        let delta = a.deg().unwrap() - b.deg().unwrap();
        let r = a.prem(&b);
        if r.is_zero() {
            return b.primitive();
        }
        if r.deg() == Some(0) {
            return BZ::one();
        }
        let divisor = g.mul(&h.pow(delta));
        a = b;
        b = r.div_coeff(&divisor);
        g = a.lc().clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => g.pow(delta).div_exact(&h.pow(delta - 1)).expect("subresultant h update"),
        };
    }
}
