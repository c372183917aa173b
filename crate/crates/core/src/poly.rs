//! Dense univariate polynomials over an exact coefficient field.
//!
//! The same type backs polynomials over the rationals (number field moduli)
//! and polynomials over a number field (Novikov numerators and denominators),
//! so the coefficient interface is factored into [`Coeff`]. Coefficients
//! without a global zero (number field elements carry their field context)
//! derive fresh constants from an existing value via `zero_like`/`one_like`;
//! the zero polynomial itself stores no coefficients and so needs no context.

use std::fmt::Debug;

use crate::field::FieldError;

/// Coefficient field interface for polynomial arithmetic.
pub trait Coeff: Clone + PartialEq + Debug {
    fn is_zero(&self) -> bool;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// Multiplicative inverse. Fails on zero, and on elements of a quotient
    /// ring whose modulus turns out not to be irreducible.
    fn inv(&self) -> Result<Self, FieldError>;
}

impl Coeff for crate::rat::Rat {
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        num_traits::Zero::zero()
    }
    fn one_like(&self) -> Self {
        num_traits::One::one()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn inv(&self) -> Result<Self, FieldError> {
        if Coeff::is_zero(self) {
            Err(FieldError::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }
}

/// A polynomial with coefficients in `F`, lowest degree first, no trailing
/// zeros. The zero polynomial has an empty coefficient vector.
#[derive(Clone, PartialEq, Debug)]
pub struct Poly<F: Coeff> {
    coeffs: Vec<F>,
}

impl<F: Coeff> Poly<F> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn from_coeffs(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: F) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(c: F, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = Vec::with_capacity(k + 1);
        for _ in 0..k {
            coeffs.push(c.zero_like());
        }
        coeffs.push(c);
        Poly { coeffs }
    }

    pub fn one_like(donor: &F) -> Self {
        Poly::constant(donor.one_like())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Option<&F> {
        self.coeffs.get(k)
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    /// Index of the lowest nonzero coefficient, or `None` for zero.
    pub fn ord(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_monic(&self) -> bool {
        match self.leading() {
            Some(c) => *c == c.one_like(),
            None => false,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            let c = match (self.coeffs.get(k), other.coeffs.get(k)) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            };
            out.push(c);
        }
        Poly::from_coeffs(out)
    }

    pub fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let da = self.coeffs.len() - 1;
        let db = other.coeffs.len() - 1;
        let mut out: Vec<F> = Vec::with_capacity(da + db + 1);
        for k in 0..=(da + db) {
            let lo = k.saturating_sub(db);
            let hi = k.min(da);
            let mut acc: Option<F> = None;
            for i in lo..=hi {
                let term = self.coeffs[i].mul(&other.coeffs[k - i]);
                acc = Some(match acc {
                    Some(a) => a.add(&term),
                    None => term,
                });
            }
            out.push(acc.expect("index range is nonempty"));
        }
        Poly::from_coeffs(out)
    }

    pub fn mul_scalar(&self, c: &F) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::from_coeffs(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    /// `self * x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let z = self.coeffs[0].zero_like();
        let mut coeffs = vec![z; k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// `self / x^k`; requires the first `k` coefficients to be zero.
    pub fn shift_down(&self, k: usize) -> Self {
        if k == 0 || self.is_zero() {
            return self.clone();
        }
        assert!(
            self.coeffs.iter().take(k).all(|c| c.is_zero()),
            "shift_down would drop nonzero coefficients"
        );
        Poly::from_coeffs(self.coeffs.iter().skip(k).cloned().collect())
    }

    /// Substitutes `x -> x^k`, spreading the coefficients.
    pub fn stretch(&self, k: usize) -> Self {
        assert!(k >= 1);
        if self.is_zero() || k == 1 {
            return self.clone();
        }
        let z = self.coeffs[0].zero_like();
        let mut coeffs = vec![z; (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        Poly::from_coeffs(coeffs)
    }

    /// Inverse of `stretch(k)`; requires every nonzero index divisible by `k`.
    pub fn compress(&self, k: usize) -> Self {
        assert!(k >= 1);
        if self.is_zero() || k == 1 {
            return self.clone();
        }
        let z = self.coeffs[0].zero_like();
        let mut coeffs = vec![z; (self.coeffs.len() - 1) / k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                assert!(i % k == 0, "coefficient index not divisible by stride");
                coeffs[i / k] = c.clone();
            }
        }
        Poly::from_coeffs(coeffs)
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = x.zero_like();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        for (k, c) in self.coeffs.iter().enumerate().skip(1) {
            let mut m = c.clone();
            let mut acc = c.zero_like();
            // k * c by repeated addition; k is small at desk scale.
            for _ in 0..k {
                acc = acc.add(&m);
            }
            m = acc;
            out.push(m);
        }
        Poly::from_coeffs(out)
    }

    /// Euclidean division: returns `(q, r)` with `self = q * div + r` and
    /// `deg r < deg div`.
    pub fn divmod(&self, div: &Self) -> Result<(Self, Self), FieldError> {
        let dd = match div.degree() {
            Some(d) => d,
            None => return Err(FieldError::DivisionByZero),
        };
        let lead_inv = div.leading().expect("nonzero divisor").inv()?;
        let mut rem = self.clone();
        let z = div.leading().expect("nonzero").zero_like();
        let dq = match self.degree() {
            Some(ds) if ds >= dd => ds - dd,
            _ => return Ok((Poly::zero(), rem)),
        };
        let mut q = vec![z; dq + 1];
        while let Some(dr) = rem.degree() {
            if dr < dd {
                break;
            }
            let c = rem.leading().expect("nonzero").mul(&lead_inv);
            let k = dr - dd;
            q[k] = c.clone();
            let sub = div.mul(&Poly::monomial(c, k));
            rem = rem.sub(&sub);
        }
        Ok((Poly::from_coeffs(q), rem))
    }

    pub fn monic(&self) -> Result<Self, FieldError> {
        match self.leading() {
            None => Err(FieldError::DivisionByZero),
            Some(lead) => {
                let inv = lead.inv()?;
                Ok(self.mul_scalar(&inv))
            }
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Result<Self, FieldError> {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divmod(&b)?;
            a = b;
            b = r;
        }
        if a.is_zero() {
            Ok(a)
        } else {
            a.monic()
        }
    }

    /// Extended gcd: returns `(g, u, v)` with `u*self + v*other = g` and `g`
    /// monic (or zero when both inputs are zero).
    pub fn extended_gcd(&self, other: &Self) -> Result<(Self, Self, Self), FieldError> {
        let donor = self
            .leading()
            .or_else(|| other.leading())
            .cloned();
        let donor = match donor {
            Some(d) => d,
            None => return Ok((Poly::zero(), Poly::zero(), Poly::zero())),
        };
        let mut r0 = self.clone();
        let mut r1 = other.clone();
        let mut u0 = Poly::one_like(&donor);
        let mut u1 = Poly::zero();
        let mut v0 = Poly::zero();
        let mut v1 = Poly::one_like(&donor);
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1)?;
            let nu = u0.sub(&q.mul(&u1));
            let nv = v0.sub(&q.mul(&v1));
            r0 = r1;
            r1 = r;
            u0 = u1;
            u1 = nu;
            v0 = v1;
            v1 = nv;
        }
        let lead_inv = r0.leading().expect("nonzero gcd").inv()?;
        Ok((
            r0.mul_scalar(&lead_inv),
            u0.mul_scalar(&lead_inv),
            v0.mul_scalar(&lead_inv),
        ))
    }

    /// Whether `gcd(self, self')` is constant.
    pub fn is_squarefree(&self) -> Result<bool, FieldError> {
        let g = self.gcd(&self.derivative())?;
        Ok(g.degree() == Some(0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat_int, Rat};
    use proptest::prelude::*;

    fn p(coeffs: &[i64]) -> Poly<Rat> {
        Poly::from_coeffs(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    #[test]
    fn divmod_roundtrip() {
        let a = p(&[-1, 0, 0, 0, 1]); // x^4 - 1
        let b = p(&[-1, 1]); // x - 1
        let (q, r) = a.divmod(&b).unwrap();
        assert!(r.is_zero());
        assert_eq!(q, p(&[1, 1, 1, 1]));
        assert_eq!(q.mul(&b), a);
    }

    #[test]
    fn gcd_and_bezout() {
        let a = p(&[-1, 0, 1]); // (x-1)(x+1)
        let b = p(&[-2, 1, 1]); // (x-1)(x+2)
        let g = a.gcd(&b).unwrap();
        assert_eq!(g, p(&[-1, 1]));
        let (g2, u, v) = a.extended_gcd(&b).unwrap();
        assert_eq!(g2, g);
        assert_eq!(u.mul(&a).add(&v.mul(&b)), g);
    }

    #[test]
    fn squarefree_detection() {
        assert!(p(&[-1, 0, 1]).is_squarefree().unwrap());
        assert!(!p(&[1, -2, 1]).is_squarefree().unwrap()); // (x-1)^2
    }

    #[test]
    fn stretch_compress() {
        let a = p(&[1, 0, 3]);
        assert_eq!(a.stretch(2), p(&[1, 0, 0, 0, 3]));
        assert_eq!(a.stretch(2).compress(2), a);
    }

    proptest! {
        #[test]
        fn mul_then_div_is_identity(a in proptest::collection::vec(-6i64..6, 0..6),
                                    b in proptest::collection::vec(-6i64..6, 1..5)) {
            let pa = p(&a);
            let pb = p(&b);
            prop_assume!(!pb.is_zero());
            let prod = pa.mul(&pb);
            let (q, r) = prod.divmod(&pb).unwrap();
            prop_assert!(r.is_zero());
            prop_assert_eq!(q, pa);
        }
    }
}
