//! Number fields `K = Q[t]/(m(t))` with exact element arithmetic.
//!
//! The modulus is monic and squarefree; irreducibility is asserted by the
//! caller and verified lazily: inverting an element whose polynomial shares a
//! nonconstant factor with the modulus reports [`FieldError::NotInvertible`],
//! which exposes a reducible modulus. Elements carry a cheap handle to their
//! field, so binary operations need no external context.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::poly::{Coeff, Poly};
use crate::rat::{rat_sqrt, render_rat, Rat};

#[derive(Debug, Clone, Error, PartialEq)]
pub enum FieldError {
    #[error("modulus is not squarefree")]
    NotSquarefree,
    #[error("modulus must be monic of degree >= 1")]
    BadModulus,
    #[error("element is not invertible; modulus is reducible (common factor {witness})")]
    NotInvertible { witness: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("scalar is not a monomial u*T^(j/N)")]
    NotMonomial,
    #[error("{0} has no square root in the coefficient field; extend the field")]
    RequiresFieldExtension(String),
}

#[derive(Debug)]
struct FieldInner {
    modulus: Poly<Rat>,
    degree: usize,
}

/// A number field context. Cloning is cheap; two handles are interchangeable
/// when their moduli agree.
#[derive(Clone, Debug)]
pub struct NumberField {
    inner: Arc<FieldInner>,
}

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.modulus == other.inner.modulus
    }
}
impl Eq for NumberField {}

impl NumberField {
    /// Builds the field `Q[t]/(modulus)`. The modulus must be monic of degree
    /// at least one and squarefree.
    pub fn new(modulus: Poly<Rat>) -> Result<Self, FieldError> {
        match modulus.degree() {
            Some(d) if d >= 1 && modulus.is_monic() => {
                if !modulus.is_squarefree()? {
                    return Err(FieldError::NotSquarefree);
                }
                Ok(NumberField {
                    inner: Arc::new(FieldInner { degree: d, modulus }),
                })
            }
            _ => Err(FieldError::BadModulus),
        }
    }

    /// The rationals, presented as the degree-one field `Q[t]/(t - 1)`.
    pub fn rationals() -> Self {
        let modulus = Poly::from_coeffs(vec![crate::rat::rat_int(-1), crate::rat::rat_int(1)]);
        NumberField::new(modulus).expect("t - 1 is a valid modulus")
    }

    pub fn degree(&self) -> usize {
        self.inner.degree
    }

    pub fn modulus(&self) -> &Poly<Rat> {
        &self.inner.modulus
    }

    /// Element from a polynomial in the generator; reduced mod the modulus.
    pub fn elem_from_poly(&self, value: Poly<Rat>) -> FieldElem {
        let reduced = if value.degree().map_or(false, |d| d >= self.degree()) {
            value
                .divmod(&self.inner.modulus)
                .expect("modulus is monic")
                .1
        } else {
            value
        };
        let mut coords = reduced.coeffs().to_vec();
        coords.resize(self.degree(), Rat::zero());
        FieldElem {
            field: self.clone(),
            coords,
        }
    }

    pub fn elem_from_coords(&self, coords: Vec<Rat>) -> FieldElem {
        self.elem_from_poly(Poly::from_coeffs(coords))
    }

    pub fn from_rat(&self, c: Rat) -> FieldElem {
        self.elem_from_poly(Poly::constant(c))
    }

    pub fn zero(&self) -> FieldElem {
        self.from_rat(Rat::zero())
    }

    pub fn one(&self) -> FieldElem {
        self.from_rat(Rat::one())
    }

    /// The class of `t`.
    pub fn gen(&self) -> FieldElem {
        self.elem_from_poly(Poly::monomial(Rat::one(), 1))
    }
}

/// An element of a number field, stored by its coordinates in the basis
/// `1, t, ..., t^(d-1)`. Equality is coordinate-wise.
#[derive(Clone, PartialEq, Debug)]
pub struct FieldElem {
    field: NumberField,
    coords: Vec<Rat>,
}

impl FieldElem {
    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn as_poly(&self) -> Poly<Rat> {
        Poly::from_coeffs(self.coords.clone())
    }

    /// The rational value, when the element lies in the prime field.
    pub fn as_rat(&self) -> Option<Rat> {
        if self.coords.iter().skip(1).all(|c| Zero::is_zero(c)) {
            Some(self.coords[0].clone())
        } else {
            None
        }
    }

    /// Lexicographic sign in the basis `1, t, ..., t^(d-1)`: the sign of the
    /// first nonzero coordinate. Zero for the zero element.
    pub fn lex_sign(&self) -> i32 {
        for c in &self.coords {
            if c.is_positive() {
                return 1;
            }
            if c.is_negative() {
                return -1;
            }
        }
        0
    }

    fn assert_same_field(&self, other: &Self) {
        assert!(
            self.field == other.field,
            "operands belong to different number fields"
        );
    }

    pub fn checked_inv(&self) -> Result<FieldElem, FieldError> {
        if Coeff::is_zero(self) {
            return Err(FieldError::DivisionByZero);
        }
        let value = self.as_poly();
        let (g, u, _) = value.extended_gcd(self.field.modulus())?;
        if g.degree() != Some(0) {
            return Err(FieldError::NotInvertible {
                witness: render_rat_poly(&g),
            });
        }
        // g is monic constant 1, so u * value = 1 mod m.
        Ok(self.field.elem_from_poly(u))
    }

    pub fn checked_div(&self, other: &Self) -> Result<FieldElem, FieldError> {
        Ok(self.mul(&other.checked_inv()?))
    }
}

/// Renders a rational polynomial in `t` (ascending powers).
pub fn render_rat_poly(p: &Poly<Rat>) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    let mut first = true;
    for (k, c) in p.coeffs().iter().enumerate() {
        if Zero::is_zero(c) {
            continue;
        }
        let mag = c.abs();
        let neg = c.is_negative();
        if first {
            if neg {
                out.push('-');
            }
            first = false;
        } else if neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let mag_one = mag.is_one();
        match (k, mag_one) {
            (0, _) => out.push_str(&render_rat(&mag)),
            (1, true) => out.push('t'),
            (1, false) => {
                out.push_str(&render_rat(&mag));
                out.push_str("*t");
            }
            (_, true) => out.push_str(&format!("t^{}", k)),
            (_, false) => out.push_str(&format!("{}*t^{}", render_rat(&mag), k)),
        }
    }
    out
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render_rat_poly(&self.as_poly()))
    }
}

impl Coeff for FieldElem {
    fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| Zero::is_zero(c))
    }
    fn zero_like(&self) -> Self {
        self.field.zero()
    }
    fn one_like(&self) -> Self {
        self.field.one()
    }
    fn add(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        FieldElem {
            field: self.field.clone(),
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
    fn sub(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        FieldElem {
            field: self.field.clone(),
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
    fn neg(&self) -> Self {
        FieldElem {
            field: self.field.clone(),
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }
    fn mul(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        self.field.elem_from_poly(self.as_poly().mul(&other.as_poly()))
    }
    fn inv(&self) -> Result<Self, FieldError> {
        self.checked_inv()
    }
}

/// Exact square root in a number field, when one can be found.
///
/// Complete for fields of degree 1 and 2. For higher degree the procedure
/// tries rational squares and rational multiples of basis monomials, then
/// reports [`FieldError::RequiresFieldExtension`] carrying the element, so a
/// caller can rebuild the field. The returned root is the canonical branch:
/// lexicographically positive in the basis `1, t, ..., t^(d-1)`.
pub fn sqrt_in_field(u: &FieldElem) -> Result<FieldElem, FieldError> {
    if Coeff::is_zero(u) {
        return Ok(u.clone());
    }
    let field = u.field().clone();
    let fail = || FieldError::RequiresFieldExtension(u.to_string());

    let canonical = |y: FieldElem| -> FieldElem {
        if y.lex_sign() < 0 {
            Coeff::neg(&y)
        } else {
            y
        }
    };

    if let Some(r) = u.as_rat() {
        if let Some(s) = rat_sqrt(&r) {
            return Ok(canonical(field.from_rat(s)));
        }
        if field.degree() == 1 {
            return Err(fail());
        }
    } else if field.degree() == 1 {
        unreachable!("degree-1 elements are rational");
    }

    if field.degree() == 2 {
        return sqrt_quadratic(u).ok_or_else(fail).map(canonical);
    }

    // Degree >= 3: bounded search over rational multiples of basis monomials.
    for j in 0..field.degree() {
        let tj = field.elem_from_poly(Poly::monomial(Rat::one(), j));
        let t2j = tj.mul(&tj);
        if Coeff::is_zero(&t2j) {
            continue;
        }
        if let Ok(w) = u.checked_div(&t2j) {
            if let Some(r) = w.as_rat() {
                if let Some(s) = rat_sqrt(&r) {
                    let y = tj.mul(&field.from_rat(s));
                    if y.mul(&y) == *u {
                        return Ok(canonical(y));
                    }
                }
            }
        }
    }
    Err(fail())
}

/// Square roots in a quadratic field `Q[t]/(t^2 + m1 t + m0)`: eliminates the
/// cross term and reduces to rational square tests on a biquadratic.
fn sqrt_quadratic(u: &FieldElem) -> Option<FieldElem> {
    let field = u.field();
    let m = field.modulus();
    let m0 = m.coeff(0).cloned().unwrap_or_else(Rat::zero);
    let m1 = m.coeff(1).cloned().unwrap_or_else(Rat::zero);
    let u0 = u.coords()[0].clone();
    let u1 = u.coords()[1].clone();

    let check = |c0: Rat, c1: Rat| -> Option<FieldElem> {
        let y = field.elem_from_coords(vec![c0, c1]);
        if y.mul(&y) == *u {
            Some(y)
        } else {
            None
        }
    };

    // c1 = 0 branch: u must be a rational square.
    if Zero::is_zero(&u1) {
        if let Some(s) = rat_sqrt(&u0) {
            if let Some(y) = check(s, Rat::zero()) {
                return Some(y);
            }
        }
    }

    // c1 != 0 branch. With w = c1^2:
    //   (m1^2 - 4 m0) w^2 + (2 u1 m1 - 4 u0) w + u1^2 = 0
    // and then c0 = (u1 + m1 w) / (2 c1).
    let a = &m1 * &m1 - crate::rat::rat_int(4) * &m0;
    let b = crate::rat::rat_int(2) * &u1 * &m1 - crate::rat::rat_int(4) * &u0;
    let c = &u1 * &u1;
    let two = crate::rat::rat_int(2);
    let w_candidates: Vec<Rat> = if Zero::is_zero(&a) {
        if Zero::is_zero(&b) {
            Vec::new()
        } else {
            vec![-&c / &b]
        }
    } else {
        let disc = &b * &b - crate::rat::rat_int(4) * &a * &c;
        match rat_sqrt(&disc) {
            None => Vec::new(),
            Some(sd) => vec![(-&b + &sd) / (&two * &a), (-&b - &sd) / (&two * &a)],
        }
    };
    for w in w_candidates {
        if Zero::is_zero(&w) {
            continue;
        }
        if let Some(c1) = rat_sqrt(&w) {
            for c1 in [c1.clone(), -c1] {
                if Zero::is_zero(&c1) {
                    continue;
                }
                let c0 = (&u1 + &m1 * &w) / (&two * &c1);
                if let Some(y) = check(c0, c1) {
                    return Some(y);
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    fn qpoly(coeffs: &[i64]) -> Poly<Rat> {
        Poly::from_coeffs(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    /// Q(zeta_3) = Q[t]/(t^2 + t + 1).
    fn eisenstein() -> NumberField {
        NumberField::new(qpoly(&[1, 1, 1])).unwrap()
    }

    #[test]
    fn degree_one_field_is_rationals() {
        let q = NumberField::rationals();
        assert_eq!(q.degree(), 1);
        let x = q.from_rat(rat(3, 2));
        assert_eq!(x.as_rat(), Some(rat(3, 2)));
    }

    #[test]
    fn squarefree_modulus_required() {
        // (t - 1)^2 = t^2 - 2t + 1 shares t - 1 with its derivative.
        assert_eq!(
            NumberField::new(qpoly(&[1, -2, 1])).unwrap_err(),
            FieldError::NotSquarefree
        );
    }

    #[test]
    fn eisenstein_multiplication() {
        // t * t = -t - 1 in Q(zeta_3).
        let k = eisenstein();
        let t = k.gen();
        assert_eq!(t.mul(&t), k.elem_from_coords(vec![rat_int(-1), rat_int(-1)]));
    }

    #[test]
    fn eisenstein_inverse() {
        // inv(t) = -1 - t, and the product checks back to 1.
        let k = eisenstein();
        let t = k.gen();
        let inv = t.checked_inv().unwrap();
        assert_eq!(inv, k.elem_from_coords(vec![rat_int(-1), rat_int(-1)]));
        assert_eq!(t.mul(&inv), k.one());
        assert_eq!(k.one().checked_inv().unwrap(), k.one());
    }

    #[test]
    fn inverse_of_zero_fails() {
        let k = eisenstein();
        assert_eq!(k.zero().checked_inv().unwrap_err(), FieldError::DivisionByZero);
    }

    #[test]
    fn reducible_modulus_detected_on_inversion() {
        // t^2 - 1 is squarefree but reducible; inverting t - 1 exposes it.
        let k = NumberField::new(qpoly(&[-1, 0, 1])).unwrap();
        let x = k.elem_from_coords(vec![rat_int(-1), rat_int(1)]);
        assert!(matches!(
            x.checked_inv().unwrap_err(),
            FieldError::NotInvertible { .. }
        ));
    }

    #[test]
    fn two_sided_inverse_over_eisenstein() {
        let k = eisenstein();
        for (a, b) in [(1, 0), (0, 1), (2, 3), (-1, 5), (7, -2)] {
            let x = k.elem_from_coords(vec![rat_int(a), rat_int(b)]);
            let inv = x.checked_inv().unwrap();
            assert_eq!(x.mul(&inv), k.one());
            assert_eq!(inv.mul(&x), k.one());
        }
    }

    #[test]
    fn sqrt_rational_square() {
        let q = NumberField::rationals();
        let y = sqrt_in_field(&q.from_rat(rat(4, 9))).unwrap();
        assert_eq!(y.as_rat(), Some(rat(2, 3)));
        assert!(matches!(
            sqrt_in_field(&q.from_rat(rat_int(2))).unwrap_err(),
            FieldError::RequiresFieldExtension(_)
        ));
    }

    #[test]
    fn sqrt_of_minus_three_in_eisenstein() {
        // (1 + 2t)^2 = -3 in Q(zeta_3).
        let k = eisenstein();
        let y = sqrt_in_field(&k.from_rat(rat_int(-3))).unwrap();
        assert_eq!(y, k.elem_from_coords(vec![rat_int(1), rat_int(2)]));
        assert_eq!(y.mul(&y), k.from_rat(rat_int(-3)));
    }

    #[test]
    fn sqrt_of_generator_in_eisenstein() {
        // (1 + t)^2 = t in Q(zeta_3).
        let k = eisenstein();
        let y = sqrt_in_field(&k.gen()).unwrap();
        assert_eq!(y, k.elem_from_coords(vec![rat_int(1), rat_int(1)]));
        assert_eq!(y.mul(&y), k.gen());
    }

    #[test]
    fn sqrt_canonical_branch_is_lex_positive() {
        let k = eisenstein();
        let x = k.from_rat(rat_int(-3));
        let y = sqrt_in_field(&x).unwrap();
        assert!(y.lex_sign() > 0);
    }

    #[test]
    fn sqrt_failure_in_quadratic_field() {
        let k = eisenstein();
        // 2 is not a square in Q(zeta_3).
        assert!(matches!(
            sqrt_in_field(&k.from_rat(rat_int(2))).unwrap_err(),
            FieldError::RequiresFieldExtension(_)
        ));
    }
}
