//! Exact scalars of the Novikov field, modeled as the rational-function field
//! `K(s)` with `s = T^(1/N)`.
//!
//! A scalar is a reduced fraction of polynomials in `s` over a number field
//! `K`, together with the exponent denominator `N`. Binary operations first
//! rescale both operands to the least common refinement of their `N` values;
//! results are re-canonicalized, which also compresses `N` back to the
//! smallest denominator that still expresses every exponent. Canonical form:
//! the denominator is monic, the fraction is reduced, zero is `0/1` at
//! `N = 1`. Equality is therefore structural.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::field::{sqrt_in_field, FieldElem, FieldError, NumberField};
use crate::poly::{Coeff, Poly};
use crate::rat::{rat_int, render_rat, Rat};

/// The valuation of a Novikov scalar: the least `T`-exponent, or plus
/// infinity for zero.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Valuation {
    Finite(Rat),
    PlusInfinity,
}

impl Valuation {
    pub fn finite(&self) -> Option<&Rat> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::PlusInfinity => None,
        }
    }

    pub fn add(&self, other: &Valuation) -> Valuation {
        match (self, other) {
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a + b),
            _ => Valuation::PlusInfinity,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{}", render_rat(v)),
            Valuation::PlusInfinity => write!(f, "+inf"),
        }
    }
}

/// An element of `K(T^(1/N))`.
#[derive(Clone, PartialEq, Debug)]
pub struct Novikov {
    n: u64,
    num: Poly<FieldElem>,
    den: Poly<FieldElem>,
}

impl Novikov {
    /// Canonicalizing constructor. Panics on a zero denominator; inversion of
    /// nonzero field elements is expected to succeed (a reducible modulus
    /// panics with a message naming the offending factor).
    pub fn make(n: u64, num: Poly<FieldElem>, den: Poly<FieldElem>) -> Self {
        assert!(n >= 1, "exponent denominator must be positive");
        assert!(!den.is_zero(), "denominator must be nonzero");
        let field = den.leading().expect("nonzero den").field().clone();
        if num.is_zero() {
            return Novikov {
                n: 1,
                num: Poly::zero(),
                den: Poly::constant(field.one()),
            };
        }
        let g = num.gcd(&den).unwrap_or_else(irreducibility_violated);
        let (num, den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            let (qn, rn) = num.divmod(&g).unwrap_or_else(irreducibility_violated);
            let (qd, rd) = den.divmod(&g).unwrap_or_else(irreducibility_violated);
            debug_assert!(rn.is_zero() && rd.is_zero());
            (qn, qd)
        };
        let lead_inv = den
            .leading()
            .expect("nonzero den")
            .inv()
            .unwrap_or_else(irreducibility_violated);
        let num = num.mul_scalar(&lead_inv);
        let den = den.mul_scalar(&lead_inv);

        // Compress N to the coarsest grid that still carries every exponent.
        let mut stride: u64 = 0;
        for poly in [&num, &den] {
            for (i, c) in poly.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    stride = stride.gcd(&(i as u64));
                }
            }
        }
        let g = stride.gcd(&n);
        if g > 1 {
            Novikov {
                n: n / g,
                num: num.compress(g as usize),
                den: den.compress(g as usize),
            }
        } else {
            Novikov { n, num, den }
        }
    }

    pub fn zero(field: &NumberField) -> Self {
        Novikov {
            n: 1,
            num: Poly::zero(),
            den: Poly::constant(field.one()),
        }
    }

    pub fn one(field: &NumberField) -> Self {
        Novikov::from_field_elem(field.one())
    }

    pub fn from_field_elem(c: FieldElem) -> Self {
        let field = c.field().clone();
        Novikov::make(1, Poly::constant(c), Poly::constant(field.one()))
    }

    pub fn from_rat(field: &NumberField, c: Rat) -> Self {
        Novikov::from_field_elem(field.from_rat(c))
    }

    pub fn from_int(field: &NumberField, c: i64) -> Self {
        Novikov::from_rat(field, rat_int(c))
    }

    /// `c * T^(p/q)`.
    pub fn monomial(c: FieldElem, p: i64, q: u64) -> Self {
        assert!(q >= 1);
        let field = c.field().clone();
        if p >= 0 {
            Novikov::make(
                q,
                Poly::monomial(c, p as usize),
                Poly::constant(field.one()),
            )
        } else {
            Novikov::make(
                q,
                Poly::constant(c),
                Poly::monomial(field.one(), (-p) as usize),
            )
        }
    }

    /// `T^(p/q)`.
    pub fn t_power(field: &NumberField, p: i64, q: u64) -> Self {
        Novikov::monomial(field.one(), p, q)
    }

    pub fn field(&self) -> NumberField {
        self.den.leading().expect("nonzero den").field().clone()
    }

    pub fn exponent_denominator(&self) -> u64 {
        self.n
    }

    pub fn numerator(&self) -> &Poly<FieldElem> {
        &self.num
    }

    pub fn denominator(&self) -> &Poly<FieldElem> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.degree() == Some(0)
            && self.num.degree() == Some(0)
            && self.num.coeff(0).map_or(false, |c| *c == c.one_like())
    }

    /// Rescales to a refined exponent denominator; `to_n` must be a multiple
    /// of the current one.
    pub fn rescale_to(&self, to_n: u64) -> Self {
        assert!(to_n % self.n == 0, "refinement must be a multiple");
        let k = (to_n / self.n) as usize;
        if k == 1 {
            return self.clone();
        }
        Novikov {
            n: to_n,
            num: self.num.stretch(k),
            den: self.den.stretch(k),
        }
    }

    fn unify(&self, other: &Self) -> (Self, Self) {
        let n = self.n.lcm(&other.n);
        (self.rescale_to(n), other.rescale_to(n))
    }

    pub fn add(&self, other: &Self) -> Self {
        let (a, b) = self.unify(other);
        Novikov::make(
            a.n,
            a.num.mul(&b.den).add(&b.num.mul(&a.den)),
            a.den.mul(&b.den),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Novikov {
            n: self.n,
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = self.unify(other);
        Novikov::make(a.n, a.num.mul(&b.num), a.den.mul(&b.den))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, FieldError> {
        if other.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let (a, b) = self.unify(other);
        Ok(Novikov::make(a.n, a.num.mul(&b.den), a.den.mul(&b.num)))
    }

    pub fn checked_inv(&self) -> Result<Self, FieldError> {
        Novikov::one(&self.field()).checked_div(self)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Novikov::one(&self.field());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// The valuation `(ord_s num - ord_s den) / N`, plus infinity for zero.
    pub fn valuation(&self) -> Valuation {
        match self.num.ord() {
            None => Valuation::PlusInfinity,
            Some(a) => {
                let b = self.den.ord().expect("nonzero den");
                let diff = a as i64 - b as i64;
                Valuation::Finite(Rat::new(diff.into(), (self.n as i64).into()))
            }
        }
    }

    /// Square root of a monomial scalar `u * T^(j/N)`.
    ///
    /// Odd `j` doubles the exponent denominator. The root of the field part
    /// is the canonical (lexicographically positive) branch, so the result is
    /// deterministic. Non-monomial inputs report `NotMonomial`; a field part
    /// without a square root in `K` reports `RequiresFieldExtension`.
    pub fn sqrt(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Ok(self.clone());
        }
        if self.den.degree() != Some(0) {
            return Err(FieldError::NotMonomial);
        }
        let nonzero: Vec<usize> = self
            .num
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| i)
            .collect();
        if nonzero.len() != 1 {
            return Err(FieldError::NotMonomial);
        }
        let j = nonzero[0];
        let u = self.num.coeff(j).expect("nonzero coeff").clone();
        let root = sqrt_in_field(&u)?;
        if j % 2 == 0 {
            Ok(Novikov::make(
                self.n,
                Poly::monomial(root, j / 2),
                self.den.clone(),
            ))
        } else {
            Ok(Novikov::make(
                self.n * 2,
                Poly::monomial(root, j),
                self.den.clone(),
            ))
        }
    }

    /// The scalar as a finite list of Laurent monomials `(c, exponent)`, when
    /// the denominator is a power of `s`; exponents ascend.
    pub fn laurent_monomials(&self) -> Option<Vec<(FieldElem, Rat)>> {
        if self.is_zero() {
            return Some(Vec::new());
        }
        let k = self.den.ord().expect("nonzero den");
        if self.den.degree() != Some(k) {
            return None;
        }
        let mut out = Vec::new();
        for (i, c) in self.num.coeffs().iter().enumerate() {
            if !c.is_zero() {
                let e = Rat::new((i as i64 - k as i64).into(), (self.n as i64).into());
                out.push((c.clone(), e));
            }
        }
        Some(out)
    }

    /// The coefficient of `T^0` in the Laurent expansion around `T = 0`.
    pub fn coeff_at_exponent_zero(&self) -> FieldElem {
        let field = self.field();
        let a = match self.num.ord() {
            None => return field.zero(),
            Some(a) => a,
        };
        let b = self.den.ord().expect("nonzero den");
        if a > b {
            return field.zero();
        }
        let m = b - a;
        let num0 = self.num.shift_down(a);
        let den0 = self.den.shift_down(b);
        // Power series division up to order m.
        let d0_inv = den0
            .coeff(0)
            .expect("unit constant term")
            .inv()
            .unwrap_or_else(irreducibility_violated);
        let mut series: Vec<FieldElem> = Vec::with_capacity(m + 1);
        for k in 0..=m {
            let mut acc = num0.coeff(k).cloned().unwrap_or_else(|| field.zero());
            for i in 1..=k {
                if let Some(d) = den0.coeff(i) {
                    acc = acc.sub(&d.mul(&series[k - i]));
                }
            }
            series.push(acc.mul(&d0_inv));
        }
        series[m].clone()
    }
}

fn irreducibility_violated<T>(err: FieldError) -> T {
    panic!("number field modulus is not irreducible: {err}");
}

impl fmt::Display for Novikov {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render_scalar(self))
    }
}

fn render_exponent(e: &Rat) -> String {
    if e.is_one() {
        "T".to_string()
    } else {
        format!("T^{{{}}}", render_rat(e))
    }
}

fn render_term(c: &FieldElem, e: &Rat) -> (bool, String) {
    match c.as_rat() {
        Some(r) => {
            let neg = r.is_negative();
            let mag = r.abs();
            let body = if Zero::is_zero(e) {
                render_rat(&mag)
            } else if mag.is_one() {
                render_exponent(e)
            } else {
                format!("{}*{}", render_rat(&mag), render_exponent(e))
            };
            (neg, body)
        }
        None => {
            let body = if Zero::is_zero(e) {
                format!("({})", c)
            } else {
                format!("({})*{}", c, render_exponent(e))
            };
            (false, body)
        }
    }
}

fn render_laurent(terms: &[(FieldElem, Rat)]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (c, e)) in terms.iter().enumerate() {
        let (neg, body) = render_term(c, e);
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else if neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        out.push_str(&body);
    }
    out
}

fn render_poly_part(n: u64, p: &Poly<FieldElem>) -> String {
    let terms: Vec<(FieldElem, Rat)> = p
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (c.clone(), Rat::new((i as i64).into(), (n as i64).into())))
        .collect();
    render_laurent(&terms)
}

/// Canonical text form of a scalar, in the grammar shared by the input
/// language and the JSON reports. `parse_scalar` inverts it exactly.
pub fn render_scalar(x: &Novikov) -> String {
    match x.laurent_monomials() {
        Some(terms) => render_laurent(&terms),
        None => format!(
            "({})/({})",
            render_poly_part(x.n, &x.num),
            render_poly_part(x.n, &x.den)
        ),
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
#[error("scalar syntax error at byte {at}: {message}")]
pub struct ScalarParseError {
    pub at: usize,
    pub message: String,
}

/// Parses the scalar grammar: sums and differences of terms built from
/// rationals, the field generator `t` (with optional integer power), and
/// `T^{p/q}` monomials, combined with `*`, `/`, and parentheses.
pub fn parse_scalar(src: &str, field: &NumberField) -> Result<Novikov, ScalarParseError> {
    let mut p = ScalarParser {
        src: src.as_bytes(),
        pos: 0,
        field,
    };
    p.skip_ws();
    let value = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("trailing input"));
    }
    Ok(value)
}

struct ScalarParser<'a> {
    src: &'a [u8],
    pos: usize,
    field: &'a NumberField,
}

impl<'a> ScalarParser<'a> {
    fn err(&self, message: &str) -> ScalarParseError {
        ScalarParseError {
            at: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && (self.src[self.pos] as char).is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.src.get(self.pos).map(|&b| b as char)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn expr(&mut self) -> Result<Novikov, ScalarParseError> {
        let mut acc = self.term()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('+') => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Some('-') => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Novikov, ScalarParseError> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('*') => {
                    self.bump();
                    acc = acc.mul(&self.factor()?);
                }
                Some('/') => {
                    self.bump();
                    let rhs = self.factor()?;
                    acc = acc
                        .checked_div(&rhs)
                        .map_err(|_| self.err("division by zero"))?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Novikov, ScalarParseError> {
        self.skip_ws();
        match self.peek() {
            Some('-') => {
                self.bump();
                Ok(self.factor()?.neg())
            }
            Some('(') => {
                self.bump();
                let inner = self.expr()?;
                self.skip_ws();
                if self.peek() != Some(')') {
                    return Err(self.err("expected ')'"));
                }
                self.bump();
                Ok(inner)
            }
            Some('t') => {
                self.bump();
                let k = self.optional_caret_int()?;
                let base = Novikov::from_field_elem(self.field.gen());
                Ok(apply_int_power(&base, k).map_err(|m| self.err(&m))?)
            }
            Some('T') => {
                self.bump();
                self.skip_ws();
                if self.peek() == Some('^') {
                    self.bump();
                    let (p, q) = self.exponent()?;
                    Ok(Novikov::t_power(self.field, p, q))
                } else {
                    Ok(Novikov::t_power(self.field, 1, 1))
                }
            }
            Some(c) if c.is_ascii_digit() => {
                let r = self.rational()?;
                Ok(Novikov::from_rat(self.field, r))
            }
            _ => Err(self.err("expected a scalar factor")),
        }
    }

    fn optional_caret_int(&mut self) -> Result<i64, ScalarParseError> {
        self.skip_ws();
        if self.peek() == Some('^') {
            self.bump();
            self.skip_ws();
            self.signed_int()
        } else {
            Ok(1)
        }
    }

    fn signed_int(&mut self) -> Result<i64, ScalarParseError> {
        self.skip_ws();
        let neg = if self.peek() == Some('-') {
            self.bump();
            true
        } else {
            false
        };
        let start = self.pos;
        while self.peek().map_or(false, |c| c.is_ascii_digit()) {
            self.bump();
        }
        if self.pos == start {
            return Err(self.err("expected an integer"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("digits");
        let v: i64 = text.parse().map_err(|_| self.err("integer out of range"))?;
        Ok(if neg { -v } else { v })
    }

    /// `{p}`, `{p/q}`, or a bare integer after `^`.
    fn exponent(&mut self) -> Result<(i64, u64), ScalarParseError> {
        self.skip_ws();
        if self.peek() == Some('{') {
            self.bump();
            let p = self.signed_int()?;
            self.skip_ws();
            let q = if self.peek() == Some('/') {
                self.bump();
                let q = self.signed_int()?;
                if q <= 0 {
                    return Err(self.err("exponent denominator must be positive"));
                }
                q as u64
            } else {
                1
            };
            self.skip_ws();
            if self.peek() != Some('}') {
                return Err(self.err("expected '}'"));
            }
            self.bump();
            Ok((p, q))
        } else {
            Ok((self.signed_int()?, 1))
        }
    }

    fn rational(&mut self) -> Result<Rat, ScalarParseError> {
        let p = self.signed_int()?;
        // A '/' directly followed by a digit binds as part of the rational.
        if self.peek() == Some('/') {
            let save = self.pos;
            self.bump();
            if self.peek().map_or(false, |c| c.is_ascii_digit()) {
                let q = self.signed_int()?;
                if q == 0 {
                    return Err(self.err("zero denominator"));
                }
                return Ok(Rat::new(p.into(), q.into()));
            }
            self.pos = save;
        }
        Ok(rat_int(p))
    }
}

fn apply_int_power(base: &Novikov, k: i64) -> Result<Novikov, String> {
    if k >= 0 {
        Ok(base.pow(k as u32))
    } else {
        base.pow((-k) as u32)
            .checked_inv()
            .map_err(|_| "negative power of zero".to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;
    use proptest::prelude::*;

    fn q() -> NumberField {
        NumberField::rationals()
    }

    fn t_pow(p: i64, q_: u64) -> Novikov {
        Novikov::t_power(&q(), p, q_)
    }

    fn int(c: i64) -> Novikov {
        Novikov::from_int(&q(), c)
    }

    #[test]
    fn geometric_quotient() {
        // (1 - T^2) / (1 - T) = 1 + T, checked both by division and by
        // multiplying back.
        let one = int(1);
        let num = one.sub(&t_pow(2, 1));
        let den = one.sub(&t_pow(1, 1));
        let expected = one.add(&t_pow(1, 1));
        let quot = num.checked_div(&den).unwrap();
        assert_eq!(quot, expected);
        assert_eq!(expected.mul(&den), num);
    }

    #[test]
    fn half_exponents_multiply() {
        let half = t_pow(1, 2);
        assert_eq!(half.mul(&half), t_pow(1, 1));
        assert_eq!(half.mul(&half).exponent_denominator(), 1);
    }

    #[test]
    fn additive_identity() {
        let t = t_pow(1, 1);
        assert_eq!(t.add(&Novikov::zero(&q())), t);
    }

    #[test]
    fn valuation_examples() {
        // T^(1/2) + T has valuation 1/2.
        let x = t_pow(1, 2).add(&t_pow(1, 1));
        assert_eq!(x.valuation(), Valuation::Finite(rat(1, 2)));
        assert_eq!(int(1).valuation(), Valuation::Finite(rat(0, 1)));
        // T^(-1) (1 + T^3) has valuation -1.
        let y = t_pow(-1, 1).mul(&int(1).add(&t_pow(3, 1)));
        assert_eq!(y.valuation(), Valuation::Finite(rat(-1, 1)));
        assert_eq!(Novikov::zero(&q()).valuation(), Valuation::PlusInfinity);
    }

    #[test]
    fn sqrt_perfect_square() {
        assert_eq!(t_pow(2, 1).sqrt().unwrap(), t_pow(1, 1));
    }

    #[test]
    fn sqrt_doubles_denominator() {
        // sqrt(4T) = 2 T^(1/2).
        let x = int(4).mul(&t_pow(1, 1));
        let y = x.sqrt().unwrap();
        assert_eq!(y, int(2).mul(&t_pow(1, 2)));
        assert_eq!(y.mul(&y), x);
        assert_eq!(y.exponent_denominator(), 2);
    }

    #[test]
    fn sqrt_rejects_sums() {
        let x = t_pow(1, 1).add(&t_pow(2, 1));
        assert_eq!(x.sqrt().unwrap_err(), FieldError::NotMonomial);
    }

    #[test]
    fn series_coefficient_extraction() {
        // (1 - T^2)/(1 - T) = 1 + T has constant coefficient 1.
        let x = int(1)
            .sub(&t_pow(2, 1))
            .checked_div(&int(1).sub(&t_pow(1, 1)))
            .unwrap();
        assert_eq!(x.coeff_at_exponent_zero(), q().one());
        // T^(-1) + 2 has constant coefficient 2.
        let y = t_pow(-1, 1).add(&int(2));
        assert_eq!(y.coeff_at_exponent_zero(), q().from_rat(rat(2, 1)));
        // Strictly positive valuation: constant coefficient 0.
        assert_eq!(t_pow(1, 2).coeff_at_exponent_zero(), q().zero());
    }

    #[test]
    fn rendering_matches_expected_forms() {
        assert_eq!(render_scalar(&t_pow(1, 1)), "T");
        assert_eq!(render_scalar(&t_pow(1, 2)), "T^{1/2}");
        assert_eq!(render_scalar(&t_pow(-2, 1)), "T^{-2}");
        assert_eq!(render_scalar(&int(0)), "0");
        let x = int(1).sub(&t_pow(1, 2)).add(&int(2).mul(&t_pow(3, 1)));
        assert_eq!(render_scalar(&x), "1 - T^{1/2} + 2*T^{3}");
        let frac = int(1).checked_div(&int(1).sub(&t_pow(1, 1))).unwrap();
        assert_eq!(render_scalar(&frac), "(-1)/(-1 + T)");
    }

    #[test]
    fn parse_inverts_render() {
        let samples = [
            t_pow(1, 1),
            t_pow(-1, 2),
            int(3).mul(&t_pow(5, 3)).add(&int(1)),
            int(1).checked_div(&int(1).sub(&t_pow(1, 1))).unwrap(),
            Novikov::zero(&q()),
            Novikov::from_rat(&q(), rat(-7, 2)),
        ];
        for x in samples {
            let text = render_scalar(&x);
            let back = parse_scalar(&text, &q()).unwrap();
            assert_eq!(back, x, "round trip failed for {text}");
        }
    }

    #[test]
    fn parse_with_field_generator() {
        let k = NumberField::new(Poly::from_coeffs(vec![
            rat(1, 1),
            rat(1, 1),
            rat(1, 1),
        ]))
        .unwrap();
        let x = parse_scalar("(1 + 2*t)*T^{1/2}", &k).unwrap();
        let expected = Novikov::monomial(
            k.elem_from_coords(vec![rat(1, 1), rat(2, 1)]),
            1,
            2,
        );
        assert_eq!(x, expected);
        assert_eq!(parse_scalar(&render_scalar(&x), &k).unwrap(), x);
    }

    fn arb_scalar() -> impl Strategy<Value = Novikov> {
        proptest::collection::vec((-4i64..5, -3i64..6, 1u64..4), 0..4).prop_map(|terms| {
            let mut acc = Novikov::zero(&q());
            for (c, p, den) in terms {
                acc = acc.add(&Novikov::from_int(&q(), c).mul(&t_pow(p, den)));
            }
            acc
        })
    }

    proptest! {
        #[test]
        fn valuation_is_additive(a in arb_scalar(), b in arb_scalar()) {
            let prod = a.mul(&b);
            prop_assert_eq!(prod.valuation(), a.valuation().add(&b.valuation()));
        }

        #[test]
        fn valuation_ultrametric(a in arb_scalar(), b in arb_scalar()) {
            let sum = a.add(&b);
            let min = a.valuation().min(b.valuation());
            prop_assert!(sum.valuation() >= min);
            if a.valuation() != b.valuation() {
                prop_assert_eq!(sum.valuation(), min);
            }
        }

        #[test]
        fn division_undoes_multiplication(a in arb_scalar(), b in arb_scalar()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!(a.mul(&b).checked_div(&b).unwrap(), a.clone());
        }

        #[test]
        fn canonicalization_is_idempotent(a in arb_scalar()) {
            let again = Novikov::make(
                a.exponent_denominator(),
                a.numerator().clone(),
                a.denominator().clone(),
            );
            prop_assert_eq!(again, a);
        }

        #[test]
        fn render_parse_round_trip(a in arb_scalar()) {
            let text = render_scalar(&a);
            prop_assert_eq!(parse_scalar(&text, &q()).unwrap(), a);
        }
    }
}
