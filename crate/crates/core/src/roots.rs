//! Exact root finding used by the semisimple decomposition.
//!
//! Two layers: roots of a polynomial over the number field `K` that lie in
//! `K`, and roots of a polynomial over the Novikov scalars that are monomials
//! `c * T^(j/N)` (the shape every graded eigenvalue takes). The monomial
//! search enumerates candidate valuations from the Newton polygon, refining
//! the exponent denominator as needed, and solves for the field part with a
//! constant ansatz.
//!
//! Roots in `K` are found completely for linear and quadratic polynomials
//! (the quadratic case reduces to an exact square root in `K`) and through
//! rational-root deflation otherwise. A polynomial whose roots escape this
//! procedure yields an empty result, which callers surface as a
//! split-failure carrying the polynomial.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::field::{sqrt_in_field, FieldElem};
use crate::novikov::Novikov;
use crate::poly::{Coeff, Poly};
use crate::rat::{positive_divisors, Rat};

/// All roots of `g` that lie in its coefficient field, in deterministic
/// order, without multiplicity beyond deflation.
pub fn roots_in_field(g: &Poly<FieldElem>) -> Vec<FieldElem> {
    let mut out = Vec::new();
    let mut current = g.clone();
    loop {
        let root = match find_one_root(&current) {
            None => break,
            Some(r) => r,
        };
        if !out.contains(&root) {
            out.push(root.clone());
        }
        current = deflate(&current, &root);
    }
    out
}

fn deflate(g: &Poly<FieldElem>, root: &FieldElem) -> Poly<FieldElem> {
    let linear = Poly::from_coeffs(vec![Coeff::neg(root), root.one_like()]);
    let (q, r) = g.divmod(&linear).expect("monic linear divisor");
    debug_assert!(r.is_zero());
    q
}

fn find_one_root(g: &Poly<FieldElem>) -> Option<FieldElem> {
    let deg = g.degree()?;
    if deg == 0 {
        return None;
    }
    let donor = g.leading().expect("nonzero");
    if g.ord().map_or(false, |o| o > 0) {
        return Some(donor.zero_like());
    }
    if deg == 1 {
        let a0 = g.coeff(0).expect("constant");
        let a1 = g.coeff(1).expect("leading");
        return Some(Coeff::neg(a0).mul(&a1.inv().ok()?));
    }
    if let Some(rational) = rational_poly(g) {
        if let Some(r) = first_rational_root(&rational) {
            return Some(donor.field().from_rat(r));
        }
    }
    if deg == 2 {
        let a = g.coeff(2).expect("leading").clone();
        let b = g.coeff(1).expect("middle").clone();
        let c = g.coeff(0).expect("constant").clone();
        let four = a.one_like().add(&a.one_like()).add(&a.one_like().add(&a.one_like()));
        let disc = b.mul(&b).sub(&four.mul(&a).mul(&c));
        let s = sqrt_in_field(&disc).ok()?;
        let two_a_inv = a.add(&a).inv().ok()?;
        return Some(Coeff::neg(&b).add(&s).mul(&two_a_inv));
    }
    None
}

fn rational_poly(g: &Poly<FieldElem>) -> Option<Poly<Rat>> {
    let mut coeffs = Vec::with_capacity(g.coeffs().len());
    for c in g.coeffs() {
        coeffs.push(c.as_rat()?);
    }
    Some(Poly::from_coeffs(coeffs))
}

/// First rational root by the rational root theorem, candidates enumerated in
/// a fixed order. Zero roots are assumed already deflated.
fn first_rational_root(g: &Poly<Rat>) -> Option<Rat> {
    let den_lcm = g
        .coeffs()
        .iter()
        .fold(BigInt::from(1), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = g
        .coeffs()
        .iter()
        .map(|c| (c * Rat::from_integer(den_lcm.clone())).to_integer())
        .collect();
    let p0 = ints.first()?.clone();
    let lead = ints.last()?.clone();
    if p0.is_zero() {
        return Some(Rat::zero());
    }
    let us = positive_divisors(&p0)?;
    let vs = positive_divisors(&lead)?;
    for v in &vs {
        for u in &us {
            if u.gcd(v) != BigInt::from(1) {
                continue;
            }
            for sign in [1i64, -1] {
                let cand = Rat::new(u * BigInt::from(sign), v.clone());
                if num_traits::Zero::is_zero(&g.eval(&cand)) {
                    return Some(cand);
                }
            }
        }
    }
    None
}

/// Roots of a monic polynomial over the Novikov scalars that have the
/// monomial form `c * T^(j/N)`, `c` in the coefficient field. The exponent
/// denominator is refined as dictated by the Newton polygon. Every returned
/// root is verified by exact evaluation.
pub fn monomial_roots(mu: &[Novikov]) -> Vec<Novikov> {
    let field = mu
        .iter()
        .find(|c| !c.is_zero())
        .expect("nonzero polynomial")
        .field();
    let n = mu
        .iter()
        .fold(1u64, |acc, c| acc.lcm(&c.exponent_denominator()));
    let scaled: Vec<Novikov> = mu.iter().map(|c| c.rescale_to(n)).collect();

    // Clear denominators: A_i = num_i * (D / den_i) with D the lcm.
    let mut d = Poly::constant(field.one());
    for c in &scaled {
        let g = d.gcd(c.denominator()).expect("gcd over a field");
        let (q, _) = c.denominator().divmod(&g).expect("divisor nonzero");
        d = d.mul(&q);
    }
    let cleared: Vec<Poly<FieldElem>> = scaled
        .iter()
        .map(|c| {
            let (q, r) = d.divmod(c.denominator()).expect("divisor nonzero");
            debug_assert!(r.is_zero());
            c.numerator().mul(&q)
        })
        .collect();

    let mut roots: Vec<Novikov> = Vec::new();
    if cleared[0].is_zero() {
        roots.push(Novikov::zero(&field));
    }

    let points: Vec<(i64, i64)> = cleared
        .iter()
        .enumerate()
        .filter(|(_, a)| !a.is_zero())
        .map(|(i, a)| (i as i64, a.ord().expect("nonzero") as i64))
        .collect();

    for (i1, o1, i2, o2) in lower_hull_edges(&points) {
        let w = Rat::new(BigInt::from(o1 - o2), BigInt::from(i2 - i1));
        let q: u64 = w
            .denom()
            .try_into()
            .expect("denominator fits in u64 at desk scale");
        let k: i64 = w.numer().try_into().expect("slope numerator fits in i64");
        let refined_n = n * q;
        // Collect P_j(c) per power of the refined variable from
        // P(c * s^k) = sum_i A_i(s^q) c^i s^(k i).
        let mut per_power: BTreeMap<i64, Vec<(usize, FieldElem)>> = BTreeMap::new();
        for (i, a) in cleared.iter().enumerate() {
            let stretched = a.stretch(q as usize);
            for (m, coeff) in stretched.coeffs().iter().enumerate() {
                if coeff.is_zero() {
                    continue;
                }
                let power = m as i64 + k * i as i64;
                per_power.entry(power).or_default().push((i, coeff.clone()));
            }
        }
        let mut constraint: Option<Poly<FieldElem>> = None;
        for terms in per_power.values() {
            let deg = terms.iter().map(|(i, _)| *i).max().expect("nonempty");
            let mut coeffs = vec![field.zero(); deg + 1];
            for (i, c) in terms {
                coeffs[*i] = coeffs[*i].add(c);
            }
            let pj = Poly::from_coeffs(coeffs);
            constraint = Some(match constraint {
                None => pj,
                Some(g) => g.gcd(&pj).expect("gcd over a field"),
            });
        }
        let constraint = match constraint {
            None => continue,
            Some(g) => g,
        };
        for c in roots_in_field(&constraint) {
            if Coeff::is_zero(&c) {
                continue;
            }
            let cand = Novikov::monomial(c, k, refined_n);
            if roots.contains(&cand) {
                continue;
            }
            if eval_novikov(mu, &cand).is_zero() {
                roots.push(cand);
            }
        }
    }
    roots
}

fn eval_novikov(mu: &[Novikov], x: &Novikov) -> Novikov {
    let field = x.field();
    let mut acc = Novikov::zero(&field);
    for c in mu.iter().rev() {
        acc = acc.mul(x).add(c);
    }
    acc
}

/// Edges of the lower convex hull of `points` (sorted by x, distinct x), as
/// `(x1, y1, x2, y2)` tuples.
fn lower_hull_edges(points: &[(i64, i64)]) -> Vec<(i64, i64, i64, i64)> {
    if points.len() < 2 {
        return Vec::new();
    }
    let mut hull: Vec<(i64, i64)> = Vec::new();
    for &p in points {
        while hull.len() >= 2 {
            let a = hull[hull.len() - 2];
            let b = hull[hull.len() - 1];
            // Keep b only if it lies strictly below the chord a -> p.
            let cross = (b.0 - a.0) * (p.1 - a.1) - (p.0 - a.0) * (b.1 - a.1);
            if cross <= 0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    hull.windows(2).map(|w| (w[0].0, w[0].1, w[1].0, w[1].1)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::NumberField;
    use crate::rat::rat_int;

    fn q() -> NumberField {
        NumberField::rationals()
    }

    fn eisenstein() -> NumberField {
        NumberField::new(Poly::from_coeffs(vec![rat_int(1), rat_int(1), rat_int(1)])).unwrap()
    }

    fn kpoly(field: &NumberField, coeffs: &[i64]) -> Poly<FieldElem> {
        Poly::from_coeffs(coeffs.iter().map(|&c| field.from_rat(rat_int(c))).collect())
    }

    #[test]
    fn quadratic_roots_over_rationals() {
        let g = kpoly(&q(), &[-1, 0, 1]);
        let roots = roots_in_field(&g);
        assert_eq!(roots, vec![q().one(), q().from_rat(rat_int(-1))]);
    }

    #[test]
    fn cyclotomic_quadratic_roots() {
        // c^2 + c + 1 has no rational roots but splits over Q(zeta_3).
        assert!(roots_in_field(&kpoly(&q(), &[1, 1, 1])).is_empty());
        let k = eisenstein();
        let roots = roots_in_field(&kpoly(&k, &[1, 1, 1]));
        assert_eq!(
            roots,
            vec![
                k.gen(),
                k.elem_from_coords(vec![rat_int(-1), rat_int(-1)])
            ]
        );
    }

    #[test]
    fn cubic_splits_over_eisenstein() {
        let k = eisenstein();
        let roots = roots_in_field(&kpoly(&k, &[-1, 0, 0, 1]));
        assert_eq!(roots.len(), 3);
        assert_eq!(roots[0], k.one());
        for r in &roots {
            assert_eq!(r.mul(r).mul(r), k.one());
        }
    }

    #[test]
    fn monomial_roots_with_refinement() {
        // z^2 - T needs T^(1/2).
        let mu = vec![
            Novikov::t_power(&q(), 1, 1).neg(),
            Novikov::zero(&q()),
            Novikov::one(&q()),
        ];
        let roots = monomial_roots(&mu);
        let half = Novikov::t_power(&q(), 1, 2);
        assert_eq!(roots, vec![half.clone(), half.neg()]);
    }

    #[test]
    fn monomial_roots_of_idempotent_polynomial() {
        // z^2 - z has roots 0 and 1.
        let mu = vec![
            Novikov::zero(&q()),
            Novikov::from_int(&q(), -1),
            Novikov::one(&q()),
        ];
        let roots = monomial_roots(&mu);
        assert_eq!(roots, vec![Novikov::zero(&q()), Novikov::one(&q())]);
    }

    #[test]
    fn cube_root_of_t_requires_eisenstein_for_full_split() {
        let mu_q = vec![
            Novikov::t_power(&q(), 1, 1).neg(),
            Novikov::zero(&q()),
            Novikov::zero(&q()),
            Novikov::one(&q()),
        ];
        let roots = monomial_roots(&mu_q);
        assert_eq!(roots, vec![Novikov::t_power(&q(), 1, 3)]);

        let k = eisenstein();
        let mu_k = vec![
            Novikov::t_power(&k, 1, 1).neg(),
            Novikov::zero(&k),
            Novikov::zero(&k),
            Novikov::one(&k),
        ];
        let roots = monomial_roots(&mu_k);
        assert_eq!(roots.len(), 3);
        for r in &roots {
            assert_eq!(r.pow(3), Novikov::t_power(&k, 1, 1));
        }
    }
}
