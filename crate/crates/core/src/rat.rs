//! Exact rational scalars and small helpers on top of `num-rational`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rat = num_rational::BigRational;

/// `p/q` as an exact rational.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

pub fn rat_int(p: i64) -> Rat {
    Rat::from_integer(BigInt::from(p))
}

/// Exact square root of a rational, if one exists. The returned value is the
/// non-negative root.
pub fn rat_sqrt(x: &Rat) -> Option<Rat> {
    if x.is_negative() {
        return None;
    }
    if x.is_zero() {
        return Some(Rat::zero());
    }
    let num = x.numer();
    let den = x.denom();
    let sn = num.sqrt();
    let sd = den.sqrt();
    if &(&sn * &sn) == num && &(&sd * &sd) == den {
        Some(Rat::new(sn, sd))
    } else {
        None
    }
}

/// Renders a rational in the canonical `p` / `p/q` / `-p/q` form.
pub fn render_rat(x: &Rat) -> String {
    if x.denom().is_one() {
        format!("{}", x.numer())
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// All positive divisors of `n` (which must be nonzero), in increasing order.
/// Gives up and returns `None` when the factorization would need trial
/// division past the internal bound.
pub fn positive_divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let mut rest = n.abs();
    if rest.is_zero() {
        return None;
    }
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut p = BigInt::from(2);
    let bound = BigInt::from(1_000_000u64);
    while &(&p * &p) <= &rest {
        if p > bound {
            return None;
        }
        if (&rest % &p).is_zero() {
            let mut m = 0u32;
            while (&rest % &p).is_zero() {
                rest /= &p;
                m += 1;
            }
            factors.push((p.clone(), m));
        }
        p += 1;
    }
    if !rest.is_one() {
        factors.push((rest, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (p, m) in factors {
        let mut next = Vec::with_capacity(divs.len() * (m as usize + 1));
        for d in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=m {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    divs.dedup();
    Some(divs)
}
