//! Division and gcd for univariate polynomials over a field.

use super::{Degree, Monomial, MonomialOrder, Polynomial};
use crate::error::{Error, Result};

fn require_field_univariate(f: &Polynomial) -> Result<()> {
    if f.ring().nvars() != 1 {
        return Err(Error::NotUnivariate);
    }
    if !f.domain().is_field() {
        return Err(Error::UnsupportedDomain(f.domain().to_string(), "univariate division needs a field".into()));
    }
    Ok(())
}

fn degree(f: &Polynomial) -> Degree {
    f.degree_univariate().expect("checked univariate")
}

/// `(q, r)` with `f = q*g + r` and `deg r < deg g`.
pub fn div_rem(f: &Polynomial, g: &Polynomial) -> Result<(Polynomial, Polynomial)> {
    require_field_univariate(f)?;
    if f.ring() != g.ring() {
        return Err(Error::RingMismatch);
    }
    let (lead_m, lead_c) = g.leading_term(MonomialOrder::Lex).ok_or(Error::DivisionByZero)?;
    let lead_m = lead_m.clone();
    let inv = lead_c.inverse()?;
    let ring = f.ring();
    let mut q = ring.zero();
    let mut r = f.clone();
    while degree(&r) >= degree(g) {
        let (rm, rc) = r.leading_term(MonomialOrder::Lex).expect("nonzero remainder");
        let shift = rm.divide(&lead_m).expect("degree checked");
        let c = rc.checked_mul(&inv)?;
        let t = ring.term(shift, &c);
        r = r.checked_sub(&t.checked_mul(g)?)?;
        q = q.checked_add(&t)?;
    }
    Ok((q, r))
}

/// `Some(f / g)` when `g` divides `f` exactly.
pub fn exact_div(f: &Polynomial, g: &Polynomial) -> Result<Option<Polynomial>> {
    let (q, r) = div_rem(f, g)?;
    Ok(r.is_zero().then_some(q))
}

pub fn divides(g: &Polynomial, f: &Polynomial) -> Result<bool> {
    if g.is_zero() {
        return Ok(f.is_zero());
    }
    Ok(div_rem(f, g)?.1.is_zero())
}

/// Monic gcd by the Euclidean algorithm; `gcd(0, 0) = 0`.
pub fn gcd(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    require_field_univariate(f)?;
    if f.ring() != g.ring() {
        return Err(Error::RingMismatch);
    }
    let (mut a, mut b) = (f.clone(), g.clone());
    while !b.is_zero() {
        let r = div_rem(&a, &b)?.1;
        a = b;
        b = r;
    }
    if a.is_zero() {
        Ok(a)
    } else {
        a.monic()
    }
}

/// Monic gcd of a list; the empty list gives `0`.
pub fn gcd_all<'a>(polys: impl IntoIterator<Item = &'a Polynomial>) -> Result<Option<Polynomial>> {
    let mut acc: Option<Polynomial> = None;
    for p in polys {
        acc = Some(match acc {
            None => gcd(p, &p.ring().zero())?,
            Some(a) => gcd(&a, p)?,
        });
    }
    Ok(acc)
}

/// `x^e` in the univariate ring of `like`.
pub fn x_pow(like: &Polynomial, e: u32) -> Polynomial {
    like.ring().term(Monomial(vec![e]), &like.domain().one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::PolyRing;
    use crate::rings::Domain;

    #[test]
    fn division_identity() {
        let r = PolyRing::new(Domain::Rationals, &["x"]).unwrap();
        let f = r.parse("x^3 - 2x + 5").unwrap();
        let g = r.parse("2x - 1").unwrap();
        let (q, rem) = div_rem(&f, &g).unwrap();
        assert_eq!(&(&q * &g) + &rem, f);
        assert_eq!(rem.degree_univariate().unwrap(), Degree::Finite(0));
        assert_eq!(div_rem(&f, &r.zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn gcds() {
        let r = PolyRing::new(Domain::Rationals, &["x"]).unwrap();
        let a = r.parse("x^2 - 1").unwrap();
        let b = r.parse("x^3 - 1").unwrap();
        assert_eq!(gcd(&a, &b).unwrap(), r.parse("x - 1").unwrap());
        assert!(gcd(&r.zero(), &r.zero()).unwrap().is_zero());
        assert_eq!(gcd(&r.int(2), &r.zero()).unwrap(), r.one());
        let f5 = PolyRing::new(Domain::PrimeField(5), &["x"]).unwrap();
        let g = gcd_all([&f5.parse("2").unwrap(), &f5.parse("x").unwrap()]).unwrap().unwrap();
        assert_eq!(g, f5.one());
    }

    #[test]
    fn requires_field() {
        let z = PolyRing::new(Domain::Integers, &["x"]).unwrap();
        assert!(matches!(gcd(&z.var(0), &z.one()), Err(Error::UnsupportedDomain(..))));
    }
}
