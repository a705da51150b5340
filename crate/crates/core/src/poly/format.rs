//! Canonical text and JSON forms of polynomials.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use super::{Monomial, PolyRing, Polynomial};
use crate::error::{Error, Result};
use crate::rings::Domain;

fn monomial_text(ring: &PolyRing, m: &Monomial) -> String {
    m.0.iter()
        .zip(ring.vars())
        .filter(|(&e, _)| e > 0)
        .map(|(&e, v)| if e == 1 { v.clone() } else { format!("{v}^{e}") })
        .collect::<Vec<_>>()
        .join("*")
}

/// Terms in descending lex order joined by ` + ` / ` - `; `0` for zero.
pub(super) fn format_polynomial(f: &Polynomial) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in f.terms.iter().rev().enumerate() {
        let negative = c.is_negative();
        let mag = c.abs();
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        if m.is_one() {
            out.push_str(&mag.to_string());
        } else {
            if !mag.is_one() {
                out.push_str(&mag.to_string());
                out.push('*');
            }
            out.push_str(&monomial_text(&f.ring, m));
        }
    }
    out
}

/// One term of [`PolyJson`]. Coefficients are exact decimal strings (`"3"`, `"-1/2"`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exps: Vec<u32>,
    pub coeff: String,
}

/// Canonical JSON form: `{"vars": [...], "domain": "...", "terms": [...]}`,
/// terms sorted descending in lex order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub domain: String,
    pub terms: Vec<TermJson>,
}

fn parse_rational(s: &str) -> Option<BigRational> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.parse::<BigInt>().ok()?, d.parse::<BigInt>().ok()?),
        None => (s.parse::<BigInt>().ok()?, BigInt::one()),
    };
    if den.is_positive() {
        Some(BigRational::new(num, den))
    } else {
        None
    }
}

impl PolyJson {
    pub fn to_polynomial(&self) -> Result<Polynomial> {
        let domain = Domain::from_label(&self.domain)?;
        let ring = PolyRing::new(domain, &self.vars)?;
        self.to_polynomial_in(&ring)
    }

    /// Decodes into an existing ring, which must match `vars` and `domain`.
    pub fn to_polynomial_in(&self, ring: &PolyRing) -> Result<Polynomial> {
        if ring.vars() != self.vars.as_slice() || ring.domain().label() != self.domain {
            return Err(Error::RingMismatch);
        }
        let domain = ring.domain();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (pos, t) in self.terms.iter().enumerate() {
            let bad = || Error::BadCoefficient { pos, message: format!("`{}` in {domain}", t.coeff) };
            let q = parse_rational(&t.coeff).ok_or_else(bad)?;
            let c = domain.fraction(q.numer().clone(), q.denom().clone()).map_err(|_| bad())?;
            terms.push((t.exps.clone(), c));
        }
        ring.from_terms(terms)
    }
}

impl Polynomial {
    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            vars: self.ring.vars().to_vec(),
            domain: self.domain().label(),
            terms: self
                .terms
                .iter()
                .rev()
                .map(|(m, c)| TermJson { exps: m.0.clone(), coeff: c.to_string() })
                .collect(),
        }
    }
}
