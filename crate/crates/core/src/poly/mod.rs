//! Sparse multivariate polynomials over a [`Domain`].
//!
//! A [`Polynomial`] is a finite map from exponent vectors to nonzero
//! coefficients. Zero coefficients are never stored, so the zero polynomial
//! is the empty map and structural equality is polynomial equality.

mod format;
mod parse;
pub mod univariate;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rings::{Domain, RingElement};

pub use format::{PolyJson, TermJson};
pub use parse::identifiers;

#[derive(Debug, PartialEq, Eq, Hash)]
struct RingInner {
    domain: Domain,
    vars: Vec<String>,
}

/// `domain[vars...]`. Cheap to clone; the variable order fixes exponent positions.
#[derive(Debug, Clone)]
pub struct PolyRing(Arc<RingInner>);

impl PartialEq for PolyRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for PolyRing {}

fn valid_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic()) && chars.all(|c| c.is_ascii_alphanumeric())
}

impl PolyRing {
    pub fn new<S: AsRef<str>>(domain: Domain, vars: &[S]) -> Result<Self> {
        if vars.is_empty() {
            return Err(Error::InvalidVariable(String::new()));
        }
        let mut names: Vec<String> = Vec::with_capacity(vars.len());
        for v in vars {
            let v = v.as_ref();
            if !valid_identifier(v) || names.iter().any(|n| n == v) {
                return Err(Error::InvalidVariable(v.to_string()));
            }
            names.push(v.to_string());
        }
        Ok(PolyRing(Arc::new(RingInner { domain, vars: names })))
    }

    pub fn domain(&self) -> Domain {
        self.0.domain
    }

    pub fn vars(&self) -> &[String] {
        &self.0.vars
    }

    pub fn nvars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.vars.iter().position(|v| v == name)
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial { ring: self.clone(), terms: BTreeMap::new() }
    }

    pub fn one(&self) -> Polynomial {
        self.constant(&self.domain().one())
    }

    pub fn constant(&self, c: &RingElement) -> Polynomial {
        self.term(Monomial::one(self.nvars()), c)
    }

    pub fn int(&self, c: i64) -> Polynomial {
        self.constant(&self.domain().int(c))
    }

    /// The `i`-th variable.
    pub fn var(&self, i: usize) -> Polynomial {
        let mut exps = vec![0; self.nvars()];
        exps[i] = 1;
        self.term(Monomial(exps), &self.domain().one())
    }

    pub fn variable(&self, name: &str) -> Result<Polynomial> {
        self.var_index(name)
            .map(|i| self.var(i))
            .ok_or_else(|| Error::UnknownVariable { name: name.to_string(), pos: 0 })
    }

    /// `c * X^m`. Panics if `c` lives in another domain or `m` has the wrong length.
    pub fn term(&self, m: Monomial, c: &RingElement) -> Polynomial {
        assert_eq!(c.domain(), self.domain(), "coefficient domain");
        assert_eq!(m.0.len(), self.nvars(), "monomial length");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c.value().clone());
        }
        Polynomial { ring: self.clone(), terms }
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, summing repeats.
    pub fn from_terms<I>(&self, terms: I) -> Result<Polynomial>
    where
        I: IntoIterator<Item = (Vec<u32>, RingElement)>,
    {
        let mut out = self.zero();
        for (exps, c) in terms {
            if exps.len() != self.nvars() {
                return Err(Error::RingMismatch);
            }
            if c.domain() != self.domain() {
                return Err(Error::DomainMismatch(c.domain().to_string(), self.domain().to_string()));
            }
            out.add_term(Monomial(exps), c.value());
        }
        Ok(out)
    }

    pub(crate) fn wrap_terms(&self, terms: BTreeMap<Monomial, BigRational>) -> Polynomial {
        debug_assert!(terms.values().all(|c| !c.is_zero()));
        Polynomial { ring: self.clone(), terms }
    }

    /// Parses `text` with the polynomial expression grammar.
    pub fn parse(&self, text: &str) -> Result<Polynomial> {
        parse::parse(self, text)
    }

    /// All monomials with each exponent `< bound`, ascending in lex order.
    pub fn reduced_monomials(&self, bound: u32) -> Vec<Monomial> {
        let n = self.nvars();
        let mut out = vec![Monomial(vec![0; n])];
        for i in (0..n).rev() {
            out = out
                .into_iter()
                .flat_map(|m| {
                    (0..bound).map(move |e| {
                        let mut v = m.0.clone();
                        v[i] = e;
                        Monomial(v)
                    })
                })
                .collect();
        }
        out.sort();
        out
    }

    /// All monomials of total degree `<= degree`, ascending in graded-lex order.
    pub fn monomials_up_to(&self, degree: u32) -> Vec<Monomial> {
        fn fill(prefix: &mut Vec<u32>, left: usize, budget: u32, out: &mut Vec<Monomial>) {
            if left == 0 {
                out.push(Monomial(prefix.clone()));
                return;
            }
            for e in 0..=budget {
                prefix.push(e);
                fill(prefix, left - 1, budget - e, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        fill(&mut Vec::new(), self.nvars(), degree, &mut out);
        out.sort_by(|a, b| MonomialOrder::GradedLex.cmp(a, b));
        out
    }
}

impl fmt::Display for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.domain(), self.vars().join(","))
    }
}

/// Exponent vector `X_1^a_1 ... X_n^a_n`. The derived order is lexicographic
/// with `X_1 > X_2 > ...`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or_else(|| Error::TooLarge("exponent overflow".into())))
            .collect::<Result<Vec<_>>>()
            .map(Monomial)
    }

    /// `self / other` when `other` divides `self`.
    pub fn divide(&self, other: &Monomial) -> Option<Monomial> {
        self.0.iter().zip(&other.0).map(|(a, b)| a.checked_sub(*b)).collect::<Option<Vec<_>>>().map(Monomial)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MonomialOrder {
    /// Lexicographic in declared variable order.
    #[default]
    Lex,
    /// Total degree first, ties broken lexicographically.
    GradedLex,
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::GradedLex => a.total_degree().cmp(&b.total_degree()).then_with(|| a.cmp(b)),
        }
    }
}

/// Degree of a univariate polynomial; the zero polynomial has degree `-∞`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(u32),
}

impl Degree {
    pub fn finite(self) -> Option<u32> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// A polynomial in a [`PolyRing`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: PolyRing,
    terms: BTreeMap<Monomial, BigRational>,
}

impl Polynomial {
    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn domain(&self) -> Domain {
        self.ring.domain()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, RingElement)> + '_ {
        let d = self.domain();
        self.terms.iter().map(move |(m, c)| (m, RingElement::from_raw(d, c.clone())))
    }

    pub(crate) fn raw_terms(&self) -> &BTreeMap<Monomial, BigRational> {
        &self.terms
    }

    pub fn coefficient(&self, m: &Monomial) -> RingElement {
        let d = self.domain();
        self.terms.get(m).map_or_else(|| d.zero(), |c| RingElement::from_raw(d, c.clone()))
    }

    fn add_term(&mut self, m: Monomial, c: &BigRational) {
        if c.is_zero() {
            return;
        }
        let d = self.domain();
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = d.add_raw(existing, c);
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    fn same_ring(&self, other: &Polynomial) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_ring(other)?;
        let (mut acc, small) =
            if self.terms.len() >= other.terms.len() { (self.clone(), other) } else { (other.clone(), self) };
        for (m, c) in &small.terms {
            acc.add_term(m.clone(), c);
        }
        Ok(acc)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.checked_add(&other.negated())
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_ring(other)?;
        let d = self.domain();
        let mut acc = self.ring.zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                acc.add_term(ma.checked_mul(mb)?, &d.mul_raw(ca, cb));
            }
        }
        Ok(acc)
    }

    pub fn negated(&self) -> Polynomial {
        let d = self.domain();
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), d.neg_raw(c))).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &RingElement) -> Result<Polynomial> {
        let d = self.domain();
        if c.domain() != d {
            return Err(Error::DomainMismatch(c.domain().to_string(), d.to_string()));
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, a)| (m.clone(), d.mul_raw(a, c.value())))
            .filter(|(_, a)| !a.is_zero())
            .collect();
        Ok(Polynomial { ring: self.ring.clone(), terms })
    }

    /// Multiplies by the monomial `m`.
    pub fn shift(&self, m: &Monomial) -> Result<Polynomial> {
        let terms = self
            .terms
            .iter()
            .map(|(t, c)| Ok((t.checked_mul(m)?, c.clone())))
            .collect::<Result<BTreeMap<_, _>>>()?;
        Ok(Polynomial { ring: self.ring.clone(), terms })
    }

    pub fn pow(&self, mut exp: u32) -> Result<Polynomial> {
        let mut base = self.clone();
        let mut acc = self.ring.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.checked_mul(&base)?;
            }
            exp >>= 1;
            if exp > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Largest total degree of a term; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    /// Largest exponent of variable `i` across all terms.
    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0)
    }

    pub fn degree_univariate(&self) -> Result<Degree> {
        if self.ring.nvars() != 1 {
            return Err(Error::NotUnivariate);
        }
        Ok(self.terms.keys().next_back().map_or(Degree::NegInfinity, |m| Degree::Finite(m.0[0])))
    }

    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Monomial, RingElement)> {
        let d = self.domain();
        let (m, c) = match order {
            MonomialOrder::Lex => self.terms.iter().next_back()?,
            _ => self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))?,
        };
        Some((m, RingElement::from_raw(d, c.clone())))
    }

    pub fn leading_coefficient(&self, order: MonomialOrder) -> Result<RingElement> {
        self.leading_term(order).map(|(_, c)| c).ok_or(Error::ZeroPolynomial)
    }

    /// Divides by the leading coefficient (lex). Requires a field domain.
    pub fn monic(&self) -> Result<Polynomial> {
        let lc = self.leading_coefficient(MonomialOrder::Lex)?;
        self.scale(&lc.inverse()?)
    }

    /// Exact value at `point`. Over `Z`, rational coordinates are allowed and
    /// the result lives in `Q`.
    pub fn evaluate(&self, point: &[RingElement]) -> Result<RingElement> {
        if point.len() != self.ring.nvars() {
            return Err(Error::RingMismatch);
        }
        let d = self.domain();
        let target = if d == Domain::Integers && point.iter().any(|x| x.domain() == Domain::Rationals) {
            Domain::Rationals
        } else {
            d
        };
        for x in point {
            if x.domain() != target && !(target == Domain::Rationals && x.domain() == Domain::Integers) {
                return Err(Error::DomainMismatch(x.domain().to_string(), d.to_string()));
            }
        }
        let coords: Vec<RingElement> =
            point.iter().map(|x| RingElement::from_raw(target, x.value().clone())).collect();
        let mut acc = target.zero();
        for (m, c) in &self.terms {
            let mut t = RingElement::from_raw(target, c.clone());
            for (x, &e) in coords.iter().zip(&m.0) {
                if e > 0 {
                    t = t.checked_mul(&x.pow(e as u64))?;
                }
            }
            acc = acc.checked_add(&t)?;
        }
        Ok(acc)
    }

    /// Evaluation at a residue vector over `Z/n` or `F_p`, in machine integers.
    pub fn eval_residues(&self, point: &[u64]) -> Result<u64> {
        let n = self
            .domain()
            .modulus()
            .ok_or_else(|| Error::UnsupportedDomain(self.domain().to_string(), "residue evaluation".into()))?;
        if point.len() != self.ring.nvars() {
            return Err(Error::RingMismatch);
        }
        let n128 = n as u128;
        let mut acc: u128 = 0;
        for (m, c) in &self.terms {
            let mut t = c.numer().to_u64().expect("residue fits in u64") as u128;
            for (&x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t = t * pow_mod(x as u128 % n128, e, n128) % n128;
                }
            }
            acc = (acc + t) % n128;
        }
        Ok(acc as u64)
    }

    /// Exact evaluation over `Z` or `Q` at rational coordinates.
    pub fn eval_rational(&self, point: &[BigRational]) -> Result<BigRational> {
        let d = self.domain();
        if !matches!(d, Domain::Integers | Domain::Rationals) {
            return Err(Error::UnsupportedDomain(d.to_string(), "rational evaluation".into()));
        }
        if point.len() != self.ring.nvars() {
            return Err(Error::RingMismatch);
        }
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Formal partial derivative in the named variable.
    pub fn derivative(&self, var: &str) -> Result<Polynomial> {
        let i = self
            .ring
            .var_index(var)
            .ok_or_else(|| Error::UnknownVariable { name: var.to_string(), pos: 0 })?;
        Ok(self.derivative_at(i))
    }

    pub fn derivative_at(&self, i: usize) -> Polynomial {
        let d = self.domain();
        let mut out = self.ring.zero();
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[i] -= 1;
            let factor = d.int(BigInt::from(e));
            out.add_term(Monomial(exps), &d.mul_raw(c, factor.value()));
        }
        out
    }

    /// Replaces every exponent `e >= p` using `x^p = x`, giving the reduced
    /// representative of the same function on `F_p^n`.
    pub fn reduce_exponents(&self, p: u32) -> Polynomial {
        let mut out = self.ring.zero();
        for (m, c) in &self.terms {
            let exps = m.0.iter().map(|&e| if e >= p { (e - 1) % (p - 1) + 1 } else { e }).collect();
            out.add_term(Monomial(exps), c);
        }
        out
    }

    /// The same polynomial in another ring with identical domain and variable count.
    pub fn with_ring(&self, ring: &PolyRing) -> Result<Polynomial> {
        if ring.domain() != self.domain() || ring.nvars() != self.ring.nvars() {
            return Err(Error::RingMismatch);
        }
        Ok(Polynomial { ring: ring.clone(), terms: self.terms.clone() })
    }
}

fn pow_mod(mut base: u128, mut exp: u32, n: u128) -> u128 {
    let mut acc = 1 % n;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % n;
        }
        base = base * base % n;
        exp >>= 1;
    }
    acc
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format::format_polynomial(self))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        /// Panics when the operands live in different rings; use the
        /// `checked_*` method to get an error instead.
        impl $tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).expect("polynomial ring mismatch")
            }
        }

        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.negated()
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.negated()
    }
}
