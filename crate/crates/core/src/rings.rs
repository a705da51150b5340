//! Exact coefficient domains: the integers, the rationals, `Z/n` and `F_p`.
//!
//! Every element carries its [`Domain`]; values are kept in canonical form
//! (residues in `[0, n)`, rationals in lowest terms with positive denominator),
//! so structural equality is ring equality.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::int_ideals::IntIdeal;

/// Which exact ring a value lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Domain {
    Integers,
    Rationals,
    /// `Z/n` for `n >= 1`. `ModRing(1)` is the one-element ring where `1 = 0`.
    ModRing(u64),
    /// `F_p`, `p` prime.
    PrimeField(u64),
}

/// Trial division; fine for the moduli this crate is meant for.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d <= n / d {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl Domain {
    pub fn mod_ring(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidModulus(0));
        }
        Ok(Domain::ModRing(n))
    }

    pub fn prime_field(p: u64) -> Result<Self> {
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Domain::PrimeField(p))
    }

    /// The modulus for `Z/n` and `F_p`, `None` for the infinite domains.
    pub fn modulus(&self) -> Option<u64> {
        match *self {
            Domain::ModRing(n) | Domain::PrimeField(n) => Some(n),
            _ => None,
        }
    }

    pub fn is_field(&self) -> bool {
        matches!(self, Domain::Rationals | Domain::PrimeField(_))
    }

    /// Short machine label, also accepted by [`Domain::from_label`]:
    /// `z`, `q`, `zn:<n>`, `fp:<p>`.
    pub fn label(&self) -> String {
        match self {
            Domain::Integers => "z".to_string(),
            Domain::Rationals => "q".to_string(),
            Domain::ModRing(n) => format!("zn:{n}"),
            Domain::PrimeField(p) => format!("fp:{p}"),
        }
    }

    pub fn from_label(label: &str) -> Result<Self> {
        let label = label.trim();
        match label {
            "z" | "Z" => return Ok(Domain::Integers),
            "q" | "Q" => return Ok(Domain::Rationals),
            _ => {}
        }
        let bad = || Error::OutOfRange(format!("unknown coefficient domain `{label}`"));
        let (kind, num) = label.split_once(':').ok_or_else(bad)?;
        let num: u64 = num.parse().map_err(|_| bad())?;
        match kind {
            "fp" => Domain::prime_field(num),
            "zn" => Domain::mod_ring(num),
            _ => Err(bad()),
        }
    }

    pub fn zero(&self) -> RingElement {
        RingElement { domain: *self, value: BigRational::zero() }
    }

    pub fn one(&self) -> RingElement {
        RingElement { domain: *self, value: self.normalize_int(&BigInt::one()) }
    }

    pub fn int(&self, n: impl Into<BigInt>) -> RingElement {
        RingElement { domain: *self, value: self.normalize_int(&n.into()) }
    }

    /// Embeds `num/den`. Over `Z` the quotient must be an integer; over `Z/n`
    /// and `F_p` the denominator must be a unit.
    pub fn fraction(&self, num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<RingElement> {
        let (num, den) = (num.into(), den.into());
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let value = self.normalize(BigRational::new(num, den))?;
        Ok(RingElement { domain: *self, value })
    }

    /// Every element of a finite domain in residue order.
    pub fn elements(&self) -> Option<Vec<RingElement>> {
        let n = self.modulus()?;
        Some((0..n).map(|r| self.int(r)).collect())
    }

    fn normalize_int(&self, v: &BigInt) -> BigRational {
        match self.modulus() {
            Some(n) => BigRational::from_integer(v.mod_floor(&BigInt::from(n))),
            None => BigRational::from_integer(v.clone()),
        }
    }

    /// Brings an arbitrary rational into this domain's canonical form.
    pub(crate) fn normalize(&self, v: BigRational) -> Result<BigRational> {
        match self {
            Domain::Rationals => Ok(v),
            Domain::Integers => {
                if v.is_integer() {
                    Ok(v)
                } else {
                    Err(Error::NoInverse(v.denom().to_string(), self.to_string()))
                }
            }
            Domain::ModRing(n) | Domain::PrimeField(n) => {
                let m = BigInt::from(*n);
                let num = v.numer().mod_floor(&m);
                if v.is_integer() {
                    return Ok(BigRational::from_integer(num));
                }
                let inv = mod_inverse(&v.denom().mod_floor(&m), &m)
                    .ok_or_else(|| Error::NoInverse(v.denom().to_string(), self.to_string()))?;
                Ok(BigRational::from_integer((num * inv).mod_floor(&m)))
            }
        }
    }

    pub(crate) fn add_raw(&self, a: &BigRational, b: &BigRational) -> BigRational {
        match self.modulus() {
            Some(n) => {
                let s = a.numer() + b.numer();
                let n = BigInt::from(n);
                BigRational::from_integer(if s >= n { s - n } else { s })
            }
            None => a + b,
        }
    }

    pub(crate) fn mul_raw(&self, a: &BigRational, b: &BigRational) -> BigRational {
        match self.modulus() {
            Some(n) => BigRational::from_integer((a.numer() * b.numer()).mod_floor(&BigInt::from(n))),
            None => a * b,
        }
    }

    pub(crate) fn neg_raw(&self, a: &BigRational) -> BigRational {
        match self.modulus() {
            Some(n) => {
                if a.is_zero() {
                    a.clone()
                } else {
                    BigRational::from_integer(BigInt::from(n) - a.numer())
                }
            }
            None => -a,
        }
    }

    pub(crate) fn inv_raw(&self, a: &BigRational) -> Result<BigRational> {
        match self {
            Domain::Rationals => {
                if a.is_zero() {
                    Err(Error::DivisionByZero)
                } else {
                    Ok(a.recip())
                }
            }
            Domain::Integers => {
                if a.is_zero() {
                    Err(Error::DivisionByZero)
                } else if a.abs().is_one() {
                    Ok(a.clone())
                } else {
                    Err(Error::NoInverse(a.to_string(), self.to_string()))
                }
            }
            Domain::ModRing(n) | Domain::PrimeField(n) => {
                // In the one-element ring 0 = 1 is its own inverse.
                if *n == 1 {
                    return Ok(a.clone());
                }
                if a.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                mod_inverse(a.numer(), &BigInt::from(*n))
                    .map(BigRational::from_integer)
                    .ok_or_else(|| Error::NoInverse(a.to_string(), self.to_string()))
            }
        }
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::Integers => write!(f, "Z"),
            Domain::Rationals => write!(f, "Q"),
            Domain::ModRing(n) => write!(f, "Z/{n}"),
            Domain::PrimeField(p) => write!(f, "F_{p}"),
        }
    }
}

/// Inverse of `a` modulo `m` by the extended Euclidean algorithm.
pub(crate) fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

/// An exact element of a [`Domain`] in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingElement {
    domain: Domain,
    value: BigRational,
}

/// The operations accepted by [`ring_op`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingOp {
    Add,
    Mul,
    Neg,
    Inv,
}

/// Applies `op`; unary operations ignore `b` apart from the domain check.
pub fn ring_op(a: &RingElement, b: &RingElement, op: RingOp) -> Result<RingElement> {
    match op {
        RingOp::Add => a.checked_add(b),
        RingOp::Mul => a.checked_mul(b),
        RingOp::Neg => {
            a.same_domain(b)?;
            Ok(a.negated())
        }
        RingOp::Inv => {
            a.same_domain(b)?;
            a.inverse()
        }
    }
}

impl RingElement {
    pub(crate) fn from_raw(domain: Domain, value: BigRational) -> Self {
        RingElement { domain, value }
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    /// The canonical value: a residue, an integer, or a reduced fraction.
    pub fn value(&self) -> &BigRational {
        &self.value
    }

    pub fn to_u64(&self) -> Option<u64> {
        if self.value.is_integer() {
            self.value.numer().to_u64()
        } else {
            None
        }
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    /// `true` when this is the multiplicative identity (including `0` in `Z/1`).
    pub fn is_one(&self) -> bool {
        *self == self.domain.one()
    }

    fn same_domain(&self, other: &RingElement) -> Result<()> {
        if self.domain == other.domain {
            Ok(())
        } else {
            Err(Error::DomainMismatch(self.domain.to_string(), other.domain.to_string()))
        }
    }

    pub fn checked_add(&self, other: &RingElement) -> Result<RingElement> {
        self.same_domain(other)?;
        Ok(RingElement { domain: self.domain, value: self.domain.add_raw(&self.value, &other.value) })
    }

    pub fn checked_sub(&self, other: &RingElement) -> Result<RingElement> {
        self.checked_add(&other.negated())
    }

    pub fn checked_mul(&self, other: &RingElement) -> Result<RingElement> {
        self.same_domain(other)?;
        Ok(RingElement { domain: self.domain, value: self.domain.mul_raw(&self.value, &other.value) })
    }

    pub fn negated(&self) -> RingElement {
        RingElement { domain: self.domain, value: self.domain.neg_raw(&self.value) }
    }

    pub fn inverse(&self) -> Result<RingElement> {
        Ok(RingElement { domain: self.domain, value: self.domain.inv_raw(&self.value)? })
    }

    pub fn pow(&self, mut exp: u64) -> RingElement {
        let mut base = self.clone();
        let mut acc = self.domain.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = RingElement { domain: self.domain, value: self.domain.mul_raw(&acc.value, &base.value) };
            }
            base = RingElement { domain: self.domain, value: self.domain.mul_raw(&base.value, &base.value) };
            exp >>= 1;
        }
        acc
    }

    /// Strict sign of the value. Only meaningful for `Z` and `Q`.
    pub fn signum(&self) -> i8 {
        if self.value.is_zero() {
            0
        } else if self.value.is_positive() {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// The ring laws checked by [`check_ring_axioms`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axiom {
    AddAssociative,
    AddCommutative,
    AddIdentity,
    AddInverse,
    MulAssociative,
    MulCommutative,
    MulIdentity,
    LeftDistributive,
    RightDistributive,
}

impl Axiom {
    pub const ALL: [Axiom; 9] = [
        Axiom::AddAssociative,
        Axiom::AddCommutative,
        Axiom::AddIdentity,
        Axiom::AddInverse,
        Axiom::MulAssociative,
        Axiom::MulCommutative,
        Axiom::MulIdentity,
        Axiom::LeftDistributive,
        Axiom::RightDistributive,
    ];
}

pub type Triple = (RingElement, RingElement, RingElement);

#[derive(Debug, Clone)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    pub passed: bool,
    pub counterexample: Option<Triple>,
}

#[derive(Debug, Clone)]
pub struct AxiomReport {
    pub domain: Domain,
    pub checks: Vec<AxiomCheck>,
    /// The ring is the one-element ring.
    pub one_equals_zero: bool,
    /// Every nonzero sampled element has a multiplicative inverse.
    pub nonzero_invertible: bool,
    pub samples: usize,
}

impl AxiomReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn passed(&self, axiom: Axiom) -> bool {
        self.checks.iter().any(|c| c.axiom == axiom && c.passed)
    }
}

fn axiom_holds(axiom: Axiom, a: &RingElement, b: &RingElement, c: &RingElement) -> Result<bool> {
    let d = a.domain;
    Ok(match axiom {
        Axiom::AddAssociative => a.checked_add(b)?.checked_add(c)? == a.checked_add(&b.checked_add(c)?)?,
        Axiom::AddCommutative => a.checked_add(b)? == b.checked_add(a)?,
        Axiom::AddIdentity => a.checked_add(&d.zero())? == *a && d.zero().checked_add(a)? == *a,
        Axiom::AddInverse => a.checked_add(&a.negated())?.is_zero(),
        Axiom::MulAssociative => a.checked_mul(b)?.checked_mul(c)? == a.checked_mul(&b.checked_mul(c)?)?,
        Axiom::MulCommutative => a.checked_mul(b)? == b.checked_mul(a)?,
        Axiom::MulIdentity => a.checked_mul(&d.one())? == *a && d.one().checked_mul(a)? == *a,
        Axiom::LeftDistributive => {
            a.checked_mul(&b.checked_add(c)?)? == a.checked_mul(b)?.checked_add(&a.checked_mul(c)?)?
        }
        Axiom::RightDistributive => {
            a.checked_add(b)?.checked_mul(c)? == a.checked_mul(c)?.checked_add(&b.checked_mul(c)?)?
        }
    })
}

/// Checks every ring law on every sample triple. A triple whose entries do
/// not belong to `domain` counts as a failure.
pub fn check_ring_axioms(domain: Domain, samples: &[Triple]) -> AxiomReport {
    let mut checks: Vec<AxiomCheck> =
        Axiom::ALL.iter().map(|&axiom| AxiomCheck { axiom, passed: true, counterexample: None }).collect();
    let mut nonzero_invertible = true;
    for triple in samples {
        let (a, b, c) = triple;
        let in_domain = [a, b, c].iter().all(|e| e.domain == domain);
        for check in checks.iter_mut().filter(|c| c.passed) {
            let ok = in_domain && axiom_holds(check.axiom, a, b, c).unwrap_or(false);
            if !ok {
                check.passed = false;
                check.counterexample = Some(triple.clone());
            }
        }
        for e in [a, b, c] {
            if !e.is_zero() {
                let invertible = e.inverse().and_then(|inv| inv.checked_mul(e)).is_ok_and(|p| p.is_one());
                nonzero_invertible &= invertible;
            }
        }
    }
    AxiomReport {
        domain,
        checks,
        one_equals_zero: domain.one().is_zero(),
        nonzero_invertible,
        samples: samples.len(),
    }
}

/// All `|R|^3` triples of a finite domain.
pub fn exhaustive_triples(domain: Domain) -> Option<Vec<Triple>> {
    let elems = domain.elements()?;
    let mut out = Vec::with_capacity(elems.len().pow(3));
    for a in &elems {
        for b in &elems {
            for c in &elems {
                out.push((a.clone(), b.clone(), c.clone()));
            }
        }
    }
    Some(out)
}

/// Units of `Z/n`, found by searching for `u * v = 1`.
pub fn units_of(n: u64) -> Result<Vec<RingElement>> {
    let domain = Domain::mod_ring(n)?;
    let elems = domain.elements().unwrap_or_default();
    Ok(elems
        .iter()
        .filter(|u| elems.iter().any(|v| u.checked_mul(v).is_ok_and(|p| p.is_one())))
        .cloned()
        .collect())
}

/// The canonical projection `Z -> Z/n`; `modulus == 0` is the identity onto `Z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ModHomomorphism {
    modulus: u64,
}

impl ModHomomorphism {
    pub fn new(modulus: u64) -> Self {
        ModHomomorphism { modulus }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn target(&self) -> Domain {
        if self.modulus == 0 {
            Domain::Integers
        } else {
            Domain::ModRing(self.modulus)
        }
    }

    pub fn apply(&self, r: &BigInt) -> RingElement {
        self.target().int(r.clone())
    }

    pub fn in_kernel(&self, r: &BigInt) -> bool {
        self.apply(r).is_zero()
    }
}

/// `Z/(g)` together with its projection. `(0)` gives `Z` itself.
pub fn quotient_ring(ideal: &IntIdeal) -> Result<(Domain, ModHomomorphism)> {
    let g = ideal
        .generator()
        .to_u64()
        .ok_or_else(|| Error::OutOfRange(format!("modulus {} exceeds 64 bits", ideal.generator())))?;
    let phi = ModHomomorphism::new(g);
    Ok((phi.target(), phi))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HomReport {
    pub additive: bool,
    pub multiplicative: bool,
    pub unital: bool,
}

impl HomReport {
    pub fn passed(&self) -> bool {
        self.additive && self.multiplicative && self.unital
    }
}

/// Checks `phi(a+b) = phi(a)+phi(b)`, `phi(ab) = phi(a)phi(b)` and `phi(1) = 1`.
pub fn hom_check(phi: &ModHomomorphism, samples: &[(BigInt, BigInt)]) -> HomReport {
    let mut additive = true;
    let mut multiplicative = true;
    for (a, b) in samples {
        let (pa, pb) = (phi.apply(a), phi.apply(b));
        additive &= pa.checked_add(&pb).is_ok_and(|s| s == phi.apply(&(a + b)));
        multiplicative &= pa.checked_mul(&pb).is_ok_and(|s| s == phi.apply(&(a * b)));
    }
    HomReport { additive, multiplicative, unital: phi.apply(&BigInt::one()).is_one() }
}
