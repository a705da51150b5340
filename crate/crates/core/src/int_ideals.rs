//! Ideals of `Z` and of `Z/n`.
//!
//! Every ideal of `Z` is principal, so an [`IntIdeal`] is just its
//! non-negative generator. Ideals of `Z/n` are small enough to list
//! explicitly as residue sets.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rings::is_prime_u64;

/// Largest `n` accepted by [`enumerate_ideals_mod_n`].
pub const MAX_ENUMERATION_MODULUS: u64 = 10_000;

/// The ideal `(g)` of `Z`, with `g >= 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntIdeal {
    generator: BigUint,
}

impl IntIdeal {
    pub fn principal(g: impl Into<BigInt>) -> Self {
        IntIdeal { generator: g.into().abs().to_biguint().expect("absolute value is non-negative") }
    }

    /// The ideal generated by `gens`: `(gcd(gens))`, with `gcd([]) = 0`.
    pub fn from_generators<I, T>(gens: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let g = gens.into_iter().fold(BigInt::zero(), |acc, x| acc.gcd(&x.into()));
        IntIdeal::principal(g)
    }

    pub fn generator(&self) -> &BigUint {
        &self.generator
    }

    pub fn is_zero(&self) -> bool {
        self.generator.is_zero()
    }

    pub fn is_whole_ring(&self) -> bool {
        self.generator.is_one()
    }

    /// `z` lies in `(g)` iff `g | z`; only `0` lies in `(0)`.
    pub fn contains(&self, z: &BigInt) -> bool {
        if self.generator.is_zero() {
            z.is_zero()
        } else {
            (z.magnitude() % &self.generator).is_zero()
        }
    }

    /// `self ⊆ other`, i.e. `other`'s generator divides ours.
    pub fn is_subset_of(&self, other: &IntIdeal) -> bool {
        other.contains(&BigInt::from(self.generator.clone()))
    }

    /// Prime iff the generator is `0` or a prime number. `(1) = Z` is excluded.
    pub fn is_prime(&self) -> bool {
        if self.generator.is_zero() {
            return true;
        }
        if self.generator.is_one() {
            return false;
        }
        match self.generator.to_u64() {
            Some(g) => is_prime_u64(g),
            None => smallest_factor_big(&self.generator).is_none(),
        }
    }

    /// For a composite generator `n = a*b` with `1 < a <= b < n`: a factor pair
    /// witnessing that `(n)` is not prime, since `ab ∈ (n)` while `a, b ∉ (n)`.
    pub fn non_prime_witness(&self) -> Option<(BigUint, BigUint)> {
        if self.generator <= BigUint::one() {
            return None;
        }
        let a = match self.generator.to_u64() {
            Some(g) => smallest_factor(g).map(BigUint::from),
            None => smallest_factor_big(&self.generator),
        }?;
        let b = &self.generator / &a;
        Some((a, b))
    }
}

fn smallest_factor(n: u64) -> Option<u64> {
    let mut d = 2u64;
    while d <= n / d {
        if n.is_multiple_of(d) {
            return Some(d);
        }
        d += 1;
    }
    None
}

fn smallest_factor_big(n: &BigUint) -> Option<BigUint> {
    let mut d = BigUint::from(2u32);
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            return Some(d);
        }
        d += 1u32;
    }
    None
}

impl fmt::Display for IntIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.generator)
    }
}

/// An ideal of `Z/n` as its sorted list of residues.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZnIdeal {
    modulus: u64,
    elements: Vec<u64>,
}

impl ZnIdeal {
    /// `d·(Z/n)` for a divisor-or-any `d`; the result is the ideal generated by `d`.
    pub fn generated_by(n: u64, d: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidModulus(0));
        }
        let step = d.gcd(&n);
        Ok(ZnIdeal { modulus: n, elements: (0..n).step_by(step as usize).collect() })
    }

    /// Validates that `elements` is an ideal of `Z/n` by checking the ideal
    /// axioms directly.
    pub fn from_subset(n: u64, elements: impl IntoIterator<Item = u64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidModulus(0));
        }
        let set: BTreeSet<u64> = elements.into_iter().collect();
        if let Some(&bad) = set.iter().find(|&&e| e >= n) {
            return Err(Error::InvalidIdeal(format!("{bad} is not a residue mod {n}")));
        }
        if !is_ideal_mod_n(n, &set) {
            return Err(Error::InvalidIdeal(format!("{set:?} is not an ideal of Z/{n}")));
        }
        Ok(ZnIdeal { modulus: n, elements: set.into_iter().collect() })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn contains(&self, r: u64) -> bool {
        self.elements.binary_search(&(r % self.modulus)).is_ok()
    }

    pub fn is_whole_ring(&self) -> bool {
        self.elements.len() as u64 == self.modulus
    }

    /// Smallest positive element, or `n` for the zero ideal.
    pub fn generator(&self) -> u64 {
        self.elements.get(1).copied().unwrap_or(self.modulus)
    }

    pub fn is_subset_of(&self, other: &ZnIdeal) -> bool {
        self.modulus == other.modulus && self.elements.iter().all(|&e| other.contains(e))
    }
}

/// Contains 0, closed under `+`, closed under multiplication by every residue.
pub(crate) fn is_ideal_mod_n(n: u64, set: &BTreeSet<u64>) -> bool {
    if !set.contains(&0) {
        return false;
    }
    for &a in set {
        for &b in set {
            if !set.contains(&((a + b) % n)) {
                return false;
            }
        }
        for r in 0..n {
            if !set.contains(&((a as u128 * r as u128 % n as u128) as u64)) {
                return false;
            }
        }
    }
    true
}

/// All ideals of `Z/n`, one per divisor of `n`, ordered by generator.
pub fn enumerate_ideals_mod_n(n: u64) -> Result<Vec<ZnIdeal>> {
    if !(1..=MAX_ENUMERATION_MODULUS).contains(&n) {
        return Err(Error::OutOfRange(format!("n = {n} outside [1, {MAX_ENUMERATION_MODULUS}]")));
    }
    (1..=n).filter(|d| n.is_multiple_of(*d)).map(|d| ZnIdeal::generated_by(n, d)).collect()
}

/// The two prime-ideal verdicts for `J ⊆ Z/n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeVerdicts {
    /// Proper, and `ij ∈ J` forces `i ∈ J` or `j ∈ J`.
    pub def_direct: bool,
    /// `(Z/n)/J` is not the zero ring and has no zero divisors.
    pub def_quotient: bool,
}

/// Decides primality of `J` twice: by exhaustive product search, and by
/// building the quotient ring on cosets and looking for zero divisors.
pub fn prime_defs_agree(n: u64, ideal: &ZnIdeal) -> Result<PrimeVerdicts> {
    if ideal.modulus != n {
        return Err(Error::InvalidIdeal(format!("ideal lives in Z/{}, not Z/{n}", ideal.modulus)));
    }
    let set: BTreeSet<u64> = ideal.elements.iter().copied().collect();
    if !is_ideal_mod_n(n, &set) {
        return Err(Error::InvalidIdeal(format!("{:?} is not an ideal of Z/{n}", ideal.elements)));
    }
    let mul = |a: u64, b: u64| (a as u128 * b as u128 % n as u128) as u64;

    let proper = !ideal.is_whole_ring();
    let def_direct = proper
        && (0..n).all(|i| (0..n).all(|j| !ideal.contains(mul(i, j)) || ideal.contains(i) || ideal.contains(j)));

    // Cosets r + J, each named by its least member.
    let coset_of = |r: u64| -> u64 {
        ideal.elements.iter().map(|&e| (r + e) % n).min().expect("ideal contains 0")
    };
    let classes: BTreeSet<u64> = (0..n).map(coset_of).collect();
    let zero_class = coset_of(0);
    let nontrivial = classes.len() > 1;
    let has_zero_divisor = classes.iter().filter(|&&a| a != zero_class).any(|&a| {
        classes.iter().filter(|&&b| b != zero_class).any(|&b| coset_of(mul(a, b)) == zero_class)
    });
    Ok(PrimeVerdicts { def_direct, def_quotient: nontrivial && !has_zero_divisor })
}

/// Index `l` of the first consecutive pair with `I_l = I_{l+1}`; when every
/// step is strict, the last index (the chain is stationary from its end).
///
/// Fails with [`Error::NotAChain`] if some ideal is not contained in the next.
pub fn ascending_chain_stabilizes<T: Clone + Into<BigInt>>(chain: &[Vec<T>]) -> Result<usize> {
    if chain.is_empty() {
        return Err(Error::EmptyChain);
    }
    let ideals: Vec<IntIdeal> =
        chain.iter().map(|gens| IntIdeal::from_generators(gens.iter().cloned())).collect();
    if let Some(index) = ideals.windows(2).position(|w| !w[0].is_subset_of(&w[1])) {
        return Err(Error::NotAChain { index });
    }
    Ok(ideals.windows(2).position(|w| w[0] == w[1]).unwrap_or(ideals.len() - 1))
}
