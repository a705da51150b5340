//! Finitely generated ideals of polynomial rings over a field.
//!
//! Membership is decided up to a caller-chosen cofactor degree bound by
//! solving the exact linear system `f = Σ h_i g_i` in the unknown
//! coefficients of the `h_i`. When the system has no solution an evaluation
//! point where every generator vanishes but `f` does not is searched for;
//! failing both, the honest answer is [`MembershipCertificate::Unknown`].

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg;
use crate::poly::univariate;
use crate::poly::{Degree, Monomial, PolyRing, Polynomial};
use crate::rings::{Domain, RingElement};

/// Largest number of points scanned when looking for a non-membership witness.
pub const WITNESS_SCAN_LIMIT: u64 = 1_000_000;

/// Integer grid `[-R, R]^n` searched for witnesses over `Q`.
pub const RATIONAL_WITNESS_RADIUS: i64 = 5;

/// A polynomial ring together with a finite generating set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealPresentation {
    ring: PolyRing,
    generators: Vec<Polynomial>,
}

impl IdealPresentation {
    /// Zero generators are dropped; they do not change the ideal.
    pub fn new(ring: &PolyRing, generators: impl IntoIterator<Item = Polynomial>) -> Result<Self> {
        let mut gens = Vec::new();
        for g in generators {
            if g.ring() != ring {
                return Err(Error::RingMismatch);
            }
            if !g.is_zero() {
                gens.push(g);
            }
        }
        Ok(IdealPresentation { ring: ring.clone(), generators: gens })
    }

    /// Parses each string as a generator.
    pub fn parse<S: AsRef<str>>(ring: &PolyRing, generators: &[S]) -> Result<Self> {
        let gens = generators.iter().map(|s| ring.parse(s.as_ref())).collect::<Result<Vec<_>>>()?;
        IdealPresentation::new(ring, gens)
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn max_degree(&self) -> u32 {
        self.generators.iter().filter_map(Polynomial::total_degree).max().unwrap_or(0)
    }
}

/// Outcome of [`membership_bounded`]; every decisive variant re-verifies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MembershipCertificate {
    /// `f = Σ cofactors[i] * generators[i]`.
    Member { cofactors: Vec<Polynomial> },
    /// Every generator vanishes at `witness` and `f` does not.
    NonMember { witness: Vec<RingElement> },
    /// No cofactors of total degree `<= bound` exist and no witness was found.
    Unknown { bound: u32 },
}

impl MembershipCertificate {
    pub fn is_member(&self) -> bool {
        matches!(self, MembershipCertificate::Member { .. })
    }

    pub fn is_non_member(&self) -> bool {
        matches!(self, MembershipCertificate::NonMember { .. })
    }

    /// Re-checks the certificate with independent arithmetic. `Unknown`
    /// carries no claim and always verifies.
    pub fn verify(&self, f: &Polynomial, ideal: &IdealPresentation) -> bool {
        match self {
            MembershipCertificate::Member { cofactors } => {
                if cofactors.len() != ideal.generators.len() {
                    return false;
                }
                let mut sum = f.ring().zero();
                for (h, g) in cofactors.iter().zip(&ideal.generators) {
                    match h.checked_mul(g).and_then(|t| sum.checked_add(&t)) {
                        Ok(s) => sum = s,
                        Err(_) => return false,
                    }
                }
                sum == *f
            }
            MembershipCertificate::NonMember { witness } => is_separating_point(f, ideal.generators(), witness),
            MembershipCertificate::Unknown { .. } => true,
        }
    }
}

fn is_separating_point(f: &Polynomial, gens: &[Polynomial], point: &[RingElement]) -> bool {
    gens.iter().all(|g| g.evaluate(point).is_ok_and(|v| v.is_zero()))
        && f.evaluate(point).is_ok_and(|v| !v.is_zero())
}

fn require_field(ring: &PolyRing) -> Result<()> {
    if ring.domain().is_field() {
        Ok(())
    } else {
        Err(Error::UnsupportedDomain(ring.domain().to_string(), "ideal membership needs Q or F_p".into()))
    }
}

/// Cofactors of total degree `<= bound` with `f = Σ h_i g_i`, if any exist.
fn solve_cofactors(f: &Polynomial, ideal: &IdealPresentation, bound: u32) -> Result<Option<Vec<Polynomial>>> {
    let ring = &ideal.ring;
    let domain = ring.domain();
    let shifts = ring.monomials_up_to(bound);
    let columns: Vec<(usize, &Monomial)> =
        (0..ideal.generators.len()).flat_map(|i| shifts.iter().map(move |m| (i, m))).collect();

    let mut row_of: BTreeMap<Monomial, usize> = BTreeMap::new();
    let mut entries: Vec<(Monomial, usize, BigRational)> = Vec::new();
    for (col, &(i, shift)) in columns.iter().enumerate() {
        for (m, c) in ideal.generators[i].shift(shift)?.raw_terms() {
            entries.push((m.clone(), col, c.clone()));
        }
    }
    for (m, _, _) in &entries {
        let next = row_of.len();
        row_of.entry(m.clone()).or_insert(next);
    }
    for m in f.raw_terms().keys() {
        let next = row_of.len();
        row_of.entry(m.clone()).or_insert(next);
    }

    let mut a = vec![vec![BigRational::zero(); columns.len()]; row_of.len()];
    for (m, col, c) in entries {
        a[row_of[&m]][col] = c;
    }
    let mut b = vec![BigRational::zero(); row_of.len()];
    for (m, c) in f.raw_terms() {
        b[row_of[m]] = c.clone();
    }

    let Some(x) = linalg::solve(domain, &a, &b, columns.len())? else { return Ok(None) };
    let mut cofactors: Vec<BTreeMap<Monomial, BigRational>> = vec![BTreeMap::new(); ideal.generators.len()];
    for ((i, m), v) in columns.iter().zip(x) {
        if !v.is_zero() {
            cofactors[*i].insert((*m).clone(), v);
        }
    }
    Ok(Some(cofactors.into_iter().map(|t| ring.wrap_terms(t)).collect()))
}

/// The integer grid `[-R, R]^n` scanned for a witness over `Q`.
fn rational_grid(ring: &PolyRing) -> Option<Vec<Vec<RingElement>>> {
    let n = ring.nvars() as u32;
    let domain = ring.domain();
    let side = (2 * RATIONAL_WITNESS_RADIUS + 1) as u64;
    if domain != Domain::Rationals || side.checked_pow(n).is_none_or(|size| size > WITNESS_SCAN_LIMIT) {
        return None;
    }
    let values: Vec<RingElement> =
        (-RATIONAL_WITNESS_RADIUS..=RATIONAL_WITNESS_RADIUS).map(|r| domain.int(r)).collect();
    let mut points = vec![Vec::new()];
    for _ in 0..n {
        points = points
            .into_iter()
            .flat_map(|pt: Vec<RingElement>| {
                values.iter().map(move |v| {
                    let mut q = pt.clone();
                    q.push(v.clone());
                    q
                })
            })
            .collect();
    }
    Some(points)
}

fn find_witness(f: &Polynomial, gens: &[Polynomial]) -> Option<Vec<RingElement>> {
    let ring = f.ring();
    if let Domain::PrimeField(p) = ring.domain() {
        // all of F_p^n in machine residues, last coordinate fastest
        let n = ring.nvars() as u32;
        let total = p.checked_pow(n).filter(|&t| t <= WITNESS_SCAN_LIMIT)?;
        let mut point = vec![0u64; n as usize];
        for idx in 0..total {
            let mut rest = idx;
            for slot in point.iter_mut().rev() {
                *slot = rest % p;
                rest /= p;
            }
            let vanishes = gens.iter().all(|g| g.eval_residues(&point).is_ok_and(|v| v == 0));
            if vanishes && f.eval_residues(&point).is_ok_and(|v| v != 0) {
                return Some(point.iter().map(|&r| ring.domain().int(r)).collect());
            }
        }
        return None;
    }
    rational_grid(ring)?.into_iter().find(|pt| is_separating_point(f, gens, pt))
}

/// Decides `f ∈ I` with cofactors of total degree at most `bound`.
pub fn membership_bounded(f: &Polynomial, ideal: &IdealPresentation, bound: u32) -> Result<MembershipCertificate> {
    if f.ring() != ideal.ring() {
        return Err(Error::RingMismatch);
    }
    require_field(ideal.ring())?;
    if let Some(cofactors) = solve_cofactors(f, ideal, bound)? {
        let cert = MembershipCertificate::Member { cofactors };
        debug_assert!(cert.verify(f, ideal));
        return Ok(cert);
    }
    Ok(match find_witness(f, ideal.generators()) {
        Some(witness) => MembershipCertificate::NonMember { witness },
        None => MembershipCertificate::Unknown { bound },
    })
}

/// Result of comparing two presentations by mutual membership.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdealComparison {
    EqualWithinBound,
    /// A generator of the left ideal outside the right one.
    LeftNotInRight { generator: Polynomial, witness: Vec<RingElement> },
    /// A generator of the right ideal outside the left one.
    RightNotInLeft { generator: Polynomial, witness: Vec<RingElement> },
    Unknown,
}

pub fn ideal_equal_bounded(left: &IdealPresentation, right: &IdealPresentation, bound: u32) -> Result<IdealComparison> {
    if left.ring() != right.ring() {
        return Err(Error::RingMismatch);
    }
    let mut undecided = false;
    for g in left.generators() {
        match membership_bounded(g, right, bound)? {
            MembershipCertificate::NonMember { witness } => {
                return Ok(IdealComparison::LeftNotInRight { generator: g.clone(), witness })
            }
            MembershipCertificate::Unknown { .. } => undecided = true,
            MembershipCertificate::Member { .. } => {}
        }
    }
    for g in right.generators() {
        match membership_bounded(g, left, bound)? {
            MembershipCertificate::NonMember { witness } => {
                return Ok(IdealComparison::RightNotInLeft { generator: g.clone(), witness })
            }
            MembershipCertificate::Unknown { .. } => undecided = true,
            MembershipCertificate::Member { .. } => {}
        }
    }
    Ok(if undecided { IdealComparison::Unknown } else { IdealComparison::EqualWithinBound })
}

fn require_univariate_field(f: &Polynomial) -> Result<()> {
    if f.ring().nvars() != 1 {
        return Err(Error::NotUnivariate);
    }
    require_field(f.ring())
}

/// Monic generator of the radical of `(f)` for univariate `f`: the squarefree
/// part `f / gcd(f, f')`.
///
/// Over `F_p` this fails with [`Error::InseparableCase`] when `f' = 0` or when
/// some irreducible factor occurs with multiplicity divisible by `p`, since
/// the gcd then loses that factor.
pub fn radical_univariate(f: &Polynomial) -> Result<Polynomial> {
    require_univariate_field(f)?;
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.is_constant() {
        return Ok(f.ring().one());
    }
    let df = f.derivative_at(0);
    if df.is_zero() {
        return Err(Error::InseparableCase(f.domain().to_string()));
    }
    let g = univariate::gcd(f, &df)?;
    let r = univariate::exact_div(f, &g)?.expect("gcd divides f").monic()?;
    if let Domain::PrimeField(_) = f.domain() {
        let Degree::Finite(d) = f.degree_univariate()? else { unreachable!("nonzero") };
        if !univariate::divides(f, &r.pow(d)?)? {
            return Err(Error::InseparableCase(f.domain().to_string()));
        }
    }
    Ok(r)
}

/// One certified strict inclusion `(X_1..X_i) ⊊ (X_1..X_{i+1})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainStep {
    pub generators: Vec<Polynomial>,
    pub added: Polynomial,
    /// `X_{i+1} = 1`, every other coordinate 0.
    pub witness: Vec<RingElement>,
}

impl ChainStep {
    /// The witness kills every generator but not the added variable, so the
    /// added variable lies outside the smaller ideal.
    pub fn verify(&self) -> bool {
        is_separating_point(&self.added, &self.generators, &self.witness)
    }
}

/// Certifies the first `k` steps of `(X_1) ⊂ (X_1, X_2) ⊂ ...` are strict.
pub fn strict_chain_demo(k: usize, ring: &PolyRing) -> Result<Vec<ChainStep>> {
    if ring.nvars() < k + 1 {
        return Err(Error::NotEnoughVariables { needed: k + 1, available: ring.nvars() });
    }
    let domain = ring.domain();
    let mut log = Vec::with_capacity(k);
    for i in 1..=k {
        let mut witness = vec![domain.zero(); ring.nvars()];
        witness[i] = domain.one();
        let step = ChainStep { generators: (0..i).map(|j| ring.var(j)).collect(), added: ring.var(i), witness };
        if !step.verify() {
            return Err(Error::UnsupportedDomain(domain.to_string(), "1 = 0 in this ring".into()));
        }
        log.push(step);
    }
    Ok(log)
}

/// Dimension of the space of leading coefficients of degree-`i` members.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LeadingCoefficientIdeal {
    Zero,
    Whole,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HbtExtraction {
    /// Entry `i`: the ideal of leading coefficients of members of degree `<= i`.
    pub j_profile: Vec<LeadingCoefficientIdeal>,
    /// Monic generator of the ideal.
    pub extracted: Polynomial,
    /// Comparison of `(extracted)` against the input presentation.
    pub check: IdealComparison,
}

impl HbtExtraction {
    /// First degree whose leading-coefficient ideal is the whole field.
    pub fn flip_degree(&self) -> Option<usize> {
        self.j_profile.iter().position(|&j| j == LeadingCoefficientIdeal::Whole)
    }
}

/// Univariate leading-coefficient construction: over a field the leading
/// coefficient ideals jump from `0` to the whole field at `deg gcd`, and the
/// gcd generates the ideal.
pub fn hbt_extract_univariate(ideal: &IdealPresentation) -> Result<HbtExtraction> {
    let ring = ideal.ring();
    if ring.nvars() != 1 {
        return Err(Error::NotUnivariate);
    }
    require_field(ring)?;
    let g = univariate::gcd_all(ideal.generators())?.ok_or(Error::ZeroIdeal)?;
    let deg_g = g.total_degree().expect("gcd of nonzero generators") as usize;
    let top = ideal.max_degree() as usize;
    let j_profile = (0..=top)
        .map(|i| if i < deg_g { LeadingCoefficientIdeal::Zero } else { LeadingCoefficientIdeal::Whole })
        .collect();
    let principal = IdealPresentation::new(ring, [g.clone()])?;
    let mut check = ideal_equal_bounded(ideal, &principal, top as u32)?;
    if check == IdealComparison::Unknown {
        let total: u32 = ideal.generators().iter().filter_map(Polynomial::total_degree).sum();
        check = ideal_equal_bounded(ideal, &principal, total)?;
    }
    Ok(HbtExtraction { j_profile, extracted: g, check })
}
