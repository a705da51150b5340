//! The `V` / `I` correspondence over a prime field `F_p`.
//!
//! Varieties are computed by scanning all of `F_p^n`. Vanishing ideals are
//! computed as the nullspace of the evaluation matrix on reduced monomials
//! (every exponent `< p`), plus the field equations `x_i^p - x_i`. Over a
//! finite field every subset of `F_p^n` is algebraic, so `V(I(X)) = X`
//! always holds and irreducible sets are exactly the single points.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg;
use crate::poly::{Monomial, MonomialOrder, PolyRing, Polynomial};
use crate::poly_ideals::{membership_bounded, IdealPresentation, MembershipCertificate};
use crate::rings::{is_prime_u64, Domain, RingElement};

/// Largest `p^n` that will be scanned exhaustively.
pub const MAX_SPACE: u64 = 1_000_000;

fn space_size(p: u64, n: usize) -> Result<u64> {
    u32::try_from(n)
        .ok()
        .and_then(|n| p.checked_pow(n))
        .filter(|&s| s <= MAX_SPACE)
        .ok_or_else(|| Error::TooLarge(format!("{p}^{n} points exceeds {MAX_SPACE}")))
}

fn field_of(ring: &PolyRing) -> Result<u64> {
    match ring.domain() {
        Domain::PrimeField(p) => Ok(p),
        other => Err(Error::UnsupportedDomain(other.to_string(), "varieties are computed over F_p".into())),
    }
}

/// A set of points of `F_p^n`, sorted and without duplicates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointSet {
    p: u64,
    n: usize,
    points: Vec<Vec<u64>>,
}

impl PointSet {
    pub fn new(p: u64, n: usize, points: impl IntoIterator<Item = Vec<u64>>) -> Result<Self> {
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        let mut set = BTreeSet::new();
        for pt in points {
            if pt.len() != n {
                return Err(Error::OutOfRange(format!("point {pt:?} does not have {n} coordinates")));
            }
            if let Some(&c) = pt.iter().find(|&&c| c >= p) {
                return Err(Error::OutOfRange(format!("coordinate {c} is not a residue mod {p}")));
            }
            set.insert(pt);
        }
        Ok(PointSet { p, n, points: set.into_iter().collect() })
    }

    pub fn empty(p: u64, n: usize) -> Result<Self> {
        PointSet::new(p, n, [])
    }

    /// All of `F_p^n` in lexicographic order.
    pub fn all(p: u64, n: usize) -> Result<Self> {
        let total = space_size(p, n)?;
        let points = (0..total).map(|i| index_to_point(i, p, n));
        PointSet::new(p, n, points)
    }

    pub fn field(&self) -> u64 {
        self.p
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn points(&self) -> &[Vec<u64>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, pt: &[u64]) -> bool {
        self.points.binary_search_by(|q| q.as_slice().cmp(pt)).is_ok()
    }

    pub fn is_subset_of(&self, other: &PointSet) -> bool {
        self.points.iter().all(|pt| other.contains(pt))
    }

    pub fn union(&self, other: &PointSet) -> PointSet {
        let mut points = self.points.clone();
        points.extend(other.points.iter().cloned());
        points.sort();
        points.dedup();
        PointSet { p: self.p, n: self.n, points }
    }

    pub fn intersection(&self, other: &PointSet) -> PointSet {
        let points = self.points.iter().filter(|pt| other.contains(pt)).cloned().collect();
        PointSet { p: self.p, n: self.n, points }
    }

    /// The point as field elements.
    pub fn elements(&self, pt: &[u64]) -> Vec<RingElement> {
        let d = Domain::PrimeField(self.p);
        pt.iter().map(|&c| d.int(c)).collect()
    }

    /// All `2^|self|` subsets, by bitmask over the sorted points.
    pub fn subsets(&self) -> impl Iterator<Item = PointSet> + '_ {
        assert!(self.points.len() < 64, "too many points to enumerate subsets");
        (0u64..1 << self.points.len()).map(move |mask| PointSet {
            p: self.p,
            n: self.n,
            points: self.points.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, q)| q.clone()).collect(),
        })
    }
}

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pts: Vec<String> = self
            .points
            .iter()
            .map(|pt| format!("({})", pt.iter().map(u64::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "{{{}}}", pts.join(", "))
    }
}

fn index_to_point(mut i: u64, p: u64, n: usize) -> Vec<u64> {
    let mut pt = vec![0; n];
    for slot in pt.iter_mut().rev() {
        *slot = i % p;
        i /= p;
    }
    pt
}

fn vanishes_on(f: &Polynomial, pt: &[u64]) -> bool {
    f.eval_residues(pt).is_ok_and(|v| v == 0)
}

/// `V(S)`: common zeros in `F_p^n` of the generators; `V(∅) = F_p^n`.
pub fn variety(gens: &IdealPresentation) -> Result<PointSet> {
    let ring = gens.ring();
    let p = field_of(ring)?;
    let n = ring.nvars();
    let total = space_size(p, n)?;
    let points = (0..total)
        .map(|i| index_to_point(i, p, n))
        .filter(|pt| gens.generators().iter().all(|g| vanishes_on(g, pt)));
    PointSet::new(p, n, points)
}

/// `I(X)` as reduced-form nullspace generators plus the field equations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VanishingIdealResult {
    pub ring: PolyRing,
    pub points: PointSet,
    pub generators: Vec<Polynomial>,
    pub field_equations: Vec<Polynomial>,
    /// `V(generators ∪ field_equations)` was recomputed and equals `points`.
    pub closure_verified: bool,
}

impl VanishingIdealResult {
    pub fn all_generators(&self) -> impl Iterator<Item = &Polynomial> {
        self.generators.iter().chain(&self.field_equations)
    }

    pub fn as_ideal(&self) -> IdealPresentation {
        IdealPresentation::new(&self.ring, self.all_generators().cloned()).expect("same ring")
    }

    /// Dimension of the span of the reduced generators.
    pub fn nullity(&self) -> usize {
        self.generators.len()
    }
}

/// Reduced monomials in ascending graded-lex order; these index evaluation columns.
pub fn reduced_basis(ring: &PolyRing, p: u64) -> Vec<Monomial> {
    let mut monos = ring.reduced_monomials(p as u32);
    monos.sort_by(|a, b| MonomialOrder::GradedLex.cmp(a, b));
    monos
}

/// Coordinates of a reduced polynomial in [`reduced_basis`]; exponents are
/// first reduced with `x^p = x`.
pub fn reduced_coordinates(f: &Polynomial, p: u64) -> Vec<BigRational> {
    let r = f.reduce_exponents(p as u32);
    reduced_basis(f.ring(), p).iter().map(|m| r.coefficient(m).value().clone()).collect()
}

pub fn field_equations(ring: &PolyRing) -> Result<Vec<Polynomial>> {
    let p = field_of(ring)?;
    let d = ring.domain();
    Ok((0..ring.nvars())
        .map(|i| {
            let mut exps = vec![0; ring.nvars()];
            exps[i] = p as u32;
            &ring.term(Monomial(exps), &d.one()) - &ring.var(i)
        })
        .collect())
}

pub fn vanishing_ideal(points: &PointSet, ring: &PolyRing) -> Result<VanishingIdealResult> {
    let p = field_of(ring)?;
    if p != points.field() || ring.nvars() != points.dimension() {
        return Err(Error::RingMismatch);
    }
    space_size(p, ring.nvars())?;
    let basis = reduced_basis(ring, p);
    let one = ring.domain().one();
    let monomial_polys: Vec<Polynomial> = basis.iter().map(|m| ring.term(m.clone(), &one)).collect();
    let matrix: Vec<Vec<BigRational>> = points
        .points()
        .iter()
        .map(|pt| {
            monomial_polys
                .iter()
                .map(|m| BigRational::from_integer(m.eval_residues(pt).expect("F_p").into()))
                .collect()
        })
        .collect();
    let null = linalg::nullspace(ring.domain(), &matrix, basis.len())?;
    let generators: Vec<Polynomial> = null
        .into_iter()
        .map(|v| {
            let terms = basis.iter().zip(v).filter(|(_, c)| !c.is_zero()).map(|(m, c)| (m.clone(), c)).collect();
            ring.wrap_terms(terms)
        })
        .collect();
    let field_equations = field_equations(ring)?;
    let all = IdealPresentation::new(ring, generators.iter().chain(&field_equations).cloned())?;
    let closure_verified = variety(&all)? == *points;
    Ok(VanishingIdealResult { ring: ring.clone(), points: points.clone(), generators, field_equations, closure_verified })
}

/// `I(V(S))` together with membership certificates for each generator of `S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VivClosure {
    pub ideal: VanishingIdealResult,
    /// One certificate per generator of `S`, at bound `deg * (p - 1) * n`.
    pub expansion: Vec<MembershipCertificate>,
}

impl VivClosure {
    /// Every generator of `S` was certified a member of `I(V(S))`.
    pub fn contains_input(&self) -> bool {
        self.expansion.iter().all(MembershipCertificate::is_member)
    }
}

pub fn viv_closure(gens: &IdealPresentation) -> Result<VivClosure> {
    let ring = gens.ring();
    let p = field_of(ring)?;
    let points = variety(gens)?;
    let ideal = vanishing_ideal(&points, ring)?;
    let presentation = ideal.as_ideal();
    let expansion = gens
        .generators()
        .iter()
        .map(|g| {
            let deg = g.total_degree().unwrap_or(0);
            let bound = deg * (p as u32 - 1) * ring.nvars() as u32;
            membership_bounded(g, &presentation, bound)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(VivClosure { ideal, expansion })
}

/// Nonempty with no decomposition into two proper algebraic subsets; over
/// `F_p` that is exactly a single point. The empty set is not irreducible.
pub fn is_irreducible(points: &PointSet) -> bool {
    points.len() == 1
}

/// Irreducible components: the singletons of `X`.
pub fn decompose(points: &PointSet) -> Vec<PointSet> {
    points
        .points()
        .iter()
        .map(|pt| PointSet { p: points.p, n: points.n, points: vec![pt.clone()] })
        .collect()
}

/// Indicator of `a` as a reduced polynomial: `Π (1 - (x_i - a_i)^(p-1))`.
pub fn indicator(ring: &PolyRing, a: &[u64]) -> Result<Polynomial> {
    let p = field_of(ring)?;
    let d = ring.domain();
    let mut acc = ring.one();
    for (i, &ai) in a.iter().enumerate() {
        let shifted = &ring.var(i) - &ring.constant(&d.int(ai));
        let factor = &ring.one() - &shifted.pow(p as u32 - 1)?;
        acc = (&acc * &factor).reduce_exponents(p as u32);
    }
    Ok(acc)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeCheck {
    pub prime: bool,
    /// For `|X| >= 2`: `f`, `g` outside `I(X)` with `f * g ∈ I(X)`.
    pub witnesses: Option<(Polynomial, Polynomial)>,
}

impl PrimeCheck {
    /// Re-checks the witnesses by evaluation on `X`.
    pub fn verify(&self, points: &PointSet) -> bool {
        match (&self.witnesses, self.prime) {
            (Some((f, g)), false) => {
                let fg = f * g;
                points.points().iter().all(|pt| vanishes_on(&fg, pt))
                    && points.points().iter().any(|pt| !vanishes_on(f, pt))
                    && points.points().iter().any(|pt| !vanishes_on(g, pt))
            }
            (None, prime) => prime == (points.len() == 1),
            (Some(_), true) => false,
        }
    }
}

/// Decides whether `I(X)` is prime. `I(∅) = (1)` is the whole ring and so
/// not prime; for two or more points the indicator of the first point and
/// its complement are zero divisors modulo `I(X)`.
pub fn is_prime_vanishing_ideal(points: &PointSet, ring: &PolyRing) -> Result<PrimeCheck> {
    let p = field_of(ring)?;
    if p != points.field() || ring.nvars() != points.dimension() {
        return Err(Error::RingMismatch);
    }
    Ok(match points.len() {
        0 => PrimeCheck { prime: false, witnesses: None },
        1 => PrimeCheck { prime: true, witnesses: None },
        _ => {
            let f = indicator(ring, &points.points()[0])?;
            let g = &ring.one() - &f;
            PrimeCheck { prime: false, witnesses: Some((f, g)) }
        }
    })
}

/// `ST = {s * t}`; its variety is `V(S) ∪ V(T)`.
pub fn product_set(s: &IdealPresentation, t: &IdealPresentation) -> Result<IdealPresentation> {
    if s.ring() != t.ring() {
        return Err(Error::RingMismatch);
    }
    let products = s
        .generators()
        .iter()
        .flat_map(|a| t.generators().iter().map(move |b| a.checked_mul(b)))
        .collect::<Result<Vec<_>>>()?;
    IdealPresentation::new(s.ring(), products)
}

/// `S_1 ∪ S_2 ∪ ...`; its variety is the intersection of the `V(S_i)`.
pub fn union_set(sets: &[IdealPresentation]) -> Result<IdealPresentation> {
    let ring = sets.first().map(IdealPresentation::ring).ok_or(Error::ZeroIdeal)?;
    if sets.iter().any(|s| s.ring() != ring) {
        return Err(Error::RingMismatch);
    }
    IdealPresentation::new(ring, sets.iter().flat_map(|s| s.generators().iter().cloned()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(p: u64, vars: &[&str]) -> PolyRing {
        PolyRing::new(Domain::PrimeField(p), vars).unwrap()
    }

    fn pts(p: u64, n: usize, list: &[&[u64]]) -> PointSet {
        PointSet::new(p, n, list.iter().map(|x| x.to_vec())).unwrap()
    }

    #[test]
    fn basic_varieties() {
        let r = ring(3, &["x", "y"]);
        assert_eq!(variety(&IdealPresentation::parse(&r, &["0"]).unwrap()).unwrap().len(), 9);
        assert_eq!(variety(&IdealPresentation::new(&r, []).unwrap()).unwrap().len(), 9);
        assert!(variety(&IdealPresentation::parse(&r, &["1"]).unwrap()).unwrap().is_empty());
        let r5 = ring(5, &["x"]);
        let v = variety(&IdealPresentation::parse(&r5, &["x^2 + 1"]).unwrap()).unwrap();
        assert_eq!(v, pts(5, 1, &[&[2], &[3]]));
        // oracle: residues r with r^2 + 1 = 0 mod 5
        let roots: Vec<u64> = (0..5).filter(|r| (r * r + 1) % 5 == 0).collect();
        assert_eq!(roots, vec![2, 3]);
    }

    #[test]
    fn too_large() {
        let r = ring(7, &["a", "b", "c", "d", "e", "f", "g", "h"]);
        assert!(matches!(variety(&IdealPresentation::new(&r, []).unwrap()), Err(Error::TooLarge(_))));
        let q = PolyRing::new(Domain::Rationals, &["x"]).unwrap();
        assert!(matches!(variety(&IdealPresentation::new(&q, []).unwrap()), Err(Error::UnsupportedDomain(..))));
    }

    #[test]
    fn vanishing_ideal_of_empty_set() {
        let r = ring(2, &["x"]);
        let res = vanishing_ideal(&PointSet::empty(2, 1).unwrap(), &r).unwrap();
        assert_eq!(res.generators.len(), 2);
        assert!(res.generators.contains(&r.one()));
        assert!(res.closure_verified);
    }

    #[test]
    fn vanishing_ideal_of_whole_line() {
        let r = ring(2, &["x"]);
        let res = vanishing_ideal(&PointSet::all(2, 1).unwrap(), &r).unwrap();
        assert!(res.generators.is_empty());
        assert_eq!(res.field_equations, vec![r.parse("x^2 + x").unwrap()]);
        assert!(res.closure_verified);
    }

    #[test]
    fn vanishing_ideal_of_origin() {
        let r = ring(2, &["x", "y"]);
        let origin = pts(2, 2, &[&[0, 0]]);
        let res = vanishing_ideal(&origin, &r).unwrap();
        let expected: Vec<Polynomial> = ["x", "y", "x*y"].iter().map(|s| r.parse(s).unwrap()).collect();
        let span = |polys: &[Polynomial]| {
            let rows: Vec<Vec<BigRational>> = polys.iter().map(|f| reduced_coordinates(f, 2)).collect();
            linalg::rank(Domain::PrimeField(2), &rows, 4).unwrap()
        };
        let mut both = res.generators.clone();
        both.extend(expected.iter().cloned());
        assert_eq!(span(&res.generators), 3);
        assert_eq!(span(&both), 3);
        assert!(res.closure_verified);
    }

    #[test]
    fn viv_examples() {
        let r5 = ring(5, &["x"]);
        let out = viv_closure(&IdealPresentation::parse(&r5, &["x^2"]).unwrap()).unwrap();
        assert_eq!(out.ideal.points, pts(5, 1, &[&[0]]));
        assert!(out.contains_input());
        let x_cert = membership_bounded(&r5.var(0), &out.ideal.as_ideal(), 1).unwrap();
        assert!(x_cert.is_member());

        let out = viv_closure(&IdealPresentation::parse(&r5, &["1"]).unwrap()).unwrap();
        assert!(out.ideal.points.is_empty());
        assert!(membership_bounded(&r5.one(), &out.ideal.as_ideal(), 0).unwrap().is_member());

        let r2 = ring(2, &["x"]);
        let out = viv_closure(&IdealPresentation::parse(&r2, &["0"]).unwrap()).unwrap();
        assert!(out.ideal.generators.is_empty());
        assert_eq!(out.ideal.field_equations, vec![r2.parse("x^2 + x").unwrap()]);
    }

    #[test]
    fn irreducibility_and_decomposition() {
        assert!(is_irreducible(&pts(5, 2, &[&[1, 2]])));
        let two = pts(2, 2, &[&[0, 0], &[1, 1]]);
        assert!(!is_irreducible(&two));
        assert!(!is_irreducible(&PointSet::empty(2, 2).unwrap()));
        assert_eq!(decompose(&two), vec![pts(2, 2, &[&[0, 0]]), pts(2, 2, &[&[1, 1]])]);
        assert_eq!(decompose(&pts(5, 2, &[&[2, 3]])), vec![pts(5, 2, &[&[2, 3]])]);
        assert!(decompose(&PointSet::empty(3, 2).unwrap()).is_empty());
    }

    #[test]
    fn primality_of_vanishing_ideals() {
        let r = ring(2, &["x", "y"]);
        let origin = pts(2, 2, &[&[0, 0]]);
        assert!(is_prime_vanishing_ideal(&origin, &r).unwrap().prime);
        let two = pts(2, 2, &[&[0, 0], &[1, 1]]);
        let check = is_prime_vanishing_ideal(&two, &r).unwrap();
        assert!(!check.prime && check.verify(&two));
        let empty = PointSet::empty(2, 2).unwrap();
        let check = is_prime_vanishing_ideal(&empty, &r).unwrap();
        assert!(!check.prime && check.witnesses.is_none());
    }

    #[test]
    fn indicators() {
        let r = ring(3, &["x", "y"]);
        let delta = indicator(&r, &[1, 2]).unwrap();
        for pt in PointSet::all(3, 2).unwrap().points() {
            assert_eq!(delta.eval_residues(pt).unwrap(), u64::from(pt == &[1, 2]));
        }
        assert!(delta.terms().all(|(m, _)| m.exponents().iter().all(|&e| e < 3)));
    }

    #[test]
    fn point_set_validation() {
        assert!(PointSet::new(4, 1, [vec![0]]).is_err());
        assert!(PointSet::new(3, 1, [vec![3]]).is_err());
        assert!(PointSet::new(3, 2, [vec![1]]).is_err());
        let dup = PointSet::new(3, 1, [vec![1], vec![1], vec![0]]).unwrap();
        assert_eq!(dup.points(), &[vec![0], vec![1]]);
    }
}
