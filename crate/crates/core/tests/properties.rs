use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use idealkit::int_ideals::{enumerate_ideals_mod_n, prime_defs_agree, IntIdeal};
use idealkit::poly::univariate;
use idealkit::poly::PolyJson;
use idealkit::poly_ideals::{hbt_extract_univariate, membership_bounded, radical_univariate, IdealPresentation};
use idealkit::raster::{raster_plane_curve, Window};
use idealkit::rings::{ring_op, Domain, RingOp};
use idealkit::varieties::{decompose, is_irreducible, vanishing_ideal, variety, PointSet};
use idealkit::{Error, PolyRing, Polynomial};

fn ring(domain: Domain, vars: &[&str]) -> PolyRing {
    PolyRing::new(domain, vars).unwrap()
}

/// Polynomials built from a term list; rational coefficients over Q, integers elsewhere.
fn poly_from(r: &PolyRing, terms: &[(Vec<u32>, i64, i64)]) -> Polynomial {
    let d = r.domain();
    let terms = terms.iter().map(|(e, n, den)| {
        let c = if d == Domain::Rationals { d.fraction(*n, *den).unwrap() } else { d.int(*n) };
        (e[..r.nvars()].to_vec(), c)
    });
    r.from_terms(terms).unwrap()
}

fn terms_strategy(max_exp: u32, max_terms: usize) -> impl Strategy<Value = Vec<(Vec<u32>, i64, i64)>> {
    prop::collection::vec((prop::collection::vec(0..=max_exp, 3), -20i64..=20, 1i64..=6), 0..=max_terms)
}

fn domain_strategy() -> impl Strategy<Value = Domain> {
    prop_oneof![
        Just(Domain::Rationals),
        Just(Domain::Integers),
        Just(Domain::PrimeField(7)),
        Just(Domain::PrimeField(2)),
        Just(Domain::ModRing(6)),
    ]
}

fn no_stored_zero(f: &Polynomial) -> bool {
    f.terms().all(|(_, c)| !c.is_zero())
}

/// All polynomials over F_p in `r` with every exponent vector of total degree <= `deg`.
fn all_polys(r: &PolyRing, deg: u32) -> Vec<Polynomial> {
    let p = r.domain().modulus().unwrap();
    let monos = r.monomials_up_to(deg);
    let count = p.pow(monos.len() as u32);
    (0..count)
        .map(|mut code| {
            let terms: Vec<_> = monos
                .iter()
                .map(|m| {
                    let c = code % p;
                    code /= p;
                    (m.exponents().to_vec(), r.domain().int(c))
                })
                .collect();
            r.from_terms(terms).unwrap()
        })
        .collect()
}

// ---------------------------------------------------------------------------
// polynomials

#[test]
fn polynomial_ring_axioms_over_f2_exhaustive() {
    let r = ring(Domain::PrimeField(2), &["x", "y"]);
    let polys = all_polys(&r, 2);
    assert_eq!(polys.len(), 64);
    let (zero, one) = (r.zero(), r.one());
    for f in &polys {
        assert_eq!(&(f + &zero), f);
        assert_eq!(&(f * &one), f);
        assert!((f + &f.negated()).is_zero());
        for g in &polys {
            let fg = f * g;
            assert_eq!(&(f + g), &(g + f));
            assert_eq!(fg, g * f);
            assert!(no_stored_zero(&fg));
            for h in &polys {
                assert_eq!(&(f + g) + h, f + &(g + h));
                assert_eq!(&fg * h, f * &(g * h));
                assert_eq!(f * &(g + h), &fg + &(f * h));
            }
        }
    }
}

#[test]
fn evaluation_is_a_homomorphism_over_f2() {
    let r = ring(Domain::PrimeField(2), &["x", "y"]);
    let polys = all_polys(&r, 2);
    let d = r.domain();
    for f in &polys {
        for g in &polys {
            for a in 0..2 {
                for b in 0..2 {
                    let pt = [d.int(a), d.int(b)];
                    let (fv, gv) = (f.evaluate(&pt).unwrap(), g.evaluate(&pt).unwrap());
                    assert_eq!((f + g).evaluate(&pt).unwrap(), ring_op(&fv, &gv, RingOp::Add).unwrap());
                    assert_eq!((f * g).evaluate(&pt).unwrap(), ring_op(&fv, &gv, RingOp::Mul).unwrap());
                }
            }
        }
    }
}

#[test]
fn degree_is_additive_over_f3() {
    let r = ring(Domain::PrimeField(3), &["x"]);
    let polys: Vec<Polynomial> = all_polys(&r, 4).into_iter().filter(|f| !f.is_zero()).collect();
    assert_eq!(polys.len(), 242);
    for f in &polys {
        for g in &polys {
            let d = |p: &Polynomial| p.total_degree().unwrap();
            assert_eq!(d(&(f * g)), d(f) + d(g));
        }
    }
}

proptest! {
    #[test]
    fn parse_inverts_format(domain in domain_strategy(), terms in terms_strategy(4, 6)) {
        let r = ring(domain, &["x", "y", "z"]);
        let f = poly_from(&r, &terms);
        prop_assert!(no_stored_zero(&f));
        prop_assert_eq!(r.parse(&f.to_string()).unwrap(), f.clone());
        let json = serde_json::to_string(&f.to_json()).unwrap();
        let back: PolyJson = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back.to_polynomial().unwrap(), f);
    }

    #[test]
    fn ring_laws_over_q(a in terms_strategy(3, 4), b in terms_strategy(3, 4), c in terms_strategy(3, 4)) {
        let r = ring(Domain::Rationals, &["x", "y"]);
        let (f, g, h) = (poly_from(&r, &a), poly_from(&r, &b), poly_from(&r, &c));
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert_eq!(&(&g + &h) * &f, &(&g * &f) + &(&h * &f));
        prop_assert!(no_stored_zero(&(&(&f * &g) - &(&g * &f))));
        prop_assert!((&(&f * &g) - &(&g * &f)).is_zero());
    }

    #[test]
    fn element_distributivity(domain in domain_strategy(), v in prop::collection::vec(-500i64..500, 3)) {
        let [a, b, c] = [v[0], v[1], v[2]].map(|x| domain.int(x));
        let lhs = a.checked_mul(&b.checked_add(&c).unwrap()).unwrap();
        let rhs = a.checked_mul(&b).unwrap().checked_add(&a.checked_mul(&c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

// ---------------------------------------------------------------------------
// ideals of Z and Z/n

/// `z = Σ s_i r_i` with every `|r_i| <= 200`, by direct search.
fn bounded_combination(s: &[i64], z: i64) -> bool {
    let nonzero: Vec<i64> = s.iter().copied().filter(|&x| x != 0).collect();
    match nonzero.as_slice() {
        [] => z == 0,
        [a] => z % a == 0 && (z / a).abs() <= 200,
        [a, b] => (-200..=200).any(|r| {
            let rest = z - a * r;
            rest % b == 0 && (rest / b).abs() <= 200
        }),
        _ => unreachable!("at most two generators"),
    }
}

proptest! {
    // With |z| <= 100 and |s_i| <= 100 some combination with |r_i| <= 150
    // exists whenever gcd(S) | z, so the bounded search is a complete oracle.
    #[test]
    fn principal_reduction(s in prop::collection::vec(-100i64..=100, 0..=2), z in -100i64..=100) {
        let ideal = IntIdeal::from_generators(s.iter().copied());
        prop_assert_eq!(ideal.contains(&BigInt::from(z)), bounded_combination(&s, z));
        let g = s.iter().fold(0i64, |acc, &x| acc.gcd(&x));
        prop_assert_eq!(ideal.generator().to_string(), g.to_string());
    }
}

#[test]
fn ideals_mod_n_structure() {
    for n in 1..=30u64 {
        let ideals = enumerate_ideals_mod_n(n).unwrap();
        for ideal in &ideals {
            assert_eq!(ideal.contains(1 % n), ideal.is_whole_ring());
            let v = prime_defs_agree(n, ideal).unwrap();
            assert_eq!(v.def_direct, v.def_quotient, "n = {n}, {:?}", ideal.elements());
        }
        if n <= 12 {
            // every nonempty family of ideals has a member contained in no other
            let k = ideals.len();
            for mask in 1u32..1 << k {
                let family: Vec<_> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| &ideals[i]).collect();
                let has_maximal = family.iter().any(|a| {
                    family.iter().all(|b| std::ptr::eq(*a, *b) || !a.is_subset_of(b) || b.is_subset_of(a))
                });
                assert!(has_maximal, "n = {n}, mask = {mask:b}");
            }
        }
    }
}

// ---------------------------------------------------------------------------
// polynomial ideals

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn membership_is_monotone_in_bound(
        a in terms_strategy(2, 3),
        b in terms_strategy(2, 3),
        f in terms_strategy(3, 4),
        field in prop_oneof![Just(Domain::Rationals), Just(Domain::PrimeField(5))],
    ) {
        let r = ring(field, &["x", "y"]);
        let ideal = IdealPresentation::new(&r, [poly_from(&r, &a), poly_from(&r, &b)]).unwrap();
        let f = poly_from(&r, &f);
        let mut seen_member = false;
        for bound in 0..=3 {
            let cert = membership_bounded(&f, &ideal, bound).unwrap();
            prop_assert!(cert.verify(&f, &ideal));
            prop_assert!(!seen_member || cert.is_member());
            seen_member |= cert.is_member();
        }
    }

    #[test]
    fn unit_ideal_contains_everything(
        g in terms_strategy(2, 3),
        h in terms_strategy(1, 2),
        f in terms_strategy(2, 4),
        field in prop_oneof![Just(Domain::Rationals), Just(Domain::PrimeField(5))],
    ) {
        let r = ring(field, &["x", "y"]);
        let (g, h, f) = (poly_from(&r, &g), poly_from(&r, &h), poly_from(&r, &f));
        // 1 = (1 + h g) - h g
        let ideal = IdealPresentation::new(&r, [g.clone(), &r.one() + &(&h * &g)]).unwrap();
        let d = h.total_degree().unwrap_or(0);
        let one = membership_bounded(&r.one(), &ideal, d).unwrap();
        prop_assert!(one.is_member());
        let cert = membership_bounded(&f, &ideal, d + f.total_degree().unwrap_or(0)).unwrap();
        prop_assert!(cert.is_member() && cert.verify(&f, &ideal));
    }

    #[test]
    fn radical_is_idempotent_and_contains_f(
        roots in prop::collection::vec((-3i64..=3, 1u32..=3), 1..=3),
        scale in 1i64..=5,
    ) {
        let r = ring(Domain::Rationals, &["x"]);
        let x = r.var(0);
        let f = roots.iter().fold(r.int(scale), |acc, &(a, m)| &acc * &(&x - &r.int(a)).pow(m).unwrap());
        let rad = radical_univariate(&f).unwrap();
        prop_assert_eq!(radical_univariate(&rad).unwrap(), rad.clone());
        let distinct: BTreeSet<i64> = roots.iter().map(|&(a, _)| a).collect();
        prop_assert_eq!(rad.total_degree().unwrap() as usize, distinct.len());
        let principal = IdealPresentation::new(&r, [rad.clone()]).unwrap();
        let cert = membership_bounded(&f, &principal, f.total_degree().unwrap()).unwrap();
        prop_assert!(cert.is_member() && cert.verify(&f, &principal));
    }

    #[test]
    fn hbt_generator_divides_inputs(a in terms_strategy(5, 5), b in terms_strategy(5, 5)) {
        let r = ring(Domain::PrimeField(5), &["x"]);
        let ideal = IdealPresentation::new(&r, [poly_from(&r, &a), poly_from(&r, &b)]).unwrap();
        match hbt_extract_univariate(&ideal) {
            Err(Error::ZeroIdeal) => prop_assert!(ideal.generators().is_empty()),
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
            Ok(out) => {
                for g in ideal.generators() {
                    prop_assert!(univariate::divides(&out.extracted, g).unwrap());
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// varieties

fn point_set(p: u64, mask: u64) -> PointSet {
    let pts = (0..p * p).filter(|i| mask >> i & 1 == 1).map(|i| vec![i / p, i % p]);
    PointSet::new(p, 2, pts).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn decomposition_over_f3(mask in 0u64..1 << 9) {
        let x = point_set(3, mask);
        let comps = decompose(&x);
        let union: BTreeSet<Vec<u64>> = comps.iter().flat_map(|c| c.points().to_vec()).collect();
        prop_assert_eq!(union, x.points().iter().cloned().collect::<BTreeSet<_>>());
        prop_assert!(comps.iter().all(is_irreducible));
        for (i, a) in comps.iter().enumerate() {
            for (j, b) in comps.iter().enumerate() {
                prop_assert!(i == j || !a.is_subset_of(b));
            }
        }
    }

    #[test]
    fn descending_chains_are_short(order in Just((0..9u64).collect::<Vec<_>>()).prop_shuffle()) {
        // remove one point at a time; each stage is algebraic
        let r = ring(Domain::PrimeField(3), &["x", "y"]);
        let mut mask = (1u64 << 9) - 1;
        let mut steps = 0;
        for i in order {
            let next = mask & !(1 << i);
            let x = point_set(3, next);
            let closed = variety(&vanishing_ideal(&x, &r).unwrap().as_ideal()).unwrap();
            prop_assert_eq!(closed, x);
            mask = next;
            steps += 1;
        }
        prop_assert!(steps <= 9);
    }
}

// ---------------------------------------------------------------------------
// rasterizer

/// Linear form `a x + b y + c` has a zero in the closed cell iff its corner
/// signs are not all strictly equal.
fn line_misses_cell(line: &(i64, i64, i64), xs: [&BigRational; 2], ys: [&BigRational; 2]) -> bool {
    let (a, b, c) = line;
    let signs: Vec<i32> = xs
        .iter()
        .flat_map(|x| ys.iter().map(move |y| (*x, *y)))
        .map(|(x, y)| {
            let v = x * BigRational::from_integer((*a).into())
                + y * BigRational::from_integer((*b).into())
                + BigRational::from_integer((*c).into());
            if v.is_zero() { 0 } else if v.is_positive() { 1 } else { -1 }
        })
        .collect();
    signs.iter().all(|&s| s == 1) || signs.iter().all(|&s| s == -1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn refinement_keeps_empty_cells_empty(lines in prop::collection::vec((-3i64..=3, -3i64..=3, -4i64..=4), 1..=3)) {
        prop_assume!(lines.iter().all(|(a, b, _)| *a != 0 || *b != 0));
        let r = ring(Domain::Rationals, &["x", "y"]);
        let f = lines.iter().fold(r.one(), |acc, &(a, b, c)| {
            &acc * &(&(&(&r.var(0) * &r.int(a)) + &(&r.var(1) * &r.int(b))) + &r.int(c))
        });
        let window = Window::from_ints(-2, 2, -2, 2).unwrap();
        let coarse = raster_plane_curve(&f, &window, 8, 8).unwrap();
        let fine = raster_plane_curve(&f, &window, 16, 16).unwrap();
        let q = |k: usize, steps: usize, lo: i64, hi: i64| {
            BigRational::from_integer(lo.into()) + BigRational::new(((hi - lo) * k as i64).into(), (steps as i64).into())
        };
        for row in 0..8 {
            for col in 0..8 {
                let xs = [q(col, 8, -2, 2), q(col + 1, 8, -2, 2)];
                let ys = [q(row, 8, 2, -2), q(row + 1, 8, 2, -2)];
                let no_zero = lines.iter().all(|l| line_misses_cell(l, [&xs[0], &xs[1]], [&ys[0], &ys[1]]));
                // the converse fails: two crossings can leave the product's corner signs uniform
                prop_assert!(!no_zero || !coarse.cells[row][col]);
                if no_zero {
                    for (dr, dc) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
                        prop_assert!(!fine.cells[2 * row + dr][2 * col + dc]);
                    }
                }
            }
        }
    }
}
