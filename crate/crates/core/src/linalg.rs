//! Exact Gauss-Jordan elimination over `Q` and `F_p`.
//!
//! Over `Q` rows are scaled to integers and eliminated fraction-free, with
//! each row divided by its content after every step; fractions only appear
//! when the final pivots are normalised to 1. Over `F_p` elimination runs on
//! machine residues. Pivots are chosen as the first usable row in column
//! order, so results are deterministic.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rings::Domain;

/// Reduced row echelon form: `rows[i]` has a 1 in column `pivots[i]` and
/// zeros in every other pivot column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Echelon {
    pub pivots: Vec<usize>,
    pub rows: Vec<Vec<BigRational>>,
    pub cols: usize,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.cols).filter(|c| !self.pivots.contains(c)).collect()
    }
}

pub fn rref(domain: Domain, rows: &[Vec<BigRational>], cols: usize) -> Result<Echelon> {
    if rows.iter().any(|r| r.len() != cols) {
        return Err(Error::OutOfRange("ragged matrix".into()));
    }
    match domain {
        Domain::Rationals => Ok(rref_fraction_free(rows, cols)),
        Domain::PrimeField(p) => Ok(rref_mod_p(rows, cols, p)),
        other => Err(Error::UnsupportedDomain(other.to_string(), "linear algebra needs Q or F_p".into())),
    }
}

fn primitive(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in row.iter_mut() {
            *x /= &g;
        }
    }
}

fn rref_fraction_free(rows: &[Vec<BigRational>], cols: usize) -> Echelon {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            let l = r.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            let mut ints: Vec<BigInt> = r.iter().map(|x| x.numer() * (&l / x.denom())).collect();
            primitive(&mut ints);
            ints
        })
        .collect();
    let mut pivots = Vec::new();
    let mut next = 0;
    for c in 0..cols {
        let Some(p) = (next..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(next, p);
        let (before, rest) = m.split_at_mut(next);
        let (pivot_row, after) = rest.split_first_mut().expect("pivot row exists");
        for row in before.iter_mut().chain(after.iter_mut()) {
            if row[c].is_zero() {
                continue;
            }
            let a = pivot_row[c].clone();
            let b = row[c].clone();
            for (x, y) in row.iter_mut().zip(pivot_row.iter()) {
                *x = &a * &*x - &b * y;
            }
            primitive(row);
        }
        pivots.push(c);
        next += 1;
        if next == m.len() {
            break;
        }
    }
    m.truncate(next);
    let rows = m
        .into_iter()
        .zip(&pivots)
        .map(|(row, &c)| {
            let lead = row[c].clone();
            row.into_iter().map(|x| BigRational::new(x, lead.clone())).collect()
        })
        .collect();
    Echelon { pivots, rows, cols }
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let mut acc = 1u128;
    let mut base = a as u128 % p as u128;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u128;
        }
        base = base * base % p as u128;
        e >>= 1;
    }
    acc as u64
}

fn rref_mod_p(rows: &[Vec<BigRational>], cols: usize, p: u64) -> Echelon {
    let pm = BigInt::from(p);
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|x| x.numer().mod_floor(&pm).to_u64().expect("residue")).collect())
        .collect();
    let mulp = |a: u64, b: u64| (a as u128 * b as u128 % p as u128) as u64;
    let mut pivots = Vec::new();
    let mut next = 0;
    for c in 0..cols {
        let Some(piv) = (next..m.len()).find(|&i| m[i][c] != 0) else { continue };
        m.swap(next, piv);
        let inv = inv_mod(m[next][c], p);
        for x in m[next].iter_mut() {
            *x = mulp(*x, inv);
        }
        let (before, rest) = m.split_at_mut(next);
        let (pivot_row, after) = rest.split_first_mut().expect("pivot row exists");
        for row in before.iter_mut().chain(after.iter_mut()) {
            let f = row[c];
            if f == 0 {
                continue;
            }
            for (x, &y) in row.iter_mut().zip(pivot_row.iter()) {
                *x = ((*x as u128 + p as u128 - mulp(f, y) as u128) % p as u128) as u64;
            }
        }
        pivots.push(c);
        next += 1;
        if next == m.len() {
            break;
        }
    }
    m.truncate(next);
    let rows = m
        .into_iter()
        .map(|row| row.into_iter().map(|x| BigRational::from_integer(x.into())).collect())
        .collect();
    Echelon { pivots, rows, cols }
}

/// A solution of `A x = b` with every free variable set to 0, or `None`
/// when the system is inconsistent.
pub fn solve(domain: Domain, a: &[Vec<BigRational>], b: &[BigRational], cols: usize) -> Result<Option<Vec<BigRational>>> {
    if a.len() != b.len() {
        return Err(Error::OutOfRange("right-hand side length".into()));
    }
    let augmented: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let e = rref(domain, &augmented, cols + 1)?;
    if e.pivots.last() == Some(&cols) {
        return Ok(None);
    }
    let mut x = vec![BigRational::zero(); cols];
    for (row, &c) in e.rows.iter().zip(&e.pivots) {
        x[c] = row[cols].clone();
    }
    Ok(Some(x))
}

/// Basis of `{x : A x = 0}`, one vector per free column, in column order.
pub fn nullspace(domain: Domain, a: &[Vec<BigRational>], cols: usize) -> Result<Vec<Vec<BigRational>>> {
    let e = rref(domain, a, cols)?;
    let neg = |x: &BigRational| -> BigRational {
        match domain.modulus() {
            Some(p) if !x.is_zero() => BigRational::from_integer(BigInt::from(p) - x.numer()),
            Some(_) => x.clone(),
            None => -x,
        }
    };
    Ok(e.free_columns()
        .into_iter()
        .map(|f| {
            let mut v = vec![BigRational::zero(); cols];
            v[f] = BigRational::one();
            for (row, &c) in e.rows.iter().zip(&e.pivots) {
                v[c] = neg(&row[f]);
            }
            v
        })
        .collect())
}

pub fn rank(domain: Domain, a: &[Vec<BigRational>], cols: usize) -> Result<usize> {
    Ok(rref(domain, a, cols)?.rank())
}

/// `A x` with entries reduced into `domain`.
pub fn mat_vec(domain: Domain, a: &[Vec<BigRational>], x: &[BigRational]) -> Vec<BigRational> {
    a.iter()
        .map(|row| {
            row.iter().zip(x).fold(BigRational::zero(), |acc, (r, v)| domain.add_raw(&acc, &domain.mul_raw(r, v)))
        })
        .collect()
}
