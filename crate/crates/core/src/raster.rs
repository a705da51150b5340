//! Exact sign-change rasterization of real plane curves `f(x, y) = 0`.
//!
//! `f` is evaluated exactly at every grid corner. A cell is marked unless all
//! four corner values are strictly positive or all strictly negative, so a
//! zero corner always marks its cells. A curve that enters and leaves a cell
//! without changing the corner signs is missed.

use std::collections::{BTreeSet, VecDeque};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rings::Domain;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Window {
    pub xmin: BigRational,
    pub xmax: BigRational,
    pub ymin: BigRational,
    pub ymax: BigRational,
}

impl Window {
    pub fn new(xmin: BigRational, xmax: BigRational, ymin: BigRational, ymax: BigRational) -> Result<Self> {
        if xmin >= xmax || ymin >= ymax {
            return Err(Error::DegenerateWindow);
        }
        Ok(Window { xmin, xmax, ymin, ymax })
    }

    pub fn from_ints(xmin: i64, xmax: i64, ymin: i64, ymax: i64) -> Result<Self> {
        let q = |v: i64| BigRational::from_integer(BigInt::from(v));
        Window::new(q(xmin), q(xmax), q(ymin), q(ymax))
    }
}

/// Marked cells, row-major from `ymax` down, columns from `xmin` right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RasterGrid {
    pub window: Window,
    pub cols: usize,
    pub rows: usize,
    pub cells: Vec<Vec<bool>>,
}

/// `{"window": {...}, "res": [cols, rows], "rows": ["#..#", ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RasterJson {
    pub window: WindowJson,
    pub res: [usize; 2],
    pub rows: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WindowJson {
    pub xmin: String,
    pub xmax: String,
    pub ymin: String,
    pub ymax: String,
}

fn corner(lo: &BigRational, hi: &BigRational, k: usize, steps: usize) -> BigRational {
    lo + (hi - lo) * BigRational::new(BigInt::from(k), BigInt::from(steps))
}

pub fn raster_plane_curve(f: &Polynomial, window: &Window, cols: usize, rows: usize) -> Result<RasterGrid> {
    if f.ring().nvars() != 2 {
        return Err(Error::NotBivariate);
    }
    if !matches!(f.domain(), Domain::Rationals | Domain::Integers) {
        return Err(Error::UnsupportedDomain(f.domain().to_string(), "plotting needs Q coefficients".into()));
    }
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if cols < 2 || rows < 2 || window.xmin >= window.xmax || window.ymin >= window.ymax {
        return Err(Error::DegenerateWindow);
    }
    let xs: Vec<BigRational> = (0..=cols).map(|k| corner(&window.xmin, &window.xmax, k, cols)).collect();
    let ys: Vec<BigRational> = (0..=rows).map(|j| corner(&window.ymax, &window.ymin, j, rows)).collect();
    let signs: Vec<Vec<i8>> = ys
        .iter()
        .map(|y| {
            xs.iter()
                .map(|x| {
                    let v = f.eval_rational(&[x.clone(), y.clone()])?;
                    Ok(if v.is_zero() { 0 } else if v.is_positive() { 1 } else { -1 })
                })
                .collect::<Result<Vec<i8>>>()
        })
        .collect::<Result<_>>()?;
    let cells = (0..rows)
        .map(|j| {
            (0..cols)
                .map(|k| {
                    let s = [signs[j][k], signs[j][k + 1], signs[j + 1][k], signs[j + 1][k + 1]];
                    !(s.iter().all(|&v| v > 0) || s.iter().all(|&v| v < 0))
                })
                .collect()
        })
        .collect();
    Ok(RasterGrid { window: window.clone(), cols, rows, cells })
}

impl RasterGrid {
    pub fn ascii_rows(&self) -> Vec<String> {
        self.cells.iter().map(|row| row.iter().map(|&m| if m { '#' } else { '.' }).collect()).collect()
    }

    /// One line per row, each terminated by `\n`.
    pub fn to_ascii(&self) -> String {
        self.ascii_rows().into_iter().map(|r| r + "\n").collect()
    }

    pub fn to_svg(&self) -> String {
        let mut out = format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {} {}\" width=\"{}\" height=\"{}\">\n",
            self.cols,
            self.rows,
            self.cols * 8,
            self.rows * 8
        );
        for (j, row) in self.cells.iter().enumerate() {
            for (k, _) in row.iter().enumerate().filter(|(_, &m)| m) {
                out.push_str(&format!("<rect x=\"{k}\" y=\"{j}\" width=\"1\" height=\"1\"/>\n"));
            }
        }
        out.push_str("</svg>\n");
        out
    }

    pub fn to_json(&self) -> RasterJson {
        RasterJson {
            window: WindowJson {
                xmin: self.window.xmin.to_string(),
                xmax: self.window.xmax.to_string(),
                ymin: self.window.ymin.to_string(),
                ymax: self.window.ymax.to_string(),
            },
            res: [self.cols, self.rows],
            rows: self.ascii_rows(),
        }
    }

    pub fn marked_count(&self) -> usize {
        self.cells.iter().flatten().filter(|&&m| m).count()
    }

    /// `(row, col)` of every cell whose closed rectangle contains `(x, y)`.
    pub fn cells_containing(&self, x: &BigRational, y: &BigRational) -> Vec<(usize, usize)> {
        let w = &self.window;
        if x < &w.xmin || x > &w.xmax || y < &w.ymin || y > &w.ymax {
            return Vec::new();
        }
        let col_pos = (x - &w.xmin) * BigRational::from_integer(self.cols.into()) / (&w.xmax - &w.xmin);
        let row_pos = (&w.ymax - y) * BigRational::from_integer(self.rows.into()) / (&w.ymax - &w.ymin);
        let span = |pos: &BigRational, limit: usize| -> Vec<usize> {
            let fl = pos.floor().to_integer();
            let base: usize = fl.try_into().unwrap_or(0);
            let mut v = Vec::new();
            if pos.is_integer() && base > 0 {
                v.push(base - 1);
            }
            if base < limit {
                v.push(base);
            }
            v
        };
        let mut out = Vec::new();
        for r in span(&row_pos, self.rows) {
            for c in span(&col_pos, self.cols) {
                out.push((r, c));
            }
        }
        out
    }

    /// Marked cells 8-connected to `start`; empty if `start` is unmarked.
    pub fn component(&self, start: (usize, usize)) -> BTreeSet<(usize, usize)> {
        let mut seen = BTreeSet::new();
        if !self.cells[start.0][start.1] {
            return seen;
        }
        let mut queue = VecDeque::from([start]);
        seen.insert(start);
        while let Some((r, c)) = queue.pop_front() {
            for dr in -1i64..=1 {
                for dc in -1i64..=1 {
                    let (nr, nc) = (r as i64 + dr, c as i64 + dc);
                    if nr < 0 || nc < 0 || nr >= self.rows as i64 || nc >= self.cols as i64 {
                        continue;
                    }
                    let next = (nr as usize, nc as usize);
                    if self.cells[next.0][next.1] && seen.insert(next) {
                        queue.push_back(next);
                    }
                }
            }
        }
        seen
    }
}
