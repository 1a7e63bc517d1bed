//! Exact row reduction over the rationals with integer rows.
//!
//! Each stored row is primitive (content 1) with a positive pivot, and no
//! other row has a nonzero entry in its pivot column. That is reduced row
//! echelon form up to the positive scaling that clears denominators, so the
//! stored rows are a canonical basis of their span.

use num_integer::Integer;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Default)]
pub struct RowBasis {
    width: usize,
    rows: Vec<Vec<i64>>,
    pivots: Vec<usize>,
}

fn normalize(v: &mut [i64]) {
    let g = v.iter().fold(0i64, |g, &x| g.gcd(&x));
    if g > 1 {
        for x in v.iter_mut() {
            *x /= g;
        }
    }
}

/// `target = a * target - b * source`, checked.
fn combine(target: &mut [i64], a: i64, source: &[i64], b: i64) -> Result<()> {
    for (t, &s) in target.iter_mut().zip(source) {
        let lhs = t.checked_mul(a).ok_or(Error::Overflow)?;
        let rhs = s.checked_mul(b).ok_or(Error::Overflow)?;
        *t = lhs.checked_sub(rhs).ok_or(Error::Overflow)?;
    }
    Ok(())
}

impl RowBasis {
    pub fn new(width: usize) -> Self {
        RowBasis {
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// Eliminates every pivot column of the basis from `v`.
    pub fn reduce(&self, mut v: Vec<i64>) -> Result<Vec<i64>> {
        assert_eq!(v.len(), self.width, "row width mismatch");
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p];
            if c == 0 {
                continue;
            }
            let g = c.gcd(&row[p]);
            combine(&mut v, row[p] / g, row, c / g)?;
            normalize(&mut v);
        }
        Ok(v)
    }

    pub fn contains(&self, v: Vec<i64>) -> Result<bool> {
        Ok(self.reduce(v)?.iter().all(|&x| x == 0))
    }

    /// Adds `v` to the span. Returns the reduced new basis vector when the
    /// rank grew, `None` when `v` was already in the span.
    pub fn insert(&mut self, v: Vec<i64>) -> Result<Option<Vec<i64>>> {
        let mut v = self.reduce(v)?;
        let Some(p) = v.iter().position(|&x| x != 0) else {
            return Ok(None);
        };
        normalize(&mut v);
        if v[p] < 0 {
            v.iter_mut().for_each(|x| *x = -*x);
        }
        for row in self.rows.iter_mut() {
            let c = row[p];
            if c == 0 {
                continue;
            }
            let g = c.gcd(&v[p]);
            combine(row, v[p] / g, &v, c / g)?;
            normalize(row);
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v.clone());
        Ok(Some(v))
    }
}

/// Rank of a list of integer rows.
pub fn rank(rows: impl IntoIterator<Item = Vec<i64>>, width: usize) -> Result<usize> {
    let mut basis = RowBasis::new(width);
    for r in rows {
        basis.insert(r)?;
    }
    Ok(basis.rank())
}
