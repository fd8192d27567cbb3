//! Exact linear algebra over the cyclotomic field: an incremental row space
//! for span/membership queries and a fraction-free rank for the dimension
//! oracle.

use crate::exact::Cyclotomic;

/// Row space in reduced echelon form, built incrementally. Pivot entries are
/// normalized to one and eliminated from all other rows, so membership is a
/// single reduction pass. All arithmetic is exact.
pub struct RowSpace {
    ncols: usize,
    /// Rows sorted by pivot column; `pivots[i]` is the pivot column of row i.
    rows: Vec<Vec<Cyclotomic>>,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(ncols: usize) -> Self {
        RowSpace { ncols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, row: &mut [Cyclotomic]) {
        for (r, &p) in self.rows.iter().zip(&self.pivots) {
            if row[p].is_zero() {
                continue;
            }
            let factor = row[p].clone();
            for (j, v) in r.iter().enumerate() {
                if !v.is_zero() {
                    row[j] = row[j].sub(&factor.mul(v));
                }
            }
        }
    }

    pub fn contains(&self, row: &[Cyclotomic]) -> bool {
        assert_eq!(row.len(), self.ncols);
        let mut work = row.to_vec();
        self.reduce(&mut work);
        work.iter().all(|c| c.is_zero())
    }

    /// Inserts the row; returns true when it enlarges the space.
    pub fn insert(&mut self, row: Vec<Cyclotomic>) -> bool {
        assert_eq!(row.len(), self.ncols);
        let mut work = row;
        self.reduce(&mut work);
        let pivot = match work.iter().position(|c| !c.is_zero()) {
            Some(p) => p,
            None => return false,
        };
        let inv = work[pivot].inv().expect("nonzero pivot");
        for c in work.iter_mut() {
            if !c.is_zero() {
                *c = c.mul(&inv);
            }
        }
        // Eliminate the new pivot column from existing rows.
        for r in self.rows.iter_mut() {
            if r[pivot].is_zero() {
                continue;
            }
            let factor = r[pivot].clone();
            for (j, v) in work.iter().enumerate() {
                if !v.is_zero() {
                    r[j] = r[j].sub(&factor.mul(v));
                }
            }
        }
        let at = self.pivots.partition_point(|&p| p < pivot);
        self.rows.insert(at, work);
        self.pivots.insert(at, pivot);
        true
    }
}

/// Rank by fraction-free (Bareiss) elimination. Each step divides by the
/// previous pivot, which is exact, and keeps intermediate growth polynomial.
pub fn rank_fraction_free(mut mat: Vec<Vec<Cyclotomic>>) -> usize {
    if mat.is_empty() {
        return 0;
    }
    let ncols = mat[0].len();
    let mut rank = 0;
    let mut prev = Cyclotomic::one();
    let mut col = 0;
    while col < ncols && rank < mat.len() {
        let pivot_row = (rank..mat.len()).find(|&r| !mat[r][col].is_zero());
        let Some(pr) = pivot_row else {
            col += 1;
            continue;
        };
        mat.swap(rank, pr);
        let prev_inv = prev.inv().expect("previous pivot is nonzero");
        for r in rank + 1..mat.len() {
            for c in col + 1..ncols {
                let t = mat[rank][col]
                    .mul(&mat[r][c])
                    .sub(&mat[r][col].mul(&mat[rank][c]));
                mat[r][c] = t.mul(&prev_inv);
            }
            mat[r][col] = Cyclotomic::zero();
        }
        prev = mat[rank][col].clone();
        rank += 1;
        col += 1;
    }
    rank
}
