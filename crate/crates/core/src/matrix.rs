//! Small dense matrices over the cyclotomic field.

use crate::exact::Cyclotomic;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycMatrix {
    nrows: usize,
    ncols: usize,
    data: Vec<Cyclotomic>,
}

impl CycMatrix {
    pub fn from_rows(rows: Vec<Vec<Cyclotomic>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged matrix");
        let data = rows.into_iter().flatten().collect();
        CycMatrix { nrows, ncols, data }
    }

    pub fn identity(n: usize) -> Self {
        let mut data = vec![Cyclotomic::zero(); n * n];
        for i in 0..n {
            data[i * n + i] = Cyclotomic::one();
        }
        CycMatrix { nrows: n, ncols: n, data }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn is_square(&self) -> bool {
        self.nrows == self.ncols
    }

    pub fn entry(&self, i: usize, j: usize) -> &Cyclotomic {
        &self.data[i * self.ncols + j]
    }

    pub fn mul(&self, other: &CycMatrix) -> CycMatrix {
        assert_eq!(self.ncols, other.nrows, "dimension mismatch");
        let mut data = Vec::with_capacity(self.nrows * other.ncols);
        for i in 0..self.nrows {
            for j in 0..other.ncols {
                let mut acc = Cyclotomic::zero();
                for k in 0..self.ncols {
                    let a = self.entry(i, k);
                    if a.is_zero() {
                        continue;
                    }
                    acc = acc.add(&a.mul(other.entry(k, j)));
                }
                data.push(acc);
            }
        }
        CycMatrix { nrows: self.nrows, ncols: other.ncols, data }
    }

    pub fn trace(&self) -> Cyclotomic {
        assert!(self.is_square());
        let mut acc = Cyclotomic::zero();
        for i in 0..self.nrows {
            acc = acc.add(self.entry(i, i));
        }
        acc
    }

    /// Re-express every entry in Q(zeta_m). Keeping a whole group at one
    /// conductor makes the structural key below a value key.
    pub fn raised_to_conductor(&self, m: u32) -> CycMatrix {
        let data = self
            .data
            .iter()
            .map(|c| if c.is_zero() { c.clone() } else { c.raised_to_conductor(m) })
            .collect();
        CycMatrix { nrows: self.nrows, ncols: self.ncols, data }
    }

    pub fn max_conductor(&self) -> u32 {
        self.data.iter().map(|c| c.conductor()).max().unwrap_or(1)
    }

    pub(crate) fn write_key(&self, out: &mut String) {
        use std::fmt::Write;
        write!(out, "{}x{}[", self.nrows, self.ncols).unwrap();
        for c in &self.data {
            c.write_key(out);
        }
        out.push(']');
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Cyclotomic as C;

    fn diag(values: &[C]) -> CycMatrix {
        let n = values.len();
        let mut rows = vec![vec![C::zero(); n]; n];
        for (i, v) in values.iter().enumerate() {
            rows[i][i] = v.clone();
        }
        CycMatrix::from_rows(rows)
    }

    #[test]
    fn multiplication_and_trace() {
        let z3 = C::root_of_unity(1, 3);
        let a = diag(&[z3.clone(), z3.conj()]);
        let sq = a.mul(&a);
        assert_eq!(*sq.entry(0, 0), C::root_of_unity(2, 3));
        // trace of diag(z3, conj z3) is z3 + z3^2 = -1
        assert_eq!(a.trace(), C::from_integer(-1));
        let id = CycMatrix::identity(2);
        assert_eq!(a.mul(&id), a);
    }

    #[test]
    fn swap_matrix_square_is_identity() {
        let swap = CycMatrix::from_rows(vec![
            vec![C::zero(), C::one()],
            vec![C::one(), C::zero()],
        ]);
        assert_eq!(swap.mul(&swap), CycMatrix::identity(2));
    }
}
