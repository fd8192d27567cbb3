//! Truncated power series: cyclotomic-coefficient series for intermediate
//! Molien sums and the integer series they must collapse to.

use std::fmt;

use num::ToPrimitive;

use crate::error::{Error, Result};
use crate::exact::{Cyclotomic, Rational};

/// Truncated series with cyclotomic coefficients, indexed 0..=dmax.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycSeries {
    pub coeffs: Vec<Cyclotomic>,
}

impl CycSeries {
    pub fn zero(dmax: usize) -> Self {
        CycSeries { coeffs: vec![Cyclotomic::zero(); dmax + 1] }
    }

    pub fn dmax(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Truncation of a polynomial given by ascending coefficients.
    pub fn from_poly(poly: &[Cyclotomic], dmax: usize) -> Self {
        let mut s = CycSeries::zero(dmax);
        for (i, c) in poly.iter().take(dmax + 1).enumerate() {
            s.coeffs[i] = c.clone();
        }
        s
    }

    pub fn add(&self, other: &CycSeries) -> CycSeries {
        assert_eq!(self.dmax(), other.dmax());
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.add(b))
            .collect();
        CycSeries { coeffs }
    }

    pub fn scale(&self, c: &Cyclotomic) -> CycSeries {
        CycSeries { coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect() }
    }

    pub fn scale_rational(&self, r: &Rational) -> CycSeries {
        CycSeries { coeffs: self.coeffs.iter().map(|a| a.scale_rational(r)).collect() }
    }

    pub fn mul_trunc(&self, other: &CycSeries) -> CycSeries {
        let dmax = self.dmax().min(other.dmax());
        let mut out = CycSeries::zero(dmax);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() || i > dmax {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j > dmax {
                    break;
                }
                if !b.is_zero() {
                    out.coeffs[i + j] = out.coeffs[i + j].add(&a.mul(b));
                }
            }
        }
        out
    }

    /// Multiplicative inverse as a truncated series; the constant term must
    /// be nonzero.
    pub fn invert(&self) -> Option<CycSeries> {
        let a0 = self.coeffs.first()?;
        let inv0 = a0.inv()?;
        let dmax = self.dmax();
        let mut out = CycSeries::zero(dmax);
        out.coeffs[0] = inv0.clone();
        for k in 1..=dmax {
            let mut acc = Cyclotomic::zero();
            for i in 1..=k {
                if !self.coeffs[i].is_zero() {
                    acc = acc.add(&self.coeffs[i].mul(&out.coeffs[k - i]));
                }
            }
            out.coeffs[k] = acc.mul(&inv0).neg();
        }
        Some(out)
    }

    /// Collapse to an integer series; every coefficient must be a nonnegative
    /// integer.
    pub fn try_into_int_series(&self) -> Result<IntSeries> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for (d, c) in self.coeffs.iter().enumerate() {
            let n = c
                .to_integer()
                .map_err(|_| Error::Internal(format!(
                    "non-integer series coefficient {c} at degree {d}"
                )))?;
            let v = n.to_i64().ok_or_else(|| {
                Error::Internal(format!("series coefficient at degree {d} overflows i64"))
            })?;
            if v < 0 {
                return Err(Error::Internal(format!(
                    "negative series coefficient {v} at degree {d}"
                )));
            }
            coeffs.push(v);
        }
        Ok(IntSeries { coeffs })
    }
}

/// Hilbert–Poincaré series truncated at dmax, with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntSeries {
    pub coeffs: Vec<i64>,
}

impl IntSeries {
    pub fn new(coeffs: Vec<i64>) -> Self {
        IntSeries { coeffs }
    }

    pub fn dmax(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, d: usize) -> i64 {
        self.coeffs.get(d).copied().unwrap_or(0)
    }

    /// Comparison contract: equality up to the common truncation degree.
    pub fn agrees_with(&self, other: &IntSeries) -> bool {
        let d = self.dmax().min(other.dmax());
        (0..=d).all(|i| self.coeffs[i] == other.coeffs[i])
    }

    pub fn csv(&self) -> String {
        let mut out = String::from("degree,dim\n");
        for (d, c) in self.coeffs.iter().enumerate() {
            out.push_str(&format!("{d},{c}\n"));
        }
        out
    }
}

impl fmt::Display for IntSeries {
    /// `1 + 2*t^2 + 4*t^3 + ...`; zero terms are omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        for (d, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let part = match (d, c) {
                (0, _) => format!("{c}"),
                (1, 1) => "t".to_string(),
                (1, _) => format!("{c}*t"),
                (_, 1) => format!("t^{d}"),
                _ => format!("{c}*t^{d}"),
            };
            parts.push(part);
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_series_inverse() {
        // 1/(1 - t) = 1 + t + t^2 + ...
        let poly = vec![Cyclotomic::one(), Cyclotomic::from_integer(-1)];
        let s = CycSeries::from_poly(&poly, 5).invert().unwrap();
        let ints = s.try_into_int_series().unwrap();
        assert_eq!(ints.coeffs, vec![1, 1, 1, 1, 1, 1]);
    }

    #[test]
    fn inverse_times_original_is_one() {
        let z = Cyclotomic::root_of_unity(1, 3);
        let poly = vec![Cyclotomic::one(), z.neg(), Cyclotomic::from_integer(2)];
        let s = CycSeries::from_poly(&poly, 6);
        let inv = s.invert().unwrap();
        let prod = s.mul_trunc(&inv).try_into_int_series().unwrap();
        assert_eq!(prod.coeffs, vec![1, 0, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn int_series_display() {
        let s = IntSeries::new(vec![1, 0, 2, 4, 3, 8, 12]);
        assert_eq!(s.to_string(), "1 + 2*t^2 + 4*t^3 + 3*t^4 + 8*t^5 + 12*t^6");
        let t = IntSeries::new(vec![0, 1, 1, 2]);
        assert_eq!(t.to_string(), "t + t^2 + 2*t^3");
        assert_eq!(IntSeries::new(vec![0, 0]).to_string(), "0");
    }

    #[test]
    fn agreement_up_to_common_truncation() {
        let a = IntSeries::new(vec![1, 2, 3]);
        let b = IntSeries::new(vec![1, 2, 3, 9]);
        assert!(a.agrees_with(&b));
        assert!(!a.agrees_with(&IntSeries::new(vec![1, 2, 4])));
    }

    #[test]
    fn csv_format() {
        let s = IntSeries::new(vec![1, 0, 2]);
        assert_eq!(s.csv(), "degree,dim\n0,1\n1,0\n2,2\n");
    }
}
