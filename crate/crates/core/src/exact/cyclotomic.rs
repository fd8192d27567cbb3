//! Exact elements of cyclotomic fields Q(zeta_n).
//!
//! A value is stored as its canonical residue modulo the n-th cyclotomic
//! polynomial: a sparse map from basis exponent e (0 <= e < phi(n)) to a
//! rational coefficient. Within one conductor the representation is a unique
//! normal form, so equality of values is equality of maps; across conductors
//! both operands are first embedded into the lcm conductor.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

use super::reduce;
use crate::error::{Error, Result};

/// Exact rational scalar used for all coefficients.
pub type Rational = BigRational;

#[derive(Clone, Debug)]
pub struct Cyclotomic {
    conductor: u32,
    coeffs: BTreeMap<u32, Rational>,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic { conductor: 1, coeffs: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Cyclotomic::from_integer(1)
    }

    pub fn from_rational(r: Rational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !r.is_zero() {
            coeffs.insert(0, r);
        }
        Cyclotomic { conductor: 1, coeffs }.normalized()
    }

    pub fn from_integer(k: i64) -> Self {
        Cyclotomic::from_rational(Rational::from_integer(BigInt::from(k)))
    }

    /// zeta_n^k in canonical reduced form. The stored conductor divides `n`
    /// (the exponent is reduced by gcd before the table lookup).
    pub fn root_of_unity(k: i64, n: u32) -> Self {
        assert!(n >= 1, "conductor must be positive");
        let k = k.rem_euclid(n as i64) as u32;
        let g = k.gcd(&n);
        let (k, n) = if g > 0 { (k / g, n / g) } else { (k, n) };
        let table = reduce::table(n);
        let mut coeffs = BTreeMap::new();
        for (e, c) in table.residues[k as usize].iter().enumerate() {
            if !c.is_zero() {
                coeffs.insert(e as u32, Rational::from_integer(c.clone()));
            }
        }
        Cyclotomic { conductor: n, coeffs }.normalized()
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1
            && self.coeffs.get(&0).map(|c| c.is_one()).unwrap_or(false)
    }

    /// The rational value, if this element lies in Q.
    pub fn to_rational(&self) -> Option<Rational> {
        if self.coeffs.is_empty() {
            return Some(Rational::zero());
        }
        if self.coeffs.len() == 1 {
            if let Some(c) = self.coeffs.get(&0) {
                return Some(c.clone());
            }
        }
        None
    }

    /// The integer value; fails on non-rational or non-integral values.
    pub fn to_integer(&self) -> Result<BigInt> {
        match self.to_rational() {
            Some(r) if r.is_integer() => Ok(r.to_integer()),
            _ => Err(Error::NonInteger(self.to_string())),
        }
    }

    fn normalized(mut self) -> Self {
        self.coeffs.retain(|_, c| !c.is_zero());
        // Rational values always live at conductor 1. The exponent-0 basis
        // element means the same thing at every conductor, so this keeps the
        // representation canonical across arithmetic that lands in Q.
        if self.coeffs.is_empty() || (self.coeffs.len() == 1 && self.coeffs.contains_key(&0)) {
            self.conductor = 1;
        }
        self
    }

    /// Embed into Q(zeta_m) for a multiple m of the conductor and re-reduce.
    pub fn raised_to_conductor(&self, m: u32) -> Self {
        if m == self.conductor {
            return self.clone();
        }
        assert!(m % self.conductor == 0, "target conductor must be a multiple");
        let stride = m / self.conductor;
        let table = reduce::table(m);
        let mut dense = vec![Rational::zero(); table.phi];
        for (&e, c) in &self.coeffs {
            let row = &table.residues[(e * stride) as usize];
            for (i, r) in row.iter().enumerate() {
                if !r.is_zero() {
                    dense[i] += c * Rational::from_integer(r.clone());
                }
            }
        }
        Cyclotomic::from_dense(m, dense)
    }

    fn from_dense(conductor: u32, dense: Vec<Rational>) -> Self {
        let mut coeffs = BTreeMap::new();
        for (e, c) in dense.into_iter().enumerate() {
            if !c.is_zero() {
                coeffs.insert(e as u32, c);
            }
        }
        Cyclotomic { conductor, coeffs }.normalized()
    }

    fn to_dense(&self, phi: usize) -> Vec<Rational> {
        let mut dense = vec![Rational::zero(); phi];
        for (&e, c) in &self.coeffs {
            dense[e as usize] = c.clone();
        }
        dense
    }

    fn unify(&self, other: &Self) -> (Self, Self, u32) {
        if self.conductor == other.conductor {
            return (self.clone(), other.clone(), self.conductor);
        }
        let m = self.conductor.lcm(&other.conductor);
        (self.raised_to_conductor(m), other.raised_to_conductor(m), m)
    }

    pub fn add(&self, other: &Self) -> Self {
        let (mut a, b, m) = self.unify(other);
        for (e, c) in b.coeffs {
            let entry = a.coeffs.entry(e).or_insert_with(Rational::zero);
            *entry += c;
        }
        a.conductor = m;
        a.normalized()
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|(&e, c)| (e, -c.clone())).collect();
        Cyclotomic { conductor: self.conductor, coeffs }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Cyclotomic::zero();
        }
        // Pure rational factors avoid the conductor dance entirely.
        if let Some(r) = self.to_rational() {
            return other.scale_rational(&r);
        }
        if let Some(r) = other.to_rational() {
            return self.scale_rational(&r);
        }
        let (a, b, m) = self.unify(other);
        let table = reduce::table(m);
        let phi = table.phi;
        let mut conv = vec![Rational::zero(); 2 * phi - 1];
        for (&ea, ca) in &a.coeffs {
            for (&eb, cb) in &b.coeffs {
                conv[(ea + eb) as usize] += ca * cb;
            }
        }
        let mut dense = vec![Rational::zero(); phi];
        for (p, c) in conv.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if p < phi {
                dense[p] += c;
            } else {
                for (i, r) in table.residues[p].iter().enumerate() {
                    if !r.is_zero() {
                        dense[i] += &c * Rational::from_integer(r.clone());
                    }
                }
            }
        }
        Cyclotomic::from_dense(m, dense)
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Cyclotomic::zero();
        }
        let coeffs = self.coeffs.iter().map(|(&e, c)| (e, c * r)).collect();
        Cyclotomic { conductor: self.conductor, coeffs }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// Phi_n over Q[x]. Returns `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if let Some(r) = self.to_rational() {
            return Some(Cyclotomic::from_rational(r.recip()));
        }
        let table = reduce::table(self.conductor);
        let phi = table.phi;
        let f = self.to_dense(phi);
        let mut modulus: Vec<Rational> = reduce::cyclotomic_polynomial(self.conductor)
            .into_iter()
            .map(Rational::from_integer)
            .collect();
        trim(&mut modulus);
        let mut f = f;
        trim(&mut f);
        // Invariants: r0 = s0*f mod Phi, r1 = s1*f mod Phi.
        let (mut r0, mut r1) = (modulus, f);
        let (mut s0, mut s1) = (vec![], vec![Rational::one()]);
        while !r1.is_empty() {
            let (q, rem) = poly_divmod(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = r1;
            r1 = rem;
            s0 = s1;
            s1 = s2;
        }
        // r0 is a nonzero constant gcd since Phi_n is irreducible over Q.
        debug_assert_eq!(r0.len(), 1);
        let scale = r0[0].recip();
        let mut dense = vec![Rational::zero(); phi];
        for (p, c) in s0.iter().enumerate() {
            dense[p] = c * &scale;
        }
        Some(Cyclotomic::from_dense(self.conductor, dense))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        match other.inv() {
            Some(i) => Ok(self.mul(&i)),
            None => Err(Error::DivisionByZero),
        }
    }

    /// Complex conjugation, the field automorphism zeta_n -> zeta_n^(n-1).
    pub fn conj(&self) -> Self {
        if self.conductor == 1 {
            return self.clone();
        }
        let n = self.conductor;
        let table = reduce::table(n);
        let phi = table.phi;
        let mut dense = vec![Rational::zero(); phi];
        for (&e, c) in &self.coeffs {
            let p = ((e as u64 * (n as u64 - 1)) % n as u64) as usize;
            for (i, r) in table.residues[p].iter().enumerate() {
                if !r.is_zero() {
                    dense[i] += c * Rational::from_integer(r.clone());
                }
            }
        }
        Cyclotomic::from_dense(n, dense)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = Cyclotomic::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        result
    }

    /// Deterministic structural key. Only meaningful for values kept at one
    /// shared conductor, where the canonical form makes it a value key.
    pub(crate) fn write_key(&self, out: &mut String) {
        use fmt::Write;
        write!(out, "c{}", self.conductor).unwrap();
        for (e, c) in &self.coeffs {
            write!(out, ";{e}:{}/{}", c.numer(), c.denom()).unwrap();
        }
        out.push('|');
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (a, b, _) = self.unify(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

fn trim(p: &mut Vec<Rational>) {
    while p.last().map(|c| c.is_zero()).unwrap_or(false) {
        p.pop();
    }
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    trim(&mut out);
    out
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn poly_divmod(num: &[Rational], den: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = num.to_vec();
    if num.len() < den.len() {
        return (vec![], rem);
    }
    let lead = den.last().unwrap();
    let qn = num.len() - den.len();
    let mut quot = vec![Rational::zero(); qn + 1];
    for k in (0..=qn).rev() {
        let c = &rem[k + den.len() - 1] / lead;
        if !c.is_zero() {
            for (i, d) in den.iter().enumerate() {
                let prod = &c * d;
                rem[k + i] -= prod;
            }
        }
        quot[k] = c;
    }
    trim(&mut rem);
    trim(&mut quot);
    (quot, rem)
}

fn fmt_rational(r: &Rational, out: &mut String) {
    use fmt::Write;
    if r.is_integer() {
        write!(out, "{}", r.numer()).unwrap();
    } else {
        write!(out, "{}/{}", r.numer(), r.denom()).unwrap();
    }
}

impl fmt::Display for Cyclotomic {
    /// Renders in the `E(n)` grammar, terms ordered by exponent:
    /// `1/2 + E(4)`, `-E(3)^2`, `2*E(8)^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (i, (&e, c)) in self.coeffs.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mag = c.abs();
            if e == 0 {
                fmt_rational(&mag, &mut out);
            } else {
                if !mag.is_one() {
                    fmt_rational(&mag, &mut out);
                    out.push('*');
                }
                out.push_str(&format!("E({})", self.conductor));
                if e > 1 {
                    out.push_str(&format!("^{e}"));
                }
            }
        }
        write!(f, "{out}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zeta(n: u32) -> Cyclotomic {
        Cyclotomic::root_of_unity(1, n)
    }

    #[test]
    fn roots_of_unity_reduce() {
        assert!(Cyclotomic::root_of_unity(0, 5).is_one());
        // zeta_3 + zeta_3^2 = -1
        let s = zeta(3).add(&Cyclotomic::root_of_unity(2, 3));
        assert_eq!(s, Cyclotomic::from_integer(-1));
        // zeta_4^2 = -1
        assert_eq!(zeta(4).mul(&zeta(4)), Cyclotomic::from_integer(-1));
    }

    #[test]
    fn product_of_conjugate_factors() {
        // (1 + zeta_3)(1 + zeta_3^2) = 1 + zeta_3 + zeta_3^2 + 1 = 1
        let a = Cyclotomic::one().add(&zeta(3));
        let b = Cyclotomic::one().add(&Cyclotomic::root_of_unity(2, 3));
        assert!(a.mul(&b).is_one());
    }

    #[test]
    fn subtraction_and_division() {
        let z6 = zeta(6);
        assert!(z6.sub(&z6).is_zero());
        let x = Cyclotomic::from_integer(3).add(&zeta(8));
        assert!(x.div(&x).unwrap().is_one());
        assert!(matches!(
            x.div(&Cyclotomic::zero()),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn inverse_of_nonzero() {
        for n in [3u32, 4, 5, 8, 12] {
            let x = zeta(n).add(&Cyclotomic::from_integer(2));
            let inv = x.inv().unwrap();
            assert!(x.mul(&inv).is_one(), "inverse in Q(zeta_{n})");
        }
        assert!(Cyclotomic::zero().inv().is_none());
    }

    #[test]
    fn conjugation() {
        assert_eq!(zeta(3).conj(), Cyclotomic::root_of_unity(2, 3));
        let r = Cyclotomic::from_rational(Rational::new(BigInt::from(3), BigInt::from(7)));
        assert_eq!(r.conj(), r);
        // conj(1 + zeta_4) = 1 - zeta_4
        let x = Cyclotomic::one().add(&zeta(4));
        assert_eq!(x.conj(), Cyclotomic::one().sub(&zeta(4)));
        // involution
        assert_eq!(x.conj().conj(), x);
    }

    #[test]
    fn to_integer_conversion() {
        assert_eq!(Cyclotomic::from_integer(7).to_integer().unwrap(), BigInt::from(7));
        assert!(zeta(3).to_integer().is_err());
        let s = zeta(3)
            .add(&Cyclotomic::root_of_unity(2, 3))
            .add(&Cyclotomic::one());
        assert_eq!(s.to_integer().unwrap(), BigInt::from(0));
    }

    #[test]
    fn cross_conductor_equality() {
        // zeta_6^2 has conductor 3 after gcd reduction; build the same value
        // at conductor 6 by multiplying.
        let a = Cyclotomic::root_of_unity(2, 6);
        let b = zeta(6).mul(&zeta(6));
        assert_eq!(a, b);
        assert_eq!(a.conductor(), 3);
    }

    #[test]
    fn root_of_unity_power_sums() {
        // sum of zeta_n^(ik) over i is 0 unless k = 0 mod n, where it is n.
        for n in [2u32, 3, 4, 6] {
            for k in 0..n {
                let mut sum = Cyclotomic::zero();
                for i in 0..n {
                    sum = sum.add(&Cyclotomic::root_of_unity((i * k) as i64, n));
                }
                let expected = if k == 0 { n as i64 } else { 0 };
                assert_eq!(sum, Cyclotomic::from_integer(expected), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn display_grammar() {
        assert_eq!(Cyclotomic::zero().to_string(), "0");
        assert_eq!(Cyclotomic::from_integer(-3).to_string(), "-3");
        assert_eq!(zeta(3).to_string(), "E(3)");
        assert_eq!(Cyclotomic::root_of_unity(2, 3).to_string(), "-1 - E(3)");
        let half = Cyclotomic::from_rational(Rational::new(BigInt::from(1), BigInt::from(2)));
        assert_eq!(half.mul(&zeta(4)).to_string(), "1/2*E(4)");
        assert_eq!(Cyclotomic::one().add(&zeta(4)).to_string(), "1 + E(4)");
    }
}
