//! Canonical reduction data for the power basis of Q(zeta_n).
//!
//! Residues are taken modulo the n-th cyclotomic polynomial Phi_n, so every
//! value is represented on the basis {zeta^e : 0 <= e < phi(n)}. The tables
//! here are pure functions of the conductor; a process-wide memo avoids
//! recomputing them in hot loops.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num::{BigInt, One, Zero};

/// Reduction table for one conductor.
pub(crate) struct ConductorTable {
    pub phi: usize,
    /// zeta^p expressed on the power basis, for 0 <= p < table_len.
    /// Rows have length `phi`; entries are integers since Phi_n is monic.
    pub residues: Vec<Vec<BigInt>>,
}

impl ConductorTable {
    fn build(n: u32) -> Self {
        let cyc = cyclotomic_polynomial(n);
        let phi = cyc.len() - 1;
        debug_assert_eq!(phi as u32, euler_phi(n));
        // x^phi = -(c_0 + c_1 x + ... + c_{phi-1} x^{phi-1}) mod Phi_n
        let table_len = (n as usize).max(2 * phi.max(1) - 1);
        let mut residues: Vec<Vec<BigInt>> = Vec::with_capacity(table_len);
        for p in 0..table_len {
            if p < phi {
                let mut row = vec![BigInt::zero(); phi];
                row[p] = BigInt::one();
                residues.push(row);
            } else {
                let prev = &residues[p - 1];
                let mut row = vec![BigInt::zero(); phi];
                let carry = prev[phi - 1].clone();
                for i in 1..phi {
                    row[i] = prev[i - 1].clone();
                }
                if !carry.is_zero() {
                    for i in 0..phi {
                        row[i] -= &carry * &cyc[i];
                    }
                }
                residues.push(row);
            }
        }
        ConductorTable { phi, residues }
    }
}

/// Shared, lazily built reduction tables keyed by conductor. Tables are
/// immutable once built, so concurrent readers only contend on the map lock.
pub(crate) fn table(n: u32) -> Arc<ConductorTable> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<ConductorTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().expect("conductor table cache poisoned");
    guard
        .entry(n)
        .or_insert_with(|| Arc::new(ConductorTable::build(n)))
        .clone()
}

pub(crate) fn euler_phi(n: u32) -> u32 {
    assert!(n >= 1);
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Ascending coefficients of Phi_n, computed as the exact quotient of x^n - 1
/// by the product of Phi_d over proper divisors d of n.
pub(crate) fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    assert!(n >= 1);
    let mut memo: HashMap<u32, Vec<BigInt>> = HashMap::new();
    memo.insert(1, vec![-BigInt::one(), BigInt::one()]);
    let mut divisors: Vec<u32> = (1..=n).filter(|d| n % d == 0).collect();
    divisors.sort_unstable();
    for &d in &divisors {
        if memo.contains_key(&d) {
            continue;
        }
        // x^d - 1
        let mut num = vec![BigInt::zero(); d as usize + 1];
        num[0] = -BigInt::one();
        num[d as usize] = BigInt::one();
        for e in divisors.iter().filter(|&&e| e < d && d % e == 0) {
            num = poly_div_exact(&num, &memo[e]);
        }
        memo.insert(d, num);
    }
    memo.remove(&n).unwrap()
}

/// Exact division of integer polynomials with a monic divisor.
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    debug_assert!(den.last().map(|c| c.is_one()).unwrap_or(false));
    let mut rem: Vec<BigInt> = num.to_vec();
    let dn = den.len() - 1;
    let qn = rem.len() - 1 - dn;
    let mut quot = vec![BigInt::zero(); qn + 1];
    for k in (0..=qn).rev() {
        let c = rem[k + dn].clone();
        if !c.is_zero() {
            for (i, d) in den.iter().enumerate() {
                rem[k + i] -= &c * d;
            }
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()), "non-exact division");
    quot
}
