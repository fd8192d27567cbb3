//! Ready-made desk-scale groups used in tests, benchmarks and documentation.

use crate::exact::Cyclotomic;
use crate::group::{close_group, GeneratorInput, GradedGroup};
use crate::matrix::CycMatrix;

fn diag(values: &[Cyclotomic]) -> CycMatrix {
    let n = values.len();
    let mut rows = vec![vec![Cyclotomic::zero(); n]; n];
    for (i, v) in values.iter().enumerate() {
        rows[i][i] = v.clone();
    }
    CycMatrix::from_rows(rows)
}

fn zeta(k: i64, n: u32) -> Cyclotomic {
    Cyclotomic::root_of_unity(k, n)
}

/// Generators of the Z3 x Z3 example: the diagonal action on the four
/// variables (z1, z1b, z2, z2b), graded by the second factor, with the
/// standard two-dimensional target action.
pub fn z3xz3_generators() -> (GeneratorInput, GeneratorInput) {
    let one = Cyclotomic::one();
    let a = GeneratorInput {
        rho: diag(&[zeta(1, 3), zeta(2, 3), one.clone(), one.clone()]),
        eta: Some(diag(&[zeta(1, 3), one.clone()])),
        sigma: 0,
    };
    let b = GeneratorInput {
        rho: diag(&[one.clone(), one.clone(), zeta(1, 3), zeta(2, 3)]),
        eta: Some(diag(&[one.clone(), zeta(1, 3)])),
        sigma: 1,
    };
    (a, b)
}

/// The order-9 running example: Z3 x Z3 on C^2, realified to four variables,
/// m = 3, kernel Z3 x {1}.
pub fn z3xz3() -> GradedGroup {
    let (a, b) = z3xz3_generators();
    close_group(&[a, b], 3, 100).expect("valid preset")
}

/// Same group but with the target representation replaced by the realified
/// four-dimensional source matrices.
pub fn z3xz3_realified_eta() -> GradedGroup {
    let (mut a, mut b) = z3xz3_generators();
    a.eta = Some(a.rho.clone());
    b.eta = Some(b.rho.clone());
    close_group(&[a, b], 3, 100).expect("valid preset")
}

/// m = 2 (reversible) case: Z4 generated by diag(i, -i) on the pair (z, zb),
/// sigma of the generator is 1, so K = {I, -I}.
pub fn reversible_z4() -> GradedGroup {
    let g = GeneratorInput {
        rho: diag(&[zeta(1, 4), zeta(3, 4)]),
        eta: None,
        sigma: 1,
    };
    close_group(&[g], 2, 100).expect("valid preset")
}

/// m = 4 with trivial kernel: Z4 generated by diag(i, -i), sigma = 1.
pub fn cyclic_z4_m4() -> GradedGroup {
    let g = GeneratorInput {
        rho: diag(&[zeta(1, 4), zeta(3, 4)]),
        eta: None,
        sigma: 1,
    };
    close_group(&[g], 4, 100).expect("valid preset")
}

/// m = 3 with kernel of order 2: Z6 generated by diag(zeta_6, zeta_6^-1),
/// sigma = 1, so K = {I, -I}.
pub fn z6_m3() -> GradedGroup {
    let g = GeneratorInput {
        rho: diag(&[zeta(1, 6), zeta(5, 6)]),
        eta: None,
        sigma: 1,
    };
    close_group(&[g], 3, 100).expect("valid preset")
}

/// Non-diagonal m = 2 case: the coordinate swap on two variables with
/// sigma(swap) = 1 and trivial kernel.
pub fn swap_m2() -> GradedGroup {
    let swap = CycMatrix::from_rows(vec![
        vec![Cyclotomic::zero(), Cyclotomic::one()],
        vec![Cyclotomic::one(), Cyclotomic::zero()],
    ]);
    let g = GeneratorInput { rho: swap, eta: None, sigma: 1 };
    close_group(&[g], 2, 100).expect("valid preset")
}

/// m = 1 baseline: Z3 acting diagonally, sigma identically zero, K = Gamma.
pub fn z3_m1() -> GradedGroup {
    let g = GeneratorInput {
        rho: diag(&[zeta(1, 3), zeta(2, 3)]),
        eta: None,
        sigma: 0,
    };
    close_group(&[g], 1, 100).expect("valid preset")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preset_orders() {
        assert_eq!(z3xz3().order(), 9);
        assert_eq!(z3xz3_realified_eta().order(), 9);
        assert_eq!(reversible_z4().order(), 4);
        assert_eq!(reversible_z4().kernel_order(), 2);
        assert_eq!(cyclic_z4_m4().order(), 4);
        assert_eq!(cyclic_z4_m4().kernel_order(), 1);
        assert_eq!(z6_m3().order(), 6);
        assert_eq!(z6_m3().kernel_order(), 2);
        assert_eq!(swap_m2().order(), 2);
        assert_eq!(z3_m1().order(), 3);
        assert_eq!(z3_m1().kernel_order(), 3);
    }
}
