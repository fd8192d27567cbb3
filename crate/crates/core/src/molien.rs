//! Hilbert–Poincaré series of the graded modules of relative invariants and
//! relative equivariants, via three independent routes:
//!
//! 1. [`molien_series`]: the averaged sum of sigma^j(gamma^-1) (and the
//!    target character at gamma^-1) over 1/det(I - t rho(gamma)), with the
//!    determinant expanded exactly and inverted as a truncated series;
//! 2. [`dims_by_characters`]: the symmetric-power character recursion, both
//!    as a whole-group average and split over the cosets delta^k K;
//! 3. [`dim_oracle`]: brute-force nullity of the defining linear constraints
//!    on the monomial basis, by fraction-free elimination.
//!
//! All three must agree coefficientwise; disagreement signals a bug, not a
//! tolerance issue, since every step is exact.

use crate::error::{Error, Result};
use crate::exact::{rational, Cyclotomic};
use crate::exec;
use crate::group::{GradedGroup, Repr};
use crate::linalg::rank_fraction_free;
use crate::poly::{act_on_map, act_on_poly, MonoIndex, Poly, PolyMap};
use crate::series::{CycSeries, IntSeries};

/// Which module the series counts: relative invariant polynomials or
/// relative equivariant polynomial maps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Invariant,
    Equivariant,
}

/// det(I - t rho(gamma)) as ascending coefficients in t, degree <= n.
/// Expansion by minors over column subsets, memoized per subset.
fn det_one_minus_t_rho(group: &GradedGroup, gamma: usize) -> Vec<Cyclotomic> {
    let rho = &group.element(gamma).rho;
    let n = group.source_dim();
    assert!(n <= 20, "determinant expansion limited to small dimensions");
    // entry (i, j) is delta_ij - t*rho_ij
    let entry = |i: usize, j: usize| -> (Cyclotomic, Cyclotomic) {
        let c0 = if i == j { Cyclotomic::one() } else { Cyclotomic::zero() };
        (c0, rho.entry(i, j).neg())
    };
    let full = (1usize << n) - 1;
    let mut memo: Vec<Option<Vec<Cyclotomic>>> = vec![None; full + 1];
    memo[0] = Some(vec![Cyclotomic::one()]);
    for mask in 1..=full {
        let k = (mask as u32).count_ones() as usize; // rows 0..k against columns in mask
        let row = k - 1;
        let mut acc = vec![Cyclotomic::zero(); k + 1];
        // cofactor sign (-1)^(row + position) along the expansion row
        let mut sign_neg = row % 2 == 1;
        let mut cols = mask;
        while cols != 0 {
            let col = cols.trailing_zeros() as usize;
            cols &= cols - 1;
            let (c0, c1) = entry(row, col);
            if !c0.is_zero() || !c1.is_zero() {
                let sub = memo[mask & !(1 << col)]
                    .as_ref()
                    .expect("submask computed earlier")
                    .clone();
                for (d, s) in sub.iter().enumerate() {
                    if s.is_zero() {
                        continue;
                    }
                    for (deg, c) in [(d, &c0), (d + 1, &c1)] {
                        if c.is_zero() {
                            continue;
                        }
                        let term = s.mul(c);
                        acc[deg] = if sign_neg {
                            acc[deg].sub(&term)
                        } else {
                            acc[deg].add(&term)
                        };
                    }
                }
            }
            sign_neg = !sign_neg;
        }
        memo[mask] = Some(acc);
    }
    memo[full].take().expect("full determinant computed")
}

fn molien_weight(group: &GradedGroup, gamma: usize, j: u32, kind: Kind) -> Cyclotomic {
    // The integrand weights are evaluated at the group inverse, found by
    // table lookup.
    let inv = group.inverse_index(gamma);
    let mut w = group.sigma_power_value(inv, j);
    if kind == Kind::Equivariant {
        w = w.mul(&group.character(inv, Repr::Target));
    }
    w
}

fn molien_sum(
    group: &GradedGroup,
    indices: &[usize],
    j: u32,
    kind: Kind,
    dmax: usize,
    sequential: bool,
) -> Result<IntSeries> {
    let per_element = |&gamma: &usize| -> CycSeries {
        let det = det_one_minus_t_rho(group, gamma);
        let inv = CycSeries::from_poly(&det, dmax)
            .invert()
            .expect("det(I - t rho) has constant term 1");
        inv.scale(&molien_weight(group, gamma, j, kind))
    };
    let add = |a: CycSeries, b: CycSeries| a.add(&b);
    let zero = CycSeries::zero(dmax);
    let total = if sequential {
        exec::map_sum_seq(indices, per_element, add, zero)
    } else {
        exec::map_sum(indices, per_element, add, zero)
    };
    let averaged = total.scale_rational(&rational(1, indices.len() as i64));
    averaged.try_into_int_series().map_err(|e| match e {
        Error::Internal(msg) => {
            Error::Internal(format!("inconsistent group/representation input: {msg}"))
        }
        other => other,
    })
}

/// Molien series of the sigma^j-relative module over the whole group, as the
/// normalized group sum of the exact integrand.
pub fn molien_series(group: &GradedGroup, j: u32, kind: Kind, dmax: usize) -> Result<IntSeries> {
    let indices: Vec<usize> = (0..group.order()).collect();
    molien_sum(group, &indices, j, kind, dmax, false)
}

/// Sequential variant of [`molien_series`], for benchmark comparison.
pub fn molien_series_seq(
    group: &GradedGroup,
    j: u32,
    kind: Kind,
    dmax: usize,
) -> Result<IntSeries> {
    let indices: Vec<usize> = (0..group.order()).collect();
    molien_sum(group, &indices, j, kind, dmax, true)
}

/// Series of the kernel's own invariants/equivariants (the j-sum rule target
/// and the completeness reference for the K-level generator computations).
pub fn k_molien_series(group: &GradedGroup, kind: Kind, dmax: usize) -> Result<IntSeries> {
    let kernel: Vec<usize> = group.kernel_indices().to_vec();
    // sigma^0 restricted to K is trivial, so j = 0 gives the plain series.
    molien_sum(group, &kernel, 0, kind, dmax, false)
}

/// Exact character table: the target trace per element and the source
/// symmetric-power traces chi_(d) per element for d = 0..=dmax.
#[derive(Clone, Debug)]
pub struct CharTable {
    pub target: Vec<Cyclotomic>,
    /// sym[gamma][d] = trace of the induced action of gamma on S^d V.
    pub sym: Vec<Vec<Cyclotomic>>,
}

/// chi_(d) by the recursion d*chi_(d)(gamma) = sum_i chi(gamma^(d-i))
/// chi_(i)(gamma), with chi the source-representation trace. The division by
/// d is exact.
pub fn sym_power_characters(group: &GradedGroup, dmax: usize) -> CharTable {
    let indices: Vec<usize> = (0..group.order()).collect();
    let rows = exec::map_collect(&indices, |&gamma| {
        // traces of rho at the powers gamma^1 .. gamma^dmax, via table lookup
        let mut power_traces = Vec::with_capacity(dmax);
        let mut cur = gamma;
        for p in 1..=dmax {
            if p > 1 {
                cur = group.mul_indices(cur, gamma);
            }
            power_traces.push(group.character(cur, Repr::Source));
        }
        let mut chi = Vec::with_capacity(dmax + 1);
        chi.push(Cyclotomic::one());
        for d in 1..=dmax {
            let mut acc = Cyclotomic::zero();
            for i in 0..d {
                acc = acc.add(&power_traces[d - i - 1].mul(&chi[i]));
            }
            chi.push(acc.scale_rational(&rational(1, d as i64)));
        }
        chi
    });
    let target = indices
        .iter()
        .map(|&gamma| group.character(gamma, Repr::Target))
        .collect();
    CharTable { target, sym: rows }
}

fn char_integrand(
    group: &GradedGroup,
    table: &CharTable,
    gamma: usize,
    j: u32,
    kind: Kind,
    d: usize,
) -> Cyclotomic {
    let mut v = group
        .sigma_power_value(gamma, j)
        .mul(&table.sym[gamma][d]);
    if kind == Kind::Equivariant {
        v = v.mul(&table.target[gamma]);
    }
    v
}

/// Graded dimensions from the character formulae, computed both as the
/// whole-group average of sigma^j(gamma) chi_(d)(gamma) (chi(gamma)) and in
/// the coset-split form (1/m) sum_k over delta^k K. The two must agree.
pub fn dims_by_characters(
    group: &GradedGroup,
    j: u32,
    kind: Kind,
    dmax: usize,
) -> Result<IntSeries> {
    let table = sym_power_characters(group, dmax);
    dims_with_table(group, &table, j, kind)
}

pub(crate) fn dims_with_table(
    group: &GradedGroup,
    table: &CharTable,
    j: u32,
    kind: Kind,
) -> Result<IntSeries> {
    let dmax = table.sym[0].len() - 1;
    let order = group.order() as i64;

    let mut whole = CycSeries::zero(dmax);
    for gamma in 0..group.order() {
        for d in 0..=dmax {
            whole.coeffs[d] = whole.coeffs[d].add(&char_integrand(group, table, gamma, j, kind, d));
        }
    }
    let whole = whole
        .scale_rational(&rational(1, order))
        .try_into_int_series()?;

    let reps = group.coset_representatives();
    let mut split = CycSeries::zero(dmax);
    for &rep in &reps {
        for &kappa in group.kernel_indices() {
            let gamma = group.mul_indices(rep, kappa);
            for d in 0..=dmax {
                split.coeffs[d] =
                    split.coeffs[d].add(&char_integrand(group, table, gamma, j, kind, d));
            }
        }
    }
    let split = split
        .scale_rational(&rational(1, group.modulus() as i64))
        .scale_rational(&rational(1, group.kernel_order() as i64))
        .try_into_int_series()?;

    if whole != split {
        return Err(Error::Internal(format!(
            "character dimension formulas disagree: whole-group {whole} vs coset-split {split}"
        )));
    }
    Ok(whole)
}

/// Brute-force dimension of the degree-d space: impose the defining identity
/// on every group generator as exact linear constraints over the monomial
/// basis and return the nullity via fraction-free elimination.
pub fn dim_oracle(group: &GradedGroup, j: u32, kind: Kind, d: u32) -> usize {
    let n = group.source_dim();
    let index = MonoIndex::of_degree(n, d);
    match kind {
        Kind::Invariant => {
            let dim = index.len();
            let mut rows = Vec::new();
            for &g in group.generator_indices() {
                let twist = group.sigma_power_value(g, j);
                for b in 0..dim {
                    let basis = Poly::monomial(index.monomial(b).clone(), Cyclotomic::one());
                    let acted = act_on_poly(group, g, &basis);
                    let mut row = acted.coeff_row(&index);
                    row[b] = row[b].sub(&twist);
                    rows.push(row);
                }
            }
            dim - rank_fraction_free(rows)
        }
        Kind::Equivariant => {
            let w = group.target_dim();
            let dim = w * index.len();
            let mut rows = Vec::new();
            for &g in group.generator_indices() {
                let twist = group.sigma_power_value(g, j);
                for comp in 0..w {
                    for b in 0..index.len() {
                        let basis =
                            PolyMap::monomial(n, w, comp, index.monomial(b).clone());
                        let acted = act_on_map(group, g, &basis);
                        let mut row = acted.coeff_row(&index);
                        let col = comp * index.len() + b;
                        row[col] = row[col].sub(&twist);
                        rows.push(row);
                    }
                }
            }
            dim - rank_fraction_free(rows)
        }
    }
}

/// The dimension series from the oracle, degree by degree.
pub fn dim_oracle_series(group: &GradedGroup, j: u32, kind: Kind, dmax: usize) -> IntSeries {
    IntSeries::new(
        (0..=dmax)
            .map(|d| dim_oracle(group, j, kind, d as u32) as i64)
            .collect(),
    )
}
