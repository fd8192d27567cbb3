//! Seeded random sampling and the consistency-check suites shared by the
//! test harness and the command-line `check` report: projector laws on
//! random kernel-processed inputs, three-way dimension agreement and the
//! grading sum rules. All randomness is ChaCha-seeded, so reports are
//! byte-identical across runs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exact::Cyclotomic;
use crate::group::GradedGroup;
use crate::molien::{
    dim_oracle, dims_by_characters, k_molien_series, molien_series, Kind,
};
use crate::poly::{monomials_of_degree, Poly, PolyMap};
use crate::reynolds::{average_over_k, is_relative, relative_project, GroupAction};

/// Random polynomial with small cyclotomic coefficients, up to the given
/// total degree.
pub fn random_poly(rng: &mut ChaCha8Rng, nvars: usize, max_degree: u32, conductor: u32) -> Poly {
    let mut out = Poly::zero(nvars);
    let nterms = rng.gen_range(1..=4);
    for _ in 0..nterms {
        let d = rng.gen_range(0..=max_degree);
        let monos = monomials_of_degree(nvars, d);
        let mono = monos[rng.gen_range(0..monos.len())].clone();
        let mut coeff = Cyclotomic::from_integer(rng.gen_range(-3..=3i64));
        if conductor > 1 && rng.gen_bool(0.5) {
            let k = rng.gen_range(0..conductor) as i64;
            coeff = coeff.mul(&Cyclotomic::root_of_unity(k, conductor));
        }
        out = out.add(&Poly::monomial(mono, coeff));
    }
    out
}

pub fn random_map(
    rng: &mut ChaCha8Rng,
    nvars: usize,
    ncomponents: usize,
    max_degree: u32,
    conductor: u32,
) -> PolyMap {
    PolyMap {
        components: (0..ncomponents)
            .map(|_| random_poly(rng, nvars, max_degree, conductor))
            .collect(),
    }
}

fn projector_laws_on<T: GroupAction>(group: &GradedGroup, input: &T, what: &str) -> Result<usize> {
    let m = group.modulus();
    let mut checks = 0;
    let mut sum = input.zero_like();
    for j in 0..m {
        let pj = relative_project(group, j, input)?;
        // idempotence
        if relative_project(group, j, &pj)? != pj {
            return Err(Error::Internal(format!("{what}: projector {j} not idempotent")));
        }
        checks += 1;
        // image membership
        if !is_relative(group, j, &pj) {
            return Err(Error::Internal(format!(
                "{what}: projector {j} output fails its defining identity"
            )));
        }
        checks += 1;
        // orthogonality
        for i in 0..m {
            if i != j && !relative_project(group, i, &pj)?.is_zero() {
                return Err(Error::Internal(format!(
                    "{what}: projectors {i} and {j} are not orthogonal"
                )));
            }
        }
        checks += m as usize - 1;
        sum = sum.plus(&pj);
    }
    // completeness: the projectors resolve the identity
    if sum != *input {
        return Err(Error::Internal(format!(
            "{what}: projector sum does not reproduce the input"
        )));
    }
    Ok(checks + 1)
}

/// Projector law suite: idempotence, completeness, pairwise orthogonality
/// and image membership on `samples` random K-invariant polynomials and
/// `samples` random K-equivariant maps. Returns one summary line.
pub fn projector_law_check(
    group: &GradedGroup,
    samples: usize,
    max_degree: u32,
    seed: u64,
) -> Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = group.source_dim();
    let w = group.target_dim();
    let conductor = group.conductor();
    let mut checks = 0;
    let mut produced = 0;
    let mut attempts = 0;
    while produced < samples {
        attempts += 1;
        if attempts > 50 * samples {
            return Err(Error::Internal(
                "kernel averaging keeps returning zero; sampling stuck".into(),
            ));
        }
        let f = average_over_k(group, &random_poly(&mut rng, n, max_degree, conductor));
        if f.is_zero() {
            continue;
        }
        checks += projector_laws_on(group, &f, "scalar")?;
        produced += 1;
    }
    let mut produced_maps = 0;
    while produced_maps < samples {
        attempts += 1;
        if attempts > 100 * samples {
            return Err(Error::Internal(
                "kernel averaging keeps returning zero; sampling stuck".into(),
            ));
        }
        let g = average_over_k(group, &random_map(&mut rng, n, w, max_degree, conductor));
        if g.is_zero() {
            continue;
        }
        checks += projector_laws_on(group, &g, "vector")?;
        produced_maps += 1;
    }
    Ok(format!(
        "projector laws: {samples}+{samples} kernel-processed samples, {checks} identities hold exactly"
    ))
}

/// Three-way agreement of the series routes for every j and both kinds, and
/// nonnegativity of all coefficients. Returns one line per (j, kind).
pub fn three_way_dimension_check(group: &GradedGroup, dmax: usize) -> Result<Vec<String>> {
    let mut lines = Vec::new();
    for kind in [Kind::Invariant, Kind::Equivariant] {
        for j in 0..group.modulus() {
            let series = molien_series(group, j, kind, dmax)?;
            let dims = dims_by_characters(group, j, kind, dmax)?;
            if series != dims {
                return Err(Error::Internal(format!(
                    "series route disagreement at j={j} {kind:?}: {series} vs {dims}"
                )));
            }
            for d in 0..=dmax {
                let oracle = dim_oracle(group, j, kind, d as u32) as i64;
                if oracle != series.coeff(d) {
                    return Err(Error::Internal(format!(
                        "oracle disagreement at j={j} {kind:?} degree {d}: \
                         {oracle} vs {}",
                        series.coeff(d)
                    )));
                }
            }
            let label = match kind {
                Kind::Invariant => "invariant",
                Kind::Equivariant => "equivariant",
            };
            lines.push(format!("three-way agreement j={j} {label}: {series}"));
        }
    }
    Ok(lines)
}

/// The grading sum rules: summing the relative series over j recovers the
/// kernel series, for both kinds.
pub fn sum_rule_check(group: &GradedGroup, dmax: usize) -> Result<Vec<String>> {
    let mut lines = Vec::new();
    for kind in [Kind::Invariant, Kind::Equivariant] {
        let reference = k_molien_series(group, kind, dmax)?;
        let mut sum = vec![0i64; dmax + 1];
        for j in 0..group.modulus() {
            let s = molien_series(group, j, kind, dmax)?;
            for (i, c) in s.coeffs.iter().enumerate() {
                sum[i] += c;
            }
        }
        if sum != reference.coeffs {
            return Err(Error::Internal(format!(
                "sum rule broken for {kind:?}: {sum:?} vs {:?}",
                reference.coeffs
            )));
        }
        let label = match kind {
            Kind::Invariant => "invariant",
            Kind::Equivariant => "equivariant",
        };
        lines.push(format!("sum rule {label}: {reference}"));
    }
    Ok(lines)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;

    #[test]
    fn projector_suite_passes_on_presets() {
        for (g, seed) in [
            (presets::z3xz3(), 11),
            (presets::reversible_z4(), 12),
            (presets::cyclic_z4_m4(), 13),
        ] {
            projector_law_check(&g, 5, 4, seed).unwrap();
        }
    }

    #[test]
    fn checks_are_deterministic() {
        let g = presets::z3xz3();
        let a = projector_law_check(&g, 3, 4, 7).unwrap();
        let b = projector_law_check(&g, 3, 4, 7).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn three_way_check_reports() {
        let g = presets::z6_m3();
        let lines = three_way_dimension_check(&g, 3).unwrap();
        assert_eq!(lines.len(), 6);
        let sums = sum_rule_check(&g, 4).unwrap();
        assert_eq!(sums.len(), 2);
    }
}
