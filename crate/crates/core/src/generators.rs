//! Generating sets for the graded modules: the kernel-level Hilbert basis and
//! equivariant module generators, the relative-invariant generators built
//! from projected products, the module basis B, and the projected products
//! that generate each module of relative equivariants.
//!
//! Every emitted set is certified degree by degree against the matching
//! Hilbert–Poincaré series, so completeness never rests on a degree bound
//! alone.

use std::fmt;

use crate::error::{Error, Result};
use crate::exact::Cyclotomic;
use crate::exec;
use crate::group::GradedGroup;
use crate::linalg::RowSpace;
use crate::molien::{k_molien_series, molien_series, Kind};
use crate::poly::{monomials_of_degree, Mono, MonoIndex, Poly, PolyMap};
use crate::reynolds::{average_over_group, average_over_k, is_k_fixed, is_relative, relative_project};

/// What a generator set generates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenKind {
    /// Hilbert basis of the kernel invariants (as an algebra).
    RingInvariant,
    /// Module generators consisting of scalar polynomials.
    ModuleInvariant,
    /// Module generators consisting of polynomial maps.
    ModuleEquivariant,
}

/// Where an emitted generator came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// Kernel average of a monomial.
    KernelAverage { monomial: Mono },
    /// Kernel average of a single-component monomial map.
    KernelAverageMap { component: usize, monomial: Mono },
    /// The constant 1 in the module basis.
    UnitElement,
    /// Product of scalar projections, one factor per (coset weight, index).
    RelativeProduct { factors: Vec<(u32, usize)> },
    /// Vector projection of the product v_i * H_k.
    ProjectedProduct { i: usize, k: usize },
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::KernelAverage { monomial } => {
                write!(f, "K-avg {:?}", monomial.0)
            }
            Provenance::KernelAverageMap { component, monomial } => {
                write!(f, "K-avg comp{} {:?}", component, monomial.0)
            }
            Provenance::UnitElement => write!(f, "unit"),
            Provenance::RelativeProduct { factors } => {
                let parts: Vec<String> = factors
                    .iter()
                    .map(|(l, i)| format!("R{}(u{})", l, i + 1))
                    .collect();
                write!(f, "{}", parts.join("*"))
            }
            Provenance::ProjectedProduct { i, k } => write!(f, "proj(v{i}*H{k})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GenPayload {
    Scalar(Poly),
    Vector(PolyMap),
}

impl GenPayload {
    pub fn as_scalar(&self) -> Option<&Poly> {
        match self {
            GenPayload::Scalar(p) => Some(p),
            GenPayload::Vector(_) => None,
        }
    }

    pub fn as_vector(&self) -> Option<&PolyMap> {
        match self {
            GenPayload::Scalar(_) => None,
            GenPayload::Vector(m) => Some(m),
        }
    }

    fn sort_key(&self) -> (u32, Mono, usize) {
        match self {
            GenPayload::Scalar(p) => {
                let (m, _) = p.leading().expect("nonzero generator");
                (p.degree().unwrap(), m.clone(), 0)
            }
            GenPayload::Vector(h) => {
                let (comp, m, _) = h.leading_entry().expect("nonzero generator");
                (h.degree().unwrap(), m.clone(), comp)
            }
        }
    }

    pub fn render(&self, names: &[&str]) -> String {
        match self {
            GenPayload::Scalar(p) => p.render(names),
            GenPayload::Vector(h) => h.render(names),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenItem {
    pub payload: GenPayload,
    pub degree: u32,
    pub provenance: Provenance,
}

/// A graded list of generators with provenance, sorted by (degree, graded-lex
/// leading term descending, component). No item is zero; each item is scaled
/// so its leading coefficient is one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet {
    pub kind: GenKind,
    pub j: u32,
    pub items: Vec<GenItem>,
}

impl GeneratorSet {
    fn new(kind: GenKind, j: u32, mut items: Vec<GenItem>) -> Self {
        items.sort_by(|a, b| {
            let (da, ma, ca) = a.payload.sort_key();
            let (db, mb, cb) = b.payload.sort_key();
            da.cmp(&db).then(mb.cmp(&ma)).then(ca.cmp(&cb))
        });
        GeneratorSet { kind, j, items }
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn scalar_items(&self) -> Vec<(Poly, u32)> {
        self.items
            .iter()
            .filter_map(|it| it.payload.as_scalar().map(|p| (p.clone(), it.degree)))
            .collect()
    }

    pub fn vector_items(&self) -> Vec<(PolyMap, u32)> {
        self.items
            .iter()
            .filter_map(|it| it.payload.as_vector().map(|h| (h.clone(), it.degree)))
            .collect()
    }

    pub fn max_degree(&self) -> u32 {
        self.items.iter().map(|it| it.degree).max().unwrap_or(0)
    }

    /// One generator per line in the polynomial rendering grammar.
    pub fn render_lines(&self, names: &[&str]) -> String {
        let mut out = String::new();
        for it in &self.items {
            out.push_str(&it.payload.render(names));
            out.push('\n');
        }
        out
    }

    /// Every item must satisfy its defining identity; used as a hard
    /// internal check after construction.
    fn verify(&self, group: &GradedGroup) -> Result<()> {
        for it in &self.items {
            let ok = match (&self.kind, &it.payload) {
                (GenKind::RingInvariant, GenPayload::Scalar(p)) => is_k_fixed(group, p),
                (GenKind::ModuleInvariant, GenPayload::Scalar(p)) => {
                    if matches!(it.provenance, Provenance::UnitElement) {
                        // The module basis B mixes gradings; its non-unit
                        // items were checked when the per-j sets were built.
                        true
                    } else if self.j == 0 {
                        is_k_fixed(group, p)
                    } else {
                        is_relative(group, self.j, p)
                    }
                }
                (GenKind::ModuleEquivariant, GenPayload::Vector(h)) => {
                    is_relative(group, self.j, h)
                }
                _ => false,
            };
            if !ok {
                return Err(Error::Internal(format!(
                    "generator from {} fails its defining identity",
                    it.provenance
                )));
            }
        }
        Ok(())
    }
}

/// The Noether bound |K|, the default degree bound for kernel-level
/// generator searches.
pub fn default_k_degree_bound(group: &GradedGroup) -> u32 {
    group.kernel_order() as u32
}

fn default_check_degree(max_gen_degree: u32) -> u32 {
    6u32.max(2 * max_gen_degree)
}

/// Degreewise basis of the kernel invariants P^e(K), from kernel averages of
/// the degree-e monomials.
pub fn k_invariant_space_basis(group: &GradedGroup, degree: u32) -> Vec<Poly> {
    averaged_space_basis(group, degree, true)
}

/// Degreewise basis of the whole-group invariants P^e(Gamma).
pub fn invariant_space_basis(group: &GradedGroup, degree: u32) -> Vec<Poly> {
    averaged_space_basis(group, degree, false)
}

fn averaged_space_basis(group: &GradedGroup, degree: u32, kernel_only: bool) -> Vec<Poly> {
    let n = group.source_dim();
    let monos = monomials_of_degree(n, degree);
    let averaged: Vec<Poly> = exec::map_collect(&monos, |mu| {
        let f = Poly::monomial(mu.clone(), Cyclotomic::one());
        if kernel_only {
            average_over_k(group, &f)
        } else {
            average_over_group(group, &f)
        }
    });
    let index = MonoIndex::new(monos);
    let mut span = RowSpace::new(index.len());
    let mut basis = Vec::new();
    for avg in averaged {
        if avg.is_zero() {
            continue;
        }
        if span.insert(avg.coeff_row(&index)) {
            basis.push(avg.normalized());
        }
    }
    basis
}

/// Degree-indexed cache of scalar multiplier bases.
struct MultiplierSpaces<'g> {
    group: &'g GradedGroup,
    kernel_only: bool,
    cache: Vec<Vec<Poly>>,
}

impl<'g> MultiplierSpaces<'g> {
    fn new(group: &'g GradedGroup, kernel_only: bool) -> Self {
        MultiplierSpaces { group, kernel_only, cache: Vec::new() }
    }

    fn basis(&mut self, degree: u32) -> Vec<Poly> {
        while self.cache.len() <= degree as usize {
            let d = self.cache.len() as u32;
            self.cache
                .push(averaged_space_basis(self.group, d, self.kernel_only));
        }
        self.cache[degree as usize].clone()
    }
}

/// All products of the given homogeneous polynomials with total degree
/// exactly `degree` (the degree-d slice of the algebra they generate).
fn algebra_products(gens: &[(Poly, u32)], degree: u32, nvars: usize) -> Vec<Poly> {
    fn rec(gens: &[(Poly, u32)], from: usize, remaining: u32, acc: &Poly, out: &mut Vec<Poly>) {
        if remaining == 0 {
            out.push(acc.clone());
            return;
        }
        if from == gens.len() {
            return;
        }
        // exponent 0 for this generator, then 1, 2, ...
        rec(gens, from + 1, remaining, acc, out);
        let (g, dg) = &gens[from];
        let mut cur = acc.clone();
        let mut used = 0;
        while used + dg <= remaining {
            used += dg;
            cur = cur.mul(g);
            rec(gens, from + 1, remaining - used, &cur, out);
        }
    }
    let mut out = Vec::new();
    rec(gens, 0, degree, &Poly::one(nvars), &mut out);
    out
}

/// Graded dimensions of the algebra generated by the items of a scalar set.
pub fn algebra_span_dimensions(set: &GeneratorSet, nvars: usize, dmax: u32) -> Vec<usize> {
    let gens = set.scalar_items();
    (0..=dmax)
        .map(|d| {
            let index = MonoIndex::of_degree(nvars, d);
            let mut span = RowSpace::new(index.len());
            for p in algebra_products(&gens, d, nvars) {
                if !p.is_zero() {
                    span.insert(p.coeff_row(&index));
                }
            }
            span.rank()
        })
        .collect()
}

fn scalar_module_dims(
    items: &[(Poly, u32)],
    mult: &mut MultiplierSpaces,
    nvars: usize,
    dmax: u32,
) -> Vec<usize> {
    (0..=dmax)
        .map(|d| {
            let index = MonoIndex::of_degree(nvars, d);
            let mut span = RowSpace::new(index.len());
            for (g, dg) in items {
                if *dg > d {
                    continue;
                }
                for p in mult.basis(d - dg) {
                    let prod = g.mul(&p);
                    if !prod.is_zero() {
                        span.insert(prod.coeff_row(&index));
                    }
                }
            }
            span.rank()
        })
        .collect()
}

fn vector_module_dims(
    items: &[(PolyMap, u32)],
    mult: &mut MultiplierSpaces,
    nvars: usize,
    ncomponents: usize,
    dmax: u32,
) -> Vec<usize> {
    (0..=dmax)
        .map(|d| {
            let index = MonoIndex::of_degree(nvars, d);
            let mut span = RowSpace::new(index.len() * ncomponents);
            for (h, dh) in items {
                if *dh > d {
                    continue;
                }
                for p in mult.basis(d - dh) {
                    let prod = h.mul_poly(&p);
                    if !prod.is_zero() {
                        span.insert(prod.coeff_row(&index));
                    }
                }
            }
            span.rank()
        })
        .collect()
}

/// Graded dimensions of the module over the whole-group invariants generated
/// by the set, for the completeness certificates.
pub fn module_span_dimensions(group: &GradedGroup, set: &GeneratorSet, dmax: u32) -> Vec<usize> {
    let mut mult = MultiplierSpaces::new(group, false);
    let n = group.source_dim();
    match set.kind {
        GenKind::ModuleEquivariant => {
            let items = set.vector_items();
            vector_module_dims(&items, &mut mult, n, group.target_dim(), dmax)
        }
        _ => {
            let items = set.scalar_items();
            scalar_module_dims(&items, &mut mult, n, dmax)
        }
    }
}

/// Hilbert basis of the kernel invariants: kernel averages of all monomials
/// up to the bound, pruned degreewise against the algebra generated so far,
/// then certified against the kernel's Molien series. The default bound is
/// |K|; an insufficient bound is reported as a validation failure, never
/// silently accepted.
pub fn k_invariant_basis(
    group: &GradedGroup,
    degree_bound: u32,
    check_degree: Option<u32>,
) -> Result<GeneratorSet> {
    if degree_bound < 1 {
        return Err(Error::InvalidInput("degree bound must be >= 1".into()));
    }
    let n = group.source_dim();
    let mut accepted: Vec<GenItem> = Vec::new();
    for d in 1..=degree_bound {
        let index = MonoIndex::of_degree(n, d);
        let mut span = RowSpace::new(index.len());
        let so_far: Vec<(Poly, u32)> = accepted
            .iter()
            .map(|it| (it.payload.as_scalar().unwrap().clone(), it.degree))
            .collect();
        for p in algebra_products(&so_far, d, n) {
            if !p.is_zero() {
                span.insert(p.coeff_row(&index));
            }
        }
        let monos = monomials_of_degree(n, d);
        let averaged: Vec<Poly> = exec::map_collect(&monos, |mu| {
            average_over_k(group, &Poly::monomial(mu.clone(), Cyclotomic::one()))
        });
        for (mu, avg) in monos.iter().zip(averaged) {
            if avg.is_zero() {
                continue;
            }
            let candidate = avg.normalized();
            if span.insert(candidate.coeff_row(&index)) {
                accepted.push(GenItem {
                    payload: GenPayload::Scalar(candidate),
                    degree: d,
                    provenance: Provenance::KernelAverage { monomial: mu.clone() },
                });
            }
        }
    }
    let set = GeneratorSet::new(GenKind::RingInvariant, 0, accepted);
    set.verify(group)?;
    let check = check_degree.unwrap_or_else(|| default_check_degree(set.max_degree()));
    let reference = k_molien_series(group, Kind::Invariant, check as usize)?;
    let dims = algebra_span_dimensions(&set, n, check);
    for d in 0..=check as usize {
        if dims[d] as i64 != reference.coeff(d) {
            return Err(Error::Validation(format!(
                "degree bound insufficient; rerun with a larger bound \
                 (algebra dimension {} vs series {} at degree {d})",
                dims[d],
                reference.coeff(d)
            )));
        }
    }
    Ok(set)
}

/// Module generators of the kernel equivariants over the kernel invariants:
/// kernel averages of single-monomial single-component maps, pruned against
/// P(K)-multiples of the accepted items, certified against the kernel's
/// equivariant series.
pub fn k_equivariant_generators(
    group: &GradedGroup,
    degree_bound: u32,
    check_degree: Option<u32>,
) -> Result<GeneratorSet> {
    let n = group.source_dim();
    let w = group.target_dim();
    let mut mult = MultiplierSpaces::new(group, true);
    let mut accepted: Vec<GenItem> = Vec::new();
    for d in 0..=degree_bound {
        let index = MonoIndex::of_degree(n, d);
        let mut span = RowSpace::new(index.len() * w);
        let so_far: Vec<(PolyMap, u32)> = accepted
            .iter()
            .map(|it| (it.payload.as_vector().unwrap().clone(), it.degree))
            .collect();
        for (h, dh) in &so_far {
            for p in mult.basis(d - dh) {
                let prod = h.mul_poly(&p);
                if !prod.is_zero() {
                    span.insert(prod.coeff_row(&index));
                }
            }
        }
        let monos = monomials_of_degree(n, d);
        let candidates: Vec<(usize, Mono)> = (0..w)
            .flat_map(|c| monos.iter().map(move |m| (c, m.clone())))
            .collect();
        let averaged: Vec<PolyMap> = exec::map_collect(&candidates, |(c, mu)| {
            average_over_k(group, &PolyMap::monomial(n, w, *c, mu.clone()))
        });
        for ((c, mu), avg) in candidates.iter().zip(averaged) {
            if avg.is_zero() {
                continue;
            }
            let candidate = avg.normalized();
            if span.insert(candidate.coeff_row(&index)) {
                accepted.push(GenItem {
                    payload: GenPayload::Vector(candidate),
                    degree: d,
                    provenance: Provenance::KernelAverageMap {
                        component: *c,
                        monomial: mu.clone(),
                    },
                });
            }
        }
    }
    let set = GeneratorSet::new(GenKind::ModuleEquivariant, 0, accepted);
    for it in &set.items {
        if !is_k_fixed(group, it.payload.as_vector().unwrap()) {
            return Err(Error::Internal(format!(
                "kernel average from {} is not K-equivariant",
                it.provenance
            )));
        }
    }
    let check = check_degree.unwrap_or_else(|| default_check_degree(set.max_degree()));
    let reference = k_molien_series(group, Kind::Equivariant, check as usize)?;
    let items = set.vector_items();
    let dims = vector_module_dims(&items, &mut mult, n, w, check);
    for d in 0..=check as usize {
        if dims[d] as i64 != reference.coeff(d) {
            return Err(Error::Validation(format!(
                "degree bound insufficient; rerun with a larger bound \
                 (module dimension {} vs series {} at degree {d})",
                dims[d],
                reference.coeff(d)
            )));
        }
    }
    Ok(set)
}

/// Multiset of (coset weight l in 1..m, generator index) factors. A pattern
/// is irreducible when no proper nonempty sub-multiset has weight 0 mod m;
/// reducible products factor through a group invariant and are redundant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentPattern {
    pub factors: Vec<(u32, usize)>,
}

impl ExponentPattern {
    pub fn weight(&self, m: u32) -> u32 {
        self.factors.iter().map(|(l, _)| *l).sum::<u32>() % m
    }

    pub fn is_irreducible(&self, m: u32) -> bool {
        !has_zero_sum_subset(&self.factors, m, true)
    }
}

/// True when some nonempty sub-multiset (proper if `proper_only`) has weight
/// 0 mod m.
fn has_zero_sum_subset(factors: &[(u32, usize)], m: u32, proper_only: bool) -> bool {
    let len = factors.len();
    if len == 0 {
        return false;
    }
    let full = (1usize << len) - 1;
    for mask in 1..=full {
        if proper_only && mask == full {
            continue;
        }
        let mut sum = 0u32;
        for (b, f) in factors.iter().enumerate() {
            if mask & (1 << b) != 0 {
                sum = (sum + f.0) % m;
            }
        }
        if sum == 0 {
            return true;
        }
    }
    false
}

/// Irreducible patterns of total weight j mod m over the available factor
/// pool, with at most `max_len` factors. For j != 0 the irreducibility
/// pruning already caps the length at m - 1 (no zero-sum-free sequence over
/// Z_m is longer); a larger `max_len` is only useful to confirm the bound.
pub fn enumerate_patterns(
    m: u32,
    j: u32,
    available: &[(u32, usize)],
    max_len: usize,
) -> Vec<ExponentPattern> {
    fn rec(
        m: u32,
        j: u32,
        available: &[(u32, usize)],
        from: usize,
        max_len: usize,
        stack: &mut Vec<(u32, usize)>,
        out: &mut Vec<ExponentPattern>,
    ) {
        if !stack.is_empty() {
            // Any zero-sum sub-multiset makes every extension reducible; for
            // a full pattern with weight j != 0 the whole multiset never
            // sums to zero, so pruning on all nonempty subsets is safe.
            if has_zero_sum_subset(stack, m, false) {
                return;
            }
            let weight: u32 = stack.iter().map(|(l, _)| *l).sum::<u32>() % m;
            if weight == j {
                out.push(ExponentPattern { factors: stack.clone() });
            }
        }
        if stack.len() == max_len {
            return;
        }
        for idx in from..available.len() {
            stack.push(available[idx]);
            rec(m, j, available, idx, max_len, stack, out);
            stack.pop();
        }
    }
    let mut out = Vec::new();
    if j == 0 || j >= m {
        return out;
    }
    let mut stack = Vec::new();
    rec(m, j, available, 0, max_len, &mut stack, &mut out);
    out
}

/// Generators of the module of sigma^j-relative invariants over the group
/// invariants: irreducible products of the scalar projections R_l(u_i),
/// pruned degreewise against multiples of the accepted items, certified
/// against the j-th invariant series.
pub fn relative_invariant_generators(
    group: &GradedGroup,
    j: u32,
    u: &GeneratorSet,
    check_degree: Option<u32>,
) -> Result<GeneratorSet> {
    relative_invariant_generators_with_pattern_len(
        group,
        j,
        u,
        check_degree,
        group.modulus() as usize - 1,
    )
}

/// Same, with an explicit cap on the pattern length (the Davenport-constant
/// check re-runs the enumeration with length m and expects nothing new).
pub fn relative_invariant_generators_with_pattern_len(
    group: &GradedGroup,
    j: u32,
    u: &GeneratorSet,
    check_degree: Option<u32>,
    max_pattern_len: usize,
) -> Result<GeneratorSet> {
    let m = group.modulus();
    if j == 0 || j >= m {
        return Err(Error::InvalidInput(format!(
            "relative invariant index must satisfy 1 <= j <= m - 1; got j = {j}, m = {m}"
        )));
    }
    if u.kind != GenKind::RingInvariant {
        return Err(Error::Precondition(
            "expected a kernel-invariant Hilbert basis".into(),
        ));
    }
    let n = group.source_dim();
    let u_items = u.scalar_items();

    // scalar projections R_l(u_i), dropping zeros
    let mut available: Vec<(u32, usize)> = Vec::new();
    let mut projections: Vec<Vec<Option<Poly>>> = vec![vec![None; u_items.len()]; m as usize];
    for l in 1..m {
        for (i, (ui, _)) in u_items.iter().enumerate() {
            let p = relative_project(group, l, ui)?;
            if !p.is_zero() {
                projections[l as usize][i] = Some(p);
                available.push((l, i));
            }
        }
    }

    let patterns = enumerate_patterns(m, j, &available, max_pattern_len);
    let products: Vec<Option<Poly>> = exec::map_collect(&patterns, |pattern| {
        let mut prod = Poly::one(n);
        for (l, i) in &pattern.factors {
            prod = prod.mul(projections[*l as usize][*i].as_ref().unwrap());
        }
        if prod.is_zero() {
            None
        } else {
            Some(prod.normalized())
        }
    });
    let mut candidates: Vec<GenItem> = Vec::new();
    for (pattern, prod) in patterns.iter().zip(products) {
        if let Some(p) = prod {
            if candidates.iter().any(|c| c.payload.as_scalar() == Some(&p)) {
                continue;
            }
            let degree = p.degree().unwrap();
            candidates.push(GenItem {
                payload: GenPayload::Scalar(p),
                degree,
                provenance: Provenance::RelativeProduct { factors: pattern.factors.clone() },
            });
        }
    }
    candidates.sort_by(|a, b| {
        let (da, ma, _) = a.payload.sort_key();
        let (db, mb, _) = b.payload.sort_key();
        da.cmp(&db).then(mb.cmp(&ma))
    });

    // degreewise pruning against group-invariant multiples of accepted items
    let mut mult = MultiplierSpaces::new(group, false);
    let mut accepted: Vec<GenItem> = Vec::new();
    let mut degrees: Vec<u32> = candidates.iter().map(|c| c.degree).collect();
    degrees.dedup();
    for d in degrees {
        let index = MonoIndex::of_degree(n, d);
        let mut span = RowSpace::new(index.len());
        for it in &accepted {
            let g = it.payload.as_scalar().unwrap();
            for p in mult.basis(d - it.degree) {
                let prod = g.mul(&p);
                if !prod.is_zero() {
                    span.insert(prod.coeff_row(&index));
                }
            }
        }
        for cand in candidates.iter().filter(|c| c.degree == d) {
            let g = cand.payload.as_scalar().unwrap();
            if span.insert(g.coeff_row(&index)) {
                accepted.push(cand.clone());
            }
        }
    }

    let set = GeneratorSet::new(GenKind::ModuleInvariant, j, accepted);
    set.verify(group)?;
    let check = check_degree.unwrap_or_else(|| default_check_degree(set.max_degree()));
    let reference = molien_series(group, j, Kind::Invariant, check as usize)?;
    let items = set.scalar_items();
    let dims = scalar_module_dims(&items, &mut mult, n, check);
    for d in 0..=check as usize {
        if dims[d] as i64 != reference.coeff(d) {
            return Err(Error::Internal(format!(
                "relative invariant generators incomplete at degree {d}: \
                 span {} vs series {}",
                dims[d],
                reference.coeff(d)
            )));
        }
    }
    Ok(set)
}

/// The module basis B: the constant 1 together with the relative-invariant
/// generators for every j >= 1, deduplicated.
pub fn module_basis_b(
    group: &GradedGroup,
    u: &GeneratorSet,
    check_degree: Option<u32>,
) -> Result<GeneratorSet> {
    let n = group.source_dim();
    let mut items = vec![GenItem {
        payload: GenPayload::Scalar(Poly::one(n)),
        degree: 0,
        provenance: Provenance::UnitElement,
    }];
    for j in 1..group.modulus() {
        let set = relative_invariant_generators(group, j, u, check_degree)?;
        for it in set.items {
            if !items.iter().any(|e| e.payload == it.payload) {
                items.push(it);
            }
        }
    }
    Ok(GeneratorSet::new(GenKind::ModuleInvariant, 0, items))
}

/// Generators of the module of sigma^j-relative equivariants over the group
/// invariants: vector projections of the products v_i H_k, pruned and
/// certified against the j-th equivariant series.
pub fn relative_equivariant_generators(
    group: &GradedGroup,
    j: u32,
    b: &GeneratorSet,
    h: &GeneratorSet,
    check_degree: Option<u32>,
) -> Result<GeneratorSet> {
    let m = group.modulus();
    if j >= m {
        return Err(Error::InvalidInput(format!(
            "equivariant index must satisfy 0 <= j <= m - 1; got j = {j}"
        )));
    }
    let n = group.source_dim();
    let w = group.target_dim();
    let b_items = b.scalar_items();
    let h_items = h.vector_items();

    let pairs: Vec<(usize, usize)> = (0..b_items.len())
        .flat_map(|i| (0..h_items.len()).map(move |k| (i, k)))
        .collect();
    let projected: Vec<Option<PolyMap>> = exec::map_collect(&pairs, |&(i, k)| {
        let product = h_items[k].0.mul_poly(&b_items[i].0);
        let proj = relative_project(group, j, &product)
            .expect("products of kernel data are kernel-equivariant");
        if proj.is_zero() {
            None
        } else {
            Some(proj.normalized())
        }
    });
    let mut candidates: Vec<GenItem> = Vec::new();
    for (&(i, k), proj) in pairs.iter().zip(projected) {
        if let Some(map) = proj {
            if candidates.iter().any(|c| c.payload.as_vector() == Some(&map)) {
                continue;
            }
            let degree = map.degree().unwrap();
            candidates.push(GenItem {
                payload: GenPayload::Vector(map),
                degree,
                provenance: Provenance::ProjectedProduct { i, k },
            });
        }
    }
    candidates.sort_by(|a, b| {
        let (da, ma, ca) = a.payload.sort_key();
        let (db, mb, cb) = b.payload.sort_key();
        da.cmp(&db).then(mb.cmp(&ma)).then(ca.cmp(&cb))
    });

    let mut mult = MultiplierSpaces::new(group, false);
    let mut accepted: Vec<GenItem> = Vec::new();
    let mut degrees: Vec<u32> = candidates.iter().map(|c| c.degree).collect();
    degrees.dedup();
    for d in degrees {
        let index = MonoIndex::of_degree(n, d);
        let mut span = RowSpace::new(index.len() * w);
        for it in &accepted {
            let g = it.payload.as_vector().unwrap();
            for p in mult.basis(d - it.degree) {
                let prod = g.mul_poly(&p);
                if !prod.is_zero() {
                    span.insert(prod.coeff_row(&index));
                }
            }
        }
        for cand in candidates.iter().filter(|c| c.degree == d) {
            let g = cand.payload.as_vector().unwrap();
            if span.insert(g.coeff_row(&index)) {
                accepted.push(cand.clone());
            }
        }
    }

    let set = GeneratorSet::new(GenKind::ModuleEquivariant, j, accepted);
    set.verify(group)?;
    let check = check_degree.unwrap_or_else(|| default_check_degree(set.max_degree()));
    let reference = molien_series(group, j, Kind::Equivariant, check as usize)?;
    let items = set.vector_items();
    let dims = vector_module_dims(&items, &mut mult, n, w, check);
    for d in 0..=check as usize {
        if dims[d] as i64 != reference.coeff(d) {
            return Err(Error::Internal(format!(
                "relative equivariant generators incomplete at degree {d}: \
                 span {} vs series {}",
                dims[d],
                reference.coeff(d)
            )));
        }
    }
    Ok(set)
}

/// The rendered general form g = sum_i f_i * (generator i) with fresh
/// coefficient-function symbols, in text and LaTeX.
pub struct GeneralForm {
    pub j: u32,
    pub coefficient_count: usize,
    pub text: String,
    pub latex: String,
}

pub fn general_form(
    group: &GradedGroup,
    j: u32,
    gens: &GeneratorSet,
    names: &[&str],
) -> GeneralForm {
    let w = group.target_dim();
    let arg_list = names.join(", ");
    let mut text_components = vec![Vec::new(); w];
    let mut latex_components = vec![Vec::new(); w];
    for (idx, it) in gens.items.iter().enumerate() {
        let symbol = idx + 1;
        if let Some(map) = it.payload.as_vector() {
            for (c, poly) in map.components.iter().enumerate() {
                if poly.is_zero() {
                    continue;
                }
                let rendered = poly.render(names);
                let factor = if rendered == "1" {
                    format!("f{symbol}(z)")
                } else if poly.num_terms() > 1 {
                    format!("f{symbol}(z)*({rendered})")
                } else {
                    format!("f{symbol}(z)*{rendered}")
                };
                text_components[c].push(factor);
                let lfactor = if rendered == "1" {
                    format!("f_{{{symbol}}}(z)")
                } else if poly.num_terms() > 1 {
                    format!("f_{{{symbol}}}(z)\\,({})", latexify(&rendered))
                } else {
                    format!("f_{{{symbol}}}(z)\\,{}", latexify(&rendered))
                };
                latex_components[c].push(lfactor);
            }
        }
    }
    let join = |parts: &Vec<String>| {
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    };
    let text = format!(
        "g({arg_list}) = ({})",
        text_components.iter().map(join).collect::<Vec<_>>().join(", ")
    );
    let latex = format!(
        "g({arg_list}) = \\bigl({}\\bigr)",
        latex_components.iter().map(join).collect::<Vec<_>>().join(",\\; ")
    );
    GeneralForm { j, coefficient_count: gens.len(), text, latex }
}

/// Minimal text-to-LaTeX touch-up for polynomial renderings: exponents get
/// braces, the explicit `*` becomes a thin space.
pub fn latexify(s: &str) -> String {
    let mut out = String::new();
    let mut chars = s.chars().peekable();
    while let Some(c) = chars.next() {
        match c {
            '*' => out.push_str("\\,"),
            '^' => {
                let mut digits = String::new();
                while chars.peek().map(|c| c.is_ascii_digit()).unwrap_or(false) {
                    digits.push(chars.next().unwrap());
                }
                out.push_str(&format!("^{{{digits}}}"));
            }
            other => out.push(other),
        }
    }
    out
}

/// Everything the front end reports: the kernel-level sets, the module basis
/// and the per-j generator sets.
pub struct PipelineResult {
    pub k_invariants: GeneratorSet,
    pub k_equivariants: GeneratorSet,
    pub module_basis: GeneratorSet,
    /// Indexed by j - 1, for j = 1..m-1.
    pub relative_invariants: Vec<GeneratorSet>,
    /// Indexed by j, for j = 0..m-1.
    pub relative_equivariants: Vec<GeneratorSet>,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct PipelineOptions {
    pub k_degree_bound: Option<u32>,
    pub check_degree: Option<u32>,
}

/// Runs the whole generator pipeline.
pub fn run_pipeline(group: &GradedGroup, options: PipelineOptions) -> Result<PipelineResult> {
    let bound = options
        .k_degree_bound
        .unwrap_or_else(|| default_k_degree_bound(group));
    let u = k_invariant_basis(group, bound, options.check_degree)?;
    let h = k_equivariant_generators(group, bound, options.check_degree)?;
    let b = module_basis_b(group, &u, options.check_degree)?;
    let mut relative_invariants = Vec::new();
    for j in 1..group.modulus() {
        relative_invariants.push(relative_invariant_generators(
            group,
            j,
            &u,
            options.check_degree,
        )?);
    }
    let mut relative_equivariants = Vec::new();
    for j in 0..group.modulus() {
        relative_equivariants.push(relative_equivariant_generators(
            group,
            j,
            &b,
            &h,
            options.check_degree,
        )?);
    }
    Ok(PipelineResult {
        k_invariants: u,
        k_equivariants: h,
        module_basis: b,
        relative_invariants,
        relative_equivariants,
    })
}
