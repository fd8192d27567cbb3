//! Averaging and projection operators: the kernel average onto K-invariants /
//! K-equivariants and the relative Reynolds projectors R_j indexed by the
//! grading.
//!
//! The vector projector applies eta(delta^k)^-1 on the target side. With the
//! literal transcription eta(delta^k) the operators fail idempotence and the
//! worked examples; with the inverse they are exactly the projections onto
//! the relative equivariants, so that form is implemented and pinned by the
//! property tests.

use crate::error::{Error, Result};
use crate::exact::{rational, Cyclotomic};
use crate::exec;
use crate::group::GradedGroup;
use crate::poly::{act_on_map, act_on_poly, Poly, PolyMap};

/// Values the group acts on: scalar polynomials and polynomial maps. The map
/// action already carries the target-side inverse, so relative invariance and
/// relative equivariance are the same fixed-point statement through this
/// trait.
pub trait GroupAction: Clone + PartialEq + Send + Sync {
    fn act(&self, group: &GradedGroup, element: usize) -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn scale(&self, c: &Cyclotomic) -> Self;
    fn zero_like(&self) -> Self;
    fn is_zero(&self) -> bool;
}

impl GroupAction for Poly {
    fn act(&self, group: &GradedGroup, element: usize) -> Self {
        act_on_poly(group, element, self)
    }

    fn plus(&self, other: &Self) -> Self {
        self.add(other)
    }

    fn scale(&self, c: &Cyclotomic) -> Self {
        Poly::scale(self, c)
    }

    fn zero_like(&self) -> Self {
        Poly::zero(self.nvars())
    }

    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
}

impl GroupAction for PolyMap {
    fn act(&self, group: &GradedGroup, element: usize) -> Self {
        act_on_map(group, element, self)
    }

    fn plus(&self, other: &Self) -> Self {
        self.add(other)
    }

    fn scale(&self, c: &Cyclotomic) -> Self {
        PolyMap::scale(self, c)
    }

    fn zero_like(&self) -> Self {
        PolyMap::zero(self.nvars(), self.ncomponents())
    }

    fn is_zero(&self) -> bool {
        PolyMap::is_zero(self)
    }
}

/// (1/|K|) sum over the kernel of gamma . input. The output is K-invariant
/// (scalar) or K-equivariant (vector).
pub fn average_over_k<T: GroupAction>(group: &GradedGroup, input: &T) -> T {
    let sum = exec::map_sum(
        group.kernel_indices(),
        |&k| input.act(group, k),
        |a, b| a.plus(&b),
        input.zero_like(),
    );
    sum.scale(&Cyclotomic::from_rational(rational(1, group.kernel_order() as i64)))
}

/// Sequential variant, for benchmarks comparing against the parallel path.
pub fn average_over_k_seq<T: GroupAction>(group: &GradedGroup, input: &T) -> T {
    let sum = exec::map_sum_seq(
        group.kernel_indices(),
        |&k| input.act(group, k),
        |a, b| a.plus(&b),
        input.zero_like(),
    );
    sum.scale(&Cyclotomic::from_rational(rational(1, group.kernel_order() as i64)))
}

/// Whole-group average (1/|Gamma|) sum of gamma . input; projects onto the
/// Gamma-invariants / Gamma-equivariants.
pub fn average_over_group<T: GroupAction>(group: &GradedGroup, input: &T) -> T {
    let indices: Vec<usize> = (0..group.order()).collect();
    let sum = exec::map_sum(
        &indices,
        |&k| input.act(group, k),
        |a, b| a.plus(&b),
        input.zero_like(),
    );
    sum.scale(&Cyclotomic::from_rational(rational(1, group.order() as i64)))
}

/// True when `input` is fixed by every kernel element.
pub fn is_k_fixed<T: GroupAction>(group: &GradedGroup, input: &T) -> bool {
    group
        .kernel_indices()
        .iter()
        .all(|&k| input.act(group, k) == *input)
}

/// The defining identity of the sigma^j-relative objects, checked on every
/// group generator (sufficient since sigma and the action are homomorphisms).
pub fn is_relative<T: GroupAction>(group: &GradedGroup, j: u32, input: &T) -> bool {
    group.generator_indices().iter().all(|&g| {
        let twisted = input.scale(&group.sigma_power_value(g, j));
        input.act(group, g) == twisted
    })
}

pub fn is_relative_invariant(group: &GradedGroup, j: u32, f: &Poly) -> bool {
    is_relative(group, j, f)
}

pub fn is_relative_equivariant(group: &GradedGroup, j: u32, g: &PolyMap) -> bool {
    is_relative(group, j, g)
}

/// The relative Reynolds projector R_j on K-processed input:
/// (1/m) sum_k conj(sigma(delta)^(jk)) (delta^k . input).
///
/// The input must already be K-invariant / K-equivariant; that precondition
/// is enforced rather than silently composing with the kernel average.
pub fn relative_project<T: GroupAction>(group: &GradedGroup, j: u32, input: &T) -> Result<T> {
    if j >= group.modulus() {
        return Err(Error::InvalidInput(format!(
            "projector index {j} out of range for m = {}",
            group.modulus()
        )));
    }
    if !is_k_fixed(group, input) {
        return Err(Error::Precondition(
            "projector input must be invariant under the kernel".into(),
        ));
    }
    let m = group.modulus();
    let reps = group.coset_representatives();
    let weighted: Vec<(usize, Cyclotomic)> = reps
        .into_iter()
        .enumerate()
        .map(|(k, rep)| {
            let phase = Cyclotomic::root_of_unity(j as i64 * k as i64, m).conj();
            (rep, phase)
        })
        .collect();
    let sum = exec::map_sum(
        &weighted,
        |(rep, phase)| input.act(group, *rep).scale(phase),
        |a, b| a.plus(&b),
        input.zero_like(),
    );
    Ok(sum.scale(&Cyclotomic::from_rational(rational(1, m as i64))))
}

/// Scalar projector, as in the generating-set construction.
pub fn relative_project_poly(group: &GradedGroup, j: u32, f: &Poly) -> Result<Poly> {
    relative_project(group, j, f)
}

/// Vector projector onto the sigma^j-relative equivariants.
pub fn relative_project_map(group: &GradedGroup, j: u32, g: &PolyMap) -> Result<PolyMap> {
    relative_project(group, j, g)
}
