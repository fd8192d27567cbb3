//! Finite matrix groups graded by an epimorphism onto Z_m.
//!
//! An element carries two representation matrices: `rho` acting on the source
//! variables and `eta` acting on the target of polynomial maps. The grading
//! value sigma lives in {0, ..., m-1}; its kernel K and a coset representative
//! delta with sigma(delta) = 1 split the group into the cosets delta^j K.

use std::collections::HashMap;

use num::Integer;

use crate::error::{Error, Result};
use crate::exact::Cyclotomic;
use crate::matrix::CycMatrix;

#[derive(Clone, Debug)]
pub struct GroupElement {
    pub rho: CycMatrix,
    pub eta: CycMatrix,
    pub sigma: u32,
    /// Canonical ordinal assigned during closure.
    pub index: usize,
}

/// One generator of the group: source matrix, optional target matrix
/// (defaults to the source one) and grading value.
#[derive(Clone, Debug)]
pub struct GeneratorInput {
    pub rho: CycMatrix,
    pub eta: Option<CycMatrix>,
    pub sigma: u32,
}

/// Which representation a query refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Repr {
    Source,
    Target,
}

#[derive(Clone, Debug)]
pub struct GradedGroup {
    m: u32,
    source_dim: usize,
    target_dim: usize,
    conductor: u32,
    elements: Vec<GroupElement>,
    kernel: Vec<usize>,
    delta: usize,
    inverses: Vec<usize>,
    generator_indices: Vec<usize>,
    index_by_key: HashMap<String, usize>,
}

fn pair_key(rho: &CycMatrix, eta: &CycMatrix) -> String {
    let mut key = String::new();
    rho.write_key(&mut key);
    key.push('/');
    eta.write_key(&mut key);
    key
}

/// Breadth-first closure of the generators under multiplication.
///
/// Elements are deduplicated by exact (rho, eta) equality; the first closure
/// element with sigma = 1 becomes delta. Fails if the closure exceeds
/// `max_order`, if one matrix pair is reached with two distinct sigma values,
/// or if sigma does not attain every residue mod m.
pub fn close_group(generators: &[GeneratorInput], m: u32, max_order: usize) -> Result<GradedGroup> {
    if m < 1 {
        return Err(Error::InvalidInput("grading modulus m must be >= 1".into()));
    }
    if max_order < 1 {
        return Err(Error::InvalidInput("max_order must be >= 1".into()));
    }
    if generators.is_empty() {
        return Err(Error::InvalidInput("at least one generator required".into()));
    }
    let n = generators[0].rho.nrows();
    let w = generators[0]
        .eta
        .as_ref()
        .map(|e| e.nrows())
        .unwrap_or(n);
    let mut conductor = m;
    for g in generators {
        if !g.rho.is_square() || g.rho.nrows() != n {
            return Err(Error::InvalidInput(
                "source matrices must be square and of equal dimension".into(),
            ));
        }
        if let Some(eta) = &g.eta {
            if !eta.is_square() || eta.nrows() != w {
                return Err(Error::InvalidInput(
                    "target matrices must be square and of equal dimension".into(),
                ));
            }
        }
        if g.sigma >= m {
            return Err(Error::InvalidInput(format!(
                "sigma value {} out of range for m = {m}",
                g.sigma
            )));
        }
        conductor = conductor.lcm(&g.rho.max_conductor());
        if let Some(eta) = &g.eta {
            conductor = conductor.lcm(&eta.max_conductor());
        }
    }

    // All elements live at one shared conductor so the dedup key is a value key.
    let gens: Vec<GroupElement> = generators
        .iter()
        .map(|g| GroupElement {
            rho: g.rho.raised_to_conductor(conductor),
            eta: g
                .eta
                .as_ref()
                .unwrap_or(&g.rho)
                .raised_to_conductor(conductor),
            sigma: g.sigma % m,
            index: 0,
        })
        .collect();

    let identity = GroupElement {
        rho: CycMatrix::identity(n),
        eta: CycMatrix::identity(w),
        sigma: 0,
        index: 0,
    };

    let mut elements: Vec<GroupElement> = Vec::new();
    let mut index_by_key: HashMap<String, usize> = HashMap::new();
    let push = |e: GroupElement,
                    elements: &mut Vec<GroupElement>,
                    index_by_key: &mut HashMap<String, usize>|
     -> Result<Option<usize>> {
        let key = pair_key(&e.rho, &e.eta);
        if let Some(&i) = index_by_key.get(&key) {
            if elements[i].sigma != e.sigma {
                return Err(Error::SigmaIllDefined);
            }
            return Ok(None);
        }
        let index = elements.len();
        index_by_key.insert(key, index);
        elements.push(GroupElement { index, ..e });
        Ok(Some(index))
    };

    push(identity, &mut elements, &mut index_by_key)?;
    let mut frontier = 0;
    while frontier < elements.len() {
        let current = elements[frontier].clone();
        for g in &gens {
            let product = GroupElement {
                rho: current.rho.mul(&g.rho),
                eta: current.eta.mul(&g.eta),
                sigma: (current.sigma + g.sigma) % m,
                index: 0,
            };
            if push(product, &mut elements, &mut index_by_key)?.is_some()
                && elements.len() > max_order
            {
                return Err(Error::NotFiniteWithinBound(max_order));
            }
        }
        frontier += 1;
    }

    let kernel: Vec<usize> = elements
        .iter()
        .filter(|e| e.sigma == 0)
        .map(|e| e.index)
        .collect();
    let mut seen = vec![false; m as usize];
    for e in &elements {
        seen[e.sigma as usize] = true;
    }
    if !seen.iter().all(|&s| s) {
        return Err(Error::SigmaNotEpimorphism);
    }
    if elements.len() != kernel.len() * m as usize {
        return Err(Error::Internal(
            "coset sizes do not match kernel order".into(),
        ));
    }
    let delta = if m == 1 {
        0
    } else {
        elements
            .iter()
            .find(|e| e.sigma == 1)
            .map(|e| e.index)
            .expect("sigma surjective, so a sigma=1 element exists")
    };

    let generator_indices = gens
        .iter()
        .map(|g| index_by_key[&pair_key(&g.rho, &g.eta)])
        .collect();

    let mut group = GradedGroup {
        m,
        source_dim: n,
        target_dim: w,
        conductor,
        elements,
        kernel,
        delta,
        inverses: Vec::new(),
        generator_indices,
        index_by_key,
    };
    group.inverses = group.compute_inverses();
    Ok(group)
}

impl GradedGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn modulus(&self) -> u32 {
        self.m
    }

    pub fn source_dim(&self) -> usize {
        self.source_dim
    }

    pub fn target_dim(&self) -> usize {
        self.target_dim
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn element(&self, index: usize) -> &GroupElement {
        &self.elements[index]
    }

    pub fn kernel_indices(&self) -> &[usize] {
        &self.kernel
    }

    pub fn kernel_order(&self) -> usize {
        self.kernel.len()
    }

    pub fn delta_index(&self) -> usize {
        self.delta
    }

    pub fn generator_indices(&self) -> &[usize] {
        &self.generator_indices
    }

    /// Index of the product of two elements, located in the element table.
    pub fn mul_indices(&self, a: usize, b: usize) -> usize {
        let rho = self.elements[a].rho.mul(&self.elements[b].rho);
        let eta = self.elements[a].eta.mul(&self.elements[b].eta);
        self.index_by_key[&pair_key(&rho, &eta)]
    }

    fn compute_inverses(&self) -> Vec<usize> {
        let mut inv = vec![0usize; self.elements.len()];
        for e in &self.elements {
            // Walk powers of e until the identity shows up; the previous
            // power is the inverse, found by table lookup.
            let mut prev = e.index;
            let mut cur = e.index;
            while cur != 0 {
                prev = cur;
                cur = self.mul_indices(cur, e.index);
            }
            inv[e.index] = if e.index == 0 { 0 } else { prev };
        }
        inv
    }

    /// The inverse group element, by table lookup rather than matrix
    /// inversion.
    pub fn inverse_index(&self, index: usize) -> usize {
        self.inverses[index]
    }

    /// Exact trace of the selected representation matrix.
    pub fn character(&self, index: usize, which: Repr) -> Cyclotomic {
        match which {
            Repr::Source => self.elements[index].rho.trace(),
            Repr::Target => self.elements[index].eta.trace(),
        }
    }

    /// sigma as a root of unity: zeta_m^(sigma(gamma)).
    pub fn sigma_value(&self, index: usize) -> Cyclotomic {
        Cyclotomic::root_of_unity(self.elements[index].sigma as i64, self.m)
    }

    /// zeta_m^(j * sigma(gamma)), the character sigma^j evaluated at gamma.
    pub fn sigma_power_value(&self, index: usize, j: u32) -> Cyclotomic {
        let s = self.elements[index].sigma as i64;
        Cyclotomic::root_of_unity(j as i64 * s, self.m)
    }

    /// Coset representatives [delta^0, delta^1, ..., delta^(m-1)], computed
    /// by repeated multiplication.
    pub fn coset_representatives(&self) -> Vec<usize> {
        let mut reps = Vec::with_capacity(self.m as usize);
        let mut cur = 0usize;
        for k in 0..self.m {
            if k > 0 {
                cur = self.mul_indices(cur, self.delta);
            }
            reps.push(cur);
        }
        reps
    }

    /// Same group with a different choice of delta; the new element must have
    /// sigma = 1. The theorems do not depend on the choice.
    pub fn with_delta(&self, delta: usize) -> Result<GradedGroup> {
        if self.m == 1 {
            return Ok(self.clone());
        }
        if self.elements[delta].sigma != 1 {
            return Err(Error::InvalidInput(
                "delta must have grading value 1".into(),
            ));
        }
        let mut g = self.clone();
        g.delta = delta;
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;

    fn scalar_gen(c: Cyclotomic, sigma: u32) -> GeneratorInput {
        GeneratorInput {
            rho: CycMatrix::from_rows(vec![vec![c]]),
            eta: None,
            sigma,
        }
    }

    #[test]
    fn trivial_group() {
        let g = close_group(&[scalar_gen(Cyclotomic::one(), 0)], 1, 10).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.kernel_order(), 1);
        assert_eq!(g.coset_representatives(), vec![0]);
    }

    #[test]
    fn cyclic_order_four() {
        let g = close_group(
            &[scalar_gen(Cyclotomic::root_of_unity(1, 4), 1)],
            4,
            100,
        )
        .unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.kernel_order(), 1);
        let reps = g.coset_representatives();
        for (k, &r) in reps.iter().enumerate() {
            assert_eq!(g.element(r).sigma, k as u32);
        }
        // delta^m lands in the kernel
        let dm = g.mul_indices(reps[3], g.delta_index());
        assert_eq!(g.element(dm).sigma, 0);
    }

    #[test]
    fn paper_group_closure() {
        let g = presets::z3xz3();
        assert_eq!(g.order(), 9);
        assert_eq!(g.kernel_order(), 3);
        assert_eq!(g.modulus(), 3);
        // delta realizes (1, zeta_3): target trace is 1 + zeta_3.
        let chi = g.character(g.delta_index(), Repr::Target);
        let expected = Cyclotomic::one().add(&Cyclotomic::root_of_unity(1, 3));
        assert_eq!(chi, expected);
        // sigma(delta^-1) = 2
        let inv = g.inverse_index(g.delta_index());
        assert_eq!(g.element(inv).sigma, 2);
    }

    #[test]
    fn inverses_multiply_to_identity() {
        let g = presets::z3xz3();
        for e in g.elements() {
            let inv = g.inverse_index(e.index);
            assert_eq!(g.mul_indices(e.index, inv), 0);
            assert_eq!(g.mul_indices(inv, e.index), 0);
        }
        assert_eq!(g.inverse_index(0), 0);
    }

    #[test]
    fn sigma_is_homomorphism_on_all_pairs() {
        let g = presets::z3xz3();
        for a in 0..g.order() {
            for b in 0..g.order() {
                let p = g.mul_indices(a, b);
                assert_eq!(
                    g.element(p).sigma,
                    (g.element(a).sigma + g.element(b).sigma) % g.modulus()
                );
            }
        }
    }

    #[test]
    fn cosets_are_equinumerous() {
        for g in [presets::z3xz3(), presets::reversible_z4(), presets::cyclic_z4_m4()] {
            let mut counts = vec![0usize; g.modulus() as usize];
            for e in g.elements() {
                counts[e.sigma as usize] += 1;
            }
            assert!(counts.iter().all(|&c| c == g.kernel_order()));
        }
    }

    #[test]
    fn shuffled_generators_same_element_set() {
        let build = |flip: bool| {
            let (a, b) = presets::z3xz3_generators();
            let gens = if flip { vec![b, a] } else { vec![a, b] };
            close_group(&gens, 3, 100).unwrap()
        };
        let g1 = build(false);
        let g2 = build(true);
        assert_eq!(g1.order(), g2.order());
        let keys = |g: &GradedGroup| {
            let mut v: Vec<String> = g
                .elements()
                .iter()
                .map(|e| pair_key(&e.rho, &e.eta))
                .collect();
            v.sort();
            v
        };
        assert_eq!(keys(&g1), keys(&g2));
    }

    #[test]
    fn sigma_conflict_is_rejected() {
        let z4 = Cyclotomic::root_of_unity(1, 4);
        let gens = vec![scalar_gen(z4.clone(), 1), scalar_gen(z4, 0)];
        assert!(matches!(
            close_group(&gens, 4, 100),
            Err(Error::SigmaIllDefined)
        ));
    }

    #[test]
    fn non_surjective_sigma_is_rejected() {
        let gens = vec![scalar_gen(Cyclotomic::from_integer(-1), 0)];
        assert!(matches!(
            close_group(&gens, 2, 100),
            Err(Error::SigmaNotEpimorphism)
        ));
    }

    #[test]
    fn infinite_group_hits_bound() {
        // A shear has infinite order.
        let shear = CycMatrix::from_rows(vec![
            vec![Cyclotomic::one(), Cyclotomic::one()],
            vec![Cyclotomic::zero(), Cyclotomic::one()],
        ]);
        let gens = vec![GeneratorInput { rho: shear, eta: None, sigma: 0 }];
        assert!(matches!(
            close_group(&gens, 1, 50),
            Err(Error::NotFiniteWithinBound(50))
        ));
    }
}
