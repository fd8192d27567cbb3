//! Sparse multivariate polynomials and polynomial maps over the cyclotomic
//! field, with the graded-group actions used throughout the pipeline.
//!
//! Monomials are ordered graded-lexicographically with the declared variable
//! order; all printed output and all reduction pivots use that order.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::Write;

use crate::exact::{Cyclotomic, Rational};
use crate::group::GradedGroup;

/// Exponent vector with graded-lex ordering (total degree first, then
/// lexicographic with earlier variables ranked higher).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mono(pub Vec<u32>);

impl Mono {
    pub fn constant(nvars: usize) -> Self {
        Mono(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Mono(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        Mono(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

/// All monomials of the given total degree, ascending in graded-lex order.
pub fn monomials_of_degree(nvars: usize, degree: u32) -> Vec<Mono> {
    fn rec(nvars: usize, degree: u32, prefix: &mut Vec<u32>, out: &mut Vec<Mono>) {
        if prefix.len() + 1 == nvars {
            let mut e = prefix.clone();
            e.push(degree);
            out.push(Mono(e));
            return;
        }
        for d in 0..=degree {
            prefix.push(d);
            rec(nvars, degree - d, prefix, out);
            prefix.pop();
        }
    }
    if nvars == 0 {
        return if degree == 0 { vec![Mono(vec![])] } else { vec![] };
    }
    let mut out = Vec::new();
    rec(nvars, degree, &mut Vec::new(), &mut out);
    out.sort();
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Mono, Cyclotomic>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Poly::monomial(Mono::constant(nvars), Cyclotomic::one())
    }

    pub fn variable(nvars: usize, i: usize) -> Self {
        Poly::monomial(Mono::var(nvars, i), Cyclotomic::one())
    }

    pub fn monomial(mono: Mono, coeff: Cyclotomic) -> Self {
        let nvars = mono.0.len();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(mono, coeff);
        }
        Poly { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Cyclotomic)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, mono: &Mono) -> Cyclotomic {
        self.terms.get(mono).cloned().unwrap_or_else(Cyclotomic::zero)
    }

    /// Max total degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// Graded-lex leading term.
    pub fn leading(&self) -> Option<(&Mono, &Cyclotomic)> {
        self.terms.iter().next_back()
    }

    fn insert_add(&mut self, mono: Mono, coeff: Cyclotomic) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&mono) {
            Some(c) => {
                let sum = c.add(&coeff);
                if sum.is_zero() {
                    self.terms.remove(&mono);
                } else {
                    *c = sum;
                }
            }
            None => {
                self.terms.insert(mono, coeff);
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_add(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Poly::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.insert_add(ma.mul(mb), ca.mul(cb));
            }
        }
        out
    }

    pub fn scale(&self, c: &Cyclotomic) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v.mul(c))).collect(),
        }
    }

    pub fn scale_rational(&self, r: &Rational) -> Poly {
        self.scale(&Cyclotomic::from_rational(r.clone()))
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut out = Poly::one(self.nvars);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// The degree-d homogeneous part.
    pub fn homogeneous_component(&self, d: u32) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Total degree if every term shares it (the zero polynomial counts as
    /// homogeneous of any degree and returns None).
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut iter = self.terms.keys().map(|m| m.degree());
        let first = iter.next()?;
        iter.all(|d| d == first).then_some(first)
    }

    /// Substitute variables: x_i is replaced by `images[i]`.
    pub fn substitute(&self, images: &[Poly]) -> Poly {
        assert_eq!(images.len(), self.nvars);
        // Powers of each image are shared across terms.
        let mut powers: Vec<Vec<Poly>> = images
            .iter()
            .map(|p| vec![Poly::one(p.nvars())])
            .collect();
        let out_vars = images.first().map(|p| p.nvars()).unwrap_or(self.nvars);
        let mut out = Poly::zero(out_vars);
        for (mono, coeff) in &self.terms {
            let mut term = Poly::monomial(Mono::constant(out_vars), coeff.clone());
            for (i, &e) in mono.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul(&images[i]);
                    powers[i].push(next);
                }
                term = term.mul(&powers[i][e as usize]);
            }
            out = out.add(&term);
        }
        out
    }

    /// Scale so the graded-lex leading coefficient is one.
    pub fn normalized(&self) -> Poly {
        match self.leading() {
            Some((_, c)) => {
                let inv = c.inv().expect("leading coefficient nonzero");
                self.scale(&inv)
            }
            None => self.clone(),
        }
    }

    /// Coefficient row over an indexed monomial basis.
    pub fn coeff_row(&self, index: &MonoIndex) -> Vec<Cyclotomic> {
        let mut row = vec![Cyclotomic::zero(); index.len()];
        for (m, c) in &self.terms {
            row[index.position(m)] = c.clone();
        }
        row
    }

    /// Renders with the given variable names, graded-lex leading term first.
    pub fn render(&self, names: &[&str]) -> String {
        assert_eq!(names.len(), self.nvars);
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (mono, coeff)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                out.push_str(" + ");
            }
            out.push_str(&render_term(mono, coeff, names));
        }
        out
    }
}

fn render_term(mono: &Mono, coeff: &Cyclotomic, names: &[&str]) -> String {
    let mut vars = String::new();
    for (i, &e) in mono.0.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !vars.is_empty() {
            vars.push('*');
        }
        vars.push_str(names[i]);
        if e > 1 {
            write!(vars, "^{e}").unwrap();
        }
    }
    if vars.is_empty() {
        return wrap_sum(&coeff.to_string());
    }
    if coeff.is_one() {
        return vars;
    }
    if *coeff == Cyclotomic::from_integer(-1) {
        return format!("-{vars}");
    }
    format!("{}*{vars}", wrap_sum(&coeff.to_string()))
}

/// Multi-term cyclotomic coefficients get parentheses inside a product.
fn wrap_sum(s: &str) -> String {
    let inner_signs = s
        .char_indices()
        .any(|(i, ch)| i > 0 && (ch == '+' || ch == '-') && !s[..i].ends_with('('));
    if inner_signs {
        format!("({s})")
    } else {
        s.to_string()
    }
}

/// Position lookup for the monomial basis of one degree.
pub struct MonoIndex {
    positions: BTreeMap<Mono, usize>,
    list: Vec<Mono>,
}

impl MonoIndex {
    pub fn new(list: Vec<Mono>) -> Self {
        let positions = list
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        MonoIndex { positions, list }
    }

    pub fn of_degree(nvars: usize, degree: u32) -> Self {
        MonoIndex::new(monomials_of_degree(nvars, degree))
    }

    pub fn len(&self) -> usize {
        self.list.len()
    }

    pub fn is_empty(&self) -> bool {
        self.list.is_empty()
    }

    pub fn position(&self, m: &Mono) -> usize {
        *self
            .positions
            .get(m)
            .expect("monomial outside the indexed degree")
    }

    pub fn monomial(&self, i: usize) -> &Mono {
        &self.list[i]
    }
}

/// Polynomial map V -> W: one component per target dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMap {
    pub components: Vec<Poly>,
}

impl PolyMap {
    pub fn zero(nvars: usize, ncomponents: usize) -> Self {
        PolyMap { components: vec![Poly::zero(nvars); ncomponents] }
    }

    /// Single-monomial single-component map.
    pub fn monomial(nvars: usize, ncomponents: usize, component: usize, mono: Mono) -> Self {
        let mut map = PolyMap::zero(nvars, ncomponents);
        map.components[component] = Poly::monomial(mono, Cyclotomic::one());
        map
    }

    pub fn nvars(&self) -> usize {
        self.components.first().map(|p| p.nvars()).unwrap_or(0)
    }

    pub fn ncomponents(&self) -> usize {
        self.components.len()
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|p| p.is_zero())
    }

    pub fn add(&self, other: &PolyMap) -> PolyMap {
        assert_eq!(self.ncomponents(), other.ncomponents());
        PolyMap {
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &PolyMap) -> PolyMap {
        PolyMap {
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Cyclotomic) -> PolyMap {
        PolyMap { components: self.components.iter().map(|p| p.scale(c)).collect() }
    }

    pub fn scale_rational(&self, r: &Rational) -> PolyMap {
        PolyMap {
            components: self.components.iter().map(|p| p.scale_rational(r)).collect(),
        }
    }

    /// Multiply every component by a scalar polynomial.
    pub fn mul_poly(&self, v: &Poly) -> PolyMap {
        PolyMap { components: self.components.iter().map(|p| p.mul(v)).collect() }
    }

    pub fn degree(&self) -> Option<u32> {
        self.components.iter().filter_map(|p| p.degree()).max()
    }

    pub fn homogeneous_component(&self, d: u32) -> PolyMap {
        PolyMap {
            components: self
                .components
                .iter()
                .map(|p| p.homogeneous_component(d))
                .collect(),
        }
    }

    /// Every nonzero term across all components has total degree d.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut deg = None;
        for p in &self.components {
            if let Some(d) = p.homogeneous_degree() {
                match deg {
                    None => deg = Some(d),
                    Some(e) if e == d => {}
                    _ => return None,
                }
            } else if !p.is_zero() {
                return None;
            }
        }
        deg
    }

    /// Leading entry: the graded-lex greatest monomial over all components,
    /// ties broken towards the smallest component index.
    pub fn leading_entry(&self) -> Option<(usize, &Mono, &Cyclotomic)> {
        let mut best: Option<(usize, &Mono, &Cyclotomic)> = None;
        for (i, p) in self.components.iter().enumerate() {
            if let Some((m, c)) = p.leading() {
                let better = match &best {
                    None => true,
                    Some((_, bm, _)) => m > *bm,
                };
                if better {
                    best = Some((i, m, c));
                }
            }
        }
        best
    }

    /// Scale so the leading entry's coefficient is one.
    pub fn normalized(&self) -> PolyMap {
        match self.leading_entry() {
            Some((_, _, c)) => {
                let inv = c.inv().expect("leading coefficient nonzero");
                self.scale(&inv)
            }
            None => self.clone(),
        }
    }

    /// Coefficient row over (component, monomial) columns, component-major.
    pub fn coeff_row(&self, index: &MonoIndex) -> Vec<Cyclotomic> {
        let ncols = index.len() * self.ncomponents();
        let mut row = vec![Cyclotomic::zero(); ncols];
        for (ci, p) in self.components.iter().enumerate() {
            for (m, c) in p.terms() {
                row[ci * index.len() + index.position(m)] = c.clone();
            }
        }
        row
    }

    pub fn render(&self, names: &[&str]) -> String {
        let inner: Vec<String> = self.components.iter().map(|p| p.render(names)).collect();
        format!("({})", inner.join(", "))
    }
}

/// The action (gamma . f)(x) = f(rho(gamma) x) on scalar polynomials.
pub fn act_on_poly(group: &GradedGroup, gamma: usize, f: &Poly) -> Poly {
    let rho = &group.element(gamma).rho;
    let n = group.source_dim();
    assert_eq!(f.nvars(), n, "polynomial arity must match the source dimension");
    let images: Vec<Poly> = (0..n)
        .map(|i| {
            let mut row = Poly::zero(n);
            for j in 0..n {
                let c = rho.entry(i, j);
                if !c.is_zero() {
                    row = row.add(&Poly::monomial(Mono::var(n, j), c.clone()));
                }
            }
            row
        })
        .collect();
    f.substitute(&images)
}

/// The action (gamma . g)(x) = eta(gamma)^-1 g(rho(gamma) x) on polynomial
/// maps. The target-side inverse is the group inverse's eta matrix, so fixed
/// points of the averaged action are exactly the equivariants.
pub fn act_on_map(group: &GradedGroup, gamma: usize, g: &PolyMap) -> PolyMap {
    let w = group.target_dim();
    assert_eq!(g.ncomponents(), w, "component count must match the target dimension");
    let substituted: Vec<Poly> = g
        .components
        .iter()
        .map(|p| act_on_poly(group, gamma, p))
        .collect();
    let eta_inv = &group.element(group.inverse_index(gamma)).eta;
    let components = (0..w)
        .map(|i| {
            let mut acc = Poly::zero(group.source_dim());
            for (k, sub) in substituted.iter().enumerate() {
                let c = eta_inv.entry(i, k);
                if !c.is_zero() {
                    acc = acc.add(&sub.scale(c));
                }
            }
            acc
        })
        .collect();
    PolyMap { components }
}
