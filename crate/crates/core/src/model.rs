//! Fermat Landau–Ginzburg pairs `(w, G)`.
//!
//! A model is the weight vector `c` and degree `d` of `w = Σ x_j^{d/c_j}`.
//! Group elements are exponent vectors `a` with `0 <= a_j < d/c_j`, acting on
//! `x_j` by `e^{2πi a_j c_j/d}`. Every multiplicity is therefore a multiple of
//! `1/d` and all roots of unity live in `Q(ξ_d)`.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::foundation::rational::{self, rat, Rational};
use crate::foundation::CycField;

/// Default bound on `|G|`.
pub const DEFAULT_GROUP_CAP: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LGModel {
    weights: Vec<u32>,
    degree: u32,
}

impl LGModel {
    pub fn new(weights: Vec<u32>, degree: u32) -> Result<LGModel> {
        if weights.is_empty() {
            return Err(Error::InvalidModel("at least one variable is required".into()));
        }
        if degree == 0 {
            return Err(Error::InvalidModel("degree must be positive".into()));
        }
        for (j, &c) in weights.iter().enumerate() {
            if c == 0 {
                return Err(Error::InvalidModel(format!("weight c_{} must be positive", j + 1)));
            }
            if degree % c != 0 {
                return Err(Error::InvalidModel(format!(
                    "weight c_{} = {c} does not divide the degree {degree} (Fermat exponent not integral)",
                    j + 1
                )));
            }
        }
        Ok(LGModel { weights, degree })
    }

    /// The Fermat quintic in five variables.
    pub fn quintic() -> LGModel {
        LGModel::new(vec![1; 5], 5).expect("valid model")
    }

    pub fn n(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn weight(&self, j: usize) -> u32 {
        self.weights[j]
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// `q_j = c_j / d`.
    pub fn q(&self, j: usize) -> Rational {
        rat(self.weights[j] as i64, self.degree as i64)
    }

    pub fn sum_weights(&self) -> u32 {
        self.weights.iter().sum()
    }

    pub fn sum_q(&self) -> Rational {
        rat(self.sum_weights() as i64, self.degree as i64)
    }

    /// Fermat exponent `d / c_j`, the order of the `j`-th factor of `G_max`.
    pub fn exponent(&self, j: usize) -> u32 {
        self.degree / self.weights[j]
    }

    /// The grading element `j = (1, …, 1)`.
    pub fn j_element(&self) -> GroupElement {
        GroupElement((0..self.n()).map(|j| 1 % self.exponent(j)).collect())
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement(vec![0; self.n()])
    }

    pub fn check_element(&self, g: &GroupElement) -> Result<()> {
        if g.0.len() != self.n() {
            return Err(Error::NotInGroup(format!(
                "element {g} has {} entries, the model has {} variables",
                g.0.len(),
                self.n()
            )));
        }
        for (j, &a) in g.0.iter().enumerate() {
            if a >= self.exponent(j) {
                return Err(Error::NotInGroup(format!(
                    "entry a_{} = {a} of {g} must lie in [0, {})",
                    j + 1,
                    self.exponent(j)
                )));
            }
        }
        Ok(())
    }

    /// `Σ c_j = d`.
    pub fn is_quasi_cy(&self) -> bool {
        self.sum_weights() == self.degree
    }
}

impl fmt::Display for LGModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c = {:?}, d = {}", self.weights, self.degree)
    }
}

/// A diagonal symmetry stored by its exponent vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupElement(pub Vec<u32>);

impl GroupElement {
    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    /// `a_j c_j`, i.e. `d · m_j(g)`, in `[0, d)`.
    pub fn units(&self, model: &LGModel) -> Vec<u32> {
        self.0.iter().zip(model.weights()).map(|(a, c)| a * c).collect()
    }

    pub fn multiplicities(&self, model: &LGModel) -> Vec<Rational> {
        self.units(model).into_iter().map(|u| rat(u as i64, model.degree() as i64)).collect()
    }

    pub fn mul(&self, o: &GroupElement, model: &LGModel) -> GroupElement {
        GroupElement(
            self.0.iter().zip(&o.0).enumerate().map(|(j, (a, b))| (a + b) % model.exponent(j)).collect(),
        )
    }

    pub fn inv(&self, model: &LGModel) -> GroupElement {
        GroupElement(self.0.iter().enumerate().map(|(j, a)| (model.exponent(j) - a) % model.exponent(j)).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub narrow: bool,
    pub fixed_rank: usize,
    pub age: Rational,
    pub det_twist: Rational,
}

pub fn classify(model: &LGModel, g: &GroupElement) -> Classification {
    let units = g.units(model);
    let fixed_rank = units.iter().filter(|&&u| u == 0).count();
    let age = rat(units.iter().map(|&u| u as i64).sum(), model.degree() as i64);
    let det_twist = rational::fract(&age);
    Classification { narrow: fixed_rank == 0, fixed_rank, age, det_twist }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructuralPredicates {
    pub quasi_cy: bool,
    pub in_sl: bool,
    pub convex_od: bool,
}

/// A character of `Ḡ`, stored by its values: `ζ(ḡ_p) = ξ_d^{values[p]}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BarCharacter(pub Vec<u32>);

impl BarCharacter {
    pub fn trivial(bar_order: usize) -> BarCharacter {
        BarCharacter(vec![0; bar_order])
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }

    pub fn value(&self, p: usize) -> u32 {
        self.0[p]
    }

    pub fn is_trivial(&self) -> bool {
        self.0.iter().all(|&v| v == 0)
    }

    pub fn mul(&self, o: &BarCharacter, d: u32) -> BarCharacter {
        BarCharacter(self.0.iter().zip(&o.0).map(|(a, b)| (a + b) % d).collect())
    }

    pub fn inv(&self, d: u32) -> BarCharacter {
        BarCharacter(self.0.iter().map(|a| (d - a) % d).collect())
    }

    pub fn pow(&self, k: i64, d: u32) -> BarCharacter {
        BarCharacter(self.0.iter().map(|&a| (a as i64 * k).rem_euclid(d as i64) as u32).collect())
    }
}

impl fmt::Display for BarCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// An admissible group `G = ⟨j⟩ ⊕ Ḡ` with `Ḡ = {g : a_1(g) = 0}`.
///
/// Elements are indexed so that `index(j^a ḡ_p) = a · |Ḡ| + p`; the identity
/// has index 0 and `j` has index `|Ḡ|` (or 0 when `d = 1`).
#[derive(Clone, Debug)]
pub struct SymmetryGroup {
    model: LGModel,
    elements: Vec<GroupElement>,
    lookup: HashMap<GroupElement, usize>,
    bar_order: usize,
    units: Vec<Vec<u32>>,
    info: Vec<Classification>,
    inverse: Vec<usize>,
    characters: Vec<BarCharacter>,
    field: Arc<CycField>,
}

impl SymmetryGroup {
    /// `G_max`, the full group of diagonal symmetries of `w`.
    pub fn gmax(model: &LGModel) -> Result<SymmetryGroup> {
        Self::gmax_with_cap(model, DEFAULT_GROUP_CAP)
    }

    pub fn gmax_with_cap(model: &LGModel, cap: usize) -> Result<SymmetryGroup> {
        let mut size: u128 = 1;
        for j in 0..model.n() {
            size *= model.exponent(j) as u128;
            if size > cap as u128 {
                let cap = cap as u128;
                return Err(Error::GroupTooLarge { size, cap });
            }
        }
        let mut elements = vec![model.identity()];
        for j in 0..model.n() {
            let mut next = Vec::with_capacity(elements.len() * model.exponent(j) as usize);
            for g in &elements {
                for a in 0..model.exponent(j) {
                    let mut h = g.clone();
                    h.0[j] = a;
                    next.push(h);
                }
            }
            elements = next;
        }
        Self::from_elements(model, elements.into_iter().collect())
    }

    /// The smallest subgroup containing the generators and `j`.
    pub fn closure(model: &LGModel, generators: &[GroupElement]) -> Result<SymmetryGroup> {
        Self::closure_with_cap(model, generators, DEFAULT_GROUP_CAP)
    }

    pub fn closure_with_cap(model: &LGModel, generators: &[GroupElement], cap: usize) -> Result<SymmetryGroup> {
        for g in generators {
            model.check_element(g)?;
        }
        let mut gens: Vec<GroupElement> = generators.to_vec();
        gens.push(model.j_element());
        let mut seen: BTreeSet<GroupElement> = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(model.identity());
        queue.push_back(model.identity());
        while let Some(g) = queue.pop_front() {
            for s in &gens {
                let h = g.mul(s, model);
                if seen.insert(h.clone()) {
                    if seen.len() > cap {
                        return Err(Error::GroupTooLarge { size: seen.len() as u128, cap: cap as u128 });
                    }
                    queue.push_back(h);
                }
            }
        }
        Self::from_elements(model, seen)
    }

    fn from_elements(model: &LGModel, set: BTreeSet<GroupElement>) -> Result<SymmetryGroup> {
        let d = model.degree();
        if model.weight(0) != 1 {
            return Err(Error::Splitting(format!(
                "the splitting G = <j> + Gbar with Gbar trivial on x_1 needs c_1 = 1, found c_1 = {}; \
                 reorder the coordinates so that a weight-1 variable comes first",
                model.weight(0)
            )));
        }
        let j = model.j_element();
        if !set.contains(&j) {
            return Err(Error::Splitting("the group does not contain j".into()));
        }
        let bar: Vec<GroupElement> = set.iter().filter(|g| g.0[0] == 0).cloned().collect();
        if bar.len() * d as usize != set.len() {
            return Err(Error::Splitting(format!(
                "|G| = {} but |<j>| · |Gbar| = {} · {}",
                set.len(),
                d,
                bar.len()
            )));
        }
        let bar_order = bar.len();
        let mut elements = Vec::with_capacity(set.len());
        let mut jpow = model.identity();
        for _ in 0..d {
            for gb in &bar {
                elements.push(jpow.mul(gb, model));
            }
            jpow = jpow.mul(&j, model);
        }
        let lookup: HashMap<GroupElement, usize> = elements.iter().cloned().enumerate().map(|(i, g)| (g, i)).collect();
        if lookup.len() != elements.len() {
            return Err(Error::Splitting("<j> and Gbar intersect nontrivially".into()));
        }
        let units: Vec<Vec<u32>> = elements.iter().map(|g| g.units(model)).collect();
        let info: Vec<Classification> = elements.iter().map(|g| classify(model, g)).collect();
        let inverse: Vec<usize> = elements.iter().map(|g| lookup[&g.inv(model)]).collect();

        // characters of Ḡ: closure of the coordinate characters
        let coord: Vec<BarCharacter> =
            (0..model.n()).map(|jj| BarCharacter((0..bar_order).map(|p| units[p][jj]).collect())).collect();
        let mut chars: BTreeSet<BarCharacter> = BTreeSet::new();
        let mut queue = VecDeque::new();
        chars.insert(BarCharacter::trivial(bar_order));
        queue.push_back(BarCharacter::trivial(bar_order));
        while let Some(z) = queue.pop_front() {
            for c in &coord {
                let n = z.mul(c, d);
                if chars.insert(n.clone()) {
                    queue.push_back(n);
                }
            }
        }
        if chars.len() != bar_order {
            return Err(Error::InvalidModel(format!(
                "found {} characters of Gbar, expected {}",
                chars.len(),
                bar_order
            )));
        }
        Ok(SymmetryGroup {
            model: model.clone(),
            elements,
            lookup,
            bar_order,
            units,
            info,
            inverse,
            characters: chars.into_iter().collect(),
            field: CycField::new(d),
        })
    }

    pub fn model(&self) -> &LGModel {
        &self.model
    }

    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    pub fn degree(&self) -> u32 {
        self.model.degree()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn bar_order(&self) -> usize {
        self.bar_order
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &GroupElement {
        &self.elements[i]
    }

    pub fn index_of(&self, g: &GroupElement) -> Option<usize> {
        self.lookup.get(g).copied()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn j_index(&self) -> usize {
        if self.degree() == 1 {
            0
        } else {
            self.bar_order
        }
    }

    /// `i = index(j^a ḡ_p) ↦ (a, p)`.
    pub fn split(&self, i: usize) -> (u32, usize) {
        ((i / self.bar_order) as u32, i % self.bar_order)
    }

    /// Index of `j^a ḡ_p`, any integer `a`.
    pub fn compose(&self, a: i64, p: usize) -> usize {
        a.rem_euclid(self.degree() as i64) as usize * self.bar_order + p
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.lookup[&self.elements[a].mul(&self.elements[b], &self.model)]
    }

    pub fn pow(&self, a: usize, k: u64) -> usize {
        let mut acc = self.identity();
        for _ in 0..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    pub fn inv(&self, i: usize) -> usize {
        self.inverse[i]
    }

    /// `d · m_j(g)` for every coordinate.
    pub fn units(&self, i: usize) -> &[u32] {
        &self.units[i]
    }

    pub fn multiplicity(&self, i: usize, j: usize) -> Rational {
        rat(self.units[i][j] as i64, self.degree() as i64)
    }

    pub fn classify(&self, i: usize) -> &Classification {
        &self.info[i]
    }

    pub fn is_narrow(&self, i: usize) -> bool {
        self.info[i].narrow
    }

    pub fn fixed_rank(&self, i: usize) -> usize {
        self.info[i].fixed_rank
    }

    pub fn age(&self, i: usize) -> &Rational {
        &self.info[i].age
    }

    /// Indices of narrow elements, in index order.
    pub fn narrow_elements(&self) -> Vec<usize> {
        (0..self.order()).filter(|&i| self.is_narrow(i)).collect()
    }

    /// Indices of elements fixing at least one coordinate.
    pub fn fixing_elements(&self) -> Vec<usize> {
        (0..self.order()).filter(|&i| self.fixed_rank(i) > 0).collect()
    }

    /// All characters of `Ḡ`, trivial first.
    pub fn characters(&self) -> &[BarCharacter] {
        &self.characters
    }

    /// `χ_j` restricted to `Ḡ`: the character of the coordinate function `x_j`.
    pub fn coordinate_character(&self, j: usize) -> BarCharacter {
        BarCharacter((0..self.bar_order).map(|p| self.units[p][j]).collect())
    }

    /// `∏_{j ∈ J} χ_j` for a subset given as a bitmask.
    pub fn subset_character(&self, mask: u64) -> BarCharacter {
        let d = self.degree();
        let mut z = BarCharacter::trivial(self.bar_order);
        for j in 0..self.model.n() {
            if mask >> j & 1 == 1 {
                z = z.mul(&self.coordinate_character(j), d);
            }
        }
        z
    }

    /// Exponent `e` with `O(k, ζ)|_{g_i} = ξ_d^e`, i.e. `a k + ζ(ḡ)` for `g = j^a ḡ`.
    pub fn line_value(&self, k: i64, zeta: &BarCharacter, i: usize) -> u32 {
        let (a, p) = self.split(i);
        (a as i64 * k + zeta.value(p) as i64).rem_euclid(self.degree() as i64) as u32
    }

    pub fn predicates(&self) -> StructuralPredicates {
        let quasi_cy = self.model.is_quasi_cy();
        let in_sl = self.info.iter().all(|c| c.det_twist == rational::zero());
        // O(d) at every sector with nonempty fixed locus: C*-part ξ^{a d} = 1, Ḡ-part trivial
        let convex_od = (0..self.order())
            .filter(|&i| self.fixed_rank(i) > 0)
            .all(|i| self.line_value(self.degree() as i64, &BarCharacter::trivial(self.bar_order), i) == 0);
        StructuralPredicates { quasi_cy, in_sl, convex_od }
    }

    /// Fails unless `Σ c_j = d` and `O(d)` is convex.
    pub fn require_cy(&self) -> Result<()> {
        let p = self.predicates();
        if !p.quasi_cy {
            return Err(Error::SpaceUnavailable {
                space: "Y+",
                reason: format!("quasi-CY condition fails: sum of weights {} != d = {}", self.model.sum_weights(), self.degree()),
            });
        }
        if !p.convex_od {
            return Err(Error::SpaceUnavailable { space: "Y+", reason: "O(d) is not convex".into() });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gmax_sizes() {
        assert_eq!(SymmetryGroup::gmax(&LGModel::quintic()).unwrap().order(), 3125);
        assert_eq!(SymmetryGroup::gmax(&LGModel::new(vec![1, 1, 2], 4).unwrap()).unwrap().order(), 32);
        assert_eq!(SymmetryGroup::gmax(&LGModel::new(vec![1], 1).unwrap()).unwrap().order(), 1);
    }

    #[test]
    fn gmax_cap_is_enforced() {
        let err = SymmetryGroup::gmax_with_cap(&LGModel::quintic(), 1000).unwrap_err();
        assert!(matches!(err, Error::GroupTooLarge { .. }));
    }

    #[test]
    fn splitting_needs_unit_first_weight() {
        let m = LGModel::new(vec![2, 1, 1], 4).unwrap();
        assert!(matches!(SymmetryGroup::closure(&m, &[]), Err(Error::Splitting(_))));
    }

    #[test]
    fn index_layout() {
        let m = LGModel::quintic();
        let g = SymmetryGroup::closure(&m, &[GroupElement(vec![0, 1, 4, 0, 0])]).unwrap();
        assert_eq!(g.order(), 25);
        assert_eq!(g.bar_order(), 5);
        assert_eq!(g.element(g.j_index()), &m.j_element());
        for i in 0..g.order() {
            let (a, p) = g.split(i);
            assert_eq!(g.compose(a as i64, p), i);
            assert_eq!(g.mul(i, g.inv(i)), 0);
        }
    }
}
