//! Finite Heyting algebras as thin bicartesian closed categories: meet is
//! the product, join the coproduct, implication the exponential, and an
//! arrow `a → b` is the bare fact `a ≤ b`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::category::Bicc;
use crate::error::{mismatch, CatError, Result};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("the lattice has no elements")]
    Empty,
    #[error("order matrix is {rows}x{cols}, expected {n}x{n}")]
    Shape { n: usize, rows: usize, cols: usize },
    #[error("order is not reflexive at {0}")]
    NotReflexive(String),
    #[error("order is not antisymmetric: {0} and {1}")]
    NotAntisymmetric(String, String),
    #[error("order is not transitive: {0} ≤ {1} ≤ {2}")]
    NotTransitive(String, String, String),
    #[error("{0} and {1} have no {2}")]
    MissingBound(String, String, &'static str),
    #[error("duplicate element label {0}")]
    DuplicateLabel(String),
    #[error("relation contains a cycle through {0}")]
    Cycle(String),
    #[error("unknown point {0}")]
    UnknownPoint(String),
    #[error("divisor lattice needs n >= 1")]
    ZeroDivisor,
    #[error("{points} points exceed the down-set enumeration limit of {limit}")]
    TooManyPoints { points: usize, limit: usize },
    #[error("not a Heyting algebra: {c} ≤ ({a} ⇒ {b}) fails to match {c} ∧ {a} ≤ {b}")]
    NotHeyting { a: String, b: String, c: String },
}

/// A finite lattice with its order, bounds and the implication candidate
/// `a ⇒ b = ⋁{c | c ∧ a ≤ b}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteLattice {
    elements: Vec<String>,
    leq: Vec<Vec<bool>>,
    meet: Vec<Vec<usize>>,
    join: Vec<Vec<usize>>,
    implication: Vec<Vec<usize>>,
    top: usize,
    bottom: usize,
}

/// Result of [`validate_heyting`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HeytingCheck {
    Ok,
    /// `c ≤ (a ⇒ b)` and `c ∧ a ≤ b` disagree for this triple.
    Rejected { a: usize, b: usize, c: usize },
}

impl FiniteLattice {
    /// Builds a lattice from an order matrix, deriving meets and joins by
    /// search. Fails if the order is not a lattice order.
    pub fn from_order(elements: Vec<String>, leq: Vec<Vec<bool>>) -> std::result::Result<Self, LatticeError> {
        let n = elements.len();
        if n == 0 {
            return Err(LatticeError::Empty);
        }
        let mut seen = BTreeSet::new();
        if let Some(dup) = elements.iter().find(|e| !seen.insert(e.as_str())) {
            return Err(LatticeError::DuplicateLabel(dup.clone()));
        }
        if leq.len() != n || leq.iter().any(|row| row.len() != n) {
            return Err(LatticeError::Shape {
                n,
                rows: leq.len(),
                cols: leq.iter().map(Vec::len).find(|&l| l != n).unwrap_or(n),
            });
        }
        let name = |i: usize| elements[i].clone();
        for i in 0..n {
            if !leq[i][i] {
                return Err(LatticeError::NotReflexive(name(i)));
            }
            for j in 0..n {
                if i != j && leq[i][j] && leq[j][i] {
                    return Err(LatticeError::NotAntisymmetric(name(i), name(j)));
                }
                for k in 0..n {
                    if leq[i][j] && leq[j][k] && !leq[i][k] {
                        return Err(LatticeError::NotTransitive(name(i), name(j), name(k)));
                    }
                }
            }
        }
        let bound = |i: usize, j: usize, upper: bool| -> std::result::Result<usize, LatticeError> {
            let below = |x: usize, y: usize| if upper { leq[x][y] } else { leq[y][x] };
            let candidates: Vec<usize> = (0..n).filter(|&k| below(i, k) && below(j, k)).collect();
            candidates
                .iter()
                .copied()
                .find(|&k| candidates.iter().all(|&m| below(k, m)))
                .ok_or_else(|| {
                    LatticeError::MissingBound(name(i), name(j), if upper { "join" } else { "meet" })
                })
        };
        let mut meet = vec![vec![0; n]; n];
        let mut join = vec![vec![0; n]; n];
        for i in 0..n {
            for j in 0..n {
                meet[i][j] = bound(i, j, false)?;
                join[i][j] = bound(i, j, true)?;
            }
        }
        let top = (0..n).find(|&t| (0..n).all(|x| leq[x][t])).expect("finite lattice has a top");
        let bottom = (0..n).find(|&b| (0..n).all(|x| leq[b][x])).expect("finite lattice has a bottom");
        Ok(Self::with_tables(elements, leq, meet, join, top, bottom))
    }

    fn with_tables(
        elements: Vec<String>,
        leq: Vec<Vec<bool>>,
        meet: Vec<Vec<usize>>,
        join: Vec<Vec<usize>>,
        top: usize,
        bottom: usize,
    ) -> Self {
        let n = elements.len();
        let implication = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| {
                        (0..n)
                            .filter(|&c| leq[meet[c][a]][b])
                            .fold(bottom, |acc, c| join[acc][c])
                    })
                    .collect()
            })
            .collect();
        FiniteLattice {
            elements,
            leq,
            meet,
            join,
            implication,
            top,
            bottom,
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn label(&self, i: usize) -> &str {
        &self.elements[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.elements.iter().position(|e| e == label)
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a][b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a][b]
    }

    /// `a ⇒ b`.
    pub fn implies(&self, a: usize, b: usize) -> usize {
        self.implication[a][b]
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn to_json(&self) -> LatticeJson {
        LatticeJson {
            elements: self.elements.clone(),
            leq: self.leq.clone(),
            meet: Some(self.meet.clone()),
            join: Some(self.join.clone()),
            implication: Some(self.implication.clone()),
        }
    }
}

/// Checks `c ≤ (a ⇒ b) ⟺ c ∧ a ≤ b` for every triple.
pub fn validate_heyting(lattice: &FiniteLattice) -> HeytingCheck {
    let n = lattice.len();
    for a in 0..n {
        for b in 0..n {
            let imp = lattice.implies(a, b);
            for c in 0..n {
                if lattice.leq(c, imp) != lattice.leq(lattice.meet(c, a), b) {
                    return HeytingCheck::Rejected { a, b, c };
                }
            }
        }
    }
    HeytingCheck::Ok
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Divisors of `n` under divisibility; meet is gcd and join is lcm.
pub fn build_divisor_lattice(n: u64) -> std::result::Result<FiniteLattice, LatticeError> {
    if n == 0 {
        return Err(LatticeError::ZeroDivisor);
    }
    let divisors: Vec<u64> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    let index: BTreeMap<u64, usize> = divisors.iter().enumerate().map(|(i, &d)| (d, i)).collect();
    let table = |f: &dyn Fn(u64, u64) -> u64| -> Vec<Vec<usize>> {
        divisors
            .iter()
            .map(|&x| divisors.iter().map(|&y| index[&f(x, y)]).collect())
            .collect()
    };
    let meet = table(&gcd);
    let join = table(&|x, y| x / gcd(x, y) * y);
    let leq = divisors
        .iter()
        .map(|&x| divisors.iter().map(|&y| y % x == 0).collect())
        .collect();
    let elements = divisors.iter().map(u64::to_string).collect();
    let top = divisors.len() - 1;
    let lattice = FiniteLattice::with_tables(elements, leq, meet, join, top, 0);
    check_heyting(lattice)
}

fn check_heyting(lattice: FiniteLattice) -> std::result::Result<FiniteLattice, LatticeError> {
    match validate_heyting(&lattice) {
        HeytingCheck::Ok => Ok(lattice),
        HeytingCheck::Rejected { a, b, c } => Err(LatticeError::NotHeyting {
            a: lattice.label(a).to_string(),
            b: lattice.label(b).to_string(),
            c: lattice.label(c).to_string(),
        }),
    }
}

/// A finite poset given by generating strict relations; closed on
/// construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    points: Vec<String>,
    /// Reflexive-transitive closure, `below[i][j]` iff `i ≤ j`.
    below: Vec<Vec<bool>>,
}

/// Largest poset whose down-sets are enumerated by subset search.
pub const DOWNSET_POINT_LIMIT: usize = 20;

impl Poset {
    pub fn new(points: Vec<String>, less: &[(usize, usize)]) -> std::result::Result<Self, LatticeError> {
        let n = points.len();
        let mut below = vec![vec![false; n]; n];
        for (i, row) in below.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(i, j) in less {
            if i >= n || j >= n {
                return Err(LatticeError::UnknownPoint(format!("#{}", i.max(j))));
            }
            below[i][j] = true;
        }
        for k in 0..n {
            let via = below[k].clone();
            for row in below.iter_mut().filter(|row| row[k]) {
                for (slot, &v) in row.iter_mut().zip(&via) {
                    *slot |= v;
                }
            }
        }
        let cycle = (0..n).find(|&i| (0..n).any(|j| i != j && below[i][j] && below[j][i]));
        if let Some(i) = cycle {
            return Err(LatticeError::Cycle(points[i].clone()));
        }
        Ok(Poset { points, below })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.below[i][j]
    }

    /// Every pair `(i, j)` with `i < j` in the order.
    pub fn strict_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| i != j && self.below[i][j])
            .collect()
    }

    pub fn to_json(&self) -> PosetJson {
        PosetJson {
            points: self.points.clone(),
            less: self
                .strict_pairs()
                .into_iter()
                .map(|(i, j)| (self.points[i].clone(), self.points[j].clone()))
                .collect(),
        }
    }
}

/// Every poset on `n` labelled points, one per distinct closed order.
pub fn all_posets(n: usize) -> Vec<Poset> {
    let points: Vec<String> = (0..n).map(|i| format!("p{i}")).collect();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| i != j)
        .collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let chosen: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        if let Ok(poset) = Poset::new(points.clone(), &chosen) {
            if seen.insert(poset.below.clone()) {
                out.push(poset);
            }
        }
    }
    out
}

/// Down-closed subsets of `poset`, ordered by inclusion.
pub fn build_downset_lattice(poset: &Poset) -> std::result::Result<FiniteLattice, LatticeError> {
    let n = poset.len();
    if n > DOWNSET_POINT_LIMIT {
        return Err(LatticeError::TooManyPoints {
            points: n,
            limit: DOWNSET_POINT_LIMIT,
        });
    }
    let down_closed = |s: u32| {
        (0..n).all(|j| s >> j & 1 == 0 || (0..n).all(|i| !poset.leq(i, j) || s >> i & 1 == 1))
    };
    let mut sets: Vec<u32> = (0u32..(1 << n)).filter(|&s| down_closed(s)).collect();
    sets.sort_by_key(|&s| (s.count_ones(), s));
    let index: BTreeMap<u32, usize> = sets.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    let label = |s: u32| {
        if s == 0 {
            "∅".to_string()
        } else {
            let names: Vec<&str> = (0..n)
                .filter(|&i| s >> i & 1 == 1)
                .map(|i| poset.points[i].as_str())
                .collect();
            format!("{{{}}}", names.join(","))
        }
    };
    let table = |f: &dyn Fn(u32, u32) -> u32| -> Vec<Vec<usize>> {
        sets.iter()
            .map(|&x| sets.iter().map(|&y| index[&f(x, y)]).collect())
            .collect()
    };
    let meet = table(&|x, y| x & y);
    let join = table(&|x, y| x | y);
    let leq = sets
        .iter()
        .map(|&x| sets.iter().map(|&y| x & !y == 0).collect())
        .collect();
    let elements = sets.iter().map(|&s| label(s)).collect();
    let top = sets.len() - 1;
    let mut lattice = FiniteLattice::with_tables(elements, leq, meet, join, top, 0);
    // Largest down-set c with c ∩ a ⊆ b: the union of all such c.
    lattice.implication = sets
        .iter()
        .map(|&a| {
            sets.iter()
                .map(|&b| {
                    let union = sets
                        .iter()
                        .filter(|&&c| c & a & !b == 0)
                        .fold(0, |acc, &c| acc | c);
                    index[&union]
                })
                .collect()
        })
        .collect();
    check_heyting(lattice)
}

/// Input/echo format: `{"elements": [...], "leq": [[bool, ...], ...]}`;
/// the derived tables are filled in on output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeJson {
    pub elements: Vec<String>,
    pub leq: Vec<Vec<bool>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meet: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub join: Option<Vec<Vec<usize>>>,
    #[serde(default, rename = "impl", skip_serializing_if = "Option::is_none")]
    pub implication: Option<Vec<Vec<usize>>>,
}

impl LatticeJson {
    /// Derives the lattice from `elements`/`leq`; supplied derived tables are
    /// ignored.
    pub fn lattice(&self) -> std::result::Result<FiniteLattice, LatticeError> {
        FiniteLattice::from_order(self.elements.clone(), self.leq.clone())
    }
}

/// Poset file: `{"points": ["x", "y"], "less": [["x", "y"]]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson {
    pub points: Vec<String>,
    #[serde(default)]
    pub less: Vec<(String, String)>,
}

impl PosetJson {
    pub fn poset(&self) -> std::result::Result<Poset, LatticeError> {
        let find = |p: &str| {
            self.points
                .iter()
                .position(|q| q == p)
                .ok_or_else(|| LatticeError::UnknownPoint(p.to_string()))
        };
        let less = self
            .less
            .iter()
            .map(|(x, y)| Ok((find(x)?, find(y)?)))
            .collect::<std::result::Result<Vec<_>, LatticeError>>()?;
        Poset::new(self.points.clone(), &less)
    }
}

#[derive(Debug)]
enum Form {
    Element,
    Top,
    Bottom,
    Meet(LatObj, LatObj),
    Join(LatObj, LatObj),
    Implies { base: LatObj, target: LatObj },
}

/// An object of the thin category: a lattice element, together with the
/// connective it was formed by so that products and exponentials can be
/// taken apart again. Equality is equality of elements.
#[derive(Clone)]
pub struct LatObj {
    elem: usize,
    value: Arc<str>,
    form: Arc<Form>,
}

impl LatObj {
    pub fn element(&self) -> usize {
        self.elem
    }

    /// Label of the element this object denotes.
    pub fn value(&self) -> &str {
        &self.value
    }

    fn is_atomic(&self) -> bool {
        matches!(*self.form, Form::Element | Form::Top | Form::Bottom)
    }

    fn fmt_child(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_atomic() {
            write!(f, "{self}")
        } else {
            write!(f, "({self})")
        }
    }
}

impl PartialEq for LatObj {
    fn eq(&self, other: &Self) -> bool {
        self.elem == other.elem
    }
}

impl fmt::Display for LatObj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.form {
            Form::Element => write!(f, "{}", self.value),
            Form::Top => write!(f, "⊤"),
            Form::Bottom => write!(f, "⊥"),
            Form::Meet(l, r) => {
                l.fmt_child(f)?;
                write!(f, " ∧ ")?;
                r.fmt_child(f)
            }
            Form::Join(l, r) => {
                l.fmt_child(f)?;
                write!(f, " ∨ ")?;
                r.fmt_child(f)
            }
            Form::Implies { base, target } => {
                base.fmt_child(f)?;
                write!(f, " ⇒ ")?;
                target.fmt_child(f)
            }
        }
    }
}

impl fmt::Debug for LatObj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} = {}", self.value)
    }
}

/// The unique arrow `dom → cod`, witnessing `dom ≤ cod`.
#[derive(Clone, Debug)]
pub struct LeqWitness {
    dom: LatObj,
    cod: LatObj,
}

impl LeqWitness {
    pub fn dom(&self) -> &LatObj {
        &self.dom
    }

    pub fn cod(&self) -> &LatObj {
        &self.cod
    }
}

/// A validated Heyting algebra viewed as a thin category.
#[derive(Debug, Clone)]
pub struct Heyting {
    lattice: Arc<FiniteLattice>,
}

impl Heyting {
    /// Fails with the first triple breaking the implication adjunction.
    pub fn new(lattice: FiniteLattice) -> std::result::Result<Self, LatticeError> {
        Ok(Heyting {
            lattice: Arc::new(check_heyting(lattice)?),
        })
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn element(&self, i: usize) -> LatObj {
        self.obj(i, Form::Element)
    }

    pub fn element_named(&self, label: &str) -> Option<LatObj> {
        self.lattice.index_of(label).map(|i| self.element(i))
    }

    pub fn elements(&self) -> Vec<LatObj> {
        (0..self.lattice.len()).map(|i| self.element(i)).collect()
    }

    fn obj(&self, elem: usize, form: Form) -> LatObj {
        LatObj {
            elem,
            value: Arc::from(self.lattice.label(elem)),
            form: Arc::new(form),
        }
    }

    /// The witness of `dom ≤ cod`, if the inequality holds.
    pub fn arrow(&self, dom: &LatObj, cod: &LatObj) -> Result<LeqWitness> {
        if self.lattice.leq(dom.elem, cod.elem) {
            Ok(LeqWitness {
                dom: dom.clone(),
                cod: cod.clone(),
            })
        } else {
            Err(CatError::NoArrow {
                dom: format!("{dom:?}"),
                cod: format!("{cod:?}"),
            })
        }
    }
}

impl Bicc for Heyting {
    type Obj = LatObj;
    type Arr = LeqWitness;

    fn dom(&self, f: &LeqWitness) -> LatObj {
        f.dom.clone()
    }

    fn cod(&self, f: &LeqWitness) -> LatObj {
        f.cod.clone()
    }

    fn identity(&self, x: &LatObj) -> Result<LeqWitness> {
        self.arrow(x, x)
    }

    fn compose(&self, g: &LeqWitness, f: &LeqWitness) -> Result<LeqWitness> {
        if f.cod != g.dom {
            return Err(mismatch("compose", format!("{:?}", g.dom), format!("{:?}", f.cod)));
        }
        self.arrow(&f.dom, &g.cod)
    }

    fn arrows_equal(&self, f: &LeqWitness, g: &LeqWitness) -> Result<bool> {
        Ok(f.dom == g.dom && f.cod == g.cod)
    }

    fn terminal(&self) -> LatObj {
        self.obj(self.lattice.top, Form::Top)
    }

    fn bang(&self, x: &LatObj) -> Result<LeqWitness> {
        self.arrow(x, &self.terminal())
    }

    fn product(&self, x: &LatObj, y: &LatObj) -> Result<LatObj> {
        Ok(self.obj(self.lattice.meet(x.elem, y.elem), Form::Meet(x.clone(), y.clone())))
    }

    fn proj1(&self, x: &LatObj, y: &LatObj) -> Result<LeqWitness> {
        self.arrow(&self.product(x, y)?, x)
    }

    fn proj2(&self, x: &LatObj, y: &LatObj) -> Result<LeqWitness> {
        self.arrow(&self.product(x, y)?, y)
    }

    fn pair(&self, f: &LeqWitness, g: &LeqWitness) -> Result<LeqWitness> {
        if f.dom != g.dom {
            return Err(mismatch("pair", format!("{:?}", f.dom), format!("{:?}", g.dom)));
        }
        self.arrow(&f.dom, &self.product(&f.cod, &g.cod)?)
    }

    fn initial(&self) -> LatObj {
        self.obj(self.lattice.bottom, Form::Bottom)
    }

    fn absurd(&self, x: &LatObj) -> Result<LeqWitness> {
        self.arrow(&self.initial(), x)
    }

    fn coproduct(&self, x: &LatObj, y: &LatObj) -> Result<LatObj> {
        Ok(self.obj(self.lattice.join(x.elem, y.elem), Form::Join(x.clone(), y.clone())))
    }

    fn inj1(&self, x: &LatObj, y: &LatObj) -> Result<LeqWitness> {
        self.arrow(x, &self.coproduct(x, y)?)
    }

    fn inj2(&self, x: &LatObj, y: &LatObj) -> Result<LeqWitness> {
        self.arrow(y, &self.coproduct(x, y)?)
    }

    fn copair(&self, f: &LeqWitness, g: &LeqWitness) -> Result<LeqWitness> {
        if f.cod != g.cod {
            return Err(mismatch("copair", format!("{:?}", f.cod), format!("{:?}", g.cod)));
        }
        self.arrow(&self.coproduct(&f.dom, &g.dom)?, &f.cod)
    }

    fn exponential(&self, base: &LatObj, target: &LatObj) -> Result<LatObj> {
        Ok(self.obj(
            self.lattice.implies(base.elem, target.elem),
            Form::Implies {
                base: base.clone(),
                target: target.clone(),
            },
        ))
    }

    fn eval(&self, base: &LatObj, target: &LatObj) -> Result<LeqWitness> {
        let exp = self.exponential(base, target)?;
        self.arrow(&self.product(&exp, base)?, target)
    }

    fn curry(&self, f: &LeqWitness) -> Result<LeqWitness> {
        let (a, b) = self
            .split_product(&f.dom)
            .ok_or_else(|| CatError::NotAProduct(f.dom.to_string()))?;
        self.arrow(&a, &self.exponential(&b, &f.cod)?)
    }

    fn split_product(&self, x: &LatObj) -> Option<(LatObj, LatObj)> {
        match &*x.form {
            Form::Meet(l, r) => Some((l.clone(), r.clone())),
            _ => None,
        }
    }

    fn split_coproduct(&self, x: &LatObj) -> Option<(LatObj, LatObj)> {
        match &*x.form {
            Form::Join(l, r) => Some((l.clone(), r.clone())),
            _ => None,
        }
    }

    fn split_exponential(&self, x: &LatObj) -> Option<(LatObj, LatObj)> {
        match &*x.form {
            Form::Implies { base, target } => Some((base.clone(), target.clone())),
            _ => None,
        }
    }
}

/// The five-element lattice with three incomparable atoms.
pub fn diamond_m3() -> LatticeJson {
    order_json(&["0", "x", "y", "z", "1"], &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])
}

/// The pentagon `0 < a < c < 1`, `0 < b < 1`.
pub fn pentagon_n5() -> LatticeJson {
    order_json(&["0", "a", "b", "c", "1"], &[(0, 1), (1, 3), (3, 4), (0, 2), (2, 4)])
}

fn order_json(labels: &[&str], covers: &[(usize, usize)]) -> LatticeJson {
    let poset = Poset::new(labels.iter().map(|s| s.to_string()).collect(), covers)
        .expect("fixed acyclic covers");
    let n = labels.len();
    LatticeJson {
        elements: labels.iter().map(|s| s.to_string()).collect(),
        leq: (0..n).map(|i| (0..n).map(|j| poset.leq(i, j)).collect()).collect(),
        meet: None,
        join: None,
        implication: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn div(n: u64) -> FiniteLattice {
        build_divisor_lattice(n).unwrap()
    }

    #[test]
    fn divisors_of_thirty_distribute() {
        let l = div(30);
        let ix = |s: &str| l.index_of(s).unwrap();
        let lhs = l.meet(ix("6"), l.join(ix("10"), ix("15")));
        let rhs = l.join(l.meet(ix("6"), ix("10")), l.meet(ix("6"), ix("15")));
        assert_eq!(l.label(lhs), "6");
        assert_eq!(l.label(rhs), "6");
        assert_eq!(l.label(l.meet(ix("6"), ix("10"))), "2");
        assert_eq!(l.label(l.meet(ix("6"), ix("15"))), "3");
    }

    #[test]
    fn divisor_lattice_of_one_is_trivial() {
        let l = div(1);
        assert_eq!(l.len(), 1);
        assert_eq!((l.top(), l.bottom(), l.implies(0, 0)), (0, 0, 0));
    }

    #[test]
    fn implication_in_divisors_of_twelve() {
        let l = div(12);
        let ix = |s: &str| l.index_of(s).unwrap();
        assert_eq!(l.label(l.implies(ix("4"), ix("3"))), "3");
    }

    #[test]
    fn arithmetic_tables_match_order_search() {
        for n in [1, 12, 30, 36, 60] {
            let l = div(n);
            let searched = FiniteLattice::from_order(l.elements.clone(), l.leq.clone()).unwrap();
            assert_eq!(searched.meet, l.meet);
            assert_eq!(searched.join, l.join);
            assert_eq!(searched.implication, l.implication);
        }
    }

    #[test]
    fn downsets_of_small_posets() {
        let antichain = Poset::new(vec!["x".into(), "y".into()], &[]).unwrap();
        assert_eq!(build_downset_lattice(&antichain).unwrap().len(), 4);
        let chain = Poset::new(vec!["x".into(), "y".into(), "z".into()], &[(0, 1), (1, 2)]).unwrap();
        let l = build_downset_lattice(&chain).unwrap();
        assert_eq!(l.len(), 4);
        assert!((0..4).all(|i| (0..4).all(|j| l.leq(i, j) || l.leq(j, i))));
        assert_eq!(build_downset_lattice(&Poset::new(vec![], &[]).unwrap()).unwrap().len(), 1);
    }

    #[test]
    fn cycles_are_not_posets() {
        let err = Poset::new(vec!["x".into(), "y".into()], &[(0, 1), (1, 0)]).unwrap_err();
        assert!(matches!(err, LatticeError::Cycle(_)));
    }

    #[test]
    fn poset_counts() {
        // labelled posets on 0..=4 points
        let counts: Vec<usize> = (0..=4).map(|n| all_posets(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 3, 19, 219]);
    }

    #[test]
    fn m3_and_n5_are_rejected_with_a_failing_triple() {
        for json in [diamond_m3(), pentagon_n5()] {
            let l = json.lattice().unwrap();
            let HeytingCheck::Rejected { a, b, c } = validate_heyting(&l) else {
                panic!("expected rejection");
            };
            assert_ne!(l.leq(c, l.implies(a, b)), l.leq(l.meet(c, a), b));
        }
    }

    #[test]
    fn non_lattice_orders_are_refused() {
        // two incomparable maximal elements: no join
        let json = LatticeJson {
            elements: vec!["0".into(), "a".into(), "b".into()],
            leq: vec![
                vec![true, true, true],
                vec![false, true, false],
                vec![false, false, true],
            ],
            meet: None,
            join: None,
            implication: None,
        };
        assert!(matches!(json.lattice(), Err(LatticeError::MissingBound(_, _, "join"))));
    }

    #[test]
    fn missing_witness_is_an_error() {
        let h = Heyting::new(div(6)).unwrap();
        let two = h.element_named("2").unwrap();
        let three = h.element_named("3").unwrap();
        assert!(matches!(h.arrow(&two, &three), Err(CatError::NoArrow { .. })));
    }

    #[test]
    fn eval_witness_exists_everywhere() {
        let h = Heyting::new(div(60)).unwrap();
        for a in h.elements() {
            for b in h.elements() {
                assert!(h.eval(&a, &b).is_ok());
            }
        }
    }
}
