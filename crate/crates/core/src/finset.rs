//! The category of finite sets and total functions.
//!
//! Elements of every set are the indices `0..size`. Derived objects use the
//! fixed encodings in [`encoding`]; every table in this module and every
//! oracle in the test suites agrees on them.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::category::Bicc;
use crate::error::{mismatch, CatError, Result};

/// Bumped whenever any encoding in [`encoding`] changes.
pub const ENCODINGS_VERSION: u32 = 1;

/// Index arithmetic for the canonical encodings.
///
/// * pair `(i, j)` in `L × R` is `i·|R| + j`;
/// * `inl i` in `L + R` is `i`, `inr j` is `|L| + j`;
/// * a function `B → C` is the base-`|C|` numeral of its table read over `B`
///   in index order, most significant digit first, so `[1, 2]` with `|C| = 3`
///   is `5`.
pub mod encoding {
    pub fn pair(i: usize, j: usize, right_size: usize) -> usize {
        i * right_size + j
    }

    pub fn unpair(k: usize, right_size: usize) -> (usize, usize) {
        (k / right_size, k % right_size)
    }

    pub fn inl(i: usize) -> usize {
        i
    }

    pub fn inr(j: usize, left_size: usize) -> usize {
        left_size + j
    }

    pub fn function(table: &[usize], target_size: usize) -> usize {
        table.iter().fold(0, |acc, &v| acc * target_size + v)
    }

    pub fn unfunction(mut code: usize, base_size: usize, target_size: usize) -> Vec<usize> {
        let mut table = vec![0; base_size];
        for slot in table.iter_mut().rev() {
            *slot = code % target_size;
            code /= target_size;
        }
        table
    }

    /// `target^base` with `0⁰ = 1`; `None` on overflow.
    pub fn function_count(base_size: usize, target_size: usize) -> Option<usize> {
        let exp = u32::try_from(base_size).ok()?;
        target_size.checked_pow(exp)
    }
}

/// How a finite-set object was formed.
#[derive(Debug, Clone, PartialEq)]
pub enum Provenance {
    Base { name: String, labels: Vec<String> },
    Terminal,
    Initial,
    Product(FinSetObj, FinSetObj),
    Coproduct(FinSetObj, FinSetObj),
    Exponential { base: FinSetObj, target: FinSetObj },
}

#[derive(Debug)]
struct Node {
    size: usize,
    provenance: Provenance,
}

/// A finite set, shared cheaply by reference count.
#[derive(Clone)]
pub struct FinSetObj(Arc<Node>);

impl FinSetObj {
    /// A base set with labels `e0 … e(n-1)`.
    pub fn base(name: impl Into<String>, size: usize) -> Self {
        let labels = (0..size).map(|i| format!("e{i}")).collect();
        Self::new(
            size,
            Provenance::Base {
                name: name.into(),
                labels,
            },
        )
    }

    pub fn with_labels(name: impl Into<String>, labels: Vec<String>) -> Result<Self> {
        let name = name.into();
        let mut seen = std::collections::BTreeSet::new();
        if let Some(dup) = labels.iter().find(|l| !seen.insert(l.as_str())) {
            return Err(mismatch("labels", "unique labels", format!("{dup:?} repeated in {name}")));
        }
        Ok(Self::new(labels.len(), Provenance::Base { name, labels }))
    }

    fn new(size: usize, provenance: Provenance) -> Self {
        FinSetObj(Arc::new(Node { size, provenance }))
    }

    pub fn size(&self) -> usize {
        self.0.size
    }

    pub fn provenance(&self) -> &Provenance {
        &self.0.provenance
    }

    fn is_atomic(&self) -> bool {
        matches!(
            self.provenance(),
            Provenance::Base { .. } | Provenance::Terminal | Provenance::Initial
        )
    }

    /// Display label of element `i`, derived from the provenance.
    pub fn label(&self, i: usize) -> String {
        match self.provenance() {
            Provenance::Base { labels, .. } => labels[i].clone(),
            Provenance::Terminal => "*".to_string(),
            Provenance::Initial => unreachable!("the empty set has no elements"),
            Provenance::Product(l, r) => {
                let (a, b) = encoding::unpair(i, r.size());
                format!("({}, {})", l.label(a), r.label(b))
            }
            Provenance::Coproduct(l, r) => {
                if i < l.size() {
                    format!("inl {}", l.label(i))
                } else {
                    format!("inr {}", r.label(i - l.size()))
                }
            }
            Provenance::Exponential { base, target } => {
                let table = encoding::unfunction(i, base.size(), target.size());
                let entries: Vec<String> = table
                    .iter()
                    .enumerate()
                    .map(|(b, &c)| format!("{}↦{}", base.label(b), target.label(c)))
                    .collect();
                format!("{{{}}}", entries.join(", "))
            }
        }
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.size()).map(|i| self.label(i)).collect()
    }

    fn fmt_child(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_atomic() {
            write!(f, "{self}")
        } else {
            write!(f, "({self})")
        }
    }
}

impl PartialEq for FinSetObj {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.size == other.0.size && self.0.provenance == other.0.provenance)
    }
}

impl fmt::Display for FinSetObj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.provenance() {
            Provenance::Base { name, .. } => write!(f, "{name}"),
            Provenance::Terminal => write!(f, "1"),
            Provenance::Initial => write!(f, "0"),
            Provenance::Product(l, r) => {
                l.fmt_child(f)?;
                write!(f, " × ")?;
                r.fmt_child(f)
            }
            Provenance::Coproduct(l, r) => {
                l.fmt_child(f)?;
                write!(f, " + ")?;
                r.fmt_child(f)
            }
            Provenance::Exponential { base, target } => {
                target.fmt_child(f)?;
                write!(f, "^")?;
                base.fmt_child(f)
            }
        }
    }
}

impl fmt::Debug for FinSetObj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} [{}]", self.size())
    }
}

/// A total function between finite sets, as a table of codomain indices.
#[derive(Clone, PartialEq)]
pub struct FunTable {
    dom: FinSetObj,
    cod: FinSetObj,
    map: Vec<usize>,
}

impl FunTable {
    pub fn new(dom: FinSetObj, cod: FinSetObj, map: Vec<usize>) -> Result<Self> {
        if map.len() != dom.size() {
            return Err(mismatch(
                "table",
                format!("{} entries", dom.size()),
                format!("{} entries", map.len()),
            ));
        }
        if let Some(bad) = map.iter().find(|&&v| v >= cod.size()) {
            return Err(mismatch(
                "table",
                format!("entries below {}", cod.size()),
                format!("entry {bad}"),
            ));
        }
        Ok(FunTable { dom, cod, map })
    }

    // Callers guarantee the table invariants.
    fn raw(dom: FinSetObj, cod: FinSetObj, map: Vec<usize>) -> Self {
        debug_assert_eq!(map.len(), dom.size());
        debug_assert!(map.iter().all(|&v| v < cod.size()));
        FunTable { dom, cod, map }
    }

    pub fn dom(&self) -> &FinSetObj {
        &self.dom
    }

    pub fn cod(&self) -> &FinSetObj {
        &self.cod
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, i: usize) -> usize {
        self.map[i]
    }

    pub fn to_json(&self) -> TableJson {
        TableJson {
            dom: self.dom.to_string(),
            cod: self.cod.to_string(),
            map: self.map.clone(),
        }
    }
}

impl fmt::Debug for FunTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {} {:?}", self.dom, self.cod, self.map)
    }
}

/// Serialized form of a [`FunTable`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableJson {
    pub dom: String,
    pub cod: String,
    pub map: Vec<usize>,
}

/// Input format naming base sets by their element labels:
/// `{"sets": {"A": ["a0", "a1"], ...}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetsJson {
    pub sets: BTreeMap<String, Vec<String>>,
}

impl SetsJson {
    pub fn objects(&self) -> Result<BTreeMap<String, FinSetObj>> {
        self.sets
            .iter()
            .map(|(name, labels)| Ok((name.clone(), FinSetObj::with_labels(name.clone(), labels.clone())?)))
            .collect()
    }
}

/// The finite-set instance. Holds only size bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FinSet {
    /// Largest object (and hence table) the instance will construct.
    pub object_cap: usize,
    /// Largest arrow space [`FinSet::enumerate_arrows`] will walk.
    pub enumeration_cap: u128,
}

impl Default for FinSet {
    fn default() -> Self {
        FinSet {
            object_cap: 1 << 24,
            enumeration_cap: 1_000_000,
        }
    }
}

impl FinSet {
    pub fn new() -> Self {
        Self::default()
    }

    fn bounded(&self, what: impl FnOnce() -> String, count: Option<usize>) -> Result<usize> {
        match count {
            Some(n) if n <= self.object_cap => Ok(n),
            other => Err(CatError::TooLarge {
                what: what(),
                count: other.map_or(u128::MAX, |n| n as u128),
                cap: self.object_cap as u128,
            }),
        }
    }

    /// The direct retagging bijection `(A×B)+(A×C) → A×(B+C)`, computed by
    /// index arithmetic alone.
    pub fn oracle_distrib(&self, a: &FinSetObj, b: &FinSetObj, c: &FinSetObj) -> Result<FunTable> {
        let dom = self.coproduct(&self.product(a, b)?, &self.product(a, c)?)?;
        let cod = self.product(a, &self.coproduct(b, c)?)?;
        let (nb, nc) = (b.size(), c.size());
        let left = a.size() * nb;
        let map = (0..dom.size())
            .map(|k| {
                if k < left {
                    let (x, y) = (k / nb, k % nb);
                    x * (nb + nc) + y
                } else {
                    let k = k - left;
                    let (x, z) = (k / nc, k % nc);
                    x * (nb + nc) + nb + z
                }
            })
            .collect();
        Ok(FunTable::raw(dom, cod, map))
    }

    /// Number of arrows `X → Y`, or `None` if it does not fit in `u128`.
    pub fn arrow_count(x: &FinSetObj, y: &FinSetObj) -> Option<u128> {
        (y.size() as u128).checked_pow(u32::try_from(x.size()).ok()?)
    }

    /// All tables `X → Y` in numeral order (last entry varies fastest).
    pub fn enumerate_arrows(&self, x: &FinSetObj, y: &FinSetObj) -> Result<ArrowEnumerator> {
        match Self::arrow_count(x, y) {
            Some(n) if n <= self.enumeration_cap => Ok(ArrowEnumerator {
                dom: x.clone(),
                cod: y.clone(),
                next: if n == 0 { None } else { Some(vec![0; x.size()]) },
            }),
            other => Err(CatError::TooLarge {
                what: format!("arrow space {x} -> {y}"),
                count: other.unwrap_or(u128::MAX),
                cap: self.enumeration_cap,
            }),
        }
    }

    /// A uniformly random table, fixed by `seed`.
    pub fn random_arrow(&self, x: &FinSetObj, y: &FinSetObj, seed: u64) -> Result<FunTable> {
        self.random_arrow_with(x, y, &mut ChaCha8Rng::seed_from_u64(seed))
    }

    pub fn random_arrow_with<R: Rng + ?Sized>(
        &self,
        x: &FinSetObj,
        y: &FinSetObj,
        rng: &mut R,
    ) -> Result<FunTable> {
        if y.size() == 0 && x.size() > 0 {
            return Err(CatError::NoArrow {
                dom: x.to_string(),
                cod: y.to_string(),
            });
        }
        let map = (0..x.size()).map(|_| rng.gen_range(0..y.size())).collect();
        Ok(FunTable::raw(x.clone(), y.clone(), map))
    }
}

/// Iterator returned by [`FinSet::enumerate_arrows`].
#[derive(Debug, Clone)]
pub struct ArrowEnumerator {
    dom: FinSetObj,
    cod: FinSetObj,
    next: Option<Vec<usize>>,
}

impl Iterator for ArrowEnumerator {
    type Item = FunTable;

    fn next(&mut self) -> Option<FunTable> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let radix = self.cod.size();
        let mut carried = true;
        for slot in succ.iter_mut().rev() {
            *slot += 1;
            if *slot < radix {
                carried = false;
                break;
            }
            *slot = 0;
        }
        if !carried {
            self.next = Some(succ);
        }
        Some(FunTable::raw(self.dom.clone(), self.cod.clone(), current))
    }
}

impl Bicc for FinSet {
    type Obj = FinSetObj;
    type Arr = FunTable;

    fn dom(&self, f: &FunTable) -> FinSetObj {
        f.dom.clone()
    }

    fn cod(&self, f: &FunTable) -> FinSetObj {
        f.cod.clone()
    }

    fn identity(&self, x: &FinSetObj) -> Result<FunTable> {
        Ok(FunTable::raw(x.clone(), x.clone(), (0..x.size()).collect()))
    }

    fn compose(&self, g: &FunTable, f: &FunTable) -> Result<FunTable> {
        if f.cod != g.dom {
            return Err(mismatch("compose", &g.dom, &f.cod));
        }
        let map = f.map.iter().map(|&i| g.map[i]).collect();
        Ok(FunTable::raw(f.dom.clone(), g.cod.clone(), map))
    }

    fn arrows_equal(&self, f: &FunTable, g: &FunTable) -> Result<bool> {
        Ok(f == g)
    }

    fn terminal(&self) -> FinSetObj {
        FinSetObj::new(1, Provenance::Terminal)
    }

    fn bang(&self, x: &FinSetObj) -> Result<FunTable> {
        Ok(FunTable::raw(x.clone(), self.terminal(), vec![0; x.size()]))
    }

    fn product(&self, x: &FinSetObj, y: &FinSetObj) -> Result<FinSetObj> {
        let size = self.bounded(|| format!("{x} × {y}"), x.size().checked_mul(y.size()))?;
        Ok(FinSetObj::new(size, Provenance::Product(x.clone(), y.clone())))
    }

    fn proj1(&self, x: &FinSetObj, y: &FinSetObj) -> Result<FunTable> {
        let xy = self.product(x, y)?;
        let map = (0..xy.size()).map(|k| k / y.size()).collect();
        Ok(FunTable::raw(xy, x.clone(), map))
    }

    fn proj2(&self, x: &FinSetObj, y: &FinSetObj) -> Result<FunTable> {
        let xy = self.product(x, y)?;
        let map = (0..xy.size()).map(|k| k % y.size()).collect();
        Ok(FunTable::raw(xy, y.clone(), map))
    }

    fn pair(&self, f: &FunTable, g: &FunTable) -> Result<FunTable> {
        if f.dom != g.dom {
            return Err(mismatch("pair", &f.dom, &g.dom));
        }
        let cod = self.product(&f.cod, &g.cod)?;
        let width = g.cod.size();
        let map = f
            .map
            .iter()
            .zip(&g.map)
            .map(|(&i, &j)| encoding::pair(i, j, width))
            .collect();
        Ok(FunTable::raw(f.dom.clone(), cod, map))
    }

    fn initial(&self) -> FinSetObj {
        FinSetObj::new(0, Provenance::Initial)
    }

    fn absurd(&self, x: &FinSetObj) -> Result<FunTable> {
        Ok(FunTable::raw(self.initial(), x.clone(), Vec::new()))
    }

    fn coproduct(&self, x: &FinSetObj, y: &FinSetObj) -> Result<FinSetObj> {
        let size = self.bounded(|| format!("{x} + {y}"), x.size().checked_add(y.size()))?;
        Ok(FinSetObj::new(size, Provenance::Coproduct(x.clone(), y.clone())))
    }

    fn inj1(&self, x: &FinSetObj, y: &FinSetObj) -> Result<FunTable> {
        let sum = self.coproduct(x, y)?;
        Ok(FunTable::raw(x.clone(), sum, (0..x.size()).map(encoding::inl).collect()))
    }

    fn inj2(&self, x: &FinSetObj, y: &FinSetObj) -> Result<FunTable> {
        let sum = self.coproduct(x, y)?;
        let map = (0..y.size()).map(|j| encoding::inr(j, x.size())).collect();
        Ok(FunTable::raw(y.clone(), sum, map))
    }

    fn copair(&self, f: &FunTable, g: &FunTable) -> Result<FunTable> {
        if f.cod != g.cod {
            return Err(mismatch("copair", &f.cod, &g.cod));
        }
        let dom = self.coproduct(&f.dom, &g.dom)?;
        let mut map = Vec::with_capacity(dom.size());
        map.extend_from_slice(&f.map);
        map.extend_from_slice(&g.map);
        Ok(FunTable::raw(dom, f.cod.clone(), map))
    }

    fn exponential(&self, base: &FinSetObj, target: &FinSetObj) -> Result<FinSetObj> {
        let size = self.bounded(
            || format!("{target}^{base}"),
            encoding::function_count(base.size(), target.size()),
        )?;
        Ok(FinSetObj::new(
            size,
            Provenance::Exponential {
                base: base.clone(),
                target: target.clone(),
            },
        ))
    }

    fn eval(&self, base: &FinSetObj, target: &FinSetObj) -> Result<FunTable> {
        let exp = self.exponential(base, target)?;
        let dom = self.product(&exp, base)?;
        let (nb, nc) = (base.size(), target.size());
        // place[b] = |C|^(|B|-1-b)
        let mut place = vec![1usize; nb];
        for b in (0..nb.saturating_sub(1)).rev() {
            place[b] = place[b + 1] * nc;
        }
        let mut map = Vec::with_capacity(dom.size());
        for code in 0..exp.size() {
            map.extend(place.iter().map(|&p| code / p % nc));
        }
        Ok(FunTable::raw(dom, target.clone(), map))
    }

    fn curry(&self, f: &FunTable) -> Result<FunTable> {
        let (a, b) = self
            .split_product(&f.dom)
            .ok_or_else(|| CatError::NotAProduct(f.dom.to_string()))?;
        let exp = self.exponential(&b, &f.cod)?;
        let (nb, nc) = (b.size(), f.cod.size());
        let map = (0..a.size())
            .map(|i| encoding::function(&f.map[i * nb..(i + 1) * nb], nc))
            .collect();
        Ok(FunTable::raw(a, exp, map))
    }

    fn split_product(&self, x: &FinSetObj) -> Option<(FinSetObj, FinSetObj)> {
        match x.provenance() {
            Provenance::Product(l, r) => Some((l.clone(), r.clone())),
            _ => None,
        }
    }

    fn split_coproduct(&self, x: &FinSetObj) -> Option<(FinSetObj, FinSetObj)> {
        match x.provenance() {
            Provenance::Coproduct(l, r) => Some((l.clone(), r.clone())),
            _ => None,
        }
    }

    fn split_exponential(&self, x: &FinSetObj) -> Option<(FinSetObj, FinSetObj)> {
        match x.provenance() {
            Provenance::Exponential { base, target } => Some((base.clone(), target.clone())),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::Structural;

    fn set(name: &str, n: usize) -> FinSetObj {
        FinSetObj::base(name, n)
    }

    #[test]
    fn function_index_five_is_table_one_two() {
        assert_eq!(encoding::unfunction(5, 2, 3), vec![1, 2]);
        assert_eq!(encoding::function(&[1, 2], 3), 5);
    }

    #[test]
    fn pair_and_injection_codes() {
        assert_eq!(encoding::pair(1, 2, 3), 5);
        assert_eq!(encoding::inr(0, 2), 2);
    }

    #[test]
    fn zero_to_the_zero_is_one() {
        let fs = FinSet::new();
        let e = fs.exponential(&set("B", 0), &set("A", 0)).unwrap();
        assert_eq!(e.size(), 1);
        let e = fs.exponential(&set("B", 2), &set("A", 0)).unwrap();
        assert_eq!(e.size(), 0);
    }

    #[test]
    fn bang_is_all_zeros() {
        let fs = FinSet::new();
        let f = fs.bang(&set("A", 4)).unwrap();
        assert_eq!(f.map(), &[0, 0, 0, 0]);
        assert_eq!(f.cod().size(), 1);
    }

    #[test]
    fn copair_of_injections_is_identity() {
        let fs = FinSet::new();
        let (x, y) = (set("X", 2), set("Y", 3));
        let c = fs.copair(&fs.inj1(&x, &y).unwrap(), &fs.inj2(&x, &y).unwrap()).unwrap();
        assert_eq!(c, fs.identity(&fs.coproduct(&x, &y).unwrap()).unwrap());
    }

    #[test]
    fn ill_typed_composition_is_rejected() {
        let fs = FinSet::new();
        let f = fs.identity(&set("A", 2)).unwrap();
        let g = fs.identity(&set("B", 2)).unwrap();
        assert!(matches!(fs.compose(&g, &f), Err(CatError::Mismatch { .. })));
    }

    #[test]
    fn swap_on_two_by_three() {
        let fs = FinSet::new();
        let s = fs.swap(&set("X", 2), &set("Y", 3)).unwrap();
        // (i, j) at i*3+j goes to (j, i) at j*2+i
        let expected: Vec<usize> = (0..2)
            .flat_map(|i| (0..3).map(move |j| j * 2 + i))
            .collect();
        assert_eq!(s.map(), expected.as_slice());
    }

    #[test]
    fn product_map_id_and_constant() {
        let fs = FinSet::new();
        let (a, b) = (set("A", 2), set("B", 2));
        let constant = FunTable::new(b.clone(), b.clone(), vec![0, 0]).unwrap();
        let m = fs.product_map(&fs.identity(&a).unwrap(), &constant).unwrap();
        // (i, j) -> (i, 0)
        assert_eq!(m.map(), &[0, 0, 2, 2]);
    }

    #[test]
    fn unit_iso_sends_i_to_zero_i() {
        let fs = FinSet::new();
        let iso = fs.unit_iso(&set("A", 3)).unwrap();
        assert_eq!(iso.fwd.map(), &[0, 1, 2]);
        let empty = fs.unit_iso(&set("A", 0)).unwrap();
        assert!(empty.fwd.map().is_empty() && empty.bwd.map().is_empty());
    }

    #[test]
    fn enumeration_counts_and_order() {
        let fs = FinSet::new();
        let all: Vec<Vec<usize>> = fs
            .enumerate_arrows(&set("X", 2), &set("Y", 2))
            .unwrap()
            .map(|t| t.map().to_vec())
            .collect();
        assert_eq!(all, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert_eq!(fs.enumerate_arrows(&set("X", 0), &set("Y", 5)).unwrap().count(), 1);
        assert_eq!(fs.enumerate_arrows(&set("X", 1), &set("Y", 3)).unwrap().count(), 3);
        assert_eq!(fs.enumerate_arrows(&set("X", 2), &set("Y", 0)).unwrap().count(), 0);
    }

    #[test]
    fn enumeration_refuses_above_cap() {
        let fs = FinSet::new();
        match fs.enumerate_arrows(&set("X", 20), &set("Y", 3)) {
            Err(CatError::TooLarge { count, .. }) => assert_eq!(count, 3u128.pow(20)),
            other => panic!("expected refusal, got {other:?}"),
        }
    }

    #[test]
    fn random_arrow_is_deterministic() {
        let fs = FinSet::new();
        let (x, y) = (set("X", 6), set("Y", 4));
        assert_eq!(fs.random_arrow(&x, &y, 9).unwrap(), fs.random_arrow(&x, &y, 9).unwrap());
        assert!(fs.random_arrow(&set("X", 0), &set("Y", 0), 1).unwrap().map().is_empty());
        assert!(matches!(
            fs.random_arrow(&x, &set("Y", 0), 1),
            Err(CatError::NoArrow { .. })
        ));
    }

    #[test]
    fn random_arrow_is_roughly_uniform() {
        let fs = FinSet::new();
        let t = fs.random_arrow(&set("X", 10_000), &set("Y", 4), 3).unwrap();
        let mut hist = [0f64; 4];
        t.map().iter().for_each(|&v| hist[v] += 1.0);
        let chi2: f64 = hist.iter().map(|&o| (o - 2500.0).powi(2) / 2500.0).sum();
        // 3 degrees of freedom; 16.27 is the 0.999 quantile
        assert!(chi2 < 16.27, "chi2 = {chi2}");
    }

    #[test]
    fn oracle_distrib_small_cases() {
        let fs = FinSet::new();
        let t = fs.oracle_distrib(&set("A", 2), &set("B", 1), &set("C", 3)).unwrap();
        assert_eq!(t.apply(0), 0);
        assert!(fs.oracle_distrib(&set("A", 3), &set("B", 0), &set("C", 0)).unwrap().map().is_empty());
        assert_eq!(fs.oracle_distrib(&set("A", 1), &set("B", 1), &set("C", 1)).unwrap().map(), &[0, 1]);
    }

    #[test]
    fn labels_follow_provenance() {
        let fs = FinSet::new();
        let a = FinSetObj::with_labels("A", vec!["x".into(), "y".into()]).unwrap();
        let b = set("B", 1);
        let p = fs.product(&a, &b).unwrap();
        assert_eq!(p.labels(), vec!["(x, e0)", "(y, e0)"]);
        let e = fs.exponential(&b, &a).unwrap();
        assert_eq!(e.labels(), vec!["{e0↦x}", "{e0↦y}"]);
        assert!(FinSetObj::with_labels("A", vec!["x".into(), "x".into()]).is_err());
    }

    #[test]
    fn display_parenthesizes_compound_children() {
        let fs = FinSet::new();
        let (a, b, c) = (set("A", 1), set("B", 1), set("C", 1));
        let x = fs.product(&a, &fs.coproduct(&b, &c).unwrap()).unwrap();
        assert_eq!(x.to_string(), "A × (B + C)");
        let e = fs.exponential(&fs.product(&b, &c).unwrap(), &a).unwrap();
        assert_eq!(e.to_string(), "A^(B × C)");
    }
}
