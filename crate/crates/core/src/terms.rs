//! The free bicartesian closed category over named base types.
//!
//! Arrows are formal composites. Two arrows are compared by interpreting
//! them into [`FinSet`] under a family of finite environments, so an
//! "equal" verdict means indistinguishable under the trials run, not a
//! proof of βη-equality.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::category::Bicc;
use crate::error::{mismatch, CatError, Result};
use crate::finset::{FinSet, FinSetObj, FunTable, TableJson};

/// Object syntax.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TypeExpr {
    Base(Arc<str>),
    One,
    Zero,
    Prod(Arc<TypeExpr>, Arc<TypeExpr>),
    Sum(Arc<TypeExpr>, Arc<TypeExpr>),
    /// `target^base`.
    Exp { base: Arc<TypeExpr>, target: Arc<TypeExpr> },
}

impl TypeExpr {
    pub fn base(name: &str) -> Self {
        TypeExpr::Base(Arc::from(name))
    }

    pub fn prod(l: &TypeExpr, r: &TypeExpr) -> Self {
        TypeExpr::Prod(Arc::new(l.clone()), Arc::new(r.clone()))
    }

    pub fn sum(l: &TypeExpr, r: &TypeExpr) -> Self {
        TypeExpr::Sum(Arc::new(l.clone()), Arc::new(r.clone()))
    }

    pub fn exp(base: &TypeExpr, target: &TypeExpr) -> Self {
        TypeExpr::Exp {
            base: Arc::new(base.clone()),
            target: Arc::new(target.clone()),
        }
    }

    fn is_atomic(&self) -> bool {
        matches!(self, TypeExpr::Base(_) | TypeExpr::One | TypeExpr::Zero)
    }

    /// Base names occurring in the type.
    pub fn bases(&self, out: &mut BTreeSet<String>) {
        match self {
            TypeExpr::Base(n) => {
                out.insert(n.to_string());
            }
            TypeExpr::One | TypeExpr::Zero => {}
            TypeExpr::Prod(l, r) | TypeExpr::Sum(l, r) => {
                l.bases(out);
                r.bases(out);
            }
            TypeExpr::Exp { base, target } => {
                base.bases(out);
                target.bases(out);
            }
        }
    }

    fn fmt_child(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_atomic() {
            write!(f, "{self}")
        } else {
            write!(f, "({self})")
        }
    }
}

impl fmt::Display for TypeExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TypeExpr::Base(n) => write!(f, "{n}"),
            TypeExpr::One => write!(f, "1"),
            TypeExpr::Zero => write!(f, "0"),
            TypeExpr::Prod(l, r) => {
                l.fmt_child(f)?;
                write!(f, " × ")?;
                r.fmt_child(f)
            }
            TypeExpr::Sum(l, r) => {
                l.fmt_child(f)?;
                write!(f, " + ")?;
                r.fmt_child(f)
            }
            TypeExpr::Exp { base, target } => {
                target.fmt_child(f)?;
                write!(f, "^")?;
                base.fmt_child(f)
            }
        }
    }
}

impl fmt::Debug for TypeExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Arrow syntax. Children are full [`TermArrow`]s so types are cached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Term {
    Id(TypeExpr),
    Comp(TermArrow, TermArrow),
    Proj1(TypeExpr, TypeExpr),
    Proj2(TypeExpr, TypeExpr),
    Pair(TermArrow, TermArrow),
    Bang(TypeExpr),
    Inj1(TypeExpr, TypeExpr),
    Inj2(TypeExpr, TypeExpr),
    Copair(TermArrow, TermArrow),
    Absurd(TypeExpr),
    Eval { base: TypeExpr, target: TypeExpr },
    Curry(TermArrow),
}

/// A well-typed term with its domain and codomain. Only constructible
/// through the typed constructors.
#[derive(Clone, PartialEq, Eq)]
pub struct TermArrow {
    term: Arc<Term>,
    dom: TypeExpr,
    cod: TypeExpr,
}

impl TermArrow {
    fn make(term: Term, dom: TypeExpr, cod: TypeExpr) -> Self {
        TermArrow {
            term: Arc::new(term),
            dom,
            cod,
        }
    }

    pub fn term(&self) -> &Term {
        &self.term
    }

    pub fn dom(&self) -> &TypeExpr {
        &self.dom
    }

    pub fn cod(&self) -> &TypeExpr {
        &self.cod
    }

    pub fn id(t: &TypeExpr) -> Self {
        Self::make(Term::Id(t.clone()), t.clone(), t.clone())
    }

    pub fn comp(g: &TermArrow, f: &TermArrow) -> Result<Self> {
        if f.cod != g.dom {
            return Err(mismatch("compose", &g.dom, &f.cod));
        }
        Ok(Self::make(Term::Comp(g.clone(), f.clone()), f.dom.clone(), g.cod.clone()))
    }

    pub fn proj1(l: &TypeExpr, r: &TypeExpr) -> Self {
        Self::make(Term::Proj1(l.clone(), r.clone()), TypeExpr::prod(l, r), l.clone())
    }

    pub fn proj2(l: &TypeExpr, r: &TypeExpr) -> Self {
        Self::make(Term::Proj2(l.clone(), r.clone()), TypeExpr::prod(l, r), r.clone())
    }

    pub fn pair(f: &TermArrow, g: &TermArrow) -> Result<Self> {
        if f.dom != g.dom {
            return Err(mismatch("pair", &f.dom, &g.dom));
        }
        let cod = TypeExpr::prod(&f.cod, &g.cod);
        Ok(Self::make(Term::Pair(f.clone(), g.clone()), f.dom.clone(), cod))
    }

    pub fn bang(t: &TypeExpr) -> Self {
        Self::make(Term::Bang(t.clone()), t.clone(), TypeExpr::One)
    }

    pub fn inj1(l: &TypeExpr, r: &TypeExpr) -> Self {
        Self::make(Term::Inj1(l.clone(), r.clone()), l.clone(), TypeExpr::sum(l, r))
    }

    pub fn inj2(l: &TypeExpr, r: &TypeExpr) -> Self {
        Self::make(Term::Inj2(l.clone(), r.clone()), r.clone(), TypeExpr::sum(l, r))
    }

    pub fn copair(f: &TermArrow, g: &TermArrow) -> Result<Self> {
        if f.cod != g.cod {
            return Err(mismatch("copair", &f.cod, &g.cod));
        }
        let dom = TypeExpr::sum(&f.dom, &g.dom);
        Ok(Self::make(Term::Copair(f.clone(), g.clone()), dom, f.cod.clone()))
    }

    pub fn absurd(t: &TypeExpr) -> Self {
        Self::make(Term::Absurd(t.clone()), TypeExpr::Zero, t.clone())
    }

    pub fn eval(base: &TypeExpr, target: &TypeExpr) -> Self {
        let dom = TypeExpr::prod(&TypeExpr::exp(base, target), base);
        Self::make(
            Term::Eval {
                base: base.clone(),
                target: target.clone(),
            },
            dom,
            target.clone(),
        )
    }

    /// `f: A × B → C` gives `Λf: A → C^B`.
    pub fn curry(f: &TermArrow) -> Result<Self> {
        let TypeExpr::Prod(a, b) = &f.dom else {
            return Err(CatError::NotAProduct(f.dom.to_string()));
        };
        let cod = TypeExpr::exp(b, &f.cod);
        Ok(Self::make(Term::Curry(f.clone()), (**a).clone(), cod))
    }

    /// Base names occurring anywhere in the term, including its boundary.
    pub fn bases(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.dom.bases(&mut out);
        self.cod.bases(&mut out);
        self.collect_bases(&mut out);
        out
    }

    fn collect_bases(&self, out: &mut BTreeSet<String>) {
        match &*self.term {
            Term::Id(t) | Term::Bang(t) | Term::Absurd(t) => t.bases(out),
            Term::Proj1(l, r) | Term::Proj2(l, r) | Term::Inj1(l, r) | Term::Inj2(l, r) => {
                l.bases(out);
                r.bases(out);
            }
            Term::Eval { base, target } => {
                base.bases(out);
                target.bases(out);
            }
            Term::Comp(g, f) | Term::Pair(g, f) | Term::Copair(g, f) => {
                g.collect_bases(out);
                f.collect_bases(out);
            }
            Term::Curry(f) => f.collect_bases(out),
        }
    }

    /// Number of constructor nodes.
    pub fn size(&self) -> usize {
        match &*self.term {
            Term::Comp(g, f) | Term::Pair(g, f) | Term::Copair(g, f) => 1 + g.size() + f.size(),
            Term::Curry(f) => 1 + f.size(),
            _ => 1,
        }
    }
}

impl fmt::Debug for TermArrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} : {} → {}", pretty_print(self), self.dom, self.cod)
    }
}

// ---------------------------------------------------------------------------
// printing and parsing

fn type_subscript(t: &TypeExpr) -> String {
    if t.is_atomic() {
        format!("_{t}")
    } else {
        format!("_({t})")
    }
}

fn pair_subscript(l: &TypeExpr, r: &TypeExpr) -> String {
    format!("_{{{l}, {r}}}")
}

/// Deterministic notation accepted back by [`parse_term`].
pub fn pretty_print(t: &TermArrow) -> String {
    match t.term() {
        Term::Id(x) => format!("id{}", type_subscript(x)),
        Term::Bang(x) => format!("!{}", type_subscript(x)),
        Term::Absurd(x) => format!("absurd{}", type_subscript(x)),
        Term::Proj1(l, r) => format!("π₁{}", pair_subscript(l, r)),
        Term::Proj2(l, r) => format!("π₂{}", pair_subscript(l, r)),
        Term::Inj1(l, r) => format!("inj₁{}", pair_subscript(l, r)),
        Term::Inj2(l, r) => format!("inj₂{}", pair_subscript(l, r)),
        Term::Eval { base, target } => format!("eval{}", pair_subscript(base, target)),
        Term::Pair(f, g) => format!("⟨{}, {}⟩", pretty_print(f), pretty_print(g)),
        Term::Copair(f, g) => format!("[{}, {}]", pretty_print(f), pretty_print(g)),
        Term::Curry(f) => format!("Λ({})", pretty_print(f)),
        Term::Comp(g, f) => {
            let left = if matches!(g.term(), Term::Comp(..)) {
                format!("({})", pretty_print(g))
            } else {
                pretty_print(g)
            };
            format!("{left} ∘ {}", pretty_print(f))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at offset {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

struct Parser<'s> {
    src: &'s str,
    pos: usize,
}

const KEYWORDS: &[(&str, &str)] = &[
    ("π₁", "pi1"),
    ("π₂", "pi2"),
    ("inj₁", "inj1"),
    ("inj₂", "inj2"),
    ("Λ", "curry"),
];

impl<'s> Parser<'s> {
    fn new(src: &'s str) -> Self {
        Parser { src, pos: 0 }
    }

    fn rest(&self) -> &'s str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn error<T>(&self, message: impl Into<String>) -> std::result::Result<T, ParseError> {
        Err(ParseError {
            offset: self.pos,
            message: message.into(),
        })
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> std::result::Result<(), ParseError> {
        if self.eat(token) {
            Ok(())
        } else {
            self.error(format!("expected {token:?}"))
        }
    }

    // An identifier directly at the cursor (no whitespace skipping).
    fn ident(&mut self) -> Option<&'s str> {
        let rest = self.rest();
        let mut chars = rest.char_indices();
        match chars.next() {
            Some((_, c)) if c.is_alphabetic() => {}
            _ => return None,
        }
        let end = chars
            .find(|(_, c)| !(c.is_alphanumeric() || *c == '\''))
            .map_or(rest.len(), |(i, _)| i);
        self.pos += end;
        Some(&rest[..end])
    }

    fn done(&mut self) -> std::result::Result<(), ParseError> {
        self.skip_ws();
        if self.pos == self.src.len() {
            Ok(())
        } else {
            self.error("trailing input")
        }
    }

    // type := prod ('+' prod)*
    fn type_expr(&mut self) -> std::result::Result<TypeExpr, ParseError> {
        let mut t = self.type_prod()?;
        while self.eat("+") {
            let r = self.type_prod()?;
            t = TypeExpr::sum(&t, &r);
        }
        Ok(t)
    }

    // prod := pow (('×' | '*') pow)*
    fn type_prod(&mut self) -> std::result::Result<TypeExpr, ParseError> {
        let mut t = self.type_pow()?;
        while self.eat("×") || self.eat("*") {
            let r = self.type_pow()?;
            t = TypeExpr::prod(&t, &r);
        }
        Ok(t)
    }

    // pow := atom ('^' atom)*
    fn type_pow(&mut self) -> std::result::Result<TypeExpr, ParseError> {
        let mut t = self.type_atom()?;
        while self.eat("^") {
            let base = self.type_atom()?;
            t = TypeExpr::exp(&base, &t);
        }
        Ok(t)
    }

    fn type_atom(&mut self) -> std::result::Result<TypeExpr, ParseError> {
        self.skip_ws();
        if self.eat("(") {
            let t = self.type_expr()?;
            self.expect(")")?;
            return Ok(t);
        }
        if self.eat("1") {
            return Ok(TypeExpr::One);
        }
        if self.eat("0") {
            return Ok(TypeExpr::Zero);
        }
        match self.ident() {
            Some(name) => Ok(TypeExpr::base(name)),
            None => self.error("expected a type"),
        }
    }

    // `_A`, `_1`, or `_(type)`
    fn sub1(&mut self) -> std::result::Result<TypeExpr, ParseError> {
        if !self.rest().starts_with('_') {
            return self.error("expected a type subscript");
        }
        self.pos += 1;
        self.type_atom()
    }

    // `_{type, type}`
    fn sub2(&mut self) -> std::result::Result<(TypeExpr, TypeExpr), ParseError> {
        if !self.rest().starts_with("_{") {
            return self.error("expected a two-type subscript");
        }
        self.pos += 2;
        let l = self.type_expr()?;
        self.expect(",")?;
        let r = self.type_expr()?;
        self.expect("}")?;
        Ok((l, r))
    }

    fn typed<T>(&self, at: usize, r: Result<T>) -> std::result::Result<T, ParseError> {
        r.map_err(|e| ParseError {
            offset: at,
            message: e.to_string(),
        })
    }

    // arrow := prim ('∘' arrow)?
    fn arrow(&mut self) -> std::result::Result<TermArrow, ParseError> {
        let g = self.prim()?;
        let at = self.pos;
        if self.eat("∘") {
            let f = self.arrow()?;
            return self.typed(at, TermArrow::comp(&g, &f));
        }
        Ok(g)
    }

    fn keyword(&mut self) -> Option<&'static str> {
        self.skip_ws();
        for &(unicode, ascii) in KEYWORDS {
            for spelling in [unicode, ascii] {
                if self.rest().starts_with(spelling) {
                    self.pos += spelling.len();
                    return Some(ascii);
                }
            }
        }
        None
    }

    fn prim(&mut self) -> std::result::Result<TermArrow, ParseError> {
        self.skip_ws();
        let at = self.pos;
        if let Some(kw) = self.keyword() {
            return match kw {
                "pi1" => self.sub2().map(|(l, r)| TermArrow::proj1(&l, &r)),
                "pi2" => self.sub2().map(|(l, r)| TermArrow::proj2(&l, &r)),
                "inj1" => self.sub2().map(|(l, r)| TermArrow::inj1(&l, &r)),
                "inj2" => self.sub2().map(|(l, r)| TermArrow::inj2(&l, &r)),
                _ => {
                    self.expect("(")?;
                    let f = self.arrow()?;
                    self.expect(")")?;
                    self.typed(at, TermArrow::curry(&f))
                }
            };
        }
        if self.eat("⟨") || self.eat("<") {
            let f = self.arrow()?;
            self.expect(",")?;
            let g = self.arrow()?;
            if !(self.eat("⟩") || self.eat(">")) {
                return self.error("expected '⟩'");
            }
            return self.typed(at, TermArrow::pair(&f, &g));
        }
        if self.eat("[") {
            let f = self.arrow()?;
            self.expect(",")?;
            let g = self.arrow()?;
            self.expect("]")?;
            return self.typed(at, TermArrow::copair(&f, &g));
        }
        if self.eat("(") {
            let f = self.arrow()?;
            self.expect(")")?;
            return Ok(f);
        }
        if self.eat("!") {
            return self.sub1().map(|t| TermArrow::bang(&t));
        }
        match self.ident() {
            Some("id") => self.sub1().map(|t| TermArrow::id(&t)),
            Some("absurd") => self.sub1().map(|t| TermArrow::absurd(&t)),
            Some("eval") => self.sub2().map(|(b, t)| TermArrow::eval(&b, &t)),
            Some(other) => {
                self.pos = at;
                self.error(format!("unknown arrow {other:?}"))
            }
            None => self.error("expected an arrow"),
        }
    }
}

/// Parses the notation of [`pretty_print`]. ASCII spellings `pi1`, `pi2`,
/// `inj1`, `inj2`, `curry`, `<f, g>` and `*` for `×` are accepted too.
pub fn parse_term(src: &str) -> std::result::Result<TermArrow, ParseError> {
    let mut p = Parser::new(src);
    let t = p.arrow()?;
    p.done()?;
    Ok(t)
}

pub fn parse_type(src: &str) -> std::result::Result<TypeExpr, ParseError> {
    let mut p = Parser::new(src);
    let t = p.type_expr()?;
    p.done()?;
    Ok(t)
}

// ---------------------------------------------------------------------------
// semantics

/// Assignment of finite sets to base names.
#[derive(Debug, Clone, Default)]
pub struct Interpretation {
    sets: BTreeMap<String, FinSetObj>,
}

impl Interpretation {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_sizes<'a>(sizes: impl IntoIterator<Item = (&'a str, usize)>) -> Self {
        let mut env = Self::new();
        for (name, size) in sizes {
            env.assign(FinSetObj::base(name, size));
        }
        env
    }

    /// Binds the set under its own name.
    pub fn assign(&mut self, set: FinSetObj) {
        self.sets.insert(set.to_string(), set);
    }

    pub fn get(&self, name: &str) -> Option<&FinSetObj> {
        self.sets.get(name)
    }

    pub fn sizes(&self) -> BTreeMap<String, usize> {
        self.sets.iter().map(|(k, v)| (k.clone(), v.size())).collect()
    }

    pub fn interpret_type(&self, fs: &FinSet, t: &TypeExpr) -> Result<FinSetObj> {
        match t {
            TypeExpr::Base(n) => self
                .sets
                .get(&**n)
                .cloned()
                .ok_or_else(|| CatError::Interpretation(format!("no set assigned to base {n}"))),
            TypeExpr::One => Ok(fs.terminal()),
            TypeExpr::Zero => Ok(fs.initial()),
            TypeExpr::Prod(l, r) => fs.product(&self.interpret_type(fs, l)?, &self.interpret_type(fs, r)?),
            TypeExpr::Sum(l, r) => fs.coproduct(&self.interpret_type(fs, l)?, &self.interpret_type(fs, r)?),
            TypeExpr::Exp { base, target } => {
                fs.exponential(&self.interpret_type(fs, base)?, &self.interpret_type(fs, target)?)
            }
        }
    }

    /// The table of `t`, built constructor by constructor with the finite-set
    /// structure.
    pub fn interpret(&self, fs: &FinSet, t: &TermArrow) -> Result<FunTable> {
        let ty = |x: &TypeExpr| self.interpret_type(fs, x);
        match t.term() {
            Term::Id(x) => fs.identity(&ty(x)?),
            Term::Comp(g, f) => fs.compose(&self.interpret(fs, g)?, &self.interpret(fs, f)?),
            Term::Proj1(l, r) => fs.proj1(&ty(l)?, &ty(r)?),
            Term::Proj2(l, r) => fs.proj2(&ty(l)?, &ty(r)?),
            Term::Pair(f, g) => fs.pair(&self.interpret(fs, f)?, &self.interpret(fs, g)?),
            Term::Bang(x) => fs.bang(&ty(x)?),
            Term::Inj1(l, r) => fs.inj1(&ty(l)?, &ty(r)?),
            Term::Inj2(l, r) => fs.inj2(&ty(l)?, &ty(r)?),
            Term::Copair(f, g) => fs.copair(&self.interpret(fs, f)?, &self.interpret(fs, g)?),
            Term::Absurd(x) => fs.absurd(&ty(x)?),
            Term::Eval { base, target } => fs.eval(&ty(base)?, &ty(target)?),
            Term::Curry(f) => fs.curry(&self.interpret(fs, f)?),
        }
    }
}

/// `interpret(t, env)` with the default finite-set bounds.
pub fn interpret(t: &TermArrow, env: &Interpretation) -> Result<FunTable> {
    env.interpret(&FinSet::default(), t)
}

/// Outcome of [`semantic_equal`].
#[derive(Debug, Clone, PartialEq)]
pub enum Verdict {
    /// Equal tables under every environment tried.
    Indistinguishable { environments: usize },
    /// A distinguishing environment and the two tables it produced.
    Distinct {
        sizes: BTreeMap<String, usize>,
        left: TableJson,
        right: TableJson,
    },
}

impl Verdict {
    pub fn is_equal(&self) -> bool {
        matches!(self, Verdict::Indistinguishable { .. })
    }
}

/// Trial environments over `bases`: all sizes 0, all 1, all 2, then
/// `trials` seeded draws with sizes in `0..=max_base_size`.
pub fn trial_environments(
    bases: &BTreeSet<String>,
    trials: usize,
    max_base_size: usize,
    seed: u64,
) -> Vec<Interpretation> {
    let uniform = |n: usize| Interpretation::from_sizes(bases.iter().map(|b| (b.as_str(), n)));
    let mut envs: Vec<Interpretation> = (0..=2).map(uniform).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        envs.push(Interpretation::from_sizes(
            bases.iter().map(|b| (b.as_str(), rng.gen_range(0..=max_base_size))),
        ));
    }
    envs
}

/// Compares `f` and `g` under [`trial_environments`].
pub fn semantic_equal(
    f: &TermArrow,
    g: &TermArrow,
    trials: usize,
    max_base_size: usize,
    seed: u64,
) -> Result<Verdict> {
    if f.dom != g.dom || f.cod != g.cod {
        return Err(mismatch(
            "semantic_equal",
            format!("{} → {}", f.dom, f.cod),
            format!("{} → {}", g.dom, g.cod),
        ));
    }
    let mut bases = f.bases();
    bases.extend(g.bases());
    let fs = FinSet::default();
    let envs = trial_environments(&bases, trials, max_base_size, seed);
    let count = envs.len();
    for env in envs {
        let (left, right) = (env.interpret(&fs, f)?, env.interpret(&fs, g)?);
        if left != right {
            return Ok(Verdict::Distinct {
                sizes: env.sizes(),
                left: left.to_json(),
                right: right.to_json(),
            });
        }
    }
    Ok(Verdict::Indistinguishable { environments: count })
}

/// The free instance. Arrow equality runs [`semantic_equal`] with the
/// stored trial settings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Terms {
    pub trials: usize,
    pub max_base_size: usize,
    pub seed: u64,
}

impl Default for Terms {
    fn default() -> Self {
        Terms {
            trials: 10,
            max_base_size: 3,
            seed: 0,
        }
    }
}

impl Bicc for Terms {
    type Obj = TypeExpr;
    type Arr = TermArrow;

    fn dom(&self, f: &TermArrow) -> TypeExpr {
        f.dom.clone()
    }

    fn cod(&self, f: &TermArrow) -> TypeExpr {
        f.cod.clone()
    }

    fn identity(&self, x: &TypeExpr) -> Result<TermArrow> {
        Ok(TermArrow::id(x))
    }

    fn compose(&self, g: &TermArrow, f: &TermArrow) -> Result<TermArrow> {
        TermArrow::comp(g, f)
    }

    fn arrows_equal(&self, f: &TermArrow, g: &TermArrow) -> Result<bool> {
        if f.dom != g.dom || f.cod != g.cod {
            return Ok(false);
        }
        if f == g {
            return Ok(true);
        }
        Ok(semantic_equal(f, g, self.trials, self.max_base_size, self.seed)?.is_equal())
    }

    fn terminal(&self) -> TypeExpr {
        TypeExpr::One
    }

    fn bang(&self, x: &TypeExpr) -> Result<TermArrow> {
        Ok(TermArrow::bang(x))
    }

    fn product(&self, x: &TypeExpr, y: &TypeExpr) -> Result<TypeExpr> {
        Ok(TypeExpr::prod(x, y))
    }

    fn proj1(&self, x: &TypeExpr, y: &TypeExpr) -> Result<TermArrow> {
        Ok(TermArrow::proj1(x, y))
    }

    fn proj2(&self, x: &TypeExpr, y: &TypeExpr) -> Result<TermArrow> {
        Ok(TermArrow::proj2(x, y))
    }

    fn pair(&self, f: &TermArrow, g: &TermArrow) -> Result<TermArrow> {
        TermArrow::pair(f, g)
    }

    fn initial(&self) -> TypeExpr {
        TypeExpr::Zero
    }

    fn absurd(&self, x: &TypeExpr) -> Result<TermArrow> {
        Ok(TermArrow::absurd(x))
    }

    fn coproduct(&self, x: &TypeExpr, y: &TypeExpr) -> Result<TypeExpr> {
        Ok(TypeExpr::sum(x, y))
    }

    fn inj1(&self, x: &TypeExpr, y: &TypeExpr) -> Result<TermArrow> {
        Ok(TermArrow::inj1(x, y))
    }

    fn inj2(&self, x: &TypeExpr, y: &TypeExpr) -> Result<TermArrow> {
        Ok(TermArrow::inj2(x, y))
    }

    fn copair(&self, f: &TermArrow, g: &TermArrow) -> Result<TermArrow> {
        TermArrow::copair(f, g)
    }

    fn exponential(&self, base: &TypeExpr, target: &TypeExpr) -> Result<TypeExpr> {
        Ok(TypeExpr::exp(base, target))
    }

    fn eval(&self, base: &TypeExpr, target: &TypeExpr) -> Result<TermArrow> {
        Ok(TermArrow::eval(base, target))
    }

    fn curry(&self, f: &TermArrow) -> Result<TermArrow> {
        TermArrow::curry(f)
    }

    fn split_product(&self, x: &TypeExpr) -> Option<(TypeExpr, TypeExpr)> {
        match x {
            TypeExpr::Prod(l, r) => Some(((**l).clone(), (**r).clone())),
            _ => None,
        }
    }

    fn split_coproduct(&self, x: &TypeExpr) -> Option<(TypeExpr, TypeExpr)> {
        match x {
            TypeExpr::Sum(l, r) => Some(((**l).clone(), (**r).clone())),
            _ => None,
        }
    }

    fn split_exponential(&self, x: &TypeExpr) -> Option<(TypeExpr, TypeExpr)> {
        match x {
            TypeExpr::Exp { base, target } => Some(((**base).clone(), (**target).clone())),
            _ => None,
        }
    }
}

/// Seeded generators of random well-typed terms.
pub mod generate {
    use super::*;

    /// A random type over `bases` with at most `depth` nested connectives.
    pub fn random_type<R: Rng + ?Sized>(rng: &mut R, bases: &[&str], depth: usize) -> TypeExpr {
        let leaf = |rng: &mut R| match rng.gen_range(0..bases.len() + 2) {
            0 => TypeExpr::One,
            1 => TypeExpr::Zero,
            k => TypeExpr::base(bases[k - 2]),
        };
        if depth == 0 || rng.gen_bool(0.4) {
            return leaf(rng);
        }
        let l = random_type(rng, bases, depth - 1);
        let r = random_type(rng, bases, depth - 1);
        match rng.gen_range(0..3) {
            0 => TypeExpr::prod(&l, &r),
            1 => TypeExpr::sum(&l, &r),
            _ => TypeExpr::exp(&l, &r),
        }
    }

    /// A random well-typed arrow out of `dom`.
    pub fn random_term<R: Rng + ?Sized>(
        rng: &mut R,
        bases: &[&str],
        dom: &TypeExpr,
        depth: usize,
    ) -> TermArrow {
        let ty = |rng: &mut R| random_type(rng, bases, 1);
        if depth == 0 {
            return match (dom, rng.gen_range(0..3)) {
                (TypeExpr::Prod(l, r), 0) => TermArrow::proj1(l, r),
                (TypeExpr::Prod(l, r), 1) => TermArrow::proj2(l, r),
                (TypeExpr::Zero, 0) => TermArrow::absurd(&ty(rng)),
                (_, 2) => TermArrow::bang(dom),
                _ => TermArrow::id(dom),
            };
        }
        let d = depth - 1;
        match rng.gen_range(0..7) {
            0 => {
                let f = random_term(rng, bases, dom, d);
                let g = random_term(rng, bases, f.cod(), d);
                TermArrow::comp(&g, &f).expect("chained by construction")
            }
            1 => {
                let f = random_term(rng, bases, dom, d);
                let g = random_term(rng, bases, dom, d);
                TermArrow::pair(&f, &g).expect("shared domain")
            }
            2 => {
                let extra = ty(rng);
                let f = random_term(rng, bases, &TypeExpr::prod(dom, &extra), d);
                TermArrow::curry(&f).expect("product domain")
            }
            3 => match dom {
                TypeExpr::Sum(l, r) => {
                    let f = random_term(rng, bases, l, d);
                    let g = random_term(rng, bases, r, d);
                    let sum = TypeExpr::sum(f.cod(), g.cod());
                    let left = TermArrow::comp(&TermArrow::inj1(f.cod(), g.cod()), &f).expect("typed");
                    let right = TermArrow::comp(&TermArrow::inj2(f.cod(), g.cod()), &g).expect("typed");
                    let joined = TermArrow::copair(&left, &right).expect("shared codomain");
                    debug_assert_eq!(joined.cod(), &sum);
                    joined
                }
                _ => random_term(rng, bases, dom, d),
            },
            4 => match dom {
                TypeExpr::Prod(l, r) if matches!(&**l, TypeExpr::Exp { base, .. } if base == r) => {
                    let TypeExpr::Exp { base, target } = &**l else { unreachable!() };
                    TermArrow::eval(base, target)
                }
                _ => {
                    let other = ty(rng);
                    if rng.gen_bool(0.5) {
                        TermArrow::inj1(dom, &other)
                    } else {
                        TermArrow::inj2(&other, dom)
                    }
                }
            },
            _ => random_term(rng, bases, dom, 0),
        }
    }
}
