//! The four verifications (`distrib`, `curry`, `adjunction`, `mediator`)
//! for each instance, producing [`CheckReport`]s.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use bicc::heyting::{all_posets, build_divisor_lattice, build_downset_lattice};
use bicc::terms::{pretty_print, semantic_equal, Verdict as TermVerdict};
use bicc::{
    check_iso, Bicc, Builder, CatError, FinSet, FinSetObj, FunTable, Heyting, LatObj, MediatorPlan, Structural,
    TermArrow, Terms, TypeExpr,
};
use serde_json::{json, Map, Value};

use crate::report::{CheckReport, Equality};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Check {
    Distrib,
    Curry,
    Adjunction,
    Mediator,
}

impl Check {
    pub const ALL: [Check; 4] = [Check::Distrib, Check::Curry, Check::Adjunction, Check::Mediator];

    pub fn name(self) -> &'static str {
        match self {
            Check::Distrib => "distrib",
            Check::Curry => "curry",
            Check::Adjunction => "adjunction",
            Check::Mediator => "mediator",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown check {s:?}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Settings {
    /// Seeded samples (arrows, cocones) or random term environments.
    pub trials: usize,
    pub seed: u64,
    /// Hom-sets and cocone families up to this size are enumerated in full.
    pub exhaustive_cap: u128,
    /// Base-set bound for term interpretations.
    pub max_base_size: usize,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            trials: 10,
            seed: 0,
            exhaustive_cap: 4096,
            max_base_size: 3,
        }
    }
}

/// Seed of the `i`-th sample of a run.
pub fn sample_seed(seed: u64, i: usize) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(i as u64)
}

#[derive(Default)]
struct Tally {
    cases: u64,
    failure: Option<Value>,
    rejection: Option<Value>,
}

impl Tally {
    fn failed(&self) -> bool {
        self.failure.is_some()
    }

    fn expect(&mut self, ok: bool, counterexample: impl FnOnce() -> Value) {
        if self.failed() {
            return;
        }
        self.cases += 1;
        if !ok {
            self.failure = Some(counterexample());
        }
    }
}

fn run(
    check: Check,
    instance: &str,
    params: Map<String, Value>,
    settings: &Settings,
    equality: Equality,
    body: impl FnOnce(&mut Tally) -> bicc::Result<()>,
) -> CheckReport {
    let start = Instant::now();
    let mut report = CheckReport::new(check.name(), instance, params, settings.seed);
    report.equality = equality;
    let mut tally = Tally::default();
    match body(&mut tally) {
        Ok(()) => {}
        Err(e @ CatError::TooLarge { .. }) => tally.rejection = Some(json!({ "error": e.to_string() })),
        Err(e) => {
            if !tally.failed() {
                tally.failure = Some(json!({ "error": e.to_string() }));
            }
        }
    }
    report.cases = tally.cases;
    if let Some(r) = tally.rejection {
        report.reject(r);
    } else if let Some(cx) = tally.failure {
        report.fail(cx);
    }
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    report
}

// --- finite sets ------------------------------------------------------------

fn same(t: &mut Tally, property: &str, lhs: &FunTable, rhs: &FunTable) {
    t.expect(lhs == rhs, || {
        json!({ "property": property, "left": lhs.to_json(), "right": rhs.to_json() })
    });
}

fn finset_params(sets: &[FinSetObj; 3]) -> Map<String, Value> {
    let mut p = Map::new();
    p.insert("objects".into(), json!(sets.iter().map(|s| s.to_string()).collect::<Vec<_>>()));
    p.insert("sizes".into(), json!(sets.iter().map(FinSetObj::size).collect::<Vec<_>>()));
    p
}

/// Runs one check in the finite-set instance. `codomain` overrides the
/// mediator's target object, which defaults to `(A×B)+(A×C)`.
pub fn finset(check: Check, sets: &[FinSetObj; 3], codomain: Option<&FinSetObj>, settings: &Settings) -> CheckReport {
    let fs = FinSet::new();
    let [a, b, c] = sets;
    let mut params = finset_params(sets);
    match check {
        Check::Distrib => run(check, "finset", params, settings, Equality::Exact, |t| {
            finset_distrib(&fs, t, a, b, c)
        }),
        Check::Curry => run(check, "finset", params, settings, Equality::Exact, |t| {
            finset_curry(&fs, t, a, b, c)
        }),
        Check::Adjunction => {
            let ab = fs.product(a, b).and_then(|ab| Ok((ab, fs.exponential(b, c)?)));
            let exhaustive = ab
                .as_ref()
                .ok()
                .and_then(|(ab, _)| FinSet::arrow_count(ab, c))
                .is_some_and(|n| n <= settings.exhaustive_cap);
            params.insert("arrows".into(), json!(if exhaustive { "exhaustive" } else { "seeded" }));
            run(check, "finset", params, settings, Equality::Exact, |t| {
                finset_adjunction(&fs, t, a, b, c, exhaustive, settings)
            })
        }
        Check::Mediator => {
            let d = match codomain {
                Some(d) => Ok(d.clone()),
                None => fs
                    .product(a, b)
                    .and_then(|ab| fs.coproduct(&ab, &fs.product(a, c)?)),
            };
            let count = d.as_ref().ok().and_then(|d| {
                let ab = fs.product(a, b).ok()?;
                let ac = fs.product(a, c).ok()?;
                FinSet::arrow_count(&ab, d)?.checked_mul(FinSet::arrow_count(&ac, d)?)
            });
            let exhaustive = count.is_some_and(|n| n <= settings.exhaustive_cap);
            if let Ok(d) = &d {
                params.insert("codomain".into(), json!(d.to_string()));
                params.insert("codomain_size".into(), json!(d.size()));
            }
            params.insert("cocones".into(), json!(if exhaustive { "exhaustive" } else { "seeded" }));
            run(check, "finset", params, settings, Equality::Exact, |t| {
                finset_mediator(&fs, t, a, b, c, &d?, exhaustive, settings)
            })
        }
    }
}

fn finset_distrib(fs: &FinSet, t: &mut Tally, a: &FinSetObj, b: &FinSetObj, c: &FinSetObj) -> bicc::Result<()> {
    let mut bld = Builder::new(fs);
    let iso = bld.distrib_iso(a, b, c)?;
    let (dom, cod) = (fs.dom(&iso.fwd), fs.cod(&iso.fwd));
    same(t, "bwd∘fwd = id", &fs.compose(&iso.bwd, &iso.fwd)?, &fs.identity(&dom)?);
    same(t, "fwd∘bwd = id", &fs.compose(&iso.fwd, &iso.bwd)?, &fs.identity(&cod)?);
    same(t, "fwd = oracle", &iso.fwd, &fs.oracle_distrib(a, b, c)?);
    let (ab, ac) = (fs.product(a, b)?, fs.product(a, c)?);
    let e1 = bld.product_functor_map(a, &fs.inj1(b, c)?)?;
    let e2 = bld.product_functor_map(a, &fs.inj2(b, c)?)?;
    same(t, "fwd∘inj1 = id×inj1", &fs.compose(&iso.fwd, &fs.inj1(&ab, &ac)?)?, &e1);
    same(t, "fwd∘inj2 = id×inj2", &fs.compose(&iso.fwd, &fs.inj2(&ab, &ac)?)?, &e2);
    same(t, "bwd∘(id×inj1) = inj1", &fs.compose(&iso.bwd, &e1)?, &fs.inj1(&ab, &ac)?);
    same(t, "bwd∘(id×inj2) = inj2", &fs.compose(&iso.bwd, &e2)?, &fs.inj2(&ab, &ac)?);
    Ok(())
}

fn finset_curry(fs: &FinSet, t: &mut Tally, a: &FinSetObj, b: &FinSetObj, c: &FinSetObj) -> bicc::Result<()> {
    let mut bld = Builder::new(fs);
    let iso = bld.curry_iso(a, b, c)?;
    let (dom, cod) = (fs.dom(&iso.fwd), fs.cod(&iso.fwd));
    same(t, "γ∘δ = id", &fs.compose(&iso.bwd, &iso.fwd)?, &fs.identity(&dom)?);
    same(t, "δ∘γ = id", &fs.compose(&iso.fwd, &iso.bwd)?, &fs.identity(&cod)?);
    for square in bld.transpose_squares(a, b, c)? {
        same(t, &format!("{} = {}", square[0].0, square[1].0), &square[0].1, &square[1].1);
    }
    for chain in [bld.theta_chain(a, b, c)?, bld.tau_chain(a, b, c)?] {
        for step in chain.windows(2) {
            same(t, &format!("{} = {}", step[0].0, step[1].0), &step[0].1, &step[1].1);
        }
    }
    Ok(())
}

fn finset_adjunction(
    fs: &FinSet,
    t: &mut Tally,
    a: &FinSetObj,
    b: &FinSetObj,
    c: &FinSetObj,
    exhaustive: bool,
    settings: &Settings,
) -> bicc::Result<()> {
    let mut bld = Builder::new(fs);
    let ab = fs.product(a, b)?;
    let cb = fs.exponential(b, c)?;
    let mut on_g = |t: &mut Tally, g: FunTable| -> bicc::Result<()> {
        let f = bld.hom_transpose(&g)?;
        same(t, "untranspose(transpose(g)) = g", &bld.hom_untranspose_direct(&f)?, &g);
        Ok(())
    };
    let mut bld2 = Builder::new(fs);
    let mut on_f = |t: &mut Tally, f: FunTable| -> bicc::Result<()> {
        let direct = bld2.hom_untranspose_direct(&f)?;
        same(t, "transpose(untranspose(f)) = f", &bld2.hom_transpose(&direct)?, &f);
        same(t, "chain route = direct route", &bld2.hom_untranspose_chain(&f)?, &direct);
        Ok(())
    };
    if exhaustive {
        let (left, right) = (FinSet::arrow_count(&ab, c), FinSet::arrow_count(a, &cb));
        t.expect(left == right, || {
            json!({ "property": "|Hom(A×B, C)| = |Hom(A, C^B)|", "left": left.map(|n| n.to_string()), "right": right.map(|n| n.to_string()) })
        });
        for g in fs.enumerate_arrows(&ab, c)? {
            on_g(t, g)?;
        }
        for f in fs.enumerate_arrows(a, &cb)? {
            on_f(t, f)?;
        }
    } else {
        for i in 0..settings.trials {
            on_g(t, fs.random_arrow(&ab, c, sample_seed(settings.seed, i))?)?;
            on_f(t, fs.random_arrow(a, &cb, sample_seed(settings.seed, i))?)?;
        }
    }
    Ok(())
}

/// Number of arrows `m: A×(B+C) → D` with `m∘e1 = q1` and `m∘e2 = q2`,
/// counted by pinning the values forced by the two equations.
pub fn commuting_count(e1: &FunTable, e2: &FunTable, q1: &FunTable, q2: &FunTable, target: usize) -> u128 {
    let mut forced: Vec<Option<usize>> = vec![None; e1.cod().size()];
    for (e, q) in [(e1, q1), (e2, q2)] {
        for (i, &p) in e.map().iter().enumerate() {
            match forced[p] {
                Some(v) if v != q.apply(i) => return 0,
                _ => forced[p] = Some(q.apply(i)),
            }
        }
    }
    let free = forced.iter().filter(|v| v.is_none()).count();
    (0..free).fold(1u128, |acc, _| acc.saturating_mul(target as u128))
}

#[allow(clippy::too_many_arguments)]
fn finset_mediator(
    fs: &FinSet,
    t: &mut Tally,
    a: &FinSetObj,
    b: &FinSetObj,
    c: &FinSetObj,
    d: &FinSetObj,
    exhaustive: bool,
    settings: &Settings,
) -> bicc::Result<()> {
    let (ab, ac) = (fs.product(a, b)?, fs.product(a, c)?);
    let plan = MediatorPlan::new(fs, a, b, c, d)?;
    let e1 = fs.product_map(&fs.identity(a)?, &fs.inj1(b, c)?)?;
    let e2 = fs.product_map(&fs.identity(a)?, &fs.inj2(b, c)?)?;
    let on_cocone = |t: &mut Tally, q1: &FunTable, q2: &FunTable| -> bicc::Result<()> {
        let m = plan.apply(fs, q1, q2)?;
        same(t, "θ(r)∘(id×inj1) = q1", &fs.compose(&m, &e1)?, q1);
        same(t, "θ(r)∘(id×inj2) = q2", &fs.compose(&m, &e2)?, q2);
        let count = commuting_count(&e1, &e2, q1, q2, d.size());
        t.expect(count == 1, || {
            json!({
                "property": "exactly one commuting arrow",
                "q1": q1.to_json(),
                "q2": q2.to_json(),
                "commuting_arrows": count.to_string(),
            })
        });
        Ok(())
    };
    if exhaustive {
        let q2s: Vec<FunTable> = fs.enumerate_arrows(&ac, d)?.collect();
        for q1 in fs.enumerate_arrows(&ab, d)? {
            for q2 in &q2s {
                on_cocone(t, &q1, q2)?;
                if t.failed() {
                    return Ok(());
                }
            }
        }
    } else {
        for i in 0..settings.trials {
            let s = sample_seed(settings.seed, i);
            let q1 = fs.random_arrow(&ab, d, s)?;
            let q2 = fs.random_arrow(&ac, d, s ^ 1)?;
            on_cocone(t, &q1, &q2)?;
        }
    }
    Ok(())
}

// --- Heyting algebras -------------------------------------------------------

fn label(x: &LatObj) -> Value {
    json!(x.value())
}

/// Runs one check in a Heyting algebra, over the given objects or over every
/// triple of elements.
pub fn heyting(
    check: Check,
    h: &Heyting,
    lattice: &str,
    objects: Option<&[LatObj; 3]>,
    settings: &Settings,
) -> CheckReport {
    let mut params = Map::new();
    params.insert("lattice".into(), json!(lattice));
    params.insert("elements".into(), json!(h.lattice().len()));
    let triples: Vec<[LatObj; 3]> = match objects {
        Some(o) => {
            params.insert("objects".into(), json!(o.iter().map(label).collect::<Vec<_>>()));
            vec![o.clone()]
        }
        None => {
            params.insert("objects".into(), json!("all"));
            let els = h.elements();
            let mut out = Vec::with_capacity(els.len().pow(3));
            for x in &els {
                for y in &els {
                    for z in &els {
                        out.push([x.clone(), y.clone(), z.clone()]);
                    }
                }
            }
            out
        }
    };
    run(check, "heyting", params, settings, Equality::Exact, |t| {
        for [a, b, c] in &triples {
            match check {
                Check::Distrib => heyting_distrib(h, t, a, b, c)?,
                Check::Curry => heyting_curry(h, t, a, b, c)?,
                Check::Adjunction => heyting_adjunction(h, t, a, b, c)?,
                Check::Mediator => heyting_mediator(h, t, a, b, c)?,
            }
            if t.failed() {
                break;
            }
        }
        Ok(())
    })
}

fn triple(property: &str, a: &LatObj, b: &LatObj, c: &LatObj) -> Value {
    json!({ "property": property, "a": label(a), "b": label(b), "c": label(c) })
}

fn with(mut v: Value, key: &str, x: Value) -> Value {
    v[key] = x;
    v
}

fn heyting_distrib(h: &Heyting, t: &mut Tally, a: &LatObj, b: &LatObj, c: &LatObj) -> bicc::Result<()> {
    let l = h.lattice();
    let iso = bicc::constructions::distrib_iso(h, a, b, c)?;
    let (dom, cod) = (h.dom(&iso.fwd), h.cod(&iso.fwd));
    t.expect(dom == cod, || {
        with(
            with(triple("(a∧b)∨(a∧c) = a∧(b∨c)", a, b, c), "lhs", label(&dom)),
            "rhs",
            label(&cod),
        )
    });
    let (x, y, z) = (a.element(), b.element(), c.element());
    let oracle = l.meet(x, l.join(y, z)) == l.join(l.meet(x, y), l.meet(x, z));
    t.expect(oracle && cod.element() == l.meet(x, l.join(y, z)), || {
        triple("lattice tables agree with the construction", a, b, c)
    });
    let round = check_iso(h, &iso)?;
    t.expect(round.holds(), || triple("distrib round trips", a, b, c));
    Ok(())
}

fn heyting_curry(h: &Heyting, t: &mut Tally, a: &LatObj, b: &LatObj, c: &LatObj) -> bicc::Result<()> {
    let l = h.lattice();
    let iso = bicc::constructions::curry_iso(h, a, b, c)?;
    let (dom, cod) = (h.dom(&iso.fwd), h.cod(&iso.fwd));
    t.expect(dom == cod, || {
        with(
            with(triple("(b∧c) ⇒ a = c ⇒ (b ⇒ a)", a, b, c), "lhs", label(&dom)),
            "rhs",
            label(&cod),
        )
    });
    let (x, y, z) = (a.element(), b.element(), c.element());
    t.expect(
        l.implies(l.meet(y, z), x) == dom.element() && l.implies(z, l.implies(y, x)) == cod.element(),
        || triple("implication tables agree with the construction", a, b, c),
    );
    let round = check_iso(h, &iso)?;
    t.expect(round.holds(), || triple("curry round trips", a, b, c));
    Ok(())
}

fn heyting_adjunction(h: &Heyting, t: &mut Tally, a: &LatObj, b: &LatObj, c: &LatObj) -> bicc::Result<()> {
    let mut bld = Builder::new(h);
    let ab = h.product(a, b)?;
    let cb = h.exponential(b, c)?;
    let left = h.arrow(&ab, c).ok();
    let right = h.arrow(a, &cb).ok();
    t.expect(left.is_some() == right.is_some(), || {
        with(
            with(triple("a∧b ≤ c iff a ≤ b⇒c", a, b, c), "a∧b ≤ c", json!(left.is_some())),
            "a ≤ b⇒c",
            json!(right.is_some()),
        )
    });
    if let (Some(g), Some(f)) = (left, right) {
        let tg = bld.hom_transpose(&g)?;
        t.expect(h.arrows_equal(&tg, &f)?, || triple("transpose(g) = f", a, b, c));
        let direct = bld.hom_untranspose_direct(&f)?;
        t.expect(h.arrows_equal(&direct, &g)?, || triple("untranspose(f) = g", a, b, c));
        let chained = bld.hom_untranspose_chain(&f)?;
        t.expect(h.arrows_equal(&chained, &direct)?, || triple("chain route = direct route", a, b, c));
    }
    Ok(())
}

fn heyting_mediator(h: &Heyting, t: &mut Tally, a: &LatObj, b: &LatObj, c: &LatObj) -> bicc::Result<()> {
    let mut bld = Builder::new(h);
    let (ab, ac) = (h.product(a, b)?, h.product(a, c)?);
    let dom = h.product(a, &h.coproduct(b, c)?)?;
    for d in h.elements() {
        let (Ok(q1), Ok(q2)) = (h.arrow(&ab, &d), h.arrow(&ac, &d)) else {
            continue;
        };
        let m = bld.mediator(&q1, &q2)?;
        t.expect(h.dom(&m) == dom && h.cod(&m) == d, || {
            with(triple("mediator a∧(b∨c) ≤ d", a, b, c), "d", label(&d))
        });
    }
    Ok(())
}

// --- free syntactic instance -----------------------------------------------

pub const ADJUNCTION_BASE_BOUND: usize = 2;

/// Runs one check symbolically over the given types.
pub fn terms(check: Check, objects: &[TypeExpr; 3], settings: &Settings) -> CheckReport {
    let mut params = Map::new();
    params.insert("objects".into(), json!(objects.iter().map(|o| o.to_string()).collect::<Vec<_>>()));
    params.insert("trials".into(), json!(settings.trials));
    // the chain route passes through (C^B)^(A×B), whose interpretation
    // outgrows the object cap beyond base size 2
    let bound = match check {
        Check::Adjunction => settings.max_base_size.min(ADJUNCTION_BASE_BOUND),
        _ => settings.max_base_size,
    };
    params.insert("max_base_size".into(), json!(bound));
    let cat = Terms {
        trials: settings.trials,
        max_base_size: bound,
        seed: settings.seed,
    };
    let [a, b, c] = objects;
    run(check, "terms", params, settings, Equality::IndistinguishableUnderTrials, |t| {
        let eq = |t: &mut Tally, property: &str, lhs: &TermArrow, rhs: &TermArrow| -> bicc::Result<()> {
            let verdict = semantic_equal(lhs, rhs, cat.trials, cat.max_base_size, cat.seed)?;
            t.expect(verdict.is_equal(), || {
                let mut cx = json!({
                    "property": property,
                    "left": pretty_print(lhs),
                    "right": pretty_print(rhs),
                });
                if let TermVerdict::Distinct { sizes, left, right } = verdict {
                    cx["environment"] = json!(sizes);
                    cx["left_table"] = json!(left);
                    cx["right_table"] = json!(right);
                }
                cx
            });
            Ok(())
        };
        let mut bld = Builder::new(&cat);
        match check {
            Check::Distrib => {
                let iso = bld.distrib_iso(a, b, c)?;
                eq(t, "bwd∘fwd = id", &cat.compose(&iso.bwd, &iso.fwd)?, &TermArrow::id(iso.fwd.dom()))?;
                eq(t, "fwd∘bwd = id", &cat.compose(&iso.fwd, &iso.bwd)?, &TermArrow::id(iso.fwd.cod()))?;
                let (ab, ac) = (cat.product(a, b)?, cat.product(a, c)?);
                let e1 = bld.product_functor_map(a, &cat.inj1(b, c)?)?;
                let e2 = bld.product_functor_map(a, &cat.inj2(b, c)?)?;
                eq(t, "fwd∘inj1 = id×inj1", &cat.compose(&iso.fwd, &cat.inj1(&ab, &ac)?)?, &e1)?;
                eq(t, "fwd∘inj2 = id×inj2", &cat.compose(&iso.fwd, &cat.inj2(&ab, &ac)?)?, &e2)?;
            }
            Check::Curry => {
                let iso = bld.curry_iso(a, b, c)?;
                eq(t, "γ∘δ = id", &cat.compose(&iso.bwd, &iso.fwd)?, &TermArrow::id(iso.fwd.dom()))?;
                eq(t, "δ∘γ = id", &cat.compose(&iso.fwd, &iso.bwd)?, &TermArrow::id(iso.fwd.cod()))?;
                for square in bld.transpose_squares(a, b, c)? {
                    eq(t, &format!("{} = {}", square[0].0, square[1].0), &square[0].1, &square[1].1)?;
                }
                for chain in [bld.theta_chain(a, b, c)?, bld.tau_chain(a, b, c)?] {
                    for step in chain.windows(2) {
                        eq(t, &format!("{} = {}", step[0].0, step[1].0), &step[0].1, &step[1].1)?;
                    }
                }
            }
            Check::Adjunction => {
                let cb = cat.exponential(b, c)?;
                let ev = cat.eval(b, c)?;
                let id = cat.identity(&cb)?;
                eq(t, "transpose(eval) = id", &bld.hom_transpose(&ev)?, &id)?;
                eq(t, "untranspose(id) = eval", &bld.hom_untranspose_direct(&id)?, &ev)?;
                eq(t, "chain route = direct route at id", &bld.hom_untranspose_chain(&id)?, &ev)?;
                // g: (A × C^B) × B → C, evaluating the second component
                let x = cat.product(a, &cb)?;
                let pick = cat.compose(&cat.proj2(a, &cb)?, &cat.proj1(&x, b)?)?;
                let g = cat.compose(&ev, &cat.pair(&pick, &cat.proj2(&x, b)?)?)?;
                let f = bld.hom_transpose(&g)?;
                let direct = bld.hom_untranspose_direct(&f)?;
                eq(t, "untranspose(transpose(g)) = g", &direct, &g)?;
                eq(t, "transpose(untranspose(f)) = f", &bld.hom_transpose(&direct)?, &f)?;
                eq(t, "chain route = direct route", &bld.hom_untranspose_chain(&f)?, &direct)?;
            }
            Check::Mediator => {
                let (ab, ac) = (cat.product(a, b)?, cat.product(a, c)?);
                let (i1, i2) = (cat.inj1(&ab, &ac)?, cat.inj2(&ab, &ac)?);
                let e1 = bld.product_functor_map(a, &cat.inj1(b, c)?)?;
                let e2 = bld.product_functor_map(a, &cat.inj2(b, c)?)?;
                let m = bld.mediator(&i1, &i2)?;
                eq(t, "mediator(inj1, inj2) = distrib_backward", &m, &bld.distrib_backward(a, b, c)?)?;
                eq(t, "θ(r)∘(id×inj1) = q1", &cat.compose(&m, &e1)?, &i1)?;
                eq(t, "θ(r)∘(id×inj2) = q2", &cat.compose(&m, &e2)?, &i2)?;
                let own = bld.mediator(&e1, &e2)?;
                eq(t, "mediator(id×inj1, id×inj2) = id", &own, &TermArrow::id(own.dom()))?;
            }
        }
        Ok(())
    })
}

// --- sweeps -----------------------------------------------------------------

/// Every size triple in `{0..max}³`, lexicographically, times every check.
pub fn sweep_finset(max: usize, settings: &Settings) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for na in 0..=max {
        for nb in 0..=max {
            for nc in 0..=max {
                let sets = [
                    FinSetObj::base("A", na),
                    FinSetObj::base("B", nb),
                    FinSetObj::base("C", nc),
                ];
                for check in Check::ALL {
                    out.push(finset(check, &sets, None, settings));
                }
            }
        }
    }
    out
}

/// Down-set lattices of all posets on up to `max_poset` points, then divisor
/// lattices `1..=max_divisor`, each over all element triples.
pub fn sweep_heyting(max_poset: usize, max_divisor: u64, settings: &Settings) -> Vec<CheckReport> {
    let mut lattices = Vec::new();
    for n in 0..=max_poset {
        for poset in all_posets(n) {
            let name = format!("downset:{}", serde_json::to_string(&poset.to_json()).expect("serializable"));
            lattices.push((name, build_downset_lattice(&poset)));
        }
    }
    for n in 1..=max_divisor {
        lattices.push((format!("divisors:{n}"), build_divisor_lattice(n)));
    }
    let mut out = Vec::new();
    for (name, lattice) in lattices {
        match lattice.and_then(Heyting::new) {
            Ok(h) => {
                for check in Check::ALL {
                    out.push(heyting(check, &h, &name, None, settings));
                }
            }
            Err(e) => out.push(rejected(Check::Distrib, "heyting", &name, &e.into(), settings)),
        }
    }
    out
}

/// The four checks over the base types `A, B, C`.
pub fn sweep_terms(settings: &Settings) -> Vec<CheckReport> {
    let objects = [TypeExpr::base("A"), TypeExpr::base("B"), TypeExpr::base("C")];
    Check::ALL.iter().map(|&c| terms(c, &objects, settings)).collect()
}

/// A report for input that never reached a construction.
pub fn rejected(
    check: Check,
    instance: &str,
    source: &str,
    error: &crate::input::InputError,
    settings: &Settings,
) -> CheckReport {
    let mut params = Map::new();
    params.insert("input".into(), json!(source));
    let mut r = CheckReport::new(check.name(), instance, params, settings.seed);
    r.reject(error.to_value());
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_names_round_trip() {
        for c in Check::ALL {
            assert_eq!(c.name().parse::<Check>().unwrap(), c);
        }
        assert!("nope".parse::<Check>().is_err());
    }

    #[test]
    fn commuting_count_detects_freedom_and_conflict() {
        let fs = FinSet::new();
        let (a, b, c) = (FinSetObj::base("A", 1), FinSetObj::base("B", 1), FinSetObj::base("C", 1));
        let d = FinSetObj::base("D", 3);
        let e1 = fs.product_map(&fs.identity(&a).unwrap(), &fs.inj1(&b, &c).unwrap()).unwrap();
        let e2 = fs.product_map(&fs.identity(&a).unwrap(), &fs.inj2(&b, &c).unwrap()).unwrap();
        let ab = fs.product(&a, &b).unwrap();
        let ac = fs.product(&a, &c).unwrap();
        let q1 = FunTable::new(ab.clone(), d.clone(), vec![2]).unwrap();
        let q2 = FunTable::new(ac, d.clone(), vec![0]).unwrap();
        assert_eq!(commuting_count(&e1, &e2, &q1, &q2, 3), 1);
        // pretending both legs hit the same point forces a conflict
        assert_eq!(commuting_count(&e1, &e1, &q1, &q2, 3), 0);
        // a leg that covers nothing leaves one point free
        let empty = FinSetObj::base("E", 0);
        let none = FunTable::new(empty.clone(), e1.cod().clone(), vec![]).unwrap();
        let q0 = FunTable::new(empty, d, vec![]).unwrap();
        assert_eq!(commuting_count(&e1, &none, &q1, &q0, 3), 3);
    }

    #[test]
    fn finset_checks_pass_at_two_one_three() {
        let sets = [FinSetObj::base("A", 2), FinSetObj::base("B", 1), FinSetObj::base("C", 3)];
        for check in Check::ALL {
            let r = finset(check, &sets, None, &Settings::default());
            assert!(r.passed(), "{}", r.line());
            assert!(r.cases > 0);
        }
    }

    #[test]
    fn oversized_objects_are_rejected() {
        let sets = [FinSetObj::base("A", 9), FinSetObj::base("B", 9), FinSetObj::base("C", 9)];
        let r = finset(Check::Curry, &sets, None, &Settings::default());
        assert_eq!(r.verdict, crate::report::Verdict::RejectedInput);
    }

    #[test]
    fn heyting_objects_in_thirty() {
        let h = Heyting::new(build_divisor_lattice(30).unwrap()).unwrap();
        let objs = ["6", "10", "15"].map(|n| h.element_named(n).unwrap());
        let r = heyting(Check::Distrib, &h, "divisors:30", Some(&objs), &Settings::default());
        assert!(r.passed(), "{}", r.line());
    }

    #[test]
    fn sample_seeds_are_distinct() {
        let seeds: std::collections::BTreeSet<u64> =
            (0..4).flat_map(|s| (0..100).map(move |i| sample_seed(s, i))).collect();
        assert_eq!(seeds.len(), 400);
    }
}
