//! The explicit arrows behind `A × (B + C) ≅ (A × B) + (A × C)` and
//! `A^(B×C) ≅ (A^B)^C`, built from the signature alone so that they run
//! unchanged in every instance.
//!
//! Products are never re-bracketed silently: every reordering is a named
//! structural arrow and shows up in the trace of a tracing [`Builder`].

use crate::category::{Bicc, Iso, Structural};
use crate::error::{mismatch, Result};

/// Labelled intermediate arrows, in the order they were built.
#[derive(Debug, Clone)]
pub struct ConstructionTrace<A> {
    pub steps: Vec<(String, A)>,
}

impl<A> Default for ConstructionTrace<A> {
    fn default() -> Self {
        ConstructionTrace { steps: Vec::new() }
    }
}

impl<A> ConstructionTrace<A> {
    /// `(label, dom, cod)` triples, rendered with the instance's `Display`.
    pub fn summary<C>(&self, cat: &C) -> Vec<(String, String, String)>
    where
        C: Bicc<Arr = A> + ?Sized,
    {
        self.steps
            .iter()
            .map(|(label, f)| (label.clone(), cat.dom(f).to_string(), cat.cod(f).to_string()))
            .collect()
    }

    pub fn find(&self, label: &str) -> Option<&A> {
        self.steps.iter().find(|(l, _)| l == label).map(|(_, f)| f)
    }
}

/// A labelled list of arrows that are all claimed to be equal.
pub type Chain<A> = Vec<(String, A)>;

/// Builds the constructions over a category, optionally recording a trace.
pub struct Builder<'c, C: Bicc + ?Sized> {
    cat: &'c C,
    trace: Option<ConstructionTrace<C::Arr>>,
}

impl<'c, C: Bicc + ?Sized> Builder<'c, C> {
    pub fn new(cat: &'c C) -> Self {
        Builder { cat, trace: None }
    }

    pub fn tracing(cat: &'c C) -> Self {
        Builder {
            cat,
            trace: Some(ConstructionTrace::default()),
        }
    }

    pub fn category(&self) -> &'c C {
        self.cat
    }

    pub fn trace(&self) -> Option<&ConstructionTrace<C::Arr>> {
        self.trace.as_ref()
    }

    pub fn into_trace(self) -> ConstructionTrace<C::Arr> {
        self.trace.unwrap_or_default()
    }

    /// Appends `f` to the trace under `label`; a no-op when not tracing.
    pub fn record(&mut self, label: &str, f: &C::Arr) {
        if let Some(trace) = self.trace.as_mut() {
            trace.steps.push((label.to_string(), f.clone()));
        }
    }

    fn noted(&mut self, label: &str, f: C::Arr) -> C::Arr {
        self.record(label, &f);
        f
    }

    fn compose_all(&self, path: &[&C::Arr]) -> Result<C::Arr> {
        crate::category::compose_path(self.cat, path)
    }

    // --- structural arrows ---------------------------------------------

    pub fn product_map(&mut self, f: &C::Arr, g: &C::Arr) -> Result<C::Arr> {
        self.cat.product_map(f, g)
    }

    pub fn swap(&mut self, x: &C::Obj, y: &C::Obj) -> Result<C::Arr> {
        let s = self.cat.swap(x, y)?;
        Ok(self.noted("swap", s))
    }

    pub fn assoc_right(&mut self, x: &C::Obj, y: &C::Obj, z: &C::Obj) -> Result<C::Arr> {
        let s = self.cat.assoc_right(x, y, z)?;
        Ok(self.noted("assoc", s))
    }

    pub fn unit_iso(&mut self, a: &C::Obj) -> Result<Iso<C::Arr>> {
        self.cat.unit_iso(a)
    }

    /// `ρ: X × (B × C) → (X × C) × B`, the regrouping in front of a
    /// curried evaluation.
    pub fn regroup_for_curried(&mut self, x: &C::Obj, b: &C::Obj, c: &C::Obj) -> Result<C::Arr> {
        let cat = self.cat;
        let bc = cat.product(b, c)?;
        let p1 = cat.proj1(x, &bc)?;
        let p2 = cat.proj2(x, &bc)?;
        let second_b = cat.compose(&cat.proj1(b, c)?, &p2)?;
        let second_c = cat.compose(&cat.proj2(b, c)?, &p2)?;
        let rho = cat.pair(&cat.pair(&p1, &second_c)?, &second_b)?;
        Ok(self.noted("ρ", rho))
    }

    /// `σ: (X × C) × B → X × (B × C)`, inverse to [`Self::regroup_for_curried`].
    pub fn regroup_for_uncurried(&mut self, x: &C::Obj, b: &C::Obj, c: &C::Obj) -> Result<C::Arr> {
        let cat = self.cat;
        let xc = cat.product(x, c)?;
        let outer1 = cat.proj1(&xc, b)?;
        let outer2 = cat.proj2(&xc, b)?;
        let first = cat.compose(&cat.proj1(x, c)?, &outer1)?;
        let second_c = cat.compose(&cat.proj2(x, c)?, &outer1)?;
        let sigma = cat.pair(&first, &cat.pair(&outer2, &second_c)?)?;
        Ok(self.noted("σ", sigma))
    }

    // --- distributivity, forward half ----------------------------------

    /// `[id_A × inj₁, id_A × inj₂]: (A×B)+(A×C) → A×(B+C)`.
    pub fn distrib_forward(&mut self, a: &C::Obj, b: &C::Obj, c: &C::Obj) -> Result<C::Arr> {
        let cat = self.cat;
        let id_a = cat.identity(a)?;
        let left = cat.product_map(&id_a, &cat.inj1(b, c)?)?;
        let left = self.noted("id×inj1", left);
        let right = cat.product_map(&id_a, &cat.inj2(b, c)?)?;
        let right = self.noted("id×inj2", right);
        let fwd = cat.copair(&left, &right)?;
        Ok(self.noted("[id×inj1, id×inj2]", fwd))
    }

    // --- currying ---------------------------------------------------------

    /// `α: A^(B×C) × C → A^B`, the transpose of `eval ∘ σ`.
    pub fn alpha(&mut self, a: &C::Obj, b: &C::Obj, c: &C::Obj) -> Result<C::Arr> {
        let cat = self.cat;
        let bc = cat.product(b, c)?;
        let exp = cat.exponential(&bc, a)?;
        let sigma = self.regroup_for_uncurried(&exp, b, c)?;
        let eval = cat.eval(&bc, a)?;
        let alpha = cat.curry(&cat.compose(&eval, &sigma)?)?;
        Ok(self.noted("α", alpha))
    }

    /// `γ: (A^B)^C → A^(B×C)`, the transpose of `eval ∘ (eval × id_B) ∘ ρ`.
    pub fn gamma(&mut self, a: &C::Obj, b: &C::Obj, c: &C::Obj) -> Result<C::Arr> {
        let cat = self.cat;
        let ab = cat.exponential(b, a)?;
        let abc = cat.exponential(c, &ab)?;
        let rho = self.regroup_for_curried(&abc, b, c)?;
        let inner = cat.product_map(&cat.eval(c, &ab)?, &cat.identity(b)?)?;
        let body = self.compose_all(&[&rho, &inner, &cat.eval(b, a)?])?;
        let gamma = cat.curry(&body)?;
        Ok(self.noted("γ", gamma))
    }

    /// `δ: A^(B×C) → (A^B)^C`, the transpose of `α`.
    pub fn delta(&mut self, a: &C::Obj, b: &C::Obj, c: &C::Obj) -> Result<C::Arr> {
        let alpha = self.alpha(a, b, c)?;
        let delta = self.cat.curry(&alpha)?;
        Ok(self.noted("δ", delta))
    }

    /// `A^(B×C) ≅ (A^B)^C` with `fwd = δ`, `bwd = γ`.
    pub fn curry_iso(&mut self, a: &C::Obj, b: &C::Obj, c: &C::Obj) -> Result<Iso<C::Arr>> {
        let delta = self.delta(a, b, c)?;
        let gamma = self.gamma(a, b, c)?;
        Ok(Iso::new(delta, gamma))
    }

    /// The two sides of each of the three transposition squares:
    /// `eval∘(α×id_B) = eval∘σ`, `eval∘(γ×id) = eval∘(eval×id_B)∘ρ`,
    /// `eval∘(δ×id_C) = α`.
    pub fn transpose_squares(&mut self, a: &C::Obj, b: &C::Obj, c: &C::Obj) -> Result<Vec<Chain<C::Arr>>> {
        let cat = self.cat;
        let parts = self.chain_parts(a, b, c)?;
        let ChainParts {
            eval1,
            eval2,
            eval3,
            alpha,
            gamma,
            delta,
            id_b,
            id_c,
            id_bc,
            rho,
            ..
        } = &parts;
        let exp_bc = cat.exponential(&cat.product(b, c)?, a)?;
        let sigma = self.regroup_for_uncurried(&exp_bc, b, c)?;
        let square2 = vec![
            ("eval∘(α×id)".to_string(), cat.compose(eval1, &cat.product_map(alpha, id_b)?)?),
            ("eval∘σ".to_string(), cat.compose(eval2, &sigma)?),
        ];
        let square3 = vec![
            ("eval∘(γ×id)".to_string(), cat.compose(eval2, &cat.product_map(gamma, id_bc)?)?),
            (
                "eval∘(eval×id)∘ρ".to_string(),
                self.compose_all(&[rho, &cat.product_map(eval3, id_b)?, eval1])?,
            ),
        ];
        let square4 = vec![
            ("eval∘(δ×id)".to_string(), cat.compose(eval3, &cat.product_map(delta, id_c)?)?),
            ("α".to_string(), alpha.clone()),
        ];
        Ok(vec![square2, square3, square4])
    }

    fn chain_parts(&mut self, a: &C::Obj, b: &C::Obj, c: &C::Obj) -> Result<ChainParts<C::Arr>> {
        let cat = self.cat;
        let bc = cat.product(b, c)?;
        let ab = cat.exponential(b, a)?;
        let abc = cat.exponential(c, &ab)?;
        let exp_bc = cat.exponential(&bc, a)?;
        let id_b = cat.identity(b)?;
        let id_c = cat.identity(c)?;
        let alpha = self.alpha(a, b, c)?;
        let delta = cat.curry(&alpha)?;
        Ok(ChainParts {
            eval1: cat.eval(b, a)?,
            eval2: cat.eval(&bc, a)?,
            eval3: cat.eval(c, &ab)?,
            gamma: self.gamma(a, b, c)?,
            alpha,
            delta,
            id_bc_split: cat.product_map(&id_b, &id_c)?,
            id_bc: cat.identity(&bc)?,
            rho: self.regroup_for_curried(&abc, b, c)?,
            rho_flat: self.regroup_for_curried(&exp_bc, b, c)?,
            id_b,
            id_c,
        })
    }

    /// The θ equations, each line an arrow `(A^B)^C × (B×C) → A` that must
    /// equal the others. The structural regrouping `ρ` stands in for the
    /// unbracketed `× id_B × id_C`.
    pub fn theta_chain(&mut self, a: &C::Obj, b: &C::Obj, c: &C::Obj) -> Result<Chain<C::Arr>> {
        let cat = self.cat;
        let p = self.chain_parts(a, b, c)?;
        let gamma_id = cat.product_map(&p.gamma, &p.id_bc)?;
        let delta_ids = cat.product_map(&p.delta, &p.id_bc_split)?;
        let eval3_id = cat.product_map(&p.eval3, &p.id_b)?;
        let collapsed = cat.product_map(
            &cat.compose(&p.eval3, &cat.product_map(&p.delta, &p.id_c)?)?,
            &p.id_b,
        )?;
        let alpha_id = cat.product_map(&p.alpha, &p.id_b)?;
        let chain = vec![
            (
                "eval₁∘(eval₃×id_B)∘(δ×id_B×id_C)∘(γ×id_{B×C})".to_string(),
                self.compose_all(&[&gamma_id, &delta_ids, &p.rho, &eval3_id, &p.eval1])?,
            ),
            (
                "eval₁∘((eval₃∘(δ×id_C))×id_B)∘(γ×id_{B×C})".to_string(),
                self.compose_all(&[&gamma_id, &p.rho_flat, &collapsed, &p.eval1])?,
            ),
            (
                "eval₁∘(α×id_B)∘(γ×id_{B×C})".to_string(),
                self.compose_all(&[&gamma_id, &p.rho_flat, &alpha_id, &p.eval1])?,
            ),
            ("eval₂∘(γ×id_{B×C})".to_string(), cat.compose(&p.eval2, &gamma_id)?),
            (
                "eval₁∘(eval₃×id_B)".to_string(),
                self.compose_all(&[&p.rho, &eval3_id, &p.eval1])?,
            ),
        ];
        for (label, f) in &chain {
            self.record(label, f);
        }
        Ok(chain)
    }

    /// The τ equations over `A^(B×C) × (B×C) → A`.
    pub fn tau_chain(&mut self, a: &C::Obj, b: &C::Obj, c: &C::Obj) -> Result<Chain<C::Arr>> {
        let cat = self.cat;
        let p = self.chain_parts(a, b, c)?;
        let gamma_id = cat.product_map(&p.gamma, &p.id_bc)?;
        let delta_ids = cat.product_map(&p.delta, &p.id_bc_split)?;
        let eval3_id = cat.product_map(&p.eval3, &p.id_b)?;
        let collapsed = cat.product_map(
            &cat.compose(&p.eval3, &cat.product_map(&p.delta, &p.id_c)?)?,
            &p.id_b,
        )?;
        let alpha_id = cat.product_map(&p.alpha, &p.id_b)?;
        let chain = vec![
            (
                "eval₂∘(γ×id_{B×C})∘(δ×id_B×id_C)".to_string(),
                self.compose_all(&[&delta_ids, &gamma_id, &p.eval2])?,
            ),
            (
                "eval₁∘(eval₃×id_B)∘(δ×id_B×id_C)".to_string(),
                self.compose_all(&[&delta_ids, &p.rho, &eval3_id, &p.eval1])?,
            ),
            (
                "eval₁∘((eval₃∘(δ×id_C))×id_B)".to_string(),
                self.compose_all(&[&p.rho_flat, &collapsed, &p.eval1])?,
            ),
            (
                "eval₁∘(α×id_B)".to_string(),
                self.compose_all(&[&p.rho_flat, &alpha_id, &p.eval1])?,
            ),
            ("eval₂".to_string(), p.eval2.clone()),
        ];
        for (label, f) in &chain {
            self.record(label, f);
        }
        Ok(chain)
    }

    // --- the adjunction --------------------------------------------------

    /// `f ↦ id_A × f`.
    pub fn product_functor_map(&mut self, a: &C::Obj, f: &C::Arr) -> Result<C::Arr> {
        let cat = self.cat;
        cat.product_map(&cat.identity(a)?, f)
    }

    /// `f: B → C ↦ Λ(f ∘ eval): B^A → C^A`.
    pub fn exp_functor_map(&mut self, a: &C::Obj, f: &C::Arr) -> Result<C::Arr> {
        let cat = self.cat;
        let body = cat.compose(f, &cat.eval(a, &cat.dom(f))?)?;
        cat.curry(&body)
    }

    /// `s: X → Y ↦ Λ(eval ∘ (id × s)): T^Y → T^X`.
    pub fn exp_precompose(&mut self, target: &C::Obj, s: &C::Arr) -> Result<C::Arr> {
        let cat = self.cat;
        let (x, y) = (cat.dom(s), cat.cod(s));
        let exp_y = cat.exponential(&y, target)?;
        let body = cat.compose(
            &cat.eval(&y, target)?,
            &cat.product_map(&cat.identity(&exp_y)?, s)?,
        )?;
        let lifted = cat.curry(&body)?;
        debug_assert!(cat.cod(&lifted) == cat.exponential(&x, target)?);
        Ok(lifted)
    }

    /// `Hom(A × B, C) → Hom(A, C^B)`.
    pub fn hom_transpose(&mut self, g: &C::Arr) -> Result<C::Arr> {
        let cat = self.cat;
        cat.product_factors(&cat.dom(g))?;
        let t = cat.curry(g)?;
        Ok(self.noted("Λg", t))
    }

    /// `Hom(A, C^B) → Hom(A × B, C)` as `eval ∘ (f × id_B)`.
    pub fn hom_untranspose_direct(&mut self, f: &C::Arr) -> Result<C::Arr> {
        let cat = self.cat;
        let (b, c) = cat.exponential_parts(&cat.cod(f))?;
        let spread = cat.product_map(f, &cat.identity(&b)?)?;
        cat.compose(&cat.eval(&b, &c)?, &spread)
    }

    /// `Hom(A, C^B) → Hom(A × B, C)` routed through the point `1 → (C^B)^A`:
    /// `eval ∘ ((≅₂ ∘ Λ(f ∘ ≅₁)) × id_{A×B}) ∘ ≅₃`.
    pub fn hom_untranspose_chain(&mut self, f: &C::Arr) -> Result<C::Arr> {
        let cat = self.cat;
        let a = cat.dom(f);
        let (b, c) = cat.exponential_parts(&cat.cod(f))?;
        let ab = cat.product(&a, &b)?;

        let unit = cat.unit_iso(&a)?;
        let iso1 = self.noted("≅₁", unit.bwd.clone());
        let point = cat.curry(&cat.compose(f, &iso1)?)?;
        let point = self.noted("Λ(f∘≅₁)", point);

        // (C^B)^A → C^(B×A) → C^(A×B)
        let uncurry = self.gamma(&c, &b, &a)?;
        let flip = self.swap(&a, &b)?;
        let reindex = self.exp_precompose(&c, &flip)?;
        let iso2 = self.noted("≅₂", cat.compose(&reindex, &uncurry)?);

        let one = cat.terminal();
        let tuck = cat.product_map(&unit.fwd, &cat.identity(&b)?)?;
        let reassoc = self.assoc_right(&one, &a, &b)?;
        let iso3 = self.noted("≅₃", cat.compose(&reassoc, &tuck)?);

        let lifted = cat.product_map(&cat.compose(&iso2, &point)?, &cat.identity(&ab)?)?;
        let lifted = self.noted("(≅₂∘Λ(f∘≅₁))×id", lifted);
        let eval = self.noted("eval", cat.eval(&ab, &c)?);
        let theta = self.compose_all(&[&iso3, &lifted, &eval])?;
        Ok(self.noted("θ", theta))
    }

    // --- distributivity, backward half ---------------------------------

    /// The copairing out of `A × (B + C)` for a cocone `q₁: A×B → D`,
    /// `q₂: A×C → D`: `θ(r) = eval ∘ (r × id_A) ∘ swap` with
    /// `r = [Λ(q₁∘swap), Λ(q₂∘swap)]: B + C → D^A`.
    pub fn mediator(&mut self, q1: &C::Arr, q2: &C::Arr) -> Result<C::Arr> {
        let cat = self.cat;
        let (a, b) = cat.product_factors(&cat.dom(q1))?;
        let (a2, c) = cat.product_factors(&cat.dom(q2))?;
        if a != a2 {
            return Err(mismatch("mediator", &a, &a2));
        }
        let d = cat.cod(q1);
        if cat.cod(q2) != d {
            return Err(mismatch("mediator codomain", &d, cat.cod(q2)));
        }
        let plan = MediatorPlan::new(cat, &a, &b, &c, &d)?;
        if self.trace.is_none() {
            return plan.apply(cat, q1, q2);
        }
        let (r, med) = plan.apply_parts(cat, q1, q2)?;
        self.record("swap", &plan.swap_outer);
        self.record("r", &r);
        Ok(self.noted("θ(r)", med))
    }

    /// `A×(B+C) → (A×B)+(A×C)`: the mediator of the cocone of injections.
    pub fn distrib_backward(&mut self, a: &C::Obj, b: &C::Obj, c: &C::Obj) -> Result<C::Arr> {
        let cat = self.cat;
        let ab = cat.product(a, b)?;
        let ac = cat.product(a, c)?;
        let q1 = self.noted("inj1", cat.inj1(&ab, &ac)?);
        let q2 = self.noted("inj2", cat.inj2(&ab, &ac)?);
        self.mediator(&q1, &q2)
    }

    /// `(A×B)+(A×C) ≅ A×(B+C)`.
    pub fn distrib_iso(&mut self, a: &C::Obj, b: &C::Obj, c: &C::Obj) -> Result<Iso<C::Arr>> {
        let fwd = self.distrib_forward(a, b, c)?;
        let bwd = self.distrib_backward(a, b, c)?;
        Ok(Iso::new(fwd, bwd))
    }
}

struct ChainParts<A> {
    eval1: A,
    eval2: A,
    eval3: A,
    alpha: A,
    gamma: A,
    delta: A,
    id_b: A,
    id_c: A,
    id_bc: A,
    id_bc_split: A,
    rho: A,
    rho_flat: A,
}

/// The cocone-independent arrows of [`Builder::mediator`] for fixed
/// `A, B, C, D`, so that many cocones can share them.
#[derive(Debug, Clone)]
pub struct MediatorPlan<A> {
    swap_b: A,
    swap_c: A,
    swap_outer: A,
    proj_r: A,
    proj_a: A,
    eval: A,
}

impl<A: Clone> MediatorPlan<A> {
    pub fn new<C>(cat: &C, a: &C::Obj, b: &C::Obj, c: &C::Obj, d: &C::Obj) -> Result<Self>
    where
        C: Bicc<Arr = A> + ?Sized,
    {
        let bc = cat.coproduct(b, c)?;
        // r × id_A = ⟨r ∘ π₁, id_A ∘ π₂⟩ over (B+C) × A
        let proj_a = cat.compose(&cat.identity(a)?, &cat.proj2(&bc, a)?)?;
        Ok(MediatorPlan {
            swap_b: cat.swap(b, a)?,
            swap_c: cat.swap(c, a)?,
            swap_outer: cat.swap(a, &bc)?,
            proj_r: cat.proj1(&bc, a)?,
            proj_a,
            eval: cat.eval(a, d)?,
        })
    }

    pub fn apply<C>(&self, cat: &C, q1: &A, q2: &A) -> Result<A>
    where
        C: Bicc<Arr = A> + ?Sized,
    {
        self.apply_parts(cat, q1, q2).map(|(_, m)| m)
    }

    /// Returns `(r, θ(r))`.
    pub fn apply_parts<C>(&self, cat: &C, q1: &A, q2: &A) -> Result<(A, A)>
    where
        C: Bicc<Arr = A> + ?Sized,
    {
        let t1 = cat.curry(&cat.compose(q1, &self.swap_b)?)?;
        let t2 = cat.curry(&cat.compose(q2, &self.swap_c)?)?;
        let r = cat.copair(&t1, &t2)?;
        let r_times_id = cat.pair(&cat.compose(&r, &self.proj_r)?, &self.proj_a)?;
        let med = cat.compose(&cat.compose(&self.eval, &r_times_id)?, &self.swap_outer)?;
        Ok((r, med))
    }
}

/// `[id × inj₁, id × inj₂]`.
pub fn distrib_forward<C: Bicc + ?Sized>(cat: &C, a: &C::Obj, b: &C::Obj, c: &C::Obj) -> Result<C::Arr> {
    Builder::new(cat).distrib_forward(a, b, c)
}

pub fn distrib_backward<C: Bicc + ?Sized>(cat: &C, a: &C::Obj, b: &C::Obj, c: &C::Obj) -> Result<C::Arr> {
    Builder::new(cat).distrib_backward(a, b, c)
}

pub fn distrib_iso<C: Bicc + ?Sized>(cat: &C, a: &C::Obj, b: &C::Obj, c: &C::Obj) -> Result<Iso<C::Arr>> {
    Builder::new(cat).distrib_iso(a, b, c)
}

pub fn curry_iso<C: Bicc + ?Sized>(cat: &C, a: &C::Obj, b: &C::Obj, c: &C::Obj) -> Result<Iso<C::Arr>> {
    Builder::new(cat).curry_iso(a, b, c)
}

pub fn mediator<C: Bicc + ?Sized>(cat: &C, q1: &C::Arr, q2: &C::Arr) -> Result<C::Arr> {
    Builder::new(cat).mediator(q1, q2)
}
