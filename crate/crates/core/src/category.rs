//! The bicartesian closed signature every instance implements, plus the
//! structural arrows (product of arrows, swap, associativity, unit) that the
//! constructions insert wherever products are silently re-bracketed.
//!
//! Conventions fixed here and used everywhere:
//!
//! * `exponential(base, target)` is `target^base`;
//! * `eval(base, target): target^base × base → target`;
//! * `curry(f)` for `f: A × B → C` transposes over the *second* factor and
//!   yields `A → C^B`.

use std::fmt;

use crate::error::{mismatch, CatError, Result};

/// A category with chosen finite products, finite coproducts and exponentials.
///
/// Arrow equality is a decision procedure supplied by the instance; nothing in
/// the kernel looks at arrow payloads.
pub trait Bicc {
    type Obj: Clone + fmt::Debug + fmt::Display + PartialEq + Send + Sync;
    type Arr: Clone + fmt::Debug + Send + Sync;

    fn dom(&self, f: &Self::Arr) -> Self::Obj;
    fn cod(&self, f: &Self::Arr) -> Self::Obj;

    fn identity(&self, x: &Self::Obj) -> Result<Self::Arr>;
    /// `g ∘ f`; fails unless `cod(f) = dom(g)`.
    fn compose(&self, g: &Self::Arr, f: &Self::Arr) -> Result<Self::Arr>;
    /// Arrows with different boundaries are never equal.
    fn arrows_equal(&self, f: &Self::Arr, g: &Self::Arr) -> Result<bool>;

    fn terminal(&self) -> Self::Obj;
    fn bang(&self, x: &Self::Obj) -> Result<Self::Arr>;
    fn product(&self, x: &Self::Obj, y: &Self::Obj) -> Result<Self::Obj>;
    fn proj1(&self, x: &Self::Obj, y: &Self::Obj) -> Result<Self::Arr>;
    fn proj2(&self, x: &Self::Obj, y: &Self::Obj) -> Result<Self::Arr>;
    fn pair(&self, f: &Self::Arr, g: &Self::Arr) -> Result<Self::Arr>;

    fn initial(&self) -> Self::Obj;
    fn absurd(&self, x: &Self::Obj) -> Result<Self::Arr>;
    fn coproduct(&self, x: &Self::Obj, y: &Self::Obj) -> Result<Self::Obj>;
    fn inj1(&self, x: &Self::Obj, y: &Self::Obj) -> Result<Self::Arr>;
    fn inj2(&self, x: &Self::Obj, y: &Self::Obj) -> Result<Self::Arr>;
    fn copair(&self, f: &Self::Arr, g: &Self::Arr) -> Result<Self::Arr>;

    fn exponential(&self, base: &Self::Obj, target: &Self::Obj) -> Result<Self::Obj>;
    fn eval(&self, base: &Self::Obj, target: &Self::Obj) -> Result<Self::Arr>;
    fn curry(&self, f: &Self::Arr) -> Result<Self::Arr>;

    /// Recovers `(X, Y)` from an object built as `X × Y`.
    fn split_product(&self, x: &Self::Obj) -> Option<(Self::Obj, Self::Obj)>;
    /// Recovers `(X, Y)` from an object built as `X + Y`.
    fn split_coproduct(&self, x: &Self::Obj) -> Option<(Self::Obj, Self::Obj)>;
    /// Recovers `(base, target)` from an object built as `target^base`.
    fn split_exponential(&self, x: &Self::Obj) -> Option<(Self::Obj, Self::Obj)>;
}

/// A pair of arrows claimed to be mutually inverse.
#[derive(Debug, Clone)]
pub struct Iso<A> {
    pub fwd: A,
    pub bwd: A,
}

impl<A: Clone> Iso<A> {
    pub fn new(fwd: A, bwd: A) -> Self {
        Iso { fwd, bwd }
    }

    pub fn inverse(&self) -> Self {
        Iso {
            fwd: self.bwd.clone(),
            bwd: self.fwd.clone(),
        }
    }
}

/// Outcome of checking both composites of an [`Iso`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IsoCheck {
    /// `bwd ∘ fwd = id`
    pub bwd_after_fwd: bool,
    /// `fwd ∘ bwd = id`
    pub fwd_after_bwd: bool,
}

impl IsoCheck {
    pub fn holds(&self) -> bool {
        self.bwd_after_fwd && self.fwd_after_bwd
    }
}

pub fn check_iso<C: Bicc + ?Sized>(cat: &C, iso: &Iso<C::Arr>) -> Result<IsoCheck> {
    let (x, y) = (cat.dom(&iso.fwd), cat.cod(&iso.fwd));
    if cat.dom(&iso.bwd) != y || cat.cod(&iso.bwd) != x {
        return Err(mismatch(
            "iso",
            format!("{y} -> {x}"),
            format!("{} -> {}", cat.dom(&iso.bwd), cat.cod(&iso.bwd)),
        ));
    }
    let there_and_back = cat.compose(&iso.bwd, &iso.fwd)?;
    let back_and_there = cat.compose(&iso.fwd, &iso.bwd)?;
    Ok(IsoCheck {
        bwd_after_fwd: cat.arrows_equal(&there_and_back, &cat.identity(&x)?)?,
        fwd_after_bwd: cat.arrows_equal(&back_and_there, &cat.identity(&y)?)?,
    })
}

/// Composes a path given in diagrammatic order: `path[0]` is applied first.
pub fn compose_path<C: Bicc + ?Sized>(cat: &C, path: &[&C::Arr]) -> Result<C::Arr> {
    let (first, rest) = path
        .split_first()
        .ok_or_else(|| mismatch("compose_path", "a nonempty path", "an empty path"))?;
    rest.iter()
        .try_fold((*first).clone(), |acc, next| cat.compose(next, &acc))
}

/// Whether two paths with the same endpoints compose to equal arrows.
pub fn commutes<C: Bicc + ?Sized>(cat: &C, lhs: &[&C::Arr], rhs: &[&C::Arr]) -> Result<bool> {
    let l = compose_path(cat, lhs)?;
    let r = compose_path(cat, rhs)?;
    cat.arrows_equal(&l, &r)
}

/// Structural arrows available in every bicartesian closed category.
pub trait Structural: Bicc {
    /// `f × g = ⟨f ∘ π₁, g ∘ π₂⟩`.
    fn product_map(&self, f: &Self::Arr, g: &Self::Arr) -> Result<Self::Arr> {
        let (x, y) = (self.dom(f), self.dom(g));
        let left = self.compose(f, &self.proj1(&x, &y)?)?;
        let right = self.compose(g, &self.proj2(&x, &y)?)?;
        self.pair(&left, &right)
    }

    /// `X × Y → Y × X`.
    fn swap(&self, x: &Self::Obj, y: &Self::Obj) -> Result<Self::Arr> {
        self.pair(&self.proj2(x, y)?, &self.proj1(x, y)?)
    }

    /// `(X × Y) × Z → X × (Y × Z)`.
    fn assoc_right(&self, x: &Self::Obj, y: &Self::Obj, z: &Self::Obj) -> Result<Self::Arr> {
        let xy = self.product(x, y)?;
        let outer1 = self.proj1(&xy, z)?;
        let outer2 = self.proj2(&xy, z)?;
        let first = self.compose(&self.proj1(x, y)?, &outer1)?;
        let second = self.compose(&self.proj2(x, y)?, &outer1)?;
        self.pair(&first, &self.pair(&second, &outer2)?)
    }

    /// `X × (Y × Z) → (X × Y) × Z`.
    fn assoc_left(&self, x: &Self::Obj, y: &Self::Obj, z: &Self::Obj) -> Result<Self::Arr> {
        let yz = self.product(y, z)?;
        let outer1 = self.proj1(x, &yz)?;
        let outer2 = self.proj2(x, &yz)?;
        let second = self.compose(&self.proj1(y, z)?, &outer2)?;
        let third = self.compose(&self.proj2(y, z)?, &outer2)?;
        self.pair(&self.pair(&outer1, &second)?, &third)
    }

    /// `A ≅ 1 × A` with `fwd = ⟨!, id⟩` and `bwd = π₂`.
    fn unit_iso(&self, a: &Self::Obj) -> Result<Iso<Self::Arr>> {
        let one = self.terminal();
        let fwd = self.pair(&self.bang(a)?, &self.identity(a)?)?;
        let bwd = self.proj2(&one, a)?;
        Ok(Iso::new(fwd, bwd))
    }

    /// Splits `dom(f)` as a product or reports which object was not one.
    fn product_factors(&self, x: &Self::Obj) -> Result<(Self::Obj, Self::Obj)> {
        self.split_product(x)
            .ok_or_else(|| CatError::NotAProduct(x.to_string()))
    }

    fn exponential_parts(&self, x: &Self::Obj) -> Result<(Self::Obj, Self::Obj)> {
        self.split_exponential(x)
            .ok_or_else(|| CatError::NotAnExponential(x.to_string()))
    }

    fn coproduct_summands(&self, x: &Self::Obj) -> Result<(Self::Obj, Self::Obj)> {
        self.split_coproduct(x)
            .ok_or_else(|| CatError::NotACoproduct(x.to_string()))
    }
}

impl<C: Bicc + ?Sized> Structural for C {}
