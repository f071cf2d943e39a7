//! Plain dot renderings of the five construction diagrams.

use std::fmt::Write;

use bicc::{Bicc, Builder, FinSet, FinSetObj, Structural, Terms, TypeExpr};

/// Nodes in first-appearance order and labelled edges between them.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Diagram {
    pub name: String,
    pub nodes: Vec<String>,
    pub edges: Vec<(usize, usize, String)>,
}

impl Diagram {
    fn node(&mut self, label: String) -> usize {
        match self.nodes.iter().position(|n| *n == label) {
            Some(i) => i,
            None => {
                self.nodes.push(label);
                self.nodes.len() - 1
            }
        }
    }

    fn edge(&mut self, from: String, to: String, label: &str) {
        let (i, j) = (self.node(from), self.node(to));
        self.edges.push((i, j, label.to_string()));
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        writeln!(out, "digraph {} {{", self.name).unwrap();
        for (i, n) in self.nodes.iter().enumerate() {
            writeln!(out, "  n{i} [label={}];", quote(n)).unwrap();
        }
        for (i, j, l) in &self.edges {
            writeln!(out, "  n{i} -> n{j} [label={}];", quote(l)).unwrap();
        }
        out.push_str("}\n");
        out
    }
}

fn quote(s: &str) -> String {
    let mut q = String::with_capacity(s.len() + 2);
    q.push('"');
    for ch in s.chars() {
        match ch {
            '"' => q.push_str("\\\""),
            '\\' => q.push_str("\\\\"),
            '\n' => q.push_str("\\n"),
            c => q.push(c),
        }
    }
    q.push('"');
    q
}

/// Records typed arrows as edges, naming nodes by `show(object)`.
struct Drawing<'c, C: Bicc> {
    cat: &'c C,
    show: fn(&C::Obj) -> String,
    diagram: Diagram,
}

impl<'c, C: Bicc> Drawing<'c, C> {
    fn new(cat: &'c C, id: u8, show: fn(&C::Obj) -> String) -> Self {
        Drawing {
            cat,
            show,
            diagram: Diagram {
                name: format!("diagram{id}"),
                ..Diagram::default()
            },
        }
    }

    fn arrow(&mut self, label: &str, f: &C::Arr) {
        let (d, c) = ((self.show)(&self.cat.dom(f)), (self.show)(&self.cat.cod(f)));
        self.diagram.edge(d, c, label);
    }
}

fn build<C: Bicc>(cat: &C, id: u8, objs: [&C::Obj; 3], show: fn(&C::Obj) -> String) -> bicc::Result<Diagram> {
    let [a, b, c] = objs;
    let mut dr = Drawing::new(cat, id, show);
    match id {
        1 => {
            let mut bld = Builder::tracing(cat);
            bld.distrib_forward(a, b, c)?;
            let trace = bld.into_trace();
            let (ab, ac) = (cat.product(a, b)?, cat.product(a, c)?);
            let bc = cat.coproduct(b, c)?;
            dr.arrow("inj1", &cat.inj1(&ab, &ac)?);
            dr.arrow("inj2", &cat.inj2(&ab, &ac)?);
            for (label, f) in &trace.steps {
                dr.arrow(label, f);
            }
            dr.arrow("π1", &cat.proj1(a, &bc)?);
            dr.arrow("π2", &cat.proj2(a, &bc)?);
        }
        2 => {
            let mut bld = Builder::new(cat);
            let bc = cat.product(b, c)?;
            let x = cat.exponential(&bc, a)?;
            let alpha = bld.alpha(a, b, c)?;
            let sigma = bld.regroup_for_uncurried(&x, b, c)?;
            dr.arrow("α×id_B", &cat.product_map(&alpha, &cat.identity(b)?)?);
            dr.arrow("eval", &cat.eval(b, a)?);
            dr.arrow("σ", &sigma);
            dr.arrow("eval", &cat.eval(&bc, a)?);
        }
        3 => {
            let mut bld = Builder::new(cat);
            let bc = cat.product(b, c)?;
            let ab = cat.exponential(b, a)?;
            let abc = cat.exponential(c, &ab)?;
            let gamma = bld.gamma(a, b, c)?;
            let rho = bld.regroup_for_curried(&abc, b, c)?;
            dr.arrow("γ×id_{B×C}", &cat.product_map(&gamma, &cat.identity(&bc)?)?);
            dr.arrow("eval", &cat.eval(&bc, a)?);
            dr.arrow("ρ", &rho);
            dr.arrow("eval×id_B", &cat.product_map(&cat.eval(c, &ab)?, &cat.identity(b)?)?);
            dr.arrow("eval", &cat.eval(b, a)?);
        }
        4 => {
            let mut bld = Builder::new(cat);
            let ab = cat.exponential(b, a)?;
            let delta = bld.delta(a, b, c)?;
            let alpha = bld.alpha(a, b, c)?;
            dr.arrow("δ×id_C", &cat.product_map(&delta, &cat.identity(c)?)?);
            dr.arrow("eval", &cat.eval(c, &ab)?);
            dr.arrow("α", &alpha);
        }
        5 => {
            // f = id_{C^B}, so the transposed object is A := C^B
            let cb = cat.exponential(b, c)?;
            let f = cat.identity(&cb)?;
            let mut bld = Builder::tracing(cat);
            bld.hom_untranspose_chain(&f)?;
            let trace = bld.into_trace();
            dr.arrow("f", &f);
            for label in ["≅₁", "Λ(f∘≅₁)", "≅₂", "≅₃", "(≅₂∘Λ(f∘≅₁))×id", "eval", "θ"] {
                if let Some(g) = trace.find(label) {
                    dr.arrow(label, g);
                }
            }
        }
        _ => unreachable!("diagram ids are checked by the caller"),
    }
    Ok(dr.diagram)
}

pub const DIAGRAMS: std::ops::RangeInclusive<u8> = 1..=5;

/// Symbolic rendering over base types `A, B, C`.
pub fn symbolic(id: u8) -> bicc::Result<Diagram> {
    let (a, b, c) = (TypeExpr::base("A"), TypeExpr::base("B"), TypeExpr::base("C"));
    build(&Terms::default(), id, [&a, &b, &c], |t: &TypeExpr| t.to_string())
}

/// Rendering in finite sets, nodes labelled with their sizes.
pub fn finset(id: u8, sizes: [usize; 3]) -> bicc::Result<Diagram> {
    let [a, b, c] = [("A", sizes[0]), ("B", sizes[1]), ("C", sizes[2])].map(|(n, s)| FinSetObj::base(n, s));
    build(&FinSet::new(), id, [&a, &b, &c], |x: &FinSetObj| format!("{x} [{}]", x.size()))
}
