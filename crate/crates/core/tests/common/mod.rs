//! Brute-force oracles over plain index arithmetic. Nothing here calls the
//! categorical combinators or the library's encoding helpers.

#![allow(dead_code)]

use bicc::{FinSet, FinSetObj, FunTable};

pub fn set(name: &str, n: usize) -> FinSetObj {
    FinSetObj::base(name, n)
}

pub fn pow(radix: usize, n: usize) -> usize {
    (0..n).fold(1, |acc, _| acc * radix)
}

/// Digits of `code` in base `radix`, most significant first.
pub fn digits(mut code: usize, len: usize, radix: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for i in (0..len).rev() {
        out[i] = code % radix;
        code /= radix;
    }
    out
}

pub fn undigits(ds: &[usize], radix: usize) -> usize {
    let mut code = 0;
    for &d in ds {
        code = code * radix + d;
    }
    code
}

/// `α(g, c) = b ↦ g(b, c)` on codes.
pub fn alpha_oracle(na: usize, nb: usize, nc: usize) -> Vec<usize> {
    let mut out = Vec::new();
    for g in 0..pow(na, nb * nc) {
        let table = digits(g, nb * nc, na);
        for c in 0..nc {
            let partial: Vec<usize> = (0..nb).map(|b| table[b * nc + c]).collect();
            out.push(undigits(&partial, na));
        }
    }
    out
}

/// `γ(h) = (b, c) ↦ h(c)(b)`.
pub fn gamma_oracle(na: usize, nb: usize, nc: usize) -> Vec<usize> {
    let inner = pow(na, nb);
    (0..pow(inner, nc))
        .map(|h| {
            let outer = digits(h, nc, inner);
            let mut table = Vec::with_capacity(nb * nc);
            for b in 0..nb {
                for &hc in &outer {
                    table.push(digits(hc, nb, na)[b]);
                }
            }
            undigits(&table, na)
        })
        .collect()
}

/// `δ(g) = c ↦ (b ↦ g(b, c))`.
pub fn delta_oracle(na: usize, nb: usize, nc: usize) -> Vec<usize> {
    let inner = pow(na, nb);
    (0..pow(na, nb * nc))
        .map(|g| {
            let table = digits(g, nb * nc, na);
            let outer: Vec<usize> = (0..nc)
                .map(|c| undigits(&(0..nb).map(|b| table[b * nc + c]).collect::<Vec<_>>(), na))
                .collect();
            undigits(&outer, inner)
        })
        .collect()
}

/// `(a, inl b) ↦ inl (a, b)`, `(a, inr c) ↦ inr (a, c)`.
pub fn distrib_backward_oracle(na: usize, nb: usize, nc: usize) -> Vec<usize> {
    let mut out = Vec::new();
    for a in 0..na {
        for s in 0..nb + nc {
            out.push(if s < nb { a * nb + s } else { na * nb + a * nc + (s - nb) });
        }
    }
    out
}

/// Table of `f ∘ g` for raw tables.
pub fn after(f: &[usize], g: &[usize]) -> Vec<usize> {
    g.iter().map(|&i| f[i]).collect()
}

pub fn is_identity(t: &FunTable) -> bool {
    t.dom() == t.cod() && t.map().iter().enumerate().all(|(i, &v)| i == v)
}

pub fn random(fs: &FinSet, x: &FinSetObj, y: &FinSetObj, seed: u64) -> FunTable {
    fs.random_arrow(x, y, seed).unwrap()
}
