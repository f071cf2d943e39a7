//! Parsing of command-line parameters and input files.

use std::fs;
use std::path::Path;

use bicc::finset::SetsJson;
use bicc::heyting::{build_divisor_lattice, build_downset_lattice, LatticeError, LatticeJson, PosetJson};
use bicc::terms::parse_type;
use bicc::{FinSetObj, FiniteLattice, Heyting, LatObj, TypeExpr};
use serde_json::{json, Value};

/// Invalid input. `witness` carries structured detail such as a failing
/// adjunction triple.
#[derive(Debug, Clone, PartialEq)]
pub struct InputError {
    pub message: String,
    pub witness: Option<Value>,
}

impl InputError {
    pub fn new(message: impl Into<String>) -> Self {
        InputError {
            message: message.into(),
            witness: None,
        }
    }

    pub fn to_value(&self) -> Value {
        let mut v = json!({ "error": self.message });
        if let Some(w) = &self.witness {
            v["witness"] = w.clone();
        }
        v
    }
}

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for InputError {}

impl From<LatticeError> for InputError {
    fn from(e: LatticeError) -> Self {
        let witness = match &e {
            LatticeError::NotHeyting { a, b, c } => Some(json!({ "a": a, "b": b, "c": c })),
            _ => None,
        };
        InputError {
            message: e.to_string(),
            witness,
        }
    }
}

/// `"2,1,3"` → `[2, 1, 3]`.
pub fn parse_sizes(text: &str) -> Result<[usize; 3], InputError> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(InputError::new(format!("expected three sizes a,b,c, got {text:?}")));
    }
    let mut out = [0; 3];
    for (slot, p) in out.iter_mut().zip(&parts) {
        *slot = p
            .parse()
            .map_err(|_| InputError::new(format!("size {p:?} is not a non-negative integer")))?;
    }
    Ok(out)
}

/// `"x,y,z"` → three names.
pub fn parse_objects(text: &str) -> Result<[String; 3], InputError> {
    let parts: Vec<String> = text.split(',').map(|s| s.trim().to_string()).collect();
    match <[String; 3]>::try_from(parts) {
        Ok(names) if names.iter().all(|n| !n.is_empty()) => Ok(names),
        _ => Err(InputError::new(format!("expected three objects x,y,z, got {text:?}"))),
    }
}

fn read(path: &Path) -> Result<String, InputError> {
    fs::read_to_string(path).map_err(|e| InputError::new(format!("cannot read {}: {e}", path.display())))
}

fn json_file<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, InputError> {
    serde_json::from_str(&read(path)?).map_err(|e| InputError::new(format!("{}: {e}", path.display())))
}

/// Base sets `A, B, C` (or the named objects) from a sets file.
pub fn load_sets(path: &Path, names: Option<&[String; 3]>) -> Result<[FinSetObj; 3], InputError> {
    let file: SetsJson = json_file(path)?;
    let objects = file.objects().map_err(|e| InputError::new(e.to_string()))?;
    let default = ["A".to_string(), "B".to_string(), "C".to_string()];
    let names = names.unwrap_or(&default);
    let pick = |n: &String| {
        objects
            .get(n)
            .cloned()
            .ok_or_else(|| InputError::new(format!("{} defines no set {n:?}", path.display())))
    };
    Ok([pick(&names[0])?, pick(&names[1])?, pick(&names[2])?])
}

/// `divisors:N`, `downset:<poset file>`, or a lattice file.
pub fn load_lattice(spec: &str) -> Result<(String, FiniteLattice), InputError> {
    if let Some(n) = spec.strip_prefix("divisors:") {
        let n: u64 = n
            .parse()
            .map_err(|_| InputError::new(format!("divisors:{n} needs a positive integer")))?;
        return Ok((spec.to_string(), build_divisor_lattice(n)?));
    }
    if let Some(path) = spec.strip_prefix("downset:") {
        let poset: PosetJson = json_file(Path::new(path))?;
        return Ok((spec.to_string(), build_downset_lattice(&poset.poset()?)?));
    }
    let file: LatticeJson = json_file(Path::new(spec))?;
    Ok((spec.to_string(), file.lattice()?))
}

pub fn heyting(lattice: FiniteLattice) -> Result<Heyting, InputError> {
    Ok(Heyting::new(lattice)?)
}

pub fn lattice_objects(h: &Heyting, names: &[String; 3]) -> Result<[LatObj; 3], InputError> {
    let pick = |n: &String| {
        h.element_named(n)
            .ok_or_else(|| InputError::new(format!("the lattice has no element {n:?}")))
    };
    Ok([pick(&names[0])?, pick(&names[1])?, pick(&names[2])?])
}

pub fn type_objects(names: &[String; 3]) -> Result<[TypeExpr; 3], InputError> {
    let parse = |n: &String| parse_type(n).map_err(|e| InputError::new(format!("type {n:?}: {e}")));
    Ok([parse(&names[0])?, parse(&names[1])?, parse(&names[2])?])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(parse_sizes("2,1,3").unwrap(), [2, 1, 3]);
        assert_eq!(parse_sizes(" 0, 0 ,0").unwrap(), [0, 0, 0]);
        assert!(parse_sizes("2,1").is_err());
        assert!(parse_sizes("2,-1,3").is_err());
    }

    #[test]
    fn objects() {
        assert_eq!(parse_objects("6,10,15").unwrap(), ["6", "10", "15"].map(String::from));
        assert!(parse_objects("6,,15").is_err());
        assert!(parse_objects("6,10").is_err());
    }

    #[test]
    fn divisor_spec() {
        let (_, l) = load_lattice("divisors:30").unwrap();
        assert_eq!(l.len(), 8);
        assert!(load_lattice("divisors:x").is_err());
        assert!(load_lattice("divisors:0").is_err());
    }

    #[test]
    fn rejection_carries_triple() {
        let l = bicc::heyting::diamond_m3().lattice().unwrap();
        let err = heyting(l).unwrap_err();
        let w = err.witness.unwrap();
        assert!(w.get("a").is_some() && w.get("c").is_some());
    }
}
