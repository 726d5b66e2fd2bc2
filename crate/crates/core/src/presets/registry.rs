use serde::Serialize;

use super::{Family, MomentKind, FIXED_FAMILIES};

/// One line of the machine-readable preset list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegistryEntry {
    pub id: String,
    pub letter: char,
    pub formula: &'static str,
    /// `f` in the `--f` grammar, when it has a fixed formula.
    pub expr: Option<&'static str>,
    pub needs_lambda: bool,
    pub classical_partner: Option<String>,
}

fn entry(f: &Family) -> RegistryEntry {
    RegistryEntry {
        id: f.id(),
        letter: f.letter(),
        formula: f.formula(),
        expr: f.expr(),
        needs_lambda: f.is_degenerate(),
        classical_partner: f.classical_partner().map(|p| p.id()),
    }
}

/// Every fixed family followed by the built-in moment presets.
pub fn registry() -> Vec<RegistryEntry> {
    let mut out: Vec<RegistryEntry> = FIXED_FAMILIES.iter().map(entry).collect();
    out.push(entry(&Family::Probabilistic(MomentKind::Uniform)));
    out.push(entry(&Family::Probabilistic(MomentKind::Const(1.into()))));
    out
}

pub fn registry_json() -> String {
    serde_json::to_string_pretty(&registry()).expect("plain data serializes")
}
