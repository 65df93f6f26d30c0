//! Named fixtures stored as `<root>/<kind>/<name>.txt` in the text formats of
//! their modules. Leading `# key: value` comments carry the metadata.

use crate::curve::{curve_to_type_d, solid_torus_cfd, PLCurve};
use crate::gluing::GluingMatrix;
use crate::surgery::FilteredComplex;
use crate::type_a::TypeAStructure;
use crate::type_d::TypeDStructure;
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use thiserror::Error;

/// Framings n for which `cfd.solid-torus.framing-n` is generated on demand.
pub const SOLID_TORUS_FRAMINGS: std::ops::RangeInclusive<i64> = -4..=9;

const SOLID_PREFIX: &str = "cfd.solid-torus.framing-";

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("unknown catalog entry {0:?}")]
    UnknownEntry(String),
    #[error("entry {name:?} failed validation: {msg}")]
    Invalid { name: String, msg: String },
    #[error("reading {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Kind {
    TypeD,
    TypeA,
    Curve,
    FilteredComplex,
    Gluing,
}

impl Kind {
    pub const ALL: [Kind; 5] = [Kind::TypeD, Kind::TypeA, Kind::Curve, Kind::FilteredComplex, Kind::Gluing];

    pub fn dir(self) -> &'static str {
        match self {
            Kind::TypeD => "type_d",
            Kind::TypeA => "type_a",
            Kind::Curve => "curve",
            Kind::FilteredComplex => "filtered_complex",
            Kind::Gluing => "gluing",
        }
    }

    /// Guess the kind of a fixture file from its declarations.
    pub fn detect(text: &str) -> Option<Kind> {
        for line in text.lines() {
            let words: Vec<&str> = line.split('#').next().unwrap().split_whitespace().collect();
            match words.as_slice() {
                ["op", ..] => return Some(Kind::TypeA),
                ["component", ..] => return Some(Kind::Curve),
                ["matrix", ..] => return Some(Kind::Gluing),
                ["arrow", ..] => return Some(Kind::FilteredComplex),
                ["edge", ..] => return Some(Kind::TypeD),
                ["generator", _, "i0" | "i1"] => {}
                ["generator", _, _, _] => return Some(Kind::FilteredComplex),
                _ => {}
            }
        }
        // generators only, or nothing at all: a graph without edges
        let declared = |l: &str| !l.split('#').next().unwrap().trim().is_empty();
        let only_generators = text.lines().filter(|l| declared(l)).all(|l| l.trim_start().starts_with("generator"));
        only_generators.then_some(Kind::TypeD)
    }
}

#[derive(Debug, Clone)]
pub enum Payload {
    TypeD(TypeDStructure),
    TypeA(TypeAStructure),
    Curve(PLCurve),
    FilteredComplex(FilteredComplex),
    Gluing(GluingMatrix),
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub kind: Kind,
    pub payload: Payload,
    pub provenance: String,
    pub figure_derived: bool,
    /// Name of the check that guards a figure-derived entry.
    pub check: Option<String>,
    pub meta: BTreeMap<String, String>,
}

impl CatalogEntry {
    pub fn type_d(&self) -> Option<&TypeDStructure> {
        match &self.payload {
            Payload::TypeD(d) => Some(d),
            _ => None,
        }
    }

    pub fn type_a(&self) -> Option<&TypeAStructure> {
        match &self.payload {
            Payload::TypeA(a) => Some(a),
            _ => None,
        }
    }

    pub fn curve(&self) -> Option<&PLCurve> {
        match &self.payload {
            Payload::Curve(c) => Some(c),
            _ => None,
        }
    }

    pub fn complex(&self) -> Option<&FilteredComplex> {
        match &self.payload {
            Payload::FilteredComplex(c) => Some(c),
            _ => None,
        }
    }

    pub fn gluing(&self) -> Option<&GluingMatrix> {
        match &self.payload {
            Payload::Gluing(g) => Some(g),
            _ => None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Catalog {
    root: PathBuf,
}

impl Catalog {
    pub fn open(root: impl AsRef<Path>) -> Self {
        Catalog { root: root.as_ref().to_path_buf() }
    }

    /// The fixtures directory shipped with the source tree.
    pub fn bundled() -> Self {
        Catalog::open(concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures"))
    }

    pub fn root(&self) -> &Path {
        &self.root
    }

    pub fn list(&self) -> Vec<String> {
        let mut names = Vec::new();
        for kind in Kind::ALL {
            let Ok(dir) = std::fs::read_dir(self.root.join(kind.dir())) else { continue };
            for f in dir.flatten() {
                let p = f.path();
                if p.extension().is_some_and(|e| e == "txt") {
                    if let Some(stem) = p.file_stem().and_then(|s| s.to_str()) {
                        names.push(stem.to_string());
                    }
                }
            }
        }
        names.extend(SOLID_TORUS_FRAMINGS.map(|n| format!("{SOLID_PREFIX}{n}")));
        names.sort();
        names
    }

    pub fn load(&self, name: &str) -> Result<CatalogEntry, CatalogError> {
        if let Some(n) = name.strip_prefix(SOLID_PREFIX).and_then(|n| n.parse::<i64>().ok()) {
            if SOLID_TORUS_FRAMINGS.contains(&n) {
                let d = solid_torus_cfd(n, 1).map_err(|e| invalid(name, e))?;
                return Ok(CatalogEntry {
                    name: name.to_string(),
                    kind: Kind::TypeD,
                    payload: Payload::TypeD(d),
                    provenance: format!("solid torus whose meridian is glued to slope {n}, read off the filling line"),
                    figure_derived: false,
                    check: None,
                    meta: BTreeMap::new(),
                });
            }
        }
        for kind in Kind::ALL {
            let path = self.root.join(kind.dir()).join(format!("{name}.txt"));
            if path.is_file() {
                let text = std::fs::read_to_string(&path).map_err(|source| CatalogError::Io { path, source })?;
                return parse_entry(name, kind, &text);
            }
        }
        Err(CatalogError::UnknownEntry(name.to_string()))
    }

    /// `arg` is a file path if one exists, otherwise an entry name.
    pub fn resolve(&self, arg: &str) -> Result<CatalogEntry, CatalogError> {
        let path = Path::new(arg);
        if path.is_file() {
            load_file(path)
        } else {
            self.load(arg)
        }
    }

    pub fn load_type_d(&self, name: &str) -> Result<TypeDStructure, CatalogError> {
        self.load(name)?.type_d().cloned().ok_or_else(|| invalid(name, "not a type D entry"))
    }

    pub fn load_type_a(&self, name: &str) -> Result<TypeAStructure, CatalogError> {
        self.load(name)?.type_a().cloned().ok_or_else(|| invalid(name, "not a type A entry"))
    }

    pub fn load_complex(&self, name: &str) -> Result<FilteredComplex, CatalogError> {
        self.load(name)?.complex().cloned().ok_or_else(|| invalid(name, "not a filtered complex"))
    }

    pub fn load_curve(&self, name: &str) -> Result<PLCurve, CatalogError> {
        self.load(name)?.curve().cloned().ok_or_else(|| invalid(name, "not a curve"))
    }

    pub fn load_gluing(&self, name: &str) -> Result<GluingMatrix, CatalogError> {
        self.load(name)?.gluing().copied().ok_or_else(|| invalid(name, "not a gluing"))
    }
}

/// Load a fixture file outside any catalog, detecting its kind.
pub fn load_file(path: &Path) -> Result<CatalogEntry, CatalogError> {
    let text = std::fs::read_to_string(path).map_err(|source| CatalogError::Io { path: path.to_path_buf(), source })?;
    let name = path.file_stem().and_then(|s| s.to_str()).unwrap_or("input").to_string();
    let kind = Kind::detect(&text).ok_or_else(|| invalid(&name, "no declarations found"))?;
    parse_entry(&name, kind, &text)
}

fn invalid(name: &str, msg: impl ToString) -> CatalogError {
    CatalogError::Invalid { name: name.to_string(), msg: msg.to_string() }
}

fn parse_entry(name: &str, kind: Kind, text: &str) -> Result<CatalogEntry, CatalogError> {
    let mut meta = BTreeMap::new();
    for line in text.lines() {
        let Some(c) = line.trim().strip_prefix('#') else { break };
        if let Some((k, v)) = c.split_once(':') {
            meta.insert(k.trim().to_string(), v.trim().to_string());
        }
    }
    let payload = match kind {
        Kind::TypeD => {
            let (d, _) = TypeDStructure::parse(text).map_err(|e| invalid(name, e))?;
            let diag = d.validate();
            if !diag.is_valid() {
                return Err(invalid(name, format!("{diag:?}")));
            }
            if let Some(b) = meta.get("bounded") {
                if (b == "yes") != d.is_bounded() {
                    return Err(invalid(name, format!("header says bounded: {b}")));
                }
            }
            Payload::TypeD(d)
        }
        Kind::TypeA => {
            let a = TypeAStructure::parse(text).map_err(|e| invalid(name, e))?;
            let bad = a.a_infinity_violations(4);
            if !bad.is_empty() {
                return Err(invalid(name, format!("A∞ relations fail: {bad:?}")));
            }
            Payload::TypeA(a)
        }
        Kind::Curve => {
            let c = PLCurve::parse(text).map_err(|e| invalid(name, e))?;
            curve_to_type_d(&c).map_err(|e| invalid(name, e))?;
            Payload::Curve(c)
        }
        Kind::FilteredComplex => Payload::FilteredComplex(FilteredComplex::parse(text).map_err(|e| invalid(name, e))?),
        Kind::Gluing => {
            let body = text
                .lines()
                .map(|l| l.split('#').next().unwrap().trim())
                .find(|l| !l.is_empty())
                .ok_or_else(|| invalid(name, "empty gluing file"))?;
            let m = body.strip_prefix("matrix").ok_or_else(|| invalid(name, "expected `matrix q,r,p,s`"))?;
            Payload::Gluing(m.trim().parse().map_err(|e| invalid(name, e))?)
        }
    };
    Ok(CatalogEntry {
        name: name.to_string(),
        kind,
        payload,
        provenance: meta.get("provenance").cloned().unwrap_or_default(),
        figure_derived: meta.get("figure-derived").is_some_and(|v| v == "yes"),
        check: meta.get("check").cloned(),
        meta,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_loads() {
        let cat = Catalog::bundled();
        let names = cat.list();
        assert!(names.len() > 20);
        for n in &names {
            cat.load(n).unwrap_or_else(|e| panic!("{n}: {e}"));
        }
    }

    #[test]
    fn listed_names() {
        let names = Catalog::bundled().list();
        for n in ["cfk.staircase.T2-3", "cfk.staircase.T2-5", "gluing.prototype.slope2", "cfd.solid-torus.framing-3"] {
            assert!(names.iter().any(|x| x == n), "{n}");
        }
        assert_eq!(Catalog::bundled().load_gluing("gluing.prototype.slope2").unwrap(), GluingMatrix::prototype());
    }

    #[test]
    fn unknown_entry() {
        assert!(matches!(Catalog::bundled().load("cfd.figure-eight"), Err(CatalogError::UnknownEntry(_))));
        assert!(matches!(
            Catalog::bundled().load("cfd.solid-torus.framing-100"),
            Err(CatalogError::UnknownEntry(_))
        ));
    }

    #[test]
    fn kinds_are_detected() {
        let cat = Catalog::bundled();
        for kind in Kind::ALL {
            for f in std::fs::read_dir(cat.root().join(kind.dir())).unwrap().flatten() {
                let text = std::fs::read_to_string(f.path()).unwrap();
                assert_eq!(Kind::detect(&text), Some(kind), "{:?}", f.path());
            }
        }
        assert_eq!(Kind::detect("generator a i0\n"), Some(Kind::TypeD));
        assert_eq!(Kind::detect("# nothing\n"), Some(Kind::TypeD));
        assert_eq!(Kind::detect("frobnicate\n"), None);
    }

    #[test]
    fn figure_derived_entries_name_a_check() {
        let cat = Catalog::bundled();
        for n in cat.list() {
            let e = cat.load(&n).unwrap();
            if e.figure_derived {
                assert!(e.check.is_some(), "{n}");
            }
        }
    }
}
