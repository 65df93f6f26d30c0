//! Type A structures as finite tables of A∞ operations m_{k+1}, and the
//! conversion from loop-type decorated graphs.

use crate::grading_group::{CosetGrading, GradingElement};
use crate::torus_algebra::{AlgebraElement, ChordSequence, Idem, CHORDS};
use crate::type_d::{
    choose_root, count_classes, cyclic_generator, parse_generator_line, propagate, Generator,
    TypeDError, TypeDStructure,
};
use std::collections::BTreeMap;
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TypeAError {
    #[error("generator {0:?} has valence greater than two")]
    NotLoopType(String),
    #[error("graph still has ∅-edges; run edge reduction first")]
    NotReduced,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Graph(#[from] TypeDError),
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Operation {
    pub input: String,
    pub chords: ChordSequence,
    pub output: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TypeAStructure {
    pub generators: Vec<Generator>,
    pub operations: Vec<Operation>,
}

/// Which directed paths feed the conversion. Cyclic graphs such as the
/// horizontal loop need repeated edges to produce their higher operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathBound {
    NoRepeatedEdge,
    MaxLength(usize),
}

const BLOCKS: [&str; 6] = ["1", "2", "3", "12", "23", "123"];

/// All segmentations of `s` into chord blocks that compose as quiver paths and
/// start/end at the given idempotents; returns those of minimal length.
fn regroupings(s: &str, start: Idem, end: Idem) -> Vec<Vec<AlgebraElement>> {
    fn rec(s: &str, i: usize, acc: &mut Vec<AlgebraElement>, out: &mut Vec<Vec<AlgebraElement>>) {
        if i == s.len() {
            out.push(acc.clone());
            return;
        }
        for b in BLOCKS {
            if s[i..].starts_with(b) {
                let c = AlgebraElement::from_digits(b).unwrap();
                if let Some(prev) = acc.last() {
                    if prev.right_idem() != c.left_idem() {
                        continue;
                    }
                }
                acc.push(c);
                rec(s, i + b.len(), acc, out);
                acc.pop();
            }
        }
    }
    let mut all = Vec::new();
    rec(s, 0, &mut Vec::new(), &mut all);
    all.retain(|v| {
        v.first().and_then(|c| c.left_idem()) == Some(start)
            && v.last().and_then(|c| c.right_idem()) == Some(end)
    });
    let Some(k) = all.iter().map(|v| v.len()).min() else {
        return all;
    };
    all.retain(|v| v.len() == k);
    all
}

impl TypeAStructure {
    pub fn idem_of(&self, name: &str) -> Option<Idem> {
        self.generators.iter().find(|g| g.name == name).map(|g| g.idem)
    }

    pub fn idem_map(&self) -> BTreeMap<String, Idem> {
        self.generators.iter().map(|g| (g.name.clone(), g.idem)).collect()
    }

    /// The 1↔3 conversion over paths that never reuse a directed edge.
    /// Diagnostics list paths with ambiguous regroupings.
    pub fn from_type_d(d: &TypeDStructure) -> Result<(TypeAStructure, Vec<String>), TypeAError> {
        TypeAStructure::from_type_d_with(d, PathBound::NoRepeatedEdge)
    }

    pub fn from_type_d_with(
        d: &TypeDStructure,
        bound: PathBound,
    ) -> Result<(TypeAStructure, Vec<String>), TypeAError> {
        d.is_loop_type().map_err(|e| match e {
            TypeDError::NotLoopType(n) => TypeAError::NotLoopType(n),
            e => TypeAError::Graph(e),
        })?;
        if !d.is_reduced() {
            return Err(TypeAError::NotReduced);
        }
        let mut ops = Vec::new();
        let mut diags = Vec::new();
        for g in &d.generators {
            let mut stack: Vec<(String, Vec<usize>)> = vec![(g.name.clone(), vec![])];
            while let Some((cur, used)) = stack.pop() {
                for (i, e) in d.edges.iter().enumerate() {
                    if e.source != cur {
                        continue;
                    }
                    match bound {
                        PathBound::NoRepeatedEdge if used.contains(&i) => continue,
                        PathBound::MaxLength(n) if used.len() >= n => continue,
                        _ => {}
                    }
                    let mut path = used.clone();
                    path.push(i);
                    let digits: String =
                        path.iter().map(|&j| d.edges[j].label.swapped_digits()).collect();
                    let end = d.idem_of(&e.target).unwrap();
                    let groups = regroupings(&digits, g.idem, end);
                    match groups.len() {
                        0 => {}
                        1 => ops.push(Operation {
                            input: g.name.clone(),
                            chords: ChordSequence::new(groups[0].clone()).unwrap(),
                            output: e.target.clone(),
                        }),
                        _ => diags.push(format!(
                            "path {} -> {} with string {} regroups ambiguously",
                            g.name, e.target, digits
                        )),
                    }
                    stack.push((e.target.clone(), path));
                }
            }
        }
        ops.sort();
        // F2: identical operations from distinct paths cancel
        let mut reduced: Vec<Operation> = Vec::new();
        let mut i = 0;
        while i < ops.len() {
            let mut j = i;
            while j < ops.len() && ops[j] == ops[i] {
                j += 1;
            }
            if (j - i) % 2 == 1 {
                reduced.push(ops[i].clone());
            }
            i = j;
        }
        Ok((TypeAStructure { generators: d.generators.clone(), operations: reduced }, diags))
    }

    pub fn parse(text: &str) -> Result<TypeAStructure, TypeAError> {
        let mut a = TypeAStructure::default();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap().trim();
            if content.is_empty() {
                continue;
            }
            let words: Vec<&str> = content.split_whitespace().collect();
            let err = |msg: String| TypeAError::Parse { line, msg };
            match words[0] {
                "generator" => parse_generator_line(&words, line, &mut a.generators).map_err(
                    |e| match e {
                        TypeDError::Parse { line, msg } => TypeAError::Parse { line, msg },
                        e => TypeAError::Graph(e),
                    },
                )?,
                "op" => {
                    if words.len() < 3 {
                        return Err(err("expected `op <input> [<chord>...] <output>`".into()));
                    }
                    let input = words[1];
                    let output = words[words.len() - 1];
                    let si = a.idem_of(input).ok_or_else(|| err(format!("unknown generator {input}")))?;
                    let so = a.idem_of(output).ok_or_else(|| err(format!("unknown generator {output}")))?;
                    let mut chords = Vec::new();
                    for w in &words[2..words.len() - 1] {
                        let c: AlgebraElement = w.parse().map_err(|_| err(format!("bad chord {w}")))?;
                        chords.push(c);
                    }
                    let chords = ChordSequence::new(chords).map_err(|e| err(e.to_string()))?;
                    let (first, last) = match (chords.chords().first(), chords.chords().last()) {
                        (Some(f), Some(l)) => (f.left_idem(), l.right_idem()),
                        _ => (Some(si), Some(si)),
                    };
                    if first != Some(si) || last != Some(so) {
                        return Err(err(format!("operation {input} -> {output} violates idempotents")));
                    }
                    a.operations.push(Operation { input: input.into(), chords, output: output.into() });
                }
                w => return Err(err(format!("unknown declaration {w:?}"))),
            }
        }
        Ok(a)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for g in &self.generators {
            writeln!(s, "generator {} i{}", g.name, g.idem).unwrap();
        }
        for o in &self.operations {
            let chords: Vec<&str> = o.chords.chords().iter().map(|c| c.name()).collect();
            writeln!(s, "op {} {} {}", o.input, chords.join(" "), o.output).unwrap();
        }
        s
    }

    /// m_{k+1}(x, chords) as a list of outputs with F2 multiplicity.
    pub fn apply(&self, x: &str, chords: &[AlgebraElement]) -> Vec<String> {
        let mut count: BTreeMap<&str, usize> = BTreeMap::new();
        for o in &self.operations {
            if o.input == x && o.chords.chords() == chords {
                *count.entry(&o.output).or_default() += 1;
            }
        }
        count.into_iter().filter(|(_, n)| n % 2 == 1).map(|(s, _)| s.to_string()).collect()
    }

    /// Failures of the A∞ relations on chord sequences of length ≤ `max_len`,
    /// for a strictly unital module over A(T) with m1 = 0.
    pub fn a_infinity_violations(&self, max_len: usize) -> Vec<String> {
        let mut bad = Vec::new();
        for g in &self.generators {
            let mut seqs: Vec<Vec<AlgebraElement>> = CHORDS
                .iter()
                .filter(|c| c.left_idem() == Some(g.idem))
                .map(|c| vec![*c])
                .collect();
            let mut all = Vec::new();
            while let Some(s) = seqs.pop() {
                if s.len() < max_len {
                    for c in CHORDS {
                        if s.last().unwrap().right_idem() == c.left_idem() {
                            let mut t = s.clone();
                            t.push(c);
                            seqs.push(t);
                        }
                    }
                }
                all.push(s);
            }
            for s in all {
                let mut count: BTreeMap<String, usize> = BTreeMap::new();
                for i in 1..s.len() {
                    for y in self.apply(&g.name, &s[..i]) {
                        for z in self.apply(&y, &s[i..]) {
                            *count.entry(z).or_default() += 1;
                        }
                    }
                }
                for j in 0..s.len().saturating_sub(1) {
                    let p = s[j].multiply(s[j + 1]);
                    if p != AlgebraElement::Zero {
                        let mut t = s[..j].to_vec();
                        t.push(p);
                        t.extend_from_slice(&s[j + 2..]);
                        for z in self.apply(&g.name, &t) {
                            *count.entry(z).or_default() += 1;
                        }
                    }
                }
                for (z, n) in count {
                    if n % 2 == 1 {
                        let names: Vec<&str> = s.iter().map(|c| c.name()).collect();
                        bad.push(format!("{} [{}] -> {}", g.name, names.join(" "), z));
                    }
                }
            }
        }
        bad
    }

    /// Refined gradings from `base`: gr(out) = λ^{k−1} gr(x) gr(ρ_{I1})···gr(ρ_{Ik}).
    pub fn assign_gradings_a(
        &self,
        base: &str,
        expected_classes: Option<usize>,
    ) -> Result<GradedTypeA, TypeAError> {
        let steps: Vec<(String, String, GradingElement)> = self
            .operations
            .iter()
            .map(|o| {
                let k = o.chords.len() as i64;
                let m = GradingElement::lambda_pow(k - 1).multiply(&o.chords.grading());
                (o.input.clone(), o.output.clone(), m)
            })
            .collect();
        let names: Vec<String> = self.generators.iter().map(|g| g.name.clone()).collect();
        let (gradings, closures) = propagate(&names, &self.idem_map(), base, &steps, false)?;
        let f = cyclic_generator(&closures)?;
        let f = match (f, expected_classes) {
            (Some(f), Some(n)) => Some(choose_root(&f, n, |cand| {
                count_classes(&gradings, Some(cand.clone()), None)
            })),
            (f, _) => f,
        };
        Ok(GradedTypeA {
            structure: self.clone(),
            base: base.to_string(),
            gradings,
            indeterminacy: f.map(|f| f.canonical_generator()),
        })
    }
}

#[derive(Debug, Clone)]
pub struct GradedTypeA {
    pub structure: TypeAStructure,
    pub base: String,
    pub gradings: BTreeMap<String, GradingElement>,
    pub indeterminacy: Option<GradingElement>,
}

impl GradedTypeA {
    pub fn coset(&self, name: &str) -> CosetGrading {
        CosetGrading::new(self.indeterminacy.clone(), self.gradings[name].clone(), None)
    }

    pub fn relation_violations(&self) -> Vec<String> {
        let mut bad = Vec::new();
        for o in &self.structure.operations {
            let k = o.chords.len() as i64;
            let predicted = GradingElement::lambda_pow(k - 1)
                .multiply(&self.gradings[&o.input])
                .multiply(&o.chords.grading());
            let a = CosetGrading::new(self.indeterminacy.clone(), predicted, None);
            let b = self.coset(&o.output);
            if !a.coset_eq(&b).unwrap_or(false) {
                bad.push(format!("{} {} -> {}", o.input, o.chords, o.output));
            }
        }
        bad
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use AlgebraElement::*;

    #[test]
    fn regrouping_prefers_fewest_blocks() {
        assert_eq!(regroupings("21", 1, 1), vec![vec![Rho2, Rho1]]);
        assert_eq!(regroupings("123", 0, 1), vec![vec![Rho123]]);
        assert_eq!(regroupings("32", 0, 0), vec![vec![Rho3, Rho2]]);
        assert!(regroupings("13", 0, 1).is_empty());
        assert!(regroupings("11", 0, 1).is_empty());
    }

    #[test]
    fn single_generator_has_no_operations() {
        let d = TypeDStructure::new(vec![("x", 0)], vec![]);
        let (a, diag) = TypeAStructure::from_type_d(&d).unwrap();
        assert!(a.operations.is_empty() && diag.is_empty());
        let g = a.assign_gradings_a("x", None).unwrap();
        assert!(g.gradings["x"].is_identity() && g.indeterminacy.is_none());
    }

    #[test]
    fn horizontal_loop_gives_m3() {
        let d = TypeDStructure::new(vec![("x", 0)], vec![("x", "x", Rho12)]);
        let (a, _) = TypeAStructure::from_type_d(&d).unwrap();
        assert_eq!(a.apply("x", &[Rho3, Rho2]), vec!["x".to_string()]);
        assert!(a.a_infinity_violations(3).is_empty());
        assert!(!a.a_infinity_violations(4).is_empty());
        let (full, _) = TypeAStructure::from_type_d_with(&d, PathBound::MaxLength(4)).unwrap();
        assert_eq!(full.apply("x", &[Rho3, Rho23, Rho2]), vec!["x".to_string()]);
        assert_eq!(full.apply("x", &[Rho3, Rho23, Rho23, Rho2]), vec!["x".to_string()]);
        assert!(full.a_infinity_violations(5).is_empty());
    }

    #[test]
    fn valence_three_is_rejected() {
        let d = TypeDStructure::new(
            vec![("x", 0), ("y", 1), ("z", 1), ("w", 1)],
            vec![("x", "y", Rho1), ("x", "z", Rho3), ("x", "w", Rho123)],
        );
        assert_eq!(TypeAStructure::from_type_d(&d).unwrap_err(), TypeAError::NotLoopType("x".into()));
    }

    #[test]
    fn text_round_trip() {
        let text = "generator x i0\ngenerator y i1\nop x r3 r2 r1 y\nop x r1 y\n";
        let a = TypeAStructure::parse(text).unwrap();
        assert_eq!(TypeAStructure::parse(&a.to_text()).unwrap(), a);
        assert!(TypeAStructure::parse("generator x i0\nop x r2 x\n").is_err());
    }
}
