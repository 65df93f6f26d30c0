//! Type D structures over A(T), stored as decorated graphs.
//!
//! An edge x -ρ-> y records the term ρ ⊗ y of δ1(x). The ∅ label is stored as
//! the idempotent of its endpoints.

use crate::grading_group::{CosetGrading, GradingElement};
use crate::rational::{gcd_q, qi, Q};
use crate::torus_algebra::{AlgebraElement, ChordSequence, Idem};
use num_traits::One;
use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TypeDError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("graph is disconnected")]
    DisconnectedGraph,
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("generator {0:?} has valence greater than two")]
    NotLoopType(String),
    #[error("cycle closures {0} and {1} do not generate a cyclic subgroup")]
    NonCyclicIndeterminacy(String, String),
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    pub name: String,
    pub idem: Idem,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub source: String,
    pub target: String,
    pub label: AlgebraElement,
}

impl Edge {
    pub fn is_empty_label(&self) -> bool {
        self.label.is_idempotent()
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TypeDStructure {
    pub generators: Vec<Generator>,
    pub edges: Vec<Edge>,
    pub spinc_tag: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Diagnostics {
    pub typing: Vec<String>,
    pub d_squared: Vec<String>,
}

impl Diagnostics {
    pub fn is_valid(&self) -> bool {
        self.typing.is_empty() && self.d_squared.is_empty()
    }
}

/// Parse `generator <name> <i0|i1>` / `edge <src> <dst> <label>` / `spinc <tag>`.
/// Returns the structure and warnings about cancelled parallel edges.
pub fn parse_generator_line(
    words: &[&str],
    line: usize,
    gens: &mut Vec<Generator>,
) -> Result<(), TypeDError> {
    let err = |msg: &str| TypeDError::Parse { line, msg: msg.to_string() };
    if words.len() != 3 {
        return Err(err("expected `generator <name> <i0|i1>`"));
    }
    let idem = match words[2] {
        "i0" => 0,
        "i1" => 1,
        _ => return Err(err("idempotent must be i0 or i1")),
    };
    if gens.iter().any(|g| g.name == words[1]) {
        return Err(err(&format!("duplicate generator {}", words[1])));
    }
    gens.push(Generator { name: words[1].to_string(), idem });
    Ok(())
}

impl TypeDStructure {
    pub fn new(generators: Vec<(&str, Idem)>, edges: Vec<(&str, &str, AlgebraElement)>) -> Self {
        TypeDStructure {
            generators: generators
                .into_iter()
                .map(|(n, i)| Generator { name: n.to_string(), idem: i })
                .collect(),
            edges: edges
                .into_iter()
                .map(|(s, t, l)| Edge { source: s.to_string(), target: t.to_string(), label: l })
                .collect(),
            spinc_tag: None,
        }
    }

    pub fn parse(text: &str) -> Result<(TypeDStructure, Vec<String>), TypeDError> {
        let mut d = TypeDStructure::default();
        let mut warnings = Vec::new();
        let mut seen: BTreeMap<(String, String, AlgebraElement), usize> = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap().trim();
            if content.is_empty() {
                continue;
            }
            let words: Vec<&str> = content.split_whitespace().collect();
            let err = |msg: String| TypeDError::Parse { line, msg };
            match words[0] {
                "generator" => parse_generator_line(&words, line, &mut d.generators)?,
                "edge" => {
                    if words.len() != 4 {
                        return Err(err("expected `edge <src> <dst> <label>`".into()));
                    }
                    let (s, t) = (words[1], words[2]);
                    let gs = d.idem_of(s).ok_or_else(|| err(format!("unknown generator {s}")))?;
                    let gt = d.idem_of(t).ok_or_else(|| err(format!("unknown generator {t}")))?;
                    let label = if words[3] == "e" {
                        if gs != gt {
                            return Err(err(format!("empty edge {s} -> {t} joins different idempotents")));
                        }
                        AlgebraElement::idempotent(gs)
                    } else {
                        let l: AlgebraElement =
                            words[3].parse().map_err(|e: crate::torus_algebra::AlgebraError| err(e.to_string()))?;
                        if !l.is_chord() {
                            return Err(err(format!("edge label {} is not a chord", words[3])));
                        }
                        if l.left_idem() != Some(gs) || l.right_idem() != Some(gt) {
                            return Err(err(format!("edge {s} -> {t} with {l} violates idempotents")));
                        }
                        l
                    };
                    *seen.entry((s.to_string(), t.to_string(), label)).or_default() += 1;
                    d.edges.push(Edge { source: s.into(), target: t.into(), label });
                }
                "spinc" => {
                    if words.len() != 2 {
                        return Err(err("expected `spinc <tag>`".into()));
                    }
                    d.spinc_tag = Some(words[1].to_string());
                }
                w => return Err(err(format!("unknown declaration {w:?}"))),
            }
        }
        for ((s, t, l), n) in &seen {
            if n % 2 == 0 {
                warnings.push(format!("parallel edges {s} -> {t} ({l}) cancel over F2"));
            } else if *n > 1 {
                warnings.push(format!("parallel edges {s} -> {t} ({l}) reduced mod 2"));
            }
        }
        d.edges = reduce_mod2(std::mem::take(&mut d.edges));
        Ok((d, warnings))
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        if let Some(t) = &self.spinc_tag {
            writeln!(s, "spinc {t}").unwrap();
        }
        for g in &self.generators {
            writeln!(s, "generator {} i{}", g.name, g.idem).unwrap();
        }
        for e in &self.edges {
            let l = if e.is_empty_label() { "e" } else { e.label.name() };
            writeln!(s, "edge {} {} {}", e.source, e.target, l).unwrap();
        }
        s
    }

    pub fn idem_of(&self, name: &str) -> Option<Idem> {
        self.generators.iter().find(|g| g.name == name).map(|g| g.idem)
    }

    pub fn idem_map(&self) -> BTreeMap<String, Idem> {
        self.generators.iter().map(|g| (g.name.clone(), g.idem)).collect()
    }

    pub fn names(&self) -> Vec<String> {
        self.generators.iter().map(|g| g.name.clone()).collect()
    }

    pub fn outgoing<'a>(&'a self, x: &'a str) -> impl Iterator<Item = &'a Edge> + 'a {
        self.edges.iter().filter(move |e| e.source == x)
    }

    pub fn validate(&self) -> Diagnostics {
        let mut diag = Diagnostics::default();
        for e in &self.edges {
            match (self.idem_of(&e.source), self.idem_of(&e.target)) {
                (Some(a), Some(b)) => {
                    if e.label.left_idem() != Some(a) || e.label.right_idem() != Some(b) {
                        diag.typing.push(format!(
                            "edge {} -> {} labelled {} has idempotents i{} -> i{}",
                            e.source, e.target, e.label, a, b
                        ));
                    }
                }
                _ => diag
                    .typing
                    .push(format!("edge {} -> {} names an unknown generator", e.source, e.target)),
            }
        }
        // δ1 twice, multiplied out; F2 counts per (source, product, target)
        let mut count: BTreeMap<(String, AlgebraElement, String), usize> = BTreeMap::new();
        for e in &self.edges {
            for f in self.outgoing(&e.target) {
                let prod = e.label.multiply(f.label);
                if prod != AlgebraElement::Zero {
                    *count.entry((e.source.clone(), prod, f.target.clone())).or_default() += 1;
                }
            }
        }
        for ((x, a, z), n) in count {
            if n % 2 == 1 {
                diag.d_squared.push(format!("{a} ⊗ {z} survives in δ1∘δ1({x})"));
            }
        }
        diag
    }

    /// No directed cycle.
    pub fn is_bounded(&self) -> bool {
        let mut indeg: HashMap<&str, usize> =
            self.generators.iter().map(|g| (g.name.as_str(), 0)).collect();
        for e in &self.edges {
            *indeg.get_mut(e.target.as_str()).unwrap() += 1;
        }
        let mut queue: VecDeque<&str> =
            indeg.iter().filter(|(_, &d)| d == 0).map(|(n, _)| *n).collect();
        let mut seen = 0;
        while let Some(x) = queue.pop_front() {
            seen += 1;
            for e in self.outgoing(x) {
                let d = indeg.get_mut(e.target.as_str()).unwrap();
                *d -= 1;
                if *d == 0 {
                    queue.push_back(e.target.as_str());
                }
            }
        }
        seen == self.generators.len()
    }

    pub fn is_loop_type(&self) -> Result<(), TypeDError> {
        let mut valence: BTreeMap<&str, usize> = BTreeMap::new();
        for e in &self.edges {
            *valence.entry(&e.source).or_default() += 1;
            *valence.entry(&e.target).or_default() += 1;
        }
        match valence.into_iter().find(|(_, v)| *v > 2) {
            Some((n, _)) => Err(TypeDError::NotLoopType(n.to_string())),
            None => Ok(()),
        }
    }

    pub fn is_reduced(&self) -> bool {
        !self.edges.iter().any(|e| e.is_empty_label())
    }

    /// Cancel ∅-edges one at a time, smallest (source, target) first.
    pub fn edge_reduce(&self) -> TypeDStructure {
        let mut d = self.clone();
        loop {
            let Some(cancel) = d
                .edges
                .iter()
                .filter(|e| e.is_empty_label() && e.source != e.target)
                .min_by(|a, b| (&a.source, &a.target).cmp(&(&b.source, &b.target)))
                .cloned()
            else {
                return d;
            };
            let (x, y) = (cancel.source.as_str(), cancel.target.as_str());
            let outside = |n: &str| n != x && n != y;
            let mut added = Vec::new();
            for a in d.edges.iter().filter(|e| e.target == y && outside(&e.source)) {
                for b in d.edges.iter().filter(|e| e.source == x && outside(&e.target)) {
                    let prod = a.label.multiply(b.label);
                    if prod != AlgebraElement::Zero {
                        added.push(Edge {
                            source: a.source.clone(),
                            target: b.target.clone(),
                            label: prod,
                        });
                    }
                }
            }
            d.edges.retain(|e| outside(&e.source) && outside(&e.target));
            d.edges.extend(added);
            d.edges = reduce_mod2(std::mem::take(&mut d.edges));
            d.generators.retain(|g| outside(&g.name));
        }
    }

    /// Length-k directed paths from x through chord edges, with F2 multiplicity.
    pub fn delta_k(&self, x: &str, k: usize) -> Vec<(ChordSequence, String)> {
        let mut layer: BTreeMap<(ChordSequence, String), usize> = BTreeMap::new();
        layer.insert((ChordSequence::empty(), x.to_string()), 1);
        for _ in 0..k {
            let mut next: BTreeMap<(ChordSequence, String), usize> = BTreeMap::new();
            for ((seq, y), n) in &layer {
                for e in self.outgoing(y).filter(|e| !e.is_empty_label()) {
                    *next.entry((seq.pushed(e.label), e.target.clone())).or_default() += n;
                }
            }
            layer = next;
        }
        layer.into_iter().filter(|(_, n)| n % 2 == 1).map(|(k, _)| k).collect()
    }

    /// Undirected connectivity.
    pub fn is_connected(&self) -> bool {
        if self.generators.is_empty() {
            return true;
        }
        let mut adj: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
        for e in &self.edges {
            adj.entry(&e.source).or_default().push(&e.target);
            adj.entry(&e.target).or_default().push(&e.source);
        }
        let mut seen = BTreeSet::new();
        let mut stack = vec![self.generators[0].name.as_str()];
        while let Some(x) = stack.pop() {
            if seen.insert(x) {
                stack.extend(adj.get(x).into_iter().flatten().copied());
            }
        }
        seen.len() == self.generators.len()
    }

    /// Refined gradings from `base`. `expected_classes` selects a root of the
    /// closure element when the caller knows how many spin^c classes the
    /// generators should split into.
    pub fn assign_gradings(
        &self,
        base: &str,
        expected_classes: Option<usize>,
    ) -> Result<GradedTypeD, TypeDError> {
        let steps: Vec<(String, String, GradingElement)> = self
            .edges
            .iter()
            .map(|e| {
                // gr(y) = gr(ρ)^{-1} λ^{-1} gr(x)
                let m = e
                    .label
                    .grading()
                    .expect("edge labels are graded")
                    .inverse()
                    .multiply(&GradingElement::lambda_pow(-1));
                (e.source.clone(), e.target.clone(), m)
            })
            .collect();
        let (gradings, closures) = propagate(&self.names(), &self.idem_map(), base, &steps, true)?;
        let h = cyclic_generator(&closures)?;
        let h = match (h, expected_classes) {
            (Some(h), Some(n)) => Some(choose_root(&h, n, |cand| {
                count_classes(&gradings, None, Some(cand.clone()))
            })),
            (h, _) => h,
        };
        Ok(GradedTypeD {
            structure: self.clone(),
            base: base.to_string(),
            gradings,
            indeterminacy: h.map(|h| h.canonical_generator()),
        })
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut s = format!("digraph \"{name}\" {{\n");
        for g in &self.generators {
            let shape = if g.idem == 0 {
                "shape=circle, style=filled, fillcolor=black, fontcolor=white"
            } else {
                "shape=circle"
            };
            writeln!(s, "  \"{}\" [{}];", g.name, shape).unwrap();
        }
        for e in &self.edges {
            let l = if e.is_empty_label() { "∅".to_string() } else { e.label.digits() };
            writeln!(s, "  \"{}\" -> \"{}\" [label=\"{}\"];", e.source, e.target, l).unwrap();
        }
        s.push_str("}\n");
        s
    }
}

pub(crate) fn reduce_mod2(edges: Vec<Edge>) -> Vec<Edge> {
    let mut count: BTreeMap<Edge, usize> = BTreeMap::new();
    let mut order = Vec::new();
    for e in edges {
        let n = count.entry(e.clone()).or_default();
        if *n == 0 {
            order.push(e);
        }
        *n += 1;
    }
    order.into_iter().filter(|e| count[e] % 2 == 1).collect()
}

/// Depth-first spanning tree, neighbours visited by (idempotent, name). Each step (a, b, m) means
/// gr(b) = m · gr(a). Returns gradings and the closure discrepancies
/// gr(b)^{-1} · (m · gr(a)) of non-tree steps. With `left_action = false` the
/// step means gr(b) = gr(a) · m and discrepancies are taken on the left.
pub(crate) fn propagate(
    names: &[String],
    idems: &BTreeMap<String, Idem>,
    base: &str,
    steps: &[(String, String, GradingElement)],
    left_action: bool,
) -> Result<(BTreeMap<String, GradingElement>, Vec<GradingElement>), TypeDError> {
    if !names.iter().any(|n| n == base) {
        return Err(TypeDError::UnknownGenerator(base.to_string()));
    }
    let apply = |m: &GradingElement, g: &GradingElement| {
        if left_action {
            m.multiply(g)
        } else {
            g.multiply(m)
        }
    };
    let mut adj: BTreeMap<&str, Vec<(usize, bool)>> = BTreeMap::new();
    for (i, (a, b, _)) in steps.iter().enumerate() {
        adj.entry(a.as_str()).or_default().push((i, true));
        adj.entry(b.as_str()).or_default().push((i, false));
    }
    let mut gr: BTreeMap<String, GradingElement> = BTreeMap::new();
    gr.insert(base.to_string(), GradingElement::identity());
    let mut tree = BTreeSet::new();
    // depth-first; ι0 neighbours before ι1, then by name
    let mut stack: Vec<(String, Vec<(String, usize, bool)>)> = Vec::new();
    let nbrs_of = |x: &str| {
        let mut v: Vec<(String, usize, bool)> = adj
            .get(x)
            .into_iter()
            .flatten()
            .map(|&(i, fwd)| {
                let other = if fwd { &steps[i].1 } else { &steps[i].0 };
                (other.clone(), i, fwd)
            })
            .collect();
        v.sort_by(|a, b| (idems.get(&a.0), &a.0, a.1).cmp(&(idems.get(&b.0), &b.0, b.1)));
        v.reverse();
        v
    };
    stack.push((base.to_string(), nbrs_of(base)));
    while let Some((x, pending)) = stack.last_mut() {
        let Some((y, i, fwd)) = pending.pop() else {
            stack.pop();
            continue;
        };
        if gr.contains_key(&y) {
            continue;
        }
        let m = &steps[i].2;
        let gx = gr[x.as_str()].clone();
        let gy = if fwd {
            apply(m, &gx)
        } else if left_action {
            m.inverse().multiply(&gx)
        } else {
            gx.multiply(&m.inverse())
        };
        gr.insert(y.clone(), gy);
        tree.insert(i);
        let next = nbrs_of(&y);
        stack.push((y, next));
    }
    if gr.len() != names.len() {
        return Err(TypeDError::DisconnectedGraph);
    }
    let mut closures = Vec::new();
    for (i, (a, b, m)) in steps.iter().enumerate() {
        if tree.contains(&i) {
            continue;
        }
        let predicted = apply(m, &gr[a]);
        let disc = if left_action {
            gr[b].inverse().multiply(&predicted)
        } else {
            predicted.multiply(&gr[b].inverse())
        };
        if !disc.is_identity() {
            closures.push(disc);
        }
    }
    Ok((gr, closures))
}

/// A common generator g with every closure a power of g, or None if all trivial.
pub(crate) fn cyclic_generator(closures: &[GradingElement]) -> Result<Option<GradingElement>, TypeDError> {
    let Some(first) = closures.first() else {
        return Ok(None);
    };
    let mut t = qi(0);
    for c in closures {
        let e = c.exponent_over(first).ok_or_else(|| {
            TypeDError::NonCyclicIndeterminacy(first.to_string(), c.to_string())
        })?;
        t = gcd_q(&t, &e);
    }
    Ok(Some(first.rational_power(&t)))
}

/// Pick h^{1/k} for the smallest k whose class count matches `expected`;
/// fall back to h.
pub(crate) fn choose_root(
    h: &GradingElement,
    expected: usize,
    count: impl Fn(&GradingElement) -> usize,
) -> GradingElement {
    for k in 1..=12i64 {
        let cand = h.rational_power(&Q::new(One::one(), k.into()));
        if !cand.is_integral() {
            continue;
        }
        if count(&cand) == expected {
            return cand;
        }
    }
    h.clone()
}

pub(crate) fn count_classes(
    gradings: &BTreeMap<String, GradingElement>,
    left: Option<GradingElement>,
    right: Option<GradingElement>,
) -> usize {
    let reps: Vec<CosetGrading> = gradings
        .values()
        .map(|g| CosetGrading::new(left.clone(), g.clone(), right.clone()))
        .collect();
    let mut classes: Vec<&CosetGrading> = Vec::new();
    for r in &reps {
        if !classes
            .iter()
            .any(|c| crate::grading_group::same_spinc(c, r).unwrap_or(false))
        {
            classes.push(r);
        }
    }
    classes.len()
}

#[derive(Debug, Clone)]
pub struct GradedTypeD {
    pub structure: TypeDStructure,
    pub base: String,
    pub gradings: BTreeMap<String, GradingElement>,
    pub indeterminacy: Option<GradingElement>,
}

impl GradedTypeD {
    pub fn coset(&self, name: &str) -> CosetGrading {
        CosetGrading::new(None, self.gradings[name].clone(), self.indeterminacy.clone())
    }

    /// Edges violating λ^{-1} gr(x) = gr(ρ) gr(y) modulo ⟨h⟩.
    pub fn relation_violations(&self) -> Vec<String> {
        let mut bad = Vec::new();
        for e in &self.structure.edges {
            let lhs = GradingElement::lambda_pow(-1).multiply(&self.gradings[&e.source]);
            let rhs = e.label.grading().unwrap().multiply(&self.gradings[&e.target]);
            let a = CosetGrading::new(None, lhs, self.indeterminacy.clone());
            let b = CosetGrading::new(None, rhs, self.indeterminacy.clone());
            if !a.coset_eq(&b).unwrap_or(false) {
                bad.push(format!("{} -> {}", e.source, e.target));
            }
        }
        bad
    }
}

/// Decorated-graph isomorphism: a bijection of generators preserving
/// idempotents and the labelled edge set.
pub fn isomorphic(a: &TypeDStructure, b: &TypeDStructure) -> bool {
    if a.generators.len() != b.generators.len() || a.edges.len() != b.edges.len() {
        return false;
    }
    let sig = |d: &TypeDStructure, n: &str| {
        let mut out: Vec<AlgebraElement> = d.outgoing(n).map(|e| e.label).collect();
        let mut inc: Vec<AlgebraElement> =
            d.edges.iter().filter(|e| e.target == n).map(|e| e.label).collect();
        out.sort();
        inc.sort();
        (d.idem_of(n).unwrap(), out, inc)
    };
    let an = a.names();
    let bn = b.names();
    let bset: BTreeSet<(String, String, AlgebraElement)> = b
        .edges
        .iter()
        .map(|e| (e.source.clone(), e.target.clone(), e.label))
        .collect();
    let asig: Vec<_> = an.iter().map(|n| sig(a, n)).collect();
    let bsig: Vec<_> = bn.iter().map(|n| sig(b, n)).collect();
    let mut map: HashMap<String, String> = HashMap::new();
    let mut used = vec![false; bn.len()];

    fn search(
        i: usize,
        a: &TypeDStructure,
        an: &[String],
        bn: &[String],
        asig: &[(Idem, Vec<AlgebraElement>, Vec<AlgebraElement>)],
        bsig: &[(Idem, Vec<AlgebraElement>, Vec<AlgebraElement>)],
        bset: &BTreeSet<(String, String, AlgebraElement)>,
        map: &mut HashMap<String, String>,
        used: &mut [bool],
    ) -> bool {
        if i == an.len() {
            return a.edges.iter().all(|e| {
                bset.contains(&(map[&e.source].clone(), map[&e.target].clone(), e.label))
            });
        }
        for j in 0..bn.len() {
            if used[j] || asig[i] != bsig[j] {
                continue;
            }
            map.insert(an[i].clone(), bn[j].clone());
            // prune on edges among already-mapped vertices
            let ok = a.edges.iter().all(|e| match (map.get(&e.source), map.get(&e.target)) {
                (Some(s), Some(t)) => bset.contains(&(s.clone(), t.clone(), e.label)),
                _ => true,
            });
            if ok {
                used[j] = true;
                if search(i + 1, a, an, bn, asig, bsig, bset, map, used) {
                    return true;
                }
                used[j] = false;
            }
            map.remove(&an[i]);
        }
        false
    }
    search(0, a, &an, &bn, &asig, &bsig, &bset, &mut map, &mut used)
}

#[cfg(test)]
mod tests {
    use super::*;
    use AlgebraElement::*;

    fn fig9() -> TypeDStructure {
        TypeDStructure::new(
            vec![("a1", 0), ("a2", 0), ("a3", 0), ("a4", 0), ("b1", 1), ("b2", 1)],
            vec![
                ("a1", "a3", Rho12),
                ("a3", "b1", Rho1),
                ("a2", "b1", Rho3),
                ("a2", "a4", Rho12),
                ("a4", "b2", Rho1),
                ("a1", "b2", Rho3),
            ],
        )
    }

    #[test]
    fn validate_and_mutation() {
        assert!(fig9().validate().is_valid());
        let single = TypeDStructure::new(vec![("x", 0)], vec![]);
        assert!(single.validate().is_valid());
        let mut bad = fig9();
        bad.edges[1].target = "a4".into();
        let diag = bad.validate();
        assert_eq!(diag.typing.len(), 1);
        assert!(diag.typing[0].contains("a3 -> a4"));
    }

    #[test]
    fn d_squared_witness() {
        let d = TypeDStructure::new(
            vec![("x", 0), ("y", 1), ("z", 0)],
            vec![("x", "y", Rho1), ("y", "z", Rho2)],
        );
        assert_eq!(d.validate().d_squared.len(), 1);
    }

    #[test]
    fn boundedness() {
        assert!(fig9().is_bounded());
        assert!(TypeDStructure::default().is_bounded());
        let cyc = TypeDStructure::new(
            vec![("a", 0), ("b", 0)],
            vec![("a", "b", Rho12), ("b", "a", Rho12)],
        );
        assert!(!cyc.is_bounded());
    }

    #[test]
    fn single_empty_edge_cancels() {
        let d = TypeDStructure::new(vec![("x", 0), ("y", 0)], vec![("x", "y", Iota0)]);
        let r = d.edge_reduce();
        assert!(r.generators.is_empty() && r.edges.is_empty());
    }

    #[test]
    fn delta_k_paths() {
        let d = fig9();
        let p = d.delta_k("a1", 2);
        assert_eq!(p.len(), 1);
        assert_eq!(p[0].0.chords(), &[Rho12, Rho1]);
        assert_eq!(p[0].1, "b1");
        let id = d.delta_k("a2", 0);
        assert_eq!(id, vec![(ChordSequence::empty(), "a2".to_string())]);
    }

    #[test]
    fn parse_round_trip_and_cancellation() {
        let text = fig9().to_text();
        let (d, w) = TypeDStructure::parse(&text).unwrap();
        assert!(w.is_empty());
        assert_eq!(d, fig9());
        let (d, w) = TypeDStructure::parse(
            "generator x i0\ngenerator y i1\nedge x y r1\nedge x y r1\n",
        )
        .unwrap();
        assert!(d.edges.is_empty());
        assert_eq!(w.len(), 1);
        let e = TypeDStructure::parse("generator x i0\nedge x y r1\n").unwrap_err();
        assert!(matches!(e, TypeDError::Parse { line: 2, .. }));
    }

    #[test]
    fn disconnected_graph_is_rejected() {
        let d = TypeDStructure::new(vec![("x", 0), ("y", 0)], vec![]);
        assert_eq!(d.assign_gradings("x", None).unwrap_err(), TypeDError::DisconnectedGraph);
        let single = TypeDStructure::new(vec![("x", 0)], vec![]);
        let g = single.assign_gradings("x", None).unwrap();
        assert!(g.gradings["x"].is_identity());
        assert!(g.indeterminacy.is_none());
    }

    #[test]
    fn isomorphism_detects_relabelling() {
        let mut renamed = fig9();
        for g in &mut renamed.generators {
            g.name = format!("n{}", g.name);
        }
        for e in &mut renamed.edges {
            e.source = format!("n{}", e.source);
            e.target = format!("n{}", e.target);
        }
        renamed.edges.reverse();
        assert!(isomorphic(&fig9(), &renamed));
        renamed.edges[0].label = Rho123;
        assert!(!isomorphic(&fig9(), &renamed));
    }
}
