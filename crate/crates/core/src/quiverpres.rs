//! Quivers with relations, vertex contraction and abelianization.
//!
//! Paths are written left to right: the word `a*b` means "follow `a`, then
//! `b`", so it is composable when the target of `a` is the source of `b`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::freealg::{Alphabet, NcPoly, Word};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

impl Arrow {
    pub fn is_loop(&self) -> bool {
        self.source == self.target
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    /// Arrows are `(name, source vertex, target vertex)`.
    pub fn new<V, S>(vertices: V, arrows: &[(&str, &str, &str)]) -> Result<Self>
    where
        V: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        for (i, v) in vertices.iter().enumerate() {
            if vertices[..i].contains(v) {
                return Err(Error::DuplicateName(v.clone()));
            }
        }
        let find = |name: &str| {
            vertices
                .iter()
                .position(|v| v == name)
                .ok_or_else(|| Error::UnknownVertex(name.to_string()))
        };
        let mut out: Vec<Arrow> = Vec::with_capacity(arrows.len());
        for (name, s, t) in arrows {
            if out.iter().any(|a| a.name == *name) || vertices.iter().any(|v| v == name) {
                return Err(Error::DuplicateName(name.to_string()));
            }
            out.push(Arrow {
                name: name.to_string(),
                source: find(s)?,
                target: find(t)?,
            });
        }
        Ok(Quiver {
            vertices,
            arrows: out,
        })
    }

    /// Single vertex carrying the given loops.
    pub fn bouquet(vertex: &str, loops: &[&str]) -> Result<Self> {
        let arrows: Vec<(&str, &str, &str)> = loops.iter().map(|l| (*l, vertex, vertex)).collect();
        Quiver::new([vertex], &arrows)
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrow(&self, index: u32) -> &Arrow {
        &self.arrows[index as usize]
    }

    /// Endpoints of a nonempty composable path.
    pub fn path_endpoints(&self, word: &Word) -> Option<(usize, usize)> {
        let letters = word.letters();
        let first = self.arrows.get(*letters.first()? as usize)?;
        let mut at = first.target;
        for &l in &letters[1..] {
            let a = self.arrows.get(l as usize)?;
            if a.source != at {
                return None;
            }
            at = a.target;
        }
        Some((first.source, at))
    }

    pub fn is_single_vertex(&self) -> bool {
        self.vertices.len() == 1
    }
}

/// Marker for how words are read as paths.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Composition {
    #[default]
    LeftToRight,
}

/// A quiver together with relations in its path algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    name: String,
    quiver: Quiver,
    alphabet: Arc<Alphabet>,
    relations: Vec<NcPoly>,
    composition: Composition,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Diagnostic {
    NonComposable { relation: usize, word: String },
    MixedEndpoints { relation: usize },
    ShortTerm { relation: usize, word: String },
    ZeroRelation { relation: usize },
    ForeignAlphabet { relation: usize },
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagnostic::NonComposable { relation, word } => {
                write!(f, "relation {}: word `{}` is not a composable path", relation + 1, word)
            }
            Diagnostic::MixedEndpoints { relation } => {
                write!(f, "relation {}: terms have different endpoints", relation + 1)
            }
            Diagnostic::ShortTerm { relation, word } => write!(
                f,
                "relation {}: term `{}` has path length below 2",
                relation + 1,
                word
            ),
            Diagnostic::ZeroRelation { relation } => {
                write!(f, "relation {} is zero", relation + 1)
            }
            Diagnostic::ForeignAlphabet { relation } => {
                write!(f, "relation {} is not over the arrow alphabet", relation + 1)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostics(pub Vec<Diagnostic>);

impl fmt::Display for Diagnostics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl Presentation {
    /// Unvalidated constructor; see [`Presentation::validate`].
    pub fn new(name: impl Into<String>, quiver: Quiver, relations: Vec<NcPoly>) -> Result<Self> {
        let alphabet = Alphabet::new(quiver.arrows.iter().map(|a| a.name.clone()))?;
        let relations = relations
            .into_iter()
            .map(|r| {
                if r.alphabet().names() == alphabet.names() {
                    Ok(r.relabel(&alphabet, &(0..alphabet.len() as u32).map(Some).collect::<Vec<_>>()))
                } else {
                    Err(Error::AlphabetMismatch)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Presentation {
            name: name.into(),
            quiver,
            alphabet,
            relations,
            composition: Composition::LeftToRight,
        })
    }

    /// Presentation whose relations are given as `(coefficient, path)` lists.
    pub fn from_named(
        name: &str,
        quiver: Quiver,
        relations: &[&[(i64, &[&str])]],
    ) -> Result<Self> {
        let alphabet = Alphabet::new(quiver.arrows.iter().map(|a| a.name.clone()))?;
        let rels = relations
            .iter()
            .map(|r| NcPoly::from_named(&alphabet, r))
            .collect();
        Presentation::new(name, quiver, rels)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn relations(&self) -> &[NcPoly] {
        &self.relations
    }

    pub fn composition(&self) -> Composition {
        self.composition
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn max_relation_degree(&self) -> usize {
        self.relations.iter().filter_map(NcPoly::degree).max().unwrap_or(0)
    }

    pub fn validate(&self) -> core::result::Result<(), Diagnostics> {
        let mut diags = Vec::new();
        for (i, r) in self.relations.iter().enumerate() {
            if r.alphabet().names() != self.alphabet.names() {
                diags.push(Diagnostic::ForeignAlphabet { relation: i });
                continue;
            }
            if r.is_zero() {
                diags.push(Diagnostic::ZeroRelation { relation: i });
                continue;
            }
            let mut ends = None;
            let mut mixed = false;
            for (w, _) in r.terms() {
                if w.len() < 2 {
                    diags.push(Diagnostic::ShortTerm {
                        relation: i,
                        word: self.alphabet.render(w),
                    });
                    continue;
                }
                match self.quiver.path_endpoints(w) {
                    None => diags.push(Diagnostic::NonComposable {
                        relation: i,
                        word: self.alphabet.render(w),
                    }),
                    Some(e) => match ends {
                        None => ends = Some(e),
                        Some(prev) if prev != e => mixed = true,
                        _ => {}
                    },
                }
            }
            if mixed {
                diags.push(Diagnostic::MixedEndpoints { relation: i });
            }
        }
        if diags.is_empty() {
            Ok(())
        } else {
            Err(Diagnostics(diags))
        }
    }

    pub fn validated(self) -> Result<Self> {
        self.validate().map_err(Error::Invalid)?;
        Ok(self)
    }
}

/// Vertices to contract away.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KillSet {
    killed: Vec<bool>,
}

impl KillSet {
    pub fn new(quiver: &Quiver, names: &[&str]) -> Result<Self> {
        let mut killed = alloc::vec![false; quiver.vertices.len()];
        for n in names {
            let i = quiver
                .vertex_index(n)
                .ok_or_else(|| Error::UnknownVertex(n.to_string()))?;
            killed[i] = true;
        }
        if !killed.iter().any(|&k| k) {
            return Err(Error::InvalidKillSet("no vertex selected"));
        }
        if killed.iter().all(|&k| k) {
            return Err(Error::InvalidKillSet("cannot kill every vertex"));
        }
        Ok(KillSet { killed })
    }

    pub fn contains(&self, vertex: usize) -> bool {
        self.killed.get(vertex).copied().unwrap_or(false)
    }
}

/// Presents `A/AeA` where `e` is the sum of the killed vertex idempotents.
pub fn contract(p: &Presentation, k: &KillSet) -> Result<Presentation> {
    let q = &p.quiver;
    if k.killed.len() != q.vertices.len() {
        return Err(Error::InvalidKillSet("kill set built for another quiver"));
    }
    let mut vmap = alloc::vec![None; q.vertices.len()];
    let mut vertices = Vec::new();
    for (i, v) in q.vertices.iter().enumerate() {
        if !k.contains(i) {
            vmap[i] = Some(vertices.len());
            vertices.push(v.clone());
        }
    }
    let mut amap = alloc::vec![None; q.arrows.len()];
    let mut arrows = Vec::new();
    for (i, a) in q.arrows.iter().enumerate() {
        if let (Some(s), Some(t)) = (vmap[a.source], vmap[a.target]) {
            amap[i] = Some(arrows.len() as u32);
            arrows.push(Arrow {
                name: a.name.clone(),
                source: s,
                target: t,
            });
        }
    }
    let alphabet = Alphabet::new(arrows.iter().map(|a| a.name.clone()))?;
    let relations = p
        .relations
        .iter()
        .map(|r| r.relabel(&alphabet, &amap))
        .filter(|r| !r.is_zero())
        .collect();
    Ok(Presentation {
        name: format!("{}_con", p.name),
        quiver: Quiver { vertices, arrows },
        alphabet,
        relations,
        composition: p.composition,
    })
}

/// Adds the commutator of every pair of distinct loops.
pub fn abelianize(p: &Presentation) -> Result<Presentation> {
    if !p.quiver.is_single_vertex() {
        return Err(Error::NotLocal);
    }
    let n = p.alphabet.len() as u32;
    let mut relations = p.relations.clone();
    for a in 0..n {
        for b in (a + 1)..n {
            let x = NcPoly::generator(&p.alphabet, a);
            let y = NcPoly::generator(&p.alphabet, b);
            relations.push(x.commutator(&y)?);
        }
    }
    Ok(Presentation {
        name: format!("{}_ab", p.name),
        quiver: p.quiver.clone(),
        alphabet: p.alphabet.clone(),
        relations,
        composition: p.composition,
    })
}

/// Named families of presentations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Builtin {
    Pagoda,
    Laufer,
    Francia,
    FranciaNef,
    QuantumCusp,
    Atiyah,
    Free2,
}

impl Builtin {
    pub const ALL: [Builtin; 7] = [
        Builtin::Pagoda,
        Builtin::Laufer,
        Builtin::Francia,
        Builtin::FranciaNef,
        Builtin::QuantumCusp,
        Builtin::Atiyah,
        Builtin::Free2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Builtin::Pagoda => "pagoda",
            Builtin::Laufer => "laufer",
            Builtin::Francia => "francia",
            Builtin::FranciaNef => "francia_nef",
            Builtin::QuantumCusp => "quantum_cusp",
            Builtin::Atiyah => "atiyah",
            Builtin::Free2 => "free2",
        }
    }

    pub fn from_name(name: &str) -> Result<Self> {
        Builtin::ALL
            .into_iter()
            .find(|b| b.name() == name)
            .ok_or_else(|| Error::UnknownBuiltin(name.to_string()))
    }

    /// Whether the family depends on `n`.
    pub fn is_parametric(self) -> bool {
        matches!(self, Builtin::Pagoda | Builtin::Laufer | Builtin::QuantumCusp)
    }

    /// Vertex to kill to reach the contraction, if the presentation has
    /// more than one vertex.
    pub fn kill_vertex(self) -> Option<&'static str> {
        match self {
            Builtin::Pagoda | Builtin::Laufer | Builtin::Francia | Builtin::FranciaNef | Builtin::Atiyah => Some("R"),
            Builtin::QuantumCusp | Builtin::Free2 => None,
        }
    }
}

/// Parses `name` or `name:n`; a missing parameter means `n = 1`.
pub fn builtin_spec(spec: &str) -> Result<Presentation> {
    let (name, n) = match spec.split_once(':') {
        Some((name, n)) => (
            name,
            n.trim()
                .parse::<u32>()
                .map_err(|_| Error::UnknownBuiltin(spec.to_string()))?,
        ),
        None => (spec, 1),
    };
    builtin(Builtin::from_name(name.trim())?, n)
}

pub fn builtin(which: Builtin, n: u32) -> Result<Presentation> {
    if n == 0 {
        return Err(Error::ZeroParameter);
    }
    let p = match which {
        Builtin::Pagoda => pagoda(n)?,
        Builtin::Laufer => laufer(n)?,
        Builtin::Francia => francia()?,
        Builtin::FranciaNef => francia_nef()?,
        Builtin::QuantumCusp => quantum_cusp(n)?,
        Builtin::Atiyah => conifold("atiyah")?,
        Builtin::Free2 => Presentation::new("free2", Quiver::bouquet("v", &["x", "y"])?, Vec::new())?,
    };
    debug_assert!(p.validate().is_ok(), "builtin {} fails validation", p.name);
    Ok(p)
}

/// Two vertices, two arrows each way, commutation relations of the
/// conifold quiver.
fn conifold(name: &str) -> Result<Presentation> {
    let q = Quiver::new(
        ["R", "N"],
        &[("a1", "R", "N"), ("a2", "R", "N"), ("b1", "N", "R"), ("b2", "N", "R")],
    )?;
    Presentation::from_named(
        name,
        q,
        &[
            &[(1, &["a1", "b2", "a2"]), (-1, &["a2", "b2", "a1"])],
            &[(1, &["a1", "b1", "a2"]), (-1, &["a2", "b1", "a1"])],
            &[(1, &["b1", "a2", "b2"]), (-1, &["b2", "a2", "b1"])],
            &[(1, &["b1", "a1", "b2"]), (-1, &["b2", "a1", "b1"])],
        ],
    )
}

fn power(letter: &'static str, k: u32) -> Vec<&'static str> {
    alloc::vec![letter; k as usize]
}

fn pagoda(n: u32) -> Result<Presentation> {
    if n == 1 {
        // The loops equal (a1 b1 - a2 b2)/2 and (b1 a1 - b2 a2)/2; substituting
        // leaves the conifold relations.
        return conifold("pagoda_1");
    }
    let q = Quiver::new(
        ["R", "N"],
        &[
            ("a1", "R", "N"),
            ("a2", "R", "N"),
            ("b1", "N", "R"),
            ("b2", "N", "R"),
            ("y1", "R", "R"),
            ("y2", "N", "N"),
        ],
    )?;
    let y1n = power("y1", n);
    let y2n = power("y2", n);
    Presentation::from_named(
        &format!("pagoda_{n}"),
        q,
        &[
            &[(1, &["y1", "a1"]), (-1, &["a1", "y2"])],
            &[(1, &["y1", "a2"]), (-1, &["a2", "y2"])],
            &[(1, &["y2", "b1"]), (-1, &["b1", "y1"])],
            &[(1, &["y2", "b2"]), (-1, &["b2", "y1"])],
            &[(2, &y1n), (-1, &["a1", "b1"]), (1, &["a2", "b2"])],
            &[(2, &y2n), (-1, &["b1", "a1"]), (1, &["b2", "a2"])],
        ],
    )
}

fn laufer(n: u32) -> Result<Presentation> {
    let sign: i64 = if n % 2 == 1 { 1 } else { -1 };
    let y_top = power("y", 2 * n + 1);
    if n == 1 {
        // The loop u at R equals -ab and is eliminated.
        let q = Quiver::new(
            ["R", "N"],
            &[("a", "R", "N"), ("b", "N", "R"), ("x", "N", "N"), ("y", "N", "N")],
        )?;
        return Presentation::from_named(
            "laufer_1",
            q,
            &[
                &[(1, &["a", "y", "y"]), (-1, &["a", "b", "a"])],
                &[(1, &["y", "y", "b"]), (-1, &["b", "a", "b"])],
                &[(1, &["x", "y"]), (1, &["y", "x"])],
                &[(1, &["x", "x"]), (1, &["y", "b", "a"]), (1, &["b", "a", "y"]), (-sign, &y_top)],
            ],
        );
    }
    let q = Quiver::new(
        ["R", "N"],
        &[
            ("a", "R", "N"),
            ("b", "N", "R"),
            ("u", "R", "R"),
            ("x", "N", "N"),
            ("y", "N", "N"),
        ],
    )?;
    let un = power("u", n);
    Presentation::from_named(
        &format!("laufer_{n}"),
        q,
        &[
            &[(1, &["a", "y", "y"]), (1, &["u", "a"])],
            &[(1, &["y", "y", "b"]), (1, &["b", "u"])],
            &[(1, &["a", "b"]), (1, &un)],
            &[(1, &["x", "y"]), (1, &["y", "x"])],
            &[(1, &["x", "x"]), (1, &["y", "b", "a"]), (1, &["b", "a", "y"]), (-sign, &y_top)],
        ],
    )
}

fn quantum_cusp(n: u32) -> Result<Presentation> {
    let y_top = power("y", 2 * n + 1);
    Presentation::from_named(
        &format!("quantum_cusp_{n}"),
        Quiver::bouquet("N", &["x", "y"])?,
        &[
            &[(1, &["x", "y"]), (1, &["y", "x"])],
            &[(1, &["x", "x"]), (-1, &y_top)],
        ],
    )
}

/// `End(R + S)` for `S = (c2, d^2)` on the rank-one side of the flip; all
/// arrows are fractions in the function field, so every relation below is
/// an identity of fractions.
fn francia() -> Result<Presentation> {
    let q = Quiver::new(
        ["R", "S"],
        &[
            ("c2", "R", "S"),
            ("d2", "R", "S"),
            ("i", "S", "R"),
            ("p", "S", "R"),
            ("q", "S", "R"),
            ("c1r", "R", "R"),
            ("dr", "R", "R"),
            ("c1", "S", "S"),
            ("d", "S", "S"),
        ],
    )?;
    Presentation::from_named(
        "francia",
        q,
        &[
            // loops at S and the paths through R they equal
            &[(1, &["c1", "c1"]), (-1, &["q", "d2"])],
            &[(1, &["c1", "d"]), (-1, &["p", "d2"])],
            &[(1, &["d", "d"]), (-1, &["i", "d2"])],
            &[(1, &["c1", "d"]), (-1, &["d", "c1"])],
            // loops at R
            &[(1, &["c1r", "dr"]), (-1, &["dr", "c1r"])],
            &[(1, &["d2", "i"]), (-1, &["dr", "dr"])],
            &[(1, &["d2", "p"]), (-1, &["c1r", "dr"])],
            &[(1, &["d2", "q"]), (-1, &["c1r", "c1r"])],
            // multiplication commutes with the module maps
            &[(1, &["c1r", "c2"]), (-1, &["c2", "c1"])],
            &[(1, &["dr", "c2"]), (-1, &["c2", "d"])],
            &[(1, &["c1r", "d2"]), (-1, &["d2", "c1"])],
            &[(1, &["dr", "d2"]), (-1, &["d2", "d"])],
            &[(1, &["c1", "i"]), (-1, &["i", "c1r"])],
            &[(1, &["d", "i"]), (-1, &["i", "dr"])],
            &[(1, &["c1", "p"]), (-1, &["p", "c1r"])],
            &[(1, &["d", "p"]), (-1, &["p", "dr"])],
            &[(1, &["c1", "q"]), (-1, &["q", "c1r"])],
            &[(1, &["d", "q"]), (-1, &["q", "dr"])],
        ],
    )
}

/// `End(R + S)` for `S = (c1, d)` on the nef side of the flip.
fn francia_nef() -> Result<Presentation> {
    let q = Quiver::new(
        ["R", "S"],
        &[
            ("c1", "R", "S"),
            ("d", "R", "S"),
            ("i", "S", "R"),
            ("p", "S", "R"),
            ("q", "S", "R"),
        ],
    )?;
    Presentation::from_named(
        "francia_nef",
        q,
        &[
            &[(1, &["p", "c1"]), (-1, &["q", "d"])],
            &[(1, &["c1", "p"]), (-1, &["d", "q"])],
        ],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    #[test]
    fn every_builtin_validates() {
        for b in Builtin::ALL {
            for n in 1..=4 {
                let p = builtin(b, n).unwrap();
                assert_eq!(p.validate(), Ok(()), "{}", p.name());
                if let Some(v) = b.kill_vertex() {
                    let k = KillSet::new(p.quiver(), &[v]).unwrap();
                    assert_eq!(contract(&p, &k).unwrap().validate(), Ok(()));
                }
            }
        }
    }

    #[test]
    fn builtin_errors() {
        assert_eq!(builtin(Builtin::Pagoda, 0), Err(Error::ZeroParameter));
        assert!(matches!(builtin_spec("nope:2"), Err(Error::UnknownBuiltin(_))));
        assert!(builtin_spec("laufer:2").is_ok());
        assert!(builtin_spec("francia").is_ok());
    }

    #[test]
    fn pagoda_shape() {
        let p = builtin(Builtin::Pagoda, 3).unwrap();
        assert_eq!(p.quiver().vertices().len(), 2);
        assert_eq!(p.quiver().arrows().len(), 6);
        assert_eq!(p.relations().len(), 6);
        let last = &p.relations()[5];
        assert_eq!(last.to_string(), "2*y2^3 - b1*a1 + b2*a2");
    }

    #[test]
    fn pagoda_contraction_is_single_loop() {
        for n in 2..=6 {
            let p = builtin(Builtin::Pagoda, n).unwrap();
            let k = KillSet::new(p.quiver(), &["R"]).unwrap();
            let c = contract(&p, &k).unwrap();
            assert_eq!(c.quiver().vertices(), &["N".to_string()]);
            assert_eq!(c.alphabet().names(), &["y2".to_string()]);
            assert_eq!(c.relations().len(), 1);
            let expect = NcPoly::monomial(
                c.alphabet(),
                Word::power(0, n as usize),
                Rational::from_integer(2.into()),
            );
            assert_eq!(c.relations()[0], expect);
        }
    }

    #[test]
    fn pagoda_one_is_the_substituted_presentation() {
        // Substitute y1 = (a1 b1 - a2 b2)/2, y2 = (b1 a1 - b2 a2)/2 into the
        // general commutation relations and compare with the hard-coded n = 1 set.
        let general = {
            let q = Quiver::new(
                ["R", "N"],
                &[
                    ("a1", "R", "N"),
                    ("a2", "R", "N"),
                    ("b1", "N", "R"),
                    ("b2", "N", "R"),
                    ("y1", "R", "R"),
                    ("y2", "N", "N"),
                ],
            )
            .unwrap();
            Presentation::from_named(
                "g",
                q,
                &[
                    &[(1, &["y1", "a1"]), (-1, &["a1", "y2"])],
                    &[(1, &["y1", "a2"]), (-1, &["a2", "y2"])],
                    &[(1, &["y2", "b1"]), (-1, &["b1", "y1"])],
                    &[(1, &["y2", "b2"]), (-1, &["b2", "y1"])],
                ],
            )
            .unwrap()
        };
        let reduced = builtin(Builtin::Pagoda, 1).unwrap();
        let t = reduced.alphabet();
        let half = Rational::new(1.into(), 2.into());
        let g = |i| NcPoly::generator(t, i);
        let y1 = (&(&g(0) * &g(2)) - &(&g(1) * &g(3))).scale(&half);
        let y2 = (&(&g(2) * &g(0)) - &(&g(3) * &g(1))).scale(&half);
        let images = [g(0), g(1), g(2), g(3), y1, y2];
        let two = Rational::from_integer(2.into());
        let expected_order = [0, 1, 2, 3];
        for (i, r) in general.relations().iter().enumerate() {
            let s = r.substitute(&images, t).unwrap().scale(&two);
            assert_eq!(s, reduced.relations()[expected_order[i]], "relation {i}");
        }
    }

    #[test]
    fn laufer_contraction() {
        for n in 1..=3u32 {
            let p = builtin(Builtin::Laufer, n).unwrap();
            let k = KillSet::new(p.quiver(), &["R"]).unwrap();
            let c = contract(&p, &k).unwrap();
            assert_eq!(c.alphabet().names(), &["x".to_string(), "y".to_string()]);
            let sign: i64 = if n % 2 == 1 { 1 } else { -1 };
            let top = power("y", 2 * n + 1);
            let a = c.alphabet();
            let want = [
                NcPoly::from_named(a, &[(1, &["x", "y"]), (1, &["y", "x"])]),
                NcPoly::from_named(a, &[(1, &["x", "x"]), (-sign, &top)]),
            ];
            assert_eq!(c.relations(), &want);
        }
    }

    #[test]
    fn francia_contraction() {
        let p = builtin(Builtin::Francia, 1).unwrap();
        let k = KillSet::new(p.quiver(), &["R"]).unwrap();
        let c = contract(&p, &k).unwrap();
        let a = c.alphabet();
        assert_eq!(a.names(), &["c1".to_string(), "d".to_string()]);
        let want = [
            NcPoly::from_named(a, &[(1, &["c1", "c1"])]),
            NcPoly::from_named(a, &[(1, &["c1", "d"])]),
            NcPoly::from_named(a, &[(1, &["d", "d"])]),
            NcPoly::from_named(a, &[(1, &["c1", "d"]), (-1, &["d", "c1"])]),
        ];
        assert_eq!(c.relations(), &want);
        let nef = builtin(Builtin::FranciaNef, 1).unwrap();
        let c = contract(&nef, &KillSet::new(nef.quiver(), &["R"]).unwrap()).unwrap();
        assert!(c.alphabet().is_empty());
        assert!(c.relations().is_empty());
    }

    #[test]
    fn contraction_away_from_relations_is_arrow_restriction() {
        let q = Quiver::new(
            ["A", "B", "C"],
            &[("x", "A", "A"), ("y", "A", "A"), ("f", "A", "B"), ("g", "C", "B")],
        )
        .unwrap();
        let p = Presentation::from_named("t", q, &[&[(1, &["x", "y"]), (-1, &["y", "x"])]]).unwrap();
        let c = contract(&p, &KillSet::new(p.quiver(), &["C"]).unwrap()).unwrap();
        assert_eq!(c.alphabet().names(), &["x".to_string(), "y".to_string(), "f".to_string()]);
        assert_eq!(c.relations().len(), 1);
        assert_eq!(c.relations()[0].to_string(), "x*y - y*x");
    }

    #[test]
    fn validation_errors() {
        let q = Quiver::new(["R", "N"], &[("a", "R", "N")]).unwrap();
        let p = Presentation::from_named("t", q, &[&[(1, &["a", "a"])]]).unwrap();
        let d = p.validate().unwrap_err();
        assert!(matches!(d.0[0], Diagnostic::NonComposable { .. }));

        let q = Quiver::bouquet("v", &["x", "y"]).unwrap();
        let p = Presentation::from_named("t", q, &[&[(1, &["x"]), (-1, &["y"])]]).unwrap();
        let d = p.validate().unwrap_err();
        assert!(d.0.iter().all(|d| matches!(d, Diagnostic::ShortTerm { .. })));

        let q = Quiver::new(["R", "N"], &[("a", "R", "N"), ("b", "N", "R")]).unwrap();
        let p = Presentation::from_named("t", q, &[&[(1, &["a", "b"]), (1, &["b", "a"])]]).unwrap();
        let d = p.validate().unwrap_err();
        assert_eq!(d.0, alloc::vec![Diagnostic::MixedEndpoints { relation: 0 }]);
    }

    #[test]
    fn kill_set_errors() {
        let q = Quiver::new(["R", "N"], &[]).unwrap();
        assert!(KillSet::new(&q, &[]).is_err());
        assert!(KillSet::new(&q, &["R", "N"]).is_err());
        assert!(matches!(KillSet::new(&q, &["Z"]), Err(Error::UnknownVertex(_))));
    }

    #[test]
    fn abelianize_examples() {
        let p = builtin(Builtin::QuantumCusp, 1).unwrap();
        let ab = abelianize(&p).unwrap();
        let a = ab.alphabet();
        assert_eq!(ab.relations().len(), 3);
        assert_eq!(
            ab.relations()[2],
            NcPoly::from_named(a, &[(1, &["x", "y"]), (-1, &["y", "x"])])
        );

        let one = Presentation::from_named(
            "y",
            Quiver::bouquet("v", &["y"]).unwrap(),
            &[&[(1, &["y", "y", "y"])]],
        )
        .unwrap();
        assert_eq!(abelianize(&one).unwrap().relations(), one.relations());

        let free = builtin(Builtin::Free2, 1).unwrap();
        assert_eq!(abelianize(&free).unwrap().relations().len(), 1);

        assert_eq!(abelianize(&builtin(Builtin::Laufer, 2).unwrap()), Err(Error::NotLocal));
    }
}
