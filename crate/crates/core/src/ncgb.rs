//! Noncommutative Gröbner bases by overlap completion.
//!
//! Completion is degree-truncated: overlap ambiguities whose overlap word is
//! longer than the cap are recorded but not resolved. A quotient is certified
//! finite once some degree up to the cap has no standard monomials and no
//! ambiguity was left unresolved; the leading words then form a finite
//! antichain whose every overlap has been checked, which is exactly the
//! Diamond Lemma hypothesis.
//!
//! Quivers are handled by grading words by their endpoints: a word that is
//! not a composable path is zero, and each vertex contributes a trivial path
//! of degree zero to the standard monomials.

use alloc::collections::{BTreeMap, BinaryHeap};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::{Ordering, Reverse};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::freealg::{find_slice, Alphabet, MonomialOrder, NcPoly, Word};
use crate::quiverpres::Presentation;
use crate::Rational;

/// Hard ceiling on the degree cap used by [`quotient`] unless overridden.
pub const DEFAULT_CEILING: usize = 64;

/// Alive-rule limit for a single completion.
const RULE_BUDGET: usize = 20_000;

/// Standard-monomial enumeration stops past this many words.
const WORD_BUDGET: usize = 200_000;

/// Word over generator ranks; ordered degree-lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Key(Vec<u32>);

impl Ord for Key {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Key {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

type Poly = BTreeMap<Key, Rational>;

fn add_to(p: &mut Poly, w: Key, c: Rational) {
    if c.is_zero() {
        return;
    }
    match p.entry(w) {
        alloc::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        alloc::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

fn join(parts: &[&[u32]]) -> Key {
    let mut v = Vec::with_capacity(parts.iter().map(|p| p.len()).sum());
    for p in parts {
        v.extend_from_slice(p);
    }
    Key(v)
}

/// Source and target vertex of every generator, indexed by rank.
#[derive(Debug, Clone, PartialEq, Eq)]
struct PathShape {
    source: Vec<u32>,
    target: Vec<u32>,
    vertices: usize,
}

impl PathShape {
    fn free(n: usize) -> Self {
        PathShape {
            source: alloc::vec![0; n],
            target: alloc::vec![0; n],
            vertices: 1,
        }
    }

    fn composable(&self, w: &[u32]) -> bool {
        self.vertices == 1 || w.windows(2).all(|p| self.target[p[0] as usize] == self.source[p[1] as usize])
    }
}

/// Letter translation between generator indices and ranks.
#[derive(Debug, Clone)]
struct Ranking {
    rank: Vec<u32>,
    letter: Vec<u32>,
}

impl Ranking {
    fn new(ord: &MonomialOrder) -> Self {
        let n = ord.alphabet_len();
        let rank: Vec<u32> = (0..n as u32).map(|g| ord.rank(g)).collect();
        let mut letter = alloc::vec![0; n];
        for (g, &r) in rank.iter().enumerate() {
            letter[r as usize] = g as u32;
        }
        Ranking { rank, letter }
    }

    fn key(&self, w: &Word) -> Key {
        Key(w.letters().iter().map(|&l| self.rank[l as usize]).collect())
    }

    fn word(&self, k: &Key) -> Word {
        Word::new(k.0.iter().map(|&r| self.letter[r as usize]).collect())
    }

    fn poly(&self, p: &NcPoly) -> Poly {
        p.terms().map(|(w, c)| (self.key(w), c.clone())).collect()
    }

    fn to_nc(&self, alphabet: &Arc<Alphabet>, p: &Poly) -> NcPoly {
        NcPoly::from_terms(alphabet, p.iter().map(|(k, c)| (self.word(k), c.clone())))
    }
}

/// Monic rewriting rule `lead -> -tail`.
#[derive(Debug, Clone)]
struct Rule {
    lead: Key,
    tail: Vec<(Key, Rational)>,
}

impl Rule {
    fn to_poly(&self) -> Poly {
        let mut p: Poly = self.tail.iter().cloned().collect();
        p.insert(self.lead.clone(), Rational::one());
        p
    }
}

/// Rules indexed by leading word.
#[derive(Debug, Clone, Default)]
struct RuleSet {
    rules: Vec<Option<Rule>>,
    index: BTreeMap<Vec<u32>, usize>,
    lengths: BTreeMap<usize, usize>,
}

impl RuleSet {
    fn insert(&mut self, rule: Rule) -> usize {
        let id = self.rules.len();
        self.index.insert(rule.lead.0.clone(), id);
        *self.lengths.entry(rule.lead.0.len()).or_insert(0) += 1;
        self.rules.push(Some(rule));
        id
    }

    fn remove(&mut self, id: usize) -> Option<Rule> {
        let rule = self.rules[id].take()?;
        self.index.remove(&rule.lead.0);
        let n = rule.lead.0.len();
        if let Some(c) = self.lengths.get_mut(&n) {
            *c -= 1;
            if *c == 0 {
                self.lengths.remove(&n);
            }
        }
        Some(rule)
    }

    fn alive(&self) -> impl Iterator<Item = (usize, &Rule)> {
        self.rules.iter().enumerate().filter_map(|(i, r)| r.as_ref().map(|r| (i, r)))
    }

    fn alive_count(&self) -> usize {
        self.index.len()
    }

    /// Order-largest leading word occurring in `w`, at its leftmost position.
    fn find_reducer(&self, w: &[u32]) -> Option<(usize, usize)> {
        for (&len, _) in self.lengths.iter().rev() {
            if len > w.len() {
                continue;
            }
            let mut best: Option<(&[u32], usize, usize)> = None;
            for pos in 0..=(w.len() - len) {
                let s = &w[pos..pos + len];
                if let Some(&id) = self.index.get(s) {
                    if best.map_or(true, |(b, _, _)| s > b) {
                        best = Some((s, pos, id));
                    }
                }
            }
            if let Some((_, pos, id)) = best {
                return Some((id, pos));
            }
        }
        None
    }

    fn is_reducible(&self, w: &[u32]) -> bool {
        self.lengths.keys().any(|&len| {
            len <= w.len() && (0..=(w.len() - len)).any(|pos| self.index.contains_key(&w[pos..pos + len]))
        })
    }

    fn reduce(&self, mut p: Poly, shape: &PathShape) -> Poly {
        let mut out = Poly::new();
        while let Some((w, c)) = p.pop_last() {
            if !shape.composable(&w.0) {
                continue;
            }
            match self.find_reducer(&w.0) {
                Some((id, pos)) => {
                    let rule = self.rules[id].as_ref().expect("indexed rule is alive");
                    let (u, v) = (&w.0[..pos], &w.0[pos + rule.lead.0.len()..]);
                    for (t, tc) in &rule.tail {
                        add_to(&mut p, join(&[u, &t.0, v]), -(&c * tc));
                    }
                }
                None => {
                    out.insert(w, c);
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Ambiguity {
    degree: usize,
    seq: u64,
    left: usize,
    right: usize,
    overlap: usize,
}

struct Completion {
    shape: PathShape,
    set: RuleSet,
    queue: BinaryHeap<Reverse<Ambiguity>>,
    skipped: Vec<(usize, usize)>,
    cap: usize,
    seq: u64,
}

impl Completion {
    fn new(shape: PathShape, cap: usize) -> Self {
        Completion {
            shape,
            set: RuleSet::default(),
            queue: BinaryHeap::new(),
            skipped: Vec::new(),
            cap,
            seq: 0,
        }
    }

    fn overlaps(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.set.rules[a].as_ref().unwrap(), self.set.rules[b].as_ref().unwrap());
        if ra.tail.is_empty() && rb.tail.is_empty() {
            // monomial against monomial: every S-element is zero
            return;
        }
        let (la, lb) = (ra.lead.0.len(), rb.lead.0.len());
        for k in 1..la.min(lb) {
            let ra = &self.set.rules[a].as_ref().unwrap().lead.0;
            let rb = &self.set.rules[b].as_ref().unwrap().lead.0;
            if ra[la - k..] != rb[..k] {
                continue;
            }
            let degree = la + lb - k;
            if degree > self.cap {
                self.skipped.push((a, b));
                continue;
            }
            self.seq += 1;
            self.queue.push(Reverse(Ambiguity {
                degree,
                seq: self.seq,
                left: a,
                right: b,
                overlap: k,
            }));
        }
    }

    fn adjoin(&mut self, p: Poly) -> Result<()> {
        let mut pending = alloc::vec![p];
        while let Some(p) = pending.pop() {
            let r = self.set.reduce(p, &self.shape);
            let Some((lead, lc)) = r.last_key_value() else {
                continue;
            };
            let lead = lead.clone();
            let inv = Rational::one() / lc;
            let tail = r
                .iter()
                .rev()
                .skip(1)
                .map(|(k, c)| (k.clone(), c * &inv))
                .collect();
            let stale: Vec<usize> = self
                .set
                .alive()
                .filter(|(_, rule)| find_slice(&rule.lead.0, &lead.0).is_some())
                .map(|(i, _)| i)
                .collect();
            for id in stale {
                let old = self.set.remove(id).unwrap();
                pending.push(old.to_poly());
            }
            let id = self.set.insert(Rule { lead, tail });
            if self.set.alive_count() > RULE_BUDGET {
                return Err(Error::GroebnerBudget { cap: self.cap });
            }
            let others: Vec<usize> = self.set.alive().map(|(i, _)| i).collect();
            for j in others {
                self.overlaps(id, j);
                if j != id {
                    self.overlaps(j, id);
                }
            }
        }
        Ok(())
    }

    fn s_element(&self, amb: &Ambiguity) -> Option<Poly> {
        let a = self.set.rules[amb.left].as_ref()?;
        let b = self.set.rules[amb.right].as_ref()?;
        let u = &a.lead.0[..a.lead.0.len() - amb.overlap];
        let v = &b.lead.0[amb.overlap..];
        let mut s = Poly::new();
        for (t, c) in &a.tail {
            add_to(&mut s, join(&[&t.0, v]), c.clone());
        }
        for (t, c) in &b.tail {
            add_to(&mut s, join(&[u, &t.0]), -c.clone());
        }
        Some(s)
    }

    fn run(mut self, generators: Vec<Poly>) -> Result<(RuleSet, usize)> {
        for g in generators {
            self.adjoin(g)?;
        }
        while let Some(Reverse(amb)) = self.queue.pop() {
            if let Some(s) = self.s_element(&amb) {
                self.adjoin(s)?;
            }
        }
        // Tail interreduction; leading words are already an antichain.
        let ids: Vec<usize> = self.set.alive().map(|(i, _)| i).collect();
        for id in ids {
            let rule = self.set.rules[id].as_ref().unwrap();
            let tail: Poly = rule.tail.iter().cloned().collect();
            let reduced = self.set.reduce(tail, &self.shape);
            self.set.rules[id].as_mut().unwrap().tail = reduced.into_iter().rev().collect();
        }
        let unresolved = self
            .skipped
            .iter()
            .filter(|(a, b)| self.set.rules[*a].is_some() && self.set.rules[*b].is_some())
            .count();
        Ok((self.set, unresolved))
    }
}

/// Interreduced, monic generating set of a two-sided ideal, complete for
/// every overlap ambiguity up to `degree_cap`.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    alphabet: Arc<Alphabet>,
    order: MonomialOrder,
    ranking: Ranking,
    shape: PathShape,
    set: RuleSet,
    degree_cap: usize,
    unresolved: usize,
}

impl GroebnerBasis {
    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn degree_cap(&self) -> usize {
        self.degree_cap
    }

    /// Every ambiguity of degree at most the cap resolves to zero.
    pub fn complete_below_cap(&self) -> bool {
        true
    }

    /// Number of ambiguities left unexamined because they exceed the cap.
    pub fn unresolved_ambiguities(&self) -> usize {
        self.unresolved
    }

    /// All ambiguities resolved; the basis is a genuine Gröbner basis.
    pub fn is_fully_resolved(&self) -> bool {
        self.unresolved == 0
    }

    fn sorted_rules(&self) -> Vec<&Rule> {
        let mut v: Vec<&Rule> = self.set.alive().map(|(_, r)| r).collect();
        v.sort_by(|a, b| a.lead.cmp(&b.lead));
        v
    }

    pub fn len(&self) -> usize {
        self.set.alive_count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Monic elements ordered by increasing leading word.
    pub fn elements(&self) -> Vec<NcPoly> {
        self.sorted_rules()
            .into_iter()
            .map(|r| self.ranking.to_nc(&self.alphabet, &r.to_poly()))
            .collect()
    }

    pub fn leading_words(&self) -> Vec<Word> {
        self.sorted_rules()
            .into_iter()
            .map(|r| self.ranking.word(&r.lead))
            .collect()
    }

    pub fn is_standard(&self, w: &Word) -> bool {
        let k = self.ranking.key(w);
        self.shape.composable(&k.0) && !self.set.is_reducible(&k.0)
    }

    /// Standard monomials by degree together with a finiteness verdict.
    pub fn standard_monomials(&self) -> StandardMonomials {
        standard_monomials(self)
    }
}

fn check_generators(gens: &[NcPoly], alphabet: &Arc<Alphabet>, ord: &MonomialOrder, cap: usize) -> Result<()> {
    if ord.alphabet_len() != alphabet.len() {
        return Err(Error::AlphabetMismatch);
    }
    for g in gens {
        if g.alphabet().names() != alphabet.names() {
            return Err(Error::AlphabetMismatch);
        }
        match g.degree() {
            None => return Err(Error::ZeroGenerator),
            Some(d) if d > cap => return Err(Error::CapTooSmall { cap, degree: d }),
            _ => {}
        }
    }
    Ok(())
}

fn complete_shaped(
    generators: &[NcPoly],
    alphabet: &Arc<Alphabet>,
    ord: &MonomialOrder,
    shape_of: impl Fn(&Ranking) -> PathShape,
    cap: usize,
) -> Result<GroebnerBasis> {
    check_generators(generators, alphabet, ord, cap)?;
    let ranking = Ranking::new(ord);
    let shape = shape_of(&ranking);
    let polys = generators.iter().map(|g| ranking.poly(g)).collect();
    let (set, unresolved) = Completion::new(shape.clone(), cap).run(polys)?;
    Ok(GroebnerBasis {
        alphabet: alphabet.clone(),
        order: ord.clone(),
        ranking,
        shape,
        set,
        degree_cap: cap,
        unresolved,
    })
}

/// Completes an ideal of the free algebra on the generators' alphabet.
pub fn complete(generators: &[NcPoly], ord: &MonomialOrder, cap: usize) -> Result<GroebnerBasis> {
    let alphabet = match generators.first() {
        Some(g) => g.alphabet().clone(),
        None => return Err(Error::ZeroGenerator),
    };
    complete_in(generators, &alphabet, ord, cap)
}

/// Like [`complete`] but with an explicit alphabet, so the generator list
/// may be empty.
pub fn complete_in(
    generators: &[NcPoly],
    alphabet: &Arc<Alphabet>,
    ord: &MonomialOrder,
    cap: usize,
) -> Result<GroebnerBasis> {
    complete_shaped(generators, alphabet, ord, |_| PathShape::free(alphabet.len()), cap)
}

/// Completes the relation ideal of a presentation inside its path algebra.
pub fn complete_presentation(p: &Presentation, ord: &MonomialOrder, cap: usize) -> Result<GroebnerBasis> {
    let q = p.quiver();
    complete_shaped(
        p.relations(),
        p.alphabet(),
        ord,
        |ranking| {
            let n = q.arrows().len();
            let mut source = alloc::vec![0; n];
            let mut target = alloc::vec![0; n];
            for (g, a) in q.arrows().iter().enumerate() {
                let r = ranking.rank[g] as usize;
                source[r] = a.source as u32;
                target[r] = a.target as u32;
            }
            PathShape {
                source,
                target,
                vertices: q.vertices().len(),
            }
        },
        cap,
    )
}

/// Fully reduced representative of `p` modulo the basis.
pub fn normal_form(p: &NcPoly, g: &GroebnerBasis) -> Result<NcPoly> {
    if p.alphabet().names() != g.alphabet.names() {
        return Err(Error::AlphabetMismatch);
    }
    let r = g.set.reduce(g.ranking.poly(p), &g.shape);
    Ok(g.ranking.to_nc(&g.alphabet, &r))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Finite(usize),
    InfiniteOrUnknown { cap: usize },
}

impl Verdict {
    pub fn dimension(self) -> Option<usize> {
        match self {
            Verdict::Finite(d) => Some(d),
            Verdict::InfiniteOrUnknown { .. } => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FinitenessCertificate {
    pub verdict: Verdict,
    /// First degree without standard monomials, when finite.
    pub witness: Option<usize>,
}

/// Standard monomials grouped by degree.
///
/// Degree zero holds one empty word per vertex (the trivial paths). Within a
/// degree, words are listed in increasing monomial order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardMonomials {
    pub by_degree: Vec<Vec<Word>>,
    pub certificate: FinitenessCertificate,
}

impl StandardMonomials {
    pub fn count(&self) -> usize {
        self.by_degree.iter().map(Vec::len).sum()
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.by_degree.iter().flatten()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.by_degree.iter().rposition(|d| !d.is_empty())
    }
}

/// Enumerates words avoiding every leading word, degree by degree up to the
/// cap. Standard words are closed under prefixes, so each degree is built by
/// extending the previous one and testing suffixes only.
pub fn standard_monomials(g: &GroebnerBasis) -> StandardMonomials {
    let shape = &g.shape;
    let n = g.alphabet.len() as u32;
    let lengths: Vec<usize> = g.set.lengths.keys().copied().collect();
    let mut layers: Vec<Vec<(Vec<u32>, u32)>> =
        alloc::vec![(0..shape.vertices as u32).map(|v| (Vec::new(), v)).collect()];
    let mut total = layers[0].len();
    let mut witness = None;
    let mut exhausted = false;
    for d in 1..=g.degree_cap {
        let mut next = Vec::new();
        for (w, end) in layers.last().unwrap() {
            for r in 0..n {
                if shape.vertices > 1 && shape.source[r as usize] != *end {
                    continue;
                }
                let mut cand = w.clone();
                cand.push(r);
                let bad = lengths
                    .iter()
                    .any(|&l| l <= cand.len() && g.set.index.contains_key(&cand[cand.len() - l..]));
                if !bad {
                    next.push((cand, shape.target[r as usize]));
                }
            }
        }
        total += next.len();
        let empty = next.is_empty();
        layers.push(next);
        if empty {
            witness = Some(d);
            break;
        }
        if total > WORD_BUDGET {
            exhausted = true;
            break;
        }
    }
    if witness.is_some() {
        layers.pop();
    }
    let finite = witness.is_some() && !exhausted && g.is_fully_resolved();
    let by_degree = layers
        .into_iter()
        .map(|layer| {
            let mut keys: Vec<Key> = layer.into_iter().map(|(w, _)| Key(w)).collect();
            keys.sort();
            keys.iter().map(|k| g.ranking.word(k)).collect()
        })
        .collect::<Vec<Vec<Word>>>();
    let certificate = if finite {
        FinitenessCertificate {
            verdict: Verdict::Finite(by_degree.iter().map(Vec::len).sum()),
            witness,
        }
    } else {
        FinitenessCertificate {
            verdict: Verdict::InfiniteOrUnknown { cap: g.degree_cap },
            witness: None,
        }
    };
    StandardMonomials {
        by_degree,
        certificate,
    }
}

/// Completed relation ideal and its standard monomials.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub basis: GroebnerBasis,
    pub monomials: StandardMonomials,
}

impl Quotient {
    pub fn verdict(&self) -> Verdict {
        self.monomials.certificate.verdict
    }
}

/// Caps tried by [`quotient`]: `2·max degree + 2`, doubled up to `ceiling`.
pub fn cap_schedule(max_degree: usize, ceiling: usize) -> Vec<usize> {
    let mut caps = Vec::new();
    let mut cap = 2 * max_degree + 2;
    while cap < ceiling {
        caps.push(cap);
        cap *= 2;
    }
    caps.push(ceiling.max(max_degree));
    caps
}

/// Completes with increasing caps until the quotient is certified finite or
/// the ceiling is reached.
pub fn quotient(p: &Presentation, ord: &MonomialOrder, ceiling: usize) -> Result<Quotient> {
    let mut last = None;
    for cap in cap_schedule(p.max_relation_degree(), ceiling) {
        let basis = match complete_presentation(p, ord, cap) {
            Ok(b) => b,
            Err(Error::GroebnerBudget { cap }) => return Err(Error::InfiniteOrUnknown { cap }),
            Err(e) => return Err(e),
        };
        let monomials = standard_monomials(&basis);
        let q = Quotient { basis, monomials };
        if let Verdict::Finite(_) = q.verdict() {
            return Ok(q);
        }
        last = Some(q);
    }
    Ok(last.expect("schedule is nonempty"))
}

/// Dimension of the presented algebra, or the cap at which the search stopped.
pub fn dimension(p: &Presentation, ord: &MonomialOrder, ceiling: usize) -> Result<Verdict> {
    match quotient(p, ord, ceiling) {
        Ok(q) => Ok(q.verdict()),
        Err(Error::InfiniteOrUnknown { cap }) => Ok(Verdict::InfiniteOrUnknown { cap }),
        Err(e) => Err(e),
    }
}
