//! Words and polynomials in the free associative algebra over the rationals.
//!
//! Letters are stored as indices into an [`Alphabet`]; a [`Word`] is a plain
//! index sequence and an [`NcPoly`] is a sparse map from words to nonzero
//! rational coefficients. Monomial orders are degree-lexicographic with a
//! configurable generator precedence.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::Rational;

/// Ordered set of generator names.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    names: Vec<String>,
}

/// A generator of the free algebra: its name and declaration position.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Generator {
    pub name: String,
    pub index: usize,
}

impl Alphabet {
    pub fn new<I, S>(names: I) -> Result<Arc<Self>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut out: Vec<String> = Vec::new();
        for name in names {
            let name = name.into();
            if out.contains(&name) {
                return Err(Error::DuplicateName(name));
            }
            out.push(name);
        }
        Ok(Arc::new(Alphabet { names: out }))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, index: u32) -> &str {
        &self.names[index as usize]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<u32> {
        self.names.iter().position(|n| n == name).map(|i| i as u32)
    }

    pub fn generators(&self) -> impl Iterator<Item = Generator> + '_ {
        self.names.iter().enumerate().map(|(index, name)| Generator {
            name: name.clone(),
            index,
        })
    }

    /// Renders a word with `*` separators and `^k` for repeated letters.
    pub fn render(&self, word: &Word) -> String {
        if word.is_empty() {
            return "1".to_string();
        }
        let mut out = String::new();
        let letters = word.letters();
        let mut i = 0;
        while i < letters.len() {
            let mut j = i;
            while j < letters.len() && letters[j] == letters[i] {
                j += 1;
            }
            if !out.is_empty() {
                out.push('*');
            }
            out.push_str(self.name(letters[i]));
            if j - i > 1 {
                out.push('^');
                out.push_str(&(j - i).to_string());
            }
            i = j;
        }
        out
    }
}

/// Finite sequence of generator indices; the empty word is the unit.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn unit() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<u32>) -> Self {
        Word(letters)
    }

    pub fn letter(l: u32) -> Self {
        Word(alloc::vec![l])
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<u32> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Position of the leftmost occurrence of `sub` inside `self`.
    pub fn find(&self, sub: &Word) -> Option<usize> {
        find_slice(&self.0, &sub.0)
    }

    pub fn contains(&self, sub: &Word) -> bool {
        self.find(sub).is_some()
    }

    pub fn power(letter: u32, k: usize) -> Word {
        Word(alloc::vec![letter; k])
    }
}

pub(crate) fn find_slice(hay: &[u32], needle: &[u32]) -> Option<usize> {
    if needle.is_empty() {
        return Some(0);
    }
    if needle.len() > hay.len() {
        return None;
    }
    hay.windows(needle.len()).position(|w| w == needle)
}

impl From<Vec<u32>> for Word {
    fn from(v: Vec<u32>) -> Self {
        Word(v)
    }
}

/// Degree-lexicographic order: longer words are larger; equal lengths compare
/// letter by letter using the generator precedence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    /// Generators from highest to lowest precedence.
    precedence: Vec<u32>,
    /// `rank[g]` is larger for higher precedence.
    rank: Vec<u32>,
}

impl MonomialOrder {
    /// Declaration order: generator 0 is the largest letter.
    pub fn deglex(n: usize) -> Self {
        Self::with_precedence((0..n as u32).collect()).expect("identity permutation")
    }

    /// `precedence` lists every generator once, highest first.
    pub fn with_precedence(precedence: Vec<u32>) -> Result<Self> {
        let n = precedence.len();
        let mut rank = alloc::vec![u32::MAX; n];
        for (pos, &g) in precedence.iter().enumerate() {
            let g = g as usize;
            if g >= n || rank[g] != u32::MAX {
                return Err(Error::BadPrecedence);
            }
            rank[g] = (n - 1 - pos) as u32;
        }
        Ok(MonomialOrder { precedence, rank })
    }

    /// Precedence given by generator names, highest first.
    pub fn from_names(alphabet: &Alphabet, names: &[&str]) -> Result<Self> {
        let mut prec = Vec::with_capacity(names.len());
        for n in names {
            prec.push(
                alphabet
                    .index_of(n)
                    .ok_or_else(|| Error::UnknownGenerator(n.to_string()))?,
            );
        }
        if prec.len() != alphabet.len() {
            return Err(Error::BadPrecedence);
        }
        Self::with_precedence(prec)
    }

    pub fn reversed(&self) -> Self {
        let mut p = self.precedence.clone();
        p.reverse();
        Self::with_precedence(p).expect("reversal of a permutation")
    }

    pub fn alphabet_len(&self) -> usize {
        self.rank.len()
    }

    pub fn precedence(&self) -> &[u32] {
        &self.precedence
    }

    pub fn rank(&self, letter: u32) -> u32 {
        self.rank[letter as usize]
    }

    fn check(&self, w: &Word) -> Result<()> {
        match w.0.iter().find(|&&l| l as usize >= self.rank.len()) {
            Some(&l) => Err(Error::LetterOutOfRange(l)),
            None => Ok(()),
        }
    }

    pub fn compare(&self, u: &Word, v: &Word) -> Result<Ordering> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.cmp_unchecked(u, v))
    }

    pub(crate) fn cmp_unchecked(&self, u: &Word, v: &Word) -> Ordering {
        u.len().cmp(&v.len()).then_with(|| {
            for (a, b) in u.0.iter().zip(&v.0) {
                if a != b {
                    return self.rank[*a as usize].cmp(&self.rank[*b as usize]);
                }
            }
            Ordering::Equal
        })
    }

    /// Human-readable description, e.g. `deglex(x>y)`.
    pub fn describe(&self, alphabet: &Alphabet) -> String {
        let mut s = String::from("deglex(");
        for (i, &g) in self.precedence.iter().enumerate() {
            if i > 0 {
                s.push('>');
            }
            s.push_str(alphabet.name(g));
        }
        s.push(')');
        s
    }
}

/// Alphabet-independent description of a generator precedence.
///
/// Named generators come first in the listed order; the rest follow in
/// declaration order. Names absent from the alphabet are ignored, so one
/// spec can be applied before and after contraction.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct OrderSpec {
    pub precedence: Vec<String>,
    pub reversed: bool,
}

impl OrderSpec {
    pub fn reversed() -> Self {
        OrderSpec {
            precedence: Vec::new(),
            reversed: true,
        }
    }

    pub fn resolve(&self, alphabet: &Alphabet) -> MonomialOrder {
        let mut prec: Vec<u32> = Vec::with_capacity(alphabet.len());
        for n in &self.precedence {
            if let Some(i) = alphabet.index_of(n) {
                if !prec.contains(&i) {
                    prec.push(i);
                }
            }
        }
        for i in 0..alphabet.len() as u32 {
            if !prec.contains(&i) {
                prec.push(i);
            }
        }
        if self.reversed {
            prec.reverse();
        }
        MonomialOrder::with_precedence(prec).expect("permutation by construction")
    }
}

/// Rational linear combination of words over a fixed alphabet.
#[derive(Debug, Clone)]
pub struct NcPoly {
    alphabet: Arc<Alphabet>,
    terms: BTreeMap<Word, Rational>,
}

impl PartialEq for NcPoly {
    fn eq(&self, other: &Self) -> bool {
        same_alphabet(&self.alphabet, &other.alphabet) && self.terms == other.terms
    }
}

impl Eq for NcPoly {}

fn same_alphabet(a: &Arc<Alphabet>, b: &Arc<Alphabet>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl NcPoly {
    pub fn zero(alphabet: &Arc<Alphabet>) -> Self {
        NcPoly {
            alphabet: alphabet.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(alphabet: &Arc<Alphabet>) -> Self {
        Self::monomial(alphabet, Word::unit(), Rational::one())
    }

    pub fn generator(alphabet: &Arc<Alphabet>, index: u32) -> Self {
        Self::monomial(alphabet, Word::letter(index), Rational::one())
    }

    pub fn monomial(alphabet: &Arc<Alphabet>, word: Word, coeff: Rational) -> Self {
        let mut p = Self::zero(alphabet);
        p.add_term(word, coeff);
        p
    }

    /// Sums the given terms; repeated words are merged and zeros dropped.
    pub fn from_terms<I>(alphabet: &Arc<Alphabet>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Word, Rational)>,
    {
        let mut p = Self::zero(alphabet);
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    /// Builds from `(integer coefficient, generator names)` pairs.
    ///
    /// Panics on an unknown name; intended for hard-coded presentations.
    pub fn from_named(alphabet: &Arc<Alphabet>, terms: &[(i64, &[&str])]) -> Self {
        Self::from_terms(
            alphabet,
            terms.iter().map(|(c, names)| {
                let letters = names
                    .iter()
                    .map(|n| {
                        alphabet
                            .index_of(n)
                            .unwrap_or_else(|| panic!("unknown generator {n}"))
                    })
                    .collect();
                (Word(letters), Rational::from_integer((*c).into()))
            }),
        )
    }

    pub(crate) fn add_term(&mut self, word: Word, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &Word) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    /// Maximum word length in the support; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Word::len).max()
    }

    /// Minimum word length in the support; `None` for zero.
    pub fn low_degree(&self) -> Option<usize> {
        self.terms.keys().map(Word::len).min()
    }

    pub fn leading_word(&self, ord: &MonomialOrder) -> Option<&Word> {
        self.terms
            .keys()
            .max_by(|a, b| ord.cmp_unchecked(a, b))
    }

    pub fn leading_coeff(&self, ord: &MonomialOrder) -> Option<&Rational> {
        self.leading_word(ord).map(|w| &self.terms[w])
    }

    fn check(&self, other: &NcPoly) -> Result<()> {
        if same_alphabet(&self.alphabet, &other.alphabet) {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch)
        }
    }

    pub fn add(&self, other: &NcPoly) -> Result<NcPoly> {
        self.check(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &NcPoly) -> Result<NcPoly> {
        self.check(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> NcPoly {
        if c.is_zero() {
            return Self::zero(&self.alphabet);
        }
        NcPoly {
            alphabet: self.alphabet.clone(),
            terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect(),
        }
    }

    pub fn multiply(&self, other: &NcPoly) -> Result<NcPoly> {
        self.check(other)?;
        let mut out = Self::zero(&self.alphabet);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.concat(v), a * b);
            }
        }
        Ok(out)
    }

    /// `p·q − q·p`.
    pub fn commutator(&self, other: &NcPoly) -> Result<NcPoly> {
        self.multiply(other)?.sub(&other.multiply(self)?)
    }

    /// Part of the polynomial supported on words of length exactly `d`.
    pub fn homogeneous_part(&self, d: usize) -> NcPoly {
        NcPoly {
            alphabet: self.alphabet.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.len() == d)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Replaces each generator `g` by `images[g]` (an element of another
    /// free algebra) and expands.
    pub fn substitute(&self, images: &[NcPoly], target: &Arc<Alphabet>) -> Result<NcPoly> {
        if images.len() != self.alphabet.len() {
            return Err(Error::AssignmentArity {
                expected: self.alphabet.len(),
                got: images.len(),
            });
        }
        let mut out = NcPoly::zero(target);
        for (w, c) in &self.terms {
            let mut term = NcPoly::monomial(target, Word::unit(), c.clone());
            for &l in w.letters() {
                term = term.multiply(&images[l as usize])?;
            }
            out = out.add(&term)?;
        }
        Ok(out)
    }

    /// Re-expresses the polynomial over a different alphabet via a letter map.
    /// Words containing an unmapped letter are dropped.
    pub fn relabel(&self, target: &Arc<Alphabet>, map: &[Option<u32>]) -> NcPoly {
        let mut out = NcPoly::zero(target);
        'terms: for (w, c) in &self.terms {
            let mut letters = Vec::with_capacity(w.len());
            for &l in w.letters() {
                match map[l as usize] {
                    Some(m) => letters.push(m),
                    None => continue 'terms,
                }
            }
            out.add_term(Word(letters), c.clone());
        }
        out
    }
}

impl<'a> core::ops::Add for &'a NcPoly {
    type Output = NcPoly;
    fn add(self, rhs: Self) -> NcPoly {
        NcPoly::add(self, rhs).expect("alphabet mismatch")
    }
}

impl<'a> core::ops::Sub for &'a NcPoly {
    type Output = NcPoly;
    fn sub(self, rhs: Self) -> NcPoly {
        NcPoly::sub(self, rhs).expect("alphabet mismatch")
    }
}

impl<'a> core::ops::Mul for &'a NcPoly {
    type Output = NcPoly;
    fn mul(self, rhs: Self) -> NcPoly {
        self.multiply(rhs).expect("alphabet mismatch")
    }
}

impl core::ops::Neg for &NcPoly {
    type Output = NcPoly;
    fn neg(self) -> NcPoly {
        self.scale(&-Rational::one())
    }
}

/// Terms are printed from the largest word down under declaration-order
/// deglex, in the syntax accepted by the presentation parser.
impl fmt::Display for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let ord = MonomialOrder::deglex(self.alphabet.len());
        let mut words: Vec<&Word> = self.terms.keys().collect();
        words.sort_by(|a, b| ord.cmp_unchecked(b, a));
        for (i, w) in words.into_iter().enumerate() {
            let c = &self.terms[w];
            let neg = c.is_negative();
            let mag = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if w.is_empty() {
                write!(f, "{}", mag)?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{}*", mag)?;
            }
            f.write_str(&self.alphabet.render(w))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> Arc<Alphabet> {
        Alphabet::new(["x", "y"]).unwrap()
    }

    fn p(a: &Arc<Alphabet>, t: &[(i64, &[&str])]) -> NcPoly {
        NcPoly::from_named(a, t)
    }

    #[test]
    fn compare_examples() {
        let ord = MonomialOrder::deglex(2);
        let x = 0;
        let y = 1;
        let w = |v: &[u32]| Word::new(v.to_vec());
        assert_eq!(ord.compare(&w(&[x, y]), &w(&[y, y, y])).unwrap(), Ordering::Less);
        assert_eq!(ord.compare(&w(&[x, y]), &w(&[y, x])).unwrap(), Ordering::Greater);
        assert_eq!(ord.compare(&w(&[y, x, y]), &w(&[y, x, y])).unwrap(), Ordering::Equal);
        assert_eq!(
            ord.compare(&w(&[x, 2]), &w(&[x])),
            Err(Error::LetterOutOfRange(2))
        );
        assert_eq!(
            ord.reversed().compare(&w(&[x, y]), &w(&[y, x])).unwrap(),
            Ordering::Less
        );
    }

    #[test]
    fn multiply_examples() {
        let a = xy();
        let lhs = p(&a, &[(1, &["x"]), (1, &["y"])]);
        let rhs = p(&a, &[(1, &["x"]), (-1, &["y"])]);
        let expected = p(
            &a,
            &[(1, &["x", "x"]), (-1, &["x", "y"]), (1, &["y", "x"]), (-1, &["y", "y"])],
        );
        assert_eq!(lhs.multiply(&rhs).unwrap(), expected);
        assert_eq!(lhs.multiply(&NcPoly::one(&a)).unwrap(), lhs);
        let xy_ = p(&a, &[(1, &["x", "y"])]);
        let yy = p(&a, &[(1, &["y"])]);
        assert_eq!(&xy_ * &yy, p(&a, &[(1, &["x", "y", "y"])]));
    }

    #[test]
    fn commutator_examples() {
        let a = xy();
        let x = NcPoly::generator(&a, 0);
        let y = NcPoly::generator(&a, 1);
        assert_eq!(
            x.commutator(&y).unwrap(),
            p(&a, &[(1, &["x", "y"]), (-1, &["y", "x"])])
        );
        let q = &(&x * &y) + &y;
        assert!(q.commutator(&q).unwrap().is_zero());
        assert!(x.commutator(&NcPoly::one(&a)).unwrap().is_zero());
    }

    #[test]
    fn alphabet_mismatch_is_reported() {
        let a = xy();
        let b = Alphabet::new(["u", "v"]).unwrap();
        let x = NcPoly::generator(&a, 0);
        let u = NcPoly::generator(&b, 0);
        assert_eq!(x.multiply(&u), Err(Error::AlphabetMismatch));
        assert_eq!(x.commutator(&u), Err(Error::AlphabetMismatch));
        assert_eq!(x.add(&u), Err(Error::AlphabetMismatch));
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let a = xy();
        let x = NcPoly::generator(&a, 0);
        let d = x.sub(&x).unwrap();
        assert!(d.is_zero());
        assert_eq!(d.len(), 0);
    }

    #[test]
    fn duplicate_names_rejected() {
        assert_eq!(
            Alphabet::new(["x", "x"]),
            Err(Error::DuplicateName("x".into()))
        );
    }

    #[test]
    fn display_uses_grammar_syntax() {
        let a = xy();
        let q = NcPoly::from_terms(
            &a,
            [
                (Word::new(alloc::vec![0, 0]), Rational::one()),
                (Word::new(alloc::vec![1, 1, 1]), -Rational::one()),
                (Word::new(alloc::vec![0, 1]), Rational::new(1.into(), 2.into())),
            ],
        );
        assert_eq!(q.to_string(), "-y^3 + x^2 + 1/2*x*y");
    }

    #[test]
    fn substitute_evaluates() {
        let a = xy();
        let b = Alphabet::new(["e"]).unwrap();
        let e = NcPoly::generator(&b, 0);
        let r = p(&a, &[(1, &["x", "y"]), (1, &["y", "x"])]);
        let imgs = [e.clone(), e.scale(&Rational::from_integer(2.into()))];
        let got = r.substitute(&imgs, &b).unwrap();
        assert_eq!(got, NcPoly::from_named(&b, &[(4, &["e", "e"])]));
    }
}
