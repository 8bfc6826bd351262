//! Finite-dimensional local algebras given by a basis and structure constants.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use alloc::collections::BTreeMap;

use num_traits::{One, Zero};
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::{Error, Result};
use crate::freealg::{Alphabet, NcPoly, OrderSpec, Word};
use crate::linalg;
use crate::ncgb::{self, Quotient, Verdict};
use crate::quiverpres::{abelianize, contract, KillSet, Presentation};
use crate::Rational;

/// Above this dimension associativity is checked on random triples.
pub const EXHAUSTIVE_ASSOCIATIVITY_LIMIT: usize = 40;
const SAMPLED_TRIPLES: usize = 10_000;
const SAMPLE_SEED: u64 = 0x5eed_a55c;

/// Structure constants `table[i][j]` = coordinates of `basis[i]·basis[j]`.
/// `basis[0]` is the unit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteAlgebra {
    labels: Vec<String>,
    words: Option<Vec<Word>>,
    alphabet: Option<Arc<Alphabet>>,
    table: Vec<Vec<Vec<Rational>>>,
}

fn unit_vector(dim: usize, i: usize) -> Vec<Rational> {
    let mut v = alloc::vec![Rational::zero(); dim];
    v[i] = Rational::one();
    v
}

fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

impl FiniteAlgebra {
    /// Multiplication table of a certified-finite local quotient.
    pub fn build(q: &Quotient) -> Result<Self> {
        let Verdict::Finite(_) = q.verdict() else {
            return Err(Error::InfiniteOrUnknown {
                cap: q.basis.degree_cap(),
            });
        };
        if q.monomials.by_degree.first().map_or(0, Vec::len) != 1 {
            return Err(Error::NotLocal);
        }
        let alphabet = q.basis.alphabet().clone();
        let words: Vec<Word> = q.monomials.words().cloned().collect();
        let index: BTreeMap<&Word, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let dim = words.len();
        let mut table = Vec::with_capacity(dim);
        for u in &words {
            let mut row = Vec::with_capacity(dim);
            for v in &words {
                let prod = NcPoly::monomial(&alphabet, u.concat(v), Rational::one());
                let nf = ncgb::normal_form(&prod, &q.basis)?;
                let mut coords = alloc::vec![Rational::zero(); dim];
                for (w, c) in nf.terms() {
                    let k = *index.get(w).expect("normal form lies in the standard span");
                    coords[k] = c.clone();
                }
                row.push(coords);
            }
            table.push(row);
        }
        let labels = words.iter().map(|w| alphabet.render(w)).collect();
        let a = FiniteAlgebra {
            labels,
            words: Some(words),
            alphabet: Some(alphabet),
            table,
        };
        a.check_associativity()?;
        Ok(a)
    }

    /// Algebra from explicit structure constants. Checks that entry 0 is a
    /// two-sided unit, the table is associative, and the span of the other
    /// basis vectors is a nilpotent ideal.
    pub fn from_table(labels: Vec<String>, table: Vec<Vec<Vec<Rational>>>) -> Result<Self> {
        let dim = labels.len();
        if dim == 0 {
            return Err(Error::BadTable("empty basis"));
        }
        if table.len() != dim || table.iter().any(|r| r.len() != dim || r.iter().any(|c| c.len() != dim)) {
            return Err(Error::BadTable("table shape does not match basis"));
        }
        for i in 0..dim {
            if table[0][i] != unit_vector(dim, i) || table[i][0] != unit_vector(dim, i) {
                return Err(Error::BadTable("first basis element is not a unit"));
            }
        }
        for row in table.iter().skip(1) {
            for c in row.iter().skip(1) {
                if !c[0].is_zero() {
                    return Err(Error::BadTable("augmentation ideal is not closed"));
                }
            }
        }
        let a = FiniteAlgebra {
            labels,
            words: None,
            alphabet: None,
            table,
        };
        a.check_associativity()?;
        if a.nilpotency_index().is_none() {
            return Err(Error::NotNilpotent);
        }
        Ok(a)
    }

    /// `C[e]/(e^k)` on the basis `1, e, …, e^{k-1}`.
    pub fn truncated_polynomial(k: usize) -> Self {
        assert!(k >= 1);
        let labels = (0..k)
            .map(|i| match i {
                0 => String::from("1"),
                1 => String::from("e"),
                _ => alloc::format!("e^{i}"),
            })
            .collect();
        let table = (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| if i + j < k { unit_vector(k, i + j) } else { alloc::vec![Rational::zero(); k] })
                    .collect()
            })
            .collect();
        FiniteAlgebra::from_table(labels, table).expect("truncated polynomial ring is local")
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Standard monomials, when built from a presentation.
    pub fn words(&self) -> Option<&[Word]> {
        self.words.as_deref()
    }

    pub fn alphabet(&self) -> Option<&Arc<Alphabet>> {
        self.alphabet.as_ref()
    }

    pub fn product(&self, i: usize, j: usize) -> &[Rational] {
        &self.table[i][j]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Rational> {
        unit_vector(self.dim(), i)
    }

    pub fn unit(&self) -> Vec<Rational> {
        self.basis_vector(0)
    }

    /// Coordinates of the image of a polynomial in the generators.
    pub fn coordinates_of_word(&self, w: &Word) -> Option<Vec<Rational>> {
        let words = self.words.as_ref()?;
        let mut acc = self.unit();
        for &l in w.letters() {
            let g = words.iter().position(|b| b.letters() == [l])?;
            acc = self.mul(&acc, &self.basis_vector(g));
        }
        Some(acc)
    }

    pub fn mul(&self, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
        let dim = self.dim();
        let mut out = alloc::vec![Rational::zero(); dim];
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in self.table[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        out[k] += &ab * c;
                    }
                }
            }
        }
        out
    }

    fn triple_associates(&self, i: usize, j: usize, k: usize) -> bool {
        let left = self.mul(&self.table[i][j], &self.basis_vector(k));
        let right = self.mul(&self.basis_vector(i), &self.table[j][k]);
        left == right
    }

    /// Exhaustive up to [`EXHAUSTIVE_ASSOCIATIVITY_LIMIT`], sampled with a
    /// fixed seed above it.
    pub fn check_associativity(&self) -> Result<()> {
        let dim = self.dim();
        if dim <= EXHAUSTIVE_ASSOCIATIVITY_LIMIT {
            for i in 0..dim {
                for j in 0..dim {
                    for k in 0..dim {
                        if !self.triple_associates(i, j, k) {
                            return Err(Error::NotAssociative(i, j, k));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
            for _ in 0..SAMPLED_TRIPLES {
                let mut pick = || (rng.next_u64() % dim as u64) as usize;
                let (i, j, k) = (pick(), pick(), pick());
                if !self.triple_associates(i, j, k) {
                    return Err(Error::NotAssociative(i, j, k));
                }
            }
        }
        Ok(())
    }

    pub fn is_commutative(&self) -> bool {
        let dim = self.dim();
        (0..dim).all(|i| (i + 1..dim).all(|j| self.table[i][j] == self.table[j][i]))
    }

    /// All products of two augmentation-ideal basis vectors.
    fn radical_products(&self) -> Vec<Vec<Rational>> {
        let dim = self.dim();
        let mut rows = Vec::new();
        for i in 1..dim {
            for j in 1..dim {
                if !is_zero_vec(&self.table[i][j]) {
                    rows.push(self.table[i][j].clone());
                }
            }
        }
        rows
    }

    /// `dim n/n²` for the augmentation ideal `n`.
    pub fn tangent_dimension(&self) -> usize {
        let dim = self.dim();
        (dim - 1) - linalg::rank(&self.radical_products(), dim)
    }

    /// Smallest `k` with `n^k = 0`; `None` if the powers stabilise first.
    pub fn nilpotency_index(&self) -> Option<usize> {
        let dim = self.dim();
        let mut power: Vec<Vec<Rational>> = (1..dim).map(|i| self.basis_vector(i)).collect();
        let mut k = 1;
        loop {
            let mut m = power.clone();
            linalg::rref(&mut m, dim);
            if m.is_empty() {
                return Some(k);
            }
            let mut next = Vec::new();
            for v in &m {
                for g in 1..dim {
                    let p = self.mul(v, &self.basis_vector(g));
                    if !is_zero_vec(&p) {
                        next.push(p);
                    }
                }
            }
            linalg::rref(&mut next, dim);
            if next.len() >= m.len() {
                return None;
            }
            power = next;
            k += 1;
        }
    }

    /// Basis of `{v : v·n = 0 = n·v}`.
    pub fn socle(&self) -> Vec<Vec<Rational>> {
        let dim = self.dim();
        // Row (g, k) of the left/right multiplication maps: coefficient of
        // basis k in v·b_g (resp. b_g·v) as a linear form in v.
        let mut rows = Vec::new();
        for g in 1..dim {
            for k in 0..dim {
                let left: Vec<Rational> = (0..dim).map(|i| self.table[i][g][k].clone()).collect();
                let right: Vec<Rational> = (0..dim).map(|i| self.table[g][i][k].clone()).collect();
                if !is_zero_vec(&left) {
                    rows.push(left);
                }
                if !is_zero_vec(&right) {
                    rows.push(right);
                }
            }
        }
        linalg::nullspace(&rows, dim)
    }

    /// Local Frobenius criterion: the socle is one-dimensional.
    pub fn is_self_injective(&self) -> bool {
        self.socle().len() == 1
    }
}

/// Certified-finite quotient presented by `p`, after contracting `kill`.
pub fn contraction_quotient(
    p: &Presentation,
    kill: Option<&KillSet>,
    order: &OrderSpec,
    ceiling: usize,
) -> Result<(Presentation, Quotient)> {
    let c = match kill {
        Some(k) => contract(p, k)?,
        None => p.clone(),
    };
    finite_quotient(c, order, ceiling)
}

fn finite_quotient(p: Presentation, order: &OrderSpec, ceiling: usize) -> Result<(Presentation, Quotient)> {
    let ord = order.resolve(p.alphabet());
    let q = ncgb::quotient(&p, &ord, ceiling)?;
    match q.verdict() {
        Verdict::Finite(_) => Ok((p, q)),
        Verdict::InfiniteOrUnknown { cap } => Err(Error::InfiniteOrUnknown { cap }),
    }
}

/// Finite algebra of the contraction.
pub fn contraction_algebra(
    p: &Presentation,
    kill: Option<&KillSet>,
    order: &OrderSpec,
    ceiling: usize,
) -> Result<FiniteAlgebra> {
    let (_, q) = contraction_quotient(p, kill, order, ceiling)?;
    FiniteAlgebra::build(&q)
}

/// Dimension of the contraction.
pub fn width(p: &Presentation, kill: Option<&KillSet>, order: &OrderSpec, ceiling: usize) -> Result<usize> {
    let (_, q) = contraction_quotient(p, kill, order, ceiling)?;
    Ok(q.verdict().dimension().expect("finite by construction"))
}

/// Dimension of the abelianized contraction.
pub fn cwidth(p: &Presentation, kill: Option<&KillSet>, order: &OrderSpec, ceiling: usize) -> Result<usize> {
    let c = match kill {
        Some(k) => contract(p, k)?,
        None => p.clone(),
    };
    let (_, q) = finite_quotient(abelianize(&c)?, order, ceiling)?;
    Ok(q.verdict().dimension().expect("finite by construction"))
}
