//! Homomorphisms from a contracted presentation into small local algebras.
//!
//! A 1-pointed homomorphism `A → Γ` sends every loop into the augmentation
//! ideal of `Γ` and kills every relation. Only verification is offered; the
//! one linear case, `Γ` the dual numbers, is solved outright to give the
//! tangent dimension.

use alloc::string::ToString;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::freealg::{OrderSpec, Word};
use crate::linalg;
use crate::quiverpres::Presentation;
use crate::structalg::{self, FiniteAlgebra};
use crate::Rational;

/// A local algebra with nilpotent augmentation ideal, used as a test object.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TestAlgebra(FiniteAlgebra);

impl TestAlgebra {
    pub fn new(a: FiniteAlgebra) -> Result<Self> {
        if a.nilpotency_index().is_none() {
            return Err(Error::NotNilpotent);
        }
        Ok(TestAlgebra(a))
    }

    /// `C[e]/e^2`.
    pub fn dual_numbers() -> Self {
        TestAlgebra(FiniteAlgebra::truncated_polynomial(2))
    }

    /// `C[e]/e^k`.
    pub fn truncated(k: usize) -> Self {
        TestAlgebra(FiniteAlgebra::truncated_polynomial(k))
    }

    /// Test algebra given by a presentation, run through the Gröbner pipeline.
    pub fn from_presentation(p: &Presentation, order: &OrderSpec, ceiling: usize) -> Result<Self> {
        Self::new(structalg::contraction_algebra(p, None, order, ceiling)?)
    }

    pub fn algebra(&self) -> &FiniteAlgebra {
        &self.0
    }
}

/// Image of each generator, as coordinates over the test algebra's basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomCandidate {
    pub assignment: Vec<Vec<Rational>>,
}

impl HomCandidate {
    pub fn zero(generators: usize, gamma: &TestAlgebra) -> Self {
        HomCandidate {
            assignment: alloc::vec![alloc::vec![Rational::zero(); gamma.0.dim()]; generators],
        }
    }
}

fn evaluate_word(gamma: &FiniteAlgebra, images: &[Vec<Rational>], w: &Word) -> Vec<Rational> {
    let mut acc = gamma.unit();
    for &l in w.letters() {
        acc = gamma.mul(&acc, &images[l as usize]);
    }
    acc
}

/// Whether the assignment extends to a 1-pointed algebra homomorphism.
pub fn verify_hom(p: &Presentation, gamma: &TestAlgebra, h: &HomCandidate) -> Result<bool> {
    if !p.quiver().is_single_vertex() {
        return Err(Error::NotLocal);
    }
    let g = &gamma.0;
    let names = p.alphabet();
    if h.assignment.len() != names.len() {
        return Err(Error::AssignmentArity {
            expected: names.len(),
            got: h.assignment.len(),
        });
    }
    for (i, img) in h.assignment.iter().enumerate() {
        if img.len() != g.dim() {
            return Err(Error::AssignmentArity {
                expected: g.dim(),
                got: img.len(),
            });
        }
        if !img[0].is_zero() {
            return Err(Error::NotAugmented(names.name(i as u32).to_string()));
        }
    }
    for r in p.relations() {
        let mut total = alloc::vec![Rational::zero(); g.dim()];
        for (w, c) in r.terms() {
            for (t, x) in total.iter_mut().zip(evaluate_word(g, &h.assignment, w)) {
                *t += c * x;
            }
        }
        if total.iter().any(|x| !x.is_zero()) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Solution space of `Hom(A, C[e]/e^2)`: generator `g ↦ a_g·e` is a
/// homomorphism iff the linear parts of all relations vanish at `a`.
pub fn dual_number_solutions(p: &Presentation) -> Result<Vec<Vec<Rational>>> {
    if !p.quiver().is_single_vertex() {
        return Err(Error::NotLocal);
    }
    let n = p.alphabet().len();
    let rows: Vec<Vec<Rational>> = p
        .relations()
        .iter()
        .map(|r| (0..n as u32).map(|g| r.coefficient(&Word::letter(g))).collect())
        .collect();
    Ok(linalg::nullspace(&rows, n))
}

/// Dimension of the deformation functor on the dual numbers.
pub fn def_tangent_dimension(p: &Presentation, order: &OrderSpec, ceiling: usize) -> Result<usize> {
    // finiteness is a precondition; surfaces InfiniteOrUnknown otherwise
    structalg::contraction_quotient(p, None, order, ceiling)?;
    Ok(dual_number_solutions(p)?.len())
}

/// Candidate `g ↦ a_g·e` into the dual numbers.
pub fn dual_number_candidate(coeffs: &[Rational]) -> HomCandidate {
    HomCandidate {
        assignment: coeffs
            .iter()
            .map(|a| alloc::vec![Rational::zero(), a.clone()])
            .collect(),
    }
}
