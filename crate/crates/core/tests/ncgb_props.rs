use std::sync::Arc;

use contracta_core::ncgb::{self, normal_form, DEFAULT_CEILING};
use contracta_core::quiverpres::{abelianize, builtin, contract, Builtin};
use contracta_core::freealg::OrderSpec;
use contracta_core::{Alphabet, GroebnerBasis, KillSet, MonomialOrder, NcPoly, Presentation, Rational, Verdict, Word};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn xy() -> Arc<Alphabet> {
    Alphabet::new(["x", "y"]).unwrap()
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn words_of_degree(d: usize) -> Vec<Word> {
    (0..1usize << d)
        .map(|bits| Word::new((0..d).rev().map(|i| ((bits >> i) & 1) as u32).collect()))
        .collect()
}

fn index_of(w: &Word) -> usize {
    w.letters().iter().fold(0, |acc, &l| acc * 2 + l as usize)
}

/// Plain Gaussian elimination, kept separate from the library's linear algebra.
fn oracle_rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else { continue };
        rows.swap(rank, p);
        let pivot = rows[rank][col].clone();
        for r in rank + 1..rows.len() {
            if !rows[r][col].is_zero() {
                let f = &rows[r][col] / &pivot;
                for c in col..ncols {
                    let t = &f * &rows[rank][c];
                    rows[r][c] -= t;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Quotient dimension in degree `d` of the ideal generated by homogeneous
/// `gens`: `2^d` minus the rank of all `u·g·v` of degree `d`.
fn oracle_graded_dimension(gens: &[Vec<(Word, Rational)>], d: usize) -> usize {
    let mut rows = Vec::new();
    for g in gens {
        let deg = g[0].0.len();
        if deg > d {
            continue;
        }
        for left in 0..=d - deg {
            let right = d - deg - left;
            for u in words_of_degree(left) {
                for v in words_of_degree(right) {
                    let mut row = vec![Rational::zero(); 1 << d];
                    for (w, c) in g {
                        row[index_of(&u.concat(w).concat(&v))] += c;
                    }
                    rows.push(row);
                }
            }
        }
    }
    (1usize << d) - oracle_rank(rows)
}

fn homogeneous_generator() -> impl Strategy<Value = Vec<(Word, Rational)>> {
    (2usize..=3).prop_flat_map(|d| {
        prop::collection::vec(-2i64..=2, 1 << d).prop_filter_map("nonzero", move |coeffs| {
            let terms: Vec<(Word, Rational)> = words_of_degree(d)
                .into_iter()
                .zip(coeffs)
                .filter(|(_, c)| *c != 0)
                .map(|(w, c)| (w, q(c)))
                .collect();
            (!terms.is_empty()).then_some(terms)
        })
    })
}

fn to_poly(a: &Arc<Alphabet>, t: &[(Word, Rational)]) -> NcPoly {
    NcPoly::from_terms(a, t.iter().cloned())
}

fn cusp_basis() -> GroebnerBasis {
    let a = xy();
    let gens = [
        NcPoly::from_named(&a, &[(1, &["x", "y"]), (1, &["y", "x"])]),
        NcPoly::from_named(&a, &[(1, &["x", "x"]), (-1, &["y", "y", "y"])]),
    ];
    ncgb::complete(&gens, &MonomialOrder::deglex(2), 12).unwrap()
}

fn small_poly() -> impl Strategy<Value = NcPoly> {
    prop::collection::vec((prop::collection::vec(0u32..2, 0..6), -3i64..=3), 0..6)
        .prop_map(|t| NcPoly::from_terms(&xy(), t.into_iter().map(|(w, c)| (Word::new(w), q(c)))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn graded_dimensions_match_brute_force(
        gens in prop::collection::vec(homogeneous_generator(), 1..=3),
        reversed in any::<bool>(),
    ) {
        let a = xy();
        let polys: Vec<NcPoly> = gens.iter().map(|g| to_poly(&a, g)).collect();
        let mut ord = MonomialOrder::deglex(2);
        if reversed {
            ord = ord.reversed();
        }
        let g = ncgb::complete(&polys, &ord, 6).unwrap();
        prop_assert!(g.complete_below_cap());
        let sm = g.standard_monomials();
        for d in 0..=6 {
            let ours = sm.by_degree.get(d).map_or(0, Vec::len);
            prop_assert_eq!(ours, oracle_graded_dimension(&gens, d), "degree {}", d);
        }
    }
}

proptest! {
    #[test]
    fn normal_form_is_idempotent_and_linear(p in small_poly(), r in small_poly()) {
        let g = cusp_basis();
        let np = normal_form(&p, &g).unwrap();
        prop_assert_eq!(normal_form(&np, &g).unwrap(), np.clone());
        let nr = normal_form(&r, &g).unwrap();
        prop_assert_eq!(normal_form(&p.add(&r).unwrap(), &g).unwrap(), np.add(&nr).unwrap());
        for (w, _) in np.terms() {
            prop_assert!(g.is_standard(w));
        }
    }

    #[test]
    fn ideal_members_reduce_to_zero(
        u in prop::collection::vec(0u32..2, 0..4),
        v in prop::collection::vec(0u32..2, 0..4),
        c in 1i64..5,
    ) {
        let g = cusp_basis();
        let a = g.alphabet().clone();
        for e in g.elements() {
            let left = NcPoly::monomial(&a, Word::new(u.clone()), q(c));
            let right = NcPoly::monomial(&a, Word::new(v.clone()), Rational::one());
            let m = left.multiply(&e).unwrap().multiply(&right).unwrap();
            prop_assert!(normal_form(&m, &g).unwrap().is_zero());
        }
    }

    #[test]
    fn standard_monomials_are_subword_closed(n in 1u32..=4, reversed in any::<bool>()) {
        let p = builtin(Builtin::QuantumCusp, n).unwrap();
        let spec = if reversed { OrderSpec::reversed() } else { OrderSpec::default() };
        let qt = ncgb::quotient(&p, &spec.resolve(p.alphabet()), DEFAULT_CEILING).unwrap();
        for w in qt.monomials.words() {
            let l = w.letters();
            for i in 0..=l.len() {
                for j in i..=l.len() {
                    prop_assert!(qt.basis.is_standard(&Word::new(l[i..j].to_vec())));
                }
            }
        }
    }
}

fn contracted_builtins() -> Vec<Presentation> {
    let mut out = Vec::new();
    for b in Builtin::ALL {
        let ns: &[u32] = if b.is_parametric() { &[1, 2, 3] } else { &[1] };
        for &n in ns {
            let p = builtin(b, n).unwrap();
            let c = match b.kill_vertex() {
                Some(v) => contract(&p, &KillSet::new(p.quiver(), &[v]).unwrap()).unwrap(),
                None => p,
            };
            out.push(c);
        }
    }
    out
}

#[test]
fn dimension_is_order_independent_on_builtins() {
    for c in contracted_builtins() {
        let fwd = ncgb::dimension(&c, &OrderSpec::default().resolve(c.alphabet()), DEFAULT_CEILING).unwrap();
        let rev = ncgb::dimension(&c, &OrderSpec::reversed().resolve(c.alphabet()), DEFAULT_CEILING).unwrap();
        match (fwd, rev) {
            (Verdict::Finite(a), Verdict::Finite(b)) => assert_eq!(a, b, "{}", c.name()),
            (Verdict::InfiniteOrUnknown { .. }, Verdict::InfiniteOrUnknown { .. }) => {
                assert_eq!(c.name(), "free2")
            }
            other => panic!("{}: verdicts disagree {other:?}", c.name()),
        }
    }
}

#[test]
fn contraction_always_validates() {
    for c in contracted_builtins() {
        assert!(c.validate().is_ok(), "{}", c.name());
    }
}

#[test]
fn abelianize_twice_adds_nothing_new() {
    for c in contracted_builtins() {
        let ab = abelianize(&c).unwrap();
        let ab2 = abelianize(&ab).unwrap();
        let ord = OrderSpec::default().resolve(ab.alphabet());
        let qt = ncgb::quotient(&ab, &ord, DEFAULT_CEILING).unwrap();
        for r in ab2.relations() {
            assert!(normal_form(r, &qt.basis).unwrap().is_zero(), "{}: {r}", c.name());
        }
    }
}
