use std::cmp::Ordering;
use std::sync::Arc;

use contracta_core::{Alphabet, MonomialOrder, NcPoly, Rational, Word};
use num_traits::Zero;
use proptest::prelude::*;

fn alphabet() -> Arc<Alphabet> {
    Alphabet::new(["x", "y", "z"]).unwrap()
}

fn word(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0u32..3, 0..=max_len).prop_map(Word::new)
}

fn order() -> impl Strategy<Value = MonomialOrder> {
    Just(vec![0u32, 1, 2])
        .prop_shuffle()
        .prop_map(|p| MonomialOrder::with_precedence(p).unwrap())
}

fn poly() -> impl Strategy<Value = NcPoly> {
    prop::collection::vec((word(3), -3i64..=3), 0..5).prop_map(|terms| {
        NcPoly::from_terms(
            &alphabet(),
            terms.into_iter().map(|(w, c)| (w, Rational::from_integer(c.into()))),
        )
    })
}

fn no_zero_coefficients(p: &NcPoly) -> bool {
    p.terms().all(|(_, c)| !c.is_zero())
}

proptest! {
    #[test]
    fn order_is_total_and_antisymmetric(ord in order(), u in word(4), v in word(4)) {
        let a = ord.compare(&u, &v).unwrap();
        let b = ord.compare(&v, &u).unwrap();
        prop_assert_eq!(a, b.reverse());
        prop_assert_eq!(a == Ordering::Equal, u == v);
    }

    #[test]
    fn order_is_transitive(ord in order(), u in word(3), v in word(3), w in word(3)) {
        let mut s = [u, v, w];
        s.sort_by(|a, b| ord.compare(a, b).unwrap());
        prop_assert_ne!(ord.compare(&s[0], &s[2]).unwrap(), Ordering::Greater);
    }

    #[test]
    fn order_is_multiplicative(ord in order(), a in word(3), u in word(3), v in word(3), b in word(3)) {
        prop_assume!(u != v);
        let (lo, hi) = if ord.compare(&u, &v).unwrap() == Ordering::Less { (u, v) } else { (v, u) };
        let l = a.concat(&lo).concat(&b);
        let h = a.concat(&hi).concat(&b);
        prop_assert_eq!(ord.compare(&l, &h).unwrap(), Ordering::Less);
    }

    #[test]
    fn degree_dominates(ord in order(), u in word(3), v in word(3)) {
        prop_assume!(u.len() < v.len());
        prop_assert_eq!(ord.compare(&u, &v).unwrap(), Ordering::Less);
    }

    #[test]
    fn multiplication_is_associative(p in poly(), q in poly(), r in poly()) {
        let left = p.multiply(&q).unwrap().multiply(&r).unwrap();
        let right = p.multiply(&q.multiply(&r).unwrap()).unwrap();
        prop_assert!(no_zero_coefficients(&left));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn multiplication_distributes(p in poly(), q in poly(), r in poly()) {
        let sum = q.add(&r).unwrap();
        prop_assert_eq!(
            p.multiply(&sum).unwrap(),
            p.multiply(&q).unwrap().add(&p.multiply(&r).unwrap()).unwrap()
        );
        prop_assert_eq!(
            sum.multiply(&p).unwrap(),
            q.multiply(&p).unwrap().add(&r.multiply(&p).unwrap()).unwrap()
        );
    }

    #[test]
    fn cancellation_leaves_no_zeros(p in poly(), q in poly()) {
        let d = p.add(&q).unwrap().sub(&q).unwrap();
        prop_assert!(no_zero_coefficients(&d));
        prop_assert_eq!(&d, &p);
        prop_assert!(p.sub(&p).unwrap().is_zero());
        prop_assert!(p.commutator(&p).unwrap().is_zero());
    }

    #[test]
    fn unit_is_neutral_and_central(p in poly()) {
        let one = NcPoly::one(&alphabet());
        prop_assert_eq!(p.multiply(&one).unwrap(), p.clone());
        prop_assert_eq!(one.multiply(&p).unwrap(), p.clone());
        prop_assert!(p.commutator(&one).unwrap().is_zero());
    }

    #[test]
    fn commutator_is_antisymmetric(p in poly(), q in poly()) {
        let a = p.commutator(&q).unwrap();
        let b = q.commutator(&p).unwrap();
        prop_assert!(a.add(&b).unwrap().is_zero());
    }
}

#[test]
fn mismatched_alphabets_are_rejected() {
    let other = Alphabet::new(["s", "t"]).unwrap();
    let p = NcPoly::generator(&alphabet(), 0);
    let q = NcPoly::generator(&other, 0);
    assert!(p.multiply(&q).is_err());
    assert!(p.add(&q).is_err());
    assert!(MonomialOrder::deglex(2).compare(&Word::letter(2), &Word::letter(0)).is_err());
}
