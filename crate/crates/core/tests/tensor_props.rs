use proptest::prelude::*;
use ties_core::algebra::{AlgebraElement, BasisKey};
use ties_core::combinatorics::{Permutation, SetPartition};
use ties_core::exactmath::{RatFunc, Rational};
use ties_core::tensor::{block_projection, relabel_upper, TensorAction, TensorKey, TensorVector};

fn key(n: usize) -> impl Strategy<Value = TensorKey> {
    prop::collection::vec((1..=n, 1..=n), n).prop_map(|pairs| TensorKey::new(&pairs))
}

fn basis_key(n: usize) -> impl Strategy<Value = BasisKey> {
    let all = BasisKey::all(n);
    (0..all.len()).prop_map(move |i| all[i].clone())
}

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    let all = Permutation::all(n);
    (0..all.len()).prop_map(move |i| all[i].clone())
}

fn partition(n: usize) -> impl Strategy<Value = SetPartition> {
    let all = SetPartition::enumerate(n);
    (0..all.len()).prop_map(move |i| all[i].clone())
}

fn vector(n: usize) -> impl Strategy<Value = TensorVector<RatFunc>> {
    prop::collection::vec((key(n), -2i64..=2), 1..4).prop_map(move |terms| {
        let mut v = TensorVector::zero(n);
        for (k, c) in terms {
            v.add_term(k, RatFunc::from_int(c));
        }
        v
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn module_axiom((n, a, b, v) in (1usize..=3).prop_flat_map(|n| (Just(n), basis_key(n), basis_key(n), vector(n)))) {
        let act = TensorAction::generic(n);
        let (x, y) = (AlgebraElement::basis(a), AlgebraElement::basis(b));
        prop_assert_eq!(act.act(&(&x * &y), &v).unwrap(), act.act(&x, &act.act(&y, &v).unwrap()).unwrap());
        prop_assert_eq!(act.act(&AlgebraElement::one(n), &v).unwrap(), v);
    }

    #[test]
    fn module_axiom_n4((a, b, k) in (basis_key(4), basis_key(4), key(4))) {
        let act = TensorAction::generic(4);
        let (x, y) = (AlgebraElement::basis(a), AlgebraElement::basis(b));
        let v = TensorVector::pure(k);
        prop_assert_eq!(act.act(&(&x * &y), &v).unwrap(), act.act(&x, &act.act(&y, &v).unwrap()).unwrap());
    }

    #[test]
    fn relabelling_upper_indices_commutes((n, a, s, v) in (1usize..=4).prop_flat_map(|n| (Just(n), basis_key(n), perm(n), vector(n)))) {
        let act = TensorAction::generic(n);
        let x = AlgebraElement::basis(a);
        prop_assert_eq!(
            relabel_upper(&s, &act.act(&x, &v).unwrap()),
            act.act(&x, &relabel_upper(&s, &v)).unwrap()
        );
    }

    #[test]
    fn at_one_t_w_permutes_factors((n, w, k) in (1usize..=4).prop_flat_map(|n| (Just(n), perm(n), key(n)))) {
        let act = TensorAction::<Rational>::at(n, &Rational::from_integer(1.into())).unwrap();
        let out = act.act(&AlgebraElement::t_w(&w), &TensorVector::pure(k.clone())).unwrap();
        let mut moved = k.clone();
        for p in 1..=n {
            moved.0[w.apply(p) - 1] = k.0[p - 1];
        }
        prop_assert_eq!(out, TensorVector::pure(moved));
    }

    #[test]
    fn e_a_is_a_block_projection((n, a, v) in (1usize..=4).prop_flat_map(|n| (Just(n), partition(n), vector(n)))) {
        let act = TensorAction::generic(n);
        prop_assert_eq!(act.act(&AlgebraElement::e_a(&a), &v).unwrap(), block_projection(&a, &v));
        let one = TensorAction::<Rational>::at(n, &Rational::from_integer(1.into())).unwrap();
        let v1 = v.map_coeffs(|c| c.eval(&Rational::from_integer(1.into())).unwrap());
        prop_assert_eq!(one.act(&AlgebraElement::e_a(&a), &v1).unwrap(), block_projection(&a, &v1));
    }
}
