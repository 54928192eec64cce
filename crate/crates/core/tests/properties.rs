mod common;

use common::*;
use hermsym::cycles::{all_sigma, codim, SigmaElement};
use hermsym::exactla::{feasible_strict_with, ConstraintSystem, Method, Sign};
use hermsym::levi::{is_strongly_orthogonal, summarize};
use hermsym::parabolic::{
    classify, enumerate_filters, enumerate_ideals, hodge_of_lambda, iota, iota_dual,
};
use hermsym::rootsys::{DominantVector, RootSystem};
use proptest::prelude::*;

const FAMILIES: &[&str] = &[
    "su(1,3)", "su(2,3)", "su(3,4)", "so(2,5)", "so(2,6)", "sp(3)", "sp(4)", "so*(8)", "so*(10)",
    "e6-3", "e7-7",
];

fn weight(rs: &RootSystem, raw: &[i64]) -> DominantVector {
    let nc = rs.nc_index();
    let c: Vec<i64> = (0..rs.rank())
        .map(|i| if i == nc { raw[i] - 6 } else { raw[i] % 4 })
        .collect();
    DominantVector::from_ints(&c)
}

fn family_and_weight() -> impl Strategy<Value = (usize, Vec<i64>)> {
    (0..FAMILIES.len(), prop::collection::vec(0i64..13, 7))
}

fn to_q(v: &[i64]) -> Vec<R> {
    v.iter().map(|&x| r(x)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hodge_type_is_scale_invariant((f, raw) in family_and_weight(), k in 1i64..6) {
        let rs = rs(FAMILIES[f]);
        let lambda = weight(&rs, &raw);
        let a = hodge_of_lambda(&rs, &lambda).unwrap();
        let scaled = DominantVector::new(lambda.fw.iter().map(|x| x * R::from_integer(k.into())).collect());
        let b = hodge_of_lambda(&rs, &scaled).unwrap();
        prop_assert!(a.same_class(&b));
    }

    #[test]
    fn iota_is_an_involution_swapping_hodge_type((f, raw) in family_and_weight()) {
        let rs = rs(FAMILIES[f]);
        let lambda = weight(&rs, &raw);
        let twice = iota(&rs, &iota(&rs, &lambda));
        prop_assert_eq!(&twice, &lambda);
        let a = hodge_of_lambda(&rs, &lambda).unwrap();
        let b = iota_dual(&rs, &a).unwrap();
        prop_assert_eq!((a.r_plus(), a.r_minus()), (b.r_minus(), b.r_plus()));
        let back = iota_dual(&rs, &b).unwrap();
        prop_assert!(back.same_class(&a));
    }

    #[test]
    fn levi_invariants_hold_for_random_weights((f, raw) in family_and_weight()) {
        let rs = rs(FAMILIES[f]);
        let cls = hodge_of_lambda(&rs, &weight(&rs, &raw)).unwrap();
        let s = summarize(&rs, &cls).unwrap();
        prop_assert!(is_strongly_orthogonal(&rs, &s.levi.strongly_orthogonal));
        prop_assert_eq!(s.dual.dim_c() + cls.degree(), rs.noncompact_positive().len());
        let betti: u128 = s.poincare.iter().sum();
        prop_assert_eq!(num_bigint::BigInt::from(betti), s.euler.clone());
        prop_assert_eq!(s.poincare[0], 1);
        prop_assert!(s.poincare.iter().eq(s.poincare.iter().rev()));
    }

    #[test]
    fn strict_feasibility_routes_agree(
        dim in 1usize..4,
        eq in prop::collection::vec(prop::collection::vec(-2i64..3, 3), 0..2),
        pos in prop::collection::vec(prop::collection::vec(-3i64..4, 3), 1..5),
        weak in prop::collection::vec(prop::collection::vec(-2i64..3, 3), 0..3),
    ) {
        let cut = |v: &Vec<i64>| to_q(&v[..dim]);
        let mut sys = ConstraintSystem::new(dim);
        for e in &eq { sys = sys.equality(cut(e)); }
        for p in &pos { sys = sys.strict(cut(p), Sign::Pos); }
        for w in &weak { sys = sys.weak(cut(w)); }
        let oracle = strictly_feasible(
            &eq.iter().map(cut).collect::<Vec<_>>(),
            &pos.iter().map(cut).collect::<Vec<_>>(),
            &weak.iter().map(cut).collect::<Vec<_>>(),
            dim,
        );
        for m in [Method::Simplex, Method::FourierMotzkin, Method::Both] {
            let f = feasible_strict_with(&sys, m).unwrap();
            prop_assert_eq!(f.is_feasible(), oracle, "{:?}", m);
            if let Some(w) = f.witness() {
                let x: Vec<R> = w.iter().map(|b| R::from_integer(b.clone())).collect();
                prop_assert!(sys.is_satisfied_by(&x));
            }
        }
    }

    #[test]
    fn sigma_parity_is_a_group_law(f in 0..FAMILIES.len(), i in 0usize..64, j in 0usize..64) {
        let rs = rs(FAMILIES[f]);
        let sig = all_sigma(&rs);
        let (a, b) = (&sig[i % sig.len()], &sig[j % sig.len()]);
        let ab = a.compose(b);
        for root in rs.noncompact_positive().iter().chain(rs.compact_positive().iter()) {
            prop_assert_eq!(ab.is_odd_on(&rs, root), a.is_odd_on(&rs, root) ^ b.is_odd_on(&rs, root));
        }
        prop_assert!(a.compose(a).is_identity());
        let top = rs.noncompact_positive().len();
        let t = a.compose(&SigmaElement::theta());
        prop_assert_eq!(codim(&rs, a).unwrap().codim + codim(&rs, &t).unwrap().codim, top);
    }

    #[test]
    fn filters_and_ideals_are_closed(f in 0..FAMILIES.len(), bound in 0usize..5) {
        let rs = rs(FAMILIES[f]);
        let poset = rs.noncompact_poset();
        for u in enumerate_filters(&poset, bound) {
            prop_assert!(u.len() <= bound && poset.poset.is_up_closed(&u));
        }
        for d in enumerate_ideals(&poset, bound) {
            prop_assert!(d.len() <= bound && poset.poset.is_down_closed(&d));
        }
    }
}

#[test]
fn classified_witnesses_round_trip() {
    for name in FAMILIES {
        let rs = rs(name);
        let top = rs.noncompact_positive().len() / 2;
        for cls in classify(&rs, top.min(6)).unwrap() {
            let again = hodge_of_lambda(&rs, &cls.witness).unwrap();
            assert!(again.same_class(&cls), "{name}");
            assert_eq!(cls.r_plus(), cls.r_minus());
        }
    }
}
