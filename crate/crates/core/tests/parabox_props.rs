use std::collections::BTreeSet;

use gzschubert_core::parabox::{
    all_l_classes, sc_classes, sc_sum, sc_sum_inclusion_exclusion, star_dual, t_operator, LClass,
    Laurent, Parallelepiped, Paradiagram,
};
use num_bigint::BigInt;
use proptest::prelude::*;

fn bounds(m: std::ops::RangeInclusive<usize>, strict: bool) -> impl Strategy<Value = Parallelepiped> {
    m.prop_flat_map(move |m| {
        prop::collection::vec((-3i64..=3, 0i64..=3), m).prop_map(move |v| {
            let mu: Vec<i64> = v.iter().map(|&(a, _)| a).collect();
            let nu: Vec<i64> = v.iter().map(|&(a, d)| a + if strict { d.max(1) } else { d }).collect();
            Parallelepiped::new(mu, nu).unwrap()
        })
    })
}

fn laurent() -> impl Strategy<Value = Laurent> {
    prop::collection::vec((-6i64..=6, -5i64..=5), 0..6)
        .prop_map(|v| Laurent::from_terms(v.into_iter().map(|(e, c)| (e, BigInt::from(c)))))
}

/// Classes with a nonempty initial and an empty final parabox.
fn open_classes(m: usize) -> Vec<LClass> {
    all_l_classes(m)
        .into_iter()
        .filter(|c| c.has_initial_parabox() && c.paraboxes().final_box.is_empty())
        .collect()
}

fn union_of_members(classes: &[&LClass]) -> Vec<Paradiagram> {
    classes.iter().flat_map(|c| c.members().iter().cloned()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_formula_matches_enumeration(pi in bounds(0..=5, false)) {
        prop_assert_eq!(pi.s_pi(), pi.s_pi_enumerated());
    }

    #[test]
    fn s_pi_is_self_dual(pi in bounds(0..=5, false)) {
        let s = pi.s_pi();
        prop_assert_eq!(star_dual(&s, pi.c()), s);
    }

    #[test]
    fn s_pi_is_t_of_first_facet(pi in bounds(1..=5, true)) {
        let gamma = pi.first_facet().unwrap();
        prop_assert_eq!(t_operator(&gamma.s_pi(), pi.c()).unwrap(), pi.s_pi());
    }

    #[test]
    fn t_is_idempotent(f in laurent(), c in -6i64..=6) {
        let once = t_operator(&f, c).unwrap();
        prop_assert_eq!(t_operator(&once, c).unwrap(), once);
        prop_assert_eq!(star_dual(&star_dual(&f, c), c), f);
    }

    #[test]
    fn paramitosis_of_a_class(pi in bounds(1..=5, true), pick in any::<prop::sample::Index>()) {
        let with_initial: Vec<LClass> =
            all_l_classes(pi.m()).into_iter().filter(|c| c.has_initial_parabox()).collect();
        let a = pick.get(&with_initial);
        let b = a.paramitosis().unwrap().unwrap();
        let sa = sc_classes(std::slice::from_ref(a), &pi).unwrap();
        let sb = sc_classes(&[b], &pi).unwrap();
        prop_assert_eq!(&sb, &t_operator(&sa, a.swept_constant(&pi)).unwrap());
        if a.paraboxes().final_box.is_empty() {
            prop_assert_eq!(&sb, &t_operator(&sa, pi.c()).unwrap());
        }
    }

    #[test]
    fn paramitosis_of_a_union(
        pi in bounds(1..=4, true),
        picks in prop::collection::vec(any::<prop::sample::Index>(), 1..4),
    ) {
        let a: Vec<LClass> = open_classes(pi.m());
        let a: Vec<&LClass> = picks.iter().map(|i| i.get(&a)).collect();
        let b: Vec<LClass> = a.iter().map(|c| c.paramitosis().unwrap().unwrap()).collect();
        let b_refs: Vec<&LClass> = b.iter().collect();
        let sa = sc_sum(&union_of_members(&a), &pi).unwrap();
        let sb = sc_sum(&union_of_members(&b_refs), &pi).unwrap();
        prop_assert_eq!(&sb, &t_operator(&sa, pi.c()).unwrap());
        prop_assert_eq!(&sb, &t_operator(&sb, pi.c()).unwrap());
    }

    #[test]
    fn paramitosis_of_a_mixed_union(
        pi in bounds(1..=4, true),
        picks in prop::collection::vec(any::<prop::sample::Index>(), 1..4),
        sub_picks in prop::collection::vec((any::<prop::sample::Index>(), any::<prop::sample::Index>()), 0..3),
    ) {
        let m = pi.m();
        let a: Vec<LClass> = open_classes(m);
        let a: Vec<&LClass> = picks.iter().map(|i| i.get(&a)).collect();
        // B = M(A') for a class A' inside one of the A_i, spanned by a
        // subset of that class's simplex vertices that keeps the vertex 0^m.
        let mut bs = Vec::new();
        for (which, sub) in &sub_picks {
            let host = which.get(&a);
            let verts: Vec<usize> = host.simplex_vertices().into_iter().filter(|&v| v != m).collect();
            let subsets: Vec<BTreeSet<usize>> = (0u32..(1 << verts.len()))
                .map(|mask| {
                    let mut s: BTreeSet<usize> =
                        verts.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, v)| *v).collect();
                    s.insert(m);
                    s
                })
                .collect();
            let inner = LClass::from_vertices(m, sub.get(&subsets)).unwrap();
            bs.push(inner.paramitosis().unwrap().unwrap());
        }
        let mut all: Vec<&LClass> = a.clone();
        all.extend(bs.iter());
        let everything = union_of_members(&all);
        let mut mitosis = Vec::new();
        for p in &everything {
            mitosis.extend(p.paramitosis().unwrap());
        }
        let lhs = sc_sum(&mitosis, &pi).unwrap();
        let rhs = t_operator(&sc_sum(&everything, &pi).unwrap(), pi.c()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn union_and_inclusion_exclusion_agree(
        pi in bounds(1..=4, false),
        picks in prop::collection::vec(any::<prop::sample::Index>(), 1..5),
    ) {
        // Only diagrams without stars at degenerate positions are admissible.
        let admissible: Vec<Paradiagram> = gzschubert_core::parabox::reduced_paradiagrams(pi.m())
            .into_iter()
            .filter(|p| sc_sum(std::slice::from_ref(p), &pi).is_ok())
            .collect();
        let faces: Vec<Paradiagram> = picks.iter().map(|i| i.get(&admissible).clone()).collect();
        prop_assert_eq!(sc_sum(&faces, &pi).unwrap(), sc_sum_inclusion_exclusion(&faces, &pi).unwrap());
    }
}

#[test]
fn a_final_parabox_breaks_the_constant_of_pi() {
    // A = {01} in [0,1]^2: Sc(M(A)) = t + t^2 while T(Sc(A)) = t for C = 2.
    let pi = Parallelepiped::new(vec![0, 0], vec![1, 1]).unwrap();
    let a = LClass::of(&"01".parse().unwrap()).unwrap();
    let sa = sc_classes(std::slice::from_ref(&a), &pi).unwrap();
    let sb = sc_classes(&[a.paramitosis().unwrap().unwrap()], &pi).unwrap();
    assert_ne!(sb, t_operator(&sa, pi.c()).unwrap());
    assert_eq!(a.swept_constant(&pi), 3);
    assert_eq!(sb, t_operator(&sa, 3).unwrap());
}
