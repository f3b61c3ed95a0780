use std::sync::Arc;

use proptest::prelude::*;

use matdec::automata::{encode, lattice_parse, run};
use matdec::experiments::gen::{self, Family};
use matdec::experiments::Lcg;
use matdec::matroid::{
    connectivity, dual, minor, rank, same_matroid, Matroid, MinorSpec, SharedMatroid,
};
use matdec::zoo::{frame_oracle, switch, FrameGraph, Group};
use matdec::Subset;

fn matroid(family: usize, seed: u64, index: u64) -> SharedMatroid {
    let f = Family::ALL[family % Family::ALL.len()];
    f.generate(seed, index, 8).unwrap().oracle().unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_is_monotone_and_submodular(f in 0usize..10, seed: u64, i in 0u64..1000, a: u64, b: u64) {
        let m = matroid(f, seed, i);
        let full = m.ground().full().0;
        let (x, y) = (Subset(a & full), Subset(b & full));
        let r = |s| rank(&*m, s).unwrap();
        prop_assert!(r(x) <= r(x.union(y)));
        prop_assert!(r(x) <= x.len());
        prop_assert!(r(x.union(y)) + r(x.intersection(y)) <= r(x) + r(y));
    }

    #[test]
    fn connectivity_is_symmetric_and_dual_invariant(f in 0usize..10, seed: u64, i in 0u64..1000, a: u64) {
        let m = matroid(f, seed, i);
        let u = Subset(a & m.ground().full().0);
        let rest = m.ground().full().difference(u);
        let l = connectivity(&*m, u).unwrap();
        prop_assert_eq!(l, connectivity(&*m, rest).unwrap());
        let d = dual(m.clone());
        prop_assert_eq!(l, connectivity(&d, u).unwrap());
    }

    #[test]
    fn minors_compose(f in 0usize..10, seed: u64, i in 0u64..1000, pick: u64) {
        let m = matroid(f, seed, i);
        let ids = m.ground().ids().to_vec();
        prop_assume!(ids.len() >= 2);
        let c = ids[(pick % ids.len() as u64) as usize];
        let d = *ids.iter().find(|&&x| x != c).unwrap();
        let both = minor(m.clone(), &MinorSpec { contract: vec![c], delete: vec![d] }).unwrap();
        let first: SharedMatroid = Arc::new(minor(m.clone(), &MinorSpec::contract(vec![c])).unwrap());
        let stepwise = minor(first, &MinorSpec::delete(vec![d])).unwrap();
        prop_assert!(same_matroid(&both, &stepwise));
    }

    #[test]
    fn switching_preserves_the_matroid(seed: u64, i in 0u64..1000, v in 1u32..6, g in 0i64..6) {
        let f = [Family::GainZ2, Family::GainZ3, Family::GainS3][(i % 3) as usize];
        let inst = f.generate(seed, i, 8).unwrap();
        let Some(FrameGraph::Gain(gg)) = inst.frame() else { unreachable!() };
        prop_assume!(gg.graph().has_vertex(v));
        let order = gg.group().order().unwrap() as i64;
        let alpha = matdec::zoo::Elem(g % order);
        let s = switch(&gg, v, alpha).unwrap();
        prop_assert!(same_matroid(
            &frame_oracle(FrameGraph::Gain(gg)),
            &frame_oracle(FrameGraph::Gain(s))
        ));
    }

    #[test]
    fn nu_is_additive_over_bipartitions(seed: u64) {
        let mut rng = Lcg::new(seed);
        let g = gen::multigraph(&mut rng, 10).unwrap();
        let l = gen::bipartition(&mut rng, &g);
        let full = g.ground().full();
        let r = full.difference(l);
        let gamma = g.boundary(l).len() as i64;
        prop_assert_eq!(g.nu(full), g.nu(l) + g.nu(r) + gamma);
    }

    #[test]
    fn encodings_are_injective_and_runs_deterministic(seed: u64, a: u64, b: u64) {
        let mut rng = Lcg::new(seed);
        let l = gen::lattice(&mut rng, 10).unwrap();
        let p = lattice_parse(&l, None).unwrap();
        let full = Subset::full(l.len()).0;
        let (x, y) = (Subset(a & full), Subset(b & full));
        let ex = encode(&p.tree, &p.phi, x).unwrap();
        let ey = encode(&p.tree, &p.phi, y).unwrap();
        prop_assert_eq!(x == y, ex == ey);
        prop_assert!(run(&p.automaton, &ex).unwrap().states.iter().all(|s| s.len() <= 1));
    }
}

#[test]
fn integer_gain_switching() {
    let (g, m) = matdec::zoo::object_construction(2).unwrap();
    assert_eq!(*g.group(), Group::Integers);
    for v in 1..=3 {
        let s = switch(&g, v, matdec::zoo::Elem(-7)).unwrap();
        assert!(same_matroid(&m, &frame_oracle(FrameGraph::Gain(s))));
    }
}
