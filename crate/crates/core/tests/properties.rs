use extquot::finite_oracle::{FiniteAction, PermGroup};
use extquot::iwahori_spherical::{
    grid_param_count, iwahori_component, monomial_symmetric_eval, normalize_param, CharacterGroup,
    DominantWeight, SteinbergParam,
};
use extquot::partitions::{centralizer_structure, class_size, factorial, Partition};
use extquot::symbolic_eq::{component_of, discrete_count};
use extquot::torus_model::{diagonal_rotate, retract, ComplexTorusPoint, Rotation, TorusPoint};
use num_complex::Complex64;
use proptest::prelude::*;

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..6, 1..8).prop_map(|v| Partition::from_multiset(v).unwrap())
}

fn perm(n: usize) -> impl Strategy<Value = Vec<u32>> {
    Just((0..n as u32).collect::<Vec<_>>()).prop_shuffle()
}

fn angles(n: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(0.0f64..1.0, n)
}

proptest! {
    #[test]
    fn centralizer_times_class_is_factorial(l in partition()) {
        prop_assert_eq!(centralizer_structure(&l).order * class_size(&l), factorial(l.n()));
        prop_assert_eq!(centralizer_structure(&l).cycle_type().unwrap(), l);
    }

    #[test]
    fn component_dimension_is_part_count(l in partition()) {
        let c = component_of(&l);
        prop_assert_eq!(c.dimension(), l.len());
        prop_assert_eq!(&c, &iwahori_component(&l));
    }

    #[test]
    fn steinberg_grid_count_matches(l in prop::collection::vec(1usize..4, 1..5), m in 1usize..4) {
        let l = Partition::from_multiset(l).unwrap();
        prop_assert_eq!(
            grid_param_count(&l, m).unwrap(),
            discrete_count(&iwahori_component(&l), m).unwrap()
        );
    }

    #[test]
    fn normalize_is_idempotent_and_order_blind(
        (blocks, raw) in prop::collection::vec(1usize..4, 1..6).prop_flat_map(|b| {
            let k = b.len();
            (Just(b), angles(k))
        }),
        seed in any::<u64>(),
    ) {
        let blocks = Partition::from_multiset(blocks).unwrap();
        let mut it = raw.iter().copied();
        let groups: Vec<CharacterGroup> = blocks
            .multiplicities()
            .into_iter()
            .map(|(size, r)| CharacterGroup { size, angles: (0..r).map(|_| it.next().unwrap()).collect() })
            .collect();
        let p = SteinbergParam::new(blocks.parts().to_vec(), groups.clone()).unwrap();
        let once = normalize_param(&p).unwrap();
        prop_assert_eq!(normalize_param(&once).unwrap(), once.clone());
        // reversing or rotating within each size group does not change the normal form
        let shuffled: Vec<CharacterGroup> = groups
            .into_iter()
            .map(|mut g| {
                let len = g.angles.len();
                g.angles.rotate_left((seed as usize) % len);
                g.angles.reverse();
                g
            })
            .collect();
        let q = SteinbergParam::new(blocks.parts().to_vec(), shuffled).unwrap();
        prop_assert_eq!(normalize_param(&q).unwrap(), once);
    }

    #[test]
    fn monomial_is_invariant_and_bounded(
        (w, a, sigma) in (1usize..6).prop_flat_map(|n| {
            (prop::collection::vec(-4i64..5, n), angles(n), perm(n))
        })
    ) {
        let w = DominantWeight::dominant(w).unwrap();
        let p = TorusPoint::continuous(a).unwrap();
        let v = monomial_symmetric_eval(&w, &p).unwrap();
        let u = monomial_symmetric_eval(&w, &p.permute(&sigma).unwrap()).unwrap();
        prop_assert!((v - u).norm() <= 1e-12 * 2f64.sqrt());
        prop_assert!(v.norm() <= w.orbit().len() as f64 + 1e-12);
    }

    #[test]
    fn continuous_rotation_commutes_with_permutation(
        (a, sigma) in (1usize..6).prop_flat_map(|n| (angles(n), perm(n))),
        t in 0.0f64..1.0,
    ) {
        let p = TorusPoint::continuous(a).unwrap();
        let lhs = diagonal_rotate(&p.permute(&sigma).unwrap(), Rotation::Angle(t)).unwrap();
        let rhs = diagonal_rotate(&p, Rotation::Angle(t)).unwrap().permute(&sigma).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn discrete_rotation_commutes_with_permutation(
        (m, c, sigma) in (1u32..7, 1usize..6).prop_flat_map(|(m, n)| {
            (Just(m), prop::collection::vec(0..m, n), perm(n))
        }),
        t in 0u32..20,
    ) {
        let p = TorusPoint::discrete(m, c).unwrap();
        let lhs = diagonal_rotate(&p.permute(&sigma).unwrap(), Rotation::Residue(t)).unwrap();
        let rhs = diagonal_rotate(&p, Rotation::Residue(t)).unwrap().permute(&sigma).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn retract_is_idempotent(
        z in prop::collection::vec((-1e3f64..1e3, -1e3f64..1e3), 1..6)
            .prop_filter("nonzero", |v| v.iter().all(|&(r, i)| r != 0.0 || i != 0.0))
    ) {
        let z = ComplexTorusPoint::new(z.into_iter().map(|(r, i)| Complex64::new(r, i)).collect()).unwrap();
        let once = retract(&z).unwrap();
        let twice = retract(&once.to_complex().unwrap()).unwrap();
        prop_assert!(once.approx_eq(&twice));
        // scaling a coordinate by a positive real does not move the retraction
        let scaled = ComplexTorusPoint::new(z.coords().iter().map(|c| c * 7.5).collect()).unwrap();
        prop_assert!(retract(&scaled).unwrap().approx_eq(&once));
    }

    #[test]
    fn random_permutation_groups_pass_burnside(
        n in 2usize..6,
        gens in prop::collection::vec(any::<u64>(), 1..3),
    ) {
        let gens: Vec<Vec<u32>> = gens
            .iter()
            .map(|&seed| {
                let mut p: Vec<u32> = (0..n as u32).collect();
                let mut s = seed;
                for i in (1..n).rev() {
                    s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    p.swap(i, (s >> 33) as usize % (i + 1));
                }
                p
            })
            .collect();
        let g = PermGroup::generated_by(n, &gens).unwrap();
        let a = FiniteAction::on_carrier(g).unwrap();
        let eq = a.extended_quotient_orbits();
        prop_assert_eq!(eq.orbit_count(), a.burnside_pair_count().unwrap());
        prop_assert_eq!(eq.count_over_class(&[0]), a.point_orbits().len());
    }
}
