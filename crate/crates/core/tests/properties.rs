use metalie_core::automorphism::{iaut_l2, linear_map2, preserves_elements};
use metalie_core::sampling::{combination, graded_bases, poly, seeded, small_rational, symmetric_bases, BracketTree, SeededRng};
use metalie_core::{
    inner_eps, inner_psi, linear_xi, lyndon_decompose, phi_f, project_metabelian, reynolds, AlgebraSpec, CommPoly, Endomorphism,
    FreeLieElement, LieElement, LinearXi, MetabelianElement, Permutation, Rational,
};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, ..ProptestConfig::default() }
}

fn metabelian_specs() -> Vec<AlgebraSpec> {
    vec![
        AlgebraSpec::metabelian(2).unwrap(),
        AlgebraSpec::metabelian(3).unwrap(),
        AlgebraSpec::nilpotent(2, 4).unwrap(),
        AlgebraSpec::nilpotent(3, 3).unwrap(),
    ]
}

fn random_element(rng: &mut SeededRng, spec: &AlgebraSpec, max_degree: usize) -> MetabelianElement {
    let basis: Vec<MetabelianElement> = graded_bases(spec, 1..=max_degree).unwrap();
    combination(rng, spec, &basis).unwrap()
}

fn random_commutator(rng: &mut SeededRng, spec: &AlgebraSpec, max_degree: usize) -> MetabelianElement {
    random_element(rng, spec, max_degree).commutator_part()
}

fn random_perm(rng: &mut SeededRng, n: usize) -> Permutation {
    let mut images: Vec<usize> = (1..=n).collect();
    images.shuffle(rng);
    Permutation::new(images).unwrap()
}

proptest! {
    #![proptest_config(config(48))]

    #[test]
    fn rewriting_agrees_with_free_embedding(seed in any::<u64>(), n in 2usize..=3, degree in 1usize..=6) {
        let mut rng = seeded(seed);
        let tree = BracketTree::random(&mut rng, n, degree);
        let free = AlgebraSpec::free(n).unwrap();
        let via_free: FreeLieElement = tree.eval(&free).unwrap();
        for spec in [AlgebraSpec::metabelian(n).unwrap(), AlgebraSpec::nilpotent(n, 4).unwrap()] {
            let direct: MetabelianElement = tree.eval(&spec).unwrap();
            prop_assert_eq!(project_metabelian(&via_free, &spec).unwrap(), direct, "tree {}", tree);
        }
    }

    #[test]
    fn antisymmetry_and_jacobi(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        for spec in metabelian_specs() {
            let [a, b, c] = [(); 3].map(|_| random_element(&mut rng, &spec, 3));
            prop_assert!(a.bracket(&b).unwrap().try_add(&b.bracket(&a).unwrap()).unwrap().is_zero());
            let jacobi = a.bracket(&b).unwrap().bracket(&c).unwrap()
                .try_add(&b.bracket(&c).unwrap().bracket(&a).unwrap()).unwrap()
                .try_add(&c.bracket(&a).unwrap().bracket(&b).unwrap()).unwrap();
            prop_assert!(jacobi.is_zero(), "{} {} {}", a, b, c);
        }
    }

    #[test]
    fn free_jacobi(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let spec = AlgebraSpec::free(2).unwrap();
        let [a, b, c]: [FreeLieElement; 3] = [(); 3].map(|_| {
            let d = rng.gen_range(1..=2);
            BracketTree::random(&mut rng, 2, d).eval(&spec).unwrap()
        });
        let jacobi = a.bracket(&b).unwrap().bracket(&c).unwrap()
            .try_add(&b.bracket(&c).unwrap().bracket(&a).unwrap()).unwrap()
            .try_add(&c.bracket(&a).unwrap().bracket(&b).unwrap()).unwrap();
        prop_assert!(jacobi.is_zero());
        prop_assert!(a.bracket(&a).unwrap().is_zero());
    }

    #[test]
    fn module_action_is_a_module(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        for spec in metabelian_specs() {
            let n = spec.rank();
            let e = random_commutator(&mut rng, &spec, 3);
            let (p, q) = (poly(&mut rng, n, 2), poly(&mut rng, n, 1));
            let left = e.module_act(&p).unwrap().module_act(&q).unwrap();
            prop_assert_eq!(left, e.module_act(&p.try_mul(&q).unwrap()).unwrap());
            let sum = e.module_act(&p).unwrap().try_add(&e.module_act(&q).unwrap()).unwrap();
            prop_assert_eq!(sum, e.module_act(&p.try_add(&q).unwrap()).unwrap());
            let k = rng.gen_range(1..=n);
            let t = CommPoly::variable(n, k).unwrap();
            let xk = MetabelianElement::generator(&spec, k).unwrap();
            prop_assert_eq!(e.module_act(&t).unwrap(), e.bracket(&xk).unwrap());
        }
    }

    #[test]
    fn polynomial_relabelling_is_a_morphism(seed in any::<u64>(), n in 2usize..=4) {
        let mut rng = seeded(seed);
        let (p, q) = (poly(&mut rng, n, 2), poly(&mut rng, n, 2));
        let (s, t) = (random_perm(&mut rng, n), random_perm(&mut rng, n));
        prop_assert_eq!(p.try_mul(&q).unwrap().permute(&s).unwrap(), p.permute(&s).unwrap().try_mul(&q.permute(&s).unwrap()).unwrap());
        prop_assert_eq!(p.permute(&s).unwrap().permute(&t).unwrap(), p.permute(&t.compose(&s).unwrap()).unwrap());
    }

    #[test]
    fn reynolds_projects_onto_invariants(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        for spec in metabelian_specs() {
            let e = random_element(&mut rng, &spec, 3);
            let r = reynolds(&e).unwrap();
            prop_assert!(metalie_core::is_symmetric(&r).verdict);
            prop_assert_eq!(reynolds(&r).unwrap(), r.clone());
            for p in Permutation::all(spec.rank()) {
                prop_assert_eq!(r.permute(&p).unwrap(), r.clone());
            }
        }
    }

    #[test]
    fn bracket_is_equivariant(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        for spec in metabelian_specs() {
            let (a, b) = (random_element(&mut rng, &spec, 3), random_element(&mut rng, &spec, 3));
            let p = random_perm(&mut rng, spec.rank());
            prop_assert_eq!(
                a.bracket(&b).unwrap().permute(&p).unwrap(),
                a.permute(&p).unwrap().bracket(&b.permute(&p).unwrap()).unwrap()
            );
        }
    }

    #[test]
    fn psi_group_law(seed in any::<u64>(), n in 2usize..=3) {
        let mut rng = seeded(seed);
        let spec = AlgebraSpec::metabelian(n).unwrap();
        let (u1, u2) = (random_commutator(&mut rng, &spec, 4), random_commutator(&mut rng, &spec, 4));
        let composed = inner_psi(&u1).unwrap().compose(&inner_psi(&u2).unwrap()).unwrap();
        prop_assert_eq!(composed, inner_psi(&u1.try_add(&u2).unwrap()).unwrap());
        prop_assert!(inner_psi(&u1).unwrap().compose(&inner_psi(&u1.neg()).unwrap()).unwrap().is_identity());
    }

    #[test]
    fn eps_is_a_homomorphism(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        for spec in [AlgebraSpec::nilpotent(2, 4).unwrap(), AlgebraSpec::nilpotent(3, 3).unwrap()] {
            let u = random_element(&mut rng, &spec, 2);
            let eps = inner_eps(&u).unwrap();
            let (a, b) = (random_element(&mut rng, &spec, 2), random_element(&mut rng, &spec, 2));
            prop_assert_eq!(eps.apply(&a.bracket(&b).unwrap()).unwrap(), eps.apply(&a).unwrap().bracket(&eps.apply(&b).unwrap()).unwrap());
            prop_assert!(eps.is_automorphism().unwrap());
        }
    }

    #[test]
    fn xi_maps_compose_in_closed_form(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let spec = AlgebraSpec::free(2).unwrap();
        let draw = |rng: &mut SeededRng| loop {
            let (a, b) = (small_rational(rng), small_rational(rng));
            if &a * &a != &b * &b {
                return (a, b);
            }
        };
        let ((a, b), (c, d)) = (draw(&mut rng), draw(&mut rng));
        let x: LinearXi<FreeLieElement> = linear_xi(&spec, a.clone(), b.clone()).unwrap();
        let y: LinearXi<FreeLieElement> = linear_xi(&spec, c.clone(), d.clone()).unwrap();
        let z: LinearXi<FreeLieElement> = linear_xi(&spec, &a * &c + &b * &d, &a * &d + &c * &b).unwrap();
        prop_assert_eq!(&x.endomorphism().compose(y.endomorphism()).unwrap(), z.endomorphism());
    }

    #[test]
    fn phi_preserves_symmetric_elements(seed in any::<u64>(), class in 3usize..=5) {
        let mut rng = seeded(seed);
        let spec = AlgebraSpec::nilpotent(2, class).unwrap();
        let f = poly(&mut rng, 2, class - 2);
        let symmetric: Vec<MetabelianElement> = symmetric_bases(&spec, 1..=class).unwrap();
        prop_assert!(preserves_elements(&phi_f(&f, class).unwrap(), &symmetric).unwrap().preserved);
    }

    #[test]
    fn lyndon_coordinates_round_trip(seed in any::<u64>(), n in 2usize..=3, degree in 1usize..=5) {
        let mut rng = seeded(seed);
        let spec = AlgebraSpec::free(n).unwrap();
        let e: FreeLieElement = BracketTree::random(&mut rng, n, degree).eval(&spec).unwrap();
        let coords = e.coordinates(degree).unwrap();
        prop_assert_eq!(FreeLieElement::from_coordinates(&spec, degree, &coords).unwrap(), e.clone());
        let decomposition = lyndon_decompose(&e).unwrap();
        prop_assert_eq!(decomposition.len(), coords.iter().filter(|c| **c != Rational::from_integer(0.into())).count());
    }
}

#[test]
fn iaut_with_swapped_polynomial_is_phi() {
    let f = CommPoly::variable(2, 1).unwrap();
    let spec = AlgebraSpec::nilpotent(2, 5).unwrap();
    let g = f.permute(&Permutation::transposition(2, 1, 2).unwrap()).unwrap();
    assert_eq!(iaut_l2(&spec, &f, &-&g).unwrap(), phi_f(&f, 5).unwrap());
}

#[test]
fn general_linear_maps_act_linearly_on_brackets() {
    let spec = AlgebraSpec::metabelian(2).unwrap();
    let one = Rational::from_integer(1.into());
    let two = Rational::from_integer(2.into());
    let zero = Rational::from_integer(0.into());
    let map: Endomorphism<MetabelianElement> = linear_map2(&spec, [&one, &zero, &zero, &two]).unwrap();
    let xy = MetabelianElement::generator(&spec, 2).unwrap().bracket(&MetabelianElement::generator(&spec, 1).unwrap()).unwrap();
    assert_eq!(map.apply(&xy).unwrap(), xy.scale(&two));
}
