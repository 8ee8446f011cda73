use std::collections::{HashMap, HashSet};

use comtuples::dsu::DisjointSets;
use comtuples::formula::{com_count, wreath_com_count, wreath_series};
use comtuples::perm::{
    brute_force_com, chi_weighted_sum, components, enumerate_sn, Permutation,
};
use comtuples::wreath::{
    enumerate_class_data, enumerate_wreath, wr_group_order, ClassData, WreathElement,
};
use comtuples::Guards;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

fn perm_strategy(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::new(v).unwrap())
}

fn perm_triple() -> impl Strategy<Value = (Permutation, Permutation, Permutation)> {
    (0usize..=8).prop_flat_map(|n| (perm_strategy(n), perm_strategy(n), perm_strategy(n)))
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, k| a * k)
}

proptest! {
    #[test]
    fn permutation_group_axioms((a, b, c) in perm_triple()) {
        let id = Permutation::identity(a.degree());
        prop_assert_eq!(
            a.compose(&b).unwrap().compose(&c).unwrap(),
            a.compose(&b.compose(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(a.compose(&id).unwrap(), a.clone());
        prop_assert_eq!(id.compose(&a).unwrap(), a.clone());
        prop_assert_eq!(a.compose(&a.inverse()).unwrap(), id.clone());
        prop_assert_eq!(a.inverse().compose(&a).unwrap(), id);
        prop_assert_eq!(a.inverse().inverse(), a);
    }

    #[test]
    fn commutation_is_symmetric((a, b, _c) in perm_triple()) {
        prop_assert_eq!(a.commutes(&b).unwrap(), b.commutes(&a).unwrap());
        prop_assert_eq!(
            a.commutes(&b).unwrap(),
            a.compose(&b).unwrap() == b.compose(&a).unwrap()
        );
    }

    #[test]
    fn component_count_invariants((a, b, c) in perm_triple()) {
        let n = a.degree();
        let id = Permutation::identity(n);
        let k = components(&[a.clone(), b.clone(), c.clone()]).unwrap();
        prop_assert_eq!(k, components(&[c.clone(), a.clone(), b.clone()]).unwrap());
        prop_assert_eq!(k, components(&[b.clone(), id.clone(), c.clone(), a.clone(), id]).unwrap());
        prop_assert!(k <= n);
        if n > 0 {
            prop_assert!(k >= 1);
        }
        prop_assert_eq!(components(std::slice::from_ref(&a)).unwrap(), a.cycles().len());
    }

    #[test]
    fn union_find_ignores_edge_order(
        edges in prop::collection::vec((0usize..12, 0usize..12), 0..30),
        seed in any::<u64>(),
    ) {
        let mut shuffled = edges.clone();
        shuffled.shuffle(&mut StdRng::seed_from_u64(seed));
        let mut a = DisjointSets::new(12);
        let mut b = DisjointSets::new(12);
        for &(x, y) in &edges {
            a.union(x, y);
        }
        for &(x, y) in &shuffled {
            b.union(y, x);
        }
        prop_assert_eq!(a.count(), b.count());
        for x in 0..12 {
            for y in 0..12 {
                prop_assert_eq!(a.find(x) == a.find(y), b.find(x) == b.find(y));
            }
        }
    }
}

/// All m-tuples of S_n, filtered to the mutually commuting ones.
fn naive_weighted_sum(n: usize, m: usize, chi: i64) -> BigInt {
    let g = Guards::default();
    let elems: Vec<Permutation> = enumerate_sn(n, &g).unwrap().collect();
    let mut total = BigInt::zero();
    let mut idx = vec![0usize; m];
    loop {
        let tuple: Vec<Permutation> = idx.iter().map(|&k| elems[k].clone()).collect();
        let commuting = tuple
            .iter()
            .enumerate()
            .all(|(a, p)| tuple[a + 1..].iter().all(|q| p.commutes(q).unwrap()));
        if commuting {
            let k = if n == 0 { 0 } else { components(&tuple).unwrap() };
            total += num_traits::pow(BigInt::from(chi), k);
        }
        let mut pos = m;
        loop {
            if pos == 0 {
                return total;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < elems.len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

#[test]
fn weighted_sum_matches_naive_tuple_loop() {
    let g = Guards::default();
    for n in 0..=4 {
        for m in 1..=3 {
            for chi in [-2i64, -1, 0, 1, 2, 3] {
                assert_eq!(
                    chi_weighted_sum(n, m, chi, &g).unwrap(),
                    naive_weighted_sum(n, m, chi),
                    "n={n} m={m} chi={chi}"
                );
            }
        }
    }
}

#[test]
fn brute_force_counts_are_divisible_by_group_order() {
    let g = Guards::default();
    for n in 0..=5 {
        for m in 2..=4 {
            let c = brute_force_com(n, m, &g).unwrap();
            assert!((c % factorial(n)).is_zero(), "n={n} m={m}");
        }
    }
}

#[test]
fn brute_force_at_the_default_guard_edge() {
    let g = Guards::default();
    for m in 1..=4 {
        assert_eq!(brute_force_com(6, m, &g).unwrap(), com_count(m, 6).unwrap());
    }
}

fn random_wreath(rng: &mut StdRng, i: u64, n: usize) -> WreathElement {
    let mut images: Vec<usize> = (0..n).collect();
    images.shuffle(rng);
    let residues = (0..n).map(|_| rng.gen_range(0..i)).collect();
    WreathElement::new(i, residues, Permutation::new(images).unwrap()).unwrap()
}

#[test]
fn wreath_group_axioms() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for _ in 0..500 {
        let (a, b, c) = (
            random_wreath(&mut rng, 3, 3),
            random_wreath(&mut rng, 3, 3),
            random_wreath(&mut rng, 3, 3),
        );
        assert_eq!(
            a.multiply(&b).unwrap().multiply(&c).unwrap(),
            a.multiply(&b.multiply(&c).unwrap()).unwrap()
        );
    }
    for i in 1..=3 {
        for n in 0..=4 {
            for _ in 0..50 {
                let a = random_wreath(&mut rng, i, n);
                let id = WreathElement::identity(i, n);
                assert_eq!(id.multiply(&a).unwrap(), a);
                assert_eq!(a.multiply(&id).unwrap(), a);
                assert!(a.multiply(&a.inverse()).unwrap().is_identity());
                assert!(a.inverse().multiply(&a).unwrap().is_identity());
            }
        }
    }
}

#[test]
fn class_data_is_a_conjugacy_invariant() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..300 {
        let x = random_wreath(&mut rng, 2, 3);
        let y = random_wreath(&mut rng, 2, 3);
        assert_eq!(x.conjugate_by(&y).unwrap().class_data(), x.class_data());
    }
}

#[test]
fn class_data_separates_conjugacy_classes() {
    let g = Guards::default();
    for i in 1..=2 {
        for n in 0..=3 {
            let elems = enumerate_wreath(i, n, &g).unwrap();
            let mut orbit_of: HashMap<WreathElement, usize> = HashMap::new();
            let mut orbits = 0;
            for x in &elems {
                if orbit_of.contains_key(x) {
                    continue;
                }
                let orbit: HashSet<WreathElement> =
                    elems.iter().map(|y| x.conjugate_by(y).unwrap()).collect();
                let data: HashSet<ClassData> = orbit.iter().map(WreathElement::class_data).collect();
                assert_eq!(data.len(), 1);
                for z in orbit {
                    orbit_of.insert(z, orbits);
                }
                orbits += 1;
            }
            let by_data: HashSet<ClassData> = elems.iter().map(WreathElement::class_data).collect();
            assert_eq!(by_data.len(), orbits, "i={i} n={n}");
            assert_eq!(enumerate_class_data(i, n).unwrap().len(), orbits);
        }
    }
}

#[test]
fn class_counts_match_pair_series() {
    for i in 1..=3 {
        let s = wreath_series(i, 2, 6).unwrap();
        for n in 0..=6 {
            let classes = enumerate_class_data(i, n).unwrap().len();
            assert_eq!(s.coeff(n).unwrap(), &BigRational::from_integer(classes.into()));
            assert_eq!(
                wreath_com_count(i, 2, n).unwrap(),
                wr_group_order(i, n) * classes
            );
        }
    }
}
