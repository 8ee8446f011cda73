//! Exhaustive commuting-tuple counts inside an explicitly listed finite group.
//!
//! Uses only the recursion |Com(G, m)| = sum over g in G of |Com(C_G(g), m - 1)|
//! with |Com(G, 1)| = |G|, where every centralizer is obtained by filtering
//! the element list. Nothing here knows about class data or series.

use rayon::prelude::*;

/// Elements that can test commutation with each other without allocating.
pub trait Commute {
    fn commutes_with(&self, other: &Self) -> bool;
}

/// Number of ordered `m`-tuples of mutually commuting elements of the group
/// whose full element list is `elements`.
///
/// `m = 0` counts the empty tuple.
pub fn count_commuting_tuples<E: Commute + Sync>(elements: &[E], m: usize) -> u128 {
    let all: Vec<u32> = (0..elements.len() as u32).collect();
    if m == 0 {
        return 1;
    }
    if m == 1 {
        return all.len() as u128;
    }
    all.par_iter()
        .map(|&g| {
            let cent = centralizer(elements, &all, g);
            count_in(elements, &cent, m - 1)
        })
        .sum()
}

fn count_in<E: Commute>(elements: &[E], group: &[u32], m: usize) -> u128 {
    if m == 1 {
        return group.len() as u128;
    }
    group
        .iter()
        .map(|&g| {
            let cent = centralizer(elements, group, g);
            count_in(elements, &cent, m - 1)
        })
        .sum()
}

/// Indices in `group` commuting with `elements[g]`.
pub fn centralizer<E: Commute>(elements: &[E], group: &[u32], g: u32) -> Vec<u32> {
    let x = &elements[g as usize];
    group
        .iter()
        .copied()
        .filter(|&h| x.commutes_with(&elements[h as usize]))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(Clone, Copy)]
    struct Cyclic;

    impl Commute for Cyclic {
        fn commutes_with(&self, _: &Self) -> bool {
            true
        }
    }

    #[test]
    fn abelian_group_counts_are_powers() {
        let g: Vec<Cyclic> = (0..5).map(|_| Cyclic).collect();
        for m in 0..4 {
            assert_eq!(count_commuting_tuples(&g, m), 5u128.pow(m as u32));
        }
    }
}
