//! Permutations of {0, ..., n-1}, the component count of a tuple of
//! permutations, and exhaustive commuting-tuple enumeration over S_n.
//!
//! Products read left to right: `p.compose(&q)` applies `p` first, then `q`,
//! so `p.compose(&q).image(t) == q.image(p.image(t))`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::dsu::DisjointSets;
use crate::error::{Error, Result};
use crate::group::Commute;
use crate::guard::Guards;

/// A bijection of {0, ..., n-1} in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::NotABijection(images));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation of degree `n` from disjoint cycles of 0-based points.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (pos, &a) in cycle.iter().enumerate() {
                if a >= n || touched[a] {
                    return Err(Error::InvalidArgument(format!(
                        "cycles {cycles:?} are not disjoint cycles on {n} points"
                    )));
                }
                touched[a] = true;
                images[a] = cycle[(pos + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, t: usize) -> usize {
        self.images[t]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(t, &x)| t == x)
    }

    /// Apply `self`, then `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        check_degree(self, other)?;
        Ok(Permutation {
            images: self.images.iter().map(|&x| other.images[x]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (t, &x) in self.images.iter().enumerate() {
            images[x] = t;
        }
        Permutation { images }
    }

    pub fn commutes(&self, other: &Permutation) -> Result<bool> {
        check_degree(self, other)?;
        Ok(self.commutes_unchecked(other))
    }

    fn commutes_unchecked(&self, other: &Permutation) -> bool {
        self.images
            .iter()
            .zip(&other.images)
            .all(|(&p, &q)| other.images[p] == self.images[q])
    }

    /// Disjoint cycles, each starting at its smallest point, ordered by that
    /// point. Fixed points appear as 1-cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut t = start;
            while !seen[t] {
                seen[t] = true;
                cycle.push(t);
                t = self.images[t];
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle lengths in nonincreasing order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }
}

impl Commute for Permutation {
    fn commutes_with(&self, other: &Self) -> bool {
        self.commutes_unchecked(other)
    }
}

/// 1-based cycle notation; fixed points omitted, identity printed as `()`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for cycle in self.cycles().iter().filter(|c| c.len() > 1) {
            any = true;
            write!(f, "(")?;
            for (k, t) in cycle.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", t + 1)?;
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

fn check_degree(p: &Permutation, q: &Permutation) -> Result<()> {
    if p.degree() != q.degree() {
        return Err(Error::DegreeMismatch {
            left: p.degree(),
            right: q.degree(),
        });
    }
    Ok(())
}

/// The number #(p_1, ..., p_m) of connected components of the graph on
/// {0, ..., n-1} with an edge t -- p_j(t) for every j and t.
pub fn components(tuple: &[Permutation]) -> Result<usize> {
    let first = tuple.first().ok_or(Error::EmptyTuple)?;
    for p in tuple {
        check_degree(first, p)?;
    }
    let mut sets = DisjointSets::new(first.degree());
    for p in tuple {
        for (t, &x) in p.images.iter().enumerate() {
            sets.union(t, x);
        }
    }
    Ok(sets.count())
}

/// All of S_n in lexicographic order of one-line notation.
pub fn enumerate_sn(n: usize, guards: &Guards) -> Result<SymmetricGroup> {
    if n > guards.max_enumeration_degree {
        return Err(Error::GuardExceeded {
            what: "degree for listing S_n",
            limit: guards.max_enumeration_degree as u128,
            requested: n as u128,
        });
    }
    Ok(SymmetricGroup {
        next: Some((0..n).collect()),
    })
}

/// Iterator over S_n produced by [`enumerate_sn`].
#[derive(Debug, Clone)]
pub struct SymmetricGroup {
    next: Option<Vec<usize>>,
}

impl Iterator for SymmetricGroup {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_lexicographic(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation { images: current })
    }
}

fn next_lexicographic(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// All of S_n packed into one flat buffer, addressed by element index.
struct PermTable {
    n: usize,
    data: Vec<u8>,
}

impl PermTable {
    fn new(n: usize, guards: &Guards) -> Result<Self> {
        let mut data = Vec::new();
        for p in enumerate_sn(n, guards)? {
            data.extend(p.images.iter().map(|&x| x as u8));
        }
        Ok(PermTable { n, data })
    }

    fn order(&self) -> usize {
        // S_0 still has one (empty) element.
        self.data.len().checked_div(self.n).unwrap_or(1)
    }

    fn get(&self, e: u32) -> &[u8] {
        let s = e as usize * self.n;
        &self.data[s..s + self.n]
    }

    fn commute(&self, a: u32, b: u32) -> bool {
        let pa = self.get(a);
        let pb = self.get(b);
        pa.iter()
            .zip(pb)
            .all(|(&x, &y)| pb[x as usize] == pa[y as usize])
    }

    fn centralizer(&self, group: &[u32], g: u32) -> Vec<u32> {
        group
            .iter()
            .copied()
            .filter(|&h| self.commute(g, h))
            .collect()
    }

    /// One representative per cycle type of S_n with the class size.
    ///
    /// Any quantity invariant under simultaneous conjugation may be summed
    /// over these instead of the whole group.
    fn classes(&self) -> Vec<(u32, u128)> {
        let mut by_type: BTreeMap<Vec<usize>, (u32, u128)> = BTreeMap::new();
        for e in 0..self.order() as u32 {
            let p = Permutation {
                images: self.get(e).iter().map(|&x| x as usize).collect(),
            };
            by_type
                .entry(p.cycle_type())
                .and_modify(|slot| slot.1 += 1)
                .or_insert((e, 1));
        }
        by_type.into_values().collect()
    }

    fn union_into(&self, sets: &mut DisjointSets, e: u32) {
        for (t, &x) in self.get(e).iter().enumerate() {
            sets.union(t, x as usize);
        }
    }

    /// `full` means `group` is all of S_n and every element chosen so far is
    /// the identity, which makes the summand a class function.
    fn count(&self, group: &[u32], full: bool, m: usize) -> u128 {
        if m == 1 {
            return group.len() as u128;
        }
        let step = |&(g, mult): &(u32, u128)| -> u128 {
            let cent = self.centralizer(group, g);
            let cent_full = full && cent.len() == group.len();
            mult * self.count(&cent, cent_full, m - 1)
        };
        if full {
            self.classes().par_iter().map(step).sum()
        } else {
            group.iter().map(|&g| step(&(g, 1))).sum()
        }
    }

    fn histogram(
        &self,
        group: &[u32],
        full: bool,
        m: usize,
        sets: &DisjointSets,
        weight: u128,
        hist: &mut [u128],
    ) {
        if m == 0 {
            hist[sets.count()] += weight;
            return;
        }
        let terms: Vec<(u32, u128)> = if full {
            self.classes()
        } else {
            group.iter().map(|&g| (g, 1)).collect()
        };
        for (g, mult) in terms {
            let mut next = sets.clone();
            self.union_into(&mut next, g);
            if m == 1 {
                hist[next.count()] += weight * mult;
                continue;
            }
            let cent = self.centralizer(group, g);
            let cent_full = full && cent.len() == group.len();
            self.histogram(&cent, cent_full, m - 1, &next, weight * mult, hist);
        }
    }
}

fn check_tuple_guard(n: usize, m: usize, guards: &Guards) -> Result<()> {
    if m == 0 {
        return Err(Error::InvalidArgument("tuple length must be at least 1".into()));
    }
    if n > guards.max_tuple_degree {
        return Err(Error::GuardExceeded {
            what: "degree for commuting-tuple enumeration in S_n",
            limit: guards.max_tuple_degree as u128,
            requested: n as u128,
        });
    }
    if m > guards.max_tuple_len {
        return Err(Error::GuardExceeded {
            what: "tuple length for brute-force enumeration",
            limit: guards.max_tuple_len as u128,
            requested: m as u128,
        });
    }
    Ok(())
}

/// |Com(S_n, m)| by exhaustive centralizer recursion inside S_n.
pub fn brute_force_com(n: usize, m: usize, guards: &Guards) -> Result<BigInt> {
    check_tuple_guard(n, m, guards)?;
    let table = PermTable::new(n, guards)?;
    let all: Vec<u32> = (0..table.order() as u32).collect();
    Ok(BigInt::from(table.count(&all, true, m)))
}

/// `hist[k]` is the number of commuting `m`-tuples in S_n with exactly `k`
/// components; `hist` has length n + 1.
pub fn component_histogram(n: usize, m: usize, guards: &Guards) -> Result<Vec<BigInt>> {
    check_tuple_guard(n, m, guards)?;
    let table = PermTable::new(n, guards)?;
    let all: Vec<u32> = (0..table.order() as u32).collect();
    let hists: Vec<Vec<u128>> = table
        .classes()
        .par_iter()
        .map(|&(g, mult)| {
            let mut hist = vec![0u128; n + 1];
            let mut sets = DisjointSets::new(n);
            table.union_into(&mut sets, g);
            if m == 1 {
                hist[sets.count()] += mult;
            } else {
                let cent = table.centralizer(&all, g);
                let full = cent.len() == all.len();
                table.histogram(&cent, full, m - 1, &sets, mult, &mut hist);
            }
            hist
        })
        .collect();
    let mut total = vec![BigInt::zero(); n + 1];
    for h in hists {
        for (k, c) in h.into_iter().enumerate() {
            total[k] += c;
        }
    }
    Ok(total)
}

/// Sum over k of `hist[k] * chi^k`.
pub fn evaluate_histogram(hist: &[BigInt], chi: i64) -> BigInt {
    let chi = BigInt::from(chi);
    let mut power = BigInt::one();
    let mut total = BigInt::zero();
    for c in hist {
        total += c * &power;
        power *= &chi;
    }
    total
}

/// Sum over all commuting `m`-tuples of S_n of chi^#(tuple).
pub fn chi_weighted_sum(n: usize, m: usize, chi: i64, guards: &Guards) -> Result<BigInt> {
    Ok(evaluate_histogram(&component_histogram(n, m, guards)?, chi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::count_commuting_tuples;

    fn cyc(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Permutation::new(vec![0, 2]).is_err());
        assert!(Permutation::new(vec![]).is_ok());
    }

    #[test]
    fn compose_order_is_left_then_right() {
        let a = cyc(3, &[&[0, 1]]);
        let b = cyc(3, &[&[1, 2]]);
        // 0 -a-> 1 -b-> 2, 1 -a-> 0 -b-> 0, 2 -a-> 2 -b-> 1
        assert_eq!(a.compose(&b).unwrap(), cyc(3, &[&[0, 2, 1]]));
        assert_eq!(b.compose(&a).unwrap(), cyc(3, &[&[0, 1, 2]]));
        let id = Permutation::identity(3);
        assert_eq!(id.compose(&id).unwrap(), id);
    }

    #[test]
    fn degree_mismatch_is_an_error() {
        let a = Permutation::identity(2);
        let b = Permutation::identity(3);
        assert_eq!(
            a.compose(&b),
            Err(Error::DegreeMismatch { left: 2, right: 3 })
        );
        assert!(a.commutes(&b).is_err());
        assert!(components(&[a, b]).is_err());
        assert_eq!(components(&[]), Err(Error::EmptyTuple));
    }

    #[test]
    fn inverse_of_three_cycle() {
        assert_eq!(cyc(3, &[&[0, 1, 2]]).inverse(), cyc(3, &[&[0, 2, 1]]));
        assert_eq!(Permutation::identity(4).inverse(), Permutation::identity(4));
    }

    #[test]
    fn commutation_examples() {
        let t = cyc(4, &[&[0, 1]]);
        let dbl = cyc(4, &[&[0, 1], &[2, 3]]);
        assert!(t.commutes(&dbl).unwrap());
        assert!(t.commutes(&Permutation::identity(4)).unwrap());
        assert!(!cyc(3, &[&[0, 1]]).commutes(&cyc(3, &[&[1, 2]])).unwrap());
    }

    #[test]
    fn component_examples() {
        assert_eq!(components(&[Permutation::identity(3)]).unwrap(), 3);
        assert_eq!(components(&[cyc(3, &[&[0, 1, 2]])]).unwrap(), 1);
        assert_eq!(
            components(&[cyc(3, &[&[0, 1]]), Permutation::identity(3)]).unwrap(),
            2
        );
    }

    #[test]
    fn display_is_one_based() {
        assert_eq!(cyc(4, &[&[0, 1], &[2, 3]]).to_string(), "(1 2)(3 4)");
        assert_eq!(Permutation::identity(2).to_string(), "()");
    }

    #[test]
    fn enumeration_sizes_and_guard() {
        let g = Guards::default();
        assert_eq!(enumerate_sn(0, &g).unwrap().count(), 1);
        assert_eq!(enumerate_sn(3, &g).unwrap().count(), 6);
        let all: Vec<_> = enumerate_sn(5, &g).unwrap().collect();
        assert_eq!(all.len(), 120);
        let mut sorted = all.clone();
        sorted.dedup();
        assert_eq!(sorted.len(), 120);
        assert!(matches!(
            enumerate_sn(9, &g),
            Err(Error::GuardExceeded { .. })
        ));
    }

    #[test]
    fn brute_force_small_values() {
        let g = Guards::default();
        for n in 0..=5usize {
            let fact: u64 = (1..=n as u64).product();
            assert_eq!(brute_force_com(n, 1, &g).unwrap(), BigInt::from(fact));
        }
        for m in 1..=4 {
            assert_eq!(brute_force_com(1, m, &g).unwrap(), BigInt::one());
            assert_eq!(brute_force_com(0, m, &g).unwrap(), BigInt::one());
        }
        // exhaustive over the 36 ordered pairs of S_3
        let s3: Vec<_> = enumerate_sn(3, &g).unwrap().collect();
        let pairs = s3
            .iter()
            .flat_map(|a| s3.iter().map(move |b| (a, b)))
            .filter(|(a, b)| a.commutes(b).unwrap())
            .count();
        assert_eq!(pairs, 18);
        assert_eq!(brute_force_com(3, 2, &g).unwrap(), BigInt::from(pairs));
    }

    #[test]
    fn class_reduction_matches_plain_recursion() {
        let g = Guards::default();
        for n in 0..=5 {
            let elems: Vec<_> = enumerate_sn(n, &g).unwrap().collect();
            for m in 1..=3 {
                assert_eq!(
                    brute_force_com(n, m, &g).unwrap(),
                    BigInt::from(count_commuting_tuples(&elems, m)),
                    "n={n} m={m}"
                );
            }
        }
    }

    #[test]
    fn brute_force_guards() {
        let g = Guards::default();
        assert!(matches!(
            brute_force_com(7, 2, &g),
            Err(Error::GuardExceeded { .. })
        ));
        assert!(matches!(
            brute_force_com(3, 5, &g),
            Err(Error::GuardExceeded { .. })
        ));
        assert!(matches!(
            brute_force_com(3, 0, &g),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn weighted_sum_examples() {
        let g = Guards::default();
        // pairs in S_2 have # = 2, 1, 1, 1
        assert_eq!(chi_weighted_sum(2, 2, 2, &g).unwrap(), BigInt::from(10));
        for n in 1..=4 {
            for m in 1..=3 {
                assert_eq!(
                    chi_weighted_sum(n, m, 1, &g).unwrap(),
                    brute_force_com(n, m, &g).unwrap()
                );
                assert!(chi_weighted_sum(n, m, 0, &g).unwrap().is_zero());
            }
        }
    }
}
