//! The wreath product C_i Wr S_n.
//!
//! An element `(g_1, ..., g_n; p)` is stored with the `g_t` as residues mod
//! `i` (the cyclic group written additively) and acts on pairs `(t, x)` in
//! {0..n-1} x Z/i by `(t, x) -> (p(t), x + g_t)`. Products read left to right
//! like [`Permutation::compose`]:
//!
//! ```text
//! (g; p) * (h; q) = (g_t + h_{p(t)}; p then q)
//! ```
//!
//! The textbook form `g_t h_{(t)p^{-1}}` is the same group written with the
//! permutation acting on the other side; the associativity and class
//! invariance tests below pin this convention.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::ControlFlow;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::group::{count_commuting_tuples, Commute};
use crate::guard::Guards;
use crate::perm::{enumerate_sn, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WreathElement {
    base_order: u64,
    residues: Vec<u64>,
    perm: Permutation,
}

impl WreathElement {
    pub fn new(base_order: u64, residues: Vec<u64>, perm: Permutation) -> Result<Self> {
        if base_order == 0 {
            return Err(Error::InvalidArgument("base order must be at least 1".into()));
        }
        if residues.len() != perm.degree() {
            return Err(Error::DegreeMismatch {
                left: residues.len(),
                right: perm.degree(),
            });
        }
        if let Some(&r) = residues.iter().find(|&&r| r >= base_order) {
            return Err(Error::InvalidArgument(format!(
                "residue {r} is not reduced mod {base_order}"
            )));
        }
        Ok(WreathElement {
            base_order,
            residues,
            perm,
        })
    }

    pub fn identity(base_order: u64, n: usize) -> Self {
        WreathElement {
            base_order,
            residues: vec![0; n],
            perm: Permutation::identity(n),
        }
    }

    pub fn base_order(&self) -> u64 {
        self.base_order
    }

    pub fn degree(&self) -> usize {
        self.residues.len()
    }

    pub fn residues(&self) -> &[u64] {
        &self.residues
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn is_identity(&self) -> bool {
        self.perm.is_identity() && self.residues.iter().all(|&r| r == 0)
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.base_order != other.base_order {
            return Err(Error::BaseOrderMismatch {
                left: self.base_order,
                right: other.base_order,
            });
        }
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(())
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let i = self.base_order;
        let residues = self
            .residues
            .iter()
            .zip(self.perm.images())
            .map(|(&g, &pt)| (g + other.residues[pt]) % i)
            .collect();
        Ok(WreathElement {
            base_order: i,
            residues,
            perm: self.perm.compose(&other.perm)?,
        })
    }

    pub fn inverse(&self) -> Self {
        let i = self.base_order;
        let mut residues = vec![0; self.degree()];
        for (t, &pt) in self.perm.images().iter().enumerate() {
            residues[pt] = (i - self.residues[t]) % i;
        }
        WreathElement {
            base_order: i,
            residues,
            perm: self.perm.inverse(),
        }
    }

    /// `other * self * other^{-1}`.
    pub fn conjugate_by(&self, other: &Self) -> Result<Self> {
        other.multiply(self)?.multiply(&other.inverse())
    }

    /// The array (M_{j,k}): for every k-cycle of the permutation, sum the
    /// residues on it; a sum `s` puts the cycle in class j = s + 1.
    pub fn class_data(&self) -> ClassData {
        let mut counts = BTreeMap::new();
        for cycle in self.perm.cycles() {
            let s = cycle.iter().map(|&t| self.residues[t]).sum::<u64>() % self.base_order;
            *counts.entry((s + 1, cycle.len())).or_insert(0) += 1;
        }
        ClassData {
            base_order: self.base_order,
            degree: self.degree(),
            counts,
        }
    }
}

impl Commute for WreathElement {
    fn commutes_with(&self, other: &Self) -> bool {
        let i = self.base_order;
        let p = self.perm.images();
        let q = other.perm.images();
        (0..self.degree()).all(|t| {
            q[p[t]] == p[q[t]]
                && (self.residues[t] + other.residues[p[t]]) % i
                    == (other.residues[t] + self.residues[q[t]]) % i
        })
    }
}

/// `[g_1 .. g_n; perm]`, perm in 1-based cycle notation.
impl fmt::Display for WreathElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, r) in self.residues.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, "; {}]", self.perm)
    }
}

/// Conjugacy-class data (M_{j,k}) of C_i Wr S_n.
///
/// `j` in 1..=i names the residue class j - 1 of C_i, `k` a cycle length.
/// Only nonzero multiplicities are stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassData {
    base_order: u64,
    degree: usize,
    counts: BTreeMap<(u64, usize), usize>,
}

impl ClassData {
    /// Validates `sum k * M_{j,k} = n` and `1 <= j <= i`.
    pub fn new(
        base_order: u64,
        degree: usize,
        entries: impl IntoIterator<Item = ((u64, usize), usize)>,
    ) -> Result<Self> {
        let mut counts = BTreeMap::new();
        for ((j, k), mult) in entries {
            if j == 0 || j > base_order || k == 0 {
                return Err(Error::InvalidArgument(format!(
                    "class index (j={j}, k={k}) outside 1..={base_order} x 1.."
                )));
            }
            if mult > 0 {
                *counts.entry((j, k)).or_insert(0) += mult;
            }
        }
        let weight: usize = counts.iter().map(|(&(_, k), &mult)| k * mult).sum();
        if weight != degree {
            return Err(Error::InvalidArgument(format!(
                "class data covers {weight} points, degree is {degree}"
            )));
        }
        Ok(ClassData {
            base_order,
            degree,
            counts,
        })
    }

    pub fn base_order(&self) -> u64 {
        self.base_order
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn multiplicity(&self, j: u64, k: usize) -> usize {
        self.counts.get(&(j, k)).copied().unwrap_or(0)
    }

    /// Nonzero entries `((j, k), M_{j,k})` in increasing `(j, k)` order.
    pub fn entries(&self) -> impl Iterator<Item = ((u64, usize), usize)> + '_ {
        self.counts.iter().map(|(&key, &mult)| (key, mult))
    }

    /// An element with this class data: cycles laid out on consecutive
    /// points in increasing `(k, j)` order, each type-j cycle carrying the
    /// residue j - 1 on its first point and 0 elsewhere.
    pub fn representative(&self) -> WreathElement {
        let n = self.degree;
        let mut images: Vec<usize> = (0..n).collect();
        let mut residues = vec![0; n];
        let mut by_length: Vec<((usize, u64), usize)> = self
            .counts
            .iter()
            .map(|(&(j, k), &mult)| ((k, j), mult))
            .collect();
        by_length.sort_unstable();
        let mut start = 0;
        for ((k, j), mult) in by_length {
            for _ in 0..mult {
                for off in 0..k {
                    images[start + off] = start + (off + 1) % k;
                }
                residues[start] = j - 1;
                start += k;
            }
        }
        WreathElement {
            base_order: self.base_order,
            residues,
            perm: Permutation::new(images).expect("cycle layout is a bijection"),
        }
    }

    /// |C_{C_i Wr S_n}(x)| for x in this class: the centralizer is the direct
    /// product of C_{ik} Wr S_{M_{j,k}}, of order prod (i k)^{M_{j,k}} M_{j,k}!.
    pub fn centralizer_order(&self) -> BigInt {
        let mut order = BigInt::one();
        for (&(_, k), &mult) in &self.counts {
            let ik = BigInt::from(self.base_order) * k;
            order *= num_traits::pow(ik, mult) * factorial(mult);
        }
        order
    }

    /// Number of elements in the class.
    pub fn class_size(&self) -> BigInt {
        wr_group_order(self.base_order, self.degree) / self.centralizer_order()
    }
}

/// 1-based display: `M[j,k]=mult` entries, `{}` for the empty class of n = 0.
impl fmt::Display for ClassData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (idx, ((j, k), mult)) in self.entries().enumerate() {
            if idx > 0 {
                write!(f, ", ")?;
            }
            write!(f, "M[{j},{k}]={mult}")?;
        }
        write!(f, "}}")
    }
}

pub(crate) fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// |C_i Wr S_n| = i^n n!.
pub fn wr_group_order(i: u64, n: usize) -> BigInt {
    num_traits::pow(BigInt::from(i), n) * factorial(n)
}

/// Every class-data array of C_i Wr S_n exactly once.
///
/// Multiplicities are assigned to the slots (k, j) in increasing k, then j,
/// and the arrays come out in lexicographic order of that multiplicity vector.
pub fn enumerate_class_data(i: u64, n: usize) -> Result<Vec<ClassData>> {
    let mut out = Vec::new();
    for_each_class_data(i, n, |d| {
        out.push(d);
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// Streams the arrays of [`enumerate_class_data`] in the same order; the
/// callback may stop the walk early.
pub fn for_each_class_data(
    i: u64,
    n: usize,
    mut f: impl FnMut(ClassData) -> ControlFlow<()>,
) -> Result<()> {
    if i == 0 {
        return Err(Error::InvalidArgument("base order must be at least 1".into()));
    }
    let mut current = Vec::new();
    let _ = walk_slots(i, n, 0, n, &mut current, &mut f);
    Ok(())
}

fn walk_slots(
    i: u64,
    n: usize,
    slot: u64,
    remaining: usize,
    current: &mut Vec<((u64, usize), usize)>,
    f: &mut impl FnMut(ClassData) -> ControlFlow<()>,
) -> ControlFlow<()> {
    let k = (slot / i) as usize + 1;
    if remaining == 0 {
        return f(ClassData {
            base_order: i,
            degree: n,
            counts: current.iter().copied().collect(),
        });
    }
    if k > remaining {
        return ControlFlow::Continue(());
    }
    let j = slot % i + 1;
    // M = 0 first keeps the output lexicographic in the multiplicity vector.
    walk_slots(i, n, slot + 1, remaining, current, f)?;
    for mult in 1..=remaining / k {
        current.push(((j, k), mult));
        let flow = walk_slots(i, n, slot + 1, remaining - mult * k, current, f);
        current.pop();
        flow?;
    }
    ControlFlow::Continue(())
}

/// All i^n n! elements, permutations in lexicographic order, residue vectors
/// in lexicographic order within each permutation.
pub fn enumerate_wreath(i: u64, n: usize, guards: &Guards) -> Result<Vec<WreathElement>> {
    let order = wr_group_order(i, n);
    if order > BigInt::from(guards.max_enumeration_order) {
        return Err(Error::GuardExceeded {
            what: "order for listing C_i Wr S_n",
            limit: guards.max_enumeration_order,
            requested: u128::try_from(&order).unwrap_or(u128::MAX),
        });
    }
    if i == 0 {
        return Err(Error::InvalidArgument("base order must be at least 1".into()));
    }
    let mut out = Vec::new();
    let perms: Vec<Permutation> = enumerate_sn(n, &Guards {
        max_enumeration_degree: n,
        ..*guards
    })?
    .collect();
    for p in perms {
        let mut residues = vec![0u64; n];
        loop {
            out.push(WreathElement {
                base_order: i,
                residues: residues.clone(),
                perm: p.clone(),
            });
            if !advance_residues(&mut residues, i) {
                break;
            }
        }
    }
    Ok(out)
}

/// Odometer step over residue vectors, last position fastest.
fn advance_residues(residues: &mut [u64], i: u64) -> bool {
    for r in residues.iter_mut().rev() {
        *r += 1;
        if *r < i {
            return true;
        }
        *r = 0;
    }
    false
}

/// Number of listed elements commuting with `x`.
pub fn enumerated_centralizer_order(x: &WreathElement, elements: &[WreathElement]) -> usize {
    elements.iter().filter(|y| x.commutes_with(y)).count()
}

/// |Com(C_i Wr S_n, m)| by exhaustive centralizer recursion over the listed
/// group.
pub fn wr_brute_force_com(i: u64, n: usize, m: usize, guards: &Guards) -> Result<BigInt> {
    if m == 0 {
        return Err(Error::InvalidArgument("tuple length must be at least 1".into()));
    }
    if m > guards.max_tuple_len {
        return Err(Error::GuardExceeded {
            what: "tuple length for brute-force enumeration",
            limit: guards.max_tuple_len as u128,
            requested: m as u128,
        });
    }
    let order = wr_group_order(i, n);
    if order > BigInt::from(guards.max_group_order) {
        return Err(Error::GuardExceeded {
            what: "wreath-product order for commuting-tuple enumeration",
            limit: guards.max_group_order,
            requested: u128::try_from(&order).unwrap_or(u128::MAX),
        });
    }
    let elements = enumerate_wreath(i, n, guards)?;
    Ok(BigInt::from(count_commuting_tuples(&elements, m)))
}
