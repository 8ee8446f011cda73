//! Closed forms for commuting-tuple counts and orbifold Euler characteristics
//! of symmetric products, plus the centralizer recursion that computes the
//! same numbers without any series.
//!
//! The generating function for |Com(C_i Wr S_n, m)| / |C_i Wr S_n| is the
//! Euler product over all (i_1, ..., i_{m-1}) of
//! (1 - u^{i_1...i_{m-1}})^{-i^{m-1} i_1^{m-2} i_2^{m-3} ... i_{m-2}}.
//! Grouping the index tuples by d = i_1...i_{m-1} turns it into
//! prod_d (1 - u^d)^{-E(d)}, where E is an iterated Dirichlet convolution of
//! power functions.

use std::collections::HashMap;
use std::ops::ControlFlow;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Mutex;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::guard::Guards;
use crate::series::{IntSeries, Series};
use crate::wreath::{factorial, for_each_class_data, wr_group_order};

/// Per-degree exponents E(1..=N) of the collected Euler product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentTable {
    m: usize,
    base: u64,
    exponents: Vec<BigInt>,
}

impl ExponentTable {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn base(&self) -> u64 {
        self.base
    }

    /// Largest degree covered.
    pub fn order(&self) -> usize {
        self.exponents.len()
    }

    /// E(d) for 1 <= d <= order.
    pub fn exponent(&self, d: usize) -> &BigInt {
        &self.exponents[d - 1]
    }

    /// E(1), ..., E(order).
    pub fn exponents(&self) -> &[BigInt] {
        &self.exponents
    }

    /// Adds `delta` to E(d). Only meant for fault-injection runs of the
    /// verification suites.
    pub fn perturb(&mut self, d: usize, delta: i64) {
        if (1..=self.order()).contains(&d) {
            self.exponents[d - 1] += delta;
        }
    }
}

/// (f * g)(d) = sum over ab = d of f(a) g(b), with `f[k]` holding f(k + 1).
pub fn dirichlet_convolve(f: &[BigInt], g: &[BigInt]) -> Vec<BigInt> {
    let len = f.len().min(g.len());
    let mut h = vec![BigInt::zero(); len];
    for a in 1..=len {
        if f[a - 1].is_zero() {
            continue;
        }
        for b in 1..=len / a {
            h[a * b - 1] += &f[a - 1] * &g[b - 1];
        }
    }
    h
}

fn power_function(p: usize, len: usize) -> Vec<BigInt> {
    (1..=len).map(|d| num_traits::pow(BigInt::from(d), p)).collect()
}

/// E(d) = i^{m-1} * sum over ordered factorizations d = i_1 ... i_{m-1} of
/// i_1^{m-2} i_2^{m-3} ... i_{m-2}, for d = 1..=order.
pub fn exponent_table(m: usize, i: u64, order: usize) -> Result<ExponentTable> {
    if m < 2 {
        return Err(Error::InvalidArgument(format!(
            "exponent tables need m >= 2, got {m}"
        )));
    }
    if i == 0 {
        return Err(Error::InvalidArgument("base order must be at least 1".into()));
    }
    let mut acc = power_function(m - 2, order);
    for p in (0..m - 2).rev() {
        acc = dirichlet_convolve(&acc, &power_function(p, order));
    }
    let scale = num_traits::pow(BigInt::from(i), m - 1);
    if !scale.is_one() {
        for e in &mut acc {
            *e *= &scale;
        }
    }
    Ok(ExponentTable {
        m,
        base: i,
        exponents: acc,
    })
}

/// prod_{d=1}^{N} (1 - u^d)^{-scale * E(d)} over the integers, N = table order.
pub fn euler_product(table: &ExponentTable, scale: &BigInt) -> IntSeries {
    let order = table.order();
    let mut s = IntSeries::one(order);
    if scale.is_zero() {
        return s;
    }
    for (idx, e) in table.exponents().iter().enumerate() {
        s.mul_binomial_factor(idx + 1, &-(scale * e))
            .expect("degrees start at 1");
    }
    s
}

fn macdonald(chi: i64, order: usize) -> IntSeries {
    IntSeries::binomial_factor(1, &BigInt::from(-chi), order).expect("d = 1")
}

fn sym_series_int(m: usize, chi: i64, order: usize) -> Result<IntSeries> {
    match m {
        0 => Err(Error::InvalidArgument("tuple length must be at least 1".into())),
        1 => Ok(macdonald(chi, order)),
        _ => Ok(euler_product(&exponent_table(m, 1, order)?, &BigInt::from(chi))),
    }
}

/// sum_n chi_m(M^n, S_n) u^n up to u^order for a manifold M with Euler
/// characteristic `chi`. For m = 1 this is (1 - u)^{-chi}.
pub fn sym_series(m: usize, chi: i64, order: usize) -> Result<Series> {
    Ok(sym_series_int(m, chi, order)?.to_rational())
}

/// sum_n |Com(C_i Wr S_n, m)| / |C_i Wr S_n| u^n up to u^order.
///
/// For m = 1 every term is 1, giving (1 - u)^{-1}.
pub fn wreath_series(i: u64, m: usize, order: usize) -> Result<Series> {
    let s = match m {
        0 => return Err(Error::InvalidArgument("tuple length must be at least 1".into())),
        1 => macdonald(1, order),
        _ => euler_product(&exponent_table(m, i, order)?, &BigInt::one()),
    };
    Ok(s.to_rational())
}

/// `group_order * [u^n] series`, which must be an integer.
pub fn scaled_coefficient(series: &Series, n: usize, group_order: &BigInt) -> Result<BigInt> {
    let c = series.coeff(n)? * BigRational::from_integer(group_order.clone());
    if !c.is_integer() {
        return Err(Error::Integrality(format!(
            "{group_order} * [u^{n}] = {c} is not an integer"
        )));
    }
    Ok(c.to_integer())
}

/// |Com(S_n, m)| = n! [u^n] sym_series(m, 1).
pub fn com_count(m: usize, n: usize) -> Result<BigInt> {
    scaled_coefficient(&sym_series(m, 1, n)?, n, &factorial(n))
}

/// |Com(C_i Wr S_n, m)| = i^n n! [u^n] wreath_series(i, m).
pub fn wreath_com_count(i: u64, m: usize, n: usize) -> Result<BigInt> {
    scaled_coefficient(&wreath_series(i, m, n)?, n, &wr_group_order(i, n))
}

/// chi_m(M^n, S_n) for chi(M) = `chi`.
pub fn orbifold_chi(m: usize, chi: i64, n: usize) -> Result<BigInt> {
    scaled_coefficient(&sym_series(m, chi, n)?, n, &BigInt::one())
}

/// chi_m(M^n, S_n) for n = 0..=max_n.
pub fn orbifold_chis(m: usize, chi: i64, max_n: usize) -> Result<Vec<BigInt>> {
    let s = sym_series(m, chi, max_n)?;
    (0..=max_n)
        .map(|n| scaled_coefficient(&s, n, &BigInt::one()))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Symmetric,
    /// C_i Wr S_n for the given i.
    Wreath(u64),
}

impl Family {
    pub fn group_order(&self, n: usize) -> BigInt {
        match *self {
            Family::Symmetric => factorial(n),
            Family::Wreath(i) => wr_group_order(i, n),
        }
    }
}

/// |Com(G_n, m)| for n = 0..=max_n, from one series expansion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    pub family: Family,
    pub m: usize,
    pub rows: Vec<BigInt>,
}

pub fn count_table(family: Family, m: usize, max_n: usize) -> Result<CountTable> {
    let series = match family {
        Family::Symmetric => sym_series(m, 1, max_n)?,
        Family::Wreath(i) => wreath_series(i, m, max_n)?,
    };
    let rows = (0..=max_n)
        .map(|n| scaled_coefficient(&series, n, &family.group_order(n)))
        .collect::<Result<_>>()?;
    Ok(CountTable { family, m, rows })
}

/// p(0), ..., p(max_n) from Euler's pentagonal-number recurrence.
pub fn partition_numbers(max_n: usize) -> Vec<BigInt> {
    let mut p = vec![BigInt::zero(); max_n + 1];
    p[0] = BigInt::one();
    for n in 1..=max_n {
        let mut total = BigInt::zero();
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > n {
                break;
            }
            let g2 = k * (3 * k + 1) / 2;
            let mut term = p[n - g1].clone();
            if g2 <= n {
                term += &p[n - g2];
            }
            if k % 2 == 1 {
                total += term;
            } else {
                total -= term;
            }
        }
        p[n] = total;
    }
    p
}

/// Memoized centralizer recursion
///
/// W(i, n, m) = sum over class data (M_{j,k}) of C_i Wr S_n of
/// prod_{j,k} W(i k, M_{j,k}, m - 1), with W(., ., 1) = 1,
///
/// which is |Com(C_i Wr S_n, m)| / |C_i Wr S_n| because the centralizer of a
/// class is prod C_{ik} Wr S_{M_{j,k}}. The memo is shared across calls and
/// threads; racing writers agree on the value.
#[derive(Debug)]
pub struct CentralizerRecursion {
    memo: Mutex<HashMap<(u64, usize, usize), BigInt>>,
    nodes: AtomicU64,
    node_budget: u64,
}

impl CentralizerRecursion {
    pub fn new(node_budget: u64) -> Self {
        CentralizerRecursion {
            memo: Mutex::new(HashMap::new()),
            nodes: AtomicU64::new(0),
            node_budget,
        }
    }

    /// Class-data nodes expanded so far.
    pub fn nodes_expanded(&self) -> u64 {
        self.nodes.load(Ordering::Relaxed)
    }

    /// W(i, n, m).
    pub fn normalized(&self, i: u64, n: usize, m: usize) -> Result<BigInt> {
        if m == 0 {
            return Err(Error::InvalidArgument("tuple length must be at least 1".into()));
        }
        if i == 0 {
            return Err(Error::InvalidArgument("base order must be at least 1".into()));
        }
        if m == 1 || n == 0 {
            return Ok(BigInt::one());
        }
        if let Some(v) = self.memo.lock().expect("memo poisoned").get(&(i, n, m)) {
            return Ok(v.clone());
        }
        let mut total = BigInt::zero();
        let mut failure = None;
        for_each_class_data(i, n, |d| {
            let expanded = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
            if expanded > self.node_budget {
                failure = Some(Error::GuardExceeded {
                    what: "class-data nodes in the centralizer recursion",
                    limit: self.node_budget as u128,
                    requested: expanded as u128,
                });
                return ControlFlow::Break(());
            }
            let mut term = BigInt::one();
            for ((_, k), mult) in d.entries() {
                match self.normalized(i * k as u64, mult, m - 1) {
                    Ok(w) => term *= w,
                    Err(e) => {
                        failure = Some(e);
                        return ControlFlow::Break(());
                    }
                }
            }
            total += term;
            ControlFlow::Continue(())
        })?;
        if let Some(e) = failure {
            return Err(e);
        }
        let mut memo = self.memo.lock().expect("memo poisoned");
        Ok(memo.entry((i, n, m)).or_insert(total).clone())
    }

    /// |Com(C_i Wr S_n, m)| = W(i, n, m) i^n n!.
    pub fn com_count(&self, i: u64, n: usize, m: usize) -> Result<BigInt> {
        Ok(self.normalized(i, n, m)? * wr_group_order(i, n))
    }
}

/// |Com(C_i Wr S_n, m)| through the centralizer recursion, with a fresh memo.
pub fn com_count_recursive(i: u64, n: usize, m: usize, guards: &Guards) -> Result<BigInt> {
    CentralizerRecursion::new(guards.node_budget).com_count(i, n, m)
}
