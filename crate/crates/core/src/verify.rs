//! Cross-check sweeps. Each suite evaluates one identity along two or more
//! independent routes over a parameter grid and records every comparison.
//!
//! Suites never stop at the first mismatch; a report's `pass` is the
//! conjunction of its rows. Row order is the nested loop order of the sweep,
//! so reports are reproducible byte for byte.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::Result;
use crate::formula::{
    self, euler_product, exponent_table, scaled_coefficient, CentralizerRecursion,
};
use crate::guard::Guards;
use crate::perm::{brute_force_com, component_histogram, evaluate_histogram};
use crate::series::{Series, TruncatedSeries};
use crate::wreath::{
    enumerate_class_data, enumerate_wreath, enumerated_centralizer_order, factorial,
    wr_brute_force_com, wr_group_order,
};

/// One comparison. Fields are declared in alphabetical order so the JSON
/// keys come out sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRow {
    pub lhs: String,
    pub params: BTreeMap<String, Value>,
    pub pass: bool,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub params: BTreeMap<String, Value>,
    pub pass: bool,
    pub rows: Vec<CheckRow>,
    pub suite: String,
}

impl CheckReport {
    fn new(suite: &str, params: Value) -> Self {
        CheckReport {
            params: into_map(params),
            pass: true,
            rows: Vec::new(),
            suite: suite.to_string(),
        }
    }

    fn push(&mut self, params: Value, lhs: impl ToString, rhs: impl ToString) {
        let lhs = lhs.to_string();
        let rhs = rhs.to_string();
        let pass = lhs == rhs;
        self.pass &= pass;
        self.rows.push(CheckRow {
            lhs,
            params: into_map(params),
            pass,
            rhs,
        });
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRow> {
        self.rows.iter().filter(|r| !r.pass)
    }
}

fn into_map(v: Value) -> BTreeMap<String, Value> {
    match v {
        Value::Object(map) => map.into_iter().collect(),
        _ => BTreeMap::new(),
    }
}

/// Deliberate corruption of one exponent E(d) on the series route, used to
/// prove the suites can fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExponentFault {
    pub degree: usize,
    pub delta: i64,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Options {
    pub guards: Guards,
    pub fault: Option<ExponentFault>,
}

impl Options {
    fn table(&self, m: usize, i: u64, order: usize) -> Result<formula::ExponentTable> {
        let mut t = exponent_table(m, i, order)?;
        if let Some(f) = self.fault {
            t.perturb(f.degree, f.delta);
        }
        Ok(t)
    }

    fn sym_series(&self, m: usize, chi: i64, order: usize) -> Result<Series> {
        if m < 2 {
            return formula::sym_series(m, chi, order);
        }
        Ok(euler_product(&self.table(m, 1, order)?, &BigInt::from(chi)).to_rational())
    }

    fn wreath_series(&self, i: u64, m: usize, order: usize) -> Result<Series> {
        if m < 2 {
            return formula::wreath_series(i, m, order);
        }
        Ok(euler_product(&self.table(m, i, order)?, &BigInt::from(1)).to_rational())
    }
}

/// chi_weighted_sum(n, m, chi) against n! chi_m(M^n, S_n).
pub fn check_eq1(max_n: usize, max_m: usize, chis: &[i64], opts: &Options) -> Result<CheckReport> {
    let mut report = CheckReport::new(
        "eq1",
        json!({ "max_n": max_n, "max_m": max_m, "chi": chis }),
    );
    for m in 1..=max_m {
        let hists: Vec<Vec<BigInt>> = (0..=max_n)
            .map(|n| component_histogram(n, m, &opts.guards))
            .collect::<Result<_>>()?;
        for &chi in chis {
            let series = opts.sym_series(m, chi, max_n)?;
            for (n, hist) in hists.iter().enumerate() {
                let lhs = evaluate_histogram(hist, chi);
                let rhs = scaled_coefficient(&series, n, &factorial(n))?;
                report.push(json!({ "n": n, "m": m, "chi": chi }), lhs, rhs);
            }
        }
    }
    Ok(report)
}

fn egf(values: &[BigInt]) -> Series {
    let coeffs = values
        .iter()
        .enumerate()
        .map(|(n, v)| BigRational::new(v.clone(), factorial(n)))
        .collect();
    TruncatedSeries::from_coeffs(coeffs).expect("at least the n = 0 term")
}

fn render(q: &BigRational) -> String {
    if q.is_integer() {
        q.to_integer().to_string()
    } else {
        q.to_string()
    }
}

/// The chi-weighted EGF against the chi-th power of the count EGF, both
/// sides from exhaustive enumeration. Rows compare n! times the coefficient
/// of u^n.
pub fn check_lemma_t1(order: usize, max_m: usize, chis: &[u64], opts: &Options) -> Result<CheckReport> {
    let mut report = CheckReport::new(
        "t1",
        json!({ "order": order, "max_m": max_m, "chi": chis }),
    );
    for m in 1..=max_m {
        let hists: Vec<Vec<BigInt>> = (0..=order)
            .map(|n| component_histogram(n, m, &opts.guards))
            .collect::<Result<_>>()?;
        let counts: Vec<BigInt> = hists.iter().map(|h| evaluate_histogram(h, 1)).collect();
        let count_egf = egf(&counts);
        for &chi in chis {
            let weighted: Vec<BigInt> =
                hists.iter().map(|h| evaluate_histogram(h, chi as i64)).collect();
            let lhs = egf(&weighted);
            let rhs = count_egf.pow(chi);
            for n in 0..=order {
                let scale = BigRational::from_integer(factorial(n));
                report.push(
                    json!({ "n": n, "m": m, "chi": chi }),
                    render(&(&lhs.coeffs()[n] * &scale)),
                    render(&(&rhs.coeffs()[n] * &scale)),
                );
            }
        }
    }
    Ok(report)
}

/// Brute force against the Euler product and the centralizer recursion for
/// every C_i Wr S_n (i in `is`, n <= max_n) whose order is within
/// `max_group_order`. For i = 1 the S_n enumerator is compared as well.
pub fn check_induction(is: &[u64], max_n: usize, ms: &[usize], opts: &Options) -> Result<CheckReport> {
    let g = &opts.guards;
    let mut report = CheckReport::new(
        "induction",
        json!({ "i": is, "max_n": max_n, "m": ms, "max_group_order": g.max_group_order.to_string() }),
    );
    let rec = CentralizerRecursion::new(g.node_budget);
    for &i in is {
        for &m in ms {
            let series = opts.wreath_series(i, m, max_n)?;
            for n in 0..=max_n {
                let order = wr_group_order(i, n);
                if order > BigInt::from(g.max_group_order) {
                    break;
                }
                let brute = wr_brute_force_com(i, n, m, g)?;
                let via_series = scaled_coefficient(&series, n, &order)?;
                let via_recursion = rec.com_count(i, n, m)?;
                report.push(json!({ "i": i, "n": n, "m": m, "route": "series" }), &brute, via_series);
                report.push(
                    json!({ "i": i, "n": n, "m": m, "route": "recursion" }),
                    &brute,
                    via_recursion,
                );
                if i == 1 && n <= g.max_tuple_degree && m <= g.max_tuple_len {
                    let sym = brute_force_com(n, m, g)?;
                    report.push(json!({ "i": i, "n": n, "m": m, "route": "symmetric" }), &brute, sym);
                }
            }
        }
    }
    Ok(report)
}

/// Enumerated centralizer order of each class representative against the
/// direct-product formula prod (i k)^{M_{j,k}} M_{j,k}!.
pub fn check_structure(is: &[u64], max_n: usize, opts: &Options) -> Result<CheckReport> {
    let mut report = CheckReport::new("structure", json!({ "i": is, "max_n": max_n }));
    for &i in is {
        for n in 0..=max_n {
            let elements = enumerate_wreath(i, n, &opts.guards)?;
            for d in enumerate_class_data(i, n)? {
                let rep = d.representative();
                let enumerated = if rep.class_data() == d {
                    enumerated_centralizer_order(&rep, &elements).to_string()
                } else {
                    format!("representative has class {}", rep.class_data())
                };
                report.push(
                    json!({ "i": i, "n": n, "class": d.to_string() }),
                    enumerated,
                    d.centralizer_order(),
                );
            }
        }
    }
    Ok(report)
}

/// Partition numbers from the pentagonal recurrence against [u^n] of the
/// m = 2 Euler product.
pub fn check_partitions(max_n: usize, opts: &Options) -> Result<CheckReport> {
    let mut report = CheckReport::new("partitions", json!({ "max_n": max_n }));
    let p = formula::partition_numbers(max_n);
    let series = opts.sym_series(2, 1, max_n)?;
    for (n, pn) in p.iter().enumerate() {
        report.push(
            json!({ "n": n }),
            pn,
            scaled_coefficient(&series, n, &BigInt::from(1))?,
        );
    }
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Eq1,
    T1,
    Induction,
    Structure,
    Partitions,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Eq1,
        Suite::T1,
        Suite::Induction,
        Suite::Structure,
        Suite::Partitions,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Eq1 => "eq1",
            Suite::T1 => "t1",
            Suite::Induction => "induction",
            Suite::Structure => "structure",
            Suite::Partitions => "partitions",
        }
    }
}

/// Sweep ranges; `Default` is the standard sweep.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Sweep {
    pub max_n: Option<usize>,
    pub max_m: Option<usize>,
    pub chis: Option<Vec<i64>>,
    pub is: Option<Vec<u64>>,
    pub ms: Option<Vec<usize>>,
}

pub fn run_suite(suite: Suite, sweep: &Sweep, opts: &Options) -> Result<CheckReport> {
    let is = sweep.is.clone().unwrap_or_else(|| vec![1, 2, 3]);
    match suite {
        Suite::Eq1 => check_eq1(
            sweep.max_n.unwrap_or(4),
            sweep.max_m.unwrap_or(3),
            &sweep.chis.clone().unwrap_or_else(|| (-2..=3).collect()),
            opts,
        ),
        Suite::T1 => {
            let chis: Vec<u64> = sweep
                .chis
                .clone()
                .unwrap_or_else(|| vec![1, 2, 3])
                .into_iter()
                .filter_map(|c| u64::try_from(c).ok())
                .collect();
            check_lemma_t1(sweep.max_n.unwrap_or(5), sweep.max_m.unwrap_or(3), &chis, opts)
        }
        Suite::Induction => check_induction(
            &is,
            sweep.max_n.unwrap_or(5),
            &sweep.ms.clone().unwrap_or_else(|| vec![1, 2, 3, 4]),
            opts,
        ),
        Suite::Structure => check_structure(&is, sweep.max_n.unwrap_or(4), opts),
        Suite::Partitions => check_partitions(sweep.max_n.unwrap_or(200), opts),
    }
}
