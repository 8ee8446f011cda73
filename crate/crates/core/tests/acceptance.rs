//! Exit criteria. Every comparison is exact; each test prints one
//! PASS/FAIL line (run with `-- --nocapture` to see them).

use std::time::{Duration, Instant};

use comtuples::formula::{
    com_count, com_count_recursive, partition_numbers, sym_series, wreath_com_count,
};
use comtuples::perm::brute_force_com;
use comtuples::verify::{check_eq1, check_lemma_t1, check_structure, Options};
use comtuples::wreath::{wr_brute_force_com, wr_group_order};
use comtuples::Guards;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

fn verdict(id: &str, what: &str, pass: bool, elapsed: Duration, limit: Option<Duration>) {
    let in_time = limit.is_none_or(|l| elapsed < l);
    let status = if pass && in_time { "PASS" } else { "FAIL" };
    let budget = limit.map_or(String::new(), |l| format!(" / limit {:.0?}", l));
    println!("[{status}] {id}: {what} ({elapsed:.2?}{budget})");
    assert!(pass, "{id}: values disagree");
    assert!(in_time, "{id}: took {elapsed:?}, limit {limit:?}");
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, k| a * k)
}

#[test]
fn ac1_three_path_agreement_symmetric() {
    let g = Guards::default();
    let start = Instant::now();
    let mut pass = true;
    let grid = (1..=3usize)
        .flat_map(|m| (0..=5usize).map(move |n| (n, m)))
        .chain((0..=4usize).map(|n| (n, 4)));
    for (n, m) in grid {
        let series = com_count(m, n).unwrap();
        let rec = com_count_recursive(1, n, m, &g).unwrap();
        let brute = brute_force_com(n, m, &g).unwrap();
        if series != rec || rec != brute {
            eprintln!("n={n} m={m}: series {series}, recursion {rec}, brute {brute}");
            pass = false;
        }
    }
    verdict(
        "AC1",
        "|Com(S_n,m)| series = recursion = brute force, n<=5 (m<=3), n<=4 (m=4)",
        pass,
        start.elapsed(),
        Some(Duration::from_secs(30)),
    );
}

#[test]
fn ac2_three_path_agreement_wreath() {
    let g = Guards::default();
    let start = Instant::now();
    let mut pass = true;
    let mut rows = 0;
    for i in 1..=3u64 {
        for m in 2..=3usize {
            for n in 0.. {
                if wr_group_order(i, n) > BigInt::from(200) {
                    break;
                }
                rows += 1;
                let series = wreath_com_count(i, m, n).unwrap();
                let rec = com_count_recursive(i, n, m, &g).unwrap();
                let brute = wr_brute_force_com(i, n, m, &g).unwrap();
                if series != rec || rec != brute {
                    eprintln!("i={i} n={n} m={m}: series {series}, recursion {rec}, brute {brute}");
                    pass = false;
                }
            }
        }
    }
    assert!(rows >= 20);
    verdict(
        "AC2",
        "|Com(C_i Wr S_n,m)| series = recursion = brute force, i<=3, order<=200, m in {2,3}",
        pass,
        start.elapsed(),
        Some(Duration::from_secs(60)),
    );
}

#[test]
fn ac3_weighted_sum_identity() {
    let start = Instant::now();
    let r = check_eq1(4, 3, &[-2, -1, 0, 1, 2, 3], &Options::default()).unwrap();
    assert_eq!(r.rows.len(), 5 * 3 * 6);
    for row in r.failures() {
        eprintln!("{:?}: {} vs {}", row.params, row.lhs, row.rhs);
    }
    verdict(
        "AC3",
        "sum chi^# over Com(S_n,m) = n! chi_m(M^n,S_n), chi in -2..3, n<=4, m<=3",
        r.pass,
        start.elapsed(),
        Some(Duration::from_secs(30)),
    );
}

#[test]
fn ac4_egf_power_identity() {
    let opts = Options {
        guards: Guards {
            max_tuple_degree: 8,
            ..Guards::default()
        },
        fault: None,
    };
    let start = Instant::now();
    let r = check_lemma_t1(8, 3, &[1, 2, 3], &opts).unwrap();
    assert_eq!(r.rows.len(), 9 * 3 * 3);
    for row in r.failures() {
        eprintln!("{:?}: {} vs {}", row.params, row.lhs, row.rhs);
    }
    verdict(
        "AC4",
        "chi-weighted EGF = (count EGF)^chi, chi in 1..3, order 8, m<=3",
        r.pass,
        start.elapsed(),
        None,
    );
}

#[test]
fn ac5_centralizer_structure() {
    let start = Instant::now();
    let r = check_structure(&[1, 2, 3], 4, &Options::default()).unwrap();
    for row in r.failures() {
        eprintln!("{:?}: {} vs {}", row.params, row.lhs, row.rhs);
    }
    verdict(
        "AC5",
        "enumerated centralizer orders = prod (ik)^M M!, i<=3, n<=4",
        r.pass,
        start.elapsed(),
        None,
    );
}

#[test]
fn ac6_partition_column() {
    let start = Instant::now();
    let p = partition_numbers(200);
    let s = sym_series(2, 1, 200).unwrap();
    let pass = (0..=200).all(|n| s.coeff(n).unwrap() == &BigRational::from_integer(p[n].clone()));
    assert_eq!(p[200], "3972999029388".parse::<BigInt>().unwrap());
    verdict(
        "AC6",
        "[u^n] of the m=2 product = p(n) (pentagonal recurrence), n<=200",
        pass,
        start.elapsed(),
        Some(Duration::from_secs(5)),
    );
}

#[test]
fn ac7_integrality_at_scale() {
    let start = Instant::now();
    let s = sym_series(3, 1, 500).unwrap();
    let integral = (0..=500).all(|n| {
        (s.coeff(n).unwrap() * BigRational::from_integer(factorial(n))).is_integer()
    });
    let big = com_count(3, 500).unwrap();
    let divisible = (&big % factorial(500)) == BigInt::from(0);
    verdict(
        "AC7",
        "n! [u^n] of the m=3 product integral for n<=500; com_count(3,500) computed",
        integral && divisible,
        start.elapsed(),
        Some(Duration::from_secs(10)),
    );
}

#[test]
fn ac8_macdonald_specialisation() {
    let start = Instant::now();
    let mut pass = true;
    for chi in 1..=3i64 {
        let s = sym_series(1, chi, 10).unwrap();
        for n in 0..=10usize {
            // C(chi + n - 1, n)
            let top = chi as usize + n - 1;
            let binom = factorial(top) / (factorial(n) * factorial(top - n));
            pass &= s.coeff(n).unwrap() == &BigRational::from_integer(binom);
        }
    }
    verdict(
        "AC8",
        "m=1 series = (1-u)^-chi, coefficients C(chi+n-1,n), chi in 1..3, n<=10",
        pass,
        start.elapsed(),
        None,
    );
}
