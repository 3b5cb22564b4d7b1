//! Acceptance criteria 1 to 9. Runs without the libtest harness so that one
//! PASS/FAIL line per criterion is always printed; exits nonzero if any
//! criterion fails.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use transverse_core::check::{check_properties, run_fixture, structure_checks, FixtureOutcome};
use transverse_core::dirac::{transverse_tensor_with, Degree};
use transverse_core::engine::run;
use transverse_core::fixtures::{builtin, ComplementSpec};
use transverse_core::lie::Form;
use transverse_core::orbit::{classify, moduli_dimension, triplet_from_partition, Partition};
use transverse_core::poly::{parse_ratfunc, MultiPoly, RatFunc};

struct Line {
    id: u32,
    passed: bool,
    elapsed: Duration,
    detail: String,
}

fn timed(id: u32, budget: Duration, f: impl FnOnce() -> (bool, String)) -> Line {
    let start = Instant::now();
    let (ok, detail) = f();
    let elapsed = start.elapsed();
    let in_time = elapsed <= budget;
    let detail = if in_time {
        detail
    } else {
        format!("{detail}; over the {budget:?} budget")
    };
    Line {
        id,
        passed: ok && in_time,
        elapsed,
        detail,
    }
}

fn fixture(name: &str) -> FixtureOutcome {
    run_fixture(&builtin(name).expect("shipped")).expect("fixture runs")
}

fn r(s: &str, k: usize) -> RatFunc {
    parse_ratfunc(s, k).expect("valid expression")
}

/// Our entry `(i, j)` (1-based) of a constraint matrix in the displayed
/// coordinates.
fn shown(m: &transverse_core::poly::PolyMatrix, o: &FixtureOutcome, i: usize, j: usize) -> RatFunc {
    RatFunc::from_poly(m.get(i - 1, j - 1).rescale_vars(&o.factors))
}

fn summary(o: &FixtureOutcome) -> String {
    let counts: Vec<String> = o.compared.iter().map(|(m, c)| format!("{m} {c}")).collect();
    let c: Vec<String> = o.factors.iter().map(ToString::to_string).collect();
    format!(
        "compared {}; scaling c = ({}); {} unexplained mismatches; degree {}",
        counts.join(", "),
        c.join(","),
        o.unexplained().len(),
        o.run.structure.degree_prime
    )
}

fn criterion_1() -> (bool, String) {
    let o = fixture("sl4_31_n");
    let ts = &o.run.structure;
    let k = 5;
    let spot = shown(&ts.matrices.c, &o, 3, 4) == r("q4", k)
        && shown(&ts.matrices.c, &o, 4, 5) == r("4q1", k)
        && shown(&ts.matrices.c, &o, 1, 6) == r("-2", k)
        && (1..=5)
            .map(|j| shown(&ts.matrices.d, &o, 7, j))
            .collect::<Vec<_>>()
            == ["0", "0", "4q1", "0", "-q4"].map(|s| r(s, k))
        && o.scaled_lambda_prime(2, 3) == r("4q1q3", k)
        && o.scaled_lambda_prime(3, 5) == r("-2/3q3q2 + 16q1^2q3", k);
    let shapes = (
        ts.matrices.c.rows(),
        ts.matrices.c.cols(),
        ts.matrices.d.rows(),
        ts.matrices.d.cols(),
    );
    let ok = o.reproduced()
        && o.mismatches.is_empty()
        && spot
        && shapes == (10, 10, 10, 5)
        && ts.degree_prime == Degree::Polynomial(3);
    (ok, summary(&o))
}

fn criterion_2() -> (bool, String) {
    let o = fixture("sl4_31_n_prime");
    let k = 5;
    let ok = o.reproduced()
        && o.mismatches.is_empty()
        && o.scaled_lambda_prime(3, 4).is_zero()
        && o.scaled_lambda_prime(2, 3) == r("-12q1q3", k)
        && o.run.structure.degree_prime == Degree::Polynomial(2);
    (ok, summary(&o))
}

fn criterion_3() -> (bool, String) {
    let o = fixture("sl4_31_n1");
    let ts = &o.run.structure;
    let k = 5;
    let q3_minus_1 = MultiPoly::from_terms(
        k,
        [
            (vec![0, 0, 1, 0, 0], BigRational::one()),
            (vec![0; 5], -BigRational::one()),
        ],
    );
    let dens_ok = ts.lambda_prime.entries().all(|e| {
        let mut d = e.den().clone();
        while !d.is_constant() {
            match d.div_exact(&q3_minus_1) {
                Some(q) => d = q,
                None => return false,
            }
        }
        true
    });
    let genuinely_rational = ts.lambda_prime.entries().any(|e| !e.is_polynomial());
    let entry = o.scaled_lambda_prime(4, 5) == r("q5^2 + 2q2q4(2q3-1)/(q3-1)", k);
    let excused: Vec<String> = o
        .mismatches
        .iter()
        .map(|m| format!("({},{})", m.row, m.col))
        .collect();
    let ok = !ts.polynomial && genuinely_rational && dens_ok && entry && o.reproduced();
    let detail = format!(
        "{}; denominators powers of (q3 - 1): {dens_ok}; displayed matrix not antisymmetric at {}",
        summary(&o),
        excused.join(" ")
    );
    (ok, detail)
}

fn criterion_4() -> (bool, String) {
    let o = fixture("sl5_32_n");
    let k = 8;
    let degree = o.run.structure.degree_prime == Degree::Polynomial(4);
    let leading = {
        let e = o.scaled_lambda_prime(6, 7);
        let target = MultiPoly::from_terms(
            k,
            [(
                vec![4, 0, 0, 0, 0, 0, 0, 0],
                BigRational::new(625.into(), 4.into()),
            )],
        );
        e.as_poly()
            .is_some_and(|p| p.coeff(&[4, 0, 0, 0, 0, 0, 0, 0]) == target.terms()[0].1)
    };
    let agree = o.named_keys.len() - o.named_mismatches.len();
    let display = o.display_poisson.map_or("unknown".to_string(), |d| {
        format!(
            "displayed tensor Jacobi {}, tr x^m Casimirs {}",
            d.jacobi, d.casimirs
        )
    });
    let ok = degree && leading && o.named_mismatches.is_empty() && o.reproduced();
    let detail = format!(
        "degree {}; 625/4 q1^4 in {{z6,z7}}: {leading}; {agree}/{} displayed brackets agree; ours Jacobi {}, Casimirs {}; {display}",
        o.run.structure.degree_prime,
        o.named_keys.len(),
        o.jacobi,
        o.casimirs
    );
    (ok, detail)
}

fn sweep_partitions(max_n: usize) -> Vec<Partition> {
    (2..=max_n)
        .flat_map(Partition::all)
        .filter(|p| !p.is_zero_orbit())
        .collect()
}

fn criterion_5() -> (bool, String) {
    let mut cases = 0;
    let mut bad = Vec::new();
    let mut cross_checked = 0;
    for p in sweep_partitions(5) {
        let mut specs = vec![ComplementSpec::ImAdF];
        if classify(&p).conormal_family {
            specs.push(ComplementSpec::Conormal);
        }
        for spec in specs {
            cases += 1;
            let run = run(&p, &spec, None, Form::Trace).expect("sweep case runs");
            let ts = &run.structure;
            let det_ok = ts.det_c.constant_value().is_some_and(|d| !d.is_zero());
            if !(det_ok && ts.polynomial) {
                bad.push(format!("{p} {spec:?}"));
            }
            // The fast inverse is cross-checked against fraction-free
            // elimination where that stays cheap.
            if p.n() <= 4 {
                let slow = transverse_tensor_with(ts.matrices.clone(), true).expect("bareiss");
                if slow.lambda != ts.lambda || slow.det_c != ts.det_c {
                    bad.push(format!("{p} {spec:?}: inverse paths disagree"));
                }
                cross_checked += 1;
            }
        }
    }
    (bad.is_empty(), format!("{cases} cases, {cross_checked} cross-checked by Bareiss elimination; failures: {bad:?}"))
}

fn criterion_6() -> (bool, String) {
    let mut degrees: BTreeMap<String, String> = BTreeMap::new();
    let mut ok = true;
    for p in sweep_partitions(6)
        .into_iter()
        .filter(|p| classify(p).conormal_family)
    {
        let run =
            run(&p, &ComplementSpec::Conormal, None, Form::Trace).expect("conormal case runs");
        ok &= run.structure.quadratic && run.complement.subalgebra;
        degrees.insert(p.to_string(), run.structure.degree.to_string());
    }
    (
        ok,
        format!("{} partitions, degrees {:?}", degrees.len(), degrees),
    )
}

fn criterion_7() -> (bool, String) {
    let suite = check_properties(6);
    let mut failures: Vec<String> = suite
        .results
        .iter()
        .filter(|r| !r.passed)
        .map(|r| r.name.clone())
        .collect();
    let mut count = suite.results.len();
    for name in ["sl4_31_n", "sl4_31_n_prime", "sl4_31_n1", "sl5_32_n"] {
        let o = fixture(name);
        let checks = structure_checks(name, &o.run);
        count += checks.len();
        failures.extend(checks.into_iter().filter(|c| !c.passed).map(|c| c.name));
    }
    (
        failures.is_empty(),
        format!("{count} checks over n <= 6 and the four fixtures; failures: {failures:?}"),
    )
}

/// Independent oracle for the moduli dimension: builds `h` and `e` from
/// Jordan blocks directly, enumerates the ad h eigenspaces `g(i)` on
/// matrix units and counts `dim g^e(i)` as a kernel dimension with its own
/// elimination.
mod oracle {
    use super::*;

    type M = Vec<Vec<BigRational>>;

    fn rank(mut rows: Vec<Vec<BigRational>>) -> usize {
        let cols = rows.first().map_or(0, Vec::len);
        let mut rank = 0;
        for c in 0..cols {
            let Some(p) = (rank..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
                continue;
            };
            rows.swap(rank, p);
            let pivot_row = rows[rank].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != rank && !row[c].is_zero() {
                    let f = &row[c] / &pivot_row[c];
                    for (x, y) in row[c..cols].iter_mut().zip(&pivot_row[c..cols]) {
                        *x -= y * &f;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    fn unit(n: usize, a: usize, b: usize) -> M {
        let mut m = vec![vec![BigRational::zero(); n]; n];
        m[a][b] = BigRational::one();
        m
    }

    fn commutator(x: &M, y: &M) -> Vec<BigRational> {
        let n = x.len();
        let mut out = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut s = BigRational::zero();
                for k in 0..n {
                    s += &x[i][k] * &y[k][j] - &y[i][k] * &x[k][j];
                }
                out.push(s);
            }
        }
        out
    }

    pub fn moduli_dimension(parts: &[usize]) -> usize {
        let n: usize = parts.iter().sum();
        let mut h = Vec::with_capacity(n);
        let mut e = vec![vec![BigRational::zero(); n]; n];
        let mut offset = 0;
        for &p in parts {
            for k in 0..p {
                h.push(p as i64 - 1 - 2 * k as i64);
                if k + 1 < p {
                    e[offset + k][offset + k + 1] = BigRational::from_integer(BigInt::from(1));
                }
            }
            offset += p;
        }
        let mut spaces: BTreeMap<i64, Vec<M>> = BTreeMap::new();
        for a in 0..n {
            for b in 0..n {
                if a != b {
                    spaces.entry(h[a] - h[b]).or_default().push(unit(n, a, b));
                }
            }
        }
        for a in 0..n - 1 {
            let mut d = unit(n, a, a);
            d[a + 1][a + 1] = -BigRational::one();
            spaces.entry(0).or_default().push(d);
        }
        spaces
            .values()
            .map(|basis| {
                let images: Vec<Vec<BigRational>> =
                    basis.iter().map(|x| commutator(&e, x)).collect();
                let ge = basis.len() - rank(images);
                ge * (basis.len() - ge)
            })
            .sum::<usize>()
            * 2
    }
}

fn criterion_8() -> (bool, String) {
    let mut checked = 0;
    let mut bad = Vec::new();
    for p in sweep_partitions(6) {
        let t = triplet_from_partition(&p).expect("nonzero orbit");
        let ours = moduli_dimension(&t);
        let oracle = oracle::moduli_dimension(p.parts());
        if ours != oracle {
            bad.push(format!("{p}: {ours} vs {oracle}"));
        }
        checked += 1;
    }
    let sub = moduli_dimension(&triplet_from_partition(&"3,1".parse().unwrap()).unwrap());
    (
        bad.is_empty() && sub == 14,
        format!("{checked} partitions; (3,1) gives {sub}; mismatches: {bad:?}"),
    )
}

fn criterion_9() -> (bool, String) {
    let a = fixture("sl4_31_n").run.structure.degree_prime;
    let b = fixture("sl4_31_n_prime").run.structure.degree_prime;
    (
        a == Degree::Polynomial(3) && b == Degree::Polynomial(2),
        format!("same orbit (3,1): degrees {a} and {b}"),
    )
}

fn main() -> ExitCode {
    let s = Duration::from_secs;
    let lines = [
        timed(1, s(1), criterion_1),
        timed(2, s(1), criterion_2),
        timed(3, s(1), criterion_3),
        timed(4, s(10), criterion_4),
        timed(5, s(120), criterion_5),
        timed(6, s(300), criterion_6),
        timed(7, s(300), criterion_7),
        timed(8, s(300), criterion_8),
        timed(9, s(300), criterion_9),
    ];
    for l in &lines {
        let tag = if l.passed { "PASS" } else { "FAIL" };
        println!("criterion {}: {tag} ({:.2?}) {}", l.id, l.elapsed, l.detail);
    }
    let passed = lines.iter().filter(|l| l.passed).count();
    println!("acceptance: {passed}/{} criteria passed", lines.len());
    if passed == lines.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
