//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::process::{Command as Process, ExitCode, Stdio};
use std::io::Write;
use std::time::{Duration, Instant};

use nset_cli::suites::{self, SuiteResult};
use nset_core::exact::ratio;
use nset_core::*;
use num_traits::{ToPrimitive, Zero};

const SEED: u64 = 20_240_611;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn ints(v: &[u64]) -> PositiveIntegerSet {
    PositiveIntegerSet::from_u64s(v)
}

fn points(xs: &[(i64, i64)]) -> IntervalSet {
    let pairs: Vec<_> = xs.iter().map(|&(n, d)| (ratio(n, d), ratio(n, d))).collect();
    canonicalize(&pairs).unwrap()
}

fn timed(limit: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let mut o = f();
    let took = start.elapsed();
    if took >= limit {
        o.ok = false;
    }
    o.detail = format!("{} in {:.2?} (limit {:.0?})", o.detail, took, limit);
    o
}

fn suite_outcome(s: &SuiteResult, min: usize) -> Outcome {
    outcome(s.ok() && s.samples >= min, format!("{}: {}/{} passed", s.name, s.passed, s.samples))
}

fn fixtures_exact() -> Outcome {
    timed(Duration::from_secs(1), || {
        let cases = [
            (fixtures::k_a1(), ints(&[2, 5])),
            (fixtures::k_a2(), ints(&[6, 10, 15])),
            (fixtures::k_a3(), ints(&[18, 28, 63])),
        ];
        let bad: Vec<String> = cases
            .iter()
            .filter(|(k, a)| &integer_differences(k) != a || !is_nset(k))
            .map(|(_, a)| a.to_string())
            .collect();
        outcome(bad.is_empty(), format!("three fixtures, mismatches {bad:?}"))
    })
}

/// Grid points of `k` on `(1/den) Z`, paired when they differ by a nonzero
/// integer.
fn grid_pair_oracle(k: &IntervalSet, den: i64) -> usize {
    let mut pts = Vec::new();
    for iv in k.intervals() {
        let scale = Rational::from_integer(den.into());
        let lo = (iv.lo() * &scale).ceil().to_integer().to_i64().unwrap();
        let hi = (iv.hi() * &scale).floor().to_integer().to_i64().unwrap();
        pts.extend(lo..=hi);
    }
    let mut n = 0;
    for (i, x) in pts.iter().enumerate() {
        n += pts[..i].iter().filter(|&&y| (x - y) % den == 0 && x != &y).count();
    }
    n
}

fn witness_fixtures() -> Outcome {
    let k1 = fixtures::k_a1();
    let w2 = witnesses(&k1, &BigInt::from(2)).unwrap();
    let w5 = witnesses(&k1, &BigInt::from(5)).unwrap();
    let ok_w = w2 == Some(points(&[(7, 3), (14, 3)])) && w5 == Some(points(&[(5, 1)]));
    let c1 = matched_pair_count(&k1);
    let c2 = matched_pair_count(&fixtures::k_a2());
    let k3 = fixtures::k_a3();
    // Endpoints of K(A3) lie on (1/13)Z; half-grid points expose any continuum.
    let oracle = grid_pair_oracle(&k3, 26);
    let c3 = matched_pair_count(&k3);
    let ok = ok_w
        && c1 == PairCount::Finite(3)
        && c2 == PairCount::Finite(3)
        && c3 == PairCount::Finite(oracle);
    outcome(
        ok,
        format!("witnesses {ok_w}; pairs A1={c1} A2={c2} A3={c3} (oracle {oracle})"),
    )
}

fn roundtrip() -> Outcome {
    timed(Duration::from_secs(60), || suite_outcome(&suites::roundtrip(SEED, 500), 500))
}

fn forward_1d() -> Outcome {
    timed(Duration::from_secs(30), || suite_outcome(&suites::forward_1d(SEED, 200), 200))
}

/// Coefficient vectors of weight exactly `w`, visited depth first.
fn any_of_weight(set: &[i64], w: i64, acc: i64) -> bool {
    match set {
        [] => w == 0 && acc == 1,
        [a, rest @ ..] => {
            let left = rest.len() as i64;
            if w < 1 + left {
                return false;
            }
            if any_of_weight(rest, w - 1, acc) {
                return true;
            }
            (1..=w - left).any(|m| {
                any_of_weight(rest, w - m, acc + m * a) || any_of_weight(rest, w - m, acc - m * a)
            })
        }
    }
}

/// Smallest weight of a representation of 1, by deepening from `|A|`.
fn oracle_weight(set: &[i64]) -> i64 {
    (set.len() as i64..).find(|&w| any_of_weight(set, w, 0)).unwrap()
}

fn weights() -> Outcome {
    let mut bad = Vec::new();
    for (set, expected) in [(vec![2, 5], 3), (vec![6, 10, 15], 3), (vec![18, 28, 63], 4)] {
        let got = add_weight(&PositiveIntegerSet::from_u64s(&set)).unwrap();
        let s: Vec<i64> = set.iter().map(|&v| v as i64).collect();
        if got != expected || oracle_weight(&s) != expected as i64 {
            bad.push(format!("{set:?}: {got}"));
        }
    }
    for n in 1..=8u64 {
        let set: Vec<u64> = (1..=n).collect();
        if add_weight(&ints(&set)).unwrap() != n {
            bad.push(format!("[1, {n}]"));
        }
    }
    outcome(bad.is_empty(), format!("3 fixtures and 8 initial segments, mismatches {bad:?}"))
}

fn geo_bound() -> Outcome {
    suite_outcome(&suites::geo_bound(SEED, 500), 500)
}

fn geo_exactness() -> Outcome {
    let mut bad = Vec::new();
    for mask in 1u32..256 {
        let set: Vec<u64> = (1..=8).filter(|i| mask & (1 << (i - 1)) != 0).collect();
        let expected = set == (1..=set.len() as u64).collect::<Vec<_>>();
        if geo_is_interval(&ints(&set)) != expected {
            bad.push(set);
        }
    }
    outcome(bad.is_empty(), format!("255 subsets of [1, 8], mismatches {bad:?}"))
}

fn forward_2d() -> Outcome {
    timed(Duration::from_secs(60), || suite_outcome(&suites::forward_2d(SEED, 100), 100))
}

fn explorer() -> Outcome {
    let square: Vec<Vec<i64>> = (-1..=1).flat_map(|x| (-1..=1).map(move |y| vec![x, y])).collect();
    let refs: Vec<&[i64]> = square.iter().map(Vec::as_slice).collect();
    let target = LatticeSet::from_i64s(2, &refs).unwrap();
    let found = explore2d(&target, 1, 1).unwrap();
    let verified = found
        .as_ref()
        .is_some_and(|k| is_nset_nd(k) && box_differences(k) == target);

    let asym = LatticeSet::from_i64s(2, &[&[0, 0], &[1, 0], &[0, 1]]).unwrap();
    let thin = LatticeSet::from_i64s(2, &[&[0, 0], &[2, 0], &[-2, 0], &[0, 1], &[0, -1]]).unwrap();
    let rejects = |t: &LatticeSet| matches!(explore2d(t, 1, 1), Err(Error::InvalidTarget(_)));
    let (ra, rn) = (rejects(&asym), rejects(&thin));
    outcome(
        verified && ra && rn,
        format!("square witness verified {verified}; rejects asymmetric {ra}, non-generating {rn}"),
    )
}

/// Every deterministic command with a representative input.
fn deterministic_batch() -> Vec<(Vec<&'static str>, String)> {
    use nset_cli::Document;
    let k1 = Document::interval_set(&fixtures::k_a1()).to_json();
    let k3 = Document::interval_set(&fixtures::k_a3()).to_json();
    let a3 = Document::integer_set(&ints(&[18, 28, 63])).to_json();
    let a = Document::integer_set(&ints(&[2, 4, 5])).to_json();
    let unit = canonicalize(&[(ratio(0, 1), ratio(1, 1))]).unwrap();
    let sq = BoxSet::product(&unit, &unit);
    let boxes = Document::box_set(&sq).to_json();
    let chain = Document::chain_spec(&ChainSpec {
        b: vec![BigInt::zero(), BigInt::from(-2)],
        lambda: vec![ratio(0, 1), ratio(1, 3), ratio(1, 1)],
    })
    .to_json();
    let target = Document::lattice_set(&box_differences(&sq)).to_json();
    let both = |x: &str, y: &str| format!("{x}\n{y}\n");
    vec![
        (vec!["canon"], both(&k1, &k3)),
        (vec!["check-nset"], both(&k1, &boxes)),
        (vec!["diffs"], both(&k1, &k3)),
        (vec!["witnesses", "--shift", "28"], k3.clone()),
        (vec!["pairs"], both(&k1, &k3)),
        (vec!["chain-build"], chain),
        (vec!["build", "--trace"], both(&a3, &a)),
        (vec!["build"], both(&a3, &a)),
        (vec!["verify"], both(&a3, &a)),
        (vec!["weights"], both(&a3, &a)),
        (vec!["geo-search", "--max-components", "2", "--grid", "2", "--shift-bound", "3"], a.clone()),
        (vec!["nd-diffs"], boxes.clone()),
        (vec!["nd-check"], boxes),
        (vec!["explore2d", "--grid", "1", "--shift-bound", "1"], target),
    ]
}

fn run_binary(args: &[&str], input: &str) -> (Vec<u8>, Option<i32>) {
    let mut child = Process::new(env!("CARGO_BIN_EXE_nset"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::null())
        .spawn()
        .expect("spawn nset");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (out.stdout, out.status.code())
}

fn determinism() -> Outcome {
    let batch = deterministic_batch();
    let mut bad = Vec::new();
    for (args, input) in &batch {
        let first = run_binary(args, input);
        let second = run_binary(args, input);
        if first != second || first.1 != Some(0) || first.0.is_empty() {
            bad.push(args[0]);
        }
    }
    outcome(bad.is_empty(), format!("{} commands run twice, differing or failing {bad:?}", batch.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("fixture difference sets", fixtures_exact),
        ("witnesses and matched pairs", witness_fixtures),
        ("construction round trip", roundtrip),
        ("one-dimensional N-sets", forward_1d),
        ("additive weights", weights),
        ("geometric upper bound", geo_bound),
        ("single-interval realizability", geo_exactness),
        ("planar N-sets", forward_2d),
        ("planar explorer", explorer),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let o = check();
        let tag = if o.ok { "PASS" } else { "FAIL" };
        println!("criterion {:>2}: {tag} {name}: {}", i + 1, o.detail);
        failed += usize::from(!o.ok);
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
