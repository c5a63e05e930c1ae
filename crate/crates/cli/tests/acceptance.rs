//! Acceptance suite: one line per criterion, non-zero exit if any fails.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use quenta_core::arith::gcd;
use quenta_core::code::{cyclic_code, min_distance, LinearCode, Matrix};
use quenta_core::config::Config;
use quenta_core::defset::{
    bch_bound, euclidean_dual_defset, hermitian_dual_defset, intersection_dim, rs_defset, CosetPartition, DefiningSet,
};
use quenta_core::gf::Field;
use quenta_core::oracle::{self, CheckKind, Instance, SweepRange};
use quenta_core::quenta::{self, DistanceKind, Family, InputValue, WARN_CLOSED_FORM};

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn closed_sets(n: usize, base: u64) -> Result<Vec<DefiningSet>, String> {
    CosetPartition::new(n, base).and_then(|p| p.all_unions()).map_err(err)
}

fn euclidean_duality() -> Outcome {
    let cfg = Config::default();
    let (mut sets_checked, mut pairs_checked) = (0, 0);
    for q in [2u64, 3] {
        for n in (1..=15usize).filter(|&n| gcd(n as u64, q) == 1) {
            let space = cfg.space(q, n).map_err(err)?;
            let sets = closed_sets(n, q)?;
            let codes = sets.iter().map(|z| cyclic_code(z, &space)).collect::<Result<Vec<_>, _>>().map_err(err)?;
            for (z, code) in sets.iter().zip(&codes) {
                let brute = code.dual_code().defining_set(&space).map_err(err)?;
                let formula = euclidean_dual_defset(z);
                ensure(brute == formula, || format!("q={q} n={n} Z={z}: dual has {brute}, formula {formula}"))?;
                sets_checked += 1;
            }
            for (z1, c1) in sets.iter().zip(&codes) {
                for (z2, c2) in sets.iter().zip(&codes) {
                    let brute = c1.intersection_dim(c2).map_err(err)?;
                    let formula = intersection_dim(z1, z2).map_err(err)?;
                    ensure(brute == formula, || {
                        format!("q={q} n={n} Z1={z1} Z2={z2}: dim {brute}, formula {formula}")
                    })?;
                    pairs_checked += 1;
                }
            }
        }
    }
    Ok(format!("{sets_checked} dual defining sets, {pairs_checked} intersection pairs"))
}

fn hermitian_duality() -> Outcome {
    let cfg = Config::default();
    let mut checked = 0;
    for (q, n) in [(2u64, 3usize), (2, 5), (2, 15), (3, 8)] {
        let space = cfg.space(q * q, n).map_err(err)?;
        for z in closed_sets(n, q * q)? {
            let code = cyclic_code(&z, &space).map_err(err)?;
            let brute = code.hermitian_dual_code(q).and_then(|d| d.defining_set(&space)).map_err(err)?;
            let formula = hermitian_dual_defset(&z).map_err(err)?;
            ensure(brute == formula, || format!("q={q} n={n} Z={z}: dual has {brute}, formula {formula}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} Hermitian dual defining sets"))
}

fn entanglement_counts() -> Outcome {
    let cfg = Config::default();
    let r = |q: u64, n: Option<usize>| SweepRange { q: Some(q), n, ..Default::default() };
    let plan = [
        (Family::BchEuclid, r(3, None)),
        (Family::RsEuclid, r(7, Some(6))),
        (Family::RsMds, r(7, Some(6))),
        (Family::Hermitian, r(2, Some(3))),
        (Family::Hermitian, r(2, Some(5))),
        (Family::Hermitian, r(2, Some(15))),
        (Family::HermitianLcd, r(2, Some(3))),
        (Family::HermitianLcd, r(2, Some(5))),
        (Family::HermitianLcd, r(2, Some(15))),
        (Family::BchHermit, SweepRange { q: Some(3), a_max: Some(4), ..Default::default() }),
    ];
    let mut checked = 0;
    for (family, range) in plan {
        let insts = oracle::instances(family, &range).map_err(err)?;
        for report in oracle::sweep(&insts, &cfg) {
            let row = report.row("c").ok_or_else(|| format!("{family} {}: no c row", report.instance))?;
            ensure(row.kind == CheckKind::Exact && row.pass, || {
                format!("{family} {}: c predicted {:?}, rank {:?}", report.instance, row.predicted, row.measured)
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} instances, closed-form c equals the matrix rank"))
}

fn mds_reproduction() -> Outcome {
    let mut rows = 0;
    let mut maximal = 0;
    for (q, n) in [(7u64, 6u64), (5, 4)] {
        for k in 1..n {
            for b in 1..=k.div_ceil(2) {
                let p = quenta::rs_euclid_mds(q, n, k, b).map_err(err)?;
                let s = quenta::singleton(&p).map_err(err)?;
                let label = format!("q={q} n={n} k={k} b={b} {p}");
                ensure(p.d.kind == DistanceKind::Exact, || format!("{label}: distance not exact"))?;
                ensure(s.defect == 0, || format!("{label}: defect {}", s.defect))?;
                ensure(p.maximal_entanglement() == (2 * b == k + 1), || {
                    format!(
                        "{label}: maximal entanglement is {} but b=(k+1)/2 is {}",
                        p.maximal_entanglement(),
                        2 * b == k + 1
                    )
                })?;
                rows += 1;
                maximal += p.maximal_entanglement() as usize;
            }
        }
    }
    Ok(format!("{rows} rows with defect 0, {maximal} maximal, each exactly where b=(k+1)/2"))
}

fn rs_hermit_arithmetic() -> Outcome {
    let mut checked = 0;
    for q in [2u64, 3, 4] {
        for t in 1..q {
            for r in 0..q {
                if q * t + r >= q * q {
                    continue;
                }
                let (zc, zh) = quenta::rs_hermit_index_sets(q, t, r);
                let zc: BTreeSet<u64> = zc.into_iter().collect();
                let both = zh.iter().filter(|i| zc.contains(i)).count() as u64;
                let closed = quenta::rs_hermit_intersection_closed(q, t, r);
                ensure(both == closed, || format!("q={q} t={t} r={r}: sets meet in {both}, closed form {closed}"))?;

                let p = quenta::rs_hermit(q, t, r).map_err(err)?;
                let (qi, ti, ri) = (q as i64, t as i64, r as i64);
                let (k, c) = if t + r + 1 >= q {
                    ((ti + 1).pow(2) - 2 * (qi - ri) + 1, (qi - ti - 1).pow(2) + 1)
                } else {
                    (ti * ti - 1, (qi - ti).pow(2) - 2 * ri - 1)
                };
                let d = qi * (qi - ti) - ri + 1;
                let got = (p.n as i64, p.k as i64, p.d.value as i64, p.c as i64);
                ensure(got == (qi * qi, k, d, c), || {
                    format!("q={q} t={t} r={r}: emitted {p}, closed form gives k={k} d={d} c={c}")
                })?;
                ensure(!p.warnings.iter().any(|w| w == WARN_CLOSED_FORM), || {
                    format!("q={q} t={t} r={r}: {p} flagged")
                })?;
                checked += 1;
            }
        }
    }
    let p = quenta::rs_hermit(2, 1, 0).map_err(err)?;
    let s = quenta::singleton(&p).map_err(err)?;
    ensure(p.to_string() == "[[4,1,3;1]]_2" && s.defect == 0, || {
        format!("q=2 t=1 r=0 gives {p}, defect {}", s.defect)
    })?;
    Ok(format!("{checked} (q,t,r) tuples; q=2 t=1 r=0 is [[4,1,3;1]]_2 with defect 0"))
}

fn hermitian_bch_headline() -> Outcome {
    let cfg = Config::default();
    let mut shown = Vec::new();
    for (a, expected) in [(2u64, "[[80,73,>=3;1]]_3"), (3, "[[80,69,>=4;1]]_3")] {
        let p = quenta::bch_hermit(3, a).map_err(err)?;
        ensure(p.to_string() == expected, || format!("a={a}: emitted {p}, expected {expected}"))?;
        let Some(InputValue::Set(z)) = p.inputs.get("z") else {
            return Err(format!("a={a}: no defining set echoed"));
        };
        let z = DefiningSet::new(80, 9, z.iter().copied()).map_err(err)?;
        let bch = bch_bound(&z) as u64;
        ensure(bch > a, || format!("a={a}: BCH bound of {z} is {bch}"))?;

        let report = oracle::verify_instance(&Instance::BchHermit { q: 3, a }, &cfg);
        let c = report.row("c").ok_or("no c row")?;
        ensure(c.kind == CheckKind::Exact && c.pass && c.measured == Some(1), || format!("a={a}: c row {c:?}"))?;
        let k = report.row("k").ok_or("no k row")?;
        ensure(k.kind == CheckKind::Exact && k.pass, || format!("a={a}: k row {k:?}"))?;
        let d = report.row("d").ok_or("no d row")?;
        ensure(d.kind == CheckKind::LowerBoundOk && d.pass && d.predicted == Some(a as i64 + 1), || {
            format!("a={a}: d row {d:?}")
        })?;
        ensure(report.pass, || format!("a={a}: report failed"))?;
        shown.push(format!("{p} (BCH bound {bch})"));
    }
    Ok(shown.join(", "))
}

fn hamming(field: &Field) -> Result<LinearCode, String> {
    let g = Matrix::from_rows(
        field,
        7,
        &[vec![1, 0, 0, 0, 1, 1, 0], vec![0, 1, 0, 0, 0, 1, 1], vec![0, 0, 1, 0, 1, 1, 1], vec![0, 0, 0, 1, 1, 0, 1]],
    )
    .map_err(err)?;
    LinearCode::from_generator(2, &g).map_err(err)
}

fn distance_spot_checks() -> Outcome {
    let cfg = Config::default();
    let cap = cfg.max_enumeration;
    let gf2 = Field::new(2, 1).map_err(err)?;
    let ham = hamming(&gf2)?;
    let simplex = ham.dual_code();
    let space = cfg.space(7, 6).map_err(err)?;
    let rs = cyclic_code(&rs_defset(7, 6, 3, 1).map_err(err)?, &space).map_err(err)?;
    let mut timings = Vec::new();
    for (name, code, k, d) in [("Hamming", &ham, 4, 3), ("simplex", &simplex, 3, 4), ("RS_3(6,1)", &rs, 3, 4)] {
        let start = Instant::now();
        let got = min_distance(code, cap).map_err(err)?;
        let took = start.elapsed();
        ensure(code.k() == k && got == Some(d), || format!("{name}: k={} d={got:?}", code.k()))?;
        ensure(took < Duration::from_secs(1), || format!("{name}: took {took:.2?}"))?;
        timings.push(format!("{name} d={d} in {:.1}ms", took.as_secs_f64() * 1e3));
    }

    let (mut compared, mut over_cap) = (0, 0);
    for q in [2u64, 3, 4] {
        for n in (2..=15usize).filter(|&n| gcd(n as u64, q) == 1) {
            let space = cfg.space(q, n).map_err(err)?;
            for z in closed_sets(n, q)? {
                let code = cyclic_code(&z, &space).map_err(err)?;
                match min_distance(&code, cap) {
                    Ok(Some(d)) => {
                        let bch = bch_bound(&z);
                        ensure(bch <= d, || format!("q={q} n={n} Z={z}: BCH bound {bch} above distance {d}"))?;
                        compared += 1;
                    }
                    Ok(None) => {}
                    Err(_) => over_cap += 1,
                }
            }
        }
    }
    Ok(format!("{}; BCH bound <= distance on {compared} codes ({over_cap} over the cap)", timings.join(", ")))
}

fn li_evaluation() -> Outcome {
    let mut branches = BTreeSet::new();
    for delta in 2..=17 {
        let p = quenta::li_lcd(2, 3, delta).map_err(err)?;
        ensure(p.c == p.n - p.k, || format!("delta={delta}: {p} is not maximal"))?;
        let branch = quenta::li_branch(2, 3, delta).ok_or_else(|| format!("delta={delta}: no branch"))?;
        branches.insert(branch.index());
    }
    ensure(branches.len() == 4, || format!("branches seen: {branches:?}"))?;
    let p = quenta::li_lcd(3, 2, 2).map_err(err)?;
    ensure(p.to_string() == "[[80,75,>=3;5]]_3", || format!("q=3 m=2 delta=2 gives {p}"))?;
    Ok(format!("branches {branches:?} all seen with c = n - k; q=3 m=2 delta=2 is {p}"))
}

fn full_verify() -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_quenta"))
        .args(["verify", "--family", "all"])
        .env_remove("QUENTA_CONFIG")
        .output()
        .map_err(err)?;
    ensure(out.status.code() == Some(0), || {
        format!("exit {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stderr))
    })?;
    Ok(out.stdout)
}

fn determinism() -> Outcome {
    let first = full_verify()?;
    let second = full_verify()?;
    ensure(first == second, || "two runs differ".to_string())?;
    let text = String::from_utf8_lossy(&first);
    let total = text.lines().last().unwrap_or_default().to_string();
    Ok(format!("{} bytes identical across runs; {total}", first.len()))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("defining-set duality, Euclidean", Duration::from_secs(60), euclidean_duality),
        ("defining-set duality, Hermitian", Duration::from_secs(60), hermitian_duality),
        ("entanglement count equals matrix rank", Duration::from_secs(300), entanglement_counts),
        ("MDS reproduction", Duration::from_secs(60), mds_reproduction),
        ("Hermitian RS arithmetic", Duration::from_secs(60), rs_hermit_arithmetic),
        ("Hermitian BCH headline", Duration::from_secs(60), hermitian_bch_headline),
        ("exhaustive distance spot checks", Duration::from_secs(300), distance_spot_checks),
        ("LCD BCH formula evaluation", Duration::from_secs(60), li_evaluation),
        ("verify determinism", Duration::from_secs(300), determinism),
    ];
    let mut failed = 0;
    for (i, (name, budget, check)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if took > budget => Err(format!("{detail}; took {took:.1?}, budget {budget:?}")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("criterion {} {name}: PASS ({detail}) [{took:.2?}]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({detail}) [{took:.2?}]", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 9 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
