//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines always reach stdout.

mod common;

use std::panic::{self, AssertUnwindSafe};
use std::time::Instant;

use common::*;
use hodge_triples::blocks::sym_power;
use hodge_triples::laurent::{frac, int, LaurentPoly, UniPoly};
use hodge_triples::triples::{
    chamber_representatives, hodge_bundles_odd, hodge_bundles_via_triples, hodge_pairs,
    hodge_triples_closed, hodge_triples_sum, pair_chamber_representatives,
    poincare_pairs_fixed_det_thaddeus, residue_extract_check, RankPair, StabilityValue,
};
use hodge_triples::verify::{run_suite, D1Range, Grid};
use hodge_triples::Genus;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn genus(g: i64) -> Genus {
    Genus::new(g).unwrap()
}

fn cross_pipeline() -> Outcome {
    let mut chambers = 0;
    for (g, d1, d2) in grid_points() {
        let s = spec(g, RankPair::TwoOne, d1, d2);
        for sigma in chamber_representatives(&s).map_err(|e| e.to_string())? {
            let sv = StabilityValue::exact(sigma.clone());
            let closed = hodge_triples_closed(&s, &sv).map_err(|e| e.to_string())?;
            let summed = hodge_triples_sum(&s, &sv).map_err(|e| e.to_string())?;
            ensure(closed == summed, || {
                format!(
                    "g={g} d1={d1} d2={d2} sigma={sigma}: {} != {}",
                    closed.poly, summed.poly
                )
            })?;
            chambers += 1;
        }
    }
    Ok(format!("{chambers} chambers agree"))
}

fn smallest_pairs() -> Outcome {
    let g = genus(2);
    let tau = StabilityValue::exact(frac(3, 4));
    let fixed = hodge_pairs(g, 1, &tau, true)
        .map_err(|e| e.to_string())?
        .poly;
    let p1 = LaurentPoly::from_terms([(0, 0, 1), (1, 1, 1)]);
    ensure(fixed == p1, || format!("fixed determinant gave {fixed}"))?;
    let free = hodge_pairs(g, 1, &tau, false)
        .map_err(|e| e.to_string())?
        .poly;
    let expected = &jacobian_oracle(2) * &p1;
    ensure(free == expected, || {
        format!("unfixed gave {free}, expected {expected}")
    })?;
    Ok(format!("fixed = {fixed}"))
}

fn bundles_via_triples() -> Outcome {
    for g in 2..=4 {
        for d in [1, 3] {
            let closed = hodge_bundles_odd(genus(g), d, false)
                .map_err(|e| e.to_string())?
                .poly;
            let via =
                hodge_bundles_via_triples(genus(g), d).map_err(|e| format!("g={g} d={d}: {e}"))?;
            ensure(closed == via, || format!("g={g} d={d}: {closed} != {via}"))?;
        }
    }
    Ok("g in 2..=4, d in {1,3}".into())
}

fn classical_fixture() -> Outcome {
    let e = hodge_bundles_odd(genus(2), 1, true)
        .map_err(|e| e.to_string())?
        .poly;
    let hodge = LaurentPoly::from_terms([
        (0, 0, 1),
        (1, 1, 1),
        (2, 1, 2),
        (1, 2, 2),
        (2, 2, 1),
        (3, 3, 1),
    ]);
    ensure(e == hodge, || format!("Hodge polynomial {e}"))?;
    let p = e.diagonal();
    let poincare = UniPoly::from_coeffs([1, 0, 1, 4, 1, 0, 1]);
    ensure(p == poincare, || format!("Poincaré polynomial {p}"))?;
    Ok(format!("{p}"))
}

fn univariate_poincare() -> Outcome {
    let mut n = 0;
    for g in [2, 3] {
        for d in 1..=6 {
            for tau in pair_chamber_representatives(d) {
                let tv = StabilityValue::exact(tau.clone());
                let diag = hodge_pairs(genus(g), d, &tv, true)
                    .map_err(|e| e.to_string())?
                    .poly
                    .diagonal();
                let th = poincare_pairs_fixed_det_thaddeus(genus(g), d, &tv)
                    .map_err(|e| e.to_string())?;
                ensure(diag == th, || {
                    format!("g={g} d={d} tau={tau}: {diag} != {th}")
                })?;
                n += 1;
            }
        }
    }
    Ok(format!("{n} chambers agree"))
}

fn duality() -> Outcome {
    let pairs = [
        (0, -1),
        (0, -2),
        (1, 0),
        (1, -1),
        (1, 1),
        (2, 1),
        (2, 2),
        (2, 3),
        (3, 4),
        (3, 5),
    ];
    let mut n = 0;
    for g in [2, 3] {
        for (d1, d2) in pairs {
            let s12 = spec(g, RankPair::OneTwo, d1, d2);
            let s21 = spec(g, RankPair::TwoOne, -d2, -d1);
            let reps = chamber_representatives(&s12).map_err(|e| e.to_string())?;
            ensure(
                reps == chamber_representatives(&s21).map_err(|e| e.to_string())?,
                || format!("g={g} ({d1},{d2}): chamber structures differ"),
            )?;
            for sigma in reps {
                let direct = one_two_direct(genus(g), d1, d2, &sigma);
                let dual = hodge_triples_closed(&s21, &StabilityValue::exact(sigma.clone()))
                    .map_err(|e| e.to_string())?
                    .poly;
                ensure(direct == dual, || {
                    format!("g={g} ({d1},{d2}) sigma={sigma}: {direct} != {dual}")
                })?;
                n += 1;
            }
        }
    }
    Ok(format!("{n} chambers agree"))
}

fn structural() -> Outcome {
    let grid = Grid {
        checks: Some(
            [
                "hodge-symmetry",
                "palindrome",
                "nonnegativity",
                "chamber-constancy",
                "ring-laws",
                "geometric-series",
            ]
            .map(String::from)
            .to_vec(),
        ),
        random_cases: 100,
        d1: D1Range::Offset((1..=8).collect()),
        ..Grid::default()
    };
    let report = run_suite(&grid);
    if let Some(f) = report.failures().next() {
        return Err(format!("{f}"));
    }
    // Leading monomial of every nonempty chamber is exactly (uv)^dim.
    for (g, d1, d2) in grid_points() {
        let s = spec(g, RankPair::TwoOne, d1, d2);
        for sigma in chamber_representatives(&s).unwrap() {
            let r = hodge_triples_closed(&s, &StabilityValue::exact(sigma)).unwrap();
            let Some(n) = r.dim else { continue };
            let (m, c) = r.poly.leading_term().unwrap();
            ensure((m.u, m.v) == (n as i64, n as i64) && *c == 1.into(), || {
                format!(
                    "g={g} d1={d1} d2={d2}: top term {c} u^{} v^{} but dim {n}",
                    m.u, m.v
                )
            })?;
        }
    }
    Ok(format!("{} checks passed", report.summary.passed))
}

fn residue() -> Outcome {
    let (s, r) =
        residue_extract_check(genus(2), &int(1), &int(2), &int(3), &int(0), &int(0)).unwrap();
    ensure(s == int(25) && r == int(25), || {
        format!("fixture gave {s} and {r}")
    })?;
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    let mut n = 1;
    while n < 24 {
        let mut q = || frac(rng.gen_range(-15..=15), rng.gen_range(1..=6));
        let (a, b, c, u, v) = (q(), q(), q(), q(), q());
        let g = genus(2 + (n % 2));
        let Ok((s, r)) = residue_extract_check(g, &a, &b, &c, &u, &v) else {
            continue;
        };
        ensure(s == r, || {
            format!("a={a} b={b} c={c} u={u} v={v}: {s} != {r}")
        })?;
        n += 1;
    }
    Ok(format!("{n} inputs, fixture 25 = 25"))
}

fn sym_oracle_check() -> Outcome {
    for g in [2u64, 3] {
        for k in 0..=8u64 {
            let lib = sym_power(genus(g as i64), k as u32);
            let oracle = sym_oracle(g, k);
            ensure(lib == oracle, || format!("g={g} k={k}: {lib} != {oracle}"))?;
        }
    }
    let s1 = LaurentPoly::from_terms([(0, 0, 1), (1, 0, 2), (0, 1, 2), (1, 1, 1)]);
    ensure(sym_power(genus(2), 1) == s1, || "Sym^1 fixture".into())?;
    let d2 = sym_power(genus(2), 2).diagonal();
    ensure(d2 == UniPoly::from_coeffs([1, 4, 7, 4, 1]), || {
        format!("Sym^2 diagonal {d2}")
    })?;
    Ok("g in {2,3}, k <= 8".into())
}

fn cli_end_to_end() -> Outcome {
    let o = hodge(&[
        "compute",
        "pair-fixed",
        "--genus",
        "2",
        "--degree",
        "1",
        "--tau",
        "3/4",
        "--format",
        "text",
    ]);
    ensure(
        o.status.code() == Some(0) && stdout(&o).trim() == "1 + uv",
        || format!("first example: {o:?}"),
    )?;
    let o = hodge(&[
        "compute",
        "pair-fixed",
        "--genus",
        "2",
        "--degree",
        "1",
        "--tau",
        "1",
    ]);
    ensure(
        o.status.code() == Some(2)
            && stderr(&o).contains("tau=1 is a critical value; use 1+ or 1-"),
        || format!("wall example: {o:?}"),
    )?;
    let o = hodge(&[
        "compute",
        "bundle-fixed",
        "--genus",
        "2",
        "--degree",
        "1",
        "--poincare",
    ]);
    ensure(
        o.status.code() == Some(0) && stdout(&o).trim() == "1 + t^2 + 4 t^3 + t^4 + t^6",
        || format!("Poincaré example: {o:?}"),
    )?;

    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let cache = dir.path().join("cache.jsonl");
    let cache = cache.to_str().unwrap();
    let args = [
        "table", "triple", "--genus", "2..3", "--d1", "1..5", "--d2", "-1..0", "--cache", cache,
    ];
    let cold = hodge(&args);
    let warm = hodge(&args);
    ensure(cold.status.success() && warm.status.success(), || {
        format!("table failed: {cold:?}")
    })?;
    ensure(
        !cold.stdout.is_empty() && cold.stdout == warm.stdout,
        || "warm rerun differs".into(),
    )?;
    let cached = std::fs::read_to_string(cache)
        .map_err(|e| e.to_string())?
        .lines()
        .count();
    ensure(
        cached == cold.stdout.iter().filter(|b| **b == b'\n').count(),
        || format!("{cached} cache lines"),
    )?;
    Ok(format!("3 examples, warm table of {cached} rows identical"))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("cross-pipeline closed vs wall-crossing sum", cross_pipeline),
        ("smallest pairs case", smallest_pairs),
        ("bundles via triples", bundles_via_triples),
        ("genus-2 fixed-determinant bundles", classical_fixture),
        (
            "pairs Poincaré polynomial vs univariate route",
            univariate_poincare,
        ),
        ("(1,2) vs (2,1) duality", duality),
        ("structural invariants", structural),
        ("residue extraction", residue),
        ("symmetric product oracle", sym_oracle_check),
        ("CLI end to end", cli_end_to_end),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or(p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default())
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {:>2} {name}: {detail} ({secs:.2}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {:>2} {name}: {detail} ({secs:.2}s)", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
