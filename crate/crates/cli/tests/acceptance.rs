//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::f64::consts::PI;
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_rational::BigRational;

use rgcr::diagrams::{
    canonical_form, checkerboard, gear_shift_edge_classes, weakly_prime, SurfaceMap,
};
use rgcr::enumerate::{enumerate_diagrams, find_knots, SearchLimits};
use rgcr::geometry::{dihedral_check, gauss_bonnet_residual, interior_angles};
use rgcr::signatures::{count_bounds, enumerate_signatures, signature_from_pair};
use rgcr::TilingSignature;

type Outcome = Result<String, String>;

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn rgcr(args: &[&str]) -> (String, Duration) {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_rgcr"))
        .args(args)
        .output()
        .unwrap();
    let elapsed = start.elapsed();
    assert!(out.status.success(), "rgcr {args:?} failed");
    (String::from_utf8(out.stdout).unwrap(), elapsed)
}

fn data_rows(text: &str) -> BTreeSet<String> {
    text.lines()
        .filter(|l| l.chars().next().is_some_and(|c| c.is_ascii_digit()))
        .map(str::to_string)
        .collect()
}

fn signatures(g: i64) -> Vec<TilingSignature> {
    enumerate_signatures(g).unwrap()
}

fn torus(n: u32, m: u32, k_n: u64, k_m: u64) -> TilingSignature {
    TilingSignature::euclidean(n, m)
        .unwrap()
        .with_counts(k_n, k_m)
        .unwrap()
}

/// Torus quotients with at most `max_edges` edges.
fn torus_quotients(max_edges: u64) -> Vec<TilingSignature> {
    let mut out = Vec::new();
    for k in 1..=max_edges / 4 {
        out.push(torus(4, 4, k, k));
    }
    for k in 1..=max_edges / 6 {
        out.push(torus(3, 6, 2 * k, k));
    }
    out
}

fn table_reproduction() -> Outcome {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden/table1.txt");
    let table = std::fs::read_to_string(path).unwrap();
    let mut details = Vec::new();
    let mut ok = true;
    for (g, rows) in [(2, 14), (3, 21), (4, 26)] {
        let expected: BTreeSet<String> = data_rows(&table)
            .into_iter()
            .filter(|r| r.split_whitespace().next() == Some(&g.to_string()))
            .collect();
        let (out, elapsed) = rgcr(&["signatures", "--genus", &g.to_string()]);
        let got = data_rows(&out);
        let count_line = format!("count {rows}");
        ok &= expected.len() == rows
            && got == expected
            && out.lines().any(|l| l == count_line)
            && elapsed < Duration::from_secs(1);
        details.push(format!("g={g}: {} rows in {:.0?}", got.len(), elapsed));
    }
    check(ok, details.join(", "))
}

fn torus_case() -> Outcome {
    let (out, _) = rgcr(&["signatures", "--genus", "1"]);
    let rows = data_rows(&out);
    let expected = BTreeSet::from(["1 4 4 - -".to_string(), "1 6 3 - -".to_string()]);
    let pairs: Vec<(u32, u32)> = signatures(1).iter().map(|s| (s.n, s.m)).collect();
    check(
        rows == expected && pairs == [(4, 4), (3, 6)],
        format!("signatures {pairs:?}"),
    )
}

fn gauss_bonnet() -> Outcome {
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    let mut count = 0;
    for g in 2..=4 {
        for sig in signatures(g) {
            worst = worst.max(gauss_bonnet_residual(&sig).unwrap().abs());
            count += 1;
        }
    }
    let elapsed = start.elapsed();
    check(
        worst < 1e-9 && elapsed < Duration::from_secs(1),
        format!("{count} signatures, max residual {worst:.3e}, {elapsed:.0?}"),
    )
}

fn right_angle() -> Outcome {
    let mut worst: f64 = 0.0;
    let mut count = 0;
    for g in 1..=4 {
        for sig in signatures(g) {
            let (a, b) = interior_angles(sig.n, sig.m).unwrap();
            worst = worst.max((dihedral_check(a, b) - PI / 2.0).abs());
            count += 1;
        }
    }
    check(
        worst < 1e-12,
        format!("{count} signatures, max deviation {worst:.3e}"),
    )
}

fn octagon_angle() -> Outcome {
    let (a, b) = interior_angles(8, 8).unwrap();
    let dev = (a - PI / 2.0).abs().max((b - PI / 2.0).abs());
    check(dev < 1e-12, format!("({a}, {b}), deviation {dev:.3e}"))
}

fn knot_existence() -> Outcome {
    let sig = signature_from_pair(2, 8, 8).unwrap();
    let start = Instant::now();
    let knots = find_knots(&sig, &SearchLimits::default()).unwrap();
    let elapsed = start.elapsed();
    check(
        !knots.is_empty() && elapsed < Duration::from_secs(60),
        format!("{} knot(s) in {elapsed:.0?}", knots.len()),
    )
}

fn component_variety() -> Outcome {
    let sig = signature_from_pair(3, 8, 8).unwrap();
    let result = enumerate_diagrams(&sig, &SearchLimits::default()).unwrap();
    let mut histogram = BTreeMap::new();
    for d in &result.diagrams {
        *histogram.entry(d.report.components).or_insert(0usize) += 1;
    }
    let forms: BTreeSet<_> = result.diagrams.iter().map(|d| &d.form).collect();
    check(
        result.diagrams.len() >= 2 && forms.len() == result.diagrams.len() && histogram.len() >= 2,
        format!(
            "{} diagrams, components -> count {histogram:?}",
            result.diagrams.len()
        ),
    )
}

fn edge_classes() -> Outcome {
    let mut sigs = torus_quotients(24);
    for g in 2..=3 {
        sigs.extend(
            signatures(g)
                .into_iter()
                .filter(|s| s.edge_count().unwrap() <= 24),
        );
    }
    sigs.push(signature_from_pair(4, 16, 16).unwrap());
    let mut diagrams = 0;
    let mut bad = Vec::new();
    for sig in &sigs {
        for d in enumerate_diagrams(sig, &SearchLimits::default())
            .unwrap()
            .diagrams
        {
            diagrams += 1;
            let coloring = checkerboard(&d.map).expect("emitted diagrams are colorable");
            let sizes = gear_shift_edge_classes(&d.map, &coloring);
            if sizes.is_empty() || sizes.iter().any(|&s| s != 4) {
                bad.push(format!("{sig}: {sizes:?}"));
            }
        }
    }
    check(
        bad.is_empty() && diagrams > 0,
        format!(
            "{} enumerations, {diagrams} diagrams, {} violations {bad:?}",
            sigs.len(),
            bad.len()
        ),
    )
}

/// Equal-edge condition solved by bisection.
fn bisect_alpha(n: u32, m: u32) -> f64 {
    let f = |a: f64| {
        (PI / f64::from(n)).cos() / (a / 2.0).sin()
            - (PI / f64::from(m)).cos() / ((PI - a) / 2.0).sin()
    };
    let (mut lo, mut hi) = (1e-9, PI - 1e-9);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if f(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

fn oracle_equivalence() -> Outcome {
    let mut sigs = torus_quotients(12);
    for g in 2..=4 {
        sigs.extend(
            signatures(g)
                .into_iter()
                .filter(|s| s.edge_count().unwrap() <= 12),
        );
    }
    let mut enumerated: Vec<SurfaceMap> = Vec::new();
    for sig in &sigs {
        let result = enumerate_diagrams(sig, &SearchLimits::default()).unwrap();
        enumerated.extend(result.diagrams.into_iter().map(|d| d.map));
    }

    // primality on the enumerated maps and on the census, which has failures
    let census = common::small_maps();
    let mut prime_mismatches = 0;
    let mut prime_checked = 0;
    for map in enumerated.iter().chain(census) {
        prime_checked += 1;
        if weakly_prime(map).weakly_prime != common::weakly_prime_oracle(map) {
            prime_mismatches += 1;
        }
    }

    // canonical forms against the isomorphism oracle, relabelled copies included
    let mut maps = enumerated.clone();
    maps.extend(enumerated.iter().map(|m| {
        let n = m.dart_count();
        let perm: Vec<usize> = (0..n).rev().collect();
        m.relabel(&perm).unwrap()
    }));
    let forms: Vec<_> = maps.iter().map(canonical_form).collect();
    let mut iso_mismatches = 0;
    let mut pairs = 0;
    for i in 0..maps.len() {
        for j in i..maps.len() {
            // maps with different dart counts are trivially distinct
            if maps[i].dart_count() != maps[j].dart_count() {
                continue;
            }
            pairs += 1;
            if (forms[i] == forms[j]) != common::isomorphic_up_to_mirror(&maps[i], &maps[j]) {
                iso_mismatches += 1;
            }
        }
    }

    let mut worst: f64 = 0.0;
    let mut angle_pairs = 0;
    for n in 3..=42 {
        for m in n..=42 {
            if (n - 2) * (m - 2) < 4 {
                continue;
            }
            angle_pairs += 1;
            let (a, _) = interior_angles(n, m).unwrap();
            worst = worst.max((a - bisect_alpha(n, m)).abs());
        }
    }

    check(
        prime_mismatches == 0 && iso_mismatches == 0 && worst < 1e-10 && !enumerated.is_empty(),
        format!(
            "weakly_prime {prime_mismatches}/{prime_checked} mismatches, \
             canonical {iso_mismatches}/{pairs} pair mismatches over {} enumerated maps, \
             angles max deviation {worst:.3e} over {angle_pairs} pairs",
            enumerated.len()
        ),
    )
}

fn bound_evaluation() -> Outcome {
    let bound = count_bounds(2).unwrap();
    let pair = BigRational::new(670.into(), 9.into());
    let fact: BigUint = (1u32..=85).map(BigUint::from).product();
    let link = &pair * BigRational::from_integer(fact.clone().into());
    check(
        bound.pair_bound == pair && bound.factorial == fact && bound.link_bound == link,
        format!(
            "pair_bound {}, link_bound = 670/9 * 85! ({} digits)",
            bound.pair_bound,
            link.to_integer().to_string().len()
        ),
    )
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("table reproduction", table_reproduction),
        ("torus case", torus_case),
        ("Gauss-Bonnet identity", gauss_bonnet),
        ("right-angle witness", right_angle),
        ("octagon angle", octagon_angle),
        ("knot existence", knot_existence),
        ("component variety at genus 3", component_variety),
        ("edge-class invariant", edge_classes),
        ("oracle equivalence", oracle_equivalence),
        ("bound evaluation", bound_evaluation),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".to_string()));
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name}: {detail}", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} criterion(s) failed");
        std::process::exit(1);
    }
}
