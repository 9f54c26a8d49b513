//! Acceptance suite: one test per criterion, each printing a single
//! pass/fail line (visible with `--nocapture`; the test result line carries
//! the same verdict either way).

use std::process::Command;

use clawmat::constructions::{f_closed, f_value, g_value, turan_union_graph};
use clawmat::enumeration::{EnumClass, EnumSpec};
use clawmat::verify::{
    contract_lemma_exhaustive, contract_lemma_property, verify_graph_theorem, verify_lowrank,
    verify_matroid_bound, verify_triangle_free, Verdict,
};

fn report(criterion: u32, ok: bool, detail: &str) {
    println!(
        "criterion {criterion}: {} - {detail}",
        if ok { "pass" } else { "FAIL" }
    );
    assert!(ok, "criterion {criterion}: {detail}");
}

fn binary_spec(r: usize) -> EnumSpec {
    EnumSpec {
        class: EnumClass::Binary,
        rank: r,
        n_max: 31,
        size_bound: None,
        require_simple: true,
    }
}

fn rank3_spec() -> EnumSpec {
    EnumSpec {
        class: EnumClass::Rank3,
        rank: 3,
        n_max: 9,
        size_bound: None,
        require_simple: true,
    }
}

/// Edge count of the near-equal union of t cliques on n vertices, by
/// partition arithmetic (works beyond the 32-vertex graph capacity).
fn near_equal_clique_edges(n: usize, t: usize) -> u64 {
    let q = (n / t) as u64;
    let a = (n % t) as u64;
    let c2 = |k: u64| k * k.saturating_sub(1) / 2;
    (t as u64 - a) * c2(q) + a * c2(q + 1)
}

#[test]
fn criterion_01_size_functions() {
    for r in 0..=60 {
        for t in 1..=16 {
            assert_eq!(f_closed(r, t), f_value(r, t), "f mismatch at r={r} t={t}");
        }
    }
    for t in 1..=8usize {
        for n in 3 * t..=40 {
            let edges = near_equal_clique_edges(n, t);
            assert_eq!(edges, g_value(n, t), "g mismatch at n={n} t={t}");
            if n <= 32 {
                let g = turan_union_graph(n, t).unwrap();
                assert_eq!(g.edge_count() as u64, edges);
            }
        }
    }
    // below 3t the clique union stops matching g; record a witness per t
    let mut witnesses = Vec::new();
    for t in 2..=8usize {
        let w = (2 * t..3 * t)
            .find(|&n| near_equal_clique_edges(n, t) != g_value(n, t));
        match w {
            Some(n) => witnesses.push(format!(
                "t={t}: n={n} cliques={} g={}",
                near_equal_clique_edges(n, t),
                g_value(n, t)
            )),
            None => report(1, false, &format!("no sub-3t mismatch witness for t={t}")),
        }
    }
    report(1, true, &format!("f/g tables agree; witnesses: {}", witnesses.join("; ")));
}

#[test]
fn criterion_02_base_lemma() {
    let r3 = verify_matroid_bound(&rank3_spec(), 1, None).unwrap();
    let ok3 = r3.observed_min == Some(7)
        && r3.matched_prediction
        && r3.tight_classes.len() == 1
        && r3.tight_classes[0].label == "M_{3,1}";
    let r4 = verify_matroid_bound(&binary_spec(4), 1, None).unwrap();
    let ok4 = r4.observed_min == Some(15)
        && r4.matched_prediction
        && r4.tight_classes.len() == 1
        && r4.tight_classes[0].label == "M_{4,1}";
    report(
        2,
        ok3 && ok4,
        &format!(
            "rank-3 min {:?} (unique PG(2,2): {ok3}); rank-4 binary min {:?} (unique PG(3,2): {ok4})",
            r3.observed_min, r4.observed_min
        ),
    );
}

#[test]
fn criterion_03_maintech_binary() {
    let mut ok = true;
    let mut details = Vec::new();
    for (r, t) in [(3usize, 2usize), (4, 2), (4, 3), (5, 2)] {
        let rep = verify_matroid_bound(&binary_spec(r), t, None).unwrap();
        let here = rep.observed_min == Some(f_value(r, t)) && rep.matched_prediction;
        let unique_ok = r < 2 * t || rep.tight_classes.len() == 1;
        ok &= here && unique_ok;
        details.push(format!(
            "({r},{t}): min {:?}, {} tight, matched {}",
            rep.observed_min,
            rep.tight_classes.len(),
            rep.matched_prediction
        ));
    }
    report(3, ok, &details.join("; "));
}

#[test]
fn criterion_04_maintech_rank3() {
    let rep = verify_matroid_bound(&rank3_spec(), 2, None).unwrap();
    let labels: Vec<&str> = rep.tight_classes.iter().map(|c| c.label.as_str()).collect();
    let ok = rep.observed_min == Some(4)
        && rep.matched_prediction
        && labels.len() == 2
        && labels.contains(&"M_{3,2}")
        && labels.contains(&"circuits[4]+coloops[0]");
    report(4, ok, &format!("tight set {labels:?}"));
}

#[test]
fn criterion_05_lowrank() {
    let mut ok = true;
    let mut details = Vec::new();
    for (r, t) in [(2usize, 1usize), (3, 2), (4, 3)] {
        let rep = verify_lowrank(r, t, 2 * r - t, None).unwrap();
        ok &= rep.observed_min == Some((2 * r - t) as u64) && rep.matched_prediction;
        details.push(format!(
            "({r},{t}): min {:?}, {} tight",
            rep.observed_min,
            rep.tight_classes.len()
        ));
        if (r, t) == (3, 2) {
            let logged = rep.notes.iter().any(|n| n.contains("uniqueness remark"));
            ok &= logged;
            details.push(format!("discrepancy logged: {logged}"));
        }
    }
    report(5, ok, &details.join("; "));
}

#[test]
fn criterion_06_contract_lemma() {
    let random = contract_lemma_property(10_000, 42).unwrap();
    let sweep = contract_lemma_exhaustive(7).unwrap();
    let ok = random.failures.is_empty() && sweep.failures.is_empty();
    report(
        6,
        ok,
        &format!(
            "10^4 trials: {} failures; exhaustive n<=7 sweep ({} checks): {} failures",
            random.failures.len(),
            sweep.counts_scanned,
            sweep.failures.len()
        ),
    );
}

#[test]
fn criterion_07_ag_lemma() {
    let mut ok = true;
    let mut details = Vec::new();
    for (r, cap) in [(3usize, 9usize), (4, 8), (5, 16)] {
        let rep = verify_triangle_free(r, 1, cap, None).unwrap();
        let here = rep.observed_min == Some(1 << (r - 1))
            && rep.matched_prediction
            && rep.tight_classes.len() == 1
            && rep.tight_classes[0].label == format!("AG({},2)", r - 1);
        ok &= here;
        details.push(format!("r={r}: min {:?}, tight unique AG: {here}", rep.observed_min));
    }
    report(7, ok, &details.join("; "));
}

#[test]
fn criterion_08_conjecture() {
    let mut ok = true;
    let mut details = Vec::new();
    for (r, t, cap) in [(4usize, 2usize, 8usize), (6, 2, 7)] {
        let rep = verify_triangle_free(r, t, cap, None).unwrap();
        match rep.verdict {
            Verdict::ConsistentAtScale => {
                details.push(format!("({r},{t}) sizes<={cap}: consistent at this scale"))
            }
            Verdict::CounterexampleFound => {
                // a counterexample is a pass for the software; surface it loudly
                for c in &rep.counterexamples {
                    eprintln!("CONJECTURE COUNTEREXAMPLE at ({r},{t}):\n{}", c.record);
                }
                details.push(format!(
                    "({r},{t}): {} counterexample(s) found and surfaced",
                    rep.counterexamples.len()
                ));
            }
            _ => {
                ok = false;
                details.push(format!("({r},{t}): unexpected verdict {:?}", rep.verdict));
            }
        }
    }
    report(8, ok, &details.join("; "));
}

#[test]
fn criterion_09_graph_theorem() {
    let mut ok = true;
    let mut details = Vec::new();
    for t in 1..=3usize {
        for n in 2 * t + 1..=8 {
            let rep = verify_graph_theorem(n, t, None).unwrap();
            let here = rep.observed_min == Some(g_value(n, t)) && rep.matched_prediction;
            ok &= here;
            if !here {
                details.push(format!("({n},{t}): min {:?} FAIL", rep.observed_min));
            }
            if (n, t) == (6, 2) {
                let labels: Vec<&str> =
                    rep.tight_classes.iter().map(|c| c.label.as_str()).collect();
                let exact = labels.len() == 2
                    && labels.contains(&"K3+K3")
                    && labels.contains(&"K4+K1+K1");
                ok &= exact;
                details.push(format!("(6,2) tight {labels:?}"));
            }
        }
    }
    let stretch = verify_graph_theorem(9, 2, None).unwrap();
    let stretch_ok = stretch.observed_min == Some(16)
        && stretch.matched_prediction
        && stretch.tight_classes.len() == 1
        && stretch.tight_classes[0].label == "K5+K4";
    ok &= stretch_ok;
    details.push(format!(
        "(9,2): min {:?}, unique K5+K4: {stretch_ok}",
        stretch.observed_min
    ));
    report(9, ok, &details.join("; "));
}

#[test]
fn criterion_10_determinism() {
    let bin = env!("CARGO_BIN_EXE_clawmat");
    let run = |args: &[&str]| {
        let out = Command::new(bin).args(args).output().expect("cli runs");
        assert!(out.status.success(), "cli failed: {args:?}");
        out.stdout
    };
    let mut ok = true;
    for args in [
        vec!["verify", "graph", "--n", "7", "--t", "2"],
        vec!["verify", "bound", "--class", "binary", "--r", "4", "--t", "2"],
        vec!["verify", "lowrank", "--r", "3", "--t", "2", "--n-max", "4"],
        vec!["verify", "trianglefree", "--r", "4", "--t", "1", "--size-cap", "8"],
    ] {
        let with = |shards: &str| {
            let mut a = args.clone();
            a.extend(["--shards", shards]);
            run(&a)
        };
        let one = with("1");
        let four = with("4");
        let again = with("1");
        ok &= one == four && one == again;
    }
    report(10, ok, "JSON reports byte-identical across shard counts and re-runs");
}
