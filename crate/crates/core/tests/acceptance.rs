//! Acceptance gate. Prints one `[PASS]`/`[FAIL]` line per criterion and
//! exits nonzero if any criterion fails. All comparisons are exact.

mod common;

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};
use std::time::Instant;

use graph_toughness::format::{parse_graph6, to_graph6};
use graph_toughness::generators::{
    build_jm, cycle_power, petersen, random_connected, random_corpus,
};
use graph_toughness::invariants::{
    claw_centers, connectivity, independence_number, toughness, toughness_oracle,
};
use graph_toughness::search::{enumerate_regular, run_census, Predicate, SearchSpec};
use graph_toughness::verify::{
    verify_claw_structure, verify_lemma_a, verify_lemma_b, verify_lemma_c,
    verify_lemma_c_triangles, verify_no_k14_at_x,
};
use graph_toughness::{ExtRational, Graph, Rational};

type Criterion = (&'static str, &'static str, fn() -> Outcome);

struct Outcome {
    ok: bool,
    details: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome {
            ok: true,
            details: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, detail: impl Into<String>) {
        self.ok &= ok;
        let mark = if ok { "ok  " } else { "FAIL" };
        self.details.push(format!("{mark} {}", detail.into()));
    }

    fn note(&mut self, detail: impl Into<String>) {
        self.details.push(format!("info {}", detail.into()));
    }
}

fn two() -> ExtRational {
    ExtRational::Finite(Rational::integer(2))
}

/// `α ≤ 2n/(r+2)` when `g` is `r`-regular with toughness `r/2`; `None` when
/// `g` is not supertough.
fn alpha_bound(g: &Graph) -> Option<bool> {
    let r = g.degree(0);
    if !g.is_regular(r) || toughness(g).value() != ExtRational::Finite(Rational::new(r as u64, 2)) {
        return None;
    }
    Some(independence_number(g).alpha * (r + 2) <= 2 * g.order())
}

fn ac1() -> Outcome {
    let mut o = Outcome::new();
    for m in [3, 5, 7] {
        let start = Instant::now();
        let t = toughness(&build_jm(m).unwrap().graph);
        o.check(
            t.value() == two(),
            format!(
                "toughness(J_{m}) = {} in {:.2?}",
                t.value(),
                start.elapsed()
            ),
        );
    }
    o
}

fn ac2() -> Outcome {
    let mut o = Outcome::new();
    for m in 3..=9 {
        let r = verify_lemma_a(m).unwrap();
        o.check(
            r.passed(),
            format!("LEMMA_A J_{m}: connectivity {}", r.payload["connectivity"]),
        );
    }
    for m in 5..=7 {
        let r = verify_lemma_b(m).unwrap();
        let bad = r.payload["violating"].as_array().map_or(0, Vec::len);
        o.check(
            r.passed(),
            format!(
                "LEMMA_B J_{m}: {} 4-cuts, {bad} of neither stated shape{}",
                r.payload["cutsets"],
                r.payload["violating"]
                    .get(0)
                    .map(|v| format!(", e.g. {} leaving {}", v["cut"], v["components"]))
                    .unwrap_or_default()
            ),
        );
    }
    for m in [3, 5, 7] {
        let r = verify_lemma_c(m).unwrap();
        let t = verify_lemma_c_triangles(m).unwrap();
        o.check(
            r.passed() && t.passed(),
            format!(
                "LEMMA_C J_{m}: alpha {} (expected {}), triangles span V minus {{a1, b{m}}}: {}",
                r.payload["alpha"],
                m - 1,
                t.passed()
            ),
        );
    }
    o
}

fn ac3() -> Outcome {
    let mut o = Outcome::new();
    for m in 4..=7 {
        let lg = build_jm(m).unwrap();
        let centers = claw_centers(&lg.graph);
        let exact = centers == lg.labeling.x_set();
        let no_k14 = verify_no_k14_at_x(m).unwrap().passed();
        let report = verify_claw_structure(m).unwrap().passed();
        o.check(
            exact && no_k14 && report,
            format!(
                "J_{m}: claw centers {:?}, no K_1,4 at X: {no_k14}",
                centers
                    .iter()
                    .map(|v| lg.labeling.name(v))
                    .collect::<Vec<_>>()
            ),
        );
    }
    o
}

fn ac4() -> Outcome {
    let mut o = Outcome::new();
    let j3 = build_jm(3).unwrap().graph;
    let kappa = connectivity(&j3).kappa;
    let t = toughness(&j3).value();
    o.check(
        claw_centers(&j3).is_empty()
            && t == ExtRational::Finite(Rational::new(kappa as u64, 2))
            && t == two(),
        format!("J_3 claw-free, kappa {kappa}, toughness {t}"),
    );
    for n in [8, 10] {
        let t = toughness(&cycle_power(n, 2).unwrap()).value();
        o.check(t == two(), format!("toughness(C_{n}^2) = {t}"));
    }
    let mut touched: Vec<(String, Graph)> = vec![
        ("J_3".into(), j3),
        ("J_5".into(), build_jm(5).unwrap().graph),
        ("J_7".into(), build_jm(7).unwrap().graph),
        ("C_8^2".into(), cycle_power(8, 2).unwrap()),
        ("C_10^2".into(), cycle_power(10, 2).unwrap()),
    ];
    for n in 6..=10 {
        let res = run_census(&SearchSpec::builtin(n, 4, &[Predicate::Supertough])).unwrap();
        for s in res.survivors {
            touched.push((s.graph6, s.graph));
        }
    }
    let mut checked = 0;
    let mut all = true;
    for (name, g) in &touched {
        match alpha_bound(g) {
            Some(ok) => {
                checked += 1;
                if !ok {
                    all = false;
                    o.check(false, format!("alpha bound fails on {name}"));
                }
            }
            None => o.check(false, format!("{name} expected supertough")),
        }
    }
    o.check(
        all,
        format!("alpha <= 2n/(r+2) on {checked} supertough graphs"),
    );
    o
}

fn ac5() -> Outcome {
    let mut o = Outcome::new();
    for n in 1..=8 {
        for r in 0..n.min(5) {
            if n * r % 2 == 1 {
                continue;
            }
            let oracle = common::connected_regular_classes(n, r);
            let got: BTreeSet<String> = enumerate_regular(n, r)
                .unwrap()
                .iter()
                .map(to_graph6)
                .collect();
            if got != oracle {
                o.check(
                    false,
                    format!(
                        "class mismatch at n={n} r={r}: {} vs {}",
                        got.len(),
                        oracle.len()
                    ),
                );
            }
        }
    }
    if o.ok {
        o.check(
            true,
            "orderly generation agrees with labeled enumeration for n <= 8, r <= 4",
        );
    } else {
        return o;
    }
    let start = Instant::now();
    let res = run_census(&SearchSpec::builtin(
        10,
        4,
        &[Predicate::Connected, Predicate::Supertough],
    ))
    .unwrap();
    let forms: Vec<&str> = res.survivors.iter().map(|s| s.graph6.as_str()).collect();
    o.check(
        res.survivors.len() == 2,
        format!(
            "{} connected 4-regular graphs of order 10, {} supertough (expected 2): {forms:?} in {:.2?}",
            res.examined,
            res.survivors.len(),
            start.elapsed()
        ),
    );
    let with_claws = res
        .survivors
        .iter()
        .filter(|s| !s.claw_centers.is_empty())
        .count();
    o.note(format!(
        "{with_claws} of the supertough graphs contain a claw"
    ));
    o
}

fn ac6() -> Outcome {
    let mut o = Outcome::new();
    let mut graphs: Vec<(String, Graph)> = (0..200u64)
        .map(|seed| {
            let n = 2 + (seed % 8) as usize;
            let p = [0.2, 0.35, 0.5, 0.7][(seed / 8 % 4) as usize];
            (
                format!("seed {seed}"),
                random_connected(n, p, seed).unwrap(),
            )
        })
        .collect();
    graphs.push(("J_3".into(), build_jm(3).unwrap().graph));
    graphs.push(("J_5".into(), build_jm(5).unwrap().graph));
    graphs.push(("petersen".into(), petersen()));
    graphs.push(("C_8^2".into(), cycle_power(8, 2).unwrap()));
    let mut mismatches = 0;
    for (name, g) in &graphs {
        let fast = toughness(g);
        let slow = toughness_oracle(g).unwrap();
        if fast != slow {
            mismatches += 1;
            o.check(false, format!("{name}: solver {fast:?} vs oracle {slow:?}"));
        }
    }
    o.check(
        mismatches == 0,
        format!("{} graphs, value and witness identical", graphs.len()),
    );
    o
}

fn ac7() -> Outcome {
    let mut o = Outcome::new();
    let corpus = random_corpus(500, 1, 64, 7).unwrap();
    let bad = corpus
        .iter()
        .filter(|g| {
            let s = to_graph6(g);
            parse_graph6(&s).map_or(true, |h| &h != *g || to_graph6(&h) != s)
        })
        .count();
    o.check(
        bad == 0,
        format!("{} graphs round-trip, {bad} failures", corpus.len()),
    );
    let k3 = Graph::from_edges(3, [(0, 1), (0, 2), (1, 2)]).unwrap();
    o.check(
        to_graph6(&k3) == "Bw" && parse_graph6("Bw").as_ref() == Ok(&k3),
        "K_3 <-> \"Bw\"",
    );
    o
}

fn ac8() -> Outcome {
    let mut o = Outcome::new();
    let ledger = |workers: &str| {
        Command::new(env!("CARGO_BIN_EXE_graph-toughness"))
            .args(["--workers", workers, "verify", "--m", "3..7"])
            .output()
            .expect("binary runs")
    };
    let a = ledger("1");
    let b = ledger("8");
    o.check(
        !a.stdout.is_empty() && a.stdout == b.stdout,
        format!(
            "{} bytes with 1 worker, {} bytes with 8, identical: {}",
            a.stdout.len(),
            b.stdout.len(),
            a.stdout == b.stdout
        ),
    );
    o.note(format!("ledger exit code {:?}", a.status.code()));
    o
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("AC1", "J_m has toughness exactly 2 for m in {3, 5, 7}", ac1),
        (
            "AC2",
            "lemma ledger (connectivity, 4-cuts, independence)",
            ac2,
        ),
        (
            "AC3",
            "claw centers of J_m are exactly X, no K_1,4 at X",
            ac3,
        ),
        (
            "AC4",
            "claw-free, cycle power and independence bound consistency",
            ac4,
        ),
        (
            "AC5",
            "exactly 2 supertough connected 4-regular graphs of order 10",
            ac5,
        ),
        (
            "AC6",
            "pruned toughness solver matches the exhaustive oracle",
            ac6,
        ),
        ("AC7", "graph6 round trip", ac7),
        (
            "AC8",
            "verify ledger is identical across worker counts",
            ac8,
        ),
    ];
    let mut failed = 0;
    for (id, title, f) in criteria {
        let start = Instant::now();
        let out = f();
        let tag = if out.ok { "PASS" } else { "FAIL" };
        println!("[{tag}] {id} {title} ({:.2?})", start.elapsed());
        for d in &out.details {
            println!("       {d}");
        }
        failed += !out.ok as usize;
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
