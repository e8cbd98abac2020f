//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

mod common;

use std::collections::BTreeSet;
use std::fs;
use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::Instant;

use common::{CONFIGS, tiny_graph, weigh};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tmatch::Error;
use tmatch::detect::{Detection, Kind, Variant, analyze};
use tmatch::generators::{PlantKind, plant_forbidden, random_bounded, sprinkle, vertex_induced_weights};
use tmatch::graph::{CapacityVector, EdgeTag, Graph, MultiGraph};
use tmatch::io::{Instance, write_instance};
use tmatch::lb::{Reduction, solve_min_cardinality_from, solve_min_cardinality_lb, solve_min_weight};
use tmatch::matching::max_weight_matching;
use tmatch::oracle::{brute_force_lb, brute_force_min_cover, brute_force_optimum, brute_force_subgraphs};
use tmatch::pipeline::{Mode, Solution, SolveOptions, solve};
use tmatch::potentials::{extract_potential, verify_vertex_induced};

struct Verdict {
    id: u8,
    name: &'static str,
    failures: Vec<String>,
    detail: String,
}

impl Verdict {
    fn new(id: u8, name: &'static str) -> Self {
        Verdict {
            id,
            name,
            failures: Vec::new(),
            detail: String::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }

    fn print(&self) -> bool {
        let pass = self.failures.is_empty();
        println!(
            "criterion {} [{}] {}: {}",
            self.id,
            if pass { "PASS" } else { "FAIL" },
            self.name,
            self.detail
        );
        for f in self.failures.iter().take(5) {
            println!("    {f}");
        }
        if self.failures.len() > 5 {
            println!("    ... {} more", self.failures.len() - 5);
        }
        pass
    }
}

fn mode_of(weighted: bool) -> Mode {
    if weighted { Mode::Weighted } else { Mode::Unweighted }
}

/// `k_{t+1} + k_{t,t} + (p-1) k^p_q + sum (p - |C|/2 + 1)` over subgraphs
/// owning a gadget.
fn counting_formula(d: &Detection, sol: &Solution) -> i64 {
    let p = d.variant.p() as i64;
    sol.aux
        .gadgets
        .iter()
        .map(|gad| {
            let h = &d.subgraphs[gad.subgraph];
            match h.kind {
                Kind::Kt1 | Kind::Ktt => 1,
                Kind::Kpq { p, .. } => p as i64 - 1,
                Kind::Dense => p - h.core.len() as i64 / 2 + 1,
            }
        })
        .sum()
}

/// Criteria 1, 3, 4 share their instances; criterion 6 takes the auxiliary
/// cardinality checks from the unweighted ones.
fn end_to_end(c6: &mut Verdict) -> [Verdict; 3] {
    let mut c1 = Verdict::new(1, "oracle equivalence (end-to-end)");
    let mut c3 = Verdict::new(3, "weight sandwich");
    let mut c4 = Verdict::new(4, "unweighted counting identity");
    let start = Instant::now();
    let (mut runs, mut unweighted, mut dense) = (0, 0, 0);
    for cfg in &CONFIGS {
        for seed in 0..500u64 {
            for weighted in [false, true] {
                let g = tiny_graph(cfg, 9, seed);
                let g = if weighted { weigh(&g, cfg.variant, seed) } else { g };
                let tag = format!("{} seed {seed} weighted {weighted}", cfg.name);
                runs += 1;
                let sol = match solve(
                    &g,
                    SolveOptions {
                        variant: cfg.variant,
                        mode: mode_of(weighted),
                    },
                ) {
                    Ok(s) => s,
                    Err(e) => {
                        c1.check(false, || format!("{tag}: solver error {e}"));
                        continue;
                    }
                };
                dense += sol.stats.dense;
                let (best, _) = brute_force_optimum(&g, cfg.variant).unwrap();
                c1.check(sol.result.weight == best, || {
                    format!("{tag}: solver {} oracle {}", sol.result.weight, best)
                });
                let (cover, _) = brute_force_min_cover(&g, cfg.variant).unwrap();
                let cot = sol.result.cotmatching.weight(&g);
                c3.check(sol.stats.lb_weight == cot && cot == cover, || {
                    format!("{tag}: (l,b) {} co-t {} oracle {}", sol.stats.lb_weight, cot, cover)
                });
                if weighted {
                    continue;
                }
                unweighted += 1;
                let identity = sol.lb.len() as i64 - sol.stats.lb_weight / 2;
                let formula = counting_formula(&sol.detection, &sol);
                c4.check(sol.stats.lb_weight % 2 == 0 && identity == formula, || {
                    format!("{tag}: |M'| - w'(M') = {identity}, formula {formula}")
                });
                let star = sol.stats.star_size.unwrap_or(0) + sol.lb.len();
                c6.check(Some(star) == sol.stats.sum_upper, || {
                    format!("{tag}: |M*| + |M| = {star}, sum b = {:?}", sol.stats.sum_upper)
                });
                match solve_min_cardinality_lb(&sol.aux.graph, &sol.aux.capacities) {
                    Ok(full) => c6.check(full.matching.len() == sol.lb.len(), || {
                        format!("{tag}: uncapped {} capped {}", full.matching.len(), sol.lb.len())
                    }),
                    Err(e) => c6.check(false, || format!("{tag}: uncapped solve failed: {e}")),
                }
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    c1.detail = format!(
        "{} mismatches in {runs} instances over {} configurations ({dense} dense records), {secs:.1}s",
        c1.failures.len(),
        CONFIGS.len()
    );
    c3.detail = format!("{} of {runs} instances break (l,b) = co-t = oracle", c3.failures.len());
    c4.detail = format!("{} of {unweighted} unweighted instances break the identity", c4.failures.len());
    [c1, c3, c4]
}

fn canonical(classes: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let mut c: Vec<Vec<usize>> = classes
        .into_iter()
        .map(|mut x| {
            x.sort_unstable();
            x
        })
        .collect();
    c.sort();
    c
}

fn detection() -> Verdict {
    let mut v = Verdict::new(2, "detection equivalence");
    let start = Instant::now();
    let (mut graphs, mut found) = (0, 0);
    for cfg in &CONFIGS {
        for seed in 0..500u64 {
            let g = tiny_graph(cfg, 12, seed + 10_000);
            graphs += 1;
            let tag = format!("{} seed {seed}", cfg.name);
            let d = match analyze(&g, cfg.variant) {
                Ok(d) => d,
                Err(e) => {
                    v.check(false, || format!("{tag}: {e}"));
                    continue;
                }
            };
            let ours: BTreeSet<_> = d.forbidden().map(|h| canonical(h.classes())).collect();
            let truth: BTreeSet<_> = brute_force_subgraphs(&g, cfg.variant)
                .unwrap()
                .into_iter()
                .map(canonical)
                .collect();
            found += truth.len();
            v.check(ours == truth && ours.len() == d.forbidden().count(), || {
                format!("{tag}: detected {} vs oracle {}", ours.len(), truth.len())
            });
            let owners: Vec<_> = d.subgraphs.iter().filter(|h| h.problematic).collect();
            for (i, a) in owners.iter().enumerate() {
                for b in &owners[i + 1..] {
                    v.check(a.vertices.iter().all(|x| !b.contains(*x)), || {
                        format!("{tag}: problematic {} and {} overlap", a.id, b.id)
                    });
                }
            }
        }
    }
    v.detail = format!(
        "{} disagreements over {graphs} graphs ({found} subgraphs), {:.1}s",
        v.failures.len(),
        start.elapsed().as_secs_f64()
    );
    v
}

fn random_lb_instance(rng: &mut ChaCha8Rng) -> (MultiGraph, CapacityVector) {
    let n = rng.gen_range(2..=10);
    let m = rng.gen_range(0..=14);
    let mut g = MultiGraph::new(n);
    for k in 0..m {
        let u = rng.gen_range(0..n);
        let v = (u + rng.gen_range(1..n)) % n;
        g.add_edge(u, v, rng.gen_range(-20..=20), EdgeTag::Original(k)).unwrap();
    }
    let upper: Vec<usize> = (0..n).map(|_| rng.gen_range(0..=3)).collect();
    let lower = upper.iter().map(|&b| rng.gen_range(0..=b.min(2))).collect();
    (g, CapacityVector::new(lower, upper).unwrap())
}

fn engines() -> [Verdict; 2] {
    let mut c5 = Verdict::new(5, "matching-engine oracle");
    let mut c6 = Verdict::new(6, "capped cardinality and |M*| identity");
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let (mut feasible, mut certified) = (0, 0);
    for case in 0..1000 {
        let (g, caps) = random_lb_instance(&mut rng);
        let costs: Vec<i64> = g.edges().iter().map(|e| e.weight).collect();
        let truth = brute_force_lb(&g, &caps, &costs);
        let simple: Vec<(usize, usize, i64)> = g.edges().iter().map(|e| (e.u, e.v, e.weight)).collect();
        for max_cardinality in [false, true] {
            match max_weight_matching(g.n(), &simple, max_cardinality) {
                Ok(m) if m.certified => certified += 1,
                other => c5.check(false, || format!("case {case}: blossom not certified: {other:?}")),
            }
        }
        let truth = match truth {
            Ok(t) => t,
            Err(Error::Infeasible) => {
                for r in [Reduction::PortSplit, Reduction::TwinCopies] {
                    let got = solve_min_weight(&g, &caps, r);
                    c5.check(got == Err(Error::Infeasible), || format!("case {case}: {r:?} gave {got:?}"));
                }
                let got = solve_min_cardinality_lb(&g, &caps).map(|o| o.matching.len());
                c5.check(got == Err(Error::Infeasible), || format!("case {case}: cardinality gave {got:?}"));
                continue;
            }
            Err(e) => panic!("oracle failed: {e}"),
        };
        feasible += 1;
        let mut witness = None;
        for r in [Reduction::PortSplit, Reduction::TwinCopies] {
            match solve_min_weight(&g, &caps, r) {
                Ok(m) => {
                    c5.check(m.weight(&g) == truth.min_weight && m.is_feasible(&caps), || {
                        format!("case {case}: {r:?} weight {} oracle {}", m.weight(&g), truth.min_weight)
                    });
                    witness = Some(m);
                }
                Err(e) => c5.check(false, || format!("case {case}: {r:?} failed: {e}")),
            }
        }
        let uncapped = solve_min_cardinality_lb(&g, &caps);
        match &uncapped {
            Ok(o) => {
                c5.check(o.matching.len() == truth.min_cardinality, || {
                    format!("case {case}: cardinality {} oracle {}", o.matching.len(), truth.min_cardinality)
                });
                c6.check(o.star_size + o.matching.len() == o.sum_upper, || {
                    format!("case {case}: |M*| = {} sum b = {}", o.star_size, o.sum_upper)
                });
            }
            Err(e) => c5.check(false, || format!("case {case}: cardinality failed: {e}")),
        }
        let Some(start) = witness else { continue };
        let capped = CapacityVector::new(caps.lower.clone(), start.degree.clone()).unwrap();
        match (solve_min_cardinality_from(&g, &capped, Some(&start)), uncapped) {
            (Ok(c), Ok(u)) => c6.check(
                c.matching.len() == u.matching.len() && u.matching.len() == truth.min_cardinality,
                || {
                    format!(
                        "case {case}: capped {} uncapped {} oracle {}",
                        c.matching.len(),
                        u.matching.len(),
                        truth.min_cardinality
                    )
                },
            ),
            (c, _) => c6.check(false, || format!("case {case}: capped solve {:?}", c.err())),
        }
    }
    c5.detail = format!(
        "{} mismatches over 1000 multigraphs ({feasible} feasible), {certified} certified blossom runs",
        c5.failures.len()
    );
    [c5, c6]
}

fn potentials() -> Verdict {
    let mut v = Verdict::new(7, "potential round trip");
    let exe = env!("CARGO_BIN_EXE_tmatch");
    let dir = tempfile::tempdir().unwrap();
    let setups: [(usize, Variant, &[PlantKind]); 3] = [
        (3, Variant::Restricted, &[PlantKind::Clique, PlantKind::Biclique]),
        (4, Variant::KpqFree { p: 3, q: 2 }, &[PlantKind::Partite { p: 3, q: 2 }]),
        (6, Variant::KpqFree { p: 3, q: 3 }, &[PlantKind::Partite { p: 3, q: 3 }]),
    ];
    let (mut subgraphs, mut rejected, mut cli_runs) = (0, 0, 0);
    for seed in 0..300u64 {
        let (t, variant, kinds) = setups[seed as usize % 3];
        let mut g = Graph::unweighted(0, t, &[]).unwrap();
        for &kind in kinds {
            g = plant_forbidden(&g, kind, 1, seed).unwrap();
        }
        let g = sprinkle(&g, (seed % 4) as usize, seed).unwrap();
        let groups: Vec<Vec<usize>> = brute_force_subgraphs(&g, variant)
            .unwrap()
            .into_iter()
            .map(|c| c.concat())
            .collect();
        let planted = vertex_induced_weights(&g, &groups, -2..=5, 9, seed)
            .or_else(|_| vertex_induced_weights(&g, &groups, 0..=4, 9, seed))
            .unwrap();
        let g = g.with_weights(&planted.weights).unwrap();
        let d = analyze(&g, variant).unwrap();
        for h in d.forbidden() {
            subgraphs += 1;
            let tag = format!("seed {seed} subgraph {}", h.id);
            let pf = match extract_potential(&g, h) {
                Ok(pf) => pf,
                Err(e) => {
                    v.check(false, || format!("{tag}: {e}"));
                    continue;
                }
            };
            v.check(verify_vertex_induced(&g, h, &pf), || format!("{tag}: r(u)+r(v) != w(u,v)"));
            let planted_of = |x: usize| planted.potentials[x].unwrap();
            let classes = h.classes();
            let shift = if h.kind == Kind::Ktt {
                pf.get(classes[0][0]).unwrap() - planted_of(classes[0][0])
            } else {
                0
            };
            for (i, class) in classes.iter().enumerate() {
                let delta = if i == 0 { shift } else { -shift };
                for &x in class {
                    v.check(pf.get(x) == Some(planted_of(x) + delta), || {
                        format!("{tag}: vertex {x} got {:?}, planted {} shift {delta}", pf.get(x), planted_of(x))
                    });
                }
            }
        }
        let Some(h) = d.forbidden().next() else { continue };
        let bad = h.edge_ids(&g)[0];
        let mut weights = g.input_weights();
        weights[bad] += 1;
        let perturbed = g.with_weights(&weights).unwrap();
        let lib = solve(&perturbed, SolveOptions { variant, mode: Mode::Weighted });
        let lib_ok = matches!(lib, Err(Error::NotVertexInduced { .. }));
        v.check(lib_ok, || format!("seed {seed}: perturbed instance gave {:?}", lib.map(|s| s.result.weight)));
        rejected += lib_ok as usize;
        if seed % 10 == 0 {
            cli_runs += 1;
            let path = dir.path().join(format!("perturbed-{seed}.txt"));
            let inst = Instance {
                graph: perturbed,
                variant,
                weighted: true,
            };
            fs::write(&path, write_instance(&inst)).unwrap();
            let status = Command::new(exe).arg("solve").arg(&path).output().unwrap().status;
            v.check(status.code() == Some(4), || format!("seed {seed}: CLI exit {:?}, want 4", status.code()));
        }
    }
    v.detail = format!(
        "{subgraphs} subgraphs recovered, {rejected} perturbed instances rejected, {cli_runs} CLI runs exit 4, {} failures",
        v.failures.len()
    );
    v
}

fn golden() -> Verdict {
    let mut v = Verdict::new(8, "golden values");
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let expected = fs::read_to_string(dir.join("expected.txt")).unwrap();
    let mut seen = Vec::new();
    for line in expected.lines().filter(|l| !l.starts_with('#') && !l.trim().is_empty()) {
        let (file, want) = line.split_once(' ').unwrap();
        let want: usize = want.trim().parse().unwrap();
        let out = Command::new(env!("CARGO_BIN_EXE_tmatch"))
            .args(["solve", "--oracle-check"])
            .arg(dir.join(file))
            .output()
            .unwrap();
        let stdout = String::from_utf8_lossy(&out.stdout);
        let got = stdout
            .lines()
            .find_map(|l| l.strip_prefix("edges "))
            .and_then(|x| x.parse::<usize>().ok());
        v.check(out.status.success() && got == Some(want), || {
            format!("{file}: got {got:?} edges (exit {:?}), want {want}", out.status.code())
        });
        seen.push(format!("{file}={}", got.map_or("?".into(), |x| x.to_string())));
    }
    v.detail = seen.join(", ");
    v
}

fn planted_scale_graph(n: usize, cliques: usize, bicliques: usize, seed: u64) -> Graph {
    let base_n = n - cliques * 4 - bicliques * 6;
    let g = random_bounded(base_n, 3, 3.0 / base_n as f64, seed).unwrap();
    let g = plant_forbidden(&g, PlantKind::Clique, cliques, seed + 1).unwrap();
    let g = plant_forbidden(&g, PlantKind::Biclique, bicliques, seed + 2).unwrap();
    sprinkle(&g, n / 20, seed + 3).unwrap()
}

fn scale() -> Verdict {
    let mut v = Verdict::new(9, "scale");
    let g = planted_scale_graph(2000, 25, 25, 90);
    let d = analyze(&g, Variant::Restricted).unwrap();
    let groups: Vec<Vec<usize>> = d.subgraphs.iter().map(|h| h.vertices.clone()).collect();
    let w = vertex_induced_weights(&g, &groups, 0..=6, 12, 91).unwrap();
    let g = g.with_weights(&w.weights).unwrap();
    let start = Instant::now();
    let weighted = solve(
        &g,
        SolveOptions {
            variant: Variant::Restricted,
            mode: Mode::Weighted,
        },
    );
    let weighted_secs = start.elapsed().as_secs_f64();
    let problematic = weighted.as_ref().map_or(0, |s| s.stats.problematic);
    v.check(weighted.is_ok() && weighted_secs < 60.0 && problematic >= 40, || {
        format!("weighted n=2000: {:?} in {weighted_secs:.2}s, {problematic} problematic", weighted.as_ref().err())
    });

    let u = planted_scale_graph(20_000, 50, 50, 92);
    let start = Instant::now();
    let unweighted = solve(
        &u,
        SolveOptions {
            variant: Variant::Restricted,
            mode: Mode::Unweighted,
        },
    );
    let unweighted_secs = start.elapsed().as_secs_f64();
    v.check(unweighted.is_ok() && unweighted_secs < 30.0, || {
        format!("unweighted n=20000: {:?} in {unweighted_secs:.2}s", unweighted.as_ref().err())
    });

    let mut ratios = Vec::new();
    for (i, n) in [2_500usize, 5_000, 10_000].into_iter().enumerate() {
        let small = planted_scale_graph(n, n / 100, n / 100, 93 + i as u64);
        let large = planted_scale_graph(2 * n, n / 50, n / 50, 93 + i as u64);
        let ps = analyze(&small, Variant::Restricted).unwrap().probes as f64;
        let pl = analyze(&large, Variant::Restricted).unwrap().probes as f64;
        let edge_ratio = large.m() as f64 / small.m() as f64;
        let ratio = pl / ps;
        v.check(ratio <= 2.4, || format!("n={n}: probes grew {ratio:.2}x for {edge_ratio:.2}x edges"));
        ratios.push(format!("m {}->{}: {ratio:.2}x", small.m(), large.m()));
    }
    v.detail = format!(
        "weighted n=2000 {weighted_secs:.2}s ({problematic} problematic), unweighted n=20000 {unweighted_secs:.2}s, probe growth {}",
        ratios.join(", ")
    );
    v
}

fn main() -> ExitCode {
    let mut c6 = Verdict::new(6, "capped cardinality and |M*| identity");
    let [c1, c3, c4] = end_to_end(&mut c6);
    let c2 = detection();
    let [c5, c6_engines] = engines();
    c6.failures.extend(c6_engines.failures);
    c6.detail = format!(
        "{} failures (criterion-5 multigraphs plus every unweighted auxiliary instance)",
        c6.failures.len()
    );
    let c7 = potentials();
    let c8 = golden();
    let c9 = scale();
    let mut all = true;
    for v in [c1, c2, c3, c4, c5, c6, c7, c8, c9] {
        all &= v.print();
    }
    if all { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
