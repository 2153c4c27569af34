//! Acceptance suite. Runs every criterion over the fixed corpus and prints one
//! PASS/FAIL line per criterion; exits nonzero if any criterion fails.

mod common;

use std::process::Command;
use std::time::{Duration, Instant};

use chromakac::chromatic::{
    acyclic_orientation_count, chromatic_interval, coxeter_class_count, interpolated, q_kostant_at_beta, Method,
};
use chromakac::limits::Limits;
use chromakac::multiplicity::path_sums;
use chromakac::{generate_graph, BondLattice, Family, Graph, MultTable, Polynomial};
use num_bigint::BigInt;
use num_traits::One;

use common::{corpus, CorpusGraph};

type Outcome = Result<String, String>;

fn lim() -> Limits {
    Limits::default()
}

fn lattice(g: &Graph) -> BondLattice {
    BondLattice::enumerate(g, &lim()).unwrap()
}

fn gen(f: Family, n: usize) -> Graph {
    generate_graph(f, n, None, None).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// 1. All seven chromatic routes agree exactly on every corpus graph.
fn five_way_exactness(corpus: &[CorpusGraph]) -> Outcome {
    let start = Instant::now();
    for c in corpus {
        let lat = lattice(&c.graph);
        let reference = Method::Interpolate.run(&c.graph, &lim()).map_err(|e| e.to_string())?;
        for m in Method::CHROMATIC {
            let p = m.run_with(&c.graph, Some(&lat), &lim()).map_err(|e| format!("{}: {m}: {e}", c.name))?;
            ensure(p == reference, || format!("{}: {m} gave {p}, interpolation gave {reference}", c.name))?;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(30), || format!("took {elapsed:?}, budget 30 s"))?;
    Ok(format!("{} graphs x 7 routes identical in {:.2?}", corpus.len(), elapsed))
}

/// 2. Interval restriction equals the interpolation oracle on `G(Σ)`.
fn interval_restriction(corpus: &[CorpusGraph]) -> Outcome {
    let mut checked = 0;
    for c in corpus.iter().filter(|c| c.graph.order() <= 5) {
        let lat = lattice(&c.graph);
        for sigma in lat.elements() {
            let lhs = chromatic_interval(&c.graph, &lat, sigma).map_err(|e| e.to_string())?;
            let rhs = interpolated(&c.graph.restrict_to_blocks(sigma.blocks()), &lim()).map_err(|e| e.to_string())?;
            ensure(lhs == rhs, || format!("{}: Σ = {sigma}: {lhs} vs {rhs}", c.name))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} intervals on graphs with l <= 5"))
}

/// 3. `μ(0̂, π) = (-1)^{l-|π|} mult π`.
fn mobius_bridge(corpus: &[CorpusGraph]) -> Outcome {
    let mut checked = 0;
    for c in corpus {
        let lat = lattice(&c.graph);
        let table = MultTable::new(&c.graph);
        let l = c.graph.order();
        for (e, mu) in lat.elements().iter().zip(lat.mobius()) {
            let m = table.mult_partition(e);
            let expected = if (l - e.len()) % 2 == 1 { -m } else { m };
            ensure(mu == expected, || format!("{}: π = {e}: μ = {mu}, signed mult = {expected}", c.name))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} lattice elements"))
}

/// 4. Path sums are integers equal to `mult π`.
fn path_sum_integrality(corpus: &[CorpusGraph]) -> Outcome {
    let mut checked = 0;
    for c in corpus {
        let lat = lattice(&c.graph);
        let table = MultTable::new(&c.graph);
        for (e, f) in lat.elements().iter().zip(path_sums(&lat, &c.graph)) {
            ensure(f.is_integer(), || format!("{}: π = {e}: path sum {f} is fractional", c.name))?;
            ensure(f.to_integer() == table.mult_partition(e), || format!("{}: π = {e}: {f} != mult π", c.name))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} lattice elements, all integral"))
}

/// 5. `K(β(Π); q) = (-1)^l P(G, -q)`.
fn kostant_sign_flip(corpus: &[CorpusGraph]) -> Outcome {
    for c in corpus {
        let k = q_kostant_at_beta(&c.graph, &lim()).map_err(|e| e.to_string())?;
        let p = interpolated(&c.graph, &lim()).map_err(|e| e.to_string())?;
        let flipped = p.sign_flip(c.graph.order());
        ensure(k == flipped, || format!("{}: K = {k}, flipped P = {flipped}", c.name))?;
        ensure(k.has_nonnegative_coeffs(), || format!("{}: K has a negative coefficient", c.name))?;
    }
    Ok(format!("{} graphs", corpus.len()))
}

fn p_tilde(g: &Graph) -> Result<Polynomial, String> {
    Ok(interpolated(g, &lim()).map_err(|e| e.to_string())?.sign_flip(g.order()))
}

/// 6. Acyclic orientations counted by brute force equal `P̃(G, 1)`.
fn acyclic_orientations(corpus: &[CorpusGraph]) -> Outcome {
    let spot = [(gen(Family::Complete, 3), 6u64), (gen(Family::Path, 3), 4)];
    for (g, expected) in &spot {
        let got = acyclic_orientation_count(g, &lim()).map_err(|e| e.to_string())?;
        ensure(got == *expected, || format!("spot value {g:?}: {got} != {expected}"))?;
    }
    let mut checked = 0;
    for c in corpus.iter().filter(|c| c.graph.num_edges() <= 20) {
        let count = acyclic_orientation_count(&c.graph, &lim()).map_err(|e| e.to_string())?;
        let at_one = p_tilde(&c.graph)?.eval(&BigInt::one());
        ensure(BigInt::from(count) == at_one, || format!("{}: {count} orientations, P̃(1) = {at_one}", c.name))?;
        checked += 1;
    }
    Ok(format!("{checked} graphs with <= 20 edges; K3 -> 6, path 3 -> 4"))
}

/// 7. For connected graphs, `mult β(Π)` is the linear coefficient of `P̃`.
fn coxeter_classes(corpus: &[CorpusGraph]) -> Outcome {
    let mut spot: Vec<(Graph, i64)> = vec![(gen(Family::Complete, 3), 2), (gen(Family::Complete, 4), 6)];
    spot.extend((1..=7).map(|n| (gen(Family::Path, n), 1)));
    for (g, expected) in &spot {
        let linear = p_tilde(g)?.coeff(1);
        let mult = coxeter_class_count(g).map_err(|e| e.to_string())?;
        ensure(linear == BigInt::from(*expected) && mult == linear, || {
            format!("spot value {g:?}: mult {mult}, linear coefficient {linear}, expected {expected}")
        })?;
    }
    let mut checked = 0;
    for c in corpus.iter().filter(|c| c.graph.is_connected_graph()) {
        let mult = MultTable::new(&c.graph).mult_root(c.graph.vertices());
        let linear = p_tilde(&c.graph)?.coeff(1);
        ensure(mult == linear, || format!("{}: mult β(Π) = {mult}, coefficient = {linear}", c.name))?;
        checked += 1;
    }
    Ok(format!("{checked} connected graphs; K3 -> 2, K4 -> 6, paths -> 1"))
}

/// 8. Closed forms for trees, cycles and complete graphs.
fn closed_forms() -> Outcome {
    let q = Polynomial::monomial(1);
    let q1 = Polynomial::linear_root(1);
    let mut cases: Vec<(String, Graph, Polynomial)> = Vec::new();
    for n in 1..=7 {
        let tree = &q * &q1.pow(n as u32 - 1);
        cases.push((format!("path:{n}"), gen(Family::Path, n), tree.clone()));
        if n >= 2 {
            cases.push((format!("star:{n}"), gen(Family::Star, n), tree));
        }
        if n >= 3 {
            let sign = Polynomial::constant(if n % 2 == 0 { 1 } else { -1 });
            cases.push((format!("cycle:{n}"), gen(Family::Cycle, n), &q1.pow(n as u32) + &(&sign * &q1)));
        }
        if n <= 6 {
            let falling = (0..n as i64).fold(Polynomial::constant(1), |acc, k| &acc * &Polynomial::linear_root(k));
            cases.push((format!("complete:{n}"), gen(Family::Complete, n), falling));
        }
    }
    for (name, g, formula) in &cases {
        let oracle = interpolated(g, &lim()).map_err(|e| e.to_string())?;
        ensure(&oracle == formula, || format!("{name}: closed form {formula} disagrees with interpolation {oracle}"))?;
        for m in [Method::BondLattice, Method::PathSum, Method::Matrix] {
            let p = m.run(g, &lim()).map_err(|e| e.to_string())?;
            ensure(&p == formula, || format!("{name}: {m} gave {p}, closed form {formula}"))?;
        }
    }
    Ok(format!("{} closed forms", cases.len()))
}

/// 9. Bond lattice of `K_n` has `B(n)` elements.
fn bell_numbers() -> Outcome {
    // B(n+1) = Σ_k C(n, k) B(k)
    let mut bell = vec![1u64];
    for n in 0..5usize {
        let mut binom = 1u64;
        let mut next = 0;
        for (k, b) in bell.iter().enumerate() {
            next += binom * b;
            binom = binom * (n - k) as u64 / (k as u64 + 1);
        }
        bell.push(next);
    }
    ensure(bell[3..=5] == [5, 15, 52], || format!("Bell recurrence gave {:?}", &bell[3..=5]))?;
    for n in 3..=5 {
        let size = lattice(&gen(Family::Complete, n)).len() as u64;
        ensure(size == bell[n], || format!("K{n}: {size} elements, B({n}) = {}", bell[n]))?;
    }
    Ok("K3, K4, K5 -> 5, 15, 52".into())
}

fn run_cli(args: &[&str]) -> Result<(i32, Vec<u8>), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_chromakac")).args(args).output().map_err(|e| e.to_string())?;
    Ok((out.status.code().unwrap_or(-1), out.stdout))
}

/// 10. `verify` exits 0 everywhere; JSON output is byte-identical across runs.
fn cli_contract(corpus: &[CorpusGraph]) -> Outcome {
    let dir = std::env::temp_dir().join(format!("chromakac-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    for c in corpus {
        let path = dir.join("graph.txt");
        let args: Vec<String> = match &c.gen {
            Some(spec) => vec!["verify".into(), "--gen".into(), spec.clone()],
            None => {
                std::fs::write(&path, c.graph.to_edge_list()).map_err(|e| e.to_string())?;
                vec!["verify".into(), "--file".into(), path.display().to_string()]
            }
        };
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let (code, stdout) = run_cli(&args)?;
        ensure(code == 0, || format!("{}: verify exited {code}:\n{}", c.name, String::from_utf8_lossy(&stdout)))?;
    }
    let _ = std::fs::remove_dir_all(&dir);

    for args in [
        ["verify", "--gen", "random:6:p=0.5:seed=42", "--format", "json"].as_slice(),
        &["lattice", "--gen", "random:7:p=0.5:seed=7"],
        &["mult", "--gen", "random:7:p=0.8:seed=3"],
        &["compute", "--gen", "random:7:p=0.3:seed=9", "--method", "matrix", "--format", "json"],
    ] {
        let (c1, a) = run_cli(args)?;
        let (c2, b) = run_cli(args)?;
        ensure(c1 == 0 && c2 == 0 && a == b, || format!("{args:?}: outputs differ between runs"))?;
    }
    Ok(format!("verify exit 0 on {} graphs; 4 commands byte-identical across runs", corpus.len()))
}

fn main() {
    let corpus = corpus();
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome>)> = vec![
        ("1 seven-route exactness", Box::new(|| five_way_exactness(&corpus))),
        ("2 interval restriction", Box::new(|| interval_restriction(&corpus))),
        ("3 Mobius = signed multiplicity", Box::new(|| mobius_bridge(&corpus))),
        ("4 path-sum integrality", Box::new(|| path_sum_integrality(&corpus))),
        ("5 q-Kostant sign flip", Box::new(|| kostant_sign_flip(&corpus))),
        ("6 acyclic orientations", Box::new(|| acyclic_orientations(&corpus))),
        ("7 Coxeter classes", Box::new(|| coxeter_classes(&corpus))),
        ("8 closed forms", Box::new(closed_forms)),
        ("9 Bell lattice sizes", Box::new(bell_numbers)),
        ("10 CLI contract", Box::new(|| cli_contract(&corpus))),
    ];

    let mut failures = 0;
    for (name, check) in &criteria {
        match check() {
            Ok(detail) => println!("[PASS] criterion {name}: {detail}"),
            Err(why) => {
                failures += 1;
                println!("[FAIL] criterion {name}: {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failures} failed", criteria.len() - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}
