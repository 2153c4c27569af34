//! Cross-verification runs and the JSON documents emitted by the command
//! line: the verification report, the lattice dump and the multiplicity
//! table.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;
use serde_json::{Map, Value};

use crate::chromatic::{
    acyclic_orientation_count, bond_lattice_sum, coloring_count, coxeter_class_count, deletion_contraction,
    Method, WeightMatrix,
};
use crate::error::Result;
use crate::graph::{connected_subsets, Graph};
use crate::lattice::BondLattice;
use crate::limits::Limits;
use crate::multiplicity::{path_sums, MultTable};
use crate::poly::{Polynomial, RationalPoly};

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct GraphSummary {
    pub vertices: usize,
    pub edges: usize,
    pub connected: bool,
    /// The graph in edge-list format, parseable back into the same graph.
    pub edge_list: String,
}

impl GraphSummary {
    pub fn of(g: &Graph) -> Self {
        GraphSummary {
            vertices: g.order(),
            edges: g.num_edges(),
            connected: g.is_connected_graph(),
            edge_list: g.to_edge_list(),
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct MethodResult {
    pub method: String,
    pub polynomial: Polynomial,
    pub rendered: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<f64>,
}

/// First disagreement between two routes.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Disagreement {
    pub left: String,
    pub right: String,
    pub degree: usize,
    pub left_coeff: String,
    pub right_coeff: String,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub skipped: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, passed: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), passed, skipped: false, detail: detail.into() }
    }

    fn skipped(name: &str, detail: impl Into<String>) -> Self {
        Check { name: name.into(), passed: true, skipped: true, detail: detail.into() }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct RunReport {
    pub graph: GraphSummary,
    pub lattice_size: usize,
    pub methods: Vec<MethodResult>,
    pub agreement: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub disagreement: Option<Disagreement>,
    pub kostant: MethodResult,
    pub checks: Vec<Check>,
    pub passed: bool,
}

impl RunReport {
    /// Timing is wall-clock and therefore dropped from JSON unless asked for,
    /// so that repeated runs stay byte-identical.
    pub fn without_timings(mut self) -> Self {
        for m in self.methods.iter_mut().chain(std::iter::once(&mut self.kostant)) {
            m.millis = None;
        }
        self
    }

    pub fn first_failed_check(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn render_human(&self) -> String {
        let mut out = String::new();
        let g = &self.graph;
        out.push_str(&format!(
            "graph: {} vertices, {} edges, {}\nbond lattice: {} elements\n",
            g.vertices,
            g.edges,
            if g.connected { "connected" } else { "disconnected" },
            self.lattice_size
        ));
        for m in self.methods.iter().chain(std::iter::once(&self.kostant)) {
            let t = m.millis.map(|ms| format!("  [{ms:.3} ms]")).unwrap_or_default();
            out.push_str(&format!("{:>24}: {}{}\n", m.method, m.rendered, t));
        }
        out.push_str(&format!("agreement: {}\n", self.agreement));
        if let Some(d) = &self.disagreement {
            out.push_str(&format!(
                "  first difference: {} vs {} at q^{}: {} != {}\n",
                d.left, d.right, d.degree, d.left_coeff, d.right_coeff
            ));
        }
        for c in &self.checks {
            let status = if c.skipped {
                "skip"
            } else if c.passed {
                "ok"
            } else {
                "FAIL"
            };
            out.push_str(&format!("[{status:>4}] {}: {}\n", c.name, c.detail));
        }
        out.push_str(&format!("verdict: {}\n", if self.passed { "PASS" } else { "FAIL" }));
        out
    }
}

fn first_difference(a: &Polynomial, b: &Polynomial) -> Option<usize> {
    let n = a.coeffs().len().max(b.coeffs().len());
    (0..n).find(|&k| a.coeff(k) != b.coeff(k))
}

fn run_method(m: Method, g: &Graph, lat: &BondLattice, limits: &Limits) -> (Result<Polynomial>, Duration) {
    let start = Instant::now();
    let out = m.run_with(g, Some(lat), limits);
    (out, start.elapsed())
}

/// Runs every route and every corollary check on `g`. Routes run on separate
/// threads; the report is assembled in a fixed order.
pub fn verify(g: &Graph, limits: &Limits) -> Result<RunReport> {
    let lat = BondLattice::enumerate(g, limits)?;
    let all: Vec<Method> = Method::CHROMATIC.into_iter().chain([Method::Kostant]).collect();

    let lat_ref = &lat;
    let outcomes: Vec<(Result<Polynomial>, Duration)> = std::thread::scope(|s| {
        let handles: Vec<_> = all.iter().map(|&m| s.spawn(move || run_method(m, g, lat_ref, limits))).collect();
        handles.into_iter().map(|h| h.join().expect("route thread panicked")).collect()
    });

    let mut results = Vec::with_capacity(all.len());
    for (&m, (poly, elapsed)) in all.iter().zip(outcomes) {
        let poly = poly?;
        results.push(MethodResult {
            method: m.name().to_string(),
            rendered: poly.to_string(),
            polynomial: poly,
            millis: Some(elapsed.as_secs_f64() * 1e3),
        });
    }
    let kostant = results.pop().expect("kostant result");

    let mut disagreement = None;
    'outer: for (i, a) in results.iter().enumerate() {
        for b in &results[i + 1..] {
            if let Some(k) = first_difference(&a.polynomial, &b.polynomial) {
                disagreement = Some(Disagreement {
                    left: a.method.clone(),
                    right: b.method.clone(),
                    degree: k,
                    left_coeff: a.polynomial.coeff(k).to_string(),
                    right_coeff: b.polynomial.coeff(k).to_string(),
                });
                break 'outer;
            }
        }
    }
    let agreement = disagreement.is_none();
    let chromatic = results[0].polynomial.clone();
    let checks = corollary_checks(g, &lat, &chromatic, &kostant.polynomial, limits)?;
    let passed = agreement && checks.iter().all(|c| c.passed);

    Ok(RunReport {
        graph: GraphSummary::of(g),
        lattice_size: lat.len(),
        methods: results,
        agreement,
        disagreement,
        kostant,
        checks,
        passed,
    })
}

/// Above this lattice size the per-interval check is skipped in `verify`.
pub const INTERVAL_CHECK_MAX_LATTICE: usize = 5_000;

fn corollary_checks(
    g: &Graph,
    lat: &BondLattice,
    chromatic: &Polynomial,
    kostant: &Polynomial,
    limits: &Limits,
) -> Result<Vec<Check>> {
    let l = g.order();
    let table = MultTable::new(g);
    let mut checks = Vec::new();

    let flipped = chromatic.sign_flip(l);
    checks.push(Check::new(
        "shape",
        chromatic.is_monic()
            && chromatic.degree() == Some(l)
            && chromatic.coeff(0).is_zero()
            && chromatic.alternates_in_sign()
            && flipped.has_nonnegative_coeffs(),
        "monic, degree l, zero constant term, alternating signs",
    ));

    let sums = path_sums(lat, g);
    let integral = sums.iter().all(|f| f.is_integer());
    let matches = lat.elements().iter().zip(&sums).all(|(e, f)| f.is_integer() && f.to_integer() == table.mult_partition(e));
    checks.push(Check::new(
        "path-sum-integrality",
        integral && matches,
        format!("path sums integral and equal to mult π on all {} elements", lat.len()),
    ));

    let mobius = lat.mobius();
    let bridge = lat.elements().iter().zip(&mobius).all(|(e, mu)| {
        let m = table.mult_partition(e);
        let signed = if (l - e.len()) % 2 == 1 { -m } else { m };
        &signed == mu
    });
    checks.push(Check::new("mobius-multiplicity", bridge, "μ(0̂, π) = (-1)^{l-|π|} mult π for every π"));

    checks.push(Check::new(
        "kostant-sign-flip",
        kostant == &flipped,
        format!("K(β(Π); q) = {kostant}, (-1)^l P(G, -q) = {flipped}"),
    ));

    if g.num_edges() <= limits.max_orientation_edges {
        let count = acyclic_orientation_count(g, limits)?;
        let at_one = flipped.eval(&BigInt::one());
        checks.push(Check::new(
            "acyclic-orientations",
            BigInt::from(count) == at_one,
            format!("{count} acyclic orientations, P̃(1) = {at_one}"),
        ));
    } else {
        checks.push(Check::skipped("acyclic-orientations", "too many edges for brute force"));
    }

    if g.is_connected_graph() {
        let mult = coxeter_class_count(g)?;
        let linear = flipped.coeff(1);
        checks.push(Check::new(
            "coxeter-classes",
            mult == linear,
            format!("mult β(Π) = {mult}, coefficient of q in P̃ = {linear}"),
        ));
    } else {
        checks.push(Check::skipped("coxeter-classes", "graph is disconnected"));
    }

    let w = WeightMatrix::new(g, lat);
    let diag = w.diagonal();
    let diag_ok = diag.split_last().is_some_and(|(last, rest)| *last == RationalPoly::q() && rest.iter().all(RationalPoly::is_zero));
    checks.push(Check::new(
        "weight-matrix-structure",
        w.is_upper_triangular() && diag_ok,
        format!("{}x{} upper triangular, diagonal (0, ..., 0, q)", w.order(), w.order()),
    ));

    let max_q = 5u64.min(limits.max_colors);
    if l <= limits.max_coloring_vertices {
        let mut ok = true;
        for q in 0..=max_q {
            let count = coloring_count(g, q, limits)?;
            ok &= chromatic.eval(&BigInt::from(q)) == BigInt::from(count);
        }
        checks.push(Check::new("coloring-evaluation", ok, format!("P(G, q) = proper colourings for q = 0..={max_q}")));
    } else {
        checks.push(Check::skipped("coloring-evaluation", "too many vertices for brute-force colouring"));
    }

    let components = g.components();
    let mut product = Polynomial::constant(1);
    for c in &components {
        let (sub, _) = g.induced(*c)?;
        product = &product * &deletion_contraction(&sub, limits)?;
    }
    checks.push(Check::new(
        "component-product",
        &product == chromatic,
        format!("product over {} component(s)", components.len()),
    ));

    if lat.len() <= INTERVAL_CHECK_MAX_LATTICE {
        let mut ok = true;
        for sigma in lat.elements() {
            let lhs = bond_lattice_sum(g, &lat.interval_below(sigma)?);
            let rhs = deletion_contraction(&g.restrict_to_blocks(sigma.blocks()), limits)?;
            ok &= lhs == rhs;
        }
        checks.push(Check::new("interval-restriction", ok, "P(G(Σ), q) from [0̂, Σ] for every Σ"));
    } else {
        checks.push(Check::skipped("interval-restriction", "lattice too large"));
    }

    Ok(checks)
}

/// Integers that fit in `i64` become JSON numbers; larger ones become
/// decimal strings.
fn json_integer(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => Value::from(v),
        None => Value::String(n.to_string()),
    }
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct LatticeElementJson {
    pub blocks: Vec<Vec<usize>>,
    pub rank: usize,
    pub mobius: Value,
    pub covers: Vec<usize>,
}

/// The lattice in extension order with ranks, Möbius values and cover
/// targets (as indices into the same array).
pub fn lattice_json(lat: &BondLattice) -> Vec<LatticeElementJson> {
    let mobius = lat.mobius();
    lat.elements()
        .iter()
        .enumerate()
        .map(|(i, e)| LatticeElementJson {
            blocks: e.to_vertex_lists(),
            rank: lat.rank(i),
            mobius: json_integer(&mobius[i]),
            covers: lat.covers(i).iter().map(|c| c.target).collect(),
        })
        .collect()
}

/// Multiplicity of every connected subset, keyed by its sorted vertex list
/// written as `"[0,1,2]"`, ordered by size and then lexicographically. Adds
/// `beta_Pi_mult` for a connected graph.
pub fn mult_json(g: &Graph) -> Map<String, Value> {
    let table = MultTable::new(g);
    let mut sets = connected_subsets(g);
    sets.sort_by_key(|s| (s.len(), s.to_vec()));
    let mut out = Map::new();
    for s in sets {
        let key = format!("[{}]", s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","));
        out.insert(key, json_integer(&table.mult_root(s)));
    }
    if g.is_connected_graph() {
        out.insert("beta_Pi_mult".into(), json_integer(&table.mult_root(g.vertices())));
    }
    out
}
