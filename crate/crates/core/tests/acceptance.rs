//! Acceptance suite: one line per criterion.
//!
//! A criterion whose check is known to refute the stated claim prints `FAIL`
//! with its witness. The binary exits nonzero only when some outcome differs
//! from the expected one (an unexpected failure, or a known refutation that
//! no longer reproduces).

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sierpinski_eip::eip::{
    eta_inverse, format_rational, lambda, lex_profile_direct, lex_profile_table, parse_rational,
    profile_closed_form, recursive_table_m3, Lambda,
};
use sierpinski_eip::graphs::{quotient_graph, Graph};
use sierpinski_eip::oracle::{
    enumerate_cases, exact_profile, steiner_suite, subadditivity_suite, tally_theta1_half_range,
    verify_conjecture, verify_connectivity_bound, verify_gasket_bound, verify_nested, HalfRangeDomain,
    SearchBudget, Status,
};
use sierpinski_eip::posets::{component_count_formula, StabOrder};
use sierpinski_eip::steiner::{compress, product_compress, product_lower_bound};
use sierpinski_eip::{DecoratedContext, Result, Sierpinski, VertexSet};

struct Outcome {
    pass: bool,
    /// Whether a pass is the expected result.
    expect_pass: bool,
    detail: String,
}

impl Outcome {
    fn check(ok: bool, detail: impl Into<String>) -> Self {
        Outcome { pass: ok, expect_pass: true, detail: detail.into() }
    }
}

fn within(limit: Duration, start: Instant, what: &str, issues: &mut Vec<String>) {
    let took = start.elapsed();
    if took > limit {
        issues.push(format!("{what} took {took:?}, limit {limit:?}"));
    }
}

fn budget() -> SearchBudget {
    SearchBudget::default().with_width(4)
}

fn structure() -> Result<Outcome> {
    let start = Instant::now();
    let mut issues = Vec::new();
    for n in 1..=4 {
        for m in 2..=4u64 {
            let g = Sierpinski::new(n, m as u32)?;
            let gr = g.to_graph()?;
            let (v, e) = (gr.vertex_count() as u64, gr.edge_count() as u64);
            let (ve, ee) = (m.pow(n), (m.pow(n + 1) - m) / 2);
            if (v, e) != (ve, ee) || g.counts()? != (ve, ee) {
                issues.push(format!("S({n},{m}): |V|={v} |E|={e}, expected {ve}, {ee}"));
            }
        }
    }
    for n in 1..=10 {
        let gr = Sierpinski::new(n, 2)?.to_graph()?;
        if gr.vertex_count() != 1 << n || !gr.is_path_in_index_order() {
            issues.push(format!("S({n},2) is not a path on 2^{n} vertices"));
        }
    }
    within(Duration::from_secs(1), start, "structure", &mut issues);
    Ok(Outcome::check(
        issues.is_empty(),
        if issues.is_empty() { "counts exact for n,m<=4; S(n,2) paths for n<=10".into() } else { issues.join("; ") },
    ))
}

fn profile_agreement() -> Result<Outcome> {
    let start = Instant::now();
    let mut issues = Vec::new();
    let mut checked = 0;
    for n in 1..=5 {
        let direct = lex_profile_table(n, 3)?;
        let rec = recursive_table_m3(n)?;
        for ell in 0..direct.len() as u64 {
            let d = lex_profile_direct(n, 3, ell)?;
            let c = profile_closed_form(n, 3, ell)?;
            let r = rec.value(ell);
            checked += 1;
            if d != r || d != c || d != direct.value(ell) {
                issues.push(format!("n={n} l={ell}: direct {d}, recursion {r}, closed form {c}"));
            }
        }
    }
    within(Duration::from_secs(10), start, "profile agreement", &mut issues);
    Ok(Outcome::check(
        issues.is_empty(),
        if issues.is_empty() { format!("{checked} values agree, n<=5") } else { issues.join("; ") },
    ))
}

fn conjecture_plain() -> Result<Outcome> {
    let mut issues = Vec::new();
    let mut parts = Vec::new();
    for (n, m) in [(2, 3), (2, 4), (3, 3)] {
        let start = Instant::now();
        let r = verify_conjecture(n, m, 0, m, &budget())?;
        parts.push(format!("S({n},{m}) {:.2?}", start.elapsed()));
        if !r.is_verified() {
            issues.push(format!("S({n},{m}): {:?} {:?}", r.status, r.witness));
        }
        if (n, m) == (3, 3) {
            within(Duration::from_secs(300), start, "S(3,3) sweep", &mut issues);
        }
    }
    Ok(Outcome::check(
        issues.is_empty(),
        if issues.is_empty() { format!("Lex optimal for every size: {}", parts.join(", ")) } else { issues.join("; ") },
    ))
}

fn conjecture_decorated() -> Result<Outcome> {
    let mut issues = Vec::new();
    let mut count = 0;
    for (n, m, force_ideals) in [(2, 3, false), (2, 4, false), (3, 3, true)] {
        let b = if force_ideals { SearchBudget::new(1 << 10, 1 << 22, 4)? } else { budget() };
        for ctx in DecoratedContext::all(m) {
            let r = verify_conjecture(n, m, ctx.s(), ctx.t(), &b)?;
            count += 1;
            if !r.is_verified() {
                issues.push(format!("S({n},{m}) {ctx}: {:?} {:?}", r.status, r.witness));
            }
        }
    }
    Ok(Outcome::check(
        issues.is_empty(),
        if issues.is_empty() {
            format!("{count} decorated instances verified (S(3,3) by ideal-restricted search)")
        } else {
            issues.join("; ")
        },
    ))
}

fn nested() -> Result<Outcome> {
    let b = budget();
    let sg2 = quotient_graph(2, 3)?;
    let sg3 = quotient_graph(3, 3)?;
    let r2 = verify_nested("SG2", sg2.graph(), true, &b)?;
    let r3 = verify_nested("SG3", sg3.graph(), false, &b)?;
    // The chain lists vertices in insertion order; with the empty set it has
    // one more set than vertices.
    let chain_sets = sierpinski_eip::oracle::nested_solutions_exists(sg2.graph(), &b)?
        .chain
        .map_or(0, |c| c.len() + 1);
    let ok = r2.is_verified() && r3.is_verified() && chain_sets == 7;
    Ok(Outcome::check(
        ok,
        format!("SG2 nested (chain of {chain_sets} sets); SG3 not nested: {}", r3.detail),
    ))
}

fn bounds() -> Result<Outcome> {
    let b = budget();
    let mut issues = Vec::new();
    let mut solved = Vec::new();
    for (n, m) in [(1, 3), (2, 3), (3, 3), (1, 4), (2, 4), (1, 5), (2, 5), (1, 2), (2, 2), (3, 2), (4, 2)] {
        let r = verify_connectivity_bound(n, m, &b)?;
        solved.push(format!("S({n},{m})"));
        if !r.is_verified() {
            issues.push(format!("S({n},{m}): {:?}", r.witness));
        }
    }
    // The lower bound 2 holds on SG_2 and SG_3, but it is attained only at
    // sizes 1 and |V| - 1: a sub-gasket shares its three corners with the
    // rest of the graph, and each shared corner has degree 4.
    let mut gasket = Vec::new();
    let mut gasket_as_expected = true;
    for (n, attained) in [(2, "{1, 5}"), (3, "{1, 14}")] {
        let r = verify_gasket_bound(n, &b)?;
        let w = r.witness.clone().unwrap_or_default();
        gasket_as_expected &= r.status == Status::Counterexample && w.detail.starts_with(&format!("equality set {attained}"));
        gasket.push(format!("SG{n} {:?}: {}", r.status, w.detail));
    }
    let detail = format!(
        "m-1 bound exact on {}; {}; gasket bound >= 2 holds but sharpness fails: {}",
        solved.join(","),
        if issues.is_empty() { "no issues".into() } else { issues.join("; ") },
        gasket.join("; ")
    );
    Ok(Outcome {
        pass: false,
        expect_pass: !(issues.is_empty() && gasket_as_expected),
        detail,
    })
}

fn subadditivity() -> Result<Outcome> {
    let start = Instant::now();
    let reports = subadditivity_suite(5)?;
    let mut lines = Vec::new();
    let mut unexpected = Vec::new();
    for r in &reports {
        let known_refutation = r.claim == "theta1-half-range";
        lines.push(format!("{} {:?} ({} cases)", r.claim, r.status, r.checked));
        if r.is_verified() == known_refutation {
            unexpected.push(r.claim.clone());
        }
    }
    let stated = tally_theta1_half_range(5, HalfRangeDomain::AsStated)?;
    let first = stated.first.as_ref().map(|w| w.detail.clone()).unwrap_or_default();
    let mut timing = Vec::new();
    within(Duration::from_secs(30), start, "subadditivity", &mut timing);
    unexpected.extend(timing);
    let frozen = stated.checked == FROZEN_HALF_RANGE.0 && stated.violations == FROZEN_HALF_RANGE.1;
    if !frozen {
        unexpected.push(format!("half-range tally {}/{}", stated.violations, stated.checked));
    }
    Ok(Outcome {
        pass: false,
        expect_pass: !unexpected.is_empty(),
        detail: format!(
            "{}; half-range identity as stated: {} of {} cases fail, first {first}",
            lines.join(", "),
            stated.violations,
            stated.checked
        ),
    })
}

/// `(cases, violations)` of the half-range identity as stated, `n <= 5`.
const FROZEN_HALF_RANGE: (u64, u64) = (281, 39);

fn steiner() -> Result<Outcome> {
    let mut unexpected = Vec::new();
    let mut lines = Vec::new();
    // Non-monotone compression.
    for n in [2u32, 3] {
        let g = Sierpinski::new(n, 3)?;
        let ctx = DecoratedContext::plain(3);
        let ones = format!("0{}", "1".repeat(n as usize - 1));
        let zeros = format!("1{}", "0".repeat(n as usize - 1));
        let small = VertexSet::parse(&ones, g.space())?;
        let big = VertexSet::parse(&format!("{ones},{zeros}"), g.space())?;
        let a = compress(&g, &small, 0, &ctx)?;
        let b = compress(&g, &big, 0, &ctx)?;
        let ok = a.words() == vec!["0".repeat(n as usize)] && b == big && !a.is_subset(&b);
        if !ok {
            unexpected.push(format!("non-monotone compression on S({n},3): {a} vs {b}"));
        }
    }
    lines.push("compression non-monotone: {01} -> {00}, {01,10} fixed".to_string());
    let known: &[(u32, u32, &str, u64)] = &[
        (2, 3, "stabilize-keeps-h-compressed", 412),
        (2, 4, "stabilize-keeps-h-compressed", 172_736),
        (3, 2, "compress-round-bound", 42),
    ];
    for (n, m) in [(2, 3), (2, 4), (3, 2)] {
        let suite = steiner_suite(n, m, &budget())?;
        for (name, t) in suite.entries() {
            let expected = known.iter().find(|k| (k.0, k.1, k.2) == (n, m, name)).map_or(0, |k| k.3);
            if t.violations != expected {
                unexpected.push(format!("S({n},{m}) {name}: {} violations, expected {expected}", t.violations));
            }
            if t.violations > 0 {
                let w = t.first.as_ref().map(|w| format!("{:?} {}", w.set.clone().unwrap_or_default(), w.detail));
                lines.push(format!("S({n},{m}) {name}: {} of {} fail, e.g. {}", t.violations, t.checked, w.unwrap_or_default()));
            }
        }
    }
    lines.push("all other operation checks hold on S(2,3), S(2,4), S(3,2)".into());
    // Beyond the two-digit graphs: sampled sets of S(3,3).
    let g = Sierpinski::new(3, 3)?;
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    let sets: Vec<VertexSet> = (0..SAMPLED_S33)
        .map(|_| {
            let p: f64 = rng.gen();
            VertexSet::from_packed(g.space(), (0..27).filter(|_| rng.gen_bool(p)))
        })
        .collect::<Result<_>>()?;
    let audit = sierpinski_eip::oracle::audit_compression(&g, &sets, &budget())?;
    let counts: Vec<u64> = audit.entries().iter().map(|(_, t)| t.violations).collect();
    if counts != FROZEN_S33_AUDIT {
        unexpected.push(format!("S(3,3) sampled compression audit {counts:?}"));
    }
    for (name, t) in audit.entries() {
        if t.violations > 0 {
            let w = t.first.as_ref().map(|w| format!("{:?} {}", w.set.clone().unwrap_or_default(), w.detail));
            lines.push(format!("S(3,3) sampled {name}: {} of {} fail, e.g. {}", t.violations, t.checked, w.unwrap_or_default()));
        }
    }
    lines.push(format!("S(3,3) sampled: at most {} cycles, rho never rises, fixed points compressed", audit.max_cycles));
    Ok(Outcome {
        pass: false,
        expect_pass: !unexpected.is_empty(),
        detail: if unexpected.is_empty() { lines.join("; ") } else { unexpected.join("; ") },
    })
}

const SAMPLED_S33: usize = 2000;

/// Violations of the five compression audits on the sampled `S(3,3)` sets.
const FROZEN_S33_AUDIT: [u64; 5] = [338, 486, 2507, 0, 0];

fn posets_and_grids() -> Result<Outcome> {
    let mut issues = Vec::new();
    for n in 1..=6 {
        for m in 2..=5 {
            let o = StabOrder::build(n, m)?;
            let want = component_count_formula(n, m)?;
            if o.component_count() as u128 != want {
                issues.push(format!("S({n},{m}): {} components, formula {want}", o.component_count()));
            }
        }
    }
    let o3 = StabOrder::build(2, 3)?;
    let (p3, e3) = o3.down_set_poset(o3.space().parse("21")?)?;
    let o4 = StabOrder::build(2, 4)?;
    let (p4, _) = o4.down_set_poset(o4.space().parse("32")?)?;
    let (i3, i4) = (p3.count_ideals(1000)?, p4.count_ideals(1000)?);
    if (e3.len(), i3, i4) != (6, 9, 28) {
        issues.push(format!("component sizes {} / {i3} / {i4}", e3.len()));
    }
    let g3 = enumerate_cases(2, 3, &budget())?;
    let g4 = enumerate_cases(2, 4, &budget())?;
    if (g3.raw_cases, g4.raw_cases) != (90, 420) {
        issues.push(format!("case grids {} / {}", g3.raw_cases, g4.raw_cases));
    }
    Ok(Outcome::check(
        issues.is_empty(),
        format!(
            "component counts match for n<=6, m<=5; two-digit component 6 elements, 9 ideals (m=3), {i4} ideals (m=4); \
             grids {} and {} cases; m=3 up to duality {} classes ({} self-dual; the count 41 is not reproduced){}",
            g3.raw_cases,
            g4.raw_cases,
            g3.dual_classes,
            g3.self_dual,
            if issues.is_empty() { String::new() } else { format!("; {}", issues.join("; ")) }
        ),
    ))
}

fn case_sweep() -> Result<Outcome> {
    let g = enumerate_cases(2, 4, &budget())?;
    let witness = g.rows.iter().find_map(|r| r.witness.clone());
    let detail = match &witness {
        None => format!(
            "m=4: {} cases, {} populated, {} nontrivial, max Delta {:?}, no counterexample",
            g.raw_cases, g.populated, g.nontrivial, g.max_delta
        ),
        Some(w) => format!("m=4: {} counterexample cases, e.g. {w:?}", g.counterexamples),
    };
    // Either outcome is a reportable result; a silent empty sweep is not.
    Ok(Outcome::check(g.populated == g.raw_cases || witness.is_some(), detail))
}

fn continuous_limit() -> Result<Outcome> {
    let mut issues = Vec::new();
    for (a, want) in [("1/3", "1/2,0,1/2"), ("1/2", "0,1,0"), ("1/6", "1/2,1/2,0")] {
        let got: Vec<String> = eta_inverse(&parse_rational(a)?)?.iter().map(format_rational).collect();
        if got.join(",") != want {
            issues.push(format!("eta^-1({a}) = {}", got.join(",")));
        }
    }
    let mut checked = 0;
    for n in 1..=5u32 {
        let table = lex_profile_table(n, 3)?;
        for ell in 0..=3u64.pow(n) {
            let a = BigRational::new(BigInt::from(ell), BigInt::from(3u64.pow(n)));
            checked += 1;
            match lambda(&a)? {
                Lambda::Finite(v) if v == table.value(ell) => {}
                other => issues.push(format!("lambda({ell}/3^{n}) = {other:?}, profile {}", table.value(ell))),
            }
        }
    }
    Ok(Outcome::check(
        issues.is_empty(),
        if issues.is_empty() { format!("eta^-1 exact at 1/3, 1/2, 1/6; lambda matches {checked} profile values") } else { issues.join("; ") },
    ))
}

fn product_case(g: &Graph, h: &Graph, rng: &mut ChaCha8Rng) -> Result<Vec<String>> {
    let prod = g.cartesian_product(h)?;
    let gm = g.vertex_count();
    let g_profile = exact_profile(g, &budget())?.values;
    let eta: Vec<usize> = (0..gm).collect();
    let mut issues = Vec::new();
    for _ in 0..500 {
        let mut s = fixedbitset::FixedBitSet::with_capacity(prod.vertex_count());
        for v in 0..prod.vertex_count() {
            s.set(v, rng.gen_bool(0.5));
        }
        let c = product_compress(&s, g, h, &eta)?;
        let (before, after) = (prod.boundary(&s), prod.boundary(&c));
        let lb = product_lower_bound(&s, &g_profile, h)?;
        if c.count_ones(..) != s.count_ones(..) || after > before || lb > before {
            issues.push(format!("{s:?}: boundary {before} -> {after}, bound {lb}"));
        }
    }
    Ok(issues)
}

fn products() -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let k2 = Graph::complete(2);
    let k3 = Graph::complete(3);
    let mut issues = product_case(&k3, &k3, &mut rng)?;
    issues.extend(product_case(&k2, &k2.cartesian_product(&k2)?, &mut rng)?);
    Ok(Outcome::check(
        issues.is_empty(),
        if issues.is_empty() { "K3xK3 and K2xK2xK2: 500 sets each, no violation".into() } else { issues.join("; ") },
    ))
}

type Criterion = fn() -> Result<Outcome>;

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 12] = [
        ("structure", structure),
        ("profile agreement", profile_agreement),
        ("Lex optimality", conjecture_plain),
        ("decorated Lex optimality", conjecture_decorated),
        ("nested solutions", nested),
        ("connectivity and gasket bounds", bounds),
        ("subadditivity", subadditivity),
        ("operation suites", steiner),
        ("poset counts", posets_and_grids),
        ("m=4 case sweep", case_sweep),
        ("continuous limit", continuous_limit),
        ("product compression", products),
    ];
    let mut unexpected = 0;
    let mut passed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (mark, note, detail) = match run() {
            Ok(o) => {
                if o.pass {
                    passed += 1;
                }
                let note = if o.pass == o.expect_pass {
                    if o.pass { "" } else { " [expected]" }
                } else if o.expect_pass {
                    unexpected += 1;
                    " [unexpected]"
                } else {
                    unexpected += 1;
                    " [known refutation did not reproduce]"
                };
                (if o.pass { "PASS" } else { "FAIL" }, note, o.detail)
            }
            Err(e) => {
                unexpected += 1;
                ("FAIL", " [error]", e.to_string())
            }
        };
        println!("criterion {:>2} {mark}{note} {name} ({:.2?}): {detail}", i + 1, start.elapsed());
    }
    println!("acceptance: {passed} passed, {} failed, {unexpected} unexpected", criteria.len() - passed);
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
