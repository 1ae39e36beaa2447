use std::time::Instant;

use anyhow::{bail, Result};
use fixedbitset::FixedBitSet;
use serde_json::{json, Map, Value};
use sierpinski_eip::eip::{
    boundary, boundary_parts, cut_edges, decorated_boundary, decorated_lex_profile_table, eta_inverse,
    format_rational, index_order_profile, lambda, lex_profile_table, parse_rational, profile_closed_form,
    recursive_table_m3, ternary_expansion,
};
use sierpinski_eip::graphs::{quotient_graph, Family};
use sierpinski_eip::oracle::{
    enumerate_cases, exact_profile, solve_decorated, steiner_suite, subadditivity_suite, verify_conjecture,
    verify_connectivity_bound, verify_gasket_bound, verify_hypercube, verify_nested_detailed, Scope,
    SearchBudget, SolveMethod, Status, VerificationReport, Witness,
};
use sierpinski_eip::posets::{component_count_formula, quotient_stab_order, DerivedNetwork};
use sierpinski_eip::{DecoratedContext, Error, Graph, GraphSpec, Poset, Sierpinski, StabOrder, VertexSet};

use crate::args::{Claim, Format, Global, PosetView, ProfileMethod, Sizes, Target};
use crate::output::{Artifact, Csv};

/// How a run ended, beyond hard errors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Verdict {
    Ok,
    BudgetExceeded,
    Counterexample,
}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    Error::Parameter(msg.into()).into()
}

fn format_or(global: &Global, default: Format, allowed: &[Format]) -> Result<Format> {
    let f = global.format.unwrap_or(default);
    if !allowed.contains(&f) {
        return Err(usage(format!("--format {f:?} is not available here").to_lowercase()));
    }
    Ok(f)
}

pub fn budget(global: &Global) -> Result<SearchBudget> {
    let d = SearchBudget::default();
    Ok(SearchBudget::new(
        global.budget_subsets.unwrap_or(d.max_subsets),
        global.budget_ideals.unwrap_or(d.max_ideals),
        global.jobs.unwrap_or(d.parallel_width),
    )?)
}

enum Resolved {
    Sierpinski {
        g: Sierpinski,
        ctx: Option<DecoratedContext>,
    },
    Other(GraphSpec),
}

impl Resolved {
    fn name(&self) -> String {
        match self {
            Resolved::Sierpinski { g, .. } => format!("S({},{})", g.n(), g.m()),
            Resolved::Other(spec) => spec.to_string(),
        }
    }

    fn vertex_count(&self) -> Result<u64> {
        Ok(match self {
            Resolved::Sierpinski { g, .. } => g.vertex_count(),
            Resolved::Other(spec) => spec.vertex_count()?,
        })
    }

    /// `graph`, `n`, `m` and the decoration, as leading JSON fields.
    fn header(&self) -> Map<String, Value> {
        let mut h = Map::new();
        h.insert("graph".into(), json!(self.name()));
        match self {
            Resolved::Sierpinski { g, ctx } => {
                h.insert("n".into(), json!(g.n()));
                h.insert("m".into(), json!(g.m()));
                if let Some(c) = ctx {
                    h.insert("s".into(), json!(c.s()));
                    h.insert("t".into(), json!(c.t()));
                }
            }
            Resolved::Other(spec) => {
                h.insert("n".into(), json!(spec.n));
                h.insert("m".into(), json!(spec.m));
            }
        }
        h
    }
}

fn resolve(t: &Target) -> Result<Resolved> {
    let decorated = t.s.is_some() || t.t.is_some();
    let (g, explicit_m) = match (&t.graph, t.n, t.m) {
        (Some(name), _, _) => {
            let spec: GraphSpec = name.parse()?;
            if spec.family != Family::Sierpinski {
                if decorated {
                    return Err(usage("--s/--t apply only to S(n,m)"));
                }
                return Ok(Resolved::Other(spec));
            }
            (Sierpinski::new(spec.n, spec.m)?, spec.m)
        }
        (None, Some(n), Some(m)) => (Sierpinski::new(n, m)?, m),
        _ => return Err(usage("give --n and --m, or --graph")),
    };
    let ctx = if decorated {
        Some(DecoratedContext::new(explicit_m, t.s.unwrap_or(0), t.t.unwrap_or(0))?)
    } else {
        None
    };
    Ok(Resolved::Sierpinski { g, ctx })
}

fn size_range(sizes: &Sizes, total: u64) -> Result<(u64, u64)> {
    let (lo, hi) = if let Some(ell) = sizes.ell {
        (ell, ell)
    } else if let Some(r) = &sizes.range {
        let (a, b) = r
            .split_once("..")
            .ok_or_else(|| usage(format!("--range {r:?}: expected a..b")))?;
        let b = b.strip_prefix('=').unwrap_or(b);
        let parse = |s: &str, default: u64| -> Result<u64> {
            if s.trim().is_empty() {
                return Ok(default);
            }
            s.trim().parse().map_err(|_| usage(format!("--range {r:?}: bad bound {s:?}")))
        };
        (parse(a, 0)?, parse(b, total)?)
    } else {
        (0, total)
    };
    if lo > hi || hi > total {
        return Err(usage(format!("size range {lo}..{hi} is not within 0..{total}")));
    }
    Ok((lo, hi))
}

pub fn profile(global: &Global, target: &Target, sizes: &Sizes, method: ProfileMethod) -> Result<(Artifact, Verdict)> {
    let format = format_or(global, Format::Csv, &[Format::Csv, Format::Json])?;
    let r = resolve(target)?;
    let total = r.vertex_count()?;
    let (lo, hi) = size_range(sizes, total)?;
    let mut parts: Option<(Vec<u64>, Vec<u64>)> = None;
    let mut search = None;
    let values: Vec<u64> = match (&r, method) {
        (Resolved::Sierpinski { g, ctx: None }, ProfileMethod::Lex) => lex_profile_table(g.n(), g.m())?.values,
        (Resolved::Sierpinski { g, ctx: Some(c) }, ProfileMethod::Lex) => {
            decorated_lex_profile_table(g.n(), g.m(), c)?.values
        }
        (Resolved::Sierpinski { g, ctx: None }, ProfileMethod::Recursion) => {
            if g.m() != 3 {
                return Err(usage("--method recursion needs m = 3"));
            }
            let t = recursive_table_m3(g.n())?;
            parts = t.theta0.zip(t.theta1);
            t.values
        }
        (Resolved::Sierpinski { g, ctx: None }, ProfileMethod::ClosedForm) => {
            let mut v = vec![0; total as usize + 1];
            for ell in lo..=hi {
                v[ell as usize] = profile_closed_form(g.n(), g.m(), ell)?;
            }
            v
        }
        (Resolved::Sierpinski { g, ctx }, ProfileMethod::Exact) => {
            let c = ctx.unwrap_or_else(|| DecoratedContext::plain(g.m()));
            let (p, how) = solve_decorated(g, &c, &budget(global)?)?;
            search = Some(how);
            p.values
        }
        (Resolved::Sierpinski { .. }, _) => {
            return Err(usage("decorated profiles support --method lex or exact"));
        }
        (Resolved::Other(spec), ProfileMethod::Lex) => index_order_profile(&spec.materialize()?),
        (Resolved::Other(spec), ProfileMethod::Exact) => exact_profile(&spec.materialize()?, &budget(global)?)?.values,
        (Resolved::Other(spec), _) => {
            return Err(usage(format!("{spec} supports --method lex or exact")));
        }
    };
    let method_name = match method {
        ProfileMethod::Lex => "lex",
        ProfileMethod::Recursion => "recursion",
        ProfileMethod::ClosedForm => "closed-form",
        ProfileMethod::Exact => "exact",
    };
    let range = lo as usize..=hi as usize;
    let artifact = match format {
        Format::Csv => {
            let mut csv = match parts {
                Some(_) => Csv::new(&["ell", "theta", "theta0", "theta1"]),
                None => Csv::new(&["ell", "theta"]),
            };
            for ell in range {
                let mut row = vec![ell.to_string(), values[ell].to_string()];
                if let Some((t0, t1)) = &parts {
                    row.push(t0[ell].to_string());
                    row.push(t1[ell].to_string());
                }
                csv.row(row);
            }
            csv.finish()
        }
        _ => {
            let rows: Vec<Value> = range
                .map(|ell| {
                    let mut row = json!({ "ell": ell, "theta": values[ell] });
                    if let Some((t0, t1)) = &parts {
                        row["theta0"] = json!(t0[ell]);
                        row["theta1"] = json!(t1[ell]);
                    }
                    row
                })
                .collect();
            let mut doc = r.header();
            doc.insert("method".into(), json!(method_name));
            if let Some(how) = search {
                doc.insert("search".into(), json!(search_name(how)));
            }
            doc.insert("vertices".into(), json!(total));
            doc.insert("rows".into(), Value::Array(rows));
            Artifact::Json(Value::Object(doc))
        }
    };
    Ok((artifact, Verdict::Ok))
}

fn search_name(how: SolveMethod) -> &'static str {
    match how {
        SolveMethod::FullSweep => "full-sweep",
        SolveMethod::Ideals => "ideals",
    }
}

fn parse_labels(g: &Graph, spec: &str) -> Result<Vec<usize>> {
    let body = spec.trim().trim_start_matches('{').trim_end_matches('}').trim();
    if body.is_empty() {
        return Ok(Vec::new());
    }
    let mut out: Vec<usize> = body
        .split(',')
        .map(|l| {
            g.index_of(l.trim())
                .ok_or_else(|| usage(format!("no vertex labelled {:?}", l.trim())))
        })
        .collect::<Result<_>>()?;
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

pub fn boundary_cmd(global: &Global, target: &Target, set: &str) -> Result<(Artifact, Verdict)> {
    let format = format_or(global, Format::Json, &[Format::Csv, Format::Json])?;
    let r = resolve(target)?;
    let mut doc = r.header();
    let mut csv_header = vec!["size", "boundary"];
    let mut csv_row = Vec::new();
    match &r {
        Resolved::Sierpinski { g, ctx } => {
            let s = VertexSet::parse(set, g.space())?;
            let b = boundary(g, &s)?;
            let space = g.space();
            let cut: Vec<[String; 2]> = cut_edges(g, &s)?
                .into_iter()
                .map(|(u, v)| [space.format(u), space.format(v)])
                .collect();
            doc.insert("set".into(), json!(s.words()));
            doc.insert("size".into(), json!(s.len()));
            doc.insert("section_vector".into(), json!(s.section_vector()));
            doc.insert("boundary".into(), json!(b));
            csv_row.extend([s.len().to_string(), b.to_string()]);
            if let Some(c) = ctx {
                let d = decorated_boundary(g, &s, c)?;
                doc.insert("decorated_boundary".into(), json!(d));
                doc.insert("parts".into(), serde_json::to_value(boundary_parts(g, &s, c)?)?);
                csv_header.push("decorated_boundary");
                csv_row.push(d.to_string());
            }
            doc.insert("cut_edges".into(), json!(cut));
        }
        Resolved::Other(spec) => {
            let graph = spec.materialize()?;
            let members = parse_labels(&graph, set)?;
            let bits = fixed_bits(graph.vertex_count(), &members);
            let b = graph.boundary(&bits);
            let cut: Vec<[&str; 2]> = graph
                .cut_edges(&bits)
                .into_iter()
                .map(|(u, v)| [graph.label(u), graph.label(v)])
                .collect();
            let labels: Vec<&str> = members.iter().map(|&v| graph.label(v)).collect();
            doc.insert("set".into(), json!(labels));
            doc.insert("size".into(), json!(members.len()));
            doc.insert("boundary".into(), json!(b));
            doc.insert("cut_edges".into(), json!(cut));
            csv_row.extend([members.len().to_string(), b.to_string()]);
        }
    }
    let artifact = match format {
        Format::Csv => {
            let mut csv = Csv::new(&csv_header);
            csv.row(csv_row);
            csv.finish()
        }
        _ => Artifact::Json(Value::Object(doc)),
    };
    Ok((artifact, Verdict::Ok))
}

fn fixed_bits(len: usize, members: &[usize]) -> FixedBitSet {
    let mut b = FixedBitSet::with_capacity(len);
    for &v in members {
        b.insert(v);
    }
    b
}

pub fn solve(global: &Global, target: &Target, sizes: &Sizes) -> Result<(Artifact, Verdict)> {
    let format = format_or(global, Format::Csv, &[Format::Csv, Format::Json])?;
    let r = resolve(target)?;
    let total = r.vertex_count()?;
    let (lo, hi) = size_range(sizes, total)?;
    let b = budget(global)?;
    let (values, witnesses, how): (Vec<u64>, Vec<Vec<String>>, &str) = match &r {
        Resolved::Sierpinski { g, ctx } => {
            let c = ctx.unwrap_or_else(|| DecoratedContext::plain(g.m()));
            let (p, how) = solve_decorated(g, &c, &b)?;
            let space = g.space();
            let w = (lo..=hi)
                .map(|ell| p.witnesses[ell as usize].ones().map(|x| space.format(x as u64)).collect())
                .collect();
            (p.values, w, search_name(how))
        }
        Resolved::Other(spec) => {
            let graph = spec.materialize()?;
            let p = exact_profile(&graph, &b)?;
            let w = (lo..=hi).map(|ell| p.witness_labels(&graph, ell as usize)).collect();
            (p.values, w, "full-sweep")
        }
    };
    let artifact = match format {
        Format::Csv => {
            let mut csv = Csv::new(&["ell", "theta", "witness"]);
            for (ell, w) in (lo..=hi).zip(&witnesses) {
                csv.row([ell.to_string(), values[ell as usize].to_string(), w.join(";")]);
            }
            csv.finish()
        }
        _ => {
            let rows: Vec<Value> = (lo..=hi)
                .zip(&witnesses)
                .map(|(ell, w)| json!({ "ell": ell, "theta": values[ell as usize], "witness": w }))
                .collect();
            let mut doc = r.header();
            doc.insert("search".into(), json!(how));
            doc.insert("vertices".into(), json!(total));
            doc.insert("rows".into(), Value::Array(rows));
            Artifact::Json(Value::Object(doc))
        }
    };
    Ok((artifact, Verdict::Ok))
}

fn sierpinski_nm(r: &Resolved, what: &str) -> Result<(u32, u32, Option<DecoratedContext>)> {
    match r {
        Resolved::Sierpinski { g, ctx } => Ok((g.n(), g.m(), *ctx)),
        Resolved::Other(spec) => Err(usage(format!("{what} runs on S(n,m), not {spec}"))),
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Instant) {
    let start = Instant::now();
    (f(), start)
}

/// The `n` of a target that may give only `--n` (or `--graph`).
fn loose_n(target: &Target, default: Option<u32>) -> Result<u32> {
    if let Some(name) = &target.graph {
        return Ok(name.parse::<GraphSpec>()?.n);
    }
    target.n.or(default).ok_or_else(|| usage("this claim needs --n"))
}

pub fn verify(global: &Global, claim: Claim, target: &Target) -> Result<(Artifact, Verdict)> {
    let format = format_or(global, Format::Json, &[Format::Csv, Format::Json])?;
    let b = budget(global)?;
    let mut extra = Map::new();
    let start = Instant::now();
    let mut reports: Vec<VerificationReport> = match claim {
        Claim::Conjecture1 => {
            let (n, m, ctx) = sierpinski_nm(&resolve(target)?, "conjecture1")?;
            if ctx.is_some_and(|c| !c.is_plain()) {
                return Err(usage("conjecture1 is the undecorated case; use conjecture2"));
            }
            vec![verify_conjecture(n, m, 0, m, &b)?.timed(start)]
        }
        Claim::Conjecture2 => {
            let (n, m, ctx) = sierpinski_nm(&resolve(target)?, "conjecture2")?;
            let contexts = match ctx {
                Some(c) => vec![c],
                None => DecoratedContext::all(m).into_iter().filter(|c| !c.is_plain()).collect(),
            };
            let mut out = Vec::new();
            for c in contexts {
                let (r, t) = timed(|| verify_conjecture(n, m, c.s(), c.t(), &b));
                out.push(r?.timed(t));
            }
            out
        }
        Claim::Subadditivity => {
            if target.m.is_some_and(|m| m != 3) {
                return Err(usage("the subadditivity suite is for m = 3"));
            }
            let n = loose_n(target, Some(5))?;
            subadditivity_suite(n)?.into_iter().map(|r| r.timed(start)).collect()
        }
        Claim::Nested => {
            let (name, graph) = match resolve(target)? {
                Resolved::Sierpinski { g, ctx: None } => (format!("S({},{})", g.n(), g.m()), g.to_graph()?),
                Resolved::Sierpinski { .. } => return Err(usage("nested takes no decoration")),
                Resolved::Other(spec) => (spec.to_string(), spec.materialize()?),
            };
            let (report, outcome) = verify_nested_detailed(&name, &graph, true, &b)?;
            if let Some(o) = outcome {
                extra.insert("profile".into(), json!(o.profile));
                extra.insert("optimal_counts".into(), json!(o.optimal_counts));
                extra.insert("reachable_counts".into(), json!(o.reachable_counts));
                if let Some(chain) = o.chain {
                    extra.insert("chain".into(), json!(chain));
                }
                if let Some(cert) = o.certificate {
                    extra.insert("certificate".into(), serde_json::to_value(cert)?);
                }
            }
            vec![report.timed(start)]
        }
        Claim::Theorem2 => match resolve(target)? {
            Resolved::Sierpinski { g, ctx: None } => vec![verify_connectivity_bound(g.n(), g.m(), &b)?.timed(start)],
            Resolved::Other(spec) if spec.family == Family::SierpinskiQuotient && spec.m == 3 => {
                vec![verify_gasket_bound(spec.n, &b)?.timed(start)]
            }
            _ => return Err(usage("theorem2 runs on undecorated S(n,m) or on SG<n>")),
        },
        Claim::Cases => {
            let (n, m, ctx) = sierpinski_nm(&resolve(target)?, "cases")?;
            if ctx.is_some() {
                return Err(usage("cases covers every decoration; drop --s/--t"));
            }
            let grid = enumerate_cases(n, m, &b)?;
            let scope = Scope {
                graph: Some(format!("S({n},{m})")),
                n: Some(n),
                m: Some(m),
                ..Scope::default()
            };
            let checked = grid.rows.iter().map(|r| r.sets).sum();
            let detail = format!(
                "{} cases, {} up to duality, {} self-dual, {} populated, {} nontrivial",
                grid.raw_cases, grid.dual_classes, grid.self_dual, grid.populated, grid.nontrivial
            );
            let report = match grid.rows.iter().find(|r| r.witness.is_some()) {
                None => VerificationReport::verified("cases", scope, checked, detail),
                Some(row) => VerificationReport::counterexample(
                    "cases",
                    scope,
                    checked,
                    Witness {
                        set: row.witness.clone(),
                        observed: row.max_delta,
                        detail: format!("subadditivation raised the boundary in case {}", row.index),
                        ..Witness::default()
                    },
                    detail,
                ),
            };
            extra.insert("grid".into(), serde_json::to_value(&grid)?);
            vec![report.timed(start)]
        }
        Claim::Operations => {
            let (n, m, ctx) = sierpinski_nm(&resolve(target)?, "operations")?;
            if ctx.is_some() {
                return Err(usage("operations covers every decoration; drop --s/--t"));
            }
            steiner_suite(n, m, &b)?.reports(n, m).into_iter().map(|r| r.timed(start)).collect()
        }
        Claim::Hypercube => {
            let n = loose_n(target, None)?;
            vec![verify_hypercube(n, &b)?.timed(start)]
        }
    };
    if global.no_timing {
        reports = reports.into_iter().map(|r| r.without_timing()).collect();
    }
    let verdict = reports.iter().fold(Verdict::Ok, |v, r| {
        v.max(match r.status {
            Status::Verified => Verdict::Ok,
            Status::BudgetExceeded => Verdict::BudgetExceeded,
            Status::Counterexample => Verdict::Counterexample,
        })
    });
    let artifact = match format {
        Format::Csv => {
            let mut csv = Csv::new(&["claim", "graph", "n", "m", "s", "t", "status", "checked", "elapsed_ms", "detail"]);
            let opt = |x: Option<u32>| x.map_or(String::new(), |v| v.to_string());
            for r in &reports {
                let status = serde_json::to_value(r.status)?;
                csv.row([
                    r.claim.clone(),
                    r.scope.graph.clone().unwrap_or_default(),
                    opt(r.scope.n),
                    opt(r.scope.m),
                    opt(r.scope.s),
                    opt(r.scope.t),
                    status.as_str().unwrap_or_default().to_string(),
                    r.checked.to_string(),
                    r.elapsed_ms.map_or(String::new(), |t| t.to_string()),
                    r.detail.clone(),
                ]);
            }
            csv.finish()
        }
        _ => {
            let mut doc = Map::new();
            doc.insert("claim".into(), serde_json::to_value(claim_name(claim))?);
            doc.insert("reports".into(), serde_json::to_value(&reports)?);
            doc.extend(extra);
            Artifact::Json(Value::Object(doc))
        }
    };
    Ok((artifact, verdict))
}

fn claim_name(c: Claim) -> &'static str {
    match c {
        Claim::Conjecture1 => "conjecture1",
        Claim::Conjecture2 => "conjecture2",
        Claim::Subadditivity => "subadditivity",
        Claim::Nested => "nested",
        Claim::Theorem2 => "theorem2",
        Claim::Cases => "cases",
        Claim::Operations => "operations",
        Claim::Hypercube => "hypercube",
    }
}

pub fn poset(global: &Global, target: &Target, what: PosetView, below: Option<&str>) -> Result<(Artifact, Verdict)> {
    let allowed: &[Format] = match what {
        PosetView::Hasse | PosetView::Network => &[Format::Json, Format::Dot, Format::Csv],
        _ => &[Format::Json, Format::Csv],
    };
    let format = format_or(global, Format::Json, allowed)?;
    let b = budget(global)?;
    let r = resolve(target)?;
    let name = r.name();
    let (poset, graph, order): (Poset, Graph, Option<StabOrder>) = match &r {
        Resolved::Sierpinski { g, ctx: None } => {
            let o = StabOrder::build(g.n(), g.m())?;
            (o.poset().clone(), g.to_graph()?, Some(o))
        }
        Resolved::Other(spec) if spec.family == Family::SierpinskiQuotient => {
            let q = quotient_graph(spec.n, spec.m)?;
            (quotient_stab_order(&q)?, q.graph().clone(), None)
        }
        _ => return Err(usage("poset runs on undecorated S(n,m) or on S[n,m] / SG<n>")),
    };
    let (poset, restricted) = match below {
        None => (poset, false),
        Some(word) => {
            let x = poset
                .labels()
                .iter()
                .position(|l| l == word)
                .ok_or_else(|| usage(format!("no element {word:?} in the order of {name}")))?;
            (poset.restrict(&poset.principal_ideal(x))?.0, true)
        }
    };
    let mut doc = r.header();
    if let Some(w) = below {
        doc.insert("below".into(), json!(w));
    }
    let labels = poset.labels().to_vec();
    let artifact = match what {
        PosetView::Components => {
            let comps: Vec<Value> = match (&order, restricted) {
                (Some(o), false) => o.component_inventory().into_iter().map(serde_json::to_value).collect::<Result<_, _>>()?,
                _ => poset
                    .components()
                    .iter()
                    .enumerate()
                    .map(|(i, c)| {
                        let members: Vec<&str> = c.iter().map(|&x| labels[x as usize].as_str()).collect();
                        json!({ "index": i, "minimum": members[0], "size": c.len(), "members": members })
                    })
                    .collect(),
            };
            if format == Format::Csv {
                let mut csv = Csv::new(&["index", "minimum", "size"]);
                for c in &comps {
                    csv.row([c["index"].to_string(), c["minimum"].as_str().unwrap_or_default().into(), c["size"].to_string()]);
                }
                csv.finish()
            } else {
                doc.insert("component_count".into(), json!(comps.len()));
                if let (Resolved::Sierpinski { g, .. }, false) = (&r, restricted) {
                    let f = component_count_formula(g.n(), g.m())?;
                    doc.insert("formula_count".into(), json!(u64::try_from(f).ok()));
                }
                doc.insert("components".into(), Value::Array(comps));
                Artifact::Json(Value::Object(doc))
            }
        }
        PosetView::Ideals => {
            let ideals = poset.enumerate_ideals(b.max_ideals)?;
            let lists: Vec<Vec<&str>> = ideals
                .iter()
                .map(|s| s.ones().map(|x| labels[x].as_str()).collect())
                .collect();
            if format == Format::Csv {
                let mut csv = Csv::new(&["index", "size", "members"]);
                for (i, l) in lists.iter().enumerate() {
                    csv.row([i.to_string(), l.len().to_string(), l.join(";")]);
                }
                csv.finish()
            } else {
                doc.insert("count".into(), json!(lists.len()));
                doc.insert("ideals".into(), json!(lists));
                Artifact::Json(Value::Object(doc))
            }
        }
        PosetView::Hasse => {
            let covers: Vec<[&str; 2]> = poset
                .covers()
                .into_iter()
                .map(|(a, b)| [labels[a as usize].as_str(), labels[b as usize].as_str()])
                .collect();
            match format {
                Format::Dot => Artifact::Text(poset.to_dot(&name)),
                Format::Csv => {
                    let mut csv = Csv::new(&["lower", "upper"]);
                    for [a, b] in &covers {
                        csv.row([*a, *b]);
                    }
                    csv.finish()
                }
                Format::Json => {
                    doc.insert("elements".into(), json!(labels));
                    doc.insert("covers".into(), json!(covers));
                    Artifact::Json(Value::Object(doc))
                }
            }
        }
        PosetView::Network => {
            if restricted {
                return Err(usage("the network is built on the whole order; drop --below"));
            }
            let net = DerivedNetwork::build(&poset, &graph, b.max_ideals)?;
            let best = net.min_weight_by_size();
            let chain = net.optimal_chain(&best);
            match format {
                Format::Dot => Artifact::Text(net.to_dot(&name, chain.as_deref().unwrap_or(&[]))),
                Format::Csv => {
                    let mut csv = Csv::new(&["index", "size", "weight", "members"]);
                    for i in 0..net.len() {
                        let node = net.node(i);
                        csv.row([i.to_string(), node.size.to_string(), node.weight.to_string(), node.members.join(";")]);
                    }
                    csv.finish()
                }
                Format::Json => {
                    let nodes: Vec<Value> =
                        (0..net.len()).map(|i| serde_json::to_value(net.node(i))).collect::<Result<_, _>>()?;
                    doc.insert("nodes".into(), Value::Array(nodes));
                    doc.insert("arcs".into(), json!(net.arcs()));
                    doc.insert("min_weight_by_size".into(), json!(best));
                    doc.insert("optimal_chain".into(), json!(chain));
                    doc.insert("min_total_weight_chain".into(), json!(net.min_total_weight_chain()));
                    Artifact::Json(Value::Object(doc))
                }
            }
        }
    };
    Ok((artifact, Verdict::Ok))
}

pub fn limit(global: &Global, eta: Option<&str>, lam: Option<&str>) -> Result<(Artifact, Verdict)> {
    let format = format_or(global, Format::Csv, &[Format::Csv, Format::Json])?;
    let artifact = match (eta, lam) {
        (Some(a), _) => {
            let x = parse_rational(a)?;
            let y: Vec<String> = eta_inverse(&x)?.iter().map(format_rational).collect();
            match format {
                Format::Csv => {
                    let mut csv = Csv::new(&["y0", "y1", "y2"]);
                    csv.row(&y);
                    csv.finish()
                }
                _ => Artifact::Json(json!({ "a": format_rational(&x), "eta_inverse": y })),
            }
        }
        (None, Some(a)) => {
            let x = parse_rational(a)?;
            let value = lambda(&x)?;
            match format {
                Format::Csv => {
                    let mut csv = Csv::new(&["a", "lambda"]);
                    csv.row([format_rational(&x), value.to_string()]);
                    csv.finish()
                }
                _ => Artifact::Json(json!({
                    "a": format_rational(&x),
                    "lambda": serde_json::to_value(&value)?,
                    "expansion": serde_json::to_value(ternary_expansion(&x)?)?,
                })),
            }
        }
        (None, None) => bail!(usage("give --eta-inverse or --lambda")),
    };
    Ok((artifact, Verdict::Ok))
}
