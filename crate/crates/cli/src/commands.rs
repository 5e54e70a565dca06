use std::io::{self, Write};

use nlrep::detection::{verify_even_theorem, verify_odd_theorem, Certificate, MAX_EVEN_SWEEP, MAX_ODD_SWEEP};
use nlrep::newell_littlewood::nl_sum_support;
use nlrep::oracle::lr_via_polynomials;
use nlrep::tableaux::enumerate_lr_tableaux;
use nlrep::{
    detects, lr_coefficient, nl_coefficient, tensor_decompose, Error, Family, GroupSpec, LrCache,
    Partition, Result, SkewShape, SkewTableau,
};
use serde_json::{json, Value};

use crate::{Cli, Command, OutputFormat, Theorem};

struct Out {
    format: OutputFormat,
    color: bool,
    stdout: io::StdoutLock<'static>,
}

impl Out {
    fn line(&mut self, text: impl AsRef<str>) -> Result<()> {
        writeln!(self.stdout, "{}", text.as_ref()).map_err(|e| Error::Invariant(format!("write failed: {e}")))
    }

    fn json(&mut self, value: &Value) -> Result<()> {
        self.line(value.to_string())
    }

    fn verdict(&self, ok: bool, text: &str) -> String {
        match (self.color, ok) {
            (false, _) => text.to_string(),
            (true, true) => format!("\x1b[32m{text}\x1b[0m"),
            (true, false) => format!("\x1b[31m{text}\x1b[0m"),
        }
    }
}

fn parse(text: &str) -> Result<Partition> {
    Partition::parse(text)
}

fn cache_for(cli: &Cli) -> LrCache {
    match cli.cache_cap {
        Some(0) => LrCache::disabled(),
        cap => LrCache::with_capacity(cap),
    }
}

fn color_enabled(setting: &str) -> bool {
    matches!(setting.to_ascii_lowercase().as_str(), "on" | "1" | "true" | "yes" | "always")
}

pub fn run(cli: &Cli) -> Result<u8> {
    let mut out = Out { format: cli.format, color: color_enabled(&cli.color), stdout: io::stdout().lock() };
    let cache = cache_for(cli);
    match &cli.command {
        Command::Lr { lambda, mu, nu, certificates, oracle } => {
            cmd_lr(&mut out, &parse(lambda)?, &parse(mu)?, &parse(nu)?, *certificates, *oracle)
        }
        Command::Nl { lambda, mu, nu, support } => {
            cmd_nl(&mut out, &parse(lambda)?, &parse(mu)?, &parse(nu)?, *support, &cache)
        }
        Command::Decompose { lambda, mu, family, rank } => {
            let family: Family = family.parse()?;
            let group = GroupSpec::new(family, *rank).map_err(|e| match e {
                Error::Precondition(msg) if family == Family::D => Error::Precondition(format!(
                    "{msg}; type D is only treated for even rank so that SO(2n) weights have last part zero"
                )),
                other => other,
            })?;
            let (lambda, mu) = (parse(lambda)?, parse(mu)?);
            let result = with_jobs(cli.jobs, || tensor_decompose(&lambda, &mu, group, &cache))??;
            cmd_decompose(&mut out, &result)
        }
        Command::Detect { lambda } => cmd_detect(&mut out, &parse(lambda)?, &cache),
        Command::Verify { theorem, max_size } => cmd_verify(&mut out, *theorem, *max_size, cli.jobs, &cache),
        Command::Render { outer, inner, fill } => cmd_render(&mut out, &parse(outer)?, &parse(inner)?, fill),
    }
}

fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match jobs {
        None => Ok(f()),
        Some(n) => rayon_pool(n).map(|pool| pool.install(f)),
    }
}

fn rayon_pool(n: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(n.max(1))
        .build()
        .map_err(|e| Error::Invariant(format!("thread pool: {e}")))
}

fn cmd_lr(out: &mut Out, lambda: &Partition, mu: &Partition, nu: &Partition, certificates: bool, oracle: bool) -> Result<u8> {
    let c = lr_coefficient(lambda, mu, nu)?;
    if oracle {
        let check = lr_via_polynomials(lambda, mu, nu)?;
        if check != c {
            return Err(Error::Invariant(format!("tableau count {c} but polynomial expansion gives {check}")));
        }
    }
    let tableaux = if certificates && !c.is_zero() {
        enumerate_lr_tableaux(&SkewShape::new(nu.clone(), lambda.clone())?, mu)
    } else {
        Vec::new()
    };
    match out.format {
        OutputFormat::Json => {
            let mut doc = json!({ "lambda": lambda, "mu": mu, "nu": nu, "c": c });
            if certificates {
                doc["certificates"] = tableaux
                    .iter()
                    .map(|t| json!({ "tableau": t.to_json(), "word": t.word().0 }))
                    .collect();
            }
            out.json(&doc)?;
        }
        format => {
            out.line(c.to_string())?;
            for t in &tableaux {
                out.line("")?;
                write_diagram(out, t, format == OutputFormat::Plain)?;
            }
        }
    }
    Ok(0)
}

fn write_diagram(out: &mut Out, t: &SkewTableau, with_word: bool) -> Result<()> {
    out.line(t.to_ascii().trim_end_matches('\n'))?;
    if with_word {
        out.line(format!("w = {}", t.word()))?;
    }
    Ok(())
}

fn cmd_nl(out: &mut Out, lambda: &Partition, mu: &Partition, nu: &Partition, support: bool, cache: &LrCache) -> Result<u8> {
    let n = nl_coefficient(lambda, mu, nu, cache)?;
    let even = (lambda.size() + mu.size() + nu.size()) % 2 == 0;
    let terms = if support && even { nl_sum_support(lambda, mu, nu, cache)? } else { Vec::new() };
    match out.format {
        OutputFormat::Json => {
            let mut doc = json!({ "lambda": lambda, "mu": mu, "nu": nu, "N": n });
            if support {
                doc["support"] = serde_json::to_value(&terms).map_err(|e| Error::Invariant(e.to_string()))?;
            }
            out.json(&doc)?;
        }
        _ => {
            out.line(n.to_string())?;
            for t in &terms {
                out.line(format!(
                    "alpha={} beta={} gamma={}  c_lambda={} c_mu={} c_nu={}",
                    t.alpha, t.beta, t.gamma, t.c_lambda, t.c_mu, t.c_nu
                ))?;
            }
        }
    }
    Ok(0)
}

fn cmd_decompose(out: &mut Out, result: &nlrep::DecompositionResult) -> Result<u8> {
    if out.format == OutputFormat::Json {
        out.json(&result.to_json())?;
        return Ok(0);
    }
    out.line(format!("{} {} x {}", result.group, result.lambda, result.mu))?;
    for (nu, m) in &result.terms {
        out.line(format!("{nu}: {m}"))?;
    }
    for (nu, m) in &result.inadmissible {
        out.line(format!("{nu}: {m} (inadmissible, last part nonzero)"))?;
    }
    out.line(format!("stable: {}", if result.stable { "yes" } else { "no" }))?;
    Ok(0)
}

fn cmd_detect(out: &mut Out, lambda: &Partition, cache: &LrCache) -> Result<u8> {
    let v = detects(lambda, cache)?;
    let code = if v.detected { 0 } else { 1 };
    if out.format == OutputFormat::Json {
        out.json(&v.to_json())?;
        return Ok(code);
    }
    let families: Vec<String> = v.matched_families.iter().map(|f| f.to_string()).collect();
    out.line(format!("lambda: {}", v.lambda))?;
    out.line(format!("N: {}", v.n_lambda_lambda_lambda))?;
    let verdict = if v.detected { "detected" } else { "not detected" };
    out.line(format!("verdict: {}", out.verdict(v.detected, verdict)))?;
    out.line(format!("families: {}", if families.is_empty() { "none".into() } else { families.join(", ") }))?;
    if let Some(w) = &v.witness {
        out.line(format!("witness: alpha={} beta={} gamma={} ({})", w.alpha, w.beta, w.gamma, w.path()))?;
        let labels = ["lambda/alpha, content beta", "lambda/beta, content gamma", "lambda/alpha, content gamma"];
        for (label, cert) in labels.iter().zip(&w.certificates) {
            out.line("")?;
            out.line(format!("{label} [{}]", path_name(cert)))?;
            write_diagram(out, &cert.tableau, true)?;
        }
    }
    Ok(code)
}

fn path_name(cert: &Certificate) -> String {
    serde_json::to_value(cert.path)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_default()
}

fn cmd_verify(out: &mut Out, theorem: Theorem, max_size: Option<u32>, jobs: Option<usize>, cache: &LrCache) -> Result<u8> {
    let json = out.format == OutputFormat::Json;
    match theorem {
        Theorem::Odd => {
            let max = max_size.unwrap_or(11);
            let report = verify_odd_theorem(max, cache, jobs)?;
            for r in &report.records {
                if json {
                    out.json(&serde_json::to_value(r).map_err(|e| Error::Invariant(e.to_string()))?)?;
                } else {
                    out.line(format!("{}  N={}", r.lambda, r.n))?;
                }
            }
            let failures = report.counterexamples.len();
            if json {
                out.json(&json!({
                    "summary": true,
                    "theorem": "odd",
                    "max_size": report.max_size,
                    "max_allowed": MAX_ODD_SWEEP,
                    "checked": report.checked,
                    "total": report.total_checked(),
                    "failures": failures,
                    "counterexamples": report.counterexamples,
                }))?;
            } else {
                out.line(format!(
                    "odd sizes up to {}: {} partitions checked, {}",
                    report.max_size,
                    report.total_checked(),
                    out.verdict(failures == 0, &format!("{failures} failures"))
                ))?;
            }
            Ok(if report.passed() { 0 } else { 4 })
        }
        Theorem::Even => {
            let max = max_size.unwrap_or(MAX_EVEN_SWEEP);
            let report = verify_even_theorem(max, cache, jobs)?;
            for r in &report.records {
                if json {
                    out.json(&r.to_json())?;
                } else {
                    let v = &r.verdict;
                    let fams: String = v.matched_families.iter().map(|f| f.letter()).collect();
                    let mut line = format!("{}  N={}  families={}", v.lambda, v.n_lambda_lambda_lambda, if fams.is_empty() { "-" } else { &fams });
                    if let Some(w) = &v.witness {
                        line.push_str(&format!("  witness=({}, {}, {}) {}", w.alpha, w.beta, w.gamma, w.path()));
                    }
                    if let Some(f) = &r.failure {
                        line.push_str(&format!("  FAILURE: {f}"));
                    }
                    out.line(line)?;
                }
            }
            let failures = report.failures.len();
            if json {
                out.json(&json!({
                    "summary": true,
                    "theorem": "even",
                    "max_size": report.max_size,
                    "max_allowed": MAX_EVEN_SWEEP,
                    "classified": report.classified,
                    "family_tally": report.family_tally,
                    "path_tally": report.path_tally,
                    "unclassified": report.unclassified.len(),
                    "unclassified_detected": report.unclassified.iter().filter(|(_, n)| !n.is_zero()).count(),
                    "failures": failures,
                }))?;
            } else {
                let tally: Vec<String> = report.family_tally.iter().map(|(k, v)| format!("{k}={v}")).collect();
                out.line(format!(
                    "even sizes up to {}: {} classified ({}), {} unclassified, {}",
                    report.max_size,
                    report.classified,
                    tally.join(" "),
                    report.unclassified.len(),
                    out.verdict(failures == 0, &format!("{failures} failures"))
                ))?;
            }
            Ok(if report.passed() { 0 } else { 4 })
        }
    }
}

fn parse_fill(fill: &str) -> Result<Vec<Vec<u32>>> {
    fill.split('/')
        .map(|row| {
            row.split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<u32>().ok().filter(|&e| e > 0).ok_or_else(|| Error::Parse {
                        input: fill.to_string(),
                        reason: format!("bad entry {s:?}"),
                    })
                })
                .collect()
        })
        .collect()
}

fn cmd_render(out: &mut Out, outer: &Partition, inner: &Partition, fill: &str) -> Result<u8> {
    let shape = SkewShape::new(outer.clone(), inner.clone())?;
    let mut rows = parse_fill(fill)?;
    if rows.len() > shape.rows() {
        return Err(Error::Precondition(format!("{} rows given for a shape with {}", rows.len(), shape.rows())));
    }
    rows.resize(shape.rows(), Vec::new());
    let t = SkewTableau::new(shape, rows)?;
    match out.format {
        OutputFormat::Json => out.json(&json!({
            "tableau": t.to_json(),
            "word": t.word().0,
            "semistandard": t.is_semistandard(),
            "lr_tableau": t.is_lr_tableau(),
            "content": t.content(),
        }))?,
        OutputFormat::AsciiDiagram => out.line(t.to_ascii().trim_end_matches('\n'))?,
        OutputFormat::Plain => {
            write_diagram(out, &t, true)?;
            out.line(format!("semistandard: {}", yes_no(t.is_semistandard())))?;
            out.line(format!("LR tableau: {}", yes_no(t.is_lr_tableau())))?;
        }
    }
    Ok(0)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
