use std::io;

use dedekind::search::DensityReport;
use dedekind::{
    convergents, decimal_approx, decompose, enumerate_bruteforce, enumerate_lemma1,
    filter_by_value, generate_term, parse_rational, quartic_structure_check, sum_definitional,
    sum_fast, BigInt, Decomposition, GeneratedTerm, ModulusHit, Pair, PeriodicCf, TargetValue,
};
use serde_json::json;
use thiserror::Error;

use crate::output::Records;
use crate::{Cli, Command, SearchMethod, SumMethod};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] dedekind::Error),
    #[error("methods disagree: {0}")]
    Mismatch(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(dedekind::Error::Parse(_)) => 1,
            CliError::Core(e) if e.is_invariant() => 3,
            CliError::Core(_) => 2,
            CliError::Mismatch(_) => 3,
            CliError::Io(_) => 1,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

pub fn run(cli: &Cli) -> Result<()> {
    let mut out = Records::stdout(cli.json);
    match &cli.command {
        Command::Sum { a, b, method } => sum(&mut out, a, b, *method),
        Command::Decompose { a, b } => decompose_cmd(&mut out, a, b),
        Command::Generate {
            a,
            b,
            r1_max,
            verify,
        } => generate(&mut out, a, b, *r1_max, *verify),
        Command::Enumerate {
            k,
            q,
            b_max,
            method,
        } => enumerate(&mut out, k, q, *b_max, *method),
        Command::Cfrac {
            expansion,
            max_order,
            filter,
        } => cfrac(&mut out, expansion, *max_order, filter.as_deref()),
        Command::Density {
            k,
            q,
            b_max,
            r1_max,
        } => density(&mut out, k, q, *b_max, *r1_max),
    }
}

fn sum(out: &mut Records, a: &BigInt, b: &BigInt, method: SumMethod) -> Result<()> {
    let pair = Pair::new(a.clone(), b.clone())?;
    let value = match method {
        SumMethod::Fast => sum_fast(&pair),
        SumMethod::Def => sum_definitional(&pair),
        SumMethod::Both => {
            let fast = sum_fast(&pair);
            let def = sum_definitional(&pair);
            if fast != def {
                return Err(CliError::Mismatch(format!(
                    "S({a},{b}): fast {fast}, definitional {def}"
                )));
            }
            fast
        }
    };
    let method = format!("{method:?}").to_lowercase();
    out.emit(
        value.to_string(),
        json!({ "a": a.to_string(), "b": b.to_string(), "value": value.to_string(), "method": method }),
    )?;
    Ok(())
}

fn decomposition_json(d: &Decomposition) -> serde_json::Value {
    json!({
        "record": "decomposition",
        "k": d.k().to_string(),
        "q": d.q().to_string(),
        "t": d.t().to_string(),
        "s": d.s().to_string(),
        "r": d.r().to_string(),
        "n": d.n().to_string(),
    })
}

fn decompose_cmd(out: &mut Records, a: &BigInt, b: &BigInt) -> Result<()> {
    let d = decompose(&Pair::new(a.clone(), b.clone())?)?;
    out.emit(d.to_string(), decomposition_json(&d))?;
    Ok(())
}

fn term_row(
    d: &Decomposition,
    term: &GeneratedTerm,
    value: Option<String>,
) -> (String, serde_json::Value) {
    let ratio = term.leading_ratio(d).map(|r| decimal_approx(&r, 4));
    let text = format!(
        "{}\t{}\t{}\t{}\t{}\t{}\t{}",
        term.r1,
        term.r2,
        term.t2,
        term.a3,
        term.b3,
        value.as_deref().unwrap_or("-"),
        ratio.as_deref().unwrap_or("-"),
    );
    let mut obj = json!({
        "record": "term",
        "r1": term.r1.to_string(),
        "r2": term.r2.to_string(),
        "t2": term.t2.to_string(),
        "a2": term.a2.to_string(),
        "b2": term.b2.to_string(),
        "a3": term.a3.to_string(),
        "b3": term.b3.to_string(),
        "ratio_approx": ratio,
    });
    if let Some(v) = value {
        obj["value"] = json!(v);
    }
    (text, obj)
}

fn generate(out: &mut Records, a: &BigInt, b: &BigInt, r1_max: u64, verify: bool) -> Result<()> {
    let d = decompose(&Pair::new(a.clone(), b.clone())?)?;
    let target = d.value().to_ratio();
    out.text(format!("# {d}"))?;
    if out.json() {
        out.emit("", decomposition_json(&d))?;
    }
    out.text("r1\tr2\tt2\ta3\tb3\tvalue\tratio_approx")?;
    for r1 in 0..=r1_max {
        let term = generate_term(&d, &BigInt::from(r1))?;
        let value = if verify {
            let v = sum_fast(&Pair::new(term.a3.clone(), term.b3.clone())?);
            if v != target {
                return Err(dedekind::Error::Invariant(format!(
                    "S({}, {}) = {v}, expected {target}",
                    term.a3, term.b3
                ))
                .into());
            }
            Some(v.to_string())
        } else {
            None
        };
        let (text, obj) = term_row(&d, &term, value);
        out.emit(text, obj)?;
    }
    if r1_max >= 5 {
        let cert = quartic_structure_check(&d, r1_max as usize)?;
        out.emit(
            format!(
                "# quartic degree={} leading={} fourth_difference={} points={}",
                cert.degree, cert.leading, cert.fourth_difference, cert.points
            ),
            json!({
                "record": "quartic",
                "degree": cert.degree,
                "leading": cert.leading.to_string(),
                "fourth_difference": cert.fourth_difference.to_string(),
                "points": cert.points,
            }),
        )?;
    }
    Ok(())
}

fn hit_json(h: &ModulusHit) -> serde_json::Value {
    json!({ "a": h.a.to_string(), "b": h.b.to_string(), "value": h.value.to_string() })
}

fn enumerate(
    out: &mut Records,
    k: &BigInt,
    q: &BigInt,
    b_max: u64,
    method: SearchMethod,
) -> Result<()> {
    let target = TargetValue::new(k.clone(), q.clone())?;
    let hits = match method {
        SearchMethod::Brute => enumerate_bruteforce(&target, b_max)?,
        SearchMethod::Lemma1 => enumerate_lemma1(&target, b_max)?,
        SearchMethod::Both => {
            let brute = enumerate_bruteforce(&target, b_max)?;
            let fast = enumerate_lemma1(&target, b_max)?;
            if brute != fast {
                return Err(CliError::Mismatch(format!(
                    "{target} up to {b_max}: {} brute-force hits, {} lemma-1 hits",
                    brute.len(),
                    fast.len()
                )));
            }
            fast
        }
    };
    for h in &hits {
        out.emit(h.to_string(), hit_json(h))?;
    }
    Ok(())
}

fn cfrac(out: &mut Records, expansion: &str, max_order: usize, filter: Option<&str>) -> Result<()> {
    let cf: PeriodicCf = expansion.parse()?;
    let mut convs = convergents(&cf, max_order)?;
    if let Some(spec) = filter {
        let target = TargetValue::from_ratio(&parse_rational(spec)?);
        convs = filter_by_value(&convs, &target);
    }
    for c in &convs {
        out.emit(
            format!("{}\t{c}", c.order),
            json!({
                "order": c.order,
                "num": c.num.to_string(),
                "den": c.den.to_string(),
                "value": c.to_string(),
            }),
        )?;
    }
    Ok(())
}

fn density(out: &mut Records, k: &BigInt, q: &BigInt, b_max: u64, r1_max: u64) -> Result<()> {
    let target = TargetValue::new(k.clone(), q.clone())?;
    let hits = enumerate_lemma1(&target, b_max)?;
    let generated = match hits.first() {
        Some(seed) => {
            let d = decompose(&Pair::new(seed.a.clone(), seed.b.clone())?)?;
            out.text(format!("# seed {} {}: {d}", seed.a, seed.b))?;
            let bound = BigInt::from(b_max);
            dedekind::generate_sequence(&d, r1_max)?
                .into_iter()
                .filter(|t| t.b3 <= bound)
                .collect()
        }
        None => Vec::new(),
    };
    let report = DensityReport::new(&hits, &generated);
    if out.json() {
        for row in &report.rows {
            out.emit(
                "",
                json!({
                    "decade": row.decade,
                    "all": row.all_moduli,
                    "generated": row.generated_moduli,
                    "cumulative_all": row.cumulative_all,
                    "cumulative_generated": row.cumulative_generated,
                }),
            )?;
        }
    } else if !report.rows.is_empty() {
        out.text(report.to_string().trim_end())?;
    }
    Ok(())
}
