//! The six commands. Each returns the full output text; writing it out is
//! left to the caller.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::sync::Arc;

use serde_json::json;
use thiserror::Error;

use symperm::combinatorics::{simulate_random_turn, walk_to_tableau, EnsembleSpec, SymmetryType};
use symperm::exact::{exact_cdf_bruteforce, exact_cdf_rsk, ExactLaw};
use symperm::lpp::{lpp_scaling, transitional_alpha, LppSpec};
use symperm::montecarlo::{run_indexed, sample_involution_lis, sample_lis, sample_lpp};
use symperm::painleve::{solve_hastings_mcleod, solve_m, PIIConfig, TwFamily, TwKind};
use symperm::stats::{
    chi_center_scale, chi_transform, fmt_sig, gaussian_transform, ks_distance_values, ScaledSample, Summary,
};

use crate::args::{CompareArgs, EnsembleArgs, ExactArgs, ExactMethod, Format, LppArgs, SampleArgs, TwTableArgs, WalkArgs};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] symperm::Error),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("bad input: {0}")]
    Input(String),
}

impl CliError {
    /// 2 for parameter errors, 3 for numerical failures, 1 for I/O.
    pub fn exit_code(&self) -> u8 {
        use symperm::Error as E;
        match self {
            CliError::Core(E::Instability { .. } | E::Numerics(_)) => 3,
            CliError::Core(_) | CliError::Input(_) => 2,
            CliError::Io { .. } => 1,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

pub fn read_file(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

fn symmetry(name: &str) -> CliResult<SymmetryType> {
    Ok(name.parse()?)
}

fn ensemble(args: &EnsembleArgs) -> CliResult<EnsembleSpec> {
    let spec = EnsembleSpec::raw(
        symmetry(&args.symmetry)?,
        args.n,
        args.m.unwrap_or(0),
        args.m_plus.unwrap_or(0),
        args.m_minus.unwrap_or(0),
    );
    spec.validate()?;
    Ok(spec)
}

fn to_f64<T: Into<f64>>(v: Vec<T>) -> Vec<f64> {
    v.into_iter().map(Into::into).collect()
}

/// `index,<raw_name>,scaled` rows, or a JSON object with both columns.
fn sample_output(format: Format, raw_name: &str, raw: &[f64], scaled: Option<&ScaledSample>, meta: serde_json::Value) -> String {
    match format {
        Format::Csv => {
            let mut out = format!("index,{raw_name},scaled\n");
            for (i, x) in raw.iter().enumerate() {
                let s = scaled.map_or(String::new(), |s| fmt_sig(s.scaled[i]));
                writeln!(out, "{i},{},{s}", fmt_sig(*x)).unwrap();
            }
            out
        }
        Format::Json => {
            let mut v = meta;
            v[raw_name] = json!(raw);
            if let Some(s) = scaled {
                v["center"] = json!(s.center);
                v["scale"] = json!(s.scale);
                v["scaled"] = json!(s.scaled);
            }
            format!("{}\n", serde_json::to_string_pretty(&v).unwrap())
        }
    }
}

pub fn sample(args: &SampleArgs, format: Format, threads: Option<usize>) -> CliResult<String> {
    let sym = symmetry(&args.ensemble.symmetry)?;
    let n = args.ensemble.n;
    if args.unconstrained {
        if sym != SymmetryType::Invol {
            return Err(CliError::Input("--unconstrained applies to --symmetry invol".into()));
        }
        let raw = to_f64(sample_involution_lis(n, args.samples, args.seed, threads)?.into_iter().map(|x| x as u32).collect());
        let scaled = match n {
            0 => None,
            _ => {
                let (c, s) = chi_center_scale(SymmetryType::Plain, n)?;
                Some(ScaledSample::new(raw.clone(), c, s)?)
            }
        };
        let meta = json!({"symmetry": "invol", "unconstrained": true, "N": n, "seed": args.seed});
        return Ok(sample_output(format, "L", &raw, scaled.as_ref(), meta));
    }
    let spec = if let Some(w) = args.w {
        EnsembleSpec::transitional(sym, n, w, args.beta.unwrap_or(0.0))?
    } else if args.alpha.is_some() || args.beta.is_some() {
        EnsembleSpec::with_alpha_beta(sym, n, args.alpha.unwrap_or(0.0), args.beta.unwrap_or(0.0))?
    } else {
        ensemble(&args.ensemble)?
    };
    let raw = to_f64(sample_lis(&spec, args.samples, args.seed, threads)?.into_iter().map(|x| x as u32).collect());
    let scaled = match (spec.size(), args.gaussian) {
        (0, _) => None,
        (_, Some(alpha)) => Some(gaussian_transform(&raw, &spec, alpha)?),
        (_, None) => Some(chi_transform(&raw, &spec)?),
    };
    let meta = json!({
        "symmetry": spec.symmetry.name(), "n": spec.n, "m": spec.m, "m_plus": spec.m_plus,
        "m_minus": spec.m_minus, "N": spec.size(), "seed": args.seed,
    });
    Ok(sample_output(format, "L", &raw, scaled.as_ref(), meta))
}

pub fn exact(args: &ExactArgs, format: Format) -> CliResult<String> {
    let spec = ensemble(&args.ensemble)?;
    let law: ExactLaw = match (args.method, spec.symmetry.is_signed()) {
        (ExactMethod::Brute, _) | (ExactMethod::Auto, true) => exact_cdf_bruteforce(&spec)?,
        (ExactMethod::Rsk, _) | (ExactMethod::Auto, false) => exact_cdf_rsk(&spec)?,
    };
    Ok(match format {
        Format::Csv => law.to_csv(),
        Format::Json => {
            let rows: Vec<_> = law
                .cdf_values()
                .iter()
                .enumerate()
                .map(|(l, c)| {
                    json!({"l": l, "numerator": c.numer().to_string(), "denominator": c.denom().to_string(),
                           "float_value": law.cdf_f64(l)})
                })
                .collect();
            format!("{}\n", serde_json::to_string_pretty(&json!({"N": spec.size(), "cdf": rows})).unwrap())
        }
    })
}

pub fn twtable(args: &TwTableArgs, format: Format) -> CliResult<String> {
    if !(args.step > 0.0 && args.x_min <= args.x_max) {
        return Err(CliError::Input("need step > 0 and x-min ≤ x-max".into()));
    }
    // the table reaches at least x = 8; negative w moves the laws right, so
    // the right end follows the requested range (whole units, up to 60)
    let right = args.x_max.ceil().max(8.0);
    let config = PIIConfig { x_max: right, x0: right, ..PIIConfig::default() };
    let pii = Arc::new(solve_hastings_mcleod(&config)?);
    let mut families = vec![
        TwFamily::new(TwKind::F1, pii.clone())?,
        TwFamily::new(TwKind::F2, pii.clone())?,
        TwFamily::new(TwKind::F4, pii.clone())?,
    ];
    for &w in &args.w {
        let m = Arc::new(solve_m(w, &pii)?);
        families.push(TwFamily::with_m(TwKind::FBox(w), pii.clone(), m.clone())?);
        families.push(TwFamily::with_m(TwKind::FBoxtimes(w), pii.clone(), m)?);
    }
    let count = ((args.x_max - args.x_min) / args.step + 1e-9).floor() as usize + 1;
    let xs: Vec<f64> = (0..count).map(|i| args.x_min + i as f64 * args.step).collect();
    let columns = families
        .iter()
        .map(|f| xs.iter().map(|&x| f.eval(x)).collect::<symperm::Result<Vec<f64>>>())
        .collect::<symperm::Result<Vec<_>>>()?;
    let names: Vec<String> = families.iter().map(|f| f.kind().to_string()).collect();
    Ok(match format {
        Format::Csv => {
            let mut out = format!("x,{}\n", names.join(","));
            for (i, x) in xs.iter().enumerate() {
                let row: Vec<String> = columns.iter().map(|c| fmt_sig(c[i])).collect();
                writeln!(out, "{},{}", fmt_sig(*x), row.join(",")).unwrap();
            }
            out
        }
        Format::Json => {
            let cols: serde_json::Map<String, serde_json::Value> =
                names.iter().zip(&columns).map(|(n, c)| (n.clone(), json!(c))).collect();
            format!("{}\n", serde_json::to_string_pretty(&json!({"x": xs, "columns": cols})).unwrap())
        }
    })
}

pub fn lpp(args: &LppArgs, format: Format, threads: Option<usize>) -> CliResult<String> {
    let model = symmetry(&args.model)?;
    let alpha = match args.w {
        Some(w) => transitional_alpha(w, model, args.side, args.q)?,
        None => args.alpha,
    };
    let spec = LppSpec::new(model, args.side, args.q, alpha, args.beta)?;
    let raw: Vec<f64> = sample_lpp(&spec, args.samples, args.seed, threads)?.into_iter().map(|g| g as f64).collect();
    let (c, s) = lpp_scaling(model, args.side, args.q)?;
    let scaled = ScaledSample::new(raw.clone(), c, s)?;
    let meta = json!({"model": model.name(), "N": args.side, "q": args.q, "alpha": alpha, "beta": args.beta, "seed": args.seed});
    Ok(sample_output(format, "G", &raw, Some(&scaled), meta))
}

pub fn walk(args: &WalkArgs, format: Format, threads: Option<usize>) -> CliResult<String> {
    let histories = run_indexed(args.samples, args.seed, threads, |rng, _| {
        simulate_random_turn(args.steps, args.particles, rng)
    })?;
    let join = |v: &[usize], sep: &str| v.iter().map(usize::to_string).collect::<Vec<_>>().join(sep);
    let rows: Vec<(String, String, String)> = histories
        .iter()
        .map(|h| {
            let t = walk_to_tableau(h);
            let shape = join(t.shape().parts(), " ");
            let tab = t.rows().iter().map(|r| join(r, " ")).collect::<Vec<_>>().join("/");
            (join(h.moves(), " "), shape, tab)
        })
        .collect();
    Ok(match format {
        Format::Csv => {
            let mut out = String::from("index,moves,shape,tableau\n");
            for (i, (m, s, t)) in rows.iter().enumerate() {
                writeln!(out, "{i},{m},{s},{t}").unwrap();
            }
            out
        }
        Format::Json => {
            let v: Vec<_> = histories
                .iter()
                .map(|h| {
                    let t = walk_to_tableau(h);
                    json!({"moves": h.moves(), "shape": t.shape().parts(), "tableau": t.rows()})
                })
                .collect();
            format!("{}\n", serde_json::to_string_pretty(&json!({"particles": args.particles, "seed": args.seed, "walks": v})).unwrap())
        }
    })
}

/// Values of the `scaled` column, or of a headerless single column.
fn parse_sample(text: &str) -> CliResult<Vec<f64>> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let Some(first) = lines.next() else {
        return Err(CliError::Input("empty sample file".into()));
    };
    let header: Vec<&str> = first.split(',').map(str::trim).collect();
    let (column, mut values) = match header.iter().position(|h| *h == "scaled") {
        Some(c) => (c, Vec::new()),
        None if header.len() == 1 => (0, vec![parse_value(header[0])?]),
        None => return Err(CliError::Input("sample CSV needs a `scaled` column".into())),
    };
    for line in lines {
        let field = line.split(',').nth(column).ok_or_else(|| CliError::Input(format!("short row `{line}`")))?;
        values.push(parse_value(field)?);
    }
    Ok(values)
}

fn parse_value(s: &str) -> CliResult<f64> {
    s.trim().parse().map_err(|_| CliError::Input(format!("not a number: `{s}`")))
}

/// Reference distribution function from a `twtable` CSV column: linear
/// interpolation between rows, end values outside.
fn parse_table(text: &str, column: &str) -> CliResult<(Vec<f64>, Vec<f64>)> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header: Vec<&str> = lines.next().unwrap_or("").split(',').map(str::trim).collect();
    let c = header
        .iter()
        .position(|h| *h == column)
        .ok_or_else(|| CliError::Input(format!("table has no column `{column}` (columns: {})", header.join(", "))))?;
    let (mut xs, mut fs) = (Vec::new(), Vec::new());
    for line in lines {
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != header.len() {
            return Err(CliError::Input(format!("row `{line}` does not match the header")));
        }
        xs.push(parse_value(fields[0])?);
        fs.push(parse_value(fields[c])?);
    }
    if xs.len() < 2 || xs.windows(2).any(|p| p[1] <= p[0]) {
        return Err(CliError::Input("table needs at least two rows with increasing x".into()));
    }
    Ok((xs, fs))
}

fn interpolate(xs: &[f64], fs: &[f64], x: f64) -> f64 {
    if x <= xs[0] {
        return fs[0];
    }
    if x >= xs[xs.len() - 1] {
        return fs[fs.len() - 1];
    }
    let i = xs.partition_point(|&v| v <= x) - 1;
    let t = (x - xs[i]) / (xs[i + 1] - xs[i]);
    fs[i] + t * (fs[i + 1] - fs[i])
}

pub fn compare(args: &CompareArgs, format: Format) -> CliResult<String> {
    let values = parse_sample(&read_file(&args.sample)?)?;
    let (xs, fs) = parse_table(&read_file(&args.table)?, &args.column)?;
    let ks = ks_distance_values(&values, |x| interpolate(&xs, &fs, x))?;
    let summary = Summary::new(&values, ks, args.seed)?;
    Ok(match format {
        Format::Json => format!("{}\n", serde_json::to_string(&summary).unwrap()),
        Format::Csv => format!(
            "n,mean,var,skew,ks,seed\n{},{},{},{},{},{}\n",
            summary.n,
            fmt_sig(summary.mean),
            fmt_sig(summary.var),
            fmt_sig(summary.skew),
            fmt_sig(summary.ks),
            summary.seed.map_or(String::new(), |s| s.to_string())
        ),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sample_parsing() {
        assert_eq!(parse_sample("index,L,scaled\n0,3,0.5\n1,4,-1\n").unwrap(), vec![0.5, -1.0]);
        assert_eq!(parse_sample("0.25\n1\n").unwrap(), vec![0.25, 1.0]);
        assert!(parse_sample("a,b\n1,2\n").is_err());
        assert!(parse_sample("").is_err());
    }

    #[test]
    fn table_interpolation() {
        let (xs, fs) = parse_table("x,F2\n0,0.2\n1,0.6\n", "F2").unwrap();
        assert_eq!(interpolate(&xs, &fs, 0.5), 0.4);
        assert_eq!(interpolate(&xs, &fs, -3.0), 0.2);
        assert_eq!(interpolate(&xs, &fs, 7.0), 0.6);
        assert!(parse_table("x,F2\n0,0.2\n", "F1").is_err());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(CliError::Core(symperm::Error::Parameter("x".into())).exit_code(), 2);
        assert_eq!(CliError::Core(symperm::Error::Numerics("x".into())).exit_code(), 3);
        let io = std::io::Error::new(std::io::ErrorKind::NotFound, "gone");
        assert_eq!(CliError::Io { path: "p".into(), source: io }.exit_code(), 1);
    }
}
