//! Command line front end. JSON goes to stdout, summaries to stderr.
//!
//! Exit codes: `0` success, `1` invalid input, `2` failed verification.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::counting::{dim_center, size_sigma_formula};
use crate::cyclic_shift::{
    catalog_json, equiv_classes, EquivClass, Stratum, Twist, BRUTE_FORCE_LIMIT,
};
use crate::error::Error;
use crate::hecke::{t_leq_sigma, verify_center_basis};
use crate::iprod::{class_product, iprod, iprod_factor, iprod_length_law};
use crate::perm::{all_permutations, Permutation};
use crate::shapes::{enumerate_maximal, hooks, Composition};
use crate::stair::{
    hook_properties, permutations_of_type, sigma_class, sigma_class_by_filter, stair_form,
};

#[derive(Parser, Debug)]
#[command(
    name = "hecke-center",
    version,
    about = "Cyclic shift classes and the center of the 0-Hecke algebra"
)]
struct Cli {
    /// Allow exhaustive enumeration of S_n beyond n = 8
    #[arg(long, global = true)]
    force: bool,
    /// Write the JSON result to FILE instead of stdout
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Brute-force catalog of cyclic shift classes of S_n
    Classes {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = TwistArg::Id)]
        twist: TwistArg,
        #[arg(long, value_enum, default_value_t = StratumArg::Max)]
        stratum: StratumArg,
    },
    /// The class Σ_α of a maximal composition
    Sigma {
        #[arg(long)]
        alpha: Composition,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// The stair form σ_α
    Stairform {
        #[arg(long)]
        alpha: Composition,
    },
    /// Dimension of the center of H_n(0)
    Dim {
        #[arg(long)]
        n: usize,
    },
    /// |Σ_α| by closed formula and by construction
    Count {
        #[arg(long)]
        alpha: Composition,
    },
    /// Central elements T_{≤Σ_α}
    Basis {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        alpha: Option<Composition>,
    },
    /// Cross-check constructions against brute force
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TwistArg {
    Id,
    Nu,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum StratumArg {
    Max,
    Min,
    All,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Cycles,
}

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq, Eq)]
enum Suite {
    All,
    Classes,
    Hooks,
    Iprod,
    Center,
}

enum Failure {
    Input(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Inconsistency(_) => Failure::Verification(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

/// Runs the CLI on `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(stdout, "{text}");
            } else {
                let _ = write!(stderr, "{text}");
            }
            return code;
        }
    };
    let result = execute(&cli, stderr).and_then(|(value, failed)| {
        let mut text = serde_json::to_string_pretty(&value).expect("json");
        text.push('\n');
        match &cli.out {
            Some(path) => std::fs::write(path, text)
                .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?,
            None => stdout
                .write_all(text.as_bytes())
                .map_err(|e| Failure::Input(e.to_string()))?,
        }
        match failed {
            Some(msg) => Err(Failure::Verification(msg)),
            None => Ok(()),
        }
    });
    match result {
        Ok(()) => 0,
        Err(Failure::Input(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            1
        }
        Err(Failure::Verification(msg)) => {
            let _ = writeln!(stderr, "verification failed: {msg}");
            2
        }
    }
}

fn gate(n: usize, force: bool) -> Result<(), Failure> {
    if n > BRUTE_FORCE_LIMIT && !force {
        return Err(Failure::Input(format!(
            "n = {n} exceeds {BRUTE_FORCE_LIMIT}; pass --force to enumerate anyway"
        )));
    }
    Ok(())
}

fn big_json(v: &num_bigint::BigUint) -> Value {
    u64::try_from(v).map_or_else(|_| Value::String(v.to_string()), Value::from)
}

type Outcome = Result<(Value, Option<String>), Failure>;

fn execute(cli: &Cli, log: &mut dyn Write) -> Outcome {
    match &cli.command {
        Command::Classes { n, twist, stratum } => {
            gate(*n, cli.force)?;
            let twist = match twist {
                TwistArg::Id => Twist::Id,
                TwistArg::Nu => Twist::Nu,
            };
            let stratum = match stratum {
                StratumArg::Max => Stratum::Max,
                StratumArg::Min => Stratum::Min,
                StratumArg::All => Stratum::All,
            };
            let classes = labeled_classes(*n, twist, stratum)?;
            let _ = writeln!(log, "S_{n}, twist {twist}: {} classes", classes.len());
            Ok((catalog_json(*n, twist, &classes), None))
        }
        Command::Sigma { alpha, format } => {
            let class = sigma_class(alpha)?;
            let _ = writeln!(
                log,
                "Σ_{alpha}: {} elements of length {}",
                class.size(),
                class.length
            );
            match format {
                Format::Json => Ok((class.to_json(), None)),
                Format::Cycles => Ok((
                    Value::from(
                        class
                            .elements
                            .iter()
                            .map(|w| w.to_string())
                            .collect::<Vec<_>>(),
                    ),
                    None,
                )),
            }
        }
        Command::Stairform { alpha } => {
            let sigma = stair_form(alpha)?;
            let _ = writeln!(log, "{sigma}");
            Ok((
                json!({ "alpha": alpha, "cycles": sigma.to_string(), "one_line": sigma }),
                None,
            ))
        }
        Command::Dim { n } => {
            let d = dim_center(*n)?;
            let _ = writeln!(log, "dim Z(H_{n}(0)) = {d}");
            Ok((big_json(&d), None))
        }
        Command::Count { alpha } => {
            alpha.require_maximal()?;
            let formula = match size_sigma_formula(alpha) {
                Ok(v) => Some(v),
                Err(Error::NotAHook(_)) => None,
                Err(e) => return Err(e.into()),
            };
            let built = sigma_class(alpha)?.size();
            let _ = writeln!(log, "|Σ_{alpha}| = {built}");
            let failed = match &formula {
                Some(f) if *f != num_bigint::BigUint::from(built) => {
                    Some(format!("formula {f} vs constructed {built}"))
                }
                _ => None,
            };
            Ok((
                json!({ "alpha": alpha, "formula": formula.as_ref().map(big_json), "constructed": built }),
                failed,
            ))
        }
        Command::Basis { n, alpha } => {
            gate(*n, cli.force)?;
            let alphas = match alpha {
                Some(a) if a.size() != *n => {
                    return Err(Failure::Input(format!("{a} is not a composition of {n}")));
                }
                Some(a) => vec![a.clone()],
                None => enumerate_maximal(*n),
            };
            let mut out = Vec::new();
            for a in &alphas {
                let (x, size) = t_leq_sigma(a)?;
                out.push(x.to_json(a, size));
            }
            let _ = writeln!(log, "{} central elements of H_{n}(0)", out.len());
            Ok((
                if alpha.is_some() {
                    out.remove(0)
                } else {
                    Value::from(out)
                },
                None,
            ))
        }
        Command::Verify { n, suite } => {
            gate(*n, cli.force)?;
            let checks = run_suites(*n, *suite)?;
            let mut failed = Vec::new();
            for (name, ok) in &checks {
                let _ = writeln!(log, "{} {name}", if *ok { "pass" } else { "FAIL" });
                if !ok {
                    failed.push(name.clone());
                }
            }
            let report = json!({
                "n": n,
                "checks": checks.iter().map(|(name, ok)| json!({ "name": name, "ok": ok })).collect::<Vec<_>>(),
                "ok": failed.is_empty(),
            });
            Ok((report, (!failed.is_empty()).then(|| failed.join(", "))))
        }
    }
}

fn labeled_classes(n: usize, twist: Twist, stratum: Stratum) -> Result<Vec<EquivClass>, Failure> {
    let mut classes = equiv_classes(n, twist, stratum);
    let w0 = Permutation::longest(n);
    for alpha in enumerate_maximal(n) {
        let rep = match (twist, stratum) {
            (Twist::Id, Stratum::Max) => stair_form(&alpha)?,
            (Twist::Nu, Stratum::Min) => stair_form(&alpha)?.compose(&w0)?,
            _ => break,
        };
        if let Some(c) = classes.iter_mut().find(|c| c.contains(&rep)) {
            c.alpha = Some(alpha);
        }
    }
    Ok(classes)
}

fn run_suites(n: usize, suite: Suite) -> Result<Vec<(String, bool)>, Failure> {
    let mut checks = Vec::new();
    let wants = |s: Suite| suite == Suite::All || suite == s;
    if wants(Suite::Classes) {
        checks.extend(suite_classes(n)?);
    }
    if wants(Suite::Hooks) {
        checks.extend(suite_hooks(n)?);
    }
    if wants(Suite::Iprod) {
        checks.extend(suite_iprod(n)?);
    }
    if wants(Suite::Center) {
        let report = verify_center_basis(n)?;
        checks.push((format!("center basis of H_{n}(0)"), report.ok()));
    }
    Ok(checks)
}

fn brute_max_classes(n: usize) -> Result<Vec<EquivClass>, Failure> {
    let classes = labeled_classes(n, Twist::Id, Stratum::Max)?;
    Ok(classes)
}

fn suite_classes(n: usize) -> Result<Vec<(String, bool)>, Failure> {
    let classes = brute_max_classes(n)?;
    let mut checks = vec![(
        "stair forms label the max classes bijectively".to_string(),
        classes.len() == enumerate_maximal(n).len() && classes.iter().all(|c| c.alpha.is_some()),
    )];
    for c in &classes {
        let Some(alpha) = &c.alpha else { continue };
        let built = sigma_class(alpha)?;
        let filtered = sigma_class_by_filter(alpha)?;
        let stable = c.elements.iter().all(|w| c.contains(&w.conj_w0()));
        checks.push((
            format!("Σ_{alpha} construction and filter match brute force"),
            built.elements == c.elements && filtered == c.elements,
        ));
        checks.push((format!("Σ_{alpha} is stable under w0 conjugation"), stable));
    }
    let mins = labeled_classes(n, Twist::Nu, Stratum::Min)?;
    let labeled = mins.iter().filter(|c| c.alpha.is_some()).count();
    checks.push((
        "σ_α w0 lie in distinct ν-min classes".to_string(),
        labeled == enumerate_maximal(n).len(),
    ));
    Ok(checks)
}

fn suite_hooks(n: usize) -> Result<Vec<(String, bool)>, Failure> {
    let classes = brute_max_classes(n)?;
    let mut checks = Vec::new();
    for alpha in hooks(n) {
        let brute = classes
            .iter()
            .find(|c| c.alpha.as_ref() == Some(&alpha))
            .map(|c| c.elements.clone());
        let mut filtered = Vec::new();
        for w in permutations_of_type(n, &alpha.sort_to_partition())? {
            if hook_properties(&w, &alpha)? {
                filtered.push(w);
            }
        }
        let built = sigma_class(&alpha)?.elements;
        checks.push((
            format!("hook {alpha}"),
            brute.as_ref() == Some(&filtered) && filtered == built,
        ));
    }
    Ok(checks)
}

fn suite_iprod(n: usize) -> Result<Vec<(String, bool)>, Failure> {
    let classes = brute_max_classes(n)?;
    let mut checks = Vec::new();
    for c in &classes {
        let Some(alpha) = &c.alpha else { continue };
        if alpha.len() < 2 || alpha.parts()[0] % 2 == 1 {
            continue;
        }
        checks.push((
            format!("Σ_{alpha} splits off its even first part"),
            class_product(alpha)? == c.elements,
        ));
    }
    let mut law = true;
    let mut round_trip = true;
    for n1 in 1..=n {
        let n2 = n - n1;
        let seconds: Vec<Permutation> = all_permutations(n2).collect();
        for s1 in all_permutations(n1).filter(Permutation::is_full_cycle) {
            for s2 in &seconds {
                let p = iprod(&s1, s2)?;
                law &= iprod_length_law(&s1, s2)? == p.length();
                round_trip &= iprod_factor(&p, n1, n2)? == Some((s1.clone(), s2.clone()));
            }
        }
    }
    checks.push(("length of inductive products".to_string(), law));
    checks.push(("inductive products factor back".to_string(), round_trip));
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inconsistency_is_a_verification_failure() {
        assert!(matches!(
            Failure::from(Error::Inconsistency("x".into())),
            Failure::Verification(_)
        ));
        assert!(matches!(
            Failure::from(Error::Parse("x".into())),
            Failure::Input(_)
        ));
    }

    #[test]
    fn verify_four_passes() {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        assert_eq!(
            run(
                ["hecke-center", "verify", "--n", "4", "--suite", "all"],
                &mut out,
                &mut err
            ),
            0
        );
        assert!(String::from_utf8(err)
            .unwrap()
            .lines()
            .all(|l| l.starts_with("pass")));
    }
}
