//! The `lacuna` command line: exact Stirling and Adelberg values, the
//! polynomial tables, and verification sweeps emitting TSV or JSON rows.
//!
//! Exit status: 0 when everything requested holds, 1 when any verification
//! fails or a computation rejects its inputs, 2 on usage errors. Sweeps
//! iterate parameter tuples in canonical nested order, so output is
//! byte-identical across runs.

use std::io::Write;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use num_integer::Integer as _;

use crate::adelberg::{a_poly, a_value, b_poly, b_value};
use crate::congruence::{
    classical_check, cong1_n_report, cong1_report, cong2_report, cong3_report, cor34_report,
    identity33_report, lacunary_rewrite_check, ClassicalKind, ClassicalParams, CongruenceParams,
    CongruenceReport, RewriteForm,
};
use crate::exactnum::{is_prime, rat_string, Int};
use crate::stirling::{stirling1, stirling1_mod_p, stirling2};

/// Inclusive integer range flag: "a..b" or a single value "a".
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RangeArg {
    pub lo: i64,
    pub hi: i64,
}

impl RangeArg {
    fn values(&self) -> std::ops::RangeInclusive<i64> {
        self.lo..=self.hi
    }
}

fn parse_range(s: &str) -> Result<RangeArg, String> {
    let parse_bound = |t: &str| {
        t.trim()
            .parse::<i64>()
            .map_err(|_| format!("invalid integer '{}' in range", t.trim()))
    };
    if let Some((a, b)) = s.split_once("..") {
        let lo = parse_bound(a)?;
        let hi = parse_bound(b)?;
        if lo > hi {
            return Err(format!("empty range '{s}'"));
        }
        Ok(RangeArg { lo, hi })
    } else {
        let v = parse_bound(s)?;
        Ok(RangeArg { lo: v, hi: v })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Tsv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    A,
    B,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ClassicalKindArg {
    Glaisher,
    Fleck,
    Wan,
    Suntauraso,
}

impl From<ClassicalKindArg> for ClassicalKind {
    fn from(k: ClassicalKindArg) -> Self {
        match k {
            ClassicalKindArg::Glaisher => ClassicalKind::Glaisher,
            ClassicalKindArg::Fleck => ClassicalKind::Fleck,
            ClassicalKindArg::Wan => ClassicalKind::Wan,
            ClassicalKindArg::Suntauraso => ClassicalKind::SunTauraso,
        }
    }
}

#[derive(Parser)]
#[command(
    name = "lacuna",
    version,
    about = "Exact Stirling/Adelberg computations and lacunary binomial-sum congruence verification"
)]
struct Cli {
    /// Output format for verification sweeps.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Tsv)]
    format: OutputFormat,
    /// Error out (instead of skipping) when a prime-valued range contains a
    /// composite.
    #[arg(long, global = true)]
    strict: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a Stirling number: kind 1 (cycle) or 2 (partition).
    ///
    /// With --mod P and kind 1 the value is computed through the prime-power
    /// closed form without touching the exact number; with kind 2 the exact
    /// value is reduced.
    Stirling {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        kind: u8,
        /// Reduce modulo this prime (kind 1) or positive integer (kind 2).
        #[arg(long = "mod")]
        modulus: Option<i64>,
        #[arg(allow_hyphen_values = true)]
        n: i64,
        #[arg(allow_hyphen_values = true)]
        k: i64,
    },
    /// Adelberg polynomial operations.
    Adelberg {
        #[command(subcommand)]
        cmd: AdelbergCmd,
    },
    /// Print a polynomial table: 1 = B family (u <= 4), 2 = A family (u <= 3).
    Table {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=2))]
        which: u8,
    },
    /// Run a verification sweep over parameter ranges ("a..b" inclusive or a
    /// single value). Prime-valued ranges silently skip composites.
    Verify {
        #[command(subcommand)]
        target: VerifyTarget,
    },
}

#[derive(Subcommand)]
enum AdelbergCmd {
    /// Print the canonical expanded polynomial A_u or B_u.
    Poly {
        #[arg(long, value_enum, ignore_case = true)]
        family: Family,
        #[arg(long)]
        u: i64,
    },
    /// Evaluate A_u(x, y, m) or B_u(y, m) exactly at integer arguments.
    Eval {
        #[arg(long, value_enum, ignore_case = true)]
        family: Family,
        #[arg(long)]
        u: i64,
        #[arg(long, allow_hyphen_values = true)]
        x: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        y: i64,
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
    },
}

#[derive(Subcommand)]
enum VerifyTarget {
    /// First congruence family. Use --m and --s for the (m, l, s) form, or
    /// --n for the n-indexed corollary (p not dividing n).
    Cong1 {
        #[arg(long, value_parser = parse_range)]
        p: RangeArg,
        #[arg(long, value_parser = parse_range)]
        l: RangeArg,
        #[arg(long, value_parser = parse_range)]
        m: Option<RangeArg>,
        #[arg(long, value_parser = parse_range)]
        s: Option<RangeArg>,
        #[arg(long, value_parser = parse_range)]
        n: Option<RangeArg>,
    },
    /// Second congruence family with Adelberg-polynomial quotients.
    Cong2 {
        #[arg(long, value_parser = parse_range)]
        p: RangeArg,
        #[arg(long, value_parser = parse_range)]
        m: RangeArg,
        #[arg(long, value_parser = parse_range)]
        l: RangeArg,
        #[arg(long, value_parser = parse_range)]
        s: RangeArg,
    },
    /// Third congruence family with scaled Adelberg quotients.
    Cong3 {
        #[arg(long, value_parser = parse_range)]
        p: RangeArg,
        #[arg(long, value_parser = parse_range)]
        m: RangeArg,
        #[arg(long, value_parser = parse_range)]
        l: RangeArg,
        #[arg(long, value_parser = parse_range)]
        s: RangeArg,
    },
    /// Mixed-kind Stirling identity (holds for any p >= 1, prime or not).
    Identity33 {
        #[arg(long, value_parser = parse_range)]
        p: RangeArg,
        #[arg(long, value_parser = parse_range)]
        n: RangeArg,
        #[arg(long, value_parser = parse_range)]
        k: RangeArg,
    },
    /// First-kind Stirling corollary congruence.
    Cor34 {
        #[arg(long, value_parser = parse_range)]
        p: RangeArg,
        #[arg(long, value_parser = parse_range)]
        n: RangeArg,
        #[arg(long, value_parser = parse_range)]
        k: RangeArg,
    },
    /// Classical cross-check congruences.
    Classical {
        #[arg(long, value_enum, ignore_case = true)]
        kind: ClassicalKindArg,
        #[arg(long, value_parser = parse_range)]
        p: RangeArg,
        #[arg(long, value_parser = parse_range)]
        s: RangeArg,
        #[arg(long, value_parser = parse_range)]
        h: Option<RangeArg>,
        #[arg(long, value_parser = parse_range)]
        l: Option<RangeArg>,
        #[arg(long, value_parser = parse_range)]
        q: Option<RangeArg>,
    },
    /// Lacunary rewrites: --form 1 (lower index fixed) or 2 (upper index fixed).
    Rewrite {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        form: u8,
        #[arg(long, value_parser = parse_range)]
        p: RangeArg,
        #[arg(long, value_parser = parse_range)]
        m: RangeArg,
        #[arg(long, value_parser = parse_range)]
        l: RangeArg,
        #[arg(long, value_parser = parse_range)]
        r: RangeArg,
    },
}

enum Failure {
    Usage(String),
    Row(String),
    Io,
}

impl From<std::io::Error> for Failure {
    fn from(_: std::io::Error) -> Self {
        Failure::Io
    }
}

impl From<crate::Error> for Failure {
    fn from(e: crate::Error) -> Self {
        Failure::Row(e.to_string())
    }
}

/// Runs the CLI on the given arguments (without the program name), writing
/// results to `out`. Returns the process exit status.
pub fn run<I, S>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let mut argv: Vec<String> = vec!["lacuna".to_string()];
    argv.extend(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    eprint!("{e}");
                    2
                }
            };
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(Failure::Row(msg)) => {
            eprintln!("error: {msg}");
            1
        }
        Err(Failure::Io) => 1,
    }
}

/// The rows of table 1 (B family, u = 0..4) or table 2 (A family, u = 0..3),
/// one tab-separated "u, polynomial" line each.
pub fn render_table(which: u8) -> crate::Result<String> {
    let mut s = String::new();
    match which {
        1 => {
            for u in 0..=4 {
                s.push_str(&format!("{u}\t{}\n", b_poly(u)?.canonical_string()));
            }
        }
        2 => {
            for u in 0..=3 {
                s.push_str(&format!("{u}\t{}\n", a_poly(u)?.canonical_string()));
            }
        }
        _ => unreachable!("validated by clap"),
    }
    Ok(s)
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    match cli.command {
        Command::Stirling {
            kind,
            modulus,
            n,
            k,
        } => {
            let value = match (kind, modulus) {
                (1, None) => stirling1(n, k)?,
                (2, None) => stirling2(n, k)?,
                (1, Some(p)) => stirling1_mod_p(n, k, p)?,
                (2, Some(p)) => {
                    if p < 1 {
                        return Err(Failure::Row(format!("modulus {p} must be positive")));
                    }
                    stirling2(n, k)?.mod_floor(&Int::from(p))
                }
                _ => unreachable!("validated by clap"),
            };
            writeln!(out, "{value}")?;
            Ok(0)
        }
        Command::Adelberg { cmd } => match cmd {
            AdelbergCmd::Poly { family, u } => {
                let poly = match family {
                    Family::A => a_poly(u)?,
                    Family::B => b_poly(u)?,
                };
                writeln!(out, "{}", poly.canonical_string())?;
                Ok(0)
            }
            AdelbergCmd::Eval { family, u, x, y, m } => {
                let value = match family {
                    Family::A => {
                        let x = x.ok_or_else(|| {
                            Failure::Usage("family A evaluation needs --x".to_string())
                        })?;
                        a_value(u, x, y, m)?
                    }
                    Family::B => b_value(u, y, m)?,
                };
                writeln!(out, "{}", rat_string(&value))?;
                Ok(0)
            }
        },
        Command::Table { which } => {
            write!(out, "{}", render_table(which)?)?;
            Ok(0)
        }
        Command::Verify { target } => run_sweep(target, cli.format, cli.strict, out),
    }
}

fn prime_values(range: &RangeArg, strict: bool) -> Result<Vec<i64>, Failure> {
    let mut primes = Vec::new();
    for v in range.values() {
        if is_prime(v) {
            primes.push(v);
        } else if strict {
            return Err(Failure::Usage(format!("{v} in the --p range is not prime")));
        }
    }
    if primes.is_empty() {
        return Err(Failure::Usage("no primes in the --p range".to_string()));
    }
    Ok(primes)
}

fn run_sweep(
    target: VerifyTarget,
    format: OutputFormat,
    strict: bool,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let mut all_hold = true;
    let mut emit = |report: &CongruenceReport, out: &mut dyn Write| -> Result<(), Failure> {
        all_hold &= report.holds;
        let line = match format {
            OutputFormat::Tsv => report.tsv_row(),
            OutputFormat::Json => report.json_row(),
        };
        writeln!(out, "{line}")?;
        Ok(())
    };
    match target {
        VerifyTarget::Cong1 { p, l, m, s, n } => match (m, s, n) {
            (Some(m), Some(s), None) => {
                for p in prime_values(&p, strict)? {
                    for mv in m.values() {
                        for lv in l.values() {
                            if lv < 0 || lv >= mv {
                                continue;
                            }
                            for sv in s.values() {
                                if sv < 0 {
                                    continue;
                                }
                                let rep = cong1_report(&CongruenceParams {
                                    p,
                                    m: mv,
                                    l: lv,
                                    s: sv,
                                })?;
                                emit(&rep, out)?;
                            }
                        }
                    }
                }
            }
            (None, None, Some(n)) => {
                for p in prime_values(&p, strict)? {
                    for nv in n.values() {
                        if nv <= 0 || nv % p == 0 {
                            continue;
                        }
                        for lv in l.values() {
                            if lv < 0 {
                                continue;
                            }
                            let rep = cong1_n_report(p, nv, lv)?;
                            emit(&rep, out)?;
                        }
                    }
                }
            }
            _ => {
                return Err(Failure::Usage(
                    "verify cong1 needs either --m and --s, or --n".to_string(),
                ));
            }
        },
        VerifyTarget::Cong2 { p, m, l, s } => {
            for p in prime_values(&p, strict)? {
                for mv in m.values() {
                    if mv < 0 {
                        continue;
                    }
                    for lv in l.values() {
                        if lv < 0 {
                            continue;
                        }
                        for sv in s.values() {
                            if sv <= 0 || sv >= p {
                                continue;
                            }
                            let rep = cong2_report(&CongruenceParams {
                                p,
                                m: mv,
                                l: lv,
                                s: sv,
                            })?;
                            emit(&rep, out)?;
                        }
                    }
                }
            }
        }
        VerifyTarget::Cong3 { p, m, l, s } => {
            for p in prime_values(&p, strict)? {
                for mv in m.values() {
                    if mv < 0 {
                        continue;
                    }
                    for lv in l.values() {
                        if lv < 0 || lv > mv {
                            continue;
                        }
                        for sv in s.values() {
                            if sv <= 0 || sv >= p {
                                continue;
                            }
                            let rep = cong3_report(&CongruenceParams {
                                p,
                                m: mv,
                                l: lv,
                                s: sv,
                            })?;
                            emit(&rep, out)?;
                        }
                    }
                }
            }
        }
        VerifyTarget::Identity33 { p, n, k } => {
            for pv in p.values() {
                if pv < 1 {
                    continue;
                }
                for nv in n.values() {
                    if nv < pv - 1 {
                        continue;
                    }
                    for kv in k.values() {
                        if kv < 0 {
                            continue;
                        }
                        let rep = identity33_report(pv, nv, kv)?;
                        emit(&rep, out)?;
                    }
                }
            }
        }
        VerifyTarget::Cor34 { p, n, k } => {
            for p in prime_values(&p, strict)? {
                for nv in n.values() {
                    if nv < p - 1 {
                        continue;
                    }
                    for kv in k.values() {
                        if kv < 0 {
                            continue;
                        }
                        let rep = cor34_report(p, nv, kv)?;
                        emit(&rep, out)?;
                    }
                }
            }
        }
        VerifyTarget::Classical {
            kind,
            p,
            s,
            h,
            l,
            q,
        } => {
            let kind = ClassicalKind::from(kind);
            let need = |flag: Option<RangeArg>, name: &str| {
                flag.ok_or_else(|| {
                    Failure::Usage(format!(
                        "verify classical --kind {} needs --{name}",
                        kind.name()
                    ))
                })
            };
            let zero = RangeArg { lo: 0, hi: 0 };
            let (h, l, q) = match kind {
                ClassicalKind::Glaisher => (need(h, "h")?, need(l, "l")?, q.unwrap_or(zero)),
                ClassicalKind::Fleck => (need(h, "h")?, l.unwrap_or(zero), need(q, "q")?),
                ClassicalKind::Wan => (need(h, "h")?, need(l, "l")?, need(q, "q")?),
                ClassicalKind::SunTauraso => (need(h, "h")?, l.unwrap_or(zero), need(q, "q")?),
            };
            for p in prime_values(&p, strict)? {
                for sv in s.values() {
                    if sv <= 0 || sv >= p {
                        continue;
                    }
                    for hv in h.values() {
                        if hv < 0 || hv >= p {
                            continue;
                        }
                        for lv in l.values() {
                            if lv < 0 {
                                continue;
                            }
                            for qv in q.values() {
                                if qv < 0 {
                                    continue;
                                }
                                let rep = classical_check(
                                    kind,
                                    &ClassicalParams {
                                        p,
                                        s: sv,
                                        h: hv,
                                        l: lv,
                                        q: qv,
                                    },
                                )?;
                                emit(&rep, out)?;
                            }
                        }
                    }
                }
            }
        }
        VerifyTarget::Rewrite { form, p, m, l, r } => {
            let form = if form == 1 {
                RewriteForm::FleckLike
            } else {
                RewriteForm::AdelbergLike
            };
            for p in prime_values(&p, strict)? {
                for mv in m.values() {
                    if mv < 0 {
                        continue;
                    }
                    for lv in l.values() {
                        if lv < 0 {
                            continue;
                        }
                        if form == RewriteForm::FleckLike && mv >= (p - 1) * (lv + 1) {
                            continue;
                        }
                        for rv in r.values() {
                            if rv < 0 {
                                continue;
                            }
                            if form == RewriteForm::AdelbergLike && rv >= p {
                                continue;
                            }
                            let rep = lacunary_rewrite_check(form, p, mv, lv, rv)?;
                            emit(&rep, out)?;
                        }
                    }
                }
            }
        }
    }
    Ok(if all_hold { 0 } else { 1 })
}
