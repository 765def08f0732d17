//! Command-line front end. Every subcommand prints byte-stable output for
//! a fixed flag set: rows come out sorted and rationals render as "p/q" in
//! lowest terms (half-integers always over 2).

use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::json;

use crate::classify::{
    loose_realization_exists, strongly_exceptional, tight_realizations, twisting_realizations,
    ComponentType, Realization, B1_RANGE_NOTE,
};
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::families::{FamilyId, Side};
use crate::selfcheck;
use crate::slopes::{cfrac, count_tight, count_twisting, normalize};
use crate::surgery::SurgeryDiagram;

#[derive(Parser)]
#[command(name = "leghopf", version, about = "Legendrian Hopf link invariants and classification tables")]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
    Tsv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CaseKind {
    Tight,
    Exceptional,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    Se,
    Summary,
}

#[derive(Subcommand)]
enum Command {
    /// Negative continued fraction expansion of a slope below -1
    Cfrac {
        /// Slope as "p/q" or an integer
        #[arg(short, long, allow_hyphen_values = true)]
        slope: Rational,
    },
    /// Count tight structures on the thickened torus with the given
    /// boundary slopes
    Count {
        #[arg(long, allow_hyphen_values = true)]
        t0: i64,
        #[arg(long, allow_hyphen_values = true)]
        t1: i64,
        /// Count at this positive twisting instead of minimal twisting
        #[arg(long, allow_hyphen_values = true)]
        twisting: Option<i64>,
        /// Count up to diffeomorphism instead of isotopy
        #[arg(long, requires = "twisting")]
        diffeo: bool,
    },
    /// Normalize the slope pair and report the transformed second slope
    Normalize {
        #[arg(long, allow_hyphen_values = true)]
        t0: i64,
        #[arg(long, allow_hyphen_values = true)]
        t1: i64,
    },
    /// Invariants of a surgery diagram given as JSON
    Invariants {
        /// Path to the diagram file, or "-" for stdin
        #[arg(short, long)]
        file: String,
    },
    /// Instantiate a named family and compare expected with computed rows
    Family {
        /// One of B1, B2, C2_31, C2_22, C3_T01, C3_T02, C4, D, LUTZ_NEG,
        /// LUTZ_POS
        #[arg(long)]
        id: String,
        #[arg(short, long, allow_hyphen_values = true)]
        k: Option<i64>,
        #[arg(short, long, allow_hyphen_values = true)]
        l: Option<i64>,
        #[arg(short, long, allow_hyphen_values = true)]
        n: Option<i64>,
        #[arg(short, long, allow_hyphen_values = true)]
        m: Option<i64>,
        /// L or R
        #[arg(long)]
        side: Option<Side>,
        #[arg(long)]
        variant: Option<u8>,
        /// Emit the diagram as JSON instead of the row report
        #[arg(long)]
        emit: bool,
    },
    /// List realizations at a slope pair
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        t0: i64,
        #[arg(long, allow_hyphen_values = true)]
        t1: i64,
        /// Force the tight or the exceptional enumeration
        #[arg(long, value_enum)]
        case: Option<CaseKind>,
    },
    /// List realizations with positive twisting
    Twisting {
        #[arg(long, allow_hyphen_values = true)]
        t0: i64,
        #[arg(long, allow_hyphen_values = true)]
        t1: i64,
        #[arg(short, allow_hyphen_values = true)]
        n: i64,
    },
    /// Check whether a loose realization with the given data exists
    Loose {
        #[arg(long, allow_hyphen_values = true)]
        t0: i64,
        #[arg(long, allow_hyphen_values = true)]
        r0: i64,
        #[arg(long, allow_hyphen_values = true)]
        t1: i64,
        #[arg(long, allow_hyphen_values = true)]
        r1: i64,
        /// Ambient d3, a half-integer like "-1/2"
        #[arg(short, long, allow_hyphen_values = true)]
        d: Rational,
    },
    /// Emit a classification table over a slope grid
    Table {
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long, default_value_t = -6, allow_hyphen_values = true)]
        t0_min: i64,
        #[arg(long, default_value_t = 6, allow_hyphen_values = true)]
        t0_max: i64,
        #[arg(long, default_value_t = -6, allow_hyphen_values = true)]
        t1_min: i64,
        #[arg(long, default_value_t = 6, allow_hyphen_values = true)]
        t1_max: i64,
    },
    /// Run the acceptance suite
    Selfcheck,
}

/// Parse argv, execute, and write results; returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let _ = writeln!(
                err,
                "{}",
                json!({"error": "usage", "message": e.to_string()})
            );
            return 2;
        }
    };
    match dispatch(&cli, err) {
        Ok((text, code)) => {
            let _ = write!(out, "{text}");
            code
        }
        Err(e) => {
            let (kind, code) = match e {
                Error::Parse(_)
                | Error::BadParams(_)
                | Error::OutOfRange(_)
                | Error::NotHalfInteger(_) => ("usage", 2),
                _ => ("failure", 1),
            };
            let _ = writeln!(err, "{}", json!({"error": kind, "message": e.to_string()}));
            code
        }
    }
}

fn dispatch(cli: &Cli, err: &mut dyn Write) -> Result<(String, i32)> {
    let fmt = cli.format;
    let text = match &cli.command {
        Command::Cfrac { slope } => {
            let c = cfrac(slope)?;
            match fmt {
                Format::Human => format!("{c} N={}\n", c.tight_count()),
                Format::Json => {
                    let entries: Vec<String> =
                        c.entries().iter().map(BigInt::to_string).collect();
                    format!(
                        "{}\n",
                        json!({"entries": entries, "count": c.tight_count().to_string()})
                    )
                }
                Format::Tsv => format!("{c}\t{}\n", c.tight_count()),
            }
        }
        Command::Count {
            t0,
            t1,
            twisting,
            diffeo,
        } => {
            let value = match twisting {
                Some(n) => count_twisting(*t0, *t1, *n, *diffeo)?.to_string(),
                None => count_tight(*t0, *t1)?.to_string(),
            };
            match fmt {
                Format::Json => format!("{}\n", json!({ "count": value })),
                _ => format!("{value}\n"),
            }
        }
        Command::Normalize { t0, t1 } => {
            let norm = normalize(*t0, *t1)?;
            match fmt {
                Format::Human => format!(
                    "s1' = {}\nmatrix = {}\niterations = {}\n",
                    norm.s1, norm.matrix, norm.iterations
                ),
                Format::Json => format!(
                    "{}\n",
                    json!({
                        "s1": norm.s1,
                        "matrix": [
                            [norm.matrix.a.to_string(), norm.matrix.b.to_string()],
                            [norm.matrix.c.to_string(), norm.matrix.d.to_string()],
                        ],
                        "iterations": norm.iterations,
                    })
                ),
                Format::Tsv => format!("{}\t{}\t{}\n", norm.s1, norm.matrix, norm.iterations),
            }
        }
        Command::Invariants { file } => {
            let raw = if file == "-" {
                let mut buf = String::new();
                std::io::stdin()
                    .read_to_string(&mut buf)
                    .map_err(|e| Error::Parse(format!("reading stdin: {e}")))?;
                buf
            } else {
                std::fs::read_to_string(file)
                    .map_err(|e| Error::Parse(format!("reading {file}: {e}")))?
            };
            let d = SurgeryDiagram::from_json(&raw)?;
            d.parity_check()?;
            render_invariants(&d, fmt)?
        }
        Command::Family {
            id,
            k,
            l,
            n,
            m,
            side,
            variant,
            emit,
        } => {
            let fid = build_family_id(id, *k, *l, *n, *m, *side, *variant)?;
            let inst = fid.instantiate()?;
            if *emit {
                format!("{}\n", inst.diagram.to_json())
            } else {
                inst.verify()?;
                render_family(&fid, &inst, fmt)?
            }
        }
        Command::Classify { t0, t1, case } => {
            let kind = case.unwrap_or(if *t0 < 0 && *t1 < 0 {
                CaseKind::Tight
            } else {
                CaseKind::Exceptional
            });
            let rows = match kind {
                CaseKind::Tight => tight_realizations(*t0, *t1)?,
                CaseKind::Exceptional => {
                    if mixed_sign_wide(*t0, *t1) {
                        let _ = writeln!(err, "note: {B1_RANGE_NOTE}");
                    }
                    strongly_exceptional(*t0, *t1)
                }
            };
            render_rows(&rows, fmt)
        }
        Command::Twisting { t0, t1, n } => {
            let rows = twisting_realizations(*t0, *t1, *n)?;
            render_rows(&rows, fmt)
        }
        Command::Loose { t0, r0, t1, r1, d } => {
            let rows = if loose_realization_exists(*t0, *r0, *t1, *r1, d)? {
                vec![Realization {
                    t0: *t0,
                    r0: *r0,
                    t1: *t1,
                    r1: *r1,
                    ambient_d3: d.clone(),
                    twisting: 0,
                    type0: ComponentType::Loose,
                    type1: ComponentType::Loose,
                }]
            } else {
                Vec::new()
            };
            render_rows(&rows, fmt)
        }
        Command::Table {
            which,
            t0_min,
            t0_max,
            t1_min,
            t1_max,
        } => {
            let mut rows = Vec::new();
            for t0 in *t0_min..=*t0_max {
                for t1 in *t1_min..=*t1_max {
                    if *which == Which::Summary && (t0 < 1 || t1 < 1) {
                        continue;
                    }
                    rows.extend(strongly_exceptional(t0, t1));
                }
            }
            rows.sort();
            render_rows(&rows, fmt)
        }
        Command::Selfcheck => {
            let results = selfcheck::run_all();
            let failed = results.iter().filter(|c| !c.passed).count();
            let text = match fmt {
                Format::Json => {
                    let items: Vec<serde_json::Value> = results
                        .iter()
                        .map(|c| {
                            if c.passed {
                                json!({"name": c.name, "passed": true})
                            } else {
                                json!({"name": c.name, "passed": false, "detail": c.detail})
                            }
                        })
                        .collect();
                    format!("{}\n", json!(items))
                }
                _ => {
                    let mut s = String::new();
                    for c in &results {
                        if c.passed {
                            s.push_str(&format!("{}: pass\n", c.name));
                        } else {
                            s.push_str(&format!("{}: FAIL ({})\n", c.name, c.detail));
                        }
                    }
                    s
                }
            };
            if failed > 0 {
                let _ = writeln!(
                    err,
                    "{}",
                    json!({"error": "failure", "message": format!("{failed} criteria failed")})
                );
                return Ok((text, 1));
            }
            text
        }
    };
    Ok((text, 0))
}

/// True for slope pairs whose exceptional enumeration couples the rotation
/// range to a sum decomposition rather than a plain arithmetic range.
fn mixed_sign_wide(t0: i64, t1: i64) -> bool {
    (t0 < 0 && t1 >= 2) || (t1 < 0 && t0 >= 2)
}

fn render_rows(rows: &[Realization], fmt: Format) -> String {
    match fmt {
        Format::Human => {
            if rows.is_empty() {
                "none\n".into()
            } else {
                rows.iter().map(|r| format!("{r}\n")).collect()
            }
        }
        Format::Json => format!("{}\n", serde_json::to_string(rows).expect("serializable rows")),
        Format::Tsv => rows
            .iter()
            .map(|r| {
                format!(
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
                    r.t0, r.r0, r.t1, r.r1, r.ambient_d3, r.type0, r.type1, r.twisting
                )
            })
            .collect(),
    }
}

fn render_invariants(d: &SurgeryDiagram, fmt: Format) -> Result<String> {
    let c = d.num_components();
    let mut tb = Vec::with_capacity(c);
    let mut rot = Vec::with_capacity(c);
    for i in 0..c {
        tb.push(d.tb_after(i)?);
        rot.push(d.rot_after(i)?);
    }
    let d3 = d.d3_after()?;
    let mut lk = Vec::new();
    for i in 0..c {
        for j in i + 1..c {
            lk.push((i, j, d.lk_after(i, j)?));
        }
    }
    Ok(match fmt {
        Format::Human => {
            let mut s = String::new();
            for i in 0..c {
                s.push_str(&format!("component {i}: tb = {}, rot = {}\n", tb[i], rot[i]));
            }
            for (i, j, v) in &lk {
                s.push_str(&format!("lk({i},{j}) = {v}\n"));
            }
            s.push_str(&format!("d3 = {d3}\nparity: ok\n"));
            s
        }
        Format::Json => format!(
            "{}\n",
            json!({
                "components": (0..c)
                    .map(|i| json!({"tb": tb[i], "rot": rot[i]}))
                    .collect::<Vec<_>>(),
                "lk": lk
                    .iter()
                    .map(|(i, j, v)| json!({"i": i, "j": j, "value": v}))
                    .collect::<Vec<_>>(),
                "d3": d3,
                "parity": "ok",
            })
        ),
        Format::Tsv => {
            let mut s = String::new();
            for i in 0..c {
                s.push_str(&format!("tb{i}\t{}\nrot{i}\t{}\n", tb[i], rot[i]));
            }
            for (i, j, v) in &lk {
                s.push_str(&format!("lk{i}{j}\t{v}\n"));
            }
            s.push_str(&format!("d3\t{d3}\nparity\tok\n"));
            s
        }
    })
}

fn render_family(
    id: &FamilyId,
    inst: &crate::families::FamilyInstance,
    fmt: Format,
) -> Result<String> {
    if inst.diagram.num_components() == 0 {
        // twist diagrams carry no link, only the ambient invariant
        let d3 = inst.diagram.d3_after()?;
        return Ok(match fmt {
            Format::Human => format!("{id}\nd3 = {d3}\nverify: ok\n"),
            Format::Json => format!(
                "{}\n",
                json!({"id": id.to_string(), "d3": d3, "verified": true})
            ),
            Format::Tsv => format!("d3\t{d3}\n"),
        });
    }
    let slopes = id.slopes();
    let expected = inst.expected();
    let computed = inst.computed_rows()?;
    Ok(match fmt {
        Format::Human => {
            let mut s = format!("{id}\n");
            if let Ok((t0, t1)) = &slopes {
                s.push_str(&format!("slopes: ({t0}, {t1})\n"));
            }
            if let Ok(rows) = &expected {
                for r in rows {
                    s.push_str(&format!(
                        "expected: ({},{}) d3={} {}/{}\n",
                        r.r0, r.r1, r.d3, r.type0, r.type1
                    ));
                }
            }
            for r in &computed {
                s.push_str(&format!("computed: {r}\n"));
            }
            s.push_str("verify: ok\n");
            s
        }
        Format::Json => {
            let slopes_json = match &slopes {
                Ok((t0, t1)) => json!([t0, t1]),
                Err(_) => serde_json::Value::Null,
            };
            format!(
                "{}\n",
                json!({
                    "id": id.to_string(),
                    "slopes": slopes_json,
                    "expected": expected.ok(),
                    "computed": computed,
                    "verified": true,
                })
            )
        }
        Format::Tsv => render_rows(&computed, Format::Tsv),
    })
}

fn build_family_id(
    id: &str,
    k: Option<i64>,
    l: Option<i64>,
    n: Option<i64>,
    m: Option<i64>,
    side: Option<Side>,
    variant: Option<u8>,
) -> Result<FamilyId> {
    let need = |v: Option<i64>, flag: &str| {
        v.ok_or_else(|| Error::BadParams(format!("family {id} needs --{flag}")))
    };
    let need_side =
        || side.ok_or_else(|| Error::BadParams(format!("family {id} needs --side L|R")));
    let need_variant =
        || variant.ok_or_else(|| Error::BadParams(format!("family {id} needs --variant")));
    Ok(match id.to_ascii_uppercase().as_str() {
        "B1" => FamilyId::B1 {
            k: need(k, "k")?,
            l: need(l, "l")?,
            n: need(n, "n")?,
        },
        "B2" => FamilyId::B2 {
            k: need(k, "k")?,
            l: need(l, "l")?,
        },
        "C2_31" => FamilyId::C2_31 { side: need_side()? },
        "C2_22" => FamilyId::C2_22 { side: need_side()? },
        "C3_T01" => FamilyId::C3T01 {
            side: need_side()?,
            n: need(n, "n")?,
        },
        "C3_T02" => FamilyId::C3T02 {
            variant: need_variant()?,
            n: need(n, "n")?,
        },
        "C4" => FamilyId::C4 {
            variant: need_variant()?,
            n: need(n, "n")?,
            m: need(m, "m")?,
        },
        "D" => FamilyId::D { n: need(n, "n")? },
        "LUTZ_NEG" => FamilyId::LutzNeg,
        "LUTZ_POS" => FamilyId::LutzPos,
        other => {
            return Err(Error::BadParams(format!(
                "unknown family id {other}, expected B1, B2, C2_31, C2_22, C3_T01, C3_T02, C4, D, LUTZ_NEG, or LUTZ_POS"
            )))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("leghopf").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn count_and_cfrac_examples() {
        let (code, out, _) = run_capture(&["count", "--t0", "3", "--t1", "1"]);
        assert_eq!((code, out.as_str()), (0, "3\n"));

        let (code, out, _) = run_capture(&["cfrac", "-s", "-2/1"]);
        assert_eq!((code, out.as_str()), (0, "[-2] N=2\n"));

        let (code, out, _) = run_capture(&["count", "--t0", "1", "--t1", "1"]);
        assert_eq!((code, out.as_str()), (0, "integral family\n"));
    }

    #[test]
    fn classify_examples() {
        let (code, out, _) = run_capture(&["classify", "--t0", "1", "--t1", "1"]);
        assert_eq!((code, out.as_str()), (0, "(1,0,1,0) d3=1/2 exc/exc\n"));

        let (code, out, err) = run_capture(&["classify", "--t0", "-2", "--t1", "3"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 6);
        assert!(err.starts_with("note: "), "{err}");

        let (code, out, _) = run_capture(&["classify", "--t0", "-1", "--t1", "-2"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 2);
        assert!(out.contains("d3=-1/2"));
    }

    #[test]
    fn twisting_and_loose() {
        let (code, out, _) = run_capture(&["twisting", "--t0", "2", "--t1", "1", "-n", "1"]);
        assert_eq!(code, 0);
        for line in out.lines() {
            assert!(line.ends_with("twist=1"), "{line}");
        }

        let (code, out, _) = run_capture(&[
            "loose", "--t0", "-3", "--r0", "0", "--t1", "2", "--r1", "1", "-d", "5/2",
        ]);
        assert_eq!(code, 0);
        assert_eq!(out, "(-3,0,2,1) d3=5/2 loose/loose\n");

        let (code, out, _) = run_capture(&[
            "loose", "--t0", "-3", "--r0", "1", "--t1", "2", "--r1", "1", "-d", "5/2",
        ]);
        assert_eq!((code, out.as_str()), (0, "none\n"));

        let (code, _, err) = run_capture(&[
            "loose", "--t0", "-3", "--r0", "0", "--t1", "2", "--r1", "1", "-d", "1/3",
        ]);
        assert_eq!(code, 2);
        assert!(err.contains("usage"));
    }

    #[test]
    fn family_report_and_emit() {
        let (code, out, _) = run_capture(&[
            "family", "--id", "B1", "--k", "1", "--l", "2", "--n", "0",
        ]);
        assert_eq!(code, 0);
        assert!(out.contains("verify: ok"), "{out}");
        assert!(out.contains("slopes: (-3, 2)"), "{out}");

        let (code, out, _) = run_capture(&[
            "family", "--id", "D", "--n", "5", "--emit",
        ]);
        assert_eq!(code, 0);
        let d = SurgeryDiagram::from_json(&out).unwrap();
        assert_eq!(d.num_knots(), 6);

        let (code, _, err) = run_capture(&["family", "--id", "B1", "--k", "1"]);
        assert_eq!(code, 2);
        assert!(err.contains("needs --l"), "{err}");

        let (code, _, err) = run_capture(&["family", "--id", "Q7"]);
        assert_eq!(code, 2);
        assert!(err.contains("unknown family id"), "{err}");
    }

    #[test]
    fn table_rows_union_classify() {
        let (code, out, _) = run_capture(&[
            "table", "--which", "se", "--t0-min", "-2", "--t0-max", "2", "--t1-min", "-2",
            "--t1-max", "2",
        ]);
        assert_eq!(code, 0);
        let mut want: Vec<String> = Vec::new();
        for t0 in -2..=2 {
            for t1 in -2..=2 {
                for r in strongly_exceptional(t0, t1) {
                    want.push(r.to_string());
                }
            }
        }
        want.sort();
        let mut got: Vec<String> = out.lines().map(String::from).collect();
        got.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn format_switches() {
        let (code, out, _) = run_capture(&[
            "classify", "--t0", "1", "--t1", "1", "--format", "json",
        ]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v[0]["t0"], 1);
        assert_eq!(v[0]["type0"], "exceptional");

        let (code, out, _) = run_capture(&[
            "classify", "--t0", "1", "--t1", "1", "--format", "tsv",
        ]);
        assert_eq!(code, 0);
        assert_eq!(out, "1\t0\t1\t0\t1/2\texc\texc\t0\n");

        let (code, out, _) = run_capture(&["normalize", "--t0", "-1", "--t1", "1"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("s1' = -3\n"), "{out}");
    }

    #[test]
    fn bad_flags_exit_two() {
        let (code, _, err) = run_capture(&["count", "--t0", "3"]);
        assert_eq!(code, 2);
        assert!(err.contains("usage"), "{err}");

        let (code, _, err) = run_capture(&["count", "--t0", "3", "--t1", "1", "--diffeo"]);
        assert_eq!(code, 2);
        assert!(err.contains("usage"), "{err}");

        let (code, _, err) = run_capture(&["twisting", "--t0", "2", "--t1", "1", "-n", "0"]);
        assert_eq!(code, 2);
        assert!(err.contains("usage"), "{err}");
    }
}
