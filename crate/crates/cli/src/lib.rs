//! Command-line front end: argument grammar, dispatch and output formatting.

mod expr;

use std::io::Write;

use clap::error::ErrorKind;
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use num_rational::Rational64;
use serde_json::{json, Value};
use verlinde::charring::{ideal_member, iota_shriek};
use verlinde::fusion::{fuse, horn_support, s_matrix};
use verlinde::noncompact::dirac_induce;
use verlinde::steinberg::{
    classify_fiber_sl2c, classify_fiber_sl2r, cover_member_sl2r, FiberDescriptor,
};
use verlinde::{CharElement, Error, FusionContext, FusionElement, RootSystem, Weight};

pub use expr::{parse_char_expr, parse_rational};

#[derive(Debug, Parser)]
#[command(
    name = "verlinde",
    version,
    about = "Exact Verlinde fusion rings and related data"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Args)]
struct Level {
    /// Type string such as A1, A2, G2 (case-insensitive).
    #[arg(long = "type", value_name = "T")]
    kind: String,
    /// Fusion level ℓ = k − h∨.
    #[arg(long, value_name = "L")]
    level: u32,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the level-ℓ basis Λ*_ℓ.
    Weights {
        #[command(flatten)]
        level: Level,
    },
    /// Fusion product of two basis weights.
    Fuse {
        #[command(flatten)]
        level: Level,
        #[arg(allow_hyphen_values = true)]
        a: Weight,
        #[arg(allow_hyphen_values = true)]
        b: Weight,
    },
    /// Full structure-constant tensor.
    Table {
        #[command(flatten)]
        level: Level,
    },
    /// Support of σ_a ⋆ σ_b.
    Horn {
        #[command(flatten)]
        level: Level,
        #[arg(allow_hyphen_values = true)]
        a: Weight,
        #[arg(allow_hyphen_values = true)]
        b: Weight,
    },
    /// Dirac induction label μ + ρ at twist level k.
    Dirac {
        #[arg(long = "type", value_name = "T")]
        kind: String,
        #[arg(long, value_name = "K")]
        twist: u32,
        #[arg(allow_hyphen_values = true)]
        a: Weight,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Membership of a character expression such as "[4] + [0]" in the Verlinde ideal.
    Ideal {
        #[command(flatten)]
        level: Level,
        /// Tokens are joined with spaces, so the expression may be quoted or not.
        #[arg(required = true, num_args = 1.., allow_hyphen_values = true)]
        expr: Vec<String>,
    },
    /// Unitary modular S-matrix (floating point).
    Smatrix {
        #[command(flatten)]
        level: Level,
    },
    /// Trace-map fibers of SL(2,ℝ) and SL(2,ℂ).
    Steinberg {
        #[command(subcommand)]
        group: SteinbergGroup,
    },
    /// Alcove position of the conjugacy class C_μ.
    Alcove {
        #[command(flatten)]
        level: Level,
        #[arg(allow_hyphen_values = true)]
        a: Weight,
    },
}

#[derive(Debug, Subcommand)]
enum SteinbergGroup {
    Sl2r {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
        trace: Rational64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    Sl2c {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
        trace: Rational64,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational, default_value = "0")]
        imag: Rational64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

/// Runs the CLI on `args` (including the program name) and returns the
/// process exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
                if !text.contains("Usage:") {
                    let _ = writeln!(err, "\n{}", Cli::command().render_usage());
                }
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(()) => 0,
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error: {}: {e}", e.name());
            1
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
        Err(Failure::Usage(e)) => {
            let _ = write!(err, "{}", e.render());
            e.exit_code()
        }
    }
}

enum Failure {
    Domain(Error),
    Io(std::io::Error),
    Usage(clap::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome = Result<(), Failure>;

fn context(level: &Level, err: &mut dyn Write) -> Result<FusionContext, Failure> {
    let rs: RootSystem = level.kind.parse()?;
    if level.level == 0 && level.format == Format::Text {
        writeln!(err, "note: fusion level 0, the ring is Z·[0]")?;
    }
    Ok(FusionContext::new(rs, level.level))
}

fn labels(w: &Weight) -> Value {
    json!(w.labels())
}

fn expansion_json(x: &FusionElement) -> Value {
    Value::Array(
        x.terms()
            .map(|(w, c)| json!({"weight": labels(w), "coeff": c}))
            .collect(),
    )
}

fn print_json(out: &mut dyn Write, v: &Value) -> Outcome {
    writeln!(out, "{}", serde_json::to_string(v).expect("serializable"))?;
    Ok(())
}

fn rational_json(q: &Rational64) -> Value {
    if q.is_integer() {
        json!(q.to_integer())
    } else {
        json!(q.to_string())
    }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    match command {
        Command::Weights { level } => {
            let ctx = context(&level, err)?;
            match level.format {
                Format::Json => print_json(
                    out,
                    &json!({
                        "type": ctx.root_system().to_string(),
                        "level": ctx.fusion_level(),
                        "basis": ctx.basis().iter().map(labels).collect::<Vec<_>>(),
                    }),
                ),
                _ => {
                    for w in ctx.basis() {
                        writeln!(out, "{w}")?;
                    }
                    Ok(())
                }
            }
        }
        Command::Fuse { level, a, b } => {
            let ctx = context(&level, err)?;
            let product = fuse(
                &ctx,
                &FusionElement::basis(&ctx, &a)?,
                &FusionElement::basis(&ctx, &b)?,
            )?;
            match level.format {
                Format::Json => print_json(
                    out,
                    &json!({
                        "type": ctx.root_system().to_string(),
                        "level": ctx.fusion_level(),
                        "a": labels(&a),
                        "b": labels(&b),
                        "product": expansion_json(&product),
                    }),
                ),
                _ => {
                    writeln!(out, "{product}")?;
                    Ok(())
                }
            }
        }
        Command::Table { level } => {
            let ctx = context(&level, err)?;
            let table = ctx.fusion_table();
            match level.format {
                Format::Json => print_json(
                    out,
                    &json!({
                        "type": ctx.root_system().to_string(),
                        "level": ctx.fusion_level(),
                        "basis": ctx.basis().iter().map(labels).collect::<Vec<_>>(),
                        "constants": table
                            .nonzero()
                            .map(|(a, b, c, n)| json!({"a": a, "b": b, "c": c, "n": n}))
                            .collect::<Vec<_>>(),
                    }),
                ),
                Format::Csv => {
                    writeln!(out, "a,b,c,n")?;
                    for (a, b, c, n) in table.nonzero() {
                        writeln!(out, "{a},{b},{c},{n}")?;
                    }
                    Ok(())
                }
                Format::Text => {
                    for (i, a) in ctx.basis().iter().enumerate() {
                        for b in &ctx.basis()[i..] {
                            let p = fuse(
                                &ctx,
                                &FusionElement::basis(&ctx, a)?,
                                &FusionElement::basis(&ctx, b)?,
                            )?;
                            writeln!(out, "{a} * {b} = {p}")?;
                        }
                    }
                    Ok(())
                }
            }
        }
        Command::Horn { level, a, b } => {
            let ctx = context(&level, err)?;
            let support = horn_support(&ctx, &a, &b)?;
            match level.format {
                Format::Json => {
                    print_json(out, &json!(support.iter().map(labels).collect::<Vec<_>>()))
                }
                _ => {
                    let items: Vec<String> = support.iter().map(|w| w.to_string()).collect();
                    writeln!(out, "{{{}}}", items.join(", "))?;
                    Ok(())
                }
            }
        }
        Command::Dirac {
            kind,
            twist,
            a,
            format,
        } => {
            let rs: RootSystem = kind.parse()?;
            let element = dirac_induce(&rs, twist, &a)?;
            match format {
                Format::Json => print_json(
                    out,
                    &json!({
                        "type": rs.to_string(),
                        "twist": twist,
                        "mu": labels(&a),
                        "label": labels(&element.regular_weight),
                    }),
                ),
                _ => {
                    writeln!(out, "{}", element.regular_weight)?;
                    Ok(())
                }
            }
        }
        Command::Ideal { level, expr } => {
            let expr = parse_char_expr(&expr.join(" ")).map_err(|msg| {
                let mut cmd = Cli::command();
                let sub = cmd
                    .find_subcommand_mut("ideal")
                    .expect("ideal subcommand")
                    .clone();
                Failure::Usage(
                    sub.bin_name("verlinde ideal")
                        .error(ErrorKind::ValueValidation, msg),
                )
            })?;
            let ctx = context(&level, err)?;
            for (_, w) in &expr {
                ctx.root_system().check_rank(w)?;
            }
            let x = CharElement::from_terms(expr.into_iter().map(|(c, w)| (w, c)))?;
            let member = ideal_member(&ctx, &x)?;
            match level.format {
                Format::Json => print_json(
                    out,
                    &json!({
                        "expr": x.to_string(),
                        "image": expansion_json(&iota_shriek(&ctx, &x)?),
                        "member": member,
                    }),
                ),
                _ => {
                    writeln!(out, "{member}")?;
                    Ok(())
                }
            }
        }
        Command::Smatrix { level } => {
            let ctx = context(&level, err)?;
            let s = s_matrix(&ctx)?;
            let clean = |v: f64| if v.abs() < 5e-10 { 0.0 } else { v };
            match level.format {
                Format::Json => print_json(
                    out,
                    &json!({
                        "type": ctx.root_system().to_string(),
                        "level": ctx.fusion_level(),
                        "basis": ctx.basis().iter().map(labels).collect::<Vec<_>>(),
                        "re": s.iter().map(|row| row.iter().map(|z| clean(z.re)).collect::<Vec<_>>()).collect::<Vec<_>>(),
                        "im": s.iter().map(|row| row.iter().map(|z| clean(z.im)).collect::<Vec<_>>()).collect::<Vec<_>>(),
                    }),
                ),
                _ => {
                    for row in &s {
                        let cells: Vec<String> = row
                            .iter()
                            .map(|z| format!("{:.9}{:+.9}i", clean(z.re), clean(z.im)))
                            .collect();
                        writeln!(out, "{}", cells.join("  "))?;
                    }
                    Ok(())
                }
            }
        }
        Command::Steinberg { group } => match group {
            SteinbergGroup::Sl2r { trace, format } => {
                let fiber = classify_fiber_sl2r(trace);
                let cover: Vec<String> = cover_member_sl2r(trace)
                    .iter()
                    .map(|p| p.to_string())
                    .collect();
                match format {
                    Format::Json => {
                        let mut v = fiber_json(&fiber);
                        v["cover"] = json!(cover);
                        print_json(out, &v)
                    }
                    _ => {
                        write_fiber(out, &fiber)?;
                        writeln!(out, "cover: {}", cover.join(" "))?;
                        Ok(())
                    }
                }
            }
            SteinbergGroup::Sl2c {
                trace,
                imag,
                format,
            } => {
                let fiber = classify_fiber_sl2c(trace, imag);
                match format {
                    Format::Json => print_json(out, &fiber_json(&fiber)),
                    _ => write_fiber(out, &fiber),
                }
            }
        },
        Command::Alcove { level, a } => {
            let ctx = context(&level, err)?;
            let pos = ctx.alcove_position(&a)?;
            match level.format {
                Format::Json => print_json(
                    out,
                    &json!({
                        "weight": labels(&a),
                        "coordinates": pos.coordinates.iter().map(rational_json).collect::<Vec<_>>(),
                        "affine_coordinate": rational_json(&pos.affine_coordinate),
                        "walls": pos.walls,
                        "vertex": pos.vertex,
                        "stabilizer": pos.stabilizer.to_string(),
                    }),
                ),
                _ => {
                    let coords: Vec<String> =
                        pos.coordinates.iter().map(|q| q.to_string()).collect();
                    let walls: Vec<String> = pos.walls.iter().map(|w| w.to_string()).collect();
                    writeln!(out, "weight: {a}")?;
                    writeln!(
                        out,
                        "coordinates: ({}; affine {})",
                        coords.join(", "),
                        pos.affine_coordinate
                    )?;
                    writeln!(out, "walls: {{{}}}", walls.join(", "))?;
                    let place = if pos.is_interior() {
                        "open alcove"
                    } else if pos.vertex {
                        "vertex"
                    } else {
                        "wall"
                    };
                    writeln!(out, "position: {place}")?;
                    writeln!(out, "stabilizer: {}", pos.stabilizer)?;
                    Ok(())
                }
            }
        }
    }
}

fn trace_string(f: &FiberDescriptor) -> String {
    if f.trace_im == Rational64::from_integer(0) {
        f.trace_re.to_string()
    } else {
        format!("{} + {}i", f.trace_re, f.trace_im)
    }
}

fn fiber_json(f: &FiberDescriptor) -> Value {
    json!({
        "group": f.group.to_string(),
        "trace": {"re": rational_json(&f.trace_re), "im": rational_json(&f.trace_im)},
        "strata": f.strata.iter().map(|s| json!({
            "name": s.name,
            "type": s.kind.to_string(),
            "model": s.model,
        })).collect::<Vec<_>>(),
        "variety": f.variety,
    })
}

fn write_fiber(out: &mut dyn Write, f: &FiberDescriptor) -> Outcome {
    writeln!(out, "group: {}", f.group)?;
    writeln!(out, "trace: {}", trace_string(f))?;
    let noun = if f.strata.len() == 1 {
        "class"
    } else {
        "classes"
    };
    writeln!(out, "conjugacy classes in fiber: {} {noun}", f.strata.len())?;
    for (i, s) in f.strata.iter().enumerate() {
        writeln!(out, "  {}. {} ({}): {}", i + 1, s.name, s.kind, s.model)?;
    }
    if let Some(v) = &f.variety {
        writeln!(out, "variety: {v}")?;
    }
    Ok(())
}
