use bergman_kit::bounds::{forelli_rudin, integral_mean, projection_kernel_modulus, schur_report, supremum_grid, SchurParams};
use bergman_kit::kernel::{k_disc, k_series, riemann_deriv, DiscKernel, DomainMap, Pullback};
use bergman_kit::projection::{adjoint, adjoint_density, blowup_witness, project};
use bergman_kit::{CheckReport, Complex64, DiscPoint, Expected, Exponent, QuadRule, Resolution, Weight};
use bergman_kit_cli::function::format_complex;
use bergman_kit_cli::{parse_complex, run_suite, Format, FunctionSpec, ReportWriter, SuiteConfig, CHECKS};
use clap::{Parser, Subcommand, ValueEnum};
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Debug, Parser)]
#[command(name = "bergman-kit", version, about = "Bergman kernels, projections and norm estimates on the unit disc")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Quadrature resolution as RADIALxANGULAR.
    #[arg(long, global = true, default_value = "64x256")]
    rule: Resolution,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Shorthand for `--format json`.
    #[arg(long, global = true)]
    json: bool,

    /// Write reports to this file instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

fn complex_arg(text: &str) -> Result<Complex64, String> {
    parse_complex(text).ok_or_else(|| format!("malformed complex literal '{text}' (expected a+bi without spaces)"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Domain {
    Disc,
    SlitPlane,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate the weighted disc kernel, optionally against its series.
    Kernel {
        #[arg(long, value_parser = complex_arg, allow_hyphen_values = true)]
        at: Complex64,
        #[arg(long, value_parser = complex_arg, allow_hyphen_values = true)]
        zeta: Complex64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        alpha: f64,
        /// Compare with the partial sum of this many terms (unweighted only).
        #[arg(long)]
        terms: Option<usize>,
    },
    /// Evaluate P_alpha f at a point.
    Project {
        #[arg(long)]
        function: FunctionSpec,
        #[arg(long, value_parser = complex_arg, allow_hyphen_values = true)]
        at: Complex64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        alpha: f64,
    },
    /// Evaluate the adjoint projection P_alpha^* g at a point.
    Adjoint {
        #[arg(long)]
        function: FunctionSpec,
        #[arg(long, value_parser = complex_arg, allow_hyphen_values = true)]
        at: Complex64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        alpha: f64,
    },
    /// Projection of the bounded witness g_a evaluated at a.
    Blowup {
        #[arg(long, value_delimiter = ',', default_values_t = [0.5, 0.9, 0.99])]
        a: Vec<f64>,
    },
    /// Riemann map derivative recovered from a Bergman kernel.
    Conformal {
        #[arg(long, value_enum, default_value_t = Domain::Disc)]
        domain: Domain,
        #[arg(long, value_parser = complex_arg, allow_hyphen_values = true)]
        base: Complex64,
        #[arg(long, value_delimiter = ',', value_parser = complex_arg, allow_hyphen_values = true, required = true)]
        at: Vec<Complex64>,
    },
    /// Schur test constants for P_alpha on L^p.
    Schur {
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        alpha: f64,
        #[arg(long)]
        p: f64,
    },
    /// Run named verification checks.
    Verify {
        #[arg(long)]
        all: bool,
        /// A check to run; repeatable.
        #[arg(long = "check")]
        checks: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Integral means of |f|^p on circles.
    Means {
        #[arg(long)]
        function: FunctionSpec,
        #[arg(long, default_value_t = 2.0)]
        p: f64,
        #[arg(long, value_delimiter = ',', required = true)]
        radii: Vec<f64>,
        #[arg(long, default_value_t = 512)]
        angular: usize,
    },
    /// Forelli-Rudin integral and its ratio to (1 - |z|^2)^(t - s).
    ForelliRudin {
        #[arg(long)]
        s: f64,
        #[arg(long)]
        t: f64,
        #[arg(long, value_delimiter = ',', value_parser = complex_arg, allow_hyphen_values = true, default_values = ["0", "0.5", "0.9", "0.95"])]
        at: Vec<Complex64>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(msg) = configure_threads() {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }
    let format = if cli.json { Format::Json } else { cli.format };
    let out: Box<dyn Write> = match &cli.output {
        Some(path) => match File::create(path) {
            Ok(f) => Box::new(BufWriter::new(f)),
            Err(e) => {
                eprintln!("error: cannot create {}: {e}", path.display());
                return ExitCode::from(1);
            }
        },
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };

    if let Command::Verify { all, checks, seed } = &cli.command {
        if !all && checks.is_empty() {
            eprintln!("error: pass --all or at least one --check NAME (known: {})", CHECKS.join(", "));
            return ExitCode::from(2);
        }
        let config = SuiteConfig {
            checks: if *all { CHECKS.iter().map(|s| s.to_string()).collect() } else { checks.clone() },
            resolution: cli.rule,
            format,
            output: cli.output.clone(),
            seed: *seed,
        };
        return match run_suite(&config, out) {
            Ok(outcome) => ExitCode::from(outcome.exit_code() as u8),
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(e.exit_code() as u8)
            }
        };
    }

    match compute(&cli.command, cli.rule) {
        Ok(reports) => match emit(out, format, &reports) {
            Ok(()) => ExitCode::from(u8::from(!reports.iter().all(CheckReport::passed))),
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(1)
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn configure_threads() -> Result<(), String> {
    let Ok(value) = std::env::var("BERGMAN_KIT_THREADS") else {
        return Ok(());
    };
    let n: usize = value
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| format!("BERGMAN_KIT_THREADS must be a positive integer, got '{value}'"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| e.to_string())
}

fn emit(out: Box<dyn Write>, format: Format, reports: &[CheckReport]) -> io::Result<()> {
    let mut writer = ReportWriter::new(out, format)?;
    for r in reports {
        writer.write(r)?;
    }
    writer.finish()
}

fn compute(command: &Command, res: Resolution) -> bergman_kit::Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    match command {
        Command::Kernel { at, zeta, alpha, terms } => {
            let (z, w) = (DiscPoint::new(*at)?, DiscPoint::new(*zeta)?);
            let weight = Weight::new(*alpha)?;
            let value = k_disc(z, w, weight);
            let report = match terms {
                Some(n) if *alpha == 0.0 => CheckReport::value("kernel", value, k_series(z, w, *n), 1e-8).param("terms", n),
                Some(_) => {
                    return Err(bergman_kit::Error::InvalidParameter(
                        "--terms compares with the unweighted series; use --alpha 0".into(),
                    ))
                }
                None => CheckReport::new("kernel", value, Expected::None, 0.0),
            };
            out.push(report.param("z", format_complex(*at)).param("zeta", format_complex(*zeta)).param("alpha", alpha));
        }
        Command::Project { function, at, alpha } => {
            let z = DiscPoint::new(*at)?;
            let weight = Weight::new(*alpha)?;
            let rule = QuadRule::resolved_for(res, weight, z)?;
            let value = project(function, weight, z, &rule)?;
            let report = match function.projection_oracle(z) {
                Some(exact) => CheckReport::value("project", value, exact, 1e-8),
                None => CheckReport::new("project", value, Expected::None, 0.0),
            };
            out.push(
                report
                    .param("function", function)
                    .param("at", format_complex(*at))
                    .param("alpha", alpha)
                    .resolution(rule.resolution()),
            );
        }
        Command::Adjoint { function, at, alpha } => {
            let z = DiscPoint::new(*at)?;
            let weight = Weight::new(*alpha)?;
            let rule = QuadRule::resolved_for(res, Weight::unweighted(), z)?;
            let value = adjoint(function, weight, z, &rule)?;
            let report = match function {
                FunctionSpec::Const(c) => CheckReport::value("adjoint", value, c * adjoint_density(weight, z), 1e-8),
                _ => CheckReport::new("adjoint", value, Expected::None, 0.0),
            };
            out.push(
                report
                    .param("function", function)
                    .param("at", format_complex(*at))
                    .param("alpha", alpha)
                    .resolution(rule.resolution()),
            );
        }
        Command::Blowup { a } => {
            for &a in a {
                let rule = QuadRule::resolved_for(res, Weight::unweighted(), DiscPoint::from_real(a)?)?;
                let w = blowup_witness(a, &rule)?;
                let tol = if a > 0.95 { 1e-3 } else { 1e-4 };
                out.push(
                    CheckReport::value("blowup", w.observed, w.expected, tol)
                        .param("a", a)
                        .param("expected_form", "-ln(1-a^2)/a^2")
                        .param("stated_form_value", w.stated)
                        .resolution(rule.resolution()),
                );
            }
        }
        Command::Conformal { domain, base, at } => match domain {
            Domain::Disc => {
                let a = DiscPoint::new(*base)?;
                for &z in at {
                    DiscPoint::new(z)?;
                    let got = riemann_deriv(&DiscKernel::unweighted(), a.value(), z)?;
                    let den = 1.0 - a.value().conj() * z;
                    let oracle = (1.0 - a.value().norm_sqr()) / (den * den);
                    out.push(conformal_report("disc", *base, z, got, oracle));
                }
            }
            Domain::SlitPlane => {
                let inverse = DomainMap::slit_plane_inverse()?;
                let kernel = Pullback {
                    map: inverse.clone(),
                    target: DiscKernel::unweighted(),
                };
                let (a, da) = inverse.eval(*base)?;
                let rotation = da.conj() / da.norm();
                for &w in at {
                    let got = riemann_deriv(&kernel, *base, w)?;
                    let (x, dx) = inverse.eval(w)?;
                    let den = 1.0 - a.conj() * x;
                    let oracle = rotation * (1.0 - a.norm_sqr()) / (den * den) * dx;
                    out.push(conformal_report("slit-plane", *base, w, got, oracle));
                }
            }
        },
        Command::Schur { alpha, p } => {
            let weight = Weight::new(*alpha)?;
            let params = SchurParams::for_projection(weight, Exponent::new(*p)?)?;
            out.push(schur_report(&projection_kernel_modulus(weight), &params, res, &supremum_grid())?);
        }
        Command::Means { function, p, radii, angular } => {
            let exponent = Exponent::new(*p)?;
            for &r in radii {
                let v = integral_mean(function, r, exponent, *angular)?;
                out.push(
                    CheckReport::new("means", v, Expected::None, 0.0)
                        .param("function", function)
                        .param("p", p)
                        .param("r", r)
                        .param("angular", angular),
                );
            }
        }
        Command::ForelliRudin { s, t, at } => {
            for &z in at {
                let fr = forelli_rudin(DiscPoint::new(z)?, *s, *t, res)?;
                out.push(
                    CheckReport::new("forelli-rudin", fr.ratio, Expected::None, 0.0)
                        .param("s", s)
                        .param("t", t)
                        .param("at", format_complex(z))
                        .param("integral", fr.integral)
                        .resolution(res),
                );
            }
        }
        Command::Verify { .. } => unreachable!("handled by the suite runner"),
    }
    Ok(out)
}

fn conformal_report(domain: &str, base: Complex64, at: Complex64, got: Complex64, oracle: Complex64) -> CheckReport {
    CheckReport::value("conformal", got, oracle, 1e-10 * oracle.norm().max(1.0))
        .param("domain", domain)
        .param("base", format_complex(base))
        .param("at", format_complex(at))
}
