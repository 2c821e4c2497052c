mod input;

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use finik::algebra::{format_rational, Matrix};
use finik::io::{from_value, to_value, Exchange};
use finik::knot::{self, PretzelParams, SeifertData, SingularLinkingMatrix};
use finik::surgery::{self, IntersectionLinkTable, MilnorTensor, SurgerySpec};
use finik::{DiagramVector, Error, Rational, WeightSystem};
use serde_json::{json, Value};

use input::{rational, specs, Input};

#[derive(Parser, Debug)]
#[command(name = "finik", version, about = "Exact finite type invariants of knots and rational homology spheres")]
struct Cli {
    /// Print aligned text instead of JSON
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Alexander polynomial of a knot from Seifert data
    Alexander(Input),
    /// lambda' of a knot, checked by two independent routes
    LambdaPrime(Input),
    /// lambda2'' of a null-homologous knot
    Lambda2Second(Input),
    /// w3 of the pretzel knot K(x, y, z)
    #[command(allow_negative_numbers = true)]
    W3Pretzel {
        #[arg(short)]
        x: i64,
        #[arg(short)]
        y: i64,
        #[arg(short)]
        z: i64,
    },
    /// Casson-Walker invariant after p/q surgery on a knot
    #[command(allow_negative_numbers = true)]
    LambdaSurgery {
        #[arg(short)]
        p: i64,
        #[arg(short)]
        q: i64,
        #[arg(long, default_value = "0")]
        lambda_m: String,
        #[arg(long)]
        lambda_prime: String,
    },
    /// lambda2 after p/q surgery; for |p| != 1 the correction and lens terms are required
    #[command(allow_negative_numbers = true)]
    Lambda2Surgery {
        #[arg(short)]
        p: i64,
        #[arg(short)]
        q: i64,
        #[arg(long, default_value = "0")]
        lambda2_m: String,
        #[arg(long)]
        lambda2_second: String,
        #[arg(long)]
        w3: String,
        #[arg(long)]
        c: Option<String>,
        #[arg(long)]
        lens_lambda2: Option<String>,
    },
    /// Casson-Walker invariant of the lens space L(p, -q)
    #[command(allow_negative_numbers = true)]
    Lens {
        #[arg(short)]
        p: i64,
        #[arg(short)]
        q: i64,
    },
    /// Dedekind sum s(p, q)
    #[command(allow_negative_numbers = true)]
    Dedekind {
        #[arg(short)]
        p: i64,
        #[arg(short)]
        q: i64,
    },
    /// Bracket of a boundary link
    BracketBoundary(Input),
    /// Bracket of 2n LP-surgeries
    BracketLp(Input),
    /// Bracket of an algebraically split link from Milnor triple numbers
    BracketAs(Input),
    /// Bracket of a link with vanishing Milnor triple numbers
    BracketAsMu0(Input),
    /// Leading coefficient of the degree n surgery polynomial of a knot
    YLeading {
        #[arg(short)]
        n: usize,
        #[command(flatten)]
        input: Input,
    },
    /// Degree two surgery polynomial of a singular knot with two double points
    Y2Singular(Input),
    /// Contraction bracket of a graph combination against a linking table
    Contract(Input),
    /// Dimension of the space of degree n Jacobi diagrams modulo AS and IHX
    DiagramDims {
        #[arg(short)]
        n: usize,
    },
    /// Run the anchor identities
    SelfCheck,
}

#[derive(Debug)]
enum Failure {
    Io(String),
    Lib(Error),
    Anchors(Value),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn vector_output(v: &DiagramVector) -> Result<Value, Failure> {
    let mut out = json!({ "vector": to_value(v) });
    let weight = match v.degree() {
        1 => Some(WeightSystem::w1()),
        2 => Some(WeightSystem::w2()),
        _ => None,
    };
    if let Some(w) = weight {
        out["weight"] = json!(format_rational(&w.evaluate(v)?));
    }
    Ok(out)
}

fn rstr(r: &Rational) -> Value {
    json!(format_rational(r))
}

fn seifert(input: &Input) -> Result<SeifertData, Failure> {
    Ok(from_value(input.value()?)?)
}

fn run(command: Command) -> Result<Value, Failure> {
    Ok(match command {
        Command::Alexander(i) => {
            let delta = knot::alexander_from_seifert(&seifert(&i)?)?;
            json!({ "alexander": delta.to_wire(), "display": delta.to_string() })
        }
        Command::LambdaPrime(i) => json!({ "lambda_prime": rstr(&knot::lambda_prime(&seifert(&i)?)?) }),
        Command::Lambda2Second(i) => json!({ "lambda2_second": rstr(&knot::lambda2_second(&seifert(&i)?)?) }),
        Command::W3Pretzel { x, y, z } => json!({ "w3": rstr(&knot::w3_pretzel(PretzelParams::new(x, y, z)?)) }),
        Command::LambdaSurgery { p, q, lambda_m, lambda_prime } => {
            let v = surgery::lambda_surgery(&rational(&lambda_m)?, &rational(&lambda_prime)?, SurgerySpec::new(p, q)?)?;
            json!({ "lambda": rstr(&v) })
        }
        Command::Lambda2Surgery { p, q, lambda2_m, lambda2_second, w3, c, lens_lambda2 } => {
            let s = SurgerySpec::new(p, q)?;
            let (m, second, w3) = (rational(&lambda2_m)?, rational(&lambda2_second)?, rational(&w3)?);
            let v = match (c, lens_lambda2) {
                (Some(c), Some(lens)) => surgery::lambda2_surgery(&m, &second, &w3, &rational(&c)?, &rational(&lens)?, s),
                (None, None) if p.abs() == 1 => surgery::lambda2_integral_surgery(&m, &second, &w3, q * p),
                _ => {
                    return Err(Error::Precondition(
                        "--c and --lens-lambda2 are both required unless the coefficient is 1/r".into(),
                    )
                    .into())
                }
            };
            json!({ "lambda2": rstr(&v) })
        }
        Command::Lens { p, q } => json!({ "lambda": rstr(&surgery::lambda_lens(SurgerySpec::new(p, q)?)?) }),
        Command::Dedekind { p, q } => json!({ "s": rstr(&surgery::dedekind_sum(p, q)?) }),
        Command::BracketBoundary(i) => {
            let b: input::BoundaryInput = i.parse()?;
            let lk = input::linking(b.lk)?;
            vector_output(&surgery::bracket_boundary(b.n, &b.genera, &lk, &specs(&b.coeffs)?)?)?
        }
        Command::BracketLp(i) => {
            let b: input::LpInput = i.parse()?;
            let data = b.data.iter().map(|h| h.datum()).collect::<Result<Vec<_>, _>>()?;
            vector_output(&surgery::bracket_lp(b.n, &data, &input::linking(b.lk)?)?)?
        }
        Command::BracketAs(i) => {
            let b: input::AsInput = i.parse()?;
            let mu: MilnorTensor = from_value(b.mu)?;
            vector_output(&surgery::bracket_as(mu.degree(), &mu, &specs(&b.coeffs)?)?)?
        }
        Command::BracketAsMu0(i) => {
            let b: input::AsMu0Input = i.parse()?;
            let ell: IntersectionLinkTable = from_value(json!({ "ell": b.ell }))?;
            vector_output(&surgery::bracket_as_mu0(b.n, &ell, &specs(&b.coeffs)?)?)?
        }
        Command::YLeading { n, input } => vector_output(&surgery::y_leading(n, &seifert(&input)?)?)?,
        Command::Y2Singular(i) => {
            let b: input::SingularInput = i.parse()?;
            let rows = b.ell.iter().map(|r| r.iter().map(|x| x.to_rational()).collect()).collect::<finik::Result<_>>()?;
            let m = SingularLinkingMatrix::new(Matrix::from_rows(rows)?)?;
            json!({ "value": rstr(&surgery::y2_singular_polynomial(&m, &b.r.to_rational()?)?) })
        }
        Command::Contract(i) => {
            let (n, g, lk) = i.parse::<input::ContractInput>()?.graph()?;
            vector_output(&finik::contract(&g, &lk, n)?.reduce()?)?
        }
        Command::DiagramDims { n } => json!({ "dim": finik::diagram::quotient(n)?.dim().to_string() }),
        Command::SelfCheck => {
            let anchors = finik::anchors::self_check();
            let ok = anchors.iter().all(|a| a.passed);
            let list: Vec<Value> = anchors
                .iter()
                .map(|a| {
                    let mut v = json!({ "name": a.name, "passed": a.passed });
                    if !a.passed {
                        v["detail"] = json!(a.detail);
                    }
                    v
                })
                .collect();
            let report = json!({ "anchors": list, "passed": ok });
            if !ok {
                return Err(Failure::Anchors(report));
            }
            report
        }
    })
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    let key = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match v {
        Value::Object(m) => m.iter().for_each(|(k, v)| flatten(&key(k), v, out)),
        Value::Array(a) if a.iter().all(|x| x.get("name").is_some()) && !a.is_empty() => {
            for x in a {
                let name = x["name"].as_str().unwrap_or_default();
                let status = if x["passed"] == json!(true) { "pass".to_string() } else { format!("FAIL {}", x["detail"]) };
                out.push((key(name), status));
            }
        }
        Value::String(s) => out.push((prefix.to_string(), s.clone())),
        other => out.push((prefix.to_string(), other.to_string())),
    }
}

fn render(v: &Value, pretty: bool) -> String {
    if !pretty {
        return v.to_string();
    }
    let mut rows = Vec::new();
    flatten("", v, &mut rows);
    let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
    rows.iter().map(|(k, v)| format!("{k:<width$}  {v}")).collect::<Vec<_>>().join("\n")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(v) => {
            println!("{}", render(&v, cli.pretty));
            ExitCode::SUCCESS
        }
        Err(Failure::Anchors(report)) => {
            println!("{}", render(&report, cli.pretty));
            ExitCode::from(1)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("IO: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Lib(e)) => {
            let (prefix, code) = match e {
                Error::Schema(_) | Error::MissingLinking(..) => ("SCHEMA", 2),
                Error::Consistency(_) => ("CONSISTENCY", 1),
                _ => ("PRE", 2),
            };
            eprintln!("{prefix}: {e}");
            ExitCode::from(code)
        }
    }
}
