use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::anyhow;
use morsekit_core::constructions::{
    antiprism_triangulation, barycentric_subdivision, build_e, build_sigma_with_order, build_sigma2_sigma3prime,
    build_two_optima, collar_boundary, cone, cross_polytope, dunce_hat, one_point_suspension, pipeline_5manifold,
    poincare, product_with_interval, simplex, simplex_boundary, stack_facet, stellar_subdivision, suspension,
    PipelineError,
};
use morsekit_core::io::{format_facets, read_complex, ReadError};
use morsekit_core::morse::{spectrum, MorseVector};
use morsekit_core::verify::{
    betti_numbers, betti_numbers_mod_p, check_morse_consistency, exhaustive_collapsible, exhaustive_nonevasive,
};
use morsekit_core::{Face, SimplicialComplex, Vertex, VertexMap};
use serde_json::json;

use crate::{BuildArgs, BuildName, Command, Format, Mode, Op, ReportFormat, SpectrumArgs, TransformArgs, VerifyArgs};

/// Error carrying the process exit code.
pub struct Failure {
    code: u8,
    err: anyhow::Error,
}

impl Failure {
    fn usage(err: impl Into<anyhow::Error>) -> Self {
        Failure { code: 1, err: err.into() }
    }

    fn consistency(err: impl Into<anyhow::Error>) -> Self {
        Failure { code: 3, err: err.into() }
    }

    pub fn exit_code(&self) -> u8 {
        self.code
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.err.fmt(f)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::usage(e)
    }
}

impl From<morsekit_core::ComplexError> for Failure {
    fn from(e: morsekit_core::ComplexError) -> Self {
        Failure::usage(e)
    }
}

type Result<T> = std::result::Result<T, Failure>;

pub fn run(cmd: Command) -> Result<()> {
    match cmd {
        Command::Build(a) => build(a),
        Command::Spectrum(a) => run_spectrum(a),
        Command::Transform(a) => transform(a),
        Command::Verify(a) => verify(a),
    }
}

fn load(path: &Path) -> Result<SimplicialComplex> {
    read_complex(path).map_err(|e| match e {
        ReadError::Parse { .. } => Failure { code: 2, err: e.into() },
        ReadError::Io { .. } => Failure::usage(e),
    })
}

fn emit(output: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(p) => fs::write(p, text).map_err(|e| Failure::usage(anyhow!("{}: {e}", p.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            match out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
                // a closed pipe (`| head`) is not an error
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
                _ => Ok(()),
            }
        }
    }
}

fn face_arg(face: Option<&[u32]>, op: &str) -> Result<Face> {
    let v = face.ok_or_else(|| Failure::usage(anyhow!("--op {op} needs --face")))?;
    Ok(Face::new(v.iter().copied())?)
}

fn need_dim(a: &BuildArgs, name: &str) -> Result<usize> {
    a.dim.ok_or_else(|| Failure::usage(anyhow!("build {name} needs --dim")))
}

fn build(a: BuildArgs) -> Result<()> {
    let order = a.pull_order.as_deref();
    let k = match a.name {
        BuildName::Simplex => simplex(need_dim(&a, "simplex")?),
        BuildName::SimplexBoundary => simplex_boundary(need_dim(&a, "simplex_boundary")?)?,
        BuildName::CrossPolytope => cross_polytope(need_dim(&a, "cross_polytope")?)?,
        BuildName::Antiprism => antiprism_triangulation(need_dim(&a, "antiprism")?, order)?,
        BuildName::Sigma => build_sigma_with_order(need_dim(&a, "sigma")?, order)?,
        BuildName::E => build_e(need_dim(&a, "E")?)?,
        BuildName::TwoOptima => build_two_optima(),
        BuildName::Sigma2Sigma3Prime => build_sigma2_sigma3prime(),
        BuildName::DunceHat => dunce_hat(),
        BuildName::Poincare => poincare(),
        BuildName::Pipeline5Manifold => return build_pipeline(&a),
    };
    emit(a.output.as_deref(), &format_facets(&k))
}

fn build_pipeline(a: &BuildArgs) -> Result<()> {
    let pipeline_failure = |e: PipelineError| match e {
        PipelineError::Mismatch { .. } => Failure::consistency(e),
        PipelineError::Complex { .. } => Failure::usage(e),
    };
    let stages = pipeline_5manifold(&poincare()).map_err(pipeline_failure)?;
    let last = stages.last().expect("pipeline has stages");
    let bd = collar_boundary(&last.complex).map_err(pipeline_failure)?;

    let mut report: Vec<_> = stages
        .iter()
        .map(|s| {
            json!({
                "stage": s.index,
                "name": s.name,
                "f_vector": s.complex.f_vector(),
                "expected": s.expected,
                "euler_characteristic": s.complex.euler_characteristic(),
                "notes": s.notes,
            })
        })
        .collect();
    report.push(json!({
        "stage": last.index + 1,
        "name": "boundary",
        "f_vector": bd.f_vector(),
        "euler_characteristic": bd.euler_characteristic(),
    }));
    let report = json!({ "version": env!("CARGO_PKG_VERSION"), "stages": report });
    let report = serde_json::to_string_pretty(&report).expect("report serializes") + "\n";

    emit(a.output.as_deref(), &format_facets(&last.complex))?;
    let boundary: Option<PathBuf> = a.boundary.clone().or_else(|| {
        a.output.as_ref().map(|p| {
            let mut s = p.clone().into_os_string();
            s.push(".boundary");
            PathBuf::from(s)
        })
    });
    if let Some(p) = boundary {
        fs::write(&p, format_facets(&bd)).map_err(|e| Failure::usage(anyhow!("{}: {e}", p.display())))?;
    }
    match &a.report {
        Some(p) => fs::write(p, report).map_err(|e| Failure::usage(anyhow!("{}: {e}", p.display())))?,
        None => eprint!("{report}"),
    }
    Ok(())
}

fn run_spectrum(a: SpectrumArgs) -> Result<()> {
    let k = load(&a.input)?;
    let report = spectrum(&k, a.strategy, a.runs, a.seed, a.workers).map_err(Failure::usage)?;
    let text = match a.format {
        Format::Json => report.to_json() + "\n",
        Format::Text => report.to_text(),
        Format::Csv => {
            let mut buf = format!(
                "# strategy={} runs={} master_seed={} version={}\n",
                report.strategy, report.runs, report.master_seed, report.version
            )
            .into_bytes();
            report.write_csv(&mut buf).map_err(Failure::usage)?;
            String::from_utf8(buf).expect("csv is utf-8")
        }
    };
    emit(a.output.as_deref(), &text)
}

fn parse_map(text: &str, k: &SimplicialComplex) -> Result<VertexMap> {
    let mut map = VertexMap::identity(k);
    for pair in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (from, to) = pair
            .split_once('=')
            .ok_or_else(|| Failure::usage(anyhow!("map entry `{pair}` is not of the form a=b")))?;
        let parse = |s: &str| {
            s.trim().parse::<Vertex>().map_err(|_| Failure::usage(anyhow!("`{s}` is not a vertex id")))
        };
        map.insert(parse(from)?, parse(to)?);
    }
    Ok(map)
}

fn transform(a: TransformArgs) -> Result<()> {
    let k = load(&a.input)?;
    let fresh = a.fresh.unwrap_or(k.max_vertex() + 1);
    let need_vertex = |op: &str| a.vertex.ok_or_else(|| Failure::usage(anyhow!("--op {op} needs --vertex")));
    let out = match a.op {
        Op::Sd => barycentric_subdivision(&k, a.iterations)?,
        Op::Cone => cone(&k, fresh)?,
        Op::Suspension => suspension(&k)?,
        Op::Opsusp => one_point_suspension(&k, need_vertex("opsusp")?)?,
        Op::ProductI => product_with_interval(&k)?,
        Op::Stellar => stellar_subdivision(&k, &face_arg(a.face.as_deref(), "stellar")?, fresh)?,
        Op::Stack => stack_facet(&k, &face_arg(a.face.as_deref(), "stack")?, fresh)?,
        Op::Link => k.link_of(&face_arg(a.face.as_deref(), "link")?)?,
        Op::Star => k.closed_star_of(&face_arg(a.face.as_deref(), "star")?)?,
        Op::Delete => k.delete_vertex(need_vertex("delete")?)?,
        Op::Boundary => k.boundary_complex()?,
        Op::Quotient => {
            let text = a.map.as_deref().ok_or_else(|| Failure::usage(anyhow!("--op quotient needs --map")))?;
            k.apply_map(&parse_map(text, &k)?)?
        }
        Op::Contract => k.contract_edge(&face_arg(a.face.as_deref(), "contract")?)?,
    };
    emit(a.output.as_deref(), &format_facets(&out))
}

fn verify(a: VerifyArgs) -> Result<()> {
    let k = load(&a.input)?;
    let mut failed: Option<String> = None;
    let report = match a.mode {
        Mode::Fvector => {
            let valid = k.validate();
            if let Err(e) = &valid {
                failed = Some(format!("invalid complex: {e}"));
            }
            json!({
                "f_vector": k.f_vector(),
                "dim": k.dim(),
                "euler_characteristic": k.euler_characteristic(),
                "pure": k.is_pure(),
                "valid": valid.is_ok(),
            })
        }
        Mode::Homology => match a.prime {
            Some(p) => {
                let ranks = betti_numbers_mod_p(&k, p).map_err(Failure::usage)?;
                json!({ "coefficients": format!("GF({p})"), "ranks": ranks })
            }
            None => {
                let b = betti_numbers(&k, a.size_limit).map_err(Failure::usage)?;
                json!({ "coefficients": "Z", "ranks": b.ranks, "torsion": b.torsion })
            }
        },
        Mode::FreeFaces => {
            let pairs = k.free_faces();
            json!({
                "count": pairs.len(),
                "pairs": pairs.iter().map(|(s, t)| json!({ "free": s.vertices(), "coface": t.vertices() })).collect::<Vec<_>>(),
            })
        }
        Mode::MorseCheck => {
            let v = a.vector.clone().ok_or_else(|| Failure::usage(anyhow!("--mode morse-check needs --vector")))?;
            let betti = match a.prime {
                Some(p) => Some(betti_numbers_mod_p(&k, p).map_err(Failure::usage)?),
                None => betti_numbers(&k, a.size_limit).ok().map(|b| b.ranks),
            };
            let c = check_morse_consistency(&k, &MorseVector(v), betti.as_deref());
            if !c.is_ok() {
                let msgs: Vec<String> = c.violations.iter().map(ToString::to_string).collect();
                failed = Some(msgs.join("; "));
            }
            serde_json::to_value(&c).expect("report serializes")
        }
        Mode::Oracle => json!({
            "collapsible": exhaustive_collapsible(&k, a.budget),
            "nonevasive": exhaustive_nonevasive(&k, a.budget),
            "budget": a.budget,
        }),
    };
    let text = match a.format {
        ReportFormat::Json => serde_json::to_string_pretty(&report).expect("report serializes") + "\n",
        ReportFormat::Text => text_report(&report),
    };
    emit(None, &text)?;
    match failed {
        Some(msg) => Err(Failure::consistency(anyhow!(msg))),
        None => Ok(()),
    }
}

fn text_report(v: &serde_json::Value) -> String {
    let mut s = String::new();
    if let serde_json::Value::Object(m) = v {
        for (key, val) in m {
            s.push_str(&format!("{key}: {val}\n"));
        }
    }
    s
}
