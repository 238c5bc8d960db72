use std::fmt::Write as _;
use std::path::Path;

use lie_ext::algebra::{
    center_basis, compatibility_check, validate_structure_constants, Builtin,
    BracketPair, JacobiViolation, StructureConstants,
};
use lie_ext::formats::{
    poly_from_json, poly_to_json, structure_constants_from_json, wtensor_from_json, wtensor_to_json,
    SpectrumReport,
};
use lie_ext::matrix_bundle::{
    blocks_antisymmetric, bracket_sandwich, coboundary_identity_check, component_bracket, embed_circulant,
    sandwich_product, BlockCirculant, BlockVector,
};
use lie_ext::poisson::{lie_poisson_bracket, PoissonTensor};
use lie_ext::rational::{format, parse_lenient};
use lie_ext::sampling;
use lie_ext::spectral::{classify_circulant, transform_w, CirculantClassification};
use lie_ext::wtensor::{
    circulant_w, direct_sum_w, filtration_support_check, induced_structure_constants, jacobi_certify,
    leibnitz_deform, leibnitz_w, max_abelian_filtration_ideal, truncate_to_solvable, wtensor_validate,
    AlphaVector, CertifyViolation, WTensor, WViolation,
};
use lie_ext::{Error, Rational};
use serde_json::{json, Value};

use crate::{Cli, Command, Kind, Status};

/// Result of one command: a status, a text rendering and a JSON rendering.
#[derive(Debug)]
pub struct Outcome {
    pub status: Status,
    pub text: String,
    /// Rendered JSON document.
    pub json: Option<String>,
    pub error: Option<String>,
}

impl Outcome {
    fn new(status: Status, text: String, json: Value) -> Self {
        Self::rendered(status, text, serde_json::to_string_pretty(&json).expect("json values serialize"))
    }

    fn rendered(status: Status, text: String, json: String) -> Self {
        Self {
            status,
            text,
            json: Some(json),
            error: None,
        }
    }

    fn input_error(msg: impl Into<String>) -> Self {
        Self {
            status: Status::InputError,
            text: String::new(),
            json: None,
            error: Some(msg.into()),
        }
    }

    fn failure(msg: impl Into<String>) -> Self {
        Self {
            status: Status::Fail,
            text: String::new(),
            json: None,
            error: Some(msg.into()),
        }
    }
}

/// Library errors split into bad input and failed checks.
impl From<Error> for Outcome {
    fn from(e: Error) -> Self {
        match e {
            Error::SpectrumMismatch { .. } | Error::Internal(_) => Outcome::failure(e.to_string()),
            _ => Outcome::input_error(e.to_string()),
        }
    }
}

type CmdResult = std::result::Result<Outcome, Outcome>;

pub fn execute(cli: &Cli) -> Outcome {
    let g = &cli.global;
    if !(g.tol > 0.0 && g.tol.is_finite()) {
        return Outcome::input_error(format!("--tol must be positive, got {}", g.tol));
    }
    let r = match &cli.command {
        Command::MakeW {
            kind,
            n,
            alpha,
            lambda,
            input,
            output,
        } => make_w(*kind, *n, alpha.as_deref(), lambda.as_deref(), input.as_deref(), output.as_deref(), g.cap),
        Command::ValidateW { file } => validate_w(file, g.cap),
        Command::Classify { alpha } => classify(alpha, g.tol, g.cap),
        Command::Certify {
            file,
            algebra,
            center,
            filtration,
        } => certify(file, algebra, *center, *filtration, g.cap),
        Command::Center { algebra } => center(algebra, g.cap),
        Command::Compat { first, second } => compat(first, second, g.cap),
        Command::Spectrum { alpha } => spectrum(alpha, g.tol, g.cap),
        Command::SandwichCheck { trials, n, p } => sandwich_check(*trials, *n, *p, g.seed, g.cap),
        Command::PoissonBracket { algebra, f, g: gf } => poisson_bracket(algebra, f, gf, g.cap),
    };
    r.unwrap_or_else(|e| e)
}

fn read(path: &Path) -> std::result::Result<String, Outcome> {
    std::fs::read_to_string(path).map_err(|e| Outcome::input_error(format!("cannot read {}: {e}", path.display())))
}

fn load_w(path: &Path, cap: usize) -> std::result::Result<WTensor, Outcome> {
    let w = wtensor_from_json(&read(path)?)?;
    within_cap(w.n(), cap)?;
    Ok(w)
}

fn within_cap(size: usize, cap: usize) -> std::result::Result<(), Outcome> {
    if size > cap {
        return Err(Error::SizeCap { size, cap }.into());
    }
    Ok(())
}

/// A built-in name, or failing that, a structure-constants file.
fn resolve_algebra(arg: &str, cap: usize) -> std::result::Result<StructureConstants, Outcome> {
    let c = match arg.parse::<Builtin>() {
        Ok(b) => {
            within_cap(b.dim(), cap)?;
            b.constants()?
        }
        Err(_) if Path::new(arg).is_file() => structure_constants_from_json(&read(Path::new(arg))?)?,
        Err(e) => return Err(e.into()),
    };
    within_cap(c.dim(), cap)?;
    Ok(c)
}

fn algebra_label(c: &StructureConstants, arg: &str) -> String {
    c.name().unwrap_or(arg).to_string()
}

fn parse_alpha(s: &str, cap: usize) -> std::result::Result<AlphaVector, Outcome> {
    let a = AlphaVector::parse(s)?;
    within_cap(a.n(), cap)?;
    Ok(a)
}

fn require_n(n: Option<usize>, cap: usize) -> std::result::Result<usize, Outcome> {
    let n = n.ok_or_else(|| Outcome::input_error("--n is required for this family"))?;
    if n == 0 {
        return Err(Outcome::input_error("--n must be at least 1"));
    }
    within_cap(n, cap)?;
    Ok(n)
}

fn elem(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(format).collect();
    format!("({})", parts.join(", "))
}

fn elem_json(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(format(x))).collect())
}

fn make_w(
    kind: Kind,
    n: Option<usize>,
    alpha: Option<&str>,
    lambda: Option<&str>,
    input: Option<&Path>,
    output: Option<&Path>,
    cap: usize,
) -> CmdResult {
    let w = match kind {
        Kind::DirectSum => direct_sum_w(require_n(n, cap)?)?,
        Kind::Leibnitz => leibnitz_w(require_n(n, cap)?)?,
        Kind::Circulant => {
            let a = alpha.ok_or_else(|| Outcome::input_error("--alpha is required for circulant"))?;
            let a = parse_alpha(a, cap)?;
            if let Some(n) = n {
                if n != a.n() {
                    return Err(Outcome::input_error(format!("--n {n} disagrees with alpha length {}", a.n())));
                }
            }
            circulant_w(&a)
        }
        Kind::LeibnitzDeform => {
            let l = lambda.ok_or_else(|| Outcome::input_error("--lambda is required for leibnitz-deform"))?;
            leibnitz_deform(require_n(n, cap)?, &parse_lenient(l)?)?
        }
        Kind::Truncate => {
            let src = input.ok_or_else(|| Outcome::input_error("--input is required for truncate"))?;
            truncate_to_solvable(&load_w(src, cap)?)?
        }
    };
    let body = wtensor_to_json(&w) + "\n";
    let text = match output {
        Some(path) => {
            std::fs::write(path, &body)
                .map_err(|e| Outcome::input_error(format!("cannot write {}: {e}", path.display())))?;
            String::new()
        }
        None => body,
    };
    let json = match output {
        Some(_) => r#"{ "status": "pass" }"#.to_string(),
        None => text.trim_end().to_string(),
    };
    Ok(Outcome::rendered(Status::Pass, text, json))
}

fn w_violation(v: &WViolation) -> (String, Value) {
    match v {
        WViolation::Asymmetric { i, j, s } => (
            format!("asymmetric entry: W^{{{i}{j}}}_{s} != W^{{{j}{i}}}_{s} at ({i}, {j}, {s})"),
            json!({"kind": "asymmetric", "i": i, "j": j, "s": s}),
        ),
        WViolation::Commutation { i, s, q, p, residual } => (
            format!(
                "quadratic condition fails at (i, s, q, p) = ({i}, {s}, {q}, {p}) with residual {}",
                format(residual)
            ),
            json!({"kind": "commutation", "i": i, "s": s, "q": q, "p": p, "residual": format(residual)}),
        ),
    }
}

fn validate_w(file: &Path, cap: usize) -> CmdResult {
    let w = load_w(file, cap)?;
    let report = wtensor_validate(&w);
    let status = Status::from_bool(report.passed());
    let (line, v) = match &report.violation {
        None => ("valid".to_string(), Value::Null),
        Some(v) => w_violation(v),
    };
    let text = format!("n: {}\nnonzero entries: {}\n{}: {line}\n", w.n(), w.nnz(), status.label());
    let json = json!({
        "command": "validate-w",
        "status": status.label(),
        "n": w.n(),
        "nnz": w.nnz(),
        "violation": v,
    });
    Ok(Outcome::new(status, text, json))
}

fn spectrum_table(c: &CirculantClassification, r: &SpectrumReport) -> String {
    let mut t = String::new();
    let _ = writeln!(t, "{:>4}  {:>22}  {:>22}  zero", "i", "re", "im");
    for (i, (z, flag)) in r.mu.iter().zip(&c.spectrum.zero_flags).enumerate() {
        let _ = writeln!(t, "{i:>4}  {:>22.15e}  {:>22.15e}  {}", z.re, z.im, if *flag { "yes" } else { "no" });
    }
    t
}

fn classify(alpha: &str, tol: f64, cap: usize) -> CmdResult {
    let a = parse_alpha(alpha, cap)?;
    let c = classify_circulant(&a, tol)?;
    let r = SpectrumReport::new(&c, tol);
    let mut text = format!("n: {}\n", r.n);
    text += &spectrum_table(&c, &r);
    let _ = write!(
        text,
        "zero_count: {}\nm_nonabelian: {}\nn_abelian: {}\n",
        r.zero_count, c.m_nonabelian, c.n_abelian
    );
    Ok(Outcome::rendered(Status::Pass, text, r.to_json()))
}

fn spectrum(alpha: &str, tol: f64, cap: usize) -> CmdResult {
    let a = parse_alpha(alpha, cap)?;
    let c = classify_circulant(&a, tol)?;
    let r = SpectrumReport::new(&c, tol);
    let residual = transform_w(&circulant_w(&a)).diagonal_pattern_residual(&c.spectrum.values);
    let ok = residual < tol;
    let status = Status::from_bool(ok);
    let mut text = format!("n: {}\n", r.n);
    text += &spectrum_table(&c, &r);
    let _ = write!(
        text,
        "zero_count: {}\nm_nonabelian: {}\ndiagonal pattern within tolerance: {}\n",
        r.zero_count,
        r.m_nonabelian,
        if ok { "yes" } else { "no" }
    );
    Ok(Outcome::rendered(status, text, r.to_json()))
}

fn certify(file: &Path, algebra: &str, want_center: bool, want_filtration: bool, cap: usize) -> CmdResult {
    let w = load_w(file, cap)?;
    let c = resolve_algebra(algebra, cap)?;
    let report = jacobi_certify(&w, &c, cap)?;
    let mut ok = report.passed();
    let name = algebra_label(&c, algebra);
    let mut text = format!("algebra: {name}\nn: {}\nextension dim: {}\n", w.n(), w.n() * c.dim());
    let mut json = json!({
        "command": "certify",
        "algebra": name,
        "n": w.n(),
        "dim": w.n() * c.dim(),
    });
    match &report.violation {
        None => {
            text += "jacobi: pass\n";
            json["violation"] = Value::Null;
        }
        Some(CertifyViolation::Asymmetric { i, j, s }) => {
            let _ = writeln!(text, "jacobi: fail (asymmetric tensor at ({i}, {j}, {s}))");
            json["violation"] = json!({"kind": "asymmetric", "i": i, "j": j, "s": s});
        }
        Some(CertifyViolation::Jacobi { x, y, z, f, residual }) => {
            let _ = writeln!(
                text,
                "jacobi: fail at E{:?}, E{:?}, E{:?}; component E{:?} = {}",
                x,
                y,
                z,
                f,
                format(residual)
            );
            json["violation"] = json!({
                "kind": "jacobi",
                "x": [x.0, x.1], "y": [y.0, y.1], "z": [z.0, z.1], "f": [f.0, f.1],
                "residual": format(residual),
            });
        }
    }
    if want_center {
        if w.is_symmetric() {
            let induced = induced_structure_constants(&w, &c, cap)?;
            let z = center_basis(&induced);
            let _ = writeln!(text, "center dim: {}", z.len());
            for v in &z {
                let _ = writeln!(text, "  {}", elem(&v.coords));
            }
            json["center"] = Value::Array(z.iter().map(|v| elem_json(&v.coords)).collect());
        } else {
            text += "center: skipped (tensor is not symmetric)\n";
            json["center"] = Value::Null;
        }
    }
    if want_filtration {
        let sup = filtration_support_check(&w);
        let ideal = max_abelian_filtration_ideal(&w)?;
        ok &= sup.passed();
        match sup.offending {
            None => text += "filtration support: pass\n",
            Some((i, j, k)) => {
                let _ = writeln!(text, "filtration support: fail at W^{{{i}{j}}}_{k}");
            }
        }
        let _ = writeln!(text, "abelian filtration ideal starts at: {ideal}");
        json["filtration"] = json!({
            "support_ok": sup.passed(),
            "offending": sup.offending.map(|(i, j, k)| json!([i, j, k])),
            "abelian_ideal_start": ideal,
        });
    }
    let status = Status::from_bool(ok);
    text += &format!("{}\n", status.label());
    json["status"] = Value::String(status.label().into());
    Ok(Outcome::new(status, text, json))
}

fn center(algebra: &str, cap: usize) -> CmdResult {
    let c = resolve_algebra(algebra, cap)?;
    let lie = validate_structure_constants(&c).passed();
    let z = center_basis(&c);
    let name = algebra_label(&c, algebra);
    let mut text = format!("algebra: {name}\ndim: {}\nlie: {}\ncenter dim: {}\n", c.dim(), lie, z.len());
    for v in &z {
        let _ = writeln!(text, "  {}", elem(&v.coords));
    }
    let status = Status::from_bool(lie);
    let json = json!({
        "command": "center",
        "status": status.label(),
        "algebra": name,
        "dim": c.dim(),
        "lie": lie,
        "center": z.iter().map(|v| elem_json(&v.coords)).collect::<Vec<_>>(),
    });
    Ok(Outcome::new(status, text, json))
}

fn jacobi_violation_json(v: &JacobiViolation) -> Value {
    json!({"a": v.a, "b": v.b, "c": v.c, "f": v.f, "residual": format(&v.residual)})
}

fn compat(first: &str, second: &str, cap: usize) -> CmdResult {
    let pair = BracketPair::new(resolve_algebra(first, cap)?, resolve_algebra(second, cap)?)?;
    let report = compatibility_check(&pair)?;
    let status = Status::from_bool(report.passed());
    let mut text = format!("dim: {}\n", pair.dim());
    match &report.violation {
        None => text += "mixed jacobi: pass\n",
        Some(v) => {
            let _ = writeln!(
                text,
                "mixed jacobi: fail at ({}, {}, {}), component {} = {}",
                v.a,
                v.b,
                v.c,
                v.f,
                format(&v.residual)
            );
        }
    }
    text += &format!("{}\n", status.label());
    let json = json!({
        "command": "compat",
        "status": status.label(),
        "dim": pair.dim(),
        "compatible": report.passed(),
        "violation": report.violation.as_ref().map(jacobi_violation_json),
    });
    Ok(Outcome::new(status, text, json))
}

#[derive(Default)]
struct Tally {
    closure: usize,
    agreement: usize,
    coboundary: usize,
    so_sym: usize,
}

fn sandwich_check(trials: usize, n: usize, p: usize, seed: u64, cap: usize) -> CmdResult {
    if n == 0 || p == 0 {
        return Err(Outcome::input_error("--n and --p must be at least 1"));
    }
    within_cap(n * p, cap)?;
    let mut rng = sampling::rng(seed);
    let mut t = Tally::default();
    for _ in 0..trials {
        let x = sampling::block_vector(&mut rng, n, p);
        let a = sampling::block_vector(&mut rng, n, p);
        let y = sampling::block_vector(&mut rng, n, p);
        let product = embed_circulant(&x).matrix() * embed_circulant(&a).matrix();
        let product = &product * embed_circulant(&y).matrix();
        if BlockCirculant::from_matrix(n, p, product).is_ok() && sandwich_product(&x, &a, &y).is_ok() {
            t.closure += 1;
        }
        if component_bracket(&x, &y, &a)? == bracket_sandwich(&x, &y, &a)? {
            t.agreement += 1;
        }
        if coboundary_identity_check(&a, &[(x, y)])? {
            t.coboundary += 1;
        }
        let xs = BlockVector::new((0..n).map(|_| sampling::antisymmetric_matrix(&mut rng, p)).collect())?;
        let ys = BlockVector::new((0..n).map(|_| sampling::antisymmetric_matrix(&mut rng, p)).collect())?;
        let syms = BlockVector::new((0..n).map(|_| sampling::symmetric_matrix(&mut rng, p)).collect())?;
        if blocks_antisymmetric(&component_bracket(&xs, &ys, &syms)?) {
            t.so_sym += 1;
        }
    }
    let ok = [t.closure, t.agreement, t.coboundary, t.so_sym].iter().all(|k| *k == trials);
    let status = Status::from_bool(ok);
    let text = format!(
        "seed: {seed}\ntrials: {trials}\nn: {n}\np: {p}\nclosure: {}/{trials}\nbracket agreement: {}/{trials}\n\
         coboundary identity: {}/{trials}\nso/sym closure: {}/{trials}\n{}\n",
        t.closure,
        t.agreement,
        t.coboundary,
        t.so_sym,
        status.label()
    );
    let json = json!({
        "command": "sandwich-check",
        "status": status.label(),
        "seed": seed,
        "trials": trials,
        "n": n,
        "p": p,
        "passed": {
            "closure": t.closure,
            "bracket_agreement": t.agreement,
            "coboundary_identity": t.coboundary,
            "so_sym_closure": t.so_sym,
        },
    });
    Ok(Outcome::new(status, text, json))
}

fn poisson_bracket(algebra: &str, f: &Path, g: &Path, cap: usize) -> CmdResult {
    let t = PoissonTensor::new(resolve_algebra(algebra, cap)?)?;
    let f = poly_from_json(&read(f)?)?;
    let g = poly_from_json(&read(g)?)?;
    let h = lie_poisson_bracket(&t, &f, &g)?;
    let text = format!("{h}\n");
    Ok(Outcome::rendered(Status::Pass, text, poly_to_json(&h)))
}
