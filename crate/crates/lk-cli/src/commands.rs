//! One report builder per command.

use exact_rings::{with_field, Field, FieldVisitor, Matrix, QuotientField, Scalar, Specialization};
use lk_representation::{build_matrices, build_matrices_recursive, verify_relations, LKMatrices};
use root_system::{num_roots, RootIndex};
use serde_json::{json, Map, Value};
use spectral_analysis::{
    check_membership, check_membership_in, det_t, kernel, named_vectors, rank_witness, reducibility_locus,
    submatrix_det, SizeGuard, CASES,
};
use specht_dims::{dim_gaps, sym_dims};
use xij_operators::{sum_matrix, sum_matrix_direct};

use crate::error::CliError;
use crate::{parse_modulus, parse_specialization, Builder, Command, FieldArgs, Method, Which};

/// A command's JSON report, plus the failure to signal when the command ran
/// but a checked property does not hold.
#[derive(Clone, Debug)]
pub struct Report {
    pub value: Value,
    pub failure: Option<CliError>,
}

impl Report {
    fn ok(value: Value) -> Self {
        Report { value, failure: None }
    }
}

/// Largest n accepted by `specht`, keeping every dimension within a u64.
pub const SPECHT_MAX_N: usize = 20;

fn check_n(cmd: &Command) -> Result<(), CliError> {
    let n = cmd.n();
    if n < 3 {
        return Err(CliError::Input(format!("n must be at least 3, got {n}")));
    }
    if matches!(cmd, Command::Specht { .. }) && n > SPECHT_MAX_N {
        return Err(CliError::Input(format!("specht supports n up to {SPECHT_MAX_N}, got {n}")));
    }
    Ok(())
}

fn guard(force: bool) -> SizeGuard {
    if force {
        SizeGuard::unlimited()
    } else {
        SizeGuard::from_env()
    }
}

fn spec_of(f: &FieldArgs) -> Result<Specialization, CliError> {
    parse_specialization(&f.l, f.modulus.as_deref())
}

fn matrix_json<E: Scalar>(m: &Matrix<E>) -> Value {
    json!(m.to_string_rows())
}

fn roots(n: usize) -> Vec<String> {
    (1..=num_roots(n)).map(|p| RootIndex::at(p, n).expect("position in range").to_string()).collect()
}

/// Builds the report for `cmd`.
pub fn report(cmd: &Command) -> Result<Report, CliError> {
    check_n(cmd)?;
    let mut report = match cmd {
        Command::Locus { n, force } => locus(*n, *force)?,
        Command::CheckVectors { n, case, modulus } => check_vectors(*n, case, modulus.as_deref())?,
        Command::Specht { n, gap_check } => Report::ok(specht(*n, *gap_check)),
        Command::Matrices { field, .. }
        | Command::Verify { field, .. }
        | Command::SumMatrix { field, .. }
        | Command::Det { field, .. }
        | Command::Kernel { field, .. }
        | Command::RankWitness { field, .. } => {
            let spec = spec_of(field)?;
            let mut r = with_field(&spec, OnField { cmd })??;
            if let Value::Object(map) = &mut r.value {
                map.insert("spec".into(), json!(spec.label()));
            }
            r
        }
    };
    if let Value::Object(map) = &mut report.value {
        map.insert("command".into(), json!(cmd.name()));
        map.insert("n".into(), json!(cmd.n()));
    }
    Ok(report)
}

/// Commands that run over the field chosen with `--l` / `--modulus`.
struct OnField<'a> {
    cmd: &'a Command,
}

impl FieldVisitor for OnField<'_> {
    type Output = Result<Report, CliError>;

    fn visit<F: Field>(self, field: &F) -> Self::Output {
        match self.cmd {
            Command::Matrices { n, which, builder, .. } => Ok(Report::ok(matrices(&build(*n, field, *builder)?, *which))),
            Command::Verify { n, builder, .. } => Ok(verify(&build(*n, field, *builder)?)),
            Command::SumMatrix { n, method, .. } => sum(*n, field, *method).map(Report::ok),
            Command::Det { n, force, .. } => {
                let d = det_t(*n, field, guard(*force))?;
                Ok(Report::ok(json!({ "det": d.canonical(), "is_zero": d.is_zero() })))
            }
            Command::Kernel { n, .. } => {
                let k = kernel(*n, field)?;
                let basis: Vec<Vec<String>> =
                    k.basis.iter().map(|v| v.iter().map(Scalar::canonical).collect()).collect();
                Ok(Report::ok(json!({ "dim": k.dim, "rank": k.rank, "roots": roots(*n), "basis": basis })))
            }
            Command::RankWitness { n, size, rows, cols, .. } => witness(*n, field, *size, rows, cols).map(Report::ok),
            Command::Locus { .. } | Command::CheckVectors { .. } | Command::Specht { .. } => {
                unreachable!("handled without a field")
            }
        }
    }
}

fn build<F: Field>(n: usize, field: &F, builder: Builder) -> Result<LKMatrices<F>, CliError> {
    Ok(match builder {
        Builder::Direct => build_matrices(n, field)?,
        Builder::Recursive => build_matrices_recursive(n, field)?,
    })
}

fn matrices<F: Field>(m: &LKMatrices<F>, which: Which) -> Value {
    let mut map = Map::new();
    let all = |get: &dyn Fn(usize) -> Value| -> Value { Value::Array((1..m.n).map(get).collect()) };
    if matches!(which, Which::G | Which::All) {
        map.insert("G".into(), all(&|i| matrix_json(m.g(i))));
    }
    if matches!(which, Which::E | Which::All) {
        map.insert("E".into(), all(&|i| matrix_json(m.e(i))));
    }
    if matches!(which, Which::Ginv | Which::All) {
        map.insert("Ginv".into(), all(&|i| matrix_json(m.ginv(i))));
    }
    map.insert("dim".into(), json!(m.dim()));
    map.insert("roots".into(), json!(roots(m.n)));
    Value::Object(map)
}

fn verify<F: Field>(m: &LKMatrices<F>) -> Report {
    let rep = verify_relations(m);
    let checks: Vec<Value> = rep
        .checks
        .iter()
        .map(|c| {
            json!({
                "name": c.name,
                "statement": c.statement,
                "instances": c.instances,
                "passed": c.passed(),
                "failures": c.failures,
            })
        })
        .collect();
    let failure = (!rep.all_pass()).then(|| {
        let failed: Vec<&str> = rep.checks.iter().filter(|c| !c.passed()).map(|c| c.name).collect();
        CliError::CheckFailed(format!("relations failing: {}", failed.join(", ")))
    });
    Report { value: json!({ "all_pass": rep.all_pass(), "checks": checks }), failure }
}

fn sum<F: Field>(n: usize, field: &F, method: Method) -> Result<Value, CliError> {
    let s = match method {
        Method::Direct => sum_matrix_direct(&lk_representation::Params::new(field)?, n),
        Method::Conjugation => sum_matrix(&build_matrices(n, field)?)?,
    };
    let method = match method {
        Method::Direct => "direct",
        Method::Conjugation => "conjugation",
    };
    Ok(json!({ "method": method, "roots": roots(n), "matrix": matrix_json(&s.matrix) }))
}

fn pool(given: &[usize], dim: usize, what: &str) -> Result<Vec<usize>, CliError> {
    if given.is_empty() {
        return Ok((1..=dim).collect());
    }
    if let Some(bad) = given.iter().find(|&&k| k == 0 || k > dim) {
        return Err(CliError::Input(format!("{what} index {bad} is outside 1..={dim}")));
    }
    let mut v = given.to_vec();
    v.sort_unstable();
    v.dedup();
    Ok(v)
}

fn witness<F: Field>(n: usize, field: &F, size: usize, rows: &[usize], cols: &[usize]) -> Result<Value, CliError> {
    let dim = num_roots(n);
    let rows = pool(rows, dim, "row")?;
    let cols = pool(cols, dim, "column")?;
    if size == 0 || size > rows.len() || size > cols.len() {
        return Err(CliError::Input(format!(
            "size {size} must lie in 1..={} for the given row and column pools",
            rows.len().min(cols.len())
        )));
    }
    let hit = rank_witness(n, field, size, &rows, &cols)?;
    let found = match hit {
        Some((r, c)) => {
            let d = submatrix_det(n, field, &r, &c)?;
            json!({ "rows": r, "cols": c, "det": d.canonical() })
        }
        None => Value::Null,
    };
    Ok(json!({ "size": size, "witness": found }))
}

fn locus(n: usize, force: bool) -> Result<Report, CliError> {
    let rep = reducibility_locus(n, guard(force))?;
    let factors: Vec<Value> = rep
        .factors
        .iter()
        .map(|f| json!({ "root": f.root.canonical(), "multiplicity": f.multiplicity }))
        .collect();
    Ok(Report::ok(json!({
        "factors": factors,
        "located_degree": rep.located_degree(),
        "residual": rep.residual.canonical(),
        "residual_l_degree": rep.residual_l_degree(),
        "l_denominator_power": rep.l_denominator_power,
        "scalar": rep.scalar.canonical(),
    })))
}

fn check_vectors(n: usize, case: &str, modulus: Option<&str>) -> Result<Report, CliError> {
    if case == "list" {
        return Ok(Report::ok(json!({ "cases": CASES })));
    }
    let modulus = modulus.map(parse_modulus).transpose()?;
    let vectors = named_vectors(n, case)?;
    let mut rows = Vec::with_capacity(vectors.len());
    let mut failed = Vec::new();
    for v in &vectors {
        let member = match &modulus {
            None => check_membership(v)?,
            Some(m) => check_membership_in(v, &QuotientField::new(v.l.clone(), m.clone())?)?,
        };
        if !member {
            failed.push(v.name.clone());
        }
        let coords: Map<String, Value> = v
            .dense()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(p, c)| (RootIndex::at(p + 1, n).expect("position in range").to_string(), json!(c.canonical())))
            .collect();
        rows.push(json!({ "name": v.name, "l": v.l.canonical(), "coords": coords, "member": member }));
    }
    let failure = (!failed.is_empty())
        .then(|| CliError::CheckFailed(format!("not in the kernel: {}", failed.join(", "))));
    Ok(Report { value: json!({ "case": case, "all_members": failed.is_empty(), "vectors": rows }), failure })
}

fn specht(n: usize, gap_check: bool) -> Value {
    let entry = |(p, d): &(specht_dims::Partition, u128)| {
        json!({ "partition": p.to_string(), "dim": u64::try_from(*d).expect("bounded by n") })
    };
    let dims: Vec<Value> = sym_dims(n).iter().map(entry).collect();
    let mut map = Map::new();
    map.insert("dims".into(), Value::Array(dims));
    if gap_check {
        let k = n as u64;
        let gaps: Vec<Value> = dim_gaps(n).iter().map(entry).collect();
        map.insert(
            "gap_check".into(),
            json!({
                "passed": gaps.is_empty(),
                "bound": (k - 1) * (k - 2) / 2,
                "allowed": [1, k - 1, k * (k - 3) / 2, (k - 1) * (k - 2) / 2],
                "gaps": gaps,
            }),
        );
    }
    Value::Object(map)
}
