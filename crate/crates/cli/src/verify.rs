use serde::Serialize;
use serde_json::Value;

use paratensor::connection::{metricity_defect, torsion_defect};
use paratensor::curvature::curvature_symmetry_suite;
use paratensor::paracontact::{consequence_suite, dim3_formula_suite, identity_suite, validate_eps_ps, validate_paracontact};
use paratensor::reference::{detect_e3, e3_table_comparison, TableEntry};
use paratensor::symmetry::{
    cross_validate_theorems, eta_parallel_ricci_check, phi_t_symmetry_check, theorem_conditions, SymmetryMode,
    TheoremConditions,
};
use paratensor::{
    validate_frame, CheckReport, CheckResult, Error, GeometryCache, Manifest, Preset, Rational, Result, Status,
    TParams, Tensor, Witness,
};

/// Check groups in execution order.
pub const GROUPS: [&str; 10] = [
    "frame",
    "connection",
    "curvature",
    "paracontact",
    "identities",
    "consequences",
    "dim3",
    "eta-parallel",
    "symmetry",
    "theorems",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModeSelection {
    Local,
    Global,
    Both,
}

impl ModeSelection {
    pub fn modes(self) -> &'static [SymmetryMode] {
        match self {
            ModeSelection::Local => &[SymmetryMode::Local],
            ModeSelection::Global => &[SymmetryMode::Global],
            ModeSelection::Both => &[SymmetryMode::Local, SymmetryMode::Global],
        }
    }
}

/// Which coefficient vectors to run the 𝒯-checks for.
#[derive(Debug, Clone)]
pub enum ParamSelection {
    /// Manifest `[tparams]`, or every preset when the manifest has none.
    Default,
    Given { label: String, params: TParams },
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub params: ParamSelection,
    pub modes: ModeSelection,
    /// `None` runs every applicable group.
    pub groups: Option<Vec<String>>,
    pub timestamp: Option<u64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct GeometryJson {
    pub connection: Value,
    pub riemann: Value,
    pub ricci: Value,
    pub ricci_operator: Value,
    pub scalar: Rational,
}

#[derive(Debug, Clone, Serialize)]
pub struct PresetVerdict {
    pub params: String,
    pub coeffs: [Rational; 8],
    #[serde(flatten)]
    pub conditions: TheoremConditions,
    pub local: Option<Status>,
    pub global: Option<Status>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub manifest: String,
    pub dim: usize,
    pub epsilon: Option<Rational>,
    pub geometry: Option<GeometryJson>,
    pub checks: Vec<CheckResult>,
    pub verdicts: Vec<PresetVerdict>,
    pub paper_discrepancies: Vec<TableEntry>,
    pub skipped: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<u64>,
}

impl VerifyReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }
}

/// Nested arrays of rational strings following the slot order.
pub fn tensor_json(t: &Tensor) -> Value {
    fn build(t: &Tensor, prefix: &mut Vec<usize>) -> Value {
        if prefix.len() == t.rank() {
            return Value::String(t.get(prefix).to_string());
        }
        let items = (0..t.dim())
            .map(|i| {
                prefix.push(i);
                let v = build(t, prefix);
                prefix.pop();
                v
            })
            .collect();
        Value::Array(items)
    }
    build(t, &mut Vec::new())
}

pub fn geometry_json(geom: &GeometryCache) -> GeometryJson {
    GeometryJson {
        connection: tensor_json(geom.conn.gamma()),
        riemann: tensor_json(&geom.riemann),
        ricci: tensor_json(&geom.ricci),
        ricci_operator: tensor_json(&geom.ricci_op),
        scalar: geom.scalar.clone(),
    }
}

fn param_list(manifest: &Manifest, sel: &ParamSelection) -> Result<Vec<(String, Option<TParams>)>> {
    let m = manifest.frame.dim();
    match sel {
        ParamSelection::Given { label, params } => {
            params.check_dim(m)?;
            Ok(vec![(label.clone(), Some(params.clone()))])
        }
        ParamSelection::Default => match &manifest.tparams {
            Some(src) => {
                let params = src.resolve(m)?;
                let label = match src {
                    paratensor::TParamsSource::Preset(p) => p.to_string(),
                    paratensor::TParamsSource::Explicit(_) => "custom".to_string(),
                };
                Ok(vec![(label, Some(params))])
            }
            // presets undefined at this dimension are listed without params
            None => Ok(Preset::ALL
                .iter()
                .map(|p| (p.name().to_string(), p.params(m).ok()))
                .collect()),
        },
    }
}

fn symmetry_result(id: String, mode_check: Result<paratensor::symmetry::SymmetryVerdict>) -> Result<CheckResult> {
    let v = mode_check?;
    Ok(match v.witness {
        None => CheckResult::pass(id),
        Some(w) => CheckResult::fail(
            id,
            Witness::at(&w.map(|x| x - 1), Rational::zero(), v.defect_max_entry).with_note("(w,i,j,k,l)"),
        ),
    })
}

pub fn verify(name: &str, manifest: &Manifest, opts: &VerifyOptions) -> Result<VerifyReport> {
    let spec = &manifest.frame;
    let m = spec.dim();
    if let Some(groups) = &opts.groups {
        for g in groups {
            if !GROUPS.contains(&g.as_str()) {
                return Err(Error::Usage(format!(
                    "unknown check group `{g}` (expected one of {})",
                    GROUPS.join(", ")
                )));
            }
        }
    }
    let wanted = |g: &str| opts.groups.as_ref().is_none_or(|gs| gs.iter().any(|x| x == g));
    let explicit = |g: &str| opts.groups.as_ref().is_some_and(|gs| gs.iter().any(|x| x == g));
    let params = param_list(manifest, &opts.params)?;

    let mut report = VerifyReport {
        manifest: name.to_string(),
        dim: m,
        epsilon: manifest.epsilon.clone(),
        geometry: None,
        checks: Vec::new(),
        verdicts: Vec::new(),
        paper_discrepancies: Vec::new(),
        skipped: Vec::new(),
        timestamp: opts.timestamp,
    };
    let push = |report: &mut VerifyReport, r: CheckReport| report.checks.extend(r.results);

    let frame_report = validate_frame(spec);
    let frame_ok = frame_report.all_pass();
    // a frame that fails validation is always reported, whatever was selected
    if wanted("frame") || !frame_ok {
        push(&mut report, frame_report);
    }
    if !frame_ok {
        report.skipped.push("all geometry checks: frame failed validation".into());
        return Ok(report);
    }

    let geom = GeometryCache::new(spec)?;
    report.geometry = Some(geometry_json(&geom));

    if wanted("connection") {
        let mut r = CheckReport::new();
        r.push(CheckResult::zero("torsion-free", &torsion_defect(spec, &geom.conn)));
        r.push(CheckResult::zero("metric-compatible", &metricity_defect(spec, &geom.conn)));
        push(&mut report, r);
    }
    if wanted("curvature") {
        push(&mut report, curvature_symmetry_suite(&geom, spec));
    }

    let pc_groups = ["paracontact", "identities", "consequences", "dim3", "eta-parallel", "symmetry", "theorems"];
    let Some(pc) = &manifest.pc else {
        if let Some(g) = pc_groups.iter().find(|g| explicit(g)) {
            return Err(Error::Usage(format!(
                "check group `{g}` needs [phi], [xi] and [eta] in the manifest"
            )));
        }
        report.skipped.push("paracontact checks: manifest has no paracontact structure".into());
        return Ok(report);
    };

    let mut structure = validate_paracontact(spec, pc);
    if structure.all_pass() {
        structure.extend(validate_eps_ps(spec, pc, &geom));
    }
    let eps_ps = structure.all_pass();
    if wanted("paracontact") || !eps_ps {
        push(&mut report, structure);
    }
    if !eps_ps {
        report
            .skipped
            .push("identity, symmetry and theorem checks: structure is not (eps)-para Sasakian".into());
        return Ok(report);
    }

    if let Some(eps) = detect_e3(spec, Some(pc)) {
        report.paper_discrepancies = e3_table_comparison(eps, &geom);
    }

    if wanted("identities") {
        push(&mut report, identity_suite(spec, pc, &geom));
    }
    if wanted("consequences") {
        push(&mut report, consequence_suite(spec, pc, &geom));
    }
    if wanted("dim3") {
        if m == 3 {
            push(&mut report, dim3_formula_suite(spec, pc, &geom)?);
        } else if explicit("dim3") {
            return Err(Error::Dimension(format!("check group `dim3` needs dimension 3, got {m}")));
        } else {
            report.skipped.push(format!("dim3: dimension is {m}"));
        }
    }
    if wanted("eta-parallel") {
        push(&mut report, eta_parallel_ricci_check(spec, pc, &geom));
    }

    for (label, p) in &params {
        let Some(p) = p else {
            report.skipped.push(format!("{label}: undefined in dimension {m}"));
            continue;
        };
        let mut verdict = PresetVerdict {
            params: label.clone(),
            coeffs: p.coeffs.clone(),
            conditions: theorem_conditions(p, m),
            local: None,
            global: None,
        };
        if wanted("symmetry") {
            for &mode in opts.modes.modes() {
                let id = format!("phi-T-symmetry:{label}:{mode}");
                let r = symmetry_result(id, phi_t_symmetry_check(spec, pc, &geom, p, mode))?;
                match mode {
                    SymmetryMode::Local => verdict.local = Some(r.status),
                    SymmetryMode::Global => verdict.global = Some(r.status),
                }
                report.checks.push(r);
            }
        }
        if wanted("theorems") && m == 3 {
            let mut r = cross_validate_theorems(spec, pc, &geom, p)?;
            for c in &mut r.results {
                c.id = format!("{}:{label}", c.id);
            }
            push(&mut report, r);
        }
        report.verdicts.push(verdict);
    }
    if wanted("theorems") && m != 3 {
        report.skipped.push(format!("theorems: dimension is {m}"));
    }
    Ok(report)
}
