//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero if any fails.

use std::path::PathBuf;
use std::process::ExitCode;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use paratensor::connection::{metricity_defect, torsion_defect};
use paratensor::curvature::{constant_curvature_test, curvature_symmetry_suite, einstein_test, GeometryCache};
use paratensor::paracontact::{dim3_formula_suite, identity_suite, validate_eps_ps, validate_paracontact};
use paratensor::symmetry::{
    cross_validate_theorems, eta_parallel_ricci_check, mode_defect, phi_t_symmetry_check, theorem_conditions,
    SymmetryMode, TheoremVerdict,
};
use paratensor::tcurv::t_tensor_3d_closed_form;
use paratensor::{
    parse_manifest, q, t_tensor, validate_frame, FrameSpec, Manifest, ParacontactSpec, Preset, Rational, TParams,
};
use paratensor_cli::{run, EXIT_FAIL, EXIT_PASS};

type Outcome = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn manifest_path(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "manifests", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn load(name: &str) -> Manifest {
    let text = std::fs::read_to_string(manifest_path(name)).expect("bundled manifest");
    parse_manifest(&text).expect("bundled manifest parses")
}

struct E3 {
    eps: i64,
    spec: FrameSpec,
    pc: ParacontactSpec,
    geom: GeometryCache,
}

fn e3_both() -> Vec<E3> {
    [("e3_plus.manifest", 1), ("e3_minus.manifest", -1)]
        .into_iter()
        .map(|(file, eps)| {
            let m = load(file);
            let pc = m.pc.expect("paracontact structure");
            let geom = GeometryCache::new(&m.frame).expect("valid frame");
            E3 {
                eps,
                spec: m.frame,
                pc,
                geom,
            }
        })
        .collect()
}

fn invoke(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("paratensor").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap() + &String::from_utf8(err).unwrap())
}

fn random_params(rng: &mut ChaCha8Rng) -> TParams {
    TParams::explicit(std::array::from_fn(|_| q(rng.gen_range(-20..=20), rng.gen_range(1..=12))))
}

fn all_presets(m: usize) -> Vec<(Preset, TParams)> {
    Preset::ALL.iter().map(|&p| (p, p.params(m).expect("defined"))).collect()
}

fn axioms() -> Outcome {
    for e in e3_both() {
        for (what, report) in [
            ("frame", validate_frame(&e.spec)),
            ("paracontact", validate_paracontact(&e.spec, &e.pc)),
            ("eps-para-Sasakian", validate_eps_ps(&e.spec, &e.pc, &e.geom)),
        ] {
            ensure!(report.all_pass(), "eps {}: {what} failed:\n{report}", e.eps);
        }
    }
    Ok(())
}

fn identities() -> Outcome {
    for e in e3_both() {
        let report = identity_suite(&e.spec, &e.pc, &e.geom);
        ensure!(report.len() == 10, "expected 10 identities, got {}", report.len());
        ensure!(report.all_pass(), "eps {}:\n{report}", e.eps);
        let s_xi_xi = e.geom.ricci.get(&[2, 2]);
        ensure!(*s_xi_xi == q(-2, 1), "S(xi,xi) = {s_xi_xi}");
        let q_xi = e.pc.xi().apply_endomorphism(0, &e.geom.ricci_op).map_err(|x| x.to_string())?;
        let expected = e.pc.xi().scale(&q(-2 * e.eps, 1));
        ensure!(q_xi == expected, "Q xi = {q_xi:?}");
    }
    Ok(())
}

fn scalar_and_lemma() -> Outcome {
    for e in e3_both() {
        let eps = e.eps;
        ensure!(e.geom.scalar == q(-6 * eps, 1), "r = {}", e.geom.scalar);
        let c = constant_curvature_test(&e.geom.riemann_low, &e.geom.metric);
        ensure!(c == Some(q(-eps, 1)), "constant curvature {c:?}");
        let suite = dim3_formula_suite(&e.spec, &e.pc, &e.geom).map_err(|x| x.to_string())?;
        ensure!(suite.all_pass(), "{suite}");
        // both sides of the biconditional hold, so both implications are exercised
        let lhs = e.geom.scalar == q(-6 * eps, 1);
        ensure!(lhs == c.is_some(), "lemma sides disagree");
        // and the check fails once one side is broken
        let mut broken = e.geom.clone();
        broken.scalar = &broken.scalar + &Rational::one();
        let broken_suite = dim3_formula_suite(&e.spec, &e.pc, &broken).map_err(|x| x.to_string())?;
        let lemma = broken_suite.get("constant-curvature-lemma").ok_or("lemma check missing")?;
        ensure!(!lemma.passed(), "lemma check passed with r perturbed");

        let file = manifest_path(if eps == 1 { "e3_plus.manifest" } else { "e3_minus.manifest" });
        let (_, out) = invoke(&["verify", &file, "--format", "json", "--checks", "frame"]);
        let v: serde_json::Value = serde_json::from_str(&out).map_err(|x| x.to_string())?;
        let r = v["paper_discrepancies"]
            .as_array()
            .and_then(|t| t.iter().find(|x| x["item"] == "r"))
            .ok_or("no r entry in paper_discrepancies")?;
        let (published, agrees) = if eps == 1 { ("-6", true) } else { ("-2", false) };
        ensure!(
            r["published"] == published && r["engine"] == (-6 * eps).to_string() && r["agrees"] == agrees,
            "eps {eps}: r entry {r}"
        );
    }
    Ok(())
}

fn conformal_vanishing() -> Outcome {
    let conformal = Preset::Conformal.params(3).map_err(|x| x.to_string())?;
    for file in ["e3_plus.manifest", "e3_minus.manifest", "heisenberg.manifest", "abelian_flat.manifest"] {
        let geom = GeometryCache::new(&load(file).frame).map_err(|x| x.to_string())?;
        let t = t_tensor(&conformal, &geom).map_err(|x| x.to_string())?;
        ensure!(t.is_zero(), "{file}: {:?}", t.first_nonzero());
    }
    Ok(())
}

fn closed_form() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x7c0f_fee5);
    let random: Vec<TParams> = (0..100).map(|_| random_params(&mut rng)).collect();
    for e in e3_both() {
        let eps = q(e.eps, 1);
        let cases = all_presets(3).into_iter().map(|(_, p)| p).chain(random.iter().cloned());
        let mut n = 0;
        for p in cases {
            let direct = t_tensor(&p, &e.geom).map_err(|x| x.to_string())?;
            let closed = t_tensor_3d_closed_form(&p, &e.geom.scalar, &eps, &e.geom.metric, e.pc.eta(), e.pc.xi())
                .map_err(|x| x.to_string())?;
            ensure!(direct == closed, "eps {}: mismatch for {:?}", e.eps, p.coeffs);
            n += 1;
        }
        ensure!(n == 120, "ran {n} cases");
    }
    Ok(())
}

fn phi_t_symmetry() -> Outcome {
    for e in e3_both() {
        for (preset, p) in all_presets(3) {
            for mode in [SymmetryMode::Local, SymmetryMode::Global] {
                let v = phi_t_symmetry_check(&e.spec, &e.pc, &e.geom, &p, mode).map_err(|x| x.to_string())?;
                ensure!(v.pass(), "eps {}: {preset} {mode} witness {:?}", e.eps, v.witness);
            }
        }
    }
    Ok(())
}

fn classifier() -> Outcome {
    use TheoremVerdict::*;
    for (preset, p) in all_presets(4) {
        let expected = match preset {
            Preset::Conharmonic | Preset::W7 => ConstantRClass,
            Preset::Conformal | Preset::W0 | Preset::W8 => NoVerdict,
            _ => EinsteinClass,
        };
        let got = theorem_conditions(&p, 4).verdict;
        ensure!(got == expected, "{preset}: expected {expected}, got {got}");
    }
    let conformal3 = theorem_conditions(&Preset::Conformal.params(3).map_err(|x| x.to_string())?, 3);
    ensure!(!conformal3.thm41_applicable, "conformal at m = 3 reported thm41_applicable");
    Ok(())
}

fn einstein_reduction() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0008);
    let global = |e: &E3, p: &TParams| mode_defect(&e.spec, &e.pc, &e.geom, p, SymmetryMode::Global);
    for e in e3_both() {
        let lambda = einstein_test(&e.geom.ricci, &e.geom.metric);
        ensure!(lambda == Some(q(-2 * e.eps, 1)), "Einstein constant {lambda:?}");
        let riemann = global(&e, &Preset::Riemann.params(3).map_err(|x| x.to_string())?).map_err(|x| x.to_string())?;
        let units: Vec<_> = (0..8)
            .map(|i| global(&e, &TParams::unit(i)))
            .collect::<Result<_, _>>()
            .map_err(|x| x.to_string())?;
        ensure!(units[0] == riemann, "unit a0 differs from the Riemann preset");
        for _ in 0..20 {
            let p = random_params(&mut rng);
            let d = global(&e, &p).map_err(|x| x.to_string())?;
            ensure!(d == riemann.scale(p.a(0)), "defect differs from a0 * defect(R)");
            let mut rest = d.sub(&riemann.scale(p.a(0))).map_err(|x| x.to_string())?;
            for (i, u) in units.iter().enumerate().skip(1) {
                rest = rest.sub(&u.scale(p.a(i))).map_err(|x| x.to_string())?;
            }
            ensure!(rest.is_zero(), "basis decomposition leaves {:?}", rest.first_nonzero());
        }
    }
    Ok(())
}

fn eta_parallel() -> Outcome {
    for e in e3_both() {
        let report = eta_parallel_ricci_check(&e.spec, &e.pc, &e.geom);
        ensure!(report.all_pass(), "{report}");
        for (preset, p) in all_presets(3) {
            let r = cross_validate_theorems(&e.spec, &e.pc, &e.geom, &p).map_err(|x| x.to_string())?;
            let c = r.get("eta-parallel-implies-local").ok_or("composition check missing")?;
            ensure!(c.passed(), "eps {} {preset}: {c}", e.eps);
        }
    }
    Ok(())
}

fn structural() -> Outcome {
    for file in ["e3_plus.manifest", "e3_minus.manifest", "abelian_flat.manifest", "heisenberg.manifest"] {
        let spec = load(file).frame;
        let geom = GeometryCache::new(&spec).map_err(|x| x.to_string())?;
        ensure!(torsion_defect(&spec, &geom.conn).is_zero(), "{file}: torsion");
        ensure!(metricity_defect(&spec, &geom.conn).is_zero(), "{file}: metricity");
        let suite = curvature_symmetry_suite(&geom, &spec);
        ensure!(suite.all_pass(), "{file}:\n{suite}");
    }

    let (code, out) = invoke(&["verify", &manifest_path("broken_jacobi.manifest")]);
    ensure!(code == EXIT_FAIL, "broken_jacobi exit {code}");
    ensure!(out.contains("FAIL jacobi at (1,2,3,3): expected 0, got -1"), "{out}");

    let e = e3_both().remove(0);
    let mut bad = e.geom.clone();
    bad.riemann_low.set(&[0, 2, 2, 0], Rational::one());
    let suite = curvature_symmetry_suite(&bad, &e.spec);
    let pair = suite.get("riemann-pair-symmetry").ok_or("pair symmetry missing")?;
    let w = pair.witness.as_ref().ok_or("pair symmetry passed on injected fault")?;
    ensure!(w.indices == [1, 3, 3, 1] && w.actual == Rational::one(), "witness {w}");

    let mut bad = e.geom.clone();
    for ix in [[0, 2], [2, 0]] {
        let v = bad.ricci.get(&ix) + &Rational::one();
        bad.ricci.set(&ix, v);
    }
    let report = eta_parallel_ricci_check(&e.spec, &e.pc, &bad);
    let w = report.results[0].witness.as_ref().ok_or("eta-parallel passed on injected fault")?;
    ensure!(w.indices == [1, 1, 1] && w.actual == q(2 * e.eps, 1), "witness {w}");

    Ok(())
}

fn determinism() -> Outcome {
    let file = manifest_path("e3_plus.manifest");
    let args = ["verify", file.as_str(), "--mode", "both", "--format", "json"];
    let (c1, a) = invoke(&args);
    let (c2, b) = invoke(&args);
    ensure!(c1 == EXIT_PASS && c2 == EXIT_PASS, "exit codes {c1}, {c2}");
    ensure!(a.as_bytes() == b.as_bytes(), "outputs differ");
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("axioms hold on E3(+1) and E3(-1)", axioms),
        ("identity suite, S(xi,xi) = -2, Q xi = -2 eps xi", identities),
        ("r = -6 eps, c = -eps, lemma, r discrepancy reporting", scalar_and_lemma),
        ("conformal tensor vanishes on bundled 3-d manifests", conformal_vanishing),
        ("closed form equals t_tensor for 20 presets + 100 random vectors", closed_form),
        ("LOCAL and GLOBAL phi-T-symmetry for all presets", phi_t_symmetry),
        ("theorem-condition classifier partition", classifier),
        ("Einstein reduction and basis decomposition of the defect", einstein_reduction),
        ("eta-parallel Ricci and composition with LOCAL", eta_parallel),
        ("structural suites, Jacobi exit code, fault witnesses", structural),
        ("byte-identical JSON across runs", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(()) => println!("PASS criterion {}: {name}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
