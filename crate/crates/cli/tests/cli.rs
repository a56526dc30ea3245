use std::path::PathBuf;

use paratensor_cli::{run, EXIT_ERROR, EXIT_FAIL, EXIT_PASS};
use serde_json::Value;

fn manifest(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "manifests", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("paratensor").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn verify_concircular_both_modes() {
    let file = manifest("e3_plus.manifest");
    let (code, out, _) = invoke(&["verify", &file, "--preset", "concircular", "--mode", "both"]);
    assert_eq!(code, EXIT_PASS, "{out}");
    for id in ["ricci-xi-xi", "riemann-3d", "phi-T-symmetry:concircular:local", "phi-T-symmetry:concircular:global"] {
        assert!(out.contains(&format!("PASS {id}")), "missing {id}");
    }
    assert!(!out.contains("FAIL"));
}

#[test]
fn verify_e3_minus_json() {
    let file = manifest("e3_minus.manifest");
    let (code, out, _) = invoke(&["verify", &file, "--format", "json"]);
    assert_eq!(code, EXIT_PASS);
    let v: Value = serde_json::from_str(&out).unwrap();
    for key in ["manifest", "dim", "epsilon", "geometry", "checks", "verdicts", "paper_discrepancies"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["epsilon"], "-1");
    assert_eq!(v["geometry"]["scalar"], "6");
    assert_eq!(v["geometry"]["connection"][0][0][0], "0");
    assert_eq!(v["geometry"]["connection"][2][0][0], "1");
    assert_eq!(v["verdicts"].as_array().unwrap().len(), 20);
    let table = v["paper_discrepancies"].as_array().unwrap();
    let r = table.iter().find(|e| e["item"] == "r").unwrap();
    assert_eq!(r["published"], "-2");
    assert_eq!(r["engine"], "6");
    assert_eq!(r["agrees"], false);
    assert!(table.iter().any(|e| e["item"] == "nabla_e3 e1" && e["agrees"] == false));
}

#[test]
fn broken_jacobi_exits_one_with_witness() {
    let (code, out, _) = invoke(&["verify", &manifest("broken_jacobi.manifest")]);
    assert_eq!(code, EXIT_FAIL);
    assert!(out.contains("FAIL jacobi at (1,2,3,3): expected 0, got -1"), "{out}");
}

#[test]
fn frame_only_manifests_skip_paracontact_checks() {
    for name in ["heisenberg.manifest", "abelian_flat.manifest"] {
        let (code, out, _) = invoke(&["verify", &manifest(name)]);
        assert_eq!(code, EXIT_PASS, "{name}");
        assert!(out.contains("paracontact checks: manifest has no paracontact structure"));
    }
    let (code, _, err) = invoke(&["verify", &manifest("heisenberg.manifest"), "--checks", "symmetry"]);
    assert_eq!(code, EXIT_ERROR);
    assert!(err.contains("needs [phi]"));
}

#[test]
fn usage_and_parse_errors_exit_two() {
    let (code, _, _) = invoke(&["verify"]);
    assert_eq!(code, EXIT_ERROR);
    let (code, _, err) = invoke(&["verify", "/no/such/file.manifest"]);
    assert_eq!(code, EXIT_ERROR);
    assert!(err.contains("cannot read"));
    let (code, _, err) = invoke(&["verify", &manifest("e3_plus.manifest"), "--preset", "nonsense"]);
    assert_eq!(code, EXIT_ERROR);
    assert!(err.contains("unknown preset"));
    let (code, _, _) = invoke(&["verify", &manifest("e3_plus.manifest"), "--params", "1,2,3"]);
    assert_eq!(code, EXIT_ERROR);
    let (code, _, _) = invoke(&["verify", &manifest("e3_plus.manifest"), "--checks", "frame,bogus"]);
    assert_eq!(code, EXIT_ERROR);

    let dir = std::env::temp_dir().join(format!("paratensor-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.manifest");
    std::fs::write(&bad, "[manifold]\ndim = 3\n[metric]\n1 0 0\n1 0\n0 0 1\n").unwrap();
    let (code, _, err) = invoke(&["verify", bad.to_str().unwrap()]);
    assert_eq!(code, EXIT_ERROR);
    assert!(err.contains("line 5"), "{err}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn explicit_params_and_modes() {
    let file = manifest("e3_plus.manifest");
    let (code, out, _) = invoke(&["verify", &file, "--params", "1,-1/2,0,0,0,0,0,3/4", "--mode", "global"]);
    assert_eq!(code, EXIT_PASS);
    assert!(out.contains("PASS phi-T-symmetry:custom:global"));
    assert!(!out.contains(":local"));
    let (code, out, _) = invoke(&["verify", &file, "--preset", "quasiconformal:2,-1/3", "--checks", "symmetry"]);
    assert_eq!(code, EXIT_PASS);
    assert!(out.contains("PASS phi-T-symmetry:quasiconformal:2,-1/3:local"));
    assert!(!out.contains("jacobi"));
}

#[test]
fn bundled_name_fallback() {
    let (code, out, _) = invoke(&["verify", "e3_plus.manifest", "--checks", "frame"]);
    assert_eq!(code, EXIT_PASS);
    assert!(out.contains("PASS jacobi"));
}

#[test]
fn json_is_deterministic_and_timestamps_opt_in() {
    let file = manifest("e3_plus.manifest");
    let args = ["verify", file.as_str(), "--mode", "both", "--format", "json"];
    let (_, a, _) = invoke(&args);
    let (_, b, _) = invoke(&args);
    assert_eq!(a, b);
    assert!(!a.contains("timestamp"));
    let (_, c, _) = invoke(&["verify", &file, "--format", "json", "--timestamps"]);
    assert!(c.contains("\"timestamp\""));
}

#[test]
fn presets_listing() {
    let (code, out, _) = invoke(&["presets", "--dim", "4"]);
    assert_eq!(code, EXIT_PASS);
    assert!(out.contains("w7"));
    assert!(out.contains("CONSTANT_R_CLASS"));
    let (code, out, _) = invoke(&["presets", "--dim", "4", "--format", "json"]);
    assert_eq!(code, EXIT_PASS);
    let v: Value = serde_json::from_str(&out).unwrap();
    let rows = v["presets"].as_array().unwrap();
    assert_eq!(rows.len(), 20);
    let conharmonic = rows.iter().find(|r| r["name"] == "conharmonic").unwrap();
    assert_eq!(conharmonic["coeffs"][1], "-1/2");
    assert_eq!(conharmonic["verdict"], "CONSTANT_R_CLASS");
    let (code, out, _) = invoke(&["presets", "--dim", "2"]);
    assert_eq!(code, EXIT_PASS);
    assert!(out.contains("undefined in dimension 2"));
}

#[test]
fn geometry_subcommand() {
    let (code, out, _) = invoke(&["geometry", &manifest("e3_plus.manifest")]);
    assert_eq!(code, EXIT_PASS);
    assert!(out.contains("nabla_e1 e1 = -e3"));
    assert!(out.contains("nabla_e3 e1 = 0"));
    assert!(out.contains("scalar curvature r = -6"));
    let (code, out, _) = invoke(&["geometry", &manifest("heisenberg.manifest"), "--format", "json"]);
    assert_eq!(code, EXIT_PASS);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["geometry"]["scalar"], "-1/2");
    let (code, _, err) = invoke(&["geometry", &manifest("broken_jacobi.manifest")]);
    assert_eq!(code, EXIT_ERROR);
    assert!(err.contains("jacobi"));
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = invoke(&["--help"]);
    assert_eq!(code, EXIT_PASS);
    assert!(out.contains("verify"));
}
