use std::path::PathBuf;
use std::process::Command;

use gzschubert::formats::{character_from_json, CharacterTerm, DegreeJson, FaceJson, PolyJson};
use gzschubert_core::chars::{demazure_character, Method};
use gzschubert_core::gz::{enumerate_reduced_kogan, FaceDiagram, StrictWeight};
use gzschubert_core::perm::Permutation;
use gzschubert_core::poly::schubert_bgg;
use serde_json::Value;

fn run(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_gzschubert")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).expect("utf-8"))
}

fn json(args: &[&str]) -> Value {
    let (code, out) = run(args);
    assert_eq!(code, 0, "{:?}: {}", args, out);
    serde_json::from_str(&out).expect("valid JSON")
}

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("golden")
}

const PERMS: [&str; 6] = ["1,2,3", "2,1,3", "1,3,2", "2,3,1", "3,1,2", "3,2,1"];

#[test]
fn golden_files_match() {
    for p in PERMS {
        let tag = p.replace(',', "");
        let cases: [(&str, Vec<&str>); 4] = [
            ("schubert", vec!["schubert", "--perm", p, "--method", "bgg"]),
            ("faces", vec!["faces", "--perm", p]),
            ("character_012", vec!["character", "--lambda", "0,1,2", "--perm", p, "--method", "faces"]),
            ("degree_012", vec!["degree", "--lambda", "0,1,2", "--perm", p]),
        ];
        for (name, args) in cases {
            let path = golden_dir().join(format!("{}_{}.json", name, tag));
            let want = std::fs::read_to_string(&path).expect("golden file");
            let (code, got) = run(&args);
            assert_eq!(code, 0);
            assert_eq!(got, want, "{}", path.display());
        }
    }
}

#[test]
fn schubert_example_and_methods_agree() {
    let fk = json(&["schubert", "--n", "3", "--perm", "3,2,1", "--method", "fk"]);
    assert_eq!(fk, serde_json::json!({"poly": [{"exps": [2, 1], "coef": "1"}]}));
    for w in Permutation::all(4) {
        let p = w.to_string();
        let a = json(&["schubert", "--perm", &p, "--method", "bgg"]);
        let b = json(&["schubert", "--perm", &p, "--method", "fk"]);
        assert_eq!(a, b);
        let back: PolyJson = serde_json::from_value(a).unwrap();
        assert_eq!(back.to_poly(3).unwrap(), schubert_bgg(&w).unwrap().to_rational());
    }
    let by_word = json(&["schubert", "--word", "1,2,1", "--n", "3"]);
    assert_eq!(by_word, fk);
}

#[test]
fn character_methods_agree_and_round_trip() {
    for p in PERMS {
        let faces = json(&["character", "--lambda", "0,2,5", "--perm", p, "--method", "faces"]);
        let ops = json(&["character", "--lambda", "0,2,5", "--perm", p, "--method", "operators"]);
        assert_eq!(faces["character"], ops["character"]);
        let terms: Vec<CharacterTerm> = serde_json::from_value(faces["character"].clone()).unwrap();
        let lambda = StrictWeight::new(vec![0, 2, 5]).unwrap();
        let w: Permutation = p.parse().unwrap();
        let c = character_from_json(3, lambda.total(), &terms).unwrap();
        assert_eq!(c, demazure_character(&lambda, &w, Method::Faces).unwrap());
    }
    let full = json(&["character", "--lambda", "0,1,2", "--perm", "1,2,3", "--method", "faces"]);
    assert_eq!(full["total"], "8");
}

#[test]
fn faces_and_mitosis_round_trip() {
    let w: Permutation = "2,1,4,3".parse().unwrap();
    for dual in [false, true] {
        let mut args = vec!["faces", "--perm", "2,1,4,3"];
        if dual {
            args.push("--dual");
        }
        let out = json(&args);
        let faces: Vec<FaceJson> = serde_json::from_value(out["faces"].clone()).unwrap();
        let faces: Vec<FaceDiagram> = faces.iter().map(|f| FaceDiagram::try_from(f).unwrap()).collect();
        assert_eq!(faces, enumerate_reduced_kogan(&w, dual));
    }
    let m = json(&["mitosis", "--perm", "3,2,1", "--row", "1"]);
    let next: Permutation = "3,1,2".parse().unwrap();
    assert_eq!(m["result"], serde_json::json!(next.image()));
    let faces: Vec<FaceJson> = serde_json::from_value(m["faces"].clone()).unwrap();
    let faces: Vec<FaceDiagram> = faces.iter().map(|f| FaceDiagram::try_from(f).unwrap()).collect();
    assert_eq!(faces, enumerate_reduced_kogan(&next, false));
    let single = json(&["mitosis", "--row", "1", "--face", r#"{"n":3,"edges":[[0,1,"L"],[0,2,"L"],[1,1,"L"]]}"#]);
    assert_eq!(single["faces"], m["faces"]);
}

#[test]
fn degree_structure_richardson_hilbert() {
    let d: DegreeJson = serde_json::from_value(json(&["degree", "--lambda", "0,1,2", "--perm", "2,1,3"])).unwrap();
    assert_eq!((d.operator.as_str(), d.volume.as_str(), d.dual_volume.as_str()), ("3/2", "3/2", "3/2"));
    let s = json(&["structure", "--w", "2,1,3", "--u", "1,3,2", "--v", "2,3,1"]);
    assert_eq!((s["c"].as_str(), s["oracle"].as_str()), (Some("1"), Some("1")));
    let r = json(&["richardson", "--lambda", "0,1,2", "--w", "2,3,1", "--u", "2,1,3"]);
    assert_eq!(r["count"], 1);
    assert_eq!(r["agree"], true);
    let h = json(&["hilbert", "--lambda", "0,1,2", "--perm", "1,2,3", "--k", "2"]);
    assert_eq!(h["value"], "27");
}

#[test]
fn text_format_and_out_file() {
    let (code, text) = run(&["schubert", "--perm", "1,3,2", "--format", "text"]);
    assert_eq!(code, 0);
    assert_eq!(text.trim(), "x1 + x2");
    let dir = std::env::temp_dir().join(format!("gzschubert-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("out.json");
    let (code, stdout) = run(&["schubert", "--perm", "3,2,1", "--out", path.to_str().unwrap()]);
    assert_eq!((code, stdout.as_str()), (0, ""));
    let written: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(written["poly"][0]["coef"], "1");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn errors_are_json_with_exit_one() {
    let cases: [(&[&str], &str); 7] = [
        (&["schubert", "--perm", "3,3,1"], "invalid_permutation"),
        (&["schubert", "--perm", "1,2,3,4,5,6,7,8"], "n_out_of_range"),
        (&["character", "--lambda", "2,1,0", "--perm", "1,2,3"], "not_strictly_dominant"),
        (&["character", "--lambda", "0,1,2", "--perm", "1,2"], "rank_mismatch"),
        (&["structure", "--w", "2,1,3", "--u", "2,1,3", "--v", "2,1,3"], "length_mismatch"),
        (&["verify", "--suite", "nonsense"], "unknown_suite"),
        (&["frobnicate"], "usage"),
    ];
    for (args, kind) in cases {
        let (code, out) = run(args);
        assert_eq!(code, 1, "{:?}", args);
        let v: Value = serde_json::from_str(&out).unwrap_or_else(|_| panic!("not JSON: {}", out));
        assert_eq!(v["error"]["kind"], kind, "{:?}: {}", args, out);
    }
    let (code, _) = run(&["schubert", "--perm", "2,1,3,4,5,6,7,8", "--allow-large"]);
    assert_eq!(code, 0);
}

#[test]
fn verify_exits_zero_on_passing_suites() {
    let (code, out) = run(&["verify", "--suite", "demazure", "--n", "3", "--lambda", "0,1,2"]);
    assert_eq!(code, 0, "{}", out);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["failures"], serde_json::json!([]));
    assert!(v["checks"].as_u64().unwrap() > 0);
    for suite in ["golden", "ehrhart", "richardson"] {
        assert_eq!(run(&["verify", "--suite", suite]).0, 0, "{}", suite);
    }
}
