use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn mlab(args: &[&str], env: &[(&str, &str)]) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_mlab"));
    cmd.args(args);
    for (k, _) in std::env::vars().filter(|(k, _)| k.starts_with("MLAB_")) {
        cmd.env_remove(k);
    }
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("binary runs");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn ok(args: &[&str]) -> String {
    let r = mlab(args, &[]);
    assert_eq!(r.code, 0, "{args:?}: {}", r.stderr);
    r.stdout
}

fn json(args: &[&str]) -> Vec<Value> {
    let mut full = vec!["--format", "json-lines"];
    full.extend_from_slice(args);
    ok(&full)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap_or_else(|e| panic!("{l}: {e}")))
        .collect()
}

fn record<'a>(records: &'a [Value], kind: &str) -> &'a Value {
    records
        .iter()
        .find(|r| r["record"] == kind)
        .unwrap_or_else(|| panic!("no {kind} record in {records:?}"))
}

fn corpus(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/corpus")
        .join(name)
        .display()
        .to_string()
}

#[test]
fn solve_reports_no_weak_solution() {
    let out = ok(&[
        "solve", "--G", "z2", "--B", "z2", "--A", "z4", "--alpha", "mod",
    ]);
    assert!(out.contains("verdict=no weak solution"), "{out}");
    let r = json(&[
        "solve", "--G", "z2", "--B", "z2", "--A", "v4", "--alpha", "0,1,0,1",
    ]);
    assert_eq!(record(&r, "solution")["verdict"], "weak solution");
}

#[test]
fn classify_left_zero() {
    let out = ok(&["classify", "--family", "left_zero", "--n", "2"]);
    for flag in ["band=true", "completely_regular=true", "aperiodic=true"] {
        assert!(out.contains(flag), "{out}");
    }
}

#[test]
fn expand_cyclic_two() {
    let out = ok(&["expand", "--family", "cyclic", "--n", "2", "--gens", "a"]);
    assert!(
        out.contains("order=3") && out.contains("eta_aperiodic_morphism=true"),
        "{out}"
    );
    let r = json(&["expand", "z2", "--gens", "a", "--word", "a", "--power", "4"]);
    let f = record(&r, "factorization");
    assert_eq!(
        (
            f["k1"].as_u64(),
            f["x"].as_str(),
            f["y"].as_str(),
            f["k2"].as_u64()
        ),
        (Some(2), Some("a"), Some(""), Some(1))
    );
}

#[test]
fn greens_of_a_group_is_one_cell() {
    let r = json(&["greens", "z3"]);
    let j: Vec<&Value> = r.iter().filter(|x| x["record"] == "j_class").collect();
    assert_eq!(j.len(), 1);
    assert_eq!(
        (j[0]["rows"].as_u64(), j[0]["columns"].as_u64()),
        (Some(1), Some(1))
    );
    let text = ok(&["greens", "z3"]);
    assert!(text.contains("| *0 1 2 |"), "{text}");
}

#[test]
fn greens_eggbox_of_full_transformation_two() {
    let r = json(&["greens", "t2"]);
    let mut shapes: Vec<(u64, u64)> = r
        .iter()
        .filter(|x| x["record"] == "j_class")
        .map(|x| (x["rows"].as_u64().unwrap(), x["columns"].as_u64().unwrap()))
        .collect();
    shapes.sort();
    // units form one cell; the two constants are R-related, not L-related
    assert_eq!(shapes, vec![(1, 1), (1, 2)]);
}

#[test]
fn empty_catalog_is_a_usage_error() {
    let r = mlab(&["enumerate", "--n", "0"], &[]);
    assert_eq!(r.code, 2);
    assert!(r.stdout.is_empty() && r.stderr.contains("kind=usage"));
}

#[test]
fn enumerate_counts() {
    for (kind, n, count) in [
        ("semigroups", "3", 24),
        ("monoids", "4", 35),
        ("groups", "8", 5),
    ] {
        let r = json(&["enumerate", "--kind", kind, "--n", n]);
        assert_eq!(record(&r, "enumerate")["count"], count, "{kind} {n}");
        assert_eq!(r.len(), count + 1);
    }
}

#[test]
fn exit_codes() {
    assert_eq!(mlab(&["nonsense"], &[]).code, 2);
    assert_eq!(mlab(&["classify"], &[]).code, 2);
    assert_eq!(mlab(&["classify", "no_such_alias"], &[]).code, 2);
    assert_eq!(mlab(&["--help"], &[]).code, 0);
    // schutz at a non-idempotent is a domain error
    let r = mlab(&["--format", "json-lines", "schutz", "z3", "--e", "1"], &[]);
    assert_eq!(r.code, 1);
    let err: Value = serde_json::from_str(r.stderr.trim()).unwrap();
    assert_eq!(
        (err["kind"].as_str(), err["variant"].as_str()),
        (Some("validation"), Some("NotIdempotent"))
    );
}

#[test]
fn parse_errors_carry_positions() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.mlab");
    std::fs::write(&bad, "monoid 2 0\n0 1\n1 7\n").unwrap();
    let r = mlab(
        &["--format", "json-lines", "validate", bad.to_str().unwrap()],
        &[],
    );
    assert_eq!(r.code, 1);
    let err: Value = serde_json::from_str(r.stderr.trim()).unwrap();
    assert_eq!(
        (
            err["kind"].as_str(),
            err["line"].as_u64(),
            err["column"].as_u64()
        ),
        (Some("parse"), Some(3), Some(3))
    );
    std::fs::write(&bad, "monoid 2 1\n0 1\n1 0\n").unwrap();
    let r = mlab(&["validate", bad.to_str().unwrap()], &[]);
    assert_eq!(r.code, 1);
    assert!(r.stderr.contains("kind=validation"), "{}", r.stderr);
}

#[test]
fn validate_corpus_and_hom_files() {
    let files = ["z2.mlab", "left_zero_2.mlab", "z4_mod_2.hom"].map(corpus);
    let r = json(&["validate", &files[0], &files[1], &files[2]]);
    assert!(r
        .iter()
        .all(|x| x["canonical"] == true && x["valid"] == true));
    assert_eq!(r[1]["kind"], "semigroup");
    ok(&["validate", &files[2], "--source", "z4", "--target", "z2"]);
    assert_eq!(
        mlab(
            &["validate", &files[2], "--source", "z4", "--target", "ch2"],
            &[]
        )
        .code,
        1
    );
    assert_eq!(
        mlab(
            &["validate", &files[2], "--source", "z4", "--target", "z3"],
            &[]
        )
        .code,
        2
    );
}

#[test]
fn files_and_aliases_agree() {
    let from_file = json(&["classify", &corpus("z2_with_zero.mlab")]);
    let from_alias = json(&["classify", "z2^0"]);
    assert_eq!(from_file, from_alias);
}

#[test]
fn family_out_writes_a_canonical_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.mlab");
    ok(&[
        "family",
        "--family",
        "monogenic",
        "--index",
        "3",
        "--period",
        "1",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        std::fs::read_to_string(corpus("monogenic_3_1.mlab")).unwrap()
    );
}

#[test]
fn schutz_needs_a_faithful_quotient_at_the_units_of_t2() {
    let r = mlab(&["schutz", "t2", "--e", "1"], &[]);
    assert_eq!(r.code, 1);
    assert!(r.stderr.contains("NotFaithfulOnR"), "{}", r.stderr);
    let r = json(&["schutz", "t2", "--e", "1", "--quotient"]);
    // the two constants collapse to a zero
    assert_eq!(record(&r, "faithful_quotient")["order"], 3);
    let e = record(&r, "schutz_embedding");
    assert!(e["injective"] == true && e["multiplicative"] == true && e["diagram_commutes"] == true);
}

#[test]
fn kk_embed_and_wreath() {
    let r = json(&["kk-embed", "--btilde", "z4", "--b", "0,2"]);
    let k = record(&r, "kk_embedding");
    assert_eq!(k["wreath_order"], 8);
    assert!(
        k["injective"] == true && k["multiplicative"] == true && k["rho_is_homomorphism"] == true
    );
    assert_eq!(
        r.iter().filter(|x| x["record"] == "kk_coordinates").count(),
        4
    );
    let r = json(&["wreath", "--top", "z2", "--bottom", "z2"]);
    assert_eq!(record(&r, "wreath")["order"], 8);
    assert_eq!(
        mlab(&["kk-embed", "--btilde", "z4", "--b", "0,1"], &[]).code,
        1
    );
}

#[test]
fn pullback_transfer_and_monoid_transfer() {
    let r = json(&[
        "pullback", "--A", "z4", "--G", "z2", "--B", "z2", "--alpha", "mod", "--psi", "id",
    ]);
    let p = record(&r, "pullback");
    assert_eq!(p["order"], 4);
    assert!(p["square_commutes"] == true && p["kernel_iso_bijective"] == true);

    let base = [
        "transfer", "--G", "z2", "--B", "z2", "--btilde", "v4", "--embed", "0,2",
    ];
    let mut unsolvable = base.to_vec();
    unsolvable.extend(["--A", "z4", "--alpha", "mod"]);
    let r = json(&unsolvable);
    let t = record(&r, "transfer");
    assert_eq!(
        (t["atilde_order"].as_u64(), t["kernel_order"].as_u64()),
        (Some(16), Some(4))
    );
    assert_eq!(
        record(&r, "transferred_solution")["verdict"],
        "no weak solution"
    );
    let mut solvable = base.to_vec();
    solvable.extend(["--A", "v4", "--alpha", "0,0,1,1"]);
    let r = json(&solvable);
    assert_eq!(record(&r, "transported_solution")["verifies"], true);

    let r = json(&[
        "monoid-transfer",
        "z2^0",
        "--e",
        "0",
        "--atilde",
        "z4",
        "--alpha",
        "mod",
    ]);
    let m = record(&r, "monoid_transfer");
    assert_eq!(m["mprime_order"], 5);
    assert_eq!(m["diagram_commutes"], true);
    assert_eq!(record(&r, "subgroup_extension")["all_pass"], true);
}

#[test]
fn frattini_and_satlift() {
    let r = json(&["frattini", "q8"]);
    let f = record(&r, "frattini");
    assert_eq!(
        (f["subgroup_order"].as_u64(), f["quotient_order"].as_u64()),
        (Some(2), Some(4))
    );
    assert_eq!(f["divisibility_holds"], true);
    let r = json(&[
        "satlift",
        "--G",
        "z4",
        "--H",
        "z2",
        "--phi",
        "mod",
        "--class",
        "elementary-abelian",
        "--prime",
        "2",
    ]);
    assert_eq!(record(&r, "saturated_lift")["found"], false);
    let r = json(&[
        "satlift",
        "--G",
        "v4",
        "--H",
        "z2",
        "--phi",
        "0,1,0,1",
        "--class",
        "elementary-abelian",
        "--prime",
        "2",
    ]);
    let s = record(&r, "saturated_lift");
    assert_eq!(
        (s["found"].as_bool(), s["order"].as_u64()),
        (Some(true), Some(2))
    );
    assert_eq!(
        mlab(
            &["satlift", "--G", "z4", "--H", "z2", "--phi", "mod", "--class", "p-group"],
            &[]
        )
        .code,
        2
    );
}

#[test]
fn projcheck_and_bandscan() {
    let r = json(&["projcheck", "z2"]);
    assert_eq!(record(&r, "projectivity")["outcome"], "witness");
    let w = record(&r, "witness");
    assert_eq!(w["cover_order"], 4);
    assert!(w["explanation"].as_str().unwrap().contains("no section"));
    for s in ["lz2", "rz2", "ch3"] {
        let r = json(&["projcheck", s]);
        assert_eq!(
            record(&r, "projectivity")["outcome"],
            "no witness up to bound",
            "{s}"
        );
    }
    let r = json(&["bandscan", "--order", "2"]);
    assert_eq!(record(&r, "bandscan")["consistent_with_theorem"], true);
}

#[test]
fn environment_overrides() {
    let r = mlab(
        &[
            "solve", "--G", "z2", "--B", "z2", "--A", "z4", "--alpha", "mod",
        ],
        &[("MLAB_BUDGET", "1")],
    );
    assert_eq!(r.code, 1);
    assert!(r.stderr.contains("BudgetExceeded"), "{}", r.stderr);
    // the flag wins over the environment
    let r = mlab(
        &[
            "--budget", "100", "solve", "--G", "z2", "--B", "z2", "--A", "z4", "--alpha", "mod",
        ],
        &[("MLAB_BUDGET", "1")],
    );
    assert_eq!(r.code, 0);
    let r = mlab(&["classify", "z2"], &[("MLAB_FORMAT", "json-lines")]);
    assert!(serde_json::from_str::<Value>(r.stdout.trim()).is_ok());
    let r = mlab(&["family", "z8"], &[("MLAB_MAX_ORDER", "4")]);
    assert_eq!(r.code, 1);
    assert!(r.stderr.contains("SizeLimitExceeded"), "{}", r.stderr);
    assert_eq!(mlab(&["--max-order", "4", "family", "z8"], &[]).code, 1);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["greens", "t2"][..],
        &["bandscan", "--order", "2"],
        &["expand", "t2", "--gens", "a=0,b=1,c=2,d=3", "--elements"],
    ] {
        let mut full = vec!["--format", "json-lines"];
        full.extend_from_slice(args);
        assert_eq!(ok(&full), ok(&full), "{args:?}");
    }
}
