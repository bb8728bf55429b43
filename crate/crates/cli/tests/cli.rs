//! End-to-end tests over the installed binary: byte-exact stdout for the
//! stable text forms, exit-code contract, and JSON well-formedness on
//! every subcommand.

use std::path::{Path, PathBuf};
use std::process::Command;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn arithmos(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_arithmos"))
        .args(args)
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().expect("no signal"),
        stdout: String::from_utf8(out.stdout).expect("utf8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf8 stderr"),
    }
}

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../core/fixtures")
        .join(name)
        .to_str()
        .expect("utf8 path")
        .to_string()
}

fn scratch_file(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("arithmos-cli-test-{name}"));
    std::fs::write(&path, contents).expect("write scratch file");
    path
}

#[test]
fn machine_run_add_is_pinned() {
    let r = arithmos(&[
        "machine",
        "run",
        &fixture("add.prog"),
        "--input",
        "2,3",
        "--fuel",
        "1000",
    ]);
    assert_eq!(r.code, 0, "stderr: {}", r.stderr);
    assert_eq!(r.stdout, "Y=5\n");
}

#[test]
fn machine_run_mul() {
    let r = arithmos(&["machine", "run", &fixture("mul.prog"), "--input", "4,5"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout, "Y=20\n");
}

#[test]
fn machine_run_out_of_fuel_is_a_domain_failure() {
    let r = arithmos(&[
        "machine",
        "run",
        &fixture("add.prog"),
        "--input",
        "2,3",
        "--fuel",
        "10",
    ]);
    assert_eq!(r.code, 1);
    assert_eq!(r.stdout, "");
    assert!(r.stderr.contains("fuel exhausted"), "stderr: {}", r.stderr);
}

#[test]
fn machine_parse_prints_the_canonical_listing() {
    let text = std::fs::read_to_string(fixture("add.prog")).unwrap();
    let program = arithmos_core::machine::parse_program(&text).unwrap();
    let expected = arithmos_core::machine::render_program(&program);
    let r = arithmos(&["machine", "parse", &fixture("add.prog")]);
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout.trim_end_matches('\n'), expected.trim_end_matches('\n'));
}

#[test]
fn machine_parse_rejects_garbage_with_exit_2() {
    let path = scratch_file("garbage.prog", "INC\nWOBBLE X1\n");
    let r = arithmos(&["machine", "parse", path.to_str().unwrap()]);
    assert_eq!(r.code, 2);
    assert_eq!(r.stdout, "");
}

#[test]
fn machine_run_missing_file_is_exit_2() {
    let r = arithmos(&["machine", "run", "/nonexistent/prog"]);
    assert_eq!(r.code, 2);
}

#[test]
fn sets_pair_encode_decode() {
    let r = arithmos(&["sets", "pair", "--x", "3", "--y", "5"]);
    assert_eq!((r.code, r.stdout.as_str()), (0, "code=41\n"));
    let r = arithmos(&["sets", "pair", "--decode", "41"]);
    assert_eq!((r.code, r.stdout.as_str()), (0, "x=3 y=5\n"));
    let r = arithmos(&["sets", "pair", "--tuple", "1,2,3"]);
    let code = arithmos_core::sets::tuple_encode(&[1, 2, 3]);
    assert_eq!((r.code, r.stdout.as_str()), (0, format!("code={code}\n").as_str()));
    let r = arithmos(&["sets", "pair", "--decode", &code.to_string(), "--arity", "3"]);
    assert_eq!((r.code, r.stdout.as_str()), (0, "tuple=1,2,3\n"));
}

#[test]
fn sets_pair_without_a_mode_is_exit_2() {
    let r = arithmos(&["sets", "pair"]);
    assert_eq!(r.code, 2);
}

#[test]
fn sets_primes_listing_is_pinned() {
    let r = arithmos(&["sets", "primes", "--budget", "500", "--max-items", "10"]);
    assert_eq!(r.code, 0);
    assert_eq!(
        r.stdout,
        "2 3 5 7 11 13 17 19 23 29\nfound=10 budget=500 max-items=10\n"
    );
}

#[test]
fn sets_primes_member_semidecision() {
    let r = arithmos(&["sets", "primes", "--member", "97", "--budget", "2000"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout, "member=97 status=found budget=2000 work=98\n");
    let r = arithmos(&["sets", "primes", "--member", "97", "--budget", "5"]);
    assert_eq!(r.code, 0);
    assert_eq!(
        r.stdout,
        "member=97 status=not-found-within-budget budget=5 work=5\n"
    );
}

#[test]
fn sets_dovetail_order_is_pinned() {
    let r = arithmos(&["sets", "dovetail", "--arity", "2", "--count", "5"]);
    assert_eq!(r.code, 0);
    assert_eq!(
        r.stdout,
        "code=0 tuple=0,0\ncode=1 tuple=1,0\ncode=2 tuple=0,1\n\
         code=3 tuple=2,0\ncode=4 tuple=1,1\nemitted=5 budget=10000 arity=2\n"
    );
}

#[test]
fn sets_dovetail_arity_zero_is_exit_2() {
    let r = arithmos(&["sets", "dovetail", "--arity", "0"]);
    assert_eq!(r.code, 2);
}

#[test]
fn dioph_check_even_is_clean_and_pinned() {
    let r = arithmos(&[
        "dioph", "check", "--family", "even", "--t-range", "0..100", "--bound", "200",
    ]);
    assert_eq!(r.code, 0, "stderr: {}", r.stderr);
    assert_eq!(
        r.stdout,
        "family=even t=[0,100] bound=200\n\
         agree_positive=51 agree_negative=50 disagreements=0 unresolved=0\n"
    );
}

#[test]
fn dioph_check_unknown_family_is_exit_2() {
    let r = arithmos(&[
        "dioph", "check", "--family", "odd", "--t-range", "0..10", "--bound", "10",
    ]);
    assert_eq!(r.code, 2);
}

#[test]
fn dioph_check_bad_range_is_exit_2() {
    let r = arithmos(&[
        "dioph", "check", "--family", "even", "--t-range", "10..2", "--bound", "10",
    ]);
    assert_eq!(r.code, 2);
}

#[test]
fn dioph_enumerate_square_discovery_order() {
    let r = arithmos(&[
        "dioph",
        "enumerate",
        "--family",
        "square",
        "--budget",
        "2000",
        "--max-items",
        "12",
    ]);
    assert_eq!(r.code, 0);
    assert_eq!(
        r.stdout,
        "family=square poly=-x^2 + t budget=2000\n0 1 4 9 16 25 36 49\nfound=8\n"
    );
}

#[test]
fn dioph_search_box_finds_the_least_witness() {
    let r = arithmos(&[
        "dioph", "search", "--family", "composite", "--t", "91", "--bound", "20",
    ]);
    assert_eq!(r.code, 0);
    assert_eq!(
        r.stdout,
        "family=composite t=91 strategy=box bound=20\nwitness=5,11\n"
    );
}

#[test]
fn dioph_search_negative_answer_is_still_exit_0() {
    let r = arithmos(&[
        "dioph", "search", "--family", "composite", "--t", "7", "--bound", "20",
    ]);
    assert_eq!(r.code, 0);
    assert_eq!(
        r.stdout,
        "family=composite t=7 strategy=box bound=20\nno-solution-within-bound\n"
    );
}

#[test]
fn dioph_search_accepts_a_custom_family() {
    let r = arithmos(&[
        "dioph",
        "search",
        "--poly",
        "t - x*x - y*y",
        "--param",
        "t",
        "--t",
        "25",
        "--bound",
        "10",
    ]);
    assert_eq!(r.code, 0);
    assert_eq!(
        r.stdout,
        "family=custom t=25 strategy=box bound=10\nwitness=0,5\n"
    );
}

#[test]
fn dioph_search_dovetail_reports_its_budget() {
    let r = arithmos(&[
        "dioph", "search", "--family", "square", "--t", "49", "--dovetail", "5000",
    ]);
    assert_eq!(r.code, 0);
    assert_eq!(
        r.stdout,
        "family=square t=49 strategy=dovetail budget=5000\nwitness=7\n"
    );
}

#[test]
fn numbers_symmetry_s3_line_is_pinned() {
    let r = arithmos(&["numbers", "symmetry", "--poly", "x^3-2"]);
    assert_eq!(r.code, 0, "stderr: {}", r.stderr);
    assert_eq!(
        r.stdout,
        "group=S3 order=6 constructible=false radical=true fourier=false\n"
    );
}

#[test]
fn numbers_symmetry_with_root_index() {
    let r = arithmos(&["numbers", "symmetry", "--poly", "x^2-2", "--root-index", "0"]);
    assert_eq!(r.code, 0);
    assert_eq!(
        r.stdout,
        "group=C2 order=2 constructible=true radical=true fourier=true\n"
    );
}

#[test]
fn numbers_symmetry_failures_split_1_vs_2() {
    // reducible: a domain precondition, not a syntax problem
    let r = arithmos(&["numbers", "symmetry", "--poly", "x^2-4"]);
    assert_eq!(r.code, 1);
    // degree outside the classifier
    let r = arithmos(&["numbers", "symmetry", "--poly", "x^5-x-1"]);
    assert_eq!(r.code, 1);
    // syntax error
    let r = arithmos(&["numbers", "symmetry", "--poly", "x^^2"]);
    assert_eq!(r.code, 2);
}

#[test]
fn numbers_gauss_5_matches_the_worked_coordinates() {
    let r = arithmos(&["numbers", "gauss", "--p", "5"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout, "modulus=5 coords=-1,0,-2,-2\nsquare=5\n");
}

#[test]
fn numbers_gauss_7_squares_to_minus_7() {
    let r = arithmos(&["numbers", "gauss", "--p", "7"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout, "modulus=7 coords=1,2,2,0,2,0\nsquare=-7\n");
}

#[test]
fn numbers_gauss_rejects_composites() {
    let r = arithmos(&["numbers", "gauss", "--p", "9"]);
    assert_eq!(r.code, 1);
}

#[test]
fn numbers_cyclotomic_12_is_pinned() {
    let r = arithmos(&["numbers", "cyclotomic", "--n", "12"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout, "x^4 - x^2 + 1\n");
}

#[test]
fn numbers_cyclotomic_guard_is_exit_1() {
    let r = arithmos(&["numbers", "cyclotomic", "--n", "300"]);
    assert_eq!(r.code, 1);
}

#[test]
fn numbers_fourier_sqrt2() {
    let r = arithmos(&["numbers", "fourier", "--sqrt", "2", "--digits", "10"]);
    assert_eq!(r.code, 0);
    assert_eq!(
        r.stdout,
        "modulus=8 coords=0,1,0,-1\nre=1.4142135624 im=0.0000000000 error<=1e-10\n"
    );
}

#[test]
fn numbers_fourier_gauss_7_is_imaginary() {
    let r = arithmos(&["numbers", "fourier", "--gauss", "7", "--digits", "10"]);
    assert_eq!(r.code, 0);
    assert_eq!(
        r.stdout,
        "modulus=7 coords=1,2,2,0,2,0\nre=0.0000000000 im=2.6457513111 error<=1e-10\n"
    );
}

#[test]
fn numbers_fourier_rejects_non_squarefree() {
    let r = arithmos(&["numbers", "fourier", "--sqrt", "12"]);
    assert_eq!(r.code, 1);
}

#[test]
fn topo_homology_of_the_seven_vertex_torus() {
    let r = arithmos(&["topo", "homology", &fixture("torus7.cmplx")]);
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout, "H0=Z\nH1=Z^2\nH2=Z\nH3=0\neuler=0\n");
}

#[test]
fn topo_homology_of_the_projective_plane() {
    let r = arithmos(&["topo", "homology", &fixture("rp2.cmplx")]);
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout, "H0=Z\nH1=Z/2\nH2=0\nH3=0\neuler=1\n");
}

#[test]
fn topo_euler_of_the_projective_plane() {
    let r = arithmos(&["topo", "euler", &fixture("rp2.cmplx")]);
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout, "euler=1\n");
}

#[test]
fn topo_pi1_abelianization_of_the_torus() {
    let r = arithmos(&["topo", "pi1", &fixture("torus7.cmplx")]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.starts_with("generators=15\nrelators=14\n"));
    assert!(r.stdout.ends_with("abelianization=Z^2\n"));
}

#[test]
fn topo_manifold_check_rejects_a_surface() {
    let r = arithmos(&["topo", "manifold-check", &fixture("torus7.cmplx")]);
    assert_eq!(r.code, 0);
    assert_eq!(
        r.stdout,
        "closed-3-manifold=false reason=not-pure simplex=0,1,3\n"
    );
}

#[test]
fn topo_enumerate_five_vertex_closed_manifolds() {
    let r = arithmos(&[
        "topo",
        "enumerate",
        "--vertices",
        "5",
        "--filter",
        "closed-manifold",
        "--max-items",
        "5",
    ]);
    assert_eq!(r.code, 0);
    assert_eq!(
        r.stdout,
        "mask=31 simplices=5,10,10,5\nfound=1 examined=32 budget=100000 vertices=5\n"
    );
}

#[test]
fn topo_enumerate_guard_is_exit_1() {
    let r = arithmos(&["topo", "enumerate", "--vertices", "7"]);
    assert_eq!(r.code, 1);
}

#[test]
fn topo_bad_complex_file_is_exit_2() {
    let path = scratch_file("bad.cmplx", "0 1 banana\n");
    let r = arithmos(&["topo", "homology", path.to_str().unwrap()]);
    assert_eq!(r.code, 2);
}

#[test]
fn reduce_fourcolor_scan_is_pinned() {
    let r = arithmos(&["reduce", "fourcolor", "--max-n", "4"]);
    assert_eq!(r.code, 0);
    assert_eq!(
        r.stdout,
        "P(1)=true\nP(2)=true\nP(3)=true\nP(4)=true\ncounterexamples=none max-n=4\n"
    );
}

#[test]
fn reduce_fourcolor_colors_a_graph() {
    let path = scratch_file("k4.graph", "4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    let r = arithmos(&["reduce", "fourcolor", "--graph", path.to_str().unwrap()]);
    assert_eq!(r.code, 0);
    assert_eq!(
        r.stdout,
        "vertices=4 edges=6\nplanar=true\ncolorable=true colors=0,1,2,3\n"
    );
}

#[test]
fn reduce_fourcolor_k5_is_not_colorable() {
    let path = scratch_file(
        "k5.graph",
        "5\n0 1\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n",
    );
    let r = arithmos(&["reduce", "fourcolor", "--graph", path.to_str().unwrap()]);
    assert_eq!(r.code, 0);
    assert_eq!(
        r.stdout,
        "vertices=5 edges=10\nplanar=false\ncolorable=false\n"
    );
}

#[test]
fn reduce_fourcolor_guard_is_exit_1() {
    let r = arithmos(&["reduce", "fourcolor", "--max-n", "9"]);
    assert_eq!(r.code, 1);
}

#[test]
fn reduce_miu_counts_are_pinned() {
    let r = arithmos(&["reduce", "miu", "--depth", "4"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout, "theorems=22 depth=4 length-cap=12\n");
}

#[test]
fn reduce_miu_mu_is_never_derived() {
    let r = arithmos(&["reduce", "miu", "--depth", "6", "--check", "MU"]);
    assert_eq!(r.code, 0);
    assert_eq!(
        r.stdout,
        "theorems=54 depth=6 length-cap=12\nsentence=MU derived=false\n"
    );
}

#[test]
fn reduce_miu_numbering_roundtrip() {
    let r = arithmos(&["reduce", "miu", "--sentence-of", "5", "--index-of", "MIU"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout, "index=5 sentence=MU\nsentence=MIU index=17\n");
}

#[test]
fn reduce_miu_bad_alphabet_is_exit_2() {
    let r = arithmos(&["reduce", "miu", "--check", "MXU"]);
    assert_eq!(r.code, 2);
}

#[test]
fn reduce_miu_stream_matches_the_capped_closure() {
    let r = arithmos(&["reduce", "miu", "--stream", "3"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.starts_with("index=4 sentence=MI\n"), "{}", r.stdout);
    assert!(r.stdout.ends_with("emitted=3 budget=1000000\n"));
}

#[test]
fn reduce_godel_roundtrips_through_the_numbering() {
    let encode = arithmos(&["reduce", "godel", "--encode", &fixture("add.prog")]);
    assert_eq!(encode.code, 0);
    let code = encode
        .stdout
        .trim()
        .strip_prefix("code=")
        .expect("code= line")
        .to_string();
    let decode = arithmos(&["reduce", "godel", "--decode", &code]);
    assert_eq!(decode.code, 0);

    let text = std::fs::read_to_string(fixture("add.prog")).unwrap();
    let program = arithmos_core::machine::parse_program(&text).unwrap();
    let canonical = arithmos_core::reductions::canonicalize_program(&program);
    let expected = arithmos_core::machine::render_program(&canonical);
    assert_eq!(
        decode.stdout.trim_end_matches('\n'),
        expected.trim_end_matches('\n')
    );
}

#[test]
fn reduce_godel_bad_code_is_exit_2() {
    let r = arithmos(&["reduce", "godel", "--decode", "12x4"]);
    assert_eq!(r.code, 2);
}

#[test]
fn unknown_subcommand_is_exit_2() {
    let r = arithmos(&["frobnicate"]);
    assert_eq!(r.code, 2);
}

/// Every subcommand and mode, with and without --json; JSON must parse and
/// carry the schema tag.
#[test]
fn routing_table_round_trip() {
    let add = fixture("add.prog");
    let torus = fixture("torus7.cmplx");
    let table: Vec<Vec<&str>> = vec![
        vec!["machine", "run", &add, "--input", "2,3"],
        vec!["machine", "parse", &add],
        vec!["sets", "primes", "--budget", "200", "--max-items", "5"],
        vec!["sets", "primes", "--member", "7", "--budget", "100"],
        vec!["sets", "pair", "--x", "1", "--y", "2"],
        vec!["sets", "pair", "--tuple", "1,2"],
        vec!["sets", "pair", "--decode", "5"],
        vec!["sets", "pair", "--decode", "5", "--arity", "2"],
        vec!["sets", "dovetail", "--count", "3"],
        vec!["dioph", "enumerate", "--family", "even", "--budget", "500", "--max-items", "5"],
        vec!["dioph", "check", "--family", "even", "--t-range", "0..10", "--bound", "20"],
        vec!["dioph", "search", "--family", "even", "--t", "4", "--bound", "10"],
        vec!["dioph", "search", "--family", "even", "--t", "4", "--dovetail", "100"],
        vec!["reduce", "fourcolor", "--max-n", "3"],
        vec!["reduce", "miu", "--depth", "3"],
        vec!["reduce", "miu", "--stream", "2"],
        vec!["reduce", "miu", "--sentence-of", "4"],
        vec!["reduce", "godel", "--encode", &add],
        vec!["reduce", "godel", "--decode", "1000"],
        vec!["numbers", "symmetry", "--poly", "x^2-2"],
        vec!["numbers", "fourier", "--sqrt", "2", "--digits", "6"],
        vec!["numbers", "gauss", "--p", "5"],
        vec!["numbers", "cyclotomic", "--n", "8"],
        vec!["topo", "homology", &torus],
        vec!["topo", "pi1", &torus],
        vec!["topo", "euler", &torus],
        vec!["topo", "enumerate", "--vertices", "4", "--max-items", "3"],
        vec!["topo", "manifold-check", &torus],
    ];
    for entry in &table {
        let text = arithmos(entry);
        assert_eq!(text.code, 0, "{entry:?} failed: {}", text.stderr);
        assert!(!text.stdout.is_empty(), "{entry:?} printed nothing");

        let mut with_json = entry.clone();
        with_json.push("--json");
        let jsonned = arithmos(&with_json);
        assert_eq!(jsonned.code, 0, "{with_json:?} failed: {}", jsonned.stderr);
        let value: serde_json::Value =
            serde_json::from_str(&jsonned.stdout).unwrap_or_else(|e| {
                panic!("{with_json:?} produced invalid JSON ({e}): {}", jsonned.stdout)
            });
        assert_eq!(value["schema"], "arithmos/1", "{with_json:?}");
        assert!(value["command"].is_string(), "{with_json:?}");
    }
}

#[test]
fn json_run_reports_registers_and_fuel() {
    let r = arithmos(&[
        "machine",
        "run",
        &fixture("add.prog"),
        "--input",
        "2,3",
        "--json",
    ]);
    assert_eq!(r.code, 0);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["status"], "halted");
    assert_eq!(v["y"], 5);
    assert_eq!(v["fuel"], 10000);
    assert_eq!(v["registers"]["Y"], 5);
}

#[test]
fn json_symmetry_reports_the_verdicts() {
    let r = arithmos(&["numbers", "symmetry", "--poly", "x^3-2", "--json"]);
    assert_eq!(r.code, 0);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["group"], "S3");
    assert_eq!(v["order"], 6);
    assert_eq!(v["constructible"], false);
    assert_eq!(v["radical"], true);
    assert_eq!(v["fourier"], false);
}
