use std::process::Command;

use idealkit::cli::{
    ChainJson, DecomposeJson, HbtJson, IdealEqJson, IdealsModJson, MemberJson, PointsJson, PrimeCheckJson,
    VanishingIdealJson, VivJson, ZidealJson,
};
use idealkit::poly::PolyJson;
use idealkit::raster::RasterJson;
use serde::de::DeserializeOwned;
use serde::Serialize;

fn idealkit(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_idealkit")).args(args).output().expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn ok(args: &[&str]) -> String {
    let (code, stdout, stderr) = idealkit(args);
    assert_eq!(code, 0, "{args:?} failed: {stderr}");
    assert!(stderr.is_empty());
    stdout
}

/// Parses the JSON payload into its schema type and re-emits it byte for byte.
fn round_trip<T: Serialize + DeserializeOwned>(args: &[&str]) -> T {
    let text = ok(args);
    let value: T = serde_json::from_str(&text).unwrap_or_else(|e| panic!("{args:?}: {e}\n{text}"));
    assert_eq!(serde_json::to_string(&value).unwrap() + "\n", text, "{args:?}");
    value
}

#[test]
fn variety_over_f5() {
    let pts: PointsJson = round_trip(&["variety", "--field", "fp:5", "--vars", "x", "--format", "json", "x^2+1"]);
    assert_eq!(pts.points, vec![vec!["2".to_string()], vec!["3".to_string()]]);
    assert_eq!(ok(&["variety", "--field", "fp:5", "x^2+1"]), "{(2), (3)}\n");
}

#[test]
fn zideal_prime_text() {
    assert_eq!(ok(&["zideal", "prime", "6"]), "not prime: 6 = 2*3 with 2,3 not in (6)\n");
    assert!(ok(&["zideal", "prime", "7"]).starts_with("prime"));
    assert!(ok(&["zideal", "prime", "0"]).starts_with("prime"));
    assert!(ok(&["zideal", "prime", "1"]).starts_with("not prime"));
    assert_eq!(ok(&["zideal", "gens", "12", "-18"]), "(6)\n");
    assert_eq!(ok(&["zideal", "contains", "3", "-9"]), "true\n");
    assert_eq!(ok(&["zideal", "contains", "3", "10"]), "false\n");
}

#[test]
fn plot_ascii_marks_origin() {
    let text = ok(&["plot", "--window", "-2:2,-2:2", "--res", "40", "y^2 - x^2*(x+1)"]);
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows.len(), 40);
    assert!(rows.iter().all(|r| r.len() == 40 && r.chars().all(|c| c == '#' || c == '.')));
    // the origin is the shared corner of rows 19, 20 and columns 19, 20
    for r in [19, 20] {
        assert_eq!(&rows[r][19..21], "##");
    }
    let svg = ok(&["plot", "--res", "40", "--svg", "y^2 - x^2*(x+1)"]);
    assert!(svg.starts_with("<svg"));
    assert_eq!(svg.matches("<rect").count(), text.matches('#').count());
    let json: RasterJson = round_trip(&["plot", "--res", "30x20", "--format", "json", "x^2 + y^2 - 1"]);
    assert_eq!(json.res, [30, 20]);
    assert_eq!(json.rows.len(), 20);
}

#[test]
fn parse_canonical_forms() {
    assert_eq!(ok(&["parse", "y^2 - x^2*(x+1)"]), "-x^3 - x^2 + y^2\n");
    assert_eq!(ok(&["parse", "--field", "fp:5", "x + 9"]), "x + 4\n");
    assert_eq!(ok(&["parse", "--vars", "a,b", "b*a - a*b + 2a"]), "2*a\n");
    let json: PolyJson = round_trip(&["parse", "--format", "json", "3/2*x*y - 1"]);
    assert_eq!(json.vars, vec!["x", "y"]);
}

#[test]
fn usage_and_parse_errors_exit_1() {
    let (code, stdout, stderr) = idealkit(&["parse", "x + * y"]);
    assert_eq!(code, 1);
    assert!(stdout.is_empty());
    assert!(stderr.contains("position 4"), "{stderr}");
    let (code, _, stderr) = idealkit(&["parse", "--vars", "x", "x + w"]);
    assert_eq!(code, 1);
    assert!(stderr.contains('w'), "{stderr}");
    assert_eq!(idealkit(&["no-such-command"]).0, 1);
    assert_eq!(idealkit(&["plot", "--window", "0:1", "x"]).0, 1);
    assert_eq!(idealkit(&["--format", "yaml", "parse", "x"]).0, 1);
}

#[test]
fn domain_errors_exit_2() {
    for args in [
        &["radical", "--field", "z", "x^2"][..],
        &["videal", "--field", "q", "0,0"],
        &["chain-demo", "--vars", "x,y", "3"],
        &["ideals-mod", "0"],
        &["plot", "--window", "1:1,0:1", "x"],
        &["hbt", "0"],
        &["variety", "--field", "fp:6", "x"],
    ] {
        let (code, stdout, _) = idealkit(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn resource_limit_exits_3() {
    let (code, stdout, stderr) = idealkit(&["variety", "--field", "fp:11", "--vars", "a,b,c,d,e,f", "a"]);
    assert_eq!(code, 3);
    assert!(stdout.is_empty());
    assert!(!stderr.is_empty());
}

#[test]
fn point_set_commands() {
    let v: VanishingIdealJson = round_trip(&["videal", "--field", "fp:2", "--format", "json", "0,0;1,1"]);
    assert!(v.closure_verified);
    assert_eq!(v.field_equations.len(), 2);
    let d: DecomposeJson = round_trip(&["decompose", "--field", "fp:3", "--format", "json", "0,1; 2,2; 0,1"]);
    assert_eq!(d.components.len(), 2);
    let p: PrimeCheckJson = round_trip(&["prime-check", "--field", "fp:2", "--format", "json", "0,0;1,1"]);
    assert!(!p.prime && p.witnesses.is_some());
    let p: PrimeCheckJson = round_trip(&["prime-check", "--field", "fp:2", "--format", "json", "1,0"]);
    assert!(p.prime);
    assert_eq!(ok(&["prime-check", "--field", "fp:2", "1,0"]), "prime\n");
    let viv: VivJson = round_trip(&["viv", "--field", "fp:3", "--format", "json", "x^2 - 1", "x*y"]);
    assert_eq!(viv.contains_input, vec![true, true]);
    assert_eq!(idealkit(&["videal", "--field", "fp:3", "0,1;2"]).0, 2);
    assert_eq!(idealkit(&["videal", "--field", "fp:3", "0,a"]).0, 1);
}

#[test]
fn membership_commands() {
    let m: MemberJson = round_trip(&["member", "--format", "json", "x^2*y + x", "x"]);
    assert_eq!(m.verdict, "member");
    let m: MemberJson = round_trip(&["member", "--format", "json", "y", "x"]);
    assert_eq!(m.verdict, "non-member");
    let m: MemberJson = round_trip(&["member", "--bound", "0", "--format", "json", "x^2", "x"]);
    assert_eq!(m.verdict, "unknown");
    let e: IdealEqJson =
        round_trip(&["ideal-eq", "--format", "json", "--left", "x", "--left", "y", "--right", "x+y", "--right", "x-y"]);
    assert_eq!(e.verdict, "equal");
    let e: IdealEqJson = round_trip(&["ideal-eq", "--format", "json", "--left", "x", "--right", "x", "--right", "y"]);
    assert_eq!(e.verdict, "right-not-in-left");
    assert_eq!(ok(&["radical", "x^3 - x^2"]), "x^2 - x\n");
}

#[test]
fn chain_hbt_and_ideals_mod() {
    let c: ChainJson = round_trip(&["chain-demo", "--format", "json", "4"]);
    assert_eq!(c.steps.len(), 4);
    assert_eq!(c.steps[3].added, "x5");
    let h: HbtJson = round_trip(&["hbt", "--field", "fp:5", "--format", "json", "x^2 - 1", "x^3 - 1"]);
    assert_eq!(h.flip_degree, Some(1));
    assert_eq!(h.check, "equal");
    let m: IdealsModJson = round_trip(&["ideals-mod", "--format", "json", "12"]);
    assert_eq!(m.ideals.len(), 6);
    let z: ZidealJson = round_trip(&["zideal", "--format", "json", "prime", "6"]);
    assert!(!z.prime);
}

#[test]
fn help_exits_zero() {
    let (code, stdout, _) = idealkit(&["--help"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("plot"));
}
