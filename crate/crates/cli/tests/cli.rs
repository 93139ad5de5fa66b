use std::process::{Command, Output};

use hnstrat::p1::{Gl3Report, HNData, PosetReport};
use hnstrat::{RootDatum, Stratum};
use serde_json::Value;

fn hn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hn")).args(args).env_remove("HN_CAP").output().expect("run hn")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap().trim_end().to_string()
}

fn ok_json(args: &[&str]) -> Value {
    let o = hn(args);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn slope_example_output() {
    let o = hn(&["slope", "--named", "GL:3", "--IM", "1", "--degree", "3,0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), r#"{"phi": ["3","0","0"], "dominant_P_regular": true}"#);
    let o = hn(&["--json", "slope", "--named", "GL:3", "--IM", "1", "--lift", "3,0,0"]);
    assert_eq!(stdout(&o), r#"{"phi": ["3","0","0"], "dominant_P_regular": true}"#);
}

#[test]
fn slope_failure_reports_root() {
    let v = ok_json(&["slope", "--named", "GL:2", "--degree", "0,1", "--detail"]);
    assert_eq!(v["dominant_P_regular"], Value::Bool(false));
    assert_eq!(v["failing_root"]["index"], 0);
    assert_eq!(v["failing_root"]["pairing"], "-1");
}

#[test]
fn specialize_example_output() {
    let o = hn(&["p1", "specialize", "--from", "1,0", "--to", "2,-1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "true");
    assert_eq!(stdout(&hn(&["p1", "specialize", "--from", "2,-1", "--to", "1,0"])), "false");
}

#[test]
fn gl3_report_claims() {
    let v = ok_json(&["p1", "gl3-report"]);
    assert_eq!(v["closure_meets"], Value::Bool(true));
    assert_eq!(v["containment"]["status"], "refuted");
    assert_eq!(v["containment"]["decidable_here"], Value::Bool(false));
    let r: Gl3Report = serde_json::from_value(v).unwrap();
    assert_eq!(r.partial_flag.slope.coords.len(), 3);
    let text = stdout(&hn(&["--text", "p1", "gl3-report"]));
    assert!(text.contains("closure_meets          true"));
}

#[test]
fn exit_codes() {
    assert_eq!(hn(&["frobnicate"]).status.code(), Some(64));
    assert_eq!(hn(&["p1", "frobnicate"]).status.code(), Some(64));
    assert_eq!(hn(&["datum", "--datum", "{\"named\": "]).status.code(), Some(65));
    assert_eq!(hn(&["datum", "--named", "SC:E8"]).status.code(), Some(69));
    assert_eq!(hn(&["datum", "--named", "XY:3"]).status.code(), Some(2));
    assert_eq!(hn(&["p1", "hn", "--type", "0,1"]).status.code(), Some(2));
    assert_eq!(hn(&["slope", "--named", "GL:3", "--IM", "5", "--degree", "1"]).status.code(), Some(2));
    let o = hn(&["strata", "compare", "--named", "GL:2", "--canonical-degree", "2,-2", "--degree", "1,0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("different components"));
}

#[test]
fn cap_override() {
    let o = Command::new(env!("CARGO_BIN_EXE_hn"))
        .args(["datum", "--named", "SC:B3"])
        .env("HN_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(69));
    let o = Command::new(env!("CARGO_BIN_EXE_hn"))
        .args(["datum", "--named", "SC:B3"])
        .env("HN_CAP", "lots")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn datum_round_trip() {
    let v = ok_json(&["datum", "--named", "Ad:G2", "--roots"]);
    assert_eq!(v["weyl_order"], 12);
    assert_eq!(v["roots"].as_array().unwrap().len(), 6);
    let rd: RootDatum = serde_json::from_value(v["datum"].clone()).unwrap();
    assert_eq!(rd, RootDatum::parse_named("Ad:G2").unwrap());
    let inline = serde_json::to_string(&v["datum"]).unwrap();
    let again = ok_json(&["datum", "--datum", &inline]);
    assert_eq!(again["datum"], v["datum"]);
}

#[test]
fn pgl_component_group() {
    let v = ok_json(&["datum", "--named", "PGL:4"]);
    assert_eq!(v["component_group"]["torsion"], serde_json::json!([4]));
}

#[test]
fn enumeration_round_trip() {
    let v = ok_json(&["strata", "enumerate", "--named", "GL:2", "--lambda-G", "1", "--bound", "5"]);
    let list: Vec<Stratum> = serde_json::from_value(v["strata"].clone()).unwrap();
    assert_eq!(list.len(), 4);
    let rd = RootDatum::gl(2).unwrap();
    for s in &list {
        s.check(&rd).unwrap();
        assert_eq!(serde_json::to_value(s).unwrap(), v["strata"][list.iter().position(|x| x == s).unwrap()]);
    }
}

#[test]
fn closure_and_destabilizing() {
    let v = ok_json(&[
        "strata", "closure", "--named", "GL:3", "--a-degree", "2,1,0", "--b-IM", "1", "--b-degree", "3,0",
    ]);
    assert_eq!(v["meets"], Value::Bool(true));
    assert_eq!(v["same_parabolic_contains"], Value::Null);
    assert_eq!(v["meets_kind"], "necessary-only");
    let v = ok_json(&["strata", "closure", "--named", "GL:2", "--a-degree", "1,0", "--b-degree", "2,-1"]);
    assert_eq!(v["same_parabolic_contains"], Value::Bool(true));
    let v = ok_json(&["strata", "destabilizing", "--named", "GL:3", "--IM", "1", "--degree", "3,0", "--lambda-G", "3"]);
    assert_eq!(v["destabilizing"], Value::Bool(true));
    assert_eq!(v["tests"]["slope_condition"], Value::Bool(true));
}

#[test]
fn bruhat_and_weights() {
    let v = ok_json(&["bruhat", "--named", "GL:3", "--M1", "1", "--M2", "1"]);
    assert_eq!(v["count"], 2);
    assert!(v["representatives"].as_array().unwrap().iter().all(|r| r["all_pass"] == Value::Bool(true)));
    let v = ok_json(&["weights", "multiset", "--named", "SL:3", "--labels", "1,1"]);
    assert_eq!(v["dim"], 8);
    assert_eq!(v["weyl_dimension"], "8");
    let v = ok_json(&["weights", "subspace", "--named", "GL:3", "--highest", "1,0,0", "--IM", "1"]);
    assert_eq!(v["dim"], 1);
    assert_eq!(v["one_dimensional"], Value::Bool(true));
    let v = ok_json(&["weights", "filtration", "--named", "GL:4", "--highest", "1,0,0,0", "--IM", "1", "--degree", "3,2,0"]);
    let dims: Vec<u64> = v["levels"].as_array().unwrap().iter().map(|l| l["dim"].as_u64().unwrap()).collect();
    assert_eq!(dims, vec![1, 2, 1]);
}

#[test]
fn p1_outputs() {
    let v = ok_json(&["p1", "hn", "--type", "3,1,1,0"]);
    let data: HNData = serde_json::from_value(v["hn"].clone()).unwrap();
    assert_eq!(data.block_ranks, vec![1, 2, 1]);
    let v = ok_json(&["p1", "poset", "--n", "2", "--degree", "1", "--box", "3"]);
    let p: PosetReport = serde_json::from_value(v).unwrap();
    assert_eq!(p.edges, vec![[0, 1], [1, 2]]);
    let dot = stdout(&hn(&["p1", "poset", "--n", "2", "--degree", "0", "--box", "1", "--dot"]));
    assert!(dot.starts_with("digraph") && dot.contains("n0 -> n1;"));
    let v = ok_json(&["p1", "hom", "--from", "0", "--to", "2"]);
    assert_eq!(v["hom_dim"], 3);
    let v = ok_json(&["p1", "flags", "--type", "3,1,0"]);
    assert_eq!(v["flags"].as_array().unwrap().len(), 6);
    assert_eq!(v["comparison"]["dominates_all"], Value::Bool(true));
}

#[test]
fn output_is_deterministic() {
    let args = ["strata", "enumerate", "--named", "GL:3", "--lambda-G", "3", "--bound", "3"];
    assert_eq!(hn(&args).stdout, hn(&args).stdout);
}

#[test]
fn small_verify_passes() {
    let o = hn(&["verify", "--rank", "2", "--slope-rank", "2", "--p1-rank", "3", "--box", "2", "--samples", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["all_pass"], Value::Bool(true));
    assert_eq!(v["sweeps"].as_array().unwrap().len(), 13);
}
