use lpcert_web::{distance_distribution, expand, verify_certificate};
use serde_json::Value;

const H48: &str = include_str!("../../cli/fixtures/h48.cert");

fn parse(s: String) -> Value {
    serde_json::from_str(&s).expect("valid json")
}

#[test]
fn expand_orthoplex() {
    let v = parse(expand(4, "0, 1, 1"));
    assert_eq!(v["coefficients"], serde_json::json!(["1/4", "1/1", "3/4"]));
    assert_eq!(v["ratio"], "8/1");
    let f = parse(expand(4, "(0, 1; 1) (1, 1; 1)"));
    assert_eq!(f["coefficients"], v["coefficients"]);
}

#[test]
fn expand_errors() {
    assert!(parse(expand(1, "1")).get("error").is_some());
    assert!(parse(expand(4, "1, x")).get("error").is_some());
}

#[test]
fn verify_kissing_certificate() {
    let v = parse(verify_certificate(H48, 101));
    assert_eq!(v["valid"], true);
    assert_eq!(v["bound"], "52416000/1");
    assert_eq!(v["coefficients"][3], "-118957/811814400");
    assert_eq!(v["curve"].as_array().unwrap().len(), 101);
    assert_eq!(v["zeros"].as_array().unwrap().len(), 8);
    let bad = parse(verify_certificate(&H48.replace("upper-antipodal", "upper-unrestricted"), 10));
    assert_eq!(bad["valid"], false);
    assert!(bad["failures"][0].as_str().unwrap().contains("-118957/811814400"));
    assert!(parse(verify_certificate("dimension: 4\n", 10)).get("error").is_some());
}

#[test]
fn distribution_of_the_cross_polytope() {
    let v = parse(distance_distribution(4, 3, "-1, 0", "8", true));
    assert_eq!(v["consistent"], true);
    assert_eq!(v["entries"][1]["count"], "6/1");
    let w = parse(distance_distribution(48, 11, "-1,-1/2,1/2,-1/3,1/3,-1/6,1/6,0", "52416001", true));
    assert_eq!(w["integral"], false);
}
