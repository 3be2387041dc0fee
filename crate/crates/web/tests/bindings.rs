use serde_json::Value;
use superchar_web::{character, hook_schur, tensor};

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn hook_schur_row() {
    assert_eq!(parse(hook_schur("[2]", 1, 1))["text"], "y1*z1 + y1^2");
}

#[test]
fn character_of_empty() {
    let v = parse(character("spo", "[]", 1, 1, 1, 4));
    assert_eq!(v["text"], "1 + y1*z1 + y1^2 + y1^3*z1 + y1^4");
}

#[test]
fn tensor_default_rank() {
    let v = parse(tensor("spo", "[1]", "[1]", 1, 1, 1, 1, 0));
    assert_eq!(v["rank"], 1);
    assert_eq!(v["coefficients"][0]["lambda"], serde_json::json!([1, 1]));
}

#[test]
fn errors_come_back_as_json() {
    assert!(parse(character("osp", "[1]", 3, 1, 1, 4))["error"].as_str().unwrap().contains("needs d even"));
    assert!(parse(hook_schur("[1,2]", 1, 1))["error"].is_string());
    assert!(parse(character("spo", "[]", 1, 1, 1, 50))["error"].is_string());
}
