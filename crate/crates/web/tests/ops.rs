use segforge_web::ops;
use serde_json::Value;

fn parse(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn witness_reports_count_and_svg() {
    let v = parse(&ops::witness("icycle", 5, "").unwrap());
    assert_eq!(v["counts"]["seg"], 15);
    assert_eq!(v["valid"], true);
    assert!(v["svg"].as_str().unwrap().starts_with("<svg"));
}

#[test]
fn three_dimensional_witness_is_projected_for_display() {
    let v = parse(&ops::witness("hcycle", 3, "free3d").unwrap());
    assert_eq!(v["counts"]["seg"], 15);
    assert!(v["svg"].as_str().unwrap().contains("<svg"));
}

#[test]
fn drawing_round_trips_through_check() {
    let prism = "6 9\n0 1\n1 2\n2 0\n3 4\n4 5\n5 3\n0 3\n1 4\n2 5\n";
    let v = parse(&ops::draw_graph(prism, "bend").unwrap());
    assert_eq!(v["valid"], true);
    assert_eq!(v["counts"]["identity"], true);
    let c = parse(&ops::check_drawing(v["drawing"].as_str().unwrap(), "planar2d").unwrap());
    assert_eq!(c["counts"]["seg"], v["counts"]["seg"]);
    let v = parse(&ops::draw_graph(prism, "bi3d").unwrap());
    assert_eq!(v["style"], "free3d");
}

#[test]
fn bad_input_is_an_error() {
    assert!(ops::witness("nope", 3, "").is_err());
    assert!(ops::witness("hcycle", 3, "planar2d").is_err());
    assert!(ops::draw_graph("3 3\n0 1\n1 2\n0 2\n", "bi3d").is_err());
    assert!(ops::draw_graph("garbage", "bend").is_err());
    assert!(ops::check_drawing("{}", "planar2d").is_err());
}

#[test]
fn family_list_has_styles() {
    let v = parse(&ops::families());
    let names: Vec<_> = v.as_array().unwrap().iter().map(|f| f["name"].as_str().unwrap().to_string()).collect();
    assert!(names.contains(&"hcycle".to_string()));
    assert!(!names.contains(&"tgrid".to_string()));
}
