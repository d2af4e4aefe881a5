use std::process::{Command, Output};

use symgon::cli::ClassRecordOut;

fn symgon(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symgon"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn count_csv_and_json() {
    let o = symgon(&["count", "--m", "3..30", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,m,p_count,q_count");
    assert_eq!(lines.len(), 29);
    assert_eq!(lines[1], "9,3,3,2");
    assert_eq!(lines[28], "90,30,228,2168");
    assert!(!text.contains('\r'));

    let o = symgon(&["count", "--m", "3..3", "--format", "json"]);
    assert_eq!(stdout(&o), "[{\"n\":9,\"m\":3,\"p\":3,\"q\":2}]\n");
}

#[test]
fn count_rejects_small_m() {
    let o = symgon(&["count", "--m", "2..5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
    assert_eq!(symgon(&["count", "--m", "9..5"]).status.code(), Some(2));
    assert_eq!(symgon(&["count", "--m", "abc"]).status.code(), Some(2));
}

#[test]
fn enumerate_records() {
    let o = symgon(&["enumerate", "--m", "3", "--family", "axial"]);
    assert_eq!(o.status.code(), Some(0));
    let records: Vec<ClassRecordOut> = serde_json::from_str(&stdout(&o)).unwrap();
    let gens: Vec<Vec<u32>> = records.iter().map(|r| r.generators.clone().unwrap()).collect();
    assert_eq!(gens, vec![vec![1, 4], vec![4, 7], vec![7, 1]]);
    assert!(records.iter().all(|r| r.family == "axial" && r.m == Some(3) && r.axis_count == 3));

    let o = symgon(&["enumerate", "--m", "3", "--family", "circular"]);
    let records: Vec<ClassRecordOut> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(records.len(), 2);

    let o = symgon(&["enumerate", "--m", "5", "--family", "circular"]);
    let records: Vec<ClassRecordOut> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(records.len(), 16);
    let mut sorted = records.clone();
    sorted.sort_by(|a, b| a.generators.cmp(&b.generators));
    assert_eq!(sorted, records);

    let o = symgon(&["enumerate", "--m", "4", "--family", "axial", "--format", "csv"]);
    assert_eq!(stdout(&o).lines().count(), 7);

    assert_eq!(symgon(&["enumerate", "--m", "2", "--family", "axial"]).status.code(), Some(2));
    assert_eq!(symgon(&["enumerate", "--m", "4", "--family", "star"]).status.code(), Some(2));
}

#[test]
fn classify_examples() {
    let o = symgon(&["classify", "--n", "6", "--sides", "1,2,1,4,3,1"]);
    assert_eq!(o.status.code(), Some(0));
    let r: ClassRecordOut = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((r.family.as_str(), r.u), ("other", 2));

    let o = symgon(&["classify", "--n", "9", "--sides", "1,4,1,1,4,1,1,4,1"]);
    let r: ClassRecordOut = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((r.family.as_str(), r.m), ("axial", Some(3)));

    let o = symgon(&["classify", "--n", "6", "--sides", "2,2,2,2,2,2"]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("prematurely") && err.contains("s_3"), "{err}");

    assert_eq!(symgon(&["classify", "--n", "6", "--sides", "1,2,1"]).status.code(), Some(2));
    assert_eq!(symgon(&["classify", "--n", "6", "--sides", "1,x"]).status.code(), Some(2));
}

#[test]
fn enumerate_output_reclassifies() {
    for family in ["axial", "circular"] {
        let o = symgon(&["enumerate", "--m", "4", "--family", family]);
        let records: Vec<ClassRecordOut> = serde_json::from_str(&stdout(&o)).unwrap();
        for r in records {
            let sides = r.sides.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
            let o = symgon(&["classify", "--n", &r.n.to_string(), "--sides", &sides]);
            let back: ClassRecordOut = serde_json::from_str(&stdout(&o)).unwrap();
            assert_eq!(back.family, r.family);
            assert_eq!(back, r);
        }
    }
}

#[test]
fn verify_modes() {
    let o = symgon(&["verify", "--mode", "census", "--n", "9"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("axial=3 circular=2"), "{text}");

    let o = symgon(&["verify", "--mode", "identity", "--m", "3..30"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("28 of 28 identities hold"));

    let o = symgon(&["verify", "--mode", "census", "--n", "15"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8(o.stderr).unwrap().contains("census capped at n=12"));

    let o = symgon(&["verify", "--mode", "gcd", "--m", "3..8", "--jobs", "2"]);
    assert_eq!(o.status.code(), Some(0));

    let o = symgon(&["verify", "--mode", "sweep", "--m", "3..6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("m=5 n=15 axial=16 circular=16"));

    assert_eq!(symgon(&["verify", "--mode", "sweep"]).status.code(), Some(2));
    assert_eq!(symgon(&["verify", "--mode", "census"]).status.code(), Some(2));
}

#[test]
fn verify_output_is_deterministic_across_jobs() {
    let a = symgon(&["verify", "--mode", "sweep", "--m", "3..7", "--jobs", "1"]);
    let b = symgon(&["verify", "--mode", "sweep", "--m", "3..7", "--jobs", "4"]);
    assert_eq!(a.stdout, b.stdout);
    let a = symgon(&["verify", "--mode", "census", "--n", "8", "--jobs", "1"]);
    let b = symgon(&["verify", "--mode", "census", "--n", "8", "--jobs", "3"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn render_writes_gallery() {
    let dir = std::env::temp_dir().join(format!("symgon-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p3 = dir.join("p3.svg");
    let o = symgon(&["render", "--m", "3", "--family", "axial", "--out", p3.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let svg = std::fs::read_to_string(&p3).unwrap();
    assert_eq!(svg.matches("class=\"cell\"").count(), 3);

    let q4 = dir.join("q4.svg");
    symgon(&["render", "--m", "4", "--family", "circular", "--out", q4.to_str().unwrap()]);
    let svg = std::fs::read_to_string(&q4).unwrap();
    assert_eq!(svg.matches("class=\"cell\"").count(), 4);

    let ax = dir.join("p3ax.svg");
    symgon(&["render", "--m", "3", "--family", "axial", "--axes", "--out", ax.to_str().unwrap()]);
    let svg = std::fs::read_to_string(&ax).unwrap();
    for cell in svg.split("class=\"cell\"").skip(1) {
        assert_eq!(cell.matches("class=\"axis\"").count(), 3);
    }

    let again = dir.join("p3-again.svg");
    symgon(&["render", "--m", "3", "--family", "axial", "--out", again.to_str().unwrap()]);
    assert_eq!(std::fs::read(&p3).unwrap(), std::fs::read(&again).unwrap());

    let bad = dir.join("missing-dir").join("x.svg");
    let o = symgon(&["render", "--m", "3", "--family", "axial", "--out", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let o = symgon(&["render", "--m", "2", "--family", "axial", "--out", "x.svg"]);
    assert_eq!(o.status.code(), Some(2));
    let o = symgon(&["render", "--m", "3", "--family", "axial", "--size", "10", "--out", "x.svg"]);
    assert_eq!(o.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).ok();
}
