use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_perimeter"))
        .args(args)
        .output()
        .unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &[&str]) -> Value {
    let mut args = args.to_vec();
    args.extend(["--format", "json"]);
    let (code, stdout, stderr) = run(&args);
    assert_eq!(code, 0, "{args:?}: {stderr}");
    serde_json::from_str(&stdout).unwrap()
}

#[test]
fn envelope_shape() {
    for (args, key) in [
        (
            &["enumerate", "--family", "perimeter", "--n", "3"][..],
            "rows",
        ),
        (&["count", "--what", "B", "--n", "5"], "rows"),
        (
            &["series", "--name", "mod", "--d", "1", "--order", "4"],
            "series",
        ),
        (&["verify", "--theorem", "wilf", "--n", "6"], "report"),
        (&["map", "apply", "--map", "phi", "--input", "4,4"], "rows"),
    ] {
        let v = json(args);
        let object = v.as_object().unwrap();
        let keys: Vec<&str> = object.keys().map(String::as_str).collect();
        assert_eq!(keys, ["command", "params", key], "{args:?}");
    }
}

#[test]
fn enumerate_counts() {
    let v = json(&["enumerate", "--family", "perimeter", "--n", "9"]);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 256);
    assert!(rows.contains(&Value::from("6,3,3,1")));
    let v = json(&["enumerate", "--family", "labeled-d", "--n", "6", "--d", "2"]);
    assert_eq!(v["rows"].as_array().unwrap().len(), 68);
}

#[test]
fn distribution_csv() {
    let (code, stdout, _) = run(&["count", "--what", "A", "--n", "5", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "n,k,count\n5,0,5\n5,1,5\n5,2,4\n5,3,1\n5,4,1\n");
    let (_, stdout, _) = run(&["count", "--what", "C", "--n", "5", "--format", "csv"]);
    assert_eq!(stdout, "n,k,count\n5,1,5\n5,2,5\n5,3,4\n5,4,1\n5,5,1\n");
}

#[test]
fn scalar_counts() {
    let v = json(&["count", "--what", "a-odd", "--n", "5"]);
    assert_eq!(v["rows"][0]["value"], "28");
    let v = json(&["count", "--what", "sum-dif", "--n", "4", "--d", "2"]);
    assert_eq!(v["rows"][0]["value"], "11");
    let v = json(&["count", "--what", "fib", "--n", "30"]);
    assert_eq!(v["rows"][0]["value"], "832040");
    let (code, _, _) = run(&["count", "--what", "sum-dif", "--n", "3", "--d", "3"]);
    assert_eq!(code, 2);
    let v = json(&[
        "count",
        "--what",
        "sum-dif",
        "--n",
        "3",
        "--d",
        "3",
        "--degenerate",
    ]);
    assert_eq!(v["rows"][0]["value"], "4");
}

#[test]
fn series_formats() {
    let (_, stdout, _) = run(&["series", "--name", "delta", "--d", "3", "--order", "6"]);
    assert_eq!(stdout.trim(), "0,2,6,12,20,32,56");
    let (_, stdout, _) = run(&[
        "series", "--name", "rep-even", "--order", "3", "--at", "p=1,q=1", "--format", "csv",
    ]);
    assert_eq!(stdout, "x_degree,coefficient\n0,0\n1,1\n2,2\n3,4\n");
    let v = json(&[
        "series",
        "--name",
        "dif",
        "--d",
        "1",
        "--order",
        "2",
        "--order-y",
        "2",
    ]);
    assert_eq!(v["series"][2][2], "1+t");
    let (code, _, stderr) = run(&["series", "--name", "dif", "--order", "3"]);
    assert_eq!(code, 2, "{stderr}");
    let (code, _, _) = run(&["series", "--name", "nope", "--order", "3"]);
    assert_eq!(code, 2);
}

#[test]
fn map_round_trips() {
    let (_, stdout, _) = run(&["map", "apply", "--map", "phi", "--d", "2", "--input", "3,3"]);
    assert_eq!(stdout, "3,3\t2,1,1\n");
    let (_, stdout, _) = run(&[
        "map",
        "apply",
        "--map",
        "phi-inverse",
        "--d",
        "2",
        "--input",
        "2,1,1",
    ]);
    assert_eq!(stdout, "2,1,1\t3,3\n");
    let (_, stdout, _) = run(&["map", "apply", "--map", "phi", "--input", "00011"]);
    assert_eq!(stdout, "00011\t01101\n");
    let (_, stdout, _) = run(&["map", "apply", "--map", "xi", "--d", "2", "--input", "5,3*"]);
    assert_eq!(stdout, "5,3*\t4,2,1*\n");
    let v = json(&["map", "orbit", "--input", "0101"]);
    let words: Vec<&str> = v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["word"].as_str().unwrap())
        .collect();
    assert_eq!(words, ["0101", "0001", "0111", "0011"]);
}

#[test]
fn verify_exit_codes() {
    let (code, stdout, _) = run(&["verify", "--theorem", "straub", "--n", "8"]);
    assert_eq!(code, 0);
    assert!(stdout.starts_with("PASS straub"));
    let (code, stdout, _) = run(&[
        "verify",
        "--theorem",
        "xi-complement",
        "--n",
        "7",
        "--d",
        "3",
    ]);
    assert_eq!(code, 1);
    assert!(stdout.contains("6,4*"));
    let (code, _, _) = run(&[
        "verify",
        "--theorem",
        "rep-even",
        "--n",
        "5",
        "--format",
        "csv",
    ]);
    assert_eq!(code, 2);
    let (code, _, stderr) = run(&["enumerate", "--family", "perimeter", "--n", "3", "--bogus"]);
    assert_eq!(code, 2);
    assert!(!stderr.is_empty());
    let (code, _, _) = run(&["--help"]);
    assert_eq!(code, 0);
}

#[test]
fn verify_all_reports_every_point() {
    let v = json(&[
        "verify",
        "--theorem",
        "all",
        "--n",
        "4",
        "--d",
        "2",
        "--order",
        "4",
    ]);
    let reports = v["report"].as_array().unwrap();
    assert!(reports.iter().all(|r| r["status"] == "pass"));
    assert!(reports
        .iter()
        .any(|r| r["theorem"] == "positivity" && r["params"]["d"] == 0));
}

#[test]
fn output_file_and_jobs() {
    let path = std::env::temp_dir().join(format!("perimeter-cli-{}.csv", std::process::id()));
    let p = path.to_str().unwrap();
    let (code, stdout, _) = run(&[
        "--jobs", "2", "count", "--what", "h", "--n", "3", "--format", "csv", "--output", p,
    ]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(written, "n,k,value\n3,0,0\n3,1,1\n3,2,-1\n");
}
