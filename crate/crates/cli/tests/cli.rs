use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn waldron(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_waldron")).args(args).output().expect("run waldron")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn column(csv: &str, name: &str) -> Vec<f64> {
    let mut lines = csv.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    let k = header.iter().position(|h| *h == name).unwrap();
    lines.map(|l| l.split(',').nth(k).unwrap().parse().unwrap()).collect()
}

#[test]
fn gen_writes_waldron_nodes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pts.csv");
    let p = path.to_str().unwrap();
    let o = waldron(&["gen", "--family", "waldron", "--weight", "cosine", "--degree", "8", "--simplex", "equilateral2d", "-o", p]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let text = fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 46);
    assert!(text.starts_with("alpha_1,alpha_2,alpha_3,x_1,x_2,lambda_1,lambda_2,lambda_3\n"));
    for ((a, b), c) in column(&text, "lambda_1").iter().zip(column(&text, "lambda_2")).zip(column(&text, "lambda_3")) {
        assert!((a + b + c - 1.0).abs() < 1e-14);
    }
}

#[test]
fn gen_spherical_and_other_families() {
    let o = waldron(&["gen", "--family", "spherical", "--degree", "1", "--full-sphere"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().count(), 7);

    let o = waldron(&["gen", "--family", "spherical", "-n", "4"]);
    assert_eq!(stdout(&o).lines().count(), 16);

    let o = waldron(&["gen", "--family", "waldron3m", "-n", "4"]);
    assert_eq!(stdout(&o).lines().count(), 36);
    assert!(stdout(&o).starts_with("alpha_1,alpha_2,alpha_3,alpha_4,x_1,x_2,x_3,"));

    let o = waldron(&["gen", "--family", "concentric", "-n", "9"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.starts_with("ring,slot,x_1,x_2,"));
    assert_eq!(text.lines().count(), 56);
    // the centre point of n = 9 has no ring label
    assert_eq!(text.lines().filter(|l| l.starts_with(",,")).count(), 1);

    let o = waldron(&["gen", "--family", "concentric", "-n", "5", "--radii", "0.55"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().count(), 22);
}

#[test]
fn gen_json_matches_csv() {
    let csv = stdout(&waldron(&["gen", "-n", "3"]));
    let json: serde_json::Value = serde_json::from_str(&stdout(&waldron(&["gen", "-n", "3", "--format", "json"]))).unwrap();
    let rows = json.as_array().unwrap();
    assert_eq!(rows.len(), 10);
    let xs = column(&csv, "x_1");
    for (r, x) in rows.iter().zip(xs) {
        assert_eq!(r["x_1"].as_f64().unwrap(), x);
    }
    let keys: Vec<&String> = rows[0].as_object().unwrap().keys().collect();
    assert_eq!(keys[0], "alpha_1");
    assert_eq!(keys[7], "lambda_3");
}

#[test]
fn gen_writes_svg() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("pts.svg");
    let o = waldron(&["gen", "-n", "4", "--svg", svg.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let text = fs::read_to_string(&svg).unwrap();
    assert_eq!(text.matches("<circle").count(), 15);
    assert_eq!(code(&waldron(&["gen", "--family", "waldron3m", "-n", "2", "--svg", svg.to_str().unwrap()])), 2);
}

#[test]
fn identical_runs_give_identical_files() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str| {
        let p = dir.path().join(name);
        let o = waldron(&[
            "lebesgue", "--families", "simplex,waldron:cosine", "--degrees", "2..4", "--grid", "60", "--format", "json",
            "-o", p.to_str().unwrap(),
        ]);
        assert_eq!(code(&o), 0);
        fs::read(p).unwrap()
    };
    assert_eq!(run("a.json"), run("b.json"));
    let a = stdout(&waldron(&["interp", "-n", "4", "--samples", "12"]));
    let b = stdout(&waldron(&["--threads", "1", "interp", "-n", "4", "--samples", "12"]));
    assert_eq!(a, b);
}

#[test]
fn lebesgue_simplex_column() {
    let o = waldron(&["lebesgue", "--families", "simplex", "--degrees", "1..3", "--dim", "2"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.starts_with("n,N,simplex\n"));
    let got = column(&text, "simplex");
    for (g, want) in got.iter().zip([1.0, 1.67, 2.27]) {
        assert!((g - want).abs() <= 0.02 * want, "{g} vs {want}");
    }
}

#[test]
fn lebesgue_with_output_prints_aligned_table() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("t.csv");
    let o = waldron(&[
        "lebesgue", "--families", "waldron:cosine", "--degrees", "3", "--grid", "40", "--rational", "-o",
        p.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("waldron:cosine/rational"));
    let csv = fs::read_to_string(p).unwrap();
    assert!(csv.starts_with("n,N,waldron:cosine,waldron:cosine/rational\n"));
    // the rational metric is only defined on triangles
    assert_eq!(code(&waldron(&["lebesgue", "--dim", "3", "--rational", "--families", "simplex"])), 2);
}

#[test]
fn lebesgue_3d() {
    let o = waldron(&["lebesgue", "--families", "simplex,waldron3m:cosine", "--degrees", "1..3", "--dim", "3", "--grid", "48"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    // n = 1 nodes are the vertices for both families
    assert!((column(&text, "simplex")[0] - column(&text, "waldron3m:cosine")[0]).abs() < 1e-12);
    assert_eq!(code(&waldron(&["lebesgue", "--dim", "4"])), 2);
    assert_eq!(code(&waldron(&["lebesgue", "--dim", "3", "--families", "concentric", "--degrees", "2", "--grid", "10"])), 1);
}

#[test]
fn interp_with_builtin_and_csv_data() {
    let o = waldron(&["interp", "-n", "5", "--samples", "10"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.starts_with("x,y,value\n"));
    assert_eq!(text.lines().count(), 67);

    // data equal to x_1 at the nodes reproduces x everywhere
    let dir = tempfile::tempdir().unwrap();
    let data = dir.path().join("data.csv");
    let nodes = stdout(&waldron(&["gen", "--family", "concentric", "-n", "6"]));
    let mut body = String::from("value\n");
    for x in column(&nodes, "x_1") {
        body.push_str(&format!("{x:.17e}\n"));
    }
    fs::write(&data, body).unwrap();
    let o = waldron(&["interp", "--family", "concentric", "-n", "6", "--fn", data.to_str().unwrap(), "--samples", "7"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    for (x, v) in column(&text, "x").iter().zip(column(&text, "value")) {
        assert!((x - v).abs() < 1e-12);
    }
    // wrong number of data values
    let o = waldron(&["interp", "-n", "3", "--fn", data.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    assert!(!o.stderr.is_empty());
}

#[test]
fn interp_rejects_mismatched_scheme() {
    let o = waldron(&["interp", "--scheme", "simplex-explicit", "--family", "waldron", "-n", "3"]);
    assert_eq!(code(&o), 1);
    let o = waldron(&["interp", "--scheme", "simplex-explicit", "--family", "simplex", "-n", "3", "--samples", "5"]);
    assert_eq!(code(&o), 0);
}

#[test]
fn chart_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("theta.csv");
    fs::write(&input, "t1,t2,t3\n0.2,0.3,0.5\n0.6,0.1,0.3\n1,0,0\n").unwrap();
    let fwd = dir.path().join("lambda.csv");
    let o = waldron(&["chart", "--to", "lambda", "-i", input.to_str().unwrap(), "-o", fwd.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let fwd_text = fs::read_to_string(&fwd).unwrap();

    // feed the Cartesian output back in
    let xs = column(&fwd_text, "x_1");
    let ys = column(&fwd_text, "x_2");
    let mut body = String::from("x,y\n");
    for (x, y) in xs.iter().zip(&ys) {
        body.push_str(&format!("{x:.17e},{y:.17e}\n"));
    }
    let back_in = dir.path().join("x.csv");
    fs::write(&back_in, body).unwrap();
    let o = waldron(&["chart", "--to", "theta", "--cartesian", "-i", back_in.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    for (k, want) in [(1, [0.2, 0.6, 1.0]), (2, [0.3, 0.1, 0.0])] {
        for (got, w) in column(&text, &format!("theta_{k}")).iter().zip(want) {
            assert!((got - w).abs() < 1e-9, "{got} vs {w}");
        }
    }
}

#[test]
fn chart_flags_points_outside_the_image() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("l.csv");
    // a point outside the simplex is reported on its own row
    fs::write(&input, "l1,l2,l3\n0.2,0.3,0.5\n1.5,-0.2,-0.3\n").unwrap();
    let o = waldron(&["chart", "--to", "theta", "-i", input.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.lines().nth(1).unwrap().ends_with(",ok"));
    assert!(text.lines().nth(2).unwrap().ends_with(",outside"));
    fs::write(&input, "l1,l2\n0.2,0.8\n").unwrap();
    assert_eq!(code(&waldron(&["chart", "--to", "theta", "-i", input.to_str().unwrap()])), 1);
    assert_eq!(code(&waldron(&["chart", "--to", "lambda", "--cartesian"])), 2);
}

#[test]
fn spacing_report() {
    let o = waldron(&["spacing", "-n", "20", "--grid", "60"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let max = v["extrema"]["max_ratio"].as_f64().unwrap();
    assert!(max <= v["extrema"]["upper_bound"].as_f64().unwrap() + 1e-12);
    assert!((v["extrema"]["min_ratio"].as_f64().unwrap() - 1.0).abs() < 1e-9);
    assert!(v["neighbors"]["pairs"].as_u64().unwrap() > 0);
    let o = waldron(&["spacing", "--format", "csv", "--grid", "30"]);
    assert!(stdout(&o).starts_with("weight,n,grid,min_ratio,max_ratio,upper_bound\ncosine,,30,"));
}

#[test]
fn radii_table_and_optimizer() {
    let o = waldron(&["radii", "--table"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.starts_with("version,n,N,R_0,R_1,R_2,R_3,R_4\n"));
    assert_eq!(text.lines().count(), 13);

    let o = waldron(&["radii", "--degrees", "4", "--start", "neutral"]);
    assert_eq!(code(&o), 0);
    let r1 = column(&stdout(&o), "R_1")[0];
    assert!((r1 - (1.0 + 3.0 * 5f64.sqrt()) / 22.0).abs() < 1e-6);

    let o = waldron(&["radii", "--degrees", "7", "--inner-edges", "legendre"]);
    let dev = column(&stdout(&o), "table_deviation")[0];
    assert!(dev < 1e-6, "{dev}");
    assert_eq!(code(&waldron(&["radii", "--table", "--degrees", "4"])), 2);
}

#[test]
fn repro_tables_small() {
    let dir = tempfile::tempdir().unwrap();
    let o = waldron(&["repro-tables", "--dim", "2", "--max-degree", "5", "--out-dir", dir.path().to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 16);
    assert!(text.lines().skip(1).all(|l| l.ends_with(",PASS")));
    assert!(Path::new(&dir.path().join("lebesgue_2d.csv")).exists());
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["gen"][..],
        &["gen", "-n", "3", "--bogus"],
        &["gen", "-n", "x"],
        &["gen", "-n", "3", "--simplex", "0,0;1,1;2,2"],
        &["lebesgue", "--degrees", "3..1"],
        &["lebesgue", "--grid", "0"],
        &["lebesgue", "--families", "hexagon"],
        &["gen", "-n", "2", "--full-sphere"],
        &["nonsense"],
    ] {
        let o = waldron(args);
        assert_eq!(code(&o), 2, "{args:?}");
        assert!(!o.stderr.is_empty());
    }
    let o = waldron(&["lebesgue", "--families", "hexagon"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("--families"));
}

#[test]
fn computation_errors_exit_1() {
    let o = waldron(&["gen", "--family", "concentric", "-n", "13"]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("radii"));
    let o = waldron(&["gen", "--family", "concentric", "-n", "5", "--radii", "1.2"]);
    assert_eq!(code(&o), 1);
}

#[test]
fn help_for_every_subcommand() {
    for sub in ["gen", "interp", "chart", "lebesgue", "spacing", "radii", "repro-tables"] {
        let o = waldron(&[sub, "--help"]);
        assert_eq!(code(&o), 0, "{sub}");
        assert!(stdout(&o).contains("Usage"), "{sub}");
    }
}

#[test]
fn density_weight_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("density.csv");
    fs::write(&f, "t,F\n0,0.5\n0.5,1.5\n").unwrap();
    let spec = format!("density:file={}", f.display());
    let o = waldron(&["gen", "-n", "4", "--weight", &spec]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o).lines().count(), 16);
    // F integrates to 1/2 only after rescaling
    fs::write(&f, "t,F\n0,1\n0.5,3\n").unwrap();
    assert_eq!(code(&waldron(&["gen", "-n", "4", "--weight", &spec])), 2);
    assert_eq!(code(&waldron(&["gen", "-n", "4", "--weight", &format!("{spec}:normalize")])), 0);
}
