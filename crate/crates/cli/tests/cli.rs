use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use rgsmooth::{read_points, smooth, write_points, CsvSchema, Polyline64};

fn rgsmooth(args: &[&str], stdin: Option<&str>) -> Output {
    use std::io::Write;
    use std::process::Stdio;
    let mut child = Command::new(env!("CARGO_BIN_EXE_rgsmooth"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.unwrap_or("").as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn text(bytes: &[u8]) -> String {
    String::from_utf8(bytes.to_vec()).unwrap()
}

fn generated(seed: &str) -> String {
    let out = rgsmooth(
        &[
            "generate", "--n", "101", "--x-max", "20", "--sigma", "0.3", "--seed", seed,
        ],
        None,
    );
    assert!(out.status.success());
    text(&out.stdout)
}

#[test]
fn matches_library_byte_for_byte() {
    let input = generated("3");
    let out = rgsmooth(&["smooth", "--steps", "40"], Some(&input));
    assert!(out.status.success());

    let p: Polyline64 = read_points(input.as_bytes(), &CsvSchema::default()).unwrap();
    let mut expected = Vec::new();
    write_points(
        &smooth(&p, 40).unwrap().output,
        &CsvSchema::default(),
        &mut expected,
    )
    .unwrap();
    assert_eq!(out.stdout, expected);
}

#[test]
fn max_steps_on_three_points() {
    let out = rgsmooth(&["smooth", "--steps", "max"], Some("0,0\n1,5\n2,1\n"));
    assert!(out.status.success());
    assert_eq!(text(&out.stdout), "0,0\n2,1\n");
}

#[test]
fn target_ratio_trace() {
    let out = rgsmooth(
        &["smooth", "--target-cr", "94", "--trace"],
        Some(&generated("1")),
    );
    assert!(out.status.success());
    assert_eq!(text(&out.stdout).lines().count(), 6);
    let trace = text(&out.stderr);
    let last = trace.lines().last().unwrap();
    assert!(last.starts_with("p=95 "), "{last}");
    assert!(last.ends_with("c.r.=94.0594%"), "{last}");
}

#[test]
fn exit_codes() {
    let input = generated("2");
    assert_eq!(
        rgsmooth(&["smooth", "--steps", "100"], Some(&input))
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        rgsmooth(&["smooth", "--target-cr", "99.5"], Some(&input))
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        rgsmooth(&["smooth", "--steps", "1"], Some("0,1\n1,zz\n"))
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        rgsmooth(&["smooth", "--steps", "1"], Some("0,1\n"))
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        rgsmooth(&["smooth", "--steps", "-1"], Some(&input))
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        rgsmooth(&["smooth", "--target-cr", "100"], Some(&input))
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        rgsmooth(
            &[
                "smooth",
                "--steps",
                "1",
                "--input",
                "/definitely/missing.csv"
            ],
            None
        )
        .status
        .code(),
        Some(1)
    );
    assert_eq!(
        rgsmooth(&["generate", "--n", "1"], None).status.code(),
        Some(2)
    );
    assert_eq!(
        rgsmooth(&["generate", "--sigma", "-1"], None).status.code(),
        Some(2)
    );

    let parse = rgsmooth(&["smooth", "--steps", "1"], Some("0,1\n1,zz\n"));
    assert!(text(&parse.stderr).contains("row 2, column 2"));
}

#[test]
fn clamp_is_opt_in() {
    let input = "0,0\n1,1\n2,0\n3,1\n";
    let out = rgsmooth(&["smooth", "--steps", "10", "--clamp"], Some(input));
    assert!(out.status.success());
    assert!(text(&out.stderr).contains("clamping 10 steps to the maximum of 2"));
    assert_eq!(text(&out.stdout).lines().count(), 2);
}

#[test]
fn files_svg_header_and_delimiter() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("in.tsv");
    let output = dir.path().join("out.tsv");
    let svg = dir.path().join("plot.svg");
    fs::write(&input, "t\tlabel\tv\n0\ta\t1\n1\tb\t3\n2\tc\t2\n3\td\t4\n").unwrap();

    let out = rgsmooth(
        &[
            "smooth",
            "--input",
            input.to_str().unwrap(),
            "--output",
            output.to_str().unwrap(),
            "--svg",
            svg.to_str().unwrap(),
            "--delimiter",
            "\t",
            "--header",
            "--columns",
            "0,2",
            "--steps",
            "1",
        ],
        None,
    );
    assert!(out.status.success(), "{}", text(&out.stderr));
    let csv = fs::read_to_string(&output).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("x0\tx1"));
    assert_eq!(lines.next(), Some("0\t1"));
    assert_eq!(lines.count(), 2);

    let plot = fs::read_to_string(&svg).unwrap();
    assert!(plot.starts_with("<?xml"));
    assert_eq!(plot.matches("<polyline").count(), 2);
    assert!(plot.contains("steps: 1"));
}

#[test]
fn svg_axes_out_of_range() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("plot.svg");
    let out = rgsmooth(
        &[
            "smooth",
            "--steps",
            "1",
            "--svg",
            svg.to_str().unwrap(),
            "--axes",
            "0,5",
        ],
        Some("0,0\n1,1\n2,0\n"),
    );
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn generator_contract() {
    assert_eq!(generated("9"), generated("9"));
    assert_ne!(generated("9"), generated("10"));

    let out = rgsmooth(
        &["generate", "--n", "101", "--x-max", "20", "--sigma", "0"],
        None,
    );
    let p: Polyline64 = read_points(out.stdout.as_slice(), &CsvSchema::default()).unwrap();
    assert_eq!(p.len(), 101);
    for (i, q) in p.points().enumerate() {
        assert!((q[0] - 0.2 * i as f64).abs() < 1e-12);
        assert_eq!(q[1], q[0].sin());
    }
}

#[test]
fn golden_inputs_exist() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    assert_eq!(
        generated("7"),
        fs::read_to_string(dir.join("sine_101_seed7.csv")).unwrap()
    );
}
