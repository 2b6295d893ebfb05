use std::process::{Command, Output};

use antipodal_atlas::antipodal::ReportRecord;
use antipodal_atlas::cli::{run_with, EXIT_EXCLUDED, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE};
use antipodal_atlas::rootsys::{build, Family, RootSystemId};

fn atlas(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_antipodal-atlas"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn spin_odd_rank_five_has_a_ten_dimensional_orbit() {
    let o = atlas(&["antipodal", "Spin(2r+1)", "--r", "5", "--format", "json"]);
    assert_eq!(o.status.code(), Some(EXIT_OK));
    let record: ReportRecord = serde_json::from_str(&stdout(&o)).unwrap();
    let dims: Vec<u64> = record.orbits.iter().map(|x| x.dimension).collect();
    assert_eq!(dims, [10]);
}

#[test]
fn json_report_round_trips() {
    let o = atlas(&[
        "antipodal",
        "Gr_{r,r}",
        "--r",
        "6",
        "--gamma",
        "Z_2+Z_2",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(EXIT_OK));
    let text = stdout(&o);
    let record: ReportRecord = serde_json::from_str(&text).unwrap();
    assert_eq!(record.orbits[0].dimension, 18);
    let again = serde_json::to_string_pretty(&record).unwrap();
    assert_eq!(
        serde_json::from_str::<ReportRecord>(&again).unwrap(),
        record
    );
}

#[test]
fn excluded_cyclic_subgroup_is_refused() {
    let o = atlas(&["antipodal", "A I", "--r", "7", "--gamma", "Z_4"]);
    assert_eq!(o.status.code(), Some(EXIT_EXCLUDED));
    let o = atlas(&[
        "antipodal",
        "A I",
        "--r",
        "7",
        "--gamma",
        "Z_4",
        "--allow-unvalidated",
    ]);
    assert_eq!(o.status.code(), Some(EXIT_OK));
    assert!(stdout(&o).contains("computed-not-validated"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(atlas(&["table", "7"]).status.code(), Some(EXIT_USAGE));
    assert_eq!(
        atlas(&["antipodal", "No Such Space"]).status.code(),
        Some(EXIT_USAGE)
    );
    assert_eq!(
        atlas(&["antipodal", "Spin(2r+1)", "--r", "5", "--gamma", "Z_3"])
            .status
            .code(),
        Some(EXIT_USAGE)
    );
}

#[test]
fn list_csv_has_a_stable_header() {
    let o = atlas(&["list", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(EXIT_OK));
    let text = stdout(&o);
    assert_eq!(
        text.lines().next(),
        Some("name,cartan_label,sigma,rank_expr,gammas")
    );
    assert!(text.lines().count() > 80);
}

#[test]
fn evaluated_table_four_at_three() {
    let o = atlas(&["table", "4", "--evaluate", "r=3", "--ascii"]);
    assert_eq!(o.status.code(), Some(EXIT_OK));
    let text = stdout(&o);
    assert!(text.starts_with("Table 4."));
    assert!(text.contains("| 27"), "{text}");
}

#[test]
fn fixed_exceptional_entries() {
    for (name, dim) in [("E VIII", "64"), ("E_8", "128"), ("G_2", "6")] {
        let o = atlas(&["antipodal", name, "--format", "csv"]);
        assert_eq!(o.status.code(), Some(EXIT_OK), "{name}");
        let text = stdout(&o);
        let row = text.lines().nth(1).unwrap();
        assert_eq!(row.split(',').nth(4), Some(dim), "{name}: {row}");
    }
}

#[test]
fn tampered_g2_fails_verify_and_names_the_row() {
    let tampered = |id: RootSystemId| {
        let mut rs = build(id)?;
        if id.family() == Family::G2 {
            rs.tamper_highest_coefficients(vec![4, 2]);
        }
        Ok(rs)
    };
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let args = ["antipodal-atlas", "verify"].map(String::from);
    let code = run_with(args, &mut out, &mut err, &tampered);
    assert_eq!(code, EXIT_MISMATCH);
    let text = String::from_utf8_lossy(&out);
    assert!(text.contains("Table 1 / g₂"), "{text}");
}
