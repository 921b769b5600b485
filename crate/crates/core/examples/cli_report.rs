// Driving the command line in-process and reading its JSON report.

use tightloc::cli::{run, Config};

fn main() {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(
        ["tightloc", "matrix", "--degree", "3", "--json-indent", "0"],
        Ok(Config::default()),
        &mut out,
        &mut err,
    );
    let report: serde_json::Value = serde_json::from_slice(&out).unwrap();
    println!("exit {code}, verdict {}", report["verdict"]);
    println!("M = {}", report["context"]["M"]);
    print!("{}", String::from_utf8_lossy(&err));
    assert_eq!(code, 0);
}
