//! Loading a quiver from JSON and running a job through the command layer.

use quiver_moduli::cli::main_with_args;
use quiver_moduli::Quiver;

fn main() -> quiver_moduli::Result<()> {
    let json = serde_json::json!({
        "vertices": ["a", "b", "c"],
        "arrows": [{"from": "a", "to": "b"}, {"from": "b", "to": "c"}, {"from": "c", "to": "a"}]
    });
    let q = Quiver::from_json(&json)?;
    println!("{} vertices, oriented cycle: {}", q.num_vertices(), q.has_oriented_cycle());

    let path = std::env::temp_dir().join("qmoduli-example-cycle.json");
    std::fs::write(&path, json.to_string()).expect("write quiver");
    let (code, out, err) = main_with_args([
        "qmoduli",
        "count",
        "simple",
        "--quiver",
        path.to_str().unwrap(),
        "--d",
        r#"{"a":1,"b":1,"c":1}"#,
    ]);
    print!("exit {code}\n{out}{err}");
    Ok(())
}
