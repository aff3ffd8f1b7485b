//! Builds the E6 quiver, round-trips it through the JSON file format,
//! mutates at a sink and shows why a 3-cycle has no frieze.

use affine_frieze::quiver::{ExchangeMatrix, QuiverFile};
use affine_frieze::{build_affine_quiver, Family, Quiver};

fn main() -> affine_frieze::Result<()> {
    let q = build_affine_quiver(Family::E6)?;
    let json = QuiverFile::from_quiver(&q).to_json();
    println!("{json}");

    let path = std::env::temp_dir().join("e6-quiver.json");
    std::fs::write(&path, &json)?;
    let back = QuiverFile::load(&path)?;
    assert_eq!(back, q);

    let order = q.admissible_order()?;
    let labels: Vec<&str> = order.iter().map(|&i| q.labels[i].as_str()).collect();
    println!("mutation order: {}", labels.join(" "));
    let k = order[0];
    let m = q.mutate(k)?;
    println!("after mutating {} it is a source: {}", q.labels[k], m.b.is_source(k));

    let cycle = Quiver {
        family: Family::Custom,
        labels: vec!["1".into(), "2".into(), "3".into()],
        b: ExchangeMatrix::new(vec![vec![0, 1, -1], vec![-1, 0, 1], vec![1, -1, 0]])?,
        delta: Vec::new(),
    };
    println!("3-cycle: {}", cycle.admissible_order().unwrap_err());
    Ok(())
}
