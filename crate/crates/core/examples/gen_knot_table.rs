//! Regenerates the bundled knot diagrams in `data/knots/` from PD codes.
//!
//! Run with `cargo run -p petersen-tsg --example gen_knot_table -- <out-dir>`.

use std::path::PathBuf;

use petersen_tsg::diagram::SpatialDiagram;
use petersen_tsg::knot::{alexander, determinant, jones, KnotDiagram};

const CODES: [(&str, &[[usize; 4]]); 4] = [
    ("unknot", &[]),
    ("3_1", &[[1, 5, 2, 4], [3, 1, 4, 6], [5, 3, 6, 2]]),
    (
        "4_1",
        &[[4, 2, 5, 1], [8, 6, 1, 5], [6, 3, 7, 4], [2, 7, 3, 8]],
    ),
    (
        "5_1",
        &[
            [2, 8, 3, 7],
            [4, 10, 5, 9],
            [6, 2, 7, 1],
            [8, 4, 9, 3],
            [10, 6, 1, 5],
        ],
    ),
];

/// 8_17 as the closure of a 3-braid.
const BRAID_8_17: [i32; 8] = [1, 1, -2, 1, -2, 1, -2, -2];

fn main() {
    let out: PathBuf = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from("crates/core/data/knots"));
    let mut knots: Vec<(&str, KnotDiagram)> = CODES
        .iter()
        .map(|&(name, code)| (name, KnotDiagram::from_pd(code).expect("valid PD code")))
        .collect();
    knots.push((
        "8_17",
        KnotDiagram::from_braid(3, &BRAID_8_17).expect("valid braid"),
    ));
    for (name, kd) in knots {
        println!(
            "{name}: writhe {} jones {} alexander {} det {}",
            kd.writhe(),
            jones(&kd).unwrap(),
            alexander(&kd).unwrap(),
            determinant(&kd).unwrap()
        );
        let text = format!("# {name}\n{}", SpatialDiagram::from_knot(&kd).serialize());
        std::fs::write(out.join(format!("{name}.emb")), text).expect("write diagram");
    }
}
