//! Regenerates the `corpus/` data directory from the spatial models.

use std::fs;
use std::path::PathBuf;

use petersen_tsg::corpus::{regenerate, EntryName};

const INDEX: &str = "\
# entry <Name> file <f> [certificates <f>] full <group|-> op <group|-> anchor <text>
entry Gamma file gamma.emb full - op D5 anchor pentagram inner cycle tied as 5_1, rotations and reflections of the page
entry Gamma1 file gamma1.emb full - op Z5 anchor coherently directed 8_17 on the outer pentagon forbids turning it over
entry Gamma2 file gamma2.emb full - op Z2 anchor 4_1 on edges 12 and 51 leaves only the reflection through vertex 1
entry Lambda file lambda.emb full - op D3 anchor 3-fold symmetric drawing about vertex 3 with a single trefoil 9-cycle
entry Lambda1 file lambda1.emb full - op Z3 anchor coherently directed 8_17 on edges a1, cb, 5d forbids the reflections
entry Delta file delta.emb certificates delta.cert full F20 op - anchor 5-cycles X and Y form a Hopf link in the 3-sphere
entry Delta1 file delta1.emb certificates delta1.cert full Z4 op - anchor 4_1 on edge 1a, left trefoils on X and right trefoils on Y
";

const DELTA_CERT: &str = "\
cert + (12345)(acebd) cited glide rotation of the 3-sphere rotating X by one fifth and Y by two fifths
cert - (1a)(2b5e)(3c4d) cited rotation-reflection of the 3-sphere exchanging X and Y
";

const DELTA1_CERT: &str = "\
cert - (1a)(2b5e)(3c4d) cited rotation-reflection of the 3-sphere exchanging X and Y, carrying the left trefoils to the right ones
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from("corpus"));
    fs::create_dir_all(&dir)?;
    for name in EntryName::ALL {
        let d = regenerate(name)?;
        let text = format!("# {}\n{}", name.as_str(), d.serialize());
        fs::write(dir.join(format!("{}.emb", name.stem())), text)?;
        println!("{}: {} crossings", name.as_str(), d.crossing_count());
    }
    fs::write(dir.join("delta.cert"), DELTA_CERT)?;
    fs::write(dir.join("delta1.cert"), DELTA1_CERT)?;
    fs::write(dir.join("index.txt"), INDEX)?;
    Ok(())
}
