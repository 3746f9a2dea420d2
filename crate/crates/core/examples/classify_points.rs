// Classifies points against hyperplanes with and without a free term,
// including points with `-inf` coordinates that land in the extra faces.

use maxplus_hemispaces::faces::{classify, side_of, FaceId, Hyperplane, HyperplaneSpec};
use maxplus_hemispaces::maxplus::Point;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let centered = Hyperplane::new(&HyperplaneSpec {
        n: 2,
        i: vec![1, 2],
        alpha: true,
        ..Default::default()
    })?;
    println!("{centered}");
    for text in ["1,0", "0,0", "-1,-3/2", "-inf,2", "-inf,-inf"] {
        let p: Point = text.parse()?;
        println!("  ({p}) -> {}  side {:?}", classify(&centered, &p)?, side_of(&centered, &p)?);
    }

    // x1 = x2 with x3 = -inf in R^4: the type-I face is a copy of R_max on x4
    let degenerate = Hyperplane::new(&HyperplaneSpec {
        n: 4,
        i: vec![1],
        j: vec![2],
        l: vec![3],
        alpha: false,
    })?;
    println!("{degenerate}");
    for text in ["2,1,-inf,0", "-inf,-inf,-inf,5", "0,0,1,0"] {
        let p: Point = text.parse()?;
        println!("  ({p}) -> {}", classify(&degenerate, &p)?);
    }
    let p: Point = "-inf,-inf,-inf,5".parse()?;
    assert_eq!(classify(&degenerate, &p)?, FaceId::TypeI);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
