// Walks a max-plus segment through its breakpoints and records the faces it
// crosses.

use maxplus_hemispaces::faces::{
    boundary_subface, representative, segment_face_trace, FaceId, Hyperplane, HyperplaneSpec,
    IndexSet,
};
use maxplus_hemispaces::maxplus::{segment_breakpoints, segment_point};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let h = Hyperplane::new(&HyperplaneSpec {
        n: 2,
        i: vec![1, 2],
        alpha: true,
        ..Default::default()
    })?;
    let f1 = FaceId::K(IndexSet::from_coords([1]));
    let f2 = FaceId::K(IndexSet::from_coords([2]));
    let x = representative(&h, f1)?;
    let y = representative(&h, f2)?;

    println!("[({x}), ({y})] breakpoints:");
    for param in segment_breakpoints(&x, &y)? {
        println!("  {param} -> ({})", segment_point(&x, &y, param)?);
    }
    let trace = segment_face_trace(&h, &x, &y)?;
    let names: Vec<String> = trace.iter().map(|f| f.to_string()).collect();
    println!("faces met: {}", names.join(" -> "));
    assert_eq!(trace, vec![f1, boundary_subface(&h, f1, f2)?, f2]);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
