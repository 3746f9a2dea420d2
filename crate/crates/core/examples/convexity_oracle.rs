// Runs the seeded convexity oracle on an enumerated hemispace and on a union
// of faces that misses the boundary face between its parts.

use maxplus_hemispaces::enumeration::enumerate_hemispaces;
use maxplus_hemispaces::faces::{classify, FaceId, Hyperplane, HyperplaneSpec, IndexSet};
use maxplus_hemispaces::hemispace::{check_hemispace, convexity_check, FaceSampler};
use maxplus_hemispaces::maxplus::Point;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let hm = &enumerate_hemispaces(2)[3];
    let report = check_hemispace(hm, 500, 0);
    println!("enumerated hemispace: pass {} over {} segments", report.pass, report.pairs_checked);
    assert!(report.pass);

    let h = Hyperplane::new(&HyperplaneSpec {
        n: 2,
        i: vec![1, 2],
        alpha: true,
        ..Default::default()
    })?;
    let allowed = [FaceId::K(IndexSet::from_coords([1])), FaceId::K(IndexSet::from_coords([2]))];
    let member = move |p: &Point| allowed.contains(&classify(&h, p).expect("two coordinates"));
    let report = convexity_check(&member, 2, &FaceSampler::new(&h), 500, 0);
    let c = report.counterexample.expect("the union is not convex");
    println!(
        "F{{1}} ∪ F{{2}}: ({}) lies on [({}), ({})] at {} but outside",
        c.point, c.x, c.y, c.param
    );
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
