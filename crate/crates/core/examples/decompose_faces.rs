// Lists the faces of `x1 ⊕ x2 = x3 ⊕ 0` in `R^3_max` with their conditions.
//
// ```text
// cargo run --example decompose_faces
// ```

use maxplus_hemispaces::faces::{face_catalog, face_conditions, Hyperplane, HyperplaneSpec};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let h = Hyperplane::new(&HyperplaneSpec {
        n: 3,
        i: vec![1, 2],
        j: vec![3],
        l: vec![],
        alpha: true,
    })?;
    println!("{h}");
    let faces = face_catalog(&h);
    for &face in &faces {
        let codim = face.codimension().expect("centered hyperplanes have only k-faces");
        let kind = if face.is_pure(&h) { "pure" } else { "one-sided" };
        println!(
            "  {:<16} codim {codim}  {kind:<9}  {}",
            face.to_string(),
            face_conditions(&h, face)?.join(", ")
        );
    }
    assert_eq!(faces.len(), 15);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
