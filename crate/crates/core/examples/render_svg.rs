// Writes SVG pictures of the faces of `x1 = x2 ⊕ 0` and of one hemispace
// related to it into the system temp directory.

use maxplus_hemispaces::enumeration::hemispaces_of;
use maxplus_hemispaces::faces::{Hyperplane, HyperplaneSpec};
use maxplus_hemispaces::render::render_svg;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let h = Hyperplane::new(&HyperplaneSpec {
        n: 2,
        i: vec![1],
        j: vec![2],
        l: vec![],
        alpha: true,
    })?;
    let dir = std::env::temp_dir();
    let faces = dir.join("hemispaces_faces.svg");
    std::fs::write(&faces, render_svg(&h, None)?)?;
    let hm = &hemispaces_of(&h)?[2];
    let member = dir.join("hemispaces_member.svg");
    std::fs::write(&member, render_svg(&h, Some(hm))?)?;
    println!("wrote {} and {}", faces.display(), member.display());
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
