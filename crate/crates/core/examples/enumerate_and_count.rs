// Enumerates every hemispace of `R^n_max` related to a hyperplane centered
// at the origin and compares the count with `2·f(n)`.

use maxplus_hemispaces::enumeration::{
    bell_f, count_hemispaces, enumerate_centered_hyperplanes, enumerate_face_partitions,
    enumerate_hemispaces,
};
use maxplus_hemispaces::json::hemispace_to_json;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for h in enumerate_centered_hyperplanes(2) {
        println!("{h}: {} proper pairs", enumerate_face_partitions(&h)?.len());
    }
    let plane = enumerate_hemispaces(2);
    println!("first hemispace of R^2_max: {}", hemispace_to_json(&plane[0]));

    for n in 1..=4 {
        let counted = count_hemispaces(n);
        let formula = bell_f(n) * 2u32;
        println!("n = {n}: enumerated {counted}, 2·f(n) = {formula}");
        assert_eq!(counted, formula);
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
