// The hemisphere-count recurrence against the standard ordered Bell numbers,
// in exact arithmetic well past machine-word range.

use maxplus_hemispaces::enumeration::{bell_f, bell_f_table, bell_standard};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let table: Vec<String> = bell_f_table(8).iter().map(|v| v.to_string()).collect();
    println!("f(0..=8): {}", table.join(" "));
    for n in [10, 20, 40] {
        println!("f({n}) = {}", bell_f(n));
        assert_eq!(bell_f(n), bell_standard(n + 1));
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
