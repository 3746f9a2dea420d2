// Maps each weak order on `[3]` to a splitting of the nonempty subsets of
// `[3]` into two union-closed collections, and checks the map is onto.

use std::collections::BTreeSet;

use maxplus_hemispaces::enumeration::{
    enumerate_splittings, enumerate_weak_orders, weak_order_to_splitting, Splitting,
};
use maxplus_hemispaces::faces::IndexSet;

fn show(family: &BTreeSet<IndexSet>) -> String {
    let sets: Vec<String> = family.iter().map(|s| s.to_string()).collect();
    format!("[{}]", sets.join(" "))
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let orders = enumerate_weak_orders(3);
    let mut images = BTreeSet::new();
    for w in &orders {
        let s = weak_order_to_splitting(w);
        println!("{:<20} -> {} | {}", w.to_string(), show(&s.c), show(&s.rest));
        images.insert(s);
    }
    let all: BTreeSet<Splitting> = enumerate_splittings(3).into_iter().collect();
    println!("{} weak orders, {} distinct images, {} splittings", orders.len(), images.len(), all.len());
    assert_eq!(images, all);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
