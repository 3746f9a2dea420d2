// Builds hemispace pairs from a split of the faces: first for a centered
// hyperplane in the plane, then for `x1 = x2, x3 = -inf` in `R^4_max`, whose
// type-I face (a copy of `R_max` on `x4`) is split at `x4 >= 0`.

use maxplus_hemispaces::faces::{ExtIndex, Hyperplane, HyperplaneSpec, IndexSet};
use maxplus_hemispaces::hemispace::{
    assemble, check_hemispace, validate_partition, FacePartition, PartSide, TypeISplit,
};
use maxplus_hemispaces::maxplus::Point;

type Res<T> = Result<T, Box<dyn std::error::Error>>;

fn split(h: &Hyperplane, first: &[IndexSet]) -> Res<FacePartition> {
    let rest: Vec<IndexSet> = h
        .universe()
        .nonempty_subsets()
        .into_iter()
        .filter(|s| !first.contains(s))
        .collect();
    Ok(validate_partition(h, first, &rest)?)
}

pub fn run_example() -> Res<()> {
    let free = IndexSet::singleton(ExtIndex::FreeTerm);
    let h = Hyperplane::new(&HyperplaneSpec {
        n: 2,
        i: vec![1, 2],
        alpha: true,
        ..Default::default()
    })?;
    let part = split(&h, &[free, IndexSet::from_coords([1]).with(ExtIndex::FreeTerm)])?;
    let pair = assemble(&h, &part, PartSide::First, None, None)?;
    for text in ["0,-1", "1,0", "-inf,-inf"] {
        let p: Point = text.parse()?;
        println!("({p}) in first member: {}", pair.first.contains(&p)?);
    }

    let line = Hyperplane::new(&HyperplaneSpec {
        n: 1,
        i: vec![1],
        alpha: true,
        ..Default::default()
    })?;
    let nonnegative = IndexSet::from_coords([1]);
    let half_line = split(&line, &[nonnegative, nonnegative.with(ExtIndex::FreeTerm)])?;
    let x4_nonnegative = assemble(&line, &half_line, PartSide::First, None, None)?.first;

    let degenerate = Hyperplane::new(&HyperplaneSpec {
        n: 4,
        i: vec![1],
        j: vec![2],
        l: vec![3],
        alpha: false,
    })?;
    let part = split(&degenerate, &[IndexSet::from_coords([1])])?;
    for type_ii in [true, false] {
        for type_i in [TypeISplit::AllToFirst, TypeISplit::Split(Box::new(x4_nonnegative.clone()))] {
            let label = match &type_i {
                TypeISplit::Split(_) => "x4 >= 0 split",
                _ => "type I to first",
            };
            let pair = assemble(&degenerate, &part, PartSide::First, Some(type_i), Some(type_ii))?;
            let a = check_hemispace(&pair.first, 300, 1);
            let b = check_hemispace(&pair.second, 300, 1);
            println!("type II to first = {type_ii:<5} {label:<16} convex: {} / {}", a.pass, b.pass);
            assert!(a.pass && b.pass);
        }
    }
    Ok(())
}

fn main() -> Res<()> {
    run_example()
}
