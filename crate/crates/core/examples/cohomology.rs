//! Second cohomology of a few catalog algebras.

use dualmock::cohom::{class_coordinates, h2_basis, is_coboundary};
use dualmock::shell::{catalog, parse::parse_cocycle};

pub fn main() {
    for id in ["D5_01", "D6_06", "D7_06", "D7_07"] {
        let a = catalog::get(id).unwrap().algebra;
        let b = h2_basis(&a);
        let reps: Vec<String> = b.h2_reps.iter().map(ToString::to_string).collect();
        println!("{id}: Z2 {} B2 {} H2 {}  [{}]", b.z2.len(), b.b2.len(), b.h2_dim(), reps.join("; "));
    }

    let a = catalog::get("D7_06").unwrap().algebra;
    let basis = h2_basis(&a);
    let f = parse_cocycle("2*[d16] - 2*[d25] + 2*[d34] + [d12]", 7).unwrap();
    println!("[d12] is a coboundary of D7_06: {}", is_coboundary(&a, &parse_cocycle("[d12]", 7).unwrap()).unwrap());
    let coords: Vec<String> = class_coordinates(&a, &f, &basis).unwrap().iter().map(ToString::to_string).collect();
    println!("class coordinates of {f}: ({})", coords.join(", "));
}
