//! Identity checks on a catalog algebra and on a hand-written table.

use dualmock::algcore::{check_identities, Identity};
use dualmock::exact::fmt_vector;
use dualmock::shell::{catalog, parse::parse_algebra};

pub fn main() {
    let a = catalog::get("D7_14").unwrap().algebra;
    let r = check_identities(&a);
    println!("D7_14: dual mock-Lie {}, Jacobi {}", r.dual_mock_lie, r.jacobi);
    if let Some(w) = r.witnesses_for(Identity::Jacobi).next() {
        let (i, j, k) = w.triple;
        println!("cyclic sum on (e{}, e{}, e{}) = {}", i + 1, j + 1, k + 1, fmt_vector(&w.lhs));
    }

    // Not antiassociative: (e1 e2) e1 = e4 and e1 (e2 e1) = e4.
    let b = parse_algebra("dim 4\ne1 e2 = e3\ne3 e3 = 0\ne3 e1 = e4").unwrap();
    let r = check_identities(&b);
    println!("custom: antiassociative {}, witnesses {}", r.antiassociative, r.witnesses.len());
}
