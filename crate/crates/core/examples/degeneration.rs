//! Verifying D7_14 → D7_12 along a parametric basis.

use dualmock::degen::{limit_algebra, necessary_conditions, parametric_constants, verify_claim, DegenerationClaim};
use dualmock::shell::catalog::{self, Catalog};
use dualmock::shell::parse::parse_parametric_basis;

const BASIS: &str = "
E1 = t e4
E2 = t^2 e2 - e3
E3 = t e3 + t e5 + t^3 e6
E4 = e1 + e2 + t^2 e4 - e5
E5 = t e7
E6 = t^3 e6
E7 = e5 + e6
";

pub fn main() {
    let a = catalog::get("D7_14").unwrap().algebra;
    let b = parse_parametric_basis(BASIS, 7).unwrap();
    let pc = parametric_constants(&a, &b).unwrap();
    println!("c^5_12(t) = {}", pc.c(0, 1, 4));
    print!("limit:\n{}", limit_algebra(&a, &b).unwrap());

    let report = verify_claim(&DegenerationClaim::witnessed("D7_14", "D7_12", b), &Catalog).unwrap();
    println!("status {}", report.status);

    let nc = necessary_conditions(&a, &catalog::get("D7_13").unwrap().algebra).unwrap();
    println!("D7_14 -> D7_13 refuted by {:?}", nc.fired());
}
