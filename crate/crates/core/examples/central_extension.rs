//! Rebuilding D8_36 and D9_37 from D7_06.

use dualmock::algcore::{annihilator, check_identities};
use dualmock::ext::shapes::{d6_06_padded, nablas_d7_06};
use dualmock::ext::{central_extension, check_extension_conditions, CocycleTuple};
use dualmock::shell::catalog;

pub fn main() {
    let a = d6_06_padded(7);
    let [n1, _, _, n4] = nablas_d7_06();

    let t = CocycleTuple::single(n1.add(&n4));
    let ext = central_extension(&a, &t).unwrap();
    let rep = check_extension_conditions(&a, &t).unwrap();
    print!("{ext}");
    println!("equals D8_36: {}", ext == catalog::get("D8_36").unwrap().algebra);
    println!(
        "radical ∩ Ann has dim {}, Ann of the extension has dim {}, T_s {}",
        rep.radical_ann_dim,
        annihilator(&ext).dim(),
        rep.satisfies_ts()
    );

    let pair = CocycleTuple::new(vec![n1, n4]).unwrap();
    let ext = central_extension(&a, &pair).unwrap();
    let r = check_identities(&ext);
    println!("(∇1, ∇4): dim {}, dual mock-Lie {}, Jacobi {}", ext.dim(), r.dual_mock_lie, r.jacobi);
    println!("T_s {}", check_extension_conditions(&a, &pair).unwrap().satisfies_ts());
}
