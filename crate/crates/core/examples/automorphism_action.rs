//! The automorphism action on H² of D7_06 and the reduction to ⟨∇1+∇4⟩.

use dualmock::exact::q;
use dualmock::ext::shapes::{alpha_star_computed, combine, d6_06_padded, nablas_d7_06, recipe_d7_06_single};
use dualmock::ext::{act, same_h2_span, CocycleTuple};

pub fn main() {
    let a = d6_06_padded(7);
    let ns = nablas_d7_06();
    let al = [q(2), q(3), q(5), q(7)];
    let shape = recipe_d7_06_single(&al).unwrap();
    let phi = shape.matrix();

    let printed: Vec<String> = shape.alpha_star_printed(&al).iter().map(ToString::to_string).collect();
    let computed: Vec<String> =
        alpha_star_computed(&a, &ns, &phi, &al).unwrap().iter().map(ToString::to_string).collect();
    println!("α* from the formulas: ({})", printed.join(", "));
    println!("α* from the action:   ({})", computed.join(", "));

    let t = CocycleTuple::single(combine(&ns, &al));
    let image = act(&a, &phi.into(), &t).unwrap();
    let target = CocycleTuple::single(ns[0].add(&ns[3]));
    println!("image {} spans ⟨∇1+∇4⟩: {}", image.components[0], same_h2_span(&a, &image, &target).unwrap());
}
