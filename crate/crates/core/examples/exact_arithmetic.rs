//! Exact matrices over ℚ and rational functions in t.

use dualmock::exact::{q, qr, MatrixQ, TPoly, TRatFunc};

pub fn main() {
    let m = MatrixQ::from_rows(3, &[vec![q(2), q(1), q(0)], vec![q(1), q(3), q(1)], vec![q(0), q(1), qr(1, 2)]]);
    println!("det = {}", m.determinant().unwrap());
    let inv = m.inverse().unwrap();
    println!("m * m^-1 = identity: {}", m.mul(&inv).unwrap() == MatrixQ::identity(3));

    let num = TPoly::from_terms([(1, q(1)), (3, q(2))]);
    let den = TPoly::from_terms([(1, q(1)), (2, q(-1))]);
    let f = TRatFunc::new(num, den).unwrap();
    println!("f = {f}, f(1/2) = {}, lim t->0 = {}", f.eval(&qr(1, 2)).unwrap(), f.limit_at_zero().unwrap());
}
