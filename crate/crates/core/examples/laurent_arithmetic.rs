//! Sparse Laurent polynomials in `u`, `v`: arithmetic, exact division,
//! truncated series, and specialization.

use hodge_triples::laurent::{frac, series_binomial, series_geometric, LaurentPoly};

fn main() {
    let p = LaurentPoly::from_terms([(0, 0, 1), (1, 0, 1)]);
    let q = LaurentPoly::from_terms([(0, 0, 1), (0, 1, 1)]);
    let jac = (&p * &q).pow(2);
    println!("(1+u)^2 (1+v)^2 = {jac}");

    let quotient = jac.exact_div(&p).expect("1+u divides");
    println!("divided by 1+u  = {quotient}");
    match jac.exact_div(&LaurentPoly::from_terms([(0, 0, 1), (1, 1, -1)])) {
        Ok(r) => println!("unexpected quotient {r}"),
        Err(e) => println!("divided by 1-uv: {e}"),
    }

    let with_inverse = &LaurentPoly::monomial(3, -2, 1) + &LaurentPoly::uv_pow(2);
    println!(
        "Laurent terms: {with_inverse}, palindrome dual at n=2: {}",
        with_inverse.palindrome_dual(2)
    );

    let geo = series_geometric(&LaurentPoly::uv_pow(1), 4).unwrap();
    let bin = series_binomial(&LaurentPoly::u(), 3, 4).unwrap();
    let prod = &geo * &bin;
    for j in 0..=prod.order() {
        println!("x^{j}: {}", prod.coeff(j).unwrap());
    }

    println!("diagonal of the Jacobian factor: {}", jac.diagonal());
    println!(
        "value at u=1/2, v=-1: {}",
        jac.eval(&frac(1, 2), &frac(-1, 1)).unwrap()
    );
}
