use std::collections::BTreeMap;

use cunningham::certify::decide_irreducible;
use cunningham::factorize::factor_over_rationals;
use cunningham::Polynomial;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_poly(rng: &mut ChaCha8Rng, max_degree: usize, bound: i64) -> Polynomial {
    let d = rng.gen_range(1..=max_degree);
    let mut c: Vec<i64> = (0..=d).map(|_| rng.gen_range(-bound..=bound)).collect();
    while c[d] == 0 {
        c[d] = rng.gen_range(-bound..=bound);
    }
    Polynomial::from_i64(&c)
}

fn irreducible_factor(rng: &mut ChaCha8Rng) -> Polynomial {
    loop {
        let f = random_poly(rng, 8, 9).primitive_part();
        let f = if f.leading_coeff().unwrap() < &BigInt::from(0) {
            -f
        } else {
            f
        };
        if decide_irreducible(&f).unwrap().is_irreducible() {
            return f;
        }
    }
}

#[test]
fn products_refactor_exactly() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..60 {
        let count = rng.gen_range(2..=3);
        let parts: Vec<Polynomial> = (0..count).map(|_| irreducible_factor(&mut rng)).collect();
        let product: Polynomial = parts.iter().product();
        let mut want: BTreeMap<Polynomial, u32> = BTreeMap::new();
        for p in &parts {
            *want.entry(p.clone()).or_default() += 1;
        }
        let fact = factor_over_rationals(&product).unwrap();
        let got: BTreeMap<Polynomial, u32> = fact.factors.iter().cloned().collect();
        assert_eq!(got, want, "product {product}");
        assert_eq!(fact.reconstruct(), product);
    }
}

#[test]
fn verdicts_agree_with_full_factorization() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..500 {
        let f = random_poly(&mut rng, 10, 9);
        let verdict = decide_irreducible(&f).unwrap();
        let fact = factor_over_rationals(&f).unwrap();
        assert_eq!(verdict.is_irreducible(), fact.is_irreducible(), "{f}");
        assert!(verdict.verify(&f), "{f}");
    }
}

#[test]
fn repeated_factors() {
    let a = Polynomial::from_i64(&[1, 0, 1]);
    let b = Polynomial::from_i64(&[-2, 0, 0, 1]);
    let f = &(&a * &a) * &(&(&b * &b) * &b);
    let fact = factor_over_rationals(&f).unwrap();
    assert_eq!(fact.factors, vec![(a, 2), (b, 3)]);
}

#[test]
fn brauer_certified_polynomials_factor_trivially() {
    use cunningham::certify::brauer_check;
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..100 {
        let n = rng.gen_range(2..=12);
        // x^n - a_{n-1} x^{n-1} - ... - a_0 with a_{n-1} >= ... >= a_0 > 0
        let mut a: Vec<i64> = (0..n).map(|_| rng.gen_range(1..=9)).collect();
        a.sort_unstable();
        let mut c: Vec<i64> = a.iter().map(|v| -v).collect();
        c.push(1);
        let f = Polynomial::from_i64(&c);
        assert!(brauer_check(&f), "{f}");
        assert!(factor_over_rationals(&f).unwrap().is_irreducible(), "{f}");
    }
}
