//! Reference implementations used as oracles. Deliberately naive: nothing
//! here shares code with the library's determinant or lift.

#![allow(dead_code)]

use std::collections::HashMap;

use num_traits::Zero;

use liecoeff::{Mat, Poly, PolyMatrix, RatMat, Rational, Scalar, VarTable};

pub fn q(v: i64) -> Rational {
    Rational::from_int(v)
}

pub fn frac(a: i64, b: i64) -> Rational {
    q(a) / q(b)
}

pub fn poly(text: &str, names: &[&str]) -> Poly {
    let t = VarTable::new(names.iter().copied()).unwrap();
    Poly::parse(text, &t).unwrap_or_else(|e| panic!("{text}: {e}"))
}

/// Sum over all permutations of sign * product of entries.
pub fn leibniz(m: &PolyMatrix<Rational>) -> Poly {
    let n = m.size();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = Poly::zero(m.vars());
    permute(&mut perm, 0, &mut |p| {
        let mut term = Poly::one(m.vars());
        for (r, &c) in p.iter().enumerate() {
            term = &term * m.get(r, c);
            if term.is_zero() {
                return;
            }
        }
        if inversions(p) % 2 == 1 {
            term = -term;
        }
        total = &total + &term;
    });
    total
}

fn permute(p: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, f);
        p.swap(k, i);
    }
}

fn inversions(p: &[usize]) -> usize {
    let mut count = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                count += 1;
            }
        }
    }
    count
}

/// Weakly increasing index sequences of length `d` over `0..n`, in lex
/// order: `e1^d` first, `en^d` last.
pub fn multisets(n: usize, d: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, d: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == d {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(n, d, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, d, 0, &mut Vec::new(), &mut out);
    out
}

/// Matrix of `A` acting on `S^d` as a derivation, computed factor by
/// factor: `A(e_s) = sum_j A[s][j] e_j`, row `r` is the image of basis
/// monomial `r`.
pub fn multiset_lift(a: &RatMat, d: usize) -> RatMat {
    let n = a.rows();
    let basis = multisets(n, d);
    let index: HashMap<Vec<usize>, usize> = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let mut out: RatMat = Mat::zeros(basis.len(), basis.len());
    for (r, mono) in basis.iter().enumerate() {
        for pos in 0..d {
            let s = mono[pos];
            for j in 0..n {
                let c = &a[(s, j)];
                if c.is_zero() {
                    continue;
                }
                let mut image = mono.clone();
                image[pos] = j;
                image.sort_unstable();
                let col = index[&image];
                out[(r, col)] = out[(r, col)].clone() + c.clone();
            }
        }
    }
    out
}

/// `x0*I + sum_k vars[k]*mats[k]` over the table `x0, vars...`.
pub fn pencil(vars: &[String], mats: &[RatMat]) -> PolyMatrix<Rational> {
    let table = VarTable::new(std::iter::once("x0").chain(vars.iter().map(String::as_str))).unwrap();
    let m = mats[0].rows();
    let rows = (0..m)
        .map(|r| {
            (0..m)
                .map(|c| {
                    let mut e = if r == c { Poly::var(&table, "x0").unwrap() } else { Poly::zero(&table) };
                    for (v, a) in vars.iter().zip(mats) {
                        e = &e + &Poly::var(&table, v).unwrap().scale(&a[(r, c)]);
                    }
                    e
                })
                .collect()
        })
        .collect();
    PolyMatrix::from_rows(rows).unwrap()
}

/// `prod_alpha (x0 + sum_i alpha_i x_i)` over exponent vectors of degree `d`.
pub fn diagonal_forms_product(n: usize, d: usize) -> Poly {
    let t = VarTable::indexed("x", 0, n + 1);
    let mut acc = Poly::one(&t);
    for mono in multisets(n, d) {
        let mut form = Poly::var_at(&t, 0);
        for &i in &mono {
            form = &form + &Poly::var_at(&t, i + 1);
        }
        acc = &acc * &form;
    }
    acc
}
