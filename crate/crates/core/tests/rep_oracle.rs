//! Engine values against scalars of central elements in small irreducible
//! representations, computed by brute-force matrix sums.

use std::collections::HashMap;

use weightsys::engine::{eval_wgl, eval_wso};
use weightsys::perm::{ChordDiagram, Permutation};
use weightsys::{Polynomial, Rational};

type Mat = Vec<Vec<i64>>;

/// `ρ(X_{ij})` for `1 ≤ i, j ≤ n`, stored 0-based.
struct Rep {
    n: usize,
    dim: usize,
    x: Vec<Vec<Mat>>,
    label: String,
}

fn zero(d: usize) -> Mat {
    vec![vec![0; d]; d]
}

/// gl(n) on homogeneous polynomials of degree `d`, `E_ij = x_i ∂_j`.
fn gl_sym(n: usize, d: usize) -> Rep {
    fn exps(n: usize, d: usize) -> Vec<Vec<usize>> {
        if n == 1 {
            return vec![vec![d]];
        }
        let mut out = Vec::new();
        for a in (0..=d).rev() {
            for mut rest in exps(n - 1, d - a) {
                rest.insert(0, a);
                out.push(rest);
            }
        }
        out
    }
    let basis = exps(n, d);
    let index: HashMap<Vec<usize>, usize> =
        basis.iter().cloned().enumerate().map(|(k, e)| (e, k)).collect();
    let dim = basis.len();
    let mut x = vec![vec![zero(dim); n]; n];
    for i in 0..n {
        for j in 0..n {
            for (col, e) in basis.iter().enumerate() {
                if e[j] == 0 {
                    continue;
                }
                let mut f = e.clone();
                f[j] -= 1;
                f[i] += 1;
                x[i][j][index[&f]][col] += e[j] as i64;
            }
        }
    }
    Rep {
        n,
        dim,
        x,
        label: format!("gl({n}) Sym^{d}"),
    }
}

fn so_defining(n: usize) -> Vec<Vec<Mat>> {
    let bar = |k: usize| n - 1 - k;
    let mut x = vec![vec![zero(n); n]; n];
    for i in 0..n {
        for j in 0..n {
            x[i][j][i][j] += 1;
            x[i][j][bar(j)][bar(i)] -= 1;
        }
    }
    x
}

fn so_vector(n: usize) -> Rep {
    Rep {
        n,
        dim: n,
        x: so_defining(n),
        label: format!("so({n}) vector"),
    }
}

/// so(n) on the exterior square of the vector representation.
fn so_wedge2(n: usize) -> Rep {
    let def = so_defining(n);
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    let index: HashMap<(usize, usize), usize> =
        pairs.iter().cloned().enumerate().map(|(k, p)| (p, k)).collect();
    let dim = pairs.len();
    let mut x = vec![vec![zero(dim); n]; n];
    for i in 0..n {
        for j in 0..n {
            let m = &def[i][j];
            for (col, &(a, b)) in pairs.iter().enumerate() {
                // X(e_a ∧ e_b) = X e_a ∧ e_b + e_a ∧ X e_b
                for c in 0..n {
                    for (u, v, coef) in [(c, b, m[c][a]), (a, c, m[c][b])] {
                        if coef == 0 || u == v {
                            continue;
                        }
                        let (key, s) = if u < v { ((u, v), 1) } else { ((v, u), -1) };
                        x[i][j][index[&key]][col] += s * coef;
                    }
                }
            }
        }
    }
    Rep {
        n,
        dim,
        x,
        label: format!("so({n}) wedge^2"),
    }
}

/// `Σ_i ρ(X_{i_1 i_{s(1)}}) ⋯ ρ(X_{i_m i_{s(m)}})` applied to the first basis
/// vector, which must come back as a multiple of itself.
fn scalar(rep: &Rep, s: &Permutation) -> i64 {
    let m = s.len();
    let img = s.as_slice();
    let mut total = vec![0i64; rep.dim];
    let mut idx = vec![0usize; m];
    loop {
        let mut v = vec![0i64; rep.dim];
        v[0] = 1;
        for k in (0..m).rev() {
            let a = &rep.x[idx[k]][idx[img[k] as usize]];
            let mut w = vec![0i64; rep.dim];
            for r in 0..rep.dim {
                for c in 0..rep.dim {
                    w[r] += a[r][c] * v[c];
                }
            }
            v = w;
        }
        for r in 0..rep.dim {
            total[r] += v[r];
        }
        let mut k = m;
        loop {
            if k == 0 {
                assert!(
                    total[1..].iter().all(|&t| t == 0),
                    "{}: {s} is not scalar",
                    rep.label
                );
                return total[0];
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < rep.n {
                break;
            }
            idx[k] = 0;
        }
    }
}

/// Specializes `C_0 = n` and `C_k` to the scalars of the standard cycles.
fn specialize(rep: &Rep, p: &Polynomial) -> Rational {
    let q = |v: i64| Rational::from_integer(v.into());
    let mut assign = HashMap::new();
    for v in p.variables() {
        let k = v.casimir_index().unwrap();
        let value = if k == 0 {
            rep.n as i64
        } else {
            scalar(rep, &Permutation::standard_cycle(k))
        };
        assign.insert(v, Polynomial::constant(q(value)));
    }
    p.substitute(&assign).as_constant().unwrap()
}

fn perms(m: usize) -> Vec<Permutation> {
    fn go(prefix: &mut Vec<usize>, m: usize, out: &mut Vec<Permutation>) {
        if prefix.len() == m {
            out.push(Permutation::new(prefix).unwrap());
            return;
        }
        for v in 1..=m {
            if !prefix.contains(&v) {
                prefix.push(v);
                go(prefix, m, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), m, &mut out);
    out
}

fn check(rep: &Rep, p: &Polynomial, s: &Permutation) {
    assert_eq!(
        specialize(rep, p),
        Rational::from_integer(scalar(rep, s).into()),
        "{} at {s}",
        rep.label
    );
}

fn gl_reps() -> Vec<Rep> {
    vec![gl_sym(2, 1), gl_sym(2, 3), gl_sym(3, 1), gl_sym(3, 2)]
}

fn so_reps() -> Vec<Rep> {
    vec![so_vector(3), so_vector(4), so_vector(5), so_wedge2(3), so_wedge2(5)]
}

#[test]
fn gl_all_small_permutations() {
    let reps = gl_reps();
    for m in 1..=5 {
        for s in perms(m) {
            let p = eval_wgl::<Rational>(&s);
            for rep in &reps {
                check(rep, &p, &s);
            }
        }
    }
}

#[test]
fn so_all_small_permutations() {
    let reps = so_reps();
    for m in 1..=5 {
        for s in perms(m) {
            let p = eval_wso::<Rational>(&s);
            for rep in reps.iter().filter(|r| m <= 4 || r.n <= 4) {
                check(rep, &p, &s);
            }
        }
    }
}

#[test]
fn six_chord_diagrams() {
    let words = ["(1,3)(2,5)(4,6)", "(1,4)(2,5)(3,6)", "(1,4)(2,6)(3,5)", "(1,2)(3,5)(4,6)"];
    for w in words {
        let s = w.parse::<ChordDiagram>().unwrap().to_permutation();
        let (g, o) = (eval_wgl::<Rational>(&s), eval_wso::<Rational>(&s));
        for rep in &gl_reps()[..3] {
            check(rep, &g, &s);
        }
        for rep in &so_reps()[..4] {
            check(rep, &o, &s);
        }
    }
}

#[test]
fn triple_crossing_values() {
    let s = "(1,4)(2,5)(3,6)".parse::<ChordDiagram>().unwrap().to_permutation();
    let poly = |t: &str| t.parse::<Polynomial>().unwrap();
    assert_eq!(
        eval_wgl::<Rational>(&s),
        poly("3*C1^2*C2 - 2*C0*C1^2 + C2^3 - 3*C0*C2^2 + 2*C0^2*C2")
    );
    assert_eq!(
        eval_wso::<Rational>(&s),
        poly("C2^3 - 6*C0*C2^2 + 8*C0^2*C2 + 12*C2^2 - 32*C0*C2 + 32*C2")
    );
    // the chain diagram's values do not fit the triple crossing
    let chain_gl = poly("C2^3 - 2*C0*C2^2 + C0^2*C2 + 2*C1^2*C2 - C0*C1^2");
    assert!(gl_reps()
        .iter()
        .any(|r| specialize(r, &chain_gl) != Rational::from_integer(scalar(r, &s).into())));
}
