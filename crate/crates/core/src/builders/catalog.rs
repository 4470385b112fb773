//! A small catalog of Lie algebras and representations.

use crate::error::Error;
use crate::exactla::{int, Matrix, Tensor};
use crate::lie::{LieAlgebra, Representation};

fn from_brackets(dim: usize, brackets: &[(usize, usize, &[(usize, i64)])]) -> LieAlgebra {
    let mut sc = Tensor::zeros(&[dim, dim, dim]);
    for &(i, j, terms) in brackets {
        for &(k, c) in terms {
            sc.set(&[i, j, k], int(c));
            sc.set(&[j, i, k], int(-c));
        }
    }
    LieAlgebra::new(sc).expect("catalog entries satisfy Jacobi")
}

pub fn abelian(n: usize) -> LieAlgebra {
    LieAlgebra::abelian(n)
}

/// `[e1, e2] = e3` and cyclic.
pub fn so3() -> LieAlgebra {
    from_brackets(3, &[(0, 1, &[(2, 1)]), (1, 2, &[(0, 1)]), (2, 0, &[(1, 1)])])
}

/// Basis `(h, e, f)`: `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h`.
pub fn sl2() -> LieAlgebra {
    from_brackets(3, &[(0, 1, &[(1, 2)]), (0, 2, &[(2, -2)]), (1, 2, &[(0, 1)])])
}

/// `[x, y] = z`, `z` central.
pub fn heisenberg3() -> LieAlgebra {
    from_brackets(3, &[(0, 1, &[(2, 1)])])
}

/// The non-abelian 2-dimensional algebra `[x, y] = y`.
pub fn nonabelian2() -> LieAlgebra {
    from_brackets(2, &[(0, 1, &[(1, 1)])])
}

/// Looks up `so3`, `sl2`, `heisenberg3`, `nonabelian2` or `abelian:N`.
pub fn lie_by_name(name: &str) -> Result<LieAlgebra, Error> {
    match name {
        "so3" => Ok(so3()),
        "sl2" => Ok(sl2()),
        "heisenberg3" => Ok(heisenberg3()),
        "nonabelian2" => Ok(nonabelian2()),
        _ => {
            let n = name
                .strip_prefix("abelian:")
                .and_then(|n| n.parse::<usize>().ok())
                .ok_or_else(|| Error::Parse(format!("unknown Lie algebra '{name}'")))?;
            Ok(abelian(n))
        }
    }
}

/// Parses `trivial`, `trivial:N`, `adjoint`, and `+`-separated direct sums
/// such as `adjoint+trivial:1`.
pub fn representation_by_name(g: &LieAlgebra, name: &str) -> Result<Representation, Error> {
    let mut parts = name.split('+').map(str::trim);
    let first = parts.next().unwrap_or_default();
    let mut rep = single_representation(g, first)?;
    for p in parts {
        rep = rep.direct_sum(&single_representation(g, p)?)?;
    }
    Ok(rep)
}

fn single_representation(g: &LieAlgebra, name: &str) -> Result<Representation, Error> {
    match name {
        "adjoint" => Ok(Representation::adjoint(g.clone())),
        "trivial" => Ok(Representation::trivial(g.clone(), 1)),
        _ => {
            let n = name
                .strip_prefix("trivial:")
                .and_then(|n| n.parse::<usize>().ok())
                .ok_or_else(|| Error::Parse(format!("unknown representation '{name}'")))?;
            Ok(Representation::trivial(g.clone(), n))
        }
    }
}

/// `K(x, y) = tr(ad x · ad y)`.
pub fn killing_form(g: &LieAlgebra) -> Matrix {
    let n = g.dim();
    let ads: Vec<Matrix> = (0..n).map(|i| g.ad(i)).collect();
    let mut k = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let t = ads[i].mul(&ads[j]).trace();
            k[(i, j)] = t.clone();
            k[(j, i)] = t;
        }
    }
    k
}

/// Named `(g, ρ)` pairs used by the random generator and the test suites.
pub fn catalog_pairs() -> Vec<(&'static str, Representation)> {
    let mut out = vec![
        ("abelian:0/trivial:0", Representation::trivial(abelian(0), 0)),
        ("abelian:1/trivial:1", Representation::trivial(abelian(1), 1)),
        ("abelian:2/trivial:1", Representation::trivial(abelian(2), 1)),
        ("abelian:2/trivial:2", Representation::trivial(abelian(2), 2)),
        ("abelian:3/trivial:1", Representation::trivial(abelian(3), 1)),
        ("abelian:3/trivial:2", Representation::trivial(abelian(3), 2)),
        ("abelian:4/trivial:1", Representation::trivial(abelian(4), 1)),
        ("nonabelian2/trivial:1", Representation::trivial(nonabelian2(), 1)),
        ("nonabelian2/adjoint", Representation::adjoint(nonabelian2())),
        ("heisenberg3/trivial:1", Representation::trivial(heisenberg3(), 1)),
        ("heisenberg3/adjoint", Representation::adjoint(heisenberg3())),
        ("so3/trivial:0", Representation::trivial(so3(), 0)),
        ("so3/trivial:1", Representation::trivial(so3(), 1)),
        ("so3/adjoint", Representation::adjoint(so3())),
        ("sl2/trivial:1", Representation::trivial(sl2(), 1)),
        ("sl2/adjoint", Representation::adjoint(sl2())),
    ];
    let so3_sum = Representation::adjoint(so3())
        .direct_sum(&Representation::trivial(so3(), 1))
        .expect("same algebra");
    out.push(("so3/adjoint+trivial:1", so3_sum));
    let heis_sum = Representation::adjoint(heisenberg3())
        .direct_sum(&Representation::trivial(heisenberg3(), 1))
        .expect("same algebra");
    out.push(("heisenberg3/adjoint+trivial:1", heis_sum));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{frac, Rational};

    #[test]
    fn catalog_entries_are_valid() {
        for (name, rep) in catalog_pairs() {
            rep.algebra().check().unwrap_or_else(|e| panic!("{name}: {e}"));
            rep.check().unwrap_or_else(|e| panic!("{name}: {e}"));
        }
    }

    #[test]
    fn killing_form_values() {
        assert!(killing_form(&abelian(3)).is_zero());
        assert_eq!(killing_form(&so3()), Matrix::scalar(3, &int(-2)));
        let k = killing_form(&sl2());
        assert_eq!(k, Matrix::from_i64(&[&[8, 0, 0], &[0, 0, 4], &[0, 4, 0]]));
        assert_eq!(k.rank(), 3);
        assert_eq!(killing_form(&so3()).rank(), 3);
    }

    #[test]
    fn killing_form_is_invariant() {
        for g in [so3(), sl2(), heisenberg3(), nonabelian2()] {
            let k = killing_form(&g);
            let n = g.dim();
            let e = |i: usize| crate::exactla::unit_vector(n, i);
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        let xy = g.bracket(&e(x), &e(y));
                        let xz = g.bracket(&e(x), &e(z));
                        let a: Rational = (0..n).map(|m| &xy[m] * &k[(m, z)]).sum();
                        let b: Rational = (0..n).map(|m| &k[(y, m)] * &xz[m]).sum();
                        assert_eq!(a + b, frac(0, 1));
                    }
                }
            }
        }
    }

    #[test]
    fn names_resolve() {
        assert_eq!(lie_by_name("abelian:2").unwrap().dim(), 2);
        assert!(lie_by_name("e8").is_err());
        let r = representation_by_name(&so3(), "adjoint+trivial:2").unwrap();
        assert_eq!(r.dim_v(), 5);
        assert!(representation_by_name(&so3(), "spinor").is_err());
    }
}
