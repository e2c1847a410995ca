//! Built-in small loops and groups.

use crate::bsgs::PermGroup;
use crate::group::FiniteGroup;
use crate::loops::CayleyLoop;
use crate::perm::Perm;

/// A named group table.
#[derive(Clone, Debug)]
pub struct NamedGroup {
    pub name: String,
    pub group: FiniteGroup,
}

fn named(name: &str, group: FiniteGroup) -> NamedGroup {
    NamedGroup {
        name: name.to_string(),
        group,
    }
}

pub fn symmetric3_group() -> FiniteGroup {
    let gens = [
        Perm::from_images(vec![1, 2, 0]).unwrap(),
        Perm::from_images(vec![1, 0, 2]).unwrap(),
    ];
    PermGroup::new(3, &gens).enumerate(6).unwrap()
}

/// S3 viewed as a loop.
pub fn symmetric3() -> CayleyLoop {
    group_loop(&symmetric3_group())
}

/// The loop underlying a group table.
pub fn group_loop(g: &FiniteGroup) -> CayleyLoop {
    CayleyLoop::validate(&g.rows()).expect("group tables are loops")
}

/// `C2^k` with XOR as product.
pub fn elementary_abelian_2(k: u32) -> CayleyLoop {
    CayleyLoop::from_fn(1 << k, |a, b| a ^ b).unwrap()
}

/// Direct product of cyclic groups.
pub fn abelian(factors: &[usize]) -> FiniteGroup {
    factors.iter().fold(FiniteGroup::cyclic(1), |acc, &n| {
        acc.direct_product(&FiniteGroup::cyclic(n))
    })
}

/// `C_n : C_k` with the generator acting as multiplication by `r`.
pub fn metacyclic(n: usize, k: usize, r: usize) -> FiniteGroup {
    let phi: Vec<usize> = (0..n).map(|x| x * r % n).collect();
    FiniteGroup::semidirect_cyclic(&FiniteGroup::cyclic(n), &phi, k)
}

/// `(C_p x C_p) : C_k` with the generator acting by an integer matrix on
/// `(a, b)`, stored as `a * p + b`.
fn matrix_extension(p: usize, m: [[usize; 2]; 2], k: usize) -> FiniteGroup {
    let n = abelian(&[p, p]);
    let phi: Vec<usize> = (0..p * p)
        .map(|x| {
            let (a, b) = (x / p, x % p);
            let a2 = (m[0][0] * a + m[0][1] * b) % p;
            let b2 = (m[1][0] * a + m[1][1] * b) % p;
            a2 * p + b2
        })
        .collect();
    FiniteGroup::semidirect_cyclic(&n, &phi, k)
}

/// Extraspecial group of order 27 and exponent 3.
pub fn heisenberg27() -> FiniteGroup {
    matrix_extension(3, [[1, 0], [1, 1]], 3)
}

/// `C3 wr C3`, the base group `C3^3` permuted cyclically.
pub fn wreath_c3_c3() -> FiniteGroup {
    let n = abelian(&[3, 3, 3]);
    let phi: Vec<usize> = (0..27)
        .map(|x| {
            let (a, b, c) = (x / 9, x / 3 % 3, x % 3);
            c * 9 + a * 3 + b
        })
        .collect();
    FiniteGroup::semidirect_cyclic(&n, &phi, 3)
}

/// Every abelian group of odd order up to `bound`, one per isomorphism type.
pub fn odd_abelian_groups(bound: usize) -> Vec<NamedGroup> {
    let mut out = Vec::new();
    for n in (1..=bound).step_by(2) {
        for factors in abelian_types(n) {
            let name = if factors.is_empty() {
                "C1".to_string()
            } else {
                factors.iter().map(|f| format!("C{f}")).collect::<Vec<_>>().join("x")
            };
            out.push(named(&name, abelian(&factors)));
        }
    }
    out
}

/// Invariant factor decompositions `d1 | d2 | ...` of abelian groups of
/// order `n`, listed with the largest factor first.
fn abelian_types(n: usize) -> Vec<Vec<usize>> {
    fn partitions(k: u32, max: u32) -> Vec<Vec<u32>> {
        if k == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in (1..=k.min(max)).rev() {
            for mut rest in partitions(k - first, first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }
    let mut per_prime: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut m = n;
    let mut p = 2;
    while m > 1 {
        let mut e = 0;
        while m % p == 0 {
            m /= p;
            e += 1;
        }
        if e > 0 {
            per_prime.push(
                partitions(e, e)
                    .into_iter()
                    .map(|part| part.into_iter().map(|x| p.pow(x)).collect())
                    .collect(),
            );
        }
        p += 1;
    }
    let mut acc: Vec<Vec<usize>> = vec![vec![]];
    for choices in per_prime {
        let mut next = Vec::new();
        for a in &acc {
            for c in &choices {
                // combine prime-power parts position-wise into invariant factors
                let len = a.len().max(c.len());
                let f: Vec<usize> = (0..len)
                    .map(|i| a.get(i).copied().unwrap_or(1) * c.get(i).copied().unwrap_or(1))
                    .collect();
                next.push(f);
            }
        }
        acc = next;
    }
    acc
}

/// The built-in nonabelian groups of odd order up to 81.
pub fn odd_nonabelian_groups(bound: usize) -> Vec<NamedGroup> {
    let c3 = FiniteGroup::cyclic(3);
    let all = vec![
        named("C7:C3", metacyclic(7, 3, 2)),
        named("Heis27", heisenberg27()),
        named("C9:C3", metacyclic(9, 3, 4)),
        named("C13:C3", metacyclic(13, 3, 3)),
        named("C11:C5", metacyclic(11, 5, 3)),
        named("C19:C3", metacyclic(19, 3, 7)),
        named("C7:C9", metacyclic(7, 9, 2)),
        named("C3x(C7:C3)", c3.direct_product(&metacyclic(7, 3, 2))),
        named("(C5xC5):C3", matrix_extension(5, [[0, 4], [1, 4]], 3)),
        named("C9:C9", metacyclic(9, 9, 4)),
        named("Heis27xC3", heisenberg27().direct_product(&c3)),
        named("(C9:C3)xC3", metacyclic(9, 3, 4).direct_product(&c3)),
        named("C27:C3", metacyclic(27, 3, 10)),
        named("C3wrC3", wreath_c3_c3()),
    ];
    all.into_iter().filter(|g| g.group.order() <= bound).collect()
}

/// Abelian groups first, then the nonabelian ones, each block by order.
pub fn odd_groups(bound: usize) -> Vec<NamedGroup> {
    let mut all = odd_abelian_groups(bound);
    all.extend(odd_nonabelian_groups(bound));
    all.sort_by_key(|g| g.group.order());
    all
}
