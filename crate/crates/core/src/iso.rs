//! Isomorphism testing and canonical forms for loops.
//!
//! All relabelings fix the identity. A canonical labeling starts from an
//! ordered generating tuple: the identity gets label 0, the generators the
//! next labels, and every further element the next free label in the order
//! its products with earlier elements appear. The tuples tried are the
//! greedy ones, where each generator is chosen outside the span of the
//! previous ones with the least element invariant available. Both choices
//! commute with isomorphisms, so the least resulting table is canonical.

use crate::loops::{CayleyLoop, LoopHom};

const NONE: usize = usize::MAX;

/// Cycle types of both translations, the length of the cycle of `R(e)`
/// through the identity and the size of the centralizer of `e`.
pub(crate) fn element_invariants(x: &CayleyLoop) -> Vec<(usize, usize, Vec<usize>, Vec<usize>)> {
    let n = x.order();
    (0..n)
        .map(|e| {
            let mut len = 1;
            let mut c = e;
            while c != 0 {
                c = x.mul(c, e);
                len += 1;
            }
            let commuting = (0..n).filter(|&y| x.mul(e, y) == x.mul(y, e)).count();
            (
                len,
                commuting,
                x.right_translation(e).cycle_type(),
                x.left_translation(e).cycle_type(),
            )
        })
        .collect()
}

struct Canon<'a> {
    x: &'a CayleyLoop,
    n: usize,
    // dense rank of each element's invariant
    rank: Vec<usize>,
    tuple: Vec<usize>,
    best_table: Option<Vec<u32>>,
    best_sigma: Vec<usize>,
    label: Vec<usize>,
    elem: Vec<usize>,
    table: Vec<u32>,
}

impl Canon<'_> {
    /// Closure of `set` under products, as a membership mask.
    fn span(&self, set: &[usize]) -> Vec<bool> {
        let mut mask = vec![false; self.n];
        let mut members = Vec::new();
        for &e in set {
            if !mask[e] {
                mask[e] = true;
                members.push(e);
            }
        }
        let mut i = 0;
        while i < members.len() {
            for j in 0..=i {
                for (a, b) in [(members[i], members[j]), (members[j], members[i])] {
                    let p = self.x.mul(a, b);
                    if !mask[p] {
                        mask[p] = true;
                        members.push(p);
                    }
                }
            }
            i += 1;
        }
        mask
    }

    fn search(&mut self) {
        let mut with_identity = vec![0];
        with_identity.extend_from_slice(&self.tuple);
        let mask = self.span(&with_identity);
        let outside: Vec<usize> = (1..self.n).filter(|&e| !mask[e]).collect();
        if outside.is_empty() {
            self.finish();
            return;
        }
        let least = outside.iter().map(|&e| self.rank[e]).min().unwrap();
        for e in outside {
            if self.rank[e] == least {
                self.tuple.push(e);
                self.search();
                self.tuple.pop();
            }
        }
    }

    fn assign(&mut self, e: usize, next: &mut usize) {
        if self.label[e] == NONE {
            self.label[e] = *next;
            self.elem[*next] = e;
            *next += 1;
        }
    }

    /// Labels the loop from the current tuple and keeps the table if it is
    /// the least so far, comparing row by row.
    fn finish(&mut self) {
        let n = self.n;
        self.label.iter_mut().for_each(|l| *l = NONE);
        let mut next = 0;
        self.assign(0, &mut next);
        for k in 0..self.tuple.len() {
            let g = self.tuple[k];
            self.assign(g, &mut next);
        }
        let mut i = 0;
        while next < n {
            for j in 0..=i {
                let (a, b) = (self.elem[i], self.elem[j]);
                self.assign(self.x.mul(a, b), &mut next);
                self.assign(self.x.mul(b, a), &mut next);
            }
            i += 1;
        }
        let mut tight = self.best_table.is_some();
        for r in 0..n {
            let a = self.elem[r];
            for c in 0..n {
                self.table[r * n + c] = self.label[self.x.mul(a, self.elem[c])] as u32;
            }
            if tight {
                let best = self.best_table.as_ref().unwrap();
                match self.table[r * n..(r + 1) * n].cmp(&best[r * n..(r + 1) * n]) {
                    std::cmp::Ordering::Greater => return,
                    std::cmp::Ordering::Less => tight = false,
                    std::cmp::Ordering::Equal => {}
                }
            }
        }
        if !tight {
            self.best_table = Some(self.table.clone());
            self.best_sigma = self.label.clone();
        }
    }
}

/// Canonical form together with the relabeling `sigma` (element to label)
/// that produces it.
pub fn canonical_labeling(x: &CayleyLoop) -> (CayleyLoop, LoopHom) {
    let n = x.order();
    if n <= 2 {
        return (x.clone(), LoopHom::identity(n));
    }
    let inv = element_invariants(x);
    let mut sorted = inv.clone();
    sorted.sort();
    sorted.dedup();
    let rank = inv.iter().map(|v| sorted.binary_search(v).unwrap()).collect();
    let mut c = Canon {
        x,
        n,
        rank,
        tuple: Vec::new(),
        best_table: None,
        best_sigma: Vec::new(),
        label: vec![NONE; n],
        elem: vec![NONE; n],
        table: vec![0; n * n],
    };
    c.search();
    let table = c.best_table.take().expect("at least one labeling");
    (CayleyLoop::from_flat_unchecked(n, table), LoopHom { map: c.best_sigma })
}

pub fn canonical_form(x: &CayleyLoop) -> CayleyLoop {
    canonical_labeling(x).0
}

/// Per-element invariant used to prune the isomorphism search: element
/// order when the loop is Bol, then the cycle types of both translations.
fn signatures(x: &CayleyLoop) -> Vec<(usize, Vec<usize>, Vec<usize>)> {
    let orders = x.element_orders().ok();
    (0..x.order())
        .map(|e| {
            (
                orders.as_ref().map_or(0, |o| o[e]),
                x.right_translation(e).cycle_type(),
                x.left_translation(e).cycle_type(),
            )
        })
        .collect()
}

/// Searches for an isomorphism `x1 -> x2` by backtracking over images of a
/// generating sequence.
pub fn loops_isomorphic(x1: &CayleyLoop, x2: &CayleyLoop) -> Option<LoopHom> {
    let n = x1.order();
    if n != x2.order() {
        return None;
    }
    let s1 = signatures(x1);
    let s2 = signatures(x2);
    let mut m1 = s1.clone();
    let mut m2 = s2.clone();
    m1.sort();
    m2.sort();
    if m1 != m2 {
        return None;
    }

    // generators of x1, rarest signature first
    let class_size = |s: &(usize, Vec<usize>, Vec<usize>)| m1.iter().filter(|t| *t == s).count();
    let mut gens = Vec::new();
    let mut span = x1.trivial_subloop();
    while span.order() < n {
        let g = (1..n)
            .filter(|&e| !span.contains(e))
            .min_by_key(|&e| (class_size(&s1[e]), e))
            .unwrap();
        gens.push(g);
        let mut gs = span.members().to_vec();
        gs.push(g);
        span = x1.subloop_generated(&gs);
    }

    let mut map = vec![NONE; n];
    let mut used = vec![false; n];
    map[0] = 0;
    used[0] = true;
    let mut dom = vec![0usize];
    if extend(x1, x2, &s1, &s2, &gens, 0, &mut map, &mut used, &mut dom) {
        Some(LoopHom { map })
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn extend(
    x1: &CayleyLoop,
    x2: &CayleyLoop,
    s1: &[(usize, Vec<usize>, Vec<usize>)],
    s2: &[(usize, Vec<usize>, Vec<usize>)],
    gens: &[usize],
    level: usize,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
    dom: &mut Vec<usize>,
) -> bool {
    if level == gens.len() {
        return dom.len() == x1.order();
    }
    let g = gens[level];
    if map[g] != NONE {
        return extend(x1, x2, s1, s2, gens, level + 1, map, used, dom);
    }
    for cand in 1..x2.order() {
        if used[cand] || s2[cand] != s1[g] {
            continue;
        }
        let saved_len = dom.len();
        let saved_map = map.clone();
        let saved_used = used.clone();
        map[g] = cand;
        used[cand] = true;
        dom.push(g);
        if close(x1, x2, s1, s2, map, used, dom) && extend(x1, x2, s1, s2, gens, level + 1, map, used, dom) {
            return true;
        }
        dom.truncate(saved_len);
        *map = saved_map;
        *used = saved_used;
    }
    false
}

/// Closes the domain under products, propagating and checking images.
fn close(
    x1: &CayleyLoop,
    x2: &CayleyLoop,
    s1: &[(usize, Vec<usize>, Vec<usize>)],
    s2: &[(usize, Vec<usize>, Vec<usize>)],
    map: &mut [usize],
    used: &mut [bool],
    dom: &mut Vec<usize>,
) -> bool {
    let mut i = 0;
    while i < dom.len() {
        let a = dom[i];
        for j in 0..=i {
            let b = dom[j];
            for (p, q) in [(a, b), (b, a)] {
                let prod = x1.mul(p, q);
                let img = x2.mul(map[p], map[q]);
                if map[prod] == NONE {
                    if used[img] || s1[prod] != s2[img] {
                        return false;
                    }
                    map[prod] = img;
                    used[img] = true;
                    dom.push(prod);
                } else if map[prod] != img {
                    return false;
                }
            }
        }
        i += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn c4_and_klein_differ() {
        let c4 = CayleyLoop::cyclic(4);
        let v4 = catalog::elementary_abelian_2(2);
        assert!(loops_isomorphic(&c4, &v4).is_none());
        assert_ne!(canonical_form(&c4), canonical_form(&v4));
    }

    #[test]
    fn self_isomorphism() {
        let s3 = catalog::symmetric3();
        let h = loops_isomorphic(&s3, &s3).unwrap();
        assert!(h.is_isomorphism(&s3, &s3));
    }

    #[test]
    fn canonical_labeling_is_an_isomorphism() {
        let s3 = catalog::symmetric3();
        let (c, sigma) = canonical_labeling(&s3);
        assert!(sigma.is_isomorphism(&s3, &c));
        assert_eq!(sigma.map[0], 0);
    }

    #[test]
    fn relabeled_copies_share_canonical_form() {
        let x = CayleyLoop::cyclic(6).direct_product(&CayleyLoop::cyclic(2));
        let perm = [0usize, 5, 3, 7, 1, 11, 9, 2, 10, 4, 8, 6];
        let y = relabel(&x, &perm);
        assert_eq!(canonical_form(&x), canonical_form(&y));
        let h = loops_isomorphic(&x, &y).unwrap();
        assert!(h.is_isomorphism(&x, &y));
    }

    fn relabel(x: &CayleyLoop, p: &[usize]) -> CayleyLoop {
        let n = x.order();
        let mut rows = vec![vec![0; n]; n];
        for a in 0..n {
            for b in 0..n {
                rows[p[a]][p[b]] = p[x.mul(a, b)];
            }
        }
        CayleyLoop::validate(&rows).unwrap()
    }
}
