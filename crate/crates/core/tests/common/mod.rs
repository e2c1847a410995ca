//! Independent oracles shared by the integration tests. Nothing here uses
//! the library's search, pruning or canonical-form code.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use loopforge::{CayleyLoop, FiniteGroup, Perm};

/// All permutations of `1..n` as images of `0..n` fixing 0.
pub fn relabelings(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, left: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left.is_empty() {
            out.push(cur.clone());
            return;
        }
        for i in 0..left.len() {
            let v = left.remove(i);
            cur.push(v);
            rec(cur, left, out);
            cur.pop();
            left.insert(i, v);
        }
    }
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    rec(&mut vec![0], &mut (1..n).collect(), &mut out);
    out
}

pub fn relabel(x: &CayleyLoop, p: &[usize]) -> CayleyLoop {
    let n = x.order();
    let mut rows = vec![vec![0; n]; n];
    for a in 0..n {
        for b in 0..n {
            rows[p[a]][p[b]] = p[x.mul(a, b)];
        }
    }
    CayleyLoop::validate(&rows).unwrap()
}

/// Isomorphism by trying every relabeling.
pub fn brute_isomorphic(a: &CayleyLoop, b: &CayleyLoop, perms: &[Vec<usize>]) -> bool {
    let n = a.order();
    n == b.order()
        && perms
            .iter()
            .any(|p| (0..n).all(|i| (0..n).all(|j| p[a.mul(i, j)] == b.mul(p[i], p[j]))))
}

/// Every reduced Latin square of order `n` (first row and column in
/// natural order), with no pruning beyond the Latin condition.
pub fn reduced_latin_squares(n: usize) -> Vec<CayleyLoop> {
    fn rec(t: &mut Vec<Vec<usize>>, n: usize, cell: usize, out: &mut Vec<CayleyLoop>) {
        if cell == (n - 1) * (n - 1) {
            out.push(CayleyLoop::validate(t).unwrap());
            return;
        }
        let (r, c) = (1 + cell / (n - 1), 1 + cell % (n - 1));
        for v in 0..n {
            if (0..c).any(|j| t[r][j] == v) || (0..r).any(|i| t[i][c] == v) {
                continue;
            }
            t[r][c] = v;
            rec(t, n, cell + 1, out);
        }
        t[r][c] = usize::MAX;
    }
    let mut t = vec![vec![usize::MAX; n]; n];
    for i in 0..n {
        t[0][i] = i;
        t[i][0] = i;
    }
    let mut out = Vec::new();
    if n == 1 {
        out.push(CayleyLoop::validate(&t).unwrap());
    } else {
        rec(&mut t, n, 0, &mut out);
    }
    out
}

/// Classes of reduced Latin squares satisfying `pred`, one representative
/// each, by pairwise brute-force isomorphism.
pub fn naive_classes(n: usize, pred: impl Fn(&CayleyLoop) -> bool) -> Vec<CayleyLoop> {
    let perms = relabelings(n);
    let mut reps: Vec<CayleyLoop> = Vec::new();
    for x in reduced_latin_squares(n).into_iter().filter(|x| pred(x)) {
        if !reps.iter().any(|r| brute_isomorphic(r, &x, &perms)) {
            reps.push(x);
        }
    }
    reps
}

/// Group generated by `gens`, by breadth-first closure.
pub fn bfs_closure(degree: usize, gens: &[Perm]) -> HashSet<Vec<u32>> {
    let id = Perm::identity(degree);
    let mut seen = HashSet::new();
    seen.insert(id.images().to_vec());
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        for s in gens {
            let q = p.then(s);
            if seen.insert(q.images().to_vec()) {
                queue.push_back(q);
            }
        }
    }
    seen
}

/// Conjugacy classes computed from the table.
pub fn classes(g: &FiniteGroup) -> Vec<Vec<usize>> {
    let m = g.order();
    let mut seen = vec![false; m];
    let mut out = Vec::new();
    for x in 0..m {
        if seen[x] {
            continue;
        }
        let cls: BTreeSet<usize> = (0..m).map(|h| g.mul(g.mul(g.inv(h), x), h)).collect();
        for &c in &cls {
            seen[c] = true;
        }
        out.push(cls.into_iter().collect());
    }
    out
}

/// Subgroup generated by `set`, by repeated multiplication.
pub fn closure(g: &FiniteGroup, set: &[usize]) -> Vec<usize> {
    let mut inside = vec![false; g.order()];
    let mut members = vec![0];
    inside[0] = true;
    for &s in set {
        if !inside[s] {
            inside[s] = true;
            members.push(s);
        }
    }
    let mut i = 0;
    while i < members.len() {
        for j in 0..=i {
            for (a, b) in [(members[i], members[j]), (members[j], members[i])] {
                let c = g.mul(a, b);
                if !inside[c] {
                    inside[c] = true;
                    members.push(c);
                }
            }
        }
        i += 1;
    }
    members.sort_unstable();
    members
}

/// Every normal subgroup. Each one is reached from the trivial subgroup by
/// adjoining conjugacy classes one at a time and closing.
pub fn normal_subgroups_by_scan(g: &FiniteGroup) -> Vec<Vec<usize>> {
    let cls = classes(g);
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut stack = vec![vec![0usize]];
    found.insert(vec![0]);
    while let Some(n) = stack.pop() {
        for c in &cls {
            if n.binary_search(&c[0]).is_ok() {
                continue;
            }
            let mut gens = n.clone();
            gens.extend_from_slice(c);
            let m = closure(g, &gens);
            if found.insert(m.clone()) {
                stack.push(m);
            }
        }
    }
    found.into_iter().collect()
}

/// Largest member of `subs` satisfying `pred`, checked to contain every
/// other such member.
pub fn largest_with(subs: &[Vec<usize>], pred: impl Fn(&[usize]) -> bool) -> Vec<usize> {
    let good: Vec<&Vec<usize>> = subs.iter().filter(|s| pred(s)).collect();
    let top = good.iter().max_by_key(|s| s.len()).expect("trivial subgroup qualifies");
    assert!(good.iter().all(|s| s.iter().all(|x| top.binary_search(x).is_ok())));
    top.to_vec()
}

/// Every subset containing 0 that is closed under products and satisfies
/// `a(Yb) = Y(ab) = (aY)b` for all `a, b`.
pub fn normal_subloops_by_scan(x: &CayleyLoop) -> Vec<Vec<usize>> {
    let n = x.order();
    assert!(n <= 16);
    let mut out = Vec::new();
    for mask in 0u32..(1 << (n - 1)) {
        let set: Vec<usize> = std::iter::once(0)
            .chain((1..n).filter(|i| mask >> (i - 1) & 1 == 1))
            .collect();
        if n % set.len() != 0 {
            continue;
        }
        let mut inside = vec![false; n];
        for &s in &set {
            inside[s] = true;
        }
        if !set.iter().all(|&a| set.iter().all(|&b| inside[x.mul(a, b)])) {
            continue;
        }
        let image = |f: &dyn Fn(usize) -> usize| -> BTreeSet<usize> { set.iter().map(|&y| f(y)).collect() };
        let normal = (0..n).all(|a| {
            (0..n).all(|b| {
                let ab = x.mul(a, b);
                let left = image(&|y| x.mul(a, x.mul(y, b)));
                left == image(&|y| x.mul(y, ab)) && left == image(&|y| x.mul(x.mul(a, y), b))
            })
        });
        if normal {
            out.push(set);
        }
    }
    out
}

pub fn is_power_of_prime_set(m: usize, pi: &[usize]) -> bool {
    let mut m = m;
    for &p in pi {
        while m % p == 0 {
            m /= p;
        }
    }
    m == 1
}

pub fn corpus_root() -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/corpus")
}

/// Every frozen loop of one class, by increasing order.
pub fn frozen(class: &str) -> Vec<CayleyLoop> {
    let dir = corpus_root().join(class);
    loopforge::corpus::corpus_orders(&dir)
        .unwrap()
        .into_iter()
        .flat_map(|n| loopforge::corpus::corpus_read(&dir, n).unwrap())
        .collect()
}
