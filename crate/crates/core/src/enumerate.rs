//! Exhaustive generation of small loops up to isomorphism.
//!
//! The reference mode completes reduced Latin squares cell by cell in
//! row-major order, trying values lexicographically and rejecting a
//! partial table once some Bol instance with all operands determined
//! fails. The fast mode fills whole columns `R(x)` and closes the set of
//! known columns under `R(x)R(y)R(x) = R((x*y)*x)`. For the Bol classes
//! element 1 is taken to have the largest order `m`, so `R(1)` can be put
//! in the form `(0 1 .. m-1)(m .. 2m-1)...`. Values are tried once per
//! orbit of the remaining relabelings that fix the partial table.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rayon::prelude::*;

use crate::bruck::{glauberman_folder, GlaubermanFolder, TauAut};
use crate::bsgs::PermGroup;
use crate::catalog;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::iso::{canonical_form, element_invariants, loops_isomorphic};
use crate::loops::CayleyLoop;
use crate::perm::Perm;
use crate::structure::right_inner_maps_automorphic;

const NONE: u8 = u8::MAX;

/// Largest order accepted by the table representation.
pub const MAX_ORDER: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Predicate {
    Loop,
    Bol,
    Bruck,
    BolAr,
}

impl Predicate {
    pub fn name(self) -> &'static str {
        match self {
            Predicate::Loop => "loop",
            Predicate::Bol => "bol",
            Predicate::Bruck => "bruck",
            Predicate::BolAr => "bol+ar",
        }
    }

    pub fn holds(self, x: &CayleyLoop) -> bool {
        match self {
            Predicate::Loop => true,
            Predicate::Bol => x.is_bol(),
            Predicate::Bruck => x.is_bruck(),
            Predicate::BolAr => x.is_bol() && right_inner_maps_automorphic(x),
        }
    }

    /// 16 for Bruck loops, 8 otherwise.
    pub fn default_bound(self) -> usize {
        match self {
            Predicate::Bruck => 16,
            _ => 8,
        }
    }

    fn is_bol_family(self) -> bool {
        self != Predicate::Loop
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Predicate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "loop" => Ok(Predicate::Loop),
            "bol" => Ok(Predicate::Bol),
            "bruck" => Ok(Predicate::Bruck),
            "bol+ar" | "bol-ar" | "ar" => Ok(Predicate::BolAr),
            _ => Err(Error::Parse {
                line: 0,
                msg: format!("unknown class {s:?}"),
            }),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Reference,
    Fast,
    /// Fast search split after `depth` branching cells.
    Parallel {
        depth: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dedup {
    Canonical,
    Pairwise,
}

#[derive(Clone, Debug)]
pub struct EnumerationTask {
    pub order: usize,
    pub predicate: Predicate,
    pub mode: Mode,
    pub dedup: Dedup,
    /// Overrides [`Predicate::default_bound`].
    pub bound: Option<usize>,
}

impl EnumerationTask {
    pub fn new(order: usize, predicate: Predicate) -> Self {
        EnumerationTask {
            order,
            predicate,
            mode: Mode::Parallel { depth: 3 },
            dedup: Dedup::Canonical,
            bound: None,
        }
    }

    pub fn with_mode(mut self, mode: Mode) -> Self {
        self.mode = mode;
        self
    }

    pub fn with_dedup(mut self, dedup: Dedup) -> Self {
        self.dedup = dedup;
        self
    }

    pub fn with_bound(mut self, bound: usize) -> Self {
        self.bound = Some(bound);
        self
    }
}

/// One loop per isomorphism class satisfying the predicate, as canonical
/// forms in increasing order.
pub fn enumerate_loops(task: &EnumerationTask) -> Result<Vec<CayleyLoop>> {
    let n = task.order;
    let bound = task.bound.unwrap_or(task.predicate.default_bound()).min(MAX_ORDER);
    if n > bound {
        return Err(Error::BoundExceeded { order: n, bound });
    }
    if n == 0 {
        return Err(Error::Shape("order must be positive".into()));
    }
    let tables = match task.mode {
        Mode::Reference => reference_search(n, task.predicate),
        Mode::Fast => fast_search(n, task.predicate, None),
        Mode::Parallel { depth } => fast_search(n, task.predicate, Some(depth)),
    };
    let loops = tables
        .into_iter()
        .map(|t| CayleyLoop::from_flat(n, t.into_iter().map(u32::from).collect()))
        .collect::<Result<Vec<_>>>()?;
    let loops: Vec<CayleyLoop> = loops.into_par_iter().filter(|x| task.predicate.holds(x)).collect();
    Ok(match task.dedup {
        Dedup::Canonical => {
            let forms: BTreeSet<CayleyLoop> = loops.par_iter().map(canonical_form).collect();
            forms.into_iter().collect()
        }
        Dedup::Pairwise => {
            let mut reps: Vec<CayleyLoop> = Vec::new();
            for x in loops {
                if !reps.iter().any(|r| loops_isomorphic(r, &x).is_some()) {
                    reps.push(x);
                }
            }
            let mut forms: Vec<CayleyLoop> = reps.iter().map(canonical_form).collect();
            forms.sort();
            forms
        }
    })
}

/// A partially filled table.
#[derive(Clone)]
struct Partial {
    n: usize,
    t: Vec<u8>,
    row_used: Vec<u64>,
    col_used: Vec<u64>,
    // known cells per column
    filled: Vec<u8>,
    // common cycle length of each column, 0 while unknown
    cycle_len: Vec<u8>,
    // cpos[x*n + v]: row z with z*x = v; rpos[z*n + v]: column x with z*x = v
    cpos: Vec<u8>,
    rpos: Vec<u8>,
}

/// Cells waiting to be written: `(row, column, value)`.
type Queue = Vec<(u8, u8, u8)>;

impl Partial {
    fn new(n: usize) -> Self {
        let mut p = Partial {
            n,
            t: vec![NONE; n * n],
            row_used: vec![0; n],
            col_used: vec![0; n],
            filled: vec![0; n],
            cycle_len: vec![0; n],
            cpos: vec![NONE; n * n],
            rpos: vec![NONE; n * n],
        };
        for i in 0..n {
            p.set(i, 0, i);
            if i > 0 {
                p.set(0, i, i);
            }
        }
        p.cycle_len[0] = 1;
        p
    }

    fn get(&self, z: usize, x: usize) -> u8 {
        self.t[z * self.n + x]
    }

    fn set(&mut self, z: usize, x: usize, v: usize) {
        let n = self.n;
        self.t[z * n + x] = v as u8;
        self.cpos[x * n + v] = z as u8;
        self.rpos[z * n + v] = x as u8;
        self.row_used[z] |= 1 << v;
        self.col_used[x] |= 1 << v;
        self.filled[x] += 1;
    }

    fn unset(&mut self, z: usize, x: usize) {
        let n = self.n;
        let v = self.t[z * n + x] as usize;
        self.t[z * n + x] = NONE;
        self.cpos[x * n + v] = NONE;
        self.rpos[z * n + v] = NONE;
        self.row_used[z] &= !(1 << v);
        self.col_used[x] &= !(1 << v);
        self.filled[x] -= 1;
    }

    fn free(&self, z: usize, x: usize, v: usize) -> bool {
        (self.row_used[z] | self.col_used[x]) & (1 << v) == 0
    }

    fn done(&self, x: usize) -> bool {
        self.filled[x] as usize == self.n
    }

    fn first_open(&self) -> Option<usize> {
        (0..self.n).find(|&x| !self.done(x))
    }

    /// An empty row of column `x`, preferring one that extends a known
    /// chain of the column.
    fn next_row(&self, x: usize) -> usize {
        let n = self.n;
        let empty = |r: usize| self.get(r, x) == NONE;
        (1..n)
            .find(|&r| empty(r) && self.cpos[x * n + r] != NONE)
            .or_else(|| (1..n).find(|&r| empty(r)))
            .expect("column has an empty cell")
    }

    fn mul(&self, a: u8, b: u8) -> u8 {
        if a == NONE || b == NONE {
            NONE
        } else {
            self.get(a as usize, b as usize)
        }
    }

    /// Row `z` with `z*x = v`.
    fn row_of(&self, x: u8, v: u8) -> u8 {
        if x == NONE || v == NONE {
            NONE
        } else {
            self.cpos[x as usize * self.n + v as usize]
        }
    }

    /// Column `x` with `z*x = v`.
    fn col_of(&self, z: u8, v: u8) -> u8 {
        if z == NONE || v == NONE {
            NONE
        } else {
            self.rpos[z as usize * self.n + v as usize]
        }
    }

    /// Writes `z*x = v` and everything it forces. False on a contradiction.
    fn assign(&mut self, z: usize, x: usize, v: usize, m: usize, pred: Predicate) -> bool {
        let bol = pred.is_bol_family();
        let bruck = pred == Predicate::Bruck;
        let mut q: Queue = vec![(z as u8, x as u8, v as u8)];
        while let Some((r, c, w)) = q.pop() {
            let (ru, cu, wu) = (r as usize, c as usize, w as usize);
            let cur = self.get(ru, cu);
            if cur != NONE {
                if cur == w {
                    continue;
                }
                return false;
            }
            if !self.free(ru, cu, wu) {
                return false;
            }
            self.set(ru, cu, wu);
            if !bol {
                continue;
            }
            if !self.cycles_ok(ru, cu, m) || !self.propagate_bol(r, c, w, &mut q) {
                return false;
            }
            // inverses are two-sided
            if w == 0 {
                q.push((c, r, 0));
            }
            if bruck {
                if w == 0 {
                    for a in 0..self.n as u8 {
                        for b in 0..self.n as u8 {
                            if self.get(a as usize, b as usize) != NONE {
                                self.propagate_aip(a, b, &mut q);
                            }
                        }
                    }
                } else {
                    self.propagate_aip(r, c, &mut q);
                }
            }
        }
        true
    }

    /// `(a*b)^-1 = a^-1 * b^-1` at a known cell.
    fn propagate_aip(&self, a: u8, b: u8, q: &mut Queue) {
        let (ia, ib) = (self.col_of(a, 0), self.col_of(b, 0));
        if ia == NONE || ib == NONE {
            return;
        }
        let w = self.mul(a, b);
        let iw = self.col_of(w, 0);
        if iw != NONE {
            q.push((ia, ib, iw));
        } else {
            let u = self.mul(ia, ib);
            if u != NONE {
                q.push((w, u, 0));
            }
        }
    }

    /// The Bol instance `((z*x)*y)*x = z*((x*y)*x)`: a contradiction gives
    /// false; when one product is missing and the rest determine it, the
    /// missing cell is queued.
    fn bol_instance(&self, x: u8, y: u8, z: u8, q: &mut Queue) -> bool {
        let a = self.mul(z, x);
        let b = self.mul(a, y);
        let l = self.mul(b, x);
        let c = self.mul(x, y);
        let d = self.mul(c, x);
        let r = self.mul(z, d);
        match (l != NONE, r != NONE) {
            (true, true) => return l == r,
            (true, false) => {
                let d2 = self.col_of(z, l);
                if c == NONE {
                    let c2 = self.row_of(x, d2);
                    if c2 != NONE {
                        q.push((x, y, c2));
                    }
                } else if d == NONE {
                    if d2 != NONE {
                        q.push((c, x, d2));
                    }
                } else {
                    q.push((z, d, l));
                }
            }
            (false, true) => {
                let b2 = self.row_of(x, r);
                if a == NONE {
                    let a2 = self.row_of(y, b2);
                    if a2 != NONE {
                        q.push((z, x, a2));
                    }
                } else if b == NONE {
                    if b2 != NONE {
                        q.push((a, y, b2));
                    }
                } else {
                    q.push((b, x, r));
                }
            }
            (false, false) => {}
        }
        true
    }

    /// Every Bol instance in which the new product `r*c = v` is one of the
    /// six products, located through the known cells.
    fn propagate_bol(&self, r: u8, c: u8, v: u8, q: &mut Queue) -> bool {
        let n = self.n as u8;
        // y as the loop variable where the product is z*x or (z*x)*y
        let as_right = self.col_of(c, r);
        for w in 0..n {
            // z*x
            if !self.bol_instance(c, w, r, q) {
                return false;
            }
            // x*y
            if !self.bol_instance(r, c, w, q) {
                return false;
            }
            // (z*x)*y with x = w
            let mut z = self.row_of(w, r);
            if z == NONE {
                z = self.row_of(self.mul(self.mul(w, c), w), self.mul(v, w));
            }
            if z != NONE && !self.bol_instance(w, c, z, q) {
                return false;
            }
            // ((z*x)*y)*x with y = w
            let mut z = self.row_of(c, self.row_of(w, r));
            if z == NONE {
                z = self.row_of(self.mul(self.mul(c, w), c), v);
            }
            if z != NONE && !self.bol_instance(c, w, z, q) {
                return false;
            }
            // (x*y)*x with z = w
            let y = if as_right != NONE {
                as_right
            } else {
                let b = self.row_of(c, self.mul(w, v));
                self.col_of(self.mul(w, c), b)
            };
            if y != NONE && !self.bol_instance(c, y, w, q) {
                return false;
            }
            // z*((x*y)*x) with x = w
            let mut y = self.col_of(w, self.row_of(w, c));
            if y == NONE {
                y = self.col_of(self.mul(r, w), self.row_of(w, v));
            }
            if y != NONE && !self.bol_instance(w, y, r, q) {
                return false;
            }
        }
        true
    }

    /// After setting cell `(z, x)`: every cycle of column `x` has one
    /// common length, at most `m`.
    fn cycles_ok(&mut self, z: usize, x: usize, m: usize) -> bool {
        let n = self.n;
        let mut start = z;
        loop {
            let prev = self.cpos[x * n + start];
            if prev == NONE || prev as usize == z {
                break;
            }
            start = prev as usize;
        }
        let mut len = 1;
        let mut cur = start;
        loop {
            let nx = self.get(cur, x);
            if nx == NONE {
                let known = self.cycle_len[x] as usize;
                return len <= if known > 0 { known } else { m };
            }
            let nx = nx as usize;
            if nx == start {
                let known = self.cycle_len[x] as usize;
                if len > m || (known != 0 && known != len) {
                    return false;
                }
                self.cycle_len[x] = len as u8;
                return true;
            }
            cur = nx;
            len += 1;
            if len > m {
                return false;
            }
        }
    }
}

/// Symmetries of the partial table as a permutation group on labels, or
/// `None` when trivial.
type Sym = Option<Arc<PermGroup>>;

fn stabilize(g: &Sym, pt: usize) -> Sym {
    let g = g.as_ref()?;
    if g.generators().iter().all(|s| s.apply(pt) == pt) {
        return Some(g.clone());
    }
    let s = g.point_stabilizer(pt);
    (s.order() > 1).then(|| Arc::new(s))
}

/// Least element of each orbit.
fn orbit_minima(g: &Sym, n: usize) -> Vec<bool> {
    let Some(g) = g else { return vec![true; n] };
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for s in g.generators() {
        for a in 0..n {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, s.apply(a)));
            if ra != rb {
                let (lo, hi) = (ra.min(rb), ra.max(rb));
                parent[hi] = lo;
            }
        }
    }
    (0..n).map(|a| find(&mut parent, a) == a).collect()
}

struct Search {
    n: usize,
    m: usize,
    pred: Predicate,
}

#[derive(Clone)]
struct Node {
    p: Partial,
    g: Sym,
    // column being filled and next row; None when between columns
    cur: Option<(usize, usize)>,
    decisions: usize,
}

impl Search {
    /// Every element of order `m` can play the part of 1, so a complete
    /// table is kept only when 1 has the least invariant among them.
    fn leaf_ok(&self, t: &[u8]) -> bool {
        if !self.pred.is_bol_family() || self.n < 3 {
            return true;
        }
        let Ok(x) = CayleyLoop::from_flat(self.n, t.iter().map(|&v| u32::from(v)).collect()) else {
            return false;
        };
        let inv = element_invariants(&x);
        (2..self.n).all(|e| inv[e].0 != self.m || inv[e] >= inv[1])
    }

    fn run(&self, node: Node, split: Option<usize>, prefixes: &mut Vec<Node>, out: &mut Vec<Vec<u8>>) {
        let n = self.n;
        let (x, z, g) = match node.cur {
            Some((x, z)) => (x, z, node.g.clone()),
            None => match node.p.first_open() {
                None => {
                    if self.leaf_ok(&node.p.t) {
                        out.push(node.p.t.clone());
                    }
                    return;
                }
                Some(x) => (x, node.p.next_row(x), stabilize(&node.g, x)),
            },
        };
        let g = stabilize(&g, z);
        let minima = orbit_minima(&g, n);
        let cands: Vec<usize> = (0..n).filter(|&v| minima[v] && node.p.free(z, x, v)).collect();
        let branching = cands.len() > 1;
        for v in cands {
            let mut p = node.p.clone();
            if !p.assign(z, x, v, self.m, self.pred) {
                continue;
            }
            let cur = (!p.done(x)).then(|| {
                let nz = if p.get(v, x) == NONE { v } else { p.next_row(x) };
                (x, nz)
            });
            let child = Node {
                p,
                g: stabilize(&g, v),
                cur,
                decisions: node.decisions + usize::from(branching),
            };
            match split {
                Some(d) if child.decisions >= d => prefixes.push(child),
                _ => self.run(child, split, prefixes, out),
            }
        }
    }
}

fn symmetric_on_nonzero(n: usize) -> Sym {
    if n < 3 {
        return None;
    }
    let mut swap: Vec<usize> = (0..n).collect();
    swap.swap(1, 2);
    let mut cyc: Vec<usize> = (0..n).collect();
    for i in 1..n {
        cyc[i] = if i + 1 < n { i + 1 } else { 1 };
    }
    let gens = [Perm::from_images(swap).unwrap(), Perm::from_images(cyc).unwrap()];
    Some(Arc::new(PermGroup::new(n, &gens)))
}

/// `R(1) = (0 1 .. m-1)(m .. 2m-1)...` and the group of relabelings fixing
/// 0 that commute with it.
fn first_column(n: usize, m: usize) -> (Vec<u8>, Sym) {
    let col: Vec<u8> = (0..n)
        .map(|z| {
            let (b, i) = (z / m, z % m);
            (b * m + (i + 1) % m) as u8
        })
        .collect();
    let blocks = n / m;
    let mut gens = Vec::new();
    for b in 1..blocks {
        let mut rot: Vec<usize> = (0..n).collect();
        for i in 0..m {
            rot[b * m + i] = b * m + (i + 1) % m;
        }
        gens.push(Perm::from_images(rot).unwrap());
        if b + 1 < blocks {
            let mut sw: Vec<usize> = (0..n).collect();
            for i in 0..m {
                sw[b * m + i] = (b + 1) * m + i;
                sw[(b + 1) * m + i] = b * m + i;
            }
            gens.push(Perm::from_images(sw).unwrap());
        }
    }
    let g = PermGroup::new(n, &gens);
    (col, (g.order() > 1).then(|| Arc::new(g)))
}

fn fast_search(n: usize, pred: Predicate, split: Option<usize>) -> Vec<Vec<u8>> {
    let mut roots = Vec::new();
    let mut searches = Vec::new();
    if n == 1 || !pred.is_bol_family() {
        searches.push(Search { n, m: n, pred });
        roots.push(Node {
            p: Partial::new(n),
            g: symmetric_on_nonzero(n),
            cur: None,
            decisions: 0,
        });
    } else {
        for m in (2..=n).filter(|m| n % m == 0) {
            let (col, g) = first_column(n, m);
            let mut p = Partial::new(n);
            if !(1..n).all(|z| p.assign(z, 1, col[z] as usize, m, pred)) {
                continue;
            }
            searches.push(Search { n, m, pred });
            roots.push(Node {
                p,
                g,
                cur: None,
                decisions: 0,
            });
        }
    }
    let mut jobs: Vec<(usize, Node)> = Vec::new();
    let mut out = Vec::new();
    for (i, root) in roots.into_iter().enumerate() {
        match split {
            None => searches[i].run(root, None, &mut Vec::new(), &mut out),
            Some(d) => {
                let mut prefixes = Vec::new();
                searches[i].run(root, Some(d), &mut prefixes, &mut out);
                jobs.extend(prefixes.into_iter().map(|p| (i, p)));
            }
        }
    }
    let rest: Vec<Vec<Vec<u8>>> = jobs
        .into_par_iter()
        .map(|(i, node)| {
            let mut o = Vec::new();
            searches[i].run(node, None, &mut Vec::new(), &mut o);
            o
        })
        .collect();
    out.extend(rest.into_iter().flatten());
    out
}

/// Row-major lexicographic completion with no symmetry breaking.
fn reference_search(n: usize, pred: Predicate) -> Vec<Vec<u8>> {
    let mut p = Partial::new(n);
    let mut out = Vec::new();
    let cells: Vec<(usize, usize)> = (1..n).flat_map(|z| (1..n).map(move |x| (z, x))).collect();
    fn bol_ok(p: &Partial) -> bool {
        let n = p.n;
        for x in 0..n {
            for y in 0..n {
                let xy = p.get(x, y);
                if xy == NONE {
                    continue;
                }
                let xyx = p.get(xy as usize, x);
                if xyx == NONE {
                    continue;
                }
                for z in 0..n {
                    let zx = p.get(z, x);
                    if zx == NONE {
                        continue;
                    }
                    let zxy = p.get(zx as usize, y);
                    if zxy == NONE {
                        continue;
                    }
                    let (l, r) = (p.get(zxy as usize, x), p.get(z, xyx as usize));
                    if l != NONE && r != NONE && l != r {
                        return false;
                    }
                }
            }
        }
        true
    }
    fn rec(p: &mut Partial, cells: &[(usize, usize)], i: usize, bol: bool, out: &mut Vec<Vec<u8>>) {
        if i == cells.len() {
            out.push(p.t.clone());
            return;
        }
        let (z, x) = cells[i];
        for v in 0..p.n {
            if !p.free(z, x, v) {
                continue;
            }
            p.set(z, x, v);
            if !bol || bol_ok(p) {
                rec(p, cells, i + 1, bol, out);
            }
            p.unset(z, x);
        }
    }
    rec(&mut p, &cells, 0, pred.is_bol_family(), &mut out);
    out
}

/// A Glauberman instance: an odd-order group, an involutory automorphism
/// and the loop of its folder.
#[derive(Clone, Debug)]
pub struct GlaubermanInstance {
    pub group_name: String,
    pub group: Arc<FiniteGroup>,
    pub tau: TauAut,
    pub folder: GlaubermanFolder,
}

impl GlaubermanInstance {
    pub fn loop_(&self) -> &CayleyLoop {
        &self.folder.loop_
    }
}

/// Every built-in odd-order group of order at most `bound` with every
/// involutory automorphism.
pub fn enumerate_glauberman(bound: usize) -> Result<Vec<GlaubermanInstance>> {
    if bound > 81 {
        return Err(Error::BoundExceeded {
            order: bound,
            bound: 81,
        });
    }
    let mut out = Vec::new();
    for named in catalog::odd_groups(bound) {
        let group = Arc::new(named.group);
        let auts = group.involutory_automorphisms();
        let found: Vec<GlaubermanInstance> = auts
            .into_par_iter()
            .map(|t| {
                let folder = glauberman_folder(group.clone(), &t)?;
                let x = &folder.loop_;
                assert!(
                    x.order() % 2 == 1 && x.is_bruck(),
                    "{}: Glauberman loop is not an odd Bruck loop",
                    named.name
                );
                Ok(GlaubermanInstance {
                    group_name: named.name.clone(),
                    group: group.clone(),
                    tau: TauAut::from_full(t),
                    folder,
                })
            })
            .collect::<Result<_>>()?;
        out.extend(found);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(n: usize, p: Predicate, mode: Mode) -> usize {
        enumerate_loops(&EnumerationTask::new(n, p).with_mode(mode))
            .unwrap()
            .len()
    }

    #[test]
    fn small_loop_counts() {
        for mode in [Mode::Reference, Mode::Fast, Mode::Parallel { depth: 2 }] {
            assert_eq!(count(1, Predicate::Loop, mode), 1);
            assert_eq!(count(2, Predicate::Loop, mode), 1);
            assert_eq!(count(3, Predicate::Loop, mode), 1);
            assert_eq!(count(4, Predicate::Loop, mode), 2);
            assert_eq!(count(5, Predicate::Loop, mode), 6);
        }
    }

    #[test]
    fn bol_loops_of_order_six_are_groups() {
        let fast = enumerate_loops(&EnumerationTask::new(6, Predicate::Bol).with_mode(Mode::Fast)).unwrap();
        let reference = enumerate_loops(&EnumerationTask::new(6, Predicate::Bol).with_mode(Mode::Reference)).unwrap();
        assert_eq!(fast, reference);
        assert_eq!(fast.len(), 2);
        assert!(fast.iter().all(|x| x.is_associative()));
    }

    #[test]
    fn bounds() {
        let e = enumerate_loops(&EnumerationTask::new(9, Predicate::Bol));
        assert!(matches!(e, Err(Error::BoundExceeded { order: 9, bound: 8 })));
        assert!(enumerate_loops(&EnumerationTask::new(17, Predicate::Bruck)).is_err());
    }

    #[test]
    fn glauberman_small_bound() {
        let inst = enumerate_glauberman(9).unwrap();
        // C1: 1, C3: 2, C5: 2, C7: 2, C9: 2, C3xC3: 14
        assert_eq!(inst.len(), 1 + 2 + 2 + 2 + 2 + 14);
        for i in &inst {
            if i.group.is_abelian_set(&i.group.all()) {
                assert!(i.loop_().is_associative());
            }
        }
    }
}
