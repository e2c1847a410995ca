//! Structural operators on loops and the decomposition checks for Bruck
//! loops.
//!
//! A loop is solvable when it has a series `{0} = X0 ⊴ X1 ⊴ ... ⊴ Xn = X`
//! whose factors are abelian groups. A section is a quotient of a subloop.

use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

use rayon::prelude::*;
use serde::Serialize;

use crate::bruck::k_radical;
use crate::error::{Error, Result};
use crate::folder::envelope;
use crate::group::{intersect, is_subset, prime_factors, ElementSet, FiniteGroup};
use crate::iso::canonical_form;
use crate::loops::{CayleyLoop, LoopHom, SubloopSet};

fn is_pi_number(n: usize, pi: &[usize]) -> bool {
    prime_factors(n).iter().all(|p| pi.contains(p))
}

fn odd_primes(n: usize) -> Vec<usize> {
    prime_factors(n).into_iter().filter(|&p| p != 2).collect()
}

/// Largest normal π-subloop, built by joining normal closures of single
/// elements while the join stays a π-subloop.
pub fn o_pi(x: &CayleyLoop, pi: &[usize]) -> SubloopSet {
    let n = x.order();
    let mut acc = x.trivial_subloop();
    let mut closures: Vec<Option<SubloopSet>> = vec![None; n];
    loop {
        let mut changed = false;
        let mask = acc.mask(n);
        for e in 1..n {
            if mask[e] {
                continue;
            }
            let c = closures[e].get_or_insert_with(|| x.normal_closure(&[e]));
            if !is_pi_number(c.order(), pi) || c.is_subset_of(&acc) {
                continue;
            }
            let j = x.normal_join(&acc, c);
            if is_pi_number(j.order(), pi) {
                acc = j;
                changed = true;
                break;
            }
        }
        if !changed {
            return acc;
        }
    }
}

/// `O_2(X)`.
pub fn o2(x: &CayleyLoop) -> SubloopSet {
    o_pi(x, &[2])
}

/// `O(X)`, the largest normal subloop of odd order.
pub fn o_odd(x: &CayleyLoop) -> SubloopSet {
    o_pi(x, &odd_primes(x.order()))
}

/// `O²(X)`, generated by the elements of odd order.
pub fn o_upper2(x: &CayleyLoop) -> Result<SubloopSet> {
    let orders = x.element_orders()?;
    let gens: Vec<usize> = (0..x.order()).filter(|&e| orders[e] % 2 == 1).collect();
    Ok(x.subloop_generated(&gens))
}

/// `O^{2'}(X)`, generated by the 2-elements.
pub fn o_upper2prime(x: &CayleyLoop) -> Result<SubloopSet> {
    let orders = x.element_orders()?;
    let gens: Vec<usize> = (0..x.order()).filter(|&e| orders[e].is_power_of_two()).collect();
    Ok(x.subloop_generated(&gens))
}

/// `(z*a)*b = z*(a*b)` for every `z`, that is `R(a)R(b) = R(a*b)`.
fn translations_compose(x: &CayleyLoop, a: usize, b: usize) -> bool {
    let ab = x.mul(a, b);
    (0..x.order()).all(|z| x.mul(x.mul(z, a), b) == x.mul(z, ab))
}

fn powers(x: &CayleyLoop, e: usize, order: usize) -> Vec<usize> {
    (0..order as i64).map(|m| x.power(e, m).expect("Bol loop")).collect()
}

/// Outcome of the exhaustive check over pairs of a 2-element and an
/// element of odd order.
#[derive(Clone, Debug, Default, Serialize)]
pub struct TranslationReport {
    pub pairs: usize,
    /// `R(x)R(y) = R(x*y) = R(y*x) = R(y)R(x)` fails.
    pub translation_failure: Option<(usize, usize)>,
    pub commute_failure: Option<(usize, usize)>,
    /// Pairs where the power law hypothesis holds for some `k >= 1`.
    pub power_law_instances: usize,
    /// `(x, y, i)` with `(x*y)^(2^i) != x^(2^i) * y^(2^i)`.
    pub power_law_failure: Option<(usize, usize, u32)>,
    /// `y` is not a power of `x*y`.
    pub trigger_failure: Option<(usize, usize)>,
}

impl TranslationReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }

    pub fn passed(&self) -> bool {
        self.translation_failure.is_none()
            && self.commute_failure.is_none()
            && self.power_law_failure.is_none()
            && self.trigger_failure.is_none()
    }
}

fn check_pair(x: &CayleyLoop, orders: &[usize], u: usize, v: usize, r: &mut TranslationReport) {
    let uv = x.mul(u, v);
    let vu = x.mul(v, u);
    r.pairs += 1;
    let n = x.order();
    let star = (0..n).all(|z| {
        let a = x.mul(x.mul(z, u), v);
        a == x.mul(z, uv) && a == x.mul(z, vu) && a == x.mul(x.mul(z, v), u)
    });
    if !star && r.translation_failure.is_none() {
        r.translation_failure = Some((u, v));
    }
    if uv != vu && r.commute_failure.is_none() {
        r.commute_failure = Some((u, v));
    }

    // largest k <= log2|u| with u^(2^j) commuting with v^(2^(j-1)) for j <= k
    let pw = |e: usize, m: u64| x.power(e, m as i64).expect("Bol loop");
    let log = orders[u].trailing_zeros();
    let mut k = 0;
    while k < log {
        let j = k + 1;
        let a = pw(u, 1 << j);
        let b = pw(v, 1 << (j - 1));
        if x.mul(a, b) != x.mul(b, a) {
            break;
        }
        k = j;
    }
    if k >= 1 {
        r.power_law_instances += 1;
        for i in 0..=k {
            let lhs = pw(uv, 1 << i);
            let rhs = x.mul(pw(u, 1 << i), pw(v, 1 << i));
            if lhs != rhs && r.power_law_failure.is_none() {
                r.power_law_failure = Some((u, v, i));
            }
        }
    }
    if !powers(x, uv, orders[uv]).contains(&v) && r.trigger_failure.is_none() {
        r.trigger_failure = Some((u, v));
    }
}

/// Checks every pair `(x, y)` with `x` a 2-element and `|y|` odd.
pub fn theorem2_verify(x: &CayleyLoop) -> Result<TranslationReport> {
    if !x.is_bruck() {
        return Err(Error::NotBruck);
    }
    let orders = x.element_orders()?;
    let n = x.order();
    let twos: Vec<usize> = (0..n).filter(|&e| orders[e].is_power_of_two()).collect();
    let odds: Vec<usize> = (0..n).filter(|&e| orders[e] % 2 == 1).collect();
    let parts: Vec<TranslationReport> = twos
        .par_iter()
        .map(|&u| {
            let mut r = TranslationReport::default();
            for &v in &odds {
                check_pair(x, &orders, u, v, &mut r);
            }
            r
        })
        .collect();
    let mut out = TranslationReport::default();
    for r in parts {
        out.pairs += r.pairs;
        out.power_law_instances += r.power_law_instances;
        out.translation_failure = out.translation_failure.or(r.translation_failure);
        out.commute_failure = out.commute_failure.or(r.commute_failure);
        out.power_law_failure = out.power_law_failure.or(r.power_law_failure);
        out.trigger_failure = out.trigger_failure.or(r.trigger_failure);
    }
    Ok(out)
}

/// A solvability witness: each term normal in the next, each factor an
/// abelian group.
#[derive(Clone, Debug, Serialize)]
pub struct NormalSeries {
    pub terms: Vec<SubloopSet>,
    /// Cayley tables of the successive factors.
    pub factors: Vec<Vec<Vec<usize>>>,
    pub abelian: Vec<bool>,
}

impl NormalSeries {
    fn build(x: &CayleyLoop, terms: Vec<Vec<usize>>) -> Self {
        let terms: Vec<SubloopSet> = terms
            .into_iter()
            .map(|t| x.as_subloop(&t).expect("series term"))
            .collect();
        let mut factors = Vec::new();
        let mut abelian = Vec::new();
        for w in terms.windows(2) {
            let (q, _) = section_quotient(x, &w[1], &w[0]).expect("series term normal in the next");
            abelian.push(q.is_abelian_group());
            factors.push(q.rows());
        }
        NormalSeries {
            terms,
            factors,
            abelian,
        }
    }

    /// Re-checks the series against `x`.
    pub fn verify(&self, x: &CayleyLoop) -> bool {
        let ends = self.terms.first().map_or(false, |t| t.is_trivial())
            && self.terms.last().map_or(false, |t| t.order() == x.order());
        ends && self.terms.windows(2).all(|w| {
            w[0].is_subset_of(&w[1]) && section_quotient(x, &w[1], &w[0]).map_or(false, |(q, _)| q.is_abelian_group())
        })
    }
}

/// `S/N` for subloops `N ⊆ S` with `N` normal in `S`, together with a
/// representative in `x` of each class.
pub fn section_quotient(x: &CayleyLoop, s: &SubloopSet, n: &SubloopSet) -> Result<(CayleyLoop, Vec<usize>)> {
    if !n.is_subset_of(s) {
        return Err(Error::NotSubloop);
    }
    let sl = x.restrict(s);
    let pos: Vec<usize> = n
        .members()
        .iter()
        .map(|m| s.members().binary_search(m).expect("subset"))
        .collect();
    let ns = sl.as_subloop(&pos)?;
    let (q, proj) = sl.factor_loop(&ns)?;
    let mut reps = vec![usize::MAX; q.order()];
    for (p, &c) in proj.map.iter().enumerate() {
        if reps[c] == usize::MAX {
            reps[c] = s.members()[p];
        }
    }
    Ok((q, reps))
}

fn solvable_terms(x: &CayleyLoop) -> Option<Vec<Vec<usize>>> {
    let n = x.order();
    if n == 1 {
        return Some(vec![vec![0]]);
    }
    if x.is_abelian_group() {
        return Some(vec![vec![0], (0..n).collect()]);
    }
    // X is solvable iff N and X/N are, for any normal N
    let m = x.minimal_normal_subloops().into_iter().next()?;
    if m.order() == n {
        return None;
    }
    let lower: Vec<Vec<usize>> = solvable_terms(&x.restrict(&m))?
        .into_iter()
        .map(|t| t.into_iter().map(|i| m.members()[i]).collect())
        .collect();
    let (q, proj) = x.factor_loop(&m).expect("minimal normal subloop");
    let upper = solvable_terms(&q)?;
    let mut terms = lower;
    for t in upper.into_iter().skip(1) {
        let mask: Vec<bool> = {
            let mut v = vec![false; q.order()];
            t.iter().for_each(|&c| v[c] = true);
            v
        };
        terms.push((0..n).filter(|&e| mask[proj.map[e]]).collect());
    }
    Some(terms)
}

/// A normal series with abelian-group factors, if one exists.
pub fn is_solvable_loop(x: &CayleyLoop) -> Option<NormalSeries> {
    solvable_terms(x).map(|t| NormalSeries::build(x, t))
}

/// Solvability verdicts keyed by canonical form.
#[derive(Default)]
pub struct SolvabilityCache {
    seen: Mutex<HashMap<CayleyLoop, bool>>,
}

impl SolvabilityCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_solvable(&self, x: &CayleyLoop) -> bool {
        let c = canonical_form(x);
        if let Some(&v) = self.seen.lock().unwrap().get(&c) {
            return v;
        }
        let v = solvable_terms(&c).is_some();
        self.seen.lock().unwrap().insert(c, v);
        v
    }

    pub fn len(&self) -> usize {
        self.seen.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// All sections `S/N` up to isomorphism, as canonical forms sorted by
/// order then table.
pub fn sections(x: &CayleyLoop) -> Vec<CayleyLoop> {
    let mut all = proper_sections(x);
    all.push(canonical_form(x));
    all
}

/// Sections of order less than `|X|`, as in [`sections`].
pub fn proper_sections(x: &CayleyLoop) -> Vec<CayleyLoop> {
    let n = x.order();
    let subs = x.all_subloops();
    let mut found: Vec<CayleyLoop> = subs
        .par_iter()
        .flat_map_iter(|s| {
            let sl = x.restrict(s);
            sl.normal_subloops()
                .into_iter()
                .filter(|m| s.order() < n || !m.is_trivial())
                .map(move |m| canonical_form(&sl.factor_loop(&m).expect("normal").0))
                .collect::<Vec<_>>()
        })
        .collect();
    found.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.cmp(b)));
    found.dedup();
    found
}

/// Outcome of the M-loop scan.
#[derive(Clone, Debug, Serialize)]
pub struct MLoopReport {
    pub solvable: bool,
    pub proper_sections: usize,
    /// Order of some nonsolvable proper section.
    pub nonsolvable_section: Option<usize>,
    pub m_loop: bool,
    /// Set when `X` is an M-loop which is Bruck but not a simple
    /// 2-element loop.
    pub contradiction: Option<String>,
}

/// Scans every proper section, whatever the verdict on `X` itself.
pub fn m_loop_report(x: &CayleyLoop, cache: &SolvabilityCache) -> MLoopReport {
    let solvable = solvable_terms(x).is_some();
    let proper = proper_sections(x);
    let nonsolvable_section = proper
        .par_iter()
        .find_map_first(|s| (!cache.is_solvable(s)).then(|| s.order()));
    let m_loop = !solvable && nonsolvable_section.is_none();
    let mut contradiction = None;
    if m_loop && x.is_bruck() {
        let simple = x.normal_subloops().len() == 2;
        let two_element = x
            .element_orders()
            .map_or(false, |o| o.iter().all(|e| e.is_power_of_two()));
        if !(simple && two_element) {
            contradiction = Some(format!(
                "Bruck M-loop of order {} with simple = {simple}, 2-element = {two_element}",
                x.order()
            ));
        }
    }
    MLoopReport {
        solvable,
        proper_sections: proper.len(),
        nonsolvable_section,
        m_loop,
        contradiction,
    }
}

/// Nonsolvable with every proper section solvable.
pub fn m_loop_detect(x: &CayleyLoop) -> bool {
    if solvable_terms(x).is_some() {
        return false;
    }
    m_loop_report(x, &SolvabilityCache::new()).m_loop
}

/// One clause of a report.
#[derive(Clone, Debug, Serialize)]
pub struct Clause {
    pub name: String,
    pub passed: bool,
    pub counterexample: Option<String>,
}

fn clause(name: &str, failure: Option<String>) -> Clause {
    Clause {
        name: name.to_string(),
        passed: failure.is_none(),
        counterexample: failure,
    }
}

/// Group-side subgroups of the envelope, as element sets.
#[derive(Clone, Debug, Serialize)]
pub struct GroupSide {
    pub order: usize,
    pub o2prime: ElementSet,
    pub o: ElementSet,
    pub o2: ElementSet,
    /// `<R(x) : x a 2-element>`.
    pub g2: ElementSet,
    /// `<R(x) : |x| odd>`.
    pub g2prime: ElementSet,
}

/// The decomposition of a finite Bruck loop and of its envelope.
#[derive(Clone, Debug, Serialize)]
pub struct DecompositionReport {
    pub order: usize,
    pub o2prime: SubloopSet,
    pub o: SubloopSet,
    pub o2: SubloopSet,
    pub o_upper2: SubloopSet,
    pub z: SubloopSet,
    /// `x = a*b` with `a` in `O^{2'}(X)` and `b` in `O(X)`.
    pub factorization: Vec<(usize, usize)>,
    /// `(O^{2'}/Z) x (O/Z) -> X/Z`, `(i, j)` at index `i * |O/Z| + j`.
    pub quotient_iso: LoopHom,
    /// `O_2 x O -> X` when `X` is solvable.
    pub direct_iso: Option<LoopHom>,
    pub series: Option<NormalSeries>,
    pub group: GroupSide,
    pub clauses: Vec<Clause>,
}

impl DecompositionReport {
    pub fn passed(&self) -> bool {
        self.clauses.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

fn subgroups_commute(gr: &FiniteGroup, a: &[usize], b: &[usize]) -> Option<(usize, usize)> {
    let ga = gr.generators_of(a);
    let gb = gr.generators_of(b);
    ga.iter()
        .flat_map(|&p| gb.iter().map(move |&q| (p, q)))
        .find(|&(p, q)| gr.mul(p, q) != gr.mul(q, p))
}

/// `AB = G` and `[A, B] = 1`.
fn central_product_failure(gr: &FiniteGroup, a: &[usize], b: &[usize]) -> Option<String> {
    if let Some((p, q)) = subgroups_commute(gr, a, b) {
        return Some(format!("elements {p} and {q} do not commute"));
    }
    let meet = intersect(a, b).len();
    if a.len() * b.len() != gr.order() * meet {
        return Some(format!(
            "|A||B|/|A∩B| = {} != |G| = {}",
            a.len() * b.len() / meet,
            gr.order()
        ));
    }
    None
}

/// `(a, b) ↦ a*b` from `A x B` onto `x`, when it is an isomorphism.
fn internal_direct(x: &CayleyLoop, a: &SubloopSet, b: &SubloopSet) -> Option<LoopHom> {
    let la = x.restrict(a);
    let lb = x.restrict(b);
    let prod = la.direct_product(&lb);
    let hom = LoopHom {
        map: (0..prod.order())
            .map(|i| x.mul(a.members()[i / b.order()], b.members()[i % b.order()]))
            .collect(),
    };
    hom.is_isomorphism(&prod, x).then_some(hom)
}

/// Full decomposition of a finite Bruck loop and its envelope.
pub fn theorem1_verify(x: &CayleyLoop, cap: u128) -> Result<DecompositionReport> {
    if !x.is_bruck() {
        return Err(Error::NotBruck);
    }
    let n = x.order();
    let orders = x.element_orders()?;
    let op = o_upper2prime(x)?;
    let ou = o_upper2(x)?;
    let o = o_odd(x);
    let o_2 = o2(x);
    let z = op.intersection(&o);
    let mut clauses = Vec::new();

    let not_normal = [("O^{2'}", &op), ("O", &o), ("O_2", &o_2)]
        .iter()
        .find(|(_, s)| !x.is_normal_subloop(s).unwrap_or(false))
        .map(|(name, _)| format!("{name} is not normal"));
    clauses.push(clause("normal-subloops", not_normal));

    // X = O^{2'} * O as a set
    let mut factorization = vec![(usize::MAX, usize::MAX); n];
    for &a in op.members() {
        for &b in o.members() {
            let e = x.mul(a, b);
            if factorization[e].0 == usize::MAX {
                factorization[e] = (a, b);
            }
        }
    }
    let missing = factorization.iter().position(|p| p.0 == usize::MAX);
    clauses.push(clause(
        "loop-factorization",
        missing.map(|e| format!("{e} is not a product of O^{{2'}} and O")),
    ));
    let central = op.members().iter().find_map(|&a| {
        o.members()
            .iter()
            .find(|&&b| x.mul(a, b) != x.mul(b, a) || !translations_compose(x, a, b))
            .map(|&b| format!("a = {a}, b = {b}"))
    });
    clauses.push(clause("loop-central", central));

    // Z inside the centre, of odd order
    let centre = x.center();
    let z_fail = if !z.is_subset_of(&centre) {
        Some("Z is not central".to_string())
    } else if z.order() % 2 == 0 {
        Some(format!("|Z| = {}", z.order()))
    } else {
        None
    };
    clauses.push(clause("z-central-odd", z_fail));

    // X/Z = O^{2'}/Z x O/Z
    let (qx, proj) = x.factor_loop(&z)?;
    let (qa, ra) = section_quotient(x, &op, &z)?;
    let (qb, rb) = section_quotient(x, &o, &z)?;
    let prod = qa.direct_product(&qb);
    let quotient_iso = LoopHom {
        map: (0..prod.order())
            .map(|i| proj.map[x.mul(ra[i / qb.order()], rb[i % qb.order()])])
            .collect(),
    };
    let qfail = (!quotient_iso.is_isomorphism(&prod, &qx)).then(|| "product map is not an isomorphism".to_string());
    clauses.push(clause("quotient-direct", qfail));

    clauses.push(clause(
        "o-upper2-equals-o",
        (ou != o).then(|| format!("|O^2| = {}, |O| = {}", ou.order(), o.order())),
    ));
    let odd_set: Vec<usize> = (0..n).filter(|&e| orders[e] % 2 == 1).collect();
    clauses.push(clause(
        "odd-elements-form-o",
        (odd_set != o.members()).then(|| format!("{} odd-order elements, |O| = {}", odd_set.len(), o.order())),
    ));

    // x = x2 * x2' uniquely inside <x>
    let decomp = (0..n).find_map(|e| {
        let cyc = powers(x, e, orders[e]);
        let count = cyc
            .iter()
            .flat_map(|&a| cyc.iter().map(move |&b| (a, b)))
            .filter(|&(a, b)| orders[a].is_power_of_two() && orders[b] % 2 == 1 && x.mul(a, b) == e)
            .count();
        (count != 1).then(|| format!("{e} has {count} decompositions"))
    });
    clauses.push(clause("unique-2-decomposition", decomp));

    // envelope side
    let env = envelope(x, cap)?;
    let gr = env.folder.group();
    let t = &env.translations;
    let g2: ElementSet = gr.subgroup_generated(
        &(0..n)
            .filter(|&e| orders[e].is_power_of_two())
            .map(|e| t[e])
            .collect::<Vec<_>>(),
    );
    let g2prime = gr.subgroup_generated(&odd_set.iter().map(|&e| t[e]).collect::<Vec<_>>());
    let gop = gr.generated_by_orders(|m| m.is_power_of_two());
    let go = gr.o_odd_group();
    let go2 = gr.o2_group();
    clauses.push(clause(
        "envelope-g2-g2prime",
        central_product_failure(gr, &g2, &g2prime),
    ));
    clauses.push(clause("group-central", central_product_failure(gr, &gop, &go)));
    let gz = intersect(&gop, &go);
    let gcentre = gr.center();
    let gz_fail = if !is_subset(&gz, &gcentre) {
        Some("O^{2'}(G) ∩ O(G) is not central".to_string())
    } else if gz.len() % 2 == 0 {
        Some(format!("|O^{{2'}}(G) ∩ O(G)| = {}", gz.len()))
    } else {
        None
    };
    clauses.push(clause("group-z-central-odd", gz_fail));

    let series = is_solvable_loop(x);
    let mut direct_iso = None;
    if series.is_some() {
        let fail = if op != o_2 {
            Some("O^{2'} != O_2".to_string())
        } else {
            direct_iso = internal_direct(x, &o_2, &o);
            direct_iso
                .is_none()
                .then(|| "O_2 x O -> X is not an isomorphism".to_string())
        };
        clauses.push(clause("solvable-loop-direct", fail));
        let gfail = if intersect(&go2, &go).len() != 1 {
            Some("O_2(G) ∩ O(G) is nontrivial".to_string())
        } else {
            central_product_failure(gr, &go2, &go)
        };
        clauses.push(clause("solvable-group-direct", gfail));
    }

    Ok(DecompositionReport {
        order: n,
        o2prime: op,
        o,
        o2: o_2,
        o_upper2: ou,
        z,
        factorization,
        quotient_iso,
        direct_iso,
        series,
        group: GroupSide {
            order: gr.order(),
            o2prime: gop,
            o: go,
            o2: go2,
            g2,
            g2prime,
        },
        clauses,
    })
}

/// `H` acts on `K` by conjugation in the envelope; equivalently every
/// inner mapping fixing the identity is an automorphism.
pub fn is_ar_loop(x: &CayleyLoop, cap: u128) -> Result<bool> {
    let env = envelope(x, cap)?;
    Ok(crate::bruck::h_acts_on_k(&env.folder))
}

/// Every right inner mapping `R(x)R(y)R(x*y)^-1` is an automorphism.
/// These generate the stabilizer of 0 in the envelope, so this agrees
/// with [`is_ar_loop`] without building the group.
pub fn right_inner_maps_automorphic(x: &CayleyLoop) -> bool {
    ar_witness(x).is_none()
}

/// Loop and group solvability, and the radical quotient.
#[derive(Clone, Debug, Serialize)]
pub struct SolvabilityReport {
    pub ar_loop: bool,
    pub loop_solvable: bool,
    pub group_solvable: bool,
    pub envelope_order: usize,
    /// The K-radical of the envelope.
    pub radical: ElementSet,
    /// `{x : R(x) in the radical}`.
    pub radical_loop: Vec<usize>,
    pub radical_normal: bool,
    /// `x ↦ R(x)` is an isomorphism onto the radical.
    pub radical_isomorphic: bool,
    pub quotient_bruck: bool,
}

impl SolvabilityReport {
    pub fn agree(&self) -> bool {
        self.loop_solvable == self.group_solvable
    }

    pub fn passed(&self) -> bool {
        self.ar_loop && self.agree() && self.radical_normal && self.radical_isomorphic && self.quotient_bruck
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

pub fn corollary4_check(x: &CayleyLoop, cap: u128) -> Result<SolvabilityReport> {
    if !x.is_bol() {
        return Err(Error::NotBol);
    }
    let env = envelope(x, cap)?;
    let f = &env.folder;
    let gr = f.group();
    let t = &env.translations;
    let ar_loop = crate::bruck::h_acts_on_k(f);
    let radical = k_radical(f);
    let rmask = gr.mask(&radical);
    let radical_loop: Vec<usize> = (0..x.order()).filter(|&e| rmask[t[e]]).collect();
    let sub = x.as_subloop(&radical_loop).ok();
    let radical_normal = sub.as_ref().map_or(false, |s| x.is_normal_subloop(s).unwrap_or(false));
    let radical_isomorphic = sub.is_some()
        && radical_loop.len() == radical.len()
        && radical_loop
            .iter()
            .all(|&a| radical_loop.iter().all(|&b| gr.mul(t[a], t[b]) == t[x.mul(a, b)]));
    let quotient_bruck = match (&sub, radical_normal) {
        (Some(s), true) => x.factor_loop(s)?.0.is_bruck(),
        _ => false,
    };
    Ok(SolvabilityReport {
        ar_loop,
        loop_solvable: is_solvable_loop(x).is_some(),
        group_solvable: gr.is_solvable(),
        envelope_order: gr.order(),
        radical,
        radical_loop,
        radical_normal,
        radical_isomorphic,
        quotient_bruck,
    })
}

/// `X = A*B`, and `a*b = b*a` with `R(a)R(b) = R(a*b)` for `a ∈ A`,
/// `b ∈ B`.
pub fn central_product_check(x: &CayleyLoop, a: &SubloopSet, b: &SubloopSet) -> Result<bool> {
    for s in [a, b] {
        if !x.is_normal_subloop(s).map_err(|_| Error::NotNormal)? {
            return Err(Error::NotNormal);
        }
    }
    if x.product_set(a, b).len() != x.order() {
        return Ok(false);
    }
    Ok(a.members().iter().all(|&p| {
        b.members()
            .iter()
            .all(|&q| x.mul(p, q) == x.mul(q, p) && translations_compose(x, p, q))
    }))
}

/// Counts of elements by order, for reports.
pub fn order_statistics(x: &CayleyLoop) -> Result<BTreeMap<usize, usize>> {
    let mut m = BTreeMap::new();
    for o in x.element_orders()? {
        *m.entry(o).or_insert(0) += 1;
    }
    Ok(m)
}

/// Properties understood by [`check_properties`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Property {
    Loop,
    Bol,
    Aip,
    Bruck,
    Ar,
}

impl Property {
    pub const ALL: [Property; 5] = [
        Property::Loop,
        Property::Bol,
        Property::Aip,
        Property::Bruck,
        Property::Ar,
    ];
}

impl std::str::FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "loop" => Ok(Property::Loop),
            "bol" => Ok(Property::Bol),
            "aip" => Ok(Property::Aip),
            "bruck" => Ok(Property::Bruck),
            "ar" => Ok(Property::Ar),
            _ => Err(Error::Parse {
                line: 0,
                msg: format!("unknown property {s:?}"),
            }),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PropertyVerdict {
    pub property: Property,
    pub holds: bool,
    /// Elements witnessing the failure: `(x, y, z)` for Bol, `(x, y)` for
    /// the inverse property and for an inner mapping that is not an
    /// automorphism, `(x)` for a missing two-sided inverse.
    pub counterexample: Option<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PropertyReport {
    pub order: usize,
    pub verdicts: Vec<PropertyVerdict>,
}

impl PropertyReport {
    pub fn all_hold(&self) -> bool {
        self.verdicts.iter().all(|v| v.holds)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

fn aip_witness(x: &CayleyLoop) -> Option<Vec<usize>> {
    match x.aip_violation() {
        Ok(v) => v.map(|(a, b)| vec![a, b]),
        Err(Error::InversesUndefined(e)) => Some(vec![e]),
        Err(_) => Some(vec![]),
    }
}

fn ar_witness(x: &CayleyLoop) -> Option<Vec<usize>> {
    let n = x.order();
    (1..n)
        .flat_map(|a| (1..n).map(move |b| (a, b)))
        .find(|&(a, b)| {
            let ab = x.mul(a, b);
            let h: Vec<usize> = (0..n).map(|z| x.rdiv(x.mul(x.mul(z, a), b), ab)).collect();
            !(0..n).all(|u| (0..n).all(|v| h[x.mul(u, v)] == x.mul(h[u], h[v])))
        })
        .map(|(a, b)| vec![a, b])
}

/// Evaluates each requested property with its first counterexample.
pub fn check_properties(x: &CayleyLoop, props: &[Property]) -> PropertyReport {
    let bol = || x.bol_violation().map(|(a, b, c)| vec![a, b, c]);
    let verdicts = props
        .iter()
        .map(|&p| {
            let counterexample = match p {
                Property::Loop => None,
                Property::Bol => bol(),
                Property::Aip => aip_witness(x),
                Property::Bruck => bol().or_else(|| aip_witness(x)),
                Property::Ar => ar_witness(x),
            };
            PropertyVerdict {
                property: p,
                holds: counterexample.is_none(),
                counterexample,
            }
        })
        .collect();
    PropertyReport {
        order: x.order(),
        verdicts,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn o_operators_on_c6() {
        let c6 = CayleyLoop::cyclic(6);
        assert_eq!(o2(&c6).members(), &[0, 3]);
        assert_eq!(o_pi(&c6, &[3]).members(), &[0, 2, 4]);
        assert_eq!(o_upper2(&c6).unwrap().members(), &[0, 2, 4]);
        assert_eq!(o_upper2prime(&c6).unwrap().members(), &[0, 3]);
        let e8 = catalog::elementary_abelian_2(3);
        assert_eq!(o_upper2prime(&e8).unwrap().order(), 8);
        assert!(o_upper2(&e8).unwrap().is_trivial());
    }

    #[test]
    fn series_for_small_groups() {
        let c6 = CayleyLoop::cyclic(6);
        let s = is_solvable_loop(&c6).unwrap();
        assert!(s.verify(&c6));
        let s3 = catalog::symmetric3();
        let s = is_solvable_loop(&s3).unwrap();
        assert!(s.verify(&s3));
        assert_eq!(s.terms.iter().map(|t| t.order()).collect::<Vec<_>>(), vec![1, 3, 6]);
        assert!(!m_loop_detect(&s3));
    }

    #[test]
    fn a5_is_not_solvable() {
        use crate::{Perm, PermGroup};
        let a5 = PermGroup::new(
            5,
            &[
                Perm::from_images(vec![1, 2, 0, 3, 4]).unwrap(),
                Perm::from_images(vec![0, 1, 3, 4, 2]).unwrap(),
                Perm::from_images(vec![1, 2, 3, 4, 0]).unwrap(),
            ],
        )
        .enumerate(1000)
        .unwrap();
        let x = catalog::group_loop(&a5);
        assert!(is_solvable_loop(&x).is_none());
        // A5 is simple, and its proper sections are solvable
        assert!(m_loop_detect(&x));
    }

    #[test]
    fn theorem_checks_on_c6() {
        let c6 = CayleyLoop::cyclic(6);
        let r = theorem2_verify(&c6).unwrap();
        assert!(r.passed());
        assert_eq!(r.pairs, 2 * 3);
        let d = theorem1_verify(&c6, 1 << 20).unwrap();
        assert!(d.passed(), "{:?}", d.clauses);
        assert!(d.z.is_trivial());
        assert!(d.direct_iso.is_some());
        assert!(central_product_check(&c6, &d.o2, &d.o).unwrap());
        assert!(matches!(theorem2_verify(&catalog::symmetric3()), Err(Error::NotBruck)));
    }

    #[test]
    fn corollary4_on_s3() {
        let s3 = catalog::symmetric3();
        assert!(is_ar_loop(&s3, 1 << 20).unwrap());
        let r = corollary4_check(&s3, 1 << 20).unwrap();
        assert!(r.passed(), "{r:?}");
        // the radical of a group envelope is its derived subgroup
        assert_eq!(r.radical.len(), 3);
    }

    #[test]
    fn central_product_rejects_non_normal() {
        let s3 = catalog::symmetric3();
        let inv = (1..6).find(|&e| s3.mul(e, e) == 0).unwrap();
        let sub = s3.subloop_generated(&[inv]);
        assert!(matches!(
            central_product_check(&s3, &sub, &s3.trivial_subloop()),
            Err(Error::NotNormal)
        ));
    }
}
