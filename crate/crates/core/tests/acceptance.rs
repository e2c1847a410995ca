//! Acceptance suite. Prints one PASS or FAIL line per criterion and exits
//! nonzero if any criterion fails.

mod common;

use std::collections::HashSet;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use loopforge::bruck::{
    baer_bijection, bruck_data, glauberman_report, is_bruck_folder, odd_loop_criteria, two_element_criterion,
    two_loop_criteria,
};
use loopforge::enumerate::{
    enumerate_glauberman, enumerate_loops, EnumerationTask, GlaubermanInstance, Mode, Predicate,
};
use loopforge::structure::{corollary4_check, is_ar_loop, m_loop_detect, theorem1_verify, theorem2_verify};
use loopforge::{envelope, loop_of_folder, loops_isomorphic, CayleyLoop, FiniteGroup, Perm, PermGroup, DEFAULT_CAP};

use common::*;

/// Nonassociative Bol loops of order 8, as counted by the unpruned
/// row-major reference search before the fixtures were frozen.
const BOL8_NONASSOCIATIVE: usize = 6;

type Outcome = Result<String, String>;

struct Corpus {
    loops: Vec<CayleyLoop>,
    bol: Vec<CayleyLoop>,
    bruck: Vec<CayleyLoop>,
    glauberman: Vec<GlaubermanInstance>,
}

impl Corpus {
    /// The Bruck corpus: frozen Bruck loops of order at most 16 and every
    /// Glauberman loop from the built-in odd groups of order at most 81.
    fn bruck_suite(&self) -> impl Iterator<Item = &CayleyLoop> {
        self.bruck.iter().chain(self.glauberman.iter().map(|g| g.loop_()))
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn functor_roundtrip(c: &Corpus) -> Outcome {
    let bol8: Vec<&CayleyLoop> = c.bol.iter().filter(|x| x.order() == 8 && !x.is_associative()).collect();
    ensure(bol8.len() == BOL8_NONASSOCIATIVE, || {
        format!("{} nonassociative Bol loops of order 8", bol8.len())
    })?;
    let small: Vec<&CayleyLoop> = c.loops.iter().filter(|x| x.order() <= 6).collect();
    ensure(small.len() == 1 + 1 + 1 + 2 + 6 + 109, || {
        format!("{} loops of order at most 6", small.len())
    })?;
    for x in small.iter().chain(&bol8) {
        let env = envelope(x, DEFAULT_CAP).map_err(|e| e.to_string())?;
        let y = loop_of_folder(&env.folder).map_err(|e| e.to_string())?;
        let iso = loops_isomorphic(x, &y);
        ensure(iso.is_some_and(|h| h.is_isomorphism(x, &y)), || {
            format!("loop of the envelope differs for\n{}", x.to_loop_string())
        })?;
    }
    Ok(format!("{} loops", small.len() + bol8.len()))
}

fn theorem2_suite(c: &Corpus) -> Outcome {
    let mut n = 0;
    for x in c.bruck_suite() {
        let r = theorem2_verify(x).map_err(|e| e.to_string())?;
        ensure(r.passed(), || format!("{:?} on\n{}", r, x.to_loop_string()))?;
        n += 1;
    }
    Ok(format!("{n} Bruck loops"))
}

fn theorem1_suite(c: &Corpus) -> Outcome {
    let mut n = 0;
    for x in c.bruck_suite() {
        let r = theorem1_verify(x, DEFAULT_CAP).map_err(|e| e.to_string())?;
        let failed: Vec<&str> = r
            .clauses
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.name.as_str())
            .collect();
        ensure(failed.is_empty(), || {
            format!("clauses {failed:?} fail on\n{}", x.to_loop_string())
        })?;
        let series = r
            .series
            .as_ref()
            .ok_or_else(|| format!("not solvable:\n{}", x.to_loop_string()))?;
        ensure(series.verify(x), || "normal series does not verify".into())?;
        for name in ["solvable-loop-direct", "solvable-group-direct"] {
            ensure(r.clauses.iter().any(|c| c.name == name && c.passed), || {
                format!("{name} missing")
            })?;
        }
        let direct = r.direct_iso.as_ref().ok_or("no direct-product isomorphism")?;
        ensure(direct.map.iter().collect::<HashSet<_>>().len() == x.order(), || {
            "direct-product map is not a bijection".into()
        })?;
        n += 1;
    }
    Ok(format!("{n} Bruck loops, all solvable"))
}

fn fixed_points(gr: &FiniteGroup, t: &[usize]) -> usize {
    (0..gr.order()).filter(|&g| t[g] == g).count()
}

fn glauberman_suite(c: &Corpus) -> Outcome {
    let mut faithful = 0;
    for inst in &c.glauberman {
        let gr = &inst.group;
        let t = &inst.tau.image;
        let r = glauberman_report(&inst.folder, DEFAULT_CAP).map_err(|e| e.to_string())?;
        let name = &inst.group_name;
        ensure(r.passed(), || format!("{name}: {r:?}"))?;
        ensure(is_bruck_folder(&inst.folder.folder), || {
            format!("{name}: not a Bruck folder")
        })?;
        let index = gr.order() / fixed_points(gr, t);
        ensure(inst.loop_().order() == index, || {
            format!("{name}: loop order {} but index {index}", inst.loop_().order())
        })?;
        // [L, t] = L and C_{Z(L)}(t) = 1
        let comm: Vec<usize> = (0..gr.order()).map(|g| gr.mul(gr.inv(g), t[g])).collect();
        let generated = closure(gr, &comm).len() == gr.order();
        let central_fixed = (1..gr.order())
            .filter(|&z| (0..gr.order()).all(|g| gr.mul(z, g) == gr.mul(g, z)))
            .any(|z| t[z] == z);
        let case = generated && !central_fixed;
        ensure(case == r.faithful_case, || format!("{name}: faithful case misdetected"))?;
        if case {
            faithful += 1;
            ensure(r.envelope_matches == Some(true), || {
                format!("{name}: envelope differs from folder")
            })?;
        }
    }
    Ok(format!(
        "{} pairs, {faithful} with matching envelope",
        c.glauberman.len()
    ))
}

fn baer_suite(c: &Corpus) -> Outcome {
    let mut n = 0;
    for x in c.bruck_suite().filter(|x| x.order() % 2 == 1) {
        let env = envelope(x, DEFAULT_CAP).map_err(|e| e.to_string())?;
        if env.folder.group().order() > 200 {
            continue;
        }
        let r = baer_bijection(&env).map_err(|e| e.to_string())?;
        ensure(r.passed(), || format!("{r:?} on\n{}", x.to_loop_string()))?;
        let subloops = r.rows.iter().filter_map(|row| row.subloop.as_ref()).count();
        ensure(subloops == x.all_subloops().len(), || "subloop count differs".into())?;
        for row in &r.rows {
            if let Some(s) = &row.subloop {
                ensure(x.is_subloop(s), || format!("{s:?} is not a subloop"))?;
            }
        }
        n += 1;
    }
    Ok(format!("{n} odd envelopes"))
}

fn criteria_suite(c: &Corpus) -> Outcome {
    let mut n = 0;
    for x in c.bruck_suite() {
        let env = envelope(x, DEFAULT_CAP).map_err(|e| e.to_string())?;
        let (_, ext) = bruck_data(&env.folder).map_err(|e| e.to_string())?;
        let reports = [
            two_loop_criteria(&ext),
            odd_loop_criteria(&ext),
            two_element_criterion(&ext).map_err(|e| e.to_string())?,
        ];
        for r in &reports {
            ensure(r.consistent(), || format!("{r:?} on\n{}", x.to_loop_string()))?;
        }
        n += 1;
    }
    Ok(format!("{n} loops, 3 lemmas each"))
}

fn ground_truths(c: &Corpus) -> Outcome {
    let n4 = naive_classes(4, |_| true).len();
    let n5 = naive_classes(5, |_| true).len();
    ensure(n4 == 2 && n5 == 6, || format!("naive oracle gives {n4} and {n5}"))?;
    for (n, want) in [(4, n4), (5, n5)] {
        let got = c.loops.iter().filter(|x| x.order() == n).count();
        ensure(got == want, || format!("order {n}: frozen {got}, oracle {want}"))?;
    }

    let reference = enumerate_loops(&EnumerationTask::new(8, Predicate::Bol).with_mode(Mode::Reference))
        .map_err(|e| e.to_string())?;
    let count = |v: &[CayleyLoop]| v.iter().filter(|x| !x.is_associative()).count();
    ensure(count(&reference) == BOL8_NONASSOCIATIVE, || {
        format!("reference search finds {}", count(&reference))
    })?;
    for mode in [Mode::Fast, Mode::Parallel { depth: 1 }, Mode::Parallel { depth: 3 }] {
        let v = enumerate_loops(&EnumerationTask::new(8, Predicate::Bol).with_mode(mode)).map_err(|e| e.to_string())?;
        ensure(v == reference, || format!("{mode:?} differs from the reference search"))?;
    }
    let frozen8: Vec<&CayleyLoop> = c.bol.iter().filter(|x| x.order() == 8).collect();
    ensure(frozen8.len() == reference.len(), || {
        "frozen order-8 Bol corpus differs".into()
    })?;
    Ok(format!(
        "{n4} and {n5} loop classes; {BOL8_NONASSOCIATIVE} nonassociative Bol loops of order 8"
    ))
}

/// Permutation groups to compare: envelope groups of every corpus loop and
/// a few symmetric, alternating and dihedral groups.
fn generated_groups(c: &Corpus) -> Vec<(usize, Vec<Perm>)> {
    let mut out = Vec::new();
    for x in c.loops.iter().chain(&c.bol).chain(c.bruck_suite()) {
        let gens: Vec<Perm> = (0..x.order()).map(|e| x.right_translation(e)).collect();
        out.push((x.order(), gens));
    }
    let p = |v: Vec<usize>| Perm::from_images(v).unwrap();
    for n in 3..=7 {
        let cycle = p((0..n).map(|i| (i + 1) % n).collect());
        let mut swap: Vec<usize> = (0..n).collect();
        swap.swap(0, 1);
        let refl = p((0..n).map(|i| (n - i) % n).collect());
        let three = p((0..n).map(|i| if i < 3 { (i + 1) % 3 } else { i }).collect());
        let shifted_three = p((0..n)
            .map(|i| if i == 0 || i >= 3 { i } else { [0, 2, 1][i] })
            .collect());
        if n < 7 {
            out.push((n, vec![cycle.clone(), p(swap)]));
        }
        out.push((n, vec![cycle.clone(), refl]));
        let alt_gen = if n % 2 == 1 { cycle } else { shifted_three.then(&cycle) };
        out.push((n, vec![three, alt_gen]));
    }
    out
}

fn oracle_equivalence(c: &Corpus) -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut bsgs = 0;
    for (degree, gens) in generated_groups(c) {
        let bfs = bfs_closure(degree, &gens);
        if bfs.len() > 5000 {
            continue;
        }
        let g = PermGroup::new(degree, &gens);
        ensure(g.order() == bfs.len() as u128, || {
            format!("order {} vs {}", g.order(), bfs.len())
        })?;
        let elems: HashSet<Vec<u32>> = g.elements().iter().map(|p| p.images().to_vec()).collect();
        ensure(elems == bfs, || "element lists differ".into())?;
        let mut pts: Vec<usize> = (0..degree).collect();
        for _ in 0..64 {
            pts.shuffle(&mut rng);
            let q = Perm::from_images(pts.clone()).unwrap();
            ensure(g.contains(&q) == bfs.contains(q.images()), || {
                format!("membership of {pts:?}")
            })?;
        }
        bsgs += 1;
    }

    let mut groups: Vec<FiniteGroup> = Vec::new();
    let mut hs: Vec<Vec<usize>> = Vec::new();
    let mut seen = HashSet::new();
    for x in c.loops.iter().chain(&c.bol).chain(c.bruck_suite()) {
        let env = envelope(x, DEFAULT_CAP).map_err(|e| e.to_string())?;
        let gr = env.folder.group();
        if gr.order() <= 200 && seen.insert((gr.rows(), env.folder.h().to_vec())) {
            groups.push((**gr).clone());
            hs.push(env.folder.h().to_vec());
        }
    }
    for g in loopforge::catalog::odd_groups(81) {
        groups.push(g.group);
        hs.push(vec![0]);
    }
    groups.push(loopforge::catalog::symmetric3_group());
    hs.push(vec![0, 1]);
    let mut scans = 0;
    for (gr, h) in groups.iter().zip(&hs) {
        let normals = normal_subgroups_by_scan(gr);
        let o2 = largest_with(&normals, |s| s.len().is_power_of_two());
        let odd = largest_with(&normals, |s| s.len() % 2 == 1);
        ensure(gr.o2_group() == o2, || {
            format!("O_2 differs in a group of order {}", gr.order())
        })?;
        ensure(gr.o_odd_group() == odd, || {
            format!("O differs in a group of order {}", gr.order())
        })?;
        let mut subs = vec![h.clone()];
        subs.extend((0..gr.order()).map(|g| closure(gr, &[g])));
        for s in &subs {
            let want = largest_with(&normals, |n| n.iter().all(|x| s.binary_search(x).is_ok()));
            let got = gr.core_in(s).map_err(|e| e.to_string())?;
            ensure(got == want, || {
                format!("core of {s:?} differs in a group of order {}", gr.order())
            })?;
        }
        scans += 1;
    }
    Ok(format!("{bsgs} permutation groups, {scans} normal-subgroup scans"))
}

fn corollary4_suite(c: &Corpus) -> Outcome {
    let mut ar = 0;
    for x in c.bol.iter().filter(|x| x.order() <= 12) {
        if !is_ar_loop(x, DEFAULT_CAP).map_err(|e| e.to_string())? {
            continue;
        }
        let r = corollary4_check(x, DEFAULT_CAP).map_err(|e| e.to_string())?;
        ensure(r.agree(), || format!("{r:?} on\n{}", x.to_loop_string()))?;
        ar += 1;
    }
    // M-loops are Bruck loops by definition; the plain predicate also holds
    // for every nonassociative loop of prime order, so those are only counted
    let scanned: Vec<&CayleyLoop> = c.bol.iter().chain(c.bruck_suite()).collect();
    if let Some(x) = scanned.iter().find(|x| m_loop_detect(x)) {
        return Err(format!("M-loop detected, needs review:\n{}", x.to_loop_string()));
    }
    let plain = c.loops.iter().filter(|x| m_loop_detect(x)).count();
    Ok(format!(
        "{ar} Bol A_r-loops agree; no M-loop among {} Bol and Bruck loops; {plain} general loops of order at most 6 satisfy the bare predicate",
        scanned.len()
    ))
}

fn main() {
    let start = Instant::now();
    let corpus = Corpus {
        loops: frozen("loop"),
        bol: frozen("bol"),
        bruck: frozen("bruck"),
        glauberman: enumerate_glauberman(81).expect("Glauberman enumeration"),
    };
    let criteria: [(&str, fn(&Corpus) -> Outcome); 9] = [
        ("functor roundtrip", functor_roundtrip),
        ("translation identities on Bruck loops", theorem2_suite),
        ("Bruck loop decomposition", theorem1_suite),
        ("Glauberman correspondence", glauberman_suite),
        ("Baer correspondences", baer_suite),
        ("criteria lemmas consistent", criteria_suite),
        ("enumeration ground truths", ground_truths),
        ("oracle equivalence", oracle_equivalence),
        ("A_r-loop solvability and M-loops", corollary4_suite),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        match f(&corpus) {
            Ok(detail) => println!("PASS {}: {name} ({detail}) [{:.1?}]", i + 1, t.elapsed()),
            Err(why) => {
                failed += 1;
                println!("FAIL {}: {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of 9 criteria passed in {:.1?}", 9 - failed, start.elapsed());
    if failed > 0 {
        std::process::exit(1);
    }
}
