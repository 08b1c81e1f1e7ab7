//! Acceptance criteria, one line each. Values that the library derives are
//! re-checked here against brute-force oracles that share no code with it.

use std::collections::{BTreeSet, HashSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use mlab::algebra::{
    direct_product, enumerate_monoids, family, small_groups, FiniteGroup, FiniteMonoid,
    FiniteSemigroup, Homomorphism, Limits,
};
use mlab::embedding::{
    frattini, monoid_transfer, normal_subgroups, pullback, solve_weak, subgroup_extension_check,
    subgroups, transfer_obstruction, EmbeddingProblem,
};
use mlab::expansion::{
    factorization_witness, henckell_expansion, is_aperiodic_morphism, ExpansionElement,
};
use mlab::projectivity::{band_theorem_scan, projective_up_to_bound, Outcome, ScanStatus};
use mlab::wreath::{
    faithful_r_quotient, krasner_kaloujnine, schutz_embedding, schutz_structure, WreathElement,
};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

type Check = std::result::Result<String, String>;

fn lim() -> Limits {
    Limits::default()
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)*) => {
        if !$cond {
            return Err(format!($($msg)*));
        }
    };
}

fn ok<T, E: std::fmt::Display>(
    r: std::result::Result<T, E>,
    what: &str,
) -> std::result::Result<T, String> {
    r.map_err(|e| format!("{what}: {e}"))
}

// ---------------------------------------------------------------- oracles

/// Every subgroup, by closing the trivial group under joins with cyclic
/// subgroups until nothing new appears.
fn oracle_subgroups(g: &FiniteGroup) -> Vec<BTreeSet<usize>> {
    let close = |s: &BTreeSet<usize>| {
        let mut set = s.clone();
        loop {
            let next: BTreeSet<usize> = set
                .iter()
                .flat_map(|&a| set.iter().map(move |&b| (a, b)))
                .map(|(a, b)| g.mul(a, b))
                .chain(set.iter().copied())
                .collect();
            if next == set {
                return set;
            }
            set = next;
        }
    };
    let trivial: BTreeSet<usize> = [g.identity()].into();
    let mut seen: HashSet<BTreeSet<usize>> = [trivial.clone()].into();
    let mut frontier = vec![trivial];
    while let Some(s) = frontier.pop() {
        for x in g.elements() {
            if s.contains(&x) {
                continue;
            }
            let mut t = s.clone();
            t.insert(x);
            let t = close(&t);
            if seen.insert(t.clone()) {
                frontier.push(t);
            }
        }
    }
    seen.into_iter().collect()
}

/// Wreath multiplication written out from the definition
/// `(f, n)(f′, n′) = (q ↦ f(q)·f′(q·n), nn′)`.
fn oracle_wreath_mul(
    top: &FiniteMonoid,
    n_mul: impl Fn(usize, usize) -> usize,
    act: impl Fn(usize, usize) -> usize,
    a: &WreathElement,
    b: &WreathElement,
) -> WreathElement {
    let f = (0..a.f.len())
        .map(|q| top.mul(a.f[q], b.f[act(q, a.n)]))
        .collect();
    WreathElement {
        f,
        n: n_mul(a.n, b.n),
    }
}

/// All functions `src → tgt` drawn from `cands`, filtered by `keep`.
fn brute_maps(cands: &[Vec<usize>], keep: &mut dyn FnMut(&[usize]) -> bool) -> usize {
    fn go(
        i: usize,
        cands: &[Vec<usize>],
        cur: &mut Vec<usize>,
        keep: &mut dyn FnMut(&[usize]) -> bool,
        n: &mut usize,
    ) {
        if i == cands.len() {
            if keep(cur) {
                *n += 1;
            }
            return;
        }
        for &c in &cands[i] {
            cur.push(c);
            go(i + 1, cands, cur, keep, n);
            cur.pop();
        }
    }
    let mut n = 0;
    go(0, cands, &mut Vec::new(), keep, &mut n);
    n
}

fn is_hom(src: &FiniteMonoid, tgt: &FiniteMonoid, map: &[usize]) -> bool {
    src.elements().all(|a| {
        src.elements()
            .all(|b| map[src.mul(a, b)] == tgt.mul(map[a], map[b]))
    })
}

/// Signature of a word given as element values, from all cut points.
fn oracle_signature(m: &FiniteMonoid, xs: &[usize]) -> (BTreeSet<(usize, usize)>, usize) {
    let pairs = (0..=xs.len())
        .map(|i| {
            (
                m.product(xs[..i].iter().copied()),
                m.product(xs[i..].iter().copied()),
            )
        })
        .collect();
    (pairs, m.product(xs.iter().copied()))
}

fn is_group_element(m: &FiniteMonoid, x: usize) -> bool {
    let mut y = x;
    for _ in 0..=m.order() {
        y = m.mul(y, x);
        if y == x {
            return true;
        }
    }
    false
}

fn mod_map(n: usize, p: usize) -> Homomorphism {
    Homomorphism::new(
        &family::cyclic(n).unwrap(),
        &family::cyclic(p).unwrap(),
        (0..n).map(|x| x % p).collect(),
    )
    .unwrap()
}

// ---------------------------------------------------------------- criteria

fn kk_suite() -> Check {
    let z2 = family::cyclic(2).unwrap();
    let mut groups: Vec<(String, FiniteGroup)> = (1..=12)
        .map(|n| (format!("Z{n}"), family::cyclic_group(n).unwrap()))
        .collect();
    for (p, k) in [(2, 2), (2, 3), (3, 1), (5, 1), (7, 1)] {
        groups.push((
            format!("E({p},{k})"),
            family::elementary_abelian(p, k).unwrap(),
        ));
    }
    let z2z4 = direct_product(&z2, &family::cyclic(4).unwrap(), &lim()).unwrap();
    groups.push(("Z2xZ4".into(), FiniteGroup::new(z2z4.monoid).unwrap()));
    let mut pairs = 0;
    for (name, bt) in &groups {
        let subs = oracle_subgroups(bt);
        ensure!(
            subs.len() == ok(subgroups(bt, &lim()), "subgroups")?.len(),
            "{name}: subgroup count disagrees with the oracle"
        );
        for b in subs {
            let b: Vec<usize> = b.into_iter().collect();
            let kk = ok(krasner_kaloujnine(bt, &b, &lim()), name)?;
            let w = &kk.wreath;
            let coords: Vec<WreathElement> =
                bt.elements().map(|g| w.decode(kk.embed.apply(g))).collect();
            ensure!(
                kk.embed.is_injective(),
                "{name} B={b:?}: embedding not injective"
            );
            let act = |q: usize, n: usize| w.action().apply(q, n);
            for x in bt.elements() {
                for y in bt.elements() {
                    let want = oracle_wreath_mul(
                        w.top(),
                        |a, c| kk.h.mul(a, c),
                        act,
                        &coords[x],
                        &coords[y],
                    );
                    ensure!(
                        coords[bt.mul(x, y)] == want,
                        "{name} B={b:?}: not multiplicative at {x},{y}"
                    );
                }
            }
            // diagram (4): the coordinate at the coset B recovers B
            for (i, &x) in kk.subgroup_incl.map().iter().enumerate() {
                let z = kk
                    .embedded_b_incl
                    .map()
                    .iter()
                    .position(|&z| z == kk.embed.apply(x));
                ensure!(
                    z.map(|z| kk.tau.apply(z)) == Some(i),
                    "{name} B={b:?}: rho fails at {x}"
                );
            }
            ensure!(
                kk.tau.verify().is_ok() && kk.tau.is_bijective(),
                "{name} B={b:?}: rho not an isomorphism"
            );
            pairs += 1;
        }
    }
    Ok(format!("{} groups, {pairs} (B̃, B) pairs", groups.len()))
}

fn random_hom_into(
    rng: &mut StdRng,
    b: &FiniteGroup,
    catalog: &[FiniteGroup],
) -> (FiniteGroup, Homomorphism) {
    loop {
        match rng.gen_range(0..3) {
            0 => {
                let c = catalog.choose(rng).unwrap();
                if b.order() * c.order() > 16 {
                    continue;
                }
                let p = direct_product(b.monoid(), c.monoid(), &lim()).unwrap();
                return (FiniteGroup::new(p.monoid).unwrap(), p.left);
            }
            1 => {
                let g = catalog.choose(rng).unwrap().clone();
                let triv = vec![b.identity(); g.order()];
                let h = Homomorphism::new(g.monoid(), b.monoid(), triv).unwrap();
                return (g, h);
            }
            _ => {
                // a quotient of some group that happens to be isomorphic to B
                let g = catalog.choose(rng).unwrap().clone();
                for n in normal_subgroups(&g, &lim()).unwrap() {
                    let (q, proj) = mlab::embedding::quotient_by_normal(&g, &n).unwrap();
                    if let Some(iso) = mlab::is_isomorphic(q.monoid(), b.monoid(), &lim()).unwrap()
                    {
                        return (g, proj.compose(&iso).unwrap());
                    }
                }
            }
        }
    }
}

fn pullback_suite() -> Check {
    let mut rng = StdRng::seed_from_u64(0x5eed_0002);
    let catalog = small_groups(16).unwrap();
    for trial in 0..50 {
        let a = catalog.choose(&mut rng).unwrap().clone();
        let normals = normal_subgroups(&a, &lim()).unwrap();
        let n = normals.choose(&mut rng).unwrap();
        let (b, alpha) = mlab::embedding::quotient_by_normal(&a, n).unwrap();
        let (gi, psi) = random_hom_into(&mut rng, &b, &catalog);
        let pb = ok(pullback(&alpha, &psi, &lim()), "pullback")?;
        let expected: usize = b
            .elements()
            .map(|x| alpha.fiber(x).len() * psi.fiber(x).len())
            .sum();
        ensure!(
            pb.p.order() == expected,
            "trial {trial}: |P| = {} but fibres give {expected}",
            pb.p.order()
        );
        for x in pb.p.elements() {
            let (u, v) = pb.pairs[x];
            ensure!(
                alpha.apply(u) == psi.apply(v),
                "trial {trial}: pair {x} is off the fibre product"
            );
            ensure!(
                pb.psi_star.apply(x) == u && pb.alpha_prime.apply(x) == v,
                "trial {trial}: projections"
            );
        }
        ensure!(
            pb.square_commutes(&alpha, &psi),
            "trial {trial}: square does not commute"
        );
        let ka: Vec<usize> = a
            .elements()
            .filter(|&x| alpha.apply(x) == b.identity())
            .collect();
        ensure!(pb.ker_alpha.order() == ka.len(), "trial {trial}: |ker α|");
        ensure!(
            pb.kernel_iso.verify().is_ok() && pb.kernel_iso.is_bijective(),
            "trial {trial}: kernel iso"
        );
        // the explicit witness a ↦ (a, 1)
        let incl = pb.ker_alpha_prime_incl.map();
        for (i, &x) in ka.iter().enumerate() {
            let (u, v) = pb.pairs[incl[pb.kernel_iso.apply(i)]];
            ensure!(
                u == x && v == gi.identity(),
                "trial {trial}: witness sends {x} to ({u},{v})"
            );
        }
    }
    Ok("50 random pullbacks".into())
}

fn no_lift() -> Check {
    for p in [2, 3] {
        let zp = family::cyclic(p).unwrap();
        let id = Homomorphism::identity(&zp);
        let cands: Vec<Vec<usize>> = vec![(0..p * p).collect(); p];
        let alpha = mod_map(p * p, p);
        let prob = ok(EmbeddingProblem::new(&id, &alpha), "problem")?;
        let oracle = brute_maps(&cands, &mut |m| {
            is_hom(&zp, alpha.source(), m) && (0..p).all(|x| alpha.apply(m[x]) == x)
        });
        let found = ok(solve_weak(&prob, 1 << 20), "solve")?;
        ensure!(
            oracle == 0 && found.is_none(),
            "Z/{p}² over Z/{p}: expected no lift"
        );

        let split = direct_product(&zp, &zp, &lim()).unwrap();
        let prob = ok(EmbeddingProblem::new(&id, &split.left), "problem")?;
        let sol = ok(solve_weak(&prob, 1 << 20), "solve")?;
        ensure!(
            sol.as_ref().is_some_and(|s| prob.is_solved_by(&s.lift)),
            "Z/{p}×Z/{p}: expected a lift"
        );
    }
    Ok("p = 2, 3".into())
}

fn lemma1_transfer() -> Check {
    let z2 = family::cyclic(2).unwrap();
    let v = direct_product(&z2, &z2, &lim()).unwrap();
    let bt = FiniteGroup::new(v.monoid.clone()).unwrap();
    let incl = Homomorphism::new(&z2, &v.monoid, vec![v.pair(0, 0), v.pair(1, 0)]).unwrap();
    let id = Homomorphism::identity(&z2);

    let p = ok(EmbeddingProblem::new(&id, &mod_map(4, 2)), "problem")?;
    let t = ok(transfer_obstruction(&p, &bt, &incl, &lim()), "transfer")?;
    let k = t.problem.k.order();
    ensure!(
        t.kernel_embedding.is_injective() && t.kernel_power.order() == 4,
        "ker α̃ does not embed in K²"
    );
    ensure!(4 % k == 0, "|ker α̃| = {k} does not divide 4");
    ensure!(t.diagram_commutes(&p), "diagram (4) fails");
    let at = t.problem.a.monoid();
    let cands = vec![at.elements().collect::<Vec<_>>(); 2];
    let oracle = brute_maps(&cands, &mut |m| {
        is_hom(&z2, at, m) && (0..2).all(|x| t.problem.alpha.apply(m[x]) == t.problem.phi.apply(x))
    });
    ensure!(
        oracle == 0,
        "oracle found {oracle} lifts of the transferred problem"
    );
    ensure!(
        ok(solve_weak(&t.problem, 1 << 20), "solve")?.is_none(),
        "transferred problem solved"
    );

    let p = ok(EmbeddingProblem::new(&id, &v.left), "problem")?;
    let t = ok(transfer_obstruction(&p, &bt, &incl, &lim()), "transfer")?;
    let sol =
        ok(solve_weak(&t.problem, 1 << 20), "solve")?.ok_or("solvable instance has no lift")?;
    let back = ok(t.transport(&p, &sol), "transport")?;
    ensure!(
        p.is_solved_by(&back.lift) && back.lift.verify().is_ok(),
        "transported solution fails"
    );
    Ok(format!("|Ã| = {}, |ker α̃| = {k}", t.problem.a.order()))
}

fn schutz_suite() -> Check {
    let mut checked = 0;
    for n in 1..=5 {
        for m in ok(enumerate_monoids(n), "catalog")? {
            for e in m.idempotents() {
                let s = ok(schutz_structure(&m, e), "structure")?;
                // freeness and automorphism invariants, from the definition
                let r: Vec<usize> = m
                    .elements()
                    .filter(|&x| {
                        m.elements().any(|a| m.mul(e, a) == x)
                            && m.elements().any(|a| m.mul(x, a) == e)
                    })
                    .collect();
                ensure!(s.r == r, "R-class of {e} disagrees");
                for &h in s.h_incl.map() {
                    for &x in &r {
                        let hx = m.mul(h, x);
                        ensure!(r.contains(&hx), "h={h} moves {x} out of R");
                        ensure!(h == e || hx != x, "h={h} fixes {x}");
                        for a in m.elements() {
                            let xa = m.mul(x, a);
                            ensure!(
                                r.contains(&xa) == r.contains(&m.mul(hx, a)),
                                "h={h} breaks the action"
                            );
                        }
                    }
                }
                let (q, proj) = ok(faithful_r_quotient(&m, e), "quotient")?;
                let qe = proj.apply(e);
                let sq = ok(schutz_structure(&q, qe), "quotient structure")?;
                let emb = ok(schutz_embedding(&sq, &lim()), "embedding")?;
                ensure!(emb.embed.is_injective(), "embedding not injective");
                let w = &emb.wreath;
                let coords: Vec<WreathElement> =
                    q.elements().map(|x| w.decode(emb.embed.apply(x))).collect();
                let act = |p: usize, n: usize| w.action().apply(p, n);
                for x in q.elements() {
                    for y in q.elements() {
                        let want = oracle_wreath_mul(
                            &emb.h0,
                            |a, c| sq.n.mul(a, c),
                            act,
                            &coords[x],
                            &coords[y],
                        );
                        ensure!(
                            coords[q.mul(x, y)] == want,
                            "embedding not multiplicative at {x},{y}"
                        );
                    }
                }
                // diagram (6): reading the coordinate at He recovers H
                for (i, &x) in sq.h_incl.map().iter().enumerate() {
                    ensure!(coords[x].f[0] == i, "tau fails at {x}");
                }
                ensure!(emb.tau.is_bijective(), "tau not bijective");
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (M, e) pairs"))
}

fn expansion_suite() -> Check {
    let mut rng = StdRng::seed_from_u64(0x5eed_0006);
    let letters: Vec<char> = ('a'..='z').collect();
    let mut total = 0;
    let mut catalog = Vec::new();
    for n in 1..=4 {
        catalog.extend(ok(enumerate_monoids(n), "catalog")?);
    }
    let limits = Limits {
        size_cap: 1 << 16,
        ..lim()
    };
    for m in &catalog {
        let gens: Vec<(char, usize)> = m.elements().map(|x| (letters[x], x)).collect();
        let e = ok(henckell_expansion(m, &gens, &limits), "expansion")?;
        ensure!(
            e.eta.is_surjective(),
            "eta not onto for order {}",
            m.order()
        );
        ensure!(is_aperiodic_morphism(&e.eta).holds(), "eta not aperiodic");
        // aperiodic fibres, directly: no idempotent fibre has a non-trivial cycle
        for f in m.idempotents() {
            for x in e.eta.fiber(f) {
                let (x2, x3) = (e.exp.pow(x, e.exp.order()), e.exp.pow(x, e.exp.order() + 1));
                ensure!(x2 == x3, "fibre of {f} has a group element");
            }
        }
        total += e.exp.order();
    }
    let mut words = 0;
    while words < 200 {
        let m = catalog.choose(&mut rng).unwrap();
        let gens: Vec<(char, usize)> = m.elements().map(|x| (letters[x], x)).collect();
        let e = ok(henckell_expansion(m, &gens, &limits), "expansion")?;
        let word = |rng: &mut StdRng| -> Vec<usize> {
            let len = rng.gen_range(0..7);
            (0..len).map(|_| rng.gen_range(0..m.order())).collect()
        };
        let (u, v) = (word(&mut rng), word(&mut rng));
        let lift = |w: &[usize]| e.exp.product(w.iter().map(|&x| e.gen_lift[x].1));
        let product = e.exp.mul(lift(&u), lift(&v));
        let (pairs, value) = oracle_signature(m, &[u.clone(), v.clone()].concat());
        let got: &ExpansionElement = &e.elements[product];
        ensure!(
            got.pairs.iter().copied().collect::<BTreeSet<_>>() == pairs && got.m == value,
            "signature of {u:?}{v:?} disagrees"
        );
        words += 1;
    }
    Ok(format!(
        "{} monoids, Σ|exp| = {total}, 200 word pairs",
        catalog.len()
    ))
}

fn factorization() -> Check {
    let z2 = family::cyclic(2).unwrap();
    let gens = [('a', 1)];
    let wit = ok(factorization_witness(&z2, &gens, "a", 4), "witness")?;
    ensure!(
        (wit.k1, wit.x.as_str(), wit.y.as_str(), wit.k2) == (2, "a", "", 1),
        "Z/2: got ({}, {:?}, {:?}, {})",
        wit.k1,
        wit.x,
        wit.y,
        wit.k2
    );
    let eval = |m: &FiniteMonoid, gens: &[(char, usize)], w: &str| {
        m.product(w.chars().map(|c| gens.iter().find(|g| g.0 == c).unwrap().1))
    };
    let eq7 = |m: &FiniteMonoid,
               gens: &[(char, usize)],
               w: &str,
               k: usize,
               wit: &mlab::expansion::FactorizationWitness| {
        let whole = w.repeat(wit.k1) + &wit.x + &wit.y + &w.repeat(wit.k2);
        whole == w.repeat(k)
            && format!("{}{}", wit.x, wit.y) == w
            && eval(m, gens, &(w.repeat(wit.k1) + &wit.x)) == eval(m, gens, w)
            && eval(m, gens, &(wit.y.clone() + &w.repeat(wit.k2))) == eval(m, gens, w)
    };
    ensure!(eq7(&z2, &gens, "a", 4, &wit), "Eq. (7) fails for Z/2");

    let mut rng = StdRng::seed_from_u64(0x5eed_0007);
    let mut catalog = Vec::new();
    for n in 1..=4 {
        catalog.extend(enumerate_monoids(n).unwrap());
    }
    let letters = ['a', 'b', 'c', 'd'];
    let (mut found, mut group_checks) = (0, 0);
    while found < 20 {
        let m = catalog.choose(&mut rng).unwrap();
        let gens: Vec<(char, usize)> = m.elements().map(|x| (letters[x], x)).collect();
        let len = rng.gen_range(1..=3);
        let w: String = (0..len)
            .map(|_| letters[rng.gen_range(0..m.order())])
            .collect();
        let k = rng.gen_range(4..=7);
        let xs: Vec<usize> = w
            .chars()
            .map(|c| gens.iter().find(|g| g.0 == c).unwrap().1)
            .collect();
        let sig = |r: usize| oracle_signature(m, &xs.repeat(r));
        if sig(2) != sig(k) {
            continue;
        }
        let wit = ok(
            factorization_witness(m, &gens, &w, k),
            &format!("witness for {w}^{k}"),
        )?;
        ensure!(eq7(m, &gens, &w, k, &wit), "Eq. (7) fails for {w}^{k}");
        if !(wit.k1 <= 1 && wit.k2 <= 1) {
            ensure!(
                is_group_element(m, eval(m, &gens, &w)),
                "[{w}] is not a group element"
            );
            group_checks += 1;
        }
        found += 1;
    }
    Ok(format!(
        "Z/2 witness (2, a, ε, 1); 20 random instances, {group_checks} group-element checks"
    ))
}

fn is_band(s: &FiniteSemigroup) -> bool {
    s.originals().all(|x| s.mul(x, x) == x)
}

/// No multiplicative section of `phi`, by enumerating every choice in the
/// fibres.
fn oracle_no_section(
    cover: &FiniteSemigroup,
    subject: &FiniteSemigroup,
    phi: &Homomorphism,
) -> bool {
    let fibres: Vec<Vec<usize>> = subject
        .originals()
        .map(|s| cover.originals().filter(|&t| phi.apply(t) == s).collect())
        .collect();
    if fibres.iter().any(Vec::is_empty) {
        return false;
    }
    let sections = brute_maps(&fibres, &mut |m| {
        subject.originals().all(|a| {
            subject
                .originals()
                .all(|b| m[subject.mul(a, b)] == cover.mul(m[a], m[b]))
        })
    });
    sections == 0
}

fn band_scan() -> Check {
    let report = ok(band_theorem_scan(3, 4, &lim()), "scan")?;
    for e in &report.entries {
        let s = &e.verdict.subject;
        ensure!(
            e.is_band == is_band(s),
            "band flag wrong for {:?}",
            s.table()
        );
        match &e.verdict.outcome {
            Outcome::Witness { cover, phi, .. } => {
                let onto = s
                    .originals()
                    .all(|x| cover.originals().any(|t| phi.apply(t) == x));
                ensure!(
                    onto && phi.verify().is_ok(),
                    "witness map for {:?} is not an onto hom",
                    s.table()
                );
                ensure!(
                    oracle_no_section(cover, s, phi),
                    "witness for {:?} splits",
                    s.table()
                );
            }
            Outcome::NoWitnessUpToBound => {
                ensure!(e.is_band, "non-band {:?} has no witness", s.table())
            }
        }
        ensure!(e.status != ScanStatus::Inconclusive, "inconclusive entry");
    }
    for (name, s) in [
        ("left_zero(2)", family::left_zero(2).unwrap()),
        ("right_zero(2)", family::right_zero(2).unwrap()),
        (
            "chain_semilattice(3)",
            family::chain_semilattice(3).unwrap(),
        ),
    ] {
        let v = ok(projective_up_to_bound(&s, 4, &lim()), name)?;
        ensure!(!v.has_witness(), "{name} has a witness");
    }
    let non_bands = report.entries.iter().filter(|e| !e.is_band).count();
    Ok(format!(
        "{} subjects, {non_bands} non-bands all witnessed",
        report.entries.len()
    ))
}

fn footnote() -> Check {
    let m = family::zero_adjoined(&family::cyclic(2).unwrap());
    let s = ok(schutz_structure(&m, 0), "structure")?;
    let alpha = ok(
        Homomorphism::new(&family::cyclic(4).unwrap(), s.h.monoid(), vec![0, 1, 0, 1]),
        "alpha",
    )?;
    let t = ok(monoid_transfer(&s, &alpha, &lim()), "transfer")?;
    ensure!(t.diagram_commutes, "diagram (6) fails");
    let report = ok(subgroup_extension_check(&t.lambda, 2), "check")?;
    ensure!(report.all_pass(), "{:?}", report.verdicts);
    // independently: for each idempotent of M′, the λ-kernel inside its
    // group of units is a 2-group of exponent 2
    let mp = &t.mprime;
    for e in mp.idempotents() {
        let h: Vec<usize> = mp
            .elements()
            .filter(|&x| {
                mp.elements()
                    .any(|y| mp.mul(x, y) == e && mp.mul(y, x) == e)
                    && mp.mul(e, x) == x
                    && mp.mul(x, e) == x
            })
            .collect();
        let k: Vec<usize> = h
            .iter()
            .copied()
            .filter(|&x| t.lambda.apply(x) == t.lambda.apply(e))
            .collect();
        ensure!(
            k.iter().all(|&x| mp.mul(x, x) == e),
            "kernel at {e} is not elementary abelian"
        );
        ensure!(k.len().is_power_of_two(), "kernel at {e} is not a 2-group");
    }
    Ok(format!(
        "|M′| = {}, {} idempotents",
        mp.order(),
        report.verdicts.len()
    ))
}

fn frattini_suite() -> Check {
    let groups = ok(small_groups(16), "catalog")?;
    for g in &groups {
        let f = ok(frattini(g, &lim()), "frattini")?;
        let subs = oracle_subgroups(g);
        let proper: Vec<&BTreeSet<usize>> = subs.iter().filter(|s| s.len() < g.order()).collect();
        let maximal: Vec<&&BTreeSet<usize>> = proper
            .iter()
            .filter(|s| !proper.iter().any(|t| t.len() > s.len() && s.is_subset(t)))
            .collect();
        let phi: Vec<usize> = g
            .elements()
            .filter(|x| maximal.iter().all(|m| m.contains(x)))
            .collect();
        ensure!(
            f.subgroup == phi,
            "order {}: Φ disagrees with the oracle",
            g.order()
        );
        let q = g.order() / phi.len();
        let holds = (2..=phi.len())
            .filter(|p| phi.len().is_multiple_of(*p) && (2..*p).all(|d| p % d != 0))
            .all(|p| q.is_multiple_of(p));
        ensure!(
            holds && f.divisibility_holds,
            "order {}: divisibility fails",
            g.order()
        );
    }
    Ok(format!("{} groups", groups.len()))
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Check, Duration);
    let criteria: [Criterion; 10] = [
        (
            "1 Krasner–Kaloujnine suite",
            kk_suite,
            Duration::from_secs(60),
        ),
        ("2 pullback suite", pullback_suite, Duration::from_secs(30)),
        ("3 no-lift reproduction", no_lift, Duration::MAX),
        (
            "4 transfer along B ≤ B̃",
            lemma1_transfer,
            Duration::from_secs(60),
        ),
        (
            "5 Schützenberger suite",
            schutz_suite,
            Duration::from_secs(600),
        ),
        (
            "6 expansion suite",
            expansion_suite,
            Duration::from_secs(600),
        ),
        ("7 factorization witnesses", factorization, Duration::MAX),
        ("8 band scan", band_scan, Duration::from_secs(900)),
        ("9 subgroup extensions", footnote, Duration::MAX),
        ("10 Frattini divisibility", frattini_suite, Duration::MAX),
    ];
    let mut failed = 0;
    for (name, run, limit) in criteria {
        let start = Instant::now();
        let result = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        let (status, detail) = match result {
            Ok(_) if took > limit => ("FAIL", format!("took {took:.2?}, limit {limit:?}")),
            Ok(d) => ("PASS", d),
            Err(e) => ("FAIL", e),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("{status} criterion {name} [{took:.2?}]: {detail}");
    }
    println!("{} of 10 criteria passed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
