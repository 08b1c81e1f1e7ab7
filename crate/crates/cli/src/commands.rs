use clap::ValueEnum;
use serde_json::{json, Value};

use mlab::algebra::family::{self, family_from_parts, Family};
use mlab::algebra::{
    enumerate_monoids, enumerate_semigroups, greedy_generators, small_groups, Limits,
};
use mlab::embedding::{
    frattini, is_elementary_abelian, monoid_transfer, pullback, saturated_lift, solve_weak,
    subgroup_extension_check, transfer_obstruction, EmbeddingProblem,
};
use mlab::expansion::{evaluate, factorization_witness, henckell_expansion, is_aperiodic_morphism};
use mlab::greens::{classify, greens};
use mlab::projectivity::{band_theorem_scan, projective_up_to_bound, Outcome, ProjectivityVerdict};
use mlab::wreath::{
    faithful_r_quotient, krasner_kaloujnine, schutz_embedding, schutz_structure, wreath_product,
    SchutzStructure,
};
use mlab::{FiniteGroup, FiniteMonoid, FiniteSemigroup, Homomorphism, MonoidAction};

use crate::format::{self, HomFile, TableFile};
use crate::report::{eggbox_lines, table_lines, Record};
use crate::subject::{parse_list, resolve, resolve_group, resolve_map, resolve_monoid};
use crate::{Cli, CliError, Command, SubjectArgs};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CatalogKind {
    Semigroups,
    Monoids,
    Groups,
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

impl SubjectArgs {
    pub fn resolve(&self, limits: &Limits) -> Result<FiniteSemigroup, CliError> {
        match (&self.structure, self.family.as_deref()) {
            (Some(_), Some(_)) => Err(usage("give a structure or --family, not both")),
            (None, None) => Err(usage("a structure or --family is required")),
            (Some(s), None) => resolve(s, limits),
            (None, Some("zero_adjoined")) => {
                let of = self
                    .of
                    .as_deref()
                    .ok_or_else(|| usage("--family zero_adjoined needs --of"))?;
                match of.parse::<Family>() {
                    Ok(f) => Ok(Family::ZeroAdjoined(Box::new(f)).build(limits)?),
                    Err(_) => Ok(FiniteSemigroup::from_monoid(family::zero_adjoined(
                        resolve(of, limits)?.monoid(),
                    ))),
                }
            }
            (None, Some(name)) => Ok(self.family(name)?.build(limits)?),
        }
    }

    fn family(&self, name: &str) -> Result<Family, CliError> {
        let need = |v: Option<usize>, flag: &str| {
            v.ok_or_else(|| usage(format!("--family {name} needs --{flag}")))
        };
        let args = match name {
            "elementary_abelian" => vec![need(self.p, "p")?, need(self.k, "k")?],
            "monogenic" => vec![need(self.index, "index")?, need(self.period, "period")?],
            _ => vec![need(self.n, "n")?],
        };
        if args.contains(&0) {
            return Err(usage(format!(
                "--family {name}: parameters must be positive"
            )));
        }
        family_from_parts(name, &args).map_err(|e| usage(e.to_string()))
    }
}

fn rows_json(m: &FiniteMonoid) -> Value {
    json!(m.rows())
}

fn structure_record(kind: &'static str, s: &FiniteSemigroup) -> Record {
    let m = s.monoid();
    Record::new(kind)
        .field("order", m.order())
        .field("identity", m.identity())
        .field("identity_adjoined", s.identity_adjoined())
        .field("table", rows_json(m))
        .grid(table_lines(&m.rows()))
}

pub fn dispatch(cli: &Cli) -> Result<Vec<Record>, CliError> {
    let limits = cli.limits();
    let lim = &limits;
    match &cli.command {
        Command::Validate {
            files,
            source,
            target,
        } => validate(files, source.as_deref(), target.as_deref(), lim),
        Command::Family { subject, out } => {
            let s = subject.resolve(lim)?;
            if let Some(path) = out {
                format::save(path, &TableFile::Semigroup(s.clone()))?;
            }
            Ok(vec![structure_record("family", &s)])
        }
        Command::Greens { subject } => Ok(greens_report(&subject.resolve(lim)?)),
        Command::Classify { subject } => {
            let c = classify(&subject.resolve(lim)?);
            Ok(vec![Record::new("classify")
                .field("band", c.is_band)
                .field("completely_regular", c.is_completely_regular)
                .field("aperiodic", c.is_aperiodic)
                .field("group_elements", c.group_elements)])
        }
        Command::Schutz {
            subject,
            e,
            quotient,
        } => schutz(&subject.resolve(lim)?.into_monoid(), *e, *quotient, lim),
        Command::KkEmbed { btilde, b } => kk(btilde, b, lim),
        Command::Wreath { top, bottom, out } => {
            let top = resolve_monoid(top, lim)?;
            let bottom = resolve_monoid(bottom, lim)?;
            let w = wreath_product(&top, &MonoidAction::right_regular(&bottom), lim)?;
            let s = FiniteSemigroup::from_monoid(w.monoid.clone());
            if let Some(path) = out {
                format::save(path, &TableFile::Semigroup(s))?;
            }
            Ok(vec![Record::new("wreath")
                .field("top_order", top.order())
                .field("points", bottom.order())
                .field("acting_order", bottom.order())
                .field("order", w.monoid.order())
                .field("identity", w.monoid.identity())])
        }
        Command::Expand {
            subject,
            gens,
            word,
            power,
            elements,
        } => expand(
            &subject.resolve(lim)?.into_monoid(),
            gens,
            word.as_deref(),
            *power,
            *elements,
            lim,
        ),
        Command::Solve {
            g,
            b,
            a,
            phi,
            alpha,
        } => solve(g, b, a, phi, alpha, lim),
        Command::Pullback {
            a,
            g,
            b,
            alpha,
            psi,
        } => pullback_cmd(a, g, b, alpha, psi, lim),
        Command::Transfer {
            g,
            b,
            a,
            phi,
            alpha,
            btilde,
            embed,
        } => transfer(g, b, a, phi, alpha, btilde, embed, lim),
        Command::MonoidTransfer {
            subject,
            e,
            atilde,
            alpha,
            prime,
        } => monoid_transfer_cmd(
            &subject.resolve(lim)?.into_monoid(),
            *e,
            atilde,
            alpha,
            *prime,
            lim,
        ),
        Command::Frattini { subject } => {
            let g = FiniteGroup::new(subject.resolve(lim)?.into_monoid())?;
            let f = frattini(&g, lim)?;
            Ok(vec![Record::new("frattini")
                .field("group_order", g.order())
                .field("subgroup", f.subgroup.clone())
                .field("subgroup_order", f.subgroup.len())
                .field("quotient_order", f.quotient.order())
                .field("divisibility_holds", f.divisibility_holds)])
        }
        Command::Satlift {
            g,
            h,
            phi,
            class,
            prime,
        } => satlift(g, h, phi, class, *prime, lim),
        Command::Projcheck { subject, bound } => {
            let v = projective_up_to_bound(&subject.resolve(lim)?, *bound, lim)?;
            Ok(projectivity_records(&v))
        }
        Command::Bandscan { order, bound } => bandscan(*order, *bound, lim),
        Command::Enumerate { kind, n } => enumerate(*kind, *n),
    }
}

fn validate(
    files: &[std::path::PathBuf],
    source: Option<&str>,
    target: Option<&str>,
    lim: &Limits,
) -> Result<Vec<Record>, CliError> {
    let mut out = Vec::new();
    for path in files {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        let parsed = format::parse(&text)?;
        let canonical = format::render(&parsed) == text;
        let r = Record::new("validate").field("path", path.display().to_string());
        let r = match &parsed {
            TableFile::Semigroup(s) => r
                .field(
                    "kind",
                    if s.identity_adjoined() {
                        "semigroup"
                    } else {
                        "monoid"
                    },
                )
                .field("order", s.monoid().order())
                .field("identity", s.monoid().identity()),
            TableFile::Hom(h) => {
                check_hom_file(h, source, target, lim)?;
                r.field("kind", "hom")
                    .field("source_order", h.source_order)
                    .field("target_order", h.target_order)
                    .field("checked_against_structures", source.is_some())
            }
        };
        out.push(r.field("canonical", canonical).field("valid", true));
    }
    Ok(out)
}

fn check_hom_file(
    h: &HomFile,
    source: Option<&str>,
    target: Option<&str>,
    lim: &Limits,
) -> Result<(), CliError> {
    match (source, target) {
        (None, None) => Ok(()),
        (Some(s), Some(t)) => {
            let (s, t) = (resolve_monoid(s, lim)?, resolve_monoid(t, lim)?);
            if (s.order(), t.order()) != (h.source_order, h.target_order) {
                return Err(usage("structure orders do not match the hom header"));
            }
            Homomorphism::new(&s, &t, h.map.clone())?;
            Ok(())
        }
        _ => Err(usage("--source and --target go together")),
    }
}

fn greens_report(s: &FiniteSemigroup) -> Vec<Record> {
    let m = s.monoid();
    let g = greens(m);
    let mut out = vec![Record::new("greens")
        .field("order", m.order())
        .field("identity_adjoined", s.identity_adjoined())
        .field("r_classes", json!(g.r_classes()))
        .field("l_classes", json!(g.l_classes()))
        .field("h_classes", json!(g.h_classes()))
        .field("j_classes", json!(g.j_classes()))
        .field("idempotents", g.idempotents().to_vec())];
    let mut labels: Vec<usize> = g.j_class_of().to_vec();
    labels.sort_unstable();
    labels.dedup();
    for j in labels {
        let cells = g.eggbox(j);
        let elements: Vec<usize> = m.elements().filter(|&x| g.j_class_of()[x] == j).collect();
        let regular = elements.iter().any(|x| g.idempotents().contains(x));
        out.push(
            Record::new("j_class")
                .field("elements", elements)
                .field("regular", regular)
                .field("rows", cells.len())
                .field("columns", cells.first().map_or(0, Vec::len))
                .field("cells", json!(cells))
                .grid(eggbox_lines(&cells, g.idempotents())),
        );
    }
    out
}

fn schutz_records(s: &SchutzStructure) -> Vec<Record> {
    let mut out = vec![Record::new("schutz")
        .field("order", s.m.order())
        .field("idempotent", s.e)
        .field("r_class", s.r.clone())
        .field("h_class", s.h_incl.map().to_vec())
        .field("h_order", s.h.order())
        .field("orbit_representatives", s.reps.clone())
        .field("star", s.star())
        .field("acting_order", s.n.order())];
    for x in s.m.elements() {
        let c = s.coordinates(x);
        out.push(
            Record::new("schutz_coordinates")
                .field("element", x)
                .field("f", c.f)
                .field("n", c.n),
        );
    }
    out
}

fn schutz(
    m: &FiniteMonoid,
    e: usize,
    quotient: bool,
    lim: &Limits,
) -> Result<Vec<Record>, CliError> {
    let mut out = Vec::new();
    let (m, e) = if quotient {
        let (q, proj) = faithful_r_quotient(m, e)?;
        out.push(
            Record::new("faithful_quotient")
                .field("order", q.order())
                .field("projection", proj.map().to_vec())
                .field("table", rows_json(&q)),
        );
        let qe = proj.apply(e);
        (q, qe)
    } else {
        (m.clone(), e)
    };
    let s = schutz_structure(&m, e)?;
    let emb = schutz_embedding(&s, lim)?;
    out.extend(schutz_records(&s));
    let diagram = s
        .h_incl
        .map()
        .iter()
        .enumerate()
        .all(|(i, &x)| emb.wreath.decode(emb.embed.apply(x)).f[0] == i);
    out.push(
        Record::new("schutz_embedding")
            .field("wreath_order", emb.wreath.monoid.order())
            .field("h0_order", emb.h0.order())
            .field("injective", emb.embed.is_injective())
            .field("multiplicative", emb.embed.verify().is_ok())
            .field("image", emb.embed.map().to_vec())
            .field("diagram_commutes", diagram && emb.tau.is_bijective()),
    );
    Ok(out)
}

fn kk(btilde: &str, b: &str, lim: &Limits) -> Result<Vec<Record>, CliError> {
    let bt = resolve_group(btilde, lim)?;
    let mut sub = parse_list(b, bt.order())?;
    sub.sort_unstable();
    sub.dedup();
    let kk = krasner_kaloujnine(&bt, &sub, lim)?;
    let rho_ok = kk.subgroup_incl.map().iter().enumerate().all(|(i, &x)| {
        let z = kk
            .embedded_b_incl
            .map()
            .iter()
            .position(|&z| z == kk.embed.apply(x));
        z.map(|z| kk.tau.apply(z)) == Some(i)
    });
    let mut out = vec![Record::new("kk_embedding")
        .field("btilde_order", bt.order())
        .field("subgroup", kk.subgroup_incl.map().to_vec())
        .field("coset_representatives", kk.reps.clone())
        .field("acting_order", kk.h.order())
        .field("wreath_order", kk.wreath.monoid.order())
        .field("injective", kk.embed.is_injective())
        .field("multiplicative", kk.embed.verify().is_ok())
        .field("rho_is_homomorphism", rho_ok && kk.tau.verify().is_ok())];
    for g in bt.elements() {
        let c = kk.coordinates(&bt, g);
        out.push(
            Record::new("kk_coordinates")
                .field("element", g)
                .field("f", c.f)
                .field("n", c.n),
        );
    }
    Ok(out)
}

/// `a,b` takes the greedy generators in order; `a=1,b=2` is explicit.
fn parse_gens(spec: &str, m: &FiniteMonoid) -> Result<Vec<(char, usize)>, CliError> {
    let parts: Vec<&str> = spec
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect();
    let letter = |s: &str| {
        let mut cs = s.chars();
        match (cs.next(), cs.next()) {
            (Some(c), None) => Ok(c),
            _ => Err(usage(format!("`{s}` is not a single-letter label"))),
        }
    };
    if parts.iter().any(|p| p.contains('=')) {
        return parts
            .iter()
            .map(|p| {
                let (l, v) = p
                    .split_once('=')
                    .ok_or_else(|| usage(format!("`{p}` lacks `=value`")))?;
                let v = parse_list(v, m.order())?;
                match v.as_slice() {
                    [x] => Ok((letter(l)?, *x)),
                    _ => Err(usage(format!("`{p}` needs exactly one value"))),
                }
            })
            .collect();
    }
    let greedy = greedy_generators(m);
    if parts.len() != greedy.len() {
        return Err(usage(format!(
            "{} labels given but the greedy generating set {:?} has {}; use `a=1,b=2`",
            parts.len(),
            greedy,
            greedy.len()
        )));
    }
    parts
        .iter()
        .zip(greedy)
        .map(|(p, x)| Ok((letter(p)?, x)))
        .collect()
}

fn expand(
    m: &FiniteMonoid,
    gens: &str,
    word: Option<&str>,
    power: Option<usize>,
    elements: bool,
    lim: &Limits,
) -> Result<Vec<Record>, CliError> {
    let gens = parse_gens(gens, m)?;
    let e = henckell_expansion(m, &gens, lim)?;
    let report = is_aperiodic_morphism(&e.eta);
    let mut out = vec![Record::new("expansion")
        .field("order", e.exp.order())
        .field("monoid_order", m.order())
        .field(
            "generators",
            json!(gens
                .iter()
                .map(|(c, x)| json!({"label": c.to_string(), "value": x}))
                .collect::<Vec<_>>()),
        )
        .field("eta_surjective", e.eta.is_surjective())
        .field("eta_aperiodic_morphism", report.holds())
        .ser("fibers", &report.fibers)];
    if elements {
        for (i, el) in e.elements.iter().enumerate() {
            out.push(
                Record::new("expansion_element")
                    .field("index", i)
                    .field("value", el.m)
                    .ser("pairs", &el.pairs),
            );
        }
    }
    match (word, power) {
        (Some(w), Some(k)) => {
            let wit = factorization_witness(m, &gens, w, k)?;
            let value = evaluate(m, &gens, w)?;
            let (index, _) = m.index_period(value);
            out.push(
                Record::new("factorization")
                    .field("word", w)
                    .field("power", k)
                    .field("k1", wit.k1)
                    .field("x", wit.x.as_str())
                    .field("y", wit.y.as_str())
                    .field("k2", wit.k2)
                    .field("group_element", index == 1),
            );
        }
        (None, None) => {}
        _ => return Err(usage("--word and --power go together")),
    }
    Ok(out)
}

fn problem(
    g: &str,
    b: &str,
    a: &str,
    phi: &str,
    alpha: &str,
    lim: &Limits,
) -> Result<EmbeddingProblem, CliError> {
    let (g, b, a) = (
        resolve_group(g, lim)?,
        resolve_group(b, lim)?,
        resolve_group(a, lim)?,
    );
    let phi = resolve_map(phi, g.monoid(), b.monoid())?;
    let alpha = resolve_map(alpha, a.monoid(), b.monoid())?;
    Ok(EmbeddingProblem::new(&phi, &alpha)?)
}

fn solution_record(kind: &'static str, sol: Option<&Homomorphism>) -> Record {
    let r = Record::new(kind);
    match sol {
        Some(l) => r
            .field("verdict", "weak solution")
            .field("lift", l.map().to_vec()),
        None => r.field("verdict", "no weak solution"),
    }
}

fn solve(
    g: &str,
    b: &str,
    a: &str,
    phi: &str,
    alpha: &str,
    lim: &Limits,
) -> Result<Vec<Record>, CliError> {
    let p = problem(g, b, a, phi, alpha, lim)?;
    let sol = solve_weak(&p, lim.budget)?;
    Ok(vec![
        Record::new("embedding_problem")
            .field("g_order", p.g.order())
            .field("b_order", p.b.order())
            .field("a_order", p.a.order())
            .field("kernel_order", p.k.order()),
        solution_record("solution", sol.as_ref().map(|s| &s.lift)),
    ])
}

fn pullback_cmd(
    a: &str,
    g: &str,
    b: &str,
    alpha: &str,
    psi: &str,
    lim: &Limits,
) -> Result<Vec<Record>, CliError> {
    let (a, g, b) = (
        resolve_group(a, lim)?,
        resolve_group(g, lim)?,
        resolve_group(b, lim)?,
    );
    let alpha = resolve_map(alpha, a.monoid(), b.monoid())?;
    let psi = resolve_map(psi, g.monoid(), b.monoid())?;
    let pb = pullback(&alpha, &psi, lim)?;
    Ok(vec![Record::new("pullback")
        .field("order", pb.p.order())
        .field("pairs", json!(pb.pairs))
        .field("square_commutes", pb.square_commutes(&alpha, &psi))
        .field("ker_alpha_order", pb.ker_alpha.order())
        .field("ker_alpha_prime_order", pb.ker_alpha_prime.order())
        .field("kernel_iso", pb.kernel_iso.map().to_vec())
        .field(
            "kernel_iso_bijective",
            pb.kernel_iso.is_bijective(),
        )])
}

#[allow(clippy::too_many_arguments)]
fn transfer(
    g: &str,
    b: &str,
    a: &str,
    phi: &str,
    alpha: &str,
    btilde: &str,
    embed: &str,
    lim: &Limits,
) -> Result<Vec<Record>, CliError> {
    let p = problem(g, b, a, phi, alpha, lim)?;
    let bt = resolve_group(btilde, lim)?;
    let incl = resolve_map(embed, p.b.monoid(), bt.monoid())?;
    let t = transfer_obstruction(&p, &bt, &incl, lim)?;
    let k = t.problem.k.order();
    let mut out = vec![Record::new("transfer")
        .field("btilde_order", bt.order())
        .field("cosets", t.kk.reps.len())
        .field("atilde_order", t.problem.a.order())
        .field("kernel_order", k)
        .field("kernel_power_order", t.kernel_power.order())
        .field("kernel_embeds", t.kernel_embedding.is_injective())
        .field("aprime_order", t.aprime.order())
        .field("diagram_commutes", t.diagram_commutes(&p))];
    let sol = solve_weak(&t.problem, lim.budget)?;
    out.push(solution_record(
        "transferred_solution",
        sol.as_ref().map(|s| &s.lift),
    ));
    if let Some(sol) = sol {
        let back = t.transport(&p, &sol)?;
        out.push(
            solution_record("transported_solution", Some(&back.lift))
                .field("verifies", p.is_solved_by(&back.lift)),
        );
    }
    Ok(out)
}

fn monoid_transfer_cmd(
    m: &FiniteMonoid,
    e: usize,
    atilde: &str,
    alpha: &str,
    prime: usize,
    lim: &Limits,
) -> Result<Vec<Record>, CliError> {
    let s = schutz_structure(m, e)?;
    let at = resolve_group(atilde, lim)?;
    let alpha = resolve_map(alpha, at.monoid(), s.h.monoid())?;
    let t = monoid_transfer(&s, &alpha, lim)?;
    let report = subgroup_extension_check(&t.lambda, prime)?;
    let mut out = vec![
        Record::new("monoid_transfer")
            .field("mprime_order", t.mprime.order())
            .field("lambda", t.lambda.map().to_vec())
            .field("aprime_order", t.aprime.size())
            .field("aprime_identity_adjoined", t.aprime.identity_adjoined())
            .field("rho_surjective", t.rho.is_surjective())
            .field("diagram_commutes", t.diagram_commutes),
        Record::new("subgroup_extension")
            .field("prime", prime)
            .field("all_pass", report.all_pass()),
    ];
    for v in &report.verdicts {
        out.push(
            Record::new("idempotent_check")
                .ser("check", v)
                .field("passes", v.passes()),
        );
    }
    Ok(out)
}

fn satlift(
    g: &str,
    h: &str,
    phi: &str,
    class: &str,
    prime: Option<usize>,
    lim: &Limits,
) -> Result<Vec<Record>, CliError> {
    let (g, h) = (resolve_group(g, lim)?, resolve_group(h, lim)?);
    let phi = resolve_map(phi, g.monoid(), h.monoid())?;
    if !phi.is_surjective() {
        return Err(mlab::Error::NotSurjective.into());
    }
    let need_prime = || prime.ok_or_else(|| usage(format!("--class {class} needs --prime")));
    let member: Box<dyn Fn(&FiniteGroup) -> bool> = match class {
        "all" => Box::new(|_| true),
        "abelian" => Box::new(|x| x.is_abelian()),
        "elementary-abelian" => {
            let p = need_prime()?;
            Box::new(move |x| is_elementary_abelian(x).is_some_and(|ep| ep.admits(p)))
        }
        "p-group" => {
            let p = need_prime()?;
            Box::new(move |x| {
                let mut n = x.order();
                while n % p == 0 {
                    n /= p;
                }
                n == 1
            })
        }
        other => return Err(usage(format!("unknown class `{other}`"))),
    };
    let chosen = saturated_lift(&phi, &*member, lim)?;
    let r = Record::new("saturated_lift")
        .field("class", class)
        .field("found", chosen.is_some());
    Ok(vec![match chosen {
        Some(c) => r
            .field("elements", c.elements.clone())
            .field("order", c.group.order()),
        None => r,
    }])
}

fn projectivity_records(v: &ProjectivityVerdict) -> Vec<Record> {
    let s = &v.subject;
    let head = Record::new("projectivity")
        .field("subject_order", s.size())
        .field("subject_table", json!(s.table()))
        .field("bound", v.bound)
        .field("covers_checked", v.covers_checked);
    match &v.outcome {
        Outcome::NoWitnessUpToBound => vec![head.field("outcome", "no witness up to bound").field(
            "note",
            "absence of a witness within the bound does not prove projectivity",
        )],
        Outcome::Witness { cover, phi, source } => {
            let (cm, sm) = (cover.monoid(), s.monoid());
            // an element s of period p and index i can only go to t with
            // t^(i+p) = t^i; an empty candidate list is a local obstruction
            let fibres: Vec<Value> = s
                .originals()
                .map(|x| {
                    let fibre: Vec<usize> =
                        cover.originals().filter(|&t| phi.apply(t) == x).collect();
                    let (i, p) = sm.index_period(x);
                    let local: Vec<usize> = fibre
                        .iter()
                        .copied()
                        .filter(|&t| cm.pow(t, i + p) == cm.pow(t, i))
                        .collect();
                    json!({"element": x, "fiber": fibre, "local_candidates": local})
                })
                .collect();
            let local_failure = fibres
                .iter()
                .any(|f| f["local_candidates"].as_array().is_some_and(Vec::is_empty));
            let explanation = if local_failure {
                "some fibre has no element satisfying the relation of its image, so no section exists"
            } else {
                "every fibre has local candidates but no choice of one per fibre is multiplicative"
            };
            vec![
                head.field("outcome", "witness"),
                Record::new("witness")
                    .ser("source", source)
                    .field("cover_order", cover.size())
                    .field("cover_identity_adjoined", cover.identity_adjoined())
                    .field("cover_table", json!(cover.table()))
                    .field("phi", phi.map()[..cover.size()].to_vec())
                    .field("fibers", Value::Array(fibres))
                    .field("explanation", explanation)
                    .grid(table_lines(&cover.table())),
            ]
        }
    }
}

fn bandscan(order: usize, bound: usize, lim: &Limits) -> Result<Vec<Record>, CliError> {
    if order == 0 {
        return Err(usage("--order must be positive"));
    }
    let report = band_theorem_scan(order, bound, lim)?;
    let mut out: Vec<Record> = report
        .entries
        .iter()
        .map(|e| {
            Record::new("bandscan_entry")
                .field("order", e.order)
                .field("index", e.index)
                .field("band", e.is_band)
                .field("witness", e.verdict.has_witness())
                .field("covers_checked", e.verdict.covers_checked)
                .ser("status", &e.status)
        })
        .collect();
    out.push(
        Record::new("bandscan")
            .field("max_order", order)
            .field("bound", bound)
            .field("subjects", report.entries.len())
            .field(
                "non_bands",
                report.entries.iter().filter(|e| !e.is_band).count(),
            )
            .field("consistent_with_theorem", report.consistent_with_theorem()),
    );
    Ok(out)
}

fn enumerate(kind: CatalogKind, n: usize) -> Result<Vec<Record>, CliError> {
    if n == 0 {
        return Err(usage(
            "--n must be positive: the catalog of order 0 is empty by definition",
        ));
    }
    let items: Vec<FiniteSemigroup> = match kind {
        CatalogKind::Semigroups => enumerate_semigroups(n)?,
        CatalogKind::Monoids => enumerate_monoids(n)?
            .into_iter()
            .map(FiniteSemigroup::from_monoid)
            .collect(),
        CatalogKind::Groups => small_groups(n)?
            .into_iter()
            .filter(|g| g.order() == n)
            .map(|g| FiniteSemigroup::from_monoid(g.into_monoid()))
            .collect(),
    };
    let name = match kind {
        CatalogKind::Semigroups => "semigroups",
        CatalogKind::Monoids => "monoids",
        CatalogKind::Groups => "groups",
    };
    let mut out = vec![Record::new("enumerate")
        .field("kind", name)
        .field("n", n)
        .field("count", items.len())];
    for (i, s) in items.iter().enumerate() {
        out.push(
            Record::new("catalog_entry")
                .field("index", i)
                .field("table", json!(s.table()))
                .grid(table_lines(&s.table())),
        );
    }
    Ok(out)
}
