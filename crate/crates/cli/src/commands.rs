use std::fs;
use std::path::Path;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use twistcox::classify::{classify, irreducible_spherical_subsets, is_fc, is_spherical};
use twistcox::complexity::complexity_terms;
use twistcox::search::angle_compatible_check;
use twistcox::twist::{
    all_equivalents_3_rigid, apply_twist_generators, canonical_form, canonical_key,
    enumerate_twists, is_k_rigid, rigidity_witness, twist_class, weakly_separates,
};
use twistcox::{
    complexity, find_conjugator, minimize_complexity, verify, CoxError, DefiningGraph, Element,
    ElementaryTwist, GeneratingSet, Group, Label, SearchLimits,
};

use crate::error::{CliError, CliResult};
use crate::format::{parse_instance, parse_words, serialize_instance};
use crate::report::{Report, Status};
use crate::{Command, GlobalOpts};

pub fn dispatch(cmd: &Command, opts: &GlobalOpts, echo: &str) -> CliResult<Report> {
    let mut r = Report::new(echo, *opts);
    match cmd {
        Command::Classify { file } => classify_cmd(&mut r, &load(file)?),
        Command::Fc { file } => {
            r.line(format!("FC: {}", is_fc(&load(file)?)));
            Ok(())
        }
        Command::Rigidity { file, k } => rigidity_cmd(&mut r, &load(file)?, *k),
        Command::Twists { file } => twists_cmd(&mut r, &load(file)?),
        Command::TwistClass { file } => twist_class_cmd(&mut r, &load(file)?, opts),
        Command::Apply {
            file,
            j,
            b,
            out,
            words_out,
        } => apply_cmd(
            &mut r,
            &load(file)?,
            j,
            b,
            out.as_deref(),
            words_out.as_deref(),
            opts,
        ),
        Command::Complexity { reference, words } => complexity_cmd(&mut r, reference, words, opts),
        Command::Minimize {
            reference,
            words,
            beam,
        } => minimize_cmd(&mut r, reference, words, *beam, opts),
        Command::Verify { name } => verify_cmd(&mut r, name, opts),
        Command::FindInstances {
            max_n,
            labels,
            filter,
            out,
        } => find_instances_cmd(&mut r, *max_n, labels, filter, out.as_deref(), opts),
        Command::Scramble {
            file,
            steps,
            words_out,
        } => scramble_cmd(&mut r, &load(file)?, *steps, words_out.as_deref(), opts),
    }?;
    Ok(r)
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn write(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn load(path: &Path) -> CliResult<DefiningGraph> {
    parse_instance(&read(path)?)
}

fn classify_cmd(r: &mut Report, g: &DefiningGraph) -> CliResult<()> {
    let mut subsets: Vec<_> = g.all().subsets().filter(|s| !s.is_empty()).collect();
    subsets.sort_by(|a, b| a.len().cmp(&b.len()).then(a.label_cmp(*b)));
    for s in subsets {
        r.line(format!("{}: {}", g.fmt_set(s), classify(g, s)));
    }
    Ok(())
}

fn rigidity_cmd(r: &mut Report, g: &DefiningGraph, k: usize) -> CliResult<()> {
    match rigidity_witness(g, k) {
        None => r.line(format!("{k}-rigid: true")),
        Some(j) => r.line(format!("{k}-rigid: false; witness J={}", g.fmt_set(j))),
    }
    Ok(())
}

fn twists_cmd(r: &mut Report, g: &DefiningGraph) -> CliResult<()> {
    let twists = enumerate_twists(g);
    r.line(format!("twists: {}", twists.len()));
    for tau in twists {
        let note = if tau.j.len() >= 3 {
            " (|J| >= 3, never used as a search move)"
        } else {
            ""
        };
        r.line(format!("{}{note}", tau.display(g)));
    }
    Ok(())
}

fn twist_class_cmd(r: &mut Report, g: &DefiningGraph, opts: &GlobalOpts) -> CliResult<()> {
    let class = twist_class(g, opts.cap)?;
    r.block(&class.to_string());
    if class.complete {
        r.line(format!(
            "all members 3-rigid: {}",
            class.members.iter().all(|m| is_k_rigid(m, 3))
        ));
    } else {
        r.mark(Status::Exhausted);
    }
    Ok(())
}

fn apply_cmd(
    r: &mut Report,
    g: &DefiningGraph,
    j: &[String],
    b: &[String],
    out: Option<&Path>,
    words_out: Option<&Path>,
    opts: &GlobalOpts,
) -> CliResult<()> {
    let names = |v: &[String]| -> CliResult<_> {
        let refs: Vec<&str> = v.iter().map(String::as_str).collect();
        g.subset(&refs)
            .map_err(|e| CliError::Input(format!("invalid twist spec: {e}")))
    };
    let tau = ElementaryTwist {
        j: names(j)?,
        b: names(b)?,
    };
    let group = Group::new(g.clone());
    let gs = GeneratingSet::standard(&group, opts.params());
    let twisted = apply_twist_generators(&gs, tau)
        .map_err(|e| CliError::Input(format!("invalid twist spec: {e}")))?;
    let instance = serialize_instance(twisted.graph());
    let words = twisted.word_lines().join("\n") + "\n";
    r.line(format!("twist: {}", tau.display(g)));
    r.line("instance:");
    r.block(&instance);
    r.line("words:");
    r.block(&words);
    if let Some(p) = out {
        write(p, &instance)?;
    }
    if let Some(p) = words_out {
        write(p, &words)?;
    }
    Ok(())
}

fn load_set<'g>(group: &'g Group, words: &Path, opts: &GlobalOpts) -> CliResult<GeneratingSet<'g>> {
    let (names, elements) = parse_words(&read(words)?, group)?;
    let gs = GeneratingSet::from_elements(group, &names, elements, opts.params())?;
    gs.check_pipeline()?;
    Ok(gs)
}

fn standard_elements(group: &Group) -> Vec<Element> {
    group.graph().gens().map(|x| group.generator(x)).collect()
}

fn complexity_cmd(
    r: &mut Report,
    reference: &Path,
    words: &Path,
    opts: &GlobalOpts,
) -> CliResult<()> {
    let group = Group::new(load(reference)?);
    let gs = load_set(&group, words, opts)?;
    describe_set(r, &gs, opts);
    let terms = complexity_terms(&gs)?;
    for t in &terms {
        r.line(format!(
            "L={} I={}: d(C_L,C_I)={} d(E_LI,E_IL)={}",
            gs.graph().fmt_set(t.l),
            gs.graph().fmt_set(t.i),
            t.cell_distance,
            t.e_distance
        ));
    }
    r.line(format!("K = {}", complexity(&gs)?));
    Ok(())
}

fn describe_set(r: &mut Report, gs: &GeneratingSet, opts: &GlobalOpts) {
    r.line(format!("3-rigid: {}", is_k_rigid(gs.graph(), 3)));
    let verdict = match angle_compatible_check(gs, &standard_elements(gs.ambient()), opts.radius) {
        Ok(b) => b.to_string(),
        Err(e) => format!("inconclusive ({e})"),
    };
    r.line(format!("angle-compatible: {verdict}"));
}

fn minimize_cmd(
    r: &mut Report,
    reference: &Path,
    words: &Path,
    beam: Option<usize>,
    opts: &GlobalOpts,
) -> CliResult<()> {
    let group = Group::new(load(reference)?);
    let gs = load_set(&group, words, opts)?;
    describe_set(r, &gs, opts);
    let limits = SearchLimits {
        depth: opts.depth,
        beam,
        cap: opts.cap,
    };
    let out = minimize_complexity(&gs, limits)?;
    r.line(format!("start K = {}", out.start_value));
    let mut current = GeneratingSet::with_graph(
        &group,
        gs.graph().clone(),
        gs.elements().to_vec(),
        opts.params(),
    )?;
    for (i, &tau) in out.sequence.iter().enumerate() {
        let shown = tau.display(current.graph());
        current = apply_twist_generators(&current, tau)?;
        r.line(format!(
            "step {}: {shown} -> K = {}",
            i + 1,
            complexity(&current)?
        ));
    }
    r.line(format!("final K = {}", out.value));
    r.line(format!(
        "evaluated: {}; complete: {}; skipped |J|>=3 twists: {}; exhausted nodes: {}",
        out.evaluated, out.complete, out.skipped_large, out.exhausted
    ));
    r.line("words:");
    r.block(&out.best.word_lines().join("\n"));
    let reached = out.value == twistcox::ComplexityValue::default();
    match find_conjugator(
        &group,
        out.best.elements(),
        &standard_elements(&group),
        opts.radius,
        opts.cap,
    ) {
        Ok(w) => r.line(format!(
            "conjugator: {} (length {})",
            display_word(&group, w),
            group.length(w)
        )),
        Err(CoxError::RadiusExhausted { radius }) => {
            r.line(format!("conjugator: none within radius {radius}"));
            if reached {
                r.mark(Status::Exhausted);
            }
        }
        Err(e) => return Err(e.into()),
    }
    if !reached && !out.complete {
        r.mark(Status::Exhausted);
    }
    Ok(())
}

fn display_word(g: &Group, w: Element) -> String {
    if g.is_identity(w) {
        "identity".into()
    } else {
        g.fmt(w)
    }
}

fn verify_cmd(r: &mut Report, name: &str, opts: &GlobalOpts) -> CliResult<()> {
    let names: Vec<&str> = if name == "all" {
        verify::CHECKS.to_vec()
    } else {
        vec![name]
    };
    for n in names {
        let report = verify::run(n, opts.params()).map_err(|e| match e {
            CoxError::Invalid(m) => CliError::Input(m),
            other => CliError::Core(other),
        })?;
        r.block(&report.to_string());
        if !report.passed() {
            r.mark(Status::VerificationFailed);
        }
    }
    Ok(())
}

const MAX_FIND_RANK: usize = 7;

fn find_instances_cmd(
    r: &mut Report,
    max_n: usize,
    labels: &[u32],
    filters: &[String],
    out: Option<&Path>,
    opts: &GlobalOpts,
) -> CliResult<()> {
    if max_n > MAX_FIND_RANK {
        return Err(CliError::Input(format!(
            "max-n must be at most {MAX_FIND_RANK}"
        )));
    }
    if let Some(bad) = labels.iter().find(|&&m| m < 2) {
        return Err(CliError::Input(format!("label {bad} below 2")));
    }
    if let Some(bad) = filters.iter().find(|f| f.as_str() != "dihedral-twistable") {
        return Err(CliError::Input(format!(
            "unknown filter {bad:?}; known: dihedral-twistable"
        )));
    }
    let twistable_only = !filters.is_empty();
    let mut options: Vec<Label> = vec![Label::Infinite];
    let mut sorted = labels.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    options.extend(sorted.into_iter().map(Label::Finite));

    let mut found: Vec<(Vec<u32>, DefiningGraph, bool)> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    let mut examined = 0usize;
    let mut partial = false;
    'sizes: for n in 1..=max_n {
        let names: Vec<String> = (1..=n).map(|i| format!("s{i}")).collect();
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .collect();
        let mut digits = vec![0usize; pairs.len()];
        loop {
            examined += 1;
            if examined > opts.cap {
                partial = true;
                break 'sizes;
            }
            let mut g = DefiningGraph::new(&names)?;
            for (&(a, b), &d) in pairs.iter().zip(&digits) {
                g.set_label(twistcox::Gen(a as u8), twistcox::Gen(b as u8), options[d])?;
            }
            let all = g.all();
            if g.is_irreducible(all) && !is_spherical(&g, all) && is_fc(&g) {
                let key = canonical_key(&g)?;
                if seen.insert(key.clone()) {
                    match all_equivalents_3_rigid(&g, opts.cap) {
                        Ok(true) => {
                            let twistable = irreducible_spherical_subsets(&g)
                                .into_iter()
                                .any(|j| j.len() == 2 && weakly_separates(&g, j));
                            if twistable || !twistable_only {
                                found.push((key, canonical_form(&g)?, twistable));
                            }
                        }
                        Ok(false) => {}
                        Err(CoxError::CapExhausted { .. }) => partial = true,
                        Err(e) => return Err(e.into()),
                    }
                }
            }
            if !advance(&mut digits, options.len()) {
                break;
            }
        }
    }
    found.sort_by(|a, b| (a.1.rank(), &a.0).cmp(&(b.1.rank(), &b.0)));
    r.line(format!(
        "examined labelled graphs: {examined}{}",
        if partial {
            " (partial: cap reached)"
        } else {
            ""
        }
    ));
    r.line(format!("instances: {}", found.len()));
    let mut catalog = String::new();
    for (i, (key, g, twistable)) in found.iter().enumerate() {
        let key: Vec<String> = key
            .iter()
            .map(|m| if *m == 0 { "-".into() } else { m.to_string() })
            .collect();
        let flags =
            format!("fc irreducible non-spherical all-3-rigid dihedral-twistable={twistable}");
        r.line(format!(
            "#{}: rank {} key [{}] {flags}",
            i + 1,
            g.rank(),
            key.join(" ")
        ));
        catalog.push_str(&format!(
            "# instance {} key [{}] {flags}\n",
            i + 1,
            key.join(" ")
        ));
        catalog.push_str(&serialize_instance(g));
        catalog.push('\n');
    }
    match out {
        Some(p) => write(p, &catalog)?,
        None => {
            r.line("catalog:");
            r.block(&catalog);
        }
    }
    if partial {
        r.mark(Status::Exhausted);
    }
    Ok(())
}

/// Odometer step; false after the last assignment.
fn advance(digits: &mut [usize], base: usize) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

fn scramble_cmd(
    r: &mut Report,
    g: &DefiningGraph,
    steps: usize,
    words_out: Option<&Path>,
    opts: &GlobalOpts,
) -> CliResult<()> {
    let group = Group::new(g.clone());
    let mut gs = GeneratingSet::standard(&group, opts.params());
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for i in 0..steps {
        let twists: Vec<ElementaryTwist> = enumerate_twists(gs.graph())
            .into_iter()
            .filter(|t| t.j.len() <= 2)
            .collect();
        let Some(&tau) = twists.choose(&mut rng) else {
            r.line("no twists available");
            break;
        };
        r.line(format!("step {}: {}", i + 1, tau.display(gs.graph())));
        gs = apply_twist_generators(&gs, tau)?;
    }
    let words = gs.word_lines().join("\n") + "\n";
    r.line("words:");
    r.block(&words);
    match complexity(&gs) {
        Ok(k) => r.line(format!("K = {k}")),
        Err(e) => r.line(format!("K unavailable: {e}")),
    }
    if let Some(p) = words_out {
        write(p, &words)?;
    }
    Ok(())
}
