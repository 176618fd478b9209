use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use strong_edge::certifier::{
    check_certificate_detailed, claim1_certificate, soundness_trial, verify_claim1, verify_claim2_direct,
    verify_claim2_staged, Certificate, ClaimReport,
};
use strong_edge::coloring::{
    parse_lists, solve_strong_k, solve_strong_list, strong_chromatic_index, verify, ListAssignment,
};
use strong_edge::graph::{gen_cnplus, gen_random_cubic, gen_random_weight6, petersen, Graph};
use strong_edge::{Error, Result};

use crate::{CampaignKind, GenKind};

pub struct Outcome {
    pub code: u8,
    pub text: String,
}

impl Outcome {
    fn verdict(ok: bool, text: String) -> Self {
        Outcome {
            code: if ok { 0 } else { 1 },
            text,
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::input(format!("{}: {e}", path.display())))
}

fn write_or_return(out: Option<&Path>, text: String) -> Result<Outcome> {
    match out {
        Some(path) => {
            fs::write(path, &text).map_err(|e| Error::input(format!("{}: {e}", path.display())))?;
            Ok(Outcome::verdict(true, format!("RESULT written {}\n", path.display())))
        }
        None => Ok(Outcome::verdict(true, text)),
    }
}

fn read_graph(path: &Path) -> Result<Graph> {
    read(path)?.parse()
}

pub fn gen(what: GenKind, out: Option<&Path>) -> Result<Outcome> {
    let text = match what {
        GenKind::Cnplus { n } => gen_cnplus(n)?.to_string(),
        GenKind::Cubic { n, girth, seed } => gen_random_cubic(n, girth, seed)?.to_string(),
        GenKind::Weight6 { n, seed } => gen_random_weight6(n, seed).to_string(),
        GenKind::Petersen => petersen().to_string(),
        GenKind::Lists {
            graph,
            size,
            palette,
            seed,
        } => {
            let g = read_graph(&graph)?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            ListAssignment::random(g.edge_count(), size, palette, &mut rng)?.to_string()
        }
        GenKind::Claim1Certificate => claim1_certificate().to_string(),
    };
    write_or_return(out, text)
}

pub fn color(graph: &Path, k: Option<u32>, lists: Option<&Path>) -> Result<Outcome> {
    let g = read_graph(graph)?;
    let (found, lists) = match (k, lists) {
        (Some(k), None) => (solve_strong_k(&g, k), ListAssignment::uniform(g.edge_count(), k)),
        (None, Some(path)) => {
            let lists = parse_lists(&read(path)?, g.edge_count())?;
            (solve_strong_list(&g, &lists)?, lists)
        }
        _ => return Err(Error::input("exactly one of --k and --lists is required")),
    };
    Ok(match found {
        Some(c) => {
            debug_assert!(verify(&g, &c, Some(&lists)).map(|v| v.is_empty()).unwrap_or(false));
            Outcome::verdict(true, c.to_string())
        }
        None => Outcome::verdict(false, "NONE\n".to_string()),
    })
}

pub fn index(graph: &Path) -> Result<Outcome> {
    let g = read_graph(graph)?;
    Ok(Outcome::verdict(
        true,
        format!("RESULT index {}\n", strong_chromatic_index(&g)),
    ))
}

pub fn certify(path: &Path, soundness: Option<usize>, seed: u64, palette: u32) -> Result<Outcome> {
    let cert: Certificate = read(path)?.parse()?;
    let check = check_certificate_detailed(&cert)?;
    let mut text = String::new();
    let _ = writeln!(text, "RESULT eta_recomputed {}", check.recomputed_eta);
    let _ = writeln!(text, "RESULT eta_matches {}", check.eta_matches);
    let _ = writeln!(text, "RESULT nonzero {}", check.nonzero);
    let _ = writeln!(text, "RESULT degree_matches {}", check.degree_matches);
    let _ = writeln!(text, "RESULT per_edge_bounds {}", check.per_edge_bounds);
    let _ = writeln!(text, "RESULT max_form_bounds {}", check.max_form_bounds);
    let _ = writeln!(text, "RESULT bounds_within_palette {}", check.bounds_within_palette);
    if check.valid() && !check.max_form_bounds {
        text.push_str("NOTE per-edge bounds hold but 1 + max exponent exceeds some s bound\n");
    }
    let mut ok = check.valid();
    let _ = writeln!(text, "RESULT valid {ok}");
    if let (Some(trials), true) = (soundness, ok) {
        let report = soundness_trial(&cert, seed, trials, palette)?;
        let _ = writeln!(text, "RESULT soundness {}/{}", report.successes, report.trials);
        for t in &report.failures {
            let _ = writeln!(text, "FAILURE trial {t}");
        }
        ok &= report.failures.is_empty();
    }
    Ok(Outcome::verdict(ok, text))
}

pub fn verify_paper(claim: u8, n: Option<usize>, staged: bool) -> Result<Outcome> {
    let reports: Vec<ClaimReport> = match (claim, n, staged) {
        (1, Some(_), _) => return Err(Error::input("claim 1 takes no --n")),
        (1, None, true) => return Err(Error::input("claim 1 has no staged method")),
        (1, None, false) => vec![verify_claim1()],
        (_, Some(n), _) if n < 7 => return Err(Error::input(format!("claim 2 needs n >= 7, got {n}"))),
        (_, n, false) => vec![verify_claim2_direct(n.unwrap_or(7))?],
        (_, Some(n), true) => vec![verify_claim2_staged(n)?],
        (_, None, true) => (8..=20usize)
            .into_par_iter()
            .map(verify_claim2_staged)
            .collect::<Result<_>>()?,
    };
    let ok = reports.iter().all(ClaimReport::passed);
    let text = reports.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n");
    Ok(Outcome::verdict(ok, text))
}

pub struct CampaignConfig {
    pub kind: CampaignKind,
    pub count: usize,
    pub size: usize,
    pub seed: u64,
    pub palette: u32,
    pub list_size: usize,
    pub reproducer_dir: PathBuf,
}

struct Instance {
    graph: Graph,
    lists: ListAssignment,
    colored: bool,
}

fn run_instance(cfg: &CampaignConfig, index: usize) -> Result<Instance> {
    let seed = cfg.seed.wrapping_mul(1_000_003).wrapping_add(index as u64);
    let graph = match cfg.kind {
        CampaignKind::Cubic => gen_random_cubic(cfg.size, 3, seed)?,
        CampaignKind::Weight6 => gen_random_weight6(cfg.size, seed),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_1157);
    let lists = ListAssignment::random(graph.edge_count(), cfg.list_size, cfg.palette, &mut rng)?;
    let colored = match solve_strong_list(&graph, &lists)? {
        Some(c) => verify(&graph, &c, Some(&lists))?.is_empty(),
        None => false,
    };
    Ok(Instance { graph, lists, colored })
}

pub fn campaign(cfg: &CampaignConfig) -> Result<Outcome> {
    if cfg.count == 0 {
        return Err(Error::input("campaign needs --count >= 1"));
    }
    let name = match cfg.kind {
        CampaignKind::Cubic => "cubic",
        CampaignKind::Weight6 => "weight6",
    };
    let instances: Vec<Instance> = (0..cfg.count)
        .into_par_iter()
        .map(|i| run_instance(cfg, i))
        .collect::<Result<_>>()?;
    let mut text = String::new();
    let mut successes = 0;
    for (i, inst) in instances.iter().enumerate() {
        if inst.colored {
            successes += 1;
            continue;
        }
        let path = cfg.reproducer_dir.join(format!("campaign-{name}-{}-{i}.txt", cfg.seed));
        let body = format!("# graph\n{}# lists\n{}", inst.graph, inst.lists);
        fs::write(&path, body).map_err(|e| Error::input(format!("{}: {e}", path.display())))?;
        let _ = writeln!(
            text,
            "FAILURE instance {i} has no strong list coloring; reproducer {}",
            path.display()
        );
    }
    let _ = writeln!(text, "RESULT kind {name}");
    let _ = writeln!(text, "RESULT colored {successes}/{}", cfg.count);
    let ok = successes == cfg.count;
    let _ = writeln!(text, "RESULT verdict {}", if ok { "PASS" } else { "FAIL" });
    Ok(Outcome::verdict(ok, text))
}
