use std::fs;
use std::path::Path;

use implica_core::search::MAX_SEARCH_BASE;
use implica_core::text::{
    parse_algebra, parse_pair_set, parse_poset, parse_representation, render_algebra,
    render_representation,
};
use implica_core::{
    check_class, derived_order, empty_zero, enumerate_filters, generated_filter, prime_discriminate,
    prime_extend, quotient_by_identity, reduct, relationalize, search_representation, stone_represent,
    verify_representation, weakening_arrow, weakening_check, Error, Filter, FiniteAlgebra, Mode, PairSet,
    Poset, Profile, SearchConfig, SearchOutcome, Verdict,
};

use crate::Command;

pub const OK: u8 = 0;
pub const NEGATIVE: u8 = 1;
pub const USAGE: u8 = 2;
pub const ABORT: u8 = 3;
pub const PRECONDITION: u8 = 4;

pub struct Report {
    pub text: String,
    pub verdict: &'static str,
    pub code: u8,
}

impl Report {
    fn ok(text: String) -> Self {
        Report { text, verdict: "ok", code: OK }
    }

    fn verdict(text: String, positive: bool, yes: &'static str, no: &'static str) -> Self {
        if positive {
            Report { text, verdict: yes, code: OK }
        } else {
            Report { text, verdict: no, code: NEGATIVE }
        }
    }
}

#[derive(Debug)]
pub struct Failure {
    pub message: String,
    pub code: u8,
}

impl Failure {
    pub fn token(&self) -> &'static str {
        match self.code {
            USAGE => "usage-error",
            ABORT => "aborted",
            _ => "precondition",
        }
    }

    fn usage(message: impl Into<String>) -> Self {
        Failure { message: message.into(), code: USAGE }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } | Error::InvalidAlgebra(_) | Error::Shape(_) => USAGE,
            Error::CapExceeded(_) => ABORT,
            _ => PRECONDITION,
        };
        Failure { message: e.to_string(), code }
    }
}

type Outcome = Result<Report, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))
}

fn with_path(path: &Path, e: Error) -> Failure {
    let mut f = Failure::from(e);
    f.message = format!("{}: {}", path.display(), f.message);
    f
}

fn load_algebra(path: &Path) -> Result<FiniteAlgebra, Failure> {
    parse_algebra(&read(path)?).map_err(|e| with_path(path, e))
}

fn load_rep(path: &Path, alg: &FiniteAlgebra) -> Result<implica_core::Representation, Failure> {
    parse_representation(&read(path)?, alg).map_err(|e| with_path(path, e))
}

fn load_poset(path: &Path) -> Result<Poset, Failure> {
    parse_poset(&read(path)?).map_err(|e| with_path(path, e))
}

fn element(alg: &FiniteAlgebra, flag: &str, name: &str) -> Result<usize, Failure> {
    alg.index_of(name.trim())
        .ok_or_else(|| Failure::usage(format!("--{flag}: unknown element `{}`", name.trim())))
}

fn filter_arg(alg: &FiniteAlgebra, text: &str) -> Result<Filter, Failure> {
    Filter::parse(alg, text).map_err(|e| Failure::usage(format!("--filter: {e}")))
}

fn pairs_arg(flag: &str, text: &str, base: usize) -> Result<PairSet, Failure> {
    parse_pair_set(text, base).map_err(|e| Failure::usage(format!("--{flag}: {e}")))
}

fn rep_report(verdict: &Verdict, alg: &FiniteAlgebra) -> (String, bool) {
    match verdict {
        Verdict::Pass => ("pass\n".into(), true),
        Verdict::Fail(v) => (format!("fail\n{}\n", v.render(alg)), false),
    }
}

/// Re-verifies a transform output and prints it with the verdict.
fn transformed(alg: &FiniteAlgebra, rep: &implica_core::Representation) -> Outcome {
    let (verdict_text, passed) = rep_report(&verify_representation(alg, rep)?, alg);
    let text = format!("{}{verdict_text}", render_representation(rep, alg));
    Ok(Report::verdict(text, passed, "pass", "fail"))
}

pub fn run(cmd: &Command) -> Outcome {
    match cmd {
        Command::Check { alg, class } => {
            let a = load_algebra(&alg.alg)?;
            let report = check_class(&a, *class)?;
            Ok(Report::verdict(report.render(&a), report.passed, "passed", "failed"))
        }
        Command::Order { alg } => {
            let a = load_algebra(&alg.alg)?;
            let ord = derived_order(&a)?;
            let mut text = format!("one {}\n", a.name(ord.one()));
            for (x, y) in ord.pairs() {
                text.push_str(&format!("leq {} {}\n", a.name(x), a.name(y)));
            }
            text.push_str("join\n");
            for x in a.elements() {
                let row: Vec<&str> = a.elements().map(|y| a.name(ord.join(x, y))).collect();
                text.push_str(&format!("{}: {}\n", a.name(x), row.join(" ")));
            }
            Ok(Report::ok(text))
        }
        Command::Reduct { alg, to } => {
            let a = load_algebra(&alg.alg)?;
            Ok(Report::ok(render_algebra(&reduct(&a, *to)?)))
        }
        Command::Filters { alg, kind } => {
            let a = load_algebra(&alg.alg)?;
            let fs = enumerate_filters(&a, *kind)?;
            let mut text = format!("kind {kind}\ncount {}\n", fs.len());
            for f in &fs {
                text.push_str(&format!("filter {}\n", f.render(&a)));
            }
            Ok(Report::ok(text))
        }
        Command::FilterGen { alg, filter, element: el } => {
            let a = load_algebra(&alg.alg)?;
            let f = filter_arg(&a, filter)?;
            let x = element(&a, "element", el)?;
            let g = generated_filter(&a, &f, x)?;
            Ok(Report::ok(format!("filter {}\n", g.render(&a))))
        }
        Command::PrimeExtend { alg, filter, avoid } => {
            let a = load_algebra(&alg.alg)?;
            let f = filter_arg(&a, filter)?;
            let x = element(&a, "avoid", avoid)?;
            let g = prime_extend(&a, &f, x)?;
            Ok(Report::ok(format!("filter {}\n", g.render(&a))))
        }
        Command::PrimeDiscriminate { alg, filter, include, exclude } => {
            let a = load_algebra(&alg.alg)?;
            let f = filter_arg(&a, filter)?;
            let x = element(&a, "include", include)?;
            let y = element(&a, "exclude", exclude)?;
            let g = prime_discriminate(&a, &f, x, y)?;
            Ok(Report::ok(format!("filter {}\n", g.render(&a))))
        }
        Command::Stone { alg, verify } => {
            let a = load_algebra(&alg.alg)?;
            let sr = stone_represent(&a)?;
            let mut text = sr.render(&a);
            if !*verify {
                return Ok(Report::ok(text));
            }
            let mut passed = true;
            if let Err(msg) = sr.check(&a) {
                passed = false;
                text.push_str(&format!("fail sets {msg}\n"));
            }
            for mode in [Mode::Relative, Mode::Absolute] {
                if let Verdict::Fail(v) = verify_representation(&a, &relationalize(&sr, mode))? {
                    passed = false;
                    text.push_str(&format!("fail {mode} {}\n", v.render(&a)));
                }
            }
            if passed {
                text.push_str("pass\n");
            }
            Ok(Report::verdict(text, passed, "pass", "fail"))
        }
        Command::VerifyRep { alg, rep } => {
            let a = load_algebra(&alg.alg)?;
            let r = load_rep(rep, &a)?;
            let (text, passed) = rep_report(&verify_representation(&a, &r)?, &a);
            Ok(Report::verdict(text, passed, "pass", "fail"))
        }
        Command::QuotientIdentity { alg, rep } => {
            let a = load_algebra(&alg.alg)?;
            let r = load_rep(rep, &a)?;
            transformed(&a, &quotient_by_identity(&a, &r)?)
        }
        Command::EmptyZero { alg, rep } => {
            let a = load_algebra(&alg.alg)?;
            let r = load_rep(rep, &a)?;
            transformed(&a, &empty_zero(&a, &r)?)
        }
        Command::WeakeningCheck { poset, rel } => {
            let p = load_poset(poset)?;
            let r = pairs_arg("rel", rel, p.base_size())?;
            let ok = weakening_check(&p, &r)?;
            Ok(Report::verdict(format!("{ok}\n"), ok, "true", "false"))
        }
        Command::WeakeningArrow { poset, r, s } => {
            let p = load_poset(poset)?;
            let r = pairs_arg("r", r, p.base_size())?;
            let s = pairs_arg("s", s, p.base_size())?;
            let out = weakening_arrow(&p, &r, &s)?;
            let body = out.render();
            let text = if body.is_empty() { "rel\n".to_string() } else { format!("rel {body}\n") };
            Ok(Report::ok(text))
        }
        Command::SearchRep { alg, max_base, mode, profile, up_to_iso, node_limit } => {
            let a = load_algebra(&alg.alg)?;
            if *max_base > MAX_SEARCH_BASE {
                return Err(Failure::usage(format!("--max-base is capped at {MAX_SEARCH_BASE}")));
            }
            let profile = profile.unwrap_or(if a.compose_table().is_some() {
                Profile::ARROW_COMPOSE
            } else {
                Profile::ARROW
            });
            let cfg = SearchConfig::new(*max_base, *mode, profile)
                .up_to_iso(*up_to_iso)
                .node_limit(*node_limit);
            Ok(match search_representation(&a, &cfg)? {
                SearchOutcome::Found(rep) => {
                    Report { text: render_representation(&rep, &a), verdict: "found", code: OK }
                }
                SearchOutcome::Exhausted(k) => {
                    Report { text: format!("exhausted {k}\n"), verdict: "exhausted", code: NEGATIVE }
                }
                SearchOutcome::Aborted(n) => {
                    Report { text: format!("aborted {n}\n"), verdict: "aborted", code: ABORT }
                }
            })
        }
    }
}
