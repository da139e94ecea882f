//! Line-oriented text formats for algebras, representations and posets.
//!
//! All three share the same lexical rules: `#` starts a comment, blank
//! lines are ignored, tokens are separated by whitespace. Parsing is strict.
//!
//! Algebra:
//!
//! ```text
//! elements a b 1
//! arrow
//! a: 1 1 1
//! b: a 1 1
//! 1: a b 1
//! compose          # optional, same shape as arrow
//! ...
//! const one 1      # optional: one, id, zero
//! ```
//!
//! Representation (element names refer to an algebra):
//!
//! ```text
//! base 2
//! top (0,0) (1,1)
//! map 0 = (0,0)
//! map 1 = (0,0) (1,1)
//! mode relative               # optional, default relative
//! profile arrow,compose       # optional, default arrow (+compose if the algebra has ;)
//! ```
//!
//! Poset: `base <n>` then any number of `leq (i,j) ...` lines; reflexive
//! pairs are implied.

use std::collections::HashMap;

use crate::algebra::{FiniteAlgebra, Table};
use crate::error::{Error, Result};
use crate::relmodel::weakening::Poset;
use crate::relmodel::{Mode, PairSet, Profile, RelContext, Representation};

fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Section {
    Arrow,
    Compose,
}

impl Section {
    fn name(self) -> &'static str {
        match self {
            Section::Arrow => "arrow",
            Section::Compose => "compose",
        }
    }
}

struct TableBuilder {
    section: Section,
    header_line: usize,
    rows: Vec<Option<Vec<usize>>>,
}

impl TableBuilder {
    fn finish(self, names: &[String]) -> Result<Table> {
        let mut rows = Vec::with_capacity(names.len());
        for (i, row) in self.rows.into_iter().enumerate() {
            match row {
                Some(r) => rows.push(r),
                None => {
                    return Err(Error::parse(
                        self.header_line,
                        format!("{} table has no row for `{}`", self.section.name(), names[i]),
                    ))
                }
            }
        }
        Table::from_rows(rows).map_err(|e| Error::parse(self.header_line, e.to_string()))
    }
}

pub fn parse_algebra(text: &str) -> Result<FiniteAlgebra> {
    let mut it = lines(text);
    let (first_line, first) = it.next().ok_or_else(|| Error::parse(1, "empty algebra file"))?;
    let mut toks = first.split_whitespace();
    if toks.next() != Some("elements") {
        return Err(Error::parse(first_line, "expected `elements <name>+`"));
    }
    let names: Vec<String> = toks.map(String::from).collect();
    if names.is_empty() {
        return Err(Error::parse(first_line, "no elements"));
    }
    let mut index = HashMap::new();
    for (i, name) in names.iter().enumerate() {
        if name.contains(':') || name.contains(',') {
            return Err(Error::parse(first_line, format!("bad element name `{name}`")));
        }
        if index.insert(name.clone(), i).is_some() {
            return Err(Error::parse(first_line, format!("duplicate element `{name}`")));
        }
    }
    let n = names.len();
    let lookup = |line: usize, name: &str| -> Result<usize> {
        index.get(name).copied().ok_or_else(|| Error::parse(line, format!("unknown element `{name}`")))
    };

    let mut current: Option<TableBuilder> = None;
    let mut done: HashMap<&'static str, Table> = HashMap::new();
    let mut consts: HashMap<String, usize> = HashMap::new();

    let close = |cur: &mut Option<TableBuilder>, done: &mut HashMap<&'static str, Table>| -> Result<()> {
        if let Some(b) = cur.take() {
            let name = b.section.name();
            done.insert(name, b.finish(&names)?);
        }
        Ok(())
    };

    for (ln, line) in it {
        let head = line.split_whitespace().next().unwrap_or("");
        match head {
            "arrow" | "compose" => {
                if line.split_whitespace().count() != 1 {
                    return Err(Error::parse(ln, format!("`{head}` header takes no arguments")));
                }
                close(&mut current, &mut done)?;
                let section = if head == "arrow" { Section::Arrow } else { Section::Compose };
                if done.contains_key(section.name()) {
                    return Err(Error::parse(ln, format!("duplicate `{head}` section")));
                }
                current = Some(TableBuilder { section, header_line: ln, rows: vec![None; n] });
            }
            "const" => {
                close(&mut current, &mut done)?;
                let toks: Vec<&str> = line.split_whitespace().collect();
                if toks.len() != 3 {
                    return Err(Error::parse(ln, "expected `const one|id|zero <name>`"));
                }
                if !matches!(toks[1], "one" | "id" | "zero") {
                    return Err(Error::parse(ln, format!("unknown constant `{}`", toks[1])));
                }
                let v = lookup(ln, toks[2])?;
                if consts.insert(toks[1].to_string(), v).is_some() {
                    return Err(Error::parse(ln, format!("duplicate constant `{}`", toks[1])));
                }
            }
            _ => {
                let builder = current
                    .as_mut()
                    .ok_or_else(|| Error::parse(ln, format!("unexpected line `{line}`")))?;
                let (row_name, rest) = line
                    .split_once(':')
                    .ok_or_else(|| Error::parse(ln, "expected `<name>: <name>...`"))?;
                let r = lookup(ln, row_name.trim())?;
                if builder.rows[r].is_some() {
                    return Err(Error::parse(ln, format!("duplicate row `{}`", row_name.trim())));
                }
                let row = rest
                    .split_whitespace()
                    .map(|t| lookup(ln, t))
                    .collect::<Result<Vec<usize>>>()?;
                if row.len() != n {
                    return Err(Error::parse(ln, format!("row has {} entries, expected {n}", row.len())));
                }
                builder.rows[r] = Some(row);
            }
        }
    }
    close(&mut current, &mut done)?;

    let arrow = done.remove("arrow").ok_or_else(|| Error::parse(first_line, "missing `arrow` section"))?;
    let mut alg = FiniteAlgebra::new(names, arrow)?;
    if let Some(c) = done.remove("compose") {
        alg = alg.with_compose(c)?;
    }
    alg = alg
        .with_one(consts.get("one").copied())?
        .with_id(consts.get("id").copied())?
        .with_zero(consts.get("zero").copied())?;
    Ok(alg)
}

fn render_table(alg: &FiniteAlgebra, header: &str, t: &Table, out: &mut String) {
    out.push_str(header);
    out.push('\n');
    for r in alg.elements() {
        let row: Vec<&str> = t.row(r).iter().map(|&v| alg.name(v)).collect();
        out.push_str(&format!("{}: {}\n", alg.name(r), row.join(" ")));
    }
}

pub fn render_algebra(alg: &FiniteAlgebra) -> String {
    let mut out = format!("elements {}\n", alg.names().join(" "));
    render_table(alg, "arrow", alg.arrow_table(), &mut out);
    if let Some(c) = alg.compose_table() {
        render_table(alg, "compose", c, &mut out);
    }
    for (kind, v) in [("one", alg.one()), ("id", alg.id()), ("zero", alg.zero())] {
        if let Some(v) = v {
            out.push_str(&format!("const {kind} {}\n", alg.name(v)));
        }
    }
    out
}

/// Parses `(i,j) (k,l) ...`; whitespace inside or between pairs is ignored.
pub fn parse_pairs(text: &str, line: usize) -> Result<Vec<(usize, usize)>> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut rest = compact.as_str();
    let mut out = Vec::new();
    while !rest.is_empty() {
        let inner = rest
            .strip_prefix('(')
            .and_then(|r| r.split_once(')'))
            .ok_or_else(|| Error::parse(line, format!("expected `(i,j)` at `{rest}`")))?;
        let (pair, tail) = inner;
        let (x, y) = pair.split_once(',').ok_or_else(|| Error::parse(line, format!("bad pair `({pair})`")))?;
        let parse = |s: &str| s.parse::<usize>().map_err(|_| Error::parse(line, format!("bad point `{s}`")));
        out.push((parse(x)?, parse(y)?));
        rest = tail;
    }
    Ok(out)
}

/// Parses a pair list into a set over `base` points.
pub fn parse_pair_set(text: &str, base: usize) -> Result<PairSet> {
    let pairs = parse_pairs(text, 1)?;
    if let Some(&(x, y)) = pairs.iter().find(|&&(x, y)| x >= base || y >= base) {
        return Err(Error::parse(1, format!("pair ({x},{y}) outside base {base}")));
    }
    Ok(PairSet::from_pairs(base, pairs))
}

fn checked_set(pairs: Vec<(usize, usize)>, base: usize, line: usize) -> Result<PairSet> {
    if let Some(&(x, y)) = pairs.iter().find(|&&(x, y)| x >= base || y >= base) {
        return Err(Error::parse(line, format!("pair ({x},{y}) outside base {base}")));
    }
    Ok(PairSet::from_pairs(base, pairs))
}

fn parse_base(line: usize, rest: &str) -> Result<usize> {
    rest.trim().parse().map_err(|_| Error::parse(line, format!("bad base size `{}`", rest.trim())))
}

pub fn parse_representation(text: &str, alg: &FiniteAlgebra) -> Result<Representation> {
    let mut base: Option<usize> = None;
    let mut top: Option<PairSet> = None;
    let mut map: Vec<Option<PairSet>> = vec![None; alg.len()];
    let mut mode: Option<Mode> = None;
    let mut profile: Option<Profile> = None;

    for (ln, line) in lines(text) {
        let (head, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let need_base = || base.ok_or_else(|| Error::parse(ln, "`base` must come first"));
        match head {
            "base" => {
                if base.replace(parse_base(ln, rest)?).is_some() {
                    return Err(Error::parse(ln, "duplicate `base`"));
                }
            }
            "top" => {
                let b = need_base()?;
                if top.replace(checked_set(parse_pairs(rest, ln)?, b, ln)?).is_some() {
                    return Err(Error::parse(ln, "duplicate `top`"));
                }
            }
            "map" => {
                let b = need_base()?;
                let (name, pairs) =
                    rest.split_once('=').ok_or_else(|| Error::parse(ln, "expected `map <name> = (i,j)...`"))?;
                let a = alg
                    .index_of(name.trim())
                    .ok_or_else(|| Error::parse(ln, format!("unknown element `{}`", name.trim())))?;
                if map[a].replace(checked_set(parse_pairs(pairs, ln)?, b, ln)?).is_some() {
                    return Err(Error::parse(ln, format!("duplicate map for `{}`", name.trim())));
                }
            }
            "mode" => {
                let m = rest.trim().parse().map_err(|e: Error| Error::parse(ln, e.to_string()))?;
                if mode.replace(m).is_some() {
                    return Err(Error::parse(ln, "duplicate `mode`"));
                }
            }
            "profile" => {
                let p = rest.trim().parse().map_err(|e: Error| Error::parse(ln, e.to_string()))?;
                if profile.replace(p).is_some() {
                    return Err(Error::parse(ln, "duplicate `profile`"));
                }
            }
            other => return Err(Error::parse(ln, format!("unknown keyword `{other}`"))),
        }
    }
    base.ok_or_else(|| Error::parse(1, "missing `base`"))?;
    let top = top.ok_or_else(|| Error::parse(1, "missing `top`"))?;
    let map = map
        .into_iter()
        .enumerate()
        .map(|(a, img)| img.ok_or_else(|| Error::parse(1, format!("missing map for `{}`", alg.name(a)))))
        .collect::<Result<Vec<_>>>()?;
    let default_profile =
        if alg.compose_table().is_some() { Profile::ARROW_COMPOSE } else { Profile::ARROW };
    Ok(Representation {
        context: RelContext::new(top),
        map,
        mode: mode.unwrap_or_default(),
        profile: profile.unwrap_or(default_profile),
    })
}

fn pairs_suffix(s: &PairSet) -> String {
    if s.is_empty() {
        String::new()
    } else {
        format!(" {}", s.render())
    }
}

pub fn render_representation(rep: &Representation, alg: &FiniteAlgebra) -> String {
    let mut out = format!("base {}\n", rep.base_size());
    out.push_str(&format!("top{}\n", pairs_suffix(rep.context.top())));
    for (a, img) in rep.map.iter().enumerate() {
        out.push_str(&format!("map {} ={}\n", alg.name(a), pairs_suffix(img)));
    }
    out.push_str(&format!("mode {}\n", rep.mode));
    out.push_str(&format!("profile {}\n", rep.profile));
    out
}

pub fn parse_poset(text: &str) -> Result<Poset> {
    let mut base: Option<usize> = None;
    let mut pairs = Vec::new();
    for (ln, line) in lines(text) {
        let (head, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        match head {
            "base" => {
                if base.replace(parse_base(ln, rest)?).is_some() {
                    return Err(Error::parse(ln, "duplicate `base`"));
                }
            }
            "leq" => {
                let b = base.ok_or_else(|| Error::parse(ln, "`base` must come first"))?;
                let ps = parse_pairs(rest, ln)?;
                checked_set(ps.clone(), b, ln)?;
                pairs.extend(ps);
            }
            other => return Err(Error::parse(ln, format!("unknown keyword `{other}`"))),
        }
    }
    let base = base.ok_or_else(|| Error::parse(1, "missing `base`"))?;
    Poset::new(base, pairs)
}

pub fn render_poset(p: &Poset) -> String {
    let strict = PairSet::from_pairs(p.base_size(), p.leq().iter().filter(|(x, y)| x != y));
    format!("base {}\nleq{}\n", p.base_size(), pairs_suffix(&strict))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    const H3: &str = "\
# three-element chain
elements a b 1
arrow
a: 1 1 1
b: a 1 1
1: a b 1
";

    #[test]
    fn parses_chain() {
        assert_eq!(parse_algebra(H3).unwrap(), fixtures::h3());
    }

    #[test]
    fn render_then_parse_is_identity_on_fixtures() {
        for (name, alg) in fixtures::all() {
            assert_eq!(parse_algebra(&render_algebra(&alg)).unwrap(), alg, "{name}");
        }
    }

    #[test]
    fn strictness() {
        let cases = [
            ("", "empty"),
            ("elements a a\narrow\na: a a\n", "duplicate element"),
            ("elements a\narrow\na: b\n", "unknown element"),
            ("elements a b\narrow\na: a\nb: a b\n", "row has"),
            ("elements a\narrow\na: a\narrow\na: a\n", "duplicate `arrow`"),
            ("elements a b\narrow\na: a b\n", "no row for `b`"),
            ("elements a\narrow\na: a\na: a\n", "duplicate row"),
            ("elements a\ncompose\na: a\n", "missing `arrow`"),
            ("elements a\narrow\na: a\nconst top a\n", "unknown constant"),
            ("elements a\narrow\na: a\nconst one a\nconst one a\n", "duplicate constant"),
            ("elements a\nstuff\n", "unexpected line"),
        ];
        for (text, needle) in cases {
            let err = parse_algebra(text).unwrap_err().to_string();
            assert!(err.contains(needle), "{text:?}: {err}");
        }
    }

    #[test]
    fn representation_round_trip() {
        let s2 = fixtures::s2();
        let text = "base 2\ntop (0,0) (1,1)\nmap 0 = (0,0)\nmap 1 = (0, 0) (1,1)\n";
        let rep = parse_representation(text, &s2).unwrap();
        assert_eq!(rep.mode, Mode::Relative);
        assert_eq!(rep.profile, Profile::ARROW_COMPOSE);
        let again = parse_representation(&render_representation(&rep, &s2), &s2).unwrap();
        assert_eq!(again, rep);
    }

    #[test]
    fn representation_strictness() {
        let s2 = fixtures::s2();
        for (text, needle) in [
            ("top (0,0)\n", "`base` must come first"),
            ("base 1\ntop (0,1)\n", "outside base"),
            ("base 1\ntop (0,0)\nmap 0 =\n", "missing map for `1`"),
            ("base 1\ntop (0,0)\nmap 2 =\n", "unknown element"),
            ("base 1\ntop (0,0)\nmap 0 =\nmap 0 =\n", "duplicate map"),
            ("base 1\ntop (0,0\n", "expected `(i,j)`"),
            ("base 1\ntop\nmap 0 =\nmap 1 =\nmode sideways\n", "unknown mode"),
        ] {
            let err = parse_representation(text, &s2).unwrap_err().to_string();
            assert!(err.contains(needle), "{text:?}: {err}");
        }
    }

    #[test]
    fn poset_parsing() {
        let p = parse_poset("base 3\nleq (0,1) (1,2)\nleq (0,2)\n").unwrap();
        assert!(p.leq().contains(0, 2) && p.leq().contains(1, 1));
        assert_eq!(parse_poset(&render_poset(&p)).unwrap(), p);
        assert!(parse_poset("base 2\nleq (0,1) (1,0)\n").is_err());
        assert!(parse_poset("leq (0,1)\n").is_err());
    }
}
