//! Design-file emission (VHDL, Verilog, ANF text, JSON), the structured
//! report, and a small reader that turns emitted expressions back into
//! term masks.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{AnfPolynomial, CircuitStats, ConverterSpec, ModConverter, Monomial};
use crate::polynomial::polynomial_to_spectrum;
use crate::truth;
use crate::verify::Counterexample;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Format {
    Vhdl,
    Verilog,
    AnfText,
    Json,
}

impl Format {
    pub const ALL: [Format; 4] = [Format::Vhdl, Format::Verilog, Format::AnfText, Format::Json];

    pub fn name(self) -> &'static str {
        match self {
            Format::Vhdl => "vhdl",
            Format::Verilog => "verilog",
            Format::AnfText => "anf-text",
            Format::Json => "json",
        }
    }

    /// Conventional file extension.
    pub fn extension(self) -> &'static str {
        match self {
            Format::Vhdl => "vhd",
            Format::Verilog => "v",
            Format::AnfText => "anf",
            Format::Json => "json",
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Format::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::UnsupportedFormat(s.to_string()))
    }
}

/// Numbering of the `x` and `S` buses.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum IndexBase {
    /// `x(1)..x(n)`, `S(1)..S(delta)`.
    #[default]
    One,
    Zero,
}

impl IndexBase {
    pub fn offset(self) -> u32 {
        match self {
            IndexBase::One => 1,
            IndexBase::Zero => 0,
        }
    }
}

/// Shape of each XOR chain.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum ChainStyle {
    /// One flat chain per output, terms in ascending mask order.
    #[default]
    Flat,
    /// Parenthesized balanced binary tree over the same term order.
    Balanced,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmitOptions {
    pub format: Format,
    pub entity: String,
    pub index_base: IndexBase,
    pub chain: ChainStyle,
    /// Column at which VHDL/Verilog assignments wrap. ANF text never wraps.
    pub wrap_column: usize,
    /// Refuse to emit a converter that has not passed verification.
    pub require_verified: bool,
}

impl EmitOptions {
    pub fn new(format: Format, entity: impl Into<String>) -> Self {
        Self {
            format,
            entity: entity.into(),
            index_base: IndexBase::One,
            chain: ChainStyle::Flat,
            wrap_column: 100,
            require_verified: true,
        }
    }

    /// Options with the default entity name for `spec`.
    pub fn for_spec(format: Format, spec: &ConverterSpec) -> Self {
        Self::new(format, default_entity(spec))
    }
}

pub fn default_entity(spec: &ConverterSpec) -> String {
    format!("mod{}_n{}", spec.p(), spec.n())
}

/// Letters, digits and underscores, not starting with a digit.
pub fn validate_identifier(name: &str) -> Result<()> {
    let mut chars = name.chars();
    let ok = match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {
            chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
        }
        _ => false,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidIdentifier(name.to_string()))
    }
}

/// Operator and literal spellings of one output language.
#[derive(Debug, Clone, Copy)]
struct Syntax {
    xor: &'static str,
    and: &'static str,
    zero: &'static str,
    one: &'static str,
    square: bool,
}

const VHDL: Syntax = Syntax {
    xor: "xor",
    and: "and",
    zero: "'0'",
    one: "'1'",
    square: false,
};

const VERILOG: Syntax = Syntax {
    xor: "^",
    and: "&",
    zero: "1'b0",
    one: "1'b1",
    square: true,
};

const ANF: Syntax = Syntax {
    xor: "xor",
    and: "and",
    zero: "0",
    one: "1",
    square: false,
};

impl Syntax {
    fn index(&self, name: &str, i: u32) -> String {
        if self.square {
            format!("{name}[{i}]")
        } else {
            format!("{name}({i})")
        }
    }

    fn term(&self, t: Monomial, base: u32) -> String {
        let vars: Vec<String> = t.variables().map(|v| self.index("x", v - 1 + base)).collect();
        match vars.len() {
            0 => self.one.to_string(),
            1 => vars.into_iter().next().unwrap(),
            _ => format!("({})", vars.join(&format!(" {} ", self.and))),
        }
    }

    fn chain(&self, terms: &[Monomial], base: u32, style: ChainStyle) -> String {
        if terms.is_empty() {
            return self.zero.to_string();
        }
        let items: Vec<String> = terms.iter().map(|&t| self.term(t, base)).collect();
        match style {
            ChainStyle::Flat => items.join(&format!(" {} ", self.xor)),
            ChainStyle::Balanced => self.balanced(&items),
        }
    }

    fn balanced(&self, items: &[String]) -> String {
        if items.len() == 1 {
            return items[0].clone();
        }
        let (left, right) = items.split_at(items.len().div_ceil(2));
        let side = |part: &[String]| {
            if part.len() == 1 {
                part[0].clone()
            } else {
                format!("({})", self.balanced(part))
            }
        };
        format!("{} {} {}", side(left), self.xor, side(right))
    }
}

pub(crate) fn anf_expression(terms: &[Monomial]) -> String {
    ANF.chain(terms, 1, ChainStyle::Flat)
}

/// Packs the expression after `prefix`, breaking only in front of XOR operators.
fn wrap_assignment(prefix: &str, expr: &str, suffix: &str, op: &str, width: usize, indent: &str) -> String {
    let mut segments: Vec<String> = Vec::new();
    for word in expr.split(' ') {
        match segments.last_mut() {
            Some(seg) if word != op => {
                seg.push(' ');
                seg.push_str(word);
            }
            _ => segments.push(word.to_string()),
        }
    }
    let mut out = String::new();
    let mut line = prefix.to_string();
    let mut first = true;
    for seg in segments {
        if !first && line.len() + 1 + seg.len() > width {
            out.push_str(&line);
            out.push('\n');
            line = format!("{indent}{seg}");
        } else {
            if !first {
                line.push(' ');
            }
            line.push_str(&seg);
        }
        first = false;
    }
    out.push_str(&line);
    out.push_str(suffix);
    out
}

fn header_lines(converter: &ModConverter, comment: &str) -> String {
    let spec = converter.spec();
    let terms: Vec<String> = converter
        .stats()
        .terms
        .iter()
        .enumerate()
        .map(|(i, t)| format!("S{}={t}", i + 1))
        .collect();
    format!(
        "{c} X mod {p}: {n} input bits, {d} residue bits (S1 least significant)\n\
         {c} XOR-AND realization from the positive-polarity Reed-Muller expansion\n\
         {c} terms: {t}\n",
        c = comment,
        p = spec.p(),
        n = spec.n(),
        d = spec.delta(),
        t = terms.join(" "),
    )
}

fn emit_vhdl(converter: &ModConverter, opts: &EmitOptions) -> String {
    let spec = converter.spec();
    let base = opts.index_base.offset();
    let e = &opts.entity;
    let range = |w: u32| format!("{} downto {}", w - 1 + base, base);
    let mut out = header_lines(converter, "--");
    out.push_str("library ieee;\nuse ieee.std_logic_1164.all;\n\n");
    out.push_str(&format!(
        "entity {e} is\n  port (\n    x : in  std_logic_vector({});\n    S : out std_logic_vector({})\n  );\nend entity {e};\n\n",
        range(spec.n()),
        range(spec.delta()),
    ));
    out.push_str(&format!("architecture rtl of {e} is\nbegin\n"));
    for poly in converter.polys() {
        let lhs = VHDL.index("S", poly.output() as u32 - 1 + base);
        let expr = VHDL.chain(poly.terms(), base, opts.chain);
        out.push_str(&wrap_assignment(
            &format!("  {lhs} <= "),
            &expr,
            ";\n",
            VHDL.xor,
            opts.wrap_column,
            "      ",
        ));
    }
    out.push_str("end architecture rtl;\n");
    out
}

fn emit_verilog(converter: &ModConverter, opts: &EmitOptions) -> String {
    let spec = converter.spec();
    let base = opts.index_base.offset();
    let range = |w: u32| format!("[{}:{}]", w - 1 + base, base);
    let mut out = header_lines(converter, "//");
    out.push_str(&format!(
        "module {} (\n  input  wire {} x,\n  output wire {} S\n);\n",
        opts.entity,
        range(spec.n()),
        range(spec.delta()),
    ));
    for poly in converter.polys() {
        let lhs = VERILOG.index("S", poly.output() as u32 - 1 + base);
        let expr = VERILOG.chain(poly.terms(), base, opts.chain);
        out.push_str(&wrap_assignment(
            &format!("  assign {lhs} = "),
            &expr,
            ";\n",
            VERILOG.xor,
            opts.wrap_column,
            "      ",
        ));
    }
    out.push_str("endmodule\n");
    out
}

fn emit_anf(converter: &ModConverter, opts: &EmitOptions) -> String {
    let base = opts.index_base.offset();
    let mut out = String::new();
    for poly in converter.polys() {
        out.push_str(&format!(
            "{} = {}\n",
            ANF.index("S", poly.output() as u32 - 1 + base),
            ANF.chain(poly.terms(), base, opts.chain)
        ));
    }
    out
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonDesign {
    entity: String,
    n: u32,
    p: u64,
    delta: u32,
    index_base: u32,
    outputs: Vec<JsonOutput>,
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonOutput {
    output: usize,
    masks: Vec<u32>,
    anf: String,
}

fn emit_json(converter: &ModConverter, opts: &EmitOptions) -> String {
    let spec = converter.spec();
    let base = opts.index_base.offset();
    let doc = JsonDesign {
        entity: opts.entity.clone(),
        n: spec.n(),
        p: spec.p(),
        delta: spec.delta(),
        index_base: base,
        outputs: converter
            .polys()
            .iter()
            .map(|poly| JsonOutput {
                output: poly.output(),
                masks: poly.masks(),
                anf: ANF.chain(poly.terms(), base, opts.chain),
            })
            .collect(),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("plain data serializes");
    s.push('\n');
    s
}

/// Serializes the converter as one self-contained design document.
pub fn emit(converter: &ModConverter, opts: &EmitOptions) -> Result<String> {
    validate_identifier(&opts.entity)?;
    if opts.require_verified && !converter.is_verified() {
        return Err(Error::Unverified);
    }
    Ok(match opts.format {
        Format::Vhdl => emit_vhdl(converter, opts),
        Format::Verilog => emit_verilog(converter, opts),
        Format::AnfText => emit_anf(converter, opts),
        Format::Json => emit_json(converter, opts),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputSummary {
    pub output: usize,
    pub truth_numbers: u64,
    pub spectrum_ones: u64,
    pub terms: u64,
    pub literals: u64,
    pub degree: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerificationStatus {
    Pass,
    Fail,
    NotRun,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationSummary {
    pub status: VerificationStatus,
    pub inputs_checked: u64,
    pub counterexample: Option<Counterexample>,
}

/// Machine-readable record behind [`emit_report`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub spec: ConverterSpec,
    pub outputs: Vec<OutputSummary>,
    pub stats: CircuitStats,
    pub verification: VerificationSummary,
}

impl Report {
    pub fn new(converter: &ModConverter) -> Self {
        let truth_counts: Vec<u64> = truth::truth_vectors(converter.spec())
            .iter()
            .map(|w| w.bits().count_ones())
            .collect();
        let stats = converter.stats().clone();
        let outputs = converter
            .polys()
            .iter()
            .enumerate()
            .map(|(i, poly)| OutputSummary {
                output: poly.output(),
                truth_numbers: truth_counts[i],
                spectrum_ones: polynomial_to_spectrum(poly).popcount(),
                terms: stats.terms[i],
                literals: stats.literals[i],
                degree: stats.degrees[i],
            })
            .collect();
        let verification = match converter.verification() {
            None => VerificationSummary {
                status: VerificationStatus::NotRun,
                inputs_checked: 0,
                counterexample: None,
            },
            Some(r) => VerificationSummary {
                status: if r.pass {
                    VerificationStatus::Pass
                } else {
                    VerificationStatus::Fail
                },
                inputs_checked: r.inputs_checked,
                counterexample: r.counterexample,
            },
        };
        Self {
            spec: *converter.spec(),
            outputs,
            stats,
            verification,
        }
    }
}

/// JSON report: spec, per-output counts, statistics, verification outcome.
/// Timing is left out so the document is reproducible.
pub fn emit_report(converter: &ModConverter) -> String {
    let mut s = serde_json::to_string_pretty(&Report::new(converter)).expect("plain data serializes");
    s.push('\n');
    s
}

// ---------------------------------------------------------------------------
// Reader

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Num(u64),
    Open,
    Close,
    Xor,
    And,
    Const(bool),
    Assign,
    Semi,
    Other(char),
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        match c {
            _ if c.is_ascii_whitespace() => i += 1,
            '-' if bytes.get(i + 1) == Some(&b'-') => {
                while i < bytes.len() && bytes[i] != b'\n' {
                    i += 1;
                }
            }
            '/' if bytes.get(i + 1) == Some(&b'/') => {
                while i < bytes.len() && bytes[i] != b'\n' {
                    i += 1;
                }
            }
            '\'' if matches!(bytes.get(i + 1), Some(b'0' | b'1')) && bytes.get(i + 2) == Some(&b'\'') => {
                toks.push((start, Tok::Const(bytes[i + 1] == b'1')));
                i += 3;
            }
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let digits = &text[start..i];
                if bytes.get(i) == Some(&b'\'') && matches!(bytes.get(i + 1), Some(b'b' | b'B')) {
                    let v = bytes.get(i + 2).copied();
                    if digits != "1" || !matches!(v, Some(b'0' | b'1')) {
                        return Err(Error::Parse {
                            pos: start,
                            msg: "only 1-bit binary literals are supported".into(),
                        });
                    }
                    toks.push((start, Tok::Const(v == Some(b'1'))));
                    i += 3;
                } else {
                    let v = digits.parse().map_err(|_| Error::Parse {
                        pos: start,
                        msg: format!("bad number `{digits}`"),
                    })?;
                    toks.push((start, Tok::Num(v)));
                }
            }
            _ if c.is_ascii_alphabetic() || c == '_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                let word = &text[start..i];
                let tok = match word.to_ascii_lowercase().as_str() {
                    "xor" => Tok::Xor,
                    "and" => Tok::And,
                    _ => Tok::Ident(word.to_string()),
                };
                toks.push((start, tok));
            }
            '(' | '[' => {
                toks.push((start, Tok::Open));
                i += 1;
            }
            ')' | ']' => {
                toks.push((start, Tok::Close));
                i += 1;
            }
            '^' => {
                toks.push((start, Tok::Xor));
                i += 1;
            }
            '&' => {
                toks.push((start, Tok::And));
                i += 1;
            }
            '<' if bytes.get(i + 1) == Some(&b'=') => {
                toks.push((start, Tok::Assign));
                i += 2;
            }
            '=' => {
                toks.push((start, Tok::Assign));
                i += 1;
            }
            ';' => {
                toks.push((start, Tok::Semi));
                i += 1;
            }
            _ => {
                toks.push((start, Tok::Other(c)));
                i += c.len_utf8();
            }
        }
    }
    Ok(toks)
}

fn toggle(set: &mut BTreeSet<u32>, mask: u32) {
    if !set.remove(&mask) {
        set.insert(mask);
    }
}

struct ExprParser<'a> {
    toks: &'a [(usize, Tok)],
    pos: usize,
    base: u32,
    end: usize,
}

impl ExprParser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn fail<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.here(),
            msg: msg.into(),
        })
    }

    fn xor_expr(&mut self) -> Result<BTreeSet<u32>> {
        let mut acc = self.and_expr()?;
        while self.peek() == Some(&Tok::Xor) {
            self.pos += 1;
            for m in self.and_expr()? {
                toggle(&mut acc, m);
            }
        }
        Ok(acc)
    }

    fn and_expr(&mut self) -> Result<BTreeSet<u32>> {
        let mut acc = self.atom()?;
        while self.peek() == Some(&Tok::And) {
            self.pos += 1;
            let rhs = self.atom()?;
            let mut prod = BTreeSet::new();
            for &a in &acc {
                for &b in &rhs {
                    toggle(&mut prod, a | b);
                }
            }
            acc = prod;
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<BTreeSet<u32>> {
        match self.peek().cloned() {
            Some(Tok::Const(v)) => {
                self.pos += 1;
                Ok(if v { BTreeSet::from([0]) } else { BTreeSet::new() })
            }
            Some(Tok::Num(v)) if v <= 1 => {
                self.pos += 1;
                Ok(if v == 1 { BTreeSet::from([0]) } else { BTreeSet::new() })
            }
            Some(Tok::Open) => {
                self.pos += 1;
                let inner = self.xor_expr()?;
                if self.peek() != Some(&Tok::Close) {
                    return self.fail("expected `)`");
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(Tok::Ident(name)) if name == "x" => {
                self.pos += 1;
                let k = self.index()?;
                if k < u64::from(self.base) || k - u64::from(self.base) >= 32 {
                    return self.fail(format!("variable index {k} out of range"));
                }
                Ok(BTreeSet::from([1u32 << (k - u64::from(self.base))]))
            }
            _ => self.fail("expected a variable, constant or `(`"),
        }
    }

    /// `(k)` or `[k]` after a bus name.
    fn index(&mut self) -> Result<u64> {
        match (self.toks.get(self.pos), self.toks.get(self.pos + 1), self.toks.get(self.pos + 2)) {
            (Some((_, Tok::Open)), Some((_, Tok::Num(k))), Some((_, Tok::Close))) => {
                self.pos += 3;
                Ok(*k)
            }
            _ => self.fail("expected a bus index"),
        }
    }
}

/// Parses one XOR/AND expression (either spelling) into its ascending term masks.
pub fn parse_expression(text: &str, base: IndexBase) -> Result<Vec<u32>> {
    let toks = lex(text)?;
    let mut parser = ExprParser {
        toks: &toks,
        pos: 0,
        base: base.offset(),
        end: text.len(),
    };
    let set = parser.xor_expr()?;
    if parser.pos != toks.len() {
        return parser.fail("trailing input after expression");
    }
    Ok(set.into_iter().collect())
}

/// Reads an emitted document back into term masks, `result[i]` for output `S_{i+1}`.
pub fn parse_document(text: &str, format: Format, base: IndexBase) -> Result<Vec<Vec<u32>>> {
    let mut found: Vec<(u64, Vec<u32>)> = Vec::new();
    match format {
        Format::Json => {
            let doc: JsonDesign = serde_json::from_str(text).map_err(|e| Error::Parse {
                pos: 0,
                msg: e.to_string(),
            })?;
            for out in doc.outputs {
                let masks = parse_expression(&out.anf, base)?;
                if masks != out.masks {
                    return Err(Error::Parse {
                        pos: 0,
                        msg: format!("S{}: expression and mask list disagree", out.output),
                    });
                }
                found.push((out.output as u64 - 1 + u64::from(base.offset()), masks));
            }
        }
        Format::AnfText => {
            let mut offset = 0;
            for line in text.split_inclusive('\n') {
                let toks = lex(line)?;
                if !toks.is_empty() {
                    let toks: Vec<(usize, Tok)> = toks.into_iter().map(|(p, t)| (p + offset, t)).collect();
                    found.push(parse_assignment(&toks, 0, base, offset + line.len())?);
                }
                offset += line.len();
            }
        }
        Format::Vhdl | Format::Verilog => {
            let toks = lex(text)?;
            let mut i = 0;
            while i < toks.len() {
                let is_lhs = matches!(&toks[i].1, Tok::Ident(s) if s == "S")
                    && matches!(toks.get(i + 1), Some((_, Tok::Open)))
                    && matches!(toks.get(i + 2), Some((_, Tok::Num(_))))
                    && matches!(toks.get(i + 3), Some((_, Tok::Close)))
                    && matches!(toks.get(i + 4), Some((_, Tok::Assign)));
                if !is_lhs {
                    i += 1;
                    continue;
                }
                let stop = toks[i..]
                    .iter()
                    .position(|(_, t)| *t == Tok::Semi)
                    .map(|p| i + p)
                    .ok_or(Error::Parse {
                        pos: toks[i].0,
                        msg: "assignment without `;`".into(),
                    })?;
                found.push(parse_assignment(&toks[..stop], i, base, toks[stop].0)?);
                i = stop + 1;
            }
        }
    }

    let base = u64::from(base.offset());
    found.sort_by_key(|(k, _)| *k);
    for (expected, (k, _)) in found.iter().enumerate() {
        if *k != expected as u64 + base {
            return Err(Error::Parse {
                pos: 0,
                msg: format!("outputs are not numbered contiguously from {base}"),
            });
        }
    }
    Ok(found.into_iter().map(|(_, m)| m).collect())
}

/// `S<index> <assign> expr` starting at `toks[start]` and ending at the slice end.
fn parse_assignment(
    toks: &[(usize, Tok)],
    start: usize,
    base: IndexBase,
    end: usize,
) -> Result<(u64, Vec<u32>)> {
    let fail = |pos: usize, msg: &str| Error::Parse { pos, msg: msg.into() };
    let at = |j: usize| toks.get(start + j).map(|(_, t)| t);
    let pos0 = toks.get(start).map_or(end, |(p, _)| *p);
    let index = match (at(0), at(1), at(2), at(3), at(4)) {
        (Some(Tok::Ident(s)), Some(Tok::Open), Some(Tok::Num(k)), Some(Tok::Close), Some(Tok::Assign))
            if s == "S" =>
        {
            *k
        }
        _ => return Err(fail(pos0, "expected `S(i) =` or `S(i) <=`")),
    };
    let body = &toks[start + 5..];
    let mut parser = ExprParser {
        toks: body,
        pos: 0,
        base: base.offset(),
        end,
    };
    let set = parser.xor_expr()?;
    if parser.pos != body.len() {
        return parser.fail("trailing input after expression");
    }
    Ok((index, set.into_iter().collect()))
}

/// Masks of every polynomial of a converter, for comparing against a re-parse.
pub fn converter_masks(converter: &ModConverter) -> Vec<Vec<u32>> {
    converter.polys().iter().map(AnfPolynomial::masks).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::generate_verified;
    use crate::transform::Method;

    fn p3() -> ModConverter {
        generate_verified(&ConverterSpec::new(3, 3).unwrap(), Method::Fast).unwrap()
    }

    #[test]
    fn format_names() {
        for f in Format::ALL {
            assert_eq!(f.name().parse::<Format>().unwrap(), f);
        }
        assert_eq!("edif".parse::<Format>(), Err(Error::UnsupportedFormat("edif".into())));
    }

    #[test]
    fn identifiers() {
        for ok in ["mod3_n3", "_x", "A1"] {
            assert!(validate_identifier(ok).is_ok(), "{ok}");
        }
        for bad in ["", "3mod", "mod-3", "a b", "é"] {
            assert!(validate_identifier(bad).is_err(), "{bad}");
        }
        let c = p3();
        let opts = EmitOptions::new(Format::Vhdl, "9lives");
        assert_eq!(emit(&c, &opts), Err(Error::InvalidIdentifier("9lives".into())));
    }

    #[test]
    fn vhdl_line_for_s1() {
        let text = emit(&p3(), &EmitOptions::for_spec(Format::Vhdl, p3().spec())).unwrap();
        assert!(text.contains(
            "  S(1) <= x(1) xor (x(1) and x(2)) xor x(3) xor (x(2) and x(3)) xor (x(1) and x(2) and x(3));\n"
        ));
        assert!(text.contains("x : in  std_logic_vector(3 downto 1);"));
        assert!(text.contains("S : out std_logic_vector(2 downto 1)"));
        assert!(text.contains("entity mod3_n3 is"));
    }

    #[test]
    fn verilog_line_for_s1() {
        let text = emit(&p3(), &EmitOptions::for_spec(Format::Verilog, p3().spec())).unwrap();
        assert!(text.contains("  assign S[1] = x[1] ^ (x[1] & x[2]) ^ x[3] ^ (x[2] & x[3]) ^ (x[1] & x[2] & x[3]);\n"));
        assert!(text.contains("input  wire [3:1] x,"));
    }

    #[test]
    fn constant_zero_literals() {
        let c = generate_verified(&ConverterSpec::new(2, 8).unwrap(), Method::Fast).unwrap();
        let spec = *c.spec();
        let vhdl = emit(&c, &EmitOptions::for_spec(Format::Vhdl, &spec)).unwrap();
        assert!(vhdl.contains("  S(3) <= '0';\n"));
        let v = emit(&c, &EmitOptions::for_spec(Format::Verilog, &spec)).unwrap();
        assert!(v.contains("  assign S[3] = 1'b0;\n"));
        let anf = emit(&c, &EmitOptions::for_spec(Format::AnfText, &spec)).unwrap();
        assert_eq!(anf, "S(1) = x(1)\nS(2) = x(2)\nS(3) = 0\nS(4) = 0\n");
    }

    #[test]
    fn passthrough_lines() {
        let c = generate_verified(&ConverterSpec::new(10, 8).unwrap(), Method::Fast).unwrap();
        let vhdl = emit(&c, &EmitOptions::for_spec(Format::Vhdl, c.spec())).unwrap();
        for i in 1..=3 {
            assert!(vhdl.contains(&format!("  S({i}) <= x({i});\n")));
        }
    }

    #[test]
    fn unverified_is_refused_unless_opted_out() {
        let c = crate::generate::generate(&ConverterSpec::new(3, 3).unwrap(), Method::Fast).unwrap();
        let mut opts = EmitOptions::for_spec(Format::AnfText, c.spec());
        assert_eq!(emit(&c, &opts), Err(Error::Unverified));
        opts.require_verified = false;
        assert!(emit(&c, &opts).is_ok());
    }

    #[test]
    fn wrapping_keeps_tokens() {
        let c = generate_verified(&ConverterSpec::new(7, 5).unwrap(), Method::Fast).unwrap();
        let mut opts = EmitOptions::for_spec(Format::Vhdl, c.spec());
        opts.wrap_column = 60;
        let text = emit(&c, &opts).unwrap();
        assert!(text.lines().filter(|l| l.starts_with("      xor")).count() > 0);
        for line in text.lines().filter(|l| l.starts_with("      xor")) {
            assert!(line.len() <= 60 || !line[6..].contains(" xor "), "{line}");
        }
        assert_eq!(parse_document(&text, Format::Vhdl, IndexBase::One).unwrap(), converter_masks(&c));
    }

    #[test]
    fn balanced_and_zero_based_roundtrip() {
        let c = generate_verified(&ConverterSpec::new(6, 7).unwrap(), Method::Fast).unwrap();
        for format in Format::ALL {
            for base in [IndexBase::One, IndexBase::Zero] {
                for chain in [ChainStyle::Flat, ChainStyle::Balanced] {
                    let mut opts = EmitOptions::for_spec(format, c.spec());
                    opts.index_base = base;
                    opts.chain = chain;
                    let text = emit(&c, &opts).unwrap();
                    assert_eq!(
                        parse_document(&text, format, base).unwrap(),
                        converter_masks(&c),
                        "{format} {base:?} {chain:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn balanced_shape() {
        let terms: Vec<Monomial> = [1, 2, 4, 8, 16].into_iter().map(Monomial::new).collect();
        assert_eq!(
            ANF.chain(&terms, 1, ChainStyle::Balanced),
            "((x(1) xor x(2)) xor x(3)) xor (x(4) xor x(5))"
        );
        assert_eq!(ANF.chain(&terms[..1], 1, ChainStyle::Balanced), "x(1)");
    }

    #[test]
    fn expression_reader_is_algebraic() {
        // (x1 xor x2) and x3 = x1x3 xor x2x3
        assert_eq!(parse_expression("(x(1) xor x(2)) and x(3)", IndexBase::One).unwrap(), vec![5, 6]);
        assert_eq!(parse_expression("x[0] ^ x[0]", IndexBase::Zero).unwrap(), Vec::<u32>::new());
        assert_eq!(parse_expression("'1' xor x(1)", IndexBase::One).unwrap(), vec![0, 1]);
        assert_eq!(parse_expression("1'b0", IndexBase::One).unwrap(), Vec::<u32>::new());
        assert!(parse_expression("x(1) xor", IndexBase::One).is_err());
        assert!(parse_expression("x(0)", IndexBase::One).is_err());
        assert!(parse_expression("(x(1)", IndexBase::One).is_err());
        assert!(parse_expression("x(1) or x(2)", IndexBase::One).is_err());
    }

    #[test]
    fn report_counts() {
        let r = Report::new(&p3());
        assert_eq!(r.outputs[0].truth_numbers, 3);
        assert_eq!(r.outputs[1].truth_numbers, 2);
        assert_eq!(r.outputs[0].spectrum_ones, 5);
        assert_eq!(r.verification.status, VerificationStatus::Pass);
        assert_eq!(r.verification.inputs_checked, 8);

        let c = generate_verified(&ConverterSpec::new(4, 1).unwrap(), Method::Fast).unwrap();
        let r = Report::new(&c);
        assert_eq!(r.outputs.len(), 1);
        assert_eq!(r.outputs[0].truth_numbers, 0);
        assert_eq!(r.outputs[0].terms, 0);
        assert_eq!(r.verification.status, VerificationStatus::Pass);

        let unverified = crate::generate::generate(&ConverterSpec::new(3, 3).unwrap(), Method::Fast).unwrap();
        assert_eq!(Report::new(&unverified).verification.status, VerificationStatus::NotRun);

        let json = emit_report(&p3());
        let back: Report = serde_json::from_str(&json).unwrap();
        assert_eq!(back, Report::new(&p3()));
    }
}
