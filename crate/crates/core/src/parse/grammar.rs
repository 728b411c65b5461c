//! Composition-expression parser.
//!
//! A composition expression is a separated list of constituents, in one of
//! three shapes tried in a fixed order:
//!
//! ```text
//! CMP  = PAT1 | PAT2 | PAT3
//! PATi = START CSTi (SEP CSTi)+ END
//! CST1 = EXPR? W CPD                      40Bi2O3
//! CST2 = (CSTt | OB CSTt CB) W EXPR       (40Bi2O3+60B2O3)30
//! CST3 = EXPR W (CSTt | OB CSTt CB)       20(AgI:2AgCl)
//! CSTt = item (SEP item)*                 inner constituent list
//! ```
//!
//! `CPD` is a lexicon compound, `OB`/`CB` are matched parentheses or square
//! brackets, `W` is optional whitespace and `SEP` is one of `- + * · ⋅ : , ;`
//! (with Unicode dash variants folded in) or bare whitespace. `EXPR` is a
//! plain number, or, with variables enabled, an arithmetic expression over
//! decimals and single lowercase letters (`100-x`). An omitted coefficient
//! means 1.
//!
//! Disambiguation rules, applied uniformly:
//! - patterns are tried in order PAT1, PAT2, PAT3; the first success wins;
//! - an unparenthesized `CSTt` inside CST2/CST3 is a ratio list and only
//!   accepts `:` separators; the full separator set applies inside brackets;
//! - an empty separator is allowed when the next element starts with an
//!   opening bracket (`]y(B2O3)1-y`);
//! - START requires the preceding character (if any) to be none of
//!   alphanumeric, `.`, `)`, `]`;
//! - END rejects a match that is immediately followed by an alphanumeric
//!   character or an opening bracket, or whose next non-space character is a
//!   separator (a dangling separator means the expression continues in a way
//!   the pattern could not parse).

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Range;

use thiserror::Error;

use super::expr::Expr;
use super::lexicon::CompoundLexicon;

#[derive(Debug, Error, PartialEq)]
pub enum ParseError {
    #[error("no composition pattern matches")]
    NoMatch,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PatternTag {
    Pat1,
    Pat2,
    Pat3,
}

impl fmt::Display for PatternTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternTag::Pat1 => f.write_str("PAT1"),
            PatternTag::Pat2 => f.write_str("PAT2"),
            PatternTag::Pat3 => f.write_str("PAT3"),
        }
    }
}

/// One node of a parsed composition: a coefficient attached to either a
/// compound or a nested sub-composition.
#[derive(Debug, Clone, PartialEq)]
pub enum CompositionNode {
    Leaf { coefficient: Expr, compound: String },
    Group { coefficient: Expr, children: Vec<CompositionNode> },
}

impl CompositionNode {
    pub fn leaf(coefficient: Expr, compound: impl Into<String>) -> Self {
        CompositionNode::Leaf {
            coefficient,
            compound: compound.into(),
        }
    }

    pub fn group(coefficient: Expr, children: Vec<CompositionNode>) -> Self {
        CompositionNode::Group {
            coefficient,
            children,
        }
    }

    pub fn coefficient(&self) -> &Expr {
        match self {
            CompositionNode::Leaf { coefficient, .. } => coefficient,
            CompositionNode::Group { coefficient, .. } => coefficient,
        }
    }

    fn collect_variables(&self, out: &mut BTreeSet<char>) {
        out.extend(self.coefficient().variables());
        if let CompositionNode::Group { children, .. } = self {
            for c in children {
                c.collect_variables(out);
            }
        }
    }

    fn collect_compounds<'a>(&'a self, out: &mut BTreeSet<&'a str>) {
        match self {
            CompositionNode::Leaf { compound, .. } => {
                out.insert(compound);
            }
            CompositionNode::Group { children, .. } => {
                for c in children {
                    c.collect_compounds(out);
                }
            }
        }
    }

    fn fmt_indent(&self, f: &mut fmt::Formatter<'_>, depth: usize) -> fmt::Result {
        let pad = "  ".repeat(depth);
        match self {
            CompositionNode::Leaf {
                coefficient,
                compound,
            } => writeln!(f, "{pad}{coefficient} {compound}"),
            CompositionNode::Group {
                coefficient,
                children,
            } => {
                writeln!(f, "{pad}{coefficient} (")?;
                for c in children {
                    c.fmt_indent(f, depth + 1)?;
                }
                writeln!(f, "{pad})")
            }
        }
    }
}

/// Result of matching `CMP` against a text: which pattern fired, the
/// top-level constituents (always at least two) and the byte span of the
/// match.
#[derive(Debug, Clone, PartialEq)]
pub struct ParsedComposition {
    pub pattern: PatternTag,
    pub children: Vec<CompositionNode>,
    pub span: Range<usize>,
}

impl ParsedComposition {
    /// Variables occurring anywhere in the coefficient expressions.
    pub fn variables(&self) -> BTreeSet<char> {
        let mut out = BTreeSet::new();
        for c in &self.children {
            c.collect_variables(&mut out);
        }
        out
    }

    /// Distinct compounds in leaf positions.
    pub fn compounds(&self) -> BTreeSet<&str> {
        let mut out = BTreeSet::new();
        for c in &self.children {
            c.collect_compounds(&mut out);
        }
        out
    }
}

impl fmt::Display for ParsedComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.pattern)?;
        for c in &self.children {
            c.fmt_indent(f, 1)?;
        }
        Ok(())
    }
}

fn fold_dash(c: char) -> char {
    match c {
        '\u{2212}' | '\u{2013}' | '\u{2014}' => '-',
        _ => c,
    }
}

fn is_sep_char(c: char) -> bool {
    matches!(fold_dash(c), '-' | '+' | '*' | '\u{00B7}' | '\u{22C5}' | ':' | ',' | ';')
}

fn is_ob(c: char) -> bool {
    c == '(' || c == '['
}

fn matching_cb(ob: char) -> char {
    if ob == '(' {
        ')'
    } else {
        ']'
    }
}

struct Parser<'a> {
    text: &'a str,
    lexicon: &'a CompoundLexicon,
    allow_variables: bool,
}

impl<'a> Parser<'a> {
    fn ch(&self, pos: usize) -> Option<char> {
        self.text[pos..].chars().next()
    }

    fn skip_ws(&self, mut pos: usize) -> usize {
        while let Some(c) = self.ch(pos) {
            if c.is_whitespace() {
                pos += c.len_utf8();
            } else {
                break;
            }
        }
        pos
    }

    // ---- EXPR -----------------------------------------------------------

    fn parse_number(&self, pos: usize) -> Option<(f64, usize)> {
        let bytes = self.text.as_bytes();
        let mut end = pos;
        while end < bytes.len() && bytes[end].is_ascii_digit() {
            end += 1;
        }
        let int_digits = end - pos;
        // A dot only belongs to the number if digits follow it.
        if end < bytes.len() && bytes[end] == b'.' {
            let mut frac_end = end + 1;
            while frac_end < bytes.len() && bytes[frac_end].is_ascii_digit() {
                frac_end += 1;
            }
            if frac_end > end + 1 && (int_digits > 0 || frac_end > end + 1) {
                end = frac_end;
            }
        }
        if end == pos || (int_digits == 0 && !self.text[pos..end].contains('.')) {
            return None;
        }
        self.text[pos..end].parse::<f64>().ok().map(|n| (n, end))
    }

    fn parse_variable(&self, pos: usize) -> Option<(char, usize)> {
        let c = self.ch(pos)?;
        if !c.is_ascii_lowercase() {
            return None;
        }
        let next = self.ch(pos + c.len_utf8());
        if matches!(next, Some(n) if n.is_ascii_lowercase()) {
            return None; // part of a longer word
        }
        Some((c, pos + c.len_utf8()))
    }

    fn parse_atom(&self, pos: usize) -> Option<(Expr, usize)> {
        if let Some((n, end)) = self.parse_number(pos) {
            return Some((Expr::Number(n), end));
        }
        if self.allow_variables {
            if let Some((v, end)) = self.parse_variable(pos) {
                return Some((Expr::Variable(v), end));
            }
            if let Some(ob) = self.ch(pos).filter(|&c| is_ob(c)) {
                let inner = self.skip_ws(pos + 1);
                let (e, after) = self.parse_expr(inner)?;
                let close = self.skip_ws(after);
                if self.ch(close) == Some(matching_cb(ob)) {
                    return Some((e, close + 1));
                }
            }
        }
        None
    }

    fn parse_factor(&self, pos: usize) -> Option<(Expr, usize)> {
        if self.allow_variables {
            if let Some(c) = self.ch(pos) {
                if fold_dash(c) == '-' {
                    let inner = self.skip_ws(pos + c.len_utf8());
                    let (e, end) = self.parse_factor(inner)?;
                    return Some((Expr::Negate(Box::new(e)), end));
                }
            }
        }
        self.parse_atom(pos)
    }

    fn parse_term(&self, pos: usize) -> Option<(Expr, usize)> {
        let (mut lhs, mut pos) = self.parse_factor(pos)?;
        if self.allow_variables {
            loop {
                let op_pos = self.skip_ws(pos);
                if self.ch(op_pos) != Some('\u{00D7}') {
                    break;
                }
                let rhs_pos = self.skip_ws(op_pos + '\u{00D7}'.len_utf8());
                let Some((rhs, end)) = self.parse_factor(rhs_pos) else {
                    break;
                };
                lhs = Expr::mul(lhs, rhs);
                pos = end;
            }
        }
        Some((lhs, pos))
    }

    /// Expression parse; with variables disabled this degrades to a plain
    /// decimal literal.
    fn parse_expr(&self, pos: usize) -> Option<(Expr, usize)> {
        if !self.allow_variables {
            return self
                .parse_number(pos)
                .map(|(n, end)| (Expr::Number(n), end));
        }
        let (mut lhs, mut pos) = self.parse_term(pos)?;
        loop {
            let op_pos = self.skip_ws(pos);
            let Some(op_char) = self.ch(op_pos) else { break };
            let op = match fold_dash(op_char) {
                '+' => super::expr::BinOp::Add,
                '-' => super::expr::BinOp::Sub,
                _ => break,
            };
            let rhs_pos = self.skip_ws(op_pos + op_char.len_utf8());
            let Some((rhs, end)) = self.parse_term(rhs_pos) else {
                break; // the operator was a separator, not arithmetic
            };
            lhs = Expr::Binary(op, Box::new(lhs), Box::new(rhs));
            pos = end;
        }
        Some((lhs, pos))
    }

    // ---- constituents ---------------------------------------------------

    /// `CST1 = EXPR? W CPD`; an omitted coefficient means 1.
    fn parse_cst1(&self, pos: usize) -> Option<(CompositionNode, usize)> {
        let (coeff, cpd_pos) = match self.parse_expr(pos) {
            Some((e, end)) => (e, self.skip_ws(end)),
            None => (Expr::Number(1.0), pos),
        };
        let compound = self.lexicon.longest_match_at(self.text, cpd_pos)?;
        Some((
            CompositionNode::leaf(coeff, compound),
            cpd_pos + compound.len(),
        ))
    }

    /// Bare ratio list: `CST1 (':' CST1)*`, used for an unparenthesized
    /// `CSTt` inside CST2/CST3.
    fn parse_ratio_list(&self, pos: usize) -> Option<(Vec<CompositionNode>, usize)> {
        let (first, mut pos) = self.parse_cst1(pos)?;
        let mut items = vec![first];
        loop {
            let sep = self.skip_ws(pos);
            if self.ch(sep) != Some(':') {
                break;
            }
            let next = self.skip_ws(sep + 1);
            let Some((item, end)) = self.parse_cst1(next) else {
                break;
            };
            items.push(item);
            pos = end;
        }
        Some((items, pos))
    }

    /// One item of a bracketed `CSTt`: a plain constituent or a nested
    /// coefficient-carrying group.
    fn parse_cst_item(&self, pos: usize) -> Option<(CompositionNode, usize)> {
        if let Some(r) = self.parse_cst1(pos) {
            return Some(r);
        }
        // OB CSTt CB W EXPR   e.g. "(Na2O)x"
        if let Some(r) = self.parse_bracketed(pos).and_then(|(items, after)| {
            let coeff_pos = self.skip_ws(after);
            let (coeff, end) = self.parse_expr(coeff_pos)?;
            Some((CompositionNode::group(coeff, items), end))
        }) {
            return Some(r);
        }
        // EXPR W OB CSTt CB   e.g. "20(AgI:2AgCl)"
        let (coeff, after) = self.parse_expr(pos)?;
        let ob_pos = self.skip_ws(after);
        let (items, end) = self.parse_bracketed(ob_pos)?;
        Some((CompositionNode::group(coeff, items), end))
    }

    /// `OB CSTt CB` with the full separator set inside.
    fn parse_bracketed(&self, pos: usize) -> Option<(Vec<CompositionNode>, usize)> {
        let ob = self.ch(pos).filter(|&c| is_ob(c))?;
        let mut cursor = self.skip_ws(pos + 1);
        let (first, end) = self.parse_cst_item(cursor)?;
        let mut items = vec![first];
        cursor = end;
        loop {
            let Some(sep_end) = self.parse_sep(cursor, true) else {
                break;
            };
            let Some((item, end)) = self.parse_cst_item(sep_end) else {
                break;
            };
            items.push(item);
            cursor = end;
        }
        let close = self.skip_ws(cursor);
        if self.ch(close) != Some(matching_cb(ob)) {
            return None;
        }
        Some((items, close + 1))
    }

    /// `CST2 = (CSTt | OB CSTt CB) W EXPR` — trailing coefficient.
    fn parse_cst2(&self, pos: usize) -> Option<(CompositionNode, usize)> {
        let (items, after) = if self.ch(pos).is_some_and(is_ob) {
            self.parse_bracketed(pos)?
        } else {
            self.parse_ratio_list(pos)?
        };
        let coeff_pos = self.skip_ws(after);
        let (coeff, end) = self.parse_expr(coeff_pos)?;
        Some((CompositionNode::group(coeff, items), end))
    }

    /// `CST3 = EXPR W (CSTt | OB CSTt CB)` — leading coefficient.
    fn parse_cst3(&self, pos: usize) -> Option<(CompositionNode, usize)> {
        let (coeff, after) = self.parse_expr(pos)?;
        let rest = self.skip_ws(after);
        let (items, end) = if self.ch(rest).is_some_and(is_ob) {
            self.parse_bracketed(rest)?
        } else {
            self.parse_ratio_list(rest)?
        };
        Some((CompositionNode::group(coeff, items), end))
    }

    /// Separator between constituents: an explicit separator char with
    /// optional whitespace, or bare whitespace, or (when allowed) nothing
    /// before an opening bracket.
    fn parse_sep(&self, pos: usize, allow_empty_before_ob: bool) -> Option<usize> {
        let ws_end = self.skip_ws(pos);
        if let Some(c) = self.ch(ws_end) {
            if is_sep_char(c) {
                return Some(self.skip_ws(ws_end + c.len_utf8()));
            }
            if ws_end > pos {
                return Some(ws_end);
            }
            if allow_empty_before_ob && is_ob(c) {
                return Some(pos);
            }
        }
        None
    }

    fn end_ok(&self, pos: usize) -> bool {
        let Some(c) = self.ch(pos) else { return true };
        if c.is_alphanumeric() || is_ob(c) || is_sep_char(c) {
            return false;
        }
        if c.is_whitespace() {
            let next = self.skip_ws(pos);
            if let Some(n) = self.ch(next) {
                if is_sep_char(n) {
                    return false;
                }
            }
        }
        true
    }

    fn parse_pattern(&self, start: usize, tag: PatternTag) -> Option<(Vec<CompositionNode>, usize)> {
        let parse_elem = |pos: usize| -> Option<(CompositionNode, usize)> {
            match tag {
                PatternTag::Pat1 => self.parse_cst1(pos),
                PatternTag::Pat2 => self.parse_cst2(pos),
                PatternTag::Pat3 => self.parse_cst3(pos),
            }
        };
        let allow_empty_sep = tag == PatternTag::Pat2;
        let (first, mut pos) = parse_elem(start)?;
        let mut children = vec![first];
        loop {
            let Some(sep_end) = self.parse_sep(pos, allow_empty_sep) else {
                break;
            };
            let Some((elem, end)) = parse_elem(sep_end) else {
                break;
            };
            children.push(elem);
            pos = end;
        }
        if children.len() < 2 || !self.end_ok(pos) {
            return None;
        }
        Some((children, pos))
    }

    fn valid_start(&self, pos: usize) -> bool {
        if pos == 0 {
            return true;
        }
        let prev = self.text[..pos].chars().next_back().unwrap();
        !(prev.is_alphanumeric() || prev == '.' || prev == ')' || prev == ']')
    }
}

/// Finds the first composition expression in `text`. Patterns are tried in
/// order PAT1, PAT2, PAT3 at every valid start position, left to right.
pub fn parse_composition(
    text: &str,
    lexicon: &CompoundLexicon,
    allow_variables: bool,
) -> Result<ParsedComposition, ParseError> {
    let parser = Parser {
        text,
        lexicon,
        allow_variables,
    };
    let mut pos = 0;
    while pos < text.len() {
        if parser.valid_start(pos) {
            for tag in [PatternTag::Pat1, PatternTag::Pat2, PatternTag::Pat3] {
                if let Some((children, end)) = parser.parse_pattern(pos, tag) {
                    return Ok(ParsedComposition {
                        pattern: tag,
                        children,
                        span: pos..end,
                    });
                }
            }
        }
        pos += parser.ch(pos).map_or(1, |c| c.len_utf8());
    }
    Err(ParseError::NoMatch)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::expr::Expr;

    fn lexicon() -> CompoundLexicon {
        CompoundLexicon::default_lexicon()
    }

    fn parse(text: &str) -> ParsedComposition {
        parse_composition(text, &lexicon(), false).unwrap()
    }

    fn parse_vars(text: &str) -> ParsedComposition {
        parse_composition(text, &lexicon(), true).unwrap()
    }

    fn leaf(c: f64, cpd: &str) -> CompositionNode {
        CompositionNode::leaf(Expr::number(c), cpd)
    }

    #[test]
    fn pat1_simple() {
        let p = parse("40Bi2O3 * 60B2O3");
        assert_eq!(p.pattern, PatternTag::Pat1);
        assert_eq!(p.children, vec![leaf(40.0, "Bi2O3"), leaf(60.0, "B2O3")]);
        assert_eq!(p.span, 0..16);
    }

    #[test]
    fn pat2_nested() {
        let p = parse("(40Bi2O3+60B2O3)30 - (AgI+AgCl)70");
        assert_eq!(p.pattern, PatternTag::Pat2);
        assert_eq!(
            p.children,
            vec![
                CompositionNode::group(
                    Expr::number(30.0),
                    vec![leaf(40.0, "Bi2O3"), leaf(60.0, "B2O3")]
                ),
                CompositionNode::group(
                    Expr::number(70.0),
                    vec![leaf(1.0, "AgI"), leaf(1.0, "AgCl")]
                ),
            ]
        );
    }

    #[test]
    fn pat3_mixed() {
        let p = parse("40Bi2O3,40B2O3,20(AgI:2AgCl)");
        assert_eq!(p.pattern, PatternTag::Pat3);
        assert_eq!(
            p.children,
            vec![
                CompositionNode::group(Expr::number(40.0), vec![leaf(1.0, "Bi2O3")]),
                CompositionNode::group(Expr::number(40.0), vec![leaf(1.0, "B2O3")]),
                CompositionNode::group(
                    Expr::number(20.0),
                    vec![leaf(1.0, "AgI"), leaf(2.0, "AgCl")]
                ),
            ]
        );
    }

    #[test]
    fn variables_in_pat1() {
        let p = parse_vars("xNa2O (100-x)SiO2");
        assert_eq!(p.pattern, PatternTag::Pat1);
        assert_eq!(
            p.children,
            vec![
                CompositionNode::leaf(Expr::var('x'), "Na2O"),
                CompositionNode::leaf(Expr::sub(Expr::number(100.0), Expr::var('x')), "SiO2"),
            ]
        );
    }

    #[test]
    fn nested_caption_expression() {
        // Unicode minus, nested bracket groups with trailing coefficients.
        let p = parse_vars("[(Na2O)x(Rb2O)1\u{2212}x]y(B2O3)1\u{2212}y");
        assert_eq!(p.pattern, PatternTag::Pat2);
        let one_minus = |v: char| Expr::sub(Expr::number(1.0), Expr::var(v));
        assert_eq!(
            p.children,
            vec![
                CompositionNode::group(
                    Expr::var('y'),
                    vec![
                        CompositionNode::group(Expr::var('x'), vec![leaf(1.0, "Na2O")]),
                        CompositionNode::group(one_minus('x'), vec![leaf(1.0, "Rb2O")]),
                    ]
                ),
                CompositionNode::group(one_minus('y'), vec![leaf(1.0, "B2O3")]),
            ]
        );
        assert_eq!(p.variables(), ['x', 'y'].into_iter().collect());
    }

    #[test]
    fn embedded_in_caption_prose() {
        let text = "Glass compositions [(Na2O)x(Rb2O)1-x]y(B2O3)1-y studied here (mol%)";
        let p = parse_vars(text);
        assert_eq!(p.pattern, PatternTag::Pat2);
        assert_eq!(&text[p.span.clone()], "[(Na2O)x(Rb2O)1-x]y(B2O3)1-y");
    }

    #[test]
    fn no_match_without_compound() {
        assert_eq!(
            parse_composition("hardness 5.6 GPa", &lexicon(), false),
            Err(ParseError::NoMatch)
        );
    }

    #[test]
    fn no_variables_when_disabled() {
        assert_eq!(
            parse_composition("xNa2O (100-x)SiO2", &lexicon(), false),
            Err(ParseError::NoMatch)
        );
    }

    #[test]
    fn single_constituent_rejected() {
        // (SEP CST)+ requires at least two constituents.
        assert_eq!(
            parse_composition("40Bi2O3", &lexicon(), false),
            Err(ParseError::NoMatch)
        );
    }

    #[test]
    fn dangling_separator_rejected() {
        assert_eq!(
            parse_composition("70SiO2 + 20Al2O3 +", &lexicon(), false),
            Err(ParseError::NoMatch)
        );
    }

    #[test]
    fn trailing_prose_allowed() {
        let text = "40Bi2O3 * 60B2O3 glass";
        let p = parse(text);
        assert_eq!(&text[p.span.clone()], "40Bi2O3 * 60B2O3");
    }

    #[test]
    fn adjacent_alnum_rejected() {
        assert_eq!(
            parse_composition("40Bi2O3 * 60B2O3x", &lexicon(), false),
            Err(ParseError::NoMatch)
        );
    }

    #[test]
    fn element_style_composition_rejected() {
        // Plain element compositions are outside the compound grammar.
        assert_eq!(
            parse_composition("Ge25Ga10S65", &lexicon(), false),
            Err(ParseError::NoMatch)
        );
    }

    #[test]
    fn implicit_unit_coefficients() {
        let p = parse("AgI+AgCl");
        assert_eq!(p.children, vec![leaf(1.0, "AgI"), leaf(1.0, "AgCl")]);
    }

    #[test]
    fn bare_trailing_coefficient_groups() {
        let p = parse("AgI30-AgCl70");
        assert_eq!(p.pattern, PatternTag::Pat2);
        assert_eq!(
            p.children,
            vec![
                CompositionNode::group(Expr::number(30.0), vec![leaf(1.0, "AgI")]),
                CompositionNode::group(Expr::number(70.0), vec![leaf(1.0, "AgCl")]),
            ]
        );
    }

    #[test]
    fn decimal_coefficients() {
        let p = parse("99.5SiO2-0.5Er2O3");
        assert_eq!(p.children, vec![leaf(99.5, "SiO2"), leaf(0.5, "Er2O3")]);
    }

    #[test]
    fn middle_dot_separator() {
        let p = parse("95TeO2\u{00B7}5ZnO");
        assert_eq!(p.children, vec![leaf(95.0, "TeO2"), leaf(5.0, "ZnO")]);
    }

    #[test]
    fn unit_suffix_in_cell_allowed() {
        let text = "40Bi2O3-60B2O3 (mol%)";
        let p = parse(text);
        assert_eq!(&text[p.span.clone()], "40Bi2O3-60B2O3");
    }

    #[test]
    fn display_prints_tree() {
        let p = parse("(40Bi2O3+60B2O3)30 - (AgI+AgCl)70");
        let s = p.to_string();
        assert!(s.contains("PAT2"));
        assert!(s.contains("Bi2O3"));
    }
}
