//! Text forms of structure equations, covectors and exact matrices.
//!
//! Salamon strings describe real 2-forms: a sum of terms
//! `[sign][rational '*'] pair`, where a pair is two digits (`23`) or
//! `(i,j)` once indices exceed 9, or the literal `0`. Covector strings allow
//! complex coefficients: `[sign][coef '*'] e<idx>`, where `coef` is a
//! rational, `i`, `<rational>i`, or a parenthesized scalar such as `(1-2i)`.

use std::fmt::Write as _;

use acx_core::linalg::fmt_rational;
use acx_core::{IndexWord, InvariantForm, Matrix, Scalar};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A syntax error at a byte offset inside one string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyntaxError {
    pub offset: usize,
    pub message: String,
}

impl SyntaxError {
    fn new(offset: usize, message: impl Into<String>) -> Self {
        SyntaxError { offset, message: message.into() }
    }
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn done(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.src.len()
    }

    fn err(&self, msg: impl Into<String>) -> SyntaxError {
        SyntaxError::new(self.pos, msg)
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| &self.src[start..self.pos])
    }

    /// `p` or `p/q` with unsigned `p`, `q`.
    fn rational(&mut self) -> Result<Option<BigRational>, SyntaxError> {
        let start = self.pos;
        let Some(num) = self.digits() else { return Ok(None) };
        let num: num_bigint::BigInt = num.parse().expect("digits");
        if !self.eat('/') {
            return Ok(Some(BigRational::from_integer(num)));
        }
        let Some(den) = self.digits() else { return Err(self.err("expected a denominator")) };
        let den: num_bigint::BigInt = den.parse().expect("digits");
        if den == num_bigint::BigInt::from(0) {
            return Err(SyntaxError::new(start, "zero denominator"));
        }
        Ok(Some(BigRational::new(num, den)))
    }

    fn sign(&mut self, first: bool) -> Result<Option<bool>, SyntaxError> {
        if self.eat('+') {
            return Ok(Some(false));
        }
        if self.eat('-') {
            return Ok(Some(true));
        }
        if first {
            Ok(Some(false))
        } else if self.done() {
            Ok(None)
        } else {
            Err(self.err("expected `+` or `-`"))
        }
    }

    /// A single-digit index.
    fn index(&mut self, dim: usize) -> Result<usize, SyntaxError> {
        let at = self.pos;
        let Some(c) = self.peek().filter(|c| c.is_ascii_digit()) else {
            return Err(self.err("expected an index"));
        };
        self.pos += 1;
        let i = c.to_digit(10).expect("digit") as usize;
        check_index(i, dim, at)
    }
}

fn check_index(i: usize, dim: usize, at: usize) -> Result<usize, SyntaxError> {
    if i == 0 || i > dim {
        return Err(SyntaxError::new(at, format!("index {i} outside 1..={dim}")));
    }
    Ok(i - 1)
}

fn wide_index(c: &mut Cursor<'_>, dim: usize) -> Result<usize, SyntaxError> {
    c.skip_ws();
    let at = c.pos;
    let Some(d) = c.digits() else { return Err(c.err("expected an index")) };
    let i: usize = d.parse().map_err(|_| SyntaxError::new(at, "index too large"))?;
    check_index(i, dim, at)
}

fn pair(c: &mut Cursor<'_>, dim: usize) -> Result<(usize, usize, usize), SyntaxError> {
    c.skip_ws();
    let at = c.pos;
    let (i, j) = if c.eat('(') {
        let i = wide_index(c, dim)?;
        if !c.eat(',') {
            return Err(c.err("expected `,`"));
        }
        let j = wide_index(c, dim)?;
        if !c.eat(')') {
            return Err(c.err("expected `)`"));
        }
        (i, j)
    } else {
        let i = c.index(dim)?;
        let j = c.index(dim)?;
        (i, j)
    };
    if i == j {
        return Err(SyntaxError::new(at, "repeated index in pair"));
    }
    Ok((i, j, at))
}

/// Parses a real 2-form in Salamon notation.
pub fn parse_salamon(src: &str, dim: usize) -> Result<InvariantForm, SyntaxError> {
    let mut c = Cursor::new(src);
    let mut out = InvariantForm::zero(dim, 2);
    if c.done() {
        return Err(c.err("empty expression"));
    }
    if src.trim() == "0" {
        return Ok(out);
    }
    let mut first = true;
    while let Some(neg) = c.sign(first)? {
        first = false;
        c.skip_ws();
        let coeff = match c.peek() {
            Some('(') => BigRational::one(),
            _ => {
                let save = c.pos;
                let q = c.rational()?;
                match q {
                    // a bare digit string is the pair itself
                    Some(q) if c.eat('*') => q,
                    Some(_) => {
                        c.pos = save;
                        BigRational::one()
                    }
                    None => return Err(c.err("expected a coefficient or an index pair")),
                }
            }
        };
        let (i, j, _) = pair(&mut c, dim)?;
        let mut s = Scalar::real(coeff);
        if neg {
            s = -s;
        }
        let (sign, w) = IndexWord::single(i).wedge(IndexWord::single(j)).expect("distinct indices");
        if sign < 0 {
            s = -s;
        }
        out.add_term(w, s);
        if c.done() {
            break;
        }
    }
    if !c.done() {
        return Err(c.err("unexpected trailing input"));
    }
    Ok(out)
}

/// Canonical Salamon rendering; fails for forms with complex coefficients
/// or of degree other than 2.
pub fn print_salamon(form: &InvariantForm) -> Option<String> {
    if form.degree() != 2 {
        return None;
    }
    if form.is_zero() {
        return Some("0".into());
    }
    let wide = form.dim() > 9;
    let mut out = String::new();
    for (k, (w, c)) in form.terms().enumerate() {
        if !c.is_real() {
            return None;
        }
        let re = c.re();
        if re.is_negative() {
            out.push('-');
        } else if k > 0 {
            out.push('+');
        }
        let abs = re.abs();
        if !abs.is_one() {
            let _ = write!(out, "{}*", fmt_rational(&abs));
        }
        let idx: Vec<usize> = w.indices().map(|i| i + 1).collect();
        if wide {
            let _ = write!(out, "({},{})", idx[0], idx[1]);
        } else {
            let _ = write!(out, "{}{}", idx[0], idx[1]);
        }
    }
    Some(out)
}

fn coefficient(c: &mut Cursor<'_>) -> Result<Option<Scalar>, SyntaxError> {
    c.skip_ws();
    let at = c.pos;
    if c.eat('(') {
        let start = c.pos;
        let Some(len) = c.src[start..].find(')') else { return Err(c.err("unclosed `(`")) };
        let body = &c.src[start..start + len];
        c.pos = start + len + 1;
        let s: Scalar = body.parse().map_err(|_| SyntaxError::new(start, format!("invalid scalar `{body}`")))?;
        return Ok(Some(s));
    }
    if c.eat('i') {
        return Ok(Some(Scalar::i()));
    }
    match c.rational()? {
        Some(q) => {
            if c.peek() == Some('i') {
                c.pos += 1;
                Ok(Some(&Scalar::real(q) * &Scalar::i()))
            } else {
                Ok(Some(Scalar::real(q)))
            }
        }
        None => {
            c.pos = at;
            Ok(None)
        }
    }
}

/// Parses a complex covector such as `e1+i*e2` into its `dim` components.
pub fn parse_covector(src: &str, dim: usize) -> Result<Vec<Scalar>, SyntaxError> {
    let mut c = Cursor::new(src);
    let mut out = vec![Scalar::zero(); dim];
    if c.done() {
        return Err(c.err("empty expression"));
    }
    if src.trim() == "0" {
        return Ok(out);
    }
    let mut first = true;
    while let Some(neg) = c.sign(first)? {
        first = false;
        let coeff = match coefficient(&mut c)? {
            Some(s) => {
                if !c.eat('*') {
                    return Err(c.err("expected `*` after a coefficient"));
                }
                s
            }
            None => Scalar::one(),
        };
        if !c.eat('e') {
            return Err(c.err("expected `e<index>`"));
        }
        let i = if c.eat('(') {
            let i = wide_index(&mut c, dim)?;
            if !c.eat(')') {
                return Err(c.err("expected `)`"));
            }
            i
        } else {
            wide_index(&mut c, dim)?
        };
        let coeff = if neg { -coeff } else { coeff };
        out[i] = &out[i] + &coeff;
        if c.done() {
            break;
        }
    }
    if !c.done() {
        return Err(c.err("unexpected trailing input"));
    }
    Ok(out)
}

/// Renders a coefficient so that [`coefficient`] reads it back: rationals
/// and imaginary rationals bare (`2/3`, `i`, `5/3i`), anything else in
/// parentheses. The sign is returned separately.
fn print_coefficient(c: &Scalar) -> (bool, String) {
    if c.is_real() {
        return (c.re().is_negative(), fmt_rational(&c.re().abs()));
    }
    if c.re().is_zero() {
        let abs = c.im().abs();
        let body = if abs.is_one() { "i".to_string() } else { format!("{}i", fmt_rational(&abs)) };
        return (c.im().is_negative(), body);
    }
    (false, format!("({c})"))
}

/// Canonical covector rendering, the inverse of [`parse_covector`].
pub fn print_covector(v: &[Scalar]) -> String {
    let wide = v.len() > 9;
    let mut out = String::new();
    for (k, c) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        let (neg, body) = print_coefficient(c);
        if neg {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        if body != "1" {
            let _ = write!(out, "{body}*");
        }
        if wide {
            let _ = write!(out, "e({})", k + 1);
        } else {
            let _ = write!(out, "e{}", k + 1);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Parses a matrix given as rows of scalar literals.
pub fn parse_matrix(rows: &[Vec<String>], dim: usize) -> Result<Matrix, (usize, usize, String)> {
    if rows.len() != dim {
        return Err((rows.len(), 0, format!("expected {dim} rows")));
    }
    let mut parsed = Vec::with_capacity(dim);
    for (r, row) in rows.iter().enumerate() {
        if row.len() != dim {
            return Err((r, row.len(), format!("expected {dim} entries")));
        }
        let mut out = Vec::with_capacity(dim);
        for (c, x) in row.iter().enumerate() {
            out.push(x.parse::<Scalar>().map_err(|e| (r, c, e.to_string()))?);
        }
        parsed.push(out);
    }
    Ok(Matrix::from_rows(dim, parsed).expect("square"))
}

pub fn print_matrix(m: &Matrix) -> Vec<Vec<String>> {
    m.to_rows().into_iter().map(|row| row.iter().map(|x| x.to_string()).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(dim: usize, i: &[usize], c: Scalar) -> InvariantForm {
        InvariantForm::from_terms(dim, 2, &[(i, c)]).unwrap()
    }

    #[test]
    fn salamon_terms() {
        assert_eq!(parse_salamon("-23", 4).unwrap(), e(4, &[1, 2], Scalar::from(-1)));
        assert_eq!(parse_salamon("1/2*12", 3).unwrap(), e(3, &[0, 1], Scalar::ratio(1, 2)));
        assert_eq!(parse_salamon("32", 4).unwrap(), e(4, &[1, 2], Scalar::from(-1)));
        assert!(parse_salamon("0", 4).unwrap().is_zero());
        let wide = parse_salamon("(1,10) - 2*(3,4)", 10).unwrap();
        assert_eq!(print_salamon(&wide).unwrap(), "(1,10)-2*(3,4)");
    }

    #[test]
    fn salamon_errors_report_offsets() {
        assert_eq!(parse_salamon("-25", 4).unwrap_err().offset, 2);
        assert_eq!(parse_salamon("12+", 4).unwrap_err().offset, 3);
        assert_eq!(parse_salamon("11", 4).unwrap_err().offset, 0);
        assert_eq!(parse_salamon("12 34", 4).unwrap_err().offset, 3);
        assert!(parse_salamon("", 4).is_err());
        assert!(parse_salamon("1/0*12", 4).is_err());
    }

    #[test]
    fn covectors() {
        let v = parse_covector("e1 + i*e2 - 2/3i*e4", 4).unwrap();
        assert_eq!(v, vec![Scalar::one(), Scalar::i(), Scalar::zero(), &Scalar::ratio(-2, 3) * &Scalar::i()]);
        assert_eq!(print_covector(&v), "e1+i*e2-2/3i*e4");
        assert_eq!(parse_covector(&print_covector(&v), 4).unwrap(), v);
        let w = parse_covector("(1-2i)*e3", 4).unwrap();
        assert_eq!(w[2], "1-2i".parse().unwrap());
        assert_eq!(print_covector(&w), "(1-2i)*e3");
        assert_eq!(print_covector(&[Scalar::zero(), -Scalar::i()]), "-i*e2");
        assert!(parse_covector("e5", 4).is_err());
        assert!(parse_covector("2 e1", 4).is_err());
    }
}
