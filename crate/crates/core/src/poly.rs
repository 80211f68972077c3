//! Sparse polynomials in t₁..t_n over ℚ, enough for versal base relations and tables.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{fmt_scalar, parse_scalar, Scalar};

pub type Exponents = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Exponents, Scalar>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        Self::monomial(nvars, vec![0; nvars], c)
    }

    /// t_{i+1}.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(nvars, e, Scalar::one())
    }

    pub fn monomial(nvars: usize, exps: Exponents, c: Scalar) -> Self {
        assert_eq!(exps.len(), nvars, "exponent vector length");
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    /// t_{i+1} t_{j+1}.
    pub fn quadratic(nvars: usize, i: usize, j: usize) -> Self {
        Self::monomial(nvars, quadratic_exponents(nvars, i, j), Scalar::one())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> Scalar {
        self.terms.get(exps).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Total degree; 0 for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self, d: u32) -> bool {
        self.terms.keys().all(|e| e.iter().sum::<u32>() == d)
    }

    fn add_term(&mut self, exps: Exponents, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps).or_insert_with(Scalar::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut p = self.clone();
        for (e, c) in &other.terms {
            p.add_term(e.clone(), c.clone());
        }
        p
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        let mut p = Poly::zero(self.nvars);
        for (e, v) in &self.terms {
            p.add_term(e.clone(), v * c);
        }
        p
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut p = Poly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Exponents = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                p.add_term(e, c1 * c2);
            }
        }
        p
    }

    /// Drops every term of degree > `max`.
    pub fn truncate(&self, max: u32) -> Poly {
        let terms = self.terms.iter().filter(|(e, _)| e.iter().sum::<u32>() <= max).map(|(e, c)| (e.clone(), c.clone())).collect();
        Poly { nvars: self.nvars, terms }
    }

    /// Homogeneous part of degree `d`.
    pub fn part(&self, d: u32) -> Poly {
        let terms = self.terms.iter().filter(|(e, _)| e.iter().sum::<u32>() == d).map(|(e, c)| (e.clone(), c.clone())).collect();
        Poly { nvars: self.nvars, terms }
    }

    /// Sets t_{var+1} = value, keeping the number of variables.
    pub fn substitute(&self, var: usize, value: &Scalar) -> Poly {
        let mut p = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            let k = std::mem::replace(&mut e2[var], 0);
            let mut f = c.clone();
            for _ in 0..k {
                f *= value;
            }
            p.add_term(e2, f);
        }
        p
    }

    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        let mut acc = Scalar::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    term *= x;
                }
            }
            acc += term;
        }
        acc
    }

    pub fn parse(nvars: usize, text: &str) -> Result<Poly> {
        let mut p = Poly::zero(nvars);
        for (c, e, k) in scan_terms(nvars, text)? {
            if k.is_some() {
                return Err(Error::Parse(format!("unexpected basis vector in {text:?}")));
            }
            p.add_term(e, c);
        }
        Ok(p)
    }
}

pub fn quadratic_exponents(nvars: usize, i: usize, j: usize) -> Exponents {
    let mut e = vec![0; nvars];
    e[i] += 1;
    e[j] += 1;
    e
}

fn monomial_string(e: &[u32]) -> String {
    let mut s = String::new();
    for (i, &k) in e.iter().enumerate() {
        match k {
            0 => {}
            1 => s.push_str(&format!("t{}", i + 1)),
            k => s.push_str(&format!("t{}^{}", i + 1, k)),
        }
    }
    s
}

/// Display order: by degree, then t₁-heavy monomials first.
fn ordered<'a, V>(terms: impl Iterator<Item = (&'a Exponents, V)>) -> Vec<(&'a Exponents, V)> {
    let mut v: Vec<_> = terms.collect();
    v.sort_by(|(a, _), (b, _)| a.iter().sum::<u32>().cmp(&b.iter().sum::<u32>()).then_with(|| b.cmp(a)));
    v
}

fn push_term(out: &mut String, c: &Scalar, body: &str) {
    let neg = c.is_negative();
    if out.is_empty() {
        if neg {
            out.push('-');
        }
    } else {
        out.push_str(if neg { " - " } else { " + " });
    }
    let a = c.abs();
    if body.is_empty() {
        out.push_str(&fmt_scalar(&a));
    } else if a.is_one() {
        out.push_str(body);
    } else {
        out.push_str(&fmt_scalar(&a));
        out.push_str(body);
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut s = String::new();
        for (e, c) in ordered(self.terms.iter()) {
            push_term(&mut s, c, &monomial_string(e));
        }
        write!(f, "{s}")
    }
}

/// Renders Σ_k p_k e_k as `-2t1e2 - 2t2^2e3`.
pub fn vector_to_string(v: &[Poly]) -> String {
    let mut s = String::new();
    for (k, p) in v.iter().enumerate() {
        for (e, c) in ordered(p.terms()) {
            push_term(&mut s, c, &format!("{}e{}", monomial_string(e), k + 1));
        }
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

/// Parses `e2 + 2t1e3 - 2t2e1`, `−2t₁e₂ − 2t₂²e₃` and similar into components.
pub fn parse_vector(nvars: usize, dim: usize, text: &str) -> Result<Vec<Poly>> {
    let mut v = vec![Poly::zero(nvars); dim];
    for (c, e, k) in scan_terms(nvars, text)? {
        let k = k.ok_or_else(|| Error::Parse(format!("term without basis vector in {text:?}")))?;
        if k == 0 || k > dim {
            return Err(Error::Parse(format!("e{k} out of range in {text:?}")));
        }
        v[k - 1].add_term(e, c);
    }
    Ok(v)
}

fn normalize(text: &str) -> String {
    let mut s = String::new();
    for ch in text.chars() {
        match ch {
            '−' | '–' => s.push('-'),
            '²' => s.push_str("^2"),
            '³' => s.push_str("^3"),
            '₀'..='₉' => s.push(char::from(b'0' + (ch as u32 - '₀' as u32) as u8)),
            '_' | '{' | '}' | '*' | '·' => {}
            c if c.is_whitespace() => {}
            c => s.push(c),
        }
    }
    s
}

type Term = (Scalar, Exponents, Option<usize>);

fn scan_terms(nvars: usize, text: &str) -> Result<Vec<Term>> {
    let s = normalize(text);
    let err = || Error::Parse(format!("bad polynomial {text:?}"));
    let b = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    if s.is_empty() || s == "0" {
        return Ok(out);
    }
    while i < b.len() {
        let mut neg = false;
        if b[i] == b'+' || b[i] == b'-' {
            neg = b[i] == b'-';
            i += 1;
        } else if !out.is_empty() {
            return Err(err());
        }
        let start = i;
        while i < b.len() && (b[i].is_ascii_digit() || b[i] == b'/') {
            i += 1;
        }
        let mut c = if i > start { parse_scalar(&s[start..i])? } else { Scalar::one() };
        if neg {
            c = -c;
        }
        let mut exps = vec![0u32; nvars];
        let mut vector = None;
        let mut read_factor = i > start;
        while i < b.len() && (b[i] == b't' || b[i] == b'e') {
            let is_t = b[i] == b't';
            i += 1;
            let s0 = i;
            while i < b.len() && b[i].is_ascii_digit() {
                i += 1;
            }
            let idx: usize = s[s0..i].parse().map_err(|_| err())?;
            if is_t {
                let mut pow = 1u32;
                if i < b.len() && b[i] == b'^' {
                    i += 1;
                    let s1 = i;
                    while i < b.len() && b[i].is_ascii_digit() {
                        i += 1;
                    }
                    pow = s[s1..i].parse().map_err(|_| err())?;
                }
                if idx == 0 || idx > nvars {
                    return Err(Error::Parse(format!("t{idx} out of range in {text:?}")));
                }
                exps[idx - 1] += pow;
            } else {
                if vector.is_some() {
                    return Err(err());
                }
                vector = Some(idx);
            }
            read_factor = true;
        }
        if !read_factor {
            return Err(err());
        }
        out.push((c, exps, vector));
    }
    Ok(out)
}
