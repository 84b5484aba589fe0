//! Output records and their text, JSON, CSV, and LaTeX renderings.

use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::laurent::{LaurentPoly, Monomial, UniPoly};
use crate::triples::HodgeResult;

/// Echo of the parameters a record was computed from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Request {
    pub target: String,
    pub g: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d1: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d2: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tau: Option<String>,
    /// Chamber index; for pairs this is `⌊τ⌋ + 1`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d0: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub u: i64,
    pub v: i64,
    pub c: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PoincareTerm {
    pub t: i64,
    pub c: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub request: Request,
    pub dim: Option<u32>,
    pub terms: Vec<Term>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub poincare: Option<Vec<PoincareTerm>>,
}

impl OutputRecord {
    pub fn new(request: Request, result: &HodgeResult, with_poincare: bool) -> Self {
        let terms = result
            .poly
            .terms()
            .map(|(m, c)| Term {
                u: m.u,
                v: m.v,
                c: c.to_string(),
            })
            .collect();
        let poincare = with_poincare.then(|| {
            result
                .poly
                .diagonal()
                .terms()
                .map(|(t, c)| PoincareTerm {
                    t,
                    c: c.to_string(),
                })
                .collect()
        });
        OutputRecord {
            request,
            dim: result.dim,
            terms,
            poincare,
        }
    }

    pub fn poly(&self) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms.iter().map(|t| (t.u, t.v, parse_big(&t.c))))
    }

    pub fn poincare_poly(&self) -> Option<UniPoly> {
        self.poincare
            .as_ref()
            .map(|p| UniPoly::from_terms(p.iter().map(|t| (t.t, parse_big(&t.c)))))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }

    /// The Poincaré polynomial when requested, otherwise the Hodge polynomial.
    pub fn to_text(&self) -> String {
        match self.poincare_poly() {
            Some(p) => p.to_string(),
            None => self.poly().to_string(),
        }
    }

    pub fn to_latex(&self) -> String {
        match self.poincare_poly() {
            Some(p) => latex_univariate(&p),
            None => latex_poly(&self.poly()),
        }
    }

    pub const CSV_HEADER: &'static str =
        "target,g,rank,d1,d2,degree,sigma,tau,d0,dim,polynomial,poincare";

    pub fn to_csv(&self) -> String {
        let r = &self.request;
        let opt = |x: &Option<i64>| x.map(|v| v.to_string()).unwrap_or_default();
        let poincare = self
            .poincare_poly()
            .map(|p| p.to_string())
            .unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{}",
            r.target,
            r.g,
            r.rank.clone().unwrap_or_default(),
            opt(&r.d1),
            opt(&r.d2),
            opt(&r.degree),
            r.sigma.clone().unwrap_or_default(),
            r.tau.clone().unwrap_or_default(),
            opt(&r.d0),
            self.dim
                .map(|d| d.to_string())
                .unwrap_or_else(|| "empty".into()),
            self.poly(),
            poincare
        )
    }

    /// One tabular row: `g & degrees & stability & d0 & dim & $e$ \\`.
    pub fn to_latex_row(&self) -> String {
        let r = &self.request;
        let degrees = match (r.d1, r.d2, r.degree) {
            (Some(a), Some(b), _) => format!("{a}, {b}"),
            (_, _, Some(d)) => d.to_string(),
            _ => String::new(),
        };
        let stability = r
            .sigma
            .clone()
            .or_else(|| r.tau.clone())
            .unwrap_or_else(|| "--".into());
        let d0 = r.d0.map(|d| d.to_string()).unwrap_or_else(|| "--".into());
        let dim = self
            .dim
            .map(|d| d.to_string())
            .unwrap_or_else(|| "\\emptyset".into());
        format!(
            "{} & {} & {} & {} & {} & ${}$ \\\\",
            r.g,
            degrees,
            stability,
            d0,
            dim,
            self.to_latex()
        )
    }
}

fn parse_big(s: &str) -> BigInt {
    s.parse().expect("coefficient strings are decimal integers")
}

fn latex_monomial(m: Monomial) -> String {
    let pow = |base: &str, e: i64| match e {
        0 => String::new(),
        1 => base.to_string(),
        e => format!("{base}^{{{e}}}"),
    };
    if m.u == m.v {
        return match m.u {
            0 => String::new(),
            1 => "uv".into(),
            k => format!("(uv)^{{{k}}}"),
        };
    }
    format!("{}{}", pow("u", m.u), pow("v", m.v))
}

fn latex_terms<I: IntoIterator<Item = (String, BigInt)>>(terms: I) -> String {
    let mut s = String::new();
    for (i, (mono, c)) in terms.into_iter().enumerate() {
        let neg = c.sign() == num_bigint::Sign::Minus;
        let mag = if neg { -c } else { c };
        match (i, neg) {
            (0, true) => s.push('-'),
            (0, false) => {}
            (_, true) => s.push_str(" - "),
            (_, false) => s.push_str(" + "),
        }
        if mono.is_empty() || mag != BigInt::from(1) {
            let _ = write!(s, "{mag}");
        }
        s.push_str(&mono);
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

/// LaTeX form with the `(uv)^k` grouping.
pub fn latex_poly(p: &LaurentPoly) -> String {
    latex_terms(p.terms().map(|(m, c)| (latex_monomial(m), c.clone())))
}

pub fn latex_univariate(p: &UniPoly) -> String {
    latex_terms(p.terms().map(|(e, c)| {
        let mono = match e {
            0 => String::new(),
            1 => "t".into(),
            e => format!("t^{{{e}}}"),
        };
        (mono, c.clone())
    }))
}
