//! Worked examples: each spec with its known Laurent polynomial.

use std::collections::BTreeSet;

use lgm_appendix::{run_appendix, NefPartition};
use lgm_arith::{identifiers, parse_laurent, LaurentPolynomial, VariableSet};
use lgm_periods::ModelSpec;
use lgm_transform::{run_extremal_variant, run_main_theorem, Options};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind", content = "partition")]
pub enum Construction {
    /// Block elimination.
    Main,
    /// Block elimination starting with the arrow `(k,2)->(k,3)`.
    Extremal,
    /// Torus chart of a nef-partition, given as JSON or the default one.
    Appendix(Option<&'static str>),
}

#[derive(Clone, Debug, Serialize)]
pub struct ExampleRecord {
    pub id: &'static str,
    pub title: &'static str,
    pub k: usize,
    pub degrees: &'static [usize],
    pub construction: Construction,
    pub expected: &'static str,
}

impl ExampleRecord {
    pub fn spec(&self) -> ModelSpec {
        ModelSpec::grassmannian(self.k, self.degrees).expect("corpus specs are Fano")
    }

    /// The expected polynomial over its own variables, sorted by name.
    pub fn expected_polynomial(&self) -> lgm_arith::Result<LaurentPolynomial> {
        let names: BTreeSet<String> = identifiers(self.expected).into_iter().collect();
        parse_laurent(self.expected, &VariableSet::new(names)?)
    }
}

const fn ex(
    id: &'static str,
    title: &'static str,
    k: usize,
    degrees: &'static [usize],
    construction: Construction,
    expected: &'static str,
) -> ExampleRecord {
    ExampleRecord {
        id,
        title,
        k,
        degrees,
        construction,
        expected,
    }
}

use Construction::{Appendix, Extremal, Main};

pub const CORPUS: &[ExampleRecord] = &[
    ex(
        "quadric-threefold",
        "quadric threefold, G(2,4) cut by a hyperplane",
        2,
        &[1],
        Main,
        "a_1_2/a_1_1 + 1/a_2_1 + a_2_1/a_1_1 + 1/a_1_2 + a_1_1",
    ),
    ex(
        "G25-two-hyperplanes",
        "fourfold section of G(2,5) by two hyperplanes",
        3,
        &[1, 1],
        Main,
        "a_2_2/a_1_1 + a_2_2/a_2_1 + 1/a_3_1 + a_3_1/a_2_1 + 1/a_2_2 + a_2_1 + a_1_1",
    ),
    ex(
        "quadric-surface",
        "quadric surface, G(2,4) cut by two hyperplanes",
        2,
        &[1, 1],
        Main,
        "1/a_1_1 + 1/a_2_1 + a_2_1 + a_1_1",
    ),
    ex(
        "quadric-surface-2",
        "quadric surface, first block through the arrow (k,2)->(k,3)",
        2,
        &[1, 1],
        Extremal,
        "a_1_2 + a_2_1 + 1/a_1_2 + 1/a_2_1",
    ),
    ex(
        "degree-40-threefold",
        "threefold of degree 40 and index 2, G(2,5) cut by three hyperplanes",
        3,
        &[1, 1, 1],
        Main,
        "(a_3_1+a_2_1)/(a_2_1*a_1_1) + 1/a_2_1 + 1/a_3_1 + a_3_1 + a_2_1 + a_1_1",
    ),
    ex(
        "X14-dim-4",
        "fourfold of index 2, G(2,6) cut by four hyperplanes",
        4,
        &[1, 1, 1, 1],
        Main,
        "(a_4_1+a_3_1)*(a_4_1+a_3_1+a_2_1)/(a_3_1*a_2_1*a_1_1) + (a_4_1+a_3_1)/(a_3_1*a_2_1) \
         + 1/a_3_1 + 1/a_4_1 + a_4_1 + a_3_1 + a_2_1 + a_1_1",
    ),
    ex(
        "index-2-fivefold",
        "fivefold of index 2, G(2,7) cut by five hyperplanes",
        5,
        &[1, 1, 1, 1, 1],
        Main,
        "(a_5_1+a_4_1)*(a_5_1+a_4_1+a_3_1)*(a_5_1+a_4_1+a_3_1+a_2_1)/(a_4_1*a_3_1*a_2_1*a_1_1) \
         + (a_5_1+a_4_1)*(a_5_1+a_4_1+a_3_1)/(a_4_1*a_3_1*a_2_1) + (a_5_1+a_4_1)/(a_4_1*a_3_1) \
         + 1/a_4_1 + 1/a_5_1 + a_5_1 + a_4_1 + a_3_1 + a_2_1 + a_1_1",
    ),
    ex(
        "S5",
        "del Pezzo surface of degree 5, G(2,5) cut by four hyperplanes",
        3,
        &[1, 1, 1, 1],
        Main,
        "(a_3_1*(1+a_2_1)/a_2_1 + 1/a_2_1 + 1)*(1 + a_2_1 + 1/a_3_1)",
    ),
    ex(
        "V14",
        "threefold of degree 14 and index 1, G(2,6) cut by five hyperplanes",
        4,
        &[1, 1, 1, 1, 1],
        Main,
        "(a_4_1*(1+a_3_1)*(1+a_3_1+a_2_1)/(a_3_1*a_2_1) + (1+a_3_1)/(a_3_1*a_2_1) + 1/a_3_1 + 1) \
         * (1 + a_2_1 + a_3_1 + 1/a_4_1)",
    ),
    ex(
        "22",
        "threefold, G(2,4) cut by a quadric",
        2,
        &[2],
        Main,
        "a_1_2 + 1/a_2_1 + (1/a_1_1)*(a_1_1 + a_2_1 + 1/a_1_2)^2",
    ),
    ex(
        "22-dim2",
        "surface, G(2,4) cut by a quadric and a hyperplane",
        2,
        &[2, 1],
        Main,
        "(a_1_1+a_1_2)*(1 + 1/a_1_1 + 1/a_1_2)^2",
    ),
    ex(
        "23",
        "threefold, G(2,4) cut by a cubic",
        2,
        &[3],
        Main,
        "(a_1_1/a_1_2)*(a_1_2 + (a_2_1^2 + a_1_1*a_2_1 + a_1_1 + a_2_1)/(a_1_1*a_2_1))^3",
    ),
    ex(
        "X10-dim-4",
        "fourfold of degree 10, G(2,5) cut by a quadric and a hyperplane",
        3,
        &[2, 1],
        Main,
        "a_1_2 + 1/a_2_1 + 1/a_3_1 \
         + (1/a_1_1)*(a_1_1 + a_2_1 + a_3_1 + 1/a_1_2 + a_3_1/(a_1_2*a_2_1))^2",
    ),
    ex(
        "V10",
        "threefold of degree 10, G(2,5) cut by a quadric and two hyperplanes",
        3,
        &[2, 1, 1],
        Main,
        "((a_3_1+a_1_2+1)/a_1_1)*(a_1_1 + 1/a_3_1 + 1 + 1/a_1_2 + a_3_1/a_1_2)^2",
    ),
    ex(
        "X20-dim-4",
        "fourfold, G(2,5) cut by two quadrics",
        3,
        &[2, 2],
        Main,
        "(1/a_1_1)*(a_1_1 + ((1+a_2_2)/a_3_1 + a_2_2/a_1_2)\
         *(a_3_1 + (1+a_1_2*a_2_2+a_2_2)/a_2_2)^2)^2",
    ),
    ex(
        "5-fold",
        "fivefold, G(2,6) cut by two quadrics and a hyperplane",
        4,
        &[2, 2, 1],
        Main,
        "(a_1_1 + a_1_2 + a_3_2 + a_3_2/(a_2_1*a_3_1)) \
         * (1 + (a_2_1 + a_3_2/(a_3_1*a_1_2))*(a_3_1 + 1/a_2_1 + 1/a_3_2 + 1/a_1_1)^2)^2",
    ),
    ex(
        "cubic-threefold-toric",
        "threefold, G(2,4) cut by a cubic, from a nef-partition",
        2,
        &[3],
        Appendix(None),
        "(y_2_2 + y_1_2)/(y_1_2*y_2_2*y_2_3) * (1 + y_1_2 + y_2_2 + y_2_3)^3",
    ),
    ex(
        "X14-dim-4-toric",
        "fourfold of index 2, G(2,6) cut by four hyperplanes, from a nef-partition",
        4,
        &[1, 1, 1, 1],
        Appendix(Some(r#"{"E":[5,6,7,8],"Em":[[1],[12],[2,9],[3,10]],"sm":[1,12,2,3]}"#)),
        "x_1_4 + x_2_4 + (1+y_2_2)*(1+y_2_3)/(y_2_2*y_2_3*x_2_4)*(1 + y_2_2 + y_2_2*y_2_3) \
         + (1+y_2_2)*(1+y_2_3)/x_1_4",
    ),
];

pub fn find(id: &str) -> Option<&'static ExampleRecord> {
    CORPUS.iter().find(|r| r.id == id)
}

#[derive(Clone, Debug, Serialize)]
pub struct ExampleResult {
    pub id: String,
    pub pass: bool,
    pub got: String,
    pub expected: String,
    pub error: Option<String>,
}

/// Runs the construction recorded for `r`.
pub fn regenerate(r: &ExampleRecord, verify: bool) -> Result<LaurentPolynomial, String> {
    let opts = Options {
        verify,
        deform: false,
    };
    match r.construction {
        Main => run_main_theorem(r.k, r.degrees, opts)
            .map(|t| t.result)
            .map_err(|e| e.to_string()),
        Extremal => run_extremal_variant(r.k, opts)
            .map(|t| t.result)
            .map_err(|e| e.to_string()),
        Appendix(p) => {
            let p = p
                .map(NefPartition::from_json)
                .transpose()
                .map_err(|e| e.to_string())?;
            run_appendix(r.k, r.degrees, p.as_ref())
                .map(|t| t.result)
                .map_err(|e| e.to_string())
        }
    }
}

/// Whether `got` is the same polynomial as `want`, up to variable order.
pub fn same_polynomial(got: &LaurentPolynomial, want: &LaurentPolynomial) -> bool {
    let a: BTreeSet<&String> = got.vars().names().iter().collect();
    let b: BTreeSet<&String> = want.vars().names().iter().collect();
    a == b
        && got
            .embed(want.vars())
            .map(|g| g.to_text() == want.to_text())
            .unwrap_or(false)
}

pub fn check_example(r: &ExampleRecord, verify: bool) -> ExampleResult {
    let want = match r.expected_polynomial() {
        Ok(w) => w,
        Err(e) => {
            return ExampleResult {
                id: r.id.into(),
                pass: false,
                got: String::new(),
                expected: r.expected.into(),
                error: Some(format!("expected text does not parse: {e}")),
            }
        }
    };
    match regenerate(r, verify) {
        Ok(got) => ExampleResult {
            id: r.id.into(),
            pass: same_polynomial(&got, &want),
            got: got.to_text(),
            expected: want.to_text(),
            error: None,
        },
        Err(e) => ExampleResult {
            id: r.id.into(),
            pass: false,
            got: String::new(),
            expected: want.to_text(),
            error: Some(e),
        },
    }
}

/// Checks the given records on worker threads; results are sorted by id.
pub fn check_examples(records: &[&ExampleRecord], verify: bool) -> Vec<ExampleResult> {
    let mut out: Vec<ExampleResult> = std::thread::scope(|s| {
        let handles: Vec<_> = records
            .iter()
            .map(|r| s.spawn(move || check_example(r, verify)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("example worker panicked"))
            .collect()
    });
    out.sort_by(|a, b| a.id.cmp(&b.id));
    out
}
