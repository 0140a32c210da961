//! Structured records for `--format json`. Field order is fixed by the
//! struct definitions, so output is byte-stable for fixed inputs.

use num_bigint::{BigInt, BigUint};
use serde::Serialize;
use serde_json::Number;

use thagomizer_core::{IntPoly, SchurPoly};

pub const SCHEMA: u32 = 1;

/// An exact integer serialized as a bare JSON number of any size.
#[derive(Clone, Debug)]
pub struct Num(pub BigInt);

impl Serialize for Num {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let n: Number = self.0.to_string().parse().expect("integers are valid JSON numbers");
        n.serialize(s)
    }
}

impl From<&BigUint> for Num {
    fn from(v: &BigUint) -> Self {
        Num(BigInt::from(v.clone()))
    }
}

/// Coefficients `[c_0, c_1, ...]`; the zero polynomial is `[]`.
pub fn coeffs(p: &IntPoly) -> Vec<Num> {
    p.coeffs().iter().cloned().map(Num).collect()
}

#[derive(Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Poly,
    Table,
    Schur,
    Report,
}

#[derive(Serialize)]
pub struct Record<T: Serialize> {
    pub schema: u32,
    pub kind: Kind,
    #[serde(flatten)]
    pub payload: T,
}

impl<T: Serialize> Record<T> {
    pub fn new(kind: Kind, payload: T) -> Self {
        Record { schema: SCHEMA, kind, payload }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records always serialize")
    }
}

#[derive(Serialize)]
pub struct PolyPayload {
    pub n: usize,
    pub coeffs: Vec<Num>,
}

#[derive(Serialize)]
pub struct TableRow {
    pub n: usize,
    pub k: usize,
    pub c: Num,
}

#[derive(Serialize)]
pub struct TablePayload {
    pub rows: Vec<TableRow>,
}

#[derive(Serialize)]
pub struct DyckPayload {
    pub n: usize,
    pub method: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub counts: Vec<Num>,
}

#[derive(Serialize)]
pub struct FlatsPayload {
    pub n: usize,
    pub flats: usize,
    pub rank_counts: Vec<usize>,
    pub char_poly: Vec<Num>,
    pub kl: Vec<Num>,
}

#[derive(Serialize)]
pub struct SchurTerm {
    pub partition: Vec<usize>,
    pub coeffs: Vec<Num>,
}

pub fn schur_terms(f: &SchurPoly) -> Vec<SchurTerm> {
    f.terms()
        .map(|(lambda, c)| SchurTerm { partition: lambda.parts().to_vec(), coeffs: coeffs(c) })
        .collect()
}

#[derive(Serialize)]
pub struct SchurPayload {
    pub n: usize,
    pub terms: Vec<SchurTerm>,
}

#[derive(Serialize)]
pub struct ConjectureDiscrepancy {
    pub n: usize,
    pub partition: Vec<usize>,
    pub computed: Vec<Num>,
    pub conjectured: Vec<Num>,
}

#[derive(Serialize)]
pub struct ConjecturePayload {
    pub max: usize,
    pub passed: bool,
    pub discrepancies: Vec<ConjectureDiscrepancy>,
}

#[derive(Serialize, Clone)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub details: Vec<String>,
}

#[derive(Serialize)]
pub struct VerifyPayload {
    pub max: usize,
    pub passed: bool,
    pub checks: Vec<Check>,
}

