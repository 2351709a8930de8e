//! JSON documents exchanged on stdin/stdout.
//!
//! Every rational travels as a string, `"p/q"` in lowest terms with `q > 0`
//! or `"n"` for integers. Integers inside integer sets and chain shifts are
//! strings as well; lattice coordinates are JSON integers. On input any
//! integer field accepts either form.

use std::str::FromStr;

use nset_core::{
    BigInt, BoxSet, ChainSpec, Interval, IntervalSet, LatticeSet, PositiveIntegerSet, Rational,
};
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::CliError;

/// An integer on the wire: a JSON number or a decimal string.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum WireInt {
    Number(i64),
    Text(String),
}

impl WireInt {
    pub fn parse(&self) -> Result<BigInt, CliError> {
        match self {
            WireInt::Number(n) => Ok(BigInt::from(*n)),
            WireInt::Text(s) => parse_integer(s),
        }
    }

    /// Number when it fits an `i64`, string otherwise.
    pub fn number(v: &BigInt) -> Self {
        match v.to_i64() {
            Some(n) => WireInt::Number(n),
            None => WireInt::Text(v.to_string()),
        }
    }
}

pub type WirePair = [String; 2];

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Document {
    IntervalSet {
        intervals: Vec<WirePair>,
    },
    BoxSet {
        dimension: usize,
        boxes: Vec<Vec<WirePair>>,
    },
    IntegerSet {
        values: Vec<WireInt>,
    },
    LatticeSet {
        dimension: usize,
        vectors: Vec<Vec<WireInt>>,
    },
    ChainSpec {
        b: Vec<WireInt>,
        lambda: Vec<String>,
    },
    Report {
        #[serde(flatten)]
        fields: Map<String, Value>,
    },
}

/// Non-report kinds, with unknown fields rejected. Reports keep every field.
#[derive(Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
enum Strict {
    IntervalSet { intervals: Vec<WirePair> },
    BoxSet { dimension: usize, boxes: Vec<Vec<WirePair>> },
    IntegerSet { values: Vec<WireInt> },
    LatticeSet { dimension: usize, vectors: Vec<Vec<WireInt>> },
    ChainSpec { b: Vec<WireInt>, lambda: Vec<String> },
}

impl<'de> Deserialize<'de> for Document {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let mut fields = Map::<String, Value>::deserialize(de)?;
        if fields.get("kind").and_then(Value::as_str) == Some("report") {
            fields.remove("kind");
            return Ok(Document::Report { fields });
        }
        let strict = Strict::deserialize(Value::Object(fields)).map_err(D::Error::custom)?;
        Ok(match strict {
            Strict::IntervalSet { intervals } => Document::IntervalSet { intervals },
            Strict::BoxSet { dimension, boxes } => Document::BoxSet { dimension, boxes },
            Strict::IntegerSet { values } => Document::IntegerSet { values },
            Strict::LatticeSet { dimension, vectors } => Document::LatticeSet { dimension, vectors },
            Strict::ChainSpec { b, lambda } => Document::ChainSpec { b, lambda },
        })
    }
}

fn parse_integer(s: &str) -> Result<BigInt, CliError> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(CliError::Schema(format!("not an integer: {s:?}")));
    }
    BigInt::from_str(s).map_err(|e| CliError::Schema(format!("not an integer: {s:?} ({e})")))
}

/// Parses `"p/q"` or `"n"`; the result is reduced to lowest terms.
pub fn parse_rational(s: &str) -> Result<Rational, CliError> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (parse_integer(n)?, parse_integer(d)?),
        None => (parse_integer(s)?, BigInt::from(1)),
    };
    if den.is_zero() {
        return Err(CliError::Schema(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(num, den))
}

pub fn rational_string(x: &Rational) -> String {
    x.to_string()
}

fn pair(iv: &Interval) -> WirePair {
    [rational_string(iv.lo()), rational_string(iv.hi())]
}

fn parse_pair(p: &WirePair) -> Result<(Rational, Rational), CliError> {
    Ok((parse_rational(&p[0])?, parse_rational(&p[1])?))
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::IntervalSet { .. } => "interval-set",
            Document::BoxSet { .. } => "box-set",
            Document::IntegerSet { .. } => "integer-set",
            Document::LatticeSet { .. } => "lattice-set",
            Document::ChainSpec { .. } => "chain-spec",
            Document::Report { .. } => "report",
        }
    }

    pub fn interval_set(k: &IntervalSet) -> Self {
        Document::IntervalSet {
            intervals: k.intervals().iter().map(pair).collect(),
        }
    }

    pub fn box_set(k: &BoxSet) -> Self {
        Document::BoxSet {
            dimension: k.dimension(),
            boxes: k
                .boxes()
                .iter()
                .map(|b| b.iter().map(pair).collect())
                .collect(),
        }
    }

    pub fn integer_set(a: &PositiveIntegerSet) -> Self {
        Document::IntegerSet {
            values: a.values().iter().map(|v| WireInt::Text(v.to_string())).collect(),
        }
    }

    pub fn lattice_set(s: &LatticeSet) -> Self {
        Document::LatticeSet {
            dimension: s.dimension(),
            vectors: s
                .vectors()
                .iter()
                .map(|v| v.iter().map(WireInt::number).collect())
                .collect(),
        }
    }

    pub fn chain_spec(spec: &ChainSpec) -> Self {
        Document::ChainSpec {
            b: spec.b.iter().map(|v| WireInt::Text(v.to_string())).collect(),
            lambda: spec.lambda.iter().map(rational_string).collect(),
        }
    }

    pub fn report(fields: Map<String, Value>) -> Self {
        Document::Report { fields }
    }

    fn wrong_kind(&self, expected: &str) -> CliError {
        CliError::Schema(format!("expected a {expected} document, got {}", self.kind()))
    }

    pub fn to_interval_set(&self) -> Result<IntervalSet, CliError> {
        let Document::IntervalSet { intervals } = self else {
            return Err(self.wrong_kind("interval-set"));
        };
        let raw = intervals.iter().map(parse_pair).collect::<Result<Vec<_>, _>>()?;
        Ok(nset_core::canonicalize(&raw)?)
    }

    pub fn to_box_set(&self) -> Result<BoxSet, CliError> {
        let Document::BoxSet { dimension, boxes } = self else {
            return Err(self.wrong_kind("box-set"));
        };
        let raw = boxes
            .iter()
            .map(|b| b.iter().map(parse_pair).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(BoxSet::new(*dimension, raw)?)
    }

    pub fn to_integer_set(&self) -> Result<PositiveIntegerSet, CliError> {
        let Document::IntegerSet { values } = self else {
            return Err(self.wrong_kind("integer-set"));
        };
        let parsed = values.iter().map(WireInt::parse).collect::<Result<Vec<_>, _>>()?;
        Ok(PositiveIntegerSet::new(parsed)?)
    }

    pub fn to_lattice_set(&self) -> Result<LatticeSet, CliError> {
        let Document::LatticeSet { dimension, vectors } = self else {
            return Err(self.wrong_kind("lattice-set"));
        };
        let parsed = vectors
            .iter()
            .map(|v| v.iter().map(WireInt::parse).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(LatticeSet::new(*dimension, parsed)?)
    }

    pub fn to_chain_spec(&self) -> Result<ChainSpec, CliError> {
        let Document::ChainSpec { b, lambda } = self else {
            return Err(self.wrong_kind("chain-spec"));
        };
        let b = b.iter().map(WireInt::parse).collect::<Result<Vec<_>, _>>()?;
        let lambda = lambda
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(ChainSpec::new(b, lambda)?)
    }

    /// Compact single-line JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("documents always serialize")
    }

    pub fn from_json(s: &str) -> Result<Self, CliError> {
        serde_json::from_str(s).map_err(|e| CliError::Schema(e.to_string()))
    }
}

/// JSON form of intervals inside reports.
pub fn intervals_value(k: &IntervalSet) -> Value {
    Value::Array(
        k.intervals()
            .iter()
            .map(|iv| Value::Array(pair(iv).into_iter().map(Value::String).collect()))
            .collect(),
    )
}
