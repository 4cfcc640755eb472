//! JSON forms of coefficient sequences and tables; every count is a
//! decimal string so no precision is lost.

use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::species::Tag;
use crate::{CoeffSeq, CoeffTable};

fn tag_name(tag: Tag) -> &'static str {
    match tag {
        Tag::Concrete => "concrete",
        Tag::Virtual => "virtual",
    }
}

fn parse_tag(value: Option<&Value>) -> Result<Tag> {
    match value.and_then(Value::as_str) {
        Some("concrete") => Ok(Tag::Concrete),
        Some("virtual") => Ok(Tag::Virtual),
        other => Err(Error::Parse(format!("bad tag {other:?}"))),
    }
}

fn field<'a>(object: &'a Map<String, Value>, key: &str) -> Result<&'a Value> {
    object.get(key).ok_or_else(|| Error::Parse(format!("missing field `{key}`")))
}

fn object(value: &Value) -> Result<&Map<String, Value>> {
    value.as_object().ok_or_else(|| Error::Parse("expected a JSON object".into()))
}

fn integers(value: &Value) -> Result<Vec<BigInt>> {
    value
        .as_array()
        .ok_or_else(|| Error::Parse("expected an array of decimal strings".into()))?
        .iter()
        .map(|v| {
            v.as_str()
                .and_then(|s| s.parse::<BigInt>().ok())
                .ok_or_else(|| Error::Parse(format!("bad integer {v}")))
        })
        .collect()
}

fn strings(values: &[BigInt]) -> Value {
    Value::Array(values.iter().map(|v| Value::String(v.to_string())).collect())
}

pub fn series_to_json(s: &CoeffSeq) -> Value {
    json!({ "label": s.label(), "tag": tag_name(s.tag()), "coeffs": strings(s.coeffs()) })
}

pub fn series_from_json(value: &Value) -> Result<CoeffSeq> {
    let o = object(value)?;
    let label = field(o, "label")?.as_str().unwrap_or_default();
    let coeffs = integers(field(o, "coeffs")?)?;
    if coeffs.is_empty() {
        return Err(Error::Parse("a sequence has at least one coefficient".into()));
    }
    Ok(CoeffSeq::new(label, parse_tag(o.get("tag"))?, coeffs))
}

pub fn table_to_json(t: &CoeffTable) -> Value {
    let rows: Vec<Value> = t.rows().iter().map(|row| strings(row)).collect();
    json!({ "label": t.label(), "tag": tag_name(t.tag()), "rows": rows })
}

pub fn table_from_json(value: &Value) -> Result<CoeffTable> {
    let o = object(value)?;
    let label = field(o, "label")?.as_str().unwrap_or_default();
    let rows = field(o, "rows")?
        .as_array()
        .ok_or_else(|| Error::Parse("`rows` must be an array".into()))?
        .iter()
        .map(integers)
        .collect::<Result<Vec<_>>>()?;
    CoeffTable::from_rows(label, parse_tag(o.get("tag"))?, rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::species::Atom;
    use proptest::prelude::*;

    #[test]
    fn big_values_survive() {
        let s = Atom::S.coeffs::<BigInt>(30).unwrap();
        let text = series_to_json(&s).to_string();
        assert!(text.contains("\"265252859812191058636308480000000\""));
        assert_eq!(series_from_json(&serde_json::from_str(&text).unwrap()).unwrap(), s);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(series_from_json(&json!({"label": "F", "tag": "concrete", "coeffs": [1]})).is_err());
        assert!(series_from_json(&json!({"label": "F", "tag": "odd", "coeffs": ["1"]})).is_err());
        assert!(table_from_json(&json!({"label": "T", "tag": "concrete", "rows": [["1"], ["1"]]})).is_err());
    }

    proptest! {
        #[test]
        fn series_round_trip(values in prop::collection::vec(any::<i128>(), 1..12), virt in any::<bool>()) {
            let tag = if virt { Tag::Virtual } else { Tag::Concrete };
            let s = CoeffSeq::new("F", tag, values.into_iter().map(BigInt::from).collect());
            prop_assert_eq!(series_from_json(&series_to_json(&s)).unwrap(), s);
        }

        #[test]
        fn table_round_trip(n in 0usize..7, seed in any::<i64>()) {
            let t = CoeffTable::from_fn("T", Tag::Virtual, n, |i, j| {
                BigInt::from(seed) * BigInt::from(i as i64 - 3) + BigInt::from(j)
            });
            prop_assert_eq!(table_from_json(&table_to_json(&t)).unwrap(), t);
        }
    }
}
