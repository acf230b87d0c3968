//! JSON export/import of the AST: one object per node, discriminated by the
//! `kind` field. Numeral literals carry their value as a decimal string so
//! that arbitrary-precision codes survive the trip.

use serde_json::{json, Map, Value};
use thiserror::Error;

use super::ast::{AtomId, Formula, FuncId, Natural, Term};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum JsonAstError {
    #[error("expected a JSON object with a `kind` field")]
    NotANode,
    #[error("unknown node kind `{0}`")]
    UnknownKind(String),
    #[error("node `{kind}` is missing field `{field}`")]
    MissingField { kind: String, field: String },
    #[error("field `{0}` has the wrong type")]
    BadField(String),
}

pub fn term_to_json(t: &Term) -> Value {
    match t {
        Term::Zero => json!({"kind": "zero"}),
        Term::Succ(inner) => json!({"kind": "succ", "arg": term_to_json(inner)}),
        Term::Add(a, b) => json!({"kind": "add", "left": term_to_json(a), "right": term_to_json(b)}),
        Term::Mul(a, b) => json!({"kind": "mul", "left": term_to_json(a), "right": term_to_json(b)}),
        Term::Var(v) => json!({"kind": "var", "name": v}),
        Term::Num(n) => json!({"kind": "num", "value": n.to_string()}),
        Term::Func(f, args) => json!({
            "kind": "func",
            "name": f.0,
            "args": args.iter().map(term_to_json).collect::<Vec<_>>(),
        }),
    }
}

pub fn formula_to_json(phi: &Formula) -> Value {
    match phi {
        Formula::Eq(a, b) => json!({"kind": "eq", "left": term_to_json(a), "right": term_to_json(b)}),
        Formula::Atom(name, args) => json!({
            "kind": "atom",
            "name": name.0,
            "args": args.iter().map(term_to_json).collect::<Vec<_>>(),
        }),
        Formula::Not(f) => json!({"kind": "not", "arg": formula_to_json(f)}),
        Formula::And(a, b) => {
            json!({"kind": "and", "left": formula_to_json(a), "right": formula_to_json(b)})
        }
        Formula::Or(a, b) => {
            json!({"kind": "or", "left": formula_to_json(a), "right": formula_to_json(b)})
        }
        Formula::Imp(a, b) => {
            json!({"kind": "imp", "left": formula_to_json(a), "right": formula_to_json(b)})
        }
        Formula::Forall(v, f) => json!({"kind": "forall", "var": v, "body": formula_to_json(f)}),
        Formula::Exists(v, f) => json!({"kind": "exists", "var": v, "body": formula_to_json(f)}),
        Formula::BForall {
            var,
            bound,
            strict,
            body,
        } => json!({
            "kind": "bforall",
            "var": var,
            "bound": term_to_json(bound),
            "strict": strict,
            "body": formula_to_json(body),
        }),
        Formula::BExists {
            var,
            bound,
            strict,
            body,
        } => json!({
            "kind": "bexists",
            "var": var,
            "bound": term_to_json(bound),
            "strict": strict,
            "body": formula_to_json(body),
        }),
    }
}

fn node<'v>(v: &'v Value) -> Result<(&'v str, &'v Map<String, Value>), JsonAstError> {
    let obj = v.as_object().ok_or(JsonAstError::NotANode)?;
    let kind = obj
        .get("kind")
        .and_then(Value::as_str)
        .ok_or(JsonAstError::NotANode)?;
    Ok((kind, obj))
}

fn field<'v>(
    kind: &str,
    obj: &'v Map<String, Value>,
    name: &str,
) -> Result<&'v Value, JsonAstError> {
    obj.get(name).ok_or_else(|| JsonAstError::MissingField {
        kind: kind.to_owned(),
        field: name.to_owned(),
    })
}

fn str_field(kind: &str, obj: &Map<String, Value>, name: &str) -> Result<String, JsonAstError> {
    field(kind, obj, name)?
        .as_str()
        .map(str::to_owned)
        .ok_or_else(|| JsonAstError::BadField(name.to_owned()))
}

pub fn term_from_json(v: &Value) -> Result<Term, JsonAstError> {
    let (kind, obj) = node(v)?;
    match kind {
        "zero" => Ok(Term::Zero),
        "succ" => Ok(Term::succ(term_from_json(field(kind, obj, "arg")?)?)),
        "add" => Ok(Term::add(
            term_from_json(field(kind, obj, "left")?)?,
            term_from_json(field(kind, obj, "right")?)?,
        )),
        "mul" => Ok(Term::mul(
            term_from_json(field(kind, obj, "left")?)?,
            term_from_json(field(kind, obj, "right")?)?,
        )),
        "var" => Ok(Term::Var(str_field(kind, obj, "name")?)),
        "num" => {
            let digits = str_field(kind, obj, "value")?;
            digits
                .parse::<Natural>()
                .map(Term::Num)
                .map_err(|_| JsonAstError::BadField("value".to_owned()))
        }
        "func" => {
            let name = str_field(kind, obj, "name")?;
            let args = field(kind, obj, "args")?
                .as_array()
                .ok_or_else(|| JsonAstError::BadField("args".to_owned()))?
                .iter()
                .map(term_from_json)
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Term::Func(FuncId(name), args))
        }
        other => Err(JsonAstError::UnknownKind(other.to_owned())),
    }
}

pub fn formula_from_json(v: &Value) -> Result<Formula, JsonAstError> {
    let (kind, obj) = node(v)?;
    match kind {
        "eq" => Ok(Formula::Eq(
            term_from_json(field(kind, obj, "left")?)?,
            term_from_json(field(kind, obj, "right")?)?,
        )),
        "atom" => {
            let name = str_field(kind, obj, "name")?;
            let args = field(kind, obj, "args")?
                .as_array()
                .ok_or_else(|| JsonAstError::BadField("args".to_owned()))?
                .iter()
                .map(term_from_json)
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Formula::Atom(AtomId(name), args))
        }
        "not" => Ok(Formula::not(formula_from_json(field(kind, obj, "arg")?)?)),
        "and" => Ok(Formula::and(
            formula_from_json(field(kind, obj, "left")?)?,
            formula_from_json(field(kind, obj, "right")?)?,
        )),
        "or" => Ok(Formula::or(
            formula_from_json(field(kind, obj, "left")?)?,
            formula_from_json(field(kind, obj, "right")?)?,
        )),
        "imp" => Ok(Formula::imp(
            formula_from_json(field(kind, obj, "left")?)?,
            formula_from_json(field(kind, obj, "right")?)?,
        )),
        "forall" => Ok(Formula::Forall(
            str_field(kind, obj, "var")?,
            Box::new(formula_from_json(field(kind, obj, "body")?)?),
        )),
        "exists" => Ok(Formula::Exists(
            str_field(kind, obj, "var")?,
            Box::new(formula_from_json(field(kind, obj, "body")?)?),
        )),
        "bforall" | "bexists" => {
            let var = str_field(kind, obj, "var")?;
            let bound = term_from_json(field(kind, obj, "bound")?)?;
            let strict = field(kind, obj, "strict")?
                .as_bool()
                .ok_or_else(|| JsonAstError::BadField("strict".to_owned()))?;
            let body = Box::new(formula_from_json(field(kind, obj, "body")?)?);
            Ok(if kind == "bforall" {
                Formula::BForall {
                    var,
                    bound,
                    strict,
                    body,
                }
            } else {
                Formula::BExists {
                    var,
                    bound,
                    strict,
                    body,
                }
            })
        }
        other => Err(JsonAstError::UnknownKind(other.to_owned())),
    }
}
