//! JSON encoding of classes, matrices and rationals. Rationals are always
//! `"p/q"` strings.

use serde::ser::{SerializeSeq, Serializer};
use serde_json::{json, Value};

use crate::algebra::{generator_count, ClassPoly, GeneratorId, Monomial};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, SymMatrix};
use crate::scalar::{format_rational, parse_rational, QuadSurd, Rational};

pub fn serialize_rational<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(r))
}

pub fn serialize_opt_rational<S: Serializer>(r: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_str(&format_rational(r)),
        None => s.serialize_none(),
    }
}

pub fn serialize_rational_vec<S: Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for r in v {
        seq.serialize_element(&format_rational(r))?;
    }
    seq.end()
}

pub fn serialize_rational_vecs<S: Serializer>(v: &[Vec<Rational>], s: S) -> std::result::Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for row in v {
        seq.serialize_element(&rationals_to_json(row))?;
    }
    seq.end()
}

/// `a`, `a+b√d` or `a-b√d`, e.g. `1/2+1/2√8`.
pub fn surd_string(x: &QuadSurd) -> String {
    match x.as_rational() {
        Some(r) => format_rational(&r),
        None => {
            let sign = if x.b < num_traits::Zero::zero() { "-" } else { "+" };
            let b = if x.b < num_traits::Zero::zero() { -x.b.clone() } else { x.b.clone() };
            format!("{}{}{}√{}", format_rational(&x.a), sign, format_rational(&b), format_rational(&x.d))
        }
    }
}

pub fn rationals_to_json(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(|r| Value::String(format_rational(r))).collect())
}

pub fn rational_from_json(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) if n.is_i64() => Ok(Rational::from_integer(n.as_i64().unwrap_or_default().into())),
        other => Err(Error::Parse(format!("expected a \"p/q\" string, got {other}"))),
    }
}

/// Row-major array of rows of `"p/q"` strings.
pub fn matrix_to_json(m: &Matrix<Rational>) -> Value {
    Value::Array((0..m.rows()).map(|i| rationals_to_json(m.row(i))).collect())
}

pub fn matrix_from_json(v: &Value) -> Result<Matrix<Rational>> {
    let rows = v.as_array().ok_or_else(|| Error::Parse("matrix must be an array of rows".into()))?;
    let rows = rows
        .iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(|| Error::Parse("matrix row must be an array".into()))?
                .iter()
                .map(rational_from_json)
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let width = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != width) {
        return Err(Error::Parse("ragged matrix".into()));
    }
    Ok(Matrix::from_rows(rows))
}

pub fn sym_matrix_to_json(m: &SymMatrix<Rational>) -> Value {
    matrix_to_json(m.matrix())
}

pub fn sym_matrix_from_json(v: &Value) -> Result<SymMatrix<Rational>> {
    SymMatrix::new(matrix_from_json(v)?)
}

fn monomial_to_json(m: &Monomial, e: usize) -> Value {
    let mut theta = Vec::new();
    let mut lambda = Vec::new();
    for (g, exp) in m.factors(e) {
        match g {
            GeneratorId::Theta(i) => theta.push(json!([i, exp])),
            GeneratorId::Lambda(j, k) => lambda.push(json!([j, k, exp])),
        }
    }
    json!({ "theta": theta, "lambda": lambda })
}

/// Generator-exponent form, valid for every `e`.
pub fn class_to_json(p: &ClassPoly<Rational>) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(m, c)| json!({ "mono": monomial_to_json(m, p.e()), "coef": format_rational(c) }))
        .collect();
    json!({ "e": p.e(), "degree": p.degree(), "terms": terms })
}

/// `x_{l1,l2,l3}` form for `e = 2`.
pub fn class_to_json_e2(p: &ClassPoly<Rational>) -> Result<Value> {
    if p.e() != 2 {
        return Err(Error::WrongAmbient { expected: 2, reason: format!("class on A^{}", p.e()) });
    }
    let x: Vec<Value> = p
        .terms()
        .map(|(m, c)| {
            let e = m.exponents();
            json!([e[0], e[1], e[2], format_rational(c)])
        })
        .collect();
    Ok(json!({ "degree": p.degree(), "x": x }))
}

fn as_u32(v: &Value, what: &str) -> Result<u32> {
    v.as_u64().and_then(|x| u32::try_from(x).ok()).ok_or_else(|| Error::Parse(format!("{what} must be a non-negative integer")))
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| Error::Parse(format!("missing field \"{key}\"")))
}

fn monomial_from_json(v: &Value, e: usize) -> Result<Monomial> {
    let mut exps = vec![0u32; generator_count(e)];
    let list = |key: &str| -> Result<Vec<Value>> {
        match v.get(key) {
            None => Ok(Vec::new()),
            Some(Value::Array(a)) => Ok(a.clone()),
            Some(_) => Err(Error::Parse(format!("\"{key}\" must be an array"))),
        }
    };
    for t in list("theta")? {
        let t = t.as_array().filter(|t| t.len() == 2).ok_or_else(|| Error::Parse("theta entries are [i, exp]".into()))?;
        let g = GeneratorId::Theta(as_u32(&t[0], "theta index")? as usize).validate(e)?;
        exps[g.slot(e)] += as_u32(&t[1], "exponent")?;
    }
    for t in list("lambda")? {
        let t = t.as_array().filter(|t| t.len() == 3).ok_or_else(|| Error::Parse("lambda entries are [j, k, exp]".into()))?;
        let g = GeneratorId::Lambda(as_u32(&t[0], "lambda index")? as usize, as_u32(&t[1], "lambda index")? as usize).validate(e)?;
        exps[g.slot(e)] += as_u32(&t[2], "exponent")?;
    }
    Ok(Monomial::from_exponents(exps))
}

/// Parses either encoding; classes without `"e"` are read on `A × A`.
pub fn class_from_json(v: &Value) -> Result<ClassPoly<Rational>> {
    let degree = as_u32(field(v, "degree")?, "degree")?;
    if let Some(x) = v.get("x") {
        let rows = x.as_array().ok_or_else(|| Error::Parse("\"x\" must be an array".into()))?;
        let coeffs = rows
            .iter()
            .map(|r| {
                let r = r.as_array().filter(|r| r.len() == 4).ok_or_else(|| Error::Parse("x entries are [l1, l2, l3, \"p/q\"]".into()))?;
                Ok(([as_u32(&r[0], "l1")?, as_u32(&r[1], "l2")?, as_u32(&r[2], "l3")?], rational_from_json(&r[3])?))
            })
            .collect::<Result<Vec<_>>>()?;
        return ClassPoly::from_e2(degree, coeffs);
    }
    let e = as_u32(field(v, "e")?, "e")? as usize;
    if e == 0 {
        return Err(Error::Parse("e must be positive".into()));
    }
    let terms = field(v, "terms")?
        .as_array()
        .ok_or_else(|| Error::Parse("\"terms\" must be an array".into()))?
        .iter()
        .map(|t| Ok((monomial_from_json(field(t, "mono")?, e)?, rational_from_json(field(t, "coef")?)?)))
        .collect::<Result<Vec<_>>>()?;
    ClassPoly::from_terms(e, degree, terms)
}

pub fn class_from_str(s: &str) -> Result<ClassPoly<Rational>> {
    let v: Value = serde_json::from_str(s).map_err(|err| Error::Parse(err.to_string()))?;
    class_from_json(&v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::mu_class;
    use crate::scalar::{int, rat};

    type P = ClassPoly<Rational>;

    #[test]
    fn class_round_trips() {
        let p = mu_class().mul(&P::theta(1, 2)).add(&P::lambda(1, 2, 2).pow(3).scale(&rat(-3, 7)));
        assert_eq!(class_from_json(&class_to_json(&p)).unwrap(), p);
        assert_eq!(class_from_json(&class_to_json_e2(&p).unwrap()).unwrap(), p);
        let q = P::theta(3, 3).mul(&P::lambda(1, 3, 3)).scale(&rat(5, 2));
        let text = class_to_json(&q).to_string();
        assert_eq!(class_from_str(&text).unwrap(), q);
        assert!(text.contains("\"5/2\""));
    }

    #[test]
    fn parses_handwritten_input() {
        let p = class_from_str(r#"{"degree":2,"x":[[1,1,0,"4"],[0,0,2,"-1"]]}"#).unwrap();
        assert_eq!(p, mu_class());
        let q = class_from_str(r#"{"e":3,"degree":1,"terms":[{"mono":{"theta":[[2,1]]},"coef":"1"}]}"#).unwrap();
        assert_eq!(q, P::theta(2, 3));
        assert!(class_from_str(r#"{"e":2,"degree":1,"terms":[{"mono":{"theta":[[3,1]]},"coef":"1"}]}"#).is_err());
        assert!(class_from_str(r#"{"degree":2,"x":[[1,0,0,"1"]]}"#).is_err());
    }

    #[test]
    fn matrix_round_trips() {
        let m = SymMatrix::from_rows(vec![vec![rat(1, 2), int(-3)], vec![int(-3), int(0)]]).unwrap();
        let v = sym_matrix_to_json(&m);
        assert_eq!(v, json!([["1/2", "-3"], ["-3", "0"]]));
        assert_eq!(sym_matrix_from_json(&v).unwrap(), m);
    }

    #[test]
    fn surd_strings() {
        assert_eq!(surd_string(&QuadSurd::new(rat(1, 2), int(-1), int(2))), "1/2-1√2");
        assert_eq!(surd_string(&QuadSurd::rational(int(3))), "3");
    }
}
