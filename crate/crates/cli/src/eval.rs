//! Evaluation of parsed expressions against an algebra context.

use std::fmt;

use gebra_core::clifford::{cmul, lc, AlgebraContext, BilinearForm, CliffordCoproduct};
use gebra_core::exterior::{blade_wedge, counit, ev, grade_involution, grade_project, wedge};
use gebra_core::hopf::{gantipode, gantipode_slot, gco, gco_slot};
use gebra_core::scalar::Rational;
use gebra_core::tensor::tensor;
use gebra_core::{Blade, Multivector, ScalarRF, TensorPoly};
use thiserror::Error;

use crate::dsl::{Expr, Func};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Scalar(ScalarRF),
    Multivector(Multivector),
    Tensor(TensorPoly),
}

impl Value {
    pub fn kind(&self) -> &'static str {
        match self {
            Value::Scalar(_) => "scalar",
            Value::Multivector(_) => "multivector",
            Value::Tensor(_) => "tensor",
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Scalar(s) => write!(f, "{s}"),
            Value::Multivector(m) => write!(f, "{m}"),
            Value::Tensor(t) => write!(f, "{t}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("type mismatch in {op}: expected {expected}, found {found}")]
    TypeMismatch {
        op: String,
        expected: &'static str,
        found: &'static str,
    },
    #[error("{func} takes {expected}, got {found}")]
    Arity {
        func: &'static str,
        expected: &'static str,
        found: String,
    },
    #[error("generator e{index} does not exist in dimension {dim}")]
    Generator { index: usize, dim: usize },
    #[error("repeated generator in {0}")]
    RepeatedGenerator(String),
    #[error(transparent)]
    Algebra(#[from] gebra_core::Error),
}

type Result<T> = std::result::Result<T, EvalError>;

fn mismatch<T>(op: &str, expected: &'static str, found: &Value) -> Result<T> {
    Err(EvalError::TypeMismatch {
        op: op.to_string(),
        expected,
        found: found.kind(),
    })
}

/// Evaluates a purely scalar expression; blades and calls are rejected.
pub fn eval_scalar(e: &Expr) -> Result<ScalarRF> {
    Evaluator::new(AlgebraContext::new(BilinearForm::zero(0), BilinearForm::zero(0))?).scalar(e)
}

pub struct Evaluator {
    ctx: AlgebraContext,
}

impl Evaluator {
    pub fn new(ctx: AlgebraContext) -> Self {
        Evaluator { ctx }
    }

    pub fn context(&self) -> &AlgebraContext {
        &self.ctx
    }

    fn dim(&self) -> usize {
        self.ctx.dim()
    }

    pub fn scalar(&self, e: &Expr) -> Result<ScalarRF> {
        match self.eval(e)? {
            Value::Scalar(s) => Ok(s),
            other => mismatch("scalar expression", "scalar", &other),
        }
    }

    pub fn eval(&self, e: &Expr) -> Result<Value> {
        match e {
            Expr::Number(n) => Ok(Value::Scalar(ScalarRF::from_rational(Rational::from_integer(n.clone())))),
            Expr::Symbol(s) => Ok(Value::Scalar(ScalarRF::sym(s.clone()))),
            Expr::Blade(idx) => self.blade(idx).map(Value::Multivector),
            Expr::Neg(x) => Ok(match self.eval(x)? {
                Value::Scalar(s) => Value::Scalar(-s),
                Value::Multivector(m) => Value::Multivector(m.neg()),
                Value::Tensor(t) => Value::Tensor(t.neg()),
            }),
            Expr::Add(a, b) => self.add(self.eval(a)?, self.eval(b)?, false),
            Expr::Sub(a, b) => self.add(self.eval(a)?, self.eval(b)?, true),
            Expr::Mul(a, b) => self.mul(self.eval(a)?, self.eval(b)?),
            Expr::Div(a, b) => {
                let d = match self.eval(b)? {
                    Value::Scalar(s) => s,
                    other => return mismatch("division", "scalar divisor", &other),
                };
                let inv = d.inv()?;
                self.mul(self.eval(a)?, Value::Scalar(inv))
            }
            Expr::Pow(x, k) => match self.eval(x)? {
                Value::Scalar(s) => Ok(Value::Scalar(s.pow(*k))),
                other => mismatch("power", "scalar", &other),
            },
            Expr::Call { func, form, args, slot } => self.call(*func, form.as_deref(), args, *slot),
        }
    }

    fn blade(&self, idx: &[usize]) -> Result<Multivector> {
        let n = self.dim();
        let mut acc = Multivector::blade(n, Blade::ID);
        for &i in idx {
            if i == 0 || i > n {
                return Err(EvalError::Generator { index: i, dim: n });
            }
            acc = wedge(&acc, &Multivector::blade(n, Blade::generator(i)))?;
        }
        if acc.is_zero() {
            let text = idx.iter().map(|i| format!("e{i}")).collect::<Vec<_>>().join("^");
            return Err(EvalError::RepeatedGenerator(text));
        }
        Ok(acc)
    }

    fn lift(&self, s: ScalarRF) -> Multivector {
        Multivector::scalar(self.dim(), s)
    }

    fn add(&self, a: Value, b: Value, subtract: bool) -> Result<Value> {
        let op = if subtract { "difference" } else { "sum" };
        Ok(match (a, b) {
            (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(if subtract { x - y } else { x + y }),
            (Value::Tensor(x), Value::Tensor(y)) => Value::Tensor(if subtract { x.sub(&y)? } else { x.add(&y)? }),
            (Value::Tensor(_), other) | (other, Value::Tensor(_)) => return mismatch(op, "tensor", &other),
            (x, y) => {
                let x = self.multivector(x, op)?;
                let y = self.multivector(y, op)?;
                Value::Multivector(if subtract { x.sub(&y) } else { x.add(&y) })
            }
        })
    }

    fn mul(&self, a: Value, b: Value) -> Result<Value> {
        Ok(match (a, b) {
            (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(x * y),
            (Value::Scalar(s), Value::Multivector(m)) | (Value::Multivector(m), Value::Scalar(s)) => {
                Value::Multivector(m.scale(&s))
            }
            (Value::Scalar(s), Value::Tensor(t)) | (Value::Tensor(t), Value::Scalar(s)) => Value::Tensor(t.scale(&s)),
            (_, other) => return mismatch("product (use wedge or cmul)", "scalar factor", &other),
        })
    }

    fn multivector(&self, v: Value, op: &str) -> Result<Multivector> {
        match v {
            Value::Scalar(s) => Ok(self.lift(s)),
            Value::Multivector(m) => Ok(m),
            other => mismatch(op, "multivector", &other),
        }
    }

    fn tensor_arg(&self, v: Value, op: &str) -> Result<TensorPoly> {
        match v {
            Value::Tensor(t) => Ok(t),
            other => mismatch(op, "tensor", &other),
        }
    }

    fn form(&self, func: Func, tag: Option<&str>) -> BilinearForm {
        let default = if func == Func::Cco { "BI" } else { "B" };
        match tag.unwrap_or(default) {
            "B" => self.ctx.b().clone(),
            "BI" => self.ctx.bi().clone(),
            name => BilinearForm::symbolic(self.dim(), name),
        }
    }

    fn call(&self, func: Func, tag: Option<&str>, args: &[Expr], slot: Option<usize>) -> Result<Value> {
        let name = func.name();
        let takes_form = matches!(func, Func::Cmul | Func::Lc | Func::Cco);
        if tag.is_some() && !takes_form {
            return Err(EvalError::Arity {
                func: name,
                expected: "no form tag",
                found: format!("[{}]", tag.unwrap_or_default()),
            });
        }
        let vals = args.iter().map(|a| self.eval(a)).collect::<Result<Vec<_>>>()?;
        let count = vals.len();
        let arity = |expected: &'static str| EvalError::Arity {
            func: name,
            expected,
            found: match slot {
                Some(s) => format!("{count} argument(s) and slot {s}"),
                None => format!("{count} argument(s)"),
            },
        };
        let mut vals = vals.into_iter();
        let n = self.dim();

        match (func, count, slot) {
            (Func::T, _, None) => {
                let parts = vals.map(|v| self.multivector(v, name)).collect::<Result<Vec<_>>>()?;
                Ok(Value::Tensor(tensor(&parts)?))
            }
            (Func::T, _, Some(_)) => Err(arity("multivector arguments and no slot")),

            (Func::Wedge, k, None) if k >= 2 => {
                let mut acc = self.multivector(vals.next().expect("k >= 2"), name)?;
                for v in vals {
                    acc = wedge(&acc, &self.multivector(v, name)?)?;
                }
                Ok(Value::Multivector(acc))
            }
            (Func::Wedge, 1, Some(i)) => {
                let t = self.tensor_arg(vals.next().expect("one"), name)?;
                Ok(Value::Tensor(t.map_mul(i, |a, b| blade_wedge(n, a, b))?))
            }
            (Func::Wedge, ..) => Err(arity("two or more multivectors, or a tensor and a slot")),

            (Func::Cmul, 2, None) => {
                let f = self.form(func, tag);
                let u = self.multivector(vals.next().expect("two"), name)?;
                let v = self.multivector(vals.next().expect("two"), name)?;
                Ok(Value::Multivector(cmul(&u, &v, &f)?))
            }
            (Func::Cmul, 1, Some(i)) => {
                let f = self.form(func, tag);
                let t = self.tensor_arg(vals.next().expect("one"), name)?;
                let table = gebra_core::clifford::CliffordProduct::new(&f);
                Ok(Value::Tensor(t.map_mul(i, |a, b| table.mul_blades(a, b).clone())?))
            }
            (Func::Cmul, ..) => Err(arity("two multivectors, or a tensor and a slot")),

            (Func::Lc, 2, None) => {
                let f = self.form(func, tag);
                let u = self.multivector(vals.next().expect("two"), name)?;
                let v = self.multivector(vals.next().expect("two"), name)?;
                Ok(Value::Multivector(lc(&u, &v, &f)?))
            }
            (Func::Lc, ..) => Err(arity("two multivectors")),

            (Func::Ev, 2, None) => {
                let u = self.multivector(vals.next().expect("two"), name)?;
                let v = self.multivector(vals.next().expect("two"), name)?;
                Ok(Value::Scalar(ev(&u, &v)?))
            }
            (Func::Ev, 1, Some(i)) => {
                let t = self.tensor_arg(vals.next().expect("one"), name)?;
                let c = t.contract(i, |a, b| if a == b { ScalarRF::one() } else { ScalarRF::zero() })?;
                Ok(Value::Tensor(c))
            }
            (Func::Ev, ..) => Err(arity("two multivectors, or a tensor and a slot")),

            (Func::Gco | Func::Cco | Func::Gantipode | Func::Gradeinv, 1, None) => {
                let x = self.multivector(vals.next().expect("one"), name)?;
                Ok(match func {
                    Func::Gco => Value::Tensor(gco(&x)),
                    Func::Cco => Value::Tensor(CliffordCoproduct::new(&self.form(func, tag)).apply(&x)?),
                    Func::Gantipode => Value::Multivector(gantipode(&x)),
                    _ => Value::Multivector(grade_involution(&x)),
                })
            }
            (Func::Gco | Func::Cco | Func::Gantipode | Func::Gradeinv, 1, Some(i)) => {
                let t = self.tensor_arg(vals.next().expect("one"), name)?;
                Ok(Value::Tensor(match func {
                    Func::Gco => gco_slot(&t, i)?,
                    Func::Cco => CliffordCoproduct::new(&self.form(func, tag)).apply_slot(&t, i)?,
                    Func::Gantipode => gantipode_slot(&t, i)?,
                    _ => t.mapop(i, |b| grade_involution(&Multivector::blade(n, b)))?,
                }))
            }
            (Func::Gco | Func::Cco | Func::Gantipode | Func::Gradeinv, ..) => {
                Err(arity("one multivector, or a tensor and a slot"))
            }

            (Func::Sp, 1, None) => {
                let x = self.multivector(vals.next().expect("one"), name)?;
                Ok(Value::Scalar(counit(&x)))
            }
            (Func::Sp, ..) => Err(arity("one multivector")),

            (Func::Vectorpart, 1, None) => {
                let x = self.multivector(vals.next().expect("one"), name)?;
                Ok(Value::Multivector(grade_project(&x, 1)))
            }
            (Func::Vectorpart, 2, None) => {
                let x = self.multivector(vals.next().expect("two"), name)?;
                let k = match vals.next().expect("two") {
                    Value::Scalar(s) => s.constant_value().filter(|q| q.is_integer() && *q >= Rational::from_integer(0.into())),
                    _ => None,
                };
                let k = k.ok_or_else(|| arity("a multivector and a non-negative integer grade"))?;
                let k = usize::try_from(k.to_integer()).map_err(|_| arity("a grade that fits the dimension"))?;
                Ok(Value::Multivector(grade_project(&x, k)))
            }
            (Func::Vectorpart, ..) => Err(arity("a multivector and an optional grade")),

            (Func::Switch | Func::Gswitch, 1, Some(i)) => {
                let t = self.tensor_arg(vals.next().expect("one"), name)?;
                Ok(Value::Tensor(if func == Func::Switch { t.switch(i)? } else { t.gswitch(i)? }))
            }
            (Func::Switch | Func::Gswitch, 1, None) => {
                let v = vals.next().expect("one");
                match v {
                    Value::Tensor(_) => Err(arity("a tensor and a slot")),
                    other => mismatch(name, "tensor", &other),
                }
            }
            (Func::Switch | Func::Gswitch, ..) => Err(arity("a tensor and a slot")),
        }
    }
}
