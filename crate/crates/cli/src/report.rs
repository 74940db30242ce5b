//! JSON reports with exact scalars rendered as strings.

use serde_json::{json, Map, Value};
use witnessgate::groebner::SufficientOutcome;
use witnessgate::qudit::{Locus, NecessaryOutcome, NecessaryVerdict};
use witnessgate::scalar::{format_gauss, format_rational};
use witnessgate::witness::DetCounterexample;
use witnessgate::{ProductCertificate, Verdict};

pub fn certificate(c: &ProductCertificate) -> Value {
    json!({
        "v": c.v.iter().map(format_gauss).collect::<Vec<_>>(),
        "w": c.w.iter().map(format_gauss).collect::<Vec<_>>(),
        "value": format_rational(&c.value),
    })
}

pub fn verdict(v: &Verdict) -> Value {
    let mut m = Map::new();
    m.insert("verdict".into(), json!(v.name()));
    match v {
        Verdict::EntanglementWitness { weakly_optimal_possible } => {
            m.insert("weakly_optimal_possible".into(), json!(weakly_optimal_possible));
        }
        Verdict::NotBlockPositive { certificate: c } => {
            m.insert("certificate".into(), certificate(c));
        }
        _ => {}
    }
    Value::Object(m)
}

fn counterexample(ce: &DetCounterexample) -> Value {
    json!({ "side": ce.side, "r": format_rational(&ce.r), "t": format_rational(&ce.t) })
}

pub fn necessary(o: &NecessaryOutcome) -> Value {
    let mut m = Map::new();
    let name = match o.verdict {
        NecessaryVerdict::Fails => "Fails",
        NecessaryVerdict::Inconclusive => "Inconclusive",
    };
    m.insert("verdict".into(), json!(name));
    if let Some(locus) = o.violated {
        let s = match locus {
            Locus::Trace => "trace".to_string(),
            Locus::Sum => "sum".to_string(),
            Locus::Pair(p) => format!("pair({},{})", p.l(), p.k()),
        };
        m.insert("violated".into(), json!(s));
    }
    if let Some(ce) = &o.counterexample {
        m.insert("counterexample".into(), counterexample(ce));
    }
    if let Some(c) = &o.certificate {
        m.insert("certificate".into(), certificate(c));
    }
    Value::Object(m)
}

pub fn sufficient(o: &SufficientOutcome) -> Value {
    serde_json::to_value(o).expect("plain data")
}
