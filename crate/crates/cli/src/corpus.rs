//! Built-in regression corpus: worked examples with their published values.

use fairdiv::eating::simulate_eating;
use fairdiv::mechanisms::{connected_free_disposal, cut_and_choose, Mechanism};
use fairdiv::properties::{
    check_anonymity, check_envy_free, check_full_and_connected, check_pareto,
    check_position_oblivious, indicator_vector, search_deviations, DeviationFamily,
    DeviationSearch, Witness,
};
use fairdiv::{Instance, PrefixEndpoint, Rational, Scalar, Valuation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Case {
    pub name: &'static str,
    pub expected: String,
    pub actual: String,
}

impl Case {
    pub fn matches(&self) -> bool {
        self.expected == self.actual
    }
}

fn r(n: i64, d: i64) -> Rational {
    Rational::from_ratio(n, d)
}

fn span(a: Rational, b: Rational) -> Valuation {
    Valuation::from_pairs([(a, b)]).expect("corpus intervals are valid")
}

fn cake(v1: Valuation, v2: Valuation) -> Instance {
    Instance::cake(vec![v1, v2]).expect("two agents")
}

fn tuple(values: &[Rational]) -> String {
    let parts: Vec<String> = values.iter().map(|v| v.to_fraction()).collect();
    format!("({})", parts.join(", "))
}

fn verdicts(reports: &[&fairdiv::PropertyReport]) -> String {
    reports
        .iter()
        .map(|r| format!("{} {}", r.property, r.verdict.as_str()))
        .collect::<Vec<_>>()
        .join(", ")
}

/// The three crossing-point examples: left half vs whole, whole vs left
/// half, right half vs whole.
pub fn crossing_examples() -> [Instance; 3] {
    let whole = || span(r(0, 1), r(1, 1));
    [
        cake(span(r(0, 1), r(1, 2)), whole()),
        cake(whole(), span(r(0, 1), r(1, 2))),
        cake(span(r(1, 2), r(1, 1)), whole()),
    ]
}

fn attempt(name: &'static str, expected: &str, actual: fairdiv::Result<String>) -> Case {
    Case {
        name,
        expected: expected.to_string(),
        actual: actual.unwrap_or_else(|e| format!("error: {e}")),
    }
}

pub fn run_corpus() -> Vec<Case> {
    let [left_whole, whole_left, right_whole] = crossing_examples();
    let tc = Mechanism::TwoAgentCake;
    let mut cases = vec![];

    for (name, inst, expected) in [
        ("crossing: left half vs whole", &left_whole, "(1/2, 1/2)"),
        ("crossing: whole vs left half", &whole_left, "(3/4, 1/4)"),
        ("crossing: right half vs whole", &right_whole, "(1/4, 3/4)"),
    ] {
        cases.push(attempt(
            name,
            expected,
            tc.allocate(inst)
                .and_then(|a| a.values(inst))
                .map(|v| tuple(&v)),
        ));
    }

    cases.push(attempt(
        "value of the first agent's piece, whole vs left half",
        "3/4",
        tc.allocate(&whole_left).map(|a| {
            whole_left.valuations()[0]
                .value(&a.pieces()[0])
                .to_fraction()
        }),
    ));

    cases.push(attempt(
        "crossing examples: envy-free and pareto",
        "envy-free holds, pareto-optimal holds; envy-free holds, pareto-optimal holds; envy-free holds, pareto-optimal holds",
        [&left_whole, &whole_left, &right_whole]
            .iter()
            .map(|inst| {
                let a = tc.allocate(inst)?;
                Ok(verdicts(&[&check_envy_free(inst, &a)?, &check_pareto(inst, &a)?]))
            })
            .collect::<fairdiv::Result<Vec<_>>>()
            .map(|v| v.join("; ")),
    ));

    cases.push(attempt(
        "crossing: whole vs left half is not connected",
        "full-allocation holds, connected violated",
        tc.allocate(&whole_left).map(|a| {
            let fc = check_full_and_connected(&a);
            verdicts(&[&fc.full, &fc.connected])
        }),
    ));

    cases.push(attempt(
        "crossing is not anonymous",
        "violated (1/2, 1/2) -> (1/4, 3/4)",
        check_anonymity(tc, &left_whole, &[1, 0]).map(|rep| match rep.witness {
            Some(Witness::Relabeling {
                original_values,
                permuted_values,
                ..
            }) => format!(
                "violated {} -> {}",
                tuple(&original_values),
                tuple(&permuted_values)
            ),
            _ => rep.verdict.as_str().to_string(),
        }),
    ));

    cases.push(attempt(
        "shifted pair shares an indicator vector",
        "true",
        Ok((indicator_vector(&left_whole) == indicator_vector(&right_whole)).to_string()),
    ));

    cases.push(attempt(
        "crossing is not position oblivious",
        "violated (1/2, 1/2) vs (1/4, 3/4)",
        check_position_oblivious(tc, &left_whole, &right_whole).map(|rep| match rep.witness {
            Some(Witness::PositionDependence {
                first_values,
                second_values,
                ..
            }) => format!(
                "violated {} vs {}",
                tuple(&first_values),
                tuple(&second_values)
            ),
            _ => rep.verdict.as_str().to_string(),
        }),
    ));

    cases.push(attempt(
        "eating form: whole vs left half",
        "meet 1/4, values (3/4, 1/4)",
        {
            let v = whole_left.valuations();
            let (alloc, trace) = simulate_eating(&v[0], &v[1]);
            alloc.values(&whole_left).map(|vals| {
                format!(
                    "meet {}, values {}",
                    trace.meeting_point.to_fraction(),
                    tuple(&vals)
                )
            })
        },
    ));

    let truth = span(r(0, 1), r(1, 1));
    let chooser = span(r(0, 1), r(1, 4));
    cases.push(attempt(
        "cut and choose: honest cutter",
        "1/2",
        Ok(truth
            .value(&cut_and_choose(&truth, &chooser).pieces()[0])
            .to_fraction()),
    ));
    cases.push(attempt(
        "cut and choose: cutter reports the left half",
        "3/4",
        Ok(truth
            .value(&cut_and_choose(&span(r(0, 1), r(1, 2)), &chooser).pieces()[0])
            .to_fraction()),
    ));

    let manipulable = cake(truth.clone(), chooser.clone());
    let search = DeviationSearch::new(4, DeviationFamily::Subsets);
    cases.push(attempt(
        "cut and choose is manipulable (grid 1/4, subsets)",
        "violated",
        search_deviations(Mechanism::CutAndChoose, &manipulable, 0, &search)
            .map(|rep| rep.verdict.as_str().to_string()),
    ));
    cases.push(attempt(
        "crossing resists the same search",
        "holds",
        (0..2)
            .map(|agent| search_deviations(tc, &manipulable, agent, &search))
            .collect::<fairdiv::Result<Vec<_>>>()
            .map(|reps| {
                let all = reps.iter().all(|rep| rep.is_holds());
                if all { "holds" } else { "violated" }.to_string()
            }),
    ));

    let half = PrefixEndpoint::new(r(1, 2)).expect("1/2 is in range");
    let disposal = connected_free_disposal(&half, &half);
    let deadlines =
        Instance::prefix(fairdiv::Resource::Cake, &[r(1, 2), r(1, 2)]).expect("valid deadlines");
    cases.push(attempt(
        "free disposal at deadlines (1/2, 1/2)",
        "{[1/4, 1/2]} {[0, 1/4]}; envy-free holds, connected holds, full-allocation violated",
        check_envy_free(&deadlines, &disposal).map(|ef| {
            let fc = check_full_and_connected(&disposal);
            format!(
                "{} {}; {}",
                disposal.pieces()[0],
                disposal.pieces()[1],
                verdicts(&[&ef, &fc.connected, &fc.full])
            )
        }),
    ));

    cases
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_matches() {
        for case in run_corpus() {
            assert!(case.matches(), "{case:?}");
        }
    }
}
