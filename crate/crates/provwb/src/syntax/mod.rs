//! Syntax kernel: ASTs, parsing, printing, substitution, normal forms,
//! syntactic measures and the bounded standard-model evaluator.

pub mod ast;
pub mod atoms;
pub mod eval;
pub mod json;
pub mod nnf;
pub mod parser;
mod print;
pub mod subst;

pub use ast::{fresh_name, AtomId, Formula, FuncId, Natural, Term};
pub use atoms::{AtomInfo, DeclaredLevel, FuncInfo, Registry};
pub use eval::{eval_term, evaluate, Assignment, EvalError, Truth};
pub use nnf::nnf;
pub use parser::{parse, parse_term, parse_term_with, parse_with, ParseError};
pub use subst::{substitute, substitute_all, substitute_term};

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> Term {
        Term::var("x")
    }

    fn y() -> Term {
        Term::var("y")
    }

    #[test]
    fn parse_literal_atom() {
        assert_eq!(parse("0 = 0").unwrap(), Formula::Eq(Term::Zero, Term::Zero));
    }

    #[test]
    fn parse_literal_quantifier() {
        assert_eq!(
            parse("!A x (x = x)").unwrap(),
            Formula::forall("x", Formula::Eq(x(), x()))
        );
        // Same formula without the parentheses.
        assert_eq!(parse("!A x x = x").unwrap(), parse("!A x (x = x)").unwrap());
    }

    #[test]
    fn parse_unicode_aliases() {
        assert_eq!(parse("¬(0 = 0)").unwrap(), parse("~(0 = 0)").unwrap());
        assert_eq!(
            parse("∀ x (x = x → x = x)").unwrap(),
            parse("!A x (x = x -> x = x)").unwrap()
        );
        assert_eq!(parse("0 ≠ s(0)").unwrap(), parse("0 != s(0)").unwrap());
        assert_eq!(
            parse("!E z ≤ s(0) . z = 0").unwrap(),
            parse("!E z <= s(0) . z = 0").unwrap()
        );
    }

    #[test]
    fn parse_reports_position() {
        match parse("0 = ") {
            Err(ParseError::Syntax { line, col, .. }) => {
                assert_eq!(line, 1);
                assert!(col >= 4);
            }
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn parse_rejects_unknown_atom() {
        assert!(matches!(
            parse("Atom[NoSuchThing](x)"),
            Err(ParseError::UnknownAtom { .. })
        ));
    }

    #[test]
    fn print_parse_round_trip_spot_checks() {
        for text in [
            "0 = 0",
            "!A x (x = x)",
            "!E y Atom[Prf_T](x, y)",
            "~(0 = 0) & (0 = 0 | 0 = s(0))",
            "!A z <= x + s(0) . z = z",
            "!A z < y . (Atom[Prf_T](#42, z) -> Atom[Even](z))",
            "x + y * s(0) = (x + y) * s(0)",
            "sub(x, x) = n(x)",
            "0 = 0 -> 0 = 0 -> 0 = 0",
        ] {
            let phi = parse(text).unwrap();
            let printed = phi.to_string();
            let reparsed = parse(&printed).unwrap();
            assert_eq!(phi, reparsed, "round trip failed for `{text}` -> `{printed}`");
        }
    }

    #[test]
    fn substitute_numeral_for_variable() {
        let phi = Formula::Eq(x(), Term::Zero);
        let got = substitute(&phi, "x", &Term::numeral(1));
        assert_eq!(got, Formula::Eq(Term::succ(Term::Zero), Term::Zero));
    }

    #[test]
    fn substitute_avoids_capture() {
        // [x/y] (!A x (x = y)) must rename the binder.
        let phi = Formula::forall("x", Formula::Eq(x(), y()));
        let got = substitute(&phi, "y", &x());
        let expected = Formula::forall("x0", Formula::Eq(Term::var("x0"), x()));
        assert_eq!(got, expected);
    }

    #[test]
    fn substitute_shadowed_variable_is_untouched() {
        let phi = Formula::forall("x", Formula::Eq(x(), Term::Zero));
        assert_eq!(substitute(&phi, "x", &Term::numeral(2)), phi);
    }

    #[test]
    fn nnf_double_negation() {
        let phi = parse("~~(0 = 0)").unwrap();
        assert_eq!(nnf(&phi), parse("0 = 0").unwrap());
    }

    #[test]
    fn nnf_de_morgan() {
        let phi = parse("~(0 = 0 & 0 = s(0))").unwrap();
        assert_eq!(nnf(&phi), parse("~(0 = 0) | ~(0 = s(0))").unwrap());
    }

    #[test]
    fn nnf_pushes_through_bounded_quantifiers() {
        let phi = parse("~(!A z <= x . z = z)").unwrap();
        assert_eq!(nnf(&phi), parse("!E z <= x . ~(z = z)").unwrap());
    }

    #[test]
    fn symbol_counts() {
        assert_eq!(Term::var("x").complexity(), 0);
        assert_eq!(Term::add(x(), y()).complexity(), 1);
        assert_eq!(parse("~~(0 = 0)").unwrap().count_negations(), 2);
        // Connectives and quantifiers, bounded ones included.
        let phi = parse("!E y (Atom[Prf_T](x, y) & !A z < y . (0 = 0 -> 0 = 0))").unwrap();
        assert_eq!(phi.count_logical_symbols(), 4);
    }

    #[test]
    fn evaluate_ground_equation() {
        let r = Registry::standard();
        let phi = parse("0 = 0").unwrap();
        assert_eq!(evaluate(&phi, &Assignment::new(), 0, &r).unwrap(), Truth::True);
    }

    #[test]
    fn evaluate_finds_small_witness() {
        let r = Registry::standard();
        let phi = parse("!E z (s(z) = s(s(0)))").unwrap();
        assert_eq!(evaluate(&phi, &Assignment::new(), 5, &r).unwrap(), Truth::True);
    }

    #[test]
    fn evaluate_reports_unknown_when_search_is_inconclusive() {
        let r = Registry::standard();
        // False in the standard model, but a bounded search cannot know that.
        let phi = parse("!E z (z + s(z) = z)").unwrap();
        assert_eq!(
            evaluate(&phi, &Assignment::new(), 50, &r).unwrap(),
            Truth::Unknown
        );
    }

    #[test]
    fn evaluate_bounded_quantifiers_are_exact() {
        let r = Registry::standard();
        let phi = parse("!A z <= s(s(0)) . !E w <= z . (w + w = z | w + s(w) = z)").unwrap();
        assert_eq!(evaluate(&phi, &Assignment::new(), 0, &r).unwrap(), Truth::True);
        let lt = parse("!A z < s(0) . z = 0").unwrap();
        assert_eq!(evaluate(&lt, &Assignment::new(), 0, &r).unwrap(), Truth::True);
    }

    #[test]
    fn evaluate_errors_on_abstract_atom() {
        let r = Registry::standard();
        let phi = parse("Atom[Prf_T](0, 0)").unwrap();
        assert!(matches!(
            evaluate(&phi, &Assignment::new(), 0, &r),
            Err(EvalError::AbstractAtom(_))
        ));
    }

    #[test]
    fn evaluate_is_monotone_in_the_bound() {
        let r = Registry::standard();
        let phi = parse("!E z (z * z = s(s(s(s(0)))))").unwrap();
        let mut settled = None;
        for bound in 0..10 {
            let t = evaluate(&phi, &Assignment::new(), bound, &r).unwrap();
            if let Some(prev) = settled {
                assert_eq!(t, prev, "verdict flipped at bound {bound}");
            } else if t != Truth::Unknown {
                settled = Some(t);
            }
        }
        assert_eq!(settled, Some(Truth::True));
    }

    #[test]
    fn json_round_trip() {
        let phi = parse("!E y (Atom[Prf_T](x, y) & !A z < y . (Atom[Prf_T](#59, z) -> Atom[leq](x, z)))")
            .unwrap();
        let v = json::formula_to_json(&phi);
        assert_eq!(json::formula_from_json(&v).unwrap(), phi);
        assert_eq!(v["kind"], "exists");
    }
}
