"""Session semantics: verdict protocol, models, push/pop, options, exit codes."""

from fractions import Fraction

from realcad.parser import parse
from realcad.runner import RunOptions, Session, run_text

CIRCLE_GT1 = """
(declare-fun x () Real)
(declare-fun y () Real)
(assert (= (+ (* x x) (* y y)) 1))
(assert (> (+ x y) 1))
(check-sat)
(get-model)
"""


def verdicts(results):
    return [r.text.splitlines()[0] for r in results if r.kind == "verdict"]


def test_circle_sat_with_model():
    results, code = run_text(CIRCLE_GT1)
    assert verdicts(results) == ["sat"]
    assert code == 0
    model = [r for r in results if r.kind == "model"][0]
    coords = {a["var"]: a for a in model.data["model"]}
    assert set(coords) == {"x", "y"}
    # every coordinate carries an exact certificate usable for validation
    vals = {}
    for name, doc in coords.items():
        if "value" in doc:
            vals[name] = Fraction(doc["value"])
        else:
            lo, hi = (Fraction(s) for s in doc["interval"])
            assert lo <= hi
            vals[name] = (lo + hi) / 2
    assert abs(vals["x"] ** 2 + vals["y"] ** 2 - 1) < Fraction(1, 1000)
    assert vals["x"] + vals["y"] > 1


def test_circle_unsat():
    text = CIRCLE_GT1.replace("(> (+ x y) 1)", "(> (+ x y) 2)").replace("(get-model)", "")
    results, code = run_text(text)
    assert verdicts(results) == ["unsat"]
    assert code == 1


def test_decide_true_false():
    results, code = run_text("(assert (forall ((x Real)) (> (+ (* x x) 1) 0)))(decide)")
    assert verdicts(results) == ["true"] and code == 0
    results, code = run_text("(assert (exists ((x Real)) (= (+ (* x x) 1) 0)))(decide)")
    assert verdicts(results) == ["false"] and code == 1


def test_push_pop_restores_prior_verdict():
    text = """
    (declare-fun x () Real)
    (assert (> x 0))
    (check-sat)
    (push)
    (assert (< x 0))
    (check-sat)
    (pop)
    (check-sat)
    """
    results, code = run_text(text)
    assert verdicts(results) == ["sat", "unsat", "sat"]
    assert code == 0


def test_incremental_adds_after_check():
    text = """
    (declare-fun x () Real)
    (declare-fun y () Real)
    (assert (= (+ (* x x) (* y y)) 1))
    (check-sat)
    (assert (> (+ x y) 2))
    (check-sat)
    """
    results, code = run_text(text)
    assert verdicts(results) == ["sat", "unsat"]


def test_get_cells():
    text = """
    (declare-fun x () Real)
    (assert (< (* x x) 1))
    (check-sat)
    (get-cells)
    """
    results, _ = run_text(text)
    cells = [r for r in results if r.kind == "cells"][0]
    assert cells.data["cells"] == [
        {"index": [3], "sample": [{"var": "x", "value": "0"}]}
    ]


def test_model_without_sat_is_an_error():
    results, code = run_text("(declare-var x Real)(get-model)")
    assert results[-1].kind == "error"
    assert code == 2


def test_error_keeps_processing_and_sets_code():
    text = "(declare-var x Real)(get-model)(assert (> x 0))(check-sat)"
    results, code = run_text(text)
    assert verdicts(results) == ["sat"]
    assert code == 2  # an error occurred earlier in the script


def test_parse_error_exit_code():
    results, code = run_text("(assert (> x 0)")
    assert code == 2 and results[0].kind == "error"


def test_operator_option_and_stats():
    text = """
    (set-option :operator collins)
    (set-option :stats true)
    (declare-fun x () Real)
    (assert (> (* x x) 4))
    (check-sat)
    """
    results, code = run_text(text)
    verdict = [r for r in results if r.kind == "verdict"][0]
    assert verdict.text.splitlines()[0] == "sat"
    assert verdict.data["stats"]["levels"]["1"]["operator"] == "collins"


def test_operator_locked_after_check():
    text = """
    (declare-fun x () Real)
    (assert (> x 0))
    (check-sat)
    (set-option :operator collins)
    """
    results, code = run_text(text)
    assert results[-1].kind == "error"


def test_budget_exit_code():
    text = """
    (set-option :cell-cap 3)
    (declare-fun x () Real)
    (declare-fun y () Real)
    (assert (= (+ (* x x) (* y y)) 1))
    (check-sat)
    """
    results, code = run_text(text)
    assert code == 3
    assert any(r.data.get("budget") for r in results if r.kind == "error")


def test_order_option_changes_projection_direction():
    base = """
    (declare-fun x () Real)
    (declare-fun y () Real)
    (assert (= (- y (* x x)) 0))
    (check-sat)
    """
    results, _ = run_text(base)
    assert verdicts(results) == ["sat"]
    session = Session(RunOptions(order=["y", "x"]))
    script = parse(base)
    out = session.run(script.commands)
    assert [r.text for r in out if r.kind == "verdict"] == ["sat"]
    # projected order flips: level-1 variable is y now
    assert session.var_names()[0] == "y"


def test_quantified_assert_must_stand_alone():
    text = """
    (declare-fun x () Real)
    (assert (> x 0))
    (assert (forall ((y Real)) (> y x)))
    (check-sat)
    """
    results, code = run_text(text)
    assert any(r.kind == "error" for r in results)


def test_verdict_lines_are_exact_protocol():
    for text, expected in [
        (CIRCLE_GT1.replace("(get-model)", ""), "sat"),
        ("(assert (forall ((x Real)) (>= (* x x) 0)))(check-sat)", "true"),
    ]:
        results, _ = run_text(text)
        line = [r for r in results if r.kind == "verdict"][0].text.splitlines()[0]
        assert line == expected
