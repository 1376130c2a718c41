from __future__ import annotations

from fractions import Fraction

import pytest

from smult.config import load_suite, load_suite_file, parse_rational, shipped_config_text, shipped_suite
from smult.constructions import Duplication, FiberProduct, Idealization
from smult.errors import ConfigError
from smult.harness import PASS, PASS_IN_LIMIT, run_suite
from smult.ring import RingPresentation

BASE = """
[rings.kx]
spec = "p=3; n=1; mono=(); dim=1"

[rings.kxy]
p = 3
n = 2
"""


def error_of(text):
    with pytest.raises(ConfigError) as info:
        load_suite(text)
    return info.value


def test_shipped_suite_loads():
    suite = shipped_suite()
    assert len(suite.checks) >= 25
    kinds = {type(o) for o in suite.objects.values()}
    assert {RingPresentation, FiberProduct, Idealization, Duplication} <= kinds
    assert suite.objects["r2"].dim == 2
    assert suite.objects["fp_node"].ring.monomial_relations.gens == ((1, 1),)


def test_shipped_suite_passes():
    reports = run_suite(shipped_suite().checks)
    bad = [(r.theorem_id, r.label, r.verdict) for r in reports
           if r.verdict not in (PASS, PASS_IN_LIMIT)]
    assert not bad


def test_defaults_and_check_fields():
    suite = load_suite(BASE + """
[defaults]
s = ["1/2", 1, 2.5]
e = [1, 2]

[fiber_product.fp]
left = "kx"
right = "kx"

[[checks]]
theorem = "L3.4"
target = "fp"
tolerance = "1/9"

[[checks]]
theorem = "L3.4"
target = "fp"
s = [3]
e = [2, 3]
flags = "cm"
tolerance_scale = 4
""")
    a, b = suite.checks
    assert a.s_grid == (Fraction(1, 2), Fraction(1), Fraction(5, 2))
    assert a.e_range == (1, 2) and a.tolerance == Fraction(1, 9)
    assert b.s_grid == (Fraction(3),) and b.e_range == (2, 3)
    assert b.flags == frozenset({"cm"}) and b.tolerance_scale == 4


def test_constructions_resolve_in_any_order():
    suite = load_suite("""
[duplication.d]
base = "ix_ring"
ideal = "(x1)"

[rings.ix_ring]
spec = "p=3; n=1"

[idealization.ix]
base = "kx2"
summands = ["0", "(x1)"]

[rings.kx2]
spec = "p=3; n=1"

[fiber_product.f]
left = "ix_ring"
right = "kx2"
over = [[1, 1]]
""")
    assert isinstance(suite.objects["d"], Duplication)
    assert len(suite.objects["ix"].module.summands) == 2
    assert suite.objects["f"].match == ((0, 0),)


def test_quadric_key():
    suite = load_suite("[rings.q]\np = 5\nquadric = 3\n")
    R = suite.objects["q"]
    assert R.p == 5 and R.nvars == 4 and R.dim == 3


def test_toml_syntax_error_has_position():
    err = error_of("[rings.kx]\nspec = \n")
    assert err.line == 2 and err.column is not None
    assert "line 2" in str(err)


def test_unknown_section_position():
    err = error_of(BASE + "\n[bogus]\nx = 1\n")
    assert err.line == BASE.count("\n") + 2
    assert err.column == 1


def test_bad_ring_stanza_position():
    text = BASE + '\n[rings.bad]\nspec = "p=4; n=1"\n'
    err = error_of(text)
    assert err.line == text.splitlines().index("[rings.bad]") + 1
    assert "bad" in str(err)


def test_unknown_reference_position():
    text = BASE + '\n[fiber_product.fp]\nleft = "kx"\nright = "nope"\n'
    err = error_of(text)
    assert err.line == text.splitlines().index("[fiber_product.fp]") + 1
    assert "nope" in str(err)


def test_check_errors_point_at_the_right_stanza():
    text = BASE + """
[[checks]]
theorem = "WY-constants"

[[checks]]
theorem = "T9.9"
"""
    err = error_of(text)
    lines = text.splitlines()
    second = [i for i, ln in enumerate(lines) if ln == "[[checks]]"][1]
    assert err.line == second + 1
    assert "T9.9" in str(err)


@pytest.mark.parametrize("body, needle", [
    ('theorem = "L3.4"', "target"),
    ('theorem = "L3.4"\ntarget = "missing"', "missing"),
    ('theorem = "L3.4"\ntarget = "kx"\ns = [0]', "positive"),
    ('theorem = "L3.4"\ntarget = "kx"\nwhatever = 1', "whatever"),
    ('theorem = "L3.4"\ntarget = "kx"\ns = ["x"]', "rational"),
])
def test_check_validation(body, needle):
    err = error_of(BASE + "\n[[checks]]\n" + body + "\n")
    assert needle in str(err)
    assert err.line is not None


def test_cycle_detected():
    err = error_of("""
[duplication.a]
base = "b"
ideal = "(x1)"

[duplication.b]
base = "a"
ideal = "(x1)"
""")
    assert "circular" in str(err)


def test_duplicate_names_rejected():
    err = error_of(BASE + '\n[duplication.kx]\nbase = "kxy"\nideal = "(x1)"\n')
    assert "twice" in str(err)


def test_construction_key_validation():
    err = error_of(BASE + '\n[idealization.ix]\nbase = "kx"\n')
    assert "summands" in str(err)
    err = error_of(BASE + '\n[fiber_product.f]\nleft = "kx"\nright = "kx"\nover = [[1]]\n')
    assert "pair" in str(err)


def test_parse_rational():
    assert parse_rational("3/4") == Fraction(3, 4)
    assert parse_rational(2) == 2
    assert parse_rational(0.5) == Fraction(1, 2)
    with pytest.raises(ConfigError):
        parse_rational(True)
    with pytest.raises(ConfigError):
        parse_rational("1/0")


def test_load_suite_file(tmp_path):
    path = tmp_path / "suite.toml"
    path.write_text(shipped_config_text(), encoding="utf-8")
    assert len(load_suite_file(path).checks) == len(shipped_suite().checks)
