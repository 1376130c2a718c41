"""Suite configuration files (TOML) and their translation into check specs.

Layout::

    [defaults]                 # optional; s and e grids used by checks that omit them
    s = ["1/2", 1, 2]
    e = [1, 2, 3]

    [rings.node]               # a ring spec string ...
    spec = "p=3; n=2; mono=(x1*x2); dim=1"
    [rings.kx]                 # ... or the same keys as a table
    p = 3
    n = 1
    [rings.r2]                 # built-in quadric x0^2 + ... + xd^2
    p = 3
    quadric = 2

    [fiber_product.fp]         # over: 1-based [left, right] variable pairs
    left = "kx"
    right = "kx"
    over = []

    [idealization.ix]
    base = "kxy"
    summands = ["(x1)", "0"]   # "0" is a free summand

    [duplication.dx]
    base = "kx"
    ideal = "(x1)"

    [[checks]]
    theorem = "L3.4"
    target = "fp"
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from typing import Optional

import tomli

from . import monomial as mono
from .constructions import duplication, fiber_product, idealization
from .errors import ConfigError, SmultError
from .harness import THEOREMS, CheckSpec
from .ring import ModuleSpec, RingPresentation, parse_ring, quadric, ring_from_fields

SECTIONS = ("defaults", "rings", "fiber_product", "idealization", "duplication", "checks")
CHECK_KEYS = {
    "theorem", "target", "ring", "s", "e", "I", "J", "flags", "tolerance",
    "tolerance_scale", "betti", "powers", "brackets", "count",
}


@dataclass
class Suite:
    objects: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)


def _table_pattern(section: str, name: Optional[str] = None) -> str:
    if name is None:
        return rf"^[ \t]*\[\[?\s*{re.escape(section)}\s*\]\]?"
    return rf"^[ \t]*\[\s*{re.escape(section)}\s*\.\s*\"?{re.escape(name)}\"?\s*\]"


def _fail(text: str, message: str, pattern: str, nth: int = 0):
    line = col = None
    matches = list(re.finditer(pattern, text, re.MULTILINE))
    if matches:
        m = matches[min(nth, len(matches) - 1)]
        line = text.count("\n", 0, m.start()) + 1
        col = m.start() - (text.rfind("\n", 0, m.start()) + 1) + 1
    raise ConfigError(message, line, col)


def parse_rational(x) -> Fraction:
    if isinstance(x, bool):
        raise ConfigError(f"not a rational: {x!r}")
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, float):
        return Fraction(str(x))
    try:
        return Fraction(str(x).strip())
    except (ValueError, ZeroDivisionError):
        raise ConfigError(f"not a rational: {x!r}") from None


def _ring_table(name: str, table) -> RingPresentation:
    if isinstance(table, str):
        return parse_ring(table)
    if not isinstance(table, dict):
        raise ConfigError(f"ring {name!r} must be a table or a spec string")
    if "spec" in table:
        if len(table) > 1:
            raise ConfigError(f"ring {name!r}: 'spec' cannot be combined with other keys")
        return parse_ring(str(table["spec"]))
    if "quadric" in table:
        extra = set(table) - {"quadric", "p"}
        if extra:
            raise ConfigError(f"ring {name!r}: unexpected keys {sorted(extra)}")
        return quadric(int(table.get("p", 3)), int(table["quadric"]))
    return ring_from_fields(table)


def load_suite(text: str) -> Suite:
    try:
        data = tomli.loads(text)
    except tomli.TOMLDecodeError as exc:
        raise ConfigError(exc.msg, exc.lineno, exc.colno) from None
    for key in data:
        if key not in SECTIONS:
            _fail(text, f"unknown section {key!r}", _table_pattern(key))

    defaults = data.get("defaults", {})
    bad = set(defaults) - {"s", "e"}
    if bad:
        _fail(text, f"unknown defaults {sorted(bad)}", _table_pattern("defaults"))

    suite = Suite()
    stanzas: dict = {}
    for section in ("rings", "fiber_product", "idealization", "duplication"):
        for name, body in data.get(section, {}).items():
            if name in stanzas:
                _fail(text, f"name {name!r} defined twice", _table_pattern(section, name))
            stanzas[name] = (section, body)

    resolving: set = set()

    def ring_of(obj):
        return obj if isinstance(obj, RingPresentation) else obj.ring

    def resolve(name: str, origin: tuple):
        if name in suite.objects:
            return suite.objects[name]
        if name not in stanzas:
            _fail(text, f"unknown ring or construction {name!r}", _table_pattern(*origin))
        if name in resolving:
            _fail(text, f"circular definition involving {name!r}", _table_pattern(*origin))
        resolving.add(name)
        section, body = stanzas[name]
        here = (section, name)
        try:
            if section == "rings":
                obj = _ring_table(name, body)
            elif section == "fiber_product":
                _expect(body, {"left", "right", "over"}, {"left", "right"}, text, here)
                left = ring_of(resolve(str(body["left"]), here))
                right = ring_of(resolve(str(body["right"]), here))
                pairs = []
                for pair in body.get("over", []):
                    if len(pair) != 2:
                        raise ConfigError("each 'over' entry is a [left, right] pair")
                    pairs.append((int(pair[0]) - 1, int(pair[1]) - 1))
                obj = fiber_product(left, right, pairs)
            elif section == "idealization":
                _expect(body, {"base", "summands"}, {"base", "summands"}, text, here)
                base = ring_of(resolve(str(body["base"]), here))
                summands = tuple(_summand(t, base.nvars) for t in body["summands"])
                obj = idealization(base, ModuleSpec(summands))
            else:
                _expect(body, {"base", "ideal"}, {"base", "ideal"}, text, here)
                base = ring_of(resolve(str(body["base"]), here))
                obj = duplication(base, mono.parse_ideal(str(body["ideal"]), base.nvars))
        except ConfigError as exc:
            if exc.line is not None:
                raise
            _fail(text, f"{section} {name!r}: {exc}", _table_pattern(*here))
        except SmultError as exc:
            _fail(text, f"{section} {name!r}: {exc}", _table_pattern(*here))
        resolving.discard(name)
        suite.objects[name] = obj
        return obj

    for name in stanzas:
        resolve(name, stanzas[name])

    checks = data.get("checks", [])
    if not isinstance(checks, list):
        _fail(text, "'checks' must be an array of tables ([[checks]])", _table_pattern("checks"))
    for k, body in enumerate(checks):
        pattern = r"^[ \t]*\[\[\s*checks\s*\]\]"
        try:
            suite.checks.append(_check(body, suite.objects, defaults))
        except ConfigError as exc:
            if exc.line is not None:
                raise
            _fail(text, f"check #{k + 1}: {exc}", pattern, k)
        except SmultError as exc:
            _fail(text, f"check #{k + 1}: {exc}", pattern, k)
    return suite


def _expect(body, allowed, required, text, here):
    if not isinstance(body, dict):
        raise ConfigError("construction stanzas must be tables")
    extra = set(body) - allowed
    if extra:
        raise ConfigError(f"unexpected keys {sorted(extra)}")
    missing = required - set(body)
    if missing:
        raise ConfigError(f"missing keys {sorted(missing)}")


def _summand(text, nvars: int):
    text = str(text).strip()
    if text in ("0", "R", "free"):
        return mono.MonomialIdeal.zero(nvars)
    return mono.parse_ideal(text, nvars)


def _check(body: dict, objects: dict, defaults: dict) -> CheckSpec:
    extra = set(body) - CHECK_KEYS
    if extra:
        raise ConfigError(f"unexpected keys {sorted(extra)}")
    tid = body.get("theorem")
    if tid not in THEOREMS:
        raise ConfigError(f"unknown theorem id {tid!r}")
    name = body.get("target", body.get("ring"))
    target = None
    if THEOREMS[tid] is not None:
        if name is None:
            raise ConfigError(f"{tid} needs a 'target'")
        if name not in objects:
            raise ConfigError(f"unknown target {name!r}")
        target = objects[name]
    s_grid = tuple(parse_rational(x) for x in body.get("s", defaults.get("s", [1])))
    if any(s <= 0 for s in s_grid):
        raise ConfigError("s values must be positive")
    e_range = tuple(int(x) for x in body.get("e", defaults.get("e", [1, 2])))
    flags = body.get("flags", [])
    if isinstance(flags, str):
        flags = [flags]
    tol = body.get("tolerance")
    scale = body.get("tolerance_scale")
    betti = body.get("betti")
    brackets = body.get("brackets")
    return CheckSpec(
        theorem_id=tid,
        target=target,
        target_name=name or "",
        s_grid=s_grid,
        e_range=e_range,
        I=body.get("I"),
        J=body.get("J"),
        flags=frozenset(str(f).lower() for f in flags),
        tolerance=None if tol is None else parse_rational(tol),
        tolerance_scale=None if scale is None else parse_rational(scale),
        betti=None if betti is None else tuple(int(x) for x in betti),
        powers=tuple(int(x) for x in body.get("powers", (1, 2, 3, 4))),
        brackets=None if brackets is None else tuple(int(x) for x in brackets),
        count=int(body.get("count", 8)),
    )


def load_suite_file(path) -> Suite:
    with open(path, "r", encoding="utf-8") as fh:
        return load_suite(fh.read())


def shipped_config_text() -> str:
    return resources.files("smult").joinpath("data/shipped_checks.toml").read_text("utf-8")


def shipped_suite() -> Suite:
    return load_suite(shipped_config_text())
