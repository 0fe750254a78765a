"""Line-oriented problem files.

Each non-blank line is ``key: value``; ``#`` starts a comment.  Keys::

    vars:    z1, z2                      variable names (default z1..zn / z)
    ideal:   z1*z2; z1^2 - z1            ';'-separated generators
    points:  (0,0); (1,0)                ';'-separated points (reduced X)
    hermite: 0, 1, 1, 2                  univariate node list, repeats allowed
    g:       z1 + z2                     a polynomial representative
    values:  0, 1, 1, 2                  values aligned with points / distinct nodes
             (0,0) = 0; (1,0) = 1        or explicit point = value pairs
    jets:    g(0) = 5; g_z(0) = 0        derivative values (g_z1z2 = d^2 g/dz1 dz2)
    d:       1                           target degree
    order:   grevlex | lex               monomial order for the quotient basis

Exactly one of ``ideal``, ``points``, ``hermite`` must be present, and at
most one of ``g``, ``values``, ``jets``.
"""

import re
from dataclasses import dataclass, field

from .parsing import ParseError, parse_point, parse_poly, parse_scalar
from .poly import Ring

KEYS = ("vars", "ideal", "points", "hermite", "nodes", "g", "values", "jets", "d", "order")
ORDERS = ("grevlex", "lex")


class ProblemError(ValueError):
    """Malformed problem file; carries the offending line number."""

    def __init__(self, message, line=None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


@dataclass
class ProblemFile:
    vars: tuple
    kind: str  # "ideal" | "points" | "hermite"
    ideal: list = field(default_factory=list)
    points: list = field(default_factory=list)
    nodes: list = field(default_factory=list)
    g: object = None
    values: object = None  # list or {point: value}
    jets: dict = None  # {(point, alpha): value}
    d: int = None
    order: str = "grevlex"

    @property
    def ring(self):
        return Ring(self.vars)

    def has_function(self):
        return any(x is not None for x in (self.g, self.values, self.jets))


def _split(value, sep):
    return [part.strip() for part in value.split(sep) if part.strip()]


def _split_top(value, sep):
    """Split on ``sep`` outside parentheses."""
    out, depth, cur = [], 0, []
    for ch in value:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == sep and depth == 0:
            out.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    out.append("".join(cur).strip())
    return [x for x in out if x]


_JET = re.compile(r"^g(?:_(?P<d>[A-Za-z0-9_^]+))?\s*\((?P<p>[^)]*)\)$")


def parse_derivative(spec, names):
    """``"z1z1z2"`` or ``"z1^2z2"`` -> multi-index over ``names``."""
    alpha = [0] * len(names)
    rest = spec
    ordered = sorted(range(len(names)), key=lambda j: -len(names[j]))
    while rest:
        for j in ordered:
            if rest.startswith(names[j]):
                rest = rest[len(names[j]) :]
                k = 1
                m = re.match(r"\^(\d+)", rest)
                if m:
                    k = int(m.group(1))
                    rest = rest[m.end() :]
                alpha[j] += k
                break
        else:
            raise ValueError(f"cannot read derivative {spec!r}")
    return tuple(alpha)


def parse_jets(value, names):
    jets = {}
    for item in _split(value, ";"):
        if "=" not in item:
            raise ValueError(f"jet {item!r} needs '= value'")
        lhs, rhs = item.split("=", 1)
        m = _JET.match(lhs.strip())
        if m is None:
            raise ValueError(f"cannot read jet {lhs.strip()!r}")
        point = parse_point(m.group("p"))
        alpha = parse_derivative(m.group("d"), names) if m.group("d") else (0,) * len(names)
        if len(point) != len(names):
            raise ValueError(f"point {m.group('p')!r} has {len(point)} coordinates, expected {len(names)}")
        jets[(point, alpha)] = parse_scalar(rhs)
    return jets


def parse_values(value):
    if "=" in value:
        out = {}
        for item in _split(value, ";"):
            lhs, rhs = item.split("=", 1)
            out[parse_point(lhs)] = parse_scalar(rhs)
        return out
    return [parse_scalar(x) for x in _split_top(value.replace(";", ","), ",")]


def parse_problem(text):
    raw = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise ProblemError("expected 'key: value'", lineno)
        key, value = line.split(":", 1)
        key = key.strip().lower()
        if key not in KEYS:
            raise ProblemError(f"unknown key {key!r}", lineno)
        if key == "nodes":
            key = "hermite"
        if key in raw:
            raise ProblemError(f"duplicate key {key!r}", lineno)
        raw[key] = (value.strip(), lineno)

    kinds = [k for k in ("ideal", "points", "hermite") if k in raw]
    if len(kinds) != 1:
        raise ProblemError("exactly one of 'ideal', 'points', 'hermite' is required")
    kind = kinds[0]
    fkeys = [k for k in ("g", "values", "jets") if k in raw]
    if len(fkeys) > 1:
        raise ProblemError("give at most one of 'g', 'values', 'jets'", raw[fkeys[1]][1])

    def field_(key, fn):
        value, lineno = raw[key]
        try:
            return fn(value)
        except ProblemError:
            raise
        except (ParseError, ValueError, TypeError) as exc:
            raise ProblemError(str(exc), lineno) from None

    prob = ProblemFile(vars=(), kind=kind)
    if "order" in raw:
        prob.order = raw["order"][0]
        if prob.order not in ORDERS:
            raise ProblemError(f"order must be one of {', '.join(ORDERS)}", raw["order"][1])
    if "d" in raw:
        prob.d = field_("d", int)
        if prob.d < 0:
            raise ProblemError("d must be non-negative", raw["d"][1])

    if kind == "points":
        prob.points = field_("points", lambda v: [parse_point(p) for p in _split(v, ";")])
        if not prob.points:
            raise ProblemError("no points given", raw["points"][1])
        n = len(prob.points[0])
        if any(len(p) != n for p in prob.points):
            raise ProblemError("points have different dimensions", raw["points"][1])
    elif kind == "hermite":
        prob.nodes = field_("hermite", lambda v: [parse_scalar(p) for p in _split(v.replace(";", ","), ",")])
        if not prob.nodes:
            raise ProblemError("no nodes given", raw["hermite"][1])
        n = 1

    if "vars" in raw:
        names = field_("vars", lambda v: tuple(_split(v.replace(";", ","), ",")))
        for name in names:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", name) or name == "i":
                raise ProblemError(f"invalid variable name {name!r}", raw["vars"][1])
        if len(set(names)) != len(names):
            raise ProblemError("repeated variable name", raw["vars"][1])
        prob.vars = names
    elif kind == "ideal":
        raise ProblemError("'vars' is required with 'ideal'")
    elif kind == "hermite":
        prob.vars = ("z",)
    else:
        prob.vars = tuple(f"z{j + 1}" for j in range(n))

    if kind == "hermite" and len(prob.vars) != 1:
        raise ProblemError("hermite problems are univariate", raw.get("vars", ("", None))[1])
    if kind == "points" and len(prob.vars) != len(prob.points[0]):
        raise ProblemError("number of vars does not match point dimension", raw["vars"][1])

    ring = prob.ring
    if kind == "ideal":
        prob.ideal = field_("ideal", lambda v: [parse_poly(p, ring) for p in _split(v, ";")])
        if not prob.ideal:
            raise ProblemError("no generators given", raw["ideal"][1])
    if "g" in raw:
        prob.g = field_("g", lambda v: parse_poly(v, ring))
    if "values" in raw:
        prob.values = field_("values", parse_values)
    if "jets" in raw:
        prob.jets = field_("jets", lambda v: parse_jets(v, prob.vars))
    return prob


def load_problem(path):
    with open(path, encoding="utf-8") as fh:
        return parse_problem(fh.read())
