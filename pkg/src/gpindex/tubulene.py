"""Zig-zag tubulenes ZT(n, h): generator, orbits, symmetries and closed forms.

Vertex ``v^k_{i,j}`` (layer ``i``, type ``k``, position ``j``) has index
``i*2h + k*h + j``. Each layer is the zig-zag ring
``v^0_{i,0} v^1_{i,0} v^0_{i,1} v^1_{i,1} ...`` of length 2h, and consecutive
layers are joined by the vertical edges ``v^1_{i,j} v^0_{i+1,j}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .automorphisms import OrbitPartition, Permutation, is_automorphism
from .errors import TubuleneSpecError
from .graph import Graph, from_edge_list
from .indices import IndexReport, index_report


@dataclass(frozen=True)
class TubuleneSpec:
    n: int
    h: int

    def __post_init__(self):
        if self.n < 1 or self.h < 2:
            raise TubuleneSpecError(f"ZT(n,h) needs n >= 1 and h >= 2, got n={self.n}, h={self.h}")

    @property
    def vertex_count(self) -> int:
        return 2 * self.h * (self.n + 1)

    def index(self, i: int, k: int, j: int) -> int:
        return i * 2 * self.h + k * self.h + j % self.h

    def label(self, v: int) -> tuple[int, int, int]:
        i, rest = divmod(v, 2 * self.h)
        k, j = divmod(rest, self.h)
        return i, k, j

    def layer_set(self, i: int, k: int) -> list[int]:
        """The vertex set V^k_i."""
        return [self.index(i, k, j) for j in range(self.h)]


def generate(spec: TubuleneSpec) -> Graph:
    n, h = spec.n, spec.h
    idx = spec.index
    edges = []
    for i in range(n + 1):
        for j in range(h):
            edges.append((idx(i, 0, j), idx(i, 1, j)))
            edges.append((idx(i, 1, j), idx(i, 0, j + 1)))
    for i in range(n):
        for j in range(h):
            edges.append((idx(i, 1, j), idx(i + 1, 0, j)))
    return from_edge_list(edges, spec.vertex_count)


def vertex_labels(spec: TubuleneSpec) -> dict[int, str]:
    return {v: "label {} {} {}".format(*spec.label(v)) for v in range(spec.vertex_count)}


class OrbitId(NamedTuple):
    """``O^k_i``; ``k`` is ``None`` for the middle orbit of even ``n``."""

    k: int | None
    i: int

    def __str__(self):
        return f"O_{self.i}" if self.k is None else f"O^{self.k}_{self.i}"


def orbit_ids(spec: TubuleneSpec) -> list[OrbitId]:
    n = spec.n
    ids = [OrbitId(k, i) for i in range((n + 1) // 2) for k in (0, 1)]
    if n % 2 == 0:
        ids.append(OrbitId(None, n // 2))
    return ids


def orbit_members(spec: TubuleneSpec, oid: OrbitId) -> list[int]:
    n = spec.n
    if oid.k is None:
        if n % 2 or oid.i != n // 2:
            raise TubuleneSpecError(f"ZT({n},{spec.h}) has no middle orbit {oid}")
        return spec.layer_set(oid.i, 0) + spec.layer_set(oid.i, 1)
    if not 0 <= oid.i <= (n - 1) // 2:
        raise TubuleneSpecError(f"orbit {oid} out of range for ZT({n},{spec.h})")
    return spec.layer_set(oid.i, oid.k) + spec.layer_set(n - oid.i, 1 - oid.k)


def theoretical_orbits(spec: TubuleneSpec) -> OrbitPartition:
    return OrbitPartition.from_sets(
        (orbit_members(spec, oid) for oid in orbit_ids(spec)), spec.vertex_count
    )


def _relabel(spec: TubuleneSpec, fn) -> Permutation:
    out = [0] * spec.vertex_count
    for v in range(spec.vertex_count):
        out[v] = spec.index(*fn(*spec.label(v)))
    return tuple(out)


def structural_automorphisms(spec: TubuleneSpec) -> list[Permutation]:
    """The 4h symmetries rotation^r * reflection^s * end_swap^t, identity first.

    rotation:  v^k_{i,j} -> v^k_{i,j+1}
    reflection: v^k_{i,j} -> v^k_{i,-i-j-k}
    end swap:  v^k_{i,j} -> v^{1-k}_{n-i,j+i+k}
    """
    n, h = spec.n, spec.h
    if n % 2 == 0:
        raise TubuleneSpecError("structural automorphisms are only constructed for odd n")
    g = generate(spec)
    rotation = lambda i, k, j: (i, k, j + 1)
    reflection = lambda i, k, j: (i, k, -i - j - k)
    end_swap = lambda i, k, j: (n - i, 1 - k, j + i + k)

    perms = []
    for t in range(2):
        for s in range(2):
            for r in range(h):
                def fn(i, k, j, r=r, s=s, t=t):
                    if t:
                        i, k, j = end_swap(i, k, j)
                    if s:
                        i, k, j = reflection(i, k, j)
                    for _ in range(r):
                        i, k, j = rotation(i, k, j)
                    return i, k, j % h

                perm = _relabel(spec, fn)
                if not is_automorphism(g, perm):
                    raise AssertionError(f"symmetry (r={r}, s={s}, t={t}) breaks adjacency")
                perms.append(perm)
    if len(set(perms)) != 4 * h:
        raise AssertionError("structural automorphisms are not pairwise distinct")
    return perms


# -- distance tables ----------------------------------------------------------
#
# Cell keys: u is any vertex of V^0_0, v any vertex of V^1_0. Each entry maps
# to (first column, second column); the O^0_0 rows split on h > n + 2, the
# O^1_0 rows on h > n.

_half = Fraction(1, 2)

DISTANCE_TABLES = {
    # h odd, n odd
    (1, 1): {
        "d(u,V0_0)": (lambda n, h: _half * (h * h - 1),) * 2,
        "d(u,V1_n)": (lambda n, h: _half * (h * h + 2 * h * n + n * n + 2 * n),
                      lambda n, h: h * (2 * n + 1)),
        "d(u,O0_0)": (lambda n, h: _half * (2 * h * h + 2 * h * n + n * n + 2 * n - 1),
                      lambda n, h: _half * (h * h + 4 * h * n + 2 * h - 1)),
        "W(O0_0)": (lambda n, h: Fraction(h, 2) * (2 * h * h + 2 * h * n + n * n + 2 * n - 1),
                    lambda n, h: Fraction(h, 2) * (h * h + 4 * h * n + 2 * h - 1)),
        "d(v,V1_0)": (lambda n, h: _half * (h * h - 1),) * 2,
        "d(v,V0_n)": (lambda n, h: _half * (h * h + 2 * h * n + n * n - 2 * n),
                      lambda n, h: h * (2 * n - 1)),
        "d(v,O1_0)": (lambda n, h: _half * (2 * h * h + 2 * h * n + n * n - 2 * n - 1),
                      lambda n, h: _half * (h * h + 4 * h * n - 2 * h - 1)),
        "W(O1_0)": (lambda n, h: Fraction(h, 2) * (2 * h * h + 2 * h * n + n * n - 2 * n - 1),
                    lambda n, h: Fraction(h, 2) * (h * h + 4 * h * n - 2 * h - 1)),
    },
    # h even, n odd
    (0, 1): {
        "d(u,V0_0)": (lambda n, h: Fraction(h * h, 2),) * 2,
        "d(u,V1_n)": (lambda n, h: _half * (h * h + 2 * h * n + n * n + 2 * n + 1),
                      lambda n, h: h * (2 * n + 1)),
        "d(u,O0_0)": (lambda n, h: _half * (2 * h * h + 2 * h * n + n * n + 2 * n + 1),
                      lambda n, h: _half * (h * h + 4 * h * n + 2 * h)),
        "W(O0_0)": (lambda n, h: Fraction(h, 2) * (2 * h * h + 2 * h * n + n * n + 2 * n + 1),
                    lambda n, h: Fraction(h, 2) * (h * h + 4 * h * n + 2 * h)),
        "d(v,V1_0)": (lambda n, h: Fraction(h * h, 2),) * 2,
        "d(v,V0_n)": (lambda n, h: _half * (h * h + 2 * h * n + n * n - 2 * n + 1),
                      lambda n, h: h * (2 * n - 1)),
        "d(v,O1_0)": (lambda n, h: _half * (2 * h * h + 2 * h * n + n * n - 2 * n + 1),
                      lambda n, h: _half * (h * h + 4 * h * n - 2 * h)),
        "W(O1_0)": (lambda n, h: Fraction(h, 2) * (2 * h * h + 2 * h * n + n * n - 2 * n + 1),
                    lambda n, h: Fraction(h, 2) * (h * h + 4 * h * n - 2 * h)),
    },
    # h odd, n even
    (1, 0): {
        "d(u,V0_0)": (lambda n, h: _half * (h * h - 1),) * 2,
        "d(u,V1_n)": (lambda n, h: _half * (h * h + 2 * h * n + n * n + 2 * n + 1),
                      lambda n, h: h * (2 * n + 1)),
        "d(u,O0_0)": (lambda n, h: _half * (2 * h * h + 2 * h * n + n * n + 2 * n),
                      lambda n, h: _half * (h * h + 4 * h * n + 2 * h - 1)),
        "W(O0_0)": (lambda n, h: Fraction(h, 2) * (2 * h * h + 2 * h * n + n * n + 2 * n),
                    lambda n, h: Fraction(h, 2) * (h * h + 4 * h * n + 2 * h - 1)),
        "d(v,V1_0)": (lambda n, h: _half * (h * h - 1),) * 2,
        "d(v,V0_n)": (lambda n, h: _half * (h * h + 2 * h * n + n * n - 2 * n + 1),
                      lambda n, h: h * (2 * n - 1)),
        "d(v,O1_0)": (lambda n, h: _half * (2 * h * h + 2 * h * n + n * n - 2 * n),
                      lambda n, h: _half * (h * h + 4 * h * n - 2 * h - 1)),
        "W(O1_0)": (lambda n, h: Fraction(h, 2) * (2 * h * h + 2 * h * n + n * n - 2 * n),
                    lambda n, h: Fraction(h, 2) * (h * h + 4 * h * n - 2 * h - 1)),
    },
    # h even, n even
    (0, 0): {
        "d(u,V0_0)": (lambda n, h: Fraction(h * h, 2),) * 2,
        "d(u,V1_n)": (lambda n, h: _half * (h * h + 2 * h * n + n * n + 2 * n),
                      lambda n, h: h * (2 * n + 1)),
        "d(u,O0_0)": (lambda n, h: _half * (2 * h * h + 2 * h * n + n * n + 2 * n),
                      lambda n, h: _half * (h * h + 4 * h * n + 2 * h)),
        "W(O0_0)": (lambda n, h: Fraction(h, 2) * (2 * h * h + 2 * h * n + n * n + 2 * n),
                    lambda n, h: Fraction(h, 2) * (h * h + 4 * h * n + 2 * h)),
        "d(v,V1_0)": (lambda n, h: Fraction(h * h, 2),) * 2,
        "d(v,V0_n)": (lambda n, h: _half * (h * h + 2 * h * n + n * n - 2 * n),
                      lambda n, h: h * (2 * n - 1)),
        "d(v,O1_0)": (lambda n, h: _half * (2 * h * h + 2 * h * n + n * n - 2 * n),
                      lambda n, h: _half * (h * h + 4 * h * n - 2 * h)),
        "W(O1_0)": (lambda n, h: Fraction(h, 2) * (2 * h * h + 2 * h * n + n * n - 2 * n),
                    lambda n, h: Fraction(h, 2) * (h * h + 4 * h * n - 2 * h)),
    },
}

_U_ROWS = ("d(u,V0_0)", "d(u,V1_n)", "d(u,O0_0)", "W(O0_0)")


def table_column(key: str, n: int, h: int) -> int:
    """0 for the first table column, 1 for the second."""
    if key in _U_ROWS:
        return 0 if h > n + 2 else 1
    return 0 if h > n else 1


def distance_table(spec: TubuleneSpec) -> dict[str, int]:
    """Closed-form value of every table cell that applies to ``spec``."""
    n, h = spec.n, spec.h
    rows = DISTANCE_TABLES[(h % 2, n % 2)]
    out = {}
    for key, cols in rows.items():
        value = Fraction(cols[table_column(key, n, h)](n, h))
        if value.denominator != 1:
            raise ArithmeticError(f"table cell {key} is not integral for ZT({n},{h}): {value}")
        out[key] = int(value)
    return out


def orbit_wiener_closed(spec: TubuleneSpec, oid: OrbitId) -> int:
    """W of one orbit from the tables; inner orbits use the sub-tube ZT(n-2i, h)."""
    n, h = spec.n, spec.h
    if oid.k is None:
        orbit_members(spec, oid)  # validates the id
        return h**3
    orbit_members(spec, oid)
    inner = TubuleneSpec(n - 2 * oid.i, h)
    return distance_table(inner)["W(O0_0)" if oid.k == 0 else "W(O1_0)"]


def orbit_wiener_sum_closed(spec: TubuleneSpec) -> int:
    return sum(orbit_wiener_closed(spec, oid) for oid in orbit_ids(spec))


# -- closed formulas for the whole index --------------------------------------


def _rows():
    F = Fraction
    return {
        (1, 1): [
            ("n<h-2", lambda n, h: n < h - 2,
             lambda n, h: F(h, 6) * (n + 1) ** 2 * (6 * h**2 + 3 * h * n + 3 * h + n**2 + 2 * n - 3)),
            ("n=h-2", lambda n, h: n == h - 2 and n >= 3,
             lambda n, h: F(h, 6) * (n + 1) * (6 * h**2 * n + 3 * h**2 + 3 * h * n**2 + 12 * h * n
                                               + 9 * h + n**3 - 7 * n - 3)),
            ("n>=h", lambda n, h: n >= h and h >= 5,
             lambda n, h: F(h, 6) * (n + 1) * (h**3 + 3 * h**2 * n + 3 * h**2 + 6 * h * n**2
                                               + 12 * h * n + 5 * h - 3 * n - 3)),
        ],
        (0, 1): [
            ("n<h-2", lambda n, h: n < h - 2,
             lambda n, h: F(h, 6) * (n + 1) ** 2 * (6 * h**2 + 3 * h * n + 3 * h + n**2 + 2 * n + 3)),
            ("n=h-1", lambda n, h: n == h - 1 and n >= 3,
             lambda n, h: F(h, 6) * (n + 1) * (6 * h**2 * n + 3 * h**2 + 3 * h * n**2 + 12 * h * n
                                               + 9 * h + n**3 - n)),
            ("n>=h", lambda n, h: n >= h and h >= 4,
             lambda n, h: F(h**2, 6) * (n + 1) * (h**2 + 3 * h * n + 3 * h + 6 * n**2 + 12 * n + 8)),
        ],
        (1, 0): [
            ("n<h-2", lambda n, h: n < h - 2,
             lambda n, h: F(h, 6) * (n + 1) * (6 * h**2 * n + 6 * h**2 + 3 * h * n**2 + 6 * h * n
                                               + n**3 + 3 * n**2 + 2 * n)),
            ("n=h-1", lambda n, h: n == h - 1 and n >= 4,
             lambda n, h: F(h, 6) * (n + 1) * (6 * h**2 * n + 3 * h**2 + 3 * h * n**2 + 12 * h * n
                                               + 6 * h + n**3 - 4 * n - 3)),
            ("n>=h", lambda n, h: n >= h and h >= 5,
             lambda n, h: F(h, 6) * (n + 1) * (h**3 + 3 * h**2 * n + 3 * h**2 + 6 * h * n**2
                                               + 12 * h * n + 5 * h - 3 * n - 3)),
        ],
        (0, 0): [
            ("n<h-2", lambda n, h: n < h - 2,
             lambda n, h: F(h, 6) * (n + 1) * (6 * h**2 * n + 6 * h**2 + 3 * h * n**2 + 6 * h * n
                                               + n**3 + 3 * n**2 + 2 * n)),
            ("n=h-2", lambda n, h: n == h - 2 and n >= 4,
             lambda n, h: F(h, 6) * (n + 1) * (6 * h**2 * n + 3 * h**2 + 3 * h * n**2 + 12 * h * n
                                               + 6 * h + n**3 - 4 * n)),
            ("n>=h", lambda n, h: n >= h and h >= 6,
             lambda n, h: F(h**2, 6) * (n + 1) * (h**2 + 3 * h * n + 3 * h + 6 * n**2 + 12 * n + 2)),
        ],
    }


CLOSED_FORM_ROWS = _rows()


@dataclass(frozen=True)
class ClosedFormResult:
    value: int | None
    regime: str
    supported: bool

    def __str__(self):
        return f"{self.value} ({self.regime})" if self.supported else "unsupported"


def regime_name(spec: TubuleneSpec, condition: str) -> str:
    hp = "odd" if spec.h % 2 else "even"
    np_ = "odd" if spec.n % 2 else "even"
    return f"h-{hp},n-{np_},{condition}"


def closed_form_gp(spec: TubuleneSpec) -> ClosedFormResult:
    """Evaluate the matching closed-formula row, or report the cell unsupported."""
    n, h = spec.n, spec.h
    for condition, applies, formula in CLOSED_FORM_ROWS[(h % 2, n % 2)]:
        if applies(n, h):
            value = formula(n, h)
            if value.denominator != 1:
                raise ArithmeticError(f"closed form {condition} not integral at ZT({n},{h})")
            return ClosedFormResult(int(value), regime_name(spec, condition), True)
    return ClosedFormResult(None, "unsupported", False)


# -- orchestration ------------------------------------------------------------


@dataclass(frozen=True)
class TubuleneReport:
    spec: TubuleneSpec
    report: IndexReport
    closed: ClosedFormResult

    @property
    def agree(self) -> bool:
        r = self.report
        ok = r.routes_agree
        ok &= r.gp_direct == (self.spec.n + 1) * r.orbit_wiener_sum
        if self.closed.supported:
            ok &= self.closed.value == r.gp_direct
        return bool(ok)


def full_report(spec: TubuleneSpec, *, cut: bool = True) -> TubuleneReport:
    """Run the orbit route, the cut method and the closed formula on ZT(n,h)."""
    g = generate(spec)
    report = index_report(g, theoretical_orbits(spec), cut=cut)
    return TubuleneReport(spec, report, closed_form_gp(spec))
