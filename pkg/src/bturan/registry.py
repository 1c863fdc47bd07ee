"""Queryable catalog of the known exact values and bounds.

Each rule matches a pattern shape (or the all-trees family), checks its
applicability window over the host sizes, and contributes statements:
exact values, lower bounds, or upper bounds.  A lookup combines every
applicable statement: an exact beats bounds, lower bounds take their max,
upper bounds their min, and a range that closes (lo == hi) is promoted to
exact.  Lower bounds for the connected-spanning variant also serve the
unrestricted variant, and unrestricted upper bounds cap the connected one
(connected spanning hosts are a subset).

Lower bounds carry the construction witnessing them with exactly that many
edges whenever one of the named constructions realizes it; witnesses are
re-verified (freeness, connectivity where claimed) before anyone relies on
them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .constructions import ConstructionSpec, build_construction, spec
from .embedding import is_family_free
from .graphs import BipartiteGraph, is_connected, pad
from .patterns import (
    Pattern,
    Target,
    TreeFamily,
    exbc_defined,
    fits_host,
    shape_caterpillar,
    shape_double_star,
    shape_path,
    shape_spider,
    shape_star,
)


@dataclass(frozen=True)
class Statement:
    kind: str  # "exact" | "lower" | "upper"
    value: int
    citation: str
    witness: ConstructionSpec | None = None
    pad_to: tuple[int, int] | None = None


@dataclass(frozen=True)
class ValueOrBounds:
    tag: str  # "exact" | "range" | "unknown" | "infeasible"
    lo: int | None
    hi: int | None
    citations: tuple[str, ...]
    target: Target | None = None
    a: int = 0
    b: int = 0
    variant: str = "b"
    witness: ConstructionSpec | None = None
    witness_pad: tuple[int, int] | None = None
    notes: str = ""

    @property
    def is_exact(self) -> bool:
        return self.tag == "exact"

    @property
    def value(self) -> int | None:
        return self.lo if self.tag == "exact" else None

    def describe(self) -> str:
        if self.tag == "exact":
            return str(self.lo)
        if self.tag == "range":
            return f"[{self.lo}, {self.hi}]"
        return self.tag


def _is_spider_3d(legs) -> int | None:
    """d >= 2 when legs are one 3-leg plus d unit legs."""
    if legs and legs[0] == 3 and all(l == 1 for l in legs[1:]):
        return len(legs) - 1
    return None


def _is_spider_2d(legs) -> int | None:
    if legs and legs[0] == 2 and all(l == 1 for l in legs[1:]):
        return len(legs) - 1
    return None


def _is_long_spider(legs) -> int | None:
    """l >= 2 when legs are one 2l-leg plus l+1 unit legs."""
    if not legs or legs[0] < 4 or legs[0] % 2 or any(l != 1 for l in legs[1:]):
        return None
    l = legs[0] // 2
    return l if len(legs) - 1 == l + 1 else None


def _pattern_statements(p: Pattern, a: int, b: int, variant: str) -> list[Statement]:
    """All applicable statements; host normalized a <= b, fit pre-checked."""
    out: list[Statement] = []
    n = a if a == b else None
    star_k = shape_star(p)
    path_k = shape_path(p)
    legs = shape_spider(p)
    dstar = shape_double_star(p)
    cat = shape_caterpillar(p)

    def bal(kind, value, cite, wit=None):
        out.append(Statement(kind, value, cite, wit))

    if variant == "b":
        if star_k is not None and star_k >= 3 and n is not None:
            d = star_k - 1
            bal("exact", d * n, "stars", spec("circulant", n, d))
        if path_k == 3 and n is not None:
            bal("exact", n, "short-paths", spec("matching", n))
        if path_k == 4 and n is not None:
            bal("exact", 2 * n - 2, "short-paths", spec("two_stars", n))
        if path_k == 5 and n is not None and n >= 3:
            bal("exact", 2 * n - (n % 2), "paths", spec("blocks_union", n, 3))
        if path_k == 6 and n is not None:
            if n == 3:
                bal("exact", 6, "paths", spec("halved_blocks", 3, 6))
            elif n >= 4:
                bal("exact", 4 * n - 8, "paths", spec("two_bicliques_2", n))
        if legs == (3, 1, 1) and n is not None and n >= 4:
            if n % 3:
                bal("upper", 3 * n - 1, "small-trees/S311")
            else:
                bal("exact", 3 * n, "small-trees/S311", spec("blocks_union", n, 4))
        if legs == (2, 2, 1) and n is not None:
            if n == 3:
                bal("exact", 6, "small-trees/S221", spec("circulant", 3, 2))
            elif n >= 4:
                bal("exact", 4 * n - 8, "small-trees/S221", spec("two_bicliques_2", n))
        if dstar == (2, 2) and n is not None:
            if n == 3:
                bal("exact", 6, "small-trees/D22", spec("circulant", 3, 2))
            elif n == 4:
                bal("exact", 9, "small-trees/D22", spec("theta", 4))
            elif n >= 5:
                bal("exact", 4 * n - 8, "small-trees/D22", spec("two_bicliques_2", n))
        if legs is not None and (d := _is_spider_2d(legs)) is not None and d >= 2:
            if a >= d + 1:
                v1, v2 = d * a, d * (a - 1) + (b - a + 1)
                wit = (
                    Statement("exact", v1, "spiders/S2d", spec("circulant", a, d), (a, b))
                    if v1 >= v2
                    else Statement("exact", v2, "spiders/S2d", spec("star_plus", a, b, d))
                )
                out.append(wit)
        if legs is not None and (d := _is_spider_3d(legs)) is not None and n is not None:
            r = n % (d + 1)
            lo = (d + 1) * n - r * (d + 1 - r)
            if r == 0:
                bal("exact", lo, "spiders/S3d", spec("spider_blocks", n, d))
            else:
                bal("lower", lo, "spiders/S3d", spec("spider_blocks", n, d))
                bal("upper", (d + 1) * n - 1, "spiders/S3d")
        if dstar is not None:
            t, s = dstar
            if s <= t <= 2 * s - 1 and min(a, b) >= 4 * (s + 1) ** 3:
                bal(
                    "exact",
                    s * (a + b - 2 * s),
                    "double-stars/threshold",
                    spec("disjoint_double_biclique", s, a, b),
                )
            if t >= 2 * s:
                bal("upper", t * (a + b) // 2, "double-stars/wide")
        if legs is not None and (l := _is_long_spider(legs)) is not None:
            bal("upper", l * (a + b), "long-spiders")
        if cat is not None:
            r, s, t = cat
            if s < r:
                bal("upper", r * (a + b), "caterpillars")
        # generic lower bounds
        if p.max_degree >= 2 and n is not None:
            d = p.max_degree - 1
            wit = spec("circulant", n, d) if d >= 2 else spec("matching", n)
            bal("lower", d * n, "degree-regular-lower", wit)
        if p.max_degree == 1 and p.n >= 4 and n is not None:
            bal("lower", n, "matching-count-lower")
        if p.is_tree:
            s = p.p
            if s >= 2:
                bal(
                    "lower",
                    (s - 1) * (a + b - 2 * s + 2),
                    "double-biclique-lower",
                    spec("disjoint_double_biclique", s - 1, a, b),
                )
            if n is not None and p.q >= 2:
                L = p.q
                x, y = divmod(n, L - 1)
                bal(
                    "lower",
                    x * (L - 1) ** 2 + y * y,
                    "block-partition-lower",
                    spec("blocks_union", n, L),
                )
            if n is not None and p.n >= 3:
                v = p.n
                f, c = (v - 1) // 2, (v - 1) - (v - 1) // 2
                bal(
                    "lower",
                    ((2 * n) // (v - 1)) * f * c,
                    "halved-block-lower",
                    spec("halved_blocks", n, v),
                )
    else:  # variant bc
        if star_k is not None and star_k >= 3 and n is not None and n >= star_k + 1:
            d = star_k - 1
            bal("exact", d * n, "stars", spec("circulant", n, d))
        if legs is not None and (d := _is_spider_2d(legs)) is not None and d >= 2:
            if n is not None and n >= d + 3:
                bal("exact", d * n, "stars", spec("circulant", n, d))
        if path_k in (5, 6) and n is not None and n >= 3:
            bal(
                "exact",
                2 * n - 1,
                "connected-small-trees",
                spec("spanning_double_star", n),
            )
        if dstar == (2, 2) and n is not None:
            if n >= 6:
                bal("exact", 4 * n - 9, "connected-small-trees", spec("connected_D22", n))
            elif n >= 3:
                bal("exact", 3 * n - 3, "connected-small-trees", spec("theta", n))
        if legs == (3, 1, 1) and n is not None and n >= 4:
            bal("exact", 2 * n, "connected-small-trees", spec("circulant", n, 2))
        if legs == (2, 2, 1) and n is not None and n >= 3:
            bal("exact", 2 * n, "connected-small-trees", spec("circulant", n, 2))
        if legs is not None and (d := _is_spider_3d(legs)) is not None:
            if n is not None and n >= d + 2 and d >= 2:
                bal("exact", d * n, "spiders/S3d-connected", spec("circulant", n, d))
        if dstar is not None:
            t, s = dstar
            if s <= t <= 2 * s - 1 and min(a, b) >= 4 * (s + 1) ** 3:
                bal(
                    "exact",
                    s * (a + b - 2 * s) - 1,
                    "double-stars/threshold-connected",
                    spec("bridged_double_biclique", s, a, b),
                )
        # generic connected lower bounds
        if p.max_degree >= 3 and n is not None:
            d = p.max_degree - 1
            bal("lower", d * n, "degree-regular-lower", spec("circulant", n, d))
        if n is not None:
            bal(
                "lower",
                2 * n - 1,
                "spanning-tree-lower",
                spec("spanning_double_star", n),
            )
    return out


def _family_statements(fam: TreeFamily, a: int, b: int, variant: str) -> list[Statement]:
    out: list[Statement] = []
    if variant != "b":
        return out
    k, l = fam.k, fam.l
    n = a if a == b else None
    if k >= 2:
        out.append(
            Statement(
                "lower",
                (k - 1) * (a + b - 2 * k + 2),
                "double-biclique-lower",
                spec("disjoint_double_biclique", k - 1, a, b),
            )
        )
    if l <= 2 * k - 1 and a >= 4 * k**3:
        out.append(
            Statement(
                "exact",
                (k - 1) * (a + b - 2 * (k - 1)),
                "family/narrow",
                spec("disjoint_double_biclique", k - 1, a, b),
            )
        )
    if 2 * k <= l:
        out.append(Statement("upper", (l - 1) * (a + b) // 2, "family/wide"))
        if n is not None and l >= 3:
            x, y = divmod(n, l - 1)
            out.append(
                Statement(
                    "lower",
                    x * (l - 1) ** 2 + y * y,
                    "block-partition-lower",
                    spec("blocks_union", n, l),
                )
            )
    return out


def _combine(
    statements: list[Statement], target: Target, a: int, b: int, variant: str
) -> ValueOrBounds:
    exacts = [s for s in statements if s.kind == "exact"]
    lowers = [s for s in statements if s.kind == "lower" and s.value > 0]
    uppers = [s for s in statements if s.kind == "upper"]
    common = dict(target=target, a=a, b=b, variant=variant)
    if exacts:
        values = {s.value for s in exacts}
        if len(values) != 1:
            raise RuntimeError(
                f"registry inconsistency for {target.name} at ({a},{b},{variant}): "
                f"{sorted(values)}"
            )
        v = exacts[0].value
        bad_lo = [s for s in lowers if s.value > v]
        bad_hi = [s for s in uppers if s.value < v]
        if bad_lo or bad_hi:
            raise RuntimeError(
                f"registry inconsistency for {target.name} at ({a},{b},{variant}): "
                f"exact {v} vs {bad_lo + bad_hi}"
            )
        cites = tuple(dict.fromkeys(s.citation for s in statements))
        wit = next((s for s in exacts if s.witness is not None), None)
        return ValueOrBounds(
            "exact",
            v,
            v,
            cites,
            witness=wit.witness if wit else None,
            witness_pad=wit.pad_to if wit else None,
            **common,
        )
    if not lowers and not uppers:
        return ValueOrBounds("unknown", None, None, (), **common)
    best_lo = max(lowers, key=lambda s: s.value) if lowers else None
    lo = best_lo.value if best_lo else 0
    lo_cite = (best_lo.citation,) if best_lo else ("trivial",)
    best_hi = min(uppers, key=lambda s: s.value) if uppers else None
    hi = best_hi.value if best_hi else a * b
    hi_cite = (best_hi.citation,) if best_hi else ("host-size",)
    if lo > hi:
        raise RuntimeError(
            f"registry inconsistency for {target.name} at ({a},{b},{variant}): "
            f"lower {lo} exceeds upper {hi}"
        )
    tag = "exact" if lo == hi else "range"
    return ValueOrBounds(
        tag,
        lo,
        hi,
        tuple(dict.fromkeys(lo_cite + hi_cite)),
        witness=best_lo.witness if best_lo else None,
        witness_pad=best_lo.pad_to if best_lo else None,
        **common,
    )


def lookup(target: Target, a: int, b: int, variant: str = "b") -> ValueOrBounds:
    """Tightest supported statement for the target on host K_{a,b}."""
    if variant not in ("b", "bc"):
        raise ValueError(f"variant must be 'b' or 'bc', got {variant!r}")
    if a > b:
        a, b = b, a
    if isinstance(target, TreeFamily):
        if not (target.k <= a and target.l <= b):
            return ValueOrBounds(
                "infeasible", None, None, ("host-fit",), target, a, b, variant,
                notes=f"part sizes ({target.k},{target.l}) exceed host ({a},{b})",
            )
        statements = _family_statements(target, a, b, variant)
        if variant == "bc":
            statements += [
                Statement("upper", s.value, s.citation)
                for s in _family_statements(target, a, b, "b")
                if s.kind in ("exact", "upper")
            ]
    else:
        if variant == "bc" and not exbc_defined(target):
            raise ValueError(
                f"the connected-spanning value is undefined for {target.name}"
            )
        if not fits_host(target, a, b):
            return ValueOrBounds(
                "infeasible", None, None, ("host-fit",), target, a, b, variant,
                notes=f"part sizes ({target.p},{target.q}) exceed host ({a},{b})",
            )
        statements = _pattern_statements(target, a, b, variant)
        if variant == "bc":
            # connected spanning hosts are a subset: unrestricted values cap
            for s in _pattern_statements(target, a, b, "b"):
                if s.kind in ("exact", "upper"):
                    statements.append(Statement("upper", s.value, s.citation))
        elif exbc_defined(target):
            # any connected-spanning witness is also an unrestricted witness
            for s in _pattern_statements(target, a, b, "bc"):
                if s.kind in ("exact", "lower"):
                    statements.append(
                        Statement("lower", s.value, s.citation, s.witness, s.pad_to)
                    )
    return _combine(statements, target, a, b, variant)


def witness_graph(res: ValueOrBounds) -> BipartiteGraph | None:
    """Build and re-verify the witness attached to a lookup result.

    Returns None when no witness is attached or verification fails (wrong
    edge count, not target-free, or not connected for the bc variant)."""
    if res.witness is None or res.target is None or res.lo is None:
        return None
    try:
        g = build_construction(res.witness)
    except ValueError:
        return None
    if (g.a, g.b) != (res.a, res.b):
        if g.a <= res.a and g.b <= res.b:
            g = pad(g, res.a, res.b)
        elif g.b <= res.a and g.a <= res.b:
            g = pad(g.transpose(), res.a, res.b)
        else:
            return None
    if g.edge_count != res.lo:
        return None
    if not is_family_free(g, res.target):
        return None
    if res.variant == "bc" and not is_connected(g):
        return None
    return g


def generic_bounds(
    n: int, ex_n: int | None = None, ex_2n: int | None = None
) -> ValueOrBounds:
    """Bounds on the balanced bipartite value from classical values.

    The classical value on n vertices is a strict lower bound, the one on
    2n vertices an upper bound, and a balanced cut recovers at least an
    n/(2n-1) fraction of any classical extremal graph's edges."""
    lowers, uppers, cites = [], [], []
    if ex_n is not None:
        lowers.append(ex_n + 1)
        cites.append("classical-sandwich")
    if ex_2n is not None:
        uppers.append(ex_2n)
        lowers.append(math.ceil(ex_2n * n / (2 * n - 1)))
        cites.append("balanced-cut-transfer")
    if not lowers and not uppers:
        return ValueOrBounds("unknown", None, None, ())
    lo = max(lowers) if lowers else 0
    hi = min(uppers) if uppers else None
    tag = "range"
    if hi is not None and lo == hi:
        tag = "exact"
    return ValueOrBounds(tag, lo, hi, tuple(cites), None, n, n, "b")
