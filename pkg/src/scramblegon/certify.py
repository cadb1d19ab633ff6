"""Closed-form lower bounds for Cartesian products, a certifier that proves
exact product gonality whenever a scramble lower bound meets a gonality upper
bound, and the cone-based reduction recovering the independence number from
gonality.

Each certifying statement has a descriptive id; the certifier tries the
statements in a fixed, documented order and both factor orientations, so the
emitted certificate is deterministic.  All applicable statements certify the
same number, so the order only affects provenance.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from . import divisors as dv
from . import invariants as inv
from . import multigraph as mg
from .scrambles import BoundReport


class HypothesisError(ValueError):
    """A bound formula was asked about a pair violating its hypotheses."""


@dataclass
class HypothesisCheck:
    description: str
    value: str
    passed: bool


@dataclass
class Certificate:
    statement: str                    # statement id, or "open"
    hypotheses: list
    value: object                     # certified number, or None when open
    bounds: object = None             # BoundReport when open
    orientation: str = ""             # which factor played G in the statement

    @property
    def certified(self):
        return self.value is not None


def _require(checks, ok):
    if not ok:
        failed = [c.description for c in checks if not c.passed]
        raise HypothesisError("hypothesis failure: " + "; ".join(failed))


def thm41_lower(g, h, k):
    """sn(G [] H) >= min(k|V(H)|, |V(G)|lam(H), (|V(G)|-2k+2)lam(H)+2lam(G))
    for kappa(G) >= k >= 1 and |V(G)| >= 2k-1, both factors connected."""
    checks = []
    checks.append(HypothesisCheck("G connected", str(inv.is_connected(g)), inv.is_connected(g)))
    checks.append(HypothesisCheck("H connected", str(inv.is_connected(h)), inv.is_connected(h)))
    checks.append(HypothesisCheck("k >= 1", str(k), k >= 1))
    kappa = inv.vertex_connectivity(g)
    checks.append(HypothesisCheck("kappa(G) >= k", "%d >= %d" % (kappa, k), kappa >= k))
    checks.append(HypothesisCheck("|V(G)| >= 2k-1", "%d >= %d" % (g.n, 2 * k - 1), g.n >= 2 * k - 1))
    _require(checks, all(c.passed for c in checks))
    lam_g, lam_h = inv.edge_connectivity(g), inv.edge_connectivity(h)
    return min(k * h.n, g.n * lam_h, (g.n - 2 * k + 2) * lam_h + 2 * lam_g)


def cor42_lower(g, h):
    """sn(G [] H) >= max(min(|V(H)|, |V(G)|lam(H)), min(|V(G)|, |V(H)|lam(G)))."""
    if g.n < 2 or h.n < 2:
        raise HypothesisError("both factors need at least 2 vertices")
    if not (inv.is_connected(g) and inv.is_connected(h)):
        raise HypothesisError("both factors must be connected")
    lam_g, lam_h = inv.edge_connectivity(g), inv.edge_connectivity(h)
    return max(min(h.n, g.n * lam_h), min(g.n, h.n * lam_g))


def prop43_lower(g, h):
    """sn(G [] H) >= min(2|V(H)|, |V(G)|lam(H), (|V(G)|-2)lam(H)+2delta(G))
    for kappa(G) >= 2."""
    if not (inv.is_connected(g) and inv.is_connected(h)):
        raise HypothesisError("both factors must be connected")
    kappa = inv.vertex_connectivity(g)
    if kappa < 2:
        raise HypothesisError("need kappa(G) >= 2, got %d" % kappa)
    lam_h = inv.edge_connectivity(h)
    return min(2 * h.n, g.n * lam_h, (g.n - 2) * lam_h + 2 * inv.min_degree(g))


def product_gon_upper(g, h, gon_g=None, gon_h=None, budget=12):
    """gon(G [] H) <= min(|V(G)| gon(H), |V(H)| gon(G)).

    Factor gonalities are computed exactly up to the vertex budget; beyond it
    the caller must supply known values, and if neither side is available the
    call fails rather than guessing.
    """
    gon_g = _factor_gon(g, gon_g, budget)
    gon_h = _factor_gon(h, gon_h, budget)
    terms = []
    if gon_h is not None:
        terms.append(g.n * gon_h)
    if gon_g is not None:
        terms.append(h.n * gon_g)
    if not terms:
        raise HypothesisError("factor gonalities unavailable within budget and not supplied")
    return min(terms)


def _factor_gon(g, supplied, budget):
    if supplied is not None:
        return supplied
    if g.n <= budget:
        return dv.gonality(g)[0]
    return None


def _is_tree(g):
    return g.is_simple() and inv.is_connected(g) and g.edge_count() == g.n - 1


def _is_complete_simple(g):
    return g.n >= 2 and bool((g.mult == mg.complete(g.n).mult).all())


def _complete_bipartite_parts(g):
    """(m, n) with m <= n when g is a complete bipartite simple graph, else None."""
    if not g.is_simple() or g.n < 2 or not inv.is_connected(g):
        return None
    color = {0: 0}
    stack = [0]
    while stack:
        v = stack.pop()
        for u in g.neighbors(v):
            if u not in color:
                color[u] = 1 - color[v]
                stack.append(u)
            elif color[u] == color[v]:
                return None
    parts = [sorted(v for v in color if color[v] == c) for c in (0, 1)]
    for u in parts[0]:
        for v in parts[1]:
            if g.mult[u, v] != 1:
                return None
    sizes = sorted((len(parts[0]), len(parts[1])))
    return (sizes[0], sizes[1])


def _is_doubled_pair(g):
    """The 2-vertex doubled edge (the multigraph 2-cycle)."""
    return g.n == 2 and int(g.mult[0, 1]) == 2


@dataclass
class _FactorStats:
    graph: object
    n: int
    lam: int
    kappa: int
    delta: int
    gon: object  # int or None when over budget and not supplied
    tree: bool


def _stats(g, gon, budget):
    return _FactorStats(graph=g, n=g.n, lam=inv.edge_connectivity(g),
                        kappa=inv.vertex_connectivity(g), delta=inv.min_degree(g),
                        gon=_factor_gon(g, gon, budget), tree=_is_tree(g))


def _check(checks, description, value, passed):
    checks.append(HypothesisCheck(description, value, bool(passed)))
    return bool(passed)


# each statement: (id, function(a: _FactorStats, b: _FactorStats) -> (value, checks) or None)

def _stmt_tree_factor(a, b):
    # G a tree, |V(H)|/lam(H) <= |V(G)|  =>  value |V(H)|
    checks = []
    ok = _check(checks, "G is a tree", str(a.tree), a.tree)
    ok &= _check(checks, "|V(H)|/lam(H) <= |V(G)|",
                 "%d/%d <= %d" % (b.n, b.lam, a.n),
                 b.lam > 0 and Fraction(b.n, b.lam) <= a.n)
    return (b.n if ok else None), checks


def _stmt_tight_factor(a, b):
    # gon(H) = lam(H), |V(G)| <= |V(H)|/lam(H)  =>  value |V(G)| lam(H)
    checks = []
    ok = _check(checks, "gon(H) known", str(b.gon), b.gon is not None)
    if ok:
        ok &= _check(checks, "gon(H) = lam(H)", "%s = %d" % (b.gon, b.lam), b.gon == b.lam)
    ok &= _check(checks, "|V(G)| <= |V(H)|/lam(H)",
                 "%d <= %d/%d" % (a.n, b.n, b.lam),
                 b.lam > 0 and a.n <= Fraction(b.n, b.lam))
    return (a.n * b.lam if ok else None), checks


def _stmt_tree_times_tight(a, b):
    # G a tree, gon(H) = lam(H) = k  =>  value min(|V(H)|, k |V(G)|)
    checks = []
    ok = _check(checks, "G is a tree", str(a.tree), a.tree)
    ok &= _check(checks, "gon(H) known", str(b.gon), b.gon is not None)
    if ok:
        ok &= _check(checks, "gon(H) = lam(H)", "%s = %d" % (b.gon, b.lam), b.gon == b.lam)
    return (min(b.n, b.lam * a.n) if ok else None), checks


def _stmt_complete_bipartite_factor(a, b):
    # H = K_{m,n}, m <= n, |V(G)| <= (m+n)/m  =>  value m |V(G)|
    checks = []
    parts = _complete_bipartite_parts(b.graph)
    ok = _check(checks, "H is complete bipartite", str(parts), parts is not None)
    if not ok:
        return None, checks
    m, n = parts
    ok &= _check(checks, "|V(G)| <= (m+n)/m",
                 "%d <= (%d+%d)/%d" % (a.n, m, n, m),
                 a.n <= Fraction(m + n, m))
    return (m * a.n if ok else None), checks


def _stmt_rook(a, b):
    # G = K_m, H = K_n simple complete, m <= min(n, 5)  =>  value (m-1) n
    checks = []
    ok = _check(checks, "G is complete simple", str(a.n), _is_complete_simple(a.graph))
    ok &= _check(checks, "H is complete simple", str(b.n), _is_complete_simple(b.graph))
    if ok:
        ok &= _check(checks, "|V(G)| <= min(|V(H)|, 5)",
                     "%d <= min(%d, 5)" % (a.n, b.n), a.n <= min(b.n, 5))
    return ((a.n - 1) * b.n if ok else None), checks


def _stmt_biconnected_gon2(a, b):
    # kappa(G) >= 2, gon(G) = 2, |V(H)|/lam(H) <= |V(G)|/2,
    # |V(H)| <= |V(G)| lam(H)/2 + delta(G) - lam(H)  =>  value 2 |V(H)|
    checks = []
    ok = _check(checks, "kappa(G) >= 2", str(a.kappa), a.kappa >= 2)
    ok &= _check(checks, "gon(G) known", str(a.gon), a.gon is not None)
    if ok:
        ok &= _check(checks, "gon(G) = 2", str(a.gon), a.gon == 2)
    ok &= _check(checks, "|V(H)|/lam(H) <= |V(G)|/2",
                 "%d/%d <= %d/2" % (b.n, b.lam, a.n),
                 b.lam > 0 and Fraction(b.n, b.lam) <= Fraction(a.n, 2))
    ok &= _check(checks, "|V(H)| <= |V(G)|lam(H)/2 + delta(G) - lam(H)",
                 "%d <= %d*%d/2 + %d - %d" % (b.n, a.n, b.lam, a.delta, b.lam),
                 b.n <= Fraction(a.n * b.lam, 2) + a.delta - b.lam)
    return (2 * b.n if ok else None), checks


def _stmt_biconnected_tight(a, b):
    # kappa(G) >= 2, gon(H) = lam(H), |V(G)| <= 2|V(H)|/lam(H),
    # lam(H) <= delta(G)  =>  value |V(G)| lam(H)
    checks = []
    ok = _check(checks, "kappa(G) >= 2", str(a.kappa), a.kappa >= 2)
    ok &= _check(checks, "gon(H) known", str(b.gon), b.gon is not None)
    if ok:
        ok &= _check(checks, "gon(H) = lam(H)", "%s = %d" % (b.gon, b.lam), b.gon == b.lam)
    ok &= _check(checks, "|V(G)| <= 2|V(H)|/lam(H)",
                 "%d <= 2*%d/%d" % (a.n, b.n, b.lam),
                 b.lam > 0 and a.n <= Fraction(2 * b.n, b.lam))
    ok &= _check(checks, "lam(H) <= delta(G)", "%d <= %d" % (b.lam, a.delta), b.lam <= a.delta)
    return (a.n * b.lam if ok else None), checks


def _stmt_highconn_gonk(a, b):
    # k = gon(G), kappa(G) >= k >= 3? (any k >= 1 is sound), |V(G)| >= 2k-1,
    # lam(G) >= (k-1) lam(H), k|V(H)| <= |V(G)| lam(H)  =>  value k |V(H)|
    checks = []
    ok = _check(checks, "gon(G) known", str(a.gon), a.gon is not None)
    if not ok:
        return None, checks
    k = a.gon
    ok &= _check(checks, "kappa(G) >= gon(G)", "%d >= %d" % (a.kappa, k), a.kappa >= k)
    ok &= _check(checks, "|V(G)| >= 2 gon(G) - 1", "%d >= %d" % (a.n, 2 * k - 1), a.n >= 2 * k - 1)
    ok &= _check(checks, "lam(G) >= (gon(G)-1) lam(H)",
                 "%d >= %d" % (a.lam, (k - 1) * b.lam), a.lam >= (k - 1) * b.lam)
    ok &= _check(checks, "gon(G)|V(H)| <= |V(G)| lam(H)",
                 "%d <= %d" % (k * b.n, a.n * b.lam), k * b.n <= a.n * b.lam)
    return (k * b.n if ok else None), checks


def _stmt_highconn_tight(a, b):
    # some k with kappa(G) >= k, |V(G)| >= 2k-1, lam(G) >= (k-1) lam(H),
    # |V(G)| lam(H) <= k |V(H)|, and gon(H) = lam(H)  =>  value |V(G)| lam(H)
    checks = []
    ok = _check(checks, "gon(H) known", str(b.gon), b.gon is not None)
    if ok:
        ok &= _check(checks, "gon(H) = lam(H)", "%s = %d" % (b.gon, b.lam), b.gon == b.lam)
    if not ok:
        return None, checks
    for k in range(1, a.kappa + 1):
        if (a.n >= 2 * k - 1 and a.lam >= (k - 1) * b.lam
                and a.n * b.lam <= k * b.n):
            _check(checks, "witness k with kappa(G) >= k, |V(G)| >= 2k-1, "
                           "lam(G) >= (k-1)lam(H), |V(G)|lam(H) <= k|V(H)|",
                   "k = %d" % k, True)
            return a.n * b.lam, checks
    _check(checks, "witness k with kappa(G) >= k, |V(G)| >= 2k-1, "
                   "lam(G) >= (k-1)lam(H), |V(G)|lam(H) <= k|V(H)|",
           "none in 1..%d" % a.kappa, False)
    return None, checks


def _stmt_uniform(a, b):
    # k = kappa(G) = lam(G) = gon(G) <= lam(H), |V(G)| >= 2k-1,
    # |V(H)| <= |V(G)| - 2k + 4  =>  value k |V(H)|
    checks = []
    ok = _check(checks, "gon(G) known", str(a.gon), a.gon is not None)
    if not ok:
        return None, checks
    k = a.gon
    ok &= _check(checks, "kappa(G) = lam(G) = gon(G)",
                 "%d = %d = %d" % (a.kappa, a.lam, k), a.kappa == a.lam == k)
    ok &= _check(checks, "gon(G) <= lam(H)", "%d <= %d" % (k, b.lam), k <= b.lam)
    ok &= _check(checks, "|V(G)| >= 2 gon(G) - 1", "%d >= %d" % (a.n, 2 * k - 1), a.n >= 2 * k - 1)
    ok &= _check(checks, "|V(H)| <= |V(G)| - 2 gon(G) + 4",
                 "%d <= %d" % (b.n, a.n - 2 * k + 4), b.n <= a.n - 2 * k + 4)
    return (k * b.n if ok else None), checks


def _stmt_doubled_edge_times_complete(a, b):
    # G the doubled edge, H = K_n (n >= 2)  =>  value 2n - 2
    checks = []
    ok = _check(checks, "G is the 2-vertex doubled edge", str(a.n), _is_doubled_pair(a.graph))
    ok &= _check(checks, "H is complete simple", str(b.n), _is_complete_simple(b.graph))
    return (2 * b.n - 2 if ok else None), checks


_STATEMENTS = [
    ("tree-factor", _stmt_tree_factor),
    ("tight-factor", _stmt_tight_factor),
    ("tree-times-tight", _stmt_tree_times_tight),
    ("complete-bipartite-factor", _stmt_complete_bipartite_factor),
    ("rook", _stmt_rook),
    ("biconnected-gon2", _stmt_biconnected_gon2),
    ("biconnected-tight", _stmt_biconnected_tight),
    ("high-connectivity-gonk", _stmt_highconn_gonk),
    ("high-connectivity-tight", _stmt_highconn_tight),
    ("uniform-connectivity", _stmt_uniform),
    ("doubled-edge-times-complete", _stmt_doubled_edge_times_complete),
]


def certify_product(g, h, gon_g=None, gon_h=None, budget=12):
    """Try the certifying statements in fixed order, each in both factor
    orientations; the first passing one proves sn = gon for the product.
    Otherwise emit open bounds from the closed-form lower formulas and the
    factor-gonality upper bound."""
    if not (inv.is_connected(g) and inv.is_connected(h)):
        raise HypothesisError("both factors must be connected")
    stats_g = _stats(g, gon_g, budget)
    stats_h = _stats(h, gon_h, budget)
    for statement_id, statement in _STATEMENTS:
        for a, b, orientation in ((stats_g, stats_h, "G,H"), (stats_h, stats_g, "H,G")):
            value, checks = statement(a, b)
            if value is not None:
                return Certificate(statement=statement_id, hypotheses=checks,
                                   value=value, orientation=orientation)
    return Certificate(statement="open", hypotheses=[], value=None,
                       bounds=_open_bounds(stats_g, stats_h, budget))


def _open_bounds(stats_g, stats_h, budget):
    lower, lsrc = 0, "trivial"
    for a, b, tag in ((stats_g, stats_h, "G,H"), (stats_h, stats_g, "H,G")):
        if a.n >= 2 and b.n >= 2:
            value = cor42_lower(a.graph, b.graph)
            if value > lower:
                lower, lsrc = value, "k=1 product scramble (%s)" % tag
        if a.kappa >= 2:
            value = prop43_lower(a.graph, b.graph)
            if value > lower:
                lower, lsrc = value, "k=2 product scramble (%s)" % tag
        for k in range(1, a.kappa + 1):
            if a.n < 2 * k - 1:
                break
            value = thm41_lower(a.graph, b.graph, k)
            if value > lower:
                lower, lsrc = value, "k=%d product scramble (%s)" % (k, tag)
    terms = []
    if stats_h.gon is not None:
        terms.append(stats_g.n * stats_h.gon)
    if stats_g.gon is not None:
        terms.append(stats_h.n * stats_g.gon)
    if terms:
        upper, usrc = min(terms), "factor gonality"
    else:
        upper, usrc = stats_g.n * stats_h.n, "vertex count"
    upper = max(upper, lower)
    return BoundReport("gon", lower, upper, lsrc, usrc)


def check_all_equal(g):
    """Certified sn = gon = n - alpha for dense simple graphs.

    Applies when delta(G) >= floor(n/2) + 1, with the edge scramble as the
    lower-bound witness; returns None when the hypothesis fails (it cannot be
    weakened: K_m [] K_2 has delta = n/2 but gon < n - alpha).
    """
    from . import scrambles as sc

    if not g.is_simple():
        raise HypothesisError("needs a simple graph")
    if not inv.is_connected(g):
        raise HypothesisError("needs a connected graph")
    n = g.n
    delta = inv.min_degree(g)
    if delta < n // 2 + 1:
        return None
    alpha = inv.independence_number(g)
    value = n - alpha
    scramble = sc.edge_scramble(g)
    order = sc.scramble_order(scramble).order
    if order != value:
        raise RuntimeError("soundness bug: edge scramble order %d != n - alpha = %d"
                           % (order, value))
    checks = [
        HypothesisCheck("G simple connected", "True", True),
        HypothesisCheck("delta(G) >= floor(n/2) + 1", "%d >= %d" % (delta, n // 2 + 1), True),
        HypothesisCheck("edge scramble order = n - alpha", "%d" % order, True),
    ]
    return Certificate(statement="dense-edge-scramble", hypotheses=checks, value=value)


def reduce_alpha(g, solver="gonality"):
    """Recover alpha(G) from the gonality of the cone over G.

    Builds the cone with l = |V(G)| apex vertices; its scramble number and
    gonality both equal 2m - alpha(G), so alpha = 2m - gon.  solver
    "gonality" runs the exact divisor search on the cone; solver
    "scramble-sandwich" closes the sandwich with the dense-graph edge
    scramble certificate instead.  The recovered alpha is cross-checked
    against the direct branch-and-bound value; a mismatch is a soundness bug
    and raises.
    """
    if not g.is_simple():
        raise HypothesisError("the reduction is defined for simple graphs")
    if not inv.is_connected(g):
        raise HypothesisError("the reduction needs a connected graph")
    m = g.n
    if m < 2:
        raise HypothesisError("need at least 2 vertices")
    cone_graph = mg.cone(g, m)
    if solver == "gonality":
        value = dv.gonality(cone_graph)[0]
    elif solver == "scramble-sandwich":
        cert = check_all_equal(cone_graph)
        if cert is None:  # pragma: no cover - the cone is always dense enough
            raise RuntimeError("cone unexpectedly fails the density hypothesis")
        value = cert.value
    else:
        raise ValueError("solver must be 'gonality' or 'scramble-sandwich'")
    alpha = 2 * m - value
    direct = inv.independence_number(g)
    if alpha != direct:
        raise RuntimeError("soundness bug: reduction recovered alpha = %d, "
                           "direct computation says %d" % (alpha, direct))
    return alpha, m, cone_graph
