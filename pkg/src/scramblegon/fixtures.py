"""Hand-transcribed benchmark graphs with their documented invariants.

Several of these graphs exist only as pictures in the source material, so
each transcription lists the adjacency choices made and is validated by
run_checks() against every numeric assertion known about it: if a check
fails, the transcription is wrong, not the algorithms.
"""

from . import divisors as dv
from . import invariants as inv
from . import mel
from . import multigraph as mg
from . import scrambles as sc


# -- cube -------------------------------------------------------------------
# Q3 with the outer 4-cycle s-t-u-v, the inner 4-cycle w-x-y-z, and spokes
# s-w, t-x, u-y, v-z.  The order-4 scramble pairs each outer vertex with its
# spoke partner.

CUBE_LABELS = {"s": 0, "t": 1, "u": 2, "v": 3, "w": 4, "x": 5, "y": 6, "z": 7}


def cube():
    return mg.from_edge_list(8, [
        (0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1),
        (4, 5, 1), (5, 6, 1), (6, 7, 1), (7, 4, 1),
        (0, 4, 1), (1, 5, 1), (2, 6, 1), (3, 7, 1),
    ])


def cube_scramble():
    return sc.Scramble(cube(), [{0, 4}, {1, 5}, {2, 6}, {3, 7}])


def cube_divisor():
    # one chip on each outer vertex s, t, u, v
    return dv.Divisor(cube(), [1, 1, 1, 1, 0, 0, 0, 0])


# -- wedge trio -------------------------------------------------------------
# The building block is the "slashed diamond": K4 minus one edge, drawn with
# the missing edge between the left and right tips.  Vertices: L, M1, M2, R
# with edges L-M1, L-M2, M1-M2, M1-R, M2-R.  The second graph wedges two
# diamonds tip to tip (R of the first = L of the second); the third wedges
# them middle to middle (the shared vertex s is a middle vertex of both).

def slashed_diamond():
    return mg.from_edge_list(4, [(0, 1, 1), (0, 2, 1), (1, 2, 1), (1, 3, 1), (2, 3, 1)])


def wedge_tips():
    return mg.from_edge_list(7, [
        (0, 1, 1), (0, 2, 1), (1, 2, 1), (1, 3, 1), (2, 3, 1),
        (3, 4, 1), (3, 5, 1), (4, 5, 1), (4, 6, 1), (5, 6, 1),
    ])


WEDGE_MIDDLES_LABELS = {"L1": 0, "M1": 1, "s": 2, "R1": 3, "L2": 4, "M2": 5, "R2": 6}


def wedge_middles():
    return mg.from_edge_list(7, [
        (0, 1, 1), (0, 2, 1), (1, 2, 1), (1, 3, 1), (2, 3, 1),
        (4, 5, 1), (4, 2, 1), (5, 2, 1), (5, 6, 1), (2, 6, 1),
    ])


def wedge_middles_scramble():
    # eggs: the left pair {L1, M1}, the shared middle {s}, the right pair {L2, M2}
    return sc.Scramble(wedge_middles(), [{0, 1}, {2}, {4, 5}])


def wedge_divisors():
    """Positive-rank divisors matching the documented gonalities 2, 2, 3."""
    return [
        dv.Divisor(slashed_diamond(), [2, 0, 0, 0]),
        dv.Divisor(wedge_tips(), [2, 0, 0, 0, 0, 0, 0]),
        dv.Divisor(wedge_middles(), [0, 0, 3, 0, 0, 0, 0]),
    ]


# -- immersion-minor pair ---------------------------------------------------
# H has vertices a..f with edges ab (doubled), ac, bc, cd (tripled), de, df,
# ef (doubled); this is forced by the cut sizes used in the written argument
# (|E({a,b},rest)| = |E({e,f},rest)| = 2 and |E({a,b,c},rest)| = 3, which
# drops to 2 after deleting one cd edge).  G is obtained from H by lifting
# the pair (ac, cd) to ad and then the pair (ad, de) to ae, leaving the
# 3-regular multigraph with edges ab (doubled), ae, bc, cd (doubled), df,
# ef (doubled).  G immerses into H yet sn(G) = 3 > 2 = sn(H).

IMMERSION_LABELS = {"a": 0, "b": 1, "c": 2, "d": 3, "e": 4, "f": 5}


def immersion_h():
    return mg.from_edge_list(6, [
        (0, 1, 2), (0, 2, 1), (1, 2, 1),
        (2, 3, 3),
        (3, 4, 1), (3, 5, 1), (4, 5, 2),
    ])


def immersion_g():
    return mg.from_edge_list(6, [
        (0, 1, 2), (0, 4, 1), (1, 2, 1),
        (2, 3, 2), (3, 5, 1), (4, 5, 2),
    ])


def immersion_scramble():
    return sc.Scramble(immersion_g(), [{0, 4}, {1, 2}, {3, 5}])


def immersion_h_prime():
    """H with one of the three c-d edges deleted; hyperelliptic via (a)+(b)."""
    return mg.from_edge_list(6, [
        (0, 1, 2), (0, 2, 1), (1, 2, 1),
        (2, 3, 2),
        (3, 4, 1), (3, 5, 1), (4, 5, 2),
    ])


def immersion_h_prime_divisor():
    return dv.Divisor(immersion_h_prime(), [1, 1, 0, 0, 0, 0])


# -- smoothing quartet ------------------------------------------------------
# T = K2 and H = {a, b, p, l1, l2} with edges ab (doubled), bp, p-l1, p-l2;
# gon(H) = 2 with witness 2(p).  The product T[]H has gonality 4; smoothing
# its four 2-valent leaf copies yields the 6-vertex graph J whose vertices
# u, v, w, x are the copies of a and b (valence 3 each) and y, z the copies
# of p, joined to each other by a tripled edge.

SMOOTHING_H_LABELS = {"a": 0, "b": 1, "p": 2, "l1": 3, "l2": 4}
J_LABELS = {"u": 0, "v": 3, "w": 1, "x": 4, "y": 2, "z": 5}


def smoothing_t():
    return mg.path(2)


def smoothing_h():
    return mg.from_edge_list(5, [(0, 1, 2), (1, 2, 1), (2, 3, 1), (2, 4, 1)])


def smoothing_product():
    return mg.cartesian_product(smoothing_t(), smoothing_h())


def smoothing_j():
    return mg.smooth_two_valent(smoothing_product())


def smoothing_product_divisor():
    # two chips on each copy of p
    product = smoothing_product()
    chips = [0] * product.n
    chips[0 * 5 + 2] = 2
    chips[1 * 5 + 2] = 2
    return dv.Divisor(product, chips)


# -- registry ---------------------------------------------------------------

GRAPHS = {
    "cube": cube,
    "slashed_diamond": slashed_diamond,
    "wedge_tips": wedge_tips,
    "wedge_middles": wedge_middles,
    "immersion_g": immersion_g,
    "immersion_h": immersion_h,
    "smoothing_t": smoothing_t,
    "smoothing_h": smoothing_h,
    "smoothing_product": smoothing_product,
    "smoothing_j": smoothing_j,
}


def write_fixtures(directory):
    """Write every fixture graph (and the two drawn scrambles) as text files."""
    import os

    os.makedirs(directory, exist_ok=True)
    written = []
    for name, build in GRAPHS.items():
        p = os.path.join(directory, name + ".mel")
        with open(p, "w") as fh:
            fh.write(mel.write_mel(build()))
        written.append(p)
    for name, scramble in (("cube", cube_scramble()),
                           ("wedge_middles", wedge_middles_scramble()),
                           ("immersion_g", immersion_scramble())):
        p = os.path.join(directory, name + ".scr")
        with open(p, "w") as fh:
            fh.write(mel.write_scramble(scramble))
        written.append(p)
    return written


def run_checks():
    """Validate every documented assertion; returns [(name, ok, detail)]."""
    results = []

    def check(name, actual, expected):
        results.append((name, actual == expected, "got %r, expected %r" % (actual, expected)))

    g = cube()
    check("cube is Q3", (g.n, g.edge_count()), (8, 12))
    check("cube scramble order", sc.scramble_order(cube_scramble()).order, 4)
    check("cube gonality", dv.gonality(g)[0], 4)
    d = cube_divisor()
    check("cube divisor rank 1", dv.rank(d, 1), 1)
    fired = dv.fire_set(d, [0, 1, 2, 3])
    check("cube fire outer four", fired.chips.tolist(), [0, 0, 0, 0, 1, 1, 1, 1])

    for name, graph, expected in (("slashed diamond", slashed_diamond(), 2),
                                  ("wedge tips", wedge_tips(), 2),
                                  ("wedge middles", wedge_middles(), 3)):
        check("%s gonality" % name, dv.gonality(graph)[0], expected)
    check("wedge middles scramble order", sc.scramble_order(wedge_middles_scramble()).order, 3)
    for divisor in wedge_divisors():
        check("wedge divisor positive rank on %d vertices" % divisor.graph.n,
              dv.has_positive_rank(divisor), True)

    check("immersion scramble order on G", sc.scramble_order(immersion_scramble()).order, 3)
    check("immersion sn(H)", sc.brute_force_sn(immersion_h()).value, 2)
    check("immersion gon(H')", dv.gonality(immersion_h_prime())[0], 2)
    check("immersion H' divisor positive rank",
          dv.has_positive_rank(immersion_h_prime_divisor()), True)
    sn_g = sc.brute_force_sn(immersion_g()).value
    results.append(("immersion sn(G) > sn(H)", sn_g >= 3, "sn(G) = %d" % sn_g))

    check("smoothing H gonality", dv.gonality(smoothing_h())[0], 2)
    check("smoothing product gonality", dv.gonality(smoothing_product())[0], 4)
    check("smoothing product divisor positive rank",
          dv.has_positive_rank(smoothing_product_divisor()), True)
    j = smoothing_j()
    check("J has 6 vertices", j.n, 6)
    check("J valence at u (a copy)", j.valence(J_LABELS["u"]), 3)
    check("J valence multiset", sorted(int(v) for v in j.valences()), [3, 3, 4, 4, 4, 4])
    check("J tripled edge between p copies", int(j.mult[J_LABELS["y"], J_LABELS["z"]]), 3)
    check("J boundary of {y,z}", inv.edge_boundary(j, [J_LABELS["y"], J_LABELS["z"]]), 2)
    sn_j = sc.brute_force_sn(j).value
    results.append(("sn(J) strictly below gon(T[]H) = 4", 2 <= sn_j < 4, "sn(J) = %d" % sn_j))
    return results
