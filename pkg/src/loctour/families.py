"""Parametric generators for every minimal non-completable family.

Families come in three groups.  The cut-vertex families are built directly
on their straight enumeration (vertex 0..n-1 is the enumeration order).
The cut-vertex-free families are built in complement space: we lay out the
complement of the underlying graph, complement it, then place the two arcs.
The arc-free families are complements of the forbidden proper-circular-arc
patterns, plus one sporadic graph that is minimal for completability
without being a minimal forbidden pattern.

Parameter tuples use plain ints; mode selectors are 0/1/2 and documented on
each builder.  Builders raise ValueError on out-of-range parameters; the
legal ranges were calibrated so that every generated instance passes
obstruction certification (the enumeration layer treats any failure as a
hard error).
"""
from __future__ import annotations

from typing import Callable, Iterator

from .graphs import PartialGraph, SimpleGraph, cycle_graph, disjoint_union, edge_key
from .interval import tucker_fig1_graph


def _direct(n: int, edges, arcs) -> PartialGraph:
    under = SimpleGraph(n, frozenset(tuple(e) for e in edges) | {edge_key(t, h) for t, h in arcs})
    return PartialGraph.orient(under, arcs)


def _from_complement(n: int, comp_edges, arcs) -> PartialGraph:
    comp = SimpleGraph(n, frozenset(tuple(e) for e in comp_edges))
    return PartialGraph.orient(comp.complement(), arcs)


def _path_edges(lo: int, hi: int):
    return [(i, i + 1) for i in range(lo, hi)]


# ---------------------------------------------------------------------------
# families with a dividing cut-vertex (three infinite classes)
# ---------------------------------------------------------------------------


def _div_i(m: int):
    # Path v0..v(m-1); arcs point inward from both ends.
    if m < 3:
        raise ValueError("div_i needs at least 3 vertices")
    return _direct(m, _path_edges(0, m - 1), [(0, 1), (m - 1, m - 2)]), "div(i)"


def _div_ii(m: int):
    # One end thickened: extra chord {1,3}; path continues from vertex 3.
    if m < 5:
        raise ValueError("div_ii needs at least 5 vertices")
    edges = [(0, 1), (1, 2), (2, 3), (1, 3)] + _path_edges(3, m - 1)
    return _direct(m, edges, [(1, 2), (m - 1, m - 2)]), "div(ii)"


def _div_iii(m: int):
    # Both ends thickened; mirror-symmetric.
    if m < 7:
        raise ValueError("div_iii needs at least 7 vertices")
    edges = (
        [(0, 1), (1, 2), (2, 3), (1, 3)]
        + _path_edges(3, m - 4)
        + [(m - 4, m - 3), (m - 3, m - 2), (m - 2, m - 1), (m - 4, m - 2)]
    )
    return _direct(m, edges, [(1, 2), (m - 2, m - 3)]), "div(iii)"


# ---------------------------------------------------------------------------
# families with only non-dividing cut-vertices (fixed graphs)
# ---------------------------------------------------------------------------

_TWOND = {
    "i": (5, [(0, 1), (3, 4), (1, 3)], [(1, 2), (3, 2)]),
    "ii": (6, [(0, 1), (4, 5), (2, 3), (1, 3), (2, 4), (1, 4)], [(1, 2), (4, 3)]),
}

_OND45 = {
    "4_i": (4, [(2, 3), (0, 1)], [(3, 1), (1, 2)]),
    "5_ii": (5, [(0, 1), (2, 3), (1, 3), (2, 4)], [(1, 2), (4, 3)]),
    "5_iii": (5, [(2, 3), (1, 2), (0, 1), (1, 3)], [(2, 4), (4, 3)]),
}

_OND6 = {
    "i": ([(0, 1), (1, 2), (3, 4), (1, 3), (2, 4), (3, 5)], [(2, 3), (5, 4)]),
    "ii": ([(0, 1), (1, 2), (3, 4), (1, 3), (3, 5), (2, 4), (1, 4)], [(2, 3), (5, 4)]),
    "iii": ([(0, 1), (1, 2), (3, 4), (4, 5), (2, 3), (1, 3)], [(2, 4), (5, 3)]),
    "iv": ([(0, 1), (1, 2), (3, 4), (2, 3), (4, 5), (1, 3), (1, 4)], [(2, 4), (5, 3)]),
    "v": ([(0, 1), (1, 2), (2, 3), (4, 5), (3, 4), (1, 3), (2, 5)], [(2, 4), (5, 3)]),
    "vi": ([(0, 1), (1, 2), (2, 3), (3, 4), (2, 4), (3, 5)], [(1, 3), (5, 4)]),
    "vii": ([(0, 1), (1, 2), (2, 3), (1, 3), (2, 4), (3, 5)], [(3, 4), (5, 4)]),
    "viii": ([(0, 1), (1, 2), (3, 4), (4, 5), (2, 3), (1, 3), (2, 4)], [(5, 4), (3, 5)]),
    "ix": ([(0, 1), (1, 2), (3, 4), (4, 5), (1, 3), (2, 4), (3, 5)], [(1, 4), (3, 2)]),
    "x": ([(0, 1), (1, 2), (3, 4), (4, 5), (1, 3), (3, 5)], [(2, 3), (4, 2)]),
    "xi": ([(0, 1), (1, 2), (3, 4), (4, 5), (1, 3), (3, 5), (1, 4)], [(2, 3), (4, 2)]),
}

_OND7 = {
    "i": (
        [(0, 1), (1, 2), (3, 4), (2, 3), (5, 6), (4, 5), (1, 3), (2, 4), (3, 5), (4, 6), (1, 4), (2, 5), (3, 6)],
        [(2, 3), (5, 4)],
    ),
    "ii": (
        [(0, 1), (1, 2), (3, 4), (2, 3), (5, 6), (4, 5), (1, 3), (2, 4), (3, 5), (4, 6), (2, 5), (3, 6)],
        [(3, 4), (6, 5)],
    ),
    "iii": (
        [(0, 1), (1, 2), (3, 4), (2, 3), (5, 6), (4, 5), (1, 3), (2, 4), (3, 6)],
        [(3, 5), (6, 4)],
    ),
    "iv": (
        [(0, 1), (1, 2), (2, 3), (5, 6), (4, 5), (3, 4), (1, 3), (2, 4), (3, 5), (4, 6), (1, 4), (2, 5)],
        [(2, 4), (5, 3)],
    ),
    "v": (
        [(0, 1), (1, 2), (3, 4), (2, 3), (5, 6), (4, 5), (1, 3), (2, 5), (4, 6), (1, 4), (1, 5)],
        [(2, 4), (5, 3)],
    ),
    "vi": (
        [(0, 1), (1, 2), (3, 4), (4, 5), (2, 3), (1, 3), (3, 5), (4, 6), (1, 4)],
        [(6, 5), (2, 4)],
    ),
    "vii": (
        [(0, 1), (1, 2), (4, 5), (5, 6), (1, 3), (2, 4), (3, 5), (4, 6), (1, 4)],
        [(2, 3), (4, 3)],
    ),
    "viii": (
        [(0, 1), (1, 2), (3, 4), (4, 5), (5, 6), (1, 3), (2, 4), (3, 5), (1, 4)],
        [(2, 3), (6, 4)],
    ),
}

_OND8 = {
    "i": (
        [(0, 1), (1, 2), (2, 3), (4, 5), (6, 7), (1, 3), (2, 4), (3, 5), (4, 6), (5, 7), (1, 4), (2, 5), (3, 6), (4, 7)],
        [(3, 4), (6, 5)],
    ),
    "ii": (
        [(0, 1), (1, 2), (3, 4), (2, 3), (4, 5), (5, 6), (6, 7), (1, 3), (4, 6), (5, 7), (1, 4), (2, 5), (3, 6), (1, 5)],
        [(2, 4), (5, 3)],
    ),
}


def _fixed_direct(table, key, tag_prefix):
    def build():
        entry = table[key]
        if len(entry) == 3:
            n, edges, arcs = entry
        else:
            edges, arcs = entry
            n = max(max(e) for e in list(edges) + list(arcs)) + 1
        return _direct(n, edges, arcs), f"{tag_prefix}({key})"

    return build


# ---------------------------------------------------------------------------
# complement is two disjoint paths
# ---------------------------------------------------------------------------


def _disconnected(k: int, ell: int):
    if k < 1 or ell < 1 or k + ell < 3:
        raise ValueError("disconnected needs k, ell >= 1 and k + ell >= 3")
    n = k + ell
    comp = _path_edges(0, k - 1) + [(k + i, k + i + 1) for i in range(ell - 1)]
    p1, pk, q1, ql = 0, k - 1, k, n - 1
    if (k + ell) % 2 == 0:
        arcs = [(p1, q1), (ql, pk)]
        tag = "disc(i)"
    else:
        arcs = [(p1, q1), (pk, ql)]
        tag = "disc(ii)"
    return _from_complement(n, comp, arcs), tag


# ---------------------------------------------------------------------------
# complement is a caterpillar tree
# ---------------------------------------------------------------------------


def _tree_i(k: int):
    # Spine p0..p(k-1); leaves u at p2 and v at p(k-3).
    if k < 5:
        raise ValueError("tree_i needs k >= 5")
    u, v = k, k + 1
    comp = _path_edges(0, k - 1) + [(2, u), (k - 3, v)]
    arcs = [(1, u), (k - 2, v)]
    return _from_complement(k + 2, comp, arcs), "tree(i)"


def _tree_i_shared():
    # Collapse of the double-leaf case on the 5-spine: both arcs end on the
    # single middle leaf.
    comp = _path_edges(0, 4) + [(2, 5)]
    return _from_complement(6, comp, [(1, 5), (3, 5)]), "tree(i.s)"


def _tree_ii(k: int, j: int, vmode: int):
    # Leaf u at p2; second arc endpoint v is p(j-1) (vmode 0), a leaf at
    # p(j-1) (vmode 1), or u itself (vmode 2, j fixed at 3); arc direction
    # set by the parity of k + j.
    if k < 4:
        raise ValueError("tree_ii needs k >= 4")
    if vmode not in (0, 1, 2):
        raise ValueError("tree_ii vmode must be 0, 1, or 2")
    if vmode == 1 and not 3 <= j <= k - 2:
        raise ValueError("tree_ii leaf attachment needs 3 <= j <= k - 2")
    if vmode == 0 and not 1 <= j <= k - 2:
        raise ValueError("tree_ii path endpoint needs 1 <= j <= k - 2")
    if vmode == 2 and (j != 3 or k < 5):
        raise ValueError("tree_ii shared leaf needs j = 3 and k >= 5")
    u = k
    comp = _path_edges(0, k - 1) + [(2, u)]
    if vmode == 1:
        v = k + 1
        comp.append((j - 1, v))
        n = k + 2
        cond = (k + j) % 2 == 0
        tag = "tree(ii.a)"
    elif vmode == 2:
        v = u
        n = k + 1
        cond = (k + j) % 2 == 0
        tag = "tree(ii.s)"
    else:
        v = j - 1
        n = k + 1
        cond = (k + j) % 2 == 1
        tag = "tree(ii.b)"
    second = (v, k - 1) if cond else (k - 1, v)
    return _from_complement(n, comp, [(1, u), second]), tag


def _tree_iii(k: int, ell: int, vmode: int):
    # First arc spans the spine ends; u is a leaf at p(ell-1), v is p(ell)
    # (vmode 0) or a leaf at p(ell) (vmode 1).
    if k < 4:
        raise ValueError("tree_iii needs k >= 4")
    if not 2 <= ell <= k - 2:
        raise ValueError("tree_iii needs 2 <= ell <= k - 2")
    if vmode not in (0, 1):
        raise ValueError("tree_iii vmode must be 0 or 1")
    u = k
    comp = _path_edges(0, k - 1) + [(ell - 1, u)]
    if vmode == 1:
        v = k + 1
        comp.append((ell, v))
        n = k + 2
        cond = k % 2 == 0
        tag = "tree(iii.a)"
    else:
        v = ell
        n = k + 1
        cond = k % 2 == 1
        tag = "tree(iii.b)"
    second = (v, u) if cond else (u, v)
    return _from_complement(n, comp, [(0, k - 1), second]), tag


def _tree_iv(k: int, ell: int, j: int, umode: int, vmode: int):
    # Arcs leave both spine ends: p0 to u (p(ell-1) or leaf at it), p(k-1)
    # to v (p(j-1), a leaf at it, or the same leaf as u when vmode == 2).
    if k < 4:
        raise ValueError("tree_iv needs k >= 4")
    if not 3 <= ell <= k - 1:
        raise ValueError("tree_iv needs 3 <= ell <= k - 1")
    if not max(2, ell - 1) <= j <= k - 2:
        raise ValueError("tree_iv needs max(2, ell - 1) <= j <= k - 2")
    if umode not in (0, 1) or vmode not in (0, 1, 2):
        raise ValueError("tree_iv modes: umode 0/1, vmode 0/1/2")
    if vmode == 2 and (umode != 1 or j != ell):
        raise ValueError("shared leaf needs umode = 1 and j = ell")
    comp = _path_edges(0, k - 1)
    nxt = k
    if umode == 1:
        u = nxt
        comp.append((ell - 1, u))
        nxt += 1
    else:
        u = ell - 1
    if vmode == 1:
        v = nxt
        comp.append((j - 1, v))
        nxt += 1
    elif vmode == 2:
        v = u
    else:
        v = j - 1
    u_in_path, v_in_path = umode == 0, vmode == 0
    s = k + ell + j
    # Second arc points at the spine end exactly when the two witness paths
    # have the same parity; the class computation pins this down.
    same_parity = (s % 2 == 1) == (u_in_path == v_in_path)
    second = (k - 1, v) if same_parity else (v, k - 1)
    tags = {(0, 0): "tree(iv.cd)", (0, 1): "tree(iv.x)", (1, 0): "tree(iv.ef)", (1, 1): "tree(iv.ab)", (1, 2): "tree(iv.s)"}
    return _from_complement(nxt, comp, [(0, u), second]), tags[(umode, vmode)]


# ---------------------------------------------------------------------------
# complement contains a triangle but no induced 4-cycle
# ---------------------------------------------------------------------------


def _onlyc3_i():
    comp = [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)]
    return _from_complement(6, comp, [(3, 4), (5, 0)]), "onlyc3(i)"


def _onlyc3_ii():
    comp = [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (1, 5), (2, 6)]
    return _from_complement(7, comp, [(3, 5), (4, 6)]), "onlyc3(ii)"


# ---------------------------------------------------------------------------
# complement contains a unique induced 4-cycle but no triangle
# ---------------------------------------------------------------------------


def _c4_core(k: int):
    # Spine p0..p(k-1); v1 = k adjacent to p1, v2 = k+1 adjacent to v1, p2.
    comp = _path_edges(0, k - 1) + [(1, k), (k, k + 1), (2, k + 1)]
    return comp


def _c4_i(k: int):
    # 4-cycle v1 v2 v3 p1 hanging off the second spine vertex.
    if k < 3:
        raise ValueError("c4_i needs k >= 3")
    v1, v2, v3 = k, k + 1, k + 2
    comp = _path_edges(0, k - 1) + [(v1, v2), (v2, v3), (v3, 1), (1, v1)]
    if k % 2 == 0:
        arcs = [(0, v1), (k - 1, v3)]
        tag = "c4(i)"
    else:
        arcs = [(0, v1), (v3, k - 1)]
        tag = "c4(ii)"
    return _from_complement(k + 3, comp, arcs), tag


def _c4_iii(k: int, i: int):
    # v1 = k adjacent to p(i-2) and p(i): the 4-cycle straddles the spine.
    if k < 5:
        raise ValueError("c4_iii needs k >= 5")
    if not 3 <= i <= k - 2:
        raise ValueError("c4_iii needs 3 <= i <= k - 2")
    comp = _path_edges(0, k - 1) + [(i - 2, k), (i, k)]
    if k % 2 == 0:
        arcs = [(0, k), (i - 1, k - 1)]
        tag = "c4(iii)"
    else:
        arcs = [(0, k), (k - 1, i - 1)]
        tag = "c4(iv)"
    return _from_complement(k + 1, comp, arcs), tag


def _c4_v(k: int, i: int):
    # v1 = k on p(i-1), v2 = k+1 on v1 and p(i); arcs reach v1 and v2.
    if k < 4:
        raise ValueError("c4_v needs k >= 4")
    if not 2 <= i <= k - 2:
        raise ValueError("c4_v needs 2 <= i <= k - 2")
    comp = _path_edges(0, k - 1) + [(i - 1, k), (k, k + 1), (i, k + 1)]
    if k % 2 == 0:
        arcs = [(0, k), (k - 1, k + 1)]
        tag = "c4(v)"
    else:
        arcs = [(0, k), (k + 1, k - 1)]
        tag = "c4(vi)"
    return _from_complement(k + 2, comp, arcs), tag


def _c4_vii(k: int, i: int):
    if k < 4:
        raise ValueError("c4_vii needs k >= 4")
    if not 2 <= i <= k - 2:
        raise ValueError("c4_vii needs 2 <= i <= k - 2")
    comp = _path_edges(0, k - 1) + [(i - 1, k), (k, k + 1), (i, k + 1)]
    if k % 2 == 0:
        arcs = [(0, k + 1), (k - 1, k)]
        tag = "c4(vii)"
    else:
        arcs = [(0, k + 1), (k, k - 1)]
        tag = "c4(viii)"
    return _from_complement(k + 2, comp, arcs), tag


def _c4_ix(k: int):
    # Cycle at the head of the spine; the second arc is balanced by a leaf
    # at p(k-3) when k > 4, and folds back onto v1 when k = 4.
    if k < 4:
        raise ValueError("c4_ix needs k >= 4")
    comp = _c4_core(k)
    if k == 4:
        arcs = [(0, k), (2, k)]
        return _from_complement(k + 2, comp, arcs), "c4(x)"
    x = k + 2
    comp.append((k - 3, x))
    arcs = [(0, k), (k - 2, x)]
    return _from_complement(k + 3, comp, arcs), "c4(ix)"


def _c4_double_leaf():
    # 4-cycle with leaves on two adjacent vertices; arcs across both
    # diagonals.  Exists only at this size.
    comp = [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (1, 5)]
    return _from_complement(6, comp, [(0, 2), (1, 3)]), "c4(xii)"


def _c4_diagonal_tail(m: int):
    # Leaf x at c1, path q1..qm at the adjacent cycle vertex c2; one arc on
    # the c1 diagonal, the other between the far cycle vertex and the path
    # end, direction by the parity of m.
    if m < 1:
        raise ValueError("c4_diagonal_tail needs m >= 1")
    c1, c2, c3, c4, x = 0, 1, 2, 3, 4
    q = list(range(5, 5 + m))
    comp = [(0, 1), (1, 2), (2, 3), (0, 3), (c1, x), (c2, q[0])] + [
        (q[i], q[i + 1]) for i in range(m - 1)
    ]
    second = (c4, q[-1]) if m % 2 == 1 else (q[-1], c4)
    return _from_complement(5 + m, comp, [(c1, c3), second]), "c4(xiii)"


def _c4_fork(a: int, m: int):
    # Path w1..wa at c1; leaf y plus path z1..zm both at c2.  One arc from
    # the far cycle vertex to y, the other joining the two path ends with
    # direction by the parity of a + m.
    if a < 1 or m < 1:
        raise ValueError("c4_fork needs a, m >= 1")
    c1, c2, c3, c4 = 0, 1, 2, 3
    w = list(range(4, 4 + a))
    y = 4 + a
    z = list(range(5 + a, 5 + a + m))
    comp = (
        [(0, 1), (1, 2), (2, 3), (0, 3), (c1, w[0]), (c2, y), (c2, z[0])]
        + [(w[i], w[i + 1]) for i in range(a - 1)]
        + [(z[i], z[i + 1]) for i in range(m - 1)]
    )
    second = (w[-1], z[-1]) if (a + m) % 2 == 0 else (z[-1], w[-1])
    return _from_complement(5 + a + m, comp, [(c3, y), second]), "c4(xiv)"


def _c4_fork_cross(m: int):
    # Leaf x at c1; leaf y plus path z1..zm at c2.  One arc from the cycle
    # vertex opposite c2 to x, the other between y and the path end.
    if m < 2:
        raise ValueError("c4_fork_cross needs m >= 2")
    c1, c2, c3, c4, x, y = 0, 1, 2, 3, 4, 5
    z = list(range(6, 6 + m))
    comp = [(0, 1), (1, 2), (2, 3), (0, 3), (c1, x), (c2, y), (c2, z[0])] + [
        (z[i], z[i + 1]) for i in range(m - 1)
    ]
    second = (y, z[-1]) if m % 2 == 1 else (z[-1], y)
    return _from_complement(6 + m, comp, [(c4, x), second]), "c4(xv)"


def _c4_stem_fork(t: int, m: int):
    # A stem s1..st grows from c1 and ends in a fork: leaf y and path
    # z1..zm; a lone leaf w sits on the adjacent cut c2.  One arc joins the
    # far cycle vertex to w, the other joins y to the fork-path end with
    # direction set by the parity of m.  Smallest member has 9 vertices.
    if t < 1 or m < 2:
        raise ValueError("c4_stem_fork needs t >= 1 and m >= 2")
    c1, c2, c3 = 0, 1, 2
    stem = list(range(4, 4 + t))
    y = 4 + t
    z = list(range(5 + t, 5 + t + m))
    w = 5 + t + m
    comp = (
        [(0, 1), (1, 2), (2, 3), (0, 3), (c2, w)]
        + [(a, b) for a, b in zip([c1] + stem, stem)]
        + [(stem[-1], y), (stem[-1], z[0])]
        + [(z[i], z[i + 1]) for i in range(m - 1)]
    )
    second = (y, z[-1]) if m % 2 == 1 else (z[-1], y)
    return _from_complement(6 + t + m, comp, [(c3, w), second]), "c4(xvi)"


def _c4_xi(k: int, xsel: int):
    # Second arc joins the spine end to v1 (xsel 0) or to p(xsel-1)
    # (2 <= xsel <= k-2); direction set by the parity of k plus the
    # complement distance from p0.  k = 3 collapses to a non-minimal graph.
    if k < 4:
        raise ValueError("c4_xi needs k >= 4")
    if xsel != 0 and not 2 <= xsel <= k - 2:
        raise ValueError("c4_xi selector must be 0 (v1) or 2..k-2 (spine)")
    comp = _c4_core(k)
    if xsel == 0:
        x, dist = k, 2
    else:
        x, dist = xsel - 1, xsel - 1
    second = (x, k - 1) if (k + dist) % 2 == 0 else (k - 1, x)
    return _from_complement(k + 2, comp, [(0, k), second]), "c4(xi)"


# ---------------------------------------------------------------------------
# complement contains two induced 4-cycles but no triangle
# ---------------------------------------------------------------------------


def _twoc4_i(k: int):
    # Two 4-cycles joined through a cut path p0..p(k-1); pendant leaves x, y.
    if k < 1:
        raise ValueError("twoc4_i needs k >= 1")
    v1, v2, v3, x = 0, 1, 2, 3
    p = list(range(4, 4 + k))
    v4, v5, v6, y = 4 + k, 5 + k, 6 + k, 7 + k
    comp = (
        [(v1, v2), (v2, v3), (v3, x), (v1, p[0]), (v3, p[0])]
        + [(p[i], p[i + 1]) for i in range(k - 1)]
        + [(p[-1], v4), (v4, v5), (v5, v6), (p[-1], v6), (v6, y)]
    )
    return _from_complement(8 + k, comp, [(v2, x), (v5, y)]), "twoc4(i)"


def _twoc4_ii():
    comp = [(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5), (5, 2), (0, 6), (5, 7)]
    return _from_complement(8, comp, [(6, 1), (7, 4)]), "twoc4(ii)"


def _twoc4_iii():
    comp = [(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5), (5, 2)]
    return _from_complement(6, comp, [(0, 2), (3, 1)]), "twoc4(iii)"


def _twoc4_iv(k: int):
    # Complete bipartite {v2,v4} x {v1,p0,v5} with a pendant at v4 and a
    # spine p0..p(k-1); direction at the spine end set by the parity of k.
    if k < 2:
        raise ValueError("twoc4_iv needs k >= 2")
    v1, v2, v4, v5, u4 = 0, 1, 2, 3, 4
    p = list(range(5, 5 + k))
    comp = (
        [(v2, v1), (v2, p[0]), (v2, v5), (v4, v1), (v4, p[0]), (v4, v5), (v4, u4)]
        + [(p[i], p[i + 1]) for i in range(k - 1)]
    )
    if k % 2 == 0:
        arcs = [(u4, v5), (v1, p[-1])]
        tag = "twoc4(iv)"
    else:
        arcs = [(u4, v5), (p[-1], v1)]
        tag = "twoc4(v)"
    return _from_complement(5 + k, comp, arcs), tag


def _twoc4_vi():
    comp = [(1, 0), (1, 2), (1, 4), (3, 0), (3, 2), (3, 4), (3, 5), (2, 7), (0, 7), (2, 6)]
    return _from_complement(8, comp, [(5, 4), (6, 7)]), "twoc4(vi)"


def _twoc4_vii():
    comp = [(1, 0), (1, 2), (1, 4), (3, 0), (3, 2), (3, 4), (3, 5), (2, 6)]
    return _from_complement(7, comp, [(5, 4), (2, 0)]), "twoc4(vii)"


# ---------------------------------------------------------------------------
# complement contains a triangle and an induced 4-cycle
# ---------------------------------------------------------------------------

_C3C4_BASE = [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (4, 1)]


def _c3c4_i():
    comp = _C3C4_BASE + [(0, 5), (1, 6), (2, 7)]
    return _from_complement(8, comp, [(4, 6), (5, 7)]), "c3c4(i)"


def _c3c4_ii():
    comp = _C3C4_BASE + [(1, 5), (0, 6)]
    return _from_complement(7, comp, [(4, 5), (2, 6)]), "c3c4(ii)"


def _c3c4_iii():
    comp = _C3C4_BASE + [(1, 5), (2, 6)]
    return _from_complement(7, comp, [(4, 5), (6, 0)]), "c3c4(iii)"


# ---------------------------------------------------------------------------
# complement contains an induced 5-cycle
# ---------------------------------------------------------------------------

_C5_BASE = [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]


def _c5_i():
    comp = _C5_BASE + [(3, 5), (2, 6)]
    return _from_complement(7, comp, [(1, 6), (4, 5)]), "c5(i)"


def _c5_ii():
    comp = _C5_BASE + [(4, 5), (2, 6)]
    return _from_complement(7, comp, [(5, 3), (1, 6)]), "c5(ii)"


def _c5_iii():
    comp = _C5_BASE + [(3, 5), (2, 6), (4, 7)]
    return _from_complement(8, comp, [(5, 7), (1, 6)]), "c5(iii)"


def _c5_v():
    comp = _C5_BASE + [(2, 5), (2, 6)]
    return _from_complement(7, comp, [(1, 5), (3, 6)]), "c5(v)"


def _c5_vi():
    comp = _C5_BASE + [(0, 5), (2, 6)]
    return _from_complement(7, comp, [(1, 6), (5, 4)]), "c5(vi)"


# ---------------------------------------------------------------------------
# arc-free obstructions: complements of the forbidden patterns
# ---------------------------------------------------------------------------


def _noarc_even_cycle(k: int):
    if k < 3:
        raise ValueError("noarc_comp_even_cycle needs k >= 3")
    return PartialGraph.plain(cycle_graph(2 * k).complement()), "noarc(C2k)"


def _noarc_odd_cycle_plus_k1(k: int):
    if k < 1:
        raise ValueError("noarc_comp_odd_cycle_plus_k1 needs k >= 1")
    g = disjoint_union(cycle_graph(2 * k + 1), SimpleGraph(1)).complement()
    return PartialGraph.plain(g), "noarc(C2k+1+K1)"


def _noarc_fig1(index: int):
    return PartialGraph.plain(tucker_fig1_graph(index).complement()), f"noarc(fig1.{index})"


def _noarc_c4_ear_pendant():
    # The one connected graph that is vertex-minimally non-orientable
    # without being a minimal forbidden circular-arc pattern: a 4-cycle,
    # an ear on two consecutive cycle vertices, and a pendant on the ear.
    # Deleting the ear leaves the (orientable) disconnected pattern
    # 4-cycle-plus-isolated-vertex; exhaustive search shows no analogue
    # exists on longer cycles or the 6-vertex tent.
    edges = {(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (1, 4), (4, 5)}
    return PartialGraph.plain(SimpleGraph(6, frozenset(edges))), "noarc(c4-ear)"


# ---------------------------------------------------------------------------
# registry
# ---------------------------------------------------------------------------


def _fixed_params(n: int) -> Callable[[int], Iterator[tuple]]:
    def it(max_n: int) -> Iterator[tuple]:
        if n <= max_n:
            yield ()

    return it


def _range_params(n_of, lo: int) -> Callable[[int], Iterator[tuple]]:
    def it(max_n: int) -> Iterator[tuple]:
        m = lo
        while n_of(m) <= max_n:
            yield (m,)
            m += 1

    return it


def _tree_ii_params(max_n: int) -> Iterator[tuple]:
    for k in range(4, max_n):
        if k + 1 <= max_n:
            for j in range(1, k - 1):
                yield (k, j, 0)
            if k >= 5:
                yield (k, 3, 2)
        if k + 2 <= max_n:
            for j in range(3, k - 1):
                yield (k, j, 1)


def _tree_iii_params(max_n: int) -> Iterator[tuple]:
    for k in range(4, max_n):
        for ell in range(2, k - 1):
            if k + 1 <= max_n:
                yield (k, ell, 0)
            if k + 2 <= max_n:
                yield (k, ell, 1)


def _tree_iv_params(max_n: int) -> Iterator[tuple]:
    for k in range(4, max_n + 1):
        for ell in range(3, k):
            for j in range(max(2, ell - 1), k - 1):
                for umode in (0, 1):
                    for vmode in (0, 1, 2):
                        if vmode == 2 and (umode != 1 or j != ell):
                            continue
                        n = k + (umode == 1) + (vmode == 1)
                        if n <= max_n:
                            yield (k, ell, j, umode, vmode)


def _c4_iii_params(max_n: int) -> Iterator[tuple]:
    for k in range(5, max_n):
        if k + 1 <= max_n:
            for i in range(3, k - 1):
                yield (k, i)


def _c4_v_params(max_n: int) -> Iterator[tuple]:
    for k in range(4, max_n - 1):
        if k + 2 <= max_n:
            for i in range(2, k - 1):
                yield (k, i)


def _c4_ix_params(max_n: int) -> Iterator[tuple]:
    if 6 <= max_n:
        yield (4,)
    for k in range(5, max_n - 2):
        if k + 3 <= max_n:
            yield (k,)


def _c4_xi_params(max_n: int) -> Iterator[tuple]:
    for k in range(4, max_n - 1):
        if k + 2 > max_n:
            continue
        yield (k, 0)
        for m in range(2, k - 1):
            yield (k, m)


def _disconnected_params(max_n: int) -> Iterator[tuple]:
    for k in range(1, max_n // 2 + 1):
        for ell in range(max(k, 3 - k), max_n - k + 1):
            yield (k, ell)


def _c4_fork_params(max_n: int) -> Iterator[tuple]:
    for a in range(1, max_n - 5):
        for m in range(1, max_n - 4 - a):
            yield (a, m)


def _c4_stem_fork_params(max_n: int) -> Iterator[tuple]:
    for t in range(1, max_n - 7):
        for m in range(2, max_n - 5 - t):
            yield (t, m)


class Family:
    def __init__(self, name: str, builder, params_upto):
        self.name = name
        self.builder = builder
        self.params_upto = params_upto

    def build(self, params: tuple) -> tuple:
        return self.builder(*params)


def _registry() -> dict:
    fams: list[Family] = [
        Family("div_i", _div_i, _range_params(lambda m: m, 3)),
        Family("div_ii", _div_ii, _range_params(lambda m: m, 5)),
        Family("div_iii", _div_iii, _range_params(lambda m: m, 7)),
    ]
    for key, entry in _TWOND.items():
        fams.append(Family(f"twond_{key}", _fixed_direct(_TWOND, key, "twond"), _fixed_params(entry[0])))
    for key, entry in _OND45.items():
        fams.append(Family(f"ond{key}", _fixed_direct(_OND45, key, "ond"), _fixed_params(entry[0])))
    for key in _OND6:
        fams.append(Family(f"ond6_{key}", _fixed_direct(_OND6, key, "ond6"), _fixed_params(6)))
    for key in _OND7:
        fams.append(Family(f"ond7_{key}", _fixed_direct(_OND7, key, "ond7"), _fixed_params(7)))
    for key in _OND8:
        fams.append(Family(f"ond8_{key}", _fixed_direct(_OND8, key, "ond8"), _fixed_params(8)))
    fams += [
        Family("disconnected", _disconnected, _disconnected_params),
        Family("tree_i", _tree_i, _range_params(lambda k: k + 2, 5)),
        Family("tree_i_shared", _tree_i_shared, _fixed_params(6)),
        Family("tree_ii", _tree_ii, _tree_ii_params),
        Family("tree_iii", _tree_iii, _tree_iii_params),
        Family("tree_iv", _tree_iv, _tree_iv_params),
        Family("onlyc3_i", _onlyc3_i, _fixed_params(6)),
        Family("onlyc3_ii", _onlyc3_ii, _fixed_params(7)),
        Family("c4_i", _c4_i, _range_params(lambda k: k + 3, 3)),
        Family("c4_iii", _c4_iii, _c4_iii_params),
        Family("c4_v", _c4_v, _c4_v_params),
        Family("c4_vii", _c4_vii, _c4_v_params),
        Family("c4_ix", _c4_ix, _c4_ix_params),
        Family("c4_xi", _c4_xi, _c4_xi_params),
        Family("c4_xii", _c4_double_leaf, _fixed_params(6)),
        Family("c4_xiii", _c4_diagonal_tail, _range_params(lambda m: m + 5, 1)),
        Family("c4_xiv", _c4_fork, _c4_fork_params),
        Family("c4_xv", _c4_fork_cross, _range_params(lambda m: m + 6, 2)),
        Family("c4_xvi", _c4_stem_fork, _c4_stem_fork_params),
        Family("twoc4_i", _twoc4_i, _range_params(lambda k: k + 8, 1)),
        Family("twoc4_ii", _twoc4_ii, _fixed_params(8)),
        Family("twoc4_iii", _twoc4_iii, _fixed_params(6)),
        Family("twoc4_iv", _twoc4_iv, _range_params(lambda k: k + 5, 2)),
        Family("twoc4_vi", _twoc4_vi, _fixed_params(8)),
        Family("twoc4_vii", _twoc4_vii, _fixed_params(7)),
        Family("c3c4_i", _c3c4_i, _fixed_params(8)),
        Family("c3c4_ii", _c3c4_ii, _fixed_params(7)),
        Family("c3c4_iii", _c3c4_iii, _fixed_params(7)),
        # The shared-leaf collapse of the five-cycle case (both arcs ending
        # on one leaf) is omitted: it contains the 5-vertex two-path
        # obstruction, so it never certifies.
        Family("c5_i", _c5_i, _fixed_params(7)),
        Family("c5_ii", _c5_ii, _fixed_params(7)),
        Family("c5_iii", _c5_iii, _fixed_params(8)),
        Family("c5_v", _c5_v, _fixed_params(7)),
        Family("c5_vi", _c5_vi, _fixed_params(7)),
        Family("noarc_comp_even_cycle", _noarc_even_cycle, _range_params(lambda k: 2 * k, 3)),
        Family(
            "noarc_comp_odd_cycle_plus_k1",
            _noarc_odd_cycle_plus_k1,
            _range_params(lambda k: 2 * k + 2, 1),
        ),
        Family("noarc_tucker_fig1", _noarc_fig1, lambda max_n: ((i,) for i in range(1, 6) if tucker_fig1_graph(i).n <= max_n)),
        Family("noarc_c4_ear_pendant", _noarc_c4_ear_pendant, _fixed_params(6)),
    ]
    return {f.name: f for f in fams}


FAMILIES = _registry()


def family_names() -> tuple:
    return tuple(FAMILIES)


def generate_family(family: str, params: tuple) -> PartialGraph:
    """Instantiate one family member; raises ValueError on illegal params."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    pog, _tag = FAMILIES[family].build(tuple(params))
    return pog


def generate_family_tagged(family: str, params: tuple) -> tuple:
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    return FAMILIES[family].build(tuple(params))


def family_params_upto(family: str, max_n: int) -> Iterator[tuple]:
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    return FAMILIES[family].params_upto(max_n)
