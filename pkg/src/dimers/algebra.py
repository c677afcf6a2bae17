r"""
Truncated Jacobian algebras: acyclicity, dimensions, and fingerprints.

Removing a perfect matching from the quiver leaves the degree-zero
subquiver; the truncated algebra is its path algebra modulo the relations
of the matched arrows (both return paths of such a relation always have
degree zero, so they survive the truncation).  When the subquiver has a
directed cycle nothing kills its powers and the algebra is infinite
dimensional; otherwise the dimension is the number of paths minus the
rank of the two-sided ideal spanned by the relations, computed exactly
over the rationals.

An independent oracle recomputes dimensions by Knuth-Bendix completion of
the binomial rewriting system ``bigger path -> smaller path`` and counts
irreducible paths; the two methods must agree.
"""
from __future__ import annotations

import math
from fractions import Fraction
from itertools import permutations

INFINITE = math.inf
PATH_CAP = 10 ** 6


def degree_zero_arrows(qp, matching):
    matching = frozenset(matching)
    qp.grading_of(matching)        # validates that it is a matching
    return {a: ar for a, ar in qp.arrows.items() if a not in matching}


def _has_cycle(vertices, arrows):
    adj = {v: [] for v in vertices}
    for ar in arrows.values():
        adj[ar.tail].append(ar.head)
    state = {v: 0 for v in vertices}

    def visit(v):
        state[v] = 1
        for w in adj[v]:
            if state[w] == 1:
                return True
            if state[w] == 0 and visit(w):
                return True
        state[v] = 2
        return False

    return any(state[v] == 0 and visit(v) for v in vertices)


def is_acyclic(qp, matching):
    """Whether the degree-zero subquiver has no directed cycle."""
    return not _has_cycle(qp.vertices, degree_zero_arrows(qp, matching))


def strict_sources_sinks(qp, matching):
    """Sources and sinks of the degree-zero subquiver."""
    arrows = degree_zero_arrows(qp, matching)
    heads = {ar.head for ar in arrows.values()}
    tails = {ar.tail for ar in arrows.values()}
    sources = sorted((v for v in qp.vertices if v not in heads), key=str)
    sinks = sorted((v for v in qp.vertices if v not in tails), key=str)
    return sources, sinks


def enumerate_paths(vertices, arrows, avoid_vertex=None, cap=PATH_CAP):
    """All paths of an acyclic quiver as ``(start_vertex, arrow_tuple)``,
    trivial paths included.  Raises if the count explodes past ``cap``."""
    out_arrows = {v: [] for v in vertices}
    for a in sorted(arrows):
        ar = arrows[a]
        if avoid_vertex is not None and avoid_vertex in (ar.tail, ar.head):
            continue
        out_arrows[ar.tail].append(a)
    paths = []
    for v in sorted(vertices, key=str):
        if v == avoid_vertex:
            continue
        stack = [(v, ())]
        while stack:
            vert, so_far = stack.pop()
            paths.append((v, so_far))
            if len(paths) > cap:
                raise RuntimeError("path enumeration exceeded cap %d" % cap)
            for a in out_arrows[vert]:
                stack.append((arrows[a].head, so_far + (a,)))
    return paths


def _path_head(qp, start, arrows_tuple):
    return qp.head(arrows_tuple[-1]) if arrows_tuple else start


def _relations_in_subquiver(qp, matching, avoid_vertex=None):
    """Relations of the truncated algebra, possibly degenerated.

    Each matched arrow contributes ``p+ - p-``.  When a vertex is deleted
    a side through that vertex dies; if exactly one side survives the
    relation degenerates to ``surviving path = 0``, if neither it is
    vacuous.  Yields ``(tail, plus_or_None, minus_or_None)``.
    """
    rels = qp.relations()
    for a in sorted(matching):
        rel = rels[a]
        plus, minus = rel.plus, rel.minus

        def alive(path):
            if avoid_vertex is None:
                return True
            verts = {qp.tail(x) for x in path} | {qp.head(x) for x in path}
            return avoid_vertex not in verts

        p = plus if alive(plus) else None
        m = minus if alive(minus) else None
        tail = qp.head(a)   # both sides run from the head of a to its tail
        if avoid_vertex is not None and avoid_vertex in (qp.head(a), qp.tail(a)):
            p = m = None
        if p is None and m is None:
            continue
        yield tail, p, m


def _rank(rows):
    """Exact rank of sparse rational rows (dicts keyed by column)."""
    pivots = {}
    rank = 0
    for row in rows:
        row = dict(row)
        while row:
            col = min(row)
            if col in pivots:
                pivot_row, pivot_val = pivots[col]
                factor = row[col] / pivot_val
                for c, v in pivot_row.items():
                    new = row.get(c, Fraction(0)) - factor * v
                    if new:
                        row[c] = new
                    else:
                        row.pop(c, None)
            else:
                pivots[col] = (row, row[col])
                rank += 1
                break
    return rank


def truncated_dimension(qp, matching, avoid_vertex=None, cap=PATH_CAP):
    """Dimension of the truncated algebra (or of its quotient by the
    idempotent at ``avoid_vertex``); ``INFINITE`` when the degree-zero
    subquiver is cyclic."""
    arrows = degree_zero_arrows(qp, matching)
    if avoid_vertex is not None:
        arrows = {a: ar for a, ar in arrows.items()
                  if avoid_vertex not in (ar.tail, ar.head)}
        vertices = tuple(v for v in qp.vertices if v != avoid_vertex)
    else:
        vertices = qp.vertices
    if _has_cycle(vertices, arrows):
        return INFINITE
    paths = enumerate_paths(vertices, arrows, cap=cap)
    index = {p: i for i, p in enumerate(paths)}
    rows = []
    for tail, plus, minus in _relations_in_subquiver(qp, matching, avoid_vertex):
        head = _path_head(qp, tail, plus if plus is not None else minus)
        # paths u ending where the relation starts, v starting where it ends
        us = [(s, p) for (s, p) in paths if _path_head(qp, s, p) == tail]
        vs = [(s, p) for (s, p) in paths if s == head]
        for (us_start, u) in us:
            for (_, v) in vs:
                row = {}
                if plus is not None:
                    key = (us_start, u + plus + v)
                    row[index[key]] = row.get(index[key], 0) + 1
                if minus is not None:
                    key = (us_start, u + minus + v)
                    row[index[key]] = row.get(index[key], 0) - 1
                row = {k: Fraction(v_) for k, v_ in row.items() if v_}
                if row:
                    rows.append(row)
    return len(paths) - _rank(rows)


def dimension_without_vertex(qp, matching, vertex):
    if vertex not in qp.vertices:
        raise ValueError("%r is not a quiver vertex" % (vertex,))
    return truncated_dimension(qp, matching, avoid_vertex=vertex)


# ---------------------------------------------------------------------
# rewriting oracle
# ---------------------------------------------------------------------

def _deglex_key(word):
    return (len(word), word)


def _reduce(word, rules):
    """Normal form of a path under the rewriting rules; None means zero."""
    changed = True
    while changed:
        changed = False
        for lhs, rhs in rules:
            k = len(lhs)
            for i in range(len(word) - k + 1):
                if word[i:i + k] == lhs:
                    if rhs is None:
                        return None
                    word = word[:i] + rhs + word[i + k:]
                    changed = True
                    break
            if changed:
                break
    return word


def _orient(p, q):
    """A rule from the binomial p - q, or None if trivial."""
    if p == q:
        return None
    if q is None:
        return (p, None)
    if p is None:
        return (q, None)
    if _deglex_key(p) > _deglex_key(q):
        return (p, q)
    return (q, p)


def rewriting_dimension(qp, matching, avoid_vertex=None, cap=PATH_CAP,
                        max_rules=10000):
    """Dimension by completion of the binomial rewriting system.

    Independent of :func:`truncated_dimension`: relations are oriented
    ``bigger -> smaller`` in degree-lexicographic order, overlaps are
    resolved until the system is confluent, and the dimension is the
    number of irreducible paths.
    """
    arrows = degree_zero_arrows(qp, matching)
    if avoid_vertex is not None:
        arrows = {a: ar for a, ar in arrows.items()
                  if avoid_vertex not in (ar.tail, ar.head)}
        vertices = tuple(v for v in qp.vertices if v != avoid_vertex)
    else:
        vertices = qp.vertices
    if _has_cycle(vertices, arrows):
        return INFINITE

    rules = []
    for _, plus, minus in _relations_in_subquiver(qp, matching, avoid_vertex):
        rule = _orient(plus, minus)
        if rule:
            rules.append(rule)
    rules = sorted(set(rules))

    # Knuth-Bendix: resolve overlap and containment ambiguities
    queue = [(r1, r2) for r1 in rules for r2 in rules]
    while queue:
        (l1, r1), (l2, r2) = queue.pop()
        criticals = []
        for k in range(1, min(len(l1), len(l2))):
            if l1[len(l1) - k:] == l2[:k]:              # overlap
                word = l1 + l2[k:]
                criticals.append(word)
        for i in range(len(l1) - len(l2) + 1):          # containment
            if l1[i:i + len(l2)] == l2:
                criticals.append(l1)
        for word in criticals:
            # rewrite once along each rule, then reduce fully
            w1 = _rewrite_once(word, (l1, r1))
            w2 = _rewrite_once(word, (l2, r2))
            n1 = _reduce(w1, rules) if w1 is not None else None
            n2 = _reduce(w2, rules) if w2 is not None else None
            rule = _orient(n1, n2)
            if rule and rule not in rules:
                rules.append(rule)
                rules.sort()
                if len(rules) > max_rules:
                    raise RuntimeError("rewriting completion exceeded %d rules" % max_rules)
                queue.extend((rule, r) for r in rules)
                queue.extend((r, rule) for r in rules)

    paths = enumerate_paths(vertices, arrows, cap=cap)
    count = 0
    lhss = [lhs for lhs, _ in rules]
    for _, word in paths:
        reducible = any(word[i:i + len(l)] == l
                        for l in lhss for i in range(len(word) - len(l) + 1))
        if not reducible:
            count += 1
    return count


def _rewrite_once(word, rule):
    lhs, rhs = rule
    k = len(lhs)
    for i in range(len(word) - k + 1):
        if word[i:i + k] == lhs:
            if rhs is None:
                return None
            return word[:i] + rhs + word[i + k:]
    return word


# ---------------------------------------------------------------------
# fingerprints
# ---------------------------------------------------------------------

def block_dimensions(qp, matching, cap=PATH_CAP):
    """Dimensions of the blocks e_i . A . e_j as a vertex-indexed matrix."""
    arrows = degree_zero_arrows(qp, matching)
    if _has_cycle(qp.vertices, arrows):
        raise ValueError("degree-zero subquiver is cyclic")
    paths = enumerate_paths(qp.vertices, arrows, cap=cap)
    verts = sorted(qp.vertices, key=str)
    vindex = {v: i for i, v in enumerate(verts)}
    by_block = {}
    for start, arrs in paths:
        key = (start, _path_head(qp, start, arrs))
        by_block.setdefault(key, []).append((start, arrs))
    n = len(verts)
    dims = [[0] * n for _ in range(n)]
    for (i, j), block_paths in by_block.items():
        index = {p: k for k, p in enumerate(block_paths)}
        rows = []
        for tail, plus, minus in _relations_in_subquiver(qp, matching):
            head = _path_head(qp, tail, plus if plus is not None else minus)
            us = [(s, p) for (s, p) in paths
                  if s == i and _path_head(qp, s, p) == tail]
            vs = [(s, p) for (s, p) in paths
                  if s == head and _path_head(qp, s, p) == j]
            for (_, u) in us:
                for (_, v) in vs:
                    row = {}
                    if plus is not None:
                        k = index[(i, u + plus + v)]
                        row[k] = row.get(k, 0) + 1
                    if minus is not None:
                        k = index[(i, u + minus + v)]
                        row[k] = row.get(k, 0) - 1
                    row = {k: Fraction(x) for k, x in row.items() if x}
                    if row:
                        rows.append(row)
        dims[vindex[i]][vindex[j]] = len(block_paths) - _rank(rows)
    return verts, dims


def _canonical_matrix(dims):
    """Lexicographically smallest simultaneous row/column permutation."""
    n = len(dims)
    row_inv = []
    for i in range(n):
        row_inv.append((sorted(dims[i]), sorted(dims[j][i] for j in range(n)),
                        dims[i][i]))
    groups = {}
    for i, inv in enumerate(row_inv):
        groups.setdefault(tuple(map(tuple, (inv[0], inv[1]))) + (inv[2],), []).append(i)
    ordered_groups = [groups[k] for k in sorted(groups)]

    best = None
    def search(perm, remaining_groups):
        nonlocal best
        if not remaining_groups:
            flat = tuple(dims[i][j] for i in perm for j in perm)
            if best is None or flat < best:
                best = flat
            return
        group, rest = remaining_groups[0], remaining_groups[1:]
        for p in permutations(group):
            search(perm + list(p), rest)

    search([], ordered_groups)
    return best


def algebra_fingerprint(qp, matching):
    """A canonical invariant of the truncated algebra: total dimension and
    the block-dimension matrix up to simultaneous vertex permutation.
    Equal fingerprints are necessary for isomorphism."""
    verts, dims = block_dimensions(qp, matching)
    total = sum(sum(r) for r in dims)
    return (total, _canonical_matrix(dims))
