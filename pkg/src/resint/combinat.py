"""ADE Dynkin combinatorics: the rooted walk graph, subset and spin crystals,
Bruhat order, Pfaffian labels, and DOT export.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .families import SkewMatrix
from .groebner import Ideal
from .poly import PolyError


class CombinatError(PolyError):
    pass


class InvalidTypeRankError(CombinatError):
    pass


class NotExtremalError(CombinatError):
    pass


class RankMismatchError(CombinatError):
    pass


class WrongTypeError(CombinatError):
    pass


# -- Dynkin diagrams (Bourbaki numbering) -----------------------------------


@dataclass(frozen=True)
class DynkinDiagram:
    type: str
    rank: int
    edges: frozenset

    def neighbors(self, i):
        out = []
        for a, b in self.edges:
            if a == i:
                out.append(b)
            elif b == i:
                out.append(a)
        return sorted(out)

    def degree(self, i):
        return len(self.neighbors(i))

    def leaves(self):
        return [i for i in range(1, self.rank + 1) if self.degree(i) == 1]

    def trivalent_node(self):
        for i in range(1, self.rank + 1):
            if self.degree(i) == 3:
                return i
        return None


def dynkin(type, rank):
    type = type.upper()
    if type == "A":
        if rank < 1:
            raise InvalidTypeRankError("type A needs rank >= 1")
        edges = {(i, i + 1) for i in range(1, rank)}
    elif type == "D":
        if rank < 4:
            raise InvalidTypeRankError("type D needs rank >= 4")
        edges = {(i, i + 1) for i in range(1, rank - 2)}
        edges |= {(rank - 2, rank - 1), (rank - 2, rank)}
    elif type == "E":
        if rank not in (6, 7, 8):
            raise InvalidTypeRankError("type E needs rank 6, 7 or 8")
        chain = [1, 3, 4, 5, 6, 7, 8][: rank - 1]
        edges = {(a, b) for a, b in zip(chain, chain[1:])}
        edges.add((2, 4))
    else:
        raise InvalidTypeRankError(f"unknown type {type!r}")
    return DynkinDiagram(type, rank, frozenset(tuple(sorted(e)) for e in edges))


# -- the rooted walk graph ---------------------------------------------------


@dataclass(frozen=True)
class GkNode:
    name: str
    label: str
    dynkin: int | None
    word: tuple


@dataclass(frozen=True)
class GkGraph:
    """The T-shaped walk graph: an anchor, the root coordinate node, the
    chain down to the trivalent node, and the two arms.

    Edges carry the Dynkin node entered along the walk; the anchor edge is
    the distinguished one and carries no label.
    """

    diagram: DynkinDiagram
    k: int
    c: int
    d: int
    t: int
    x_chain: tuple
    u: int
    y_arm: tuple
    z_arm: tuple
    nodes: tuple
    edges: tuple  # (parent name, child name, dynkin label or None)


def _arm_from(diagram, start, banned):
    """Follow the unique unvisited path from `start` to a leaf."""
    arm = [start]
    prev = banned
    cur = start
    while True:
        nxt = [v for v in diagram.neighbors(cur) if v != prev]
        if not nxt:
            return arm
        if len(nxt) > 1:
            raise NotExtremalError("walk hit a second branch node")
        prev, cur = cur, nxt[0]
        arm.append(cur)


def _tree_path(diagram, a, b):
    """The unique path from a to b in the tree."""
    seen = {a: None}
    queue = [a]
    while queue:
        cur = queue.pop(0)
        if cur == b:
            path = [b]
            while seen[path[-1]] is not None:
                path.append(seen[path[-1]])
            return list(reversed(path))
        for v in diagram.neighbors(cur):
            if v not in seen:
                seen[v] = cur
                queue.append(v)
    raise NotExtremalError("disconnected diagram")


def build_gk(diagram, k):
    """Walk graph from the extremal node k, with per-node Weyl words."""
    n = diagram.rank
    if not 1 <= k <= n:
        raise NotExtremalError(f"node {k} outside the diagram")
    if diagram.type == "A":
        if not 2 <= k <= n - 1:
            raise NotExtremalError(
                "type A walk needs an interior start node (both arms nonempty)"
            )
        x_chain = ()
        u = k
        arm_a = list(range(k + 1, n + 1))
        arm_b = list(range(k - 1, 0, -1))
    else:
        u = diagram.trivalent_node()
        if u is None:
            raise NotExtremalError("no trivalent node in the diagram")
        if diagram.degree(k) != 1:
            raise NotExtremalError(f"start node {k} is not a leaf")
        chain = _tree_path(diagram, k, u)
        x_chain = tuple(chain[:-1])
        prev = x_chain[-1]
        others = [v for v in diagram.neighbors(u) if v != prev]
        arm_a = _arm_from(diagram, others[0], u)
        arm_b = _arm_from(diagram, others[1], u)
    # The E6 walk is labelled in the source with the short arm as y; keep
    # that fixed orientation, otherwise order the arms so d >= t.
    if diagram.type == "E" and diagram.rank == 6 and k == 6:
        y_arm, z_arm = (2,), (3, 1)
        if tuple(arm_a) != (2,):
            arm_a, arm_b = arm_b, arm_a
    else:
        if len(arm_a) < len(arm_b):
            arm_a, arm_b = arm_b, arm_a
        y_arm, z_arm = tuple(arm_a), tuple(arm_b)
    c = len(x_chain) + 2
    d, t = len(y_arm), len(z_arm)
    if d < 1 or t < 1:
        raise NotExtremalError("both arms must be nonempty")
    nodes = [GkNode("anchor", "*", None, ()), GkNode("p0", "p_()", None, ())]
    edges = [("anchor", "p0", None)]
    word = []
    prev_name = "p0"
    walk = list(x_chain) + [u]
    for v in walk:
        word = [v] + word
        name = f"p{v}"
        nodes.append(GkNode(name, f"p_{v}", v, tuple(word)))
        edges.append((prev_name, name, v))
        prev_name = name
    u_name = prev_name
    u_word = list(word)
    for arm in (y_arm, z_arm):
        prev_name = u_name
        word = list(u_word)
        for v in arm:
            word = [v] + word
            name = f"p{v}"
            nodes.append(GkNode(name, f"p_{v}", v, tuple(word)))
            edges.append((prev_name, name, v))
            prev_name = name
    return GkGraph(
        diagram, k, c, d, t, tuple(x_chain), u, tuple(y_arm), tuple(z_arm),
        tuple(nodes), tuple(edges),
    )


def t_constraint(g):
    """1/(c-1) + 1/(d+1) + 1/(t+1) >= 1, exactly in rationals."""
    from fractions import Fraction

    return Fraction(1, g.c - 1) + Fraction(1, g.d + 1) + Fraction(1, g.t + 1) >= 1


# -- type A subset crystal ----------------------------------------------------


class TypeACrystal:
    """All k-subsets of [1, n], Bruhat-ordered componentwise."""

    def __init__(self, k, n):
        if not 1 <= k <= n:
            raise CombinatError(f"need 1 <= k <= n, got k={k}, n={n}")
        self.k = k
        self.n = n
        self.elements = [
            tuple(s) for s in itertools.combinations(range(1, n + 1), k)
        ]

    def bruhat_leq(self, a, b):
        if len(a) != self.k or len(b) != self.k:
            raise RankMismatchError("subset size mismatch")
        return all(x <= y for x, y in zip(a, b))

    def lowering(self, j, el):
        """f_j: replace j by j+1 when j is present and j+1 is not."""
        if j in el and j + 1 not in el:
            return tuple(sorted(x if x != j else j + 1 for x in el))
        return None

    def raising(self, j, el):
        if j + 1 in el and j not in el:
            return tuple(sorted(x if x != j + 1 else j for x in el))
        return None

    def reflect(self, j, el):
        """Action of the simple transposition s_j on a subset."""
        has_j, has_j1 = j in el, j + 1 in el
        if has_j == has_j1:
            return el
        return tuple(sorted((j + 1 if x == j else j if x == j + 1 else x) for x in el))


# -- type D spin crystal -------------------------------------------------------


class SpinCrystal:
    """Sign sequences of length n with positive product.

    Lowering operators: f_j swaps (+,-) at (j, j+1) into (-,+) for j < n,
    and f_n turns (+,+) at (n-1, n) into (-,-).  Bruhat order is generation
    order: the all-plus sequence is the identity coset (unique bottom), and
    each lowering step raises the length by one.
    """

    def __init__(self, n):
        if n < 4:
            raise CombinatError("spin crystal needs n >= 4")
        self.n = n
        self.elements = [
            s
            for s in itertools.product((1, -1), repeat=n)
            if sum(1 for x in s if x < 0) % 2 == 0
        ]
        self._desc = {}

    def _check(self, el):
        if len(el) != self.n:
            raise RankMismatchError("sign sequence of wrong length")

    def lowering(self, j, el):
        self._check(el)
        s = list(el)
        if j < 1 or j > self.n:
            raise CombinatError(f"operator index {j} outside [1, {self.n}]")
        if j < self.n:
            if s[j - 1] == 1 and s[j] == -1:
                s[j - 1], s[j] = -1, 1
                return tuple(s)
            return None
        if s[-2] == 1 and s[-1] == 1:
            s[-2] = s[-1] = -1
            return tuple(s)
        return None

    def raising(self, j, el):
        self._check(el)
        s = list(el)
        if j < 1 or j > self.n:
            raise CombinatError(f"operator index {j} outside [1, {self.n}]")
        if j < self.n:
            if s[j - 1] == -1 and s[j] == 1:
                s[j - 1], s[j] = 1, -1
                return tuple(s)
            return None
        if s[-2] == -1 and s[-1] == -1:
            s[-2] = s[-1] = 1
            return tuple(s)
        return None

    def _descendants(self, el):
        cached = self._desc.get(el)
        if cached is not None:
            return cached
        out = {el}
        for j in range(1, self.n + 1):
            nxt = self.lowering(j, el)
            if nxt is not None:
                out |= self._descendants(nxt)
        self._desc[el] = out
        return out

    def bruhat_leq(self, a, b):
        """a <= b when b is reachable from a by lowering operators."""
        self._check(a)
        self._check(b)
        return b in self._descendants(a)

    def bottom(self):
        return tuple(1 for _ in range(self.n))

    def top(self):
        for el in self.elements:
            if all(self.lowering(j, el) is None for j in range(1, self.n + 1)):
                return el
        raise CombinatError("no sink element")

    def reflect(self, j, el):
        """Weyl action: s_j swaps positions (j, j+1); s_n flips both signs
        at (n-1, n)."""
        self._check(el)
        s = list(el)
        if j < self.n:
            s[j - 1], s[j] = s[j], s[j - 1]
        else:
            s[-2], s[-1] = -s[-2], -s[-1]
        return tuple(s)


def pfaffian_label(el):
    """Positions carrying a minus sign; they index the Pfaffian."""
    if not all(x in (1, -1) for x in el):
        raise WrongTypeError("not a sign sequence")
    return tuple(i for i, s in enumerate(el, 1) if s < 0)


def index_sequence(el, m):
    """Grassmannian row labels: plus positions, then reflected minus positions."""
    plus = [i for i, s in enumerate(el, 1) if s > 0]
    minus = [i for i, s in enumerate(el, 1) if s < 0]
    return tuple(plus + sorted(2 * m + 1 - k for k in minus))


def typeD_schubert_ideal(el, crystal, A):
    """Ideal of the cell Schubert variety at `el`: Pfaffians of all labels
    not Bruhat-below el."""
    if not isinstance(A, SkewMatrix):
        raise WrongTypeError("expected a SkewMatrix")
    if crystal.n != A.size:
        raise RankMismatchError("crystal rank and matrix size differ")
    from .families import pfaffian

    gens = []
    for other in crystal.elements:
        if not crystal.bruhat_leq(other, el):
            gens.append(pfaffian(A, pfaffian_label(other)))
    return Ideal(A.ring, gens)


# -- DOT export ----------------------------------------------------------------


def _dot_escape(s):
    return s.replace("\\", "\\\\").replace('"', '\\"')


def gk_to_dot(g):
    """Byte-deterministic DOT rendering of a walk graph."""
    lines = ["digraph gk {"]
    for node in g.nodes:
        lines.append(f'  "{node.name}" [label="{_dot_escape(node.label)}"];')
    for a, b, lab in g.edges:
        if lab is None:
            lines.append(f'  "{a}" -> "{b}" [style=bold];')
        else:
            lines.append(f'  "{a}" -> "{b}" [label="{lab}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _subset_name(el):
    return "{" + ",".join(str(x) for x in el) + "}"


def _signs_name(el):
    return "".join("+" if s > 0 else "-" for s in el)


def crystal_to_dot(crystal, highlight=()):
    """DOT rendering of a crystal graph, edges labelled by operator index."""
    if isinstance(crystal, TypeACrystal):
        name = _subset_name
        ops = range(1, crystal.n)
    else:
        name = _signs_name
        ops = range(1, crystal.n + 1)
    highlight = {name(e) for e in highlight}
    lines = ["digraph crystal {"]
    for el in sorted(crystal.elements):
        label = name(el)
        style = ' style=bold color=red' if label in highlight else ""
        lines.append(f'  "{label}" [label="{_dot_escape(label)}"{style}];')
    for el in sorted(crystal.elements):
        for j in ops:
            nxt = crystal.lowering(j, el)
            if nxt is not None:
                lines.append(f'  "{name(el)}" -> "{name(nxt)}" [label="{j}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
