"""Dipaths in a pre-cubical set and their classes modulo square swaps.

A dipath is a composable edge word; two dipaths are equivalent when one can
be turned into the other by repeatedly replacing, anywhere inside the word,
one side of a square's boundary relation (d2m;d1p) by the other (d1m;d2p)
or back.  On a pre-cubical model this swap congruence is exactly the
relation the 2-cells generate: any elementary homotopy between edge words
factors through single squares, so the arrows of the fundamental category
from x to y are the swap classes of dipaths x -> y.

Since both sides of every square relation have length 2, swaps preserve
word length; classes therefore refine by length, and a length-bounded
enumeration is closed under swaps.  Unbounded enumeration is only allowed
on acyclic complexes and is refused (not silently truncated) otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    DomainError,
    EnumerationLimitError,
    UnboundedEnumerationError,
)
from .precubical import require_valid

DEFAULT_MAX_PATHS = 1_000_000


@dataclass(frozen=True)
class DiPath:
    """A composable edge sequence; ``edges`` empty means the degenerate path."""

    complex: object = field(compare=False, repr=False)
    start: str
    edges: tuple[str, ...] = ()

    def __post_init__(self):
        k = self.complex
        if self.start not in k.vertices:
            raise DomainError(f"unknown vertex {self.start}")
        at = self.start
        for e in self.edges:
            if e not in k.edges:
                raise DomainError(f"unknown edge {e}")
            if k.src(e) != at:
                raise DomainError(f"edge {e} does not start at {at}")
            at = k.tgt(e)

    @property
    def end(self):
        return self.complex.tgt(self.edges[-1]) if self.edges else self.start

    def __len__(self):
        return len(self.edges)

    def concat(self, other):
        if other.start != self.end:
            raise DomainError("paths are not consecutive")
        return DiPath(self.complex, self.start, self.edges + other.edges)


@dataclass(frozen=True)
class HomClass:
    representative: tuple[str, ...]
    size: int


@dataclass(frozen=True)
class HomClassSet:
    source: str
    target: str
    bound: int | None
    classes: tuple[HomClass, ...]

    @property
    def count(self):
        return len(self.classes)


@dataclass(frozen=True)
class MonoidClassTable:
    """Loop classes at a point, graded by length, with their concatenation.

    ``counts[l]`` is the number of classes of length l; ``reps`` lists the
    canonical representatives in class order; ``table[(i, j)]`` is the class
    index of reps[i] + reps[j] (present when the sum of lengths fits the
    bound).
    """

    point: str
    bound: int
    counts: tuple[int, ...]
    reps: tuple[tuple[str, ...], ...]
    table: dict

    def is_length_addition(self):
        """True when every recorded concatenation lands in a class whose
        length is the sum of the operand lengths."""
        for (i, j), k in self.table.items():
            if len(self.reps[k]) != len(self.reps[i]) + len(self.reps[j]):
                return False
        return True


@dataclass(frozen=True)
class OneSimpleResult:
    one_simple: bool
    witness: tuple[str, str] | None
    exact: bool

    def __bool__(self):
        return self.one_simple


@dataclass(frozen=True)
class CatPresentation:
    """Objects, generating arrows, and parallel word-pair relations."""

    objects: tuple[str, ...]
    generators: dict
    relations: tuple[tuple[tuple[str, ...], tuple[str, ...]], ...]

    def gen_src(self, g):
        return self.generators[g][0]

    def gen_tgt(self, g):
        return self.generators[g][1]

    def word_endpoints(self, word, at=None):
        """(src, tgt) of a generator word; ``at`` disambiguates empty words."""
        if not word:
            if at is None:
                raise DomainError("empty word needs an anchor object")
            return (at, at)
        src = self.gen_src(word[0])
        cur = src
        for g in word:
            if self.gen_src(g) != cur:
                raise DomainError(f"word not composable at generator {g}")
            cur = self.gen_tgt(g)
        return (src, cur)


def validate_presentation(pres):
    out = []
    objs = set(pres.objects)
    for g, (s, t) in pres.generators.items():
        if s not in objs or t not in objs:
            out.append(f"generator {g}: endpoint not an object")
    for i, (u, v) in enumerate(pres.relations):
        if not u or not v:
            out.append(f"relation {i}: empty side (not supported)")
            continue
        try:
            eu = pres.word_endpoints(u)
            ev = pres.word_endpoints(v)
        except DomainError as exc:
            out.append(f"relation {i}: {exc}")
            continue
        if eu != ev:
            out.append(f"relation {i}: sides are not parallel ({eu} vs {ev})")
    return out


def presentation_of(complex_):
    """Generators-and-relations form of a complex's fundamental category.

    Objects = vertices, generators = edges, one relation per square equating
    its two boundary routes (d2m;d1p vs d1m;d2p), written in diagrammatic
    order.
    """
    require_valid(complex_)
    rels = tuple(
        ((d2m, d1p), (d1m, d2p))
        for _w, (d1m, d1p, d2m, d2p) in sorted(complex_.squares.items())
    )
    return CatPresentation(complex_.vertices, dict(complex_.edges), rels)


def is_acyclic(complex_):
    """True iff edge reachability has no nontrivial cycle (self-loops count)."""
    require_valid(complex_)
    color = {}  # 1 = on stack, 2 = done
    for root in complex_.vertices:
        if color.get(root):
            continue
        stack = [(root, iter(complex_.out_edges(root)))]
        color[root] = 1
        while stack:
            v, it = stack[-1]
            advanced = False
            for e in it:
                w = complex_.tgt(e)
                c = color.get(w)
                if c == 1:
                    return False
                if c is None:
                    color[w] = 1
                    stack.append((w, iter(complex_.out_edges(w))))
                    advanced = True
                    break
            if not advanced:
                color[v] = 2
                stack.pop()
    return True


def enumerate_dipaths(complex_, source, target, max_len=None, max_paths=DEFAULT_MAX_PATHS):
    """All dipaths source -> target of length <= max_len, lexicographically.

    ``max_len=None`` means unbounded and requires an acyclic complex.
    """
    words = _enumerate_words(complex_, source, target, max_len, max_paths)
    return [DiPath(complex_, source, w) for w in words]


def _enumerate_words(complex_, source, target, max_len, max_paths):
    k = require_valid(complex_)
    for v in (source, target):
        if v not in k.vertices:
            raise DomainError(f"unknown vertex {v}")
    if max_len is None and not is_acyclic(k):
        raise UnboundedEnumerationError(
            "unbounded enumeration on cyclic complex; pass a length bound"
        )
    out = []

    def visit(at, word):
        if at == target:
            out.append(tuple(word))
            if len(out) > max_paths:
                raise EnumerationLimitError(
                    f"more than {max_paths} dipaths {source} -> {target}"
                )
        if max_len is not None and len(word) >= max_len:
            return
        for e in k.out_edges(at):
            word.append(e)
            visit(k.tgt(e), word)
            word.pop()

    visit(source, [])
    return out


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            # keep the smaller index as root: roots are then lex-least members
            if ra > rb:
                ra, rb = rb, ra
            self.parent[rb] = ra


def _swap_moves(complex_):
    """pair -> sorted tuple of replacement pairs, from all square relations."""
    moves = {}
    for _w, (d1m, d1p, d2m, d2p) in sorted(complex_.squares.items()):
        a, b = (d2m, d1p), (d1m, d2p)
        moves.setdefault(a, set()).add(b)
        moves.setdefault(b, set()).add(a)
    return {p: tuple(sorted(q)) for p, q in moves.items()}


def _close_under_swaps(words, moves):
    """Union-find partition of an enumerated, swap-closed word list."""
    index = {w: i for i, w in enumerate(words)}
    uf = _UnionFind(len(words))
    for i, w in enumerate(words):
        for pos in range(len(w) - 1):
            repls = moves.get((w[pos], w[pos + 1]))
            if not repls:
                continue
            for r in repls:
                w2 = w[:pos] + r + w[pos + 2:]
                j = index.get(w2)
                # swaps preserve length and endpoints, so a complete
                # enumeration always contains the replacement
                assert j is not None, "swap left the enumerated set"
                uf.union(i, j)
    groups = {}
    for i in range(len(words)):
        groups.setdefault(uf.find(i), []).append(i)
    return groups, index


def hom_classes(complex_, source, target, max_len=None, max_paths=DEFAULT_MAX_PATHS):
    """Partition dipaths source -> target by the swap congruence.

    Classes come sorted by their canonical (lexicographically least)
    representative word.
    """
    words = _enumerate_words(complex_, source, target, max_len, max_paths)
    groups, _ = _close_under_swaps(words, _swap_moves(complex_))
    classes = tuple(
        HomClass(words[root], len(members)) for root, members in sorted(groups.items())
    )
    return HomClassSet(source, target, max_len, classes)


def fundamental_monoid_classes(complex_, point, max_len, max_paths=DEFAULT_MAX_PATHS):
    """Per-length loop class counts at ``point``, with a concatenation table."""
    if max_len is None or max_len < 0:
        raise DomainError("monoid class counting needs a length bound >= 0")
    words = _enumerate_words(complex_, point, point, max_len, max_paths)
    groups, index = _close_under_swaps(words, _swap_moves(complex_))
    roots = sorted(groups)
    class_of_root = {root: i for i, root in enumerate(roots)}
    uf_root = {}
    for root, members in groups.items():
        for m in members:
            uf_root[m] = root
    reps = tuple(words[root] for root in roots)
    counts = [0] * (max_len + 1)
    for rep in reps:
        counts[len(rep)] += 1
    table = {}
    for i, ri in enumerate(reps):
        for j, rj in enumerate(reps):
            if len(ri) + len(rj) <= max_len:
                w = ri + rj
                table[(i, j)] = class_of_root[uf_root[index[w]]]
    return MonoidClassTable(point, max_len, tuple(counts), reps, table)


def path_preorder(complex_):
    """x <= y iff some dipath runs x -> y; reflexive-transitive by construction."""
    k = require_valid(complex_)
    reach = {}
    for root in k.vertices:
        seen = {root}
        stack = [root]
        while stack:
            v = stack.pop()
            for e in k.out_edges(v):
                w = k.tgt(e)
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        reach[root] = frozenset(seen)
    return reach


def pi0(complex_):
    """Partition of vertices by the equivalence the path preorder generates
    (= weak connectivity of the edge graph)."""
    k = require_valid(complex_)
    verts = list(k.vertices)
    idx = {v: i for i, v in enumerate(verts)}
    uf = _UnionFind(len(verts))
    for _e, (s, t) in k.edges.items():
        uf.union(idx[s], idx[t])
    groups = {}
    for v in verts:
        groups.setdefault(uf.find(idx[v]), []).append(v)
    return tuple(tuple(sorted(g)) for g in sorted(groups.values()))


def is_one_simple(complex_, max_len=None, max_paths=DEFAULT_MAX_PATHS):
    """Whether every hom-set has at most one class.

    Exact on acyclic complexes (unbounded enumeration); with a bound on a
    cyclic complex the verdict only covers dipaths up to that length and is
    flagged ``exact=False``.
    """
    k = require_valid(complex_)
    acyclic = is_acyclic(k)
    if max_len is None and not acyclic:
        raise UnboundedEnumerationError(
            "one-simplicity on a cyclic complex needs a length bound"
        )
    exact = acyclic and max_len is None
    for x in k.vertices:
        for y in k.vertices:
            h = hom_classes(k, x, y, max_len, max_paths)
            if h.count > 1:
                return OneSimpleResult(False, (x, y), exact)
    return OneSimpleResult(True, None, exact)


def format_hom_classes(homset, header=True):
    """Text report: ``classes <n>`` then ``class <k> size <m> rep <edge ids>``."""
    lines = []
    if header:
        lines.append(f"classes {homset.count}")
    for i, c in enumerate(homset.classes):
        rep = " ".join(c.representative)
        lines.append(f"class {i} size {c.size} rep {rep}".rstrip())
    return "\n".join(lines) + "\n"
