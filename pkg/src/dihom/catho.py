"""Directed homotopy of small finite categories.

Natural transformations play the role of one-step directed homotopies
between functors; two functors are homotopic when a zig-zag of
transformations connects them, and two categories are equivalent when some
functor pair composes to endofunctors homotopic to the identities.  Past
(future) contractibility in the strong sense is the existence of an initial
(terminal) object; stepwise contraction works through chains of full
subcategories that are immediate deformation retracts.

All searches are exhaustive and brute force, guarded by explicit size
limits that raise :class:`SizeGuardError` instead of degrading.

The module also carries the presentation machinery used by the van Kampen
computations: pushouts of generators-and-relations presentations along
morphisms, and their realization as explicit categories (full when the
generator graph is acyclic, length-truncated otherwise).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import product as iter_product

from .errors import (
    DomainError,
    EnumerationLimitError,
    InputSyntaxError,
    SizeGuardError,
)
from .fundcat import CatPresentation, validate_presentation

MAX_OBJECTS = 5
MAX_ARROWS = 40
MAX_FUNCTORS = 100_000
MAX_WORDS = 1_000_000


# ---------------------------------------------------------------------------
# finite categories


class FinCategory:
    """Objects, arrows with endpoints, identities, total composition table.

    ``table[(f, g)]`` is the composite "f then g" (diagrammatic order).
    Construction stores the data as given; :func:`validate_category` checks
    the laws.
    """

    def __init__(self, objects, arrows, identity, table):
        self.objects = tuple(sorted(objects))
        self.arrows = {a: (str(s), str(t)) for a, (s, t) in sorted(dict(arrows).items())}
        self.identity = dict(identity)
        self.table = dict(table)
        self._ids = frozenset(self.identity.values())
        self._hom = {}
        for a, (s, t) in self.arrows.items():
            self._hom.setdefault((s, t), []).append(a)
        self._hom = {k: tuple(sorted(v)) for k, v in self._hom.items()}

    @classmethod
    def build(cls, objects, arrows, compose):
        """Assemble from non-identity arrows and their composition table;
        identities are synthesized as ``id(<object>)`` and composition with
        them is filled in."""
        arrows = dict(arrows)
        identity = {}
        for x in objects:
            i = f"id({x})"
            if i in arrows:
                raise DomainError(f"arrow id {i} collides with the synthesized identity")
            identity[x] = i
        full = dict(arrows)
        for x, i in identity.items():
            full[i] = (x, x)
        table = dict(compose)
        for f, (s, t) in full.items():
            table[(identity[s], f)] = f
            table[(f, identity[t])] = f
        return cls(objects, full, identity, table)

    def hom(self, x, y):
        return self._hom.get((x, y), ())

    def src(self, a):
        return self.arrows[a][0]

    def tgt(self, a):
        return self.arrows[a][1]

    def compose(self, f, g):
        """The composite "f then g"."""
        try:
            return self.table[(f, g)]
        except KeyError:
            raise DomainError(f"composite of {f} then {g} is undefined") from None

    def is_identity(self, a):
        return a in self._ids

    def non_identity_arrows(self):
        return tuple(a for a in self.arrows if a not in self._ids)

    def __repr__(self):
        return f"FinCategory({len(self.objects)} objects, {len(self.arrows)} arrows)"


def validate_category(cat):
    """Exhaustive law check; returns a list of violation strings."""
    out = []
    objset = set(cat.objects)
    for a, (s, t) in cat.arrows.items():
        if s not in objset or t not in objset:
            out.append(f"arrow {a}: endpoint not an object")
    for x in cat.objects:
        i = cat.identity.get(x)
        if i is None or i not in cat.arrows:
            out.append(f"object {x}: missing identity arrow")
        elif cat.arrows[i] != (x, x):
            out.append(f"identity of {x} has endpoints {cat.arrows[i]}")
    for (f, g), h in cat.table.items():
        if f not in cat.arrows or g not in cat.arrows or h not in cat.arrows:
            out.append(f"composition ({f};{g})={h}: unknown arrow")
            continue
        if cat.tgt(f) != cat.src(g):
            out.append(f"composition ({f};{g}) declared on a non-composable pair")
        elif (cat.src(f), cat.tgt(g)) != (cat.src(h), cat.tgt(h)):
            out.append(f"composite {f};{g}={h} has wrong endpoints")
    for f, (_, tf) in cat.arrows.items():
        for g, (sg, _) in cat.arrows.items():
            if tf == sg and (f, g) not in cat.table:
                out.append(f"composition undefined for composable pair ({f};{g})")
    if out:
        return out
    for x in cat.objects:
        i = cat.identity[x]
        for f in cat.arrows:
            if cat.src(f) == x and cat.table[(i, f)] != f:
                out.append(f"left identity law fails at {f}")
            if cat.tgt(f) == x and cat.table[(f, i)] != f:
                out.append(f"right identity law fails at {f}")
    for (f, g), fg in cat.table.items():
        tg = cat.tgt(g)
        for h, (sh, _) in cat.arrows.items():
            if sh != tg:
                continue
            if cat.table[(fg, h)] != cat.table[(f, cat.table[(g, h)])]:
                out.append(f"associativity fails on ({f};{g};{h})")
    return out


def require_category(cat):
    violations = validate_category(cat)
    if violations:
        raise DomainError("invalid category: " + "; ".join(violations[:5]))
    return cat


def _guard(cat, max_objects=MAX_OBJECTS, max_arrows=MAX_ARROWS):
    if len(cat.objects) > max_objects:
        raise SizeGuardError(
            f"category has {len(cat.objects)} objects (guard {max_objects})"
        )
    if len(cat.arrows) > max_arrows:
        raise SizeGuardError(f"category has {len(cat.arrows)} arrows (guard {max_arrows})")
    return cat


# ---------------------------------------------------------------------------
# builders


def ordinal(n):
    """The order category on {0 < 1 < ... < n-1}; ordinal(2) is the
    directed interval, ordinal(1) the point."""
    if n < 0:
        raise DomainError("ordinal needs n >= 0")
    els = [str(i) for i in range(n)]
    return poset_category(els, [(str(i), str(j)) for i in range(n) for j in range(i, n)])


def discrete_category(names):
    return FinCategory.build(list(names), {}, {})


def poset_category(elements, le_pairs):
    """Category of a poset: one arrow per related pair.

    ``le_pairs`` is closed reflexively and transitively; antisymmetry is
    required.
    """
    els = sorted(set(elements))
    rel = {(x, x) for x in els}
    rel.update((str(a), str(b)) for a, b in le_pairs)
    changed = True
    while changed:
        changed = False
        for (a, b) in list(rel):
            for (c, d) in list(rel):
                if b == c and (a, d) not in rel:
                    rel.add((a, d))
                    changed = True
    for (a, b) in rel:
        if a != b and (b, a) in rel:
            raise DomainError(f"not a poset: {a} and {b} are equivalent")
        if a not in els or b not in els:
            raise DomainError(f"relation mentions unknown element {a if a not in els else b}")
    arrows = {f"a({a},{b})": (a, b) for (a, b) in rel if a != b}
    compose = {}
    for (a, b) in rel:
        for (c, d) in rel:
            if b == c and a != b and c != d:
                # antisymmetry guarantees a != d here
                compose[(f"a({a},{b})", f"a({c},{d})")] = f"a({a},{d})"
    return FinCategory.build(els, arrows, compose)


def monoid_category(elements, unit, mul):
    """One-object category of a monoid; ``mul[(a, b)]`` composes a then b.
    The unit element becomes the identity arrow ``id(*)``."""
    arrows = {str(e): ("*", "*") for e in elements if e != unit}
    compose = {}
    for a in elements:
        for b in elements:
            if a == unit or b == unit:
                continue
            c = mul[(a, b)]
            compose[(str(a), str(b))] = str(c) if c != unit else "id(*)"
    return FinCategory.build(["*"], arrows, compose)


def full_subcategory(cat, objs):
    objs = sorted(set(objs))
    keep = {a for a, (s, t) in cat.arrows.items() if s in objs and t in objs}
    return FinCategory(
        objs,
        {a: cat.arrows[a] for a in keep},
        {x: cat.identity[x] for x in objs},
        {(f, g): h for (f, g), h in cat.table.items() if f in keep and g in keep},
    )


def product_category(c1, c2):
    objects = [f"({x},{y})" for x in c1.objects for y in c2.objects]
    arrows = {
        f"({a},{b})": (
            f"({c1.src(a)},{c2.src(b)})",
            f"({c1.tgt(a)},{c2.tgt(b)})",
        )
        for a in c1.arrows
        for b in c2.arrows
    }
    identity = {
        f"({x},{y})": f"({c1.identity[x]},{c2.identity[y]})"
        for x in c1.objects
        for y in c2.objects
    }
    table = {}
    for (f1, g1), h1 in c1.table.items():
        for (f2, g2), h2 in c2.table.items():
            table[(f"({f1},{f2})", f"({g1},{g2})")] = f"({h1},{h2})"
    return FinCategory(objects, arrows, identity, table)


def cylinder(cat):
    """The directed cylinder: the product with the interval category."""
    return product_category(cat, ordinal(2))


def arrow_category(cat):
    """Objects are the arrows of the input; morphisms f -> g are pairs
    (a, b) with f;b = a;g, composed componentwise."""
    objects = list(cat.arrows)
    arrows = {}
    square = {}  # morphism id -> (f, g, a, b)
    name = {}
    for f, (fx, fy) in cat.arrows.items():
        for g, (gx, gy) in cat.arrows.items():
            for a in cat.hom(fx, gx):
                for b in cat.hom(fy, gy):
                    if cat.compose(f, b) == cat.compose(a, g):
                        m = f"{f}=>{g}[{a},{b}]"
                        arrows[m] = (f, g)
                        square[m] = (f, g, a, b)
                        name[(f, g, a, b)] = m
    identity = {f: f"{f}=>{f}[{cat.identity[fx]},{cat.identity[fy]}]"
                for f, (fx, fy) in cat.arrows.items()}
    table = {}
    for m1, (f1, g1, a1, b1) in square.items():
        for m2, (f2, g2, a2, b2) in square.items():
            if f2 != g1:
                continue
            table[(m1, m2)] = name[
                (f1, g2, cat.compose(a1, a2), cat.compose(b1, b2))
            ]
    return FinCategory(objects, arrows, identity, table)


def opposite_category(cat):
    """Arrows reversed, composition transposed; an involution."""
    arrows = {a: (t, s) for a, (s, t) in cat.arrows.items()}
    table = {(g, f): h for (f, g), h in cat.table.items()}
    return FinCategory(cat.objects, arrows, cat.identity, table)


# ---------------------------------------------------------------------------
# functors and natural transformations


class FunctorMap:
    def __init__(self, domain, codomain, obj_map, arr_map):
        self.domain = domain
        self.codomain = codomain
        self.obj_map = dict(obj_map)
        self.arr_map = dict(arr_map)
        self._key = (
            tuple(sorted(self.obj_map.items())),
            tuple(sorted(self.arr_map.items())),
        )

    def obj(self, x):
        return self.obj_map[x]

    def arr(self, a):
        return self.arr_map[a]

    def __eq__(self, other):
        return isinstance(other, FunctorMap) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        os = ",".join(f"{x}>{y}" for x, y in self._key[0])
        return f"FunctorMap({os})"


def identity_functor(cat):
    return FunctorMap(cat, cat, {x: x for x in cat.objects}, {a: a for a in cat.arrows})


def constant_functor(domain, codomain, obj):
    i = codomain.identity[obj]
    return FunctorMap(
        domain, codomain, {x: obj for x in domain.objects}, {a: i for a in domain.arrows}
    )


def compose_functors(f, g):
    """Apply f, then g."""
    return FunctorMap(
        f.domain,
        g.codomain,
        {x: g.obj(f.obj(x)) for x in f.domain.objects},
        {a: g.arr(f.arr(a)) for a in f.domain.arrows},
    )


def check_functor(fun):
    """Returns a list of violation strings (empty = valid functor)."""
    out = []
    c, d = fun.domain, fun.codomain
    for x in c.objects:
        if fun.obj_map.get(x) not in d.objects:
            out.append(f"object {x}: image missing or not an object")
    for a, (s, t) in c.arrows.items():
        fa = fun.arr_map.get(a)
        if fa is None or fa not in d.arrows:
            out.append(f"arrow {a}: image missing")
            continue
        if d.arrows[fa] != (fun.obj_map.get(s), fun.obj_map.get(t)):
            out.append(f"arrow {a}: image {fa} has wrong endpoints")
    if out:
        return out
    for x in c.objects:
        if fun.arr(c.identity[x]) != d.identity[fun.obj(x)]:
            out.append(f"identity of {x} not preserved")
    for (f, g), h in c.table.items():
        if d.compose(fun.arr(f), fun.arr(g)) != fun.arr(h):
            out.append(f"composition ({f};{g}) not preserved")
    return out


class NatTransf:
    def __init__(self, source, target, components):
        self.source = source
        self.target = target
        self.components = dict(components)
        self._key = (source._key, target._key, tuple(sorted(self.components.items())))

    def component(self, x):
        return self.components[x]

    def __eq__(self, other):
        return isinstance(other, NatTransf) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        cs = ",".join(f"{x}:{a}" for x, a in sorted(self.components.items()))
        return f"NatTransf({cs})"


def _nat_search(f, g, fixed=None, find_all=True):
    if f.domain is not g.domain or f.codomain is not g.codomain:
        if (f.domain.objects, f.domain.arrows) != (g.domain.objects, g.domain.arrows) or (
            f.codomain.objects,
            f.codomain.arrows,
        ) != (g.codomain.objects, g.codomain.arrows):
            raise DomainError("functors are not parallel")
    c, d = f.domain, f.codomain
    objs = list(c.objects)
    fixed = fixed or {}
    found = []
    comp = {}

    def consistent(x):
        # check every arrow with both endpoint components assigned
        for a, (s, t) in c.arrows.items():
            if s in comp and t in comp and (s == x or t == x):
                if d.compose(f.arr(a), comp[t]) != d.compose(comp[s], g.arr(a)):
                    return False
        return True

    def rec(i):
        if i == len(objs):
            found.append(NatTransf(f, g, comp))
            return not find_all
        x = objs[i]
        cands = (fixed[x],) if x in fixed else d.hom(f.obj(x), g.obj(x))
        for a in cands:
            comp[x] = a
            if consistent(x) and rec(i + 1):
                return True
            del comp[x]
        return False

    rec(0)
    return found


def nat_transformations(f, g):
    """All natural transformations f -> g, in deterministic order."""
    return _nat_search(f, g, find_all=True)


def exists_nat_transformation(f, g, fixed=None):
    return bool(_nat_search(f, g, fixed=fixed, find_all=False))


def all_functors(c, d, max_objects=MAX_OBJECTS, max_arrows=MAX_ARROWS,
                 max_functors=MAX_FUNCTORS):
    """Every functor c -> d, by exhaustive search with composition pruning."""
    _guard(c, max_objects, max_arrows)
    _guard(d, max_objects, max_arrows)
    objs = list(c.objects)
    non_id = sorted(c.non_identity_arrows())
    results = []

    for images in iter_product(d.objects, repeat=len(objs)):
        omap = dict(zip(objs, images))
        amap = {c.identity[x]: d.identity[omap[x]] for x in objs}

        def consistent(new):
            for (u, v), w in c.table.items():
                if new not in (u, v, w):
                    continue
                if u in amap and v in amap and w in amap:
                    if d.table.get((amap[u], amap[v])) != amap[w]:
                        return False
            return True

        def rec(i):
            if i == len(non_id):
                results.append(FunctorMap(c, d, omap, amap))
                if len(results) > max_functors:
                    raise EnumerationLimitError(
                        f"more than {max_functors} functors enumerated"
                    )
                return
            a = non_id[i]
            s, t = c.arrows[a]
            for h in d.hom(omap[s], omap[t]):
                amap[a] = h
                if consistent(a):
                    rec(i + 1)
                del amap[a]

        rec(0)
    return results


# ---------------------------------------------------------------------------
# directed homotopy of functors and categories


class _Components:
    def __init__(self, functors):
        self.index = {f: i for i, f in enumerate(functors)}
        n = len(functors)
        self.parent = list(range(n))
        for i in range(n):
            for j in range(i + 1, n):
                if self.find(i) == self.find(j):
                    continue
                fi, fj = functors[i], functors[j]
                if exists_nat_transformation(fi, fj) or exists_nat_transformation(fj, fi):
                    self.parent[self.find(i)] = self.find(j)

    def find(self, i):
        while self.parent[i] != i:
            self.parent[i] = self.parent[self.parent[i]]
            i = self.parent[i]
        return i

    def connected(self, f, g):
        return self.find(self.index[f]) == self.find(self.index[g])


def dhomotopic_functors(f, g, **guards):
    """Zig-zag reachability of g from f through natural transformations,
    decided on the graph of all parallel functors."""
    functors = all_functors(f.domain, f.codomain, **guards)
    comps = _Components(functors)
    if f not in comps.index or g not in comps.index:
        raise DomainError("functor is not valid for the given categories")
    return comps.connected(f, g)


def equivalence_witness(c, d, **guards):
    """A pair (f, g) with both composites zig-zag homotopic to the
    identities, or None."""
    fs = all_functors(c, d, **guards)
    gs = all_functors(d, c, **guards)
    comp_c = _Components(all_functors(c, c, **guards))
    comp_d = _Components(all_functors(d, d, **guards))
    id_c, id_d = identity_functor(c), identity_functor(d)
    for f in fs:
        for g in gs:
            if comp_c.connected(compose_functors(f, g), id_c) and comp_d.connected(
                compose_functors(g, f), id_d
            ):
                return (f, g)
    return None


def dhomotopy_equivalent(c, d, **guards):
    return equivalence_witness(c, d, **guards) is not None


def is_past_contractible(cat):
    """(flag, witness): true iff the category has an initial object."""
    for v in cat.objects:
        if all(len(cat.hom(v, x)) == 1 for x in cat.objects):
            return True, v
    return False, None


def is_future_contractible(cat):
    """(flag, witness): true iff the category has a terminal object."""
    for v in cat.objects:
        if all(len(cat.hom(x, v)) == 1 for x in cat.objects):
            return True, v
    return False, None


def retract_endofunctors(cat, sub_objs, strong=False):
    """Endofunctors q = inclusion∘retraction onto the full subcategory on
    ``sub_objs``, paired with their one-step direction.

    Yields (q, direction) with direction "future" for id -> q and "past"
    for q -> id; ``strong`` additionally requires the transformation to be
    an identity on the subcategory's objects.
    """
    sub = set(sub_objs)
    objs = list(cat.objects)
    non_id = sorted(cat.non_identity_arrows())
    omap = {}
    for x in objs:
        if x in sub:
            omap[x] = x
    free = [x for x in objs if x not in sub]
    ident = identity_functor(cat)
    fixed = {x: cat.identity[x] for x in sub} if strong else None

    for images in iter_product(sorted(sub), repeat=len(free)):
        omap.update(zip(free, images))
        amap = {cat.identity[x]: cat.identity[omap[x]] for x in objs}
        for a in non_id:
            s, t = cat.arrows[a]
            if s in sub and t in sub:
                amap[a] = a

        results = []

        def consistent(new):
            for (u, v), w in cat.table.items():
                if new not in (u, v, w):
                    continue
                if u in amap and v in amap and w in amap:
                    if cat.table.get((amap[u], amap[v])) != amap[w]:
                        return False
            return True

        def rec(i):
            if i == len(non_id):
                results.append(FunctorMap(cat, cat, dict(omap), dict(amap)))
                return
            a = non_id[i]
            if a in amap:
                if consistent(a):
                    rec(i + 1)
                return
            s, t = cat.arrows[a]
            for h in cat.hom(omap[s], omap[t]):
                amap[a] = h
                if consistent(a):
                    rec(i + 1)
                del amap[a]

        rec(0)
        for q in results:
            if exists_nat_transformation(ident, q, fixed=fixed):
                yield q, "future"
            if exists_nat_transformation(q, ident, fixed=fixed):
                yield q, "past"


def _is_trivial_point(cat, obj):
    return len(cat.hom(obj, obj)) == 1


def contractible_in_steps(cat, n, max_objects=MAX_OBJECTS, max_arrows=MAX_ARROWS):
    """Whether a chain of <= n immediate deformation-retract steps shrinks
    the category, through full subcategories, down to a single object with
    only its identity endoarrow."""
    _guard(cat, max_objects, max_arrows)
    require_category(cat)
    if n < 0:
        raise DomainError("step count must be >= 0")
    memo = {}

    def min_steps(objs, budget):
        if len(objs) == 1:
            (v,) = objs
            return 0 if _is_trivial_point(cat, v) else None
        if budget <= 0:
            return None
        if objs in memo and memo[objs] is not None:
            return memo[objs]
        sub_cat = full_subcategory(cat, objs)
        best = None
        for keep in _proper_subsets(sorted(objs)):
            found = False
            for _q, _dir in retract_endofunctors(sub_cat, keep):
                found = True
                break
            if not found:
                continue
            rest = min_steps(frozenset(keep), budget - 1)
            if rest is not None:
                cand = rest + 1
                if best is None or cand < best:
                    best = cand
        memo[objs] = best
        return best

    steps = min_steps(frozenset(cat.objects), n)
    return steps is not None and steps <= n


def _proper_subsets(items):
    n = len(items)
    for mask in range(1, (1 << n) - 1):
        yield tuple(items[i] for i in range(n) if mask & (1 << i))


# ---------------------------------------------------------------------------
# faithfulness and cancellation


def is_faithful(fun):
    c = fun.domain
    for x in c.objects:
        for y in c.objects:
            seen = {}
            for a in c.hom(x, y):
                fa = fun.arr(a)
                if fa in seen:
                    return False
                seen[fa] = a
    return True


def cancellable_arrows(cat):
    """Arrows that are both mono and epi, found by exhausting the table."""
    out = set()
    for m, (my, mz) in cat.arrows.items():
        mono = True
        for x in cat.objects:
            hs = cat.hom(x, my)
            for i, f in enumerate(hs):
                for g in hs[i + 1 :]:
                    if cat.compose(f, m) == cat.compose(g, m):
                        mono = False
                        break
                if not mono:
                    break
            if not mono:
                break
        if not mono:
            continue
        epi = True
        for z in cat.objects:
            hs = cat.hom(mz, z)
            for i, f in enumerate(hs):
                for g in hs[i + 1 :]:
                    if cat.compose(m, f) == cat.compose(m, g):
                        epi = False
                        break
                if not epi:
                    break
            if not epi:
                break
        if epi:
            out.add(m)
    return frozenset(out)


# ---------------------------------------------------------------------------
# presentations: morphisms, pushouts, realization


@dataclass(frozen=True)
class PresentationMorphism:
    """Object map plus generator-to-word map between presentations."""

    source: CatPresentation
    target: CatPresentation
    obj_map: dict
    gen_map: dict

    def obj(self, x):
        return self.obj_map[x]

    def word(self, gens):
        out = []
        for g in gens:
            out.extend(self.gen_map[g])
        return tuple(out)


def _length_preserving(pres):
    return all(len(u) == len(v) for u, v in pres.relations)


def _word_swap_class(pres, word, max_words=MAX_WORDS):
    """BFS closure of a word under relation substitutions.

    Finite (and used) only when all relations preserve length.
    """
    seen = {tuple(word)}
    queue = deque(seen)
    while queue:
        w = queue.popleft()
        for u, v in pres.relations:
            for a, b in ((u, v), (v, u)):
                la = len(a)
                for i in range(len(w) - la + 1):
                    if w[i : i + la] == a:
                        w2 = w[:i] + b + w[i + la :]
                        if w2 not in seen:
                            seen.add(w2)
                            if len(seen) > max_words:
                                raise EnumerationLimitError("swap closure too large")
                            queue.append(w2)
    return seen


def check_presentation_morphism(morph):
    """Violations list: totality, endpoint preservation, relation preservation
    (decided by swap closure when the target's relations preserve length)."""
    out = []
    src, tgt = morph.source, morph.target
    out.extend(f"source: {v}" for v in validate_presentation(src))
    out.extend(f"target: {v}" for v in validate_presentation(tgt))
    if out:
        return out
    tobj = set(tgt.objects)
    for x in src.objects:
        if morph.obj_map.get(x) not in tobj:
            out.append(f"object {x}: image missing or unknown")
    for g, (s, t) in src.generators.items():
        w = morph.gen_map.get(g)
        if not w:
            out.append(f"generator {g}: image word missing or empty")
            continue
        try:
            ends = tgt.word_endpoints(tuple(w))
        except DomainError as exc:
            out.append(f"generator {g}: image {exc}")
            continue
        if ends != (morph.obj_map.get(s), morph.obj_map.get(t)):
            out.append(f"generator {g}: image word has wrong endpoints")
    if out:
        return out
    lp = _length_preserving(tgt)
    for i, (u, v) in enumerate(src.relations):
        wu, wv = morph.word(u), morph.word(v)
        if wu == wv:
            continue
        if not lp:
            out.append(
                f"relation {i}: preservation undecided "
                "(target has length-changing relations)"
            )
        elif wv not in _word_swap_class(tgt, wu):
            out.append(f"relation {i}: image words are not equivalent in the target")
    return out


def require_morphism(morph):
    violations = check_presentation_morphism(morph)
    if violations:
        raise DomainError("ill-formed presentation morphism: " + "; ".join(violations[:5]))
    return morph


@dataclass(frozen=True)
class Pushout:
    presentation: CatPresentation
    left: PresentationMorphism
    right: PresentationMorphism


def pushout(p0, p1, p2, u1, u2):
    """Glue p1 and p2 along p0.

    Objects are the disjoint (1:/2:-tagged) union of p1's and p2's objects
    modulo u1(x) ~ u2(x); generators are the tagged union; relations are
    both sides' relations plus (u1(a), u2(a)) per generator a of p0.  Merged
    objects are named by their lexicographically least tag.
    """
    if u1.source is not p0 and u1.source != p0:
        raise DomainError("u1 does not start at p0")
    if u2.source is not p0 and u2.source != p0:
        raise DomainError("u2 does not start at p0")
    require_morphism(u1)
    require_morphism(u2)
    tagged = [f"1:{x}" for x in p1.objects] + [f"2:{x}" for x in p2.objects]
    parent = {t: t for t in tagged}

    def find(t):
        while parent[t] != t:
            parent[t] = parent[parent[t]]
            t = parent[t]
        return t

    def union_(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            if ra > rb:
                ra, rb = rb, ra
            parent[rb] = ra

    for x in p0.objects:
        union_(f"1:{u1.obj(x)}", f"2:{u2.obj(x)}")
    cls = {t: find(t) for t in tagged}

    objects = sorted(set(cls.values()))
    gens = {}
    for g, (s, t) in p1.generators.items():
        gens[f"1:{g}"] = (cls[f"1:{s}"], cls[f"1:{t}"])
    for g, (s, t) in p2.generators.items():
        gens[f"2:{g}"] = (cls[f"2:{s}"], cls[f"2:{t}"])

    def tag_word(word, side):
        return tuple(f"{side}:{g}" for g in word)

    relations = [
        (tag_word(u, "1"), tag_word(v, "1")) for u, v in p1.relations
    ] + [(tag_word(u, "2"), tag_word(v, "2")) for u, v in p2.relations]
    for a in sorted(p0.generators):
        relations.append((tag_word(u1.gen_map[a], "1"), tag_word(u2.gen_map[a], "2")))

    pres = CatPresentation(tuple(objects), gens, tuple(relations))
    left = PresentationMorphism(
        p1,
        pres,
        {x: cls[f"1:{x}"] for x in p1.objects},
        {g: (f"1:{g}",) for g in p1.generators},
    )
    right = PresentationMorphism(
        p2,
        pres,
        {x: cls[f"2:{x}"] for x in p2.objects},
        {g: (f"2:{g}",) for g in p2.generators},
    )
    return Pushout(pres, left, right)


def _presentation_acyclic(pres):
    color = {}
    out = {}
    for g, (s, t) in pres.generators.items():
        out.setdefault(s, []).append(t)
    for root in pres.objects:
        if color.get(root):
            continue
        stack = [(root, iter(out.get(root, ())))]
        color[root] = 1
        while stack:
            v, it = stack[-1]
            advanced = False
            for w in it:
                c = color.get(w)
                if c == 1:
                    return False
                if c is None:
                    color[w] = 1
                    stack.append((w, iter(out.get(w, ()))))
                    advanced = True
                    break
            if not advanced:
                color[v] = 2
                stack.pop()
    return True


class Realization:
    """Hom-sets of a presented category as swap classes of generator words.

    Complete when the generator graph is acyclic and no bound cuts the
    enumeration short; otherwise ``truncated`` is set and hom-sets only
    cover words up to the length bound.
    """

    def __init__(self, presentation, bound, truncated, homs, class_of):
        self.presentation = presentation
        self.bound = bound
        self.truncated = truncated
        self.objects = presentation.objects
        self.homs = homs  # (x, y) -> tuple of canonical representative words
        self._class_of = class_of  # (start, word) -> canonical word

    def hom_reps(self, x, y):
        return self.homs.get((x, y), ())

    def hom_count(self, x, y):
        return len(self.hom_reps(x, y))

    def class_of(self, start, word):
        return self._class_of[(start, tuple(word))]

    def to_fincategory(self):
        """Explicit category with one arrow per class; complete mode only."""
        if self.truncated:
            raise DomainError("truncated realization does not form a category")
        arrows, identity = {}, {}
        for (x, y), reps in self.homs.items():
            for w in reps:
                arrows[_arrow_name(x, w)] = (x, y)
        for x in self.objects:
            identity[x] = _arrow_name(x, ())
        table = {}
        for (x, y), reps in self.homs.items():
            for w1 in reps:
                for (y2, z), reps2 in self.homs.items():
                    if y2 != y:
                        continue
                    for w2 in reps2:
                        w = self.class_of(x, w1 + w2)
                        table[(_arrow_name(x, w1), _arrow_name(y, w2))] = _arrow_name(x, w)
        return FinCategory(self.objects, arrows, identity, table)


def _arrow_name(start, word):
    return f"id({start})" if not word else ";".join(word)


def realize_presentation(pres, bound=None, max_words=MAX_WORDS):
    """Enumerate generator words (fully if acyclic, else up to ``bound``)
    and partition them by relation swaps."""
    bad = validate_presentation(pres)
    if bad:
        raise DomainError("invalid presentation: " + "; ".join(bad[:5]))
    acyclic = _presentation_acyclic(pres)
    if bound is None and not acyclic:
        raise DomainError("cyclic presentation needs a length bound")
    if bound is not None and not acyclic and not _length_preserving(pres):
        raise DomainError("length-changing relation in truncated mode")

    out_gens = {}
    for g, (s, t) in sorted(pres.generators.items()):
        out_gens.setdefault(s, []).append(g)

    words = {}  # (x, y) -> list of words, lexicographic
    total = [0]

    def visit(start, at, word):
        words.setdefault((start, at), []).append(tuple(word))
        total[0] += 1
        if total[0] > max_words:
            raise EnumerationLimitError(f"more than {max_words} words enumerated")
        if bound is not None and len(word) >= bound:
            return
        for g in out_gens.get(at, ()):
            word.append(g)
            visit(start, pres.gen_tgt(g), word)
            word.pop()

    for x in pres.objects:
        visit(x, x, [])

    if bound is None:
        truncated = False
    elif acyclic:
        # a bound covering the longest generator path cuts nothing off
        truncated = _has_cut_words(pres, out_gens, bound)
    else:
        truncated = True

    homs = {}
    class_of = {}
    moves = pres.relations
    for (x, y), ws in sorted(words.items()):
        index = {w: i for i, w in enumerate(ws)}
        parent = list(range(len(ws)))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        def union_(a, b):
            ra, rb = find(a), find(b)
            if ra != rb:
                if ra > rb:
                    ra, rb = rb, ra
                parent[rb] = ra

        for i, w in enumerate(ws):
            for u, v in moves:
                for a, b in ((u, v), (v, u)):
                    la = len(a)
                    for pos in range(len(w) - la + 1):
                        if w[pos : pos + la] == a:
                            w2 = w[:pos] + b + w[pos + la :]
                            j = index.get(w2)
                            if j is not None:
                                union_(i, j)
        groups = {}
        for i in range(len(ws)):
            groups.setdefault(find(i), []).append(i)
        reps = tuple(ws[r] for r in sorted(groups))
        homs[(x, y)] = reps
        for r, members in groups.items():
            for m in members:
                class_of[(x, ws[m])] = ws[r]
    return Realization(pres, bound, truncated, homs, class_of)


def _has_cut_words(pres, out_gens, bound):
    """True if some word of length bound can still be extended (acyclic case:
    compare the bound against the longest generator path)."""
    longest = {}

    def lp(v):
        if v in longest:
            return longest[v]
        best = 0
        for g in out_gens.get(v, ()):
            best = max(best, 1 + lp(pres.gen_tgt(g)))
        longest[v] = best
        return best

    return any(lp(x) > bound for x in pres.objects)


# ---------------------------------------------------------------------------
# random instances for property testing


def random_category(rng, max_objects=4):
    """Seeded random small category: a random poset or a random monoid
    table (rejection-sampled for associativity, with a cyclic-group
    fallback)."""
    if rng.random() < 0.6:
        n = rng.randint(1, max_objects)
        els = [f"o{i}" for i in range(n)]
        pairs = []
        for i in range(n):
            for j in range(i + 1, n):
                if rng.random() < 0.5:
                    pairs.append((els[i], els[j]))
        return poset_category(els, pairs)
    n = rng.randint(1, 3)
    els = [f"m{i}" for i in range(n)]
    unit = els[0]
    for _attempt in range(200):
        mul = {}
        for a in els:
            for b in els:
                if a == unit:
                    mul[(a, b)] = b
                elif b == unit:
                    mul[(a, b)] = a
                else:
                    mul[(a, b)] = els[rng.randrange(n)]
        if _associative(els, mul):
            return monoid_category(els, unit, mul)
    mul = {(els[i], els[j]): els[(i + j) % n] for i in range(n) for j in range(n)}
    return monoid_category(els, unit, mul)


def _associative(els, mul):
    for a in els:
        for b in els:
            for c in els:
                if mul[(mul[(a, b)], c)] != mul[(a, mul[(b, c)])]:
                    return False
    return True


# ---------------------------------------------------------------------------
# text formats


def parse_category(text):
    """Category file: ``object <id>``, ``arrow <id> <src> <tgt>``,
    ``compose <f> <g> = <h>``; identities are implicit per object."""

    objects, arrows, compose = [], {}, {}
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        if tok[0] == "object":
            if len(tok) != 2:
                raise InputSyntaxError("object wants 1 field", ln)
            objects.append(tok[1])
        elif tok[0] == "arrow":
            if len(tok) != 4:
                raise InputSyntaxError("arrow wants 3 fields", ln)
            if tok[1] in arrows:
                raise InputSyntaxError(f"duplicate arrow id {tok[1]}", ln)
            arrows[tok[1]] = (tok[2], tok[3])
        elif tok[0] == "compose":
            if len(tok) != 5 or tok[3] != "=":
                raise InputSyntaxError("compose wants: compose <f> <g> = <h>", ln)
            compose[(tok[1], tok[2])] = tok[4]
        else:
            raise InputSyntaxError(f"unknown directive {tok[0]!r}", ln)
    return FinCategory.build(objects, arrows, compose)


def format_category(cat):
    """Canonical category file.

    Identities are implicit: lines composing with an identity are dropped,
    and an identity appearing as a composite is written ``id(<object>)``,
    the name the parser synthesizes.
    """
    lines = [f"object {x}" for x in cat.objects]
    for a in sorted(cat.non_identity_arrows()):
        s, t = cat.arrows[a]
        lines.append(f"arrow {a} {s} {t}")
    ids = set(cat.identity.values())
    for (f, g), h in sorted(cat.table.items()):
        if f in ids or g in ids:
            continue
        if h in ids:
            h = f"id({cat.src(h)})"
        lines.append(f"compose {f} {g} = {h}")
    return "\n".join(lines) + ("\n" if lines else "")


def parse_presentation(text):
    """Presentation file: ``object <id>``, ``gen <id> <src> <tgt>``,
    ``rel <word> = <word>`` with ;-separated generator words."""

    objects, gens, rels = [], {}, []
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        if tok[0] == "object":
            if len(tok) != 2:
                raise InputSyntaxError("object wants 1 field", ln)
            objects.append(tok[1])
        elif tok[0] == "gen":
            if len(tok) != 4:
                raise InputSyntaxError("gen wants 3 fields", ln)
            if tok[1] in gens:
                raise InputSyntaxError(f"duplicate generator id {tok[1]}", ln)
            gens[tok[1]] = (tok[2], tok[3])
        elif tok[0] == "rel":
            if len(tok) != 4 or tok[2] != "=":
                raise InputSyntaxError("rel wants: rel <word> = <word>", ln)
            rels.append((tuple(tok[1].split(";")), tuple(tok[3].split(";"))))
        else:
            raise InputSyntaxError(f"unknown directive {tok[0]!r}", ln)
    pres = CatPresentation(tuple(sorted(objects)), gens, tuple(rels))
    bad = validate_presentation(pres)
    if bad:
        raise InputSyntaxError("; ".join(bad))
    return pres


def format_presentation(pres):
    lines = [f"object {x}" for x in sorted(pres.objects)]
    for g, (s, t) in sorted(pres.generators.items()):
        lines.append(f"gen {g} {s} {t}")
    rels = sorted(tuple(sorted((u, v))) for u, v in pres.relations)
    for u, v in rels:
        lines.append(f"rel {';'.join(u)} = {';'.join(v)}")
    return "\n".join(lines) + ("\n" if lines else "")


def parse_functor(text, resolve):
    """Functor file: ``domain <ref>``, ``codomain <ref>``, then
    ``object <x> <Fx>`` and ``arrow <f> <Ff>`` lines; identity images are
    implied.  ``resolve`` maps a category reference to a FinCategory."""

    dom = cod = None
    omap, amap = {}, {}
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        if tok[0] == "domain":
            if len(tok) != 2:
                raise InputSyntaxError("domain wants 1 field", ln)
            dom = resolve(tok[1])
        elif tok[0] == "codomain":
            if len(tok) != 2:
                raise InputSyntaxError("codomain wants 1 field", ln)
            cod = resolve(tok[1])
        elif tok[0] == "object":
            if len(tok) != 3:
                raise InputSyntaxError("object wants 2 fields", ln)
            omap[tok[1]] = tok[2]
        elif tok[0] == "arrow":
            if len(tok) != 3:
                raise InputSyntaxError("arrow wants 2 fields", ln)
            amap[tok[1]] = tok[2]
        else:
            raise InputSyntaxError(f"unknown directive {tok[0]!r}", ln)
    if dom is None or cod is None:
        raise InputSyntaxError("functor file needs domain and codomain lines")
    for x in dom.objects:
        if x not in omap:
            raise InputSyntaxError(f"functor misses object {x}")
    for x, fx in omap.items():
        if x in dom.objects and fx in cod.objects:
            amap.setdefault(dom.identity[x], cod.identity[fx])
    return FunctorMap(dom, cod, omap, amap)


def parse_presentation_morphism(text, source, target):
    """Morphism file: ``object <x> <image>``, ``gen <g> <word>`` with a
    ;-separated nonempty image word."""

    omap, gmap = {}, {}
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        if tok[0] == "object":
            if len(tok) != 3:
                raise InputSyntaxError("object wants 2 fields", ln)
            omap[tok[1]] = tok[2]
        elif tok[0] == "gen":
            if len(tok) != 3:
                raise InputSyntaxError("gen wants 2 fields", ln)
            gmap[tok[1]] = tuple(tok[2].split(";"))
        else:
            raise InputSyntaxError(f"unknown directive {tok[0]!r}", ln)
    return PresentationMorphism(source, target, omap, gmap)
