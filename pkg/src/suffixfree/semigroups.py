"""Transformation-semigroup machinery for suffix-free languages.

Three families of transformations of {0,...,n-1} matter here, all with
a distinguished sink n-1:

* bsf(n): the necessary conditions satisfied by every element of the
  transition semigroup of a minimal suffix-free DFA.  Not closed under
  composition for n >= 4.
* vsf(n): bsf elements injective except into the sink.
* wsf(n): bsf elements that either kill state 0 or kill every middle
  state; |wsf(n)| = (n-1)**(n-2) + (n-2).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .automata import BudgetError, Dfa, Transformation, minimize

BSF = "bsf"
VSF = "vsf"
WSF = "wsf"

#: Default cap on closure degree; larger degrees need allow_large=True.
MAX_CLOSURE_DEGREE = 8
#: Default cap on exhaustive n**n enumeration.
MAX_ENUMERATION_DEGREE = 8


@dataclass(frozen=True)
class TransitionSemigroup:
    """A finite set of transformations closed under composition."""

    degree: int
    elements: frozenset
    generators: tuple = None

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, t) -> bool:
        return tuple(t) in self.elements

    def sorted_elements(self) -> list:
        """Elements in lexicographic image order (deterministic reports)."""
        return sorted(self.elements)


@dataclass(frozen=True)
class ZeroPath:
    """The orbit 0, 0t, 0t**2, ... of a transformation, up to the first
    repetition."""

    states: tuple
    period: int

    @property
    def aperiodic(self) -> bool:
        return self.period == 1

    @property
    def end(self) -> int:
        return self.states[-1]


def zero_path(t: Transformation) -> ZeroPath:
    seen = {0: 0}
    path = [0]
    q = 0
    while True:
        q = t[q]
        if q in seen:
            return ZeroPath(tuple(path), len(path) - seen[q])
        seen[q] = len(path)
        path.append(q)


def in_bsf(t) -> bool:
    """Necessary suffix-free conditions: 0 not in the range, the sink is
    fixed, and at no power j does the 0-path meet the image of a middle
    state (unless it has already reached the sink).

    The quantifier over j >= 1 is evaluated for j = 1..n: the 0-path
    either reaches n-1 within n steps (after which every j passes), or
    a violation occurs at or before its stabilization.
    """
    n = len(t)
    if n < 2:
        raise ValueError("degree must be >= 2")
    if t[n - 1] != n - 1 or 0 in t:
        return False
    sink = n - 1
    cur = tuple(t)
    for _ in range(n):
        x = cur[0]
        if x == sink:
            return True
        for q in range(1, sink):
            if cur[q] == x:
                return False
        cur = tuple(t[c] for c in cur)
    return True


def in_vsf(t) -> bool:
    """bsf membership plus injectivity away from the sink."""
    n = len(t)
    if not in_bsf(t):
        return False
    seen = set()
    for q in range(n):
        x = t[q]
        if x != n - 1:
            if x in seen:
                return False
            seen.add(x)
    return True


def in_wsf(t) -> bool:
    """bsf membership plus: 0 goes to the sink, or every middle state does."""
    n = len(t)
    if not in_bsf(t):
        return False
    if t[0] == n - 1:
        return True
    return all(t[q] == n - 1 for q in range(1, n - 1))


_PREDICATE = {BSF: in_bsf, VSF: in_vsf, WSF: in_wsf}


def generate(degree: int, generators, names=None, allow_large: bool = False,
             max_elements: int = None) -> TransitionSemigroup:
    """Smallest composition-closed set containing the generators.

    Worklist closure by right-composition; element discovery order is
    BFS with generators in the given order.  Degrees >= 9 are rejected
    unless allow_large is set (the full wsf(9) closure alone has
    8**7 + 7 elements).
    """
    gens = [Transformation(g) for g in generators]
    for g in gens:
        if g.degree != degree:
            raise ValueError(f"generator degree {g.degree} != {degree}")
    if degree > MAX_CLOSURE_DEGREE and not allow_large:
        raise BudgetError(
            f"closure at degree {degree} exceeds the default budget "
            f"(max {MAX_CLOSURE_DEGREE}); pass allow_large=True to override")
    elements = {}
    queue = []
    for g in gens:
        if g not in elements:
            elements[g] = None
            queue.append(tuple(g))
    raw_gens = [tuple(g) for g in gens]
    seen = set(queue)
    i = 0
    while i < len(queue):
        t = queue[i]
        i += 1
        for g in raw_gens:
            u = tuple(g[x] for x in t)
            if u not in seen:
                seen.add(u)
                queue.append(u)
                if max_elements is not None and len(seen) > max_elements:
                    raise BudgetError(
                        f"closure exceeded max_elements={max_elements}")
    named = None
    if names is not None:
        named = tuple(zip(names, gens))
    elif gens:
        named = tuple((f"g{i}", g) for i, g in enumerate(gens))
    return TransitionSemigroup(
        degree=degree,
        elements=frozenset(Transformation(t) for t in seen),
        generators=named,
    )


def _sink_last(d: Dfa) -> Dfa:
    """Renumber so the empty (rejecting sink) state, if any, is n-1.

    Minimization numbers states in BFS order, which typically places
    the sink early; the class predicates expect the suffix-free
    convention with the sink last.  Middle states keep their BFS order,
    so the transformations change only by a conjugation fixing 0."""
    n = d.state_count
    sinks = [
        q for q in range(n)
        if q not in d.finals and all(d.delta[a][q] == q for a in d.alphabet)
    ]
    if len(sinks) != 1 or sinks[0] == n - 1:
        return d
    order = [q for q in range(n) if q != sinks[0]] + sinks
    new_of = {old: new for new, old in enumerate(order)}
    delta = {
        a: Transformation(
            tuple(new_of[d.delta[a][old]] for old in order))
        for a in d.alphabet
    }
    finals = frozenset(new_of[q] for q in d.finals)
    return Dfa(n, d.alphabet, delta, new_of[d.initial], finals)


def transition_semigroup(d: Dfa, allow_large: bool = False,
                         max_elements: int = None) -> TransitionSemigroup:
    """Transition semigroup of the minimal DFA of d's language, with the
    empty state (if present) numbered last."""
    m = _sink_last(minimize(d))
    return generate(
        m.state_count,
        [m.delta[a] for a in m.alphabet],
        names=list(m.alphabet),
        allow_large=allow_large,
        max_elements=max_elements,
    )


def enumerate_class(n: int, cls: str, check_closed: bool = None) -> frozenset:
    """All degree-n transformations passing the class predicate.

    For VSF/WSF the result can be verified closed under composition
    (automatic for n <= 5; for larger n the quadratic check is opt-in).
    BSF is never checked: it is not a semigroup for n >= 4.
    """
    if cls not in _PREDICATE:
        raise ValueError(f"unknown class {cls!r}")
    if n > MAX_ENUMERATION_DEGREE:
        raise BudgetError(
            f"enumeration at degree {n} means {n}**{n} candidates; "
            f"max degree is {MAX_ENUMERATION_DEGREE}")
    pred = _PREDICATE[cls]
    hits = [t for t in product(range(n), repeat=n) if pred(t)]
    if check_closed is None:
        check_closed = cls != BSF and n <= 5
    if check_closed:
        if cls == BSF:
            raise ValueError("bsf is not closed under composition; "
                             "closure cannot be asserted")
        members = set(hits)
        for s in hits:
            for t in hits:
                if tuple(t[q] for q in s) not in members:
                    raise AssertionError(
                        f"{cls} not closed: {s} * {t} escapes")
    return frozenset(Transformation(t) for t in hits)


def is_subsemigroup_of(s: TransitionSemigroup, cls: str) -> bool:
    """True iff every element passes the class membership predicate."""
    pred = _PREDICATE[cls]
    return all(pred(t) for t in s.elements)


def colliding_pairs(s: TransitionSemigroup) -> frozenset:
    """Unordered middle-state pairs {p,q} such that some element sends 0
    to p while sending another middle state to q."""
    n = s.degree
    pairs = set()
    for t in s.elements:
        p = t[0]
        if p == n - 1 or p == 0:
            continue
        for r in range(1, n - 1):
            q = t[r]
            if q not in (n - 1, 0) and q != p:
                pairs.add((min(p, q), max(p, q)))
    return frozenset(pairs)


def focused_pairs(s: TransitionSemigroup) -> frozenset:
    """Unordered middle-state pairs merged by some element into a common
    middle (non-sink, non-initial) state."""
    n = s.degree
    pairs = set()
    for t in s.elements:
        targets: dict = {}
        for q in range(1, n - 1):
            targets.setdefault(t[q], []).append(q)
        for r, qs in targets.items():
            if r in (0, n - 1):
                continue
            for i in range(len(qs)):
                for j in range(i + 1, len(qs)):
                    pairs.add((qs[i], qs[j]))
    return frozenset(pairs)


def _cycle(image: list, states) -> None:
    states = list(states)
    if len(states) >= 2:
        for i, q in enumerate(states):
            image[q] = states[(i + 1) % len(states)]


def vsf_generators(n: int) -> tuple:
    """The named generating set of vsf(n): the middle-cycle a, the
    transposition b and the n-2 maps c_p = (p -> n-1)(0 -> p).

    For n = 4, a and b coincide and b is dropped; the small cases n = 2
    and n = 3 degenerate further.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    if n == 2:
        # c1 degenerates to the single map 0 -> sink.
        return (("c1", Transformation((1, 1))),)
    cs = []
    for p in range(1, n - 1):
        c = list(range(n))
        c[p] = n - 1
        c[0] = p
        cs.append((f"c{p}", Transformation(c)))
    a = list(range(n))
    a[0] = n - 1
    _cycle(a, range(1, n - 1))
    named = [("a", Transformation(a))]
    if n >= 5:
        b = list(range(n))
        b[0] = n - 1
        _cycle(b, (1, 2))
        named.append(("b", Transformation(b)))
    return tuple(named + cs)


def wsf_generators(n: int) -> tuple:
    """The named generating set of wsf(n): a, b as for vsf plus
    c = (0 -> n-1)(n-2 -> 1), d = ({0,1} -> n-1) and
    e = (Q \\ {0} -> n-1)(0 -> 1).

    For n = 4, a and b coincide and b is dropped; n = 2 and n = 3
    degenerate to {e} and {a, e}.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    e = [n - 1] * n
    e[0] = 1
    if n == 2:
        return (("e", Transformation(e)),)
    a = list(range(n))
    a[0] = n - 1
    _cycle(a, range(1, n - 1))
    if n == 3:
        return (("a", Transformation(a)), ("e", Transformation(e)))
    b = list(range(n))
    b[0] = n - 1
    _cycle(b, (1, 2))
    c = list(range(n))
    c[0] = n - 1
    c[n - 2] = 1
    d = list(range(n))
    d[0] = d[1] = n - 1
    named = [("a", Transformation(a))]
    if n >= 5:
        named.append(("b", Transformation(b)))
    named += [("c", Transformation(c)), ("d", Transformation(d)),
              ("e", Transformation(e))]
    return tuple(named)


def wsf_cardinality(n: int) -> int:
    """(n-1)**(n-2) + (n-2), the size of wsf(n) for n >= 4."""
    return (n - 1) ** (n - 2) + (n - 2)
