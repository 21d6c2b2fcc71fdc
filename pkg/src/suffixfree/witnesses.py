"""Constructors for the witness DFA families, reproduced with their
published state numbering (no minimization or renumbering), plus the
predecessor words used in the ternary product argument, exposed as a
checkable oracle.

Families:

* d5(n), n >= 6: the ternary witness for star, product and boolean
  operations; transition semigroup inside vsf(n).
* d6(n), n >= 4: the quinary witness for boolean operations, reversal,
  syntactic complexity and atom complexities; transition semigroup is
  wsf(n).
* binary_product_pair(m, n): the two-letter pair meeting the product
  bound when m-2 and n-2 are relatively prime.
"""

from __future__ import annotations

from dataclasses import dataclass

from .automata import Dfa, Transformation, word_transformation
from .langops import PartialPermutation, apply_dialect
from .semigroups import _cycle


def _identity(n: int) -> list:
    return list(range(n))


def _d5_roles(n: int) -> dict:
    a = _identity(n)
    a[0] = n - 1
    _cycle(a, (1, 2, 3))
    _cycle(a, range(4, n - 1))
    b = _identity(n)
    b[2] = n - 1
    b[1] = 2
    b[0] = 1
    _cycle(b, (3, 4))
    c = _identity(n)
    c[0] = n - 1
    _cycle(c, range(1, n - 1))
    return {"a": Transformation(a), "b": Transformation(b), "c": Transformation(c)}


def d5(n: int, dialect: str = None) -> Dfa:
    """The ternary witness: roles a = (0 -> n-1)(1,2,3)(4,...,n-2),
    b = (2 -> n-1)(1 -> 2)(0 -> 1)(3,4), c = (0 -> n-1)(1,...,n-2);
    initial 0, final state 1.

    A dialect string such as "a,b,-" reassigns (or drops) the three
    roles in order.
    """
    if n < 6:
        raise ValueError("d5 is defined for n >= 6")
    roles = _d5_roles(n)
    base = Dfa(n, ("a", "b", "c"), roles, 0, {1})
    if dialect is None:
        return base
    return apply_dialect(base, PartialPermutation.parse(dialect, base.alphabet))


def _d6_roles(n: int) -> dict:
    a = _identity(n)
    a[0] = n - 1
    _cycle(a, range(1, n - 1))
    b = _identity(n)
    b[0] = n - 1
    _cycle(b, (1, 2))
    c = _identity(n)
    c[0] = n - 1
    c[n - 2] = 1
    d = _identity(n)
    d[0] = d[1] = n - 1
    e = [n - 1] * n
    e[0] = 1
    return {
        "a": Transformation(a),
        "b": Transformation(b),
        "c": Transformation(c),
        "d": Transformation(d),
        "e": Transformation(e),
    }


def d6(n: int, dialect: str = None) -> Dfa:
    """The quinary witness: roles a = (0 -> n-1)(1,...,n-2),
    b = (0 -> n-1)(1,2), c = (0 -> n-1)(n-2 -> 1), d = ({0,1} -> n-1),
    e = (Q \\ {0} -> n-1)(0 -> 1); finals are the odd middle states.

    At n = 4 roles a and b coincide, so the undialected automaton is
    built over {b,c,d,e}.  Dialect strings always have five entries,
    one per role; at n = 4 the role "a" still resolves (to the shared
    a/b transformation).
    """
    if n < 4:
        raise ValueError("d6 is defined for n >= 4")
    roles = _d6_roles(n)
    finals = frozenset(q for q in range(1, n - 1) if q % 2 == 1)
    if dialect is None:
        letters = ("b", "c", "d", "e") if n == 4 else ("a", "b", "c", "d", "e")
        return Dfa(n, letters, {x: roles[x] for x in letters}, 0, finals)
    parts = [p.strip() for p in dialect.split(",")]
    if len(parts) != 5:
        raise ValueError(f"d6 dialect needs 5 entries, got {dialect!r}")
    alphabet = []
    delta = {}
    defined = [p for p in parts if p != "-"]
    if len(set(defined)) != len(defined):
        raise ValueError("defined part of a dialect must be injective")
    if not set(defined) <= {"a", "b", "c", "d", "e"}:
        raise ValueError("dialect letters must come from a..e")
    for role, letter in zip("abcde", parts):
        if letter == "-":
            continue
        alphabet.append(letter)
        delta[letter] = roles[role]
    return Dfa(n, alphabet, delta, 0, finals)


def binary_product_pair(m: int, n: int):
    """The binary product witnesses (left primed automaton, right
    automaton).  Unspecified transitions go to the sink, (m-1)' on the
    left and n-1 on the right."""
    if m < 6:
        raise ValueError("left witness needs m >= 6")
    if n < 3:
        raise ValueError("right witness needs n >= 3")
    a1 = _identity(m)
    a1[0] = m - 1
    _cycle(a1, range(1, m - 1))
    b1 = [m - 1] * m
    b1[0] = 1
    b1[2] = 2
    left = Dfa(m, ("a", "b"), {"a": a1, "b": b1}, 0, {2, 4})
    a2 = _identity(n)
    a2[0] = n - 1
    _cycle(a2, range(1, n - 1))
    # b on the right loops on every state of {2,...,n-2} (the drawn
    # loops at 2 and n-2 bracket the whole dotted range); only state 1
    # falls to the sink.  With fewer loops the coprime pairs cannot
    # accumulate arbitrary subsets and the product bound is unreachable.
    b2 = _identity(n)
    b2[0] = 1
    b2[1] = n - 1
    right = Dfa(n, ("a", "b"), {"a": a2, "b": b2}, 0, {1})
    return left, right


def pred_word(q: int, n: int) -> str:
    """The predecessor word w_q over {a,b,c} for middle state q:
    cab^2 (q=1), ca (q=2), cab^4 (q=3), cab^2 a^3 b^(q-4) for even
    q >= 4, and ca^4 b^(q-5) for odd q >= 5."""
    if n < 6:
        raise ValueError("predecessor words are defined for n >= 6")
    if not 1 <= q <= n - 2:
        raise ValueError(f"q must be a middle state 1..{n - 2}")
    if q == 1:
        return "cabb"
    if q == 2:
        return "ca"
    if q == 3:
        return "cabbbb"
    if q % 2 == 0:
        return "cabbaaa" + "b" * (q - 4)
    return "caaaa" + "b" * (q - 5)


@dataclass(frozen=True)
class PredWordCheck:
    """Outcome of checking one predecessor word on the product setting:
    the word sends 1' to 3' in the primed d5(n), sends 0 to q in the
    (b,c,a) dialect, and gives every middle state other than q a unique
    predecessor among the middle states."""

    q: int
    n: int
    word: str
    maps_one_to_three: bool
    maps_zero_to_q: bool
    unique_predecessors: bool

    @property
    def ok(self) -> bool:
        return (self.maps_one_to_three and self.maps_zero_to_q
                and self.unique_predecessors)


def verify_pred_word(q: int, n: int) -> PredWordCheck:
    w = pred_word(q, n)
    left = d5(n)
    right = d5(n, "b,c,a")
    t_left = word_transformation(left, w)
    t_right = word_transformation(right, w)
    middles = range(1, n - 1)
    preds: dict = {}
    for p in middles:
        preds.setdefault(t_right[p], []).append(p)
    # 0's image is q by construction; every other middle target needs
    # exactly one middle-state preimage.
    unique = all(
        len(preds.get(r, [])) == 1 for r in middles if r != q
    )
    return PredWordCheck(
        q=q,
        n=n,
        word=w,
        maps_one_to_three=t_left[1] == 3,
        maps_zero_to_q=t_right[0] == q,
        unique_predecessors=unique,
    )
