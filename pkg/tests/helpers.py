"""Shared helpers for the test suite: random automata and brute-force
reference implementations used as oracles."""

import random
from itertools import product

from suffixfree.automata import Dfa, Transformation


def random_transformation(rng: random.Random, n: int) -> Transformation:
    return Transformation(tuple(rng.randrange(n) for _ in range(n)))


def random_dfa(rng: random.Random, n: int, letters: int) -> Dfa:
    alphabet = tuple("abcdefgh"[:letters])
    delta = {a: random_transformation(rng, n) for a in alphabet}
    finals = frozenset(q for q in range(n) if rng.random() < 0.5)
    return Dfa(n, alphabet, delta, 0, finals)


def brute_force_state_count(d: Dfa) -> int:
    """Number of states of the minimal DFA, computed independently of
    partition refinement: breadth-first search for a distinguishing word
    over every reachable state pair."""
    n = d.state_count
    reachable = {d.initial}
    frontier = [d.initial]
    while frontier:
        q = frontier.pop()
        for a in d.alphabet:
            r = d.delta[a][q]
            if r not in reachable:
                reachable.add(r)
                frontier.append(r)

    def distinguishable(p, q):
        seen = {(p, q)}
        queue = [(p, q)]
        while queue:
            x, y = queue.pop(0)
            if (x in d.finals) != (y in d.finals):
                return True
            for a in d.alphabet:
                nxt = (d.delta[a][x], d.delta[a][y])
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
        return False

    states = sorted(reachable)
    classes = []
    for q in states:
        for cls in classes:
            if not distinguishable(q, cls[0]):
                cls.append(q)
                break
        else:
            classes.append([q])
    return len(classes)


def accepted_words(d: Dfa, max_len: int):
    """All accepted words of length <= max_len (empty word included)."""
    words = set()
    for length in range(max_len + 1):
        for letters in product(d.alphabet, repeat=length):
            if d.accepts("".join(letters)):
                words.add("".join(letters))
    return words


def has_suffix_violation(d: Dfa, max_len: int) -> bool:
    """Brute-force word check: some accepted word is a proper suffix of
    another accepted word, looking only at words up to max_len."""
    words = accepted_words(d, max_len)
    for w in words:
        for k in range(1, len(w) + 1):
            if w[k:] in words:
                return True
    return False
