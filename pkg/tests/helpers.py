"""Shared test utilities: fixture loading, quick builders, random instances."""
from __future__ import annotations

import random
from importlib import resources

from pacqa.dsl import SpecDocument, parse_spec
from pacqa.ideal import (ANTICOMMUTATIVE, COMMUTATIVE, IdealSpec,
                         validate_ideal)
from pacqa.quiver import build_quiver

FIXTURES = (
    "comm_two_loops_arrow",
    "monomial_two_loops_two_arrows",
    "anti_four_loops_free_pair",
    "anti_two_loops_arrow",
    "comm_four_loops_arrow_out",
    "anti_four_loops_full",
)


def fixture_text(name: str) -> str:
    return (resources.files("pacqa") / "fixtures"
            / f"{name}.quiver").read_text(encoding="utf-8")


def fixture_doc(name: str) -> SpecDocument:
    return parse_spec(fixture_text(name))


def fixture_ideal(name: str) -> IdealSpec:
    return fixture_doc(name).ideal


def fixture_path(name: str) -> str:
    return str(resources.files("pacqa") / "fixtures" / f"{name}.quiver")


def build(vertices, arrows, flavor=COMMUTATIVE, monomials=(), relations=(),
          char=0) -> IdealSpec:
    quiver = build_quiver(vertices, arrows)
    return validate_ideal(quiver, flavor, monomials, relations, char)


def two_loop_polynomial() -> IdealSpec:
    """K[a,b] presented as two commuting loops."""
    return build(["x"], [("a", "x", "x"), ("b", "x", "x")],
                 COMMUTATIVE, relations=[("a", "b")])


def words(*texts: str) -> tuple[tuple[str, ...], ...]:
    return tuple(tuple(t) for t in texts)


def random_instance(rng: random.Random) -> IdealSpec:
    """A random valid ideal over a small quiver: at most 2 vertices, 4
    loops and 2 connecting arrows, both flavors, varied density."""
    two = rng.random() < 0.4
    if two:
        vertices = ["x", "y"]
        loops_x = rng.randint(0, 3)
        loops_y = rng.randint(0, max(0, 3 - loops_x))
        arrows = [(f"l{i}", "x", "x") for i in range(loops_x)]
        arrows += [(f"m{i}", "y", "y") for i in range(loops_y)]
        n_conn = rng.randint(1, 2)
        arrows.append(("u", "x", "y"))
        if n_conn == 2:
            arrows.append(("v", "y", "x"))
    else:
        vertices = ["x"]
        n_loops = rng.choice([1, 2, 2, 3, 3, 4])
        arrows = [(f"l{i}", "x", "x") for i in range(n_loops)]
    if not arrows:
        arrows = [("l0", "x", "x")]
    quiver = build_quiver(vertices, arrows)
    flavor = rng.choice([COMMUTATIVE, ANTICOMMUTATIVE])
    profile = rng.choice(["dense", "dense", "sparse", "squares"])
    p_mono = {"dense": 0.45, "sparse": 0.12, "squares": 0.5}[profile]
    p_rel = {"dense": 0.45, "sparse": 0.6, "squares": 0.3}[profile]
    p_square = {"dense": 0.4, "sparse": 0.0, "squares": 0.9}[profile]

    names = quiver.arrow_names
    monomials: set[tuple[str, str]] = set()
    relations: set[tuple[str, str]] = set()
    seen_pairs: set[frozenset[str]] = set()
    for a in names:
        for b in names:
            if not quiver.composable(a, b):
                continue
            if a == b:
                if rng.random() < p_square:
                    monomials.add((a, a))
                continue
            co_based_loops = (quiver.is_loop(a) and quiver.is_loop(b)
                              and quiver.origin(a) == quiver.origin(b))
            if co_based_loops:
                key = frozenset((a, b))
                if key in seen_pairs:
                    continue
                seen_pairs.add(key)
                if rng.random() < p_rel:
                    relations.add(tuple(sorted((a, b),
                                               key=quiver.arrow_index)))
                else:
                    if rng.random() < p_mono:
                        monomials.add((a, b))
                    if rng.random() < p_mono:
                        monomials.add((b, a))
            else:
                if rng.random() < p_mono:
                    monomials.add((a, b))
    char = 2 if rng.random() < 0.05 else 0
    return validate_ideal(quiver, flavor, sorted(monomials),
                          sorted(relations), char)


def random_surviving_word(rng: random.Random, spec: IdealSpec,
                          max_len: int = 7, attempts: int = 30):
    """A random path word not in the ideal, or None."""
    from pacqa.normalform import monomial_in_ideal

    names = spec.quiver.arrow_names
    if not names:
        return None
    for _ in range(attempts):
        length = rng.randint(2, max_len)
        word = [rng.choice(names)]
        ok = True
        for _ in range(length - 1):
            nxt = [b for b in names if spec.quiver.composable(word[-1], b)]
            if not nxt:
                ok = False
                break
            word.append(rng.choice(nxt))
        if ok and not monomial_in_ideal(spec, tuple(word)):
            return tuple(word)
    return None
