"""Constructors for named 1-Sperner families and seeded random instances."""

from __future__ import annotations

import random
from itertools import count
from typing import Iterable

from .core import Hypergraph, VertexId, make_hypergraph
from .decomp import glue, is_safe
from .errors import CapExceeded, InvalidGenerator


def _split_generators(
    vertices: Iterable[VertexId], x: Iterable[VertexId], y: Iterable[VertexId]
):
    vt = tuple(vertices)
    xs = frozenset(x)
    ys = frozenset(y)
    if xs & ys:
        raise InvalidGenerator(f"X and Y overlap on {sorted(xs & ys)}")
    if not ys:
        raise InvalidGenerator("Y must be non-empty")
    missing = (xs | ys) - set(vt)
    if missing:
        raise InvalidGenerator(f"X and Y mention vertices {sorted(missing)} not in V")
    return vt, xs, ys


def star(
    vertices: Iterable[VertexId], x: Iterable[VertexId], y: Iterable[VertexId]
) -> Hypergraph:
    """The uniform family with edges X + {y} for y in Y, edge size |X| + 1.

    Edges are emitted with y running through Y in vertex-list order.
    """
    vt, xs, ys = _split_generators(vertices, x, y)
    return make_hypergraph(vt, [xs | {v} for v in vt if v in ys])


def antistar(
    vertices: Iterable[VertexId], x: Iterable[VertexId], y: Iterable[VertexId]
) -> Hypergraph:
    """The uniform family with edges X + (Y - {y}) for y in Y, size |X| + |Y| - 1.

    On V = X + Y this is the complement of the star generated by (V, {}, Y);
    in general the complement of star(V, X, Y) is antistar(V, V - X - Y, Y).
    """
    vt, xs, ys = _split_generators(vertices, x, y)
    return make_hypergraph(vt, [xs | (ys - {v}) for v in vt if v in ys])


def extremal_family(k: int, cap: int = 12) -> Hypergraph:
    """The recursive gluing family attaining the edge-count lower bound.

    Level 2 is the two-vertex hypergraph with both singleton edges; level k
    glues a copy of level k-1 extended by one isolated vertex onto a fresh
    copy of level k-1.  The result has 2**k - 2 vertices, 2**(k-1) edges and
    no universal, isolated or twin vertices.  Vertices are relabelled
    v1..vn in final vertex order.
    """
    if k < 2:
        raise InvalidGenerator("the family starts at level 2")
    if k > cap:
        raise CapExceeded(f"level {k} exceeds the cap of {cap}")
    fresh = (f"t{i}" for i in count())

    def build(level: int) -> Hypergraph:
        if level == 2:
            a, b = next(fresh), next(fresh)
            return Hypergraph((a, b), (0b01, 0b10))
        left = build(level - 1)
        left = Hypergraph(left.vertices + (next(fresh),), left.edges)
        right = build(level - 1)
        return glue(left, right, next(fresh))

    h = build(k)
    return h.relabeled({v: f"v{i + 1}" for i, v in enumerate(h.vertices)})


def random_one_sperner(n: int, seed: int) -> Hypergraph:
    """A random 1-Sperner hypergraph with exactly n vertices.

    Builds a random gluing tree bottom up.  A pool starts with one of the
    two vertex-free hypergraphs; each step, each costing one vertex, either
    attaches a fresh singleton-edge factor to the pool, glues two pool
    members drawn at random, or glues one pool member with a fresh
    vertex-free leaf (the move that makes odd budgets reachable).  Unsafe
    pairings are redrawn; some safe orientation always exists.  The random
    stream comes from random.Random (Mersenne Twister), so the result is
    deterministic for a fixed seed and identical across platforms.
    """
    if n < 0:
        raise InvalidGenerator("vertex count must be non-negative")
    rng = random.Random(seed)
    labels = (f"v{i}" for i in count(1))
    pool: list[Hypergraph] = [Hypergraph((), (0,) if rng.random() < 0.5 else ())]
    remaining = n
    while remaining > 0:
        # Keep remaining >= len(pool) - 1 so the pool can still collapse to
        # a single hypergraph within budget.
        if remaining == len(pool) - 1:
            move = "merge"
        else:
            moves = ["leaf"]
            if remaining >= len(pool) + 1:
                moves.append("attach")
            if len(pool) >= 2:
                moves.append("merge")
            move = rng.choice(moves)
        if move == "attach":
            pool.append(Hypergraph((next(labels),), (1,)))
        elif move == "leaf":
            item = pool.pop(rng.randrange(len(pool)))
            for _ in range(64):
                leaf = Hypergraph((), (0,) if rng.random() < 0.5 else ())
                pair = (item, leaf) if rng.random() < 0.5 else (leaf, item)
                if is_safe(*pair):
                    break
            else:
                pair = (item, Hypergraph((), ()))
            pool.append(glue(pair[0], pair[1], next(labels)))
        else:
            for _ in range(64):
                i = rng.randrange(len(pool))
                j = rng.randrange(len(pool) - 1)
                if j >= i:
                    j += 1
                if is_safe(pool[i], pool[j]):
                    break
            else:
                # Some orientation of some pair is always safe; find it.
                i, j = next(
                    (a, b)
                    for a in range(len(pool))
                    for b in range(len(pool))
                    if a != b and is_safe(pool[a], pool[b])
                )
            merged = glue(pool[i], pool[j], next(labels))
            for k_ in sorted((i, j), reverse=True):
                pool.pop(k_)
            pool.append(merged)
        remaining -= 1
    return pool[0]
