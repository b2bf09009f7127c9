"""Game simplifications and hypergraph utilities.

Twin removal, move domination, the greedy forcing move, pairing checks,
minimal transversals and the two Maker-Breaker embeddings.  All operations
are pure; the solver reuses the same rules on its internal states.
"""

from __future__ import annotations

from typing import Iterable, Literal

from .core import (
    Game,
    Hypergraph,
    Pairing,
    Player,
    compress_mask,
    game_from_masks,
    mask_indices,
)
from .errors import EmptyEdgeError, TooLargeError


def _unit_vertex_mask(game: Game) -> int:
    """Bitmask of vertices that appear as a one-vertex edge of either color."""
    mask = 0
    for m in game.blue:
        if m.bit_count() == 1:
            mask |= m
    for m in game.red:
        if m.bit_count() == 1:
            mask |= m
    return mask


def _membership_signatures(game: Game) -> list[int]:
    """Per-vertex bitmap over the (blue, red) edge list: which edges contain it."""
    sigs = [0] * game.n
    for j, m in enumerate(game.blue + game.red):
        for i in mask_indices(m):
            sigs[i] |= 1 << j
    return sigs


def twin_reduce(game: Game) -> tuple[Game, list[tuple[str, str]]]:
    """Remove twin vertices until none remain; the outcome is unchanged.

    Two distinct vertices are twins when neither forms a one-vertex edge and
    they belong to exactly the same edges of both colors.  Treating the pair
    as one pick by each player removes both vertices and kills every edge
    containing them.  Vertices in no edge are vacuous twins of each other, so
    dead vertices disappear in pairs; an odd leftover dead vertex is kept
    because dropping it would flip the move parity.

    Returns the fixpoint together with the removed pairs in removal order.
    """
    log: list[tuple[str, str]] = []
    while True:
        units = _unit_vertex_mask(game)
        sigs = _membership_signatures(game)
        pair = None
        by_sig: dict[int, int] = {}
        for i in range(game.n):
            if units >> i & 1:
                continue
            sig = sigs[i]
            if sig in by_sig:
                pair = (by_sig[sig], i)
                break
            by_sig[sig] = i
        if pair is None:
            return game, log
        i, j = pair
        removed = (1 << i) | (1 << j)
        log.append((game.vertices[i], game.vertices[j]))
        verts = tuple(v for k, v in enumerate(game.vertices) if not removed >> k & 1)
        blue = [compress_mask(m, removed) for m in game.blue if not m & removed]
        red = [compress_mask(m, removed) for m in game.red if not m & removed]
        game = game_from_masks(verts, blue, red)


def dominated_moves(game: Game, mover: Player) -> frozenset[str]:
    """Vertices the mover may prune from their candidate moves.

    A vertex u is dominated by v when neither forms a one-vertex edge and
    every edge containing u also contains v; picking v is then at least as
    good for either player, so the relation does not depend on ``mover``.
    Mutually dominating vertices (twins) all appear in the result; a solver
    pruning with it must keep one representative per twin class.
    """
    del mover  # the domination condition is mover-independent
    units = _unit_vertex_mask(game)
    sigs = _membership_signatures(game)
    out = []
    for i in range(game.n):
        if units >> i & 1:
            continue
        si = sigs[i]
        for j in range(game.n):
            if j == i or units >> j & 1:
                continue
            if si & ~sigs[j] == 0:
                out.append(game.vertices[i])
                break
    return frozenset(out)


def prunable_moves(game: Game) -> frozenset[str]:
    """Dominated moves that are safe to prune all at once.

    Strictly dominated vertices are always included; within a class of mutual
    twins every vertex except the lowest-indexed one is included, so at least
    one optimal representative always survives.
    """
    units = _unit_vertex_mask(game)
    sigs = _membership_signatures(game)
    out = []
    for i in range(game.n):
        if units >> i & 1:
            continue
        si = sigs[i]
        for j in range(game.n):
            if j == i or units >> j & 1:
                continue
            sj = sigs[j]
            if si & ~sj:
                continue
            if si != sj or j < i:
                out.append(game.vertices[i])
                break
    return frozenset(out)


def greedy_move(game: Game, player: Player) -> tuple[str, str] | None:
    """An optimal forcing opener for ``player`` as first player, if one exists.

    Looks for an edge {u, v} of the player's color such that every edge
    containing u also contains v.  Picking v turns the edge into the single
    threat {u}, forcing the opponent to answer u, and the exchange loses
    nothing.  Returns (vertex_to_pick, forced_answer) or None.

    Requires a game with no one-vertex edges.
    """
    if _unit_vertex_mask(game):
        raise ValueError("greedy_move is defined only when no edge has size 1")
    sigs = _membership_signatures(game)
    own = game.blue if player is Player.LEFT else game.red
    for m in own:
        if m.bit_count() != 2:
            continue
        a, b = mask_indices(m)
        if sigs[a] & ~sigs[b] == 0:
            return game.vertices[b], game.vertices[a]
        if sigs[b] & ~sigs[a] == 0:
            return game.vertices[a], game.vertices[b]
    return None


def check_pairing(game: Game, pairing: Pairing, defender: Player) -> bool:
    """Whether ``pairing`` certifies a non-losing strategy for the defender.

    True iff every edge of the attacker's color (blue when the defender is
    Right) fully contains some pair: answering each attacker pick inside a
    pair with its partner then blocks every attacker edge, as first or second
    player.
    """
    for pair in pairing.pairs:
        for v in pair:
            if v not in game.vertices:
                raise ValueError(f"pairing vertex {v!r} is not in the game")
    pair_masks = [game.mask_of(p) for p in pairing.pairs]
    attacked = game.blue if defender is Player.RIGHT else game.red
    for edge in attacked:
        if not any(edge & pm == pm for pm in pair_masks):
            return False
    return True


DEFAULT_TRANSVERSAL_BOUND = 20


def minimal_transversals(h: Hypergraph, max_vertices: int = DEFAULT_TRANSVERSAL_BOUND
                         ) -> frozenset[frozenset[str]]:
    """All inclusion-minimal vertex sets meeting every edge (brute force).

    Applied twice this yields the antichain reduction of the input.  An
    edgeless hypergraph has the empty set as its one minimal transversal.
    """
    if h.n > max_vertices:
        raise TooLargeError(f"{h.n} vertices exceeds the bound {max_vertices}")
    minimal: list[int] = []
    # Subsets in increasing popcount order, so supersets of found transversals
    # can be skipped by a subset test.
    by_size: list[list[int]] = [[] for _ in range(h.n + 1)]
    for s in range(1 << h.n):
        by_size[s.bit_count()].append(s)
    for size_class in by_size:
        for s in size_class:
            if any(t & ~s == 0 for t in minimal):
                continue
            if all(e & s for e in h.edges):
                minimal.append(s)
    return frozenset(h.names_of(s) for s in minimal)


def antichain(h: Hypergraph) -> frozenset[frozenset[str]]:
    """Inclusion-minimal edges of ``h``."""
    keep = []
    for e in h.edges:
        if not any(f != e and f & ~e == 0 for f in h.edges):
            keep.append(e)
    return frozenset(h.names_of(e) for e in keep)


def maker_breaker_game(h: Hypergraph,
                       mode: Literal["empty_red", "transversal_red"],
                       max_vertices: int = DEFAULT_TRANSVERSAL_BOUND) -> Game:
    """Embed a Maker-Breaker board as an achievement game.

    ``empty_red`` leaves Right with no winning sets (her wins are renamed
    draws); ``transversal_red`` gives Right the minimal transversals of the
    board, which she fills exactly when she has blocked every blue edge.
    """
    if mode == "empty_red":
        return Game(h.vertices, h.edges, ())
    if mode == "transversal_red":
        reds = minimal_transversals(h, max_vertices=max_vertices)
        if any(not t for t in reds):
            raise EmptyEdgeError(
                "an edgeless board has the empty transversal; no game exists")
        return game_from_masks(
            h.vertices, h.edges,
            (sum(1 << h.vertices.index(v) for v in t) for t in reds))
    raise ValueError(f"unknown mode {mode!r}")


def prune_superset_edges(game: Game) -> tuple[Game, list[tuple[Player, frozenset[str]]]]:
    """Optional normalization: drop same-color edges that contain another edge.

    A superset edge can never be filled first while its subset is alive, so
    removing it changes no results.  Never applied silently; the removals are
    returned for logging.
    """
    log: list[tuple[Player, frozenset[str]]] = []

    def keep(masks: Iterable[int], who: Player) -> list[int]:
        masks = list(masks)
        out = []
        for m in masks:
            if any(f != m and f & ~m == 0 for f in masks):
                log.append((who, game.names_of(m)))
            else:
                out.append(m)
        return out

    blue = keep(game.blue, Player.LEFT)
    red = keep(game.red, Player.RIGHT)
    return game_from_masks(game.vertices, blue, red), log
