"""Polynomial decision procedure for games whose edges all have size <= 2.

The Left-win question is answered directly; the full win/draw/loss value
comes from running the same decision on the color-swapped game and combining
the two answers (they can never both say "win").

Pipeline for "does Left win with a given first player":
  1. resolve one-vertex edges: a unit of the mover's color wins, two distinct
     units of the other color lose, a single one forces the mover's pick;
     repeat until both edge sets are graphs;
  2. if Left is to move, Left wins iff the blue graph has two edges sharing a
     vertex (a P3): the shared vertex creates an unstoppable double threat,
     and without one the blue edges form a matching that Right can pair off;
  3. if Right is to move and the red graph has a P3, Right wins, so Left does
     not; otherwise the red edges form a matching and every candidate move is
     classified by its maximal alternating path (red edges at odd steps, blue
     at even steps).  Even-ended paths are optimal for Right and their
     vertices can be deleted outright; once only branching or odd-ended
     vertices remain, Right survives iff some odd-ended path leaves a P3-free
     blue graph behind.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Union

from .core import Game, GameResult, Player, mask_indices
from .errors import EdgeTooLargeError, InvalidPathError


class PathKind(Enum):
    BRANCHING = "branching"   # some alternating path forks at an even step
    ODD = "odd"               # unique maximal path, odd number of vertices
    EVEN = "even"             # unique maximal path, even number of vertices


@dataclass(frozen=True)
class PathProbe:
    kind: PathKind
    path: tuple[int, ...]  # for BRANCHING, the prefix walked before the fork


@dataclass
class Graph2:
    """Blue and red graphs over shared vertices; edges all have size 2."""

    alive: set[int]
    blue_adj: dict[int, set[int]]
    red_adj: dict[int, set[int]]

    def copy(self) -> "Graph2":
        return Graph2(set(self.alive),
                      {v: set(s) for v, s in self.blue_adj.items()},
                      {v: set(s) for v, s in self.red_adj.items()})

    def blue_has_p3(self) -> bool:
        return any(len(self.blue_adj[v]) >= 2 for v in self.alive)

    def red_has_p3(self) -> bool:
        return any(len(self.red_adj[v]) >= 2 for v in self.alive)

    def delete(self, vertices: set[int]) -> None:
        for v in vertices:
            self.alive.discard(v)
            for w in self.blue_adj.pop(v, ()):  # incident edges die with v
                self.blue_adj[w].discard(v)
            for w in self.red_adj.pop(v, ()):
                self.red_adj[w].discard(v)


@dataclass(frozen=True)
class Decided:
    result: GameResult


@dataclass(frozen=True)
class Reduced:
    graph: Graph2
    to_move: Player


def _check_sizes(blue, red) -> None:
    for m in list(blue) + list(red):
        if m.bit_count() > 2:
            raise EdgeTooLargeError("this procedure needs all edges of size <= 2")


def preprocess_units(game: Game, first_player: Player) -> Union[Decided, Reduced]:
    """Resolve one-vertex edges, possibly deciding the game outright.

    With the mover owning a unit edge the mover wins; with none of their own
    and two or more distinct opposing units the second player wins; with
    exactly one opposing unit the mover's pick is forced and the analysis
    recurses on the residual game.  Otherwise returns the two graphs with the
    player then to move.
    """
    _check_sizes(game.blue, game.red)
    return _preprocess_masks(game.n, list(game.blue), list(game.red), first_player)


def _preprocess_masks(n: int, blue: list[int], red: list[int],
                      mover: Player) -> Union[Decided, Reduced]:
    while True:
        own, other = (blue, red) if mover is Player.LEFT else (red, blue)
        own_units = {m for m in own if m.bit_count() == 1}
        other_units = {m for m in other if m.bit_count() == 1}
        if own_units:
            win = GameResult.LEFT_WIN if mover is Player.LEFT else GameResult.RIGHT_WIN
            return Decided(win)
        if len(other_units) >= 2:
            win = GameResult.LEFT_WIN if mover is Player.RIGHT else GameResult.RIGHT_WIN
            return Decided(win)
        if len(other_units) == 1:
            bit = next(iter(other_units))
            new_own = []
            for m in own:
                m &= ~bit  # at most shrinks to size 1; never empties (no own units)
                new_own.append(m)
            new_other = [m for m in other if not m & bit]
            own, other = sorted(set(new_own)), sorted(set(new_other))
            if mover is Player.LEFT:
                blue, red = own, other
            else:
                red, blue = own, other
            n -= 1  # vertex counts no longer matter beyond the graphs
            mover = mover.opponent
            continue
        return Reduced(_masks_to_graph2_relabeled(blue, red), mover)


def _masks_to_graph2_relabeled(blue: list[int], red: list[int]) -> Graph2:
    used = 0
    for m in blue + red:
        used |= m
    verts = mask_indices(used)
    g = Graph2(set(verts), {v: set() for v in verts}, {v: set() for v in verts})
    for m in blue:
        a, b = mask_indices(m)
        g.blue_adj[a].add(b)
        g.blue_adj[b].add(a)
    for m in red:
        a, b = mask_indices(m)
        g.red_adj[a].add(b)
        g.red_adj[b].add(a)
    return g


def left_to_move_rule(g2: Graph2) -> bool:
    """With Left to move and no unit edges: Left wins iff blue has a P3."""
    return g2.blue_has_p3()


def classify(g2: Graph2, u: int) -> PathProbe:
    """Walk the alternating path from ``u``: red edges at odd steps (the red
    edges form a matching, so each is unique), blue edges at even steps.

    At an even step, two or more off-path blue neighbours mean the path
    branches; exactly one extends the walk; none ends it.  A path ending at
    an odd step classifies as ODD, at an even step as EVEN.
    """
    path = [u]
    on_path = {u}
    cur = u
    while True:
        # odd position: follow the red matching edge, if any
        nxt = next(iter(g2.red_adj[cur]), None)
        if nxt is None:
            return PathProbe(PathKind.ODD, tuple(path))
        assert nxt not in on_path, "a matching partner cannot revisit the path"
        path.append(nxt)
        on_path.add(nxt)
        cur = nxt
        # even position: count blue continuations off the path
        offs = sorted(y for y in g2.blue_adj[cur] if y not in on_path)
        if len(offs) >= 2:
            return PathProbe(PathKind.BRANCHING, tuple(path))
        if not offs:
            return PathProbe(PathKind.EVEN, tuple(path))
        path.append(offs[0])
        on_path.add(offs[0])
        cur = offs[0]


def reduce_type3(g2: Graph2, path: tuple[int, ...]) -> None:
    """Delete an even-ended alternating path in place.

    Playing along the path is optimal for Right and the forced exchanges
    leave no partial edges behind: every blue edge touching an even-position
    vertex also touches an odd-position one, and every red edge incident to
    the path lies on it.  Violations raise InvalidPathError.
    """
    if len(path) % 2 != 0:
        raise InvalidPathError("an even-ended path must have an even vertex count")
    on_path = set(path)
    odd_positions = set(path[0::2])   # 1st, 3rd, ... vertices of the walk
    even_positions = set(path[1::2])
    for v in even_positions:
        for w in g2.blue_adj[v]:
            if w not in odd_positions:
                raise InvalidPathError(
                    f"blue edge ({v},{w}) would survive the path deletion")
    for k, v in enumerate(path):
        expect = {path[k + 1]} if k % 2 == 0 else {path[k - 1]}
        if g2.red_adj[v] != expect:
            raise InvalidPathError(f"red edge at {v} is not the path's matching edge")
    g2.delete(on_path)


def right_to_move_rule(g2: Graph2) -> bool:
    """With Right to move and no unit edges: does Left win?

    A red P3 lets Right win in two moves.  Otherwise even-ended paths are
    deleted repeatedly; Right then survives iff some odd-ended path, removed
    from the blue graph, leaves it without a P3.
    """
    if g2.red_has_p3():
        return False
    g2 = g2.copy()
    while True:
        for u in sorted(g2.alive):
            probe = classify(g2, u)
            if probe.kind is PathKind.EVEN:
                reduce_type3(g2, probe.path)
                break
        else:
            break
    if not g2.alive:
        return False  # the game ends in a draw
    for u in sorted(g2.alive):
        probe = classify(g2, u)
        if probe.kind is PathKind.ODD:
            trimmed = g2.copy()
            trimmed.delete(set(probe.path))
            if not trimmed.blue_has_p3():
                return False  # Right picks u and survives
    return True


def _left_wins_masks(n: int, blue: list[int], red: list[int],
                     first_player: Player) -> bool:
    step = _preprocess_masks(n, blue, red, first_player)
    if isinstance(step, Decided):
        return step.result is GameResult.LEFT_WIN
    if step.to_move is Player.LEFT:
        return left_to_move_rule(step.graph)
    return right_to_move_rule(step.graph)


def solve22_masks(n: int, blue: list[int], red: list[int],
                  first_player: Player) -> GameResult:
    _check_sizes(blue, red)
    left = _left_wins_masks(n, list(blue), list(red), first_player)
    right = _left_wins_masks(n, list(red), list(blue), first_player.opponent)
    if left and right:
        raise AssertionError("both players cannot have winning strategies")
    if left:
        return GameResult.LEFT_WIN
    if right:
        return GameResult.RIGHT_WIN
    return GameResult.DRAW


def solve22(game: Game, first_player: Player) -> GameResult:
    """Full value of a size-<=2 game for the given first player.

    Runs the Left-win decision and its color-swapped mirror; at most one can
    answer "win", and neither means a draw.
    """
    return solve22_masks(game.n, list(game.blue), list(game.red), first_player)
