"""Exact memoized search over achievement positional games.

Values are computed by two mutually recursive boolean questions from the
mover's perspective ("can the mover win?", "can the mover avoid losing?"),
asked in that order, with draws as the default.  Positions are canonicalized
(vertices renumbered, twin pairs removed) before memo lookup so that
transposed move orders collapse.

Pruning used by default, each individually toggleable:
  * immediate win on a one-vertex edge of the mover's color;
  * two or more distinct one-vertex threats of the opponent lose outright,
    a single one forces the blocking move;
  * dominated moves are skipped, keeping one representative per twin class;
  * twin/dead-pair removal at node entry.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Iterable, Optional

from .core import (
    Game,
    GameResult,
    Outcome,
    Player,
    Position,
    Status,
    StatusKind,
    outcome_from_results,
    status,
)
from .errors import ResourceLimitError

State = tuple[int, tuple[int, ...], tuple[int, ...]]

_WIN, _DRAW, _LOSS = 1, 0, -1

INFINITE_DELAY = math.inf
Delay = float  # a natural number, or math.inf when the protagonist cannot win


@dataclass
class SolveStats:
    nodes_expanded: int = 0
    memo_hits: int = 0
    max_depth: int = 0
    elapsed: float = 0.0

    def as_text(self) -> str:
        return (f"nodes_expanded: {self.nodes_expanded}\n"
                f"memo_hits: {self.memo_hits}\n"
                f"max_depth: {self.max_depth}")


@dataclass
class SolverConfig:
    node_limit: int = 50_000_000
    use_twin_reduction: bool = True
    use_domination: bool = True
    use_forced_moves: bool = True
    # When set, memoize only positions with at most this many free vertices;
    # exhaustive batteries use it to keep the table tiny while their top-level
    # queries still share all sub-position work.
    memo_max_vertices: Optional[int] = None
    memo_flush_entries: int = 20_000_000


@dataclass(frozen=True)
class TraceStep:
    summary: str
    player: Player
    vertex: str
    justification: str  # one of: winning, forced, pairing, arbitrary


@dataclass(frozen=True)
class Trace:
    steps: tuple[TraceStep, ...]
    final: Status
    result: GameResult

    def moves_by(self, player: Player) -> list[str]:
        return [s.vertex for s in self.steps if s.player is player]


def state_of_game(game: Game) -> State:
    return (game.n, tuple(sorted(game.blue)), tuple(sorted(game.red)))


def _compress(mask: int, removed: int) -> int:
    while removed:
        low = removed & -removed
        below = low - 1
        mask = (mask & below) | ((mask >> 1) & ~below)
        removed = (removed >> 1) & ~below
    return mask


def _child(state: State, mover: int, i: int) -> Optional[State]:
    """State after the mover picks vertex ``i``; None when the pick fills an
    edge of the mover's color."""
    n, blue, red = state
    bit = 1 << i
    low = bit - 1
    hi = ~low
    own, other = (blue, red) if mover == 0 else (red, blue)
    new_own = set()
    for m in own:
        if m & bit:
            m &= ~bit
            if m == 0:
                return None
        new_own.add((m & low) | ((m >> 1) & hi))
    new_other = set()
    for m in other:
        if not m & bit:
            new_other.add((m & low) | ((m >> 1) & hi))
    own_t = tuple(sorted(new_own))
    other_t = tuple(sorted(new_other))
    if mover == 0:
        return (n - 1, own_t, other_t)
    return (n - 1, other_t, own_t)


def _state_sigs(n: int, blue: tuple[int, ...], red: tuple[int, ...]) -> list[int]:
    sigs = [0] * n
    j = 1
    for m in blue + red:
        while m:
            lowb = m & -m
            sigs[lowb.bit_length() - 1] |= j
            m ^= lowb
        j <<= 1
    return sigs


def _unit_positions(masks: Iterable[int]) -> list[int]:
    return [m.bit_length() - 1 for m in masks if m & (m - 1) == 0]


def _dead_pair_reduce(state: State) -> State:
    """Remove vertices carried by no edge, in pairs (parity is preserved by
    keeping one when their count is odd).  A cheap special case of twin
    removal; edge masks keep their relative order under the renumbering."""
    n, blue, red = state
    used = 0
    for m in blue:
        used |= m
    for m in red:
        used |= m
    dead = ((1 << n) - 1) & ~used
    count = dead.bit_count()
    if count < 2:
        return state
    if count & 1:
        dead &= ~(dead & -dead)
        count -= 1
    return (n - count,
            tuple(_compress(m, dead) for m in blue),
            tuple(_compress(m, dead) for m in red))


def _twin_reduce_state(state: State) -> State:
    # Twin pairs are removed a whole sweep at a time: within one signature
    # class the removals commute (killing one pair's edges leaves the rest of
    # the class identical), and distinct classes do not interact.
    while True:
        n, blue, red = state
        if n < 2:
            return state
        units = 0
        for m in blue:
            if m & (m - 1) == 0:
                units |= m
        for m in red:
            if m & (m - 1) == 0:
                units |= m
        sigs = _state_sigs(n, blue, red)
        groups: dict[int, list[int]] = {}
        for i in range(n):
            if not units >> i & 1:
                groups.setdefault(sigs[i], []).append(i)
        removed = 0
        for members in groups.values():
            for i in members[:len(members) & ~1]:
                removed |= 1 << i
        if not removed:
            return state
        blue = tuple(sorted({_compress(m, removed) for m in blue if not m & removed}))
        red = tuple(sorted({_compress(m, removed) for m in red if not m & removed}))
        state = (n - removed.bit_count(), blue, red)


def _prunable_mask(state: State) -> int:
    """Dominated vertices safe to skip together: strict dominations plus all
    but the lowest-indexed member of each mutual class."""
    n, blue, red = state
    units = 0
    for m in blue:
        if m & (m - 1) == 0:
            units |= m
    for m in red:
        if m & (m - 1) == 0:
            units |= m
    sigs = _state_sigs(n, blue, red)
    out = 0
    for i in range(n):
        if units >> i & 1:
            continue
        si = sigs[i]
        for j in range(n):
            if j == i or units >> j & 1:
                continue
            sj = sigs[j]
            if si & ~sj:
                continue
            if si != sj or j < i:
                out |= 1 << i
                break
    return out


class Solver:
    """Holds the memo tables, configuration and counters for exact search."""

    def __init__(self, config: Optional[SolverConfig] = None):
        self.config = config or SolverConfig()
        self._memo_win: dict[tuple[int, State], bool] = {}
        self._memo_avoid: dict[tuple[int, State], bool] = {}
        self._memo_delay: dict[tuple[int, int, State], float] = {}
        self._nodes = 0
        self._hits = 0
        self._max_depth = 0
        self.last_stats = SolveStats()

    # -- internal search ---------------------------------------------------

    def _tick(self, depth: int) -> None:
        self._nodes += 1
        if self._nodes > self.config.node_limit:
            raise ResourceLimitError(self._nodes, self.config.node_limit)
        if depth > self._max_depth:
            self._max_depth = depth

    def _candidates(self, state: State) -> Iterable[int]:
        n, blue, red = state
        if self.config.use_domination:
            pruned = _prunable_mask(state)
            cand = [i for i in range(n) if not pruned >> i & 1]
        else:
            cand = list(range(n))
        if n > 6 and len(cand) > 2:
            score = [0] * n
            for m in blue + red:
                size = m.bit_count()
                w = 3 if size == 2 else 1
                mm = m
                while mm:
                    lowb = mm & -mm
                    score[lowb.bit_length() - 1] += w
                    mm ^= lowb
            cand.sort(key=lambda i: (-score[i], i))
        return cand

    def _eval(self, state: State, mover: int, want_win: bool, depth: int) -> bool:
        self._tick(depth)
        if self.config.use_twin_reduction:
            state = _twin_reduce_state(state)
        n, blue, red = state
        memo = self._memo_win if want_win else self._memo_avoid
        key = (mover, state)
        cached = memo.get(key)
        if cached is not None:
            self._hits += 1
            return cached

        own, other = (blue, red) if mover == 0 else (red, blue)
        result: Optional[bool] = None
        candidates: Optional[Iterable[int]] = None

        if n == 0:
            result = not want_win  # draw by exhaustion
        elif any(m & (m - 1) == 0 for m in own):
            result = True  # fill a one-vertex edge now
        elif self.config.use_forced_moves:
            threats = _unit_positions(other)
            if len(set(threats)) >= 2:
                result = False  # cannot block two distinct unit threats
            elif threats:
                candidates = threats[:1]

        if result is None:
            if candidates is None:
                candidates = self._candidates(state)
            result = False
            opp = 1 - mover
            for i in candidates:
                child = _child(state, mover, i)
                if child is None:
                    result = True  # the pick fills an edge of the mover's color
                    break
                if not self._eval(child, opp, not want_win, depth + 1):
                    result = True
                    break

        if (self.config.memo_max_vertices is None
                or n <= self.config.memo_max_vertices):
            if len(memo) >= self.config.memo_flush_entries:
                memo.clear()
            memo[key] = result
        return result

    def _result_for_mover(self, state: State, mover: int) -> int:
        if self._eval(state, mover, True, 0):
            return _WIN
        if self._eval(state, mover, False, 0):
            return _DRAW
        return _LOSS

    @staticmethod
    def _to_game_result(value: int, mover: Player) -> GameResult:
        if value == _DRAW:
            return GameResult.DRAW
        if (value == _WIN) == (mover is Player.LEFT):
            return GameResult.LEFT_WIN
        return GameResult.RIGHT_WIN

    def _begin(self) -> tuple[int, int, float]:
        return self._nodes, self._hits, time.perf_counter()

    def _finish(self, mark: tuple[int, int, float]) -> None:
        n0, h0, t0 = mark
        self.last_stats = SolveStats(
            nodes_expanded=self._nodes - n0,
            memo_hits=self._hits - h0,
            max_depth=self._max_depth,
            elapsed=time.perf_counter() - t0,
        )

    # -- public queries ----------------------------------------------------

    def solve_masks(self, n: int, blue: Iterable[int], red: Iterable[int],
                    first_player: Player) -> GameResult:
        state = (n, tuple(sorted(set(blue))), tuple(sorted(set(red))))
        mover = 0 if first_player is Player.LEFT else 1
        return self._to_game_result(self._result_for_mover(state, mover), first_player)

    def solve(self, game: Game, first_player: Player) -> GameResult:
        """Game value under optimal play with the given first player."""
        mark = self._begin()
        try:
            mover = 0 if first_player is Player.LEFT else 1
            value = self._result_for_mover(state_of_game(game), mover)
            return self._to_game_result(value, first_player)
        finally:
            self._finish(mark)

    def outcome(self, game: Game) -> Outcome:
        """The pair of values (Left starts, Right starts), checked for legality."""
        mark = self._begin()
        try:
            state = state_of_game(game)
            left_starts = self._to_game_result(
                self._result_for_mover(state, 0), Player.LEFT)
            right_starts = self._to_game_result(
                self._result_for_mover(state, 1), Player.RIGHT)
            return outcome_from_results(left_starts, right_starts)
        finally:
            self._finish(mark)

    def move_value(self, position: Position, vertex: str) -> GameResult:
        """Value of one candidate move from a position, for the side to move."""
        game = position.updated_game()
        state = state_of_game(game)
        mover = 0 if position.to_move is Player.LEFT else 1
        i = game.index_of(vertex)
        child = _child(state, mover, i)
        if child is None:
            value = _WIN
        else:
            value = -self._result_for_mover(child, 1 - mover)
        return self._to_game_result(value, position.to_move)

    def best_move(self, position: Position) -> tuple[str, GameResult]:
        """A move achieving the position's value.

        An immediate edge completion is preferred when one exists; otherwise
        ties break to the lowest vertex index, so results are deterministic.
        """
        if status(position) != Status(StatusKind.ONGOING):
            raise ValueError("best_move needs an ongoing position")
        mark = self._begin()
        try:
            game = position.updated_game()
            state = state_of_game(game)
            mover = 0 if position.to_move is Player.LEFT else 1
            fallback = None
            value = self._result_for_mover(state, mover)
            for i in range(game.n):
                child = _child(state, mover, i)
                if child is None:
                    return game.vertices[i], self._to_game_result(_WIN, position.to_move)
                if fallback is None and -self._result_for_mover(child, 1 - mover) == value:
                    fallback = game.vertices[i]
            if fallback is None:
                raise AssertionError("no move achieves the computed value")
            return fallback, self._to_game_result(value, position.to_move)
        finally:
            self._finish(mark)

    def self_play(self, game: Game, first_player: Player) -> Trace:
        """Play best moves for both sides to the end; the final status must
        agree with the solved value."""
        expected = self.solve(game, first_player)
        pos = Position.start(game, first_player)
        steps: list[TraceStep] = []
        while status(pos).kind is StatusKind.ONGOING:
            mover = pos.to_move
            vertex, value = self.best_move(pos)
            updated = pos.updated_game()
            threats = _unit_positions(
                updated.red if mover is Player.LEFT else updated.blue)
            if value == (GameResult.LEFT_WIN if mover is Player.LEFT
                         else GameResult.RIGHT_WIN):
                tag = "winning"
            elif len(set(threats)) == 1 and updated.vertices[threats[0]] == vertex:
                tag = "forced"
            else:
                tag = "arbitrary"
            steps.append(TraceStep(pos.summary(), mover, vertex, tag))
            pos = pos.play(vertex)
        final = status(pos)
        if final.kind is StatusKind.WON:
            got = (GameResult.LEFT_WIN if final.winner is Player.LEFT
                   else GameResult.RIGHT_WIN)
        else:
            got = GameResult.DRAW
        if got != expected:
            raise AssertionError(f"self-play reached {got}, solver said {expected}")
        return Trace(tuple(steps), final, got)

    # -- delay (pass-move scoring game) -------------------------------------

    def _delay_eval(self, state: State, prot: int, prot_turn: bool, depth: int) -> float:
        self._tick(depth)
        n, blue, red = state
        own, other = (blue, red) if prot == 0 else (red, blue)
        key = (prot, int(prot_turn), state)
        cached = self._memo_delay.get(key)
        if cached is not None:
            self._hits += 1
            return cached

        if prot_turn:
            if any(m & (m - 1) == 0 for m in own):
                result = 0.0  # the protagonist fills now; no further passes
            elif n == 0:
                result = INFINITE_DELAY
            else:
                threats = set(_unit_positions(other))
                if len(threats) >= 2:
                    result = INFINITE_DELAY  # the antagonist fills next turn
                else:
                    candidates = sorted(threats) if threats else range(n)
                    result = INFINITE_DELAY
                    for i in candidates:
                        child = _child(state, prot, i)
                        if child is None:
                            result = 0.0
                            break
                        v = self._delay_eval(child, prot, False, depth + 1)
                        if v < result:
                            result = v
                        if result == 0.0:
                            break
        else:
            if any(m & (m - 1) == 0 for m in other):
                result = INFINITE_DELAY  # the antagonist fills an edge now
            else:
                # passing costs the protagonist one more point
                result = self._delay_eval(state, prot, True, depth + 1) + 1
                for i in range(n):
                    if result == INFINITE_DELAY:
                        break
                    child = _child(state, 1 - prot, i)
                    assert child is not None
                    v = self._delay_eval(child, prot, True, depth + 1)
                    if v > result:
                        result = v

        self._memo_delay[key] = result
        return result

    def delay(self, game: Game, protagonist: Player) -> Delay:
        """Value of the pass-move scoring game for ``protagonist``.

        The protagonist moves first and normally; the antagonist may pass.
        The score counts the antagonist's passes up to the protagonist's win
        and is infinite when the protagonist never fills an edge of their
        color (including when the antagonist fills one first).  Finite iff
        the protagonist wins the plain game as first player.
        """
        mark = self._begin()
        try:
            state = state_of_game(game)
            prot = 0 if protagonist is Player.LEFT else 1
            value = self._delay_eval(state, prot, True, 0)
            assert value == INFINITE_DELAY or value < max(game.n, 1), \
                "a finite delay can never reach the vertex-count cap"
            return int(value) if value != INFINITE_DELAY else INFINITE_DELAY
        finally:
            self._finish(mark)


# ---------------------------------------------------------------------------
# Outcomes of disjoint unions

_L, _LM, _N, _D, _RM, _R = (Outcome.L, Outcome.L_MINUS, Outcome.N,
                            Outcome.D, Outcome.R_MINUS, Outcome.R)

_UNION_ROWS: dict[Outcome, dict[Outcome, tuple[Outcome, ...]]] = {
    _L: {_L: (_L,), _LM: (_L,), _N: (_L, _LM, _N), _D: (_L,),
         _RM: (_L, _LM, _N), _R: (_L, _LM, _N, _RM, _R)},
    _LM: {_L: (_L,), _LM: (_L, _LM), _N: (_L, _LM, _N), _D: (_LM,),
          _RM: (_LM, _N, _RM), _R: (_N, _RM, _R)},
    _N: {_L: (_L, _LM, _N), _LM: (_L, _LM, _N), _N: (_L, _LM, _N, _RM, _R),
         _D: (_N,), _RM: (_N, _RM, _R), _R: (_N, _RM, _R)},
    _D: {_L: (_L,), _LM: (_LM,), _N: (_N,), _D: (_D,), _RM: (_RM,), _R: (_R,)},
    _RM: {_L: (_L, _LM, _N), _LM: (_LM, _N, _RM), _N: (_N, _RM, _R),
          _D: (_RM,), _RM: (_RM, _R), _R: (_R,)},
    _R: {_L: (_L, _LM, _N, _RM, _R), _LM: (_N, _RM, _R), _N: (_N, _RM, _R),
         _D: (_R,), _RM: (_R,), _R: (_R,)},
}

UNION_OUTCOMES: dict[tuple[Outcome, Outcome], frozenset[Outcome]] = {
    (col, row): frozenset(cell)
    for row, cells in _UNION_ROWS.items()
    for col, cell in cells.items()
}


def union_outcome_allowed(o: Outcome, o_prime: Outcome, observed: Outcome) -> bool:
    """Whether ``observed`` can be the outcome of a disjoint union whose
    components have outcomes ``o`` and ``o_prime``."""
    return observed in UNION_OUTCOMES[(o, o_prime)]


# ---------------------------------------------------------------------------
# Module-level convenience API sharing one default solver

_default_solver = Solver()


def default_solver() -> Solver:
    return _default_solver


def solve(game: Game, first_player: Player) -> GameResult:
    return _default_solver.solve(game, first_player)


def outcome(game: Game) -> Outcome:
    return _default_solver.outcome(game)


def best_move(position: Position) -> tuple[str, GameResult]:
    return _default_solver.best_move(position)


def self_play(game: Game, first_player: Player) -> Trace:
    return _default_solver.self_play(game, first_player)


def delay(game: Game, protagonist: Player) -> Delay:
    return _default_solver.delay(game, protagonist)
