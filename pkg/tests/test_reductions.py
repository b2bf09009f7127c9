"""Formula parsing, the gadget compilers, their oracles and script checks."""

import pytest

from apg import (
    ApgParseError,
    BadClauseSizeError,
    CanonicalRightResult,
    CnfFormula,
    EdgeTooLargeError,
    GameResult,
    OddVarCountError,
    Player,
    Position,
    QbfFormula,
    QbfWinner,
    ScriptViolationError,
    Solver,
    butterfly,
    canonical_right_move,
    check_forced_script,
    maker_maker_embedding,
    new_game,
    parse_dimacs,
    parse_dimacs_qbf,
    qbf_brute,
    qbf_game,
    sat_brute,
    sat_draw_game,
    sat_win_game,
    solve_against_canonical_right,
    update,
)
from apg.gadgets import random_game, rng_for

L, R = Player.LEFT, Player.RIGHT
LW, DR, RW = GameResult.LEFT_WIN, GameResult.DRAW, GameResult.RIGHT_WIN
NONLOSS = CanonicalRightResult.LEFT_NON_LOSING
RWINS = CanonicalRightResult.RIGHT_WINS


def all_sign_clauses():
    return tuple((a, b, c) for a in (1, -1) for b in (2, -2) for c in (3, -3))


# -- formulas and DIMACS ----------------------------------------------------------

def test_formula_validation():
    with pytest.raises(BadClauseSizeError):
        CnfFormula(2, ())
    with pytest.raises(BadClauseSizeError):
        CnfFormula(2, ((1, 2),))
    with pytest.raises(ValueError):
        CnfFormula(2, ((1, 2, 3),))
    with pytest.raises(OddVarCountError):
        QbfFormula(3, ((1, 2, 3),))


def test_parse_dimacs():
    phi = parse_dimacs("c comment\np cnf 3 2\n1 -2 3 0\n-1 2 -3 0\n")
    assert phi.num_vars == 3
    assert phi.clauses == ((1, -2, 3), (-1, 2, -3))


def test_parse_dimacs_multiline_clause():
    phi = parse_dimacs("p cnf 2 1\n1 2\n-1 0\n")
    assert phi.clauses == ((1, 2, -1),)


def test_parse_dimacs_rejects_wrong_size():
    with pytest.raises(ApgParseError):
        parse_dimacs("p cnf 2 1\n1 2 0\n")


def test_parse_dimacs_requires_header():
    with pytest.raises(ApgParseError):
        parse_dimacs("1 2 3 0\n")


def test_parse_dimacs_qbf_even():
    with pytest.raises(OddVarCountError):
        parse_dimacs_qbf("p cnf 3 1\n1 2 3 0\n")


# -- brute oracles -----------------------------------------------------------------

def test_sat_brute():
    assert sat_brute(CnfFormula(3, ((1, 2, 3),)))
    assert not sat_brute(CnfFormula(3, all_sign_clauses()))


def test_qbf_brute():
    assert qbf_brute(QbfFormula(2, ((1, 1, 1),))) is QbfWinner.SATISFIER
    assert qbf_brute(QbfFormula(2, ((1, 1, 1), (-1, -1, -1)))) is QbfWinner.FALSIFIER
    assert qbf_brute(QbfFormula(2, ((2, 2, 2),))) is QbfWinner.FALSIFIER


# -- the draw gadget -----------------------------------------------------------------

def test_draw_gadget_counts():
    out = sat_draw_game(CnfFormula(3, ((1, 2, 3),)))
    g = out.game
    assert g.n == 2 * 3 + 6 + 3 == 15
    assert len(g.blue) == 6
    assert len(g.red) == 5
    assert all(len(e) <= 3 for e in g.blue_edges)
    assert all(len(e) <= 2 for e in g.red_edges)


def test_draw_gadget_two_clause_count():
    phi = CnfFormula(4, ((-1, 2, 3), (-2, 3, 4)))
    assert sat_draw_game(phi).game.n == 2 * 4 + 12 + 3 == 23


def test_draw_gadget_provenance_covers_vertices():
    out = sat_draw_game(CnfFormula(2, ((1, 2, 2),)))
    assert sorted(out.provenance.values()) == sorted(out.game.vertices)


def test_draw_gadget_satisfiable_not_losing():
    g = sat_draw_game(CnfFormula(3, ((1, 2, 3),))).game
    assert Solver().solve(g, L) is not RW
    assert solve_against_canonical_right(g) is NONLOSS


def test_draw_gadget_never_left_win():
    # even satisfiable formulas give Left only a draw moving first
    s = Solver()
    for clause in ((1, 2, 3), (-1, -2, -3), (1, 1, 2)):
        g = sat_draw_game(CnfFormula(3, (clause,))).game
        assert s.solve(g, L) is DR


def test_draw_gadget_unsat_loses():
    g = sat_draw_game(CnfFormula(3, all_sign_clauses())).game
    assert solve_against_canonical_right(g) is RWINS


def test_canonical_right_priorities():
    g = new_game(["a", "b"], [], [["a"], ["a", "b"]])
    pos = Position.from_picks(g, [], [], R)
    assert canonical_right_move(pos) == "a"  # wins in one
    g = new_game(["a", "b"], [["b"]], [["a", "b"]])
    pos = Position.from_picks(g, [], [], R)
    assert canonical_right_move(pos) == "b"  # blocks the only Left win
    g = new_game(["a", "b", "c"], [], [["a", "b"], ["b", "c"]])
    pos = Position.from_picks(g, [], [], R)
    assert canonical_right_move(pos) == "b"  # red path centre
    g = new_game(["a", "b"], [["a", "b"]], [])
    pos = Position.from_picks(g, [], [], R)
    assert canonical_right_move(pos) == "a"  # arbitrary: lowest index


def test_canonical_right_answers_literal_pick():
    out = sat_draw_game(CnfFormula(3, ((1, 2, 3),)))
    pos = Position.start(out.game, L).play("x1")
    assert canonical_right_move(pos) == "nx1"


def test_canonical_right_exploration_trivial_draw():
    g = new_game(["a", "b"], [], [["a", "b"]])
    assert solve_against_canonical_right(g) is NONLOSS


# -- the win gadget ---------------------------------------------------------------------

def test_win_gadget_counts():
    out = sat_win_game(CnfFormula(3, ((1, 2, 3),)))
    assert out.game.n == 15 + 14 == 29
    assert sorted(out.provenance.values()) == sorted(out.game.vertices)


def test_win_gadget_satisfiable_wins():
    g = sat_win_game(CnfFormula(3, ((1, 2, 3),))).game
    assert Solver().solve(g, L) is LW


def test_win_gadget_unsat_right_wins():
    g = sat_win_game(CnfFormula(3, all_sign_clauses())).game
    assert solve_against_canonical_right(g) is RWINS


# -- the QBF gadget ----------------------------------------------------------------------

def test_qbf_gadget_counts():
    out = qbf_game(QbfFormula(2, ((1, 1, 2),)))
    assert out.game.n == 2 * 11 + 1 == 23
    assert sorted(out.provenance.values()) == sorted(out.game.vertices)
    assert all(len(e) <= 3 for e in out.game.blue_edges | out.game.red_edges)


def test_qbf_gadget_satisfier_side():
    psi = QbfFormula(2, ((1, 1, 2),))
    assert qbf_brute(psi) is QbfWinner.SATISFIER
    g = qbf_game(psi).game
    assert Solver().solve(g, R) is not LW


def test_qbf_gadget_falsifier_side():
    psi = QbfFormula(2, ((1, 1, 1), (-1, -1, -1)))
    assert qbf_brute(psi) is QbfWinner.FALSIFIER
    g = qbf_game(psi).game
    assert Solver().solve(g, R) is LW


def test_forced_script_all_choices():
    out = qbf_game(QbfFormula(2, ((1, 1, 2),)))
    for choices in ("tt", "tf", "ft", "ff"):
        assert check_forced_script(out, choices)


def test_forced_script_moves_count():
    out = qbf_game(QbfFormula(4, ((1, 2, 3),)))
    assert check_forced_script(out, "tftf")


def test_qbf_gadget_four_variable_spot_checks():
    s = Solver()
    for clauses, falsifier_wins in [
        (((1, 2, 3),), False),
        (((2, 2, 2), (-2, -2, -2)), True),
        (((1, 1, 2), (-1, -1, 2)), True),
    ]:
        psi = QbfFormula(4, clauses)
        assert (qbf_brute(psi) is QbfWinner.FALSIFIER) == falsifier_wins
        out = qbf_game(psi)
        assert out.game.n == 4 * 11 + 1 == 45
        assert (s.solve(out.game, R) is GameResult.LEFT_WIN) == falsifier_wins


def test_forced_script_detects_tampering():
    from apg.core import game_from_masks
    from apg.reductions import ReductionOutput

    out = qbf_game(QbfFormula(2, ((1, 1, 2),)))
    g = out.game
    tampered = game_from_masks(g.vertices, g.blue, g.red[1:])
    with pytest.raises(ScriptViolationError):
        check_forced_script(ReductionOutput(tampered, out.provenance), "tt")


# -- Maker-Maker embedding ------------------------------------------------------------------

def test_embedding_shapes():
    g = new_game(["a", "b"], [["a"]], [["b"]])
    h, ul, ur = maker_maker_embedding(g)
    assert h.edge_sets == frozenset({frozenset({"a", ul}), frozenset({"b", ur})})
    assert h.rank == 2


def test_embedding_butterfly_rank4():
    h, _, _ = maker_maker_embedding(butterfly())
    assert h.rank == 4 and len(h.edges) == 4


def test_embedding_rejects_rank4_input():
    g = new_game(["a", "b", "c", "d"], [["a", "b", "c", "d"]], [])
    with pytest.raises(EdgeTooLargeError):
        maker_maker_embedding(g)


def test_embedding_round_trip_values():
    rng = rng_for(77, "mm-embed")
    s = Solver()
    for _ in range(60):
        g = random_game(rng, max_vertices=6, max_edge_size=3)
        h, ul, ur = maker_maker_embedding(g)
        mm = new_game(h.vertices, [sorted(e) for e in h.edge_sets],
                      [sorted(e) for e in h.edge_sets])
        reduced = update(mm, [ul], [ur])
        assert reduced == g
        assert s.solve(reduced, L) == s.solve(g, L)
