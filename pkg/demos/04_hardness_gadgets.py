"""Compiling formulas into games and checking them against logic oracles.

Run:  python demos/04_hardness_gadgets.py
"""

from apg import (
    CnfFormula,
    Player,
    QbfFormula,
    Solver,
    check_forced_script,
    maker_maker_embedding,
    qbf_brute,
    qbf_game,
    sat_brute,
    sat_draw_game,
    sat_win_game,
    solve_against_canonical_right,
)

L, R = Player.LEFT, Player.RIGHT
solver = Solver()

phi = CnfFormula(3, ((1, 2, 3),))
print(f"phi = (x1 | x2 | x3), satisfiable: {sat_brute(phi)}")

draw = sat_draw_game(phi)
print(f"\ndraw gadget: {draw.game.n} vertices, "
      f"{len(draw.game.blue)} blue / {len(draw.game.red)} red edges")
print(f"  Left first, full search: {solver.solve(draw.game, L)}"
      " (satisfiable formulas draw, never win)")
print(f"  Left vs the fixed Right strategy: {solve_against_canonical_right(draw.game)}")

win = sat_win_game(phi)
print(f"\nwin gadget (draw gadget + two butterflies): {win.game.n} vertices")
print(f"  Left first: {solver.solve(win.game, L)}")

unsat = CnfFormula(3, tuple((a, b, c) for a in (1, -1) for b in (2, -2)
                            for c in (3, -3)))
print(f"\nall-sign formula satisfiable: {sat_brute(unsat)}")
print(f"  draw gadget vs fixed Right: {solve_against_canonical_right(sat_draw_game(unsat).game)}")

psi = QbfFormula(2, ((1, 1, 2),))
out = qbf_game(psi)
print(f"\nvaluation-game gadget for a 2-variable formula: {out.game.n} vertices")
print(f"  valuation game winner: {qbf_brute(psi)}")
print(f"  Left as second player: {solver.solve(out.game, R)}")
for choices in ("tt", "tf", "ft", "ff"):
    print(f"  scripted opening {choices}: forced at every step: "
          f"{check_forced_script(out, choices)}")

h, ul, ur = maker_maker_embedding(sat_draw_game(phi).game)
print(f"\nsymmetric embedding: rank {h.rank} board on {h.n} vertices, "
      f"anchors {ul}/{ur}")
