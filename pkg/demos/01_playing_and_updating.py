"""A tour of the board model: picks, edge updates, unions, twins.

Run:  python demos/01_playing_and_updating.py
"""

from apg import Player, Position, butterfly, disjoint_union, status, twin_reduce, update

L, R = Player.LEFT, Player.RIGHT

game = butterfly()
print("the blue butterfly:")
print(" ", game)

# Left opens on the hub; every blue edge shrinks, nothing dies.
print("\nresidual game after Left takes the hub:")
print(" ", update(game, ["alpha"], []))

# Right answers inside one wing; both edges through beta1 are dead for Left.
print("\n... and after Right answers beta1:")
print(" ", update(game, ["alpha"], ["beta1"]))

print("\nplaying the full line move by move:")
pos = Position.start(game, L)
for vertex in ["alpha", "beta1", "beta2", "gamma3", "gamma4"]:
    pos = pos.play(vertex)
    print(f"  {vertex:7s} -> {status(pos)}")

# Boards glue side by side; name collisions get a suffix.
two, renames = disjoint_union(butterfly(), butterfly())
print(f"\ntwo butterflies side by side: {two.n} vertices, "
      f"{len(two.blue)} blue edges; renamed {len(renames)} vertices")

# Twins: vertices living in exactly the same edges cancel in pairs.
from apg import new_game

g = new_game(["a", "b", "x", "y", "z"], [["a", "b", "x"], ["a", "b", "y"]], [])
reduced, log = twin_reduce(g)
print(f"\ntwin removal on {g}")
print(f"  removed pairs: {log}")
print(f"  fixpoint: {reduced}")
