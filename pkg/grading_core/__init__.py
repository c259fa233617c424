"""
Grading groups, finite graded commutative rings, graded ideals.

Rings are explicit operation tables checked exhaustively on construction;
ideals are element sets. Ideal predicates live in grading_core.ideals.
"""
