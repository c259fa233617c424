"""Graded homomorphisms between graded modules over one ring."""
