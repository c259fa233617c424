"""Finite graded modules, graded submodules, colon ideals, annihilators, quotients."""
