"""Catalog sweeps, theorem checkers, naive oracles and the separation search."""
