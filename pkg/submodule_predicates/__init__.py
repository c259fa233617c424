"""Submodule- and module-level predicates: semiprime, quasi-semiprime, multiplication, envelope."""
