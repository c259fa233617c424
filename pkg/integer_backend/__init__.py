"""
Integer backend: trivially graded Z acting on Z^a + Z_n1 + ... + Z_nk.

Reproduces the two Z-examples exactly: colon ideals by lattice arithmetic,
squarefree semiprime test, witness checks, and a full semiprime decision for
torsion modules.
"""
