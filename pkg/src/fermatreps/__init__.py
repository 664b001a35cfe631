"""Exact equivariant decomposition of polydifferentials on Fermat curves.

Subpackages compute, for the curve x^n + y^n + z^n = 0 with n >= 4 and its
automorphism group (Z/n x Z/n) semidirect S3:

- ``cyclotomic``: exact arithmetic in Z[zeta_n];
- ``group``: the group algebra, irreducible representation catalog and
  exact character values;
- ``lattice``: lattice-point counts in triangles under congruences and
  their closed forms;
- ``chars``: characters of the action on spaces of m-differentials;
- ``oracle``: a first-principles monomial-action re-computation of those
  characters, used as an independent cross-check;
- ``decompose``: multiplicities of each irreducible inside each space of
  m-differentials, closed form and brute-force inner product;
- ``series``: exact rational generating functions of those multiplicities;
- ``cli``: the command-line front end.
"""

__version__ = "0.1.0"
