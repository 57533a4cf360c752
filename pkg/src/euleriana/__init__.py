"""euleriana: numerical verification engine for classical-analysis identities.

Subpackages/modules:

* polyrat     -- complex polynomial/rational calculus (roots, partial fractions)
* quadrature  -- adaptive Gauss-Kronrod, tanh-sinh, semi-infinite and path integrals
* specfun     -- gamma family, Dirichlet series, hypergeometric, orthogonal polynomials
* series      -- Euler transform, Abel summation, Euler-Maclaurin, Stirling
* recurrence  -- integral-ansatz solver for linear-coefficient difference equations
* arithmetica -- divisor sums, partitions, derangements, Legendre symbols
* harness     -- identity registry, suite runner, CLI
"""

__version__ = "0.1.0"
