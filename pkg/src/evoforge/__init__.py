"""evoforge: evolutionary search toolkit.

Three strands share one deterministic core:

* continuous plant-propagation optimization on five classic 2D test
  surfaces, with a full (population size x offspring cap) sweep harness;
* forging hard Hamiltonian-cycle instances by evolving graphs against an
  exact backtracking solver whose recursion count is the fitness;
* layered 50%-opacity pixel arithmetic and the subset-sum reduction built
  on it, verified by brute-force round trips.
"""

__version__ = "0.1.0"
