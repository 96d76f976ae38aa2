"""modhyp: exact recovery of hyperelliptic curves from q-expansions of
differentials, newform coefficient machinery, a genus-3 coefficient
sieve, and the arithmetic bound predicates that drive them."""

__version__ = "0.1.0"
