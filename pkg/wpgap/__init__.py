"""
wpgap: numerical semigroups of Weierstrass points on double coverings.

Exact semigroup calculus, exhaustive enumeration by genus, the candidate
classes of ramified and unramified points, and the closed-form weight and
point-count bounds checked against them.
"""

__version__ = "1.0.0"
