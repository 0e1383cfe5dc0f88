"""Holonomy-equivariant criteria and the co-Hopf question.

With a finite automorphism group F in play, expansion needs a positive
grading preserved by all of F (equivalently an expanding automorphism
commuting with F); self-covers need the non-negative analogue.  Both
checks run on explicit certificates, and for monomial F the weight search
itself becomes F-equivariant.
"""

from nilgrade import matrices as mx
from nilgrade.fixtures import load_algebra, load_holonomy, load_map
from nilgrade.grading import grading_from_weights, phi_p
from nilgrade.holonomy import (
    check_covinfra,
    check_expinfra,
    close_group,
    commutes_with_all,
    equivariant_weight_search,
)
from nilgrade.liealg import is_characteristically_nilpotent

heis = load_algebra("heisenberg3")

# F = {1, diag(-1,-1,1)}: sign holonomy on the Heisenberg algebra.
sign = load_holonomy("heisenberg3_sign")
print("sign holonomy order:", len(sign))

g = grading_from_weights(heis, (1, 1, 2))
v = check_expinfra(heis, sign, g)
print("grading certificate:", v.decision, "via", v.condition)

m = mx.diag([2, 2, 4])
v = check_expinfra(heis, sign, m)
print("matrix certificate:", v.decision, "via", v.condition)

# The swap holonomy permutes X1 and X2; the search adds w1 = w2 and still
# finds the symmetric grading, whose phi_p commutes with all of F.
swap = load_holonomy("heisenberg3_swap")
w = equivariant_weight_search(heis, swap, "positive")
print("\nswap-equivariant weights:", w)
phi = phi_p(heis, grading_from_weights(heis, w), 5)
print("phi_5 commutes with F:", commutes_with_all(phi, swap))

# Non-monomial holonomy is outside the search class: certificates only.
order3 = load_holonomy("heisenberg3_order3")
try:
    equivariant_weight_search(heis, order3, "positive")
except ValueError as e:
    print("order-3 non-monomial holonomy:", e)

# Self-covers: the 7-dimensional notcohopf algebra is witnessed by phi
# with det 2^10; the characteristically nilpotent nilp5 can never have
# one, which certifies co-Hopficity of every full subgroup.
nc = load_algebra("notcohopf")
trivial = close_group([mx.identity(7)])
v = check_covinfra(nc, trivial, load_map("notcohopf", "phi"))
print("\nnotcohopf self-cover certificate:", v.decision, "det =", v.certificate["det"])

n5 = load_algebra("nilp5")
v = is_characteristically_nilpotent(n5)
print("nilp5 characteristically nilpotent:", v.decision,
      f"({v.certificate['derivation_dim']} basis derivations, all nilpotent)")
