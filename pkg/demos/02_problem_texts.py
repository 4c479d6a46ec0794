"""
Solving the problem texts
=========================

The four staple problem families: completion reckoning, unknown-quantity
(hau) equations solved by false position, loaf division, and progressions,
ending with the famous ladder of powers of seven.
"""

from fractions import Fraction

from scribal import (
    HauProblem,
    arithmetic_shares,
    decompose,
    divide_loaves,
    geometric_ladder,
    sequem_complete,
    solve_hau,
    solve_hau_false_position,
)

# Completion: what joins 2/3 + 1/30 to make 1?
given = Fraction(2, 3) + Fraction(1, 30)
missing = sequem_complete(given, Fraction(1))
print(f"complete {given} up to 1: add {missing} ({decompose(missing)})")

# The classic: a quantity and its seventh make 19.
problem = HauProblem.from_terms([1, Fraction(1, 7)], 19)
answer = solve_hau(problem)
print(f"\nquantity and its seventh = 19  ->  x = {answer} = {decompose(answer)}")

# The historical route assumes a convenient trial value (7, so the
# seventh is whole), then rescales. Exact for any linear problem.
answer2, trace = solve_hau_false_position(problem, 7)
print(f"by false position: {trace.render()}")
assert answer2 == answer

# Six loaves among ten men: each share written in unit fractions.
share = divide_loaves(6, 10)
print(f"\n6 loaves, 10 men: each gets {share} (= {share.value()})")

# Ten shares summing to 10 with common difference 1/8, smallest first.
shares = arithmetic_shares(10, 10, Fraction(1, 8))
print(f"\nten stepped shares of 10: {', '.join(str(s) for s in shares)}")
print(f"re-sum: {sum(shares)}")

# The ladder: powers of seven with their traditional names.
print()
print(geometric_ladder(7, 5).render())
