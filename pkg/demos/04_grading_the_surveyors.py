"""
Grading the approximate rules against exact oracles
===================================================

Two famous shortcuts never under-estimate: the donation-text rule for
quadrilaterals (product of opposite-side means) and the medieval
leg-times-half-base rule for isoceles triangles. Here each is graded
against an exact computation.
"""

import random

from scribal import (
    SideQuad,
    edfu_area,
    edfu_area_via_diagonal_split,
    edfu_error_report,
    exact_polygon_area,
    gerbert_isoceles_area,
    is_right_triangle,
    random_convex_quadrilateral,
    rational_right_triangles,
    triangle_area_two_sides,
)

# The quadrilateral rule books a 3-4-5 triangle as a quadrilateral with a
# vanishing fourth side: (3+5)/2 * (4+0)/2 = 8, against the true 6.
report = edfu_error_report([(0, 0), (3, 0), (3, 4)])
print("3-4-5 triangle booked as a quadrilateral:")
print(report.render())

# The rule equals the mean of the two diagonal-split triangle estimates,
# an exact algebraic identity.
quad = SideQuad(7, 4, 5, 2)
assert edfu_area_via_diagonal_split(quad) == edfu_area(quad)
print(f"\nsides 7,4,5,2: rule {edfu_area(quad)}, via diagonal splits "
      f"{edfu_area_via_diagonal_split(quad)}")

# On a random batch of convex surveyed fields the rule never comes in low;
# it is exact precisely on rectangles.
rng = random.Random(42)
worst = max(
    (edfu_error_report(random_convex_quadrilateral(rng, 50)) for _ in range(200)),
    key=lambda r: r.absolute_error,
)
print(f"\n200 random fields: worst over-estimate {worst.as_dict()['abs_error_decimal']}")
print(f"axis rectangle check: error {edfu_error_report([(0,0),(7,0),(7,3),(0,3)]).absolute_error}")

# The two-side triangle rule is exact exactly when the sides meet at a
# right angle; rope stretchers arranged that with the 3-4-5 triangle.
print(f"\ntwo-side rule on legs 3,4: {triangle_area_two_sides(3, 4)}"
      f" vs exact {exact_polygon_area([(0,0),(3,0),(3,4)])}")
print(f"3-4-5 closes a right angle: {is_right_triangle(3, 4, 5)}")
print(f"other rational right triangles up to perimeter 60: "
      f"{rational_right_triangles(60)}")

# A thousand years later the same over-estimation pattern: leg times half
# the base instead of height times half the base.
report = gerbert_isoceles_area(5, 6)
print(f"\nisoceles legs 5, base 6: rule {report.historical}, exact {report.exact}")
