"""
Field areas, granaries, and pyramid slopes
==========================================

The recorded mensuration rules: squaring the circle by eight ninths of
the diameter, rectilinear areas, granary capacity, the seked slope
measure, and heights from shadows.
"""

from fractions import Fraction

from scribal import (
    circle_area_egyptian,
    granary_volume,
    implied_pi_error,
    pi_comparison_set,
    rect_area,
    seked_cotangent,
    seked_from,
    seked_to_height,
    shadow_height,
    square_area,
    trapezoid_area,
    triangle_area,
)

# A round field of diameter 9 is booked as the square on 8/9 of the
# diameter: side 8, area 64.
print(f"circle of diameter 9: area {circle_area_egyptian(9)}")
print(f"circle of diameter 2: area {circle_area_egyptian(2)}")

# That rule silently assumes a value for pi. How good was it?
print()
print(implied_pi_error().render())
print()
for label, report in pi_comparison_set():
    print(f"{label:>16}: off by {report.as_dict()['abs_error_decimal']}")

# The rectilinear rules are exact.
print()
print(f"square side 8:        {square_area(8)}")
print(f"rectangle 3 x 4:      {rect_area(3, 4)}")
print(f"triangle b=4 h=3:     {triangle_area(4, 3)}")
print(f"trapezoid 6,4 h=20:   {trapezoid_area(6, 4, 20)}")
print(f"granary 8x8 floor, length 10: {granary_volume(square_area(8), 10)}")

# Slope of a pyramid face: horizontal palms per cubit of rise.
base, height = Fraction(360), Fraction(250)
seked = seked_from(base, height)
print(f"\npyramid base {base}, height {height}: seked {seked}"
      f" (cotangent {seked_cotangent(seked)})")
print(f"inverting recovers the height exactly: {seked_to_height(base, seked)}")
print(f"a seked of 7 palms means a 45-degree face: cot = {seked_cotangent(7)}")

# Height measurement by shadow, at the moment a stick's shadow equals
# the stick itself.
print(f"\npyramid shadow 100, stick 1, stick shadow 1: height {shadow_height(100, 1, 1)}")
