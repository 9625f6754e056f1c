"""Bundled example polynomials.

`nested_octic()` returns a degree-8 biharmonic polynomial, the product of an
ellipse and a sextic, whose nodal set contains an oval strictly nested
inside another; it drives the demos and the acceptance suite.
"""

from __future__ import annotations

from .polynomial import BiPoly

ELLIPSE_TEXT = "25 - x^2 - 25*y^2"

SEXTIC_TEXT = (
    "8254531*x^6 - 54879201*x^4*y^2 + 24763593*x^4 + 36742485*x^2*y^4"
    " - 12556530*x^2*y^2 - 1856167*y^6 - 556035*y^4 + 19758600*y^2 - 8254531"
)

NESTED_OCTIC_TEXT = f"({ELLIPSE_TEXT})*({SEXTIC_TEXT})"


def ellipse() -> BiPoly:
    return BiPoly({(0, 0): 25, (2, 0): -1, (0, 2): -25})


def sextic() -> BiPoly:
    return BiPoly(
        {
            (6, 0): 8254531,
            (4, 2): -54879201,
            (4, 0): 24763593,
            (2, 4): 36742485,
            (2, 2): -12556530,
            (0, 6): -1856167,
            (0, 4): -556035,
            (0, 2): 19758600,
            (0, 0): -8254531,
        }
    )


def nested_octic() -> BiPoly:
    """Degree-8 biharmonic product with a double nest in its nodal set."""
    return ellipse() * sextic()
