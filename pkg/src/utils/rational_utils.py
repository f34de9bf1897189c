"""
Exact rational helpers
"""

import re
from fractions import Fraction
from typing import Optional, Tuple, Union

from models.errors import ParseError

_RATIONAL = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(\d+))?\s*$")


class RationalUtils:
    """Utility class for rendering and parsing exact rationals"""

    @staticmethod
    def to_str(value: Optional[Union[Fraction, int]]) -> Optional[str]:
        """Render as 'p/q' in lowest terms; integers become 'n/1'"""
        if value is None:
            return None
        value = Fraction(value)
        return f"{value.numerator}/{value.denominator}"

    @staticmethod
    def parse(text: str) -> Fraction:
        match = _RATIONAL.match(text)
        if not match:
            raise ParseError(f"Not a rational number: {text!r}")
        numerator, denominator = match.group(1), match.group(2)
        if denominator is not None and int(denominator) == 0:
            raise ParseError(f"Zero denominator in {text!r}")
        return Fraction(int(numerator), int(denominator or 1))

    @staticmethod
    def mediant(first: Tuple[int, int], second: Tuple[int, int]) -> Fraction:
        """(a+c)/(b+d) for the unreduced pairs (a, b) and (c, d)"""
        return Fraction(first[0] + second[0], first[1] + second[1])
