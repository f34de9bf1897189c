"""
Parsers for the textual monoid, group and element grammars
"""

import logging
import re
from fractions import Fraction
from typing import List, Tuple

from models.errors import ParseError
from models.group import FiniteAbelianGroup
from utils.rational_utils import RationalUtils

logger = logging.getLogger(__name__)

Vector = Tuple[int, ...]

_INTEGER = re.compile(r"^\s*-?\d+\s*$")
_CYCLIC = re.compile(r"^Z(\d+)$", re.IGNORECASE)
_SEQUENCE_TOKEN = re.compile(r"(\([^)]*\)|\d+)(?:\^(\d+))?")


class SpecParser:
    """Utility class turning CLI strings into numbers, vectors and groups"""

    @staticmethod
    def parse_int(text: str) -> int:
        if not _INTEGER.match(text):
            raise ParseError(f"Not an integer: {text!r}")
        return int(text)

    @staticmethod
    def parse_int_list(text: str) -> List[int]:
        """'6,9,20' -> [6, 9, 20]"""
        parts = [p for p in text.split(",") if p.strip()]
        if not parts:
            raise ParseError(f"Empty integer list: {text!r}")
        return [SpecParser.parse_int(p) for p in parts]

    @staticmethod
    def parse_vector(text: str) -> Vector:
        """'(28,3,3)' or '28,3,3' -> (28, 3, 3)"""
        body = text.strip()
        if body.startswith("(") != body.endswith(")"):
            raise ParseError(f"Unbalanced parentheses in {text!r}")
        if body.startswith("("):
            body = body[1:-1]
        return tuple(SpecParser.parse_int_list(body))

    @staticmethod
    def parse_vector_list(text: str) -> List[Vector]:
        """'(4,0,0);(7,0,0)' -> [(4,0,0), (7,0,0)]"""
        parts = [p for p in text.split(";") if p.strip()]
        if not parts:
            raise ParseError(f"Empty vector list: {text!r}")
        return [SpecParser.parse_vector(p) for p in parts]

    @staticmethod
    def parse_rational_list(text: str) -> List[Fraction]:
        """'4/3,8/5' -> [Fraction(4, 3), Fraction(8, 5)]"""
        parts = [p for p in text.split(",") if p.strip()]
        if not parts:
            raise ParseError(f"Empty rational list: {text!r}")
        return [RationalUtils.parse(p) for p in parts]

    @staticmethod
    def parse_group(text: str) -> FiniteAbelianGroup:
        """'Z2xZ2xZ3' -> invariant factors (2, 6)"""
        body = text.strip()
        if body.lower() == "trivial":
            return FiniteAbelianGroup()
        orders = []
        for token in re.split(r"\s*[x×]\s*", body):
            match = _CYCLIC.match(token)
            if not match:
                raise ParseError(f"Bad cyclic factor {token!r} in group {text!r}")
            orders.append(int(match.group(1)))
        group = FiniteAbelianGroup.from_cyclic_factors(orders)
        logger.debug(f"Parsed group {text!r} as {group.label()}")
        return group

    @staticmethod
    def parse_sequence_tokens(text: str) -> List[Tuple[Vector, int]]:
        """'1^5(4)^5' -> [((1,), 5), ((4,), 5)]"""
        body = re.sub(r"\s+", "", text)
        tokens = []
        position = 0
        for match in _SEQUENCE_TOKEN.finditer(body):
            if match.start() != position:
                break
            residues = SpecParser.parse_vector(match.group(1))
            count = int(match.group(2)) if match.group(2) else 1
            tokens.append((residues, count))
            position = match.end()
        if position != len(body) or not tokens:
            raise ParseError(f"Cannot parse sequence {text!r} near position {position}")
        return tokens
