"""parse_rational / parse_complex functions"""

import logging
import re
from fractions import Fraction

logger = logging.getLogger(__name__)

_RATIONAL = re.compile(r'^([+-]?\d+)(?:/(\d+))?$')

# A real or imaginary coefficient: 3, -2.5, .5, 1e-3
_NUMBER = r'(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?'
_COMPLEX = re.compile(
    rf'^(?P<re>[+-]?{_NUMBER})?'
    rf'(?:(?P<sign>[+-])?(?P<im>{_NUMBER})?i)?$'
)


def parse_rational(text: str) -> Fraction:
    """
    Parse a weight written as an integer or a fraction ``p/q``.

    Args:
        text: Token such as ``3``, ``-1/2`` or ``+4/6``

    Returns:
        The exact rational value

    Raises:
        ValueError: If the token is malformed or the denominator is zero

    Examples:
        >>> parse_rational("-1/2")
        Fraction(-1, 2)
        >>> parse_rational("4/6")
        Fraction(2, 3)
    """
    match = _RATIONAL.match(text.strip())
    if not match:
        raise ValueError(f"Invalid rational '{text}': use an integer or p/q")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise ValueError(f"Invalid rational '{text}': zero denominator")
    return Fraction(numerator, denominator)


def format_rational(value: Fraction) -> str:
    """Canonical text of a rational: ``3`` or ``-1/2``."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_complex(text: str) -> complex:
    """
    Parse a complex matrix entry written as ``a+bi``.

    Accepts ``3``, ``-2.5``, ``4i``, ``-i``, ``1+2i``, ``1e-3-0.5i``.

    Raises:
        ValueError: If the token is malformed
    """
    token = text.strip()
    match = _COMPLEX.match(token)
    if not token or not match or (match.group('re') is None and not token.endswith('i')):
        raise ValueError(f"Invalid complex entry '{text}': use a+bi")
    real = float(match.group('re')) if match.group('re') else 0.0
    imag = 0.0
    if token.endswith('i'):
        if match.group('re') is not None and match.group('sign') is None:
            # "3i" parses as re="3" with an empty imaginary part
            return complex(0.0, float(match.group('re')))
        coefficient = float(match.group('im')) if match.group('im') else 1.0
        imag = -coefficient if match.group('sign') == '-' else coefficient
    logger.debug(f"Parsed complex entry {text!r} as {real}+{imag}i")
    return complex(real, imag)


def format_complex(value: complex) -> str:
    """Canonical ``a+bi`` text of a complex number (repr-exact floats)."""
    value = complex(value)
    sign = '-' if value.imag < 0 or (value.imag == 0 and str(value.imag).startswith('-')) else '+'
    return f"{value.real!r}{sign}{abs(value.imag)!r}i"
