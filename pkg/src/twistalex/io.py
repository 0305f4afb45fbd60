"""
Text formats: presentation files, JSON representation files and the JSON
encoding of cyclotomic numbers, Laurent polynomials and TAP results.
"""

import json
from fractions import Fraction

from .algebra import CyclotomicNumber, LaurentPolynomial
from .fpgroup import Presentation, PresentationError, WordSyntaxError, parse_word
from .rep import Representation

FORMAT_VERSION = 1


class FormatError(ValueError):
    """Malformed input file; the message names the line or field at fault."""


def parse_presentation(text):
    """
    Read ``gens: g1 g2 ...``, an optional ``meridian: g`` and any number of
    ``rel: <word>`` lines.  ``#`` starts a comment; blank lines are ignored.
    """
    gens = meridian = None
    relators = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        key = key.strip()
        if not sep:
            raise FormatError("line %d: expected 'key: value', got %r" % (lineno, line))
        if key == "gens":
            if gens is not None:
                raise FormatError("line %d: duplicate gens line" % lineno)
            gens = rest.split()
        elif key == "meridian":
            if meridian is not None:
                raise FormatError("line %d: duplicate meridian line" % lineno)
            meridian = rest.strip()
        elif key == "rel":
            try:
                relators.append(parse_word(rest))
            except WordSyntaxError as exc:
                col = raw.index(":") + 2 + exc.position
                raise FormatError("line %d, column %d: %s" % (lineno, col, exc)) from None
        else:
            raise FormatError("line %d: unknown key %r" % (lineno, key))
    if gens is None:
        raise FormatError("missing gens line")
    try:
        return Presentation(gens, relators, meridian=meridian or None)
    except PresentationError as exc:
        raise FormatError(str(exc)) from None


def render_presentation(presentation):
    lines = ["gens: " + " ".join(presentation.generators)]
    if presentation.meridian is not None:
        lines.append("meridian: " + presentation.meridian)
    lines.extend("rel: %s" % r for r in presentation.relators)
    return "\n".join(lines) + "\n"


def load_presentation(path):
    with open(path, encoding="utf-8") as fh:
        return parse_presentation(fh.read())


def cyclotomic_to_json(c):
    """Nonzero coordinates of c in the power basis, as {"pow", "num", "den"} monomials."""
    return [{"pow": k, "num": f.numerator, "den": f.denominator}
            for k, f in enumerate(c.coeffs) if f]


def cyclotomic_from_json(monomials, order, where="entry"):
    if not isinstance(monomials, list):
        raise FormatError("%s: expected a list of monomials" % where)
    acc = CyclotomicNumber.rational(0, order)
    for mono in monomials:
        try:
            k, a, b = mono["pow"], mono["num"], mono["den"]
        except (KeyError, TypeError):
            raise FormatError("%s: monomial needs pow, num and den" % where) from None
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in (k, a, b)):
            raise FormatError("%s: pow, num and den must be integers" % where)
        if b <= 0:
            raise FormatError("%s: den must be positive" % where)
        acc = acc + CyclotomicNumber.zeta(order, k) * Fraction(a, b)
    return acc


def laurent_to_json(p):
    return {"low": p.low, "coeffs": [cyclotomic_to_json(c) for c in p.coeffs]}


def laurent_from_json(obj, order):
    try:
        low, coeffs = obj["low"], obj["coeffs"]
    except (KeyError, TypeError):
        raise FormatError("Laurent polynomial needs low and coeffs") from None
    return LaurentPolynomial([cyclotomic_from_json(c, order, "coefficient") for c in coeffs],
                             low, order)


def representation_to_json(rho, generators=None):
    gens = generators or rho.generators
    return {
        "order": rho.order,
        "dim": rho.dim,
        "images": {g: [[cyclotomic_to_json(x) for x in row] for row in rho.images[g]]
                   for g in gens},
    }


def representation_from_json(obj):
    if not isinstance(obj, dict):
        raise FormatError("representation must be a JSON object")
    try:
        q, n, images = obj["order"], obj["dim"], obj["images"]
    except KeyError as exc:
        raise FormatError("representation is missing %s" % exc) from None
    if not isinstance(q, int) or q < 1:
        raise FormatError("order must be a positive integer")
    if not isinstance(n, int) or n < 1:
        raise FormatError("dim must be a positive integer")
    if not isinstance(images, dict) or not images:
        raise FormatError("images must be a nonempty object")
    mats = {}
    for g, rows in images.items():
        if not isinstance(rows, list) or len(rows) != n or any(
                not isinstance(r, list) or len(r) != n for r in rows):
            raise FormatError("image of %s is not a %dx%d matrix" % (g, n, n))
        mats[g] = tuple(tuple(cyclotomic_from_json(x, q, "image of %s" % g) for x in row)
                        for row in rows)
    return Representation(mats, order=q)


def parse_representation(text):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError("invalid JSON: %s" % exc) from None
    return representation_from_json(obj)


def load_representation(path):
    with open(path, encoding="utf-8") as fh:
        return parse_representation(fh.read())


def dumps(obj):
    """Deterministic JSON: sorted keys, fixed separators."""
    return json.dumps(obj, sort_keys=True, separators=(",", ": "), indent=1)


def tap_result_to_json(result):
    return {
        "format": FORMAT_VERSION,
        "order": result.value.order,
        "dim": result.dim,
        "column": result.column,
        "numerator": laurent_to_json(result.numerator_raw),
        "denominator": laurent_to_json(result.denominator_raw),
        "value": {"numerator": laurent_to_json(result.value.numerator),
                  "denominator": laurent_to_json(result.value.denominator)},
    }
