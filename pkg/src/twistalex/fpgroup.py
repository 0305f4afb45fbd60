"""
Finitely presented groups: words, the integral free group ring, Fox
derivatives and the abelianization onto <t>.
"""

import math
import re
from collections import defaultdict

_NAME = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")
_TOKEN = re.compile(r"\S+")
_SYLLABLE = re.compile(r"([A-Za-z][A-Za-z0-9_]*)(?:\^([+-]?\d+))?\Z")


class WordSyntaxError(ValueError):
    """Malformed word text; ``position`` is the 0-based character offset."""

    def __init__(self, message, position):
        super().__init__("%s at position %d" % (message, position))
        self.position = position


def _reduce(syllables):
    stack = []
    for g, e in syllables:
        if e == 0:
            continue
        if stack and stack[-1][0] == g:
            e += stack[-1][1]
            stack.pop()
            if e:
                stack.append((g, e))
        else:
            stack.append((g, e))
    return tuple(stack)


class Word:
    """
    A freely reduced word, stored as syllables (generator, exponent) with
    adjacent generators distinct and nonzero exponents.
    """

    __slots__ = ("syllables", "_hash")

    def __init__(self, syllables=()):
        self.syllables = _reduce(syllables)
        self._hash = None

    @classmethod
    def _raw(cls, syllables):
        self = object.__new__(cls)
        self.syllables = syllables
        self._hash = None
        return self

    @classmethod
    def generator(cls, g, exponent=1):
        return cls._raw(((g, exponent),) if exponent else ())

    @classmethod
    def parse(cls, text):
        return parse_word(text)

    def is_identity(self):
        return not self.syllables

    def __len__(self):
        return sum(abs(e) for _, e in self.syllables)

    def letters(self):
        """The word as a flat list of (generator, +-1)."""
        out = []
        for g, e in self.syllables:
            s = 1 if e > 0 else -1
            out.extend([(g, s)] * abs(e))
        return out

    def generators(self):
        return {g for g, _ in self.syllables}

    def exponent_sum(self, g):
        return sum(e for h, e in self.syllables if h == g)

    def __mul__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        a, b = self.syllables, other.syllables
        if not a:
            return other
        if not b:
            return self
        if a[-1][0] != b[0][0]:
            return Word._raw(a + b)
        return Word(a + b)

    def inverse(self):
        return Word._raw(tuple((g, -e) for g, e in reversed(self.syllables)))

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** -k
        return Word(self.syllables * k)

    def __eq__(self, other):
        return isinstance(other, Word) and self.syllables == other.syllables

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.syllables)
        return self._hash

    def __lt__(self, other):
        return self.syllables < other.syllables

    def __repr__(self):
        return "Word(%r)" % (render_word(self),)

    def __str__(self):
        return render_word(self) or "1"


IDENTITY = Word()


def parse_word(text):
    """
    Parse whitespace-separated tokens ``name`` or ``name^k`` (k a nonzero
    signed integer) into a freely reduced Word.
    """
    syllables = []
    for m in _TOKEN.finditer(text):
        tok = m.group(0)
        sm = _SYLLABLE.match(tok)
        if sm is None:
            raise WordSyntaxError("bad token %r" % tok, m.start())
        e = 1 if sm.group(2) is None else int(sm.group(2))
        if e == 0:
            raise WordSyntaxError("zero exponent in %r" % tok, m.start() + tok.index("^"))
        syllables.append((sm.group(1), e))
    return Word(syllables)


def render_word(w):
    return " ".join(g if e == 1 else "%s^%d" % (g, e) for g, e in w.syllables)


def free_reduce(w):
    """Canonical freely reduced form of a Word or of a sequence of (generator, exponent)."""
    if isinstance(w, Word):
        return Word(w.syllables)
    return Word(w)


class GroupRingElement:
    """A finite integer combination of words in Z[F]."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for w, c in items:
                if c:
                    clean[w] = clean.get(w, 0) + c
        self.terms = {w: c for w, c in clean.items() if c}

    @classmethod
    def of(cls, w, coefficient=1):
        return cls({w: coefficient})

    @classmethod
    def one(cls):
        return cls({IDENTITY: 1})

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        other = _as_element(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return GroupRingElement(out)

    __radd__ = __add__

    def __neg__(self):
        return GroupRingElement({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_as_element(other))

    def __rsub__(self, other):
        return _as_element(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return GroupRingElement({w: c * other for w, c in self.terms.items()})
        other = _as_element(other)
        out = defaultdict(int)
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                out[u * v] += a * b
        return GroupRingElement(out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return _as_element(other) * self

    def augmentation(self):
        return sum(self.terms.values())

    def __eq__(self, other):
        if not isinstance(other, GroupRingElement):
            other = _as_element(other)
        return self.terms == other.terms

    __hash__ = None

    def __repr__(self):
        return "GroupRingElement(%s)" % self

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms):
            c = self.terms[w]
            parts.append(("%d*%s" % (c, w)) if c != 1 else str(w))
        return " + ".join(parts).replace("+ -", "- ")


def _as_element(x):
    if isinstance(x, GroupRingElement):
        return x
    if isinstance(x, Word):
        return GroupRingElement.of(x)
    if isinstance(x, int):
        return GroupRingElement({IDENTITY: x}) if x else GroupRingElement()
    raise TypeError("cannot treat %r as a group ring element" % (x,))


def geometric_series(w, k):
    """1 + w + ... + w^(k-1)."""
    return GroupRingElement([(w ** i, 1) for i in range(k)])


def fox_derivative(w, g):
    """
    The Fox derivative of a word with respect to generator g, computed
    syllable by syllable in Z[F] with no use of relators.
    """
    out = defaultdict(int)
    prefix = IDENTITY
    for h, e in w.syllables:
        if h == g:
            if e > 0:
                for k in range(e):
                    out[prefix * Word._raw(((g, k),) if k else ())] += 1
            else:
                for k in range(1, -e + 1):
                    out[prefix * Word._raw(((g, -k),))] -= 1
        prefix = prefix * Word._raw(((h, e),))
    return GroupRingElement(out)


class PresentationError(ValueError):
    pass


class Presentation:
    """Generators and relators, plus an optional distinguished meridian generator."""

    def __init__(self, generators, relators, meridian=None):
        generators = tuple(generators)
        for g in generators:
            if not _NAME.match(g):
                raise PresentationError("invalid generator name %r" % (g,))
        if len(set(generators)) != len(generators):
            raise PresentationError("duplicate generator names")
        relators = tuple(parse_word(r) if isinstance(r, str) else r for r in relators)
        known = set(generators)
        for r in relators:
            unknown = r.generators() - known
            if unknown:
                raise PresentationError("relator %s uses undeclared generators %s"
                                        % (r, ", ".join(sorted(unknown))))
        if meridian is not None and meridian not in known:
            raise PresentationError("meridian %r is not a generator" % (meridian,))
        self.generators = generators
        self.relators = relators
        self.meridian = meridian

    @property
    def deficiency(self):
        return len(self.generators) - len(self.relators)

    def require_deficiency_one(self):
        if self.deficiency != 1:
            raise PresentationError("presentation has deficiency %d, expected 1" % self.deficiency)

    def index(self, g):
        return self.generators.index(g)

    def exponent_matrix(self):
        return [[r.exponent_sum(g) for g in self.generators] for r in self.relators]

    def __eq__(self, other):
        return (isinstance(other, Presentation) and self.generators == other.generators
                and self.relators == other.relators and self.meridian == other.meridian)

    def __repr__(self):
        return "Presentation(<%s | %s>)" % (", ".join(self.generators),
                                            ", ".join(str(r) for r in self.relators))


class AbelianizationError(ValueError):
    pass


class Abelianization:
    """The homomorphism to <t> given by an integer degree per generator."""

    def __init__(self, degrees):
        self.degrees = dict(degrees)

    def degree(self, w):
        return sum(self.degrees[g] * e for g, e in w.syllables)

    def __getitem__(self, g):
        return self.degrees[g]

    def __eq__(self, other):
        return isinstance(other, Abelianization) and self.degrees == other.degrees

    def __repr__(self):
        return "Abelianization(%r)" % (self.degrees,)


def diagonalize(a):
    """
    Diagonalize an integer matrix by unimodular row and column operations.

    Returns (diagonal entries, V) with U*a*V diagonal for some unimodular U;
    columns of V past the rank span the integer kernel of a.
    """
    rows = [list(r) for r in a]
    m = len(rows)
    n = len(rows[0]) if rows else 0
    v = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_cols(i, j):
        for r in rows:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def add_col(src, dst, k):
        # col_dst -= k * col_src
        for r in rows:
            r[dst] -= k * r[src]
        for r in v:
            r[dst] -= k * r[src]

    diag = []
    t = 0
    while t < min(m, n):
        entries = [(abs(rows[i][j]), i, j) for i in range(t, m) for j in range(t, n) if rows[i][j]]
        if not entries:
            break
        _, i, j = min(entries)
        rows[t], rows[i] = rows[i], rows[t]
        swap_cols(t, j)
        while True:
            p = rows[t][t]
            for i in range(t + 1, m):
                k = rows[i][t] // p
                if k:
                    rows[i] = [x - k * y for x, y in zip(rows[i], rows[t])]
            for j in range(t + 1, n):
                k = rows[t][j] // p
                if k:
                    add_col(t, j, k)
            rest = [(abs(rows[i][t]), i, None) for i in range(t + 1, m) if rows[i][t]]
            rest += [(abs(rows[t][j]), None, j) for j in range(t + 1, n) if rows[t][j]]
            if not rest:
                break
            _, i, j = min(rest, key=lambda x: x[0])
            if i is not None:
                rows[t], rows[i] = rows[i], rows[t]
            else:
                swap_cols(t, j)
        diag.append(rows[t][t])
        t += 1
    return diag, v


def abelianization(presentation):
    """
    The surjection onto <t> for a presentation whose H_1 is infinite cyclic.

    The degree vector is the primitive generator of the integer kernel of
    the relator exponent matrix, oriented so the meridian (or the first
    generator of nonzero degree) maps to a positive power of t.
    """
    presentation.require_deficiency_one()
    a = presentation.exponent_matrix()
    k = len(presentation.generators)
    if a:
        diag, v = diagonalize(a)
        kernel = [[v[i][j] for i in range(k)] for j in range(len(diag), k)]
        torsion = [abs(d) for d in diag if abs(d) != 1]
    else:
        kernel, torsion = [[1]], []
    if len(kernel) != 1:
        raise AbelianizationError("H_1 has rank %d, expected 1" % len(kernel))
    if torsion:
        raise AbelianizationError("H_1 has torsion %s; not infinite cyclic" % torsion)
    d = kernel[0]
    if math.gcd(*d) != 1:
        raise AbelianizationError("kernel generator %s is not primitive" % d)
    if presentation.meridian is not None:
        pivot = d[presentation.index(presentation.meridian)]
        if pivot == 0:
            raise AbelianizationError("meridian %s has abelianization degree 0"
                                      % presentation.meridian)
    else:
        pivot = next(x for x in d if x)
    if pivot < 0:
        d = [-x for x in d]
    return Abelianization(zip(presentation.generators, d))
