"""The algebra L = K[f, f^-1, g] of chain elements and relations.

Terms are keyed by (fexp, gexp) with fexp any integer and gexp >= 0.
Monomials are totally ordered lexicographically by (gexp, fexp); a monomial
is called negative when fexp < 0.  The gap of an element is the formal ratio
largest monomial / largest negative monomial, infinite for polynomials, and
is the tool that certifies polynomiality of reduction chains in
characteristic zero.
"""

from fractions import Fraction
from functools import total_ordering

from .errors import FieldMismatch, ZeroElement
from .scalar import clear_denominators

NEG_INF = float("-inf")
INF = float("inf")


def order_key(term):
    """Lexicographic key by (gexp, fexp) for a (fexp, gexp) exponent pair."""
    return (term[1], term[0])


class Laurent2:
    """Finitely supported element of K[f, f^-1, g]; no zero coefficients."""

    __slots__ = ("field", "terms")

    def __init__(self, field, terms):
        self.field = field
        self.terms = {k: c for k, c in terms.items() if c}

    @classmethod
    def make(cls, field, mapping):
        """Build from {(fexp, gexp): value}, coercing coefficients."""
        out = {}
        for (fe, ge), v in mapping.items():
            if ge < 0:
                raise ValueError("gexp must be non-negative")
            c = field.element(v)
            if c:
                out[(fe, ge)] = c
        return cls(field, out)

    @classmethod
    def zero(cls, field):
        return cls(field, {})

    @classmethod
    def one(cls, field):
        return cls(field, {(0, 0): field.one})

    @classmethod
    def f_gen(cls, field):
        return cls(field, {(1, 0): field.one})

    @classmethod
    def g_gen(cls, field):
        return cls(field, {(0, 1): field.one})

    @classmethod
    def monomial(cls, field, fexp, gexp, coeff=1):
        if gexp < 0:
            raise ValueError("gexp must be non-negative")
        c = field.element(coeff)
        return cls(field, {(fexp, gexp): c} if c else {})

    # -- structure -----------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, Laurent2)
            and self.field == other.field
            and self.terms == other.terms
        )

    __hash__ = None

    @property
    def deg_g(self):
        if not self.terms:
            return NEG_INF
        return max(ge for _, ge in self.terms)

    @property
    def deg_f(self):
        if not self.terms:
            return NEG_INF
        return max(fe for fe, _ in self.terms)

    def coefficient(self, fexp, gexp):
        return self.terms.get((fexp, gexp), self.field.zero)

    def sorted_terms(self):
        """Terms in descending monomial order; the canonical presentation."""
        return sorted(self.terms.items(), key=lambda kv: order_key(kv[0]), reverse=True)

    def _check_field(self, other):
        if not isinstance(other, Laurent2):
            raise TypeError(f"expected Laurent2, got {type(other).__name__}")
        if self.field != other.field:
            raise FieldMismatch("elements over different fields")

    # -- ring operations -----------------------------------------------------

    def __add__(self, other):
        self._check_field(other)
        reduce = self.field.reduce
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = reduce(out.get(k, 0) + c)
            if v:
                out[k] = v
            elif k in out:
                del out[k]
        return Laurent2(self.field, out)

    def __sub__(self, other):
        self._check_field(other)
        reduce = self.field.reduce
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = reduce(out.get(k, 0) - c)
            if v:
                out[k] = v
            elif k in out:
                del out[k]
        return Laurent2(self.field, out)

    def __neg__(self):
        neg = self.field.neg
        return Laurent2(self.field, {k: neg(c) for k, c in self.terms.items()})

    def __mul__(self, other):
        self._check_field(other)
        if not self.terms or not other.terms:
            return Laurent2.zero(self.field)
        akeys = list(self.terms)
        bkeys = list(other.terms)
        avals = [self.terms[k] for k in akeys]
        bvals = [other.terms[k] for k in bkeys]
        rational = self.field.p is None
        if rational:
            avals, da = clear_denominators(avals)
            bvals, db = clear_denominators(bvals)
            den = da * db
        acc = {}
        for (fa, ga), ca in zip(akeys, avals):
            for (fb, gb), cb in zip(bkeys, bvals):
                k = (fa + fb, ga + gb)
                acc[k] = acc.get(k, 0) + ca * cb
        out = {}
        if rational:
            for k, v in acc.items():
                if v:
                    out[k] = Fraction(v, den)
        else:
            p = self.field.p
            for k, v in acc.items():
                v %= p
                if v:
                    out[k] = v
        return Laurent2(self.field, out)

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative power of a Laurent element")
        result = Laurent2.one(self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def scale(self, k):
        if not k:
            return Laurent2.zero(self.field)
        reduce = self.field.reduce
        return Laurent2(self.field, {t: reduce(c * k) for t, c in self.terms.items()})

    def mul_monomial(self, fshift, gshift=0, coeff=None):
        """Multiply by coeff * f^fshift * g^gshift via key translation."""
        if coeff is None:
            return Laurent2(
                self.field,
                {(fe + fshift, ge + gshift): c for (fe, ge), c in self.terms.items()},
            )
        if not coeff:
            return Laurent2.zero(self.field)
        reduce = self.field.reduce
        return Laurent2(
            self.field,
            {
                (fe + fshift, ge + gshift): reduce(c * coeff)
                for (fe, ge), c in self.terms.items()
            },
        )

    # -- the monomial order and the gap --------------------------------------

    def largest_monomial(self):
        """Maximal (fexp, gexp) of the support under the (gexp, fexp) order."""
        if not self.terms:
            raise ZeroElement("zero element has no largest monomial")
        return max(self.terms, key=order_key)

    def largest_negative_monomial(self):
        """Maximal support monomial with fexp < 0, or None for polynomials."""
        neg = [k for k in self.terms if k[0] < 0]
        if not neg:
            return None
        return max(neg, key=order_key)

    def gap(self):
        """Largest monomial divided by largest negative monomial."""
        if not self.terms:
            raise ZeroElement("gap of the zero element is undefined")
        neg = self.largest_negative_monomial()
        if neg is None:
            return GapValue.infinite()
        bf, bg = self.largest_monomial()
        return GapValue.ratio(bf - neg[0], bg - neg[1])

    def is_polynomial(self):
        """True when no exponent of f is negative; the zero element counts."""
        return all(fe >= 0 for fe, _ in self.terms)

    def is_monic_in_g(self):
        """True when the top g-coefficient is the constant 1."""
        if not self.terms:
            return False
        top = self.deg_g
        heads = [(fe, ge) for fe, ge in self.terms if ge == top]
        return heads == [(0, top)] and self.terms[(0, top)] == self.field.one

    def render(self):
        """Canonical text: descending monomial order, f^i*g^j factors."""
        if not self.terms:
            return "0"
        parts = []
        for (fe, ge), c in self.sorted_terms():
            sign = "-" if c < 0 else "+"
            parts.append((sign, _lterm_str(-c if c < 0 else c, fe, ge)))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"Laurent2({self.render()!r})"


def _lterm_str(c, fe, ge):
    factors = []
    if fe:
        factors.append("f" if fe == 1 else f"f^{fe}")
    if ge:
        factors.append("g" if ge == 1 else f"g^{ge}")
    if not factors:
        return str(c)
    body = "*".join(factors)
    if c == 1:
        return body
    return f"{c}*{body}"


@total_ordering
class GapValue:
    """A formal monomial ratio f^dfexp * g^dgexp, or infinity.

    Ordered like monomials: lexicographically by (dgexp, dfexp), with the
    infinite value above everything.
    """

    __slots__ = ("dfexp", "dgexp")

    def __init__(self, dfexp, dgexp):
        self.dfexp = dfexp
        self.dgexp = dgexp

    @classmethod
    def infinite(cls):
        return cls(None, None)

    @classmethod
    def ratio(cls, dfexp, dgexp):
        return cls(dfexp, dgexp)

    @property
    def is_infinite(self):
        return self.dfexp is None

    def _key(self):
        if self.is_infinite:
            return (INF, INF)
        return (self.dgexp, self.dfexp)

    def __eq__(self, other):
        return isinstance(other, GapValue) and self._key() == other._key()

    def __lt__(self, other):
        return self._key() < other._key()

    def __hash__(self):
        return hash(self._key())

    def __pow__(self, e):
        if self.is_infinite:
            return self
        return GapValue(self.dfexp * e, self.dgexp * e)

    def __repr__(self):
        if self.is_infinite:
            return "GapValue(oo)"
        return f"GapValue(f^{self.dfexp}*g^{self.dgexp})"
