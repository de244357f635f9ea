"""Exact coefficient fields: the rationals and prime fields GF(p)."""

from fractions import Fraction


class Field:
    """A coefficient field.

    Rationals are carried as ``Fraction``; elements of GF(p) as ints in
    ``range(p)``.  Integer coefficients produced by the resolutions are
    valid inputs to every method and are converted on the way in.
    """

    def __init__(self, characteristic=0):
        if characteristic and not _is_prime(characteristic):
            raise ValueError(f"{characteristic} is not prime")
        self.characteristic = characteristic

    def __repr__(self):
        return f"Field({self.descriptor!r})"

    def __eq__(self, other):
        return isinstance(other, Field) and other.characteristic == self.characteristic

    def __hash__(self):
        return hash(("Field", self.characteristic))

    @property
    def descriptor(self):
        if self.characteristic == 0:
            return "rational"
        return f"p:{self.characteristic}"

    def __call__(self, x):
        p = self.characteristic
        if p == 0:
            return Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator % p == 0:
                raise ZeroDivisionError(f"{x} has no image in GF({p})")
            return x.numerator * pow(x.denominator, -1, p) % p
        return int(x) % p

    def reduce(self, x):
        """Normalise a result of ``+``/``*`` on field elements."""
        p = self.characteristic
        if p == 0:
            return x
        return x % p

    def inv(self, x):
        p = self.characteristic
        if p == 0:
            return 1 / Fraction(x)
        return pow(int(x), -1, p)

    def is_zero(self, x):
        if self.characteristic == 0:
            return x == 0
        return x % self.characteristic == 0

    def format(self, x):
        x = self(x)
        if self.characteristic == 0 and x.denominator == 1:
            return str(x.numerator)
        return str(x)


RATIONALS = Field(0)


def parse_field(text):
    """Parse a field descriptor: ``rational`` or ``p:<prime>``."""
    text = text.strip().lower()
    if text in ("rational", "q", "rationals"):
        return RATIONALS
    if text.startswith("p:"):
        try:
            p = int(text[2:])
        except ValueError:
            raise ValueError(f"bad field descriptor {text!r}") from None
        return Field(p)
    raise ValueError(f"bad field descriptor {text!r} (expected 'rational' or 'p:<prime>')")


def _is_prime(n):
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True
