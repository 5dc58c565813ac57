"""The two-parameter Sylvester-type sequence and the sharp constants built on it.

``u(1, q) = q`` and ``u(p + 1, q) = u(p, q) * (1 + u(p, q))``.  For ``q = 1``
the numbers ``1 + u(p, 1)`` are the classical Sylvester sequence 2, 3, 7, 43, ...
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, gcd


def _check_positive(**kwargs):
    for name, value in kwargs.items():
        if not isinstance(value, int) or isinstance(value, bool) or value < 1:
            raise ValueError(f"{name} must be a positive integer, got {value!r}")


@lru_cache(maxsize=None)
def _u(p, q):
    if p == 1:
        return q
    prev = _u(p - 1, q)
    return prev * (1 + prev)


def u(p, q):
    """Return ``u_{p,q}``.  Grows doubly exponentially in ``p``."""
    _check_positive(p=p, q=q)
    return _u(p, q)


def sylvester_terms(p, q=1):
    """``[1 + u(i, q) for i = 1..p]``."""
    return [1 + u(i, q) for i in range(1, p + 1)]


def extremal_vector(d, q):
    """``(q / (1 + u(i, q)))_{i=1..d}``, the unique extremal point of the
    Hensley-type approximation problem."""
    return tuple(Fraction(q, 1 + u(i, q)) for i in range(1, d + 1))


def extremal_sum(d, q):
    """``sum_{i<=d} q / (1 + u(i, q))``, which equals ``1 - q / u(d + 1, q)``."""
    return sum(extremal_vector(d, q), Fraction(0))


@dataclass(frozen=True)
class IdentityReport:
    p: int
    q: int
    divisibility: bool
    coprime: bool
    partial_sum: bool
    product: bool
    product_vs_sum: bool

    @property
    def passed(self):
        return all((self.divisibility, self.coprime, self.partial_sum,
                    self.product, self.product_vs_sum))

    def as_dict(self):
        return {
            "divisibility": self.divisibility,
            "coprime": self.coprime,
            "partialSum": self.partial_sum,
            "product": self.product,
            "productVsSum": self.product_vs_sum,
        }


def identity_checks(p, q):
    """Verify the closed-form identities of ``u`` exactly, up to index ``p``."""
    _check_positive(p=p, q=q)
    terms = sylvester_terms(p, q)
    recip = [Fraction(1, t) for t in terms]
    s = sum(recip, Fraction(0))
    prod = 1
    for t in terms:
        prod *= t
    prod_recip = Fraction(1, prod)
    return IdentityReport(
        p=p,
        q=q,
        divisibility=all(u(i, q) % q == 0 for i in range(1, p + 1)),
        coprime=all(gcd(terms[i], terms[j]) == 1
                    for i in range(p) for j in range(i + 1, p)),
        partial_sum=s == Fraction(1, q) - Fraction(1, u(p + 1, q)),
        product=Fraction(prod) == Fraction(u(p + 1, q), q),
        product_vs_sum=prod_recip == 1 - q * s,
    )


def gamma_bound(d, q):
    """Sharp lower bound ``q / u(d + 1, q)``."""
    _check_positive(d=d, q=q)
    return Fraction(q, u(d + 1, q))


def errata_bound(d, q):
    """``d! * u(d, q)^(d - 1) * q``."""
    _check_positive(d=d, q=q)
    return factorial(d) * u(d, q) ** (d - 1) * q


def volume_bound(d, q):
    """Upper bound ``((d / q) * u(d + 1, q))^d`` on the anti log canonical
    volume when the mld is at least ``1/q``."""
    _check_positive(d=d, q=q)
    return (Fraction(d, q) * u(d + 1, q)) ** d
