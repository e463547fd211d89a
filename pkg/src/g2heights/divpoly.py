"""Division values phi_n(P) on a genus-2 Jacobian.

phi_n plays the role of the elliptic division polynomial: it vanishes
exactly on the n-torsion away from the theta divisor, transforms the
sigma function under multiplication by n, and appears in the local height
formula.  The values are computed by the quadratic ladder

    phi_{a+b}(P) phi_{a-b}(P) = phi_a(P)^2 phi_b(P)^2 B(aP, bP),

    B(U, V) = -X11(U) + X11(V) - X12(U) X22(V) + X22(U) X12(V),

seeded by phi_1 = 1 and the closed form for phi_2.  Everything is ring
generic: exact rationals, p-adics or finite fields.
"""

from .coords import grant_coords
from .curve import DegenerateError, cantor_mul


def phi2_from_coords(c):
    """phi_2 in terms of the coordinates of P itself."""
    return -2 * c.x111 - 2 * c.x112 * c.x22 + 2 * c.x122 * c.x12


def ladder_b(cu, cv):
    """The biquadratic form B evaluated at a pair of coordinate vectors."""
    return -cu.x11 + cv.x11 - cu.x12 * cv.x22 + cu.x22 * cv.x12


class DivisionValues:
    """Memoized phi_n(P) for a fixed point P."""

    def __init__(self, P, curve):
        self.P = P
        self.curve = curve
        self.ring = P.ring()
        self._mult = {1: P}
        self._coords = {}
        self._phi = {0: self.ring.coerce(0), 1: self.ring.one()}

    def multiple(self, n):
        if n not in self._mult:
            self._mult[n] = cantor_mul(self.P, n, self.curve)
        return self._mult[n]

    def coords(self, n):
        if n not in self._coords:
            self._coords[n] = grant_coords(self.multiple(n), self.curve)
        return self._coords[n]

    def value(self, n):
        if n < 0:
            raise ValueError("need n >= 0")
        if n in self._phi:
            return self._phi[n]
        M = self.multiple(n)
        if M.is_identity() or M.u.degree() < 2:
            # phi_n vanishes exactly where nP meets the theta divisor
            self._phi[n] = self.ring.coerce(0)
            return self._phi[n]
        if n == 2:
            c = self.coords(1)
            self._phi[2] = phi2_from_coords(c)
            return self._phi[2]
        base = (n + 1) // 2 if n % 2 else n // 2 + 1
        err = None
        for a in range(base, base + 4):
            b = n - a
            if b < 1:
                break
            try:
                va, vb = self.value(a), self.value(b)
                num = va * va * vb * vb * ladder_b(self.coords(a), self.coords(b))
                den = self.value(a - b)
            except DegenerateError as e:
                err = e
                continue
            if self.ring.is_zeroish(den):
                continue
            self._phi[n] = num / den
            return self._phi[n]
        raise err or DegenerateError("no admissible ladder split for n=%d" % n)


def division_value(P, n, curve):
    """phi_n(P) for a single n."""
    return DivisionValues(P, curve).value(n)
