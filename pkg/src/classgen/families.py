"""Generator pairs for the classical group families.

Every covered (family, degree, q) gets a labelled case and a concrete pair
of generating matrices.  Linear and symplectic groups live over GF(q);
unitary groups live over GF(q^2) and preserve the unitary form relative to
the conjugation x -> x**q.

Covered cases and their pairs:

  GL(n, q), q > 2:          h_1(xi),                    x_12(1) w
  GL(n, 2):                 the SL(n, 2) pair (the groups coincide)
  SL(n, q), q > 3:          h_1(xi) h_2(xi^-1),         x_12(1) w
  SL(n, q), q in {2, 3}:    x_12(1),                    w
  Sp(2, q):                 the SL(2, q) pair (the groups coincide)
  Sp(2n, q), q odd, n > 1:  hat_h_1(xi),                hat_x_12(1) hat_w
  Sp(2n, q), q even > 2,
            n > 1:          hat_h_1(xi) hat_h_n(xi),    hat_x_1n(1) hat_z_1(1) hat_w
  Sp(2n, 2), n > 2:         hat_x_1n(1) hat_z_1(1),     hat_w
  Sp(4, 2):                 an explicit pair
  GU(2n, q), n > 1:         tilde_h_1(xi),              tilde_x_12(1) tilde_w
  GU(2n+1, q), n >= 1:      tilde_h_n(xi),              Q(1, beta) w'
  SU(2n, q), n > 1:         tilde_h_1(xi) tilde_h_2(xi^-1),      tilde_x_12(1) tilde_w
  SU(2n+1, q), not (3, 2):  tilde_h_n(xi) tilde_h_{n+1}(xi^-1),  Q(1, beta) w'
  SU(3, 2):                 an explicit pair over GF(4)

Degree 1 anywhere, degree 2 for GU/SU, odd degrees for Sp and q not a prime
power are unsupported.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from classgen.atoms import (
    DualKind,
    cycle_w,
    elem_h,
    elem_x,
    hat_h,
    hat_w,
    hat_x,
    hat_z,
    q_block,
    tilde_h,
    tilde_w,
    tilde_x,
    w_prime,
)
from classgen.forms import (
    FormKind,
    gram,
    is_special,
    preserves,
    special_scalar_beta,
    special_scalar_eta,
)
from classgen.gf import FieldCtx, field_create
from classgen.matrix import Mat


class UnsupportedParametersError(ValueError):
    """Raised for parameters outside the covered cases."""


class Family(enum.Enum):
    GL = "gl"
    SL = "sl"
    SP = "sp"
    GU = "gu"
    SU = "su"


_LONG_NAMES = {
    "general linear": Family.GL,
    "special linear": Family.SL,
    "symplectic": Family.SP,
    "general unitary": Family.GU,
    "special unitary": Family.SU,
}


def parse_family(name: str) -> Family:
    """Accepts short names (gl, sl, sp, gu, su) and long names, case-insensitive;
    long names may use spaces or underscores."""
    key = name.strip().lower().replace("_", " ")
    for fam in Family:
        if key == fam.value:
            return fam
    if key in _LONG_NAMES:
        return _LONG_NAMES[key]
    raise ValueError(f"unknown family {name!r}; use gl, sl, sp, gu, su or the long names")


@dataclass(frozen=True)
class GroupSpec:
    family: Family
    degree: int
    q: int

    def __post_init__(self):
        if not isinstance(self.family, Family):
            raise ValueError("family must be a Family value")
        if int(self.degree) != self.degree or self.degree < 1:
            raise ValueError(f"degree must be a positive integer, got {self.degree}")
        if int(self.q) != self.q or self.q < 2:
            raise ValueError(f"q must be an integer >= 2, got {self.q}")


@dataclass(frozen=True)
class GeneratorPair:
    a: Mat
    b: Mat
    spec: GroupSpec
    ctx: FieldCtx
    case_label: str


def _prime_power(q: int) -> tuple[int, int] | None:
    p = 2
    while p * p <= q:
        if q % p == 0:
            break
        p += 1 if p == 2 else 2
    else:
        return (q, 1)
    k, m = 0, q
    while m % p == 0:
        m //= p
        k += 1
    return (p, k) if m == 1 else None


def case_label(spec: GroupSpec) -> str:
    """The dispatch label for a spec; raises UnsupportedParametersError off the map."""
    fam, deg, q = spec.family, spec.degree, spec.q
    if _prime_power(q) is None:
        raise UnsupportedParametersError(
            f"q = {q} is not a prime power; the nearest covered q are prime powers")
    if deg < 2:
        raise UnsupportedParametersError(
            f"degree {deg} is not covered; the smallest covered degree is 2 "
            f"(3 for the unitary families)")
    if fam is Family.GL:
        return "GL(n,2) = SL(n,2)" if q == 2 else "GL, q > 2"
    if fam is Family.SL:
        return "SL, q in {2,3}" if q <= 3 else "SL, q > 3"
    if fam is Family.SP:
        if deg % 2:
            raise UnsupportedParametersError(
                f"Sp needs an even degree; degree {deg} is not covered "
                f"(nearest: Sp({deg - 1},{q}) or Sp({deg + 1},{q}))")
        if deg == 2:
            return "Sp(2,q) = SL(2,q)"
        n = deg // 2
        if q % 2:
            return "Sp, q odd, n > 1"
        if q == 2:
            return "Sp(4,2)" if n == 2 else "Sp(2n,2), n > 2"
        return "Sp, q even, q != 2, n > 1"
    if fam in (Family.GU, Family.SU):
        u = "U" if fam is Family.GU else "SU"
        if deg == 2:
            raise UnsupportedParametersError(
                f"{u}(2,q) has no covered pair; the nearest covered cases are "
                f"{u}(3,q) and {u}(4,q)")
        if deg % 2 == 0:
            return f"{u}(2n,q), n > 1"
        if fam is Family.SU:
            if deg == 3 and q == 2:
                return "SU(3,2)"
            return "SU(2n+1,q), n != 1 or q != 2"
        return "U(2n+1,q)"
    raise AssertionError(f"unhandled family {fam}")


def field_for(spec: GroupSpec) -> FieldCtx:
    """GF(q) for GL/SL/Sp, GF(q^2) for GU/SU."""
    pk = _prime_power(spec.q)
    if pk is None:
        raise UnsupportedParametersError(f"q = {spec.q} is not a prime power")
    p, k = pk
    if spec.family in (Family.GU, Family.SU):
        return field_create(p, 2 * k)
    return field_create(p, k)


def _sl_pair(ctx: FieldCtx, deg: int, q: int) -> tuple[Mat, Mat]:
    if q <= 3:
        return elem_x(ctx, 1, 2, 1, deg), cycle_w(ctx, deg)
    a = elem_h(ctx, 1, ctx.xi, deg) * elem_h(ctx, 2, ctx.xi ** -1, deg)
    b = elem_x(ctx, 1, 2, 1, deg) * cycle_w(ctx, deg)
    return a, b


def generator_pair(spec: GroupSpec) -> GeneratorPair:
    """Build the two generators of the covered case for spec."""
    label = case_label(spec)
    ctx = field_for(spec)
    deg, q = spec.degree, spec.q
    xi = ctx.xi

    if label == "GL, q > 2":
        a = elem_h(ctx, 1, xi, deg)
        b = elem_x(ctx, 1, 2, 1, deg) * cycle_w(ctx, deg)
    elif label in ("GL(n,2) = SL(n,2)", "SL, q in {2,3}", "SL, q > 3", "Sp(2,q) = SL(2,q)"):
        a, b = _sl_pair(ctx, deg, q)
    elif label == "Sp, q odd, n > 1":
        n = deg // 2
        a = hat_h(ctx, 1, xi, n)
        b = hat_x(ctx, 1, 2, 1, n) * hat_w(ctx, n)
    elif label == "Sp, q even, q != 2, n > 1":
        n = deg // 2
        a = hat_h(ctx, 1, xi, n) * hat_h(ctx, n, xi, n)
        b = hat_x(ctx, 1, n, 1, n) * hat_z(ctx, 1, 1, n) * hat_w(ctx, n)
    elif label == "Sp(2n,2), n > 2":
        n = deg // 2
        a = hat_x(ctx, 1, n, 1, n) * hat_z(ctx, 1, 1, n)
        b = hat_w(ctx, n)
    elif label == "Sp(4,2)":
        a = Mat.from_rows(ctx, [[1, 0, 1, 1], [1, 0, 0, 1], [0, 1, 0, 1], [1, 1, 1, 1]])
        b = Mat.from_rows(ctx, [[0, 0, 1, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 1, 0, 0]])
    elif label == "U(2n,q), n > 1":
        a = tilde_h(ctx, 1, xi, deg, DualKind.U_EVEN)
        b = _unitary_even_b(ctx, deg, q)
    elif label == "SU(2n,q), n > 1":
        a = (tilde_h(ctx, 1, xi, deg, DualKind.U_EVEN)
             * tilde_h(ctx, 2, xi ** -1, deg, DualKind.U_EVEN))
        b = _unitary_even_b(ctx, deg, q)
    elif label == "U(2n+1,q)":
        n = (deg - 1) // 2
        a = tilde_h(ctx, n, xi, deg, DualKind.U_ODD)
        b = _unitary_odd_b(ctx, deg, q)
    elif label == "SU(2n+1,q), n != 1 or q != 2":
        n = (deg - 1) // 2
        a = (tilde_h(ctx, n, xi, deg, DualKind.U_ODD)
             * tilde_h(ctx, n + 1, xi ** -1, deg, DualKind.U_ODD))
        b = _unitary_odd_b(ctx, deg, q)
    elif label == "SU(3,2)":
        a = Mat.from_rows(ctx, [[1, xi, xi], [0, 1, xi ** 2], [0, 0, 1]])
        b = Mat.from_rows(ctx, [[xi, 1, 1], [1, 1, 0], [1, 0, 0]])
    else:
        raise AssertionError(f"unhandled case label {label!r}")
    return GeneratorPair(a, b, spec, ctx, label)


def _unitary_even_b(ctx: FieldCtx, deg: int, q: int) -> Mat:
    n = deg // 2
    eta = special_scalar_eta(ctx, q)
    return tilde_x(ctx, 1, 2, 1, deg, DualKind.U_EVEN) * tilde_w(ctx, n, eta)


def _unitary_odd_b(ctx: FieldCtx, deg: int, q: int) -> Mat:
    n = (deg - 1) // 2
    beta = special_scalar_beta(ctx, q)
    return q_block(ctx, 1, beta, deg) * w_prime(ctx, n)


def is_member(spec: GroupSpec, m: Mat) -> bool:
    """The membership predicate of spec's family applied to m."""
    fam = spec.family
    if m.n != spec.degree:
        raise ValueError(f"degree mismatch: matrix is {m.n}, spec wants {spec.degree}")
    if fam is Family.GL:
        return bool(m.det())
    if fam is Family.SL:
        return is_special(m)
    if fam is Family.SP:
        return preserves(m, gram(m.ctx, FormKind.SYMPLECTIC, spec.degree))
    if fam is Family.GU:
        return preserves(m, gram(m.ctx, FormKind.UNITARY, spec.degree))
    if fam is Family.SU:
        return (preserves(m, gram(m.ctx, FormKind.UNITARY, spec.degree))
                and is_special(m))
    raise AssertionError(f"unhandled family {fam}")
