"""
Classification of a-Minimal Modules

Certificates for the a-minimal (g,k)-modules of su(p,q) and sl(n,R), the
isomorphism class counts, the finite set Z of removed harmonic degrees and the
K-type pencils of every certificate.

a is an exact rational; complex non-real a is covered by the ``nonreal``
flag, which makes every "a in ..." test false and every "a not in ..." test
true.

Copyright 2026 MinRep Toolbox contributors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
"""

import logging
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from liealg import Weight, is_natural
from utils.errors import PreconditionError, VerificationError
from verma import lambda_ia

logger = logging.getLogger(__name__)


def format_set(values) -> str:
    return "{" + ", ".join(str(v) for v in sorted(values)) + "}"


SU = "su"
SL = "sl"

HW = "HW"
LW_DUAL = "LW-dual"
PS_TRIV = "PS-triv"
PS_SGN = "PS-sgn"
GENUINE = "Genuine"


@dataclass(frozen=True)
class RealFormSpec:
    kind: str
    p: int = 0
    q: int = 0
    n: int = 0

    def __post_init__(self):
        if self.kind == SU:
            if self.p < 1 or self.q < 1:
                raise PreconditionError("su(p,q) needs p, q >= 1")
            object.__setattr__(self, "n", self.p + self.q)
        elif self.kind == SL:
            if self.n < 2:
                raise PreconditionError("sl(n,R) needs n >= 2")
        else:
            raise PreconditionError(f"unknown real form kind {self.kind!r}")

    @classmethod
    def su(cls, p: int, q: int) -> "RealFormSpec":
        return cls(SU, p, q)

    @classmethod
    def sl(cls, n: int) -> "RealFormSpec":
        return cls(SL, n=n)

    def __str__(self):
        return f"su({self.p},{self.q})" if self.kind == SU else f"sl({self.n},R)"

    def to_json(self):
        return str(self)


_SU_PATTERN = re.compile(r"^\s*su\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*$", re.IGNORECASE)
_SL_PATTERN = re.compile(r"^\s*sl\(\s*(\d+)\s*,\s*(R|ℝ)\s*\)\s*$", re.IGNORECASE)


def parse_real_form(text: str) -> RealFormSpec:
    """Parse "su(p,q)" or "sl(n,R)"."""
    match = _SU_PATTERN.match(text)
    if match:
        return RealFormSpec.su(int(match.group(1)), int(match.group(2)))
    match = _SL_PATTERN.match(text)
    if match:
        return RealFormSpec.sl(int(match.group(1)))
    raise PreconditionError(f"cannot parse real form {text!r}; expected su(p,q) or sl(n,R)")


# -----------------------------------------------------------------------------
# Membership conditions
# -----------------------------------------------------------------------------

@dataclass(frozen=True)
class Condition:
    """a in base + direction*N (negated when ``negated``)."""

    base: Fraction
    direction: int
    negated: bool = False

    def holds(self, a, nonreal: bool = False) -> bool:
        if nonreal:
            return self.negated
        member = is_natural(self.direction * (Fraction(a) - self.base))
        return member != self.negated

    def __str__(self):
        sign = "+" if self.direction > 0 else "-"
        op = "∉" if self.negated else "∈"
        return f"a {op} {self.base}{sign}ℕ"


def _in(base, direction) -> Condition:
    return Condition(Fraction(base), direction)


def _not_in(base, direction) -> Condition:
    return Condition(Fraction(base), direction, True)


@dataclass(frozen=True)
class MinimalCert:
    form: RealFormSpec
    a: Fraction
    family: str
    labels: Tuple[int, ...] = ()
    seed: Optional[Weight] = None
    conditions: Tuple[str, ...] = ()
    nonreal: bool = False

    def to_json(self):
        return {
            "form": self.form,
            "a": None if self.nonreal else self.a,
            "nonreal": self.nonreal,
            "family": self.family,
            "labels": list(self.labels),
            "seed": self.seed,
            "conditions": list(self.conditions),
        }


# -----------------------------------------------------------------------------
# su(p,q)
# -----------------------------------------------------------------------------

def w_longest(p: int, q: int, mu: Weight) -> Weight:
    """Longest element of S_p x S_q: reverse each block."""
    if mu.n != p + q:
        raise PreconditionError(f"weight of sl({mu.n}) does not fit su({p},{q})")
    entries = mu.entries
    return Weight(tuple(reversed(entries[:p])) + tuple(reversed(entries[p:])))


def is_compact_dominant(p: int, q: int, mu: Weight) -> bool:
    """Consecutive differences inside each block are natural numbers."""
    blocks = (mu.entries[:p], mu.entries[p:])
    return all(is_natural(b[k] - b[k + 1]) for b in blocks for k in range(len(b) - 1))


def dual_parameter(a) -> Fraction:
    """L(lambda(i, -a))^dual is a-minimal exactly when L(lambda(i, -a)) is (-a)-minimal."""
    return -Fraction(a)


def su_clauses(p: int, q: int) -> List[Tuple[str, int, Condition]]:
    """(family, label i, existence condition) in the order of the case analysis."""
    n = p + q
    half = Fraction(n, 2)
    shift = Fraction(n - 2, 2)
    if p == 1:
        return [
            (HW, 1, _not_in(half, 1)),
            (LW_DUAL, 1, _not_in(-half, -1)),
            (HW, 2, _in(shift, 1)),
            (LW_DUAL, 2, _in(-shift, -1)),
        ]
    if q == 1:
        return [
            (HW, n, _not_in(-half, -1)),
            (LW_DUAL, n, _not_in(half, 1)),
            (HW, n - 1, _in(-shift, -1)),
            (LW_DUAL, n - 1, _in(shift, 1)),
        ]
    center = Fraction(p - q, 2)
    return [
        (HW, p, _in(-center, -1)),
        (LW_DUAL, p, _in(center, 1)),
        (HW, p + 1, _in(-center, 1)),
        (LW_DUAL, p + 1, _in(center, -1)),
    ]


def _seed(family: str, p: int, q: int, i: int, a: Fraction) -> Weight:
    if family == HW:
        return lambda_ia(p + q, i, a)
    return -w_longest(p, q, lambda_ia(p + q, i, -a))


def _stated_coincidence(family: str, p: int, q: int, labels: Sequence[int], a: Fraction) -> bool:
    center = Fraction(p - q, 2)
    at = -center if family == HW else center
    return sorted(labels) == [p, p + 1] and a == at


def classify_su(p: int, q: int, a, nonreal: bool = False) -> List[MinimalCert]:
    if p < 1 or q < 1:
        raise PreconditionError("su(p,q) needs p, q >= 1")
    if p + q < 3:
        raise PreconditionError(
            "su(1,1) = sl(2,R): every infinite-dimensional irreducible module is minimal; "
            "not covered by this classification")
    form = RealFormSpec.su(p, q)
    a = Fraction(a)
    certs: List[MinimalCert] = []
    for family, i, cond in su_clauses(p, q):
        if not cond.holds(a, nonreal):
            continue
        seed = None if nonreal else _seed(family, p, q, i, a)
        if seed is not None and not is_compact_dominant(p, q, seed):
            raise VerificationError(f"{family}({i}) seed {seed} is not k-dominant for {form}")
        merged = False
        for k, other in enumerate(certs):
            if seed is None or other.family != family or other.seed != seed:
                continue
            labels = other.labels + (i,)
            conditions = other.conditions + (str(cond),)
            if not _stated_coincidence(family, p, q, labels, a):
                logger.warning("unexpected coincidence of %s labels %s at a=%s for %s",
                               family, labels, a, form)
                conditions += ("unexpected coincidence",)
            certs[k] = MinimalCert(form, a, family, labels, seed, conditions, nonreal)
            merged = True
            break
        if not merged:
            certs.append(MinimalCert(form, a, family, (i,), seed, (str(cond),), nonreal))
    logger.debug("%s at a=%s: %d certificate(s)", form, a, len(certs))
    return certs


# -----------------------------------------------------------------------------
# sl(n,R)
# -----------------------------------------------------------------------------

def z_set(n: int, a, bound: int, nonreal: bool = False) -> frozenset:
    """{k in N, k <= bound : |a| - n/2 - k in 2N}."""
    if bound < 0:
        raise PreconditionError("bound must be nonnegative")
    if nonreal:
        return frozenset()
    top = abs(Fraction(a)) - Fraction(n, 2)
    return frozenset(k for k in range(bound + 1)
                     if is_natural(top - k) and (top - k).numerator % 2 == 0)


def z_bound(n: int, a) -> int:
    """Largest k that can lie in Z."""
    return max(0, math.floor(abs(Fraction(a)) - Fraction(n, 2)))


def full_z_set(n: int, a, nonreal: bool = False) -> frozenset:
    return z_set(n, a, z_bound(n, a), nonreal)


def classify_slnR(n: int, a, nonreal: bool = False) -> List[MinimalCert]:
    if n < 3:
        raise PreconditionError("sl(n,R) classification needs n >= 3")
    form = RealFormSpec.sl(n)
    a = Fraction(a)
    z = full_z_set(n, a, nonreal)
    z_note = f"Z = {format_set(z)}"
    certs = [
        MinimalCert(form, a, PS_TRIV, (1,), None, ("induced from q(1,n-1), trivial on M", z_note), nonreal),
        MinimalCert(form, a, PS_SGN, (1,), None, ("induced from q(1,n-1), sign on M", z_note), nonreal),
    ]
    if n == 3 and not nonreal and a.denominator == 1:
        certs.append(MinimalCert(form, a, GENUINE, (2,), None,
                                 ("n = 3", "a ∈ ℤ", "Borel, sigma^0 at -lambda(2,-a)"), nonreal))
    return certs


def classify(form: RealFormSpec, a, nonreal: bool = False) -> List[MinimalCert]:
    if form.kind == SU:
        return classify_su(form.p, form.q, a, nonreal)
    return classify_slnR(form.n, a, nonreal)


def table1_count(form: RealFormSpec, a, nonreal: bool = False) -> int:
    return len(classify(form, a, nonreal))


def table1_expected(form: RealFormSpec, a, nonreal: bool = False) -> int:
    """Expected number of a-minimal modules, one branch per form family."""
    a = Fraction(a)
    if form.kind == SU:
        if form.n < 3:
            raise PreconditionError("no count is tabulated for su(1,1)")
        if form.p == 1 or form.q == 1:
            return 2
        return 2 if not nonreal and _is_integer(a - Fraction(form.n, 2)) else 0
    if form.n >= 4:
        return 2
    if form.n == 3:
        return 3 if not nonreal and a.denominator == 1 else 2
    raise PreconditionError("no count is tabulated for sl(2,R)")


def _is_integer(value) -> bool:
    return Fraction(value).denominator == 1


# -----------------------------------------------------------------------------
# K-types
# -----------------------------------------------------------------------------

@dataclass(frozen=True)
class CompactWeight:
    """Highest weight of an so(n)-type in epsilon coordinates; psi = 2 eps_1."""

    n: int
    entries: Tuple[Fraction, ...]

    def __post_init__(self):
        rank = self.n // 2
        values = tuple(Fraction(x) for x in self.entries)
        if len(values) != rank:
            raise PreconditionError(f"so({self.n}) weights have {rank} entries")
        object.__setattr__(self, "entries", values)

    @classmethod
    def multiple_of_psi(cls, n: int, c) -> "CompactWeight":
        rank = n // 2
        return cls(n, (2 * Fraction(c),) + (Fraction(0),) * (rank - 1))

    def __add__(self, other):
        return CompactWeight(self.n, tuple(x + y for x, y in zip(self.entries, other.entries)))

    def scale(self, c) -> "CompactWeight":
        return CompactWeight(self.n, tuple(Fraction(c) * x for x in self.entries))

    def psi_multiple(self) -> Optional[Fraction]:
        """c with self = c psi, or None."""
        if any(x != 0 for x in self.entries[1:]):
            return None
        return self.entries[0] / 2

    def to_json(self):
        return list(self.entries)


def harmonic_ktype(n: int, k: int) -> CompactWeight:
    """H^k(R^n) has highest weight k eps_1 = k psi/2."""
    return CompactWeight.multiple_of_psi(n, Fraction(k, 2))


def symmetric_power_ktype(m: int) -> CompactWeight:
    """S^m C^2 as an so(3)-type (spin m/2) is m psi/4."""
    return CompactWeight.multiple_of_psi(3, Fraction(m, 4))


@dataclass(frozen=True)
class KTypePencil:
    mu0: object
    step: object
    count: int

    def members(self) -> list:
        out = [self.mu0]
        for _ in range(self.count - 1):
            out.append(out[-1] + self.step)
        return out

    def to_json(self):
        return {"mu0": self.mu0, "step": self.step, "count": self.count}


def _check_count(count: int):
    if count < 1:
        raise PreconditionError("count must be at least 1")


def _basis_weight(n: int, plus: int, minus: int) -> Weight:
    return Weight(tuple(Fraction(int(k == plus) - int(k == minus)) for k in range(1, n + 1)))


def su_step(cert: MinimalCert) -> Weight:
    """-e_p + e_{p+1} for highest weight modules, e_1 - e_n for duals."""
    form = cert.form
    if cert.family == HW:
        return _basis_weight(form.n, form.p + 1, form.p)
    return _basis_weight(form.n, 1, form.n)


def ktypes_su(cert: MinimalCert, count: int) -> List[Weight]:
    _check_count(count)
    if cert.form.kind != SU or cert.family not in (HW, LW_DUAL):
        raise PreconditionError("ktypes_su needs an su(p,q) certificate")
    if cert.seed is None:
        raise PreconditionError("no explicit highest weight for non-real a")
    step = su_step(cert)
    return [cert.seed + step.scale(k) for k in range(count)]


def ktypes_slnR(cert: MinimalCert, count: int) -> List[int]:
    """Harmonic degrees for the principal series certificates, m(a,k) = 2|a|+1+4k
    for the genuine one."""
    _check_count(count)
    if cert.form.kind != SL:
        raise PreconditionError("ktypes_slnR needs an sl(n,R) certificate")
    if cert.family == GENUINE:
        start = 2 * abs(cert.a) + 1
        return [int(start) + 4 * k for k in range(count)]
    z = full_z_set(cert.form.n, cert.a, cert.nonreal)
    parity = 0 if cert.family == PS_TRIV else 1
    out = []
    k = parity
    while len(out) < count:
        if k not in z:
            out.append(k)
        k += 2
    return out


def ktype_pencil(cert: MinimalCert, count: int) -> KTypePencil:
    _check_count(count)
    if cert.form.kind == SU:
        return KTypePencil(ktypes_su(cert, 1)[0], su_step(cert), count)
    n = cert.form.n
    first = ktypes_slnR(cert, 1)[0]
    psi = CompactWeight.multiple_of_psi(n, 1)
    if cert.family == GENUINE:
        return KTypePencil(symmetric_power_ktype(first), psi, count)
    return KTypePencil(harmonic_ktype(n, first), psi, count)


def slnR_ktype_weights(cert: MinimalCert, count: int) -> List[CompactWeight]:
    if cert.family == GENUINE:
        return [symmetric_power_ktype(m) for m in ktypes_slnR(cert, count)]
    return [harmonic_ktype(cert.form.n, k) for k in ktypes_slnR(cert, count)]


def lattice_check(form: RealFormSpec, mu: CompactWeight) -> bool:
    """mu in N psi/2 (n >= 4) or N psi/4 (n = 3)."""
    if form.kind != SL:
        raise PreconditionError("lattice_check is defined for sl(n,R)")
    if mu.n != form.n:
        raise PreconditionError(f"so({mu.n}) weight does not fit {form}")
    c = mu.psi_multiple()
    if c is None:
        return False
    scale = 4 if form.n == 3 else 2
    return is_natural(scale * c)
