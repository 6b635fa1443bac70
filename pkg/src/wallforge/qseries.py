"""Truncated formal power series with exact integer coefficients.

A series either lives in powers of ``q`` or, when ``half_powers`` is set, in
powers of ``t`` with ``t**2 == q``.  Index ``m`` of ``coeffs`` is then the
coefficient of ``q**(m/2)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

DEFAULT_ORDER = 64


@dataclass(frozen=True)
class Series:
    coeffs: tuple[int, ...]
    half_powers: bool = False

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if not self.coeffs:
            raise ValueError("a series needs at least the constant coefficient")

    @property
    def order(self) -> int:
        """Largest stored index."""
        return len(self.coeffs) - 1

    @classmethod
    def one(cls, order: int, half_powers: bool = False) -> "Series":
        return cls((1,) + (0,) * order, half_powers)

    @classmethod
    def monomial(cls, power: int, order: int, coeff: int = 1, half_powers: bool = False) -> "Series":
        c = [0] * (order + 1)
        if power <= order:
            c[power] = coeff
        return cls(tuple(c), half_powers)

    def _check(self, other: "Series"):
        if self.order != other.order or self.half_powers != other.half_powers:
            raise ValueError("series differ in truncation order or power convention")

    def __add__(self, other: "Series") -> "Series":
        self._check(other)
        return Series(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), self.half_powers)

    def __neg__(self) -> "Series":
        return Series(tuple(-a for a in self.coeffs), self.half_powers)

    def __sub__(self, other: "Series") -> "Series":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return Series(tuple(other * a for a in self.coeffs), self.half_powers)
        self._check(other)
        T = self.order
        a, b = self.coeffs, other.coeffs
        out = [0] * (T + 1)
        for i, ai in enumerate(a):
            if ai:
                for j in range(T + 1 - i):
                    if b[j]:
                        out[i + j] += ai * b[j]
        return Series(tuple(out), self.half_powers)

    __rmul__ = __mul__

    def inverse(self) -> "Series":
        """Multiplicative inverse; the constant term must be 1 or -1."""
        a = self.coeffs
        if a[0] not in (1, -1):
            raise ValueError("only series with constant term +-1 are invertible over the integers")
        T = self.order
        inv = [0] * (T + 1)
        inv[0] = a[0]
        for m in range(1, T + 1):
            s = 0
            for j in range(1, m + 1):
                if a[j]:
                    s += a[j] * inv[m - j]
            inv[m] = -s * a[0]
        return Series(tuple(inv), self.half_powers)

    def __pow__(self, e: int) -> "Series":
        if e < 0:
            return self.inverse() ** (-e)
        result = Series.one(self.order, self.half_powers)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def halve(self) -> "Series":
        """Exact division by two; every coefficient must be even."""
        bad = [i for i, c in enumerate(self.coeffs) if c % 2]
        if bad:
            raise ArithmeticError(f"coefficient at index {bad[0]} is odd, cannot halve exactly")
        return Series(tuple(c // 2 for c in self.coeffs), self.half_powers)

    def shift_down(self, k: int) -> "Series":
        """Divide by the k-th power of the variable; the dropped terms must vanish."""
        if any(self.coeffs[:k]):
            raise ArithmeticError("series has nonzero terms below the requested shift")
        return Series(self.coeffs[k:] + (0,) * k, self.half_powers).truncate(self.order - k)

    def truncate(self, order: int) -> "Series":
        return Series(self.coeffs[: order + 1], self.half_powers)

    def q_coeffs(self) -> tuple[int, ...]:
        """Coefficients of integral powers of q."""
        return self.coeffs[::2] if self.half_powers else self.coeffs

    def to_json(self) -> dict:
        return {"t_is_sqrt_q": self.half_powers, "coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, obj: dict) -> "Series":
        return cls(tuple(obj["coeffs"]), bool(obj["t_is_sqrt_q"]))


def coeff(s: Series, m: int) -> int:
    if m < 0 or m > s.order:
        raise IndexError(f"index {m} outside 0..{s.order}")
    return s.coeffs[m]


@dataclass(frozen=True)
class ProductExpr:
    """prod over factors of ((q^a; q^a)_inf)^e; an empty product is 1."""

    factors: tuple[tuple[Fraction, int], ...] = ()

    def __post_init__(self):
        fs = []
        for a, e in self.factors:
            a = Fraction(a)
            if a <= 0 or (2 * a).denominator != 1:
                raise ValueError(f"offset {a} must be a positive multiple of 1/2")
            fs.append((a, int(e)))
        object.__setattr__(self, "factors", tuple(fs))

    @property
    def needs_half_powers(self) -> bool:
        return any(a.denominator != 1 for a, _ in self.factors)

    def __mul__(self, other: "ProductExpr") -> "ProductExpr":
        return ProductExpr(self.factors + other.factors)

    def inverse(self) -> "ProductExpr":
        return ProductExpr(tuple((a, -e) for a, e in self.factors))


def euler(a=1, e: int = 1) -> ProductExpr:
    return ProductExpr(((Fraction(a), e),))


def _euler_series(step: int, order: int, half_powers: bool) -> Series:
    # prod_{m>=1} (1 - x^(step*m)), with x the series variable
    c = [0] * (order + 1)
    c[0] = 1
    k = step
    while k <= order:
        for i in range(order, k - 1, -1):
            c[i] -= c[i - k]
        k += step
    return Series(tuple(c), half_powers)


def expand(expr: ProductExpr, T: int = DEFAULT_ORDER, half_powers: bool = False) -> Series:
    """Expand a product up to q^T.

    With ``half_powers`` the result is a series in t = q^(1/2) holding 2T+1
    coefficients.
    """
    if T < 0:
        raise ValueError("truncation order must be nonnegative")
    if expr.needs_half_powers and not half_powers:
        raise ValueError("product contains (q^(1/2))_inf factors; expand with half_powers=True")
    return _expand_to_index(expr, (2 if half_powers else 1) * T, half_powers)


@dataclass(frozen=True)
class StringFormula:
    """A rational combination sum_j c_j * expr_j.

    ``prefactor_shift`` divides the total by t^k; the q^(-1/2) prefactor of the
    cross string function is k=1 in half-power convention.
    """

    terms: tuple[tuple[Fraction, ProductExpr], ...]
    half_powers: bool = False
    prefactor_shift: int = 0

    def expand(self, T: int = DEFAULT_ORDER) -> Series:
        scale = 2 if self.half_powers else 1
        order = scale * T + self.prefactor_shift
        denom = 1
        for c, _ in self.terms:
            denom = max(denom, Fraction(c).denominator)
        total = Series((0,) * (order + 1), self.half_powers)
        for c, expr in self.terms:
            num = Fraction(c) * denom
            assert num.denominator == 1
            if expr.needs_half_powers and not self.half_powers:
                raise ValueError("formula mixes half powers into an integral series")
            part = _expand_to_index(expr, order, self.half_powers)
            total = total + part * int(num)
        while denom > 1:
            if denom % 2:
                raise ArithmeticError("only powers of two are supported as denominators")
            total = total.halve()
            denom //= 2
        if self.prefactor_shift:
            total = total.shift_down(self.prefactor_shift)
        return total


def _expand_to_index(expr: ProductExpr, order: int, half_powers: bool) -> Series:
    scale = 2 if half_powers else 1
    out = Series.one(order, half_powers)
    for a, e in expr.factors:
        out = out * (_euler_series(int(a * scale), order, half_powers) ** e)
    return out


STRING_CASES = (
    "A1-diag",
    "A2even-diag",
    "D2-diag",
    "A2odd-diag",
    "D1-diag",
    "B-diag-L0",
    "B-diag-Ln",
    "B-cross",
)

_CASE_ALIASES = {"B-diag-Λ0": "B-diag-L0", "B-diag-Λ1": "B-diag-L0", "B-diag-L1": "B-diag-L0",
                 "B-diag-Λn": "B-diag-Ln"}

_CASE_FAMILY = {
    "A1-diag": "A1",
    "A2even-diag": "A2even",
    "D2-diag": "D2",
    "A2odd-diag": "A2odd",
    "D1-diag": "D1",
    "B-diag-L0": "B1",
    "B-diag-Ln": "B1",
    "B-cross": "B1",
}


def normalize_case(case: str) -> str:
    case = _CASE_ALIASES.get(case, case)
    if case not in STRING_CASES:
        raise ValueError(f"unknown string-function case {case!r}; valid cases: {', '.join(STRING_CASES)}")
    return case


def string_function(family: str, n: int, case: str) -> StringFormula:
    """Closed product form of sum_m |Z(Lambda)_{lambda - m delta}| q^m."""
    case = normalize_case(case)
    if _CASE_FAMILY[case] != family:
        valid = [c for c, f in _CASE_FAMILY.items() if f == family]
        raise ValueError(f"case {case!r} does not apply to family {family}; valid: {', '.join(valid)}")
    one = Fraction(1)
    if case == "A1-diag":
        return StringFormula(((one, euler(1, -n)),))
    if case == "A2even-diag":
        return StringFormula(((one, euler(1, -1) * euler(1, -n)),))
    if case == "D2-diag":
        return StringFormula(((one, euler(1, -1) * euler(2, -n)),))
    if case == "A2odd-diag":
        return StringFormula(((one, euler(1, -n) * euler(2, -1)),))
    if case == "D1-diag":
        return StringFormula(((one, euler(1, -(n + 2))),))
    if case == "B-diag-Ln":
        return StringFormula(((one, euler(2, 1) * euler(1, -(n + 2))),))
    half = Fraction(1, 2)
    x = euler(half, -1) * euler(1, -(n - 1)) * euler(2, -1)
    y = euler(half, 1) * euler(1, -(n + 2))
    if case == "B-diag-L0":
        return StringFormula(((half, x), (half, y)), half_powers=True)
    return StringFormula(((half, x), (-half, y)), half_powers=True, prefactor_shift=1)


def sigma_from_Sigma(Sigma: Series, epsilon: int) -> Series:
    """Multiply by (q^epsilon)_inf, turning the Fock-space string function into
    the one of the basic representation."""
    if Sigma.coeffs[0] != 1:
        raise ValueError("expected constant term 1")
    if epsilon not in (1, 2):
        raise ValueError("epsilon must be 1 or 2")
    scale = 2 if Sigma.half_powers else 1
    return Sigma * _euler_series(epsilon * scale, Sigma.order, Sigma.half_powers)


def multiplicities(formula: StringFormula, T: int = DEFAULT_ORDER) -> list[int]:
    """The q^0..q^T coefficients of a string formula."""
    s = formula.expand(T)
    return list(s.q_coeffs()[: T + 1])


def convolve_counts(seqs: Iterable[Sequence[int]], T: int) -> list[int]:
    out = [1] + [0] * T
    for s in seqs:
        new = [0] * (T + 1)
        for i, a in enumerate(out):
            if a:
                for j in range(T + 1 - i):
                    if j < len(s):
                        new[i + j] += a * s[j]
        out = new
    return out
