"""Exact verification of the algebraic layer behind the classification.

Everything is decided in the ring Z[sqrt(5)] with rational coordinates
(QuadInt) or in plain big integers after clearing denominators; no
float ever participates in a verdict.
"""

from __future__ import annotations

import csv
import random
from dataclasses import dataclass
from decimal import Decimal, getcontext
from fractions import Fraction
from typing import IO

from .numeration import fib, lucas


@dataclass(frozen=True)
class QuadInt:
    """Element a + b*sqrt(5) with exact rational coordinates."""

    a: Fraction
    b: Fraction

    @staticmethod
    def of(a, b=0) -> "QuadInt":
        return QuadInt(Fraction(a), Fraction(b))

    def __add__(self, other) -> "QuadInt":
        other = _coerce(other)
        return QuadInt(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other) -> "QuadInt":
        other = _coerce(other)
        return QuadInt(self.a - other.a, self.b - other.b)

    def __rsub__(self, other) -> "QuadInt":
        return _coerce(other) - self

    def __neg__(self) -> "QuadInt":
        return QuadInt(-self.a, -self.b)

    def __mul__(self, other) -> "QuadInt":
        other = _coerce(other)
        return QuadInt(self.a * other.a + 5 * self.b * other.b,
                       self.a * other.b + self.b * other.a)

    __rmul__ = __mul__

    def conjugate(self) -> "QuadInt":
        return QuadInt(self.a, -self.b)

    def inverse(self) -> "QuadInt":
        norm = self.a * self.a - 5 * self.b * self.b
        if norm == 0:
            raise ZeroDivisionError("zero norm")
        return QuadInt(self.a / norm, -self.b / norm)

    def __pow__(self, n: int) -> "QuadInt":
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        out = QuadInt.of(1)
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def sign(self) -> int:
        """Exact sign of a + b*sqrt(5), by cases on the coordinates."""
        a, b = self.a, self.b
        if a == 0 and b == 0:
            return 0
        if a >= 0 and b >= 0:
            return 1
        if a <= 0 and b <= 0:
            return -1
        # mixed signs: compare a^2 against 5 b^2 (both sides positive)
        lead = 1 if a > 0 else -1
        diff = a * a - 5 * b * b
        if diff == 0:
            raise ArithmeticError("sqrt(5) is irrational; a^2 = 5 b^2 "
                                  "with a, b nonzero cannot happen")
        return lead if diff > 0 else -lead

    def __lt__(self, other):
        return (self - _coerce(other)).sign() < 0

    def __le__(self, other):
        return (self - _coerce(other)).sign() <= 0

    def __gt__(self, other):
        return (self - _coerce(other)).sign() > 0

    def __ge__(self, other):
        return (self - _coerce(other)).sign() >= 0


def _coerce(x) -> QuadInt:
    if isinstance(x, QuadInt):
        return x
    return QuadInt(Fraction(x), Fraction(0))


ALPHA = QuadInt.of(Fraction(1, 2), Fraction(1, 2))
BETA = QuadInt.of(Fraction(1, 2), Fraction(-1, 2))
ALPHA2 = QuadInt.of(Fraction(3, 2), Fraction(1, 2))
SQRT5 = QuadInt.of(0, 1)


def binet_fib(n: int) -> Fraction:
    """(alpha^n - beta^n)/sqrt(5), which is twice the sqrt(5) coordinate."""
    return 2 * (ALPHA ** n).b


def binet_lucas(n: int) -> Fraction:
    return 2 * (ALPHA ** n).a


# ---------------------------------------------------------------------------
# the four bound functions and the two sign polynomials


def f_val(i: int, j: int) -> Fraction:
    """(F_j - 1)/F_{j-2}; the suffix-repetition lower bound family."""
    if fib(j - 2) <= 0:
        raise ValueError(f"f(i,{j}) needs F_{{j-2}} > 0 (j >= 3)")
    return Fraction(fib(j) - 1, fib(j - 2))


def g_val(i: int, j: int) -> Fraction:
    """(F_i - F_j - 1)/F_{i-2}; the whole-prefix-period bound family."""
    if fib(i - 2) <= 0:
        raise ValueError(f"g({i},j) needs F_{{i-2}} > 0 (i >= 3)")
    return Fraction(fib(i) - fib(j) - 1, fib(i - 2))


def r_val(i: int, j: int) -> Fraction:
    """F_{2j+1}/F_{2j-1} (independent of i; kept two-argument to match g)."""
    if fib(2 * j - 1) <= 0:
        raise ValueError(f"r(i,{j}) needs F_{{2j-1}} > 0 (j >= 0)")
    return Fraction(fib(2 * j + 1), fib(2 * j - 1))


def s_val(i: int, j: int) -> Fraction:
    """(F_i - F_{2j+1})/F_{i-2}."""
    if fib(i - 2) <= 0:
        raise ValueError(f"s({i},j) needs F_{{i-2}} > 0")
    return Fraction(fib(i) - fib(2 * j + 1), fib(i - 2))


def rho(i: int, j: int) -> int:
    """(F_i - F_j - 1) F_{j-2} - (F_j - 1) F_{i-2}; sign of g - f."""
    return (fib(i) - fib(j) - 1) * fib(j - 2) - (fib(j) - 1) * fib(i - 2)


def psi(i: int, j: int) -> int:
    """(F_i - F_{2j+1}) F_{2j-1} - F_{i-2} F_{2j+1}; sign of s - r."""
    return (fib(i) - fib(2 * j + 1)) * fib(2 * j - 1) - fib(i - 2) * fib(2 * j + 1)


# ---------------------------------------------------------------------------
# identity sweeps


def check_eq1(a_range: tuple[int, int] = (-30, 30),
              b_range: tuple[int, int] = (-30, 30)) -> bool:
    """F_a F_{b+2} - F_{a+2} F_b = (-1)^b F_{a-b} for all integers a, b."""
    for a in range(a_range[0], a_range[1] + 1):
        for b in range(b_range[0], b_range[1] + 1):
            lhs = fib(a) * fib(b + 2) - fib(a + 2) * fib(b)
            if lhs != (-1) ** b * fib(a - b):
                return False
    return True


def check_lemma3(i_max: int) -> bool:
    """Two double inequalities pinning F_{i+2}/F_i and (F_{2i+1}+1)/F_{2i-1}.

    alpha^2 + (-1)^i/F_{2i} < F_{i+2}/F_i < alpha^2 + (-1)^i/(F_{2i}-(-1)^i)
    alpha^2 + 1/(F_{2i-1}+2) < (F_{2i+1}+1)/F_{2i-1} < alpha^2 + 1/F_{2i-1}

    All denominators are positive on i >= 1, so each comparison clears to
    a QuadInt sign query.
    """
    for i in range(1, i_max + 1):
        e = (-1) ** i
        mid = Fraction(fib(i + 2), fib(i))
        lo = ALPHA2 + Fraction(e, fib(2 * i))
        hi = ALPHA2 + Fraction(e, fib(2 * i) - e)
        if not (lo < _coerce(mid) < hi):
            return False
        mid2 = Fraction(fib(2 * i + 1) + 1, fib(2 * i - 1))
        lo2 = ALPHA2 + Fraction(1, fib(2 * i - 1) + 2)
        hi2 = ALPHA2 + Fraction(1, fib(2 * i - 1))
        if not (lo2 < _coerce(mid2) < hi2):
            return False
    return True


_LEMMA4_ITEMS = (
    ("i", 4, lambda k: (fib(k + 1) + 1) ** 2 <= 3 * fib(2 * k - 1)),
    ("ii", 3, lambda k: fib(4 * k - 2) ** 2 >= 100 * fib(2 * k + 1)),
    ("iii", 5, lambda k: fib(2 * k + 2) <= 6 * fib(k) ** 2),
    ("iv", 4, lambda k: fib(2 * k) ** 2 >= 8 * fib(2 * k + 2)),
    ("v", 2, lambda k: fib(12 * k - 4) ** 2 >= 10000 * fib(6 * k + 3)),
    ("vi", 2, lambda k: fib(2 * k + 1) ** 2 * fib(6 * k + 3) <= 6 * fib(6 * k - 2) ** 2),
    ("vii", 3, lambda k: fib(4 * k + 2) ** 2 >= 4 * fib(6 * k + 5)),
)


def lemma4_report(k_max: int) -> dict:
    """Seven Fibonacci inequalities, each on its stated range.

    Sharpness: every item's threshold is tight; the inequality fails at
    threshold - 1.  That is part of the report and of the verdict.
    """
    items = {}
    for name, k0, pred in _LEMMA4_ITEMS:
        failures = [k for k in range(k0, k_max + 1) if not pred(k)]
        sharp = not pred(k0 - 1)
        items[name] = {"threshold": k0, "holds": not failures,
                       "sharp": sharp, "failures": failures[:10]}
    verdict = all(v["holds"] and v["sharp"] for v in items.values())
    return {"claim": "lemma4", "range": [1, k_max], "verdict": verdict,
            "items": items}


def check_lemma4(k_max: int) -> bool:
    return lemma4_report(k_max)["verdict"]


def check_monotonicity(i_max: int) -> bool:
    """Six growth claims, each via its displayed difference identity.

    f rises in j:    numerator identity (-1)^{j+1} + F_{j-3} >= 0, j >= 3
    g falls in j:    g(i,j+1) - g(i,j) = (F_j - F_{j+1})/F_{i-2} <= 0
    rho rises in i:  rho(i+1,j) - rho(i,j) = F_{i-3} - (-1)^j F_{i-j-1} >= 0
    r rises in j:    F_{2j+3} F_{2j-1} - F_{2j+1}^2 = 1
    s falls in j:    s(i,j+1) - s(i,j) = (F_{2j+1} - F_{2j+3})/F_{i-2} < 0
    psi rises in i:  psi(i+1,j) - psi(i,j) = F_{i-2j-2} >= 0 for i >= 2j+2
    """
    for j in range(3, i_max + 1):
        num = fib(j + 1) * fib(j - 2) - fib(j - 1) * fib(j) + fib(j - 1) - fib(j - 2)
        if num != (-1) ** (j + 1) + fib(j - 3) or num < 0:
            return False
        if f_val(0, j + 1) - f_val(0, j) != Fraction(num, fib(j - 1) * fib(j - 2)):
            return False
    for i in range(5, i_max + 1):
        for j in range(3, i - 1):
            if g_val(i, j + 1) - g_val(i, j) != Fraction(fib(j) - fib(j + 1), fib(i - 2)):
                return False
            if g_val(i, j + 1) > g_val(i, j):
                return False
            step = rho(i + 1, j) - rho(i, j)
            if step != fib(i - 1) * fib(j - 2) - (fib(j) - 1) * fib(i - 3):
                return False
            if step != fib(i - 3) - (-1) ** j * fib(i - j - 1) or step < 0:
                return False
    for j in range(0, i_max + 1):
        if fib(2 * j + 3) * fib(2 * j - 1) - fib(2 * j + 1) ** 2 != 1:
            return False
        if r_val(0, j + 1) <= r_val(0, j):
            return False
    for i in range(3, i_max + 1):
        for j in range(0, (i - 1) // 2 + 1):
            if s_val(i, j + 1) - s_val(i, j) != Fraction(
                    fib(2 * j + 1) - fib(2 * j + 3), fib(i - 2)):
                return False
            if s_val(i, j + 1) >= s_val(i, j):
                return False
    for j in range(0, i_max // 2 + 1):
        for i in range(2 * j + 2, i_max + 1):
            step = psi(i + 1, j) - psi(i, j)
            if step != fib(i - 1) * fib(2 * j - 1) - fib(i - 3) * fib(2 * j + 1):
                return False
            if step != fib(i - 2 * j - 2) or step < 0:
                return False
    return True


def _div_exact(total: int, den: int) -> int:
    if total % den:
        raise ArithmeticError(f"{total} not divisible by {den}")
    return total // den


def closed_forms_report(k_max: int) -> dict:
    """Every displayed closed form, cleared of its 1/5, 1/10, 1/20 factor.

    Each display is checked as an exact integer identity (divisibility
    by the cleared denominator asserted), then its sign conclusion on
    the range where it is actually true:

      * rho(2k+1,k+1) > 0 holds for k >= 4 as stated;
      * rho(2k+2,k+2) < 0 holds for k >= 1 as stated;
      * the odd-index product is stated "> 0 for k >= 0" but both sides
        vanish at k = 0 (and f(1,2) is 0/0 there); the sign is checked
        from k = 1 and the k = 0 exception is recorded;
      * the even-index product sign ">= 0" is stated for k >= 3 (it is
        genuinely negative at k = 2);
      * all four Case-3 displays are ">= 0" from k = 1; at k = 0 the
        i = 6k display is negative, so signs are checked from k = 1.
    """
    out = {"claim": "closed_forms", "range": [0, k_max], "failures": []}
    bad = out["failures"].append
    for k in range(0, k_max + 1):
        m = (-1) ** k
        if 5 * rho(2 * k + 1, k + 1) != lucas(2 * k - 2) - 5 * fib(k - 1) - 5 * fib(-k) - 3 * m:
            bad(["rho_odd", k])
        if 5 * rho(2 * k + 2, k + 2) != -lucas(2 * k - 2) - 5 * fib(k) + 5 * fib(-k) + 3 * m:
            bad(["rho_even", k])
        odd_lhs = fib(2 * k - 1) * (fib(k + 2) - 1) - fib(k) * (fib(2 * k + 1) - fib(k + 1) - 1)
        odd_rhs = -2 * m + 2 * lucas(2 * k - 3) + 10 * fib(k) + 5 * fib(-k) + 5 * lucas(-k)
        if odd_lhs != _div_exact(odd_rhs, 10):
            bad(["odd_product", k])
        even_lhs = fib(k) * (fib(2 * k + 2) - fib(k + 1) - 1) - fib(2 * k) * (fib(k + 2) - 1)
        even_rhs = 2 * m + 2 * lucas(2 * k - 1) - 10 * fib(k) - 5 * fib(1 - k) + 5 * lucas(1 - k)
        if even_lhs != _div_exact(even_rhs, 10):
            bad(["even_product", k])
        if 5 * psi(6 * k, k) != lucas(4 * k - 2) - 3:
            bad(["psi_6k", k])
        if 5 * psi(6 * k + 5, k + 1) != -lucas(4 * k) - 3:
            bad(["psi_6k5", k])
        for a, num, den in _case3_displays(k):
            lhs = fib(6 * k + a - 2) * fib(2 * k + 3) - fib(2 * k + 1) * fib(6 * k + a) + fib(2 * k + 1) ** 2
            if lhs != _div_exact(num, den):
                bad([f"case3_i=6k+{a}", k])
        # the Lemma 4 proof displays, also 1/5-cleared Binet identities
        if 5 * (3 * fib(2 * k - 1) - (fib(k + 1) + 1) ** 2) != (
                8 * fib(2 * k - 3) + 4 * fib(2 * k - 2) - 10 * fib(k + 1) - 5 - 2 * m):
            bad(["lemma4_i_display", k])
        if 5 * (6 * fib(k) ** 2 - fib(2 * k + 2)) != (
                3 * fib(2 * k - 1) - 4 * fib(2 * k - 2) - 12 * m):
            bad(["lemma4_iii_display", k])
    # sign conclusions on their true ranges
    for k in range(4, k_max + 1):
        if not (rho(2 * k + 2, k + 1) >= rho(2 * k + 1, k + 1) > 0):
            bad(["rho_sign_pos", k])
    for k in range(1, k_max + 1):
        if not (rho(2 * k + 1, k + 2) <= rho(2 * k + 2, k + 2) < 0):
            bad(["rho_sign_neg", k])
        odd_lhs = fib(2 * k - 1) * (fib(k + 2) - 1) - fib(k) * (fib(2 * k + 1) - fib(k + 1) - 1)
        if not odd_lhs > 0:
            bad(["odd_product_sign", k])
        if odd_lhs != fib(k) * fib(2 * k - 1) * (f_val(0, k + 2) - g_val(2 * k + 1, k + 1)):
            bad(["odd_product_fraction", k])
        even_lhs = fib(k) * (fib(2 * k + 2) - fib(k + 1) - 1) - fib(2 * k) * (fib(k + 2) - 1)
        if even_lhs != fib(k) * fib(2 * k) * (g_val(2 * k + 2, k + 1) - f_val(0, k + 2)):
            bad(["even_product_fraction", k])
        for a, num, den in _case3_displays(k):
            lhs = fib(6 * k + a - 2) * fib(2 * k + 3) - fib(2 * k + 1) * fib(6 * k + a) + fib(2 * k + 1) ** 2
            if not lhs >= 0:
                bad([f"case3_sign_i=6k+{a}", k])
            if lhs != fib(2 * k + 1) * fib(6 * k + a - 2) * (
                    r_val(0, k + 1) - s_val(6 * k + a, k)):
                bad([f"case3_fraction_i=6k+{a}", k])
        # psi chains around j' for both neighbouring j
        chain1 = [psi(6 * k + d, k) for d in range(6)]
        if not all(x >= y for x, y in zip(chain1[1:], chain1)) or chain1[0] < 0:
            bad(["psi_chain_lower", k])
        chain2 = [psi(6 * k + d, k + 1) for d in range(6)]
        if not all(x <= y for x, y in zip(chain2, chain2[1:])) or chain2[5] > 0:
            bad(["psi_chain_upper", k])
    for k in range(3, k_max + 1):
        even_lhs = fib(k) * (fib(2 * k + 2) - fib(k + 1) - 1) - fib(2 * k) * (fib(k + 2) - 1)
        if not even_lhs >= 0:
            bad(["even_product_sign", k])
    for k in range(4, k_max + 1):
        if 3 * fib(2 * k - 1) - (fib(k + 1) + 1) ** 2 < 0:
            bad(["lemma4_i_sign", k])
    for k in range(5, k_max + 1):
        if 6 * fib(k) ** 2 - fib(2 * k + 2) < 0:
            bad(["lemma4_iii_sign", k])
    # the stated-but-false boundary cases, recorded as exceptions
    out["exceptions"] = {
        "odd_product_sign_k0": "stated for k >= 0 but both sides are 0 at k = 0",
        "case3_i6k_sign_k0": "the i = 6k display equals -1 at k = 0",
    }
    out["verdict"] = not out["failures"]
    out["failures"] = out["failures"][:20]
    return out


def _case3_displays(k: int):
    m3 = lucas(4 * k - 3)
    f4 = fib(4 * k)
    return (
        (0, 7 * m3 + 15 * f4 + 8, 20),
        (1, -2 * m3 + 5 * f4 + 2, 5),
        (2, m3 + 5 * f4 + 4, 10),
        (3, -3 * m3 + 5 * f4 + 8, 20),
    )


def check_closed_forms(k_max: int) -> bool:
    return closed_forms_report(k_max)["verdict"]


# ---------------------------------------------------------------------------
# crossover tables


@dataclass(frozen=True)
class CrossoverRow:
    j: int
    rising: Fraction   # f for B1, r for B2
    falling: Fraction  # g for B1, s for B2


@dataclass(frozen=True)
class CrossoverTable:
    i: int
    family: str  # "b1" | "b2"
    j_prime: int
    rows: tuple[CrossoverRow, ...]
    bracket_ok: bool


def crossover(i: int, family: str) -> CrossoverTable:
    """Locate where the rising bound passes the falling one.

    B1: j' = ceil(i/2); claimed g(i,j') >= f(i,j') and the reverse at
    j'+1, for i >= 6.  B2: j' = floor(i/6); claimed r(i,j') <= s(i,j')
    and the reverse at j'+1, for i >= 1.  bracket_ok reports whether
    the claim actually holds at this i; the stated ranges have known
    exceptions (B1 fails at i = 7, B2 at i = 1, and B2 values are
    undefined at i = 2).
    """
    if family == "b1":
        if i < 6:
            raise ValueError("B1 crossover needs i >= 6")
        jp = -(-i // 2)
        js = sorted(set(range(3, i - 1)) | {jp, jp + 1})
        rows = tuple(CrossoverRow(j, f_val(i, j), g_val(i, j)) for j in js)
        ok = (g_val(i, jp) >= f_val(i, jp)) and (g_val(i, jp + 1) < f_val(i, jp + 1))
    elif family == "b2":
        if i < 1:
            raise ValueError("B2 crossover needs i >= 1")
        jp = i // 6
        js = sorted(set(range(1, (i - 3) // 2 + 1)) | {jp, jp + 1})
        rows = tuple(CrossoverRow(j, r_val(i, j), s_val(i, j)) for j in js)
        ok = (r_val(i, jp) <= s_val(i, jp)) and (r_val(i, jp + 1) >= s_val(i, jp + 1))
    else:
        raise ValueError(f"unknown family {family!r}")
    for prev, cur in zip(rows, rows[1:]):
        if cur.rising < prev.rising or cur.falling > prev.falling:
            raise AssertionError(f"monotonicity broken in table i={i}")
    return CrossoverTable(i, family, jp, rows, ok)


def psi_bracket_ok(i: int) -> bool:
    """Sign-polynomial form of the B2 bracket; defined for every i >= 0."""
    jp = i // 6
    return psi(i, jp) >= 0 and psi(i, jp + 1) <= 0


def crossover_csv(table: CrossoverTable, out: IO[str]) -> None:
    a, b = ("f", "g") if table.family == "b1" else ("r", "s")
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["i", "j", a, b, f"{a}_decimal", f"{b}_decimal"])
    for row in table.rows:
        writer.writerow([table.i, row.j, str(row.rising), str(row.falling),
                         f"{float(row.rising):.10f}", f"{float(row.falling):.10f}"])


# ---------------------------------------------------------------------------
# sanity and oracle-facing checks


def quadint_sign_sanity(count: int = 10000, seed: int = 20260818) -> bool:
    """sign() against 60-digit decimal evaluation on random elements.

    Diagnostic only; verdict-path comparisons never go through floats.
    """
    getcontext().prec = 60
    sqrt5 = Decimal(5).sqrt()
    rng = random.Random(seed)
    for _ in range(count):
        a = Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 10**4))
        b = Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 10**4))
        x = QuadInt(a, b)
        num = (Decimal(a.numerator) / a.denominator
               + sqrt5 * Decimal(b.numerator) / b.denominator)
        want = 0 if num == 0 else (1 if num > 0 else -1)
        if x.sign() != want:
            return False
    return True


def e_lower_bound_report(i_max_b1: int = 26, i_max_b2: int = 26) -> dict:
    """Pointwise e(n) lower bounds from the crossover analysis.

    B1: for n = F_i - F_j - 1 (i in [8, i_max], admissible j),
    e(n) >= min(g(i,j'), f(i,j'+1)) with j' = ceil(i/2).
    B2: for n = F_i - F_{2j+1} (i in [6, i_max], admissible j),
    e(n) >= min(s(i,j'), r(i,j'+1)) with j' = floor(i/6).
    The B2 bound is false at i = 5 (e(3) = 3/2 < 2): the underlying
    theorem handles n <= 21 by direct check, so the sweep starts at 6.
    """
    from .repetitions import exponent_record
    failures = []
    checked = 0
    for i in range(8, i_max_b1 + 1):
        jp = -(-i // 2)
        bound = min(g_val(i, jp), f_val(i, jp + 1))
        for j in range(3, i - 1):
            n = fib(i) - fib(j) - 1
            checked += 1
            if exponent_record(n).exponent < bound:
                failures.append(["b1", i, j, n])
    for i in range(6, i_max_b2 + 1):
        jp = i // 6
        bound = min(s_val(i, jp), r_val(i, jp + 1))
        for j in range(1, (i - 3) // 2 + 1):
            n = fib(i) - fib(2 * j + 1)
            checked += 1
            if exponent_record(n).exponent < bound:
                failures.append(["b2", i, j, n])
    return {"claim": "e_lower_bounds", "checked": checked,
            "verdict": not failures, "failures": failures[:20]}


def identities_report(k_max: int = 200, closed_k_max: int = 100) -> list[dict]:
    """The full identity battery as a list of claim reports."""
    reports = [
        {"claim": "eq1", "range": [-30, 30], "verdict": check_eq1()},
        {"claim": "lemma3", "range": [1, k_max], "verdict": check_lemma3(k_max)},
        lemma4_report(k_max),
        {"claim": "monotonicity", "range": [1, 60],
         "verdict": check_monotonicity(60)},
        closed_forms_report(closed_k_max),
    ]
    cross_b1 = all(crossover(i, "b1").bracket_ok
                   for i in [6, 8] + list(range(9, 401)))
    cross_b2 = all(crossover(i, "b2").bracket_ok for i in range(3, 401))
    cross_psi = all(psi_bracket_ok(i) for i in range(2, 401))
    reports.append({
        "claim": "crossover", "range": [1, 400],
        "verdict": cross_b1 and cross_b2 and cross_psi,
        "exceptions": {
            "b1_i7": "g(7,4) < f(7,4): rho(7,4) = -1, outside the "
                     "closed-form range k >= 4",
            "b2_i1": "r(1,0) = 1 > s(1,0) = 0",
            "b2_i2": "s(2,0) is 0/0; psi(2,0) = 0 holds in sign form",
        }})
    return reports
