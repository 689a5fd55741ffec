"""Expression ring for motivic Euler characteristics.

Expressions are finite integer-linear combinations of L^a * sigma where
sigma is one of: the unit, the cusp-form motive S[k], or the recursion
symbol Ec(g; lambda).  Laurent exponents are allowed (duals produce
them); all arithmetic is exact.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence


class UnsupportedProductError(ValueError):
    """Products of two non-monomial symbols are not defined here."""


class NotExpandableError(ValueError):
    """Raised when a symbolic Ec(g>=2) blocks an operation."""


class AmbiguousSplitError(ValueError):
    """A monomial sits exactly on the weight-split threshold."""


def cusp_dim(k: int) -> int:
    """dim S_k for SL(2,Z), with the convention s_2 = -1."""
    if k < 2 or k % 2:
        return 0
    if k == 2:
        return -1
    return k // 12 - 1 if k % 12 == 2 else k // 12


_KIND_RANK = {"one": 0, "S": 1, "Ec": 2}


@dataclass(frozen=True)
class Symbol:
    """The unit, a cusp-form motive S[k], or an Euler-characteristic
    symbol Ec(g; lambda)."""

    kind: str
    k: int = 0
    g: int = 0
    lam: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "lam", tuple(self.lam))
        if self.kind == "S":
            if self.k < 2 or self.k % 2:
                raise ValueError("S[k] needs even k >= 2")
        elif self.kind == "Ec":
            if self.g < 0 or len(self.lam) != self.g:
                raise ValueError("Ec needs a length-g weight")
            if any(self.lam[i] < self.lam[i + 1] for i in range(self.g - 1)):
                raise ValueError("Ec weight must be weakly decreasing")
            if self.lam and self.lam[-1] < 0:
                raise ValueError("Ec weight must be nonnegative")
        elif self.kind != "one":
            raise ValueError(f"unknown symbol kind {self.kind!r}")

    def sort_key(self):
        return (_KIND_RANK[self.kind], self.k, self.g, self.lam)

    def __str__(self):
        if self.kind == "one":
            return "1"
        if self.kind == "S":
            return f"S[{self.k}]"
        return f"Ec({self.g};{','.join(str(a) for a in self.lam)})"


ONE = Symbol("one")


def _term_str(sym: Symbol, lexp: int, coeff: int) -> str:
    parts = []
    if sym.kind != "one":
        parts.append(str(sym))
    if lexp == 1:
        parts.append("L")
    elif lexp != 0:
        parts.append(f"L^{lexp}")
    body = "*".join(parts) if parts else "1"
    if abs(coeff) != 1 or not parts:
        body = f"{abs(coeff)}*{body}" if parts else str(abs(coeff))
    return body


class MotiveExpr:
    """Finite map (symbol, L-exponent) -> nonzero integer coefficient."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[Symbol, int], int] = ()):
        self._terms = {k: c for k, c in dict(terms).items() if c}

    # -- constructors ------------------------------------------------
    @staticmethod
    def zero() -> "MotiveExpr":
        return MotiveExpr()

    @staticmethod
    def unit(coeff: int = 1) -> "MotiveExpr":
        return MotiveExpr({(ONE, 0): coeff})

    @staticmethod
    def lefschetz(exp: int = 1, coeff: int = 1) -> "MotiveExpr":
        return MotiveExpr({(ONE, exp): coeff})

    @staticmethod
    def cusp_motive(k: int) -> "MotiveExpr":
        return MotiveExpr({(Symbol("S", k=k), 0): 1})

    @staticmethod
    def euler(g: int, lam: Sequence[int]) -> "MotiveExpr":
        return MotiveExpr({(Symbol("Ec", g=g, lam=tuple(lam)), 0): 1})

    # -- ring structure ----------------------------------------------
    def items(self):
        return sorted(
            self._terms.items(), key=lambda kv: (kv[0][0].sort_key(), kv[0][1])
        )

    def is_zero(self) -> bool:
        return not self._terms

    def is_l_polynomial(self) -> bool:
        return all(sym.kind == "one" for sym, _ in self._terms)

    def __eq__(self, other):
        return isinstance(other, MotiveExpr) and self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "MotiveExpr") -> "MotiveExpr":
        terms = dict(self._terms)
        for key, c in other._terms.items():
            terms[key] = terms.get(key, 0) + c
        return MotiveExpr(terms)

    def __neg__(self):
        return MotiveExpr({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return MotiveExpr({k: other * c for k, c in self._terms.items()})
        if not isinstance(other, MotiveExpr):
            return NotImplemented
        if other.is_l_polynomial():
            mono, general = other, self
        elif self.is_l_polynomial():
            mono, general = self, other
        else:
            raise UnsupportedProductError(
                "can only multiply by integer polynomials in L"
            )
        terms: dict[tuple[Symbol, int], int] = {}
        for (sym, a), c in general._terms.items():
            for (_, b), d in mono._terms.items():
                key = (sym, a + b)
                terms[key] = terms.get(key, 0) + c * d
        return MotiveExpr(terms)

    __rmul__ = __mul__

    # -- rewrite rules -----------------------------------------------
    def normalize(self, expand_genus_one: bool = True) -> "MotiveExpr":
        """Apply the rewrite rules to a fixed point.

        Always: Ec(0;()) -> 1 and Ec(g; lambda) -> 0 for odd |lambda|.
        With expand_genus_one (the default): Ec(1;(k)) -> -S[k+2] - 1,
        S[2] -> -L - 1, and S[k] -> 0 whenever dim S_k = 0.
        """
        terms = dict(self._terms)
        changed = True
        while changed:
            changed = False
            out: dict[tuple[Symbol, int], int] = {}

            def put(sym, lexp, c):
                key = (sym, lexp)
                out[key] = out.get(key, 0) + c

            for (sym, a), c in terms.items():
                if sym.kind == "Ec":
                    if sym.g == 0:
                        put(ONE, a, c)
                        changed = True
                    elif sum(sym.lam) % 2:
                        changed = True
                    elif expand_genus_one and sym.g == 1:
                        k = sym.lam[0]
                        put(Symbol("S", k=k + 2), a, -c)
                        put(ONE, a, -c)
                        changed = True
                    else:
                        put(sym, a, c)
                elif sym.kind == "S" and expand_genus_one:
                    if sym.k == 2:
                        put(ONE, a + 1, -c)
                        put(ONE, a, -c)
                        changed = True
                    elif cusp_dim(sym.k) == 0:
                        changed = True
                    else:
                        put(sym, a, c)
                else:
                    put(sym, a, c)
            terms = {k: c for k, c in out.items() if c}
        return MotiveExpr(terms)

    def dual(self) -> "MotiveExpr":
        """Poincare dual on the monomial level: L^a -> L^-a and
        S[k]*L^a -> S[k]*L^(1-k-a)."""
        terms: dict[tuple[Symbol, int], int] = {}
        for (sym, a), c in self._terms.items():
            if sym.kind == "one":
                key = (sym, -a)
            elif sym.kind == "S":
                key = (sym, 1 - sym.k - a)
            else:
                raise NotExpandableError(
                    f"cannot dualize symbolic term {sym}"
                )
            terms[key] = terms.get(key, 0) + c
        return MotiveExpr(terms)

    def motivic_weight_split(self, threshold: int):
        """Partition terms by motivic weight (2a for L^a, 2a+k-1 for
        S[k]*L^a) strictly below / above the threshold."""
        low: dict[tuple[Symbol, int], int] = {}
        high: dict[tuple[Symbol, int], int] = {}
        for (sym, a), c in self._terms.items():
            if sym.kind == "one":
                w = 2 * a
            elif sym.kind == "S":
                w = 2 * a + sym.k - 1
            else:
                raise NotExpandableError(
                    f"cannot weight-split symbolic term {sym}"
                )
            if w == threshold:
                raise AmbiguousSplitError(
                    f"term {_term_str(sym, a, c)} has weight exactly {threshold}"
                )
            (low if w < threshold else high)[(sym, a)] = c
        return MotiveExpr(low), MotiveExpr(high)

    # -- rendering ----------------------------------------------------
    def render(self, format: str = "text") -> str:
        if format == "json":
            return json.dumps(self.to_obj(), separators=(", ", ": "))
        if format != "text":
            raise ValueError(f"unknown format {format!r}")
        if self.is_zero():
            return "0"
        parts = []
        for (sym, a), c in self.items():
            body = _term_str(sym, a, c)
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __str__(self):
        return self.render()

    __repr__ = __str__

    def to_obj(self) -> list[dict]:
        out = []
        for (sym, a), c in self.items():
            rec: dict = {"coeff": c, "Lexp": a}
            if sym.kind == "one":
                rec["symbol"] = {"type": "one"}
            elif sym.kind == "S":
                rec["symbol"] = {"type": "S", "k": sym.k}
            else:
                rec["symbol"] = {"type": "Ec", "g": sym.g, "lambda": list(sym.lam)}
            out.append(rec)
        return out

    @staticmethod
    def from_obj(obj: Iterable[dict]) -> "MotiveExpr":
        terms: dict[tuple[Symbol, int], int] = {}
        for rec in obj:
            s = rec["symbol"]
            if s["type"] == "one":
                sym = ONE
            elif s["type"] == "S":
                sym = Symbol("S", k=s["k"])
            elif s["type"] == "Ec":
                sym = Symbol("Ec", g=s["g"], lam=tuple(s["lambda"]))
            else:
                raise ValueError(f"unknown symbol type {s['type']!r}")
            key = (sym, rec["Lexp"])
            terms[key] = terms.get(key, 0) + rec["coeff"]
        return MotiveExpr(terms)


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""
    counterexample: str | None = None


@dataclass
class VerificationReport:
    """Pass/fail record for a batch of identity checks."""

    checks: list[Check] = field(default_factory=list)

    def record(self, name, passed, detail="", counterexample=None):
        self.checks.append(Check(name, bool(passed), detail, counterexample))

    def extend(self, other: "VerificationReport"):
        self.checks.extend(other.checks)

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def render(self, format: str = "text") -> str:
        if format == "json":
            return json.dumps(
                [
                    {
                        "name": c.name,
                        "status": "pass" if c.passed else "fail",
                        "detail": c.detail,
                        "counterexample": c.counterexample,
                    }
                    for c in self.checks
                ],
                separators=(", ", ": "),
            )
        lines = []
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            line = f"{status} {c.name}"
            if c.detail:
                line += f": {c.detail}"
            if c.counterexample and not c.passed:
                line += f" [counterexample: {c.counterexample}]"
            lines.append(line)
        return "\n".join(lines)
