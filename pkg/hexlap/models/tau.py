"""Exact spanning-tree counts kept as power products."""
import math
from decimal import MAX_EMAX, MIN_EMIN, Decimal, localcontext

from pydantic import BaseModel, ConfigDict, Field

# Extra significant digits carried before the final rounding in ``scientific``.
GUARD_DIGITS = 10


class BigExponentProduct(BaseModel):
    """``cofactor * prod(base ** exponent)`` kept factored so huge counts stay cheap."""

    model_config = ConfigDict(frozen=True)

    factors: tuple[tuple[int, int], ...] = Field(
        default=(), description="(base, exponent) pairs, exponents non-negative"
    )
    cofactor: int = Field(1, ge=1)

    def value(self) -> int:
        result = self.cofactor
        for base, exponent in self.factors:
            result *= base**exponent
        return result

    def log10(self) -> float:
        return math.log10(self.cofactor) + sum(
            exponent * math.log10(base) for base, exponent in self.factors
        )

    def digits(self) -> int:
        """Decimal digits of ``value()``; may be off by one when log10 lands on an integer."""
        return math.floor(self.log10()) + 1

    def scientific(self, digits: int = 15) -> str:
        """Value in ``d.ddd...e+XX`` form with ``digits`` significant digits.

        Powers are taken in decimal arithmetic at reduced precision, so the full integer
        is never built.
        """
        with localcontext() as ctx:
            ctx.prec = digits + GUARD_DIGITS
            ctx.Emax, ctx.Emin = MAX_EMAX, MIN_EMIN
            product = Decimal(self.cofactor)
            for base, exponent in self.factors:
                product *= Decimal(base) ** exponent
            ctx.prec = digits
            return f"{+product:.{digits - 1}e}"

    def __str__(self) -> str:
        parts = [f"{base}^{exponent}" for base, exponent in self.factors]
        parts.append(str(self.cofactor))
        return " * ".join(parts)
