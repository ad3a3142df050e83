"""The three ageing tests and their fixed per-test constants."""

from __future__ import annotations

import enum

from .kernels import KernelParams


class TestKind(enum.Enum):
    """Which ageing alternative is tested.

    ``scale`` is the factor multiplying the long-run standard deviation in the
    standardized statistic; ``lower_tail`` marks tests that reject for small values.
    """

    __test__ = False  # keep pytest from collecting the enum

    DESHPANDE = "deshpande"
    HOLLANDER_PROSCHAN = "hp"
    AHMAD = "ahmad"

    @property
    def alternative(self) -> str:
        return {"deshpande": "IFRA", "hp": "NBU", "ahmad": "DMRL"}[self.value]

    @property
    def dual_alternative(self) -> str:
        return {"deshpande": "DFRA", "hp": "NWU", "ahmad": "IMRL"}[self.value]

    @property
    def degree(self) -> int:
        return 3 if self is TestKind.HOLLANDER_PROSCHAN else 2

    @property
    def scale(self) -> int:
        return 3 if self is TestKind.HOLLANDER_PROSCHAN else 2

    @property
    def lower_tail(self) -> bool:
        return self is TestKind.HOLLANDER_PROSCHAN

    def null_mean(self, params: KernelParams = KernelParams()) -> float:
        if self is TestKind.DESHPANDE:
            return 1.0 / (params.b + 1.0)
        if self is TestKind.HOLLANDER_PROSCHAN:
            return 0.25
        return 0.0

    @classmethod
    def parse(cls, name: "str | TestKind") -> "TestKind":
        if isinstance(name, cls):
            return name
        key = str(name).strip().lower()
        aliases = {
            "d": "deshpande", "deshpande": "deshpande", "ifra": "deshpande",
            "hp": "hp", "hollander-proschan": "hp", "nbu": "hp",
            "a": "ahmad", "ahmad": "ahmad", "dmrl": "ahmad",
        }
        if key not in aliases:
            raise ValueError(f"unknown test {name!r}; choose deshpande, hp or ahmad")
        return cls(aliases[key])
