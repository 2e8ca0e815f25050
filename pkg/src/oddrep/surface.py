"""Trace of complex conjugation on the cohomology of a real elliptic surface.

Input is the configuration of singular fibres of an elliptic fibration over
P^1 defined over R: the real singular fibres with their real structure, and
the pairs of complex-conjugate non-real singular fibres.  Fibre types are
data here; deriving them from a Weierstrass equation (Tate's algorithm) is
left to external tools.

From the configuration we compute

* chi_real: Euler characteristic of the real locus, the sum of the local
  contributions of the real singular fibres;
* tr_W: trace of F_infinity on the span of the section, a smooth fibre and
  the fibre components (the first two contribute -1 each, conjugate
  pairs of fibres contribute 0);
* tr_V: trace on the complementary piece, by Lefschetz:
  ``tr_V = chi_real - (2 + tr_W)``;
* tr_c: trace of complex conjugation on the mod-l local system, ``-tr_V``;
* rank_N: rank of that local system, ``-4 + deg(conductor)``.

Only the fibre types and real structures with tabulated values are
accepted: I_1 and I_2 (split or not), II, III, III* and I_n* with either
all components real or all but two.  Anything else raises
:class:`UnsupportedFiber` rather than guessing.

Conductor exponents are tame (1 for multiplicative, 2 for additive
reduction).  Wild contributions at residue characteristic 2 or 3 are not
modelled.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

from .errors import UnsupportedFiber


class RealComponents(enum.Enum):
    ALL = "all"
    ALL_BUT_TWO = "all_but_two"


@dataclass(frozen=True)
class KodairaFiber:
    symbol: str
    n: Optional[int] = None
    split: Optional[bool] = None
    real_components: Optional[RealComponents] = None

    def __post_init__(self):
        s = self.symbol
        if s == "I_n":
            if self.n is None or self.n < 1 or self.split is None or self.real_components is not None:
                raise ValueError("I_n needs n >= 1 and split, and no real_components")
        elif s == "I_n_star":
            if self.n is None or self.n < 0 or self.split is not None:
                raise ValueError("I_n_star needs n >= 0 and no split flag")
            if self.real_components is None:
                object.__setattr__(self, "real_components", RealComponents.ALL)
        elif s in ("II", "III", "IV", "IV_star", "III_star", "II_star"):
            if self.n is not None or self.split is not None or self.real_components is not None:
                raise ValueError(f"{s} takes no parameters")
        else:
            raise ValueError(f"unknown Kodaira symbol {s!r}")

    @property
    def multiplicative(self) -> bool:
        return self.symbol == "I_n"

    def __str__(self):
        if self.symbol == "I_n":
            return f"I{self.n}({'split' if self.split else 'nonsplit'})"
        if self.symbol == "I_n_star":
            return f"I{self.n}*({self.real_components.value})"
        return self.symbol.replace("_star", "*")


def I(n: int, split: bool) -> KodairaFiber:
    return KodairaFiber("I_n", n=n, split=split)


def I_star(n: int, real_components: RealComponents | str = RealComponents.ALL) -> KodairaFiber:
    return KodairaFiber("I_n_star", n=n, real_components=RealComponents(real_components))


II = KodairaFiber("II")
III = KodairaFiber("III")
III_STAR = KodairaFiber("III_star")


def _star_value(f: KodairaFiber) -> int:
    return -f.n - 4 if f.real_components is RealComponents.ALL else -f.n - 2


def fiber_chi(f: KodairaFiber) -> int:
    """Euler characteristic of the real points of a real singular fibre."""
    if f.symbol == "I_n" and f.n in (1, 2):
        if f.n == 1:
            return -1 if f.split else 1
        return -2 if f.split else 0
    if f.symbol == "I_n_star":
        return _star_value(f)
    table = {"II": 0, "III": -1, "III_star": -7}
    if f.symbol in table:
        return table[f.symbol]
    raise UnsupportedFiber(f"no tabulated real Euler characteristic for {f}")


def fiber_trace(f: KodairaFiber) -> int:
    """Trace of F_infinity on the span of the fibre's components modulo the fibre class."""
    if f.symbol == "I_n" and f.n in (1, 2):
        return 0 if f.n == 1 else -1
    if f.symbol == "I_n_star":
        return _star_value(f)
    table = {"II": 0, "III": -1, "III_star": -7}
    if f.symbol in table:
        return table[f.symbol]
    raise UnsupportedFiber(f"no tabulated trace for {f}")


def fiber_conductor_exponent(f: KodairaFiber) -> int:
    return 1 if f.multiplicative else 2


@dataclass(frozen=True)
class SurfaceConfig:
    """Real singular fibres and pairs of conjugate non-real singular fibres."""

    real_fibers: tuple[KodairaFiber, ...] = ()
    conjugate_pairs: tuple[KodairaFiber, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "real_fibers", tuple(self.real_fibers))
        object.__setattr__(self, "conjugate_pairs", tuple(self.conjugate_pairs))

    def with_real(self, *fibers: KodairaFiber) -> SurfaceConfig:
        return SurfaceConfig(self.real_fibers + fibers, self.conjugate_pairs)

    def with_pairs(self, *fibers: KodairaFiber) -> SurfaceConfig:
        return SurfaceConfig(self.real_fibers, self.conjugate_pairs + fibers)


def chi_real(config: SurfaceConfig) -> int:
    return sum(fiber_chi(f) for f in config.real_fibers)


def trace_W(config: SurfaceConfig) -> int:
    # -2: section and smooth fibre classes, each reversed by F_infinity
    return -2 + sum(fiber_trace(f) for f in config.real_fibers)


def trace_V(config: SurfaceConfig) -> int:
    return chi_real(config) - (2 + trace_W(config))


def trace_c_mod_ell(config: SurfaceConfig) -> int:
    """Trace of complex conjugation on the mod-l cohomology, as an integer."""
    return -trace_V(config)


def rank_N(config: SurfaceConfig) -> int:
    real = sum(fiber_conductor_exponent(f) for f in config.real_fibers)
    pairs = sum(fiber_conductor_exponent(f) for f in config.conjugate_pairs)
    return -4 + real + 2 * pairs


@dataclass(frozen=True)
class SurfaceReport:
    chi_real: int
    tr_W: int
    tr_V: int
    tr_c_mod_ell: int
    rank_N: int
    warnings: tuple[str, ...] = field(default=())

    def __post_init__(self):
        assert self.tr_V == self.chi_real - (2 + self.tr_W)
        assert self.tr_c_mod_ell == -self.tr_V


def surface_report(config: SurfaceConfig, defaulted_components: int = 0) -> SurfaceReport:
    chi, trw = chi_real(config), trace_W(config)
    trv = chi - (2 + trw)
    n = rank_N(config)
    notes = []
    if n < 1:
        notes.append(f"rank_N = {n} < 1: configuration lacks the bad fibres of a genuine family")
    if defaulted_components:
        notes.append(f"{defaulted_components} I_n* fibre(s) defaulted to real_components = all")
    return SurfaceReport(chi, trw, trv, -trv, n, tuple(notes))


# --- the five fibre configurations -----------------------------------------

CASES = ("1", "2", "3_O", "3_Omega", "4")

#: N mod 8 label of the orthogonal family whose real fibres each case describes.
CASE_N_MOD_8 = {"1": "2", "2": "4", "3_O": "6O", "3_Omega": "6Omega", "4": "0"}


def normalize_case(name) -> str:
    s = str(name).replace("Case", "").replace("case", "").replace("Ω", "Omega").strip()
    aliases = {"3O": "3_O", "3Omega": "3_Omega", "3_o": "3_O", "3_omega": "3_Omega",
               "3o": "3_O", "3omega": "3_Omega"}
    s = aliases.get(s, aliases.get(s.lower(), s))
    if s not in CASES:
        raise ValueError(f"unknown case {name!r}; expected one of {CASES}")
    return s


def builtin_case(name, a1: int = 0, a2: int = 0, n_pairs_extra: int = 0,
                 i4_star: RealComponents | str = RealComponents.ALL) -> SurfaceConfig:
    """Fibre configuration of one of the five named cases.

    ``a1`` real I_0* fibres have all components real, ``a2`` have all but
    two; ``n_pairs_extra`` conjugate pairs of I_0* fibres are added.
    ``i4_star`` picks the real structure of the I_4* fibres in cases 3_O
    and 3_Omega.
    """
    case = normalize_case(name)
    i4 = I_star(4, i4_star)
    special = {
        "1": (I(1, False), I(2, False), III),
        "2": (I(1, False), I(1, True), II, II),
        "3_O": (I(2, True), I(2, False), i4, i4),
        "3_Omega": (I(2, True), I(2, True), i4, i4),
        "4": (I(1, False), I(2, True), III_STAR),
    }[case]
    fill = (I_star(0, RealComponents.ALL),) * a1 + (I_star(0, RealComponents.ALL_BUT_TWO),) * a2
    return SurfaceConfig(special + fill, (I_star(0),) * n_pairs_extra)


def case_6O_config(n: int, conjugate_pairs: int = 0,
                   i4_star: RealComponents | str = RealComponents.ALL) -> SurfaceConfig:
    """Bad fibres of the N = 8n + 6 family over R.

    Two I_2 fibres (one split, one not), two I_4* fibres, and ``4n + 2``
    I_0* points of which ``2 * conjugate_pairs`` form conjugate pairs.
    """
    total = 4 * n + 2
    if not 0 <= 2 * conjugate_pairs <= total:
        raise ValueError(f"{conjugate_pairs} pairs do not fit in {total} I_0* points")
    return builtin_case("3_O", a1=total - 2 * conjugate_pairs,
                        n_pairs_extra=conjugate_pairs, i4_star=i4_star)
