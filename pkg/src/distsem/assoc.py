"""Strength-of-association statistics over 2x2 contingency tables.

A table for (word w, feature c) collapses all other words and features into
single cells.  All statistics are invariant under scaling the four cells by a
positive constant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .corpus import CooccurrenceCounts, Feature
from .errors import MissingWordError, UndefinedAssociationError


class SoAKind(str, Enum):
    """The closed set of supported association statistics."""

    CP = "cp"
    PMI = "pmi"
    PHI = "phi"
    ODDS = "odds"
    DICE = "dice"
    YULE = "yule"
    COS = "cos"


@dataclass(frozen=True)
class ContingencyTable:
    """Cell counts: with/with, with/without, without/with, without/without."""

    n_wc: float
    n_w_nc: float
    n_nw_c: float
    n_nw_nc: float

    @property
    def word_total(self) -> float:
        return self.n_wc + self.n_w_nc

    @property
    def feature_total(self) -> float:
        return self.n_wc + self.n_nw_c

    @property
    def total(self) -> float:
        return self.n_wc + self.n_w_nc + self.n_nw_c + self.n_nw_nc


def contingency(
    counts: CooccurrenceCounts, target: str, feature: Feature
) -> ContingencyTable:
    """Collapse the counts matrix into a 2x2 table for one (target, feature) cell."""
    if not counts.has_target(target):
        raise MissingWordError(f"no counts row for {target!r}")
    n_wc = counts.pair_count(target, feature)
    n_w_nc = counts.target_total(target) - n_wc
    n_nw_c = counts.feature_total(feature) - n_wc
    n_nw_nc = counts.total_pairs - n_wc - n_w_nc - n_nw_c
    return ContingencyTable(float(n_wc), float(n_w_nc), float(n_nw_c), float(n_nw_nc))


def strength(table: ContingencyTable, kind: SoAKind, log_base: float = 2.0) -> float:
    """Evaluate one association statistic on a table.

    Raises :class:`UndefinedAssociationError` naming the statistic whenever a
    denominator vanishes; callers may substitute a floor of their choosing.
    """
    kind = SoAKind(kind)
    n_wc = table.n_wc
    row = table.word_total
    col = table.feature_total
    total = table.total
    if total <= 0:
        raise UndefinedAssociationError(kind.value, "empty table")

    if kind is SoAKind.CP:
        if row == 0:
            raise UndefinedAssociationError("cp", "zero word total")
        return n_wc / row

    if kind is SoAKind.PMI:
        if n_wc == 0 or row == 0 or col == 0:
            raise UndefinedAssociationError("pmi", "zero cell or marginal")
        return math.log((n_wc * total) / (row * col)) / math.log(log_base)

    if kind is SoAKind.PHI:
        row2 = table.n_nw_c + table.n_nw_nc
        col2 = table.n_w_nc + table.n_nw_nc
        denom = row * col * row2 * col2
        if denom == 0:
            raise UndefinedAssociationError("phi", "zero marginal")
        return (n_wc * table.n_nw_nc - table.n_w_nc * table.n_nw_c) / math.sqrt(denom)

    if kind is SoAKind.ODDS:
        denom = table.n_w_nc * table.n_nw_c
        if denom == 0:
            raise UndefinedAssociationError("odds", "zero off-diagonal product")
        return (n_wc * table.n_nw_nc) / denom

    if kind is SoAKind.YULE:
        concordant = n_wc * table.n_nw_nc
        discordant = table.n_w_nc * table.n_nw_c
        if concordant + discordant == 0:
            raise UndefinedAssociationError("yule", "both diagonal products zero")
        return (concordant - discordant) / (concordant + discordant)

    if kind is SoAKind.DICE:
        if row + col == 0:
            raise UndefinedAssociationError("dice", "zero marginals")
        return 2.0 * n_wc / (row + col)

    if kind is SoAKind.COS:
        if row == 0 or col == 0:
            raise UndefinedAssociationError("cos", "zero marginal")
        return n_wc / math.sqrt(row * col)

    raise UndefinedAssociationError(str(kind), "unknown statistic")
