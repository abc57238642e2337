"""Distance and closeness measures between two distributional profiles.

Every measure carries an orientation tag (distance: larger = farther apart;
closeness: larger = closer) and a symmetry tag.  Orientation is metadata
only: nothing here converts a distance into a closeness, and ranking code is
expected to consume the tag.

Divergence variants whose log ratio can blow up on a missing feature
(``kld``, ``kld_abs``, ``kld_unw_abs``, and the ``div`` compositional form)
are evaluated on epsilon-smoothed copies of both profiles: zero entries over
the union support are replaced by ``epsilon`` and each side is rescaled so
its total mass is unchanged.  Smoothing both sides keeps the symmetric
variants exactly symmetric and makes the averaged form agree with its
closed-form rewrite.  The skew and average-mixture divergences need no
smoothing by construction.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional

from .assoc import SoAKind
from .errors import (
    EmptyIntersectionWarning,
    IncompatibleProfilesError,
    UndefinedMeasureError,
)
from .profiles import DistributionalProfile


class Orientation(str, Enum):
    DISTANCE = "distance"
    CLOSENESS = "closeness"


class WeightScheme(str, Enum):
    NONE = "none"
    AVG = "avg"
    MAX = "max"


class PcmKind(str, Enum):
    DIF = "dif"
    DIV = "div"
    PDT_AVG = "pdt_avg"


class CrmKind(str, Enum):
    TYPE = "type"
    TOKEN = "token"
    MI = "mi"


class CrmPenalty(str, Enum):
    ADD = "add"
    DW = "dw"


@dataclass(frozen=True)
class MeasureConfig:
    log_base: float = 2.0
    epsilon: float = 1e-8
    alpha: float = 0.99
    gamma: float = 0.5
    beta: float = 0.5
    weight_scheme: WeightScheme = WeightScheme.NONE
    crm_kind: CrmKind = CrmKind.TOKEN
    crm_penalty: CrmPenalty = CrmPenalty.DW

    def __post_init__(self):
        object.__setattr__(self, "weight_scheme", WeightScheme(self.weight_scheme))
        object.__setattr__(self, "crm_kind", CrmKind(self.crm_kind))
        object.__setattr__(self, "crm_penalty", CrmPenalty(self.crm_penalty))
        if not 0.0 < self.alpha <= 1.0:
            raise ValueError("alpha must lie in (0, 1]")
        if not 0.0 <= self.gamma <= 1.0 or not 0.0 <= self.beta <= 1.0:
            raise ValueError("gamma and beta must lie in [0, 1]")
        if self.epsilon <= 0.0:
            raise ValueError("epsilon must be positive")


DEFAULT_CONFIG = MeasureConfig()


class MeasureId(str, Enum):
    COS = "cos"
    L1 = "l1"
    L2 = "l2"
    KLD = "kld"
    KLD_COM = "kld_com"
    KLD_ABS = "kld_abs"
    KLD_UNW_ABS = "kld_unw_abs"
    KLD_MAX = "kld_max"
    KLD_AVG = "kld_avg"
    ASD = "asd"
    JSD = "jsd"
    JSD_ABS = "jsd_abs"
    DICE_CP = "dice_cp"
    JACCARD_CP = "jaccard_cp"
    HINDLE = "hindle"
    HINDLE_REL = "hindle_rel"
    LIN = "lin"
    DIF = "dif"
    DIV = "div"
    PDT_AVG = "pdt_avg"
    PDT_AVG_WT = "pdt_avg_wt"
    CRM = "crm"


@dataclass(frozen=True)
class MeasureTraits:
    orientation: Orientation
    symmetric: bool
    soa: Optional[SoAKind]  # None: depends on configuration


_D = Orientation.DISTANCE
_C = Orientation.CLOSENESS

TRAITS: dict[MeasureId, MeasureTraits] = {
    MeasureId.COS: MeasureTraits(_C, True, SoAKind.CP),
    MeasureId.L1: MeasureTraits(_D, True, SoAKind.CP),
    MeasureId.L2: MeasureTraits(_D, True, SoAKind.CP),
    MeasureId.KLD: MeasureTraits(_D, False, SoAKind.CP),
    MeasureId.KLD_COM: MeasureTraits(_D, False, SoAKind.CP),
    MeasureId.KLD_ABS: MeasureTraits(_D, False, SoAKind.CP),
    MeasureId.KLD_UNW_ABS: MeasureTraits(_D, True, SoAKind.CP),
    MeasureId.KLD_MAX: MeasureTraits(_D, True, SoAKind.CP),
    MeasureId.KLD_AVG: MeasureTraits(_D, True, SoAKind.CP),
    MeasureId.ASD: MeasureTraits(_D, False, SoAKind.CP),
    MeasureId.JSD: MeasureTraits(_D, True, SoAKind.CP),
    MeasureId.JSD_ABS: MeasureTraits(_D, True, SoAKind.CP),
    MeasureId.DICE_CP: MeasureTraits(_C, True, SoAKind.CP),
    MeasureId.JACCARD_CP: MeasureTraits(_C, True, SoAKind.CP),
    MeasureId.HINDLE: MeasureTraits(_C, True, SoAKind.PMI),
    MeasureId.HINDLE_REL: MeasureTraits(_C, True, SoAKind.PMI),
    MeasureId.LIN: MeasureTraits(_C, True, SoAKind.PMI),
    MeasureId.DIF: MeasureTraits(_D, True, SoAKind.CP),
    MeasureId.DIV: MeasureTraits(_D, True, SoAKind.CP),
    MeasureId.PDT_AVG: MeasureTraits(_C, True, SoAKind.CP),
    MeasureId.PDT_AVG_WT: MeasureTraits(_C, True, SoAKind.CP),
    MeasureId.CRM: MeasureTraits(_C, False, None),
}


def orientation(measure: MeasureId) -> Orientation:
    return TRAITS[MeasureId(measure)].orientation


def is_symmetric(measure: MeasureId) -> bool:
    return TRAITS[MeasureId(measure)].symmetric


def required_soa(measure: MeasureId, config: MeasureConfig = DEFAULT_CONFIG) -> SoAKind:
    """The strength-of-association kind profiles must carry for this measure."""
    traits = TRAITS[MeasureId(measure)]
    if traits.soa is not None:
        return traits.soa
    return SoAKind.PMI if config.crm_kind is CrmKind.MI else SoAKind.CP


# ---------------------------------------------------------------------------
# shared helpers


def _check_pair(dp1: DistributionalProfile, dp2: DistributionalProfile,
                require: Optional[SoAKind] = None) -> None:
    if dp1.soa != dp2.soa:
        raise IncompatibleProfilesError(
            f"profiles carry different association kinds: {dp1.soa} vs {dp2.soa}"
        )
    if require is not None and dp1.soa is not SoAKind(require):
        raise IncompatibleProfilesError(
            f"measure needs {SoAKind(require).value} profiles, got {dp1.soa.value}"
        )
    if dp1.entries and dp2.entries:
        if dp1.relation_constrained != dp2.relation_constrained:
            raise IncompatibleProfilesError(
                "cannot compare a relation-free profile with a relation-constrained one"
            )


def _union_keys(e1: dict, e2: dict) -> list:
    return sorted(set(e1) | set(e2), key=_feature_sort_key)


def _feature_sort_key(feature):
    if isinstance(feature, tuple):
        return (1, feature[0], feature[1])
    return (0, feature, "")


def _log(x: float, base: float) -> float:
    return math.log(x) / math.log(base)


def _smoothed_pair(e1: dict, e2: dict, epsilon: float) -> tuple[list, list[float], list[float]]:
    """Union support with zeros replaced by epsilon on both sides.

    Each side is rescaled so the added epsilon mass does not change its total;
    a side with no zeros passes through untouched.
    """
    keys = _union_keys(e1, e2)
    raw1 = [e1.get(k, 0.0) for k in keys]
    raw2 = [e2.get(k, 0.0) for k in keys]

    def smooth(raw: list[float]) -> list[float]:
        total = sum(raw)
        zeros = sum(1 for v in raw if v <= 0.0)
        if total <= 0.0:
            raise UndefinedMeasureError("cannot smooth an empty profile")
        if zeros == 0:
            return list(raw)
        scale = total / (total + epsilon * zeros)
        return [(v if v > 0.0 else epsilon) * scale for v in raw]

    return keys, smooth(raw1), smooth(raw2)


# ---------------------------------------------------------------------------
# spatial measures


def cosine(dp1: DistributionalProfile, dp2: DistributionalProfile) -> float:
    """Cosine of the angle between two profiles; 0 (unrelated) to 1 (synonymous)."""
    _check_pair(dp1, dp2)
    if not dp1.entries or not dp2.entries:
        raise UndefinedMeasureError("cosine of an empty profile")
    keys = _union_keys(dp1.entries, dp2.entries)
    numerator = 0.0
    sq1 = 0.0
    sq2 = 0.0
    for k in keys:
        v1 = dp1.entries.get(k, 0.0)
        v2 = dp2.entries.get(k, 0.0)
        numerator += v1 * v2
        sq1 += v1 * v1
        sq2 += v2 * v2
    if sq1 == 0.0 or sq2 == 0.0:
        raise UndefinedMeasureError("cosine of a zero-norm profile")
    value = numerator / (math.sqrt(sq1) * math.sqrt(sq2))
    # the true value is within [-1, 1]; strip rounding overshoot
    return min(max(value, -1.0), 1.0)


def minkowski(dp1: DistributionalProfile, dp2: DistributionalProfile, p: int = 1) -> float:
    """City-block (p=1) or Euclidean (p=2) distance over the union support."""
    _check_pair(dp1, dp2, require=SoAKind.CP)
    if p not in (1, 2):
        raise ValueError("p must be 1 or 2")
    total = 0.0
    for k in _union_keys(dp1.entries, dp2.entries):
        diff = abs(dp1.entries.get(k, 0.0) - dp2.entries.get(k, 0.0))
        total += diff if p == 1 else diff * diff
    return total if p == 1 else math.sqrt(total)


# ---------------------------------------------------------------------------
# relative-entropy family


class DivergenceVariant(str, Enum):
    KLD = "kld"
    KLD_COM = "kld_com"
    KLD_ABS = "kld_abs"
    KLD_UNW_ABS = "kld_unw_abs"
    ASD = "asd"
    JSD = "jsd"
    JSD_ABS = "jsd_abs"


def divergence(
    dp1: DistributionalProfile,
    dp2: DistributionalProfile,
    variant: DivergenceVariant,
    config: MeasureConfig = DEFAULT_CONFIG,
) -> float:
    _check_pair(dp1, dp2, require=SoAKind.CP)
    variant = DivergenceVariant(variant)
    base = config.log_base
    e1 = dp1.entries
    e2 = dp2.entries

    if variant in (DivergenceVariant.KLD, DivergenceVariant.KLD_ABS,
                   DivergenceVariant.KLD_UNW_ABS):
        _, p, q = _smoothed_pair(e1, e2, config.epsilon)
        log_norm = math.log(base)
        total = 0.0
        for pv, qv in zip(p, q):
            # difference of logs keeps |ratio| exactly order-free
            ratio = (math.log(pv) - math.log(qv)) / log_norm
            if variant is DivergenceVariant.KLD:
                total += pv * ratio
            elif variant is DivergenceVariant.KLD_ABS:
                total += pv * abs(ratio)
            else:
                total += abs(ratio)
        return total

    if variant is DivergenceVariant.KLD_COM:
        shared = sorted(set(e1) & set(e2), key=_feature_sort_key)
        if not shared:
            warnings.warn(
                f"profiles {dp1.target!r} and {dp2.target!r} share no features; "
                "common-support divergence reported as 0",
                EmptyIntersectionWarning,
                stacklevel=2,
            )
            return 0.0
        return sum(e1[k] * _log(e1[k] / e2[k], base) for k in shared)

    if variant is DivergenceVariant.ASD:
        alpha = config.alpha
        total = 0.0
        for k in _union_keys(e1, e2):
            pv = e1.get(k, 0.0)
            if pv <= 0.0:
                continue
            mix = alpha * e2.get(k, 0.0) + (1.0 - alpha) * pv
            if mix <= 0.0:
                raise UndefinedMeasureError(
                    "skew divergence undefined: zero mixture with alpha = 1"
                )
            total += pv * _log(pv / mix, base)
        return total

    # jsd / jsd_abs
    use_abs = variant is DivergenceVariant.JSD_ABS
    total = 0.0
    for k in _union_keys(e1, e2):
        pv = e1.get(k, 0.0)
        qv = e2.get(k, 0.0)
        mid = 0.5 * (pv + qv)
        left = _log(pv / mid, base) if pv > 0.0 else 0.0
        right = _log(qv / mid, base) if qv > 0.0 else 0.0
        if use_abs:
            total += pv * abs(left) + qv * abs(right)
        else:
            total += pv * left + qv * right
    return total


# ---------------------------------------------------------------------------
# pointwise-mutual-information measures


def _hindle_contribution(i1: float, i2: float) -> float:
    if i1 > 0.0 and i2 > 0.0:
        return min(i1, i2)
    if i1 < 0.0 and i2 < 0.0:
        # of two negatives, keep the one smaller in absolute value
        return abs(max(i1, i2))
    return 0.0


def hindle(
    dp1: DistributionalProfile,
    dp2: DistributionalProfile,
    variant: str = "rel",
    syntactic_relations: tuple[str, ...] = ("obj^-1", "subj^-1"),
) -> float:
    """Sum of matched-sign association strengths over shared features.

    The ``syntactic`` variant restricts features to the given inverse
    dependency relations (a noun profiled by the verbs it is object or
    subject of); the ``rel`` variant uses every shared feature.
    """
    _check_pair(dp1, dp2, require=SoAKind.PMI)
    if variant not in ("syntactic", "rel"):
        raise ValueError("variant must be 'syntactic' or 'rel'")
    keys = sorted(set(dp1.entries) & set(dp2.entries), key=_feature_sort_key)
    if variant == "syntactic":
        if not (dp1.relation_constrained and dp2.relation_constrained):
            raise IncompatibleProfilesError(
                "syntactic variant needs relation-constrained profiles"
            )
        keys = [k for k in keys if isinstance(k, tuple) and k[0] in syntactic_relations]
    return sum(_hindle_contribution(dp1.entries[k], dp2.entries[k]) for k in keys)


def lin(dp1: DistributionalProfile, dp2: DistributionalProfile) -> float:
    """Shared positive association mass over total positive association mass."""
    _check_pair(dp1, dp2, require=SoAKind.PMI)
    t1 = {k: v for k, v in dp1.entries.items() if v > 0.0}
    t2 = {k: v for k, v in dp2.entries.items() if v > 0.0}
    if not t1 and not t2:
        raise UndefinedMeasureError("no positively associated features on either side")
    shared = sorted(set(t1) & set(t2), key=_feature_sort_key)
    if not shared:
        return 0.0
    numerator = sum(t1[k] + t2[k] for k in shared)
    denominator = sum(t1[k] for k in sorted(t1, key=_feature_sort_key)) + sum(
        t2[k] for k in sorted(t2, key=_feature_sort_key)
    )
    return numerator / denominator


# ---------------------------------------------------------------------------
# support-overlap measures


def overlap(dp1: DistributionalProfile, dp2: DistributionalProfile, kind: str) -> float:
    """Min-sum overlap coefficients over CP profiles: ``dice_cp`` or ``jaccard_cp``."""
    _check_pair(dp1, dp2, require=SoAKind.CP)
    e1, e2 = dp1.entries, dp2.entries
    min_sum = 0.0
    for k in _union_keys(e1, e2):
        min_sum += min(e1.get(k, 0.0), e2.get(k, 0.0))
    if kind == "dice_cp":
        denominator = sum(e1[k] for k in sorted(e1, key=_feature_sort_key)) + sum(
            e2[k] for k in sorted(e2, key=_feature_sort_key)
        )
        if denominator == 0.0:
            raise UndefinedMeasureError("dice overlap of empty profiles")
        return 2.0 * min_sum / denominator
    if kind == "jaccard_cp":
        shared = sorted(set(e1) & set(e2), key=_feature_sort_key)
        denominator = sum(max(e1[k], e2[k]) for k in shared)
        if denominator == 0.0:
            raise UndefinedMeasureError("jaccard overlap with empty intersection")
        return min_sum / denominator
    raise ValueError("kind must be 'dice_cp' or 'jaccard_cp'")


# ---------------------------------------------------------------------------
# primary compositional measures


def pcm(
    dp1: DistributionalProfile,
    dp2: DistributionalProfile,
    kind: PcmKind,
    weight_scheme: WeightScheme = WeightScheme.NONE,
    config: MeasureConfig = DEFAULT_CONFIG,
) -> float:
    """Per-feature difference, log-ratio, or scaled-product contributions.

    ``dif`` and ``div`` accumulate plain (optionally weighted) sums.  The
    unweighted product form averages its per-feature terms, which pins it to
    [0, 1] with 1 on identical profiles; its ``avg`` weighting is the plain
    weighted sum, whose terms telescope to product over half-sum.
    """
    _check_pair(dp1, dp2, require=SoAKind.CP)
    kind = PcmKind(kind)
    weight_scheme = WeightScheme(weight_scheme)
    e1, e2 = dp1.entries, dp2.entries
    keys = _union_keys(e1, e2)
    if not keys:
        raise UndefinedMeasureError("compositional measure of empty profiles")
    raw1 = [e1.get(k, 0.0) for k in keys]
    raw2 = [e2.get(k, 0.0) for k in keys]

    if kind is PcmKind.DIF:
        terms = [abs(a - b) for a, b in zip(raw1, raw2)]
    elif kind is PcmKind.DIV:
        _, p, q = _smoothed_pair(e1, e2, config.epsilon)
        log_norm = math.log(config.log_base)
        terms = [abs(math.log(a) - math.log(b)) / log_norm for a, b in zip(p, q)]
    else:
        terms = []
        for a, b in zip(raw1, raw2):
            if a + b <= 0.0:
                terms.append(0.0)
            else:
                half_sum = 0.5 * (a + b)
                # product over squared mean never exceeds 1; strip rounding overshoot
                terms.append(min((a * b) / (half_sum * half_sum), 1.0))

    if weight_scheme is WeightScheme.NONE:
        if kind is PcmKind.PDT_AVG:
            return sum(terms) / len(terms)
        return sum(terms)
    if weight_scheme is WeightScheme.AVG:
        weights = [0.5 * (a + b) for a, b in zip(raw1, raw2)]
    else:
        maxes = [max(a, b) for a, b in zip(raw1, raw2)]
        norm = sum(maxes)
        if norm <= 0.0:
            raise UndefinedMeasureError("max-weighting of empty profiles")
        weights = [m / norm for m in maxes]
    return sum(w * t for w, t in zip(weights, terms))


# ---------------------------------------------------------------------------
# co-occurrence retrieval


def crm_precision_recall(
    dp1: DistributionalProfile,
    dp2: DistributionalProfile,
    kind: CrmKind = CrmKind.TOKEN,
    penalty: CrmPenalty = CrmPenalty.DW,
) -> tuple[float, float]:
    """Substitutability precision and recall of dp1's co-occurrences against dp2's.

    ``type`` cores count shared support, ``token`` cores sum conditional
    probabilities, ``mi`` cores sum positive association strengths.  The
    difference-weighted penalty discounts mismatched strengths; for token
    cores the penalty cancels into a plain sum of minima, making precision
    and recall coincide.
    """
    kind = CrmKind(kind)
    penalty = CrmPenalty(penalty)
    if kind is CrmKind.MI:
        _check_pair(dp1, dp2, require=SoAKind.PMI)
        # negative associations are too unreliable to subtract evidence
        e1 = {k: v for k, v in dp1.entries.items() if v > 0.0}
        e2 = {k: v for k, v in dp2.entries.items() if v > 0.0}
    else:
        require = SoAKind.CP if (kind is CrmKind.TOKEN or penalty is CrmPenalty.DW) else None
        _check_pair(dp1, dp2, require=require)
        e1, e2 = dp1.entries, dp2.entries
    if not e1 or not e2:
        raise UndefinedMeasureError("substitutability of an empty co-occurrence set")
    shared = sorted(set(e1) & set(e2), key=_feature_sort_key)

    if kind is CrmKind.TYPE:
        if penalty is CrmPenalty.ADD:
            return len(shared) / len(e1), len(shared) / len(e2)
        p = sum(min(e1[k], e2[k]) / e1[k] for k in shared) / len(e1)
        r = sum(min(e1[k], e2[k]) / e2[k] for k in shared) / len(e2)
        return p, r

    if kind is CrmKind.TOKEN:
        if penalty is CrmPenalty.ADD:
            return sum(e1[k] for k in shared), sum(e2[k] for k in shared)
        matched = sum(min(e1[k], e2[k]) for k in shared)
        return matched, matched

    denom1 = sum(e1[k] for k in sorted(e1, key=_feature_sort_key))
    denom2 = sum(e2[k] for k in sorted(e2, key=_feature_sort_key))
    if denom1 <= 0.0 or denom2 <= 0.0:
        raise UndefinedMeasureError("no positive association mass on one side")
    if penalty is CrmPenalty.ADD:
        return (
            sum(e1[k] for k in shared) / denom1,
            sum(e2[k] for k in shared) / denom2,
        )
    matched = sum(min(e1[k], e2[k]) for k in shared)
    return matched / denom1, matched / denom2


def crm_combine(p: float, r: float, gamma: float, beta: float) -> float:
    """Weighted blend of the harmonic mean with a precision/recall mixture."""
    harmonic = 0.0 if p + r == 0.0 else (2.0 * p * r) / (p + r)
    return gamma * harmonic + (1.0 - gamma) * (beta * p + (1.0 - beta) * r)


def crm(
    dp1: DistributionalProfile,
    dp2: DistributionalProfile,
    config: MeasureConfig = DEFAULT_CONFIG,
) -> float:
    p, r = crm_precision_recall(dp1, dp2, config.crm_kind, config.crm_penalty)
    return crm_combine(p, r, config.gamma, config.beta)


# ---------------------------------------------------------------------------
# symmetrization


def symmetrize(
    measure: Callable[[DistributionalProfile, DistributionalProfile], float],
    mode: str,
    dp1: DistributionalProfile,
    dp2: DistributionalProfile,
) -> float:
    """Make an asymmetric measure order-free by taking the max or the mean."""
    forward = measure(dp1, dp2)
    backward = measure(dp2, dp1)
    if mode == "max":
        return max(forward, backward)
    if mode == "avg":
        return 0.5 * (forward + backward)
    raise ValueError("mode must be 'max' or 'avg'")


# ---------------------------------------------------------------------------
# dispatch


def score(
    measure: MeasureId,
    dp1: DistributionalProfile,
    dp2: DistributionalProfile,
    config: MeasureConfig = DEFAULT_CONFIG,
) -> float:
    """Evaluate any catalogued measure on a profile pair."""
    measure = MeasureId(measure)
    if measure is MeasureId.COS:
        return cosine(dp1, dp2)
    if measure in (MeasureId.L1, MeasureId.L2):
        return minkowski(dp1, dp2, 1 if measure is MeasureId.L1 else 2)
    if measure is MeasureId.DIF:
        return pcm(dp1, dp2, PcmKind.DIF, config.weight_scheme, config)
    if measure is MeasureId.DIV:
        return pcm(dp1, dp2, PcmKind.DIV, config.weight_scheme, config)
    if measure is MeasureId.PDT_AVG:
        return pcm(dp1, dp2, PcmKind.PDT_AVG, config.weight_scheme, config)
    if measure is MeasureId.PDT_AVG_WT:
        return pcm(dp1, dp2, PcmKind.PDT_AVG, WeightScheme.AVG, config)
    if measure is MeasureId.KLD_MAX:
        return symmetrize(
            lambda a, b: divergence(a, b, DivergenceVariant.KLD, config), "max", dp1, dp2
        )
    if measure is MeasureId.KLD_AVG:
        return symmetrize(
            lambda a, b: divergence(a, b, DivergenceVariant.KLD, config), "avg", dp1, dp2
        )
    if measure in (
        MeasureId.KLD,
        MeasureId.KLD_COM,
        MeasureId.KLD_ABS,
        MeasureId.KLD_UNW_ABS,
        MeasureId.ASD,
        MeasureId.JSD,
        MeasureId.JSD_ABS,
    ):
        return divergence(dp1, dp2, DivergenceVariant(measure.value), config)
    if measure in (MeasureId.DICE_CP, MeasureId.JACCARD_CP):
        return overlap(dp1, dp2, measure.value)
    if measure is MeasureId.HINDLE:
        return hindle(dp1, dp2, "syntactic")
    if measure is MeasureId.HINDLE_REL:
        return hindle(dp1, dp2, "rel")
    if measure is MeasureId.LIN:
        return lin(dp1, dp2)
    if measure is MeasureId.CRM:
        return crm(dp1, dp2, config)
    raise UndefinedMeasureError(f"unknown measure {measure!r}")
