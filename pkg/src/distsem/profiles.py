"""Distributional profiles: sparse feature-to-strength maps for one target.

A profile is relation-free (word features) or relation-constrained
((relation, word) features); the two never mix.  Conditional-probability
profiles are proper distributions over the target's observed features.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .assoc import SoAKind, contingency, strength
from .corpus import CooccurrenceCounts, Feature, parse_feature, render_feature
from .errors import (
    EmptyProfileError,
    IncompatibleProfilesError,
    MissingWordError,
    ParseError,
    UndefinedAssociationError,
    ValidationError,
)


@dataclass
class DistributionalProfile:
    target: str
    soa: SoAKind
    entries: dict = field(default_factory=dict)

    @property
    def relation_constrained(self) -> bool:
        return any(isinstance(k, tuple) for k in self.entries)

    def validate(self) -> None:
        kinds = {isinstance(k, tuple) for k in self.entries}
        if len(kinds) > 1:
            raise IncompatibleProfilesError(
                f"profile {self.target!r} mixes word and relation features"
            )
        if any(v == 0 for v in self.entries.values()):
            raise ValidationError(f"profile {self.target!r} stores explicit zeros")
        if self.soa is SoAKind.CP and self.entries:
            total = sum(self.entries[k] for k in sorted(self.entries, key=render_feature))
            if abs(total - 1.0) > 1e-9:
                raise ValidationError(
                    f"cp profile {self.target!r} sums to {total!r}, expected 1"
                )
            if any(v < 0 or v > 1 for v in self.entries.values()):
                raise ValidationError(f"cp profile {self.target!r} has values outside [0,1]")


def build_profile(
    counts: CooccurrenceCounts,
    target: str,
    kind: SoAKind,
    *,
    log_base: float = 2.0,
    min_feature_count: int = 1,
    undefined_value: float | None = None,
) -> DistributionalProfile:
    """Compute the strength of association of a target with each observed feature.

    Features whose word falls below ``min_feature_count`` occurrences are
    dropped before computing values, and CP values are renormalized over the
    kept features.  Statistics that are undefined for a cell propagate unless
    ``undefined_value`` supplies a substitute; zero-valued results are not
    stored.
    """
    kind = SoAKind(kind)
    if not counts.has_target(target):
        raise MissingWordError(f"no counts row for {target!r}")
    row = counts.row_items(target)
    if min_feature_count > 1:
        kept = []
        for feature, n in row:
            word = feature[1] if isinstance(feature, tuple) else feature
            freq = counts.unigram_count(word)
            if freq == 0:
                freq = counts.feature_total(feature)
            if freq >= min_feature_count:
                kept.append((feature, n))
        row = kept
    if not row:
        raise EmptyProfileError(f"no features left for {target!r}")

    entries: dict = {}
    if kind is SoAKind.CP:
        total = sum(n for _, n in row)
        if total <= 0:
            raise EmptyProfileError(f"zero row total for {target!r}")
        for feature, n in row:
            entries[feature] = n / total
    else:
        for feature, n in row:
            try:
                value = strength(contingency(counts, target, feature), kind, log_base)
            except UndefinedAssociationError:
                if undefined_value is None:
                    raise
                value = undefined_value
            if value != 0.0:
                entries[feature] = value
    if not entries:
        raise EmptyProfileError(f"profile for {target!r} is empty")
    return DistributionalProfile(target=target, soa=kind, entries=entries)


def save_profile(profile: DistributionalProfile, path, extra_header: list[str] = ()) -> None:
    """Write ``#target<TAB>soa`` then one ``feature<TAB>value`` line per entry.

    Entries are sorted by rendered feature and values use full round-trip
    precision, so rewriting a loaded profile is byte-stable.
    """
    with open(path, "w", encoding="utf-8") as out:
        for line in extra_header:
            out.write(line + "\n")
        out.write(f"#{profile.target}\t{profile.soa.value}\n")
        for feature in sorted(profile.entries, key=render_feature):
            out.write(f"{render_feature(feature)}\t{repr(profile.entries[feature])}\n")


def load_profile(path) -> DistributionalProfile:
    target = None
    kind = None
    entries: dict = {}
    with open(path, encoding="utf-8") as handle:
        for line_number, line in enumerate(handle, 1):
            line = line.rstrip("\n")
            if not line:
                continue
            if line.startswith("#manifest"):
                continue
            if line.startswith("#"):
                parts = line[1:].split("\t")
                if len(parts) != 2:
                    raise ParseError(str(path), line_number, "malformed profile header")
                target = parts[0]
                try:
                    kind = SoAKind(parts[1])
                except ValueError:
                    raise ParseError(
                        str(path), line_number, f"unknown soa kind {parts[1]!r}"
                    ) from None
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise ParseError(str(path), line_number, "expected feature<TAB>value")
            try:
                value = float(parts[1])
            except ValueError:
                raise ParseError(str(path), line_number, f"bad value {parts[1]!r}") from None
            if value != 0.0:
                entries[parse_feature(parts[0])] = value
    if target is None or kind is None:
        raise ParseError(str(path), 0, "missing profile header")
    if not entries:
        raise EmptyProfileError(f"{path}: profile file has no entries")
    profile = DistributionalProfile(target=target, soa=kind, entries=entries)
    profile.validate()
    return profile
