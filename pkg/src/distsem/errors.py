"""Exception and warning types shared across the toolkit."""


class DistSemError(Exception):
    """Base class for all toolkit errors."""


class CorpusDecodeError(DistSemError):
    """Input bytes are not valid in the declared encoding."""

    def __init__(self, source: str, byte_offset: int, encoding: str = "utf-8"):
        self.source = source
        self.byte_offset = byte_offset
        self.encoding = encoding
        super().__init__(
            f"{source}: invalid {encoding} byte sequence at offset {byte_offset}"
        )


class ParseError(DistSemError):
    """A data file line could not be parsed."""

    def __init__(self, source: str, line_number: int, message: str):
        self.source = source
        self.line_number = line_number
        super().__init__(f"{source}:{line_number}: {message}")


class ValidationError(DistSemError):
    """Parsed data violates a declared constraint."""


class ConfigurationError(DistSemError):
    """An operation was invoked with unusable configuration or resources."""


class UnknownRelationError(DistSemError):
    """A dependency triple uses a relation label outside the declared set."""

    def __init__(self, label: str, source: str = "", line_number: int = 0):
        self.label = label
        where = f"{source}:{line_number}: " if source else ""
        super().__init__(f"{where}unknown relation label {label!r}")


class MissingWordError(DistSemError):
    """A requested word has no row in the counts, matrix, or lexicon."""


class EmptyProfileError(DistSemError):
    """A distributional profile has no entries."""


class UndefinedAssociationError(DistSemError):
    """A strength-of-association statistic has a vanishing denominator."""

    def __init__(self, statistic: str, detail: str = ""):
        self.statistic = statistic
        extra = f" ({detail})" if detail else ""
        super().__init__(f"{statistic} is undefined for this table{extra}")


class UndefinedMeasureError(DistSemError):
    """A profile-distance measure is undefined for the given inputs."""


class IncompatibleProfilesError(DistSemError):
    """Profiles mix feature variants or strength-of-association kinds."""


class NoPathError(DistSemError):
    """No path connects the two concepts in the taxonomy."""


class MissingICError(DistSemError):
    """The information-content table has no entry for a concept."""


class CoverageError(DistSemError):
    """Too many benchmark pairs had to be skipped for missing words."""


class StalenessError(DistSemError):
    """A derived matrix does not match the corpus or configuration it is used with."""


class DistSemWarning(UserWarning):
    """Base class for flagged-but-tolerated conditions."""


class EmptyIntersectionWarning(DistSemWarning):
    """A common-support divergence was requested for profiles that share nothing."""


class ZeroCreditWarning(DistSemWarning):
    """A taxonomy concept received no corpus credit and was floored."""


class TieBreakWarning(DistSemWarning):
    """A word-choice problem was decided by an arbitrary tie-break."""
