"""Listening-test analytics: MOS with confidence intervals, error-category
rates, Likert suitability summaries, and inter-rater agreement ICC(2,k)."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy.stats import f as f_dist

VOICE_TYPES = ("Kõnekorpus", "DeepVoice3", "DeepVoice3-vana", "HTS", "Google")
DOMAINS = ("uudised", "ilukirjandus")
TEXT_KINDS = ("uudis", "ilukirjandus")

_VALID_SCORES = frozenset(x / 2 for x in range(2, 11))  # 1.0, 1.5, ..., 5.0


class ErrorCategory(Enum):
    """The nine error categories annotators could flag per sentence."""

    WORD_SKIPPING = "word_skipping"
    REPETITION_STRETCHING = "repetition_stretching"
    INCOMPLETE_SENTENCE = "incomplete_sentence"
    VOLUME_PROBLEMS = "volume_problems"
    ABRUPT_START_END = "abrupt_start_end"
    UNNATURAL_PHRASING = "unnatural_phrasing"
    NATIVE_MISPRONUNCIATION = "native_mispronunciation"
    FOREIGN_MISPRONUNCIATION = "foreign_mispronunciation"
    SYMBOL_NUMBER_ERRORS = "symbol_number_errors"


@dataclass(frozen=True)
class RatingRecord:
    rater: str
    sentence: str
    voice: str
    voice_type: str
    domain: str
    score: float

    def __post_init__(self):
        if self.score not in _VALID_SCORES:
            raise ValueError(f"score must be in 1..5 at 0.5 steps, got {self.score}")
        if self.voice_type not in VOICE_TYPES:
            raise ValueError(f"unknown voice type {self.voice_type!r}")
        if self.domain not in DOMAINS:
            raise ValueError(f"unknown domain {self.domain!r}")


@dataclass(frozen=True)
class AnnotationRecord:
    annotator: str
    sentence: str
    voice: str
    flags: frozenset[ErrorCategory] = frozenset()

    def __post_init__(self):
        for flag in self.flags:
            if not isinstance(flag, ErrorCategory):
                raise ValueError(f"unknown error category {flag!r}")


@dataclass(frozen=True)
class LikertRecord:
    rater: str
    voice: str
    text_kind: str
    score: int

    def __post_init__(self):
        if not isinstance(self.score, int) or not 1 <= self.score <= 7:
            raise ValueError(f"Likert score must be an integer in 1..7, got {self.score}")
        if self.text_kind not in TEXT_KINDS:
            raise ValueError(f"unknown text kind {self.text_kind!r}")


@dataclass(frozen=True)
class MosResult:
    voice: str
    n: int
    mos: float
    ci_half_width: float
    domain: str | None = None


@dataclass(frozen=True)
class LikertSummary:
    voice: str
    text_kind: str
    n: int
    mean: float
    sd: float


@dataclass(frozen=True)
class IccResult:
    icc: float
    f_value: float
    df1: int
    df2: int
    p_value: float


def mos(records, by=("voice",), ci_multiplier: float = 1.96) -> list[MosResult]:
    """Mean opinion score per group with a normal-approximation 95% CI.

    ``by`` selects the grouping key ("voice" alone or "voice" and "domain").
    The half-width is ci_multiplier * s / sqrt(n) with the sample standard
    deviation; a single-rating group gets width 0 and a warning.
    """
    records = list(records)
    if not records:
        raise ValueError("no rating records")
    for key in by:
        if key not in ("voice", "domain", "voice_type"):
            raise ValueError(f"cannot group by {key!r}")
    groups: dict[tuple, list[float]] = {}
    for record in records:
        key = tuple(getattr(record, field) for field in by)
        groups.setdefault(key, []).append(record.score)
    results = []
    for key, scores in groups.items():
        n = len(scores)
        mean = sum(scores) / n
        if n == 1:
            warnings.warn(f"group {key!r} has a single rating; CI degenerate", stacklevel=2)
            half = 0.0
        else:
            variance = sum((s - mean) ** 2 for s in scores) / (n - 1)
            half = ci_multiplier * math.sqrt(variance) / math.sqrt(n)
        fields = dict(zip(by, key))
        results.append(
            MosResult(
                voice=fields.get("voice", ""),
                n=n,
                mos=mean,
                ci_half_width=half,
                domain=fields.get("domain"),
            )
        )
    results.sort(key=lambda r: (-r.mos, r.voice, r.domain or ""))
    return results


def error_rates(annotations, policy: str = "any") -> dict[str, dict[ErrorCategory, float]]:
    """Percentage of sentences flagged per voice and category.

    policy "any": a sentence counts if any of its annotators flagged it;
    "majority": only if strictly more than half did. Cells are rounded to
    one decimal place.
    """
    if policy not in ("any", "majority"):
        raise ValueError(f"policy must be 'any' or 'majority', got {policy!r}")
    annotations = list(annotations)
    if not annotations:
        raise ValueError("no annotation records")

    per_voice: dict[str, dict[str, list[AnnotationRecord]]] = {}
    for record in annotations:
        per_voice.setdefault(record.voice, {}).setdefault(record.sentence, []).append(record)

    thin = sum(
        1
        for sentences in per_voice.values()
        for records in sentences.values()
        if len({r.annotator for r in records}) < 2
    )
    if thin:
        warnings.warn(
            f"{thin} sentence(s) have fewer than two annotators", stacklevel=2
        )

    table: dict[str, dict[ErrorCategory, float]] = {}
    for voice, sentences in per_voice.items():
        counts = {category: 0 for category in ErrorCategory}
        for records in sentences.values():
            annotators = {r.annotator for r in records}
            for category in ErrorCategory:
                flagged_by = {r.annotator for r in records if category in r.flags}
                if policy == "any":
                    hit = bool(flagged_by)
                else:
                    hit = len(flagged_by) > len(annotators) / 2
                if hit:
                    counts[category] += 1
        total = len(sentences)
        table[voice] = {
            category: round(100.0 * counts[category] / total, 1) for category in ErrorCategory
        }
    return table


def likert_summary(records) -> list[LikertSummary]:
    """Mean and sample standard deviation per voice and text kind."""
    records = list(records)
    if not records:
        raise ValueError("no Likert records")
    groups: dict[tuple[str, str], list[int]] = {}
    for record in records:
        groups.setdefault((record.voice, record.text_kind), []).append(record.score)
    results = []
    for (voice, text_kind), scores in groups.items():
        n = len(scores)
        if n < 2:
            raise ValueError(f"group ({voice!r}, {text_kind!r}) needs at least 2 ratings")
        mean = sum(scores) / n
        sd = math.sqrt(sum((s - mean) ** 2 for s in scores) / (n - 1))
        results.append(LikertSummary(voice, text_kind, n, round(mean, 2), round(sd, 2)))
    results.sort(key=lambda r: (-r.mean, r.voice, r.text_kind))
    return results


def icc2k(matrix) -> IccResult:
    """ICC(2,k): two-way random effects, absolute agreement, average measures.

    ``matrix`` is a complete targets x raters grid. Mean squares come from
    the two-way ANOVA decomposition; the F test is MSR/MSE on
    (n-1, (n-1)(k-1)) degrees of freedom.
    """
    data = np.asarray(matrix, dtype=float)
    if data.ndim != 2:
        raise ValueError("expected a 2-dimensional ratings matrix")
    n, k = data.shape
    if n < 2 or k < 2:
        raise ValueError("need at least 2 targets and 2 raters")
    if not np.all(np.isfinite(data)):
        raise ValueError("incomplete ratings matrix (missing or non-finite values)")

    grand = data.mean()
    row_means = data.mean(axis=1)
    col_means = data.mean(axis=0)
    ssr = k * float(((row_means - grand) ** 2).sum())
    ssc = n * float(((col_means - grand) ** 2).sum())
    sst = float(((data - grand) ** 2).sum())
    sse = max(sst - ssr - ssc, 0.0)

    df1 = n - 1
    df2 = (n - 1) * (k - 1)
    msr = ssr / df1
    msc = ssc / (k - 1)
    mse = sse / df2

    denominator = msr + (msc - mse) / n
    if denominator == 0.0:
        raise ValueError("ratings matrix has no target variance; ICC undefined")
    icc = (msr - mse) / denominator
    f_value = math.inf if mse == 0.0 else msr / mse
    p_value = 0.0 if math.isinf(f_value) else float(f_dist.sf(f_value, df1, df2))
    return IccResult(icc=icc, f_value=f_value, df1=df1, df2=df2, p_value=p_value)
