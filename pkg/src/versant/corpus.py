"""Verse-aligned corpus parsing and structural alignment checks.

Input is either the canonical verse-line format (one verse per line,
``<chapter>:<verse><TAB or single space><text>``, blank lines and ``#``
comments skipped) or a two-column CSV with header ``ref,text`` where ref is
``<chapter>:<verse>``.
"""

from __future__ import annotations

import csv
import io
import re
from dataclasses import dataclass, field

from .errors import DomainError, EncodingError, NotFoundError, ParseError, StructureError

_VERSE_LINE = re.compile(r"^(\d+):(\d+)[\t ](.*)$")
_REF = re.compile(r"^(\d+):(\d+)$")


@dataclass(frozen=True, order=True)
class VerseRef:
    """Chapter/verse address. Ordered lexicographically by (chapter, verse)."""

    chapter: int
    verse: int

    def __post_init__(self):
        if self.chapter < 1 or self.verse < 1:
            raise ValueError(f"chapter and verse must be >= 1, got {self}")

    def __str__(self) -> str:
        return f"{self.chapter}:{self.verse}"


@dataclass(frozen=True)
class Verse:
    ref: VerseRef
    raw_text: str

    def __post_init__(self):
        if not self.raw_text.strip():
            raise ValueError(f"verse {self.ref} has no text")


@dataclass(frozen=True)
class Translation:
    """One version of the text, verses in strictly increasing ref order."""

    id: str
    verses: tuple[Verse, ...]

    def __post_init__(self):
        refs = [v.ref for v in self.verses]
        for prev, cur in zip(refs, refs[1:]):
            if cur <= prev:
                raise ValueError(f"verse refs not strictly increasing at {cur}")

    def refs(self) -> set[VerseRef]:
        return {v.ref for v in self.verses}

    def chapters(self) -> list[int]:
        """Chapter numbers present, in corpus order."""
        seen: list[int] = []
        for v in self.verses:
            if v.ref.chapter not in seen:
                seen.append(v.ref.chapter)
        return seen

    def chapter_verses(self, chapter: int) -> list[Verse]:
        return [v for v in self.verses if v.ref.chapter == chapter]


@dataclass(frozen=True)
class ParallelCorpus:
    translations: tuple[Translation, ...]

    def __post_init__(self):
        if not self.translations:
            raise ValueError("corpus must contain at least one translation")
        ids = [t.id for t in self.translations]
        if len(set(ids)) != len(ids):
            raise ValueError(f"duplicate translation ids: {ids}")

    def __getitem__(self, translation_id: str) -> Translation:
        for t in self.translations:
            if t.id == translation_id:
                return t
        raise NotFoundError(f"no translation {translation_id!r} in corpus")


@dataclass(frozen=True)
class AlignmentReport:
    aligned: bool
    # (translation_id, ref, kind) with kind "missing" or "extra",
    # relative to the first translation in the corpus.
    mismatches: tuple[tuple[str, VerseRef, str], ...] = field(default=())

    def __post_init__(self):
        if self.aligned != (len(self.mismatches) == 0):
            raise ValueError("aligned flag inconsistent with mismatch list")


def _decode(data: bytes | str) -> str:
    if isinstance(data, str):
        return data
    try:
        # utf-8-sig so a leading BOM, which some editors insert, is dropped
        return data.decode("utf-8-sig")
    except UnicodeDecodeError as exc:
        raise EncodingError(f"input is not valid UTF-8: {exc}") from exc


def _parse_verse_lines(text: str, id: str) -> Translation:
    verses: list[Verse] = []
    seen: set[VerseRef] = set()
    last: VerseRef | None = None
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        m = _VERSE_LINE.match(line)
        if not m:
            raise ParseError(f"expected '<chapter>:<verse> <text>', got {line!r}", lineno)
        ref = VerseRef(int(m.group(1)), int(m.group(2)))
        body = m.group(3)
        if not body.strip():
            raise ParseError(f"verse {ref} has no text", lineno)
        if ref in seen:
            raise StructureError(f"duplicate verse ref {ref} at line {lineno}")
        if last is not None and ref <= last:
            raise StructureError(f"verse ref {ref} out of order at line {lineno} (after {last})")
        seen.add(ref)
        last = ref
        verses.append(Verse(ref, body))
    return Translation(id, tuple(verses))


def _parse_csv(text: str, id: str) -> Translation:
    verses: list[Verse] = []
    seen: set[VerseRef] = set()
    last: VerseRef | None = None
    reader = csv.reader(io.StringIO(text))
    for recno, row in enumerate(reader, 1):
        if recno == 1:
            continue  # header, validated by the caller
        if not row or (len(row) == 1 and not row[0].strip()):
            continue
        if len(row) != 2:
            raise ParseError(f"expected 2 columns, got {len(row)}", recno)
        m = _REF.match(row[0].strip())
        if not m:
            raise ParseError(f"bad ref {row[0]!r}", recno)
        ref = VerseRef(int(m.group(1)), int(m.group(2)))
        if not row[1].strip():
            raise ParseError(f"verse {ref} has no text", recno)
        if ref in seen:
            raise StructureError(f"duplicate verse ref {ref} at record {recno}")
        if last is not None and ref <= last:
            raise StructureError(f"verse ref {ref} out of order at record {recno} (after {last})")
        seen.add(ref)
        last = ref
        verses.append(Verse(ref, row[1]))
    return Translation(id, tuple(verses))


def parse_translation(data: bytes | str, id: str) -> Translation:
    """Parse one translation from verse-line text or ref,text CSV.

    The format is chosen by the first non-blank, non-comment line: a literal
    ``ref,text`` header selects CSV, anything else the verse-line format.
    Raw verse text is preserved exactly as it appears after the ref field.
    """
    text = _decode(data)
    for line in text.splitlines():
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        if line.strip().lower() == "ref,text":
            return _parse_csv(text, id)
        break
    return _parse_verse_lines(text, id)


def format_verse_lines(translation: Translation) -> str:
    """Serialize back to the canonical verse-line format (tab separator)."""
    return "".join(f"{v.ref}\t{v.raw_text}\n" for v in translation.verses)


def verify_alignment(corpus: ParallelCorpus) -> AlignmentReport:
    """Check that every translation covers exactly the same verse refs.

    Mismatches are reported relative to the first translation: a ref the
    first translation has but ``t`` lacks is (t.id, ref, "missing"); a ref
    ``t`` has beyond the first is (t.id, ref, "extra").
    """
    first = corpus.translations[0]
    base = first.refs()
    mismatches: list[tuple[str, VerseRef, str]] = []
    for t in corpus.translations[1:]:
        refs = t.refs()
        for ref in sorted(base - refs):
            mismatches.append((t.id, ref, "missing"))
        for ref in sorted(refs - base):
            mismatches.append((t.id, ref, "extra"))
    return AlignmentReport(aligned=not mismatches, mismatches=tuple(mismatches))


def count_verse_units(verses: list[Verse], mode: str) -> int:
    """Sum whitespace-delimited tokens or characters over a verse list."""
    if mode == "tokens":
        return sum(len(v.raw_text.split()) for v in verses)
    if mode == "characters":
        return sum(len(v.raw_text) for v in verses)
    raise DomainError(f"mode must be 'tokens' or 'characters', got {mode!r}")


def count_units(translation: Translation, chapter: int, mode: str) -> int:
    """Token or character count for one chapter of a translation.

    Characters are counted over the raw verse text, which never contains
    line terminators. Raises NotFoundError for a chapter the translation
    does not have.
    """
    if chapter not in translation.chapters():
        raise NotFoundError(f"translation {translation.id!r} has no chapter {chapter}")
    return count_verse_units(translation.chapter_verses(chapter), mode)
