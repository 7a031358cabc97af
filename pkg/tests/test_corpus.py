import pytest

from versant.corpus import (
    ParallelCorpus,
    Translation,
    Verse,
    VerseRef,
    count_units,
    count_verse_units,
    format_verse_lines,
    parse_translation,
    verify_alignment,
)
from versant.errors import NotFoundError, ParseError, StructureError


SAMPLE = """# translation: T1
5:1\tfirst verse here.
5:2\tsecond verse.

6:1 chapter six opens.
"""


def test_parse_verse_lines():
    t = parse_translation(SAMPLE, "T1")
    assert t.id == "T1"
    assert [str(v.ref) for v in t.verses] == ["5:1", "5:2", "6:1"]
    assert t.verses[0].raw_text == "first verse here."
    assert t.verses[2].raw_text == "chapter six opens."


def test_parse_csv():
    data = 'ref,text\n5:1,"alpha, beta"\n5:2,gamma\n'
    t = parse_translation(data, "C")
    assert t.verses[0].raw_text == "alpha, beta"
    assert len(t.verses) == 2


def test_parse_bytes_and_bom():
    t = parse_translation(b"\xef\xbb\xbf5:1\thello.\n", "B")
    assert t.verses[0].raw_text == "hello."


def test_parse_rejects_garbage_line():
    with pytest.raises(ParseError) as exc:
        parse_translation("5:1\tok.\nnot a verse\n", "X")
    assert exc.value.line == 2


def test_parse_rejects_out_of_order_refs():
    with pytest.raises(StructureError):
        parse_translation("5:2\tb.\n5:1\ta.\n", "X")
    with pytest.raises(StructureError):
        parse_translation("5:1\ta.\n5:1\ta again.\n", "X")


def test_verse_requires_text():
    with pytest.raises(ValueError):
        Verse(VerseRef(5, 1), "   ")


def test_count_modes():
    verses = [
        Verse(VerseRef(5, 1), "one two three"),
        Verse(VerseRef(5, 2), "four"),
    ]
    assert count_verse_units(verses, "tokens") == 4
    assert count_verse_units(verses, "characters") == len("one two three") + len("four")
    with pytest.raises(Exception):
        count_verse_units(verses, "bytes")


def test_count_units_unknown_chapter():
    t = parse_translation("5:1\thello.\n", "T")
    assert count_units(t, 5, "tokens") == 1
    with pytest.raises(NotFoundError):
        count_units(t, 9, "tokens")


def _translation(id, refs):
    verses = tuple(Verse(VerseRef(c, v), f"verse {c} {v}") for c, v in refs)
    return Translation(id=id, verses=verses)


def test_alignment_reports_missing_and_extra():
    a = _translation("A", [(5, 1), (5, 2)])
    b = _translation("B", [(5, 1), (5, 3)])
    report = verify_alignment(ParallelCorpus((a, b)))
    assert not report.aligned
    kinds = {(tid, str(ref), kind) for tid, ref, kind in report.mismatches}
    assert ("B", "5:2", "missing") in kinds
    assert ("B", "5:3", "extra") in kinds


def test_alignment_identical():
    a = _translation("A", [(5, 1), (6, 1)])
    b = _translation("B", [(5, 1), (6, 1)])
    assert verify_alignment(ParallelCorpus((a, b))).aligned


def test_format_round_trip():
    t = parse_translation(SAMPLE, "T1")
    again = parse_translation(format_verse_lines(t), "T1")
    assert again == t


def test_corpus_lookup():
    corpus = ParallelCorpus((_translation("A", [(5, 1)]),))
    assert corpus["A"].id == "A"
    with pytest.raises(NotFoundError):
        corpus["Z"]
