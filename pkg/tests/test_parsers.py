"""Tests for the description language, the JSON form and diagnostics."""

import json
import random

import pytest

from lefschetz_audit.errors import InvalidCurve, ParseError
from lefschetz_audit.fibration import RESERVED_NAMES, Factorization, GroundTruthFlags
from lefschetz_audit.parsers import (
    DslParser,
    JsonParser,
    ParserFactory,
    SourceDocument,
    parse,
    parse_text,
    serialize,
)
from lefschetz_audit.schema import FormatDetector
from lefschetz_audit.surface import Curve, SymplecticMatrix, transvection

from conftest import random_primitive


def _load(path) -> Factorization:
    return parse(SourceDocument.from_bytes(path.read_bytes(), str(path)))


def _parse_error(path) -> ParseError:
    with pytest.raises(ParseError) as info:
        _load(path)
    return info.value


def test_golden_dsl_round_trip(data_dir, e1):
    path = data_dir / "golden" / "e1.lf"
    f = _load(path)
    assert f.word == e1.word
    assert f.curves == e1.curves
    assert f.flags.known_manifold == "CP2#9-CP2"
    assert serialize(f, "dsl") == path.read_text(encoding="utf-8")


def test_golden_json_round_trip(data_dir):
    path = data_dir / "golden" / "e1.json"
    f = _load(path)
    assert serialize(f, "json") == path.read_text(encoding="utf-8")
    assert f == _load(data_dir / "golden" / "e1.lf")


def test_comments_and_defaults():
    f = parse_text(
        "# header comment\n"
        'fibration "x" {  # trailing\n'
        "  fiber_genus 1\n"
        "  curve a nonsep (1,0)\n"
        "  word a a\n"
        "}\n"
    )
    assert f.base_genus == 0
    assert f.flags == GroundTruthFlags()
    assert f.word == ("a", "a")


def test_handles_block_round_trip():
    t_a = transvection(Curve.nonseparating((1, 0)), 1)
    f = Factorization(
        "over_torus", 1, 1,
        (("a", Curve.nonseparating((1, 0))),),
        ("a", "a"),
        handle_monodromies=(t_a, SymplecticMatrix.identity(1)),
    )
    text = serialize(f, "dsl")
    assert "  handles {\n    matrix (1,-1) (0,1)\n    matrix (1,0) (0,1)\n  }" in text
    assert parse_text(text) == f
    assert parse_text(serialize(f, "json"), fmt="json") == f


@pytest.mark.parametrize("name, line, column, message", [
    ("syntax_error.lf", 4, None, "unexpected"),
    ("undeclared_curve.lf", 5, 10, "undeclared curve 'c'"),
    ("non_primitive.lf", 4, 9, "not primitive"),
    ("wrong_arity.lf", 4, 9, "class has 2 coordinates, expected 4"),
    ("side_genus.lf", 4, 9, "side genus 2 outside 1..1"),
    ("duplicate_curve.lf", 5, 9, "duplicate curve name 'a'"),
    ("missing_genus.lf", 1, 11, "missing fiber_genus"),
    ("empty_word.lf", 5, 3, "at least one twist"),
    ("bad_json.json", 1, None, "invalid JSON"),
    ("unknown_flag.lf", 6, 3, "unknown flag(s): colour"),
    ("wrong_handles.lf", 7, 13, "expected 2 handle matrices, got 1"),
    ("invalid_utf8.lf", 2, 16, "invalid UTF-8 byte 0xff"),
])
def test_malformed_documents(data_dir, name, line, column, message):
    path = data_dir / "malformed" / name
    error = _parse_error(path)
    first = error.diagnostics[0]
    assert first.line == line
    if column is not None:
        assert first.column == column
    assert message.lower() in first.message.lower()
    rendered = first.render(error.source)
    assert rendered.startswith(f"{path}:{line}:")
    assert ": error: " in rendered


def test_every_problem_is_reported():
    text = (
        'fibration "many" {\n'
        "  fiber_genus 1\n"
        "  curve a nonsep (2,0)\n"
        "  curve a nonsep (1,0)\n"
        "  word a q r\n"
        "}\n"
    )
    with pytest.raises(ParseError) as info:
        parse_text(text)
    messages = [d.message for d in info.value.diagnostics]
    assert len(messages) == 4
    assert [d.line for d in info.value.diagnostics] == sorted(d.line for d in info.value.diagnostics)


def test_byte_noise_never_escapes_as_other_errors():
    rng = random.Random(3)
    seed = (b'fibration "x" {\n  fiber_genus 1\n  curve a nonsep (1,0)\n'
            b'  word a\n  flags { kodaira_dimension = "0" }\n}\n')
    for _ in range(300):
        data = bytearray(seed)
        for _ in range(rng.randint(1, 6)):
            op = rng.random()
            pos = rng.randrange(len(data))
            if op < 0.4:
                data[pos] = rng.randrange(256)
            elif op < 0.7:
                del data[pos]
            else:
                data.insert(pos, rng.randrange(256))
        try:
            parse(SourceDocument.from_bytes(bytes(data), "noise.lf"))
        except ParseError as e:
            assert e.diagnostics
            assert all(d.line >= 1 and d.column >= 1 for d in e.diagnostics)


def test_oversized_inputs_are_diagnosed():
    huge = "9" * 5000
    with pytest.raises(ParseError, match="integer literal too long|fiber_genus above"):
        parse_text(f'fibration "x" {{\n  fiber_genus {huge}\n  curve a nonsep (1,0)\n  word a\n}}\n')
    with pytest.raises(ParseError, match="fiber_genus above"):
        parse_text('fibration "x" {\n  fiber_genus 100000\n  word a\n}\n')
    with pytest.raises(ParseError):
        parse_text("[" * 100000, fmt="json")


def test_json_type_errors():
    doc = {"name": "x", "fiber_genus": "one", "base_genus": 0, "curves": [], "word": ["a"]}
    with pytest.raises(ParseError, match="must be an integer"):
        parse_text(json.dumps(doc), fmt="json")
    with pytest.raises(ParseError, match="must be an object"):
        parse_text("[1, 2]", fmt="json")


def test_format_detection():
    detector = FormatDetector()
    assert detector.detect_format("{}", "a.lf") == "dsl"
    assert detector.detect_format("fibration", "a.json") == "json"
    assert detector.detect_format("  \n{\"name\": 1}") == "json"
    assert detector.detect_format("fibration \"x\" {}") == "dsl"
    assert isinstance(ParserFactory().create_parser("json"), JsonParser)
    assert isinstance(ParserFactory().create_parser("dsl"), DslParser)
    with pytest.raises(ValueError):
        ParserFactory().create_parser("yaml")


def _curve_name(rng: random.Random, k: int) -> str:
    # close to keywords without being one
    return rng.choice(["c", "wordy", "sep_", "matrix", "Curve", "T_a", "_", "flagsX"]) + str(k)


def _random_factorization(rng: random.Random, index: int) -> Factorization:
    g = rng.randint(1, 3)
    curves = []
    for k in range(rng.randint(1, 4)):
        if g >= 2 and rng.random() < 0.3:
            curves.append((_curve_name(rng, k), Curve.separating(rng.randint(1, g - 1))))
        else:
            curves.append((_curve_name(rng, k), random_primitive(rng, g)))
    word = tuple(rng.choice(curves)[0] for _ in range(rng.randint(1, 10)))
    flags = rng.choice([
        GroundTruthFlags(),
        GroundTruthFlags(rational_or_ruled="false", kodaira_dimension=rng.choice(["0", "1", "2"])),
        GroundTruthFlags(rational_or_ruled="true", ruled_base_genus=rng.randint(0, 3),
                         blowup_of_sphere_bundle="true", known_manifold='S2xT2 "blown up" ü'),
    ])
    name = rng.choice([f"f{index}", f"weird \\ name {index}", f"ünï {index}"])
    return Factorization(name, g, 0, tuple(curves), word, flags=flags)


def test_random_round_trips():
    rng = random.Random(500)
    for index in range(500):
        f = _random_factorization(rng, index)
        dsl = serialize(f, "dsl")
        assert parse_text(dsl) == f
        assert serialize(parse_text(dsl), "dsl") == dsl
        assert parse_text(serialize(f, "json"), fmt="json") == f


@pytest.mark.parametrize("bad", sorted(RESERVED_NAMES) + ["x y", "1a", "", "a-b", "é"])
def test_curve_names_must_be_writable(bad):
    with pytest.raises(InvalidCurve):
        Factorization("f", 1, 0, ((bad, Curve.nonseparating((1, 0))),), (bad,))


def test_reserved_curve_name_in_json_is_positioned():
    text = "\n".join([
        "{",
        '  "name": "kw",',
        '  "fiber_genus": 1,',
        '  "curves": [{"name": "word", "kind": "nonsep", "class": [1, 0]}],',
        '  "word": ["word"]',
        "}",
    ])
    with pytest.raises(ParseError) as info:
        parse_text(text, "kw.json", fmt="json")
    assert len(info.value.diagnostics) == 1
    d = info.value.diagnostics[0]
    assert (d.line, d.column) == (4, 23)
    assert "reserved word" in d.message


def test_json_names_survive_the_dsl():
    f = parse_text(json.dumps({
        "name": "n", "fiber_genus": 1,
        "curves": [{"name": "word_1", "kind": "nonsep", "class": [1, 0]}],
        "word": ["word_1", "word_1"],
    }), fmt="json")
    assert parse_text(serialize(f, "dsl")) == f


RULED_FLAGS = (
    "  flags {\n"
    "    rational_or_ruled = true,\n"
    "    ruling_base_genus = 1\n"
    "  }\n"
)


def test_ruling_base_genus_flag():
    text = (
        'fibration "ruled" {\n'
        "  fiber_genus 1\n"
        "  curve a nonsep (1,0)\n"
        "  word a\n"
        f"{RULED_FLAGS}"
        "}\n"
    )
    f = parse_text(text)
    assert f.flags.rational_or_ruled.value == "true"
    assert f.flags.ruled_base_genus == 1
    assert RULED_FLAGS in serialize(f, "dsl")
    assert json.loads(serialize(f, "json"))["flags"] == {"rational_or_ruled": "true", "ruling_base_genus": 1}
    assert parse_text(serialize(f, "json"), fmt="json") == f


def test_ruling_base_genus_given_twice():
    text = (
        'fibration "ruled" {\n'
        "  fiber_genus 1\n"
        "  curve a nonsep (1,0)\n"
        "  word a\n"
        "  flags { rational_or_ruled = true, ruling_base_genus = 1, ruled_base_genus = 1 }\n"
        "}\n"
    )
    with pytest.raises(ParseError) as info:
        parse_text(text)
    assert "given twice" in info.value.diagnostics[0].message
