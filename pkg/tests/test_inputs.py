import pytest

from branecharge.errors import DimensionMismatch, ParseError, ShapeMismatch
from branecharge.inputs import parse_document, parse_json, parse_matrix


def test_json_basic():
    doc = parse_json('{"dim": 2, "vertices": [[1, 0], [0, 1], [-1, -1]]}')
    assert doc.format == "json" and doc.dim == 2
    assert doc.vertices == ((1, 0), (0, 1), (-1, -1))
    assert doc.divisor is None


def test_json_divisor():
    doc = parse_json('{"dim": 1, "vertices": [[-1], [1]], "divisor": [2, -1]}')
    assert doc.divisor == (2, -1)


@pytest.mark.parametrize("text", [
    '{"vertices": [[1, 0]]}',
    '{"dim": 2}',
    '{"dim": 2, "vertices": [[1, 0], [0, 1.5], [0, 0]]}',
    '[1, 2]',
    '{"dim": 2, "vertices": [[1, 0],',
    '{"dim": 2, "vertices": [[1, 0], [0, 1]]}',
    '{"dim": true, "vertices": []}',
])
def test_json_parse_errors(text):
    with pytest.raises(ParseError):
        parse_json(text)


def test_json_ragged_rows():
    with pytest.raises(DimensionMismatch):
        parse_json('{"dim": 2, "vertices": [[1, 0], [0, 1, 0], [-1, -1]]}')


def test_matrix_columns():
    doc = parse_matrix("2 3\n1 0 -1\n0 1 -1\n")
    assert doc.dim == 2
    assert doc.vertices == ((1, 0), (0, 1), (-1, -1))


def test_matrix_header_comment_and_p4():
    doc = parse_matrix("4 5  the simplex\n1 0 0 0 -1\n0 1 0 0 -1\n"
                       "0 0 1 0 -1\n0 0 0 1 -1\n")
    assert doc.dim == 4 and len(doc.vertices) == 5
    assert doc.vertices[-1] == (-1, -1, -1, -1)


def test_matrix_rows_when_tall():
    doc = parse_matrix("3 2\n1 0\n0 1\n-1 -1\n")
    assert doc.dim == 2 and doc.vertices == ((1, 0), (0, 1), (-1, -1))


@pytest.mark.parametrize("text", ["2 3\n1 0 -1\n", "2 3\n1 0 -1\n0 1\n"])
def test_matrix_shape_mismatch(text):
    with pytest.raises(ShapeMismatch):
        parse_matrix(text)


@pytest.mark.parametrize("text", ["", "x y\n", "2 3\n1 0 a\n0 1 -1\n", "0 3\n"])
def test_matrix_parse_errors(text):
    with pytest.raises(ParseError):
        parse_matrix(text)


def test_autodetect():
    assert parse_document('  {"dim": 1, "vertices": [[-1], [1]]}').format == "json"
    assert parse_document("1 2\n-1 1\n").format == "matrix"
    with pytest.raises(ParseError):
        parse_document("1 2\n-1 1\n", "yaml")
