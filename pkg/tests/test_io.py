import pytest

from cp2trisect.errors import FacetFileError
from cp2trisect.io import dumps_complex, loads_complex, read_complex, write_complex


def test_round_trip_with_derived_labels(tri, tmp_path):
    b14 = tri.pair(1, 4)
    path = tmp_path / "b14.txt"
    write_complex(b14, path, header="B14\n13 tetrahedra")
    text = path.read_text()
    assert text.startswith("# B14\n# 13 tetrahedra\n")
    assert read_complex(path) == b14


def test_round_trip_cp2(cp2):
    assert loads_complex(dumps_complex(cp2)) == cp2


def test_comments_and_blank_lines():
    c = loads_complex("# a triangle\n\n1 2 3\n   \n")
    assert len(c.facets) == 1


@pytest.mark.parametrize("text, line", [("1 2 3\n1 2 x\n", 2), ("1 1 2\n", 1), ("# only\n", 0)])
def test_parse_errors_name_the_line(text, line):
    with pytest.raises(FacetFileError) as err:
        loads_complex(text)
    assert err.value.line == line
