"""Group file parsing and round trips."""

import pytest

from etalab.catalog import catalog_ids, load_catalog_group
from etalab.constructions import dihedral, extraspecial_exp_p, quaternion
from etalab.errors import GroupFileError
from etalab.groupfile import format_group, format_permutation, parse_group, save_group, load_group
from etalab.perm import Permutation


def test_parse_minimal():
    G = parse_group("degree 4\ngen (1,2,3,4)\n")
    assert G.order == 4
    assert G.degree == 4


def test_comments_and_blank_lines_ignored():
    text = "# a comment\n\ndegree 3\n# another\ngen (1,2)\ngen (2,3)\n"
    assert parse_group(text).order == 6


def test_identity_generator_roundtrip():
    e = Permutation.identity(5)
    assert format_permutation(e) == "()"
    G = parse_group("degree 5\ngen ()\n")
    assert G.order == 1


def test_cycle_spaces_and_commas_both_accepted():
    a = parse_group("degree 4\ngen (1,2)(3,4)\n")
    b = parse_group("degree 4\ngen (1 2)(3 4)\n")
    assert a.elements == b.elements


def test_round_trip_preserves_group(tmp_path):
    for G in (dihedral(4), quaternion(), extraspecial_exp_p(3)):
        path = tmp_path / "g.grp"
        save_group(G, path, comment="round trip")
        H = load_group(path)
        assert H.degree == G.degree
        assert H.elements == G.elements


def test_error_reports_line_number():
    with pytest.raises(GroupFileError) as exc:
        parse_group("degree 4\ngen (1,2\n")
    assert "line 2" in str(exc.value)


def test_gen_before_degree_rejected():
    with pytest.raises(GroupFileError):
        parse_group("gen (1,2)\ndegree 4\n")


def test_point_out_of_range_rejected():
    with pytest.raises(GroupFileError):
        parse_group("degree 3\ngen (1,4)\n")


def test_repeated_point_rejected():
    with pytest.raises(GroupFileError):
        parse_group("degree 4\ngen (1,2,1)\n")


def test_missing_degree_rejected():
    with pytest.raises(GroupFileError):
        parse_group("# nothing\n")


def test_catalog_groups_all_load_as_p_groups():
    ids = catalog_ids()
    assert len(ids) == 19
    for gid in ids:
        G = load_catalog_group(gid)
        info = G.p_group_info()
        assert info.is_p_group, gid
        # emitted text parses back to the same group
        assert parse_group(format_group(G)).elements == G.elements
