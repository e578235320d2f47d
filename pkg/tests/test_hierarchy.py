import pytest
from hypothesis import given, strategies as st

from snacs_hi.hierarchy import (
    ConstrualLabel,
    HierarchyError,
    default_hierarchy,
    load_inventory,
)

HIER = default_hierarchy()
LABELS = sorted(n.name for n in HIER)


def test_inventory_counts():
    non_special = [n for n in HIER if n.group != "Special"]
    plain = [n for n in non_special if n.group != "Context"]
    assert len(plain) == 50
    assert {n.name for n in HIER if n.group == "Context"} == {"Context", "Focus"}
    assert {n.name for n in HIER if n.group == "Special"} == {"`d"}


def test_depths_follow_nesting():
    assert HIER.node("Circumstance").depth == 0
    assert HIER.node("Temporal").depth == 1
    assert HIER.node("Time").depth == 2
    assert HIER.node("StartTime").depth == 3
    assert HIER.node("Source").parent == "Locus"


def test_roots_have_no_parent():
    for node in HIER:
        assert (node.parent is None) == (node.depth == 0)
        if node.parent is not None:
            assert HIER.node(node.parent).depth == node.depth - 1


def test_subsumes():
    assert HIER.subsumes("Locus", "Goal")
    assert HIER.subsumes("Time", "Time")
    assert not HIER.subsumes("Participant", "Focus")
    assert not HIER.subsumes("Goal", "Locus")


def test_subsumes_unknown_label():
    with pytest.raises(KeyError):
        HIER.subsumes("Locus", "Nonesuch")


def test_lca():
    assert HIER.lca("Source", "Goal").name == "Locus"
    assert HIER.lca("StartTime", "EndTime").name == "Time"
    with pytest.raises(HierarchyError):
        HIER.lca("Agent", "Focus")


@given(st.sampled_from(LABELS))
def test_lca_reflexive(name):
    assert HIER.lca(name, name).name == name


@given(st.sampled_from(LABELS))
def test_group_root_subsumes_everything(name):
    root = HIER.group_root(name)
    assert HIER.subsumes(root.name, name)


@given(st.sampled_from(LABELS))
def test_parent_chains_short(name):
    assert len(HIER.chain(name)) <= 5


def test_load_reports_offending_line():
    with pytest.raises(HierarchyError, match="no roots"):
        load_inventory("# only a comment\n")
    with pytest.raises(HierarchyError, match="duplicate"):
        load_inventory("A\t-\tContext\nA\t-\tContext\n")
    with pytest.raises(HierarchyError, match="dangling"):
        load_inventory("A\tB\tContext\n")
    with pytest.raises(HierarchyError, match="cycle"):
        load_inventory("A\tB\tContext\nB\tA\tContext\n")


def test_load_is_deterministic():
    a = load_inventory("X\t-\tContext\nY\tX\tContext\n")
    b = load_inventory("X\t-\tContext\nY\tX\tContext\n")
    assert [(n.name, n.depth) for n in a] == [(n.name, n.depth) for n in b]
    assert a.node("Y").depth == 1


def test_construal_label_forms():
    plain = ConstrualLabel.parse("Gestalt")
    assert plain.congruent and str(plain) == "Gestalt"
    pair = ConstrualLabel.parse("Locus↝Source")
    assert (pair.scene, pair.function) == ("Locus", "Source")
    assert ConstrualLabel.parse("Locus~>Source") == pair
    assert str(pair) == "Locus↝Source"


@given(st.sampled_from(LABELS), st.sampled_from(LABELS))
def test_construal_roundtrip(scene, function):
    label = ConstrualLabel(scene, function)
    assert ConstrualLabel.parse(str(label)) == label
