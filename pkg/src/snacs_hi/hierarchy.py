"""Supersense label inventory and its tree structure.

The inventory is loaded from a tab-separated data file (one label per line:
``name <TAB> parent-or-"-" <TAB> group``) rather than being hard-coded, so
it can be audited and revised without touching code.  After loading, the
hierarchy is immutable and safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, Optional

GROUPS = ("Circumstance", "Participant", "Configuration", "Context", "Special")

# Special labels stand outside the supersense forest proper (no subsumption).
DISCOURSE = "`d"


class HierarchyError(ValueError):
    """Raised when the inventory file violates a structural invariant."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Supersense:
    """One node of the label inventory."""

    name: str
    group: str
    parent: Optional[str]  # None iff depth == 0
    depth: int

    @property
    def is_root(self) -> bool:
        return self.parent is None


@dataclass(frozen=True)
class ConstrualLabel:
    """A scene-role/function pair; congruent when the two coincide.

    Serialized as a single label when congruent, else ``Scene~>Function``
    (the arrow accepts either the typographic or the ASCII spelling on
    input).
    """

    scene: str
    function: str

    ARROW = "↝"  # the arrow used in print
    _ARROWS = ("↝", "~>")

    @property
    def congruent(self) -> bool:
        return self.scene == self.function

    def __str__(self) -> str:
        if self.congruent:
            return self.scene
        return f"{self.scene}{self.ARROW}{self.function}"

    @classmethod
    def parse(cls, text: str) -> "ConstrualLabel":
        text = text.strip()
        for arrow in cls._ARROWS:
            if arrow in text:
                scene, _, function = text.partition(arrow)
                return cls(scene.strip(), function.strip())
        return cls(text, text)

    @classmethod
    def congruent_label(cls, name: str) -> "ConstrualLabel":
        return cls(name, name)


class Hierarchy:
    """The loaded inventory: a forest of Supersense nodes."""

    def __init__(self, nodes: Iterable[Supersense]):
        self._nodes: dict[str, Supersense] = {}
        for node in nodes:
            if node.name in self._nodes:
                raise HierarchyError(f"duplicate label {node.name!r}")
            self._nodes[node.name] = node
        self._check()

    def _check(self) -> None:
        if not self._nodes:
            raise HierarchyError("no roots")
        for node in self._nodes.values():
            if node.group not in GROUPS:
                raise HierarchyError(f"unknown group {node.group!r} for {node.name!r}")
            if node.parent is None:
                if node.depth != 0:
                    raise HierarchyError(f"root {node.name!r} has depth {node.depth}")
                continue
            parent = self._nodes.get(node.parent)
            if parent is None:
                raise HierarchyError(f"dangling parent {node.parent!r} for {node.name!r}")
            if parent.group != node.group:
                raise HierarchyError(
                    f"{node.name!r} is in group {node.group} but its parent "
                    f"{parent.name!r} is in {parent.group}"
                )
            if node.depth != parent.depth + 1:
                raise HierarchyError(
                    f"{node.name!r} has depth {node.depth}, parent has {parent.depth}"
                )

    # -- basic access ---------------------------------------------------

    def __contains__(self, name: str) -> bool:
        return name in self._nodes

    def __iter__(self) -> Iterator[Supersense]:
        return iter(self._nodes.values())

    def __len__(self) -> int:
        return len(self._nodes)

    def get(self, name: str) -> Optional[Supersense]:
        return self._nodes.get(name)

    def node(self, name: str) -> Supersense:
        try:
            return self._nodes[name]
        except KeyError:
            raise KeyError(f"unknown label {name!r}") from None

    @property
    def roots(self) -> list[Supersense]:
        return [n for n in self._nodes.values() if n.is_root]

    def group_root(self, name: str) -> Supersense:
        """The depth-0 ancestor of a label."""
        node = self.node(name)
        while node.parent is not None:
            node = self._nodes[node.parent]
        return node

    def chain(self, name: str) -> list[Supersense]:
        """Parent chain from the label itself up to its root."""
        out = [self.node(name)]
        while out[-1].parent is not None:
            out.append(self._nodes[out[-1].parent])
        return out

    # -- structural queries ----------------------------------------------

    def subsumes(self, ancestor: str, descendant: str) -> bool:
        """True iff *ancestor* lies on *descendant*'s parent chain (reflexive)."""
        anc = self.node(ancestor)
        node = self.node(descendant)
        while True:
            if node.name == anc.name:
                return True
            if node.parent is None:
                return False
            node = self._nodes[node.parent]

    def lca(self, a: str, b: str) -> Supersense:
        """Deepest common ancestor of two labels in the same group tree."""
        chain_a = {n.name for n in self.chain(a)}
        for node in self.chain(b):
            if node.name in chain_a:
                return node
        raise HierarchyError(f"no common ancestor of {a!r} and {b!r}")

    def validate_construal(self, construal: ConstrualLabel) -> bool:
        return construal.scene in self and construal.function in self


def _parse_lines(lines: Iterable[str]) -> Iterator[tuple[int, str, Optional[str], str]]:
    for lineno, raw in enumerate(lines, start=1):
        line = raw.rstrip("\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            raise HierarchyError(f"expected 3 tab-separated fields, got {len(parts)}", lineno)
        name, parent, group = (p.strip() for p in parts)
        if not name:
            raise HierarchyError("empty label name", lineno)
        yield lineno, name, (None if parent == "-" else parent), group


def load_inventory(source: str | Path) -> Hierarchy:
    """Load the inventory from a data file (path or file contents).

    Depths are derived from the parent links; cycles and dangling parents are
    reported with the offending line number.
    """
    if isinstance(source, Path):
        text = source.read_text(encoding="utf-8")
    elif "\n" not in source and Path(source).exists():
        text = Path(source).read_text(encoding="utf-8")
    else:
        text = source

    rows = list(_parse_lines(text.splitlines()))
    if not rows:
        raise HierarchyError("no roots")

    by_name: dict[str, tuple[int, Optional[str], str]] = {}
    for lineno, name, parent, group in rows:
        if name in by_name:
            raise HierarchyError(f"duplicate label {name!r}", lineno)
        by_name[name] = (lineno, parent, group)

    depths: dict[str, int] = {}

    def depth_of(name: str, trail: tuple[str, ...]) -> int:
        if name in depths:
            return depths[name]
        if name in trail:
            lineno = by_name[name][0]
            cycle = " > ".join(trail + (name,))
            raise HierarchyError(f"cycle: {cycle}", lineno)
        lineno, parent, _ = by_name[name]
        if parent is None:
            depths[name] = 0
        else:
            if parent not in by_name:
                raise HierarchyError(f"dangling parent {parent!r} for {name!r}", lineno)
            depths[name] = depth_of(parent, trail + (name,)) + 1
        return depths[name]

    nodes = []
    for name, (lineno, parent, group) in by_name.items():
        nodes.append(Supersense(name, group, parent, depth_of(name, ())))
    return Hierarchy(nodes)


DEFAULT_HIERARCHY_PATH = Path(__file__).parent / "data" / "hierarchy.tsv"


def default_hierarchy() -> Hierarchy:
    return load_inventory(DEFAULT_HIERARCHY_PATH)
