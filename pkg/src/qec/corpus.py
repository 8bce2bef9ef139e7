"""Verification corpora: a list of top-level groups plus their subgroups."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .dsl import parse_corpus, parse_group
from .groups import DEFAULT_CAP, FiniteGroup

DEFAULT_SPECS = [f"C{n}" for n in range(1, 13)] + ["S3", "S4", "A4", "D4", "D6", "Q8", "C2 x C2"]


@lru_cache(maxsize=None)
def group_from_label(label: str, cap: int = DEFAULT_CAP) -> FiniteGroup:
    """Reparse a group label; memoized so worker processes build each group once."""
    return parse_group(label, cap=cap)


@dataclass
class Corpus:
    name: str
    top: list[FiniteGroup]

    def pairs(self) -> list[tuple[FiniteGroup, FiniteGroup]]:
        """(G, H) with G top-level and H running over subgroups of G up to conjugacy."""
        return [(G, H) for G in self.top for H in G.subgroups_up_to_conjugacy()]

    def groups(self) -> list[FiniteGroup]:
        """Top-level groups, then their subgroups, without repeats."""
        seen, out = set(), []
        for G in self.top + [H for _, H in self.pairs()]:
            if G.key not in seen:
                seen.add(G.key)
                out.append(G)
        return out


def default_corpus() -> Corpus:
    return Corpus("default", [group_from_label(s) for s in DEFAULT_SPECS])


def load_corpus(selector: str, *, cap: int = DEFAULT_CAP) -> Corpus:
    """``default`` or a path to a file with one group spec per line."""
    if selector == "default":
        return default_corpus()
    with open(selector, encoding="utf-8") as fh:
        text = fh.read()
    return Corpus(selector, parse_corpus(text, cap=cap))


__all__ = ["Corpus", "DEFAULT_SPECS", "default_corpus", "group_from_label", "load_corpus"]
