"""Verification of string C-groups and their Schlafli data.

A rank-n candidate is a group together with an ordered list of n
distinguished generators.  The checks are fully explicit: involutions,
far-commutation down the string, and the intersection property over every
pair of generator subsets, each subgroup enumerated element by element.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import RankTooLarge
from .groups import Group, Subgroup, subgroup_generated

MAX_RANK = 6


@dataclass(frozen=True)
class StringCCandidate:
    """A group plus an ordered tuple of distinguished generator indices."""

    group: Group
    generator_indices: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.generator_indices)


@dataclass(frozen=True)
class StringCReport:
    involutions: bool
    string_condition: bool
    intersection_property: bool
    schlafli: tuple[int, ...]

    @property
    def passed(self) -> bool:
        return self.involutions and self.string_condition and self.intersection_property

    def to_dict(self) -> dict:
        return {
            "involutions": self.involutions,
            "string_condition": self.string_condition,
            "intersection_property": self.intersection_property,
            "schlafli": list(self.schlafli),
            "passed": self.passed,
        }


def _subset_subgroups(G: Group, gens: tuple[int, ...]) -> dict[frozenset, Subgroup]:
    out = {}
    n = len(gens)
    for mask in range(1 << n):
        sel = frozenset(i for i in range(n) if mask >> i & 1)
        out[sel] = subgroup_generated(G, [gens[i] for i in sorted(sel)])
    return out


def verify_string_cgroup(G: Group, generator_indices) -> StringCReport:
    """Run the three defining checks on (G, s_0..s_{n-1}).

    The intersection property is tested for every pair of subsets I, J of
    the generator set: the subgroup generated by I meets the one generated
    by J exactly in the one generated by I & J.  Rank is capped at
    MAX_RANK because the subset lattice doubles per generator.
    """
    gens = tuple(int(g) for g in generator_indices)
    n = len(gens)
    if n > MAX_RANK:
        raise RankTooLarge(f"rank {n} exceeds supported maximum {MAX_RANK}")

    involutions = all(G.element_order(g) == 2 for g in gens)

    string_ok = True
    for i in range(n):
        for j in range(i + 2, n):
            if G.mul_index(gens[i], gens[j]) != G.mul_index(gens[j], gens[i]):
                string_ok = False

    subs = _subset_subgroups(G, gens)
    member_sets = {sel: frozenset(int(x) for x in sub.members) for sel, sub in subs.items()}
    inter_ok = True
    keys = sorted(member_sets, key=lambda s: (len(s), sorted(s)))
    for I in keys:
        for J in keys:
            expected = member_sets[I & J]
            if member_sets[I] & member_sets[J] != expected:
                inter_ok = False

    schlafli = tuple(
        G.element_order(G.mul_index(gens[i], gens[i + 1])) for i in range(n - 1)
    )
    return StringCReport(involutions, string_ok, inter_ok, schlafli)


def candidate_report(candidate: StringCCandidate) -> StringCReport:
    return verify_string_cgroup(candidate.group, candidate.generator_indices)
