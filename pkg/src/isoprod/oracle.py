"""Brute-force first homology of the kernel via Reidemeister-Schreier.

The kernel K of the combined map F -> G has index |G|, and since the
quotient is abelian and the map explicit, the cosets are literally the
elements of G: every generator acts by translation.  A breadth-first
Schreier transversal turns each pair (coset, generator) outside the
spanning tree into a kernel generator; rewriting every conjugate t r t^-1
of every relator of F and abelianizing on the fly gives a relation matrix
whose cokernel is K^ab = H_1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .abelian import AbElement, FinAbGroup
from .intlattice import IntMatrix, InvariantFactors, abelian_invariants
from .presentation import (
    DifferenceMap,
    GeneratingSystem,
    Letter,
    ProductPresentation,
    Word,
    require_valid,
)


@dataclass(frozen=True)
class CosetTable:
    """Cosets of the kernel, indexed in BFS discovery order (0 = identity).

    ``letters`` fixes the generator order used for the BFS; ``moves[p][c]``
    is the coset reached from coset c by the positive letter at position p.
    """

    group: FinAbGroup
    letters: tuple[Letter, ...]
    cosets: tuple[AbElement, ...]
    moves: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.cosets)

    def position(self, letter: Letter) -> int:
        for p, l in enumerate(self.letters):
            if l.factor == letter.factor and l.index == letter.index:
                return p
        raise KeyError(f"unknown generator {letter}")

    def step(self, coset: int, letter: Letter) -> int:
        p = self.position(letter)
        if letter.sign == 1:
            return self.moves[p][coset]
        return self.moves[p].index(coset)


def coset_table(
    pres: ProductPresentation,
    hom: DifferenceMap,
    gen_order: Sequence[int] | None = None,
) -> CosetTable:
    """Enumerate the |G| cosets by BFS over the generator images.

    ``gen_order`` optionally permutes the generator positions used for the
    BFS (the default order is a_1..a_n, b_1..b_m).  Rejects homomorphisms
    that are not surjective.
    """
    letters = pres.generators()
    if gen_order is not None:
        if sorted(gen_order) != list(range(len(letters))):
            raise ValueError("gen_order must be a permutation of the generator positions")
        letters = tuple(letters[p] for p in gen_order)
    images = [hom.letter_image(l) for l in letters]
    group = hom.group
    zero = group.zero()
    index: dict[AbElement, int] = {zero: 0}
    cosets: list[AbElement] = [zero]
    head = 0
    while head < len(cosets):
        current = cosets[head]
        head += 1
        for img in images:
            target = current + img
            if target not in index:
                index[target] = len(cosets)
                cosets.append(target)
    if len(cosets) != group.order():
        raise ValueError(
            f"homomorphism is not surjective: reaches {len(cosets)} of {group.order()} elements"
        )
    moves = tuple(
        tuple(index[c + img] for c in cosets) for img in images
    )
    return CosetTable(group, letters, tuple(cosets), moves)


@dataclass(frozen=True)
class SchreierData:
    """Schreier transversal and the numbering of the kernel generators.

    ``transversal[c]`` is the prefix-closed representative word of coset c;
    ``tree`` holds the (coset, position) edges used to reach new cosets,
    whose kernel generators are trivial.  The remaining pairs get matrix
    columns in (coset, position) order.
    """

    table: CosetTable
    transversal: tuple[Word, ...]
    tree: frozenset[tuple[int, int]]
    columns: dict[tuple[int, int], int]

    @property
    def ncols(self) -> int:
        return len(self.columns)

    def generator_word(self, coset: int, position: int) -> Word:
        """The kernel generator t_c * x * t_{c.x}^-1 as a word in F."""
        letter = self.table.letters[position]
        target = self.table.moves[position][coset]
        return self.transversal[coset] * letter * self.transversal[target].inverse()


def schreier_transversal(table: CosetTable) -> SchreierData:
    """BFS transversal over the table's generator order; prefix-closed."""
    transversal: list[Word | None] = [None] * table.size
    transversal[0] = Word()
    tree: set[tuple[int, int]] = set()
    for c in range(table.size):
        if transversal[c] is None:
            raise ValueError("coset table is not transitive from coset 0")
        for p in range(len(table.letters)):
            target = table.moves[p][c]
            if transversal[target] is None:
                transversal[target] = transversal[c] * table.letters[p]
                tree.add((c, p))
    columns = {}
    for c in range(table.size):
        for p in range(len(table.letters)):
            if (c, p) not in tree:
                columns[(c, p)] = len(columns)
    return SchreierData(table, tuple(transversal), frozenset(tree), columns)


def rewrite_trace(
    word: Word, data: SchreierData, start: int = 0, skip_tree: bool = True
) -> list[tuple[tuple[int, int], int]]:
    """Ordered kernel-generator emissions of a word read from the given coset.

    Reading a positive letter at coset c emits ((c, position), +1) and moves
    forward; a negative letter moves back first and emits with sign -1.
    Tree-edge generators are trivial and skipped unless ``skip_tree=False``.
    """
    table = data.table
    out = []
    c = start
    for letter in word:
        p = table.position(letter)
        if letter.sign == 1:
            key = (c, p)
            c = table.moves[p][c]
            sign = 1
        else:
            c = table.moves[p].index(c)
            key = (c, p)
            sign = -1
        if skip_tree and key in data.tree:
            continue
        out.append((key, sign))
    return out


def rewrite_relator(relator: Word, conjugator: Word, data: SchreierData) -> list[int]:
    """Abelianized rewriting of conjugator * relator * conjugator^-1.

    Returns the exponent-sum row over the nontrivial kernel generators.
    """
    row = [0] * data.ncols
    full = conjugator * relator * conjugator.inverse()
    for key, sign in rewrite_trace(full, data):
        row[data.columns[key]] += sign
    return row


def relation_matrix(
    phi: GeneratingSystem,
    psi: GeneratingSystem,
    gen_order: Sequence[int] | None = None,
) -> IntMatrix:
    """One row per (coset, relator of F), columns the nontrivial kernel generators."""
    pres = ProductPresentation(phi.presentation(), psi.presentation())
    table = coset_table(pres, DifferenceMap(phi, psi), gen_order)
    data = schreier_transversal(table)
    relators = pres.relators()
    rows = [
        rewrite_relator(r, data.transversal[c], data)
        for c in range(table.size)
        for r in relators
    ]
    return IntMatrix(rows, cols=data.ncols)


def kernel_h1(
    phi: GeneratingSystem,
    psi: GeneratingSystem,
    gen_order: Sequence[int] | None = None,
) -> InvariantFactors:
    """Invariant factors of K^ab, computed purely by rewriting.

    Validation is enforced for nontrivial target groups.  A trivial target
    makes the kernel all of F (so the result is (Z/k)^(n+m-2)); image-order
    validation is meaningless there and skipped.
    """
    if not phi.group.is_trivial():
        require_valid(phi)
        require_valid(psi)
    return abelian_invariants(relation_matrix(phi, psi, gen_order))
