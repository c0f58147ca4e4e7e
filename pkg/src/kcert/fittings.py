"""Exact-replay certificates: a full decide tree plus an index algebra.

Storage indexes name subformula occurrences by the path that created
them: the entry formula is eind, the subformulas of a stored conjunction
or disjunction at I live at (lind I) and (rind I), the body of a
universal at I lives at (lind I), and the instantiated body of an
existential at I paired with the universal O it borrows its world from
lives at (bind I O).  Accessibility literals are all stored at none.

A decide tree records one decide per node: the index to decide on, an
auxiliary index (the closing complement for a leaf, the eigenvariable
donor for an existential), and the child decides.  Checking never has to
search: the tree dictates every decide, so a well-formed certificate is
replayed with zero choice points.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Callable, Iterable

from .formulas import PolarizedFormula, Term, is_rel_literal
from .kernel import Fpc


# ---------------------------------------------------------------------------
# indexes

@dataclass(frozen=True)
class Eind:
    def __str__(self) -> str:
        return "eind"


@dataclass(frozen=True)
class NoIndex:
    def __str__(self) -> str:
        return "none"


@dataclass(frozen=True)
class Lind:
    sub: Index

    def __str__(self) -> str:
        return f"(lind {self.sub})"


@dataclass(frozen=True)
class Rind:
    sub: Index

    def __str__(self) -> str:
        return f"(rind {self.sub})"


@dataclass(frozen=True)
class Bind:
    left: Index
    right: Index

    def __str__(self) -> str:
        return f"(bind {self.left} {self.right})"


Index = Eind | NoIndex | Lind | Rind | Bind

EIND = Eind()
NONE = NoIndex()


# ---------------------------------------------------------------------------
# decide trees

@dataclass(frozen=True)
class DecTree:
    decide_on: Index
    aux: Index
    children: tuple[DecTree, ...] = ()


def node_count(tree: DecTree) -> int:
    return 1 + sum(node_count(child) for child in tree.children)


def tree_leaves(tree: DecTree) -> list[DecTree]:
    if not tree.children:
        return [tree]
    out: list[DecTree] = []
    for child in tree.children:
        out.extend(tree_leaves(child))
    return out


# ---------------------------------------------------------------------------
# certificate state

@dataclass(frozen=True)
class FitCert:
    """Checker-side state: indexes waiting to be handed to stores, the
    decide (sub)tree still to replay, and universal-index-to-eigenvariable
    bindings seen so far."""

    pending: tuple[Index, ...]
    tree: DecTree
    eigmap: tuple[tuple[Index, Term], ...]

    @staticmethod
    def load(tree: DecTree) -> FitCert:
        # seed one pending index so the entry formula is stored at eind
        return FitCert((EIND,), tree, ())


class FittingsFpc(Fpc):
    """Replay a decide tree, refusing every step the tree does not name."""

    def decide_e(self, cert: object, index: object) -> Iterable[object]:
        if isinstance(cert, FitCert) and index == cert.tree.decide_on:
            yield replace(cert, pending=())

    def release_e(self, cert: object) -> Iterable[object]:
        if isinstance(cert, FitCert):
            yield cert

    def store_c(self, cert: object, formula: PolarizedFormula) -> Iterable[tuple[object, object]]:
        if not isinstance(cert, FitCert):
            return
        if is_rel_literal(formula):
            yield NONE, cert
        elif cert.pending:
            yield cert.pending[0], replace(cert, pending=cert.pending[1:])

    def initial_e(self, cert: object, index: object) -> bool:
        return isinstance(cert, FitCert) and index == cert.tree.aux

    def orneg_c(self, cert: object) -> Iterable[object]:
        if not isinstance(cert, FitCert):
            return
        if cert.pending:
            yield cert
        elif cert.tree.children:
            i = cert.tree.decide_on
            yield FitCert((Lind(i), Rind(i)), cert.tree.children[0], cert.eigmap)

    def andneg_c(self, cert: object) -> Iterable[tuple[object, object]]:
        if not isinstance(cert, FitCert):
            return
        if cert.pending:
            yield cert, cert
        elif len(cert.tree.children) >= 2:
            i = cert.tree.decide_on
            left, right = cert.tree.children[0], cert.tree.children[1]
            yield (FitCert((Lind(i),), left, cert.eigmap),
                   FitCert((Rind(i),), right, cert.eigmap))

    def all_c(self, cert: object) -> Iterable[Callable[[Term], object]]:
        if isinstance(cert, FitCert) and not cert.pending and cert.tree.children:
            i = cert.tree.decide_on
            child = cert.tree.children[0]
            eigmap = cert.eigmap

            def bind_eigen(eigen: Term) -> FitCert:
                return FitCert((Lind(i),), child, ((i, eigen),) + eigmap)

            yield bind_eigen

    def andpos_e(self, cert: object) -> Iterable[tuple[object, object]]:
        if isinstance(cert, FitCert):
            # the left premise is the accessibility literal of a diamond;
            # its complement sits at none, so point the aux there
            yield replace(cert, tree=replace(cert.tree, aux=NONE)), cert

    def some_e(self, cert: object) -> Iterable[tuple[Term, object]]:
        if not isinstance(cert, FitCert) or cert.pending or not cert.tree.children:
            return
        i, aux = cert.tree.decide_on, cert.tree.aux
        child = cert.tree.children[0]
        for key, eigen in cert.eigmap:
            if key == aux:
                yield eigen, FitCert((Bind(i, aux),), child, cert.eigmap)


FITTINGS = FittingsFpc()
