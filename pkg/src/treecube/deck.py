"""Decks, deck checking, and the recognize/reconstruct pipeline for tree cubes.

Cards are stored as certificates (a deck is unlabeled by definition); the
certificate encoding is invertible, so card graphs are recovered on demand.
Reconstruction selects the cards that are tree cubes, extends the roots of
one card by a fresh leaf in every position (the reconstruction black box),
and accepts the first candidate whose cube reproduces the full deck.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cubes import RootKind, cube_root
from .errors import GraphParseError, NotATreeDeckError, OrderTooSmallError
from .graphs import (
    CanonicalForm,
    LabeledGraph,
    canonical_form,
    complete_graph,
    delete_vertex,
    parse_graph,
    power,
    serialize_graph,
    star_graph,
)
from .trees import Tree, leaves


@dataclass(frozen=True)
class Deck:
    """Multiset of the p single-vertex-deleted cards of a graph on p vertices."""

    cards: tuple[CanonicalForm, ...]

    def __post_init__(self):
        object.__setattr__(self, "cards", tuple(sorted(self.cards)))
        p = len(self.cards)
        for card in self.cards:
            if card.order != p - 1:
                raise ValueError(
                    f"deck of order {p} needs cards on {p - 1} vertices, got {card.order}")

    @property
    def order(self) -> int:
        return len(self.cards)


def deck(G: LabeledGraph) -> Deck:
    """The deck of G: one certificate per vertex-deleted subgraph."""
    if G.p < 1:
        raise ValueError("deck requires at least one vertex")
    return Deck(tuple(canonical_form(delete_vertex(G, v)) for v in range(G.p)))


def deck_check(G: LabeledGraph, S: Deck) -> bool:
    """True iff the deck of G equals S as multisets (order mismatch is False)."""
    if G.p != S.order:
        return False
    return deck(G) == S


@dataclass(frozen=True)
class SelectedCard:
    card: CanonicalForm
    roots: tuple[Tree, ...]


@dataclass(frozen=True)
class CardSelection:
    """The sub-multiset of cards that are tree cubes, with root candidates."""

    selected: tuple[SelectedCard, ...]

    def __len__(self) -> int:
        return len(self.selected)


def select_cube_cards(S: Deck) -> CardSelection:
    """Keep the cards that are cubes of some tree.

    Unique roots carry a single candidate; complete cards carry every tree of
    diameter below 4 on the card's order.
    """
    roots_by_card: dict[CanonicalForm, tuple[Tree, ...] | None] = {}
    selected = []
    for card in S.cards:
        if card not in roots_by_card:
            r = cube_root(card.to_graph())
            if r.kind is RootKind.NOT_A_CUBE:
                roots_by_card[card] = None
            elif r.kind is RootKind.UNIQUE:
                roots_by_card[card] = (r.tree,)
            else:
                roots_by_card[card] = r.roots
        roots = roots_by_card[card]
        if roots is not None:
            selected.append(SelectedCard(card, roots))
    return CardSelection(tuple(selected))


def _extension_candidates(selection: CardSelection, target_order: int) -> list[Tree]:
    """Extend the selected cards' roots by one fresh leaf in every position.

    Cards are visited in certificate order (duplicates once) and candidates
    are deduplicated, so downstream first-accept resolution is deterministic.
    A card produced by deleting an internal vertex can itself be a tree cube
    (complete cards always are), so no single card is guaranteed to generate
    the right tree; iterating all of them keeps the pipeline complete, and
    every endpoint card's root extensions do contain the original tree.
    """
    by_cert: dict[CanonicalForm, Tree] = {}
    out: list[Tree] = []
    done_cards: set[CanonicalForm] = set()
    for sc in selection.selected:
        if sc.card in done_cards:
            continue
        done_cards.add(sc.card)
        batch: dict[CanonicalForm, Tree] = {}
        for root in sc.roots:
            if root.p != target_order - 1:
                continue
            base = list(root.graph.edges)
            for u in range(root.p):
                cand = Tree(LabeledGraph(target_order, base + [(u, target_order - 1)]))
                cert = canonical_form(cand.graph)
                if cert not in by_cert and cert not in batch:
                    batch[cert] = cand
        for cert in sorted(batch):
            by_cert[cert] = batch[cert]
            out.append(batch[cert])
    return out


def _endpoint_cube_deck(T: Tree) -> tuple[CanonicalForm, ...]:
    # Cubes of the leaf-deleted subtrees, the cube-level endpoint deck of T.
    out = []
    for v in sorted(leaves(T)):
        out.append(canonical_form(power(delete_vertex(T.graph, v), 3)))
    return tuple(sorted(out))


def tree_from_endpoint_deck(selection: CardSelection, target_order: int) -> Tree:
    """Reconstruct a tree whose cube-level endpoint deck matches the selection.

    This is the tree-reconstruction black box: it errors when no extension of
    the selected cards' roots is consistent with the selection. Callers doing
    full-deck reconstruction still verify the winner against the whole deck.
    """
    if not selection.selected:
        raise NotATreeDeckError("no card in the selection is a tree cube")
    want = tuple(sorted(sc.card for sc in selection.selected))
    for cand in _extension_candidates(selection, target_order):
        if _endpoint_cube_deck(cand) == want:
            return cand
    raise NotATreeDeckError("no candidate tree matches the endpoint cards")


@dataclass(frozen=True)
class ReconstructionReport:
    """Outcome of deck recognition/reconstruction, with a step trace."""

    recognized: bool
    graph: LabeledGraph | None
    tree: Tree | None
    trace: tuple[str, ...]

    def to_dict(self) -> dict:
        out: dict = {"recognized": self.recognized, "trace": list(self.trace)}
        if self.graph is not None:
            out["graph_edges"] = self.graph.edge_list()
            out["graph_certificate"] = canonical_form(self.graph).hex()
        if self.tree is not None:
            out["tree_edges"] = self.tree.graph.edge_list()
        return out


def reconstruct(S: Deck) -> ReconstructionReport:
    """Recognize and rebuild a tree cube from its deck.

    Success means the deck belongs to the class: the rebuilt graph's own deck
    equals the input. Complete decks short-circuit to the complete graph.
    """
    p = S.order
    if p < 3:
        raise OrderTooSmallError("reconstruction needs decks of order at least 3")
    trace = []
    complete_card = canonical_form(complete_graph(p - 1))
    if all(card == complete_card for card in S.cards):
        trace.append(f"all cards complete: deck determines K_{p}")
        return ReconstructionReport(True, complete_graph(p), Tree(star_graph(p)), tuple(trace))
    selection = select_cube_cards(S)
    trace.append(f"selected {len(selection)} of {p} cards as tree cubes")
    if not selection.selected:
        trace.append("no cube cards: deck is not from a tree cube")
        return ReconstructionReport(False, None, None, tuple(trace))
    candidates = _extension_candidates(selection, p)
    trace.append(f"{len(candidates)} candidate trees extend the first selected card")
    for cand in candidates:
        G = power(cand.graph, 3)
        if deck_check(G, S):
            trace.append("deck check confirmed the reconstruction")
            return ReconstructionReport(True, G, cand, tuple(trace))
    trace.append("no candidate cube reproduced the deck")
    return ReconstructionReport(False, None, None, tuple(trace))


def recognize(S: Deck) -> bool:
    """Does the deck correspond to the cube of a tree?"""
    return reconstruct(S).recognized


# ── deck files ────────────────────────────────────────────────────────


def deck_to_text(S: Deck, fmt: str = "edgelist") -> str:
    """Serialize a deck: header line, then one card per block (or per line)."""
    lines = [f"deck {S.order}"]
    for card in S.cards:
        G = card.to_graph()
        if fmt == "graph6":
            lines.append(serialize_graph(G, "graph6").strip())
        else:
            lines.append("")
            lines.append(serialize_graph(G, "edgelist").rstrip("\n"))
    return "\n".join(lines) + "\n"


def parse_deck(text: str) -> Deck:
    """Parse a deck file (edge-list blocks or one graph6 string per line)."""
    lines = text.splitlines()
    idx = 0
    while idx < len(lines) and not lines[idx].strip():
        idx += 1
    if idx == len(lines):
        raise GraphParseError("empty deck input")
    header = lines[idx].split()
    if len(header) != 2 or header[0] != "deck":
        raise GraphParseError(f"expected 'deck <order>', got {lines[idx].strip()!r}", line=idx + 1)
    try:
        p = int(header[1])
    except ValueError:
        raise GraphParseError(f"bad deck order {header[1]!r}", line=idx + 1) from None
    body = lines[idx + 1:]
    content = [(i, ln) for i, ln in enumerate(body) if ln.strip()]
    if content and not content[0][1].strip()[:1].isdigit():
        graphs = []
        for i, ln in content:
            graphs.append((i, parse_graph(ln.strip(), fmt="graph6")))
    else:
        graphs = []
        block: list[str] = []
        start = 0
        for i, ln in enumerate(body + [""]):
            if ln.strip():
                if not block:
                    start = i
                block.append(ln)
            elif block:
                try:
                    graphs.append((start, parse_graph("\n".join(block), fmt="edgelist")))
                except GraphParseError as exc:
                    raise GraphParseError(f"card {len(graphs) + 1}: {exc}") from None
                block = []
    if len(graphs) != p:
        raise GraphParseError(f"deck of order {p} needs {p} cards, found {len(graphs)}")
    cards = []
    for i, G in graphs:
        if G.p != p - 1:
            raise GraphParseError(
                f"card on {G.p} vertices in a deck of order {p}", line=idx + 2 + i)
        cards.append(canonical_form(G))
    return Deck(tuple(cards))
