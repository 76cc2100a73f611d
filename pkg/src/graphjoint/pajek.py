"""Pajek network-file parsing and conversion to graph ensembles.

Supports the subset of the format used by multi-relational social network
datasets: one ``*Vertices`` section with optional quoted labels, followed
by any number of ``*Edges`` / ``*Arcs`` sections, each optionally preceded
by a ``*Network`` line naming the relation.  Keywords are matched
case-insensitively, ``%`` starts a comment, and CRLF line endings are
tolerated.
"""

from __future__ import annotations

import json
import shlex
import warnings
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import IngestError, PajekError
from .graphs import GraphEnsemble, Gso, NodePartition

__all__ = [
    "PajekRelation",
    "PajekDocument",
    "parse_pajek",
    "parse_pajek_file",
    "write_pajek",
    "combine_documents",
    "to_ensemble",
    "load_dataset",
]


@dataclass
class PajekRelation:
    """One *Edges or *Arcs section: a list of (i, j, weight) 1-based entries."""

    name: str
    directed: bool
    links: list[tuple[int, int, float]] = field(default_factory=list)


@dataclass
class PajekDocument:
    """Vertex count, labels, and the edge/arc relations of one Pajek file."""

    n: int
    labels: list[str]
    relations: list[PajekRelation] = field(default_factory=list)


def _strip(line: str) -> str:
    return line.rstrip("\r\n")


def parse_pajek(text: str) -> PajekDocument:
    """Parse Pajek text into a document; raise PajekError with a line number."""
    n = None
    labels: list[str] = []
    relations: list[PajekRelation] = []
    pending_name: str | None = None
    section = None  # None | "vertices" | "links"
    current: PajekRelation | None = None
    auto_idx = 0

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw).strip()
        if not line or line.startswith("%"):
            continue
        if line.startswith("*"):
            try:
                tokens = shlex.split(line)
            except ValueError as exc:
                raise PajekError(f"unparseable header: {exc}", lineno)
            keyword = tokens[0].lower()
            if keyword == "*vertices":
                if len(tokens) < 2:
                    raise PajekError("*Vertices needs a count", lineno)
                try:
                    count = int(tokens[1])
                except ValueError:
                    raise PajekError(f"vertex count must be an integer, got {tokens[1]!r}", lineno)
                if count < 1:
                    raise PajekError("vertex count must be positive", lineno)
                if n is not None and count != n:
                    raise PajekError(f"conflicting vertex counts {n} and {count}", lineno)
                if n is None:
                    n = count
                    labels = [""] * n
                section = "vertices"
            elif keyword == "*network":
                pending_name = tokens[1] if len(tokens) > 1 else None
                section = None
            elif keyword in ("*edges", "*arcs"):
                if n is None:
                    raise PajekError("edge section before *Vertices", lineno)
                auto_idx += 1
                name = pending_name if pending_name else f"relation{auto_idx}"
                pending_name = None
                current = PajekRelation(name=name, directed=(keyword == "*arcs"))
                relations.append(current)
                section = "links"
            else:
                raise PajekError(f"unsupported section {tokens[0]!r}", lineno)
            continue

        if section == "vertices":
            try:
                tokens = shlex.split(line)
            except ValueError as exc:
                raise PajekError(f"unparseable vertex line: {exc}", lineno)
            try:
                idx = int(tokens[0])
            except ValueError:
                raise PajekError(f"vertex index must be an integer, got {tokens[0]!r}", lineno)
            if not 1 <= idx <= n:
                raise PajekError(f"vertex index {idx} out of range 1..{n}", lineno)
            if len(tokens) > 1:
                labels[idx - 1] = tokens[1]
        elif section == "links":
            tokens = line.split()
            if len(tokens) < 2:
                raise PajekError("edge line needs at least two vertex indices", lineno)
            try:
                i, j = int(tokens[0]), int(tokens[1])
            except ValueError:
                raise PajekError(f"edge endpoints must be integers, got {tokens[:2]}", lineno)
            if not (1 <= i <= n and 1 <= j <= n):
                raise PajekError(f"edge ({i}, {j}) out of range 1..{n}", lineno)
            weight = 1.0
            if len(tokens) > 2:
                try:
                    weight = float(tokens[2])
                except ValueError:
                    raise PajekError(f"edge weight must be numeric, got {tokens[2]!r}", lineno)
            current.links.append((i, j, weight))
        else:
            raise PajekError(f"data line outside any section: {line!r}", lineno)

    if n is None:
        raise PajekError("no *Vertices section found", 1)
    return PajekDocument(n=n, labels=labels, relations=relations)


def parse_pajek_file(path) -> PajekDocument:
    return parse_pajek(Path(path).read_text(encoding="utf-8"))


def write_pajek(doc: PajekDocument) -> str:
    """Serialize a document back to Pajek text (round-trips with parse_pajek)."""
    lines = [f"*Vertices {doc.n}"]
    for idx, label in enumerate(doc.labels, start=1):
        if label:
            lines.append(f'{idx} "{label}"')
    for rel in doc.relations:
        lines.append(f'*Network "{rel.name}"')
        lines.append("*Arcs" if rel.directed else "*Edges")
        for i, j, w in rel.links:
            lines.append(f"{i} {j} {w:.12g}")
    return "\n".join(lines) + "\n"


def combine_documents(docs: list[PajekDocument]) -> PajekDocument:
    """Merge per-relation files into one document; vertex counts must agree."""
    if not docs:
        raise IngestError("no documents to combine")
    n = docs[0].n
    for d in docs:
        if d.n != n:
            raise IngestError(f"vertex count mismatch across files: {n} vs {d.n}")
    labels = next((d.labels for d in docs if any(d.labels)), docs[0].labels)
    merged = PajekDocument(n=n, labels=list(labels))
    for d in docs:
        merged.relations.extend(d.relations)
    return merged


def to_ensemble(
    doc: PajekDocument,
    symmetrize: bool = True,
    binarize: bool = True,
    hidden: tuple[int, ...] = (),
) -> GraphEnsemble:
    """Build a GraphEnsemble from the document's relations.

    Parallel links between the same pair are summed before binarization.
    Arcs are symmetrized by max(w_ij, w_ji); self-loops are dropped with a
    warning since shift operators are hollow.
    """
    if not doc.relations:
        raise IngestError("document has no edge or arc sections")
    graphs = []
    for rel in doc.relations:
        w = np.zeros((doc.n, doc.n))
        dropped = 0
        for i, j, weight in rel.links:
            if i == j:
                dropped += 1
                continue
            w[i - 1, j - 1] += weight
            if not rel.directed:
                w[j - 1, i - 1] += weight
        if dropped:
            warnings.warn(
                f"relation {rel.name!r}: dropped {dropped} self-loop(s)", stacklevel=2
            )
        if symmetrize:
            w = np.maximum(w, w.T)
        elif not np.array_equal(w, w.T):
            raise IngestError(
                f"relation {rel.name!r} is directed; pass symmetrize=True to fold arcs"
            )
        if binarize:
            w = (w > 0).astype(float)
        np.fill_diagonal(w, 0.0)
        graphs.append(Gso(w))
    observed = tuple(i for i in range(doc.n) if i not in set(hidden))
    part = NodePartition(observed=observed, hidden=tuple(hidden))
    return GraphEnsemble(graphs=tuple(graphs), partition=part)


def load_dataset(path, symmetrize: bool = True, binarize: bool = True) -> GraphEnsemble:
    """Load a Pajek file, or a JSON manifest {"paths": [...]} of Pajek files."""
    path = Path(path)
    if path.suffix.lower() == ".json":
        manifest = json.loads(path.read_text(encoding="utf-8"))
        rel_paths = manifest.get("paths")
        if not rel_paths:
            raise IngestError(f"manifest {path} has no 'paths' entry")
        docs = [parse_pajek_file(path.parent / p) for p in rel_paths]
        doc = combine_documents(docs)
    else:
        doc = parse_pajek_file(path)
    return to_ensemble(doc, symmetrize=symmetrize, binarize=binarize)
