"""Positional indexing: tokenization, index construction, JSON-lines IO."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Iterable, TextIO

__all__ = ["tokenize", "PositionalIndex", "build_index"]

_TOKEN = re.compile(r"[^\W_]+", re.UNICODE)


def tokenize(text: str) -> list[tuple[str, int]]:
    """Lowercased alphanumeric runs with consecutive positions from 0."""
    return [(m.group(0).lower(), i) for i, m in enumerate(_TOKEN.finditer(text))]


@dataclass
class PositionalIndex:
    """Per-document token counts and term -> strictly increasing position lists."""

    docs: dict[str, tuple[int, dict[str, tuple[int, ...]]]] = field(default_factory=dict)

    def add_document(self, doc_id: str, text: str) -> None:
        if doc_id in self.docs:
            raise ValueError(f"duplicate document id: {doc_id!r}")
        postings: dict[str, list[int]] = {}
        length = 0
        for term, pos in tokenize(text):
            postings.setdefault(term, []).append(pos)
            length = pos + 1
        self.docs[doc_id] = (length, {t: tuple(ps) for t, ps in postings.items()})

    def doc_ids(self) -> list[str]:
        return list(self.docs)

    def length(self, doc_id: str) -> int:
        return self.docs[doc_id][0]

    def positions(self, doc_id: str, term: str) -> tuple[int, ...]:
        """Positions of term in the document; empty when absent."""
        return self.docs[doc_id][1].get(term, ())

    # one JSON object per line: {"doc":, "length":, "postings": {term: [..]}}
    def dump_jsonl(self, fh: TextIO) -> None:
        for doc_id, (length, postings) in self.docs.items():
            record = {
                "doc": doc_id,
                "length": length,
                "postings": {t: list(postings[t]) for t in sorted(postings)},
            }
            fh.write(json.dumps(record, ensure_ascii=False) + "\n")

    @classmethod
    def load_jsonl(cls, fh: TextIO) -> "PositionalIndex":
        index = cls()
        for line_no, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            try:
                record = json.loads(line)
                doc_id = record["doc"]
                length = record["length"]
                postings = {
                    term: tuple(int(p) for p in ps)
                    for term, ps in record["postings"].items()
                }
            except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
                raise ValueError(f"bad index record on line {line_no}: {exc}") from exc
            if doc_id in index.docs:
                raise ValueError(f"duplicate document id: {doc_id!r}")
            for term, ps in postings.items():
                if any(q <= p for p, q in zip(ps, ps[1:])) or (ps and (ps[0] < 0 or ps[-1] >= length)):
                    raise ValueError(f"bad positions for {term!r} in {doc_id!r}")
                if not ps:
                    raise ValueError(f"empty position list for {term!r} in {doc_id!r}")
            index.docs[doc_id] = (length, postings)
        return index


def build_index(docs: Iterable[tuple[str, str]]) -> PositionalIndex:
    index = PositionalIndex()
    for doc_id, text in docs:
        index.add_document(doc_id, text)
    return index
