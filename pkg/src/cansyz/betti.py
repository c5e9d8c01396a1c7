"""Graded Betti tables: storage, layout, serialization."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class BettiTable:
    """β_{i,j} stored sparsely; rows are printed by j - i."""

    entries: dict[tuple[int, int], int]
    genus: int | None = None
    char: int | None = None

    def __post_init__(self):
        self.entries = {k: v for k, v in self.entries.items() if v}

    def get(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.get(*ij)

    def __eq__(self, other):
        return isinstance(other, BettiTable) and self.entries == other.entries

    def __hash__(self):
        return hash(tuple(sorted(self.entries.items())))

    @property
    def length(self) -> int:
        return max((i for i, _ in self.entries), default=0)

    def rows(self) -> list[list[int]]:
        """Grid rows[r][i] = β_{i,i+r}."""
        if not self.entries:
            return [[0]]
        top = max(j - i for i, j in self.entries)
        width = self.length + 1
        return [[self.get(i, i + r) for i in range(width)] for r in range(top + 1)]

    def row(self, r: int) -> list[int]:
        return [self.get(i, i + r) for i in range(self.length + 1)]

    def layout(self) -> str:
        """Dot-for-zero text layout, one line per row j - i."""
        rows = self.rows()
        cells = [[str(v) if v else "." for v in row] for row in rows]
        width = max(len(c) for row in cells for c in row)
        return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)

    def compact(self) -> str:
        """Rows separated by slashes, trailing zeros dropped: '1 / 10,16,1 / 1,16,10 / 1'."""
        out = []
        for row in self.rows():
            vals = [v for v in row if v]
            out.append(",".join(map(str, vals)) if vals else "0")
        return " / ".join(out)

    def k_polynomial(self) -> dict[int, int]:
        """Σ (-1)^i β_{i,j} t^j as {j: coefficient}."""
        out: dict[int, int] = {}
        for (i, j), v in self.entries.items():
            out[j] = out.get(j, 0) + (-1) ** i * v
        return {j: c for j, c in out.items() if c}

    def to_json(self) -> dict:
        return {"genus": self.genus, "char": self.char,
                "betti": [[i, j, v] for (i, j), v in sorted(self.entries.items())]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, data: dict | str) -> BettiTable:
        if isinstance(data, str):
            data = json.loads(data)
        return cls({(i, j): v for i, j, v in data["betti"]}, genus=data.get("genus"), char=data.get("char"))

    @classmethod
    def from_rows(cls, rows: list[list[int]], genus=None, char=None) -> BettiTable:
        ent = {}
        for r, row in enumerate(rows):
            for i, v in enumerate(row):
                if v:
                    ent[(i, i + r)] = v
        return cls(ent, genus=genus, char=char)

    def __str__(self):
        return self.layout()


def canonical_k_polynomial(g: int) -> dict[int, int]:
    """(1 - t)^(g-2) (1 + (g-2) t + (g-2) t^2 + t^3) as {degree: coefficient}.

    The h-vector of a canonical curve times the codimension factor: the
    Hilbert series of S/I_C is this over (1 - t)^g.
    """
    from math import comb
    h = [1, g - 2, g - 2, 1]
    out: dict[int, int] = {}
    for a in range(g - 1):
        ca = comb(g - 2, a) * (-1) ** a
        for b, hb in enumerate(h):
            out[a + b] = out.get(a + b, 0) + ca * hb
    return {j: c for j, c in out.items() if c}


def check_canonical_shape(table: BettiTable, g: int) -> dict[str, bool]:
    """Self-duality, K-polynomial identity and vanishing outside rows 0..3."""
    res = {}
    res["self_dual"] = all(table.get(g - 2 - i, g + 1 - j) == v for (i, j), v in table.entries.items())
    res["k_polynomial"] = table.k_polynomial() == canonical_k_polynomial(g)
    res["rows"] = all(0 <= j - i <= 3 for i, j in table.entries) and table.get(0, 0) == 1 and table.get(g - 2, g + 1) == 1
    res["quadrics"] = table.get(1, 2) == (g - 2) * (g - 3) // 2
    return res
