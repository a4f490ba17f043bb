"""Models for flow diagrams grown on the triangular grid."""
from typing import List, Tuple

from pydantic import BaseModel, validator

from webbasis.models.word import Word

CELL_KINDS = ('letter', 'diamond', 'empty')
VERTEX_KINDS = ('merge', 'split', 'cup', 'cap')


class Vertex(BaseModel):
    """A trivalent vertex, a cup or a cap, with upward-oriented Z-labels."""
    kind: str
    inputs: Tuple[int, ...] = ()
    outputs: Tuple[int, ...] = ()

    class Config:
        frozen = True

    @validator('kind')
    def validate_kind(cls, v):
        if v not in VERTEX_KINDS:
            raise ValueError(f'Vertex kind must be one of {VERTEX_KINDS}')
        return v

    @validator('outputs')
    def validate_conservation(cls, v, values):
        inputs = values.get('inputs', ())
        if sum(inputs) != sum(v):
            raise ValueError(f'Labels not conserved: {inputs} -> {v}')
        return v

    def __str__(self) -> str:
        ins = ",".join(str(a) for a in self.inputs)
        outs = ",".join(str(a) for a in self.outputs)
        return f"{self.kind}({ins}->{outs})"


class Cell(BaseModel):
    """Model for one grid cell.

    ``x`` and ``y`` are the edges shared with the upper-left and upper-right
    neighbours, ``se`` and ``sw`` the edges leaving downwards. Letter cells
    use ``top`` for the strand label (+1 or -1) and leave x, y at 0.
    """
    i: int
    j: int
    kind: str
    x: int = 0
    y: int = 0
    se: int = 0
    sw: int = 0
    top: int = 0
    internal: Tuple[Vertex, ...] = ()

    class Config:
        frozen = True

    @validator('kind')
    def validate_kind(cls, v):
        if v not in CELL_KINDS:
            raise ValueError(f'Cell kind must be one of {CELL_KINDS}')
        return v

    @property
    def is_cup(self) -> bool:
        return any(vertex.kind == 'cup' for vertex in self.internal)

    def labels(self) -> List[int]:
        return [self.x, self.y, self.se, self.sw, self.top]


class FlowDiagram(BaseModel):
    """Model for the flow diagram of a word; cells are stored row-major from the top."""
    n: int
    word: Word
    cells: Tuple[Cell, ...] = ()

    class Config:
        frozen = True

    @validator('cells')
    def validate_shape(cls, v, values):
        word = values.get('word')
        if word is None:
            return v
        r = len(word)
        expected = [(i, j) for i in range(r) for j in range(r - i)]
        if [(c.i, c.j) for c in v] != expected:
            raise ValueError(f'Cells do not form a triangular grid of size {r}')
        return v

    @property
    def r(self) -> int:
        return len(self.word)

    def cell(self, i: int, j: int) -> Cell:
        if i < 0 or j < 0 or j >= self.r - i:
            raise IndexError(f"no cell ({i}, {j}) in a grid of size {self.r}")
        # row i starts after rows 0..i-1 of sizes r, r-1, ...
        return self.cells[i * self.r - i * (i - 1) // 2 + j]

    def row(self, i: int) -> List[Cell]:
        return [self.cell(i, j) for j in range(self.r - i)]

    @property
    def top(self) -> List[int]:
        return [c.top for c in self.row(0)] if self.r else []

    @property
    def oa_edges(self) -> List[int]:
        """Labels on side OA, read from A down to O."""
        return [self.cell(i, 0).sw for i in range(self.r)]

    @property
    def ob_edges(self) -> List[int]:
        """Labels on side OB, read from B down to O."""
        return [self.cell(i, self.r - 1 - i).se for i in range(self.r)]
