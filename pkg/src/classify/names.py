"""
Matrix Group Names

Classical matrix Lie groups as they appear in the isomorphism tables:
families, parameters, the doubled direct sum 2G = G + G, real dimensions
and the names of the matching matrix Lie algebras.
"""

import re
from dataclasses import dataclass, field
from enum import Enum

from ..errors import TableConsistencyError

DOUBLE = "²"


class Family(str, Enum):
    O = "O"                        # O(N)
    O_REAL_INDEF = "O_indef"       # O(r,s)
    O_C = "O_C"                    # O(N,C)
    O_H = "O_H"                    # O(N,H) = O*(2N)
    U = "U"                        # U(N)
    U_INDEF = "U_indef"            # U(r,s)
    SP = "Sp"                      # Sp(N), compact
    SP_INDEF = "Sp_indef"          # Sp(r,s)
    SP_REAL = "Sp_R"               # Sp(N,R)
    SP_C = "Sp_C"                  # Sp(N,C)
    GL_REAL = "GL_R"               # GL(N,R)
    GL_H = "GL_H"                  # GL(N,H)

    @property
    def stem(self) -> str:
        return {"O": "O", "U": "U", "S": "Sp", "G": "GL"}[self.value[0]]

    @property
    def field_suffix(self) -> str:
        if self.value.endswith("_C"):
            return "C"
        if self.value.endswith("_H"):
            return "H"
        if self.value.endswith("_R"):
            return "R"
        return ""

    @property
    def is_indefinite(self) -> bool:
        return self in (Family.O_REAL_INDEF, Family.U_INDEF, Family.SP_INDEF)

    @property
    def is_compact(self) -> bool:
        return self in (Family.O, Family.U, Family.SP)

    @property
    def is_linear(self) -> bool:
        return self in (Family.GL_REAL, Family.GL_H)


@dataclass(frozen=True)
class MatrixGroupName:
    family: Family
    params: tuple
    doubled: bool = False
    relation: str = field(default="isomorphic", compare=False)
    aliases: tuple = field(default=(), compare=False)

    def __post_init__(self):
        expected = 2 if self.family.is_indefinite else 1
        if len(self.params) != expected:
            raise TableConsistencyError(f"{self.family.value} takes {expected} parameters, got {self.params}")

    @property
    def size(self) -> int:
        """N for G(N,...), r + s for the indefinite families."""
        return sum(self.params)

    def __str__(self):
        args = [str(x) for x in self.params]
        if self.family.field_suffix:
            args.append(self.family.field_suffix)
        return f"{DOUBLE if self.doubled else ''}{self.family.stem}({','.join(args)})"

    def real_dimension(self) -> int:
        n = self.size
        f = self.family
        if f in (Family.O, Family.O_REAL_INDEF):
            dim = n * (n - 1) // 2
        elif f == Family.O_C:
            dim = n * (n - 1)
        elif f == Family.O_H:
            dim = n * (2 * n - 1)
        elif f in (Family.U, Family.U_INDEF, Family.GL_REAL):
            dim = n * n
        elif f in (Family.SP, Family.SP_INDEF, Family.SP_REAL):
            dim = n * (2 * n + 1)
        elif f == Family.SP_C:
            dim = 2 * n * (2 * n + 1)
        else:
            dim = 4 * n * n
        return 2 * dim if self.doubled else dim

    def lie_algebra(self) -> str:
        stem = {"O": "so", "U": "u", "Sp": "sp", "GL": "gl"}[self.family.stem]
        args = [str(x) for x in self.params]
        if self.family.field_suffix:
            args.append(self.family.field_suffix)
        return f"{DOUBLE if self.doubled else ''}{stem}({','.join(args)})"

    def with_relation(self, relation: str, aliases: tuple = ()) -> "MatrixGroupName":
        return MatrixGroupName(self.family, self.params, self.doubled, relation, aliases)

    def to_dict(self) -> dict:
        return {
            "name": str(self),
            "family": self.family.value,
            "params": list(self.params),
            "doubled": self.doubled,
            "lie_algebra": self.lie_algebra(),
            "real_dimension": self.real_dimension(),
            "relation": self.relation,
            "aliases": list(self.aliases),
        }

    @classmethod
    def parse(cls, text: str) -> "MatrixGroupName":
        """Read names such as O(1), 2O(4,4), Sp(1,C), GL(2,H) and the aliases SU(2), ²SU(2)."""
        raw = text.strip().replace(" ", "")
        if raw in ALIASES:
            target = cls.parse(ALIASES[raw])
            return target.with_relation(target.relation, (raw,))
        match = _NAME_PATTERN.fullmatch(raw)
        if not match:
            raise TableConsistencyError(f"unreadable group name '{text}'")
        doubled = bool(match.group("double"))
        stem = match.group("stem")
        parts = match.group("args").split(",")
        suffix = parts[-1] if parts[-1] in ("R", "C", "H") else ""
        numbers = tuple(int(x) for x in (parts[:-1] if suffix else parts))
        family = _FAMILY_BY_SHAPE.get((stem, suffix, len(numbers)))
        if family is None:
            raise TableConsistencyError(f"unknown group family in '{text}'")
        return cls(family, numbers, doubled)


_NAME_PATTERN = re.compile(rf"(?P<double>{DOUBLE}|2(?=[A-Z]))?(?P<stem>O|U|Sp|GL)\((?P<args>[0-9RCH,]+)\)")

_FAMILY_BY_SHAPE = {
    ("O", "", 1): Family.O,
    ("O", "", 2): Family.O_REAL_INDEF,
    ("O", "C", 1): Family.O_C,
    ("O", "H", 1): Family.O_H,
    ("U", "", 1): Family.U,
    ("U", "", 2): Family.U_INDEF,
    ("Sp", "", 1): Family.SP,
    ("Sp", "", 2): Family.SP_INDEF,
    ("Sp", "R", 1): Family.SP_REAL,
    ("Sp", "C", 1): Family.SP_C,
    ("GL", "R", 1): Family.GL_REAL,
    ("GL", "H", 1): Family.GL_H,
}

# names used by the classical Spin+ table for groups in the family list above
ALIASES = {
    "SU(2)": "Sp(1)",
    f"{DOUBLE}SU(2)": f"{DOUBLE}Sp(1)",
}
