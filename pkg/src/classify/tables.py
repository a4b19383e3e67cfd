"""
Classification Tables

The isomorphism tables of the five groups, rows n mod 8 and columns
p - q mod 8, written down cell by cell. Sizes are 2^{(n - offset)/2}; a
cell with a compact entry switches to it on the boundary signatures.

Alongside the tables sit the case lists of the two classification
theorems, the 8x8 table of G2, and the classical Spin+ table. The
cross-check runs them all against classify().
"""

import logging
from dataclasses import dataclass
from typing import Optional

from ..errors import SignatureError, TableConsistencyError
from ..groups import FIVE_GROUPS, GroupId, lie_algebra_dimension
from ..multivector import Signature, as_signature
from ..reports import Report, check
from .names import ALIASES, Family, MatrixGroupName

logger = logging.getLogger(__name__)

SPIN_COINCIDENCE_N_MAX = 5


def _pow2(exponent2: int) -> int:
    """2^{exponent2 / 2}; exponent2 must be even and nonnegative."""
    if exponent2 < 0 or exponent2 % 2:
        raise TableConsistencyError(f"2^({exponent2}/2) is not a matrix size")
    return 1 << (exponent2 // 2)


@dataclass(frozen=True)
class Entry:
    """A group name template: family with size 2^{(n - offset)/2}."""

    family: Family
    offset: int
    doubled: bool = False

    def build(self, n: int) -> MatrixGroupName:
        size = _pow2(n - self.offset)
        params = (size, size) if self.family.is_indefinite else (size,)
        return MatrixGroupName(self.family, params, self.doubled)


@dataclass(frozen=True)
class Cell:
    split: Entry
    compact: Optional[Entry] = None


def _cells(rows: dict) -> dict:
    """Expand {(row residues): {(col residues): cell}} to {(n mod 8, d mod 8): cell}."""
    out = {}
    for row_keys, columns in rows.items():
        for col_keys, cell in columns.items():
            for r in row_keys:
                for c in col_keys:
                    out[(r, c)] = cell
    return out


def _E(family, offset, doubled=False):
    return Entry(family, offset, doubled)


F = Family

# boundary rule per group: which signatures take the compact entry
COMPACT_WHEN = {
    GroupId.G12: "p=0",
    GroupId.G23: "q=0",
    GroupId.G2I1: "q=0",
    GroupId.G2I3: "p=0",
    GroupId.G2: "(n,0),(0,n)",
}

CONCLUSION_TABLES = {
    GroupId.G12: {
        "even": _cells({
            (0, 6): {
                (0, 2): Cell(_E(F.O_REAL_INDEF, 2), _E(F.O, 0)),
                (4, 6): Cell(_E(F.O_H, 2)),
            },
            (2, 4): {
                (0, 2): Cell(_E(F.SP_REAL, 2)),
                (4, 6): Cell(_E(F.SP_INDEF, 4), _E(F.SP, 2)),
            },
        }),
        "odd": _cells({
            (7,): {
                (1,): Cell(_E(F.O_REAL_INDEF, 3, True), _E(F.O, 1, True)),
                (3, 7): Cell(_E(F.O_C, 1)),
                (5,): Cell(_E(F.O_H, 3, True)),
            },
            (3,): {
                (1,): Cell(_E(F.SP_REAL, 3, True)),
                (3, 7): Cell(_E(F.SP_C, 3)),
                (5,): Cell(_E(F.SP_INDEF, 5, True), _E(F.SP, 3, True)),
            },
            (1, 5): {
                (1,): Cell(_E(F.GL_REAL, 1)),
                (3, 7): Cell(_E(F.U_INDEF, 3), _E(F.U, 1)),
                (5,): Cell(_E(F.GL_H, 3)),
            },
        }),
    },
    GroupId.G23: {
        "even": _cells({
            (0, 2): {
                (0, 2): Cell(_E(F.O_REAL_INDEF, 2), _E(F.O, 0)),
                (4, 6): Cell(_E(F.O_H, 2)),
            },
            (4, 6): {
                (0, 2): Cell(_E(F.SP_REAL, 2)),
                (4, 6): Cell(_E(F.SP_INDEF, 4), _E(F.SP, 2)),
            },
        }),
        "odd": _cells({
            (1,): {
                (1,): Cell(_E(F.O_REAL_INDEF, 3, True), _E(F.O, 1, True)),
                (3, 7): Cell(_E(F.O_C, 1)),
                (5,): Cell(_E(F.O_H, 3, True)),
            },
            (5,): {
                (1,): Cell(_E(F.SP_REAL, 3, True)),
                (3, 7): Cell(_E(F.SP_C, 3)),
                (5,): Cell(_E(F.SP_INDEF, 5, True), _E(F.SP, 3, True)),
            },
            (3, 7): {
                (1,): Cell(_E(F.GL_REAL, 1)),
                (3, 7): Cell(_E(F.U_INDEF, 3), _E(F.U, 1)),
                (5,): Cell(_E(F.GL_H, 3)),
            },
        }),
    },
    GroupId.G2I1: {
        "even": _cells({
            (0, 6): {
                (0, 6): Cell(_E(F.O_REAL_INDEF, 2), _E(F.O, 0)),
                (2, 4): Cell(_E(F.O_H, 2)),
            },
            (2, 4): {
                (0, 6): Cell(_E(F.SP_REAL, 2)),
                (2, 4): Cell(_E(F.SP_INDEF, 4), _E(F.SP, 2)),
            },
        }),
        "odd": _cells({
            (7,): {
                (7,): Cell(_E(F.O_REAL_INDEF, 3, True), _E(F.O, 1, True)),
                (1, 5): Cell(_E(F.O_C, 1)),
                (3,): Cell(_E(F.O_H, 3, True)),
            },
            (3,): {
                (7,): Cell(_E(F.SP_REAL, 3, True)),
                (1, 5): Cell(_E(F.SP_C, 3)),
                (3,): Cell(_E(F.SP_INDEF, 5, True), _E(F.SP, 3, True)),
            },
            (1, 5): {
                (7,): Cell(_E(F.GL_REAL, 1)),
                (1, 5): Cell(_E(F.U_INDEF, 3), _E(F.U, 1)),
                (3,): Cell(_E(F.GL_H, 3)),
            },
        }),
    },
    GroupId.G2I3: {
        "even": _cells({
            (0, 2): {
                (0, 6): Cell(_E(F.O_REAL_INDEF, 2), _E(F.O, 0)),
                (2, 4): Cell(_E(F.O_H, 2)),
            },
            (4, 6): {
                (0, 6): Cell(_E(F.SP_REAL, 2)),
                (2, 4): Cell(_E(F.SP_INDEF, 4), _E(F.SP, 2)),
            },
        }),
        "odd": _cells({
            (1,): {
                (7,): Cell(_E(F.O_REAL_INDEF, 3, True), _E(F.O, 1, True)),
                (1, 5): Cell(_E(F.O_C, 1)),
                (3,): Cell(_E(F.O_H, 3, True)),
            },
            (5,): {
                (7,): Cell(_E(F.SP_REAL, 3, True)),
                (1, 5): Cell(_E(F.SP_C, 3)),
                (3,): Cell(_E(F.SP_INDEF, 5, True), _E(F.SP, 3, True)),
            },
            (3, 7): {
                (7,): Cell(_E(F.GL_REAL, 1)),
                (1, 5): Cell(_E(F.U_INDEF, 3), _E(F.U, 1)),
                (3,): Cell(_E(F.GL_H, 3)),
            },
        }),
    },
    GroupId.G2: {
        "odd": _cells({
            (1, 7): {
                (1, 7): Cell(_E(F.O_REAL_INDEF, 3), _E(F.O, 1)),
                (3, 5): Cell(_E(F.O_H, 3)),
            },
            (3, 5): {
                (1, 7): Cell(_E(F.SP_REAL, 3)),
                (3, 5): Cell(_E(F.SP_INDEF, 5), _E(F.SP, 3)),
            },
        }),
        "even": _cells({
            (0,): {
                (0,): Cell(_E(F.O_REAL_INDEF, 4, True), _E(F.O, 2, True)),
                (2, 6): Cell(_E(F.O_C, 2)),
                (4,): Cell(_E(F.O_H, 4, True)),
            },
            (4,): {
                (0,): Cell(_E(F.SP_REAL, 4, True)),
                (2, 6): Cell(_E(F.SP_C, 4)),
                (4,): Cell(_E(F.SP_INDEF, 6, True), _E(F.SP, 4, True)),
            },
            (2, 6): {
                (0,): Cell(_E(F.GL_REAL, 2)),
                (2, 6): Cell(_E(F.U_INDEF, 4), _E(F.U, 2)),
                (4,): Cell(_E(F.GL_H, 4)),
            },
        }),
    },
}

# Places where the printed tables or theorems read differently from the
# entry used here. They are reported, not failed.
KNOWN_TYPOS = {
    "conclusion-compact-unitary": (
        "compact unitary cells of the conclusion tables print U((n-1)/2) (G2: U((n-2)/2)); "
        "the theorem form U(2^{(n-1)/2}) (G2: U(2^{(n-2)/2})) is used"
    ),
    "theorem-g2-unitary-corner": (
        "the compact unitary case of G2 prints (p,q)=(0,n),(0,n); read as (n,0),(0,n)"
    ),
}


def _is_compact_signature(g: GroupId, sig: Signature) -> bool:
    rule = COMPACT_WHEN[g]
    if rule == "p=0":
        return sig.p == 0
    if rule == "q=0":
        return sig.q == 0
    return sig.p == 0 or sig.q == 0


def classify(g, sig) -> MatrixGroupName:
    """Table entry of the group over sig; Spin+ reads the G2 entry."""
    g = GroupId.parse(g) if isinstance(g, str) else g
    sig = as_signature(sig)
    if g == GroupId.SPIN_PLUS:
        name = classify(GroupId.G2, sig)
        if sig.n <= SPIN_COINCIDENCE_N_MAX:
            aliases = tuple(a for a, target in ALIASES.items() if target == str(name))
            return name.with_relation("isomorphic", aliases)
        return name.with_relation("contains")
    if sig.n == 0:
        return MatrixGroupName(Family.O, (1,))
    parity = "even" if sig.n % 2 == 0 else "odd"
    cell = CONCLUSION_TABLES[g][parity].get((sig.n % 8, sig.diff_mod8))
    if cell is None:
        raise TableConsistencyError(f"no table cell for {g.label} over {sig.label()}")
    entry = cell.compact if (cell.compact is not None and _is_compact_signature(g, sig)) else cell.split
    return entry.build(sig.n)


# ----------------------------------------------------------------------
# Theorem case lists

@dataclass(frozen=True)
class Case:
    """One line of a theorem: entry plus the condition it holds under."""

    entry: Entry
    n_mod: Optional[tuple] = None
    corner: Optional[str] = None      # "n0", "0n" or "both"
    nonzero: Optional[str] = None     # "p", "q" or "pq"
    typo: Optional[str] = None

    def matches(self, sig: Signature) -> bool:
        if self.n_mod is not None and sig.n % 8 not in self.n_mod:
            return False
        if self.corner == "n0" and sig.q != 0:
            return False
        if self.corner == "0n" and sig.p != 0:
            return False
        if self.corner == "both" and sig.p != 0 and sig.q != 0:
            return False
        if self.nonzero == "p" and sig.p == 0:
            return False
        if self.nonzero == "q" and sig.q == 0:
            return False
        if self.nonzero == "pq" and (sig.p == 0 or sig.q == 0):
            return False
        return True


EVEN = (0, 2, 4, 6)
ODD = (1, 3, 5, 7)

# complex classes: unitary, complex symplectic and complex orthogonal groups
THEOREM_COMPLEX = {
    GroupId.G23: ((3, 7), [
        Case(_E(F.U, 1), corner="n0"),
        Case(_E(F.U_INDEF, 3), n_mod=(3, 7), nonzero="q"),
        Case(_E(F.SP_C, 3), n_mod=(5,)),
        Case(_E(F.O_C, 1), n_mod=(1,)),
    ]),
    GroupId.G12: ((3, 7), [
        Case(_E(F.U, 1), corner="0n"),
        Case(_E(F.U_INDEF, 3), n_mod=(1, 5), nonzero="p"),
        Case(_E(F.SP_C, 3), n_mod=(3,)),
        Case(_E(F.O_C, 1), n_mod=(7,)),
    ]),
    GroupId.G2I1: ((1, 5), [
        Case(_E(F.U, 1), corner="n0"),
        Case(_E(F.U_INDEF, 3), n_mod=(1, 5), nonzero="q"),
        Case(_E(F.SP_C, 3), n_mod=(3,)),
        Case(_E(F.O_C, 1), n_mod=(7,)),
    ]),
    GroupId.G2I3: ((1, 5), [
        Case(_E(F.U, 1), corner="0n"),
        Case(_E(F.U_INDEF, 3), n_mod=(3, 7), nonzero="p"),
        Case(_E(F.SP_C, 3), n_mod=(5,)),
        Case(_E(F.O_C, 1), n_mod=(1,)),
    ]),
    GroupId.G2: ((2, 6), [
        Case(_E(F.U, 2), corner="both", typo="theorem-g2-unitary-corner"),
        Case(_E(F.U_INDEF, 4), n_mod=(2, 6), nonzero="pq"),
        Case(_E(F.SP_C, 4), n_mod=(4,)),
        Case(_E(F.O_C, 2), n_mod=(0,)),
    ]),
}

# quaternionic classes: compact and indefinite symplectic, quaternionic
# orthogonal and quaternionic linear groups
THEOREM_QUATERNIONIC = {
    GroupId.G23: ((4, 5, 6), [
        Case(_E(F.SP, 2), n_mod=EVEN, corner="n0"),
        Case(_E(F.SP_INDEF, 4), n_mod=(4, 6), nonzero="q"),
        Case(_E(F.O_H, 2), n_mod=(0, 2)),
        Case(_E(F.SP, 3, True), n_mod=ODD, corner="n0"),
        Case(_E(F.SP_INDEF, 5, True), n_mod=(5,), nonzero="q"),
        Case(_E(F.O_H, 3, True), n_mod=(1,)),
        Case(_E(F.GL_H, 3), n_mod=(3, 7)),
    ]),
    GroupId.G12: ((4, 5, 6), [
        Case(_E(F.SP, 2), n_mod=EVEN, corner="0n"),
        Case(_E(F.SP_INDEF, 4), n_mod=(2, 4), nonzero="p"),
        Case(_E(F.O_H, 2), n_mod=(0, 6)),
        Case(_E(F.SP, 3, True), n_mod=ODD, corner="0n"),
        Case(_E(F.SP_INDEF, 5, True), n_mod=(3,), nonzero="p"),
        Case(_E(F.O_H, 3, True), n_mod=(7,)),
        Case(_E(F.GL_H, 3), n_mod=(1, 5)),
    ]),
    GroupId.G2I1: ((2, 3, 4), [
        Case(_E(F.SP, 2), n_mod=EVEN, corner="n0"),
        Case(_E(F.SP_INDEF, 4), n_mod=(2, 4), nonzero="q"),
        Case(_E(F.O_H, 2), n_mod=(0, 6)),
        Case(_E(F.SP, 3, True), n_mod=ODD, corner="n0"),
        Case(_E(F.SP_INDEF, 5, True), n_mod=(3,), nonzero="q"),
        Case(_E(F.O_H, 3, True), n_mod=(7,)),
        Case(_E(F.GL_H, 3), n_mod=(1, 5)),
    ]),
    GroupId.G2I3: ((2, 3, 4), [
        Case(_E(F.SP, 2), n_mod=EVEN, corner="0n"),
        Case(_E(F.SP_INDEF, 4), n_mod=(4, 6), nonzero="p"),
        Case(_E(F.O_H, 2), n_mod=(0, 2)),
        Case(_E(F.SP, 3, True), n_mod=ODD, corner="0n"),
        Case(_E(F.SP_INDEF, 5, True), n_mod=(5,), nonzero="p"),
        Case(_E(F.O_H, 3, True), n_mod=(1,)),
        Case(_E(F.GL_H, 3), n_mod=(3, 7)),
    ]),
    GroupId.G2: ((3, 4, 5), [
        Case(_E(F.SP, 3), n_mod=ODD, corner="both"),
        Case(_E(F.SP_INDEF, 5), n_mod=(3, 5), nonzero="pq"),
        Case(_E(F.O_H, 3), n_mod=(1, 7)),
        Case(_E(F.SP, 4, True), n_mod=EVEN, corner="both"),
        Case(_E(F.SP_INDEF, 6, True), n_mod=(4,), nonzero="pq"),
        Case(_E(F.O_H, 4, True), n_mod=(0,)),
        Case(_E(F.GL_H, 4), n_mod=(2, 6)),
    ]),
}

THEOREMS = {"complex": THEOREM_COMPLEX, "quaternionic": THEOREM_QUATERNIONIC}


def theorem_case(theorem: str, g: GroupId, sig) -> Optional[Case]:
    """First case of the theorem that applies to g over sig, or None when sig is not covered."""
    sig = as_signature(sig)
    residues, cases = THEOREMS[theorem][g]
    if sig.n == 0 or sig.diff_mod8 not in residues:
        return None
    for case in cases:
        if case.matches(sig):
            return case
    raise TableConsistencyError(f"no case of the {theorem} theorem covers {g.label} over {sig.label()}")


# ----------------------------------------------------------------------
# Fixtures: the G2 table and the classical Spin+ table, p down, q across

G2_TABLE = [
    ["O(1)", "O(1)", "U(1)", "Sp(1)", "²Sp(1)", "Sp(2)", "U(4)", "O(8)"],
    ["O(1)", "GL(1,R)", "Sp(1,R)", "Sp(1,C)", "Sp(1,1)", "GL(2,H)", "O(4,H)", "O(8,C)"],
    ["U(1)", "Sp(1,R)", "²Sp(1,R)", "Sp(2,R)", "U(2,2)", "O(4,H)", "²O(4,H)", "O(8,H)"],
    ["Sp(1)", "Sp(1,C)", "Sp(2,R)", "GL(4,R)", "O(4,4)", "O(8,C)", "O(8,H)", "GL(8,H)"],
    ["²Sp(1)", "Sp(1,1)", "U(2,2)", "O(4,4)", "²O(4,4)", "O(8,8)", "U(8,8)", "Sp(8,8)"],
    ["Sp(2)", "GL(2,H)", "O(4,H)", "O(8,C)", "O(8,8)", "GL(16,R)", "Sp(16,R)", "Sp(16,C)"],
    ["U(4)", "O(4,H)", "²O(4,H)", "O(8,H)", "U(8,8)", "Sp(16,R)", "²Sp(16,R)", "Sp(32,R)"],
    ["O(8)", "O(8,C)", "O(8,H)", "GL(8,H)", "Sp(8,8)", "Sp(16,C)", "Sp(32,R)", "GL(64,R)"],
]

SPIN_TABLE = [
    ["O(1)", "O(1)", "U(1)", "SU(2)", "²SU(2)", "Sp(2)", "SU(4)"],
    ["O(1)", "GL(1,R)", "Sp(1,R)", "Sp(1,C)", "Sp(1,1)", "SL(2,H)", None],
    ["U(1)", "Sp(1,R)", "²Sp(1,R)", "Sp(2,R)", "SU(2,2)", None, None],
    ["SU(2)", "Sp(1,C)", "Sp(2,R)", "SL(4,R)", None, None, None],
    ["²SU(2)", "Sp(1,1)", "SU(2,2)", None, None, None, None],
    ["Sp(2)", "SL(2,H)", None, None, None, None, None],
    ["SU(4)", None, None, None, None, None, None],
]

# dimension identities quoted with the classification proofs, as
# (name builder, closed form, n values it applies to)
DIMENSION_EQUALITIES = (
    ("O(2^{(n-1)/2},C) = 2^{n-1} - 2^{(n-1)/2}",
     lambda n: _E(F.O_C, 1).build(n), lambda n: 2 ** (n - 1) - _pow2(n - 1), ODD),
    ("Sp(2^{(n-3)/2},C) = 2^{n-1} + 2^{(n-1)/2}",
     lambda n: _E(F.SP_C, 3).build(n), lambda n: 2 ** (n - 1) + _pow2(n - 1), ODD),
    ("Sp(2^{(n-4)/2},2^{(n-4)/2}) = 2^{n-1} + 2^{(n-2)/2}",
     lambda n: _E(F.SP_INDEF, 4).build(n), lambda n: 2 ** (n - 1) + _pow2(n - 2), EVEN),
    ("O(2^{(n-2)/2},H) = 2^{n-1} - 2^{(n-2)/2}",
     lambda n: _E(F.O_H, 2).build(n), lambda n: 2 ** (n - 1) - _pow2(n - 2), EVEN),
)


# ----------------------------------------------------------------------
# Cross-check

def signatures_up_to(n_max: int, n_min: int = 0) -> list:
    return [Signature(p, n - p) for n in range(n_min, n_max + 1) for p in range(n + 1)]


def _safe_classify(g, sig):
    try:
        return classify(g, sig), None
    except (TableConsistencyError, SignatureError) as e:
        return None, str(e)


def _theorem_report(theorem: str, n_max: int) -> Report:
    mismatches, typos = [], set()
    checked = 0
    for g in FIVE_GROUPS:
        for sig in signatures_up_to(n_max, 1):
            try:
                case = theorem_case(theorem, g, sig)
                if case is None:
                    continue
                expected = case.entry.build(sig.n)
            except TableConsistencyError as e:
                mismatches.append({"group": g.label, "signature": [sig.p, sig.q], "error": str(e)})
                continue
            checked += 1
            got, error = _safe_classify(g, sig)
            if got != expected:
                mismatches.append({
                    "group": g.label, "signature": [sig.p, sig.q],
                    "theorem": str(expected), "table": str(got) if got else error,
                })
            elif case.typo:
                typos.add(case.typo)
            if case.entry.family == Family.U and case.corner:
                typos.add("conclusion-compact-unitary")
    for key in sorted(typos):
        logger.warning(f"known typo ({theorem} theorem): {KNOWN_TYPOS[key]}")
    return check(
        "theorem-cases",
        not mismatches,
        theorem=theorem,
        n_max=n_max,
        checked=checked,
        mismatches=mismatches[:10],
        typo=[KNOWN_TYPOS[k] for k in sorted(typos)],
    )


def _fixture_report(claim: str, table: list, g: GroupId, n_max=None) -> Report:
    mismatches = []
    checked = 0
    for p, row in enumerate(table):
        for q, text in enumerate(row):
            if text is None or (n_max is not None and p + q > n_max):
                continue
            checked += 1
            expected = MatrixGroupName.parse(text)
            got, error = _safe_classify(g, Signature(p, q))
            if got != expected:
                mismatches.append({"signature": [p, q], "table": text, "classified": str(got) if got else error})
    return check(claim, not mismatches, group=g.label, checked=checked, mismatches=mismatches)


def _transport_consistency(n_max: int) -> Report:
    """Table-level isomorphisms between the groups."""
    mismatches = []
    pairs = 0

    def compare(left, right, label):
        nonlocal pairs
        pairs += 1
        a, ea = _safe_classify(*left)
        b, eb = _safe_classify(*right)
        if a is None or a != b:
            mismatches.append({"relation": label, "left": str(a) if a else ea, "right": str(b) if b else eb})

    for sig in signatures_up_to(n_max, 1):
        p, q = sig.p, sig.q
        swapped = Signature(q, p)
        compare((GroupId.G2I1, sig), (GroupId.G12, swapped), f"G2i1{sig.label()[2:]} = G12({q},{p})")
        compare((GroupId.G2I3, sig), (GroupId.G23, swapped), f"G2i3{sig.label()[2:]} = G23({q},{p})")
        compare((GroupId.G2, sig), (GroupId.G2, swapped), f"G2{sig.label()[2:]} = G2({q},{p})")
        if q >= 1:
            compare((GroupId.G2, sig), (GroupId.G12, Signature(p, q - 1)), f"G2{sig.label()[2:]} = G12({p},{q - 1})")
        if p >= 1:
            compare((GroupId.G2, sig), (GroupId.G12, Signature(q, p - 1)), f"G2{sig.label()[2:]} = G12({q},{p - 1})")
    return check("transport-consistency", not mismatches, n_max=n_max, pairs=pairs, mismatches=mismatches[:10])


def _dimension_report(n_max: int) -> Report:
    mismatches = []
    for g in FIVE_GROUPS:
        for sig in signatures_up_to(n_max, 1):
            binomial, _ = lie_algebra_dimension(g, sig)
            name, error = _safe_classify(g, sig)
            if name is None or name.real_dimension() != binomial:
                mismatches.append({
                    "group": g.label, "signature": [sig.p, sig.q], "algebra": binomial,
                    "name": str(name) if name else error, "matrix": name.real_dimension() if name else None,
                })
    stated = []
    for label, build, closed, residues in DIMENSION_EQUALITIES:
        for n in range(1, n_max + 1):
            if n % 8 not in residues:
                continue
            try:
                ok = build(n).real_dimension() == closed(n)
            except TableConsistencyError:
                continue
            if not ok:
                stated.append({"identity": label, "n": n})
    return check(
        "classification-dimension",
        not mismatches and not stated,
        n_max=n_max,
        mismatches=mismatches[:10],
        stated_identity_failures=stated,
    )


def cross_check_tables(n_max: int = 16) -> list:
    """All table cross-checks, one report each."""
    reports = [
        _fixture_report("g2-table", G2_TABLE, GroupId.G2),
        _fixture_report("spin-table", SPIN_TABLE, GroupId.SPIN_PLUS, n_max=SPIN_COINCIDENCE_N_MAX),
        _theorem_report("complex", n_max),
        _theorem_report("quaternionic", n_max),
        _transport_consistency(n_max),
        _dimension_report(n_max),
    ]
    for report in reports:
        if not report.passed:
            logger.error(f"table cross-check failed: {report.claim} {report.details.get('mismatches')}")
    return reports
