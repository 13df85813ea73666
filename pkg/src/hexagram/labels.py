"""The symmetric-group side of the hexagram: 2x3 symbols, the outer
automorphism between S(letters) and S(digits), dual labels k(w,xy),
the action on label triples, and the orbit decomposition.

The automorphism zeta is built from its images on the 15 letter
transpositions and extended multiplicatively; the inverse table is kept
only as a validation fixture.  Everything is exhaustively checkable
(|S6| = 720) and the checks run at construction time.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations

from .errors import ConsistencyError, UsageError

LETTERS = "ABCDEF"
DIGITS = "123456"

# zeta on transpositions: letter pair -> product of three digit 2-cycles
_ZETA_TABLE = {
    "AB": "14.25.36", "AC": "16.24.35", "AD": "13.26.45",
    "AE": "12.34.56", "AF": "15.23.46",
    "BC": "15.26.34", "BD": "12.35.46", "BE": "16.23.45", "BF": "13.24.56",
    "CD": "14.23.56", "CE": "13.25.46", "CF": "12.36.45",
    "DE": "15.24.36", "DF": "16.25.34",
    "EF": "14.26.35",
}

# zeta^{-1} on transpositions: digit pair -> product of three letter 2-cycles
_ZETA_INV_TABLE = {
    "12": "AE.BD.CF", "13": "AD.BF.CE", "14": "AB.CD.EF",
    "15": "AF.BC.DE", "16": "AC.BE.DF",
    "23": "AF.BE.CD", "24": "AC.BF.DE", "25": "AB.CE.DF", "26": "AD.BC.EF",
    "34": "AE.BC.DF", "35": "AC.BD.EF", "36": "AB.CF.DE",
    "45": "AD.BE.CF", "46": "AF.BD.CE",
    "56": "AE.BF.CD",
}


@dataclass(frozen=True, order=True)
class Permutation:
    """A permutation of {0..5}; images[i] is the image of i.

    The same class serves S(letters) and S(digits); the alphabet only
    matters for parsing and printing.
    """

    images: tuple[int, int, int, int, int, int]

    def __post_init__(self):
        if sorted(self.images) != [0, 1, 2, 3, 4, 5]:
            raise UsageError(f"not a permutation of 6 points: {self.images}")

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """(p * q)(x) = p(q(x))."""
        q = other.images
        p = self.images
        return Permutation(tuple(p[q[i]] for i in range(6)))

    def inverse(self) -> "Permutation":
        inv = [0] * 6
        for i, v in enumerate(self.images):
            inv[v] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return self.images == (0, 1, 2, 3, 4, 5)

    def cycles(self) -> list[tuple[int, ...]]:
        seen = [False] * 6
        out = []
        for i in range(6):
            if seen[i]:
                continue
            c = [i]
            seen[i] = True
            j = self.images[i]
            while j != i:
                c.append(j)
                seen[j] = True
                j = self.images[j]
            if len(c) > 1:
                out.append(tuple(c))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        lens = sorted((len(c) for c in self.cycles()), reverse=True)
        return tuple(lens)

    def transpositions(self) -> list[tuple[int, int]]:
        """A factorisation into transpositions (cycle by cycle), listed
        so that the product left-to-right (rightmost applied first)
        recovers the permutation: (a1 .. ak) = (a1 ak) ... (a1 a2)."""
        out = []
        for c in self.cycles():
            a = c[0]
            for b in reversed(c[1:]):
                out.append((a, b))
        return out

    def to_cycle_string(self, alphabet: str) -> str:
        cs = self.cycles()
        if not cs:
            return "e"
        return "".join("(" + " ".join(alphabet[i] for i in c) + ")" for c in cs)

    def __repr__(self):
        return self.to_cycle_string(DIGITS)


IDENTITY = Permutation((0, 1, 2, 3, 4, 5))


def transposition(i: int, j: int) -> Permutation:
    imgs = list(range(6))
    imgs[i], imgs[j] = j, i
    return Permutation(tuple(imgs))


def perm_from_pairs(pairs) -> Permutation:
    """Product of disjoint 2-cycles given as index pairs."""
    imgs = list(range(6))
    for i, j in pairs:
        if imgs[i] != i or imgs[j] != j:
            raise UsageError(f"cycles not disjoint: {pairs}")
        imgs[i], imgs[j] = j, i
    return Permutation(tuple(imgs))


def _parse_table_perm(entry: str, alphabet: str) -> Permutation:
    pairs = []
    for chunk in entry.split("."):
        a, b = chunk[0], chunk[1]
        pairs.append((alphabet.index(a), alphabet.index(b)))
    return perm_from_pairs(pairs)


@lru_cache(maxsize=1)
def all_permutations() -> tuple[Permutation, ...]:
    return tuple(Permutation(p) for p in permutations(range(6)))


@lru_cache(maxsize=1)
def _zeta_map() -> dict[Permutation, Permutation]:
    """zeta on all 720 elements, extended from the transposition table
    and validated as an isomorphism at construction time."""
    table = {}
    for key, val in _ZETA_TABLE.items():
        i, j = LETTERS.index(key[0]), LETTERS.index(key[1])
        table[frozenset((i, j))] = _parse_table_perm(val, DIGITS)

    def apply(sigma: Permutation) -> Permutation:
        out = IDENTITY
        for i, j in sigma.transpositions():
            out = out * table[frozenset((i, j))]
        return out

    zmap = {}
    for sigma in all_permutations():
        zmap[sigma] = apply(sigma)
    # construction-time validation: bijectivity and the homomorphism law
    # against every transposition generator (which forces it everywhere)
    if len(set(zmap.values())) != 720:
        raise ConsistencyError("zeta table extension is not a bijection")
    for i, j in combinations(range(6), 2):
        t = transposition(i, j)
        zt = zmap[t]
        for sigma in all_permutations():
            if zmap[t * sigma] != zt * zmap[sigma]:
                raise ConsistencyError(
                    "zeta table extension is not a homomorphism")
    for key, val in _ZETA_INV_TABLE.items():
        i, j = DIGITS.index(key[0]), DIGITS.index(key[1])
        expected = _parse_table_perm(val, LETTERS)
        if zmap[expected] != transposition(i, j):
            raise ConsistencyError(
                f"inverse table mismatch for digit pair {key}")
    return zmap


@lru_cache(maxsize=1)
def _zeta_inv_map() -> dict[Permutation, Permutation]:
    return {v: k for k, v in _zeta_map().items()}


def zeta(sigma: Permutation) -> Permutation:
    """The outer isomorphism S(letters) -> S(digits)."""
    try:
        return _zeta_map()[sigma]
    except KeyError:
        raise UsageError(f"not an S6 element: {sigma!r}") from None


def zeta_inv(pi: Permutation) -> Permutation:
    """The inverse isomorphism S(digits) -> S(letters)."""
    try:
        return _zeta_inv_map()[pi]
    except KeyError:
        raise UsageError(f"not an S6 element: {pi!r}") from None


# ---------------------------------------------------------------------------
# Symbols and labels
# ---------------------------------------------------------------------------

def _canonical_rows(rows):
    """Lexicographically minimal among the 12 row/column shuffles."""
    top, bot = rows
    best = None
    for r0, r1 in ((top, bot), (bot, top)):
        for cols in permutations(range(3)):
            cand = (tuple(r0[c] for c in cols), tuple(r1[c] for c in cols))
            flat = cand[0] + cand[1]
            if best is None or flat < best[0]:
                best = (flat, cand)
    return best[1]


@dataclass(frozen=True, order=True)
class PascalSymbol:
    """A 2x3 arrangement of the six letters, canonicalised up to row and
    column shuffles (60 distinct symbols)."""

    rows: tuple[tuple[int, int, int], tuple[int, int, int]]

    def __post_init__(self):
        flat = self.rows[0] + self.rows[1]
        if sorted(flat) != [0, 1, 2, 3, 4, 5]:
            raise UsageError(f"symbol must contain each letter once: {self.rows}")
        object.__setattr__(self, "rows", _canonical_rows(self.rows))

    @classmethod
    def from_letters(cls, top: str, bottom: str) -> "PascalSymbol":
        return cls((tuple(LETTERS.index(ch) for ch in top.upper()),
                    tuple(LETTERS.index(ch) for ch in bottom.upper())))

    def matchings(self) -> tuple[Permutation, Permutation]:
        """The two 2+2+2 inter-row matchings (top_i with bottom_{i+1},
        and top_i with bottom_{i+2})."""
        top, bot = self.rows
        m1 = perm_from_pairs([(top[i], bot[(i + 1) % 3]) for i in range(3)])
        m2 = perm_from_pairs([(top[i], bot[(i + 2) % 3]) for i in range(3)])
        return m1, m2

    def permuted(self, sigma: Permutation) -> "PascalSymbol":
        """Apply a letter permutation to every entry."""
        top, bot = self.rows
        return PascalSymbol((tuple(sigma(i) for i in top),
                             tuple(sigma(i) for i in bot)))

    def __repr__(self):
        top, bot = self.rows
        return ("[" + "".join(LETTERS[i] for i in top) + "/"
                + "".join(LETTERS[i] for i in bot) + "]")


STANDARD_SYMBOL = PascalSymbol.from_letters("ABC", "FED")

_LABEL_RE = re.compile(r"^\s*k?\s*\(?\s*([1-6])\s*,\s*([1-6])\s*([1-6])\s*\)?\s*$")


@dataclass(frozen=True, order=True)
class PascalLabel:
    """The dual name k(w, xy) of a pascal; x < y and w not in {x, y}.

    Stored 1-based to match the customary notation.  The dataclass order
    (w, then the sorted pair) is the table's lexicographic order.
    """

    w: int
    x: int
    y: int

    def __post_init__(self):
        if not (1 <= self.w <= 6 and 1 <= self.x < self.y <= 6):
            raise UsageError(f"bad label data ({self.w},{self.x}{self.y})")
        if self.w in (self.x, self.y):
            raise UsageError(f"label digits must be distinct: ({self.w},{self.x}{self.y})")

    @classmethod
    def of(cls, w: int, a: int, b: int) -> "PascalLabel":
        return cls(w, min(a, b), max(a, b))

    @classmethod
    def parse(cls, text: str) -> "PascalLabel":
        m = _LABEL_RE.match(text)
        if not m:
            raise UsageError(f"cannot parse pascal label {text!r}")
        return cls.of(int(m.group(1)), int(m.group(2)), int(m.group(3)))

    def __repr__(self):
        return f"k({self.w},{self.x}{self.y})"

    def short(self) -> str:
        return f"({self.w}, {self.x}{self.y})"


@lru_cache(maxsize=1)
def all_labels() -> tuple[PascalLabel, ...]:
    out = []
    for w in range(1, 7):
        for x, y in combinations([d for d in range(1, 7) if d != w], 2):
            out.append(PascalLabel.of(w, x, y))
    return tuple(sorted(out))


def symbol_to_label(s: PascalSymbol) -> PascalLabel:
    """Split the six inter-row edges into the two 2+2+2 matchings, push
    both through zeta, and read off the shared digit."""
    m1, m2 = s.matchings()
    t1, t2 = zeta(m1), zeta(m2)
    assert t1.cycle_type() == (2,) and t2.cycle_type() == (2,), \
        "matchings must map to transpositions"
    (a, b), = t1.cycles()
    (c, d), = t2.cycles()
    shared = {a, b} & {c, d}
    assert len(shared) == 1, "the two transpositions must share one digit"
    w = shared.pop()
    x, y = ({a, b} | {c, d}) - {w}
    return PascalLabel.of(w + 1, x + 1, y + 1)


def label_to_symbol(lab: PascalLabel) -> PascalSymbol:
    """Reconstruct the array: pull the two transpositions (w x), (w y)
    back through zeta, and walk the 6-cycle their union forms."""
    m1 = zeta_inv(transposition(lab.w - 1, lab.x - 1))
    m2 = zeta_inv(transposition(lab.w - 1, lab.y - 1))
    start = 0
    walk = [start]
    use_m1 = True
    cur = start
    for _ in range(5):
        cur = (m1 if use_m1 else m2)(cur)
        walk.append(cur)
        use_m1 = not use_m1
    assert len(set(walk)) == 6, "matching union must be a 6-cycle"
    l0, l1, l2, l3, l4, l5 = walk
    return PascalSymbol(((l0, l4, l2), (l3, l1, l5)))


@lru_cache(maxsize=1)
def _symbol_label_bijection() -> dict[PascalSymbol, PascalLabel]:
    out = {}
    for lab in all_labels():
        out[label_to_symbol(lab)] = lab
    if len(out) != 60:
        raise ConsistencyError("symbol/label correspondence is not a bijection")
    return out


# ---------------------------------------------------------------------------
# Action on labels and triples; orbits
# ---------------------------------------------------------------------------

Triple = tuple[PascalLabel, PascalLabel, PascalLabel]


def act_label(pi: Permutation, lab: PascalLabel) -> PascalLabel:
    return PascalLabel.of(pi(lab.w - 1) + 1, pi(lab.x - 1) + 1, pi(lab.y - 1) + 1)


def act_triple(pi: Permutation, triple) -> Triple:
    moved = sorted(act_label(pi, lab) for lab in triple)
    return tuple(moved)


def sort_triple(triple) -> Triple:
    t = tuple(sorted(triple))
    if len(set(t)) != 3:
        raise UsageError(f"triple must consist of three distinct labels: {triple}")
    return t


def parse_labels(text: str) -> list[PascalLabel]:
    chunks = re.findall(r"\(?\s*[1-6]\s*,\s*[1-6]\s*[1-6]\s*\)?", text)
    if not chunks:
        raise UsageError(f"no pascal labels found in {text!r}")
    return [PascalLabel.parse(c) for c in chunks]


def parse_triple(text: str) -> Triple:
    labels = parse_labels(text)
    if len(labels) != 3:
        raise UsageError(f"cannot parse a label triple from {text!r}")
    return sort_triple(tuple(labels))


def triple_str(triple) -> str:
    return ", ".join(lab.short() for lab in sort_triple(triple))


def pointwise_stabilizer(triple) -> tuple[Permutation, ...]:
    """Elements fixing each label of the triple individually (the
    stabiliser G_T used for the solution-orbit structure)."""
    t = sort_triple(triple)
    return tuple(pi for pi in all_permutations()
                 if all(act_label(pi, lab) == lab for lab in t))


def setwise_stabilizer(triple) -> tuple[Permutation, ...]:
    t = sort_triple(triple)
    return tuple(pi for pi in all_permutations() if act_triple(pi, t) == t)


def stabilizer_class(triple) -> str:
    n = len(pointwise_stabilizer(triple))
    return {1: "trivial", 2: "Z2", 4: "Z2xZ2"}.get(n, f"order {n}")


@dataclass(frozen=True)
class Orbit:
    representative: Triple
    size: int
    pointwise_stab: tuple[Permutation, ...]
    setwise_stab: tuple[Permutation, ...]

    @property
    def stabilizer_class(self) -> str:
        return {1: "trivial", 2: "Z2", 4: "Z2xZ2"}.get(
            len(self.pointwise_stab), f"order {len(self.pointwise_stab)}")


@lru_cache(maxsize=1)
def enumerate_orbits() -> tuple[Orbit, ...]:
    """Decompose the 34,220 unordered label triples into S(digits)
    orbits.  Representatives are the lexicographically smallest triples,
    listed in lexicographic order."""
    labels = all_labels()
    perms = all_permutations()
    seen: set[Triple] = set()
    orbits: list[Orbit] = []
    total = 0
    for triple in combinations(labels, 3):
        total += 1
        if triple in seen:
            continue
        orbit_set = {act_triple(pi, triple) for pi in perms}
        seen |= orbit_set
        rep = min(orbit_set)
        pstab = pointwise_stabilizer(rep)
        sstab = setwise_stabilizer(rep)
        if len(orbit_set) * len(sstab) != 720:
            raise ConsistencyError("orbit-stabiliser count mismatch")
        orbits.append(Orbit(rep, len(orbit_set), pstab, sstab))
    if total != 34220:
        raise ConsistencyError(f"expected 34,220 triples, saw {total}")
    orbits.sort(key=lambda o: o.representative)
    return tuple(orbits)


def orbit_of(triple) -> Orbit:
    t = sort_triple(triple)
    rep = min(act_triple(pi, t) for pi in all_permutations())
    for orb in enumerate_orbits():
        if orb.representative == rep:
            return orb
    raise ConsistencyError(f"no orbit found for {triple_str(t)}")
