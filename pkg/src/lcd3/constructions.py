"""Concrete code families and the recipe catalogue.

Simplex matrices feed three kinds of production: the [n,2] and [n,3]
families (a short seed juxtaposed with self-orthogonal simplex copies, which
leaves the Gram matrix untouched while adding 3^(k-1) to every nonzero
weight), closed forms for dimension 1 / codimension 1 and 2, and the named
block matrices with their puncture/shorten derivation chains.

Codes whose explicit generators only existed in a lost appendix are
recovered by seeded search as stand-ins; their derivation chains then locate
shortening/puncturing coordinates that reproduce the printed weight
distributions exactly (any monomial equivalence of the original code admits
such coordinates).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import TransformError, VerificationError
from .gf3 import GF3Matrix, hstack, identity, nullspace_basis
from .code import (LinearCode, WeightEnumerator, dual, enumerator_auto,
                   gram_report, make_code, verified_min_distance,
                   weight_enumerator)
from .transforms import juxtapose, puncture, shorten
from . import paper_data
from .paper_data import (DIM3_COLUMNS, LEMMA_STANDINS, NAMED_MATRICES,
                         PRINTED_ENUMERATORS, codim1_distance, dim1_distance,
                         dim2_distance, dim3_distance, matrix_digest)
from .search import SearchBudget, exhaustive_best_lcd, randomized_search
from .standins import STANDIN_CHAIN_COORDS

_SIMPLEX_LABELS = {2: "alpha", 3: "beta", 4: "gamma"}


@dataclass(frozen=True)
class SimplexFamily:
    """The k-dimensional ternary simplex matrix S_k and its column labels."""

    k: int
    matrix: GF3Matrix

    @property
    def label(self) -> str:
        return _SIMPLEX_LABELS.get(self.k, f"s{self.k}")

    def column(self, i: int) -> GF3Matrix:
        """Column i (1-based) as a k x 1 matrix."""
        if not 1 <= i <= self.matrix.cols:
            raise IndexError(f"column {i} out of range 1..{self.matrix.cols}")
        return GF3Matrix(self.matrix.array[:, i - 1:i])

    @property
    def code(self) -> LinearCode:
        return make_code(self.matrix)


@lru_cache(maxsize=None)
def simplex(k: int) -> SimplexFamily:
    """S_k, built by the recursion [S_{k-1}, 0, S_{k-1}, S_{k-1}; 0, 1, 1, 2].

    S_k is (k x (3^k-1)/2), generates a [(3^k-1)/2, k, 3^(k-1)] equidistant
    code, and satisfies S_k S_k^T = 0.
    """
    if not 2 <= k <= 8:
        raise ValueError("simplex dimension must be between 2 and 8")
    s = np.array([[1, 0, 1, 1], [0, 1, 1, 2]], dtype=np.int8)
    for j in range(3, k + 1):
        m = s.shape[1]
        top = np.hstack([s, np.zeros((j - 1, 1), np.int8), s, s])
        bottom = np.concatenate([np.zeros(m, np.int8), [1],
                                 np.ones(m, np.int8), 2 * np.ones(m, np.int8)])
        s = np.vstack([top, bottom[None, :]]).astype(np.int8)
    return SimplexFamily(k=k, matrix=GF3Matrix(s))


def named_matrix(name: str) -> GF3Matrix:
    """One of the embedded generator blocks, by its catalogue name."""
    try:
        return NAMED_MATRICES[name]
    except KeyError:
        raise KeyError(f"unknown matrix {name!r}; known: {sorted(NAMED_MATRICES)}")


def verify_matrix_hashes() -> list[str]:
    """Names whose content hash drifted from the locked digest."""
    bad = []
    for name, m in NAMED_MATRICES.items():
        if matrix_digest(m) != paper_data.EXPECTED_MATRIX_SHA256.get(name):
            bad.append(name)
    return sorted(bad)


# ---------------------------------------------------------------------------
# closed-form families
# ---------------------------------------------------------------------------

def dim1_code(n: int) -> LinearCode:
    """[n,1,n] LCD when 3 does not divide n, else [n,1,n-1] LCD.

    The all-ones generator has Gram (n mod 3); when that vanishes, dropping
    one coordinate to zero restores nonsingularity at the cost of one weight.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    g = np.ones((1, n), dtype=np.int8)
    if n % 3 == 0:
        g[0, 0] = 0
    return make_code(GF3Matrix(g))


def codim1_code(n: int) -> LinearCode:
    """[n, n-1, 2] LCD when 3 does not divide n, else [n, n-1, 1] LCD.

    Generator [I | b]; with b all-ones the Gram determinant is n mod 3, so
    for 3 | n one entry of b is zeroed (making a weight-1 row) instead.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    b = np.ones((n - 1, 1), dtype=np.int8)
    if n % 3 == 0:
        b[0, 0] = 0
    g = np.hstack([np.eye(n - 1, dtype=np.int8), b])
    return make_code(GF3Matrix(g))


_NONZERO_PAIRS = ((0, 1), (0, 2), (1, 0), (1, 1), (1, 2), (2, 0), (2, 1), (2, 2))


def _codim2_block(n: int) -> np.ndarray:
    """First (n-2) x 2 block in lexicographic order giving an LCD [n, n-2, 2].

    Rows are restricted to nonzero pairs (a zero row would mean a weight-1
    codeword).  d = 2 iff the parity-check columns contain a dependent pair,
    i.e. some row has a zero entry or two rows are proportional.
    """
    k = n - 2
    for combo in itertools.islice(itertools.product(_NONZERO_PAIRS, repeat=k), 200_000):
        b = np.array(combo, dtype=np.int8)
        bt = b.astype(np.int16)
        m = (bt.T @ bt + np.eye(2, dtype=np.int16)) % 3
        if (m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]) % 3 == 0:
            continue
        if _has_weight_two_word(b):
            return b
    raise VerificationError(f"no codim-2 block found for n={n}")


def _has_weight_two_word(b: np.ndarray) -> bool:
    if (b == 0).any():
        return True
    rows = {tuple(r) for r in b.tolist()} | {tuple((2 * r) % 3) for r in b.tolist()}
    return len(rows) < 2 * len(b)


def codim2_code(n: int) -> LinearCode:
    """[n, n-2, 2] LCD code of the form [I | B]."""
    if n < 4:
        raise ValueError("need n >= 4")
    b = _codim2_block(n)
    g = np.hstack([np.eye(n - 2, dtype=np.int8), b])
    return make_code(GF3Matrix(g))


@lru_cache(maxsize=None)
def _family_seed(n: int, k: int) -> LinearCode:
    """Exhaustively-optimal LCD seed for the short base lengths."""
    result = exhaustive_best_lcd(n, k)
    expected = dim2_distance(n) if k == 2 else dim3_distance(n)
    if result.best_d != expected or result.witness is None:
        raise VerificationError(
            f"seed search for [{n},{k}] found d={result.best_d}, expected {expected}")
    return make_code(result.witness)


def dim2_code(n: int) -> LinearCode:
    """[n, 2] LCD code with d = 3s-1, 3s, 3s+1, 3s+1 for n = 4s..4s+3.

    A seed of length 4..7 (from the exhaustive oracle) is juxtaposed with
    copies of S_2; each copy adds exactly 3 to every nonzero weight and
    leaves the Gram matrix unchanged.
    """
    if n < 4:
        raise ValueError("dim-2 family starts at n = 4")
    base_n = 4 + (n - 4) % 4
    seed = _family_seed(base_n, 2)
    return juxtapose(seed, simplex(2).matrix, (n - base_n) // 4)


def dim3_code(n: int) -> LinearCode:
    """[n, 3] LCD code with the tabulated distance (see dim3_distance).

    Lengths 5..17 use the explicit simplex-column selections; longer codes
    append copies of S_3 (adding 9 per copy); n = 3, 4 come from the
    trivial / exhaustively-searched seeds.
    """
    if n < 3:
        raise ValueError("dim-3 family starts at n = 3")
    if n == 3:
        return make_code(identity(3))
    if n == 4:
        return _family_seed(4, 3)
    if n <= 17:
        return make_code(_dim3_generator(n))
    t = n % 13
    base_n = t + 13 if t <= 4 else t
    base = make_code(_dim3_generator(base_n)) if base_n >= 5 else None
    return juxtapose(base, simplex(3).matrix, (n - base_n) // 13)


@lru_cache(maxsize=None)
def _dim3_generator(n: int) -> GF3Matrix:
    s3 = simplex(3)
    parts = [identity(3)]
    for col, copies in DIM3_COLUMNS[n]:
        parts.extend([s3.column(col)] * copies)
    return hstack(parts)


# ---------------------------------------------------------------------------
# recipe catalogue
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Recipe:
    """One derivation step; ``parent`` chains recipes into DAGs."""

    id: str
    kind: str                      # systematic | juxtapose | dual | shorten |
                                   # puncture | standin | shorten_search | puncture_search
    expected: tuple[int, int, int]
    parent: str | None = None
    matrix: str | None = None      # named block for systematic/juxtapose
    coords: tuple[int, ...] | None = None
    size: int | None = None        # coordinate-set size for *_search steps
    copies: int = 1
    expect_lcd: bool = True


@dataclass(frozen=True)
class CodeRecord:
    """A constructed code together with its recomputed certificate."""

    id: str
    code: LinearCode
    n: int
    k: int
    d: int
    is_lcd: bool
    provenance: dict
    enumerator: WeightEnumerator
    paper_match: str               # exact | paper-typo-flagged | derived-standin


def _recipes() -> dict[str, Recipe]:
    r: list[Recipe] = [
        # Theorem 3.4-style block codes and their chains (verbatim coordinates)
        Recipe("C_20_11_6", "systematic", (20, 11, 6), matrix="A_11_9"),
        Recipe("C_19_10_6", "shorten", (19, 10, 6), parent="C_20_11_6", coords=(3,)),
        Recipe("C_18_9_6", "shorten", (18, 9, 6), parent="C_20_11_6", coords=(2, 11)),
        Recipe("C_17_8_6", "shorten", (17, 8, 6), parent="C_20_11_6", coords=(1, 2, 4)),
        Recipe("C_23_13_6", "systematic", (23, 13, 6), matrix="A_13_10", expect_lcd=False),
        Recipe("C_20_10_6", "shorten", (20, 10, 6), parent="C_23_13_6", coords=(1, 4, 11)),
        Recipe("C_19_9_6", "shorten", (19, 9, 6), parent="C_23_13_6", coords=(3, 4, 9, 12)),
        Recipe("C_18_8_6", "shorten", (18, 8, 6), parent="C_23_13_6",
               coords=(1, 8, 9, 12, 13)),
        Recipe("C_17_7_6", "shorten", (17, 7, 6), parent="C_23_13_6",
               coords=(4, 6, 8, 10, 11, 12)),
        Recipe("C_21_4_12", "systematic", (21, 4, 12), matrix="A_4_17"),
        Recipe("C_20_4_11", "puncture", (20, 4, 11), parent="C_21_4_12", coords=(1,)),
        Recipe("C_19_4_11", "puncture", (19, 4, 11), parent="C_21_4_12", coords=(7, 16)),
        Recipe("C_18_4_10", "puncture", (18, 4, 10), parent="C_21_4_12", coords=(1, 2, 7)),
        Recipe("C_17_4_9", "puncture", (17, 4, 9), parent="C_21_4_12", coords=(1, 2, 7, 8)),
        Recipe("C_15_4_8", "puncture", (15, 4, 8), parent="C_21_4_12",
               coords=(1, 2, 3, 5, 7, 8)),
        Recipe("C_17_6_8", "systematic", (17, 6, 8), matrix="A_6_11"),
        Recipe("C_16_6_7", "puncture", (16, 6, 7), parent="C_17_6_8", coords=(1,)),
        Recipe("C_16_5_8", "shorten", (16, 5, 8), parent="C_17_6_8", coords=(2,)),
        Recipe("C_15_5_7", "puncture", (15, 5, 7), parent="C_16_5_8", coords=(1,)),
        Recipe("C_17_5_9", "systematic", (17, 5, 9), matrix="A_5_12"),
        Recipe("C_18_5_9", "systematic", (18, 5, 9), matrix="G_A_13"),
        Recipe("C_19_5_10", "juxtapose", (19, 5, 10), parent="C_17_5_9",
               matrix="B_5_2_repaired"),
        Recipe("C_20_5_11", "systematic", (20, 5, 11), matrix="A_5_15"),
        Recipe("C_20_9_8", "systematic", (20, 9, 8), matrix="A_9_11", expect_lcd=False),
        # dual of [20,5,11] and its shortening chain
        Recipe("C_20_15_3", "dual", (20, 15, 3), parent="C_20_5_11"),
        Recipe("C_19_14_3", "shorten", (19, 14, 3), parent="C_20_15_3", coords=(10,)),
        Recipe("C_18_13_3", "shorten", (18, 13, 3), parent="C_20_15_3", coords=(9, 13)),
        Recipe("C_17_12_3", "shorten", (17, 12, 3), parent="C_20_15_3", coords=(7, 9, 12)),
    ]
    # searched stand-ins and their duals
    for spec in LEMMA_STANDINS:
        n, k, d = spec["n"], spec["k"], spec["d"]
        r.append(Recipe(spec["id"], "standin", (n, k, d)))
        if spec["dual_id"]:
            r.append(Recipe(spec["dual_id"], "dual", (n, n - k, spec["dual_d"]),
                            parent=spec["id"]))
    # chains rooted at stand-ins: coordinates are re-derived at build time
    # (printed sets referred to the lost appendix generators)
    r += [
        Recipe("C_14_5_7", "shorten_search", (14, 5, 7), parent="C_15_6_7", size=1),
        Recipe("C_13_4_7", "shorten_search", (13, 4, 7), parent="C_15_6_7", size=2),
        Recipe("C_13_5_6", "puncture_search", (13, 5, 6), parent="C_14_5_7", size=1),
        Recipe("C_19_11_6", "shorten_search", (19, 11, 6), parent="C_20_12_6", size=1),
        Recipe("C_18_10_6", "shorten_search", (18, 10, 6), parent="C_20_12_6", size=2),
        Recipe("C_17_9_6", "shorten_search", (17, 9, 6), parent="C_20_12_6", size=3),
        Recipe("C_18_6_8", "shorten_search", (18, 6, 8), parent="C_20_8_8", size=2),
        Recipe("C_17_5_8", "shorten_search", (17, 5, 8), parent="C_20_8_8", size=3),
        Recipe("C_16_4_9", "shorten_search", (16, 4, 9), parent="C_20_8_8", size=4),
    ]
    return {rec.id: rec for rec in r}


RECIPES: dict[str, Recipe] = _recipes()

#: ids whose printed sets are tried first by the *_search steps
PAPER_COORDS: dict[str, tuple[int, ...]] = {
    "C_14_5_7": (6,),
    "C_13_4_7": (1, 2),
    "C_13_5_6": (1,),
    "C_19_11_6": (3,),
    "C_18_10_6": (2, 11),
    "C_17_9_6": (8, 9, 10),
    "C_18_6_8": (3, 4),
    "C_17_5_8": (2, 4, 5),
    "C_16_4_9": (1, 3, 7, 8),
}


# ---------------------------------------------------------------------------
# recipe execution
# ---------------------------------------------------------------------------

#: attempts of the seeded search (seed chained with the attempt index)
#: before a stand-in recovery gives up
MAX_STANDIN_ATTEMPTS = 64


def systematic_code(block: GF3Matrix) -> LinearCode:
    """[I_k | block] as a code."""
    return make_code(hstack([identity(block.rows), block]))


def _certify(code: LinearCode, expected: tuple[int, int, int], expect_lcd: bool,
             rid: str) -> tuple[int, bool, WeightEnumerator]:
    en, ek, ed = expected
    if (code.n, code.k) != (en, ek):
        raise VerificationError(
            f"{rid}: built [{code.n},{code.k}], expected [{en},{ek}]")
    d = verified_min_distance(code)
    lcd = gram_report(code).is_lcd
    if d != ed or lcd != expect_lcd:
        raise VerificationError(
            f"{rid}: got d={d} lcd={lcd}, expected d={ed} lcd={expect_lcd}")
    return d, lcd, enumerator_auto(code)


def _expected_counts(rid: str) -> dict[int, int] | None:
    """Printed distribution for exact-status ids (None when flagged/absent)."""
    info = PRINTED_ENUMERATORS.get(rid)
    if info and info["status"] == "exact":
        return info["counts"]
    return None


def _paper_match(rid: str) -> str:
    info = PRINTED_ENUMERATORS.get(rid)
    if info is None:
        return "exact"
    return "exact" if info["status"] == "exact" else "paper-typo-flagged"


class RecipeBuilder:
    """Executes the recipe DAG with memoization and full verification."""

    def __init__(self, budget: SearchBudget | None = None):
        self.budget = budget or SearchBudget()
        self._records: dict[str, CodeRecord] = {}

    def record(self, rid: str) -> CodeRecord:
        if rid not in self._records:
            recipe = RECIPES.get(rid)
            if recipe is None:
                raise KeyError(f"unknown recipe id {rid!r}")
            self._build(recipe)
        return self._records[rid]

    def all_records(self) -> list[CodeRecord]:
        for rid in RECIPES:
            self.record(rid)
        return [self._records[rid] for rid in RECIPES]

    # -- builders ------------------------------------------------------------

    def _install(self, recipe: Recipe, code: LinearCode, provenance: dict,
                 paper_match: str | None = None) -> CodeRecord:
        d, lcd, enum = _certify(code, recipe.expected, recipe.expect_lcd, recipe.id)
        want = _expected_counts(recipe.id)
        if want is not None and enum.nonzero() != want:
            raise VerificationError(
                f"{recipe.id}: weight distribution differs from the printed one")
        rec = CodeRecord(
            id=recipe.id, code=code, n=code.n, k=code.k, d=d, is_lcd=lcd,
            provenance=provenance, enumerator=enum,
            paper_match=paper_match or _paper_match(recipe.id))
        self._records[recipe.id] = rec
        return rec

    def _build(self, recipe: Recipe) -> None:
        kind = recipe.kind
        if kind == "systematic":
            code = systematic_code(named_matrix(recipe.matrix))
            self._install(recipe, code, {"kind": kind, "matrix": recipe.matrix})
        elif kind == "juxtapose":
            parent = self.record(recipe.parent)
            code = juxtapose(parent.code, named_matrix(recipe.matrix), recipe.copies)
            self._install(recipe, code, {"kind": kind, "parent": recipe.parent,
                                         "matrix": recipe.matrix,
                                         "copies": recipe.copies})
        elif kind == "dual":
            parent = self.record(recipe.parent)
            self._install(recipe, dual(parent.code),
                          {"kind": kind, "parent": recipe.parent})
        elif kind == "shorten":
            parent = self.record(recipe.parent)
            code = shorten(parent.code, recipe.coords)
            self._install(recipe, code, {"kind": kind, "parent": recipe.parent,
                                         "coords": list(recipe.coords)})
        elif kind == "puncture":
            parent = self.record(recipe.parent)
            code = puncture(parent.code, recipe.coords)
            self._install(recipe, code, {"kind": kind, "parent": recipe.parent,
                                         "coords": list(recipe.coords)})
        elif kind in ("shorten_search", "puncture_search"):
            parent = self.record(recipe.parent)
            coords, code = self._resolve_search(recipe, parent.code)
            self._install(recipe, code,
                          {"kind": kind, "parent": recipe.parent,
                           "coords": list(coords), "coords_derived": True})
        elif kind == "standin":
            code, provenance = self._recover_standin(recipe)
            self._install(recipe, code, provenance, paper_match="derived-standin")
        else:
            raise VerificationError(f"{recipe.id}: unknown recipe kind {kind!r}")

    # -- searched steps --------------------------------------------------------

    def _resolve_search(self, recipe: Recipe, parent: LinearCode
                        ) -> tuple[tuple[int, ...], LinearCode]:
        """First coordinate set (hint, printed, then lexicographic) that hits
        the expected parameters and, for exact-status ids, the printed
        distribution."""
        en, ek, ed = recipe.expected
        want = _expected_counts(recipe.id)
        op = shorten if recipe.kind == "shorten_search" else puncture
        for coords in self._coord_candidates(recipe, parent.n):
            try:
                candidate = op(parent, coords)
            except TransformError:
                continue
            if (candidate.n, candidate.k) != (en, ek):
                continue
            if not gram_report(candidate).is_lcd:
                continue
            enum = weight_enumerator(candidate)
            if enum.min_weight != ed:
                continue
            if want is not None and enum.nonzero() != want:
                continue
            return coords, candidate
        raise VerificationError(
            f"{recipe.id}: no {recipe.size}-coordinate set of {recipe.parent} "
            f"reaches [{en},{ek},{ed}] with the required distribution")

    def _coord_candidates(self, recipe: Recipe, n: int):
        hint = STANDIN_CHAIN_COORDS.get(recipe.id)
        if hint:
            yield tuple(hint)
        printed = PAPER_COORDS.get(recipe.id)
        if printed and printed != hint:
            yield printed
        for combo in itertools.combinations(range(1, n + 1), recipe.size):
            if combo != hint and combo != printed:
                yield combo

    # -- stand-in recovery -------------------------------------------------------

    def _recover_standin(self, recipe: Recipe) -> tuple[LinearCode, dict]:
        spec = next(s for s in LEMMA_STANDINS if s["id"] == recipe.id)
        n, k, d, dd = spec["n"], spec["k"], spec["d"], spec["dual_d"]
        embedded = _embedded_standin(recipe.id)
        if embedded is not None:
            code = make_code(embedded)
            if self._standin_ok(code, spec):
                return code, {"kind": "standin", "source": "embedded",
                              "search": "randomized (fixed seed), re-verified"}
        # fall back to a live seeded search (slow path; normally unused)
        for attempt in range(MAX_STANDIN_ATTEMPTS):
            rng = np.random.default_rng(
                np.random.SeedSequence((self.budget.seed, n, k, d, attempt)))
            result = randomized_search(n, k, d, self.budget,
                                       target_dual_d=dd, rng=rng)
            if result.best_d < d or result.witness is None:
                continue
            code = make_code(result.witness)
            if self._standin_ok(code, spec):
                return code, {"kind": "standin", "source": "search",
                              "seed": self.budget.seed, "attempt": attempt}
        raise VerificationError(f"{recipe.id}: stand-in recovery failed")

    def _standin_ok(self, code: LinearCode, spec: dict) -> bool:
        if (code.n, code.k) != (spec["n"], spec["k"]):
            return False
        if not gram_report(code).is_lcd:
            return False
        if verified_min_distance(code) != spec["d"]:
            return False
        if spec["dual_d"] is not None:
            if verified_min_distance(dual(code)) != spec["dual_d"]:
                return False
        return True


def _embedded_standin(rid: str) -> GF3Matrix | None:
    from .standins import STANDIN_GENERATORS
    rows = STANDIN_GENERATORS.get(rid)
    if rows is None:
        return None
    return GF3Matrix([[int(ch) for ch in line] for line in rows])


_default_builder: RecipeBuilder | None = None


def paper_code(rid: str, budget: SearchBudget | None = None) -> CodeRecord:
    """Execute (and verify) the recipe for one catalogued code."""
    global _default_builder
    if budget is not None:
        return RecipeBuilder(budget).record(rid)
    if _default_builder is None:
        _default_builder = RecipeBuilder()
    return _default_builder.record(rid)


def recipe_ids() -> list[str]:
    return list(RECIPES)
