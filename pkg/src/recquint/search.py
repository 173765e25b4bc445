"""Grid classification of F(n, A, B), the D4 family A = 8k+1, B = 8p+1, and
discriminant-based separation of the resulting fields.
"""

from __future__ import annotations

import csv
import io
import json
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator

from .dedekind import DEFAULT_BUDGET, MonogenicityVerdict, Status, is_monogenic
from .density import _value_squarefree, d4_family_polynomial
from .ffield import is_prime
from .galois import GaloisClass, GaloisLabel, octic_wreath, quartic_galois
from .quintinomial import QuinInvariants, QuinParams, disc_formula, invariants

RESIDUE_FILTERS = ("mod4-11", "mod4-bams", "none")
_BAMS_RESIDUES = {(1, 3), (3, 1), (3, 3)}


@dataclass(frozen=True)
class SearchRecord:
    params: QuinParams
    invariants: QuinInvariants
    verdict: MonogenicityVerdict
    galois: GaloisClass
    field_disc: int | None = None
    g_squarefree: bool | None = None

    def __post_init__(self):
        monogenic = self.verdict.status is Status.MONOGENIC
        if monogenic != (self.field_disc is not None):
            raise ValueError("field_disc must be present exactly for Monogenic records")

    @property
    def key(self) -> tuple[int, int, int]:
        return self.params.A, self.params.B, self.params.n

    def to_dict(self) -> dict:
        return {
            "params": {"n": self.params.n, "A": self.params.A, "B": self.params.B},
            "invariants": self.invariants.to_dict(),
            "verdict": self.verdict.to_dict(),
            "galois": self.galois.to_dict(),
            "field_disc": self.field_disc,
            "g_squarefree": self.g_squarefree,
        }

    @classmethod
    def from_dict(cls, d: dict) -> SearchRecord:
        p = d["params"]
        return cls(
            QuinParams(p["n"], p["A"], p["B"]),
            QuinInvariants.from_dict(d["invariants"]),
            MonogenicityVerdict.from_dict(d["verdict"]),
            GaloisClass.from_dict(d["galois"]),
            d.get("field_disc"),
            d.get("g_squarefree"),
        )


def _galois_for(params: QuinParams, verdict: MonogenicityVerdict) -> GaloisClass:
    if verdict.status is Status.REDUCIBLE:
        return GaloisClass(GaloisLabel.OUT_OF_SCOPE, (("reason", "reducible"),))
    if params.n == 2:
        return quartic_galois(params.A, params.B)
    if params.n == 3:
        return octic_wreath(params.A, params.B)
    return GaloisClass(GaloisLabel.OUT_OF_SCOPE, (("reason", "only n = 2, 3 are classified"),))


def classify(params: QuinParams, seed: int = 0, budget: int = DEFAULT_BUDGET, g_squarefree: bool | None = None) -> SearchRecord:
    verdict = is_monogenic(params, seed, budget)
    disc = disc_formula(params) if verdict.status is Status.MONOGENIC else None
    return SearchRecord(
        params, invariants(params.A, params.B), verdict, _galois_for(params, verdict), disc, g_squarefree
    )


def admissible(A: int, B: int, residue_filter: str) -> bool:
    if A * B == 0:
        return False
    if residue_filter == "mod4-11":
        return A % 4 == 1 and B % 4 == 1
    if residue_filter == "mod4-bams":
        return (A % 4, B % 4) in _BAMS_RESIDUES
    if residue_filter == "none":
        return True
    raise ValueError(f"unknown residue filter {residue_filter!r}; expected one of {RESIDUE_FILTERS}")


def _classify_row(args) -> list[SearchRecord]:
    n, A, Bs, residue_filter, seed, budget = args
    return [classify(QuinParams(n, A, B), seed, budget) for B in Bs if admissible(A, B, residue_filter)]


def grid_classify(
    n: int,
    A_range: Iterable[int],
    B_range: Iterable[int],
    residue_filter: str = "mod4-11",
    seed: int = 0,
    budget: int = DEFAULT_BUDGET,
    jobs: int = 1,
) -> Iterator[SearchRecord]:
    """Classify every admissible (A, B) in row-major order (A outer, B inner).

    With jobs > 1 rows go to a process pool; ``map`` keeps the canonical order.
    """
    if residue_filter not in RESIDUE_FILTERS:
        raise ValueError(f"unknown residue filter {residue_filter!r}; expected one of {RESIDUE_FILTERS}")
    Bs = tuple(B_range)
    rows = [(n, A, Bs, residue_filter, seed, budget) for A in A_range]
    if jobs <= 1:
        for row in rows:
            yield from _classify_row(row)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for chunk in pool.map(_classify_row, rows):
            yield from chunk


class ContractError(AssertionError):
    """A squarefree family value produced something other than Monogenic + D4."""


def item3_family(
    k: int,
    t_range: Iterable[int],
    seed: int = 0,
    budget: int = DEFAULT_BUDGET,
    primes_only: bool = True,
) -> Iterator[SearchRecord]:
    """Records for (A, B) = (8k+1, 8t+1) as t runs over ``t_range`` (primes only by default).

    Each record carries whether G(t) = W1 W2 W3 was certified squarefree
    (None when factoring ran out of budget).  A squarefree value that fails
    to give Monogenic + D4 raises ContractError.
    """
    G = d4_family_polynomial(k)
    A = 8 * k + 1
    for t in t_range:
        if primes_only and not is_prime(t):
            continue
        B = 8 * t + 1
        if B == 0:
            continue
        sf = _value_squarefree(G, t, budget)
        rec = classify(QuinParams(2, A, B), seed, budget, sf)
        if sf and (rec.verdict.status is not Status.MONOGENIC or rec.galois.label is not GaloisLabel.D4):
            raise ContractError(f"squarefree G({t}) but {rec.verdict.status.value}/{rec.galois.label.value}")
        yield rec


@dataclass(frozen=True)
class Collision:
    field_disc: int
    members: tuple[tuple[int, int, int], ...]
    # W1W2 equal and W3 equal up to sign for every pair in the class
    equations_hold: bool


@dataclass(frozen=True)
class FieldPartition:
    classes: tuple[tuple[int, tuple[tuple[int, int, int], ...]], ...]
    unresolved: tuple[Collision, ...]

    @property
    def all_distinct(self) -> bool:
        return all(len(members) == 1 for _, members in self.classes)


def _equations_hold(a: SearchRecord, b: SearchRecord) -> bool:
    ia, ib = a.invariants, b.invariants
    return ia.W1 * ia.W2 == ib.W1 * ib.W2 and abs(ia.W3) == abs(ib.W3)


def distinct_fields(records: list[SearchRecord]) -> FieldPartition:
    """Group Monogenic records by field discriminant.

    Different discriminants mean different fields.  Equal ones are left
    unresolved, together with the result of the W1W2 / W3 coincidence test.
    """
    groups: dict[int, list[SearchRecord]] = defaultdict(list)
    for r in records:
        if r.verdict.status is not Status.MONOGENIC:
            raise ValueError(f"record {r.key} is not Monogenic")
        groups[r.field_disc].append(r)
    classes = []
    unresolved = []
    for disc in sorted(groups):
        members = groups[disc]
        classes.append((disc, tuple(m.key for m in members)))
        if len(members) > 1:
            ok = all(_equations_hold(members[0], m) for m in members[1:])
            unresolved.append(Collision(disc, tuple(m.key for m in members), ok))
    return FieldPartition(tuple(classes), tuple(unresolved))


# serialization

def dumps_record(rec: SearchRecord) -> str:
    return json.dumps(rec.to_dict(), sort_keys=True, separators=(",", ":"))


def write_jsonl(records: Iterable[SearchRecord], stream) -> int:
    n = 0
    for rec in records:
        stream.write(dumps_record(rec) + "\n")
        n += 1
    return n


def read_jsonl(stream) -> Iterator[SearchRecord]:
    for line in stream:
        if line.strip():
            yield SearchRecord.from_dict(json.loads(line))


CSV_COLUMNS = ("n", "A", "B", "W1", "W2", "W3", "status", "obstruction_primes", "galois", "field_disc")


def csv_summary(records: Iterable[SearchRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in records:
        inv = r.invariants
        w.writerow(
            (
                r.params.n,
                r.params.A,
                r.params.B,
                inv.W1,
                inv.W2,
                inv.W3,
                r.verdict.status.value,
                " ".join(map(str, r.verdict.obstruction_primes)),
                r.galois.label.value,
                "" if r.field_disc is None else r.field_disc,
            )
        )
    return buf.getvalue()
