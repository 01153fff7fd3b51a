"""
Splitting H-modules into indecomposable summands.

A catalog module W is a direct summand of V exactly when some composite g∘f of
intertwiners f: W -> V, g: V -> W is invertible (End(W) is local). Then
V = f(W) ⊕ ker((g f)^{-1} g) and the search continues on the kernel. Modules
outside the catalog are split with Fitting decompositions of commutant
elements and certified indecomposable when their commutant is local.
"""
import logging
from collections import Counter
from typing import Any, Dict, List, Optional, Sequence, Tuple

import pandas as pd
from pydantic import BaseModel, ConfigDict, Field

from algebra.cyclo import CycScalar
from algebra.errors import QuantumGroupError, UnmatchedSummandError
from algebra.linalg import CycMatrix, EchelonBasis, Vector, nullspace
from algebra.reports import CheckReport, ReportBuilder
from representations.repcat import Representation, get_module, module_catalog, tensor_rep

logger = logging.getLogger(__name__)


def hom_space(W: Representation, V: Representation) -> List[CycMatrix]:
    """
    Basis of Hom_H(W, V).

    Args:
        W: Source module
        V: Target module

    Returns:
        Matrices F (dim V x dim W) with rho_V(g) F = F rho_W(g) for g = K, X+, X-;
        when both K are diagonal only weight-preserving entries are unknowns
    """
    N = V.N
    if W.N != N:
        raise QuantumGroupError(f"modules over N={W.N} and N={N}")
    if V.K.is_diagonal() and W.K.is_diagonal():
        unknowns = [(i, j) for i in range(V.dim) for j in range(W.dim) if V.K[i, i] == W.K[j, j]]
    else:
        unknowns = [(i, j) for i in range(V.dim) for j in range(W.dim)]
    column = {pair: k for k, pair in enumerate(unknowns)}
    by_row: Dict[int, List[int]] = {}
    by_col: Dict[int, List[int]] = {}
    for i, j in unknowns:
        by_row.setdefault(i, []).append(j)
        by_col.setdefault(j, []).append(i)

    equations = []
    for name, rho_v in V.generator_matrices().items():
        rho_w = W.generator_matrices()[name]
        rows: Dict[Tuple[int, int], Vector] = {}
        # (rho_V F)[a, b] = sum_k rho_V[a, k] F[k, b]
        for k, source in enumerate(rho_v.columns()):
            for b in by_row.get(k, ()):
                unknown = column[(k, b)]
                for a, c in source.items():
                    row = rows.setdefault((a, b), {})
                    row[unknown] = row[unknown] + c if unknown in row else c
        # (F rho_W)[a, b] = sum_l F[a, l] rho_W[l, b]
        for l, target in enumerate(rho_w.rows):
            for a in by_col.get(l, ()):
                unknown = column[(a, l)]
                for b, c in target.items():
                    row = rows.setdefault((a, b), {})
                    row[unknown] = row[unknown] - c if unknown in row else -c
        equations.extend({k: c for k, c in row.items() if c} for row in rows.values())
    solutions = nullspace(equations, len(unknowns), N)
    matrices = []
    for solution in solutions:
        dense = [{} for _ in range(V.dim)]
        for k, c in solution.items():
            i, j = unknowns[k]
            dense[i][j] = c
        matrices.append(CycMatrix(N, V.dim, W.dim, dense))
    logger.debug("Hom(%s, %s): %d unknowns, dimension %d", W.name, V.name, len(unknowns), len(matrices))
    return matrices


def _kernel(V: Representation, p: CycMatrix) -> List[Vector]:
    """Kernel of an intertwiner out of V, as weight vectors when V has a weight basis."""
    if not V.K.is_diagonal():
        return p.nullspace()
    blocks: Dict[CycScalar, List[int]] = {}
    for i in range(V.dim):
        blocks.setdefault(V.K[i, i], []).append(i)
    kernel = []
    for indices in blocks.values():
        restricted = p.submatrix(range(p.nrows), indices)
        for vector in restricted.nullspace():
            kernel.append({indices[k]: c for k, c in vector.items()})
    return kernel


def split_off(W: Representation, V: Representation) -> Optional[Tuple[CycMatrix, List[Vector]]]:
    """
    Try to split W off V.

    Returns:
        (f, complement) with f: W -> V an injective intertwiner and complement a basis
        of an invariant complement of f(W), or None if W is not a summand of V
    """
    if W.dim > V.dim:
        return None
    spectrum_v = V.k_spectrum()
    if any(spectrum_v.get(w, 0) < m for w, m in W.k_spectrum().items()):
        return None
    into = hom_space(W, V)
    if not into:
        return None
    out_of = hom_space(V, W)
    for f in into:
        for g in out_of:
            gf = g @ f
            if gf.is_invertible():
                p = gf.inverse() @ g
                return f, _kernel(V, p)
    return None


def identify(rep: Representation, candidates: Optional[Sequence[Representation]] = None) -> Optional[str]:
    """Catalog label of a module isomorphic to rep, if any."""
    for W in candidates or module_catalog(rep.N):
        if W.dim == rep.dim and split_off(W, rep) is not None:
            return W.label
    return None


class SummandWitness(BaseModel):
    """One indecomposable summand and the intertwiner embedding it."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    label: Optional[str]
    dimension: int
    spectrum: Dict[int, int]
    verified: bool
    certified_indecomposable: bool = True
    embedding: Any = Field(default=None, exclude=True)

    @property
    def name(self) -> str:
        return self.label or f"dim{self.dimension}"


class DecompositionReport(BaseModel):
    source: str
    N: int
    dimension: int
    summands: List[SummandWitness]
    verified: bool

    def counts(self) -> Dict[str, int]:
        return dict(Counter(s.name for s in self.summands))

    def table(self) -> pd.DataFrame:
        rows = [
            {"summand": name, "multiplicity": count, "dimension": next(s.dimension for s in self.summands if s.name == name)}
            for name, count in self.counts().items()
        ]
        return pd.DataFrame(rows, columns=["summand", "multiplicity", "dimension"])

    def summary(self) -> Dict:
        return {
            "source": self.source,
            "N": self.N,
            "dimension": self.dimension,
            "summands": self.counts(),
            "verified": self.verified,
        }


def _commutant_split(rep: Representation) -> Tuple[Optional[List[List[Vector]]], bool]:
    """
    Split a module with an endomorphism whose Fitting decomposition is nontrivial.

    Returns:
        (components, local): components are bases of complementary submodules or None;
        local tells whether End(rep) modulo its radical is one-dimensional
    """
    N = rep.N
    endomorphisms = hom_space(rep, rep)
    if len(endomorphisms) <= 1:
        return None, True
    gram = [{j: (a @ b).trace() for j, b in enumerate(endomorphisms)} for a in endomorphisms]
    gram = [{j: c for j, c in row.items() if c} for row in gram]
    radical_dim = len(nullspace(gram, len(endomorphisms), N))
    if len(endomorphisms) - radical_dim == 1:
        return None, True
    identity = CycMatrix.identity(N, rep.dim)
    for phi in endomorphisms:
        for value in {phi[i, i] for i in range(rep.dim)}:
            psi = (phi - identity.scale(value)).power(rep.dim)
            image = psi.column_space()
            if 0 < len(image) < rep.dim:
                return [image, psi.nullspace()], False
    return None, False


def is_indecomposable(rep: Representation) -> bool:
    """True when End(rep) modulo its radical is one-dimensional."""
    _, local = _commutant_split(rep)
    return local


def _verify_embedding(V: Representation, W: Representation, embedding: CycMatrix) -> bool:
    return all(
        V.generator_matrices()[name] @ embedding == embedding @ W.generator_matrices()[name] for name in ("K", "Xp", "Xm")
    )


def decompose_rep(
    V: Representation, candidates: Optional[Sequence[Representation]] = None, strict: bool = True
) -> DecompositionReport:
    """
    Decompose a module into indecomposables matched against the catalog.

    Args:
        V: Module to decompose
        candidates: Modules to match against (default: module_catalog, with the plane pieces and baby Verma modules)
        strict: Raise UnmatchedSummandError for a summand outside the candidates;
                otherwise split it through its commutant and report it unnamed

    Returns:
        DecompositionReport whose witnesses are intertwiners into V; verified when every
        witness intertwines exactly and the images span V
    """
    N = V.N
    modules = sorted(candidates or module_catalog(N), key=lambda m: (-m.dim, m.label or ""))
    summands: List[SummandWitness] = []
    work: List[Tuple[Representation, CycMatrix]] = [(V, CycMatrix.identity(N, V.dim))]
    while work:
        current, frame = work.pop()
        if current.dim == 0:
            continue
        matched = False
        for W in modules:
            split = split_off(W, current)
            if split is None:
                continue
            f, complement = split
            embedding = frame @ f
            summands.append(
                SummandWitness(
                    label=W.label,
                    dimension=W.dim,
                    spectrum=W.k_spectrum(),
                    verified=_verify_embedding(V, W, embedding),
                    embedding=embedding,
                )
            )
            if complement:
                work.append((current.restrict(complement), frame @ CycMatrix.from_columns(N, current.dim, complement)))
            matched = True
            break
        if matched:
            continue
        if strict:
            raise UnmatchedSummandError(current.dim, current.k_spectrum())
        components, local = _commutant_split(current)
        if components:
            for basis in components:
                work.append((current.restrict(basis), frame @ CycMatrix.from_columns(N, current.dim, basis)))
            continue
        summands.append(
            SummandWitness(
                label=None,
                dimension=current.dim,
                spectrum=current.k_spectrum(),
                verified=_verify_embedding(V, current, frame),
                certified_indecomposable=local,
                embedding=frame,
            )
        )

    summands.sort(key=lambda s: (-s.dimension, s.name))
    total = sum(s.dimension for s in summands)
    span = EchelonBasis(N)
    for s in summands:
        span.extend(s.embedding.columns())
    verified = total == V.dim and span.rank == V.dim and all(s.verified for s in summands)
    logger.debug("decomposed %s into %s", V.name, [s.name for s in summands])
    return DecompositionReport(source=V.name, N=N, dimension=V.dim, summands=summands, verified=verified)


def decompose_tensor(left: str, right: str, N: int = 3) -> DecompositionReport:
    return decompose_rep(tensor_rep(get_module(left, N), get_module(right, N)))


# products of the N = 3 catalog modules; the last two rows are the flips of 6_eve⊗2 and 6_odd⊗2
TENSOR_TABLE: List[Tuple[str, str, Dict[str, int]]] = [
    ("2", "2", {"1": 1, "3_irr": 1}),
    ("2", "3_irr", {"6_eve": 1}),
    ("3_irr", "3_irr", {"6_odd": 1, "3_irr": 1}),
    ("6_eve", "2", {"6_odd": 1, "3_irr": 2}),
    ("6_odd", "2", {"6_eve": 1, "3_irr": 2}),
    ("6_eve", "3_irr", {"6_eve": 2, "3_irr": 2}),
    ("6_odd", "3_irr", {"6_eve": 2, "3_irr": 2}),
    ("6_eve", "6_eve", {"6_eve": 2, "6_odd": 2, "3_irr": 4}),
    ("6_eve", "6_odd", {"6_eve": 2, "6_odd": 2, "3_irr": 4}),
    ("6_odd", "6_odd", {"6_odd": 2, "6_eve": 2, "3_irr": 4}),
    ("2", "6_eve", {"6_odd": 1, "3_irr": 2}),
    ("2", "6_odd", {"6_eve": 1, "3_irr": 2}),
]


def format_counts(counts: Dict[str, int]) -> str:
    parts = []
    for label, count in sorted(counts.items(), key=lambda item: item[0]):
        parts.append(label if count == 1 else f"{count}·{label}")
    return " + ".join(parts)


def tensor_table(rows: Optional[Sequence[Tuple[str, str, Dict[str, int]]]] = None) -> pd.DataFrame:
    """Decompose every product of the table and lay the results out next to the expected ones."""
    records = []
    for left, right, expected in rows or TENSOR_TABLE:
        report = decompose_tensor(left, right, 3)
        records.append(
            {
                "product": f"{left} ⊗ {right}",
                "computed": format_counts(report.counts()),
                "expected": format_counts(expected),
                "match": report.counts() == expected and report.verified,
            }
        )
    return pd.DataFrame(records, columns=["product", "computed", "expected", "match"])


def check_tensor_table(rows: Optional[Sequence[Tuple[str, str, Dict[str, int]]]] = None) -> CheckReport:
    builder = ReportBuilder("tensor-table", 3)
    table = tensor_table(rows)
    for record in table.to_dict("records"):
        builder.expect(record["product"], record["match"], computed=record["computed"], expected=record["expected"])
    return builder.done(rows=len(table))
