"""Stationary-phase local data of the Fourier transform and the preservation check.

For a regular tuple the transform keeps one exponential component per finite
singular point (slope one, coefficient equal to the location) whose regular
part is the source monodromy restricted to im(A - 1), and acquires a regular
singularity at zero whose monodromy is reconstructed as the unique minimal
pair over the monodromy at infinity with total dimension sum(n_i).
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .errors import HypothesisViolationError, NonRealizableError
from .exact_linalg import (
    QMatrix,
    block_diag,
    centralizer_dimension,
    fixed_space_dim,
    format_rational,
    jordan_block,
    matrix_from_json,
    matrix_to_json,
    parse_rational,
    restrict_to_image,
    similar,
    split_unit_part,
    unit_block_partition,
)
from .local_systems import MonodromyTuple, is_irreducible, rigidity_index, validate


class ReducibleInputWarning(UserWarning):
    """The transform of a reducible tuple carries no preservation guarantee."""


@dataclass(frozen=True)
class ExponentialComponent:
    """One exponential factor at infinity: coefficient, regular part, size."""

    coefficient: Fraction
    regular_monodromy: QMatrix
    dimension: int

    def __post_init__(self) -> None:
        if self.dimension < 1:
            raise ValueError("component dimension must be at least 1")
        if (self.regular_monodromy.rows, self.regular_monodromy.cols) != (
            self.dimension,
            self.dimension,
        ):
            raise ValueError("regular monodromy size must match the component dimension")
        if not self.regular_monodromy.is_invertible():
            raise ValueError("regular monodromy must be invertible")


@dataclass(frozen=True)
class FourierLocalData:
    rank_hat: int
    zero_monodromy: QMatrix
    components: tuple[ExponentialComponent, ...]

    def __post_init__(self) -> None:
        if self.rank_hat != sum(c.dimension for c in self.components):
            raise ValueError("rank_hat must equal the sum of component dimensions")
        if (self.zero_monodromy.rows, self.zero_monodromy.cols) != (
            self.rank_hat,
            self.rank_hat,
        ):
            raise ValueError("zero monodromy must be rank_hat x rank_hat")
        if not self.zero_monodromy.is_invertible():
            raise ValueError("zero monodromy must be invertible")


class PointIdentity(NamedTuple):
    point: str
    lhs: int
    rhs: int


@dataclass(frozen=True)
class PreservationReport:
    rig_source: int
    rig_fourier: int
    equal: bool
    per_point_identities: tuple[PointIdentity, ...]
    irregularity: int


def stationary_phase(t: MonodromyTuple, *, warn_reducible: bool = True) -> FourierLocalData:
    """Local data of the transform of a validated tuple.

    Each finite point (c, A) contributes the component (c, A restricted to
    im(A - 1)) of dimension rank(A - 1).  The monodromy at zero is assembled
    so that its restriction to the image of (T - 1) reproduces the monodromy
    at infinity while the ambient dimension reaches sum(n_i): the part of
    the infinity matrix without eigenvalue 1 is kept as is, each of its unit
    Jordan blocks grows by one, and the remainder is padded with 1x1 unit
    blocks.  Both defining properties are checked before returning.
    """
    validate(t)
    if warn_reducible and not is_irreducible(t):
        warnings.warn(
            "tuple is reducible: local data is computed, but the preservation "
            "theorem is not asserted",
            ReducibleInputWarning,
            stacklevel=2,
        )
    n = t.rank
    components = []
    for loc, a in t.finite_points:
        restricted, _ = restrict_to_image(a)
        components.append(
            ExponentialComponent(
                coefficient=loc,
                regular_monodromy=restricted,
                dimension=restricted.rows,
            )
        )
    rank_hat = sum(c.dimension for c in components)

    _, non_unit = split_unit_part(t.infinity_matrix)
    partition = unit_block_partition(t.infinity_matrix)
    padding = rank_hat - n - partition.block_count
    if padding < 0:
        raise NonRealizableError(
            "non-realizable minimal pair: the sum of rank(A_i - 1) over the "
            "finite points is smaller than rank + dim ker(A_inf - 1); the "
            "tuple cannot be irreducible"
        )
    blocks = [non_unit]
    blocks.extend(jordan_block(size + 1, 1) for size in partition.sizes)
    if padding:
        blocks.append(QMatrix.identity(padding))
    zero_monodromy = block_diag(blocks)

    if fixed_space_dim(zero_monodromy) != rank_hat - n:
        raise RuntimeError("reconstruction failed the kernel-dimension check")
    restricted_zero, _ = restrict_to_image(zero_monodromy)
    if not similar(restricted_zero, t.infinity_matrix):
        raise RuntimeError("reconstruction failed the restriction similarity check")

    return FourierLocalData(
        rank_hat=rank_hat,
        zero_monodromy=zero_monodromy,
        components=tuple(components),
    )


def rig_fourier(data: FourierLocalData) -> int:
    """Rigidity index of the transform from its local data."""
    dims = [c.dimension for c in data.components]
    total = sum(dims)
    return (
        centralizer_dimension(data.zero_monodromy)
        + sum(centralizer_dimension(c.regular_monodromy) for c in data.components)
        + sum(d * d for d in dims)
        - total * total
    )


def irregularity_end(data: FourierLocalData) -> int:
    """Irregularity at infinity of the endomorphism connection."""
    dims = [c.dimension for c in data.components]
    total = sum(dims)
    return total * total - sum(d * d for d in dims)


def formal_euler_end_min(data: FourierLocalData) -> int:
    """Formal Euler characteristic of the minimal endomorphism extension."""
    return sum(centralizer_dimension(c.regular_monodromy) for c in data.components)


def preservation_details(
    t: MonodromyTuple, *, force: bool = False
) -> tuple[PreservationReport, FourierLocalData]:
    """Preservation report together with the local data it was computed from."""
    validate(t)
    if not is_irreducible(t) and not force:
        raise HypothesisViolationError("theorem hypothesis violated: tuple is reducible")
    rig_source = rigidity_index(t)
    data = stationary_phase(t, warn_reducible=False)
    rig_transformed = rig_fourier(data)
    n = t.rank
    identities = []
    for (loc, a), component in zip(t.finite_points, data.components):
        lhs = centralizer_dimension(a) - centralizer_dimension(component.regular_monodromy)
        rhs = (n - component.dimension) ** 2
        identities.append(PointIdentity(format_rational(loc), lhs, rhs))
    lhs_inf = centralizer_dimension(t.infinity_matrix) - centralizer_dimension(
        data.zero_monodromy
    )
    rhs_inf = -((data.rank_hat - n) ** 2)
    identities.append(PointIdentity("infinity", lhs_inf, rhs_inf))
    report = PreservationReport(
        rig_source=rig_source,
        rig_fourier=rig_transformed,
        equal=rig_source == rig_transformed,
        per_point_identities=tuple(identities),
        irregularity=irregularity_end(data),
    )
    return report, data


def verify_preservation(t: MonodromyTuple, *, force: bool = False) -> PreservationReport:
    """Compare the rigidity index of a tuple with that of its transform.

    Requires irreducibility unless forced; the report also carries the
    per-point centralizer identities (finite points first, then the
    zero/infinity pairing) and the irregularity at infinity.
    """
    report, _ = preservation_details(t, force=force)
    return report


def fourier_data_to_json(data: FourierLocalData) -> dict:
    return {
        "rank_hat": data.rank_hat,
        "zero_monodromy": matrix_to_json(data.zero_monodromy),
        "components": [
            {
                "exp_coefficient": format_rational(c.coefficient),
                "dimension": c.dimension,
                "regular_monodromy": matrix_to_json(c.regular_monodromy),
            }
            for c in data.components
        ],
    }


def fourier_data_from_json(payload: dict) -> FourierLocalData:
    return FourierLocalData(
        rank_hat=int(payload["rank_hat"]),
        zero_monodromy=matrix_from_json(payload["zero_monodromy"]),
        components=tuple(
            ExponentialComponent(
                coefficient=parse_rational(item["exp_coefficient"]),
                regular_monodromy=matrix_from_json(item["regular_monodromy"]),
                dimension=int(item["dimension"]),
            )
            for item in payload["components"]
        ),
    )


def preservation_report_to_json(report: PreservationReport) -> dict:
    return {
        "rig_source": report.rig_source,
        "rig_fourier": report.rig_fourier,
        "equal": report.equal,
        "per_point_identities": [
            {"point": p.point, "lhs": p.lhs, "rhs": p.rhs}
            for p in report.per_point_identities
        ],
        "irregularity": report.irregularity,
    }
