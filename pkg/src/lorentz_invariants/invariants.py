"""Reynolds operators and generators of invariant rings.

For a group ``Gamma = Sigma x| <delta_1, ..., delta_m>`` with every ``delta_k``
an involution, the invariant ring is built one involution at a time: from
generators ``u_i`` of the current ring, the set

    { R(u_i), S(u_i) S(u_j) : i <= j }

generates the ring invariant under the next involution as well.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from dataclasses import dataclass, field

from .exceptions import NotInvariantError, NotInvolutionError, NotLorentzError
from .linalg import Matrix, block_diag, is_lorentz
from .polyring import algebra_member_bounded, linear_reduce, substitute_linear
from .scalar import as_scalar

log = logging.getLogger(__name__)

HALF = as_scalar(Fraction(1, 2))


@dataclass(frozen=True)
class GroupSpec:
    """Presentation of ``Sigma x| Delta`` for the invariant algorithm.

    ``sigma_generators`` are only used for checking; the algorithm starts from
    ``sigma_invariant_gens``, a generating set of the ring of Sigma-invariants.
    """

    ambient_dim: int
    sigma_generators: tuple = ()
    sigma_invariant_gens: tuple = ()
    involutions: tuple = ()
    product_kind: str = "semidirect"
    notes: dict = field(default_factory=dict, compare=False)

    def validate(self, blockwise=False):
        """Check the involutions and Sigma invariants; returns self.

        With ``blockwise`` the matrices are diagonal lifts block_diag(g, g)
        and the Lorentz test is applied to the block.
        """
        if self.product_kind not in ("semidirect", "direct"):
            raise ValueError(f"product kind must be 'semidirect' or 'direct', not {self.product_kind!r}")
        ident = Matrix.identity(self.ambient_dim)
        for k, delta in enumerate(self.involutions, 1):
            if delta.shape != (self.ambient_dim, self.ambient_dim):
                raise NotInvolutionError(f"involution {k} has shape {delta.shape}")
            if not (is_diagonal_lorentz(delta) if blockwise else is_lorentz(delta)):
                raise NotLorentzError(f"involution {k} is not a Lorentz matrix")
            if delta @ delta != ident:
                raise NotInvolutionError(f"involution {k} does not square to the identity")
        for u in self.sigma_invariant_gens:
            if u.nvars != self.ambient_dim:
                raise ValueError("sigma invariant generators live in the wrong number of variables")
            for sigma in self.sigma_generators:
                if not is_invariant(u, sigma):
                    raise NotInvariantError(f"{u} is not invariant under a sigma generator")
        return self

    @property
    def group_generators(self):
        return tuple(self.sigma_generators) + tuple(self.involutions)


def is_diagonal_lorentz(lifted):
    """Blockwise Lorentz test for a matrix block_diag(g, g)."""
    n = lifted.rows // 2
    if lifted.rows != 2 * n or not n:
        return False
    top = Matrix([r[:n] for r in lifted.entries[:n]])
    return block_diag(top, top) == lifted and is_lorentz(top)


def _check_involution(delta):
    if delta @ delta != Matrix.identity(delta.rows):
        raise NotInvolutionError("delta does not square to the identity")


def reynolds_R(f, delta):
    """(f + f o delta) / 2."""
    _check_involution(delta)
    return (f + substitute_linear(f, delta)).scale(HALF)


def reynolds_S(f, delta):
    """(f - f o delta) / 2."""
    _check_involution(delta)
    return (f - substitute_linear(f, delta)).scale(HALF)


def is_invariant(f, gamma):
    return substitute_linear(f, gamma) == f


def _max_degree(polys):
    return max((p.degree() for p in polys), default=0)


def prune_generators(gens, max_degree):
    """Drop generators lying in the bounded algebra of the others.

    Higher degrees are tried first, so low-degree generators survive.
    """
    order = sorted(range(len(gens)), key=lambda i: (gens[i].degree(), i))
    kept = list(order)
    for i in reversed(order):
        others = [gens[j] for j in kept if j != i]
        if others and algebra_member_bounded(gens[i], others, max_degree):
            kept.remove(i)
    kept_set = set(kept)
    return [g for i, g in enumerate(gens) if i in kept_set]


def involution_step(gens, delta, max_degree=None):
    """One step of the algorithm: invariants under one more involution."""
    _check_involution(delta)
    gens = list(gens)
    if max_degree is None:
        max_degree = 2 * max(_max_degree(gens), 1)
    r_images = [reynolds_R(u, delta) for u in gens]
    s_images = [reynolds_S(u, delta) for u in gens]
    candidates = list(r_images)
    for i, si in enumerate(s_images):
        if si.is_zero():
            continue
        for sj in s_images[i:]:
            if not sj.is_zero():
                candidates.append(si * sj)
    candidates = [p for p in candidates if not p.is_constant()]
    reduced = linear_reduce(candidates)
    # linear_reduce returns input order; re-sort by degree so pruning keeps low degree
    reduced.sort(key=lambda p: p.degree())
    pruned = prune_generators(reduced, max_degree)
    log.debug("involution step: %d candidates, %d independent, %d kept", len(candidates), len(reduced), len(pruned))
    return pruned


def algorithm_generators(spec, max_degree=None):
    """Generators of the ring of invariants of ``spec``'s group."""
    gens = [g for g in spec.sigma_invariant_gens if not g.is_constant()]
    for delta in spec.involutions:
        gens = involution_step(gens, delta, max_degree)
    return gens


def reynolds_images(gens, delta):
    """(R(u_i), S(u_i)) pairs, in input order; used for reporting."""
    return [(reynolds_R(u, delta), reynolds_S(u, delta)) for u in gens]
