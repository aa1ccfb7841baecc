"""Deliberately broken carriers used to show that each suite can fail.

A mutant wraps a correct carrier and overrides one oracle or operation;
everything else is delegated. Mutants are loadable from model files through
the ``mutation`` field, so the CLI can demonstrate a rejected model.
"""

from __future__ import annotations

from fractions import Fraction

from .carriers import Carrier, CarrierError, FunctionCarrier, MatrixCarrier

MUTATIONS = (
    "drop_orthosupplement",
    "two_sided_cone",
    "diagonal_psd",
    "non_idempotent_projection",
    "left_compression",
    "broken_join",
)

# suite that is expected to reject each mutation
KILLED_BY = {
    "drop_orthosupplement": "axioms",
    "two_sided_cone": "axioms",
    "diagonal_psd": "axioms",
    "non_idempotent_projection": "projections",
    "left_compression": "compression",
    "broken_join": "boolean",
}


class MutatedCarrier:
    """A carrier with one defect; see :data:`MUTATIONS`."""

    def __init__(self, base: Carrier, mutation: str):
        if mutation not in MUTATIONS:
            raise CarrierError(f"unknown mutation {mutation!r}")
        if mutation == "diagonal_psd" and not isinstance(base, MatrixCarrier):
            raise CarrierError("diagonal_psd needs a matrix carrier")
        if mutation in ("drop_orthosupplement", "broken_join") and not (
                isinstance(base, FunctionCarrier) and base.enumerable_E):
            raise CarrierError(f"{mutation} needs an enumerable function carrier")
        self.base = base
        self.mutation = mutation
        self.kind = base.kind
        self.enumerable_E = base.enumerable_E
        self.archimedean = base.archimedean
        if mutation == "drop_orthosupplement":
            self._e0 = base.indicator([0])
            self._effects = [base.zero(), base.one(), self._e0]

    def __getattr__(self, name):
        return getattr(self.base, name)

    # -- overridden oracles ----------------------------------------------
    def is_in_Eplus(self, x) -> bool:
        if self.mutation == "two_sided_cone":
            return self.base.is_in_Eplus(x) or self.base.is_in_Eplus(-x)
        if self.mutation == "diagonal_psd":
            n = self.base.n
            return self.base.is_in_G(x) and all(x.rows[i][i] >= 0 for i in range(n))
        return self.base.is_in_Eplus(x)

    def is_in_E(self, x) -> bool:
        if self.mutation == "drop_orthosupplement":
            return x in self._effects
        return self.is_in_G(x) and self.is_in_Eplus(x) and self.is_in_Eplus(self.one() - x)

    def enumerate_E(self) -> list:
        if self.mutation == "drop_orthosupplement":
            return list(self._effects)
        return self.base.enumerate_E()

    def candidate_effects(self, rng, attempts):
        out = []
        for _ in range(attempts):
            g = self.sample_G(rng, 1)
            if self.is_in_E(g):
                out.append(g)
        return out

    def projection_universe(self, rng=None, size=8) -> list:
        ps = self.base.projection_universe(rng, size)
        if self.mutation == "non_idempotent_projection":
            ps = ps + [self.base.one() * Fraction(1, 2)]
        return ps

    def compress(self, p, g):
        if self.mutation == "left_compression":
            return p * g
        return self.base.compress(p, g)

    def boolean_hom_override(self, view):
        """For ``broken_join``: the identity map, except on one join of atoms."""
        if self.mutation != "broken_join":
            return None
        from .boolean_structure import BooleanHom

        phi = BooleanHom.from_atoms(view, view, {a: a for a in view.atoms})
        a, b = view.atoms[0], view.atoms[1]
        phi.table[view.join(a, b)] = a
        return phi

    def describe(self) -> dict:
        d = dict(self.base.describe())
        d["mutation"] = self.mutation
        return d

    def __repr__(self):
        return f"<MutatedCarrier {self.describe()}>"


def mutate(base: Carrier, mutation: str) -> MutatedCarrier:
    return MutatedCarrier(base, mutation)
