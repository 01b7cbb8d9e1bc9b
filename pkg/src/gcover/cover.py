"""Cover data: a finite group acting on a branched cover of a closed surface.

A datum is a finite group G together with images of the standard generators
of the fundamental group of a genus-gbar surface with n punctures:

* ``handles`` — images a_1, b_1, ..., a_gbar, b_gbar of the handle loops,
* ``branches`` — images x_1, ..., x_n of the loops around the branch points,

subject to the surface relation
``[a_1, b_1] ... [a_gbar, b_gbar] x_1 ... x_n = 1`` and to the requirement
that the images generate G (connected total space).  Branch images must be
nontrivial (otherwise the point is not a branch point).

The covering surface X it classifies carries a left G-action; right
multiplication describes the monodromy on fibers.
"""

from gcover.errors import (
    NotGenerating,
    RelationViolated,
    TrivialBranchMonodromy,
    ValidationError,
)


class CoverDatum:
    """A G-cover of a closed genus-gbar surface branched at n points."""

    def __init__(self, group, gbar, handles, branches, validate=True):
        self.group = group
        self.gbar = int(gbar)
        self.handles = list(handles)
        self.branches = list(branches)
        if validate:
            self.validate()

    def validate(self):
        G = self.group
        if self.gbar < 0:
            raise ValidationError("base genus must be non-negative")
        if len(self.handles) != 2 * self.gbar:
            raise ValidationError(
                f"expected {2 * self.gbar} handle images, got {len(self.handles)}"
            )
        for x in self.handles + self.branches:
            if not (0 <= x < G.order):
                raise ValidationError(f"element id {x} out of range")
        for q, x in enumerate(self.branches):
            if x == 0:
                raise TrivialBranchMonodromy(
                    f"branch point {q + 1} has trivial local monodromy"
                )
        w = 0
        for i in range(self.gbar):
            w = G.mul(w, G.commutator(self.handles[2 * i], self.handles[2 * i + 1]))
        for x in self.branches:
            w = G.mul(w, x)
        if w != 0:
            raise RelationViolated(
                "handle commutators times branch images is not the identity"
            )
        gen = G.subgroup_closure(self.handles + self.branches)
        if len(gen) != G.order:
            raise NotGenerating(
                f"images generate a subgroup of order {len(gen)} < {G.order}"
            )

    # --- elementary invariants ---------------------------------------------

    @property
    def n_branches(self):
        return len(self.branches)

    def branch_orders(self):
        return [self.group.order_of(x) for x in self.branches]

    def handle_pairs(self):
        return [
            (self.handles[2 * i], self.handles[2 * i + 1]) for i in range(self.gbar)
        ]

    def total_genus(self):
        """Genus of the covering surface (Riemann-Hurwitz)."""
        N = self.group.order
        ram = 0  # sum over branch fibers of (d_q - 1) per fiber point, times fibers
        for d in self.branch_orders():
            ram += (N // d) * (d - 1)
        two_g_minus_2 = N * (2 * self.gbar - 2) + ram
        if two_g_minus_2 % 2:
            raise ValidationError("Riemann-Hurwitz parity failure")  # pragma: no cover
        g = (two_g_minus_2 + 2) // 2
        if g < 0:
            raise ValidationError("negative genus")  # pragma: no cover
        return g

    def euler_characteristic(self):
        return 2 - 2 * self.total_genus()

    # --- quotients ------------------------------------------------------------

    def quotient_datum(self, normal_ids):
        """The induced (G/N)-cover datum of the quotient surface X/N."""
        Q, proj = self.group.quotient_group(normal_ids)
        handles = [proj[x] for x in self.handles]
        branches = [proj[x] for x in self.branches if proj[x] != 0]
        return CoverDatum(Q, self.gbar, handles, branches)

    def quotient_genus(self, sub_ids):
        """Genus of X/N for any subgroup N (not necessarily normal).

        Computed from the Euler characteristic of the quotient cell structure:
        2 - 2 g_N = [G:N](2 - 2 gbar - n) + sum over branch points of the
        number of orbits of <x_Q> acting on the cosets N\\G.
        """
        G = self.group
        sub = sorted(set(sub_ids))
        if not G.is_subgroup(sub):
            raise ValidationError("quotient by a non-subgroup")
        cosets = G.right_cosets(sub)
        coset_of = {}
        for ci, cos in enumerate(cosets):
            for x in cos:
                coset_of[x] = ci
        index = len(cosets)
        chi = index * (2 - 2 * self.gbar - self.n_branches)
        for x in self.branches:
            seen = set()
            orbits = 0
            for ci, cos in enumerate(cosets):
                if ci in seen:
                    continue
                orbits += 1
                cur = ci
                while cur not in seen:
                    seen.add(cur)
                    cur = coset_of[G.mul(cosets[cur][0], x)]
            chi += orbits
        if chi % 2:  # pragma: no cover
            raise ValidationError("quotient Euler characteristic parity failure")
        gN = (2 - chi) // 2
        if gN < 0:  # pragma: no cover
            raise ValidationError("negative quotient genus")
        return gN

    # --- fixed points of the deck action ---------------------------------------

    def fixed_point_count(self, g):
        """Number of fixed points of a nontrivial deck transformation g.

        Fixed points live over branch points; the fiber over branch point q
        is the set of cosets u<x_q>, fixed by g exactly when u^-1 g u lies in
        <x_q>.
        """
        if g == 0:
            raise ValidationError("the identity fixes the whole surface")
        G = self.group
        total = 0
        for x in self.branches:
            cyc = set(G.subgroup_closure([x]))
            for orbit in G.right_mult_orbits(x):
                u = orbit[0]
                if G.mul(G.mul(G.inv(u), g), u) in cyc:
                    total += 1
        return total

    def is_hyperelliptic_involution(self, z):
        """True when the involution z has rational quotient X/<z>.

        Requires z of order exactly 2.  Cross-checked two ways: genus of the
        quotient surface, and the fixed-point count 2g + 2 forced by the
        order-2 ramification formula when the quotient is rational.
        """
        G = self.group
        if G.order_of(z) != 2:
            raise ValidationError("hyperellipticity test requires an element of order 2")
        g = self.total_genus()
        by_count = self.fixed_point_count(z) == 2 * g + 2
        by_quotient = self.quotient_genus([0, z]) == 0
        if by_count != by_quotient:  # pragma: no cover
            raise ValidationError("fixed-point and quotient hyperellipticity disagree")
        return by_quotient

    # --- reports ----------------------------------------------------------------

    def signature(self):
        """(gbar; d_1, ..., d_n) with branch orders sorted."""
        return (self.gbar, tuple(sorted(self.branch_orders())))

    def moduli_dimension(self):
        """Dimension 3*gbar - 3 + n of the space of branch-point configurations."""
        return 3 * self.gbar - 3 + self.n_branches

    def moduli_dim_positive(self):
        """True when the punctured quotient has negative Euler characteristic
        and is not the thrice-punctured sphere (the rigid case)."""
        chi = 2 - 2 * self.gbar - self.n_branches
        return chi < 0 and (self.gbar, self.n_branches) != (0, 3)

    def geometry_report(self):
        gbar, orders = self.signature()
        n = self.n_branches
        return {
            "group_order": self.group.order,
            "quotient_genus": gbar,
            "branch_count": n,
            "branch_orders": list(orders),
            "total_genus": self.total_genus(),
            "euler_characteristic": self.euler_characteristic(),
            "orbifold_euler_characteristic": 2 - 2 * gbar - n,
            "moduli_dimension": self.moduli_dimension(),
            "moduli_dim_positive": self.moduli_dim_positive(),
        }
