"""Finite permutation groups.

Groups are generated from permutations of ``{0, ..., degree-1}`` by
breadth-first closure.  Products compose left-to-right: ``mul(a, b)`` is
"apply a, then b", so evaluating a word along a concatenated path is a plain
left-to-right fold.  Element 0 is always the identity, and every derived
ordering (conjugacy classes, subgroups, cosets) is deterministic.
"""

from math import lcm

from gcover.errors import UnsupportedComputation, ValidationError


def parse_cycle_text(text):
    """Parse 1-based disjoint-cycle notation into a list of 0-based cycles.

    ``"(1 2 3)(4 5)"`` -> ``[[0, 1, 2], [3, 4]]``.  ``"id"`` and ``"()"``
    denote the identity (empty cycle list).  Points may be separated by
    spaces or commas.  Cycles must be disjoint.
    """
    s = text.strip()
    if s in ("id", "()", ""):
        return []
    if not s.startswith("("):
        raise ValidationError(f"bad permutation {text!r}: expected cycle notation")
    cycles = []
    seen = set()
    depth = 0
    cur = []
    token = ""

    def flush_token():
        nonlocal token
        if token:
            try:
                v = int(token)
            except ValueError:
                raise ValidationError(f"bad point {token!r} in permutation {text!r}") from None
            if v < 1:
                raise ValidationError(f"points are 1-based; got {v} in {text!r}")
            if v - 1 in seen:
                raise ValidationError(f"point {v} repeated in permutation {text!r}")
            seen.add(v - 1)
            cur.append(v - 1)
            token = ""

    for ch in s:
        if ch == "(":
            if depth:
                raise ValidationError(f"nested parentheses in permutation {text!r}")
            depth = 1
            cur = []
        elif ch == ")":
            if not depth:
                raise ValidationError(f"unbalanced parentheses in permutation {text!r}")
            flush_token()
            depth = 0
            if len(cur) == 1:
                raise ValidationError(f"singleton cycle in permutation {text!r}")
            if cur:
                cycles.append(cur)
        elif ch in " ,":
            flush_token()
        elif ch.isdigit():
            token += ch
        else:
            raise ValidationError(f"unexpected character {ch!r} in permutation {text!r}")
    if depth:
        raise ValidationError(f"unbalanced parentheses in permutation {text!r}")
    return cycles


def cycles_to_perm(cycles, degree):
    """Image tuple of a product of disjoint 0-based cycles on ``degree`` points."""
    images = list(range(degree))
    for cyc in cycles:
        for i, pt in enumerate(cyc):
            if pt >= degree:
                raise ValidationError(f"point {pt + 1} exceeds degree {degree}")
            images[pt] = cyc[(i + 1) % len(cyc)]
    return tuple(images)


def parse_permutation(text, degree):
    return cycles_to_perm(parse_cycle_text(text), degree)


def perm_to_cycles(images):
    """Disjoint cycles (1-based string form) of an image tuple."""
    n = len(images)
    seen = [False] * n
    parts = []
    for start in range(n):
        if seen[start] or images[start] == start:
            seen[start] = True
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x + 1)
            x = images[x]
        parts.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(parts) if parts else "()"


def _compose(p, q):
    """Left-to-right composition: apply p, then q."""
    return tuple(q[x] for x in p)


class FiniteGroup:
    """A finite group of permutations, closed and indexed."""

    def __init__(self, degree, elements, gens):
        self.degree = degree
        self.elements = elements  # list of image tuples; elements[0] is the identity
        self.index = {p: i for i, p in enumerate(elements)}
        self.gens = gens  # ids of the defining generators
        self.order = len(elements)
        self._inv = None
        self._mtable = None
        self._classes = None
        self._class_of = None
        self._orders = None
        self._subgroups = None

    # --- construction ---------------------------------------------------

    @classmethod
    def from_permutations(cls, perms, degree=None, cap=None):
        if degree is None:
            degree = max((len(p) for p in perms), default=1)
        gens = []
        for p in perms:
            p = tuple(p)
            if len(p) != degree or sorted(p) != list(range(degree)):
                raise ValidationError(f"not a permutation of degree {degree}: {p}")
            gens.append(p)
        ident = tuple(range(degree))
        elements = [ident]
        index = {ident: 0}
        queue = [ident]
        while queue:
            nxt = []
            for a in queue:
                for g in gens:
                    b = _compose(a, g)
                    if b not in index:
                        index[b] = len(elements)
                        elements.append(b)
                        nxt.append(b)
                        if cap is not None and len(elements) > cap:
                            raise UnsupportedComputation(
                                f"group order exceeds cap {cap}"
                            )
            queue = nxt
        return cls(degree, elements, [index[g] for g in gens])

    @classmethod
    def from_cycle_strings(cls, texts, degree=None, cap=None):
        all_cycles = [parse_cycle_text(t) for t in texts]
        if degree is None:
            degree = max(
                (pt + 1 for cycs in all_cycles for c in cycs for pt in c), default=1
            )
        return cls.from_permutations(
            [cycles_to_perm(c, degree) for c in all_cycles], degree, cap
        )

    # --- basic operations -------------------------------------------------

    def mul(self, a, b):
        if self._mtable is None and self.order <= 512:
            self._build_mtable()
        if self._mtable is not None:
            return self._mtable[a][b]
        return self.index[_compose(self.elements[a], self.elements[b])]

    def _build_mtable(self):
        els = self.elements
        idx = self.index
        self._mtable = [
            [idx[_compose(a, b)] for b in els] for a in els
        ]

    def inv(self, a):
        if self._inv is None:
            inv = [0] * self.order
            for i, p in enumerate(self.elements):
                q = [0] * self.degree
                for x, y in enumerate(p):
                    q[y] = x
                inv[i] = self.index[tuple(q)]
            self._inv = inv
        return self._inv[a]

    def power(self, a, k):
        if k < 0:
            return self.power(self.inv(a), -k)
        out = 0
        base = a
        while k:
            if k & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            k >>= 1
        return out

    def conjugate(self, a, g):
        """g^-1 * a * g."""
        return self.mul(self.mul(self.inv(g), a), g)

    def commutator(self, a, b):
        """a * b * a^-1 * b^-1."""
        return self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))

    def order_of(self, a):
        if self._orders is None:
            self._orders = [None] * self.order
        if self._orders[a] is None:
            k = 1
            x = a
            while x != 0:
                x = self.mul(x, a)
                k += 1
            self._orders[a] = k
        return self._orders[a]

    def exponent(self):
        out = 1
        for a in range(self.order):
            out = lcm(out, self.order_of(a))
        return out

    def is_abelian(self):
        return all(
            self.mul(g, h) == self.mul(h, g) for g in self.gens for h in self.gens
        )

    def center(self):
        return [
            a
            for a in range(self.order)
            if all(self.mul(a, g) == self.mul(g, a) for g in self.gens)
        ]

    def central_involutions(self):
        return [a for a in self.center() if a != 0 and self.mul(a, a) == 0]

    # --- conjugacy structure ----------------------------------------------

    def conjugacy_classes(self):
        """Classes as sorted id lists; identity class first, then by (size, min id)."""
        if self._classes is None:
            visited = [False] * self.order
            classes = []
            for a in range(self.order):
                if visited[a]:
                    continue
                orbit = {a}
                queue = [a]
                while queue:
                    x = queue.pop()
                    for g in self.gens:
                        y = self.conjugate(x, g)
                        if y not in orbit:
                            orbit.add(y)
                            queue.append(y)
                for x in orbit:
                    visited[x] = True
                classes.append(sorted(orbit))
            classes.sort(key=lambda c: (len(c), c[0]))
            class_of = [-1] * self.order
            for ci, c in enumerate(classes):
                for x in c:
                    class_of[x] = ci
            self._classes = classes
            self._class_of = class_of
        return self._classes

    def class_of(self, a):
        self.conjugacy_classes()
        return self._class_of[a]

    def class_reps(self):
        return [c[0] for c in self.conjugacy_classes()]

    def power_map(self, k):
        """Class index of rep^k, per class."""
        return [self.class_of(self.power(c[0], k)) for c in self.conjugacy_classes()]

    # --- subgroups, quotients ----------------------------------------------

    def subgroup_closure(self, seed):
        sub = {0}
        queue = [0]
        seeds = sorted(set(seed))
        for s in seeds:
            if s not in sub:
                sub.add(s)
                queue.append(s)
        while queue:
            x = queue.pop()
            for s in seeds:
                y = self.mul(x, s)
                if y not in sub:
                    sub.add(y)
                    queue.append(y)
        return tuple(sorted(sub))

    def all_subgroups(self):
        """Every subgroup, as sorted id tuples, ordered by (order, ids)."""
        if self._subgroups is None:
            found = {(0,)}
            frontier = [(0,)]
            while frontier:
                nxt = []
                for sub in frontier:
                    inside = set(sub)
                    for g in range(1, self.order):
                        if g in inside:
                            continue
                        bigger = self.subgroup_closure(sub + (g,))
                        if bigger not in found:
                            found.add(bigger)
                            nxt.append(bigger)
                frontier = nxt
            self._subgroups = sorted(found, key=lambda s: (len(s), s))
        return self._subgroups

    def is_subgroup(self, ids):
        s = set(ids)
        return 0 in s and all(self.mul(a, b) in s for a in s for b in s)

    def is_normal(self, ids):
        s = set(ids)
        return all(self.conjugate(a, g) in s for a in s for g in self.gens)

    def normal_subgroups(self):
        return [s for s in self.all_subgroups() if self.is_normal(s)]

    def right_mult_orbits(self, x):
        """Orbits of right multiplication by x (the left cosets u<x>), ordered."""
        seen = [False] * self.order
        orbits = []
        for start in range(self.order):
            if seen[start]:
                continue
            orb = []
            u = start
            while not seen[u]:
                seen[u] = True
                orb.append(u)
                u = self.mul(u, x)
            orbits.append(orb)
        return orbits

    def right_cosets(self, sub_ids):
        """Right cosets (sub)*x, each sorted, ordered by smallest member."""
        sub = sorted(set(sub_ids))
        seen = [False] * self.order
        cosets = []
        for x in range(self.order):
            if seen[x]:
                continue
            cos = sorted(self.mul(n, x) for n in sub)
            for y in cos:
                seen[y] = True
            cosets.append(cos)
        return cosets

    def quotient_group(self, normal_ids):
        """The quotient by a normal subgroup.

        Returns ``(Q, proj)`` where ``proj[g]`` is the Q-id of the coset of g.
        """
        if not self.is_normal(normal_ids):
            raise ValidationError("quotient by a non-normal subgroup")
        cosets = self.right_cosets(normal_ids)
        coset_of = [0] * self.order
        for ci, cos in enumerate(cosets):
            for x in cos:
                coset_of[x] = ci
        perms = []
        for g in self.gens:
            perms.append(tuple(coset_of[self.mul(cos[0], g)] for cos in cosets))
        Q = FiniteGroup.from_permutations(perms, degree=len(cosets))
        if Q.order != len(cosets):
            raise ValidationError("quotient construction failed")  # pragma: no cover
        proj = [Q.index[_q_perm(coset_of, cosets, self, g)] for g in range(self.order)]
        return Q, proj

    def subgroup_as_group(self, ids):
        """A subgroup as a standalone group (via its regular action).

        Returns ``(H, to_parent)`` with ``to_parent[h]`` the parent id of h.
        """
        S = sorted(set(ids))
        if not self.is_subgroup(S):
            raise ValidationError("ids do not form a subgroup")
        pos = {x: i for i, x in enumerate(S)}
        perms = [tuple(pos[self.mul(s, h)] for s in S) for h in S]
        H = FiniteGroup.from_permutations(perms, degree=len(S))
        if H.order != len(S):  # pragma: no cover
            raise ValidationError("subgroup construction failed")
        pos0 = pos[0]
        to_parent = [S[p[pos0]] for p in H.elements]
        return H, to_parent

    def __repr__(self):
        return f"<FiniteGroup order={self.order} degree={self.degree}>"


def _q_perm(coset_of, cosets, G, g):
    return tuple(coset_of[G.mul(cos[0], g)] for cos in cosets)


# --- named groups -----------------------------------------------------------


def cyclic(n):
    if n == 1:
        return FiniteGroup.from_permutations([(0,)], degree=1)
    return FiniteGroup.from_permutations([tuple((i + 1) % n for i in range(n))])


def dihedral(n):
    """Dihedral group of order 2n (n >= 3)."""
    r = tuple((i + 1) % n for i in range(n))
    s = tuple((n - i) % n for i in range(n))
    return FiniteGroup.from_permutations([r, s])


def symmetric(n):
    if n == 1:
        return cyclic(1)
    if n == 2:
        return cyclic(2)
    t = (1, 0) + tuple(range(2, n))
    c = tuple((i + 1) % n for i in range(n))
    return FiniteGroup.from_permutations([t, c])


def alternating(n):
    if n <= 2:
        return cyclic(1)
    if n == 3:
        return FiniteGroup.from_permutations([(1, 2, 0)])
    three = (1, 2, 0) + tuple(range(3, n))
    if n % 2:
        big = tuple((i + 1) % n for i in range(n))
    else:
        big = (0,) + tuple(1 + ((i + 1) % (n - 1)) for i in range(n - 1))
    return FiniteGroup.from_permutations([three, big])


def generalized_quaternion(order):
    """Q_{2^k}: <a, b | a^(2^(k-1)) = 1, b^2 = a^(2^(k-2)), b a b^-1 = a^-1>."""
    if order < 8 or order & (order - 1):
        raise ValidationError("generalized quaternion groups have order 2^k >= 8")
    m = order // 2  # order of a
    half = m // 2

    def eid(i, eps):
        return i + m * eps

    a_img = [0] * order
    b_img = [0] * order
    for i in range(m):
        for eps in (0, 1):
            x = eid(i, eps)
            # right multiplication by a = (1, 0) and by b = (0, 1)
            if eps == 0:
                a_img[x] = eid((i + 1) % m, 0)
                b_img[x] = eid(i, 1)
            else:
                a_img[x] = eid((i - 1) % m, 1)
                b_img[x] = eid((i + half) % m, 0)
    return FiniteGroup.from_permutations([tuple(a_img), tuple(b_img)], degree=order)


def quaternion():
    return generalized_quaternion(8)


def direct_product(A, B):
    perms = []
    for g in A.gens:
        perms.append(A.elements[g] + tuple(A.degree + i for i in range(B.degree)))
    ident_a = tuple(range(A.degree))
    for h in B.gens:
        perms.append(ident_a + tuple(A.degree + x for x in B.elements[h]))
    return FiniteGroup.from_permutations(perms, degree=A.degree + B.degree)


def abelian(invariants):
    G = cyclic(invariants[0])
    for n in invariants[1:]:
        G = direct_product(G, cyclic(n))
    return G


def klein_four():
    return abelian([2, 2])


def elementary_abelian(p, k):
    return abelian([p] * k)
