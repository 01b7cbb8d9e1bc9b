"""Cell structure of a branched cover built from its monodromy datum.

For a datum (G, gbar, handles, branches) the covering surface is assembled
from the Schreier graph of G acting on itself:

* vertices: group elements (one G-orbit of base points),
* edges: one lift of each base loop (2*gbar handle loops a_i, b_i and one
  loop t_q around each branch point) starting at every vertex,
* faces: one lift of the surface relator word per vertex, plus one disc per
  cycle of each branch letter (capping the punctures).

A breadth-first spanning tree identifies H_1 of the graph with Z^L on the
non-tree ("loop") edges.  Deck transformations act by left multiplication on
vertices; their matrices on Z^L restrict to the space spanned by face
boundaries, and the trace on H_1 of the surface is the difference of the two
traces.  This gives the character of the deck action on H_1 without any
character-theoretic input, which is what makes it useful as an independent
cross-check.
"""

from __future__ import annotations

from fractions import Fraction

from .cyclotomic import cyclo_sum
from .errors import InternalInvariantError
from .kernels import imat_rref


class CoverComplex:
    """CW structure on the total space of a branched G-cover."""

    def __init__(self, datum):
        self.datum = datum
        G = datum.group
        self.group = G
        gbar = datum.gbar
        self.images = list(datum.handles) + list(datum.branches)
        m = len(self.images)
        self.n_labels = m
        self.label_names = [
            f"{'ab'[i % 2]}{i // 2 + 1}" for i in range(2 * gbar)
        ] + [f"t{q + 1}" for q in range(datum.n_branches)]

        V = G.order
        self.n_vertices = V
        self.n_edges = V * m

        # Breadth-first spanning tree rooted at the identity vertex.  Edges
        # are numbered u * m + s (start vertex u, label s).
        gamma = [None] * V
        gamma[0] = []
        tree = set()
        queue = [0]
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            for s in range(m):
                p = self.images[s]
                v = G.mul(u, p)
                if gamma[v] is None:
                    e = u * m + s
                    tree.add(e)
                    gamma[v] = gamma[u] + [(e, 1)]
                    queue.append(v)
                w = G.mul(u, G.inv(p))
                if gamma[w] is None:
                    e = w * m + s
                    tree.add(e)
                    gamma[w] = gamma[u] + [(e, -1)]
                    queue.append(w)
        if any(g is None for g in gamma):  # pragma: no cover
            raise InternalInvariantError("Schreier graph is disconnected")
        self._gamma = gamma
        self._tree = tree
        self.loops = sorted(e for e in range(self.n_edges) if e not in tree)
        self.loop_pos = {e: i for i, e in enumerate(self.loops)}
        self.n_loops = len(self.loops)
        if self.n_loops != self.n_edges - V + 1:  # pragma: no cover
            raise InternalInvariantError("spanning tree has wrong size")

        self._face_words = None
        self._boundary = None
        self._h1_dim = None

    # --- edges and paths ---------------------------------------------------------

    def edge_endpoints(self, e):
        u, s = divmod(e, self.n_labels)
        return u, self.group.mul(u, self.images[s])

    def _translate_edge(self, h, e):
        u, s = divmod(e, self.n_labels)
        return self.group.mul(h, u) * self.n_labels + s

    def path_vector(self, word):
        """Loop coordinates of a closed edge path given as [(edge, sign), ...]."""
        vec = [0] * self.n_loops
        pos = self.loop_pos
        for e, sgn in word:
            i = pos.get(e)
            if i is not None:
                vec[i] += sgn
        return vec

    def _prefix_vectors(self, h):
        """pi(h . tree-path-to-u) for every vertex u, as dense loop vectors."""
        G = self.group
        m = self.n_labels
        pos = self.loop_pos
        out = [None] * self.n_vertices
        for u in range(self.n_vertices):
            vec = [0] * self.n_loops
            for e, sgn in self._gamma[u]:
                v, s = divmod(e, m)
                i = pos.get(G.mul(h, v) * m + s)
                if i is not None:
                    vec[i] += sgn
            out[u] = vec
        return out

    def action_matrix(self, h):
        """Matrix of the deck transformation h on Z^L (columns are images
        of the loop basis), acting on column vectors."""
        G = self.group
        m = self.n_labels
        L = self.n_loops
        pref = self._prefix_vectors(h)
        rows = [[0] * L for _ in range(L)]
        for j, e in enumerate(self.loops):
            u, s = divmod(e, m)
            w = G.mul(u, self.images[s])
            pu = pref[u]
            pw = pref[w]
            for i in range(L):
                rows[i][j] = pu[i] - pw[i]
            te = self.loop_pos.get(G.mul(h, u) * m + s)
            if te is not None:
                rows[te][j] += 1
        return rows

    # --- faces ---------------------------------------------------------------

    def _relator_letters(self):
        letters = []
        for i in range(self.datum.gbar):
            a, b = 2 * i, 2 * i + 1
            letters += [(a, 1), (b, 1), (a, -1), (b, -1)]
        for q in range(self.datum.n_branches):
            letters.append((2 * self.datum.gbar + q, 1))
        return letters

    def face_words(self):
        """All face attaching words as [(edge, sign), ...] lists.

        One lift of the surface relator per vertex, then one disc per cycle
        of each branch letter.  The branch discs are traversed against the
        branch loop so that the face boundaries sum to zero, i.e. the
        orientations are coherent and the total space is a closed oriented
        surface.
        """
        if self._face_words is not None:
            return self._face_words
        G = self.group
        m = self.n_labels
        words = []
        letters = self._relator_letters()
        for u in range(self.n_vertices):
            cur = u
            word = []
            for s, sgn in letters:
                if sgn == 1:
                    word.append((cur * m + s, 1))
                    cur = G.mul(cur, self.images[s])
                else:
                    cur = G.mul(cur, G.inv(self.images[s]))
                    word.append((cur * m + s, -1))
            if cur != u:  # pragma: no cover
                raise InternalInvariantError("relator lift did not close up")
            words.append(word)
        for q in range(self.datum.n_branches):
            s = 2 * self.datum.gbar + q
            x = self.images[s]
            for orbit in G.right_mult_orbits(x):
                word = [(orbit[k] * m + s, -1) for k in range(len(orbit) - 1, -1, -1)]
                words.append(word)
        self._face_words = words
        return words

    def boundary_data(self):
        """Canonical integer row-echelon basis of the face-boundary space,
        with pivot columns, in loop coordinates."""
        if self._boundary is not None:
            return self._boundary
        vectors = [self.path_vector(w) for w in self.face_words()]
        total = [sum(col) for col in zip(*vectors)] if vectors else []
        if any(total):  # pragma: no cover
            raise InternalInvariantError("face boundaries are not coherently oriented")
        if vectors:
            rows, pivots = imat_rref(vectors)
        else:
            rows, pivots = [], []
        self._boundary = (rows, pivots)
        h1 = self.n_loops - len(rows)
        expected = 2 * self.datum.total_genus()
        if h1 != expected:  # pragma: no cover
            raise InternalInvariantError(
                f"homology rank {h1} does not match genus count {expected}"
            )
        self._h1_dim = h1
        return self._boundary

    def h1_dim(self):
        self.boundary_data()
        return self._h1_dim

    # --- traces on homology ----------------------------------------------------

    def trace_on_h1(self, h):
        """Trace of the deck transformation h on H_1 of the closed surface."""
        M = self.action_matrix(h)
        tr_full = sum(M[i][i] for i in range(self.n_loops))
        rows, pivots = self.boundary_data()
        tr_bdry = Fraction(0)
        for i, row in enumerate(rows):
            j = pivots[i]
            mrow = M[j]
            num = sum(mrow[k] * row[k] for k in range(self.n_loops))
            tr_bdry += Fraction(num, row[j])
        val = tr_full - tr_bdry
        if val.denominator != 1:  # pragma: no cover
            raise InternalInvariantError("trace on homology is not an integer")
        return int(val)

    def verify_boundary_stability(self, h):
        """Check that h maps the boundary space into itself, exactly."""
        M = self.action_matrix(h)
        rows, pivots = self.boundary_data()
        for row in rows:
            img = [
                sum(M[i][k] * row[k] for k in range(self.n_loops))
                for i in range(self.n_loops)
            ]
            coeffs = [Fraction(img[pivots[i]], rows[i][pivots[i]]) for i in range(len(rows))]
            recon = [Fraction(0)] * self.n_loops
            for c, r in zip(coeffs, rows):
                for k in range(self.n_loops):
                    recon[k] += c * r[k]
            if any(recon[k] != img[k] for k in range(self.n_loops)):
                return False
        return True

    def h1_basis_columns(self):
        """Loop coordinates forming a basis of H_1 over Q (non-pivot columns
        of the boundary echelon form)."""
        rows, pivots = self.boundary_data()
        piv = set(pivots)
        return [j for j in range(self.n_loops) if j not in piv]

    def reduce_cycle(self, vec):
        """Coordinates of a cycle's homology class in the h1 basis, found by
        eliminating the boundary-pivot coordinates."""
        rows, pivots = self.boundary_data()
        v = [Fraction(x) for x in vec]
        for i, row in enumerate(rows):
            c = v[pivots[i]] / row[pivots[i]]
            if c:
                for k in range(self.n_loops):
                    v[k] -= c * Fraction(row[k])
        return [v[j] for j in self.h1_basis_columns()]

    def h1_matrix(self, h):
        """Matrix of the deck transformation h on H_1 in the h1 basis,
        acting on column vectors, with exact rational entries."""
        from .linalg import QMat

        M = self.action_matrix(h)
        free = self.h1_basis_columns()
        cols = [
            self.reduce_cycle([M[i][f] for i in range(self.n_loops)])
            for f in free
        ]
        k = len(free)
        return QMat([[cols[j][i] for j in range(k)] for i in range(k)])

    def h1_character_values(self):
        """Trace of the deck action on H_1 at one representative per
        conjugacy class (the trace is a class function)."""
        return [self.trace_on_h1(z) for z in self.group.class_reps()]

    def isotype_multiplicities(self, table):
        """Multiplicity of each irreducible character in the H_1 deck
        representation, from the traces alone."""
        if table.group is not self.group and table.group.elements != self.group.elements:
            raise InternalInvariantError("character table belongs to a different group")
        traces = self.h1_character_values()
        n = self.group.order
        mults = []
        for i in range(table.r):
            acc = cyclo_sum(
                table.chars[i][table.inverse_class[k]] * Fraction(table.sizes[k] * traces[k])
                for k in range(table.r)
            )
            val = acc.as_fraction() / n
            if val.denominator != 1 or val < 0:  # pragma: no cover
                raise InternalInvariantError("H_1 multiplicity is not a non-negative integer")
            mults.append(int(val))
        total = sum(m * table.degrees[i] for i, m in enumerate(mults))
        if total != self.h1_dim():  # pragma: no cover
            raise InternalInvariantError("H_1 multiplicities do not sum to the rank")
        return mults
