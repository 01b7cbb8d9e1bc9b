"""Isotypical decomposition of holomorphic forms and homology of a cover.

Everything here is exact.  The main inputs are a branched-cover datum and
the character table of its deck group; the outputs are the multiplicities
of each irreducible character in H^0(X, Omega^1) (the space of holomorphic
one-forms) and in H^1(X) respectively, computed by closed formulas from the
branch data (Chevalley-Weil counts).  An independent chain-complex route to
the same H^1 numbers lives in ``covergraph`` and is deliberately kept
separate so the two can be compared.
"""

from __future__ import annotations

from fractions import Fraction

from .covergraph import CoverComplex
from .cyclotomic import Cyclo, cyclo_sum
from .errors import InternalInvariantError, UnsupportedComputation


def eigenvalue_multiplicity(table, i, g, j):
    """Multiplicity of exp(2 pi i j / d) as an eigenvalue of rho(g), where
    d is the order of g and rho is the irreducible representation with
    character index i.

    Computed as (1/d) * sum_k chi(g^k) zeta_d^(-jk); always a non-negative
    integer.
    """
    G = table.group
    d = G.order_of(g)
    terms = []
    gk = 0
    for k in range(d):
        terms.append(table.value_at(i, gk) * Cyclo.zeta(d, (-j * k) % d))
        gk = G.mul(gk, g)
    val = (cyclo_sum(terms) / d).as_fraction()
    if val.denominator != 1 or val < 0:  # pragma: no cover
        raise InternalInvariantError(f"eigenvalue multiplicity {val} invalid")
    return int(val)


def fixed_subspace_dimension(table, i, g):
    """Dimension of the rho(g)-fixed subspace: the eigenvalue-1 multiplicity."""
    return eigenvalue_multiplicity(table, i, g, 0)


def h0_multiplicity(datum, table, i):
    """Multiplicity of character i in the deck action on holomorphic
    one-forms.

    The trivial character contributes the quotient genus; a nontrivial
    character chi contributes (gbar - 1) chi(1) plus, for each branch point
    with local monodromy x of order d, the weighted eigenvalue count
    sum_{j=1..d} N(j) (1 - j/d).
    """
    if i == table.trivial_index:
        return datum.gbar
    deg = table.degrees[i]
    total = Fraction((datum.gbar - 1) * deg)
    G = datum.group
    for x in datum.branches:
        d = G.order_of(x)
        for j in range(1, d):
            n = eigenvalue_multiplicity(table, i, x, j)
            if n:
                total += n * (1 - Fraction(j, d))
    if total.denominator != 1 or total < 0:  # pragma: no cover
        raise InternalInvariantError(f"holomorphic multiplicity {total} invalid")
    return int(total)


def h0_character(datum, table):
    """Isotypical multiplicity vector of H^0(X, Omega^1)."""
    return [h0_multiplicity(datum, table, i) for i in range(table.r)]


def h1_multiplicity(datum, table, i):
    """Multiplicity of character i in the deck action on H^1(X).

    The trivial character contributes 2*gbar; a nontrivial chi contributes
    2 (gbar - 1) chi(1) plus, per branch point, the codimension of the
    fixed space of the local monodromy.
    """
    if i == table.trivial_index:
        return 2 * datum.gbar
    deg = table.degrees[i]
    total = 2 * (datum.gbar - 1) * deg
    for x in datum.branches:
        total += deg - fixed_subspace_dimension(table, i, x)
    if total < 0:  # pragma: no cover
        raise InternalInvariantError(f"homology multiplicity {total} invalid")
    return total


def h1_character(datum, table):
    """Isotypical multiplicity vector of H^1(X)."""
    return [h1_multiplicity(datum, table, i) for i in range(table.r)]


def h1_chain_complex_oracle(datum, table, cap=24):
    """H^1 multiplicities computed from an explicit cell structure of the
    cover, with no input from the branch-data formulas.

    Intended as an independent cross-check; raises when the group order
    exceeds ``cap`` since the cell complex grows with |G|.
    """
    if datum.group.order > cap:
        raise UnsupportedComputation(
            f"chain-complex oracle limited to group order {cap}"
        )
    return CoverComplex(datum).isotype_multiplicities(table)


# --- symmetric square ------------------------------------------------------------


def sym2_report(datum, table):
    """Dimension of the invariants of Sym^2 of the holomorphic-form
    representation, computed two independent ways.

    Route one decomposes by character type: a real (orthogonal) self-dual
    character with multiplicity m contributes m(m+1)/2, a quaternionic one
    m(m-1)/2, and each dual pair of complex-type characters contributes the
    product of the two multiplicities.  Route two evaluates the character
    of Sym^2 directly.  A mismatch is an internal error, never a report.
    """
    mults = h0_character(datum, table)
    orth = Fraction(0)
    sympl = Fraction(0)
    pairs = Fraction(0)
    seen_pairs = set()
    per_char = []
    for i, m in enumerate(mults):
        fs = table.fs_indicator(i)
        if fs == 1:
            c = Fraction(m * (m + 1), 2)
            orth += c
            per_char.append({"character": i, "type": "orthogonal", "multiplicity": m,
                             "contribution": int(c)})
        elif fs == -1:
            c = Fraction(m * (m - 1), 2)
            sympl += c
            per_char.append({"character": i, "type": "symplectic", "multiplicity": m,
                             "contribution": int(c)})
        else:
            jd = table.dual_index(i)
            key = (min(i, jd), max(i, jd))
            if key in seen_pairs:
                continue
            seen_pairs.add(key)
            c = Fraction(m * mults[jd])
            pairs += c
            per_char.append({"character": key[0], "dual": key[1], "type": "dual pair",
                             "multiplicity": m, "dual_multiplicity": mults[jd],
                             "contribution": int(c)})
    total = orth + sympl + pairs

    # Independent route: <Sym^2 F, 1> = (1/2|G|) sum_g (chi_F(g)^2 + chi_F(g^2)).
    G = datum.group
    pm2 = G.power_map(2)
    chi_f = [
        cyclo_sum(
            table.chars[i][k] * Fraction(mults[i]) for i in range(table.r)
        )
        for k in range(table.r)
    ]
    acc = cyclo_sum(
        (chi_f[k] * chi_f[k] + chi_f[pm2[k]]) * Fraction(table.sizes[k])
        for k in range(table.r)
    )
    direct = (acc.as_fraction()) / (2 * G.order)
    if direct != total:  # pragma: no cover
        raise InternalInvariantError(
            f"symmetric-square count mismatch: {total} vs {direct}"
        )
    return {
        "orthogonal_part": int(orth),
        "symplectic_part": int(sympl),
        "dual_pair_part": int(pairs),
        "total": int(total),
        "character_breakdown": per_char,
    }


# --- theorem checkers ------------------------------------------------------------


def check_theorem_endo(datum, table):
    """Multiplicity lower bounds forced on the holomorphic-form
    decomposition when the branch-point configuration moves in positive
    dimension.

    Returns named booleans; every False field is accompanied by witnesses.
    The two ``all_nontrivial_mult_ge*`` fields are informational thresholds
    reported separately from the two main conclusions.
    """
    mults = h0_character(datum, table)
    witnesses = {}

    moduli_ok = datum.moduli_dim_positive()
    if not moduli_ok:
        witnesses["moduli_dim_positive"] = {
            "quotient_genus": datum.gbar,
            "branch_count": datum.n_branches,
        }

    central_hyper = [
        z for z in datum.group.central_involutions()
        if datum.is_hyperelliptic_involution(z)
    ]
    no_hyper = not central_hyper
    if not no_hyper:
        witnesses["no_central_hyperelliptic"] = {"involutions": central_hyper}

    bad_sympl = [
        {"character": i, "multiplicity": m}
        for i, m in enumerate(mults)
        if m > 0 and table.fs_indicator(i) == -1 and m < 3
    ]
    symplectic_ok = not bad_sympl
    if bad_sympl:
        witnesses["symplectic_mult_ok"] = bad_sympl

    bad_pairs = []
    for i, m in enumerate(mults):
        if m > 0 and table.fs_indicator(i) == 0:
            jd = table.dual_index(i)
            if m < 2 or mults[jd] < 2:
                bad_pairs.append(
                    {"character": i, "multiplicity": m,
                     "dual": jd, "dual_multiplicity": mults[jd]}
                )
    pairs_ok = not bad_pairs
    if bad_pairs:
        witnesses["dual_pairs_ok"] = bad_pairs

    nontrivial = [
        (i, m) for i, m in enumerate(mults)
        if m > 0 and i != table.trivial_index
    ]
    low2 = [{"character": i, "multiplicity": m} for i, m in nontrivial if m < 2]
    low4 = [{"character": i, "multiplicity": m} for i, m in nontrivial if m < 4]
    if low2:
        witnesses["all_nontrivial_mult_ge2"] = low2
    if low4:
        witnesses["all_nontrivial_mult_ge4"] = low4

    return {
        "moduli_dim_positive": moduli_ok,
        "no_central_hyperelliptic": no_hyper,
        "symplectic_mult_ok": symplectic_ok,
        "dual_pairs_ok": pairs_ok,
        "all_nontrivial_mult_ge2": not low2,
        "all_nontrivial_mult_ge4": not low4,
        "witnesses": witnesses,
    }


def _n_trivial_on(table, i, sub_ids):
    deg = table.chars[i][0]
    return all(table.value_at(i, n) == deg for n in sub_ids)


def check_theorem_GN(datum, table, sub_ids):
    """Decomposition pattern of the holomorphic forms for an index-two,
    freely acting subgroup N whose quotient is hyperelliptic.

    Hypotheses checked: [G:N] = 2; no nontrivial element of N fixes a
    point; the intermediate quotient X/N has genus >= 2; X/N is
    hyperelliptic via the residual involution (genus-zero base and every
    branch monodromy outside N).  When they hold the conclusions are
    verified:

    (i)  the characters trivial on N that occur among the holomorphic
         forms are exactly the nontrivial character of G/N, with
         multiplicity equal to the genus of X/N;
    (ii) every other occurring character whose restriction to N splits
         into two distinct irreducibles has multiplicity
         (genus(X/N) - 1) * chi(1) / 2, and inducing either half back up
         recovers the character.

    Occurring characters whose restriction to N stays irreducible or
    splits unevenly are reported under ``nonsplit_constituents`` without
    being counted as failures of (ii).
    """
    G = datum.group
    N = sorted(set(sub_ids))
    report = {"hypotheses": {}, "witnesses": {}}
    hyp = report["hypotheses"]

    index_two = G.is_subgroup(N) and 2 * len(N) == G.order
    hyp["index_two"] = index_two
    if not index_two:
        report["witnesses"]["index_two"] = {"subgroup_order": len(N),
                                            "group_order": G.order}
        report["hypotheses_hold"] = False
        return report

    fixing = [n for n in N if n != 0 and datum.fixed_point_count(n) > 0]
    hyp["acts_freely"] = not fixing
    if fixing:
        report["witnesses"]["acts_freely"] = {
            "elements_with_fixed_points": fixing[:4]
        }

    g_n = datum.quotient_genus(N)
    report["quotient_genus"] = g_n
    hyp["quotient_genus_ge_2"] = g_n >= 2
    if g_n < 2:
        report["witnesses"]["quotient_genus_ge_2"] = {"quotient_genus": g_n}

    outside = [x for x in datum.branches if x not in N]
    hyper = datum.gbar == 0 and len(outside) == datum.n_branches
    hyp["quotient_hyperelliptic"] = hyper
    if not hyper:
        report["witnesses"]["quotient_hyperelliptic"] = {
            "base_genus": datum.gbar,
            "branch_monodromies_inside": [x for x in datum.branches if x in N],
        }

    hyp["quotient_genus_ge_4"] = g_n >= 4  # informational, for the stronger clause

    core = hyp["index_two"] and hyp["acts_freely"] and hyp["quotient_genus_ge_2"] \
        and hyp["quotient_hyperelliptic"]
    report["hypotheses_hold"] = core
    if not core:
        return report

    mults = h0_character(datum, table)
    n_trivial = [i for i in range(table.r) if _n_trivial_on(table, i, N)]
    occurring_trivial = [i for i in n_trivial if mults[i] > 0]
    residual = [
        i for i in n_trivial
        if table.degrees[i] == 1 and i != table.trivial_index
    ]
    if len(residual) != 1:  # pragma: no cover
        raise InternalInvariantError("index-two subgroup has no residual character")
    eps = residual[0]
    conclusion_i = occurring_trivial == [eps] and mults[eps] == g_n
    report["n_trivial_part_ok"] = conclusion_i
    if not conclusion_i:
        report["witnesses"]["n_trivial_part_ok"] = {
            "occurring_n_trivial": occurring_trivial,
            "residual_character": eps,
            "multiplicity": mults[eps],
            "expected": g_n,
        }

    H, to_parent = G.subgroup_as_group(N)
    from .characters import CharacterTable

    table_h = CharacterTable(H)
    split_entries = []
    nonsplit = []
    ok = True
    for i in range(table.r):
        if mults[i] == 0 or i in n_trivial:
            continue
        res = table.restrict_to_subgroup(i, table_h, to_parent)
        dec = table_h.decompose(res)
        nonzero = [(j, c) for j, c in enumerate(dec) if c]
        if len(nonzero) == 2 and all(c == 1 for _, c in nonzero):
            psi1, psi2 = nonzero[0][0], nonzero[1][0]
            want = Fraction((g_n - 1) * table.degrees[i], 2)
            mult_ok = want.denominator == 1 and mults[i] == int(want)
            psi_vals = {
                to_parent[h]: table_h.value_at(psi1, h) for h in range(H.order)
            }
            ind = table.induce_from_subgroup(N, psi_vals)
            ind_ok = table.index_of_values(ind) == i
            entry = {
                "character": i,
                "multiplicity": mults[i],
                "expected_multiplicity": str(want),
                "restriction_splits_distinct": True,
                "induction_recovers": ind_ok,
                "multiplicity_ok": mult_ok,
            }
            split_entries.append(entry)
            ok = ok and mult_ok and ind_ok
        else:
            nonsplit.append({
                "character": i,
                "multiplicity": mults[i],
                "restriction_pattern": [[j, c] for j, c in nonzero],
            })
    report["split_constituents"] = split_entries
    report["nonsplit_constituents"] = nonsplit
    report["split_constituents_ok"] = ok
    if not ok:
        report["witnesses"]["split_constituents_ok"] = [
            e for e in split_entries
            if not (e["multiplicity_ok"] and e["induction_recovers"])
        ]
    return report
