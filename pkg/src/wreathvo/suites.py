"""Runnable verification suites shared by the command line and the test-suite.

Each suite returns a ``Report`` with per-instance counts so that a failure can
be traced back to the offending input.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Sequence

from wreathvo.fock import (
    SymVec,
    apply_heis,
    ch,
    character_from_schur,
    class_op,
    coords_of,
    gen_series_check,
    gram_matrix,
    HeisOp,
    schur_terms,
)
from wreathvo.groups import ClassFn, GroupData, Report, build_group, make_xi, trivial_xi
from wreathvo.lattice import (
    FockVec,
    VertexEngine,
    character_table,
    clifford_check,
    neg,
    ope_check,
    schur_state,
    schur_state_image,
)
from wreathvo.mckay import basic_rep_check, build_affine, root_count, root_enumeration, toroidal_relation_check
from wreathvo.partitions import enumerate_partfn
from wreathvo.scalar import Cyclo, cyclo
from wreathvo.symmetric import character_table as mn_table
from wreathvo.wreath import (
    Z,
    bar,
    class_algebra_constants,
    epsilon_n,
    eta_n,
    sigma_rho,
    standard_pairing_n,
    types,
    weighted_pairing_n,
    wreath_order,
)

MCKAY_GROUPS = tuple(f"cyclic:{m}" for m in range(2, 9)) + ("bd:8", "bd:12", "bd:16", "bt", "bo", "bi")


def _group(g: str | GroupData) -> GroupData:
    return build_group(g) if isinstance(g, str) else g


def suite_mckay(specs: Sequence[str] = MCKAY_GROUPS) -> Report:
    """Eigenvector identity, one-dimensional radical, diagram label and root count per group."""
    details = []
    ok = True
    for spec in specs:
        ad = build_affine(spec)
        roots = len(root_enumeration(ad))
        good = ad.passed() and roots == root_count(ad.label)
        ok &= good
        details.append({"group": spec, "label": ad.label, "roots": roots, "passed": good})
    return Report("mckay", ok, details)


def suite_isometry(group, n_max: int = 4, xi: str = "trivial", extended: bool = False) -> Report:
    """<f, g>_{xi, G_n} = <ch f, ch g>'_xi on the sigma_rho basis for every n <= n_max.

    With ``extended`` the test family also contains eta_n(gamma_i),
    epsilon_n(gamma_i) and the irreducible characters.
    """
    grp = _group(group)
    xf = make_xi(grp, xi)
    details = []
    ok = True
    for n in range(1, n_max + 1):
        fam = [sigma_rho(grp, rho) for rho in types(grp, n)]
        if extended:
            for gamma in grp.irreps():
                fam += [eta_n(gamma, n), epsilon_n(gamma, n)]
            fam += [character_from_schur(lam, grp) for lam in types(grp, n)]
        images = [ch(f).terms for f in fam]
        G = gram_matrix(images, images, xf)
        bad = 0
        for i, f in enumerate(fam):
            for j, g in enumerate(fam):
                if weighted_pairing_n(xf, f, g) != G[i][j]:
                    bad += 1
        ok &= bad == 0
        details.append({"n": n, "pairs": len(fam) ** 2, "failures": bad})
    return Report("isometry", ok, [{"group": grp.name, "xi": xi, "per_n": details}])


def suite_heisenberg(group, xi: str = "trivial", D: int = 4, M: int = 4) -> Report:
    """[a_m, a_n] in the gamma basis and the class basis on every monomial of degree <= D."""
    grp = _group(group)
    xf = make_xi(grp, xi)
    r = grp.num_classes
    vecs = [SymVec.monomial(rho) for d in range(D + 1) for rho in enumerate_partfn(r, d)]
    modes = range(-M, M + 1)
    fails = {"gamma": 0, "class": 0}
    count = {"gamma": 0, "class": 0}

    def comm(p, q, v):
        return apply_heis(p, apply_heis(q, v, xf), xf) - apply_heis(q, apply_heis(p, v, xf), xf)

    for v in vecs:
        for m, n in itertools.product(modes, repeat=2):
            for i, j in itertools.product(range(r), repeat=2):
                lhs = comm(HeisOp(m, coords_of(i, xf)), HeisOp(n, coords_of(j, xf)), v)
                rhs = v * (m * xf.A[i][j]) if m == -n else SymVec(r)
                count["gamma"] += 1
                fails["gamma"] += lhs != rhs
                # [a_m(c'^{-1}), a_n(c)] = m delta_{m,-n} delta_{c',c} zeta_c xi(c)
                c1, c = i, j
                lhs = comm(class_op(grp, m, grp.inv_class[c1]), class_op(grp, n, c), v)
                if m == -n and c1 == c:
                    rhs = v * (xf.xi[c] * (m * grp.zeta[c]))
                else:
                    rhs = SymVec(r)
                count["class"] += 1
                fails["class"] += lhs != rhs
    return Report(
        "heisenberg",
        not any(fails.values()),
        [{"group": grp.name, "xi": xi, "vectors": len(vecs), "checks": count, "failures": fails}],
    )


def default_gammas(grp: GroupData) -> list[ClassFn]:
    irr = grp.irreps()
    return [irr[0]] + irr[1:] + [irr[0] - g for g in irr[1:]]


def suite_genfun(group, N: int = 4, gammas: Sequence[ClassFn] | None = None) -> Report:
    grp = _group(group)
    gammas = default_gammas(grp) if gammas is None else gammas
    reps = [gen_series_check(g, N) for g in gammas]
    details = [{"gamma": [str(x) for x in g.irreducible_coordinates()], "passed": r.passed} for g, r in zip(gammas, reps)]
    return Report("genfun", all(r.passed for r in reps), details)


def _pm_basis(r: int) -> list[tuple]:
    out = []
    for i in range(r):
        e = tuple(1 if j == i else 0 for j in range(r))
        out += [e, neg(e)]
    return out


def suite_ope(group, xi: str = "mckay", D: int = 2, box: int = 1, pairs=None) -> Report:
    grp = _group(group)
    eng = VertexEngine(make_xi(grp, xi))
    if pairs is None:
        pairs = list(itertools.product(_pm_basis(eng.r), repeat=2))
    vectors = eng.test_basis(D, box)
    reps = [ope_check(eng, a, b, D, box, vectors=vectors) for a, b in pairs]
    coeffs = sum(r.details[0]["coefficients"] for r in reps)
    bad = [r.details[0] for r in reps if not r.passed]
    return Report(
        "ope",
        not bad,
        [{"group": grp.name, "xi": xi, "D": D, "box": box, "pairs": len(pairs), "coefficients": coeffs, "failing": bad[:5]}],
    )


def suite_clifford(group, M=Fraction(5, 2), D: int = 2, box: int = 1) -> Report:
    grp = _group(group)
    rep = clifford_check(VertexEngine(trivial_xi(grp)), M, D, box)
    rep.details[0].update({"group": grp.name, "M": str(M), "D": D})
    return rep


def _orthogonality(grp: GroupData, n: int, values, rows, cols) -> int:
    """Number of failing row and column orthogonality instances."""
    bad = 0
    pos = {mu: k for k, mu in enumerate(cols)}
    conj = [pos[bar(grp, mu)] for mu in cols]
    zs = [Z(grp, mu) for mu in cols]
    for i, j in itertools.combinations_with_replacement(range(len(rows)), 2):
        s = sum((values[i][k] * values[j][conj[k]] * Fraction(1, zs[k]) for k in range(len(cols))), cyclo(0))
        bad += s != (1 if i == j else 0)
    for k, l in itertools.combinations_with_replacement(range(len(cols)), 2):
        s = sum((values[i][k] * values[i][conj[l]] for i in range(len(rows))), cyclo(0))
        bad += s != (zs[k] if k == l else 0)
    return bad


def genuine_character_failures(grp: GroupData, n: int, values, limit: int = 48) -> int:
    """Brute-force checks that each row is a character of G_n (element-level, small groups)."""
    ts, sizes, a = class_algebra_constants(grp, n, limit=limit)
    cols = types(grp, n)
    if list(ts) != list(cols):
        raise AssertionError("class ordering mismatch")
    ident = cols.index(_identity_type(grp, n))
    bad = 0
    order = wreath_order(grp, n)
    degs = []
    for row in values:
        d = row[ident]
        if not (d.is_integer() and d.to_int() > 0):
            bad += 1
            continue
        degs.append(d.to_int())
        omega = [row[k] * Fraction(sizes[k], d.to_int()) for k in range(len(cols))]
        for i, j in itertools.product(range(len(cols)), repeat=2):
            rhs = sum((omega[k] * a[i][j][k] for k in range(len(cols)) if a[i][j][k]), cyclo(0))
            bad += omega[i] * omega[j] != rhs
    bad += sum(d * d for d in degs) != order
    return bad


def _identity_type(grp: GroupData, n: int):
    return tuple(((1,) * n if c == 0 else ()) for c in range(grp.num_classes))


def suite_chartable(group, n_max: int = 3, brute_limit: int = 48, vertex_max: int | None = None) -> Report:
    """Character tables of G_n for n <= n_max.

    The table from the inner-product route is checked for orthogonality, against
    the Murnaghan-Nakayama rule for the trivial group, against the vertex
    operator route for n <= vertex_max, and by brute force when |G_n| <= brute_limit.
    """
    grp = _group(group)
    eng = VertexEngine(trivial_xi(grp))
    vertex_max = n_max if vertex_max is None else vertex_max
    details = []
    ok = True
    for n in range(1, n_max + 1):
        rows, cols, values = character_table(grp, n)
        info = {"n": n, "size": len(rows), "orthogonality_failures": _orthogonality(grp, n, values, rows, cols)}
        good = info["orthogonality_failures"] == 0
        if n <= vertex_max:
            _, _, vvals = character_table(grp, n, route="vertex", eng=eng)
            info["vertex_route_agrees"] = vvals == values
            good &= info["vertex_route_agrees"]
        if grp.num_classes == 1:
            T = mn_table(n)
            info["matches_mn"] = all(values[i][j] == T[i][j] for i in range(len(rows)) for j in range(len(cols)))
            good &= info["matches_mn"]
        if wreath_order(grp, n) <= brute_limit:
            info["brute_force_failures"] = genuine_character_failures(grp, n, values, brute_limit)
            good &= info["brute_force_failures"] == 0
        ok &= good
        details.append(info)
    return Report("chartable", ok, [{"group": grp.name, "per_n": details}])


def suite_toroidal(group, M: int = 2, D: int = 2, box: int = 1) -> Report:
    return toroidal_relation_check(build_affine(_group(group)), M, D, box)


def suite_basic_rep(group, D: int = 2) -> Report:
    return basic_rep_check(build_affine(_group(group)), D)


def suite_schur(group, D: int = 3, alphas=None) -> Report:
    """Orthonormality of the states s_{lam, alpha} and their images eps(omega, alpha) s_lam e^{alpha + omega}."""
    grp = _group(group)
    eng = VertexEngine(trivial_xi(grp))
    r = grp.num_classes
    if alphas is None:
        alphas = [eng.lat.zero()] + _pm_basis(r)
    lams = [lam for d in range(D + 1) for lam in enumerate_partfn(r, d)]
    bad_image = bad_orth = 0
    pairs = 0
    for alpha in alphas:
        states = [schur_state(eng, lam, alpha) for lam in lams]
        for lam, s in zip(lams, states):
            bad_image += s != schur_state_image(lam, alpha, eng)
        for i, j in itertools.product(range(len(lams)), repeat=2):
            pairs += 1
            bad_orth += eng.inner(states[i], states[j]) != (1 if i == j else 0)
    return Report(
        "schur",
        bad_image == 0 and bad_orth == 0,
        [{"group": grp.name, "D": D, "states": len(lams) * len(alphas), "pairs": pairs,
          "image_failures": bad_image, "orthonormality_failures": bad_orth}],
    )


SUITES = ("isometry", "heisenberg", "genfun", "ope", "clifford", "chartable", "toroidal", "schur", "mckay", "basic_rep")
