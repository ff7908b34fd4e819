#!/usr/bin/env python3
"""Singular-vector golden data at gamma = -2 on the rank-1 Fock module.

Works entirely with fractions.Fraction and a hand-rolled dense row
reduction. The degree-d component of the Fock module is spanned by
monomials in x_{-1}, x_{-2}, ... of total weight d; the boson modes act by

    b_{-k}  multiplication by x_{-k}          (k > 0)
    b_k     2*gamma*k * d/dx_{-k}             (k > 0)
    b_0     the scalar nu

and the Virasoro modes are

    L_n = (1/(4*gamma)) sum_m :b_m b_{n-m}: - (n+1)*(1/2 - 1/(2*gamma)) b_n,

with lowest L_0 eigenvalue delta = nu*(nu+2)/(4*gamma) - nu/2 and central
charge c = 13 - 6*gamma - 6/gamma.

For each degree d <= 6 the script records the joint kernel of L_1 and L_2
on the degree-d component in the descending-lex monomial basis; every
kernel vector is re-checked to be an exact L_0 eigenvector of eigenvalue
delta + d. The probe point gamma = -2, nu = 2 corresponds to the Kac
labels (lambda, mu) = (2, 0) via nu = lambda - gamma*mu. The report goes
to tools/golden/singvec_gamma_m2.json.

A quick self-test runs first: L_0 must be diagonal with entries delta + d,
and [L_1, L_-1] = 2 L_0 and [L_2, L_-2] = 4 L_0 + c/2 must hold on low
degrees at an unrelated generic point.
"""

from fractions import Fraction as F
import json
import os


# ---------------------------------------------------------------- partitions


def partitions(d, max_part=None):
    """All partitions of d as descending tuples."""
    if max_part is None:
        max_part = d
    if d == 0:
        return [()]
    out = []
    for p in range(min(d, max_part), 0, -1):
        for rest in partitions(d - p, p):
            out.append((p,) + rest)
    return out


def mono_from_partition(pt, d):
    """Exponent tuple: entry k is the exponent of x_{-(k+1)}, trimmed."""
    e = [0] * d
    for part in pt:
        e[part - 1] += 1
    while e and e[-1] == 0:
        e.pop()
    return tuple(e)


def basis(d):
    """Degree-d component basis, descending lex on the exponent vector."""
    if d == 0:
        return [()]
    monos = [mono_from_partition(pt, d) for pt in partitions(d)]
    key = lambda m: tuple(-x for x in (list(m) + [0] * (d - len(m))))
    return sorted(monos, key=key)


# ---------------------------------------------------------------- rref/kernel


def rref(mat, ncols):
    """Reduced row echelon form; returns (rows, pivot_cols)."""
    rows = [list(r) for r in mat]
    pivots = []
    ptr = 0
    for c in range(ncols):
        piv = None
        for r in range(ptr, len(rows)):
            if rows[r][c] != 0:
                piv = r
                break
        if piv is None:
            continue
        rows[ptr], rows[piv] = rows[piv], rows[ptr]
        inv = F(1) / rows[ptr][c]
        rows[ptr] = [x * inv for x in rows[ptr]]
        for r in range(len(rows)):
            if r != ptr and rows[r][c] != 0:
                f = rows[r][c]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[ptr])]
        pivots.append(c)
        ptr += 1
    return rows[:ptr], pivots


def kernel(mat, ncols):
    """Kernel basis, canonical: free-column vectors re-echelonized as rows."""
    rows, pivots = rref(mat, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    vecs = []
    for fc in free:
        v = [F(0)] * ncols
        v[fc] = F(1)
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][fc]
        vecs.append(v)
    if not vecs:
        return []
    out, _ = rref(vecs, ncols)
    return out


# ---------------------------------------------------------------- mode action


def add(poly, m, c):
    if c == 0:
        return
    poly[m] = poly.get(m, F(0)) + c
    if poly[m] == 0:
        del poly[m]


def b_apply(poly, k, gamma, nu):
    """b_k on dict {mono: coeff}."""
    out = {}
    for m, c in poly.items():
        if k == 0:
            add(out, m, c * nu)
        elif k < 0:
            j = -k - 1
            e = list(m) + [0] * (j + 1 - len(m))
            e[j] += 1
            add(out, tuple(e), c)
        else:
            j = k - 1
            if j < len(m) and m[j] > 0:
                e = list(m)
                coeff = c * 2 * gamma * k * e[j]
                e[j] -= 1
                while e and e[-1] == 0:
                    e.pop()
                add(out, tuple(e), coeff)
    return out


def l_apply(n, poly, gamma, nu, d):
    """L_n on a polynomial supported in degree <= d."""
    out = {}
    quarter = F(1) / (4 * gamma)
    for m in range(n - d, (n - 1) // 2 + 1):  # m < n - m
        t = b_apply(b_apply(poly, n - m, gamma, nu), m, gamma, nu)
        for mono, c in t.items():
            add(out, mono, 2 * quarter * c)
    if n % 2 == 0:
        t = b_apply(b_apply(poly, n // 2, gamma, nu), n // 2, gamma, nu)
        for mono, c in t.items():
            add(out, mono, quarter * c)
    lin = -(n + 1) * (F(1, 2) - F(1) / (2 * gamma))
    t = b_apply(poly, n, gamma, nu)
    for mono, c in t.items():
        add(out, mono, lin * c)
    return out


def l_matrix(n, d, gamma, nu):
    """Matrix of L_n: component d -> component d-n, rows=target cols=source."""
    src = basis(d)
    tgt = basis(d - n) if d - n >= 0 else []
    idx = {m: i for i, m in enumerate(tgt)}
    M = [[F(0)] * len(src) for _ in tgt]
    for c, mono in enumerate(src):
        img = l_apply(n, {mono: F(1)}, gamma, nu, d)
        for m2, coeff in img.items():
            M[idx[m2]][c] += coeff
    return M


def delta_lw(gamma, nu):
    return nu * (nu + 2) / (4 * gamma) - nu / 2


# ---------------------------------------------------------------- self-test


def mat_mul(A, B):
    assert A and B and len(A[0]) == len(B)
    out = [[F(0)] * len(B[0]) for _ in A]
    for i in range(len(A)):
        for k in range(len(B)):
            a = A[i][k]
            if a == 0:
                continue
            for j in range(len(B[0])):
                out[i][j] += a * B[k][j]
    return out


def bracket_mm(m, d, gamma, nu):
    """Matrix of [L_m, L_{-m}] on component d (m > 0, so both orders land)."""
    a = mat_mul(l_matrix(m, d + m, gamma, nu), l_matrix(-m, d, gamma, nu))
    n = len(basis(d))
    if d - m >= 0:
        b = mat_mul(l_matrix(-m, d - m, gamma, nu), l_matrix(m, d, gamma, nu))
    else:
        b = [[F(0)] * n for _ in range(n)]
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def self_test():
    gamma, nu = F(7, 3), F(-1, 3)
    dlt = delta_lw(gamma, nu)
    c = 13 - 6 * gamma - 6 / gamma
    for d in range(5):
        m0 = l_matrix(0, d, gamma, nu)
        for i in range(len(m0)):
            for j in range(len(m0)):
                assert m0[i][j] == ((dlt + d) if i == j else 0), (d, i, j)
    for m in (1, 2):
        central = c / 12 * (m**3 - m)
        for d in range(4):
            br = bracket_mm(m, d, gamma, nu)
            m0 = l_matrix(0, d, gamma, nu)
            for i in range(len(br)):
                for j in range(len(br)):
                    want = 2 * m * m0[i][j] + (central if i == j else F(0))
                    assert br[i][j] == want, (m, d, i, j)


# ---------------------------------------------------------------- report


def singvec_report(gamma, nu, max_degree):
    dlt = delta_lw(gamma, nu)
    levels = []
    for d in range(1, max_degree + 1):
        m1 = l_matrix(1, d, gamma, nu)
        m2 = l_matrix(2, d, gamma, nu)
        stacked = m1 + m2
        ker = kernel(stacked, len(basis(d)))
        m0 = l_matrix(0, d, gamma, nu)
        for v in ker:
            assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in stacked)
            for i, row in enumerate(m0):
                assert sum(a * b for a, b in zip(row, v)) == (dlt + d) * v[i]
        levels.append(
            {
                "degree": d,
                "dimension": len(ker),
                "eigenvalue": str(dlt + d),
                "vectors": [[str(x) for x in v] for v in ker],
            }
        )
    return {
        "gamma": str(gamma),
        "nu_pair": str(nu),
        "delta": str(dlt),
        "max_degree": max_degree,
        "levels": levels,
    }


def main():
    self_test()
    doc = singvec_report(F(-2), F(2), 6)
    here = os.path.dirname(os.path.abspath(__file__))
    out = os.path.join(here, "golden", "singvec_gamma_m2.json")
    os.makedirs(os.path.dirname(out), exist_ok=True)
    with open(out, "w") as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")
    dims = [lvl["dimension"] for lvl in doc["levels"]]
    print("kernel dimensions by degree:", dims)
    print("wrote", out)


if __name__ == "__main__":
    main()
