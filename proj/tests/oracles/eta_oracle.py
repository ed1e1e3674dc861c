#!/usr/bin/env python3
"""Eta invariants of the block family from eigenvectors (numpy) and a
cotangent sum in mpmath.  Writes tests/data/eta_family.txt and tests/data/eta_large.txt.

Line format: r counts ell sigma eta
counts lists i:C:J for i = r-1 .. 1, comma separated.
"""
import itertools
from pathlib import Path

import mpmath as mp
import numpy as np
from scipy.linalg import block_diag

mp.mp.dps = 40
DATA = Path(__file__).resolve().parent.parent / "data"
OUT = DATA / "eta_family.txt"


def J(r):
    if r == 0:
        return np.array([[-1]])
    p = J(r - 1)
    h = p.shape[0]
    m = np.zeros((2 * h, 2 * h), dtype=np.int64)
    m[:h, h:] = p
    m[h:, :h] = np.eye(h, dtype=np.int64)
    return m


def C(r):
    n = 2 ** r
    m = np.zeros((n, n), dtype=np.int64)
    m[1:, :-1] = np.eye(n - 1, dtype=np.int64)
    m[0, -1] = -1
    return m


def j_tuples(n, r):
    # (j_{r-1}, ..., j_1) with sum 2^i j_i = n - 1, j_1 odd, j_{r-1} >= 1
    sizes = [2 ** i for i in range(r - 1, 0, -1)]
    out = []

    def rec(idx, rest, acc):
        if idx == len(sizes):
            if rest == 0 and acc[-1] % 2 == 1 and acc[0] >= 1:
                out.append(tuple(acc))
            return
        for c in range(rest // sizes[idx] + 1):
            rec(idx + 1, rest - c * sizes[idx], acc + [c])

    rec(0, n - 1, [])
    return out


def splits(r, js):
    # every C/J split for i >= 2; i = 1 blocks are C_1 = J_1
    per = []
    for idx, j in enumerate(js):
        i = r - 1 - idx
        if i == 1:
            per.append([(j, 0)])
        else:
            per.append([(c, j - c) for c in range(j + 1)])
    return itertools.product(*per)


def assemble(r, counts):
    blocks = []
    for idx, (c, jj) in enumerate(counts):
        i = r - 1 - idx
        blocks += [C(i)] * c + [J(i)] * jj
    blocks.append(np.array([[1]]))
    return block_diag(*blocks).astype(np.int64)


def sigma_and_angles(B):
    w, V = np.linalg.eig(B.astype(float))
    cols, angles = [], []
    for k in range(len(w)):
        if w[k].imag > 1e-9:
            v = V[:, k]
            cols += [v.real, -v.imag]
            angles.append(mp.mpf(np.angle(w[k])) / mp.pi)
    fixed = [k for k in range(len(w)) if abs(w[k] - 1) < 1e-9]
    assert len(fixed) == 1
    z = V[:, fixed[0]].real
    z = z * np.sign(z[-1])
    cols.append(z)
    return int(np.sign(np.linalg.det(np.array(cols).T))), angles


def exact_angles(approx):
    out = []
    for a in approx:
        f = mp.mpf(a)
        # angles are p/2^s; snap to the nearest such fraction
        for s in range(1, 13):
            p = mp.nint(f * 2 ** s)
            if abs(f - p / 2 ** s) < 1e-9:
                out.append(mp.mpf(p) / 2 ** s)
                break
        else:
            raise ValueError(a)
    return out


def eta(B, r, ell):
    N = 2 ** r
    n = B.shape[0]
    sigma, approx = sigma_and_angles(B)
    angles = exact_angles(approx)
    total = mp.mpf(0)
    P = np.eye(n, dtype=np.int64)
    for k in range(1, N):
        P = P @ B
        fix = n - np.linalg.matrix_rank(P - np.eye(n))
        if fix != 1 or np.linalg.matrix_rank(P + np.eye(n)) != n:
            continue
        term = mp.cot(mp.pi * k * ell / N)
        for t in angles:
            term *= mp.sin(mp.pi * k * t)
        total += term
    value = -sigma * mp.mpf(2) ** len(angles) / N * total
    rounded = int(mp.nint(value))
    assert abs(value - rounded) < 1e-20
    return sigma, rounded


def main():
    lines = []
    for n in range(3, 20, 4):
        for r in range(2, 8):
            for js in j_tuples(n, r):
                for counts in splits(r, js):
                    B = assemble(r, counts)
                    for ell in (1, 3, 5, 7):
                        s, e = eta(B, r, ell)
                        tag = ",".join(f"{r - 1 - i}:{c}:{j}" for i, (c, j) in enumerate(counts))
                        lines.append(f"{r} {tag} {ell} {s:+d} {e}")
    OUT.write_text("\n".join(lines) + "\n")
    print(len(lines), "rows")

    # large generators: E_{r-1} J_2 J_1 with E = C or J
    lines = []
    for r in range(6, 10):
        for top in ((1, 0), (0, 1)):
            counts = [top] + [(0, 0)] * (r - 4) + [(0, 1), (1, 0)]
            B = assemble(r, counts)
            s, e = eta(B, r, 1)
            tag = ",".join(f"{r - 1 - i}:{c}:{j}" for i, (c, j) in enumerate(counts))
            lines.append(f"{r} {tag} 1 {s:+d} {e}")
    (DATA / "eta_large.txt").write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
