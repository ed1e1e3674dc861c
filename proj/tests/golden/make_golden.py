#!/usr/bin/env python3
"""Writes the reference tables, entered by hand row by row."""
from pathlib import Path

HERE = Path(__file__).resolve().parent

# (expansion, tau, max r, eta values as printed)
TABLE1 = [
    ("3=2+1=n_2", 2, 2, "0, 1"),
    ("7=4+2+1=n_3", 3, 3, "0, 2, 2^2"),
    ("11=8+2+1=n_4", 3, 4, "0, 2, 2^2, 2^3, 2^4"),
    ("15=8+4+2+1", 4, 4, "0, 2^2, 2^3, 2^4, 2^5, 2^6"),
    ("19=16+2+1=n_5", 3, 5, "0, 2, 2^2, ..., 2^8"),
    ("23=16+4+2+1", 4, 5, "0, 2^2, 2^3, ..., 2^10"),
    ("27=16+8+2+1", 4, 5, "0, 2^2, 2^3, ..., 2^12"),
    ("31=16+8+4+2+1", 5, 5, "0, 2^3, 2^4, ..., 2^14"),
    ("35=32+2+1=n_6", 3, 6, "0, 2, 2^2, ..., 2^16"),
    ("39=32+4+2+1", 4, 6, "0, 2^2, 2^3, ..., 2^18"),
    ("43=32+8+2+1", 4, 6, "0, 2^2, 2^3, ..., 2^20"),
    ("47=32+8+4+2+1", 5, 6, "0, 2^3, 2^4, ..., 2^22"),
    ("51=32+16+2+1", 4, 6, "0, 2^2, 2^3, ..., 2^24"),
    ("55=32+16+4+2+1", 5, 6, "0, 2^3, 2^4, ..., 2^26"),
    ("59=32+16+8+2+1", 5, 6, "0, 2^3, 2^4, ..., 2^28"),
    ("63=32+16+8+4+2+1", 6, 6, "0, 2^4, 2^5, ..., 2^30"),
]

# (dim, partition, J4, J3, J2, J1, J0, r, F)
TABLE3 = [
    (11, "4+2+2+2+1", 0, 0, 1, 3, 1, 3, "Z_8"),
    (15, "4+4+4+2+1", 0, 0, 3, 1, 1, 3, "Z_8"),
    (15, "8+2+2+2+1", 0, 1, 0, 3, 1, 4, "Z_16"),
    (19, "8+4+4+2+1", 0, 1, 2, 1, 1, 4, "Z_16"),
    (23, "8+8+4+2+1", 0, 2, 1, 1, 1, 4, "Z_16"),
    (23, "16+2+2+2+1", 1, 0, 0, 3, 1, 5, "Z_32"),
    (27, "8+8+8+2+1", 0, 3, 0, 1, 1, 4, "Z_16"),
    (27, "16+4+4+2+1", 1, 0, 2, 1, 1, 5, "Z_32"),
    (31, "16+8+4+2+1", 1, 1, 1, 1, 1, 5, "Z_32"),
]


def table1():
    lines = ["dimension n".ljust(24) + "tau".rjust(5) + "max r".rjust(7) + "  eta-invariant"]
    for exp, tau, r, vals in TABLE1:
        lines.append(exp.ljust(24) + str(tau).rjust(5) + str(r).rjust(7) + "  " + vals)
    return "\n".join(lines) + "\n"


def table3():
    head = "dim".rjust(3) + "  " + "partition of n".ljust(20)
    head += "".join(c.rjust(4) for c in ("J4", "J3", "J2", "J1", "J0")) + "r".rjust(4) + "  F"
    lines = [head]
    for dim, part, *rest in TABLE3:
        js, r, f = rest[:5], rest[5], rest[6]
        lines.append(str(dim).rjust(3) + "  " + part.ljust(20)
                     + "".join(str(j).rjust(4) for j in js) + str(r).rjust(4) + "  " + f)
    return "\n".join(lines) + "\n"


if __name__ == "__main__":
    (HERE / "table1.txt").write_text(table1())
    (HERE / "table3.txt").write_text(table3())
