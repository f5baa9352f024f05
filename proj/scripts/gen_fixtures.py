#!/usr/bin/env python3
"""Writes the small static .col fixtures used by the test suites."""

import os

HERE = os.path.dirname(os.path.abspath(__file__))
DATA = os.path.join(HERE, "..", "tests", "data")


def complete(n):
    return [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]


def cycle(n):
    return [(i, i % n + 1) for i in range(1, n + 1)]


def petersen():
    outer = [(i, i % 5 + 1) for i in range(1, 6)]
    spokes = [(i, i + 5) for i in range(1, 6)]
    inner = [(i + 6, (i + 2) % 5 + 6) for i in range(5)]
    return outer + spokes + inner


def star(leaves):
    return [(1, i) for i in range(2, leaves + 2)]


def write_col(name, n, edges, comment=None):
    lines = []
    if comment:
        lines.append(f"c {comment}")
    lines.append(f"p edge {n} {len(edges)}")
    for u, v in sorted((min(e), max(e)) for e in edges):
        lines.append(f"e {u} {v}")
    path = os.path.join(DATA, name)
    with open(path, "w", newline="\n") as f:
        f.write("\n".join(lines) + "\n")
    print(f"wrote {path} (n={n}, m={len(edges)})")


def main():
    os.makedirs(DATA, exist_ok=True)
    write_col("k3.col", 3, complete(3), "complete graph K3")
    write_col("k4.col", 4, complete(4), "complete graph K4")
    write_col("k5.col", 5, complete(5), "complete graph K5")
    write_col("c5.col", 5, cycle(5), "cycle C5")
    write_col("c6.col", 6, cycle(6), "cycle C6")
    write_col("petersen.col", 10, petersen(), "Petersen graph")
    write_col("star5.col", 6, star(5), "star with 5 leaves")
    write_col("edgeless10.col", 10, [], "10 isolated vertices")

    # Deliberately messy: comments, blank lines, CRLF endings, a reversed
    # duplicate edge, and a declared edge count that disagrees after dedup.
    dirty = (
        "c messy fixture\r\n"
        "\r\n"
        "p edge 4 5\n"
        "e 1 2\n"
        "e 2 1\r\n"
        "c duplicate above collapses\n"
        "e 2 3\n"
        "e 3 4\r\n"
        "e 1 4\n"
    )
    path = os.path.join(DATA, "dirty.col")
    with open(path, "w", newline="") as f:
        f.write(dirty)
    print(f"wrote {path}")


if __name__ == "__main__":
    main()
