#!/usr/bin/env python3
"""Generates k-partite benchmark graphs with a planted chromatic number.

Vertices are split into k classes. One representative per class forms a
k-clique, so chi >= k; classes are independent sets, so chi <= k. Every other
cross-class pair becomes an edge with probability p. The manifest therefore
records the exact chromatic number for every graph.
"""

import argparse
import os
import random


def planted_graph(n, k, p, seed):
    rng = random.Random(seed)
    cls = [v * k // n for v in range(n)]  # contiguous blocks, sizes within 1
    reps = []
    seen = set()
    for v in range(n):
        if cls[v] not in seen:
            seen.add(cls[v])
            reps.append(v)
    edges = set()
    for i, u in enumerate(reps):
        for v in reps[i + 1:]:
            edges.add((u, v))
    for u in range(n):
        for v in range(u + 1, n):
            if cls[u] != cls[v] and rng.random() < p:
                edges.add((u, v))
    return sorted(edges)


def write_col(path, n, edges):
    with open(path, "w", newline="\n") as f:
        f.write(f"p edge {n} {len(edges)}\n")
        for u, v in edges:
            f.write(f"e {u + 1} {v + 1}\n")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", required=True, help="output directory")
    ap.add_argument(
        "--spec",
        nargs="+",
        required=True,
        metavar="NAME:N:K:P:SEED",
        help="one graph per spec, e.g. planted90_5:90:5:0.5:1",
    )
    args = ap.parse_args()
    os.makedirs(args.out, exist_ok=True)

    manifest = []
    for spec in args.spec:
        name, n, k, p, seed = spec.split(":")
        n, k, seed = int(n), int(k), int(seed)
        p = float(p)
        edges = planted_graph(n, k, p, seed)
        write_col(os.path.join(args.out, f"{name}.col"), n, edges)
        manifest.append((name, k))
        print(f"wrote {name}.col (n={n}, m={len(edges)}, chi={k})")

    with open(os.path.join(args.out, "manifest.csv"), "w", newline="\n") as f:
        f.write("graph,k\n")
        for name, k in manifest:
            f.write(f"{name},{k}\n")
    print(f"wrote manifest.csv ({len(manifest)} rows)")


if __name__ == "__main__":
    main()
