"""Write the Johnson graph instance johnson8-4-4 in DIMACS clique format.

Vertices are the 4-subsets of {0..7}; two subsets are adjacent when they
share at most two elements.
"""

import itertools
import sys


def johnson(n: int, w: int, d: int):
    vertices = list(itertools.combinations(range(n), w))
    edges = [
        (i + 1, j + 1)
        for i, a in enumerate(vertices)
        for j in range(i + 1, len(vertices))
        if len(set(a) & set(vertices[j])) <= w - d // 2
    ]
    return len(vertices), edges


def main() -> None:
    path = sys.argv[1] if len(sys.argv) > 1 else "data/johnson8-4-4.clq"
    n, edges = johnson(8, 4, 4)
    with open(path, "w", encoding="utf-8") as out:
        out.write("c johnson8-4-4: 4-subsets of an 8-set, adjacent when they share at most 2 elements\n")
        out.write(f"p edge {n} {len(edges)}\n")
        for u, v in edges:
            out.write(f"e {u} {v}\n")


if __name__ == "__main__":
    main()
