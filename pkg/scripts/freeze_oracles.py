"""Compute brute-force reference values once and store them under tests/data.

The graphs are drawn with the standard library RNG and stored as edge lists
together with their values, so the test suite reads both from the file.
"""

import json
import random
import sys
from itertools import combinations
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "tests"))

from oracles import all_values  # noqa: E402


def named() -> list[tuple[str, int, list]]:
    out = []
    for n in range(1, 8):
        out.append((f"P{n}", n, [(i, i + 1) for i in range(n - 1)]))
        out.append((f"K{n}", n, list(combinations(range(n), 2))))
    for n in range(3, 8):
        out.append((f"C{n}", n, [(i, (i + 1) % n) for i in range(n)]))
    out.append(("K2,3", 5, [(a, b) for a in range(2) for b in range(2, 5)]))
    out.append(("K3,3", 6, [(a, b) for a in range(3) for b in range(3, 6)]))
    out.append(("star5", 5, [(0, i) for i in range(1, 5)]))
    out.append(("wheel6", 6, [(0, i) for i in range(1, 6)] + [(i, i % 5 + 1) for i in range(1, 6)]))
    out.append(("bowtie", 5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]))
    out.append(("empty3", 3, []))
    return out


def main() -> None:
    rng = random.Random(20240611)
    graphs = named()
    for i in range(60):
        n = rng.randint(2, 8)
        p = rng.choice((0.25, 0.4, 0.6))
        edges = [e for e in combinations(range(n), 2) if rng.random() < p]
        graphs.append((f"random{i}", n, edges))
    rows = [{"name": name, "n": n, "edges": [list(e) for e in edges], "values": all_values(n, edges)}
            for name, n, edges in graphs]
    out = ROOT / "tests" / "data" / "oracle_values.json"
    out.write_text(json.dumps(rows, indent=1) + "\n")
    print(f"wrote {len(rows)} graphs to {out}")


if __name__ == "__main__":
    main()
