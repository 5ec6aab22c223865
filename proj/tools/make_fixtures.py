#!/usr/bin/env python3
"""Writes the reference b-files under data/oeis/.

oeis.org could not be reached when these were produced, so every file is
generated here from the definitions and labelled self-generated. The
generator deliberately shares nothing with the C++ library: the tests
compare the two implementations and check the prefixes against the
published listings.

usage: tools/make_fixtures.py [--terms 2000] [--out data/oeis]
"""

import argparse
import json
import os


def anti_recurrence(coeffs, count):
    """A_1..A_count and the B-blocks, by repeatedly taking the k smallest
    numbers not yet used."""
    used = set()
    a, blocks = [], []
    low = 1
    for _ in range(count):
        block = []
        v = low
        while len(block) < len(coeffs):
            if v not in used:
                block.append(v)
            v += 1
        used.update(block)
        s = sum(c * b for c, b in zip(coeffs, block))
        used.add(s)
        a.append(s)
        blocks.append(block)
        while low in used:
            low += 1
    return a, blocks


def period_doubling(count):
    # w[2i], w[2i+1] is the image of w[i]
    w = [0, 1]
    i = 1
    while len(w) < count:
        w.extend([0, 1] if w[i] == 0 else [0, 0])
        i += 1
    return w[:count]


def choral(count):
    # a(3n) = 0, a(3n+1) = a(n), a(3n+2) = 1
    out = []
    for n in range(count):
        r = n % 3
        out.append(0 if r == 0 else 1 if r == 2 else out[n // 3])
    return out


def build(terms):
    """name -> (offset, values, description, index_shift, generator)"""
    fib_a, fib_b = anti_recurrence([1, 1], terms + 1)
    pell_a, pell_b = anti_recurrence([1, 2], terms)
    jac_a, _ = anti_recurrence([2, 1], terms)
    tri_a, _ = anti_recurrence([1, 1, 1], terms)
    tet_a, _ = anti_recurrence([1, 1, 1, 1], terms)
    pen_a, _ = anti_recurrence([1, 1, 1, 1, 1], terms)
    fib_flat = [x for blk in fib_b for x in blk]
    zero_fib = [0] + fib_a

    seqs = {
        "A075326": (0, zero_fib[:terms], "anti-Fibonacci numbers, A_0 = 0",
                    0, {"kind": "A", "form": [1, 1], "zero_term": True}),
        "A096268": (0, period_doubling(terms), "period-doubling sequence",
                    0, {"kind": "period-doubling"}),
        "A116178": (0, choral(terms), "Stewart's choral sequence",
                    0, {"kind": "choral"}),
        "A249032": (1, [zero_fib[n] - zero_fib[n - 1] for n in range(1, terms + 1)],
                    "first differences of A075326", 0,
                    {"kind": "A-diff", "form": [1, 1], "zero_term": True}),
        "A249031": (1, fib_flat[:terms], "non-anti-Fibonacci numbers",
                    0, {"kind": "B", "form": [1, 1]}),
        "A075325": (1, [b[0] for b in fib_b][:terms], "B^1 for the form (1,1)",
                    0, {"kind": "B1", "form": [1, 1]}),
        "A047215": (1, [b[1] for b in fib_b][:terms], "B^2 for the form (1,1)",
                    0, {"kind": "B2", "form": [1, 1]}),
        "A265389": (1, tri_a, "anti-Tribonacci numbers",
                    0, {"kind": "A", "form": [1, 1, 1]}),
        "A299409": (1, tet_a, "anti-Tetrabonacci numbers",
                    0, {"kind": "A", "form": [1, 1, 1, 1]}),
        "A304499": (1, jac_a, "anti-Jacobsthal numbers",
                    0, {"kind": "A", "form": [2, 1]}),
        "A304500": (1, [b[0] for b in pell_b], "B^1 for the form (1,2)",
                    0, {"kind": "B1", "form": [1, 2]}),
        "A304501": (1, [b[1] for b in pell_b], "B^2 for the form (1,2)",
                    0, {"kind": "B2", "form": [1, 2]}),
        "A304502": (1, pell_a, "anti-Pell numbers",
                    0, {"kind": "A", "form": [1, 2]}),
        "anti5bonacci": (1, pen_a, "anti-5-bonacci numbers (no OEIS entry)",
                         0, {"kind": "A", "form": [1, 1, 1, 1, 1]}),
    }
    return seqs


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--terms", type=int, default=2000)
    p.add_argument("--out", default=os.path.join(os.path.dirname(__file__), "..", "data", "oeis"))
    args = p.parse_args()
    os.makedirs(args.out, exist_ok=True)

    manifest = {}
    for name, (offset, values, desc, shift, gen) in build(args.terms).items():
        path = os.path.join(args.out, name + ".txt")
        with open(path, "w") as f:
            f.write(f"# {name}: {desc}\n")
            f.write("# self-generated by tools/make_fixtures.py, not downloaded from oeis.org\n")
            for i, v in enumerate(values):
                f.write(f"{offset + i} {v}\n")
        manifest[name] = {
            "file": name + ".txt",
            "offset": offset,
            "index_shift": shift,
            "terms": len(values),
            "source": "self-generated",
            **gen,
        }
    with open(os.path.join(args.out, "manifest.json"), "w") as f:
        json.dump(manifest, f, indent=2, sort_keys=True)
        f.write("\n")


if __name__ == "__main__":
    main()
