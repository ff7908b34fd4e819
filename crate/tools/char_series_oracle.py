#!/usr/bin/env python3
"""Brute-force character coefficients from restricted partition counts.

Independent cross-check data for the normalized twisted characters. Each
case below reduces to counting partitions, so the numbers come out of an
unbounded-knapsack table rather than any series algebra, and the script
shares no code with the Rust implementation it checks.

  A1, lambda=0, mu=0  The alternating numerator is 1 - q, which cancels
                      the n = 1 factor of the Euler product: coefficient
                      of q^d counts partitions of d into parts >= 2.

  A1, lambda=1, mu=1  The nontrivial reflection sits at exponent
                      (lambda+1)(mu+1) = 4, so the numerator is 1 - q^4
                      and the coefficient is p(d) - p(d-4).

  A2, lambda=0, mu=0  The numerator (1-q)(1-q)(1-q^2) cancels the n = 1
                      factor of one Euler product and the n = 1, 2 factors
                      of the other, leaving the convolution of
                      "parts >= 2" with "parts >= 3" partition counts.

Writes tools/golden/char_series.json next to this script and prints the
vectors for eyeballing.
"""

import json
import os


def min_part_counts(nmax, min_part):
    """Partitions of 0..nmax into parts >= min_part (min_part=1 gives p)."""
    c = [1] + [0] * nmax
    for part in range(min_part, nmax + 1):
        for d in range(part, nmax + 1):
            c[d] += c[d - part]
    return c


def a1_case(lam, mu, order):
    p = min_part_counts(order, 1)
    gap = (lam + 1) * (mu + 1)
    return [p[d] - (p[d - gap] if d >= gap else 0) for d in range(order + 1)]


def a2_vacuum(order):
    t2 = min_part_counts(order, 2)
    t3 = min_part_counts(order, 3)
    return [sum(t2[a] * t3[d - a] for a in range(d + 1)) for d in range(order + 1)]


def main():
    # Sanity: parts >= 2 must agree with p(d) - p(d-1).
    p = min_part_counts(12, 1)
    t2 = min_part_counts(12, 2)
    assert all(t2[d] == p[d] - (p[d - 1] if d else 0) for d in range(13))

    entries = [
        {
            "algebra": "A1",
            "lambda": [0],
            "mu": [0],
            "order": 10,
            "coefficients": a1_case(0, 0, 10),
        },
        {
            "algebra": "A1",
            "lambda": [1],
            "mu": [1],
            "order": 6,
            "coefficients": a1_case(1, 1, 6),
        },
        {
            "algebra": "A2",
            "lambda": [0, 0],
            "mu": [0, 0],
            "order": 5,
            "coefficients": a2_vacuum(5),
        },
    ]
    here = os.path.dirname(os.path.abspath(__file__))
    out = os.path.join(here, "golden", "char_series.json")
    os.makedirs(os.path.dirname(out), exist_ok=True)
    with open(out, "w") as fh:
        json.dump({"entries": entries}, fh, indent=2)
        fh.write("\n")
    for e in entries:
        print(e["algebra"], e["lambda"], e["mu"], "->", e["coefficients"])
    print("wrote", out)


if __name__ == "__main__":
    main()
