#!/usr/bin/env python3
"""Sweep all 12870 eight-subsets of the sixteen nodes for divisibility by 2
relative to the span of L, the nodes and the tropes, and print the positive
sets paired with their complements."""
from ulrichcert.labels import NODE_LABELS, node_token
from ulrichcert.picard import EvenEightTester


def main():
    positives = EvenEightTester().sweep()
    print(f"{len(positives)} even eights among 12870 eight-subsets")
    full = set(NODE_LABELS)
    seen = set()
    pair_index = 0
    for eight in sorted(positives, key=lambda s: sorted(s)):
        if eight in seen:
            continue
        complement = frozenset(full - eight)
        seen.update((eight, complement))
        pair_index += 1
        left = " ".join(node_token(l) for l in sorted(eight))
        right = " ".join(node_token(l) for l in sorted(complement))
        print(f"pair {pair_index:2d}:  {left}   <->   {right}")
    closed = all(frozenset(full - s) in set(positives) for s in positives)
    print(f"closed under complementation: {closed}")


if __name__ == "__main__":
    main()
