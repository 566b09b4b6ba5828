"""The countermeasure: rotate the epoch key to starve the attacker.

A fixed total budget Q split across E epochs buys only floor(Q/E) fresh
guesses per epoch, because every rotation invalidates all previously
computed heads. Per-epoch coverage falls as 1/E.
"""

import sys

from peacock import RotationConfig, sweep_rotation
from peacock.harness import write_sweep_csv

D, M, Q = 10_000, 500, 2_000
cfgs = [
    RotationConfig(
        dictionary_size=D,
        feather_count=M,
        total_attack_budget=Q,
        epochs=e,
        seed=42,
    )
    for e in (1, 2, 4, 8)
]

results = sweep_rotation(cfgs)
print(f"D={D} dictionary words, M={M} feathers, total budget Q={Q}\n")
print(f"{'epochs':>6} {'q/epoch':>8} {'predicted':>10} {'observed':>10}")
for epochs, coverage in results:
    q = Q // epochs
    print(f"{epochs:>6} {q:>8} {q / D:>10.4f} {coverage:>10.4f}")

write_sweep_csv(results, sys.stdout)
