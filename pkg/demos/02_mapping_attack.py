"""The protocol's weakness: the middleman can dictionary-guess keywords.

The epoch key is public, so anyone can hash candidate words and look the
resulting heads up. Every stored feather whose keyword falls in the
attacker's dictionary sample is de-anonymized.
"""

from random import Random

from peacock import (
    AnnouncementBoard,
    FeatherStore,
    Middleman,
    PointingAddress,
    mint_feather,
)
from peacock.harness import generate_dictionary

rng = Random(7)
board = AnnouncementBoard()
ek = board.announce_epoch(rng)

# 200 users post feathers with keywords drawn from a 2000-word dictionary.
dictionary = generate_dictionary(2000, rng)
store = FeatherStore()
for i in range(200):
    store.post_feather(
        mint_feather(rng.choice(dictionary), PointingAddress(f"user{i}@example"),
                     ek, rng)
    )

# The middleman spends a budget of 500 hash evaluations on a random
# sample of candidate words.
middleman = Middleman(store)
budget = 500
sample = rng.sample(dictionary, budget)
report = middleman.run_mapping_attack(sample, ek, budget)

print(f"dictionary size: {len(dictionary)}")
print(f"attack budget:   {budget} hash evaluations")
print(f"expected coverage q/D = {budget / len(dictionary):.3f}")
print(f"observed coverage     = {report.coverage:.3f}")
print(f"de-anonymized heads: {len(report.mapped)}")
for m in report.mapped[:5]:
    print(f"  keyword {m.keyword.text!r} -> {[a.text for a in m.addresses]}")
print("  ...")
