"""Walk through one full rendezvous, step by step.

Eve wants to be findable by anyone who shares a keyword with her, without
the search service ever learning the keyword or her address.
"""

from random import Random

from peacock import (
    AnnouncementBoard,
    FeatherStore,
    Middleman,
    PointingAddress,
    canonicalize_keyword,
    compute_head,
    mint_feather,
    open_feather,
)

rng = Random(42)

# The TTP publishes this epoch's one-way key. It is public: Eve, Adam,
# and the middleman all read the same board.
board = AnnouncementBoard()
ek = board.announce_epoch(rng)
print(f"TTP announced epoch {ek.epoch_id}, key {ek.key.hex()[:16]}...")

# Eve mints her feather: the keyword's one-way head plus her address
# sealed under a key derived from the keyword itself.
feather = mint_feather("peacock", PointingAddress("eve@example"), ek, rng)
print(f"Eve's feather head: {feather.head.hex()[:16]}...")
print(f"Sealed address ({len(feather.payload.ciphertext)} bytes, unreadable "
      "without the keyword)")

# She posts it to the search site among other people's feathers.
store = FeatherStore()
store.post_feather(feather)
for i in range(5):
    store.post_feather(
        mint_feather(f"decoy{i:02d}word", PointingAddress(f"d{i}@x"), ek, rng)
    )
print(f"Search site now holds {len(store)} feathers")

# Adam types the same keyword (sloppily), computes the same head, and
# asks the middleman to find it.
kw = canonicalize_keyword("  PEAcock ")
middleman = Middleman(store)
hits = middleman.search(ek.epoch_id, compute_head(kw, ek))
print(f"Middleman returned {len(hits)} hit(s)")

# Only the shared keyword opens the payload.
address = open_feather(hits[0], "peacock", ek)
print(f"Adam recovered: {address.text}")

# What did the middleman learn? Heads only.
for entry in middleman.query_log():
    print(f"middleman log: seq={entry.sequence} head={entry.head.hex()[:16]}...")
