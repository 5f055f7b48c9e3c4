"""Seeded random REWIRE instances shared by the unit and acceptance suites."""

import random

REWIRE_SEED = 20240611


def rewire_instances(count: int = 10_000, seed: int = REWIRE_SEED):
    """Yield (k, m, L, order, v0): k <= 3, m <= 8, L <= 60, a shuffled order and a
    nonempty position set, half of them a class of a random (k+1)-labelling."""
    rng = random.Random(seed)
    for idx in range(count):
        k = rng.randint(1, 3)
        m = rng.randint(1, 8)
        L = rng.randint(1, 60)
        order = list(range(L))
        rng.shuffle(order)
        if idx % 2:
            labels = [rng.randint(0, k) for _ in range(L)]
            target = rng.choice(labels)
            v0 = {p for p, c in enumerate(labels) if c == target}
        else:
            density = rng.random()
            v0 = {p for p in range(L) if rng.random() < density} or {rng.randrange(L)}
        yield k, m, L, order, v0
