"""Scratch: search the gamma/mu absorption window at H=3 (not shipped)."""
import sys
import time

import numpy as np

sys.path.insert(0, "src")
from scratch_finite import instance, solve
from graphjoint.metrics import normalized_error

h = 3
nh_cache = {}
for mu in (1e6, 1e7, 1e8):
    nh = []
    for r in range(4):
        inst = instance(r, 3, h)
        if inst is None:
            continue
        c_obs, truth = inst
        nh.append(normalized_error(truth, solve(c_obs, "NO_HIDDEN", mu, 0.0, 0.0).s_hat))
    nh_cache[mu] = np.mean(nh)
    print(f"NO_HIDDEN mu={mu:.0e}: {nh_cache[mu]:.3f}")

for mu in (1e6, 1e7, 1e8):
    for ratio in (1e-3, 3e-3, 1e-2, 3e-2):
        gamma = ratio * mu
        t0 = time.time()
        pgl = []
        for r in range(4):
            inst = instance(r, 3, h)
            if inst is None:
                continue
            c_obs, truth = inst
            pgl.append(normalized_error(truth, solve(c_obs, "PGL", mu, gamma, gamma).s_hat))
        print(
            f"mu={mu:.0e} gamma/mu={ratio:.0e} (gamma={gamma:.0e}): PGL={np.mean(pgl):.3f} "
            f"vs NH={nh_cache[mu]:.3f} ({time.time()-t0:.0f}s)"
        )
