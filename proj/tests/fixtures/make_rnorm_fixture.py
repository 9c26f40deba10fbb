#!/usr/bin/env python3
"""Regenerate rnorm_seed200_n100.csv.

Reproduces the stream of R's default generator (Mersenne-Twister seeded through
set.seed's LCG scrambling, normals by inversion from two uniforms) for

    set.seed(200); x <- rnorm(100); y <- rnorm(100)

without needing R. Sanity check: RMersenne(42).normal() gives 1.370958...,
the first value of set.seed(42); rnorm(1).
"""
import sys

from scipy.special import ndtri

MASK32 = 0xFFFFFFFF


class RMersenne:
    N, M = 624, 397

    def __init__(self, seed):
        seed &= MASK32
        for _ in range(50):
            seed = (69069 * seed + 1) & MASK32
        state = []
        for _ in range(self.N + 1):
            seed = (69069 * seed + 1) & MASK32
            state.append(seed)
        # state[0] is R's position slot; set.seed leaves it at N.
        self.mt = state[1:]
        self.mti = self.N

    def _next32(self):
        mt = self.mt
        if self.mti >= self.N:
            for kk in range(self.N):
                y = (mt[kk] & 0x80000000) | (mt[(kk + 1) % self.N] & 0x7FFFFFFF)
                mt[kk] = mt[(kk + self.M) % self.N] ^ (y >> 1) ^ (0x9908B0DF if y & 1 else 0)
            self.mti = 0
        y = mt[self.mti]
        self.mti += 1
        y ^= y >> 11
        y ^= (y << 7) & 0x9D2C5680
        y ^= (y << 15) & 0xEFC60000
        y ^= y >> 18
        return y

    def uniform(self):
        v = self._next32() * 2.3283064365386963e-10
        i2_32m1 = 2.328306437080797e-10
        if v <= 0.0:
            return 0.5 * i2_32m1
        if 1.0 - v <= 0.0:
            return 1.0 - 0.5 * i2_32m1
        return v

    def normal(self):
        big = 134217728  # 2^27
        u = self.uniform()
        u = int(big * u) + self.uniform()
        return float(ndtri(u / big))


def main(path):
    rng = RMersenne(200)
    x = [rng.normal() for _ in range(100)]
    y = [rng.normal() for _ in range(100)]
    with open(path, "w") as f:
        f.write("x,y\n")
        for a, b in zip(x, y):
            f.write(f"{a!r},{b!r}\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "rnorm_seed200_n100.csv")
