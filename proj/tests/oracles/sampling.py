"""Reference sampler written only from the documented wire rules.

Used to cross-check the pinned vectors in test_crypto.cpp:
  python3 tests/oracles/sampling.py
"""
import hashlib


def tag(ctx, a=0, b=0):
    return bytes([ctx]) + a.to_bytes(4, "big") + b.to_bytes(4, "big")


class Stream:
    def __init__(self, data):
        self.buf = hashlib.shake_256(data).digest(4096)
        self.bit = 0

    def bits(self, k):
        v = 0
        for j in range(k):
            v |= ((self.buf[self.bit // 8] >> (self.bit % 8)) & 1) << j
            self.bit += 1
        return v

    def uniform(self, m):
        if m <= 1:
            return 0
        k = (m - 1).bit_length()
        while True:
            v = self.bits(k)
            if v < m:
                return v


def perm(seed, t, n):
    s = Stream(t + seed)
    a = list(range(n))
    for i in range(n - 1, 0, -1):
        j = s.uniform(i + 1)
        a[i], a[j] = a[j], a[i]
    return a


def fixed_weight(seed, t, n, w):
    s = Stream(t + seed)
    a = list(range(n))
    out = [0] * n
    for i in range(w):
        j = i + s.uniform(n - i)
        a[i], a[j] = a[j], a[i]
        out[a[i]] = 1
    return "".join(map(str, out))


def challenge(t, transcript, m, size, lo, hi, count):
    s = Stream(t + transcript)
    a = list(range(m))
    for i in range(size):
        j = i + s.uniform(m - i)
        a[i], a[j] = a[j], a[i]
    return sorted(a[:size]), [lo + s.uniform(hi - lo + 1) for _ in range(count)]


if __name__ == "__main__":
    seed = bytes(range(16))
    print("perm", perm(seed, tag(1), 8))
    print("fixed_weight", fixed_weight(seed, tag(4), 16, 3))
    print("challenge", challenge(tag(8), b"`bc", 16, 4, 1, 8, 3))
