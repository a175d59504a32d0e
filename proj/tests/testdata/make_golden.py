#!/usr/bin/env python3
"""Regenerates the golden vectors in this directory.

Independent reference implementation of MurmurHash3 x64-128 and of the
clause-derivation bit stream. Kept separate from the C++ code so the two
implementations check each other.

Usage: python3 make_golden.py
"""

import os

MASK64 = (1 << 64) - 1


def _rotl64(x, r):
    return ((x << r) | (x >> (64 - r))) & MASK64


def _fmix64(k):
    k ^= k >> 33
    k = (k * 0xFF51AFD7ED558CCD) & MASK64
    k ^= k >> 33
    k = (k * 0xC4CEB9FE1A85EC53) & MASK64
    k ^= k >> 33
    return k


def murmur3_x64_128(data: bytes, seed: int):
    """Returns (h1, h2), both 64-bit ints."""
    c1 = 0x87C37B91114253D5
    c2 = 0x4CF5AD432745937F
    h1 = seed & MASK64
    h2 = seed & MASK64
    length = len(data)
    nblocks = length // 16

    for i in range(nblocks):
        k1 = int.from_bytes(data[i * 16 : i * 16 + 8], "little")
        k2 = int.from_bytes(data[i * 16 + 8 : i * 16 + 16], "little")
        k1 = (k1 * c1) & MASK64
        k1 = _rotl64(k1, 31)
        k1 = (k1 * c2) & MASK64
        h1 ^= k1
        h1 = _rotl64(h1, 27)
        h1 = (h1 + h2) & MASK64
        h1 = (h1 * 5 + 0x52DCE729) & MASK64
        k2 = (k2 * c2) & MASK64
        k2 = _rotl64(k2, 33)
        k2 = (k2 * c1) & MASK64
        h2 ^= k2
        h2 = _rotl64(h2, 31)
        h2 = (h2 + h1) & MASK64
        h2 = (h2 * 5 + 0x38495AB5) & MASK64

    tail = data[nblocks * 16 :]
    k1 = 0
    k2 = 0
    for i in range(len(tail) - 1, 7, -1):
        k2 ^= tail[i] << (8 * (i - 8))
    if len(tail) > 8:
        k2 = (k2 * c2) & MASK64
        k2 = _rotl64(k2, 33)
        k2 = (k2 * c1) & MASK64
        h2 ^= k2
    for i in range(min(len(tail), 8) - 1, -1, -1):
        k1 ^= tail[i] << (8 * i)
    if len(tail) > 0:
        k1 = (k1 * c1) & MASK64
        k1 = _rotl64(k1, 31)
        k1 = (k1 * c2) & MASK64
        h1 ^= k1

    h1 ^= length
    h2 ^= length
    h1 = (h1 + h2) & MASK64
    h2 = (h2 + h1) & MASK64
    h1 = _fmix64(h1)
    h2 = _fmix64(h2)
    h1 = (h1 + h2) & MASK64
    h2 = (h2 + h1) & MASK64
    return h1, h2


def fmix32(h):
    m32 = 0xFFFFFFFF
    h ^= h >> 16
    h = (h * 0x85EBCA6B) & m32
    h ^= h >> 13
    h = (h * 0xC2B2AE35) & m32
    h ^= h >> 16
    return h


def digest(key: bytes, seed: int, counter: int):
    return murmur3_x64_128(key, (seed ^ fmix32(counter)) & 0xFFFFFFFF)


class BitStream:
    """Little-endian bit stream over digest(key, seed, 0), digest(key, seed, 1), ..."""

    def __init__(self, key: bytes, seed: int):
        self.key = key
        self.seed = seed
        self.counter = 0
        self.pos = 0
        self.words = digest(key, seed, 0)

    def take(self, nbits: int) -> int:
        v = 0
        got = 0
        while got < nbits:
            if self.pos == 128:
                self.counter += 1
                self.words = digest(self.key, self.seed, self.counter)
                self.pos = 0
            w, off = divmod(self.pos, 64)
            grab = min(nbits - got, 64 - off)
            v |= ((self.words[w] >> off) & ((1 << grab) - 1)) << got
            self.pos += grab
            got += grab
        return v


def derive_clause(key: bytes, mode: str, base_seed: int, n: int, k: int):
    """Returns [(var, negated), ...]; mirrors the production convention."""
    var_bits = max(1, (n - 1).bit_length())
    vs = BitStream(key, base_seed)
    ss = vs if mode == "one" else BitStream(key, (base_seed + 1) & 0xFFFFFFFF)
    lits = []
    chosen = set()
    for _ in range(k):
        while True:
            v = vs.take(var_bits)
            if v < n and v not in chosen:
                break
        chosen.add(v)
        neg = ss.take(1) == 1
        lits.append((v, neg))
    return lits


def main():
    out_dir = os.path.dirname(os.path.abspath(__file__))

    # Digest vectors: key_hex seed counter -> digest as 32 hex chars (w0 then w1).
    cases = [
        (b"", 0, 0),
        (b"", 1, 0),
        (b"a", 1, 0),
        (b"a", 2, 0),
        (b"a", 1, 1),
        (b"abc", 0, 0),
        (b"hello world", 42, 0),
        (b"\x00" * 8, 0, 0),
        (b"\x00" * 8, 0, 1),
        (bytes(range(16)), 7, 0),
        (bytes(range(31)), 123456789, 5),
        (b"The quick brown fox jumps over the lazy dog", 0, 0),
    ]
    lines = []
    for key, seed, counter in cases:
        h1, h2 = digest(key, seed, counter)
        lines.append(f"{key.hex()} {seed} {counter} {h1:016x}{h2:016x}")
    with open(os.path.join(out_dir, "digest_vectors.txt"), "w") as f:
        f.write("# key_hex seed counter digest_hex(w0||w1)\n")
        f.write("\n".join(lines) + "\n")

    # Clause vectors: key_hex mode seed n k -> lits as +v/-v tokens.
    clause_cases = [
        (b"\x00" * 8, "one", 0, 16, 3),
        (b"\x00" * 8, "two", 0, 16, 3),
        (b"\x01\x02\x03\x04\x05\x06\x07\x08", "one", 7, 100, 5),
        (b"\x01\x02\x03\x04\x05\x06\x07\x08", "two", 7, 100, 5),
        (b"key", "one", 1, 3, 3),
        (b"key", "two", 99, 2000, 4),
    ]
    lines = []
    for key, mode, seed, n, k in clause_cases:
        lits = derive_clause(key, mode, seed, n, k)
        toks = " ".join(("-" if neg else "+") + str(v) for v, neg in lits)
        lines.append(f"{key.hex()} {mode} {seed} {n} {k} {toks}")
    with open(os.path.join(out_dir, "clause_vectors.txt"), "w") as f:
        f.write("# key_hex mode seed n k literals(+var|-var ...)\n")
        f.write("\n".join(lines) + "\n")

    print("wrote digest_vectors.txt and clause_vectors.txt")

    # Sanity: the well-known empty-input, zero-seed murmur3 x64-128 value.
    assert murmur3_x64_128(b"", 0) == (0, 0)


if __name__ == "__main__":
    main()
