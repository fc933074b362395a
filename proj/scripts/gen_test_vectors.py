#!/usr/bin/env python3
"""Regenerates the frozen reference vectors under tests/data/.

Everything here is computed from scratch in Python (Keccak sponge, secp256k1
ECDSA with RFC 6979 nonces) and then cross-checked against independent
implementations where one exists:

  * the Keccak permutation is validated against hashlib.sha3_256 (same
    permutation, different padding byte) on several hundred inputs,
  * ECDSA signatures are validated against the `cryptography` package's
    deterministic secp256k1 signer and verifier.

Run from the repository root:  python3 scripts/gen_test_vectors.py
"""

import hashlib
import hmac
import json
import os
import unicodedata

OUT = os.path.join(os.path.dirname(__file__), "..", "tests", "data")

# ---------------------------------------------------------------------------
# Keccak-256 (the pre-NIST padding 0x01 variant used by Ethereum)
# ---------------------------------------------------------------------------

_ROT = [[0, 36, 3, 41, 18], [1, 44, 10, 45, 2], [62, 6, 43, 15, 61],
        [28, 55, 25, 21, 56], [27, 20, 39, 8, 14]]

_RC = [0x0000000000000001, 0x0000000000008082, 0x800000000000808A,
       0x8000000080008000, 0x000000000000808B, 0x0000000080000001,
       0x8000000080008081, 0x8000000000008009, 0x000000000000008A,
       0x0000000000000088, 0x0000000080008009, 0x000000008000000A,
       0x000000008000808B, 0x800000000000008B, 0x8000000000008089,
       0x8000000000008003, 0x8000000000008002, 0x8000000000000080,
       0x000000000000800A, 0x800000008000000A, 0x8000000080008081,
       0x8000000000008080, 0x0000000080000001, 0x8000000080008008]

MASK = (1 << 64) - 1


def _rotl(x, n):
    return ((x << n) | (x >> (64 - n))) & MASK


def _keccak_f(a):
    for rnd in range(24):
        c = [a[x][0] ^ a[x][1] ^ a[x][2] ^ a[x][3] ^ a[x][4] for x in range(5)]
        d = [c[(x - 1) % 5] ^ _rotl(c[(x + 1) % 5], 1) for x in range(5)]
        for x in range(5):
            for y in range(5):
                a[x][y] ^= d[x]
        b = [[0] * 5 for _ in range(5)]
        for x in range(5):
            for y in range(5):
                b[y][(2 * x + 3 * y) % 5] = _rotl(a[x][y], _ROT[x][y])
        for x in range(5):
            for y in range(5):
                a[x][y] = b[x][y] ^ ((~b[(x + 1) % 5][y]) & b[(x + 2) % 5][y])
        a[0][0] ^= _RC[rnd]
    return a


def _sponge(data: bytes, pad_byte: int) -> bytes:
    rate = 136
    padded = bytearray(data)
    padded.append(pad_byte)
    while len(padded) % rate != 0:
        padded.append(0)
    padded[-1] |= 0x80
    st = [[0] * 5 for _ in range(5)]
    for off in range(0, len(padded), rate):
        block = padded[off:off + rate]
        for i in range(rate // 8):
            lane = int.from_bytes(block[i * 8:i * 8 + 8], "little")
            st[i % 5][i // 5] ^= lane
        st = _keccak_f(st)
    out = b""
    for i in range(4):
        out += st[i % 5][i // 5].to_bytes(8, "little")
    return out


def keccak256(data: bytes) -> bytes:
    return _sponge(data, 0x01)


def _self_check_keccak():
    # Same sponge with NIST SHA3 padding must reproduce hashlib.sha3_256.
    for n in range(0, 300, 7):
        data = bytes((i * 131 + n) & 0xFF for i in range(n))
        assert _sponge(data, 0x06) == hashlib.sha3_256(data).digest(), n
    empty = keccak256(b"").hex()
    assert empty == "c5d2460186f7233c927e7db2dcc703c0e500b653ca82273b7bfad8045d85a470", empty
    abc = keccak256(b"abc").hex()
    assert abc == "4e03657aea45a94fc7d47ba826c8d667c0d1e6e33a64a036ec44f58fa12d6c45", abc


# ---------------------------------------------------------------------------
# secp256k1 + RFC 6979 ECDSA
# ---------------------------------------------------------------------------

P = 0xFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFEFFFFFC2F
N = 0xFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFEBAAEDCE6AF48A03BBFD25E8CD0364141
GX = 0x79BE667EF9DCBBAC55A06295CE870B07029BFCDB2DCE28D959F2815B16F81798
GY = 0x483ADA7726A3C4655DA4FBFC0E1108A8FD17B448A68554199C47D08FFB10D4B8


def _ec_add(p1, p2):
    if p1 is None:
        return p2
    if p2 is None:
        return p1
    x1, y1 = p1
    x2, y2 = p2
    if x1 == x2 and (y1 + y2) % P == 0:
        return None
    if p1 == p2:
        lam = (3 * x1 * x1) * pow(2 * y1, -1, P) % P
    else:
        lam = (y2 - y1) * pow(x2 - x1, -1, P) % P
    x3 = (lam * lam - x1 - x2) % P
    return (x3, (lam * (x1 - x3) - y1) % P)


def _ec_mul(k, pt):
    acc = None
    while k:
        if k & 1:
            acc = _ec_add(acc, pt)
        pt = _ec_add(pt, pt)
        k >>= 1
    return acc


def _rfc6979_k(priv: int, digest: bytes) -> int:
    x = priv.to_bytes(32, "big")
    h1 = (int.from_bytes(digest, "big") % N).to_bytes(32, "big")
    v = b"\x01" * 32
    k = b"\x00" * 32
    k = hmac.new(k, v + b"\x00" + x + h1, hashlib.sha256).digest()
    v = hmac.new(k, v, hashlib.sha256).digest()
    k = hmac.new(k, v + b"\x01" + x + h1, hashlib.sha256).digest()
    v = hmac.new(k, v, hashlib.sha256).digest()
    while True:
        v = hmac.new(k, v, hashlib.sha256).digest()
        cand = int.from_bytes(v, "big")
        if 1 <= cand < N:
            return cand
        k = hmac.new(k, v + b"\x00", hashlib.sha256).digest()
        v = hmac.new(k, v, hashlib.sha256).digest()


def sign(priv: int, digest: bytes):
    z = int.from_bytes(digest, "big") % N
    k = _rfc6979_k(priv, digest)
    rx, ry = _ec_mul(k, (GX, GY))
    r = rx % N
    assert r != 0 and rx < N  # recovery_id stays in {0, 1}
    s = pow(k, -1, N) * (z + r * priv) % N
    assert s != 0
    recid = ry & 1
    if s > N // 2:
        s = N - s
        recid ^= 1
    return r, s, recid


def recover(digest: bytes, r: int, s: int, recid: int):
    y_sq = (pow(r, 3, P) + 7) % P
    y = pow(y_sq, (P + 1) // 4, P)
    if y * y % P != y_sq:
        return None
    if y & 1 != recid:
        y = P - y
    z = int.from_bytes(digest, "big") % N
    rinv = pow(r, -1, N)
    q = _ec_add(_ec_mul(s * rinv % N, (r, y)), _ec_mul((-z * rinv) % N, (GX, GY)))
    return q


def address_of(pub) -> bytes:
    raw = pub[0].to_bytes(32, "big") + pub[1].to_bytes(32, "big")
    return keccak256(raw)[12:]


def _self_check_ecdsa():
    from cryptography.hazmat.primitives.asymmetric import ec
    from cryptography.hazmat.primitives.asymmetric.utils import (
        Prehashed, decode_dss_signature, encode_dss_signature)
    from cryptography.hazmat.primitives import hashes

    for i in range(24):
        priv = (int.from_bytes(keccak256(b"selfcheck-%d" % i), "big") % (N - 1)) + 1
        digest = keccak256(b"selfcheck-msg-%d" % i)
        key = ec.derive_private_key(priv, ec.SECP256K1())
        nums = key.public_key().public_numbers()
        assert _ec_mul(priv, (GX, GY)) == (nums.x, nums.y)

        r, s, recid = sign(priv, digest)
        der = key.sign(digest, ec.ECDSA(Prehashed(hashes.SHA256()),
                                        deterministic_signing=True))
        cr, cs = decode_dss_signature(der)
        if cs > N // 2:
            cs = N - cs
        assert (cr, cs) == (r, s), i

        key.public_key().verify(encode_dss_signature(r, s), digest,
                                ec.ECDSA(Prehashed(hashes.SHA256())))
        assert recover(digest, r, s, recid) == (nums.x, nums.y), i


# ---------------------------------------------------------------------------
# Deterministic byte stream shared with the C++ tests (xorshift64*)
# ---------------------------------------------------------------------------

def xorshift_stream(seed: int, nbytes: int) -> bytes:
    out = bytearray()
    state = seed & MASK
    while len(out) < nbytes:
        state ^= (state >> 12)
        state &= MASK
        state ^= (state << 25) & MASK
        state ^= (state >> 27)
        word = (state * 0x2545F4914F6CDD1D) & MASK
        out += word.to_bytes(8, "little")
    return bytes(out[:nbytes])


# ---------------------------------------------------------------------------
# Tokenizer oracle: NFC, per-codepoint lowercase, split on non-letter/digit
# ---------------------------------------------------------------------------

def _is_word_cp(ch: str) -> bool:
    cat = unicodedata.category(ch)
    return cat.startswith("L") or cat == "Nd"


def tokenize(text: str):
    words = set()
    cur = []
    for ch in unicodedata.normalize("NFC", text):
        for lc in ch.lower():
            if _is_word_cp(lc):
                cur.append(lc)
            else:
                if cur:
                    words.add("".join(cur))
                cur = []
    if cur:
        words.add("".join(cur))
    return sorted(words)


_WORD_POOL = [
    "stamp", "duty", "Tax", "LEDGER", "token", "Rupiah", "dokumen", "pajak",
    "meterai", "elektronik", "naïve", "café", "Zürich", "garçon", "señor",
    "Ελληνικά", "ΣΟΦΙΑ", "λόγος", "ΤΕΛΟΣ", "Москва", "привет", "Україна",
    "東京", "税金", "ブロック", "チェーン", "서울", "한국어", "مرحبا", "ضريبة",
    "שלום", "מס", "İstanbul", "Diyarbakır", "français", "piñata", "42",
    "2018", "0xdead", "ецдса", "ΑΒΓΔΣ", "fi", "ﬁnance", "ṩẛ", "ŉoot",
]

# Decomposed spellings exercise NFC recomposition inside the tokenizer.
_DECOMPOSED = [unicodedata.normalize("NFD", w) for w in
               ("naïve", "café", "Zürich", "señor", "한국어", "Águeda")]

_SEPS = [" ", "\t", "\n", ", ", "; ", " — ", "…", "!!", " / ", " ",
         "().", "<<>>", " 🙂 ", "++", "\r\n"]


def build_corpus():
    rng_state = [0x746F6B656E697A]

    def rnd(n):
        rng_state[0] ^= (rng_state[0] >> 12) & MASK
        rng_state[0] ^= (rng_state[0] << 25) & MASK
        rng_state[0] &= MASK
        rng_state[0] ^= (rng_state[0] >> 27)
        return ((rng_state[0] * 0x2545F4914F6CDD1D) & MASK) % n

    pool = _WORD_POOL + _DECOMPOSED
    docs = []
    for i in range(100):
        parts = []
        for _ in range(5 + rnd(40)):
            parts.append(pool[rnd(len(pool))])
            parts.append(_SEPS[rnd(len(_SEPS))])
        text = "".join(parts)
        docs.append({"text": text, "words": tokenize(text)})
    # A few directed edge cases on top of the random mix.
    for text in ["", "   \t\n", "!!!", "Stamp duty, stamp DUTY!",
                 "été été", "İİİ", "ΑΣ ΒΣ ΣΟΦΙΑ",
                 "각 각", "ȧ ȧ", "ABC123def"]:
        docs.append({"text": text, "words": tokenize(text)})
    return docs


# ---------------------------------------------------------------------------
# Vector files
# ---------------------------------------------------------------------------

def main():
    _self_check_keccak()
    _self_check_ecdsa()
    os.makedirs(OUT, exist_ok=True)

    # keccak_vectors.json: digest of xorshift64*(0x5345454431) streams,
    # input length == vector index.  The C++ test regenerates the inputs.
    digests = []
    for n in range(1000):
        digests.append(keccak256(xorshift_stream(0x5345454431 + n, n)).hex())
    with open(os.path.join(OUT, "keccak_vectors.json"), "w") as f:
        json.dump({"seed_base": "0x5345454431", "digests": digests}, f, indent=1)

    # ecdsa_vectors.json
    vectors = []
    for i in range(32):
        priv = (int.from_bytes(keccak256(b"ssd-key-%d" % i), "big") % (N - 1)) + 1
        digest = keccak256(b"ssd-msg-%d" % i)
        pub = _ec_mul(priv, (GX, GY))
        r, s, recid = sign(priv, digest)
        vectors.append({
            "private_key": "0x%064x" % priv,
            "digest": "0x" + digest.hex(),
            "public_key": "0x%064x%064x" % pub,
            "address": "0x" + address_of(pub).hex(),
            "r": "0x%064x" % r,
            "s": "0x%064x" % s,
            "recovery_id": recid,
        })
    with open(os.path.join(OUT, "ecdsa_vectors.json"), "w") as f:
        json.dump(vectors, f, indent=1)

    # crypto_acceptance.json: the fixed vectors the acceptance suite pins.
    one = 1
    pub1 = _ec_mul(one, (GX, GY))
    acc_digest = keccak256(b"smart stamp duty acceptance")
    r, s, recid = sign(one, acc_digest)
    acc = {
        "keccak_empty": "0x" + keccak256(b"").hex(),
        "keccak_abc": "0x" + keccak256(b"abc").hex(),
        "privkey_one_address": "0x" + address_of(pub1).hex(),
        "signature_vector": {
            "private_key": "0x%064x" % one,
            "digest": "0x" + acc_digest.hex(),
            "r": "0x%064x" % r,
            "s": "0x%064x" % s,
            "recovery_id": recid,
        },
    }
    with open(os.path.join(OUT, "crypto_acceptance.json"), "w") as f:
        json.dump(acc, f, indent=1)

    # paycode_golden.json: PayCode = keccak(doc_hash || payer || len2(code) ||
    # code || be8(timestamp)) for a handful of fixed tuples.
    def paycode(doc_hash: bytes, payer: bytes, code: str, ts: int) -> str:
        pre = doc_hash + payer + len(code.encode()).to_bytes(2, "big") + \
            code.encode() + ts.to_bytes(8, "big")
        return "0x" + keccak256(pre).hex()

    golden = [
        {"doc_hash": "0x" + "00" * 32, "payer": "0x" + "00" * 20,
         "stamp_code": "M6000", "time_stamp": 1,
         "pay_code": paycode(b"\x00" * 32, b"\x00" * 20, "M6000", 1)},
        {"doc_hash": "0x" + keccak256(b"doc").hex(), "payer": "0x" + address_of(pub1).hex(),
         "stamp_code": "M3000", "time_stamp": 1700000000,
         "pay_code": paycode(keccak256(b"doc"), address_of(pub1), "M3000", 1700000000)},
        {"doc_hash": "0x" + "00" * 32, "payer": "0x" + "00" * 20,
         "stamp_code": "M6000", "time_stamp": 2,
         "pay_code": paycode(b"\x00" * 32, b"\x00" * 20, "M6000", 2)},
    ]
    with open(os.path.join(OUT, "paycode_golden.json"), "w") as f:
        json.dump(golden, f, indent=1)

    # bloom_golden.json: double-hash probe positions and a tiny filter image.
    def probes(word: str, m: int, k: int):
        h1 = int.from_bytes(keccak256(b"\x00" + word.encode())[:8], "big")
        h2 = int.from_bytes(keccak256(b"\x01" + word.encode())[:8], "big") | 1
        return [((h1 + i * h2) & MASK) % m for i in range(k)]

    m, k = 64, 3
    bits = bytearray(m // 8)
    for w in ("stamp", "duty"):
        for pos in probes(w, m, k):
            bits[pos // 8] |= 1 << (pos % 8)
    bloom = {
        "m": m, "k": k,
        "words": ["stamp", "duty"],
        "probes": {w: probes(w, m, k) for w in ("stamp", "duty")},
        "serialized": "0x" + m.to_bytes(4, "big").hex() + k.to_bytes(1, "big").hex() + bits.hex(),
    }
    with open(os.path.join(OUT, "bloom_golden.json"), "w") as f:
        json.dump(bloom, f, indent=1)

    with open(os.path.join(OUT, "tokenizer_corpus.json"), "w") as f:
        json.dump(build_corpus(), f, indent=1, ensure_ascii=False)

    print("vectors written to", os.path.abspath(OUT))


if __name__ == "__main__":
    main()
