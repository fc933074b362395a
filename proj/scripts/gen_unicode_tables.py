#!/usr/bin/env python3
"""Generates core/src/unicode_tables.inc from the Python unicodedata module
(UCD 13.0 on this toolchain).

Emitted tables:
  * word ranges:    codepoints with general category L* or Nd
  * lowercase:      per-codepoint simple lowercase (plus the U+0130 expansion)
  * decompositions: one-level canonical decompositions (Hangul is algorithmic)
  * ccc:            nonzero canonical combining classes, as ranges
  * compositions:   primary composites keyed by (starter, combining) pair

Run from the repository root:  python3 scripts/gen_unicode_tables.py
"""

import os
import sys
import unicodedata

MAX_CP = 0x110000
HANGUL_S_BASE, HANGUL_S_COUNT = 0xAC00, 11172


def word_ranges():
    ranges = []
    run = None
    for cp in range(MAX_CP):
        if 0xD800 <= cp <= 0xDFFF:
            ok = False
        else:
            cat = unicodedata.category(chr(cp))
            ok = cat.startswith("L") or cat == "Nd"
        if ok:
            if run is None:
                run = [cp, cp]
            else:
                run[1] = cp
        elif run is not None:
            ranges.append(tuple(run))
            run = None
    if run:
        ranges.append(tuple(run))
    return ranges


def lowercase_maps():
    singles, multis = [], []
    for cp in range(MAX_CP):
        if 0xD800 <= cp <= 0xDFFF:
            continue
        low = chr(cp).lower()
        if low == chr(cp):
            continue
        cps = [ord(c) for c in low]
        if len(cps) == 1:
            singles.append((cp, cps[0]))
        else:
            multis.append((cp, cps))
    return singles, multis


def decompositions():
    entries = []
    for cp in range(MAX_CP):
        if 0xD800 <= cp <= 0xDFFF:
            continue
        if HANGUL_S_BASE <= cp < HANGUL_S_BASE + HANGUL_S_COUNT:
            continue
        d = unicodedata.decomposition(chr(cp))
        if not d or d.startswith("<"):
            continue
        parts = [int(x, 16) for x in d.split()]
        assert 1 <= len(parts) <= 2, (cp, d)
        entries.append((cp, parts[0], parts[1] if len(parts) == 2 else 0))
    return entries


def ccc_ranges():
    ranges = []
    run = None
    for cp in range(MAX_CP):
        if 0xD800 <= cp <= 0xDFFF:
            c = 0
        else:
            c = unicodedata.combining(chr(cp))
        if c:
            if run and run[1] == cp - 1 and run[2] == c:
                run[1] = cp
            else:
                if run:
                    ranges.append(tuple(run))
                run = [cp, cp, c]
        else:
            if run:
                ranges.append(tuple(run))
                run = None
    if run:
        ranges.append(tuple(run))
    return ranges


def compositions(decomps):
    pairs = []
    for cp, a, b in decomps:
        if b == 0:
            continue
        # normalize() applies the composition exclusions for us
        if unicodedata.normalize("NFC", chr(a) + chr(b)) == chr(cp):
            pairs.append((a, b, cp))
    pairs.sort()
    return pairs


def main():
    out_path = os.path.join(os.path.dirname(__file__), "..",
                            "core", "src", "unicode_tables.inc")
    wr = word_ranges()
    singles, multis = lowercase_maps()
    decomps = decompositions()
    cccs = ccc_ranges()
    comps = compositions(decomps)

    with open(out_path, "w") as f:
        w = f.write
        w("// Generated by scripts/gen_unicode_tables.py from UCD %s. Do not edit.\n\n"
          % unicodedata.unidata_version)
        w("struct cp_range { char32_t lo; char32_t hi; };\n")
        w("struct cp_pair { char32_t from; char32_t to; };\n")
        w("struct cp_decomp { char32_t cp; char32_t a; char32_t b; };\n")
        w("struct cp_ccc { char32_t lo; char32_t hi; uint8_t ccc; };\n")
        w("struct cp_comp { char32_t a; char32_t b; char32_t composed; };\n\n")

        w("inline constexpr cp_range k_word_ranges[] = {\n")
        for lo, hi in wr:
            w("  {0x%X,0x%X},\n" % (lo, hi))
        w("};\n\n")

        w("inline constexpr cp_pair k_lower_singles[] = {\n")
        for cp, lo in singles:
            w("  {0x%X,0x%X},\n" % (cp, lo))
        w("};\n\n")

        w("// codepoints whose lowercase expands to more than one codepoint\n")
        w("inline constexpr struct { char32_t cp; char32_t seq[3]; uint8_t n; } "
          "k_lower_multis[] = {\n")
        for cp, seq in multis:
            padded = seq + [0] * (3 - len(seq))
            w("  {0x%X,{0x%X,0x%X,0x%X},%d},\n" % (cp, *padded, len(seq)))
        w("};\n\n")

        w("inline constexpr cp_decomp k_decomps[] = {\n")
        for cp, a, b in decomps:
            w("  {0x%X,0x%X,0x%X},\n" % (cp, a, b))
        w("};\n\n")

        w("inline constexpr cp_ccc k_ccc_ranges[] = {\n")
        for lo, hi, c in cccs:
            w("  {0x%X,0x%X,%d},\n" % (lo, hi, c))
        w("};\n\n")

        w("inline constexpr cp_comp k_comps[] = {\n")
        for a, b, c in comps:
            w("  {0x%X,0x%X,0x%X},\n" % (a, b, c))
        w("};\n")

    sys.stderr.write("word ranges: %d, lower singles: %d, lower multis: %d, "
                     "decomps: %d, ccc ranges: %d, comps: %d\n"
                     % (len(wr), len(singles), len(multis), len(decomps),
                        len(cccs), len(comps)))


if __name__ == "__main__":
    main()
