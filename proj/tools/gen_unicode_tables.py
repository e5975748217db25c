#!/usr/bin/env python3
"""Regenerates src/unicode_tables.inc from Python's unicodedata.

Emits three tables:
  - ranges of codepoints whose general category is L* or N* (alphanumeric)
  - ranges of codepoints whose general category is Lu/Lt (uppercase)
  - simple one-to-one lowercase mappings (codepoints where lower() differs)
"""

import sys
import unicodedata


def ranges(pred):
    out = []
    start = None
    for cp in range(0x110000):
        if pred(cp):
            if start is None:
                start = cp
        elif start is not None:
            out.append((start, cp - 1))
            start = None
    if start is not None:
        out.append((start, 0x10FFFF))
    return out


def is_alnum(cp):
    cat = unicodedata.category(chr(cp))
    return cat[0] in ("L", "N")


def is_upper(cp):
    return unicodedata.category(chr(cp)) in ("Lu", "Lt")


def lower_pairs():
    pairs = []
    for cp in range(0x110000):
        low = chr(cp).lower()
        if len(low) == 1 and ord(low) != cp:
            pairs.append((cp, ord(low)))
    return pairs


def emit_ranges(f, name, rs):
    f.write("inline constexpr CodepointRange %s[] = {\n" % name)
    for i in range(0, len(rs), 4):
        row = ", ".join("{0x%X, 0x%X}" % r for r in rs[i : i + 4])
        f.write("    %s,\n" % row)
    f.write("};\n\n")


def main():
    alnum = ranges(is_alnum)
    upper = ranges(is_upper)
    lowmap = lower_pairs()
    with open(sys.argv[1] if len(sys.argv) > 1 else "src/unicode_tables.inc", "w") as f:
        f.write("// Generated by tools/gen_unicode_tables.py (Unicode %s). Do not edit.\n\n"
                % unicodedata.unidata_version)
        emit_ranges(f, "kAlnumRanges", alnum)
        emit_ranges(f, "kUpperRanges", upper)
        f.write("inline constexpr LowercaseMapping kLowercaseMap[] = {\n")
        for i in range(0, len(lowmap), 4):
            row = ", ".join("{0x%X, 0x%X}" % p for p in lowmap[i : i + 4])
            f.write("    %s,\n" % row)
        f.write("};\n")
    print("alnum ranges: %d, upper ranges: %d, lowercase pairs: %d"
          % (len(alnum), len(upper), len(lowmap)))


if __name__ == "__main__":
    main()
