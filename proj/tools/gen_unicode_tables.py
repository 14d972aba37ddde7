#!/usr/bin/env python3
"""Regenerates src/unicode_tables.cpp.

Emits two tables derived from the Python `re` module's Unicode semantics:

  * inclusive codepoint ranges matching the word-character class `\\w`
    (letters, digits, underscore and everything else the engine counts
    as a word character), and
  * a simple 1:1 lowercase map (codepoints whose `str.lower()` result is
    a single different codepoint; U+0130 maps to plain 'i').

Run from the repository root:  python3 tools/gen_unicode_tables.py
"""

import re
import sys
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "src" / "unicode_tables.cpp"

WORD = re.compile(r"\w")


def word_ranges():
    ranges = []
    start = None
    for cp in range(0x110000):
        if 0xD800 <= cp <= 0xDFFF:
            is_word = False
        else:
            is_word = WORD.match(chr(cp)) is not None
        if is_word and start is None:
            start = cp
        elif not is_word and start is not None:
            ranges.append((start, cp - 1))
            start = None
    if start is not None:
        ranges.append((start, 0x10FFFF))
    return ranges


def lower_pairs():
    pairs = []
    for cp in range(0x110000):
        if 0xD800 <= cp <= 0xDFFF:
            continue
        low = chr(cp).lower()
        if len(low) == 1 and ord(low) != cp:
            pairs.append((cp, ord(low)))
        elif len(low) > 1:
            # U+0130 LATIN CAPITAL LETTER I WITH DOT ABOVE is the only
            # unconditional multi-codepoint lowering; fold it to 'i'.
            if cp == 0x0130:
                pairs.append((cp, ord("i")))
            else:
                print(f"unexpected multi-char lowering: U+{cp:04X}", file=sys.stderr)
                sys.exit(1)
    return pairs


def main():
    ranges = word_ranges()
    pairs = lower_pairs()

    lines = []
    lines.append("// Generated by tools/gen_unicode_tables.py -- do not edit by hand.")
    lines.append("")
    lines.append('#include "unicode_tables.hpp"')
    lines.append("")
    lines.append("namespace sparselex::detail {")
    lines.append("")
    lines.append(f"const CodepointRange kWordRanges[{len(ranges)}] = {{")
    for i in range(0, len(ranges), 4):
        chunk = ", ".join(f"{{0x{a:X}, 0x{b:X}}}" for a, b in ranges[i : i + 4])
        lines.append(f"    {chunk},")
    lines.append("};")
    lines.append(f"const std::size_t kWordRangeCount = {len(ranges)};")
    lines.append("")
    lines.append(f"const LowerPair kLowerPairs[{len(pairs)}] = {{")
    for i in range(0, len(pairs), 4):
        chunk = ", ".join(f"{{0x{a:X}, 0x{b:X}}}" for a, b in pairs[i : i + 4])
        lines.append(f"    {chunk},")
    lines.append("};")
    lines.append(f"const std::size_t kLowerPairCount = {len(pairs)};")
    lines.append("")
    lines.append("}  // namespace sparselex::detail")
    lines.append("")

    OUT.write_text("\n".join(lines), encoding="utf-8")
    print(f"wrote {OUT}: {len(ranges)} word ranges, {len(pairs)} lowercase pairs")


if __name__ == "__main__":
    main()
