#!/usr/bin/env python3
"""Regenerates src/appendix_data.cpp from the coefficient listing in paper.md.

usage: gen_appendix.py paper.md src/appendix_data.cpp
"""
import re
import sys


def coefficients(text):
    start = text.index("c_0:=")
    end = text.index("\\end{array}", text.index("c_8:="))
    body = text[start:end]
    keep = []
    for line in body.splitlines():
        line = line.strip()
        if not line or line.startswith(("\\vspace", "\\end", "$$")):
            continue
        line = re.sub(r"\\hspace\{[^}]*\}", "", line)
        line = line.replace("\\begin{array}{l}", "").replace("\\\\", "")
        keep.append(line)
    joined = "".join(keep)
    parts = re.split(r"c_(\d):=", joined)[1:]
    out = {}
    for index, expr in zip(parts[0::2], parts[1::2]):
        expr = expr.strip().rstrip(",.")
        expr = re.sub(r"(?<=[0-9a-d])(?=[a-d])", "*", expr)
        out[int(index)] = expr
    if sorted(out) != list(range(9)):
        raise SystemExit("expected c_0 .. c_8, found %s" % sorted(out))
    return [out[k] for k in range(9)]


def main():
    source, target = sys.argv[1], sys.argv[2]
    with open(source, encoding="utf-8") as f:
        coeffs = coefficients(f.read())
    lines = [
        "// Generated by tools/gen_appendix.py; do not edit.",
        '#include "appendix_data.hpp"',
        "",
        "namespace germlab::detail {",
        "",
        "const char* const appendix_coefficients[9] = {",
    ]
    for expr in coeffs:
        chunks = [expr[i:i + 90] for i in range(0, len(expr), 90)]
        lines.append("    " + "\n    ".join('"%s"' % c for c in chunks) + ",")
    lines += ["};", "", "}  // namespace germlab::detail", ""]
    with open(target, "w", encoding="utf-8") as f:
        f.write("\n".join(lines))


if __name__ == "__main__":
    main()
