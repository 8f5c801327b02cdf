"""Line/header grammar shared by the .pmf and .code text formats."""

from __future__ import annotations

from .errors import FormatError


def content_lines(text: str):
    """Yield (line_number, stripped_line) skipping blanks and '#' comment lines."""
    for num, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield num, stripped


def parse_header(line: str, num: int, keys: tuple[str, ...]) -> list[int]:
    """Parse a 'a=<int> b=<int> ...' header line with the given key order."""
    fields = line.split()
    if len(fields) != len(keys):
        raise FormatError(f"expected header '{' '.join(k + '=<int>' for k in keys)}'", num)
    out = []
    for key, fld in zip(keys, fields):
        name, eq, val = fld.partition("=")
        if name != key or eq != "=" or not val:
            raise FormatError(f"expected '{key}=<int>', got '{fld}'", num)
        try:
            out.append(int(val))
        except ValueError:
            raise FormatError(f"'{key}' is not an integer: '{val}'", num) from None
    return out
