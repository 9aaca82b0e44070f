"""
Catalog files of transitive permutation groups.

Grammar (see docs/catalog_format.md)::

    #format cosetlattice-catalog 1
    # comment
    <degree>|<id>|<name>|<gen>;<gen>;...

Each ``<gen>`` is a comma-separated list of 0-based images.  Blank lines are ignored.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .errors import CatalogParseError, DuplicateIdError, EnumerationLimitExceeded, IntransitiveError
from .perm import PermGroup, group_from_generators

HEADER = "#format cosetlattice-catalog 1"


@dataclass(frozen=True)
class CatalogEntry:
    degree: int
    id: int
    name: str
    generators: tuple[tuple[int, ...], ...]
    line: int = 0

    @property
    def key(self):
        return (self.degree, self.id)

    def group(self, limit: int | None = None) -> PermGroup:
        return group_from_generators(self.degree, self.generators, limit)

    def to_line(self) -> str:
        gens = ";".join(",".join(map(str, g)) for g in self.generators)
        return f"{self.degree}|{self.id}|{self.name}|{gens}"


def _parse_int(text, lineno, what):
    try:
        return int(text.strip())
    except ValueError:
        raise CatalogParseError(lineno, f"{what} is not an integer: {text!r}") from None


def parse_line(line: str, lineno: int) -> CatalogEntry:
    parts = line.split("|")
    if len(parts) != 4:
        raise CatalogParseError(lineno, f"expected 4 '|'-separated fields, got {len(parts)}")
    degree = _parse_int(parts[0], lineno, "degree")
    ident = _parse_int(parts[1], lineno, "id")
    if degree < 1:
        raise CatalogParseError(lineno, "degree must be positive")
    name = parts[2].strip()
    gens = []
    text = parts[3].strip()
    for chunk in text.split(";") if text else []:
        img = tuple(_parse_int(v, lineno, "image") for v in chunk.split(","))
        if len(img) != degree:
            raise CatalogParseError(lineno, f"generator has {len(img)} images, degree is {degree}")
        if sorted(img) != list(range(degree)):
            raise CatalogParseError(lineno, f"generator is not a bijection of 0..{degree - 1}")
        gens.append(img)
    return CatalogEntry(degree, ident, name, tuple(gens), lineno)


def _orbit_of_zero(entry: CatalogEntry) -> set:
    orbit, frontier = {0}, [0]
    while frontier:
        nxt = []
        for x in frontier:
            for g in entry.generators:
                if g[x] not in orbit:
                    orbit.add(g[x])
                    nxt.append(g[x])
        frontier = nxt
    return orbit


def parse_catalog(text: str, check_transitive: bool = True) -> list[CatalogEntry]:
    lines = text.splitlines()
    if not lines or lines[0].strip() != HEADER:
        raise CatalogParseError(1, f"missing header {HEADER!r}")
    entries = []
    seen = {}
    for lineno, raw in enumerate(lines[1:], start=2):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        e = parse_line(line, lineno)
        if check_transitive:
            orbit = _orbit_of_zero(e)
            if len(orbit) != e.degree:
                raise IntransitiveError(lineno, orbit)
        if e.key in seen:
            raise DuplicateIdError(f"line {lineno}: ({e.degree}, {e.id}) already defined on line {seen[e.key]}")
        seen[e.key] = lineno
        entries.append(e)
    return entries


def load_catalog(path) -> list[CatalogEntry]:
    return parse_catalog(Path(path).read_text())


def write_catalog(entries, path, comments=()):
    out = [HEADER] + [f"# {c}" for c in comments] + [e.to_line() for e in entries]
    Path(path).write_text("\n".join(out) + "\n")


def fixture_path() -> Path:
    return Path(str(resources.files("cosetlattice") / "data" / "fixtures.cat"))


def load_fixtures() -> list[CatalogEntry]:
    return load_catalog(fixture_path())


def find_entry(entries, degree: int, ident: int) -> CatalogEntry:
    for e in entries:
        if e.key == (degree, ident):
            return e
    raise KeyError(f"no catalog entry ({degree}, {ident})")


def entry_from_group(G: PermGroup, ident: int, name: str) -> CatalogEntry:
    return CatalogEntry(G.degree, ident, name, tuple(tuple(g.images) for g in G.generators))


def safe_group(entry: CatalogEntry, limit=None):
    """The entry's group, or None when the enumeration cap is exceeded."""
    try:
        return entry.group(limit)
    except EnumerationLimitExceeded:
        return None
