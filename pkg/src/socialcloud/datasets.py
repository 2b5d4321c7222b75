"""Embedded networks: Padgett's Florentine families (marriage ties)."""

from __future__ import annotations

from .graph import Network, build_network

__all__ = [
    "FLORENTINE_FAMILIES",
    "FLORENTINE_MARRIAGES",
    "FLORENTINE_REFERENCE",
    "florentine_network",
    "florentine_index",
]

FLORENTINE_FAMILIES: tuple[str, ...] = (
    "Acciaiuoli",
    "Albizzi",
    "Barbadori",
    "Bischeri",
    "Castellani",
    "Ginori",
    "Guadagni",
    "Lamberteschi",
    "Medici",
    "Pazzi",
    "Peruzzi",
    "Pucci",
    "Ridolfi",
    "Salviati",
    "Strozzi",
    "Tornabuoni",
)

# 20 marriage ties; Pucci has none.
FLORENTINE_MARRIAGES: tuple[tuple[str, str], ...] = (
    ("Acciaiuoli", "Medici"),
    ("Albizzi", "Ginori"),
    ("Albizzi", "Guadagni"),
    ("Albizzi", "Medici"),
    ("Barbadori", "Castellani"),
    ("Barbadori", "Medici"),
    ("Bischeri", "Guadagni"),
    ("Bischeri", "Peruzzi"),
    ("Bischeri", "Strozzi"),
    ("Castellani", "Peruzzi"),
    ("Castellani", "Strozzi"),
    ("Guadagni", "Lamberteschi"),
    ("Guadagni", "Tornabuoni"),
    ("Medici", "Ridolfi"),
    ("Medici", "Salviati"),
    ("Medici", "Tornabuoni"),
    ("Pazzi", "Salviati"),
    ("Peruzzi", "Strozzi"),
    ("Ridolfi", "Strozzi"),
    ("Ridolfi", "Tornabuoni"),
)

# Published two-decimal closeness and three-decimal gamma values before and
# after Medici and Strozzi link up.
FLORENTINE_REFERENCE = {
    "change": ("Medici", "Strozzi"),
    "closeness": {
        "Albizzi": (7.83, 8.00),
        "Bischeri": (7.20, 7.58),
    },
    "gamma": {
        "Albizzi": (0.701, 0.696),
        "Bischeri": (0.657, 0.662),
        "Pucci": (0.0, 0.0),
    },
}


def florentine_index(name: str) -> int:
    try:
        return FLORENTINE_FAMILIES.index(name)
    except ValueError:
        raise KeyError(f"unknown Florentine family {name!r}") from None


def florentine_network() -> Network:
    """16 families, 20 marriage links, agent ids in alphabetical order."""
    return build_network(
        len(FLORENTINE_FAMILIES),
        [(florentine_index(a), florentine_index(b)) for a, b in FLORENTINE_MARRIAGES],
    )
