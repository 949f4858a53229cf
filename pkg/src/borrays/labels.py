"""Labels for the four Borromean blocks A, Ab (mirror), As (inverted), Abs.

``bar`` is reflection across the projection plane, ``star`` is inversion
across the intermediate sphere.  Both are involutions and they commute, so
the four labels form a Klein four-group under {bar, star}.
"""

from dataclasses import dataclass

__all__ = ["BlockLabel", "A", "AB", "AS", "ABS", "ALL_LABELS", "parse_label"]


@dataclass(frozen=True, order=True)
class BlockLabel:
    barred: bool = False
    starred: bool = False

    @property
    def name(self) -> str:
        return "A" + ("b" if self.barred else "") + ("s" if self.starred else "")

    def bar(self) -> "BlockLabel":
        return BlockLabel(not self.barred, self.starred)

    def star(self) -> "BlockLabel":
        return BlockLabel(self.barred, not self.starred)

    def barstar(self) -> "BlockLabel":
        return BlockLabel(not self.barred, not self.starred)

    def __repr__(self):
        return self.name


A = BlockLabel(False, False)
AB = BlockLabel(True, False)
AS = BlockLabel(False, True)
ABS = BlockLabel(True, True)

ALL_LABELS = (A, AB, AS, ABS)

_BY_NAME = {lab.name: lab for lab in ALL_LABELS}


def parse_label(name: str) -> BlockLabel:
    try:
        return _BY_NAME[name]
    except KeyError:
        raise ValueError(
            f"unknown block label {name!r}; valid labels are: "
            + ", ".join(sorted(_BY_NAME))
        ) from None
