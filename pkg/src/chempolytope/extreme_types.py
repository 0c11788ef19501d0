"""Extreme-point lists of the general-regime polytope types.

Groups are separated by spaces; families joined by ``=`` coincide.  Types P48 and
P60 have a second variant that applies when n mod 5 = 0 and m = (6n-5)/5.
"""

from __future__ import annotations

_ROWS = (
    ('P1', "V2 V7a V7b V7c V8c V10a V10b V10c V11a V11b V11c V12a"),
    ('P2', "V2 V7a V7b V7c V8c V8d V10a=V10b=V10c V11a=V11b=V11c V12a"),
    ('P3', "V2 V7a V7b V7c V8c V10a V10b V10c V11a V11b V11c V12a"),
    ('P4', "V2 V7a=V7b=V7c V8c V8d V10a V10b V10c V11a V11b V11c V12a"),
    ('P5', "V2 V7a V7b V7c V8c V10a=V10b=V10c V11a=V11b=V11c V12a"),
    ('P6', "V2 V7a V7b V7c V8c V8d V10a V10b V10c V11a V11b V11c V12a"),
    ('P7', "V2 V7a V7b V7c V8c V10a V10b V10c V11a V11b V11c V12a"),
    ('P8', "V2 V7a=V7b=V7c V8c V8d V10a=V10b=V10c V11a=V11b=V11c V12a"),
    ('P9', "V2 V7a V7b V7c V8c V10a V10b V10c V11a V11b V11c V12a"),
    ('P10', "V2 V7a V7b V7c V8c V8d V10a V10b V10c V11a V11b V11c V12a"),
    ('P11', "V2 V7a V7b V7c V8c V10a=V10b=V10c V11a=V11b=V11c V12a"),
    ('P12', "V2 V7a=V7b=V7c V8c V8d V10a V10b V10c V11a V11b V11c V12a"),
    ('P13', "V1 V7a=V7b=V7c V8c V10a=V10b=V10c V11a=V11b=V11c"),
    ('P14', "V1 V7a V7b V7c V8c V8d V10a V10b V10c V11a V11b V11c"),
    ('P15', "V1 V7a V7b V7c V8c V10a V10b V10c V11a V11b V11c"),
    ('P16', "V1 V7a V7b V7c V8c V8d V10a=V10b=V10c V11a=V11b=V11c"),
    ('P17', "V1 V7a=V7b=V7c V8c V10a V10b V10c V11a V11b V11c"),
    ('P18', "V1 V7a V7b V7c V8c V8d V10a V10b V10c V11a V11b V11c"),
    ('P19', "V1 V7a V7b V7c V8c V10a=V10b=V10c V11a=V11b=V11c"),
    ('P20', "V1 V7a V7b V7c V8c V8d V10a V10b V10c V11a V11b V11c"),
    ('P21', "V1 V7a=V7b=V7c V8c V10a V10b V10c V11a V11b V11c"),
    ('P22', "V1 V7a V7b V7c V8c V8d V10a=V10b=V10c V11a=V11b=V11c"),
    ('P23', "V1 V7a V7b V7c V8c V10a V10b V10c V11a V11b V11c"),
    ('P24', "V1 V7a V7b V7c V8c V8d V10a V10b V10c V11a V11b V11c"),
    ('P25', "V1 V3 V7a V7b V7c V8c V9a V9b V9c V10a V10b V10c V11a V11b V11c"),
    ('P26', "V1 V3 V7a=V7b=V7c V8c V8d V9a V9b V9c V10a V10b V10c V11a V11b V11c"),
    ('P27', "V1 V3 V7a V7b V7c V8c V9a V9b V9c V10a=V10b=V10c V11a=V11b=V11c"),
    ('P28', "V1 V3 V7a V7b V7c V8c V8d V9a V9b V9c V10a V10b V10c V11a V11b V11c"),
    ('P29', "V1 V3 V7a V7b V7c V8c V9a V9b V9c V10a V10b V10c V11a V11b V11c"),
    ('P30', "V1 V3 V7a=V7b=V7c V8c V8d V9a V9b V9c V10a=V10b=V10c V11a=V11b=V11c"),
    ('P31', "V1 V3 V7a V7b V7c V8c V9a V9b V9c V10a V10b V10c V11a V11b V11c"),
    ('P32', "V1 V3 V7a V7b V7c V8c V8d V9a V9b V9c V10a V10b V10c V11a V11b V11c"),
    ('P33', "V1 V3 V7a V7b V7c V8c V9a V9b V9c V10a=V10b=V10c V11a=V11b=V11c"),
    ('P34', "V1 V3 V7a=V7b=V7c V8c V8d V9a V9b V9c V10a V10b V10c V11a V11b V11c"),
    ('P35', "V1 V3 V7a V7b V7c V8c V9a V9b V9c V10a V10b V10c V11a V11b V11c"),
    ('P36', "V1 V3 V7a V7b V7c V8c V8d V9a V9b V9c V10a=V10b=V10c V11a=V11b=V11c"),
    ('P37', "V1 V7a=V7b=V7c V8c V10a=V10b=V10c V11a=V11b=V11c V12b V12c"),
    ('P38', "V1 V7a V7b V7c V8c V10a=V10b=V10c V11a=V11b=V11c V12b V12c"),
    ('P39', "V1 V7a V7b V7c V8c V10a=V10b=V10c V11a=V11b=V11c V12b V12c"),
    ('P40', "V1 V7a V7b V7c V8c V10a=V10b=V10c V11a=V11b=V11c V12b V12c"),
    ('P41', "V1 V7a=V7b=V7c V8c V10a V10b V10c V11a V11b V11c V12b V12c"),
    ('P42', "V1 V7a V7b V7c V8c V10a V10b V10c V11a V11b V11c V12b V12c"),
    ('P43', "V1 V7a V7b V7c V8c V10a V10b V10c V11a V11b V11c V12b V12c"),
    ('P44', "V1 V7a V7b V7c V8c V10a V10b V10c V11a V11b V11c V12b V12c"),
    ('P45', "V1 V7a=V7b=V7c V8c V10a V10b V10c V11a V11b V11c V12b V12c"),
    ('P46', "V1 V7a V7b V7c V8c V10a V10b V10c V11a V11b V11c V12b V12c"),
    ('P47', "V1 V7a V7b V7c V8c V10a V10b V10c V11a V11b V11c V12b V12c"),
    ('P48', "V1 V7b V7c V8c V10a V10c V11a V11b V11c V12b V12c"),
    ('P48', "V1 V7a V7b V7c V8c V10a V10b V10c V11a V11b V11c V12b V12c"),
    ('P49', "V1 V7a=V7b=V7c V8c V8d V10a=V10b=V10c V11a=V11b=V11c V12b V12c"),
    ('P50', "V1 V7a V7b V7c V8c V8d V10a=V10b=V10c V11a=V11b=V11c V12b V12c"),
    ('P51', "V1 V7a V7b V7c V8c V8d V10a=V10b=V10c V11a=V11b=V11c V12b V12c"),
    ('P52', "V1 V7a V7b V7c V8c V8d V10a=V10b=V10c V11a=V11b=V11c V12b V12c"),
    ('P53', "V1 V7a=V7b=V7c V8c V8d V10a V10b V10c V11a V11b V11c V12b V12c"),
    ('P54', "V1 V7a V7b V7c V8c V8d V10a V10b V10c V11a V11b V11c V12b V12c"),
    ('P55', "V1 V7a V7b V7c V8c V8d V10a V10b V10c V11a V11b V11c V12b V12c"),
    ('P56', "V1 V7a V7b V7c V8c V8d V10a V10b V10c V11a V11b V11c V12b V12c"),
    ('P57', "V1 V7a=V7b=V7c V8c V8d V10a V10b V10c V11a V11b V11c V12b V12c"),
    ('P58', "V1 V7a V7b V7c V8c V8d V10a V10b V10c V11a V11b V11c V12b V12c"),
    ('P59', "V1 V7a V7b V7c V8c V8d V10a V10b V10c V11a V11b V11c V12b V12c"),
    ('P60', "V1 V7b V7c V8c V8d V10a V10c V11a V11b V11c V12b V12c"),
    ('P60', "V1 V7a V7b V7c V8c V8d V10a V10b V10c V11a V11b V11c V12b V12c"),
    ('P61', "V1=V7c V7a=V10a=V10b=V10c V7b V8c V11a=V11b=V11c V12b V12c"),
    ('P62', "V1=V7c=V10a V7b V8c V10c V11a V11b V11c V12b V12c"),
    ('P63', "V1=V7c=V10a V7b V8c V10c V11a V11b V11c V12b V12c"),
    ('P64', "V1=V7c V7a=V10a=V10b=V10c V7b V8c V8d V11a=V11b=V11c V12b V12c"),
    ('P65', "V1=V7c=V10a V7b V8c V8d V10c V11a V11b V11c V12b V12c"),
    ('P66', "V1=V7c=V10a V7b V8c V8d V10c V11a V11b V11c V12b V12c"),
    ('P67', "V6 V8c V11a=V11b=V11c V12b V12c"),
    ('P68', "V6 V8c V11a V11b V11c V12b V12c"),
    ('P69', "V6 V8c V11a V11b V11c V12b V12c"),
    ('P70', "V6 V8c V8d V11a=V11b=V11c V12b V12c"),
    ('P71', "V6 V8c V8d V11a V11b V11c V12b V12c"),
    ('P72', "V6 V8c V8d V11a V11b V11c V12b V12c"),
    ('P73', "V6 V8c V8d=V11a=V11b=V11c=V12c V12b"),
    ('P74', "V6 V11c=V12c V8c=V11b V11a V12b"),
    ('P75', "V6 V11c=V12c V8c V8d=V11b V11a V12b"),
)


def _parse(text: str) -> tuple[tuple[str, ...], ...]:
    return tuple(tuple(g.split("=")) for g in text.split())


EXTREME_POINT_TYPES: tuple[tuple[str, tuple[tuple[str, ...], ...]], ...] = tuple(
    (name, _parse(text)) for name, text in _ROWS)


def match_types(groups: dict[tuple, list[str]]):
    """Types whose groups map one-to-one onto the computed points.

    ``groups`` maps each point to the candidate families located there.  A type
    matches when each of its groups falls inside exactly one point's families and
    no two groups share a point.  Returns the matching names and, for the first
    match, the relabelled points; ``(names, None)`` when nothing matches.
    """
    keys = list(groups)
    ours = [set(groups[k]) for k in keys]
    names: list[str] = []
    labels = None
    for name, rows in EXTREME_POINT_TYPES:
        if len(rows) != len(ours) or name in names:
            continue
        assign: dict[int, tuple[str, ...]] = {}
        for g in rows:
            hits = [i for i, fams in enumerate(ours) if set(g) <= fams]
            if len(hits) != 1 or hits[0] in assign:
                break
            assign[hits[0]] = g
        else:
            names.append(name)
            if labels is None:
                labels = {keys[i]: g for i, g in assign.items()}
    return names, labels
