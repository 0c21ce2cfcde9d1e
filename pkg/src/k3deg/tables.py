"""Static lookup data: row names of the two classification tables and the
correspondence with Friedman's and Shah's boundary cases.
"""

HYPERELLIPTIC_ROWS = ("I.h", "II.0h", "II.1", "II.2", "II.3", "III.0h", "III.1", "III.2", "III.3")
UNIGONAL_ROWS = ("I.u", "II.0u", "II.4", "III.0u", "III.4")
ALL_ROWS = HYPERELLIPTIC_ROWS + UNIGONAL_ROWS
UNCLASSIFIED = "Unclassified"


def row_type(row: str) -> str:
    return row.split(".")[0]


def friedman_case(row: str, elliptic: set) -> str | None:
    """Friedman's Type II case; ``elliptic`` holds the labels of elliptic points."""
    if row == "II.3":
        return "(5.2.1)"
    if row == "II.4":
        return "(5.2.2)"
    if row == "II.1":
        return "(5.2.3)"
    if row == "II.2":
        return "(5.2.4)"
    if row in ("II.0h", "II.0u"):
        if "TildeE8" in elliptic:
            return "(5.2.2)"
        if "TildeE7" in elliptic:
            return "(5.2.3)"
    return None


def shah_case(row: str, elliptic: set, cusps: list) -> str | None:
    """Shah's case for the sextic (group labels II.*, III.*, IV).

    ``cusps`` lists the ``(q, r)`` of the cusp points present.
    """
    if row == "II.0h":
        if "TildeE8" in elliptic:
            return "(II.1)"
        if "TildeE7" in elliptic:
            return "(II.2)"
        return None
    simple = {"II.1": "(II.2)", "II.2": "(II.3)", "II.3": "(II.4)",
              "III.2": "(III.1)", "III.1": "(III.2)", "III.3": "(III.2)"}
    if row in simple:
        return simple[row]
    if row == "III.0h":
        if len(cusps) == 1:
            q, _ = cusps[0]
            return "(III.1)" if q == 3 else "(III.2)"
        return None
    if row in ("II.0u", "II.4", "III.0u", "III.4"):
        return "(IV)"
    return None


def shah_unigonal_case(row: str) -> str | None:
    """Shah's refinement of the unigonal group (IV)."""
    return {"II.0u": "1(ii)", "II.4": "2(i)", "III.0u": "2(ii)", "III.4": "2(ii)"}.get(row)


def annotations(row: str, elliptic: set, cusps: list) -> dict:
    out = {}
    f = friedman_case(row, elliptic)
    if f:
        out["friedman"] = f
    s = shah_case(row, elliptic, cusps)
    if s:
        out["shah"] = s
    u = shah_unigonal_case(row)
    if u:
        out["shah_unigonal"] = u
    return out
