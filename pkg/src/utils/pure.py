from typing import List, Literal, Optional, Sequence


def format_vector(values: Sequence[float]) -> str:
    """Render angles as `[v0, v1, ...]` using repr-exact floats."""
    return "[" + ", ".join(repr(float(v)) for v in values) + "]"


def generate_markdown_table(
    headers: Optional[Sequence[object]],
    rows: Sequence[Sequence[object]],
    aligns: Optional[List[Literal["l", "c", "r"]]] = None,
) -> str:
    """
    Render rows as a Markdown table.

    Args:
        headers: column headers, or None to promote the first row.
        rows: table body; cells are converted with str().
        aligns: per-column 'l', 'c' or 'r'. Defaults to all 'r'.

    Returns:
        str: the table, or "" when there is nothing to show.
    """
    if not rows:
        return ""

    if headers is None:
        headers, rows = rows[0], rows[1:]

    head = [str(h) for h in headers]
    body = [[str(cell) for cell in row] for row in rows]

    if aligns is None:
        aligns = ["r"] * len(head)
    elif len(aligns) != len(head):
        raise ValueError("Length of aligns must match number of headers.")

    rule = {"l": ":---", "c": ":---:", "r": "---:"}
    lines = [
        "| " + " | ".join(head) + " |",
        "| " + " | ".join(rule[a] for a in aligns) + " |",
    ]
    lines.extend("| " + " | ".join(row) + " |" for row in body)
    return "\n".join(lines)
