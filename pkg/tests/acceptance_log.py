"""Collects one status line per acceptance criterion for the terminal summary."""
LINES: list[str] = []


def record(number, title, ok, detail=""):
    line = f"criterion {number:>2} {'PASS' if ok else 'FAIL'}  {title}"
    if detail:
        line += f"  [{detail}]"
    LINES.append(line)
    print(line)
    return ok
