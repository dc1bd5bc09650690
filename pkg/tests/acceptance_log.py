"""Collects one result line per acceptance criterion for the terminal summary."""

LINES: list[str] = []


def record(number: int, ok: bool, detail: str, seconds: float) -> None:
    line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  ({seconds:.2f}s)  {detail}"
    LINES.append(line)
    print(line)
