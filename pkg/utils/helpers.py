"""
Helper utilities for rankforge
"""

from pathlib import Path
from typing import List

from core.errors import FormatError


def format_duration(seconds: float) -> str:
    """
    Format duration in seconds to human-readable format

    Args:
        seconds: Duration in seconds

    Returns:
        str: Formatted duration (e.g., "2m 5.3s", "41.0ms")
    """
    if seconds < 1:
        return f"{seconds * 1000:.1f}ms"
    minutes = int(seconds // 60)
    secs = seconds - 60 * minutes
    if minutes:
        return f"{minutes}m {secs:.1f}s"
    return f"{secs:.1f}s"


def parse_int_list(text: str) -> List[int]:
    """
    Parse "0,1,2" (spaces allowed) into [0, 1, 2]

    Raises:
        FormatError: A token is not an integer
    """
    tokens = [tok for tok in text.replace(" ", "").split(",") if tok]
    try:
        return [int(tok) for tok in tokens]
    except ValueError as e:
        raise FormatError(f"expected comma-separated integers, got {text!r}") from e


def parse_digit_string(digits: str) -> List[int]:
    """'000101' -> [0, 0, 0, 1, 0, 1]"""
    digits = digits.strip()
    if not digits.isdigit():
        raise FormatError(f"expected a digit string, got {digits!r}")
    return [int(ch) for ch in digits]


def read_text(filepath: str) -> str:
    """
    Read a UTF-8 text file

    Raises:
        OSError: The file cannot be read
    """
    with open(filepath, 'r', encoding='utf-8') as f:
        return f.read()


def write_text(filepath: str, content: str) -> Path:
    """Write content to filepath, creating parent folders as needed"""
    path = Path(filepath)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        f.write(content)
    return path
