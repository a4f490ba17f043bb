import re
import json
import logging
from pathlib import Path
from typing import Any, List, Optional, Sequence

logger = logging.getLogger(__name__)

def clean_text(text: str) -> str:
    """Strip whitespace and typographic primes from a command-line literal."""
    if not text:
        return ""

    # Remove all whitespace
    cleaned = re.sub(r'\s+', '', text)
    # Accept typographic primes and the unicode combining overline as bars
    cleaned = cleaned.replace('′', "'").replace('’', "'")
    cleaned = re.sub(r'(\d)̅', r"\1'", cleaned)

    return cleaned

def parse_int_list(text: str) -> List[int]:
    """Parse '[1,-2,1]', '(1,-2,1)' or '1,-2,1' into a list of integers."""
    cleaned = clean_text(text)
    if cleaned[:1] in "[(" and cleaned[-1:] in "])":
        cleaned = cleaned[1:-1]
    if not cleaned:
        return []
    try:
        return [int(part) for part in cleaned.split(',')]
    except ValueError as e:
        raise ValueError(f"Invalid integer list {text!r}: {str(e)}")

def format_int_list(values: Sequence[int]) -> str:
    return "[" + ",".join(str(v) for v in values) + "]"

def to_json(payload: Any) -> str:
    return json.dumps(payload, indent=2, sort_keys=False)

def write_output(text: str, out: Optional[str] = None) -> None:
    """Write text to a file when a path is given, else to stdout."""
    if out is None:
        print(text)
        return
    try:
        path = Path(out)
        if path.parent and not path.parent.exists():
            path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text if text.endswith("\n") else text + "\n", encoding="utf-8")
        logger.info(f"Wrote {len(text)} characters to {path}")
    except OSError as e:
        logger.error(f"Error writing output to {out}: {str(e)}")
        raise
