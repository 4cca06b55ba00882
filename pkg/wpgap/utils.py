"""
Utility functions shared by the wpgap modules.
"""

import os
import json
import logging
import tempfile
from concurrent.futures import ProcessPoolExecutor, as_completed
from fractions import Fraction

import config
from wpgap.errors import InvalidGapList

# --- Constants ---
REPORT_SCHEMA_KEY = "wpgap_report"
REPORT_SCHEMA_VERSION = 1

# --- Logging Setup ---
log = logging.getLogger(__name__) # Initialize logger for this module


def setup_logging(level: str | None = None):
    """Configures root logging to standard error in the project format."""
    logging.basicConfig(level=getattr(logging, (level or config.LOG_LEVEL).upper(), logging.WARNING),
                        format=config.LOG_FORMAT)

# --- Concurrent Processing Utilities ---

def process_items_concurrently(items, process_func, max_workers=None):
    """
    Process a list of items concurrently using ProcessPoolExecutor.

    Args:
        items: List of items to process
        process_func: Picklable function called with one item
        max_workers: Maximum number of concurrent workers; 1 runs inline

    Returns:
        List of results in the same order as items. The first worker failure is re-raised.
    """
    items = list(items)
    if max_workers is None:
        max_workers = config.DEFAULT_JOBS
    total_count = len(items)

    if max_workers <= 1 or total_count <= 1:
        return [process_func(item) for item in items]

    results = [None] * total_count

    with ProcessPoolExecutor(max_workers=min(max_workers, total_count)) as executor:
        # Submit all tasks
        future_to_index = {executor.submit(process_func, item): idx for idx, item in enumerate(items)}

        completed_count = 0
        # Process completed tasks; slot results by submission index so order never depends on timing
        for future in as_completed(future_to_index):
            idx = future_to_index[future]
            try:
                results[idx] = future.result()
            except Exception as e:
                log.error(f"Error processing task {idx}: {e}")
                raise
            completed_count += 1
            log.info(f"Progress: {completed_count}/{total_count} completed")

    return results

# --- File System Utilities ---

def ensure_dir(directory_path):
    """Ensures that a directory exists, creating it if necessary."""
    os.makedirs(directory_path, exist_ok=True)


def write_text_atomic(text: str, file_path: str):
    """Writes text (UTF-8, LF) through a temp file in the target directory, then renames it into place."""
    directory = os.path.dirname(os.path.abspath(file_path))
    ensure_dir(directory)
    fd, tmp_path = tempfile.mkstemp(prefix=".tmp-", dir=directory)
    try:
        with os.fdopen(fd, 'w', encoding='utf-8', newline='\n') as f:
            f.write(text)
        os.replace(tmp_path, file_path)
    except Exception:
        if os.path.exists(tmp_path):
            os.remove(tmp_path)
        raise


def read_file_content(file_path):
    """Reads the content of a text file, returning None when it is missing or unreadable."""
    try:
        with open(file_path, 'r', encoding='utf-8') as f:
            return f.read()
    except FileNotFoundError:
        return None
    except Exception as e:
        log.warning(f"Error reading file {file_path}: {e}")
        return None

# --- Report Helpers ---

def rational_to_json(value: Fraction) -> dict:
    """Exact rational as a numerator/denominator pair."""
    value = Fraction(value)
    return {"numerator": value.numerator, "denominator": value.denominator}


def dump_report(body: dict) -> str:
    """Serializes a versioned JSON report document."""
    document = {REPORT_SCHEMA_KEY: REPORT_SCHEMA_VERSION}
    document.update(body)
    return json.dumps(document, indent=4)

# --- Parsing Helpers ---

def parse_int_range(range_str: str) -> tuple[int, int]:
    """Parses 'A:B' (inclusive) or a single 'A' into (start, end).
    Raises ValueError on malformed input or start > end.
    """
    range_str = str(range_str).strip()
    if ':' in range_str:
        start, end = map(int, range_str.split(':', 1))
    else:
        start = end = int(range_str)
    if start > end:
        raise ValueError(f"Empty range: '{range_str}'")
    return start, end


def parse_gap_line(line: str) -> list[int]:
    """Parses a comma-separated gap line ('' is the empty gap set)."""
    line = line.strip()
    if not line:
        return []
    try:
        return [int(part) for part in line.split(',')]
    except ValueError:
        raise InvalidGapList(f"not a comma-separated list of integers: {line!r}") from None


def format_gap_line(gaps) -> str:
    """Canonical interchange form: ascending gaps joined by commas."""
    return ",".join(str(x) for x in gaps)
