"""Argument types shared by the subcommands."""

import argparse
from pathlib import Path
from typing import List, Tuple


def existing_file(value: str) -> Path:
    path = Path(value)
    if not path.is_file():
        raise argparse.ArgumentTypeError(f"no such file: {value}")
    return path


def positive_float(value: str) -> float:
    try:
        number = float(value)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"not a number: {value}") from e
    if number <= 0:
        raise argparse.ArgumentTypeError(f"must be > 0: {value}")
    return number


def grid_cell(value: str) -> Tuple[int, int, int]:
    try:
        h, p1, kh = (int(part) for part in value.split(","))
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected h,p1,kh: {value}") from e
    return h, p1, kh


def model_list(value: str) -> List[str]:
    return [part.strip() for part in value.split(",") if part.strip()]
