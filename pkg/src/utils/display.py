import sys

import pandas as pd
from colorama import Fore, Style
from pydantic import ValidationError
from tabulate import tabulate


def format_table(frame: pd.DataFrame, *, color: bool = False) -> str:
    """Grid table of a result frame; headers highlighted when ``color``."""
    headers = list(frame.columns)
    if color:
        headers = [f"{Fore.WHITE}{Style.BRIGHT}{h}{Style.RESET_ALL}" for h in headers]
    rows = frame.astype(object).where(frame.notna(), "").values.tolist()
    return tabulate(rows, headers=headers, tablefmt="grid", floatfmt=".6g") + "\n"


def print_error(message: str) -> None:
    print(f"{Fore.RED}error: {message}{Style.RESET_ALL}", file=sys.stderr)


def print_validation_errors(error: ValidationError) -> None:
    """One red line per offending field."""
    for item in error.errors():
        field = ".".join(str(part) for part in item["loc"]) or "config"
        message = item["msg"].removeprefix("Value error, ")
        print(f"{Fore.RED}{field}: {message}{Style.RESET_ALL}", file=sys.stderr)
