from __future__ import annotations

import logging
import os
import sys

from dotenv import load_dotenv
from pydantic import ValidationError

from src.cli.commands import render, run_command
from src.cli.input import build_parser, load_run_config
from src.utils.display import print_error, print_validation_errors
from src.utils.output import atomic_write_text, resolve_output_path

logger = logging.getLogger(__name__)


def configure_logging(verbose: bool) -> None:
    level = logging.DEBUG if verbose else os.getenv("SDT_LOG_LEVEL", "WARNING").upper()
    logging.basicConfig(
        level=level,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
        force=True,
    )


def main(argv: list[str] | None = None) -> int:
    load_dotenv()
    args = build_parser().parse_args(argv)
    configure_logging(bool(args.verbose))

    try:
        config = load_run_config(args)
    except ValidationError as exc:
        print_validation_errors(exc)
        return 2
    except (OSError, ValueError) as exc:
        print_error(f"config: {exc}")
        return 2

    if args.show_config:
        print(config.model_dump_json(indent=2))
        return 0

    logger.info(f"Running {config.command}")
    try:
        result = run_command(config, show_progress=sys.stderr.isatty())
        to_terminal = config.out is None and sys.stdout.isatty()
        text = render(result, config.format, color=to_terminal)
        if config.out is None:
            sys.stdout.write(text)
        else:
            atomic_write_text(resolve_output_path(config.out, os.getenv("SDT_OUTPUT_DIR")), text)
    except ValidationError as exc:
        print_validation_errors(exc)
        return 2
    except (ValueError, RuntimeError, OSError) as exc:
        print_error(f"{config.command}: {exc}")
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
