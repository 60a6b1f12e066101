from typing import Callable, Dict, List, Optional

from rich.console import Console
from rich.live import Live
from rich.style import Style
from rich.table import Table
from rich.text import Text

console = Console(stderr=True)


class PipelineProgress:
    """Live per-target status of a multi-target run, drawn on stderr."""

    def __init__(self):
        self.target_status: Dict[str, Dict[str, str]] = {}
        self.order: List[str] = []
        self.table = Table(show_header=False, box=None, padding=(0, 1))
        self.live = Live(self.table, console=console, refresh_per_second=4)
        self.started = False
        self.update_handlers: List[Callable[[str, str, Optional[str]], None]] = []

    def register_handler(self, handler: Callable[[str, str, Optional[str]], None]):
        self.update_handlers.append(handler)
        return handler

    def unregister_handler(self, handler: Callable[[str, str, Optional[str]], None]):
        if handler in self.update_handlers:
            self.update_handlers.remove(handler)

    def start(self):
        if not self.started:
            self.live.start()
            self.started = True

    def stop(self):
        if self.started:
            self.live.stop()
            self.started = False

    def reset(self):
        self.target_status.clear()
        self.order.clear()

    def update_status(self, target: str, status: str, detail: Optional[str] = None):
        if target not in self.target_status:
            self.order.append(target)
            self.target_status[target] = {"status": "", "detail": ""}
        self.target_status[target]["status"] = status
        if detail is not None:
            self.target_status[target]["detail"] = detail

        for handler in self.update_handlers:
            handler(target, status, detail)

        if self.started:
            self._refresh_display()

    def get_all_status(self) -> Dict[str, Dict[str, str]]:
        return {target: dict(self.target_status[target]) for target in self.order}

    def _refresh_display(self):
        self.table.columns.clear()
        self.table.add_column(width=80)

        for target in self.order:
            info = self.target_status[target]
            status = info["status"]
            if status == "done":
                style, symbol = Style(color="green", bold=True), "✓"
            elif status == "error":
                style, symbol = Style(color="red", bold=True), "✗"
            else:
                style, symbol = Style(color="yellow"), "⋯"

            line = Text()
            line.append(f"{symbol} ", style=style)
            line.append(f"target {target:<6}", style=Style(bold=True))
            line.append(status, style=style)
            if info["detail"]:
                line.append(f" [{info['detail']}]", style=Style(color="cyan"))
            self.table.add_row(line)


progress = PipelineProgress()
