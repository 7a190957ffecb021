"""
Figure worker - renders every enabled preset of config/figures.yaml

Runs once by default; TALBOT_RENDER_INTERVAL > 0 re-renders whenever the
preset file changes, polling at that many seconds.
"""

import logging
import os
import sys
import time
from pathlib import Path
from typing import List, Optional

from figures.loader import load_presets
from figures.render import render
from src.dispersive.errors import TalbotError
from src.dispersive.settings import Settings, configure_logging

logger = logging.getLogger("figure_renderer")


def render_all(config: Optional[Path] = None, out_dir: Optional[Path] = None) -> List[Path]:
    """Render enabled presets; a failing preset is logged and skipped."""
    settings = Settings.from_env()
    config = config or settings.figures_config
    out_dir = out_dir or settings.output_dir
    presets = [p for p in load_presets(config).values() if p.enabled]
    written: List[Path] = []
    failed = 0
    for preset in presets:
        try:
            written += render(preset, out_dir)
        except TalbotError as exc:
            failed += 1
            logger.error("[%s] render failed: %s", preset.name, exc)
    logger.info("rendered %d/%d presets, %d files", len(presets) - failed, len(presets), len(written))
    return written


def main() -> int:
    configure_logging()
    interval = float(os.environ.get("TALBOT_RENDER_INTERVAL", "0"))
    config = Settings.from_env().figures_config
    render_all(config)
    if interval <= 0:
        return 0

    logger.info("watching %s every %.0fs", config, interval)
    last = config.stat().st_mtime
    while True:
        time.sleep(interval)
        mtime = config.stat().st_mtime
        if mtime != last:
            last = mtime
            render_all(config)


if __name__ == "__main__":
    sys.exit(main())
