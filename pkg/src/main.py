"""
Main entry point for fps-transcend
"""

import sys
from pathlib import Path
from typing import Optional, Sequence

# Add the src directory to the Python path
sys.path.insert(0, str(Path(__file__).parent))

from core.command_processor import CommandProcessor
from utils.config import config
from utils.helpers import dump_report


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run one command: JSON report on stdout, summary on stderr, status as exit code"""
    if argv is None:
        argv = sys.argv[1:]

    processor = CommandProcessor()
    result = processor.run(argv)

    print(dump_report(result.report, config.get('report.indent', 2)))
    print(processor.summarize(result), file=sys.stderr)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
