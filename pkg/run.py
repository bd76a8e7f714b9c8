#!/usr/bin/env python3
"""
Simple launcher script for fps-transcend
"""

import sys
from pathlib import Path

# Add src directory to Python path
src_path = Path(__file__).parent / "src"
sys.path.insert(0, str(src_path))


def main() -> int:
    """Main launcher function"""
    try:
        from main import main as fps_main
    except ImportError as e:
        print(f"Import error: {e}", file=sys.stderr)
        print("Please make sure all dependencies are installed:", file=sys.stderr)
        print("pip install -r requirements.txt", file=sys.stderr)
        return 3
    return fps_main(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
