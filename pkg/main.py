"""
ParityKit Main Entry Point
==========================

Overview:
---------
Console entry point. All behaviour lives in paritykit.cli; this script only
forwards the command line to it so the tool can be run from a checkout:

    $ python main.py validate data/fixtures/circle.json --require wpc
"""

from paritykit.cli import main

if __name__ == "__main__":
    main()
