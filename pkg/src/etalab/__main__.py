"""Allow `python -m etalab ...` as an alias for the etalab script."""

from .cli import main

main()
