# License: MIT
# Copyright © 2024 Frequenz Energy-as-a-Service GmbH

"""Run the command line interface with `python -m crystalline.invariants`."""

from ._cli import cli

if __name__ == "__main__":
    cli(prog_name="crystalline-invariants")
