# License: MIT
# Copyright © 2024 Frequenz Energy-as-a-Service GmbH

"""Nox sessions for formatting, linting, type checks and tests."""

from frequenz.repo.config import RepositoryType, nox

nox.configure(RepositoryType.LIB)
