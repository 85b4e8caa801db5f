# License: MIT
# Copyright © 2024 Frequenz Energy-as-a-Service GmbH

"""Generate the API reference pages of `crystalline.invariants`."""

from frequenz.repo.config.mkdocs import api_pages

api_pages.generate_python_api_pages("src", "reference")
