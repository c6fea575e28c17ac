"""zkaudit: remote data-integrity auditing over BLS12-381.

Three third-party-audit protocols over a shared pairing core -- a
Merkle-tree scheme, a blinded-response scheme, and a commit-and-prove
scheme whose responses hide the witness -- plus executable privacy and
soundness games, a three-role client/server/auditor deployment, and a CLI.
"""

from .backend import BACKEND

__version__ = "0.1.0"

__all__ = ["BACKEND", "__version__"]
