"""Exact c-differential spectra and bentness analysis over small finite fields."""

try:
    from ._core import *  # noqa: F401,F403
    from ._core import __version__  # noqa: F401
except ImportError:  # dev tree: the extension lives next to the package
    from _core import *  # noqa: F401,F403
    from _core import __version__  # noqa: F401

__all__ = [
    "Field",
    "Fn",
    "Embedding",
    "embedding",
    "walsh1",
    "walsh2",
    "xcorr1",
    "xcorr2",
    "xcorr2_residue",
    "verify_lemma1",
    "verify_lemma2",
    "ddt",
    "uniformity",
    "is_pcn",
    "is_apcn",
    "perfect1",
    "bent1",
    "bent1_balance",
    "perfect2",
    "perfect2_profile",
    "bent2",
    "support_profile2",
    "zero_c_characterization",
    "do_decompose",
    "do_companion",
    "do_theorem_check",
    "analyze",
    "run_suite",
]
