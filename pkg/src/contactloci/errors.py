"""Exceptions and enumeration budgets."""

import os

BUDGET_ENV = "CONTACTLOCI_BUDGET"

DEFAULT_EVALUATIONS = 10**8
DEFAULT_MAX_DESCRIPTORS = 10**6
DEFAULT_MAX_HYPERPLANES = 20
DEFAULT_MAX_M = 64


class ContactLociError(Exception):
    """Base class for library errors."""


class ArrangementError(ContactLociError, ValueError):
    """Malformed arrangement input such as a zero form or a duplicate hyperplane."""


class HyperplaneContainsFlat(ContactLociError, ValueError):
    pass


class InvalidDescriptor(ContactLociError, ValueError):
    """Exponent vector outside T(m)."""


class BudgetExceeded(ContactLociError, RuntimeError):
    pass


class BadReduction(ContactLociError, ValueError):
    """Prime at which the arrangement does not reduce faithfully."""


def _env_budget():
    raw = os.environ.get(BUDGET_ENV)
    if raw is None or raw.strip() == "":
        return None
    try:
        return int(raw)
    except ValueError:
        raise ContactLociError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None


def evaluation_budget(explicit=None) -> int:
    if explicit is not None:
        return explicit
    env = _env_budget()
    return DEFAULT_EVALUATIONS if env is None else env


def descriptor_budget(explicit=None) -> int:
    if explicit is not None:
        return explicit
    env = _env_budget()
    return DEFAULT_MAX_DESCRIPTORS if env is None else env
