import doctest
import importlib
import pkgutil

import pytest

import combdata

MODULES = sorted(m.name for m in pkgutil.iter_modules(combdata.__path__)
                 if m.name != "__main__")


@pytest.mark.parametrize("name", MODULES)
def test_module_doctests(name):
    module = importlib.import_module(f"combdata.{name}")
    result = doctest.testmod(module, optionflags=doctest.ELLIPSIS)
    assert result.failed == 0
