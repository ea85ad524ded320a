from typing import Iterator

import pytest
import pytest_asyncio
from loguru import logger
from typer.testing import CliRunner

from src.apps.bitmaps.bits import Bitmap
from src.apps.bitmaps.dto import Alphabet, BlockLanguage
from src.apps.operations.services import OperationService
from src.apps.synthesis.services import ComplexityService
from src.apps.witnesses.families import witness_E

EXAMPLE_BITMAP = '1011011100011110'
E5_BITMAP = '10000100110000101010011011100001'


def pytest_collection_modifyitems(items):
    pytest_asyncio_tests = (item for item in items if pytest_asyncio.is_async_test(item))
    session_scope_marker = pytest.mark.asyncio(loop_scope='session')
    for async_test in pytest_asyncio_tests:
        async_test.add_marker(session_scope_marker, append=False)


@pytest.fixture(scope='session')
def binary() -> Alphabet:
    return Alphabet(k=2)


@pytest.fixture(scope='session')
def example_language(binary: Alphabet) -> BlockLanguage:
    return BlockLanguage(alphabet=binary, ell=4, bits=Bitmap.from_string(EXAMPLE_BITMAP))


@pytest.fixture(scope='session')
def e5() -> BlockLanguage:
    return witness_E(5)


@pytest.fixture
def complexity_service() -> ComplexityService:
    return ComplexityService()


@pytest.fixture
def operation_service() -> OperationService:
    return OperationService(strict_nsc=True)


@pytest.fixture
def lenient_operation_service() -> OperationService:
    return OperationService(strict_nsc=False)


@pytest.fixture
def runner() -> Iterator[CliRunner]:
    yield CliRunner()
    # the CLI callback binds a sink to the captured stderr of the run
    logger.remove()
