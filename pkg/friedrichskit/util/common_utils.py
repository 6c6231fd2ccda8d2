# ##############################################################################
#                                                                              #
#     Copyright (c) 2022 - 2023.                                               #
#     Haixing Hu, Qubit Co. Ltd.                                               #
#                                                                              #
#     All rights reserved.                                                     #
#                                                                              #
# ##############################################################################
import csv
import logging
import os
from io import StringIO
from typing import Any, Dict, List, Optional

from tqdm import tqdm

from ..common.errors import SpecValidationError

THREADS_ENV_NAME = "FRIEDRICHS_KIT_THREADS"
"""
The name of the environment variable capping the internal thread pools.
"""

# the logger of the current module
logger = logging.getLogger(__name__)


def get_thread_count(default: Optional[int] = None) -> int:
    """
    Gets the number of worker threads used by the internal thread pools.

    :param default: the default number of threads, or `None` to use the number
        of processors of the machine.
    :return: the number of threads, at least 1.
    """
    fallback = default or os.cpu_count() or 1
    value = os.environ.get(THREADS_ENV_NAME)
    if value is None or value.strip() == "":
        return fallback
    try:
        count = int(value)
    except ValueError:
        logger.warning("Ignore the invalid value of %s: %r", THREADS_ENV_NAME, value)
        return fallback
    return max(1, count)


def records_to_csv(records: List[Dict[str, Any]]) -> str:
    """
    Converts a list of records, e.g. the samples of a trajectory, to CSV text.

    The header is the union of the keys of the records, in order of first
    appearance; missing values are written as empty cells.

    :param records: the records to convert.
    :return: the CSV text, with a header line.
    """
    header = list(dict.fromkeys(key for record in records for key in record))
    buffer = StringIO()
    writer = csv.DictWriter(buffer, fieldnames=header, restval="", lineterminator="\n")
    writer.writeheader()
    writer.writerows(records)
    return buffer.getvalue()


def get_iterable_or_tqdm(iterable: Any,
                         show_progress: bool,
                         min_size_to_show: int,
                         desc: Optional[str] = None) -> Any:
    """
    Wraps a sized iterable in a tqdm progress bar when progress is requested
    and the iterable is long enough.

    :param iterable: the iterable, which must support `len`.
    :param show_progress: whether progress bars are enabled.
    :param min_size_to_show: the minimum length of the iterable for a bar.
    :param desc: the label of the bar.
    :return: the progress bar, or the iterable itself.
    """
    size = len(iterable)
    if not show_progress or size < min_size_to_show:
        return iterable
    return tqdm(iterable, desc=desc, total=size, leave=False)


def complex_to_json(z: complex) -> float | Dict[str, float]:
    """
    Converts a complex number to its JSON representation.

    :param z: the complex number.
    :return: the real part if the imaginary part vanishes, otherwise an object
        with the fields "re" and "im".
    """
    z = complex(z)
    if z.imag == 0:
        return float(z.real)
    return {"re": float(z.real), "im": float(z.imag)}


def matrix_to_json(m: Any) -> List[List[float | Dict[str, float]]]:
    return [[complex_to_json(z) for z in row] for row in m]


def complex_from_json(data: Any, name: str) -> complex:
    """
    Parses the JSON representation of a complex number.

    :param data: a JSON number, or an object with the fields "re" and "im".
    :param name: the name of the value, used in error messages.
    :return: the complex number.
    :raise SpecValidationError: if the value is malformed.
    """
    if isinstance(data, bool):
        raise SpecValidationError(f"The value of {name} must be a number: {data!r}")
    if isinstance(data, (int, float)):
        return complex(data)
    if isinstance(data, dict):
        unknown = set(data) - {"re", "im"}
        if unknown:
            raise SpecValidationError(f"Unknown fields of {name}: {sorted(unknown)}")
        return complex(complex_from_json(data.get("re", 0), name).real,
                       complex_from_json(data.get("im", 0), name).real)
    raise SpecValidationError(f"The value of {name} must be a number: {data!r}")
