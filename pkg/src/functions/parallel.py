"""
Parallel execution utilities for running pure functions over many argument sets.

`run_func_in_parallel` splits the argument list into batches
(`more_itertools.chunked`) and maps each batch over a
`concurrent.futures` pool. Results always come back in input order, so callers
that merge them get the same answer whatever the worker count.

Comparison of executors:
- "thread": cheap to start, shares memory, limited by the GIL for pure Python work
- "process": real parallelism for CPU-bound enumeration; `func` and its
  arguments must be picklable (module-level functions only)
"""

from collections.abc import Callable
import concurrent.futures
import time
from typing import Any, Literal

from beartype import beartype
import more_itertools


def _call_timed(func: Callable, kwargs: dict[str, Any]) -> tuple[Any, float]:
    """Call a function and track the time it takes."""
    start = time.time()
    result = func(**kwargs)
    return result, time.time() - start


@beartype
def run_func_in_parallel(
    *,
    func: Callable,
    args: list[dict[str, Any]],
    batch_size: int = 64,
    max_workers: int = 1,
    executor: Literal["thread", "process"] = "process",
) -> dict[str, Any]:
    """
    Run a function over a list of keyword-argument dicts, in batches.

    With `max_workers == 1` everything runs inline in the calling thread,
    which is what the test-suite and the default configuration use.

    Args:
        func: The function to call. Must accept **kwargs.
        args: List of argument dictionaries. Each dict will be passed as **kwargs to func.
        batch_size: Number of calls submitted to the pool at a time.
        max_workers: Pool size. 1 disables the pool.
        executor: "process" or "thread".

    Returns:
        Dict containing:
            - results: List of results from function calls, in input order
            - elapsed_time: Time in seconds for entire process
            - durations: List of time spent on each call

    Raises:
        Whatever `func` raises; the first failure aborts the run.
    """
    if not args:
        return {
            "results": [],
            "elapsed_time": 0,
            "durations": [],
        }

    start_time = time.time()
    results: list[Any] = []
    durations: list[float] = []

    if max_workers <= 1:
        for kwargs in args:
            result, duration = _call_timed(func, kwargs)
            results.append(result)
            durations.append(duration)
    else:
        pool_class = (
            concurrent.futures.ProcessPoolExecutor
            if executor == "process"
            else concurrent.futures.ThreadPoolExecutor
        )
        with pool_class(max_workers=max_workers) as pool:
            for batch in more_itertools.chunked(args, batch_size):
                batch_results = list(
                    pool.map(_call_timed, [func] * len(batch), batch)
                )
                for result, duration in batch_results:
                    results.append(result)
                    durations.append(duration)

    return {
        "results": results,
        "elapsed_time": time.time() - start_time,
        "durations": durations,
    }
