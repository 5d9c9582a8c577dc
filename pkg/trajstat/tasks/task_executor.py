import asyncio
import logging, threading
from collections.abc import Callable, Iterable
from concurrent.futures import ThreadPoolExecutor
from typing import Any

from trajstat.tasks.task_context import TaskContext


_logger = logging.getLogger(__name__)


class TaskExecutor:
    """Runs data-parallel sweeps on a worker pool.

    An event loop lives in a background thread and fans the items of a
    sweep out to a thread pool. Results always come back in input
    order, so the output of a sweep does not depend on the number of
    workers.
    """

    def __init__(self, workers: int = 1) -> None:
        self._workers = max(1, int(workers))
        self._pool = ThreadPoolExecutor(max_workers=self._workers)
        self._task: asyncio.Future | None = None
        self._event_loop = asyncio.new_event_loop()
        self._thread = threading.Thread(target=self._run_loop, daemon=True)
        self._thread.start()

    def __enter__(self) -> "TaskExecutor":
        return self

    def __exit__(self, *exc_info) -> None:
        self.shutdown()

    @property
    def workers(self) -> int:
        return self._workers

    def is_running(self) -> bool:
        """Check if a sweep is currently running."""

        return (
            self._task is not None and
            not self._task.done()
        )

    def map(self, function: Callable[[Any], Any], items: Iterable) -> list:
        """Apply ``function`` to every item and wait for all results.

        Raises:
            Exception: The first error raised by any item, in input order.
        """

        contexts = [TaskContext(i, item) for i, item in enumerate(items)]
        self._task = asyncio.run_coroutine_threadsafe(
            self._process_tasks(function, contexts), self._event_loop
        )

        self._task.result()
        _logger.debug("Sweep of %d items on %d workers", len(contexts), self._workers)

        for ctx in contexts:
            if ctx.error is not None:
                raise ctx.error

        return [ctx.result for ctx in contexts]

    def cancel_task(self) -> None:
        """Cancel the currently running sweep if one exists."""

        if self._task and not self._task.done():
            self._task.cancel()

    def shutdown(self) -> None:
        """Shutdown the executor."""

        self.cancel_task()
        self._event_loop.call_soon_threadsafe(self._event_loop.stop)
        self._thread.join()
        self._pool.shutdown(wait=True)

    def _run_loop(self) -> None:
        """Run the event loop in a separate thread."""

        try:
            asyncio.set_event_loop(self._event_loop)
            self._event_loop.run_forever()
        except Exception as e:
            _logger.error("Event loop error: %s", e)
        finally:
            self._event_loop.close()

    async def _process_tasks(
        self, function: Callable[[Any], Any], contexts: list[TaskContext]
    ) -> None:
        """Process every task of a sweep concurrently."""

        await asyncio.gather(*(
            self._process_task(function, ctx) for ctx in contexts
        ))

    async def _process_task(
        self, function: Callable[[Any], Any], task: TaskContext
    ) -> None:
        """Process a task on the worker pool."""

        try:
            loop = asyncio.get_running_loop()
            task.result = await loop.run_in_executor(
                self._pool, function, task.item
            )
        except asyncio.CancelledError:
            task.cancelled = True
        except Exception as e:
            task.error = e
