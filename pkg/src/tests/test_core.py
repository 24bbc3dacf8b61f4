import sys
import threading
import time
import unittest
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

from symcomb.core import parallel_map, resolve_workers


class TestParallelMap(unittest.TestCase):
    def test_results_keep_input_order(self):
        def slow_square(x):
            time.sleep(0.01 * (5 - x))
            return x * x

        self.assertEqual(parallel_map(slow_square, range(5), max_workers=4), [0, 1, 4, 9, 16])

    def test_empty_input(self):
        self.assertEqual(parallel_map(lambda x: x, [], max_workers=3), [])

    def test_single_worker_runs_inline(self):
        threads = parallel_map(lambda _: threading.current_thread(), range(3), max_workers=1)
        self.assertTrue(all(t is threading.current_thread() for t in threads))

    def test_errors_propagate(self):
        def fail_on_two(x):
            if x == 2:
                raise ValueError("two")
            return x

        with self.assertRaises(ValueError):
            parallel_map(fail_on_two, range(4), max_workers=2)

    def test_resolve_workers(self):
        self.assertEqual(resolve_workers(0), 1)
        self.assertEqual(resolve_workers(3), 3)
        self.assertGreaterEqual(resolve_workers(None), 1)


if __name__ == "__main__":
    unittest.main()
