import numpy as np
import pytest

from fracture import _kernels


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    # compile or load the jit cache before anything timed runs
    edges = np.array([0, 1, 0, 2, 1, 2], dtype=np.int64)
    prefix = np.empty(0, dtype=np.int64)
    witness = np.empty(3, dtype=np.int64)
    counter = np.empty(3, dtype=np.int64)
    colorings = np.zeros((2, 3), dtype=np.int64)
    out = np.empty((2, 2), dtype=np.int64)
    for impl in _kernels.IMPLS.values():
        impl["search_f"](3, 2, 2, 3, edges, prefix, 2**62, 3, witness)
        impl["search_z"](3, 2, 2, 3, edges, prefix, 2**62, witness)
        impl["verify_kler"](3, 2, 2, 3, edges, counter)
        impl["bulk_eval"](3, 2, 2, 3, edges, colorings, out)
