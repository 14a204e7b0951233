import os

# Single-threaded BLAS: the suite runs thousands of small eigendecompositions
# and thread-pool dispatch costs far more than it saves at these sizes.
# Must be set before numpy first loads.
for var in ("OPENBLAS_NUM_THREADS", "OMP_NUM_THREADS", "MKL_NUM_THREADS"):
    os.environ.setdefault(var, "1")
