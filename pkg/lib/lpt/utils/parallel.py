import logging
import multiprocessing

logger = logging.getLogger("lpt.utils")


def easy_parallelize_sequence(f, sequence):
    if sequence is None:
        return []
    return [f(element) for element in sequence]


def easy_parallelize_multiprocessing(f, sequence, workers=None):
    """Map f over sequence with a process pool; f must be picklable.

    Results keep the order of sequence.
    """
    if sequence is None:
        return []
    if workers is None:
        workers = multiprocessing.cpu_count()
    with multiprocessing.Pool(processes=workers) as pool:
        return pool.map(f, sequence)


def easy_parallelize(f, sequence, workers=1):
    sequence = list(sequence) if sequence is not None else []
    if workers is None or workers > 1:
        logger.debug("mapping %i item(s) over %r worker(s)", len(sequence), workers)
        return easy_parallelize_multiprocessing(f, sequence, workers)
    return easy_parallelize_sequence(f, sequence)
