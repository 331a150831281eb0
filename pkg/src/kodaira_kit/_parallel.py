import os
from concurrent.futures import ThreadPoolExecutor

THREADS_ENV = "KODAIRA_KIT_THREADS"


def worker_count(requested=None):
    """Worker cap from the argument, else ``KODAIRA_KIT_THREADS``, else the CPU count."""
    if requested is not None:
        value = requested
    else:
        raw = os.environ.get(THREADS_ENV, "").strip()
        if not raw:
            return max(1, os.cpu_count() or 1)
        try:
            value = int(raw)
        except ValueError:
            raise ValueError(f"{THREADS_ENV} must be a positive integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"worker count must be positive, got {value}")
    return value


def ordered_map(fn, items, threads=None):
    """``list(map(fn, items))`` fanned out over a thread pool; result order is input order."""
    items = list(items)
    workers = min(worker_count(threads), max(1, len(items)))
    if workers == 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def chunks(seq, parts):
    """Split ``seq`` into at most ``parts`` contiguous, nearly equal slices."""
    n = len(seq)
    parts = max(1, min(parts, n)) if n else 1
    step, extra = divmod(n, parts)
    out = []
    start = 0
    for k in range(parts):
        stop = start + step + (1 if k < extra else 0)
        out.append(seq[start:stop])
        start = stop
    return out
