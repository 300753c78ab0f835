"""Versioned on-disk result cache for expensive enumerations (GL groups,
normal sets).  One JSON file per entry under the directory named by the
KLOW_CACHE environment variable (or configured explicitly); disabled when
no directory is configured.  File access takes an advisory lock; corrupt
entries are evicted with a warning and recomputed."""

import fcntl
import hashlib
import json
import os
import sys

VERSION = "0.1.0"

_configured_dir = None


def configure(path):
    """Set the cache directory explicitly (overrides KLOW_CACHE)."""
    global _configured_dir
    _configured_dir = path


def cache_dir():
    d = _configured_dir or os.environ.get("KLOW_CACHE")
    if not d:
        return None
    os.makedirs(d, exist_ok=True)
    return d


def _entry_path(d, key_parts):
    blob = json.dumps([VERSION, list(key_parts)],
                      separators=(",", ":"), sort_keys=True)
    return os.path.join(d, hashlib.sha256(blob.encode()).hexdigest() + ".json")


def get(key_parts):
    d = cache_dir()
    if d is None:
        return None
    path = _entry_path(d, key_parts)
    if not os.path.exists(path):
        return None
    try:
        with open(path) as f:
            fcntl.flock(f, fcntl.LOCK_SH)
            data = json.load(f)
        if data.get("version") != VERSION or \
                data.get("key") != list(key_parts):
            return None
        return data["value"]
    except (OSError, ValueError, KeyError) as e:
        print(f"warning: evicting corrupt cache entry {path}: {e}",
              file=sys.stderr)
        try:
            os.unlink(path)
        except OSError:
            pass
        return None


def put(key_parts, value):
    d = cache_dir()
    if d is None:
        return
    path = _entry_path(d, key_parts)
    tmp = path + f".tmp{os.getpid()}"
    with open(tmp, "w") as f:
        fcntl.flock(f, fcntl.LOCK_EX)
        json.dump({"version": VERSION, "key": list(key_parts),
                   "value": value}, f, separators=(",", ":"))
    os.replace(tmp, path)


def clear():
    d = cache_dir()
    removed = 0
    if d is not None:
        for name in os.listdir(d):
            if name.endswith(".json"):
                os.unlink(os.path.join(d, name))
                removed += 1
    return removed


def cached_matrices(key_parts, compute):
    """Cache a collection of matrices over a finite ring, stored as nested
    integer lists; returns tuples-of-tuples."""
    hit = get(key_parts)
    if hit is not None:
        return tuple(tuple(tuple(row) for row in m) for m in hit)
    value = compute()
    put(key_parts, [[list(row) for row in m] for m in value])
    return tuple(value)
