"""SNAP dataset acquisition with local caching and checksum pinning.

Files are downloaded once into a cache directory, gunzipped if needed, and
verified against a sha256 recorded in a sidecar file. The registry URLs are
unversioned upstream, so the checksum is pinned at first verified fetch
(trust on first use) and any later mismatch quarantines the cache entry
instead of silently using it.
"""

from __future__ import annotations

import gzip
import hashlib
import os
import shutil
import urllib.request
from dataclasses import dataclass
from pathlib import Path


class DatasetError(RuntimeError):
    pass


@dataclass(frozen=True)
class DatasetRef:
    name: str
    url: str
    sha256: str | None = None  # verified against the sidecar when present


REGISTRY: dict[str, DatasetRef] = {
    ref.name: ref
    for ref in (
        DatasetRef("citations", "https://snap.stanford.edu/data/cit-Patents.txt.gz"),
        DatasetRef("enron", "https://snap.stanford.edu/data/email-Enron.txt.gz"),
        DatasetRef("wiki-vote", "https://snap.stanford.edu/data/wiki-Vote.txt.gz"),
        DatasetRef("slashdot", "https://snap.stanford.edu/data/soc-Slashdot0902.txt.gz"),
        DatasetRef("euemail", "https://snap.stanford.edu/data/email-EuAll.txt.gz"),
        DatasetRef("epinions", "https://snap.stanford.edu/data/soc-Epinions1.txt.gz"),
    )
}


def default_cache_dir() -> Path:
    env = os.environ.get("LVM_CACHE_DIR")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "lvm-datasets"


def _sha256(path: Path) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as f:
        for chunk in iter(lambda: f.read(1 << 20), b""):
            h.update(chunk)
    return h.hexdigest()


def _download(url: str, dest: Path, timeout: float) -> None:
    tmp = dest.with_suffix(dest.suffix + ".part")
    with urllib.request.urlopen(url, timeout=timeout) as resp, open(tmp, "wb") as out:
        shutil.copyfileobj(resp, out)
    # gunzip if the payload is gzip, whatever the URL said
    with open(tmp, "rb") as f:
        magic = f.read(2)
    if magic == b"\x1f\x8b":
        plain = dest.with_suffix(dest.suffix + ".plain")
        with gzip.open(tmp, "rb") as zin, open(plain, "wb") as out:
            shutil.copyfileobj(zin, out)
        tmp.unlink()
        plain.replace(dest)
    else:
        tmp.replace(dest)


def fetch_dataset(ref: DatasetRef | str, cache_dir: Path | None = None,
                  timeout: float = 60.0) -> Path:
    """Return the local edge-list path for the dataset, downloading if needed.

    Checksum policy: a `<name>.sha256` sidecar pins the expected digest. On a
    warm cache the file is verified against the sidecar (or the registry pin)
    and returned with no network I/O; a mismatch moves the file aside as
    `<name>.quarantine` and raises. First fetch writes the sidecar.
    """
    if isinstance(ref, str):
        try:
            ref = REGISTRY[ref]
        except KeyError:
            raise DatasetError(
                f"unknown dataset {ref!r}; known: {', '.join(sorted(REGISTRY))}") from None
    cache_dir = Path(cache_dir) if cache_dir is not None else default_cache_dir()
    cache_dir.mkdir(parents=True, exist_ok=True)
    dest = cache_dir / f"{ref.name}.txt"
    sidecar = cache_dir / f"{ref.name}.sha256"

    if not dest.exists():
        try:
            _download(ref.url, dest, timeout)
        except Exception as exc:
            raise DatasetError(f"could not fetch {ref.name} from {ref.url}: {exc}") from exc

    digest = _sha256(dest)
    expected = ref.sha256
    if sidecar.exists():
        expected = sidecar.read_text().split()[0]
    if expected is not None and digest != expected:
        quarantine = cache_dir / f"{ref.name}.quarantine"
        dest.replace(quarantine)
        raise DatasetError(
            f"checksum mismatch for {ref.name}: expected {expected}, got {digest}; "
            f"file moved to {quarantine}")
    if not sidecar.exists():
        sidecar.write_text(f"{digest}  {dest.name}\n")
    return dest
