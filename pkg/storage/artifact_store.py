import csv
import io
import json
import os
import re
import tempfile
import time

import numpy as np

from models.measurement import MeasurementEnsemble, PhaselessObservation
from models.network import GeneratorNet, NetworkDims
from util.errors import ConfigError
from util.logger import logger


class ArtifactStore:
    """
    Writes experiment artifacts under one output directory.

    Every write goes through a temp file in the target directory followed by
    os.replace, so a reader never sees a half-written file.
    """

    def __init__(self, root, overwrite=True):
        self.root = root
        self.overwrite = overwrite
        self._ensure_storage()

    def _ensure_storage(self):
        os.makedirs(self.root, exist_ok=True)

    def path(self, name):
        return os.path.join(self.root, self._sanitize(name))

    def _check_target(self, file_path):
        if not self.overwrite and os.path.exists(file_path):
            raise ConfigError(f"Artifact exists and overwrite is off: {file_path}")

    # --- Atomic writes ---

    def _safe_write_text(self, file_path, text):
        """Atomic write using temporary file and rename."""
        temp_fd, temp_path = tempfile.mkstemp(dir=os.path.dirname(file_path), suffix=".tmp")
        try:
            with os.fdopen(temp_fd, 'w', encoding='utf-8', newline='') as f:
                f.write(text)
            # Windows may hold the target briefly (WinError 5)
            for attempt in range(5):
                try:
                    os.replace(temp_path, file_path)
                    break
                except PermissionError:
                    if attempt == 4:
                        raise
                    time.sleep(0.1)
        except Exception:
            if os.path.exists(temp_path):
                try:
                    os.remove(temp_path)
                except OSError:
                    pass
            raise

    def save_json(self, name, data):
        file_path = self.path(name)
        self._check_target(file_path)
        self._safe_write_text(file_path, json.dumps(_plain(data), indent=4) + "\n")
        logger.debug(f"Wrote {file_path}")
        return file_path

    def load_json(self, name):
        with open(self.path(name), 'r', encoding='utf-8') as f:
            return json.load(f)

    def save_csv(self, name, rows, columns, stamp=None):
        """
        Comma-delimited UTF-8 with a mandatory header row.

        `stamp` maps extra column names to values repeated on every row.
        """
        file_path = self.path(name)
        self._check_target(file_path)
        stamp = stamp or {}
        fieldnames = list(columns) + [k for k in stamp if k not in columns]
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=fieldnames, lineterminator="\n", extrasaction="ignore")
        writer.writeheader()
        for row in rows:
            cells = {k: _cell(row.get(k)) for k in columns}
            cells.update({k: _cell(v) for k, v in stamp.items() if k not in columns})
            writer.writerow(cells)
        self._safe_write_text(file_path, buf.getvalue())
        logger.debug(f"Wrote {len(rows)} rows to {file_path}")
        return file_path

    def load_csv(self, name):
        with open(self.path(name), 'r', encoding='utf-8', newline='') as f:
            return list(csv.DictReader(f))

    # --- Domain objects ---

    def save_net(self, name, net):
        return self.save_json(name, net.to_dict())

    def load_net(self, name):
        return GeneratorNet.from_dict(self.load_json(name))

    def save_net_npz(self, name, net):
        file_path = self.path(name)
        self._check_target(file_path)
        arrays = {f"W{i + 1}": W for i, W in enumerate(net.weights)}
        np.savez(file_path, k=net.k, layer_dims=np.array(net.dims.layer_dims), **arrays)
        # np.savez appends .npz when missing
        return file_path if file_path.endswith(".npz") else file_path + ".npz"

    def load_net_npz(self, name):
        file_path = self.path(name)
        if not file_path.endswith(".npz"):
            file_path += ".npz"
        with np.load(file_path) as data:
            dims = NetworkDims(int(data["k"]), data["layer_dims"].tolist())
            weights = [data[f"W{i + 1}"] for i in range(dims.depth)]
        return GeneratorNet(dims, weights)

    def save_ensemble(self, name, ensemble):
        return self.save_json(name, ensemble.to_dict())

    def load_ensemble(self, name):
        return MeasurementEnsemble.from_dict(self.load_json(name))

    def save_observation(self, name, obs):
        rows = [{"i": i, "b_i": float(v)} for i, v in enumerate(obs.b)]
        return self.save_csv(name, rows, ["i", "b_i"])

    def load_observation(self, name):
        rows = self.load_csv(name)
        b = np.array([float(r["b_i"]) for r in rows])
        # Noise is not stored with the observation
        return PhaselessObservation(b, np.zeros_like(b))

    def _sanitize(self, name):
        """Sanitize string to be safe for filenames."""
        s = str(name).strip()
        if ".." in s:
            s = s.replace("..", "__")
        s = "".join(c for c in s if c.isprintable())
        return re.sub(r'[<>:"/\\|?*]', '_', s).strip()


def _cell(value):
    if isinstance(value, (bool, np.bool_)):
        return int(value)
    if isinstance(value, (np.floating, float)):
        return repr(float(value))
    if isinstance(value, np.integer):
        return int(value)
    return value


def _plain(data):
    """Convert numpy scalars and arrays to JSON-native values."""
    if isinstance(data, dict):
        return {str(k): _plain(v) for k, v in data.items()}
    if isinstance(data, (list, tuple)):
        return [_plain(v) for v in data]
    if isinstance(data, np.ndarray):
        return _plain(data.tolist())
    if isinstance(data, np.bool_):
        return bool(data)
    if isinstance(data, np.integer):
        return int(data)
    if isinstance(data, np.floating):
        return float(data)
    return data
