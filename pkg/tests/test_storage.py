import os
import shutil
import sys
import tempfile
import unittest

import numpy as np

# Add project root to sys.path
sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from generator import sample_gaussian_net
from models.network import NetworkDims
from phaseless import observe, sample_measurements
from storage.artifact_store import ArtifactStore
from util.errors import ConfigError


class TestArtifactStore(unittest.TestCase):
    def setUp(self):
        self.root = tempfile.mkdtemp(prefix="dpr_store_")
        self.store = ArtifactStore(self.root)
        self.net = sample_gaussian_net(NetworkDims(2, [6, 15]), seed=3)

    def tearDown(self):
        if os.path.exists(self.root):
            shutil.rmtree(self.root)

    def test_json_with_numpy_values(self):
        path = self.store.save_json("summary.json", {"x": np.arange(3.0), "n": np.int64(4), "ok": np.bool_(True)})
        self.assertTrue(os.path.exists(path))
        self.assertEqual(self.store.load_json("summary.json"), {"x": [0.0, 1.0, 2.0], "n": 4, "ok": True})
        leftovers = [f for f in os.listdir(self.root) if f.endswith(".tmp")]
        self.assertEqual(leftovers, [])

    def test_csv_header_and_rows(self):
        rows = [{"m": 10, "rate": 0.5, "flag": True}, {"m": 20, "rate": 1.0, "flag": False}]
        path = self.store.save_csv("table.csv", rows, ["m", "rate", "flag"])
        with open(path, 'r', encoding='utf-8') as f:
            lines = f.read().splitlines()
        self.assertEqual(lines, ["m,rate,flag", "10,0.5,1", "20,1.0,0"])

    def test_csv_stamp_columns(self):
        rows = [{"m": 10}, {"m": 20}]
        path = self.store.save_csv("stamped.csv", rows, ["m"], stamp={"version": "1.0", "config": "{\"seed\":1,\"m\":2}"})
        with open(path, 'r', encoding='utf-8') as f:
            lines = f.read().splitlines()
        self.assertEqual(lines[0], "m,version,config")
        self.assertEqual(lines[1], '10,1.0,"{""seed"":1,""m"":2}"')
        self.assertEqual(len(lines), 3)

    def test_overwrite_refused(self):
        store = ArtifactStore(self.root, overwrite=False)
        store.save_json("once.json", {"a": 1})
        with self.assertRaises(ConfigError):
            store.save_json("once.json", {"a": 2})
        self.assertEqual(store.load_json("once.json"), {"a": 1})

    def test_net_json_and_npz(self):
        print("\nTesting generator serialization...")
        self.store.save_net("net.json", self.net)
        npz_path = self.store.save_net_npz("net.npz", self.net)
        self.assertTrue(npz_path.endswith(".npz"))
        for restored in (self.store.load_net("net.json"), self.store.load_net_npz("net.npz")):
            self.assertEqual(restored.dims, self.net.dims)
            for a, b in zip(restored.weights, self.net.weights):
                np.testing.assert_array_equal(a, b)

    def test_ensemble_and_observation(self):
        ens = sample_measurements(8, 15, seed=1)
        self.store.save_ensemble("A.json", ens)
        np.testing.assert_array_equal(self.store.load_ensemble("A.json").A, ens.A)
        obs = observe(ens, np.ones(15))
        self.store.save_observation("b.csv", obs)
        self.assertEqual(self.store.load_csv("b.csv")[0].keys(), {"i", "b_i"})
        np.testing.assert_array_equal(self.store.load_observation("b.csv").b, obs.b)

    def test_names_stay_inside_root(self):
        path = self.store.path("../escape.json")
        self.assertEqual(os.path.dirname(path), self.root)


if __name__ == '__main__':
    unittest.main()
