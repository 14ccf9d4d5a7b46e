# Copyright 2026 The qgeom Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Validate CLI scene output and the golden scenes against docs/scene_schema.json."""

import json
import pathlib
import subprocess
import sys

import jsonschema

cli, root = sys.argv[1], pathlib.Path(sys.argv[2])
schema = json.loads((root / "docs" / "scene_schema.json").read_text())
data = root / "tests" / "data"

docs = [json.loads(p.read_text()) for p in sorted((root / "tests" / "golden").glob("*.json"))]
for args in (["--in", str(data / "up.txt")],
             ["--in", str(data / "worked_example.txt"), "--basis", str(data / "hadamard.txt")],
             ["--in", str(data / "mixed_qutrit.txt")]):
    out = subprocess.run([cli, "scene", *args], check=True, capture_output=True, text=True).stdout
    docs.append(json.loads(out))

for doc in docs:
    jsonschema.validate(doc, schema)
print(f"{len(docs)} scene documents valid")
