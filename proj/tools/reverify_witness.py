#!/usr/bin/env python3
# Copyright 2026 The gdsim Authors
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
"""Re-verifies a certify-nogo report from its JSON alone.

Usage: reverify_witness.py REPORT.json [SCHEMA.json]

Recomputes the inner-product distortion and the linear-extension deviation
from the serialized vectors with plain numpy, and checks them against the
reported values. With a schema argument and the jsonschema package installed,
also validates the envelope. Exits 0 when everything matches.
"""
import json
import sys

import numpy as np

TOL = 1e-12


def vec(pairs):
    return np.array([complex(re, im) for re, im in pairs])


def check_distortion(w):
    psi1, psi2, phi = vec(w["psi1"]), vec(w["psi2"]), vec(w["phi"])
    s = np.vdot(psi1, psi2)
    r1 = phi - 2 * np.vdot(psi1, phi) * psi1
    r2 = phi - 2 * np.vdot(psi2, phi) * psi2
    input_overlap = s * np.vdot(phi, phi)
    output_overlap = s * np.vdot(r1, r2)
    distortion = abs(input_overlap - output_overlap)
    ok = (
        abs(input_overlap - complex(*w["input_overlap"])) <= TOL
        and abs(output_overlap - complex(*w["output_overlap"])) <= TOL
        and abs(distortion - w["distortion"]) <= TOL
        and distortion > 1e-6
    )
    print(f"distortion witness: recomputed {distortion:.17g}, "
          f"reported {w['distortion']:.17g} -> {'ok' if ok else 'MISMATCH'}")
    return ok


def check_linear(rep):
    d = rep["dim"]
    test = vec(rep["test_input"]).reshape(d, d)
    ext = vec(rep["extension_output"])
    req = vec(rep["required_output"])
    psi = test[:, 0]  # the test input is psi (x) e0
    # Linearity forces sum_i psi_i D(e_i e0); D(e_i e0) flips only the i=0 term.
    ext_check = np.zeros((d, d), dtype=complex)
    ext_check[:, 0] = psi
    ext_check[0, 0] = -psi[0]
    # The defining equation demands psi (x) (e0 - 2 <psi|e0> psi).
    e0 = np.zeros(d, dtype=complex)
    e0[0] = 1
    reflected = e0 - 2 * np.vdot(psi, e0) * psi
    req_check = np.outer(psi, reflected)
    deviation = np.linalg.norm(ext - req)
    ok = (
        np.abs(ext_check.reshape(-1) - ext).max() <= TOL
        and np.abs(req_check.reshape(-1) - req).max() <= TOL
        and abs(deviation - rep["deviation"]) <= TOL
        and deviation > 1e-6
    )
    print(f"linear extension:   recomputed {deviation:.17g}, "
          f"reported {rep['deviation']:.17g} -> {'ok' if ok else 'MISMATCH'}")
    return ok


def main():
    if len(sys.argv) < 2:
        print(__doc__)
        return 2
    with open(sys.argv[1]) as f:
        report = json.load(f)
    if len(sys.argv) > 2:
        try:
            import jsonschema

            with open(sys.argv[2]) as f:
                jsonschema.validate(report, json.load(f))
            print("schema:             valid")
        except ImportError:
            print("schema:             skipped (jsonschema not installed)")
    ok = True
    for result in report["results"]:
        if result.get("type") == "distortion_witness":
            ok &= check_distortion(result)
        elif result.get("type") == "linear_extension":
            ok &= check_linear(result)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
