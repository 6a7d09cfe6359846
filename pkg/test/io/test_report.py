# SPDX-FileCopyrightText: 2025 Battelle Memorial Institute
# SPDX-License-Identifier: BSD-2-Clause
import csv
import io
import json

import pytest

from splitline.interp import interp_table
from splitline.io import TABLE_COLUMNS, report_json, table_csv, table_to_dict


@pytest.fixture(scope="module")
def table():
    return interp_table(4, 3, range(1, 41))


@pytest.mark.unit
class TestReportJson:
    def test_header_first(self):
        document = json.loads(report_json("fan", {"predicted": [6, 6, 6]}))
        assert list(document) == ["schema_version", "kind", "predicted"]
        assert document["kind"] == "fan"


@pytest.mark.unit
class TestTableOutput:
    def test_csv_header(self, table):
        assert table_csv(table).splitlines()[0] == (
            "n,d,e,q_max,point_minimal,accessible,e0,interpolating"
        )
        assert TABLE_COLUMNS[-1] == "interpolating"

    def test_csv_rows(self, table):
        rows = list(csv.DictReader(io.StringIO(table_csv(table))))
        assert len(rows) == 40
        assert rows[3] == {
            "n": "4",
            "d": "3",
            "e": "4",
            "q_max": "4",
            "point_minimal": "1",
            "accessible": "0",
            "e0": "",
            "interpolating": "0",
        }
        accessible = [int(row["e"]) for row in rows if row["accessible"] == "1"]
        assert all(e % 3 == 2 for e in accessible)

    def test_dict(self, table):
        payload = table_to_dict(table)
        assert payload["accessible_residues"] == [2, 5]
        assert payload["expected_interpolating_class_count"] == "1"
        assert payload["rows"][4]["e0"] == 2
        assert json.loads(json.dumps(payload)) == payload
