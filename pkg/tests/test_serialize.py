"""JSON/CSV round trips and malformed-document handling."""

import numpy as np
import pytest

from cantordim import (
    CantorParams,
    InvariantError,
    IntervalSet,
    ParseError,
    construct_prefractal,
    export_intervals,
    import_intervals,
    lacunarity_bounds,
)


def triadic(stage):
    return construct_prefractal(CantorParams(2, 1 / 3, 0.0, stage))


class TestExport:
    def test_stage_zero_json(self):
        doc = export_intervals(triadic(0))
        assert '"n": 2' in doc and '"stage": 0' in doc
        assert "[0, 1]" in doc

    def test_csv_layout(self):
        doc = export_intervals(triadic(1), "csv")
        lines = doc.splitlines()
        assert lines[0] == "start,end"
        assert lines[1] == f"0,{format(1 / 3, '.17g')}"
        assert lines[2] == f"{format(1 - 1 / 3, '.17g')},1"

    def test_seventeen_digit_floats(self):
        doc = export_intervals(triadic(1))
        assert "0.33333333333333331" in doc

    def test_paramless_set_exports_nulls(self):
        bare = IntervalSet(np.array([0.25]), np.array([0.5]))
        doc = export_intervals(bare)
        assert '"n": null' in doc
        back = import_intervals(doc)
        assert back.params is None

    def test_rejects_unknown_format(self):
        with pytest.raises(Exception):
            export_intervals(triadic(0), "xml")


class TestRoundTrip:
    @pytest.mark.parametrize("format", ["json", "csv"])
    def test_bit_identical(self, format, rng):
        for _ in range(25):
            n = int(rng.integers(2, 8))
            gamma = float(rng.uniform(0.03, 1.0 / n - 1e-3))
            eps = (
                float(rng.uniform(0, 1)) * lacunarity_bounds(n, gamma).eps_max
                if n >= 4
                else 0.0
            )
            stage = int(rng.integers(0, 5))
            s = construct_prefractal(CantorParams(n, gamma, eps, stage))
            back = import_intervals(export_intervals(s, format), format)
            assert np.array_equal(back.starts, s.starts)
            assert np.array_equal(back.ends, s.ends)

    def test_json_restores_params(self):
        s = construct_prefractal(CantorParams(5, 0.1, 0.125, 3))
        back = import_intervals(export_intervals(s))
        assert back.params == s.params

    def test_bytes_input_accepted(self):
        s = triadic(2)
        back = import_intervals(export_intervals(s).encode("utf-8"))
        assert np.array_equal(back.starts, s.starts)


class TestImportErrors:
    def test_truncated_json(self):
        doc = export_intervals(triadic(2))
        with pytest.raises(ParseError):
            import_intervals(doc[: len(doc) // 2])

    def test_truncated_csv_row(self):
        with pytest.raises(ParseError) as err:
            import_intervals("start,end\n0,0.2\n0.4\n", "csv")
        assert "line 3" in str(err.value)

    def test_csv_bad_header(self):
        with pytest.raises(ParseError):
            import_intervals("a,b\n0,1\n", "csv")

    def test_csv_non_numeric(self):
        with pytest.raises(ParseError):
            import_intervals("start,end\n0,x\n", "csv")

    def test_overlapping_rows(self):
        with pytest.raises(InvariantError):
            import_intervals("start,end\n0,0.5\n0.4,0.9\n", "csv")

    def test_unsorted_rows(self):
        with pytest.raises(InvariantError):
            import_intervals("start,end\n0.5,0.6\n0,0.1\n", "csv")

    def test_out_of_unit_range(self):
        with pytest.raises(InvariantError):
            import_intervals("start,end\n0.5,1.2\n", "csv")

    def test_invalid_params_in_json(self):
        doc = '{"n": 4, "gamma": 0.5, "epsilon": 0, "stage": 1, "intervals": [[0, 0.5]]}'
        with pytest.raises(InvariantError):
            import_intervals(doc)

    def test_malformed_intervals_field(self):
        with pytest.raises(ParseError):
            import_intervals('{"intervals": [[0, 0.5, 1]]}')
