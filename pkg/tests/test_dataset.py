"""CSV ingestion, extrema, and normalization properties."""

from fractions import Fraction as F

import pytest

from lukaq.dataset import (
    Column,
    ColumnSpec,
    Schema,
    bundled_normalized,
    bundled_schema,
    bundled_spec,
    bundled_table,
    column_extrema,
    load_csv,
    normalize,
    row_to_world,
    schema_from_json,
    schema_to_json,
    spec_from_json,
    spec_to_json,
    validate_spec,
)
from lukaq.errors import (
    CellParseError,
    DuplicateId,
    EmptyColumn,
    HeaderMismatch,
    InvalidSpec,
    MissingSpec,
    UnknownRow,
)

TINY_SCHEMA = Schema(
    [
        Column("id", "numeric"),
        Column("name", "text"),
        Column("speed", "numeric", variable="S"),
    ]
)

TINY_CSV = "id,name,speed\n1,alpha,250\n2,beta,300\n3,gamma,180\n"


class TestLoadCsv:
    def test_three_rows(self):
        table = load_csv(TINY_CSV, TINY_SCHEMA)
        assert len(table) == 3
        assert sorted(table.by_id) == [1, 2, 3]
        assert table.by_id[2].cells["speed"] == 300
        assert table.by_id[2].cells["name"] == "beta"

    def test_header_only(self):
        table = load_csv("id,name,speed\n", TINY_SCHEMA)
        assert len(table) == 0

    def test_header_order_insensitive(self):
        table = load_csv("speed,id,name\n7,4,delta\n", TINY_SCHEMA)
        assert table.by_id[4].cells["speed"] == 7

    def test_numeric_cell_rejected(self):
        with pytest.raises(CellParseError) as err:
            load_csv("id,name,speed\n1,alpha,abc\n", TINY_SCHEMA)
        assert err.value.row == 1
        assert err.value.column == "speed"

    def test_empty_numeric_cell_rejected(self):
        with pytest.raises(CellParseError):
            load_csv("id,name,speed\n1,alpha,\n", TINY_SCHEMA)

    def test_duplicate_id(self):
        with pytest.raises(DuplicateId):
            load_csv("id,name,speed\n1,a,10\n1,b,20\n", TINY_SCHEMA)

    def test_header_mismatch(self):
        with pytest.raises(HeaderMismatch):
            load_csv("id,name,velocity\n1,a,10\n", TINY_SCHEMA)

    def test_positional_ids_without_id_column(self):
        schema = Schema([Column("speed", "numeric", variable="S")])
        table = load_csv("speed\n10\n20\n", schema)
        assert sorted(table.by_id) == [1, 2]

    def test_decimal_cells_exact(self):
        table = load_csv("id,name,speed\n1,a,5.10\n", TINY_SCHEMA)
        assert table.by_id[1].cells["speed"] == F(51, 10)


class TestExtrema:
    def test_min_max(self):
        table = load_csv("id,name,speed\n1,a,5.10\n2,b,4.80\n3,c,6.00\n", TINY_SCHEMA)
        assert column_extrema(table, "speed") == (F("4.80"), F("6.00"))

    def test_single_value(self):
        table = load_csv("id,name,speed\n1,a,7\n", TINY_SCHEMA)
        assert column_extrema(table, "speed") == (7, 7)

    def test_empty(self):
        table = load_csv("id,name,speed\n", TINY_SCHEMA)
        with pytest.raises(EmptyColumn):
            column_extrema(table, "speed")

    def test_bundled_max_speed_ceiling(self):
        assert column_extrema(bundled_table(), "max_speed")[1] == 350


class TestNormalize:
    def test_ceiling_clamp(self):
        spec = ColumnSpec(F(0), F(250))
        assert spec.degree(F(250)) == 1
        assert spec.degree(F(300)) == 1

    def test_endpoints(self):
        spec = ColumnSpec(F(10), F(20))
        assert spec.degree(F(10)) == 0
        assert spec.degree(F(20)) == 1

    def test_reversed_acceleration_calibration(self):
        spec = ColumnSpec(F(4), F("12.8"), reversed=True)
        assert spec.degree(F("5.10")) == F(7, 8)

    def test_floor_clamp(self):
        spec = ColumnSpec(F(4), F(20))
        assert spec.degree(F("3.8")) == 0

    def test_missing_spec(self):
        table = load_csv(TINY_CSV, TINY_SCHEMA)
        with pytest.raises(MissingSpec):
            normalize(table, {})

    def test_worlds_and_display(self):
        table = load_csv(TINY_CSV, TINY_SCHEMA)
        ntable = normalize(table, {"speed": ColumnSpec(F(180), F(300))})
        assert ntable.world(1) == {"S": F(250 - 180, 120)}
        assert ntable.display[1] == {"name": "alpha"}
        assert row_to_world(ntable, 3) == {"S": F(0)}

    def test_unknown_row(self):
        table = load_csv(TINY_CSV, TINY_SCHEMA)
        ntable = normalize(table, {"speed": ColumnSpec(F(0), F(1))})
        with pytest.raises(UnknownRow):
            ntable.world(99)

    def test_invalid_bounds(self):
        with pytest.raises(InvalidSpec):
            ColumnSpec(F(5), F(5))


class TestNormalizeProperties:
    def test_random_value_spec_pairs(self, rng):
        for _ in range(500):
            lo = F(rng.randint(-50, 50), rng.randint(1, 10))
            hi = lo + F(rng.randint(1, 100), rng.randint(1, 10))
            spec = ColumnSpec(lo, hi, reversed=bool(rng.getrandbits(1)))
            v = F(rng.randint(-200, 200), rng.randint(1, 10))
            n = spec.degree(v)
            assert 0 <= n <= 1
            # clamping is idempotent: renormalizing the clamped raw image
            if not spec.reversed:
                raw_back = lo + n * (hi - lo)
                assert spec.degree(raw_back) == n

    def test_monotone_orientation(self, rng):
        for _ in range(200):
            lo = F(rng.randint(-20, 20))
            hi = lo + rng.randint(1, 40)
            plain = ColumnSpec(lo, hi)
            flipped = ColumnSpec(lo, hi, reversed=True)
            v1 = F(rng.randint(-100, 100), rng.randint(1, 8))
            v2 = v1 + F(rng.randint(0, 50), rng.randint(1, 8))
            assert plain.degree(v1) <= plain.degree(v2)
            assert flipped.degree(v1) >= flipped.degree(v2)

    def test_double_reversal_identity_in_range(self, rng):
        for _ in range(200):
            lo = F(rng.randint(-20, 20))
            hi = lo + rng.randint(1, 40)
            v = lo + (hi - lo) * F(rng.randint(0, 16), 16)
            spec = ColumnSpec(lo, hi)
            n = spec.degree(v)
            assert 1 - (1 - n) == n
            reversed_twice = 1 - ColumnSpec(lo, hi, reversed=True).degree(v)
            assert reversed_twice == n

    def test_pipeline_deterministic(self):
        spec = {"speed": ColumnSpec(F(180), F(300))}
        a = normalize(load_csv(TINY_CSV, TINY_SCHEMA), spec)
        b = normalize(load_csv(TINY_CSV, TINY_SCHEMA), spec)
        assert a.worlds == b.worlds
        assert a.row_ids == b.row_ids


class TestJsonFormats:
    def test_spec_round_trip(self):
        text = '{"speed": {"min": 4.0, "max": 12.8, "reversed": true}}'
        spec = spec_from_json(text)
        assert spec["speed"] == ColumnSpec(F(4), F("12.8"), True)
        again = spec_from_json(spec_to_json(spec))
        assert again == spec

    def test_spec_exact_decimal_parse(self):
        spec = spec_from_json('{"speed": {"min": 0.1, "max": 0.3}}')
        assert spec["speed"].minimum == F(1, 10)
        assert spec["speed"].maximum == F(3, 10)

    def test_spec_validation(self):
        with pytest.raises(InvalidSpec):
            spec_from_json('{"speed": {"min": 9, "max": 3}}')
        with pytest.raises(InvalidSpec):
            spec_from_json('{"nope": {"min": 0, "max": 1}}', TINY_SCHEMA)
        with pytest.raises(MissingSpec):
            validate_spec({}, TINY_SCHEMA)

    def test_schema_round_trip(self):
        assert schema_from_json(schema_to_json(TINY_SCHEMA)) == TINY_SCHEMA

    def test_schema_constraints(self):
        with pytest.raises(ValueError):
            Schema([Column("a", "numeric"), Column("a", "text")])
        with pytest.raises(ValueError):
            Schema([Column("a", "numeric", "V"), Column("b", "numeric", "V")])
        with pytest.raises(ValueError):
            Column("a", "text", variable="V")


class TestBundled:
    def test_schema_shape(self):
        schema = bundled_schema()
        assert len(schema.bound_columns) == 15
        assert [c.variable for c in schema.bound_columns] == [
            f"X{i}" for i in range(15)
        ]

    def test_table_loads(self):
        table = bundled_table()
        assert len(table) == 30

    def test_spec_covers_bound_columns(self):
        validate_spec(bundled_spec(), bundled_schema())

    def test_normalized_degrees_in_range(self):
        ntable = bundled_normalized()
        assert all(
            0 <= value <= 1
            for world in ntable.worlds.values()
            for value in world.values()
        )

    def test_calibration_row(self):
        # the 5.10 s car sits exactly at the 0.875 acceleration landmark
        ntable = bundled_normalized()
        assert ntable.world(12)["X11"] == F(7, 8)
