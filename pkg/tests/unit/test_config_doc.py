"""Tests for the JSON run document."""

import json

import pytest

from src.supra_sim.domain.exceptions import ConfigError
from src.supra_sim.domain.models.driving import SignalKind
from src.supra_sim.domain.models.experiments import SolverKind
from src.supra_sim.domain.models.medium import PotentialName
from src.supra_sim.presentation.schemas.config_doc import (
    Mode,
    effective_config_json,
    load_config,
    parse_config,
)


class TestParseConfig:
    """Tests for parse_config."""

    def test_empty_document(self):
        """Test that '{}' yields the documented defaults."""
        doc = parse_config("{}")
        assert doc.mode is Mode.CONTINUUM
        assert doc.solver is SolverKind.AUTO
        assert doc.grid.n == 8
        assert doc.time.dt == 0.05
        assert doc.time.steps == 100
        assert doc.medium.potential.kind is PotentialName.SINE_GORDON
        assert doc.driving.kind is SignalKind.RAMPED_SINE
        assert doc.sweep is None

    def test_negative_beta(self):
        """Test that the error names the offending path."""
        with pytest.raises(ConfigError) as exc_info:
            parse_config('{"medium": {"beta": -1.0}}')
        assert any(e.startswith("medium.beta") for e in exc_info.value.errors)
        assert exc_info.value.exit_code == 3

    def test_every_error_listed(self):
        """Test that independent field errors are all reported."""
        with pytest.raises(ConfigError) as exc_info:
            parse_config('{"medium": {"beta": -1.0}, "grid": {"n": 0}, "colour": "red"}')
        assert len(exc_info.value.errors) == 3

    def test_bits_with_ramped_sine(self):
        """Test the cross-field rule between kind and bits."""
        with pytest.raises(ConfigError) as exc_info:
            parse_config('{"driving": {"bits": [1, 0]}}')
        assert exc_info.value.errors == ["driving.bits: only valid with kind=bit_sequence"]

    def test_bit_sequence_needs_period(self):
        """Test that bit_sequence without period and amp_factor is rejected."""
        with pytest.raises(ConfigError) as exc_info:
            parse_config('{"driving": {"kind": "bit_sequence", "bits": [1]}}')
        assert len(exc_info.value.errors) == 2

    def test_lattice_needs_unit_steps(self):
        """Test that lattice mode refuses a continuum grid."""
        with pytest.raises(ConfigError, match="lattice"):
            parse_config('{"mode": "lattice", "grid": {"n": 4, "dx": 0.5}}')

    def test_sweep_amplitudes_increasing(self):
        """Test that a non-increasing sweep list is rejected."""
        with pytest.raises(ConfigError, match="strictly increasing"):
            parse_config('{"sweep": {"amplitudes": [1.0, 0.5]}}')

    def test_sweep_outside_band_gap(self):
        """Test that a sweep frequency above the gap edge is rejected."""
        with pytest.raises(ConfigError) as exc_info:
            parse_config('{"sweep": {"amplitudes": [1.0], "omega": 1.2}}')
        assert exc_info.value.errors[0].startswith("sweep")

    def test_json_syntax_error(self):
        """Test that syntax errors carry line and column."""
        with pytest.raises(ConfigError, match=r"run\.json:2:\d+: invalid JSON"):
            parse_config('{\n  "mode": }', "run.json")

    def test_top_level_array(self):
        """Test that a JSON array is not a document."""
        with pytest.raises(ConfigError, match="JSON object"):
            parse_config("[]")

    def test_landau_ginzburg_lambda(self):
        """Test the lambda alias."""
        doc = parse_config(
            '{"medium": {"potential": {"kind": "landau_ginzburg", "lambda": 0.5}}}'
        )
        assert doc.medium.potential.lam == 0.5


class TestEffectiveConfig:
    """Tests for effective_config_json."""

    def test_echo_reparses(self):
        """Test that the echo loads back to the same document."""
        doc = parse_config(
            json.dumps(
                {
                    "medium": {"beta": 0.1, "potential": {"kind": "landau_ginzburg", "lambda": 2}},
                    "sweep": {"amplitudes": [0.5, 1.0]},
                    "radial": {"outer_radius": 1.0},
                }
            )
        )
        echo = effective_config_json(doc)
        assert parse_config(echo) == doc
        assert '"lambda": 2.0' in echo


class TestSpecs:
    """Tests for the spec builders."""

    def test_missing_sweep_section(self):
        """Test that the sweep command needs its section."""
        with pytest.raises(ConfigError, match="sweep"):
            parse_config("{}").sweep_spec()

    def test_transmit_needs_bits(self):
        """Test that transmit needs a bit_sequence driving."""
        with pytest.raises(ConfigError, match="bit_sequence"):
            parse_config("{}").bit_spec()

    def test_sweep_defaults_to_driving_frequency(self):
        """Test that omega falls back to driving.frequency."""
        doc = parse_config('{"driving": {"frequency": 0.8}, "sweep": {"amplitudes": [1.0]}}')
        assert doc.sweep_spec().omega == 0.8

    def test_radial_nodes_from_radius(self):
        """Test that m_nodes is derived from outer_radius."""
        doc = parse_config('{"radial": {"outer_radius": 6.0}}')
        params = doc.radial_params()
        assert params.m_nodes == 298
        assert params.outer_radius == pytest.approx(6.0)
        assert doc.radial_dt() == 0.02


class TestLoadConfig:
    """Tests for load_config."""

    def test_missing_file(self, tmp_path):
        """Test that an unreadable file is a configuration error."""
        with pytest.raises(ConfigError, match="Cannot read"):
            load_config(tmp_path / "absent.json")

    def test_reads_file(self, tmp_path):
        """Test loading a document from disk."""
        path = tmp_path / "run.json"
        path.write_text('{"grid": {"n": 3}}', encoding="utf-8")
        assert load_config(path).grid.n == 3
