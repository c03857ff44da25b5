"""Tests for artifact writers and report formatting."""

import json

from qsrlab.core.models import KineticCoefficients
from qsrlab.utils.artifacts import emit, format_float, render_csv, render_json
from qsrlab.utils.formatter import format_classification, format_coefficients
from qsrlab.utils.rendering import render_validation_report


class TestArtifacts:
    """CSV and JSON rendering."""

    def test_format_float(self):
        """Floats keep 17 significant digits."""
        assert format_float(0.1) == '0.10000000000000001'
        assert format_float(float('nan')) == 'nan'
        assert format_float(2.0) == '2'

    def test_render_csv_with_footer(self):
        """Header, rows and # footer lines."""
        text = render_csv(('a', 'b'), [(0.5, 1), (float('nan'), 2)], footer=['{"x": 1}'])
        assert text == 'a,b\n0.5,1\nnan,2\n# {"x": 1}\n'

    def test_render_json_nan_as_null(self):
        """NaN becomes null."""
        data = json.loads(render_json({'value': float('nan'), 'list': [1.0, float('nan')]}))
        assert data == {'value': None, 'list': [1.0, None]}

    def test_emit_to_directory(self, tmp_path):
        """Files are created together with missing directories."""
        target = emit('hello\n', str(tmp_path / 'out'), 'x.txt')
        assert target.read_text(encoding='utf-8') == 'hello\n'

    def test_emit_to_stdout(self, capsys):
        """Without a directory the text goes to stdout."""
        assert emit('data\n', None, 'x.txt') is None
        assert capsys.readouterr().out == 'data\n'


class TestFormatter:
    """Human-readable output."""

    def test_format_coefficients(self):
        """Every coefficient is listed."""
        coeffs = KineticCoefficients(0.1, 0.2, 0.3, 0.7, 1e-12)
        text = format_coefficients(coeffs, 0.3)
        assert text.startswith('Kinetic coefficients at T = 0.3')
        for key in ('gamma', 'gamma_beta', 'sigma_beta', 'omega_R_beta', 'quad_error'):
            assert key in text

    def test_format_classification(self):
        """Peaks, dip and crossing are included when present."""
        line = format_classification({'eta': 0.65, 'kind': 'AntiResonance',
                                      'peak_temperatures': [0.12, 0.8],
                                      'dip_temperature': 0.3,
                                      'omega_R_zero_crossing': 0.31})
        assert line.startswith('eta=0.65  AntiResonance')
        assert 'dip at T = 0.3' in line

    def test_format_unclassified(self):
        """A report without a kind is shown as unclassified."""
        line = format_classification({'eta': 3.5, 'kind': None, 'peak_temperatures': [],
                                      'dip_temperature': None,
                                      'omega_R_zero_crossing': None})
        assert line == 'eta=3.5  unclassified'


class TestValidationTemplate:
    """Jinja2 validation report."""

    def test_pass_and_fail_lines(self):
        """Each check gets a PASS/FAIL line and a summary."""
        report = {
            'passed': False,
            'tol': 1e-9,
            'seed': 1,
            'checks': [
                {'name': 'closed_form_ohmic', 'passed': True, 'deviation': 1e-12,
                 'threshold': 1e-8, 'detail': ''},
                {'name': 'exclusion_oracle', 'passed': False, 'deviation': None,
                 'threshold': 1e-7, 'detail': 'quadrature failure'},
            ],
        }
        text = render_validation_report(report)
        assert '[PASS] closed_form_ohmic' in text
        assert '[FAIL] exclusion_oracle' in text
        assert 'quadrature failure' in text
        assert '1 of 2 checks failed.' in text

    def test_custom_template(self, tmp_path):
        """A user template replaces the built-in one."""
        template = tmp_path / 'short.j2'
        template.write_text('{{ checks | length }} checks', encoding='utf-8')
        text = render_validation_report({'checks': [{}, {}], 'passed': True},
                                        str(template))
        assert text == '2 checks'
