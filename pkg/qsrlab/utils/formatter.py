"""
Human-readable formatting of coefficients and resonance reports.
"""

from typing import Any, Dict

from ..core.models import KineticCoefficients


def _format_value(value: float) -> str:
    return f"{value: .10g}"


def format_coefficients(coeffs: KineticCoefficients, temperature: float) -> str:
    """Aligned key/value block for one temperature."""
    header = f"Kinetic coefficients at T = {temperature:g}"
    lines = [header, "=" * len(header)]
    for key, value in coeffs.to_dict().items():
        lines.append(f"  {key:<13}{_format_value(value)}")
    return "\n".join(lines) + "\n"


def format_classification(report: Dict[str, Any]) -> str:
    """One-line summary of a resonance report dictionary."""
    parts = [f"eta={report['eta']:g}" if report.get('eta') is not None else "eta=?",
             report.get('kind') or "unclassified"]
    if report.get('peak_temperatures'):
        peaks = ", ".join(f"{t:.4g}" for t in report['peak_temperatures'])
        parts.append(f"peaks at T = {peaks}")
    if report.get('dip_temperature') is not None:
        parts.append(f"dip at T = {report['dip_temperature']:.4g}")
    if report.get('omega_R_zero_crossing') is not None:
        parts.append(f"omega_R = 0 at T = {report['omega_R_zero_crossing']:.4g}")
    return "  ".join(parts)
