#!/usr/bin/env python3
"""
Jinja2 rendering of text reports.
"""

from pathlib import Path
from typing import Any, Dict, Optional

from jinja2 import Environment, FileSystemLoader

TEMPLATE_DIR = Path(__file__).parent / 'templates'
VALIDATION_TEMPLATE = TEMPLATE_DIR / 'validation_report.j2'


def render_jinja2_template(template_path: str, context: Dict[str, Any]) -> str:
    """Load and render a Jinja2 template.

    Raises:
        FileNotFoundError: If template file doesn't exist
        jinja2.TemplateError: If template has syntax errors
    """
    template_file = Path(template_path)
    if not template_file.exists():
        raise FileNotFoundError(f"Template file not found: {template_path}")

    env = Environment(
        loader=FileSystemLoader(template_file.parent),
        autoescape=False,
        trim_blocks=True,
        lstrip_blocks=True,
    )
    template = env.get_template(template_file.name)
    return template.render(**context)


def render_validation_report(report: Dict[str, Any],
                             template_path: Optional[str] = None) -> str:
    """Render a validation report dictionary with the built-in or a custom template."""
    return render_jinja2_template(template_path or str(VALIDATION_TEMPLATE), report)
