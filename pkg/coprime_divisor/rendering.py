from typing import Any

import orjson
from jinja2 import Environment, PackageLoader, StrictUndefined
from pydantic import BaseModel

templates = Environment(
    loader=PackageLoader('coprime_divisor', 'templates'),
    autoescape=False,  # noqa: S701 - DOT and plain text, never HTML
    undefined=StrictUndefined,
    trim_blocks=True,
    lstrip_blocks=True,
    keep_trailing_newline=True,
)

JSON_OPTIONS = orjson.OPT_SORT_KEYS | orjson.OPT_INDENT_2 | orjson.OPT_NON_STR_KEYS


def _default(value: object) -> Any:  # noqa: ANN401
    if isinstance(value, BaseModel):
        return value.model_dump(mode='json')
    if isinstance(value, frozenset | set):
        return sorted(value)  # pyright: ignore[reportUnknownArgumentType, reportUnknownVariableType]
    raise TypeError


def _dot_id(label: str) -> str:
    escaped = label.replace('\\', '\\\\').replace('"', '\\"')
    return f'"{escaped}"'


templates.filters['dot_id'] = _dot_id


def render_template(template_name: str, **context: object) -> str:
    """Render one of the package templates."""
    return templates.get_template(template_name).render(**context)


def dumps_json(payload: object) -> bytes:
    """Serialize to deterministic, indented JSON with sorted keys."""
    return orjson.dumps(payload, default=_default, option=JSON_OPTIONS)
