"""Reports produced by the command line: a structured-text document and a JSON record.

Both are deterministic for identical parameters. Timing is kept on the
`Report` object but only printed when asked for, so repeated runs write
byte-identical files.
"""

from dataclasses import dataclass, field
from fractions import Fraction
import json
from pathlib import Path

from beartype import beartype
from jinja2 import Environment, FileSystemLoader
import jsonschema
from tabulate import tabulate

from parkext.characters.symfunc import GradedSymFunc
from parkext.utils.constants import EXIT_FAILED, EXIT_INCONCLUSIVE, EXIT_OK
from parkext.utils.core import hash_dict

__all__ = ["Verdict", "Report", "load_schema", "write_report"]

template_dir = Path(__file__).parent.parent / "templates"
schema_file = Path(__file__).parent.parent / "json" / "report_schema.json"

env = Environment(
    loader=FileSystemLoader(str(template_dir)),
    autoescape=False,
    trim_blocks=True,
    lstrip_blocks=True,
    keep_trailing_newline=True,
)


def load_schema() -> dict:
    """the JSON schema every report record is validated against"""
    with open(schema_file, "r") as file:
        return json.load(file)


def _plain(value):
    """JSON-friendly form of numbers, partitions and nested containers"""
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else str(value)
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return value


@dataclass
class Verdict:
    """One named check. `passed=None` marks an informational entry."""

    name: str
    passed: bool | None
    value: str = ""

    def __post_init__(self):
        self.value = str(self.value)


@dataclass
class Report:
    """Everything one CLI run produced.

    Attributes:
        command: subcommand name
        parameters: the effective parameters, in display order
        verdicts: named results
        tables: name -> (headers, rows)
        graded: the graded symmetric function a `grfrob` run computed
        inconclusive: a search ran out of budget before reaching a verdict
        elapsed: wall time in seconds
    """

    command: str
    parameters: dict = field(default_factory=dict)
    verdicts: list[Verdict] = field(default_factory=list)
    tables: dict[str, tuple[list[str], list[list]]] = field(default_factory=dict)
    graded: GradedSymFunc | None = None
    inconclusive: bool = False
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return all(v.passed is not False for v in self.verdicts)

    @property
    def exit_code(self) -> int:
        if self.inconclusive:
            return EXIT_INCONCLUSIVE
        return EXIT_OK if self.passed else EXIT_FAILED

    def add(self, name: str, passed: bool | None, value="") -> None:
        self.verdicts.append(Verdict(name=name, passed=passed, value=str(value)))

    def extend(self, verdicts) -> None:
        self.verdicts.extend(verdicts)

    def terms(self) -> list[dict]:
        if self.graded is None:
            return []
        return [
            {"partition": ",".join(str(p) for p in lam), "coeff": _plain(c), "degree": k}
            for k, lam, c in self.graded.terms()
        ]

    def to_record(self) -> dict:
        """the machine-readable record, validated and with its digest filled in

        Raises:
            jsonschema.ValidationError: the record does not match the schema
        """
        record = {
            "command": self.command,
            "parameters": _plain(self.parameters),
            "basis": self.graded.basis if self.graded is not None else None,
            "terms": self.terms(),
            "verdicts": [
                {"name": v.name, "passed": v.passed, "value": v.value} for v in self.verdicts
            ],
            "tables": {
                name: {"headers": list(headers), "rows": _plain(rows)}
                for name, (headers, rows) in self.tables.items()
            },
            "passed": self.passed,
            "inconclusive": self.inconclusive,
        }
        record["digest"] = hash_dict(record)
        jsonschema.validate(record, load_schema())
        return record

    def render(self, *, timing: bool = False) -> str:
        """the structured-text document"""
        record = self.to_record()
        parameters = dict(self.parameters)
        if timing:
            parameters["elapsed"] = f"{self.elapsed:.3f}s"
        tables = {
            name: tabulate(_plain(rows), headers=headers, tablefmt="simple")
            for name, (headers, rows) in self.tables.items()
        }
        verdicts = ""
        if self.verdicts:
            marks = {True: "ok", False: "FAILED", None: "info"}
            verdicts = tabulate(
                [[v.name, marks[v.passed], v.value] for v in self.verdicts],
                headers=["check", "status", "value"],
                tablefmt="simple",
            )
        template = env.get_template("report.txt.j2")
        return template.render(
            command=self.command,
            parameters=parameters,
            expression=self.graded.to_string() if self.graded is not None else "",
            tables=tables,
            verdicts=verdicts,
            passed=self.passed,
            inconclusive=self.inconclusive,
            digest=record["digest"],
        )


@beartype
def write_report(
    report: Report,
    *,
    output: str | None = None,
    json_path: str | None = None,
    timing: bool = False,
) -> str:
    """Render the report, write the requested files, and return the text."""
    text = report.render(timing=timing)
    if output:
        Path(output).write_text(text)
    if json_path:
        Path(json_path).write_text(json.dumps(report.to_record(), indent=2) + "\n")
    return text
