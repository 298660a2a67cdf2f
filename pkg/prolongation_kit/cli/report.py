from __future__ import annotations

import json
from importlib import metadata

from pydantic import BaseModel, Field

from prolongation_kit.settings.constants import ReportFormat, Status

TOOL_NAME = "prolongation-kit"


def tool_version() -> str:
    try:
        return metadata.version(TOOL_NAME)
    except metadata.PackageNotFoundError:
        return "0.1.0"


class Entry(BaseModel):
    key: str
    value: str
    status: Status = Status.INFO


class Section(BaseModel):
    name: str
    status: Status = Status.INFO
    entries: list[Entry] = Field(default_factory=list)

    def add(self, key: str, value: object, status: Status = Status.INFO) -> "Section":
        self.entries.append(Entry(key=key, value=str(value), status=status))
        if status == Status.FAIL:
            self.status = Status.FAIL
        return self

    def lines(self, key: str, text: str) -> "Section":
        for number, line in enumerate(str(text).splitlines(), start=1):
            self.add(f"{key}[{number}]", line)
        return self


class Report(BaseModel):
    version: str = Field(default_factory=tool_version)
    command: str = ""
    config: dict[str, str] = Field(default_factory=dict)
    sections: list[Section] = Field(default_factory=list)

    def section(self, name: str, status: Status = Status.INFO) -> Section:
        section = Section(name=name, status=status)
        self.sections.append(section)
        return section

    @property
    def failed(self) -> bool:
        return any(s.status == Status.FAIL for s in self.sections)


def _text(report: Report) -> str:
    lines = [f"# {TOOL_NAME} {report.version}", f"# command: {report.command}"]
    for key in sorted(report.config):
        lines.append(f"# {key} = {report.config[key]}")
    for section in report.sections:
        lines.append("")
        lines.append(f"[{section.status.value}] {section.name}")
        for entry in section.entries:
            tag = "" if entry.status == Status.INFO else f" [{entry.status.value}]"
            lines.append(f"  {entry.key}: {entry.value}{tag}")
    return "\n".join(lines) + "\n"


def emit_report(report: Report, fmt: ReportFormat | str = ReportFormat.TEXT) -> bytes:
    if ReportFormat(fmt) == ReportFormat.JSON:
        text = json.dumps(report.model_dump(mode="json"), sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    else:
        text = _text(report)
    return text.encode("utf-8")
