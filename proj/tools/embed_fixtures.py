#!/usr/bin/env python3
"""Regenerates include/gapsched/fixture_data.hpp from fixtures/*.json|csv."""
import pathlib

root = pathlib.Path(__file__).resolve().parent.parent
files = sorted(p for p in (root / "fixtures").iterdir() if p.suffix in (".json", ".csv"))
out = [
    "// Generated by tools/embed_fixtures.py from fixtures/. Do not edit.",
    "",
    "#ifndef GAPSCHED_FIXTURE_DATA_HPP_",
    "#define GAPSCHED_FIXTURE_DATA_HPP_",
    "",
    "#include <array>",
    "#include <string_view>",
    "#include <utility>",
    "",
    "namespace gapsched::fixture_data {",
    "",
    f"inline constexpr std::array<std::pair<std::string_view, std::string_view>, {len(files)}> kFiles{{{{",
]
for p in files:
    text = p.read_text(encoding="utf-8")
    assert ')fx"' not in text
    out.append(f'    {{"{p.name}", R"fx({text})fx"}},')
out += ["}};", "", "}  // namespace gapsched::fixture_data", "", "#endif  // GAPSCHED_FIXTURE_DATA_HPP_", ""]
(root / "include" / "gapsched" / "fixture_data.hpp").write_text("\n".join(out), encoding="utf-8")
