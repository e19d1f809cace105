"""Programmatic use of the scenario runner and its JSON reports.

The same machinery backs the `cl13 verify` command line; reports are
byte-identical for a fixed (config, seed).
"""

import json

from cl13 import ScenarioConfig, emit_report, run_scenario

cfg = ScenarioConfig(suite="idempotents", seed=5)
report = run_scenario(cfg)
print("== text rendering ==")
print(emit_report(report, "text"))

print("== JSON schema ==")
obj = json.loads(emit_report(report, "json"))
print("top-level keys:", sorted(obj))
print("one check row:", obj["checks"][0])
print("summary:", obj["summary"])

again = emit_report(run_scenario(ScenarioConfig(suite="idempotents", seed=5)), "json")
print("\nbyte-identical rerun:", again == emit_report(report, "json"))
